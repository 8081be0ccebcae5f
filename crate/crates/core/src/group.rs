//! Monomial matrix groups: the full group of n x n monomial matrices with
//! m-th-root-of-unity entries, the reflection groups `G(m,p,n)`, their mystic
//! counterparts `mu(G(m,p,n))`, and the diagonal torus `T(m,p,n)`.
//!
//! An element is stored as `(perm, exps)` meaning "diagonal first, then
//! permutation": it acts on the basis `x_0..x_{n-1}` by
//! `g(x_i) = zeta_m^{exps[i]} * x_{perm[i]}`. All indices in code are
//! 0-based; the text syntax (`s(1,2;e)` etc.) is 1-based and converted at the
//! parsing/printing boundary.

use crate::linalg::Matrix;
use crate::scalar::{Ctx, CtxExt, CycloScalar};
use std::collections::HashMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialMatrix {
    m: u32,
    perm: Vec<u16>,
    exps: Vec<u32>,
}

impl MonomialMatrix {
    pub fn identity(m: u32, n: usize) -> Self {
        MonomialMatrix {
            m,
            perm: (0..n as u16).collect(),
            exps: vec![0; n],
        }
    }

    pub fn new(m: u32, perm: Vec<u16>, exps: Vec<u32>) -> Self {
        let n = perm.len();
        assert_eq!(exps.len(), n);
        let mut seen = vec![false; n];
        for &p in &perm {
            assert!((p as usize) < n && !seen[p as usize], "not a permutation");
            seen[p as usize] = true;
        }
        let exps = exps.iter().map(|e| e % m).collect();
        MonomialMatrix { m, perm, exps }
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn perm(&self) -> &[u16] {
        &self.perm
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    /// `s_{ij}^{(eps)}` with `eps = zeta_m^e`: swaps `x_i -> eps^{-1} x_j`,
    /// `x_j -> eps x_i`.
    pub fn refl_s(m: u32, n: usize, i: usize, j: usize, e: i64) -> Self {
        assert!(i != j && i < n && j < n, "s_ij needs distinct indices");
        let mut g = Self::identity(m, n);
        g.perm[i] = j as u16;
        g.perm[j] = i as u16;
        g.exps[i] = (-e).rem_euclid(m as i64) as u32;
        g.exps[j] = e.rem_euclid(m as i64) as u32;
        g
    }

    /// `t_i^{(eps)}` with `eps = zeta_m^e`: scales `x_i` by `eps`.
    pub fn diag_t(m: u32, n: usize, i: usize, e: i64) -> Self {
        assert!(i < n);
        let mut g = Self::identity(m, n);
        g.exps[i] = e.rem_euclid(m as i64) as u32;
        g
    }

    /// `sigma_{ij}^{(eps)}` with `eps = zeta_m^e`: `x_i -> eps^{-1} x_j`,
    /// `x_j -> -eps x_i`. Requires even `m` so that `-1` is an m-th root.
    pub fn mystic_sigma(m: u32, n: usize, i: usize, j: usize, e: i64) -> Self {
        assert!(i != j && i < n && j < n, "sigma_ij needs distinct indices");
        assert!(m % 2 == 0, "sigma generators need even m");
        let mut g = Self::identity(m, n);
        g.perm[i] = j as u16;
        g.perm[j] = i as u16;
        g.exps[i] = (-e).rem_euclid(m as i64) as u32;
        g.exps[j] = (e + m as i64 / 2).rem_euclid(m as i64) as u32;
        g
    }

    /// `t_i := t_i^{(-1)}`, the generators of the 2-torus `T(2,1,n)` inside an
    /// even-m group.
    pub fn t_minus_one(m: u32, n: usize, i: usize) -> Self {
        assert!(m % 2 == 0);
        Self::diag_t(m, n, i, m as i64 / 2)
    }

    /// `(self . other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m, "mixed root orders");
        assert_eq!(self.n(), other.n(), "mixed sizes");
        let n = self.n();
        let mut perm = vec![0u16; n];
        let mut exps = vec![0u32; n];
        for i in 0..n {
            let mid = other.perm[i] as usize;
            perm[i] = self.perm[mid];
            exps[i] = (other.exps[i] + self.exps[mid]) % self.m;
        }
        MonomialMatrix { m: self.m, perm, exps }
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut perm = vec![0u16; n];
        let mut exps = vec![0u32; n];
        for i in 0..n {
            let d = self.perm[i] as usize;
            perm[d] = i as u16;
            exps[d] = (self.m - self.exps[i]) % self.m;
        }
        MonomialMatrix { m: self.m, perm, exps }
    }

    pub fn is_identity(&self) -> bool {
        self.exps.iter().all(|&e| e == 0) && self.perm.iter().enumerate().all(|(i, &p)| p as usize == i)
    }

    pub fn is_diagonal(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| p as usize == i)
    }

    /// `g(x_i) = zeta_m^e x_j`; returns `(j, e)`.
    pub fn act_on_x(&self, i: usize) -> (usize, u32) {
        (self.perm[i] as usize, self.exps[i])
    }

    /// Dual action on `y_i`, fixed by `<g(y_a), g(x_b)> = <y_a, x_b>`:
    /// `g(y_i) = zeta_m^{-e_i} y_{perm[i]}`.
    pub fn act_on_y(&self, i: usize) -> (usize, u32) {
        (self.perm[i] as usize, (self.m - self.exps[i]) % self.m)
    }

    pub fn act_on_x_scalar(&self, ctx: &Ctx, i: usize) -> (usize, CycloScalar) {
        let (j, e) = self.act_on_x(i);
        (j, ctx.root_of_order(self.m, e as i64))
    }

    pub fn act_on_y_scalar(&self, ctx: &Ctx, i: usize) -> (usize, CycloScalar) {
        let (j, e) = self.act_on_y(i);
        (j, ctx.root_of_order(self.m, e as i64))
    }

    pub fn sum_exps(&self) -> u32 {
        self.exps.iter().sum::<u32>() % self.m
    }

    /// Parity of the permutation part (true = odd).
    pub fn perm_odd(&self) -> bool {
        let mut inv = 0usize;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.perm[i] > self.perm[j] {
                    inv += 1;
                }
            }
        }
        inv % 2 == 1
    }

    /// Exact determinant `sign(perm) * zeta_m^{sum exps}`.
    pub fn det(&self, ctx: &Ctx) -> CycloScalar {
        let z = ctx.root_of_order(self.m, self.sum_exps() as i64);
        if self.perm_odd() {
            z.neg()
        } else {
            z
        }
    }

    /// The represented matrix over `Q(zeta_m)`: column `i` holds
    /// `zeta^{exps[i]}` in row `perm[i]`.
    pub fn to_matrix(&self, ctx: &Ctx) -> Matrix {
        let n = self.n();
        let mut mat = Matrix::zero(ctx, n, n);
        for i in 0..n {
            let (j, c) = self.act_on_x_scalar(ctx, i);
            *mat.at_mut(j, i) = c;
        }
        mat
    }

    /// Multiplicative order.
    pub fn order(&self) -> usize {
        let mut k = 1;
        let mut acc = self.clone();
        while !acc.is_identity() {
            acc = acc.compose(self);
            k += 1;
            assert!(k <= 10_000, "order runaway");
        }
        k
    }

    /// Cycle type of the permutation part, as a weakly decreasing partition.
    pub fn cycle_type(&self) -> Vec<u32> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for i in 0..n {
            if seen[i] {
                continue;
            }
            let mut len = 0u32;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = self.perm[j] as usize;
                len += 1;
            }
            cycles.push(len);
        }
        cycles.sort_unstable_by(|a, b| b.cmp(a));
        cycles
    }

    /// Canonical token in the text element syntax (1-based), e.g.
    /// `"s(1,2;0)*t(1;1)"`; the identity is `"1"`.
    pub fn token(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        // decompose the permutation into adjacent transpositions via bubble sort:
        // if w = s_{a_1}...s_{a_k} sorts one-line notation, then the word below
        // composes back to w.
        let mut line: Vec<u16> = self.perm.clone();
        let mut swaps: Vec<usize> = Vec::new();
        loop {
            let mut done = true;
            for k in 0..line.len().saturating_sub(1) {
                if line[k] > line[k + 1] {
                    line.swap(k, k + 1);
                    swaps.push(k);
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        for &k in swaps.iter().rev() {
            parts.push(format!("s({},{};0)", k + 1, k + 2));
        }
        for (i, &e) in self.exps.iter().enumerate() {
            if e != 0 {
                parts.push(format!("t({};{})", i + 1, e));
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Debug for MonomialMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.token())
    }
}

impl fmt::Display for MonomialMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.token())
    }
}

// ---------------------------------------------------------------------------
// Group specifications
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flavor {
    /// `G(m,p,n)`: the product of all nonzero entries is an (m/p)-th root.
    Reflection,
    /// `mu(G(m,p,n))`: the determinant is an (m/p)-th root.
    Mystic,
    /// Diagonal subgroup `T(m,p,n)`.
    Torus,
    /// All monomial matrices with m-th-root entries (= `G(m,1,n)`).
    FullMonomial,
    /// Permutation matrices only.
    Symmetric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub struct GroupSpec {
    pub m: u32,
    pub p: u32,
    pub n: usize,
    pub flavor: Flavor,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("group order {order} exceeds cap {cap}")]
    CapExceeded { order: u64, cap: u64 },
}

pub const DEFAULT_GROUP_CAP: u64 = 10_000;

impl GroupSpec {
    pub fn new(m: u32, p: u32, n: usize, flavor: Flavor) -> Self {
        assert!(m >= 1 && p >= 1 && m % p == 0, "p must divide m");
        assert!(n >= 1);
        GroupSpec { m, p, n, flavor }
    }

    pub fn reflection(m: u32, p: u32, n: usize) -> Self {
        Self::new(m, p, n, Flavor::Reflection)
    }

    pub fn mystic(m: u32, p: u32, n: usize) -> Self {
        Self::new(m, p, n, Flavor::Mystic)
    }

    /// The hyperoctahedral group `B_n = G(2,1,n)`.
    pub fn b_n(n: usize) -> Self {
        Self::reflection(2, 1, n)
    }

    /// `D_n = G(2,2,n)`.
    pub fn d_n(n: usize) -> Self {
        Self::reflection(2, 2, n)
    }

    pub fn identity(&self) -> MonomialMatrix {
        MonomialMatrix::identity(self.m, self.n)
    }

    /// `m^n n!/p` for the reflection/mystic flavors.
    pub fn expected_order(&self) -> u64 {
        let fact: u64 = (1..=self.n as u64).product();
        match self.flavor {
            Flavor::Reflection | Flavor::Mystic => {
                (self.m as u64).pow(self.n as u32) * fact / self.p as u64
            }
            Flavor::Torus => (self.m as u64).pow(self.n as u32) / self.p as u64,
            Flavor::FullMonomial => (self.m as u64).pow(self.n as u32) * fact,
            Flavor::Symmetric => fact,
        }
    }

    pub fn is_member(&self, g: &MonomialMatrix) -> bool {
        if g.m() != self.m || g.n() != self.n {
            return false;
        }
        let refl_cond = g.sum_exps() % self.p == 0;
        match self.flavor {
            Flavor::Reflection => refl_cond,
            Flavor::Torus => g.is_diagonal() && refl_cond,
            Flavor::FullMonomial => true,
            Flavor::Symmetric => g.exps().iter().all(|&e| e == 0),
            Flavor::Mystic => {
                // det = sign * zeta_m^s must be an (m/p)-th root of unity;
                // as an integer condition: 2m | (m*[sign<0] + 2s) * (m/p).
                let s = g.sum_exps() as u64;
                let m = self.m as u64;
                let neg = if g.perm_odd() { 1u64 } else { 0 };
                ((m * neg + 2 * s) * (m / self.p as u64)) % (2 * m) == 0
            }
        }
    }

    /// All elements, identity first, no duplicates. Deterministic order:
    /// permutations in lexicographic one-line order, exponent vectors in
    /// lexicographic order within each permutation.
    pub fn enumerate_capped(&self, cap: u64) -> Result<Vec<MonomialMatrix>, GroupError> {
        let full = (self.m as u64).pow(self.n as u32)
            * (1..=self.n as u64).product::<u64>();
        let order = self.expected_order();
        if order > cap {
            return Err(GroupError::CapExceeded { order, cap });
        }
        // full iteration is bounded by p * cap
        let _ = full;
        let mut out = Vec::new();
        let mut perm: Vec<u16> = (0..self.n as u16).collect();
        loop {
            let mut exps = vec![0u32; self.n];
            loop {
                let g = MonomialMatrix {
                    m: self.m,
                    perm: perm.clone(),
                    exps: exps.clone(),
                };
                if self.is_member(&g) {
                    out.push(g);
                }
                // next exponent vector, lexicographic (last index fastest)
                let mut k = self.n;
                loop {
                    if k == 0 {
                        break;
                    }
                    k -= 1;
                    exps[k] += 1;
                    if exps[k] < self.m {
                        break;
                    }
                    exps[k] = 0;
                }
                if exps.iter().all(|&e| e == 0) {
                    break;
                }
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        Ok(out)
    }

    pub fn enumerate(&self) -> Vec<MonomialMatrix> {
        self.enumerate_capped(DEFAULT_GROUP_CAP).unwrap()
    }

    /// Conjugacy classes as a partition of `enumerate()`, deterministic.
    pub fn conjugacy_classes(&self) -> Vec<Vec<MonomialMatrix>> {
        let elems = self.enumerate();
        let index: HashMap<&MonomialMatrix, usize> =
            elems.iter().enumerate().map(|(i, g)| (g, i)).collect();
        let mut assigned = vec![false; elems.len()];
        let mut classes = Vec::new();
        for i in 0..elems.len() {
            if assigned[i] {
                continue;
            }
            let mut class_idx: Vec<usize> = Vec::new();
            for h in &elems {
                let c = h.compose(&elems[i]).compose(&h.inverse());
                let j = *index.get(&c).expect("conjugate left the group");
                if !assigned[j] {
                    assigned[j] = true;
                    class_idx.push(j);
                }
            }
            class_idx.sort_unstable();
            classes.push(class_idx.iter().map(|&j| elems[j].clone()).collect());
        }
        classes
    }

    /// Writes every element as a product of the supplied generators (BFS from
    /// the identity); returns, per element of `enumerate()`, the generator
    /// indices of one word. Panics if the generators do not generate.
    pub fn words_in_generators(&self, gens: &[MonomialMatrix]) -> Vec<Vec<usize>> {
        let elems = self.enumerate();
        let index: HashMap<&MonomialMatrix, usize> =
            elems.iter().enumerate().map(|(i, g)| (g, i)).collect();
        let id_idx = *index.get(&self.identity()).expect("identity not a member");
        let mut words: Vec<Option<Vec<usize>>> = vec![None; elems.len()];
        words[id_idx] = Some(vec![]);
        let mut queue = std::collections::VecDeque::from([id_idx]);
        while let Some(cur) = queue.pop_front() {
            for (gi, gen) in gens.iter().enumerate() {
                let next = elems[cur].compose(gen);
                let ni = *index
                    .get(&next)
                    .unwrap_or_else(|| panic!("generator product left the group"));
                if words[ni].is_none() {
                    let mut w = words[cur].clone().unwrap();
                    w.push(gi);
                    words[ni] = Some(w);
                    queue.push_back(ni);
                }
            }
        }
        words
            .into_iter()
            .map(|w| w.expect("generators do not generate the group"))
            .collect()
    }
}

fn next_permutation(perm: &mut [u16]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::CycloContext;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generator_matrices_match_displayed_maps() {
        let ctx = CycloContext::new(2);
        // sigma_12 in n=2 has matrix [[0,-1],[1,0]]
        let sg = MonomialMatrix::mystic_sigma(2, 2, 0, 1, 0);
        let mat = sg.to_matrix(&ctx);
        assert!(mat.at(0, 0).is_zero());
        assert_eq!(*mat.at(0, 1), ctx.from_int(-1));
        assert_eq!(*mat.at(1, 0), ctx.one());
        assert!(mat.at(1, 1).is_zero());
        // t_1^{(-1)} in n=2 is diag(-1, 1)
        let t1 = MonomialMatrix::t_minus_one(2, 2, 0);
        let tm = t1.to_matrix(&ctx);
        assert_eq!(*tm.at(0, 0), ctx.from_int(-1));
        assert_eq!(*tm.at(1, 1), ctx.one());
        // s_{12}^{(eps)} sends x_1 to eps^{-1} x_2
        let ctx4 = CycloContext::new(4);
        let s = MonomialMatrix::refl_s(4, 2, 0, 1, 1);
        let (j, c) = s.act_on_x_scalar(&ctx4, 0);
        assert_eq!(j, 1);
        assert_eq!(c, ctx4.root_of_unity(-1));
    }

    #[test]
    fn composition_and_orders() {
        let s = MonomialMatrix::refl_s(2, 2, 0, 1, 0);
        assert!(s.compose(&s).is_identity());
        let sg = MonomialMatrix::mystic_sigma(2, 2, 0, 1, 0);
        assert_eq!(sg.order(), 4);
        let t1 = MonomialMatrix::t_minus_one(2, 2, 0);
        let t2 = MonomialMatrix::t_minus_one(2, 2, 1);
        assert_eq!(t1.compose(&t2), t2.compose(&t1));
    }

    #[test]
    fn act_on_examples() {
        // act_on_x(sigma_12, 2) = (1, -1)  [1-based] -> 0-based (0, m/2)
        let sg = MonomialMatrix::mystic_sigma(2, 2, 0, 1, 0);
        assert_eq!(sg.act_on_x(1), (0, 1));
        // act_on_x(t_1^{(zeta)}, 1) = (1, zeta) over m=4
        let t = MonomialMatrix::diag_t(4, 2, 0, 1);
        assert_eq!(t.act_on_x(0), (0, 1));
        // act_on_y(s_12, 1) = (2, 1)
        let s = MonomialMatrix::refl_s(2, 2, 0, 1, 0);
        assert_eq!(s.act_on_y(0), (1, 0));
    }

    #[test]
    fn dual_pairing_invariance() {
        // <g(y_a), g(x_b)> = <y_a, x_b> for the stored dual action
        let ctx = CycloContext::new(4);
        let spec = GroupSpec::reflection(4, 2, 2);
        for g in spec.enumerate() {
            for a in 0..2 {
                for b in 0..2 {
                    let (ja, ca) = g.act_on_y_scalar(&ctx, a);
                    let (jb, cb) = g.act_on_x_scalar(&ctx, b);
                    let pairing = if ja == jb { ca.mul(&cb) } else { ctx.zero() };
                    let expected = if a == b { ctx.one() } else { ctx.zero() };
                    assert_eq!(pairing, expected);
                }
            }
        }
    }

    #[test]
    fn membership_examples() {
        let d2 = GroupSpec::reflection(2, 2, 2);
        let t1 = MonomialMatrix::t_minus_one(2, 2, 0);
        assert!(!d2.is_member(&t1));
        let mu_d2 = GroupSpec::mystic(2, 2, 2);
        let sg = MonomialMatrix::mystic_sigma(2, 2, 0, 1, 0);
        assert!(mu_d2.is_member(&sg));
        assert!(d2.is_member(&d2.identity()));
        assert!(mu_d2.is_member(&mu_d2.identity()));
    }

    #[test]
    fn enumeration_counts_and_contents() {
        let b2 = GroupSpec::b_n(2);
        let elems = b2.enumerate();
        assert_eq!(elems.len(), 8);
        assert!(elems[0].is_identity());

        let mu_d2 = GroupSpec::mystic(2, 2, 2);
        let mu = mu_d2.enumerate();
        assert_eq!(mu.len(), 4);
        let sg = MonomialMatrix::mystic_sigma(2, 2, 0, 1, 0);
        let mut powers = vec![MonomialMatrix::identity(2, 2)];
        for _ in 0..3 {
            powers.push(powers.last().unwrap().compose(&sg));
        }
        for p in &powers {
            assert!(mu.contains(p));
        }

        let d2 = GroupSpec::d_n(2);
        let d = d2.enumerate();
        assert_eq!(d.len(), 4);
        let s = MonomialMatrix::refl_s(2, 2, 0, 1, 0);
        let sbar = MonomialMatrix::refl_s(2, 2, 0, 1, 1);
        let t1t2 = MonomialMatrix::t_minus_one(2, 2, 0)
            .compose(&MonomialMatrix::t_minus_one(2, 2, 1));
        for g in [d2.identity(), t1t2, s, sbar] {
            assert!(d.contains(&g));
        }

        for spec in [
            GroupSpec::reflection(2, 1, 3),
            GroupSpec::reflection(4, 2, 2),
            GroupSpec::mystic(4, 2, 2),
            GroupSpec::mystic(2, 1, 2),
            GroupSpec::mystic(2, 2, 3),
        ] {
            let elems = spec.enumerate();
            assert_eq!(elems.len() as u64, spec.expected_order(), "{spec:?}");
            let mut sorted = elems.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), elems.len(), "duplicates in {spec:?}");
        }
    }

    #[test]
    fn mystic_equals_reflection_when_mp_even() {
        for (m, p) in [(2u32, 1u32), (4, 2)] {
            for n in [2usize, 3] {
                let refl = GroupSpec::reflection(m, p, n);
                let myst = GroupSpec::mystic(m, p, n);
                for g in refl.enumerate() {
                    assert!(myst.is_member(&g));
                }
                for g in myst.enumerate() {
                    assert!(refl.is_member(&g));
                }
            }
        }
    }

    #[test]
    fn closure_and_matrix_model_agree() {
        let ctx = CycloContext::new(4);
        let spec = GroupSpec::reflection(4, 2, 2);
        let elems = spec.enumerate();
        assert!(elems.len() <= 100);
        for g in &elems {
            assert!(spec.is_member(&g.inverse()));
            for h in &elems {
                let gh = g.compose(h);
                assert!(spec.is_member(&gh));
                assert!(g.to_matrix(&ctx).mul(&h.to_matrix(&ctx)).equals(&gh.to_matrix(&ctx)));
            }
        }
        // randomized beyond order 100
        let spec_big = GroupSpec::b_n(3);
        let elems = spec_big.enumerate();
        let ctx2 = CycloContext::new(2);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let g = &elems[rng.gen_range(0..elems.len())];
            let h = &elems[rng.gen_range(0..elems.len())];
            let gh = g.compose(h);
            assert!(g.to_matrix(&ctx2).mul(&h.to_matrix(&ctx2)).equals(&gh.to_matrix(&ctx2)));
        }
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let ctx = CycloContext::new(4);
        let spec = GroupSpec::reflection(4, 2, 2);
        for g in spec.enumerate() {
            assert_eq!(g.det(&ctx), cofactor_det(&g.to_matrix(&ctx)));
        }
    }

    fn cofactor_det(m: &Matrix) -> CycloScalar {
        let n = m.rows;
        if n == 1 {
            return m.at(0, 0).clone();
        }
        let ctx = m.ctx().clone();
        let mut acc = ctx.zero();
        for i in 0..n {
            if m.at(i, 0).is_zero() {
                continue;
            }
            let mut minor = Matrix::zero(&ctx, n - 1, n - 1);
            for (r2, r) in (0..n).filter(|&r| r != i).enumerate() {
                for c in 1..n {
                    *minor.at_mut(r2, c - 1) = m.at(r, c).clone();
                }
            }
            let term = m.at(i, 0).mul(&cofactor_det(&minor));
            acc = if i % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }

    #[test]
    fn conjugacy_class_shapes() {
        assert_eq!(GroupSpec::d_n(2).conjugacy_classes().len(), 4);
        let b2_classes = GroupSpec::b_n(2).conjugacy_classes();
        assert_eq!(b2_classes.len(), 5);
        assert_eq!(
            b2_classes.iter().map(|c| c.len()).sum::<usize>(),
            8
        );
        let mu = GroupSpec::mystic(2, 2, 2).conjugacy_classes();
        assert_eq!(mu.len(), 4);
        assert!(mu.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn cap_errors() {
        let spec = GroupSpec::b_n(5); // 3840
        assert!(matches!(
            spec.enumerate_capped(100),
            Err(GroupError::CapExceeded { .. })
        ));
    }

    #[test]
    fn token_roundtrip_via_word() {
        // the canonical token recomposes to the element
        let spec = GroupSpec::reflection(4, 2, 2);
        for g in spec.enumerate() {
            let tok = g.token();
            let parsed = crate::parse::parse_group_element(&tok, 4, 2).unwrap();
            assert_eq!(parsed, g, "token {tok}");
        }
    }

    #[test]
    fn words_in_generators_cover_group() {
        let spec = GroupSpec::b_n(2);
        let gens = vec![
            MonomialMatrix::refl_s(2, 2, 0, 1, 0),
            MonomialMatrix::t_minus_one(2, 2, 0),
        ];
        let words = spec.words_in_generators(&gens);
        let elems = spec.enumerate();
        for (g, w) in elems.iter().zip(&words) {
            let mut acc = spec.identity();
            for &gi in w {
                acc = acc.compose(&gens[gi]);
            }
            assert_eq!(&acc, g);
        }
    }
}
