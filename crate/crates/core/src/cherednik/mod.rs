//! Rational Cherednik algebras `H_{t,c}(G(m,p,n))` and negative braided
//! Cherednik algebras for the mystic groups, realized as rewriting systems
//! over the PBW normal-word basis `x^a * g * y^b`.

mod embed;
mod psi;
mod standard;

pub use embed::{EtaPhiEmbedding, PhiMap};
pub use psi::{psi_factorisation, twist_factorisation_check, PsiError};
pub use standard::{check_standard_module_twist, check_standard_module_twist_with_f, GroupRep, StandardModule};

use crate::galg::GroupAlgebraElement;
use crate::group::{GroupSpec, MonomialMatrix};
use crate::lin::Lin;
use crate::parse::{parse_element, Letter, ParseError};
use crate::scalar::{Ctx, CtxExt, CycloScalar};
use crate::twist::{AdjointCarrier, TMask, TwistCarrier};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraFlavor {
    /// Commuting x's and y's, reflection group, `s`-type commutators.
    Rational,
    /// Anticommuting x's and y's, mystic group, `sigma`-type commutators.
    NegativeBraided,
}

/// Parameters `t` and `c = {c_1, c_zeta}`. The `c_zeta` table is keyed by the
/// exponent `e` with `zeta = zeta_m^e`, ranging over the nontrivial
/// `(m/p)`-th roots of unity, i.e. `e in {p, 2p, ..., m-p}`.
#[derive(Clone, Debug)]
pub struct CherednikParams {
    pub t: CycloScalar,
    pub c1: CycloScalar,
    pub c_zeta: BTreeMap<u32, CycloScalar>,
}

impl CherednikParams {
    pub fn new(t: CycloScalar, c1: CycloScalar, c_zeta: BTreeMap<u32, CycloScalar>) -> Self {
        CherednikParams { t, c1, c_zeta }
    }

    /// All parameters zero.
    pub fn zero(ctx: &Ctx, m: u32, p: u32) -> Self {
        Self::constant(ctx, m, p, ctx.zero(), ctx.zero())
    }

    /// `t` and a single value for `c_1` and every `c_zeta`.
    pub fn constant(_ctx: &Ctx, m: u32, p: u32, t: CycloScalar, c: CycloScalar) -> Self {
        let mut c_zeta = BTreeMap::new();
        let mut e = p;
        while e < m {
            c_zeta.insert(e, c.clone());
            e += p;
        }
        CherednikParams { t, c1: c, c_zeta }
    }

    fn validate(&self, m: u32, p: u32) {
        let expected: Vec<u32> = (1..m / p).map(|k| k * p).collect();
        let keys: Vec<u32> = self.c_zeta.keys().copied().collect();
        assert_eq!(
            keys, expected,
            "c_zeta keys must be exactly the nontrivial (m/p)-th roots"
        );
    }

    pub fn negate_c(&self) -> Self {
        CherednikParams {
            t: self.t.clone(),
            c1: self.c1.neg(),
            c_zeta: self.c_zeta.iter().map(|(k, v)| (*k, v.neg())).collect(),
        }
    }
}

/// PBW basis word `x_1^{a_1}..x_n^{a_n} * g * y_1^{b_1}..y_n^{b_n}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct NormalWord {
    pub x: Vec<u32>,
    pub g: MonomialMatrix,
    pub y: Vec<u32>,
}

impl NormalWord {
    pub fn group(g: MonomialMatrix) -> Self {
        let n = g.n();
        NormalWord { x: vec![0; n], g, y: vec![0; n] }
    }

    pub fn x_degree(&self) -> u32 {
        self.x.iter().sum()
    }

    pub fn y_degree(&self) -> u32 {
        self.y.iter().sum()
    }

    pub fn degree(&self) -> u32 {
        self.x_degree() + self.y_degree()
    }

    pub fn is_group_only(&self) -> bool {
        self.x.iter().all(|&e| e == 0) && self.y.iter().all(|&e| e == 0)
    }

    fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        for (i, &e) in self.x.iter().enumerate() {
            for _ in 0..e {
                out.push(Letter::X(i));
            }
        }
        if !self.g.is_identity() {
            out.push(Letter::G(self.g.clone()));
        }
        for (i, &e) in self.y.iter().enumerate() {
            for _ in 0..e {
                out.push(Letter::Y(i));
            }
        }
        out
    }
}

impl fmt::Display for NormalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, &e) in self.x.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("x{}", i + 1)),
                _ => parts.push(format!("x{}^{}", i + 1, e)),
            }
        }
        if !self.g.is_identity() {
            parts.push(self.g.token());
        }
        for (i, &e) in self.y.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("y{}", i + 1)),
                _ => parts.push(format!("y{}^{}", i + 1, e)),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

impl fmt::Debug for NormalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

pub type CherednikElement = Lin<NormalWord>;

/// The algebra object: fixes the group, flavor, parameters and scalar
/// context; elements are plain sparse sums over normal words.
pub struct CherednikAlgebra {
    ctx: Ctx,
    group: GroupSpec,
    flavor: AlgebraFlavor,
    params: CherednikParams,
}

impl CherednikAlgebra {
    pub fn rational(ctx: &Ctx, m: u32, p: u32, n: usize, params: CherednikParams) -> Self {
        params.validate(m, p);
        CherednikAlgebra {
            ctx: ctx.clone(),
            group: GroupSpec::reflection(m, p, n),
            flavor: AlgebraFlavor::Rational,
            params,
        }
    }

    pub fn negative_braided(ctx: &Ctx, m: u32, p: u32, n: usize, params: CherednikParams) -> Self {
        assert!(m % 2 == 0, "the negative braided algebra needs even m");
        params.validate(m, p);
        CherednikAlgebra {
            ctx: ctx.clone(),
            group: GroupSpec::mystic(m, p, n),
            flavor: AlgebraFlavor::NegativeBraided,
            params,
        }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn group(&self) -> GroupSpec {
        self.group
    }

    pub fn flavor(&self) -> AlgebraFlavor {
        self.flavor
    }

    pub fn params(&self) -> &CherednikParams {
        &self.params
    }

    pub fn n(&self) -> usize {
        self.group.n
    }

    pub fn m(&self) -> u32 {
        self.group.m
    }

    fn x_sign(&self) -> bool {
        matches!(self.flavor, AlgebraFlavor::NegativeBraided)
    }

    pub fn one(&self) -> CherednikElement {
        Lin::basis(&self.ctx, NormalWord::group(self.group.identity()))
    }

    pub fn x(&self, i: usize) -> CherednikElement {
        let mut w = NormalWord::group(self.group.identity());
        w.x[i] = 1;
        Lin::basis(&self.ctx, w)
    }

    pub fn y(&self, i: usize) -> CherednikElement {
        let mut w = NormalWord::group(self.group.identity());
        w.y[i] = 1;
        Lin::basis(&self.ctx, w)
    }

    pub fn group_elem(&self, g: &MonomialMatrix) -> CherednikElement {
        assert!(self.group.is_member(g), "{g} is not in {:?}", self.group);
        Lin::basis(&self.ctx, NormalWord::group(g.clone()))
    }

    pub fn from_group_algebra(&self, e: &GroupAlgebraElement) -> CherednikElement {
        let mut out = Lin::zero();
        for (g, c) in e.terms() {
            assert!(self.group.is_member(g), "{g} is not in {:?}", self.group);
            out.add_term(NormalWord::group(g.clone()), c.clone());
        }
        out
    }

    /// Extracts the group-algebra part of a degree-0 element; panics when a
    /// term has positive degree.
    pub fn to_group_algebra(&self, e: &CherednikElement) -> GroupAlgebraElement {
        let mut out = GroupAlgebraElement::zero(&self.ctx, self.group);
        for (w, c) in e.iter() {
            assert!(w.is_group_only(), "element has positive-degree terms");
            out.add_term(w.g.clone(), c.clone());
        }
        out
    }

    fn zeta(&self, e: u32) -> CycloScalar {
        self.ctx.root_of_order(self.group.m, e as i64)
    }

    /// Straightens an arbitrary word to the normal-word basis. Rewrites the
    /// first out-of-order adjacent pair (leftmost-innermost); correction
    /// terms re-enter the queue. Terminates because each y-past-x step
    /// strictly lowers the y-x inversion count and the remaining moves
    /// decrease a positional measure at fixed inversion count.
    pub fn normalize(&self, coeff: CycloScalar, letters: Vec<Letter>) -> CherednikElement {
        let mut out = Lin::zero();
        if coeff.is_zero() {
            return out;
        }
        let mut queue: Vec<(CycloScalar, Vec<Letter>)> = vec![(coeff, letters)];
        while let Some((c, word)) = queue.pop() {
            match self.first_reduction(&c, &word) {
                None => {
                    out.add_term(self.pack_normal(&word), c);
                }
                Some(branches) => {
                    for b in branches {
                        if !b.0.is_zero() {
                            queue.push(b);
                        }
                    }
                }
            }
        }
        out
    }

    fn pack_normal(&self, word: &[Letter]) -> NormalWord {
        let n = self.n();
        let mut w = NormalWord::group(self.group.identity());
        for l in word {
            match l {
                Letter::X(i) => w.x[*i] += 1,
                Letter::Y(i) => w.y[*i] += 1,
                Letter::G(g) => {
                    debug_assert!(w.g.is_identity());
                    w.g = g.clone();
                }
            }
        }
        debug_assert!(w.x.len() == n && w.y.len() == n);
        w
    }

    /// Finds the first reducible adjacent pair and returns the replacement
    /// branches (coefficient, full word).
    fn first_reduction(
        &self,
        coeff: &CycloScalar,
        word: &[Letter],
    ) -> Option<Vec<(CycloScalar, Vec<Letter>)>> {
        for k in 0..word.len().saturating_sub(1) {
            let (a, b) = (&word[k], &word[k + 1]);
            match (a, b) {
                (Letter::G(g), Letter::G(h)) => {
                    let merged = vec![Letter::G(g.compose(h))];
                    return Some(vec![(coeff.clone(), splice(word, k, merged))]);
                }
                (Letter::G(g), Letter::X(i)) => {
                    // g x_i = g(x_i) g
                    let (j, e) = g.act_on_x(*i);
                    let repl = vec![Letter::X(j), Letter::G(g.clone())];
                    return Some(vec![(coeff.mul(&self.zeta(e)), splice(word, k, repl))]);
                }
                (Letter::Y(i), Letter::G(g)) => {
                    // y_i g = g (g^{-1}(y_i))
                    let (j, e) = g.inverse().act_on_y(*i);
                    let repl = vec![Letter::G(g.clone()), Letter::Y(j)];
                    return Some(vec![(coeff.mul(&self.zeta(e)), splice(word, k, repl))]);
                }
                (Letter::X(i), Letter::X(j)) if i > j => {
                    let repl = vec![Letter::X(*j), Letter::X(*i)];
                    let c = if self.x_sign() { coeff.neg() } else { coeff.clone() };
                    return Some(vec![(c, splice(word, k, repl))]);
                }
                (Letter::Y(i), Letter::Y(j)) if i > j => {
                    let repl = vec![Letter::Y(*j), Letter::Y(*i)];
                    let c = if self.x_sign() { coeff.neg() } else { coeff.clone() };
                    return Some(vec![(c, splice(word, k, repl))]);
                }
                (Letter::Y(i), Letter::X(j)) => {
                    return Some(self.commute_y_x(coeff, word, k, *i, *j));
                }
                _ => {}
            }
        }
        None
    }

    /// Branches for rewriting `y_i x_j` at position `k`.
    fn commute_y_x(
        &self,
        coeff: &CycloScalar,
        word: &[Letter],
        k: usize,
        i: usize,
        j: usize,
    ) -> Vec<(CycloScalar, Vec<Letter>)> {
        let m = self.group.m;
        let n = self.n();
        let mut branches = Vec::new();
        let swap = vec![Letter::X(j), Letter::Y(i)];
        match self.flavor {
            AlgebraFlavor::Rational => {
                if i != j {
                    // y_i x_j = x_j y_i + c_1 sum_eps eps s_ij^{(eps)}
                    branches.push((coeff.clone(), splice(word, k, swap)));
                    if !self.params.c1.is_zero() {
                        for e in 0..m {
                            let s = MonomialMatrix::refl_s(m, n, i, j, e as i64);
                            let c = coeff.mul(&self.params.c1).mul(&self.zeta(e));
                            branches.push((c, splice(word, k, vec![Letter::G(s)])));
                        }
                    }
                } else {
                    // y_i x_i = x_i y_i + t - c_1 sum_{j'!=i} sum_eps s_ij'
                    //           - sum_zeta c_zeta t_i^{(zeta)}
                    branches.push((coeff.clone(), splice(word, k, swap)));
                    if !self.params.t.is_zero() {
                        branches.push((coeff.mul(&self.params.t), splice(word, k, vec![])));
                    }
                    if !self.params.c1.is_zero() {
                        for jp in 0..n {
                            if jp == i {
                                continue;
                            }
                            for e in 0..m {
                                let s = MonomialMatrix::refl_s(m, n, i, jp, e as i64);
                                let c = coeff.mul(&self.params.c1).neg();
                                branches.push((c, splice(word, k, vec![Letter::G(s)])));
                            }
                        }
                    }
                    for (e, cz) in &self.params.c_zeta {
                        if cz.is_zero() {
                            continue;
                        }
                        let t = MonomialMatrix::diag_t(m, n, i, *e as i64);
                        branches.push((coeff.mul(cz).neg(), splice(word, k, vec![Letter::G(t)])));
                    }
                }
            }
            AlgebraFlavor::NegativeBraided => {
                if i != j {
                    // y_i x_j = -x_j y_i + c_1 sum_eps eps sigma_ij^{(eps)}
                    branches.push((coeff.neg(), splice(word, k, swap)));
                    if !self.params.c1.is_zero() {
                        for e in 0..m {
                            let s = MonomialMatrix::mystic_sigma(m, n, i, j, e as i64);
                            let c = coeff.mul(&self.params.c1).mul(&self.zeta(e));
                            branches.push((c, splice(word, k, vec![Letter::G(s)])));
                        }
                    }
                } else {
                    // y_i x_i = x_i y_i + t + c_1 sum_{j'!=i} sum_eps sigma_ij'
                    //           + sum_zeta c_zeta t_i^{(zeta)}
                    branches.push((coeff.clone(), splice(word, k, swap)));
                    if !self.params.t.is_zero() {
                        branches.push((coeff.mul(&self.params.t), splice(word, k, vec![])));
                    }
                    if !self.params.c1.is_zero() {
                        for jp in 0..n {
                            if jp == i {
                                continue;
                            }
                            for e in 0..m {
                                let s = MonomialMatrix::mystic_sigma(m, n, i, jp, e as i64);
                                branches.push((
                                    coeff.mul(&self.params.c1),
                                    splice(word, k, vec![Letter::G(s)]),
                                ));
                            }
                        }
                    }
                    for (e, cz) in &self.params.c_zeta {
                        if cz.is_zero() {
                            continue;
                        }
                        let t = MonomialMatrix::diag_t(m, n, i, *e as i64);
                        branches.push((coeff.mul(cz), splice(word, k, vec![Letter::G(t)])));
                    }
                }
            }
        }
        branches
    }

    /// Concatenate-and-normalize product.
    pub fn mul(&self, a: &CherednikElement, b: &CherednikElement) -> CherednikElement {
        let mut out = Lin::zero();
        for (wa, ca) in a.iter() {
            for (wb, cb) in b.iter() {
                let mut letters = wa.letters();
                letters.extend(wb.letters());
                out.add_assign(&self.normalize(ca.mul(cb), letters));
            }
        }
        out
    }

    pub fn mul_many(&self, factors: &[CherednikElement]) -> CherednikElement {
        let mut acc = self.one();
        for f in factors {
            acc = self.mul(&acc, f);
        }
        acc
    }

    pub fn pow(&self, a: &CherednikElement, e: u32) -> CherednikElement {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    pub fn commutator(&self, a: &CherednikElement, b: &CherednikElement) -> CherednikElement {
        self.mul(a, b).sub(&self.mul(b, a))
    }

    pub fn parse(&self, input: &str) -> Result<CherednikElement, ParseError> {
        let terms = parse_element(input, &self.ctx, self.group.m, self.n())?;
        let mut out = Lin::zero();
        for t in terms {
            out.add_assign(&self.normalize(t.coeff, t.letters));
        }
        Ok(out)
    }

    /// Maximum x-degree over the terms (0 for the zero element); used to
    /// decide which truncated-module columns are trustworthy.
    pub fn max_x_degree(&self, e: &CherednikElement) -> u32 {
        e.iter().map(|(w, _)| w.x_degree()).max().unwrap_or(0)
    }

    /// JSON dump as a list of `[x_exps, group token, y_exps, scalar]` rows.
    pub fn element_to_json(&self, e: &CherednikElement) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = e
            .iter()
            .map(|(w, c)| {
                serde_json::json!([w.x, w.g.token(), w.y, c.to_json()])
            })
            .collect();
        serde_json::Value::Array(rows)
    }
}

fn splice(word: &[Letter], k: usize, replacement: Vec<Letter>) -> Vec<Letter> {
    let mut out = Vec::with_capacity(word.len() + replacement.len());
    out.extend_from_slice(&word[..k]);
    out.extend(replacement);
    out.extend_from_slice(&word[k + 2..]);
    out
}

// ---------------------------------------------------------------------------
// the T-action carrier: gamma_i conjugates the group part and flips the sign
// of x_i and y_i
// ---------------------------------------------------------------------------

impl TwistCarrier for CherednikAlgebra {
    type B = NormalWord;

    fn gamma_count(&self) -> usize {
        self.n()
    }

    fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    fn gamma(&self, i: usize, b: &NormalWord) -> (NormalWord, bool) {
        assert!(self.group.m % 2 == 0, "T-action needs even m");
        let t = MonomialMatrix::t_minus_one(self.group.m, self.n(), i);
        let g = t.compose(&b.g).compose(&t);
        let neg = (b.x[i] + b.y[i]) % 2 == 1;
        (NormalWord { x: b.x.clone(), g, y: b.y.clone() }, neg)
    }

    fn mul_basis(&self, a: &NormalWord, b: &NormalWord) -> Lin<NormalWord> {
        let mut letters = a.letters();
        letters.extend(b.letters());
        self.normalize(self.ctx.one(), letters)
    }

    fn unit(&self) -> NormalWord {
        NormalWord::group(self.group.identity())
    }

    fn basis_sample(&self) -> Vec<NormalWord> {
        // all words with x- and y-degree at most 1
        let mut out = Vec::new();
        let n = self.n();
        let mut xs: Vec<Vec<u32>> = vec![vec![0; n]];
        for i in 0..n {
            let mut v = vec![0; n];
            v[i] = 1;
            xs.push(v);
        }
        for g in self.group.enumerate() {
            for x in &xs {
                for y in &xs {
                    out.push(NormalWord { x: x.clone(), g: g.clone(), y: y.clone() });
                }
            }
        }
        out
    }
}

impl AdjointCarrier for CherednikAlgebra {
    fn embed_t(&self, mask: TMask) -> NormalWord {
        let g = crate::twist::embed_t_word(self.group.m, self.n(), mask);
        assert!(
            self.group.is_member(&g),
            "t-word {g} not in {:?}; adjoint embedding needs m/p even",
            self.group
        );
        NormalWord::group(g)
    }
}
