//! Partitions and bipartitions, irreducible characters of the symmetric and
//! hyperoctahedral groups, restriction to the index-2 subgroups `D_n` and
//! `mu(D_n)`, pullbacks along the `J_c` maps, and the inner-automorphism
//! witness search.

use crate::galg::{GroupAlgebraElement, JMap};
use crate::group::{Flavor, GroupSpec, MonomialMatrix};
use crate::linalg::Matrix;
use crate::scalar::{rat, Ctx, CtxExt, CycloScalar, Rational};
use std::collections::HashMap;
use std::fmt;

// ---------------------------------------------------------------------------
// partitions
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing"
        );
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(vec![])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Conjugate (transposed) Young diagram.
    pub fn dual(&self) -> Partition {
        if self.0.is_empty() {
            return Partition::empty();
        }
        let cols = self.0[0];
        let parts = (1..=cols)
            .map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32)
            .collect();
        Partition(parts)
    }

    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for k in (1..=n.min(max)).rev() {
                prefix.push(k);
                rec(n - k, k, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n.max(1), &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Bipartition { first, second }
    }

    pub fn size(&self) -> u32 {
        self.first.size() + self.second.size()
    }

    pub fn all(n: u32) -> Vec<Bipartition> {
        let mut out = Vec::new();
        for a in 0..=n {
            for l in Partition::all(a) {
                for m in Partition::all(n - a) {
                    out.push(Bipartition::new(l.clone(), m));
                }
            }
        }
        out
    }

    /// `(lambda, mu) -> (lambda, mu*)`.
    pub fn dual_second(&self) -> Bipartition {
        Bipartition::new(self.first.clone(), self.second.dual())
    }
}

impl fmt::Debug for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

// ---------------------------------------------------------------------------
// symmetric group characters (Murnaghan-Nakayama)
// ---------------------------------------------------------------------------

/// Irreducible character of `S_n` at a cycle type, by the border-strip
/// recursion on beta-numbers.
pub fn sn_character(lambda: &Partition, cycle_type: &Partition) -> i64 {
    assert_eq!(
        lambda.size(),
        cycle_type.size(),
        "partition and cycle type have different sizes"
    );
    let len = lambda.parts().len().max(1);
    let mut beta: Vec<u32> = Vec::with_capacity(len);
    for i in 0..len {
        let part = lambda.parts().get(i).copied().unwrap_or(0);
        beta.push(part + (len - 1 - i) as u32);
    }
    mn_rec(&beta, cycle_type.parts())
}

fn mn_rec(beta: &[u32], mu: &[u32]) -> i64 {
    if mu.is_empty() {
        return 1; // sizes matched, so beta is the staircase of the empty shape
    }
    let k = mu[0];
    let rest = &mu[1..];
    let mut acc = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        if b < k {
            continue;
        }
        let target = b - k;
        if beta.contains(&target) {
            continue;
        }
        // height = number of beta entries strictly between target and b
        let height = beta
            .iter()
            .filter(|&&x| x > target && x < b)
            .count();
        let mut nb = beta.to_vec();
        nb[i] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let term = mn_rec(&nb, rest);
        if height % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

// ---------------------------------------------------------------------------
// class functions
// ---------------------------------------------------------------------------

/// Conjugacy-class decomposition of an enumerable group, with constant-time
/// element-to-class lookup.
pub struct GroupClasses {
    pub spec: GroupSpec,
    pub elems: Vec<MonomialMatrix>,
    pub classes: Vec<Vec<MonomialMatrix>>,
    class_of: HashMap<MonomialMatrix, usize>,
}

impl GroupClasses {
    pub fn new(spec: GroupSpec) -> Self {
        let elems = spec.enumerate();
        let classes = spec.conjugacy_classes();
        let mut class_of = HashMap::new();
        for (ci, class) in classes.iter().enumerate() {
            for g in class {
                class_of.insert(g.clone(), ci);
            }
        }
        GroupClasses { spec, elems, classes, class_of }
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn class_index(&self, g: &MonomialMatrix) -> usize {
        *self
            .class_of
            .get(g)
            .unwrap_or_else(|| panic!("{g} is not in {:?}", self.spec))
    }

    pub fn reps(&self) -> Vec<&MonomialMatrix> {
        self.classes.iter().map(|c| &c[0]).collect()
    }
}

/// A function constant on conjugacy classes, stored per class.
#[derive(Clone, PartialEq, Eq)]
pub struct ClassFunction {
    pub spec: GroupSpec,
    pub values: Vec<CycloScalar>,
}

impl ClassFunction {
    pub fn value_at(&self, classes: &GroupClasses, g: &MonomialMatrix) -> &CycloScalar {
        assert_eq!(self.spec, classes.spec);
        &self.values[classes.class_index(g)]
    }

    /// Linear extension to a group algebra element.
    pub fn eval(&self, classes: &GroupClasses, a: &GroupAlgebraElement) -> CycloScalar {
        let ctx = a.ctx();
        let mut acc = ctx.zero();
        for (g, c) in a.terms() {
            acc = acc.add(&c.mul(self.value_at(classes, g)));
        }
        acc
    }

    /// `<a, b> = 1/|G| sum_g a(g) conj(b(g))`.
    pub fn inner(&self, classes: &GroupClasses, other: &ClassFunction) -> CycloScalar {
        assert_eq!(self.spec, other.spec);
        let ctx = self.values[0].ctx().clone();
        let mut acc = ctx.zero();
        for (ci, class) in classes.classes.iter().enumerate() {
            let term = self.values[ci].mul(&other.values[ci].conj());
            acc = acc.add(&term.scale(&rat(class.len() as i64)));
        }
        acc
            .scale(&Rational::new(1.into(), (classes.order() as i64).into()))
    }

    /// Pullback along a linear map of group algebras given elementwise:
    /// value at `g` is the linear extension of `self` at `jmap(g)`.
    pub fn pullback(
        &self,
        own_classes: &GroupClasses,
        source_classes: &GroupClasses,
        jmap: impl Fn(&MonomialMatrix) -> GroupAlgebraElement,
    ) -> ClassFunction {
        let values = source_classes
            .classes
            .iter()
            .map(|class| self.eval(own_classes, &jmap(&class[0])))
            .collect();
        ClassFunction { spec: source_classes.spec, values }
    }

    /// Restriction to a subgroup (every element of `sub` must lie in `self`'s
    /// group).
    pub fn restrict(&self, own_classes: &GroupClasses, sub: &GroupClasses) -> ClassFunction {
        let values = sub
            .classes
            .iter()
            .map(|class| self.value_at(own_classes, &class[0]).clone())
            .collect();
        ClassFunction { spec: sub.spec, values }
    }
}

// ---------------------------------------------------------------------------
// B_n characters by the elementwise induced-character formula
// ---------------------------------------------------------------------------

/// `epsilon'`: the linear character with `t_i -> -1`, `s_i -> +1`.
fn eps_prime_on_range(g: &MonomialMatrix, from: usize) -> i64 {
    let flips: u32 = g.exps()[from..].iter().map(|&e| e % 2).sum();
    if flips % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Cycle type of the permutation restricted to `[from, to)`; the block must
/// be stabilized.
fn block_cycle_type(g: &MonomialMatrix, from: usize, to: usize) -> Partition {
    let mut seen = vec![false; to - from];
    let mut cycles = Vec::new();
    for i in from..to {
        if seen[i - from] {
            continue;
        }
        let mut len = 0u32;
        let mut j = i;
        while !seen[j - from] {
            seen[j - from] = true;
            j = g.perm()[j] as usize;
            len += 1;
        }
        cycles.push(len);
    }
    cycles.sort_unstable_by(|a, b| b.cmp(a));
    Partition(cycles)
}

/// Irreducible character of `B_n` labeled by a bipartition, computed as
/// `Ind_{B_a x B_b}^{B_n} ( chi~_lambda (x) (eps' (x) chi~_mu) )` via the
/// elementwise averaging formula over the enumerated group. All values are
/// rational integers.
pub fn bn_character(ctx: &Ctx, classes: &GroupClasses, bp: &Bipartition) -> ClassFunction {
    assert_eq!(classes.spec.flavor, Flavor::Reflection);
    assert_eq!(classes.spec.m, 2);
    assert_eq!(classes.spec.p, 1);
    let n = classes.spec.n;
    let a = bp.first.size() as usize;
    assert_eq!(bp.size() as usize, n);
    let subgroup_order: i64 = {
        let b = n - a;
        let fact = |k: usize| (1..=k as i64).product::<i64>();
        (1i64 << a) * fact(a) * (1i64 << b) * fact(b)
    };
    // psi~(h) = chi_lambda(upper cycle type) eps'(lower) chi_mu(lower cycle type)
    let psi = |h: &MonomialMatrix| -> Option<i64> {
        let stabilizes = (0..a).all(|i| (h.perm()[i] as usize) < a);
        if !stabilizes {
            return None;
        }
        let upper = block_cycle_type(h, 0, a);
        let lower = block_cycle_type(h, a, n);
        Some(
            sn_character(&bp.first, &upper)
                * eps_prime_on_range(h, a)
                * sn_character(&bp.second, &lower),
        )
    };
    let values = classes
        .classes
        .iter()
        .map(|class| {
            let g = &class[0];
            let mut sum = 0i64;
            for x in &classes.elems {
                let conj = x.inverse().compose(g).compose(x);
                if let Some(v) = psi(&conj) {
                    sum += v;
                }
            }
            assert_eq!(sum % subgroup_order, 0, "induced value not integral");
            ctx.from_int(sum / subgroup_order)
        })
        .collect();
    ClassFunction { spec: classes.spec, values }
}

/// The full character table of `B_n`, one class function per bipartition, in
/// `Bipartition::all` order.
pub fn bn_character_table(
    ctx: &Ctx,
    classes: &GroupClasses,
) -> Vec<(Bipartition, ClassFunction)> {
    Bipartition::all(classes.spec.n as u32)
        .into_iter()
        .map(|bp| {
            let chi = bn_character(ctx, classes, &bp);
            (bp, chi)
        })
        .collect()
}

// ---------------------------------------------------------------------------
// verification reports
// ---------------------------------------------------------------------------

/// Outcome of checking a labelled family of identities.
pub struct LabelReport<L> {
    pub entries: Vec<(L, bool)>,
}

impl<L> LabelReport<L> {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|(_, ok)| *ok)
    }
}

/// `chi_(lambda,mu) . J_1 = chi_(lambda,mu*)` for every bipartition of `n`.
pub fn verify_b_twist(ctx: &Ctx, n: usize) -> LabelReport<(Bipartition, Bipartition)> {
    let classes = GroupClasses::new(GroupSpec::b_n(n));
    let table = bn_character_table(ctx, &classes);
    let j1 = JMap::j_one(ctx, 2, n);
    let spec = classes.spec;
    let entries = table
        .iter()
        .map(|(bp, chi)| {
            let pulled = chi.pullback(&classes, &classes, |g| {
                j1.apply_group(g).expect_in_spec(spec).unwrap()
            });
            let target = bp.dual_second();
            let expected = &table.iter().find(|(l, _)| l == &target).unwrap().1;
            ((bp.clone(), target.clone()), &pulled == expected)
        })
        .collect();
    LabelReport { entries }
}

/// `chi . J_1 = chi . J_{-i}` for every irreducible of `B_n`; the context
/// must contain `i` (4 | m).
pub fn verify_j1_equals_jminusi(ctx: &Ctx, n: usize) -> LabelReport<Bipartition> {
    let classes = GroupClasses::new(GroupSpec::b_n(n));
    let table = bn_character_table(ctx, &classes);
    let j1 = JMap::j_one(ctx, 2, n);
    let jmi = JMap::j_minus_i(ctx, 2, n);
    let spec = classes.spec;
    let entries = table
        .iter()
        .map(|(bp, chi)| {
            let p1 = chi.pullback(&classes, &classes, |g| {
                j1.apply_group(g).expect_in_spec(spec).unwrap()
            });
            let p2 = chi.pullback(&classes, &classes, |g| {
                jmi.apply_group(g).expect_in_spec(spec).unwrap()
            });
            (bp.clone(), p1 == p2)
        })
        .collect();
    LabelReport { entries }
}

/// For every label with `lambda != mu`: the pullback of `chi^{D_n}_(l,m)`
/// along `J_{-i}` equals the irreducible restriction of `chi_(l,m*)` to
/// `mu(D_n)` (norm 1 there).
pub fn verify_d_bijection(ctx: &Ctx, n: usize) -> LabelReport<(Bipartition, Bipartition)> {
    let b_classes = GroupClasses::new(GroupSpec::b_n(n));
    let d_classes = GroupClasses::new(GroupSpec::d_n(n));
    let mu_classes = GroupClasses::new(GroupSpec::mystic(2, 2, n));
    let table = bn_character_table(ctx, &b_classes);
    let jmi = JMap::j_minus_i(ctx, 2, n);
    let d_spec = d_classes.spec;
    let mut entries = Vec::new();
    for (bp, chi) in &table {
        if bp.first == bp.second {
            continue; // split case, outside the bijection
        }
        let chi_d = chi.restrict(&b_classes, &d_classes);
        // pull back along J_{-i}: k mu(D_n) -> k D_n
        let pulled = chi_d.pullback(&d_classes, &mu_classes, |g| {
            jmi.apply_group(g).expect_in_spec(d_spec).unwrap()
        });
        let target_label = bp.dual_second();
        let target_b = &table.iter().find(|(l, _)| l == &target_label).unwrap().1;
        let target = target_b.restrict(&b_classes, &mu_classes);
        let irreducible = target.inner(&mu_classes, &target).is_one();
        entries.push((
            (bp.clone(), target_label),
            pulled == target && irreducible,
        ));
    }
    LabelReport { entries }
}

/// Whether two linear maps of the group algebra agree after composing with
/// every character: equivalently, whether `J(g) - K(g)` lies in the span of
/// commutators `[a, b]` for every `g` (trace forms of the semisimple group
/// algebra vanish exactly there). Used as a desk-scale experiment for groups
/// whose character tables are not implemented.
pub fn j_maps_agree_on_all_characters(
    ctx: &Ctx,
    spec: GroupSpec,
    jmap_a: impl Fn(&MonomialMatrix) -> GroupAlgebraElement,
    jmap_b: impl Fn(&MonomialMatrix) -> GroupAlgebraElement,
) -> bool {
    let elems = spec.enumerate();
    let index: HashMap<&MonomialMatrix, usize> =
        elems.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let dim = elems.len();
    // commutator subspace as a row space
    let mut rows: Vec<Vec<CycloScalar>> = Vec::new();
    for a in &elems {
        for b in &elems {
            let mut row = vec![ctx.zero(); dim];
            let ab = index[&a.compose(b)];
            let ba = index[&b.compose(a)];
            if ab == ba {
                continue;
            }
            row[ab] = ctx.one();
            row[ba] = ctx.from_int(-1);
            rows.push(row);
        }
    }
    let mut comm = Matrix::from_rows(ctx, rows);
    let pivots = comm.rref();
    let rank = pivots.len();
    for g in &elems {
        let d = jmap_a(g).sub(&jmap_b(g));
        if d.is_zero() {
            continue;
        }
        let mut row = vec![ctx.zero(); dim];
        for (h, c) in d.terms() {
            row[index[h]] = c.clone();
        }
        // d must not increase the rank of the commutator row space
        let mut rows2: Vec<Vec<CycloScalar>> = (0..rank).map(|i| comm.row(i).to_vec()).collect();
        rows2.push(row);
        if Matrix::from_rows(ctx, rows2).rank() != rank {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// inner-automorphism witness
// ---------------------------------------------------------------------------

/// Searches for an invertible `X` with `J(u) = X u X^{-1}` for all `u`, by
/// solving the linear system `J(g) X = X g` over the listed generators and
/// scanning the nullspace for an invertible element. The returned witness is
/// verified against every group element.
pub fn find_inner_witness(
    ctx: &Ctx,
    classes: &GroupClasses,
    generators: &[MonomialMatrix],
    jmap: impl Fn(&MonomialMatrix) -> GroupAlgebraElement,
) -> Option<GroupAlgebraElement> {
    let elems = &classes.elems;
    let index: HashMap<&MonomialMatrix, usize> =
        elems.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let dim = elems.len();
    let mut rows: Vec<Vec<CycloScalar>> = Vec::new();
    for u in generators {
        let ju = jmap(u);
        // operator X |-> J(u) X - X u on the group-algebra basis
        let mut op = vec![vec![ctx.zero(); dim]; dim];
        for (col, g) in elems.iter().enumerate() {
            for (k, c) in ju.terms() {
                let h = k.compose(g);
                let r = index[&h];
                op[r][col] = op[r][col].add(c);
            }
            let h = g.compose(u);
            let r = index[&h];
            op[r][col] = op[r][col].sub(&ctx.one());
        }
        rows.extend(op);
    }
    let mat = Matrix::from_rows(ctx, rows);
    let nullspace = mat.nullspace();
    // try nullspace basis vectors, then small combinations
    let mut candidates: Vec<Vec<CycloScalar>> = nullspace.clone();
    for i in 0..nullspace.len() {
        for j in i + 1..nullspace.len() {
            let v: Vec<CycloScalar> = nullspace[i]
                .iter()
                .zip(&nullspace[j])
                .map(|(a, b)| a.add(b))
                .collect();
            candidates.push(v);
        }
    }
    for cand in candidates {
        // left-multiplication matrix must have full rank
        let mut lmat = Matrix::zero(ctx, dim, dim);
        for (col, g) in elems.iter().enumerate() {
            for (i, c) in cand.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let h = elems[i].compose(g);
                let r = index[&h];
                *lmat.at_mut(r, col) = lmat.at(r, col).add(c);
            }
        }
        if lmat.rank() < dim {
            continue;
        }
        let mut x = GroupAlgebraElement::zero(ctx, classes.spec);
        for (i, c) in cand.into_iter().enumerate() {
            x.add_term(elems[i].clone(), c);
        }
        // verify the witness on every group element
        let xinv = invert_group_algebra(ctx, classes, &x).expect("full rank but not invertible");
        let ok = elems.iter().all(|u| {
            let conj = x.mul(&GroupAlgebraElement::of(ctx, classes.spec, u.clone())).mul(&xinv);
            conj == jmap(u)
        });
        if ok {
            return Some(x);
        }
    }
    None
}

/// Inverse in the group algebra via the left-multiplication matrix.
pub fn invert_group_algebra(
    ctx: &Ctx,
    classes: &GroupClasses,
    x: &GroupAlgebraElement,
) -> Option<GroupAlgebraElement> {
    let elems = &classes.elems;
    let index: HashMap<&MonomialMatrix, usize> =
        elems.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let dim = elems.len();
    let mut lmat = Matrix::zero(ctx, dim, dim);
    for (col, g) in elems.iter().enumerate() {
        for (k, c) in x.terms() {
            let r = index[&k.compose(g)];
            *lmat.at_mut(r, col) = lmat.at(r, col).add(c);
        }
    }
    // solve L * v = e_identity
    let id_idx = index[&classes.spec.identity()];
    let mut rhs = vec![ctx.zero(); dim];
    rhs[id_idx] = ctx.one();
    let v = lmat.solve(&rhs)?;
    let mut out = GroupAlgebraElement::zero(ctx, classes.spec);
    for (i, c) in v.into_iter().enumerate() {
        out.add_term(elems[i].clone(), c);
    }
    Some(out)
}
