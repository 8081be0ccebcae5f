//! Group algebras over `Q(zeta_m)` and the `J_c` family of algebra maps on
//! the monomial-matrix group algebra.

use crate::group::{Flavor, GroupSpec, MonomialMatrix};
use crate::scalar::{ratio, Ctx, CtxExt, CycloScalar};
use std::collections::BTreeMap;
use std::fmt;

/// Finite sparse combination of group elements; zero coefficients are never
/// stored, and every key is a member of `spec`.
#[derive(Clone)]
pub struct GroupAlgebraElement {
    spec: GroupSpec,
    ctx: Ctx,
    terms: BTreeMap<MonomialMatrix, CycloScalar>,
}

impl PartialEq for GroupAlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec && self.terms == other.terms
    }
}
impl Eq for GroupAlgebraElement {}

impl GroupAlgebraElement {
    pub fn zero(ctx: &Ctx, spec: GroupSpec) -> Self {
        assert!(
            ctx.m() % spec.m == 0,
            "context m={} cannot express zeta_{}",
            ctx.m(),
            spec.m
        );
        GroupAlgebraElement { spec, ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ctx: &Ctx, spec: GroupSpec) -> Self {
        Self::of(ctx, spec, spec.identity())
    }

    pub fn of(ctx: &Ctx, spec: GroupSpec, g: MonomialMatrix) -> Self {
        let mut e = Self::zero(ctx, spec);
        e.add_term(g, ctx.one());
        e
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MonomialMatrix, &CycloScalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, g: &MonomialMatrix) -> CycloScalar {
        self.terms.get(g).cloned().unwrap_or_else(|| self.ctx.zero())
    }

    pub fn add_term(&mut self, g: MonomialMatrix, c: CycloScalar) {
        debug_assert!(
            self.spec.is_member(&g),
            "term {g} is not a member of {:?}",
            self.spec
        );
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(g);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.spec, other.spec, "group algebra spec mismatch");
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(g.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale_map(|c| c.neg())
    }

    pub fn scale(&self, s: &CycloScalar) -> Self {
        if s.is_zero() {
            return Self::zero(&self.ctx, self.spec);
        }
        self.scale_map(|c| c.mul(s))
    }

    fn scale_map(&self, f: impl Fn(&CycloScalar) -> CycloScalar) -> Self {
        let mut out = Self::zero(&self.ctx, self.spec);
        for (g, c) in &self.terms {
            out.add_term(g.clone(), f(c));
        }
        out
    }

    /// Bilinear extension of group composition.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.spec, other.spec, "group algebra spec mismatch");
        let mut out = Self::zero(&self.ctx, self.spec);
        for (g, a) in &self.terms {
            for (h, b) in &other.terms {
                out.add_term(g.compose(h), a.mul(b));
            }
        }
        out
    }

    /// Sum of coefficients; the linear extension of the trivial character.
    pub fn augmentation(&self) -> CycloScalar {
        let mut acc = self.ctx.zero();
        for c in self.terms.values() {
            acc = acc.add(c);
        }
        acc
    }

    /// Reinterprets the element over another spec (same m, n), verifying that
    /// every term is a member there.
    pub fn expect_in_spec(&self, target: GroupSpec) -> Result<Self, String> {
        let mut out = Self::zero(&self.ctx, target);
        for (g, c) in &self.terms {
            if !target.is_member(g) {
                return Err(format!("term {g} is not a member of {target:?}"));
            }
            out.add_term(g.clone(), c.clone());
        }
        Ok(out)
    }

    /// Applies a linear map given on group elements.
    pub fn map_linear(
        &self,
        target_spec: GroupSpec,
        f: impl Fn(&MonomialMatrix) -> GroupAlgebraElement,
    ) -> Self {
        let mut out = Self::zero(&self.ctx, target_spec);
        for (g, c) in &self.terms {
            let img = f(g);
            assert_eq!(img.spec, target_spec);
            for (h, d) in &img.terms {
                out.add_term(h.clone(), c.mul(d));
            }
        }
        out
    }
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(g, c)| format!("({})*{}", c, g.token()))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

// ---------------------------------------------------------------------------
// J_c maps
// ---------------------------------------------------------------------------

/// The algebra endomorphism `J_c` of the full monomial group algebra:
/// `J_c(wt) = wt * prod_{i<j, w(i)>w(j)} q_{ij}(c)` with
/// `q_{ij}(c) = 1/4 ((c + c^{-1})(1 - t_i t_j) + (c - c^{-1} + 2) t_i + (c^{-1} - c + 2) t_j)`.
///
/// `J_c(t) = t` for diagonal `t`. Defined for even `m` (the `t_i` live in the
/// group); the output is tagged with the full-monomial spec.
pub struct JMap {
    c: CycloScalar,
    ctx: Ctx,
    m: u32,
    n: usize,
    full: GroupSpec,
}

impl JMap {
    pub fn new(ctx: &Ctx, m: u32, n: usize, c: CycloScalar) -> Self {
        assert!(m % 2 == 0, "J_c needs even m");
        assert!(!c.is_zero(), "J_c needs invertible c");
        JMap {
            c,
            ctx: ctx.clone(),
            m,
            n,
            full: GroupSpec::new(m, 1, n, Flavor::FullMonomial),
        }
    }

    /// `J_1`.
    pub fn j_one(ctx: &Ctx, m: u32, n: usize) -> Self {
        Self::new(ctx, m, n, ctx.one())
    }

    /// `J_{-i}`; needs `4 | m` of the scalar context.
    pub fn j_minus_i(ctx: &Ctx, m: u32, n: usize) -> Self {
        Self::new(ctx, m, n, ctx.root_of_order(4, 1).neg())
    }

    fn t_gen(&self, i: usize) -> MonomialMatrix {
        MonomialMatrix::t_minus_one(self.m, self.n, i)
    }

    fn inversion_factor(&self, i: usize, j: usize) -> GroupAlgebraElement {
        let ctx = &self.ctx;
        let c = &self.c;
        let cinv = c.inv().unwrap();
        let quarter = ratio(1, 4);
        let two = ctx.from_int(2);
        let ti = GroupAlgebraElement::of(ctx, self.full, self.t_gen(i));
        let tj = GroupAlgebraElement::of(ctx, self.full, self.t_gen(j));
        let titj = ti.mul(&tj);
        let one = GroupAlgebraElement::one(ctx, self.full);
        // (c + c^-1)(1 - t_i t_j) + (c - c^-1 + 2) t_i + (c^-1 - c + 2) t_j, all over 4
        let a = one.sub(&titj).scale(&c.add(&cinv));
        let b = ti.scale(&c.sub(&cinv).add(&two));
        let d = tj.scale(&cinv.sub(c).add(&two));
        a.add(&b).add(&d).scale(&ctx.from_rational(quarter))
    }

    /// Image of a single group element.
    pub fn apply_group(&self, g: &MonomialMatrix) -> GroupAlgebraElement {
        assert_eq!(g.m(), self.m);
        let mut acc = GroupAlgebraElement::of(&self.ctx, self.full, g.clone());
        for i in 0..self.n {
            for j in i + 1..self.n {
                if g.perm()[i] > g.perm()[j] {
                    acc = acc.mul(&self.inversion_factor(i, j));
                }
            }
        }
        acc
    }

    /// Linear extension to group algebra elements (any spec with matching m, n).
    pub fn apply(&self, e: &GroupAlgebraElement) -> GroupAlgebraElement {
        let mut out = GroupAlgebraElement::zero(&self.ctx, self.full);
        for (g, c) in e.terms() {
            out = out.add(&self.apply_group(g).scale(c));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::CycloContext;

    fn b2_elems() -> (Ctx, GroupSpec, Vec<MonomialMatrix>) {
        let ctx = CycloContext::new(2);
        let spec = GroupSpec::b_n(2);
        let elems = spec.enumerate();
        (ctx, spec, elems)
    }

    #[test]
    fn involution_and_idempotents() {
        let (ctx, spec, _) = b2_elems();
        let s = GroupAlgebraElement::of(&ctx, spec, MonomialMatrix::refl_s(2, 2, 0, 1, 0));
        assert_eq!(s.mul(&s), GroupAlgebraElement::one(&ctx, spec));
        let one = GroupAlgebraElement::one(&ctx, spec);
        let t1 = GroupAlgebraElement::of(&ctx, spec, MonomialMatrix::t_minus_one(2, 2, 0));
        let half = ctx.from_rational(ratio(1, 2));
        let p = one.add(&t1).scale(&half);
        let q = one.sub(&t1).scale(&half);
        assert!(p.mul(&q).is_zero());
        assert_eq!(p.mul(&p), p);
    }

    #[test]
    fn j_one_on_s_matches_displayed_formula() {
        let (ctx, spec, _) = b2_elems();
        let j1 = JMap::j_one(&ctx, 2, 2);
        let s = MonomialMatrix::refl_s(2, 2, 0, 1, 0);
        let img = j1.apply_group(&s);
        // 1/2 s (1 + t_1 + t_2 - t_1 t_2)
        let t1 = MonomialMatrix::t_minus_one(2, 2, 0);
        let t2 = MonomialMatrix::t_minus_one(2, 2, 1);
        let half = ctx.from_rational(ratio(1, 2));
        let mut expected = GroupAlgebraElement::zero(&ctx, j1.full);
        expected.add_term(s.clone(), half.clone());
        expected.add_term(s.compose(&t1), half.clone());
        expected.add_term(s.compose(&t2), half.clone());
        expected.add_term(s.compose(&t1).compose(&t2), half.neg());
        assert_eq!(img, expected);
        // lands in the group algebra of B_2 and squares to 1 there
        let img_b2 = img.expect_in_spec(spec).unwrap();
        assert_eq!(img_b2.mul(&img_b2), GroupAlgebraElement::one(&ctx, spec));
        assert!(img_b2.augmentation().is_one());
    }

    #[test]
    fn j_minus_i_on_s_matches_displayed_formula() {
        let ctx = CycloContext::new(4);
        let jmi = JMap::j_minus_i(&ctx, 2, 2);
        let s = MonomialMatrix::refl_s(2, 2, 0, 1, 0);
        let img = jmi.apply_group(&s);
        // 1/2 s ((1 - i) t_1 + (1 + i) t_2)
        let i = ctx.root_of_unity(1);
        let half = ctx.from_rational(ratio(1, 2));
        let t1 = MonomialMatrix::t_minus_one(2, 2, 0);
        let t2 = MonomialMatrix::t_minus_one(2, 2, 1);
        let mut expected = GroupAlgebraElement::zero(&ctx, jmi.full);
        expected.add_term(s.compose(&t1), ctx.one().sub(&i).mul(&half));
        expected.add_term(s.compose(&t2), ctx.one().add(&i).mul(&half));
        assert_eq!(img, expected);
    }

    #[test]
    fn j_fixes_diagonals_and_inverts() {
        let ctx = CycloContext::new(4);
        let j = JMap::new(&ctx, 2, 3, ctx.from_rational(ratio(5, 7)));
        let jinv = JMap::new(&ctx, 2, 3, ctx.from_rational(ratio(7, 5)));
        let spec = GroupSpec::b_n(3);
        for g in spec.enumerate() {
            if g.is_diagonal() {
                let img = j.apply_group(&g);
                assert_eq!(img.len(), 1);
                assert!(img.coeff(&g).is_one(), "J_c(t) != t");
            }
            // J_c . J_{c^-1} = id
            let round = jinv.apply(&j.apply_group(&g));
            assert_eq!(round.len(), 1, "J composite not identity on {g}");
            assert!(round.coeff(&g).is_one());
        }
    }

    #[test]
    fn j_one_is_involution_on_b3() {
        let ctx = CycloContext::new(2);
        let j1 = JMap::j_one(&ctx, 2, 3);
        for g in GroupSpec::b_n(3).enumerate() {
            let round = j1.apply(&j1.apply_group(&g));
            assert_eq!(round.len(), 1);
            assert!(round.coeff(&g).is_one(), "J_1^2 != id at {g}");
        }
    }

    #[test]
    fn j_one_restricts_to_mystic_to_reflection_iso_when_mp_even() {
        // terms of J_1(w) stay in G(m,p,n) for w in mu(G(m,p,n)), m/p even
        let ctx = CycloContext::new(4);
        for (m, p, n) in [(2u32, 1u32, 2usize), (4, 2, 2)] {
            let j1 = JMap::j_one(&ctx, m, n);
            let refl = GroupSpec::reflection(m, p, n);
            for g in GroupSpec::mystic(m, p, n).enumerate() {
                assert!(j1.apply_group(&g).expect_in_spec(refl).is_ok());
            }
        }
    }

    #[test]
    fn j_minus_i_maps_mystic_into_reflection_both_parities() {
        let ctx = CycloContext::new(4);
        for (m, p, n) in [(2u32, 2u32, 2usize), (2, 2, 3), (2, 1, 2), (4, 2, 2)] {
            let jmi = JMap::j_minus_i(&ctx, m, n);
            let refl = GroupSpec::reflection(m, p, n);
            for g in GroupSpec::mystic(m, p, n).enumerate() {
                assert!(
                    jmi.apply_group(&g).expect_in_spec(refl).is_ok(),
                    "J_-i left G({m},{p},{n}) at {g}"
                );
            }
        }
    }

    #[test]
    fn augmentation_is_multiplicative() {
        let (ctx, spec, elems) = b2_elems();
        assert!(GroupAlgebraElement::zero(&ctx, spec).augmentation().is_zero());
        for g in &elems {
            assert!(GroupAlgebraElement::of(&ctx, spec, g.clone()).augmentation().is_one());
        }
        let a = GroupAlgebraElement::of(&ctx, spec, elems[3].clone())
            .scale(&ctx.from_int(2))
            .add(&GroupAlgebraElement::of(&ctx, spec, elems[5].clone()));
        let b = GroupAlgebraElement::of(&ctx, spec, elems[1].clone())
            .sub(&GroupAlgebraElement::of(&ctx, spec, elems[6].clone()).scale(&ctx.from_int(3)));
        assert_eq!(
            a.mul(&b).augmentation(),
            a.augmentation().mul(&b.augmentation())
        );
    }
}
