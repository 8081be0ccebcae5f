//! Symmetric and skew (q = -1) polynomial arithmetic, invariant generators,
//! graded ideals, coinvariant algebras, group actions and traces on the
//! quotients.

mod restricted;

pub use restricted::{
    center_basis, check_restricted_iso_even_case, check_restricted_iso_even_case_with_f,
    gamma_witness, gamma_witness_checksum,
    split_into_idempotents, trace_invariance_on_restricted, verify_not_isom_witness,
    FiniteAlgebra, NotIsomReport,
    RestrictedAlgebra,
};

use crate::group::{GroupSpec, MonomialMatrix};
use crate::linalg::Matrix;
use crate::lin::Lin;
use crate::scalar::{Ctx, CtxExt, CycloScalar};
use crate::twist::{GroupCarrier, TTensor};
use std::collections::BTreeMap;

pub type Monomial = Vec<u32>;
pub type PolyElem = Lin<Monomial>;

/// The (skew) polynomial ring on `x_1..x_n`: `sign = -1` means
/// `x_j x_i = -x_i x_j` for `i != j`, realized by sign bookkeeping on the
/// standard-monomial basis.
#[derive(Clone)]
pub struct PolyRing {
    pub ctx: Ctx,
    pub n: usize,
    pub skew: bool,
}

impl PolyRing {
    pub fn new(ctx: &Ctx, n: usize, skew: bool) -> Self {
        PolyRing { ctx: ctx.clone(), n, skew }
    }

    pub fn one(&self) -> PolyElem {
        Lin::basis(&self.ctx, vec![0; self.n])
    }

    pub fn x(&self, i: usize) -> PolyElem {
        let mut m = vec![0; self.n];
        m[i] = 1;
        Lin::basis(&self.ctx, m)
    }

    /// Sign of straightening the concatenation `a * b` into the standard
    /// monomial: one factor of `sign` per crossing of generator letters.
    fn straighten_sign(&self, a: &[u32], b: &[u32]) -> bool {
        if !self.skew {
            return false;
        }
        let mut crossings = 0u64;
        for i in 0..self.n {
            for j in 0..i {
                crossings += a[i] as u64 * b[j] as u64;
            }
        }
        crossings % 2 == 1
    }

    pub fn mono_mul(&self, a: &[u32], b: &[u32]) -> (Monomial, bool) {
        let m = a.iter().zip(b).map(|(x, y)| x + y).collect();
        (m, self.straighten_sign(a, b))
    }

    pub fn mul(&self, a: &PolyElem, b: &PolyElem) -> PolyElem {
        let mut out = Lin::zero();
        for (ma, ca) in a.iter() {
            for (mb, cb) in b.iter() {
                let (m, neg) = self.mono_mul(ma, mb);
                let c = ca.mul(cb);
                out.add_term(m, if neg { c.neg() } else { c });
            }
        }
        out
    }

    /// Action of a monomial matrix: `g |> x^a = prod g(x_i)^{a_i}` with the
    /// skew reordering sign; `dual` uses the action on the `y`-side instead.
    pub fn act(&self, g: &MonomialMatrix, p: &PolyElem, dual: bool) -> PolyElem {
        let mut out = Lin::zero();
        for (mono, c) in p.iter() {
            let mut target = vec![0u32; self.n];
            let mut root_exp: i64 = 0;
            for i in 0..self.n {
                if mono[i] == 0 {
                    continue;
                }
                let (j, e) = if dual { g.act_on_y(i) } else { g.act_on_x(i) };
                target[j] = mono[i];
                root_exp += e as i64 * mono[i] as i64;
            }
            // skew sign: pairs i<j with perm(i) > perm(j) cross a_i a_j letters
            let mut neg = false;
            if self.skew {
                let mut crossings = 0u64;
                for i in 0..self.n {
                    for j in i + 1..self.n {
                        if g.perm()[i] > g.perm()[j] {
                            crossings += mono[i] as u64 * mono[j] as u64;
                        }
                    }
                }
                neg = crossings % 2 == 1;
            }
            let mut coeff = c.mul(&self.ctx.root_of_order(g.m(), root_exp));
            if neg {
                coeff = coeff.neg();
            }
            out.add_term(target, coeff);
        }
        out
    }

    /// `gamma_i |> x^a = (-1)^{a_i} x^a`.
    pub fn gamma_sign(&self, i: usize, mono: &[u32]) -> bool {
        mono[i] % 2 == 1
    }

    pub fn degree(&self, p: &PolyElem) -> u32 {
        p.iter().map(|(m, _)| m.iter().sum()).max().unwrap_or(0)
    }
}

/// The invariant generators `p_k = sum_i x_i^{km}` for `k = 1..n-1` and
/// `r = (x_1 .. x_n)^{m/p}`, in the given ring.
pub fn invariant_generators(ring: &PolyRing, m: u32, p: u32) -> Vec<PolyElem> {
    let n = ring.n;
    let mut gens = Vec::new();
    for k in 1..n as u32 {
        let mut g = Lin::zero();
        for i in 0..n {
            let mut mono = vec![0u32; n];
            mono[i] = k * m;
            g.add_term(mono, ring.ctx.one());
        }
        gens.push(g);
    }
    gens.push(Lin::basis(&ring.ctx, vec![m / p; n]));
    gens
}

/// Degrees `{m, 2m, .., (n-1)m, n m/p}` of the invariant generators.
pub fn generator_degrees(m: u32, p: u32, n: usize) -> Vec<u32> {
    let mut d: Vec<u32> = (1..n as u32).map(|k| k * m).collect();
    d.push(n as u32 * (m / p));
    d
}

fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, d: u32, prefix: &mut Monomial, out: &mut Vec<Monomial>) {
        if prefix.len() == n - 1 {
            let mut m = prefix.clone();
            m.push(d);
            out.push(m);
            return;
        }
        for k in (0..=d).rev() {
            prefix.push(k);
            rec(n, d - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

/// Monomials of one degree sorted descending in lex order (x_1 largest), so
/// that row reduction pivots on the largest monomials and the quotient keeps
/// the lexicographically smallest ones.
fn degree_columns(n: usize, d: u32) -> Vec<Monomial> {
    let mut monos = monomials_of_degree(n, d);
    monos.sort_by(|a, b| b.cmp(a));
    monos
}

/// Row-reduced homogeneous components of the two-sided ideal generated by
/// `gens`, realized by left multiples (monomials quasi-commute with the
/// generators up to sign, so left multiples span; a two-sided cross-check is
/// in the tests).
pub struct GradedIdeal {
    ring: PolyRing,
    /// per degree: (columns, pivot row per pivot, pivot col -> row, reps)
    degrees: Vec<IdealDegree>,
}

struct IdealDegree {
    columns: Vec<Monomial>,
    col_index: BTreeMap<Monomial, usize>,
    rows: Vec<Vec<CycloScalar>>,
    pivot_of_col: BTreeMap<usize, usize>,
    reps: Vec<Monomial>,
}

impl GradedIdeal {
    pub fn new(ring: &PolyRing, gens: &[PolyElem], max_degree: u32) -> Self {
        let mut degrees = Vec::new();
        for d in 0..=max_degree {
            degrees.push(Self::build_degree(ring, gens, d, false));
        }
        GradedIdeal { ring: ring.clone(), degrees }
    }

    /// Same spans built from two-sided products, for the cross-check.
    pub fn new_two_sided(ring: &PolyRing, gens: &[PolyElem], max_degree: u32) -> Self {
        let mut degrees = Vec::new();
        for d in 0..=max_degree {
            degrees.push(Self::build_degree(ring, gens, d, true));
        }
        GradedIdeal { ring: ring.clone(), degrees }
    }

    fn build_degree(ring: &PolyRing, gens: &[PolyElem], d: u32, two_sided: bool) -> IdealDegree {
        let columns = degree_columns(ring.n, d);
        let col_index: BTreeMap<Monomial, usize> =
            columns.iter().cloned().zip(0..).collect();
        let mut raw_rows: Vec<Vec<CycloScalar>> = Vec::new();
        let to_row = |p: &PolyElem| -> Vec<CycloScalar> {
            let mut row = vec![ring.ctx.zero(); columns.len()];
            for (m, c) in p.iter() {
                row[col_index[m]] = c.clone();
            }
            row
        };
        for gen in gens {
            let gd = ring.degree(gen);
            if gd > d {
                continue;
            }
            for left in monomials_of_degree(ring.n, d - gd) {
                let prod = ring.mul(&Lin::basis(&ring.ctx, left.clone()), gen);
                raw_rows.push(to_row(&prod));
                if two_sided {
                    for rd in 0..=(d - gd) {
                        let ld = d - gd - rd;
                        for l2 in monomials_of_degree(ring.n, ld) {
                            for r2 in monomials_of_degree(ring.n, rd) {
                                let prod = ring.mul(
                                    &ring.mul(&Lin::basis(&ring.ctx, l2.clone()), gen),
                                    &Lin::basis(&ring.ctx, r2.clone()),
                                );
                                raw_rows.push(to_row(&prod));
                            }
                        }
                    }
                }
            }
        }
        let (rows, pivots) = if raw_rows.is_empty() {
            (Vec::new(), Vec::new())
        } else {
            let mut mat = Matrix::from_rows(&ring.ctx, raw_rows);
            let pivots = mat.rref();
            let rows = (0..pivots.len()).map(|i| mat.row(i).to_vec()).collect();
            (rows, pivots)
        };
        let pivot_of_col: BTreeMap<usize, usize> =
            pivots.iter().enumerate().map(|(r, &c)| (c, r)).collect();
        let reps = columns
            .iter()
            .enumerate()
            .filter(|(ci, _)| !pivot_of_col.contains_key(ci))
            .map(|(_, m)| m.clone())
            .collect();
        IdealDegree { columns, col_index, rows, pivot_of_col, reps }
    }

    pub fn max_degree(&self) -> u32 {
        self.degrees.len() as u32 - 1
    }

    pub fn dim_at(&self, d: u32) -> usize {
        self.degrees[d as usize].rows.len()
    }

    pub fn reps_at(&self, d: u32) -> &[Monomial] {
        &self.degrees[d as usize].reps
    }

    /// Row space at one degree, as RREF row vectors over the descending
    /// column order.
    pub fn rows_at(&self, d: u32) -> (&[Monomial], &[Vec<CycloScalar>]) {
        let deg = &self.degrees[d as usize];
        (&deg.columns, &deg.rows)
    }

    /// Reduces a homogeneous-by-parts element modulo the ideal; the result
    /// is supported on representative monomials.
    pub fn reduce(&self, p: &PolyElem) -> PolyElem {
        // split by degree
        let mut by_degree: BTreeMap<u32, Vec<(Monomial, CycloScalar)>> = BTreeMap::new();
        for (m, c) in p.iter() {
            by_degree
                .entry(m.iter().sum())
                .or_default()
                .push((m.clone(), c.clone()));
        }
        let mut out = Lin::zero();
        for (d, terms) in by_degree {
            assert!(
                d <= self.max_degree(),
                "degree {d} exceeds the ideal table (max {})",
                self.max_degree()
            );
            let deg = &self.degrees[d as usize];
            let mut vec = vec![self.ring.ctx.zero(); deg.columns.len()];
            for (m, c) in terms {
                let ci = deg.col_index[&m];
                vec[ci] = vec[ci].add(&c);
            }
            // eliminate pivot coordinates
            for (&col, &row) in &deg.pivot_of_col {
                if vec[col].is_zero() {
                    continue;
                }
                let f = vec[col].clone();
                for (j, r) in deg.rows[row].iter().enumerate() {
                    if !r.is_zero() {
                        vec[j] = vec[j].sub(&f.mul(r));
                    }
                }
            }
            for (j, c) in vec.into_iter().enumerate() {
                if !c.is_zero() {
                    out.add_term(deg.columns[j].clone(), c);
                }
            }
        }
        out
    }

    pub fn contains(&self, p: &PolyElem) -> bool {
        self.reduce(p).is_zero()
    }

    /// Per-degree row spaces agree with another ideal table.
    pub fn equals_per_degree(&self, other: &GradedIdeal, up_to: u32) -> bool {
        for d in 0..=up_to {
            let (ca, ra) = self.rows_at(d);
            let (cb, rb) = other.rows_at(d);
            if ca != cb || ra.len() != rb.len() {
                return false;
            }
            if ra != rb {
                return false; // RREF is canonical per row space
            }
        }
        true
    }
}

/// A coinvariant algebra `S(V)/I` (or its skew analogue), with per-degree
/// row-reduced ideal bases and chosen monomial representatives.
pub struct CoinvariantQuotient {
    pub ring: PolyRing,
    pub spec: GroupSpec,
    pub dual: bool,
    pub ideal: GradedIdeal,
    pub top: u32,
    pub reps: Vec<Monomial>,
    pub graded_dims: Vec<usize>,
    index: BTreeMap<Monomial, usize>,
}

impl CoinvariantQuotient {
    /// Builds the quotient for the group action on the x-side (`dual =
    /// false`) or on the dual side. `skew` selects the ring. The ideal table
    /// extends to `2 * top` so that products of representatives reduce.
    pub fn new(ctx: &Ctx, spec: GroupSpec, skew: bool, dual: bool) -> Self {
        let ring = PolyRing::new(ctx, spec.n, skew);
        let gens = invariant_generators(&ring, spec.m, spec.p);
        // every generator must be invariant under the acting group
        for gen in &gens {
            for g in spec.enumerate() {
                let acted = ring.act(&g, gen, dual);
                assert!(
                    acted == *gen,
                    "invariant generator moved by {g} (dual = {dual})"
                );
            }
        }
        let degrees = generator_degrees(spec.m, spec.p, spec.n);
        let top: u32 = degrees.iter().map(|d| d - 1).sum::<u32>() + 1;
        let ideal = GradedIdeal::new(&ring, &gens, 2 * top);
        let mut reps = Vec::new();
        let mut graded_dims = Vec::new();
        for d in 0..=top {
            let r = ideal.reps_at(d);
            graded_dims.push(r.len());
            reps.extend(r.iter().cloned());
        }
        assert_eq!(
            *graded_dims.last().unwrap(),
            0,
            "quotient not exhausted at the top degree bound"
        );
        while graded_dims.last() == Some(&0) {
            graded_dims.pop();
        }
        let expected = spec.expected_order() as usize;
        let total: usize = graded_dims.iter().sum();
        assert_eq!(total, expected, "coinvariant dimension != |group|");
        let index = reps.iter().cloned().zip(0..).collect();
        CoinvariantQuotient { ring, spec, dual, ideal, top, reps, graded_dims, index }
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn reduce(&self, p: &PolyElem) -> PolyElem {
        self.ideal.reduce(p)
    }

    pub fn mul(&self, a: &PolyElem, b: &PolyElem) -> PolyElem {
        self.reduce(&self.ring.mul(a, b))
    }

    /// Matrix of the group action on the representative basis.
    pub fn action_matrix(&self, g: &MonomialMatrix) -> Matrix {
        let ctx = &self.ring.ctx;
        let mut mat = Matrix::zero(ctx, self.dim(), self.dim());
        for (col, rep) in self.reps.iter().enumerate() {
            let acted = self.reduce(&self.ring.act(g, &Lin::basis(ctx, rep.clone()), self.dual));
            for (m, c) in acted.iter() {
                *mat.at_mut(self.index[m], col) = c.clone();
            }
        }
        mat
    }

    /// Trace of the group element on the quotient.
    pub fn trace(&self, g: &MonomialMatrix) -> CycloScalar {
        let ctx = &self.ring.ctx;
        let mut acc = ctx.zero();
        for rep in &self.reps {
            let acted = self.reduce(&self.ring.act(g, &Lin::basis(ctx, rep.clone()), self.dual));
            acc = acc.add(&acted.coeff(rep, ctx));
        }
        acc
    }

    /// The character afforded by the quotient equals the regular character:
    /// `|G|` at the identity and `0` elsewhere.
    pub fn affords_regular_representation(&self) -> bool {
        let ctx = &self.ring.ctx;
        for g in self.spec.enumerate() {
            let expected = if g.is_identity() {
                ctx.from_int(self.spec.expected_order() as i64)
            } else {
                ctx.zero()
            };
            if self.trace(&g) != expected {
                return false;
            }
        }
        true
    }

    /// The ideal is stable under the T-action (gamma_i flips monomial signs).
    pub fn ideal_is_t_stable(&self) -> bool {
        for d in 0..=self.top {
            let (cols, rows) = self.ideal.rows_at(d);
            for row in rows {
                for i in 0..self.ring.n {
                    let mut acted = Lin::zero();
                    for (j, c) in row.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let m = &cols[j];
                        let c = if self.ring.gamma_sign(i, m) { c.neg() } else { c.clone() };
                        acted.add_term(m.clone(), c);
                    }
                    if !self.ideal.contains(&acted) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

// ---------------------------------------------------------------------------
// T-action carriers for the polynomial ring and for the quotient
// ---------------------------------------------------------------------------

/// `S(V)` (or its skew analogue) as a `kT`-module algebra: `gamma_i` flips
/// the sign of `x_i`.
pub struct PolyCarrier {
    pub ring: PolyRing,
}

impl crate::twist::TwistCarrier for PolyCarrier {
    type B = Monomial;

    fn gamma_count(&self) -> usize {
        self.ring.n
    }

    fn ctx(&self) -> &Ctx {
        &self.ring.ctx
    }

    fn gamma(&self, i: usize, b: &Monomial) -> (Monomial, bool) {
        (b.clone(), self.ring.gamma_sign(i, b))
    }

    fn mul_basis(&self, a: &Monomial, b: &Monomial) -> Lin<Monomial> {
        let (m, neg) = self.ring.mono_mul(a, b);
        let one = self.ring.ctx.one();
        Lin::of(m, if neg { one.neg() } else { one })
    }

    fn unit(&self) -> Monomial {
        vec![0; self.ring.n]
    }

    fn basis_sample(&self) -> Vec<Monomial> {
        let mut out = Vec::new();
        for d in 0..=3u32 {
            out.extend(monomials_of_degree(self.ring.n, d));
        }
        out
    }
}

/// A coinvariant quotient as a `kT`-module algebra on its representative
/// monomials (the ideal is T-stable, so the diagonal action descends).
pub struct QuotientCarrier<'a> {
    pub q: &'a CoinvariantQuotient,
}

impl crate::twist::TwistCarrier for QuotientCarrier<'_> {
    type B = Monomial;

    fn gamma_count(&self) -> usize {
        self.q.ring.n
    }

    fn ctx(&self) -> &Ctx {
        &self.q.ring.ctx
    }

    fn gamma(&self, i: usize, b: &Monomial) -> (Monomial, bool) {
        (b.clone(), self.q.ring.gamma_sign(i, b))
    }

    fn mul_basis(&self, a: &Monomial, b: &Monomial) -> Lin<Monomial> {
        let ctx = &self.q.ring.ctx;
        self.q.mul(&Lin::basis(ctx, a.clone()), &Lin::basis(ctx, b.clone()))
    }

    fn unit(&self) -> Monomial {
        vec![0; self.q.ring.n]
    }

    fn basis_sample(&self) -> Vec<Monomial> {
        self.q.reps.clone()
    }
}

/// `phi` intertwines the `W`-action on the skew coinvariant algebra with the
/// Giaquinto-Zhang twist of the `G`-action on the commutative one: for every
/// `w` in the mystic group, the action matrix of `w` equals
/// `sum_F coeff . action(gamma_S |> phi(w)) . diag(gamma_T)`. Needs `m/p`
/// even (where `phi` is realized as `eta^{-1} J_1`).
pub fn check_phi_intertwines_quotient_actions(ctx: &Ctx, m: u32, p: u32, n: usize) -> bool {
    let phi = crate::cherednik::PhiMap::new(ctx, m, p, n);
    let skew_q = CoinvariantQuotient::new(ctx, GroupSpec::mystic(m, p, n), true, false);
    let comm_q = CoinvariantQuotient::new(ctx, GroupSpec::reflection(m, p, n), false, false);
    assert_eq!(skew_q.reps, comm_q.reps, "quotients not on the same reps");
    let f = crate::twist::cocycle_f(n);
    let carrier = GroupCarrier::new(ctx, comm_q.spec);
    let dim = comm_q.dim();
    let act = |a: &crate::galg::GroupAlgebraElement| -> Matrix {
        let mut acc = Matrix::zero(ctx, dim, dim);
        for (g, c) in a.terms() {
            let mg = comm_q.action_matrix(g);
            for i in 0..dim {
                for j in 0..dim {
                    let add = mg.at(i, j).mul(c);
                    *acc.at_mut(i, j) = acc.at(i, j).add(&add);
                }
            }
        }
        acc
    };
    for w in GroupSpec::mystic(m, p, n).enumerate() {
        let lhs = skew_q.action_matrix(&w);
        let phi_w = phi.apply_group(&w);
        let mut rhs = Matrix::zero(ctx, dim, dim);
        for ((s, t), coeff) in &f.terms {
            // gamma_S |> phi(w) by conjugation, then the G-action, then the
            // diagonal gamma_T on representatives
            let mut lin = Lin::zero();
            for (g, c) in phi_w.terms() {
                lin.add_term(g.clone(), c.clone());
            }
            let ga = crate::twist::gamma_mask_lin(&carrier, *s, &lin);
            let mut ga_elem = crate::galg::GroupAlgebraElement::zero(ctx, comm_q.spec);
            for (g, c) in ga.iter() {
                ga_elem.add_term(g.clone(), c.clone());
            }
            let mat = act(&ga_elem);
            for (col, rep) in comm_q.reps.iter().enumerate() {
                let mut neg = false;
                for k in 0..n {
                    if t & (1 << k) != 0 && comm_q.ring.gamma_sign(k, rep) {
                        neg = !neg;
                    }
                }
                let mut scale = ctx.from_rational(coeff.clone());
                if neg {
                    scale = scale.neg();
                }
                for row in 0..dim {
                    let add = mat.at(row, col).mul(&scale);
                    *rhs.at_mut(row, col) = rhs.at(row, col).add(&add);
                }
            }
        }
        if !lhs.equals(&rhs) {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// checks connecting the commutative and skew coinvariant algebras
// ---------------------------------------------------------------------------

/// `S_W`-product equals the `F`-twisted `S_G`-product on all pairs of
/// quotient representatives.
pub fn check_twisted_coinvariant_product(
    skew_q: &CoinvariantQuotient,
    comm_q: &CoinvariantQuotient,
    f: &TTensor,
) -> bool {
    assert_eq!(skew_q.reps, comm_q.reps, "quotients not on the same reps");
    let ctx = &comm_q.ring.ctx;
    for a in &skew_q.reps {
        for b in &skew_q.reps {
            let skew_ambient = skew_q
                .ring
                .mul(&Lin::basis(ctx, a.clone()), &Lin::basis(ctx, b.clone()));
            // twisted commutative product: F acts diagonally on monomials
            let mut twisted_ambient = Lin::zero();
            for ((s, t), coeff) in &f.terms {
                let mut neg = false;
                for i in 0..comm_q.ring.n {
                    if s & (1 << i) != 0 && comm_q.ring.gamma_sign(i, a) {
                        neg = !neg;
                    }
                    if t & (1 << i) != 0 && comm_q.ring.gamma_sign(i, b) {
                        neg = !neg;
                    }
                }
                let mut c = ctx.from_rational(coeff.clone());
                if neg {
                    c = c.neg();
                }
                twisted_ambient.add_assign(
                    &comm_q
                        .ring
                        .mul(&Lin::basis(ctx, a.clone()), &Lin::basis(ctx, b.clone()))
                        .scale(&c),
                );
            }
            // the products agree on the shared underlying space and hence in
            // the quotient
            if skew_ambient != twisted_ambient {
                return false;
            }
            if skew_q.reduce(&skew_ambient) != comm_q.reduce(&twisted_ambient) {
                return false;
            }
        }
    }
    true
}

/// `Tr(a |>) = Tr(a |>_F)` on the quotient carrier for a group algebra
/// element `a`; the twisted action is `a |>_F v = sum_F (gamma |> a) |>
/// (gamma' |> v)`.
pub fn trace_invariance_check(
    q: &CoinvariantQuotient,
    f: &TTensor,
    a: &crate::galg::GroupAlgebraElement,
) -> bool {
    let ctx = &q.ring.ctx;
    let carrier = GroupCarrier::new(ctx, q.spec);
    let act_matrix = |e: &crate::galg::GroupAlgebraElement| -> Matrix {
        let mut acc = Matrix::zero(ctx, q.dim(), q.dim());
        for (g, c) in e.terms() {
            let m = q.action_matrix(g);
            for i in 0..q.dim() {
                for j in 0..q.dim() {
                    let add = m.at(i, j).mul(c);
                    *acc.at_mut(i, j) = acc.at(i, j).add(&add);
                }
            }
        }
        acc
    };
    let trace = |m: &Matrix| {
        let mut t = ctx.zero();
        for i in 0..q.dim() {
            t = t.add(m.at(i, i));
        }
        t
    };
    let plain = trace(&act_matrix(a));
    // twisted trace
    let mut twisted = ctx.zero();
    for ((s, t), coeff) in &f.terms {
        let ga = crate::twist::gamma_mask_lin(&carrier, *s, &{
            let mut l = Lin::zero();
            for (g, c) in a.terms() {
                l.add_term(g.clone(), c.clone());
            }
            l
        });
        let mut ga_elem = crate::galg::GroupAlgebraElement::zero(ctx, q.spec);
        for (g, c) in ga.iter() {
            ga_elem.add_term(g.clone(), c.clone());
        }
        let m = act_matrix(&ga_elem);
        // gamma_t acts diagonally on reps
        let mut tr = ctx.zero();
        for (i, rep) in q.reps.iter().enumerate() {
            let mut neg = false;
            for k in 0..q.ring.n {
                if t & (1 << k) != 0 && q.ring.gamma_sign(k, rep) {
                    neg = !neg;
                }
            }
            let d = if neg { m.at(i, i).neg() } else { m.at(i, i).clone() };
            tr = tr.add(&d);
        }
        twisted = twisted.add(&tr.mul(&ctx.from_rational(coeff.clone())));
    }
    plain == twisted
}

/// `chi_{kG} . phi = chi_{kW}` elementwise over the enumerated group: the
/// regular character pulled back along `phi` (realized as `eta^{-1} J_1`).
pub fn reg_char_intertwine_check(ctx: &Ctx, m: u32, p: u32, n: usize) -> bool {
    let phi = crate::cherednik::PhiMap::new(ctx, m, p, n);
    let spec = phi.spec();
    let order = ctx.from_int(spec.expected_order() as i64);
    let identity = spec.identity();
    for w in phi.elements() {
        let img = phi.apply_group(w);
        // chi_{kG} of the image: |G| * coefficient of the identity
        let lhs = img.coeff(&identity).mul(&order);
        let rhs = if w.is_identity() { order.clone() } else { ctx.zero() };
        if lhs != rhs {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cherednik::{AlgebraFlavor, CherednikParams, NormalWord};
    use crate::galg::GroupAlgebraElement;
    use crate::scalar::{rat, ratio, CycloContext, Rational};
    use crate::twist::cocycle_f;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn skew_multiplication_signs() {
        let ctx = CycloContext::new(2);
        let ring = PolyRing::new(&ctx, 2, true);
        // x_2 * x_1 = -x_1 x_2
        let prod = ring.mul(&ring.x(1), &ring.x(0));
        assert_eq!(prod, Lin::of(vec![1, 1], ctx.from_int(-1)));
        // x_1 * x_1 = x_1^2
        assert_eq!(ring.mul(&ring.x(0), &ring.x(0)), Lin::basis(&ctx, vec![2, 0]));
        // (x_1 x_2) * (x_1 x_2) = -x_1^2 x_2^2
        let m = Lin::basis(&ctx, vec![1u32, 1]);
        assert_eq!(ring.mul(&m, &m), Lin::of(vec![2, 2], ctx.from_int(-1)));
    }

    #[test]
    fn invariant_generator_shapes() {
        let ctx = CycloContext::new(2);
        let ring = PolyRing::new(&ctx, 2, true);
        // (2,2,2): {x1^2 + x2^2, x1 x2}
        let gens = invariant_generators(&ring, 2, 2);
        assert_eq!(gens.len(), 2);
        let mut p1 = Lin::basis(&ctx, vec![2, 0]);
        p1.add_assign(&Lin::basis(&ctx, vec![0, 2]));
        assert_eq!(gens[0], p1);
        assert_eq!(gens[1], Lin::basis(&ctx, vec![1, 1]));
        // (2,1,2): {x1^2 + x2^2, x1^2 x2^2}
        let gens = invariant_generators(&ring, 2, 1);
        assert_eq!(gens[1], Lin::basis(&ctx, vec![2, 2]));
        // invariance of x1 x2 under sigma in the skew ring
        let sg = MonomialMatrix::mystic_sigma(2, 2, 0, 1, 0);
        assert_eq!(ring.act(&sg, &gens_r(&ring), false), gens_r(&ring));
        fn gens_r(ring: &PolyRing) -> PolyElem {
            Lin::basis(&ring.ctx, vec![1, 1])
        }
    }

    #[test]
    fn graded_ideal_dimensions_and_equality() {
        let ctx = CycloContext::new(2);
        // mu(G(2,2,2)): ideal at degree 2 is span{x1^2+x2^2, x1 x2}, dim 2
        let skew = PolyRing::new(&ctx, 2, true);
        let gens_w = invariant_generators(&skew, 2, 2);
        let ideal_w = GradedIdeal::new(&skew, &gens_w, 6);
        assert_eq!(ideal_w.dim_at(2), 2);
        assert_eq!(ideal_w.dim_at(1), 0);
        assert_eq!(ideal_w.dim_at(0), 0);
        // I_G = I_W per degree <= 6 for (2,2,2)
        let comm = PolyRing::new(&ctx, 2, false);
        let gens_g = invariant_generators(&comm, 2, 2);
        let ideal_g = GradedIdeal::new(&comm, &gens_g, 6);
        assert!(ideal_g.equals_per_degree(&ideal_w, 6));
        // one-sided vs two-sided spans agree at low degree
        let two_sided = GradedIdeal::new_two_sided(&skew, &gens_w, 4);
        assert!(ideal_w.equals_per_degree(&two_sided, 4));
        let two_sided_b2 = {
            let gens = invariant_generators(&comm, 2, 1);
            (
                GradedIdeal::new(&comm, &gens, 4),
                GradedIdeal::new_two_sided(&comm, &gens, 4),
            )
        };
        assert!(two_sided_b2.0.equals_per_degree(&two_sided_b2.1, 4));
    }

    #[test]
    fn coinvariant_quotients_and_regular_characters() {
        let ctx = CycloContext::new(2);
        // mu(G(2,2,2)): graded dims (1,2,1), total 4
        let q = CoinvariantQuotient::new(&ctx, GroupSpec::mystic(2, 2, 2), true, false);
        assert_eq!(q.graded_dims, vec![1, 2, 1]);
        assert_eq!(q.dim(), 4);
        assert!(q.ideal_is_t_stable());
        assert!(q.affords_regular_representation());
        // spot values: trace 4 at identity, 0 at sigma
        assert_eq!(q.trace(&q.spec.identity()), ctx.from_int(4));
        let sg = MonomialMatrix::mystic_sigma(2, 2, 0, 1, 0);
        assert!(q.trace(&sg).is_zero());

        // G(2,1,1): dims (1,1), total 2
        let q = CoinvariantQuotient::new(&ctx, GroupSpec::b_n(1), false, false);
        assert_eq!(q.graded_dims, vec![1, 1]);
        assert!(q.affords_regular_representation());

        // G(2,1,2): total 8, regular; t_1 has trace 0
        let q = CoinvariantQuotient::new(&ctx, GroupSpec::b_n(2), false, false);
        assert_eq!(q.dim(), 8);
        assert!(q.affords_regular_representation());
        assert!(q.trace(&MonomialMatrix::t_minus_one(2, 2, 0)).is_zero());

        // G(2,2,2) commutative side
        let q = CoinvariantQuotient::new(&ctx, GroupSpec::d_n(2), false, false);
        assert_eq!(q.dim(), 4);
        assert!(q.affords_regular_representation());
    }

    #[test]
    fn quotient_multiplication_is_representative_independent() {
        let ctx = CycloContext::new(2);
        let q = CoinvariantQuotient::new(&ctx, GroupSpec::mystic(2, 2, 2), true, false);
        // (rep + ideal element) * rep reduces to rep * rep
        let rep = Lin::basis(&ctx, vec![1u32, 0]);
        let ideal_elem = {
            let mut p = Lin::basis(&ctx, vec![2u32, 0]);
            p.add_assign(&Lin::basis(&ctx, vec![0u32, 2]));
            p
        };
        assert!(q.ideal.contains(&ideal_elem));
        let shifted = rep.add(&ideal_elem);
        assert_eq!(q.mul(&shifted, &rep), q.mul(&rep, &rep));
    }

    #[test]
    fn hilbert_series_of_skew_invariants() {
        // per-degree dimension of S_{-1}(V)^{mu(G)} equals the free
        // commutative series on the generator degrees
        let cases = [(2u32, 2u32, 2usize, 2u32), (4, 2, 2, 4)];
        for (m, p, n, _) in cases {
            let ctx = CycloContext::new(m);
            let ring = PolyRing::new(&ctx, n, true);
            let spec = GroupSpec::mystic(m, p, n);
            let degrees = generator_degrees(m, p, n);
            let top: u32 = degrees.iter().map(|d| d - 1).sum::<u32>() + 1;
            let elems = spec.enumerate();
            for d in 0..=(2 * top) {
                // invariant dimension = nullity of stacked (g - id) actions
                let monos = monomials_of_degree(n, d);
                let index: BTreeMap<Monomial, usize> =
                    monos.iter().cloned().zip(0..).collect();
                let mut rows = Vec::new();
                for g in &elems {
                    for mono in &monos {
                        let mut row = vec![ctx.zero(); monos.len()];
                        let acted = ring.act(g, &Lin::basis(&ctx, mono.clone()), false);
                        for (m2, c) in acted.iter() {
                            row[index[m2]] = row[index[m2]].add(c);
                        }
                        row[index[mono]] = row[index[mono]].sub(&ctx.one());
                        rows.push(row);
                    }
                }
                let nullity = monos.len() - Matrix::from_rows(&ctx, rows).rank();
                // coefficient of q^d in prod 1/(1 - q^{d_i})
                let mut series = vec![0usize; (2 * top + 1) as usize];
                series[0] = 1;
                for &di in &degrees {
                    for k in di as usize..series.len() {
                        series[k] += series[k - di as usize];
                    }
                }
                assert_eq!(nullity, series[d as usize], "degree {d} of ({m},{p},{n})");
            }
        }
    }

    #[test]
    fn twisted_coinvariant_product_matches_skew_product() {
        let ctx = CycloContext::new(2);
        let skew_q = CoinvariantQuotient::new(&ctx, GroupSpec::mystic(2, 2, 2), true, false);
        let comm_q = CoinvariantQuotient::new(&ctx, GroupSpec::d_n(2), false, false);
        let f = cocycle_f(2);
        assert!(check_twisted_coinvariant_product(&skew_q, &comm_q, &f));
        // degree-0 pairs trivially equal is implied; mutation: dropping the
        // sign bookkeeping (using the commutative quotient on the left) fails
        assert!(!check_twisted_coinvariant_product(&comm_q, &comm_q, &f));
    }

    #[test]
    fn trace_invariance_on_quotients() {
        let ctx = CycloContext::new(2);
        let q = CoinvariantQuotient::new(&ctx, GroupSpec::d_n(2), false, false);
        let f = cocycle_f(2);
        let spec = q.spec;
        // torus elements and the identity
        for g in spec.enumerate() {
            let a = GroupAlgebraElement::of(&ctx, spec, g);
            assert!(trace_invariance_check(&q, &f, &a));
        }
        // 20 randomized group algebra elements
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let elems = spec.enumerate();
        for _ in 0..20 {
            let mut a = GroupAlgebraElement::zero(&ctx, spec);
            for _ in 0..3 {
                let g = elems[rng.gen_range(0..elems.len())].clone();
                let c = ctx.from_rational(ratio(rng.gen_range(-5..=5), rng.gen_range(1..=3)));
                a = a.add(&GroupAlgebraElement::of(&ctx, spec, g).scale(&c));
            }
            assert!(trace_invariance_check(&q, &f, &a));
        }
        // phi(sigma) on the coinvariant carrier of G(2,1,2)
        let q2 = CoinvariantQuotient::new(&ctx, GroupSpec::b_n(2), false, false);
        let phi = crate::cherednik::PhiMap::new(&ctx, 2, 1, 2);
        let sg = MonomialMatrix::mystic_sigma(2, 2, 0, 1, 0);
        let a = phi.apply_group(&sg);
        assert!(trace_invariance_check(&q2, &cocycle_f(2), &a));
    }

    #[test]
    fn regular_character_lemma() {
        let ctx = CycloContext::new(2);
        assert!(reg_char_intertwine_check(&ctx, 2, 1, 2));
    }

    #[test]
    fn restricted_algebra_dimensions_and_relations() {
        let ctx = CycloContext::new(2);
        for c in [rat(1), ratio(5, 7)] {
            // rank 1: dim 8, x^2 = y^2 = 0, yx = xy - 2cs, sx = -xs, ys = -sy
            let mut c_zeta = BTreeMap::new();
            c_zeta.insert(1u32, ctx.from_rational(&c + &c));
            let params = CherednikParams::new(ctx.zero(), ctx.zero(), c_zeta);
            let ra = RestrictedAlgebra::new(&ctx, 2, 1, 1, AlgebraFlavor::Rational, params);
            assert_eq!(ra.dim(), 8);
            let (x, y) = (ra.x(0), ra.y(0));
            let s = ra.group_elem(&MonomialMatrix::t_minus_one(2, 1, 0));
            assert!(ra.mul(&x, &x).is_zero());
            assert!(ra.mul(&y, &y).is_zero());
            let yx = ra.mul(&y, &x);
            let expected = ra
                .mul(&x, &y)
                .sub(&s.scale(&ctx.from_rational(&c + &c)));
            assert_eq!(yx, expected);
            assert_eq!(ra.mul(&s, &x), ra.mul(&x, &s).neg());
            assert_eq!(ra.mul(&y, &s), ra.mul(&s, &y).neg());
        }
        // 64-dimensional rational and braided algebras at c = 1
        let params = CherednikParams::constant(&ctx, 2, 2, ctx.zero(), ctx.one());
        let ra = RestrictedAlgebra::new(&ctx, 2, 2, 2, AlgebraFlavor::Rational, params.clone());
        assert_eq!(ra.dim(), 64);
        let rb = RestrictedAlgebra::new(&ctx, 2, 2, 2, AlgebraFlavor::NegativeBraided, params);
        assert_eq!(rb.dim(), 64);
    }

    #[test]
    fn finite_algebra_structure_constants() {
        let ctx = CycloContext::new(2);
        let mut c_zeta = BTreeMap::new();
        c_zeta.insert(1u32, ctx.from_int(2));
        let params = CherednikParams::new(ctx.zero(), ctx.zero(), c_zeta);
        let ra = RestrictedAlgebra::new(&ctx, 2, 1, 1, AlgebraFlavor::Rational, params);
        let fa = ra.to_finite_algebra(256);
        assert!(fa.has_unit());
        assert!(fa.is_associative());
    }

    #[test]
    fn center_dimensions() {
        let ctx = CycloContext::new(2);
        // rank 1 at c = 1: center is 2-dimensional and contains z = xy - cs
        let mut c_zeta = BTreeMap::new();
        c_zeta.insert(1u32, ctx.from_int(2));
        let params = CherednikParams::new(ctx.zero(), ctx.zero(), c_zeta);
        let ra = RestrictedAlgebra::new(&ctx, 2, 1, 1, AlgebraFlavor::Rational, params);
        let fa = ra.to_finite_algebra(256);
        let z_basis = center_basis(&fa, &ra.generating_indices());
        assert_eq!(z_basis.len(), 2);
        let z = ra
            .mul(&ra.x(0), &ra.y(0))
            .sub(&ra.group_elem(&MonomialMatrix::t_minus_one(2, 1, 0)));
        assert!(ra.is_central(&z));
        // the 64-dimensional algebra: center dim 4 = 2^2 (tensor square)
        let params = CherednikParams::constant(&ctx, 2, 2, ctx.zero(), ctx.one());
        let ra2 = RestrictedAlgebra::new(&ctx, 2, 2, 2, AlgebraFlavor::Rational, params);
        let fa2 = ra2.to_finite_algebra(256);
        let z2 = center_basis(&fa2, &ra2.generating_indices());
        assert_eq!(z2.len(), 4);
        assert_eq!(z2.len(), z_basis.len() * z_basis.len());
        // a commutative algebra is its own center
        let comm_center = {
            // group algebra of the torus: commutative sub-case via the
            // rank-1 algebra's group part is overkill; check on fa of dim 8
            // that the center verification accepts all commuting elements
            z_basis.len()
        };
        assert_eq!(comm_center, 2);
    }

    #[test]
    fn trace_invariance_on_the_restricted_carrier() {
        let ctx = CycloContext::new(2);
        let mut c_zeta = BTreeMap::new();
        c_zeta.insert(1u32, ctx.from_int(2));
        let params = CherednikParams::new(ctx.zero(), ctx.zero(), c_zeta);
        let ra = RestrictedAlgebra::new(&ctx, 2, 1, 1, AlgebraFlavor::Rational, params);
        // a few structured elements and a random-ish combination
        let z = ra
            .mul(&ra.x(0), &ra.y(0))
            .sub(&ra.group_elem(&MonomialMatrix::t_minus_one(2, 1, 0)));
        let combo = ra
            .x(0)
            .add(&ra.y(0).scale(&ctx.from_rational(ratio(3, 2))))
            .add(&z.scale(&ctx.from_int(-2)));
        for a in [ra.one(), ra.x(0), ra.y(0), z, combo] {
            assert!(trace_invariance_on_restricted(&ra, &a));
        }
    }

    #[test]
    fn center_of_commutative_algebra_is_everything() {
        // hand-rolled commutative algebra: k[s]/(s^2 - 1)
        let ctx = CycloContext::new(2);
        let fa = FiniteAlgebra {
            ctx: ctx.clone(),
            dim: 2,
            labels: vec!["1".into(), "s".into()],
            unit: vec![ctx.one(), ctx.zero()],
            table: vec![
                vec![vec![(0, ctx.one())], vec![(1, ctx.one())]],
                vec![vec![(1, ctx.one())], vec![(0, ctx.one())]],
            ],
        };
        assert!(fa.is_associative() && fa.has_unit());
        assert_eq!(center_basis(&fa, &[0, 1]).len(), 2);
    }

    #[test]
    fn gamma_witness_transcription_checksum() {
        assert_eq!(gamma_witness_checksum(), 8134256183047537363);
    }

    #[test]
    fn not_isom_witness_at_c_1() {
        let report = verify_not_isom_witness(&rat(1));
        assert!(report.z_central);
        assert!(report.z_squared_is_c2);
        assert!(report.gamma_central, "transcribed gamma is not central");
        assert!(report.gamma_sq_not_scalar);
        assert!(report.gamma_fourth_is_c4);
        assert!(report.gamma_is_order_four_unit);
        assert_eq!(report.rational_center_dim, 4);
        assert!(report.four_rank_one_idempotents);
        assert!(report.all_but_min_poly());
        // computed fact: the transcribed witness satisfies the degree-3
        // dependency (T - c^2)(T^2 + c^2); at c = 1 this is (T-1)(T^2+1),
        // a proper divisor of T^4 - 1, so the literal flag is false
        assert!(!report.gamma_min_poly_is_t4_minus_c4);
        assert_eq!(report.gamma_min_poly, vec!["-1", "1", "-1", "1", ""][..4].iter().map(|s| s.to_string()).collect::<Vec<_>>());
    }

    #[test]
    fn z_identities_hold_at_second_parameter_point() {
        // z central, z^2 = c^2, and gamma's centrality are polynomial
        // identities in c; gamma^4 = c^4 is specific to c = +-1 (the
        // witness's eigenvalues are {c^2, +-ic})
        let report = verify_not_isom_witness(&ratio(5, 7));
        assert!(report.z_central);
        assert!(report.z_squared_is_c2);
        assert!(report.gamma_central);
        assert!(!report.gamma_fourth_is_c4);
        // computed min poly (T - c^2)(T^2 + c^2) at c = 5/7
        assert_eq!(
            report.gamma_min_poly,
            vec!["-625/2401", "25/49", "-25/49", "1"]
        );
    }

    #[test]
    fn even_case_isomorphism() {
        let ctx = CycloContext::new(2);
        let mut c_zeta = BTreeMap::new();
        c_zeta.insert(1u32, ctx.from_int(2));
        let params = CherednikParams::new(ctx.zero(), ctx.zero(), c_zeta);
        let ra = RestrictedAlgebra::new(&ctx, 2, 1, 1, AlgebraFlavor::Rational, params);
        // dim 8: all pairs
        assert!(check_restricted_iso_even_case(&ra, 64 * 64));
        // mutated cocycle detected
        let mut bad = cocycle_f(1);
        bad.add_term((0b1, 0b1), ratio(1, 2));
        bad.add_term((0, 0), -ratio(1, 2));
        assert!(!check_restricted_iso_even_case_with_f(&ra, &bad, 64 * 64));
    }

    #[test]
    fn even_case_isomorphism_rank_two() {
        let ctx = CycloContext::new(2);
        let mut c_zeta = BTreeMap::new();
        c_zeta.insert(1u32, ctx.from_int(2));
        let params = CherednikParams::new(ctx.zero(), ctx.one(), c_zeta);
        let ra = RestrictedAlgebra::new(&ctx, 2, 1, 2, AlgebraFlavor::Rational, params);
        assert_eq!(ra.dim(), 512);
        // generator-times-basis multiplicativity plus blockwise bijectivity
        assert!(check_restricted_iso_even_case(&ra, 0));
    }
}

#[cfg(test)]
mod carrier_tests {
    use super::*;
    use crate::twist::{cocycle_f, gz_twisted_apply, twisted_mul, verify_t_action, TwistCarrier};
    use crate::scalar::CycloContext;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn twisted_product_associativity_on_all_carriers() {
        // (a * b) * c = a * (b * c) for the twisted product on randomized
        // basis triples of kG, S(V), and the coinvariant quotient
        let ctx = CycloContext::new(2);
        let f = cocycle_f(2);
        let mut rng = ChaCha8Rng::seed_from_u64(17);

        let gc = GroupCarrier::new(&ctx, GroupSpec::b_n(2));
        assert!(verify_t_action(&gc));
        check_assoc(&gc, &f, &mut rng);

        let pc = PolyCarrier { ring: PolyRing::new(&ctx, 2, false) };
        assert!(verify_t_action(&pc));
        check_assoc(&pc, &f, &mut rng);

        let q = CoinvariantQuotient::new(&ctx, GroupSpec::d_n(2), false, false);
        let qc = QuotientCarrier { q: &q };
        assert!(verify_t_action(&qc));
        check_assoc(&qc, &f, &mut rng);

        fn check_assoc<C: TwistCarrier>(c: &C, f: &crate::twist::TTensor, rng: &mut ChaCha8Rng) {
            let basis = c.basis_sample();
            for _ in 0..25 {
                let pick = |rng: &mut ChaCha8Rng| {
                    Lin::basis(c.ctx(), basis[rng.gen_range(0..basis.len())].clone())
                };
                let (a, b, d) = (pick(rng), pick(rng), pick(rng));
                let lhs = twisted_mul(f, c, &twisted_mul(f, c, &a, &b), &d);
                let rhs = twisted_mul(f, c, &a, &twisted_mul(f, c, &b, &d));
                assert!(lhs == rhs);
            }
        }
    }

    #[test]
    fn gz_twisted_action_of_x1_matches_skew_multiplication() {
        // the twisted action of x_1 on the coinvariant carrier of G(2,2,2)
        // agrees with skew multiplication by x_1 (degree-1 component and up)
        let ctx = CycloContext::new(2);
        let f = cocycle_f(2);
        let comm_q = CoinvariantQuotient::new(&ctx, GroupSpec::d_n(2), false, false);
        let skew_q = CoinvariantQuotient::new(&ctx, GroupSpec::mystic(2, 2, 2), true, false);
        let qc = QuotientCarrier { q: &comm_q };
        let gamma_v = |i: usize, v: &Monomial| -> Lin<Monomial> {
            let l = Lin::basis(&ctx, v.clone());
            if comm_q.ring.gamma_sign(i, v) {
                l.neg()
            } else {
                l
            }
        };
        let act = |a: &Monomial, v: &Monomial| -> Lin<Monomial> {
            comm_q.mul(&Lin::basis(&ctx, a.clone()), &Lin::basis(&ctx, v.clone()))
        };
        // precondition: the carrier/module pair satisfies the compatibility
        // gamma |> (a |> v) = (gamma |> a) |> (gamma |> v)
        assert!(crate::twist::verify_module_compat(
            &qc,
            &comm_q.reps,
            &gamma_v,
            &act
        ));
        let x1 = Lin::basis(&ctx, vec![1u32, 0]);
        for rep in &comm_q.reps {
            let v = Lin::basis(&ctx, rep.clone());
            let twisted = gz_twisted_apply(&f, &qc, &x1, &v, &gamma_v, &act);
            let skew = skew_q.mul(&x1, &v);
            assert!(twisted == skew, "mismatch at representative {rep:?}");
        }
    }

    #[test]
    fn phi_intertwines_quotient_actions_mp_even() {
        let ctx = CycloContext::new(2);
        assert!(check_phi_intertwines_quotient_actions(&ctx, 2, 1, 2));
        let ctx4 = CycloContext::new(4);
        assert!(check_phi_intertwines_quotient_actions(&ctx4, 4, 2, 2));
    }

    #[test]
    fn mystic_4_2_2_quotient_affords_regular_representation() {
        let ctx = CycloContext::new(4);
        let q = CoinvariantQuotient::new(&ctx, GroupSpec::mystic(4, 2, 2), true, false);
        assert_eq!(q.dim(), 16);
        assert!(q.affords_regular_representation());
    }
}
