//! The embedding of the negative braided Cherednik algebra of
//! `mu(G(m,p,n))` into the rational Cherednik algebra of `G(m,p',n)`, and
//! the reconstruction of the group-algebra isomorphism `phi` as
//! `eta^{-1} . J_1`.

use super::{CherednikAlgebra, CherednikElement, CherednikParams, NormalWord};
use crate::galg::{GroupAlgebraElement, JMap};
use crate::group::{GroupSpec, MonomialMatrix};
use crate::linalg::Matrix;
use crate::lin::Lin;
use crate::scalar::{Ctx, CtxExt};
use crate::twist::{cocycle_f, eta_map, GroupCarrier, TTensor};
use std::collections::BTreeMap;

/// Generating set used for the multiplicative extension: the mystic
/// reflections `sigma_k = sigma_{k,k+1}^{(1)}` plus torus generators
/// `t_i^{(zeta^p)}` and `t_i^{(zeta)} t_{i+1}^{(zeta^{-1})}`.
fn mystic_generators(m: u32, p: u32, n: usize) -> Vec<MonomialMatrix> {
    let mut gens = Vec::new();
    for k in 0..n - 1 {
        gens.push(MonomialMatrix::mystic_sigma(m, n, k, k + 1, 0));
    }
    for i in 0..n {
        if p < m {
            gens.push(MonomialMatrix::diag_t(m, n, i, p as i64));
        }
    }
    for i in 0..n - 1 {
        let g = MonomialMatrix::diag_t(m, n, i, 1)
            .compose(&MonomialMatrix::diag_t(m, n, i + 1, -1));
        gens.push(g);
    }
    gens
}

/// `eta . phi`: maps `H_bar = H_{t,cbar}(mu(G(m,p,n)))` into
/// `H = H_{t,c}(G(m,p',n))` by the generator images
/// `x_i -> x_i t_{i-1}..t_1`, `y_i -> y_i t_{i-1}..t_1`,
/// `sigma_k -> 1/2 (s_k + sbar_k + sigma_k - sigma_k^{-1})`, `t -> t`,
/// extended multiplicatively to the whole group via BFS words.
pub struct EtaPhiEmbedding {
    source: CherednikAlgebra,
    target: CherednikAlgebra,
    source_elems: Vec<MonomialMatrix>,
    group_images: BTreeMap<MonomialMatrix, CherednikElement>,
    x_images: Vec<CherednikElement>,
    y_images: Vec<CherednikElement>,
}

impl EtaPhiEmbedding {
    pub fn new(ctx: &Ctx, m: u32, p: u32, n: usize, cbar: CherednikParams) -> Self {
        assert!(m % 2 == 0 && n >= 2);
        let mp = m / p;
        let p_prime = if mp % 2 == 0 { p } else { p / 2 };
        assert!(p_prime >= 1, "m/p odd requires even p");

        // target parameters: c_1 = -cbar_1; c_zeta = -cbar_zeta on C_{m/p},
        // zero on the new roots in C_{m/p'} \ C_{m/p}
        let mut c_zeta = BTreeMap::new();
        let mut e = p_prime;
        while e < m {
            let val = if e % p == 0 {
                cbar.c_zeta[&e].neg()
            } else {
                ctx.zero()
            };
            c_zeta.insert(e, val);
            e += p_prime;
        }
        let target_params = CherednikParams::new(cbar.t.clone(), cbar.c1.neg(), c_zeta);

        let source = CherednikAlgebra::negative_braided(ctx, m, p, n, cbar);
        let target = CherednikAlgebra::rational(ctx, m, p_prime, n, target_params);

        // x_i -> x_i t_{i-1}..t_1  and  y_i -> y_i t_{i-1}..t_1
        // (the t's act trivially on y_i since they only touch indices < i)
        let mut x_images = Vec::new();
        let mut y_images = Vec::new();
        for i in 0..n {
            let mut tword = MonomialMatrix::identity(m, n);
            for j in (0..i).rev() {
                tword = tword.compose(&MonomialMatrix::t_minus_one(m, n, j));
            }
            let mut wx = NormalWord::group(tword.clone());
            wx.x[i] = 1;
            x_images.push(Lin::basis(ctx, wx));
            let mut wy = NormalWord::group(tword);
            wy.y[i] = 1;
            y_images.push(Lin::basis(ctx, wy));
        }

        // generator images in the target
        let gens = mystic_generators(m, p, n);
        let gen_images: Vec<CherednikElement> = gens
            .iter()
            .map(|g| Self::generator_image(&target, g))
            .collect();

        // multiplicative extension along BFS words
        let source_elems = source.group().enumerate();
        let words = source.group().words_in_generators(&gens);
        let mut group_images = BTreeMap::new();
        for (g, word) in source_elems.iter().zip(&words) {
            let mut acc = target.one();
            for &gi in word {
                acc = target.mul(&acc, &gen_images[gi]);
            }
            group_images.insert(g.clone(), acc);
        }

        EtaPhiEmbedding { source, target, source_elems, group_images, x_images, y_images }
    }

    fn generator_image(target: &CherednikAlgebra, g: &MonomialMatrix) -> CherednikElement {
        let ctx = target.ctx();
        let m = target.m();
        let n = target.n();
        if g.is_diagonal() {
            return target.group_elem(g);
        }
        // sigma_k: find the swapped pair
        let k = (0..n).find(|&i| g.perm()[i] as usize != i).unwrap();
        debug_assert_eq!(
            g,
            &MonomialMatrix::mystic_sigma(m, n, k, k + 1, 0),
            "unexpected non-diagonal generator"
        );
        let half = ctx.from_rational(crate::scalar::ratio(1, 2));
        let s = target.group_elem(&MonomialMatrix::refl_s(m, n, k, k + 1, 0));
        let sbar = target.group_elem(&MonomialMatrix::refl_s(m, n, k, k + 1, m as i64 / 2));
        let sg = target.group_elem(&MonomialMatrix::mystic_sigma(m, n, k, k + 1, 0));
        let sg_inv = target.group_elem(&MonomialMatrix::mystic_sigma(m, n, k, k + 1, m as i64 / 2));
        s.add(&sbar).add(&sg).sub(&sg_inv).scale(&half)
    }

    pub fn source(&self) -> &CherednikAlgebra {
        &self.source
    }

    pub fn target(&self) -> &CherednikAlgebra {
        &self.target
    }

    pub fn image_of_group(&self, g: &MonomialMatrix) -> &CherednikElement {
        &self.group_images[g]
    }

    /// The image of a source element under the multiplicative extension.
    pub fn map(&self, e: &CherednikElement) -> CherednikElement {
        let mut out = Lin::zero();
        for (w, c) in e.iter() {
            let mut acc = self.target.one();
            for (i, &a) in w.x.iter().enumerate() {
                for _ in 0..a {
                    acc = self.target.mul(&acc, &self.x_images[i]);
                }
            }
            acc = self.target.mul(&acc, &self.group_images[&w.g]);
            for (i, &b) in w.y.iter().enumerate() {
                for _ in 0..b {
                    acc = self.target.mul(&acc, &self.y_images[i]);
                }
            }
            out.add_assign(&acc.scale(c));
        }
        out
    }

    /// Every defining relation of the source algebra maps to zero in the
    /// target. Returns the description of the first failure.
    pub fn check_defining_relations(&self) -> Result<(), String> {
        let ctx = self.source.ctx().clone();
        let n = self.source.n();
        let m = self.source.m();
        let params = self.source.params().clone();
        let t = &self.target;

        // anticommutation of the x's and of the y's
        for i in 0..n {
            for j in 0..i {
                let xx = t
                    .mul(&self.x_images[i], &self.x_images[j])
                    .add(&t.mul(&self.x_images[j], &self.x_images[i]));
                if !xx.is_zero() {
                    return Err(format!("x_{i} x_{j} + x_{j} x_{i} -> nonzero"));
                }
                let yy = t
                    .mul(&self.y_images[i], &self.y_images[j])
                    .add(&t.mul(&self.y_images[j], &self.y_images[i]));
                if !yy.is_zero() {
                    return Err(format!("y_{i} y_{j} + y_{j} y_{i} -> nonzero"));
                }
            }
        }

        // g x_i = g(x_i) g and g y_i = g(y_i) g for every group element
        for g in &self.source_elems {
            let img_g = &self.group_images[g];
            for i in 0..n {
                let (j, e) = g.act_on_x(i);
                let lhs = t.mul(img_g, &self.x_images[i]);
                let rhs = t
                    .mul(&self.x_images[j], img_g)
                    .scale(&ctx.root_of_order(m, e as i64));
                if lhs != rhs {
                    return Err(format!("g x_{i} relation fails at g = {g}"));
                }
                let (j, e) = g.act_on_y(i);
                let lhs = t.mul(img_g, &self.y_images[i]);
                let rhs = t
                    .mul(&self.y_images[j], img_g)
                    .scale(&ctx.root_of_order(m, e as i64));
                if lhs != rhs {
                    return Err(format!("g y_{i} relation fails at g = {g}"));
                }
            }
        }

        // y_i x_j + x_j y_i = c_1 sum_eps eps sigma_ij^{(eps)}  (i != j)
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let mut lhs = t
                    .mul(&self.y_images[i], &self.x_images[j])
                    .add(&t.mul(&self.x_images[j], &self.y_images[i]));
                for e in 0..m {
                    let sg = MonomialMatrix::mystic_sigma(m, n, i, j, e as i64);
                    let c = params.c1.mul(&ctx.root_of_order(m, e as i64));
                    lhs = lhs.sub(&self.group_images[&sg].scale(&c));
                }
                if !lhs.is_zero() {
                    return Err(format!("y_{i} x_{j} relation image is nonzero"));
                }
            }
        }

        // y_i x_i - x_i y_i = t + c_1 sum sum sigma + sum c_zeta t_i^{(zeta)}
        for i in 0..n {
            let mut lhs = t
                .mul(&self.y_images[i], &self.x_images[i])
                .sub(&t.mul(&self.x_images[i], &self.y_images[i]));
            lhs = lhs.sub(&t.one().scale(&params.t));
            for jp in 0..n {
                if jp == i {
                    continue;
                }
                for e in 0..m {
                    let sg = MonomialMatrix::mystic_sigma(m, n, i, jp, e as i64);
                    lhs = lhs.sub(&self.group_images[&sg].scale(&params.c1));
                }
            }
            for (e, cz) in &params.c_zeta {
                let tz = MonomialMatrix::diag_t(m, n, i, *e as i64);
                lhs = lhs.sub(&self.group_images[&tz].scale(cz));
            }
            if !lhs.is_zero() {
                return Err(format!("y_{i} x_{i} relation image is nonzero"));
            }
        }
        Ok(())
    }

    /// `image(g) image(h) = image(gh)` on all pairs; this certifies that the
    /// multiplicative extension is well defined.
    pub fn check_group_multiplicativity(&self) -> Result<(), String> {
        for g in &self.source_elems {
            for h in &self.source_elems {
                let lhs = self.target.mul(&self.group_images[g], &self.group_images[h]);
                let rhs = &self.group_images[&g.compose(h)];
                if &lhs != rhs {
                    return Err(format!("image not multiplicative at ({g}, {h})"));
                }
            }
        }
        Ok(())
    }

    /// Matrix rank of the map on the degree-`cap` truncation; for even `m/p`
    /// the map must be bijective there.
    pub fn bijective_on_truncation(&self, cap: u32) -> bool {
        let ctx = self.source.ctx().clone();
        let n = self.source.n();
        let src_basis = truncated_basis(n, cap, &self.source_elems);
        let tgt_elems = self.target.group().enumerate();
        let tgt_basis = truncated_basis(n, cap, &tgt_elems);
        let index: BTreeMap<NormalWord, usize> =
            tgt_basis.iter().cloned().zip(0..).collect();
        if src_basis.len() != tgt_basis.len() {
            return false;
        }
        let mut mat = Matrix::zero(&ctx, tgt_basis.len(), src_basis.len());
        for (col, w) in src_basis.iter().enumerate() {
            let img = self.map(&Lin::basis(&ctx, w.clone()));
            for (w2, c) in img.iter() {
                let row = *index
                    .get(w2)
                    .expect("image left the degree truncation");
                *mat.at_mut(row, col) = c.clone();
            }
        }
        mat.rank() == src_basis.len()
    }
}

fn truncated_basis(n: usize, cap: u32, elems: &[MonomialMatrix]) -> Vec<NormalWord> {
    let monos = super::psi::monomials_up_to(n, cap);
    let mut out = Vec::new();
    for a in &monos {
        for b in &monos {
            if a.iter().sum::<u32>() + b.iter().sum::<u32>() > cap {
                continue;
            }
            for g in elems {
                out.push(NormalWord { x: a.clone(), g: g.clone(), y: b.clone() });
            }
        }
    }
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// phi reconstructed as eta^{-1} . J_1
// ---------------------------------------------------------------------------

/// The isomorphism `phi: kW -> (kG)_F` for `W = mu(G(m,p,n)) = G(m,p,n)`
/// with `m/p` even, reconstructed as `eta^{-1} . J_1` and validated against
/// the stated generator images `phi(sigma_i) = sbar_i`, `phi(t) = t`.
pub struct PhiMap {
    ctx: Ctx,
    spec: GroupSpec,
    f: TTensor,
    carrier: GroupCarrier,
    elems: Vec<MonomialMatrix>,
    index: BTreeMap<MonomialMatrix, usize>,
    eta_inverse: Matrix,
    j1: JMap,
}

impl PhiMap {
    pub fn new(ctx: &Ctx, m: u32, p: u32, n: usize) -> Self {
        assert!((m / p) % 2 == 0, "phi = eta^{{-1}} J_1 needs m/p even");
        let spec = GroupSpec::reflection(m, p, n);
        let carrier = GroupCarrier::new(ctx, spec);
        let f = cocycle_f(n);
        let elems = spec.enumerate();
        let index: BTreeMap<MonomialMatrix, usize> =
            elems.iter().cloned().zip(0..).collect();
        let mut eta_mat = Matrix::zero(ctx, elems.len(), elems.len());
        for (col, g) in elems.iter().enumerate() {
            let img = eta_map(&f, &carrier, &Lin::basis(ctx, g.clone()));
            for (h, c) in img.iter() {
                *eta_mat.at_mut(index[h], col) = c.clone();
            }
        }
        let eta_inverse = eta_mat
            .inverse()
            .expect("eta is singular on the group algebra; fatal inconsistency");
        let j1 = JMap::j_one(ctx, m, n);
        PhiMap {
            ctx: ctx.clone(),
            spec,
            f,
            carrier,
            elems,
            index,
            eta_inverse,
            j1,
        }
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn cocycle(&self) -> &TTensor {
        &self.f
    }

    pub fn elements(&self) -> &[MonomialMatrix] {
        &self.elems
    }

    /// `eta` on the group algebra (the forward map `(kG)_F -> kG`).
    pub fn eta(&self, a: &GroupAlgebraElement) -> GroupAlgebraElement {
        let mut lin = Lin::zero();
        for (g, c) in a.terms() {
            lin.add_term(g.clone(), c.clone());
        }
        let img = eta_map(&self.f, &self.carrier, &lin);
        let mut out = GroupAlgebraElement::zero(&self.ctx, self.spec);
        for (g, c) in img.iter() {
            out.add_term(g.clone(), c.clone());
        }
        out
    }

    /// `phi(w) = eta^{-1}(J_1(w))`, an element of the same underlying space
    /// `kG` viewed as the twisted algebra `(kG)_F`.
    pub fn apply_group(&self, w: &MonomialMatrix) -> GroupAlgebraElement {
        let j = self
            .j1
            .apply_group(w)
            .expect_in_spec(self.spec)
            .expect("J_1 image left the group algebra");
        let mut vec = vec![self.ctx.zero(); self.elems.len()];
        for (g, c) in j.terms() {
            vec[self.index[g]] = c.clone();
        }
        let pre = self.eta_inverse.apply(&vec);
        let mut out = GroupAlgebraElement::zero(&self.ctx, self.spec);
        for (i, c) in pre.into_iter().enumerate() {
            out.add_term(self.elems[i].clone(), c);
        }
        out
    }

    pub fn apply(&self, a: &GroupAlgebraElement) -> GroupAlgebraElement {
        let mut out = GroupAlgebraElement::zero(&self.ctx, self.spec);
        for (g, c) in a.terms() {
            out = out.add(&self.apply_group(g).scale(c));
        }
        out
    }
}
