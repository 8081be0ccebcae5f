//! Truncated standard modules: the module induced from a group
//! representation with the dual polynomial side acting by evaluation at
//! zero, carried on x-monomials of bounded degree, and the identification of
//! the cocycle-twisted standard module with the standard module of the
//! negative braided algebra.

use super::psi::monomials_up_to;
use super::{CherednikAlgebra, CherednikElement, CherednikParams, NormalWord};
use crate::galg::JMap;
use crate::group::MonomialMatrix;
use crate::linalg::Matrix;
use crate::lin::Lin;
use crate::scalar::{Ctx, CtxExt, CycloScalar};
use crate::twist::{cocycle_f, gamma_mask_lin, TMask, TTensor};
use std::collections::BTreeMap;

/// A matrix representation of a monomial-matrix group, stored elementwise.
#[derive(Clone)]
pub struct GroupRep {
    pub dim: usize,
    map: BTreeMap<MonomialMatrix, Matrix>,
}

impl GroupRep {
    pub fn from_fn(
        elems: &[MonomialMatrix],
        dim: usize,
        f: impl Fn(&MonomialMatrix) -> Matrix,
    ) -> Self {
        let map = elems.iter().map(|g| (g.clone(), f(g))).collect();
        GroupRep { dim, map }
    }

    /// One-dimensional representation from a multiplicative character.
    pub fn linear(
        ctx: &Ctx,
        elems: &[MonomialMatrix],
        chi: impl Fn(&MonomialMatrix) -> CycloScalar,
    ) -> Self {
        Self::from_fn(elems, 1, |g| {
            let mut m = Matrix::zero(ctx, 1, 1);
            *m.at_mut(0, 0) = chi(g);
            m
        })
    }

    /// The trivial character.
    pub fn trivial(ctx: &Ctx, elems: &[MonomialMatrix]) -> Self {
        Self::linear(ctx, elems, |_| ctx.one())
    }

    /// The determinant-like sign character `t_i -> -1`, `s_i -> -1`
    /// (`wt |-> sign(w) (-1)^{sum exps}` for m = 2).
    pub fn sign(ctx: &Ctx, elems: &[MonomialMatrix]) -> Self {
        Self::linear(ctx, elems, |g| {
            let mut v = ctx.root_of_order(g.m(), g.sum_exps() as i64);
            if g.perm_odd() {
                v = v.neg();
            }
            v
        })
    }

    pub fn of(&self, g: &MonomialMatrix) -> &Matrix {
        self.map
            .get(g)
            .unwrap_or_else(|| panic!("representation not defined at {g}"))
    }

    pub fn has(&self, g: &MonomialMatrix) -> bool {
        self.map.contains_key(g)
    }

    /// The pullback `tau . J` along a linear map of group algebras: values
    /// `(tau . J)(w) = sum_h J(w)[h] tau(h)`, defined on `elems`.
    pub fn pullback_along_j(
        &self,
        ctx: &Ctx,
        j: &JMap,
        elems: &[MonomialMatrix],
    ) -> Self {
        let map = elems
            .iter()
            .map(|w| {
                let img = j.apply_group(w);
                let mut acc = Matrix::zero(ctx, self.dim, self.dim);
                for (h, c) in img.terms() {
                    let th = self.of(h);
                    for r in 0..self.dim {
                        for s in 0..self.dim {
                            let add = th.at(r, s).mul(c);
                            *acc.at_mut(r, s) = acc.at(r, s).add(&add);
                        }
                    }
                }
                (w.clone(), acc)
            })
            .collect();
        GroupRep { dim: self.dim, map }
    }

    /// Checks multiplicativity on all pairs of the listed elements.
    pub fn is_representation(&self, elems: &[MonomialMatrix]) -> bool {
        for g in elems {
            for h in elems {
                if !self.of(g).mul(self.of(h)).equals(self.of(&g.compose(h))) {
                    return false;
                }
            }
        }
        true
    }
}

/// Standard module truncated at x-degree `cap`: carrier
/// `span{ x^e : |e| <= cap } (x) tau`; y's of positive degree act by zero on
/// the tau leg and group elements act by `tau`.
pub struct StandardModule<'a> {
    alg: &'a CherednikAlgebra,
    rep: GroupRep,
    cap: u32,
    basis: Vec<(Vec<u32>, usize)>,
    index: BTreeMap<(Vec<u32>, usize), usize>,
}

impl<'a> StandardModule<'a> {
    pub fn new(alg: &'a CherednikAlgebra, rep: GroupRep, cap: u32) -> Self {
        let monos = monomials_up_to(alg.n(), cap);
        let mut basis = Vec::new();
        for m in &monos {
            for k in 0..rep.dim {
                basis.push((m.clone(), k));
            }
        }
        let index = basis.iter().cloned().zip(0..).collect();
        StandardModule { alg, rep, cap, basis, index }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[(Vec<u32>, usize)] {
        &self.basis
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    /// Action of an element on a basis vector `x^e (x) v_k`; components of
    /// degree above the cap are discarded.
    pub fn act_on_basis(&self, elem: &CherednikElement, e: &[u32], k: usize) -> Lin<(Vec<u32>, usize)> {
        let ctx = self.alg.ctx();
        let carrier = Lin::basis(
            ctx,
            NormalWord {
                x: e.to_vec(),
                g: self.alg.group().identity(),
                y: vec![0; self.alg.n()],
            },
        );
        let prod = self.alg.mul(elem, &carrier);
        let mut out = Lin::zero();
        for (w, c) in prod.iter() {
            if w.y_degree() > 0 {
                continue; // y's act by zero on tau
            }
            if w.x_degree() > self.cap {
                continue; // discarded component beyond the cap
            }
            let tg = self.rep.of(&w.g);
            for r in 0..self.rep.dim {
                let entry = tg.at(r, k);
                if !entry.is_zero() {
                    out.add_term((w.x.clone(), r), c.mul(entry));
                }
            }
        }
        out
    }

    /// Full matrix of the action on the truncated carrier.
    pub fn act_matrix(&self, elem: &CherednikElement) -> Matrix {
        let ctx = self.alg.ctx();
        let mut m = Matrix::zero(ctx, self.dim(), self.dim());
        for (col, (e, k)) in self.basis.iter().enumerate() {
            let img = self.act_on_basis(elem, e, *k);
            for (b, c) in img.iter() {
                *m.at_mut(self.index[b], col) = c.clone();
            }
        }
        m
    }

    /// Columns whose image is fully trustworthy for an operator of the given
    /// x-degree: input degree at most `cap - op_degree`.
    pub fn trustworthy_columns(&self, op_degree: u32) -> Vec<bool> {
        self.basis
            .iter()
            .map(|(e, _)| e.iter().sum::<u32>() + op_degree <= self.cap)
            .collect()
    }
}

fn matrices_equal_on_columns(a: &Matrix, b: &Matrix, cols: &[bool]) -> bool {
    if a.rows != b.rows || a.cols != b.cols {
        return false;
    }
    for j in 0..a.cols {
        if !cols[j] {
            continue;
        }
        for i in 0..a.rows {
            if a.at(i, j) != b.at(i, j) {
                return false;
            }
        }
    }
    true
}

/// Verifies that the Giaquinto-Zhang twist of the truncated standard module
/// `M_c(tau)` of `H_{t,c}(G(m,p,n))`, pulled through `phi`, equals the
/// standard module of the negative braided algebra at `tau . J_{-i}`:
/// for every generator `u` of the braided algebra,
/// `rho_braided(u) = Theta^{-1} rho_twist(phi(u)) Theta` with
/// `Theta = F^{-1} |>` on the carrier, compared on trustworthy columns.
///
/// `rep_big` must contain the torus of `T(2,1,n)`-type elements (it is a
/// representation of `G(m,1,n)` restricting to `tau` on `G(m,p,n)`).
pub fn check_standard_module_twist(
    ctx: &Ctx,
    m: u32,
    p: u32,
    n: usize,
    cbar: CherednikParams,
    rep_big: &GroupRep,
    cap: u32,
) -> bool {
    let f = cocycle_f(n);
    check_standard_module_twist_with_f(ctx, m, p, n, cbar, rep_big, cap, &f)
}

/// Same check with an explicit tensor in place of the canonical cocycle
/// (used by mutation tests).
pub fn check_standard_module_twist_with_f(
    ctx: &Ctx,
    m: u32,
    p: u32,
    n: usize,
    cbar: CherednikParams,
    rep_big: &GroupRep,
    cap: u32,
    f: &TTensor,
) -> bool {
    assert!(m % 2 == 0);
    // H with phi-matched parameters c = -cbar, and the braided source
    let braided = CherednikAlgebra::negative_braided(ctx, m, p, n, cbar.clone());
    let rational = CherednikAlgebra::rational(ctx, m, p, n, cbar.negate_c());

    let w_elems = rational.group().enumerate();
    let mu_elems = braided.group().enumerate();

    // tau = restriction of rep_big to W; taubar = tau . J_{-i} on mu(W)
    let tau = GroupRep {
        dim: rep_big.dim,
        map: w_elems.iter().map(|g| (g.clone(), rep_big.of(g).clone())).collect(),
    };
    let jmi = JMap::j_minus_i(ctx, m, n);
    let taubar = GroupRep {
        dim: rep_big.dim,
        map: rep_big
            .pullback_along_j(ctx, &jmi, &mu_elems)
            .map
            .into_iter()
            .collect(),
    };

    let module = StandardModule::new(&rational, tau, cap);
    let module_braided = StandardModule::new(&braided, taubar, cap);

    // Theta = F^{-1} |> on the carrier: the first leg flips monomial signs,
    // the second acts through rep_big on the torus word
    let dim = module.dim();
    let mut theta = Matrix::zero(ctx, dim, dim);
    for (col, (e, k)) in module.basis().iter().enumerate() {
        for ((s, t), coeff) in &f.terms {
            let sign_flips: u32 = (0..n)
                .filter(|&i| s & (1 << i) != 0)
                .map(|i| e[i])
                .sum();
            let mut c = ctx.from_rational(coeff.clone());
            if sign_flips % 2 == 1 {
                c = c.neg();
            }
            let tword = crate::twist::embed_t_word(m, n, *t);
            let tmat = rep_big.of(&tword);
            for r in 0..rep_big.dim {
                let entry = tmat.at(r, *k);
                if entry.is_zero() {
                    continue;
                }
                let row = module
                    .basis()
                    .iter()
                    .position(|(e2, k2)| e2 == e && *k2 == r)
                    .unwrap();
                *theta.at_mut(row, col) = theta.at(row, col).add(&c.mul(entry));
            }
        }
    }
    let theta_inv = theta.inverse().expect("F^{-1} |> must be invertible");

    // generators of the braided algebra and their phi-images in H
    let mut gens: Vec<(CherednikElement, CherednikElement, u32)> = Vec::new();
    for i in 0..n {
        gens.push((braided.x(i), rational.x(i), 1));
        gens.push((braided.y(i), rational.y(i), 0));
    }
    for k in 0..n - 1 {
        let sigma = MonomialMatrix::mystic_sigma(m, n, k, k + 1, 0);
        let sbar = MonomialMatrix::refl_s(m, n, k, k + 1, m as i64 / 2);
        gens.push((braided.group_elem(&sigma), rational.group_elem(&sbar), 0));
    }
    for t in rational.group().enumerate() {
        if t.is_diagonal() && braided.group().is_member(&t) {
            gens.push((braided.group_elem(&t), rational.group_elem(&t), 0));
        }
    }

    for (u, phi_u, op_deg) in &gens {
        let lhs = module_braided.act_matrix(u);
        // rho_twist(phi(u)) = sum_F coeff rho(gamma_S |> phi(u)) Gamma_T
        let mut rho_twist = Matrix::zero(ctx, dim, dim);
        for ((s, t), coeff) in &f.terms {
            let ga = gamma_mask_lin(&rational, *s, phi_u);
            let m1 = module.act_matrix(&ga);
            let gt = module_gamma_matrix(ctx, &module, rep_big, m, n, *t);
            let prod = m1.mul(&gt).mul(&Matrix::identity(ctx, dim));
            for i in 0..dim {
                for j in 0..dim {
                    let add = prod.at(i, j).mul(&ctx.from_rational(coeff.clone()));
                    *rho_twist.at_mut(i, j) = rho_twist.at(i, j).add(&add);
                }
            }
        }
        let rhs = theta_inv.mul(&rho_twist).mul(&theta);
        let cols = module.trustworthy_columns(*op_deg);
        if !matrices_equal_on_columns(&lhs, &rhs, &cols) {
            return false;
        }
    }
    true
}

/// Matrix of `gamma_mask |>` on the standard-module carrier.
fn module_gamma_matrix(
    ctx: &Ctx,
    module: &StandardModule,
    rep_big: &GroupRep,
    m: u32,
    n: usize,
    mask: TMask,
) -> Matrix {
    let dim = module.dim();
    let mut out = Matrix::zero(ctx, dim, dim);
    let tword = crate::twist::embed_t_word(m, n, mask);
    let tmat = rep_big.of(&tword);
    for (col, (e, k)) in module.basis().iter().enumerate() {
        let sign_flips: u32 = (0..n)
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| e[i])
            .sum();
        for r in 0..rep_big.dim {
            let entry = tmat.at(r, *k);
            if entry.is_zero() {
                continue;
            }
            let row = module
                .basis()
                .iter()
                .position(|(e2, k2)| e2 == e && *k2 == r)
                .unwrap();
            let mut c = entry.clone();
            if sign_flips % 2 == 1 {
                c = c.neg();
            }
            *out.at_mut(row, col) = c;
        }
    }
    out
}
