//! The algebra-factorisation map `Psi: B (x) A -> A (x) B` for the PBW
//! factorisation `H = S(V) . (kG S(V*))`, and the identity
//! `Psi_{C_F} = (F |>) . Psi_C . (F^{-1} |>)` satisfied by the twist.

use super::{CherednikAlgebra, CherednikElement, NormalWord};
use crate::linalg::Matrix;
use crate::lin::Lin;
use crate::scalar::CtxExt;
use crate::twist::{gamma_mask, twisted_mul, TTensor};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PsiError {
    #[error("left-factor argument has group or y letters")]
    NotLeftFactor,
    #[error("right-factor argument has x letters")]
    NotRightFactor,
    #[error("degree {0} exceeds the truncation cap {1}")]
    CapExceeded(u32, u32),
}

/// Expands `b * a` in the `A (x) B` basis, where `A = S(V)` is spanned by
/// x-monomials and `B = kG S(V*)` by group-times-y words. The normal words of
/// the product are exactly that basis, so the expansion is the normalized
/// product with its terms read as pairs.
pub fn psi_factorisation(
    alg: &CherednikAlgebra,
    b: &CherednikElement,
    a: &CherednikElement,
    cap: u32,
) -> Result<CherednikElement, PsiError> {
    for (w, _) in a.iter() {
        if !w.g.is_identity() || w.y_degree() > 0 {
            return Err(PsiError::NotLeftFactor);
        }
        if w.x_degree() > cap {
            return Err(PsiError::CapExceeded(w.x_degree(), cap));
        }
    }
    for (w, _) in b.iter() {
        if w.x_degree() > 0 {
            return Err(PsiError::NotRightFactor);
        }
        if w.y_degree() > cap {
            return Err(PsiError::CapExceeded(w.y_degree(), cap));
        }
    }
    Ok(alg.mul(b, a))
}

/// Verifies `Psi_{C_F} = (F |>) . Psi_C . (F^{-1} |>)` on every basis pair
/// `b = g y^f`, `a = x^e` with `|e|, |f| <= cap`. The twisted factorisation
/// map is computed from first principles: `Psi_{C_F} = (m_F|_{A(x)B})^{-1}
/// . m_F`, with the restricted-product blocks inverted exactly.
pub fn twist_factorisation_check(alg: &CherednikAlgebra, f: &TTensor, cap: u32) -> bool {
    let ctx = alg.ctx().clone();
    let n = alg.n();
    let elems = alg.group().enumerate();
    let g_index: BTreeMap<_, _> = elems.iter().cloned().zip(0..).collect();
    let monos = monomials_up_to(n, cap);

    // blocks of m_F restricted to A (x) B: for fixed (e, f) the map only mixes
    // the group coordinate, x^e * (g y^f) |-> sum_{g'} M[g', g] x^e g' y^f
    let mut block_inverses: BTreeMap<(Vec<u32>, Vec<u32>), Matrix> = BTreeMap::new();
    for e in &monos {
        for fy in &monos {
            let mut block = Matrix::zero(&ctx, elems.len(), elems.len());
            for (g, &col) in &g_index {
                let a = Lin::basis(&ctx, x_word(alg, e));
                let b = Lin::basis(&ctx, gy_word(alg, g, fy));
                let prod = twisted_mul(f, alg, &a, &b);
                for (w, c) in prod.iter() {
                    assert_eq!(&w.x, e, "twisted restricted product left the block");
                    assert_eq!(&w.y, fy);
                    *block.at_mut(g_index[&w.g], col) = c.clone();
                }
            }
            // a singular block means the restricted product is not bijective,
            // so the factorisation identity cannot hold
            let Some(inv) = block.inverse() else {
                return false;
            };
            block_inverses.insert((e.clone(), fy.clone()), inv);
        }
    }

    for g in &elems {
        for fy in &monos {
            let b = gy_word(alg, g, fy);
            for e in &monos {
                let a = x_word(alg, e);

                // lhs: Psi_{C_F}(b (x) a) = (m_F|)^{-1} (b * a)
                let star = twisted_mul(
                    f,
                    alg,
                    &Lin::basis(&ctx, b.clone()),
                    &Lin::basis(&ctx, a.clone()),
                );
                let mut lhs: CherednikElement = Lin::zero();
                // group the product by (x-part, y-part) and invert each block
                let mut by_block: BTreeMap<(Vec<u32>, Vec<u32>), Vec<(usize, crate::scalar::CycloScalar)>> =
                    BTreeMap::new();
                for (w, c) in star.iter() {
                    by_block
                        .entry((w.x.clone(), w.y.clone()))
                        .or_default()
                        .push((g_index[&w.g], c.clone()));
                }
                for ((xe, yf), entries) in by_block {
                    let inv = &block_inverses[&(xe.clone(), yf.clone())];
                    let mut vec = vec![ctx.zero(); elems.len()];
                    for (gi, c) in entries {
                        vec[gi] = c;
                    }
                    let pre = inv.apply(&vec);
                    for (gi, c) in pre.iter().enumerate() {
                        if !c.is_zero() {
                            lhs.add_term(
                                NormalWord { x: xe.clone(), g: elems[gi].clone(), y: yf.clone() },
                                c.clone(),
                            );
                        }
                    }
                }

                // rhs: (F |>) . Psi_C . (F^{-1} |>) on b (x) a
                let mut rhs: CherednikElement = Lin::zero();
                for ((s, t), coeff) in &f.terms {
                    // F^{-1} = F on the pair (b, a)
                    let (gb, nb) = gamma_mask(alg, *s, &b);
                    let (ga, na) = gamma_mask(alg, *t, &a);
                    let plain = alg.mul(&Lin::basis(&ctx, gb), &Lin::basis(&ctx, ga));
                    let mut scale = ctx.from_rational(coeff.clone());
                    if nb ^ na {
                        scale = scale.neg();
                    }
                    // now F acts on the (x-part | group,y-part) legs of each term
                    for (w, c) in plain.iter() {
                        for ((s2, t2), coeff2) in &f.terms {
                            let (wx, nx) = gamma_mask(alg, *s2, &x_word(alg, &w.x));
                            let (wgy, ngy) = gamma_mask(alg, *t2, &gy_word(alg, &w.g, &w.y));
                            let mut c2 = c.mul(&scale).mul(&ctx.from_rational(coeff2.clone()));
                            if nx ^ ngy {
                                c2 = c2.neg();
                            }
                            rhs.add_term(
                                NormalWord { x: wx.x, g: wgy.g, y: wgy.y },
                                c2,
                            );
                        }
                    }
                }

                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

pub(super) fn monomials_up_to(n: usize, cap: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0u32; n]];
    for _ in 0..cap {
        let mut next = Vec::new();
        for m in &out {
            for i in 0..n {
                let mut v = m.clone();
                v[i] += 1;
                next.push(v);
            }
        }
        out.extend(next);
    }
    out.sort();
    out.dedup();
    out
}

fn x_word(alg: &CherednikAlgebra, e: &[u32]) -> NormalWord {
    NormalWord {
        x: e.to_vec(),
        g: alg.group().identity(),
        y: vec![0; alg.n()],
    }
}

fn gy_word(alg: &CherednikAlgebra, g: &crate::group::MonomialMatrix, f: &[u32]) -> NormalWord {
    NormalWord { x: vec![0; alg.n()], g: g.clone(), y: f.to_vec() }
}
