//! Dense exact linear algebra over `Q(zeta_m)`.
//!
//! Row reduction is deterministic: pivots are chosen as the first nonzero
//! entry in column order, so bases and quotient representatives are
//! reproducible across runs.

use crate::scalar::{Ctx, CtxExt, CycloScalar};

#[derive(Clone, Debug)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<CycloScalar>,
    ctx: Ctx,
}

impl Matrix {
    pub fn zero(ctx: &Ctx, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![ctx.zero(); rows * cols],
            ctx: ctx.clone(),
        }
    }

    pub fn identity(ctx: &Ctx, n: usize) -> Self {
        let mut m = Matrix::zero(ctx, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = ctx.one();
        }
        m
    }

    pub fn from_rows(ctx: &Ctx, rows: Vec<Vec<CycloScalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data, ctx: ctx.clone() }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn at(&self, i: usize, j: usize) -> &CycloScalar {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut CycloScalar {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[CycloScalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zero(&self.ctx, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.mul(b);
                    let cur = out.at(i, j).add(&prod);
                    *out.at_mut(i, j) = cur;
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[CycloScalar]) -> Vec<CycloScalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = self.ctx.zero();
                for j in 0..self.cols {
                    let a = self.at(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc = acc.add(&a.mul(&v[j]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn equals(&self, other: &Matrix) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.at(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self.at(r, c).inv().unwrap();
            for j in c..self.cols {
                *self.at_mut(r, j) = self.at(r, j).mul(&inv);
            }
            for i in 0..self.rows {
                if i != r && !self.at(i, c).is_zero() {
                    let f = self.at(i, c).clone();
                    for j in c..self.cols {
                        let delta = f.mul(self.at(r, j));
                        *self.at_mut(i, j) = self.at(i, j).sub(&delta);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Matrix inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zero(&self.ctx, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, n + i) = self.ctx.one();
        }
        let pivots = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(k, &c)| c != k) {
            return None;
        }
        let mut out = Matrix::zero(&self.ctx, n, n);
        for i in 0..n {
            for j in 0..n {
                *out.at_mut(i, j) = aug.at(i, n + j).clone();
            }
        }
        Some(out)
    }

    /// A basis of the right nullspace.
    pub fn nullspace(&self) -> Vec<Vec<CycloScalar>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut vec = vec![self.ctx.zero(); self.cols];
            vec[free] = self.ctx.one();
            for (r, &c) in pivots.iter().enumerate() {
                vec[c] = m.at(r, free).neg();
            }
            basis.push(vec);
        }
        basis
    }

    /// Solves `self * x = b`; `None` when inconsistent.
    pub fn solve(&self, b: &[CycloScalar]) -> Option<Vec<CycloScalar>> {
        assert_eq!(self.rows, b.len());
        let mut aug = Matrix::zero(&self.ctx, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, self.cols) = b[i].clone();
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![self.ctx.zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.at(r, self.cols).clone();
        }
        Some(x)
    }
}

/// Row space as RREF rows, zero rows dropped. Rows come back in pivot order.
pub fn row_space_basis(mut m: Matrix) -> Vec<Vec<CycloScalar>> {
    let pivots = m.rref();
    (0..pivots.len()).map(|i| m.row(i).to_vec()).collect()
}

/// Monic minimal polynomial of an element inside an algebra, given the
/// sequence `powers = [1, a, a^2, ...]` expressed as coordinate vectors.
/// Returns the coefficients `c_0..c_d` with `c_d = 1` of the first monic
/// dependency `a^d = -(c_0 + c_1 a + ... + c_{d-1} a^{d-1})`.
pub fn minimal_polynomial(ctx: &Ctx, powers: &[Vec<CycloScalar>]) -> Vec<CycloScalar> {
    let dim = powers[0].len();
    for d in 1..powers.len() {
        // try to write powers[d] as a combination of powers[0..d]
        let mut m = Matrix::zero(ctx, dim, d);
        for (j, p) in powers[..d].iter().enumerate() {
            for i in 0..dim {
                *m.at_mut(i, j) = p[i].clone();
            }
        }
        if let Some(x) = m.solve(&powers[d]) {
            let mut coeffs: Vec<CycloScalar> = x.iter().map(|c| c.neg()).collect();
            coeffs.push(ctx.one());
            return coeffs;
        }
    }
    panic!("no dependency found; supply more powers");
}
