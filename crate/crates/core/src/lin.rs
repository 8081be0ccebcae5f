//! Sparse linear combinations over `Q(zeta_m)` with ordered keys.

use crate::scalar::{Ctx, CtxExt, CycloScalar};
use std::collections::BTreeMap;

/// A finite formal sum `sum c_b * b`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Lin<B: Ord + Clone> {
    terms: BTreeMap<B, CycloScalar>,
}

impl<B: Ord + Clone> Default for Lin<B> {
    fn default() -> Self {
        Lin { terms: BTreeMap::new() }
    }
}

impl<B: Ord + Clone> Lin<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn of(b: B, c: CycloScalar) -> Self {
        let mut l = Self::zero();
        l.add_term(b, c);
        l
    }

    pub fn basis(ctx: &Ctx, b: B) -> Self {
        Self::of(b, ctx.one())
    }

    pub fn add_term(&mut self, b: B, c: CycloScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
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

    pub fn add_assign(&mut self, other: &Self) {
        for (b, c) in &other.terms {
            self.add_term(b.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(b.clone(), c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero();
        for (b, c) in &self.terms {
            out.add_term(b.clone(), c.neg());
        }
        out
    }

    pub fn scale(&self, s: &CycloScalar) -> Self {
        let mut out = Self::zero();
        if s.is_zero() {
            return out;
        }
        for (b, c) in &self.terms {
            out.add_term(b.clone(), c.mul(s));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &CycloScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, b: &B, ctx: &Ctx) -> CycloScalar {
        self.terms.get(b).cloned().unwrap_or_else(|| ctx.zero())
    }

    pub fn get(&self, b: &B) -> Option<&CycloScalar> {
        self.terms.get(b)
    }

    /// Linear extension of a basis map.
    pub fn map<C: Ord + Clone>(&self, f: impl Fn(&B) -> Lin<C>) -> Lin<C> {
        let mut out = Lin::zero();
        for (b, c) in &self.terms {
            for (b2, c2) in f(b).terms {
                out.add_term(b2, c.mul(&c2));
            }
        }
        out
    }

    /// Coordinates with respect to an indexed basis; panics on a term outside
    /// the basis.
    pub fn to_vec(&self, ctx: &Ctx, index: &BTreeMap<B, usize>) -> Vec<CycloScalar> {
        let mut v = vec![ctx.zero(); index.len()];
        for (b, c) in &self.terms {
            let i = *index.get(b).expect("term outside the chosen basis");
            v[i] = c.clone();
        }
        v
    }
}

impl<B: Ord + Clone + std::fmt::Debug> std::fmt::Debug for Lin<B> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(b, c)| format!("({c})*{b:?}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
