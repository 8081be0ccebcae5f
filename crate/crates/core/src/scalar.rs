//! Exact arithmetic over `Q` and over cyclotomic fields `Q(zeta_m)`.
//!
//! `Q(zeta_m)` is represented as `Q[x]/(Phi_m)` where `Phi_m` is the m-th
//! cyclotomic polynomial, so the quotient is a field and the zero test is
//! canonical (all coefficients zero after reduction). No floating point is
//! used anywhere.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;
use std::sync::Arc;

/// Arbitrary-precision rational, always reduced, denominator positive.
pub type Rational = BigRational;

/// `i64 -> Rational` shorthand.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q` as a Rational. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Renders `p/q`, or just `p` when the denominator is 1.
pub fn rational_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p"` or `"p/q"`.
pub fn rational_from_str(s: &str) -> Result<Rational, ScalarError> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| ScalarError::Parse(s.to_string()))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| ScalarError::Parse(s.to_string()))?;
    if d.is_zero() {
        return Err(ScalarError::Parse(s.to_string()));
    }
    Ok(Rational::new(n, d))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse rational: {0}")]
    Parse(String),
}

// ---------------------------------------------------------------------------
// integer polynomial helpers (dense, little-endian), only what Phi_m needs
// ---------------------------------------------------------------------------

fn poly_mul_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Exact division of integer polynomials; panics on a nonzero remainder.
fn poly_div_exact_int(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    let lead = den.last().unwrap().clone();
    assert!(rem.len() >= den.len());
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (dd..rem.len()).rev() {
        let c = rem[k].clone();
        if c.is_zero() {
            continue;
        }
        let (q, r) = (c.clone() / &lead, c % &lead);
        assert!(r.is_zero(), "non-exact polynomial division");
        quot[k - dd] = q.clone();
        for (j, dj) in den.iter().enumerate() {
            let delta = &q * dj;
            rem[k - dd + j] -= delta;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact polynomial division");
    quot
}

/// The m-th cyclotomic polynomial, monic over `Z`, little-endian coefficients.
///
/// Computed as `(x^m - 1) / prod_{d|m, d<m} Phi_d`.
pub fn cyclotomic_polynomial(m: u32) -> Vec<BigInt> {
    assert!(m >= 1);
    if m == 1 {
        return vec![BigInt::from(-1), BigInt::from(1)]; // x - 1
    }
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = BigInt::from(-1);
    num[m as usize] = BigInt::from(1);
    let mut den = vec![BigInt::one()];
    for d in 1..m {
        if m % d == 0 {
            den = poly_mul_int(&den, &cyclotomic_polynomial(d));
        }
    }
    poly_div_exact_int(&num, &den)
}

fn euler_phi(m: u32) -> usize {
    (1..=m).filter(|k| gcd(*k, m) == 1).count()
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

// ---------------------------------------------------------------------------
// CycloContext
// ---------------------------------------------------------------------------

/// The field `Q(zeta_m)`, fixed per computation session.
///
/// Values from different contexts must not be mixed; arithmetic panics on a
/// conductor mismatch rather than coercing silently.
#[derive(Debug)]
pub struct CycloContext {
    m: u32,
    phi: usize,
    /// `Phi_m`, monic, little-endian, length `phi + 1`.
    modulus: Vec<BigInt>,
    /// `x^k mod Phi_m` for `k = 0..m` (integer coefficients since Phi_m is monic).
    powers: Vec<Vec<BigInt>>,
}

pub type Ctx = Arc<CycloContext>;

impl CycloContext {
    pub fn new(m: u32) -> Ctx {
        assert!(m >= 1, "conductor must be positive");
        let modulus = cyclotomic_polynomial(m);
        let phi = modulus.len() - 1;
        debug_assert_eq!(phi, euler_phi(m));
        let mut powers: Vec<Vec<BigInt>> = Vec::with_capacity(m as usize);
        for k in 0..m as usize {
            let mut mono = vec![BigInt::zero(); k + 1];
            mono[k] = BigInt::one();
            powers.push(int_poly_rem(mono, &modulus, phi));
        }
        Arc::new(CycloContext { m, phi, modulus, powers })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Degree `phi(m)` of the field over `Q`.
    pub fn degree(&self) -> usize {
        self.phi
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }
}

fn int_poly_rem(mut p: Vec<BigInt>, modulus: &[BigInt], phi: usize) -> Vec<BigInt> {
    for k in (phi..p.len()).rev() {
        let c = std::mem::replace(&mut p[k], BigInt::zero());
        if c.is_zero() {
            continue;
        }
        // x^k = x^{k-phi} * (x^phi - Phi_m) since Phi_m is monic
        for j in 0..phi {
            let delta = &c * &modulus[j];
            p[k - phi + j] -= delta;
        }
    }
    p.truncate(phi);
    p.resize(phi, BigInt::zero());
    p
}

/// Convenience constructors living on the shared context handle.
pub trait CtxExt {
    fn zero(&self) -> CycloScalar;
    fn one(&self) -> CycloScalar;
    fn from_rational(&self, r: Rational) -> CycloScalar;
    fn from_int(&self, n: i64) -> CycloScalar;
    /// `zeta_m^k`, `k` arbitrary (reduced mod m).
    fn root_of_unity(&self, k: i64) -> CycloScalar;
    /// `zeta_order^k` where `order | m`.
    fn root_of_order(&self, order: u32, k: i64) -> CycloScalar;
}

impl CtxExt for Ctx {
    fn zero(&self) -> CycloScalar {
        CycloScalar {
            ctx: self.clone(),
            coeffs: vec![Rational::zero(); self.phi],
        }
    }

    fn one(&self) -> CycloScalar {
        self.from_rational(Rational::one())
    }

    fn from_rational(&self, r: Rational) -> CycloScalar {
        let mut coeffs = vec![Rational::zero(); self.phi];
        coeffs[0] = r;
        CycloScalar { ctx: self.clone(), coeffs }
    }

    fn from_int(&self, n: i64) -> CycloScalar {
        self.from_rational(rat(n))
    }

    fn root_of_unity(&self, k: i64) -> CycloScalar {
        let k = k.rem_euclid(self.m as i64) as usize;
        let coeffs = self.powers[k]
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        CycloScalar { ctx: self.clone(), coeffs }
    }

    fn root_of_order(&self, order: u32, k: i64) -> CycloScalar {
        assert!(
            self.m % order == 0,
            "zeta_{order} does not live in Q(zeta_{})",
            self.m
        );
        let step = (self.m / order) as i64;
        self.root_of_unity(k.rem_euclid(order as i64) * step)
    }
}

// ---------------------------------------------------------------------------
// CycloScalar
// ---------------------------------------------------------------------------

/// An element of `Q(zeta_m)`: `phi(m)` rational coordinates in the power basis.
#[derive(Clone)]
pub struct CycloScalar {
    ctx: Ctx,
    coeffs: Vec<Rational>,
}

impl PartialEq for CycloScalar {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.m == other.ctx.m && self.coeffs == other.coeffs
    }
}
impl Eq for CycloScalar {}

impl fmt::Debug for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloScalar(m={}, {})", self.ctx.m, self)
    }
}

impl CycloScalar {
    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// `Some(r)` when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn assert_same_ctx(&self, other: &Self) {
        assert_eq!(
            self.ctx.m, other.ctx.m,
            "cyclotomic context mismatch: m={} vs m={}",
            self.ctx.m, other.ctx.m
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_ctx(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CycloScalar { ctx: self.ctx.clone(), coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_ctx(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        CycloScalar { ctx: self.ctx.clone(), coeffs }
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|a| -a).collect();
        CycloScalar { ctx: self.ctx.clone(), coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_ctx(other);
        let phi = self.ctx.phi;
        let mut conv = vec![Rational::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                conv[i + j] += a * b;
            }
        }
        // reduce mod Phi_m (monic)
        for k in (phi..conv.len()).rev() {
            let c = std::mem::replace(&mut conv[k], Rational::zero());
            if c.is_zero() {
                continue;
            }
            for j in 0..phi {
                let delta = &c * Rational::from_integer(self.ctx.modulus[j].clone());
                conv[k - phi + j] -= delta;
            }
        }
        conv.truncate(phi);
        CycloScalar { ctx: self.ctx.clone(), coeffs: conv }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let coeffs = self.coeffs.iter().map(|a| a * r).collect();
        CycloScalar { ctx: self.ctx.clone(), coeffs }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in `Q[x]`.
    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let phi = self.ctx.phi;
        // r0 = Phi_m, r1 = self; track s in  r = s*self mod Phi
        let mut r0: Vec<Rational> = self
            .ctx
            .modulus
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        let mut r1: Vec<Rational> = self.coeffs.clone();
        trim(&mut r0);
        trim(&mut r1);
        let mut s0: Vec<Rational> = vec![];
        let mut s1: Vec<Rational> = vec![Rational::one()];
        while !r1.is_empty() {
            let (q, r) = rat_poly_divmod(&r0, &r1);
            let s_new = rat_poly_sub(&s0, &rat_poly_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s_new;
        }
        // r0 = gcd, a nonzero constant since Phi_m is irreducible
        assert_eq!(r0.len(), 1, "cyclotomic modulus not coprime to element");
        let c = r0[0].clone();
        let mut coeffs: Vec<Rational> = s0.iter().map(|a| a / &c).collect();
        coeffs.resize(phi, Rational::zero());
        Ok(CycloScalar { ctx: self.ctx.clone(), coeffs })
    }

    pub fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self.inv().expect("zero has no negative power").pow(-e);
        }
        let mut acc = self.ctx.one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Complex conjugation, `zeta |-> zeta^{-1}`.
    pub fn conj(&self) -> Self {
        let m = self.ctx.m as i64;
        let mut out = self.ctx.zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out = out.add(&self.ctx.root_of_unity(m - k as i64).scale(c));
        }
        out
    }

    /// JSON form `{"m": m, "coeffs": ["p/q", ...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "m": self.ctx.m,
            "coeffs": self.coeffs.iter().map(rational_to_string).collect::<Vec<_>>(),
        })
    }
}

fn trim(p: &mut Vec<Rational>) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

fn rat_poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    trim(&mut out);
    out
}

fn rat_poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, ai) in a.iter().enumerate() {
        out[i] += ai;
    }
    for (i, bi) in b.iter().enumerate() {
        out[i] -= bi;
    }
    trim(&mut out);
    out
}

fn rat_poly_divmod(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = num.to_vec();
    let d = den.len() - 1;
    let lead = den.last().unwrap();
    if rem.len() < den.len() {
        return (vec![], rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - d];
    for k in (d..rem.len()).rev() {
        let c = &rem[k] / lead;
        if c.is_zero() {
            continue;
        }
        quot[k - d] = c.clone();
        for (j, dj) in den.iter().enumerate() {
            let delta = &c * dj;
            rem[k - d + j] -= delta;
        }
    }
    trim(&mut quot);
    trim(&mut rem);
    (quot, rem)
}

impl fmt::Display for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = rational_to_string(&c.abs());
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            match k {
                0 => write!(f, "{}", s)?,
                1 if s == "1" => write!(f, "z")?,
                1 => write!(f, "{}*z", s)?,
                _ if s == "1" => write!(f, "z^{}", k)?,
                _ => write!(f, "{}*z^{}", s, k)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn int_poly(coeffs: &[i64]) -> Vec<BigInt> {
        coeffs.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn cyclotomic_polynomials_small() {
        assert_eq!(cyclotomic_polynomial(1), int_poly(&[-1, 1])); // x - 1
        assert_eq!(cyclotomic_polynomial(2), int_poly(&[1, 1])); // x + 1
        assert_eq!(cyclotomic_polynomial(4), int_poly(&[1, 0, 1])); // x^2 + 1
        assert_eq!(cyclotomic_polynomial(3), int_poly(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(6), int_poly(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), int_poly(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn roots_of_unity() {
        let c2 = CycloContext::new(2);
        assert_eq!(c2.root_of_unity(1), c2.from_int(-1));
        let c4 = CycloContext::new(4);
        assert_eq!(c4.root_of_unity(2), c4.from_int(-1));
        assert!(c4.root_of_unity(1).mul(&c4.root_of_unity(3)).is_one());
        assert!(c4.root_of_unity(0).is_one());
    }

    #[test]
    fn field_ops_in_q_i() {
        let c4 = CycloContext::new(4);
        let i = c4.root_of_unity(1);
        let a = c4.one().add(&i); // 1 + i
        let b = c4.one().sub(&i); // 1 - i
        // (1 + z)(1 - z) = 1 - z^2 = 2 mod z^2 + 1
        assert_eq!(a.mul(&b), c4.from_int(2));
        // a / a = 1 for a = 3 + 2i
        let a2 = c4.from_int(3).add(&i.scale(&rat(2)));
        assert!(a2.div(&a2).unwrap().is_one());
        // (1 + i)^-1 = (1 - i)/2, from solving (1+i)(x+yi) = 1 over Q
        assert_eq!(a.inv().unwrap(), b.scale(&ratio(1, 2)));
        assert_eq!(c4.zero().inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn random_inverses_and_embedding() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for m in [1u32, 2, 3, 4, 5, 6, 8, 12] {
            let ctx = CycloContext::new(m);
            for _ in 0..20 {
                let a = random_scalar(&ctx, &mut rng);
                if a.is_zero() {
                    continue;
                }
                assert!(a.mul(&a.inv().unwrap()).is_one(), "a*a^-1 != 1 (m={m})");
            }
            // Q -> Q(zeta_m) is a ring homomorphism
            for _ in 0..20 {
                let p = ratio(rng.gen_range(-9..9), rng.gen_range(1..9));
                let q = ratio(rng.gen_range(-9..9), rng.gen_range(1..9));
                let lhs = ctx.from_rational(&p * &q);
                let rhs = ctx.from_rational(p.clone()).mul(&ctx.from_rational(q.clone()));
                assert_eq!(lhs, rhs);
                let lhs = ctx.from_rational(&p + &q);
                let rhs = ctx.from_rational(p).add(&ctx.from_rational(q));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn primitive_root_satisfies_modulus() {
        for m in 1..=12u32 {
            let ctx = CycloContext::new(m);
            let z = ctx.root_of_unity(1);
            assert!(z.pow(m as i64).is_one(), "zeta_{m}^{m} != 1");
            // Phi_m(zeta_m) = 0
            let mut acc = ctx.zero();
            for (k, c) in ctx.modulus().iter().enumerate() {
                acc = acc.add(&z.pow(k as i64).scale(&Rational::from_integer(c.clone())));
            }
            assert!(acc.is_zero(), "Phi_{m}(zeta_{m}) != 0");
        }
    }

    #[test]
    fn conjugation_and_pow() {
        let c4 = CycloContext::new(4);
        let i = c4.root_of_unity(1);
        assert_eq!(i.conj(), c4.root_of_unity(3));
        let a = c4.from_int(3).add(&i.scale(&rat(5)));
        assert_eq!(a.mul(&a.conj()), c4.from_int(34)); // |3+5i|^2
        assert_eq!(i.pow(-1), c4.root_of_unity(3));
    }

    #[test]
    fn json_shape() {
        let c4 = CycloContext::new(4);
        let a = c4.one().add(&c4.root_of_unity(1).scale(&ratio(1, 2)));
        assert_eq!(
            a.to_json(),
            serde_json::json!({"m": 4, "coeffs": ["1", "1/2"]})
        );
    }

    #[test]
    fn values_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<CycloScalar>();
        assert_send_sync::<Ctx>();
        assert_send_sync::<crate::group::MonomialMatrix>();
        assert_send_sync::<crate::galg::GroupAlgebraElement>();
        assert_send_sync::<crate::cherednik::CherednikElement>();
        assert_send_sync::<crate::twist::TTensor>();
    }

    pub(super) fn random_scalar(ctx: &Ctx, rng: &mut ChaCha8Rng) -> CycloScalar {
        let mut s = ctx.zero();
        for k in 0..ctx.degree() {
            let r = ratio(rng.gen_range(-6..=6), rng.gen_range(1..=4));
            s = s.add(&ctx.root_of_unity(k as i64).scale(&r));
        }
        s
    }
}
