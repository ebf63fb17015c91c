//! Exact arithmetic in the cyclotomic field `Q(w)`.
//!
//! The field is realised as `Q[x]/Phi_n(x)`. The residue class of `x` is the
//! base root `zeta`; the working root `w` used by every other module is
//! `zeta^t` for a chosen exponent `t` coprime to `n`. Elements are kept as
//! coefficient vectors of length `deg Phi_n` in the basis
//! `1, zeta, ..., zeta^(d-1)`, which makes equality and the zero test exact.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::RatPoly;

/// The `n`-th cyclotomic polynomial.
///
/// Computed recursively as `(x^n - 1) / prod_{d | n, d < n} Phi_d(x)`; every
/// division is exact.
pub fn cyclotomic_poly(n: usize) -> Result<RatPoly> {
    if n < 2 {
        return Err(Error::InvalidOrder(n));
    }
    Ok(cyclotomic_any(n))
}

fn cyclotomic_any(n: usize) -> RatPoly {
    if n == 1 {
        return RatPoly::from_i64(&[-1, 1]);
    }
    let mut acc = RatPoly::x_pow_minus_one(n);
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let (q, r) = acc.div_rem(&cyclotomic_any(d));
        debug_assert!(r.is_zero(), "Phi_{d} does not divide x^{n} - 1");
        acc = q;
    }
    acc
}

/// Euler's totient, by trial division.
pub fn totient(n: usize) -> usize {
    (1..=n).filter(|k| k.gcd(&n) == 1).count()
}

/// Exponents `t` in `1..n` with `gcd(t, n) = 1`, ascending.
pub fn primitive_exponents(n: usize) -> Vec<usize> {
    (1..n.max(2)).filter(|t| t.gcd(&n) == 1).collect()
}

/// Which polynomial the coefficient ring is reduced by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Modulus {
    /// `Phi_n`: the quotient is the field `Q(w)`.
    Cyclotomic,
    /// `x^n - 1`: the group ring of `Z/n`, which has zero divisors. Available
    /// only to demonstrate that zero tests in this ring are unsound for
    /// primitive-root identities.
    XnMinusOne,
}

#[derive(Debug)]
struct ContextData {
    n: usize,
    root_exponent: usize,
    modulus_kind: Modulus,
    modulus: RatPoly,
    degree: usize,
    /// `zeta^j` reduced, for `0 <= j < n`.
    zeta_powers: Vec<Vec<BigRational>>,
}

/// Shared, immutable description of `Q(w)` for one `n` and one choice of root.
///
/// Cloning is cheap; all clones refer to the same data.
#[derive(Clone)]
pub struct CycContext {
    data: Arc<ContextData>,
}

impl fmt::Debug for CycContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CycContext")
            .field("n", &self.data.n)
            .field("root_exponent", &self.data.root_exponent)
            .field("modulus", &self.data.modulus)
            .finish()
    }
}

impl PartialEq for CycContext {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data)
            || (self.data.n == other.data.n
                && self.data.root_exponent == other.data.root_exponent
                && self.data.modulus_kind == other.data.modulus_kind)
    }
}

impl Eq for CycContext {}

impl CycContext {
    /// The canonical context: `w = zeta`.
    pub fn new(n: usize) -> Result<Self> {
        Self::with_root(n, 1)
    }

    /// Uses `w = zeta^t`; `t` must be coprime to `n`.
    pub fn with_root(n: usize, t: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidOrder(n));
        }
        if t.is_multiple_of(n) || t.gcd(&n) != 1 {
            return Err(Error::InvalidRoot { n, t });
        }
        Ok(Self::build(n, t % n, Modulus::Cyclotomic, cyclotomic_any(n)))
    }

    /// `Q[x]/(x^n - 1)` with `w` the class of `x`. Not a field.
    pub fn group_ring(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidOrder(n));
        }
        Ok(Self::build(n, 1, Modulus::XnMinusOne, RatPoly::x_pow_minus_one(n)))
    }

    fn build(n: usize, root_exponent: usize, modulus_kind: Modulus, modulus: RatPoly) -> Self {
        let degree = modulus.degree().expect("modulus is nonconstant");
        let mut zeta_powers = Vec::with_capacity(n);
        let mut cur = vec![BigRational::zero(); degree];
        cur[0] = BigRational::one();
        for _ in 0..n {
            zeta_powers.push(cur.clone());
            // multiply by x and fold the x^degree term back using the monic modulus
            let top = cur.pop().expect("degree >= 1");
            cur.insert(0, BigRational::zero());
            if !top.is_zero() {
                for (c, m) in cur.iter_mut().zip(modulus.coeffs()) {
                    *c -= &top * m;
                }
            }
        }
        Self {
            data: Arc::new(ContextData {
                n,
                root_exponent,
                modulus_kind,
                modulus,
                degree,
                zeta_powers,
            }),
        }
    }

    /// The order `n` of the root.
    pub fn order(&self) -> usize {
        self.data.n
    }

    /// The exponent `t` with `w = zeta^t`.
    pub fn root_exponent(&self) -> usize {
        self.data.root_exponent
    }

    /// Dimension of the coefficient ring over `Q`, i.e. `deg` of the modulus.
    pub fn degree(&self) -> usize {
        self.data.degree
    }

    pub fn modulus(&self) -> &RatPoly {
        &self.data.modulus
    }

    pub fn modulus_kind(&self) -> Modulus {
        self.data.modulus_kind
    }

    pub fn is_field(&self) -> bool {
        self.data.modulus_kind == Modulus::Cyclotomic
    }

    pub fn zero(&self) -> CycScalar {
        CycScalar {
            ctx: self.clone(),
            coeffs: vec![BigRational::zero(); self.data.degree],
        }
    }

    pub fn one(&self) -> CycScalar {
        self.from_int(1)
    }

    pub fn from_int(&self, c: i64) -> CycScalar {
        self.from_rational(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn from_rational(&self, c: BigRational) -> CycScalar {
        let mut s = self.zero();
        s.coeffs[0] = c;
        s
    }

    /// `zeta^k` for any integer `k`.
    pub fn zeta_pow(&self, k: i64) -> CycScalar {
        let j = k.rem_euclid(self.data.n as i64) as usize;
        CycScalar {
            ctx: self.clone(),
            coeffs: self.data.zeta_powers[j].clone(),
        }
    }

    /// `w^k = zeta^(t k)` for any integer `k`; depends only on `k mod n`.
    pub fn omega_pow(&self, k: i64) -> CycScalar {
        let n = self.data.n as i64;
        let t = self.data.root_exponent as i64;
        self.zeta_pow((k.rem_euclid(n) * t) % n)
    }

    /// The working root `w`.
    pub fn omega(&self) -> CycScalar {
        self.omega_pow(1)
    }

    /// Reduces an arbitrary polynomial in `zeta` to canonical form.
    pub fn reduce(&self, p: &RatPoly) -> CycScalar {
        let r = p.rem(&self.data.modulus);
        let mut s = self.zero();
        for (k, c) in r.coeffs().iter().enumerate() {
            s.coeffs[k] = c.clone();
        }
        s
    }

    /// `sum_e counts[e] * w^e`, the usual way exponent histograms are folded.
    pub fn from_omega_histogram(&self, counts: &[u64]) -> CycScalar {
        let mut acc = self.zero();
        for (e, &c) in counts.iter().enumerate() {
            if c != 0 {
                acc += &(self.omega_pow(e as i64) * &self.from_int(c as i64));
            }
        }
        acc
    }
}

/// An element of `Q(w)` in canonical reduced form.
#[derive(Clone)]
pub struct CycScalar {
    ctx: CycContext,
    coeffs: Vec<BigRational>,
}

impl CycScalar {
    pub fn context(&self) -> &CycContext {
        &self.ctx
    }

    /// Coefficients in the basis `1, zeta, ..., zeta^(d-1)`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn to_poly(&self) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| &self.coeffs[0])
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self { ctx: self.ctx.clone(), coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Self { ctx: self.ctx.clone(), coeffs })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let d = self.ctx.data.degree;
        let n = self.ctx.data.n;
        let mut prod = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut out: Vec<BigRational> = prod.drain(..d.min(prod.len())).collect();
        for (off, c) in prod.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = d + off;
            for (o, z) in out.iter_mut().zip(&self.ctx.data.zeta_powers[e % n]) {
                if !z.is_zero() {
                    *o += &c * z;
                }
            }
        }
        Ok(Self { ctx: self.ctx.clone(), coeffs: out })
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplicative inverse via the extended gcd with the modulus.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (g, s, _) = self.to_poly().gcd_ext(self.ctx.modulus());
        if g.degree() != Some(0) {
            return Err(Error::NotInvertible);
        }
        Ok(self.ctx.reduce(&s.scale(&g.coeff(0).recip())))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        self.try_mul(&other.inverse()?)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.ctx.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Polynomial in the base root, ascending powers, rationals in lowest
    /// terms, no spaces: `1+w`, `-2+(1/3)w^2`.
    pub fn render(&self, symbol: &str) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let mag = c.abs();
            let coeff = if mag.is_integer() {
                match (k, mag.is_one()) {
                    (0, _) => mag.to_string(),
                    (_, true) => String::new(),
                    _ => mag.to_string(),
                }
            } else if k == 0 {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            out.push_str(&coeff);
            match k {
                0 => {}
                1 => out.push_str(symbol),
                _ => {
                    out.push_str(symbol);
                    out.push('^');
                    out.push_str(&k.to_string());
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.coeffs == other.coeffs
    }
}

impl Eq for CycScalar {}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("ω"))
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycScalar({})", self.render("ω"))
    }
}

// The operator impls panic on mismatched contexts; the `try_*` methods are
// the fallible forms.
macro_rules! binop {
    ($tr:ident, $m:ident, $try:ident, $atr:ident, $am:ident) => {
        impl $tr<&CycScalar> for &CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: &CycScalar) -> CycScalar {
                self.$try(rhs).expect("cyclotomic context mismatch")
            }
        }
        impl $tr<CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: CycScalar) -> CycScalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: &CycScalar) -> CycScalar {
                (&self).$m(rhs)
            }
        }
        impl $tr<CycScalar> for &CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: CycScalar) -> CycScalar {
                self.$m(&rhs)
            }
        }
        impl $atr<&CycScalar> for CycScalar {
            fn $am(&mut self, rhs: &CycScalar) {
                *self = (&*self).$m(rhs);
            }
        }
        impl $atr<CycScalar> for CycScalar {
            fn $am(&mut self, rhs: CycScalar) {
                *self = (&*self).$m(&rhs);
            }
        }
    };
}

binop!(Add, add, try_add, AddAssign, add_assign);
binop!(Sub, sub, try_sub, SubAssign, sub_assign);
binop!(Mul, mul, try_mul, MulAssign, mul_assign);

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(2).unwrap(), RatPoly::from_i64(&[1, 1]));
        assert_eq!(cyclotomic_poly(4).unwrap(), RatPoly::from_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6).unwrap(), RatPoly::from_i64(&[1, -1, 1]));
    }

    #[test]
    fn phi6_by_independent_division() {
        // x^6 - 1 = (x - 1)(x + 1)(x^2 + x + 1) * Phi_6
        let denom = RatPoly::from_i64(&[-1, 1])
            .mul(&RatPoly::from_i64(&[1, 1]))
            .mul(&RatPoly::from_i64(&[1, 1, 1]));
        let (quot, rem) = RatPoly::x_pow_minus_one(6).div_rem(&denom);
        assert!(rem.is_zero());
        assert_eq!(quot, RatPoly::from_i64(&[1, -1, 1]));
    }

    #[test]
    fn invalid_order_rejected() {
        assert_eq!(cyclotomic_poly(1), Err(Error::InvalidOrder(1)));
        assert_eq!(cyclotomic_poly(0), Err(Error::InvalidOrder(0)));
        assert!(matches!(CycContext::new(1), Err(Error::InvalidOrder(1))));
        assert!(matches!(
            CycContext::with_root(6, 2),
            Err(Error::InvalidRoot { n: 6, t: 2 })
        ));
    }

    #[test]
    fn structural_invariants_of_phi() {
        for n in 2..=30 {
            let phi = cyclotomic_poly(n).unwrap();
            assert!(phi.is_monic());
            assert_eq!(phi.degree(), Some(totient(n)));
            assert!(RatPoly::x_pow_minus_one(n).rem(&phi).is_zero());
        }
    }

    #[test]
    fn omega_pow_examples() {
        for n in 2..=9 {
            let ctx = CycContext::new(n).unwrap();
            assert!(ctx.omega_pow(n as i64).is_one());
            assert_eq!(ctx.omega_pow(-1), ctx.omega_pow(n as i64 - 1));
            assert_eq!(ctx.omega_pow(3 * n as i64 + 2), ctx.omega_pow(2));
        }
        let c2 = CycContext::new(2).unwrap();
        assert!((c2.one() + c2.omega()).is_zero());
        let c4 = CycContext::new(4).unwrap();
        assert!((c4.omega_pow(2) + c4.one()).is_zero());
    }

    #[test]
    fn primitivity() {
        for n in 2..=12 {
            for t in primitive_exponents(n) {
                let ctx = CycContext::with_root(n, t).unwrap();
                for k in 1..n as i64 {
                    assert!(!(ctx.one() - ctx.omega_pow(k)).is_zero(), "n={n} t={t} k={k}");
                }
                assert!((ctx.one() - ctx.omega_pow(n as i64)).is_zero());
            }
        }
    }

    #[test]
    fn inverse_examples() {
        let c3 = CycContext::new(3).unwrap();
        let a = c3.one() - c3.omega();
        let expect = (c3.from_int(2) + c3.omega()).scale(&q(1, 3));
        assert_eq!(a.inverse().unwrap(), expect);
        // oracle: (1 - w)(2 + w) = 3 using w^2 = -1 - w
        assert_eq!(&a * &(c3.from_int(2) + c3.omega()), c3.from_int(3));

        let c2 = CycContext::new(2).unwrap();
        assert_eq!((c2.one() - c2.omega()).inverse().unwrap(), c2.from_rational(q(1, 2)));
        assert!(c2.one().inverse().unwrap().is_one());
        assert_eq!(c2.zero().inverse(), Err(Error::DivisionByZero));
    }

    #[test]
    fn group_ring_has_zero_divisors() {
        let ctx = CycContext::group_ring(2).unwrap();
        let a = ctx.one() + ctx.omega();
        assert!(!a.is_zero());
        assert!((&a * &(ctx.one() - ctx.omega())).is_zero());
        assert_eq!(a.inverse(), Err(Error::NotInvertible));
    }

    #[test]
    fn mixed_contexts_rejected() {
        let a = CycContext::new(5).unwrap().one();
        let b = CycContext::with_root(5, 2).unwrap().one();
        assert_eq!(a.try_add(&b), Err(Error::ContextMismatch));
        assert_eq!(a.try_mul(&b), Err(Error::ContextMismatch));
        // separately built contexts with equal parameters are interchangeable
        let c = CycContext::new(5).unwrap().one();
        assert_eq!(a.try_add(&c).unwrap(), CycContext::new(5).unwrap().from_int(2));
    }

    #[test]
    fn root_exponent_selects_power() {
        let ctx = CycContext::with_root(5, 2).unwrap();
        assert_eq!(ctx.omega(), ctx.zeta_pow(2));
        assert_eq!(ctx.omega_pow(3), ctx.zeta_pow(1));
    }

    #[test]
    fn rendering() {
        let c3 = CycContext::new(3).unwrap();
        assert_eq!((c3.one() + c3.omega()).to_string(), "1+ω");
        assert_eq!((c3.one() + c3.omega()).render("w"), "1+w");
        assert_eq!(c3.zero().to_string(), "0");
        // w^2 = -1 - w
        assert_eq!(c3.omega_pow(2).to_string(), "-1-ω");
        let c5 = CycContext::new(5).unwrap();
        let x = c5.omega_pow(3).scale(&q(-2, 3)) + c5.from_rational(q(1, 2));
        assert_eq!(x.render("w"), "1/2-(2/3)w^3");
    }

    #[test]
    fn reduce_is_idempotent() {
        let ctx = CycContext::new(7).unwrap();
        let p = RatPoly::from_i64(&[3, -1, 4, 1, -5, 9, 2, 6, 5, 3]);
        let once = ctx.reduce(&p);
        assert_eq!(ctx.reduce(&once.to_poly()), once);
    }
}
