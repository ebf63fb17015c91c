//! The Taft Hopf algebra `T_{n^2}(w) = k<x, g | x^n = 0, g^n = 1, xg = w gx>`.
//!
//! Elements are sparse combinations of normal-form monomials `x^b g^a` with
//! `0 <= a, b < n`. Reordering uses `g^r x^s = w^(-rs) x^s g^r`.

mod axioms;
mod tensor;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub use axioms::{
    algebra_map_check, antipode_check, coassociativity_check, coproduct_power_check, counit_check,
    hopf_axioms_check, multiply_slots, relation_preservation_check,
};
pub use tensor::{BasisKey, Factor, FactorKind, TensorElement};

use crate::cyclotomic::{CycContext, CycScalar};
use crate::error::{Error, Result};
use crate::qcombinat::gaussian_binomial_table;

/// The normal-form monomial `x^x g^g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TaftMonomial {
    pub x: usize,
    pub g: usize,
}

impl TaftMonomial {
    pub const ONE: Self = Self { x: 0, g: 0 };

    pub fn new(x: usize, g: usize) -> Self {
        Self { x, g }
    }

    /// All `n^2` basis monomials, ordered by `(x, g)`.
    pub fn basis(n: usize) -> impl Iterator<Item = TaftMonomial> {
        (0..n).flat_map(move |x| (0..n).map(move |g| TaftMonomial { x, g }))
    }

    /// Row-major index `x * n + g`.
    pub fn index(self, n: usize) -> usize {
        self.x * n + self.g
    }

    /// `(x^b g^a)(x^d g^c) = w^(-ad) x^(b+d) g^(a+c)`, as `(w-exponent, monomial)`;
    /// `None` when `b + d >= n`.
    pub fn mul(self, other: Self, n: usize) -> Option<(i64, TaftMonomial)> {
        let x = self.x + other.x;
        if x >= n {
            return None;
        }
        let twist = -((self.g * other.x) as i64);
        Some((twist, TaftMonomial { x, g: (self.g + other.g) % n }))
    }

    pub fn render(self) -> String {
        format!("x^{} g^{}", self.x, self.g)
    }
}

/// An element of `T_{n^2}(w)`.
#[derive(Clone, PartialEq, Eq)]
pub struct TaftElement {
    ctx: CycContext,
    terms: BTreeMap<TaftMonomial, CycScalar>,
}

impl TaftElement {
    pub fn zero(ctx: &CycContext) -> Self {
        Self { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ctx: &CycContext) -> Self {
        Self::basis(ctx, TaftMonomial::ONE)
    }

    pub fn x(ctx: &CycContext) -> Self {
        Self::monomial(ctx, 1, 0)
    }

    pub fn g(ctx: &CycContext) -> Self {
        Self::monomial(ctx, 0, 1)
    }

    /// `x^b g^a` for any `b >= 0` and any integer `a`; zero when `b >= n`.
    pub fn monomial(ctx: &CycContext, b: usize, a: i64) -> Self {
        let n = ctx.order();
        if b >= n {
            return Self::zero(ctx);
        }
        Self::basis(ctx, TaftMonomial::new(b, a.rem_euclid(n as i64) as usize))
    }

    pub fn basis(ctx: &CycContext, m: TaftMonomial) -> Self {
        Self::term(ctx, m, ctx.one())
    }

    pub fn term(ctx: &CycContext, m: TaftMonomial, c: CycScalar) -> Self {
        let mut e = Self::zero(ctx);
        e.add_term(m, c);
        e
    }

    pub fn scalar(ctx: &CycContext, c: CycScalar) -> Self {
        Self::term(ctx, TaftMonomial::ONE, c)
    }

    pub fn context(&self) -> &CycContext {
        &self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TaftMonomial, &CycScalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn coefficient(&self, m: TaftMonomial) -> CycScalar {
        self.terms.get(&m).cloned().unwrap_or_else(|| self.ctx.zero())
    }

    /// Adds `c * m`, pruning the entry if it cancels.
    pub fn add_term(&mut self, m: TaftMonomial, c: CycScalar) {
        debug_assert!(m.x < self.ctx.order() && m.g < self.ctx.order());
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
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
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn scale(&self, c: &CycScalar) -> Self {
        let mut out = Self::zero(&self.ctx);
        for (m, v) in &self.terms {
            out.add_term(*m, v * c);
        }
        out
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.ctx.order();
        let mut out = Self::zero(&self.ctx);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some((twist, m)) = m1.mul(*m2, n) {
                    out.add_term(m, self.ctx.omega_pow(twist) * c1 * c2);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(&self.ctx), |acc, _| &acc * self)
    }

    /// `eps(x^b g^a) = [b = 0]`.
    pub fn counit(&self) -> CycScalar {
        let mut acc = self.ctx.zero();
        for (m, c) in &self.terms {
            if m.x == 0 {
                acc += c;
            }
        }
        acc
    }

    /// The coproduct, term by term:
    /// `D(x^b g^a) = sum_k w^(-k(b-k)) C_w(b, k) x^(b-k) g^(k+a) (x) x^k g^a`.
    pub fn coproduct(&self) -> TensorElement {
        let ctx = &self.ctx;
        let n = ctx.order();
        let max_b = self.terms.keys().map(|m| m.x).max().unwrap_or(0);
        let binoms = gaussian_binomial_table(ctx, max_b);
        let mut out = TensorElement::zero(ctx, &[FactorKind::H, FactorKind::H])
            .expect("arity 2 is valid");
        for (m, c) in &self.terms {
            let b = m.x;
            for k in 0..=b {
                let coeff = ctx.omega_pow(-((k * (b - k)) as i64)) * &binoms[b][k] * c;
                let left = TaftMonomial::new(b - k, (k + m.g) % n);
                let right = TaftMonomial::new(k, m.g);
                out.add_term(vec![BasisKey::H(left), BasisKey::H(right)], coeff);
            }
        }
        out
    }

    /// The antipode, extended anti-multiplicatively from `S(g) = g^(-1)` and
    /// `S(x) = -g^(-1) x`: `S(x^b g^a) = S(g)^a S(x)^b`.
    pub fn antipode(&self) -> Self {
        let ctx = &self.ctx;
        let s_g = Self::monomial(ctx, 0, -1);
        let s_x = -(&s_g * &Self::x(ctx));
        let mut out = Self::zero(ctx);
        for (m, c) in &self.terms {
            let img = &s_g.pow(m.g) * &s_x.pow(m.x);
            out = &out + &img.scale(c);
        }
        out
    }

    /// The inverse antipode, from `S^-1(g) = g^(-1)` and `S^-1(x) = -x g^(-1)`.
    pub fn antipode_inverse(&self) -> Self {
        let ctx = &self.ctx;
        let s_g = Self::monomial(ctx, 0, -1);
        let s_x = -(&Self::x(ctx) * &s_g);
        let mut out = Self::zero(ctx);
        for (m, c) in &self.terms {
            let img = &s_g.pow(m.g) * &s_x.pow(m.x);
            out = &out + &img.scale(c);
        }
        out
    }

    /// Sorted `c x^b g^a` terms joined by ` + `, or `0`.
    pub fn render(&self, symbol: &str) -> String {
        render_terms(
            self.terms.iter().map(|(m, c)| (m.render(), c)),
            symbol,
        )
    }
}

pub(crate) fn render_terms<'a>(
    terms: impl Iterator<Item = (String, &'a CycScalar)>,
    symbol: &str,
) -> String {
    let parts: Vec<String> = terms
        .map(|(basis, c)| {
            if c.is_one() {
                basis
            } else {
                format!("({}) {basis}", c.render(symbol))
            }
        })
        .collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

impl fmt::Display for TaftElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("ω"))
    }
}

impl fmt::Debug for TaftElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TaftElement({})", self.render("ω"))
    }
}

macro_rules! taft_binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl $tr<&TaftElement> for &TaftElement {
            type Output = TaftElement;
            fn $m(self, rhs: &TaftElement) -> TaftElement {
                self.$try(rhs).expect("cyclotomic context mismatch")
            }
        }
        impl $tr<TaftElement> for TaftElement {
            type Output = TaftElement;
            fn $m(self, rhs: TaftElement) -> TaftElement {
                (&self).$m(&rhs)
            }
        }
    };
}

taft_binop!(Add, add, try_add);
taft_binop!(Sub, sub, try_sub);
taft_binop!(Mul, mul, try_mul);

impl Neg for &TaftElement {
    type Output = TaftElement;
    fn neg(self) -> TaftElement {
        let mut out = TaftElement::zero(&self.ctx);
        for (m, c) in &self.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Neg for TaftElement {
    type Output = TaftElement;
    fn neg(self) -> TaftElement {
        -&self
    }
}
