//! The dual Hopf algebra `H* = k<G, X | G^n = eps, X^n = 0, XG = w GX>`, the
//! pairing `<H*, H>`, the Drinfel'd double relations as operators on `A`, and
//! the comparison between the induced dual action and the coaction.
//!
//! The pairing is pinned down by
//!
//! ```text
//! <G, g> = w^-1   <G, x> = 0   <X, g> = 0   <X, x> = 1
//! <FF', h> = sum <F, h1><F', h2>      <F, hk> = sum <F1, h><F2, k>
//! ```
//!
//! with `<1, h> = eps(h)` and `<F, 1> = eps(F)`. Values on normal-form
//! monomials are tabulated by peeling the leading letter of `F` (using the
//! coproduct of `H`) and, for the three generator functionals, the leading
//! letter of `h` (using the coproduct of `H*`). The word-level evaluators
//! [`Pairing::pair_dual_word`] and [`Pairing::pair_h_word`] apply one rule
//! letter by letter and are what the well-definedness checks run on.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::check::CaseResult;
use crate::comodule::Coaction;
use crate::cyclotomic::{CycContext, CycScalar};
use crate::error::{Error, Result};
use crate::linalg;
use crate::quantum_plane_a::{a_coefficient, act_g, act_x, AElement};
use crate::taft_hopf::{BasisKey, TaftElement, TaftMonomial};

/// Generators of `H*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DualGen {
    G,
    X,
}

/// Generators of `H`, as letters of a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HGen {
    G,
    X,
}

/// `X^b G^a`; the `x` field holds the `X` exponent and `g` the `G` exponent.
pub type DualMonomial = TaftMonomial;

/// An element of `H*` in normal form `sum c X^b G^a`.
///
/// `H*` has the same presentation and coproduct shape as `H`, so the
/// arithmetic is delegated to [`TaftElement`] under `x -> X`, `g -> G`.
#[derive(Clone, PartialEq, Eq)]
pub struct DualElement(TaftElement);

impl DualElement {
    pub fn zero(ctx: &CycContext) -> Self {
        Self(TaftElement::zero(ctx))
    }

    pub fn one(ctx: &CycContext) -> Self {
        Self(TaftElement::one(ctx))
    }

    pub fn big_x(ctx: &CycContext) -> Self {
        Self(TaftElement::x(ctx))
    }

    pub fn big_g(ctx: &CycContext) -> Self {
        Self(TaftElement::g(ctx))
    }

    /// `X^b G^a`, any integer `a`.
    pub fn monomial(ctx: &CycContext, b: usize, a: i64) -> Self {
        Self(TaftElement::monomial(ctx, b, a))
    }

    pub fn basis(ctx: &CycContext, m: DualMonomial) -> Self {
        Self(TaftElement::basis(ctx, m))
    }

    pub fn context(&self) -> &CycContext {
        self.0.context()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DualMonomial, &CycScalar)> {
        self.0.terms()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn scale(&self, c: &CycScalar) -> Self {
        Self(self.0.scale(c))
    }

    pub fn add_term(&mut self, m: DualMonomial, c: CycScalar) {
        self.0.add_term(m, c);
    }

    /// `eps(X^b G^a) = [b = 0]`.
    pub fn counit(&self) -> CycScalar {
        self.0.counit()
    }

    /// Terms `(F1, F2, c)` of the coproduct, from `D(G) = G (x) G` and
    /// `D(X) = X (x) eps + G (x) X`.
    pub fn coproduct(&self) -> Vec<(DualMonomial, DualMonomial, CycScalar)> {
        self.0
            .coproduct()
            .terms()
            .map(|(k, c)| match (k[0], k[1]) {
                (BasisKey::H(a), BasisKey::H(b)) => (a, b, c.clone()),
                _ => unreachable!("H (x) H"),
            })
            .collect()
    }

    /// `S(G) = G^-1`, `S(X) = -G^-1 X`.
    pub fn antipode(&self) -> Self {
        Self(self.0.antipode())
    }

    pub fn antipode_inverse(&self) -> Self {
        Self(self.0.antipode_inverse())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.0.try_mul(&other.0).map(Self)
    }

    pub fn render(&self, symbol: &str) -> String {
        crate::taft_hopf::render_terms(
            self.0.terms().map(|(m, c)| (format!("X^{} G^{}", m.x, m.g), c)),
            symbol,
        )
    }
}

impl fmt::Display for DualElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("ω"))
    }
}

impl fmt::Debug for DualElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DualElement({})", self.render("ω"))
    }
}

impl Add<&DualElement> for &DualElement {
    type Output = DualElement;
    fn add(self, rhs: &DualElement) -> DualElement {
        DualElement(&self.0 + &rhs.0)
    }
}

impl Sub<&DualElement> for &DualElement {
    type Output = DualElement;
    fn sub(self, rhs: &DualElement) -> DualElement {
        DualElement(&self.0 - &rhs.0)
    }
}

impl Mul<&DualElement> for &DualElement {
    type Output = DualElement;
    fn mul(self, rhs: &DualElement) -> DualElement {
        DualElement(&self.0 * &rhs.0)
    }
}

fn letter_pair(ctx: &CycContext, f: DualGen, y: HGen) -> CycScalar {
    match (f, y) {
        (DualGen::G, HGen::G) => ctx.omega_pow(-1),
        (DualGen::X, HGen::X) => ctx.one(),
        _ => ctx.zero(),
    }
}

/// `<Y, word>` for `Y` in `{eps, G, X}` (`None` is `eps`), peeling letters of
/// the word with `D(G) = G (x) G`, `D(X) = X (x) eps + G (x) X`.
fn generator_functional(ctx: &CycContext, f: Option<DualGen>, word: &[HGen]) -> CycScalar {
    let Some(f) = f else {
        return if word.contains(&HGen::X) { ctx.zero() } else { ctx.one() };
    };
    let Some((&y, rest)) = word.split_first() else {
        return match f {
            DualGen::G => ctx.one(),
            DualGen::X => ctx.zero(),
        };
    };
    match f {
        DualGen::G => letter_pair(ctx, DualGen::G, y) * generator_functional(ctx, Some(DualGen::G), rest),
        DualGen::X => {
            letter_pair(ctx, DualGen::X, y) * generator_functional(ctx, None, rest)
                + letter_pair(ctx, DualGen::G, y) * generator_functional(ctx, Some(DualGen::X), rest)
        }
    }
}

/// The normal-form word `x^d g^c` (or `X^d G^c`).
pub fn h_word(m: TaftMonomial) -> Vec<HGen> {
    let mut w = vec![HGen::X; m.x];
    w.extend(std::iter::repeat_n(HGen::G, m.g));
    w
}

pub fn dual_word(m: DualMonomial) -> Vec<DualGen> {
    let mut w = vec![DualGen::X; m.x];
    w.extend(std::iter::repeat_n(DualGen::G, m.g));
    w
}

/// The tabulated pairing on normal-form monomials.
#[derive(Debug, Clone)]
pub struct Pairing {
    ctx: CycContext,
    /// `table[F.index(n)][h.index(n)]`.
    table: Vec<Vec<CycScalar>>,
    /// Coproduct terms of each basis monomial; `H` and `H*` share them.
    coproducts: Vec<Vec<(TaftMonomial, TaftMonomial, CycScalar)>>,
}

impl Pairing {
    pub fn new(ctx: &CycContext) -> Self {
        let n = ctx.order();
        let nn = n * n;
        let basis: Vec<TaftMonomial> = TaftMonomial::basis(n).collect();
        let coproducts: Vec<Vec<(TaftMonomial, TaftMonomial, CycScalar)>> = basis
            .iter()
            .map(|&m| DualElement::basis(ctx, m).coproduct())
            .collect();
        let gen_row = |y: DualGen| -> Vec<CycScalar> {
            basis.iter().map(|&m| generator_functional(ctx, Some(y), &h_word(m))).collect()
        };
        let g_row = gen_row(DualGen::G);
        let x_row = gen_row(DualGen::X);

        let mut table: Vec<Vec<CycScalar>> = Vec::with_capacity(nn);
        for f in &basis {
            let row = if *f == TaftMonomial::ONE {
                basis.iter().map(|&m| TaftElement::basis(ctx, m).counit()).collect()
            } else {
                // F = Y F' with F' of lower row-major index
                let (lead, rest) = if f.x > 0 {
                    (&x_row, TaftMonomial::new(f.x - 1, f.g))
                } else {
                    (&g_row, TaftMonomial::new(0, f.g - 1))
                };
                let rest_row = &table[rest.index(n)];
                coproducts
                    .iter()
                    .map(|terms| {
                        let mut acc = ctx.zero();
                        for (h1, h2, c) in terms {
                            let l = &lead[h1.index(n)];
                            if l.is_zero() {
                                continue;
                            }
                            acc += c * l * &rest_row[h2.index(n)];
                        }
                        acc
                    })
                    .collect()
            };
            table.push(row);
        }
        Self { ctx: ctx.clone(), table, coproducts }
    }

    pub fn context(&self) -> &CycContext {
        &self.ctx
    }

    pub fn monomials(&self, f: DualMonomial, h: TaftMonomial) -> &CycScalar {
        let n = self.ctx.order();
        &self.table[f.index(n)][h.index(n)]
    }

    /// Bilinear extension of the monomial table.
    pub fn pair(&self, f: &DualElement, h: &TaftElement) -> Result<CycScalar> {
        if f.context() != &self.ctx || h.context() != &self.ctx {
            return Err(Error::ContextMismatch);
        }
        let mut acc = self.ctx.zero();
        for (fm, fc) in f.terms() {
            for (hm, hc) in h.terms() {
                acc += fc * hc * self.monomials(*fm, *hm);
            }
        }
        Ok(acc)
    }

    /// `<Y1 Y2 ... , h>` letter by letter: `<Y W, h> = <W, sum <Y, h1> h2>`.
    pub fn pair_dual_word(&self, word: &[DualGen], h: &TaftElement) -> CycScalar {
        let ctx = &self.ctx;
        let Some((&y, rest)) = word.split_first() else {
            return h.counit();
        };
        let ym = match y {
            DualGen::G => TaftMonomial::new(0, 1),
            DualGen::X => TaftMonomial::new(1, 0),
        };
        let mut reduced = TaftElement::zero(ctx);
        for (hm, hc) in h.terms() {
            for (h1, h2, c) in &self.coproducts[hm.index(ctx.order())] {
                let l = self.monomials(ym, *h1);
                if !l.is_zero() {
                    reduced.add_term(*h2, hc * c * l);
                }
            }
        }
        self.pair_dual_word(rest, &reduced)
    }

    /// `<F, y1 y2 ...>` letter by letter: `<F, y w> = <sum <F1, y> F2, w>`.
    pub fn pair_h_word(&self, f: &DualElement, word: &[HGen]) -> CycScalar {
        let ctx = &self.ctx;
        let Some((&y, rest)) = word.split_first() else {
            return f.counit();
        };
        let ym = match y {
            HGen::G => TaftMonomial::new(0, 1),
            HGen::X => TaftMonomial::new(1, 0),
        };
        let mut reduced = DualElement::zero(ctx);
        for (fm, fc) in f.terms() {
            for (f1, f2, c) in &self.coproducts[fm.index(ctx.order())] {
                let l = self.monomials(*f1, ym);
                if !l.is_zero() {
                    reduced.add_term(*f2, fc * c * l);
                }
            }
        }
        self.pair_h_word(&reduced, rest)
    }

    /// Rows `X^b G^a`, columns `x^d g^c`, both in row-major order.
    pub fn gram_matrix(&self) -> Vec<Vec<CycScalar>> {
        self.table.clone()
    }
}

fn mono_label(prefix: [char; 2], m: TaftMonomial) -> String {
    format!("{}^{}{}^{}", prefix[0], m.x, prefix[1], m.g)
}

/// The defining values of the pairing and `<G^a, g^c> = w^(-ac)`.
pub fn pairing_base_cases(pairing: &Pairing) -> Vec<CaseResult> {
    let ctx = pairing.context();
    let n = ctx.order();
    let (gg, xx) = (TaftMonomial::new(0, 1), TaftMonomial::new(1, 0));
    let one = TaftMonomial::ONE;
    let expected = [
        ("G,g", gg, gg, ctx.omega_pow(-1)),
        ("G,x", gg, xx, ctx.zero()),
        ("X,g", xx, gg, ctx.zero()),
        ("X,x", xx, xx, ctx.one()),
        ("G,1", gg, one, ctx.one()),
        ("X,1", xx, one, ctx.zero()),
    ];
    let mut out: Vec<CaseResult> = expected
        .into_iter()
        .map(|(label, f, h, want)| {
            let got = pairing.monomials(f, h);
            CaseResult::new(format!("pair_base/n={n}/{label}"), *got == want)
                .param("value", got.render("w"))
        })
        .collect();
    for a in 0..n {
        for c in 0..n {
            let got = pairing.monomials(TaftMonomial::new(0, a), TaftMonomial::new(0, c));
            let want = ctx.omega_pow(-((a * c) as i64));
            out.push(CaseResult::new(format!("pair_grouplike/n={n}/a={a}/c={c}"), *got == want));
        }
    }
    out
}

/// The pairing annihilates `xg - w gx`, `x^n`, `g^n - 1` (for every basis
/// `F`) and `XG - w GX`, `X^n`, `G^n - eps` (for every basis `h`), with the
/// products evaluated letter by letter.
pub fn relation_annihilation_check(pairing: &Pairing) -> Vec<CaseResult> {
    use DualGen as D;
    use HGen as Hg;
    let ctx = pairing.context();
    let n = ctx.order();
    let w = ctx.omega();
    let mut out = Vec::new();
    for m in TaftMonomial::basis(n) {
        let f = DualElement::basis(ctx, m);
        let label = mono_label(['X', 'G'], m);
        let comm = pairing.pair_h_word(&f, &[Hg::X, Hg::G]) - &w * pairing.pair_h_word(&f, &[Hg::G, Hg::X]);
        let nil = pairing.pair_h_word(&f, &vec![Hg::X; n]);
        let cyc = pairing.pair_h_word(&f, &vec![Hg::G; n]) - f.counit();
        for (rel, v) in [("xg-wgx", comm), ("x^n", nil), ("g^n-1", cyc)] {
            out.push(CaseResult::new(format!("pair_rel_h/n={n}/F={label}/rel={rel}"), v.is_zero()));
        }
    }
    for m in TaftMonomial::basis(n) {
        let h = TaftElement::basis(ctx, m);
        let label = mono_label(['x', 'g'], m);
        let comm = pairing.pair_dual_word(&[D::X, D::G], &h) - &w * pairing.pair_dual_word(&[D::G, D::X], &h);
        let nil = pairing.pair_dual_word(&vec![D::X; n], &h);
        let cyc = pairing.pair_dual_word(&vec![D::G; n], &h) - h.counit();
        for (rel, v) in [("XG-wGX", comm), ("X^n", nil), ("G^n-eps", cyc)] {
            out.push(CaseResult::new(format!("pair_rel_dual/n={n}/h={label}/rel={rel}"), v.is_zero()));
        }
    }
    out
}

/// `<F, h>` from the table against the letter-by-letter `H`-side rule, one
/// case per basis `F` covering every basis `h`.
pub fn pairing_law_check(pairing: &Pairing) -> Vec<CaseResult> {
    let ctx = pairing.context();
    let n = ctx.order();
    TaftMonomial::basis(n)
        .map(|fm| {
            let f = DualElement::basis(ctx, fm);
            let bad: Vec<String> = TaftMonomial::basis(n)
                .filter(|&hm| pairing.pair_h_word(&f, &h_word(hm)) != *pairing.monomials(fm, hm))
                .map(|hm| mono_label(['x', 'g'], hm))
                .collect();
            CaseResult::new(format!("pair_law/n={n}/F={}", mono_label(['X', 'G'], fm)), bad.is_empty())
                .detail_on_failure(|| format!("mismatch on {}", bad.join(",")))
        })
        .collect()
}

/// `<S(F), h> = <F, S(h)>`, one case per basis `F`.
pub fn antipode_compatibility_check(pairing: &Pairing) -> Vec<CaseResult> {
    let ctx = pairing.context();
    let n = ctx.order();
    TaftMonomial::basis(n)
        .map(|fm| {
            let f = DualElement::basis(ctx, fm);
            let sf = f.antipode();
            let pass = TaftMonomial::basis(n).all(|hm| {
                let h = TaftElement::basis(ctx, hm);
                pairing.pair(&sf, &h).unwrap() == pairing.pair(&f, &h.antipode()).unwrap()
            });
            CaseResult::new(format!("pair_antipode/n={n}/F={}", mono_label(['X', 'G'], fm)), pass)
        })
        .collect()
}

/// Rank of the Gram matrix and the grouplike Vandermonde determinant.
#[derive(Debug, Clone)]
pub struct RankReport {
    pub n: usize,
    pub rank: usize,
    pub full_rank: bool,
    pub grouplike_det: CycScalar,
}

pub fn pairing_nondegeneracy(pairing: &Pairing) -> RankReport {
    let ctx = pairing.context();
    let n = ctx.order();
    let rank = linalg::rank(ctx, pairing.gram_matrix());
    let sub: Vec<Vec<CycScalar>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|c| pairing.monomials(TaftMonomial::new(0, a), TaftMonomial::new(0, c)).clone())
                .collect()
        })
        .collect();
    let grouplike_det = linalg::determinant(ctx, sub);
    RankReport { n, rank, full_rank: rank == n * n, grouplike_det }
}

impl RankReport {
    pub fn cases(&self) -> Vec<CaseResult> {
        let n = self.n;
        vec![
            CaseResult::new(format!("gram_rank/n={n}"), self.full_rank)
                .param("rank", self.rank)
                .param("dim", n * n),
            CaseResult::new(format!("gram_grouplike_det/n={n}"), !self.grouplike_det.is_zero()),
        ]
    }
}

/// A linear operator on `A`, stored by its images of `u^0, ..., u^(n-1)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AOperator {
    images: Vec<AElement>,
}

impl AOperator {
    pub fn from_fn(ctx: &CycContext, mut f: impl FnMut(&AElement) -> AElement) -> Self {
        Self { images: (0..ctx.order()).map(|m| f(&AElement::basis(ctx, m))).collect() }
    }

    pub fn apply(&self, a: &AElement) -> AElement {
        let mut out = AElement::zero(a.context());
        for (m, c) in a.terms() {
            out = &out + &self.images[m].scale(c);
        }
        out
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self { images: other.images.iter().map(|v| self.apply(v)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self { images: self.images.iter().zip(&other.images).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: &CycScalar) -> Self {
        Self { images: self.images.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn image(&self, m: usize) -> &AElement {
        &self.images[m]
    }
}

/// `G . u^m = w^(-m) u^m`, from `G . u = w^-1 u` and `G(ab) = (Ga)(Gb)`.
pub fn act_big_g(a: &AElement) -> AElement {
    let ctx = a.context();
    let mut out = AElement::zero(ctx);
    for (m, c) in a.terms() {
        out = &out + &big_g_on_basis(ctx, m).scale(c);
    }
    out
}

fn big_g_on_basis(ctx: &CycContext, m: usize) -> AElement {
    let gu = AElement::u(ctx).scale(&ctx.omega_pow(-1));
    (0..m).fold(AElement::one(ctx), |acc, _| &gu * &acc)
}

/// `X . 1 = 0`, `X . u = (w^-1 - 1) u^2`, and `X(ab) = (Xa) b + (Ga)(Xb)`.
pub fn act_big_x(a: &AElement) -> AElement {
    let ctx = a.context();
    let mut out = AElement::zero(ctx);
    for (m, c) in a.terms() {
        out = &out + &big_x_on_basis(ctx, m).scale(c);
    }
    out
}

fn big_x_on_basis(ctx: &CycContext, m: usize) -> AElement {
    let u = AElement::u(ctx);
    let xu = AElement::u_pow(ctx, 2).scale(&(ctx.omega_pow(-1) - ctx.one()));
    let gu = u.scale(&ctx.omega_pow(-1));
    let mut x_prev = AElement::zero(ctx); // X . u^0
    let mut u_prev = AElement::one(ctx); // u^(j-1)
    for _ in 0..m {
        // X . (u u^(j-1)) = (X u) u^(j-1) + (G u)(X u^(j-1))
        x_prev = &(&xu * &u_prev) + &(&gu * &x_prev);
        u_prev = &u * &u_prev;
    }
    x_prev
}

/// The left action of `H*` on `A`: `X^b G^a` acts as `X` applied `b` times
/// after `G` applied `a` times.
pub fn dual_action(f: &DualElement, a: &AElement) -> Result<AElement> {
    if f.context() != a.context() {
        return Err(Error::ContextMismatch);
    }
    let mut out = AElement::zero(a.context());
    for (m, c) in f.terms() {
        let mut v = a.clone();
        for _ in 0..m.g {
            v = act_big_g(&v);
        }
        for _ in 0..m.x {
            v = act_big_x(&v);
        }
        out = &out + &v.scale(c);
    }
    Ok(out)
}

/// The four cross relations of the double, the `H*` relations, and the
/// closed form of `X` on powers of `u`, all as operator identities on `A`.
pub fn double_relations_check(ctx: &CycContext) -> Vec<CaseResult> {
    let n = ctx.order();
    let g = AOperator::from_fn(ctx, act_g);
    let x = AOperator::from_fn(ctx, act_x);
    let big_g = AOperator::from_fn(ctx, act_big_g);
    let big_x = AOperator::from_fn(ctx, act_big_x);
    let winv = ctx.omega_pow(-1);
    let w = ctx.omega();
    let id = AOperator::from_fn(ctx, Clone::clone);
    let zero = AOperator::from_fn(ctx, |a| AElement::zero(a.context()));
    let power = |op: &AOperator, k: usize| (0..k).fold(id.clone(), |acc, _| op.compose(&acc));

    let relations = [
        ("gG=Gg", g.compose(&big_g), big_g.compose(&g)),
        ("xG=w^-1Gx", x.compose(&big_g), big_g.compose(&x).scale(&winv)),
        ("Xg=w^-1gX", big_x.compose(&g), g.compose(&big_x).scale(&winv)),
        ("xX-Xx=G-g", x.compose(&big_x).sub(&big_x.compose(&x)), big_g.sub(&g)),
        ("XG=wGX", big_x.compose(&big_g), big_g.compose(&big_x).scale(&w)),
        ("X^n=0", power(&big_x, n), zero.clone()),
        ("G^n=1", power(&big_g, n), id.clone()),
        ("xg=wgx", x.compose(&g), g.compose(&x).scale(&w)),
        ("x^n=0", power(&x, n), zero),
        ("g^n=1", power(&g, n), id),
    ];
    let mut out: Vec<CaseResult> = relations
        .into_iter()
        .map(|(rel, lhs, rhs)| CaseResult::new(format!("double/n={n}/rel={rel}"), lhs == rhs))
        .collect();

    // X . u^m = (w^-1 - 1) (m)_{w^-1} u^(m+1)
    let mut q_inv = ctx.zero();
    let closed = (0..n).all(|m| {
        let expect = AElement::u_pow(ctx, m + 1).scale(&((ctx.omega_pow(-1) - ctx.one()) * &q_inv));
        q_inv += ctx.omega_pow(-(m as i64));
        big_x.image(m) == &expect
    });
    out.push(CaseResult::new(format!("double/n={n}/rel=X_closed_form"), closed));
    out
}

/// Ways of turning the coaction into an action of the dual generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DualizationConvention {
    /// `f . a = sum <f, a_{-1}> a_0`.
    Plain,
    /// `f . a = sum <S(f), a_{-1}> a_0`.
    Antipode,
    /// `f . a = sum <S^-1(f), a_{-1}> a_0`, the antipode of `(H*)^cop`.
    InverseAntipode,
    /// `G`, `X` act as `G^-1`, `X G^-1` do under [`DualizationConvention::Plain`].
    CopSubstitution,
}

impl DualizationConvention {
    pub const ALL: [Self; 4] = [Self::Plain, Self::Antipode, Self::InverseAntipode, Self::CopSubstitution];

    pub fn name(self) -> &'static str {
        match self {
            Self::Plain => "plain",
            Self::Antipode => "antipode",
            Self::InverseAntipode => "inverse_antipode",
            Self::CopSubstitution => "cop_substitution",
        }
    }

    fn functional(self, ctx: &CycContext, f: DualGen) -> DualElement {
        let base = match f {
            DualGen::G => DualElement::big_g(ctx),
            DualGen::X => DualElement::big_x(ctx),
        };
        match self {
            Self::Plain => base,
            Self::Antipode => base.antipode(),
            Self::InverseAntipode => base.antipode_inverse(),
            Self::CopSubstitution => {
                let g_inv = DualElement::monomial(ctx, 0, -1);
                match f {
                    DualGen::G => g_inv,
                    DualGen::X => &DualElement::big_x(ctx) * &g_inv,
                }
            }
        }
    }
}

/// `sum <phi, a_{-1}> a_0` for the functional `phi` the convention assigns to `f`.
pub fn induced_action(
    coaction: &Coaction,
    pairing: &Pairing,
    convention: DualizationConvention,
    f: DualGen,
    a: &AElement,
) -> Result<AElement> {
    let ctx = coaction.context();
    let phi = convention.functional(ctx, f);
    let mut out = AElement::zero(ctx);
    for (keys, c) in coaction.rho(a)?.terms() {
        let (BasisKey::H(p), BasisKey::A(m)) = (keys[0], keys[1]) else {
            unreachable!("H (x) A")
        };
        let v = pairing.pair(&phi, &TaftElement::basis(ctx, p))?;
        if !v.is_zero() {
            out.add_basis(m, &(c * &v));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct ConventionOutcome {
    pub convention: DualizationConvention,
    pub g_on_u: AElement,
    pub x_on_u: AElement,
    /// `G . u = w^-1 u` and `X . u = (w^-1 - 1) u^2`.
    pub reproduces: bool,
    /// The induced `G`, `X` agree with [`act_big_g`], [`act_big_x`] on every `u^m`.
    pub agrees_on_basis: bool,
}

#[derive(Debug, Clone)]
pub struct DualizationReport {
    pub n: usize,
    pub coefficient_forms: Vec<CaseResult>,
    pub conventions: Vec<ConventionOutcome>,
}

impl DualizationReport {
    pub fn matching(&self) -> Vec<DualizationConvention> {
        self.conventions.iter().filter(|c| c.reproduces).map(|c| c.convention).collect()
    }

    pub fn cases(&self) -> Vec<CaseResult> {
        let n = self.n;
        let mut out = self.coefficient_forms.clone();
        let names: Vec<&str> = self.matching().iter().map(|c| c.name()).collect();
        let mut case = CaseResult::new(format!("dualization/n={n}"), !names.is_empty())
            .param("matching", names.join(","));
        for c in &self.conventions {
            case = case.param(
                c.convention.name(),
                format!("G·u={}; X·u={}", c.g_on_u.render("w"), c.x_on_u.render("w")),
            );
        }
        out.push(case);
        out
    }
}

/// Checks the two closed forms of `a_m` and evaluates every convention in
/// [`DualizationConvention::ALL`] against the prescribed action on `u`.
pub fn dual_action_consistency(coaction: &Coaction, pairing: &Pairing) -> DualizationReport {
    let ctx = coaction.context();
    let n = ctx.order();
    let mut coefficient_forms = Vec::with_capacity(n);
    for m in 0..n {
        let tri = ctx.omega_pow((m * (m + 1) / 2) as i64);
        let first = ((ctx.one() - ctx.omega_pow(-1)) * ctx.omega()).pow(m as u64) * &tri;
        let second = (ctx.omega() - ctx.one()).pow(m as u64) * &tri;
        let pass = first == second && second == a_coefficient(ctx, m);
        coefficient_forms.push(
            CaseResult::new(format!("a_dual_form/n={n}/m={m}"), pass).param("value", first.render("w")),
        );
    }

    let u = AElement::u(ctx);
    let want_g = u.scale(&ctx.omega_pow(-1));
    let want_x = AElement::u_pow(ctx, 2).scale(&(ctx.omega_pow(-1) - ctx.one()));
    let conventions = DualizationConvention::ALL
        .iter()
        .map(|&conv| {
            let act = |f, a: &AElement| induced_action(coaction, pairing, conv, f, a).expect("shared context");
            let g_on_u = act(DualGen::G, &u);
            let x_on_u = act(DualGen::X, &u);
            let agrees_on_basis = (0..n).all(|m| {
                let b = AElement::basis(ctx, m);
                act(DualGen::G, &b) == act_big_g(&b) && act(DualGen::X, &b) == act_big_x(&b)
            });
            ConventionOutcome {
                convention: conv,
                reproduces: g_on_u == want_g && x_on_u == want_x,
                g_on_u,
                x_on_u,
                agrees_on_basis,
            }
        })
        .collect();
    DualizationReport { n, coefficient_forms, conventions }
}
