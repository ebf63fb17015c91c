//! The coaction `rho(u) = sum_i a_i x^i g^(-(i+1)) (x) u^(i+1)` of `H` on `A`.
//!
//! `rho` takes values in `H (x) A` with the `H` factor first, and the axioms
//! checked are `(D (x) id) rho = (id (x) rho) rho` and `(eps (x) id) rho = id`.
//! On powers of `u` it is extended multiplicatively, so the closed form for
//! `rho(u)^s` below is a genuine cross-check rather than an input.

use crate::check::CaseResult;
use crate::cyclotomic::{CycContext, CycScalar};
use crate::error::{Error, Result};
use crate::qcombinat::{composition_sum, composition_sum_parts, gaussian_binomial};
use crate::quantum_plane_a::{a_coefficient, AElement};
use crate::taft_hopf::{BasisKey, Factor, FactorKind, TaftElement, TensorElement};

const HA: [FactorKind; 2] = [FactorKind::H, FactorKind::A];
const HH: [FactorKind; 2] = [FactorKind::H, FactorKind::H];

/// `rho` together with its values on the basis `u^m`.
#[derive(Debug, Clone)]
pub struct Coaction {
    ctx: CycContext,
    coefficients: Vec<CycScalar>,
    rho_u: TensorElement,
    /// `powers[m] = rho(u)^m` for `0 <= m < n`.
    powers: Vec<TensorElement>,
}

impl Coaction {
    /// The coaction with `a_i = (w - 1)^i w^(i(i+1)/2)`.
    pub fn new(ctx: &CycContext) -> Self {
        let coeffs = (0..ctx.order()).map(|i| a_coefficient(ctx, i)).collect();
        Self::with_coefficients(ctx, coeffs)
    }

    /// Same shape with arbitrary coefficients; used for negative controls.
    ///
    /// Panics unless exactly `n` coefficients are given.
    pub fn with_coefficients(ctx: &CycContext, coefficients: Vec<CycScalar>) -> Self {
        let n = ctx.order();
        assert_eq!(coefficients.len(), n, "need one coefficient per i in 0..n");
        let mut rho_u = TensorElement::zero(ctx, &HA).expect("arity 2");
        for (i, a) in coefficients.iter().enumerate() {
            let h = TaftElement::monomial(ctx, i, -(i as i64 + 1)).scale(a);
            let t = TensorElement::pure(ctx, vec![Factor::H(h), Factor::A(AElement::u_pow(ctx, i + 1))]);
            rho_u = &rho_u + &t;
        }
        let mut powers = Vec::with_capacity(n);
        powers.push(TensorElement::unit(ctx, &HA).expect("arity 2"));
        for m in 1..n {
            let next = &powers[m - 1] * &rho_u;
            powers.push(next);
        }
        Self { ctx: ctx.clone(), coefficients, rho_u, powers }
    }

    pub fn context(&self) -> &CycContext {
        &self.ctx
    }

    pub fn coefficients(&self) -> &[CycScalar] {
        &self.coefficients
    }

    pub fn rho_u(&self) -> &TensorElement {
        &self.rho_u
    }

    /// `rho(u^m)` for a basis index `m < n`.
    pub fn rho_basis(&self, m: usize) -> &TensorElement {
        &self.powers[m]
    }

    /// `rho(u)^s` by repeated tensor multiplication, for any `s`.
    pub fn rho_power(&self, s: usize) -> TensorElement {
        self.rho_u.pow(s)
    }

    /// `rho` extended linearly over the basis.
    pub fn rho(&self, a: &AElement) -> Result<TensorElement> {
        if a.context() != &self.ctx {
            return Err(Error::ContextMismatch);
        }
        let mut out = TensorElement::zero(&self.ctx, &HA)?;
        for (m, c) in a.terms() {
            out = &out + &self.powers[m].scale(c);
        }
        Ok(out)
    }

    /// `(id (x) rho) rho(a)`, kinds `(H, H, A)`.
    pub fn id_tensor_rho(&self, a: &AElement) -> Result<TensorElement> {
        self.rho(a)?.map_slot(1, &HA, |k| match k {
            BasisKey::A(j) => Ok(self.powers[j].clone()),
            BasisKey::H(_) => unreachable!("slot 1 of H (x) A"),
        })
    }

    /// `(D (x) id) rho(a)`, kinds `(H, H, A)`.
    pub fn coproduct_tensor_id(&self, a: &AElement) -> Result<TensorElement> {
        let ctx = &self.ctx;
        self.rho(a)?.map_slot(0, &HH, |k| match k {
            BasisKey::H(m) => Ok(TaftElement::basis(ctx, m).coproduct()),
            BasisKey::A(_) => unreachable!("slot 0 of H (x) A"),
        })
    }

    /// `(eps (x) id) rho(a)`.
    pub fn counit_tensor_id(&self, a: &AElement) -> Result<AElement> {
        let ctx = &self.ctx;
        let t = self.rho(a)?.contract_slot(0, |k| match k {
            BasisKey::H(m) => TaftElement::basis(ctx, m).counit(),
            BasisKey::A(_) => unreachable!("slot 0 of H (x) A"),
        })?;
        Ok(t.to_a().expect("arity 1 over A"))
    }
}

/// `sum_k a_k P_s(k) x^k g^(-(k+s)) (x) u^(k+s)`, where `P_s(k)` sums the
/// composition weights of `k` into `s` parts.
pub fn rho_power_closed(ctx: &CycContext, s: usize) -> Result<TensorElement> {
    let n = ctx.order();
    if !(1..=n).contains(&s) {
        return Err(Error::PowerOutOfRange { s, n });
    }
    let mut out = TensorElement::zero(ctx, &HA)?;
    for k in 0..n {
        let c = a_coefficient(ctx, k) * composition_sum_parts(ctx, k, s);
        if c.is_zero() {
            continue;
        }
        let h = TaftElement::monomial(ctx, k, -((k + s) as i64)).scale(&c);
        out = &out + &TensorElement::pure(ctx, vec![Factor::H(h), Factor::A(AElement::u_pow(ctx, k + s))]);
    }
    Ok(out)
}

/// The coassociativity half of the comodule axiom, on `u` and then on every
/// basis element `u^m`.
pub fn comodule_axiom_check(coaction: &Coaction) -> Vec<CaseResult> {
    let ctx = coaction.context();
    let n = ctx.order();
    let mut out = Vec::with_capacity(n + 1);
    let mut run = |id: String, a: AElement, m: Option<usize>| {
        let lhs = coaction.id_tensor_rho(&a).expect("shared context");
        let rhs = coaction.coproduct_tensor_id(&a).expect("shared context");
        let mut case = CaseResult::new(id, lhs == rhs);
        if let Some(m) = m {
            case = case.param("m", m);
        }
        out.push(case.detail_on_failure(|| format!("(id⊗ρ)ρ = {lhs}; (Δ⊗id)ρ = {rhs}")));
    };
    run(format!("comodule/n={n}/on=u"), AElement::u(ctx), None);
    for m in 0..n {
        run(format!("comodule/n={n}/m={m}"), AElement::basis(ctx, m), Some(m));
    }
    out
}

/// `(eps (x) id) rho = id` on every basis element.
pub fn counit_axiom_check(coaction: &Coaction) -> Vec<CaseResult> {
    let ctx = coaction.context();
    let n = ctx.order();
    (0..n)
        .map(|m| {
            let a = AElement::basis(ctx, m);
            let got = coaction.counit_tensor_id(&a).expect("shared context");
            CaseResult::new(format!("counit/n={n}/m={m}"), got == a)
                .param("m", m)
                .detail_on_failure(|| format!("(ε⊗id)ρ(u^{m}) = {got}"))
        })
        .collect()
}

/// `rho(u)^n = w (1 (x) 1)` by direct tensor powering.
pub fn rho_u_power_n_check(coaction: &Coaction) -> CaseResult {
    let ctx = coaction.context();
    let n = ctx.order();
    let got = coaction.rho_power(n);
    let expect = TensorElement::unit(ctx, &HA).expect("arity 2").scale(&ctx.omega());
    CaseResult::new(format!("rho_u_pow_n/n={n}"), got == expect)
        .detail_on_failure(|| format!("ρ(u)^n = {got}"))
}

/// The closed form against direct powers for `1 <= s <= n`.
pub fn rho_closed_form_check(coaction: &Coaction) -> Vec<CaseResult> {
    let ctx = coaction.context();
    let n = ctx.order();
    let mut direct = TensorElement::unit(ctx, &HA).expect("arity 2");
    (1..=n)
        .map(|s| {
            direct = &direct * coaction.rho_u();
            let closed = rho_power_closed(ctx, s).expect("s in range");
            CaseResult::new(format!("rho_closed/n={n}/s={s}"), closed == direct)
                .param("s", s)
                .detail_on_failure(|| format!("closed = {closed}; direct = {direct}"))
        })
        .collect()
}

/// The composition sum with `s + 1` parts against `C_w(k+s, k)` when
/// `k + s < n` and against `0` otherwise, for all `0 <= k, s < n`.
pub fn theorem_main_identity_check(ctx: &CycContext) -> Vec<CaseResult> {
    let n = ctx.order();
    let mut out = Vec::with_capacity(n * n);
    for k in 0..n {
        for s in 0..n {
            let lhs = composition_sum(ctx, k, s);
            let rhs = if k + s < n {
                gaussian_binomial(ctx, k + s, k as i64)
            } else {
                ctx.zero()
            };
            out.push(
                CaseResult::new(format!("thm_main/n={n}/k={k}/s={s}"), lhs == rhs)
                    .param("k", k)
                    .param("s", s)
                    .param("lhs", lhs.render("w"))
                    .param("rhs", rhs.render("w")),
            );
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::{all_pass, failures};

    fn ctx(n: usize) -> CycContext {
        CycContext::new(n).unwrap()
    }

    #[test]
    fn rho_examples() {
        for n in 2..=6 {
            let c = ctx(n);
            let co = Coaction::new(&c);
            assert_eq!(co.rho(&AElement::one(&c)).unwrap(), TensorElement::unit(&c, &HA).unwrap());
            assert_eq!(co.rho(&AElement::u(&c)).unwrap(), *co.rho_u());
            assert_eq!(co.rho_u().len(), n);
            assert!(rho_u_power_n_check(&co).pass);
        }
    }

    #[test]
    fn rho_u_terms_have_normalised_shape() {
        let n = 4;
        let c = ctx(n);
        let co = Coaction::new(&c);
        for (i, a) in co.coefficients().iter().enumerate() {
            let g = n - ((i + 1) % n);
            let (key_a, coeff) = if i + 1 == n { (0, a * &c.omega()) } else { (i + 1, a.clone()) };
            let keys = [BasisKey::H(crate::taft_hopf::TaftMonomial::new(i, g % n)), BasisKey::A(key_a)];
            assert_eq!(co.rho_u().coefficient(&keys), coeff);
        }
    }

    #[test]
    fn closed_form_examples() {
        let c = ctx(5);
        let co = Coaction::new(&c);
        assert_eq!(rho_power_closed(&c, 1).unwrap(), *co.rho_u());
        let unit_w = TensorElement::unit(&c, &HA).unwrap().scale(&c.omega());
        assert_eq!(rho_power_closed(&c, 5).unwrap(), unit_w);
        assert_eq!(rho_power_closed(&c, 0), Err(Error::PowerOutOfRange { s: 0, n: 5 }));
        assert_eq!(rho_power_closed(&c, 6), Err(Error::PowerOutOfRange { s: 6, n: 5 }));

        let c2 = ctx(2);
        let co2 = Coaction::new(&c2);
        let sq = co2.rho_power(2);
        assert_eq!(sq, TensorElement::unit(&c2, &HA).unwrap().scale(&c2.omega()));
        assert_eq!(rho_power_closed(&c2, 2).unwrap(), sq);
    }

    #[test]
    fn axioms_small_n() {
        for n in 2..=5 {
            let co = Coaction::new(&ctx(n));
            let cm = comodule_axiom_check(&co);
            assert!(all_pass(&cm), "{:?}", failures(&cm));
            assert!(all_pass(&counit_axiom_check(&co)));
            assert!(all_pass(&rho_closed_form_check(&co)));
        }
    }

    #[test]
    fn main_identity_examples() {
        let t2 = theorem_main_identity_check(&ctx(2));
        assert_eq!(t2.len(), 4);
        let cell = t2.iter().find(|c| c.case_id == "thm_main/n=2/k=1/s=1").unwrap();
        assert!(cell.pass);
        assert_eq!(cell.params["lhs"], "0");
        let t3 = theorem_main_identity_check(&ctx(3));
        let cell = t3.iter().find(|c| c.case_id == "thm_main/n=3/k=1/s=1").unwrap();
        assert_eq!(cell.params["lhs"], "1+w");
        assert_eq!(cell.params["rhs"], "1+w");
        assert!(t3[0].params["lhs"] == "1" && t3[0].pass);
    }

    #[test]
    fn rho_is_multiplicative() {
        let n = 5;
        let c = ctx(n);
        let co = Coaction::new(&c);
        let samples = [
            AElement::u(&c) + AElement::basis(&c, 3).scale(&c.omega()),
            AElement::basis(&c, 4).scale(&c.from_int(-2)) + AElement::one(&c),
            AElement::basis(&c, 2) + AElement::basis(&c, 4).scale(&c.omega_pow(3)),
        ];
        for a in &samples {
            for b in &samples {
                let lhs = co.rho(&(a * b)).unwrap();
                let rhs = &co.rho(a).unwrap() * &co.rho(b).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn mismatched_context() {
        let co = Coaction::new(&ctx(3));
        assert_eq!(co.rho(&AElement::u(&ctx(4))).unwrap_err(), Error::ContextMismatch);
    }
}
