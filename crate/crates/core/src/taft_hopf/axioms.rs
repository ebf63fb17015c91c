//! Exhaustive Hopf-algebra axiom checks on basis monomials.

use super::{BasisKey, FactorKind, TaftElement, TaftMonomial, TensorElement};
use crate::check::CaseResult;
use crate::cyclotomic::CycContext;

const HH: [FactorKind; 2] = [FactorKind::H, FactorKind::H];

fn label(m: TaftMonomial) -> String {
    format!("x^{}g^{}", m.x, m.g)
}

fn h_key(key: BasisKey) -> TaftMonomial {
    match key {
        BasisKey::H(m) => m,
        BasisKey::A(_) => unreachable!("H slot"),
    }
}

/// `m: H (x) H -> H`.
pub fn multiply_slots(t: &TensorElement) -> TaftElement {
    let ctx = t.context();
    let mut out = TaftElement::zero(ctx);
    for (keys, c) in t.terms() {
        let p = TaftElement::basis(ctx, h_key(keys[0]));
        let q = TaftElement::basis(ctx, h_key(keys[1]));
        out = &out + &(&p * &q).scale(c);
    }
    out
}

/// `(D (x) id) D = (id (x) D) D` on every basis monomial.
pub fn coassociativity_check(ctx: &CycContext) -> Vec<CaseResult> {
    let n = ctx.order();
    TaftMonomial::basis(n)
        .map(|m| {
            let d = TaftElement::basis(ctx, m).coproduct();
            let delta = |key: BasisKey| Ok(TaftElement::basis(ctx, h_key(key)).coproduct());
            let left = d.map_slot(0, &HH, delta).expect("H slot");
            let right = d.map_slot(1, &HH, delta).expect("H slot");
            CaseResult::new(format!("hopf_coassoc/n={n}/h={}", label(m)), left == right)
                .detail_on_failure(|| format!("(Δ⊗id)Δ = {left}; (id⊗Δ)Δ = {right}"))
        })
        .collect()
}

/// `(eps (x) id) D = id = (id (x) eps) D` on every basis monomial.
pub fn counit_check(ctx: &CycContext) -> Vec<CaseResult> {
    let n = ctx.order();
    TaftMonomial::basis(n)
        .map(|m| {
            let h = TaftElement::basis(ctx, m);
            let d = h.coproduct();
            let eps = |key: BasisKey| TaftElement::basis(ctx, h_key(key)).counit();
            let left = d.contract_slot(0, eps).expect("H slot").to_taft();
            let right = d.contract_slot(1, eps).expect("H slot").to_taft();
            let pass = left.as_ref() == Some(&h) && right.as_ref() == Some(&h);
            CaseResult::new(format!("hopf_counit/n={n}/h={}", label(m)), pass)
        })
        .collect()
}

/// `m(S (x) id) D = eps 1 = m(id (x) S) D` on every basis monomial.
pub fn antipode_check(ctx: &CycContext) -> Vec<CaseResult> {
    let n = ctx.order();
    TaftMonomial::basis(n)
        .map(|m| {
            let h = TaftElement::basis(ctx, m);
            let d = h.coproduct();
            let expect = TaftElement::scalar(ctx, h.counit());
            let mut left = TaftElement::zero(ctx);
            let mut right = TaftElement::zero(ctx);
            for (keys, c) in d.terms() {
                let p = TaftElement::basis(ctx, h_key(keys[0]));
                let q = TaftElement::basis(ctx, h_key(keys[1]));
                left = &left + &(&p.antipode() * &q).scale(c);
                right = &right + &(&p * &q.antipode()).scale(c);
            }
            CaseResult::new(format!("hopf_antipode/n={n}/h={}", label(m)), left == expect && right == expect)
                .detail_on_failure(|| format!("m(S⊗id)Δ = {left}; m(id⊗S)Δ = {right}"))
        })
        .collect()
}

/// `D(x^b g^a) = D(x)^b D(g)^a` by tensor multiplication.
pub fn coproduct_power_check(ctx: &CycContext) -> Vec<CaseResult> {
    let n = ctx.order();
    let dx = TaftElement::x(ctx).coproduct();
    let dg = TaftElement::g(ctx).coproduct();
    TaftMonomial::basis(n)
        .map(|m| {
            let direct = TaftElement::basis(ctx, m).coproduct();
            let powered = &dx.pow(m.x) * &dg.pow(m.g);
            CaseResult::new(format!("hopf_coproduct_powers/n={n}/h={}", label(m)), direct == powered)
        })
        .collect()
}

/// `D(pq) = D(p) D(q)` and `eps(pq) = eps(p) eps(q)`, one case per `p`
/// covering every basis `q`.
pub fn algebra_map_check(ctx: &CycContext) -> Vec<CaseResult> {
    let n = ctx.order();
    let basis: Vec<TaftElement> = TaftMonomial::basis(n).map(|m| TaftElement::basis(ctx, m)).collect();
    let coproducts: Vec<TensorElement> = basis.iter().map(TaftElement::coproduct).collect();
    let mut out = Vec::with_capacity(2 * basis.len());
    for (pm, (p, dp)) in TaftMonomial::basis(n).zip(basis.iter().zip(&coproducts)) {
        let mut delta_ok = true;
        let mut eps_ok = true;
        for (q, dq) in basis.iter().zip(&coproducts) {
            let pq = p * q;
            // pq is a multiple of one basis monomial (or zero)
            let d_pq = match pq.terms().next() {
                Some((m, c)) => coproducts[m.index(n)].scale(c),
                None => TensorElement::zero(ctx, &HH).expect("arity 2"),
            };
            delta_ok &= d_pq == dp * dq;
            eps_ok &= pq.counit() == p.counit() * q.counit();
        }
        out.push(CaseResult::new(format!("hopf_delta_mult/n={n}/p={}", label(pm)), delta_ok));
        out.push(CaseResult::new(format!("hopf_eps_mult/n={n}/p={}", label(pm)), eps_ok));
    }
    out
}

/// `D`, `eps` and (anti-multiplicatively) `S` respect `xg = w gx`, `x^n = 0`
/// and `g^n = 1` on generator images.
pub fn relation_preservation_check(ctx: &CycContext) -> Vec<CaseResult> {
    let n = ctx.order();
    let w = ctx.omega();
    let mut out = Vec::new();

    let dx = TaftElement::x(ctx).coproduct();
    let dg = TaftElement::g(ctx).coproduct();
    let unit2 = TensorElement::unit(ctx, &HH).expect("arity 2");
    let zero2 = TensorElement::zero(ctx, &HH).expect("arity 2");
    let delta = [
        ("xg-wgx", &dx * &dg == (&dg * &dx).scale(&w)),
        ("x^n", dx.pow(n) == zero2),
        ("g^n-1", dg.pow(n) == unit2),
    ];

    let (ex, eg) = (TaftElement::x(ctx).counit(), TaftElement::g(ctx).counit());
    let eps = [
        ("xg-wgx", &ex * &eg == &w * &eg * &ex),
        ("x^n", ex.pow(n as u64).is_zero()),
        ("g^n-1", eg.pow(n as u64).is_one()),
    ];

    // S(xg) = S(g)S(x) against S(w gx) = w S(x)S(g)
    let sx = TaftElement::x(ctx).antipode();
    let sg = TaftElement::g(ctx).antipode();
    let antipode = [
        ("xg-wgx", &sg * &sx == (&sx * &sg).scale(&w)),
        ("x^n", sx.pow(n).is_zero()),
        ("g^n-1", sg.pow(n) == TaftElement::one(ctx)),
    ];

    for (map, rels) in [("delta", delta), ("eps", eps), ("antipode", antipode)] {
        for (rel, pass) in rels {
            out.push(CaseResult::new(format!("hopf_relations/n={n}/map={map}/rel={rel}"), pass));
        }
    }
    out
}

/// Every check above, in a fixed order.
pub fn hopf_axioms_check(ctx: &CycContext) -> Vec<CaseResult> {
    let mut out = coassociativity_check(ctx);
    out.extend(counit_check(ctx));
    out.extend(antipode_check(ctx));
    out.extend(coproduct_power_check(ctx));
    out.extend(algebra_map_check(ctx));
    out.extend(relation_preservation_check(ctx));
    out
}
