use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use taft_core::cyclotomic::primitive_exponents;
use taft_core::poly::RatPoly;
use taft_core::yetter_drinfeld::braided_commutativity_check;
use taft_core::{AElement, Coaction, CycContext, CycScalar, TaftElement, TaftMonomial};

fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn raw_coeffs() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-20i64..=20, 1i64..=6), 1..=12)
}

fn scalar(ctx: &CycContext, raw: &[(i64, i64)]) -> CycScalar {
    let p = RatPoly::from_coeffs(raw.iter().map(|&(a, b)| rational(a, b)).collect());
    ctx.reduce(&p)
}

fn context() -> impl Strategy<Value = CycContext> {
    (2usize..=12).prop_flat_map(|n| {
        prop::sample::select(primitive_exponents(n)).prop_map(move |t| CycContext::with_root(n, t).unwrap())
    })
}

fn taft_element(ctx: &CycContext, raw: &[(usize, usize, i64)]) -> TaftElement {
    let n = ctx.order();
    let mut h = TaftElement::zero(ctx);
    for &(b, a, c) in raw {
        h.add_term(TaftMonomial::new(b % n, a % n), ctx.from_int(c));
    }
    h
}

fn a_element(ctx: &CycContext, raw: &[i64]) -> AElement {
    let mut a = AElement::zero(ctx);
    for (m, &c) in raw.iter().enumerate().take(ctx.order()) {
        a.add_basis(m, &ctx.from_int(c));
    }
    a
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(ctx in context(), a in raw_coeffs(), b in raw_coeffs(), c in raw_coeffs()) {
        let (a, b, c) = (scalar(&ctx, &a), scalar(&ctx, &b), scalar(&ctx, &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn reduction_is_canonical(ctx in context(), a in raw_coeffs()) {
        let once = scalar(&ctx, &a);
        prop_assert!(once.coeffs().len() == ctx.degree());
        prop_assert_eq!(ctx.reduce(&once.to_poly()), once);
    }

    #[test]
    fn omega_pow_is_periodic(ctx in context(), k in -50i64..50) {
        let n = ctx.order() as i64;
        prop_assert_eq!(ctx.omega_pow(k), ctx.omega_pow(k.rem_euclid(n)));
        prop_assert_eq!(ctx.omega_pow(k) * ctx.omega_pow(-k), ctx.one());
    }

    #[test]
    fn coproduct_and_counit_are_multiplicative(
        n in 2usize..=5,
        p in prop::collection::vec((0usize..5, 0usize..5, -3i64..=3), 1..=4),
        q in prop::collection::vec((0usize..5, 0usize..5, -3i64..=3), 1..=4),
    ) {
        let ctx = CycContext::new(n).unwrap();
        let (p, q) = (taft_element(&ctx, &p), taft_element(&ctx, &q));
        let pq = &p * &q;
        prop_assert_eq!(pq.coproduct(), &p.coproduct() * &q.coproduct());
        prop_assert_eq!(pq.counit(), p.counit() * q.counit());
        prop_assert_eq!(pq.antipode(), &q.antipode() * &p.antipode());
    }

    #[test]
    fn coaction_is_multiplicative(
        n in 2usize..=6,
        a in prop::collection::vec(-4i64..=4, 6),
        b in prop::collection::vec(-4i64..=4, 6),
    ) {
        let ctx = CycContext::new(n).unwrap();
        let co = Coaction::new(&ctx);
        let (a, b) = (a_element(&ctx, &a), a_element(&ctx, &b));
        let ab = &a * &b;
        prop_assert_eq!(&ab, &(&b * &a));
        prop_assert_eq!(co.rho(&ab).unwrap(), &co.rho(&a).unwrap() * &co.rho(&b).unwrap());
        prop_assert!(braided_commutativity_check(&co, &a, &b).unwrap());
    }
}
