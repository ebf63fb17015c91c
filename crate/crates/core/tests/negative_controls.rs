use taft_core::check::all_pass;
use taft_core::comodule::{comodule_axiom_check, theorem_main_identity_check};
use taft_core::qcombinat::{composition_sum, q_integer};
use taft_core::quantum_plane_a::a_coefficient;
use taft_core::yetter_drinfeld::{yd_displayed_computations, yd_full_sweep, yd_generator_sweep};
use taft_core::{Coaction, CycContext};

fn scaled_a1(ctx: &CycContext) -> Coaction {
    let mut a: Vec<_> = (0..ctx.order()).map(|i| a_coefficient(ctx, i)).collect();
    a[1] = &a[1] * &ctx.omega();
    Coaction::with_coefficients(ctx, a)
}

#[test]
fn scaled_a1_breaks_comodule_and_yd() {
    for n in 3..=8 {
        let ctx = CycContext::new(n).unwrap();
        let co = scaled_a1(&ctx);
        assert!(!all_pass(&comodule_axiom_check(&co)), "n={n}");
        assert!(!all_pass(&yd_generator_sweep(&co)), "n={n}");
        let display = yd_displayed_computations(&co);
        assert!(!display.iter().find(|c| c.case_id.ends_with("h=x/agree")).unwrap().pass, "n={n}");
        if n <= 6 {
            assert!(!all_pass(&yd_full_sweep(&co)), "n={n}");
        }
    }
}

#[test]
fn scaled_a1_is_harmless_at_order_two() {
    // with w = -1 every value of a_1 gives a coaction satisfying both axioms
    let ctx = CycContext::new(2).unwrap();
    let co = scaled_a1(&ctx);
    assert!(all_pass(&comodule_axiom_check(&co)));
    assert!(all_pass(&yd_full_sweep(&co)));
}

#[test]
fn group_ring_reduction_breaks_vanishing_branch() {
    for n in 2..=8 {
        let ring = CycContext::group_ring(n).unwrap();
        assert!(!ring.is_field());
        // (n)_w is the zero sum in the field but not in Q[x]/(x^n - 1)
        assert!(!q_integer(&ring, n).is_zero());
        assert!(q_integer(&CycContext::new(n).unwrap(), n).is_zero());
        for case in theorem_main_identity_check(&ring) {
            let k: usize = case.params["k"].parse().unwrap();
            let s: usize = case.params["s"].parse().unwrap();
            assert_eq!(case.pass, k + s < n, "{}", case.case_id);
        }
    }
}

#[test]
fn group_ring_vanishing_sum_is_nonzero() {
    let ring = CycContext::group_ring(2).unwrap();
    let v = composition_sum(&ring, 1, 1);
    assert_eq!(v.render("w"), "1+w");
    assert!(!v.is_zero());
    assert!(composition_sum(&CycContext::new(2).unwrap(), 1, 1).is_zero());
}
