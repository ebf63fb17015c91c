//! Which checks each suite runs.

use taft_core::check::CaseResult;
use taft_core::comodule::{
    comodule_axiom_check, counit_axiom_check, rho_closed_form_check, rho_u_power_n_check,
    theorem_main_identity_check,
};
use taft_core::dual_pairing::{
    antipode_compatibility_check, double_relations_check, dual_action_consistency, pairing_base_cases,
    pairing_law_check, pairing_nondegeneracy, relation_annihilation_check,
};
use taft_core::qcombinat::{product_form_check, three_way_oracle_check};
use taft_core::quantum_plane_a::a_coefficient_identities;
use taft_core::taft_hopf::hopf_axioms_check;
use taft_core::yetter_drinfeld::{
    braided_commutativity_sweep, yd_displayed_computations, yd_full_sweep, yd_generator_sweep,
};
use taft_core::{Coaction, CycContext, Pairing};

use crate::config::Suite;

/// Largest order at which the YD condition is swept over every basis `h`;
/// above it only the generators `g`, `x` are used.
pub const YD_FULL_SWEEP_MAX: usize = 6;

/// A named unit of work. Every check builds what it needs from the context.
#[derive(Clone, Copy)]
pub struct Check {
    pub name: &'static str,
    pub run: fn(&CycContext) -> Vec<CaseResult>,
}

macro_rules! check {
    ($name:literal, |$c:ident| $body:expr) => {
        Check { name: $name, run: |$c: &CycContext| $body }
    };
}

fn coaction_check(ctx: &CycContext, f: fn(&Coaction) -> Vec<CaseResult>) -> Vec<CaseResult> {
    f(&Coaction::new(ctx))
}

fn pairing_check(ctx: &CycContext, f: fn(&Pairing) -> Vec<CaseResult>) -> Vec<CaseResult> {
    f(&Pairing::new(ctx))
}

pub fn checks(suite: Suite, n: usize) -> Vec<Check> {
    match suite {
        Suite::Identities => vec![
            check!("thm_main", |c| theorem_main_identity_check(c)),
            check!("oracle", |c| three_way_oracle_check(c)),
            check!("qbinom_product", |c| product_form_check(c)),
        ],
        Suite::Hopf => vec![check!("hopf", |c| hopf_axioms_check(c))],
        Suite::Comodule => vec![
            check!("comodule", |c| coaction_check(c, comodule_axiom_check)),
            check!("counit", |c| coaction_check(c, counit_axiom_check)),
            check!("rho_u_pow_n", |c| vec![rho_u_power_n_check(&Coaction::new(c))]),
            check!("rho_closed", |c| coaction_check(c, rho_closed_form_check)),
            check!("a_identities", |c| a_coefficient_identities(c)),
        ],
        Suite::Yd => {
            let sweep = if n <= YD_FULL_SWEEP_MAX {
                check!("yd", |c| coaction_check(c, yd_full_sweep))
            } else {
                check!("yd", |c| coaction_check(c, yd_generator_sweep))
            };
            vec![
                sweep,
                check!("yd_display", |c| coaction_check(c, yd_displayed_computations)),
                check!("braided", |c| coaction_check(c, braided_commutativity_sweep)),
            ]
        }
        Suite::Dual => vec![
            check!("pair_base", |c| pairing_check(c, pairing_base_cases)),
            check!("pair_rel", |c| pairing_check(c, relation_annihilation_check)),
            check!("pair_law", |c| pairing_check(c, pairing_law_check)),
            check!("pair_antipode", |c| pairing_check(c, antipode_compatibility_check)),
            check!("gram", |c| pairing_nondegeneracy(&Pairing::new(c)).cases()),
            check!("double", |c| double_relations_check(c)),
            check!("dualization", |c| dual_action_consistency(&Coaction::new(c), &Pairing::new(c)).cases()),
        ],
        Suite::All => Suite::PARTS.iter().flat_map(|&s| checks(s, n)).collect(),
    }
}
