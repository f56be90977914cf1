//! The extended affine Weyl group of type (A_{2n+1} + A_1 + A_1)^(1) as
//! mutation words: parameters, generator words, closed-form actions, and
//! verification suites.

mod closed_form;
mod generators;
mod params;
pub mod sums;
mod verify;

pub use closed_form::{act_closed_form, cartan};
pub use generators::{generator_word, permutation_of, rho_pairs, Generator};
pub use params::{md, params_from_y, y_from_params, ParamState};
pub use verify::{
    act_gens, check_relations, fundamental_relations, lambda_hat, IndexConvention, Relation,
    act_word, pi_order, seed_sampler, seed_vars, verify_b_lemmas, verify_fundamental_relations,
    verify_generator_consistency, verify_quiver_invariance, verify_s0_derivation, y_of_point,
};
