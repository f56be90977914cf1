//! The q-P_(n+1,n+1) system realized by `τ1`, its tilde symmetry, and the
//! q-LUC system realized by `τ3`.

mod flow;
mod qluc;
mod state;
mod tilde;
mod verify;

pub use flow::{painleve_to_params, params_to_painleve, phi_of, qp_step};
pub use qluc::{build_qluc_grid, c_label_overlap, c_of, qluc_vars, t_pair, verify_qluc, QlucGrid, QlucSample};
pub use state::{painleve_sampler, painleve_vars, state_of_point, PainleveState, Roots, StateJson};
pub use tilde::{tilde_pi, tilde_pi_squared, tilde_pi_squared_unscaled, tilde_reflection, tilde_reflection_t_scaled, AB};
pub use verify::{s_hat, tau1_by_word, verify_tau1_equivalence, verify_tilde};
