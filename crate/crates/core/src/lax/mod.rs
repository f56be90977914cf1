//! Lax forms: the `(2n+2) × (2n+2)` linear q-difference system whose
//! compatibility conditions reproduce the tilde transformations, and its
//! reduction to the `2 × 2` q-Garnier pair.

mod garnier;
mod laurent;
mod matrices;

pub use garnier::{garnier_a, laplace_reduce, verify_garnier, GarnierPair};
pub use laurent::{det, inv2, mat_mul, LaurentMatrix, LaurentPoly};
pub use matrices::{apply_word, build_gamma, build_gamma_tau2, build_m, build_pi, gamma_of_word, tau2_tilde_word, TildeGen};

use crate::error::Result;
use crate::exactalg::{sample_point, Field, Point, Rat};
use crate::painleve::{painleve_vars, state_of_point, tilde_pi_squared_unscaled, tilde_reflection_t_scaled, PainleveState};
use crate::report::{run_checks, Check, SuiteReport};

/// Sampler of states with a random gauge `h`.
pub fn lax_sampler(n: usize) -> impl Fn(u64) -> Result<Point> + Sync {
    let (mut vt, cons) = painleve_vars(n);
    vt.add_var("h");
    move |s| sample_point(&vt, &cons, s)
}

/// The state at a point drawn by [`lax_sampler`].
pub fn lax_state_of_point(n: usize, pt: &Point) -> Result<PainleveState<Rat>> {
    let mut st = state_of_point(n, pt)?;
    st.h = pt.get("h")?;
    Ok(st)
}

/// The state for sampler seed `s`.
pub fn lax_state(n: usize, s: u64) -> Result<PainleveState<Rat>> {
    lax_state_of_point(n, &lax_sampler(n)(s)?)
}

/// `T_{q,z}^{-1}` on a matrix in `u_z`: `u_z → u_z / u_q²`.
pub fn shift_down(m: &LaurentMatrix, st: &PainleveState<Rat>) -> Result<LaurentMatrix> {
    m.subst_scale(&st.q_root().inv()?)
}

/// One compatibility condition `w(M) Γ_w = T_{q,z}^{-1}(Γ_w) M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LaxCase {
    /// `r̃_j` with `Γ_j`.
    Reflection(usize),
    /// `π̃²` with `Π`.
    PiSquared,
    /// `τ2` with the composite `Γ`.
    Tau2,
}

impl LaxCase {
    /// `r̃_0 … r̃_{2n+1}` and `π̃²`.
    pub fn generators(n: usize) -> Vec<LaxCase> {
        (0..2 * n + 2).map(LaxCase::Reflection).chain([LaxCase::PiSquared]).collect()
    }

    fn word(&self, n: usize) -> Vec<TildeGen> {
        match self {
            LaxCase::Reflection(j) => vec![TildeGen::R(*j)],
            LaxCase::PiSquared => vec![TildeGen::PiSquared],
            LaxCase::Tau2 => tau2_tilde_word(n),
        }
    }

    fn label(&self) -> String {
        match self {
            LaxCase::Reflection(j) => format!("r~_{j}(M) Gamma_{j} = T^-1(Gamma_{j}) M"),
            LaxCase::PiSquared => "pi~^2(M) Pi = T^-1(Pi) M".into(),
            LaxCase::Tau2 => "tau2(M) Gamma = T^-1(Gamma) M".into(),
        }
    }
}

/// Both sides of a compatibility condition at a state.
pub fn compatibility_sides(case: &LaxCase, st: &PainleveState<Rat>) -> Result<(LaurentMatrix, LaurentMatrix)> {
    let (gamma, image) = gamma_of_word(&case.word(st.n()), st)?;
    let lhs = &build_m(&image)? * &gamma;
    let rhs = &shift_down(&gamma, st)? * &build_m(st)?;
    Ok((lhs, rhs))
}

/// Checks the listed compatibility conditions as exact identities of
/// Laurent matrices at random states.
pub fn verify_compatibility(n: usize, trials: usize, seed: u64, cases: &[LaxCase]) -> SuiteReport {
    let checks: Vec<(String, Check<LaurentMatrix>)> = cases
        .iter()
        .map(|&case| {
            let check: Check<LaurentMatrix> = Box::new(move |pt: &Point| compatibility_sides(&case, &lax_state_of_point(n, pt)?));
            (case.label(), check)
        })
        .collect();
    let mut printed: Vec<(String, Check<LaurentMatrix>)> = Vec::new();
    if cases.contains(&LaxCase::Reflection(2 * n + 1)) {
        printed.push((
            "r~_{2n+1} compatibility with h -> h - (a_(n+1) - b_(n+1)) h/(t R^baa_(n+1))".into(),
            Box::new(move |pt: &Point| {
                let st = lax_state_of_point(n, pt)?;
                single_sides(&st, &tilde_reflection_t_scaled(&st)?, TildeGen::R(2 * n + 1))
            }),
        ));
    }
    if cases.contains(&LaxCase::PiSquared) {
        printed.push((
            "pi~^2 compatibility with h -> f_1 h/t".into(),
            Box::new(move |pt: &Point| {
                let st = lax_state_of_point(n, pt)?;
                single_sides(&st, &tilde_pi_squared_unscaled(&st)?, TildeGen::PiSquared)
            }),
        ));
    }
    let notes = run_checks(n, trials, seed, lax_sampler(n), printed)
        .into_iter()
        .map(|r| format!("{}: {}", r.relation, if r.pass { "holds" } else { "does not hold" }))
        .collect();
    SuiteReport::new("lax-compat", n, seed, run_checks(n, trials, seed, lax_sampler(n), checks)).with_notes(notes)
}

/// `x(M) Γ_x` and `T_{q,z}^{-1}(Γ_x) M` for a given image state of `x`.
fn single_sides(st: &PainleveState<Rat>, image: &PainleveState<Rat>, g: TildeGen) -> Result<(LaurentMatrix, LaurentMatrix)> {
    let gamma = g.gauge(image)?;
    Ok((&build_m(image)? * &gamma, &shift_down(&gamma, st)? * &build_m(st)?))
}
