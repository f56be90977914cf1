//! Verification suites: the τ1 flow against q-P_(n+1,n+1), the tilde
//! symmetry against the Weyl group, and the bridge identities between them.

use super::flow::{painleve_to_params, params_to_painleve, qp_step};
use super::state::{painleve_sampler, state_of_point, PainleveState, Roots};
use super::tilde::{tilde_pi, tilde_pi_squared, tilde_reflection, tilde_reflection_t_scaled, AB};
use crate::error::Result;
use crate::exactalg::{Field, Point, Rat};
use crate::report::{run_checks, Check, SuiteReport};
use crate::seed::GroupWord;
use crate::translations::{act_group_word, translation_word, TBase, TranslationName};
use crate::weylrep::{act_gens, params_from_y, sums, y_from_params, Generator, ParamState};

/// `(a, b, t, f, g)` flattened.
fn core_vec<F: Field>(st: &PainleveState<F>) -> Vec<F> {
    let mut v = st.a.clone();
    v.extend(st.b.iter().cloned());
    v.push(st.t.clone());
    v.extend(st.f.iter().cloned());
    v.extend(st.g.iter().cloned());
    v
}

fn sample(n: usize, pt: &Point) -> Result<PainleveState<Rat>> {
    state_of_point(n, pt)
}

/// Applies a word to the Weyl-group image of a state.
fn word_on_params(w: &GroupWord, p: &ParamState<Rat>) -> Result<ParamState<Rat>> {
    Ok(params_from_y(&act_group_word(w, &y_from_params(p)?)?))
}

/// Roots after one step of the flow.
fn stepped_roots(st: &PainleveState<Rat>) -> Roots<Rat> {
    Roots { u_q: st.roots.u_q.clone(), u_t: st.q_root() * &st.roots.u_t, w: st.roots.w.clone() }
}

/// The τ1 image of a state computed through the seed, read back with the
/// unchanged scale `a_1`.
pub fn tau1_by_word(st: &PainleveState<Rat>) -> Result<PainleveState<Rat>> {
    let n = st.n();
    let w = translation_word(TranslationName::new(TBase::Tau1), n);
    let p = word_on_params(&w, &painleve_to_params(st)?)?;
    params_to_painleve(&p, st.a[0].clone(), stepped_roots(st), st.h.clone())
}

/// `Ŝ_{2i}` or, with `primed`, `Ŝ'_{2i}` for `i = 1..=n+1`.
///
/// The top index `i = n+1` is `Ŝ_{2n+2}`: the leading sum and the full
/// product are empty there, which is not the same as reading the formula at
/// `i = 0`.
pub fn s_hat<F: Field>(p: &ParamState<F>, i: usize, primed: bool) -> Result<F> {
    let n = p.n();
    let one = F::one();
    let factor = |k: usize| -> Result<F> {
        let k = k as i64;
        if primed {
            (p.f(2 * k).clone() * p.f(2 * k + 1)).inv()
        } else {
            Ok(p.f(2 * k).clone() * &p.a(2 * k + 1).div(p.f(2 * k + 1))?)
        }
    };
    let tail = |j: usize| -> Result<F> {
        let x = p.f(2 * j as i64);
        Ok(one.clone() + &if primed { x.inv()? } else { x.clone() })
    };
    let prod = |lo: usize, hi: usize| -> Result<F> { (lo..hi).try_fold(F::one(), |acc, k| Ok(acc * &factor(k)?)) };
    let mut total = F::zero();
    for j in i..=n {
        total = total + &(prod(i, j)? * &tail(j)?);
    }
    let full = prod(i, n + 1)?;
    total = total + &(full.clone() * &tail(0)?);
    for j in 1..i {
        total = total + &(full.clone() * &prod(0, j)? * &tail(j)?);
    }
    Ok(total)
}

/// q-P_(n+1,n+1) against τ1, with the equations of the flow checked on
/// the word image and the sum identities used in the derivation.
pub fn verify_tau1_equivalence(n: usize, trials: usize, seed: u64) -> SuiteReport {
    let mut checks: Vec<(String, Check<Vec<Rat>>)> = Vec::new();
    checks.push((
        "tau1 word = qp_step on (a, b, t, f, g)".into(),
        Box::new(move |pt: &Point| {
            let st = sample(n, pt)?;
            Ok((core_vec(&tau1_by_word(&st)?), core_vec(&qp_step(&st)?)))
        }),
    ));
    checks.push((
        "g_i g_i(qt) = F_(i+1) G_i / (F_i G_(i+1)) on the tau1 image".into(),
        Box::new(move |pt: &Point| {
            let st = sample(n, pt)?;
            let img = tau1_by_word(&st)?;
            let mut l = Vec::new();
            let mut r = Vec::new();
            for i in 1..=n {
                l.push(st.g(i)? * &img.g(i)?);
                r.push((st.F(i + 1) * &st.G(i)?).div(&(st.F(i) * &st.G(i + 1)?))?);
            }
            Ok((l, r))
        }),
    ));
    checks.push((
        "f-equation on the tau1 image".into(),
        Box::new(move |pt: &Point| {
            let st = sample(n, pt)?;
            let img = tau1_by_word(&st)?;
            let one = Rat::one();
            let g0 = img.g(0)?;
            let common = st.F(n + 1) * &st.F(1) * &(st.b(0).div(&g0)? - &one) * &(g0 - st.a(1));
            let mut l = Vec::new();
            let mut r = Vec::new();
            for i in 1..=n {
                let gb = img.g(i)?;
                l.push(st.f(i) * &img.f(i));
                let num = st.q.clone() * &st.t * &st.F(i) * &st.F(i + 1) * &(st.b(i).div(&gb)? - &one) * &(gb - st.a(i + 1));
                r.push(num.div(&common)?);
            }
            Ok((l, r))
        }),
    ));
    checks.push((
        "g_0 convention is preserved by tau1".into(),
        Box::new(move |pt: &Point| {
            let st = sample(n, pt)?;
            let w = translation_word(TranslationName::new(TBase::Tau1), n);
            let p = word_on_params(&w, &painleve_to_params(&st)?)?;
            let img = tau1_by_word(&st)?;
            Ok((vec![-(img.b(0).div(p.f(0))?)], vec![img.g(0)?]))
        }),
    ));
    checks.push((
        "tau1^-1 undoes qp_step".into(),
        Box::new(move |pt: &Point| {
            let st = sample(n, pt)?;
            let stepped = qp_step(&st)?;
            let w = translation_word(TranslationName::new(TBase::Tau1).pow(-1), n);
            let p = word_on_params(&w, &painleve_to_params(&stepped)?)?;
            let back = params_to_painleve(&p, st.a[0].clone(), st.roots.clone(), st.h.clone())?;
            Ok((core_vec(&back), core_vec(&st)))
        }),
    ));
    checks.push((
        "dictionary round trip".into(),
        Box::new(move |pt: &Point| {
            let st = sample(n, pt)?;
            let back = params_to_painleve(&painleve_to_params(&st)?, st.a[0].clone(), st.roots.clone(), st.h.clone())?;
            Ok((core_vec(&back), core_vec(&st)))
        }),
    ));
    checks.push((
        "tau1(phi_2i) through the hat sums".into(),
        Box::new(move |pt: &Point| {
            let st = sample(n, pt)?;
            let p = painleve_to_params(&st)?;
            let img = word_on_params(&translation_word(TranslationName::new(TBase::Tau1), n), &p)?;
            let mut l = Vec::new();
            let mut r = Vec::new();
            for i in 1..=n {
                let k = i as i64;
                l.push(img.f(2 * k).clone());
                let (sp, s2, s, sp2) = (s_hat(&p, i, true)?, s_hat(&p, i + 1, false)?, s_hat(&p, i, false)?, s_hat(&p, i + 1, true)?);
                r.push(p.a(2 * k).clone() * p.f(2 * k) * p.a(2 * k + 1) * &(sp * &s2).div(&(s * &sp2))?);
            }
            Ok((l, r))
        }),
    ));
    checks.push((
        "hat sums in terms of F_i, G_i".into(),
        Box::new(move |pt: &Point| {
            let st = sample(n, pt)?;
            let p = painleve_to_params(&st)?;
            let (mut l, mut r) = (Vec::new(), Vec::new());
            let g0 = st.g(0)?;
            for i in 1..=n {
                let bg = st.b(i) - &st.g(i)?;
                let inv_sq = (i..=n).try_fold(Rat::one(), |acc, j| Ok::<_, crate::error::Error>(acc * &(st.g(j)? * &st.g(j)?).inv()?))?;
                l.push(s_hat(&p, i, false)?);
                r.push(-(bg.div(&(st.q_half(n as i64 - 2)? * &st.t * &g0 * &st.f(i)))?) * &inv_sq * &st.G(i)?);
                l.push(s_hat(&p, i, true)?);
                r.push(bg.div(&(st.t.clone() * &st.b(i) * &st.f(i)))? * &st.F(i));
            }
            let bg0 = st.b(0) - &g0;
            l.push(s_hat(&p, n + 1, false)?);
            r.push(-(bg0.div(&(st.q_half(n as i64)? * &st.t * &g0))?) * &st.G(n + 1)?);
            l.push(s_hat(&p, n + 1, true)?);
            r.push(bg0.div(&(st.t.clone() * &st.b(0)))? * &st.F(n + 1));
            Ok((l, r))
        }),
    ));
    SuiteReport::new("tau1-equivalence", n, seed, run_checks(n, trials, seed, painleve_sampler(n), checks))
}

/// `r̃_j ≡ r_j`, `π̃ ≡ s'_1 π`, involutivity, and the bridge identities
/// between `R`-functions and the sums `S'`.
pub fn verify_tilde(n: usize, trials: usize, seed: u64) -> SuiteReport {
    use AB::{A, B};
    let mut checks: Vec<(String, Check<Vec<Rat>>)> = Vec::new();
    for j in 0..2 * n + 2 {
        checks.push((
            format!("r~_{j} = r_{j} under the dictionary"),
            Box::new(move |pt: &Point| {
                let st = sample(n, pt)?;
                let p = painleve_to_params(&st)?;
                let by_word = params_from_y(&act_gens(&[Generator::R(j)], &y_from_params(&p)?)?);
                Ok((painleve_to_params(&tilde_reflection(j, &st)?)?.flat(), by_word.flat()))
            }),
        ));
        checks.push((
            format!("r~_{j}^2 = 1 on (a, b, t, f, g, h)"),
            Box::new(move |pt: &Point| {
                let st = sample(n, pt)?;
                let mut back = core_vec(&tilde_reflection(j, &tilde_reflection(j, &st)?)?);
                let mut orig = core_vec(&st);
                back.push(tilde_reflection(j, &tilde_reflection(j, &st)?)?.h);
                orig.push(st.h.clone());
                Ok((back, orig))
            }),
        ));
    }
    checks.push((
        "pi~ = s'_1 pi under the dictionary".into(),
        Box::new(move |pt: &Point| {
            let st = sample(n, pt)?;
            let p = painleve_to_params(&st)?;
            let by_word = params_from_y(&act_gens(&[Generator::SP(1), Generator::Pi], &y_from_params(&p)?)?);
            Ok((painleve_to_params(&tilde_pi(&st)?)?.flat(), by_word.flat()))
        }),
    ));
    checks.push((
        "pi~^2 = pi^2 under the dictionary".into(),
        Box::new(move |pt: &Point| {
            let st = sample(n, pt)?;
            let p = painleve_to_params(&st)?;
            let by_word = params_from_y(&act_gens(&[Generator::Pi, Generator::Pi], &y_from_params(&p)?)?);
            Ok((painleve_to_params(&tilde_pi_squared(&st)?)?.flat(), by_word.flat()))
        }),
    ));
    checks.push((
        "(alpha_(2i+1) + phi_(2i+1))/(1 + phi_(2i+1)) = R^baa_(i+1)/R^bbb_(i+1)".into(),
        Box::new(move |pt: &Point| {
            let st = sample(n, pt)?;
            let p = painleve_to_params(&st)?;
            let (mut l, mut r) = (Vec::new(), Vec::new());
            for i in 0..=n {
                let k = 2 * i as i64 + 1;
                l.push((p.a(k).clone() + p.f(k)).div(&(Rat::one() + p.f(k)))?);
                r.push(st.r_big(i + 1, B, A, A)?.div(&st.r_big(i + 1, B, B, B)?)?);
            }
            Ok((l, r))
        }),
    ));
    checks.push((
        "R-function three-term identities".into(),
        Box::new(move |pt: &Point| {
            let st = sample(n, pt)?;
            let one = Rat::one();
            let (mut l, mut r) = (Vec::new(), Vec::new());
            for i in 0..=n {
                let j = i + 1;
                let (baa, bbb, aaa, bab) = (st.r_big(j, B, A, A)?, st.r_big(j, B, B, B)?, st.r_big(j, A, A, A)?, st.r_big(j, B, A, B)?);
                let (coef, lead) = if i < n {
                    (st.a(j).div(&st.g(j)?)?, one.clone() - &st.b(j).div(&st.g(j)?)?)
                } else {
                    ((st.q.clone() * st.a(n + 1)).div(&st.g(0)?)?, one.clone() - &st.b(0).div(&st.g(0)?)?)
                };
                l.push(baa.clone() - &(coef * &bbb));
                r.push(lead * &aaa);
                let bg = st.b(i).div(&st.g(i)?)?;
                l.push(bbb - &(bg.clone() * &baa));
                r.push((one.clone() - &bg) * &bab);
            }
            Ok((l, r))
        }),
    ));
    checks.push((
        "S'_(2i+1) = -(g_i/a_(i+1)) R*_i and S'_(2i+2) = R*_(i+1) + 1 - t/q".into(),
        Box::new(move |pt: &Point| {
            let st = sample(n, pt)?;
            let p = painleve_to_params(&st)?;
            let tq = st.t.div(&st.q)?;
            let (mut l, mut r) = (Vec::new(), Vec::new());
            for i in 0..=n {
                l.push(sums::s_prime(&p, 2 * i as i64 + 1)?);
                r.push(-(st.g(i)?.div(st.a(i + 1))?) * &st.r_star(i)?);
                l.push(sums::s_prime(&p, 2 * i as i64 + 2)?);
                r.push(st.r_star((i + 1) % (n + 1))? + &Rat::one() - &tq);
            }
            Ok((l, r))
        }),
    ));
    let printed: Vec<(String, Check<Vec<Rat>>)> = vec![(
        "r~_{2n+1}^2 = 1 on h with the t R^baa_(n+1) denominator".into(),
        Box::new(move |pt: &Point| {
            let st = sample(n, pt)?;
            let once = tilde_reflection_t_scaled(&st)?;
            Ok((vec![tilde_reflection_t_scaled(&once)?.h], vec![st.h.clone()]))
        }),
    )];
    let notes = run_checks(n, trials, seed, painleve_sampler(n), printed)
        .into_iter()
        .map(|r| format!("{}: {}", r.relation, if r.pass { "holds" } else { "does not hold" }))
        .collect();
    SuiteReport::new("tilde", n, seed, run_checks(n, trials, seed, painleve_sampler(n), checks)).with_notes(notes)
}
