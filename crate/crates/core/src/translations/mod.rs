//! Translations of the extended affine Weyl group as words over the generators,
//! their q-shift actions, the relations among them, and the three flows
//! `τ1`, `τ2`, `τ3`.

mod names;
mod relations;
mod shifts;

pub use names::{translation_word, word_of, Sym, TBase, TranslationName};
pub(crate) use names::split_power;
pub use relations::{relation_table, uncorrected_rotations, TRel, FAMILIES};
pub use shifts::{base_shift, product_shift, roots, shift_of, tau2_exponents, tau3_period, tau3_power_shift, tau3_roots, Shift};

use crate::error::{Error, Result};
use crate::exactalg::{Field, Point, Rat};
use crate::report::{run_checks, Check, SuiteReport};
use crate::seed::{GroupWord, YSeed};
use crate::weylrep::{params_from_y, seed_sampler, y_of_point, ParamState};

/// Applies a word and checks that the quiver comes back.
pub fn act_group_word<F: Field>(w: &GroupWord, s: &YSeed<F>) -> Result<YSeed<F>> {
    let out = s.apply_word(w)?;
    if out.quiver != s.quiver {
        return Err(Error::QuiverNotRestored(w.to_string()));
    }
    Ok(out)
}

/// Applies the word of a named translation.
pub fn act_translation<F: Field>(t: TranslationName, s: &YSeed<F>) -> Result<YSeed<F>> {
    act_group_word(&translation_word(t, s.quiver.n()), s)
}

/// Image of `φ` under `τ3` from the closed form, as `(φ_0, …, φ_{2n+1})`.
pub fn tau3_phi<F: Field>(p: &ParamState<F>) -> Result<Vec<F>> {
    let n = p.n() as i64;
    let one = F::one();
    let a = |k: i64| p.a(k).clone();
    let f = |k: i64| p.f(k).clone();
    let even = |i: i64| -> Result<F> {
        let num = (one.clone() + &f(2 * i + 1)) * &(a(2 * i + 3) + &f(2 * i + 3)) * &f(2 * i + 2);
        let den = a(2 * i + 2) * &a(2 * i + 3) * &(one.clone() + &f(2 * i + 3)) * &(a(2 * i + 1) + &f(2 * i + 1));
        num.div(&den)
    };
    let mut phi = p.phi.clone();
    let m = phi.len();
    for i in 0..=n {
        let (e0, e2) = (even(i)?, even(i + 1)?);
        let inv3 = |k: i64| (a(k) * &a(k + 1) * &a(k + 2)).inv();
        let num = (one.clone() + &e2) * &(inv3(2 * i + 1)? + &e0);
        let den = (one.clone() + &e0) * &(inv3(2 * i + 3)? + &e2);
        phi[crate::weylrep::md(2 * i, m)] = e0;
        phi[crate::weylrep::md(2 * i + 1, m)] = a(2 * i + 1) * &a(2 * i + 2) * &num.div(&den)? * &f(2 * i + 3);
    }
    Ok(phi)
}

fn param_sample(n: usize, pt: &Point) -> Result<ParamState<Rat>> {
    Ok(params_from_y(&y_of_point(n, pt)?))
}

/// Every row of the q-shift table, plus `τ1`, `τ2`, the `α`-action of `τ3`
/// and the pure q-shift of its translation power.
pub fn verify_qshift_tables(n: usize, trials: usize, seed: u64) -> SuiteReport {
    use TBase::*;
    let m = 2 * n + 2;
    let mut bases: Vec<TBase> = (0..m).map(CalT).collect();
    bases.extend([CalU(0), CalU(1), CalUP(0), CalUP(1), V, VP, Tau1, Tau2]);
    let mut checks: Vec<(String, Check<Vec<Rat>>)> = bases
        .into_iter()
        .map(|b| {
            let t = TranslationName::new(b);
            let shift = shift_of(t, n).expect("table entries are translations");
            let check: Check<Vec<Rat>> = Box::new(move |pt: &Point| {
                let s = y_of_point(n, pt)?;
                let got = roots(&params_from_y(&act_translation(t, &s)?));
                Ok((got, shift.apply(&params_from_y(&s))?))
            });
            (format!("{b} shifts (alpha, beta, beta')"), check)
        })
        .collect();
    checks.push((
        "tau3 on (alpha, beta, beta')".into(),
        Box::new(move |pt: &Point| {
            let s = y_of_point(n, pt)?;
            let got = roots(&params_from_y(&act_translation(TranslationName::new(Tau3), &s)?));
            Ok((got, tau3_roots(&params_from_y(&s))?))
        }),
    ));
    let period = tau3_period(n) as i64;
    checks.push((
        format!("tau3^{period} is a pure q-shift"),
        Box::new(move |pt: &Point| {
            let s = y_of_point(n, pt)?;
            let got = roots(&params_from_y(&act_translation(TranslationName::new(Tau3).pow(period), &s)?));
            Ok((got, tau3_power_shift(n).apply(&params_from_y(&s))?))
        }),
    ));
    SuiteReport::new("qshift-tables", n, seed, run_checks(n, trials, seed, seed_sampler(n), checks))
}

/// Which relations of the table to run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum RelationFilter {
    #[default]
    All,
    /// Families from [`FAMILIES`].
    Families(Vec<String>),
}

impl RelationFilter {
    /// `all`, or a comma-separated list of family names.
    pub fn parse(s: &str) -> Result<RelationFilter> {
        if s == "all" {
            return Ok(RelationFilter::All);
        }
        let fams: Vec<String> = s.split(',').map(|f| f.trim().to_string()).collect();
        if let Some(bad) = fams.iter().find(|f| !FAMILIES.contains(&f.as_str())) {
            return Err(Error::Parse(format!("unknown relation family {bad:?}; expected one of {}", FAMILIES.join(", "))));
        }
        Ok(RelationFilter::Families(fams))
    }

    fn keeps(&self, r: &TRel) -> bool {
        match self {
            RelationFilter::All => true,
            RelationFilter::Families(f) => f.iter().any(|x| x == r.family),
        }
    }
}

/// The full relation table.
pub fn verify_translation_relations(n: usize, trials: usize, seed: u64) -> SuiteReport {
    verify_translation_relations_with(n, trials, seed, &RelationFilter::All)
}

fn relation_checks<'a>(n: usize, rels: Vec<TRel>) -> Vec<(String, Check<'a, Vec<Rat>>)> {
    rels.into_iter()
        .map(|r| {
            let (lhs, rhs) = (word_of(&r.lhs, n), word_of(&r.rhs, n));
            let check: Check<Vec<Rat>> = Box::new(move |pt: &Point| {
                let s = y_of_point(n, pt)?;
                Ok((act_group_word(&lhs, &s)?.y, act_group_word(&rhs, &s)?.y))
            });
            (r.name, check)
        })
        .collect()
}

/// The relations kept by `filter`, compared as coefficient tuples.
///
/// When a `V` family is selected, the forms of the `π'𝒱` and `π𝒱'` relations
/// without their `𝒯_0^{-1}` factor are also evaluated and reported as notes.
pub fn verify_translation_relations_with(n: usize, trials: usize, seed: u64, filter: &RelationFilter) -> SuiteReport {
    let rels = relation_table(n).into_iter().filter(|r| filter.keeps(r)).collect();
    let reports = run_checks(n, trials, seed, seed_sampler(n), relation_checks(n, rels));
    let side: Vec<TRel> = uncorrected_rotations().into_iter().filter(|r| filter.keeps(r)).collect();
    let notes = run_checks(n, trials, seed, seed_sampler(n), relation_checks(n, side))
        .into_iter()
        .map(|r| format!("{} (without the calT_0^-1 factor): {}", r.relation, if r.pass { "holds" } else { "does not hold" }))
        .collect();
    SuiteReport::new("translation-relations", n, seed, reports).with_notes(notes)
}

/// The closed form of `τ3` on `φ` against the word, and `τ3` on the roots.
pub fn verify_tau3_closed_form(n: usize, trials: usize, seed: u64) -> SuiteReport {
    let tau3 = TranslationName::new(TBase::Tau3);
    let checks: Vec<(String, Check<Vec<Rat>>)> = vec![
        (
            "tau3(phi) = closed form".into(),
            Box::new(move |pt: &Point| {
                let s = y_of_point(n, pt)?;
                Ok((params_from_y(&act_translation(tau3, &s)?).phi, tau3_phi(&param_sample(n, pt)?)?))
            }),
        ),
        (
            "tau3(alpha, beta, beta') = closed form".into(),
            Box::new(move |pt: &Point| {
                let s = y_of_point(n, pt)?;
                Ok((roots(&params_from_y(&act_translation(tau3, &s)?)), tau3_roots(&param_sample(n, pt)?)?))
            }),
        ),
    ];
    SuiteReport::new("tau3-closed-form", n, seed, run_checks(n, trials, seed, seed_sampler(n), checks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Rat;

    fn sample(n: usize, s: u64) -> YSeed<Rat> {
        y_of_point(n, &seed_sampler(n)(s).unwrap()).unwrap()
    }

    #[test]
    fn tau1_shifts_beta_by_q() {
        let s = sample(1, 3);
        let p = params_from_y(&s);
        let out = params_from_y(&act_translation(TranslationName::new(TBase::Tau1), &s).unwrap());
        assert_eq!(out.alpha, p.alpha);
        assert_eq!(out.beta[0], p.beta[0].clone() * &p.q);
        assert_eq!(out.beta_p[0], p.beta_p[0].clone() * &p.q);
    }

    #[test]
    fn filter_parsing() {
        assert_eq!(RelationFilter::parse("all").unwrap(), RelationFilter::All);
        assert_eq!(RelationFilter::parse("tau1,calT").unwrap(), RelationFilter::Families(vec!["tau1".into(), "calT".into()]));
        assert!(RelationFilter::parse("bogus").is_err());
    }
}
