//! The subcommands, mapped onto the library.

use std::path::Path;

use qpvi::exactalg::Rat;
use qpvi::lax::{laplace_reduce, lax_state, verify_compatibility, verify_garnier, LaxCase};
use qpvi::painleve::{painleve_sampler, qp_step, state_of_point, verify_qluc, verify_tau1_equivalence, verify_tilde, PainleveState, StateJson};
use qpvi::quiver::Quiver;
use qpvi::report::SuiteReport;
use qpvi::seed::{SeedJson, YSeed};
use qpvi::translations::{
    act_translation, verify_qshift_tables, verify_tau3_closed_form, verify_translation_relations_with, RelationFilter, TBase,
    TranslationName,
};
use qpvi::weylrep::{
    params_from_y, seed_sampler, verify_b_lemmas, verify_fundamental_relations, verify_generator_consistency, verify_quiver_invariance,
    verify_s0_derivation, y_of_point, Generator,
};
use qpvi::word::parse_word;
use serde::Serialize;
use serde_json::Value;

use crate::args::{ActArgs, EvolveArgs, Format, Group, LaxArgs, LaxWhich, QuiverCmd, Suite, VerifyArgs};
use crate::error::{CliError, CliResult};
use crate::output::{emit, failure_report, read_file, render_report, table_csv, to_json};

/// What a command produced: whether its checks passed, and the failure
/// report to print when they did not.
pub struct Outcome {
    pub pass: bool,
    pub failure: Option<String>,
}

impl Outcome {
    fn ok() -> Outcome {
        Outcome { pass: true, failure: None }
    }

    fn of(report: &SuiteReport) -> CliResult<Outcome> {
        Ok(Outcome { pass: report.pass, failure: if report.pass { None } else { Some(failure_report(report)?) } })
    }
}

fn require_n(n: usize) -> CliResult<()> {
    if n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    Ok(())
}

pub fn quiver(cmd: QuiverCmd) -> CliResult<Outcome> {
    match cmd {
        QuiverCmd::Build { n, out } => {
            require_n(n)?;
            emit(out.as_deref(), &to_json(&Quiver::gen_qpvi(n))?)?;
        }
        QuiverCmd::Mutate { input, k, out } => {
            let q: Quiver = serde_json::from_str(&read_file(&input)?)?;
            let q = k.iter().rev().try_fold(q, |q, &v| q.mutate(v))?;
            emit(out.as_deref(), &to_json(&q)?)?;
        }
    }
    Ok(Outcome::ok())
}

/// Reads a seed given as full seed JSON, as `{"y": [...]}`, or as a bare
/// array; the last two are placed on the generalized q-P_VI quiver.
fn read_seed(path: &Path, n: usize) -> CliResult<YSeed<Rat>> {
    let v: Value = serde_json::from_str(&read_file(path)?)?;
    let seed = match v {
        Value::Object(ref m) if m.contains_key("lambda") => YSeed::try_from(serde_json::from_value::<SeedJson>(v)?)?,
        Value::Object(mut m) => {
            let y = m.remove("y").ok_or_else(|| CliError::Usage(format!("{}: expected a `y` field", path.display())))?;
            YSeed::gen_qpvi(n, serde_json::from_value(y)?)?
        }
        Value::Array(_) => YSeed::gen_qpvi(n, serde_json::from_value(v)?)?,
        _ => return Err(CliError::Usage(format!("{}: expected a seed object or an array", path.display()))),
    };
    if seed.quiver.n() != n {
        return Err(CliError::Usage(format!("seed is for n = {}, but --n {n} was given", seed.quiver.n())));
    }
    Ok(seed)
}

fn random_seed(n: usize, seed: u64) -> CliResult<YSeed<Rat>> {
    Ok(y_of_point(n, &seed_sampler(n)(seed)?)?)
}

pub fn act(a: ActArgs) -> CliResult<Outcome> {
    require_n(a.n)?;
    let word = parse_word(&a.word, a.n)?;
    let start = match &a.y {
        Some(p) => read_seed(p, a.n)?,
        None => random_seed(a.n, a.seed)?,
    };
    let image = start.apply_word(&word)?;
    emit(a.out.as_deref(), &to_json(&SeedJson::from(&image))?)?;
    Ok(Outcome::ok())
}

/// The suites named by the optional group word and `--suite`.
fn resolve_suites(group: Option<Group>, suite: Option<Suite>) -> CliResult<(String, Vec<Suite>)> {
    let members: &[Suite] = match group {
        None => &[],
        Some(Group::Quiver) => &[Suite::Quiver],
        Some(Group::Weyl) => &[Suite::Weyl],
        Some(Group::Translations) => &[Suite::Translations],
        Some(Group::Painleve) => &[Suite::Tau1, Suite::Tilde, Suite::Qluc],
        Some(Group::Lax) => &[Suite::LaxCompat, Suite::Garnier],
        Some(Group::All) => &[Suite::All],
    };
    match (group, suite) {
        (None, None) => Err(CliError::Usage("name a suite with --suite".into())),
        (None, Some(s)) => Ok((s.name().into(), vec![s])),
        (Some(g), Some(s)) if members.contains(&s) || g == Group::All => Ok((s.name().into(), vec![s])),
        (Some(g), Some(s)) => Err(CliError::Usage(format!("suite {} is not part of {g:?}", s.name()))),
        (Some(_), None) if members.len() == 1 => Ok((members[0].name().into(), members.to_vec())),
        (Some(g), None) => Ok((format!("{g:?}").to_lowercase(), members.to_vec())),
    }
}

/// Runs one suite; `weyl` and `translations` bundle several library suites.
pub fn run_suite(suite: Suite, n: usize, trials: usize, seed: u64, filter: &RelationFilter) -> SuiteReport {
    match suite {
        Suite::Quiver => verify_quiver_invariance(n),
        Suite::Weyl => SuiteReport::merge(
            "weyl",
            n,
            seed,
            vec![
                verify_generator_consistency(n, trials, seed, &Generator::all(n)),
                verify_fundamental_relations(n, trials, seed),
                verify_s0_derivation(n, trials, seed),
                verify_b_lemmas(n, trials, seed),
            ],
        ),
        Suite::Translations => SuiteReport::merge(
            "translations",
            n,
            seed,
            vec![
                verify_qshift_tables(n, trials, seed),
                verify_translation_relations_with(n, trials, seed, filter),
                verify_tau3_closed_form(n, trials, seed),
            ],
        ),
        Suite::Tau1 => verify_tau1_equivalence(n, trials, seed),
        Suite::Tilde => verify_tilde(n, trials, seed),
        Suite::Qluc => verify_qluc(n, trials, seed),
        Suite::LaxCompat => {
            let mut cases = LaxCase::generators(n);
            cases.push(LaxCase::Tau2);
            verify_compatibility(n, trials, seed, &cases)
        }
        Suite::Garnier => verify_garnier(n, trials, seed),
        Suite::All => {
            let parts = [
                Suite::Quiver,
                Suite::Weyl,
                Suite::Translations,
                Suite::Tau1,
                Suite::Tilde,
                Suite::Qluc,
                Suite::LaxCompat,
                Suite::Garnier,
            ]
            .into_iter()
            .map(|s| run_suite(s, n, trials, seed, filter))
            .collect();
            SuiteReport::merge("all", n, seed, parts)
        }
    }
}

pub fn verify(v: VerifyArgs) -> CliResult<Outcome> {
    require_n(v.n)?;
    let (name, suites) = resolve_suites(v.group, v.suite)?;
    let filter = RelationFilter::parse(&v.relations)?;
    let trials = v.trials as usize;
    let mut parts: Vec<SuiteReport> = suites.iter().map(|&s| run_suite(s, v.n, trials, v.seed, &filter)).collect();
    let report = if parts.len() == 1 { parts.remove(0) } else { SuiteReport::merge(&name, v.n, v.seed, parts) };
    emit(v.out.as_deref(), &render_report(&report, v.format)?)?;
    Outcome::of(&report)
}

fn orbit_format(e: &EvolveArgs) -> CliResult<Format> {
    match e.format {
        Some(Format::Text) => Err(CliError::Usage("orbits are written as json or csv".into())),
        Some(f) => Ok(f),
        None if e.out.as_ref().is_some_and(|p| p.extension().is_some_and(|x| x == "csv")) => Ok(Format::Csv),
        None => Ok(Format::Json),
    }
}

fn strings(v: &[Rat]) -> impl Iterator<Item = String> + '_ {
    v.iter().map(|r| r.to_string())
}

fn indexed(prefix: &str, from: usize, len: usize) -> impl Iterator<Item = String> + '_ {
    (from..from + len).map(move |i| format!("{prefix}_{i}"))
}

#[derive(Serialize)]
struct QpRow {
    step: usize,
    t: Rat,
    #[serde(flatten)]
    state: StateJson,
}

pub fn evolve_qp(e: EvolveArgs) -> CliResult<Outcome> {
    require_n(e.n)?;
    let format = orbit_format(&e)?;
    let mut st: PainleveState<Rat> = match &e.state {
        Some(p) => PainleveState::try_from(serde_json::from_str::<StateJson>(&read_file(p)?)?)?,
        None => state_of_point(e.n, &painleve_sampler(e.n)(e.seed)?)?,
    };
    if st.n() != e.n {
        return Err(CliError::Usage(format!("state is for n = {}, but --n {} was given", st.n(), e.n)));
    }
    let mut orbit = vec![st.clone()];
    for _ in 0..e.steps {
        st = qp_step(&st)?;
        orbit.push(st.clone());
    }
    let text = match format {
        Format::Csv => {
            let n = e.n;
            let header: Vec<String> = ["step".to_string(), "t".into()]
                .into_iter()
                .chain(indexed("a", 1, n + 1))
                .chain(indexed("b", 1, n + 1))
                .chain(indexed("f", 1, n))
                .chain(indexed("g", 1, n))
                .chain(["h".to_string()])
                .collect();
            let rows: Vec<Vec<String>> = orbit
                .iter()
                .enumerate()
                .map(|(k, s)| {
                    [k.to_string(), s.t.to_string()]
                        .into_iter()
                        .chain(strings(&s.a))
                        .chain(strings(&s.b))
                        .chain(strings(&s.f))
                        .chain(strings(&s.g))
                        .chain([s.h.to_string()])
                        .collect()
                })
                .collect();
            table_csv(&header, &rows)?
        }
        _ => to_json(&orbit.iter().enumerate().map(|(step, s)| QpRow { step, t: s.t.clone(), state: s.into() }).collect::<Vec<_>>())?,
    };
    emit(e.out.as_deref(), &text)?;
    Ok(Outcome::ok())
}

#[derive(Serialize)]
struct Tau3Row {
    step: usize,
    y: Vec<Rat>,
    alpha: Vec<Rat>,
    beta: Vec<Rat>,
    beta_p: Vec<Rat>,
    phi: Vec<Rat>,
}

pub fn evolve_tau3(e: EvolveArgs) -> CliResult<Outcome> {
    require_n(e.n)?;
    let format = orbit_format(&e)?;
    let mut s = match &e.state {
        Some(p) => read_seed(p, e.n)?,
        None => random_seed(e.n, e.seed)?,
    };
    let tau3 = TranslationName::new(TBase::Tau3);
    let mut rows = Vec::with_capacity(e.steps + 1);
    for step in 0..=e.steps {
        if step > 0 {
            s = act_translation(tau3, &s)?;
        }
        let p = params_from_y(&s);
        rows.push(Tau3Row { step, y: s.y.clone(), alpha: p.alpha, beta: p.beta, beta_p: p.beta_p, phi: p.phi });
    }
    let text = match format {
        Format::Csv => {
            let m = 2 * e.n + 2;
            let header: Vec<String> = ["step".to_string()]
                .into_iter()
                .chain(indexed("alpha", 0, m))
                .chain(indexed("beta", 0, 2))
                .chain(indexed("beta'", 0, 2))
                .chain(indexed("phi", 0, m))
                .collect();
            let table: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    [r.step.to_string()]
                        .into_iter()
                        .chain(strings(&r.alpha))
                        .chain(strings(&r.beta))
                        .chain(strings(&r.beta_p))
                        .chain(strings(&r.phi))
                        .collect()
                })
                .collect();
            table_csv(&header, &table)?
        }
        _ => to_json(&rows)?,
    };
    emit(e.out.as_deref(), &text)?;
    Ok(Outcome::ok())
}

pub fn lax_check(l: LaxArgs) -> CliResult<Outcome> {
    require_n(l.n)?;
    let trials = l.trials as usize;
    let report = match l.which {
        LaxWhich::Compat => run_suite(Suite::LaxCompat, l.n, trials, l.seed, &RelationFilter::All),
        LaxWhich::Garnier => run_suite(Suite::Garnier, l.n, trials, l.seed, &RelationFilter::All),
    };
    if let Some(path) = &l.dump {
        use qpvi::exactalg::Witness;
        let st = lax_state(l.n, l.seed)?;
        let pair = laplace_reduce(&st)?;
        let dump = serde_json::json!({ "n": l.n, "seed": l.seed, "state": st.witness(), "A": pair.a.witness(), "B": pair.b.witness() });
        emit(Some(path), &to_json(&dump)?)?;
    }
    emit(l.out.as_deref(), &render_report(&report, l.format)?)?;
    Outcome::of(&report)
}
