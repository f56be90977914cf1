use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value as Json;

use super::{sample_point, split_seed, Constraint, Point, Rat, Value, VarTable};
use crate::error::{Error, Result};

/// Resamples allowed per trial before a pole is reported as a failure.
pub const MAX_RESAMPLES: usize = 32;

/// Exact JSON rendering of a computed quantity for failure reports.
pub trait Witness {
    fn witness(&self) -> Json;
}

impl Witness for Rat {
    fn witness(&self) -> Json {
        Json::String(self.to_string())
    }
}

impl Witness for Value {
    fn witness(&self) -> Json {
        match self {
            Value::Numeric(r) => r.witness(),
            Value::Symbolic(f) => Json::String(format!("{f:?}")),
        }
    }
}

impl Witness for bool {
    fn witness(&self) -> Json {
        Json::Bool(*self)
    }
}

impl Witness for i64 {
    fn witness(&self) -> Json {
        Json::from(*self)
    }
}

impl<T: Witness> Witness for Vec<T> {
    fn witness(&self) -> Json {
        Json::Array(self.iter().map(Witness::witness).collect())
    }
}

impl<A: Witness, B: Witness> Witness for (A, B) {
    fn witness(&self) -> Json {
        Json::Array(vec![self.0.witness(), self.1.witness()])
    }
}

/// A replayable counterexample: the sampled point and both sides.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    pub trial: usize,
    pub point: Point,
    pub lhs: Json,
    pub rhs: Json,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityReport {
    pub pass: bool,
    pub trials: usize,
    pub points_used: usize,
    pub failures: Vec<Failure>,
}

enum Outcome {
    Equal,
    Failed(Failure),
}

/// Runs `trials` independent checks of `eval`, each on a fresh point from
/// `sample(stream_seed)`.
///
/// Trial `k`, attempt `a` draws from stream `split_seed(seed, k, a)`, so the
/// report does not depend on thread scheduling. Poles trigger a resample;
/// any other error is a failure.
pub fn run_trials<T, S, E>(trials: usize, seed: u64, sample: S, eval: E) -> IdentityReport
where
    T: PartialEq + Witness,
    S: Fn(u64) -> Result<Point> + Sync,
    E: Fn(&Point) -> Result<(T, T)> + Sync,
{
    let results: Vec<(Outcome, usize)> = (0..trials)
        .into_par_iter()
        .map(|trial| run_one(trial, seed, &sample, &eval))
        .collect();
    let points_used = results.iter().map(|(_, used)| used).sum();
    let failures: Vec<Failure> = results
        .into_iter()
        .filter_map(|(o, _)| match o {
            Outcome::Equal => None,
            Outcome::Failed(f) => Some(f),
        })
        .collect();
    IdentityReport { pass: failures.is_empty(), trials, points_used, failures }
}

fn run_one<T, S, E>(trial: usize, seed: u64, sample: &S, eval: &E) -> (Outcome, usize)
where
    T: PartialEq + Witness,
    S: Fn(u64) -> Result<Point>,
    E: Fn(&Point) -> Result<(T, T)>,
{
    let mut last_point = Point::default();
    for attempt in 0..MAX_RESAMPLES {
        let stream = split_seed(seed, trial as u64, attempt as u64);
        let point = match sample(stream) {
            Ok(p) => p,
            Err(e) if e.is_pole() || matches!(e, Error::UnsatisfiableConstraint(_)) => continue,
            Err(e) => return (failed(trial, Point::default(), &e), attempt + 1),
        };
        match eval(&point) {
            Ok((l, r)) if l == r => return (Outcome::Equal, attempt + 1),
            Ok((l, r)) => {
                let f = Failure { trial, point, lhs: l.witness(), rhs: r.witness(), error: None };
                return (Outcome::Failed(f), attempt + 1);
            }
            Err(e) if e.is_pole() => last_point = point,
            Err(e) => return (failed(trial, point, &e), attempt + 1),
        }
    }
    let e = Error::ExhaustedResamples { trial, attempts: MAX_RESAMPLES };
    (failed(trial, last_point, &e), MAX_RESAMPLES)
}

fn failed(trial: usize, point: Point, e: &Error) -> Outcome {
    Outcome::Failed(Failure { trial, point, lhs: Json::Null, rhs: Json::Null, error: Some(e.to_string()) })
}

/// Checks `lhs == rhs` at `trials` random points of the constraint variety.
pub fn identity_test<T, L, R>(
    lhs: L,
    rhs: R,
    vt: &VarTable,
    constraints: &[Constraint],
    trials: usize,
    rng_seed: u64,
) -> IdentityReport
where
    T: PartialEq + Witness,
    L: Fn(&Point) -> Result<T> + Sync,
    R: Fn(&Point) -> Result<T> + Sync,
{
    run_trials(
        trials,
        rng_seed,
        |s| sample_point(vt, constraints, s),
        |p| Ok((lhs(p)?, rhs(p)?)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{Field, RatFunc};

    #[test]
    fn constant_identity_passes() {
        let vt = VarTable::with_vars(&["y"]);
        let r = identity_test(|_| Ok(Rat::one()), |_| Ok(Rat::one()), &vt, &[], 20, 0);
        assert!(r.pass);
        assert_eq!(r.points_used, 20);
    }

    #[test]
    fn binomial_identity_passes() {
        let vt = VarTable::with_vars(&["y"]);
        let lhs = |p: &Point| {
            let y = p.get("y")?;
            (Rat::one() + &y).pow(2)
        };
        let rhs = |p: &Point| {
            let y = p.get("y")?;
            Ok(Rat::one() + Rat::from_int(2) * &y + &y * &y)
        };
        assert!(identity_test(lhs, rhs, &vt, &[], 20, 1).pass);
    }

    #[test]
    fn false_identity_reports_witness() {
        let vt = VarTable::with_vars(&["y"]);
        let r = identity_test(|p| p.get("y"), |_| Ok(Rat::one()), &vt, &[], 5, 3);
        assert!(!r.pass);
        assert!(!r.failures.is_empty());
        let f = &r.failures[0];
        // the witness replays
        assert_eq!(f.lhs, Json::String(f.point.get("y").unwrap().to_string()));
    }

    #[test]
    fn poles_are_resampled() {
        // 1/(y - y) always has a pole: every attempt fails
        let vt = VarTable::with_vars(&["y"]);
        let r = identity_test(
            |p| {
                let y = p.get("y")?;
                (&y - &y).recip()
            },
            |_| Ok(Rat::one()),
            &vt,
            &[],
            2,
            0,
        );
        assert!(!r.pass);
        assert_eq!(r.points_used, 2 * MAX_RESAMPLES);
        assert!(r.failures[0].error.as_deref().unwrap().contains("resamples"));
    }

    #[test]
    fn symbolic_sides_compare_structurally() {
        let vt = VarTable::with_vars(&["y"]);
        let y = Value::Symbolic(RatFunc::var(0));
        let l = (Value::one() + &y) * (Value::one() + &y);
        let r = Value::one() + Value::from_int(2) * &y + y.clone() * &y;
        let rep = identity_test(|_| Ok(l.clone()), |_| Ok(r.clone()), &vt, &[], 1, 0);
        assert!(rep.pass);
    }

    #[test]
    fn independent_of_thread_count() {
        let vt = VarTable::with_vars(&["a", "b"]);
        let ev = |p: &Point| Ok((p.get("a")? * p.get("b")?, p.get("b")? * p.get("a")?));
        let a = run_trials(30, 9, |s| sample_point(&vt, &[], s), ev);
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let b = pool.install(|| run_trials(30, 9, |s| sample_point(&vt, &[], s), ev));
        assert_eq!(a, b);
    }
}
