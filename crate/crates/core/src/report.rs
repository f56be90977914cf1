//! Machine-readable verification reports.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::exactalg::{run_trials, split_seed, Failure, Point, Witness};

/// Outcome of checking one relation at random points.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RelationReport {
    pub relation: String,
    pub n: usize,
    pub trials: usize,
    pub pass: bool,
    pub points_used: usize,
    pub failures: Vec<Failure>,
}

/// A named group of relation reports.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub n: usize,
    pub seed: u64,
    pub pass: bool,
    pub relations: Vec<RelationReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn new(suite: &str, n: usize, seed: u64, relations: Vec<RelationReport>) -> SuiteReport {
        let pass = relations.iter().all(|r| r.pass);
        SuiteReport { suite: suite.to_string(), n, seed, pass, relations, notes: Vec::new() }
    }

    pub fn with_notes(mut self, notes: Vec<String>) -> SuiteReport {
        self.notes = notes;
        self
    }

    /// Names of the relations that failed.
    pub fn failed(&self) -> Vec<&str> {
        self.relations.iter().filter(|r| !r.pass).map(|r| r.relation.as_str()).collect()
    }

    /// Merges several suites under a new name.
    pub fn merge(suite: &str, n: usize, seed: u64, parts: Vec<SuiteReport>) -> SuiteReport {
        let notes = parts.iter().flat_map(|p| p.notes.iter().cloned()).collect();
        let relations = parts
            .into_iter()
            .flat_map(|p| {
                let prefix = p.suite;
                p.relations.into_iter().map(move |mut r| {
                    r.relation = format!("{prefix}: {}", r.relation);
                    r
                })
            })
            .collect();
        SuiteReport::new(suite, n, seed, relations).with_notes(notes)
    }
}

/// Stable 64-bit tag of a relation name, used to give every relation its own
/// random stream.
pub fn name_tag(name: &str) -> u64 {
    name.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

/// Evaluator for one relation: both sides at a sampled point.
pub type Check<'a, T> = Box<dyn Fn(&Point) -> Result<(T, T)> + Sync + 'a>;

/// Runs each named check on its own stream derived from `seed`; relations
/// run in parallel and come back in input order.
pub fn run_checks<'a, T, S>(n: usize, trials: usize, seed: u64, sample: S, checks: Vec<(String, Check<'a, T>)>) -> Vec<RelationReport>
where
    T: PartialEq + Witness,
    S: Fn(u64) -> Result<Point> + Sync,
{
    checks
        .par_iter()
        .map(|(name, check)| {
            let rep = run_trials(trials, split_seed(seed, name_tag(name), 0), &sample, |p| check(p));
            RelationReport { relation: name.clone(), n, trials, pass: rep.pass, points_used: rep.points_used, failures: rep.failures }
        })
        .collect()
}
