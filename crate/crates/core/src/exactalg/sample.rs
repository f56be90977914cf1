use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{Rat, RatFunc};
use crate::error::{Error, Result};

/// Largest numerator and denominator drawn for a free generator.
pub const HAT_BOUND: i64 = 64;
const CONSTRAINT_RETRIES: u64 = 16;

/// Declares that a stored generator is the formal `order`-th root of `quantity`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSpec {
    pub quantity: String,
    pub order: u32,
}

/// Ordered, uniquely named generators plus their root declarations.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarTable {
    names: Vec<String>,
    roots: BTreeMap<String, RootSpec>,
}

impl VarTable {
    pub fn new() -> VarTable {
        VarTable::default()
    }

    /// Table with plain generators `names`.
    pub fn with_vars<S: AsRef<str>>(names: &[S]) -> VarTable {
        let mut vt = VarTable::new();
        for n in names {
            vt.add_var(n.as_ref());
        }
        vt
    }

    /// Adds a generator, returning its index; an existing name is reused.
    pub fn add_var(&mut self, name: &str) -> u16 {
        if let Some(i) = self.index(name) {
            return i;
        }
        self.names.push(name.to_string());
        (self.names.len() - 1) as u16
    }

    /// Adds a root generator `name` with `name^order = quantity`.
    pub fn add_root(&mut self, name: &str, quantity: &str, order: u32) -> u16 {
        assert!(order >= 1, "root order must be positive");
        let i = self.add_var(name);
        self.roots.insert(name.to_string(), RootSpec { quantity: quantity.to_string(), order });
        i
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn roots(&self) -> &BTreeMap<String, RootSpec> {
        &self.roots
    }

    pub fn index(&self, name: &str) -> Option<u16> {
        self.names.iter().position(|n| n == name).map(|i| i as u16)
    }

    /// The generator `name` as a symbolic rational function.
    pub fn gen(&self, name: &str) -> Result<RatFunc> {
        self.index(name).map(RatFunc::var).ok_or_else(|| Error::UnboundVariable(name.to_string()))
    }

    /// Orders `point` by this table's generator indices.
    pub fn dense(&self, point: &Point) -> Result<Vec<Rat>> {
        self.names.iter().map(|n| point.get(n)).collect()
    }

    /// The value of the quantity whose root is `generator`.
    pub fn root_value(&self, point: &Point, generator: &str) -> Result<Rat> {
        let spec = self.roots.get(generator).ok_or_else(|| Error::UnboundVariable(generator.to_string()))?;
        point.get(generator)?.pow(spec.order as i64)
    }
}

/// Monomial equation `slack = coeff · ∏ factor^exp`, solved after the free
/// generators (and earlier slacks) have values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub slack: String,
    pub coeff: Rat,
    pub factors: Vec<(String, i64)>,
}

impl Constraint {
    pub fn new(slack: &str, coeff: Rat, factors: &[(&str, i64)]) -> Constraint {
        Constraint {
            slack: slack.to_string(),
            coeff,
            factors: factors.iter().map(|(n, e)| (n.to_string(), *e)).collect(),
        }
    }
}

/// Assignment of rationals to generator names.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Point(pub BTreeMap<String, Rat>);

impl Point {
    pub fn get(&self, name: &str) -> Result<Rat> {
        self.0.get(name).cloned().ok_or_else(|| Error::UnboundVariable(name.to_string()))
    }

    pub fn insert(&mut self, name: &str, v: Rat) {
        self.0.insert(name.to_string(), v);
    }
}

/// Derives an independent 64-bit seed for stream `(a, b)` of `seed`.
pub fn split_seed(seed: u64, a: u64, b: u64) -> u64 {
    fn mix(mut z: u64) -> u64 {
        z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
    mix(mix(mix(seed) ^ a) ^ b.wrapping_mul(0xD6E8_FEB8_6659_FD93))
}

fn draw(rng: &mut ChaCha8Rng, positive: bool) -> Rat {
    let p = rng.gen_range(1..=HAT_BOUND);
    let q = rng.gen_range(1..=HAT_BOUND);
    let sign = if positive || rng.gen_bool(0.5) { 1 } else { -1 };
    Rat::new(sign * p, q).expect("positive denominator")
}

/// Random point on the constraint variety.
///
/// Free generators come from the hat distribution: numerator and denominator
/// uniform in `1..=64`, random sign unless the generator is a declared root.
/// Slacks are then solved in order. A pure function of its arguments.
pub fn sample_point(vt: &VarTable, constraints: &[Constraint], rng_seed: u64) -> Result<Point> {
    let slack_names: Vec<&str> = constraints.iter().map(|c| c.slack.as_str()).collect();
    for s in &slack_names {
        if vt.index(s).is_none() {
            return Err(Error::UnboundVariable(s.to_string()));
        }
    }
    let mut last = None;
    for attempt in 0..CONSTRAINT_RETRIES {
        let mut rng = ChaCha8Rng::seed_from_u64(split_seed(rng_seed, 0x5a4d, attempt));
        let mut pt = Point::default();
        for name in vt.names() {
            if slack_names.contains(&name.as_str()) {
                continue;
            }
            pt.insert(name, draw(&mut rng, vt.roots().contains_key(name)));
        }
        match solve_slacks(&mut pt, constraints) {
            Ok(()) => return Ok(pt),
            Err(e) => last = Some(e),
        }
    }
    Err(last.unwrap_or_else(|| Error::UnsatisfiableConstraint(String::new())))
}

fn solve_slacks(pt: &mut Point, constraints: &[Constraint]) -> Result<()> {
    for c in constraints {
        let mut v = c.coeff.clone();
        for (name, e) in &c.factors {
            let x = pt.get(name)?;
            v = v * x.pow(*e).map_err(|_| Error::UnsatisfiableConstraint(c.slack.clone()))?;
        }
        if v.is_zero() {
            return Err(Error::UnsatisfiableConstraint(c.slack.clone()));
        }
        pt.insert(&c.slack, v);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible_and_nonzero() {
        let vt = VarTable::with_vars(&["a", "b", "c"]);
        let p1 = sample_point(&vt, &[], 42).unwrap();
        let p2 = sample_point(&vt, &[], 42).unwrap();
        assert_eq!(p1, p2);
        assert_eq!(p1.0.len(), 3);
        assert!(p1.0.values().all(|v| !v.is_zero()));
        assert_ne!(p1, sample_point(&vt, &[], 43).unwrap());
    }

    #[test]
    fn root_generators_positive() {
        let mut vt = VarTable::new();
        vt.add_root("u", "t", 2);
        for s in 0..50 {
            let p = sample_point(&vt, &[], s).unwrap();
            assert!(!p.get("u").unwrap().is_negative());
        }
    }

    #[test]
    fn root_value_is_forced() {
        let mut vt = VarTable::new();
        vt.add_root("u_t", "t", 2);
        let mut p = Point::default();
        p.insert("u_t", Rat::new(3, 2).unwrap());
        assert_eq!(vt.root_value(&p, "u_t").unwrap(), Rat::new(9, 4).unwrap());
    }

    #[test]
    fn slack_satisfies_monomial_equation() {
        // b2 := w^2 / (q a1 b1 a2), so q a1 b1 a2 b2 = w^2 (n = 1)
        let mut vt = VarTable::with_vars(&["a1", "b1", "a2", "b2", "q"]);
        vt.add_root("w", "q^rho", 2);
        let c = Constraint::new("b2", Rat::one(), &[("w", 2), ("q", -1), ("a1", -1), ("b1", -1), ("a2", -1)]);
        for s in 0..20 {
            let p = sample_point(&vt, std::slice::from_ref(&c), s).unwrap();
            let prod = ["q", "a1", "b1", "a2", "b2"].iter().fold(Rat::one(), |acc, n| acc * p.get(n).unwrap());
            assert_eq!(prod, p.get("w").unwrap().pow(2).unwrap());
        }
    }

    #[test]
    fn unknown_slack_rejected() {
        let vt = VarTable::with_vars(&["a"]);
        let c = Constraint::new("zz", Rat::one(), &[]);
        assert!(matches!(sample_point(&vt, &[c], 0), Err(Error::UnboundVariable(_))));
    }
}
