//! State of the q-P_(n+1,n+1) system and its auxiliary sums.

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::exactalg::{product, sum, Constraint, Field, Point, Rat, VarTable, Witness};

/// Rational roots bound alongside a state: `q = u_q^{2(n+1)}`,
/// `t = u_t^{n+1}` and `w^{n+1} = q^n ∏ a_i b_i` (so `w = q^{ρ_1}`).
#[derive(Clone, Debug, PartialEq)]
pub struct Roots<F> {
    pub u_q: F,
    pub u_t: F,
    pub w: F,
}

/// Parameters `a_i, b_i` (`i = 1..n+1`), time `t`, dependent variables
/// `f_i, g_i` (`i = 1..n`), and the gauge `h`.
///
/// Vectors are 0-based: `a[0]` is `a_1`. The conventions `b_0 = q b_{n+1}`,
/// `f_0 = t` and `g_0 = 1/(q^{(n-2)/2} t g_1 … g_n)` are accessors.
#[derive(Clone, Debug, PartialEq)]
pub struct PainleveState<F> {
    pub a: Vec<F>,
    pub b: Vec<F>,
    pub t: F,
    pub q: F,
    pub f: Vec<F>,
    pub g: Vec<F>,
    pub h: F,
    pub roots: Roots<F>,
}

impl<F: Field> PainleveState<F> {
    /// Builds a state, checking sizes and that every root binding is exact.
    pub fn new(a: Vec<F>, b: Vec<F>, f: Vec<F>, g: Vec<F>, h: F, roots: Roots<F>) -> Result<PainleveState<F>> {
        let n = f.len();
        if n == 0 || a.len() != n + 1 || b.len() != n + 1 || g.len() != n {
            return Err(Error::SizeMismatch(format!("a:{} b:{} f:{} g:{}", a.len(), b.len(), f.len(), g.len())));
        }
        let q = roots.u_q.powi(2 * (n as i64 + 1))?;
        let t = roots.u_t.powi(n as i64 + 1)?;
        let st = PainleveState { a, b, t, q, f, g, h, roots };
        st.check_w()?;
        Ok(st)
    }

    /// Family parameter `n`.
    pub fn n(&self) -> usize {
        self.f.len()
    }

    /// `a_i` for `i = 1..n+1`.
    pub fn a(&self, i: usize) -> &F {
        &self.a[i - 1]
    }

    /// `b_i` for `i = 0..n+1`.
    pub fn b(&self, i: usize) -> F {
        if i == 0 {
            self.q.clone() * &self.b[self.n()]
        } else {
            self.b[i - 1].clone()
        }
    }

    /// `f_i` for `i = 0..n`.
    pub fn f(&self, i: usize) -> F {
        if i == 0 {
            self.t.clone()
        } else {
            self.f[i - 1].clone()
        }
    }

    /// `g_i` for `i = 0..n`.
    pub fn g(&self, i: usize) -> Result<F> {
        if i == 0 {
            let n = self.n() as i64;
            (self.q_half(n - 2)? * &self.t * &product(&self.g)).inv()
        } else {
            Ok(self.g[i - 1].clone())
        }
    }

    /// `q^{k/2}` through `u_q`.
    pub fn q_half(&self, k: i64) -> Result<F> {
        self.roots.u_q.powi(k * (self.n() as i64 + 1))
    }

    /// `q^{1/(n+1)}`.
    pub fn q_root(&self) -> F {
        self.roots.u_q.clone() * &self.roots.u_q
    }

    fn check_w(&self) -> Result<()> {
        let n = self.n() as i64;
        let lhs = self.roots.w.powi(n + 1)?;
        let rhs = self.q.powi(n)? * &product(&self.a) * &product(&self.b);
        if lhs != rhs {
            return Err(Error::RootChoiceRequired("w^(n+1) must equal q^n a_1 b_1 … a_(n+1) b_(n+1)".into()));
        }
        Ok(())
    }

    /// `b_k a_{k+1}` for `k = 0..n`.
    fn ba(&self, k: usize) -> F {
        self.b(k) * self.a(k + 1)
    }

    /// `F_i = Σ_{j<i} f_j + t Σ_{j≥i} f_j + t` for `i = 1..n+1`.
    #[allow(non_snake_case)]
    pub fn F(&self, i: usize) -> F {
        let n = self.n();
        let before = sum(&self.f[..i - 1]);
        let after = sum(&self.f[(i - 1).min(n)..]);
        before + &(self.t.clone() * &after) + &self.t
    }

    /// `G_i` for `i = 1..n+1`.
    #[allow(non_snake_case)]
    pub fn G(&self, i: usize) -> Result<F> {
        let n = self.n();
        // ∏_{l=j+1}^n g_l / ∏_{l=1}^{j-1} g_l
        let gratio = |j: usize| -> Result<F> { product(&self.g[j..]).div(&product(&self.g[..j - 1])) };
        let ba_range = |lo: usize, hi: usize| -> F { (lo..hi).fold(F::one(), |acc, k| acc * &self.ba(k)) };
        let mut total = F::zero();
        for j in i..=n {
            total = total + &(ba_range(i, j) * &gratio(j)? * &self.f(j));
        }
        let tail = ba_range(i, n + 1);
        total = total + &(self.q_half(n as i64)? * &self.t * &tail);
        let qn1 = self.q.powi(n as i64 - 1)?;
        for j in 1..i {
            total = total + &(qn1.clone() * &self.t * &ba_range(0, j) * &tail * &gratio(j)? * &self.f(j));
        }
        Ok(total)
    }
}

impl Witness for PainleveState<Rat> {
    fn witness(&self) -> serde_json::Value {
        json!({
            "a": self.a.witness(), "b": self.b.witness(), "t": self.t.witness(),
            "f": self.f.witness(), "g": self.g.witness(), "h": self.h.witness(),
        })
    }
}

/// State exchange format. The roots `u_q`, `u_t`, `w` are stored instead of
/// `q` and `t`, which they determine.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StateJson {
    pub a: Vec<Rat>,
    pub b: Vec<Rat>,
    pub f: Vec<Rat>,
    pub g: Vec<Rat>,
    pub h: Rat,
    pub u_q: Rat,
    pub u_t: Rat,
    pub w: Rat,
}

impl From<&PainleveState<Rat>> for StateJson {
    fn from(s: &PainleveState<Rat>) -> StateJson {
        StateJson {
            a: s.a.clone(),
            b: s.b.clone(),
            f: s.f.clone(),
            g: s.g.clone(),
            h: s.h.clone(),
            u_q: s.roots.u_q.clone(),
            u_t: s.roots.u_t.clone(),
            w: s.roots.w.clone(),
        }
    }
}

impl TryFrom<StateJson> for PainleveState<Rat> {
    type Error = Error;
    fn try_from(j: StateJson) -> Result<PainleveState<Rat>> {
        PainleveState::new(j.a, j.b, j.f, j.g, j.h, Roots { u_q: j.u_q, u_t: j.u_t, w: j.w })
    }
}

/// Generators of a random state: `a_i`, `b_i`, `f_i`, `g_i` and the roots;
/// `b_{n+1}` is the slack making `w` exact.
pub fn painleve_vars(n: usize) -> (VarTable, Vec<Constraint>) {
    let mut vt = VarTable::new();
    for i in 1..=n + 1 {
        vt.add_var(&format!("a{i}"));
        vt.add_var(&format!("b{i}"));
    }
    for i in 1..=n {
        vt.add_var(&format!("f{i}"));
        vt.add_var(&format!("g{i}"));
    }
    vt.add_root("u_q", "q", 2 * (n as u32 + 1));
    vt.add_root("u_t", "t", n as u32 + 1);
    vt.add_root("w", "q^n a_1 b_1 ... a_(n+1) b_(n+1)", n as u32 + 1);
    let b_last = format!("b{}", n + 1);
    let mut factors: Vec<(String, i64)> = vec![("w".into(), n as i64 + 1), ("u_q".into(), -2 * (n as i64) * (n as i64 + 1))];
    factors.extend((1..=n + 1).map(|i| (format!("a{i}"), -1)));
    factors.extend((1..=n).map(|i| (format!("b{i}"), -1)));
    let refs: Vec<(&str, i64)> = factors.iter().map(|(s, e)| (s.as_str(), *e)).collect();
    (vt, vec![Constraint::new(&b_last, Rat::one(), &refs)])
}

/// The state read from a sampled point, with gauge `h = 1`.
pub fn state_of_point(n: usize, pt: &Point) -> Result<PainleveState<Rat>> {
    let get = |p: &str, i: usize| pt.get(&format!("{p}{i}"));
    let a = (1..=n + 1).map(|i| get("a", i)).collect::<Result<Vec<_>>>()?;
    let b = (1..=n + 1).map(|i| get("b", i)).collect::<Result<Vec<_>>>()?;
    let f = (1..=n).map(|i| get("f", i)).collect::<Result<Vec<_>>>()?;
    let g = (1..=n).map(|i| get("g", i)).collect::<Result<Vec<_>>>()?;
    let roots = Roots { u_q: pt.get("u_q")?, u_t: pt.get("u_t")?, w: pt.get("w")? };
    PainleveState::new(a, b, f, g, Rat::one(), roots)
}

/// Sampler of random states for family `n`.
pub fn painleve_sampler(n: usize) -> impl Fn(u64) -> Result<Point> + Sync {
    let (vt, cons) = painleve_vars(n);
    move |s| crate::exactalg::sample_point(&vt, &cons, s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(n: usize, s: u64) -> PainleveState<Rat> {
        state_of_point(n, &painleve_sampler(n)(s).unwrap()).unwrap()
    }

    #[test]
    fn json_round_trip() {
        let s = st(2, 4);
        let text = serde_json::to_string(&StateJson::from(&s)).unwrap();
        let back: StateJson = serde_json::from_str(&text).unwrap();
        assert_eq!(PainleveState::try_from(back).unwrap(), s);
    }

    #[test]
    fn f_endpoints() {
        let s = st(3, 1);
        let sf = sum(&s.f);
        assert_eq!(s.F(1), s.t.clone() * &sf + &s.t);
        assert_eq!(s.F(4), sf + &s.t);
    }

    /// Second transcription of `G_i` for `n = 1`, written out by hand.
    #[test]
    fn g_n1_by_hand() {
        let s = st(1, 7);
        let (a1, a2, b1, b2) = (s.a[0].clone(), s.a[1].clone(), s.b[0].clone(), s.b[1].clone());
        let (t, q, f1) = (s.t.clone(), s.q.clone(), s.f[0].clone());
        let sq = s.q_half(1).unwrap();
        let b0 = q.clone() * &b2;
        // G_1 = f_1 + q^{1/2} t b_1 a_2
        assert_eq!(s.G(1).unwrap(), f1.clone() + &(sq.clone() * &t * &b1 * &a2));
        // G_2 = q^{1/2} t + t b_0 a_1 f_1
        assert_eq!(s.G(2).unwrap(), sq * &t + &(t * &b0 * &a1 * &f1));
    }

    #[test]
    fn w_constraint_enforced() {
        let mut s = st(2, 3);
        s.roots.w = s.roots.w.clone() * &Rat::from_int(2);
        assert!(PainleveState::new(s.a, s.b, s.f, s.g, s.h, s.roots).is_err());
    }
}
