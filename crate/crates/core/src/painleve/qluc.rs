//! The q-LUC system realized by `τ3`: a grid of states at a common time
//! whose `c`-parameters run along a `τ3` orbit.
//!
//! Labels are `(i, k)` with `i` modulo `n + 1` and `k` modulo the period
//! `P` of `τ3` on `c`: `f[k][i] = f_{i,n-i+2k}`, `g[k][i] = g_{i,n-i+2k-1}`,
//! `c_f[k][i] = c_{i,n-i+2k}`, `c_g[k][i] = c_{i,n-i+2k-1}`. Each state
//! `σ_k` sits at `(t, τ3^{-k}(c))`; the shifted values at `k` come from
//! `τ3(σ_{k+1})`, which sits at `(q t, τ3^{-k}(c))`.

use crate::error::{Error, Result};
use crate::exactalg::{product, sample_point, Field, Point, Rat, VarTable, Witness};
use crate::report::{run_checks, Check, SuiteReport};
use crate::translations::{act_translation, tau3_period, TBase, TranslationName};
use crate::weylrep::{params_from_y, y_from_params, ParamState};

/// Free data of a grid: `q = u^{n+1}`, `t_0 = v_0^{n+1}`, `t_1 = v_1^{n+1}`,
/// `α` of the base state and the free `φ` of each of the `P` states.
#[derive(Clone, Debug, PartialEq)]
pub struct QlucSample {
    pub n: usize,
    pub u: Rat,
    pub v0: Rat,
    pub v1: Rat,
    /// `α_0 … α_{2n}`; `α_{2n+1}` is solved from `q`.
    pub alpha: Vec<Rat>,
    /// For each `k < P`, `φ_0 … φ_{2n-1}`; `φ_{2n}`, `φ_{2n+1}` are solved from `t_0`, `t_1`.
    pub phi: Vec<Vec<Rat>>,
}

/// A named identity with its two sides.
pub type NamedSides = (String, Vec<Rat>, Vec<Rat>);

/// The labelled grid with its scalars.
#[derive(Clone, Debug, PartialEq)]
pub struct QlucGrid {
    pub n: usize,
    pub period: usize,
    /// `q^{1/(n+1)}`, `t_0^{1/(n+1)}`, `t_1^{1/(n+1)}`.
    pub u: Rat,
    pub v0: Rat,
    pub v1: Rat,
    pub alpha: Rat,
    pub beta: Rat,
    pub gamma: Rat,
    pub delta: Rat,
    pub c_f: Vec<Vec<Rat>>,
    pub c_g: Vec<Vec<Rat>>,
    pub f: Vec<Vec<Rat>>,
    pub g: Vec<Vec<Rat>>,
    pub f_bar: Vec<Vec<Rat>>,
    pub g_bar: Vec<Vec<Rat>>,
    /// `τ3^{-k}(c)` for `k = 0..=P`.
    pub c_orbit: Vec<Vec<Rat>>,
    /// The states `σ_k` and their `τ3` images `τ3(σ_{k+1})`.
    pub states: Vec<ParamState<Rat>>,
    pub shifted: Vec<ParamState<Rat>>,
}

/// `t_0 = ∏ 1/φ_{2i}` and `t_1 = ∏ α_{2i+1}/φ_{2i+1}`.
pub fn t_pair<F: Field>(p: &ParamState<F>) -> Result<(F, F)> {
    let n = p.n() as i64;
    let mut t0 = F::one();
    let mut t1 = F::one();
    for i in 0..=n {
        t0 = t0 * &p.f(2 * i).inv()?;
        t1 = t1 * &p.a(2 * i + 1).div(p.f(2 * i + 1))?;
    }
    Ok((t0, t1))
}

/// `c` of a state, given `(t_0 t_1)^{1/(n+1)}`.
pub fn c_of<F: Field>(p: &ParamState<F>, tt: &F) -> Result<Vec<F>> {
    p.alpha.iter().enumerate().map(|(i, a)| if i % 2 == 0 { Ok(a.clone() * tt) } else { a.div(tt) }).collect()
}

/// Generators of a random grid for family `n`.
pub fn qluc_vars(n: usize) -> VarTable {
    let mut vt = VarTable::new();
    vt.add_root("u", "q", n as u32 + 1);
    vt.add_root("v0", "t0", n as u32 + 1);
    vt.add_root("v1", "t1", n as u32 + 1);
    for i in 0..=2 * n {
        vt.add_var(&format!("alpha{i}"));
    }
    for k in 0..tau3_period(n) {
        for i in 0..2 * n {
            vt.add_var(&format!("phi{k}_{i}"));
        }
    }
    vt
}

impl QlucSample {
    pub fn from_point(n: usize, pt: &Point) -> Result<QlucSample> {
        let alpha = (0..=2 * n).map(|i| pt.get(&format!("alpha{i}"))).collect::<Result<_>>()?;
        let phi = (0..tau3_period(n)).map(|k| (0..2 * n).map(|i| pt.get(&format!("phi{k}_{i}"))).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?;
        Ok(QlucSample { n, u: pt.get("u")?, v0: pt.get("v0")?, v1: pt.get("v1")?, alpha, phi })
    }

    /// A state with the given `α` and free `φ`, completing `φ_{2n}`, `φ_{2n+1}`.
    fn state(&self, alpha: Vec<Rat>, free_phi: &[Rat]) -> Result<ParamState<Rat>> {
        let n = self.n;
        let e = n as i64 + 1;
        let (t0, t1) = (self.v0.powi(e)?, self.v1.powi(e)?);
        let mut phi = free_phi.to_vec();
        let even: Vec<Rat> = (0..n).map(|i| phi[2 * i].clone()).collect();
        phi.push((t0 * &product(&even)).inv()?);
        let mut ratio = alpha[2 * n + 1].clone();
        for i in 0..n {
            ratio = ratio * &alpha[2 * i + 1].div(&phi[2 * i + 1])?;
        }
        phi.push(ratio.div(&t1)?);
        ParamState::from_alpha_phi(alpha, phi)
    }
}

fn tau3_params(p: &ParamState<Rat>, power: i64) -> Result<ParamState<Rat>> {
    Ok(params_from_y(&act_translation(TranslationName::new(TBase::Tau3).pow(power), &y_from_params(p)?)?))
}

/// Builds the grid: the base state, the `τ3^{-k}` orbit of `c` by words,
/// the other states at the same time, and their `τ3` images.
pub fn build_qluc_grid(s: &QlucSample) -> Result<QlucGrid> {
    let n = s.n;
    let period = tau3_period(n);
    let e = n as i64 + 1;
    let mut alpha = s.alpha.clone();
    alpha.push(s.u.powi(e)?.div(&product(&s.alpha))?);
    let base = s.state(alpha, &s.phi[0])?;
    let tt = s.v0.clone() * &s.v1;
    let u2 = s.u.clone() * &s.u;

    // τ3^{-k}(c) read off τ3^{-k}(σ_0), whose (t_0 t_1)^{1/(n+1)} is u^{-2k} tt.
    let mut c_orbit = vec![c_of(&base, &tt)?];
    let mut cur = base.clone();
    let mut tt_k = tt.clone();
    for _ in 0..period {
        cur = tau3_params(&cur, -1)?;
        tt_k = tt_k.div(&u2)?;
        c_orbit.push(c_of(&cur, &tt_k)?);
    }

    let mut states = vec![base];
    for k in 1..period {
        let alpha_k = c_orbit[k].iter().enumerate().map(|(i, c)| if i % 2 == 0 { c.div(&tt) } else { Ok(c.clone() * &tt) }).collect::<Result<Vec<_>>>()?;
        states.push(s.state(alpha_k, &s.phi[k])?);
    }
    let shifted = (0..period).map(|k| tau3_params(&states[(k + 1) % period], 1)).collect::<Result<Vec<_>>>()?;

    let (u, v0, v1) = (s.u.clone(), s.v0.clone(), s.v1.clone());
    let uv0 = u.clone() * &v0;
    let mut grid = QlucGrid {
        n,
        period,
        alpha: -v1.clone(),
        beta: -(v0.inv()?),
        gamma: -v0.clone(),
        delta: -(v1.inv()?),
        u,
        v0,
        v1,
        c_f: vec![],
        c_g: vec![],
        f: vec![],
        g: vec![],
        f_bar: vec![],
        g_bar: vec![],
        c_orbit,
        states,
        shifted,
    };
    for k in 0..period {
        let (c, st, sh) = (&grid.c_orbit[k], &grid.states[k], &grid.shifted[k]);
        let idx = |i: usize| 2 * i as i64;
        grid.c_f.push((0..=n).map(|i| c[2 * i].div(&grid.u)).collect::<Result<_>>()?);
        grid.c_g.push((0..=n).map(|i| c[2 * i + 1].inv()).collect::<Result<_>>()?);
        grid.f.push((0..=n).map(|i| grid.v0.clone() * st.f(idx(i))).collect());
        grid.g.push((0..=n).map(|i| st.f(idx(i) + 1).div(&(grid.v0.clone() * &c[2 * i + 1]))).collect::<Result<_>>()?);
        grid.f_bar.push((0..=n).map(|i| uv0.clone() * sh.f(idx(i))).collect());
        grid.g_bar.push((0..=n).map(|i| sh.f(idx(i) + 1).div(&(uv0.clone() * &c[2 * i + 1]))).collect::<Result<_>>()?);
    }
    Ok(grid)
}

impl QlucGrid {
    fn at<'a>(&self, v: &'a [Vec<Rat>], i: usize, k: usize) -> &'a Rat {
        &v[k % self.period][i % (self.n + 1)]
    }

    /// Both sides of the two q-LUC equations at every `(i, k)`, `i, k = 0..n`.
    pub fn equations(&self) -> Result<[(Vec<Rat>, Vec<Rat>); 2]> {
        let n = self.n;
        let mut first = (Vec::new(), Vec::new());
        let mut second = (Vec::new(), Vec::new());
        let uq_gamma = self.u.clone() * &self.gamma;
        for k in 0..=n {
            for i in 0..=n {
                let (i1, k1) = (i + 1, k + 1);
                let (g_i1, g_i) = (self.at(&self.g, i1, k1), self.at(&self.g, i, k1));
                let (cg_i, cg_i1) = (self.at(&self.c_g, i, k1), self.at(&self.c_g, i1, k1));
                let cf = self.at(&self.c_f, i, k);
                let num = (g_i1.clone() - &self.alpha) * &(g_i.clone() - &(cg_i.clone() * &self.beta));
                let den = (g_i.clone() - &self.alpha) * &(g_i1.clone() - &(cg_i1.clone() * &self.beta));
                first.0.push(self.at(&self.f_bar, i, k).clone());
                first.1.push(cf.div(cg_i)? * &num.div(&den)? * self.at(&self.f, i1, k1));

                let (fb_i1, fb_i) = (self.at(&self.f_bar, i1, k), self.at(&self.f_bar, i, k));
                let cf_i1 = self.at(&self.c_f, i1, k);
                let num = (fb_i1.clone() - &uq_gamma) * &(fb_i.clone() - &(cf.clone() * &self.delta));
                let den = (fb_i.clone() - &uq_gamma) * &(fb_i1.clone() - &(cf_i1.clone() * &self.delta));
                second.0.push(self.at(&self.g_bar, i, k).clone());
                second.1.push(cf_i1.div(cg_i1)? * &num.div(&den)? * g_i1);
            }
        }
        Ok([first, second])
    }

    /// The constraints as `(lhs, rhs)`: `αδ = βγ`, the two `c`-ratio
    /// families, and the `f` and `g` products, each over `i, k = 0..n`.
    pub fn constraints(&self) -> Result<Vec<NamedSides>> {
        let n = self.n;
        let one = Rat::one();
        let mut c1 = (Vec::new(), Vec::new());
        let mut c2 = (Vec::new(), Vec::new());
        let mut pf = (Vec::new(), Vec::new());
        let mut pg = (Vec::new(), Vec::new());
        for k in 0..=n {
            for i in 0..=n {
                let (i1, k1) = (i + 1, k + 1);
                let num = self.at(&self.c_f, i, k).clone() * self.at(&self.c_f, i1, k1);
                let den = self.at(&self.c_g, i1, k1).clone() * self.at(&self.c_g, i, k1);
                c1.0.push(num.div(&den)?);
                c1.1.push(one.clone());
                let num = self.at(&self.c_g, i, k).clone() * self.at(&self.c_g, i1, k1);
                let den = self.at(&self.c_f, i1, k).clone() * self.at(&self.c_f, i, k);
                c2.0.push(num.div(&den)?);
                c2.1.push(one.clone());
            }
            pf.0.push(product(&self.f[k % self.period]));
            pf.1.push(one.clone());
            pg.0.push(product(&self.g[k % self.period]));
            pg.1.push(one.clone());
        }
        Ok(vec![
            ("alpha delta = beta gamma".into(), vec![self.alpha.clone() * &self.delta], vec![self.beta.clone() * &self.gamma]),
            ("c-ratio constraint (even)".into(), c1.0, c1.1),
            ("c-ratio constraint (odd)".into(), c2.0, c2.1),
            ("product of f over i = 1".into(), pf.0, pf.1),
            ("product of g over i = 1".into(), pg.0, pg.1),
        ])
    }
}

impl Witness for QlucSample {
    fn witness(&self) -> serde_json::Value {
        serde_json::json!({"u": self.u.witness(), "v0": self.v0.witness(), "v1": self.v1.witness(), "alpha": self.alpha.witness(), "phi": self.phi.witness()})
    }
}

fn grid_at(n: usize, pt: &Point) -> Result<QlucGrid> {
    build_qluc_grid(&QlucSample::from_point(n, pt)?)
}

/// The q-LUC equations, the constraints, the time and `c` actions of `τ3`,
/// periodicity of `c`, and the squared forms of the `t_0`, `t_1` displays.
pub fn verify_qluc(n: usize, trials: usize, seed: u64) -> SuiteReport {
    let mut checks: Vec<(String, Check<Vec<Rat>>)> = Vec::new();
    for (which, name) in [(0usize, "q-LUC equation for f"), (1, "q-LUC equation for g")] {
        checks.push((
            name.into(),
            Box::new(move |pt: &Point| {
                let [a, b] = grid_at(n, pt)?.equations()?;
                Ok(if which == 0 { a } else { b })
            }),
        ));
    }
    for c in 0..5 {
        let names = ["alpha delta = beta gamma", "c-ratio constraint (even)", "c-ratio constraint (odd)", "product of f over i = 1", "product of g over i = 1"];
        checks.push((
            names[c].into(),
            Box::new(move |pt: &Point| {
                let (_, l, r) = grid_at(n, pt)?.constraints()?.swap_remove(c);
                Ok((l, r))
            }),
        ));
    }
    let period = tau3_period(n);
    checks.push((
        format!("tau3^{period}(c) = c"),
        Box::new(move |pt: &Point| {
            let grid = grid_at(n, pt)?;
            Ok((grid.c_orbit[period].clone(), grid.c_orbit[0].clone()))
        }),
    ));
    if n.is_multiple_of(2) {
        checks.push((
            "c labels agree on their overlap".into(),
            Box::new(move |pt: &Point| c_label_overlap(&grid_at(n, pt)?).ok_or(Error::SizeMismatch("odd rank".into()))),
        ));
    }
    checks.push((
        "tau3(t0, t1) = (q t0, q t1) and tau3 moves c one step along its orbit".into(),
        Box::new(move |pt: &Point| {
            let grid = grid_at(n, pt)?;
            let q = grid.u.powi(n as i64 + 1)?;
            let tt_bar = grid.u.clone() * &grid.u * &grid.v0 * &grid.v1;
            let (mut l, mut r) = (Vec::new(), Vec::new());
            for k in 0..period {
                let (t0, t1) = t_pair(&grid.states[(k + 1) % period])?;
                let (s0, s1) = t_pair(&grid.shifted[k])?;
                l.extend([s0, s1]);
                r.extend([q.clone() * &t0, q.clone() * &t1]);
                l.extend(c_of(&grid.shifted[k], &tt_bar)?);
                r.extend(grid.c_orbit[k].clone());
            }
            Ok((l, r))
        }),
    ));
    checks.push((
        "t0^2 and t1^2 match their parameter expressions".into(),
        Box::new(move |pt: &Point| {
            let grid = grid_at(n, pt)?;
            let p = &grid.states[0];
            let (t0, t1) = t_pair(p)?;
            let odd: Vec<Rat> = (0..=n).map(|i| p.a(2 * i as i64 + 1).clone()).collect();
            let po = product(&odd);
            let l = vec![t0.clone() * &t0, t1.clone() * &t1];
            let r = vec![po.div(&(p.b(0).clone() * p.bp(0)))?, p.b(0).div(p.bp(0))? * &po];
            Ok((l, r))
        }),
    ));
    let vt = qluc_vars(n);
    let sampler = move |s: u64| sample_point(&vt, &[], s);
    let reports = run_checks(n, trials, seed, sampler, checks);
    SuiteReport::new("qluc", n, seed, reports)
}

/// The two labellings of `c_{i,j}` side by side where their index sets
/// overlap. Only even `n` has an overlap, since there `n + 1` is odd.
pub fn c_label_overlap(grid: &QlucGrid) -> Option<(Vec<Rat>, Vec<Rat>)> {
    let n = grid.n;
    if n % 2 == 1 {
        return None;
    }
    let m = n + 1;
    let (mut l, mut r) = (Vec::new(), Vec::new());
    for i in 0..=n {
        for k in 0..=n {
            // n - i + 2k ≡ n - i + 2k' - 1 (mod n + 1), so 2k' ≡ 2k + 1.
            let k2 = (0..=n).find(|k2| (2 * k2) % m == (2 * k + 1) % m)?;
            l.push(grid.at(&grid.c_f, i, k).clone());
            r.push(grid.at(&grid.c_g, i, k2).clone());
        }
    }
    Some((l, r))
}
