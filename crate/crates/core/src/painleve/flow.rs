//! One step of q-P_(n+1,n+1) and the dictionary to the Weyl-group variables.

use super::state::{PainleveState, Roots};
use crate::error::{Error, Result};
use crate::exactalg::{product, Field};
use crate::weylrep::ParamState;

/// The state at `q t`. The `g`-equation is solved first because the
/// `f`-equation needs `ḡ`; the gauge advances by its own rule.
pub fn qp_step<F: Field>(st: &PainleveState<F>) -> Result<PainleveState<F>> {
    let n = st.n();
    let one = F::one();
    let big_f: Vec<F> = (1..=n + 1).map(|i| st.F(i)).collect();
    let big_g: Vec<F> = (1..=n + 1).map(|i| st.G(i)).collect::<Result<_>>()?;
    let (fi, gi) = (|i: usize| &big_f[i - 1], |i: usize| &big_g[i - 1]);
    let mut g_bar = Vec::with_capacity(n);
    for i in 1..=n {
        g_bar.push((fi(i + 1).clone() * gi(i)).div(&(fi(i).clone() * gi(i + 1) * &st.g(i)?))?);
    }
    let t_bar = st.q.clone() * &st.t;
    let g0_bar = (st.q_half(n as i64 - 2)? * &t_bar * &product(&g_bar)).inv()?;
    // F_{n+1} F_1 (b_0/ḡ_0 - 1)(ḡ_0 - a_1)
    let common = fi(n + 1).clone() * fi(1) * &(st.b(0).div(&g0_bar)? - &one) * &(g0_bar.clone() - st.a(1));
    let mut f_bar = Vec::with_capacity(n);
    for i in 1..=n {
        let gb = &g_bar[i - 1];
        let num = st.q.clone() * &st.t * fi(i) * fi(i + 1) * &(st.b(i).div(gb)? - &one) * &(gb.clone() - st.a(i + 1));
        f_bar.push(num.div(&(common.clone() * &st.f(i)))?);
    }
    let tm1 = st.t.clone() - &one;
    let h_bar = -(common.div(&(st.t.clone() * &tm1 * &tm1 * &g0_bar))?);
    let roots = Roots { u_q: st.roots.u_q.clone(), u_t: st.q_root() * &st.roots.u_t, w: st.roots.w.clone() };
    PainleveState::new(st.a.clone(), st.b.clone(), f_bar, g_bar, h_bar, roots)
}

/// `φ_0 … φ_{2n+1}` of a state.
pub fn phi_of<F: Field>(st: &PainleveState<F>) -> Result<Vec<F>> {
    let n = st.n();
    let mut phi = vec![F::zero(); 2 * n + 2];
    for i in 0..=n {
        phi[2 * i] = -(st.b(i).div(&st.g(i)?)?);
    }
    // φ_{2i+1} = -g_i (b_{i+1} - g_{i+1}) / (b_{i+1} (b_i - g_i)) · f_i / f_{i+1}, with
    // f_0 = t, and the last entry closing up through b_0, g_0.
    for i in 0..=n {
        let (j, fj) = if i == n { (0, F::one()) } else { (i + 1, st.f(i + 1)) };
        let num = st.g(i)? * &(st.b(j) - &st.g(j)?) * &st.f(i);
        let den = st.b(j) * &(st.b(i) - &st.g(i)?) * &fj;
        phi[2 * i + 1] = -(num.div(&den)?);
    }
    Ok(phi)
}

/// The Weyl-group variables of a state (rational direction).
pub fn painleve_to_params<F: Field>(st: &PainleveState<F>) -> Result<ParamState<F>> {
    let n = st.n();
    let mut alpha = vec![F::zero(); 2 * n + 2];
    for i in 1..=n + 1 {
        alpha[2 * i - 1] = st.a(i).div(&st.b(i))?;
    }
    for i in 1..=n {
        alpha[2 * i] = st.b(i).div(st.a(i + 1))?;
    }
    alpha[0] = st.b(0).div(st.a(1))?;
    ParamState::from_alpha_phi(alpha, phi_of(st)?)
}

/// A state from Weyl-group variables.
///
/// The overall scale of `(a, b)` is the caller's choice of `a_1`; it must
/// satisfy `β_0 = q^n t ∏ a_i b_i`. The remaining `a_i, b_i` follow from
/// the `α`, `t = β'_0`, and `f_i, g_i` from `φ`.
pub fn params_to_painleve<F: Field>(p: &ParamState<F>, a1: F, roots: Roots<F>, h: F) -> Result<PainleveState<F>> {
    let n = p.n();
    let mut a = vec![a1];
    let mut b = Vec::with_capacity(n + 1);
    for i in 1..=n + 1 {
        b.push(a[i - 1].div(p.a(2 * i as i64 - 1))?);
        if i <= n {
            a.push(b[i - 1].div(p.a(2 * i as i64))?);
        }
    }
    let t = p.bp(0).clone();
    let beta0 = p.q.powi(n as i64)? * &t * &product(&a) * &product(&b);
    if &beta0 != p.b(0) {
        return Err(Error::RootChoiceRequired("a_1 is not a root of its (2n+2)-th power equation".into()));
    }
    let one = F::one();
    let mut f = Vec::with_capacity(n);
    let mut g = Vec::with_capacity(n);
    for i in 1..=n {
        let tail = (i..=n).fold(F::one(), |acc, j| acc * p.f(2 * j as i64 + 1) * p.f(2 * j as i64 + 2));
        f.push((one.clone() + p.f(2 * i as i64)).div(&(one.clone() + p.f(0)))? * &tail);
        g.push(-(b[i - 1].div(p.f(2 * i as i64))?));
    }
    let st = PainleveState::new(a, b, f, g, h, roots)?;
    if st.t != t || st.q != p.q {
        return Err(Error::RootChoiceRequired("u_t, u_q do not match t = β'_0 and q".into()));
    }
    Ok(st)
}

#[cfg(test)]
mod tests {
    use super::super::state::{painleve_sampler, state_of_point};
    use super::*;
    use crate::exactalg::Rat;

    fn st(n: usize, s: u64) -> PainleveState<Rat> {
        state_of_point(n, &painleve_sampler(n)(s).unwrap()).unwrap()
    }

    #[test]
    fn dictionary_gives_t_and_beta0() {
        for n in 1..4 {
            let s = st(n, 11);
            let p = painleve_to_params(&s).unwrap();
            assert_eq!(p.bp(0), &s.t);
            let beta0 = s.q.powi(n as i64).unwrap() * &s.t * &product(&s.a) * &product(&s.b);
            assert_eq!(p.b(0), &beta0);
            assert_eq!(p.q, s.q);
        }
    }

    #[test]
    fn round_trip() {
        for n in 1..4 {
            for seed in 0..5 {
                let s = st(n, seed);
                let p = painleve_to_params(&s).unwrap();
                let back = params_to_painleve(&p, s.a[0].clone(), s.roots.clone(), s.h.clone()).unwrap();
                assert_eq!(back, s, "n={n} seed={seed}");
            }
        }
    }

    #[test]
    fn wrong_scale_is_rejected() {
        let s = st(1, 2);
        let p = painleve_to_params(&s).unwrap();
        let bad = s.a[0].clone() * &Rat::from_int(3);
        assert!(matches!(params_to_painleve(&p, bad, s.roots.clone(), Rat::one()), Err(Error::RootChoiceRequired(_))));
    }

    #[test]
    fn step_advances_time() {
        let s = st(2, 4);
        let s1 = qp_step(&s).unwrap();
        assert_eq!(s1.t, s.q.clone() * &s.t);
        // ḡ_i g_i = F_{i+1} G_i / (F_i G_{i+1})
        for i in 1..=2 {
            let lhs = s1.g(i).unwrap() * &s.g(i).unwrap();
            let rhs = (s.F(i + 1) * &s.G(i).unwrap()).div(&(s.F(i) * &s.G(i + 1).unwrap())).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}
