//! The affine Weyl group symmetry `r̃_0 … r̃_{2n+1}`, `π̃` of q-P_(n+1,n+1).

use super::state::{PainleveState, Roots};
use crate::error::{Error, Result};
use crate::exactalg::Field;

/// Which parameter family fills a slot of `R_j^{x,y,z}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AB {
    A,
    B,
}

impl<F: Field> PainleveState<F> {
    fn pick(&self, s: AB, j: usize) -> F {
        match s {
            AB::A => self.a(j).clone(),
            AB::B => self.b(j),
        }
    }

    /// `R_j^{x,y,z}` for `j = 1..n+1`.
    pub fn r_big(&self, j: usize, x: AB, y: AB, z: AB) -> Result<F> {
        let n = self.n();
        let second = (self.pick(y, j) * &self.b(j - 1).div(&self.g(j - 1)?)? - &self.pick(z, j)).div(&self.f(j - 1))?;
        let first = if j <= n {
            (self.g(j)? - &self.pick(x, j)).div(&self.f(j))?
        } else {
            (self.g(0)? - &(self.q.clone() * &self.pick(x, j))).div(&self.q)?
        };
        Ok(first + &second)
    }

    /// `R_i^*` for `i = 0..n`.
    pub fn r_star(&self, i: usize) -> Result<F> {
        let n = self.n();
        let one = F::one();
        let tq = self.t.div(&self.q)?;
        let term = |j: usize, lead: F| -> Result<F> {
            Ok((lead - &self.a(j + 1).div(&self.g(j)?)?) * &(self.b(j) - &self.g(j)?) * &self.f(j).inv()?)
        };
        let mut total = F::zero();
        for j in 0..i {
            total = total + &(tq.clone() * &term(j, one.clone())?);
        }
        total = total + &term(i, tq.clone())?;
        for j in i + 1..=n {
            total = total + &term(j, one.clone())?;
        }
        Ok(self.f(i).div(&(self.b(i) - &self.g(i)?))? * &total)
    }
}

fn ratio<F: Field>(x: &F, y: &F) -> Result<F> {
    x.div(y)
}

/// `r̃_{2n+1}` with the gauge rule `h ↦ h - (a_{n+1} - b_{n+1}) h / (t R^{baa}_{n+1})`.
///
/// Kept for comparison only; [`tilde_reflection`] drops the `t`, which is what
/// makes the reflection an involution.
pub fn tilde_reflection_t_scaled<F: Field>(st: &PainleveState<F>) -> Result<PainleveState<F>> {
    let n = st.n();
    let baa = st.r_big(n + 1, AB::B, AB::A, AB::A)?;
    let mut out = tilde_reflection(2 * n + 1, st)?;
    out.h = st.h.clone() - &((st.a(n + 1).clone() - &st.b(n + 1)) * &st.h).div(&(st.t.clone() * &baa))?;
    Ok(out)
}

/// `r̃_j` on `(a, b, t, f, g, h)`.
pub fn tilde_reflection<F: Field>(j: usize, st: &PainleveState<F>) -> Result<PainleveState<F>> {
    use AB::{A, B};
    let n = st.n();
    if j > 2 * n + 1 {
        return Err(Error::IndexOutOfRange { index: j, size: 2 * n + 2 });
    }
    let mut out = st.clone();
    if j.is_multiple_of(2) {
        let k = j / 2;
        if k == 0 {
            // b_0 = q b_{n+1} trades places with a_1.
            out.a[0] = st.b(0);
            out.b[n] = st.a(1).div(&st.q)?;
        } else {
            out.a[k] = st.b(k);
            out.b[k - 1] = st.a(k + 1).clone();
        }
        return Ok(out);
    }
    let k = (j - 1) / 2;
    out.a[k] = st.b(k + 1);
    out.b[k] = st.a(k + 1).clone();
    let r = k + 1;
    let (aaa, baa, bab, bbb) = (st.r_big(r, A, A, A)?, st.r_big(r, B, A, A)?, st.r_big(r, B, A, B)?, st.r_big(r, B, B, B)?);
    if k == 0 {
        for i in 1..=n {
            let factor = if i == 1 { ratio(&aaa, &bab)? } else { ratio(&baa, &bab)? };
            out.f[i - 1] = st.f(i) * &factor;
        }
        out.g[0] = st.g(1)? * &ratio(&baa, &bbb)?;
        out.h = st.h.clone() + &((st.a(1).clone() - &st.b(1)) * &st.h).div(&(st.t.clone() * &baa))?;
    } else if k == n {
        for i in 1..=n {
            let factor = if i == n { ratio(&bab, &aaa)? } else { ratio(&baa, &aaa)? };
            out.f[i - 1] = st.f(i) * &factor;
        }
        out.g[n - 1] = st.g(n)? * &ratio(&bbb, &baa)?;
        // No factor t here, unlike r̃_1: with t in the denominator the map is
        // not an involution on h.
        out.h = st.h.clone() - &((st.a(n + 1).clone() - &st.b(n + 1)) * &st.h).div(&baa)?;
    } else {
        out.f[k - 1] = st.f(k) * &ratio(&bab, &baa)?;
        out.f[k] = st.f(k + 1) * &ratio(&aaa, &baa)?;
        out.g[k - 1] = st.g(k)? * &ratio(&bbb, &baa)?;
        out.g[k] = st.g(k + 1)? * &ratio(&baa, &bbb)?;
    }
    Ok(out)
}

/// `π̃` on `(a, b, t, f, g)`, with `t → q²/t` and `q^{ρ_1} → q^{-ρ_1 - 1/(n+1)}`.
///
/// The gauge is carried over unchanged: only `π̃²` has a prescribed action
/// on `h` (see [`tilde_pi_squared`]).
pub fn tilde_pi<F: Field>(st: &PainleveState<F>) -> Result<PainleveState<F>> {
    let n = st.n();
    let one = F::one();
    let w = &st.roots.w;
    let tq = st.t.div(&st.q)?;
    let rs: Vec<F> = (0..=n).map(|i| st.r_star(i)).collect::<Result<_>>()?;
    // (g_i R_i^* - b_{i+1} R_{i+1}^*)(b_{i+1} - g_{i+1})(R_{i+1}^* + 1 - t/q), with i+1 = n+1 read as 0
    let block = |i: usize| -> Result<F> {
        let next = if i == n { 0 } else { i + 1 };
        let bn = st.b(i + 1);
        Ok((st.g(i)? * &rs[i] - &(bn * &rs[next])) * &(st.b(next) - &st.g(next)?) * &(rs[next].clone() + &one - &tq))
    };
    let den = block(0)? * &st.f(1);
    let mut f = Vec::with_capacity(n);
    let mut g = Vec::with_capacity(n);
    for i in 1..n {
        let num = st.q.clone() * &st.q * &block(i)? * &st.f(1);
        f.push(num.div(&(st.t.clone() * &den.div(&st.f(1))? * &st.f(i + 1)))?);
        g.push(st.a(i + 1).div(w)? * &(st.b(i + 1) * &rs[i + 1]).div(&(st.g(i)? * &rs[i]))?);
    }
    f.push((st.q.clone() * &block(n)? * &st.f(1)).div(&(den.div(&st.f(1))? * &st.f(0)))?);
    g.push(st.a(n + 1).div(w)? * &(st.b(n + 1) * &rs[0]).div(&(st.g(n)? * &rs[n]))?);

    let mut a = Vec::with_capacity(n + 1);
    let mut b = Vec::with_capacity(n + 1);
    for i in 1..=n {
        a.push(st.b(i).div(w)?);
        b.push(st.a(i + 1).div(w)?);
    }
    a.push(st.b(n + 1).div(w)?);
    b.push(st.a(1).div(&(w.clone() * &st.q))?);
    let uq2 = st.q_root();
    let roots = Roots { u_q: st.roots.u_q.clone(), u_t: (uq2.clone() * &uq2).div(&st.roots.u_t)?, w: (w.clone() * &uq2).inv()? };
    PainleveState::new(a, b, f, g, st.h.clone(), roots)
}

/// `π̃²`, including its gauge rule `h → t^{1/(n+1)} f_1 h / t`.
///
/// The factor `t^{1/(n+1)}` is what the Lax compatibility with `Π` requires;
/// see [`tilde_pi_squared_unscaled`] for the rule without it.
pub fn tilde_pi_squared<F: Field>(st: &PainleveState<F>) -> Result<PainleveState<F>> {
    let mut out = tilde_pi(&tilde_pi(st)?)?;
    out.h = st.f(1) * &st.h * &st.roots.u_t.div(&st.t)?;
    Ok(out)
}

/// `π̃²` with the gauge rule `h → f_1 h / t`, kept for comparison.
pub fn tilde_pi_squared_unscaled<F: Field>(st: &PainleveState<F>) -> Result<PainleveState<F>> {
    let mut out = tilde_pi(&tilde_pi(st)?)?;
    out.h = st.f(1) * &st.h.div(&st.t)?;
    Ok(out)
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
    fn even_reflections_swap_parameters_only() {
        let s = st(2, 5);
        let r = tilde_reflection(2, &s).unwrap();
        assert_eq!(r.b(1), *s.a(2));
        assert_eq!(*r.a(2), s.b(1));
        assert_eq!((r.f.clone(), r.g.clone()), (s.f.clone(), s.g.clone()));
    }

    #[test]
    fn reflections_are_involutions() {
        for n in 1..4 {
            let s = st(n, 9);
            for j in 0..2 * n + 2 {
                let back = tilde_reflection(j, &tilde_reflection(j, &s).unwrap()).unwrap();
                assert_eq!(back, s, "n={n} j={j}");
            }
        }
    }

    #[test]
    fn r1_on_g1() {
        use AB::{A, B};
        let s = st(2, 12);
        let r = tilde_reflection(1, &s).unwrap();
        let expect = s.g(1).unwrap() * &s.r_big(1, B, A, A).unwrap().div(&s.r_big(1, B, B, B).unwrap()).unwrap();
        assert_eq!(r.g(1).unwrap(), expect);
    }

    #[test]
    fn pi_tilde_on_parameters() {
        let s = st(2, 3);
        let p = tilde_pi(&s).unwrap();
        assert_eq!(p.t, (s.q.clone() * &s.q).div(&s.t).unwrap());
        assert_eq!(*p.a(1), s.b(1).div(&s.roots.w).unwrap());
    }
}
