use super::params::{md, ParamState};
use super::Generator;
use crate::error::Result;
use crate::exactalg::Field;

/// Cartan matrix entry of type `A^{(1)}_{N-1}`, `N ≥ 3` (including the
/// `N = 2` special case).
pub fn cartan(i: i64, j: i64, size: usize) -> i64 {
    let (i, j) = (md(i, size), md(j, size));
    if i == j {
        2
    } else if size == 2 {
        -2
    } else if md(i as i64 + 1, size) == j || md(j as i64 + 1, size) == i {
        -1
    } else {
        0
    }
}

fn delta(i: i64, j: i64, m: usize) -> i64 {
    i64::from(md(i, m) == md(j, m))
}

/// `Σ_{j=0}^{len-1} Π_{k<j} term(k) · tail(j)`.
fn nested_sum<F: Field>(len: usize, term: impl Fn(i64) -> Result<F>, tail: impl Fn(i64) -> Result<F>) -> Result<F> {
    let mut acc = F::zero();
    let mut prefix = F::one();
    for j in 0..len as i64 {
        acc = acc + prefix.clone() * tail(j)?;
        prefix = prefix * term(j)?;
    }
    Ok(acc)
}

/// The parameter state after acting with `g`, from the closed formulas.
///
/// Entry `φ_i` of the result is the function `g(φ_i)` evaluated at `p`, and
/// likewise for the roots, so composing closed forms follows the same
/// rightmost-first rule as words.
pub fn act_closed_form<F: Field>(g: Generator, p: &ParamState<F>) -> Result<ParamState<F>> {
    let n = p.n();
    let m = 2 * n + 2;
    let a = |i: i64| p.a(i).clone();
    let f = |i: i64| p.f(i).clone();
    let one = F::one;
    let mut out = p.clone();
    match g.normalized(n) {
        Generator::R(j) => {
            let j = j as i64;
            let ratio = (a(j) + &f(j)).div(&(one() + &f(j)))?;
            for i in 0..m as i64 {
                out.alpha[i as usize] = a(i) * a(j).powi(-cartan(j, i, m))?;
                let e1 = -delta(i, j, m) + delta(i, j + 1, m);
                let e2 = delta(i, j - 1, m) - delta(i, j + 1, m);
                out.phi[i as usize] = f(i) * a(j).powi(e1)? * ratio.powi(e2)?;
            }
        }
        Generator::S(l) => {
            reflect_a1(&mut out.beta, &p.beta, l)?;
            for i in 0..=n as i64 {
                out.phi[2 * i as usize] = s0_even(p, i, l)?;
                out.phi[2 * i as usize + 1] = s0_odd(p, i, l)?;
            }
        }
        Generator::SP(l) => {
            reflect_a1(&mut out.beta_p, &p.beta_p, l)?;
            for i in 0..m as i64 {
                out.phi[i as usize] = if l == 0 { sp0(p, i)? } else { sp1(p, i)? };
            }
        }
        Generator::Pi | Generator::PiInv => {
            let s = if g.normalized(n) == Generator::Pi { 1 } else { -1 };
            for i in 0..m as i64 {
                out.alpha[i as usize] = a(i + s);
                out.phi[i as usize] = f(i + s);
            }
            out.beta = vec![p.b(1).clone(), p.b(0).clone()];
        }
        Generator::PiP => {
            for i in 0..m as i64 {
                out.alpha[i as usize] = a(i + 1);
                out.phi[i as usize] = a(i + 1).div(&f(i + 1))?;
            }
            out.beta_p = vec![p.bp(1).clone(), p.bp(0).clone()];
        }
        Generator::PiPInv => {
            for i in 0..m as i64 {
                out.alpha[i as usize] = a(i - 1);
                out.phi[i as usize] = a(i - 1).div(&f(i - 1))?;
            }
            out.beta_p = vec![p.bp(1).clone(), p.bp(0).clone()];
        }
        Generator::Rho => {
            for i in 0..m as i64 {
                out.alpha[i as usize] = a(m as i64 - i);
            }
            for i in 0..=n as i64 {
                let e = 2 * n as i64 + 2 - 2 * i;
                out.phi[2 * i as usize] = a(e).div(&f(e))?;
                out.phi[2 * i as usize + 1] = f(2 * n as i64 + 1 - 2 * i);
            }
            out.beta = vec![p.bp(1).clone(), p.bp(0).clone()];
            out.beta_p = vec![p.b(1).clone(), p.b(0).clone()];
        }
    }
    Ok(out)
}

/// `β_k ↦ β_k β_l^{-b_{l,k}}` with the `A^{(1)}_1` Cartan matrix.
fn reflect_a1<F: Field>(out: &mut [F], b: &[F], l: usize) -> Result<()> {
    for k in 0..2 {
        out[k] = b[k].clone() * b[l].powi(-cartan(l as i64, k as i64, 2))?;
    }
    Ok(())
}

/// `s_l(φ_{2i})`.
fn s0_even<F: Field>(p: &ParamState<F>, i: i64, l: usize) -> Result<F> {
    let n = p.n();
    let a = |i: i64| p.a(i).clone();
    let f = |i: i64| p.f(i).clone();
    let one = F::one;
    if l == 0 {
        let num = nested_sum(n + 1, |k| Ok(f(2 * i + 2 * k) * a(2 * i + 2 * k + 1).div(&f(2 * i + 2 * k + 1))?), |j| {
            Ok(one() + f(2 * i + 2 * j))
        })?;
        let den = nested_sum(n + 1, |k| Ok(f(2 * i + 2 * k + 2) * a(2 * i + 2 * k + 3).div(&f(2 * i + 2 * k + 3))?), |j| {
            Ok(one() + f(2 * i + 2 * j + 2))
        })?;
        Ok(f(2 * i + 1).div(&a(2 * i + 1))? * num.div(&den)?)
    } else {
        let num = nested_sum(n + 1, |k| Ok(a(2 * i + 2 * k + 2).div(&f(2 * i + 2 * k + 2))? * f(2 * i + 2 * k + 3)), |j| {
            Ok(one() + a(2 * i + 2 * j + 2).div(&f(2 * i + 2 * j + 2))?)
        })?;
        let den = nested_sum(n + 1, |k| Ok(a(2 * i + 2 * k).div(&f(2 * i + 2 * k))? * f(2 * i + 2 * k + 1)), |j| {
            Ok(one() + a(2 * i + 2 * j).div(&f(2 * i + 2 * j))?)
        })?;
        Ok(a(2 * i) * f(2 * i + 1) * num.div(&den)?)
    }
}

/// `s_l(φ_{2i+1})`.
fn s0_odd<F: Field>(p: &ParamState<F>, i: i64, l: usize) -> Result<F> {
    let n = p.n();
    let a = |i: i64| p.a(i).clone();
    let f = |i: i64| p.f(i).clone();
    let one = F::one;
    if l == 0 {
        let num = nested_sum(n + 1, |k| Ok(a(2 * i + 2 * k + 3).div(&f(2 * i + 2 * k + 3))? * f(2 * i + 2 * k + 4)), |j| {
            Ok(one() + a(2 * i + 2 * j + 3).div(&f(2 * i + 2 * j + 3))?)
        })?;
        let den = nested_sum(n + 1, |k| Ok(a(2 * i + 2 * k + 1).div(&f(2 * i + 2 * k + 1))? * f(2 * i + 2 * k + 2)), |j| {
            Ok(one() + a(2 * i + 2 * j + 1).div(&f(2 * i + 2 * j + 1))?)
        })?;
        Ok(a(2 * i + 1) * f(2 * i + 2) * num.div(&den)?)
    } else {
        let num = nested_sum(n + 1, |k| Ok(f(2 * i + 2 * k + 1) * a(2 * i + 2 * k + 2).div(&f(2 * i + 2 * k + 2))?), |j| {
            Ok(one() + f(2 * i + 2 * j + 1))
        })?;
        let den = nested_sum(n + 1, |k| Ok(f(2 * i + 2 * k + 3) * a(2 * i + 2 * k + 4).div(&f(2 * i + 2 * k + 4))?), |j| {
            Ok(one() + f(2 * i + 2 * j + 3))
        })?;
        Ok(f(2 * i + 2).div(&a(2 * i + 2))? * num.div(&den)?)
    }
}

/// `s'_0(φ_i)`.
fn sp0<F: Field>(p: &ParamState<F>, i: i64) -> Result<F> {
    let m = 2 * p.n() + 2;
    let f = |i: i64| p.f(i).clone();
    let num = nested_sum(m, |k| f(i + k + 2).inv(), |_| Ok(F::one()))?;
    let den = nested_sum(m, |k| f(i + k).inv(), |_| Ok(F::one()))?;
    f(i + 1).inv()?.div(&den).map(|x| x * num)
}

/// `s'_1(φ_i)`.
fn sp1<F: Field>(p: &ParamState<F>, i: i64) -> Result<F> {
    let m = 2 * p.n() + 2;
    let a = |i: i64| p.a(i).clone();
    let f = |i: i64| p.f(i).clone();
    let num = nested_sum(m, |k| f(i + k).div(&a(i + k)), |_| Ok(F::one()))?;
    let den = nested_sum(m, |k| f(i + k + 2).div(&a(i + k + 2)), |_| Ok(F::one()))?;
    let lead = a(i).div(&f(i + 1).div(&a(i + 1))?)?;
    Ok(lead * num.div(&den)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Rat;

    fn r(p: i64, q: i64) -> Rat {
        Rat::new(p, q).unwrap()
    }

    fn state(n: usize) -> ParamState<Rat> {
        let m = 2 * n as i64 + 2;
        let alpha = (0..m).map(|i| r(i + 2, i + 5)).collect();
        let phi = (0..m).map(|i| r(3 * i + 1, i + 2)).collect();
        ParamState::from_alpha_phi(alpha, phi).unwrap()
    }

    #[test]
    fn cartan_entries() {
        assert_eq!(cartan(0, 3, 4), -1);
        assert_eq!(cartan(0, 2, 4), 0);
        assert_eq!(cartan(1, 1, 4), 2);
        assert_eq!(cartan(0, 1, 2), -2);
    }

    #[test]
    fn r0_worked_example() {
        let p = state(1);
        let o = act_closed_form(Generator::R(0), &p).unwrap();
        let (a0, a1, f0, f1) = (&p.alpha[0], &p.alpha[1], &p.phi[0], &p.phi[1]);
        assert_eq!(o.alpha[0], a0.recip().unwrap());
        assert_eq!(o.alpha[1], a0 * a1);
        assert_eq!(o.phi[0], f0.checked_div(a0).unwrap());
        let expect = f1 * &(a0 * &(Rat::one() + f0)).checked_div(&(a0 + f0)).unwrap();
        assert_eq!(o.phi[1], expect);
        assert_eq!(o.phi[3], &p.phi[3] * &(a0 + f0).checked_div(&(Rat::one() + f0)).unwrap());
    }

    #[test]
    fn r_fixes_betas_and_s_fixes_alphas() {
        for n in 1..=3 {
            let p = state(n);
            for j in 0..2 * n + 2 {
                let o = act_closed_form(Generator::R(j), &p).unwrap();
                assert_eq!((o.beta.clone(), o.beta_p.clone()), (p.beta.clone(), p.beta_p.clone()));
            }
            for l in 0..2 {
                let o = act_closed_form(Generator::S(l), &p).unwrap();
                assert_eq!((o.alpha.clone(), o.beta_p.clone()), (p.alpha.clone(), p.beta_p.clone()));
                let o = act_closed_form(Generator::SP(l), &p).unwrap();
                assert_eq!((o.alpha.clone(), o.beta.clone()), (p.alpha.clone(), p.beta.clone()));
            }
        }
    }

    #[test]
    fn rho_on_phi() {
        let p = state(2);
        let o = act_closed_form(Generator::Rho, &p).unwrap();
        // φ_0 ↦ α_6/φ_6 = α_0/φ_0 for n = 2 (indices mod 6)
        assert_eq!(o.phi[0], p.alpha[0].checked_div(&p.phi[0]).unwrap());
        assert_eq!(o.phi[2], p.alpha[4].checked_div(&p.phi[4]).unwrap());
        assert_eq!(o.phi[1], p.phi[5]);
    }

    #[test]
    fn pi_inverse_pairs() {
        let p = state(2);
        for (g, h) in [(Generator::Pi, Generator::PiInv), (Generator::PiP, Generator::PiPInv)] {
            let there = act_closed_form(g, &p).unwrap();
            assert_eq!(act_closed_form(h, &there).unwrap(), p);
        }
    }
}
