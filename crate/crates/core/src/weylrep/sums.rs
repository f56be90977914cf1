//! The auxiliary sums `S_i`, `S'_i` and the identities they satisfy.

use super::params::ParamState;
use crate::error::Result;
use crate::exactalg::Field;

fn ratio<F: Field>(x: &F, y: &F) -> Result<F> {
    x.div(y)
}

/// `S_i` (index modulo `2n + 2`).
pub fn s<F: Field>(p: &ParamState<F>, i: i64) -> Result<F> {
    let n = p.n() as i64;
    let a = |i: i64| p.a(i).clone();
    let f = |i: i64| p.f(i).clone();
    let mut acc = F::zero();
    let mut prefix = F::one();
    // both parities share the shape Σ_j Π_{k<j} u(k) · (1 + v(j))
    let even = i.rem_euclid(2) == 0;
    let base = if even { i } else { i - 1 };
    for j in 0..=n {
        let tail = if even { F::one() + ratio(&a(base + 2 * j), &f(base + 2 * j))? } else { F::one() + f(base + 2 * j + 1) };
        acc = acc + prefix.clone() * tail;
        let term = if even {
            ratio(&a(base + 2 * j), &f(base + 2 * j))? * f(base + 2 * j + 1)
        } else {
            f(base + 2 * j + 1) * ratio(&a(base + 2 * j + 2), &f(base + 2 * j + 2))?
        };
        prefix = prefix * term;
    }
    Ok(acc)
}

/// `S'_i` (index modulo `2n + 2`).
pub fn s_prime<F: Field>(p: &ParamState<F>, i: i64) -> Result<F> {
    let n = p.n() as i64;
    let r = |i: i64| ratio(p.f(i), p.a(i));
    let mut acc = F::zero();
    let mut prefix = F::one();
    for j in 0..=n {
        acc = acc + prefix.clone() * (F::one() + r(i + 2 * j)?);
        prefix = prefix * r(i + 2 * j)? * r(i + 2 * j + 1)?;
    }
    Ok(acc)
}

/// One sum identity as a pair of sides.
pub type Sides<F> = (F, F);

/// `S_{2i} + φ_{2i+1} S_{2i+2} = (1 + α_{2i}/φ_{2i}) S_{2i+1}`.
pub fn lemma_1<F: Field>(p: &ParamState<F>, i: i64) -> Result<Sides<F>> {
    let i2 = 2 * i;
    let lhs = s(p, i2)? + p.f(i2 + 1).clone() * s(p, i2 + 2)?;
    let rhs = (F::one() + ratio(p.a(i2), p.f(i2))?) * s(p, i2 + 1)?;
    Ok((lhs, rhs))
}

/// `S'_{2i} + (φ_{2i+1}/α_{2i+1}) S'_{2i+2} = (1 + φ_{2i}/α_{2i}) S'_{2i+1}`.
pub fn lemma_2<F: Field>(p: &ParamState<F>, i: i64) -> Result<Sides<F>> {
    let i2 = 2 * i;
    let lhs = s_prime(p, i2)? + ratio(p.f(i2 + 1), p.a(i2 + 1))? * s_prime(p, i2 + 2)?;
    let rhs = (F::one() + ratio(p.f(i2), p.a(i2))?) * s_prime(p, i2 + 1)?;
    Ok((lhs, rhs))
}

/// `S_{2i} − (α_{2i}/φ_{2i}) S_{2i+1} = 1 − q/β_0`.
pub fn lemma_3<F: Field>(p: &ParamState<F>, i: i64) -> Result<Sides<F>> {
    let i2 = 2 * i;
    let lhs = s(p, i2)? - ratio(p.a(i2), p.f(i2))? * s(p, i2 + 1)?;
    let rhs = F::one() - p.q.div(p.b(0))?;
    Ok((lhs, rhs))
}

/// `S'_{2i} − (φ_{2i}/α_{2i}) S'_{2i+1} = 1 − β'_0/q`.
pub fn lemma_4<F: Field>(p: &ParamState<F>, i: i64) -> Result<Sides<F>> {
    let i2 = 2 * i;
    let lhs = s_prime(p, i2)? - ratio(p.f(i2), p.a(i2))? * s_prime(p, i2 + 1)?;
    let rhs = F::one() - p.bp(0).div(&p.q)?;
    Ok((lhs, rhs))
}

/// `(α_{2i}/φ_{2i}) S'_{2i} − (φ_{2i+1}/α_{2i+1}) S'_{2i+2} = (1 − β'_0/q)(1 + α_{2i}/φ_{2i})`.
pub fn lemma_6<F: Field>(p: &ParamState<F>, i: i64) -> Result<Sides<F>> {
    let i2 = 2 * i;
    let af = ratio(p.a(i2), p.f(i2))?;
    let lhs = af.clone() * s_prime(p, i2)? - ratio(p.f(i2 + 1), p.a(i2 + 1))? * s_prime(p, i2 + 2)?;
    let rhs = (F::one() - p.bp(0).div(&p.q)?) * (F::one() + af);
    Ok((lhs, rhs))
}

/// `s'_1 s_1(φ_{2i})` from the product formula in `S` and `S'`.
pub fn s1p_s1_phi_even<F: Field>(p: &ParamState<F>, i: i64) -> Result<F> {
    let i2 = 2 * i;
    let lead = (p.a(i2).clone() * p.a(i2 + 1)).div(&ratio(p.f(i2), p.a(i2))?)?;
    let num = s(p, i2 + 2)? * s_prime(p, i2)?;
    let den = s(p, i2)? * s_prime(p, i2 + 2)?;
    Ok(lead * num.div(&den)?)
}

/// `s'_1 s_1(φ_{2i+1})`, first form (three-term numerator and denominator).
pub fn s1p_s1_phi_odd_2<F: Field>(p: &ParamState<F>, i: i64) -> Result<F> {
    let i2 = 2 * i;
    let block = |k: i64| -> Result<F> {
        let af = ratio(p.a(k), p.f(k))?;
        let fa = ratio(p.f(k), p.a(k))?;
        Ok(af * s_prime(p, k)? * s(p, k + 1)? + fa * s(p, k)? * s_prime(p, k + 1)? - s(p, k)? * s_prime(p, k)?)
    };
    Ok(ratio(p.a(i2 + 1), p.f(i2 + 1))? * block(i2)?.div(&block(i2 + 2)?)?)
}

/// `s'_1 s_1(φ_{2i+1})` in the factored form built from [`lemma_7`], as
/// displayed: leading factor `α_{2i+1}/φ_{2i+1}`.
pub fn s1p_s1_phi_odd_3<F: Field>(p: &ParamState<F>, i: i64) -> Result<F> {
    factored(p, i, 2 * i + 1)
}

/// The factored form with the leading factor `α_{2i+3}/φ_{2i+3}` that
/// dividing the [`lemma_7`] expressions for `i` and `i + 1` produces.
pub fn s1p_s1_phi_odd_3_derived<F: Field>(p: &ParamState<F>, i: i64) -> Result<F> {
    factored(p, i, 2 * i + 3)
}

fn factored<F: Field>(p: &ParamState<F>, i: i64, lead_index: i64) -> Result<F> {
    let i2 = 2 * i;
    let af = |k: i64| ratio(p.a(k), p.f(k));
    let lead = (F::one() + af(i2 + 2)?).div(&(F::one() + af(i2)?))? * af(lead_index)?;
    let block = |k: i64| -> Result<F> {
        Ok(s(p, k)? * s_prime(p, k + 2)? + af(k)? * p.a(k + 1) * s_prime(p, k)? * s(p, k + 2)?)
    };
    Ok(lead * block(i2)?.div(&block(i2 + 2)?)?)
}

/// `s_1(φ_{2i}) = α_{2i} φ_{2i+1} S_{2i+2}/S_{2i}` and its odd partner.
pub fn s1_phi<F: Field>(p: &ParamState<F>, i: i64) -> Result<Sides<F>> {
    let i2 = 2 * i;
    let even = p.a(i2).clone() * p.f(i2 + 1) * s(p, i2 + 2)?.div(&s(p, i2)?)?;
    let odd = ratio(p.f(i2 + 2), p.a(i2 + 2))? * s(p, i2 + 1)?.div(&s(p, i2 + 3)?)?;
    Ok((even, odd))
}

/// `s'_1(φ_{2i}) = (α_{2i}α_{2i+1}/φ_{2i+1}) S'_{2i}/S'_{2i+2}` and its odd partner.
pub fn s1p_phi<F: Field>(p: &ParamState<F>, i: i64) -> Result<Sides<F>> {
    let i2 = 2 * i;
    let even = (p.a(i2).clone() * p.a(i2 + 1)).div(p.f(i2 + 1))? * s_prime(p, i2)?.div(&s_prime(p, i2 + 2)?)?;
    let odd = (p.a(i2 + 1).clone() * p.a(i2 + 2)).div(p.f(i2 + 2))? * s_prime(p, i2 + 1)?.div(&s_prime(p, i2 + 3)?)?;
    Ok((even, odd))
}

/// `s'_1 s_1(φ_{2i+1})` with the `(β'_0/q − 1) S_{2i}` terms.
pub fn s1p_s1_phi_odd_5<F: Field>(p: &ParamState<F>, i: i64) -> Result<F> {
    let i2 = 2 * i;
    let c = p.bp(0).div(&p.q)? - F::one();
    let block = |k: i64| -> Result<F> {
        Ok(ratio(p.a(k), p.f(k))? * s_prime(p, k)? * s(p, k + 1)? + c.clone() * s(p, k)?)
    };
    Ok(ratio(p.a(i2 + 1), p.f(i2 + 1))? * block(i2)?.div(&block(i2 + 2)?)?)
}

/// The two-sided identity combining the first and sixth lemmas.
pub fn lemma_7<F: Field>(p: &ParamState<F>, i: i64) -> Result<Sides<F>> {
    let i2 = 2 * i;
    let af = ratio(p.a(i2), p.f(i2))?;
    let c = p.bp(0).div(&p.q)? - F::one();
    let lhs = (F::one() + af.clone()) * (af.clone() * s_prime(p, i2)? * s(p, i2 + 1)? + c * s(p, i2)?);
    let rhs = ratio(p.f(i2 + 1), p.a(i2 + 1))? * s(p, i2)? * s_prime(p, i2 + 2)?
        + af * p.f(i2 + 1) * s_prime(p, i2)? * s(p, i2 + 2)?;
    Ok((lhs, rhs))
}
