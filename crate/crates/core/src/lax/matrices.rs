//! The `(2n+2) × (2n+2)` Lax matrix `M`, the gauge matrices `Γ_j`, `Π`,
//! and the gauge matrix of a word in the tilde transformations.
//!
//! Entries are Laurent polynomials in `u_z`, with `z = u_z^{n+1}`. The
//! fractional powers `q^{k/(n+1)}` and `t^{1/(n+1)}` are read off the roots
//! bound in the state.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::{Field, Rat};
use crate::painleve::{tilde_pi_squared, tilde_reflection, PainleveState, AB};

use super::laurent::{LaurentMatrix, LaurentPoly};

/// A generator of the tilde group acting on the Lax pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TildeGen {
    R(usize),
    PiSquared,
}

impl TildeGen {
    /// The transformed state.
    pub fn apply(self, st: &PainleveState<Rat>) -> Result<PainleveState<Rat>> {
        match self {
            TildeGen::R(j) => tilde_reflection(j, st),
            TildeGen::PiSquared => tilde_pi_squared(st),
        }
    }

    /// The gauge matrix `Γ_j` or `Π` at a state.
    pub fn gauge(self, st: &PainleveState<Rat>) -> Result<LaurentMatrix> {
        match self {
            TildeGen::R(j) => build_gamma(j, st),
            TildeGen::PiSquared => build_pi(st),
        }
    }
}

impl fmt::Display for TildeGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TildeGen::R(j) => write!(f, "r~_{j}"),
            TildeGen::PiSquared => write!(f, "pi~^2"),
        }
    }
}

fn c(v: Rat) -> LaurentPoly {
    LaurentPoly::constant(v)
}

/// `x` times `z^k = u_z^{k(n+1)}`.
fn zpow(v: Rat, k: i64, n: usize) -> LaurentPoly {
    LaurentPoly::monomial(v, k * (n as i64 + 1))
}

/// `M = M_0 + z M_1`, block bidiagonal with the corner block `z M_{n+1,1}`.
pub fn build_m(st: &PainleveState<Rat>) -> Result<LaurentMatrix> {
    let n = st.n();
    let mut m = LaurentMatrix::zeros(2 * n + 2);
    let h = &st.h;
    for i in 1..=n + 1 {
        let r = 2 * (i - 1);
        m.set(r, r, c(st.a(i).clone()));
        m.set(r, r + 1, c((st.t.clone() * &st.r_big(i, AB::B, AB::A, AB::A)?).div(h)?));
        m.set(r + 1, r + 1, c(st.b(i)));
        if i <= n {
            m.set(r, r + 2, c(-Rat::one()));
            m.set(r + 1, r + 2, c((st.f(i) * h).div(&st.t)?));
            m.set(r + 1, r + 3, c(-Rat::one()));
        }
    }
    let last = 2 * n;
    m.set(last, 0, zpow(-st.t.clone(), 1, n));
    m.set(last + 1, 0, zpow(h.clone(), 1, n));
    m.set(last + 1, 1, zpow(-Rat::one(), 1, n));
    Ok(m)
}

/// `Γ_j`, the gauge matrix of `r̃_j`: the identity plus one entry.
pub fn build_gamma(j: usize, st: &PainleveState<Rat>) -> Result<LaurentMatrix> {
    let n = st.n();
    if j > 2 * n + 1 {
        return Err(Error::IndexOutOfRange { index: j, size: 2 * n + 2 });
    }
    let h = &st.h;
    let mut g = LaurentMatrix::identity(2 * n + 2);
    // 0-based (row, col) and the entry
    let (row, col, entry) = if j == 0 {
        let v = (st.b(0) - st.a(1)).div(&(st.q.clone() * h))?;
        (0, 2 * n + 1, zpow(-v, -1, n))
    } else if j.is_multiple_of(2) {
        let k = j / 2;
        let v = ((st.b(k) - st.a(k + 1)) * &st.t).div(&(st.f(k) * h))?;
        (j, j - 1, c(-v))
    } else {
        let k = (j - 1) / 2;
        let r = st.r_big(k + 1, AB::B, AB::A, AB::A)?;
        let v = ((st.a(k + 1).clone() - &st.b(k + 1)) * h).div(&(st.t.clone() * &r))?;
        (j, j - 1, c(-v))
    };
    g.set(row, col, entry);
    Ok(g)
}

/// `Π`, the gauge matrix of `π̃²`, including its overall `z^{-1/(n+1)}`.
pub fn build_pi(st: &PainleveState<Rat>) -> Result<LaurentMatrix> {
    let n = st.n();
    let uq2 = st.q_root();
    let ut = &st.roots.u_t;
    let mut p = LaurentMatrix::zeros(2 * n + 2);
    for i in 1..=n {
        let qi = uq2.powi(i as i64 - 1)?;
        p.set(2 * i - 2, 2 * i, LaurentPoly::monomial(qi.clone(), -1));
        p.set(2 * i - 1, 2 * i + 1, LaurentPoly::monomial(qi * ut, -1));
    }
    let qn = uq2.powi(n as i64)?;
    p.set(2 * n, 0, LaurentPoly::monomial(qn.clone() * &st.t, n as i64));
    p.set(2 * n + 1, 1, LaurentPoly::monomial(qn * ut, n as i64));
    Ok(p)
}

/// The tilde word for `τ2`, leftmost letter first:
/// `r̃_{n+1} … r̃_{2n+1} r̃_0 … r̃_{n-1} r̃_{2n+1} r̃_0 … r̃_{2n-1} π̃²`.
pub fn tau2_tilde_word(n: usize) -> Vec<TildeGen> {
    let mut w: Vec<TildeGen> = (n + 1..=2 * n + 1).map(TildeGen::R).collect();
    w.extend((0..n).map(TildeGen::R));
    w.push(TildeGen::R(2 * n + 1));
    w.extend((0..2 * n).map(TildeGen::R));
    w.push(TildeGen::PiSquared);
    w
}

/// The image of a state under a word, rightmost letter applied first.
pub fn apply_word(word: &[TildeGen], st: &PainleveState<Rat>) -> Result<PainleveState<Rat>> {
    word.iter().rev().try_fold(st.clone(), |s, g| g.apply(&s))
}

/// The gauge matrix of a word `x_1 … x_L` acting on states rightmost
/// letter first: with `S_L = st` and `S_{k-1} = x_k(S_k)`,
/// `Γ = Γ_{x_1}(S_0) Γ_{x_2}(S_1) ⋯ Γ_{x_L}(S_{L-1})`.
///
/// Each factor is taken at the state its letter produces, which is the
/// reading under which `x(M) Γ_x = T_{q,z}^{-1}(Γ_x) M` holds for every
/// generator. Returns the matrix and the image state `S_0`.
pub fn gamma_of_word(word: &[TildeGen], st: &PainleveState<Rat>) -> Result<(LaurentMatrix, PainleveState<Rat>)> {
    let mut gamma = LaurentMatrix::identity(2 * st.n() + 2);
    let mut cur = st.clone();
    for g in word.iter().rev() {
        cur = g.apply(&cur)?;
        gamma = &g.gauge(&cur)? * &gamma;
    }
    Ok((gamma, cur))
}

/// `Γ` for `τ2`, checked against its block pattern: after removing the
/// overall `u_z^{-1}`, block `(i, i)` is upper triangular, block `(i, i+1)`
/// is lower triangular, the corner block `(n+1, 1)` is `z` times a lower
/// triangular matrix, and everything else vanishes.
pub fn build_gamma_tau2(st: &PainleveState<Rat>) -> Result<(LaurentMatrix, PainleveState<Rat>)> {
    let (gamma, image) = gamma_of_word(&tau2_tilde_word(st.n()), st)?;
    check_block_pattern(&gamma.shift(1), st.n())?;
    Ok((gamma, image))
}

fn check_block_pattern(g: &LaurentMatrix, n: usize) -> Result<()> {
    let d = 2 * n + 2;
    let z = n as i64 + 1;
    for row in 0..d {
        for col in 0..d {
            let e = g.get(row, col);
            if e.is_zero() {
                continue;
            }
            let (bi, bj) = (row / 2, col / 2);
            let (r, cc) = (row % 2, col % 2);
            let upper_diag = bi == bj && !(r == 1 && cc == 0);
            let lower_super = bj == bi + 1 && !(r == 0 && cc == 1);
            let allowed_degree = if upper_diag || lower_super {
                Some(0)
            } else if bi == n && bj == 0 && !(r == 0 && cc == 1) {
                Some(z)
            } else {
                None
            };
            let ok = allowed_degree.is_some_and(|k| e.min_deg() == Some(k) && e.max_deg() == Some(k));
            if !ok {
                return Err(Error::BlockPatternViolation { row: row + 1, col: col + 1 });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lax::lax_state;

    #[test]
    fn m_layout_for_n1() {
        let st = lax_state(1, 3).unwrap();
        let m = build_m(&st).unwrap();
        assert_eq!(m.dim(), 4);
        let z_entries: Vec<(usize, usize)> =
            (0..4).flat_map(|i| (0..4).map(move |j| (i, j))).filter(|&(i, j)| m.get(i, j).max_deg().is_some_and(|d| d > 0)).collect();
        assert_eq!(z_entries, vec![(2, 0), (3, 0), (3, 1)]);
        assert_eq!(m.degree_range(), Some((0, 2)));
    }

    #[test]
    fn gamma_shapes() {
        let st = lax_state(2, 1).unwrap();
        for j in 0..6 {
            let g = build_gamma(j, &st).unwrap();
            let off: Vec<(usize, usize)> =
                (0..6).flat_map(|i| (0..6).map(move |k| (i, k))).filter(|&(i, k)| i != k && !g.get(i, k).is_zero()).collect();
            assert_eq!(off.len(), 1, "Γ_{j}");
            if j == 0 {
                assert_eq!(off[0], (0, 5));
                assert_eq!(g.get(0, 5).min_deg(), Some(-3));
            } else {
                assert_eq!(off[0], (j, j - 1));
            }
        }
    }

    #[test]
    fn pi_has_2n_plus_2_entries() {
        for n in 1..=3 {
            let p = build_pi(&lax_state(n, 2).unwrap()).unwrap();
            let count = (0..2 * n + 2).flat_map(|i| (0..2 * n + 2).map(move |j| (i, j))).filter(|&(i, j)| !p.get(i, j).is_zero()).count();
            assert_eq!(count, 2 * n + 2);
        }
    }

    #[test]
    fn tau2_word_shape() {
        let w = tau2_tilde_word(1);
        let expect = [2, 3, 0, 3, 0, 1].map(TildeGen::R);
        assert_eq!(&w[..6], &expect);
        assert_eq!(w[6], TildeGen::PiSquared);
        assert_eq!(tau2_tilde_word(3).len(), 4 * 3 + 3);
    }
}
