//! Exponent tables of the q-shifts on `(α, β, β')`.

use super::names::{TBase, TranslationName};
use crate::error::Result;
use crate::exactalg::Field;
use crate::weylrep::{md, ParamState};

/// Powers of `q` multiplying each `α_i`, `β_k`, `β'_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shift {
    pub alpha: Vec<i64>,
    pub beta: [i64; 2],
    pub beta_p: [i64; 2],
}

impl Shift {
    pub fn zero(n: usize) -> Shift {
        Shift { alpha: vec![0; 2 * n + 2], beta: [0; 2], beta_p: [0; 2] }
    }

    /// Exponents of a composite; q-shifts compose additively.
    pub fn add(&self, other: &Shift) -> Shift {
        let plus = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>();
        let b = plus(&self.beta, &other.beta);
        let bp = plus(&self.beta_p, &other.beta_p);
        Shift { alpha: plus(&self.alpha, &other.alpha), beta: [b[0], b[1]], beta_p: [bp[0], bp[1]] }
    }

    pub fn scale(&self, e: i64) -> Shift {
        let s = |a: &[i64]| a.iter().map(|x| x * e).collect::<Vec<_>>();
        let (b, bp) = (s(&self.beta), s(&self.beta_p));
        Shift { alpha: s(&self.alpha), beta: [b[0], b[1]], beta_p: [bp[0], bp[1]] }
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.iter().chain(&self.beta).chain(&self.beta_p).all(|e| *e == 0)
    }

    /// Shifted `(α, β, β')` as one flat vector.
    pub fn apply<F: Field>(&self, p: &ParamState<F>) -> Result<Vec<F>> {
        let mut out = Vec::with_capacity(self.alpha.len() + 4);
        let pairs = p.alpha.iter().zip(&self.alpha).chain(p.beta.iter().zip(&self.beta)).chain(p.beta_p.iter().zip(&self.beta_p));
        for (x, e) in pairs {
            out.push(x.clone() * &p.q.powi(*e)?);
        }
        Ok(out)
    }
}

/// `(α, β, β')` of a state as one flat vector.
pub fn roots<F: Field>(p: &ParamState<F>) -> Vec<F> {
    p.alpha.iter().chain(&p.beta).chain(&p.beta_p).cloned().collect()
}

fn delta(i: usize, j: i64, m: usize) -> i64 {
    (i == md(j, m)) as i64
}

/// Exponents of `𝒯_j^{e_j} … 𝒰_1^u 𝒱^v` given as `(j, e_j)` pairs.
pub fn product_shift(n: usize, cal_t: &[(usize, i64)], u: i64, v: i64) -> Shift {
    let mut s = Shift::zero(n);
    for &(j, e) in cal_t {
        s = s.add(&base_shift(TBase::CalT(j), n).expect("translation").scale(e));
    }
    s = s.add(&base_shift(TBase::CalU(1), n).expect("translation").scale(u));
    s.add(&base_shift(TBase::V, n).expect("translation").scale(v))
}

/// Exponents of `𝒯_j^{e_j}` in the factorization of `τ2`.
pub fn tau2_exponents(n: usize) -> Vec<(usize, i64)> {
    (1..=2 * n).map(|j| (j, if j <= n { j as i64 - 2 * n as i64 } else { j as i64 - 2 * n as i64 - 1 })).collect()
}

/// Exponents of `𝒯_j` in `T_1 T_3 … T_{2n+1}` (n odd) or its square (n even),
/// with the powers of `𝒰_1` and `𝒱`.
pub fn odd_t_product_exponents(n: usize) -> (Vec<(usize, i64)>, i64, i64) {
    let mult = if n % 2 == 1 { 1 } else { 2 };
    let cal_t = (1..=2 * n).map(|j| (j, -mult * (n as i64 + 1 - j.div_ceil(2) as i64))).collect();
    if n % 2 == 1 {
        (cal_t, -((n as i64 + 1) / 2), -(n as i64) - 1)
    } else {
        (cal_t, -(n as i64) - 1, -2 * n as i64 - 2)
    }
}

/// The q-shift of a translation, or `None` for the non-translations
/// (`T_i`, `U_k` alone and `τ3`).
pub fn base_shift(b: TBase, n: usize) -> Option<Shift> {
    let m = 2 * n + 2;
    let mut s = Shift::zero(n);
    match b {
        TBase::CalT(j) => {
            let j = j as i64;
            for i in 0..m {
                s.alpha[i] = -delta(i, j - 1, m) + 2 * delta(i, j, m) - delta(i, j + 1, m);
            }
        }
        TBase::CalU(l) => s.beta = [2 * dk(0, l) - 2 * dk(0, l + 1), 2 * dk(1, l) - 2 * dk(1, l + 1)],
        TBase::CalUP(l) => s.beta_p = [2 * dk(0, l) - 2 * dk(0, l + 1), 2 * dk(1, l) - 2 * dk(1, l + 1)],
        TBase::V | TBase::VP => {
            s.alpha[0] = 1;
            s.alpha[1] = -1;
            if b == TBase::V {
                s.beta = [1, -1];
            } else {
                s.beta_p = [1, -1];
            }
        }
        TBase::Tau1 => {
            s.beta = [1, -1];
            s.beta_p = [1, -1];
        }
        TBase::Tau2 => {
            for i in 0..m {
                s.alpha[i] = -delta(i, 0, m) + delta(i, n as i64, m) - delta(i, n as i64 + 1, m) + delta(i, m as i64 - 1, m);
            }
        }
        _ => return None,
    }
    Some(s)
}

fn dk(k: usize, l: usize) -> i64 {
    (k == l % 2) as i64
}

/// q-shift of a powered name, if it is a translation.
pub fn shift_of(t: TranslationName, n: usize) -> Option<Shift> {
    base_shift(t.base, n).map(|s| s.scale(t.power))
}

/// Power of `τ3` that is a pure q-shift: `m` for `n = 2m − 1`, `n + 1` for even `n`.
pub fn tau3_period(n: usize) -> usize {
    if n % 2 == 1 {
        n.div_ceil(2)
    } else {
        n + 1
    }
}

/// The q-shift of `τ3^{tau3_period(n)}`.
pub fn tau3_power_shift(n: usize) -> Shift {
    let (cal_t, u, v) = odd_t_product_exponents(n);
    product_shift(n, &cal_t, u, v)
}

/// `τ3` on `α` (and trivially on `β`, `β'`).
pub fn tau3_roots<F: Field>(p: &ParamState<F>) -> Result<Vec<F>> {
    let n = p.n() as i64;
    let mut alpha = p.alpha.clone();
    let len = alpha.len();
    for i in 0..=n {
        let a = |k: i64| p.a(2 * i + k).clone();
        alpha[md(2 * i, len)] = (a(1) * &a(2) * &a(3)).inv()?;
        alpha[md(2 * i + 1, len)] = a(1) * &a(2) * &a(3) * &a(4) * &a(5);
    }
    Ok(alpha.into_iter().chain(p.beta.iter().cloned()).chain(p.beta_p.iter().cloned()).collect())
}
