//! Laurent polynomials in one variable over the rationals, and square
//! matrices of them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde_json::json;

use crate::error::{Error, Result};
use crate::exactalg::{Field, Rat, Witness};

/// `Σ c_k x^k` with finitely many nonzero `c_k`, `k ∈ ℤ`.
///
/// Zero coefficients are never stored, so structural equality is equality
/// of Laurent polynomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rat>,
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly::default()
    }

    pub fn constant(c: Rat) -> LaurentPoly {
        LaurentPoly::monomial(c, 0)
    }

    /// `c x^k`.
    pub fn monomial(c: Rat, k: i64) -> LaurentPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        LaurentPoly { terms }
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms(it: impl IntoIterator<Item = (i64, Rat)>) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (k, c) in it {
            p.add_term(k, &c);
        }
        p
    }

    fn add_term(&mut self, k: i64, c: &Rat) {
        if c.is_zero() {
            return;
        }
        let sum = self.terms.get(&k).map_or_else(|| c.clone(), |old| old.clone() + c);
        if sum.is_zero() {
            self.terms.remove(&k);
        } else {
            self.terms.insert(k, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: i64) -> Rat {
        self.terms.get(&k).cloned().unwrap_or_else(Rat::zero)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    /// Lowest exponent, `None` for zero.
    pub fn min_deg(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Highest exponent, `None` for zero.
    pub fn max_deg(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn scale(&self, c: &Rat) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms().map(|(k, v)| (k, v.clone() * c)))
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i64) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// The substitution `x → s x`.
    pub fn subst_scale(&self, s: &Rat) -> Result<LaurentPoly> {
        let terms = self.terms().map(|(k, c)| Ok((k, c.clone() * &s.powi(k)?))).collect::<Result<Vec<_>>>()?;
        Ok(LaurentPoly::from_terms(terms))
    }

    /// Rewrites a polynomial in `x = y^d` as one in `x`, failing if some
    /// exponent is not a multiple of `d`.
    pub fn compress(&self, d: i64) -> Result<LaurentPoly> {
        let mut terms = BTreeMap::new();
        for (k, c) in self.terms() {
            if k % d != 0 {
                return Err(Error::SizeMismatch(format!("exponent {k} is not a multiple of {d}")));
            }
            terms.insert(k / d, c.clone());
        }
        Ok(LaurentPoly { terms })
    }

    /// The substitution `x → y^d`.
    pub fn expand(&self, d: i64) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(k, c)| (k * d, c.clone())).collect() }
    }

    pub fn eval(&self, x: &Rat) -> Result<Rat> {
        self.terms().try_fold(Rat::zero(), |acc, (k, c)| Ok(acc + &(c.clone() * &x.powi(k)?)))
    }

    /// `Π (x - r)` times `lead`.
    pub fn from_roots(lead: Rat, roots: &[Rat]) -> LaurentPoly {
        roots.iter().fold(LaurentPoly::constant(lead), |acc, r| {
            &acc * &LaurentPoly::from_terms([(1, Rat::one()), (0, -r.clone())])
        })
    }
}

impl<'a> Add for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, c);
        }
        out
    }
}

impl<'a> Sub for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self + &-rhs
    }
}

impl<'a> Mul for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (i, a) in self.terms() {
            for (j, b) in rhs.terms() {
                out.add_term(i + j, &(a.clone() * b));
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect() }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Witness for LaurentPoly {
    fn witness(&self) -> serde_json::Value {
        json!(self.terms().map(|(k, c)| json!([k, c.to_string()])).collect::<Vec<_>>())
    }
}

/// A square matrix of Laurent polynomials, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMatrix {
    dim: usize,
    entries: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn zeros(dim: usize) -> LaurentMatrix {
        LaurentMatrix { dim, entries: vec![LaurentPoly::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> LaurentMatrix {
        let mut m = LaurentMatrix::zeros(dim);
        for i in 0..dim {
            m.set(i, i, LaurentPoly::constant(Rat::one()));
        }
        m
    }

    /// A matrix of constants.
    pub fn from_rows(rows: &[Vec<Rat>]) -> LaurentMatrix {
        let dim = rows.len();
        let mut m = LaurentMatrix::zeros(dim);
        for (i, row) in rows.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                m.set(i, j, LaurentPoly::constant(c.clone()));
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry `(i, j)`, 0-based.
    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPoly) {
        self.entries[i * self.dim + j] = v;
    }

    fn map(&self, f: impl Fn(&LaurentPoly) -> Result<LaurentPoly>) -> Result<LaurentMatrix> {
        Ok(LaurentMatrix { dim: self.dim, entries: self.entries.iter().map(f).collect::<Result<_>>()? })
    }

    pub fn scale(&self, c: &Rat) -> LaurentMatrix {
        LaurentMatrix { dim: self.dim, entries: self.entries.iter().map(|e| e.scale(c)).collect() }
    }

    /// Multiplies every entry by `x^k`.
    pub fn shift(&self, k: i64) -> LaurentMatrix {
        LaurentMatrix { dim: self.dim, entries: self.entries.iter().map(|e| e.shift(k)).collect() }
    }

    /// The substitution `x → s x` in every entry.
    pub fn subst_scale(&self, s: &Rat) -> Result<LaurentMatrix> {
        self.map(|e| e.subst_scale(s))
    }

    /// See [`LaurentPoly::compress`].
    pub fn compress(&self, d: i64) -> Result<LaurentMatrix> {
        self.map(|e| e.compress(d))
    }

    /// The matrix coefficient of `x^k`.
    pub fn coeff(&self, k: i64) -> Vec<Vec<Rat>> {
        (0..self.dim).map(|i| (0..self.dim).map(|j| self.get(i, j).coeff(k)).collect()).collect()
    }

    /// Lowest and highest exponent over all entries, `None` for zero.
    pub fn degree_range(&self) -> Option<(i64, i64)> {
        let lo = self.entries.iter().filter_map(LaurentPoly::min_deg).min()?;
        let hi = self.entries.iter().filter_map(LaurentPoly::max_deg).max()?;
        Some((lo, hi))
    }

    pub fn eval(&self, x: &Rat) -> Result<Vec<Vec<Rat>>> {
        (0..self.dim).map(|i| (0..self.dim).map(|j| self.get(i, j).eval(x)).collect()).collect()
    }

    /// The `2 × 2` block with top-left corner `(2i, 2j)`.
    pub fn block(&self, i: usize, j: usize) -> LaurentMatrix {
        let mut b = LaurentMatrix::zeros(2);
        for r in 0..2 {
            for c in 0..2 {
                b.set(r, c, self.get(2 * i + r, 2 * j + c).clone());
            }
        }
        b
    }

    /// Determinant of a `2 × 2` matrix.
    pub fn det2(&self) -> Result<LaurentPoly> {
        if self.dim != 2 {
            return Err(Error::SizeMismatch(format!("det2 of a {0}x{0} matrix", self.dim)));
        }
        Ok(&(self.get(0, 0) * self.get(1, 1)) - &(self.get(0, 1) * self.get(1, 0)))
    }

    pub fn trace(&self) -> LaurentPoly {
        (0..self.dim).fold(LaurentPoly::zero(), |acc, i| &acc + self.get(i, i))
    }
}

impl<'a> Add for &'a LaurentMatrix {
    type Output = LaurentMatrix;
    fn add(self, rhs: &'a LaurentMatrix) -> LaurentMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        LaurentMatrix { dim: self.dim, entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect() }
    }
}

impl<'a> Sub for &'a LaurentMatrix {
    type Output = LaurentMatrix;
    fn sub(self, rhs: &'a LaurentMatrix) -> LaurentMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        LaurentMatrix { dim: self.dim, entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect() }
    }
}

impl<'a> Mul for &'a LaurentMatrix {
    type Output = LaurentMatrix;
    fn mul(self, rhs: &'a LaurentMatrix) -> LaurentMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let d = self.dim;
        let mut out = LaurentMatrix::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let e = out.get(i, j) + &(a * b);
                        out.set(i, j, e);
                    }
                }
            }
        }
        debug_assert!(out.spot_check_product(self, rhs), "Laurent product disagrees with evaluation");
        out
    }
}

impl LaurentMatrix {
    fn spot_check_product(&self, a: &LaurentMatrix, b: &LaurentMatrix) -> bool {
        let x = Rat::from_int(3);
        let (Ok(pa), Ok(pb), Ok(pc)) = (a.eval(&x), b.eval(&x), self.eval(&x)) else { return false };
        pc == mat_mul(&pa, &pb)
    }
}

impl fmt::Display for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Witness for LaurentMatrix {
    fn witness(&self) -> serde_json::Value {
        json!((0..self.dim).map(|i| (0..self.dim).map(|j| self.get(i, j).witness()).collect::<Vec<_>>()).collect::<Vec<_>>())
    }
}

/// Product of two dense rational matrices.
pub fn mat_mul(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let (r, m, c) = (a.len(), b.len(), b.first().map_or(0, Vec::len));
    (0..r).map(|i| (0..c).map(|j| (0..m).fold(Rat::zero(), |acc, k| acc + &(a[i][k].clone() * &b[k][j]))).collect()).collect()
}

/// Determinant of a dense rational matrix by Gaussian
/// elimination with row pivoting.
pub fn det(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = Rat::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else { return Rat::zero() };
        if p != col {
            a.swap(p, col);
            d = -d;
        }
        let piv = a[col][col].clone();
        d = d * &piv;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].checked_div(&piv).expect("nonzero pivot");
            for k in col..n {
                let v = a[col][k].clone() * &factor;
                a[r][k] = a[r][k].clone() - &v;
            }
        }
    }
    d
}

/// Inverse of a `2 × 2` rational matrix.
pub fn inv2(m: &[Vec<Rat>]) -> Result<Vec<Vec<Rat>>> {
    let d = m[0][0].clone() * &m[1][1] - &(m[0][1].clone() * &m[1][0]);
    let di = d.inv()?;
    Ok(vec![vec![m[1][1].clone() * &di, -(m[0][1].clone() * &di)], vec![-(m[1][0].clone() * &di), m[0][0].clone() * &di]])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: i64) -> Rat {
        Rat::from_int(v)
    }

    #[test]
    fn laurent_arithmetic() {
        let p = LaurentPoly::from_terms([(-1, r(2)), (1, r(1))]);
        let q = LaurentPoly::from_terms([(1, r(1)), (0, r(-1))]);
        let prod = &p * &q;
        assert_eq!(prod, LaurentPoly::from_terms([(0, r(2)), (-1, r(-2)), (2, r(1)), (1, r(-1))]));
        assert!((&p - &p).is_zero());
        assert_eq!(prod.eval(&r(2)).unwrap(), p.eval(&r(2)).unwrap() * &q.eval(&r(2)).unwrap());
    }

    #[test]
    fn substitution_and_compression() {
        let p = LaurentPoly::from_terms([(-2, r(1)), (4, r(5))]);
        assert_eq!(p.compress(2).unwrap().expand(2), p);
        assert!(p.compress(3).is_err());
        let s = p.subst_scale(&r(2)).unwrap();
        assert_eq!(s.coeff(-2), Rat::new(1, 4).unwrap());
        assert_eq!(s.coeff(4), r(80));
    }

    #[test]
    fn roots_polynomial() {
        let p = LaurentPoly::from_roots(r(3), &[r(1), r(2)]);
        assert_eq!(p, LaurentPoly::from_terms([(2, r(3)), (1, r(-9)), (0, r(6))]));
    }

    #[test]
    fn determinant_and_inverse() {
        let m = vec![vec![r(2), r(1), r(0)], vec![r(0), r(0), r(3)], vec![r(1), r(4), r(1)]];
        // 2(0 - 12) - 1(0 - 3) + 0 = -21
        assert_eq!(det(&m), r(-21));
        let a = vec![vec![r(1), r(2)], vec![r(3), r(4)]];
        assert_eq!(mat_mul(&a, &inv2(&a).unwrap()), vec![vec![r(1), r(0)], vec![r(0), r(1)]]);
    }

    #[test]
    fn matrix_product_matches_evaluation() {
        let mut a = LaurentMatrix::identity(2);
        a.set(0, 1, LaurentPoly::monomial(r(2), -1));
        let mut b = LaurentMatrix::identity(2);
        b.set(1, 0, LaurentPoly::monomial(r(-1), 3));
        let x = Rat::new(5, 7).unwrap();
        assert_eq!((&a * &b).eval(&x).unwrap(), mat_mul(&a.eval(&x).unwrap(), &b.eval(&x).unwrap()));
        assert_eq!((&a * &b).det2().unwrap(), (&a.det2().unwrap() * &b.det2().unwrap()));
    }
}
