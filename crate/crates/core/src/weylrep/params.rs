use crate::error::{Error, Result};
use crate::exactalg::{product, Field, Rat, Witness};
use crate::seed::YSeed;

/// Residue of `i` modulo `m` as an index.
pub fn md(i: i64, m: usize) -> usize {
    i.rem_euclid(m as i64) as usize
}

/// Multiplicative simple roots, dependent variables and null root of a seed.
///
/// `alpha` and `phi` have `2n + 2` entries indexed modulo `2n + 2`;
/// `beta` and `beta_p` have two entries indexed modulo 2.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamState<F> {
    pub alpha: Vec<F>,
    pub beta: Vec<F>,
    pub beta_p: Vec<F>,
    pub phi: Vec<F>,
    pub q: F,
}

impl<F: Field> ParamState<F> {
    /// Family parameter `n`.
    pub fn n(&self) -> usize {
        self.alpha.len() / 2 - 1
    }

    /// `α_i` with `i` taken modulo `2n + 2`.
    pub fn a(&self, i: i64) -> &F {
        &self.alpha[md(i, self.alpha.len())]
    }

    /// `φ_i` with `i` taken modulo `2n + 2`.
    pub fn f(&self, i: i64) -> &F {
        &self.phi[md(i, self.phi.len())]
    }

    /// `β_k` with `k` modulo 2.
    pub fn b(&self, k: i64) -> &F {
        &self.beta[md(k, 2)]
    }

    /// `β'_k` with `k` modulo 2.
    pub fn bp(&self, k: i64) -> &F {
        &self.beta_p[md(k, 2)]
    }

    /// State determined by `α` and `φ` alone; `β`, `β'` and `q` are derived
    /// from the product formulas.
    pub fn from_alpha_phi(alpha: Vec<F>, phi: Vec<F>) -> Result<ParamState<F>> {
        if alpha.len() != phi.len() || alpha.len() < 4 || !alpha.len().is_multiple_of(2) {
            return Err(Error::SizeMismatch(format!("{} alphas and {} phis", alpha.len(), phi.len())));
        }
        let half = alpha.len() / 2;
        let q = product(&alpha);
        let mut b0 = F::one();
        let mut bp0 = F::one();
        for i in 0..half {
            let (p0, p1) = (&phi[2 * i], &phi[2 * i + 1]);
            if p1.is_zero() {
                return Err(Error::ZeroPhi(2 * i + 1));
            }
            b0 = b0 * p0 * &alpha[2 * i + 1] * &p1.inv()?;
            bp0 = bp0 * p0 * p1;
        }
        let b1 = q.div(&b0)?;
        let bp1 = q.div(&bp0)?;
        Ok(ParamState { alpha, beta: vec![b0, b1], beta_p: vec![bp0, bp1], phi, q })
    }

    /// Flattened `(α, β, β', φ, q)` for comparisons and reports.
    pub fn flat(&self) -> Vec<F> {
        let mut v = self.alpha.clone();
        v.extend(self.beta.iter().cloned());
        v.extend(self.beta_p.iter().cloned());
        v.extend(self.phi.iter().cloned());
        v.push(self.q.clone());
        v
    }
}

impl Witness for ParamState<Rat> {
    fn witness(&self) -> serde_json::Value {
        serde_json::json!({
            "alpha": self.alpha.witness(),
            "beta": self.beta.witness(),
            "beta_p": self.beta_p.witness(),
            "phi": self.phi.witness(),
            "q": self.q.witness(),
        })
    }
}

/// Parameters of a seed on the generalized q-P_VI quiver.
pub fn params_from_y<F: Field>(s: &YSeed<F>) -> ParamState<F> {
    let n = s.quiver.n();
    let y = |i: usize| s.get(i).clone();
    let mut alpha = Vec::with_capacity(2 * n + 2);
    let mut phi = Vec::with_capacity(2 * n + 2);
    let (mut b0, mut b1, mut bp0, mut bp1) = (F::one(), F::one(), F::one(), F::one());
    for i in 0..=n {
        let (o1, o2) = (2 * i + 1, 2 * i + 2);
        let (e1, e2) = (2 * i + 2 * n + 3, 2 * i + 2 * n + 4);
        alpha.push(y(o1) * &y(o2));
        alpha.push(y(e1) * &y(e2));
        phi.push(y(o1));
        phi.push(y(e1));
        b0 = b0 * &y(o1) * &y(e2);
        b1 = b1 * &y(o2) * &y(e1);
        bp0 = bp0 * &y(o1) * &y(e1);
        bp1 = bp1 * &y(o2) * &y(e2);
    }
    ParamState { alpha, beta: vec![b0, b1], beta_p: vec![bp0, bp1], phi, q: s.q() }
}

/// Coefficients reconstructed from `α` and `φ`; inverse of [`params_from_y`].
pub fn y_from_params<F: Field>(p: &ParamState<F>) -> Result<YSeed<F>> {
    let n = p.n();
    let size = 4 * n + 4;
    let mut y = vec![F::one(); size];
    for i in 0..=n {
        let (f0, f1) = (&p.phi[2 * i], &p.phi[2 * i + 1]);
        if f0.is_zero() {
            return Err(Error::ZeroPhi(2 * i));
        }
        if f1.is_zero() {
            return Err(Error::ZeroPhi(2 * i + 1));
        }
        y[2 * i] = f0.clone();
        y[2 * i + 1] = p.alpha[2 * i].div(f0)?;
        y[2 * i + 2 * n + 2] = f1.clone();
        y[2 * i + 2 * n + 3] = p.alpha[2 * i + 1].div(f1)?;
    }
    YSeed::gen_qpvi(n, y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Rat {
        Rat::new(p, q).unwrap()
    }

    #[test]
    fn all_ones() {
        let s = YSeed::gen_qpvi(2, vec![Rat::one(); 12]).unwrap();
        let p = params_from_y(&s);
        assert!(p.flat().iter().all(|v| v.is_one()));
        assert_eq!(y_from_params(&p).unwrap(), s);
    }

    #[test]
    fn direct_substitution() {
        let mut y = vec![Rat::one(); 8];
        y[0] = r(2, 1);
        y[1] = r(3, 1);
        let p = params_from_y(&YSeed::gen_qpvi(1, y.clone()).unwrap());
        assert_eq!(p.alpha[0], r(6, 1));
        assert_eq!(p.phi[0], r(2, 1));
        assert_eq!(y_from_params(&p).unwrap().y, y);
    }

    #[test]
    fn product_relations() {
        for n in 1..=3 {
            let y: Vec<Rat> = (0..4 * n as i64 + 4).map(|i| r(i + 2, 2 * i + 3)).collect();
            let p = params_from_y(&YSeed::gen_qpvi(n, y).unwrap());
            assert_eq!(product(&p.alpha), p.q);
            assert_eq!(p.beta[0].clone() * &p.beta[1], p.q);
            assert_eq!(p.beta_p[0].clone() * &p.beta_p[1], p.q);
            let again = ParamState::from_alpha_phi(p.alpha.clone(), p.phi.clone()).unwrap();
            assert_eq!(again, p);
        }
    }

    #[test]
    fn zero_phi_rejected() {
        let mut p = params_from_y(&YSeed::gen_qpvi(1, vec![Rat::one(); 8]).unwrap());
        p.phi[1] = Rat::zero();
        assert_eq!(y_from_params(&p), Err(Error::ZeroPhi(1)));
    }
}
