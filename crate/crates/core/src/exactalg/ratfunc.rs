use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Field, Poly, Rat};
use crate::error::{Error, Result};

/// Reduced quotient of polynomials.
///
/// Canonical form: numerator and denominator are coprime and the
/// denominator's lex-leading coefficient is 1. Two constructions of the same
/// function therefore compare equal structurally.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn var(v: u16) -> RatFunc {
        RatFunc::from_poly(Poly::var(v))
    }

    pub fn constant(c: Rat) -> RatFunc {
        RatFunc::from_poly(Poly::constant(c))
    }

    fn normalized(num: Poly, den: Poly) -> RatFunc {
        if num.is_zero() {
            return RatFunc { num, den: Poly::one() };
        }
        let (num, den) = if den.is_constant() || num.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_constant() {
                (num, den)
            } else {
                (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
            }
        };
        let lc = den.leading().expect("nonzero denominator").1.clone();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let s = lc.recip().expect("nonzero");
            RatFunc { num: num.scale(&s), den: den.scale(&s) }
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn as_constant(&self) -> Option<Rat> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        n.checked_div(&d).ok()
    }

    /// Evaluates at `point`, indexed by variable number.
    pub fn eval(&self, point: &[Rat]) -> Result<Rat> {
        let d = self.den.eval(point)?;
        if d.is_zero() {
            return Err(Error::PoleAtPoint);
        }
        self.num.eval(point)?.checked_div(&d)
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        RatFuncDisplay { f: self, names }
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        self + &rhs
    }
}

impl<'a> Add<&'a RatFunc> for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &'a RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::normalized(&self.num + &rhs.num, self.den);
        }
        let num = &self.num * &rhs.den + &rhs.num * &self.den;
        RatFunc::normalized(num, &self.den * &rhs.den)
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a> Sub<&'a RatFunc> for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &'a RatFunc) -> RatFunc {
        self + &(-rhs.clone())
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        self * &rhs
    }
}

impl<'a> Mul<&'a RatFunc> for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &'a RatFunc) -> RatFunc {
        RatFunc::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -self.num, den: self.den }
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::from_poly(Poly::zero())
    }
    fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }
    fn from_rat(r: &Rat) -> Self {
        RatFunc::constant(r.clone())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc::normalized(self.den.clone(), self.num.clone()))
    }
}

struct RatFuncDisplay<'a> {
    f: &'a RatFunc,
    names: &'a [String],
}

impl fmt::Display for RatFuncDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.f.den == Poly::one() {
            write!(f, "{}", self.f.num.display_with(self.names))
        } else {
            write!(f, "[{}] / [{}]", self.f.num.display_with(self.names), self.f.den.display_with(self.names))
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&[]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(v: u16) -> RatFunc {
        RatFunc::var(v)
    }

    fn k(v: i64) -> RatFunc {
        RatFunc::from_int(v)
    }

    #[test]
    fn ratio_cancels_to_one() {
        let a = y(0).div(&y(1)).unwrap();
        let b = y(1).div(&y(0)).unwrap();
        assert_eq!(a * b, RatFunc::one());
    }

    #[test]
    fn expanded_binomial_divides() {
        let one = k(1);
        let p = (one.clone() + &y(0)) * (one.clone() + &y(0)) - one - k(2) * y(0);
        assert_eq!(p.div(&y(0)).unwrap(), y(0));
    }

    #[test]
    fn construction_order_is_irrelevant() {
        // (y0 + y1)/(y0 - y1) built two ways
        let a = (y(0) + y(1)).div(&(y(0) - y(1))).unwrap();
        let b = {
            let r = y(1).div(&y(0)).unwrap();
            (k(1) + &r).div(&(k(1) - r)).unwrap()
        };
        assert_eq!(a, b);
        assert_eq!(format!("{a:?}"), format!("{b:?}"));
    }

    #[test]
    fn pole_detected() {
        let f = k(1).div(&(k(1) + y(0))).unwrap();
        assert_eq!(f.eval(&[Rat::from_int(-1)]), Err(Error::PoleAtPoint));
        let g = (k(1) + y(0) + y(0) * y(2)).div(&y(1)).unwrap();
        let pt = [Rat::from_int(1), Rat::from_int(2), Rat::from_int(5)];
        assert_eq!(g.eval(&pt).unwrap(), Rat::new(7, 2).unwrap());
    }

    #[test]
    fn zero_division() {
        assert_eq!(y(0).div(&RatFunc::zero()), Err(Error::DivisionByZero));
    }
}
