use std::ops::{Add, Mul, Neg, Sub};

use super::{Field, Rat, RatFunc};
use crate::error::Result;

/// Either a concrete rational or a symbolic rational function.
///
/// Mixed arithmetic promotes to symbolic; a symbolic result is never demoted,
/// so the variant records which mode a computation ran in.
#[derive(Clone, Debug)]
pub enum Value {
    Numeric(Rat),
    Symbolic(RatFunc),
}

impl Value {
    fn to_func(&self) -> RatFunc {
        match self {
            Value::Numeric(r) => RatFunc::constant(r.clone()),
            Value::Symbolic(f) => f.clone(),
        }
    }

    /// The rational value, if numeric or a symbolic constant.
    pub fn as_rat(&self) -> Option<Rat> {
        match self {
            Value::Numeric(r) => Some(r.clone()),
            Value::Symbolic(f) => f.as_constant(),
        }
    }

    /// Substitutes `point` into a symbolic value; numeric values pass through.
    pub fn eval(&self, point: &[Rat]) -> Result<Rat> {
        match self {
            Value::Numeric(r) => Ok(r.clone()),
            Value::Symbolic(f) => f.eval(point),
        }
    }
}

impl PartialEq for Value {
    fn eq(&self, other: &Value) -> bool {
        match (self, other) {
            (Value::Numeric(a), Value::Numeric(b)) => a == b,
            _ => self.to_func() == other.to_func(),
        }
    }
}

impl From<Rat> for Value {
    fn from(r: Rat) -> Value {
        Value::Numeric(r)
    }
}

impl From<RatFunc> for Value {
    fn from(f: RatFunc) -> Value {
        Value::Symbolic(f)
    }
}

macro_rules! value_binop {
    ($tr:ident, $m:ident) => {
        impl<'a> $tr<&'a Value> for Value {
            type Output = Value;
            fn $m(self, rhs: &'a Value) -> Value {
                match (self, rhs) {
                    (Value::Numeric(a), Value::Numeric(b)) => Value::Numeric(a.$m(b)),
                    (a, b) => Value::Symbolic(a.to_func().$m(b.to_func())),
                }
            }
        }
        impl $tr for Value {
            type Output = Value;
            fn $m(self, rhs: Value) -> Value {
                self.$m(&rhs)
            }
        }
    };
}

value_binop!(Add, add);
value_binop!(Sub, sub);
value_binop!(Mul, mul);

impl Neg for Value {
    type Output = Value;
    fn neg(self) -> Value {
        match self {
            Value::Numeric(a) => Value::Numeric(-a),
            Value::Symbolic(f) => Value::Symbolic(-f),
        }
    }
}

impl Field for Value {
    fn zero() -> Self {
        Value::Numeric(Rat::zero())
    }
    fn one() -> Self {
        Value::Numeric(Rat::one())
    }
    fn from_rat(r: &Rat) -> Self {
        Value::Numeric(r.clone())
    }
    fn is_zero(&self) -> bool {
        match self {
            Value::Numeric(r) => r.is_zero(),
            Value::Symbolic(f) => f.is_zero(),
        }
    }
    fn inv(&self) -> Result<Self> {
        Ok(match self {
            Value::Numeric(r) => Value::Numeric(r.recip()?),
            Value::Symbolic(f) => Value::Symbolic(f.inv()?),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn mixed_arithmetic_promotes() {
        let a = Value::Numeric(Rat::new(1, 3).unwrap());
        let b = Value::Symbolic(RatFunc::var(0));
        let s = a.clone() + &b;
        assert!(matches!(s, Value::Symbolic(_)));
        assert_eq!(s.eval(&[Rat::new(1, 6).unwrap()]).unwrap(), Rat::new(1, 2).unwrap());
        assert_eq!(a.clone() + &a, Value::Numeric(Rat::new(2, 3).unwrap()));
    }

    #[test]
    fn symbolic_constant_equals_numeric() {
        let x = Value::Symbolic(RatFunc::var(0));
        let one = x.div(&x).unwrap();
        assert_eq!(one, Value::one());
        assert_eq!(one.as_rat(), Some(Rat::one()));
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(Value::one().div(&Value::zero()), Err(Error::DivisionByZero));
    }
}
