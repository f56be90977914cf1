use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Rat;
use crate::error::{Error, Result};

/// Power product stored sparsely as `(variable, exponent)` pairs sorted by
/// variable, with every exponent positive.
///
/// Ordered lexicographically with variable 0 most significant, which is a
/// monomial order: leading terms multiply.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Monomial(Vec<(u16, u32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(v: u16, e: u32) -> Monomial {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(u16, u32)] {
        &self.0
    }

    pub fn degree_in(&self, v: u16) -> u32 {
        self.0.iter().find(|(w, _)| *w == v).map_or(0, |(_, e)| *e)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < v {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == v {
                let f = other.0[j].1;
                j += 1;
                match e.cmp(&f) {
                    Ordering::Less => return None,
                    Ordering::Equal => {}
                    Ordering::Greater => out.push((v, e - f)),
                }
            } else {
                out.push((v, e));
            }
        }
        (j == other.0.len()).then_some(Monomial(out))
    }

    fn without(&self, v: u16) -> Monomial {
        Monomial(self.0.iter().copied().filter(|(w, _)| *w != v).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let mut i = 0;
        loop {
            match (a.get(i), b.get(i)) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va != vb {
                        // the side owning the smaller variable has a positive
                        // exponent where the other has zero
                        return if va < vb { Ordering::Greater } else { Ordering::Less };
                    }
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                }
            }
            i += 1;
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rat>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn constant(c: Rat) -> Poly {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn one() -> Poly {
        Poly::constant(Rat::one())
    }

    pub fn var(v: u16) -> Poly {
        Poly::term(Rat::one(), Monomial::var(v, 1))
    }

    pub fn term(c: Rat, m: Monomial) -> Poly {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The constant coefficient if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Leading term under the lex order.
    pub fn leading(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Scales so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some((_, c)) => self.scale(&c.recip().expect("nonzero leading coefficient")),
        }
    }

    fn mul_term(&self, c: &Rat, m: &Monomial) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(k, x)| (k.mul(m), x * c)).collect(),
        }
    }

    fn add_assign_ref(&mut self, other: &Poly) {
        for (m, c) in &other.terms {
            add_term(&mut self.terms, m.clone(), c.clone());
        }
    }

    fn sub_assign_ref(&mut self, other: &Poly) {
        for (m, c) in &other.terms {
            add_term(&mut self.terms, m.clone(), -c);
        }
    }

    fn mul_ref(&self, other: &Poly) -> Poly {
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                add_term(&mut terms, ma.mul(mb), ca * cb);
            }
        }
        Poly { terms }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Variables occurring in the polynomial, ascending.
    pub fn vars(&self) -> Vec<u16> {
        let mut vs: Vec<u16> = self
            .terms
            .keys()
            .flat_map(|m| m.0.iter().map(|(v, _)| *v))
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn degree_in(&self, v: u16) -> u32 {
        self.terms.keys().map(|m| m.degree_in(v)).max().unwrap_or(0)
    }

    /// Coefficients as a univariate polynomial in `v`; entry `d` multiplies `v^d`.
    pub fn univariate(&self, v: u16) -> Vec<Poly> {
        let mut out = vec![Poly::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            let d = m.degree_in(v) as usize;
            out[d].terms.insert(m.without(v), c.clone());
        }
        out
    }

    fn coeff_in(&self, v: u16, d: u32) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            if m.degree_in(v) == d {
                out.terms.insert(m.without(v), c.clone());
            }
        }
        out
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (dm, dc) = d.leading()?;
        if let Some(c) = d.as_constant() {
            return Some(self.scale(&c.recip().ok()?));
        }
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut r = self.clone();
        let mut q = Poly::zero();
        while let Some((rm, rc)) = r.leading() {
            let m = rm.div(&dm)?;
            let c = rc.checked_div(&dc).ok()?;
            r.sub_assign_ref(&d.mul_term(&c, &m));
            add_term(&mut q.terms, m, c);
        }
        Some(q)
    }

    /// Evaluates at `point`, indexed by variable number.
    pub fn eval(&self, point: &[Rat]) -> Result<Rat> {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in &m.0 {
                let x = point.get(v as usize).ok_or_else(|| Error::UnboundVariable(format!("#{v}")))?;
                t = t * x.pow(e as i64)?;
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Greatest common divisor, monic under the lex order (gcd(0, 0) = 0).
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return Poly::one();
        }
        let (va, vb) = (self.vars(), other.vars());
        let Some(&v) = va.iter().find(|x| vb.contains(x)) else {
            return Poly::one();
        };
        let ca = self.content_in(v);
        let cb = other.content_in(v);
        let g = ca.gcd(&cb);
        let pa = self.div_exact(&ca).expect("content divides");
        let pb = other.div_exact(&cb).expect("content divides");
        let h = primitive_prs(pa, pb, v);
        g.mul_ref(&h).monic()
    }

    /// Gcd of the coefficients when viewed as univariate in `v`.
    fn content_in(&self, v: u16) -> Poly {
        let mut g = Poly::zero();
        for c in self.univariate(v) {
            if c.is_zero() {
                continue;
            }
            g = g.gcd(&c);
            if g.is_constant() {
                return Poly::one();
            }
        }
        g
    }

    fn primitive_part_in(&self, v: u16) -> Poly {
        let c = self.content_in(v);
        self.div_exact(&c).expect("content divides")
    }

    /// Renders with the given variable names.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        PolyDisplay { p: self, names }
    }
}

/// Gcd of two polynomials primitive in `v`, both of positive degree in `v`.
fn primitive_prs(a: Poly, b: Poly, v: u16) -> Poly {
    let (mut a, mut b) = if a.degree_in(v) >= b.degree_in(v) { (a, b) } else { (b, a) };
    loop {
        if b.degree_in(v) == 0 {
            // b is a nonzero polynomial free of v and primitive in v
            return if b.is_zero() { a.primitive_part_in(v).monic() } else { Poly::one() };
        }
        let r = pseudo_rem(&a, &b, v);
        if r.is_zero() {
            return b.primitive_part_in(v).monic();
        }
        a = b;
        b = r.primitive_part_in(v);
    }
}

/// Some multiple `c·a` reduced modulo `b` in `v`, with `c` a power of lc_v(b).
fn pseudo_rem(a: &Poly, b: &Poly, v: u16) -> Poly {
    let db = b.degree_in(v);
    let lb = b.coeff_in(v, db);
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lr = r.coeff_in(v, dr);
        let shift = Poly::term(Rat::one(), Monomial::var(v, dr - db));
        let mut next = r.mul_ref(&lb);
        next.sub_assign_ref(&lr.mul_ref(&shift).mul_ref(b));
        r = next;
    }
    r
}

fn add_term(terms: &mut BTreeMap<Monomial, Rat>, m: Monomial, c: Rat) {
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get().clone() + c;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self.add_assign_ref(&rhs);
        self
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: Poly) -> Poly {
        self.sub_assign_ref(&rhs);
        self
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        let mut out = self.clone();
        out.sub_assign_ref(rhs);
        out
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        self.mul_ref(&rhs)
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        self.mul_ref(rhs)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

struct PolyDisplay<'a> {
    p: &'a Poly,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.p.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for &(v, e) in &m.0 {
                let name = self.names.get(v as usize).map_or_else(|| format!("x{v}"), Clone::clone);
                if e == 1 {
                    write!(f, "*{name}")?;
                } else {
                    write!(f, "*{name}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&[]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(v: u16) -> Poly {
        Poly::var(v)
    }

    fn c(k: i64) -> Poly {
        Poly::constant(Rat::from_int(k))
    }

    #[test]
    fn lex_order_is_multiplicative() {
        let a = Monomial::var(1, 1);
        let b = Monomial::var(0, 1);
        assert!(b > a, "x0 dominates x1");
        let m = Monomial::var(1, 3);
        assert!(b.mul(&m) > a.mul(&m));
        assert!(Monomial::one() < a);
    }

    #[test]
    fn binomial_square_expands() {
        // (1 + x)^2 - 1 - 2x = x^2, compared against a hand-built x^2
        let p = (c(1) + x(0)).pow(2) - c(1) - c(2) * x(0);
        assert_eq!(p, x(0) * x(0));
    }

    #[test]
    fn exact_division() {
        let a = c(1) + x(0);
        let b = x(1) - c(3) * x(2);
        let p = a.clone() * b.clone();
        assert_eq!(p.div_exact(&a), Some(b.clone()));
        assert_eq!(p.div_exact(&b), Some(a));
        assert_eq!(x(0).div_exact(&x(1)), None);
    }

    #[test]
    fn gcd_multivariate() {
        let g = x(0) * x(1) + c(2) * x(2);
        let a = g.clone() * (x(0) + c(1)) * (x(1) - x(2));
        let b = g.clone() * (x(0) - x(2)).pow(2);
        assert_eq!(a.gcd(&b), g.monic());
        assert_eq!(x(0).gcd(&x(1)), Poly::one());
        assert_eq!((c(6) * x(0)).gcd(&(c(4) * x(0) * x(1))), x(0));
    }

    #[test]
    fn eval_matches_hand_substitution() {
        let p = (c(1) + x(0) + x(0) * x(2)) * x(1);
        let pt = [Rat::from_int(1), Rat::from_int(2), Rat::from_int(5)];
        assert_eq!(p.eval(&pt).unwrap(), Rat::from_int(14));
    }
}
