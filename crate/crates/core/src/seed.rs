//! Coefficient dynamics: y-seeds, their mutation and relabeling, and words
//! of such steps.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{Field, Rat};
use crate::quiver::{size_for, Quiver, VertexPerm};
use crate::weylrep::{generator_word, Generator};

/// A quiver together with one coefficient per vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct YSeed<F> {
    pub quiver: Quiver,
    pub y: Vec<F>,
}

impl<F: Field> YSeed<F> {
    pub fn new(quiver: Quiver, y: Vec<F>) -> Result<YSeed<F>> {
        if y.len() != quiver.size() {
            return Err(Error::SizeMismatch(format!(
                "{} coefficients for a quiver on {} vertices",
                y.len(),
                quiver.size()
            )));
        }
        Ok(YSeed { quiver, y })
    }

    /// Seed on the generalized q-P_VI quiver for family parameter `n`.
    pub fn gen_qpvi(n: usize, y: Vec<F>) -> Result<YSeed<F>> {
        YSeed::new(Quiver::gen_qpvi(n), y)
    }

    /// Coefficient `y_i`, 1-based.
    pub fn get(&self, i: usize) -> &F {
        &self.y[i - 1]
    }

    /// Mutation at vertex `k`.
    pub fn mutate(&self, k: usize) -> Result<YSeed<F>> {
        self.quiver.check_vertex(k)?;
        let yk = &self.y[k - 1];
        if yk.is_zero() {
            return Err(Error::PoleAtPoint);
        }
        let yk_inv = yk.inv()?;
        let plus = F::one() + yk;
        let plus_inv = F::one() + &yk_inv;
        if plus.is_zero() {
            return Err(Error::PoleAtPoint);
        }
        let mut y = self.y.clone();
        for (i, yi) in y.iter_mut().enumerate() {
            if i == k - 1 {
                *yi = yk_inv.clone();
                continue;
            }
            let l = self.quiver.get(k, i + 1);
            if l > 0 {
                *yi = yi.clone() * plus_inv.powi(-l)?;
            } else if l < 0 {
                *yi = yi.clone() * plus.powi(-l)?;
            }
        }
        Ok(YSeed { quiver: self.quiver.mutate(k)?, y })
    }

    /// Relabeling with `y'_{p(i)} = y_i`.
    pub fn permute(&self, p: &VertexPerm) -> Result<YSeed<F>> {
        let quiver = self.quiver.permute(p)?;
        let mut y = self.y.clone();
        for (i, yi) in self.y.iter().enumerate() {
            y[p.image(i + 1) - 1] = yi.clone();
        }
        Ok(YSeed { quiver, y })
    }

    pub fn apply_elem(&self, e: &Elem) -> Result<YSeed<F>> {
        match e {
            Elem::Mu(k) => self.mutate(*k),
            Elem::Perm(p) => self.permute(p),
        }
    }

    /// Applies `word`, rightmost token first.
    pub fn apply_word(&self, word: &GroupWord) -> Result<YSeed<F>> {
        let elems = word.expand(self.quiver.n())?;
        let mut s = self.clone();
        for e in elems.iter().rev() {
            s = s.apply_elem(e)?;
        }
        Ok(s)
    }

    /// The conserved product of all coefficients.
    pub fn q(&self) -> F {
        crate::exactalg::product(&self.y)
    }
}

/// Seed exchange format: `{"n": .., "y": ["p/q", ..], "lambda": [[..]]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeedJson {
    pub n: usize,
    pub y: Vec<Rat>,
    pub lambda: Vec<Vec<i64>>,
}

impl From<&YSeed<Rat>> for SeedJson {
    fn from(s: &YSeed<Rat>) -> SeedJson {
        SeedJson { n: s.quiver.n(), y: s.y.clone(), lambda: s.quiver.matrix().to_vec() }
    }
}

impl TryFrom<SeedJson> for YSeed<Rat> {
    type Error = Error;
    fn try_from(j: SeedJson) -> Result<YSeed<Rat>> {
        YSeed::new(Quiver::from_matrix(j.n, j.lambda)?, j.y)
    }
}

/// Elementary step: a mutation or a vertex relabeling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Elem {
    Mu(usize),
    Perm(VertexPerm),
}

impl Elem {
    pub fn inverse(&self) -> Elem {
        match self {
            Elem::Mu(k) => Elem::Mu(*k),
            Elem::Perm(p) => Elem::Perm(p.inverse()),
        }
    }
}

/// One token of a word: a mutation, a relabeling, or a named generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Token {
    Mu(usize),
    Perm(VertexPerm),
    Gen(Generator),
}

/// Word of tokens, written the usual way: the rightmost token acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupWord {
    pub tokens: Vec<Token>,
}

impl GroupWord {
    pub fn new(tokens: Vec<Token>) -> GroupWord {
        GroupWord { tokens }
    }

    pub fn empty() -> GroupWord {
        GroupWord::default()
    }

    pub fn gen(g: Generator) -> GroupWord {
        GroupWord { tokens: vec![Token::Gen(g)] }
    }

    pub fn from_gens(gs: impl IntoIterator<Item = Generator>) -> GroupWord {
        GroupWord { tokens: gs.into_iter().map(Token::Gen).collect() }
    }

    /// Concatenation `self · other` (`other` acts first).
    pub fn then_after(&self, other: &GroupWord) -> GroupWord {
        let mut tokens = self.tokens.clone();
        tokens.extend(other.tokens.iter().cloned());
        GroupWord { tokens }
    }

    /// Concatenation of several words in written order.
    pub fn concat<'a>(words: impl IntoIterator<Item = &'a GroupWord>) -> GroupWord {
        GroupWord { tokens: words.into_iter().flat_map(|w| w.tokens.iter().cloned()).collect() }
    }

    pub fn pow(&self, e: i64) -> GroupWord {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        GroupWord::concat(std::iter::repeat_n(&base, e.unsigned_abs() as usize))
    }

    /// Reversed word with every token inverted.
    pub fn inverse(&self) -> GroupWord {
        GroupWord {
            tokens: self
                .tokens
                .iter()
                .rev()
                .map(|t| match t {
                    Token::Mu(k) => Token::Mu(*k),
                    Token::Perm(p) => Token::Perm(p.inverse()),
                    Token::Gen(g) => Token::Gen(g.inverse()),
                })
                .collect(),
        }
    }

    /// Elementary steps in written order, expanding generators for family `n`.
    pub fn expand(&self, n: usize) -> Result<Vec<Elem>> {
        let mut out = Vec::new();
        for t in &self.tokens {
            match t {
                Token::Mu(k) => {
                    if *k == 0 || *k > size_for(n) {
                        return Err(Error::IndexOutOfRange { index: *k, size: size_for(n) });
                    }
                    out.push(Elem::Mu(*k));
                }
                Token::Perm(p) => out.push(Elem::Perm(p.clone())),
                Token::Gen(g) => out.extend(generator_word(*g, n)?),
            }
        }
        Ok(out)
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.tokens.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            match t {
                Token::Mu(k) => write!(f, "mu_{k}")?,
                Token::Perm(p) => write!(f, "perm{:?}", p.images())?,
                Token::Gen(g) => write!(f, "{g}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::RatFunc;

    fn rat(p: i64, q: i64) -> Rat {
        Rat::new(p, q).unwrap()
    }

    fn sample_y(n: usize, salt: i64) -> Vec<Rat> {
        (0..size_for(n) as i64).map(|i| rat((i * 7 + salt) % 11 + 2, (i * 3 + salt) % 5 + 1)).collect()
    }

    fn symbols(n: usize) -> Vec<RatFunc> {
        (0..size_for(n) as u16).map(RatFunc::var).collect()
    }

    #[test]
    fn mutation_inverts_pivot_and_is_involutive() {
        for n in 1..=3 {
            let s = YSeed::gen_qpvi(n, sample_y(n, 1)).unwrap();
            for k in 1..=s.quiver.size() {
                let m = s.mutate(k).unwrap();
                assert_eq!(m.get(k), &s.get(k).recip().unwrap());
                assert_eq!(m.mutate(k).unwrap(), s);
                assert_eq!(m.q(), s.q());
            }
        }
    }

    #[test]
    fn first_mutation_on_gen_qpvi() {
        let n = 2;
        let s = YSeed::gen_qpvi(n, symbols(n)).unwrap();
        let m = s.mutate(1).unwrap();
        let y = |i: usize| s.get(i).clone();
        let one = RatFunc::one();
        assert_eq!(m.get(2 * n + 3), &((one.clone() + y(1)) * y(2 * n + 3)));
        let d = one.clone() + y(1).inv().unwrap();
        assert_eq!(m.get(2 * n + 4), &y(2 * n + 4).div(&d).unwrap());
    }

    #[test]
    fn pole_on_minus_one() {
        let mut y = sample_y(1, 0);
        y[0] = Rat::from_int(-1);
        let s = YSeed::gen_qpvi(1, y).unwrap();
        assert_eq!(s.mutate(1), Err(Error::PoleAtPoint));
    }

    #[test]
    fn transposition_swaps() {
        let s = YSeed::gen_qpvi(1, sample_y(1, 3)).unwrap();
        let t = VertexPerm::transposition(8, 1, 2).unwrap();
        let p = s.permute(&t).unwrap();
        assert_eq!(p.get(1), s.get(2));
        assert_eq!(p.get(2), s.get(1));
        assert_eq!(p.permute(&t).unwrap(), s);
        assert_eq!(s.permute(&VertexPerm::identity(8)).unwrap(), s);
    }

    #[test]
    fn q_of_trivial_and_telescoping() {
        let ones = YSeed::gen_qpvi(1, vec![Rat::one(); 8]).unwrap();
        assert_eq!(ones.q(), Rat::one());
        let y = (0..8).map(|i| if i % 2 == 0 { rat(i + 2, 1) } else { rat(1, i + 1) }).collect();
        assert_eq!(YSeed::gen_qpvi(1, y).unwrap().q(), Rat::one());
    }

    #[test]
    fn relabeling_conjugates_mutation() {
        // (j,k) mu_i = mu_{(j,k)(i)} (j,k)
        let n = 1;
        let s = YSeed::gen_qpvi(n, sample_y(n, 5)).unwrap();
        for (j, k, i) in [(1, 2, 1), (3, 8, 3), (3, 8, 5), (2, 7, 7)] {
            let t = VertexPerm::transposition(8, j, k).unwrap();
            let lhs = s.mutate(i).unwrap().permute(&t).unwrap();
            let rhs = s.permute(&t).unwrap().mutate(t.image(i)).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn word_order_and_inverse() {
        let s = YSeed::gen_qpvi(1, sample_y(1, 2)).unwrap();
        let w = GroupWord::new(vec![Token::Mu(1), Token::Mu(1)]);
        assert_eq!(s.apply_word(&w).unwrap(), s);
        let w = GroupWord::new(vec![Token::Mu(3), Token::Perm(VertexPerm::transposition(8, 1, 3).unwrap()), Token::Mu(2)]);
        let manual = s.mutate(2).unwrap().permute(&VertexPerm::transposition(8, 1, 3).unwrap()).unwrap().mutate(3).unwrap();
        assert_eq!(s.apply_word(&w).unwrap(), manual);
        assert_eq!(manual.apply_word(&w.inverse()).unwrap(), s);
        assert!(GroupWord::new(vec![Token::Mu(9)]).expand(1).is_err());
    }

    #[test]
    fn json_round_trip() {
        let s = YSeed::gen_qpvi(1, sample_y(1, 4)).unwrap();
        let j = SeedJson::from(&s);
        let text = serde_json::to_string(&j).unwrap();
        let back: SeedJson = serde_json::from_str(&text).unwrap();
        assert_eq!(YSeed::try_from(back).unwrap(), s);
    }
}
