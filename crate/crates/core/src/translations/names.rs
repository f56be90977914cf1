//! Named elements of the translation subgroup and their words.

use std::fmt;

use crate::seed::{GroupWord, Token};
use crate::weylrep::Generator;

/// Base names; `Cal*` are the composite translations built from the `T`, `U`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TBase {
    T(usize),
    TP(usize),
    U(usize),
    UP(usize),
    CalT(usize),
    CalU(usize),
    CalUP(usize),
    V,
    VP,
    Tau1,
    Tau2,
    Tau3,
}

/// A base name raised to an integer power.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TranslationName {
    pub base: TBase,
    pub power: i64,
}

impl TranslationName {
    pub fn new(base: TBase) -> TranslationName {
        TranslationName { base, power: 1 }
    }

    pub fn pow(self, e: i64) -> TranslationName {
        TranslationName { base: self.base, power: self.power * e }
    }

    /// Parses `T_3`, `T'_0`, `U_1`, `U'_0`, `calT_2`, `calU_1`, `calU'_0`,
    /// `V`, `V'`, `tau1`, `tau2`, `tau3`, each optionally followed by `^e`.
    pub fn parse(s: &str) -> Option<TranslationName> {
        let (name, power) = split_power(s)?;
        Some(TranslationName { base: TBase::parse(name)?, power })
    }
}

/// Splits `name^e` into the name and the exponent (1 if absent).
pub(crate) fn split_power(s: &str) -> Option<(&str, i64)> {
    match s.rsplit_once('^') {
        Some((name, e)) => Some((name, e.parse().ok()?)),
        None => Some((s, 1)),
    }
}

impl TBase {
    pub fn parse(s: &str) -> Option<TBase> {
        let idx = |rest: &str| rest.parse::<usize>().ok();
        type Ctor = fn(usize) -> TBase;
        let table: [(&str, Ctor); 7] = [
            ("calU'_", TBase::CalUP),
            ("calU_", TBase::CalU),
            ("calT_", TBase::CalT),
            ("T'_", TBase::TP),
            ("T_", TBase::T),
            ("U'_", TBase::UP),
            ("U_", TBase::U),
        ];
        let s = s.replace('𝒯', "calT").replace('𝒰', "calU").replace('𝒱', "V").replace('τ', "tau");
        match s.as_str() {
            "V" => return Some(TBase::V),
            "V'" => return Some(TBase::VP),
            "tau1" | "tau_1" => return Some(TBase::Tau1),
            "tau2" | "tau_2" => return Some(TBase::Tau2),
            "tau3" | "tau_3" => return Some(TBase::Tau3),
            _ => {}
        }
        table.iter().find_map(|(prefix, make)| s.strip_prefix(prefix).and_then(idx).map(make))
    }

    /// Word of the base element for family `n`, in written order.
    pub fn word(self, n: usize) -> GroupWord {
        use Generator::*;
        let m = 2 * n + 2;
        let rs = |range: std::ops::Range<usize>| range.map(|i| R(i % m)).collect::<Vec<_>>();
        let t = |i: usize, pi: Generator| {
            let i = i % m;
            let mut g = rs(i + 1..m);
            g.push(pi);
            g.extend(rs(1..i + 1));
            GroupWord::from_gens(g)
        };
        let prev = |i: usize, k: usize| (i + k - 1) % k;
        match self {
            TBase::T(i) => t(i, Pi),
            TBase::TP(i) => t(i, PiP),
            TBase::U(k) => GroupWord::from_gens(if k % 2 == 0 { vec![S(1), Pi] } else { vec![Pi, S(1)] }),
            TBase::UP(k) => GroupWord::from_gens(if k % 2 == 0 { vec![SP(1), PiP] } else { vec![PiP, SP(1)] }),
            TBase::CalT(j) => TBase::T(prev(j, m)).word(n).inverse().then_after(&TBase::T(j).word(n)),
            TBase::CalU(k) => TBase::U(prev(k, 2)).word(n).inverse().then_after(&TBase::U(k).word(n)),
            TBase::CalUP(k) => TBase::UP(prev(k, 2)).word(n).inverse().then_after(&TBase::UP(k).word(n)),
            TBase::V => GroupWord::gen(S(1)).then_after(&TBase::T(0).word(n)),
            TBase::VP => GroupWord::gen(SP(1)).then_after(&TBase::TP(0).word(n)),
            TBase::Tau1 => GroupWord::from_gens([S(1), SP(1), PiInv, PiP]),
            TBase::Tau2 => {
                let mut g = rs(n + 1..m);
                g.extend(rs(0..n));
                g.push(R(m - 1));
                g.extend(rs(0..2 * n));
                g.extend([Pi, Pi]);
                GroupWord::from_gens(g)
            }
            TBase::Tau3 => {
                let mut g: Vec<Generator> = (0..=n).map(|i| R(2 * i)).collect();
                g.push(Pi);
                GroupWord::from_gens(g).pow(2)
            }
        }
    }
}

/// Word of a translation name for family `n`.
pub fn translation_word(t: TranslationName, n: usize) -> GroupWord {
    t.base.word(n).pow(t.power)
}

impl fmt::Display for TBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TBase::T(i) => write!(f, "T_{i}"),
            TBase::TP(i) => write!(f, "T'_{i}"),
            TBase::U(k) => write!(f, "U_{k}"),
            TBase::UP(k) => write!(f, "U'_{k}"),
            TBase::CalT(j) => write!(f, "calT_{j}"),
            TBase::CalU(k) => write!(f, "calU_{k}"),
            TBase::CalUP(k) => write!(f, "calU'_{k}"),
            TBase::V => write!(f, "V"),
            TBase::VP => write!(f, "V'"),
            TBase::Tau1 => write!(f, "tau1"),
            TBase::Tau2 => write!(f, "tau2"),
            TBase::Tau3 => write!(f, "tau3"),
        }
    }
}

impl fmt::Display for TranslationName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.power == 1 {
            write!(f, "{}", self.base)
        } else {
            write!(f, "{}^{}", self.base, self.power)
        }
    }
}

/// A symbol of a relation: a generator or a (powered) translation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sym {
    G(Generator),
    X(TranslationName),
}

impl Sym {
    pub fn x(base: TBase, power: i64) -> Sym {
        Sym::X(TranslationName { base, power })
    }
}

/// Concatenated word of a product of symbols, in written order.
pub fn word_of(syms: &[Sym], n: usize) -> GroupWord {
    let mut tokens = Vec::new();
    for s in syms {
        match s {
            Sym::G(g) => tokens.push(Token::Gen(*g)),
            Sym::X(t) => tokens.extend(translation_word(*t, n).tokens),
        }
    }
    GroupWord::new(tokens)
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sym::G(g) => write!(f, "{g}"),
            Sym::X(t) => write!(f, "{t}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    #[test]
    fn tau1_word() {
        assert_eq!(translation_word(TranslationName::new(TBase::Tau1), 2), GroupWord::from_gens([S(1), SP(1), PiInv, PiP]));
    }

    #[test]
    fn tau2_word_n1() {
        // r_2 r_3 r_0 r_3 r_0 r_1 pi pi
        let w = translation_word(TranslationName::new(TBase::Tau2), 1);
        assert_eq!(w, GroupWord::from_gens([R(2), R(3), R(0), R(3), R(0), R(1), Pi, Pi]));
    }

    #[test]
    fn tau3_word_n1() {
        let w = translation_word(TranslationName::new(TBase::Tau3), 1);
        assert_eq!(w, GroupWord::from_gens([R(0), R(2), Pi, R(0), R(2), Pi]));
    }

    #[test]
    fn t_words_endpoints() {
        let n = 1;
        assert_eq!(TBase::T(0).word(n), GroupWord::from_gens([R(1), R(2), R(3), Pi]));
        assert_eq!(TBase::T(3).word(n), GroupWord::from_gens([Pi, R(1), R(2), R(3)]));
        assert_eq!(TBase::T(1).word(n), GroupWord::from_gens([R(2), R(3), Pi, R(1)]));
    }

    #[test]
    fn parse_names() {
        for s in ["T_3", "T'_0", "U_1", "U'_0", "calT_2", "calU_1", "calU'_0", "V", "V'", "tau1", "tau2", "tau3^-2"] {
            let t = TranslationName::parse(s).unwrap();
            assert_eq!(t.to_string(), s);
        }
        assert_eq!(TranslationName::parse("𝒯_1^2"), Some(TranslationName { base: TBase::CalT(1), power: 2 }));
        assert_eq!(TranslationName::parse("W_1"), None);
    }
}
