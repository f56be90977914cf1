//! A small grammar for group words.
//!
//! A word is a whitespace-separated list of factors, applied rightmost
//! first. Each factor is a generator (`r_3`, `s_0`, `s'_1`, `pi`, `pi'`,
//! `rho`), a mutation `mu_k`, or a translation name (`T_2`, `calU'_0`, `V`,
//! `tau1`, …), optionally raised to an integer power with `^k`.
//!
//! ```
//! use qpvi::word::parse_word;
//! let w = parse_word("s_0 pi^-1 r_2^3", 1).unwrap();
//! assert_eq!(w.to_string(), "s_0 pi^-1 r_2 r_2 r_2");
//! ```

use crate::error::{Error, Result};
use crate::seed::{GroupWord, Token};
use crate::translations::{split_power, translation_word, TBase, TranslationName};
use crate::weylrep::Generator;

/// One factor of a word.
fn parse_factor(tok: &str, n: usize) -> Result<GroupWord> {
    let (name, power) = split_power(tok).ok_or_else(|| Error::Parse(format!("bad exponent in `{tok}`")))?;
    let base = if let Some(k) = name.strip_prefix("mu_") {
        let k = k.parse::<usize>().map_err(|_| Error::Parse(format!("bad mutation index in `{tok}`")))?;
        GroupWord::new(vec![Token::Mu(k)])
    } else if let Some(g) = Generator::parse(name) {
        GroupWord::gen(g)
    } else if let Some(t) = TBase::parse(name) {
        translation_word(TranslationName::new(t), n)
    } else {
        return Err(Error::Parse(format!("unknown generator `{name}`")));
    };
    Ok(base.pow(power))
}

/// Parses a word for family `n`; translations are expanded into generators.
pub fn parse_word(s: &str, n: usize) -> Result<GroupWord> {
    let parts = s.split_whitespace().map(|tok| parse_factor(tok, n)).collect::<Result<Vec<_>>>()?;
    Ok(GroupWord::concat(&parts))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powers_and_inverses() {
        assert_eq!(parse_word("pi^-1", 1).unwrap(), GroupWord::gen(Generator::PiInv));
        assert_eq!(parse_word("pi^2", 2).unwrap(), GroupWord::from_gens([Generator::Pi, Generator::Pi]));
        assert_eq!(parse_word("r_1^0", 1).unwrap(), GroupWord::empty());
        assert_eq!(parse_word("  ", 1).unwrap(), GroupWord::empty());
    }

    #[test]
    fn mutations_and_translations() {
        assert_eq!(parse_word("mu_3", 1).unwrap(), GroupWord::new(vec![Token::Mu(3)]));
        assert_eq!(parse_word("tau1^-1", 2).unwrap(), translation_word(TranslationName::new(TBase::Tau1), 2).inverse());
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(parse_word("r_x", 1), Err(Error::Parse(_))));
        assert!(matches!(parse_word("pi^a", 1), Err(Error::Parse(_))));
        assert!(matches!(parse_word("mu_", 1), Err(Error::Parse(_))));
    }
}
