use std::fmt;

use crate::error::Result;
use crate::quiver::{size_for, VertexPerm};
use crate::seed::Elem;

/// Generators of the extended affine Weyl group.
///
/// `R(i)` is read modulo `2n + 2`, `S(k)` and `SP(k)` modulo 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    R(usize),
    S(usize),
    SP(usize),
    Pi,
    PiP,
    Rho,
    PiInv,
    PiPInv,
}

impl Generator {
    pub fn inverse(self) -> Generator {
        match self {
            Generator::Pi => Generator::PiInv,
            Generator::PiInv => Generator::Pi,
            Generator::PiP => Generator::PiPInv,
            Generator::PiPInv => Generator::PiP,
            g => g,
        }
    }

    /// Indices reduced for family `n`.
    pub fn normalized(self, n: usize) -> Generator {
        match self {
            Generator::R(i) => Generator::R(i % (2 * n + 2)),
            Generator::S(k) => Generator::S(k % 2),
            Generator::SP(k) => Generator::SP(k % 2),
            g => g,
        }
    }

    /// Every generator for family `n`, including the two inverse permutations.
    pub fn all(n: usize) -> Vec<Generator> {
        let mut v: Vec<Generator> = (0..2 * n + 2).map(Generator::R).collect();
        v.extend([Generator::S(0), Generator::S(1), Generator::SP(0), Generator::SP(1)]);
        v.extend([Generator::Pi, Generator::PiP, Generator::Rho, Generator::PiInv, Generator::PiPInv]);
        v
    }

    /// Parses `r_3`, `s_0`, `s'_1`, `pi`, `pi'`, `rho`, `pi^-1`, `pi'^-1`.
    pub fn parse(s: &str) -> Option<Generator> {
        let idx = |rest: &str| rest.parse::<usize>().ok();
        match s {
            "pi" | "π" => Some(Generator::Pi),
            "pi'" | "π'" => Some(Generator::PiP),
            "rho" | "ρ" => Some(Generator::Rho),
            "pi^-1" | "π^-1" => Some(Generator::PiInv),
            "pi'^-1" | "π'^-1" => Some(Generator::PiPInv),
            _ => {
                if let Some(r) = s.strip_prefix("s'_") {
                    idx(r).map(Generator::SP)
                } else if let Some(r) = s.strip_prefix("s_") {
                    idx(r).map(Generator::S)
                } else if let Some(r) = s.strip_prefix("r_") {
                    idx(r).map(Generator::R)
                } else {
                    None
                }
            }
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::R(i) => write!(f, "r_{i}"),
            Generator::S(k) => write!(f, "s_{k}"),
            Generator::SP(k) => write!(f, "s'_{k}"),
            Generator::Pi => write!(f, "pi"),
            Generator::PiP => write!(f, "pi'"),
            Generator::Rho => write!(f, "rho"),
            Generator::PiInv => write!(f, "pi^-1"),
            Generator::PiPInv => write!(f, "pi'^-1"),
        }
    }
}

/// The cycles of `π` for family `n`: odd vertices interleaved with the
/// `2n+3, 2n+5, …` family, and even vertices with `2n+4, 2n+6, …`.
fn pi_cycles(n: usize, primed: bool) -> Vec<Vec<usize>> {
    let (a, b) = if primed { (4, 3) } else { (3, 4) };
    let first = (0..=n).flat_map(|i| [2 * i + 1, 2 * i + 2 * n + a]).collect();
    let second = (0..=n).flat_map(|i| [2 * i + 2, 2 * i + 2 * n + b]).collect();
    vec![first, second]
}

/// The transposition pairs of `ρ` for family `n`.
pub fn rho_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = vec![(1, 2)];
    pairs.extend((3..=n + 2).filter(|&a| a < 2 * n + 5 - a).map(|a| (a, 2 * n + 5 - a)));
    for (start, end) in [(2 * n + 3, 4 * n + 3), (2 * n + 4, 4 * n + 4)] {
        let mut s = 0;
        while start + 2 * s < end - 2 * s {
            pairs.push((start + 2 * s, end - 2 * s));
            s += 1;
        }
    }
    pairs
}

pub fn permutation_of(g: Generator, n: usize) -> Option<VertexPerm> {
    let size = size_for(n);
    let p = match g {
        Generator::Pi => VertexPerm::from_cycles(size, &pi_cycles(n, false)),
        Generator::PiP => VertexPerm::from_cycles(size, &pi_cycles(n, true)),
        Generator::PiInv => return permutation_of(Generator::Pi, n).map(|p| p.inverse()),
        Generator::PiPInv => return permutation_of(Generator::PiP, n).map(|p| p.inverse()),
        Generator::Rho => {
            let cycles: Vec<Vec<usize>> = rho_pairs(n).into_iter().map(|(a, b)| vec![a, b]).collect();
            VertexPerm::from_cycles(size, &cycles)
        }
        _ => return None,
    };
    Some(p.expect("generator permutations are valid"))
}

/// Palindrome `left · (a, b) · reverse(left)`, a word in mutations.
fn palindrome(n: usize, left: Vec<usize>, centre: (usize, usize)) -> Result<Vec<Elem>> {
    let mut w: Vec<Elem> = left.iter().map(|&k| Elem::Mu(k)).collect();
    w.push(Elem::Perm(VertexPerm::transposition(size_for(n), centre.0, centre.1)?));
    w.extend(left.iter().rev().map(|&k| Elem::Mu(k)));
    Ok(w)
}

/// Left half of an s-word: pairs `μ_{o_i} μ_{e_i}` then the central mutation.
fn s_left(n: usize, odd0: usize, even0: usize, last: usize) -> Vec<usize> {
    let mut left: Vec<usize> = (0..n).flat_map(|i| [odd0 + 2 * i, even0 + 2 * i]).collect();
    left.push(last);
    left
}

/// Elementary steps of a generator, in written order (rightmost acts first).
pub fn generator_word(g: Generator, n: usize) -> Result<Vec<Elem>> {
    let m = 2 * n;
    match g.normalized(n) {
        Generator::R(j) if j % 2 == 0 => palindrome(n, vec![j + 1], (j + 1, j + 2)),
        Generator::R(j) => {
            let v = j - 1 + m + 3;
            palindrome(n, vec![v], (v, v + 1))
        }
        Generator::S(0) => palindrome(n, s_left(n, 1, m + 4, m + 1), (m + 1, 2 * m + 4)),
        Generator::S(_) => palindrome(n, s_left(n, 2, m + 3, m + 2), (m + 2, 2 * m + 3)),
        Generator::SP(0) => palindrome(n, s_left(n, 1, m + 3, m + 1), (m + 1, 2 * m + 3)),
        Generator::SP(_) => palindrome(n, s_left(n, 2, m + 4, m + 2), (m + 2, 2 * m + 4)),
        perm => Ok(vec![Elem::Perm(permutation_of(perm, n).expect("permutation generator"))]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mus(w: &[Elem]) -> Vec<String> {
        w.iter()
            .map(|e| match e {
                Elem::Mu(k) => format!("m{k}"),
                Elem::Perm(p) => {
                    let moved: Vec<usize> = (1..=p.len()).filter(|&i| p.image(i) != i).collect();
                    format!("{moved:?}")
                }
            })
            .collect()
    }

    #[test]
    fn r0_word() {
        assert_eq!(mus(&generator_word(Generator::R(0), 1).unwrap()), ["m1", "[1, 2]", "m1"]);
        assert_eq!(mus(&generator_word(Generator::R(3), 1).unwrap()), ["m7", "[7, 8]", "m7"]);
        assert_eq!(mus(&generator_word(Generator::R(1), 2).unwrap()), ["m7", "[7, 8]", "m7"]);
    }

    #[test]
    fn s0_word_n1() {
        let w = mus(&generator_word(Generator::S(0), 1).unwrap());
        assert_eq!(w, ["m1", "m6", "m3", "[3, 8]", "m3", "m6", "m1"]);
    }

    #[test]
    fn s_words_are_palindromes() {
        for n in 1..=4 {
            for g in [Generator::S(0), Generator::S(1), Generator::SP(0), Generator::SP(1)] {
                let w = generator_word(g, n).unwrap();
                assert_eq!(w.len(), 4 * n + 3);
                let mid = w.len() / 2;
                assert!(matches!(w[mid], Elem::Perm(_)));
                for i in 0..mid {
                    assert_eq!(w[i], w[w.len() - 1 - i]);
                }
            }
        }
    }

    #[test]
    fn rho_pairs_cover_expected_fixed_points() {
        // n odd: a perfect matching; n even: 3n+3 and 3n+4 are fixed
        for n in 1..=5 {
            let p = permutation_of(Generator::Rho, n).unwrap();
            let fixed: Vec<usize> = (1..=4 * n + 4).filter(|&i| p.image(i) == i).collect();
            if n % 2 == 1 {
                assert!(fixed.is_empty(), "n = {n}: {fixed:?}");
            } else {
                assert_eq!(fixed, vec![3 * n + 3, 3 * n + 4]);
            }
        }
        assert_eq!(rho_pairs(1), vec![(1, 2), (3, 4), (5, 7), (6, 8)]);
        assert_eq!(rho_pairs(2).last(), Some(&(8, 12)));
    }

    #[test]
    fn names_round_trip() {
        for n in 1..=2 {
            for g in Generator::all(n) {
                assert_eq!(Generator::parse(&g.to_string()), Some(g));
            }
        }
        assert_eq!(Generator::parse("r_x"), None);
    }
}
