//! Declarative table of relations among generators and translations.

use super::names::{Sym, TBase};
use crate::weylrep::Generator;

/// A relation `lhs = rhs` between products of symbols, tagged by family.
#[derive(Clone, Debug)]
pub struct TRel {
    pub family: &'static str,
    pub name: String,
    pub lhs: Vec<Sym>,
    pub rhs: Vec<Sym>,
}

fn show(syms: &[Sym]) -> String {
    if syms.is_empty() {
        "1".into()
    } else {
        syms.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ")
    }
}

fn rel(family: &'static str, lhs: Vec<Sym>, rhs: Vec<Sym>) -> TRel {
    TRel { family, name: format!("{} = {}", show(&lhs), show(&rhs)), lhs, rhs }
}

fn g(x: Generator) -> Sym {
    Sym::G(x)
}

fn x(b: TBase) -> Sym {
    Sym::x(b, 1)
}

/// `b^e`, omitted when `e = 0`.
fn xp(b: TBase, e: i64) -> Option<Sym> {
    (e != 0).then(|| Sym::x(b, e))
}

/// Conjugation `a · b = b · extra · a`.
fn conj(family: &'static str, a: Generator, b: TBase, extra: &[Option<Sym>], b_after: Option<TBase>) -> TRel {
    let mut rhs = vec![x(b_after.unwrap_or(b))];
    rhs.extend(extra.iter().flatten().copied());
    rhs.push(g(a));
    rel(family, vec![g(a), x(b)], rhs)
}

/// Every relation family, in table order.
pub const FAMILIES: &[&str] = &[
    "calT",
    "calU",
    "calU'",
    "V",
    "V'",
    "commute",
    "T-product",
    "calT-via-T'",
    "tau1",
    "tau2",
    "tau3",
];

/// The full relation table for family `n`.
pub fn relation_table(n: usize) -> Vec<TRel> {
    use Generator::*;
    use TBase::*;
    let m = 2 * n + 2;
    let prev = |j: usize| (j + m - 1) % m;
    let d = |a: usize, b: usize| (a % m == b % m) as i64;
    let mut out = Vec::new();

    for j in 0..m {
        for i in 0..m {
            let e = d(i, j + m - 1) - 2 * d(i, j) + d(i, j + 1);
            out.push(conj("calT", R(i), CalT(j), &[xp(CalT(i), e)], None));
        }
        for k in 0..2 {
            out.push(conj("calT", S(k), CalT(j), &[], None));
            out.push(conj("calT", SP(k), CalT(j), &[], None));
        }
        out.push(conj("calT", Pi, CalT(j), &[], Some(CalT(prev(j)))));
        out.push(conj("calT", PiP, CalT(j), &[], Some(CalT(prev(j)))));
        out.push(conj("calT", Rho, CalT(j), &[], Some(CalT((m - j) % m))));
    }

    for l in 0..2 {
        let lp = (l + 1) % 2;
        for i in 0..m {
            out.push(conj("calU", R(i), CalU(l), &[], None));
            out.push(conj("calU'", R(i), CalUP(l), &[], None));
        }
        for k in 0..2 {
            out.push(conj("calU", S(k), CalU(l), &[], Some(CalU(lp))));
            out.push(conj("calU", SP(k), CalU(l), &[], None));
            out.push(conj("calU'", S(k), CalUP(l), &[], None));
            out.push(conj("calU'", SP(k), CalUP(l), &[], Some(CalUP(lp))));
        }
        out.push(conj("calU", Pi, CalU(l), &[], Some(CalU(lp))));
        out.push(conj("calU", PiP, CalU(l), &[], None));
        out.push(conj("calU", Rho, CalU(l), &[], Some(CalUP(lp))));
        out.push(conj("calU'", Pi, CalUP(l), &[], None));
        out.push(conj("calU'", PiP, CalUP(l), &[], Some(CalUP(lp))));
        out.push(conj("calU'", Rho, CalUP(l), &[], Some(CalU(lp))));
    }

    for (fam, v, vo, u_own) in [("V", V, VP, CalU(1)), ("V'", VP, V, CalUP(1))] {
        for i in 0..m {
            let e = -d(i, 0) + d(i, 1);
            out.push(conj(fam, R(i), v, &[xp(CalT(i), e)], None));
        }
        let own_s = |k: usize| if v == V { S(k) } else { SP(k) };
        let other_s = |k: usize| if v == V { SP(k) } else { S(k) };
        let (own_pi, other_pi) = if v == V { (Pi, PiP) } else { (PiP, Pi) };
        for k in 0..2 {
            out.push(conj(fam, own_s(k), v, &[Some(x(u_own))], None));
            out.push(conj(fam, other_s(k), v, &[], None));
        }
        out.push(conj(fam, own_pi, v, &[xp(CalT(0), -1), Some(x(u_own))], None));
        // The other rotation still shifts α, hence the 𝒯_0^{-1}.
        out.push(conj(fam, other_pi, v, &[xp(CalT(0), -1)], None));
        out.push(rel(fam, vec![g(Rho), x(v)], vec![Sym::x(vo, -1), x(CalT(0)), g(Rho)]));
    }

    let mut abel: Vec<TBase> = (1..=2 * n).map(CalT).collect();
    abel.extend([CalU(1), V, VP]);
    for (a_idx, &a) in abel.iter().enumerate() {
        for &b in &abel[a_idx + 1..] {
            out.push(rel("commute", vec![x(a), x(b)], vec![x(b), x(a)]));
        }
    }

    out.push(rel("T-product", (0..m).map(|i| x(T(i))).collect(), vec![]));
    out.push(rel("T-product", (0..m).map(|i| x(TP(i))).collect(), vec![]));

    for j in 0..m {
        out.push(rel("calT-via-T'", vec![x(CalT(j))], vec![Sym::x(TP(prev(j)), -1), x(TP(j))]));
    }

    out.push(rel("tau1", vec![x(Tau1)], vec![Sym::x(CalU(1), -1), Sym::x(V, -1), x(VP)]));
    out.push(rel("tau1", vec![x(Tau1)], vec![Sym::x(U(1), -1), x(UP(0))]));

    let mut tau2: Vec<Sym> = super::shifts::tau2_exponents(n).into_iter().map(|(j, e)| Sym::x(CalT(j), e)).collect();
    tau2.extend([Sym::x(CalU(1), -(n as i64)), Sym::x(V, -2 * n as i64)]);
    out.push(rel("tau2", vec![x(Tau2)], tau2));
    out.push(rel("tau2", vec![x(Tau2)], vec![x(T(n)), x(T(m - 1))]));

    let odd_ts: Vec<Sym> = (0..=n).map(|i| x(T(2 * i + 1))).collect();
    let step: Vec<Sym> = (0..=n).map(|i| g(R(2 * i))).chain([g(Pi)]).collect();
    out.push(rel("tau3", odd_ts.clone(), step.repeat(n + 1)));
    let (cal_t, u, v) = super::shifts::odd_t_product_exponents(n);
    let mut fact: Vec<Sym> = cal_t.into_iter().filter_map(|(j, e)| xp(CalT(j), e)).collect();
    fact.extend([Sym::x(CalU(1), u), Sym::x(V, v)]);
    let power = if n % 2 == 1 { odd_ts } else { (0..=n).map(|i| Sym::x(T(2 * i + 1), 2)).collect() };
    out.push(rel("tau3", fact, power));
    if n == 1 {
        out.push(rel("tau3", vec![x(Tau3)], vec![x(Tau2)]));
    }
    out
}

/// Commutation forms `π'𝒱 = 𝒱π'` and `π𝒱' = 𝒱'π` without the `𝒯_0^{-1}`
/// factor; they are evaluated only to be reported, since they fail.
pub fn uncorrected_rotations() -> Vec<TRel> {
    use Generator::*;
    use TBase::*;
    vec![conj("V", PiP, V, &[], None), conj("V'", Pi, VP, &[], None)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_family_is_populated() {
        for n in 1..4 {
            let t = relation_table(n);
            for f in FAMILIES {
                assert!(t.iter().any(|r| r.family == *f), "n={n} family {f}");
            }
        }
    }

    #[test]
    fn commutativity_pairs() {
        let n = 2;
        let k = 2 * n + 3;
        assert_eq!(relation_table(n).iter().filter(|r| r.family == "commute").count(), k * (k - 1) / 2);
    }
}
