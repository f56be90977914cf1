use proptest::prelude::*;
use qpvi::exactalg::{run_trials, sample_point, Point, Rat, VarTable, Witness};
use qpvi::lax::{compatibility_sides, lax_state, LaxCase};
use qpvi::painleve::{painleve_sampler, qp_step, state_of_point, tau1_by_word, tilde_reflection, PainleveState};

fn state(n: usize, s: u64) -> PainleveState<Rat> {
    state_of_point(n, &painleve_sampler(n)(s).unwrap()).unwrap()
}

/// `(a, b, t, f, g)`: everything except the gauge.
fn core(st: &PainleveState<Rat>) -> (Vec<Rat>, Vec<Rat>, Rat, Vec<Rat>, Vec<Rat>) {
    (st.a.clone(), st.b.clone(), st.t.clone(), st.f.clone(), st.g.clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn tilde_reflections_are_involutions(n in 1usize..=3, j in 0usize..8, s in any::<u64>()) {
        let j = j % (2 * n + 2);
        let st = lax_state(n, s).unwrap();
        if let Ok(once) = tilde_reflection(j, &st) {
            if let Ok(twice) = tilde_reflection(j, &once) {
                prop_assert_eq!(twice, st);
            }
        }
    }

    #[test]
    fn tau1_word_is_the_qp_step(n in 1usize..=2, s in any::<u64>()) {
        let st = state(n, s);
        if let (Ok(a), Ok(b)) = (tau1_by_word(&st), qp_step(&st)) {
            prop_assert_eq!(core(&a), core(&b));
        }
    }

    #[test]
    fn qp_step_advances_time_by_q(n in 1usize..=3, s in any::<u64>()) {
        let st = state(n, s);
        if let Ok(next) = qp_step(&st) {
            prop_assert_eq!(next.t.clone(), st.q.clone() * &st.t);
            prop_assert_eq!(&next.a, &st.a);
            prop_assert_eq!(&next.b, &st.b);
        }
    }

    #[test]
    fn lax_compatibility_for_each_generator(n in 1usize..=2, j in 0usize..7, s in any::<u64>()) {
        let cases = LaxCase::generators(n);
        let case = cases[j % cases.len()];
        if let Ok((lhs, rhs)) = compatibility_sides(&case, &lax_state(n, s).unwrap()) {
            prop_assert_eq!(lhs, rhs);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    /// A false identity is caught, and its recorded point replays the mismatch.
    #[test]
    fn failure_witnesses_replay(seed in any::<u64>()) {
        let vt = VarTable::with_vars(&["x", "y"]);
        let sample = |s: u64| sample_point(&vt, &[], s);
        let eval = |p: &Point| -> qpvi::Result<(Rat, Rat)> {
            let (x, y) = (p.get("x")?, p.get("y")?);
            Ok(((x.clone() + &y) * &(x.clone() + &y), x.clone() * &x + &(y.clone() * &y)))
        };
        let report = run_trials(5, seed, sample, eval);
        prop_assert!(!report.pass);
        let again = run_trials(5, seed, sample, eval);
        prop_assert_eq!(&report, &again);
        for f in &report.failures {
            let (l, r) = eval(&f.point).unwrap();
            prop_assert_eq!(l.witness(), f.lhs.clone());
            prop_assert_eq!(r.witness(), f.rhs.clone());
        }
    }
}
