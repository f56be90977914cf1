use proptest::prelude::*;
use qpvi::exactalg::Rat;
use qpvi::quiver::Quiver;
use qpvi::seed::GroupWord;
use qpvi::translations::{act_translation, roots, shift_of, translation_word, TBase, TranslationName};
use qpvi::weylrep::{act_closed_form, act_word, params_from_y, seed_sampler, y_of_point, Generator, ParamState};

fn params(n: usize, s: u64) -> ParamState<Rat> {
    params_from_y(&y_of_point(n, &seed_sampler(n)(s).unwrap()).unwrap())
}

/// Every translation base name for family `n`.
fn bases(n: usize) -> Vec<TBase> {
    let m = 2 * n + 2;
    let mut v: Vec<TBase> = (0..m).flat_map(|i| [TBase::T(i), TBase::TP(i), TBase::CalT(i)]).collect();
    v.extend((0..2).flat_map(|i| [TBase::U(i), TBase::UP(i), TBase::CalU(i), TBase::CalUP(i)]));
    v.extend([TBase::V, TBase::VP, TBase::Tau1, TBase::Tau2, TBase::Tau3]);
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn generator_words_restore_the_quiver(n in 1usize..=3, g in 0usize..32) {
        let gens = Generator::all(n);
        let q = Quiver::gen_qpvi(n);
        prop_assert_eq!(q.apply_word(&GroupWord::gen(gens[g % gens.len()])).unwrap(), q);
    }

    #[test]
    fn reflections_fix_the_a1_roots(n in 1usize..=3, j in 0usize..8, s in any::<u64>()) {
        let p = params(n, s);
        if let Ok(r) = act_closed_form(Generator::R(j % (2 * n + 2)), &p) {
            prop_assert_eq!(&r.beta, &p.beta);
            prop_assert_eq!(&r.beta_p, &p.beta_p);
        }
    }

    #[test]
    fn s_and_s_prime_fix_the_other_roots(n in 1usize..=3, l in 0usize..2, s in any::<u64>()) {
        let p = params(n, s);
        if let Ok(a) = act_closed_form(Generator::S(l), &p) {
            prop_assert_eq!(&a.alpha, &p.alpha);
            prop_assert_eq!(&a.beta_p, &p.beta_p);
        }
        if let Ok(b) = act_closed_form(Generator::SP(l), &p) {
            prop_assert_eq!(&b.alpha, &p.alpha);
            prop_assert_eq!(&b.beta, &p.beta);
        }
    }

    #[test]
    fn s1_and_s1_prime_commute(n in 1usize..=3, s in any::<u64>()) {
        let p = params(n, s);
        let ab = act_closed_form(Generator::S(1), &p).and_then(|x| act_closed_form(Generator::SP(1), &x));
        let ba = act_closed_form(Generator::SP(1), &p).and_then(|x| act_closed_form(Generator::S(1), &x));
        if let (Ok(ab), Ok(ba)) = (ab, ba) {
            prop_assert_eq!(ab, ba);
        }
    }

    #[test]
    fn closed_form_agrees_with_the_word(n in 1usize..=2, g in 0usize..32, s in any::<u64>()) {
        let gens = Generator::all(n);
        let g = gens[g % gens.len()];
        let y = y_of_point(n, &seed_sampler(n)(s).unwrap()).unwrap();
        if let Ok(image) = act_word(g, &y) {
            prop_assert_eq!(params_from_y(&image), act_closed_form(g, &params_from_y(&y)).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn translations_restore_the_quiver_and_shift_by_q(n in 1usize..=2, b in 0usize..64, power in -1i64..=1, s in any::<u64>()) {
        let all = bases(n);
        let name = TranslationName::new(all[b % all.len()]).pow(power);
        let q = Quiver::gen_qpvi(n);
        prop_assert_eq!(q.apply_word(&translation_word(name, n)).unwrap(), q);
        if let Some(shift) = shift_of(name, n) {
            let y = y_of_point(n, &seed_sampler(n)(s).unwrap()).unwrap();
            if let Ok(image) = act_translation(name, &y) {
                prop_assert_eq!(roots(&params_from_y(&image)), shift.apply(&params_from_y(&y)).unwrap());
            }
        }
    }
}
