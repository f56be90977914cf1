use proptest::prelude::*;
use qpvi::exactalg::Rat;
use qpvi::quiver::{size_for, Quiver, VertexPerm};
use qpvi::seed::YSeed;
use qpvi::weylrep::{act_word, seed_sampler, y_of_point, Generator};

fn seed(n: usize, s: u64) -> YSeed<Rat> {
    y_of_point(n, &seed_sampler(n)(s).unwrap()).unwrap()
}

fn is_skew(q: &Quiver) -> bool {
    let m = q.matrix();
    (0..m.len()).all(|i| (0..m.len()).all(|j| m[i][j] == -m[j][i]))
}

/// `(n, vertex)` with the vertex in range for `n`.
fn n_and_vertex() -> impl Strategy<Value = (usize, usize)> {
    (1usize..=3).prop_flat_map(|n| (Just(n), 1..=size_for(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn mutation_sequences_stay_skew_symmetric(n in 1usize..=3, ks in prop::collection::vec(1usize..=8, 0..12)) {
        let mut q = Quiver::gen_qpvi(n);
        for k in ks {
            q = q.mutate(k).unwrap();
            prop_assert!(is_skew(&q));
        }
    }

    #[test]
    fn seed_mutation_is_an_involution((n, k) in n_and_vertex(), s in any::<u64>()) {
        let y = seed(n, s);
        if let Ok(once) = y.mutate(k) {
            prop_assert_eq!(once.mutate(k).unwrap(), y);
        }
    }

    #[test]
    fn transposition_conjugates_mutation((n, i) in n_and_vertex(), j in 1usize..=8, k in 1usize..=8, s in any::<u64>()) {
        let size = size_for(n);
        let (j, k) = ((j - 1) % size + 1, (k - 1) % size + 1);
        prop_assume!(j != k);
        let t = VertexPerm::transposition(size, j, k).unwrap();
        let y = seed(n, s);
        let moved = if i == j { k } else if i == k { j } else { i };
        let lhs = y.mutate(i).and_then(|m| m.permute(&t));
        let rhs = y.permute(&t).and_then(|p| p.mutate(moved));
        if let (Ok(l), Ok(r)) = (lhs, rhs) {
            prop_assert_eq!(l, r);
        }
    }

    #[test]
    fn q_is_conserved((n, k) in n_and_vertex(), s in any::<u64>(), g in 0usize..20) {
        let y = seed(n, s);
        if let Ok(m) = y.mutate(k) {
            prop_assert_eq!(m.q(), y.q());
        }
        let gens = Generator::all(n);
        if let Ok(image) = act_word(gens[g % gens.len()], &y) {
            prop_assert_eq!(image.q(), y.q());
        }
    }
}
