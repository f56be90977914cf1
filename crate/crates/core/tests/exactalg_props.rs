use proptest::prelude::*;
use qpvi::exactalg::{sample_point, Constraint, Field, Monomial, Poly, Rat, RatFunc, VarTable};

fn rat() -> impl Strategy<Value = Rat> {
    (-60i64..60, 1i64..40).prop_map(|(a, b)| Rat::new(a, b).unwrap())
}

fn nonzero_rat() -> impl Strategy<Value = Rat> {
    rat().prop_filter("nonzero", |r| !r.is_zero())
}

/// A polynomial in two variables of degree at most 2 in each.
fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-5i64..6, 9).prop_map(|cs| {
        let mut p = Poly::zero();
        for (k, c) in cs.into_iter().enumerate() {
            let (i, j) = ((k / 3) as u32, (k % 3) as u32);
            let m = Monomial::var(0, i).mul(&Monomial::var(1, j));
            p = p + Poly::term(Rat::from_int(c), m);
        }
        p
    })
}

fn nonzero_poly() -> impl Strategy<Value = Poly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn rat_field_axioms(a in rat(), b in rat(), c in rat()) {
        prop_assert_eq!((a.clone() + &b) + &c, a.clone() + &(b.clone() + &c));
        prop_assert_eq!((a.clone() * &b) * &c, a.clone() * &(b.clone() * &c));
        prop_assert_eq!(a.clone() * &(b.clone() + &c), a.clone() * &b + &(a.clone() * &c));
        prop_assert_eq!(a.clone() + &(-a.clone()), Rat::zero());
        if !a.is_zero() {
            prop_assert_eq!(a.clone() * &a.inv().unwrap(), Rat::one());
        }
    }

    #[test]
    fn rat_string_round_trip(a in rat()) {
        let s = a.to_string();
        prop_assert!(s.contains('/'));
        prop_assert_eq!(s.parse::<Rat>().unwrap(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn ratfunc_normal_form_is_canonical(p in poly(), q in nonzero_poly(), r in nonzero_poly()) {
        let direct = RatFunc::new(p.clone(), q.clone()).unwrap();
        let padded = RatFunc::new(&p * &r, &q * &r).unwrap();
        prop_assert_eq!(format!("{direct:?}"), format!("{padded:?}"));
        prop_assert_eq!(&direct, &padded);
        let summed = RatFunc::from_poly(p.clone()) * RatFunc::new(Poly::one(), q.clone()).unwrap();
        prop_assert_eq!(summed, direct);
    }

    #[test]
    fn eval_is_a_ring_homomorphism(p in poly(), q in nonzero_poly(), s in poly(), x in rat(), y in rat()) {
        let f = RatFunc::new(p, q).unwrap();
        let g = RatFunc::from_poly(s);
        let pt = [x, y];
        if let Ok(fv) = f.eval(&pt) {
            let gv = g.eval(&pt).unwrap();
            prop_assert_eq!((f.clone() * &g).eval(&pt).unwrap(), fv.clone() * &gv);
            prop_assert_eq!((f + &g).eval(&pt).unwrap(), fv + &gv);
        }
    }

    #[test]
    fn division_inverts_multiplication(a in nonzero_rat(), b in nonzero_rat()) {
        prop_assert_eq!((a.clone() * &b).div(&b).unwrap(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn sample_point_is_pure_and_satisfies_constraints(seed in any::<u64>()) {
        let mut vt = VarTable::with_vars(&["x", "y", "s"]);
        vt.add_root("u", "x y", 3);
        let cons = [Constraint::new("s", Rat::from_int(2), &[("x", 1), ("u", -3)])];
        let a = sample_point(&vt, &cons, seed).unwrap();
        let b = sample_point(&vt, &cons, seed).unwrap();
        prop_assert_eq!(&a, &b);
        let expect = Rat::from_int(2) * &a.get("x").unwrap() * &a.get("u").unwrap().powi(-3).unwrap();
        prop_assert_eq!(a.get("s").unwrap(), expect);
    }
}
