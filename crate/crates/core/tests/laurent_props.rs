use num_rational::Rational64;
use proptest::prelude::*;
use qweyl::qlaurent::int;
use qweyl::{quantum_integer, LaurentQ};

fn laurent() -> impl Strategy<Value = LaurentQ> {
    let den = prop_oneof![Just(1i64), Just(2), Just(3), Just(4)];
    (den, prop::collection::vec((-12i64..=12, -5i64..=5), 0..5)).prop_map(|(d, ts)| {
        LaurentQ::from_terms(ts.into_iter().map(|(e, c)| (Rational64::new(e, d), int(c))))
    })
}

proptest! {
    #[test]
    fn ring_axioms(x in laurent(), y in laurent(), z in laurent()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x - &x), &LaurentQ::zero());
    }

    #[test]
    fn bar_is_an_involutive_automorphism(x in laurent(), y in laurent()) {
        prop_assert_eq!((&x * &y).bar(), &x.bar() * &y.bar());
        prop_assert_eq!(x.bar().bar(), x);
    }

    #[test]
    fn h_jet_is_multiplicative(x in laurent(), y in laurent()) {
        let (a, b, p) = (x.h_jet(), y.h_jet(), (&x * &y).h_jet());
        prop_assert_eq!(&p.c0, &(&a.c0 * &b.c0));
        prop_assert_eq!(&p.c1, &(&(&a.c0 * &b.c1) + &(&a.c1 * &b.c0)));
    }

    #[test]
    fn display_round_trips(x in laurent()) {
        let back: LaurentQ = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn quantum_integer_recurrence(n in -200i64..=200) {
        prop_assert_eq!(
            quantum_integer(n + 1) + quantum_integer(n - 1),
            quantum_integer(2) * quantum_integer(n)
        );
        prop_assert_eq!(quantum_integer(-n), -quantum_integer(n));
    }
}
