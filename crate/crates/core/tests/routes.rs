use lefschetz_core::classify::{classify_slp, classify_wlp, ClassifyOptions};
use lefschetz_core::combinat::primes_up_to;
use lefschetz_core::detformula::proctor_determinant;
use lefschetz_core::oracle::{has_slp_oracle, has_wlp_oracle};
use lefschetz_core::{Characteristic, DegreeTuple, Status};
use proptest::prelude::*;

fn small_tuple() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(2u32..=6, 2..=4)
}

fn characteristic() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![0u64, 2, 3, 5, 7, 11, 13])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn cascade_agrees_with_the_rank_oracle(raw in small_tuple(), p in characteristic()) {
        let d = DegreeTuple::new(&raw).unwrap();
        let c = Characteristic::new(p).unwrap();
        let w = classify_wlp(&d, c, ClassifyOptions::default());
        prop_assert_eq!(w.verdict.status, has_wlp_oracle(&d, c).status, "{}", w.trace);
        let s = classify_slp(&d, c, ClassifyOptions::default());
        prop_assert_eq!(s.verdict.status, has_slp_oracle(&d, c).status, "{}", s.trace);
    }

    #[test]
    fn verdicts_depend_only_on_the_multiset(raw in small_tuple(), p in characteristic()) {
        let c = Characteristic::new(p).unwrap();
        let mut reversed = raw.clone();
        reversed.reverse();
        let a = DegreeTuple::new(&raw).unwrap();
        let b = DegreeTuple::new(&reversed).unwrap();
        prop_assert_eq!(a.degrees(), b.degrees());
        prop_assert_eq!(
            classify_slp(&a, c, ClassifyOptions::default()).verdict,
            classify_slp(&b, c, ClassifyOptions::default()).verdict
        );
    }
}

#[test]
fn slp_implies_wlp() {
    for raw in lefschetz_core::classify::descending_tuples(3, 2, 5) {
        let d = DegreeTuple::new(&raw).unwrap();
        for p in primes_up_to(13) {
            let c = Characteristic::new(p).unwrap();
            if has_slp_oracle(&d, c).holds_property() {
                assert!(has_wlp_oracle(&d, c).holds_property(), "{d} char {p}");
            }
        }
    }
}

#[test]
fn determinant_decides_every_prime_on_its_domain() {
    let d = DegreeTuple::new(&[5, 5, 5, 2]).unwrap();
    let report = proctor_determinant(&d).unwrap();
    for p in primes_up_to(13) {
        let c = Characteristic::new(p).unwrap();
        let expected = if report.bad_primes.contains(&p) { Status::Fails } else { Status::Holds };
        assert_eq!(report.verdict(c).status, expected);
        assert_eq!(has_wlp_oracle(&d, c).status, expected, "char {p}");
    }
}
