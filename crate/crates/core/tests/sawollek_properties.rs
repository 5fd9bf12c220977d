mod common;

use vknot_core::matrix::{det_bareiss, det_cofactor};
use vknot_core::poly::LaurentPolynomial2 as P;
use vknot_core::sawollek::{crossing_matrix, distinguishes_inverse, normalized_sawollek};
use vknot_core::{is_realizable, GaussDiagram};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn corpus_is_classical_and_large_enough() {
    let corpus = common::classical_corpus();
    assert!(corpus.len() >= 20, "only {} codes closed up", corpus.len());
    for (name, d) in &corpus {
        assert!(d.arrow_count() <= 8, "{name}");
        assert!(is_realizable(d), "{name}");
    }
}

#[test]
fn vanishes_on_classical_diagrams() {
    for (name, d) in common::classical_corpus() {
        assert!(normalized_sawollek(&d).is_zero(), "{name}");
    }
}

#[test]
fn determinant_routes_agree_up_to_ten_crossings() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let n = rng.gen_range(1..=10);
        let d = common::random_diagram(&mut rng, n);
        let m = crossing_matrix(&d);
        assert_eq!(det_bareiss(&m), det_cofactor(&m), "{}", d.to_code());
    }
}

/// Equal up to a unit `±x^a y^b`.
fn associated(a: &P, b: &P) -> bool {
    match (a.min_exponents(), b.min_exponents()) {
        (None, None) => true,
        (Some((i, j)), Some((k, l))) => {
            let (a, b) = (a.shift(-i, -j), b.shift(-k, -l));
            a == b || a == -&b
        }
        _ => false,
    }
}

// Measured symmetries of this convention.
#[test]
fn inverse_and_mirror_relations() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut nonzero = 0;
    for _ in 0..300 {
        let n = rng.gen_range(2..=6);
        let d = common::random_diagram(&mut rng, n);
        let z = normalized_sawollek(&d);
        nonzero += usize::from(!z.is_zero());
        // x -> 1/x, y -> 1/y
        let inv = z.substitute_monomial(-1, 0, 0, -1);
        assert!(associated(&normalized_sawollek(&d.inverse()), &inv), "{}", d.to_code());
        // y -> x/y
        let mir = z.substitute_monomial(1, 0, 1, -1);
        assert!(associated(&normalized_sawollek(&d.mirror()), &mir), "{}", d.to_code());
    }
    assert!(nonzero > 100);
}

#[test]
fn smallest_inverse_detection_has_three_crossings() {
    for n in 0..=2 {
        for d in common::all_diagrams(n) {
            assert!(!distinguishes_inverse(&d), "{}", d.to_code());
        }
    }
    let found = common::all_diagrams(3)
        .into_iter()
        .find(distinguishes_inverse)
        .expect("some 3-crossing diagram");
    assert_eq!(found.to_code(), "O1+,O2+,O3+,U1+,U3+,U2+");
    let d: GaussDiagram = "O1+,O2+,O3+,U1+,U3+,U2+".parse().unwrap();
    assert_eq!(normalized_sawollek(&d).to_string(), "1*x^0*y^1 + 1*x^1*y^0 + 1*x^1*y^1");
    assert_eq!(
        normalized_sawollek(&d.inverse()).to_string(),
        "1*x^0*y^1 + 1*x^0*y^2 + 1*x^1*y^1"
    );
}
