mod common;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vknot_core::gauss::diagrams_equal;
use vknot_core::moves::{apply_move, enumerate_moves, MoveApplication, MoveKind, SearchBounds};
use vknot_core::{normalized_sawollek, odd_writhe, GaussDiagram, Label, Sign};

fn seeds(rng: &mut ChaCha8Rng, count: usize) -> Vec<GaussDiagram> {
    (0..count)
        .map(|i| {
            if i % 3 == 0 {
                let len = rng.gen_range(2..7);
                common::random_braid_knot(rng, 3, len)
            } else {
                let n = rng.gen_range(1..=6);
                common::random_diagram(rng, n)
            }
        })
        .collect()
}

/// Random walk that prefers decreasing moves and R3 so diagrams stay small.
fn pick(rng: &mut ChaCha8Rng, moves: &[MoveApplication]) -> MoveApplication {
    let interesting: Vec<_> = moves
        .iter()
        .filter(|m| !matches!(m.kind(), MoveKind::R1Add | MoveKind::R2Add))
        .copied()
        .collect();
    if !interesting.is_empty() && rng.gen_bool(0.6) {
        *interesting.choose(rng).unwrap()
    } else {
        *moves.choose(rng).unwrap()
    }
}

#[test]
fn invariants_survive_random_move_sequences() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let bounds = SearchBounds {
        max_crossings: 10,
        ..SearchBounds::default()
    };
    let mut applications = 0;
    let mut by_kind = std::collections::BTreeMap::new();
    for seed in seeds(&mut rng, 60) {
        let theta = odd_writhe(&seed);
        let z = normalized_sawollek(&seed);
        let mut d = seed.clone();
        for _ in 0..10 {
            let moves = enumerate_moves(&d, &bounds);
            let mv = pick(&mut rng, &moves);
            d = apply_move(&d, &mv).unwrap();
            applications += 1;
            *by_kind.entry(mv.kind()).or_insert(0) += 1;
            assert_eq!(odd_writhe(&d), theta, "{:?} from {}", mv, seed.to_code());
            assert_eq!(normalized_sawollek(&d), z, "{:?} from {}", mv, seed.to_code());
        }
    }
    assert!(applications >= 500);
    for kind in [MoveKind::R1Add, MoveKind::R1Remove, MoveKind::R2Add, MoveKind::R2Remove, MoveKind::R3] {
        assert!(by_kind.get(&kind).copied().unwrap_or(0) > 0, "{kind:?} never exercised");
    }
}

#[test]
fn every_enumerated_move_applies_and_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let bounds = SearchBounds {
        max_crossings: 7,
        ..SearchBounds::default()
    };
    for seed in seeds(&mut rng, 30) {
        for mv in enumerate_moves(&seed, &bounds) {
            let moved = apply_move(&seed, &mv).unwrap();
            // Some enumerated move of the result undoes this one.
            let undone = enumerate_moves(&moved, &bounds)
                .into_iter()
                .any(|back| diagrams_equal(&apply_move(&moved, &back).unwrap(), &seed));
            assert!(undone, "{:?} on {}", mv, seed.to_code());
        }
    }
}

#[test]
fn r1_add_then_remove() {
    let d: GaussDiagram = "O1+,O2+,U1+,U2+".parse().unwrap();
    for gap in 0..d.len() {
        for under_first in [false, true] {
            for sign in [Sign::Plus, Sign::Minus] {
                let e = apply_move(&d, &MoveApplication::R1Add { gap, under_first, sign }).unwrap();
                let removals: Vec<_> = enumerate_moves(&e, &SearchBounds::default())
                    .into_iter()
                    .filter(|m| m.kind() == MoveKind::R1Remove)
                    .collect();
                assert_eq!(removals.len(), 1);
                assert!(diagrams_equal(&apply_move(&e, &removals[0]).unwrap(), &d));
            }
        }
    }
    let bogus = MoveApplication::R1Remove { label: Label(1) };
    assert!(apply_move(&d, &bogus).is_err());
}

#[test]
fn r3_preserves_signs() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut seen = 0;
    for _ in 0..200 {
        let d = common::random_braid_knot(&mut rng, 3, 6);
        for mv in enumerate_moves(&d, &SearchBounds::default()) {
            if mv.kind() == MoveKind::R3 {
                let e = apply_move(&d, &mv).unwrap();
                let mut a = d.signs().to_vec();
                let mut b = e.signs().to_vec();
                a.sort();
                b.sort();
                assert_eq!(a, b);
                seen += 1;
            }
        }
    }
    assert!(seen > 50);
}
