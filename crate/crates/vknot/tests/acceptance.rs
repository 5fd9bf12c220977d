//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

use std::collections::BTreeSet;
use std::panic::catch_unwind;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vknot::catalog::{self, Kind};
use vknot_core::free::{apply_free_move, contains_smoothing_isomorphic_to, free_moves, is_irreducibly_odd, FreeKnotDiagram};
use vknot_core::gauss::diagrams_equal;
use vknot_core::moves::{apply_move, enumerate_moves, MoveApplication, SearchBounds};
use vknot_core::parity::parities;
use vknot_core::sawollek::{distinguishes_inverse, normalized_sawollek};
use vknot_core::seifert::{
    apply_surface_move, embed_on_standard_surface, kappa, linking_number, validate, BandPresentation, Event,
    LoopSite, SeifertError, SurfaceDiagram, SurfaceMove,
};
use vknot_core::{gaussian_parity, is_realizable, odd_writhe, GaussDiagram, Parity, Role, Sign, Token};

fn random_diagram(rng: &mut ChaCha8Rng, n: usize) -> GaussDiagram {
    let mut slots: Vec<usize> = (0..2 * n).collect();
    slots.shuffle(rng);
    let mut tokens = vec![
        Token {
            label: 0,
            role: Role::Over,
            sign: Sign::Plus,
        };
        2 * n
    ];
    for a in 0..n {
        let sign = if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
        let label = a as u32 + 1;
        tokens[slots[2 * a]] = Token { label, role: Role::Over, sign };
        tokens[slots[2 * a + 1]] = Token { label, role: Role::Under, sign };
    }
    GaussDiagram::from_tokens(&tokens).unwrap()
}

fn random_braid_knot(rng: &mut ChaCha8Rng, strands: usize, len: usize) -> GaussDiagram {
    loop {
        let word: Vec<i32> = (0..len)
            .map(|_| {
                let g = rng.gen_range(1..strands as i32);
                if rng.gen_bool(0.5) {
                    g
                } else {
                    -g
                }
            })
            .collect();
        if let Some(d) = GaussDiagram::braid_closure(strands, &word) {
            return d;
        }
    }
}

/// Every diagram with `n` arrows, one per rotation class.
fn all_diagrams(n: usize) -> Vec<GaussDiagram> {
    fn matchings(free: &mut Vec<usize>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if free.is_empty() {
            out.push(cur.clone());
            return;
        }
        let a = free.remove(0);
        for i in 0..free.len() {
            let b = free.remove(i);
            cur.push((a, b));
            matchings(free, cur, out);
            cur.pop();
            free.insert(i, b);
        }
        free.insert(0, a);
    }
    let mut chords = Vec::new();
    matchings(&mut (0..2 * n).collect(), &mut Vec::new(), &mut chords);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for ch in chords {
        for mask in 0..(1u32 << (2 * n)) {
            let mut tokens = vec![
                Token {
                    label: 0,
                    role: Role::Over,
                    sign: Sign::Plus,
                };
                2 * n
            ];
            for (a, &(p, q)) in ch.iter().enumerate() {
                let (o, u) = if mask >> (2 * a) & 1 == 1 { (q, p) } else { (p, q) };
                let sign = if mask >> (2 * a + 1) & 1 == 1 { Sign::Minus } else { Sign::Plus };
                let label = a as u32 + 1;
                tokens[o] = Token { label, role: Role::Over, sign };
                tokens[u] = Token { label, role: Role::Under, sign };
            }
            let d = GaussDiagram::from_tokens(&tokens).unwrap();
            if seen.insert(d.canonical_key()) {
                out.push(d);
            }
        }
    }
    out
}

fn classical_corpus() -> Vec<GaussDiagram> {
    let braids: &[(usize, &[i32])] = &[
        (2, &[1]),
        (3, &[1, 2]),
        (3, &[1, -2]),
        (4, &[1, 2, 3]),
        (2, &[1, 1, 1]),
        (2, &[-1, -1, -1]),
        (3, &[1, -2, 1, -2]),
        (2, &[1, 1, 1, 1, 1]),
        (3, &[1, 1, 1, 2, -1, 2]),
        (4, &[1, 1, 2, -1, -3, 2, -3]),
        (3, &[1, 1, 1, -2, 1, -2]),
        (3, &[1, 1, -2, 1, -2, -2]),
        (2, &[1, 1, 1, 1, 1, 1, 1]),
        (3, &[1, 1, 1, 2, 2, 2]),
        (3, &[1, 1, 1, -2, -2, -2]),
        (3, &[1, 1, 1, 2]),
        (4, &[1, -2, 1, -2, 3]),
        (4, &[1, 1, 1, 2, -1, 2, 3]),
        (3, &[1, 2, 1, 2]),
        (3, &[1, 1, 2, -1, 2, 2, -1, 2]),
        (4, &[1, -2, 3, 1, -2, 3, 1, -2]),
        (2, &[1, 1, 1, -1, 1]),
    ];
    braids.iter().filter_map(|&(s, w)| GaussDiagram::braid_closure(s, w)).collect()
}

fn catalog_gauss(name: &str) -> GaussDiagram {
    let e = catalog::get(name).unwrap();
    assert_eq!(e.kind, Kind::Gauss);
    e.payload.parse().unwrap()
}

fn criterion_1() -> String {
    for name in ["unknot", "kink", "trefoil", "figure-eight"] {
        let d = catalog_gauss(name);
        assert!(is_realizable(&d), "{name}");
        assert_eq!(odd_writhe(&d), 0, "{name}");
    }
    assert_eq!(odd_writhe(&catalog_gauss("virtual-trefoil")), 2);
    let (mut odds, mut evens) = (0, 0);
    for d in all_diagrams(3) {
        let par = parities(&d);
        let profile: Vec<(Parity, Sign)> = (0..3).map(|a| (par[a], d.signs()[a])).collect();
        let count = |p, s| profile.iter().filter(|&&x| x == (p, s)).count();
        if count(Parity::Odd, Sign::Plus) == 2 && count(Parity::Even, Sign::Minus) == 1 {
            assert_eq!(odd_writhe(&d), 2, "{}", d.to_code());
            odds += 1;
        }
        if count(Parity::Odd, Sign::Minus) == 2 && count(Parity::Even, Sign::Plus) == 1 {
            assert_eq!(odd_writhe(&d), -2, "{}", d.to_code());
            evens += 1;
        }
    }
    assert!(odds > 0 && evens > 0);
    format!("{odds} diagrams with profile (+odd,+odd,-even), {evens} with (-odd,-odd,+even)")
}

fn criterion_2() -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    let (mut r1, mut r2, mut r3) = (0usize, 0usize, 0usize);
    while r1 + r2 + r3 < 10_000 {
        let mut d = if rng.gen_bool(0.5) {
            let strands = rng.gen_range(3..5);
            let len = rng.gen_range(3..8);
            random_braid_knot(&mut rng, strands, len)
        } else {
            let n = rng.gen_range(0..6);
            random_diagram(&mut rng, n)
        };
        let grow = SearchBounds {
            max_crossings: 9,
            ..SearchBounds::default()
        };
        for _ in 0..rng.gen_range(0..3) {
            let moves = enumerate_moves(&d, &grow);
            d = apply_move(&d, &moves[rng.gen_range(0..moves.len())]).unwrap();
        }
        let par = parities(&d);
        let bounds = SearchBounds {
            max_crossings: d.arrow_count(),
            ..SearchBounds::default()
        };
        for mv in enumerate_moves(&d, &bounds) {
            match mv {
                MoveApplication::R1Remove { label } => {
                    assert_eq!(gaussian_parity(&d, label), Ok(Parity::Even), "{}", d.to_code());
                    r1 += 1;
                }
                MoveApplication::R2Remove { first, second } => {
                    assert_eq!(gaussian_parity(&d, first), gaussian_parity(&d, second), "{}", d.to_code());
                    r2 += 1;
                }
                MoveApplication::R3 { segments } => {
                    let mut arrows: Vec<usize> = segments
                        .iter()
                        .flat_map(|&p| [d.word()[p].arrow, d.word()[(p + 1) % d.len()].arrow])
                        .collect();
                    arrows.sort_unstable();
                    arrows.dedup();
                    assert_eq!(arrows.len(), 3);
                    let odd = arrows.iter().filter(|&&a| par[a] == Parity::Odd).count();
                    assert_eq!(odd % 2, 0, "{}", d.to_code());
                    r3 += 1;
                }
                _ => {}
            }
        }
    }
    assert!(r1 > 0 && r2 > 0 && r3 > 0);
    format!("{} sites (R1 {r1}, R2 {r2}, R3 {r3}), no violations", r1 + r2 + r3)
}

fn criterion_3() -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    let bounds = SearchBounds {
        max_crossings: 10,
        ..SearchBounds::default()
    };
    let mut applied = 0;
    let mut kinds = BTreeSet::new();
    for _ in 0..50 {
        let n = rng.gen_range(2..=6);
        let mut d = random_diagram(&mut rng, n);
        let (w, z) = (odd_writhe(&d), normalized_sawollek(&d));
        for _ in 0..20 {
            let moves = enumerate_moves(&d, &bounds);
            let mv = moves[rng.gen_range(0..moves.len())];
            kinds.insert(mv.kind());
            d = apply_move(&d, &mv).unwrap();
            assert!(d.arrow_count() <= 10);
            assert_eq!(odd_writhe(&d), w, "{}", d.to_code());
            assert_eq!(normalized_sawollek(&d), z, "{}", d.to_code());
            applied += 1;
        }
    }
    assert_eq!(kinds.len(), 5);
    format!("{applied} moves over 50 seeds, all five move kinds used")
}

fn criterion_4() -> String {
    let corpus = classical_corpus();
    assert!(corpus.len() >= 20);
    for d in &corpus {
        assert!(d.arrow_count() <= 8);
        assert!(is_realizable(d), "{}", d.to_code());
        assert!(normalized_sawollek(d).is_zero(), "{}", d.to_code());
    }
    let d = catalog_gauss("inverse-detected");
    assert!(d.arrow_count() <= 6);
    assert!(distinguishes_inverse(&d));
    let smallest = (1..=3)
        .find_map(|n| all_diagrams(n).into_iter().find(distinguishes_inverse))
        .expect("scan finds an inverse-detecting diagram");
    assert_eq!(smallest.arrow_count(), d.arrow_count());
    format!(
        "{} classical codes vanish; `inverse-detected` ({} crossings) has Z != Z(inverse); the khat4 golden stays gated",
        corpus.len(),
        d.arrow_count()
    )
}

fn criterion_5() -> String {
    let e = catalog::get("irreducibly-odd").unwrap();
    let f = FreeKnotDiagram::parse(e.payload).unwrap();
    assert!(is_irreducibly_odd(&f));
    let cap = f.chord_count() + 4;
    let mut rng = ChaCha8Rng::seed_from_u64(105);
    let mut sizes = BTreeSet::new();
    for _ in 0..200 {
        let mut g = f.clone();
        for _ in 0..rng.gen_range(1..=12) {
            let moves = free_moves(&g, cap);
            g = apply_free_move(&g, &moves[rng.gen_range(0..moves.len())]).unwrap();
        }
        assert!(g.chord_count() <= cap);
        assert!(contains_smoothing_isomorphic_to(&g, &f), "{}", g.to_code());
        sizes.insert(g.chord_count());
    }
    format!("200 descendants with {:?} chords all contain the pattern", sizes)
}

fn random_surface_moves(sd: &SurfaceDiagram, rng: &mut ChaCha8Rng, count: usize) -> (SurfaceDiagram, usize) {
    let mut sd = sd.clone();
    let mut applied = 0;
    for _ in 0..count {
        let bands = sd.surface.band_count();
        let records = sd.surface.band_crossings.len();
        if bands == 0 {
            break;
        }
        let mv = match rng.gen_range(0..3) {
            0 if records > 0 => SurfaceMove::Pass {
                record: rng.gen_range(0..records),
            },
            1 if records > 0 => SurfaceMove::Unloop {
                record: rng.gen_range(0..records),
            },
            _ => {
                let band = rng.gen_range(0..bands);
                let used: usize = sd
                    .surface
                    .band_crossings
                    .iter()
                    .map(|r| usize::from(r.over == band) + usize::from(r.under == band))
                    .sum();
                SurfaceMove::Loop(LoopSite {
                    band,
                    position: rng.gen_range(0..=used),
                    sign: if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus },
                    over_first: rng.gen_bool(0.5),
                })
            }
        };
        match apply_surface_move(&sd, &mv) {
            Ok(next) => {
                sd = next;
                applied += 1;
            }
            Err(SeifertError::InvalidSite) => {}
            Err(e) => panic!("{e}"),
        }
    }
    (sd, applied)
}

fn criterion_6() -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(106);
    let mut moves = 0;
    for _ in 0..100 {
        let n = rng.gen_range(1..=6);
        let d = random_diagram(&mut rng, n);
        let sd = embed_on_standard_surface(&d);
        assert!(validate(&sd).is_empty());
        let k = kappa(&sd).unwrap();
        assert_eq!(linking_number(&sd), Ok(0));
        let mut cur = sd;
        for _ in 0..4 {
            let (next, applied) = random_surface_moves(&cur, &mut rng, 3);
            moves += applied;
            assert!(validate(&next).is_empty());
            assert_eq!(kappa(&next).unwrap(), k);
            assert_eq!(linking_number(&next), Ok(0));
            cur = next;
        }
    }
    format!("100 surface diagrams, {moves} loop/pass moves, kappa and linking number 0 preserved")
}

fn criterion_7() -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(107);
    let mut max_genus = 0;
    for _ in 0..100 {
        let n = rng.gen_range(0..=8);
        let d = random_diagram(&mut rng, n);
        let sd = embed_on_standard_surface(&d);
        assert!(validate(&sd).is_empty(), "{}", d.to_code());
        assert!(diagrams_equal(&kappa(&sd).unwrap(), &d), "{}", d.to_code());
        max_genus = max_genus.max(sd.surface.genus);
    }
    format!("100 diagrams round-trip, surface genus up to {max_genus}")
}

fn criterion_8() -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(108);
    let (mut kept, mut tried) = (0, 0);
    while kept < 50 {
        tried += 1;
        assert!(tried < 100_000);
        let n = rng.gen_range(1..=6);
        let d = random_diagram(&mut rng, n);
        let genus = rng.gen_range(0..3);
        let events = d.tokens().into_iter().map(Event::Crossing).collect();
        let sd = SurfaceDiagram::new(BandPresentation::standard(genus), events);
        if validate(&sd).is_empty() {
            assert!(is_realizable(&kappa(&sd).unwrap()), "{}", d.to_code());
            kept += 1;
        }
    }
    format!("50 disk-confined instances (of {tried} generated) are classical")
}

type Criterion = (&'static str, fn() -> String, Duration);

fn main() {
    let criteria: [Criterion; 8] = [
        ("odd-writhe goldens", criterion_1, Duration::from_secs(1)),
        ("parity axioms", criterion_2, Duration::from_secs(30)),
        ("move invariance", criterion_3, Duration::from_secs(300)),
        ("Sawollek classical vanishing", criterion_4, Duration::from_secs(120)),
        ("reproduced subdiagram", criterion_5, Duration::from_secs(600)),
        ("Seifert-form invariance", criterion_6, Duration::from_secs(60)),
        ("embedding round trip", criterion_7, Duration::from_secs(60)),
        ("disk confinement is classical", criterion_8, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(run);
        let took = start.elapsed();
        let line = match outcome {
            Ok(detail) if took <= limit => format!("PASS {}. {name}: {detail} ({took:.2?})", i + 1),
            Ok(detail) => format!("FAIL {}. {name}: {detail} but took {took:.2?}, limit {limit:?}", i + 1),
            Err(e) => {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                format!("FAIL {}. {name}: {msg}", i + 1)
            }
        };
        if line.starts_with("FAIL") {
            failed += 1;
        }
        println!("{line}");
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
