#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use vknot_core::gauss::{GaussDiagram, Role, Sign, Token};

pub fn random_diagram<R: Rng>(rng: &mut R, n: usize) -> GaussDiagram {
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
        tokens[slots[2 * a]] = Token {
            label,
            role: Role::Over,
            sign,
        };
        tokens[slots[2 * a + 1]] = Token {
            label,
            role: Role::Under,
            sign,
        };
    }
    GaussDiagram::from_tokens(&tokens).unwrap()
}

/// Closure of a random braid word that happens to be a knot.
pub fn random_braid_knot<R: Rng>(rng: &mut R, strands: usize, len: usize) -> GaussDiagram {
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

/// Perfect matchings of `0..m`.
pub fn matchings(m: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(free: &mut Vec<usize>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if free.is_empty() {
            out.push(cur.clone());
            return;
        }
        let a = free.remove(0);
        for i in 0..free.len() {
            let b = free.remove(i);
            cur.push((a, b));
            rec(free, cur, out);
            cur.pop();
            free.insert(i, b);
        }
        free.insert(0, a);
    }
    let mut out = Vec::new();
    rec(&mut (0..m).collect(), &mut Vec::new(), &mut out);
    out
}

/// Every decorated diagram with `n` arrows, one per rotation class.
pub fn all_diagrams(n: usize) -> Vec<GaussDiagram> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for ch in matchings(2 * n) {
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
                let sign = if mask >> (2 * a + 1) & 1 == 1 {
                    Sign::Minus
                } else {
                    Sign::Plus
                };
                let label = a as u32 + 1;
                tokens[o] = Token {
                    label,
                    role: Role::Over,
                    sign,
                };
                tokens[u] = Token {
                    label,
                    role: Role::Under,
                    sign,
                };
            }
            let d = GaussDiagram::from_tokens(&tokens).unwrap();
            if seen.insert(d.canonical_key()) {
                out.push(d);
            }
        }
    }
    out
}

/// Classical knot diagrams up to 8 crossings, as braid closures.
pub fn classical_corpus() -> Vec<(&'static str, GaussDiagram)> {
    let braids: &[(&str, usize, &[i32])] = &[
        ("unknot-1", 2, &[1]),
        ("unknot-2", 3, &[1, 2]),
        ("unknot-3", 3, &[1, -2]),
        ("unknot-4", 4, &[1, 2, 3]),
        ("trefoil", 2, &[1, 1, 1]),
        ("trefoil-mirror", 2, &[-1, -1, -1]),
        ("figure-eight", 3, &[1, -2, 1, -2]),
        ("cinquefoil", 2, &[1, 1, 1, 1, 1]),
        ("three-twist", 3, &[1, 1, 1, 2, -1, 2]),
        ("stevedore", 4, &[1, 1, 2, -1, -3, 2, -3]),
        ("6_2", 3, &[1, 1, 1, -2, 1, -2]),
        ("6_3", 3, &[1, 1, -2, 1, -2, -2]),
        ("7_1", 2, &[1, 1, 1, 1, 1, 1, 1]),
        ("granny", 3, &[1, 1, 1, 2, 2, 2]),
        ("square", 3, &[1, 1, 1, -2, -2, -2]),
        ("trefoil-stabilized", 3, &[1, 1, 1, 2]),
        ("figure-eight-stabilized", 4, &[1, -2, 1, -2, 3]),
        ("seven-mixed", 4, &[1, 1, 1, 2, -1, 2, 3]),
        ("positive-4", 3, &[1, 2, 1, 2]),
        ("twist-8", 3, &[1, 1, 2, -1, 2, 2, -1, 2]),
        ("mixed-8", 4, &[1, -2, 3, 1, -2, 3, 1, -2]),
        ("kinked-trefoil", 2, &[1, 1, 1, -1, 1]),
    ];
    braids
        .iter()
        .filter_map(|&(name, s, w)| GaussDiagram::braid_closure(s, w).map(|d| (name, d)))
        .collect()
}
