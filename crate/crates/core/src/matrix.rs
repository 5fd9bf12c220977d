//! Determinants of square matrices over `Z[x^±1, y^±1]`.
//!
//! [`det_bareiss`] is the production routine. [`det_cofactor`] expands along
//! rows with memoized minors and serves as the independent check.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::poly::LaurentPolynomial2 as P;

/// Fraction-free Gaussian elimination.
///
/// Each row is first multiplied by a monomial so that all exponents are
/// nonnegative; the product of those monomials is divided out at the end.
/// Bareiss' update divides by the previous pivot exactly.
pub fn det_bareiss(m: &[Vec<P>]) -> P {
    let n = m.len();
    if n == 0 {
        return P::one();
    }
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    let mut a: Vec<Vec<P>> = Vec::with_capacity(n);
    let (mut si, mut sj) = (0i32, 0i32);
    for row in m {
        let (mut mi, mut mj) = (i32::MAX, i32::MAX);
        for e in row {
            if let Some((i, j)) = e.min_exponents() {
                mi = mi.min(i);
                mj = mj.min(j);
            }
        }
        if mi == i32::MAX {
            return P::zero();
        }
        si += mi;
        sj += mj;
        a.push(row.iter().map(|e| e.shift(-mi, -mj)).collect());
    }

    let mut negate = false;
    let mut prev = P::one();
    for k in 0..n {
        // Pivot: the sparsest nonzero entry in column k.
        let pivot = (k..n)
            .filter(|&i| !a[i][k].is_zero())
            .min_by_key(|&i| a[i][k].term_count());
        let Some(p) = pivot else {
            return P::zero();
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss division must be exact");
            }
            a[i][k] = P::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].shift(si, sj);
    if negate {
        -det
    } else {
        det
    }
}

/// Laplace expansion along successive rows, memoized on the set of columns
/// already used. Cost is governed by the number of reachable column sets,
/// which stays small for sparse matrices.
pub fn det_cofactor(m: &[Vec<P>]) -> P {
    let n = m.len();
    assert!(n <= 64, "cofactor oracle supports at most 64 columns");
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    let nonzero: Vec<Vec<usize>> = m
        .iter()
        .map(|r| (0..n).filter(|&j| !r[j].is_zero()).collect())
        .collect();
    let mut memo: BTreeMap<u64, P> = BTreeMap::new();
    minor(m, &nonzero, 0, &mut memo)
}

fn minor(m: &[Vec<P>], nonzero: &[Vec<usize>], used: u64, memo: &mut BTreeMap<u64, P>) -> P {
    let row = used.count_ones() as usize;
    if row == m.len() {
        return P::one();
    }
    if let Some(v) = memo.get(&used) {
        return v.clone();
    }
    let mut total = P::zero();
    for &j in &nonzero[row] {
        if used >> j & 1 == 1 {
            continue;
        }
        let sub = minor(m, nonzero, used | 1 << j, memo);
        if sub.is_zero() {
            continue;
        }
        // Sign of column j among the unused columns.
        let before = (used & ((1u64 << j) - 1)).count_ones() as usize;
        let term = &m[row][j] * &sub;
        if (j - before).is_multiple_of(2) {
            total = &total + &term;
        } else {
            total = &total - &term;
        }
    }
    memo.insert(used, total.clone());
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn c(v: i64) -> P {
        P::constant(v)
    }

    #[test]
    fn small_determinants() {
        assert_eq!(det_bareiss(&[]), P::one());
        let m = vec![vec![c(1), c(2)], vec![c(3), c(4)]];
        assert_eq!(det_bareiss(&m), c(-2));
        assert_eq!(det_cofactor(&m), c(-2));
        let x = P::x();
        let y = P::y();
        let m = vec![
            vec![x.clone(), P::one(), P::zero()],
            vec![P::zero(), y.clone(), P::monomial(1, -1, 0)],
            vec![P::one(), P::zero(), P::monomial(2, 0, -1)],
        ];
        // x*y*2/y - 0 + 1*(1*x^-1) = 2x + x^-1
        let want = &P::monomial(2, 1, 0) + &P::monomial(1, -1, 0);
        assert_eq!(det_cofactor(&m), want);
        assert_eq!(det_bareiss(&m), want);
    }

    #[test]
    fn zero_pivot_needs_swap() {
        let m = vec![vec![c(0), c(1)], vec![c(1), c(0)]];
        assert_eq!(det_bareiss(&m), c(-1));
        let z = vec![vec![c(0), c(1)], vec![c(0), c(2)]];
        assert_eq!(det_bareiss(&z), P::zero());
    }

    fn arb_entry() -> impl Strategy<Value = P> {
        prop_oneof![
            2 => Just(P::zero()),
            3 => proptest::collection::vec(((-2i32..3, -2i32..3), -3i64..4), 1..3).prop_map(P::from_terms),
        ]
    }

    fn arb_matrix() -> impl Strategy<Value = Vec<Vec<P>>> {
        (1usize..6).prop_flat_map(|n| proptest::collection::vec(proptest::collection::vec(arb_entry(), n), n))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn elimination_matches_expansion(m in arb_matrix()) {
            prop_assert_eq!(det_bareiss(&m), det_cofactor(&m));
        }
    }
}
