//! The normalized Sawollek polynomial.
//!
//! Each crossing contributes a 2x2 block relating the outgoing arcs to the
//! incoming ones, in variables `(s, t)`. Writing `e_k` for the arc leaving
//! endpoint `k` and `p`, `q` for the over and under endpoints:
//!
//! * positive: `e_p = s e_{p-1}`, `e_q = (1 - st) e_{p-1} + t e_{q-1}`
//! * negative: `e_p = s^-1 e_{p-1}`, `e_q = t^-1 e_{q-1} - (1 - st)/(st) e_{p-1}`
//!
//! The determinant of `I - C` always vanishes at `s = 1`, `t = 1` and `st = 1`,
//! and is divisible by `(s - 1)(t - 1)(st - 1)`. The quotient is rewritten in
//! `x = st`, `y = s`. Reidemeister moves change it only by powers of `x`, so
//! the x-degree is shifted to start at zero. Finally the quotient is
//! multiplied by `-y`, which fixes the overall unit.

use alloc::vec;
use alloc::vec::Vec;

use crate::gauss::{GaussDiagram, Sign};
use crate::matrix::det_bareiss;
use crate::poly::LaurentPolynomial2 as P;

/// The `2n x 2n` matrix `I - C` in variables `(s, t)`, stored as `(x, y)`.
pub fn crossing_matrix(d: &GaussDiagram) -> Vec<Vec<P>> {
    let m = d.len();
    let mut a = vec![vec![P::zero(); m]; m];
    for (k, row) in a.iter_mut().enumerate() {
        row[k] = P::one();
    }
    let one = P::one();
    let st = P::monomial(1, 1, 1);
    for (arrow, (p, q)) in d.positions().into_iter().enumerate() {
        let pin = (p + m - 1) % m;
        let qin = (q + m - 1) % m;
        match d.signs()[arrow] {
            Sign::Plus => {
                sub(&mut a[q][pin], &(&one - &st));
                sub(&mut a[q][qin], &P::monomial(1, 0, 1));
                sub(&mut a[p][pin], &P::monomial(1, 1, 0));
            }
            Sign::Minus => {
                sub(&mut a[p][pin], &P::monomial(1, -1, 0));
                sub(&mut a[q][qin], &P::monomial(1, 0, -1));
                let c = &one - &P::monomial(1, -1, -1);
                sub(&mut a[q][pin], &c);
            }
        }
    }
    a
}

fn sub(e: &mut P, v: &P) {
    *e = &*e - v;
}

/// `det(I - C)` in `(s, t)`.
pub fn crossing_determinant(d: &GaussDiagram) -> P {
    det_bareiss(&crossing_matrix(d))
}

/// `(s - 1)(t - 1)(st - 1)`.
pub fn trivial_factor() -> P {
    let one = P::one();
    &(&(&P::x() - &one) * &(&P::y() - &one)) * &(&P::monomial(1, 1, 1) - &one)
}

/// Normalizes a determinant in `(s, t)`. Panics if it is not divisible by
/// [`trivial_factor`], which never happens for determinants of diagrams.
pub fn normalize_determinant(det: &P) -> P {
    if det.is_zero() {
        return P::zero();
    }
    let q = det
        .exact_div(&trivial_factor())
        .expect("crossing determinant is divisible by (s-1)(t-1)(st-1)");
    // s = y, t = x / y
    let z = &q.substitute_monomial(0, 1, 1, -1) * &P::monomial(-1, 0, 1);
    let (mx, _) = z.min_exponents().expect("nonzero");
    z.shift(-mx, 0)
}

pub fn normalized_sawollek(d: &GaussDiagram) -> P {
    if d.arrow_count() == 0 {
        return P::zero();
    }
    normalize_determinant(&crossing_determinant(d))
}

pub fn distinguishes_inverse(d: &GaussDiagram) -> bool {
    normalized_sawollek(d) != normalized_sawollek(&d.inverse())
}
