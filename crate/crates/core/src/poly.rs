//! Exact Laurent polynomials in two variables with integer coefficients.
//!
//! Arithmetic is checked: coefficient overflow panics rather than wrapping.

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

/// An element of `Z[x, 1/x, y, 1/y]`. Exponent pairs map to nonzero
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct LaurentPolynomial2 {
    terms: BTreeMap<(i32, i32), i64>,
}

impl LaurentPolynomial2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c * x^i * y^j`.
    pub fn monomial(c: i64, i: i32, j: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn x() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = ((i32, i32), i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i32, i32), i64)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, i: i32, j: i32) -> i64 {
        self.terms.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, i: i32, j: i32, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry((i, j)).or_insert(0);
        *e = e.checked_add(c).expect("coefficient overflow");
        if *e == 0 {
            self.terms.remove(&(i, j));
        }
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&k, &v)| (k, v.checked_mul(c).expect("coefficient overflow")))
                .collect(),
        }
    }

    /// Multiplies by `x^i * y^j`.
    pub fn shift(&self, i: i32, j: i32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), &v)| ((a + i, b + j), v))
                .collect(),
        }
    }

    /// Componentwise minimum exponents, or `None` for zero.
    pub fn min_exponents(&self) -> Option<(i32, i32)> {
        let i = self.terms.keys().map(|k| k.0).min()?;
        let j = self.terms.keys().map(|k| k.1).min()?;
        Some((i, j))
    }

    pub fn max_exponents(&self) -> Option<(i32, i32)> {
        let i = self.terms.keys().map(|k| k.0).max()?;
        let j = self.terms.keys().map(|k| k.1).max()?;
        Some((i, j))
    }

    /// Leading term under lexicographic order on `(i, j)`.
    pub fn leading(&self) -> Option<((i32, i32), i64)> {
        self.terms.iter().next_back().map(|(&k, &c)| (k, c))
    }

    /// Substitutes `x -> x^a y^b`, `y -> x^c y^d`.
    pub fn substitute_monomial(&self, a: i32, b: i32, c: i32, d: i32) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(&(i, j), &v)| ((a * i + c * j, b * i + d * j), v)),
        )
    }

    /// Value at `(x, y)` with `x, y` in `{1, -1}`.
    pub fn eval_signs(&self, x: i64, y: i64) -> i64 {
        self.terms
            .iter()
            .map(|(&(i, j), &c)| {
                let sx = if x == -1 && i.rem_euclid(2) == 1 { -1 } else { 1 };
                let sy = if y == -1 && j.rem_euclid(2) == 1 { -1 } else { 1 };
                c * sx * sy
            })
            .sum()
    }

    /// Exact division. Returns `None` unless `self = q * divisor` for a
    /// Laurent polynomial `q`.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let ((di, dj), dc) = divisor.leading().unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        // Long division on the lexicographic leading term. Each step removes
        // the current leading term of the remainder. A true quotient has its
        // support inside a box fixed by the exponent ranges, and every step
        // produces a new quotient term, so leaving the box means no quotient.
        let lower = {
            let (ai, aj) = self.min_exponents().unwrap();
            let (ci, cj) = divisor.min_exponents().unwrap();
            (ai - ci, aj - cj)
        };
        let upper = {
            let (ai, aj) = self.max_exponents().unwrap();
            let (bi, bj) = divisor.max_exponents().unwrap();
            (ai - bi, aj - bj)
        };
        while let Some(((ri, rj), rc)) = rem.leading() {
            if rc % dc != 0 {
                return None;
            }
            let (qi, qj) = (ri - di, rj - dj);
            if qi < lower.0 || qj < lower.1 || qi > upper.0 || qj > upper.1 {
                return None;
            }
            let t = Self::monomial(rc / dc, qi, qj);
            rem = &rem - &(&t * divisor);
            quot.add_term(qi, qj, rc / dc);
        }
        Some(quot)
    }
}

impl Add for &LaurentPolynomial2 {
    type Output = LaurentPolynomial2;
    fn add(self, rhs: &LaurentPolynomial2) -> LaurentPolynomial2 {
        let mut out = self.clone();
        for (&(i, j), &c) in &rhs.terms {
            out.add_term(i, j, c);
        }
        out
    }
}

impl Sub for &LaurentPolynomial2 {
    type Output = LaurentPolynomial2;
    fn sub(self, rhs: &LaurentPolynomial2) -> LaurentPolynomial2 {
        let mut out = self.clone();
        for (&(i, j), &c) in &rhs.terms {
            out.add_term(i, j, c.checked_neg().expect("coefficient overflow"));
        }
        out
    }
}

impl Mul for &LaurentPolynomial2 {
    type Output = LaurentPolynomial2;
    fn mul(self, rhs: &LaurentPolynomial2) -> LaurentPolynomial2 {
        let mut out = LaurentPolynomial2::zero();
        for (&(a, b), &c) in &self.terms {
            for (&(i, j), &d) in &rhs.terms {
                out.add_term(a + i, b + j, c.checked_mul(d).expect("coefficient overflow"));
            }
        }
        out
    }
}

impl Neg for &LaurentPolynomial2 {
    type Output = LaurentPolynomial2;
    fn neg(self) -> LaurentPolynomial2 {
        self.scale(-1)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPolynomial2 {
            type Output = LaurentPolynomial2;
            fn $m(self, rhs: LaurentPolynomial2) -> LaurentPolynomial2 {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPolynomial2 {
    type Output = LaurentPolynomial2;
    fn neg(self) -> LaurentPolynomial2 {
        (&self).neg()
    }
}

/// Canonical text: `coeff*x^i*y^j` terms joined by `" + "` in ascending
/// `(i, j)` order, or `0`.
impl fmt::Display for LaurentPolynomial2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (&(i, j), &c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}*x^{}*y^{}", c, i, j)?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPolynomial2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsePolyError;

impl fmt::Display for ParsePolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("malformed polynomial")
    }
}

impl core::str::FromStr for LaurentPolynomial2 {
    type Err = ParsePolyError;

    /// Parses the canonical text form (term order is not enforced).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut p = Self::zero();
        for term in s.split(" + ") {
            let mut parts = term.split('*');
            let c: i64 = parts.next().ok_or(ParsePolyError)?.parse().map_err(|_| ParsePolyError)?;
            let xi = parts.next().and_then(|t| t.strip_prefix("x^")).ok_or(ParsePolyError)?;
            let yj = parts.next().and_then(|t| t.strip_prefix("y^")).ok_or(ParsePolyError)?;
            if parts.next().is_some() || c == 0 {
                return Err(ParsePolyError);
            }
            let i = xi.parse().map_err(|_| ParsePolyError)?;
            let j = yj.parse().map_err(|_| ParsePolyError)?;
            p.add_term(i, j, c);
        }
        Ok(p)
    }
}

/// Renders with `^`-style exponents for humans, e.g. `x^2 - x^3*y^-1`.
pub fn pretty(p: &LaurentPolynomial2) -> String {
    use core::fmt::Write;
    if p.is_zero() {
        return String::from("0");
    }
    let mut s = String::new();
    for (n, ((i, j), c)) in p.terms().enumerate() {
        let mag = c.unsigned_abs();
        if n == 0 {
            if c < 0 {
                s.push('-');
            }
        } else {
            s.push_str(if c < 0 { " - " } else { " + " });
        }
        let mut factors: alloc::vec::Vec<String> = alloc::vec::Vec::new();
        if mag != 1 || (i == 0 && j == 0) {
            factors.push(alloc::format!("{mag}"));
        }
        for (v, e) in [('x', i), ('y', j)] {
            match e {
                0 => {}
                1 => factors.push(alloc::format!("{v}")),
                _ => factors.push(alloc::format!("{v}^{e}")),
            }
        }
        let _ = write!(s, "{}", factors.join("*"));
    }
    s
}
