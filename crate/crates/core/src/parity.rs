//! Gaussian parity and the odd writhe.

use alloc::vec::Vec;

use crate::gauss::{GaussDiagram, GaussError, Label, Sign};
use crate::realize::interlaced;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_count(k: usize) -> Parity {
        if k.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Whether the endpoints of arrows `a` and `b` interleave on the circle.
pub fn linked(d: &GaussDiagram, a: Label, b: Label) -> Result<bool, GaussError> {
    let ia = d.check_label(a)?;
    let ib = d.check_label(b)?;
    if ia == ib {
        return Ok(false);
    }
    let pos = d.positions();
    Ok(interlaced(pos[ia], pos[ib]))
}

/// Number of arrows linked with each arrow.
pub fn link_counts(d: &GaussDiagram) -> Vec<usize> {
    let pos = d.positions();
    (0..pos.len())
        .map(|a| {
            (0..pos.len())
                .filter(|&b| b != a && interlaced(pos[a], pos[b]))
                .count()
        })
        .collect()
}

/// Parity of every arrow, indexed by arrow.
pub fn parities(d: &GaussDiagram) -> Vec<Parity> {
    link_counts(d).into_iter().map(Parity::of_count).collect()
}

pub fn gaussian_parity(d: &GaussDiagram, label: Label) -> Result<Parity, GaussError> {
    let a = d.check_label(label)?;
    Ok(parities(d)[a])
}

/// Signed count of odd arrows.
pub fn odd_writhe(d: &GaussDiagram) -> i64 {
    parities(d)
        .iter()
        .zip(d.signs())
        .filter(|(p, _)| **p == Parity::Odd)
        .map(|(_, s): (_, &Sign)| s.value())
        .sum()
}
