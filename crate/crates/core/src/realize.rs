//! Planarity of Gauss diagrams.
//!
//! A Gauss diagram is realizable when it is the Gauss diagram of a knot
//! diagram in the plane. Three tests are combined:
//!
//! 1. every chord interlaces an even number of chords (cheap necessary
//!    condition);
//! 2. Rosenstiehl's interlacement criterion for the unsigned chord diagram,
//!    which decides whether some plane curve has this Gauss word;
//! 3. the genus of the ribbon graph built from the signed, directed
//!    crossings, which must be zero. Signs fix the cyclic order of the four
//!    branches at each crossing, so this is the test that sees decorations.
//!
//! Conventions at a crossing: a positive crossing has its over strand running
//! SW to NE and its under strand SE to NW. Counterclockwise, the ports of a
//! positive crossing are (over-in, under-in, over-out, under-out) and those of
//! a negative crossing are (over-in, under-out, over-out, under-in).

use alloc::vec;
use alloc::vec::Vec;

use crate::gauss::{GaussDiagram, Role, Sign};

/// Ports of a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Port {
    OverIn,
    UnderIn,
    OverOut,
    UnderOut,
}

/// Counterclockwise slot (0..4) of a port at a crossing of the given sign.
pub fn port_slot(sign: Sign, port: Port) -> usize {
    match (sign, port) {
        (_, Port::OverIn) => 0,
        (_, Port::OverOut) => 2,
        (Sign::Plus, Port::UnderIn) => 1,
        (Sign::Plus, Port::UnderOut) => 3,
        (Sign::Minus, Port::UnderOut) => 1,
        (Sign::Minus, Port::UnderIn) => 3,
    }
}

/// A combinatorial map: darts with a vertex rotation `sigma` and an edge
/// involution `alpha`. Faces are the cycles of `sigma ∘ alpha`.
#[derive(Clone, Debug)]
pub struct RibbonGraph {
    pub sigma: Vec<usize>,
    pub alpha: Vec<usize>,
}

impl RibbonGraph {
    /// Ribbon graph of the knot diagram on its canonical surface. Dart
    /// `4a + s` is slot `s` of arrow `a`.
    pub fn of_diagram(d: &GaussDiagram) -> RibbonGraph {
        let n = d.arrow_count();
        let word = d.word();
        let signs = d.signs();
        let mut sigma = vec![0; 4 * n];
        for a in 0..n {
            for s in 0..4 {
                sigma[4 * a + s] = 4 * a + (s + 1) % 4;
            }
        }
        let mut alpha = vec![0; 4 * n];
        let m = word.len();
        for k in 0..m {
            let e = word[k];
            let f = word[(k + 1) % m];
            let out = match e.role {
                Role::Over => Port::OverOut,
                Role::Under => Port::UnderOut,
            };
            let inp = match f.role {
                Role::Over => Port::OverIn,
                Role::Under => Port::UnderIn,
            };
            let x = 4 * e.arrow + port_slot(signs[e.arrow], out);
            let y = 4 * f.arrow + port_slot(signs[f.arrow], inp);
            alpha[x] = y;
            alpha[y] = x;
        }
        RibbonGraph { sigma, alpha }
    }

    /// Face cycles as lists of darts; each face lists the darts `x` such
    /// that the boundary runs along the edge `x -> alpha(x)`.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.sigma.len()];
        let mut faces = Vec::new();
        for start in 0..self.sigma.len() {
            if seen[start] {
                continue;
            }
            let mut face = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                face.push(x);
                x = self.sigma[self.alpha[x]];
            }
            faces.push(face);
        }
        faces
    }

    pub fn face_count(&self) -> usize {
        self.faces().len()
    }

    /// Connected components of the underlying graph (by dart orbits).
    pub fn components(&self) -> usize {
        let n = self.sigma.len();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let mut stack = vec![s];
            comp[s] = count;
            while let Some(x) = stack.pop() {
                for y in [self.sigma[x], self.alpha[x]] {
                    if comp[y] == usize::MAX {
                        comp[y] = count;
                        stack.push(y);
                    }
                }
            }
            count += 1;
        }
        count
    }
}

/// Genus of the canonical surface carrying the diagram.
pub fn ribbon_genus(d: &GaussDiagram) -> usize {
    let n = d.arrow_count();
    if n == 0 {
        return 0;
    }
    let f = RibbonGraph::of_diagram(d).face_count();
    // V - E + F = 2 - 2g with V = n, E = 2n.
    (n + 2 - f) / 2
}

/// Interlacement adjacency matrix of the chords.
pub fn interlacement(d: &GaussDiagram) -> Vec<Vec<bool>> {
    let pos = d.positions();
    let n = pos.len();
    let mut m = vec![vec![false; n]; n];
    for a in 0..n {
        for b in a + 1..n {
            let x = interlaced(pos[a], pos[b]);
            m[a][b] = x;
            m[b][a] = x;
        }
    }
    m
}

/// Whether two chords, given by their endpoint positions, interleave.
pub fn interlaced(a: (usize, usize), b: (usize, usize)) -> bool {
    let (lo, hi) = if a.0 < a.1 { (a.0, a.1) } else { (a.1, a.0) };
    let inside = |p: usize| lo < p && p < hi;
    inside(b.0) != inside(b.1)
}

/// Every chord interlaces an even number of chords.
pub fn evenly_interlaced(m: &[Vec<bool>]) -> bool {
    m.iter().all(|row| row.iter().filter(|&&x| x).count() % 2 == 0)
}

/// Rosenstiehl's criterion on an interlacement graph: the graph is Eulerian,
/// non-adjacent vertices share an even number of neighbours, and the edges
/// whose endpoints share an even number of neighbours form a cut.
pub fn rosenstiehl(m: &[Vec<bool>]) -> bool {
    let n = m.len();
    if !evenly_interlaced(m) {
        return false;
    }
    let common = |u: usize, v: usize| (0..n).filter(|&w| m[u][w] && m[v][w]).count();
    for u in 0..n {
        for v in u + 1..n {
            if !m[u][v] && common(u, v) % 2 == 1 {
                return false;
            }
        }
    }
    // 2-colour so that cut edges join different colours and the other edges
    // join equal colours.
    let mut colour = vec![u8::MAX; n];
    for s in 0..n {
        if colour[s] != u8::MAX {
            continue;
        }
        colour[s] = 0;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if !m[u][v] {
                    continue;
                }
                let cut = common(u, v) % 2 == 0;
                let want = colour[u] ^ cut as u8;
                if colour[v] == u8::MAX {
                    colour[v] = want;
                    stack.push(v);
                } else if colour[v] != want {
                    return false;
                }
            }
        }
    }
    true
}

/// True iff `d` is the Gauss diagram of a planar knot diagram.
pub fn is_realizable(d: &GaussDiagram) -> bool {
    if d.arrow_count() == 0 {
        return true;
    }
    let m = interlacement(d);
    evenly_interlaced(&m) && rosenstiehl(&m) && ribbon_genus(d) == 0
}
