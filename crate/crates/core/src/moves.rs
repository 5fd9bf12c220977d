//! Reidemeister moves on Gauss diagrams and bounded equivalence search.
//!
//! Virtual moves do not change the Gauss diagram, so only the classical
//! moves appear here. Positions and gaps in a [`MoveApplication`] refer to
//! the stored rotation of the diagram it was enumerated on. Gap `g` is the
//! point of the circle just before position `g`.
//!
//! R1 adds or removes an arrow whose endpoints are adjacent, in either order
//! and with either sign.
//!
//! R2 adds or removes two arrows of opposite signs whose over endpoints are
//! adjacent and whose under endpoints are adjacent. The under pair may run in
//! the same order as the over pair (parallel strands) or reversed.
//!
//! R3 acts on three arrows whose six endpoints form three disjoint adjacent
//! pairs, one pair per strand of a triangle. The move swaps the two
//! endpoints of every pair. Which triangles are allowed is decided by
//! [`r3_table`]: every oriented, signed triangle made by three straight lines
//! in the plane, over all heights and directions (48 configurations). The
//! whole table is used as the generating set.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::gauss::{Endpoint, GaussDiagram, Label, Role, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    R1Add,
    R1Remove,
    R2Add,
    R2Remove,
    R3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveApplication {
    /// Insert a new arrow at `gap`, under endpoint first if `under_first`.
    R1Add { gap: usize, under_first: bool, sign: Sign },
    R1Remove { label: Label },
    /// Insert arrows A (sign `sign`) and B (opposite sign). The over
    /// endpoints `O_A, O_B` go into `over_gap` and the under endpoints into
    /// `under_gap`, as `U_A, U_B` or, if `antiparallel`, `U_B, U_A`. When
    /// both gaps coincide, `unders_first` puts the under pair first.
    R2Add {
        over_gap: usize,
        under_gap: usize,
        antiparallel: bool,
        sign: Sign,
        unders_first: bool,
    },
    R2Remove { first: Label, second: Label },
    /// Start positions of the three adjacent pairs, ascending.
    R3 { segments: [usize; 3] },
}

impl MoveApplication {
    pub fn kind(&self) -> MoveKind {
        match self {
            MoveApplication::R1Add { .. } => MoveKind::R1Add,
            MoveApplication::R1Remove { .. } => MoveKind::R1Remove,
            MoveApplication::R2Add { .. } => MoveKind::R2Add,
            MoveApplication::R2Remove { .. } => MoveKind::R2Remove,
            MoveApplication::R3 { .. } => MoveKind::R3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("move does not apply at this site")]
    InvalidSite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBounds {
    /// Largest arrow count an Add move may produce.
    pub max_crossings: usize,
    /// Largest number of distinct diagrams the search may record.
    pub max_states: usize,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            max_crossings: 6,
            max_states: 100_000,
        }
    }
}

/// Every move applicable to `d` within the crossing cap.
pub fn enumerate_moves(d: &GaussDiagram, bounds: &SearchBounds) -> Vec<MoveApplication> {
    let mut out = Vec::new();
    let n = d.arrow_count();
    let m = d.len();
    let word = d.word();
    let gaps = m.max(1);

    for k in 0..m {
        let (a, b) = (word[k], word[(k + 1) % m]);
        if a.arrow == b.arrow && m > 0 && (m > 2 || k == 0) {
            out.push(MoveApplication::R1Remove {
                label: Label::from_index(a.arrow),
            });
        }
    }

    let pos = d.positions();
    let signs = d.signs();
    for a in 0..n {
        for b in a + 1..n {
            if signs[a] != signs[b] && r2_pair(&pos, m, a, b) {
                out.push(MoveApplication::R2Remove {
                    first: Label::from_index(a),
                    second: Label::from_index(b),
                });
            }
        }
    }

    for segments in r3_sites(d) {
        out.push(MoveApplication::R3 { segments });
    }

    if n < bounds.max_crossings {
        for gap in 0..gaps {
            for under_first in [false, true] {
                for sign in [Sign::Plus, Sign::Minus] {
                    out.push(MoveApplication::R1Add {
                        gap,
                        under_first,
                        sign,
                    });
                }
            }
        }
    }
    if n + 1 < bounds.max_crossings {
        for over_gap in 0..gaps {
            for under_gap in 0..gaps {
                let orders: &[bool] = if over_gap == under_gap { &[false, true] } else { &[false] };
                for &unders_first in orders {
                    for antiparallel in [false, true] {
                        for sign in [Sign::Plus, Sign::Minus] {
                            out.push(MoveApplication::R2Add {
                                over_gap,
                                under_gap,
                                antiparallel,
                                sign,
                                unders_first,
                            });
                        }
                    }
                }
            }
        }
    }
    out
}

fn adjacent(m: usize, p: usize, q: usize) -> bool {
    (p + 1) % m == q || (q + 1) % m == p
}

fn r2_pair(pos: &[(usize, usize)], m: usize, a: usize, b: usize) -> bool {
    adjacent(m, pos[a].0, pos[b].0) && adjacent(m, pos[a].1, pos[b].1)
}

pub fn apply_move(d: &GaussDiagram, mv: &MoveApplication) -> Result<GaussDiagram, MoveError> {
    let m = d.len();
    let n = d.arrow_count();
    let word = d.word();
    match *mv {
        MoveApplication::R1Remove { label } => {
            let a = d.check_label(label).map_err(|_| MoveError::InvalidSite)?;
            let (o, u) = d.positions()[a];
            if !adjacent(m, o, u) {
                return Err(MoveError::InvalidSite);
            }
            Ok(remove_arrows(d, &[a]))
        }
        MoveApplication::R2Remove { first, second } => {
            let a = d.check_label(first).map_err(|_| MoveError::InvalidSite)?;
            let b = d.check_label(second).map_err(|_| MoveError::InvalidSite)?;
            if a == b || d.signs()[a] == d.signs()[b] || !r2_pair(&d.positions(), m, a, b) {
                return Err(MoveError::InvalidSite);
            }
            Ok(remove_arrows(d, &[a, b]))
        }
        MoveApplication::R1Add {
            gap,
            under_first,
            sign,
        } => {
            if gap >= m.max(1) {
                return Err(MoveError::InvalidSite);
            }
            let (r1, r2) = if under_first {
                (Role::Under, Role::Over)
            } else {
                (Role::Over, Role::Under)
            };
            let mut w = word.to_vec();
            w.splice(
                gap..gap,
                [Endpoint { arrow: n, role: r1 }, Endpoint { arrow: n, role: r2 }],
            );
            let mut s = d.signs().to_vec();
            s.push(sign);
            Ok(GaussDiagram::from_parts(w, s))
        }
        MoveApplication::R2Add {
            over_gap,
            under_gap,
            antiparallel,
            sign,
            unders_first,
        } => {
            let gaps = m.max(1);
            if over_gap >= gaps || under_gap >= gaps || (unders_first && over_gap != under_gap) {
                return Err(MoveError::InvalidSite);
            }
            let (a, b) = (n, n + 1);
            let overs = [
                Endpoint { arrow: a, role: Role::Over },
                Endpoint { arrow: b, role: Role::Over },
            ];
            let mut unders = [
                Endpoint { arrow: a, role: Role::Under },
                Endpoint { arrow: b, role: Role::Under },
            ];
            if antiparallel {
                unders.swap(0, 1);
            }
            let mut w: Vec<Endpoint> = Vec::with_capacity(m + 4);
            for g in 0..=m {
                if g == over_gap && g == under_gap {
                    if unders_first {
                        w.extend_from_slice(&unders);
                        w.extend_from_slice(&overs);
                    } else {
                        w.extend_from_slice(&overs);
                        w.extend_from_slice(&unders);
                    }
                } else if g == over_gap {
                    w.extend_from_slice(&overs);
                } else if g == under_gap {
                    w.extend_from_slice(&unders);
                }
                if g < m {
                    w.push(word[g]);
                }
            }
            let mut s = d.signs().to_vec();
            s.push(sign);
            s.push(sign.flip());
            Ok(GaussDiagram::from_parts(w, s))
        }
        MoveApplication::R3 { segments } => {
            if !r3_valid(d, segments) {
                return Err(MoveError::InvalidSite);
            }
            let mut w = word.to_vec();
            for p in segments {
                w.swap(p, (p + 1) % m);
            }
            Ok(GaussDiagram::from_parts(w, d.signs().to_vec()))
        }
    }
}

fn remove_arrows(d: &GaussDiagram, arrows: &[usize]) -> GaussDiagram {
    let w = d
        .word()
        .iter()
        .copied()
        .filter(|e| !arrows.contains(&e.arrow))
        .collect();
    GaussDiagram::from_parts(w, d.signs().to_vec())
}

/// One planar R3 configuration: for each of the three lines, the two
/// crossings it meets in its direction of travel with its role at each, and
/// the sign of each crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct R3Config {
    pub lines: [[(usize, Role); 2]; 3],
    pub signs: [Sign; 3],
}

/// All 48 oriented, signed triangles of three lines.
///
/// Lines: `y = 0`, `x = 0`, `x + y = 1`, meeting at crossings 0 = (0,0)
/// (lines 0,1), 1 = (1,0) (lines 0,2), 2 = (0,1) (lines 1,2). Each line gets
/// a direction and a height; the higher line is over at each crossing and
/// the sign is that of the cross product of over and under directions.
pub fn r3_table() -> Vec<R3Config> {
    const BASE: [(i64, i64); 3] = [(1, 0), (0, 1), (1, -1)];
    const POINTS: [(i64, i64); 3] = [(0, 0), (1, 0), (0, 1)];
    // crossing -> the two lines through it
    const ON: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];
    const HEIGHTS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let mut out = Vec::with_capacity(48);
    for dirs in 0..8u32 {
        let dir = |l: usize| {
            let f = if dirs >> l & 1 == 1 { -1 } else { 1 };
            (BASE[l].0 * f, BASE[l].1 * f)
        };
        for h in HEIGHTS {
            let mut signs = [Sign::Plus; 3];
            for (c, &(l1, l2)) in ON.iter().enumerate() {
                let (over, under) = if h[l1] > h[l2] { (l1, l2) } else { (l2, l1) };
                let (a, b) = (dir(over), dir(under));
                signs[c] = Sign::from_value(a.0 * b.1 - a.1 * b.0);
            }
            let mut lines = [[(0, Role::Over); 2]; 3];
            for (l, line) in lines.iter_mut().enumerate() {
                let mut hits: Vec<(i64, usize, Role)> = ON
                    .iter()
                    .enumerate()
                    .filter(|(_, &(a, b))| a == l || b == l)
                    .map(|(c, &(a, b))| {
                        let other = if a == l { b } else { a };
                        let role = if h[l] > h[other] { Role::Over } else { Role::Under };
                        let dl = dir(l);
                        (POINTS[c].0 * dl.0 + POINTS[c].1 * dl.1, c, role)
                    })
                    .collect();
                hits.sort();
                *line = [(hits[0].1, hits[0].2), (hits[1].1, hits[1].2)];
            }
            out.push(R3Config { lines, signs });
        }
    }
    out
}

/// Triples of disjoint adjacent position pairs whose arrows form a triangle.
fn triangle_candidates(d: &GaussDiagram) -> Vec<[usize; 3]> {
    let m = d.len();
    let w = d.word();
    if m < 6 {
        return Vec::new();
    }
    let segs: Vec<usize> = (0..m)
        .filter(|&p| w[p].arrow != w[(p + 1) % m].arrow)
        .collect();
    let pair = |p: usize| {
        let (a, b) = (w[p].arrow, w[(p + 1) % m].arrow);
        (a.min(b), a.max(b))
    };
    let disjoint = |p: usize, q: usize| p != q && (p + 1) % m != q && (q + 1) % m != p;
    let mut out = Vec::new();
    for (i, &p) in segs.iter().enumerate() {
        let (a, b) = pair(p);
        for (j, &q) in segs.iter().enumerate().skip(i + 1) {
            if !disjoint(p, q) {
                continue;
            }
            let (c, e) = pair(q);
            // q must share exactly one arrow with p
            let shared = [c, e].iter().filter(|&&x| x == a || x == b).count();
            if shared != 1 {
                continue;
            }
            let third_new = if c == a || c == b { e } else { c };
            let third_old = if c == a || c == b { if c == a { b } else { a } } else if e == a { b } else { a };
            let want = (third_new.min(third_old), third_new.max(third_old));
            for &r in segs.iter().skip(j + 1) {
                if disjoint(p, r) && disjoint(q, r) && pair(r) == want {
                    out.push([p, q, r]);
                }
            }
        }
    }
    out
}

fn r3_valid(d: &GaussDiagram, segments: [usize; 3]) -> bool {
    let m = d.len();
    if m < 6 || segments.iter().any(|&p| p >= m) {
        return false;
    }
    let mut sorted = segments;
    sorted.sort_unstable();
    if sorted != segments || !triangle_candidates(d).contains(&segments) {
        return false;
    }
    matches_table(d, segments)
}

fn matches_table(d: &GaussDiagram, segments: [usize; 3]) -> bool {
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let m = d.len();
    let w = d.word();
    let signs = d.signs();
    let table = r3_table();
    for cfg in &table {
        for perm in PERMS {
            // segment perm[l] plays line l
            let mut arrow_of = [usize::MAX; 3];
            let mut ok = true;
            'lines: for l in 0..3 {
                let p = segments[perm[l]];
                for (k, e) in [w[p], w[(p + 1) % m]].into_iter().enumerate() {
                    let (c, role) = cfg.lines[l][k];
                    if e.role != role || signs[e.arrow] != cfg.signs[c] {
                        ok = false;
                        break 'lines;
                    }
                    if arrow_of[c] == usize::MAX {
                        arrow_of[c] = e.arrow;
                    } else if arrow_of[c] != e.arrow {
                        ok = false;
                        break 'lines;
                    }
                }
            }
            if ok {
                return true;
            }
        }
    }
    false
}

fn r3_sites(d: &GaussDiagram) -> Vec<[usize; 3]> {
    triangle_candidates(d)
        .into_iter()
        .filter(|&s| matches_table(d, s))
        .collect()
}

/// Per-move statistics of a finished search.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Distinct canonical diagrams recorded.
    pub visited: usize,
    /// Diagrams whose moves were enumerated.
    pub expanded: usize,
    /// Move count of the deepest expanded diagram.
    pub depth: usize,
    pub stop: StopReason,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum StopReason {
    /// Every diagram within the crossing cap was explored.
    #[default]
    Complete,
    StateLimit,
    Interrupted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    /// Moves to apply in order, each to the canonical form of the previous
    /// diagram (see [`replay_path`]).
    Equivalent { path: Vec<MoveApplication>, stats: SearchStats },
    Exhausted { stats: SearchStats },
}

/// Applies `path` starting from `source`, canonicalizing before each step.
pub fn replay_path(source: &GaussDiagram, path: &[MoveApplication]) -> Result<GaussDiagram, MoveError> {
    let mut d = source.canonical();
    for mv in path {
        d = apply_move(&d, mv)?.canonical();
    }
    Ok(d)
}

pub fn bounded_equiv_search(source: &GaussDiagram, target: &GaussDiagram, bounds: &SearchBounds) -> SearchOutcome {
    bounded_equiv_search_with(source, target, bounds, &mut || false)
}

/// Breadth-first search over canonical diagrams. `interrupt` is polled once
/// per expanded diagram; returning `true` stops the search.
pub fn bounded_equiv_search_with(
    source: &GaussDiagram,
    target: &GaussDiagram,
    bounds: &SearchBounds,
    interrupt: &mut dyn FnMut() -> bool,
) -> SearchOutcome {
    struct Node {
        diagram: GaussDiagram,
        parent: usize,
        mv: Option<MoveApplication>,
        depth: usize,
    }
    let goal = target.canonical_key();
    let start = source.canonical();
    let mut stats = SearchStats::default();
    let mut nodes = vec![Node {
        diagram: start.clone(),
        parent: usize::MAX,
        mv: None,
        depth: 0,
    }];
    let mut index: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    index.insert(start.canonical_key(), 0);

    let path_to = |nodes: &[Node], mut i: usize| {
        let mut path = Vec::new();
        while let Some(mv) = nodes[i].mv {
            path.push(mv);
            i = nodes[i].parent;
        }
        path.reverse();
        path
    };

    if start.canonical_key() == goal {
        stats.visited = 1;
        return SearchOutcome::Equivalent { path: Vec::new(), stats };
    }
    let mut head = 0;
    while head < nodes.len() {
        if interrupt() {
            stats.stop = StopReason::Interrupted;
            break;
        }
        let d = nodes[head].diagram.clone();
        let depth = nodes[head].depth;
        stats.expanded += 1;
        stats.depth = depth;
        for mv in enumerate_moves(&d, bounds) {
            let next = apply_move(&d, &mv).expect("enumerated move applies").canonical();
            let key = next.canonical_key();
            if index.contains_key(&key) {
                continue;
            }
            index.insert(key.clone(), nodes.len());
            nodes.push(Node {
                diagram: next,
                parent: head,
                mv: Some(mv),
                depth: depth + 1,
            });
            if key == goal {
                stats.visited = nodes.len();
                let path = path_to(&nodes, nodes.len() - 1);
                return SearchOutcome::Equivalent { path, stats };
            }
            if nodes.len() >= bounds.max_states {
                stats.visited = nodes.len();
                stats.stop = StopReason::StateLimit;
                return SearchOutcome::Exhausted { stats };
            }
        }
        head += 1;
    }
    stats.visited = nodes.len();
    SearchOutcome::Exhausted { stats }
}
