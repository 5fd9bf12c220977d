//! Free knots, framed four-valent graphs and smoothings.
//!
//! A free knot diagram is a Gauss diagram with signs and directions erased:
//! a perfect matching on `2n` points of a circle. Its text form uses tokens
//! `X<label>`, e.g. `X1,X2,X1,X2`.
//!
//! A [`FramedGraph`] stores half-edges in blocks of four per vertex. Half-edge
//! `4v + k` is slot `k` of vertex `v`, and slots `k` and `k ^ 2` are opposite
//! (the framing). Walking through a vertex always continues on the opposite
//! slot. Vertexless closed curves are kept as a count of free loops.
//!
//! Smoothing conventions: choice A joins slots (0,1) and (2,3), choice B
//! joins (0,3) and (1,2). In the graph of a chord diagram the first visit to
//! a chord arrives on slot 0 and leaves on slot 2, and the second visit
//! arrives on slot 1 and leaves on slot 3. Smoothing a single chord with A
//! leaves one curve and with B leaves two.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::gauss::GaussDiagram;
use crate::realize::interlaced;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FreeError {
    #[error("label {0} must appear exactly twice")]
    UnmatchedLabel(u32),
    #[error("syntax error in token {0}")]
    SyntaxError(usize),
    #[error("no vertex {0}")]
    InvalidVertex(usize),
    #[error("move does not apply at this site")]
    InvalidSite,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FreeKnotDiagram {
    mate: Vec<usize>,
}

impl FreeKnotDiagram {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a diagram from a position matching. Panics unless `mate` is a
    /// fixed-point-free involution.
    pub fn from_mates(mate: Vec<usize>) -> Self {
        for (i, &j) in mate.iter().enumerate() {
            assert!(j < mate.len() && j != i && mate[j] == i, "not a perfect matching");
        }
        FreeKnotDiagram { mate }
    }

    pub fn from_chords(m: usize, chords: &[(usize, usize)]) -> Self {
        let mut mate = vec![usize::MAX; m];
        for &(a, b) in chords {
            mate[a] = b;
            mate[b] = a;
        }
        Self::from_mates(mate)
    }

    /// Chord labels in circle order (any integers, each used twice).
    pub fn from_labels(labels: &[u32]) -> Result<Self, FreeError> {
        let mut mate = vec![usize::MAX; labels.len()];
        for i in 0..labels.len() {
            let others: Vec<usize> = (0..labels.len()).filter(|&j| labels[j] == labels[i]).collect();
            if others.len() != 2 {
                return Err(FreeError::UnmatchedLabel(labels[i]));
            }
            mate[i] = if others[0] == i { others[1] } else { others[0] };
        }
        Ok(FreeKnotDiagram { mate })
    }

    pub fn parse(text: &str) -> Result<Self, FreeError> {
        if text.is_empty() {
            return Ok(Self::empty());
        }
        let labels = text
            .split(',')
            .enumerate()
            .map(|(i, tok)| {
                let digits = tok.strip_prefix('X').ok_or(FreeError::SyntaxError(i))?;
                if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(FreeError::SyntaxError(i));
                }
                match digits.parse::<u32>() {
                    Ok(0) | Err(_) => Err(FreeError::SyntaxError(i)),
                    Ok(v) => Ok(v),
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_labels(&labels)
    }

    pub fn project(d: &GaussDiagram) -> Self {
        let mut mate = vec![0; d.len()];
        for (o, u) in d.positions() {
            mate[o] = u;
            mate[u] = o;
        }
        FreeKnotDiagram { mate }
    }

    pub fn len(&self) -> usize {
        self.mate.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mate.is_empty()
    }

    pub fn chord_count(&self) -> usize {
        self.mate.len() / 2
    }

    pub fn mates(&self) -> &[usize] {
        &self.mate
    }

    /// Chords as `(first, second)` position pairs, by first position.
    pub fn chords(&self) -> Vec<(usize, usize)> {
        (0..self.mate.len())
            .filter(|&i| i < self.mate[i])
            .map(|i| (i, self.mate[i]))
            .collect()
    }

    /// Labels by first appearance, as they would be printed.
    pub fn labels(&self) -> Vec<u32> {
        let mut lab = vec![0u32; self.mate.len()];
        let mut next = 1;
        for i in 0..self.mate.len() {
            if lab[i] == 0 {
                lab[i] = next;
                lab[self.mate[i]] = next;
                next += 1;
            }
        }
        lab
    }

    pub fn raw_code(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        for (i, l) in self.labels().into_iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            let _ = write!(s, "X{l}");
        }
        s
    }

    pub fn to_code(&self) -> String {
        self.canonical().raw_code()
    }

    pub fn rotate(&self, k: usize) -> Self {
        let m = self.mate.len();
        if m == 0 {
            return self.clone();
        }
        let mate = (0..m).map(|i| (self.mate[(i + k) % m] + m - k % m) % m).collect();
        FreeKnotDiagram { mate }
    }

    pub fn reflect(&self) -> Self {
        let m = self.mate.len();
        let mate = (0..m).map(|i| m - 1 - self.mate[m - 1 - i]).collect();
        FreeKnotDiagram { mate }
    }

    fn offsets(&self) -> Vec<usize> {
        let m = self.mate.len();
        (0..m).map(|i| (self.mate[i] + m - i) % m).collect()
    }

    /// Least rotation, compared on the sequence of offsets to mates.
    pub fn canonical(&self) -> Self {
        let m = self.mate.len();
        let off = self.offsets();
        let best = (0..m)
            .min_by(|&a, &b| (0..m).map(|i| off[(a + i) % m]).cmp((0..m).map(|i| off[(b + i) % m])))
            .unwrap_or(0);
        self.rotate(best)
    }

    /// Canonical form up to rotation and reflection.
    pub fn dihedral_canonical(&self) -> Self {
        let a = self.canonical();
        let b = self.reflect().canonical();
        if a.offsets() <= b.offsets() {
            a
        } else {
            b
        }
    }

    pub fn equal_up_to_rotation(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }

    /// Number of chords each chord interlaces, indexed by first position.
    pub fn link_counts(&self) -> Vec<usize> {
        let ch = self.chords();
        ch.iter()
            .map(|&a| ch.iter().filter(|&&b| b != a && interlaced(a, b)).count())
            .collect()
    }

    pub fn all_chords_odd(&self) -> bool {
        self.link_counts().iter().all(|c| c % 2 == 1)
    }

    pub fn to_framed_graph(&self) -> FramedGraph {
        let m = self.mate.len();
        if m == 0 {
            return FramedGraph {
                mate: Vec::new(),
                free_loops: 1,
            };
        }
        // vertex of each chord and whether position i is its first visit
        let mut vertex = vec![usize::MAX; m];
        let mut first = vec![false; m];
        let mut v = 0;
        for i in 0..m {
            if vertex[i] == usize::MAX {
                vertex[i] = v;
                vertex[self.mate[i]] = v;
                first[i] = true;
                v += 1;
            }
        }
        let arrive = |i: usize| 4 * vertex[i] + if first[i] { 0 } else { 1 };
        let depart = |i: usize| 4 * vertex[i] + if first[i] { 2 } else { 3 };
        let mut mate = vec![0; 2 * m];
        for i in 0..m {
            let a = depart(i);
            let b = arrive((i + 1) % m);
            mate[a] = b;
            mate[b] = a;
        }
        FramedGraph { mate, free_loops: 0 }
    }
}

impl fmt::Display for FreeKnotDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_code())
    }
}

/// Projection of a Gauss diagram to its free knot diagram.
pub fn project(d: &GaussDiagram) -> FreeKnotDiagram {
    FreeKnotDiagram::project(d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SmoothingChoice {
    A,
    B,
}

impl SmoothingChoice {
    /// Partner slot of `k` inside a smoothed vertex.
    fn partner(self, k: usize) -> usize {
        match self {
            SmoothingChoice::A => k ^ 1,
            SmoothingChoice::B => 3 - k,
        }
    }
}

/// Vertices to smooth with their choices. Vertices not listed are kept.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Smoothing {
    pub choices: Vec<(usize, SmoothingChoice)>,
}

/// Four-valent graph with opposite-pair framing and a count of vertexless
/// closed curves.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FramedGraph {
    mate: Vec<usize>,
    free_loops: usize,
}

impl FramedGraph {
    pub fn from_parts(mate: Vec<usize>, free_loops: usize) -> Self {
        assert!(mate.len().is_multiple_of(4));
        for (i, &j) in mate.iter().enumerate() {
            assert!(j < mate.len() && mate[j] == i && j != i, "edges must pair half-edges");
        }
        FramedGraph { mate, free_loops }
    }

    pub fn vertex_count(&self) -> usize {
        self.mate.len() / 4
    }

    pub fn edge_count(&self) -> usize {
        self.mate.len() / 2
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn half_edge_mates(&self) -> &[usize] {
        &self.mate
    }

    pub fn smooth(&self, s: &Smoothing) -> Result<FramedGraph, FreeError> {
        let v = self.vertex_count();
        let mut choice: Vec<Option<SmoothingChoice>> = vec![None; v];
        for &(x, c) in &s.choices {
            if x >= v || choice[x].is_some() {
                return Err(FreeError::InvalidVertex(x));
            }
            choice[x] = Some(c);
        }
        let mut renumber = vec![usize::MAX; v];
        let mut kept = 0;
        for x in 0..v {
            if choice[x].is_none() {
                renumber[x] = kept;
                kept += 1;
            }
        }
        let new_id = |h: usize| 4 * renumber[h / 4] + h % 4;
        let mut mate = vec![usize::MAX; 4 * kept];
        let mut used = vec![false; self.mate.len()];
        for h in 0..self.mate.len() {
            if choice[h / 4].is_some() || mate[new_id(h)] != usize::MAX {
                continue;
            }
            // follow the edge through smoothed vertices
            let mut x = self.mate[h];
            while let Some(c) = choice[x / 4] {
                used[x] = true;
                let y = 4 * (x / 4) + c.partner(x % 4);
                used[y] = true;
                x = self.mate[y];
            }
            mate[new_id(h)] = new_id(x);
            mate[new_id(x)] = new_id(h);
        }
        let mut loops = self.free_loops;
        for h in 0..self.mate.len() {
            if choice[h / 4].is_none() || used[h] {
                continue;
            }
            loops += 1;
            let mut x = h;
            while !used[x] {
                used[x] = true;
                let y = 4 * (x / 4) + choice[x / 4].unwrap().partner(x % 4);
                used[y] = true;
                x = self.mate[y];
            }
        }
        Ok(FramedGraph {
            mate,
            free_loops: loops,
        })
    }

    /// Closed curves obtained by going straight through every vertex.
    pub fn unicursal_components(&self) -> usize {
        self.circuits().len() + self.free_loops
    }

    /// Each straight-ahead circuit as its sequence of half-edges, taken in
    /// arrive/depart pairs.
    fn circuits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.mate.len()];
        let mut out = Vec::new();
        for h in 0..self.mate.len() {
            if seen[h] {
                continue;
            }
            let mut c = Vec::new();
            let mut x = h;
            // x is a departure; its mate is the next arrival
            while !seen[x] {
                let y = self.mate[x];
                seen[x] = true;
                seen[y] = true;
                c.push(y);
                x = y ^ 2;
            }
            out.push(c);
        }
        out
    }

    /// For a graph with one straight-ahead circuit and no free loops, the
    /// chord diagram read along it.
    pub fn circuit_diagram(&self) -> Option<FreeKnotDiagram> {
        if self.free_loops != 0 {
            return None;
        }
        let circuits = self.circuits();
        if self.vertex_count() == 0 {
            return None;
        }
        if circuits.len() != 1 {
            return None;
        }
        let labels: Vec<u32> = circuits[0].iter().map(|&h| (h / 4) as u32 + 1).collect();
        FreeKnotDiagram::from_labels(&labels).ok()
    }
}

/// The eight slot permutations of a vertex that keep opposite slots opposite.
const LOCAL_MAPS: [[usize; 4]; 8] = [
    [0, 1, 2, 3],
    [1, 2, 3, 0],
    [2, 3, 0, 1],
    [3, 0, 1, 2],
    [0, 3, 2, 1],
    [1, 0, 3, 2],
    [2, 1, 0, 3],
    [3, 2, 1, 0],
];

/// Isomorphism of framed graphs: a vertex bijection with framing-preserving
/// slot maps carrying edges to edges, and equal free-loop counts.
pub fn framed_iso(g1: &FramedGraph, g2: &FramedGraph) -> bool {
    if g1.vertex_count() != g2.vertex_count() || g1.free_loops != g2.free_loops {
        return false;
    }
    if g1.unicursal_components() != g2.unicursal_components() {
        return false;
    }
    if let (Some(a), Some(b)) = (g1.circuit_diagram(), g2.circuit_diagram()) {
        return a.dihedral_canonical() == b.dihedral_canonical();
    }
    framed_iso_search(g1, g2)
}

/// Backtracking search for a framed isomorphism, ignoring free loops.
pub fn framed_iso_search(g1: &FramedGraph, g2: &FramedGraph) -> bool {
    let v = g1.vertex_count();
    if v != g2.vertex_count() || g1.free_loops != g2.free_loops {
        return false;
    }
    let mut hmap = vec![usize::MAX; 4 * v];
    let mut used = vec![false; v];
    extend_iso(g1, g2, &mut hmap, &mut used)
}

fn extend_iso(g1: &FramedGraph, g2: &FramedGraph, hmap: &mut [usize], used: &mut [bool]) -> bool {
    let v = g1.vertex_count();
    // next vertex: one whose half-edge is adjacent to a mapped one, else any
    let mut next = None;
    for h in 0..4 * v {
        if hmap[h] != usize::MAX && hmap[g1.mate[h]] == usize::MAX {
            next = Some((g1.mate[h] / 4, Some(g2.mate[hmap[h]] / 4)));
            break;
        }
    }
    if next.is_none() {
        next = (0..v).find(|&x| hmap[4 * x] == usize::MAX).map(|x| (x, None));
    }
    let Some((x, forced)) = next else {
        return true;
    };
    let targets: Vec<usize> = match forced {
        Some(w) => vec![w],
        None => (0..v).filter(|&w| !used[w]).collect(),
    };
    for w in targets {
        if used[w] {
            continue;
        }
        for map in LOCAL_MAPS {
            let ok = (0..4).all(|k| {
                let h = 4 * x + k;
                let img = 4 * w + map[k];
                let m = g1.mate[h];
                let mi = if m / 4 == x {
                    4 * w + map[m % 4]
                } else {
                    hmap[m]
                };
                mi == usize::MAX || g2.mate[img] == mi
            });
            if !ok {
                continue;
            }
            for k in 0..4 {
                hmap[4 * x + k] = 4 * w + map[k];
            }
            used[w] = true;
            if extend_iso(g1, g2, hmap, used) {
                return true;
            }
            used[w] = false;
            for k in 0..4 {
                hmap[4 * x + k] = usize::MAX;
            }
        }
    }
    false
}

/// Whether some smoothing of the candidate's graph is isomorphic to the
/// pattern's graph. Only subsets leaving exactly as many vertices as the
/// pattern has are tried.
pub fn contains_smoothing_isomorphic_to(candidate: &FreeKnotDiagram, pattern: &FreeKnotDiagram) -> bool {
    let nc = candidate.chord_count();
    let np = pattern.chord_count();
    if np > nc {
        return false;
    }
    let gc = candidate.to_framed_graph();
    let gp = pattern.to_framed_graph();
    let k = nc - np;
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        for bits in 0..(1u32 << k) {
            let s = Smoothing {
                choices: subset
                    .iter()
                    .enumerate()
                    .map(|(i, &x)| {
                        let c = if bits >> i & 1 == 1 { SmoothingChoice::B } else { SmoothingChoice::A };
                        (x, c)
                    })
                    .collect(),
            };
            let g = gc.smooth(&s).expect("subset of vertices");
            if g.unicursal_components() == gp.unicursal_components() && framed_iso(&g, &gp) {
                return true;
            }
        }
        if !next_subset(&mut subset, nc) {
            return false;
        }
    }
}

/// Advances a sorted k-subset of `0..n` in lexicographic order.
fn next_subset(s: &mut [usize], n: usize) -> bool {
    let k = s.len();
    for i in (0..k).rev() {
        if s[i] < n - k + i {
            s[i] += 1;
            for j in i + 1..k {
                s[j] = s[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FreeMove {
    /// Insert an isolated chord at `gap`.
    R1Add { gap: usize },
    /// Remove the chord through position `position`, whose ends are adjacent.
    R1Remove { position: usize },
    /// Insert chords A, B: `A, B` at `gap1` and `A, B` (or `B, A` if
    /// `crossed` is false) at `gap2`. When the gaps coincide the second pair
    /// follows the first.
    R2Add { gap1: usize, gap2: usize, crossed: bool },
    /// Remove the two chords through `first` and `second`.
    R2Remove { first: usize, second: usize },
    /// Swap the two points in each of three adjacent pairs forming a triangle.
    R3 { segments: [usize; 3] },
}

pub fn free_moves(f: &FreeKnotDiagram, max_chords: usize) -> Vec<FreeMove> {
    let m = f.len();
    let n = f.chord_count();
    let mut out = Vec::new();
    for (a, b) in f.chords() {
        if adjacent(m, a, b) {
            out.push(FreeMove::R1Remove { position: a });
        }
    }
    for (first, second) in r2_sites(f) {
        out.push(FreeMove::R2Remove { first, second });
    }
    for segments in free_triangles(f) {
        out.push(FreeMove::R3 { segments });
    }
    let gaps = m.max(1);
    if n < max_chords {
        for gap in 0..gaps {
            out.push(FreeMove::R1Add { gap });
        }
    }
    if n + 1 < max_chords {
        for gap1 in 0..gaps {
            for gap2 in 0..gaps {
                for crossed in [false, true] {
                    out.push(FreeMove::R2Add { gap1, gap2, crossed });
                }
            }
        }
    }
    out
}

fn adjacent(m: usize, p: usize, q: usize) -> bool {
    m > 1 && ((p + 1) % m == q || (q + 1) % m == p)
}

/// Pairs of chords (by first position) whose four ends form two adjacent
/// pairs, one end of each chord in each pair.
pub fn r2_sites(f: &FreeKnotDiagram) -> Vec<(usize, usize)> {
    let m = f.len();
    let ch = f.chords();
    let mut out = Vec::new();
    for (i, &(a1, a2)) in ch.iter().enumerate() {
        for &(b1, b2) in &ch[i + 1..] {
            let ok = (adjacent(m, a1, b1) && adjacent(m, a2, b2)) || (adjacent(m, a1, b2) && adjacent(m, a2, b1));
            if ok {
                out.push((a1, b1));
            }
        }
    }
    out
}

/// Triples of disjoint adjacent pairs whose chords form a triangle.
pub fn free_triangles(f: &FreeKnotDiagram) -> Vec<[usize; 3]> {
    let m = f.len();
    if m < 6 {
        return Vec::new();
    }
    let chord = |p: usize| p.min(f.mate[p]);
    let segs: Vec<usize> = (0..m).filter(|&p| f.mate[p] != (p + 1) % m).collect();
    let pair = |p: usize| {
        let (a, b) = (chord(p), chord((p + 1) % m));
        (a.min(b), a.max(b))
    };
    let disjoint = |p: usize, q: usize| p != q && (p + 1) % m != q && (q + 1) % m != p;
    let mut out = BTreeSet::new();
    for (i, &p) in segs.iter().enumerate() {
        for (j, &q) in segs.iter().enumerate().skip(i + 1) {
            if !disjoint(p, q) {
                continue;
            }
            for &r in segs.iter().skip(j + 1) {
                if !disjoint(p, r) || !disjoint(q, r) {
                    continue;
                }
                let (a, b, c) = (pair(p), pair(q), pair(r));
                let mut all = [a.0, a.1, b.0, b.1, c.0, c.1];
                all.sort_unstable();
                let three = all[0] == all[1] && all[2] == all[3] && all[4] == all[5];
                if three && all[1] != all[2] && all[3] != all[4] && a != b && b != c && a != c {
                    out.insert([p, q, r]);
                }
            }
        }
    }
    out.into_iter().collect()
}

pub fn apply_free_move(f: &FreeKnotDiagram, mv: &FreeMove) -> Result<FreeKnotDiagram, FreeError> {
    let m = f.len();
    let labels = f.labels();
    let n = f.chord_count() as u32;
    let without = |drop: &[usize]| {
        let l: Vec<u32> = (0..m).filter(|p| !drop.contains(p)).map(|p| labels[p]).collect();
        FreeKnotDiagram::from_labels(&l).expect("still a matching")
    };
    match *mv {
        FreeMove::R1Remove { position } => {
            if position >= m || !adjacent(m, position, f.mate[position]) {
                return Err(FreeError::InvalidSite);
            }
            Ok(without(&[position, f.mate[position]]))
        }
        FreeMove::R2Remove { first, second } => {
            if first >= m || second >= m {
                return Err(FreeError::InvalidSite);
            }
            let (a, b) = (first.min(f.mate[first]), second.min(f.mate[second]));
            if !r2_sites(f).contains(&(a.min(b), a.max(b))) && !r2_sites(f).contains(&(a, b)) {
                return Err(FreeError::InvalidSite);
            }
            Ok(without(&[first, f.mate[first], second, f.mate[second]]))
        }
        FreeMove::R1Add { gap } => {
            if gap >= m.max(1) {
                return Err(FreeError::InvalidSite);
            }
            let mut l = labels.clone();
            l.splice(gap..gap, [n + 1, n + 1]);
            Ok(FreeKnotDiagram::from_labels(&l).unwrap())
        }
        FreeMove::R2Add { gap1, gap2, crossed } => {
            if gap1 >= m.max(1) || gap2 >= m.max(1) {
                return Err(FreeError::InvalidSite);
            }
            let (a, b) = (n + 1, n + 2);
            let second = if crossed { [a, b] } else { [b, a] };
            let mut l = Vec::with_capacity(m + 4);
            for g in 0..=m {
                if g == gap1 {
                    l.extend_from_slice(&[a, b]);
                }
                if g == gap2 {
                    l.extend_from_slice(&second);
                }
                if g < m {
                    l.push(labels[g]);
                }
            }
            Ok(FreeKnotDiagram::from_labels(&l).unwrap())
        }
        FreeMove::R3 { segments } => {
            if !free_triangles(f).contains(&segments) {
                return Err(FreeError::InvalidSite);
            }
            let mut l = labels;
            for p in segments {
                l.swap(p, (p + 1) % m);
            }
            Ok(FreeKnotDiagram::from_labels(&l).unwrap())
        }
    }
}

/// All chords odd and no decreasing free R2 move.
pub fn is_irreducibly_odd(f: &FreeKnotDiagram) -> bool {
    f.all_chords_odd() && r2_sites(f).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fk(s: &str) -> FreeKnotDiagram {
        FreeKnotDiagram::parse(s).unwrap()
    }

    #[test]
    fn projection_forgets_decorations() {
        let d = GaussDiagram::parse("O1+,U2-,O3+,U1+,O2-,U3+").unwrap();
        let f = project(&d);
        assert_eq!(f.to_code(), "X1,X2,X3,X1,X2,X3");
        for l in d.labels() {
            assert_eq!(project(&d.crossing_change(l).unwrap()), f);
            assert_eq!(project(&d.virtualize(l).unwrap()), f);
        }
        assert!(project(&GaussDiagram::empty()).is_empty());
    }

    #[test]
    fn free_code_grammar() {
        assert_eq!(fk("X5,X9,X5,X9").raw_code(), "X1,X2,X1,X2");
        assert_eq!(FreeKnotDiagram::parse("X1,X2"), Err(FreeError::UnmatchedLabel(1)));
        assert!(matches!(FreeKnotDiagram::parse("O1,O1"), Err(FreeError::SyntaxError(0))));
        assert!(matches!(FreeKnotDiagram::parse("X0,X0"), Err(FreeError::SyntaxError(0))));
    }

    #[test]
    fn framed_graph_counts() {
        let g = fk("X1,X1").to_framed_graph();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 2));
        let g = fk("X1,X2,X3,X1,X2,X3").to_framed_graph();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 6));
        assert_eq!(g.unicursal_components(), 1);
        assert_eq!(FreeKnotDiagram::empty().to_framed_graph().unicursal_components(), 1);
        assert_eq!(FramedGraph::from_parts(Vec::new(), 3).unicursal_components(), 3);
    }

    #[test]
    fn single_chord_smoothings() {
        let g = fk("X1,X1").to_framed_graph();
        assert_eq!(g.smooth(&Smoothing::default()).unwrap(), g);
        let a = g.smooth(&Smoothing { choices: vec![(0, SmoothingChoice::A)] }).unwrap();
        let b = g.smooth(&Smoothing { choices: vec![(0, SmoothingChoice::B)] }).unwrap();
        assert_eq!(a.unicursal_components(), 1);
        assert_eq!(b.unicursal_components(), 2);
        assert_eq!(
            g.smooth(&Smoothing { choices: vec![(1, SmoothingChoice::A)] }),
            Err(FreeError::InvalidVertex(1))
        );
    }

    #[test]
    fn iso_examples() {
        let sq = fk("X1,X2,X1,X2");
        assert!(framed_iso(&sq.to_framed_graph(), &sq.to_framed_graph()));
        assert!(framed_iso(&sq.to_framed_graph(), &sq.reflect().to_framed_graph()));
        assert!(!framed_iso(&fk("X1,X1").to_framed_graph(), &sq.to_framed_graph()));
    }

    #[test]
    fn r2_sites_and_moves() {
        // Two adjacent kinks also cancel in pairs.
        assert_eq!(r2_sites(&fk("X1,X1,X2,X2")).len(), 1);
        assert_eq!(r2_sites(&fk("X1,X2,X2,X1")).len(), 1);
        let all4 = FreeKnotDiagram::from_chords(8, &[(0, 4), (1, 5), (2, 6), (3, 7)]);
        assert!(r2_sites(&all4).contains(&(1, 2)));
        assert!(!is_irreducibly_odd(&all4));
        let trefoil = fk("X1,X2,X3,X1,X2,X3");
        assert!(!is_irreducibly_odd(&trefoil));
        let up = apply_free_move(&FreeKnotDiagram::empty(), &FreeMove::R1Add { gap: 0 }).unwrap();
        assert_eq!(up.to_code(), "X1,X1");
    }

    #[test]
    fn reproduced_examples() {
        let t = fk("X1,X2,X3,X1,X2,X3");
        assert!(contains_smoothing_isomorphic_to(&t, &t));
        let all4 = FreeKnotDiagram::from_chords(8, &[(0, 4), (1, 5), (2, 6), (3, 7)]);
        assert!(!contains_smoothing_isomorphic_to(&t, &all4));
    }
}
