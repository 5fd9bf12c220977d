//! Knot diagrams drawn on Seifert surfaces in disk-band form.
//!
//! A surface of genus `h` is a disk `D` with `2h` untwisted bands attached
//! along its boundary. Bands are numbered `0..2h`; the two ends of band `b`
//! are `a_b` and `a_b'`, and a band is oriented from `a_b` to `a_b'`. The
//! attachment word lists the `4h` ends in counterclockwise order around `∂D`
//! and must follow the alternating pattern `a1, a2, a1', a2', a3, a4, ...`
//! for some labeling and basepoint.
//!
//! The knot is a cyclic word of events:
//!
//! * crossings, which all lie inside `D` and carry Gauss-code tokens;
//! * band traversals `(band, forward, lane)`. A forward traversal enters at
//!   `a_b` and leaves at `a_b'`. The strands on a band are parallel lanes
//!   `0..L`, met counterclockwise in the order `0..L` at `a_b` and in the
//!   order `L-1..0` at `a_b'`.
//!
//! Band crossings of the projection are recorded separately: band `over`
//! passes over band `under`. Positions count the crossings along each band
//! from `a_b`, and the sign is that of the two band cores oriented from `a`
//! to `a'`. These records only matter for the linking number.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::gauss::{GaussDiagram, GaussError, Role, Sign, Token};
use crate::realize::{is_realizable, port_slot, Port, RibbonGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BandEnd {
    pub band: usize,
    pub primed: bool,
}

impl BandEnd {
    pub fn mate(self) -> BandEnd {
        BandEnd {
            band: self.band,
            primed: !self.primed,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BandCrossing {
    pub over: usize,
    pub under: usize,
    pub over_position: usize,
    pub under_position: usize,
    pub sign: Sign,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BandPresentation {
    pub genus: usize,
    pub attachment: Vec<BandEnd>,
    pub band_crossings: Vec<BandCrossing>,
}

impl BandPresentation {
    pub fn disk() -> BandPresentation {
        BandPresentation::default()
    }

    pub fn band_count(&self) -> usize {
        2 * self.genus
    }

    /// The standard surface: handle `i` is bands `2i`, `2i + 1`, attached
    /// as `a, b, a', b'` and crossing once in the projection.
    pub fn standard(genus: usize) -> BandPresentation {
        let mut attachment = Vec::with_capacity(4 * genus);
        let mut band_crossings = Vec::with_capacity(genus);
        for i in 0..genus {
            let (a, b) = (2 * i, 2 * i + 1);
            for (band, primed) in [(a, false), (b, false), (a, true), (b, true)] {
                attachment.push(BandEnd { band, primed });
            }
            band_crossings.push(BandCrossing {
                over: a,
                under: b,
                over_position: 0,
                under_position: 0,
                sign: Sign::Plus,
            });
        }
        BandPresentation {
            genus,
            attachment,
            band_crossings,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Event {
    Crossing(Token),
    Traversal { band: usize, forward: bool, lane: usize },
}

/// Equality ignores crossing labels and the order of band crossing records.
#[derive(Clone, Debug)]
pub struct SurfaceDiagram {
    pub surface: BandPresentation,
    pub events: Vec<Event>,
}

impl PartialEq for SurfaceDiagram {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = (self.normalized(), other.normalized());
        a.surface == b.surface && a.events == b.events
    }
}

impl Eq for SurfaceDiagram {}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("the knot has no events on a surface of positive genus")]
    EmptyKnot,
    #[error("crossing events do not form a Gauss code: {0}")]
    CrossingCode(GaussError),
    #[error("attachment word has {found} ends, expected {expected}")]
    AttachmentSize { expected: usize, found: usize },
    #[error("band end {0:?} is missing, repeated or out of range")]
    AttachmentEnd(BandEnd),
    #[error("attachment word does not alternate")]
    AttachmentPattern,
    #[error("band {0} does not exist")]
    UnknownBand(usize),
    #[error("lanes of band {band} are not 0..{count}")]
    Lanes { band: usize, count: usize },
    #[error("crossing positions along band {0} are not consecutive")]
    BandPositions(usize),
    #[error("the arcs inside the disk cannot be drawn without extra crossings")]
    NotPlanarInDisk,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SeifertError {
    #[error("invalid surface diagram ({} violations)", .0.len())]
    InvalidSurfaceDiagram(Vec<Violation>),
    #[error("no move at this site")]
    InvalidSite,
}

impl SurfaceDiagram {
    pub fn new(surface: BandPresentation, events: Vec<Event>) -> SurfaceDiagram {
        SurfaceDiagram { surface, events }
    }

    pub fn crossing_tokens(&self) -> Vec<Token> {
        self.events
            .iter()
            .filter_map(|e| match e {
                Event::Crossing(t) => Some(*t),
                Event::Traversal { .. } => None,
            })
            .collect()
    }

    pub fn traversal_count(&self) -> usize {
        self.events.len() - self.crossing_tokens().len()
    }

    /// Lane counts per band.
    pub fn lane_counts(&self) -> Vec<usize> {
        let mut lanes = vec![0; self.surface.band_count()];
        for e in &self.events {
            if let Event::Traversal { band, .. } = *e {
                if band < lanes.len() {
                    lanes[band] += 1;
                }
            }
        }
        lanes
    }

    /// Crossing labels renumbered by first appearance, band crossing records
    /// sorted.
    pub fn normalized(&self) -> SurfaceDiagram {
        let mut relabel: BTreeMap<u32, u32> = BTreeMap::new();
        let events = self
            .events
            .iter()
            .map(|e| match *e {
                Event::Crossing(t) => {
                    let next = relabel.len() as u32 + 1;
                    let label = *relabel.entry(t.label).or_insert(next);
                    Event::Crossing(Token { label, ..t })
                }
                other => other,
            })
            .collect();
        let mut surface = self.surface.clone();
        surface.band_crossings.sort();
        SurfaceDiagram { surface, events }
    }
}

/// Every failed condition, or an empty list.
pub fn validate(sd: &SurfaceDiagram) -> Vec<Violation> {
    let mut out = Vec::new();
    let s = &sd.surface;
    let bands = s.band_count();
    if sd.events.is_empty() && s.genus > 0 {
        out.push(Violation::EmptyKnot);
    }
    let diagram = match GaussDiagram::from_tokens(&sd.crossing_tokens()) {
        Ok(d) => Some(d),
        Err(e) => {
            out.push(Violation::CrossingCode(e));
            None
        }
    };

    // Attachment word.
    let mut attachment_ok = true;
    if s.attachment.len() != 2 * bands {
        out.push(Violation::AttachmentSize {
            expected: 2 * bands,
            found: s.attachment.len(),
        });
        attachment_ok = false;
    }
    let mut count: BTreeMap<BandEnd, usize> = BTreeMap::new();
    for &e in &s.attachment {
        *count.entry(e).or_default() += 1;
    }
    for (&e, &c) in &count {
        if e.band >= bands || c > 1 {
            out.push(Violation::AttachmentEnd(e));
            attachment_ok = false;
        }
    }
    if attachment_ok {
        for band in 0..bands {
            for primed in [false, true] {
                let e = BandEnd { band, primed };
                if !count.contains_key(&e) {
                    out.push(Violation::AttachmentEnd(e));
                    attachment_ok = false;
                }
            }
        }
    }
    if attachment_ok && !alternates(&s.attachment) {
        out.push(Violation::AttachmentPattern);
        attachment_ok = false;
    }

    // Lanes.
    let mut lanes_ok = true;
    let mut used: Vec<Vec<usize>> = vec![Vec::new(); bands];
    for e in &sd.events {
        if let Event::Traversal { band, lane, .. } = *e {
            if band >= bands {
                out.push(Violation::UnknownBand(band));
                lanes_ok = false;
            } else {
                used[band].push(lane);
            }
        }
    }
    for (band, lanes) in used.iter_mut().enumerate() {
        lanes.sort_unstable();
        if lanes.iter().enumerate().any(|(i, &l)| i != l) {
            out.push(Violation::Lanes {
                band,
                count: lanes.len(),
            });
            lanes_ok = false;
        }
    }

    // Band crossing positions.
    let mut positions: Vec<Vec<usize>> = vec![Vec::new(); bands];
    for r in &s.band_crossings {
        for (band, pos) in [(r.over, r.over_position), (r.under, r.under_position)] {
            if band >= bands {
                out.push(Violation::UnknownBand(band));
            } else {
                positions[band].push(pos);
            }
        }
    }
    for (band, ps) in positions.iter_mut().enumerate() {
        ps.sort_unstable();
        if ps.iter().enumerate().any(|(i, &p)| i != p) {
            out.push(Violation::BandPositions(band));
        }
    }

    if let Some(d) = diagram {
        if attachment_ok && lanes_ok && !disk_planar(sd, &d) {
            out.push(Violation::NotPlanarInDisk);
        }
    }
    out
}

/// Whether the attachment word splits into blocks `x, y, x', y'` after some
/// rotation.
fn alternates(word: &[BandEnd]) -> bool {
    let m = word.len();
    if !m.is_multiple_of(4) {
        return false;
    }
    if m == 0 {
        return true;
    }
    (0..4).any(|r| {
        (0..m / 4).all(|i| {
            let at = |k: usize| word[(r + 4 * i + k) % m];
            at(0).band == at(2).band && at(1).band == at(3).band && at(0).band != at(1).band
        })
    })
}

/// The part of the knot inside `D` is a graph whose vertices are the
/// crossings plus one vertex `B` for the boundary circle, with the lane
/// points as its darts in clockwise order. It can be drawn in the disk
/// exactly when this ribbon graph has genus zero.
fn disk_planar(sd: &SurfaceDiagram, d: &GaussDiagram) -> bool {
    if sd.events.is_empty() {
        return true;
    }
    let n = d.arrow_count();
    let lanes = sd.lane_counts();
    let mut point: BTreeMap<(usize, bool, usize), usize> = BTreeMap::new();
    for e in &sd.surface.attachment {
        let l = lanes[e.band];
        let order: Vec<usize> = if e.primed {
            (0..l).rev().collect()
        } else {
            (0..l).collect()
        };
        for lane in order {
            let next = point.len();
            point.insert((e.band, e.primed, lane), next);
        }
    }
    let q = point.len();
    let darts = 4 * n + q;
    let mut sigma = vec![0; darts];
    for a in 0..n {
        for s in 0..4 {
            sigma[4 * a + s] = 4 * a + (s + 1) % 4;
        }
    }
    for i in 0..q {
        // Clockwise around the boundary.
        sigma[4 * n + i] = 4 * n + (i + q - 1) % q;
    }

    let word = d.word();
    let signs = d.signs();
    let mut crossing = 0;
    let ends: Vec<(usize, usize)> = sd
        .events
        .iter()
        .map(|e| match *e {
            Event::Crossing(_) => {
                let ep = word[crossing];
                crossing += 1;
                let (pin, pout) = match ep.role {
                    Role::Over => (Port::OverIn, Port::OverOut),
                    Role::Under => (Port::UnderIn, Port::UnderOut),
                };
                let sign = signs[ep.arrow];
                (4 * ep.arrow + port_slot(sign, pin), 4 * ep.arrow + port_slot(sign, pout))
            }
            Event::Traversal { band, forward, lane } => (
                4 * n + point[&(band, !forward, lane)],
                4 * n + point[&(band, forward, lane)],
            ),
        })
        .collect();
    let mut alpha = vec![usize::MAX; darts];
    let m = ends.len();
    for k in 0..m {
        let x = ends[k].1;
        let y = ends[(k + 1) % m].0;
        alpha[x] = y;
        alpha[y] = x;
    }
    debug_assert!(alpha.iter().all(|&a| a != usize::MAX));
    let faces = RibbonGraph { sigma, alpha }.face_count();
    let vertices = n + usize::from(q > 0);
    vertices + faces == m + 2
}

fn check(sd: &SurfaceDiagram) -> Result<(), SeifertError> {
    let v = validate(sd);
    if v.is_empty() {
        Ok(())
    } else {
        Err(SeifertError::InvalidSurfaceDiagram(v))
    }
}

/// The virtual knot of the diagram: traversals deleted, crossings kept.
pub fn kappa(sd: &SurfaceDiagram) -> Result<GaussDiagram, SeifertError> {
    check(sd)?;
    Ok(GaussDiagram::from_tokens(&sd.crossing_tokens()).expect("validated"))
}

/// Linking number of the knot with the boundary of the surface.
///
/// Knot and boundary only cross where one band passes over another. There
/// every lane of the upper band crosses both sides of the lower band, and
/// both sides of the upper band cross every lane of the lower band.
pub fn linking_number(sd: &SurfaceDiagram) -> Result<i64, SeifertError> {
    check(sd)?;
    let mut directions: Vec<Vec<i64>> = vec![Vec::new(); sd.surface.band_count()];
    for e in &sd.events {
        if let Event::Traversal { band, forward, .. } = *e {
            directions[band].push(if forward { 1 } else { -1 });
        }
    }
    // The two sides of a band run in opposite directions.
    let sides = [1i64, -1];
    let mut total = 0i64;
    for r in &sd.surface.band_crossings {
        let s = r.sign.value();
        for &k in &directions[r.over] {
            for &j in &sides {
                total += s * k * j;
            }
        }
        for &j in &sides {
            for &k in &directions[r.under] {
                total += s * j * k;
            }
        }
    }
    debug_assert!(total % 2 == 0);
    Ok(total / 2)
}

/// A curl put into a band: the band passes once over itself between
/// `position` and `position + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LoopSite {
    pub band: usize,
    pub position: usize,
    pub sign: Sign,
    /// Whether the band is over at the earlier of the two positions.
    pub over_first: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SurfaceMoveKind {
    Loop,
    Pass,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoveDirection {
    Forward,
    Backward,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SurfaceMove {
    Loop(LoopSite),
    /// Removes the curl recorded at this index.
    Unloop { record: usize },
    /// Passes the lower band of this record over the upper one.
    Pass { record: usize },
}

impl SurfaceMove {
    pub fn kind(&self) -> SurfaceMoveKind {
        match self {
            SurfaceMove::Loop(_) | SurfaceMove::Unloop { .. } => SurfaceMoveKind::Loop,
            SurfaceMove::Pass { .. } => SurfaceMoveKind::Pass,
        }
    }

    pub fn direction(&self) -> MoveDirection {
        match self {
            SurfaceMove::Unloop { .. } => MoveDirection::Backward,
            _ => MoveDirection::Forward,
        }
    }
}

fn band_positions(s: &BandPresentation, band: usize) -> usize {
    s.band_crossings
        .iter()
        .map(|r| usize::from(r.over == band) + usize::from(r.under == band))
        .sum()
}

pub fn loop_move(sd: &SurfaceDiagram, site: LoopSite) -> Result<SurfaceDiagram, SeifertError> {
    check(sd)?;
    let s = &sd.surface;
    if site.band >= s.band_count() || site.position > band_positions(s, site.band) {
        return Err(SeifertError::InvalidSite);
    }
    let mut out = sd.clone();
    for r in &mut out.surface.band_crossings {
        if r.over == site.band && r.over_position >= site.position {
            r.over_position += 2;
        }
        if r.under == site.band && r.under_position >= site.position {
            r.under_position += 2;
        }
    }
    let (po, pu) = if site.over_first {
        (site.position, site.position + 1)
    } else {
        (site.position + 1, site.position)
    };
    out.surface.band_crossings.push(BandCrossing {
        over: site.band,
        under: site.band,
        over_position: po,
        under_position: pu,
        sign: site.sign,
    });
    Ok(out)
}

pub fn unloop_move(sd: &SurfaceDiagram, record: usize) -> Result<SurfaceDiagram, SeifertError> {
    check(sd)?;
    let r = *sd
        .surface
        .band_crossings
        .get(record)
        .ok_or(SeifertError::InvalidSite)?;
    if r.over != r.under || r.over_position.abs_diff(r.under_position) != 1 {
        return Err(SeifertError::InvalidSite);
    }
    let lo = r.over_position.min(r.under_position);
    let mut out = sd.clone();
    out.surface.band_crossings.remove(record);
    for c in &mut out.surface.band_crossings {
        if c.over == r.over && c.over_position > lo {
            c.over_position -= 2;
        }
        if c.under == r.over && c.under_position > lo {
            c.under_position -= 2;
        }
    }
    Ok(out)
}

pub fn pass_move(sd: &SurfaceDiagram, record: usize) -> Result<SurfaceDiagram, SeifertError> {
    check(sd)?;
    let mut out = sd.clone();
    let r = out
        .surface
        .band_crossings
        .get_mut(record)
        .ok_or(SeifertError::InvalidSite)?;
    *r = BandCrossing {
        over: r.under,
        under: r.over,
        over_position: r.under_position,
        under_position: r.over_position,
        sign: r.sign.flip(),
    };
    Ok(out)
}

pub fn apply_surface_move(sd: &SurfaceDiagram, mv: &SurfaceMove) -> Result<SurfaceDiagram, SeifertError> {
    match *mv {
        SurfaceMove::Loop(site) => loop_move(sd, site),
        SurfaceMove::Unloop { record } => unloop_move(sd, record),
        SurfaceMove::Pass { record } => pass_move(sd, record),
    }
}

/// Draws `d` on a standard surface.
///
/// Realizable diagrams go on the bare disk. Otherwise a spanning tree of the
/// diagram's ribbon graph is thickened into the disk and every other edge
/// becomes a band carrying one lane. Empty bands join boundary components
/// until one is left, and handle slides bring the attachment word into
/// alternating form.
pub fn embed_on_standard_surface(d: &GaussDiagram) -> SurfaceDiagram {
    let crossings: Vec<Event> = d.tokens().into_iter().map(Event::Crossing).collect();
    if d.arrow_count() == 0 || is_realizable(d) {
        return SurfaceDiagram::new(BandPresentation::disk(), crossings);
    }
    let mut b = Builder::from_diagram(d);
    b.merge_boundaries();
    b.normalize();
    b.finish()
}

struct Builder {
    word: Vec<BandEnd>,
    lanes: Vec<usize>,
    events: Vec<Event>,
    /// First end of the most recently completed handle.
    anchor: Option<BandEnd>,
}

impl Builder {
    fn from_diagram(d: &GaussDiagram) -> Builder {
        let n = d.arrow_count();
        let g = RibbonGraph::of_diagram(d);

        let mut tree = vec![false; 4 * n];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for x in 4 * v..4 * v + 4 {
                let y = g.alpha[x];
                if !seen[y / 4] {
                    seen[y / 4] = true;
                    tree[x] = true;
                    tree[y] = true;
                    stack.push(y / 4);
                }
            }
        }

        // Walk counterclockwise around the thickened tree.
        let mut band_of = vec![usize::MAX; 4 * n];
        let mut primed = vec![false; 4 * n];
        let mut word = Vec::new();
        let mut bands = 0;
        let mut x = 0;
        loop {
            if tree[x] {
                x = g.sigma[g.alpha[x]];
            } else {
                if band_of[x] == usize::MAX {
                    let y = g.alpha[x];
                    band_of[x] = bands;
                    band_of[y] = bands;
                    primed[y] = true;
                    bands += 1;
                }
                word.push(BandEnd {
                    band: band_of[x],
                    primed: primed[x],
                });
                x = g.sigma[x];
            }
            if x == 0 {
                break;
            }
        }
        debug_assert_eq!(word.len(), 2 * bands);

        let mut events = Vec::new();
        for (k, t) in d.tokens().into_iter().enumerate() {
            events.push(Event::Crossing(t));
            let e = d.word()[k];
            let port = match e.role {
                Role::Over => Port::OverOut,
                Role::Under => Port::UnderOut,
            };
            let x = 4 * e.arrow + port_slot(d.signs()[e.arrow], port);
            if !tree[x] {
                events.push(Event::Traversal {
                    band: band_of[x],
                    forward: !primed[x],
                    lane: 0,
                });
            }
        }
        Builder {
            word,
            lanes: vec![1; bands],
            events,
            anchor: None,
        }
    }

    fn position(&self, e: BandEnd) -> usize {
        self.word.iter().position(|&w| w == e).expect("band end present")
    }

    /// Boundary components, as a cycle id per gap. Gap `i` follows `word[i]`.
    fn gap_cycles(&self) -> Vec<usize> {
        let m = self.word.len();
        let next: Vec<usize> = (0..m)
            .map(|i| self.position(self.word[(i + 1) % m].mate()))
            .collect();
        let mut id = vec![usize::MAX; m];
        let mut count = 0;
        for s in 0..m {
            let mut g = s;
            while id[g] == usize::MAX {
                id[g] = count;
                g = next[g];
            }
            if id[s] == count {
                count += 1;
            }
        }
        id
    }

    fn merge_boundaries(&mut self) {
        loop {
            let cycles = self.gap_cycles();
            let Some(j) = cycles.iter().position(|&c| c != cycles[0]) else {
                return;
            };
            let band = self.lanes.len();
            self.lanes.push(0);
            self.word.insert(j + 1, BandEnd { band, primed: true });
            self.word.insert(1, BandEnd { band, primed: false });
        }
    }

    /// Slides the end at `xi` over the band of its neighbour: the following
    /// one when `before`, else the preceding one.
    fn slide(&mut self, xi: usize, before: bool) {
        let m = self.word.len();
        let yi = if before { (xi + 1) % m } else { (xi + m - 1) % m };
        let (x, y) = (self.word[xi], self.word[yi]);
        let (c, a) = (x.band, y.band);
        debug_assert_ne!(c, a);
        let (k, l) = (self.lanes[c], self.lanes[a]);

        // Lanes of c in counterclockwise order at x, and the numbers of the
        // new lanes of a in counterclockwise order at y.
        let c_ccw: Vec<usize> = if x.primed {
            (0..k).rev().collect()
        } else {
            (0..k).collect()
        };
        let (new_ccw, shift): (Vec<usize>, usize) = match (y.primed, before) {
            (false, true) => ((0..k).collect(), k),
            (false, false) => ((l..l + k).collect(), 0),
            (true, true) => ((l..l + k).rev().collect(), 0),
            (true, false) => ((0..k).rev().collect(), k),
        };
        let mut new_lane = vec![0; k];
        for j in 0..k {
            new_lane[c_ccw[j]] = new_ccw[j];
        }

        // Travelling from y to its mate is forward when y is unprimed.
        let y_to_mate = !y.primed;
        let mut events = Vec::with_capacity(self.events.len() + k);
        for &ev in &self.events {
            match ev {
                Event::Traversal { band, forward, lane } if band == a => {
                    events.push(Event::Traversal {
                        band,
                        forward,
                        lane: lane + shift,
                    });
                }
                Event::Traversal { band, forward, lane } if band == c => {
                    let exits_at_x = forward == x.primed;
                    if exits_at_x {
                        events.push(ev);
                        events.push(Event::Traversal {
                            band: a,
                            forward: !y_to_mate,
                            lane: new_lane[lane],
                        });
                    } else {
                        events.push(Event::Traversal {
                            band: a,
                            forward: y_to_mate,
                            lane: new_lane[lane],
                        });
                        events.push(ev);
                    }
                }
                other => events.push(other),
            }
        }
        self.events = events;
        self.lanes[a] += k;

        self.word.remove(xi);
        let yb = self.position(y.mate());
        self.word.insert(if before { yb + 1 } else { yb }, x);
    }

    /// Handle slides until the word is a sequence of blocks `x, y, x', y'`.
    fn normalize(&mut self) {
        let mut done = vec![false; self.lanes.len()];
        while let Some((a, b)) = self.interleaved_pair(&done) {
            let m = self.word.len();
            // a P b Q a' R b' S  ->  a b Q a' R b' P S
            loop {
                let bi = self.position(b);
                let pi = (bi + m - 1) % m;
                if self.word[pi] == a {
                    break;
                }
                self.slide(pi, true);
            }
            // -> a b a' R Q b' P S
            loop {
                let bi = self.position(b);
                let ni = (bi + 1) % m;
                if self.word[ni] == a.mate() {
                    break;
                }
                self.slide(ni, false);
            }
            // -> a b a' b' P S R Q
            loop {
                let ai = self.position(a.mate());
                let ni = (ai + 1) % m;
                if self.word[ni] == b.mate() {
                    break;
                }
                self.slide(ni, false);
            }
            done[a.band] = true;
            done[b.band] = true;
            self.anchor = Some(a);
        }
        debug_assert!(done.iter().all(|&x| x));
    }

    /// Two unfinished bands whose ends interleave, as `(a, b)` with the
    /// cyclic order `a, b, a', b'`.
    fn interleaved_pair(&self, done: &[bool]) -> Option<(BandEnd, BandEnd)> {
        let m = self.word.len();
        for i in 0..m {
            let a = self.word[i];
            if done[a.band] {
                continue;
            }
            let rel = |p: usize| (p + m - i) % m;
            let ra = rel(self.position(a.mate()));
            for r in 1..ra {
                let b = self.word[(i + r) % m];
                if !done[b.band] && rel(self.position(b.mate())) > ra {
                    return Some((a, b));
                }
            }
        }
        None
    }

    fn finish(mut self) -> SurfaceDiagram {
        if let Some(a) = self.anchor {
            let start = self.position(a);
            self.word.rotate_left(start);
        }
        let bands = self.lanes.len();
        let mut new_id = vec![0; bands];
        let mut flip = vec![false; bands];
        for (i, e) in self.word.iter().enumerate() {
            if i % 4 < 2 {
                new_id[e.band] = 2 * (i / 4) + i % 4;
                flip[e.band] = e.primed;
            }
        }
        let word = self
            .word
            .iter()
            .map(|e| BandEnd {
                band: new_id[e.band],
                primed: e.primed != flip[e.band],
            })
            .collect::<Vec<_>>();
        let events = self
            .events
            .iter()
            .map(|&e| match e {
                Event::Traversal { band, forward, lane } => Event::Traversal {
                    band: new_id[band],
                    forward: forward != flip[band],
                    lane: if flip[band] {
                        self.lanes[band] - 1 - lane
                    } else {
                        lane
                    },
                },
                other => other,
            })
            .collect();
        let genus = bands / 2;
        let surface = BandPresentation::standard(genus);
        debug_assert_eq!(surface.attachment, word);
        SurfaceDiagram::new(surface, events)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauss::diagrams_equal;

    fn gd(s: &str) -> GaussDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn empty_knot_needs_bare_disk() {
        let sd = SurfaceDiagram::new(BandPresentation::standard(1), Vec::new());
        assert!(validate(&sd).contains(&Violation::EmptyKnot));
        let disk = SurfaceDiagram::new(BandPresentation::disk(), Vec::new());
        assert!(validate(&disk).is_empty());
        assert_eq!(kappa(&disk).unwrap(), GaussDiagram::empty());
    }

    #[test]
    fn unmatched_crossing_is_reported() {
        let t = Token {
            label: 1,
            role: Role::Over,
            sign: Sign::Plus,
        };
        let sd = SurfaceDiagram::new(BandPresentation::disk(), vec![Event::Crossing(t)]);
        assert!(matches!(validate(&sd)[..], [Violation::CrossingCode(_)]));
    }

    #[test]
    fn attachment_pattern() {
        let e = |band, primed| BandEnd { band, primed };
        assert!(alternates(&BandPresentation::standard(2).attachment));
        assert!(alternates(&[e(1, true), e(0, false), e(1, false), e(0, true)]));
        assert!(!alternates(&[e(0, false), e(0, true), e(1, false), e(1, true)]));
    }

    #[test]
    fn virtual_trefoil_embeds_on_genus_two() {
        let d = gd("O1+,O2+,U1+,U2+");
        let sd = embed_on_standard_surface(&d);
        assert_eq!(validate(&sd), Vec::new());
        assert_eq!(sd.surface.genus, 2);
        assert!(diagrams_equal(&kappa(&sd).unwrap(), &d));
        assert_eq!(linking_number(&sd), Ok(0));
    }

    #[test]
    fn classical_diagrams_stay_in_the_disk() {
        let d = gd("O1+,U2+,O3+,U1+,O2+,U3+");
        let sd = embed_on_standard_surface(&d);
        assert_eq!(sd.surface.genus, 0);
        assert_eq!(sd.traversal_count(), 0);
        assert!(validate(&sd).is_empty());
    }

    #[test]
    fn scrambled_lanes_are_not_planar() {
        let d = gd("O1+,O2+,U1+,U2+");
        let mut sd = embed_on_standard_surface(&d);
        // Reverse one traversal: the arcs in the disk now cross.
        let i = sd
            .events
            .iter()
            .position(|e| matches!(e, Event::Traversal { .. }))
            .unwrap();
        if let Event::Traversal { forward, .. } = &mut sd.events[i] {
            *forward = !*forward;
        }
        assert!(validate(&sd).contains(&Violation::NotPlanarInDisk));
    }

    #[test]
    fn loop_and_pass_round_trip() {
        let sd = embed_on_standard_surface(&gd("O1+,O2+,U1+,U2+"));
        let site = LoopSite {
            band: 1,
            position: 0,
            sign: Sign::Minus,
            over_first: true,
        };
        let looped = loop_move(&sd, site).unwrap();
        assert_ne!(looped, sd);
        let last = looped.surface.band_crossings.len() - 1;
        assert_eq!(unloop_move(&looped, last).unwrap(), sd);
        assert_eq!(unloop_move(&sd, 0), Err(SeifertError::InvalidSite));
        let passed = pass_move(&sd, 0).unwrap();
        assert_eq!(pass_move(&passed, 0).unwrap(), sd);
        assert_eq!(kappa(&passed), kappa(&sd));
        assert_eq!(linking_number(&looped), Ok(0));
    }
}
