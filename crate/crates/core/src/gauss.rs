//! Gauss diagrams and the Gauss code grammar.
//!
//! A Gauss diagram with `n` arrows is a cyclic word of `2n` endpoints read
//! once around the knot in its orientation. Each arrow runs from its over
//! endpoint to its under endpoint and carries a sign.
//!
//! Text form (no whitespace):
//!
//! ```text
//! code  := "" | token ("," token)*
//! token := ("O" | "U") label ("+" | "-")
//! ```
//!
//! Labels on input are arbitrary nonzero integers. Internally arrows are
//! always numbered `1..=n` in order of first appearance, so two diagrams that
//! differ only by labels compare equal with `==` when they are stored in the
//! same rotation. [`diagrams_equal`] additionally quotients by rotation.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// `+1` or `-1`.
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Sign {
        if v >= 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    Over,
    Under,
}

impl Role {
    pub fn flip(self) -> Role {
        match self {
            Role::Over => Role::Under,
            Role::Under => Role::Over,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Role::Over => 'O',
            Role::Under => 'U',
        }
    }
}

/// Arrow label as it appears in Gauss codes (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label(pub u32);

impl Label {
    pub(crate) fn from_index(i: usize) -> Label {
        Label(i as u32 + 1)
    }

    pub(crate) fn index(self) -> usize {
        (self.0 as usize).wrapping_sub(1)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One point of the circle: which arrow ends here and whether this is its
/// over (tail) or under (head) end.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Endpoint {
    pub arrow: usize,
    pub role: Role,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub label: Label,
    pub over_position: usize,
    pub under_position: usize,
    pub sign: Sign,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GaussError {
    #[error("label {0} must appear exactly twice")]
    UnmatchedLabel(u32),
    #[error("the two tokens of label {0} disagree on the sign")]
    SignMismatch(u32),
    #[error("label {0} needs one O token and one U token")]
    RoleMismatch(u32),
    #[error("syntax error in token {token}: {reason}")]
    SyntaxError { token: usize, reason: &'static str },
    #[error("no arrow labelled {0}")]
    NoSuchLabel(u32),
}

/// A token of a Gauss code before label normalization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Token {
    pub label: u32,
    pub role: Role,
    pub sign: Sign,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussDiagram {
    word: Vec<Endpoint>,
    signs: Vec<Sign>,
}

impl GaussDiagram {
    pub fn empty() -> GaussDiagram {
        GaussDiagram::default()
    }

    /// Builds a diagram from tokens carrying arbitrary labels.
    pub fn from_tokens(tokens: &[Token]) -> Result<GaussDiagram, GaussError> {
        // label -> (first index, count, over seen, under seen, sign)
        let mut seen: Vec<(u32, usize, bool, bool, Sign)> = Vec::new();
        for t in tokens {
            if t.label == 0 {
                return Err(GaussError::SyntaxError {
                    token: 0,
                    reason: "label must be nonzero",
                });
            }
            match seen.iter_mut().find(|e| e.0 == t.label) {
                Some(e) => {
                    e.1 += 1;
                    if e.1 > 2 {
                        return Err(GaussError::UnmatchedLabel(t.label));
                    }
                    if e.4 != t.sign {
                        return Err(GaussError::SignMismatch(t.label));
                    }
                    let dup = match t.role {
                        Role::Over => core::mem::replace(&mut e.2, true),
                        Role::Under => core::mem::replace(&mut e.3, true),
                    };
                    if dup {
                        return Err(GaussError::RoleMismatch(t.label));
                    }
                }
                None => seen.push((
                    t.label,
                    1,
                    t.role == Role::Over,
                    t.role == Role::Under,
                    t.sign,
                )),
            }
        }
        if let Some(e) = seen.iter().find(|e| e.1 != 2) {
            return Err(GaussError::UnmatchedLabel(e.0));
        }
        let word = tokens
            .iter()
            .map(|t| Endpoint {
                arrow: seen.iter().position(|e| e.0 == t.label).unwrap(),
                role: t.role,
            })
            .collect();
        let signs = seen.iter().map(|e| e.4).collect();
        Ok(GaussDiagram::from_parts(word, signs))
    }

    /// Builds a diagram from an endpoint word and per-arrow signs, renumbering
    /// arrows by first appearance. The caller guarantees that every arrow
    /// index in `word` occurs once as over and once as under.
    pub(crate) fn from_parts(word: Vec<Endpoint>, signs: Vec<Sign>) -> GaussDiagram {
        let mut map = vec![usize::MAX; signs.len()];
        let mut new_signs = Vec::with_capacity(signs.len());
        let mut out = Vec::with_capacity(word.len());
        for e in &word {
            if map[e.arrow] == usize::MAX {
                map[e.arrow] = new_signs.len();
                new_signs.push(signs[e.arrow]);
            }
            out.push(Endpoint {
                arrow: map[e.arrow],
                role: e.role,
            });
        }
        GaussDiagram {
            word: out,
            signs: new_signs,
        }
    }

    /// Checked version of [`GaussDiagram::from_parts`].
    pub fn try_from_parts(word: Vec<Endpoint>, signs: Vec<Sign>) -> Result<GaussDiagram, GaussError> {
        let tokens: Vec<Token> = word
            .iter()
            .map(|e| {
                signs
                    .get(e.arrow)
                    .map(|&sign| Token {
                        label: e.arrow as u32 + 1,
                        role: e.role,
                        sign,
                    })
                    .ok_or(GaussError::NoSuchLabel(e.arrow as u32 + 1))
            })
            .collect::<Result<_, _>>()?;
        let d = GaussDiagram::from_tokens(&tokens)?;
        if d.arrow_count() != signs.len() {
            let missing = (0..signs.len())
                .find(|&a| !word.iter().any(|e| e.arrow == a))
                .unwrap_or(0);
            return Err(GaussError::UnmatchedLabel(missing as u32 + 1));
        }
        Ok(d)
    }

    pub fn parse(text: &str) -> Result<GaussDiagram, GaussError> {
        if text.is_empty() {
            return Ok(GaussDiagram::empty());
        }
        let tokens = text
            .split(',')
            .enumerate()
            .map(|(i, tok)| parse_token(tok, i))
            .collect::<Result<Vec<_>, _>>()?;
        GaussDiagram::from_tokens(&tokens)
    }

    pub fn arrow_count(&self) -> usize {
        self.signs.len()
    }

    /// Number of endpoints, `2n`.
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[Endpoint] {
        &self.word
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn labels(&self) -> impl Iterator<Item = Label> {
        (0..self.arrow_count()).map(Label::from_index)
    }

    /// Over and under positions of every arrow, indexed by arrow.
    pub fn positions(&self) -> Vec<(usize, usize)> {
        let mut pos = vec![(0, 0); self.arrow_count()];
        for (i, e) in self.word.iter().enumerate() {
            match e.role {
                Role::Over => pos[e.arrow].0 = i,
                Role::Under => pos[e.arrow].1 = i,
            }
        }
        pos
    }

    pub fn arrows(&self) -> Vec<Arrow> {
        self.positions()
            .into_iter()
            .enumerate()
            .map(|(a, (o, u))| Arrow {
                label: Label::from_index(a),
                over_position: o,
                under_position: u,
                sign: self.signs[a],
            })
            .collect()
    }

    pub fn arrow(&self, label: Label) -> Result<Arrow, GaussError> {
        let a = self.check_label(label)?;
        Ok(self.arrows()[a])
    }

    pub(crate) fn check_label(&self, label: Label) -> Result<usize, GaussError> {
        let a = label.index();
        if a < self.arrow_count() {
            Ok(a)
        } else {
            Err(GaussError::NoSuchLabel(label.0))
        }
    }

    pub fn tokens(&self) -> Vec<Token> {
        self.word
            .iter()
            .map(|e| Token {
                label: e.arrow as u32 + 1,
                role: e.role,
                sign: self.signs[e.arrow],
            })
            .collect()
    }

    /// Code of the stored rotation (not canonicalized).
    pub fn raw_code(&self) -> String {
        write_tokens(&self.tokens())
    }

    /// Canonical Gauss code: the least rotation after relabeling.
    pub fn to_code(&self) -> String {
        self.canonical().raw_code()
    }

    /// Rotates the circle so that position `k` becomes position 0.
    pub fn rotate(&self, k: usize) -> GaussDiagram {
        if self.word.is_empty() {
            return self.clone();
        }
        let k = k % self.word.len();
        let mut word = Vec::with_capacity(self.word.len());
        word.extend_from_slice(&self.word[k..]);
        word.extend_from_slice(&self.word[..k]);
        GaussDiagram::from_parts(word, self.signs.clone())
    }

    /// Offset of the lexicographically least rotation.
    pub fn canonical_rotation(&self) -> usize {
        let n2 = self.word.len();
        let mut best = 0;
        for r in 1..n2 {
            if self.compare_rotations(r, best) == Ordering::Less {
                best = r;
            }
        }
        best
    }

    pub fn canonical(&self) -> GaussDiagram {
        self.rotate(self.canonical_rotation())
    }

    /// Compact key identifying the diagram up to rotation and relabeling.
    pub fn canonical_key(&self) -> Vec<u32> {
        let c = self.canonical();
        c.word
            .iter()
            .map(|e| {
                let role = (e.role == Role::Under) as u32;
                let sign = (c.signs[e.arrow] == Sign::Minus) as u32;
                ((e.arrow as u32 + 1) << 2) | (role << 1) | sign
            })
            .collect()
    }

    fn compare_rotations(&self, r1: usize, r2: usize) -> Ordering {
        let n2 = self.word.len();
        let mut map1 = vec![u32::MAX; self.arrow_count()];
        let mut map2 = vec![u32::MAX; self.arrow_count()];
        let (mut next1, mut next2) = (1u32, 1u32);
        for i in 0..n2 {
            let e1 = self.word[(r1 + i) % n2];
            let e2 = self.word[(r2 + i) % n2];
            if map1[e1.arrow] == u32::MAX {
                map1[e1.arrow] = next1;
                next1 += 1;
            }
            if map2[e2.arrow] == u32::MAX {
                map2[e2.arrow] = next2;
                next2 += 1;
            }
            let k1 = (e1.role, map1[e1.arrow], self.signs[e1.arrow]);
            let k2 = (e2.role, map2[e2.arrow], self.signs[e2.arrow]);
            match k1.cmp(&k2) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        Ordering::Equal
    }

    /// `(# Plus arrows) - (# Minus arrows)`.
    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|s| s.value()).sum()
    }

    /// Reverses the arrow and flips its sign.
    pub fn crossing_change(&self, label: Label) -> Result<GaussDiagram, GaussError> {
        let a = self.check_label(label)?;
        let mut d = self.reverse_arrow(a);
        d.signs[a] = d.signs[a].flip();
        Ok(d)
    }

    /// Reverses the arrow, keeping its sign.
    pub fn virtualize(&self, label: Label) -> Result<GaussDiagram, GaussError> {
        let a = self.check_label(label)?;
        Ok(self.reverse_arrow(a))
    }

    fn reverse_arrow(&self, a: usize) -> GaussDiagram {
        let mut d = self.clone();
        for e in d.word.iter_mut().filter(|e| e.arrow == a) {
            e.role = e.role.flip();
        }
        d
    }

    /// Crossing change at every arrow.
    pub fn mirror(&self) -> GaussDiagram {
        GaussDiagram {
            word: self
                .word
                .iter()
                .map(|e| Endpoint {
                    arrow: e.arrow,
                    role: e.role.flip(),
                })
                .collect(),
            signs: self.signs.iter().map(|s| s.flip()).collect(),
        }
    }

    /// The same diagram read against its orientation.
    pub fn inverse(&self) -> GaussDiagram {
        let word = self.word.iter().rev().copied().collect();
        GaussDiagram::from_parts(word, self.signs.clone())
    }

    /// Closure of a braid on `strands` strands. Generator `i > 0` is
    /// `sigma_i` (strand at position `i` crosses over to `i + 1`, positive);
    /// `-i` is its inverse (that strand crosses under, negative). Returns
    /// `None` when the closure has more than one component.
    pub fn braid_closure(strands: usize, word: &[i32]) -> Option<GaussDiagram> {
        if word
            .iter()
            .any(|&g| g == 0 || g.unsigned_abs() as usize >= strands)
        {
            return None;
        }
        let mut out = Vec::with_capacity(2 * word.len());
        let mut pos = 0usize;
        loop {
            for (c, &g) in word.iter().enumerate() {
                let i = g.unsigned_abs() as usize;
                if pos == i - 1 {
                    let role = if g > 0 { Role::Over } else { Role::Under };
                    out.push(Endpoint { arrow: c, role });
                    pos = i;
                } else if pos == i {
                    let role = if g > 0 { Role::Under } else { Role::Over };
                    out.push(Endpoint { arrow: c, role });
                    pos = i - 1;
                }
            }
            if pos == 0 {
                break;
            }
        }
        if out.len() != 2 * word.len() {
            return None;
        }
        let signs = word
            .iter()
            .map(|&g| if g > 0 { Sign::Plus } else { Sign::Minus })
            .collect();
        Some(GaussDiagram::from_parts(out, signs))
    }

    /// Applies a sign to every arrow of an unsigned word; helper for
    /// generators and tests.
    pub fn with_signs(&self, signs: &[Sign]) -> GaussDiagram {
        GaussDiagram::from_parts(self.word.clone(), signs.to_vec())
    }
}

/// Equality up to rotation of the circle and relabeling (no reflection).
pub fn diagrams_equal(a: &GaussDiagram, b: &GaussDiagram) -> bool {
    a.arrow_count() == b.arrow_count() && a.canonical_key() == b.canonical_key()
}

impl Token {
    /// Parses one token; syntax errors report token index 0.
    pub fn parse(tok: &str) -> Result<Token, GaussError> {
        parse_token(tok, 0)
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.role.letter(), self.label, self.sign.symbol())
    }
}

fn parse_token(tok: &str, index: usize) -> Result<Token, GaussError> {
    let err = |reason| GaussError::SyntaxError { token: index, reason };
    let bytes = tok.as_bytes();
    if bytes.len() < 3 {
        return Err(err("token too short"));
    }
    let role = match bytes[0] {
        b'O' => Role::Over,
        b'U' => Role::Under,
        _ => return Err(err("expected O or U")),
    };
    let sign = match bytes[bytes.len() - 1] {
        b'+' => Sign::Plus,
        b'-' => Sign::Minus,
        _ => return Err(err("expected + or -")),
    };
    let digits = &tok[1..tok.len() - 1];
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err("expected a decimal label"));
    }
    let label: u32 = digits.parse().map_err(|_| err("label out of range"))?;
    if label == 0 {
        return Err(err("label must be nonzero"));
    }
    Ok(Token { label, role, sign })
}

fn write_tokens(tokens: &[Token]) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    for (i, t) in tokens.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{t}");
    }
    s
}

impl FromStr for GaussDiagram {
    type Err = GaussError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GaussDiagram::parse(s)
    }
}

impl fmt::Display for GaussDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_code())
    }
}
