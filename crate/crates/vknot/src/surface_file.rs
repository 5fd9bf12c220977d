//! Text format for surface diagrams.
//!
//! ```text
//! genus 1
//! attach a1,a2,a1',a2'
//! bandcross 1 2 0 0 +
//! knot O1+,B1+0,U1+,B2-0
//! ```
//!
//! Bands are numbered from 1. `a3'` is the primed end of band 3. A
//! traversal token `B<band><+|-><lane>` runs forward (`+`) from the
//! unprimed end or backward (`-`), on a lane counted from 0. Positions in
//! `bandcross` lines are counted from 0 along each band.

use std::fmt::Write;

use thiserror::Error;
use vknot_core::seifert::{BandCrossing, BandEnd, BandPresentation, Event, SurfaceDiagram};
use vknot_core::{Sign, Token};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {reason}")]
pub struct SurfaceFileError {
    pub line: usize,
    pub reason: String,
}

fn err(line: usize, reason: impl Into<String>) -> SurfaceFileError {
    SurfaceFileError {
        line,
        reason: reason.into(),
    }
}

pub fn parse_surface(text: &str) -> Result<SurfaceDiagram, SurfaceFileError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (n, l) = lines.next().ok_or_else(|| err(1, "missing genus line"))?;
    let genus: usize = keyword(l, "genus")
        .ok_or_else(|| err(n, "expected `genus <h>`"))?
        .parse()
        .map_err(|_| err(n, "genus must be a nonnegative integer"))?;

    let (n, l) = lines.next().ok_or_else(|| err(n + 1, "missing attach line"))?;
    let word = keyword(l, "attach").ok_or_else(|| err(n, "expected `attach <ends>`"))?;
    let attachment = split(word)
        .map(|t| parse_end(t).ok_or_else(|| err(n, format!("bad band end `{t}`"))))
        .collect::<Result<Vec<_>, _>>()?;

    let mut band_crossings = Vec::new();
    let mut events = None;
    for (n, l) in lines {
        if events.is_some() {
            return Err(err(n, "nothing may follow the knot line"));
        }
        if let Some(rest) = keyword(l, "bandcross") {
            band_crossings.push(parse_bandcross(rest).ok_or_else(|| err(n, "expected `bandcross <over> <under> <pos> <pos> <+|->`"))?);
        } else if let Some(rest) = keyword(l, "knot") {
            events = Some(
                split(rest)
                    .map(|t| parse_event(t).ok_or_else(|| err(n, format!("bad event `{t}`"))))
                    .collect::<Result<Vec<_>, _>>()?,
            );
        } else {
            return Err(err(n, "expected `bandcross` or `knot`"));
        }
    }
    let events = events.ok_or_else(|| err(0, "missing knot line"))?;
    Ok(SurfaceDiagram::new(
        BandPresentation {
            genus,
            attachment,
            band_crossings,
        },
        events,
    ))
}

fn keyword<'a>(line: &'a str, word: &str) -> Option<&'a str> {
    let rest = line.strip_prefix(word)?;
    if rest.is_empty() || rest.starts_with(char::is_whitespace) {
        Some(rest.trim())
    } else {
        None
    }
}

fn split(s: &str) -> impl Iterator<Item = &str> {
    s.split(',').map(str::trim).filter(|t| !t.is_empty())
}

fn band_number(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse::<usize>().ok().filter(|&b| b > 0).map(|b| b - 1)
}

fn parse_end(t: &str) -> Option<BandEnd> {
    let body = t.strip_prefix('a')?;
    let (body, primed) = match body.strip_suffix('\'') {
        Some(b) => (b, true),
        None => (body, false),
    };
    Some(BandEnd {
        band: band_number(body)?,
        primed,
    })
}

fn parse_sign(s: &str) -> Option<Sign> {
    match s {
        "+" => Some(Sign::Plus),
        "-" => Some(Sign::Minus),
        _ => None,
    }
}

fn parse_bandcross(rest: &str) -> Option<BandCrossing> {
    let f: Vec<&str> = rest.split_whitespace().collect();
    if f.len() != 5 {
        return None;
    }
    Some(BandCrossing {
        over: band_number(f[0])?,
        under: band_number(f[1])?,
        over_position: f[2].parse().ok()?,
        under_position: f[3].parse().ok()?,
        sign: parse_sign(f[4])?,
    })
}

fn parse_event(t: &str) -> Option<Event> {
    if let Some(body) = t.strip_prefix('B') {
        let at = body.find(['+', '-'])?;
        let lane = &body[at + 1..];
        if lane.is_empty() || !lane.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        return Some(Event::Traversal {
            band: band_number(&body[..at])?,
            forward: &body[at..at + 1] == "+",
            lane: lane.parse().ok()?,
        });
    }
    Token::parse(t).ok().map(Event::Crossing)
}

pub fn format_surface(sd: &SurfaceDiagram) -> String {
    let s = &sd.surface;
    let mut out = String::new();
    let _ = writeln!(out, "genus {}", s.genus);
    let ends: Vec<String> = s
        .attachment
        .iter()
        .map(|e| format!("a{}{}", e.band + 1, if e.primed { "'" } else { "" }))
        .collect();
    let _ = writeln!(out, "attach {}", ends.join(","));
    for r in &s.band_crossings {
        let _ = writeln!(
            out,
            "bandcross {} {} {} {} {}",
            r.over + 1,
            r.under + 1,
            r.over_position,
            r.under_position,
            r.sign.symbol()
        );
    }
    let events: Vec<String> = sd
        .events
        .iter()
        .map(|e| match *e {
            Event::Crossing(t) => t.to_string(),
            Event::Traversal { band, forward, lane } => {
                format!("B{}{}{}", band + 1, if forward { '+' } else { '-' }, lane)
            }
        })
        .collect();
    let _ = writeln!(out, "knot {}", events.join(","));
    // Lines never end in spaces.
    out.lines().map(|l| format!("{}\n", l.trim_end())).collect()
}
