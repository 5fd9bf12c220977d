//! Text form of Reidemeister move sites.
//!
//! ```text
//! r1add:<gap>:<o|u>:<+|->            first endpoint over or under
//! r1remove:<label>
//! r2add:<over gap>:<under gap>:<p|a>:<+|->:<o|u>
//! r2remove:<label>:<label>
//! r3:<segment>:<segment>:<segment>
//! ```
//!
//! Gaps and segments are positions in the code as written. Labels are the
//! normalized ones (numbered by first appearance).

use vknot_core::moves::MoveApplication;
use vknot_core::{Label, Sign};

pub fn format_move(m: &MoveApplication) -> String {
    let sign = |s: Sign| s.symbol();
    let role = |under: bool| if under { 'u' } else { 'o' };
    match *m {
        MoveApplication::R1Add { gap, under_first, sign: s } => {
            format!("r1add:{gap}:{}:{}", role(under_first), sign(s))
        }
        MoveApplication::R1Remove { label } => format!("r1remove:{label}"),
        MoveApplication::R2Add {
            over_gap,
            under_gap,
            antiparallel,
            sign: s,
            unders_first,
        } => format!(
            "r2add:{over_gap}:{under_gap}:{}:{}:{}",
            if antiparallel { 'a' } else { 'p' },
            sign(s),
            role(unders_first)
        ),
        MoveApplication::R2Remove { first, second } => format!("r2remove:{first}:{second}"),
        MoveApplication::R3 { segments: [a, b, c] } => format!("r3:{a}:{b}:{c}"),
    }
}

pub fn parse_move(text: &str) -> Option<MoveApplication> {
    let f: Vec<&str> = text.split(':').collect();
    let num = |s: &str| s.parse::<usize>().ok();
    let label = |s: &str| s.parse::<u32>().ok().filter(|&l| l > 0).map(Label);
    let sign = |s: &str| match s {
        "+" => Some(Sign::Plus),
        "-" => Some(Sign::Minus),
        _ => None,
    };
    let under = |s: &str| match s {
        "o" => Some(false),
        "u" => Some(true),
        _ => None,
    };
    match f.as_slice() {
        ["r1add", g, r, s] => Some(MoveApplication::R1Add {
            gap: num(g)?,
            under_first: under(r)?,
            sign: sign(s)?,
        }),
        ["r1remove", l] => Some(MoveApplication::R1Remove { label: label(l)? }),
        ["r2add", og, ug, pa, s, r] => Some(MoveApplication::R2Add {
            over_gap: num(og)?,
            under_gap: num(ug)?,
            antiparallel: match *pa {
                "p" => false,
                "a" => true,
                _ => return None,
            },
            sign: sign(s)?,
            unders_first: under(r)?,
        }),
        ["r2remove", a, b] => Some(MoveApplication::R2Remove {
            first: label(a)?,
            second: label(b)?,
        }),
        ["r3", a, b, c] => Some(MoveApplication::R3 {
            segments: [num(a)?, num(b)?, num(c)?],
        }),
        _ => None,
    }
}
