//! The `vknot` command line.
//!
//! [`run`] takes the full argv and writes to the given streams, so tests can
//! drive it without spawning a process. Exit codes: 0 success, 1 internal
//! error, 2 input error, 3 search exhausted.

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};
use vknot_core::free::{contains_smoothing_isomorphic_to, is_irreducibly_odd, project, FreeKnotDiagram};
use vknot_core::moves::{apply_move, bounded_equiv_search_with, enumerate_moves, SearchBounds, SearchOutcome, SearchStats};
use vknot_core::parity::parities;
use vknot_core::sawollek::normalized_sawollek;
use vknot_core::seifert::{apply_surface_move, kappa, linking_number, validate, LoopSite, SurfaceDiagram, SurfaceMove};
use vknot_core::{is_realizable, odd_writhe, GaussDiagram, Sign};

use crate::catalog::{self, Kind, Provenance};
use crate::move_syntax::{format_move, parse_move};
use crate::surface_file::{format_surface, parse_surface};

pub const SCHEMA_VERSION: u64 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_EXHAUSTED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "vknot", version, about = "Virtual knot invariants, moves and Seifert surface diagrams")]
struct Cli {
    /// Print a JSON envelope instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a Gauss code (or a surface file with --surface).
    Validate {
        input: String,
        #[arg(long)]
        surface: bool,
    },
    Invariant {
        #[command(subcommand)]
        which: InvariantCmd,
    },
    Moves {
        #[command(subcommand)]
        which: MovesCmd,
    },
    /// Breadth-first search for a Reidemeister move sequence.
    Equiv {
        source: String,
        target: String,
        #[command(flatten)]
        bounds: BoundArgs,
        /// Include search statistics in the output.
        #[arg(long)]
        stats: bool,
    },
    Free {
        #[command(subcommand)]
        which: FreeCmd,
    },
    /// Operations on surface diagram files.
    Cover {
        #[command(subcommand)]
        which: CoverCmd,
    },
    Catalog {
        #[command(subcommand)]
        which: CatalogCmd,
    },
}

#[derive(Subcommand, Debug)]
enum InvariantCmd {
    OddWrithe { code: String },
    /// Gaussian parity of every label.
    Parity { code: String },
    Sawollek { code: String },
    Writhe { code: String },
    Realizable { code: String },
}

#[derive(Subcommand, Debug)]
enum MovesCmd {
    /// Every move applicable to the code as written.
    List {
        code: String,
        #[arg(long, default_value_t = 6)]
        max_crossings: usize,
    },
    /// Apply one move, e.g. `r1add:0:o:+` or `r3:0:2:4`.
    Apply { code: String, r#move: String },
}

#[derive(Args, Debug)]
struct BoundArgs {
    #[arg(long, default_value_t = 6)]
    max_crossings: usize,
    #[arg(long, default_value_t = 100_000)]
    max_states: usize,
    #[arg(long)]
    max_seconds: Option<f64>,
}

#[derive(Subcommand, Debug)]
enum FreeCmd {
    /// Forget signs and over/under information.
    Project { code: String },
    IrreduciblyOdd { code: String },
    /// Whether some smoothing of the candidate is isomorphic to the pattern.
    Reproduced {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        candidate: String,
    },
}

#[derive(Subcommand, Debug)]
enum CoverCmd {
    /// The virtual knot read off the surface diagram.
    Kappa { file: String },
    Linking { file: String },
    /// Apply a loop, unloop or pass move and print the new surface file.
    Move {
        /// `band,position,+|-,o|u` with a 1-based band.
        #[arg(long = "loop", group = "site")]
        loop_site: Option<String>,
        /// 1-based crossing record to remove.
        #[arg(long, group = "site")]
        unloop: Option<usize>,
        /// 1-based crossing record to pass.
        #[arg(long, group = "site")]
        pass: Option<usize>,
        file: String,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogCmd {
    List,
    Show { name: String },
}

struct Output {
    command: &'static str,
    result: Value,
    text: String,
    code: i32,
}

impl Output {
    fn ok(command: &'static str, result: Value, text: impl Into<String>) -> Output {
        Output {
            command,
            result,
            text: text.into(),
            code: EXIT_OK,
        }
    }
}

struct InputError(Vec<String>);

impl InputError {
    fn one(msg: impl Into<String>) -> InputError {
        InputError(vec![msg.into()])
    }
}

/// `Variant: message`, so diagnostics carry the error kind.
fn diagnostic<E: std::fmt::Debug + std::fmt::Display>(e: &E) -> String {
    let dbg = format!("{e:?}");
    let name: String = dbg.chars().take_while(|c| c.is_alphanumeric() || *c == '_').collect();
    format!("{name}: {e}")
}

fn read_arg(arg: &str) -> Result<String, InputError> {
    match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map(|s| s.trim().to_string())
            .map_err(|e| InputError::one(format!("Io: {path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}

fn gauss(arg: &str) -> Result<GaussDiagram, InputError> {
    GaussDiagram::parse(&read_arg(arg)?).map_err(|e| InputError::one(diagnostic(&e)))
}

fn free_code(arg: &str) -> Result<FreeKnotDiagram, InputError> {
    FreeKnotDiagram::parse(&read_arg(arg)?).map_err(|e| InputError::one(diagnostic(&e)))
}

fn surface(path: &str) -> Result<SurfaceDiagram, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError::one(format!("Io: {path}: {e}")))?;
    let sd = parse_surface(&text).map_err(|e| InputError::one(format!("SurfaceFile: {e}")))?;
    let v = validate(&sd);
    if v.is_empty() {
        Ok(sd)
    } else {
        Err(InputError(v.iter().map(|v| format!("InvalidSurfaceDiagram: {v:?}")).collect()))
    }
}

fn stats_json(s: &SearchStats) -> Value {
    json!({
        "visited": s.visited,
        "expanded": s.expanded,
        "depth": s.depth,
        "stop": format!("{:?}", s.stop),
    })
}

fn stats_text(s: &SearchStats) -> String {
    format!(
        "visited {} expanded {} depth {} stop {:?}",
        s.visited, s.expanded, s.depth, s.stop
    )
}

fn parse_loop_site(text: &str) -> Option<LoopSite> {
    let f: Vec<&str> = text.split(',').map(str::trim).collect();
    let [band, position, sign, role] = f.as_slice() else {
        return None;
    };
    let band = band.parse::<usize>().ok()?.checked_sub(1)?;
    Some(LoopSite {
        band,
        position: position.parse().ok()?,
        sign: match *sign {
            "+" => Sign::Plus,
            "-" => Sign::Minus,
            _ => return None,
        },
        over_first: match *role {
            "o" => true,
            "u" => false,
            _ => return None,
        },
    })
}

fn execute(cmd: Command) -> Result<Output, InputError> {
    Ok(match cmd {
        Command::Validate { input, surface: false } => {
            let d = gauss(&input)?;
            let code = d.to_code();
            Output::ok("validate", json!({ "kind": "gauss", "canonical": code, "crossings": d.arrow_count() }), code)
        }
        Command::Validate { input, surface: true } => {
            let sd = surface(&input)?;
            let result = json!({
                "kind": "surface",
                "genus": sd.surface.genus,
                "band_crossings": sd.surface.band_crossings.len(),
                "events": sd.events.len(),
            });
            Output::ok("validate", result, format!("valid surface diagram of genus {}", sd.surface.genus))
        }
        Command::Invariant { which } => invariant(which)?,
        Command::Moves { which } => moves(which)?,
        Command::Equiv {
            source,
            target,
            bounds,
            stats,
        } => equiv(&source, &target, &bounds, stats)?,
        Command::Free { which } => free(which)?,
        Command::Cover { which } => cover(which)?,
        Command::Catalog { which } => catalog_cmd(which)?,
    })
}

fn invariant(which: InvariantCmd) -> Result<Output, InputError> {
    Ok(match which {
        InvariantCmd::OddWrithe { code } => {
            let v = odd_writhe(&gauss(&code)?);
            Output::ok("invariant odd-writhe", json!(v), v.to_string())
        }
        InvariantCmd::Parity { code } => {
            let d = gauss(&code)?;
            let mut map = Map::new();
            for (label, p) in d.labels().zip(parities(&d)) {
                map.insert(label.to_string(), json!(format!("{p:?}")));
            }
            let v = Value::Object(map);
            Output::ok("invariant parity", v.clone(), v.to_string())
        }
        InvariantCmd::Sawollek { code } => {
            let p = normalized_sawollek(&gauss(&code)?).to_string();
            Output::ok("invariant sawollek", json!(p), p)
        }
        InvariantCmd::Writhe { code } => {
            let v = gauss(&code)?.writhe();
            Output::ok("invariant writhe", json!(v), v.to_string())
        }
        InvariantCmd::Realizable { code } => {
            let v = is_realizable(&gauss(&code)?);
            Output::ok("invariant realizable", json!(v), v.to_string())
        }
    })
}

fn moves(which: MovesCmd) -> Result<Output, InputError> {
    Ok(match which {
        MovesCmd::List { code, max_crossings } => {
            let d = gauss(&code)?;
            let bounds = SearchBounds {
                max_crossings,
                ..SearchBounds::default()
            };
            let mut items = Vec::new();
            let mut text = String::new();
            for mv in enumerate_moves(&d, &bounds) {
                let after = apply_move(&d, &mv).expect("enumerated move applies").to_code();
                let name = format_move(&mv);
                text.push_str(&format!("{name}\t{after}\n"));
                items.push(json!({ "move": name, "kind": format!("{:?}", mv.kind()), "result": after }));
            }
            Output::ok("moves list", Value::Array(items), text.trim_end().to_string())
        }
        MovesCmd::Apply { code, r#move } => {
            let d = gauss(&code)?;
            let mv = parse_move(&r#move).ok_or_else(|| InputError::one(format!("MoveSyntax: cannot parse move `{move}`")))?;
            let after = apply_move(&d, &mv).map_err(|e| InputError::one(diagnostic(&e)))?.to_code();
            Output::ok("moves apply", json!(after), after)
        }
    })
}

fn equiv(source: &str, target: &str, b: &BoundArgs, with_stats: bool) -> Result<Output, InputError> {
    let (s, t) = (gauss(source)?, gauss(target)?);
    let bounds = SearchBounds {
        max_crossings: b.max_crossings,
        max_states: b.max_states,
    };
    let deadline = match b.max_seconds {
        Some(secs) if secs.is_finite() && secs >= 0.0 => Some(Instant::now() + Duration::from_secs_f64(secs)),
        Some(secs) => return Err(InputError::one(format!("Bounds: invalid --max-seconds {secs}"))),
        None => None,
    };
    let mut interrupt = || deadline.is_some_and(|d| Instant::now() >= d);
    let outcome = bounded_equiv_search_with(&s, &t, &bounds, &mut interrupt);
    let (mut result, mut text, stats, code) = match &outcome {
        SearchOutcome::Equivalent { path, stats } => {
            let names: Vec<String> = path.iter().map(format_move).collect();
            let mut text = format!("equivalent in {} moves", names.len());
            for n in &names {
                text.push('\n');
                text.push_str(n);
            }
            (json!({ "outcome": "Equivalent", "path": names }), text, stats, EXIT_OK)
        }
        SearchOutcome::Exhausted { stats } => (
            json!({ "outcome": "Exhausted" }),
            "exhausted".to_string(),
            stats,
            EXIT_EXHAUSTED,
        ),
    };
    if with_stats {
        result["stats"] = stats_json(stats);
        text.push('\n');
        text.push_str(&stats_text(stats));
    }
    Ok(Output {
        command: "equiv",
        result,
        text,
        code,
    })
}

fn free(which: FreeCmd) -> Result<Output, InputError> {
    Ok(match which {
        FreeCmd::Project { code } => {
            let f = project(&gauss(&code)?).to_code();
            Output::ok("free project", json!(f), f)
        }
        FreeCmd::IrreduciblyOdd { code } => {
            let v = is_irreducibly_odd(&free_code(&code)?);
            Output::ok("free irreducibly-odd", json!(v), v.to_string())
        }
        FreeCmd::Reproduced { pattern, candidate } => {
            let (p, c) = (free_code(&pattern)?, free_code(&candidate)?);
            let v = contains_smoothing_isomorphic_to(&c, &p);
            Output::ok("free reproduced", json!(v), v.to_string())
        }
    })
}

fn cover(which: CoverCmd) -> Result<Output, InputError> {
    Ok(match which {
        CoverCmd::Kappa { file } => {
            let code = kappa(&surface(&file)?).map_err(|e| InputError::one(diagnostic(&e)))?.to_code();
            Output::ok("cover kappa", json!(code), code)
        }
        CoverCmd::Linking { file } => {
            let v = linking_number(&surface(&file)?).map_err(|e| InputError::one(diagnostic(&e)))?;
            Output::ok("cover linking", json!(v), v.to_string())
        }
        CoverCmd::Move {
            loop_site,
            unloop,
            pass,
            file,
        } => {
            let index = |k: usize| {
                k.checked_sub(1)
                    .ok_or_else(|| InputError::one("MoveSyntax: crossing records are numbered from 1"))
            };
            let mv = match (loop_site, unloop, pass) {
                (Some(s), None, None) => SurfaceMove::Loop(
                    parse_loop_site(&s).ok_or_else(|| InputError::one(format!("MoveSyntax: cannot parse loop site `{s}`")))?,
                ),
                (None, Some(k), None) => SurfaceMove::Unloop { record: index(k)? },
                (None, None, Some(k)) => SurfaceMove::Pass { record: index(k)? },
                _ => return Err(InputError::one("MoveSyntax: give exactly one of --loop, --unloop, --pass")),
            };
            let sd = apply_surface_move(&surface(&file)?, &mv).map_err(|e| InputError::one(diagnostic(&e)))?;
            let text = format_surface(&sd);
            Output::ok("cover move", json!(text), text.trim_end().to_string())
        }
    })
}

fn kind_name(k: Kind) -> &'static str {
    match k {
        Kind::Gauss => "gauss",
        Kind::Free => "free",
        Kind::Surface => "surface",
    }
}

fn provenance_name(p: Provenance) -> &'static str {
    match p {
        Provenance::Transcribed => "transcribed",
        Provenance::Constructed => "constructed",
        Provenance::SearchFound => "search-found",
    }
}

fn catalog_cmd(which: CatalogCmd) -> Result<Output, InputError> {
    Ok(match which {
        CatalogCmd::List => {
            let mut items = Vec::new();
            let mut text = String::new();
            for name in catalog::list() {
                let e = catalog::get(name).expect("listed entry exists");
                text.push_str(&format!("{}\t{}\t{}\n", e.name, kind_name(e.kind), provenance_name(e.provenance)));
                items.push(json!({
                    "name": e.name,
                    "kind": kind_name(e.kind),
                    "provenance": provenance_name(e.provenance),
                    "notes": e.notes,
                }));
            }
            Output::ok("catalog list", Value::Array(items), text.trim_end().to_string())
        }
        CatalogCmd::Show { name } => {
            let e = catalog::get(&name).map_err(|e| InputError::one(diagnostic(&e)))?;
            let result = json!({
                "name": e.name,
                "kind": kind_name(e.kind),
                "provenance": provenance_name(e.provenance),
                "notes": e.notes,
                "payload": e.payload,
            });
            Output::ok("catalog show", result, e.payload.trim_end().to_string())
        }
    })
}

fn envelope(command: &str, result: Value, diagnostics: &[String]) -> String {
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "result": result,
        "diagnostics": diagnostics,
    })
    .to_string()
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Validate { .. } => "validate",
        Command::Invariant { which } => match which {
            InvariantCmd::OddWrithe { .. } => "invariant odd-writhe",
            InvariantCmd::Parity { .. } => "invariant parity",
            InvariantCmd::Sawollek { .. } => "invariant sawollek",
            InvariantCmd::Writhe { .. } => "invariant writhe",
            InvariantCmd::Realizable { .. } => "invariant realizable",
        },
        Command::Moves { which } => match which {
            MovesCmd::List { .. } => "moves list",
            MovesCmd::Apply { .. } => "moves apply",
        },
        Command::Equiv { .. } => "equiv",
        Command::Free { which } => match which {
            FreeCmd::Project { .. } => "free project",
            FreeCmd::IrreduciblyOdd { .. } => "free irreducibly-odd",
            FreeCmd::Reproduced { .. } => "free reproduced",
        },
        Command::Cover { which } => match which {
            CoverCmd::Kappa { .. } => "cover kappa",
            CoverCmd::Linking { .. } => "cover linking",
            CoverCmd::Move { .. } => "cover move",
        },
        Command::Catalog { which } => match which {
            CatalogCmd::List => "catalog list",
            CatalogCmd::Show { .. } => "catalog show",
        },
    }
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let wants_json = args.iter().skip(1).any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            if wants_json {
                let msg = format!("Usage: {}", e.kind());
                let _ = writeln!(out, "{}", envelope("", Value::Null, &[msg]));
            } else {
                let _ = write!(err, "{e}");
            }
            return EXIT_INPUT;
        }
    };
    let json_mode = cli.json;
    let name = command_name(&cli.command);
    let outcome = catch_unwind(AssertUnwindSafe(|| execute(cli.command)));
    let io = match outcome {
        Ok(Ok(o)) => {
            let r = if json_mode {
                writeln!(out, "{}", envelope(o.command, o.result, &[]))
            } else {
                writeln!(out, "{}", o.text)
            };
            r.map(|_| o.code)
        }
        Ok(Err(InputError(diags))) => {
            let r = if json_mode {
                writeln!(out, "{}", envelope(name, Value::Null, &diags))
            } else {
                diags.iter().try_for_each(|d| writeln!(err, "error: {d}"))
            };
            r.map(|_| EXIT_INPUT)
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            let diag = format!("Internal: {msg}");
            let _ = if json_mode {
                writeln!(out, "{}", envelope(name, Value::Null, &[diag]))
            } else {
                writeln!(err, "error: {diag}")
            };
            Ok(EXIT_INTERNAL)
        }
    };
    io.unwrap_or(EXIT_INTERNAL)
}
