use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use tpk::banded::{from_triplane, parse_bnd, validate_banded_with_budget, Band, Side};
use tpk::braid::BraidWord;
use tpk::generators::{self, StandardKind};
use tpk::group::{abelianization, count_homs, presentation_from_banded, tietze_simplify};
use tpk::linkdiag::DEFAULT_MOVE_BUDGET;
use tpk::moves;
use tpk::render::{render_svg, RenderSpec};
use tpk::surface::summarize;
use tpk::triplane::{
    branched_cover_params, emit_tpd, euler_characteristic, meridional_rank_bound, parse_tpd,
    patch_counts, validate_with_budget, Overall, TriPlaneDiagram,
};

const SCHEMA: &str = "tpk/1";

#[derive(Parser)]
#[command(name = "tpk", version, about = "Tri-plane diagrams of knotted surfaces in S4")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Simplification move budget; overrides TPK_BUDGET.
    #[arg(long, global = true)]
    budget: Option<usize>,
    /// Emit machine-readable reports.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check that all three sector unions certify as unlinks.
    Validate { file: String },
    /// Parameters, Euler characteristic, surface type, and derived bounds.
    Invariants { file: String },
    /// Fundamental group presentation of the complement and finite quotients.
    Group {
        file: String,
        /// Count homomorphisms to this symmetric group, e.g. S3.
        #[arg(long, default_value = "S3")]
        quotient: String,
    },
    /// Emit a certified example diagram.
    Gen(GenArgs),
    /// Apply a tri-plane move and emit the result.
    Move(MoveArgs),
    /// Apply a banded-unlink move and emit the result.
    Band(BandArgs),
    /// Render a diagram as SVG.
    Render {
        file: String,
        #[arg(long, default_value_t = 900.0)]
        width: f64,
        #[arg(long, default_value_t = 300.0)]
        height: f64,
    },
}

#[derive(Args)]
struct GenArgs {
    /// sphere | rp2:+ | rp2:- | torus | klein:<j> | kij:<i>,<j> | spin
    kind: String,
    /// Plat word of the knot to spin, e.g. "2 2 2".
    #[arg(long)]
    plat: Option<String>,
    /// Number of full twists for a twist spin.
    #[arg(long, default_value_t = 0)]
    twists: i32,
}

#[derive(Args)]
struct MoveArgs {
    file: String,
    /// Sector to stabilize, optionally with a site: <sector>[:<x>,<y>].
    #[arg(long)]
    stabilize: Option<String>,
    /// Destabilize using the first witness found ("auto").
    #[arg(long)]
    destab: Option<String>,
    /// Mutual braid transposition by the signed generator k.
    #[arg(long)]
    mutual: Option<i32>,
    /// Connected sum with a second diagram file.
    #[arg(long)]
    connect: Option<String>,
}

#[derive(Args)]
struct BandArgs {
    file: String,
    /// Cup move: split off a trivially banded circle.
    #[arg(long)]
    cup: bool,
    /// Cap move: attach the given band, written as in the file format.
    #[arg(long)]
    cap: Option<String>,
    /// Slide band A across band B: <A>,<B>,<band...>.
    #[arg(long)]
    slide: Option<String>,
    /// Swim band A through band B: <A>,<B>,<band...>.
    #[arg(long)]
    swim: Option<String>,
}

fn budget(cli: &Cli) -> usize {
    cli.budget
        .or_else(|| std::env::var("TPK_BUDGET").ok()?.parse().ok())
        .unwrap_or(DEFAULT_MOVE_BUDGET)
}

enum CliError {
    Usage(String),
    Failed(String),
}

fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

fn read_tpd(path: &str) -> Result<TriPlaneDiagram, CliError> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))?;
    parse_tpd(&text).map_err(|e| usage(format!("{path}: {e}")))
}

fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.cmd {
        Cmd::Validate { file } => {
            let t = read_tpd(file)?;
            let r = validate_with_budget(&t, budget(cli));
            let (c1, c2, c3) = r.patch_counts;
            let verdicts: Vec<String> = r.verdicts.iter().map(|v| format!("{v:?}")).collect();
            let out = if cli.json {
                json!({
                    "schema": SCHEMA,
                    "bridges": t.bridges(),
                    "patch_counts": [c1, c2, c3],
                    "sectors": verdicts,
                    "overall": format!("{:?}", r.overall),
                })
                .to_string()
            } else {
                format!(
                    "{:?} ({},{},{}) b={}\n{}",
                    r.overall,
                    c1,
                    c2,
                    c3,
                    t.bridges(),
                    verdicts.join("\n")
                )
            };
            if r.overall == Overall::Invalid {
                return Err(CliError::Failed(out));
            }
            Ok(out)
        }
        Cmd::Invariants { file } => {
            let t = read_tpd(file)?;
            let (c1, c2, c3) = patch_counts(&t);
            let s = summarize(&t).map_err(|e| CliError::Failed(format!("{e:?}")))?;
            let (cb, (d1, d2, d3)) = branched_cover_params(&t);
            let comps: Vec<_> = s
                .components
                .iter()
                .map(|c| json!({"chi": c.chi, "orientable": c.orientable, "type": c.type_name}))
                .collect();
            if cli.json {
                Ok(json!({
                    "schema": SCHEMA,
                    "bridges": t.bridges(),
                    "patch_counts": [c1, c2, c3],
                    "euler_characteristic": euler_characteristic(&t),
                    "components": comps,
                    "meridional_rank_bound": meridional_rank_bound(&t),
                    "branched_cover_params": [cb, d1, d2, d3],
                })
                .to_string())
            } else {
                let names: Vec<&str> =
                    s.components.iter().map(|c| c.type_name.as_str()).collect();
                Ok(format!(
                    "(b; c1,c2,c3) = ({}; {},{},{})\nchi = {}\nsurface = {}\nmrk bound = {}\nbranched cover = ({}; {},{},{})",
                    t.bridges(),
                    c1,
                    c2,
                    c3,
                    euler_characteristic(&t),
                    names.join(" + "),
                    meridional_rank_bound(&t),
                    cb,
                    d1,
                    d2,
                    d3
                ))
            }
        }
        Cmd::Group { file, quotient } => {
            let t = read_tpd(file)?;
            let n: usize = quotient
                .strip_prefix('S')
                .and_then(|s| s.parse().ok())
                .filter(|&n| (2..=6).contains(&n))
                .ok_or_else(|| usage(format!("quotient must be S2..S6, got {quotient}")))?;
            let (bl, _) = from_triplane(&t, budget(cli))
                .map_err(|e| CliError::Failed(format!("{e}")))?;
            let p = presentation_from_banded(&bl)
                .map_err(|e| CliError::Failed(format!("{e}")))?;
            let p = tietze_simplify(&p, budget(cli));
            let ab = abelianization(&p);
            let homs = count_homs(&p, n).map_err(|e| CliError::Failed(format!("{e}")))?;
            if cli.json {
                Ok(json!({
                    "schema": SCHEMA,
                    "presentation": p.emit_text(),
                    "abelianization": {"free_rank": ab.free_rank, "torsion": ab.torsion},
                    "quotient": quotient,
                    "hom_count": homs,
                })
                .to_string())
            } else {
                Ok(format!(
                    "{}abelianization: Z^{} + {:?}\n|Hom(pi, {})| = {}",
                    p.emit_text(),
                    ab.free_rank,
                    ab.torsion,
                    quotient,
                    homs
                ))
            }
        }
        Cmd::Gen(g) => {
            let (t, meta) = match g.kind.as_str() {
                "sphere" => generators::unknotted_sphere(),
                "rp2:+" => generators::projective_plane(true),
                "rp2:-" => generators::projective_plane(false),
                "torus" => generators::standard_surface(StandardKind::Torus)
                    .map_err(|e| CliError::Failed(format!("{e}")))?,
                "spin" => {
                    let word = g
                        .plat
                        .as_deref()
                        .ok_or_else(|| usage("spin requires --plat \"<word>\""))?;
                    let letters: Vec<i32> = word
                        .split_whitespace()
                        .map(|t| t.parse::<i32>().map_err(|e| usage(format!("{t}: {e}"))))
                        .collect::<Result<_, _>>()?;
                    let maxl = letters.iter().map(|l| l.unsigned_abs()).max().unwrap_or(1);
                    let strands = (maxl as usize + 2) & !1;
                    let plat = BraidWord::new(strands, letters).map_err(usage)?;
                    generators::twist_spin(&plat, g.twists)
                        .map_err(|e| CliError::Failed(format!("{e}")))?
                }
                other => {
                    if let Some(j) = other.strip_prefix("klein:") {
                        let j: usize = j.parse().map_err(usage)?;
                        generators::standard_surface(StandardKind::Klein(j))
                            .map_err(|e| CliError::Failed(format!("{e}")))?
                    } else if let Some(ij) = other.strip_prefix("kij:") {
                        let (i, j) = ij
                            .split_once(',')
                            .ok_or_else(|| usage("kij takes <i>,<j>"))?;
                        let i: usize = i.parse().map_err(usage)?;
                        let j: usize = j.parse().map_err(usage)?;
                        generators::standard_surface(StandardKind::Kij(i, j))
                            .map_err(|e| CliError::Failed(format!("{e}")))?
                    } else {
                        return Err(usage(format!("unknown generator {other}")));
                    }
                }
            };
            let mut out = String::new();
            out.push_str(&format!("# {}", meta.name));
            if let Some(n) = &meta.notes {
                out.push_str(&format!(" ({n})"));
            }
            out.push('\n');
            out.push_str(&emit_tpd(&t));
            Ok(out)
        }
        Cmd::Move(m) => {
            let mut t = read_tpd(&m.file)?;
            let mut applied = false;
            if let Some(spec) = &m.stabilize {
                let (sector, site) = match spec.split_once(':') {
                    Some((s, xy)) => {
                        let sector: usize = s.parse().map_err(usage)?;
                        let (x, y) = xy
                            .split_once(',')
                            .ok_or_else(|| usage("site is <x>,<y>"))?;
                        (
                            sector,
                            moves::StabSite {
                                x: x.parse().map_err(usage)?,
                                y: y.parse().map_err(usage)?,
                            },
                        )
                    }
                    None => {
                        let sector: usize = spec.parse().map_err(usage)?;
                        let site = moves::default_site(&t, sector)
                            .map_err(|e| CliError::Failed(format!("{e}")))?;
                        (sector, site)
                    }
                };
                t = moves::stabilize(&t, sector, site)
                    .map_err(|e| CliError::Failed(format!("{e}")))?;
                applied = true;
            }
            if let Some(mode) = &m.destab {
                if mode != "auto" {
                    return Err(usage("only --destab auto is supported"));
                }
                let ws = moves::find_destabilizations(&t, budget(cli));
                let w = ws
                    .first()
                    .ok_or_else(|| CliError::Failed("no destabilization witness found".into()))?;
                t = moves::destabilize(&t, w).map_err(|e| CliError::Failed(format!("{e}")))?;
                applied = true;
            }
            if let Some(k) = m.mutual {
                t = moves::mutual_transposition(&t, k)
                    .map_err(|e| CliError::Failed(format!("{e}")))?;
                applied = true;
            }
            if let Some(other) = &m.connect {
                let o = read_tpd(other)?;
                t = moves::connected_sum(&t, &o);
                applied = true;
            }
            if !applied {
                return Err(usage("no move requested"));
            }
            Ok(emit_tpd(&t))
        }
        Cmd::Band(b) => {
            let text =
                fs::read_to_string(&b.file).map_err(|e| usage(format!("{}: {e}", b.file)))?;
            let mut bl = parse_bnd(&text).map_err(|e| usage(format!("{}: {e}", b.file)))?;
            let mut applied = false;
            if b.cup {
                bl = moves::cup(&bl).map_err(|e| CliError::Failed(format!("{e}")))?;
                applied = true;
            }
            if let Some(spec) = &b.cap {
                bl = moves::cap(&bl, parse_band_spec(spec)?)
                    .map_err(|e| CliError::Failed(format!("{e}")))?;
                applied = true;
            }
            for (spec, slide) in [(&b.slide, true), (&b.swim, false)] {
                let Some(spec) = spec else { continue };
                let mut parts = spec.splitn(3, ',');
                let (i, j, band) = (
                    parts.next().ok_or_else(|| usage("need <A>,<B>,<band>"))?,
                    parts.next().ok_or_else(|| usage("need <A>,<B>,<band>"))?,
                    parts.next().ok_or_else(|| usage("need <A>,<B>,<band>"))?,
                );
                let i: usize = i.parse().map_err(usage)?;
                let j: usize = j.parse().map_err(usage)?;
                let band = parse_band_spec(band)?;
                bl = if slide {
                    moves::band_slide(&bl, i, j, band)
                } else {
                    moves::band_swim(&bl, i, j, band)
                }
                .map_err(|e| CliError::Failed(format!("{e}")))?;
                applied = true;
            }
            if !applied {
                return Err(usage("no band move requested"));
            }
            let r = validate_banded_with_budget(&bl, budget(cli));
            if matches!(r.overall, Overall::Invalid) {
                return Err(CliError::Failed("result fails banded validation".into()));
            }
            Ok(tpk::banded::emit_bnd(&bl))
        }
        Cmd::Render {
            file,
            width,
            height,
        } => {
            let t = read_tpd(file)?;
            let spec = RenderSpec {
                width: *width,
                height: *height,
                ..RenderSpec::default()
            };
            Ok(render_svg(&t, &spec))
        }
    }
}

/// Band syntax as in the file format body: `<start> <end> [<col>:over|under ...] [0:curls <n>]`.
fn parse_band_spec(spec: &str) -> Result<Band, CliError> {
    let mut feet = Vec::new();
    let mut byps = Vec::new();
    let mut curls = 0i32;
    let mut toks = spec.split_whitespace().peekable();
    while let Some(tok) = toks.next() {
        if let Some((col, side)) = tok.split_once(':') {
            if col == "0" && side == "curls" {
                let v = toks.next().ok_or_else(|| usage("0:curls needs a value"))?;
                curls = v.parse().map_err(usage)?;
                continue;
            }
            let col: usize = col.parse().map_err(usage)?;
            let side = match side {
                "over" => Side::Over,
                "under" => Side::Under,
                other => return Err(usage(format!("side must be over|under, got {other}"))),
            };
            byps.push((col, side));
        } else {
            feet.push(tok.parse::<usize>().map_err(usage)?);
        }
    }
    if feet.len() != 2 {
        return Err(usage("band needs exactly two feet"));
    }
    Band::new(feet[0], feet[1], byps, curls).map_err(|e| usage(format!("{e}")))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            use std::io::Write;
            // tolerate downstream consumers closing the pipe early
            let _ = writeln!(std::io::stdout(), "{out}");
            ExitCode::SUCCESS
        }
        Err(CliError::Failed(msg)) => {
            eprintln!("{msg}");
            ExitCode::FAILURE
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
