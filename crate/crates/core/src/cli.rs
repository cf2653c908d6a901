//! Command-line front end: patch generation, factor tables, center search,
//! verification, singularity probes and SVG rendering.
//!
//! Exit codes: 0 on success, 1 when verification fails or a computation
//! refuses its input, 2 for usage errors. Identical invocations produce
//! byte-identical output; floats are printed with twelve decimals and never
//! read back into any computation.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;

use crate::golden::{Quad, Rational};
use crate::inflation::{self, InflationError, InflationFactor, InflationTriple};
use crate::lattice::LatticePoint;
use crate::pattern::{self, io as patch_io, svg, Membership, PatternError, Shift};

#[derive(Parser)]
#[command(
    name = "fivefold",
    version,
    about = "Penrose-type point patterns from the five-dimensional lattice, \
             with exact inflation symmetries"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a patch of the pattern and store it as JSON.
    Gen {
        /// Five comma-separated rational coordinates, e.g. "1/7,0,0,0,0".
        #[arg(long, allow_hyphen_values = true)]
        shift: String,
        /// Keep every vertex whose physical shadow has modulus at most this.
        #[arg(long)]
        radius: f64,
        /// Output path for the JSON patch document.
        #[arg(long)]
        out: PathBuf,
        /// Also render the patch to this SVG path.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// List every inflation factor with modulus up to a bound.
    Factors {
        /// Exact bound; integers, fractions "p/q" and decimals accepted.
        #[arg(long, allow_hyphen_values = true)]
        bound: String,
        /// Emit JSON instead of the aligned table.
        #[arg(long)]
        json: bool,
    },
    /// Search for inflation centers of a strict-class scaling triple.
    Centers {
        #[arg(long, allow_negative_numbers = true)]
        alpha: i64,
        #[arg(long, allow_negative_numbers = true)]
        beta: i64,
        #[arg(long, allow_negative_numbers = true)]
        gamma: i64,
        /// Five comma-separated rational coordinates, e.g. "1/7,0,0,0,0".
        #[arg(long, allow_hyphen_values = true)]
        shift: String,
        /// Physical-plane disk to search for level-0 centers.
        #[arg(long)]
        search_radius: f64,
        /// Keep at most this many centers, nearest first.
        #[arg(long)]
        max: usize,
        /// Emit JSON instead of one line per center.
        #[arg(long)]
        json: bool,
    },
    /// Re-check a stored patch against an inflation map, point by point.
    Verify {
        /// Path of a JSON patch document written by `gen`.
        #[arg(long)]
        patch: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        alpha: i64,
        #[arg(long, allow_negative_numbers = true)]
        beta: i64,
        #[arg(long, allow_negative_numbers = true)]
        gamma: i64,
        /// Level-0 center "t1,t2,t3,t4,t5"; defaults to the origin.
        #[arg(long, allow_hyphen_values = true)]
        center: Option<String>,
    },
    /// Probe a disk for lattice points sitting exactly on a window edge.
    Singular {
        /// Five comma-separated rational coordinates, e.g. "1/7,0,0,0,0".
        #[arg(long, allow_hyphen_values = true)]
        shift: String,
        /// Physical-plane disk to probe.
        #[arg(long)]
        radius: f64,
    },
    /// Render a stored patch to SVG.
    Render {
        /// Path of a JSON patch document written by `gen`.
        #[arg(long)]
        patch: PathBuf,
        /// Output path for the SVG document.
        #[arg(long)]
        out: PathBuf,
        /// Pixels per unit edge length.
        #[arg(long)]
        px_per_unit: Option<f64>,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Domain(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Domain(m) => m,
        }
    }
}

fn from_pattern(e: PatternError) -> Failure {
    match e {
        PatternError::InvalidRadius(_) => Failure::Usage(e.to_string()),
        _ => Failure::Domain(e.to_string()),
    }
}

fn from_inflation(e: InflationError) -> Failure {
    match e {
        InflationError::Pattern(PatternError::InvalidRadius(_)) => Failure::Usage(e.to_string()),
        _ => Failure::Domain(e.to_string()),
    }
}

/// Parses and dispatches, returning the process exit code. Usage errors and
/// domain errors go to stderr; results go to stdout.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // help and version print to stdout with code 0, usage errors to
            // stderr with code 2
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(cli.command) {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("error: {}", f.message());
            f.code()
        }
    }
}

fn execute(command: Command) -> Result<(), Failure> {
    match command {
        Command::Gen {
            shift,
            radius,
            out,
            svg: svg_out,
        } => {
            let shift = parse_shift(&shift)?;
            let mut patch = pattern::generate(&shift, radius).map_err(from_pattern)?;
            pattern::build_edges_faces(&mut patch);
            write_file(&out, &patch_io::write_patch(&patch))?;
            println!(
                "wrote {}: {} points, {} edges, {} faces{}",
                out.display(),
                patch.points.len(),
                patch.edges.len(),
                patch.faces.len(),
                if patch.singular { " (singular shift)" } else { "" }
            );
            if let Some(path) = svg_out {
                write_file(&path, &svg::render_svg(&patch, &svg::RenderOptions::default()))?;
                println!("wrote {}", path.display());
            }
            Ok(())
        }
        Command::Factors { bound, json } => {
            let bound = Quad::from_rational(parse_rational(&bound).map_err(Failure::Usage)?);
            let factors = inflation::enumerate_lambda(&bound);
            if json {
                let rows: Vec<serde_json::Value> = factors.iter().map(factor_json).collect();
                println!("{}", serde_json::to_string_pretty(&rows).expect("serializable"));
            } else {
                print!("{}", factors_table(&factors));
            }
            Ok(())
        }
        Command::Centers {
            alpha,
            beta,
            gamma,
            shift,
            search_radius,
            max,
            json,
        } => {
            let shift = parse_shift(&shift)?;
            let triple = InflationTriple::new(alpha, beta, gamma);
            let centers = inflation::find_centers(&shift, &triple, search_radius, max)
                .map_err(from_inflation)?;
            if json {
                let rows: Vec<serde_json::Value> = centers
                    .iter()
                    .map(|c| {
                        serde_json::json!({
                            "t": c.t.coords().to_vec(),
                            "pos": [c.center_display.0, c.center_display.1],
                            "margin": c.margin_used.to_f64(),
                            "margin_exact": c.margin_used.fmt_tau(),
                        })
                    })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&rows).expect("serializable"));
            } else {
                println!(
                    "{} centers for lambda = {} (class {})",
                    centers.len(),
                    triple.lambda(),
                    triple.class()
                );
                for c in &centers {
                    println!(
                        "{}  pos=({}, {})  margin={}",
                        c.t,
                        f12(c.center_display.0),
                        f12(c.center_display.1),
                        c.margin_used
                    );
                }
            }
            Ok(())
        }
        Command::Verify {
            patch,
            alpha,
            beta,
            gamma,
            center,
        } => {
            let patch = read_patch_file(&patch)?;
            let triple = InflationTriple::new(alpha, beta, gamma);
            let center = match center {
                None => LatticePoint::origin(),
                Some(text) => parse_center(&text)?,
            };
            let report =
                inflation::verify_patch(&patch, &triple, &center, false).map_err(from_inflation)?;
            if report.ok() {
                println!(
                    "verified {} points: every image stays in the pattern",
                    report.checked
                );
                Ok(())
            } else {
                for f in &report.failures {
                    println!(
                        "FAIL {} -> {} ({})",
                        f.pre,
                        f.image,
                        membership_name(f.membership)
                    );
                }
                Err(Failure::Domain(format!(
                    "{} of {} points failed verification",
                    report.failures.len(),
                    report.checked
                )))
            }
        }
        Command::Singular { shift, radius } => {
            let shift = parse_shift(&shift)?;
            match pattern::singular_witness(&shift, radius).map_err(from_pattern)? {
                Some(w) => println!("boundary witness {w}"),
                None => println!("no witness within radius {radius}"),
            }
            Ok(())
        }
        Command::Render {
            patch,
            out,
            px_per_unit,
        } => {
            let patch = read_patch_file(&patch)?;
            let mut opts = svg::RenderOptions::default();
            if let Some(px) = px_per_unit {
                opts.px_per_unit = px;
            }
            write_file(&out, &svg::render_svg(&patch, &opts))?;
            println!("wrote {}", out.display());
            Ok(())
        }
    }
}

fn parse_shift(text: &str) -> Result<Shift, Failure> {
    text.parse()
        .map_err(|e: PatternError| Failure::Usage(e.to_string()))
}

fn parse_center(text: &str) -> Result<LatticePoint, Failure> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 5 {
        return Err(Failure::Usage(format!(
            "center needs 5 comma-separated integers, got {}",
            parts.len()
        )));
    }
    let mut coords = [0i64; 5];
    for (slot, part) in coords.iter_mut().zip(&parts) {
        *slot = part
            .parse()
            .map_err(|_| Failure::Usage(format!("bad integer {part:?} in center")))?;
    }
    Ok(LatticePoint(coords))
}

/// Accepts integers, fractions "p/q" and plain decimals like "2.5"; all are
/// read exactly, never through a float.
fn parse_rational(text: &str) -> Result<Rational, String> {
    let t = text.trim();
    let bad = || format!("not a number: {text:?}");
    if let Some((int_part, frac_part)) = t.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int_part.starts_with('-');
        let whole: BigInt = match int_part {
            "" | "-" | "+" => BigInt::from(0),
            _ => int_part.parse().map_err(|_| bad())?,
        };
        let den = BigInt::from(10u32).pow(frac_part.len() as u32);
        let frac: BigInt = frac_part.parse().map_err(|_| bad())?;
        let num = if negative {
            &whole * &den - frac
        } else {
            &whole * &den + frac
        };
        Ok(Rational::new(num, den))
    } else {
        Rational::from_str(t).map_err(|_| bad())
    }
}

fn membership_name(m: Membership) -> &'static str {
    match m {
        Membership::Member => "member",
        Membership::Boundary => "boundary",
        Membership::NonMember => "non_member",
    }
}

/// Twelve decimals, with negative zero normalized away.
fn f12(v: f64) -> String {
    let s = format!("{v:.12}");
    if s.starts_with('-') && s.trim_start_matches(['-', '0', '.']).is_empty() {
        s[1..].to_string()
    } else {
        s
    }
}

fn factor_json(f: &InflationFactor) -> serde_json::Value {
    serde_json::json!({
        "lambda": f.lambda.to_f64(),
        "exact": f.lambda.fmt_tau(),
        "class": f.class.name(),
        "witnesses": f
            .witnesses
            .iter()
            .map(|w| {
                serde_json::json!({
                    "branch": w.branch,
                    "beta": w.beta,
                    "gamma": w.gamma,
                    "class": w.class.name(),
                })
            })
            .collect::<Vec<_>>(),
    })
}

fn factors_table(factors: &[InflationFactor]) -> String {
    let header = [
        "lambda".to_string(),
        "exact".to_string(),
        "branch".to_string(),
        "beta".to_string(),
        "gamma".to_string(),
        "class".to_string(),
    ];
    let mut rows = vec![header];
    for f in factors {
        for w in &f.witnesses {
            rows.push([
                f12(f.lambda.to_f64()),
                f.lambda.fmt_tau(),
                w.branch.to_string(),
                w.beta.to_string(),
                w.gamma.to_string(),
                w.class.name().to_string(),
            ]);
        }
    }
    render_columns(&rows)
}

fn render_columns<const N: usize>(rows: &[[String; N]]) -> String {
    let mut widths = [0usize; N];
    for row in rows {
        for (width, cell) in widths.iter_mut().zip(row) {
            *width = (*width).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            let pad = widths[i].saturating_sub(cell.chars().count());
            line.push_str(cell);
            for _ in 0..pad {
                line.push(' ');
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn read_patch_file(path: &PathBuf) -> Result<pattern::PatternPatch, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Domain(format!("cannot read {}: {e}", path.display())))?;
    patch_io::read_patch(&text).map_err(from_pattern)
}

fn write_file(path: &PathBuf, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents)
        .map_err(|e| Failure::Domain(format!("cannot write {}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golden::rat;

    #[test]
    fn rational_flag_parsing() {
        assert_eq!(parse_rational("3"), Ok(rat(3, 1)));
        assert_eq!(parse_rational("5/2"), Ok(rat(5, 2)));
        assert_eq!(parse_rational(" -7/3 "), Ok(rat(-7, 3)));
        assert_eq!(parse_rational("2.5"), Ok(rat(5, 2)));
        assert_eq!(parse_rational("-0.25"), Ok(rat(-1, 4)));
        assert_eq!(parse_rational(".5"), Ok(rat(1, 2)));
        assert!(parse_rational("1.2.3").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1.").is_err());
    }

    #[test]
    fn center_flag_parsing() {
        assert_eq!(
            parse_center("1, -2, 0, 0, 1").unwrap(),
            LatticePoint([1, -2, 0, 0, 1])
        );
        assert!(parse_center("1,2,3").is_err());
        assert!(parse_center("1,2,3,x,5").is_err());
    }

    #[test]
    fn twelve_decimal_format() {
        assert_eq!(f12(-Quad::tau().to_f64()), "-1.618033988750");
        assert_eq!(f12(0.0), "0.000000000000");
        assert_eq!(f12(-0.0), "0.000000000000");
        assert_eq!(f12(-1e-20), "0.000000000000");
    }

    #[test]
    fn factor_table_lists_witness_rows() {
        let factors = inflation::enumerate_lambda(&Quad::from_integer(2));
        let table = factors_table(&factors);
        let lines: Vec<&str> = table.lines().collect();
        assert_eq!(
            lines[0].split_whitespace().collect::<Vec<_>>(),
            ["lambda", "exact", "branch", "beta", "gamma", "class"]
        );
        assert!(table.contains("-1.618033988750"));
        assert!(table.contains("-τ"));
        assert!(table.contains("L_tilde_boundary"));
        // one row per witness plus the header
        let rows: usize = factors.iter().map(|f| f.witnesses.len()).sum();
        assert_eq!(lines.len(), rows + 1);
    }
}
