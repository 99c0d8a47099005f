//! Command-line front end.
//!
//! ```text
//! theodorus seq --kind fib --from 1 --to 5
//! theodorus verify --all --json
//! theodorus render --kind theodorus --n 16 --out spiral.svg
//! ```
//!
//! Exit status: 0 when everything checked is verified, 1 when a claim is
//! refuted or undecided or a computation fails, 2 on usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::{Error, Result};
use crate::exact_seq::{pi, IntervalReal, SequenceSpec, DEFAULT_PRECISION_CAP};
use crate::export_render::{export_report, render_svg, ColorScheme, Format, RenderOptions, Table};
use crate::metrics::{
    circle_metrics_of, generalized_area, hahn_area_capped, hahn_bounds, t_sum_capped, triangle_area, DEFAULT_TERM_CAP,
};
use crate::spiral_engine::{angle, geometry, triangle, windings_count};
use crate::verifier::{
    aggregate_status, scan_floor_entries, verify_all, verify_claim_with, ClaimId, ClaimParams, ClaimReport, Status,
    VerifyConfig, FLOOR_EXCEPTION,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "theodorus",
    version,
    about = "Theodorus-type spirals: exact metrics and claim checks"
)]
struct Cli {
    /// Starting interval precision in bits.
    #[arg(long, global = true, env = "SPIRAL_PRECISION_BITS", default_value_t = 128,
          value_parser = clap::value_parser!(u32).range(53..=65536))]
    precision_bits: u32,

    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct MachineFormat {
    /// Emit JSON.
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV.
    #[arg(long)]
    csv: bool,
}

impl MachineFormat {
    fn format(&self) -> Option<Format> {
        match (self.json, self.csv) {
            (true, _) => Some(Format::Json),
            (_, true) => Some(Format::Csv),
            _ => None,
        }
    }
}

fn parse_spec(s: &str) -> std::result::Result<SequenceSpec, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_claim(s: &str) -> std::result::Result<ClaimId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Args)]
struct Kind {
    /// Sequence: fib, lucas, additive:A,B or theodorus.
    #[arg(long, default_value = "fib", value_parser = parse_spec)]
    kind: SequenceSpec,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print sequence terms.
    Seq {
        #[command(flatten)]
        kind: Kind,
        #[arg(long, default_value_t = 1)]
        from: u64,
        #[arg(long, alias = "n-max", default_value_t = 10)]
        to: u64,
        #[command(flatten)]
        fmt: MachineFormat,
    },
    /// Describe triangle n.
    Triangle {
        #[command(flatten)]
        kind: Kind,
        #[arg(long)]
        n: u64,
        /// Significant digits for interval values.
        #[arg(long, default_value_t = 12)]
        digits: usize,
        #[command(flatten)]
        fmt: MachineFormat,
    },
    /// Areas, perimeters, angles and circles over a range.
    Metrics {
        #[command(flatten)]
        kind: Kind,
        #[arg(long, default_value_t = 1)]
        from: u64,
        #[arg(long, alias = "n-max", default_value_t = 10)]
        to: u64,
        /// Add the generalized area A_{n,m} and the sum T_{n,m} (Fibonacci only).
        #[arg(long)]
        m: Option<u64>,
        #[arg(long, default_value_t = 12)]
        digits: usize,
        #[command(flatten)]
        fmt: MachineFormat,
    },
    /// Hahn areas, their ratios and integral bounds.
    Hahn {
        #[arg(long, default_value_t = 1)]
        from: u64,
        #[arg(long, alias = "to", default_value_t = 20)]
        n_max: u64,
        #[arg(long, default_value_t = DEFAULT_TERM_CAP)]
        term_cap: u64,
        #[arg(long, default_value_t = 12)]
        digits: usize,
        #[command(flatten)]
        fmt: MachineFormat,
    },
    /// Check claims.
    Verify {
        /// Claim to check; repeatable.
        #[arg(long, value_parser = parse_claim, required_unless_present = "all", conflicts_with = "all")]
        claim: Vec<ClaimId>,
        /// Check every claim.
        #[arg(long)]
        all: bool,
        /// Cap on every claim's range end.
        #[arg(long)]
        n_max: Option<u64>,
        /// Explicit range start (single claim only).
        #[arg(long, requires = "to")]
        from: Option<u64>,
        /// Explicit range end (single claim only).
        #[arg(long, requires = "from")]
        to: Option<u64>,
        /// Record wall-clock time per claim (makes output non-reproducible).
        #[arg(long)]
        timings: bool,
        #[command(flatten)]
        fmt: MachineFormat,
    },
    /// Scan floor(sqrt F_{n+4}) = floor(sqrt F_{n+2} + sqrt F_n).
    ScanFloor {
        #[arg(long, default_value_t = 200)]
        n_max: u64,
        #[command(flatten)]
        fmt: MachineFormat,
    },
    /// Number of triangles needed for 1..=K full revolutions.
    Windings {
        #[command(flatten)]
        kind: Kind,
        #[arg(long, default_value_t = 1)]
        revolutions: u64,
        #[command(flatten)]
        fmt: MachineFormat,
    },
    /// Render the spiral as SVG.
    Render {
        #[command(flatten)]
        kind: Kind,
        /// Number of triangles.
        #[arg(long, alias = "n-max", default_value_t = 10)]
        n: u64,
        #[arg(long, default_value_t = 800)]
        canvas: u32,
        #[arg(long, default_value_t = 1.0)]
        stroke_width: f64,
        /// Fraction digits for coordinates.
        #[arg(long, default_value_t = 4)]
        digits: u8,
        #[arg(long)]
        no_spine_labels: bool,
        #[arg(long)]
        angle_labels: bool,
        /// mono, golden or spectrum.
        #[arg(long, default_value = "golden")]
        scheme: String,
    },
}

/// Parse `args` (including the program name) and run, writing to the given
/// streams. Returns the process exit code.
pub fn run_with_io<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let (text, code) = match execute(&cli) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_code(&e);
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                return EXIT_FAILED;
            }
        }
        None => {
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_FAILED;
            }
        }
    }
    code
}

/// Run with the process arguments and standard streams.
pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with_io(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidArgument(_)
        | Error::UnknownClaim(_)
        | Error::UnknownConstant(_)
        | Error::UnsupportedFormat(_)
        | Error::Parse(_) => EXIT_USAGE,
        Error::PrecisionExhausted { .. } | Error::CapExceeded { .. } => EXIT_FAILED,
    }
}

fn status_code(s: Status) -> i32 {
    if s.is_success() {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

fn emit_table(t: &Table, fmt: Option<Format>) -> Result<String> {
    Ok(match fmt {
        None => t.to_text(),
        Some(Format::Csv) => t.to_csv()?,
        Some(Format::Json) => t.to_json() + "\n",
    })
}

fn dec(x: &IntervalReal, digits: usize) -> String {
    x.to_decimal(digits)
}

fn to_degrees(x: &IntervalReal, p: u32) -> IntervalReal {
    let w = p + 16;
    (&x.clone().with_precision(w).mul_int(180) / &pi(w)).round_to(p)
}

fn execute(cli: &Cli) -> Result<(String, i32)> {
    let p = cli.precision_bits;
    match &cli.command {
        Command::Seq { kind, from, to, fmt } => {
            if from > to {
                return Err(Error::invalid(format!("empty range {from}..={to}")));
            }
            let terms = kind.kind.terms(*from, *to)?;
            let text = match fmt.format() {
                None => {
                    let words: Vec<String> = terms.iter().map(|t| t.to_string()).collect();
                    words.join(" ") + "\n"
                }
                f => {
                    let mut t = Table::new(["n", "term"]);
                    for (n, v) in (*from..=*to).zip(&terms) {
                        t.push(vec![n.to_string(), v.to_string()]);
                    }
                    emit_table(&t, f)?
                }
            };
            Ok((text, EXIT_OK))
        }
        Command::Triangle { kind, n, digits, fmt } => {
            let spec = &kind.kind;
            let tri = triangle(spec, *n)?;
            let theta = angle(spec, *n, p)?;
            let area = triangle_area(spec, *n, p)?;
            let side = |r| dec(&IntervalReal::sqrt_of(r, p), *digits);
            let mut t = Table::new(["field", "value"]);
            let rows: [(&str, String); 10] = [
                ("n", n.to_string()),
                ("opposite_radicand", tri.opposite_radicand.to_string()),
                ("adjacent_radicand", tri.adjacent_radicand.to_string()),
                ("hypotenuse_radicand", tri.hypotenuse_radicand.to_string()),
                ("opposite", side(&tri.opposite_radicand)),
                ("adjacent", side(&tri.adjacent_radicand)),
                ("hypotenuse", side(&tri.hypotenuse_radicand)),
                ("angle_rad", dec(&theta, *digits)),
                ("angle_deg", dec(&to_degrees(&theta, p), *digits)),
                ("area", dec(&area.value, *digits)),
            ];
            for (k, v) in rows {
                t.push(vec![k.to_string(), v]);
            }
            Ok((emit_table(&t, fmt.format())?, EXIT_OK))
        }
        Command::Metrics {
            kind,
            from,
            to,
            m,
            digits,
            fmt,
        } => {
            let spec = &kind.kind;
            if *from < 1 || from > to {
                return Err(Error::invalid(format!(
                    "range must satisfy 1 <= from <= to, got {from}..={to}"
                )));
            }
            if m.is_some() && !spec.is_fibonacci() {
                return Err(Error::invalid("--m applies to the Fibonacci spiral only"));
            }
            if *m == Some(0) {
                return Err(Error::invalid("--m must be at least 1"));
            }
            let mut cols = vec![
                "n",
                "area",
                "perimeter",
                "angle_deg",
                "circum_area",
                "circumference",
                "in_area",
            ];
            if m.is_some() {
                cols.extend(["A_n_m", "T_n_m"]);
            }
            let mut t = Table::new(cols);
            for n in *from..=*to {
                let tri = triangle(spec, n)?;
                let s = |r| IntervalReal::sqrt_of(r, p + 8);
                let per = &(&s(&tri.opposite_radicand) + &s(&tri.adjacent_radicand)) + &s(&tri.hypotenuse_radicand);
                let c = circle_metrics_of(spec, n, p)?;
                let mut row = vec![
                    n.to_string(),
                    dec(&triangle_area(spec, n, p)?.value, *digits),
                    dec(&per.round_to(p), *digits),
                    dec(&to_degrees(&angle(spec, n, p)?, p), *digits),
                    dec(&c.circum_area, *digits),
                    dec(&c.circum_circumference, *digits),
                    dec(&c.in_area, *digits),
                ];
                if let Some(m) = m {
                    row.push(dec(&generalized_area(n, *m, p)?, *digits));
                    row.push(match t_sum_capped(n, *m, p, DEFAULT_TERM_CAP) {
                        Ok(v) => dec(&v, *digits),
                        Err(Error::CapExceeded { .. }) | Err(Error::InvalidArgument(_)) => "-".to_string(),
                        Err(e) => return Err(e),
                    });
                }
                t.push(row);
            }
            Ok((emit_table(&t, fmt.format())?, EXIT_OK))
        }
        Command::Hahn {
            from,
            n_max,
            term_cap,
            digits,
            fmt,
        } => {
            if *from < 1 || from > n_max {
                return Err(Error::invalid(format!(
                    "range must satisfy 1 <= from <= n-max, got {from}..={n_max}"
                )));
            }
            let mut t = Table::new(["n", "terms", "hahn_area", "ratio", "lower", "upper"]);
            let mut prev: Option<IntervalReal> = if *from > 1 {
                Some(hahn_area_capped(from - 1, p, *term_cap)?.value)
            } else {
                None
            };
            for n in *from..=*n_max {
                let h = hahn_area_capped(n, p, *term_cap)?;
                let (lo, hi) = hahn_bounds(n, p)?;
                let ratio = prev
                    .as_ref()
                    .and_then(|q| h.value.div(q))
                    .map(|r| dec(&r, *digits))
                    .unwrap_or_else(|| "-".to_string());
                t.push(vec![
                    n.to_string(),
                    h.term_count.to_string(),
                    dec(&h.value, *digits),
                    ratio,
                    dec(&lo, *digits),
                    dec(&hi, *digits),
                ]);
                prev = Some(h.value);
            }
            Ok((emit_table(&t, fmt.format())?, EXIT_OK))
        }
        Command::Verify {
            claim,
            all,
            n_max,
            from,
            to,
            timings,
            fmt,
        } => {
            let config = VerifyConfig {
                precision_bits: p,
                cap_bits: DEFAULT_PRECISION_CAP.max(p),
                n_max: *n_max,
                record_timing: *timings,
                claims: if *all { ClaimId::ALL.to_vec() } else { claim.clone() },
                ..VerifyConfig::default()
            };
            let reports = match (from, to) {
                (Some(a), Some(b)) => {
                    if config.claims.len() != 1 {
                        return Err(Error::invalid("--from/--to need exactly one --claim"));
                    }
                    let params = ClaimParams {
                        range: Some((*a, *b)),
                        tolerance: None,
                    };
                    vec![verify_claim_with(config.claims[0], &config, &params)?]
                }
                _ => verify_all(&config),
            };
            let code = status_code(aggregate_status(&reports));
            let text = match fmt.format() {
                Some(f) => with_newline(export_report(&reports, f)?, f),
                None => reports_text(&reports),
            };
            Ok((text, code))
        }
        Command::ScanFloor { n_max, fmt } => {
            let config = VerifyConfig {
                precision_bits: p,
                cap_bits: DEFAULT_PRECISION_CAP.max(p),
                ..VerifyConfig::default()
            };
            let params = ClaimParams {
                range: Some((0, *n_max)),
                tolerance: None,
            };
            let report = verify_claim_with(ClaimId::FloorConj, &config, &params)?;
            let code = status_code(report.status);
            let text = match fmt.format() {
                Some(f) => with_newline(export_report(std::slice::from_ref(&report), f)?, f),
                None => {
                    let entries = scan_floor_entries(*n_max, &config.policy())?;
                    let undecided = entries.iter().filter(|e| e.rhs.is_none()).count();
                    let mut s = reports_text(std::slice::from_ref(&report));
                    s.push_str(&format!(
                        "scanned n = 0..={n_max}: {} violation(s), {undecided} undecided; excluded index n = {FLOOR_EXCEPTION}\n",
                        entries.iter().filter(|e| e.holds() == Some(false)).count()
                    ));
                    s
                }
            };
            Ok((text, code))
        }
        Command::Windings { kind, revolutions, fmt } => {
            if *revolutions < 1 {
                return Err(Error::invalid("--revolutions must be at least 1"));
            }
            let mut t = Table::new(["k", "triangles"]);
            for k in 1..=*revolutions {
                t.push(vec![k.to_string(), windings_count(&kind.kind, k, p)?.to_string()]);
            }
            let text = match fmt.format() {
                None => t
                    .rows
                    .iter()
                    .map(|r| format!("k = {}: m = {} triangles\n", r[0], r[1]))
                    .collect(),
                f => emit_table(&t, f)?,
            };
            Ok((text, EXIT_OK))
        }
        Command::Render {
            kind,
            n,
            canvas,
            stroke_width,
            digits,
            no_spine_labels,
            angle_labels,
            scheme,
        } => {
            let opts = RenderOptions {
                canvas_size_px: *canvas,
                stroke_width: *stroke_width,
                label_spines: !no_spine_labels,
                label_angles: *angle_labels,
                decimal_digits: *digits,
                color_scheme: scheme.parse::<ColorScheme>()?,
            };
            opts.validate()?;
            let g = geometry(&kind.kind, *n, p)?;
            Ok((render_svg(&g, &opts)?, EXIT_OK))
        }
    }
}

fn with_newline(s: String, f: Format) -> String {
    match f {
        Format::Json => s + "\n",
        Format::Csv => s,
    }
}

fn fmt_dev(r: &ClaimReport) -> String {
    match (r.max_deviation_lo, r.max_deviation_hi) {
        (Some(lo), Some(hi)) => format!("  max|dev| in [{lo:.3e}, {hi:.3e}]"),
        _ => String::new(),
    }
}

/// Human-readable report listing.
fn reports_text(reports: &[ClaimReport]) -> String {
    let mut s = String::new();
    for r in reports {
        s.push_str(&format!(
            "{}  {}  {} = {}..{}{}  {} bits",
            r.claim,
            r.status,
            r.range.param,
            r.range.from,
            r.range.to,
            fmt_dev(r),
            r.precision_bits
        ));
        if let Some(t) = r.runtime_s {
            s.push_str(&format!("  {t:.3}s"));
        }
        s.push('\n');
        for w in &r.witnesses {
            let params: Vec<String> = w.params.iter().map(|(k, v)| format!("{k} = {v}")).collect();
            let values: Vec<String> = w.values.iter().map(|(k, v)| format!("{k} = {v}")).collect();
            s.push_str(&format!("  {}: {}", w.label, params.join(", ")));
            if !values.is_empty() {
                s.push_str(&format!("; {}", values.join(", ")));
            }
            if let Some(n) = &w.note {
                s.push_str(&format!(" ({n})"));
            }
            s.push('\n');
        }
        for n in &r.notes {
            s.push_str(&format!("  note: {n}\n"));
        }
    }
    if reports.len() != 1 {
        s.push_str(&format!(
            "overall: {} ({} claims)\n",
            aggregate_status(reports),
            reports.len()
        ));
    }
    s
}
