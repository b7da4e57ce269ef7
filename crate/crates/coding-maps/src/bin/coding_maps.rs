//! Command-line front end: code validation, channel conversion, effective
//! channels, polynomial coding maps, concatenation, iteration, storage
//! thresholds, depolarizing curves, and the leading-order estimate.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use coding_maps::catalog;
use coding_maps::channel::{parse_channel_literal, ChannelInput, DiagonalChannel, QubitChannel};
use coding_maps::code::{
    correctable_polynomial, load_code, parse_code_spec, LoadedCode, StabilizerCode,
};
use coding_maps::coding_map::{diagonal_poly_map, effective_channel_general};
use coding_maps::dynamics::{
    depolarizing_curves, iterate_map, leading_order_threshold, storage_threshold,
    storage_threshold_bisection,
};
use coding_maps::error::{Error, Result};
use coding_maps::oracle;
use coding_maps::polymap::{compose_maps_with_cap, PolyMap, PolyMapJson, DEFAULT_TERM_CAP};

#[derive(Parser)]
#[command(name = "coding-maps", version, about = "Exact effective channels and concatenation thresholds for stabilizer codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a code (catalog name or JSON spec) and print its structure
    Validate(CodeArgs),
    /// Convert a channel literal between representations
    ChannelConvert {
        /// diag:x,y,z | pauli:pX,pY,pZ | depol:gamma_t | JSON 4x4 | file:path
        #[arg(long)]
        channel: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Effective logical channel of a code under i.i.d. noise
    Effective {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        channel: String,
        /// Cross-check against the dense-matrix reference path
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Exact polynomial coding map of a code on diagonal channels
    Polymap {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Compose the coding maps of several codes (outermost first)
    Concat {
        /// Catalog names, outermost first
        codes: Vec<String>,
        /// Cap on terms per polynomial during composition
        #[arg(long, default_value_t = DEFAULT_TERM_CAP)]
        cap: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Iterate a coding map on a diagonal channel
    Iterate {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        channel: String,
        #[arg(long)]
        levels: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Storage threshold of the infinitely concatenated code
    Threshold {
        #[command(flatten)]
        code: CodeArgs,
        /// Force the generic bisection fallback instead of fixed-point
        /// structure analysis
        #[arg(long)]
        bisection: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Sweep iterated maps over a depolarizing-time grid
    Curves {
        #[command(flatten)]
        code: CodeArgs,
        /// Time grid as start:stop:step
        #[arg(long)]
        grid: String,
        /// Comma-separated concatenation levels, e.g. 0,1,2,3
        #[arg(long, default_value = "0,1,2,3")]
        levels: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Second-order threshold estimate from correctable-error counting
    LeadingOrder {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args)]
struct CodeArgs {
    /// Catalog name (bitflip, phaseflip, phaseflip_prime, shor,
    /// shor_prime, steane, five_bit)
    #[arg(long, conflicts_with = "spec")]
    code: Option<String>,
    /// Path to a JSON code specification
    #[arg(long)]
    spec: Option<String>,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    /// Write output to a file instead of stdout
    #[arg(long)]
    out: Option<String>,
    /// Significant digits for numeric output
    #[arg(long, default_value_t = 6)]
    precision: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Pretty,
    Json,
    Csv,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Validate(code) => validate(&code),
        Command::ChannelConvert { channel, out } => channel_convert(&channel, &out),
        Command::Effective { code, channel, oracle, out } => {
            effective(&code, &channel, oracle, &out)
        }
        Command::Polymap { code, out } => polymap(&code, &out),
        Command::Concat { codes, cap, out } => concat(&codes, cap, &out),
        Command::Iterate { code, channel, levels, out } => iterate(&code, &channel, levels, &out),
        Command::Threshold { code, bisection, out } => threshold(&code, bisection, &out),
        Command::Curves { code, grid, levels, out } => curves(&code, &grid, &levels, &out),
        Command::LeadingOrder { code, out } => leading_order(&code, &out),
    }
}

/// Resolve --code/--spec to a stack of validated codes, outermost first.
fn resolve_code(args: &CodeArgs) -> Result<(String, Vec<StabilizerCode>)> {
    match (&args.code, &args.spec) {
        (Some(name), None) => Ok((name.clone(), catalog::resolve(name)?)),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)?;
            match load_code(&parse_code_spec(&text)?)? {
                LoadedCode::Single(code) => Ok((code.name().to_string(), vec![code])),
                LoadedCode::Recipe { name, components } => {
                    let stack = components
                        .iter()
                        .map(|c| catalog::builtin(c))
                        .collect::<Result<Vec<_>>>()?;
                    Ok((name, stack))
                }
            }
        }
        _ => Err(Error::Domain("exactly one of --code or --spec is required".into())),
    }
}

/// The composed coding map of a stack, outermost first.
fn stack_poly_map(stack: &[StabilizerCode]) -> Result<PolyMap> {
    let mut map = PolyMap::identity();
    // innermost applies to the physical channel first
    for code in stack.iter().rev() {
        map = compose_maps_with_cap(&diagonal_poly_map(code), &map, DEFAULT_TERM_CAP)?;
    }
    Ok(map)
}

fn emit(out: &OutputArgs, text: String) -> Result<()> {
    match &out.out {
        Some(path) => std::fs::write(path, text.as_bytes())?,
        None => {
            use std::io::Write as _;
            // tolerate a closed pipe (e.g. piping into head)
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = writeln!(stdout, "{text}") {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    return Err(e.into());
                }
            }
        }
    }
    Ok(())
}

/// Format with a fixed number of significant digits.
fn sig(v: f64, digits: usize) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let exp = v.abs().log10().floor() as i32;
    if exp < -4 || exp >= digits as i32 + 2 {
        format!("{:.*e}", digits.saturating_sub(1), v)
    } else {
        let dec = (digits as i32 - 1 - exp).max(0) as usize;
        format!("{:.*}", dec, v)
    }
}

fn validate(args: &CodeArgs) -> Result<()> {
    let (name, stack) = resolve_code(args)?;
    if stack.len() > 1 {
        println!(
            "{name}: concatenation of {} (outermost first)",
            stack.iter().map(|c| c.name()).collect::<Vec<_>>().join(", ")
        );
    }
    for code in &stack {
        println!("code {} on {} qubits", code.name(), code.n());
        println!("  generators: {}", join_paulis(code.generators()));
        println!(
            "  logical X = {}, Y = {}, Z = {}",
            code.logical(coding_maps::pauli::Letter::X),
            code.logical(coding_maps::pauli::Letter::Y),
            code.logical(coding_maps::pauli::Letter::Z),
        );
        println!("  stabilizer group: {} elements", code.group().len());
        println!("  recovery table: {} syndromes", code.recovery_table().len());
    }
    println!("ok");
    Ok(())
}

fn join_paulis(ops: &[coding_maps::SignedPauli]) -> String {
    ops.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ")
}

fn channel_convert(literal: &str, out: &OutputArgs) -> Result<()> {
    let input = parse_channel_literal(literal)?;
    let diag = match &input {
        ChannelInput::Diagonal(d) => *d,
        ChannelInput::General(g) => g.as_diagonal(1e-12).ok_or_else(|| {
            Error::Domain("channel is not diagonal; no Pauli-probability form".into())
        })?,
    };
    let probs = diag.to_pauli_probs()?;
    let p = out.precision;
    let text = match out.format {
        Format::Json => serde_json::to_string_pretty(&json!({
            "diagonal": {"x": diag.x, "y": diag.y, "z": diag.z},
            "pauli_probs": {
                "p_i": probs.p_identity(), "p_x": probs.p_x,
                "p_y": probs.p_y, "p_z": probs.p_z,
            },
            "worst_case_fidelity": diag.worst_case_fidelity(),
        }))?,
        _ => format!(
            "diagonal: [{}, {}, {}]\npauli probabilities: p_I = {}, p_X = {}, p_Y = {}, p_Z = {}\nworst-case fidelity: {}",
            sig(diag.x, p), sig(diag.y, p), sig(diag.z, p),
            sig(probs.p_identity(), p), sig(probs.p_x, p), sig(probs.p_y, p), sig(probs.p_z, p),
            sig(diag.worst_case_fidelity(), p),
        ),
    };
    emit(out, text)
}

fn effective(args: &CodeArgs, literal: &str, oracle_check: bool, out: &OutputArgs) -> Result<()> {
    let (name, stack) = resolve_code(args)?;
    let input = parse_channel_literal(literal)?;
    // innermost component sees the physical channel
    let mut channel = input.as_channel();
    for code in stack.iter().rev() {
        channel = effective_channel_general(code, &channel)?.channel;
    }
    let mut oracle_dev: Option<f64> = None;
    if oracle_check {
        let diag = input
            .as_channel()
            .as_diagonal(1e-12)
            .ok_or_else(|| Error::Domain("--oracle requires a diagonal channel".into()))?;
        let mut dev = 0.0f64;
        let mut stage = diag;
        for code in stack.iter().rev() {
            let kraus = oracle::kraus_from_diagonal(&stage)?;
            let dense = oracle::dense_effective_channel(code, &kraus)?;
            let symbolic =
                effective_channel_general(code, &QubitChannel::from_diagonal(&stage))?.channel;
            for r in 0..4 {
                for c in 0..4 {
                    dev = dev.max((dense[r][c] - symbolic.entry(r, c)).abs());
                }
            }
            stage = symbolic.as_diagonal(1e-9).ok_or_else(|| {
                Error::Domain("intermediate channel is not diagonal".into())
            })?;
        }
        oracle_dev = Some(dev);
    }
    let p = out.precision;
    let text = match out.format {
        Format::Json => {
            let mut body = json!({
                "code": name,
                "matrix": channel.matrix().to_vec(),
            });
            if let Some(d) = channel.as_diagonal(1e-12) {
                body["diagonal"] = json!({"x": d.x, "y": d.y, "z": d.z});
            }
            if let Some(dev) = oracle_dev {
                body["oracle_max_deviation"] = json!(dev);
            }
            serde_json::to_string_pretty(&body)?
        }
        _ => {
            let mut s = format!("effective channel of {name}:\n");
            for r in 0..4 {
                let row: Vec<String> =
                    (0..4).map(|c| sig(channel.entry(r, c), p)).collect();
                writeln!(s, "  [{}]", row.join(", ")).unwrap();
            }
            if let Some(d) = channel.as_diagonal(1e-12) {
                writeln!(s, "diagonal: [{}, {}, {}]", sig(d.x, p), sig(d.y, p), sig(d.z, p))
                    .unwrap();
            }
            if let Some(dev) = oracle_dev {
                writeln!(s, "oracle max deviation: {}", sig(dev, 3)).unwrap();
            }
            s.pop();
            s
        }
    };
    emit(out, text)
}

fn polymap_text(name: &str, map: &PolyMap, out: &OutputArgs) -> Result<String> {
    Ok(match out.format {
        Format::Json => {
            let body: PolyMapJson = map.to_json();
            serde_json::to_string_pretty(&json!({"code": name, "map": body}))?
        }
        _ => format!("coding map of {name}:\n{}", map.pretty()),
    })
}

fn polymap(args: &CodeArgs, out: &OutputArgs) -> Result<()> {
    let (name, stack) = resolve_code(args)?;
    let map = stack_poly_map(&stack)?;
    let text = polymap_text(&name, &map, out)?;
    emit(out, text)
}

fn concat(codes: &[String], cap: usize, out: &OutputArgs) -> Result<()> {
    if codes.is_empty() {
        return Err(Error::Domain("concat needs at least one code name".into()));
    }
    let mut map = PolyMap::identity();
    for name in codes.iter().rev() {
        let stack = catalog::resolve(name)?;
        for code in stack.iter().rev() {
            map = compose_maps_with_cap(&diagonal_poly_map(code), &map, cap)?;
        }
    }
    let label = codes.join("(") + &")".repeat(codes.len().saturating_sub(1));
    let text = polymap_text(&label, &map, out)?;
    emit(out, text)
}

fn iterate(args: &CodeArgs, literal: &str, levels: usize, out: &OutputArgs) -> Result<()> {
    let (name, stack) = resolve_code(args)?;
    let map = stack_poly_map(&stack)?;
    let input = parse_channel_literal(literal)?;
    let base = input
        .as_channel()
        .as_diagonal(1e-12)
        .ok_or_else(|| Error::Domain("iterate requires a diagonal channel".into()))?;
    let mut rows: Vec<(usize, DiagonalChannel)> = Vec::with_capacity(levels + 1);
    let mut c = base;
    rows.push((0, c));
    for level in 1..=levels {
        c = iterate_map(&map, &c, 1);
        rows.push((level, c));
    }
    let p = out.precision;
    let text = match out.format {
        Format::Json => serde_json::to_string_pretty(&json!({
            "code": name,
            "levels": rows
                .iter()
                .map(|(l, c)| json!({"level": l, "x": c.x, "y": c.y, "z": c.z}))
                .collect::<Vec<_>>(),
        }))?,
        Format::Csv => {
            let mut s = String::from("level,x,y,z\n");
            for (l, c) in &rows {
                writeln!(s, "{l},{},{},{}", c.x, c.y, c.z).unwrap();
            }
            s.pop();
            s
        }
        Format::Pretty => {
            let mut s = format!("iterating the {name} map:\n");
            for (l, c) in &rows {
                writeln!(s, "  level {l}: [{}, {}, {}]", sig(c.x, p), sig(c.y, p), sig(c.z, p))
                    .unwrap();
            }
            s.pop();
            s
        }
    };
    emit(out, text)
}

fn threshold(args: &CodeArgs, bisection: bool, out: &OutputArgs) -> Result<()> {
    let (name, stack) = resolve_code(args)?;
    let map = stack_poly_map(&stack)?;
    let mut report = if bisection {
        storage_threshold_bisection(&map)?
    } else {
        storage_threshold(&map)?
    };
    report.code = Some(name.clone());
    let p = out.precision;
    let text = match out.format {
        Format::Json => serde_json::to_string_pretty(&report)?,
        _ => {
            let mut s = format!("storage threshold of {name} (period {}):\n", report.period);
            writeln!(
                s,
                "  t*_X = {}, t*_Y = {}, t*_Z = {}",
                sig(report.t_star.x, p),
                sig(report.t_star.y, p),
                sig(report.t_star.z, p)
            )
            .unwrap();
            writeln!(s, "  t_th = {}, p_th = {}", sig(report.t_th, p), sig(report.p_th, p))
                .unwrap();
            for fp in &report.fixed_points {
                writeln!(
                    s,
                    "  fixed point ({} axis): v = {}, {:?}, |derivative| = {}",
                    fp.axis,
                    sig(fp.point.value, p),
                    fp.point.stability,
                    sig(fp.point.derivative_magnitude, p)
                )
                .unwrap();
            }
            s.pop();
            s
        }
    };
    emit(out, text)
}

fn parse_grid(text: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 3 {
        return Err(Error::Parse {
            index: 0,
            message: format!("grid {text:?} must be start:stop:step"),
        });
    }
    let nums: Vec<f64> = parts
        .iter()
        .map(|s| {
            s.trim().parse::<f64>().map_err(|e| Error::Parse {
                index: 0,
                message: format!("{e} in grid {text:?}"),
            })
        })
        .collect::<Result<_>>()?;
    let (start, stop, step) = (nums[0], nums[1], nums[2]);
    if step <= 0.0 || stop < start {
        return Err(Error::Domain(format!(
            "grid {text:?} must have positive step and stop >= start"
        )));
    }
    let count = ((stop - start) / step + 1.5).floor() as usize;
    Ok((0..count).map(|i| start + i as f64 * step).filter(|&t| t <= stop + 1e-12).collect())
}

fn parse_levels(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|s| {
            s.trim().parse::<usize>().map_err(|e| Error::Parse {
                index: 0,
                message: format!("{e} in levels {text:?}"),
            })
        })
        .collect()
}

fn curves(args: &CodeArgs, grid: &str, levels: &str, out: &OutputArgs) -> Result<()> {
    let (name, stack) = resolve_code(args)?;
    let map = stack_poly_map(&stack)?;
    let t_grid = parse_grid(grid)?;
    let levels = parse_levels(levels)?;
    let table = depolarizing_curves(&map, &t_grid, &levels)?;
    let text = match out.format {
        Format::Json => serde_json::to_string_pretty(&json!({"code": name, "rows": table.rows}))?,
        _ => {
            let mut s = table.to_csv();
            s.pop();
            s
        }
    };
    emit(out, text)
}

fn leading_order(args: &CodeArgs, out: &OutputArgs) -> Result<()> {
    let (name, stack) = resolve_code(args)?;
    let refs: Vec<&StabilizerCode> = stack.iter().collect();
    let coeffs = correctable_polynomial(&refs)?;
    let estimate = leading_order_threshold(&coeffs)?;
    let map = stack_poly_map(&stack)?;
    let true_p_th = storage_threshold(&map).ok().map(|r| r.p_th);
    let p = out.precision;
    let text = match out.format {
        Format::Json => serde_json::to_string_pretty(&json!({
            "code": name,
            "correctable_polynomial": coeffs,
            "estimate": estimate.estimate,
            "exact_crossing": estimate.exact_crossing,
            "true_p_th": true_p_th,
            "underestimate": true_p_th.map(|t| 1.0 - estimate.estimate / t),
        }))?,
        _ => {
            let mut s = format!("leading-order threshold estimate for {name}:\n");
            writeln!(s, "  second-order estimate: p = {}", sig(estimate.estimate, p)).unwrap();
            if let Some(c) = estimate.exact_crossing {
                writeln!(s, "  full-polynomial crossing with 1 - p: {}", sig(c, p)).unwrap();
            }
            if let Some(t) = true_p_th {
                writeln!(s, "  exact storage threshold: p_th = {}", sig(t, p)).unwrap();
                writeln!(
                    s,
                    "  the estimate undershoots by {}%",
                    sig(100.0 * (1.0 - estimate.estimate / t), 3)
                )
                .unwrap();
            }
            s.pop();
            s
        }
    };
    emit(out, text)
}