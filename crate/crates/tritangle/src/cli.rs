//! Command-line front end.
//!
//! Subcommands: `classify`, `tangle`, `cdc`, `sweep`, `states list`.
//! State specs are JSON documents (see [`crate::states::StateSpec`]),
//! read from a file path or from stdin with `-`. Human-readable summary
//! lines go first; the final stdout line of `classify`, `tangle` and
//! `cdc` is a bare JSON object for machine consumption.
//!
//! Exit codes: 0 success, 2 input error, 3 numeric-consistency error.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::cdc::{
    cdc_usable, optimize_controller_basis, run_cdc, BasisOptimization, ControllerBasis,
    CorrectionRule, PauliLabel,
};
use crate::entanglement;
use crate::states::{Family, ParamKind, ParamValue, ParsedState, PureState3, Qubit};
use crate::{Error, Result};

#[derive(Parser)]
#[command(
    name = "tritangle",
    version,
    about = "Three-qubit entanglement measures, SLOCC classification and controlled dense coding"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a state: single-qubit ranks, 3-tangle by both routes, SLOCC class
    Classify {
        /// Path to a JSON state spec, or '-' to read stdin
        spec: PathBuf,
    },
    /// Print the entanglement measures of a state
    Tangle {
        /// Path to a JSON state spec, or '-' to read stdin
        spec: PathBuf,
    },
    /// Simulate the controlled dense coding protocol on a state
    Cdc {
        /// Path to a JSON state spec, or '-' to read stdin
        spec: PathBuf,
        /// Controller qubit: a, b or c
        #[arg(long, default_value = "a")]
        controller: String,
        /// Controller basis angle theta in [0, pi/2]; accepts pi literals like pi/4
        #[arg(long, default_value = "0")]
        theta: String,
        /// Controller basis phase phi in [0, 2pi)
        #[arg(long, default_value = "0")]
        phi: String,
        /// Correction rule, e.g. "1=x" or "0=i,1=z" (default: identity)
        #[arg(long)]
        rule: Option<String>,
        /// Scan controller bases and use the one maximizing the minimum
        /// branch concurrence (overrides --theta/--phi)
        #[arg(long)]
        optimize_basis: bool,
        /// Grid resolution per axis for --optimize-basis
        #[arg(long, default_value_t = crate::tolerances::DEFAULT_OPTIMIZER_GRID)]
        grid: usize,
    },
    /// Sweep one family parameter and write per-point report rows
    Sweep {
        /// Family name (see `states list`)
        #[arg(long)]
        family: String,
        /// Parameter to sweep
        #[arg(long)]
        param: String,
        /// Sweep start (inclusive); accepts pi literals
        #[arg(long)]
        from: String,
        /// Sweep end (inclusive); accepts pi literals
        #[arg(long)]
        to: String,
        /// Number of grid points (>= 2)
        #[arg(long)]
        steps: usize,
        /// Fixed parameter, name=value; repeatable
        #[arg(long = "fix")]
        fixed: Vec<String>,
        /// Output file path
        #[arg(long)]
        output: PathBuf,
        /// Output format: csv or json
        #[arg(long, default_value = "csv")]
        format: String,
    },
    /// State-family registry commands
    States {
        #[command(subcommand)]
        command: StatesCommand,
    },
}

#[derive(Subcommand)]
enum StatesCommand {
    /// List the available families and their parameters
    List,
}

/// Maps library errors onto process exit codes: malformed input and
/// out-of-range parameters exit 2, numeric failures exit 3.
pub fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Spec(_) | Error::Parameter(_) | Error::InvalidDimension(_) | Error::Io(_) => 2,
        Error::Contract(_) | Error::NumericConsistency(_) | Error::Internal(_) => 3,
    }
}

/// Parses an angle in radians, with pi literals: "0.5", "pi", "2pi",
/// "pi/4", "-3pi/2", "2*pi/3".
pub fn parse_angle(text: &str) -> Result<f64> {
    let t: String = text.trim().to_ascii_lowercase().replace(' ', "");
    if let Some(pos) = t.find("pi") {
        let coef_str = t[..pos].strip_suffix('*').unwrap_or(&t[..pos]);
        let coef = match coef_str {
            "" | "+" => 1.0,
            "-" => -1.0,
            s => s
                .parse::<f64>()
                .map_err(|_| Error::Parameter(format!("bad angle '{text}'")))?,
        };
        let rest = &t[pos + 2..];
        let divisor = if rest.is_empty() {
            1.0
        } else {
            let d = rest
                .strip_prefix('/')
                .ok_or_else(|| Error::Parameter(format!("bad angle '{text}'")))?;
            let d: f64 =
                d.parse().map_err(|_| Error::Parameter(format!("bad angle '{text}'")))?;
            if d == 0.0 {
                return Err(Error::Parameter(format!("zero divisor in angle '{text}'")));
            }
            d
        };
        Ok(coef * PI / divisor)
    } else {
        t.parse().map_err(|_| Error::Parameter(format!("bad angle '{text}'")))
    }
}

/// Formats a finite value with 12 significant digits in plain decimal
/// notation, the fixed format of sweep artifacts.
pub fn fmt_sig12(x: f64) -> String {
    if x == 0.0 {
        return "0.000000000000".to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

fn read_spec(path: &Path) -> Result<ParsedState> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(path)?
    };
    let parsed = crate::states::parse_state_spec(&text)?;
    if parsed.renormalized {
        eprintln!("warning: amplitudes renormalized (input norm deviated by more than 1e-6)");
    }
    Ok(parsed)
}

fn cmd_classify(spec: &Path) -> Result<()> {
    let state = read_spec(spec)?.state;
    let profile = entanglement::profile(&state)?;
    println!(
        "ranks: a={} b={} c={}",
        profile.rank_a, profile.rank_b, profile.rank_c
    );
    println!("tau(polynomial) = {}", fmt_sig12(profile.tau));
    println!("tau(residual)   = {}", fmt_sig12(profile.tau_ckw));
    println!("class: {}", profile.slocc_class);
    println!("{}", serde_json::to_string(&profile).expect("profile serializes"));
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct TangleReport {
    tau: f64,
    tau_ckw_a: f64,
    tau_ckw_b: f64,
    tau_ckw_c: f64,
    c2_a_bc: f64,
    c2_b_ca: f64,
    c2_c_ab: f64,
}

fn cmd_tangle(spec: &Path) -> Result<()> {
    let state = read_spec(spec)?.state;
    let report = TangleReport {
        tau: entanglement::tangle_hyperdet(&state),
        tau_ckw_a: entanglement::tangle_ckw(&state, Qubit::A)?,
        tau_ckw_b: entanglement::tangle_ckw(&state, Qubit::B)?,
        tau_ckw_c: entanglement::tangle_ckw(&state, Qubit::C)?,
        c2_a_bc: entanglement::c2_one_vs_rest(&state, Qubit::A)?,
        c2_b_ca: entanglement::c2_one_vs_rest(&state, Qubit::B)?,
        c2_c_ab: entanglement::c2_one_vs_rest(&state, Qubit::C)?,
    };
    println!("tau(polynomial) = {}", fmt_sig12(report.tau));
    println!(
        "tau(residual)   = a:{} b:{} c:{}",
        fmt_sig12(report.tau_ckw_a),
        fmt_sig12(report.tau_ckw_b),
        fmt_sig12(report.tau_ckw_c)
    );
    println!(
        "one-vs-rest     = a:{} b:{} c:{}",
        fmt_sig12(report.c2_a_bc),
        fmt_sig12(report.c2_b_ca),
        fmt_sig12(report.c2_c_ab)
    );
    println!("{}", serde_json::to_string(&report).expect("report serializes"));
    Ok(())
}

fn parse_rule(text: &str) -> Result<CorrectionRule> {
    let mut rule = CorrectionRule::identity();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (outcome, pauli) = part
            .split_once('=')
            .ok_or_else(|| Error::Parameter(format!("bad rule entry '{part}', expected OUTCOME=PAULI")))?;
        let outcome: usize = outcome
            .trim()
            .parse()
            .map_err(|_| Error::Parameter(format!("bad outcome '{outcome}' in rule")))?;
        if outcome > 1 {
            return Err(Error::Parameter(format!("outcome must be 0 or 1, got {outcome}")));
        }
        rule.on_outcome[outcome] = pauli.parse::<PauliLabel>()?;
    }
    Ok(rule)
}

#[allow(clippy::too_many_arguments)]
fn cmd_cdc(
    spec: &Path,
    controller: &str,
    theta: &str,
    phi: &str,
    rule: Option<&str>,
    optimize: bool,
    grid: usize,
) -> Result<()> {
    let state = read_spec(spec)?.state;
    let controller: Qubit = controller.parse()?;
    let rule = match rule {
        Some(text) => parse_rule(text)?,
        None => CorrectionRule::identity(),
    };
    let (basis, optimization) = if optimize {
        let (basis, score) = optimize_controller_basis(&state, controller, grid)?;
        (basis, Some(BasisOptimization { grid, min_branch_concurrence: score }))
    } else {
        (ControllerBasis::new(parse_angle(theta)?, parse_angle(phi)?)?, None)
    };
    let mut report = run_cdc(&state, controller, &basis, &rule);
    report.basis_optimization = optimization;

    println!(
        "controller {} basis: theta={} phi={}",
        controller,
        fmt_sig12(basis.theta()),
        fmt_sig12(basis.phi())
    );
    if let Some(opt) = &report.basis_optimization {
        println!(
            "optimized over a {0}x{0} grid, min branch concurrence {1}",
            opt.grid,
            fmt_sig12(opt.min_branch_concurrence)
        );
    }
    for branch in &report.branches {
        match (&branch.best_bell, branch.best_bell_fidelity, branch.capacity_bits) {
            (Some(bell), Some(fid), Some(cap)) => println!(
                "branch {}: p={} best_bell={} fidelity={} capacity={}",
                branch.outcome,
                fmt_sig12(branch.probability),
                bell,
                fmt_sig12(fid),
                fmt_sig12(cap)
            ),
            _ => println!("branch {}: p={} (unreachable)", branch.outcome, fmt_sig12(branch.probability)),
        }
    }
    println!(
        "average={} min={} perfect={}",
        fmt_sig12(report.average_capacity_bits),
        fmt_sig12(report.min_capacity_bits),
        report.perfect_cdc
    );
    println!("{}", serde_json::to_string(&report).expect("report serializes"));
    Ok(())
}

/// One sweep grid point: the swept parameter value, the entanglement
/// profile fields, and the capacity summary of a computational-basis
/// protocol run with controller a. Corrections do not move capacities,
/// so the run uses the identity rule.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReportRow {
    pub param: f64,
    pub tau: f64,
    pub c2_a_bc: f64,
    pub c2_ab: f64,
    pub c2_ac: f64,
    pub rank_a: usize,
    pub rank_b: usize,
    pub rank_c: usize,
    pub class: String,
    pub avg_capacity: f64,
    pub min_capacity: f64,
    pub perfect: bool,
}

pub const CSV_HEADER: &str =
    "param,tau,c2_a_bc,c2_ab,c2_ac,rank_a,rank_b,rank_c,class,avg_capacity,min_capacity,perfect";

impl ReportRow {
    fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            fmt_sig12(self.param),
            fmt_sig12(self.tau),
            fmt_sig12(self.c2_a_bc),
            fmt_sig12(self.c2_ab),
            fmt_sig12(self.c2_ac),
            self.rank_a,
            self.rank_b,
            self.rank_c,
            self.class,
            fmt_sig12(self.avg_capacity),
            fmt_sig12(self.min_capacity),
            self.perfect
        )
    }
}

/// A validated sweep request over one numeric family parameter.
#[derive(Clone, Debug)]
pub struct SweepSpec {
    pub family: Family,
    pub param: String,
    pub from: f64,
    pub to: f64,
    pub steps: usize,
    pub fixed: BTreeMap<String, ParamValue>,
}

impl SweepSpec {
    pub fn new(
        family: Family,
        param: &str,
        from: f64,
        to: f64,
        steps: usize,
        fixed: BTreeMap<String, ParamValue>,
    ) -> Result<Self> {
        let info = family
            .params()
            .iter()
            .find(|i| i.name == param)
            .ok_or_else(|| {
                Error::Spec(format!("family '{}' has no parameter '{param}'", family.name()))
            })?;
        if info.kind != ParamKind::Number {
            return Err(Error::Spec(format!("parameter '{param}' is not numeric")));
        }
        if from.is_nan() || to.is_nan() || from >= to {
            return Err(Error::Parameter(format!("sweep needs from < to, got {from} .. {to}")));
        }
        if steps < 2 {
            return Err(Error::Parameter(format!("sweep needs at least 2 steps, got {steps}")));
        }
        if fixed.contains_key(param) {
            return Err(Error::Spec(format!("swept parameter '{param}' cannot also be fixed")));
        }
        for key in fixed.keys() {
            if !family.params().iter().any(|i| i.name == key) {
                return Err(Error::Spec(format!(
                    "family '{}' has no parameter '{key}'",
                    family.name()
                )));
            }
        }
        Ok(Self { family, param: param.to_string(), from, to, steps, fixed })
    }

    /// Evaluates every grid point in ascending parameter order.
    pub fn rows(&self) -> Result<Vec<ReportRow>> {
        let mut rows = Vec::with_capacity(self.steps);
        for i in 0..self.steps {
            let x = self.from + (self.to - self.from) * i as f64 / (self.steps - 1) as f64;
            let mut params = self.fixed.clone();
            params.insert(self.param.clone(), ParamValue::Number(x));
            let state = self.family.build(&params)?;
            rows.push(report_row(x, &state)?);
        }
        Ok(rows)
    }
}

fn report_row(param: f64, state: &PureState3) -> Result<ReportRow> {
    let profile = entanglement::profile(state)?;
    let report = run_cdc(
        state,
        Qubit::A,
        &ControllerBasis::computational(),
        &CorrectionRule::identity(),
    );
    Ok(ReportRow {
        param,
        tau: profile.tau,
        c2_a_bc: profile.c2_a_bc,
        c2_ab: profile.c2_ab,
        c2_ac: profile.c2_ac,
        rank_a: profile.rank_a,
        rank_b: profile.rank_b,
        rank_c: profile.rank_c,
        class: profile.slocc_class.to_string(),
        avg_capacity: report.average_capacity_bits,
        min_capacity: report.min_capacity_bits,
        perfect: report.perfect_cdc,
    })
}

/// Renders sweep rows as the fixed-format CSV artifact.
pub fn rows_to_csv(rows: &[ReportRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.csv_line());
        out.push('\n');
    }
    out
}

fn parse_fixed(entries: &[String]) -> Result<BTreeMap<String, ParamValue>> {
    let mut fixed = BTreeMap::new();
    for entry in entries {
        let (name, value) = entry.split_once('=').ok_or_else(|| {
            Error::Parameter(format!("bad --fix entry '{entry}', expected name=value"))
        })?;
        let value = match parse_angle(value) {
            Ok(v) => ParamValue::Number(v),
            Err(_) => ParamValue::Text(value.trim().to_string()),
        };
        fixed.insert(name.trim().to_string(), value);
    }
    Ok(fixed)
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    family: &str,
    param: &str,
    from: &str,
    to: &str,
    steps: usize,
    fixed: &[String],
    output: &Path,
    format: &str,
) -> Result<()> {
    let spec = SweepSpec::new(
        Family::from_name(family)?,
        param,
        parse_angle(from)?,
        parse_angle(to)?,
        steps,
        parse_fixed(fixed)?,
    )?;
    let rows = spec.rows()?;
    let payload = match format {
        "csv" => rows_to_csv(&rows),
        "json" => {
            let mut text = serde_json::to_string_pretty(&rows).expect("rows serialize");
            text.push('\n');
            text
        }
        other => return Err(Error::Parameter(format!("unknown format '{other}', expected csv or json"))),
    };
    std::fs::write(output, payload)?;
    println!("wrote {} rows to {}", rows.len(), output.display());
    Ok(())
}

fn cmd_states_list() {
    for family in Family::ALL {
        let params = family.params();
        if params.is_empty() {
            println!("{:<10} {} (no parameters)", family.name(), family.describe());
        } else {
            let list: Vec<String> =
                params.iter().map(|p| format!("{} ({})", p.name, p.doc)).collect();
            println!("{:<10} {}; params: {}", family.name(), family.describe(), list.join(", "));
        }
    }
}

fn dispatch(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Classify { spec } => cmd_classify(&spec),
        Command::Tangle { spec } => cmd_tangle(&spec),
        Command::Cdc { spec, controller, theta, phi, rule, optimize_basis, grid } => cmd_cdc(
            &spec,
            &controller,
            &theta,
            &phi,
            rule.as_deref(),
            optimize_basis,
            grid,
        ),
        Command::Sweep { family, param, from, to, steps, fixed, output, format } => cmd_sweep(
            &family,
            &param,
            &from,
            &to,
            steps,
            &fixed,
            &output,
            &format,
        ),
        Command::States { command: StatesCommand::List } => {
            cmd_states_list();
            Ok(())
        }
    }
}

/// Entry point for the binary. Returns the process exit code.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    // clap exits 2 on usage errors by itself.
    let cli = Cli::parse_from(args);
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

/// Used by tests that need the library-side evidence bundle.
pub fn usable_verdict(state: &PureState3) -> Result<bool> {
    Ok(cdc_usable(state)?.0)
}
