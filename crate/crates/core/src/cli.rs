//! The `framecomp` command line.
//!
//! Problem files are JSON documents:
//!
//! ```json
//! {
//!   "synthesis": [[0.92, -0.75], [0.46, [0.01, 0.5]]],
//!   "orientation": "cols",
//!   "norms": [3.5, 2.0],
//!   "potential": "fp",
//!   "mode": "full"
//! }
//! ```
//!
//! Exactly one of `synthesis` (a matrix whose columns, or rows with
//! `"orientation": "rows"`, are the vectors of `F0`) and `lambda` (the
//! decreasing spectrum of `S_{F0}`) must be present. Scalars are reals or
//! `[re, im]` pairs. Optional keys: `potential` (`fp`, `mse`, `power:<p>`),
//! `mode` (`full`, `consecutive`), `caps`, `seed`, `tol`.
//!
//! Structured results go to stdout (or `--output`), a short summary to
//! stderr. Exit codes: 0 success, 1 malformed input or internal failure,
//! 2 the instance violates a precondition, 3 the enumeration caps were hit.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::completion::{
    is_feasible, solve, Caps, CompletionResult, EnumerationMode, Potential, ProblemInput, SolveOptions,
    StructureDiagnostics,
};
use crate::error::Error;
use crate::frame_design::design_vectors;
use crate::linalg::{eig_hermitian, frame_operator, HermitianMatrix, VectorSequence, C64};
use crate::majorization::first_violation;
use crate::matching::{is_optimal_matching, lindskii_check, weyl_check};
use crate::oracle::{brute_force_min, OracleConfig};
use crate::spectrum::{NormSeq, Order, Spectrum};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_CAPS: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "framecomp",
    version,
    about = "Optimal frame completions with prescribed norms"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// Each row is a vector.
    Rows,
    /// Each column is a vector.
    Cols,
}

#[derive(clap::Args, Debug)]
struct SolveFlags {
    /// fp, mse or power:<p>; overrides the file.
    #[arg(long)]
    potential: Option<String>,
    /// full or consecutive; overrides the file.
    #[arg(long)]
    mode: Option<String>,
    /// Maximum partition pairs to examine.
    #[arg(long)]
    caps: Option<u64>,
    /// Equality tolerance for the level condition on the optimum.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute an optimal completion.
    Solve {
        file: PathBuf,
        #[command(flatten)]
        flags: SolveFlags,
        /// Write every candidate as CSV to this path.
        #[arg(long)]
        emit_candidates: Option<PathBuf>,
        /// Layout of synthesis matrices, in the file and in the output.
        #[arg(long, value_enum)]
        orientation: Option<Orientation>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Test whether the water-filling spectrum is attainable.
    Feasible {
        file: PathBuf,
        #[arg(long, value_enum)]
        orientation: Option<Orientation>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Vectors with prescribed norms and frame operator diag(spectrum), as CSV.
    Design {
        /// Comma-separated eigenvalues.
        #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
        spectrum: Vec<f64>,
        /// Comma-separated squared norms.
        #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
        norms: Vec<f64>,
        #[arg(long, value_enum, default_value = "cols")]
        orientation: Orientation,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Lindskii equality analysis for the pair {"s0": ..., "s1": ...}.
    MatchCheck {
        file: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compare the solver with stochastic search over the continuous problem.
    OracleCompare {
        file: PathBuf,
        #[command(flatten)]
        flags: SolveFlags,
        /// Proposals per potential.
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum)]
        orientation: Option<Orientation>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

/// A complex scalar written as a real number or an `[re, im]` pair.
#[derive(Clone, Copy, Debug, Deserialize)]
#[serde(untagged)]
enum Scalar {
    Real(f64),
    Complex([f64; 2]),
}

impl From<Scalar> for C64 {
    fn from(s: Scalar) -> Self {
        match s {
            Scalar::Real(x) => C64::new(x, 0.0),
            Scalar::Complex([re, im]) => C64::new(re, im),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    synthesis: Option<Vec<Vec<Scalar>>>,
    orientation: Option<Orientation>,
    lambda: Option<Vec<f64>>,
    norms: Vec<f64>,
    potential: Option<String>,
    mode: Option<String>,
    caps: Option<u64>,
    seed: Option<u64>,
    tol: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatchFile {
    s0: Vec<Vec<Scalar>>,
    s1: Vec<Vec<Scalar>>,
}

/// A failure carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::RankDeficient { .. } | Error::InfeasibleDesign(_) | Error::NotAFrame { .. } => EXIT_PRECONDITION,
            Error::CapsExceeded(_) => EXIT_CAPS,
            _ => EXIT_INPUT,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
            } else {
                let _ = write!(stdout, "{rendered}");
            }
            return code;
        }
    };
    match dispatch(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Outcome {
    match command {
        Command::Solve {
            file,
            flags,
            emit_candidates,
            orientation,
            output,
        } => cmd_solve(
            &file,
            &flags,
            emit_candidates.as_deref(),
            orientation,
            output.as_deref(),
            stdout,
            stderr,
        ),
        Command::Feasible {
            file,
            orientation,
            output,
        } => cmd_feasible(&file, orientation, output.as_deref(), stdout, stderr),
        Command::Design {
            spectrum,
            norms,
            orientation,
            output,
        } => cmd_design(&spectrum, &norms, orientation, output.as_deref(), stdout, stderr),
        Command::MatchCheck { file, output } => cmd_match_check(&file, output.as_deref(), stdout, stderr),
        Command::OracleCompare {
            file,
            flags,
            budget,
            seed,
            orientation,
            output,
        } => cmd_oracle_compare(
            &file,
            &flags,
            budget,
            seed,
            orientation,
            output.as_deref(),
            stdout,
            stderr,
        ),
    }
}

/// A problem file after validation.
struct Problem {
    input: ProblemInput,
    norms: NormSeq,
    orientation: Orientation,
    options: SolveOptions,
    seed: u64,
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> std::result::Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn load_problem(
    path: &Path,
    flags: Option<&SolveFlags>,
    orientation: Option<Orientation>,
) -> std::result::Result<Problem, Failure> {
    let file: ProblemFile = read_json(path)?;
    let orientation = orientation.or(file.orientation).unwrap_or(Orientation::Cols);
    let input = match (file.synthesis, file.lambda) {
        (Some(m), None) => ProblemInput::Vectors(vectors_from(&m, orientation)?),
        (None, Some(l)) => ProblemInput::Spectrum(Spectrum::decreasing(l).map_err(|e| Failure::input(e.to_string()))?),
        _ => return Err(Failure::input("exactly one of `synthesis` and `lambda` must be given")),
    };
    let norms = NormSeq::new(&file.norms).map_err(|e| Failure::input(e.to_string()))?;
    let pick = |flag: Option<&String>, from_file: Option<String>, default: &str| {
        flag.cloned().or(from_file).unwrap_or_else(|| default.to_string())
    };
    let potential: Potential = pick(flags.and_then(|f| f.potential.as_ref()), file.potential, "fp")
        .parse()
        .map_err(|e: Error| Failure::input(e.to_string()))?;
    let mode: EnumerationMode = pick(flags.and_then(|f| f.mode.as_ref()), file.mode, "full")
        .parse()
        .map_err(|e: Error| Failure::input(e.to_string()))?;
    let mut options = SolveOptions {
        potential,
        mode,
        ..SolveOptions::default()
    };
    if let Some(c) = flags.and_then(|f| f.caps).or(file.caps) {
        options.caps = Caps { max_partition_pairs: c };
    }
    if let Some(t) = flags.and_then(|f| f.tol).or(file.tol) {
        if !(t.is_finite() && t > 0.0) {
            return Err(Failure::input(format!("tolerance must be positive, got {t}")));
        }
        options.tol = t;
    }
    Ok(Problem {
        input,
        norms,
        orientation,
        options,
        seed: file.seed.unwrap_or(0),
    })
}

fn vectors_from(m: &[Vec<Scalar>], orientation: Orientation) -> std::result::Result<VectorSequence, Failure> {
    let rows: Vec<Vec<C64>> = m.iter().map(|r| r.iter().map(|&s| s.into()).collect()).collect();
    let v = match orientation {
        Orientation::Cols => VectorSequence::from_synthesis_columns(&rows),
        Orientation::Rows => {
            let dim = rows.first().map_or(0, |r| r.len());
            VectorSequence::new(dim, rows)
        }
    };
    v.map_err(|e| Failure::input(format!("synthesis matrix: {e}")))
}

fn matrix_from(m: &[Vec<Scalar>]) -> std::result::Result<HermitianMatrix, Failure> {
    let rows: Vec<Vec<C64>> = m.iter().map(|r| r.iter().map(|&s| s.into()).collect()).collect();
    HermitianMatrix::from_rows(&rows).map_err(|e| Failure::input(e.to_string()))
}

fn lambda_of(input: &ProblemInput) -> std::result::Result<Spectrum, Failure> {
    match input {
        ProblemInput::Spectrum(s) => Ok(s.clone()),
        ProblemInput::Vectors(v) => {
            let eig = eig_hermitian(&frame_operator(v))?;
            Ok(Spectrum::sorted(eig.values, Order::Decreasing)?)
        }
    }
}

type Complex = [f64; 2];

fn complex_matrix(v: &VectorSequence, orientation: Orientation) -> Vec<Vec<Complex>> {
    let rows = match orientation {
        Orientation::Cols => v.synthesis_columns(),
        Orientation::Rows => v.vectors().to_vec(),
    };
    rows.iter().map(|r| r.iter().map(|z| [z.re, z.im]).collect()).collect()
}

/// Six significant digits.
pub fn sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    // exponent after rounding, so 0.9999999 counts as 1
    let sci = format!("{x:.5e}");
    let magnitude: i32 = sci[sci.find('e').map_or(0, |i| i + 1)..].parse().unwrap_or(0);
    let decimals = (5 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

fn sig6_list(v: &[f64]) -> String {
    let parts: Vec<String> = v.iter().map(|&x| sig6(x)).collect();
    format!("({})", parts.join(", "))
}

fn emit(doc: &impl Serialize, output: Option<&Path>, stdout: &mut dyn Write) -> std::result::Result<(), Failure> {
    let text = serde_json::to_string_pretty(doc).map_err(|e| Failure::input(e.to_string()))? + "\n";
    write_text(&text, output, stdout)
}

fn write_text(text: &str, output: Option<&Path>, stdout: &mut dyn Write) -> std::result::Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::input(format!("{}: {e}", path.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Failure::input(e.to_string())),
    }
}

#[derive(Serialize)]
struct Counts {
    distinct: usize,
    provenances: usize,
    strict_provenances: usize,
    pairs_explored: u64,
}

#[derive(Serialize)]
struct Row {
    nu: Vec<f64>,
    /// `null` stands for `+∞`.
    value: Option<f64>,
}

#[derive(Serialize)]
struct Completion {
    orientation: Orientation,
    synthesis: Vec<Vec<Complex>>,
    squared_norms: Vec<f64>,
}

#[derive(Serialize)]
struct PartialInfo {
    cap: u64,
    pairs_explored: u64,
    remaining_items: usize,
    next_item_cost: u64,
}

#[derive(Serialize)]
struct SolveDoc {
    potential: String,
    mode: EnumerationMode,
    lambda: Vec<f64>,
    norms: Vec<f64>,
    feasible: bool,
    waterfill_nu: Vec<f64>,
    waterfill_mu: Vec<f64>,
    mu_star: Vec<f64>,
    nu_star: Vec<f64>,
    value: f64,
    candidate_count: usize,
    counts: Option<Counts>,
    table: Vec<Row>,
    majorization_minimizer: Option<Vec<f64>>,
    equal_levels: bool,
    partial: Option<PartialInfo>,
    completion: Option<Completion>,
    structure: Option<StructureDiagnostics>,
}

fn solve_doc(p: &Problem, r: &CompletionResult) -> SolveDoc {
    SolveDoc {
        potential: p.options.potential.to_string(),
        mode: p.options.mode,
        lambda: r.lambda.values().to_vec(),
        norms: p.norms.as_given(),
        feasible: r.feasible,
        waterfill_nu: r.waterfill.nu.values().to_vec(),
        waterfill_mu: r.waterfill.rho.values().to_vec(),
        mu_star: r.mu_star.values().to_vec(),
        nu_star: r.nu_star.values().to_vec(),
        value: r.value,
        candidate_count: r.candidate_count(),
        counts: r.stats.as_ref().map(|s| Counts {
            distinct: s.distinct,
            provenances: s.provenances,
            strict_provenances: s.strict_provenances,
            pairs_explored: s.pairs_explored,
        }),
        table: r
            .table
            .iter()
            .map(|row| Row {
                nu: row.nu.clone(),
                value: row.value.is_finite().then_some(row.value),
            })
            .collect(),
        majorization_minimizer: r.majorization_min.as_ref().map(|s| s.values().to_vec()),
        equal_levels: r.equal_levels,
        partial: r.partial.as_ref().map(|p| PartialInfo {
            cap: p.cap,
            pairs_explored: p.pairs_explored,
            remaining_items: p.remaining_items.len(),
            next_item_cost: p.next_item_cost,
        }),
        completion: r.completion.as_ref().map(|g| Completion {
            orientation: p.orientation,
            synthesis: complex_matrix(g, p.orientation),
            squared_norms: g.squared_norms(),
        }),
        structure: r.structure.clone(),
    }
}

fn candidates_csv(r: &CompletionResult) -> String {
    let d = r.lambda.len();
    let mut out = String::from("index,r,strict,");
    let mu_cols: Vec<String> = (1..=d).map(|i| format!("mu_{i}")).collect();
    let nu_cols: Vec<String> = (1..=d).map(|i| format!("nu_{i}")).collect();
    out += &mu_cols.join(",");
    out += ",";
    out += &nu_cols.join(",");
    out += ",value\n";
    for (i, (c, row)) in r.candidates.iter().zip(&r.table).enumerate() {
        let mu: Vec<String> = c.mu.values().iter().map(|x| x.to_string()).collect();
        let nu: Vec<String> = row.nu.iter().map(|x| x.to_string()).collect();
        out += &format!(
            "{i},{},{},{},{},{}\n",
            c.r + 1,
            c.strict,
            mu.join(","),
            nu.join(","),
            row.value
        );
    }
    out
}

fn cmd_solve(
    file: &Path,
    flags: &SolveFlags,
    emit_candidates: Option<&Path>,
    orientation: Option<Orientation>,
    output: Option<&Path>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Outcome {
    let p = load_problem(file, Some(flags), orientation)?;
    let r = solve(&p.input, &p.norms, &p.options)?;
    if let Some(path) = emit_candidates {
        fs::write(path, candidates_csv(&r)).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    }
    emit(&solve_doc(&p, &r), output, stdout)?;
    let _ = writeln!(
        stderr,
        "{}: feasible={} candidates={} ν*={} F={}",
        p.options.potential,
        r.feasible,
        r.candidate_count(),
        sig6_list(r.nu_star.values()),
        sig6(r.value)
    );
    if let Some(s) = &r.stats {
        let _ = writeln!(
            stderr,
            "counts: {} distinct, {} provenances, {} strict",
            s.distinct, s.provenances, s.strict_provenances
        );
    }
    let _ = writeln!(
        stderr,
        "majorization minimum: {}",
        match &r.majorization_min {
            Some(_) => "yes",
            None => "no",
        }
    );
    if let Some(g) = &r.completion {
        let _ = writeln!(stderr, "completion norms²: {}", sig6_list(&g.squared_norms()));
    }
    if let Some(progress) = &r.partial {
        let _ = writeln!(
            stderr,
            "caps exceeded after {} partition pairs; result is the best of the partial set (try --mode consecutive or a larger --caps)",
            progress.pairs_explored
        );
        return Ok(EXIT_CAPS);
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct FeasibleDoc {
    feasible: bool,
    lambda: Vec<f64>,
    norms: Vec<f64>,
    nu: Vec<f64>,
    mu: Vec<f64>,
    mu_nonzero: Vec<f64>,
    /// 1-based prefix length where `b ≺ μ` first fails.
    failing_prefix: Option<usize>,
}

fn cmd_feasible(
    file: &Path,
    orientation: Option<Orientation>,
    output: Option<&Path>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Outcome {
    let p = load_problem(file, None, orientation)?;
    let lambda = lambda_of(&p.input)?;
    let f = is_feasible(&lambda, &p.norms)?;
    let mu = f.waterfill.rho.values().to_vec();
    let failing_prefix = first_violation(p.norms.values(), &mu, true)?.map(|i| i + 1);
    let doc = FeasibleDoc {
        feasible: f.feasible,
        lambda: lambda.values().to_vec(),
        norms: p.norms.as_given(),
        nu: f.waterfill.nu.values().to_vec(),
        mu_nonzero: mu.iter().copied().filter(|&m| m > 0.0).collect(),
        mu,
        failing_prefix,
    };
    emit(&doc, output, stdout)?;
    let _ = writeln!(
        stderr,
        "feasible={} ν={} μ={}{}",
        doc.feasible,
        sig6_list(&doc.nu),
        sig6_list(&doc.mu_nonzero),
        failing_prefix.map_or(String::new(), |k| format!(" fails at prefix {k}"))
    );
    Ok(EXIT_OK)
}

fn design_csv(v: &VectorSequence, orientation: Orientation) -> String {
    let m = complex_matrix(v, orientation);
    let width = m.first().map_or(0, |r| r.len());
    let prefix = match orientation {
        Orientation::Cols => "f",
        Orientation::Rows => "x",
    };
    let header: Vec<String> = (1..=width).map(|j| format!("{prefix}{j}_re,{prefix}{j}_im")).collect();
    let mut out = header.join(",") + "\n";
    for row in m {
        let cells: Vec<String> = row.iter().map(|[re, im]| format!("{re},{im}")).collect();
        out += &cells.join(",");
        out += "\n";
    }
    out
}

fn cmd_design(
    spectrum: &[f64],
    norms: &[f64],
    orientation: Orientation,
    output: Option<&Path>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Outcome {
    let target = Spectrum::sorted(spectrum.to_vec(), Order::Decreasing).map_err(|e| Failure::input(e.to_string()))?;
    let norms = NormSeq::new(norms).map_err(|e| Failure::input(e.to_string()))?;
    let v = design_vectors(&HermitianMatrix::from_real_diagonal(spectrum), &norms)?;
    write_text(&design_csv(&v, orientation), output, stdout)?;
    let got = eig_hermitian(&frame_operator(&v))?.values;
    let err = got
        .iter()
        .zip(target.values())
        .fold(0.0_f64, |m, (a, b)| m.max((a - b).abs()));
    let _ = writeln!(
        stderr,
        "{} vectors in C^{}: norms² {} spectrum error {}",
        v.len(),
        v.dim(),
        sig6_list(&v.squared_norms()),
        sig6(err)
    );
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct Pairing {
    lambda: Vec<f64>,
    mu: Vec<f64>,
    vectors: Vec<Vec<Complex>>,
}

#[derive(Serialize)]
struct MatchDoc {
    is_equality: bool,
    lhs: Vec<f64>,
    rhs: Vec<f64>,
    gap: f64,
    commutator: f64,
    certificate_consistent: bool,
    lindskii_holds: bool,
    weyl_holds: bool,
    pairing: Option<Pairing>,
}

fn cmd_match_check(file: &Path, output: Option<&Path>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Outcome {
    let m: MatchFile = read_json(file)?;
    let (s0, s1) = (matrix_from(&m.s0)?, matrix_from(&m.s1)?);
    if s0.dim() != s1.dim() {
        return Err(Failure::input(format!(
            "dimensions differ: {} vs {}",
            s0.dim(),
            s1.dim()
        )));
    }
    let report = is_optimal_matching(&s0, &s1)?;
    let doc = MatchDoc {
        is_equality: report.is_equality,
        lhs: report.lhs.clone(),
        rhs: report.rhs.clone(),
        gap: report.gap,
        commutator: report.commutator,
        certificate_consistent: report.certificate_consistent,
        lindskii_holds: lindskii_check(&s0, &s1)?.holds,
        weyl_holds: weyl_check(&s0, &s1)?.holds,
        pairing: report.pairing.as_ref().map(|p| Pairing {
            lambda: p.lambda.clone(),
            mu: p.mu.clone(),
            vectors: p
                .vectors
                .iter()
                .map(|v| v.iter().map(|z| [z.re, z.im]).collect())
                .collect(),
        }),
    };
    emit(&doc, output, stdout)?;
    let _ = writeln!(
        stderr,
        "optimal matching: {} (gap {}, commutator {})",
        doc.is_equality,
        sig6(doc.gap),
        sig6(doc.commutator)
    );
    if !doc.certificate_consistent {
        let _ = writeln!(
            stderr,
            "warning: equality detected but the matrices do not commute numerically"
        );
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct OracleRow {
    potential: String,
    solver_nu: Vec<f64>,
    solver_value: f64,
    oracle_mu: Vec<f64>,
    oracle_value: f64,
    relative_gap: f64,
    /// `F_oracle ≥ F(ν*) - 1e-6 (1 + |F(ν*)|)`.
    oracle_not_better: bool,
}

#[derive(Serialize)]
struct OracleDoc {
    budget: u64,
    seed: u64,
    rows: Vec<OracleRow>,
}

#[allow(clippy::too_many_arguments)]
fn cmd_oracle_compare(
    file: &Path,
    flags: &SolveFlags,
    budget: u64,
    seed: Option<u64>,
    orientation: Option<Orientation>,
    output: Option<&Path>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Outcome {
    let p = load_problem(file, Some(flags), orientation)?;
    let seed = seed.unwrap_or(p.seed);
    let lambda = lambda_of(&p.input)?;
    let potentials: Vec<Potential> = if flags.potential.is_some() {
        vec![p.options.potential.clone()]
    } else {
        vec![Potential::FramePotential, Potential::Mse, Potential::Power(3.0)]
    };
    let cfg = OracleConfig {
        budget,
        seed,
        ..OracleConfig::default()
    };
    let mut rows = Vec::new();
    for f in potentials {
        let opts = SolveOptions {
            potential: f.clone(),
            ..p.options.clone()
        };
        let r = solve(&ProblemInput::Spectrum(lambda.clone()), &p.norms, &opts)?;
        let o = brute_force_min(&lambda, &p.norms, &f, &cfg)?;
        let tol = 1e-6 * (1.0 + r.value.abs());
        rows.push(OracleRow {
            potential: f.to_string(),
            solver_nu: r.nu_star.values().to_vec(),
            solver_value: r.value,
            oracle_mu: o.mu.values().to_vec(),
            oracle_value: o.value,
            relative_gap: (o.value - r.value) / r.value.abs().max(f64::MIN_POSITIVE),
            oracle_not_better: o.value >= r.value - tol,
        });
    }
    for row in &rows {
        let _ = writeln!(
            stderr,
            "{}: solver {} oracle {} relative gap {}{}",
            row.potential,
            sig6(row.solver_value),
            sig6(row.oracle_value),
            sig6(row.relative_gap),
            if row.oracle_not_better {
                ""
            } else {
                " (oracle below solver)"
            }
        );
    }
    emit(&OracleDoc { budget, seed, rows }, output, stdout)?;
    Ok(EXIT_OK)
}
