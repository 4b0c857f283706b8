//! The `sgmat` command line.
//!
//! Exit codes: 0 when the command ran and every check passed, 1 when a
//! check failed, 2 for usage, input and size-limit errors. Errors are
//! printed as a single `error: ...` line on stderr.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::balance::{balanced_component_count, is_balanced};
use crate::error::Error;
use crate::graph::{Orientation, SignedGraph, SwitchingFunction};
use crate::io::{read_graph, read_switching, write_graph, write_matrix, MatrixFormat};
use crate::linegraph::{
    check_line_eigenvalues, line_adjacency_identity, line_graph, reduce, validate_circle_signs,
    CIRCLE_CHECK_LIMIT,
};
use crate::matrix::{adjacency, ar_matrix, incidence, kirchhoff, seidel, IntMatrix};
use crate::oracle::{count_signed_walks, matrix_tree_check, verify_theta_parity};
use crate::spectra::{
    check_kirchhoff_bounds, check_kirchhoff_edge_interlacing, eig_sym, kirchhoff_nullity,
    rank_gf2, rank_rational, DEFAULT_TOL,
};
use crate::vsr::check_vsr;

#[derive(Parser, Debug)]
#[command(name = "sgmat", version, about = "Matrices of signed graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Test balance and print a bipartition or a negative circle.
    Balance { file: PathBuf },
    /// Switch a graph and print the result.
    Switch {
        file: PathBuf,
        /// Comma-separated vertices to switch.
        #[arg(long, value_delimiter = ',', conflicts_with = "fn", required_unless_present = "fn")]
        set: Vec<usize>,
        /// File with one sign per vertex.
        #[arg(long = "fn", id = "fn")]
        r#fn: Option<PathBuf>,
    },
    /// Print a matrix of the graph.
    Matrix {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: MatrixKind,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Print eigenvalues, largest first.
    Spectrum {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "adj")]
        matrix: SpectrumMatrix,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Rank of the incidence matrix.
    Rank {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "q")]
        field: Field,
    },
    /// Print the line graph, with its orientation unless reduced.
    Linegraph {
        file: PathBuf,
        #[arg(long)]
        reduce: bool,
    },
    /// Print the generalized line graph of the file's underlying graph.
    Glg {
        file: PathBuf,
        /// Comma-separated digon counts, one per vertex.
        #[arg(long, value_delimiter = ',', required = true)]
        m: Vec<usize>,
    },
    /// Very strong regularity parameters.
    Vsr { file: PathBuf },
    /// Run verification suites against the brute-force oracles.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MatrixKind {
    Adj,
    Seidel,
    Incidence,
    Kirchhoff,
    Ar,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Plain,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SpectrumMatrix {
    Adj,
    Kirchhoff,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Field {
    Q,
    Gf2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Rank,
    Matrixtree,
    Walks,
    Theta,
    Linegraph,
    KirchhoffBounds,
    All,
}

const SUITES: [Suite; 6] = [
    Suite::Rank,
    Suite::Matrixtree,
    Suite::Walks,
    Suite::Theta,
    Suite::Linegraph,
    Suite::KirchhoffBounds,
];

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Rank => "rank",
            Suite::Matrixtree => "matrixtree",
            Suite::Walks => "walks",
            Suite::Theta => "theta",
            Suite::Linegraph => "linegraph",
            Suite::KirchhoffBounds => "kirchhoff-bounds",
            Suite::All => "all",
        }
    }
}

/// Walk lengths checked by the `walks` suite.
const WALK_LENGTH: u32 = 5;

enum Failure {
    /// A check ran and failed.
    Check,
    /// Bad input or a size limit.
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

/// Run the command line with `args` (program name first) and return the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Check) => 1,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn load(path: &Path) -> Result<(SignedGraph, Option<Orientation>), Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    read_graph(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn execute(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Balance { file } => {
            let (g, _) = load(&file)?;
            let cert = is_balanced(&g);
            if let Some((x, y)) = &cert.bipartition {
                writeln!(out, "balanced")?;
                writeln!(out, "negative-side {}", join(x))?;
                writeln!(out, "positive-side {}", join(y))?;
            } else {
                writeln!(out, "unbalanced")?;
                writeln!(out, "witness {}", join(cert.witness.as_deref().unwrap_or(&[])))?;
            }
        }
        Command::Switch { file, set, r#fn } => {
            let (g, o) = load(&file)?;
            let theta = match r#fn {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)?;
                    SwitchingFunction::from_signs(read_switching(&text)?)
                }
                None => SwitchingFunction::from_set(g.n(), &set)?,
            };
            let h = g.switch(&theta)?;
            let ho = o.map(|o| o.switch(&theta)).transpose()?;
            write!(out, "{}", write_graph(&h, ho.as_ref()))?;
        }
        Command::Matrix { file, kind, format } => {
            let (g, o) = load(&file)?;
            let format = match format {
                Format::Plain => MatrixFormat::Plain,
                Format::Csv => MatrixFormat::Csv,
            };
            let m = match kind {
                MatrixKind::Adj => adjacency(&g),
                MatrixKind::Seidel => seidel(&g.underlying()),
                MatrixKind::Incidence => incidence(&g, &orientation(&g, o))?,
                MatrixKind::Kirchhoff => kirchhoff(&g),
                MatrixKind::Ar => {
                    let r = ar_matrix(&g);
                    let text = r.to_string();
                    match format {
                        MatrixFormat::Plain => write!(out, "{text}")?,
                        MatrixFormat::Csv => write!(out, "{}", text.replace(' ', ","))?,
                    }
                    return Ok(());
                }
            };
            write!(out, "{}", write_matrix(&m, format))?;
        }
        Command::Spectrum { file, matrix, tol } => {
            let (g, _) = load(&file)?;
            let m = match matrix {
                SpectrumMatrix::Adj => adjacency(&g),
                SpectrumMatrix::Kirchhoff => kirchhoff(&g),
            };
            for x in eig_sym(&m, tol)?.values {
                // avoid printing -0.0000000000
                let x = if x.abs() < tol { 0.0 } else { x };
                writeln!(out, "{x:.10}")?;
            }
        }
        Command::Rank { file, field } => {
            let (g, o) = load(&file)?;
            let h = incidence(&g, &orientation(&g, o))?;
            let r = match field {
                Field::Q => rank_rational(&h),
                Field::Gf2 => rank_gf2(&h),
            };
            writeln!(out, "{r}")?;
        }
        Command::Linegraph { file, reduce: reduced } => {
            let (g, o) = load(&file)?;
            let lg = line_graph(&g, &orientation(&g, o))?;
            if reduced {
                write!(out, "{}", write_graph(&reduce(&lg), None))?;
            } else {
                write!(out, "{}", write_graph(&lg.graph, Some(&lg.orientation)))?;
            }
        }
        Command::Glg { file, m } => {
            let (g, _) = load(&file)?;
            if g.has_parallel_edges() {
                return Err(Error::NotSimple.into());
            }
            let glg = crate::linegraph::generalized_line_graph(&g.underlying(), &m)?;
            write!(out, "{}", write_graph(&glg, None))?;
        }
        Command::Vsr { file } => {
            let (g, _) = load(&file)?;
            match check_vsr(&g)? {
                Some(v) => {
                    writeln!(out, "t {}", v.t)?;
                    writeln!(out, "k {}", v.k)?;
                    writeln!(out, "p {}{}", v.p, if v.p_free { " (free)" } else { "" })?;
                    writeln!(out, "rho0 {}", v.rho0)?;
                    writeln!(out, "case {}", case_name(v.case))?;
                }
                None => writeln!(out, "not very strongly regular")?,
            }
        }
        Command::Verify { file, suite } => {
            let (g, o) = load(&file)?;
            let o = orientation(&g, o);
            let suites: Vec<Suite> = if suite == Suite::All {
                SUITES.to_vec()
            } else {
                vec![suite]
            };
            let mut failed = false;
            for s in suites {
                match run_suite(s, &g, &o)? {
                    None => writeln!(out, "PASS {}", s.name())?,
                    Some(reason) => {
                        failed = true;
                        writeln!(out, "FAIL {}: {reason}", s.name())?;
                    }
                }
            }
            if failed {
                return Err(Failure::Check);
            }
        }
    }
    Ok(())
}

fn case_name(c: crate::vsr::VsrCase) -> &'static str {
    use crate::vsr::VsrCase::*;
    match c {
        HomogeneousSrg => "homogeneous",
        P0T0 => "p0t0",
        P0 => "p0",
        General => "general",
    }
}

fn orientation(g: &SignedGraph, o: Option<Orientation>) -> Orientation {
    o.unwrap_or_else(|| Orientation::default_for(g))
}

/// `None` when the suite passes, otherwise the first failure.
fn run_suite(s: Suite, g: &SignedGraph, o: &Orientation) -> Result<Option<String>, Failure> {
    let n = g.n();
    let (b, c) = balanced_component_count(g);
    Ok(match s {
        Suite::Rank => {
            let h = incidence(g, o)?;
            let (q, two) = (rank_rational(&h), rank_gf2(&h));
            if q != n - b {
                Some(format!("rank over Q is {q}, expected n - b = {}", n - b))
            } else if two != n - c {
                Some(format!("rank over GF(2) is {two}, expected n - c = {}", n - c))
            } else {
                None
            }
        }
        Suite::Matrixtree => {
            let r = matrix_tree_check(g)?;
            (!r.holds()).then(|| {
                format!("det K = {} but pseudoforests give {}", r.determinant, r.pseudoforest_sum)
            })
        }
        Suite::Walks => {
            let a = adjacency(g);
            let mut power = IntMatrix::identity(n);
            let mut failure = None;
            'outer: for l in 1..=WALK_LENGTH {
                power = &power * &a;
                for i in 1..=n {
                    for j in 1..=n {
                        let (p, m) = count_signed_walks(g, i, j, l)?;
                        if p as i64 - m as i64 != power[(i - 1, j - 1)] {
                            failure = Some(format!("walks of length {l} from {i} to {j}: {p} - {m}"));
                            break 'outer;
                        }
                    }
                }
            }
            failure
        }
        Suite::Theta => {
            let r = verify_theta_parity(g)?;
            let first = r.violations().next().map(|t| {
                format!("theta {:?} has {} negative circles", t.edges, t.negative_circles())
            });
            first
        }
        Suite::Linegraph => {
            let id = line_adjacency_identity(g, o)?;
            let eig = check_line_eigenvalues(g, DEFAULT_TOL * 1e-2, 1e-6)?;
            if !id.holds() {
                Some("A(line graph) differs from 2I - HᵀH".to_string())
            } else if !eig.holds() {
                Some(format!(
                    "eigenvalue 2 has multiplicity {}, expected {}",
                    eig.multiplicity_of_two, eig.expected_multiplicity
                ))
            } else if n <= CIRCLE_CHECK_LIMIT {
                validate_circle_signs(&line_graph(g, o)?)?.failures.into_iter().next()
            } else {
                None
            }
        }
        Suite::KirchhoffBounds => {
            let tol = DEFAULT_TOL;
            let mut failure = None;
            if !g.has_parallel_edges() {
                let r = check_kirchhoff_bounds(g, tol)?;
                if !r.holds() {
                    failure = Some(format!("Kirchhoff bounds fail: {r:?}"));
                }
            }
            for e in 1..=g.m() {
                if failure.is_some() {
                    break;
                }
                if !check_kirchhoff_edge_interlacing(g, e, tol)?.holds() {
                    failure = Some(format!("interlacing fails when deleting edge {e}"));
                }
            }
            let nullity = kirchhoff_nullity(g, tol)?;
            if failure.is_none() && nullity != b {
                failure = Some(format!("Kirchhoff nullity {nullity}, expected b = {b}"));
            }
            failure
        }
        Suite::All => unreachable!("expanded by the caller"),
    })
}
