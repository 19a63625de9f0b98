//! Command-line interface: deterministic text reports over the library.
//!
//! Every command loads a surface document, runs one library operation, and
//! prints plain text assembled from canonically ordered data, so identical
//! invocations produce byte-identical output. Exit status is 0 on success,
//! 1 on a domain error (bad surface, unknown curve, disagreeing routes), and
//! 2 on a usage error.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::cluster::{self, ClusterError};
use crate::expansion::{self, ExpansionError};
use crate::laurent::LaurentError;
use crate::paths::CurveGeometry;
use crate::quiver::Quiver;
use crate::strings::StringModule;
use crate::surface::{Surface, SurfaceError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cli: cannot read {path}: {message}")]
    UnreadableFile { path: String, message: String },
    #[error("cli: bad --seq entry {entry:?}: expected 1-based direction numbers")]
    BadSequence { entry: String },
    #[error("cli: verification failed")]
    ChecksFailed,
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Cluster(#[from] ClusterError),
    #[error(transparent)]
    Expansion(#[from] ExpansionError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

impl CliError {
    /// Process exit status: 2 for malformed invocations, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::BadSequence { .. } => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Paths,
    Modules,
    Both,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Surface document to load.
    #[arg(long, value_name = "FILE")]
    surface: PathBuf,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Print supplementary detail lines.
    #[arg(long)]
    verbose: bool,
}

#[derive(Debug, Args)]
pub struct CurveArg {
    /// Name of a curve declared in the surface document.
    #[arg(long, value_name = "NAME")]
    curve: String,
}

#[derive(Debug, Parser)]
#[command(
    name = "tricluster",
    version,
    about = "Expansions of curves on triangulated surfaces"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Topological summary of the surface.
    Stats {
        #[command(flatten)]
        common: Common,
    },
    /// The signed adjacency (exchange) matrix, one row per line.
    Bmatrix {
        #[command(flatten)]
        common: Common,
    },
    /// The quiver with potential: arrows, cycles, and relations.
    Qp {
        #[command(flatten)]
        common: Common,
    },
    /// The string of a curve, arcs joined by directed letters.
    String {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        curve: CurveArg,
    },
    /// All position sets closed under the string's letters, one per line.
    Subsets {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        curve: CurveArg,
    },
    /// Closed-set counts grouped by arc multiplicity.
    Mu {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        curve: CurveArg,
    },
    /// All complete paths shadowing a curve, one arc sequence per line.
    Paths {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        curve: CurveArg,
    },
    /// The expansion of a curve, by either route or both.
    Expand {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        curve: CurveArg,
        /// Which route to compute.
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// The x-exponent vector of the all-unoriented path weight.
    Index {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        curve: CurveArg,
    },
    /// The common degree vector of the expansion.
    Gvector {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        curve: CurveArg,
    },
    /// The expansion with every x set to 1.
    Fpoly {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        curve: CurveArg,
    },
    /// Mutate the initial seed along a direction sequence and print it.
    Mutate {
        #[command(flatten)]
        common: Common,
        /// Comma-separated 1-based directions, applied left to right.
        #[arg(long, value_name = "k1,k2,...", default_value = "")]
        seq: String,
    },
    /// Find the curve's cluster variable by flips alone.
    Oracle {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        curve: CurveArg,
        /// Search depth bound; defaults to twice the rank squared.
        #[arg(long, value_name = "N")]
        max_depth: Option<usize>,
    },
    /// Run every cross-check on a curve and report PASS or FAIL per line.
    Verify {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        curve: CurveArg,
        /// Also compare against the variable found by flip search.
        #[arg(long)]
        oracle: bool,
        /// Search depth bound for --oracle; defaults to twice the rank squared.
        #[arg(long, value_name = "N")]
        max_depth: Option<usize>,
    },
}

fn load(common: &Common) -> Result<Surface, CliError> {
    let text = fs::read_to_string(&common.surface).map_err(|e| CliError::UnreadableFile {
        path: common.surface.display().to_string(),
        message: e.to_string(),
    })?;
    Ok(Surface::parse(&text)?)
}

fn int_vector(v: &[i64]) -> String {
    let body: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("({})", body.join(","))
}

fn weight_vector(v: &[u32]) -> String {
    let body: Vec<String> = v.iter().map(u32::to_string).collect();
    format!("({})", body.join(","))
}

fn position_set(set: &[usize]) -> String {
    let body: Vec<String> = set.iter().map(usize::to_string).collect();
    format!("{{{}}}", body.join(","))
}

fn default_depth(surface: &Surface) -> usize {
    2 * surface.rank() * surface.rank()
}

/// Run one command, appending stdout text to `out`. Text accumulated before
/// an error (for instance a verification report ending in FAILED) is still
/// meant to be printed.
pub fn run(cli: &Cli, out: &mut String) -> Result<(), CliError> {
    match &cli.command {
        Command::Stats { common } => {
            let s = load(common)?;
            let st = s.stats();
            writeln!(out, "genus {}", st.genus).unwrap();
            writeln!(out, "boundary-components {}", st.boundary_components).unwrap();
            writeln!(out, "marked-points {}", st.marked_points).unwrap();
            writeln!(out, "internal-arcs {}", st.internal_arcs).unwrap();
            writeln!(out, "boundary-arcs {}", st.boundary_arcs).unwrap();
            writeln!(out, "triangles {}", st.triangles).unwrap();
        }
        Command::Bmatrix { common } => {
            let s = load(common)?;
            for row in Quiver::of(&s).b_matrix() {
                let cells: Vec<String> = row.iter().map(i64::to_string).collect();
                writeln!(out, "{}", cells.join(" ")).unwrap();
            }
        }
        Command::Qp { common } => {
            let s = load(common)?;
            let q = Quiver::of(&s);
            let name = |pos: usize| s.arc_name(s.internal_arc(pos));
            for v in 0..q.rank() {
                writeln!(out, "vertex {}", name(v)).unwrap();
            }
            for a in q.arrows() {
                writeln!(
                    out,
                    "arrow {} -> {} triangle {}",
                    name(a.from),
                    name(a.to),
                    a.triangle + 1
                )
                .unwrap();
            }
            for cycle in q.cycles() {
                let first = q.arrows()[cycle[0]];
                writeln!(
                    out,
                    "cycle {} -> {} -> {} -> {}",
                    name(first.from),
                    name(q.arrows()[cycle[1]].from),
                    name(q.arrows()[cycle[2]].from),
                    name(first.from)
                )
                .unwrap();
            }
            for (a, b) in q.relations() {
                let (a, b) = (q.arrows()[a], q.arrows()[b]);
                writeln!(
                    out,
                    "relation {} -> {} -> {}",
                    name(a.from),
                    name(a.to),
                    name(b.to)
                )
                .unwrap();
            }
        }
        Command::String { common, curve } => {
            let s = load(common)?;
            let module = StringModule::of(&s, s.curve(&curve.curve)?);
            writeln!(out, "{}", module.render(&s)).unwrap();
        }
        Command::Subsets { common, curve } => {
            let s = load(common)?;
            let module = StringModule::of(&s, s.curve(&curve.curve)?);
            for set in module.closed_subsets() {
                writeln!(out, "{}", position_set(&set)).unwrap();
            }
        }
        Command::Mu { common, curve } => {
            let s = load(common)?;
            let module = StringModule::of(&s, s.curve(&curve.curve)?);
            for (weight, count) in module.mu() {
                writeln!(out, "{} {}", weight_vector(&weight), count).unwrap();
            }
        }
        Command::Paths { common, curve } => {
            let s = load(common)?;
            let geometry = CurveGeometry::of(&s, s.curve(&curve.curve)?);
            for path in geometry.enumerate() {
                if common.verbose {
                    writeln!(
                        out,
                        "{} oriented {}",
                        path.render(&s),
                        position_set(&path.oriented_positions())
                    )
                    .unwrap();
                } else {
                    writeln!(out, "{}", path.render(&s)).unwrap();
                }
            }
        }
        Command::Expand {
            common,
            curve,
            method,
        } => {
            let s = load(common)?;
            let c = s.curve(&curve.curve)?;
            let printed = match method {
                Method::Paths => expansion::expand_by_paths(&s, c)?,
                Method::Modules => expansion::expand_by_counts(&s, c)?,
                Method::Both => {
                    let via_paths = expansion::expand_by_paths(&s, c)?;
                    let via_counts = expansion::expand_by_counts(&s, c)?;
                    writeln!(out, "{}", via_paths.render()).unwrap();
                    writeln!(out, "{}", via_counts.render()).unwrap();
                    if via_paths != via_counts {
                        return Err(ExpansionError::RouteMismatch {
                            via_paths: via_paths.render(),
                            via_counts: via_counts.render(),
                        }
                        .into());
                    }
                    writeln!(out, "MATCH").unwrap();
                    via_paths
                }
            };
            if *method != Method::Both {
                writeln!(out, "{}", printed.render()).unwrap();
            }
            if common.verbose {
                writeln!(out, "terms {}", printed.term_count()).unwrap();
            }
        }
        Command::Index { common, curve } => {
            let s = load(common)?;
            let ind = expansion::index_vector(&s, s.curve(&curve.curve)?);
            writeln!(out, "{}", int_vector(&ind)).unwrap();
        }
        Command::Gvector { common, curve } => {
            let s = load(common)?;
            let g = expansion::g_vector(&s, s.curve(&curve.curve)?)?;
            writeln!(out, "{}", int_vector(&g)).unwrap();
        }
        Command::Fpoly { common, curve } => {
            let s = load(common)?;
            let f = expansion::f_polynomial(&s, s.curve(&curve.curve)?)?;
            writeln!(out, "{}", f.render()).unwrap();
        }
        Command::Mutate { common, seq } => {
            let s = load(common)?;
            let mut directions = Vec::new();
            for entry in seq.split(',').filter(|e| !e.is_empty()) {
                let k: usize = entry
                    .trim()
                    .parse()
                    .ok()
                    .filter(|&k| k >= 1)
                    .ok_or_else(|| CliError::BadSequence {
                        entry: entry.to_string(),
                    })?;
                directions.push(k - 1);
            }
            let seed = cluster::initial_seed(&s).mutate_all(&directions)?;
            writeln!(out, "matrix:").unwrap();
            for row in seed.matrix() {
                let cells: Vec<String> = row.iter().map(i64::to_string).collect();
                writeln!(out, "{}", cells.join(" ")).unwrap();
            }
            for (k, var) in seed.vars().iter().enumerate() {
                writeln!(out, "var {}: {}", k + 1, var.render()).unwrap();
            }
        }
        Command::Oracle {
            common,
            curve,
            max_depth,
        } => {
            let s = load(common)?;
            let c = s.curve(&curve.curve)?;
            let depth = max_depth.unwrap_or_else(|| default_depth(&s));
            match expansion::variable_by_flips(&s, c, depth) {
                Ok(found) => {
                    writeln!(out, "{}", found.variable.render()).unwrap();
                    if common.verbose {
                        let names: Vec<&str> = found
                            .flips
                            .iter()
                            .map(|&k| s.arc_name(s.internal_arc(k)))
                            .collect();
                        writeln!(out, "flips {}", names.join(" ")).unwrap();
                        writeln!(out, "seeds-explored {}", found.seeds_explored).unwrap();
                    }
                }
                Err(ExpansionError::Cluster(ClusterError::NotFound { max_depth })) => {
                    writeln!(out, "NOT-FOUND depth {max_depth}").unwrap();
                }
                Err(e) => return Err(e.into()),
            }
        }
        Command::Verify {
            common,
            curve,
            oracle,
            max_depth,
        } => {
            let s = load(common)?;
            let c = s.curve(&curve.curve)?;
            let mut all_pass = true;
            let mut check = |out: &mut String, name: &str, pass: bool| {
                writeln!(out, "{} {}", name, if pass { "PASS" } else { "FAIL" }).unwrap();
                all_pass &= pass;
            };

            let via_paths = expansion::expand_by_paths(&s, c)?;
            let via_counts = expansion::expand_by_counts(&s, c)?;
            check(out, "routes-agree", via_paths == via_counts);

            let path_count = CurveGeometry::of(&s, c).enumerate().len();
            let mu_total = expansion::closed_set_count(&s, c);
            check(
                out,
                "path-count-equals-mu-total",
                BigInt::from(path_count) == mu_total,
            );

            let b = Quiver::of(&s).b_matrix();
            let ind = expansion::index_vector(&s, c);
            let degree = via_counts.degree_of(&b)?;
            check(
                out,
                "homogeneous-degree-equals-index",
                degree.as_deref() == Some(ind.as_slice()),
            );

            let n = s.rank();
            let constant = via_counts
                .specialize_x_one()
                .coefficient(&vec![0; n], &vec![0; n]);
            check(out, "f-constant-term-one", constant == BigInt::one());

            if *oracle {
                let depth = max_depth.unwrap_or_else(|| default_depth(&s));
                let found = expansion::variable_by_flips(&s, c, depth)?;
                check(out, "oracle-variable-matches", found.variable == via_counts);
            }

            writeln!(out, "{}", if all_pass { "VERIFIED" } else { "FAILED" }).unwrap();
            if !all_pass {
                return Err(CliError::ChecksFailed);
            }
        }
    }
    Ok(())
}
