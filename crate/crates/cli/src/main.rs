//! `crossings`: two-page drawings of K_n, the crossing graph G_n and its
//! MAX-CUT bounds, and the numerical checks behind the asymptotic bound.

mod report;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use crossings_core::verify::{counting_suite, first_failure, fourier_suite, level_suite, Check, FourierSuiteParams};
use crossings_core::{
    asymptotic_lower_bound, build_crossing_graph, build_cylindrical, closed_form_crossings, count_crossings,
    crossing_lower_bound, exact_max_cut, guy_number, heuristic_max_cut, render_svg, Error, HeuristicParams,
    MaxCutResult, SvgLayout, SvgOptions, DEFAULT_EXACT_LIMIT,
};

use crate::report::{build_rows, write_report, Format};

#[derive(Parser)]
#[command(name = "crossings", version, about = "Two-page drawings of K_n and MAX-CUT crossing bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count crossings of the cylindrical drawing and compare with Z(n).
    Upper {
        #[arg(long)]
        n: u32,
        /// Write the drawing as SVG to this path.
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Layout::SideBySide)]
        layout: Layout,
    },
    /// Size of the crossing graph G_n.
    Gn {
        #[arg(long)]
        n: u32,
    },
    /// MAX-CUT of G_n and the implied crossing-number lower bound.
    Maxcut {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum)]
        mode: Mode,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Certified lower bound (when an exact solve is feasible) and the
    /// leading-order asymptotic bound.
    Bound {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
        exact_limit: usize,
    },
    /// Numerical and combinatorial checks; exits 1 on the first failure.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
    /// One row per n with Z(n), |E(G_n)|, MAX-CUT and the lower bound.
    Report {
        #[arg(long)]
        n_min: u32,
        #[arg(long)]
        n_max: u32,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        solver: SolverArgs,
    },
}

#[derive(Args, Clone, Copy)]
struct SolverArgs {
    #[arg(long, default_value_t = HeuristicParams::default().seed)]
    seed: u64,
    #[arg(long, default_value_t = HeuristicParams::default().restarts)]
    restarts: u32,
    #[arg(long, default_value_t = HeuristicParams::default().iterations)]
    iters: u32,
    /// Largest number of non-isolated chords the exact solver accepts.
    #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
    exact_limit: usize,
}

impl SolverArgs {
    fn heuristic(self) -> HeuristicParams {
        HeuristicParams { seed: self.seed, restarts: self.restarts, iterations: self.iters }
    }
}

#[derive(Subcommand)]
enum Suite {
    Fourier {
        #[arg(long, default_value_t = FourierSuiteParams::default().trials)]
        trials: usize,
        #[arg(long, default_value_t = FourierSuiteParams::default().truncation)]
        truncation: u32,
        #[arg(long, default_value_t = FourierSuiteParams::default().grid)]
        grid: usize,
        #[arg(long, default_value_t = FourierSuiteParams::default().seed)]
        seed: u64,
    },
    Level {
        #[arg(long, default_value_t = 300)]
        k_max: u32,
    },
    Counting {
        #[arg(long, default_value_t = 200)]
        n_max: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exact,
    Heuristic,
}

#[derive(Clone, Copy, ValueEnum)]
enum Layout {
    SideBySide,
    InsideOutside,
}

enum Failure {
    Usage(String),
    Infeasible(String),
    Verification(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TooLargeForExact { .. } => Failure::Infeasible(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    match run(cli.command, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            let (code, message) = match failure {
                Failure::Verification(m) => (1, m),
                Failure::Usage(m) => (2, m),
                Failure::Infeasible(m) => (3, m),
                Failure::Io(m) => (4, m),
            };
            let _ = out.flush();
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> Result<(), Failure> {
    match command {
        Command::Upper { n, svg, layout } => {
            let drawing = build_cylindrical(n)?;
            let crossings = count_crossings(&drawing);
            let z = guy_number(n)?;
            let closed = closed_form_crossings(n)?;
            let matches = crossings == z && z == closed;
            writeln!(out, "crossings={crossings} Z={z} closed_form={closed} match={matches}")?;
            if let Some(path) = svg {
                let layout = match layout {
                    Layout::SideBySide => SvgLayout::SideBySide,
                    Layout::InsideOutside => SvgLayout::InsideOutside,
                };
                fs::write(&path, render_svg(&drawing, &SvgOptions { layout, ..SvgOptions::default() }))?;
                writeln!(out, "svg={}", path.display())?;
            }
        }
        Command::Gn { n } => {
            let g = build_crossing_graph(n)?;
            let isolated = g.vertex_count() - g.non_isolated().len();
            writeln!(out, "vertices={} edges={} isolated={isolated}", g.vertex_count(), g.edge_count())?;
        }
        Command::Maxcut { n, mode, solver } => {
            let g = build_crossing_graph(n)?;
            let result = match mode {
                Mode::Exact => exact_max_cut(&g, solver.exact_limit)?,
                Mode::Heuristic => heuristic_max_cut(&g, solver.heuristic())?,
            };
            print_max_cut(out, n, &result)?;
        }
        Command::Bound { n, exact_limit } => {
            let g = build_crossing_graph(n)?;
            match exact_max_cut(&g, exact_limit) {
                Ok(result) => {
                    let bound = crossing_lower_bound(n, result.value)?;
                    writeln!(out, "lower_bound={bound} certified=true maxcut={}", result.value)?;
                }
                Err(Error::TooLargeForExact { vertices, limit }) => {
                    writeln!(
                        out,
                        "lower_bound=not_computed ({vertices} non-isolated chords exceed the exact limit {limit})"
                    )?;
                }
                Err(e) => return Err(e.into()),
            }
            writeln!(out, "asymptotic_leading={:.3} (leading-order n^4 term only)", asymptotic_lower_bound(n))?;
        }
        Command::Verify { suite } => {
            let checks = match suite {
                Suite::Fourier { trials, truncation, grid, seed } => {
                    if grid < 8 {
                        return Err(Error::GridTooCoarse(grid).into());
                    }
                    fourier_suite(FourierSuiteParams { trials, truncation, grid, seed })
                }
                Suite::Level { k_max } => {
                    if k_max < 2 {
                        return Err(Error::LevelTooSmall(k_max).into());
                    }
                    level_suite(k_max)
                }
                Suite::Counting { n_max } => {
                    if n_max < 3 {
                        return Err(Error::TooFewVertices(n_max).into());
                    }
                    counting_suite(n_max)
                }
            };
            report_checks(out, &checks)?;
        }
        Command::Report { n_min, n_max, format, out: path, solver } => {
            if n_min < 3 || n_max < n_min {
                return Err(Failure::Usage(format!("need 3 <= n-min <= n-max, got {n_min}..{n_max}")));
            }
            let rows = build_rows(n_min..=n_max, solver.exact_limit, solver.heuristic())?;
            let file = fs::File::create(&path)?;
            write_report(&rows, format, file)?;
            writeln!(out, "rows={} out={}", rows.len(), path.display())?;
        }
    }
    Ok(())
}

fn print_max_cut(out: &mut impl Write, n: u32, result: &MaxCutResult) -> Result<(), Failure> {
    let bound = crossing_lower_bound(n, result.value)?;
    writeln!(out, "maxcut={} lower_bound={bound} certificate={}", result.value, result.certified)?;
    writeln!(out, "method={}", result.method.as_str())?;
    let inside: Vec<String> =
        (0..result.cut.len()).filter(|&v| result.cut.is_inside(v)).map(|v| v.to_string()).collect();
    writeln!(out, "inside={}", inside.join(","))?;
    Ok(())
}

fn report_checks(out: &mut impl Write, checks: &[Check]) -> Result<(), Failure> {
    for check in checks {
        let status = if check.passed { "PASS" } else { "FAIL" };
        writeln!(out, "{status} {}: {}", check.name, check.detail)?;
    }
    let passed = checks.iter().filter(|c| c.passed).count();
    writeln!(out, "{passed}/{} checks passed", checks.len())?;
    match first_failure(checks) {
        Some(c) => Err(Failure::Verification(format!("first failing check: {}: {}", c.name, c.detail))),
        None => Ok(()),
    }
}
