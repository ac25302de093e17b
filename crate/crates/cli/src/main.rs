mod commands;
mod figure;
mod input;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use convex_means::golden::{search_records, threshold_search, SearchConfig};
use convex_means::json::AnyPolygon;
use convex_means::{Error, LpError, Scalar, F64, Q5};
use input::{parse_scalar, Backend, PolygonInput};
use serde_json::Value;

/// Symmetrization means, Minkowski asymmetry and optimal containment of
/// planar convex polygons.
#[derive(Parser, Debug)]
#[command(name = "convex-means", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The four means of C and -C with their optimality flags
    Means(PolygonInput),
    /// Minkowski asymmetry, center and contact points
    Asymmetry(PolygonInput),
    /// The three equivalent conditions for a Minkowski centered body
    Check(PolygonInput),
    /// Random search for large asymmetry among bodies with parallel
    /// supports at p and -p; JSON lines on stdout, summary on stderr
    Search {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        iters: usize,
        #[arg(long, default_value_t = 5)]
        min_vertices: usize,
        #[arg(long, default_value_t = 12)]
        max_vertices: usize,
        /// Emit every sample, not only those satisfying the condition
        #[arg(long)]
        all: bool,
        /// Hill-climbing runs from perturbed golden houses
        #[arg(long, default_value_t = 0)]
        hill_climbs: usize,
    },
    /// Mean inequalities for random positive definite matrices
    Matrix {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
    /// Optimal containments of the 3D chain
    #[command(name = "3d")]
    ThreeD {
        #[arg(long, value_enum, default_value = "q5")]
        backend: Backend,
    },
    /// Write an SVG figure
    Fig {
        #[command(subcommand)]
        which: Figure,
        /// Output file, stdout when absent
        #[arg(short, long, global = true)]
        output: Option<String>,
        /// Comma-separated stroke colors, one per layer
        #[arg(long, global = true, value_delimiter = ',')]
        colors: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
enum Figure {
    /// The golden house, -φ times it, and the supports x = ±1
    Gh,
    /// The four symmetrizations of the golden house
    GhSymm,
    /// A hexagon of the golden-house family with its -s·C overlay
    Family { tau: String },
}

#[derive(Debug)]
enum Failure {
    Core(Error),
    Io(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Core(Error::Json(_) | Error::Scalar(_)) => 2,
            Failure::Core(Error::Lp(_) | Error::Inconsistent(_)) => 4,
            Failure::Core(_) => 3,
            Failure::Io(_) | Failure::Check(_) => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Core(Error::NotCentered) => format!("{}; pass --recenter", Error::NotCentered),
            Failure::Core(Error::Lp(LpError::IterationLimit(n))) => {
                format!("linear program did not converge after {n} pivots")
            }
            Failure::Core(e) => e.to_string(),
            Failure::Io(m) | Failure::Check(m) => m.clone(),
        }
    }
}

fn with_polygon(
    input: &PolygonInput,
    exact: fn(&convex_means::ConvexPolygon<Q5>) -> Result<Value, Error>,
    float: fn(&convex_means::ConvexPolygon<F64>) -> Result<Value, Error>,
) -> Result<Value, Error> {
    match input.load()? {
        AnyPolygon::Q5(p) => exact(&p),
        AnyPolygon::F64(p) => float(&p),
    }
}

fn print_json(v: &Value) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(v).expect("values serialize");
    println!("{text}");
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Means(i) => print_json(&with_polygon(&i, commands::means, commands::means)?),
        Command::Asymmetry(i) => print_json(&with_polygon(&i, commands::asymmetry, commands::asymmetry)?),
        Command::Check(i) => print_json(&with_polygon(&i, commands::check, commands::check)?),
        Command::Search {
            seed,
            iters,
            min_vertices,
            max_vertices,
            all,
            hill_climbs,
        } => {
            if min_vertices < 3 || min_vertices > max_vertices {
                return Err(Error::OutOfRange(format!("vertex range {min_vertices}..={max_vertices}")).into());
            }
            let cfg = SearchConfig {
                seed,
                iterations: iters,
                vertex_range: min_vertices..=max_vertices,
                filter: !all,
                hill_climbs,
            };
            let records = search_records(&cfg)?;
            // hill climbs only; the sample above is not drawn again
            let climbs = threshold_search(&SearchConfig {
                iterations: 0,
                ..cfg.clone()
            })?;
            let stdout = std::io::stdout();
            let mut out = stdout.lock();
            for r in records.iter().chain(&climbs.hill_best) {
                let line = serde_json::to_string(r).expect("records serialize");
                writeln!(out, "{line}").map_err(|e| Failure::Io(e.to_string()))?;
            }
            let best = records
                .iter()
                .max_by(|a, b| a.s.total_cmp(&b.s).then(b.index.cmp(&a.index)));
            let summary = serde_json::json!({
                "evaluated": iters,
                "accepted": records.len(),
                "max_s": best.map(|b| b.s),
                "best_index": best.map(|b| b.index),
                "hill_climbs": hill_climbs,
                "hill_max": climbs.hill_max,
                "phi": F64::phi().0,
            });
            eprintln!("{summary}");
            Ok(())
        }
        Command::Matrix { n, seed, trials } => {
            let v = commands::matrix(n, seed, trials)?;
            print_json(&v)?;
            if v["pass"] == Value::Bool(true) {
                Ok(())
            } else {
                Err(Failure::Check("matrix inequalities violated".into()))
            }
        }
        Command::ThreeD { backend } => {
            let lines = match backend {
                Backend::Q5 => commands::three_d::<Q5>()?,
                Backend::F64 => commands::three_d::<F64>()?,
            };
            for l in lines {
                println!("{l}");
            }
            Ok(())
        }
        Command::Fig { which, output, colors } => {
            let spec = match which {
                Figure::Gh => figure::golden_house_figure(&colors)?,
                Figure::GhSymm => figure::symmetrizations_figure(&colors)?,
                Figure::Family { tau } => figure::family_figure(parse_scalar(&tau)?.to_f64(), &colors)?,
            };
            let svg = spec.to_svg();
            match output {
                Some(path) => std::fs::write(&path, svg).map_err(|e| Failure::Io(format!("cannot write {path}: {e}"))),
                None => {
                    print!("{svg}");
                    Ok(())
                }
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
