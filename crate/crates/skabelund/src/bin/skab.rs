//! `skab` — CLI over the Skabelund two-point semigroup and order-bound
//! library. All results go to stdout (JSON unless stated otherwise),
//! diagnostics to stderr. Exit status: 0 ok, 1 domain error, 2 usage.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use skabelund::bound::{default_horizon, BoundEngine};
use skabelund::report::{self, ExportFormat, SweepConfig};
use skabelund::{
    decompose, figure_points, in_semigroup, nu_p, nu_pinf, rr_dim, CurveParams, Decomposition,
    DivisorSpec, Error, NumericalSemigroup, TauTable,
};

#[derive(Parser)]
#[command(
    name = "skab",
    version,
    about = "Two-point AG code bounds on the Skabelund curve"
)]
struct Cli {
    /// Curve exponent s (q0 = 2^s, q = 2*q0^2)
    #[arg(long, global = true, default_value_t = 1)]
    s: i64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Derived curve parameters as JSON
    Params,
    /// Weierstrass semigroup at P∞: generators, conductor, genus, gaps
    Semigroup {
        /// json, or text (one gap per line)
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Evaluate tau(i) with its decomposition
    Tau {
        #[arg(long, allow_hyphen_values = true)]
        i: i64,
    },
    /// Invert tau: the unique i with tau(i) = j
    TauInv {
        #[arg(long, allow_hyphen_values = true)]
        j: i64,
    },
    /// Two-point semigroup membership of (i, j)
    Member {
        #[arg(long, allow_hyphen_values = true)]
        i: i64,
        #[arg(long, allow_hyphen_values = true)]
        j: i64,
    },
    /// Riemann-Roch dimension of L(aP + bP∞)
    Dim(DivisorArgs),
    /// The order-bound step counts nu_P and nu_Pinf at (a, b)
    Nu(DivisorArgs),
    /// Order bound, Goppa bound and dimensions for aP + bP∞
    Bound {
        #[command(flatten)]
        divisor: DivisorArgs,
        /// Truncate the sequence horizon (only shortening is allowed;
        /// larger values are clamped to the default 4g-1-deg)
        #[arg(long)]
        horizon: Option<i64>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Best one-point code of dual dimension k
    Onepoint {
        #[arg(long)]
        k: i64,
    },
    /// Sweep all (a, b) and emit the d-vs-d1 comparison table
    Table {
        /// Keep rows with d - d1 >= this threshold
        #[arg(long, default_value_t = 10)]
        min_delta: i64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Worker threads (falls back to SKAB_JOBS, then rayon default)
        #[arg(long)]
        jobs: Option<usize>,
        /// Degree cap a+b (clamped to 4g-1)
        #[arg(long)]
        max_degree: Option<i64>,
    },
    /// Two-point semigroup points (i, j) within |i|, |j| < window*period
    Figure {
        #[arg(long, default_value_t = 2)]
        window: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct DivisorArgs {
    #[arg(long)]
    a: i64,
    #[arg(long)]
    b: i64,
}

impl DivisorArgs {
    fn spec(&self) -> DivisorSpec {
        DivisorSpec::new(self.a, self.b)
    }
}

#[derive(Serialize)]
struct TauOutput {
    i: i64,
    tau: i64,
    decomposition: Decomposition,
}

#[derive(Serialize)]
struct TauInvOutput {
    j: i64,
    i: i64,
    decomposition: Decomposition,
}

#[derive(Serialize)]
struct MemberOutput {
    i: i64,
    j: i64,
    member: bool,
}

#[derive(Serialize)]
struct DimOutput {
    a: i64,
    b: i64,
    dim: i64,
}

#[derive(Serialize)]
struct NuOutput {
    a: i64,
    b: i64,
    nu_p: i64,
    nu_pinf: i64,
}

#[derive(Serialize)]
struct SemigroupOutput {
    generators: Vec<i64>,
    conductor: i64,
    genus: i64,
    gaps: Vec<i64>,
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string(value).expect("serialization cannot fail")
    );
}

fn run(cli: Cli) -> skabelund::Result<()> {
    let params = CurveParams::new(cli.s)?;
    match cli.command {
        Command::Params => {
            print_json(&params);
        }
        Command::Semigroup { format } => {
            let sg = NumericalSemigroup::from_generators(&params.semigroup_generators)?;
            match format {
                Format::Text => {
                    println!("generators: {:?}", sg.generators());
                    println!("conductor: {}", sg.conductor());
                    println!("genus: {}", sg.genus());
                    for gap in sg.gaps() {
                        println!("{gap}");
                    }
                }
                _ => print_json(&SemigroupOutput {
                    generators: sg.generators().to_vec(),
                    conductor: sg.conductor(),
                    genus: sg.genus(),
                    gaps: sg.gaps().to_vec(),
                }),
            }
        }
        Command::Tau { i } => {
            let tt = TauTable::new(params);
            print_json(&TauOutput {
                i,
                tau: tt.tau(i),
                decomposition: decompose(tt.params(), i),
            });
        }
        Command::TauInv { j } => {
            let tt = TauTable::new(params);
            let i = tt.tau_inv(j);
            print_json(&TauInvOutput {
                j,
                i,
                decomposition: decompose(tt.params(), i),
            });
        }
        Command::Member { i, j } => {
            let tt = TauTable::new(params);
            print_json(&MemberOutput {
                i,
                j,
                member: in_semigroup(&tt, i, j),
            });
        }
        Command::Dim(args) => {
            let tt = TauTable::new(params);
            let dim = rr_dim(&tt, args.spec())?;
            print_json(&DimOutput {
                a: args.a,
                b: args.b,
                dim,
            });
        }
        Command::Nu(args) => {
            let tt = TauTable::new(params);
            print_json(&NuOutput {
                a: args.a,
                b: args.b,
                nu_p: nu_p(&tt, args.spec()),
                nu_pinf: nu_pinf(&tt, args.spec()),
            });
        }
        Command::Bound {
            divisor,
            horizon,
            format,
        } => {
            let tt = TauTable::new(params);
            let engine = BoundEngine::new(&tt);
            // only shorten: a longer horizon cannot change the bound
            let effective = horizon.map(|h| h.min(default_horizon(&tt, divisor.spec())));
            let report = engine.report(divisor.spec(), effective)?;
            match format {
                Format::Text => {
                    println!("a: {}", report.a);
                    println!("b: {}", report.b);
                    println!("degree: {}", report.degree);
                    println!("rr_dimension: {}", report.rr_dimension);
                    println!("dual_dimension: {}", report.dual_dimension);
                    println!("goppa_dual: {}", report.goppa_dual);
                    println!("order_bound: {}", report.order_bound);
                    println!("horizon: {}", report.horizon);
                }
                _ => print_json(&report),
            }
        }
        Command::Onepoint { k } => {
            let tt = TauTable::new(params);
            let engine = BoundEngine::new(&tt);
            print_json(&engine.best_one_point(k)?);
        }
        Command::Table {
            min_delta,
            out,
            format,
            jobs,
            max_degree,
        } => {
            let mut cfg = SweepConfig::new(cli.s);
            cfg.delta_threshold = min_delta;
            cfg.max_degree = max_degree;
            cfg.workers =
                jobs.or_else(|| std::env::var("SKAB_JOBS").ok().and_then(|v| v.parse().ok()));
            let result = report::sweep(&cfg)?;
            for v in &result.dominance_violations {
                eprintln!(
                    "dominance violation: k={} two-point d={} below one-point d1={}",
                    v.k, v.d, v.d1
                );
            }
            let fmt = match format {
                Format::Json => ExportFormat::Json,
                _ => ExportFormat::Csv,
            };
            report::export(&result.rows, fmt, out.as_deref())?;
        }
        Command::Figure { window, out } => {
            let tt = TauTable::new(params);
            let pts = figure_points(&tt, window)?;
            let mut buf = Vec::new();
            writeln!(buf, "i,j").expect("writing to a Vec cannot fail");
            for (i, j) in pts {
                writeln!(buf, "{i},{j}").expect("writing to a Vec cannot fail");
            }
            match out {
                Some(path) => {
                    std::fs::write(&path, buf).map_err(|e| Error::io(path, e))?;
                }
                None => {
                    std::io::stdout()
                        .write_all(&buf)
                        .map_err(|e| Error::io("<stdout>", e))?;
                }
            }
        }
    }
    Ok(())
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
