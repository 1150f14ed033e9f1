use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;
use trinom::region::{self, RegionTag};
use trinom::{bohl, oracle, recurrence, Complex, Tolerances, Trinomial};
use trinom_cli::raster::{self, RasterSpec};
use trinom_cli::{config, literal};

/// Exit codes: 0 stable / success, 1 unstable, 2 marginal verdict,
/// 64 usage error, 74 I/O error.
#[derive(Parser)]
#[command(
    name = "trinom",
    version,
    about = "Schur stability, disc root counts and stability-region tools for trinomials a*z^n + b*z^m + c"
)]
struct Cli {
    /// Tolerance config file (key=value: tau_int, tau_tri, tau_res);
    /// defaults to $TRINOM_CONFIG when unset.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Override the integer-detection tolerance tau_int.
    #[arg(long, global = true, value_name = "EPS")]
    tau_int: Option<f64>,
    /// Override the triangle-classification tolerance tau_tri.
    #[arg(long, global = true, value_name = "EPS")]
    tau_tri: Option<f64>,
    /// Override the oracle residual tolerance tau_res.
    #[arg(long, global = true, value_name = "EPS")]
    tau_res: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

fn parse_complex_arg(s: &str) -> Result<Complex, String> {
    literal::parse_complex(s)
}

#[derive(Args)]
struct TrinomialArgs {
    /// Degree n.
    #[arg(short)]
    n: u32,
    /// Inner exponent m, 0 < m < n.
    #[arg(short)]
    m: u32,
    /// Coefficient b: `re,im` or `polar:MOD@ARG` (ARG accepts k*pi terms).
    #[arg(short, value_parser = parse_complex_arg, allow_hyphen_values = true)]
    b: Complex,
    /// Coefficient c.
    #[arg(short, value_parser = parse_complex_arg, allow_hyphen_values = true)]
    c: Complex,
    /// Leading coefficient a.
    #[arg(short, default_value = "1,0", value_parser = parse_complex_arg, allow_hyphen_values = true)]
    a: Complex,
}

impl TrinomialArgs {
    fn build(&self) -> Result<Trinomial, Failure> {
        Trinomial::new(self.n, self.m, self.a, self.b, self.c)
            .map_err(|e| Failure::Usage(e.to_string()))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide Schur stability; prints a JSON verdict with its certificate.
    Check(TrinomialArgs),
    /// Count roots in the open disc of radius r by interval counting.
    Count {
        #[command(flatten)]
        trinomial: TrinomialArgs,
        /// Disc radius.
        #[arg(short, long)]
        radius: f64,
        /// Also compute the root-oracle count and an agreement flag.
        #[arg(long)]
        oracle: bool,
    },
    /// Rasterize the projected stability region to a PPM image and a CSV grid.
    Region {
        /// Degree n.
        #[arg(short)]
        n: u32,
        /// Inner exponent m, 0 < m < n.
        #[arg(short)]
        m: u32,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        umin: f64,
        #[arg(long, default_value_t = 1.75, allow_hyphen_values = true)]
        umax: f64,
        #[arg(long, default_value_t = -1.25, allow_hyphen_values = true)]
        vmin: f64,
        #[arg(long, default_value_t = 1.25, allow_hyphen_values = true)]
        vmax: f64,
        #[arg(long, default_value_t = 400)]
        width: u32,
        #[arg(long, default_value_t = 400)]
        height: u32,
        /// Output image path (plain PPM, P3).
        #[arg(long, default_value = "region.ppm")]
        ppm: PathBuf,
        /// Output grid path (u,v,tag,two_omega,t_bound).
        #[arg(long, default_value = "region.csv")]
        csv: PathBuf,
    },
    /// Print the (x, y, s, t) parametrization and the applicable |t| bound.
    Params(TrinomialArgs),
    /// Rebuild b and c from parametrization coordinates.
    Compose {
        /// Degree n.
        #[arg(short)]
        n: u32,
        /// Inner exponent m, 0 < m < n (coprime with n).
        #[arg(short)]
        m: u32,
        #[arg(short, allow_hyphen_values = true)]
        x: f64,
        #[arg(short, allow_hyphen_values = true)]
        y: f64,
        #[arg(short, allow_hyphen_values = true)]
        s: f64,
        #[arg(short, allow_hyphen_values = true)]
        t: f64,
    },
    /// Simulate the recurrence X(t) = -b*X(t-(n-m)) - c*X(t-n).
    Simulate {
        #[command(flatten)]
        trinomial: TrinomialArgs,
        /// Steps to simulate; defaults from the dominant root modulus.
        #[arg(long)]
        horizon: Option<usize>,
        /// Seed for the random initial string.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Trajectory CSV path.
        #[arg(long, default_value = "trajectory.csv")]
        out: PathBuf,
    },
}

enum Failure {
    Usage(String),
    Io(String),
}

impl From<trinom::Error> for Failure {
    fn from(e: trinom::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return 64;
        }
    };
    let overrides = config::Overrides {
        tau_int: cli.tau_int,
        tau_tri: cli.tau_tri,
        tau_res: cli.tau_res,
    };
    let tol = match config::load(cli.config.as_deref(), overrides) {
        Ok(tol) => tol,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 64;
        }
    };
    match dispatch(cli.command, tol) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            64
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            74
        }
    }
}

fn dispatch(command: Command, tol: Tolerances) -> Result<i32, Failure> {
    match command {
        Command::Check(args) => {
            let t = args.build()?;
            let verdict = trinom::is_schur_stable(&t, tol)?;
            println!(
                "{}",
                serde_json::to_string(&verdict).expect("verdict serializes")
            );
            Ok(if verdict.marginal {
                2
            } else if verdict.stable {
                0
            } else {
                1
            })
        }
        Command::Count {
            trinomial,
            radius,
            oracle: with_oracle,
        } => {
            let t = trinomial.build()?;
            let nt = trinom::normalize(&t)?;
            // The exponent reduction z -> z^l maps the disc of radius r to
            // the disc of radius r^l and multiplies the count by l.
            let ell = nt.reduction();
            let counted = bohl::count_roots_in_disc(&nt, radius.powi(ell as i32), tol)?;
            let count = counted.count * ell as u64;
            let mut payload = json!({ "count": count, "marginal": counted.marginal });
            if with_oracle {
                let roots = oracle::find_roots(&t)?;
                let tally = oracle::count_in_disc(&roots, radius)?;
                payload["oracle_count"] = tally.inside.into();
                payload["oracle_margin_count"] = tally.margin.into();
                payload["agreement"] = (tally.inside == count).into();
            }
            println!("{payload}");
            Ok(0)
        }
        Command::Region {
            n,
            m,
            umin,
            umax,
            vmin,
            vmax,
            width,
            height,
            ppm,
            csv,
        } => {
            let spec = RasterSpec {
                n,
                m,
                umin,
                umax,
                vmin,
                vmax,
                width,
                height,
            };
            let raster = raster::render(spec, tol).map_err(Failure::Usage)?;
            let io_err = |e: std::io::Error, path: &PathBuf| {
                Failure::Io(format!("{}: {e}", path.display()))
            };
            let file = File::create(&ppm).map_err(|e| io_err(e, &ppm))?;
            raster::write_ppm(BufWriter::new(file), &raster).map_err(|e| io_err(e, &ppm))?;
            let file = File::create(&csv).map_err(|e| io_err(e, &csv))?;
            raster::write_csv(BufWriter::new(file), &raster).map_err(|e| io_err(e, &csv))?;
            let tally = |tag: raster::CellTag| {
                raster.cells.iter().filter(|cell| cell.tag == tag).count()
            };
            println!(
                "{}",
                json!({
                    "ppm": ppm.display().to_string(),
                    "csv": csv.display().to_string(),
                    "width": width,
                    "height": height,
                    "cells": {
                        "gamma": tally(raster::CellTag::Gamma),
                        "delta": tally(raster::CellTag::Delta),
                        "cohn": tally(raster::CellTag::Cohn),
                        "outside": tally(raster::CellTag::Outside),
                        "marginal": tally(raster::CellTag::Marginal),
                    }
                })
            );
            Ok(0)
        }
        Command::Params(args) => {
            let t = args.build()?;
            let nt = trinom::normalize(&t)?;
            let params = region::decompose_parameters(&nt);
            let class = region::classify_region(&region::project(&nt), tol);
            let bound = region::t_bound(&class, nt.n());
            let within = match (class.tag, bound) {
                (RegionTag::Gamma, Some(b)) => params.t.abs() <= b,
                (RegionTag::Delta, Some(b)) => params.t.abs() < b,
                _ => false,
            };
            println!(
                "{}",
                json!({
                    "x": params.x,
                    "y": params.y,
                    "s": params.s,
                    "t": params.t,
                    "t_bound": bound,
                    "within_bound": within,
                    "region": serde_json::to_value(class.tag).expect("tag serializes"),
                    "marginal": class.marginal,
                })
            );
            Ok(0)
        }
        Command::Compose { n, m, x, y, s, t } => {
            let nt = region::compose_parameters(x, y, s, t, n, m)?;
            println!(
                "{}",
                json!({
                    "n": n,
                    "m": m,
                    "b": { "re": nt.b().re, "im": nt.b().im },
                    "c": { "re": nt.c().re, "im": nt.c().im },
                })
            );
            Ok(0)
        }
        Command::Simulate {
            trinomial,
            horizon,
            seed,
            out,
        } => {
            let t = trinomial.build()?;
            if t.a.norm() == 0.0 {
                return Err(Failure::Usage(
                    "the recurrence needs a nonzero leading coefficient".into(),
                ));
            }
            let verdict = trinom::is_schur_stable(&t, tol)?;
            // Monic scaling only: reducing the exponents would change the
            // delays of the recurrence.
            let b = t.b / t.a;
            let c = t.c / t.a;
            let rho = if t.n <= oracle::SUITE_DEGREE_CAP {
                oracle::find_roots(&t)
                    .ok()
                    .filter(|rs| rs.converged)
                    .map(|rs| rs.max_modulus())
            } else {
                None
            };
            let horizon = horizon.unwrap_or_else(|| recurrence::default_horizon(t.n, rho));
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let initial = (0..t.n)
                .map(|_| {
                    Complex::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
                })
                .collect();
            let spec = recurrence::RecurrenceSpec {
                n: t.n,
                m: t.m,
                b,
                c,
                initial,
                horizon,
            };
            let trajectory = recurrence::simulate(&spec)?;
            let file = File::create(&out)
                .map_err(|e| Failure::Io(format!("{}: {e}", out.display())))?;
            recurrence::write_csv(BufWriter::new(file), &trajectory)
                .map_err(|e| Failure::Io(format!("{}: {e}", out.display())))?;
            let rate = recurrence::empirical_decay_rate(&trajectory, t.n).ok();
            let agrees = if verdict.stable {
                !trajectory.divergent && rate.is_some_and(|r| r < 0.0)
            } else {
                trajectory.divergent || rate.is_none_or(|r| r >= 0.0)
            };
            println!(
                "{}",
                json!({
                    "csv": out.display().to_string(),
                    "horizon": horizon,
                    "divergent": trajectory.divergent,
                    "decay_rate": rate,
                    "stable_verdict": verdict.stable,
                    "agrees_with_verdict": agrees,
                })
            );
            Ok(0)
        }
    }
}
