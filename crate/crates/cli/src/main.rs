//! Command-line surface: enumeration, map application, statistics,
//! distribution export, region enumeration and the verification suite.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on input
//! errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use shizeta_core::geometry::{default_box, enumerate_regions, region_report, verify_region_bijection};
use shizeta_core::labelled::{
    enumerate_diagonal_a, enumerate_diagonal_c, enumerate_vertical_a, enumerate_vertical_c,
    pf_to_vertical_a, pf_to_vertical_c, vertical_a_to_pf, vertical_c_to_pf, DiagonalWord,
    DiagonallyLabelledPathA, DiagonallyLabelledPathC, ParkingFunctionA, ParkingFunctionC,
    VerticallyLabelledPathA, VerticallyLabelledPathC,
};
use shizeta_core::paths::{ballot_area, enumerate_b, enumerate_d, enumerate_l};
use shizeta_core::stats::{
    area_a, area_prime_a, area_prime_c, dinv_a, dinv_c, dinv_prime_a, dinv_prime_c,
    qt_distribution, QtDistribution,
};
use shizeta_core::verify;
use shizeta_core::zeta::{
    sweep, zeta_a, zeta_c, zeta_labelled_a, zeta_labelled_c, zeta_labelled_c_invert_with,
    InverseTable,
};
use shizeta_core::{BallotPath, DyckPath, LatticePath, RootSystem, SignedPermutation};

#[derive(Parser)]
#[command(name = "shizeta", about = "Type C zeta map combinatorics", version)]
struct Cli {
    /// Worker threads for exhaustive sweeps (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PathType {
    A,
    C,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    /// Square lattice paths L(n,n)
    Lattice,
    /// Dyck paths
    Dyck,
    /// Ballot paths
    Ballot,
    /// Vertically labelled Dyck paths (classical parking functions)
    VerticalA,
    /// Vertically labelled lattice paths (type C parking functions)
    VerticalC,
    /// Diagonally labelled Dyck paths
    DiagonalA,
    /// Diagonally labelled ballot paths
    DiagonalC,
}

#[derive(Subcommand)]
enum Command {
    /// List a family of combinatorial objects, one per line
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        kind: Family,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Apply the zeta map to a path
    Zeta {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        path: String,
        #[arg(long = "type", value_enum, default_value = "c")]
        path_type: PathType,
    },
    /// Apply the labelled zeta map to a vertically labelled path
    ZetaLabelled {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        path: Option<String>,
        #[arg(long)]
        labels: Option<String>,
        /// Type C parking function as comma-separated values (alternative input)
        #[arg(long)]
        pf: Option<String>,
        #[arg(long = "type", value_enum, default_value = "c")]
        path_type: PathType,
    },
    /// Apply the sweep map to a square lattice path
    Sweep {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        path: String,
    },
    /// Invert the type C zeta map on a ballot path (with --labels: the
    /// labelled map on a diagonally labelled ballot path)
    Invert {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        path: String,
        #[arg(long)]
        labels: Option<String>,
    },
    /// Report statistics of one object
    Stats {
        #[arg(long, value_enum)]
        kind: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        path: Option<String>,
        #[arg(long)]
        labels: Option<String>,
        /// Parking function input (vertical kinds only)
        #[arg(long)]
        pf: Option<String>,
    },
    /// Joint statistic distribution over a labelled family:
    /// (dinv', dinv) for vertical kinds, (area', area) for diagonal kinds
    Distribution {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        kind: Family,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Enumerate Shi-arrangement regions with their combinatorial data
    Regions {
        #[arg(long)]
        n: usize,
        #[arg(long = "type", value_enum, default_value = "c")]
        path_type: PathType,
        /// Multiplier applied to the default bounding box
        #[arg(long, default_value = "1")]
        box_scale: i64,
    },
    /// Run verification checks; exits 1 on failure
    Verify {
        /// One of: all, examples, zeta-bijection, labelled-transport,
        /// sweep-eq, valley, dyck, geometry, distribution, counts, oracle
        #[arg(long, default_value = "all")]
        check: String,
        /// Bound for the sweep (defaults to the per-check acceptance bound)
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value = "1")]
        box_scale: i64,
    },
}

fn input_err(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {}", msg);
    ExitCode::from(2)
}

fn table_dir() -> Option<PathBuf> {
    std::env::var_os("SHIZETA_TABLE_DIR").map(PathBuf::from)
}

fn check_n(n: Option<usize>, actual: usize) -> Result<(), String> {
    match n {
        Some(n) if n != actual => Err(format!("--n {} does not match the input size {}", n, actual)),
        _ => Ok(()),
    }
}

fn parse_vertical_c(path: &str, labels: &str) -> Result<VerticallyLabelledPathC, String> {
    let p = LatticePath::parse(path).map_err(|e| e.to_string())?;
    let s = SignedPermutation::parse(labels).map_err(|e| e.to_string())?;
    VerticallyLabelledPathC::new(p, s).map_err(|e| e.to_string())
}

fn parse_vertical_a(path: &str, labels: &str) -> Result<VerticallyLabelledPathA, String> {
    let p = DyckPath::parse(path).map_err(|e| e.to_string())?;
    let s = SignedPermutation::parse(labels).map_err(|e| e.to_string())?;
    VerticallyLabelledPathA::new(p, s).map_err(|e| e.to_string())
}

fn parse_diagonal_c(path: &str, labels: &str) -> Result<DiagonallyLabelledPathC, String> {
    let p = BallotPath::parse(path).map_err(|e| e.to_string())?;
    let w = DiagonalWord::parse(labels).map_err(|e| e.to_string())?;
    DiagonallyLabelledPathC::new(p, w).map_err(|e| e.to_string())
}

fn parse_diagonal_a(path: &str, labels: &str) -> Result<DiagonallyLabelledPathA, String> {
    let p = DyckPath::parse(path).map_err(|e| e.to_string())?;
    let s = SignedPermutation::parse(labels).map_err(|e| e.to_string())?;
    DiagonallyLabelledPathA::new(p, s).map_err(|e| e.to_string())
}

fn emit_distribution(dist: &QtDistribution, format: Format) {
    match format {
        Format::Csv => print!("{}", dist.to_csv()),
        Format::Json => {
            let rows: Vec<serde_json::Value> = dist
                .counts()
                .iter()
                .map(|(&(q, t), &c)| serde_json::json!({"q": q, "t": t, "count": c}))
                .collect();
            println!("{}", serde_json::to_string_pretty(&rows).unwrap());
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Enumerate { n, kind, format } => {
            let lines: Vec<String> = match kind {
                Family::Lattice => enumerate_l(n).iter().map(|p| p.to_string()).collect(),
                Family::Dyck => enumerate_d(n).iter().map(|p| p.to_string()).collect(),
                Family::Ballot => enumerate_b(n).iter().map(|p| p.to_string()).collect(),
                Family::VerticalA => enumerate_vertical_a(n)
                    .iter()
                    .map(|v| format!("{} {}", v.path(), v.labels()))
                    .collect(),
                Family::VerticalC => enumerate_vertical_c(n)
                    .iter()
                    .map(|v| format!("{} {}", v.path(), v.labels()))
                    .collect(),
                Family::DiagonalA => enumerate_diagonal_a(n)
                    .iter()
                    .map(|d| format!("{} {}", d.path(), d.labels()))
                    .collect(),
                Family::DiagonalC => enumerate_diagonal_c(n)
                    .iter()
                    .map(|d| format!("{} {}", d.path(), d.word()))
                    .collect(),
            };
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&lines).unwrap()),
                Format::Csv => {
                    for line in lines {
                        println!("{}", line);
                    }
                }
            }
        }
        Command::Zeta { n, path, path_type } => match path_type {
            PathType::C => {
                let p = LatticePath::parse(&path).map_err(|e| e.to_string())?;
                check_n(n, p.square_size().ok_or("path is not in L(n,n)")?)?;
                println!("{}", zeta_c(&p).map_err(|e| e.to_string())?);
            }
            PathType::A => {
                let p = DyckPath::parse(&path).map_err(|e| e.to_string())?;
                check_n(n, p.n())?;
                println!("{}", zeta_a(&p));
            }
        },
        Command::ZetaLabelled { n, path, labels, pf, path_type } => {
            let inputs = match (&path, &labels, &pf) {
                (Some(p), Some(l), None) => (p.clone(), l.clone()),
                (None, None, Some(pf)) => {
                    let v = match path_type {
                        PathType::C => {
                            let f = ParkingFunctionC::parse(pf).map_err(|e| e.to_string())?;
                            let v = pf_to_vertical_c(&f);
                            (v.path().to_string(), v.labels().to_string())
                        }
                        PathType::A => {
                            let f = ParkingFunctionA::parse(pf).map_err(|e| e.to_string())?;
                            let v = pf_to_vertical_a(&f);
                            (v.path().to_string(), v.labels().to_string())
                        }
                    };
                    v
                }
                _ => return Err("provide either --path with --labels, or --pf".into()),
            };
            match path_type {
                PathType::C => {
                    let v = parse_vertical_c(&inputs.0, &inputs.1)?;
                    check_n(n, v.n())?;
                    let d = zeta_labelled_c(&v);
                    println!("{} {}", d.path(), d.word());
                }
                PathType::A => {
                    let v = parse_vertical_a(&inputs.0, &inputs.1)?;
                    check_n(n, v.path().n())?;
                    let d = zeta_labelled_a(&v);
                    println!("{} {}", d.path(), d.labels());
                }
            }
        }
        Command::Sweep { n, path } => {
            let p = LatticePath::parse(&path).map_err(|e| e.to_string())?;
            check_n(n, p.square_size().ok_or("path is not in L(n,n)")?)?;
            println!("{}", sweep(&p).map_err(|e| e.to_string())?);
        }
        Command::Invert { n, path, labels } => {
            let beta = BallotPath::parse(&path).map_err(|e| e.to_string())?;
            check_n(n, beta.n())?;
            let table = InverseTable::load_or_build(beta.n(), table_dir().as_deref())
                .map_err(|e| e.to_string())?;
            match labels {
                None => println!("{}", table.invert(&beta).map_err(|e| e.to_string())?),
                Some(labels) => {
                    let d = parse_diagonal_c(&path, &labels)?;
                    let v = zeta_labelled_c_invert_with(&table, &d).map_err(|e| e.to_string())?;
                    println!("{} {}", v.path(), v.labels());
                }
            }
        }
        Command::Stats { kind, n, path, labels, pf } => match kind {
            Family::VerticalC => {
                let v = match (&path, &labels, &pf) {
                    (Some(p), Some(l), None) => parse_vertical_c(p, l)?,
                    (None, None, Some(f)) => {
                        pf_to_vertical_c(&ParkingFunctionC::parse(f).map_err(|e| e.to_string())?)
                    }
                    _ => return Err("provide either --path with --labels, or --pf".into()),
                };
                check_n(n, v.n())?;
                println!(
                    "dinv={} dinv'={} pf={}",
                    dinv_c(v.path()).map_err(|e| e.to_string())?,
                    dinv_prime_c(&v),
                    vertical_c_to_pf(&v)
                        .values()
                        .iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                );
            }
            Family::VerticalA => {
                let v = match (&path, &labels, &pf) {
                    (Some(p), Some(l), None) => parse_vertical_a(p, l)?,
                    (None, None, Some(f)) => {
                        pf_to_vertical_a(&ParkingFunctionA::parse(f).map_err(|e| e.to_string())?)
                    }
                    _ => return Err("provide either --path with --labels, or --pf".into()),
                };
                check_n(n, v.path().n())?;
                println!(
                    "dinv={} dinv'={} pf={}",
                    dinv_a(v.path()),
                    dinv_prime_a(&v),
                    vertical_a_to_pf(&v)
                        .values()
                        .iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                );
            }
            Family::DiagonalC => {
                let (p, l) = match (&path, &labels) {
                    (Some(p), Some(l)) => (p, l),
                    _ => return Err("diagonal statistics need --path and --labels".into()),
                };
                let d = parse_diagonal_c(p, l)?;
                check_n(n, d.n())?;
                println!("area={} area'={}", ballot_area(d.path()), area_prime_c(&d));
            }
            Family::DiagonalA => {
                let (p, l) = match (&path, &labels) {
                    (Some(p), Some(l)) => (p, l),
                    _ => return Err("diagonal statistics need --path and --labels".into()),
                };
                let d = parse_diagonal_a(p, l)?;
                check_n(n, d.path().n())?;
                println!("area={} area'={}", area_a(d.path()), area_prime_a(&d));
            }
            Family::Ballot => {
                let p = path.as_deref().ok_or("ballot statistics need --path")?;
                let b = BallotPath::parse(p).map_err(|e| e.to_string())?;
                check_n(n, b.n())?;
                println!("area={}", ballot_area(&b));
            }
            Family::Dyck => {
                let p = path.as_deref().ok_or("Dyck statistics need --path")?;
                let d = DyckPath::parse(p).map_err(|e| e.to_string())?;
                check_n(n, d.n())?;
                println!("area={} dinv={}", area_a(&d), dinv_a(&d));
            }
            Family::Lattice => {
                let p = path.as_deref().ok_or("lattice statistics need --path")?;
                let p = LatticePath::parse(p).map_err(|e| e.to_string())?;
                check_n(n, p.square_size().ok_or("path is not in L(n,n)")?)?;
                println!("dinv={}", dinv_c(&p).map_err(|e| e.to_string())?);
            }
        },
        Command::Distribution { n, kind, format } => {
            let dist = match kind {
                Family::VerticalC => qt_distribution(
                    enumerate_vertical_c(n)
                        .iter()
                        .map(|v| (dinv_prime_c(v) as i64, dinv_c(v.path()).unwrap() as i64)),
                ),
                Family::VerticalA => qt_distribution(
                    enumerate_vertical_a(n)
                        .iter()
                        .map(|v| (dinv_prime_a(v) as i64, dinv_a(v.path()) as i64)),
                ),
                Family::DiagonalC => qt_distribution(
                    enumerate_diagonal_c(n)
                        .iter()
                        .map(|d| (area_prime_c(d) as i64, ballot_area(d.path()) as i64)),
                ),
                Family::DiagonalA => qt_distribution(
                    enumerate_diagonal_a(n)
                        .iter()
                        .map(|d| (area_prime_a(d) as i64, area_a(d.path()) as i64)),
                ),
                _ => return Err("distributions are defined for the labelled families".into()),
            };
            emit_distribution(&dist, format);
        }
        Command::Regions { n, path_type, box_scale } => {
            if box_scale < 1 {
                return Err("--box-scale must be at least 1".into());
            }
            let system = match path_type {
                PathType::C => RootSystem::type_c(n),
                PathType::A => RootSystem::type_a(n),
            };
            let m = default_box(n) * box_scale;
            let reports: Vec<_> = enumerate_regions(&system, m)
                .iter()
                .map(|r| region_report(&system, r, m).map_err(|e| e.to_string()))
                .collect::<Result<_, _>>()?;
            println!("{}", serde_json::to_string_pretty(&reports).unwrap());
        }
        Command::Verify { check, n, box_scale } => {
            let checks = run_checks(&check, n, box_scale)?;
            let mut failed = false;
            for c in &checks {
                println!("{}: {}", c.name, if c.pass { "pass" } else { "FAIL" });
                for d in &c.details {
                    println!("  {}", d);
                }
                failed |= !c.pass;
            }
            if failed {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_checks(name: &str, n: Option<usize>, box_scale: i64) -> Result<Vec<verify::Check>, String> {
    let checks = match name {
        "all" => verify::run_all(),
        "examples" => vec![verify::check_examples()],
        "zeta-bijection" => vec![verify::check_zeta_bijection(n.unwrap_or(6))],
        "labelled-transport" => vec![verify::check_labelled_transport(n.unwrap_or(4))],
        "sweep-eq" | "sweep-equivalence" => vec![verify::check_sweep_equivalence(n.unwrap_or(6))],
        "valley" | "valley-characterization" => {
            vec![verify::check_valley_characterization_all(n.unwrap_or(4))]
        }
        "dyck" | "dyck-compatibility" => {
            vec![verify::check_dyck_compatibility(n.unwrap_or(6), n.unwrap_or(5).min(5))]
        }
        "geometry" => match n {
            None => vec![verify::check_geometry(box_scale)],
            Some(n) => {
                // single-rank run against the combinatorial encoding
                let mut out = Vec::new();
                for system in [RootSystem::type_c(n), RootSystem::type_a(n)] {
                    if let Ok(report) =
                        verify_region_bijection(&system, default_box(n) * box_scale)
                    {
                        out.push(verify::Check {
                            name: if system.kind() == shizeta_core::RootSystemKind::C {
                                "geometry-c"
                            } else {
                                "geometry-a"
                            },
                            pass: report.pass(),
                            details: report.mismatches,
                        });
                    }
                }
                if out.is_empty() {
                    return Err(format!("rank {} exceeds the geometry bounds", n));
                }
                out
            }
        },
        "distribution" => vec![verify::check_distribution_identity(n.unwrap_or(4))],
        "counts" => {
            let n = n.unwrap_or(4);
            let mut details = Vec::new();
            let got = enumerate_vertical_c(n).len();
            let want = (2 * n + 1).pow(n as u32);
            if got != want {
                details.push(format!("n={}: {} != {}", n, got, want));
            } else {
                println!("{} = {}", got, want);
            }
            vec![verify::Check { name: "counts", pass: details.is_empty(), details }]
        }
        "oracle" | "oracle-crosschecks" => vec![verify::check_oracle_crosschecks(n.unwrap_or(5))],
        other => return Err(format!("unknown check {:?}", other)),
    };
    Ok(checks)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global().is_err() {
            return input_err("could not configure the worker pool");
        }
    }
    match run(cli) {
        Ok(code) => code,
        Err(msg) => input_err(msg),
    }
}
