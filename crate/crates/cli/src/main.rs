mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use nalg::algebra::{check_fundamental_identity, check_skew};
use nalg::catalog::Catalog;
use nalg::functors::{
    build_invertible_example, build_l2, build_lie_semidirect, build_semisimple_leibniz, build_sl2,
    build_vn, dt_basic, u_n,
};
use nalg::ideals::{
    closure_probes, enumerate_semisimple_ideals, ideal_verdict, leibniz_kernel_2,
    leibniz_n_kernel_detail, quotient, sums_of,
};
use nalg::io::{
    algebra_from_json, algebra_to_json, parse_scalar, spec_from_json, subspace_to_value,
    witness_to_value, write_text,
};
use nalg::random::run_random;
use nalg::solvability::{derived_series, is_semisimple_leibniz, rad_k_of_un, radical_leibniz};
use nalg::verify::{run_suite, Status};
use nalg::{Error, Rational, RationalAlgebra};

use report::Report;

#[derive(Parser)]
#[command(
    name = "nalg",
    version,
    about = "Exact computations with Leibniz algebras and Leibniz n-algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output kind; commands that construct algebras default to `alg`.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Add per-check wall-clock seconds to reports.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Report,
    Alg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Recipe {
    Sl2,
    Vn,
    L2,
    Invertible,
    Bipartite,
    LieSemidirect,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Paper,
}

#[derive(Subcommand)]
enum Command {
    /// Check the fundamental identity (and report skew-symmetry).
    Check { file: PathBuf },
    /// Compute the Leibniz n-kernel.
    Kernel { file: PathBuf },
    /// Radical of a Leibniz algebra, and of its n-ary images.
    Radical {
        file: PathBuf,
        /// Arities of the images U_n to examine.
        #[arg(long, value_delimiter = ',')]
        n: Vec<usize>,
        /// Solvability orders; defaults to 2..=n.
        #[arg(long, value_delimiter = ',')]
        k: Vec<usize>,
    },
    /// Build the right-normed n-ary algebra of a Leibniz algebra.
    Un {
        file: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Build the basic Leibniz algebra on the (n−1)-fold tensor power.
    Dt { file: PathBuf },
    /// Build a catalog algebra.
    Build {
        recipe: Recipe,
        /// Bipartite spec file, for `bipartite`.
        input: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        alphas: Vec<String>,
        /// Highest weights of the modules, for `lie-semidirect`.
        #[arg(long, value_delimiter = ',')]
        weights: Vec<u32>,
    },
    /// List ideals: probe closures of an algebra file, or the full lattice of a bipartite spec.
    Ideals {
        file: Option<PathBuf>,
        #[arg(long)]
        spec: Option<PathBuf>,
    },
    /// Run the verification suite.
    Verify {
        #[arg(long, value_enum, default_value = "paper")]
        suite: Suite,
        /// Exact check ID or a substring of check names.
        #[arg(long)]
        filter: Option<String>,
    },
    /// Run the invariant battery on seeded random transforms of catalog algebras.
    Random {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 9)]
        dim: usize,
        #[arg(long, default_value_t = 10)]
        ops: usize,
    },
}

enum Output {
    Report(Report),
    Algebra(RationalAlgebra),
}

fn input_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse(_)
            | Error::Io(_)
            | Error::ArityMismatch { .. }
            | Error::DimensionMismatch { .. }
            | Error::Precondition(_)
            | Error::DisconnectedSpec
            | Error::SlotOutOfRange { .. }
    )
}

fn read_input(path: &Path, report: &mut Report) -> Result<String, Error> {
    let bytes = fs::read(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    report.input(path, &bytes);
    String::from_utf8(bytes).map_err(|_| Error::Parse(format!("{} is not UTF-8", path.display())))
}

fn load(path: &Path, report: &mut Report) -> Result<RationalAlgebra, Error> {
    algebra_from_json(&read_input(path, report)?)
}

fn summary(alg: &RationalAlgebra) -> Value {
    json!({
        "name": alg.name(),
        "arity": alg.arity(),
        "dim": alg.dim(),
        "products": alg.product_count(),
        "metadata": alg.metadata(),
    })
}

/// Pushes the identity result and returns whether it holds.
fn identity_result(alg: &RationalAlgebra, report: &mut Report) -> bool {
    let start = Instant::now();
    let r = check_fundamental_identity(alg);
    let status = if r.holds { Status::Pass } else { Status::Fail };
    report.push(
        "fundamental-identity",
        status,
        json!({ "algebra": summary(alg), "holds": r.holds }),
        r.witness.as_ref().map(witness_to_value),
    );
    report.time("fundamental-identity", start.elapsed());
    r.holds
}

fn cmd_check(file: &Path) -> Result<Output, Error> {
    let mut report = Report::new("check");
    let alg = load(file, &mut report)?;
    let holds = identity_result(&alg, &mut report);
    let skew = check_skew(&alg);
    report.pass(
        "skew",
        json!({
            "alternating": skew.holds,
            "counterexample": skew.witness.as_ref().map(witness_to_value),
        }),
    );
    if holds && alg.arity() == 2 {
        let k = leibniz_kernel_2(&alg)?;
        report.pass(
            "leibniz-kernel",
            json!({ "dim": k.dim(), "is_lie": k.is_zero() }),
        );
    }
    Ok(Output::Report(report))
}

fn cmd_kernel(file: &Path) -> Result<Output, Error> {
    let mut report = Report::new("kernel");
    let alg = load(file, &mut report)?;
    if !identity_result(&alg, &mut report) {
        return Ok(Output::Report(report));
    }
    let start = Instant::now();
    let detail = leibniz_n_kernel_detail(&alg)?;
    let q = quotient(&alg, &detail.kernel)?;
    let n_lie = check_skew(&q).holds;
    let mut data = json!({
        "dim": detail.kernel.dim(),
        "ambient_dim": alg.dim(),
        "generators_dim": detail.generators.dim(),
        "closure_grew": detail.closure_grew,
        "quotient_is_n_lie": n_lie,
        "kernel": subspace_to_value(&detail.kernel, alg.labels()),
    });
    let mut ok = n_lie;
    if alg.arity() == 2 {
        let squares = leibniz_kernel_2(&alg)? == detail.kernel;
        data["agrees_with_span_of_squares"] = json!(squares);
        ok &= squares;
    }
    let status = if ok { Status::Pass } else { Status::Fail };
    report.push("leibniz-n-kernel", status, data, None);
    report.time("leibniz-n-kernel", start.elapsed());
    Ok(Output::Report(report))
}

fn cmd_radical(file: &Path, ns: &[usize], ks: &[usize]) -> Result<Output, Error> {
    let mut report = Report::new("radical");
    let alg = load(file, &mut report)?;
    if alg.arity() != 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            found: alg.arity(),
        });
    }
    if !identity_result(&alg, &mut report) {
        return Ok(Output::Report(report));
    }
    let start = Instant::now();
    let rad = radical_leibniz(&alg)?;
    report.pass(
        "radical",
        json!({
            "dim": rad.dim(),
            "semisimple": is_semisimple_leibniz(&alg)?,
            "radical": subspace_to_value(&rad, alg.labels()),
        }),
    );
    report.time("radical", start.elapsed());
    for &n in ns {
        let orders: Vec<usize> = if ks.is_empty() {
            (2..=n).collect()
        } else {
            ks.to_vec()
        };
        let un = u_n(&alg, n)?;
        for k in orders {
            let id = format!("rad_{k}(U{n})");
            let start = Instant::now();
            match rad_k_of_un(&alg, n, k) {
                Ok(r) => {
                    let series = derived_series(&un, &r, k)?;
                    report.pass(
                        id.clone(),
                        json!({
                            "n": n,
                            "k": k,
                            "dim": r.dim(),
                            "ideal_of_un": true,
                            "series_dims": series.terms.iter().map(|t| t.dim()).collect::<Vec<_>>(),
                            "solvability_index": series.index,
                        }),
                    );
                }
                Err(e) if !input_error(&e) => {
                    report.push(
                        id.clone(),
                        Status::Fail,
                        json!({ "n": n, "k": k, "error": e.to_string() }),
                        None,
                    );
                }
                Err(e) => return Err(e),
            }
            report.time(id, start.elapsed());
        }
    }
    Ok(Output::Report(report))
}

fn cmd_build(
    recipe: Recipe,
    input: Option<&Path>,
    n: Option<usize>,
    alphas: &[String],
    weights: &[u32],
) -> Result<(Report, RationalAlgebra), Error> {
    let mut report = Report::new("build");
    let need = |what: &str| Error::Precondition(format!("this recipe needs {what}"));
    let alg = match recipe {
        Recipe::Sl2 => build_sl2(),
        Recipe::L2 => build_l2(),
        Recipe::Vn => build_vn(n.ok_or_else(|| need("--n"))?)?,
        Recipe::Invertible => {
            if alphas.is_empty() {
                return Err(need("--alphas"));
            }
            let a = alphas
                .iter()
                .map(|s| parse_scalar::<Rational>(s.trim()))
                .collect::<Result<Vec<_>, _>>()?;
            build_invertible_example(&a, n.ok_or_else(|| need("--n"))?)?
        }
        Recipe::Bipartite => {
            let path = input.ok_or_else(|| need("a spec file"))?;
            let spec = spec_from_json(&read_input(path, &mut report)?)?;
            build_semisimple_leibniz(&spec)?.0
        }
        Recipe::LieSemidirect => {
            if weights.is_empty() {
                return Err(need("--weights"));
            }
            build_lie_semidirect(weights)?.0
        }
    };
    identity_result(&alg, &mut report);
    Ok((report, alg))
}

fn cmd_ideals(file: Option<&Path>, spec: Option<&Path>) -> Result<Output, Error> {
    let mut report = Report::new("ideals");
    if let Some(path) = spec {
        let spec = spec_from_json(&read_input(path, &mut report)?)?;
        let (alg, _) = build_semisimple_leibniz::<Rational>(&spec)?;
        let ideals = enumerate_semisimple_ideals::<Rational>(&spec)?;
        report.pass(
            "semisimple-ideal-lattice",
            json!({
                "count": ideals.len(),
                "ideals": ideals.iter().map(|s| subspace_to_value(s, alg.labels())).collect::<Vec<_>>(),
            }),
        );
    }
    if let Some(path) = file {
        let alg = load(path, &mut report)?;
        let probes = closure_probes(&alg)?;
        let mut listed = Vec::new();
        for (probe, s) in &probes {
            let v = ideal_verdict(&alg, s)?;
            listed.push(json!({
                "probe": probe.iter().map(|i| i + 1).collect::<Vec<_>>(),
                "dim": s.dim(),
                "is_ideal": v.is_ideal,
                "subspace": subspace_to_value(s, alg.labels()),
            }));
        }
        let gens: Vec<_> = probes.into_iter().map(|(_, s)| s).collect();
        let lattice = sums_of(&gens, alg.dim())?;
        report.pass(
            "probe-ideals",
            json!({
                "closures": listed,
                "lattice_size": lattice.len(),
                "lattice_dims": lattice.iter().map(|s| s.dim()).collect::<Vec<_>>(),
            }),
        );
    }
    if file.is_none() && spec.is_none() {
        return Err(Error::Precondition("give an algebra file or --spec".into()));
    }
    Ok(Output::Report(report))
}

fn cmd_verify(filter: Option<&str>) -> Result<Output, Error> {
    let mut report = Report::new("verify --suite paper");
    let catalog = Catalog::standard()?;
    for o in run_suite(&catalog, filter) {
        report.push(
            o.id,
            o.status,
            json!({ "name": o.name, "result": o.data }),
            o.witness,
        );
        report.time(o.id, o.elapsed);
    }
    Ok(Output::Report(report))
}

fn cmd_random(seed: u64, dim: usize, ops: usize) -> Result<Output, Error> {
    let mut report = Report::new("random");
    let start = Instant::now();
    let run = run_random(seed, dim, ops)?;
    for (i, case) in run.cases.iter().enumerate() {
        let ok = case.invariants.iter().all(|v| v.holds);
        report.push(
            format!("case-{}", i + 1),
            if ok { Status::Pass } else { Status::Fail },
            serde_json::to_value(case).expect("plain data"),
            None,
        );
    }
    report.time("random", start.elapsed());
    Ok(Output::Report(report))
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let as_algebra = |report: Report, alg: RationalAlgebra| match cli.format {
        Some(Format::Report) => Output::Report(report),
        _ => Output::Algebra(alg),
    };
    if cli.format == Some(Format::Alg)
        && !matches!(
            cli.command,
            Command::Un { .. } | Command::Dt { .. } | Command::Build { .. }
        )
    {
        return Err(Error::Precondition(
            "--format alg applies only to un, dt and build".into(),
        ));
    }
    match &cli.command {
        Command::Check { file } => cmd_check(file),
        Command::Kernel { file } => cmd_kernel(file),
        Command::Radical { file, n, k } => cmd_radical(file, n, k),
        Command::Un { file, n } => {
            let mut report = Report::new("un");
            let alg = load(file, &mut report)?;
            let out = u_n(&alg, *n)?;
            report.pass("u_n", summary(&out));
            Ok(as_algebra(report, out))
        }
        Command::Dt { file } => {
            let mut report = Report::new("dt");
            let alg = load(file, &mut report)?;
            let out = dt_basic(&alg)?;
            report.pass("dt_basic", summary(&out));
            Ok(as_algebra(report, out))
        }
        Command::Build {
            recipe,
            input,
            n,
            alphas,
            weights,
        } => {
            let (report, alg) = cmd_build(*recipe, input.as_deref(), *n, alphas, weights)?;
            Ok(as_algebra(report, alg))
        }
        Command::Ideals { file, spec } => cmd_ideals(file.as_deref(), spec.as_deref()),
        Command::Verify { suite: _, filter } => cmd_verify(filter.as_deref()),
        Command::Random { seed, dim, ops } => cmd_random(*seed, *dim, *ops),
    }
}

fn configure_threads() -> Result<(), Error> {
    let Ok(v) = std::env::var("NALG_THREADS") else {
        return Ok(());
    };
    let n: usize = v.parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        Error::Parse(format!(
            "NALG_THREADS must be a positive integer, got {v:?}"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Error::Precondition(e.to_string()))
}

fn emit(cli: &Cli, text: &str) -> Result<(), Error> {
    match &cli.out {
        Some(path) => write_text(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|()| run(&cli));
    let (text, failed) = match result {
        Ok(Output::Report(r)) => {
            let failed = r.failed();
            (r.render(cli.timing), failed)
        }
        Ok(Output::Algebra(a)) => (algebra_to_json(&a), false),
        Err(e) => {
            eprintln!("nalg: {e}");
            return ExitCode::from(if input_error(&e) { 2 } else { 1 });
        }
    };
    if let Err(e) = emit(&cli, &text) {
        eprintln!("nalg: {e}");
        return ExitCode::from(2);
    }
    if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
