mod report;
mod verify;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use bigrass_core::bdet::{
    bdet_condense_with_stats, bdet_definition_with_limit, bdet_via_deformation_with_limit,
    permanent_q_with_limit, MAX_LEIBNIZ_N, MAX_PERMANENT_N,
};
use bigrass_core::bpoly::{
    bn_product, bn_with_limit, max_beta, reading_polynomial_with_limit, MAX_DETERMINANT_N,
    MAX_READING_N,
};
use bigrass_core::perm::bigrassmannians_below;
use bigrass_core::vandermonde::{tournament_sum, vandermonde_product, MAX_PRODUCT_N, MAX_SUM_N};
use bigrass_core::{BetaMethod, Deformation, Error, Permutation, PolyMatrix, Polynomial, Route};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use report::Report;
use verify::{Options, Suite};

#[derive(Parser)]
#[command(
    name = "bigrass",
    version,
    about = "Exact bigrassmannian polynomials, determinants and their cross-checks"
)]
struct Cli {
    /// Emit a JSON envelope {command, inputs, results, ok} instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Signed bigrassmannian polynomial B_n(q) by one or all routes.
    Bn {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = BnMethod::All)]
        method: BnMethod,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Length and beta of a permutation in one-line notation.
    Beta {
        #[arg(long)]
        perm: String,
    },
    /// bdet of a matrix read from a file.
    Bdet {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, value_enum, default_value_t = BdetMethod::All)]
        method: BdetMethod,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Sum of q^beta over S_n, as a permanent.
    Reading {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Vandermonde product and its tournament expansion.
    Expand {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        weighted: bool,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Run cross-verification suites.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Matrix size for the random-matrix suites.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = bigrass_core::bdet::DEFAULT_SEED)]
        seed: u64,
        /// Upper end of the n range for every suite.
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Time one route on the all-ones matrix after checking it against another.
    Bench {
        #[arg(long, value_enum)]
        method: BenchOp,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_n: Option<usize>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BnMethod {
    Sum,
    Product,
    Recursion,
    Det,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BdetMethod {
    Def,
    Deform,
    Condense,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BenchOp {
    BdetDef,
    BdetCondense,
    Permanent,
}

enum CliError {
    Usage(String),
    Library(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Library(e)
    }
}

/// The bound to enforce: `default`, or `--max-n` with a warning if it raises it.
fn bound(what: &str, default: usize, max_n: Option<usize>) -> usize {
    match max_n {
        Some(m) if m > default => {
            eprintln!(
                "warning: raising the {what} bound from {default} to {m}; expect long runtimes"
            );
            m
        }
        Some(m) => m,
        None => default,
    }
}

fn poly_json(p: &Polynomial) -> serde_json::Value {
    json!({
        "poly": p.to_string(),
        "terms": p.len(),
        "degree": p.q_degree().map(|d| d.to_string()),
    })
}

fn run_bn(n: usize, method: BnMethod, max_n: Option<usize>) -> Result<Report, CliError> {
    let mut rep = Report::new("bn");
    rep.input("n", n)
        .input("method", method.to_possible_value().unwrap().get_name());
    let routes: Vec<Route> = match method {
        BnMethod::Sum => vec![Route::SignedSum],
        BnMethod::Product => vec![Route::Product],
        BnMethod::Recursion => vec![Route::Recursion],
        BnMethod::Det => vec![Route::Determinant],
        BnMethod::All => Route::ALL.to_vec(),
    };
    let mut results = Vec::new();
    for route in routes {
        let limit = bound(&format!("bn {route}"), route.default_limit(), max_n);
        results.push(bn_with_limit(n, route, limit)?);
    }
    let single = results.len() == 1;
    for r in &results {
        if single {
            rep.line(r.poly.to_string());
        } else {
            rep.line(format!("{:<10} {}", format!("{}:", r.route), r.poly));
        }
        let mut v = poly_json(&r.poly);
        v["route"] = json!(r.route.to_string());
        rep.result(v);
    }
    if !single {
        if results.windows(2).any(|w| w[0].poly != w[1].poly) {
            rep.fail();
        }
        rep.verdict_line();
    }
    Ok(rep)
}

fn run_beta(perm: &str) -> Result<Report, CliError> {
    let w: Permutation = perm
        .parse()
        .map_err(|e: Error| CliError::Usage(e.to_string()))?;
    let mut rep = Report::new("beta");
    rep.input("perm", perm);
    let by_method: Vec<(BetaMethod, u64)> =
        BetaMethod::ALL.iter().map(|&m| (m, w.beta_by(m))).collect();
    let beta = w.beta();
    if by_method.iter().any(|&(_, b)| b != beta) {
        rep.fail();
    }
    rep.line(format!("l={} beta={}", w.length(), beta));
    let mut v = json!({
        "perm": w.to_string(),
        "length": w.length(),
        "beta": beta,
        "bigrassmannian": w.is_bigrassmannian(),
        "beta_by_method": by_method.iter().map(|(m, b)| json!({"method": format!("{m:?}"), "beta": b})).collect::<Vec<_>>(),
    });
    if w.n() <= bigrass_core::perm::MAX_ENUMERATION_N {
        let below = bigrassmannians_below(&w)?.len();
        if below as u64 != beta {
            rep.fail();
            rep.line(format!("bigrassmannians below: {below}, expected {beta}"));
        }
        v["bigrassmannians_below"] = json!(below);
    }
    if !rep.ok() {
        rep.verdict_line();
    }
    rep.result(v);
    Ok(rep)
}

fn run_bdet(path: &PathBuf, method: BdetMethod, max_n: Option<usize>) -> Result<Report, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let a: PolyMatrix = text.parse()?;
    let mut rep = Report::new("bdet");
    rep.input("matrix", path.display().to_string())
        .input("n", a.n())
        .input("method", method.to_possible_value().unwrap().get_name());
    let methods: Vec<BdetMethod> = match method {
        BdetMethod::All => vec![BdetMethod::Def, BdetMethod::Deform, BdetMethod::Condense],
        m => vec![m],
    };
    let mut values = Vec::new();
    for m in &methods {
        let (name, p) = match m {
            BdetMethod::Def => (
                "def",
                bdet_definition_with_limit(&a, bound("bdet def", MAX_LEIBNIZ_N, max_n))?,
            ),
            BdetMethod::Deform => (
                "deform",
                bdet_via_deformation_with_limit(&a, bound("bdet deform", MAX_LEIBNIZ_N, max_n))?,
            ),
            BdetMethod::Condense => {
                let limit = bound("bdet condense", MAX_DETERMINANT_N, max_n);
                if a.n() > limit {
                    return Err(Error::BoundExceeded {
                        operation: "bdet_condense",
                        n: a.n(),
                        max: limit,
                    }
                    .into());
                }
                ("condense", bdet_condense_with_stats(&a)?.0)
            }
            BdetMethod::All => unreachable!("expanded above"),
        };
        let mut v = poly_json(&p);
        v["method"] = json!(name);
        rep.result(v);
        values.push((name, p));
    }
    if values.len() == 1 {
        rep.line(values[0].1.to_string());
    } else {
        for (name, p) in &values {
            rep.line(format!("{:<9} {p}", format!("{name}:")));
        }
        if values.windows(2).any(|w| w[0].1 != w[1].1) {
            rep.fail();
        }
        rep.verdict_line();
    }
    Ok(rep)
}

fn run_reading(n: usize, max_n: Option<usize>) -> Result<Report, CliError> {
    let p = reading_polynomial_with_limit(n, bound("reading", MAX_READING_N, max_n))?;
    let mut rep = Report::new("reading");
    rep.input("n", n);
    rep.line(p.to_string());
    rep.result(poly_json(&p));
    Ok(rep)
}

fn run_expand(n: usize, weighted: bool, max_n: Option<usize>) -> Result<Report, CliError> {
    let mut rep = Report::new("expand");
    rep.input("n", n).input("weighted", weighted);
    let product_limit = bound("expand product", MAX_PRODUCT_N, max_n);
    if n > product_limit {
        return Err(Error::BoundExceeded {
            operation: "vandermonde_product",
            n,
            max: product_limit,
        }
        .into());
    }
    let product = vandermonde_product(n, weighted)?;
    rep.line(format!("product:     {product}"));
    rep.result(json!({"part": "product", "poly": product.to_string(), "terms": product.len()}));
    if n <= MAX_SUM_N {
        let e = tournament_sum(n, weighted)?;
        rep.line(format!("tournaments: {}", e.total));
        rep.line(format!(
            "transitive ({}): {}",
            e.transitive_count, e.transitive_part
        ));
        rep.line(format!("cyclic ({}): {}", e.cyclic_count, e.cyclic_part));
        for (part, p, count) in [
            ("tournaments", &e.total, e.transitive_count + e.cyclic_count),
            ("transitive", &e.transitive_part, e.transitive_count),
            ("cyclic", &e.cyclic_part, e.cyclic_count),
        ] {
            rep.result(json!({"part": part, "poly": p.to_string(), "terms": p.len(), "tournaments": count}));
        }
        if e.total != product {
            rep.fail();
        }
        rep.verdict_line();
    }
    Ok(rep)
}

fn run_verify(suite: Suite, opts: Options) -> Result<Report, CliError> {
    let mut rep = Report::new("verify");
    rep.input("suite", suite.name())
        .input("trials", opts.trials)
        .input("seed", opts.seed);
    if let Some(n) = opts.n {
        rep.input("n", n);
    }
    if let Some(m) = opts.max_n {
        rep.input("max_n", m);
        let default = if suite == Suite::All {
            Suite::Routes.default_max_n()
        } else {
            suite.default_max_n()
        };
        bound(&format!("verify {}", suite.name()), default, Some(m));
    }
    for c in verify::run(suite, &opts)? {
        if c.ok {
            rep.line(format!("PASS [{}] {}", c.suite.name(), c.name));
        } else {
            rep.fail();
            rep.line(format!(
                "FAIL [{}] {}: {}",
                c.suite.name(),
                c.name,
                c.detail
            ));
        }
        rep.result(
            json!({"suite": c.suite.name(), "check": c.name, "ok": c.ok, "detail": c.detail}),
        );
    }
    rep.verdict_line();
    Ok(rep)
}

fn run_bench(op: BenchOp, n: usize, max_n: Option<usize>) -> Result<Report, CliError> {
    let name = op.name();
    let mut rep = Report::new("bench");
    rep.input("method", name).input("n", n);
    let limit = match op {
        BenchOp::BdetDef => bound("bdet-def", MAX_LEIBNIZ_N, max_n),
        BenchOp::BdetCondense => bound("bdet-condense", MAX_DETERMINANT_N, max_n),
        BenchOp::Permanent => bound("permanent", MAX_PERMANENT_N, max_n),
    };
    if n > limit {
        return Err(Error::BoundExceeded {
            operation: name,
            n,
            max: limit,
        }
        .into());
    }
    let compute = |k: usize| -> Result<Polynomial, Error> {
        let ones = PolyMatrix::ones(k);
        match op {
            BenchOp::BdetDef => bdet_definition_with_limit(&ones, limit),
            BenchOp::BdetCondense => Ok(bdet_condense_with_stats(&ones)?.0),
            BenchOp::Permanent => permanent_q_with_limit(&ones.deform(Deformation::B), limit),
        }
    };
    // agreement with an independent route where both are cheap
    let k = n.min(6);
    let reference = match op {
        BenchOp::BdetDef | BenchOp::BdetCondense => bn_product(k)?,
        BenchOp::Permanent => reading_by_enumeration(k)?,
    };
    let agree = compute(k)? == reference;
    rep.line(format!(
        "route check at n={k}: {}",
        if agree { "agree" } else { "DISAGREE" }
    ));
    if !agree {
        rep.fail();
    }

    let start = Instant::now();
    let p = compute(n)?;
    let elapsed = start.elapsed();
    let degree = p
        .q_degree()
        .map(|d| d.to_string())
        .unwrap_or_else(|| "-".into());
    let expected_degree = max_beta(n);
    if degree != expected_degree.to_string() && n > 0 {
        rep.fail();
    }
    rep.line(format!(
        "{name} n={n}: {:.3}s, {} terms, degree {degree} (expected {expected_degree})",
        elapsed.as_secs_f64(),
        p.len()
    ));
    rep.result(json!({
        "method": name,
        "n": n,
        "seconds": elapsed.as_secs_f64(),
        "terms": p.len(),
        "degree": degree,
        "expected_degree": expected_degree,
        "route_check_n": k,
        "route_check": agree,
    }));
    rep.verdict_line();
    Ok(rep)
}

impl BenchOp {
    fn name(self) -> &'static str {
        match self {
            BenchOp::BdetDef => "bdet-def",
            BenchOp::BdetCondense => "bdet-condense",
            BenchOp::Permanent => "permanent",
        }
    }
}

fn reading_by_enumeration(n: usize) -> Result<Polynomial, Error> {
    let mut coeffs = vec![0u64; max_beta(n) + 1];
    for w in bigrass_core::perm::enumerate_sn(n)? {
        coeffs[w.beta() as usize] += 1;
    }
    Ok(Polynomial::from_q_coeffs(&coeffs))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Bn { n, method, max_n } => run_bn(n, method, max_n),
        Command::Beta { perm } => run_beta(&perm),
        Command::Bdet {
            matrix,
            method,
            max_n,
        } => run_bdet(&matrix, method, max_n),
        Command::Reading { n, max_n } => run_reading(n, max_n),
        Command::Expand { n, weighted, max_n } => run_expand(n, weighted, max_n),
        Command::Verify {
            suite,
            n,
            trials,
            seed,
            max_n,
        } => run_verify(
            suite,
            Options {
                n,
                max_n,
                trials,
                seed,
            },
        ),
        Command::Bench { method, n, max_n } => run_bench(method, n, max_n),
    };
    match outcome {
        Ok(rep) => {
            println!("{}", rep.render(cli.json));
            if rep.ok() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Library(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
