mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use poisson_kit::algebra::{parse_polynomial, rat, Context};
use poisson_kit::centralizer::{
    centralizer_dimension, delta_phi_kernel_rank, gr_containment_failures, gr_weight_sweep, sl2_centralizer_dimension,
    sl2_equation_sweep, CentralizerConfig, DEFAULT_MAX_AMBIENT,
};
use poisson_kit::invariants::{char_coeff, char_coeff_via_charpoly, involutivity_check};
use poisson_kit::leafrank::{max_leaf_dimension, rank_at_points, sampled_rank, Space, DEFAULT_WEYL_CAP};
use poisson_kit::poisson::{bracket, jacobi_generator_sweep, Structure};
use poisson_kit::quantum::checks::{
    det_centrality, limit_generator_pairs, limit_random_pairs, sigma_commutation, QuantumCheck,
};
use poisson_kit::quantum::{MinorConvention, QuantumMatrixRing};
use poisson_kit::Error;

use report::{Check, RunReport};

#[derive(Parser, Debug)]
#[command(name = "poisson-kit", version, about = "Exact Poisson-bracket and centralizer computations on matrix coordinate rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(clap::Args, Debug)]
struct Global {
    /// Matrix size.
    #[arg(long, global = true, default_value_t = 2)]
    n: usize,
    /// Write a JSON report to this path.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Run past the default size caps.
    #[arg(long, global = true)]
    force: bool,
    #[arg(long, global = true)]
    max_degree: Option<u32>,
    #[arg(long, global = true, default_value_t = 200)]
    samples: usize,
    #[arg(long, global = true, default_value = "semiclassical")]
    structure: Structure,
    /// Record wall time in the JSON report.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Bracket of two polynomials.
    Bracket { f: String, g: String },
    /// Run an invariant suite.
    Verify { suite: Suite },
    /// Per-degree centralizer of the trace.
    Centralizer {
        /// Include kernel vectors in the report.
        #[arg(long)]
        basis: bool,
    },
    /// Checks in the quantum matrix algebra.
    Quantum {
        suite: QuantumSuite,
        #[arg(long, value_enum, default_value_t = Convention::Standard)]
        convention: Convention,
    },
    /// Maximum exact rank of the bracket matrix at sampled points.
    Rank {
        #[arg(long, default_value = "sl")]
        space: Space,
        /// Evaluate at the zero matrix instead of sampling.
        #[arg(long)]
        at_zero: bool,
    },
    /// Leaf dimensions over pairs of permutations.
    Weyl,
    /// Characteristic-polynomial coefficients.
    Charcoeff { i: Option<usize> },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    Jacobi,
    Involutive,
    Limit,
    Sl2,
    GrWeight,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum QuantumSuite {
    Commute,
    Limit,
    DetCentral,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Convention {
    Standard,
    AsPrinted,
}

impl From<Convention> for MinorConvention {
    fn from(c: Convention) -> Self {
        match c {
            Convention::Standard => MinorConvention::Standard,
            Convention::AsPrinted => MinorConvention::AsPrinted,
        }
    }
}

enum Failure {
    BadArgs(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceLimit(msg) => Failure::Cap(msg),
            other => Failure::BadArgs(other.to_string()),
        }
    }
}

impl From<poisson_kit::algebra::AlgebraError> for Failure {
    fn from(e: poisson_kit::algebra::AlgebraError) -> Self {
        Failure::BadArgs(e.to_string())
    }
}

type Outcome = Result<RunReport, Failure>;

fn cap(g: &Global, limit: usize, what: &str) -> Result<(), Failure> {
    if g.n == 0 {
        return Err(Failure::BadArgs("--n must be at least 1".into()));
    }
    if g.n > limit && !g.force {
        return Err(Failure::Cap(format!("{what} is capped at n <= {limit}; pass --force to run n = {}", g.n)));
    }
    Ok(())
}

fn from_quantum(c: QuantumCheck) -> Check {
    Check::new(c.name, c.pass, c.detail)
}

fn cmd_bracket(g: &Global, f: &str, h: &str) -> Outcome {
    if g.n == 0 || (g.structure == Structure::Gr && g.n < 2) {
        return Err(Failure::BadArgs(format!("{} bracket needs a larger --n", g.structure)));
    }
    let table = g.structure.table(g.n)?;
    let ctx = Context::matrix(g.n);
    let value = bracket(&parse_polynomial(f, ctx)?, &parse_polynomial(h, ctx)?, &table)?;
    println!("{value}");
    let mut r = RunReport::new("bracket");
    r.param("n", g.n).param("structure", g.structure).param("f", f).param("g", h);
    r.check(Check::new("bracket", true, value.to_string()));
    Ok(r)
}

fn cmd_verify(g: &Global, suite: Suite) -> Outcome {
    let mut r = RunReport::new(format!("verify {}", suite.to_possible_value().expect("named").get_name()));
    r.param("n", g.n);
    match suite {
        Suite::Jacobi => {
            cap(g, 4, "verify jacobi")?;
            let table = g.structure.table(g.n)?;
            r.param("structure", g.structure);
            let (count, failures) = jacobi_generator_sweep(&table);
            for ((a, b, c), d) in &failures {
                r.check(Check::new(format!("jacobi ({a},{b},{c})"), false, d.to_string()));
            }
            r.check(Check::new(
                "generator triples",
                failures.is_empty(),
                format!("{count} triples, {} nonzero cyclic sums", failures.len()),
            ));
        }
        Suite::Involutive => {
            cap(g, 4, "verify involutive")?;
            let table = g.structure.table(g.n)?;
            r.param("structure", g.structure);
            let rep = involutivity_check(g.n, &table)?;
            for p in rep.pairs {
                r.check(Check::new(format!("{{c_{}, c_{}}}", p.i, p.j), p.zero, p.value));
            }
        }
        Suite::Limit => {
            cap(g, 3, "verify limit")?;
            let ring = QuantumMatrixRing::new(g.n);
            r.param("samples", g.samples);
            r.seed = Some(g.seed);
            let gens = limit_generator_pairs(&ring);
            let random = limit_random_pairs(&ring, g.samples, g.seed);
            summarize(&mut r, "generator pairs", gens);
            summarize(&mut r, "random word pairs", random);
        }
        Suite::Sl2 => {
            let top = g.max_degree.unwrap_or(6);
            r.params.remove("n");
            r.param("max_degree", top);
            let eqs = sl2_equation_sweep(3);
            let detail = match eqs.failures.first() {
                Some(f) => f.clone(),
                None => format!("{} cases with exponents <= 3", eqs.cases),
            };
            r.check(Check::new("closed forms for {a + d, .}", eqs.pass, detail));
            for d in 0..=top {
                let s = sl2_centralizer_dimension(d);
                r.check(Check::new(
                    format!("centralizer of tr, degree <= {d}"),
                    s.pass,
                    format!("dim {} (expected {}, basis {})", s.nullspace_dim, s.expected_dim, s.basis_size),
                ));
            }
        }
        Suite::GrWeight => {
            cap(g, 3, "verify gr-weight")?;
            if g.n < 2 {
                return Err(Failure::BadArgs("the graded structure needs n >= 2".into()));
            }
            let top = g.max_degree.unwrap_or(4);
            r.param("max_degree", top);
            let rep = gr_weight_sweep(g.n, top)?;
            let detail = match rep.failures.first() {
                Some(m) => format!("fails at {m}"),
                None => format!("{} monomials", rep.monomials_checked),
            };
            r.check(Check::new("{x[1,1], m}_gr = c(m) x[1,1] m", rep.pass, detail));
        }
    }
    r.print_checks();
    Ok(r)
}

/// One check per failure plus a summary line.
fn summarize(r: &mut RunReport, label: &str, checks: Vec<QuantumCheck>) {
    let total = checks.len();
    let bad: Vec<QuantumCheck> = checks.into_iter().filter(|c| !c.pass).collect();
    let passed = total - bad.len();
    let ok = bad.is_empty();
    r.extend(bad.into_iter().map(from_quantum));
    r.check(Check::new(label, ok, format!("{passed}/{total} agree")));
}

fn memory_cap() -> Result<Option<u64>, Failure> {
    match std::env::var("POISSON_KIT_CAP_MB") {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Failure::BadArgs(format!("POISSON_KIT_CAP_MB must be an integer, got '{v}'"))),
        Err(_) => Ok(None),
    }
}

fn cmd_centralizer(g: &Global, with_basis: bool) -> Outcome {
    cap(g, 3, "centralizer")?;
    let top = g.max_degree.unwrap_or(4);
    if g.n == 3 && top > 5 && !g.force {
        return Err(Failure::Cap(format!("centralizer at n = 3 is capped at degree 5; pass --force for degree {top}")));
    }
    let table = g.structure.table(g.n)?;
    let cfg = CentralizerConfig {
        max_ambient: DEFAULT_MAX_AMBIENT,
        memory_cap_mb: memory_cap()?,
        force: g.force,
        with_basis,
    };
    let mut r = RunReport::new("centralizer");
    r.param("n", g.n).param("max_degree", top).param("structure", g.structure);
    println!("degree  ambient  nullspace  expected  span  pass");
    for d in 0..=top {
        let rep = centralizer_dimension(g.n, d, &table, &cfg)?;
        println!(
            "{d:>6}  {:>7}  {:>9}  {:>8}  {:>4}  {}",
            rep.ambient_dim,
            rep.nullspace_dim,
            rep.expected_dim,
            if rep.span.pass { "ok" } else { "bad" },
            if rep.pass { "PASS" } else { "FAIL" }
        );
        let mut detail = format!(
            "ambient {}, nullspace {}, expected {}, c-monomials independent {} and centralizing {}",
            rep.ambient_dim,
            rep.nullspace_dim,
            rep.expected_dim,
            rep.span.rank == rep.span.count,
            rep.span.all_centralize
        );
        if let Some(basis) = &rep.basis {
            detail.push_str(&format!("; kernel [{}]", basis.join(", ")));
        }
        r.check(Check::new(format!("degree {d}"), rep.pass, detail));
        if g.n >= 2 && g.structure == Structure::Semiclassical {
            let outside = gr_containment_failures(&rep)?;
            r.check(Check::new(
                format!("degree {d} kernel in C^gr(x[1,1])"),
                outside.is_empty(),
                outside.first().cloned().unwrap_or_else(|| format!("{} vectors", rep.kernel.len())),
            ));
            let rank = delta_phi_kernel_rank(&rep)?;
            r.check(Check::new(
                format!("degree {d} delta.phi injective on kernel"),
                rank == rep.nullspace_dim,
                format!("rank {rank} of {}", rep.nullspace_dim),
            ));
        }
    }
    for c in r.checks.iter().filter(|c| !c.pass) {
        println!("FAIL {}: {}", c.name, c.detail);
    }
    if r.pass {
        println!("verified for n = {}, degrees <= {top} (finite range only)", g.n);
    } else {
        println!("not verified for n = {}, degrees <= {top}", g.n);
    }
    Ok(r)
}

fn cmd_quantum(g: &Global, suite: QuantumSuite, convention: Convention) -> Outcome {
    cap(g, 3, "quantum")?;
    let ring = QuantumMatrixRing::new(g.n);
    let name = suite.to_possible_value().expect("named").get_name().to_string();
    let mut r = RunReport::new(format!("quantum {name}"));
    r.param("n", g.n);
    match suite {
        QuantumSuite::Commute => {
            r.param("convention", convention.to_possible_value().expect("named").get_name());
            r.extend(sigma_commutation(&ring, convention.into()).into_iter().map(from_quantum));
        }
        QuantumSuite::Limit => r.extend(limit_generator_pairs(&ring).into_iter().map(from_quantum)),
        QuantumSuite::DetCentral => r.extend(det_centrality(&ring).into_iter().map(from_quantum)),
    }
    r.print_checks();
    Ok(r)
}

fn cmd_rank(g: &Global, space: Space, at_zero: bool) -> Outcome {
    cap(g, 4, "rank")?;
    let table = g.structure.table(g.n)?;
    let mut r = RunReport::new("rank");
    r.param("n", g.n).param("space", space).param("structure", g.structure);
    let rep = if at_zero {
        if space != Space::M {
            return Err(Failure::BadArgs(format!("the zero matrix is not a point of {space}_{}", g.n)));
        }
        r.param("point", "zero");
        rank_at_points(space, &table, &[vec![rat(0, 1); g.n * g.n]])?
    } else {
        r.param("samples", g.samples);
        r.seed = Some(g.seed);
        sampled_rank(space, &table, g.samples, g.seed)?
    };
    r.check(Check::new(
        format!("max rank on {space}_{}", g.n),
        rep.pass,
        format!(
            "max {} (first at sample {}), generic {}, claimed {}, all ranks even {}",
            rep.max_rank, rep.first_max_at, rep.expected_rank, rep.claimed_rank, rep.all_even
        ),
    ));
    r.print_checks();
    Ok(r)
}

fn cmd_weyl(g: &Global) -> Outcome {
    let limit = if g.force { usize::MAX } else { DEFAULT_WEYL_CAP };
    let rep = max_leaf_dimension(g.n, limit)?;
    let mut r = RunReport::new("weyl");
    r.param("n", g.n);
    r.check(Check::new(
        "max leaf dimension",
        rep.max_leaf_dimension == rep.expected && rep.attained_at_longest,
        format!(
            "{} over {} pairs, expected {}, attained at (w0, w0) {}, {} maximizers",
            rep.max_leaf_dimension, rep.pairs, rep.expected, rep.attained_at_longest, rep.maximizers
        ),
    ));
    r.check(Check::new(
        "length bound",
        rep.bound_holds && rep.bound_max == rep.expected,
        format!("holds on every pair, maximum {}", rep.bound_max),
    ));
    r.print_checks();
    Ok(r)
}

fn cmd_charcoeff(g: &Global, i: Option<usize>) -> Outcome {
    cap(g, 4, "charcoeff")?;
    let indices: Vec<usize> = match i {
        Some(i) => vec![i],
        None => (1..=g.n).collect(),
    };
    let mut r = RunReport::new("charcoeff");
    r.param("n", g.n);
    for i in indices {
        let c = char_coeff(g.n, i)?;
        let oracle = char_coeff_via_charpoly(g.n, i)?;
        println!("c_{i} = {c}");
        r.check(Check::new(format!("c_{i}"), c == oracle, c.to_string()));
    }
    Ok(r)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let g = &cli.global;
    let outcome = match &cli.command {
        Command::Bracket { f, g: h } => cmd_bracket(g, f, h),
        Command::Verify { suite } => cmd_verify(g, *suite),
        Command::Centralizer { basis } => cmd_centralizer(g, *basis),
        Command::Quantum { suite, convention } => cmd_quantum(g, *suite, *convention),
        Command::Rank { space, at_zero } => cmd_rank(g, *space, *at_zero),
        Command::Weyl => cmd_weyl(g),
        Command::Charcoeff { i } => cmd_charcoeff(g, *i),
    };
    match outcome {
        Ok(mut report) => {
            report.finish(started, g.timing);
            if let Some(path) = &g.json {
                if let Err(e) = report.write_json(path) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if report.pass {
                ExitCode::SUCCESS
            } else {
                println!("verification failed");
                ExitCode::from(1)
            }
        }
        Err(Failure::BadArgs(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("resource cap: {msg}");
            ExitCode::from(3)
        }
    }
}
