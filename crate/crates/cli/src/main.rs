//! Command-line interface: validate, generate, self-check, cohomology,
//! SDR/symplectic decisions, and isomorphism testing over the JSON
//! hypergraph interchange format.
//!
//! Exit codes: 0 success/YES, 1 NO-decision (sdr/symplectic/iso, or a
//! failed self-check), 2 malformed input or resource cap exceeded.

use std::collections::BTreeMap;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use hyperlinfty::cohomology::{self, Limits};
use hyperlinfty::isomorphism;
use hyperlinfty::linfty::LInftyAlgebra;
use hyperlinfty::mcalg::{algebra_dim_series, dim_series, MCAlgebra};
use hyperlinfty::symplectic::{self, NoReason, SdrOutcome, SymplecticDecision};
use hyperlinfty::{Error, Hypergraph};

const CONFIG_ENV: &str = "HYPERLINFTY_CONFIG";

#[derive(Parser)]
#[command(name = "hyperlinfty", version, about = "L∞-algebra invariants of finite simple hypergraphs")]
struct Cli {
    #[command(flatten)]
    overrides: ConfigOverrides,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ConfigOverrides {
    /// Largest cohomological degree to compute
    #[arg(long, global = true)]
    max_degree: Option<u32>,
    /// Refuse graded pieces with more monomials than this
    #[arg(long, global = true)]
    monomial_cap: Option<u64>,
    /// Largest vertex count accepted by the isomorphism search
    #[arg(long, global = true)]
    iso_vertex_cap: Option<u32>,
    /// Seed for randomized self-checks and generators
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Output format
    #[arg(long, global = true, value_enum)]
    output: Option<OutputMode>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
enum OutputMode {
    Text,
    Json,
}

/// Runtime configuration; defaults, then the file named by
/// `HYPERLINFTY_CONFIG`, then command-line flags.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
struct Config {
    max_degree: u32,
    monomial_cap: u64,
    iso_vertex_cap: u32,
    seed: u64,
    output: OutputMode,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_degree: 6,
            monomial_cap: 500_000,
            iso_vertex_cap: 12,
            seed: 0,
            output: OutputMode::Text,
        }
    }
}

impl Config {
    fn load(overrides: &ConfigOverrides) -> Result<Config, String> {
        let mut config = Config::default();
        if let Ok(path) = std::env::var(CONFIG_ENV) {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| format!("cannot read config {path}: {e}"))?;
            config = serde_json::from_str(&text)
                .map_err(|e| format!("invalid config {path}: {e}"))?;
        }
        if let Some(v) = overrides.max_degree {
            config.max_degree = v;
        }
        if let Some(v) = overrides.monomial_cap {
            config.monomial_cap = v;
        }
        if let Some(v) = overrides.iso_vertex_cap {
            config.iso_vertex_cap = v;
        }
        if let Some(v) = overrides.seed {
            config.seed = v;
        }
        if let Some(v) = overrides.output {
            config.output = v;
        }
        if config.monomial_cap == 0 || config.iso_vertex_cap == 0 {
            return Err("caps must be positive".into());
        }
        Ok(config)
    }

    fn limits(&self) -> Limits {
        Limits {
            monomial_cap: self.monomial_cap,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Parse a hypergraph and echo its canonical form
    Validate { input: String },
    /// Generate hypergraphs in the JSON interchange format
    #[command(subcommand)]
    Gen(GenCommand),
    /// Run structural self-checks (d² = 0, nilpotency, dimension counts)
    Check {
        input: String,
        /// Also dump the differential tables
        #[arg(long)]
        dump: bool,
        /// Random trials for the d² and derivation checks
        #[arg(long, default_value_t = 50)]
        trials: u32,
    },
    /// Betti numbers b_0..b_max
    Betti { input: String },
    /// Truncated Poincaré series (alias of betti with series framing)
    Poincare { input: String },
    /// Find a system of distinct representatives or a Hall violator
    Sdr { input: String },
    /// Decide whether L(G) admits a symplectic form
    Symplectic {
        input: String,
        /// Print the constructed form and its matrix
        #[arg(long)]
        emit_form: bool,
    },
    /// Test two hypergraphs for isomorphism
    Iso {
        input_a: String,
        input_b: String,
        /// Betti prefix depth used in fingerprints
        #[arg(long, default_value_t = 2)]
        depth: u32,
        /// Compare invariant fingerprints without searching
        #[arg(long)]
        fingerprint_only: bool,
    },
}

#[derive(Subcommand)]
enum GenCommand {
    /// All C(n, k) k-subsets as edges
    CompleteUniform {
        #[arg(short)]
        n: u32,
        #[arg(short)]
        k: u32,
    },
    /// Independent edges with per-size inclusion probabilities
    Random {
        #[arg(short)]
        n: u32,
        /// Repeatable `size=probability` pairs, e.g. --weight 2=0.3
        #[arg(long = "weight", value_parser = parse_weight)]
        weights: Vec<(u32, f64)>,
    },
    /// Disjoint union of two hypergraphs
    Union { input_a: String, input_b: String },
}

fn parse_weight(s: &str) -> Result<(u32, f64), String> {
    let (k, p) = s
        .split_once('=')
        .ok_or_else(|| format!("expected size=probability, got {s}"))?;
    Ok((
        k.trim().parse().map_err(|e| format!("bad size: {e}"))?,
        p.trim().parse().map_err(|e| format!("bad probability: {e}"))?,
    ))
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = Cli::parse();
    let config = match Config::load(&cli.overrides) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    match dispatch(cli.command, &config) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn read_hypergraph(input: &str) -> Result<Hypergraph, Error> {
    let text = if input == "-" {
        let mut buffer = String::new();
        std::io::stdin()
            .read_to_string(&mut buffer)
            .map_err(|e| Error::Json(e.to_string()))?;
        buffer
    } else {
        std::fs::read_to_string(input).map_err(|e| Error::Json(format!("{input}: {e}")))?
    };
    Hypergraph::from_json(&text)
}

#[derive(Serialize)]
struct BettiReport {
    betti: Vec<u64>,
    max_degree: u32,
    reduced_generators: usize,
    warnings: Vec<String>,
}

#[derive(Serialize)]
struct SdrReport {
    decision: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    assignment: Option<Vec<(Vec<u32>, u32)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    violator: Option<ViolatorReport>,
}

#[derive(Serialize)]
struct ViolatorReport {
    edges: Vec<Vec<u32>>,
    union: Vec<u32>,
    union_size: usize,
}

fn dispatch(command: Command, config: &Config) -> Result<i32, Error> {
    match command {
        Command::Validate { input } => {
            let g = read_hypergraph(&input)?;
            match config.output {
                OutputMode::Json => println!("{}", g.to_json()),
                OutputMode::Text => {
                    println!("{}", g.to_json());
                    let profile = g.profile();
                    println!(
                        "vertices: {}, edges: {}, sizes: {:?}",
                        g.n_vertices(),
                        g.edge_count(),
                        profile.counts_by_size
                    );
                }
            }
            Ok(0)
        }
        Command::Gen(gen) => {
            let g = match gen {
                GenCommand::CompleteUniform { n, k } => Hypergraph::complete_uniform(n, k)?,
                GenCommand::Random { n, weights } => {
                    let map: BTreeMap<u32, f64> = weights.into_iter().collect();
                    Hypergraph::random(n, &map, config.seed)?
                }
                GenCommand::Union { input_a, input_b } => {
                    let a = read_hypergraph(&input_a)?;
                    let b = read_hypergraph(&input_b)?;
                    a.disjoint_union(&b)
                }
            };
            println!("{}", g.to_json());
            Ok(0)
        }
        Command::Check { input, dump, trials } => run_check(&input, dump, trials, config),
        Command::Betti { input } | Command::Poincare { input } => {
            let g = read_hypergraph(&input)?;
            let report = betti_report(&g, config)?;
            match config.output {
                OutputMode::Json => println!("{}", serde_json::to_string(&report).expect("serializable")),
                OutputMode::Text => {
                    println!("degree  betti");
                    for (i, b) in report.betti.iter().enumerate() {
                        println!("{i:<7} {b}");
                    }
                    for w in &report.warnings {
                        eprintln!("warning: {w}");
                    }
                }
            }
            Ok(0)
        }
        Command::Sdr { input } => {
            let g = read_hypergraph(&input)?;
            match symplectic::find_sdr(&g) {
                SdrOutcome::Found(sdr) => {
                    let report = SdrReport {
                        decision: "sdr",
                        assignment: Some(sdr.pairs().to_vec()),
                        violator: None,
                    };
                    println!("{}", serde_json::to_string(&report).expect("serializable"));
                    Ok(0)
                }
                SdrOutcome::Violator(v) => {
                    let report = SdrReport {
                        decision: "hall_violator",
                        assignment: None,
                        violator: Some(ViolatorReport {
                            union: v.union.iter().copied().collect(),
                            union_size: v.union_size(),
                            edges: v.edges,
                        }),
                    };
                    println!("{}", serde_json::to_string(&report).expect("serializable"));
                    Ok(1)
                }
            }
        }
        Command::Symplectic { input, emit_form } => {
            let g = read_hypergraph(&input)?;
            match symplectic::is_symplectic(&g) {
                SymplecticDecision::Symplectic { sdr, form } => {
                    let diag = symplectic::verify_symplectic(&g, &form);
                    let alg = MCAlgebra::full(&g);
                    let mut out = serde_json::json!({
                        "decision": "symplectic",
                        "assignment": sdr.pairs().to_vec(),
                        "involution": form.involution.iter().map(|(&a, &b)| (a, b)).collect::<Vec<_>>(),
                        "verified": diag.ok(),
                    });
                    if emit_form {
                        out["form"] = serde_json::json!(alg.poly_string(&form.element));
                        out["matrix"] = serde_json::json!(form
                            .matrix
                            .entries()
                            .map(|(r, c, v)| (r, c, v))
                            .collect::<Vec<_>>());
                    }
                    println!("{}", serde_json::to_string(&out).expect("serializable"));
                    Ok(0)
                }
                SymplecticDecision::Not(reason) => {
                    let out = match reason {
                        NoReason::OddParity { total } => serde_json::json!({
                            "decision": "not_symplectic",
                            "reason": "odd_parity",
                            "total_dimension": total,
                        }),
                        NoReason::NoSdr(v) => serde_json::json!({
                            "decision": "not_symplectic",
                            "reason": "hall_violator",
                            "violator": {
                                "edges": v.edges,
                                "union": v.union.iter().copied().collect::<Vec<_>>(),
                                "union_size": v.union_size(),
                            },
                        }),
                    };
                    println!("{}", serde_json::to_string(&out).expect("serializable"));
                    Ok(1)
                }
            }
        }
        Command::Iso {
            input_a,
            input_b,
            depth,
            fingerprint_only,
        } => {
            let a = read_hypergraph(&input_a)?;
            let b = read_hypergraph(&input_b)?;
            let limits = config.limits();
            if fingerprint_only {
                let fa = isomorphism::fingerprint(&a, depth, &limits)?;
                let fb = isomorphism::fingerprint(&b, depth, &limits)?;
                let equal = fa == fb;
                println!(
                    "{}",
                    serde_json::json!({
                        "fingerprints_equal": equal,
                        "betti_prefix_a": fa.betti_prefix,
                        "betti_prefix_b": fb.betti_prefix,
                    })
                );
                return Ok(if equal { 0 } else { 1 });
            }
            match isomorphism::are_isomorphic(&a, &b, config.iso_vertex_cap)? {
                Some(bijection) => {
                    println!(
                        "{}",
                        serde_json::json!({ "isomorphic": true, "bijection": bijection })
                    );
                    Ok(0)
                }
                None => {
                    println!("{}", serde_json::json!({ "isomorphic": false }));
                    Ok(1)
                }
            }
        }
    }
}

fn betti_report(g: &Hypergraph, config: &Config) -> Result<BettiReport, Error> {
    let limits = config.limits();
    let series = cohomology::poincare(g, config.max_degree, &limits)?;
    let mut warnings = Vec::new();
    if let Ok(forms) = cohomology::closed_form_bn(g) {
        if forms.printed != forms.proof_consistent && config.max_degree >= forms.min_edge_size {
            warnings.push(format!(
                "closed-form variants for b_{} disagree: printed formula gives {}, \
                 proof-consistent count gives {}; direct computation is authoritative",
                forms.min_edge_size, forms.printed, forms.proof_consistent
            ));
        }
    }
    let alg = MCAlgebra::reduced(g);
    if let Ok(counts) = alg.count_by_degree(config.max_degree, None) {
        if let Some((degree, &count)) = counts
            .iter()
            .enumerate()
            .find(|(_, &c)| c > config.monomial_cap / 2)
        {
            warnings.push(format!(
                "degree {degree} has {count} monomials, more than half the cap of {}",
                config.monomial_cap
            ));
        }
    }
    Ok(BettiReport {
        betti: series.coefficients,
        max_degree: config.max_degree,
        reduced_generators: alg.n_generators(),
        warnings,
    })
}

fn run_check(input: &str, dump: bool, trials: u32, config: &Config) -> Result<i32, Error> {
    let g = read_hypergraph(input)?;
    let full = MCAlgebra::full(&g);
    let reduced = MCAlgebra::reduced(&g);
    let linfty = LInftyAlgebra::build(&g);
    let mut all_ok = true;
    let mut report = |name: &str, ok: bool, detail: String| {
        println!("{} {name}: {detail}", if ok { "PASS" } else { "FAIL" });
        all_ok &= ok;
    };

    let d2_full = full.check_d_squared(trials, config.seed);
    report(
        "d_squared_full",
        d2_full.is_ok(),
        match &d2_full {
            Ok(()) => format!("d² = 0 on {} generators and {trials} random polynomials", full.n_generators()),
            Err(w) => format!("d²({}) = {}", full.poly_string(&w.input), full.poly_string(&w.image)),
        },
    );
    let d2_reduced = reduced.check_d_squared(trials, config.seed);
    report(
        "d_squared_reduced",
        d2_reduced.is_ok(),
        match &d2_reduced {
            Ok(()) => format!("d² = 0 on {} generators and {trials} random polynomials", reduced.n_generators()),
            Err(w) => format!("d²({}) = {}", reduced.poly_string(&w.input), reduced.poly_string(&w.image)),
        },
    );

    let two_step = linfty.check_two_step();
    report(
        "two_step_nilpotency",
        two_step.is_ok(),
        match &two_step {
            Ok(()) => format!("all nested brackets vanish up to arity {}", linfty.max_arity()),
            Err(v) => format!("violation at inner {:?}, outer {:?}", v.inner_args, v.outer_args),
        },
    );

    let dims = linfty.lower_central_dims();
    let expected = if g.edge_count() == 0 {
        vec![g.n_vertices() as usize, 0]
    } else {
        vec![linfty.dim(), g.edge_count(), 0]
    };
    report(
        "lower_central_filtration",
        dims == expected,
        format!("dims {dims:?}"),
    );
    let (commutator, quotient) = linfty.commutator_dims();
    report(
        "commutator",
        commutator == g.edge_count() && quotient == g.n_vertices() as usize,
        format!("dim l(g) = {commutator}, dim g/l(g) = {quotient}"),
    );

    let degree = config.max_degree.min(6);
    let dims_ok = if g.profile().one_edged_vertices.is_empty() {
        let series = dim_series(&g, degree)?;
        (0..=degree).all(|i| {
            full.basis_of_degree(i, None).map(|b| b.len() as u64) == Ok(series[i as usize])
        })
    } else {
        let series = algebra_dim_series(&reduced, degree);
        (0..=degree).all(|i| {
            reduced.basis_of_degree(i, None).map(|b| b.len() as u64) == Ok(series[i as usize])
        })
    };
    report(
        "dimension_series",
        dims_ok,
        format!("per-degree counts match the generating function up to degree {degree}"),
    );

    if dump {
        println!("-- reduced differentials --");
        println!("{}", reduced.dump_differentials());
        if g.profile().min_edge_size == Some(1) {
            println!("-- full differentials --");
            println!("{}", full.dump_differentials());
        }
    }
    Ok(if all_ok { 0 } else { 1 })
}
