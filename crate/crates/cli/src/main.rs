//! Command-line front end for the incidence-algebra toolkit.
//!
//! Every subcommand reads JSON, writes a JSON report (stdout by default,
//! `--out` where supported), and exits 0 when all mathematical checks pass,
//! 1 when a check fails, and 2 on input errors. Reports carry a
//! `"schema": "incalg/1"` field and contain no timestamps, so identical
//! inputs and seeds produce byte-identical output.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use incalg_core::decompose::certify;
use incalg_core::io::{
    certificate_to_file, map_from_json, map_to_file, poset_from_json, poset_to_file, MapFile,
};
use incalg_core::predicates::{
    is_derivation, is_generalized_derivation, is_generalized_jordan_derivation,
    is_jordan_derivation, verify_basis_identities, verify_jordan_triple_identities,
};
use incalg_core::solver::{build_system, nullspace, random_coefficients, survey_spaces};
use incalg_core::{
    ClassMember, Error, GenPair, IdentityReport, IncidenceAlgebra, LinearMap, MapClass, Preorder,
    Result, RingSpec, SpaceComparison,
};

const SCHEMA: &str = "incalg/1";

#[derive(Parser)]
#[command(
    name = "incalg",
    version,
    about = "Exact incidence algebras of finite preorders: solve for derivation-type maps and certify decompositions"
)]
struct Cli {
    /// Seed for randomized sampling; the fixed default keeps runs reproducible.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Print a human-readable summary to stderr alongside the JSON report.
    #[arg(long, global = true)]
    summary: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Close a generating relation and print the full preorder
    Closure {
        /// Poset JSON file: {"elements": [...], "relations": [["x","y"], ...]}
        #[arg(long)]
        poset: PathBuf,
        /// Write the report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the incidence-algebra basis of a preorder
    Basis {
        #[arg(long)]
        poset: PathBuf,
    },
    /// Solve for a space of maps and report its dimension
    Solve {
        #[arg(long)]
        poset: PathBuf,
        /// Ring descriptor: Z, Q, or Z/n
        #[arg(long)]
        ring: String,
        /// Map class: der, jder, gder, or gjder
        #[arg(long)]
        class: String,
        /// Also write the full solution basis to this file
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Check a map or pair against a class or identity suite
    Check {
        #[arg(long)]
        poset: PathBuf,
        #[arg(long)]
        ring: String,
        /// The map under test (the outer map for pair classes)
        #[arg(long)]
        xi: PathBuf,
        /// The relating map; required for pair classes and identity suites
        #[arg(long)]
        tau: Option<PathBuf>,
        /// der, jder, gder, gjder, lemma1 (triple-product identities), or
        /// basis-ids (idempotent and annihilation identities)
        #[arg(long)]
        class: String,
    },
    /// Decompose a generalized Jordan pair and certify the result
    Decompose {
        #[arg(long)]
        poset: PathBuf,
        #[arg(long)]
        ring: String,
        #[arg(long)]
        xi: PathBuf,
        #[arg(long)]
        tau: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve the pair space, sample it, and certify every decomposition
    #[command(group = ArgGroup::new("target").required(true).args(["poset", "all_posets_up_to"]))]
    VerifyTheorem {
        #[arg(long)]
        poset: Option<PathBuf>,
        /// Sweep every preorder on up to N elements (N <= 4; 4-element
        /// coverage uses the curated cases)
        #[arg(long)]
        all_posets_up_to: Option<usize>,
        #[arg(long)]
        ring: String,
        /// Number of random members to certify on top of the basis
        #[arg(long, default_value_t = 10)]
        samples: usize,
    },
    /// Survey dimension gaps over the 2-element field (observational)
    #[command(group = ArgGroup::new("target").required(true).args(["poset", "all_posets_up_to"]))]
    TorsionSearch {
        #[arg(long)]
        poset: Option<PathBuf>,
        #[arg(long)]
        all_posets_up_to: Option<usize>,
    },
}

#[derive(Serialize)]
struct ClosureReport {
    schema: &'static str,
    elements: Vec<String>,
    relations: Vec<(String, String)>,
}

#[derive(Serialize)]
struct BasisReport {
    schema: &'static str,
    elements: usize,
    dimension: usize,
    basis: Vec<(String, String)>,
}

#[derive(Serialize)]
struct SolveReport {
    schema: &'static str,
    ring: String,
    class: &'static str,
    unknowns: usize,
    equations: usize,
    dimension: usize,
}

#[derive(Serialize)]
#[serde(untagged)]
enum BasisEntry {
    Map(MapFile),
    Pair { outer: MapFile, relating: MapFile },
}

#[derive(Serialize)]
struct SolveDump {
    schema: &'static str,
    ring: String,
    class: &'static str,
    dimension: usize,
    basis: Vec<BasisEntry>,
}

#[derive(Serialize)]
struct CheckReport {
    schema: &'static str,
    class: String,
    passed: bool,
    report: IdentityReport,
}

#[derive(Serialize)]
struct TheoremCase {
    poset: String,
    dimensions: SpaceComparison,
    certificates: usize,
    all_verdicts_true: bool,
    jordan_basis_maps_are_derivations: bool,
    passed: bool,
}

#[derive(Serialize)]
struct TheoremReport {
    schema: &'static str,
    ring: String,
    seed: u64,
    samples: usize,
    passed: bool,
    cases: Vec<TheoremCase>,
}

#[derive(Serialize)]
struct TorsionCase {
    poset: String,
    dimensions: SpaceComparison,
    jordan_gap: usize,
    jordan_basis_maps_failing_product_rule: Vec<usize>,
}

#[derive(Serialize)]
struct TorsionReport {
    schema: &'static str,
    ring: String,
    cases: Vec<TorsionCase>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(2)
        }
    }
}

fn load_poset(path: &Path) -> Result<Preorder> {
    poset_from_json(&std::fs::read_to_string(path)?)
}

fn load_algebra(poset: &Path, ring: &str) -> Result<IncidenceAlgebra> {
    let ring: RingSpec = ring.parse()?;
    Ok(IncidenceAlgebra::new(load_poset(poset)?, ring))
}

fn load_map(algebra: &IncidenceAlgebra, path: &Path) -> Result<LinearMap> {
    map_from_json(algebra, &std::fs::read_to_string(path)?)
}

fn emit(out: Option<&Path>, value: &impl Serialize) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

/// Resolves a subcommand's target into named cases: one file-backed poset or
/// the standard sweep.
fn resolve_targets(
    poset: Option<&PathBuf>,
    all_posets_up_to: Option<usize>,
) -> Result<Vec<(String, Preorder)>> {
    match (poset, all_posets_up_to) {
        (Some(path), None) => Ok(vec![(path.display().to_string(), load_poset(path)?)]),
        (None, Some(n)) => {
            if !(1..=4).contains(&n) {
                return Err(Error::Precondition {
                    name: "sweep-size".to_string(),
                    detail: format!(
                        "--all-posets-up-to must be between 1 and 4, got {n} \
                         (3-element cases are exhaustive, 4-element coverage is curated)"
                    ),
                });
            }
            Ok(incalg_core::enumerate::sweep_cases(n)
                .into_iter()
                .map(|case| (case.name, case.preorder))
                .collect())
        }
        _ => Err(Error::Precondition {
            name: "arguments".to_string(),
            detail: "provide exactly one of --poset or --all-posets-up-to".to_string(),
        }),
    }
}

fn run(cli: &Cli) -> Result<bool> {
    match &cli.command {
        Command::Closure { poset, out } => {
            let preorder = load_poset(poset)?;
            let file = poset_to_file(&preorder);
            let report = ClosureReport {
                schema: SCHEMA,
                elements: file.elements,
                relations: file.relations,
            };
            emit(out.as_deref(), &report)?;
            if cli.summary {
                eprintln!(
                    "{} elements, {} related pairs",
                    report.elements.len(),
                    report.relations.len()
                );
            }
            Ok(true)
        }

        Command::Basis { poset } => {
            let preorder = load_poset(poset)?;
            let algebra = IncidenceAlgebra::new(preorder, RingSpec::Integers);
            let basis = algebra
                .basis()
                .iter()
                .map(|&b| {
                    let (x, y) = algebra.label_pair(b);
                    (x.to_string(), y.to_string())
                })
                .collect::<Vec<_>>();
            let report = BasisReport {
                schema: SCHEMA,
                elements: algebra.preorder().len(),
                dimension: basis.len(),
                basis,
            };
            emit(None, &report)?;
            if cli.summary {
                eprintln!("dimension {}", report.dimension);
            }
            Ok(true)
        }

        Command::Solve {
            poset,
            ring,
            class,
            dump,
        } => {
            let class = MapClass::parse(class)?;
            let algebra = load_algebra(poset, ring)?;
            let system = build_system(&algebra, class);
            let space = nullspace(&system)?;
            let report = SolveReport {
                schema: SCHEMA,
                ring: algebra.ring().to_string(),
                class: class.as_str(),
                unknowns: system.unknown_count(),
                equations: system.row_count(),
                dimension: space.dimension(),
            };
            emit(None, &report)?;
            if let Some(path) = dump {
                let basis = space
                    .members()
                    .into_iter()
                    .map(|member| match member {
                        ClassMember::Map(map) => BasisEntry::Map(map_to_file(&map)),
                        ClassMember::Pair(pair) => BasisEntry::Pair {
                            outer: map_to_file(pair.outer()),
                            relating: map_to_file(pair.relating()),
                        },
                    })
                    .collect();
                let dump_report = SolveDump {
                    schema: SCHEMA,
                    ring: report.ring.clone(),
                    class: class.as_str(),
                    dimension: space.dimension(),
                    basis,
                };
                emit(Some(path), &dump_report)?;
            }
            if cli.summary {
                eprintln!(
                    "class {} over {}: dimension {}",
                    class.as_str(),
                    report.ring,
                    report.dimension
                );
            }
            Ok(true)
        }

        Command::Check {
            poset,
            ring,
            xi,
            tau,
            class,
        } => {
            let algebra = load_algebra(poset, ring)?;
            let outer = load_map(&algebra, xi)?;
            let single_map_class = matches!(class.as_str(), "der" | "jder");
            if single_map_class && tau.is_some() {
                return Err(Error::Precondition {
                    name: "arguments".to_string(),
                    detail: format!("class {class} checks a single map; --tau is not accepted"),
                });
            }
            let report = match class.as_str() {
                "der" => is_derivation(&outer),
                "jder" => is_jordan_derivation(&outer),
                "gder" | "gjder" | "lemma1" | "basis-ids" => {
                    let tau = tau.as_ref().ok_or_else(|| Error::Precondition {
                        name: "arguments".to_string(),
                        detail: format!("class {class} needs a relating map; pass --tau"),
                    })?;
                    let relating = load_map(&algebra, tau)?;
                    let pair = GenPair::new(outer, relating)?;
                    match class.as_str() {
                        "gder" => is_generalized_derivation(&pair),
                        "gjder" => is_generalized_jordan_derivation(&pair),
                        "lemma1" => verify_jordan_triple_identities(&pair),
                        _ => verify_basis_identities(&pair),
                    }
                }
                other => {
                    return Err(Error::Precondition {
                        name: "class".to_string(),
                        detail: format!(
                            "unknown check class `{other}` (expected der, jder, gder, gjder, \
                             lemma1, or basis-ids)"
                        ),
                    })
                }
            };
            let passed = report.passed;
            let check = CheckReport {
                schema: SCHEMA,
                class: class.clone(),
                passed,
                report,
            };
            emit(None, &check)?;
            if cli.summary {
                eprintln!(
                    "class {}: {} ({} witnesses)",
                    class,
                    if passed { "pass" } else { "fail" },
                    check.report.witnesses.len()
                );
            }
            Ok(passed)
        }

        Command::Decompose {
            poset,
            ring,
            xi,
            tau,
            out,
        } => {
            let algebra = load_algebra(poset, ring)?;
            let outer = load_map(&algebra, xi)?;
            let relating = load_map(&algebra, tau)?;
            let pair = GenPair::new(outer, relating)?;
            let certificate = certify(&pair)?;
            emit(out.as_deref(), &certificate_to_file(&certificate))?;
            if cli.summary {
                let failing = certificate
                    .checks()
                    .iter()
                    .filter(|c| !c.passed)
                    .map(|c| c.identity.as_str())
                    .collect::<Vec<_>>();
                if certificate.verdict() {
                    eprintln!("verdict true ({} checks)", certificate.checks().len() + 1);
                } else {
                    eprintln!("verdict false (failing: {})", failing.join(", "));
                }
            }
            Ok(certificate.verdict())
        }

        Command::VerifyTheorem {
            poset,
            all_posets_up_to,
            ring,
            samples,
        } => {
            let ring: RingSpec = ring.parse()?;
            if !ring.is_field() {
                return Err(Error::NotAField(ring));
            }
            if !ring.is_two_torsion_free() {
                return Err(Error::Precondition {
                    name: "two-torsion-free".to_string(),
                    detail: format!(
                        "ring {ring} has 2-torsion, which the decomposition hypotheses \
                         exclude; use `torsion-search` for observational reports over it"
                    ),
                });
            }
            let targets = resolve_targets(poset.as_ref(), *all_posets_up_to)?;
            let mut cases = Vec::new();
            for (name, preorder) in &targets {
                let case = theorem_case(name, preorder, ring, *samples, cli.seed)?;
                if cli.summary {
                    eprintln!(
                        "{}: {} ({} certificates)",
                        case.poset,
                        if case.passed { "pass" } else { "FAIL" },
                        case.certificates
                    );
                }
                cases.push(case);
            }
            let passed = cases.iter().all(|c| c.passed);
            let report = TheoremReport {
                schema: SCHEMA,
                ring: ring.to_string(),
                seed: cli.seed,
                samples: *samples,
                passed,
                cases,
            };
            emit(None, &report)?;
            Ok(passed)
        }

        Command::TorsionSearch {
            poset,
            all_posets_up_to,
        } => {
            let targets = resolve_targets(poset.as_ref(), *all_posets_up_to)?;
            let mut cases = Vec::new();
            for (name, preorder) in &targets {
                let case = torsion_case(name, preorder)?;
                if cli.summary {
                    eprintln!(
                        "{}: der {}, jder {}, gap {}",
                        case.poset,
                        case.dimensions.derivation_dim,
                        case.dimensions.jordan_dim,
                        case.jordan_gap
                    );
                }
                cases.push(case);
            }
            let report = TorsionReport {
                schema: SCHEMA,
                ring: RingSpec::ModN(2).to_string(),
                cases,
            };
            emit(None, &report)?;
            Ok(true)
        }
    }
}

/// Solves the pair space over one preorder, certifies every basis member
/// plus `samples` seeded random members, and evaluates the dimension
/// comparisons.
fn theorem_case(
    name: &str,
    preorder: &Preorder,
    ring: RingSpec,
    samples: usize,
    seed: u64,
) -> Result<TheoremCase> {
    let algebra = IncidenceAlgebra::new(preorder.clone(), ring);
    let survey = survey_spaces(&algebra)?;

    let mut members: Vec<GenPair> = survey
        .generalized_jordan
        .pairs()
        .expect("pair class")
        .to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let coefficients =
            random_coefficients(ring, survey.generalized_jordan.dimension(), &mut rng);
        match survey.generalized_jordan.sample(&coefficients)? {
            ClassMember::Pair(pair) => members.push(pair),
            ClassMember::Map(_) => unreachable!("pair classes sample pairs"),
        }
    }

    let mut all_verdicts_true = true;
    for pair in &members {
        all_verdicts_true &= certify(pair)?.verdict();
    }
    let jordan_basis_maps_are_derivations = survey
        .jordan
        .maps()
        .expect("map class")
        .iter()
        .all(|map| is_derivation(map).passed);

    let dimensions = survey.comparison.clone();
    let passed = all_verdicts_true
        && jordan_basis_maps_are_derivations
        && dimensions.jordan_equals_derivation
        && dimensions.outer_projections_equal
        && dimensions.pair_dim_splits;
    Ok(TheoremCase {
        poset: name.to_string(),
        dimensions,
        certificates: members.len(),
        all_verdicts_true,
        jordan_basis_maps_are_derivations,
        passed,
    })
}

/// Observational dimension survey over the 2-element field.
fn torsion_case(name: &str, preorder: &Preorder) -> Result<TorsionCase> {
    let algebra = IncidenceAlgebra::new(preorder.clone(), RingSpec::ModN(2));
    let survey = survey_spaces(&algebra)?;
    let jordan_basis_maps_failing_product_rule = survey
        .jordan
        .maps()
        .expect("map class")
        .iter()
        .enumerate()
        .filter(|(_, map)| !is_derivation(map).passed)
        .map(|(i, _)| i)
        .collect();
    let jordan_gap = survey.comparison.jordan_dim - survey.comparison.derivation_dim;
    Ok(TorsionCase {
        poset: name.to_string(),
        dimensions: survey.comparison,
        jordan_gap,
        jordan_basis_maps_failing_product_rule,
    })
}
