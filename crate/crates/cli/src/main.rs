//! `nilcortex` — exact coadjoint-orbit and cortex computations from the
//! command line.
//!
//! Exit codes: 0 success / verdict true, 1 domain-negative (non-member,
//! validation failure, inconclusive classification, delegate errors),
//! 2 usage or parse errors. All rational output is bit-exact and every
//! seeded command is byte-reproducible for a fixed seed.

mod render;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::{Signed, Zero};

use nilcortex::coadjoint::{jump_indices, orbit_dimension, tangent_space, Covector};
use nilcortex::cortex::{
    approximate_cortex, codim_classifier, coadjoint_derivation, cortex_membership_report,
    witness_sequence, CortexReport,
};
use nilcortex::exactmath::{parse_rat, rat_to_f64, Rat};
use nilcortex::gd::{
    coordinate_names, cortex_poly, cross_section_map, invariant_generators, make_gd, pos_y,
};
use nilcortex::liealg::LieAlgebra;
use nilcortex::Error;

#[derive(Parser)]
#[command(
    name = "nilcortex",
    version,
    about = "Exact cortex and coadjoint-orbit tools for two-step nilpotent Lie algebras"
)]
struct Cli {
    /// Seed for every randomized command; identical seeds give
    /// byte-identical output.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Output format (point clouds are always CSV).
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the primary output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Record,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a structure-constants file: Jacobi identity, nilpotency
    /// class, center. Exit 0 iff Jacobi passes and the algebra is two-step.
    Validate { file: PathBuf },

    /// Write the structure-constants file of the family member g_d.
    Gd { d: usize },

    /// Orbit dimension and tangent-space basis at a covector.
    Orbit { file: PathBuf, ell: String },

    /// Jump indices of the skew form at a covector.
    Jump { file: PathBuf, ell: String },

    /// Print the invariant-ring generators of g_d and certify that all
    /// their coadjoint derivations vanish.
    Invariants { d: usize },

    /// Exact cortex-variety membership test for g_d. Exit 0 iff member.
    CortexTest { d: usize, ell: String },

    /// Constructive witness schedule for a cortex point of g_d at the
    /// given scales (comma-separated positive rationals).
    Witness {
        d: usize,
        target: String,
        epsilons: String,
        /// Perturbation scales for degenerate targets (some y_{2j-1} = 0):
        /// reports the numeric two-parameter limit instead of rejecting.
        #[arg(long)]
        perturb: Option<String>,
    },

    /// Sample the image set numerically and write a normalized point
    /// cloud as CSV (17 significant digits per coordinate).
    Cloud {
        file: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        /// Comma-separated scale schedule for the covector draws.
        #[arg(long, default_value = "1,0.5,0.25")]
        scales: String,
        /// Keep images with max norm inside [LO,HI].
        #[arg(long, default_value = "0.5,2")]
        window: String,
    },

    /// Orbit-codimension classifier: decides Cor = z-perp when the generic
    /// orbit codimension in z-perp is at most 1. Exit 0 iff conclusive.
    Classify {
        file: PathBuf,
        #[arg(long, default_value_t = 40)]
        trials: usize,
    },

    /// Cross-section projection of a layer covector (z1 != 0) of g_d.
    CrossSection { d: usize, ell: String },
}

struct Failure {
    message: String,
    code: u8,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
            code: 2,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ParseRational(_) | Error::ParseCovector(_) | Error::ParseAlgebra(_) => 2,
            _ => 1,
        };
        Self {
            message: e.to_string(),
            code,
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

struct Outcome {
    output: String,
    code: u8,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Self { output, code: 0 }
    }

    fn negative(output: String) -> Self {
        Self { output, code: 1 }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            if let Err(e) = emit(&cli.out, &outcome.output) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(outcome.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> std::io::Result<()> {
    match out {
        Some(path) => fs::write(path, content.as_bytes()),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(content.as_bytes())
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Validate { file } => cmd_validate(file, cli.format),
        Command::Gd { d } => {
            let g = make_gd(*d)?;
            Ok(Outcome::ok(g.algebra().to_json_string()))
        }
        Command::Orbit { file, ell } => cmd_orbit(file, ell, cli.format),
        Command::Jump { file, ell } => cmd_jump(file, ell, cli.format),
        Command::Invariants { d } => cmd_invariants(*d, cli.format),
        Command::CortexTest { d, ell } => cmd_cortex_test(*d, ell, cli.format),
        Command::Witness {
            d,
            target,
            epsilons,
            perturb,
        } => cmd_witness(*d, target, epsilons, perturb.as_deref(), cli.format),
        Command::Cloud {
            file,
            samples,
            scales,
            window,
        } => cmd_cloud(file, *samples, scales, window, cli.seed),
        Command::Classify { file, trials } => cmd_classify(file, *trials, cli.seed, cli.format),
        Command::CrossSection { d, ell } => cmd_cross_section(*d, ell, cli.format),
    }
}

fn load_algebra(path: &PathBuf) -> Result<LieAlgebra, Failure> {
    let text = fs::read_to_string(path)?;
    Ok(LieAlgebra::from_json_str(&text)?)
}

/// Covector argument: inline rational list, or `@path` to a file holding
/// either the same list or a JSON array of rational strings.
fn read_covector_arg(arg: &str) -> Result<Covector, Failure> {
    let text = if let Some(path) = arg.strip_prefix('@') {
        fs::read_to_string(path)?
    } else {
        arg.to_string()
    };
    let trimmed = text.trim();
    if trimmed.starts_with('[') {
        let items: Vec<String> = serde_json::from_str(trimmed)
            .map_err(|e| Failure::usage(format!("invalid covector file: {e}")))?;
        let coords = items
            .iter()
            .map(|s| parse_rat(s))
            .collect::<nilcortex::Result<Vec<_>>>()
            .map_err(Failure::from)?;
        Ok(Covector::new(coords))
    } else {
        Ok(Covector::parse(trimmed)?)
    }
}

fn parse_rat_list(arg: &str) -> Result<Vec<Rat>, Failure> {
    arg.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| parse_rat(p).map_err(Failure::from))
        .collect()
}

fn parse_f64_list(arg: &str) -> Result<Vec<f64>, Failure> {
    arg.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.parse::<f64>()
                .map_err(|_| Failure::usage(format!("invalid floating value `{p}`")))
        })
        .collect()
}

fn reject_csv(format: Format) -> Result<(), Failure> {
    if format == Format::Csv {
        return Err(Failure::usage(
            "csv format is only available for the cloud command",
        ));
    }
    Ok(())
}

fn cmd_validate(file: &PathBuf, format: Format) -> Result<Outcome, Failure> {
    reject_csv(format)?;
    let alg = load_algebra(file)?;
    let report = alg.validate();
    let accepted = report.jacobi_ok && report.two_step;
    let output = match format {
        Format::Text => render::validate_text(&alg, report, accepted),
        _ => render::validate_record(&alg, report, accepted),
    };
    Ok(if accepted {
        Outcome::ok(output)
    } else {
        Outcome::negative(output)
    })
}

fn cmd_orbit(file: &PathBuf, ell: &str, format: Format) -> Result<Outcome, Failure> {
    reject_csv(format)?;
    let alg = load_algebra(file)?;
    let ell = read_covector_arg(ell)?;
    let dim = orbit_dimension(&alg, &ell)?;
    let tangent = tangent_space(&alg, &ell)?;
    let output = match format {
        Format::Text => render::orbit_text(dim, &tangent),
        _ => render::orbit_record(dim, &tangent),
    };
    Ok(Outcome::ok(output))
}

fn cmd_jump(file: &PathBuf, ell: &str, format: Format) -> Result<Outcome, Failure> {
    reject_csv(format)?;
    let alg = load_algebra(file)?;
    let ell = read_covector_arg(ell)?;
    let jumps = jump_indices(&alg, &ell)?;
    let output = match format {
        Format::Text => format!("jump indices: {jumps}\ncardinality: {}\n", jumps.len()),
        _ => render::jump_record(&jumps),
    };
    Ok(Outcome::ok(output))
}

fn cmd_invariants(d: usize, format: Format) -> Result<Outcome, Failure> {
    reject_csv(format)?;
    let g = make_gd(d)?;
    let gens = invariant_generators(d)?;
    let mut all_vanish = true;
    for p in gens.generators() {
        for b in 0..4 * d {
            if !coadjoint_derivation(g.algebra(), p, b)?.is_zero() {
                all_vanish = false;
            }
        }
    }
    let names = coordinate_names(d);
    let output = match format {
        Format::Text => render::invariants_text(d, &gens, &names, all_vanish),
        _ => render::invariants_record(d, &gens, &names, all_vanish),
    };
    Ok(if all_vanish {
        Outcome::ok(output)
    } else {
        Outcome::negative(output)
    })
}

fn cmd_cortex_test(d: usize, ell: &str, format: Format) -> Result<Outcome, Failure> {
    reject_csv(format)?;
    let ell = read_covector_arg(ell)?;
    let report = cortex_membership_report(d, &ell)?;
    let q_text = cortex_poly(d)?
        .poly()
        .to_string_named(&coordinate_names(d));
    let output = match format {
        Format::Text => render::membership_text(&ell, &report, &q_text),
        _ => {
            let wrapped = CortexReport {
                membership: Some(report.clone()),
                ..CortexReport::default()
            };
            render::record_to_string(&wrapped.to_record())
        }
    };
    Ok(if report.member {
        Outcome::ok(output)
    } else {
        Outcome::negative(output)
    })
}

fn cmd_witness(
    d: usize,
    target: &str,
    epsilons: &str,
    perturb: Option<&str>,
    format: Format,
) -> Result<Outcome, Failure> {
    reject_csv(format)?;
    let target = read_covector_arg(target)?;
    let epsilons = parse_rat_list(epsilons)?;
    match witness_sequence(d, &target, &epsilons) {
        Ok((schedule, report)) => {
            let output = match format {
                Format::Text => render::witness_text(&schedule, &report),
                _ => render::record_to_string(&report.to_record()),
            };
            Ok(Outcome::ok(output))
        }
        Err(Error::DegenerateStratum(slot)) => match perturb {
            Some(etas) => {
                let etas = parse_rat_list(etas)?;
                cmd_witness_perturbed(d, &target, &epsilons, &etas, slot, format)
            }
            None => Err(Error::DegenerateStratum(slot).into()),
        },
        Err(e) => Err(e.into()),
    }
}

/// Degenerate targets: replace every vanishing odd y coordinate by eta,
/// re-solve y_{2d} on the variety, run the exact schedule there, and
/// report the floating distance to the original target per (eta, eps).
/// Numeric-only evidence, clearly tagged as such.
fn cmd_witness_perturbed(
    d: usize,
    target: &Covector,
    epsilons: &[Rat],
    etas: &[Rat],
    slot: usize,
    format: Format,
) -> Result<Outcome, Failure> {
    if format != Format::Text {
        return Err(Failure::usage(
            "the perturbation report is numeric-only and renders as text",
        ));
    }
    let mut rows: Vec<(Rat, Rat, f64)> = Vec::new();
    for eta in etas {
        if !eta.is_positive() {
            return Err(Error::NonpositiveEpsilon(eta.to_string()).into());
        }
        let mut coords = target.coords().to_vec();
        for j in 1..d {
            if coords[pos_y(d, 2 * j - 1)].is_zero() {
                coords[pos_y(d, 2 * j - 1)] = eta.clone();
            }
        }
        // re-solve y_{2d} from Q_d = 0 on the perturbed point
        let mut y2d = Rat::zero();
        for i in 1..d {
            y2d += &coords[pos_y(d, 2 * i)] / &coords[pos_y(d, 2 * i - 1)];
        }
        y2d *= &coords[pos_y(d, 2 * d - 1)];
        coords[pos_y(d, 2 * d)] = y2d;
        let perturbed = Covector::new(coords);
        let (schedule, _) = witness_sequence(d, &perturbed, epsilons)?;
        for step in &schedule.steps {
            let dist = step
                .image
                .coords()
                .iter()
                .zip(target.coords())
                .map(|(a, b)| rat_to_f64(&(a - b)).abs())
                .fold(0.0f64, f64::max);
            rows.push((eta.clone(), step.epsilon.clone(), dist));
        }
    }
    Ok(Outcome::ok(render::perturbed_witness_text(slot, &rows)))
}

fn cmd_cloud(
    file: &PathBuf,
    samples: usize,
    scales: &str,
    window: &str,
    seed: u64,
) -> Result<Outcome, Failure> {
    let alg = load_algebra(file)?;
    let scales = parse_f64_list(scales)?;
    let window_vals = parse_f64_list(window)?;
    if window_vals.len() != 2 {
        return Err(Failure::usage("window must be LO,HI"));
    }
    let cloud = approximate_cortex(&alg, samples, &scales, (window_vals[0], window_vals[1]), seed)?;
    eprintln!("kept {} of {} samples", cloud.len(), samples);
    Ok(Outcome::ok(render::cloud_csv(&cloud)))
}

fn cmd_classify(file: &PathBuf, trials: usize, seed: u64, format: Format) -> Result<Outcome, Failure> {
    reject_csv(format)?;
    let alg = load_algebra(file)?;
    let report = codim_classifier(&alg, trials, seed)?;
    let output = match format {
        Format::Text => render::classify_text(&alg, &report),
        _ => {
            let wrapped = CortexReport {
                classifier: Some(report.clone()),
                ..CortexReport::default()
            };
            render::record_to_string(&wrapped.to_record())
        }
    };
    Ok(if report.conclusive {
        Outcome::ok(output)
    } else {
        Outcome::negative(output)
    })
}

fn cmd_cross_section(d: usize, ell: &str, format: Format) -> Result<Outcome, Failure> {
    reject_csv(format)?;
    let ell = read_covector_arg(ell)?;
    let point = cross_section_map(d, &ell)?;
    let output = match format {
        Format::Text => format!("{}\n", point.covector().to_csv_string()),
        _ => render::cross_section_record(d, point.covector()),
    };
    Ok(Outcome::ok(output))
}
