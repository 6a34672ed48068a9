//! Command-line front end for the amitsur-core toolkit.
//!
//! Four subcommands: `check-group` classifies one metacyclic presentation,
//! `scan-odd` runs the order census, `verify-identity` replays the group-ring
//! telescoping identity, and `build-algebra` constructs a cyclotomic cyclic
//! algebra and certifies its structure.  Every subcommand takes `--json` for
//! machine-readable output (schema `amitsur-kit/1`); JSON output depends only
//! on the inputs (and seed), never on timing.
//!
//! Exit codes: 0 success, 2 invalid input, 3 internal inconsistency (a
//! certificate that should hold by construction failed to check out).

pub mod render;
pub mod report;

use amitsur_core::algebra::{
    preset_order_63, preset_order_117, preset_quaternion, CyclicAlgebra,
};
use amitsur_core::classify::{
    classify_presentation, exceptional_orders, order_report, scan_orders, OrderReport, Rule,
    ScanMode,
};
use amitsur_core::cyclotomic::CyclotomicField;
use amitsur_core::group_ring::verify_telescoping;
use amitsur_core::groups::{GroupError, Presentation};
use amitsur_core::DESK_BOUND;
use clap::{Parser, Subcommand};
use report::{
    AlgebraReport, CheckGroupReport, Envelope, IdentityReport, OrderReportJson,
    PresentationParams, ScanReport, VerdictReport,
};
use serde::Serialize;
use std::time::Instant;

#[derive(Parser, Debug)]
#[command(
    name = "amitsur-kit",
    version,
    about = "Classify finite metacyclic groups against division-ring embeddability \
             conditions and build the algebras that embed the surviving ones."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify the metacyclic presentation G(m, n, r).
    CheckGroup {
        /// Order of the normal cyclic subgroup <a>.
        m: u64,
        /// Order of the quotient generator b.
        n: u64,
        /// Conjugation exponent: b a b^-1 = a^r.
        r: u64,
        #[arg(long)]
        json: bool,
    },
    /// Census of metacyclic groups of every included order below a limit.
    ScanOdd {
        /// Scan all included orders strictly below this value.
        #[arg(long)]
        max: u64,
        /// Worker threads; the output is identical for any value.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Also scan even orders not divisible by 8 (dicyclic territory).
        #[arg(long)]
        include_even: bool,
        /// Raise the enumeration safety bound above the default 10000.
        #[arg(long, value_name = "BOUND")]
        unsafe_max: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Replay the telescoping identity for G(m, n, r) in Z[G].
    VerifyIdentity {
        m: u64,
        n: u64,
        r: u64,
        /// Include every intermediate group-ring element.
        #[arg(long)]
        verbose: bool,
        #[arg(long)]
        json: bool,
    },
    /// Build a cyclotomic cyclic algebra and certify center, embedding,
    /// and invertibility probes.
    BuildAlgebra {
        /// Named construction: 63, 117, or quaternion-N (N >= 2).
        #[arg(long, value_name = "NAME")]
        preset: Option<String>,
        /// Conductor of the cyclotomic maximal subfield Q(zeta_k).
        #[arg(long, value_name = "K")]
        k: Option<u64>,
        /// Automorphism exponent: sigma sends zeta to zeta^s.
        #[arg(long, value_name = "S")]
        s: Option<u64>,
        /// Twist omega = zeta^e; must be fixed by sigma.
        #[arg(long, value_name = "E", allow_hyphen_values = true)]
        omega_exp: Option<i64>,
        /// Invert this many random bounded-height elements.
        #[arg(long, default_value_t = 0, value_name = "TRIALS")]
        sample: u64,
        /// Coordinate height for sampled elements.
        #[arg(long, default_value_t = 10)]
        height: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

pub fn run(cli: Cli) -> u8 {
    match cli.command {
        Command::CheckGroup { m, n, r, json } => check_group(m, n, r, json),
        Command::ScanOdd {
            max,
            jobs,
            include_even,
            unsafe_max,
            json,
        } => scan_odd(max, jobs, include_even, unsafe_max, json),
        Command::VerifyIdentity {
            m,
            n,
            r,
            verbose,
            json,
        } => verify_identity(m, n, r, verbose, json),
        Command::BuildAlgebra {
            preset,
            k,
            s,
            omega_exp,
            sample,
            height,
            seed,
            json,
        } => build_algebra(preset, k, s, omega_exp, sample, height, seed, json),
    }
}

fn input_error(message: impl std::fmt::Display) -> u8 {
    eprintln!("error: {message}");
    2
}

fn internal_error(message: impl std::fmt::Display) -> u8 {
    eprintln!("internal error: {message}");
    3
}

fn emit<T: Serialize>(json: bool, command: &str, report: &T, human: String, start: Instant) -> u8 {
    use std::io::Write;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let written = if json {
        let envelope = Envelope::new(command, report);
        let body =
            serde_json::to_string_pretty(&envelope).expect("reports serialize without error");
        writeln!(out, "{body}")
    } else {
        write!(out, "{human}")
            .and_then(|()| writeln!(out, "elapsed: {:.3}s", start.elapsed().as_secs_f64()))
    };
    match written {
        Ok(()) => 0,
        // reader went away (e.g. piped into head); not our error
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            eprintln!("error: cannot write output: {e}");
            1
        }
    }
}

fn check_group(m: u64, n: u64, r: u64, json: bool) -> u8 {
    let start = Instant::now();
    let p = match Presentation::validate(m, n, r) {
        Ok(p) => p,
        Err(e) => return input_error(e),
    };
    let verdict = classify_presentation(&p);
    let flags = p.structure_flags();

    // When the full-order-action rule fires, the telescoping identity is the
    // underlying proof; attach its certificate.
    let identity_certificate = if verdict.rule == Some(Rule::FullOrderAction) {
        match verify_telescoping(&p) {
            Ok(cert) if cert.matches && cert.obstruction => {
                Some(IdentityReport::from_certificate(&cert, false))
            }
            Ok(_) => {
                return internal_error(
                    "full-order-action fired but the telescoping certificate shows no obstruction",
                )
            }
            Err(e) => return internal_error(e),
        }
    } else {
        None
    };

    let report = CheckGroupReport {
        inputs: PresentationParams { m, n, r },
        presentation: PresentationParams::from(&p),
        order: p.order(),
        is_abelian: flags.is_abelian,
        is_cyclic: flags.is_cyclic,
        verdict: VerdictReport::from(&verdict),
        identity_certificate,
    };
    let human = render::check_group(&report);
    emit(json, "check-group", &report, human, start)
}

/// Splits the order list into `jobs` contiguous chunks, reports each chunk on
/// its own thread, and reassembles in place, so the result is identical to
/// the sequential scan for every thread count.
fn scan_parallel(
    max: u64,
    mode: ScanMode,
    bound: u64,
    jobs: usize,
) -> Result<Vec<OrderReport>, GroupError> {
    if jobs <= 1 {
        return scan_orders(max, mode, bound);
    }
    let orders: Vec<u64> = (1..max).filter(|&o| mode.includes(o)).collect();
    let mut slots: Vec<Option<Result<OrderReport, GroupError>>> = vec![None; orders.len()];
    let chunk = orders.len().div_ceil(jobs).max(1);
    std::thread::scope(|scope| {
        for (order_chunk, slot_chunk) in orders.chunks(chunk).zip(slots.chunks_mut(chunk)) {
            scope.spawn(move || {
                for (&order, slot) in order_chunk.iter().zip(slot_chunk.iter_mut()) {
                    *slot = Some(order_report(order, bound));
                }
            });
        }
    });
    slots
        .into_iter()
        .map(|slot| slot.expect("every slot is filled by its chunk's thread"))
        .collect()
}

fn scan_odd(max: u64, jobs: usize, include_even: bool, unsafe_max: Option<u64>, json: bool) -> u8 {
    let start = Instant::now();
    let bound = unsafe_max.unwrap_or(DESK_BOUND);
    if bound > DESK_BOUND {
        eprintln!(
            "warning: enumeration bound raised to {bound}; orders near the bound can be slow"
        );
    }
    if max > bound {
        return input_error(format!(
            "--max {max} exceeds the enumeration bound {bound}; raise it with --unsafe-max"
        ));
    }
    let mode = if include_even {
        ScanMode::NotDivisibleBy8
    } else {
        ScanMode::OddOnly
    };
    let reports = match scan_parallel(max, mode, bound, jobs) {
        Ok(r) => r,
        Err(e) => return input_error(e),
    };
    let report = ScanReport {
        max,
        mode: match mode {
            ScanMode::OddOnly => "odd-only",
            ScanMode::NotDivisibleBy8 => "not-divisible-by-8",
        }
        .to_owned(),
        bound,
        exceptional: exceptional_orders(&reports),
        orders: reports.iter().map(OrderReportJson::from).collect(),
    };
    let human = render::scan(&report);
    emit(json, "scan-odd", &report, human, start)
}

fn verify_identity(m: u64, n: u64, r: u64, verbose: bool, json: bool) -> u8 {
    let start = Instant::now();
    let p = match Presentation::validate(m, n, r) {
        Ok(p) => p,
        Err(e) => return input_error(e),
    };
    if p.n() < 2 {
        return input_error("the identity needs n >= 2: with n = 1 there is nothing to telescope");
    }
    let cert = match verify_telescoping(&p) {
        Ok(c) => c,
        Err(e) => return internal_error(e),
    };
    if !cert.matches {
        return internal_error(
            "telescoped element disagrees with the multiplied-out factor product",
        );
    }
    let report = IdentityReport::from_certificate(&cert, verbose);
    let human = render::identity(&report);
    emit(json, "verify-identity", &report, human, start)
}

/// Preset constructions paired with the generator exponent whose power of
/// zeta produces the embedded group's a-generator.
fn resolve_preset(name: &str) -> Option<(CyclicAlgebra, i64)> {
    match name {
        "63" => preset_order_63().ok().map(|alg| (alg, 3)),
        "117" => preset_order_117().ok().map(|alg| (alg, 3)),
        _ => {
            let index = name.strip_prefix("quaternion-")?.parse::<u64>().ok()?;
            preset_quaternion(index).ok().map(|alg| (alg, 1))
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn build_algebra(
    preset: Option<String>,
    k: Option<u64>,
    s: Option<u64>,
    omega_exp: Option<i64>,
    sample: u64,
    height: i64,
    seed: u64,
    json: bool,
) -> u8 {
    let start = Instant::now();
    let explicit = [k.is_some(), s.is_some(), omega_exp.is_some()];
    let (algebra, a_exp) = match (&preset, explicit) {
        (Some(name), [false, false, false]) => match resolve_preset(name) {
            Some(pair) => pair,
            None => {
                return input_error(format!(
                    "unknown preset '{name}': expected 63, 117, or quaternion-N with N >= 2"
                ))
            }
        },
        (None, [true, true, true]) => {
            let field = match CyclotomicField::new(k.unwrap()) {
                Ok(f) => f,
                Err(e) => return input_error(e),
            };
            let omega = field.zeta_pow(omega_exp.unwrap());
            match CyclicAlgebra::build(&field, s.unwrap(), &omega) {
                Ok(alg) => (alg, 1),
                Err(e) => return input_error(e),
            }
        }
        _ => {
            return input_error(
                "specify either --preset NAME or all of --k, --s, --omega-exp",
            )
        }
    };

    let center = algebra.center_probe();
    if !center.basis_commutes || center.dimension != center.expected_dimension {
        return internal_error("center certificate failed: fixed-field basis is not central");
    }

    let a = match algebra.embed(&algebra.field().zeta_pow(a_exp)) {
        Ok(a) => a,
        Err(e) => return internal_error(e),
    };
    let b = algebra.b();
    let embedding = match algebra.verify_group_embedding(&a, &b, DESK_BOUND as usize) {
        Ok(e) => e,
        Err(e) => return input_error(e),
    };
    if !embedding.twist_power_holds {
        return internal_error("the defining relation b^degree = omega failed to verify");
    }

    let probes = algebra.split_probe();
    let sampling = (sample > 0).then(|| algebra.division_sample(sample, height, seed));

    let report = AlgebraReport::new(&algebra, &center, &embedding, &probes, sampling.as_ref());
    let human = render::algebra(&report);
    emit(json, "build-algebra", &report, human, start)
}
