//! Serializable report types for the JSON output mode.
//!
//! Every command emits one [`Envelope`] wrapping a command-specific payload.
//! The payloads mirror the core certificate types field by field, with group
//!-ring and field elements rendered as display strings.  Reports are stable:
//! identical inputs (and seed) produce byte-identical JSON, so no wall-clock
//! data lives here.

use amitsur_core::algebra::{
    CenterCertificate, CyclicAlgebra, EmbeddedGroupKind, GroupEmbedding, SamplingReport,
    SplitProbeResult,
};
use amitsur_core::classify::{ClassReport, KnownStatus, OrderReport, Verdict, Witness};
use amitsur_core::group_ring::TelescopeCertificate;
use amitsur_core::groups::Presentation;
use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "amitsur-kit/1";

/// Top-level JSON document: schema tag, toolkit version, command echo, payload.
#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct Envelope<T> {
    pub schema: String,
    pub version: String,
    pub command: String,
    pub report: T,
}

impl<T> Envelope<T> {
    pub fn new(command: &str, report: T) -> Self {
        Envelope {
            schema: SCHEMA.to_owned(),
            version: env!("CARGO_PKG_VERSION").to_owned(),
            command: command.to_owned(),
            report,
        }
    }
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone, Copy)]
pub struct PresentationParams {
    pub m: u64,
    pub n: u64,
    pub r: u64,
}

impl From<&Presentation> for PresentationParams {
    fn from(p: &Presentation) -> Self {
        PresentationParams {
            m: p.m(),
            n: p.n(),
            r: p.r(),
        }
    }
}

/// Mirror of [`amitsur_core::classify::Witness`].
#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum WitnessReport {
    AbelianNoncyclic {
        m: u64,
        n: u64,
        gcd_mn: u64,
    },
    PrimePowerNoncyclic {
        prime: u64,
        exponent: u32,
        max_element_order: u64,
    },
    NotSylowCyclic {
        prime: u64,
        subgroup_order: u64,
        max_element_order: u64,
    },
    FullOrderAction {
        action_order: u64,
        exponent: u64,
    },
    PrimePowerSubaction {
        prime: u64,
        prime_power: u64,
        subaction: u64,
        subaction_order: u64,
    },
    SquarefreeExponent {
        exponent: u64,
    },
    DominantPrimeOrder {
        prime: u64,
        exponent: u32,
        smaller_primes: Vec<u64>,
    },
    SquarefreeOrder {
        order: u64,
    },
}

impl From<&Witness> for WitnessReport {
    fn from(w: &Witness) -> Self {
        match *w {
            Witness::AbelianNoncyclic { m, n, gcd_mn } => {
                WitnessReport::AbelianNoncyclic { m, n, gcd_mn }
            }
            Witness::PrimePowerNoncyclic {
                prime,
                exponent,
                max_element_order,
            } => WitnessReport::PrimePowerNoncyclic {
                prime,
                exponent,
                max_element_order,
            },
            Witness::NotSylowCyclic {
                prime,
                subgroup_order,
                max_element_order,
            } => WitnessReport::NotSylowCyclic {
                prime,
                subgroup_order,
                max_element_order,
            },
            Witness::FullOrderAction {
                action_order,
                exponent,
            } => WitnessReport::FullOrderAction {
                action_order,
                exponent,
            },
            Witness::PrimePowerSubaction {
                prime,
                prime_power,
                subaction,
                subaction_order,
            } => WitnessReport::PrimePowerSubaction {
                prime,
                prime_power,
                subaction,
                subaction_order,
            },
            Witness::SquarefreeExponent { exponent } => {
                WitnessReport::SquarefreeExponent { exponent }
            }
            Witness::DominantPrimeOrder {
                prime,
                exponent,
                ref smaller_primes,
            } => WitnessReport::DominantPrimeOrder {
                prime,
                exponent,
                smaller_primes: smaller_primes.clone(),
            },
            Witness::SquarefreeOrder { order } => WitnessReport::SquarefreeOrder { order },
        }
    }
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct VerdictReport {
    pub outcome: String,
    pub rule: Option<String>,
    pub witness: Option<WitnessReport>,
    pub known_status: Option<String>,
}

impl From<&Verdict> for VerdictReport {
    fn from(v: &Verdict) -> Self {
        VerdictReport {
            outcome: v.outcome.label().to_owned(),
            rule: v.rule.map(|r| r.id().to_owned()),
            witness: v.witness.as_ref().map(WitnessReport::from),
            known_status: v.known_status.map(|s| {
                match s {
                    KnownStatus::KnownAmitsur => "known-amitsur",
                    KnownStatus::Unknown => "unknown",
                }
                .to_owned()
            }),
        }
    }
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct FactorReport {
    pub index: u64,
    pub exponent: u64,
    pub vanishes: bool,
}

/// Mirror of [`TelescopeCertificate`], elements as display strings.
#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct IdentityReport {
    pub presentation: PresentationParams,
    pub action_order: u64,
    pub step_count: usize,
    pub telescoped: String,
    pub product: String,
    pub matches: bool,
    pub obstruction: bool,
    pub factors: Vec<FactorReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub steps: Option<Vec<String>>,
}

impl IdentityReport {
    pub fn from_certificate(cert: &TelescopeCertificate, verbose: bool) -> Self {
        IdentityReport {
            presentation: PresentationParams::from(&cert.presentation),
            action_order: cert.action_order,
            step_count: cert.steps.len() - 1,
            telescoped: cert.telescoped.to_string(),
            product: cert.product.to_string(),
            matches: cert.matches,
            obstruction: cert.obstruction,
            factors: cert
                .factors
                .iter()
                .map(|f| FactorReport {
                    index: f.index,
                    exponent: f.exponent,
                    vanishes: f.vanishes,
                })
                .collect(),
            steps: verbose.then(|| cert.steps.iter().map(|s| s.to_string()).collect()),
        }
    }
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct CheckGroupReport {
    pub inputs: PresentationParams,
    /// Canonical stored form (r reduced, trivial action normalized).
    pub presentation: PresentationParams,
    pub order: u64,
    pub is_abelian: bool,
    pub is_cyclic: bool,
    pub verdict: VerdictReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identity_certificate: Option<IdentityReport>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct ClassReportJson {
    pub presentation: PresentationParams,
    pub members: u64,
    pub cyclic: bool,
    pub sylow_cyclic: bool,
    pub verdict: VerdictReport,
}

impl From<&ClassReport> for ClassReportJson {
    fn from(c: &ClassReport) -> Self {
        ClassReportJson {
            presentation: PresentationParams::from(&c.presentation),
            members: c.members,
            cyclic: c.cyclic,
            sylow_cyclic: c.sylow_cyclic,
            verdict: VerdictReport::from(&c.verdict),
        }
    }
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct OrderReportJson {
    pub order: u64,
    pub exceptional: bool,
    /// Set when the order shape alone forced cyclic (no census needed).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order_verdict: Option<VerdictReport>,
    pub classes: Vec<ClassReportJson>,
}

impl From<&OrderReport> for OrderReportJson {
    fn from(r: &OrderReport) -> Self {
        OrderReportJson {
            order: r.order,
            exceptional: r.exceptional,
            order_verdict: r.order_verdict.as_ref().map(VerdictReport::from),
            classes: r.classes.iter().map(ClassReportJson::from).collect(),
        }
    }
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct ScanReport {
    pub max: u64,
    pub mode: String,
    pub bound: u64,
    pub exceptional: Vec<u64>,
    pub orders: Vec<OrderReportJson>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct SquareRootReport {
    pub prime: u64,
    pub element: String,
    pub min_poly: String,
    pub squares_to: i64,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct CenterReport {
    pub dimension: usize,
    pub expected_dimension: usize,
    pub basis_commutes: bool,
    pub square_roots: Vec<SquareRootReport>,
}

impl From<&CenterCertificate> for CenterReport {
    fn from(c: &CenterCertificate) -> Self {
        CenterReport {
            dimension: c.dimension,
            expected_dimension: c.expected_dimension,
            basis_commutes: c.basis_commutes,
            square_roots: c
                .central_square_roots
                .iter()
                .map(|r| SquareRootReport {
                    prime: r.prime,
                    element: r.element.to_string(),
                    min_poly: r.min_poly.to_string(),
                    squares_to: r.squares_to,
                })
                .collect(),
        }
    }
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
#[serde(tag = "shape", rename_all = "kebab-case")]
pub enum EmbeddingKindReport {
    Metacyclic { presentation: PresentationParams },
    Dicyclic { n: u64 },
    Unrecognized,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct EmbeddingReport {
    pub order: usize,
    pub a_order: u64,
    pub b_order: u64,
    pub twist_power_holds: bool,
    pub kind: EmbeddingKindReport,
}

impl From<&GroupEmbedding> for EmbeddingReport {
    fn from(e: &GroupEmbedding) -> Self {
        EmbeddingReport {
            order: e.order,
            a_order: e.a_order,
            b_order: e.b_order,
            twist_power_holds: e.twist_power_holds,
            kind: match &e.kind {
                EmbeddedGroupKind::Metacyclic { presentation } => {
                    EmbeddingKindReport::Metacyclic {
                        presentation: PresentationParams::from(presentation),
                    }
                }
                EmbeddedGroupKind::Dicyclic { n } => EmbeddingKindReport::Dicyclic { n: *n },
                EmbeddedGroupKind::Unrecognized => EmbeddingKindReport::Unrecognized,
            },
        }
    }
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct ProbeReport {
    pub label: String,
    pub singular: bool,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct SingularSampleJson {
    pub trial: u64,
    pub element: String,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct SamplingReportJson {
    pub trials: u64,
    pub height: i64,
    pub seed: u64,
    pub invertible: u64,
    pub singular: Vec<SingularSampleJson>,
}

impl From<&SamplingReport> for SamplingReportJson {
    fn from(s: &SamplingReport) -> Self {
        SamplingReportJson {
            trials: s.trials,
            height: s.height,
            seed: s.seed,
            invertible: s.invertible,
            singular: s
                .singular
                .iter()
                .map(|x| SingularSampleJson {
                    trial: x.trial,
                    element: x.element.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct AlgebraReport {
    pub conductor: u64,
    pub automorphism_exponent: u64,
    pub twist: String,
    pub degree: usize,
    pub total_dimension: usize,
    pub center: CenterReport,
    pub embedding: EmbeddingReport,
    pub split_probe: Vec<ProbeReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sampling: Option<SamplingReportJson>,
}

impl AlgebraReport {
    pub fn new(
        algebra: &CyclicAlgebra,
        center: &CenterCertificate,
        embedding: &GroupEmbedding,
        probes: &[SplitProbeResult],
        sampling: Option<&SamplingReport>,
    ) -> Self {
        AlgebraReport {
            conductor: algebra.conductor(),
            automorphism_exponent: algebra.automorphism().exponent(),
            twist: algebra.twist().to_string(),
            degree: algebra.degree(),
            total_dimension: algebra.total_dimension(),
            center: CenterReport::from(center),
            embedding: EmbeddingReport::from(embedding),
            split_probe: probes
                .iter()
                .map(|p| ProbeReport {
                    label: p.label.clone(),
                    singular: p.singular,
                })
                .collect(),
            sampling: sampling.map(SamplingReportJson::from),
        }
    }
}
