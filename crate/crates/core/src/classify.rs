//! Necessary conditions for a finite group to embed in the multiplicative
//! group of a division ring ("Amitsur groups").
//!
//! Every rule here is an obstruction or a forced conclusion, never a proof
//! of embeddability:
//!
//! - an abelian subgroup of a division ring is cyclic;
//! - a p-subgroup is cyclic, or dicyclic when p = 2;
//! - a group of order not divisible by 8 must be Sylow-cyclic;
//! - in a metacyclic presentation, the conjugation action of `b` on `<a>`
//!   cannot have order exactly `n` (the telescoping identity in the group
//!   ring; see [`crate::group_ring`]), and more finely the action restricted
//!   to each prime-power part of `<b>` cannot be faithful;
//! - when `n` is square-free the whole of `<b>` would have to be central,
//!   so the group must be cyclic;
//! - an order of the shape `p^t * q_1 ... q_k` with every `q_i < p` (in
//!   particular any square-free order) admits only cyclic candidates.
//!
//! A group on which no rule fires is a `Candidate`: "no obstruction found",
//! which is weaker than "embeddable". The two noncyclic groups known to
//! embed, of orders 63 and 117, are carried as a data table and verified
//! constructively in [`crate::algebra`].

use alloc::vec::Vec;
use core::fmt;

use crate::arith::{self, gcd, mult_order, pow_mod};
use crate::groups::{are_isomorphic, enumerate_presentations, GroupError, Presentation};
use crate::DESK_BOUND;

/// Noncyclic presentations known to embed in a division ring, as `(m, n, r)`.
/// Membership is tested up to isomorphism, not literal parameter equality.
pub const KNOWN_AMITSUR: [(u64, u64, u64); 2] = [(7, 9, 2), (13, 9, 9)];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Outcome {
    /// An obstruction fired: the group embeds in no division ring.
    NotAmitsur,
    /// Any embeddable group of this shape must be cyclic.
    ForcedCyclic,
    /// No obstruction found. Not a proof of embeddability.
    Candidate,
}

impl Outcome {
    pub fn label(self) -> &'static str {
        match self {
            Outcome::NotAmitsur => "not-amitsur",
            Outcome::ForcedCyclic => "forced-cyclic",
            Outcome::Candidate => "candidate",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KnownStatus {
    /// In the built-in table of constructively embeddable groups,
    /// or cyclic (roots of unity embed in any field).
    KnownAmitsur,
    /// Candidate with no construction on record.
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Rule {
    AbelianNoncyclic,
    PrimePowerNoncyclic,
    NotSylowCyclic,
    FullOrderAction,
    PrimePowerSubaction,
    SquarefreeExponent,
    DominantPrimeOrder,
    SquarefreeOrder,
}

impl Rule {
    pub fn id(self) -> &'static str {
        match self {
            Rule::AbelianNoncyclic => "abelian-noncyclic",
            Rule::PrimePowerNoncyclic => "prime-power-noncyclic",
            Rule::NotSylowCyclic => "not-sylow-cyclic",
            Rule::FullOrderAction => "full-order-action",
            Rule::PrimePowerSubaction => "prime-power-subaction",
            Rule::SquarefreeExponent => "squarefree-exponent",
            Rule::DominantPrimeOrder => "dominant-prime-order",
            Rule::SquarefreeOrder => "squarefree-order",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// The checkable parameters behind a fired rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Trivial action (`r = 1`) but `gcd(m, n) > 1`.
    AbelianNoncyclic { m: u64, n: u64, gcd_mn: u64 },
    /// Prime-power order with no element of full order, and not dicyclic.
    PrimePowerNoncyclic {
        prime: u64,
        exponent: u32,
        max_element_order: u64,
    },
    /// The Sylow subgroup for `prime` has no element of full order.
    NotSylowCyclic {
        prime: u64,
        subgroup_order: u64,
        max_element_order: u64,
    },
    /// `r` has order exactly `n` in the units mod `m`.
    FullOrderAction { action_order: u64, exponent: u64 },
    /// `s = r^(n / l^t)` has order exactly `l^t` mod `m`: the action of the
    /// `l`-part of `<b>` on `<a>` is faithful.
    PrimePowerSubaction {
        prime: u64,
        prime_power: u64,
        subaction: u64,
        subaction_order: u64,
    },
    /// `n` square-free forces `b` central, hence the group cyclic.
    SquarefreeExponent { exponent: u64 },
    /// Order `p^t * q_1 ... q_k` with `k >= 1` and all `q_i < p`.
    DominantPrimeOrder {
        prime: u64,
        exponent: u32,
        smaller_primes: Vec<u64>,
    },
    /// Square-free order (covers prime orders, where no smaller prime exists).
    SquarefreeOrder { order: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    /// The rule reported for the outcome; `None` for a Candidate or for a
    /// cyclic group no rule needed to touch.
    pub rule: Option<Rule>,
    pub witness: Option<Witness>,
    /// Only set on non-obstruction outcomes.
    pub known_status: Option<KnownStatus>,
}

fn fired(outcome: Outcome, rule: Rule, witness: Witness) -> Verdict {
    Verdict {
        outcome,
        rule: Some(rule),
        witness: Some(witness),
        known_status: None,
    }
}

/// Abelian but noncyclic: no division ring has such a subgroup.
pub fn rule_abelian_noncyclic(g: &Presentation) -> Option<Verdict> {
    let flags = g.structure_flags();
    if !flags.is_abelian || flags.is_cyclic {
        return None;
    }
    Some(fired(
        Outcome::NotAmitsur,
        Rule::AbelianNoncyclic,
        Witness::AbelianNoncyclic {
            m: g.m(),
            n: g.n(),
            gcd_mn: gcd(g.m(), g.n()),
        },
    ))
}

/// An embeddable p-group is cyclic (p odd) or cyclic/dicyclic (p = 2).
pub fn rule_prime_power(g: &Presentation) -> Option<Verdict> {
    let (prime, exponent) = arith::factorize(g.order())
        .expect("order >= 1")
        .is_prime_power()?;
    if g.structure_flags().is_cyclic {
        return None;
    }
    if prime == 2 && g.is_dicyclic() {
        return None;
    }
    let max_element_order = g.elements().map(|x| x.order()).max().unwrap_or(1);
    Some(fired(
        Outcome::NotAmitsur,
        Rule::PrimePowerNoncyclic,
        Witness::PrimePowerNoncyclic {
            prime,
            exponent,
            max_element_order,
        },
    ))
}

/// When 8 does not divide the order, an embeddable group is Sylow-cyclic.
pub fn rule_not_sylow_cyclic(g: &Presentation) -> Option<Verdict> {
    if g.order() % 8 == 0 {
        return None;
    }
    let (prime, subgroup_order, max_element_order) = g.sylow_cyclic_witness()?;
    Some(fired(
        Outcome::NotAmitsur,
        Rule::NotSylowCyclic,
        Witness::NotSylowCyclic {
            prime,
            subgroup_order,
            max_element_order,
        },
    ))
}

/// The conjugation action of `b` on `<a>` cannot have order exactly `n`:
/// in a division ring the telescoped product of `a^(r^i - 1) - 1` over
/// `i = n-1 .. 1` vanishes, so some factor must (full order means none does).
pub fn rule_full_order_action(g: &Presentation) -> Option<Verdict> {
    if g.n() <= 1 {
        return None;
    }
    let action_order = mult_order(g.r(), g.m()).expect("r is a unit mod m");
    if action_order != g.n() {
        return None;
    }
    Some(fired(
        Outcome::NotAmitsur,
        Rule::FullOrderAction,
        Witness::FullOrderAction {
            action_order,
            exponent: g.n(),
        },
    ))
}

/// Per prime power `l^t` exactly dividing `n`: the subgroup generated by
/// `a` and `c = b^(n / l^t)` is metacyclic with action `s = r^(n / l^t)`,
/// so by the full-order rule `s` cannot have order `l^t`.
pub fn rule_prime_power_subaction(g: &Presentation) -> Option<Verdict> {
    let n = g.n();
    if n <= 1 {
        return None;
    }
    let fact = arith::factorize(n).expect("n >= 1");
    for &(prime, t) in fact.factors() {
        let prime_power = prime.pow(t);
        let subaction = pow_mod(g.r(), n / prime_power, g.m());
        let subaction_order = mult_order(subaction, g.m()).expect("power of a unit");
        if subaction_order == prime_power {
            return Some(fired(
                Outcome::NotAmitsur,
                Rule::PrimePowerSubaction,
                Witness::PrimePowerSubaction {
                    prime,
                    prime_power,
                    subaction,
                    subaction_order,
                },
            ));
        }
    }
    None
}

/// Square-free `n` forces every prime-part of `<b>` to act trivially, so
/// `b` is central and an embeddable group would be abelian, hence cyclic.
/// Fires only on noncyclic groups (for cyclic ones there is nothing to say).
pub fn rule_squarefree_exponent(g: &Presentation) -> Option<Verdict> {
    if !arith::is_squarefree(g.n()) || g.structure_flags().is_cyclic {
        return None;
    }
    Some(fired(
        Outcome::ForcedCyclic,
        Rule::SquarefreeExponent,
        Witness::SquarefreeExponent { exponent: g.n() },
    ))
}

/// Order-level rule: `|G| = p^t * q_1 ... q_k` with `k >= 1` and every
/// `q_i < p` (Hall-subgroup induction) forces cyclic; so does any
/// square-free order. Returns `None` below 2.
pub fn rule_order_forces_cyclic(order: u64) -> Option<Verdict> {
    if order < 2 {
        return None;
    }
    let fact = arith::factorize(order).expect("order >= 2");
    let factors = fact.factors();
    let &(prime, exponent) = factors.last().expect("order >= 2");
    let smaller_primes: Vec<u64> = factors[..factors.len() - 1]
        .iter()
        .map(|&(q, _)| q)
        .collect();
    let tail_squarefree = factors[..factors.len() - 1].iter().all(|&(_, e)| e == 1);
    if !smaller_primes.is_empty() && tail_squarefree {
        return Some(fired(
            Outcome::ForcedCyclic,
            Rule::DominantPrimeOrder,
            Witness::DominantPrimeOrder {
                prime,
                exponent,
                smaller_primes,
            },
        ));
    }
    if fact.is_squarefree() {
        return Some(fired(
            Outcome::ForcedCyclic,
            Rule::SquarefreeOrder,
            Witness::SquarefreeOrder { order },
        ));
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Step {
    Abelian,
    PrimePower,
    SylowCyclic,
    FullOrder,
    Subaction,
    SquarefreeExp,
    OrderShape,
}

const DEFAULT_STEPS: [Step; 7] = [
    Step::Abelian,
    Step::PrimePower,
    Step::SylowCyclic,
    Step::FullOrder,
    Step::Subaction,
    Step::SquarefreeExp,
    Step::OrderShape,
];

fn run_step(step: Step, g: &Presentation) -> Option<Verdict> {
    match step {
        Step::Abelian => rule_abelian_noncyclic(g),
        Step::PrimePower => rule_prime_power(g),
        Step::SylowCyclic => rule_not_sylow_cyclic(g),
        Step::FullOrder => rule_full_order_action(g),
        Step::Subaction => rule_prime_power_subaction(g),
        Step::SquarefreeExp => rule_squarefree_exponent(g),
        Step::OrderShape => rule_order_forces_cyclic(g.order()),
    }
}

/// Every rule is evaluated; obstructions outrank forced-cyclic conclusions
/// regardless of position, so the outcome does not depend on the step
/// order. The reported rule is the first (in `steps`) of the winning kind.
fn classify_with_steps(g: &Presentation, steps: &[Step]) -> Verdict {
    let fired: Vec<Verdict> = steps.iter().filter_map(|&s| run_step(s, g)).collect();
    let cyclic = g.structure_flags().is_cyclic;
    if let Some(v) = fired.iter().find(|v| v.outcome == Outcome::NotAmitsur) {
        return v.clone();
    }
    if let Some(v) = fired.iter().find(|v| v.outcome == Outcome::ForcedCyclic) {
        let mut v = v.clone();
        v.known_status = cyclic.then_some(KnownStatus::KnownAmitsur);
        return v;
    }
    if cyclic {
        return Verdict {
            outcome: Outcome::ForcedCyclic,
            rule: None,
            witness: None,
            known_status: Some(KnownStatus::KnownAmitsur),
        };
    }
    Verdict {
        outcome: Outcome::Candidate,
        rule: None,
        witness: None,
        known_status: Some(known_amitsur_status(g)),
    }
}

fn known_amitsur_status(g: &Presentation) -> KnownStatus {
    for &(m, n, r) in KNOWN_AMITSUR.iter() {
        let entry = Presentation::validate(m, n, r).expect("table entries are valid");
        if g.order() == entry.order()
            && are_isomorphic(g, &entry, DESK_BOUND).unwrap_or(false)
        {
            return KnownStatus::KnownAmitsur;
        }
    }
    KnownStatus::Unknown
}

/// Runs every rule against one presentation and resolves the verdict.
pub fn classify_presentation(g: &Presentation) -> Verdict {
    classify_with_steps(g, &DEFAULT_STEPS)
}

/// One isomorphism class inside an [`OrderReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    pub presentation: Presentation,
    /// Number of presentations of this order in the class.
    pub members: u64,
    pub cyclic: bool,
    pub sylow_cyclic: bool,
    pub verdict: Verdict,
}

/// Per-order census: either the order shape alone already forces cyclic
/// (`order_verdict` set, no classes enumerated) or every metacyclic class
/// is listed with its verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderReport {
    pub order: u64,
    pub order_verdict: Option<Verdict>,
    pub classes: Vec<ClassReport>,
    /// A noncyclic class survived as Candidate.
    pub exceptional: bool,
}

pub fn order_report(order: u64, bound: u64) -> Result<OrderReport, GroupError> {
    if let Some(v) = rule_order_forces_cyclic(order) {
        return Ok(OrderReport {
            order,
            order_verdict: Some(v),
            classes: Vec::new(),
            exceptional: false,
        });
    }
    let mut classes = Vec::new();
    let mut exceptional = false;
    for class in enumerate_presentations(order, bound)? {
        let verdict = classify_presentation(&class.representative);
        let cyclic = class.representative.structure_flags().is_cyclic;
        if !cyclic && verdict.outcome == Outcome::Candidate {
            exceptional = true;
        }
        classes.push(ClassReport {
            presentation: class.representative,
            members: class.members,
            cyclic,
            sylow_cyclic: class.sylow_cyclic,
            verdict,
        });
    }
    Ok(OrderReport {
        order,
        order_verdict: None,
        classes,
        exceptional,
    })
}

/// Which orders a scan visits. Beyond orders divisible by 8 the metacyclic
/// census stops being exhaustive for embeddability questions (dicyclic-rich
/// territory), so that regime is out of scope.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanMode {
    OddOnly,
    NotDivisibleBy8,
}

impl ScanMode {
    pub fn includes(self, order: u64) -> bool {
        match self {
            ScanMode::OddOnly => order % 2 == 1,
            ScanMode::NotDivisibleBy8 => order % 8 != 0,
        }
    }
}

/// Census of every included order below `max`, ascending.
pub fn scan_orders(
    max: u64,
    mode: ScanMode,
    bound: u64,
) -> Result<Vec<OrderReport>, GroupError> {
    if max > bound {
        return Err(GroupError::OrderTooLarge { order: max, bound });
    }
    (1..max)
        .filter(|&order| mode.includes(order))
        .map(|order| order_report(order, bound))
        .collect()
}

pub fn exceptional_orders(reports: &[OrderReport]) -> Vec<u64> {
    reports
        .iter()
        .filter(|r| r.exceptional)
        .map(|r| r.order)
        .collect()
}
