//! Plain-text renderers for the JSON report payloads.
//!
//! Each renderer consumes the same report struct the JSON mode serializes,
//! so both output modes always describe the same data.  All output is ASCII.

use crate::report::{
    AlgebraReport, CheckGroupReport, EmbeddingKindReport, IdentityReport, ScanReport,
    VerdictReport, WitnessReport,
};
use std::fmt::Write;

fn counted(n: usize, one: &str, many: &str) -> String {
    format!("{n} {}", if n == 1 { one } else { many })
}

fn witness_sentence(w: &WitnessReport) -> String {
    match w {
        WitnessReport::AbelianNoncyclic { m, n, gcd_mn } => format!(
            "trivial action with gcd({m}, {n}) = {gcd_mn} > 1: abelian but not cyclic"
        ),
        WitnessReport::PrimePowerNoncyclic {
            prime,
            exponent,
            max_element_order,
        } => format!(
            "order {prime}^{exponent} but the largest element order is {max_element_order}"
        ),
        WitnessReport::NotSylowCyclic {
            prime,
            subgroup_order,
            max_element_order,
        } => format!(
            "the Sylow {prime}-subgroup of order {subgroup_order} has no element of order above {max_element_order}"
        ),
        WitnessReport::FullOrderAction {
            action_order,
            exponent,
        } => format!(
            "conjugation by b acts on <a> with order {action_order}, the full exponent n = {exponent}: no telescoping factor vanishes"
        ),
        WitnessReport::PrimePowerSubaction {
            prime,
            prime_power,
            subaction,
            subaction_order,
        } => format!(
            "the {prime}-part of <b> acts faithfully: r^(n/{prime_power}) = {subaction} has order {subaction_order} mod m"
        ),
        WitnessReport::SquarefreeExponent { exponent } => format!(
            "n = {exponent} is squarefree, forcing b central and the group cyclic"
        ),
        WitnessReport::DominantPrimeOrder {
            prime,
            exponent,
            smaller_primes,
        } => {
            let qs: Vec<String> = smaller_primes.iter().map(u64::to_string).collect();
            format!(
                "order {prime}^{exponent} * {}: every other prime factor is below {prime}",
                qs.join(" * ")
            )
        }
        WitnessReport::SquarefreeOrder { order } => {
            format!("order {order} is squarefree")
        }
    }
}

fn verdict_lines(out: &mut String, v: &VerdictReport, indent: &str) {
    let status = match v.known_status.as_deref() {
        Some(s) => format!(" ({s})"),
        None => String::new(),
    };
    let _ = writeln!(out, "{indent}verdict: {}{status}", v.outcome);
    if let Some(rule) = &v.rule {
        let _ = writeln!(out, "{indent}rule: {rule}");
    }
    if let Some(w) = &v.witness {
        let _ = writeln!(out, "{indent}witness: {}", witness_sentence(w));
    }
}

pub fn check_group(report: &CheckGroupReport) -> String {
    let mut out = String::new();
    let p = &report.presentation;
    let _ = writeln!(
        out,
        "G({}, {}, {}): order {}, {}, {}",
        p.m,
        p.n,
        p.r,
        report.order,
        if report.is_cyclic {
            "cyclic"
        } else if report.is_abelian {
            "abelian"
        } else {
            "nonabelian"
        },
        if report.is_abelian {
            "trivial action"
        } else {
            "nontrivial action"
        },
    );
    if report.inputs != *p {
        let i = &report.inputs;
        let _ = writeln!(
            out,
            "  (input G({}, {}, {}) normalized to the form above)",
            i.m, i.n, i.r
        );
    }
    verdict_lines(&mut out, &report.verdict, "");
    if let Some(cert) = &report.identity_certificate {
        let _ = writeln!(
            out,
            "identity certificate: {} factors, all nonzero, product vanishes in Z[G]",
            cert.factors.len()
        );
    }
    out
}

pub fn scan(report: &ScanReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "scanned {} orders below {} (mode {}, bound {})",
        report.orders.len(),
        report.max,
        report.mode,
        report.bound
    );
    for order in &report.orders {
        if let Some(v) = &order.order_verdict {
            let rule = v.rule.as_deref().unwrap_or("-");
            let _ = writeln!(out, "  {:>5}  forced cyclic by order shape ({rule})", order.order);
            continue;
        }
        let cyclic = order.classes.iter().filter(|c| c.cyclic).count();
        let blocked = order
            .classes
            .iter()
            .filter(|c| c.verdict.outcome == "not-amitsur")
            .count();
        let candidates = order
            .classes
            .iter()
            .filter(|c| !c.cyclic && c.verdict.outcome == "candidate")
            .count();
        let mark = if order.exceptional { "  *" } else { "" };
        let _ = writeln!(
            out,
            "  {:>5}  {}: {} cyclic, {} ruled out, {}{mark}",
            order.order,
            counted(order.classes.len(), "class", "classes"),
            cyclic,
            blocked,
            counted(candidates, "noncyclic candidate", "noncyclic candidates"),
        );
        if order.exceptional {
            for class in &order.classes {
                if !class.cyclic && class.verdict.outcome == "candidate" {
                    let p = &class.presentation;
                    let status = class.verdict.known_status.as_deref().unwrap_or("unknown");
                    let _ = writeln!(
                        out,
                        "         candidate G({}, {}, {}) [{status}]",
                        p.m, p.n, p.r
                    );
                }
            }
        }
    }
    if report.exceptional.is_empty() {
        let _ = writeln!(out, "exceptional orders below {}: none", report.max);
    } else {
        let list: Vec<String> = report.exceptional.iter().map(u64::to_string).collect();
        let _ = writeln!(
            out,
            "exceptional orders below {}: {}",
            report.max,
            list.join(", ")
        );
    }
    out
}

pub fn identity(report: &IdentityReport) -> String {
    let mut out = String::new();
    let p = &report.presentation;
    let _ = writeln!(
        out,
        "G({}, {}, {}): action order {}, telescoping step{} taken: {}",
        p.m,
        p.n,
        p.r,
        report.action_order,
        if report.step_count == 1 { "" } else { "s" },
        report.step_count
    );
    if let Some(steps) = &report.steps {
        let _ = writeln!(out, "steps:");
        for (i, step) in steps.iter().enumerate() {
            let _ = writeln!(out, "  [{i}] {step}");
        }
    }
    let _ = writeln!(out, "telescoped: {}", report.telescoped);
    let _ = writeln!(out, "product:    {}", report.product);
    let _ = writeln!(
        out,
        "factors (product order, exponent (r^i - 1) mod m):"
    );
    for f in &report.factors {
        let note = if f.vanishes { "  <- vanishes" } else { "" };
        let _ = writeln!(out, "  i = {:>2}: exponent {}{note}", f.index, f.exponent);
    }
    let _ = writeln!(
        out,
        "telescoped form matches factor product: {}",
        if report.matches { "yes" } else { "NO" }
    );
    if report.obstruction {
        let count = report.factors.len();
        let _ = writeln!(
            out,
            "obstruction: every factor ({count} of them) is nonzero in Z[G], yet the product is zero;"
        );
        let _ = writeln!(
            out,
            "  no division ring can contain this group"
        );
    } else if let Some(f) = report.factors.iter().find(|f| f.vanishes) {
        let _ = writeln!(
            out,
            "no obstruction: the factor at i = {} already vanishes in Z[G]",
            f.index
        );
    } else {
        let _ = writeln!(out, "no obstruction: no factors to multiply");
    }
    out
}

pub fn algebra(report: &AlgebraReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "cyclic algebra over Q(zeta_{}): sigma maps z to z^{}, twist omega = {}",
        report.conductor, report.automorphism_exponent, report.twist
    );
    let _ = writeln!(
        out,
        "degree {} over the fixed field; dimension {} over Q",
        report.degree, report.total_dimension
    );
    let c = &report.center;
    let _ = writeln!(
        out,
        "center: dimension {} (expected {}), commutes with generators: {}",
        c.dimension,
        c.expected_dimension,
        if c.basis_commutes { "yes" } else { "NO" }
    );
    for root in &c.square_roots {
        let _ = writeln!(
            out,
            "  central square root of {}: {} (min poly {})",
            root.squares_to, root.element, root.min_poly
        );
    }
    let e = &report.embedding;
    let shape = match &e.kind {
        EmbeddingKindReport::Metacyclic { presentation } => format!(
            "metacyclic G({}, {}, {})",
            presentation.m, presentation.n, presentation.r
        ),
        EmbeddingKindReport::Dicyclic { n } => format!("dicyclic of index {n}"),
        EmbeddingKindReport::Unrecognized => "unrecognized".to_owned(),
    };
    let _ = writeln!(
        out,
        "embedded group: order {}, |a| = {}, |b| = {}, shape {}",
        e.order, e.a_order, e.b_order, shape
    );
    let _ = writeln!(
        out,
        "  b^degree equals omega: {}",
        if e.twist_power_holds { "yes" } else { "NO" }
    );
    let _ = writeln!(out, "split probe:");
    for probe in &report.split_probe {
        let _ = writeln!(
            out,
            "  {}: {}",
            probe.label,
            if probe.singular { "singular" } else { "invertible" }
        );
    }
    if let Some(s) = &report.sampling {
        let _ = writeln!(
            out,
            "sampling: {} trials at height {} (seed {}): {} invertible, {} singular",
            s.trials,
            s.height,
            s.seed,
            s.invertible,
            s.singular.len()
        );
        if !s.singular.is_empty() {
            let _ = writeln!(
                out,
                "EXTRAORDINARY: nonzero singular elements in a presumed division algebra:"
            );
            for hit in &s.singular {
                let _ = writeln!(out, "  trial {}: {}", hit.trial, hit.element);
            }
        }
    }
    out
}
