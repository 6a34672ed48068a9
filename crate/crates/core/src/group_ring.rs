//! Integer group ring `Z[G(m, n, r)]` and the telescoping identity behind
//! the full-order-action obstruction.
//!
//! In any division ring containing the group, `b^n = 1` with `b != 1`
//! forces `1 + b + ... + b^(n-1) = 0`. Conjugating by `a` and cancelling a
//! right factor of `b`, over and over, telescopes that relation down to the
//! ordered product
//!
//! ```text
//! (a^(r^(n-1) - 1) - 1) (a^(r^(n-2) - 1) - 1) ... (a^(r - 1) - 1)
//! ```
//!
//! which must therefore vanish in the division ring. Each factor is zero in
//! the group ring iff `r^i = 1 (mod m)`; if none vanishes, a product of
//! nonzero differences of group elements would be a zero divisor — ruling
//! out an embedding into any domain. [`verify_telescoping`] replays the
//! whole derivation formally in `Z[G]` and certifies that the telescoped
//! element equals the independently multiplied product.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::pow_mod;
use crate::groups::Presentation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupRingError {
    /// Operands belong to group rings over different presentations.
    MixedOwners,
    /// A term with b-degree zero blocks cancelling a right factor of `b`.
    NotRightDivisibleByB,
}

impl fmt::Display for GroupRingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupRingError::MixedOwners => {
                write!(f, "elements belong to different group rings")
            }
            GroupRingError::NotRightDivisibleByB => {
                write!(f, "element is not right-divisible by b")
            }
        }
    }
}

impl core::error::Error for GroupRingError {}

/// Finitely supported integer combination of normal forms `a^i b^j`.
///
/// Terms are keyed `(j, i)` — b-degree major — so the largest key gives the
/// b-degree and telescoping scans stay ordered. Zero coefficients are never
/// stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRingElement {
    group: Presentation,
    terms: BTreeMap<(u64, u64), BigInt>,
}

impl GroupRingElement {
    pub fn zero(group: &Presentation) -> Self {
        GroupRingElement {
            group: *group,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(group: &Presentation) -> Self {
        Self::monomial(group, 1, 0, 0)
    }

    /// `coeff * a^i b^j` with the exponents reduced into range.
    pub fn monomial(group: &Presentation, coeff: impl Into<BigInt>, i: u64, j: u64) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((j % group.n(), i % group.m()), coeff);
        }
        GroupRingElement {
            group: *group,
            terms,
        }
    }

    /// `1 + b + b^2 + ... + b^(n-1)`, the image of the relation `b^n = 1`.
    pub fn b_power_sum(group: &Presentation) -> Self {
        let mut terms = BTreeMap::new();
        for j in 0..group.n() {
            terms.insert((j, 0), BigInt::from(1));
        }
        GroupRingElement {
            group: *group,
            terms,
        }
    }

    pub fn group(&self) -> &Presentation {
        &self.group
    }

    /// Terms as `((i, j), coeff)` in `(j, i)` key order.
    pub fn terms(&self) -> impl Iterator<Item = ((u64, u64), &BigInt)> {
        self.terms.iter().map(|(&(j, i), c)| ((i, j), c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest `j` in the support; `None` for the zero element.
    pub fn b_degree(&self) -> Option<u64> {
        self.terms.keys().next_back().map(|&(j, _)| j)
    }

    fn same_owner(&self, other: &Self) -> Result<(), GroupRingError> {
        if self.group != other.group {
            return Err(GroupRingError::MixedOwners);
        }
        Ok(())
    }

    fn insert(terms: &mut BTreeMap<(u64, u64), BigInt>, key: (u64, u64), delta: BigInt) {
        if delta.is_zero() {
            return;
        }
        let entry = terms.entry(key).or_insert_with(BigInt::zero);
        *entry += delta;
        if entry.is_zero() {
            terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, GroupRingError> {
        self.same_owner(other)?;
        let mut terms = self.terms.clone();
        for (&key, coeff) in &other.terms {
            Self::insert(&mut terms, key, coeff.clone());
        }
        Ok(GroupRingElement {
            group: self.group,
            terms,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, GroupRingError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        GroupRingElement {
            group: self.group,
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }

    /// Bilinear extension of the group law `b^j a = a^(r^j) b^j`.
    pub fn mul(&self, other: &Self) -> Result<Self, GroupRingError> {
        self.same_owner(other)?;
        let g = &self.group;
        let mut terms = BTreeMap::new();
        for (&(j1, i1), c1) in &self.terms {
            let x = g.element(i1, j1);
            for (&(j2, i2), c2) in &other.terms {
                let z = g.mul(&x, &g.element(i2, j2)).expect("same owner");
                Self::insert(&mut terms, (z.j(), z.i()), c1 * c2);
            }
        }
        Ok(GroupRingElement {
            group: self.group,
            terms,
        })
    }

    /// `a^-1 * x * a`: each term `c a^i b^j` becomes `c a^(i + r^j - 1) b^j`.
    /// Terms with `j = 0` are fixed.
    pub fn conjugate_by_a(&self) -> Self {
        let g = &self.group;
        let m = g.m() as u128;
        let mut terms = BTreeMap::new();
        for (&(j, i), coeff) in &self.terms {
            let twist = pow_mod(g.r(), j, g.m()) as u128;
            let ni = ((i as u128 + twist + m - 1) % m) as u64;
            // i -> i + const is a bijection per fixed j: no key collisions
            terms.insert((j, ni), coeff.clone());
        }
        GroupRingElement {
            group: self.group,
            terms,
        }
    }

    /// One telescoping move: `(conjugate_by_a(x) - x) * b^-1`, valid when
    /// every term of the difference carries a factor of `b`. Constants are
    /// fixed by conjugation, so a nonzero constant input can never shed a
    /// `b` and is rejected up front. The b-degree strictly decreases.
    pub fn telescope_step(&self) -> Result<Self, GroupRingError> {
        if self.b_degree() == Some(0) {
            return Err(GroupRingError::NotRightDivisibleByB);
        }
        let diff = self.conjugate_by_a().sub(self).expect("same owner");
        if diff.terms.keys().any(|&(j, _)| j == 0) {
            return Err(GroupRingError::NotRightDivisibleByB);
        }
        let terms = diff
            .terms
            .into_iter()
            .map(|((j, i), c)| ((j - 1, i), c))
            .collect();
        Ok(GroupRingElement {
            group: self.group,
            terms,
        })
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // descending (j, i): highest b-degree first
        for (idx, (&(j, i), coeff)) in self.terms.iter().rev().enumerate() {
            let negative = coeff.sign() == num_bigint::Sign::Minus;
            let magnitude = coeff.magnitude();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = magnitude == &num_bigint::BigUint::from(1u32);
            let constant = i == 0 && j == 0;
            if !unit_coeff || constant {
                write!(f, "{magnitude}")?;
                if !constant {
                    write!(f, " ")?;
                }
            }
            match (i, j) {
                (0, 0) => {}
                (0, 1) => write!(f, "b")?,
                (0, _) => write!(f, "b^{j}")?,
                (1, 0) => write!(f, "a")?,
                (_, 0) => write!(f, "a^{i}")?,
                (1, 1) => write!(f, "a b")?,
                (1, _) => write!(f, "a b^{j}")?,
                (_, 1) => write!(f, "a^{i} b")?,
                (_, _) => write!(f, "a^{i} b^{j}")?,
            }
        }
        Ok(())
    }
}

/// One factor `a^exponent - 1` of the telescoped product, for `index` in
/// `n-1 .. 1`, where `exponent = (r^index - 1) mod m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TelescopeFactor {
    pub index: u64,
    pub exponent: u64,
    /// The factor is zero in `Z[G]`, i.e. `r^index = 1 (mod m)`.
    pub vanishes: bool,
}

/// Transcript of the telescoping derivation for one presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TelescopeCertificate {
    pub presentation: Presentation,
    /// Element snapshots: the starting power sum, then one per step.
    pub steps: Vec<GroupRingElement>,
    /// Final element after `n - 1` telescoping steps.
    pub telescoped: GroupRingElement,
    /// The ordered product of the factors, multiplied out independently.
    pub product: GroupRingElement,
    /// `telescoped == product`; anything else is an internal inconsistency.
    pub matches: bool,
    /// Multiplicative order of `r` mod `m`.
    pub action_order: u64,
    /// Factors in product order (descending index).
    pub factors: Vec<TelescopeFactor>,
    /// All factors nonzero yet their product must vanish in any embedding
    /// domain: the group embeds in no division ring.
    pub obstruction: bool,
}

/// Replays the telescoping derivation in `Z[G]`: starts from the b-power
/// sum, applies [`GroupRingElement::telescope_step`] `n - 1` times, and
/// checks the result against the ordered factor product.
pub fn verify_telescoping(
    g: &Presentation,
) -> Result<TelescopeCertificate, GroupRingError> {
    let mut current = GroupRingElement::b_power_sum(g);
    let mut steps = Vec::with_capacity(g.n() as usize);
    steps.push(current.clone());
    for _ in 1..g.n() {
        current = current.telescope_step()?;
        steps.push(current.clone());
    }

    let mut factors = Vec::new();
    let mut product = GroupRingElement::one(g);
    for index in (1..g.n()).rev() {
        let exponent = (pow_mod(g.r(), index, g.m()) + g.m() - 1 % g.m()) % g.m();
        let vanishes = exponent == 0;
        factors.push(TelescopeFactor {
            index,
            exponent,
            vanishes,
        });
        let factor = GroupRingElement::monomial(g, 1, exponent, 0)
            .sub(&GroupRingElement::one(g))
            .expect("same owner");
        product = product.mul(&factor).expect("same owner");
    }

    let matches = current == product;
    let obstruction =
        matches && !factors.is_empty() && factors.iter().all(|f| !f.vanishes);
    Ok(TelescopeCertificate {
        presentation: *g,
        telescoped: current,
        product,
        matches,
        action_order: crate::arith::mult_order(g.r(), g.m()).expect("r is a unit"),
        factors,
        obstruction,
        steps,
    })
}
