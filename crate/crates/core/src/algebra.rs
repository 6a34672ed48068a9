//! Cyclic algebras (L/F, sigma, omega) over cyclotomic fields.
//!
//! For L = Q(zeta_k), a Galois automorphism sigma of order d, and a nonzero
//! twist omega fixed by sigma, the algebra is L + Lb + ... + Lb^(d-1) with
//!
//!   b^d = omega,        b * l = sigma(l) * b   for all l in L,
//!
//! an F-algebra of dimension d^2 over the fixed field F = L^sigma, hence of
//! dimension d * phi(k) over Q.  The toolkit uses these to realize finite
//! groups inside (conjecturally division) algebras: the degree-3 algebras on
//! Q(zeta_21) and Q(zeta_39) embed the exceptional metacyclic groups of
//! orders 63 and 117, and the degree-2 construction on Q(zeta_2n) with
//! omega = -1 embeds the dicyclic groups.
//!
//! Inverses are computed from the regular representation: left multiplication
//! by a fixed element is a Q-linear map, and solving it against 1 either
//! produces the inverse or certifies a zero divisor.  The latter is loud and
//! extraordinary for the division presets, and expected for the omega = 1
//! control, which splits.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith;
use crate::cyclotomic::{
    quadratic_gauss_sum, CyclotomicError, CyclotomicField, CyclotomicNumber, GaloisAutomorphism,
    RatPolynomial,
};
use crate::groups::Presentation;
use crate::linalg;
use crate::rng::SplitMix64;

/// Errors for algebra construction and arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraError {
    /// Propagated cyclotomic-field error.
    Field(CyclotomicError),
    /// The twist is not fixed by the automorphism, so b^d = omega would not
    /// be compatible with the commutation rule.
    TwistNotFixed,
    /// The twist is zero, so b would not be a unit.
    TwistNotInvertible,
    /// Binary operation on elements of different algebras.
    MixedOwners,
    /// Inverse of zero requested.
    ZeroInput,
    /// A nonzero element with singular regular representation: a zero
    /// divisor.  Expected only in split (non-division) algebras.
    SingularElement,
    /// Group closure grew past the requested bound.
    ClosureExceedsBound { bound: usize },
    /// Dicyclic presets need index at least 2.
    QuaternionIndexTooSmall { n: u64 },
}

impl From<CyclotomicError> for AlgebraError {
    fn from(e: CyclotomicError) -> Self {
        AlgebraError::Field(e)
    }
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::Field(e) => write!(f, "{e}"),
            AlgebraError::TwistNotFixed => write!(f, "twist is not fixed by the automorphism"),
            AlgebraError::TwistNotInvertible => write!(f, "twist must be nonzero"),
            AlgebraError::MixedOwners => write!(f, "elements belong to different algebras"),
            AlgebraError::ZeroInput => write!(f, "zero has no inverse"),
            AlgebraError::SingularElement => {
                write!(f, "nonzero element is a zero divisor (algebra is not division)")
            }
            AlgebraError::ClosureExceedsBound { bound } => {
                write!(f, "group closure exceeded {bound} elements")
            }
            AlgebraError::QuaternionIndexTooSmall { n } => {
                write!(f, "dicyclic index {n} is below 2")
            }
        }
    }
}

impl core::error::Error for AlgebraError {
    fn source(&self) -> Option<&(dyn core::error::Error + 'static)> {
        match self {
            AlgebraError::Field(e) => Some(e),
            _ => None,
        }
    }
}

#[derive(Debug)]
struct AlgebraData {
    field: CyclotomicField,
    sigma: GaloisAutomorphism,
    degree: usize,
    omega: CyclotomicNumber,
    // sigma_powers[i] sends zeta to zeta^(s^i); used for b^i * l = sigma^i(l) b^i
    sigma_powers: Vec<GaloisAutomorphism>,
    center_basis: Vec<CyclotomicNumber>,
}

/// A cyclic algebra (Q(zeta_k)/F, sigma, omega).  Cheap to clone.
#[derive(Clone, Debug)]
pub struct CyclicAlgebra {
    data: Arc<AlgebraData>,
}

impl CyclicAlgebra {
    /// Builds the algebra for zeta -> zeta^s on `field` with twist `omega`.
    pub fn build(
        field: &CyclotomicField,
        s: u64,
        omega: &CyclotomicNumber,
    ) -> Result<Self, AlgebraError> {
        let sigma = GaloisAutomorphism::new(field, s)?;
        if omega.conductor() != field.conductor() {
            return Err(AlgebraError::Field(CyclotomicError::ConductorMismatch {
                left: field.conductor(),
                right: omega.conductor(),
            }));
        }
        if omega.is_zero() {
            return Err(AlgebraError::TwistNotInvertible);
        }
        if sigma.apply(omega)? != *omega {
            return Err(AlgebraError::TwistNotFixed);
        }
        let degree = sigma.order() as usize;
        let k = field.conductor();
        let sigma_powers = (0..degree as u64)
            .map(|i| {
                GaloisAutomorphism::new(field, arith::pow_mod(s % k, i, k))
                    .expect("powers of a unit are units")
            })
            .collect();
        let center_basis = sigma.fixed_subspace();
        Ok(CyclicAlgebra {
            data: Arc::new(AlgebraData {
                field: field.clone(),
                sigma,
                degree,
                omega: omega.clone(),
                sigma_powers,
                center_basis,
            }),
        })
    }

    pub fn conductor(&self) -> u64 {
        self.data.field.conductor()
    }

    pub fn field(&self) -> &CyclotomicField {
        &self.data.field
    }

    pub fn automorphism(&self) -> &GaloisAutomorphism {
        &self.data.sigma
    }

    /// Degree d of the algebra: b^d = omega.
    pub fn degree(&self) -> usize {
        self.data.degree
    }

    pub fn twist(&self) -> &CyclotomicNumber {
        &self.data.omega
    }

    /// Q-basis of the center F = L^sigma, embedded in degree-0 coordinates.
    pub fn center_basis(&self) -> &[CyclotomicNumber] {
        &self.data.center_basis
    }

    /// Dimension over Q: d * phi(k) = d^2 * dim_Q(F).
    pub fn total_dimension(&self) -> usize {
        self.data.degree * self.data.field.degree()
    }

    /// Dimension of the center over Q: phi(k) / d.
    pub fn center_dimension(&self) -> usize {
        self.data.field.degree() / self.data.degree
    }

    fn same_algebra(&self, other: &Self) -> bool {
        self.conductor() == other.conductor()
            && self.data.sigma.exponent() == other.data.sigma.exponent()
            && self.data.omega == other.data.omega
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement {
            algebra: self.clone(),
            coords: vec![self.data.field.zero(); self.data.degree],
        }
    }

    pub fn one(&self) -> AlgebraElement {
        self.embed(&self.data.field.one()).expect("same field")
    }

    /// The element l * b^0 for l in L.
    pub fn embed(&self, l: &CyclotomicNumber) -> Result<AlgebraElement, AlgebraError> {
        if l.conductor() != self.conductor() {
            return Err(AlgebraError::Field(CyclotomicError::ConductorMismatch {
                left: self.conductor(),
                right: l.conductor(),
            }));
        }
        let mut coords = vec![self.data.field.zero(); self.data.degree];
        coords[0] = l.clone();
        Ok(AlgebraElement {
            algebra: self.clone(),
            coords,
        })
    }

    /// The generator b.  (For degree 1 the algebra is L itself and b = omega.)
    pub fn b(&self) -> AlgebraElement {
        if self.data.degree == 1 {
            return self.embed(&self.data.omega).expect("same field");
        }
        let mut coords = vec![self.data.field.zero(); self.data.degree];
        coords[1] = self.data.field.one();
        AlgebraElement {
            algebra: self.clone(),
            coords,
        }
    }

    /// Element from d * phi(k) integer coordinates in the Q-basis
    /// {zeta^u b^i}, grouped by power of b.
    pub fn from_integer_coords(&self, coords: &[i64]) -> AlgebraElement {
        let phi = self.data.field.degree();
        assert_eq!(coords.len(), self.data.degree * phi, "coordinate count");
        let coords = coords
            .chunks(phi)
            .map(|chunk| {
                self.data.field.from_coeffs(
                    chunk
                        .iter()
                        .map(|&c| BigRational::from(BigInt::from(c)))
                        .collect(),
                )
            })
            .collect();
        AlgebraElement {
            algebra: self.clone(),
            coords,
        }
    }

    /// Closes the subgroup generated by `a` and `b` under multiplication and
    /// certifies its order and relation shape.  `bound` caps the closure size.
    pub fn verify_group_embedding(
        &self,
        a: &AlgebraElement,
        b: &AlgebraElement,
        bound: usize,
    ) -> Result<GroupEmbedding, AlgebraError> {
        use alloc::collections::BTreeSet;
        for x in [a, b] {
            if !self.same_algebra(&x.algebra) {
                return Err(AlgebraError::MixedOwners);
            }
        }
        let mut seen = BTreeSet::new();
        seen.insert(self.one());
        let mut queue = vec![self.one()];
        while let Some(x) = queue.pop() {
            for g in [a, b] {
                let y = x.mul(g)?;
                if seen.insert(y.clone()) {
                    if seen.len() > bound {
                        return Err(AlgebraError::ClosureExceedsBound { bound });
                    }
                    queue.push(y);
                }
            }
        }
        let order = seen.len();
        let cap = order as u64;
        let a_order = a
            .multiplicative_order(cap)
            .expect("element of a finite group has finite order");
        let b_order = b
            .multiplicative_order(cap)
            .expect("element of a finite group has finite order");
        // b^d = omega is the defining relation of the generator b; record
        // whether the supplied b element satisfies it (it may be any unit).
        let twist_power_holds =
            b.pow(self.data.degree as u64) == self.embed(&self.data.omega).expect("same field");

        // conjugate a by b and express it as a power of a
        let b_inv = b.pow(b_order - 1);
        let conj = b.mul(a)?.mul(&b_inv)?;
        let mut conj_exponent = None;
        let mut power = self.one();
        for e in 0..a_order {
            if power == conj {
                conj_exponent = Some(e);
                break;
            }
            power = power.mul(a)?;
        }

        let kind = if let Some(r) = conj_exponent {
            if order as u64 == a_order * b_order {
                // relations a^m = b^n = 1, b a b^-1 = a^r with |<a,b>| = m*n:
                // the closure is exactly the metacyclic group they present
                let presentation = Presentation::validate(a_order, b_order, r)
                    .expect("conjugation relation implies r^n = 1 mod m");
                EmbeddedGroupKind::Metacyclic { presentation }
            } else if a_order % 2 == 0
                && a_order >= 4
                && r == a_order - 1
                && order as u64 == 2 * a_order
                && b.mul(b)? == a.pow(a_order / 2)
            {
                // x^(2n) = 1, y^2 = x^n, y x y^-1 = x^-1 with |<x,y>| = 4n
                EmbeddedGroupKind::Dicyclic { n: a_order / 2 }
            } else {
                EmbeddedGroupKind::Unrecognized
            }
        } else {
            EmbeddedGroupKind::Unrecognized
        };
        Ok(GroupEmbedding {
            order,
            a_order,
            b_order,
            twist_power_holds,
            kind,
        })
    }

    /// Checks centrality of the fixed-field basis and locates central square
    /// roots of signed primes via Gauss sums.
    pub fn center_probe(&self) -> CenterCertificate {
        let field = &self.data.field;
        let b = self.b();
        let zeta_elem = self.embed(&field.zeta()).expect("same field");
        let mut basis_commutes = true;
        for f in &self.data.center_basis {
            let ef = self.embed(f).expect("same field");
            let with_b = ef.mul(&b).expect("same algebra") == b.mul(&ef).expect("same algebra");
            let with_zeta = ef.mul(&zeta_elem).expect("same algebra")
                == zeta_elem.mul(&ef).expect("same algebra");
            basis_commutes &= with_b && with_zeta;
        }
        let mut central_square_roots = Vec::new();
        let factorization = arith::factorize(self.conductor()).expect("conductor is positive");
        for &(p, _) in factorization.factors() {
            if p == 2 {
                continue;
            }
            let g = quadratic_gauss_sum(field, p).expect("odd prime divisor of the conductor");
            if self.data.sigma.apply(&g).expect("same field") == g {
                let squares_to = if p % 4 == 3 { -(p as i64) } else { p as i64 };
                debug_assert_eq!(
                    g.mul(&g).expect("same field"),
                    field.from_integer(squares_to)
                );
                central_square_roots.push(CentralSquareRoot {
                    prime: p,
                    element: g.clone(),
                    min_poly: g.min_poly(),
                    squares_to,
                });
            }
        }
        CenterCertificate {
            dimension: self.data.center_basis.len(),
            expected_dimension: self.center_dimension(),
            basis_commutes,
            central_square_roots,
        }
    }

    /// Draws `trials` nonzero elements with integer coordinates in
    /// [-height, height] (deterministic from `seed`, one stream per trial)
    /// and attempts to invert each.  Singular draws are returned as data.
    pub fn division_sample(&self, trials: u64, height: i64, seed: u64) -> SamplingReport {
        let dim = self.total_dimension();
        let mut invertible = 0;
        let mut singular = Vec::new();
        for trial in 0..trials {
            let mut rng = SplitMix64::for_trial(seed, trial);
            let element = loop {
                let coords: Vec<i64> = (0..dim).map(|_| rng.uniform(-height, height)).collect();
                if coords.iter().any(|&c| c != 0) {
                    break self.from_integer_coords(&coords);
                }
            };
            match element.inv() {
                Ok(_) => invertible += 1,
                Err(AlgebraError::SingularElement) => {
                    singular.push(SingularSample { trial, element })
                }
                Err(e) => unreachable!("nonzero inversion can only fail as singular: {e:?}"),
            }
        }
        SamplingReport {
            trials,
            height,
            seed,
            invertible,
            singular,
        }
    }

    /// Deterministic zero-divisor candidates: u = 1 + b + ... + b^(d-1) and
    /// v = b - 1 satisfy u*v = omega - 1, so both are singular when omega = 1.
    /// In a division algebra every nonzero candidate must invert.
    pub fn split_probe(&self) -> Vec<SplitProbeResult> {
        let mut u = self.zero();
        let mut label_u = String::new();
        for i in 0..self.data.degree as u64 {
            u = u.add(&self.b().pow(i)).expect("same algebra");
            if i > 0 {
                label_u.push_str(" + ");
            }
            match i {
                0 => label_u.push('1'),
                1 => label_u.push('b'),
                _ => write!(label_u, "b^{i}").expect("write to string"),
            }
        }
        let v = self.b().sub(&self.one()).expect("same algebra");
        let mut results = Vec::new();
        for (label, x) in [(label_u, u), (String::from("b - 1"), v)] {
            let singular = match x.inv() {
                Ok(_) => false,
                Err(AlgebraError::SingularElement) => true,
                Err(AlgebraError::ZeroInput) => true,
                Err(e) => unreachable!("unexpected inversion failure: {e:?}"),
            };
            results.push(SplitProbeResult { label, singular });
        }
        results
    }
}

/// Presets from the toolkit's headline constructions.
///
/// Degree-3 algebra on Q(zeta_21) embedding the order-63 group G_{7,9,2}:
/// sigma(zeta) = zeta^16, omega = zeta^7.
pub fn preset_order_63() -> Result<CyclicAlgebra, AlgebraError> {
    let field = CyclotomicField::new(21)?;
    let omega = field.zeta_pow(7);
    CyclicAlgebra::build(&field, 16, &omega)
}

/// Degree-3 algebra on Q(zeta_39) embedding the order-117 group G_{13,9,9}:
/// sigma(zeta) = zeta^22, omega = zeta^13.
pub fn preset_order_117() -> Result<CyclicAlgebra, AlgebraError> {
    let field = CyclotomicField::new(39)?;
    let omega = field.zeta_pow(13);
    CyclicAlgebra::build(&field, 22, &omega)
}

/// Degree-2 algebra on Q(zeta_2n) with omega = -1, embedding the dicyclic
/// group of order 4n (n = 2 gives the quaternion group of order 8).
pub fn preset_quaternion(n: u64) -> Result<CyclicAlgebra, AlgebraError> {
    if n < 2 {
        return Err(AlgebraError::QuaternionIndexTooSmall { n });
    }
    let k = 2 * n;
    let field = CyclotomicField::new(k)?;
    let omega = field.from_integer(-1);
    CyclicAlgebra::build(&field, k - 1, &omega)
}

/// An element sum of c_i b^i of a cyclic algebra.
#[derive(Clone)]
pub struct AlgebraElement {
    algebra: CyclicAlgebra,
    coords: Vec<CyclotomicNumber>,
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraElement({self})")
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c}) b")?,
                _ => write!(f, "({c}) b^{i}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.algebra.same_algebra(&other.algebra) && self.coords == other.coords
    }
}

impl Eq for AlgebraElement {}

impl PartialOrd for AlgebraElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.algebra
            .conductor()
            .cmp(&other.algebra.conductor())
            .then_with(|| {
                self.algebra
                    .data
                    .sigma
                    .exponent()
                    .cmp(&other.algebra.data.sigma.exponent())
            })
            .then_with(|| self.algebra.data.omega.cmp(&other.algebra.data.omega))
            .then_with(|| self.coords.cmp(&other.coords))
    }
}

impl AlgebraElement {
    pub fn algebra(&self) -> &CyclicAlgebra {
        &self.algebra
    }

    /// Coordinates c_0, ..., c_(d-1) with respect to 1, b, ..., b^(d-1).
    pub fn coords(&self) -> &[CyclotomicNumber] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(CyclotomicNumber::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(CyclotomicNumber::is_zero)
    }

    fn check_owner(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.algebra.same_algebra(&other.algebra) {
            Ok(())
        } else {
            Err(AlgebraError::MixedOwners)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_owner(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.add(b).expect("same field"))
            .collect();
        Ok(AlgebraElement {
            algebra: self.algebra.clone(),
            coords,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_owner(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.sub(b).expect("same field"))
            .collect();
        Ok(AlgebraElement {
            algebra: self.algebra.clone(),
            coords,
        })
    }

    pub fn neg(&self) -> Self {
        AlgebraElement {
            algebra: self.algebra.clone(),
            coords: self.coords.iter().map(CyclotomicNumber::neg).collect(),
        }
    }

    /// (sum c_i b^i)(sum c'_j b^j) = sum_(i,j) c_i sigma^i(c'_j) b^(i+j),
    /// with b^(i+j) folded to omega * b^(i+j-d) past the degree.
    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_owner(other)?;
        let data = &self.algebra.data;
        let d = data.degree;
        let mut coords = vec![data.field.zero(); d];
        for (i, ci) in self.coords.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (j, cj) in other.coords.iter().enumerate() {
                if cj.is_zero() {
                    continue;
                }
                let mut term = ci
                    .mul(&data.sigma_powers[i].apply(cj).expect("same field"))
                    .expect("same field");
                let t = i + j;
                if t >= d {
                    term = term.mul(&data.omega).expect("same field");
                }
                coords[t % d] = coords[t % d].add(&term).expect("same field");
            }
        }
        Ok(AlgebraElement {
            algebra: self.algebra.clone(),
            coords,
        })
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.algebra.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).expect("same algebra");
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base).expect("same algebra");
            }
        }
        acc
    }

    /// Least d with self^d = 1, up to `cap`.
    pub fn multiplicative_order(&self, cap: u64) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let mut acc = self.clone();
        for d in 1..=cap {
            if acc.is_one() {
                return Some(d);
            }
            acc = acc.mul(self).expect("same algebra");
        }
        None
    }

    /// Inverse via the regular representation: solves (left multiplication
    /// by self) * y = 1 as an exact d*phi(k) square system over Q.  A nonzero
    /// element with no solution is a zero divisor and reported as such.
    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroInput);
        }
        let data = &self.algebra.data;
        let d = data.degree;
        let phi = data.field.degree();
        let dim = d * phi;
        // column i*phi + u holds the coordinates of self * (zeta^u b^i)
        let mut matrix = vec![vec![BigRational::zero(); dim]; dim];
        for i in 0..d {
            for u in 0..phi {
                let mut coords = vec![data.field.zero(); d];
                coords[i] = data.field.zeta_pow(u as i64);
                let basis = AlgebraElement {
                    algebra: self.algebra.clone(),
                    coords,
                };
                let product = self.mul(&basis).expect("same algebra");
                let col = i * phi + u;
                for (j, c) in product.coords.iter().enumerate() {
                    for (v, q) in c.coeffs().iter().enumerate() {
                        matrix[j * phi + v][col] = q.clone();
                    }
                }
            }
        }
        // scale each row integral; row scaling keeps the solution set
        let mut int_matrix = Vec::with_capacity(dim);
        let mut rhs = Vec::with_capacity(dim);
        for (row_index, row) in matrix.into_iter().enumerate() {
            let mut lcm = BigInt::one();
            for entry in &row {
                lcm = num_integer::Integer::lcm(&lcm, entry.denom());
            }
            let int_row: Vec<BigInt> = row
                .iter()
                .map(|entry| entry.numer() * (&lcm / entry.denom()))
                .collect();
            rhs.push(if row_index == 0 { lcm.clone() } else { BigInt::zero() });
            int_matrix.push(int_row);
        }
        let solution =
            linalg::solve_integer_system(&int_matrix, &rhs).ok_or(AlgebraError::SingularElement)?;
        let coords = solution
            .chunks(phi)
            .map(|chunk| data.field.from_coeffs(chunk.to_vec()))
            .collect();
        let inverse = AlgebraElement {
            algebra: self.algebra.clone(),
            coords,
        };
        debug_assert!(self.mul(&inverse).expect("same algebra").is_one());
        Ok(inverse)
    }
}

/// What the unit-group closure of two elements turned out to be.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EmbeddedGroupKind {
    /// a^m = b^n = 1, b a b^-1 = a^r, and the closure has exactly m*n
    /// elements, so it is the metacyclic group with that presentation.
    Metacyclic { presentation: Presentation },
    /// x^(2n) = 1, y^2 = x^n, y x y^-1 = x^-1, closure of order 4n.
    Dicyclic { n: u64 },
    /// The generators close into a finite group of no recognized shape.
    Unrecognized,
}

/// Certificate for a finite subgroup of units generated by two elements.
#[derive(Clone, Debug)]
pub struct GroupEmbedding {
    /// Number of distinct elements in the closure.
    pub order: usize,
    pub a_order: u64,
    pub b_order: u64,
    /// Whether the supplied b satisfies b^d = omega.
    pub twist_power_holds: bool,
    pub kind: EmbeddedGroupKind,
}

/// A central element squaring to a signed prime, with its minimal polynomial.
#[derive(Clone, Debug)]
pub struct CentralSquareRoot {
    pub prime: u64,
    pub element: CyclotomicNumber,
    pub min_poly: RatPolynomial,
    pub squares_to: i64,
}

/// Certificate for the center of a cyclic algebra.
#[derive(Clone, Debug)]
pub struct CenterCertificate {
    /// Computed dimension of the fixed field over Q.
    pub dimension: usize,
    /// phi(k) / d, the dimension Galois theory demands.
    pub expected_dimension: usize,
    /// Every fixed-field basis element commutes with b and with zeta.
    pub basis_commutes: bool,
    pub central_square_roots: Vec<CentralSquareRoot>,
}

/// A sampled element whose regular representation turned out singular.
#[derive(Clone, Debug)]
pub struct SingularSample {
    pub trial: u64,
    pub element: AlgebraElement,
}

/// Outcome of seed-deterministic inversion sampling.
#[derive(Clone, Debug)]
pub struct SamplingReport {
    pub trials: u64,
    pub height: i64,
    pub seed: u64,
    pub invertible: u64,
    pub singular: Vec<SingularSample>,
}

/// Invertibility verdict for one deterministic zero-divisor candidate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitProbeResult {
    pub label: String,
    pub singular: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DESK_BOUND;
    use alloc::string::ToString;

    fn random_element(algebra: &CyclicAlgebra, rng: &mut SplitMix64, height: i64) -> AlgebraElement {
        let dim = algebra.total_dimension();
        let coords: Vec<i64> = (0..dim).map(|_| rng.uniform(-height, height)).collect();
        algebra.from_integer_coords(&coords)
    }

    #[test]
    fn build_validates_parameters() {
        let field = CyclotomicField::new(21).unwrap();
        // sigma(zeta) = zeta^16 does not fix zeta
        assert_eq!(
            CyclicAlgebra::build(&field, 16, &field.zeta()).err(),
            Some(AlgebraError::TwistNotFixed)
        );
        assert_eq!(
            CyclicAlgebra::build(&field, 16, &field.zero()).err(),
            Some(AlgebraError::TwistNotInvertible)
        );
        assert_eq!(
            CyclicAlgebra::build(&field, 14, &field.one()).err(),
            Some(AlgebraError::Field(CyclotomicError::ExponentNotCoprime {
                s: 14,
                k: 21
            }))
        );
        let other = CyclotomicField::new(39).unwrap();
        assert!(matches!(
            CyclicAlgebra::build(&field, 16, &other.one()),
            Err(AlgebraError::Field(CyclotomicError::ConductorMismatch { .. }))
        ));
        // omega = 1 is fixed by anything: builds fine (split, but valid)
        assert!(CyclicAlgebra::build(&field, 16, &field.one()).is_ok());
    }

    #[test]
    fn preset_dimensions() {
        let k63 = preset_order_63().unwrap();
        assert_eq!(k63.degree(), 3);
        assert_eq!(k63.total_dimension(), 36);
        assert_eq!(k63.center_dimension(), 4);
        assert_eq!(k63.center_basis().len(), 4);

        let k117 = preset_order_117().unwrap();
        assert_eq!(k117.degree(), 3);
        assert_eq!(k117.total_dimension(), 72);
        assert_eq!(k117.center_dimension(), 8);

        let quat = preset_quaternion(2).unwrap();
        assert_eq!(quat.degree(), 2);
        assert_eq!(quat.total_dimension(), 4);
        assert_eq!(quat.center_dimension(), 1);

        assert_eq!(
            preset_quaternion(1).err(),
            Some(AlgebraError::QuaternionIndexTooSmall { n: 1 })
        );
    }

    #[test]
    fn defining_relations_hold() {
        let algebra = preset_order_63().unwrap();
        let field = algebra.field();
        let a = algebra.embed(&field.zeta_pow(3)).unwrap();
        let b = algebra.b();
        // b a = a^2 b
        assert_eq!(
            b.mul(&a).unwrap(),
            a.mul(&a).unwrap().mul(&b).unwrap()
        );
        // b^3 = omega, b^9 = 1
        assert_eq!(b.pow(3), algebra.embed(algebra.twist()).unwrap());
        assert!(b.pow(9).is_one());
        assert!(!b.pow(3).is_one());
        // a^7 = 1
        assert!(a.pow(7).is_one());
        assert_eq!(a.multiplicative_order(10), Some(7));
        let x = a.add(&b).unwrap();
        assert_eq!(x.mul(&algebra.one()).unwrap(), x);
    }

    #[test]
    fn multiplication_is_associative() {
        let algebra = preset_order_63().unwrap();
        let field = algebra.field();
        // exhaustive over the 9 basis elements zeta^u b^i, u,i < 3
        let mut basis = Vec::new();
        for u in 0..3i64 {
            for i in 0..3u64 {
                basis.push(algebra.embed(&field.zeta_pow(u)).unwrap().mul(&algebra.b().pow(i)).unwrap());
            }
        }
        for x in &basis {
            for y in &basis {
                let xy = x.mul(y).unwrap();
                for z in &basis {
                    assert_eq!(xy.mul(z).unwrap(), x.mul(&y.mul(z).unwrap()).unwrap());
                }
            }
        }
        // random triples with distributivity
        let mut rng = SplitMix64::new(0xa550_c1a7);
        for _ in 0..1000 {
            let x = random_element(&algebra, &mut rng, 3);
            let y = random_element(&algebra, &mut rng, 3);
            let z = random_element(&algebra, &mut rng, 3);
            assert_eq!(
                x.mul(&y).unwrap().mul(&z).unwrap(),
                x.mul(&y.mul(&z).unwrap()).unwrap()
            );
            assert_eq!(
                x.add(&y).unwrap().mul(&z).unwrap(),
                x.mul(&z).unwrap().add(&y.mul(&z).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn mixed_owners_are_rejected() {
        let k63 = preset_order_63().unwrap();
        let k117 = preset_order_117().unwrap();
        assert_eq!(
            k63.one().add(&k117.one()).err(),
            Some(AlgebraError::MixedOwners)
        );
        // same field, different twist is still a different algebra
        let field = CyclotomicField::new(21).unwrap();
        let split = CyclicAlgebra::build(&field, 16, &field.one()).unwrap();
        assert_eq!(
            k63.one().mul(&split.one()).err(),
            Some(AlgebraError::MixedOwners)
        );
    }

    #[test]
    fn inverses_round_trip() {
        let algebra = preset_order_63().unwrap();
        let field = algebra.field();
        let one = algebra.one();
        let b = algebra.b();
        let b_inv = b.inv().unwrap();
        assert_eq!(b.mul(&b_inv).unwrap(), one);
        assert_eq!(b_inv.mul(&b).unwrap(), one);
        // b^-1 = omega^-1 b^2 = b^8
        let omega_inv = algebra.embed(&algebra.twist().inv().unwrap()).unwrap();
        assert_eq!(b_inv, omega_inv.mul(&b.pow(2)).unwrap());
        assert_eq!(b_inv, b.pow(8));

        let x = one
            .add(&algebra.embed(&field.zeta_pow(3)).unwrap())
            .unwrap()
            .add(&b)
            .unwrap();
        let x_inv = x.inv().unwrap();
        assert_eq!(x.mul(&x_inv).unwrap(), one);
        assert_eq!(x_inv.mul(&x).unwrap(), one);

        assert_eq!(algebra.zero().inv().err(), Some(AlgebraError::ZeroInput));

        let mut rng = SplitMix64::new(0xd1f_0042);
        for _ in 0..10 {
            let x = random_element(&algebra, &mut rng, 5);
            if x.is_zero() {
                continue;
            }
            let x_inv = x.inv().unwrap();
            assert_eq!(x.mul(&x_inv).unwrap(), one);
            assert_eq!(x_inv.inv().unwrap(), x);
        }
    }

    #[test]
    fn embeds_the_order_63_group() {
        let algebra = preset_order_63().unwrap();
        let a = algebra.embed(&algebra.field().zeta_pow(3)).unwrap();
        let b = algebra.b();
        let cert = algebra
            .verify_group_embedding(&a, &b, DESK_BOUND as usize)
            .unwrap();
        assert_eq!(cert.order, 63);
        assert_eq!(cert.a_order, 7);
        assert_eq!(cert.b_order, 9);
        assert!(cert.twist_power_holds);
        let expected = Presentation::validate(7, 9, 2).unwrap();
        match cert.kind {
            EmbeddedGroupKind::Metacyclic { presentation } => {
                assert_eq!(presentation, expected);
                assert!(!presentation.structure_flags().is_cyclic);
            }
            ref other => panic!("expected metacyclic, got {other:?}"),
        }
    }

    #[test]
    fn embeds_the_order_117_group() {
        let algebra = preset_order_117().unwrap();
        let a = algebra.embed(&algebra.field().zeta_pow(3)).unwrap();
        let b = algebra.b();
        let cert = algebra
            .verify_group_embedding(&a, &b, DESK_BOUND as usize)
            .unwrap();
        assert_eq!(cert.order, 117);
        assert_eq!(cert.a_order, 13);
        assert_eq!(cert.b_order, 9);
        assert!(cert.twist_power_holds);
        let expected = Presentation::validate(13, 9, 9).unwrap();
        match cert.kind {
            EmbeddedGroupKind::Metacyclic { presentation } => {
                assert_eq!(presentation, expected);
                assert!(crate::groups::are_isomorphic(&presentation, &expected, DESK_BOUND).unwrap());
            }
            ref other => panic!("expected metacyclic, got {other:?}"),
        }
    }

    #[test]
    fn embeds_dicyclic_groups() {
        // n = 2: quaternion group of order 8
        let quat = preset_quaternion(2).unwrap();
        let x = quat.embed(&quat.field().zeta()).unwrap();
        let y = quat.b();
        let cert = quat
            .verify_group_embedding(&x, &y, DESK_BOUND as usize)
            .unwrap();
        assert_eq!(cert.order, 8);
        assert_eq!(cert.a_order, 4);
        assert_eq!(cert.b_order, 4);
        assert_eq!(cert.kind, EmbeddedGroupKind::Dicyclic { n: 2 });
        // y^2 = x^2 = -1
        assert_eq!(y.mul(&y).unwrap(), x.mul(&x).unwrap());

        // n = 3: dicyclic of order 12
        let dic3 = preset_quaternion(3).unwrap();
        let x = dic3.embed(&dic3.field().zeta()).unwrap();
        let y = dic3.b();
        let cert = dic3
            .verify_group_embedding(&x, &y, DESK_BOUND as usize)
            .unwrap();
        assert_eq!(cert.order, 12);
        assert_eq!(cert.kind, EmbeddedGroupKind::Dicyclic { n: 3 });
    }

    #[test]
    fn closure_bound_is_enforced() {
        let algebra = preset_order_63().unwrap();
        let a = algebra.embed(&algebra.field().zeta_pow(3)).unwrap();
        let b = algebra.b();
        assert_eq!(
            algebra.verify_group_embedding(&a, &b, 10).err(),
            Some(AlgebraError::ClosureExceedsBound { bound: 10 })
        );
    }

    #[test]
    fn center_probe_finds_the_expected_square_roots() {
        let k63 = preset_order_63().unwrap();
        let cert = k63.center_probe();
        assert_eq!(cert.dimension, 4);
        assert_eq!(cert.expected_dimension, 4);
        assert!(cert.basis_commutes);
        let polys: Vec<String> = cert
            .central_square_roots
            .iter()
            .map(|r| r.min_poly.to_string())
            .collect();
        assert_eq!(polys, ["t^2 + 3", "t^2 + 7"]);
        assert_eq!(
            cert.central_square_roots
                .iter()
                .map(|r| (r.prime, r.squares_to))
                .collect::<Vec<_>>(),
            [(3, -3), (7, -7)]
        );

        let k117 = preset_order_117().unwrap();
        let cert = k117.center_probe();
        assert_eq!(cert.dimension, 8);
        assert!(cert.basis_commutes);
        let polys: Vec<String> = cert
            .central_square_roots
            .iter()
            .map(|r| r.min_poly.to_string())
            .collect();
        assert_eq!(polys, ["t^2 + 3", "t^2 - 13"]);

        let quat = preset_quaternion(2).unwrap();
        let cert = quat.center_probe();
        assert_eq!(cert.dimension, 1);
        assert!(cert.basis_commutes);
        assert!(cert.central_square_roots.is_empty());
    }

    #[test]
    fn division_sampling_inverts_everything_in_the_63_preset() {
        let algebra = preset_order_63().unwrap();
        let report = algebra.division_sample(25, 10, 42);
        assert_eq!(report.invertible, 25);
        assert!(report.singular.is_empty());
        // deterministic given the seed
        let again = algebra.division_sample(25, 10, 42);
        assert_eq!(again.invertible, 25);
    }

    #[test]
    fn split_probe_certifies_the_omega_one_control() {
        let field = CyclotomicField::new(21).unwrap();
        let split = CyclicAlgebra::build(&field, 16, &field.one()).unwrap();
        let results = split.split_probe();
        assert_eq!(results.len(), 2);
        assert_eq!(results[0].label, "1 + b + b^2");
        assert_eq!(results[1].label, "b - 1");
        assert!(results.iter().all(|r| r.singular));
        // (1 + b + b^2)(b - 1) = omega - 1 = 0 exhibits the zero divisor
        let u = split.one().add(&split.b()).unwrap().add(&split.b().pow(2)).unwrap();
        let v = split.b().sub(&split.one()).unwrap();
        assert!(u.mul(&v).unwrap().is_zero());

        // in the division preset the same candidates invert
        let division = preset_order_63().unwrap();
        assert!(division.split_probe().iter().all(|r| !r.singular));
    }

    #[test]
    fn display_formats() {
        let algebra = preset_order_63().unwrap();
        let x = algebra
            .one()
            .add(&algebra.b()).unwrap()
            .add(&algebra.embed(&algebra.field().zeta_pow(3)).unwrap().mul(&algebra.b().pow(2)).unwrap())
            .unwrap();
        assert_eq!(x.to_string(), "(1) + (1) b + (z^3) b^2");
        assert_eq!(algebra.zero().to_string(), "0");
    }
}

