//! Exact arithmetic in cyclotomic fields Q(zeta_k).
//!
//! Elements are stored in the power basis 1, zeta, ..., zeta^(phi(k)-1),
//! reduced modulo the k-th cyclotomic polynomial, with rational coefficients
//! in lowest terms.  No floating point anywhere: zero tests and centrality
//! checks downstream demand exactness.
//!
//! Besides the field operations the module provides the Galois action
//! zeta -> zeta^s, fixed-subspace computation (the substrate for cyclic
//! algebra centers), minimal polynomials over Q, and quadratic Gauss sums,
//! which supply explicit square roots of +-p inside Q(zeta_k).

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith;
use crate::linalg;

/// Largest supported conductor. Cyclotomic polynomial computation and the
/// reduction tables stay small and exact below this.
pub const CONDUCTOR_BOUND: u64 = 200;

/// Errors for cyclotomic field construction and arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CyclotomicError {
    /// Conductor zero or above [`CONDUCTOR_BOUND`].
    ConductorOutOfRange { k: u64 },
    /// Binary operation on numbers from different fields.
    ConductorMismatch { left: u64, right: u64 },
    /// Inverse of zero requested.
    DivisionByZero,
    /// Galois exponent not invertible modulo the conductor.
    ExponentNotCoprime { s: u64, k: u64 },
    /// Gauss sums need an odd prime dividing the conductor.
    NotOddPrimeDivisor { p: u64, k: u64 },
}

impl fmt::Display for CyclotomicError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CyclotomicError::ConductorOutOfRange { k } => {
                write!(f, "conductor {k} outside 1..={CONDUCTOR_BOUND}")
            }
            CyclotomicError::ConductorMismatch { left, right } => {
                write!(f, "mixed conductors {left} and {right}")
            }
            CyclotomicError::DivisionByZero => write!(f, "division by zero"),
            CyclotomicError::ExponentNotCoprime { s, k } => {
                write!(f, "exponent {s} is not a unit modulo {k}")
            }
            CyclotomicError::NotOddPrimeDivisor { p, k } => {
                write!(f, "{p} is not an odd prime dividing {k}")
            }
        }
    }
}

impl core::error::Error for CyclotomicError {}

/// Writes `coeffs` (ascending degree) as a human-readable polynomial in `var`.
fn fmt_poly(f: &mut fmt::Formatter<'_>, coeffs: &[BigRational], var: &str) -> fmt::Result {
    let mut first = true;
    for (deg, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        let magnitude = c.abs();
        if first {
            if negative {
                write!(f, "-")?;
            }
        } else if negative {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        if deg == 0 {
            write!(f, "{magnitude}")?;
        } else {
            if !magnitude.is_one() {
                write!(f, "{magnitude} ")?;
            }
            if deg == 1 {
                write!(f, "{var}")?;
            } else {
                write!(f, "{var}^{deg}")?;
            }
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Polynomial with integer coefficients, stored ascending with no trailing
/// zeros (the zero polynomial has an empty coefficient vector).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// Ascending coefficients; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial { coeffs: Vec::new() };
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }

    /// Exact quotient by a monic divisor; panics if the division leaves a
    /// remainder (internal invariant: only used where divisibility is known).
    fn exact_div_monic(&self, divisor: &Self) -> Self {
        let d = divisor.degree().expect("divisor must be nonzero");
        assert!(divisor.coeffs[d].is_one(), "divisor must be monic");
        let n = match self.degree() {
            None => return IntPolynomial { coeffs: Vec::new() },
            Some(n) => n,
        };
        assert!(n >= d, "quotient degree would be negative");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - d + 1];
        for qd in (0..=n - d).rev() {
            let lead = core::mem::replace(&mut rem[qd + d], BigInt::zero());
            if lead.is_zero() {
                continue;
            }
            for (i, c) in divisor.coeffs.iter().take(d).enumerate() {
                rem[qd + i] -= &lead * c;
            }
            quot[qd] = lead;
        }
        assert!(rem.iter().all(Zero::is_zero), "division was not exact");
        IntPolynomial::from_coeffs(quot)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rational: Vec<BigRational> = self
            .coeffs
            .iter()
            .map(|c| BigRational::from(c.clone()))
            .collect();
        fmt_poly(f, &rational, "x")
    }
}

/// The k-th cyclotomic polynomial, computed by peeling the cyclotomic factors
/// of x^d - 1 off ascending divisors d of k.  Exact integer arithmetic.
pub fn cyclotomic_polynomial(k: u64) -> Result<IntPolynomial, CyclotomicError> {
    if k == 0 || k > CONDUCTOR_BOUND {
        return Err(CyclotomicError::ConductorOutOfRange { k });
    }
    let divisors = arith::factorize(k)
        .expect("conductor is positive")
        .divisors();
    let mut computed: Vec<(u64, IntPolynomial)> = Vec::with_capacity(divisors.len());
    for &d in &divisors {
        // x^d - 1
        let mut poly = vec![BigInt::zero(); d as usize + 1];
        poly[0] = BigInt::from(-1);
        poly[d as usize] = BigInt::one();
        let mut poly = IntPolynomial::from_coeffs(poly);
        for (e, phi_e) in &computed {
            if d % e == 0 {
                poly = poly.exact_div_monic(phi_e);
            }
        }
        computed.push((d, poly));
    }
    Ok(computed.pop().expect("at least one divisor").1)
}

/// Monic polynomial with rational coefficients (ascending, trimmed), printed
/// in the variable `t`.  Output type of minimal-polynomial computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPolynomial {
    coeffs: Vec<BigRational>,
}

impl RatPolynomial {
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        RatPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
}

impl fmt::Display for RatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(f, &self.coeffs, "t")
    }
}

/// Shared, immutable data for one field Q(zeta_k): the reduction modulus and
/// precomputed power-basis expansions of zeta^t for every exponent t that can
/// appear before reduction (products of reduced elements and Galois images).
#[derive(Debug)]
struct FieldData {
    k: u64,
    phi: usize,
    modulus: IntPolynomial,
    // rows[t - phi] = coefficients of zeta^t in the power basis; integer
    // entries because the modulus is monic over Z.
    rows: Vec<Vec<BigInt>>,
}

impl FieldData {
    fn reduction_row(&self, exponent: usize) -> &[BigInt] {
        &self.rows[exponent - self.phi]
    }
}

/// Handle to Q(zeta_k).  Cheap to clone; all numbers carry one.
#[derive(Clone, Debug)]
pub struct CyclotomicField {
    data: Arc<FieldData>,
}

impl CyclotomicField {
    pub fn new(k: u64) -> Result<Self, CyclotomicError> {
        let modulus = cyclotomic_polynomial(k)?;
        let phi = modulus.degree().expect("cyclotomic polynomial is nonzero");
        debug_assert_eq!(phi as u64, arith::euler_phi(k));
        // Exponents that must reduce: up to 2*phi-2 from products of reduced
        // elements, up to k-1 from Galois images and direct zeta powers.
        let max_degree = (2 * phi).saturating_sub(2).max(k as usize - 1);
        let mut rows = Vec::new();
        if max_degree >= phi {
            let tail: Vec<BigInt> = modulus.coeffs()[..phi].iter().map(|c| -c).collect();
            let mut current = tail.clone();
            for _ in phi..=max_degree {
                rows.push(current.clone());
                // multiply by zeta: shift up, fold the overflow back in
                let top = current[phi - 1].clone();
                for i in (1..phi).rev() {
                    current[i] = current[i - 1].clone() + &top * &tail[i];
                }
                current[0] = &top * &tail[0];
            }
        }
        Ok(CyclotomicField {
            data: Arc::new(FieldData {
                k,
                phi,
                modulus,
                rows,
            }),
        })
    }

    pub fn conductor(&self) -> u64 {
        self.data.k
    }

    /// Dimension over Q, i.e. phi(k).
    pub fn degree(&self) -> usize {
        self.data.phi
    }

    /// The reduction modulus, the k-th cyclotomic polynomial.
    pub fn modulus(&self) -> &IntPolynomial {
        &self.data.modulus
    }

    pub fn zero(&self) -> CyclotomicNumber {
        CyclotomicNumber {
            field: self.clone(),
            coeffs: vec![BigRational::zero(); self.data.phi],
        }
    }

    pub fn one(&self) -> CyclotomicNumber {
        self.from_rational(BigRational::one())
    }

    pub fn from_rational(&self, value: BigRational) -> CyclotomicNumber {
        let mut coeffs = vec![BigRational::zero(); self.data.phi];
        coeffs[0] = value;
        CyclotomicNumber {
            field: self.clone(),
            coeffs,
        }
    }

    pub fn from_integer(&self, value: i64) -> CyclotomicNumber {
        self.from_rational(BigRational::from(BigInt::from(value)))
    }

    /// Element with the given power-basis coefficients (length at most phi(k);
    /// shorter vectors are zero-padded).
    pub fn from_coeffs(&self, coeffs: Vec<BigRational>) -> CyclotomicNumber {
        assert!(coeffs.len() <= self.data.phi, "coefficient vector too long");
        let mut full = coeffs;
        full.resize(self.data.phi, BigRational::zero());
        CyclotomicNumber {
            field: self.clone(),
            coeffs: full,
        }
    }

    pub fn zeta(&self) -> CyclotomicNumber {
        self.zeta_pow(1)
    }

    /// zeta^t for any integer t (reduced modulo the conductor).
    pub fn zeta_pow(&self, t: i64) -> CyclotomicNumber {
        let e = t.rem_euclid(self.data.k as i64) as usize;
        let mut coeffs = vec![BigRational::zero(); self.data.phi];
        if e < self.data.phi {
            coeffs[e] = BigRational::one();
        } else {
            for (i, c) in self.data.reduction_row(e).iter().enumerate() {
                coeffs[i] = BigRational::from(c.clone());
            }
        }
        CyclotomicNumber {
            field: self.clone(),
            coeffs,
        }
    }
}

/// An element of Q(zeta_k) in the reduced power basis.
#[derive(Clone)]
pub struct CyclotomicNumber {
    field: CyclotomicField,
    coeffs: Vec<BigRational>,
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclotomicNumber(k={}, {})", self.conductor(), self)
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(f, &self.coeffs, "z")
    }
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.conductor() == other.conductor() && self.coeffs == other.coeffs
    }
}

impl Eq for CyclotomicNumber {}

impl PartialOrd for CyclotomicNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CyclotomicNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        self.conductor()
            .cmp(&other.conductor())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl CyclotomicNumber {
    pub fn conductor(&self) -> u64 {
        self.field.data.k
    }

    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    /// Power-basis coefficients, always of length phi(k).
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    fn check_conductor(&self, other: &Self) -> Result<(), CyclotomicError> {
        if self.conductor() == other.conductor() {
            Ok(())
        } else {
            Err(CyclotomicError::ConductorMismatch {
                left: self.conductor(),
                right: other.conductor(),
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, CyclotomicError> {
        self.check_conductor(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CyclotomicNumber {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, CyclotomicError> {
        self.check_conductor(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CyclotomicNumber {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn neg(&self) -> Self {
        CyclotomicNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Multiplies by a rational scalar.
    pub fn scale(&self, factor: &BigRational) -> Self {
        CyclotomicNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, CyclotomicError> {
        self.check_conductor(other)?;
        Ok(self.mul_same_field(other))
    }

    fn mul_same_field(&self, other: &Self) -> Self {
        let data = &self.field.data;
        let phi = data.phi;
        let mut dense = vec![BigRational::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                dense[i + j] += a * b;
            }
        }
        let mut coeffs = vec![BigRational::zero(); phi];
        for (deg, c) in dense.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if deg < phi {
                coeffs[deg] += c;
            } else {
                for (i, r) in data.reduction_row(deg).iter().enumerate() {
                    if !r.is_zero() {
                        coeffs[i] += &c * BigRational::from(r.clone());
                    }
                }
            }
        }
        CyclotomicNumber {
            field: self.field.clone(),
            coeffs,
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against the
    /// cyclotomic modulus over Q[x].
    pub fn inv(&self) -> Result<Self, CyclotomicError> {
        if self.is_zero() {
            return Err(CyclotomicError::DivisionByZero);
        }
        let phi = self.field.data.phi;
        let mut r0: Vec<BigRational> = self
            .field
            .data
            .modulus
            .coeffs()
            .iter()
            .map(|c| BigRational::from(c.clone()))
            .collect();
        let mut r1 = poly_trim(self.coeffs.clone());
        // Invariant: t_i * self == r_i modulo the cyclotomic polynomial.
        let mut t0: Vec<BigRational> = Vec::new();
        let mut t1: Vec<BigRational> = vec![BigRational::one()];
        while !r1.is_empty() {
            let (q, rem) = poly_divmod(&r0, &r1);
            let t2 = poly_sub(&t0, &poly_mul(&q, &t1));
            r0 = r1;
            r1 = rem;
            t0 = t1;
            t1 = t2;
        }
        // The modulus is irreducible over Q, so the gcd is a nonzero constant.
        debug_assert_eq!(r0.len(), 1);
        let constant = r0[0].clone();
        debug_assert!(t0.len() <= phi);
        let mut coeffs: Vec<BigRational> = t0.into_iter().map(|c| c / &constant).collect();
        coeffs.resize(phi, BigRational::zero());
        Ok(CyclotomicNumber {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_same_field(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_same_field(&base);
            }
        }
        acc
    }

    /// Least d with self^d = 1, or `None` if there is none up to `cap`
    /// (zero and non-roots of unity have no finite order).
    pub fn multiplicative_order(&self, cap: u64) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let mut acc = self.clone();
        for d in 1..=cap {
            if acc.is_one() {
                return Some(d);
            }
            acc = acc.mul_same_field(self);
        }
        None
    }

    /// Monic minimal polynomial over Q, from the first linear dependence among
    /// the powers 1, x, x^2, ...  Zero yields `t`.
    pub fn min_poly(&self) -> RatPolynomial {
        let phi = self.field.data.phi;
        let mut powers: Vec<Vec<BigRational>> = vec![self.field.one().coeffs];
        let mut current = self.clone();
        for d in 1..=phi {
            powers.push(current.coeffs.clone());
            // columns are the powers; kernel vectors are dependencies
            let rows: Vec<Vec<BigRational>> = (0..phi)
                .map(|i| (0..=d).map(|j| powers[j][i].clone()).collect())
                .collect();
            let kernel = linalg::rational_kernel(&rows);
            if let Some(v) = kernel.first() {
                // minimality: the previous powers were independent, so the
                // kernel is one-dimensional and its top coefficient nonzero
                debug_assert_eq!(kernel.len(), 1);
                debug_assert!(!v[d].is_zero());
                let lead = BigRational::from(v[d].clone());
                let coeffs = v
                    .iter()
                    .map(|c| BigRational::from(c.clone()) / &lead)
                    .collect();
                return RatPolynomial::from_coeffs(coeffs);
            }
            current = current.mul_same_field(self);
        }
        unreachable!("phi+1 vectors in a phi-dimensional space are dependent")
    }
}

/// The automorphism of Q(zeta_k) sending zeta to zeta^s, for gcd(s, k) = 1.
#[derive(Clone, Debug)]
pub struct GaloisAutomorphism {
    field: CyclotomicField,
    s: u64,
}

impl GaloisAutomorphism {
    pub fn new(field: &CyclotomicField, s: u64) -> Result<Self, CyclotomicError> {
        let k = field.conductor();
        let s = s % k;
        if arith::gcd(s, k) != 1 {
            return Err(CyclotomicError::ExponentNotCoprime { s, k });
        }
        Ok(GaloisAutomorphism {
            field: field.clone(),
            s,
        })
    }

    pub fn conductor(&self) -> u64 {
        self.field.data.k
    }

    pub fn exponent(&self) -> u64 {
        self.s
    }

    /// Order as a field automorphism, i.e. the multiplicative order of the
    /// exponent modulo the conductor.
    pub fn order(&self) -> u64 {
        arith::mult_order(self.s, self.field.data.k).expect("exponent is a unit")
    }

    /// Image of `x`: each basis monomial zeta^e maps to zeta^(e*s mod k).
    pub fn apply(&self, x: &CyclotomicNumber) -> Result<CyclotomicNumber, CyclotomicError> {
        if x.conductor() != self.conductor() {
            return Err(CyclotomicError::ConductorMismatch {
                left: self.conductor(),
                right: x.conductor(),
            });
        }
        let data = &self.field.data;
        let phi = data.phi;
        let mut coeffs = vec![BigRational::zero(); phi];
        for (e, c) in x.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let target = (e as u64 * self.s % data.k) as usize;
            if target < phi {
                coeffs[target] += c;
            } else {
                for (i, r) in data.reduction_row(target).iter().enumerate() {
                    if !r.is_zero() {
                        coeffs[i] += c * BigRational::from(r.clone());
                    }
                }
            }
        }
        Ok(CyclotomicNumber {
            field: self.field.clone(),
            coeffs,
        })
    }

    /// Q-basis of the fixed field {x : sigma(x) = x}, computed as the kernel
    /// of (matrix of sigma) - identity on the coefficient space.  Its length
    /// is phi(k) / order(sigma).
    pub fn fixed_subspace(&self) -> Vec<CyclotomicNumber> {
        let phi = self.field.data.phi;
        let mut rows = vec![vec![BigRational::zero(); phi]; phi];
        for j in 0..phi {
            let image = self
                .apply(&self.field.zeta_pow(j as i64))
                .expect("same field");
            for (i, c) in image.coeffs.iter().enumerate() {
                rows[i][j] = c.clone();
            }
            rows[j][j] -= BigRational::one();
        }
        linalg::rational_kernel(&rows)
            .into_iter()
            .map(|v| {
                self.field
                    .from_coeffs(v.into_iter().map(BigRational::from).collect())
            })
            .collect()
    }
}

/// The quadratic Gauss sum for an odd prime p dividing the conductor:
/// sum of chi(t) * zeta_p^t over t = 1..p-1, where chi is the Legendre symbol
/// mod p and zeta_p = zeta^(k/p).  Its square is chi(-1) * p, so it is an
/// explicit square root of p or -p inside the field.
pub fn quadratic_gauss_sum(
    field: &CyclotomicField,
    p: u64,
) -> Result<CyclotomicNumber, CyclotomicError> {
    let k = field.conductor();
    if p < 3 || !arith::is_prime(p) || k % p != 0 {
        return Err(CyclotomicError::NotOddPrimeDivisor { p, k });
    }
    let step = (k / p) as i64;
    let mut sum = field.zero();
    for t in 1..p {
        let term = field.zeta_pow(step * t as i64);
        sum = if arith::pow_mod(t, (p - 1) / 2, p) == 1 {
            sum.add(&term).expect("same field")
        } else {
            sum.sub(&term).expect("same field")
        };
    }
    Ok(sum)
}

fn poly_trim(mut coeffs: Vec<BigRational>) -> Vec<BigRational> {
    while coeffs.last().map_or(false, Zero::is_zero) {
        coeffs.pop();
    }
    coeffs
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    poly_trim(out)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    poly_trim(out)
}

/// Long division over Q[x]; returns (quotient, remainder) with the remainder
/// of degree strictly below the divisor's.
fn poly_divmod(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let dd = den.len() - 1;
    let lead = &den[dd];
    let mut rem = num.to_vec();
    if rem.len() <= dd {
        return (Vec::new(), poly_trim(rem));
    }
    let mut quot = vec![BigRational::zero(); rem.len() - dd];
    for qd in (0..quot.len()).rev() {
        let c = &rem[qd + dd] / lead;
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            let prod = &c * d;
            rem[qd + i] -= prod;
        }
        quot[qd] = c;
    }
    (poly_trim(quot), poly_trim(rem))
}
