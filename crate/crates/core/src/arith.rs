//! Deterministic integer arithmetic: factorization by trial division,
//! Euler phi, multiplicative orders, squarefree tests, and CRT lifting.
//!
//! All routines are exact. Products are widened to `u128` before reduction,
//! so intermediate overflow is impossible for inputs below `2^63`; anything
//! that could overflow a `u64` result (CRT moduli products, group orders)
//! is checked and reported as an error instead of wrapping.

use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArithError {
    /// Input was zero where a positive integer is required.
    ZeroValue,
    /// `mult_order(r, m)` needs `gcd(r, m) = 1`.
    NotCoprime { r: u64, m: u64 },
    /// CRT moduli must be pairwise coprime.
    ModuliNotCoprime { a: u64, b: u64 },
    /// A checked product (CRT modulus product) exceeded `u64`.
    Overflow,
}

impl fmt::Display for ArithError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArithError::ZeroValue => write!(f, "value must be positive"),
            ArithError::NotCoprime { r, m } => {
                write!(f, "{r} is not invertible modulo {m} (gcd != 1)")
            }
            ArithError::ModuliNotCoprime { a, b } => {
                write!(f, "moduli {a} and {b} are not coprime")
            }
            ArithError::Overflow => write!(f, "intermediate value exceeds u64"),
        }
    }
}

impl core::error::Error for ArithError {}

/// Greatest common divisor with the convention `gcd(x, 0) = x`.
pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// `a * b mod m`, widened through `u128` so it cannot overflow. `m >= 1`.
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    debug_assert!(m >= 1);
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `base^exp mod m` by binary exponentiation. `m >= 1`; `0^0 = 1 mod m`.
pub fn pow_mod(base: u64, exp: u64, m: u64) -> u64 {
    debug_assert!(m >= 1);
    let mut acc = 1 % m;
    let mut b = base % m;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Prime factorization as sorted `(prime, exponent)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    value: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn value(&self) -> u64 {
        self.value
    }

    /// Sorted `(prime, exponent)` pairs; empty exactly for value 1.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    pub fn is_prime_power(&self) -> Option<(u64, u32)> {
        match self.factors.as_slice() {
            [(p, e)] => Some((*p, *e)),
            _ => None,
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    /// All divisors of the value, sorted ascending.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = alloc::vec![1u64];
        for &(p, e) in &self.factors {
            let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
            for &d in &divs {
                let mut pk = 1u64;
                for _ in 0..=e {
                    next.push(d * pk);
                    if pk <= u64::MAX / p {
                        pk *= p;
                    }
                }
            }
            divs = next;
        }
        divs.sort_unstable();
        divs
    }
}

/// Factorizes `value >= 1` by deterministic trial division (2, 3, then 6k+-1).
/// Exact and branch-free of probabilistic primality; intended for the desk
/// scale of this crate (inputs up to ~10^9 stay well under a millisecond).
pub fn factorize(value: u64) -> Result<Factorization, ArithError> {
    if value == 0 {
        return Err(ArithError::ZeroValue);
    }
    let mut rest = value;
    let mut factors = Vec::new();
    let mut push = |p: u64, rest: &mut u64| {
        let mut e = 0u32;
        while *rest % p == 0 {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    push(2, &mut rest);
    push(3, &mut rest);
    let mut p = 5u64;
    while p <= rest / p {
        push(p, &mut rest);
        push(p + 2, &mut rest);
        p += 6;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    factors.sort_unstable();
    Ok(Factorization { value, factors })
}

/// Deterministic primality via the same trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    factorize(n).expect("n >= 2").factors == [(n, 1)]
}

/// Euler's totient. `k >= 1`.
pub fn euler_phi(k: u64) -> u64 {
    assert!(k >= 1, "euler_phi requires k >= 1");
    let mut phi = k;
    for &(p, _) in factorize(k).expect("k >= 1").factors() {
        phi = phi / p * (p - 1);
    }
    phi
}

/// True iff no square of a prime divides `value`. `value >= 1`.
pub fn is_squarefree(value: u64) -> bool {
    assert!(value >= 1, "is_squarefree requires value >= 1");
    factorize(value).expect("value >= 1").is_squarefree()
}

/// Multiplicative order of `r` modulo `m` (`m >= 1`, `gcd(r, m) = 1`).
///
/// Starts from `phi(m)` and strips prime factors while the power stays 1,
/// so the cost is polynomial in `log m` rather than linear in the order.
pub fn mult_order(r: u64, m: u64) -> Result<u64, ArithError> {
    if m == 0 {
        return Err(ArithError::ZeroValue);
    }
    if m == 1 {
        return Ok(1);
    }
    let r = r % m;
    if gcd(r, m) != 1 {
        return Err(ArithError::NotCoprime { r, m });
    }
    let mut d = euler_phi(m);
    for &(p, _) in factorize(d).expect("phi >= 1").factors() {
        while d % p == 0 && pow_mod(r, d / p, m) == 1 {
            d /= p;
        }
    }
    debug_assert_eq!(pow_mod(r, d, m), 1);
    Ok(d)
}

/// Solves `x = a_i (mod m_i)` for pairwise coprime moduli.
///
/// Returns `(x, M)` with `M` the product of the moduli and `0 <= x < M`;
/// the empty system yields `(0, 1)`.
pub fn crt_solve(congruences: &[(u64, u64)]) -> Result<(u64, u64), ArithError> {
    let mut x: u64 = 0;
    let mut modulus: u64 = 1;
    for &(a, m) in congruences {
        if m == 0 {
            return Err(ArithError::ZeroValue);
        }
        let g = gcd(modulus, m);
        if g != 1 {
            return Err(ArithError::ModuliNotCoprime { a: modulus, b: m });
        }
        let combined = modulus.checked_mul(m).ok_or(ArithError::Overflow)?;
        // x + modulus * t = a (mod m)  =>  t = (a - x) / modulus (mod m)
        let diff = (a % m + m - x % m) % m;
        let inv = mod_inverse(modulus % m, m).expect("coprime by the gcd check");
        let t = mul_mod(diff, inv, m);
        x += modulus * t;
        modulus = combined;
    }
    Ok((x, modulus))
}

/// Inverse of `a` modulo `m`, when it exists.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    // Extended Euclid over signed 128-bit; m < 2^64 keeps everything in range.
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}
