//! Split metacyclic groups `G(m, n, r)` = `<a, b | a^m = b^n = 1, b a b^-1 = a^r>`.
//!
//! Elements are normal forms `a^i b^j` with `0 <= i < m`, `0 <= j < n`, and
//! the whole group law is the single rule `b^j a = a^(r^j) b^j`. The datum
//! is valid when `r^n = 1 (mod m)`, which is exactly what makes the
//! conjugation action of `b` on `<a>` well defined. When `n = 1` the action
//! is vacuous, so any `r` is accepted and stored as `1 mod m`.
//!
//! Enumeration counts *metacyclic* isomorphism classes only: groups that
//! need more than two generators (for example `Z3 x Z3 x Z7`) never arise
//! from these presentations and are intentionally outside the census. For
//! odd orders this loses nothing when hunting embeddable groups, since the
//! classification rules force those groups to be Sylow-cyclic, hence
//! metacyclic.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{self, gcd, mul_mod, pow_mod};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    /// `m` and `n` must be positive.
    ZeroParameter,
    /// `r^n != 1 (mod m)`: the conjugation action is not well defined.
    InvalidPresentation { m: u64, n: u64, r: u64 },
    /// `m * n` exceeds `u64`.
    OrderOverflow,
    /// Elements belong to different presentations.
    MixedOwners,
    /// A search-heavy operation was asked to exceed its order bound.
    OrderTooLarge { order: u64, bound: u64 },
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::ZeroParameter => write!(f, "m and n must be positive"),
            GroupError::InvalidPresentation { m, n, r } => {
                write!(f, "invalid presentation: {r}^{n} != 1 (mod {m})")
            }
            GroupError::OrderOverflow => write!(f, "group order m*n exceeds u64"),
            GroupError::MixedOwners => write!(f, "elements belong to different groups"),
            GroupError::OrderTooLarge { order, bound } => {
                write!(f, "group order {order} exceeds the search bound {bound}")
            }
        }
    }
}

impl core::error::Error for GroupError {}

/// A validated presentation `G(m, n, r)`. Construct via [`Presentation::validate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Presentation {
    m: u64,
    n: u64,
    r: u64,
}

/// Normal form `a^i b^j` tagged with its owning presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Element {
    group: Presentation,
    i: u64,
    j: u64,
}

/// Abelian / cyclic structure read off the parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructureFlags {
    /// `r = 1 (mod m)`: the conjugation action is trivial.
    pub is_abelian: bool,
    /// Abelian with `gcd(m, n) = 1`, i.e. `Z_m x Z_n` is cyclic.
    pub is_cyclic: bool,
}

/// The center as a generated subgroup: `<a^(m/g)> x <b^o>` with
/// `g = gcd(m, r - 1)` and `o` the order of `r` mod `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterDescription {
    pub generators: Vec<Element>,
    pub order: u64,
}

impl Presentation {
    /// Checks `m, n >= 1` and `r^n = 1 (mod m)` and returns the canonical
    /// stored form: `r` reduced mod `m`, and `r = 1 mod m` when `n = 1`
    /// (where the action is vacuous and the input `r` is irrelevant).
    pub fn validate(m: u64, n: u64, r: u64) -> Result<Presentation, GroupError> {
        if m == 0 || n == 0 {
            return Err(GroupError::ZeroParameter);
        }
        m.checked_mul(n).ok_or(GroupError::OrderOverflow)?;
        if n == 1 {
            return Ok(Presentation { m, n, r: 1 % m });
        }
        let r = r % m;
        if pow_mod(r, n, m) != 1 % m {
            return Err(GroupError::InvalidPresentation { m, n, r });
        }
        Ok(Presentation { m, n, r })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn order(&self) -> u64 {
        self.m * self.n
    }

    /// `a^i b^j` with the exponents reduced into range.
    pub fn element(&self, i: u64, j: u64) -> Element {
        Element {
            group: *self,
            i: i % self.m,
            j: j % self.n,
        }
    }

    pub fn identity(&self) -> Element {
        self.element(0, 0)
    }

    pub fn gen_a(&self) -> Element {
        self.element(1, 0)
    }

    pub fn gen_b(&self) -> Element {
        self.element(0, 1)
    }

    /// All `m * n` normal forms, `(i, j)` lexicographic.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.m).flat_map(move |i| (0..self.n).map(move |j| self.element(i, j)))
    }

    /// `(a^i b^j)(a^i' b^j') = a^(i + r^j i') b^(j + j')`.
    pub fn mul(&self, x: &Element, y: &Element) -> Result<Element, GroupError> {
        self.own(x)?;
        self.own(y)?;
        Ok(self.mul_raw(x, y))
    }

    fn own(&self, x: &Element) -> Result<(), GroupError> {
        if x.group != *self {
            return Err(GroupError::MixedOwners);
        }
        Ok(())
    }

    fn mul_raw(&self, x: &Element, y: &Element) -> Element {
        let twist = pow_mod(self.r, x.j, self.m);
        Element {
            group: *self,
            i: (x.i + mul_mod(twist, y.i, self.m)) % self.m,
            j: (x.j + y.j) % self.n,
        }
    }

    pub fn inverse(&self, x: &Element) -> Result<Element, GroupError> {
        self.own(x)?;
        let j_inv = (self.n - x.j) % self.n;
        // r^(-j) = r^(n - j) because r^n = 1 (mod m)
        let twist = pow_mod(self.r, j_inv, self.m);
        let i_inv = (self.m - mul_mod(twist, x.i, self.m)) % self.m;
        Ok(Element {
            group: *self,
            i: i_inv,
            j: j_inv,
        })
    }

    pub fn pow(&self, x: &Element, e: u64) -> Result<Element, GroupError> {
        self.own(x)?;
        let mut acc = self.identity();
        let mut base = *x;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_raw(&acc, &base);
            }
            base = self.mul_raw(&base, &base);
            e >>= 1;
        }
        Ok(acc)
    }

    /// Multiplicative order of `x = a^i b^j` in closed form: with
    /// `d = n / gcd(n, j)` the order of `b^j`, the power
    /// `x^d = a^(i (1 + r^j + ... + r^((d-1) j)))` lands in `<a>`, so the
    /// order is `d * m / gcd(m, e)` for that exponent `e`.
    pub fn element_order(&self, x: &Element) -> Result<u64, GroupError> {
        self.own(x)?;
        let d = self.n / gcd(self.n, x.j);
        let rj = pow_mod(self.r, x.j, self.m);
        let mut geometric = 0u64;
        let mut power = 1 % self.m;
        for _ in 0..d {
            geometric = (geometric + power) % self.m;
            power = mul_mod(power, rj, self.m);
        }
        let e = mul_mod(x.i, geometric, self.m);
        Ok(d * (self.m / gcd(self.m, e)))
    }

    /// `r = 1 (mod m)` iff abelian; cyclic additionally needs `gcd(m,n) = 1`.
    pub fn structure_flags(&self) -> StructureFlags {
        let is_abelian = self.r == 1 % self.m;
        StructureFlags {
            is_abelian,
            is_cyclic: is_abelian && gcd(self.m, self.n) == 1,
        }
    }

    /// Center by the closed form: `a^i b^j` is central iff `r^j = 1 (mod m)`
    /// (commutes with `a`) and `m | i(r - 1)` (commutes with `b`).
    pub fn center(&self) -> CenterDescription {
        let g = gcd(self.m, (self.r + self.m - 1 % self.m) % self.m);
        let g = if g == 0 { self.m } else { g }; // gcd(m, 0) = m when r = 1
        let o = arith::mult_order(self.r, self.m).expect("r is a unit mod m");
        let mut generators = Vec::new();
        if g > 1 {
            generators.push(self.element(self.m / g, 0));
        }
        if self.n / o > 1 {
            generators.push(self.element(0, o));
        }
        CenterDescription {
            generators,
            order: g * (self.n / o),
        }
    }

    /// Brute-force center: every element tested against every element.
    /// Quadratic; used as the oracle for [`Presentation::center`].
    pub fn center_brute_force(&self) -> Vec<Element> {
        self.elements()
            .filter(|x| {
                self.elements()
                    .all(|y| self.mul_raw(x, &y) == self.mul_raw(&y, x))
            })
            .collect()
    }

    /// A `p`-Sylow subgroup, built from the semidirect structure: the unique
    /// `p^alpha`-subgroup of `<a>` extended by the `p^beta`-part of `<b>`.
    /// Returns the full element list, `(i, j)` sorted. Empty exponent
    /// (p does not divide the order) yields just the identity.
    pub fn sylow_subgroup(&self, p: u64) -> Vec<Element> {
        assert!(arith::is_prime(p), "p must be prime");
        let mut pa = 1u64;
        while self.m % (pa * p) == 0 {
            pa *= p;
        }
        let mut pb = 1u64;
        while self.n % (pb * p) == 0 {
            pb *= p;
        }
        let a_step = self.m / pa;
        let b_step = self.n / pb;
        let mut elems = Vec::with_capacity((pa * pb) as usize);
        for s in 0..pa {
            for t in 0..pb {
                elems.push(self.element(s * a_step, t * b_step));
            }
        }
        elems.sort_unstable();
        elems
    }

    #[cfg(test)]
    fn is_closed(&self, elems: &[Element]) -> bool {
        let set: alloc::collections::BTreeSet<(u64, u64)> =
            elems.iter().map(|e| (e.i, e.j)).collect();
        elems.iter().all(|x| {
            elems.iter().all(|y| {
                let z = self.mul_raw(x, y);
                set.contains(&(z.i, z.j))
            })
        })
    }

    /// Checks every Sylow subgroup for cyclicity by maximal element order.
    pub fn is_sylow_cyclic_direct(&self) -> bool {
        self.sylow_cyclic_witness().is_none()
    }

    /// The first prime (ascending) whose Sylow subgroup is noncyclic,
    /// together with the subgroup order and the maximal element order found.
    pub fn sylow_cyclic_witness(&self) -> Option<(u64, u64, u64)> {
        let fact = arith::factorize(self.order()).expect("order >= 1");
        for &(p, _) in fact.factors() {
            let sub = self.sylow_subgroup(p);
            let size = sub.len() as u64;
            let max_order = sub
                .iter()
                .map(|x| self.element_order(x).expect("own element"))
                .max()
                .unwrap_or(1);
            if max_order != size {
                return Some((p, size, max_order));
            }
        }
        None
    }

    /// Subgroup generated by `gens` (BFS over right multiplication),
    /// sorted `(i, j)`. Fails with `OrderTooLarge` past `bound` elements.
    pub fn generated_subgroup(
        &self,
        gens: &[Element],
        bound: u64,
    ) -> Result<Vec<Element>, GroupError> {
        for g in gens {
            self.own(g)?;
        }
        let idx = |e: &Element| (e.i * self.n + e.j) as usize;
        let mut seen = alloc::vec![false; self.order() as usize];
        let mut out = Vec::new();
        let mut frontier = Vec::new();
        let id = self.identity();
        seen[idx(&id)] = true;
        out.push(id);
        frontier.push(id);
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = self.mul_raw(&x, g);
                if !seen[idx(&y)] {
                    if out.len() as u64 >= bound {
                        return Err(GroupError::OrderTooLarge {
                            order: self.order(),
                            bound,
                        });
                    }
                    seen[idx(&y)] = true;
                    out.push(y);
                    frontier.push(y);
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Map `order -> count` over all elements.
    pub fn element_order_histogram(&self) -> BTreeMap<u64, u64> {
        let mut hist = BTreeMap::new();
        for x in self.elements() {
            let d = self.element_order(&x).expect("own element");
            *hist.entry(d).or_insert(0) += 1;
        }
        hist
    }

    /// Dicyclic test: `|G| = 4q` with generators `x` of order `2q` and
    /// `y` satisfying `y^2 = x^q`, `y x y^-1 = x^-1`. Split metacyclic
    /// 2-groups are never dicyclic (they have at least two involutions),
    /// but mixed orders can be: `G(3, 4, 2)` is the dicyclic group of
    /// order 12.
    pub fn is_dicyclic(&self) -> bool {
        let order = self.order();
        if order % 4 != 0 || order < 8 {
            return false;
        }
        let q = order / 4;
        let candidates: Vec<Element> = self
            .elements()
            .filter(|x| self.element_order(x).expect("own") == 2 * q)
            .collect();
        for x in &candidates {
            let x_q = self.pow(x, q).expect("own");
            let x_inv = self.inverse(x).expect("own");
            let x_subgroup = self
                .generated_subgroup(core::slice::from_ref(x), order)
                .expect("within bound");
            for y in self.elements() {
                if x_subgroup.binary_search(&y).is_ok() {
                    continue;
                }
                let y_sq = self.mul_raw(&y, &y);
                if y_sq != x_q {
                    continue;
                }
                let y_inv = self.inverse(&y).expect("own");
                let conj = self.mul_raw(&self.mul_raw(&y, x), &y_inv);
                if conj == x_inv {
                    return true;
                }
            }
        }
        false
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({}, {}, {})", self.m, self.n, self.r)
    }
}

impl Element {
    pub fn i(&self) -> u64 {
        self.i
    }

    pub fn j(&self) -> u64 {
        self.j
    }

    pub fn group(&self) -> &Presentation {
        &self.group
    }

    pub fn mul(&self, other: &Element) -> Result<Element, GroupError> {
        self.group.mul(self, other)
    }

    pub fn inverse(&self) -> Element {
        self.group.inverse(self).expect("own element")
    }

    pub fn pow(&self, e: u64) -> Element {
        self.group.pow(self, e).expect("own element")
    }

    pub fn order(&self) -> u64 {
        self.group.element_order(self).expect("own element")
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.i, self.j) {
            (0, 0) => write!(f, "1"),
            (0, 1) => write!(f, "b"),
            (0, j) => write!(f, "b^{j}"),
            (1, 0) => write!(f, "a"),
            (i, 0) => write!(f, "a^{i}"),
            (1, 1) => write!(f, "a b"),
            (1, j) => write!(f, "a b^{j}"),
            (i, 1) => write!(f, "a^{i} b"),
            (i, j) => write!(f, "a^{i} b^{j}"),
        }
    }
}

/// Generator-image isomorphism search.
///
/// Maps `a -> x`, `b -> y` over all `x` of order exactly `m` and `y` of
/// order exactly `n` in `h`; the relations `x^m = 1`, `y^n = 1`,
/// `y x y^-1 = x^r` make the map a homomorphism, and generation plus equal
/// orders make it bijective. Groups of different orders are simply not
/// isomorphic (no error). Orders above `bound` are refused.
pub fn are_isomorphic(g: &Presentation, h: &Presentation, bound: u64) -> Result<bool, GroupError> {
    if g.order() != h.order() {
        return Ok(false);
    }
    if g.order() > bound {
        return Err(GroupError::OrderTooLarge {
            order: g.order(),
            bound,
        });
    }
    if g == h {
        return Ok(true);
    }
    // cheap invariant: element order histograms must agree
    if g.element_order_histogram() != h.element_order_histogram() {
        return Ok(false);
    }
    let mut by_order: BTreeMap<u64, Vec<Element>> = BTreeMap::new();
    for e in h.elements() {
        by_order.entry(e.order()).or_default().push(e);
    }
    let empty = Vec::new();
    let xs = by_order.get(&g.m()).unwrap_or(&empty);
    let ys = by_order.get(&g.n()).unwrap_or(&empty);
    for x in xs {
        let x_r = h.pow(x, g.r()).expect("own");
        for y in ys {
            let y_inv = h.inverse(y).expect("own");
            let conj = h
                .mul(&h.mul(y, x).expect("own"), &y_inv)
                .expect("own");
            if conj != x_r {
                continue;
            }
            let closure = h.generated_subgroup(&[*x, *y], bound)?;
            if closure.len() as u64 == h.order() {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Searches all same-order presentations for one isomorphic to `g` with
/// `gcd(m', n'(r' - 1)) = 1` (the coprime normal form that characterizes
/// Sylow-cyclic groups). Candidates are scanned in `(m', n', r')` order, so
/// cyclic groups come back as `(1, order, 0)`.
pub fn hbz_representation(
    g: &Presentation,
    bound: u64,
) -> Result<Option<Presentation>, GroupError> {
    let order = g.order();
    if order > bound {
        return Err(GroupError::OrderTooLarge { order, bound });
    }
    let g_hist = g.element_order_histogram();
    let fact = arith::factorize(order).expect("order >= 1");
    for m in fact.divisors() {
        let n = order / m;
        for cand in valid_presentations(m, n) {
            // gcd(m', n'(r'-1)) = 1, with gcd(x, 0) = x covering r' = 1
            let shifted = (cand.r() + m - 1 % m) % m;
            let co = num_integer::gcd(m as u128, n as u128 * shifted as u128);
            if co != 1 {
                continue;
            }
            if cand.element_order_histogram() != g_hist {
                continue;
            }
            if are_isomorphic(g, &cand, bound)? {
                return Ok(Some(cand));
            }
        }
    }
    Ok(None)
}

/// All valid presentations with the given `m`, `n` (ascending `r`).
/// For `n = 1` the single normalized representative is returned.
pub(crate) fn valid_presentations(m: u64, n: u64) -> Vec<Presentation> {
    if n == 1 {
        return alloc::vec![Presentation::validate(m, 1, 0).expect("n = 1 always valid")];
    }
    (0..m)
        .filter_map(|r| Presentation::validate(m, n, r).ok())
        .collect()
}

/// One isomorphism class of metacyclic groups of a fixed order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationClass {
    /// Representative with the smallest `(n, m, r)` among class members.
    pub representative: Presentation,
    /// Number of valid presentations of this order in the class.
    pub members: u64,
    pub sylow_cyclic: bool,
}

/// Enumerates all valid presentations of the given order and groups them
/// into isomorphism classes. Representatives minimize `(n, m, r)`
/// lexicographically; classes are returned in that key order.
pub fn enumerate_presentations(
    order: u64,
    bound: u64,
) -> Result<Vec<PresentationClass>, GroupError> {
    if order == 0 {
        return Err(GroupError::ZeroParameter);
    }
    if order > bound {
        return Err(GroupError::OrderTooLarge { order, bound });
    }
    let fact = arith::factorize(order).expect("order >= 1");
    let mut all = Vec::new();
    for m in fact.divisors() {
        all.extend(valid_presentations(m, order / m));
    }
    all.sort_unstable_by_key(|p| (p.n(), p.m(), p.r()));
    all.dedup();

    let mut classes: Vec<(PresentationClass, BTreeMap<u64, u64>)> = Vec::new();
    'next: for cand in all {
        let hist = cand.element_order_histogram();
        for (class, class_hist) in classes.iter_mut() {
            if *class_hist == hist
                && are_isomorphic(&class.representative, &cand, bound)?
            {
                class.members += 1;
                continue 'next;
            }
        }
        classes.push((
            PresentationClass {
                representative: cand,
                members: 1,
                sylow_cyclic: cand.is_sylow_cyclic_direct(),
            },
            hist,
        ));
    }
    Ok(classes.into_iter().map(|(c, _)| c).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;
    use crate::DESK_BOUND;

    fn g(m: u64, n: u64, r: u64) -> Presentation {
        Presentation::validate(m, n, r).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(Presentation::validate(7, 9, 2).is_ok());
        assert_eq!(
            Presentation::validate(7, 9, 3),
            Err(GroupError::InvalidPresentation { m: 7, n: 9, r: 3 })
        );
        // n = 1 accepts any r and normalizes the action to the identity
        let p = Presentation::validate(63, 1, 0).unwrap();
        assert_eq!((p.m(), p.n(), p.r()), (63, 1, 1));
        let t = Presentation::validate(1, 5, 0).unwrap();
        assert_eq!((t.m(), t.n(), t.r()), (1, 5, 0));
        assert_eq!(
            Presentation::validate(0, 5, 0),
            Err(GroupError::ZeroParameter)
        );
    }

    #[test]
    fn normal_form_multiplication() {
        // b * a = a^2 b in G(7, 9, 2)
        let p = g(7, 9, 2);
        let prod = p.mul(&p.gen_b(), &p.gen_a()).unwrap();
        assert_eq!(prod, p.element(2, 1));
        // identity and inverses
        for x in p.elements() {
            assert_eq!(p.mul(&x, &p.identity()).unwrap(), x);
            assert_eq!(p.mul(&p.identity(), &x).unwrap(), x);
            let inv = p.inverse(&x).unwrap();
            assert_eq!(p.mul(&x, &inv).unwrap(), p.identity());
            assert_eq!(p.mul(&inv, &x).unwrap(), p.identity());
        }
    }

    #[test]
    fn mixed_owners_rejected() {
        let p = g(7, 9, 2);
        let q = g(7, 9, 4);
        assert_eq!(
            p.mul(&p.gen_a(), &q.gen_a()),
            Err(GroupError::MixedOwners)
        );
    }

    #[test]
    fn associativity_exhaustive_small_random_large() {
        // exhaustive triples for every presentation of order <= 48,
        // seeded random triples for orders up to 200
        let mut rng = SplitMix64::new(1);
        for order in 1..=200u64 {
            let fact = crate::arith::factorize(order).unwrap();
            for m in fact.divisors() {
                for p in valid_presentations(m, order / m) {
                    if order <= 48 {
                        let elems: Vec<Element> = p.elements().collect();
                        for x in &elems {
                            for y in &elems {
                                let xy = p.mul(x, y).unwrap();
                                for z in &elems {
                                    let yz = p.mul(y, z).unwrap();
                                    assert_eq!(
                                        p.mul(&xy, z).unwrap(),
                                        p.mul(x, &yz).unwrap()
                                    );
                                }
                            }
                        }
                    } else {
                        for _ in 0..50 {
                            let pick = |rng: &mut SplitMix64| {
                                p.element(
                                    rng.uniform(0, p.m() as i64 - 1) as u64,
                                    rng.uniform(0, p.n() as i64 - 1) as u64,
                                )
                            };
                            let (x, y, z) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
                            let xy = p.mul(&x, &y).unwrap();
                            let yz = p.mul(&y, &z).unwrap();
                            assert_eq!(p.mul(&xy, &z).unwrap(), p.mul(&x, &yz).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn element_orders() {
        let p = g(7, 9, 2);
        assert_eq!(p.gen_a().order(), 7);
        assert_eq!(p.gen_b().order(), 9);
        assert_eq!(p.identity().order(), 1);
        // against naive repeated multiplication
        for x in p.elements() {
            let mut acc = x;
            let mut k = 1;
            while acc != p.identity() {
                acc = p.mul(&acc, &x).unwrap();
                k += 1;
            }
            assert_eq!(x.order(), k);
        }
    }

    #[test]
    fn center_formula_matches_brute_force_up_to_150() {
        for order in 1..=150u64 {
            let fact = crate::arith::factorize(order).unwrap();
            for m in fact.divisors() {
                for p in valid_presentations(m, order / m) {
                    let brute = p.center_brute_force();
                    let desc = p.center();
                    assert_eq!(desc.order as usize, brute.len(), "{p}");
                    // generated subgroup of the claimed generators = brute set
                    let generated = p
                        .generated_subgroup(&desc.generators, DESK_BOUND)
                        .unwrap();
                    assert_eq!(generated, brute, "{p}");
                }
            }
        }
    }

    #[test]
    fn center_examples() {
        // G(7, 9, 2): center = <b^3>, order 3
        let p = g(7, 9, 2);
        let c = p.center();
        assert_eq!(c.order, 3);
        assert_eq!(c.generators, alloc::vec![p.element(0, 3)]);
        // G(7, 3, 2): trivial center
        assert_eq!(g(7, 3, 2).center().order, 1);
        // abelian G(21, 3, 1): everything central
        assert_eq!(g(21, 3, 1).center().order, 63);
    }

    #[test]
    fn structure_flags_examples() {
        assert_eq!(
            g(21, 3, 1).structure_flags(),
            StructureFlags { is_abelian: true, is_cyclic: false }
        );
        assert_eq!(
            g(9, 7, 1).structure_flags(),
            StructureFlags { is_abelian: true, is_cyclic: true }
        );
        assert_eq!(
            g(7, 9, 2).structure_flags(),
            StructureFlags { is_abelian: false, is_cyclic: false }
        );
        // cyclic iff some element has full order (oracle), orders <= 100
        for order in 1..=100u64 {
            let fact = crate::arith::factorize(order).unwrap();
            for m in fact.divisors() {
                for p in valid_presentations(m, order / m) {
                    let has_full = p.elements().any(|x| x.order() == order);
                    assert_eq!(p.structure_flags().is_cyclic, has_full, "{p}");
                }
            }
        }
    }

    #[test]
    fn sylow_subgroups() {
        let p = g(7, 9, 2);
        let s3 = p.sylow_subgroup(3);
        assert_eq!(s3.len(), 9);
        assert!(s3.iter().all(|e| e.i() == 0)); // <b>
        let s7 = p.sylow_subgroup(7);
        assert_eq!(s7.len(), 7);
        assert!(s7.iter().all(|e| e.j() == 0)); // <a>

        // G(21, 3, 16): 3-Sylow generated by a^7 and b, order 9
        let q = g(21, 3, 16);
        let s3 = q.sylow_subgroup(3);
        assert_eq!(s3.len(), 9);
        let expected = q
            .generated_subgroup(&[q.element(7, 0), q.gen_b()], DESK_BOUND)
            .unwrap();
        assert_eq!(s3, expected);

        // closure and full prime-power size across small orders
        for order in 1..=100u64 {
            let fact = crate::arith::factorize(order).unwrap();
            for m in fact.divisors() {
                for p in valid_presentations(m, order / m) {
                    for &(prime, exp) in fact.factors() {
                        let sub = p.sylow_subgroup(prime);
                        assert!(p.is_closed(&sub), "{p} p={prime}");
                        assert_eq!(sub.len() as u64, prime.pow(exp), "{p} p={prime}");
                    }
                }
            }
        }
    }

    #[test]
    fn sylow_cyclic_direct() {
        assert!(g(7, 9, 2).is_sylow_cyclic_direct());
        assert!(g(63, 1, 0).is_sylow_cyclic_direct());
        assert!(!g(21, 3, 16).is_sylow_cyclic_direct());
        assert!(!g(21, 3, 1).is_sylow_cyclic_direct());
        let (p, size, max) = g(21, 3, 1).sylow_cyclic_witness().unwrap();
        assert_eq!((p, size, max), (3, 9, 3));
    }

    #[test]
    fn isomorphism_examples() {
        // r -> r^k with gcd(k, n) = 1 gives isomorphic groups
        assert!(are_isomorphic(&g(7, 9, 2), &g(7, 9, 4), DESK_BOUND).unwrap());
        assert!(!are_isomorphic(&g(7, 9, 2), &g(63, 1, 0), DESK_BOUND).unwrap());
        assert!(are_isomorphic(&g(63, 1, 0), &g(9, 7, 1), DESK_BOUND).unwrap());
        assert!(are_isomorphic(&g(63, 1, 0), &g(1, 63, 0), DESK_BOUND).unwrap());
        assert!(!are_isomorphic(&g(21, 3, 1), &g(63, 1, 0), DESK_BOUND).unwrap());
        // different orders: plain false
        assert!(!are_isomorphic(&g(7, 9, 2), &g(7, 3, 2), DESK_BOUND).unwrap());
    }

    #[test]
    fn isomorphism_power_criterion_up_to_100() {
        // G(m, n, r) = G(m, n, r^k) whenever gcd(k, n) = 1
        for order in 2..=100u64 {
            let fact = crate::arith::factorize(order).unwrap();
            for m in fact.divisors() {
                let n = order / m;
                let ps = valid_presentations(m, n);
                for p in &ps {
                    for k in 1..n {
                        if gcd(k, n) != 1 {
                            continue;
                        }
                        let rk = pow_mod(p.r(), k, m);
                        let q = Presentation::validate(m, n, rk).unwrap();
                        assert!(
                            are_isomorphic(p, &q, DESK_BOUND).unwrap(),
                            "{p} vs {q} (k={k})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn hbz_examples() {
        // Z63 as G(63, 1, *) gets the coprime form (1, 63, 0)
        let rep = hbz_representation(&g(63, 1, 0), DESK_BOUND).unwrap().unwrap();
        assert_eq!((rep.m(), rep.n(), rep.r()), (1, 63, 0));
        // G(7, 9, 2) is already coprime: gcd(7, 9*1) = 1
        let rep = hbz_representation(&g(7, 9, 2), DESK_BOUND).unwrap().unwrap();
        let co = gcd(rep.m(), rep.n() * (rep.r() - 1));
        assert_eq!(co, 1);
        assert!(are_isomorphic(&rep, &g(7, 9, 2), DESK_BOUND).unwrap());
        // Z3 x G(7,3,2) is not Sylow-cyclic: no representation exists
        assert_eq!(hbz_representation(&g(21, 3, 16), DESK_BOUND).unwrap(), None);
    }

    #[test]
    fn dicyclic_detection() {
        // G(3, 4, 2) is the dicyclic group of order 12
        assert!(g(3, 4, 2).is_dicyclic());
        // no split metacyclic 2-group of order 8 or 16 is dicyclic
        for order in [8u64, 16] {
            let fact = crate::arith::factorize(order).unwrap();
            for m in fact.divisors() {
                for p in valid_presentations(m, order / m) {
                    assert!(!p.is_dicyclic(), "{p}");
                }
            }
        }
        assert!(!g(7, 9, 2).is_dicyclic());
    }

    #[test]
    fn enumerate_order_63() {
        let classes = enumerate_presentations(63, DESK_BOUND).unwrap();
        assert_eq!(classes.len(), 4);
        let reps: Vec<(u64, u64, u64)> = classes
            .iter()
            .map(|c| (c.representative.m(), c.representative.n(), c.representative.r()))
            .collect();
        assert_eq!(reps, alloc::vec![(63, 1, 1), (21, 3, 1), (21, 3, 4), (7, 9, 2)]);
        let sylow: Vec<bool> = classes.iter().map(|c| c.sylow_cyclic).collect();
        assert_eq!(sylow, alloc::vec![true, false, false, true]);
    }

    #[test]
    fn enumerate_small_orders() {
        // order 1: the trivial group
        assert_eq!(enumerate_presentations(1, DESK_BOUND).unwrap().len(), 1);
        // order p: only Z_p
        assert_eq!(enumerate_presentations(7, DESK_BOUND).unwrap().len(), 1);
        // order 8 metacyclic classes: Z8, Z2xZ4, D4; (Q8 is not split metacyclic)
        assert_eq!(enumerate_presentations(8, DESK_BOUND).unwrap().len(), 3);
        // order 12 metacyclic classes: Z12, Z2xZ6, D6, Dic3 (A4 needs 3 generators)
        assert_eq!(enumerate_presentations(12, DESK_BOUND).unwrap().len(), 4);
        // order 21: Z21 and the nonabelian G(7, 3, 2)
        let classes = enumerate_presentations(21, DESK_BOUND).unwrap();
        assert_eq!(classes.len(), 2);
    }

    #[test]
    fn bound_is_enforced() {
        assert_eq!(
            enumerate_presentations(20_000, DESK_BOUND),
            Err(GroupError::OrderTooLarge { order: 20_000, bound: DESK_BOUND })
        );
        let p = g(101, 101, 1); // order 10201 > bound
        assert!(matches!(
            are_isomorphic(&p, &p, 200),
            Err(GroupError::OrderTooLarge { .. })
        ));
    }
}
