//! Truncated Witt vectors over perfect fields of prime characteristic, and
//! the finite abelian groups built from them.
//!
//! Arithmetic is done through ghost components: an operation is lifted to
//! the integers, where the ghost map is injective, solved exactly, and
//! reduced back. The same solver produces the universal addition and
//! multiplication polynomials, giving two independent routes to every
//! computation. Group-level shortcuts such as `W_t(F_{p^n}) = (Z/p^t)^n`
//! are kept separate so they can be cross-checked against the vector
//! arithmetic.

pub mod poly;

pub use poly::IntPolynomial;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{factorize, is_prime};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WittError {
    NotPrime(u64),
    ZeroFieldDegree,
    CharacteristicMismatch { expected: u64, found: u64 },
    InfiniteInvariantFactor,
    InvariantFactorTooLarge(BigUint),
    LengthBoundExceeded { length: usize, bound: usize },
    NonConcreteField(FieldSpec),
}

impl fmt::Display for WittError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WittError::NotPrime(n) => write!(f, "{n} is not prime"),
            WittError::ZeroFieldDegree => write!(f, "finite field degree must be positive"),
            WittError::CharacteristicMismatch { expected, found } => {
                write!(f, "expected characteristic {expected}, found {found}")
            }
            WittError::InfiniteInvariantFactor => {
                write!(f, "invariant factor 0 describes an infinite group")
            }
            WittError::InvariantFactorTooLarge(n) => {
                write!(f, "cannot factor invariant factor {n}")
            }
            WittError::LengthBoundExceeded { length, bound } => {
                write!(f, "witt length {length} exceeds the polynomial table bound {bound}")
            }
            WittError::NonConcreteField(field) => {
                write!(f, "no concrete group over {field}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for WittError {}

/// The coefficient field of a computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    /// The finite field with `characteristic^degree` elements.
    Finite { characteristic: u64, degree: u32 },
    /// An arbitrary perfect field of the given characteristic, kept
    /// symbolic; answers stay in terms of `W_t(k)`.
    SymbolicPerfect { characteristic: u64 },
    /// A field of characteristic zero with the given transcendence degree
    /// over the rationals (`None` keeps it symbolic).
    CharZero { transcendence_degree: Option<u64> },
}

impl FieldSpec {
    pub fn finite(characteristic: u64, degree: u32) -> Result<Self, WittError> {
        if !is_prime(characteristic) {
            return Err(WittError::NotPrime(characteristic));
        }
        if degree == 0 {
            return Err(WittError::ZeroFieldDegree);
        }
        Ok(FieldSpec::Finite { characteristic, degree })
    }

    pub fn symbolic(characteristic: u64) -> Result<Self, WittError> {
        if !is_prime(characteristic) {
            return Err(WittError::NotPrime(characteristic));
        }
        Ok(FieldSpec::SymbolicPerfect { characteristic })
    }

    pub fn char_zero(transcendence_degree: Option<u64>) -> Self {
        FieldSpec::CharZero { transcendence_degree }
    }

    /// Characteristic of the field, with 0 for characteristic zero.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Finite { characteristic, .. } => *characteristic,
            FieldSpec::SymbolicPerfect { characteristic } => *characteristic,
            FieldSpec::CharZero { .. } => 0,
        }
    }

    /// Dimension over the prime field, when the field is finite.
    pub fn residue_degree(&self) -> Option<u32> {
        match self {
            FieldSpec::Finite { degree, .. } => Some(*degree),
            _ => None,
        }
    }

    pub fn order(&self) -> Option<BigUint> {
        match self {
            FieldSpec::Finite { characteristic, degree } => {
                Some(BigUint::from(*characteristic).pow(*degree))
            }
            _ => None,
        }
    }

    pub(crate) fn expect_characteristic(&self, p: u64) -> Result<(), WittError> {
        if self.characteristic() == p {
            Ok(())
        } else {
            Err(WittError::CharacteristicMismatch { expected: p, found: self.characteristic() })
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Finite { .. } => write!(f, "F_{}", self.order().expect("finite")),
            FieldSpec::SymbolicPerfect { characteristic } => {
                write!(f, "k (perfect, char {characteristic})")
            }
            FieldSpec::CharZero { transcendence_degree: Some(tau) } => {
                write!(f, "k (char 0, trdeg {tau})")
            }
            FieldSpec::CharZero { transcendence_degree: None } => write!(f, "k (char 0)"),
        }
    }
}

/// Ghost components of an integer coordinate vector:
/// `w_i = sum over j <= i of p^j x_j^(p^(i-j))`.
pub fn ghost_components(p: u64, coords: &[BigInt]) -> Vec<BigInt> {
    (0..coords.len())
        .map(|i| {
            let mut total = BigInt::zero();
            for (j, coord) in coords.iter().enumerate().take(i + 1) {
                let weight = BigInt::from(p).pow(j as u32);
                let exponent = frobenius_exponent(p, i - j);
                total += weight * coord.pow(exponent);
            }
            total
        })
        .collect()
}

/// Coordinate vector with the given ghost components. The divisions must be
/// exact; they are whenever the targets come from a polynomial identity in
/// ghost coordinates, and any failure is a bug.
fn solve_ghost_values(p: u64, targets: &[BigInt]) -> Vec<BigInt> {
    let mut coords: Vec<BigInt> = Vec::with_capacity(targets.len());
    for (i, target) in targets.iter().enumerate() {
        let mut residual = target.clone();
        for (j, coord) in coords.iter().enumerate() {
            let weight = BigInt::from(p).pow(j as u32);
            let exponent = frobenius_exponent(p, i - j);
            residual -= weight * coord.pow(exponent);
        }
        let (quotient, remainder) = residual.div_rem(&BigInt::from(p).pow(i as u32));
        assert!(remainder.is_zero(), "ghost lift is not integral at component {i}");
        coords.push(quotient);
    }
    coords
}

fn frobenius_exponent(p: u64, steps: usize) -> u32 {
    p.checked_pow(steps as u32)
        .and_then(|e| u32::try_from(e).ok())
        .expect("witt length too large for ghost arithmetic")
}

/// Ghost component polynomials `w_0 .. w_(length-1)` in the variables
/// `offset .. offset+length` of an `arity`-variable polynomial ring.
pub fn ghost_polynomials(p: u64, length: usize, arity: usize, offset: usize) -> Vec<IntPolynomial> {
    (0..length)
        .map(|i| {
            let mut total = IntPolynomial::zero(arity);
            for j in 0..=i {
                let var = IntPolynomial::variable(arity, offset + j);
                let weight = BigInt::from(p).pow(j as u32);
                total = total.add(&var.pow(frobenius_exponent(p, i - j)).scale(&weight));
            }
            total
        })
        .collect()
}

fn solve_ghost_polynomials(p: u64, targets: &[IntPolynomial]) -> Vec<IntPolynomial> {
    let arity = targets.first().map_or(0, IntPolynomial::arity);
    let mut coords: Vec<IntPolynomial> = Vec::with_capacity(targets.len());
    for (i, target) in targets.iter().enumerate() {
        let mut residual = target.clone();
        for (j, coord) in coords.iter().enumerate() {
            let weight = BigInt::from(p).pow(j as u32);
            let exponent = frobenius_exponent(p, i - j);
            residual = residual.sub(&coord.pow(exponent).scale(&weight));
        }
        let quotient = residual
            .div_exact_scalar(&BigInt::from(p).pow(i as u32))
            .expect("universal witt polynomial is not integral");
        coords.push(quotient);
        debug_assert_eq!(coords[i].arity(), arity);
    }
    coords
}

/// Default length bound for the symbolic addition law; the polynomials
/// grow rapidly past this.
pub const SUM_POLYNOMIAL_LENGTH_BOUND: usize = 5;

/// Default length bound for the symbolic multiplication law, which grows
/// much faster than addition.
pub const PRODUCT_POLYNOMIAL_LENGTH_BOUND: usize = 3;

/// Universal addition polynomials `S_0 .. S_(length-1)` in `2*length`
/// variables (first the coordinates of `a`, then of `b`), characterized by
/// `w_i(S) = w_i(a) + w_i(b)`.
pub fn witt_sum_polynomials(p: u64, length: usize) -> Result<Vec<IntPolynomial>, WittError> {
    witt_sum_polynomials_with_bound(p, length, SUM_POLYNOMIAL_LENGTH_BOUND)
}

pub fn witt_sum_polynomials_with_bound(
    p: u64,
    length: usize,
    bound: usize,
) -> Result<Vec<IntPolynomial>, WittError> {
    if !is_prime(p) {
        return Err(WittError::NotPrime(p));
    }
    if length > bound {
        return Err(WittError::LengthBoundExceeded { length, bound });
    }
    let left = ghost_polynomials(p, length, 2 * length, 0);
    let right = ghost_polynomials(p, length, 2 * length, length);
    let targets: Vec<IntPolynomial> =
        left.iter().zip(&right).map(|(l, r)| l.add(r)).collect();
    Ok(solve_ghost_polynomials(p, &targets))
}

/// Universal multiplication polynomials, characterized by
/// `w_i(M) = w_i(a) * w_i(b)`.
pub fn witt_product_polynomials(p: u64, length: usize) -> Result<Vec<IntPolynomial>, WittError> {
    witt_product_polynomials_with_bound(p, length, PRODUCT_POLYNOMIAL_LENGTH_BOUND)
}

pub fn witt_product_polynomials_with_bound(
    p: u64,
    length: usize,
    bound: usize,
) -> Result<Vec<IntPolynomial>, WittError> {
    if !is_prime(p) {
        return Err(WittError::NotPrime(p));
    }
    if length > bound {
        return Err(WittError::LengthBoundExceeded { length, bound });
    }
    let left = ghost_polynomials(p, length, 2 * length, 0);
    let right = ghost_polynomials(p, length, 2 * length, length);
    let targets: Vec<IntPolynomial> =
        left.iter().zip(&right).map(|(l, r)| l.mul(r)).collect();
    Ok(solve_ghost_polynomials(p, &targets))
}

/// An element of `W_t(F_p)`, coordinates stored as canonical residues.
#[derive(Clone, PartialEq, Eq)]
pub struct WittVector {
    p: u64,
    coords: Vec<u64>,
}

impl WittVector {
    pub fn new(p: u64, coords: Vec<u64>) -> Result<Self, WittError> {
        if !is_prime(p) {
            return Err(WittError::NotPrime(p));
        }
        let coords = coords.into_iter().map(|c| c % p).collect();
        Ok(WittVector { p, coords })
    }

    pub fn zero(p: u64, length: usize) -> Result<Self, WittError> {
        Self::new(p, alloc::vec![0; length])
    }

    pub fn unit(p: u64, length: usize) -> Result<Self, WittError> {
        assert!(length >= 1, "unit needs positive length");
        let mut coords = alloc::vec![0; length];
        coords[0] = 1;
        Self::new(p, coords)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    fn lifted(&self) -> Vec<BigInt> {
        self.coords.iter().map(|&c| BigInt::from(c)).collect()
    }

    pub fn ghost_components(&self) -> Vec<BigInt> {
        ghost_components(self.p, &self.lifted())
    }

    fn check_compatible(&self, other: &Self) {
        assert_eq!(self.p, other.p, "witt vectors over different primes");
        assert_eq!(self.coords.len(), other.coords.len(), "witt length mismatch");
    }

    fn from_ghost_targets(p: u64, targets: &[BigInt]) -> Self {
        let coords = solve_ghost_values(p, targets)
            .into_iter()
            .map(|x| {
                u64::try_from(x.mod_floor(&BigInt::from(p))).expect("residue fits u64")
            })
            .collect();
        WittVector { p, coords }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let targets: Vec<BigInt> = self
            .ghost_components()
            .into_iter()
            .zip(other.ghost_components())
            .map(|(l, r)| l + r)
            .collect();
        Self::from_ghost_targets(self.p, &targets)
    }

    pub fn neg(&self) -> Self {
        let targets: Vec<BigInt> =
            self.ghost_components().into_iter().map(|g| -g).collect();
        Self::from_ghost_targets(self.p, &targets)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let targets: Vec<BigInt> = self
            .ghost_components()
            .into_iter()
            .zip(other.ghost_components())
            .map(|(l, r)| l * r)
            .collect();
        Self::from_ghost_targets(self.p, &targets)
    }

    /// The residue `n` with `self = n * unit`, determined by brute force.
    /// `W_t(F_p)` is cyclic of order `p^t` generated by the unit, so the
    /// search always terminates; it is meant for small groups only.
    pub fn to_residue(&self) -> u64 {
        let order = self
            .p
            .checked_pow(self.coords.len() as u32)
            .filter(|&n| n <= 20_000_000)
            .expect("residue search only for small witt groups");
        let unit = WittVector::unit(self.p, self.coords.len()).expect("p is prime");
        let mut acc = WittVector::zero(self.p, self.coords.len()).expect("p is prime");
        for n in 0..order {
            if acc == *self {
                return n;
            }
            acc = acc.add(&unit);
        }
        unreachable!("unit failed to generate W_t(F_p)");
    }
}

impl fmt::Debug for WittVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W(p={}; {:?})", self.p, self.coords)
    }
}

/// `W_length(k)` as an abstract group: `(Z/p^length)^degree` for the
/// finite field `F_(p^degree)`. Length 0 gives the trivial group; fields
/// without an explicit finite model are rejected.
pub fn witt_group(field: &FieldSpec, length: u32) -> Result<FiniteAbelianGroup, WittError> {
    match field {
        FieldSpec::Finite { characteristic, degree } => {
            FiniteAbelianGroup::cyclic_power(*characteristic, length, BigUint::from(*degree))
        }
        _ => Err(WittError::NonConcreteField(field.clone())),
    }
}

/// A finite abelian group in primary decomposition: multiplicities of the
/// cyclic factors `Z/p^e`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FiniteAbelianGroup {
    /// prime -> exponent -> multiplicity; no zero multiplicities stored.
    parts: BTreeMap<u64, BTreeMap<u32, BigUint>>,
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    /// `(Z/p^exponent)^multiplicity`.
    pub fn cyclic_power(p: u64, exponent: u32, multiplicity: BigUint) -> Result<Self, WittError> {
        if !is_prime(p) {
            return Err(WittError::NotPrime(p));
        }
        let mut group = Self::trivial();
        group.add_cyclic_power(p, exponent, multiplicity);
        Ok(group)
    }

    fn add_cyclic_power(&mut self, p: u64, exponent: u32, multiplicity: BigUint) {
        if exponent == 0 || multiplicity.is_zero() {
            return;
        }
        let slot = self.parts.entry(p).or_default().entry(exponent).or_default();
        *slot += multiplicity;
    }

    /// Torsion group with the given invariant factors; factors of 1 are
    /// ignored, a factor of 0 (an infinite summand) is rejected.
    pub fn from_invariant_factors(factors: &[BigUint]) -> Result<Self, WittError> {
        let mut group = Self::trivial();
        for factor in factors {
            if factor.is_zero() {
                return Err(WittError::InfiniteInvariantFactor);
            }
            let small = u64::try_from(factor)
                .map_err(|_| WittError::InvariantFactorTooLarge(factor.clone()))?;
            for (p, e) in factorize(small) {
                group.add_cyclic_power(p, e, BigUint::one());
            }
        }
        Ok(group)
    }

    pub fn direct_sum_assign(&mut self, other: &Self) {
        for (&p, exponents) in &other.parts {
            for (&e, multiplicity) in exponents {
                self.add_cyclic_power(p, e, multiplicity.clone());
            }
        }
    }

    /// Direct sum of `count` copies of this group.
    pub fn power(&self, count: &BigUint) -> Self {
        let mut result = Self::trivial();
        for (&p, exponents) in &self.parts {
            for (&e, multiplicity) in exponents {
                result.add_cyclic_power(p, e, multiplicity * count);
            }
        }
        result
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut result = self.clone();
        result.direct_sum_assign(other);
        result
    }

    pub fn is_trivial(&self) -> bool {
        self.parts.is_empty()
    }

    /// `(modulus, multiplicity)` pairs, modulus descending.
    pub fn factors(&self) -> Vec<(BigUint, BigUint)> {
        let mut factors: Vec<(BigUint, BigUint)> = self
            .parts
            .iter()
            .flat_map(|(&p, exponents)| {
                exponents
                    .iter()
                    .map(move |(&e, multiplicity)| (BigUint::from(p).pow(e), multiplicity.clone()))
            })
            .collect();
        factors.sort_by(|a, b| b.0.cmp(&a.0));
        factors
    }

    /// Number of elements; `None` when a multiplicity is too large to
    /// exponentiate.
    pub fn order(&self) -> Option<BigUint> {
        let mut order = BigUint::one();
        for (modulus, multiplicity) in self.factors() {
            let exponent = u32::try_from(&multiplicity).ok()?;
            order *= modulus.pow(exponent);
        }
        Some(order)
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .factors()
            .into_iter()
            .map(|(modulus, multiplicity)| {
                if multiplicity.is_one() {
                    alloc::format!("Z/{modulus}")
                } else {
                    alloc::format!("(Z/{modulus})^{multiplicity}")
                }
            })
            .collect();
        write!(f, "{}", rendered.join(" ⊕ "))
    }
}

/// One homogeneous piece of a symbolic answer: `W_(witt_length)(k)` with a
/// multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicTerm {
    pub witt_length: u32,
    pub multiplicity: BigUint,
}

/// A direct sum of truncated Witt groups of a fixed coefficient field,
/// kept symbolic: terms are merged by length and sorted longest first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicGroupSum {
    field: FieldSpec,
    terms: Vec<SymbolicTerm>,
}

impl SymbolicGroupSum {
    pub fn trivial(field: FieldSpec) -> Self {
        SymbolicGroupSum { field, terms: Vec::new() }
    }

    pub fn from_terms(
        field: FieldSpec,
        terms: impl IntoIterator<Item = (u32, BigUint)>,
    ) -> Self {
        let mut sum = Self::trivial(field);
        for (witt_length, multiplicity) in terms {
            sum.push_term(witt_length, multiplicity);
        }
        sum
    }

    pub fn push_term(&mut self, witt_length: u32, multiplicity: BigUint) {
        if witt_length == 0 || multiplicity.is_zero() {
            return;
        }
        match self.terms.binary_search_by(|t| witt_length.cmp(&t.witt_length)) {
            Ok(found) => self.terms[found].multiplicity += multiplicity,
            Err(insert_at) => {
                self.terms.insert(insert_at, SymbolicTerm { witt_length, multiplicity })
            }
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn terms(&self) -> &[SymbolicTerm] {
        &self.terms
    }

    pub fn is_trivial(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total number of Witt summands, ignoring their lengths. For a sum
    /// where every term has length 1 this is the dimension over `k`.
    pub fn total_multiplicity(&self) -> BigUint {
        self.terms.iter().map(|t| &t.multiplicity).sum()
    }

    /// Expand into an explicit finite abelian group; errors when the field
    /// has no concrete finite model.
    pub fn concretize(&self) -> Result<FiniteAbelianGroup, WittError> {
        let mut group = FiniteAbelianGroup::trivial();
        for term in &self.terms {
            group.direct_sum_assign(&witt_group(&self.field, term.witt_length)?.power(&term.multiplicity));
        }
        Ok(group)
    }
}

impl fmt::Display for SymbolicGroupSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .terms
            .iter()
            .map(|term| {
                if term.multiplicity.is_one() {
                    alloc::format!("W_{}(k)", term.witt_length)
                } else {
                    alloc::format!("W_{}(k)^{}", term.witt_length, term.multiplicity)
                }
            })
            .collect();
        write!(f, "{}", rendered.join(" ⊕ "))
    }
}
