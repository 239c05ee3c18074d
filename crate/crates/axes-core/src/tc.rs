//! Relative K-groups of the coordinate axes over a perfect field of
//! positive characteristic, in closed form.
//!
//! Each rotation orbit contributes a truncated Witt group in a pair of
//! periodic tables; the orbits contributing to a fixed degree form a finite
//! index set. Assembling the table values over that index set gives the
//! graded answer, and an independent local formula per `(m', s')` pair is
//! kept as a cross-check.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::arith::{divisors, is_prime, p_adic_split, t_even, t_odd};
use crate::witt::{FieldSpec, FiniteAbelianGroup, SymbolicGroupSum, SymbolicTerm, WittError};
use crate::words::cyc_count;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TcError {
    Witt(WittError),
    ZeroLength,
    PeriodDoesNotDivideLength { length: u64, period: u64 },
    /// The even-length-odd-period class only exists in characteristic 2.
    InvalidParityClass { parity_class: ParityClass, characteristic: u64 },
    /// The parities of `(m', s')` do not contribute to the requested degree.
    DegreeParityMismatch { degree: u64, m_prime: u64, s_prime: u64 },
    NotCoprimeToCharacteristic { m_prime: u64, characteristic: u64 },
}

impl From<WittError> for TcError {
    fn from(err: WittError) -> Self {
        TcError::Witt(err)
    }
}

impl fmt::Display for TcError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TcError::Witt(err) => write!(f, "{err}"),
            TcError::ZeroLength => write!(f, "orbit length must be positive"),
            TcError::PeriodDoesNotDivideLength { length, period } => {
                write!(f, "period {period} does not divide length {length}")
            }
            TcError::InvalidParityClass { parity_class, characteristic } => {
                write!(
                    f,
                    "parity class {parity_class} is not valid in characteristic {characteristic}"
                )
            }
            TcError::DegreeParityMismatch { degree, m_prime, s_prime } => {
                write!(
                    f,
                    "pair (m'={m_prime}, s'={s_prime}) does not contribute in degree {degree}"
                )
            }
            TcError::NotCoprimeToCharacteristic { m_prime, characteristic } => {
                write!(f, "m'={m_prime} must be coprime to the characteristic {characteristic}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for TcError {}

/// Parity pattern of an orbit: length and period parities decide which
/// degrees it feeds and which group it contributes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ParityClass {
    EvenEven,
    OddOdd,
    /// Even length with odd period; occurs only in characteristic 2.
    EvenLengthOddPeriod,
}

impl ParityClass {
    /// The class of an orbit with the given length and period. The period
    /// divides the length, so odd length forces an odd period.
    pub fn classify(length: u64, period: u64) -> Option<ParityClass> {
        match (length % 2, period % 2) {
            (0, 0) => Some(ParityClass::EvenEven),
            (1, 1) => Some(ParityClass::OddOdd),
            (0, 1) => Some(ParityClass::EvenLengthOddPeriod),
            _ => None,
        }
    }

    /// Degrees in which the orbit's tables are supported.
    pub fn active_parity(self) -> DegreeParity {
        match self {
            ParityClass::EvenEven => DegreeParity::Even,
            ParityClass::OddOdd | ParityClass::EvenLengthOddPeriod => DegreeParity::Odd,
        }
    }
}

impl fmt::Display for ParityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ParityClass::EvenEven => "even-even",
            ParityClass::OddOdd => "odd-odd",
            ParityClass::EvenLengthOddPeriod => "even-length-odd-period",
        };
        write!(f, "{name}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeParity {
    Even,
    Odd,
}

impl DegreeParity {
    pub fn of(degree: u64) -> DegreeParity {
        if degree.is_multiple_of(2) {
            DegreeParity::Even
        } else {
            DegreeParity::Odd
        }
    }
}

/// One orbit shape contributing to a fixed degree: length `p^v m'` and
/// period `p^u s'` with `m'`, `s'` coprime to `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SummandIndex {
    m_prime: u64,
    s_prime: u64,
    v: u32,
    u: u32,
    parity_class: ParityClass,
}

impl SummandIndex {
    pub fn m_prime(&self) -> u64 {
        self.m_prime
    }

    pub fn s_prime(&self) -> u64 {
        self.s_prime
    }

    pub fn v(&self) -> u32 {
        self.v
    }

    pub fn u(&self) -> u32 {
        self.u
    }

    pub fn parity_class(&self) -> ParityClass {
        self.parity_class
    }

    /// Orbit length `p^v m'`.
    pub fn length(&self, p: u64) -> u64 {
        p.checked_pow(self.v)
            .and_then(|power| power.checked_mul(self.m_prime))
            .expect("orbit length fits in u64")
    }

    /// Orbit period `p^u s'`.
    pub fn period(&self, p: u64) -> u64 {
        p.checked_pow(self.u)
            .and_then(|power| power.checked_mul(self.s_prime))
            .expect("orbit period fits in u64")
    }
}

/// All orbit shapes with a nonzero contribution to degree `q` over `d`
/// axes in characteristic `p`, sorted.
///
/// Shapes whose Witt length or orbit count vanish are omitted, so the
/// result is empty exactly when the degree-`q` group is trivial.
pub fn decomposition_indices(p: u64, d: u64, q: u64) -> Result<Vec<SummandIndex>, TcError> {
    if !is_prime(p) {
        return Err(WittError::NotPrime(p).into());
    }
    let mut indices = Vec::new();
    let mut push = |m_prime: u64, s_prime: u64, v: u32, u: u32, parity_class: ParityClass| {
        let period = p.pow(u) * s_prime;
        if !cyc_count(d, period).is_zero() {
            indices.push(SummandIndex { m_prime, s_prime, v, u, parity_class });
        }
    };
    if q.is_multiple_of(2) {
        let r = q / 2;
        if p == 2 {
            // Even length and period force positive valuations; the inner
            // index starts at 1.
            for m_prime in (1..=2 * r).step_by(2) {
                let t = t_even(2, r, m_prime);
                for s_prime in divisors(m_prime) {
                    for u in 1..t {
                        push(m_prime, s_prime, t, u, ParityClass::EvenEven);
                    }
                }
            }
        } else {
            for m_prime in (2..=2 * r).step_by(2) {
                if m_prime % p == 0 {
                    continue;
                }
                let t = t_even(p, r, m_prime);
                for s_prime in divisors(m_prime) {
                    if s_prime % 2 != 0 {
                        continue;
                    }
                    for u in 0..t {
                        push(m_prime, s_prime, t, u, ParityClass::EvenEven);
                    }
                }
            }
        }
    } else {
        let r = (q - 1) / 2;
        if p == 2 {
            // One entry per length valuation v; the period stays odd.
            for m_prime in (1..=2 * r.max(1)).step_by(2) {
                let t = t_even(2, r, m_prime);
                if t == 0 {
                    continue;
                }
                for s_prime in divisors(m_prime) {
                    for v in 0..=t {
                        let class = if v == 0 {
                            ParityClass::OddOdd
                        } else {
                            ParityClass::EvenLengthOddPeriod
                        };
                        push(m_prime, s_prime, v, 0, class);
                    }
                }
            }
        } else {
            for m_prime in (1..=2 * r + 1).step_by(2) {
                if m_prime % p == 0 {
                    continue;
                }
                let t = t_odd(p, r, m_prime);
                for s_prime in divisors(m_prime) {
                    for u in 0..t {
                        push(m_prime, s_prime, t, u, ParityClass::OddOdd);
                    }
                }
            }
        }
    }
    indices.sort_unstable();
    Ok(indices)
}

/// Splits an orbit shape over the field's characteristic and checks the
/// stated parity class is available there.
struct OrbitSplit {
    v: u32,
    u: u32,
}

fn split_orbit(
    length: u64,
    period: u64,
    field: &FieldSpec,
    parity_class: ParityClass,
) -> Result<OrbitSplit, TcError> {
    let p = field.characteristic();
    if !is_prime(p) {
        return Err(WittError::NotPrime(p).into());
    }
    if length == 0 || period == 0 {
        return Err(TcError::ZeroLength);
    }
    if !length.is_multiple_of(period) {
        return Err(TcError::PeriodDoesNotDivideLength { length, period });
    }
    if parity_class == ParityClass::EvenLengthOddPeriod && p != 2 {
        return Err(TcError::InvalidParityClass { parity_class, characteristic: p });
    }
    let length_split = p_adic_split(p, length).expect("p prime and length positive");
    let period_split = p_adic_split(p, period).expect("p prime and period positive");
    Ok(OrbitSplit {
        v: length_split.valuation,
        u: period_split.valuation,
    })
}

/// The periodicity-invariant table of one orbit: a single Witt group
/// repeating in every degree of the active parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicTable {
    field: FieldSpec,
    witt_length: u32,
    parity: DegreeParity,
}

impl PeriodicTable {
    pub fn witt_length(&self) -> u32 {
        self.witt_length
    }

    pub fn parity(&self) -> DegreeParity {
        self.parity
    }

    pub fn group_at(&self, degree: u64) -> SymbolicGroupSum {
        if DegreeParity::of(degree) == self.parity {
            SymbolicGroupSum::from_terms(
                self.field.clone(),
                [(self.witt_length, BigUint::from(1u32))],
            )
        } else {
            SymbolicGroupSum::trivial(self.field.clone())
        }
    }
}

/// Fully periodic table of one orbit: `W_{v-u}(k)` in every degree of the
/// class parity, the length-one group `k` for the mixed class.
pub fn tp_groups(
    length: u64,
    period: u64,
    field: &FieldSpec,
    parity_class: ParityClass,
) -> Result<PeriodicTable, TcError> {
    let split = split_orbit(length, period, field, parity_class)?;
    let witt_length = match parity_class {
        ParityClass::EvenEven | ParityClass::OddOdd => split.v - split.u,
        ParityClass::EvenLengthOddPeriod => 1,
    };
    Ok(PeriodicTable {
        field: field.clone(),
        witt_length,
        parity: parity_class.active_parity(),
    })
}

/// Half-periodic table of one orbit: as [`tp_groups`] below degree
/// `length`, with the Witt length increased by one from degree `length`
/// upward. The mixed class contributes `k` in every odd degree.
pub fn tcminus_groups(
    length: u64,
    period: u64,
    field: &FieldSpec,
    parity_class: ParityClass,
    degree: u64,
) -> Result<SymbolicGroupSum, TcError> {
    let split = split_orbit(length, period, field, parity_class)?;
    if DegreeParity::of(degree) != parity_class.active_parity() {
        return Ok(SymbolicGroupSum::trivial(field.clone()));
    }
    let witt_length = match parity_class {
        ParityClass::EvenEven | ParityClass::OddOdd => {
            if degree >= length {
                split.v - split.u + 1
            } else {
                split.v - split.u
            }
        }
        ParityClass::EvenLengthOddPeriod => 1,
    };
    Ok(SymbolicGroupSum::from_terms(
        field.clone(),
        [(witt_length, BigUint::from(1u32))],
    ))
}

/// Local contribution of one coprime pair `(m', s')` to degree `q`: the
/// finite product over the inner index of Witt groups with orbit-count
/// multiplicities.
///
/// Every term's Witt length is cross-checked against the per-orbit table
/// at degree `q`.
pub fn tc_local(
    p: u64,
    d: u64,
    m_prime: u64,
    s_prime: u64,
    q: u64,
    field: &FieldSpec,
) -> Result<SymbolicGroupSum, TcError> {
    if !is_prime(p) {
        return Err(WittError::NotPrime(p).into());
    }
    field.expect_characteristic(p)?;
    if m_prime == 0 || s_prime == 0 {
        return Err(TcError::ZeroLength);
    }
    if m_prime.is_multiple_of(p) {
        return Err(TcError::NotCoprimeToCharacteristic { m_prime, characteristic: p });
    }
    if !m_prime.is_multiple_of(s_prime) {
        return Err(TcError::PeriodDoesNotDivideLength { length: m_prime, period: s_prime });
    }
    let parity_ok = if q.is_multiple_of(2) {
        if p == 2 {
            m_prime % 2 == 1
        } else {
            m_prime.is_multiple_of(2) && s_prime.is_multiple_of(2)
        }
    } else {
        m_prime % 2 == 1
    };
    if !parity_ok {
        return Err(TcError::DegreeParityMismatch { degree: q, m_prime, s_prime });
    }

    let mut sum = SymbolicGroupSum::trivial(field.clone());
    let mut add_checked = |witt_length: u32, multiplicity: BigUint, v: u32, u: u32| {
        let class = ParityClass::classify(p.pow(v) * m_prime, p.pow(u) * s_prime)
            .expect("period divides length");
        let table = tcminus_groups(p.pow(v) * m_prime, p.pow(u) * s_prime, field, class, q)
            .expect("orbit shape already validated");
        assert_eq!(
            table.terms(),
            &[SymbolicTerm { witt_length, multiplicity: BigUint::from(1u32) }],
            "local Witt length disagrees with the orbit table"
        );
        sum.push_term(witt_length, multiplicity);
    };

    if q.is_multiple_of(2) {
        let r = q / 2;
        let t = t_even(p, r, m_prime);
        let start = if p == 2 { 1 } else { 0 };
        for u in start..t {
            add_checked(t - u, cyc_count(d, p.pow(u) * s_prime), t, u);
        }
    } else {
        let r = (q - 1) / 2;
        if p == 2 {
            let t = t_even(2, r, m_prime);
            if t >= 1 {
                for v in 0..=t {
                    add_checked(1, cyc_count(d, s_prime), v, 0);
                }
            }
        } else {
            let t = t_odd(p, r, m_prime);
            for u in 0..t {
                add_checked(t - u, cyc_count(d, p.pow(u) * s_prime), t, u);
            }
        }
    }
    Ok(sum)
}

/// A single graded group, symbolically and (over a concrete finite field)
/// as a finite abelian group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedGroupAnswer {
    pub degree: u64,
    pub symbolic: SymbolicGroupSum,
    pub concrete: Option<FiniteAbelianGroup>,
}

/// The degree-`q` relative K-group over `d` axes, assembled from the
/// per-orbit tables over the full index set.
pub fn k_groups(p: u64, d: u64, q: u64, field: &FieldSpec) -> Result<GradedGroupAnswer, TcError> {
    if !is_prime(p) {
        return Err(WittError::NotPrime(p).into());
    }
    field.expect_characteristic(p)?;
    let mut symbolic = SymbolicGroupSum::trivial(field.clone());
    for index in decomposition_indices(p, d, q)? {
        let length = index.length(p);
        let period = index.period(p);
        let table = tcminus_groups(length, period, field, index.parity_class(), q)?;
        let terms = table.terms();
        assert_eq!(terms.len(), 1, "orbit table must contribute in its own degree");
        symbolic.push_term(terms[0].witt_length, cyc_count(d, period));
    }
    let concrete = if field.residue_degree().is_some() {
        Some(symbolic.concretize()?)
    } else {
        None
    };
    Ok(GradedGroupAnswer { degree: q, symbolic, concrete })
}

/// Degree-two closed form: a sum of `d(d-1)/2` copies of `k`, independent
/// of the (odd) characteristic.
pub fn k2_closed_form(d: u64) -> SymbolicTerm {
    SymbolicTerm {
        witt_length: 1,
        multiplicity: cyc_count(d, 2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use alloc::vec;

    fn symbolic_field(p: u64) -> FieldSpec {
        FieldSpec::symbolic(p).expect("prime characteristic")
    }

    fn prime_field(p: u64) -> FieldSpec {
        FieldSpec::finite(p, 1).expect("prime characteristic")
    }

    fn terms_of(answer: &GradedGroupAnswer) -> Vec<(u32, u64)> {
        answer
            .symbolic
            .terms()
            .iter()
            .map(|term| {
                let multiplicity: u64 = term.multiplicity.clone().try_into().expect("small");
                (term.witt_length, multiplicity)
            })
            .collect()
    }

    #[test]
    fn index_set_examples() {
        let indices = decomposition_indices(3, 3, 2).unwrap();
        assert_eq!(indices.len(), 1);
        let index = indices[0];
        assert_eq!(
            (index.m_prime(), index.s_prime(), index.v(), index.u()),
            (2, 2, 1, 0)
        );
        assert_eq!(index.parity_class(), ParityClass::EvenEven);
        assert_eq!(index.length(3), 6);
        assert_eq!(index.period(3), 2);

        assert!(decomposition_indices(3, 3, 1).unwrap().is_empty());
        assert!(decomposition_indices(3, 3, 0).unwrap().is_empty());
        assert!(matches!(
            decomposition_indices(4, 3, 2),
            Err(TcError::Witt(WittError::NotPrime(4)))
        ));
    }

    #[test]
    fn low_degrees_vanish() {
        for p in [2, 3, 5] {
            for d in [2, 3, 4] {
                for q in [0, 1] {
                    let answer = k_groups(p, d, q, &prime_field(p)).unwrap();
                    assert!(answer.symbolic.is_trivial(), "K_{q} must vanish");
                    assert!(answer.concrete.unwrap().is_trivial());
                }
            }
        }
    }

    #[test]
    fn degree_two_closed_form() {
        for d in 2..=6u64 {
            let term = k2_closed_form(d);
            assert_eq!(term.witt_length, 1);
            assert_eq!(term.multiplicity, BigUint::from(d * (d - 1) / 2));
            for p in [3, 5] {
                let answer = k_groups(p, d, 2, &symbolic_field(p)).unwrap();
                assert_eq!(answer.symbolic.terms(), std::slice::from_ref(&term));
            }
        }
    }

    #[test]
    fn odd_characteristic_fixtures() {
        let field = prime_field(3);
        assert_eq!(terms_of(&k_groups(3, 3, 3, &field).unwrap()), vec![(1, 2)]);
        assert_eq!(terms_of(&k_groups(3, 3, 4, &field).unwrap()), vec![(1, 9)]);
        assert_eq!(terms_of(&k_groups(3, 3, 5, &field).unwrap()), vec![(1, 8)]);
        assert_eq!(
            terms_of(&k_groups(3, 3, 6, &field).unwrap()),
            vec![(2, 3), (1, 15)]
        );
        assert_eq!(
            terms_of(&k_groups(3, 2, 8, &field).unwrap()),
            vec![(2, 1), (1, 2)]
        );

        let concrete = k_groups(3, 3, 6, &field).unwrap().concrete.unwrap();
        let expected = FiniteAbelianGroup::cyclic_power(3, 2, BigUint::from(3u32))
            .unwrap()
            .direct_sum(&FiniteAbelianGroup::cyclic_power(3, 1, BigUint::from(15u32)).unwrap());
        assert_eq!(concrete, expected);
    }

    #[test]
    fn characteristic_two_fixtures() {
        let field = prime_field(2);
        assert!(k_groups(2, 3, 3, &field).unwrap().symbolic.is_trivial());
        assert_eq!(
            terms_of(&k_groups(2, 3, 4, &field).unwrap()),
            vec![(2, 3), (1, 3)]
        );
        assert_eq!(terms_of(&k_groups(2, 3, 5, &field).unwrap()), vec![(1, 4)]);

        let concrete = k_groups(2, 3, 4, &field).unwrap().concrete.unwrap();
        let expected = FiniteAbelianGroup::cyclic_power(2, 2, BigUint::from(3u32))
            .unwrap()
            .direct_sum(&FiniteAbelianGroup::cyclic_power(2, 1, BigUint::from(3u32)).unwrap());
        assert_eq!(concrete, expected);
    }

    #[test]
    fn periodic_table_examples() {
        let f3 = prime_field(3);
        let table = tp_groups(2, 2, &f3, ParityClass::EvenEven).unwrap();
        assert_eq!(table.witt_length(), 0);
        assert!(table.group_at(0).is_trivial());

        let table = tp_groups(6, 2, &f3, ParityClass::EvenEven).unwrap();
        assert_eq!(table.witt_length(), 1);
        assert_eq!(
            table.group_at(2).terms(),
            &[SymbolicTerm { witt_length: 1, multiplicity: BigUint::from(1u32) }]
        );
        assert!(table.group_at(3).is_trivial());

        let f2 = prime_field(2);
        let table = tp_groups(4, 1, &f2, ParityClass::EvenLengthOddPeriod).unwrap();
        assert_eq!(table.witt_length(), 1);
        assert!(!table.group_at(3).is_trivial());
        assert!(table.group_at(2).is_trivial());
    }

    #[test]
    fn half_periodic_table_examples() {
        let f3 = prime_field(3);
        let at = |degree| tcminus_groups(2, 2, &f3, ParityClass::EvenEven, degree).unwrap();
        assert_eq!(
            at(2).terms(),
            &[SymbolicTerm { witt_length: 1, multiplicity: BigUint::from(1u32) }]
        );
        assert!(at(0).is_trivial());
        assert!(at(3).is_trivial());

        let f5 = prime_field(5);
        let sum = tcminus_groups(6, 6, &f5, ParityClass::OddOdd, 7).unwrap();
        assert_eq!(
            sum.terms(),
            &[SymbolicTerm { witt_length: 1, multiplicity: BigUint::from(1u32) }]
        );
    }

    #[test]
    fn local_formula_examples() {
        let f3 = prime_field(3);
        let sum = tc_local(3, 3, 2, 2, 2, &f3).unwrap();
        assert_eq!(
            sum.terms(),
            &[SymbolicTerm { witt_length: 1, multiplicity: BigUint::from(3u32) }]
        );

        let sum = tc_local(3, 3, 1, 1, 3, &f3).unwrap();
        assert_eq!(
            sum.terms(),
            &[SymbolicTerm { witt_length: 1, multiplicity: BigUint::from(2u32) }]
        );

        let f2 = prime_field(2);
        assert!(tc_local(2, 2, 1, 1, 3, &f2).unwrap().is_trivial());
    }

    #[test]
    fn validation_errors() {
        let f3 = prime_field(3);
        assert!(matches!(
            k_groups(3, 3, 2, &prime_field(5)),
            Err(TcError::Witt(WittError::CharacteristicMismatch { expected: 3, found: 5 }))
        ));
        assert!(matches!(
            tc_local(3, 3, 1, 1, 2, &f3),
            Err(TcError::DegreeParityMismatch { degree: 2, m_prime: 1, s_prime: 1 })
        ));
        assert!(matches!(
            tc_local(3, 3, 6, 2, 2, &f3),
            Err(TcError::NotCoprimeToCharacteristic { m_prime: 6, characteristic: 3 })
        ));
        assert!(matches!(
            tc_local(3, 3, 4, 3, 2, &f3),
            Err(TcError::PeriodDoesNotDivideLength { length: 4, period: 3 })
        ));
        assert!(matches!(
            tp_groups(5, 2, &f3, ParityClass::EvenEven),
            Err(TcError::PeriodDoesNotDivideLength { length: 5, period: 2 })
        ));
        assert!(matches!(
            tcminus_groups(6, 3, &f3, ParityClass::EvenLengthOddPeriod, 5),
            Err(TcError::InvalidParityClass { characteristic: 3, .. })
        ));
    }

    /// The assembled answer agrees with the product of the local formula
    /// over the distinct coprime pairs of the index set.
    #[test]
    fn assembly_matches_local_products() {
        for p in [2u64, 3, 5] {
            let field = symbolic_field(p);
            for d in [2u64, 3, 4] {
                for q in 0..=12u64 {
                    let assembled = k_groups(p, d, q, &field).unwrap();
                    let pairs: BTreeSet<(u64, u64)> = decomposition_indices(p, d, q)
                        .unwrap()
                        .into_iter()
                        .map(|index| (index.m_prime(), index.s_prime()))
                        .collect();
                    let mut product = SymbolicGroupSum::trivial(field.clone());
                    for (m_prime, s_prime) in pairs {
                        let local = tc_local(p, d, m_prime, s_prime, q, &field).unwrap();
                        for term in local.terms() {
                            product.push_term(term.witt_length, term.multiplicity.clone());
                        }
                    }
                    assert_eq!(
                        assembled.symbolic, product,
                        "assembly mismatch at p={p}, d={d}, q={q}"
                    );
                }
            }
        }
    }

    #[test]
    fn index_set_respects_parity_and_support() {
        for p in [3u64, 5] {
            for q in 0..=12u64 {
                for index in decomposition_indices(p, 3, q).unwrap() {
                    assert!(index.u() <= index.v());
                    assert_eq!(index.m_prime() % index.s_prime(), 0);
                    assert_ne!(index.m_prime() % p, 0);
                    if q % 2 == 0 {
                        assert_eq!(index.m_prime() % 2, 0);
                        assert_eq!(index.s_prime() % 2, 0);
                        assert!(index.m_prime() <= q);
                    } else {
                        assert_eq!(index.m_prime() % 2, 1);
                        assert_eq!(index.s_prime() % 2, 1);
                        assert!(index.m_prime() <= q);
                    }
                }
            }
        }
        for q in 0..=12u64 {
            for index in decomposition_indices(2, 3, q).unwrap() {
                assert_eq!(index.m_prime() % 2, 1);
                assert_eq!(index.s_prime() % 2, 1);
                if q % 2 == 0 {
                    assert!(index.u() >= 1);
                    assert_eq!(index.parity_class(), ParityClass::EvenEven);
                } else {
                    assert_eq!(index.u(), 0);
                    let expected = if index.v() == 0 {
                        ParityClass::OddOdd
                    } else {
                        ParityClass::EvenLengthOddPeriod
                    };
                    assert_eq!(index.parity_class(), expected);
                }
            }
        }
    }

    /// With two axes only the period-two orbits survive, which collapses
    /// the even-degree answer to one Witt factor per even `m'`.
    #[test]
    fn two_axes_specialization() {
        for p in [3u64, 5] {
            let field = symbolic_field(p);
            for r in 1..=6u64 {
                let expected = SymbolicGroupSum::from_terms(
                    field.clone(),
                    (2..=2 * r).step_by(2).filter(|m| m % p != 0).map(|m_prime| {
                        (t_even(p, r, m_prime), BigUint::from(1u32))
                    }),
                );
                let answer = k_groups(p, 2, 2 * r, &field).unwrap();
                assert_eq!(answer.symbolic, expected, "p={p}, r={r}");

                assert!(k_groups(p, 2, 2 * r + 1, &field).unwrap().symbolic.is_trivial());
            }
        }

        let field = symbolic_field(2);
        for r in 1..=6u64 {
            let expected = SymbolicGroupSum::from_terms(
                field.clone(),
                (1..=2 * r).step_by(2).filter_map(|m_prime| {
                    let t = t_even(2, r, m_prime);
                    (t >= 2).then_some((t - 1, BigUint::from(1u32)))
                }),
            );
            let answer = k_groups(2, 2, 2 * r, &field).unwrap();
            assert_eq!(answer.symbolic, expected, "p=2, r={r}");
            assert!(k_groups(2, 2, 2 * r + 1, &field).unwrap().symbolic.is_trivial());
        }
    }

    /// Concrete groups over extension fields scale with the residue degree.
    #[test]
    fn concrete_groups_scale_with_field_degree() {
        let f9 = FieldSpec::finite(3, 2).unwrap();
        let answer = k_groups(3, 3, 2, &f9).unwrap();
        let concrete = answer.concrete.unwrap();
        assert_eq!(
            concrete,
            FiniteAbelianGroup::cyclic_power(3, 1, BigUint::from(6u32)).unwrap()
        );
    }
}
