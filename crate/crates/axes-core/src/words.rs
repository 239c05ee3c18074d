//! Cyclic words with no cyclic repetitions, and their exact counts.
//!
//! A word of length `m` over letters `x_1 .. x_d` has *no cyclic
//! repetitions* when consecutive letters differ and the last letter differs
//! from the first. Rotation orbits of such words are counted by
//! `cyc_count`; direct backtracking enumeration provides an independent
//! check of the closed-form counts.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::arith::{divisors, mobius};

/// Abort threshold for brute-force enumeration, compared against `d^s`.
pub const DEFAULT_ENUM_BUDGET: u64 = 20_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordError {
    EmptyWord,
    LetterOutOfRange { letter: u8, alphabet_size: u8 },
    BudgetExceeded { alphabet_size: u8, length: usize, budget: u64 },
}

impl fmt::Display for WordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordError::EmptyWord => write!(f, "words must have at least one letter"),
            WordError::LetterOutOfRange { letter, alphabet_size } => {
                write!(f, "letter x{letter} outside alphabet of size {alphabet_size}")
            }
            WordError::BudgetExceeded { alphabet_size, length, budget } => write!(
                f,
                "enumeration of {alphabet_size}^{length} words exceeds budget {budget}"
            ),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for WordError {}

/// A linear word over the alphabet `x_1 .. x_d`, letters stored 1-based.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<u8>,
    alphabet_size: u8,
}

impl Word {
    pub fn new(alphabet_size: u8, letters: Vec<u8>) -> Result<Self, WordError> {
        if letters.is_empty() {
            return Err(WordError::EmptyWord);
        }
        for &letter in &letters {
            if letter == 0 || letter > alphabet_size {
                return Err(WordError::LetterOutOfRange { letter, alphabet_size });
            }
        }
        Ok(Word { letters, alphabet_size })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn alphabet_size(&self) -> u8 {
        self.alphabet_size
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    /// Left rotation by `j` positions.
    pub fn rotated(&self, j: usize) -> Word {
        let m = self.len();
        let j = j % m;
        let mut letters = Vec::with_capacity(m);
        letters.extend_from_slice(&self.letters[j..]);
        letters.extend_from_slice(&self.letters[..j]);
        Word { letters, alphabet_size: self.alphabet_size }
    }

    /// Consecutive letters differ, cyclically. Length-1 words fail the wrap
    /// condition by definition.
    pub fn has_no_cyclic_repetitions(&self) -> bool {
        let m = self.len();
        (0..m).all(|i| self.letters[i] != self.letters[(i + 1) % m])
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &letter in &self.letters {
            write!(f, "x{letter}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A rotation orbit of words, held by its lexicographically minimal
/// representative together with the orbit size (the period).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CyclicWord {
    representative: Word,
    period: usize,
}

impl CyclicWord {
    pub fn representative(&self) -> &Word {
        &self.representative
    }

    pub fn len(&self) -> usize {
        self.representative.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn period(&self) -> usize {
        self.period
    }

    /// Number of repeated blocks, `len / period`.
    pub fn blocks(&self) -> usize {
        self.len() / self.period
    }

    pub fn has_no_cyclic_repetitions(&self) -> bool {
        self.representative.has_no_cyclic_repetitions()
    }

    /// The distinct rotations, starting from the representative.
    pub fn orbit(&self) -> Vec<Word> {
        (0..self.period).map(|j| self.representative.rotated(j)).collect()
    }

    /// The orbit of the `blocks`-fold concatenation of the representative.
    /// The period is unchanged: rotating a repeated word by its original
    /// period gives the word back.
    pub fn repeat(&self, blocks: usize) -> CyclicWord {
        assert!(blocks >= 1, "repeat requires at least one block");
        let mut letters = Vec::with_capacity(self.len() * blocks);
        for _ in 0..blocks {
            letters.extend_from_slice(self.representative.letters());
        }
        let word = Word::new(self.representative.alphabet_size(), letters)
            .expect("concatenation of a valid word is valid");
        let repeated = canonicalize(&word);
        assert_eq!(repeated.period(), self.period);
        repeated
    }
}

impl fmt::Debug for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})^cyc s={}", self.representative, self.period)
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.representative, f)
    }
}

/// The rotation orbit of `word`: minimal rotation as representative, orbit
/// size as period. The period always divides the length.
pub fn canonicalize(word: &Word) -> CyclicWord {
    let m = word.len();
    let representative = (0..m)
        .map(|j| word.rotated(j))
        .min()
        .expect("nonempty word");
    let period = (1..=m)
        .find(|&j| representative.rotated(j) == representative)
        .expect("identity rotation fixes the word");
    CyclicWord { representative, period }
}

/// Number of length-`m` words over `d` letters with no cyclic repetitions:
/// `(d-1)^m + (-1)^m (d-1)`.
pub fn a_count(d: u64, m: u64) -> BigUint {
    assert!(m >= 1, "a_count: length must be positive");
    let base: BigInt = BigInt::from(d) - BigInt::one();
    let mut total = base.pow(m.try_into().expect("length fits u32"));
    if m.is_multiple_of(2) {
        total += &base;
    } else {
        total -= &base;
    }
    total.try_into().expect("word count is nonnegative")
}

/// Number of rotation orbits of aperiodic length-`s` words with no cyclic
/// repetitions, by Moebius inversion:
/// `cyc_d(s) = (1/s) * sum over j | s of mobius(s/j) * a_count(d, j)`.
///
/// The division must be exact; a failure is a bug in the arithmetic and
/// panics.
pub fn cyc_count(d: u64, s: u64) -> BigUint {
    assert!(s >= 1, "cyc_count: length must be positive");
    let mut total = BigInt::zero();
    for j in divisors(s) {
        let term = BigInt::from_biguint(Sign::Plus, a_count(d, j));
        match mobius(s / j) {
            1 => total += term,
            -1 => total -= term,
            _ => {}
        }
    }
    let (quotient, remainder) = num_integer::Integer::div_rem(&total, &BigInt::from(s));
    assert!(
        remainder.is_zero(),
        "cyc_count: Moebius sum for d={d}, s={s} is not divisible by s"
    );
    quotient.try_into().expect("orbit count is nonnegative")
}

/// `c_{d-1}(m)`: orbits of length-`m` cyclic words with no repetitions whose
/// period has the same parity as `m`.
pub fn grw_c(d: u64, m: u64) -> BigUint {
    assert!(m >= 1, "grw_c: length must be positive");
    divisors(m)
        .into_iter()
        .filter(|s| s % 2 == m % 2)
        .map(|s| cyc_count(d, s))
        .sum()
}

/// All rotation orbits of length-`m` words with no cyclic repetitions,
/// summed over every period.
pub fn total_no_repetition_necklaces(d: u64, m: u64) -> BigUint {
    assert!(m >= 1, "length must be positive");
    divisors(m).into_iter().map(|s| cyc_count(d, s)).sum()
}

/// Brute-force enumeration of the orbits counted by `cyc_count(d, s)`,
/// sorted by representative. Uses the default budget.
pub fn enumerate_aperiodic_necklaces(d: u8, s: usize) -> Result<Vec<CyclicWord>, WordError> {
    enumerate_aperiodic_necklaces_with_budget(d, s, DEFAULT_ENUM_BUDGET)
}

/// Brute-force enumeration with an explicit budget bound on `d^s`.
pub fn enumerate_aperiodic_necklaces_with_budget(
    d: u8,
    s: usize,
    budget: u64,
) -> Result<Vec<CyclicWord>, WordError> {
    assert!(d >= 1 && s >= 1, "alphabet and length must be positive");
    let space = (d as u128).checked_pow(s as u32);
    if space.is_none_or(|n| n > budget as u128) {
        return Err(WordError::BudgetExceeded { alphabet_size: d, length: s, budget });
    }
    let mut found: BTreeSet<Vec<u8>> = BTreeSet::new();
    let mut letters: Vec<u8> = Vec::with_capacity(s);
    backtrack(d, s, &mut letters, &mut found);
    Ok(found
        .into_iter()
        .map(|letters| {
            let word = Word::new(d, letters).expect("enumerated letters are valid");
            canonicalize(&word)
        })
        .collect())
}

/// Depth-first search over proper colorings of the length-`s` cycle,
/// recording canonical representatives of the aperiodic orbits.
fn backtrack(d: u8, s: usize, letters: &mut Vec<u8>, found: &mut BTreeSet<Vec<u8>>) {
    if letters.len() == s {
        let word = Word::new(d, letters.clone()).expect("letters are valid");
        if word.has_no_cyclic_repetitions() {
            let cyclic = canonicalize(&word);
            if cyclic.period() == s {
                found.insert(cyclic.representative().letters().to_vec());
            }
        }
        return;
    }
    for letter in 1..=d {
        if let Some(&prev) = letters.last() {
            if prev == letter {
                continue;
            }
        }
        // wrap constraint: prune identical first/last letters early
        if letters.len() == s - 1 && s > 1 && letters[0] == letter {
            continue;
        }
        letters.push(letter);
        backtrack(d, s, letters, found);
        letters.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn word(d: u8, letters: &[u8]) -> Word {
        Word::new(d, letters.to_vec()).unwrap()
    }

    #[test]
    fn repetition_detection() {
        assert!(word(3, &[1, 2, 3]).has_no_cyclic_repetitions());
        assert!(!word(3, &[1, 2, 1]).has_no_cyclic_repetitions());
        assert!(!word(3, &[1]).has_no_cyclic_repetitions());
        assert!(!word(3, &[1, 1, 2]).has_no_cyclic_repetitions());
        assert!(word(2, &[1, 2, 1, 2]).has_no_cyclic_repetitions());
    }

    #[test]
    fn canonical_form_and_period() {
        let w = canonicalize(&word(2, &[2, 1, 2, 1]));
        assert_eq!(w.representative().letters(), &[1, 2, 1, 2]);
        assert_eq!(w.period(), 2);
        assert_eq!(w.blocks(), 2);

        let w = canonicalize(&word(3, &[3, 1, 2]));
        assert_eq!(w.representative().letters(), &[1, 2, 3]);
        assert_eq!(w.period(), 3);
        assert_eq!(w.orbit().len(), 3);
    }

    #[test]
    fn word_validation() {
        assert_eq!(Word::new(3, vec![]), Err(WordError::EmptyWord));
        assert_eq!(
            Word::new(2, vec![1, 3]),
            Err(WordError::LetterOutOfRange { letter: 3, alphabet_size: 2 })
        );
        assert_eq!(
            Word::new(2, vec![0]),
            Err(WordError::LetterOutOfRange { letter: 0, alphabet_size: 2 })
        );
    }

    #[test]
    fn a_count_small_values() {
        assert_eq!(a_count(3, 1), BigUint::zero());
        assert_eq!(a_count(3, 2), BigUint::from(6u32));
        assert_eq!(a_count(3, 3), BigUint::from(6u32));
        assert_eq!(a_count(1, 5), BigUint::zero());
        assert_eq!(a_count(2, 2), BigUint::from(2u32));
        assert_eq!(a_count(2, 3), BigUint::zero());
    }

    #[test]
    fn a_count_matches_direct_enumeration() {
        for d in 1u8..=4 {
            for m in 1usize..=8 {
                let mut count = 0u64;
                let mut stack = vec![Vec::new()];
                while let Some(cur) = stack.pop() {
                    if cur.len() == m {
                        let w = Word::new(d, cur).unwrap();
                        if w.has_no_cyclic_repetitions() {
                            count += 1;
                        }
                        continue;
                    }
                    for letter in 1..=d {
                        let mut next = cur.clone();
                        next.push(letter);
                        stack.push(next);
                    }
                }
                assert_eq!(a_count(d as u64, m as u64), BigUint::from(count), "d={d} m={m}");
            }
        }
    }

    #[test]
    fn cyc_count_small_table() {
        assert_eq!(cyc_count(3, 1), BigUint::zero());
        assert_eq!(cyc_count(3, 2), BigUint::from(3u32));
        assert_eq!(cyc_count(3, 3), BigUint::from(2u32));
        assert_eq!(cyc_count(3, 6), BigUint::from(9u32));
        assert_eq!(cyc_count(4, 12), BigUint::from(44220u32));
    }

    #[test]
    fn cyc_count_for_two_letters_is_rigid() {
        for s in 1u64..=30 {
            let expected = if s == 2 { BigUint::one() } else { BigUint::zero() };
            assert_eq!(cyc_count(2, s), expected, "s = {s}");
        }
    }

    #[test]
    fn necklace_totals() {
        // 3 + 2 + 9 orbits of periods 2, 3, 6 for d = 3, m = 6
        assert_eq!(total_no_repetition_necklaces(3, 6), BigUint::from(14u32));
        assert_eq!(grw_c(3, 6), BigUint::from(12u32));
        assert_eq!(grw_c(3, 2), BigUint::from(3u32));
        assert_eq!(grw_c(3, 3), BigUint::from(2u32));
    }

    #[test]
    fn enumeration_examples() {
        let orbits = enumerate_aperiodic_necklaces(3, 2).unwrap();
        let reps: Vec<&[u8]> = orbits.iter().map(|w| w.representative().letters()).collect();
        assert_eq!(reps, vec![&[1, 2][..], &[1, 3], &[2, 3]]);

        let orbits = enumerate_aperiodic_necklaces(3, 3).unwrap();
        let reps: Vec<&[u8]> = orbits.iter().map(|w| w.representative().letters()).collect();
        assert_eq!(reps, vec![&[1, 2, 3][..], &[1, 3, 2]]);

        assert_eq!(enumerate_aperiodic_necklaces(2, 4).unwrap(), vec![]);
        assert_eq!(enumerate_aperiodic_necklaces(4, 1).unwrap(), vec![]);
    }

    #[test]
    fn enumeration_budget_guard() {
        assert_eq!(
            enumerate_aperiodic_necklaces(2, 60),
            Err(WordError::BudgetExceeded { alphabet_size: 2, length: 60, budget: DEFAULT_ENUM_BUDGET })
        );
        // 3^81 overflows u128, so the size check itself must reject it
        assert!(enumerate_aperiodic_necklaces_with_budget(3, 81, u64::MAX).is_err());
        assert!(enumerate_aperiodic_necklaces_with_budget(2, 60, u64::MAX).is_ok());
    }

    #[test]
    fn enumeration_matches_formula() {
        for d in 2u8..=4 {
            for s in 1usize..=8 {
                let orbits = enumerate_aperiodic_necklaces(d, s).unwrap();
                assert_eq!(
                    BigUint::from(orbits.len()),
                    cyc_count(d as u64, s as u64),
                    "d={d} s={s}"
                );
                for orbit in &orbits {
                    assert_eq!(orbit.period(), s);
                    assert!(orbit.has_no_cyclic_repetitions());
                }
            }
        }
    }

    proptest! {
        #[test]
        fn canonicalization_is_rotation_invariant(
            letters in proptest::collection::vec(1u8..=4, 1..=10),
            shift in 0usize..10,
        ) {
            let w = Word::new(4, letters).unwrap();
            let canonical = canonicalize(&w);
            let rotated = canonicalize(&w.rotated(shift));
            prop_assert_eq!(canonical.representative().letters(), rotated.representative().letters());
            prop_assert_eq!(canonical.period(), rotated.period());
        }

        #[test]
        fn period_divides_length(letters in proptest::collection::vec(1u8..=3, 1..=12)) {
            let w = canonicalize(&Word::new(3, letters).unwrap());
            prop_assert_eq!(w.len() % w.period(), 0);
        }

        #[test]
        fn representative_is_minimal(letters in proptest::collection::vec(1u8..=3, 1..=10)) {
            let w = Word::new(3, letters).unwrap();
            let canonical = canonicalize(&w);
            for j in 0..w.len() {
                prop_assert!(canonical.representative() <= &w.rotated(j));
            }
        }

        #[test]
        fn weighted_partition_identity(d in 1u64..=5, m in 1u64..=16) {
            let total: BigUint = divisors(m)
                .into_iter()
                .map(|s| BigUint::from(s) * cyc_count(d, s))
                .sum();
            prop_assert_eq!(total, a_count(d, m));
        }
    }
}
