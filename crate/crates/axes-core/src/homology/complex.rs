//! Normalized cyclic chain complex of a single rotation orbit, built by
//! direct enumeration of simplices.
//!
//! Basis simplices in degree `n` are `(n + 1)`-tuples of pointed monomials
//! whose concatenation spells one of the distinct rotations of the word.
//! Normalization discards tuples with a unit entry anywhere but position 0,
//! so faces and the extra degeneracy project such tuples to zero.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use crate::arith::IntMatrix;
use crate::words::{canonicalize, Word};

use super::HomologyError;

/// Default cap on word length accepted by [`build_cyclic_subset_complex`].
/// Matrix sizes stay small below it; raise explicitly for experiments.
pub const DEFAULT_LENGTH_BOUND: usize = 7;

/// One tensor factor of a basis simplex: the unit of the ring or a power of
/// a single variable.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Monomial {
    Unit,
    Power { letter: u8, exponent: u32 },
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Monomial::Unit => write!(f, "1"),
            Monomial::Power { letter, exponent: 1 } => write!(f, "x{letter}"),
            Monomial::Power { letter, exponent } => write!(f, "x{letter}^{exponent}"),
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Product of two pointed monomials: `None` is the basepoint, reached as
/// soon as two different variables meet.
fn multiply(a: Monomial, b: Monomial) -> Option<Monomial> {
    match (a, b) {
        (Monomial::Unit, other) | (other, Monomial::Unit) => Some(other),
        (
            Monomial::Power { letter: la, exponent: ea },
            Monomial::Power { letter: lb, exponent: eb },
        ) => (la == lb).then_some(Monomial::Power {
            letter: la,
            exponent: ea + eb,
        }),
    }
}

fn is_degenerate(simplex: &[Monomial]) -> bool {
    simplex.iter().skip(1).any(|m| *m == Monomial::Unit)
}

/// Formal integer combination of basis simplices of a fixed degree.
type Chain = BTreeMap<Vec<Monomial>, i64>;

fn add_term(chain: &mut Chain, simplex: Vec<Monomial>, coeff: i64) {
    use alloc::collections::btree_map::Entry;
    if coeff == 0 || is_degenerate(&simplex) {
        return;
    }
    match chain.entry(simplex) {
        Entry::Occupied(mut occupied) => {
            *occupied.get_mut() += coeff;
            if *occupied.get() == 0 {
                occupied.remove();
            }
        }
        Entry::Vacant(vacant) => {
            vacant.insert(coeff);
        }
    }
}

/// Alternating face sum of one simplex. The last face multiplies around the
/// cycle, moving the wrapped product to the front.
fn boundary_of(simplex: &[Monomial]) -> Chain {
    let n = simplex.len() - 1;
    let mut result = Chain::new();
    let mut sign = 1i64;
    for i in 0..n {
        if let Some(product) = multiply(simplex[i], simplex[i + 1]) {
            let mut face = Vec::with_capacity(n);
            face.extend_from_slice(&simplex[..i]);
            face.push(product);
            face.extend_from_slice(&simplex[i + 2..]);
            add_term(&mut result, face, sign);
        }
        sign = -sign;
    }
    if n > 0 {
        if let Some(product) = multiply(simplex[n], simplex[0]) {
            let mut face = Vec::with_capacity(n);
            face.push(product);
            face.extend_from_slice(&simplex[1..n]);
            add_term(&mut result, face, sign);
        }
    }
    result
}

/// Signed cyclic rotation: the generator of the cyclic structure in degree
/// `n` acts by moving the last entry to the front with sign `(-1)^n`.
fn rotate_term(simplex: &[Monomial]) -> (Vec<Monomial>, i64) {
    let n = simplex.len() - 1;
    let mut rotated = Vec::with_capacity(simplex.len());
    rotated.push(simplex[n]);
    rotated.extend_from_slice(&simplex[..n]);
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    (rotated, sign)
}

/// The normalized complex of one orbit, with boundaries and the cyclic
/// operator available as integer matrices.
pub struct IntegerChainComplex {
    /// `basis[n]` lists the degree-`n` simplices in canonical order.
    basis: Vec<Vec<Vec<Monomial>>>,
    /// `positions[n]` inverts `basis[n]`.
    positions: Vec<BTreeMap<Vec<Monomial>, usize>>,
    /// `boundaries[n]` maps degree `n` to degree `n - 1`; index 0 maps into
    /// the zero space.
    boundaries: Vec<IntMatrix>,
}

impl IntegerChainComplex {
    pub fn top_degree(&self) -> usize {
        self.basis.len() - 1
    }

    pub fn dimension(&self, degree: usize) -> usize {
        self.basis.get(degree).map_or(0, Vec::len)
    }

    pub fn basis_labels(&self, degree: usize) -> &[Vec<Monomial>] {
        self.basis.get(degree).map_or(&[], Vec::as_slice)
    }

    /// Boundary matrix from degree `degree` to degree `degree - 1`. Above
    /// the top degree this is a map out of the zero space.
    pub fn boundary(&self, degree: usize) -> IntMatrix {
        match self.boundaries.get(degree) {
            Some(matrix) => matrix.clone(),
            None => IntMatrix::zeros(self.dimension(degree.wrapping_sub(1)), 0),
        }
    }

    /// Matrix of the normalized cyclic operator from degree `degree` to
    /// `degree + 1`, built as `(1 - t) s N` with degenerate terms dropped.
    pub fn cyclic_operator(&self, degree: usize) -> IntMatrix {
        let source = self.dimension(degree);
        let target = self.dimension(degree + 1);
        let mut matrix = IntMatrix::zeros(target, source);
        for (col, simplex) in self.basis_labels(degree).iter().enumerate() {
            let image = cyclic_operator_of(simplex);
            for (term, coeff) in &image {
                let row = self.positions[degree + 1]
                    .get(term)
                    .copied()
                    .expect("cyclic operator leaves the orbit basis");
                matrix.add_to_entry(row, col, &BigInt::from(*coeff));
            }
        }
        matrix
    }

}

/// `(1 - t) s N` applied to one basis simplex.
fn cyclic_operator_of(simplex: &[Monomial]) -> Chain {
    let n = simplex.len() - 1;
    // N = sum of the n + 1 signed rotations.
    let mut norm: Vec<(Vec<Monomial>, i64)> = Vec::with_capacity(n + 1);
    let mut current = simplex.to_vec();
    let mut coeff = 1i64;
    for _ in 0..=n {
        norm.push((current.clone(), coeff));
        let (next, sign) = rotate_term(&current);
        current = next;
        coeff *= sign;
    }
    let mut result = Chain::new();
    for (term, coeff) in norm {
        // The extra degeneracy prepends a unit, without a sign.
        let mut suspended = Vec::with_capacity(term.len() + 1);
        suspended.push(Monomial::Unit);
        suspended.extend_from_slice(&term);
        let (rotated, sign) = rotate_term(&suspended);
        add_term(&mut result, suspended, coeff);
        add_term(&mut result, rotated, -coeff * sign);
    }
    result
}

/// Splits `letters` into `parts` nonempty constant runs, one monomial per
/// run, in all possible ways.
fn constant_run_splits(letters: &[u8], parts: usize) -> Vec<Vec<Monomial>> {
    fn go(letters: &[u8], parts: usize, prefix: &mut Vec<Monomial>, out: &mut Vec<Vec<Monomial>>) {
        if parts == 0 {
            if letters.is_empty() {
                out.push(prefix.clone());
            }
            return;
        }
        if letters.is_empty() || letters.len() < parts {
            return;
        }
        let letter = letters[0];
        let run = letters.iter().take_while(|&&l| l == letter).count();
        // A block must stay inside the leading constant run; leave at least
        // parts - 1 letters for the remaining blocks.
        let max_len = run.min(letters.len() - (parts - 1));
        for len in 1..=max_len {
            prefix.push(Monomial::Power {
                letter,
                exponent: len as u32,
            });
            go(&letters[len..], parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(letters, parts, &mut Vec::new(), &mut out);
    out
}

/// Builds the normalized complex of the rotation orbit of `word` with the
/// default length cap.
pub fn build_cyclic_subset_complex(word: &Word) -> Result<IntegerChainComplex, HomologyError> {
    build_cyclic_subset_complex_with_bound(word, DEFAULT_LENGTH_BOUND)
}

/// As [`build_cyclic_subset_complex`] with an explicit length cap.
pub fn build_cyclic_subset_complex_with_bound(
    word: &Word,
    bound: usize,
) -> Result<IntegerChainComplex, HomologyError> {
    if !word.has_no_cyclic_repetitions() {
        return Err(HomologyError::WordHasRepetitions);
    }
    let length = word.len();
    if length > bound {
        return Err(HomologyError::LengthBoundExceeded { length, bound });
    }
    let rotations: Vec<Word> = canonicalize(word).orbit();

    // Degree n simplices: n + 1 entries. Either all entries are constant
    // runs of a rotation, or the leading entry is the unit and the rest
    // spell a rotation.
    let top = length;
    let mut basis: Vec<Vec<Vec<Monomial>>> = Vec::with_capacity(top + 1);
    for degree in 0..=top {
        let mut simplices: alloc::collections::BTreeSet<Vec<Monomial>> =
            alloc::collections::BTreeSet::new();
        for rotation in &rotations {
            for split in constant_run_splits(rotation.letters(), degree + 1) {
                simplices.insert(split);
            }
            if degree >= 1 {
                for split in constant_run_splits(rotation.letters(), degree) {
                    let mut with_unit = Vec::with_capacity(degree + 1);
                    with_unit.push(Monomial::Unit);
                    with_unit.extend(split);
                    simplices.insert(with_unit);
                }
            }
        }
        basis.push(simplices.into_iter().collect());
    }

    let positions: Vec<BTreeMap<Vec<Monomial>, usize>> = basis
        .iter()
        .map(|labels| {
            labels
                .iter()
                .enumerate()
                .map(|(i, label)| (label.clone(), i))
                .collect()
        })
        .collect();

    let mut boundaries = Vec::with_capacity(top + 1);
    boundaries.push(IntMatrix::zeros(0, basis[0].len()));
    for degree in 1..=top {
        let mut matrix = IntMatrix::zeros(basis[degree - 1].len(), basis[degree].len());
        for (col, simplex) in basis[degree].iter().enumerate() {
            for (term, coeff) in &boundary_of(simplex) {
                let row = positions[degree - 1]
                    .get(term)
                    .copied()
                    .expect("face of a basis simplex stays in the basis");
                matrix.add_to_entry(row, col, &BigInt::from(*coeff));
            }
        }
        boundaries.push(matrix);
    }

    for degree in 1..boundaries.len() {
        assert!(
            boundaries[degree - 1].mul(&boundaries[degree]).is_zero(),
            "boundary squared must vanish"
        );
    }
    Ok(IntegerChainComplex {
        basis,
        positions,
        boundaries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn word(letters: &[u8], d: u8) -> Word {
        Word::new(d, letters.to_vec()).expect("valid test word")
    }

    #[test]
    fn splits_respect_constant_runs() {
        // x1 x1 x2 into two blocks: only (x1^2, x2) and (x1, x1 x2) where
        // the second is not constant, so a single split survives.
        let splits = constant_run_splits(&[1, 1, 2], 2);
        assert_eq!(
            splits,
            vec![vec![
                Monomial::Power { letter: 1, exponent: 2 },
                Monomial::Power { letter: 2, exponent: 1 },
            ]]
        );
        assert_eq!(constant_run_splits(&[1, 2], 2).len(), 1);
        assert_eq!(constant_run_splits(&[1, 2], 1).len(), 0);
    }

    #[test]
    fn two_letter_complex_dimensions() {
        let complex = build_cyclic_subset_complex(&word(&[1, 2], 2)).unwrap();
        assert_eq!(complex.top_degree(), 2);
        assert_eq!(complex.dimension(0), 0);
        assert_eq!(complex.dimension(1), 2);
        assert_eq!(complex.dimension(2), 2);
        assert_eq!(complex.dimension(3), 0);
        // The two top simplices map to u + rotate(u).
        let boundary = complex.boundary(2);
        for col in 0..2 {
            let column = boundary.column(col);
            let total: BigInt = column.iter().sum();
            assert_eq!(total, BigInt::from(2));
        }
    }

    #[test]
    fn periodic_word_keeps_period_many_simplices() {
        let complex = build_cyclic_subset_complex(&word(&[1, 2, 1, 2], 2)).unwrap();
        assert_eq!(complex.dimension(3), 2);
        assert_eq!(complex.dimension(4), 2);
        assert_eq!(complex.dimension(2), 0);
    }

    #[test]
    fn rejects_repetitions_and_oversize_words() {
        assert!(matches!(
            build_cyclic_subset_complex(&word(&[1, 1, 2], 2)),
            Err(HomologyError::WordHasRepetitions)
        ));
        let long = word(&[1, 2, 1, 2, 1, 2, 1, 2], 2);
        assert!(matches!(
            build_cyclic_subset_complex(&long),
            Err(HomologyError::LengthBoundExceeded { length: 8, bound: 7 })
        ));
        assert!(build_cyclic_subset_complex_with_bound(&long, 8).is_ok());
    }

    #[test]
    fn cyclic_operator_lands_in_kernel_of_boundary() {
        for letters in [vec![1u8, 2], vec![1, 2, 3], vec![1, 2, 1, 2], vec![1, 2, 3, 1, 2, 3]] {
            let w = word(&letters, 3);
            let complex = build_cyclic_subset_complex(&w).unwrap();
            let m = w.len();
            let operator = complex.cyclic_operator(m - 1);
            assert!(
                complex.boundary(m).mul(&operator).is_zero(),
                "boundary after the cyclic operator must vanish for {w}"
            );
        }
    }
}
