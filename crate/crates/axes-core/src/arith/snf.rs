//! Smith normal form over the integers.
//!
//! The reduction is gcd-driven elimination: the pivot is always a nonzero
//! entry of minimal absolute value in the remaining submatrix, rows and
//! columns are cleared by division with minimal remainder, and a final
//! divisibility sweep per pivot guarantees the invariant-factor chain
//! `d_1 | d_2 | ... | d_k`.

use alloc::vec::Vec;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// Diagonal summary of a Smith normal form.
///
/// `diagonal` lists the nonzero invariant factors, positive and in a
/// divisibility chain; trailing zero diagonal entries are implied by
/// `min(rows, cols) - diagonal.len()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub rows: usize,
    pub cols: usize,
    pub diagonal: Vec<BigUint>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }
}

/// Full decomposition `u * a * v = d` with unimodular `u`, `v`.
///
/// `u_inv` and `v_inv` are maintained alongside so that kernel and quotient
/// computations never need to invert anything after the fact.
#[derive(Clone, Debug)]
pub struct SnfDecomposition {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
    pub rank: usize,
}

/// Quotient with minimal absolute remainder, used to keep entries small.
fn div_rounded(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut q, r) = a.div_rem(b);
    if r.abs() * 2u8 > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

struct Reducer {
    d: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Reducer {
    fn new(a: &IntMatrix) -> Self {
        Reducer {
            d: a.clone(),
            u: IntMatrix::identity(a.rows()),
            u_inv: IntMatrix::identity(a.rows()),
            v: IntMatrix::identity(a.cols()),
            v_inv: IntMatrix::identity(a.cols()),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    /// `row[i] -= q * row[t]`
    fn row_sub(&mut self, i: usize, t: usize, q: &BigInt) {
        let neg = -q.clone();
        self.d.row_add_mul(i, t, &neg);
        self.u.row_add_mul(i, t, &neg);
        self.u_inv.col_add_mul(t, i, q);
    }

    /// `col[j] -= q * col[t]`
    fn col_sub(&mut self, j: usize, t: usize, q: &BigInt) {
        let neg = -q.clone();
        self.d.col_add_mul(j, t, &neg);
        self.v.col_add_mul(j, t, &neg);
        self.v_inv.row_add_mul(t, j, q);
    }

    /// `row[t] += row[i]`
    fn row_merge(&mut self, t: usize, i: usize) {
        let one = BigInt::from(1);
        self.d.row_add_mul(t, i, &one);
        self.u.row_add_mul(t, i, &one);
        let neg = BigInt::from(-1);
        self.u_inv.col_add_mul(i, t, &neg);
    }

    fn negate_row(&mut self, i: usize) {
        self.d.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    fn min_abs_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.d.rows() {
            for j in t..self.d.cols() {
                let e = self.d.get(i, j);
                if e.is_zero() {
                    continue;
                }
                match best {
                    Some((bi, bj)) if self.d.get(bi, bj).abs() <= e.abs() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }
}

/// Computes the full Smith decomposition `u * a * v = d`.
pub fn smith_decomposition(a: &IntMatrix) -> SnfDecomposition {
    let mut red = Reducer::new(a);
    let limit = a.rows().min(a.cols());
    let mut t = 0;
    while t < limit {
        let Some((pi, pj)) = red.min_abs_pivot(t) else {
            break;
        };
        red.swap_rows(t, pi);
        red.swap_cols(t, pj);
        'clear: loop {
            for i in t + 1..red.d.rows() {
                if red.d.get(i, t).is_zero() {
                    continue;
                }
                let q = div_rounded(red.d.get(i, t), red.d.get(t, t));
                red.row_sub(i, t, &q);
                if !red.d.get(i, t).is_zero() {
                    red.swap_rows(t, i);
                    continue 'clear;
                }
            }
            for j in t + 1..red.d.cols() {
                if red.d.get(t, j).is_zero() {
                    continue;
                }
                let q = div_rounded(red.d.get(t, j), red.d.get(t, t));
                red.col_sub(j, t, &q);
                if !red.d.get(t, j).is_zero() {
                    red.swap_cols(t, j);
                    continue 'clear;
                }
            }
            for i in t + 1..red.d.rows() {
                for j in t + 1..red.d.cols() {
                    if !red.d.get(i, j).mod_floor(red.d.get(t, t)).is_zero() {
                        red.row_merge(t, i);
                        continue 'clear;
                    }
                }
            }
            break;
        }
        if red.d.get(t, t).is_negative() {
            red.negate_row(t);
        }
        t += 1;
    }
    SnfDecomposition {
        rank: t,
        d: red.d,
        u: red.u,
        u_inv: red.u_inv,
        v: red.v,
        v_inv: red.v_inv,
    }
}

/// Smith normal form of `a`: nonzero invariant factors in a divisibility chain.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let dec = smith_decomposition(a);
    let diagonal = (0..dec.rank)
        .map(|i| dec.d.get(i, i).magnitude().clone())
        .collect();
    SmithForm {
        rows: a.rows(),
        cols: a.cols(),
        diagonal,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn check_decomposition(a: &IntMatrix) {
        let dec = smith_decomposition(a);
        assert_eq!(dec.u.mul(a).mul(&dec.v), dec.d, "u*a*v != d");
        assert_eq!(dec.u.mul(&dec.u_inv), IntMatrix::identity(a.rows()));
        assert_eq!(dec.u_inv.mul(&dec.u), IntMatrix::identity(a.rows()));
        assert_eq!(dec.v.mul(&dec.v_inv), IntMatrix::identity(a.cols()));
        assert_eq!(dec.v_inv.mul(&dec.v), IntMatrix::identity(a.cols()));
        for i in 0..dec.rank {
            assert!(dec.d.get(i, i) > &BigInt::zero());
            if i + 1 < dec.rank {
                assert!(dec.d.get(i + 1, i + 1).mod_floor(dec.d.get(i, i)).is_zero());
            }
        }
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                if i != j || i >= dec.rank {
                    assert!(dec.d.get(i, j).is_zero(), "off-diagonal junk at ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn textbook_example() {
        let a = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        let snf = smith_normal_form(&a);
        assert_eq!(snf.diagonal, vec![BigUint::from(2u32), BigUint::from(4u32)]);
        check_decomposition(&a);
    }

    #[test]
    fn zero_matrix_has_empty_diagonal() {
        let a = IntMatrix::zeros(2, 3);
        let snf = smith_normal_form(&a);
        assert_eq!(snf.diagonal, Vec::<BigUint>::new());
        assert_eq!((snf.rows, snf.cols), (2, 3));
    }

    #[test]
    fn empty_matrices() {
        for a in [IntMatrix::zeros(0, 4), IntMatrix::zeros(4, 0), IntMatrix::zeros(0, 0)] {
            let snf = smith_normal_form(&a);
            assert_eq!(snf.rank(), 0);
            check_decomposition(&a);
        }
    }

    #[test]
    fn divisibility_chain_forced() {
        // diag(2, 3) has invariant factors 1, 6
        let a = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let snf = smith_normal_form(&a);
        assert_eq!(snf.diagonal, vec![BigUint::from(1u32), BigUint::from(6u32)]);
    }

    proptest! {
        #[test]
        fn random_decompositions_are_valid(
            rows in 0usize..5,
            cols in 0usize..5,
            seed in proptest::collection::vec(-9i64..=9, 25),
        ) {
            let a = IntMatrix::from_fn(rows, cols, |i, j| BigInt::from(seed[i * 5 + j]));
            check_decomposition(&a);
        }

        #[test]
        fn invariant_factors_stable_under_permutation(
            rows in 1usize..5,
            cols in 1usize..5,
            seed in proptest::collection::vec(-9i64..=9, 25),
            ri in 0usize..5,
            rj in 0usize..5,
            ci in 0usize..5,
            cj in 0usize..5,
        ) {
            let a = IntMatrix::from_fn(rows, cols, |i, j| BigInt::from(seed[i * 5 + j]));
            let mut b = a.clone();
            b.swap_rows(ri % rows, rj % rows);
            b.swap_cols(ci % cols, cj % cols);
            prop_assert_eq!(smith_normal_form(&a).diagonal, smith_normal_form(&b).diagonal);
        }
    }
}
