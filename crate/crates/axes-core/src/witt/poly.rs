//! Sparse multivariate polynomials over the integers.
//!
//! Just enough polynomial arithmetic to express ghost-component identities
//! symbolically: the addition and multiplication laws of truncated Witt
//! vectors are solved for once as integer polynomials, then validated and
//! applied by substitution.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// A polynomial in a fixed number of variables with integer coefficients,
/// stored as a map from exponent vectors to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntPolynomial {
    arity: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl IntPolynomial {
    pub fn zero(arity: usize) -> Self {
        IntPolynomial { arity, terms: BTreeMap::new() }
    }

    pub fn constant(arity: usize, value: BigInt) -> Self {
        let mut poly = Self::zero(arity);
        poly.insert_term(alloc::vec![0; arity], value);
        poly
    }

    pub fn variable(arity: usize, index: usize) -> Self {
        assert!(index < arity, "variable index out of range");
        let mut exponents = alloc::vec![0; arity];
        exponents[index] = 1;
        let mut poly = Self::zero(arity);
        poly.insert_term(exponents, BigInt::one());
        poly
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    fn insert_term(&mut self, exponents: Vec<u32>, coefficient: BigInt) {
        assert_eq!(exponents.len(), self.arity, "exponent arity mismatch");
        if coefficient.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponents);
        match entry {
            alloc::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coefficient);
            }
            alloc::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coefficient;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        let mut result = self.clone();
        for (exponents, coefficient) in &other.terms {
            result.insert_term(exponents.clone(), coefficient.clone());
        }
        result
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut result = Self::zero(self.arity);
        for (exponents, coefficient) in &self.terms {
            result.terms.insert(exponents.clone(), -coefficient);
        }
        result
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        let mut result = Self::zero(self.arity);
        if factor.is_zero() {
            return result;
        }
        for (exponents, coefficient) in &self.terms {
            result.terms.insert(exponents.clone(), coefficient * factor);
        }
        result
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        let mut result = Self::zero(self.arity);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exponents: Vec<u32> =
                    ea.iter().zip(eb).map(|(x, y)| x.checked_add(*y).expect("degree overflow")).collect();
                result.insert_term(exponents, ca * cb);
            }
        }
        result
    }

    pub fn pow(&self, exponent: u32) -> Self {
        let mut result = Self::constant(self.arity, BigInt::one());
        let mut base = self.clone();
        let mut remaining = exponent;
        while remaining > 0 {
            if remaining & 1 == 1 {
                result = result.mul(&base);
            }
            remaining >>= 1;
            if remaining > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Divide every coefficient by `divisor`; `None` unless all divisions
    /// are exact.
    pub fn div_exact_scalar(&self, divisor: &BigInt) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by zero");
        let mut result = Self::zero(self.arity);
        for (exponents, coefficient) in &self.terms {
            let (quotient, remainder) = coefficient.div_rem(divisor);
            if !remainder.is_zero() {
                return None;
            }
            result.terms.insert(exponents.clone(), quotient);
        }
        Some(result)
    }

    pub fn eval(&self, values: &[BigInt]) -> BigInt {
        assert_eq!(values.len(), self.arity, "value arity mismatch");
        let mut total = BigInt::zero();
        for (exponents, coefficient) in &self.terms {
            let mut term = coefficient.clone();
            for (value, &exponent) in values.iter().zip(exponents) {
                if exponent > 0 {
                    term *= value.pow(exponent);
                }
            }
            total += term;
        }
        total
    }

    /// Substitute a polynomial for each variable.
    pub fn substitute(&self, values: &[IntPolynomial]) -> IntPolynomial {
        assert_eq!(values.len(), self.arity, "substitution arity mismatch");
        let target_arity = values.first().map_or(0, IntPolynomial::arity);
        for value in values {
            assert_eq!(value.arity(), target_arity, "substitution arity mismatch");
        }
        let mut total = IntPolynomial::zero(target_arity);
        for (exponents, coefficient) in &self.terms {
            let mut term = IntPolynomial::constant(target_arity, coefficient.clone());
            for (value, &exponent) in values.iter().zip(exponents) {
                if exponent > 0 {
                    term = term.mul(&value.pow(exponent));
                }
            }
            total = total.add(&term);
        }
        total
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .terms
            .iter()
            .map(|(exponents, coefficient)| {
                let monomial: Vec<String> = exponents
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| {
                        if e == 1 {
                            alloc::format!("x{i}")
                        } else {
                            alloc::format!("x{i}^{e}")
                        }
                    })
                    .collect();
                if monomial.is_empty() {
                    alloc::format!("{coefficient}")
                } else if coefficient.is_one() {
                    monomial.join("*")
                } else if (-coefficient).is_one() {
                    alloc::format!("-{}", monomial.join("*"))
                } else {
                    alloc::format!("{coefficient}*{}", monomial.join("*"))
                }
            })
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    

    fn x(arity: usize, i: usize) -> IntPolynomial {
        IntPolynomial::variable(arity, i)
    }

    #[test]
    fn ring_operations() {
        let a = x(2, 0);
        let b = x(2, 1);
        let sum = a.add(&b);
        let square = sum.mul(&sum);
        // (a + b)^2 = a^2 + 2ab + b^2
        assert_eq!(square.coefficient(&[2, 0]), BigInt::from(1));
        assert_eq!(square.coefficient(&[1, 1]), BigInt::from(2));
        assert_eq!(square.coefficient(&[0, 2]), BigInt::from(1));
        assert_eq!(square, sum.pow(2));
        assert!(sum.sub(&b).sub(&a).is_zero());
    }

    #[test]
    fn exact_scalar_division() {
        let p = x(1, 0).scale(&BigInt::from(6)).add(&IntPolynomial::constant(1, BigInt::from(9)));
        let third = p.div_exact_scalar(&BigInt::from(3)).unwrap();
        assert_eq!(third.coefficient(&[1]), BigInt::from(2));
        assert_eq!(third.coefficient(&[0]), BigInt::from(3));
        assert!(p.div_exact_scalar(&BigInt::from(4)).is_none());
    }

    #[test]
    fn evaluation_and_substitution() {
        // f = x0^2 * x1 - 3
        let f = x(2, 0)
            .pow(2)
            .mul(&x(2, 1))
            .sub(&IntPolynomial::constant(2, BigInt::from(3)));
        assert_eq!(f.eval(&[BigInt::from(2), BigInt::from(5)]), BigInt::from(17));

        // substitute x0 -> y0 + y1, x1 -> y0: f becomes (y0+y1)^2*y0 - 3
        let g = f.substitute(&[x(2, 0).add(&x(2, 1)), x(2, 0)]);
        assert_eq!(g.eval(&[BigInt::from(1), BigInt::from(1)]), BigInt::from(1));
        assert_eq!(g.coefficient(&[3, 0]), BigInt::from(1));
        assert_eq!(g.coefficient(&[2, 1]), BigInt::from(2));
        assert_eq!(g.coefficient(&[1, 2]), BigInt::from(1));
    }

    #[test]
    fn display_is_readable() {
        let f = x(2, 0).pow(2).sub(&x(2, 1).scale(&BigInt::from(3)));
        assert_eq!(alloc::format!("{f}"), "-3*x1 + x0^2");
        assert_eq!(alloc::format!("{}", IntPolynomial::zero(2)), "0");
    }
}
