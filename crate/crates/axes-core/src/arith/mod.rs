//! Elementary number theory and integral linear algebra shared by every
//! other module: divisor/Moebius arithmetic, p-adic splitting, the degree
//! cutoffs `t_even`/`t_odd`, Smith normal form, and homology of a pair of
//! composable boundary maps.

mod matrix;
mod snf;

pub use matrix::IntMatrix;
pub use snf::{smith_decomposition, smith_normal_form, SmithForm, SnfDecomposition};

use alloc::vec::Vec;
use core::fmt;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArithError {
    NotPrime(u64),
    ZeroInput,
    ShapeMismatch {
        out_cols: usize,
        in_rows: usize,
    },
    /// `boundary_out * boundary_in != 0`, so the pair is not a chain complex.
    NotComposableToZero,
}

impl fmt::Display for ArithError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArithError::NotPrime(p) => write!(f, "{p} is not prime"),
            ArithError::ZeroInput => write!(f, "argument must be positive"),
            ArithError::ShapeMismatch { out_cols, in_rows } => write!(
                f,
                "boundary shapes do not compose: out has {out_cols} columns, in has {in_rows} rows"
            ),
            ArithError::NotComposableToZero => {
                write!(f, "boundary_out * boundary_in is nonzero")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ArithError {}

/// All positive divisors of `n`, ascending. `n` must be positive.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n > 0, "divisors: n must be positive");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Prime factorization of `n >= 1` as ascending `(prime, exponent)` pairs.
pub fn factorize(n: u64) -> Vec<(u64, u32)> {
    assert!(n > 0, "factorize: n must be positive");
    let mut n = n;
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut p = 3;
    while p * p <= n {
        if n.is_multiple_of(p) {
            return false;
        }
        p += 2;
    }
    true
}

/// Moebius function: 0 on non-squarefree input, else `(-1)^{#prime factors}`.
pub fn mobius(n: u64) -> i8 {
    assert!(n > 0, "mobius: n must be positive");
    let factors = factorize(n);
    if factors.iter().any(|&(_, e)| e > 1) {
        return 0;
    }
    if factors.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The factorization `m = p^valuation * unit_part` with `p` not dividing
/// `unit_part`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PAdicSplit {
    pub valuation: u32,
    pub unit_part: u64,
}

pub fn p_adic_split(p: u64, m: u64) -> Result<PAdicSplit, ArithError> {
    if !is_prime(p) {
        return Err(ArithError::NotPrime(p));
    }
    if m == 0 {
        return Err(ArithError::ZeroInput);
    }
    let mut unit_part = m;
    let mut valuation = 0;
    while unit_part.is_multiple_of(p) {
        unit_part /= p;
        valuation += 1;
    }
    Ok(PAdicSplit { valuation, unit_part })
}

/// The unique `t >= 1` with `p^(t-1) * m' <= bound < p^t * m'`, or 0 when no
/// such `t` exists (exactly when `m' > bound`).
fn t_cutoff(p: u64, bound: u64, m_prime: u64) -> u32 {
    debug_assert!(is_prime(p));
    assert!(m_prime > 0, "cutoff: m' must be positive");
    if m_prime > bound {
        return 0;
    }
    let mut t = 1u32;
    let mut scaled = m_prime as u128 * p as u128;
    while scaled <= bound as u128 {
        scaled *= p as u128;
        t += 1;
    }
    t
}

/// Even-degree cutoff: the unique `t >= 1` with
/// `p^(t-1) * m' <= 2r < p^t * m'`, or 0 when `m' > 2r`.
pub fn t_even(p: u64, r: u64, m_prime: u64) -> u32 {
    t_cutoff(p, 2 * r, m_prime)
}

/// Odd-degree cutoff: the unique `t >= 1` with
/// `p^(t-1) * m' <= 2r + 1 < p^t * m'`, or 0 when `m' > 2r + 1`.
pub fn t_odd(p: u64, r: u64, m_prime: u64) -> u32 {
    t_cutoff(p, 2 * r + 1, m_prime)
}

/// Binomial coefficient `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Free rank and torsion of `ker(boundary_out) / im(boundary_in)`.
///
/// Torsion is reported as the invariant factors greater than 1, in a
/// divisibility chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairHomology {
    pub free_rank: usize,
    pub torsion: Vec<BigUint>,
}

/// Homology of composable boundaries with explicit generating cycles.
///
/// For `out: C -> C'` and `in: C'' -> C` with `out * in = 0`, the quotient
/// `ker(out) / im(in)` is presented via a lattice basis of the kernel and a
/// Smith decomposition of the image expressed in that basis.
pub struct HomologyPresentation {
    kernel_basis: IntMatrix,
    out_v_inv: IntMatrix,
    out_rank: usize,
    image_u: IntMatrix,
    image_u_inv: IntMatrix,
    invariant_factors: Vec<BigUint>,
    free_rank: usize,
}

impl HomologyPresentation {
    pub fn new(boundary_out: &IntMatrix, boundary_in: &IntMatrix) -> Result<Self, ArithError> {
        let n = boundary_out.cols();
        if boundary_in.rows() != n {
            return Err(ArithError::ShapeMismatch {
                out_cols: n,
                in_rows: boundary_in.rows(),
            });
        }
        if !boundary_out.mul(boundary_in).is_zero() {
            return Err(ArithError::NotComposableToZero);
        }
        let out_dec = smith_decomposition(boundary_out);
        let rank = out_dec.rank;
        let kernel_basis = out_dec.v.cols_from(rank);
        // Cycles have zero coordinates against the first `rank` columns of v.
        let in_coords = out_dec.v_inv.mul(boundary_in);
        for i in 0..rank {
            for j in 0..boundary_in.cols() {
                debug_assert!(
                    in_coords.get(i, j).is_zero(),
                    "image vector escapes the kernel lattice"
                );
            }
        }
        let image_in_kernel = in_coords.rows_from(rank);
        let image_dec = smith_decomposition(&image_in_kernel);
        let invariant_factors: Vec<BigUint> = (0..image_dec.rank)
            .map(|i| image_dec.d.get(i, i).magnitude().clone())
            .collect();
        let free_rank = (n - rank) - image_dec.rank;
        Ok(HomologyPresentation {
            kernel_basis,
            out_v_inv: out_dec.v_inv,
            out_rank: rank,
            image_u: image_dec.u,
            image_u_inv: image_dec.u_inv,
            invariant_factors,
            free_rank,
        })
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    /// Invariant factors greater than 1.
    pub fn torsion(&self) -> Vec<BigUint> {
        self.invariant_factors
            .iter()
            .filter(|d| **d > BigUint::one())
            .cloned()
            .collect()
    }

    pub fn summary(&self) -> PairHomology {
        PairHomology {
            free_rank: self.free_rank,
            torsion: self.torsion(),
        }
    }

    /// Coordinates of `x` against the kernel lattice basis, or `None` when
    /// `x` is not a cycle.
    pub fn kernel_coords(&self, x: &[BigInt]) -> Option<Vec<BigInt>> {
        let y = self.out_v_inv.mul_vec(x);
        if y[..self.out_rank].iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(y[self.out_rank..].to_vec())
    }

    /// A cycle whose class generates the `index`-th free summand.
    pub fn free_generator(&self, index: usize) -> Vec<BigInt> {
        assert!(index < self.free_rank, "free generator index out of range");
        let col = self.image_u_inv.column(self.invariant_factors.len() + index);
        self.kernel_basis.mul_vec(&col)
    }

    /// Coordinates of the class of the cycle `x` on the free summands.
    ///
    /// Panics when `x` is not a cycle.
    pub fn free_class_coords(&self, x: &[BigInt]) -> Vec<BigInt> {
        let coords = self.kernel_coords(x).expect("not a cycle");
        let h = self.image_u.mul_vec(&coords);
        h[self.invariant_factors.len()..].to_vec()
    }

    /// True when the class of `x` is zero, i.e. `x` is a boundary.
    pub fn class_is_zero(&self, x: &[BigInt]) -> bool {
        let coords = self.kernel_coords(x).expect("not a cycle");
        let h = self.image_u.mul_vec(&coords);
        for (i, factor) in self.invariant_factors.iter().enumerate() {
            if !h[i].mod_floor(&BigInt::from(factor.clone())).is_zero() {
                return false;
            }
        }
        h[self.invariant_factors.len()..].iter().all(Zero::is_zero)
    }
}

/// `ker(boundary_out) / im(boundary_in)` as free rank plus torsion.
pub fn homology_of_pair(
    boundary_out: &IntMatrix,
    boundary_in: &IntMatrix,
) -> Result<PairHomology, ArithError> {
    HomologyPresentation::new(boundary_out, boundary_in).map(|p| p.summary())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(97), vec![1, 97]);
    }

    #[test]
    fn mobius_values() {
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(6), 1);
        assert_eq!(mobius(12), 0);
        assert_eq!(mobius(30), -1);
    }

    #[test]
    fn mobius_sums_detect_one() {
        for s in 1u64..=200 {
            let total: i64 = divisors(s).iter().map(|&j| mobius(s / j) as i64).sum();
            assert_eq!(total, if s == 1 { 1 } else { 0 }, "s = {s}");
        }
    }

    #[test]
    fn p_adic_split_examples() {
        assert_eq!(
            p_adic_split(3, 18),
            Ok(PAdicSplit { valuation: 2, unit_part: 2 })
        );
        assert_eq!(
            p_adic_split(2, 7),
            Ok(PAdicSplit { valuation: 0, unit_part: 7 })
        );
        assert_eq!(p_adic_split(4, 8), Err(ArithError::NotPrime(4)));
        assert_eq!(p_adic_split(2, 0), Err(ArithError::ZeroInput));
    }

    #[test]
    fn p_adic_split_reconstructs() {
        for p in [2u64, 3, 5, 7] {
            for m in 1u64..=10_000 {
                let s = p_adic_split(p, m).unwrap();
                assert_eq!(p.pow(s.valuation) * s.unit_part, m);
                assert_ne!(s.unit_part % p, 0);
            }
        }
    }

    #[test]
    fn cutoff_examples() {
        assert_eq!(t_even(3, 1, 2), 1);
        assert_eq!(t_even(3, 1, 4), 0);
        assert_eq!(t_even(2, 4, 1), 4);
        assert_eq!(t_odd(3, 1, 1), 2);
        assert_eq!(t_odd(3, 1, 5), 0);
        assert_eq!(t_odd(2, 0, 1), 1);
    }

    #[test]
    fn cutoff_characterization_exhaustive() {
        for p in [2u64, 3, 5] {
            for r in 0u64..=50 {
                for m_prime in 1u64..=120 {
                    for (t, bound) in [(t_even(p, r, m_prime), 2 * r), (t_odd(p, r, m_prime), 2 * r + 1)] {
                        if t == 0 {
                            assert!(m_prime > bound, "p={p} r={r} m'={m_prime}");
                        } else {
                            let lo = p.pow(t - 1) as u128 * m_prime as u128;
                            let hi = p.pow(t) as u128 * m_prime as u128;
                            assert!(lo <= bound as u128 && (bound as u128) < hi);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(0, 0), BigUint::from(1u32));
        assert_eq!(binomial(3, 7), BigUint::zero());
    }

    #[test]
    fn homology_of_zero_maps() {
        // 0 -> Z^2 -> 0 has homology Z^2.
        let out = IntMatrix::zeros(0, 2);
        let inn = IntMatrix::zeros(2, 0);
        let h = homology_of_pair(&out, &inn).unwrap();
        assert_eq!(h, PairHomology { free_rank: 2, torsion: vec![] });
    }

    #[test]
    fn homology_detects_two_torsion() {
        // 0 <- Z <-x2- Z gives Z/2 in the middle.
        let out = IntMatrix::zeros(0, 1);
        let inn = IntMatrix::from_rows(&[vec![2]]);
        let h = homology_of_pair(&out, &inn).unwrap();
        assert_eq!(
            h,
            PairHomology { free_rank: 0, torsion: vec![BigUint::from(2u32)] }
        );
    }

    #[test]
    fn homology_rejects_non_complexes() {
        let out = IntMatrix::from_rows(&[vec![1]]);
        let inn = IntMatrix::from_rows(&[vec![1]]);
        assert_eq!(
            homology_of_pair(&out, &inn),
            Err(ArithError::NotComposableToZero)
        );
    }

    /// Boundary matrices of the simplicial boundary of the full simplex on
    /// `n + 2` vertices, i.e. the n-sphere. Unreduced chain complex.
    fn sphere_boundaries(n: usize) -> Vec<IntMatrix> {
        // faces[k] = all (k+1)-subsets of {0..n+1}, lexicographic
        let verts: Vec<usize> = (0..n + 2).collect();
        let mut faces: Vec<Vec<Vec<usize>>> = Vec::new();
        for k in 0..=n {
            let mut level = Vec::new();
            let mut stack = vec![(Vec::new(), 0usize)];
            while let Some((cur, start)) = stack.pop() {
                if cur.len() == k + 1 {
                    level.push(cur);
                    continue;
                }
                for (idx, &v) in verts.iter().enumerate().skip(start) {
                    let mut next = cur.clone();
                    next.push(v);
                    stack.push((next, idx + 1));
                }
            }
            level.sort();
            faces.push(level);
        }
        let mut boundaries = Vec::new();
        for k in 1..=n {
            let rows = faces[k - 1].len();
            let cols = faces[k].len();
            let mut m = IntMatrix::zeros(rows, cols);
            for (j, simplex) in faces[k].iter().enumerate() {
                for (drop, sign) in (0..simplex.len()).zip([1i64, -1].iter().cycle()) {
                    let mut face: Vec<usize> = simplex.clone();
                    face.remove(drop);
                    let i = faces[k - 1].binary_search(&face).unwrap();
                    m.add_to_entry(i, j, &BigInt::from(*sign));
                }
            }
            boundaries.push(m);
        }
        boundaries
    }

    #[test]
    fn spheres_have_standard_homology() {
        for n in 1..=4usize {
            let b = sphere_boundaries(n);
            let dims: Vec<usize> = (0..=n)
                .map(|k| if k == 0 { b[0].rows() } else { b[k - 1].cols() })
                .collect();
            for k in 0..=n {
                let out = if k == 0 {
                    IntMatrix::zeros(0, dims[0])
                } else {
                    b[k - 1].clone()
                };
                let inn = if k == n {
                    IntMatrix::zeros(dims[n], 0)
                } else {
                    b[k].clone()
                };
                let h = homology_of_pair(&out, &inn).unwrap();
                let expected_rank = match k {
                    0 => 1,
                    _ if k == n => 1,
                    _ => 0,
                };
                assert_eq!(h.free_rank, expected_rank, "sphere n={n} degree {k}");
                assert!(h.torsion.is_empty(), "sphere n={n} degree {k}");
            }
        }
    }

    #[test]
    fn presentation_generators_are_cycles_of_full_class() {
        // Circle as a chain complex: one 0-cell, one 1-cell, zero boundary.
        let out = IntMatrix::zeros(0, 1);
        let inn = IntMatrix::zeros(1, 0);
        let pres = HomologyPresentation::new(&out, &inn).unwrap();
        assert_eq!(pres.free_rank(), 1);
        let g = pres.free_generator(0);
        assert_eq!(pres.free_class_coords(&g), vec![BigInt::from(1)]);
        assert!(!pres.class_is_zero(&g));
    }
}
