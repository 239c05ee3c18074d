//! Homology of one rotation orbit of the coordinate-axes algebra, both as a
//! closed form in the length and period and as a brute-force computation
//! from the normalized chain complex.
//!
//! A no-repetition orbit of length `m` and period `s` contributes in degrees
//! `m - 1` and `m` only. When `m` and `s` have the same parity both degrees
//! carry a free rank-one module and the cyclic operator multiplies by
//! `m / s`; otherwise the pair is an order-two cyclic module and its
//! two-torsion, and the cyclic operator is zero.

mod complex;

pub use complex::{
    build_cyclic_subset_complex, build_cyclic_subset_complex_with_bound, IntegerChainComplex,
    Monomial, DEFAULT_LENGTH_BOUND,
};

use alloc::collections::BTreeMap;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::arith::{
    homology_of_pair, is_prime, smith_normal_form, HomologyPresentation, IntMatrix, PairHomology,
};
use crate::words::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomologyError {
    /// The period must be at least 2; a period-one orbit repeats a letter.
    PeriodTooShort { period: u64 },
    PeriodDoesNotDivideLength { length: u64, period: u64 },
    /// Coefficient characteristics are 0 or a prime.
    InvalidCharacteristic { characteristic: u64 },
    WordHasRepetitions,
    LengthBoundExceeded { length: usize, bound: usize },
}

impl fmt::Display for HomologyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomologyError::PeriodTooShort { period } => {
                write!(f, "period {period} is too short; need at least 2")
            }
            HomologyError::PeriodDoesNotDivideLength { length, period } => {
                write!(f, "period {period} does not divide length {length}")
            }
            HomologyError::InvalidCharacteristic { characteristic } => {
                write!(f, "characteristic {characteristic} is neither 0 nor prime")
            }
            HomologyError::WordHasRepetitions => {
                write!(f, "word has a cyclically repeated letter")
            }
            HomologyError::LengthBoundExceeded { length, bound } => {
                write!(f, "word length {length} exceeds the complex bound {bound}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for HomologyError {}

/// Coefficients for homology: the integers or a field given by its
/// characteristic (0 or a prime).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coefficients {
    Integers,
    Field { characteristic: u64 },
}

impl Coefficients {
    fn validate(self) -> Result<(), HomologyError> {
        match self {
            Coefficients::Integers => Ok(()),
            Coefficients::Field { characteristic } => {
                if characteristic == 0 || is_prime(characteristic) {
                    Ok(())
                } else {
                    Err(HomologyError::InvalidCharacteristic { characteristic })
                }
            }
        }
    }
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::Integers => write!(f, "Z"),
            Coefficients::Field { characteristic: 0 } => write!(f, "k (char 0)"),
            Coefficients::Field { characteristic } => write!(f, "k (char {characteristic})"),
        }
    }
}

/// One homology group of an orbit summand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleDescriptor {
    Zero,
    Free { rank: u64 },
    /// Only occurs over the integers, as `Z/2`.
    CyclicOfOrderTwo,
}

impl ModuleDescriptor {
    /// Human-readable form over the given coefficients.
    pub fn render(&self, coefficients: Coefficients) -> alloc::string::String {
        use alloc::format;
        let base = match coefficients {
            Coefficients::Integers => "Z",
            Coefficients::Field { .. } => "k",
        };
        match self {
            ModuleDescriptor::Zero => alloc::string::String::from("0"),
            ModuleDescriptor::Free { rank: 1 } => alloc::string::String::from(base),
            ModuleDescriptor::Free { rank } => format!("{base}^{rank}"),
            ModuleDescriptor::CyclicOfOrderTwo => alloc::string::String::from("Z/2"),
        }
    }

    #[cfg(test)]
    fn rank_over_field(&self) -> u64 {
        match self {
            ModuleDescriptor::Free { rank } => *rank,
            _ => 0,
        }
    }
}

/// Underlying equivariant homotopy type of the orbit summand, recorded for
/// reporting.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomotopyClass {
    SuspendedSphereSmashOrbit,
    SphereSmashOrbit,
    SphereSmashProjectivePlane,
}

impl fmt::Display for HomotopyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            HomotopyClass::SuspendedSphereSmashOrbit => "suspension-of-sphere-smash-orbit",
            HomotopyClass::SphereSmashOrbit => "sphere-smash-orbit",
            HomotopyClass::SphereSmashProjectivePlane => "sphere-smash-projective-plane",
        };
        write!(f, "{name}")
    }
}

/// Closed-form homology of the orbit of a no-repetition word of length
/// `length` and period `period`, concentrated in the top two degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummandHomology {
    length: u64,
    period: u64,
    coefficients: Coefficients,
    lower: ModuleDescriptor,
    upper: ModuleDescriptor,
    connes_multiplier: u64,
    homotopy: HomotopyClass,
}

impl SummandHomology {
    pub fn length(&self) -> u64 {
        self.length
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn blocks(&self) -> u64 {
        self.length / self.period
    }

    pub fn coefficients(&self) -> Coefficients {
        self.coefficients
    }

    /// Homology in degree `length - 1`.
    pub fn lower(&self) -> ModuleDescriptor {
        self.lower
    }

    /// Homology in degree `length`.
    pub fn upper(&self) -> ModuleDescriptor {
        self.upper
    }

    /// Multiplier of the cyclic operator from the lower to the upper degree
    /// on free generators, up to sign; zero when either side has no free
    /// part.
    pub fn connes_multiplier(&self) -> u64 {
        self.connes_multiplier
    }

    pub fn homotopy(&self) -> HomotopyClass {
        self.homotopy
    }

    pub fn module_at(&self, degree: u64) -> ModuleDescriptor {
        if degree + 1 == self.length {
            self.lower
        } else if degree == self.length {
            self.upper
        } else {
            ModuleDescriptor::Zero
        }
    }

    /// The two supported degrees in increasing order.
    pub fn degree_table(&self) -> [(u64, ModuleDescriptor); 2] {
        [(self.length - 1, self.lower), (self.length, self.upper)]
    }
}

/// Closed-form homology of an orbit with the given length and period.
pub fn closed_form_homology(
    length: u64,
    period: u64,
    coefficients: Coefficients,
) -> Result<SummandHomology, HomologyError> {
    if period < 2 {
        return Err(HomologyError::PeriodTooShort { period });
    }
    if !length.is_multiple_of(period) {
        return Err(HomologyError::PeriodDoesNotDivideLength { length, period });
    }
    coefficients.validate()?;
    let blocks = length / period;
    let same_parity = (length - period).is_multiple_of(2);
    let (lower, upper, multiplier, homotopy) = if same_parity {
        let homotopy = if period.is_multiple_of(2) {
            HomotopyClass::SuspendedSphereSmashOrbit
        } else {
            HomotopyClass::SphereSmashOrbit
        };
        (
            ModuleDescriptor::Free { rank: 1 },
            ModuleDescriptor::Free { rank: 1 },
            blocks,
            homotopy,
        )
    } else {
        // Length even, period odd: the orbit is a sphere smashed with a
        // projective plane, so only two-torsion phenomena survive.
        let (lower, upper) = match coefficients {
            Coefficients::Integers => (ModuleDescriptor::CyclicOfOrderTwo, ModuleDescriptor::Zero),
            Coefficients::Field { characteristic: 2 } => (
                ModuleDescriptor::Free { rank: 1 },
                ModuleDescriptor::Free { rank: 1 },
            ),
            Coefficients::Field { .. } => (ModuleDescriptor::Zero, ModuleDescriptor::Zero),
        };
        (lower, upper, 0, HomotopyClass::SphereSmashProjectivePlane)
    };
    Ok(SummandHomology {
        length,
        period,
        coefficients,
        lower,
        upper,
        connes_multiplier: multiplier,
        homotopy,
    })
}

/// Integral homology of the orbit complex of `word` in every degree up to
/// the top, computed from Smith normal forms of the boundaries.
pub fn oracle_homology(word: &Word) -> Result<BTreeMap<usize, PairHomology>, HomologyError> {
    let complex = build_cyclic_subset_complex(word)?;
    let mut result = BTreeMap::new();
    for degree in 0..=complex.top_degree() {
        let out = complex.boundary(degree);
        let incoming = complex.boundary(degree + 1);
        let homology = homology_of_pair(&out, &incoming)
            .expect("complex boundaries compose to zero by construction");
        result.insert(degree, homology);
    }
    Ok(result)
}

/// Dimension of the homology of the orbit complex with field coefficients
/// in every degree, from ranks of the integral boundaries.
pub fn oracle_field_dimensions(
    word: &Word,
    characteristic: u64,
) -> Result<BTreeMap<usize, usize>, HomologyError> {
    Coefficients::Field { characteristic }.validate()?;
    let complex = build_cyclic_subset_complex(word)?;
    let rank_of = |matrix: &IntMatrix| -> usize {
        let form = smith_normal_form(matrix);
        if characteristic == 0 {
            form.rank()
        } else {
            let p = num_bigint::BigUint::from(characteristic);
            form.diagonal
                .iter()
                .filter(|entry| !(*entry % &p).is_zero())
                .count()
        }
    };
    let mut result = BTreeMap::new();
    for degree in 0..=complex.top_degree() {
        let out_rank = rank_of(&complex.boundary(degree));
        let in_rank = rank_of(&complex.boundary(degree + 1));
        result.insert(degree, complex.dimension(degree) - out_rank - in_rank);
    }
    Ok(result)
}

/// Absolute value of the multiplier of the cyclic operator from the free
/// part of the lower homology to the free part of the upper, or 0 when
/// either free part vanishes.
pub fn oracle_connes_multiplier(word: &Word) -> Result<u64, HomologyError> {
    let complex = build_cyclic_subset_complex(word)?;
    let m = word.len();
    let lower = HomologyPresentation::new(&complex.boundary(m - 1), &complex.boundary(m))
        .expect("boundaries compose to zero");
    let upper = HomologyPresentation::new(&complex.boundary(m), &complex.boundary(m + 1))
        .expect("boundaries compose to zero");
    if lower.free_rank() == 0 || upper.free_rank() == 0 {
        return Ok(0);
    }
    let generator = lower.free_generator(0);
    let image = complex.cyclic_operator(m - 1).mul_vec(&generator);
    let coords = upper.free_class_coords(&image);
    let multiplier = coords
        .iter()
        .fold(BigInt::zero(), |acc, c| acc.gcd(c))
        .abs();
    Ok(multiplier.to_u64().expect("multiplier bounded by the word length"))
}
