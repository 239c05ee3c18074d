//! Rational (characteristic-zero) answers: relative cyclic homology and
//! relative K-theory of the coordinate axes over an ind-smooth base,
//! expressed through the Hochschild dimension data of the base field.
//!
//! Every multiplicity is a parity-matched orbit count recomputed from the
//! words module; nothing is cached or tabulated here.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::arith::binomial;
use crate::words::grw_c;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CharZeroError {
    /// The zeroth Hochschild group is the base ring itself and cannot have
    /// dimension zero.
    ZerothHochschildVanishes,
}

impl fmt::Display for CharZeroError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharZeroError::ZerothHochschildVanishes => {
                write!(f, "the zeroth Hochschild dimension must be at least 1")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for CharZeroError {}

/// Hochschild dimension data of the base: a field of finite transcendence
/// degree (form dimensions are binomial coefficients), an explicit
/// dimension sequence, or fully symbolic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HHProfile {
    IndSmoothField { transcendence_degree: u64 },
    ExplicitDims(Vec<u64>),
    Symbolic,
}

impl HHProfile {
    /// Explicit dimension sequence `dim HH_j` for `j = 0, 1, ...`; entries
    /// beyond the sequence are zero.
    pub fn explicit(dims: Vec<u64>) -> Result<HHProfile, CharZeroError> {
        if dims.first().is_none_or(|&d| d == 0) {
            return Err(CharZeroError::ZerothHochschildVanishes);
        }
        Ok(HHProfile::ExplicitDims(dims))
    }

    /// Dimension of the degree-`j` Hochschild group of the base, when the
    /// profile determines it.
    pub fn dim_hh(&self, j: u64) -> Option<BigUint> {
        match self {
            HHProfile::IndSmoothField { transcendence_degree } => {
                Some(binomial(*transcendence_degree, j))
            }
            HHProfile::ExplicitDims(dims) => {
                let dim = usize::try_from(j)
                    .ok()
                    .and_then(|index| dims.get(index).copied())
                    .unwrap_or(0);
                Some(BigUint::from(dim))
            }
            HHProfile::Symbolic => None,
        }
    }
}

/// One finite summand: copies of the degree-`form_degree` forms of the
/// base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormSummand {
    pub form_degree: u64,
    pub multiplicity: BigUint,
}

/// The infinite family in relative cyclic homology: for every positive
/// index, `copies_per_index` copies of the degree-`form_degree` Hochschild
/// group. Carried as a flag, never materialized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxisPart {
    pub form_degree: u64,
    pub copies_per_index: u64,
}

/// A graded group described by form summands of the base field.
///
/// Summands with zero multiplicity, or whose form dimension the profile
/// forces to zero, are omitted; the remaining ones are sorted by ascending
/// form degree. The total dimension is present when the profile determines
/// every dimension and no infinite part remains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDimensionAnswer {
    pub degree: u64,
    pub summands: Vec<FormSummand>,
    pub infinite_axis_part: Option<AxisPart>,
    pub total_dimension: Option<BigUint>,
}

fn assemble(
    degree: u64,
    profile: &HHProfile,
    raw_summands: impl Iterator<Item = (u64, BigUint)>,
    axis: Option<AxisPart>,
) -> GradedDimensionAnswer {
    let mut summands = Vec::new();
    let mut total = Some(BigUint::zero());
    for (form_degree, multiplicity) in raw_summands {
        if multiplicity.is_zero() {
            continue;
        }
        match profile.dim_hh(form_degree) {
            Some(dim) if dim.is_zero() => continue,
            Some(dim) => {
                if let Some(total) = total.as_mut() {
                    *total += dim * &multiplicity;
                }
            }
            None => total = None,
        }
        summands.push(FormSummand { form_degree, multiplicity });
    }
    let infinite_axis_part = axis.filter(|part| {
        // The flag survives unless the profile rules the dimension out.
        !profile
            .dim_hh(part.form_degree)
            .is_some_and(|dim| dim.is_zero())
    });
    if infinite_axis_part.is_some() {
        total = None;
    }
    GradedDimensionAnswer {
        degree,
        summands,
        infinite_axis_part,
        total_dimension: total,
    }
}

/// Bi-relative cyclic homology in degree `q` over `d` axes: forms of
/// degree `q + 1 - m` with multiplicity the parity-matched orbit count at
/// `m`, for every orbit length `m` from 2 to `q + 1`.
pub fn hc_birelative(q: u64, d: u64, profile: &HHProfile) -> GradedDimensionAnswer {
    let terms = (0..q).map(move |j| (j, grw_c(d, q + 1 - j)));
    assemble(q, profile, terms, None)
}

/// Relative cyclic homology: the special degree-zero case, or the graded
/// answer of [`hc_birelative`] together with the infinite axis family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HcAnswer {
    /// In degree zero the relative group is the coordinate ring itself.
    CoordinateRing,
    Graded(GradedDimensionAnswer),
}

pub fn hc_relative(q: u64, d: u64, profile: &HHProfile) -> HcAnswer {
    if q == 0 {
        return HcAnswer::CoordinateRing;
    }
    let terms = (0..q).map(move |j| (j, grw_c(d, q + 1 - j)));
    let axis = AxisPart { form_degree: q, copies_per_index: d };
    HcAnswer::Graded(assemble(q, profile, terms, Some(axis)))
}

/// Relative K-theory in degree `q` over `d` axes: forms of degree `j` up
/// to `q - 2` with multiplicity the parity-matched orbit count at `q - j`.
pub fn k_char_zero(q: u64, d: u64, profile: &HHProfile) -> GradedDimensionAnswer {
    let top = q.saturating_sub(1);
    let terms = (0..top).map(move |j| (j, grw_c(d, q - j)));
    assemble(q, profile, terms, None)
}
