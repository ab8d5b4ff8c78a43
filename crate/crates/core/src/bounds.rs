//! Closed-form counting bounds: the Moore bound, the common status of a
//! Moore-tree vertex, and the status upper bounds for radial Moore graphs
//! of radius 2 (diameter 3) with a single central vertex.

use num_bigint::BigUint;
use num_integer::Roots;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::serde_decimal;

fn require_degree(d: u64) -> Result<()> {
    if d < 3 {
        Err(Error::UnsupportedDegree {
            d,
            reason: "degree must be at least 3",
        })
    } else {
        Ok(())
    }
}

/// `M(d,k) = 1 + d·Σ_{i<k} (d-1)^i`.
pub fn moore_bound(d: u64, k: u64) -> Result<BigUint> {
    require_degree(d)?;
    if k < 1 {
        return Err(Error::UnsupportedRadius {
            k,
            reason: "radius must be at least 1",
        });
    }
    let base = BigUint::from(d - 1);
    let mut power = BigUint::one();
    let mut sum = BigUint::zero();
    for _ in 0..k {
        sum += &power;
        power *= &base;
    }
    Ok(BigUint::one() + sum * d)
}

/// Status of a vertex whose distance tree is a full Moore tree of depth `k`:
/// `d(k(d-2)(d-1)^k - (d-1)^k + 1) / (d-2)^2`.
pub fn moore_status(d: u64, k: u64) -> Result<BigUint> {
    require_degree(d)?;
    if k < 1 {
        return Err(Error::UnsupportedRadius {
            k,
            reason: "radius must be at least 1",
        });
    }
    let power = BigUint::from(d - 1).pow(k as u32);
    let numerator = BigUint::from(d) * (BigUint::from(k) * (d - 2) * &power - &power + 1u32);
    let denominator = BigUint::from((d - 2) * (d - 2));
    debug_assert!((&numerator % &denominator).is_zero());
    Ok(numerator / denominator)
}

/// Largest number of attachments any one of the `alpha` distance-2
/// descendants can take while keeping diameter 3.
pub fn g_max(d: u64, alpha: u64) -> Result<u64> {
    require_degree(d)?;
    if alpha < 1 || alpha > d - 1 {
        return Err(Error::OutOfRange(format!(
            "alpha = {alpha} not in [1, {}]",
            d - 1
        )));
    }
    Ok(if 2 * alpha < d {
        d * (alpha - 1) / (d - 2)
    } else {
        d - alpha
    })
}

/// Smallest `alpha` in `[1, d-1]` with `alpha·g_max(d, alpha) >= d - 1`.
pub fn min_attach_count(d: u64) -> Result<u64> {
    require_degree(d)?;
    for alpha in 1..d {
        if alpha * g_max(d, alpha)? >= d - 1 {
            return Ok(alpha);
        }
    }
    unreachable!("alpha = d - 1 always satisfies the attachment inequality")
}

/// `⌈(1 + √(4d-3)) / 2⌉` in exact integer arithmetic.
pub fn attach_ceiling_formula(d: u64) -> u64 {
    // Least m >= 1 with 2m - 1 >= √(4d-3), i.e. (2m - 1)^2 >= 4d - 3.
    let radicand = 4 * d - 3;
    let mut m = radicand.sqrt().div_ceil(2).max(1);
    while (2 * m - 1) * (2 * m - 1) < radicand {
        m += 1;
    }
    m
}

/// Lower bound on `|Γ_2(v)|` for a vertex of a radial Moore graph of
/// diameter 3 with one central vertex.
pub fn gamma2_lower(d: u64, neighbor_of_central: bool) -> Result<u64> {
    require_degree(d)?;
    Ok(if neighbor_of_central {
        d + min_attach_count(d)? - 1
    } else {
        d
    })
}

/// `3d(d-1)`.
pub fn vertex_status_upper(d: u64) -> Result<u64> {
    require_degree(d)?;
    Ok(3 * d * (d - 1))
}

pub fn central_neighbor_status_upper(d: u64) -> Result<u64> {
    require_degree(d)?;
    Ok(3 * d * d - 3 * d - min_attach_count(d)? + 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TotalStatusVariant {
    /// Uses the ceiling formula for every degree.
    Ceiling,
    /// Uses the attachment count of [`min_attach_count`], which is one
    /// smaller at `d = 4`.
    Consistent,
}

pub fn total_status_upper(d: u64, variant: TotalStatusVariant) -> Result<u64> {
    require_degree(d)?;
    let attach = match variant {
        TotalStatusVariant::Ceiling => attach_ceiling_formula(d),
        TotalStatusVariant::Consistent => min_attach_count(d)?,
    };
    Ok(3 * d.pow(4) - 3 * d.pow(3) + 2 * d * d - d * attach)
}

/// Every closed-form bound for one `(d, k)` pair.
///
/// The status bounds only depend on `d`; they describe radius-2 graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub d: u64,
    pub k: u64,
    #[serde(with = "serde_decimal")]
    pub moore_bound: BigUint,
    #[serde(with = "serde_decimal")]
    pub moore_status: BigUint,
    pub vertex_status_upper: u64,
    pub central_neighbor_status_upper: u64,
    pub total_status_upper_ceiling: u64,
    pub total_status_upper_consistent: u64,
    /// True when the ceiling and attachment-count totals disagree.
    pub total_status_variants_differ: bool,
    pub gamma2_lower: u64,
    pub gamma2_lower_central_neighbor: u64,
    pub min_attach: u64,
}

pub fn bounds_report(d: u64, k: u64) -> Result<BoundsReport> {
    let ceiling = total_status_upper(d, TotalStatusVariant::Ceiling)?;
    let consistent = total_status_upper(d, TotalStatusVariant::Consistent)?;
    Ok(BoundsReport {
        d,
        k,
        moore_bound: moore_bound(d, k)?,
        moore_status: moore_status(d, k)?,
        vertex_status_upper: vertex_status_upper(d)?,
        central_neighbor_status_upper: central_neighbor_status_upper(d)?,
        total_status_upper_ceiling: ceiling,
        total_status_upper_consistent: consistent,
        total_status_variants_differ: ceiling != consistent,
        gamma2_lower: gamma2_lower(d, false)?,
        gamma2_lower_central_neighbor: gamma2_lower(d, true)?,
        min_attach: min_attach_count(d)?,
    })
}
