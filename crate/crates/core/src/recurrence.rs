//! Counting central and non-central vertices level by level in the
//! distance tree of a central vertex.
//!
//! At each level `j` the tree holds four kinds of vertices: central ones
//! hanging from a central parent (`a`), central ones hanging from a
//! non-central parent (`a'`), and the two non-central counterparts (`b`,
//! `b'`). Maximising central vertices under the neighbourhood constraints
//! gives a linear recurrence whose partial sums bound `C(d,k)`.

use num_bigint::{BigInt, BigUint};
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::bounds::moore_bound;
use crate::error::{Error, Result};
use crate::serde_decimal;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecurrenceState {
    #[serde(with = "serde_decimal")]
    pub a: BigUint,
    #[serde(with = "serde_decimal")]
    pub a_prime: BigUint,
    #[serde(with = "serde_decimal")]
    pub b: BigUint,
    #[serde(with = "serde_decimal")]
    pub b_prime: BigUint,
}

impl RecurrenceState {
    pub fn new(a: u64, a_prime: u64, b: u64, b_prime: u64) -> Self {
        RecurrenceState {
            a: a.into(),
            a_prime: a_prime.into(),
            b: b.into(),
            b_prime: b_prime.into(),
        }
    }

    pub fn central(&self) -> BigUint {
        &self.a + &self.a_prime
    }

    pub fn noncentral(&self) -> BigUint {
        &self.b + &self.b_prime
    }

    pub fn total(&self) -> BigUint {
        self.central() + self.noncentral()
    }
}

fn require_domain(d: u64) -> Result<()> {
    if d < 4 {
        Err(Error::UnsupportedDegree {
            d,
            reason: "the central-vertex recurrence needs d >= 4",
        })
    } else {
        Ok(())
    }
}

fn require_radius(k: u64) -> Result<()> {
    if k < 2 {
        Err(Error::UnsupportedRadius {
            k,
            reason: "the central-vertex bound needs k >= 2",
        })
    } else {
        Ok(())
    }
}

/// Level-1 counts `(d-2, 0, 2, 0)`.
pub fn initial_state(d: u64) -> Result<RecurrenceState> {
    require_domain(d)?;
    Ok(RecurrenceState::new(d - 2, 0, 2, 0))
}

/// One application of the transition matrix
/// `[[d-1, d-2, 0, 0], [0, 0, d-3, d-2], [0, 1, 0, 0], [0, 0, 2, 1]]`.
pub fn step(d: u64, s: &RecurrenceState) -> RecurrenceState {
    RecurrenceState {
        a: &s.a * (d - 1) + &s.a_prime * (d - 2),
        a_prime: &s.b * (d - 3) + &s.b_prime * (d - 2),
        b: s.a_prime.clone(),
        b_prime: &s.b * 2u32 + &s.b_prime,
    }
}

/// States for levels `1..=k`.
pub fn levels(d: u64, k: u64) -> Result<Vec<RecurrenceState>> {
    let mut state = initial_state(d)?;
    let mut out = Vec::with_capacity(k as usize);
    for j in 1..=k {
        if j > 1 {
            state = step(d, &state);
        }
        out.push(state.clone());
    }
    Ok(out)
}

/// Upper bound on the number of central vertices: the root of the tree
/// plus `Σ_{j=1}^{k} a(j) + a'(j)`.
pub fn central_upper_bound(d: u64, k: u64) -> Result<BigUint> {
    require_radius(k)?;
    let sum: BigUint = levels(d, k)?.iter().map(RecurrenceState::central).sum();
    Ok(sum + 1u32)
}

/// For `k = 2` the bound collapses to `M(d,2) - 6`.
pub fn central_upper_bound_k2(d: u64) -> Result<BigUint> {
    let bound = central_upper_bound(d, 2)?;
    let expected = moore_bound(d, 2)? - 6u32;
    if bound != expected {
        return Err(Error::Consistency(format!(
            "C({d},2) bound {bound} != M({d},2) - 6 = {expected}"
        )));
    }
    Ok(bound)
}

/// Lower bound on non-central vertices, `Σ_{j=1}^{k} b(j) + b'(j)`.
pub fn noncentral_lower_bound(d: u64, k: u64) -> Result<BigUint> {
    require_radius(k)?;
    Ok(levels(d, k)?.iter().map(RecurrenceState::noncentral).sum())
}

/// Characteristic polynomial of the transition matrix in factored and
/// expanded form. Coefficient arrays run from the leading term down.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacteristicPolynomial {
    pub d: u64,
    /// `x - (d-1)`.
    pub linear: [i64; 2],
    /// `x^3 - x^2 - (d-3)x - (d-1)`.
    pub cubic: [i64; 4],
    /// `x^4 - d x^3 + 2x^2 + (d-1)(d-4)x + (d-1)^2`.
    pub expanded: [i64; 5],
}

impl CharacteristicPolynomial {
    pub fn eval_expanded(&self, x: f64) -> f64 {
        self.expanded.iter().fold(0.0, |acc, &c| acc * x + c as f64)
    }

    pub fn eval_cubic(&self, x: f64) -> f64 {
        self.cubic.iter().fold(0.0, |acc, &c| acc * x + c as f64)
    }

    pub fn cubic_string(&self) -> String {
        let [_, b, c, e] = self.cubic;
        let term = |coef: i64, var: &str| match coef {
            0 => String::new(),
            1 if !var.is_empty() => format!(" + {var}"),
            -1 if !var.is_empty() => format!(" - {var}"),
            c if c < 0 => format!(" - {}{var}", -c),
            c => format!(" + {c}{var}"),
        };
        format!("x^3{}{}{}", term(b, "x^2"), term(c, "x"), term(e, ""))
    }
}

pub fn characteristic_polynomial(d: u64) -> Result<CharacteristicPolynomial> {
    require_domain(d)?;
    let d = d as i64;
    let linear = [1, -(d - 1)];
    let cubic = [1, -1, -(d - 3), -(d - 1)];
    let mut expanded = [0i64; 5];
    for (i, &l) in linear.iter().enumerate() {
        for (j, &c) in cubic.iter().enumerate() {
            expanded[i + j] += l * c;
        }
    }
    Ok(CharacteristicPolynomial {
        d: d as u64,
        linear,
        cubic,
        expanded,
    })
}

type ExactComplex = Complex<BigRational>;

fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn cplx(re: (i64, i64), im: (i64, i64)) -> ExactComplex {
    Complex::new(rational(re.0, re.1), rational(im.0, im.1))
}

fn cpow(base: &ExactComplex, exp: u64) -> ExactComplex {
    let mut acc = Complex::new(BigRational::one(), BigRational::zero());
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

fn real(v: i64) -> ExactComplex {
    Complex::new(rational(v, 1), BigRational::zero())
}

/// Closed-form level counts `(a, a', b, b')` for `d = 7`, evaluated exactly
/// over the Gaussian rationals from the eigen-decomposition with
/// eigenvalues `6, 3, -1-i, -1+i`.
pub fn closed_form_d7_level(j: u64) -> Result<[ExactComplex; 4]> {
    if j < 1 {
        return Err(Error::OutOfRange("level must be at least 1".into()));
    }
    let p6 = real(6).powu((j - 1) as u32);
    let p3 = real(3).powu((j - 1) as u32);
    let up = cpow(&cplx((-1, 1), (1, 1)), j - 1); // (i - 1)^{j-1}
    let down = cpow(&cplx((-1, 1), (-1, 1)), j); // (-i - 1)^j
    let s = |n: i64| rational(n, 17);
    let c = |re: i64, im: i64| Complex::new(s(re), s(im));

    let a = real(7) * &p6 - Complex::new(s(60), BigRational::zero()) * &p3 - c(-13, 1) * &up
        + c(-7, 6) * &down;
    let a_prime =
        Complex::new(s(36), BigRational::zero()) * &p3 + c(-18, 4) * &up - c(-11, 7) * &down;
    let b = Complex::new(s(12), BigRational::zero()) * &p3 + c(11, 7) * &up + c(-2, 9) * &down;
    let b_prime = Complex::new(s(12), BigRational::zero()) * &p3 - c(6, 10) * &up - c(2, 8) * &down;
    Ok([a, a_prime, b, b_prime])
}

/// Result of evaluating the two `d = 7` partial-sum closed forms.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClosedFormD7 {
    pub k: u64,
    /// `Σ_{j≤k} a(j) + a'(j)`, without the root vertex.
    #[serde(with = "serde_decimal")]
    pub central_bound: BigUint,
    #[serde(with = "serde_decimal")]
    pub noncentral_bound: BigUint,
    /// Largest `|Im|` seen before rounding.
    pub imaginary_residue: f64,
    /// Largest distance of a real part from the nearest integer.
    pub rounding_residue: f64,
}

const IMAGINARY_TOLERANCE: f64 = 1e-6;

fn round_exact(value: &ExactComplex) -> Result<(BigUint, f64, f64)> {
    let im = value.im.to_f64().unwrap_or(f64::INFINITY).abs();
    if im >= IMAGINARY_TOLERANCE {
        return Err(Error::Consistency(format!(
            "imaginary residue {im} above tolerance"
        )));
    }
    let rounded = value.re.round();
    let residue = (&value.re - &rounded)
        .to_f64()
        .unwrap_or(f64::INFINITY)
        .abs();
    let integer = rounded.to_integer();
    let magnitude = integer
        .to_biguint()
        .ok_or_else(|| Error::Consistency(format!("negative closed-form value {integer}")))?;
    Ok((magnitude, im, residue))
}

/// Evaluates the `d = 7` partial-sum closed forms:
/// `(7/5)6^k - (12/17)3^k - (i/85 - 13/85)(i-1)^k + (i/85 + 13/85)(-i-1)^k - 1`
/// and `(12/17)3^k + (i/85 - 13/85)(i-1)^k - (i/85 + 13/85)(-i-1)^k - 2/5`.
pub fn closed_form_d7(k: u64) -> Result<ClosedFormD7> {
    if k < 1 {
        return Err(Error::UnsupportedRadius {
            k,
            reason: "radius must be at least 1",
        });
    }
    let up = cpow(&cplx((-1, 1), (1, 1)), k);
    let down = cpow(&cplx((-1, 1), (-1, 1)), k);
    let p6 = real(6).powu(k as u32);
    let p3 = real(3).powu(k as u32);
    let minus = cplx((-13, 85), (1, 85));
    let plus = cplx((13, 85), (1, 85));
    let central = Complex::new(rational(7, 5), BigRational::zero()) * &p6
        - Complex::new(rational(12, 17), BigRational::zero()) * &p3
        - &minus * &up
        + &plus * &down
        - real(1);
    let noncentral = Complex::new(rational(12, 17), BigRational::zero()) * &p3 + &minus * &up
        - &plus * &down
        - cplx((2, 5), (0, 1));
    let (central_bound, im1, r1) = round_exact(&central)?;
    let (noncentral_bound, im2, r2) = round_exact(&noncentral)?;
    Ok(ClosedFormD7 {
        k,
        central_bound,
        noncentral_bound,
        imaginary_residue: im1.max(im2),
        rounding_residue: r1.max(r2),
    })
}

/// Table of `central_upper_bound(d, k)` with the Moore bound alongside.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableCell {
    pub d: u64,
    pub k: u64,
    #[serde(with = "serde_decimal")]
    pub bound: BigUint,
    #[serde(with = "serde_decimal")]
    pub moore: BigUint,
}

/// Cells in row-major `(k, d)` order, computed in parallel.
pub fn central_bound_table(
    ds: std::ops::RangeInclusive<u64>,
    ks: std::ops::RangeInclusive<u64>,
) -> Result<Vec<TableCell>> {
    use rayon::prelude::*;
    let pairs: Vec<(u64, u64)> = ks.flat_map(|k| ds.clone().map(move |d| (d, k))).collect();
    pairs
        .into_par_iter()
        .map(|(d, k)| {
            Ok(TableCell {
                d,
                k,
                bound: central_upper_bound(d, k)?,
                moore: moore_bound(d, k)?,
            })
        })
        .collect()
}
