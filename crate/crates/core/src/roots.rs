//! Roots of the cubic factor `q(x) = x^3 - x^2 - (d-3)x - (d-1)` of the
//! recurrence's characteristic polynomial, with the interval and modulus
//! bounds used to show they are negligible next to `d - 1`.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Roots of a monic real cubic `x^3 + b x^2 + c x + e`, real roots sorted
/// descending. A non-real conjugate pair is reported by its member with
/// positive imaginary part.
#[derive(Debug, Clone, PartialEq)]
pub struct MonicCubicRoots {
    pub real: Vec<f64>,
    pub complex_pair: Option<Complex64>,
}

fn polish(b: f64, c: f64, e: f64, mut x: f64) -> f64 {
    for _ in 0..3 {
        let f = ((x + b) * x + c) * x + e;
        let df = (3.0 * x + 2.0 * b) * x + c;
        if df == 0.0 {
            break;
        }
        let next = x - f / df;
        if !next.is_finite() {
            break;
        }
        x = next;
    }
    x
}

/// Depressed-cubic solver: Cardano's formula when there is a single real
/// root, the trigonometric form when there are three.
pub fn solve_monic_cubic(b: f64, c: f64, e: f64) -> MonicCubicRoots {
    let shift = b / 3.0;
    let p = c - b * b / 3.0;
    let q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + e;
    let half_q = q / 2.0;
    let third_p = p / 3.0;
    let disc = half_q * half_q + third_p * third_p * third_p;

    if disc > 0.0 {
        // Pick the sign that avoids cancellation, then use u·v = -p/3.
        let s = disc.sqrt();
        let u = (-half_q - s.copysign(half_q)).cbrt();
        let t = if u == 0.0 { 0.0 } else { u - third_p / u };
        let r = polish(b, c, e, t - shift);
        // Deflate: x^2 + (b + r)x + (c + r(b + r)).
        let qb = b + r;
        let qc = c + r * qb;
        let qd = qb * qb - 4.0 * qc;
        if qd < 0.0 {
            let re = -qb / 2.0;
            let im = (-qd).sqrt() / 2.0;
            MonicCubicRoots {
                real: vec![r],
                complex_pair: Some(Complex64::new(re, im)),
            }
        } else {
            // Rounding put a double root on the real side.
            let sq = qd.sqrt();
            let mut real = vec![r, (-qb + sq) / 2.0, (-qb - sq) / 2.0];
            real.sort_by(|x, y| y.total_cmp(x));
            MonicCubicRoots {
                real,
                complex_pair: None,
            }
        }
    } else {
        let m = 2.0 * (-third_p).sqrt();
        let arg = if m == 0.0 {
            0.0
        } else {
            (3.0 * q / (p * m)).clamp(-1.0, 1.0)
        };
        let theta = arg.acos() / 3.0;
        let mut real: Vec<f64> = (0..3)
            .map(|i| {
                polish(
                    b,
                    c,
                    e,
                    m * (theta - 2.0 * PI * i as f64 / 3.0).cos() - shift,
                )
            })
            .collect();
        real.sort_by(|x, y| y.total_cmp(x));
        MonicCubicRoots {
            real,
            complex_pair: None,
        }
    }
}

fn serialize_ratio<S: Serializer>(r: &Ratio<i64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(r)
}

fn serialize_complex<S: Serializer>(
    c: &Option<Complex64>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match c {
        Some(c) => s.collect_seq([c.re, c.im]),
        None => s.serialize_none(),
    }
}

/// Roots of `q(x)` and its Cardano discriminant.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CubicRoots {
    pub d: u64,
    /// Descending.
    pub real_roots: Vec<f64>,
    /// `(re, im)` with `im > 0`; the conjugate is implied.
    #[serde(serialize_with = "serialize_complex")]
    pub complex_pair: Option<Complex64>,
    /// `(q/2)^2 + (p/3)^3` of the depressed cubic, which equals
    /// `-(d^3 - 20d^2 + 56d - 44)/27`. Positive means one real root.
    #[serde(serialize_with = "serialize_ratio")]
    pub discriminant: Ratio<i64>,
}

impl CubicRoots {
    /// All three roots as complex numbers, real ones first.
    pub fn all(&self) -> Vec<Complex64> {
        let mut out: Vec<Complex64> = self
            .real_roots
            .iter()
            .map(|&r| Complex64::new(r, 0.0))
            .collect();
        if let Some(c) = self.complex_pair {
            out.push(c);
            out.push(c.conj());
        }
        out
    }

    pub fn largest_real(&self) -> f64 {
        self.real_roots[0]
    }
}

fn require_domain(d: u64) -> Result<()> {
    if d < 4 {
        Err(Error::UnsupportedDegree {
            d,
            reason: "the cubic factor is studied for d >= 4",
        })
    } else {
        Ok(())
    }
}

pub fn discriminant(d: u64) -> Ratio<i64> {
    let d = d as i64;
    Ratio::new(-(d * d * d - 20 * d * d + 56 * d - 44), 27)
}

pub fn cubic_roots(d: u64) -> Result<CubicRoots> {
    require_domain(d)?;
    let df = d as f64;
    let roots = solve_monic_cubic(-1.0, -(df - 3.0), -(df - 1.0));
    Ok(CubicRoots {
        d,
        real_roots: roots.real,
        complex_pair: roots.complex_pair,
        discriminant: discriminant(d),
    })
}

/// Interval `((1 - 2√(3d-8))/3, (1 + 2√(3d-8))/3)` holding every real root
/// once all three roots are real (`d >= 17`).
pub fn laguerre_interval(d: u64) -> Result<(f64, f64)> {
    if d < 17 {
        return Err(Error::NotApplicable(format!(
            "d = {d}: the cubic has a single real root below d = 17"
        )));
    }
    let r = (3.0 * d as f64 - 8.0).sqrt();
    Ok(((1.0 - 2.0 * r) / 3.0, (1.0 + 2.0 * r) / 3.0))
}

/// True when the complex pair has modulus at most 2, the Cauchy bound
/// `1 + max(1, (d-3)/(d-1))` on the non-real roots.
pub fn cauchy_bound_check(d: u64) -> Result<bool> {
    if !(4..=16).contains(&d) {
        return Err(Error::NotApplicable(format!(
            "d = {d}: the complex-pair bound applies for 4 <= d <= 16"
        )));
    }
    let roots = cubic_roots(d)?;
    let df = d as f64;
    let bound = 1.0 + f64::max(1.0, (df - 3.0) / (df - 1.0));
    Ok(roots
        .complex_pair
        .is_some_and(|c| c.norm() <= bound.min(2.0) + 1e-9))
}

/// `(α/√d, β/(-√d), γ)` with `α` the largest root, `β` the most negative
/// and `γ` the remaining one.
pub fn asymptotic_ratios(d: u64) -> Result<(f64, f64, f64)> {
    if d < 17 {
        return Err(Error::NotApplicable(format!(
            "d = {d}: needs three real roots (d >= 17)"
        )));
    }
    let roots = cubic_roots(d)?;
    let [alpha, gamma, beta] = roots.real_roots[..] else {
        return Err(Error::Consistency(format!(
            "expected three real roots for d = {d}"
        )));
    };
    let sd = (d as f64).sqrt();
    Ok((alpha / sd, beta / -sd, gamma))
}
