use serde::Serialize;

use super::{eccentricities, Graph};
use crate::bounds::moore_bound;
use crate::error::{Error, Result};

/// Outcome of checking a graph against the radial Moore definition for
/// one `(d, k)` pair. Failures are recorded in the fields, never raised.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadialMooreReport {
    pub d: usize,
    pub k: usize,
    pub order: usize,
    pub order_ok: bool,
    pub regular_ok: bool,
    pub connected: bool,
    /// `None` when the graph is disconnected.
    pub radius: Option<usize>,
    pub diameter: Option<usize>,
    pub is_radial_moore: bool,
    /// Vertices whose eccentricity equals the radius.
    pub central_vertices: Vec<usize>,
    pub noncentral_count: usize,
}

impl RadialMooreReport {
    pub fn central_count(&self) -> usize {
        self.central_vertices.len()
    }

    /// Short reason for a negative verdict, `None` when radial Moore.
    pub fn failure_reason(&self) -> Option<String> {
        if self.is_radial_moore {
            return None;
        }
        Some(if !self.order_ok {
            format!("order {} != M({},{})", self.order, self.d, self.k)
        } else if !self.regular_ok {
            format!("not {}-regular", self.d)
        } else if !self.connected {
            "disconnected".to_string()
        } else if self.radius != Some(self.k) {
            format!("radius {} != {}", self.radius.unwrap_or(0), self.k)
        } else {
            format!("diameter {} != {}", self.diameter.unwrap_or(0), self.k + 1)
        })
    }
}

/// Checks: order `M(d,k)`, `d`-regular, radius `k`, diameter `k + 1`.
pub fn verify_radial_moore(g: &Graph, d: usize, k: usize) -> RadialMooreReport {
    let order = g.order();
    let order_ok = moore_bound(d as u64, k as u64)
        .map(|m| m == order.into())
        .unwrap_or(false);
    let regular_ok = order > 0 && g.regular_degree() == Some(d);
    let ecc = eccentricities(g).ok();
    let (radius, diameter, central_vertices) = match &ecc {
        Some(ecc) if !ecc.is_empty() => {
            let radius = *ecc.iter().min().unwrap();
            let diameter = *ecc.iter().max().unwrap();
            let central: Vec<usize> = (0..order).filter(|&v| ecc[v] == radius).collect();
            (Some(radius), Some(diameter), central)
        }
        _ => (None, None, Vec::new()),
    };
    let is_radial_moore = order_ok && regular_ok && radius == Some(k) && diameter == Some(k + 1);
    RadialMooreReport {
        d,
        k,
        order,
        order_ok,
        regular_ok,
        connected: ecc.is_some(),
        radius,
        diameter,
        is_radial_moore,
        noncentral_count: order - central_vertices.len(),
        central_vertices,
    }
}

/// A breach of one of the two non-central neighbourhood constraints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Violation {
    /// A central vertex adjacent to exactly one non-central vertex.
    LoneNoncentralNeighbor { central: usize, noncentral: usize },
    /// A non-central vertex with fewer than two non-central neighbours.
    FewNoncentralNeighbors { vertex: usize, count: usize },
}

/// Checks the neighbourhood constraints every radial Moore graph obeys:
/// a central vertex with a non-central neighbour has at least two of them,
/// and every non-central vertex has at least two non-central neighbours.
///
/// The degree is read off the graph; the input must be radial Moore for it
/// and the given radius `k`.
pub fn check_structural_props(g: &Graph, k: usize) -> Result<Vec<Violation>> {
    let d = g.regular_degree().unwrap_or(0);
    let report = verify_radial_moore(g, d, k);
    if !report.is_radial_moore {
        return Err(Error::NotRadialMoore { d, k });
    }
    let mut central = vec![false; g.order()];
    for &v in &report.central_vertices {
        central[v] = true;
    }
    let mut violations = Vec::new();
    for v in 0..g.order() {
        let noncentral: Vec<usize> = g.neighbors(v).filter(|&u| !central[u]).collect();
        if central[v] {
            if let [only] = noncentral[..] {
                violations.push(Violation::LoneNoncentralNeighbor {
                    central: v,
                    noncentral: only,
                });
            }
        } else if noncentral.len() < 2 {
            violations.push(Violation::FewNoncentralNeighbors {
                vertex: v,
                count: noncentral.len(),
            });
        }
    }
    Ok(violations)
}
