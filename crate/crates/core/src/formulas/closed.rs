use std::fmt;

use serde::Serialize;

use super::{GpResult, Method};
use crate::construct::complement;
use crate::error::{domain, Result};
use crate::family::{generate, FamilySpec};
use crate::graph::VertexSet;

/// Witnesses are built and checked only up to this many vertices.
const WITNESS_MAX_ORDER: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ClosedFamily {
    /// Complement of the `n x m` grid.
    ComplementGrid(usize, usize),
    /// Complement of the `k`-cube.
    ComplementHypercube(u32),
}

impl fmt::Display for ClosedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedFamily::ComplementGrid(n, m) => write!(f, "complement of grid {n}x{m}"),
            ClosedFamily::ComplementHypercube(k) => write!(f, "complement of Q_{k}"),
        }
    }
}

/// Closed forms for complements of grids (`n, m >= 2`) and hypercubes (`k >= 3`).
///
/// The witness is the even colour class of the bipartite base graph, which is
/// a clique in the complement (all of `V` for the 2x2 grid). It is attached
/// only when the graph has at most 256 vertices.
pub fn gp_closed_family(spec: ClosedFamily) -> Result<GpResult> {
    let (value, method, base) = match spec {
        ClosedFamily::ComplementGrid(n, m) => {
            if n < 2 || m < 2 {
                return Err(domain(format!("{spec}: requires n, m >= 2")));
            }
            let value = if n == 2 && m == 2 { 4 } else { n.div_ceil(2) * m.div_ceil(2) + (n / 2) * (m / 2) };
            (value, Method::ComplementGrid, FamilySpec::Grid(n, m))
        }
        ClosedFamily::ComplementHypercube(k) => {
            if k < 3 {
                return Err(domain(format!("{spec}: requires k >= 3")));
            }
            if k > usize::BITS - 2 {
                return Err(domain(format!("{spec}: order 2^{k} does not fit")));
            }
            (1usize << (k - 1), Method::ComplementHypercube, FamilySpec::Hypercube(k))
        }
    };
    let order = match spec {
        ClosedFamily::ComplementGrid(n, m) => n.checked_mul(m),
        ClosedFamily::ComplementHypercube(k) => Some(1usize << k),
    };
    if order.is_none_or(|o| o > WITNESS_MAX_ORDER) {
        return Ok(GpResult::bare(value, method));
    }
    let g = generate(&base)?;
    let witness: VertexSet = match spec {
        ClosedFamily::ComplementGrid(2, 2) => VertexSet::full(4),
        ClosedFamily::ComplementGrid(_, m) => g.vertices().filter(|v| (v / m + v % m) % 2 == 0).collect(),
        ClosedFamily::ComplementHypercube(_) => g.vertices().filter(|v| v.count_ones() % 2 == 0).collect(),
    };
    let result = GpResult::certified(&complement(&g), witness, method)?;
    debug_assert_eq!(result.value, value);
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{gp_exact, SearchBudget};

    #[test]
    fn fixtures() {
        assert_eq!(gp_closed_family(ClosedFamily::ComplementGrid(2, 2)).unwrap().value, 4);
        assert_eq!(gp_closed_family(ClosedFamily::ComplementGrid(3, 3)).unwrap().value, 5);
        let q3 = gp_closed_family(ClosedFamily::ComplementHypercube(3)).unwrap();
        assert_eq!((q3.value, q3.verified), (4, true));
        assert_eq!(gp_closed_family(ClosedFamily::ComplementHypercube(12)).unwrap(), GpResult::bare(2048, Method::ComplementHypercube));
        assert!(gp_closed_family(ClosedFamily::ComplementGrid(1, 5)).is_err());
        assert!(gp_closed_family(ClosedFamily::ComplementHypercube(2)).is_err());
    }

    #[test]
    fn small_grids_match_exact() {
        for n in 2..=3 {
            for m in n..=4 {
                let g = complement(&generate(&FamilySpec::Grid(n, m)).unwrap());
                let exact = gp_exact(&g, &SearchBudget::default()).unwrap().value;
                assert_eq!(gp_closed_family(ClosedFamily::ComplementGrid(n, m)).unwrap().value, exact, "{n}x{m}");
            }
        }
    }
}
