use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::graph::{Graph, VertexSet};

pub const MAX_HULL_ORDER: usize = 12;

/// Hull number, upper hull number and every minimal hull set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HullNumbers {
    pub h: usize,
    pub h_plus: usize,
    pub minimal_hull_sets: Vec<VertexSet>,
}

/// Enumerates all vertex subsets of a connected graph with `2 <= n <= 12`.
pub fn hull_numbers(g: &Graph) -> Result<HullNumbers> {
    let n = g.n();
    if n > MAX_HULL_ORDER {
        return Err(Error::Scale(format!("hull numbers are enumerated only for n <= {MAX_HULL_ORDER}, got {n}")));
    }
    if n < 2 || !g.is_connected() {
        return Err(domain("hull numbers need a connected graph with at least 2 vertices"));
    }
    let d = g.distances();
    let mut interval = vec![0u32; n * n];
    for u in 0..n {
        for w in 0..n {
            interval[u * n + w] = (0..n).filter(|&x| d.between(u, x, w)).fold(0, |m, x| m | 1 << x);
        }
    }
    let full = (1u32 << n) - 1;
    let closure = |mut set: u32| loop {
        let mut grown = set;
        for u in (0..n).filter(|&u| set & 1 << u != 0) {
            for w in (u + 1..n).filter(|&w| set & 1 << w != 0) {
                grown |= interval[u * n + w];
            }
        }
        if grown == set {
            return set;
        }
        set = grown;
    };
    let is_hull: Vec<bool> = (0..=full).map(|m| closure(m) == full).collect();
    let mut minimal = Vec::new();
    for mask in 0..=full {
        if is_hull[mask as usize] && (0..n).all(|v| mask & 1 << v == 0 || !is_hull[(mask & !(1 << v)) as usize]) {
            minimal.push(mask);
        }
    }
    let sizes = minimal.iter().map(|m| m.count_ones() as usize);
    let h = sizes.clone().min().expect("V itself contains a minimal hull set");
    let h_plus = sizes.max().expect("nonempty");
    let minimal_hull_sets = minimal.into_iter().map(|m| (0..n).filter(|&v| m & 1 << v != 0).collect()).collect();
    Ok(HullNumbers { h, h_plus, minimal_hull_sets })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, FamilySpec};

    fn hull(spec: FamilySpec) -> HullNumbers {
        hull_numbers(&generate(&spec).unwrap()).unwrap()
    }

    #[test]
    fn fixtures() {
        for n in 2..=3 {
            assert_eq!(hull(FamilySpec::CompleteBipartite(n, n)).h_plus, 2);
        }
        for n in 2..=9 {
            let r = hull(FamilySpec::Path(n));
            assert_eq!(r.h, 2);
            assert_eq!(r.minimal_hull_sets, vec![[0, n - 1].into_iter().collect::<VertexSet>()]);
        }
        // every pair of K_3 is already convex
        let k3 = hull(FamilySpec::Complete(3));
        assert_eq!((k3.h, k3.h_plus), (3, 3));
    }

    #[test]
    fn limits() {
        assert!(matches!(hull_numbers(&generate(&FamilySpec::Path(13)).unwrap()), Err(Error::Scale(_))));
        assert!(matches!(hull_numbers(&Graph::edgeless(3)), Err(Error::Domain(_))));
        assert!(matches!(hull_numbers(&Graph::edgeless(1)), Err(Error::Domain(_))));
    }
}
