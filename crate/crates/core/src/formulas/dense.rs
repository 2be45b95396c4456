use super::{GpResult, Method};
use crate::cograph::{build_cotree, Cotree};
use crate::construct::delete_vertices;
use crate::error::{domain, Error, Result};
use crate::exact::{eta_exact, max_clique};
use crate::family::{KnMinusSpec, RemovedGraph};
use crate::graph::{Distance, Graph};

/// `gp = max(omega, eta)` on graphs of diameter 2.
pub fn gp_diameter2(g: &Graph) -> Result<GpResult> {
    if g.diameter() != Distance::Finite(2) {
        return Err(domain(format!("diameter is {}, not 2", g.diameter())));
    }
    let (omega, clique) = max_clique(g);
    let (eta, clusters) = eta_exact(g);
    GpResult::certified(g, if omega >= eta { clique } else { clusters }, Method::Diameter2)
}

/// `gp = max(omega, eta)` on connected cographs, both read off the cotree.
///
/// The often quoted `max(omega, alpha)` undercounts: `K_1 + (K_2 u 2K_1)` has
/// `gp = 4` from the four outer vertices, while `omega = alpha = 3`.
pub fn gp_cograph(g: &Graph) -> Result<GpResult> {
    if g.n() == 0 || !g.is_connected() {
        return Err(domain("the cograph formula needs a connected graph"));
    }
    let tree = build_cotree(g).map_err(|p4| Error::NotCograph(p4.0))?;
    cograph_result(g, &tree)
}

pub(super) fn cograph_result(g: &Graph, tree: &Cotree) -> Result<GpResult> {
    let clique = tree.clique();
    let witness = match tree.cluster_sets().1 {
        Some(clusters) if clusters.len() > clique.len() => clusters,
        _ => clique,
    };
    GpResult::certified(g, witness, Method::Cograph)
}

/// `gp = max(|U| + omega(G[U']), eta(G[U']))` where `U` is the set of
/// universal vertices and `U'` the rest.
pub fn gp_universal_vertex(g: &Graph) -> Result<GpResult> {
    if g.is_complete() {
        return Err(domain("graph is complete"));
    }
    let universal = g.universal_vertices();
    if universal.is_empty() {
        return Err(domain("graph has no universal vertex"));
    }
    let (rest, mapping) = delete_vertices(g, &universal)?;
    let (omega, clique) = max_clique(&rest);
    let (eta, clusters) = eta_exact(&rest);
    let witness = if universal.len() + omega >= eta {
        universal.union(&clique.lift(&mapping))
    } else {
        clusters.lift(&mapping)
    };
    GpResult::certified(g, witness, Method::UniversalVertex)
}

/// Closed form for `gp(K_n - E(H))`.
///
/// The wheel case differs from the commonly quoted `max{3, n-k+floor((k-1)/2)}`:
/// `K_n - E(W_5)` keeps `W_5 = K_{1,2,2}` as an induced complete multipartite
/// subgraph of the complement, and for `k >= 6` the hub with an induced `P_3`
/// of the rim gives `K_{1,1,2}`, so the first term is 5 and 4 respectively.
pub fn kn_minus_value(spec: &KnMinusSpec) -> Result<usize> {
    spec.validate()?;
    let n = spec.n;
    Ok(match spec.removed {
        RemovedGraph::Complete { k } => k.max(n - k + 1),
        RemovedGraph::Star { k } => (k + 1).max(n - 1),
        RemovedGraph::Path { k } => 3.max(n - k + k.div_ceil(2)),
        RemovedGraph::CompleteBipartite { r, s } => (r + s).max(n - r),
        RemovedGraph::Wheel { k: 5 } => 5.max(n - 3),
        RemovedGraph::Wheel { k } => 4.max(n - k + (k - 1) / 2),
        RemovedGraph::Cycle { k: 4 } => 4.max(n - 2),
        RemovedGraph::Cycle { k } => 3.max(n - k + k / 2),
    })
}

pub fn gp_kn_minus(spec: &KnMinusSpec) -> Result<GpResult> {
    Ok(GpResult::bare(kn_minus_value(spec)?, Method::KnMinusFormula))
}
