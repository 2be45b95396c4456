//! General-position checks.
//!
//! Two independent routes decide whether `S` is in general position:
//! the definition (no member of `S` on a geodesic between two others) and the
//! structural route through the components of `G[S]`: each must be a clique,
//! and their vertex sets must form a distance-constant, in-transitive partition.
//! Both report the lexicographically first violation they find.

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Evidence that a set is not in general position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum GpViolation {
    /// `v` lies on a `u,w`-geodesic.
    InteriorVertex { u: Vertex, v: Vertex, w: Vertex },
    /// Component `part` of `G[S]` contains the induced path `triple[0]-triple[1]-triple[2]`.
    NonCliqueComponent { part: usize, triple: [Vertex; 3] },
    /// Parts `i` and `j` are at distance `d(first)` through one pair and `d(second)` through another.
    NotDistanceConstant { i: usize, j: usize, first: [Vertex; 2], second: [Vertex; 2] },
    /// `d(V_i, V_k) = d(V_i, V_j) + d(V_j, V_k)`; `vertices` holds one representative per part, in order i, j, k.
    Transitive { i: usize, j: usize, k: usize, vertices: [Vertex; 3] },
}

impl GpViolation {
    /// Re-derives the violation from `g`'s distance matrix.
    pub fn recheck(&self, g: &Graph) -> bool {
        let d = g.distances();
        match *self {
            GpViolation::InteriorVertex { u, v, w } => distinct(&[u, v, w]) && d.between(u, v, w),
            GpViolation::NonCliqueComponent { triple: [a, b, c], .. } => {
                distinct(&[a, b, c]) && g.has_edge(a, b) && g.has_edge(b, c) && !g.has_edge(a, c)
            }
            GpViolation::NotDistanceConstant { first: [a, b], second: [c, e], .. } => d.get(a, b) != d.get(c, e),
            GpViolation::Transitive { vertices: [u, v, w], .. } => distinct(&[u, v, w]) && d.between(u, v, w),
        }
    }
}

impl std::fmt::Display for GpViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GpViolation::InteriorVertex { u, v, w } => write!(f, "InteriorVertex({u},{v},{w})"),
            GpViolation::NonCliqueComponent { part, triple: [a, b, c] } => {
                write!(f, "NonCliqueComponent(part {part}: {a}-{b}-{c})")
            }
            GpViolation::NotDistanceConstant { i, j, first: [a, b], second: [c, d] } => {
                write!(f, "NotDistanceConstant(parts {i},{j}: d({a},{b}) != d({c},{d}))")
            }
            GpViolation::Transitive { i, j, k, vertices: [u, v, w] } => {
                write!(f, "Transitive(parts {i},{j},{k} via {u},{v},{w})")
            }
        }
    }
}

fn distinct(vs: &[Vertex]) -> bool {
    vs.iter().enumerate().all(|(i, a)| vs[i + 1..].iter().all(|b| a != b))
}

/// `Ok(())` when the set is in general position.
pub type Verdict = std::result::Result<(), GpViolation>;

/// Checks the definition directly in `O(|S|^3)` with the distance matrix.
///
/// Triples `(u, v, w)` with `u < w` are scanned in lexicographic order and the
/// first one with `v` on a `u,w`-geodesic is reported. Vertices in different
/// components never violate.
pub fn check_definitional(g: &Graph, s: &VertexSet) -> Result<Verdict> {
    s.validate(g)?;
    let d = g.distances();
    let members = s.as_slice();
    for &u in members {
        for &v in members {
            if v == u {
                continue;
            }
            for &w in members.iter().filter(|&&w| w > u && w != v) {
                if d.between(u, v, w) {
                    return Ok(Err(GpViolation::InteriorVertex { u, v, w }));
                }
            }
        }
    }
    Ok(Ok(()))
}

/// Vertex sets of the components of `G[S]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliquePartition {
    pub parts: Vec<VertexSet>,
    /// `part_distance[i][j]` once the partition is known to be distance-constant.
    pub part_distance: Option<Vec<Vec<u32>>>,
}

impl CliquePartition {
    pub fn members(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.parts.iter().flat_map(|p| p.iter())
    }
}

/// Splits `S` into the vertex sets of the components of `G[S]`, ordered by
/// smallest member. Fails with an induced `P_3` if some component is not a clique.
pub fn clique_partition(g: &Graph, s: &VertexSet) -> Result<std::result::Result<CliquePartition, GpViolation>> {
    s.validate(g)?;
    let mut seen = vec![false; s.len()];
    let index = |v: Vertex| s.as_slice().binary_search(&v).ok();
    let mut parts = Vec::new();
    for start in 0..s.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![s.as_slice()[start]];
        let mut head = 0;
        while head < comp.len() {
            let u = comp[head];
            head += 1;
            for &w in g.neighbors(u) {
                if let Some(i) = index(w) {
                    if !seen[i] {
                        seen[i] = true;
                        comp.push(w);
                    }
                }
            }
        }
        parts.push(comp.into_iter().collect::<VertexSet>());
    }
    for (idx, part) in parts.iter().enumerate() {
        if let Some(triple) = induced_p3(g, part) {
            return Ok(Err(GpViolation::NonCliqueComponent { part: idx, triple }));
        }
    }
    Ok(Ok(CliquePartition { parts, part_distance: None }))
}

// First `(a, b, c)` in order of (b, a, c) with a-b-c an induced path.
fn induced_p3(g: &Graph, part: &VertexSet) -> Option<[Vertex; 3]> {
    for b in part.iter() {
        let nb: Vec<Vertex> = g.neighbors(b).iter().copied().filter(|&x| part.contains(x)).collect();
        for (i, &a) in nb.iter().enumerate() {
            if let Some(&c) = nb[i + 1..].iter().find(|&&c| !g.has_edge(a, c)) {
                return Some([a, b, c]);
            }
        }
    }
    None
}

/// Checks that every cross-part distance depends only on the two parts, and
/// fills `part_distance` on success.
pub fn check_distance_constant(g: &Graph, partition: &mut CliquePartition) -> Result<Verdict> {
    let d = g.distances();
    let p = partition.parts.len();
    let mut table = vec![vec![0u32; p]; p];
    for i in 0..p {
        partition.parts[i].validate(g)?;
        for j in i + 1..p {
            let reference = [partition.parts[i].as_slice()[0], partition.parts[j].as_slice()[0]];
            let expected = d.finite(reference[0], reference[1]).ok_or_else(|| {
                domain(format!("parts {i} and {j} lie in different components of the graph"))
            })?;
            for x in partition.parts[i].iter() {
                for y in partition.parts[j].iter() {
                    match d.finite(x, y) {
                        Some(dxy) if dxy == expected => {}
                        Some(_) => {
                            return Ok(Err(GpViolation::NotDistanceConstant { i, j, first: reference, second: [x, y] }))
                        }
                        None => return Err(domain(format!("vertices {x} and {y} lie in different components"))),
                    }
                }
            }
            table[i][j] = expected;
            table[j][i] = expected;
        }
    }
    partition.part_distance = Some(table);
    Ok(Ok(()))
}

/// No ordered triple of distinct parts satisfies `d(i,k) = d(i,j) + d(j,k)`.
pub fn check_in_transitive(partition: &CliquePartition) -> Result<Verdict> {
    let table = partition
        .part_distance
        .as_ref()
        .ok_or_else(|| Error::Contract("in-transitivity needs a distance-constant partition".into()))?;
    let p = partition.parts.len();
    let rep = |i: usize| partition.parts[i].as_slice()[0];
    for i in 0..p {
        for j in 0..p {
            for k in 0..p {
                if i == j || j == k || i == k {
                    continue;
                }
                if table[i][k] == table[i][j] + table[j][k] {
                    return Ok(Err(GpViolation::Transitive { i, j, k, vertices: [rep(i), rep(j), rep(k)] }));
                }
            }
        }
    }
    Ok(Ok(()))
}

/// Structural check. `S` is split by the components of `G`; each restriction
/// must pass on its own. Part indices in a violation refer to the partition
/// of that restriction.
pub fn check_characterized(g: &Graph, s: &VertexSet) -> Result<Verdict> {
    s.validate(g)?;
    for component in g.components() {
        let restricted: VertexSet = s.iter().filter(|&v| component.contains(v)).collect();
        if restricted.is_empty() {
            continue;
        }
        let mut partition = match clique_partition(g, &restricted)? {
            Ok(p) => p,
            Err(v) => return Ok(Err(v)),
        };
        if let Err(v) = check_distance_constant(g, &mut partition)? {
            return Ok(Err(v));
        }
        if let Err(v) = check_in_transitive(&partition)? {
            return Ok(Err(v));
        }
    }
    Ok(Ok(()))
}

/// Greedy lower bound `2|F|` from edges pairwise at edge-distance `diam(G)`.
///
/// Edges are considered in lexicographic order; `F` is maximal for that order
/// but not necessarily maximum.
pub fn distant_edges_bound(g: &Graph) -> Result<(usize, Vec<(Vertex, Vertex)>)> {
    let diameter = g
        .diameter()
        .finite()
        .ok_or_else(|| domain("distant-edge bound needs a connected graph"))?;
    if diameter < 2 {
        return Err(domain(format!("distant-edge bound needs diameter >= 2, found {diameter}")));
    }
    let d = g.distances();
    let edge_distance = |(u, v): (Vertex, Vertex), (x, y): (Vertex, Vertex)| {
        [d.finite(u, x), d.finite(u, y), d.finite(v, x), d.finite(v, y)].into_iter().flatten().min()
    };
    let mut chosen: Vec<(Vertex, Vertex)> = Vec::new();
    for e in g.edges() {
        if chosen.iter().all(|&f| edge_distance(e, f) == Some(diameter)) {
            chosen.push(e);
        }
    }
    Ok((2 * chosen.len(), chosen))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::cartesian_product;
    use crate::family::{generate, FamilySpec};

    fn gen(spec: FamilySpec) -> Graph {
        generate(&spec).unwrap()
    }

    fn set(ids: &[Vertex]) -> VertexSet {
        ids.iter().copied().collect()
    }

    #[test]
    fn small_sets_always_pass() {
        let p = gen(FamilySpec::Path(5));
        for s in [set(&[]), set(&[2]), set(&[0, 4])] {
            assert_eq!(check_definitional(&p, &s).unwrap(), Ok(()));
            assert_eq!(check_characterized(&p, &s).unwrap(), Ok(()));
        }
    }

    #[test]
    fn path_interior_vertex() {
        let p4 = gen(FamilySpec::Path(4));
        let v = check_definitional(&p4, &set(&[0, 1, 3])).unwrap().unwrap_err();
        assert_eq!(v, GpViolation::InteriorVertex { u: 0, v: 1, w: 3 });
        assert!(v.recheck(&p4));
        assert!(check_characterized(&p4, &set(&[0, 1, 3])).unwrap().is_err());
    }

    #[test]
    fn invalid_ids_are_errors() {
        let p4 = gen(FamilySpec::Path(4));
        assert!(check_definitional(&p4, &set(&[0, 7])).is_err());
        assert!(check_characterized(&p4, &set(&[9])).is_err());
        assert!(clique_partition(&p4, &set(&[4])).is_err());
    }

    #[test]
    fn partitions() {
        let k5 = gen(FamilySpec::Complete(5));
        let p = clique_partition(&k5, &VertexSet::full(5)).unwrap().unwrap();
        assert_eq!(p.parts, vec![VertexSet::full(5)]);

        let p3 = gen(FamilySpec::Path(3));
        let v = clique_partition(&p3, &VertexSet::full(3)).unwrap().unwrap_err();
        assert_eq!(v, GpViolation::NonCliqueComponent { part: 0, triple: [0, 1, 2] });
        assert!(v.recheck(&p3));

        let c6 = gen(FamilySpec::Cycle(6));
        let p = clique_partition(&c6, &set(&[0, 1, 3, 4])).unwrap().unwrap();
        assert_eq!(p.parts, vec![set(&[0, 1]), set(&[3, 4])]);
    }

    #[test]
    fn distance_constant() {
        let c6 = gen(FamilySpec::Cycle(6));
        let mut single = CliquePartition { parts: vec![set(&[0])], part_distance: None };
        assert_eq!(check_distance_constant(&c6, &mut single).unwrap(), Ok(()));

        let mut spread = clique_partition(&c6, &set(&[0, 2, 4])).unwrap().unwrap();
        assert_eq!(check_distance_constant(&c6, &mut spread).unwrap(), Ok(()));
        assert_eq!(spread.part_distance, Some(vec![vec![0, 2, 2], vec![2, 0, 2], vec![2, 2, 0]]));
        assert_eq!(check_in_transitive(&spread).unwrap(), Ok(()));

        let p4 = gen(FamilySpec::Path(4));
        let mut p = CliquePartition { parts: vec![set(&[0, 1]), set(&[3])], part_distance: None };
        let v = check_distance_constant(&p4, &mut p).unwrap().unwrap_err();
        assert_eq!(v, GpViolation::NotDistanceConstant { i: 0, j: 1, first: [0, 3], second: [1, 3] });
        assert!(v.recheck(&p4));

        let two = Graph::edgeless(2);
        let mut apart = CliquePartition { parts: vec![set(&[0]), set(&[1])], part_distance: None };
        assert!(matches!(check_distance_constant(&two, &mut apart), Err(Error::Domain(_))));
    }

    #[test]
    fn transitivity() {
        let p5 = gen(FamilySpec::Path(5));
        let mut p = clique_partition(&p5, &set(&[0, 2, 4])).unwrap().unwrap();
        check_distance_constant(&p5, &mut p).unwrap().unwrap();
        let v = check_in_transitive(&p).unwrap().unwrap_err();
        assert_eq!(v, GpViolation::Transitive { i: 0, j: 1, k: 2, vertices: [0, 2, 4] });
        assert!(v.recheck(&p5));

        let unfilled = CliquePartition { parts: vec![set(&[0])], part_distance: None };
        assert!(matches!(check_in_transitive(&unfilled), Err(Error::Contract(_))));
    }

    #[test]
    fn simplicial_and_bipartition_sides() {
        for spec in [FamilySpec::Petersen, FamilySpec::Grid(3, 4), FamilySpec::Gnk(6, 2), FamilySpec::DoubleStar(2, 3)] {
            let g = gen(spec);
            assert_eq!(check_characterized(&g, &g.simplicial_vertices()).unwrap(), Ok(()));
        }
        for n in 1..=5 {
            let k = gen(FamilySpec::CompleteBipartite(n, n));
            assert_eq!(check_characterized(&k, &(0..n).collect()).unwrap(), Ok(()));
        }
    }

    #[test]
    fn disconnected_sets_split_by_component() {
        // K_3 + P_3: {0,1,2} is a clique, {3,5} the path ends.
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5)]).unwrap();
        let s = set(&[0, 1, 2, 3, 5]);
        assert_eq!(check_definitional(&g, &s).unwrap(), Ok(()));
        assert_eq!(check_characterized(&g, &s).unwrap(), Ok(()));
        assert!(check_characterized(&g, &set(&[0, 3, 4, 5])).unwrap().is_err());
    }

    #[test]
    fn json_shape() {
        let v = GpViolation::InteriorVertex { u: 0, v: 1, w: 3 };
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"kind":"InteriorVertex","u":0,"v":1,"w":3}"#);
    }

    #[test]
    fn distant_edges() {
        let k3 = gen(FamilySpec::Complete(3));
        let rook = cartesian_product(&k3, &k3);
        let (bound, f) = distant_edges_bound(&rook).unwrap();
        assert_eq!(bound, 4);
        assert_eq!(f, vec![(0, 1), (5, 8)]);
        let d = rook.distances();
        for (a, b) in [(0, 5), (0, 8), (1, 5), (1, 8)] {
            assert_eq!(d.finite(a, b), Some(2));
        }
        let ends: VertexSet = f.iter().flat_map(|&(u, v)| [u, v]).collect();
        assert_eq!(check_characterized(&rook, &ends).unwrap(), Ok(()));

        let p4 = gen(FamilySpec::Path(4));
        assert_eq!(distant_edges_bound(&p4).unwrap(), (2, vec![(0, 1)]));
        assert!(distant_edges_bound(&k3).is_err());
        assert!(distant_edges_bound(&Graph::edgeless(3)).is_err());
    }

    #[test]
    fn p4_has_no_distant_edge_pair() {
        // Exhaust all edge pairs: the largest edge distance on P_4 is 1 < 3.
        let p4 = gen(FamilySpec::Path(4));
        let d = p4.distances();
        let edges: Vec<_> = p4.edges().collect();
        for (i, &(u, v)) in edges.iter().enumerate() {
            for &(x, y) in &edges[i + 1..] {
                let ed = [d.finite(u, x), d.finite(u, y), d.finite(v, x), d.finite(v, y)].into_iter().flatten().min();
                assert_ne!(ed, Some(3));
            }
        }
    }
}
