//! Metric and structural queries: components, diameter, geodesic intervals,
//! convex closure, bipartiteness and simplicial vertices.

use serde::Serialize;

use crate::error::{domain, Result};
use crate::graph::{Distance, Graph, Vertex, VertexSet};

/// Two-coloring of a bipartite graph. Every edge joins `side_a` to `side_b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BipartiteLabeling {
    pub side_a: VertexSet,
    pub side_b: VertexSet,
}

impl BipartiteLabeling {
    pub fn validate(&self, g: &Graph) -> Result<()> {
        self.side_a.validate(g)?;
        self.side_b.validate(g)?;
        if self.side_a.len() + self.side_b.len() != g.n()
            || self.side_a.iter().any(|v| self.side_b.contains(v))
        {
            return Err(domain("labeling does not partition the vertex set"));
        }
        for (u, v) in g.edges() {
            if self.side_a.contains(u) == self.side_a.contains(v) {
                return Err(domain(format!("edge {u}-{v} lies inside one side of the labeling")));
            }
        }
        Ok(())
    }

    /// Restriction to the vertices kept in an induced subgraph, renumbered by
    /// `mapping` (new id -> old id).
    pub fn restrict(&self, mapping: &[Vertex]) -> BipartiteLabeling {
        let mut side_a = Vec::new();
        let mut side_b = Vec::new();
        for (new, &old) in mapping.iter().enumerate() {
            if self.side_a.contains(old) {
                side_a.push(new);
            } else {
                side_b.push(new);
            }
        }
        BipartiteLabeling { side_a: side_a.into_iter().collect(), side_b: side_b.into_iter().collect() }
    }
}

/// Result of a bipartiteness test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartiteness {
    Bipartite(BipartiteLabeling),
    /// Closed walk `w[0] - w[1] - ... - w[k-1] - w[0]` of odd length `k`.
    OddCycle(Vec<Vertex>),
}

impl Graph {
    /// Connected components, each sorted, listed by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut comp = vec![usize::MAX; self.n()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[s] = id;
            let mut members = vec![s];
            let mut head = 0;
            while head < members.len() {
                let u = members[head];
                head += 1;
                for &w in self.neighbors(u) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            out.push(members.into_iter().collect());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Diameter (`Infinite` iff there is more than one component) and the components.
    pub fn diameter_and_components(&self) -> (Distance, Vec<VertexSet>) {
        let components = self.components();
        let diameter = if components.len() > 1 {
            Distance::Infinite
        } else {
            let d = self.distances();
            self.vertices().map(|v| d.eccentricity(v)).max().unwrap_or(Distance::Finite(0))
        };
        (diameter, components)
    }

    pub fn diameter(&self) -> Distance {
        self.diameter_and_components().0
    }

    /// Vertices on some `u,v`-geodesic.
    pub fn interval(&self, u: Vertex, v: Vertex) -> Result<VertexSet> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let d = self.distances();
        if !d.get(u, v).is_finite() {
            return Err(domain(format!("vertices {u} and {v} lie in different components")));
        }
        Ok(self.vertices().filter(|&x| d.between(u, x, v)).collect())
    }

    /// Smallest geodesically convex set containing `s`.
    pub fn convex_closure(&self, s: &VertexSet) -> Result<VertexSet> {
        s.validate(self)?;
        let d = self.distances();
        let mut inside = vec![false; self.n()];
        let mut members: Vec<Vertex> = s.iter().collect();
        for &v in &members {
            inside[v] = true;
        }
        // Pairs (i, j) with j < i are closed once both are processed; each
        // newly added vertex only has to be paired with the earlier ones.
        let mut i = 0;
        while i < members.len() {
            let u = members[i];
            for j in 0..i {
                let w = members[j];
                if !d.get(u, w).is_finite() {
                    continue;
                }
                for x in self.vertices() {
                    if !inside[x] && d.between(u, x, w) {
                        inside[x] = true;
                        members.push(x);
                    }
                }
            }
            i += 1;
        }
        Ok(members.into_iter().collect())
    }

    pub fn is_convex(&self, s: &VertexSet) -> Result<bool> {
        Ok(self.convex_closure(s)?.len() == s.len())
    }

    /// BFS two-coloring per component; the smallest vertex of each component goes to side A.
    pub fn bipartiteness(&self) -> Bipartiteness {
        let n = self.n();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        for s in self.vertices() {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = vec![s];
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                for &w in self.neighbors(u) {
                    match color[w] {
                        None => {
                            color[w] = color[u].map(|c| !c);
                            parent[w] = u;
                            depth[w] = depth[u] + 1;
                            queue.push(w);
                        }
                        Some(c) if Some(c) == color[u] => {
                            return Bipartiteness::OddCycle(odd_cycle(&parent, &depth, u, w));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        let side_a = self.vertices().filter(|&v| color[v] == Some(false)).collect();
        let side_b = self.vertices().filter(|&v| color[v] == Some(true)).collect();
        Bipartiteness::Bipartite(BipartiteLabeling { side_a, side_b })
    }

    pub fn bipartition(&self) -> Option<BipartiteLabeling> {
        match self.bipartiteness() {
            Bipartiteness::Bipartite(l) => Some(l),
            Bipartiteness::OddCycle(_) => None,
        }
    }

    /// Vertices whose open neighborhood is a clique.
    pub fn simplicial_vertices(&self) -> VertexSet {
        self.vertices()
            .filter(|&v| {
                let nb = self.neighbors(v);
                nb.iter().enumerate().all(|(i, &a)| nb[i + 1..].iter().all(|&b| self.has_edge(a, b)))
            })
            .collect()
    }

    pub fn universal_vertices(&self) -> VertexSet {
        let n = self.n();
        self.vertices().filter(|&v| self.degree(v) + 1 == n).collect()
    }

    /// Connected with exactly `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.edge_count() + 1 == self.n() && self.is_connected()
    }
}

// Tree path from `u` and `w` up to their common ancestor; `u`, `w` have equal
// color, so the closing edge `u-w` yields an odd cycle.
fn odd_cycle(parent: &[usize], depth: &[usize], u: Vertex, w: Vertex) -> Vec<Vertex> {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{cartesian_product, complement};
    use crate::family::{generate, FamilySpec};

    fn gen(spec: FamilySpec) -> Graph {
        generate(&spec).unwrap()
    }

    fn set(ids: &[Vertex]) -> VertexSet {
        ids.iter().copied().collect()
    }

    #[test]
    fn petersen_has_diameter_two_everywhere() {
        let p = gen(FamilySpec::Petersen);
        let d = p.distances();
        assert!(p.vertices().all(|v| d.eccentricity(v) == Distance::Finite(2)));
    }

    #[test]
    fn diameters() {
        let c4 = gen(FamilySpec::Cycle(4));
        let (diam, comps) = c4.diameter_and_components();
        assert_eq!(diam, Distance::Finite(2));
        assert_eq!(comps.len(), 1);

        let p3 = gen(FamilySpec::Path(3));
        assert_eq!(cartesian_product(&p3, &p3).diameter(), Distance::Finite(4));

        let two = Graph::from_edges(3, [(0, 1)]).unwrap();
        let (diam, comps) = two.diameter_and_components();
        assert_eq!(diam, Distance::Infinite);
        assert_eq!(comps, vec![set(&[0, 1]), set(&[2])]);
    }

    #[test]
    fn complement_of_knn_minus_edge_has_diameter_three() {
        for n in 2..=6 {
            let k = gen(FamilySpec::CompleteBipartite(n, n));
            let k = Graph::from_edges(k.n(), k.edges().filter(|&e| e != (0, n))).unwrap();
            assert_eq!(complement(&k).diameter(), Distance::Finite(3), "n = {n}");
        }
    }

    #[test]
    fn complement_of_long_trees_has_diameter_two() {
        for seed in 0..40 {
            let t = gen(FamilySpec::RandomTree { n: 12, seed });
            if t.diameter() >= Distance::Finite(4) {
                assert_eq!(complement(&t).diameter(), Distance::Finite(2), "seed {seed}");
            }
        }
    }

    #[test]
    fn intervals() {
        let c4 = gen(FamilySpec::Cycle(4));
        assert_eq!(c4.interval(0, 2).unwrap(), set(&[0, 1, 2, 3]));
        let p4 = gen(FamilySpec::Path(4));
        assert_eq!(p4.interval(0, 3).unwrap(), set(&[0, 1, 2, 3]));
        let pet = gen(FamilySpec::Petersen);
        for (u, v) in pet.edges() {
            assert_eq!(pet.interval(u, v).unwrap(), set(&[u, v]));
        }
        let two = Graph::edgeless(2);
        assert!(matches!(two.interval(0, 1), Err(crate::Error::Domain(_))));
    }

    #[test]
    fn closures() {
        let c4 = gen(FamilySpec::Cycle(4));
        assert_eq!(c4.convex_closure(&set(&[])).unwrap(), set(&[]));
        assert_eq!(c4.convex_closure(&set(&[1])).unwrap(), set(&[1]));
        assert_eq!(c4.convex_closure(&set(&[0, 2])).unwrap(), VertexSet::full(4));
        let p5 = gen(FamilySpec::Path(5));
        assert_eq!(p5.convex_closure(&set(&[0, 4])).unwrap(), VertexSet::full(5));
        // Closure needs more than one round: 0 and 2 on C_6 pull in 1, then nothing else.
        let c6 = gen(FamilySpec::Cycle(6));
        assert_eq!(c6.convex_closure(&set(&[0, 2])).unwrap(), set(&[0, 1, 2]));
        assert_eq!(c6.convex_closure(&set(&[0, 2, 4])).unwrap(), VertexSet::full(6));
    }

    #[test]
    fn bipartite_tests() {
        assert!(gen(FamilySpec::Grid(3, 3)).bipartition().is_some());
        let q = gen(FamilySpec::Hypercube(4));
        let l = q.bipartition().unwrap();
        assert!(l.side_a.iter().all(|v| v.count_ones() % 2 == 0));
        l.validate(&q).unwrap();

        match gen(FamilySpec::Petersen).bipartiteness() {
            Bipartiteness::OddCycle(w) => assert_eq!(w.len(), 5),
            other => panic!("expected odd cycle, got {other:?}"),
        }
    }

    #[test]
    fn simplicial() {
        assert_eq!(gen(FamilySpec::Complete(5)).simplicial_vertices(), VertexSet::full(5));
        assert_eq!(gen(FamilySpec::Path(4)).simplicial_vertices(), set(&[0, 3]));
        for n in 2..=5 {
            let k = gen(FamilySpec::CompleteBipartite(n, n));
            let k = Graph::from_edges(k.n(), k.edges().filter(|&e| e != (0, n))).unwrap();
            let full: VertexSet = (1..n).chain(n + 1..2 * n).collect();
            let simp = complement(&k).simplicial_vertices();
            assert!(full.iter().all(|v| simp.contains(v)), "n = {n}");
        }
    }
}
