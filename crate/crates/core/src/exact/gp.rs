//! Exact general position number.
//!
//! The value is additive over components, so each component is solved on its
//! own. Inside a component, general position is hereditary and a candidate `c`
//! stays compatible with a partial set `S` only while no triple of `S + c`
//! has a member on a geodesic between the other two. Extending `S` by `v`
//! therefore only has to recheck the triples `(u, v, c)` with `u` in `S`.
//!
//! Branch and bound runs in two passes: a value pass over vertices in
//! descending degree order, seeded with cheap lower bounds, then a witness
//! pass in ascending id order that stops at the first set of the optimal size.
//! Include-first search in id order meets equal-size sets in lexicographic
//! order, so that witness is the lexicographically smallest gp-set.

use itertools::Itertools;
use serde::Serialize;

use super::{max_clique, Meter, SearchBudget, SearchMode};
use crate::construct::induced_subgraph;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::verify::distant_edges_bound;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GpExact {
    pub value: usize,
    /// Lexicographically smallest gp-set.
    pub witness: VertexSet,
    pub nodes: u64,
}

struct Abort;

pub fn gp_exact(g: &Graph, budget: &SearchBudget) -> Result<GpExact> {
    let mut meter = Meter::new(budget);
    let mut witness: Vec<Vertex> = Vec::new();
    for component in g.components() {
        let (sub, mapping) = induced_subgraph(g, &component)?;
        let solver = ComponentSolver::new(&sub);
        let outcome = match budget.mode {
            SearchMode::BranchAndBound => solver.branch_and_bound(&sub, &mut meter),
            SearchMode::BruteForce => solver.brute_force(&mut meter),
        };
        match outcome {
            Ok(local) => witness.extend(local.into_iter().map(|v| mapping[v])),
            Err(partial) => {
                witness.extend(partial.into_iter().map(|v| mapping[v]));
                let witness: VertexSet = witness.into_iter().collect();
                return Err(Error::BudgetExhausted { lower_bound: witness.len(), witness, nodes: meter.nodes() });
            }
        }
    }
    let witness: VertexSet = witness.into_iter().collect();
    Ok(GpExact { value: witness.len(), witness, nodes: meter.nodes() })
}

/// Search over one connected component, in local ids.
struct ComponentSolver {
    m: usize,
    dist: Vec<u32>,
}

impl ComponentSolver {
    fn new(g: &Graph) -> ComponentSolver {
        let m = g.n();
        let d = g.distances();
        let dist = (0..m * m)
            .map(|i| d.finite(i / m, i % m).expect("component is connected"))
            .collect();
        ComponentSolver { m, dist }
    }

    #[inline]
    fn d(&self, a: usize, b: usize) -> u32 {
        self.dist[a * self.m + b]
    }

    /// No member of `{a, b, c}` lies on a geodesic between the other two.
    #[inline]
    fn compatible(&self, a: usize, b: usize, c: usize) -> bool {
        let (ab, bc, ac) = (self.d(a, b), self.d(b, c), self.d(a, c));
        ab + bc != ac && ab + ac != bc && ac + bc != ab
    }

    fn in_general_position(&self, s: &[usize]) -> bool {
        s.iter().tuple_combinations().all(|(&a, &b, &c)| self.compatible(a, b, c))
    }

    // `Err` carries the best set found before the budget ran out.
    fn branch_and_bound(&self, g: &Graph, meter: &mut Meter) -> std::result::Result<Vec<usize>, Vec<usize>> {
        if self.m <= 2 {
            return Ok((0..self.m).collect());
        }
        let seed = lower_bound_set(g);
        let mut order: Vec<usize> = (0..self.m).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

        let mut search = Search { solver: self, meter, chosen: Vec::new(), best: seed };
        if search.improve(&order).is_err() {
            return Err(search.best);
        }
        let target = search.best.len();
        let fallback = std::mem::take(&mut search.best);
        search.chosen.clear();
        let all: Vec<usize> = (0..self.m).collect();
        match search.first_of_size(&all, target) {
            Ok(true) => Ok(search.chosen),
            Ok(false) => unreachable!("a set of size {target} was found in the value pass"),
            Err(Abort) => Err(fallback),
        }
    }

    fn brute_force(&self, meter: &mut Meter) -> std::result::Result<Vec<usize>, Vec<usize>> {
        for k in (1..=self.m).rev() {
            for subset in (0..self.m).combinations(k) {
                if !meter.tick() {
                    return Err(Vec::new());
                }
                if self.in_general_position(&subset) {
                    return Ok(subset);
                }
            }
        }
        Ok(Vec::new())
    }
}

// Largest of: a maximum clique, the simplicial vertices, the distant-edge endpoints.
fn lower_bound_set(g: &Graph) -> Vec<usize> {
    let mut best = max_clique(g).1.into_vec();
    let simplicial = g.simplicial_vertices();
    if simplicial.len() > best.len() {
        best = simplicial.into_vec();
    }
    if let Ok((bound, edges)) = distant_edges_bound(g) {
        if bound > best.len() {
            best = edges.iter().flat_map(|&(u, v)| [u, v]).sorted().collect();
        }
    }
    best
}

struct Search<'a> {
    solver: &'a ComponentSolver,
    meter: &'a mut Meter,
    chosen: Vec<usize>,
    best: Vec<usize>,
}

impl Search<'_> {
    fn extensions(&self, v: usize, rest: &[usize]) -> Vec<usize> {
        rest.iter()
            .copied()
            .filter(|&c| self.chosen.iter().all(|&u| self.solver.compatible(u, v, c)))
            .collect()
    }

    fn improve(&mut self, candidates: &[usize]) -> std::result::Result<(), Abort> {
        if !self.meter.tick() {
            return Err(Abort);
        }
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        for (i, &v) in candidates.iter().enumerate() {
            if self.chosen.len() + candidates.len() - i <= self.best.len() {
                break;
            }
            let next = self.extensions(v, &candidates[i + 1..]);
            self.chosen.push(v);
            self.improve(&next)?;
            self.chosen.pop();
        }
        Ok(())
    }

    fn first_of_size(&mut self, candidates: &[usize], target: usize) -> std::result::Result<bool, Abort> {
        if !self.meter.tick() {
            return Err(Abort);
        }
        if self.chosen.len() == target {
            return Ok(true);
        }
        for (i, &v) in candidates.iter().enumerate() {
            if self.chosen.len() + candidates.len() - i < target {
                break;
            }
            let next = self.extensions(v, &candidates[i + 1..]);
            self.chosen.push(v);
            if self.first_of_size(&next, target)? {
                return Ok(true);
            }
            self.chosen.pop();
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{cartesian_product, disjoint_union};
    use crate::family::{generate, FamilySpec};
    use crate::verify::check_definitional;

    fn gp(g: &Graph) -> usize {
        gp_exact(g, &SearchBudget::default()).unwrap().value
    }

    fn gen(spec: FamilySpec) -> Graph {
        generate(&spec).unwrap()
    }

    #[test]
    fn fixtures() {
        for n in 2..=10 {
            assert_eq!(gp(&gen(FamilySpec::Path(n))), 2, "P_{n}");
        }
        assert_eq!(gp(&gen(FamilySpec::Path(1))), 1);
        assert_eq!(gp(&gen(FamilySpec::Cycle(4))), 2);
        assert_eq!(gp(&gen(FamilySpec::Petersen)), 6);
        let p3 = gen(FamilySpec::Path(3));
        assert_eq!(gp(&cartesian_product(&p3, &p3)), 4);
        let k3_p5 = disjoint_union(&gen(FamilySpec::Complete(3)), &gen(FamilySpec::Path(5)));
        assert_eq!(gp(&k3_p5), 5);
        assert_eq!(gp(&Graph::edgeless(0)), 0);
        assert_eq!(gp(&Graph::edgeless(4)), 4);
    }

    #[test]
    fn both_modes_agree_and_witnesses_are_lex_smallest() {
        for seed in 0..120 {
            let n = 4 + (seed as usize % 7);
            let g = gen(FamilySpec::RandomGnp { n, p: 0.45, seed });
            let bb = gp_exact(&g, &SearchBudget::default()).unwrap();
            let bf = gp_exact(&g, &SearchBudget::brute_force()).unwrap();
            assert_eq!(bb.value, bf.value, "seed {seed}");
            assert_eq!(bb.witness, bf.witness, "seed {seed}");
            assert_eq!(check_definitional(&g, &bb.witness).unwrap(), Ok(()));
        }
    }

    #[test]
    fn budget_exhaustion_reports_lower_bound() {
        let g = gen(FamilySpec::Petersen);
        let tight = SearchBudget::new(3, 60_000, SearchMode::BranchAndBound).unwrap();
        match gp_exact(&g, &tight) {
            Err(Error::BudgetExhausted { lower_bound, witness, .. }) => {
                assert_eq!(lower_bound, witness.len());
                assert!(lower_bound <= 6);
                assert_eq!(check_definitional(&g, &witness).unwrap(), Ok(()));
            }
            other => panic!("expected budget error, got {other:?}"),
        }
        assert!(SearchBudget::new(0, 1, SearchMode::BruteForce).is_err());
    }
}
