use std::collections::VecDeque;

use serde::Serialize;

use super::{GpResult, Method};
use crate::construct::{complement, delete_vertices};
use crate::error::{domain, Error, Result};
use crate::exact::psi_exact;
use crate::graph::{Distance, Graph, Vertex, VertexSet};
use crate::metric::BipartiteLabeling;
use crate::verify::check_characterized;

const UNSEEN: u32 = u32::MAX;

/// Independence number of a bipartite graph from a maximum matching
/// (Hopcroft-Karp), with the complement of a König vertex cover as witness.
pub fn alpha_bipartite(g: &Graph, labeling: &BipartiteLabeling) -> Result<(usize, VertexSet)> {
    labeling.validate(g)?;
    let side_a = labeling.side_a.as_slice();
    let mate = max_matching(g, side_a);

    // Alternating reachability from the free vertices of A.
    let mut reached = vec![false; g.n()];
    let mut queue: VecDeque<Vertex> = side_a.iter().copied().filter(|&u| mate[u].is_none()).collect();
    queue.iter().for_each(|&u| reached[u] = true);
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if reached[v] || mate[u] == Some(v) {
                continue;
            }
            reached[v] = true;
            if let Some(w) = mate[v] {
                if !reached[w] {
                    reached[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    // Cover = (A \ Z) u (B n Z); its complement is independent.
    let independent: VertexSet = g.vertices().filter(|&v| labeling.side_a.contains(v) == reached[v]).collect();
    let matched = mate.iter().filter(|m| m.is_some()).count() / 2;
    debug_assert_eq!(independent.len(), g.n() - matched);
    Ok((independent.len(), independent))
}

fn max_matching(g: &Graph, side_a: &[Vertex]) -> Vec<Option<Vertex>> {
    let mut mate = vec![None; g.n()];
    let mut layer = vec![UNSEEN; g.n()];
    loop {
        let mut queue = VecDeque::new();
        for &u in side_a {
            layer[u] = if mate[u].is_none() { 0 } else { UNSEEN };
            if mate[u].is_none() {
                queue.push_back(u);
            }
        }
        let mut free_reached = false;
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                match mate[v] {
                    None => free_reached = true,
                    Some(w) if layer[w] == UNSEEN => {
                        layer[w] = layer[u] + 1;
                        queue.push_back(w);
                    }
                    Some(_) => {}
                }
            }
        }
        if !free_reached {
            return mate;
        }
        for &u in side_a {
            if mate[u].is_none() {
                augment(g, u, &mut mate, &mut layer);
            }
        }
    }
}

fn augment(g: &Graph, u: Vertex, mate: &mut [Option<Vertex>], layer: &mut [u32]) -> bool {
    for &v in g.neighbors(u) {
        let extends = match mate[v] {
            None => true,
            Some(w) => layer[w] == layer[u].wrapping_add(1) && augment(g, w, mate, layer),
        };
        if extends {
            mate[u] = Some(v);
            mate[v] = Some(u);
            return true;
        }
    }
    layer[u] = UNSEEN;
    false
}

/// Outcome of the bipartite bound `gp <= alpha`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BipartiteGp {
    /// Diameter 2 or 3: the bound is attained.
    Equal(GpResult),
    /// Diameter 4 or more: `alpha` only bounds `gp` from above.
    UpperBound { alpha: usize, diameter: u32 },
}

pub fn gp_bipartite(g: &Graph, labeling: &BipartiteLabeling) -> Result<BipartiteGp> {
    if g.n() < 3 || !g.is_connected() {
        return Err(domain("the bipartite bound needs a connected graph on at least 3 vertices"));
    }
    let (alpha, witness) = alpha_bipartite(g, labeling)?;
    let diameter = g.diameter().finite().expect("connected");
    if diameter <= 3 {
        Ok(BipartiteGp::Equal(GpResult::certified(g, witness, Method::BipartiteEquality)?))
    } else {
        Ok(BipartiteGp::UpperBound { alpha, diameter })
    }
}

/// Vertices of full degree towards the other side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaxDegreeSet {
    pub m_in_a: VertexSet,
    pub m_in_b: VertexSet,
}

impl MaxDegreeSet {
    pub fn new(g: &Graph, labeling: &BipartiteLabeling) -> Result<MaxDegreeSet> {
        labeling.validate(g)?;
        let (a, b) = (&labeling.side_a, &labeling.side_b);
        Ok(MaxDegreeSet {
            m_in_a: a.iter().filter(|&u| g.degree(u) == b.len()).collect(),
            m_in_b: b.iter().filter(|&u| g.degree(u) == a.len()).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.m_in_a.len() + self.m_in_b.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn all(&self) -> VertexSet {
        self.m_in_a.union(&self.m_in_b)
    }
}

/// One term of the maximum, with a set attaining it in the complement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Term {
    pub value: usize,
    pub witness: VertexSet,
}

impl Term {
    fn new((value, witness): (usize, VertexSet)) -> Term {
        Term { value, witness }
    }
}

/// The terms whose maximum is `gp` of the complement of a bipartite graph,
/// split by the diameter of the complement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum ComplementTerms {
    /// The complement is complete, disconnected, or has at most one vertex:
    /// the whole vertex set is in general position.
    Whole { diameter: Distance, n: usize },
    Diameter2 { alpha: Term, psi: Term },
    Diameter3 { alpha: Term, psi_without_a: Term, psi_without_b: Term, max_degree: MaxDegreeSet },
}

impl ComplementTerms {
    /// Largest term, ties going to the earliest listed.
    pub fn best(&self) -> (usize, VertexSet) {
        let pick = |terms: &[&Term]| {
            let top = terms.iter().map(|t| t.value).max().expect("nonempty");
            let t = terms.iter().find(|t| t.value == top).expect("attained");
            (t.value, t.witness.clone())
        };
        match self {
            ComplementTerms::Whole { n, .. } => (*n, VertexSet::full(*n)),
            ComplementTerms::Diameter2 { alpha, psi } => pick(&[alpha, psi]),
            ComplementTerms::Diameter3 { alpha, psi_without_a, psi_without_b, max_degree } => {
                let m = Term { value: max_degree.len(), witness: max_degree.all() };
                pick(&[alpha, psi_without_a, psi_without_b, &m])
            }
        }
    }
}

pub fn bipartite_complement_terms(g: &Graph, labeling: &BipartiteLabeling) -> Result<ComplementTerms> {
    labeling.validate(g)?;
    let diameter = complement(g).diameter();
    match diameter {
        Distance::Infinite | Distance::Finite(0) | Distance::Finite(1) => {
            Ok(ComplementTerms::Whole { diameter, n: g.n() })
        }
        Distance::Finite(2) => Ok(ComplementTerms::Diameter2 {
            alpha: Term::new(alpha_bipartite(g, labeling)?),
            psi: Term::new(psi_exact(g, labeling)?),
        }),
        Distance::Finite(3) => {
            let max_degree = MaxDegreeSet::new(g, labeling)?;
            let psi_without = |removed: &VertexSet| -> Result<Term> {
                let (sub, mapping) = delete_vertices(g, removed)?;
                let (value, witness) = psi_exact(&sub, &labeling.restrict(&mapping))?;
                Ok(Term { value, witness: witness.lift(&mapping) })
            };
            Ok(ComplementTerms::Diameter3 {
                alpha: Term::new(alpha_bipartite(g, labeling)?),
                psi_without_a: psi_without(&max_degree.m_in_a)?,
                psi_without_b: psi_without(&max_degree.m_in_b)?,
                max_degree,
            })
        }
        Distance::Finite(d) => Err(Error::Contract(format!("complement of a bipartite graph has diameter {d} > 3"))),
    }
}

/// `gp` of the complement of the bipartite graph `g`. The witness is checked
/// on the complement by both the structural and the definitional test.
pub fn gp_bipartite_complement(g: &Graph, labeling: &BipartiteLabeling) -> Result<GpResult> {
    let (_, witness) = bipartite_complement_terms(g, labeling)?.best();
    let gbar = complement(g);
    if let Err(violation) = check_characterized(&gbar, &witness)? {
        return Err(Error::Contract(format!("complement witness {witness} fails the structural check: {violation:?}")));
    }
    GpResult::certified(&gbar, witness, Method::BipartiteComplement)
}

fn require_tree(t: &Graph) -> Result<()> {
    if t.n() < 2 || !t.is_tree() {
        return Err(domain("expected a tree on at least 2 vertices"));
    }
    Ok(())
}

/// The leaves of a tree form its unique gp-set.
pub fn gp_tree(t: &Graph) -> Result<GpResult> {
    require_tree(t)?;
    let leaves = t.vertices().filter(|&v| t.degree(v) == 1).collect();
    GpResult::certified(t, leaves, Method::TreeLeaves)
}

/// `gp` of the complement of a tree: `n` for stars, `n - 2` for double stars,
/// `max(alpha, Delta + 1)` once the diameter is at least 4.
///
/// The last expression is not valid for every double star: on `P_4` it gives 3
/// while the answer is 2.
pub fn gp_complement_tree(t: &Graph) -> Result<GpResult> {
    require_tree(t)?;
    let n = t.n();
    let diameter = t.diameter().finite().expect("trees are connected");
    let labeling = t.bipartition().expect("trees are bipartite");
    let witness = match diameter {
        ..=2 => VertexSet::full(n),
        3 => alpha_bipartite(t, &labeling)?.1,
        _ => {
            let (alpha, independent) = alpha_bipartite(t, &labeling)?;
            let hub = t.vertices().find(|&v| t.degree(v) == t.max_degree()).expect("n >= 2");
            if alpha > t.max_degree() {
                independent
            } else {
                t.neighbors(hub).iter().copied().chain([hub]).collect()
            }
        }
    };
    GpResult::certified(&complement(t), witness, Method::ComplementTree)
}
