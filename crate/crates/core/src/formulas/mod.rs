//! Closed forms and polynomial-time evaluations of `gp`, plus a dispatcher
//! that picks the first one applying to a graph and otherwise falls back to
//! exact search.

mod bipartite;
mod closed;
mod dense;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cograph::build_cotree;
use crate::construct::induced_subgraph;
use crate::error::{domain, Error, Result};
use crate::exact::{gp_exact, SearchBudget};
use crate::graph::{Distance, Graph, VertexSet};
use crate::verify::check_definitional;

pub use bipartite::{
    alpha_bipartite, bipartite_complement_terms, gp_bipartite, gp_bipartite_complement, gp_complement_tree, gp_tree,
    BipartiteGp, ComplementTerms, MaxDegreeSet, Term,
};
pub use closed::{gp_closed_family, ClosedFamily};
pub use dense::{gp_cograph, gp_diameter2, gp_kn_minus, gp_universal_vertex, kn_minus_value};

/// Which result produced a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    Exact,
    Diameter2,
    Cograph,
    UniversalVertex,
    KnMinusFormula,
    BipartiteEquality,
    BipartiteComplement,
    TreeLeaves,
    ComplementTree,
    ComplementGrid,
    ComplementHypercube,
    ComponentsSum,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A value of `gp`, how it was obtained and, when available, a gp-set.
///
/// `verified` is set only when the witness passed the definitional check and
/// its size equals `value`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GpResult {
    pub value: usize,
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<VertexSet>,
    pub verified: bool,
}

impl GpResult {
    /// Value without a certificate.
    pub fn bare(value: usize, method: Method) -> GpResult {
        GpResult { value, method, witness: None, verified: false }
    }

    /// Checks `witness` on `g` before wrapping it. A witness that fails is a
    /// bug in the producing formula and is reported as a contract error.
    pub fn certified(g: &Graph, witness: VertexSet, method: Method) -> Result<GpResult> {
        if let Err(violation) = check_definitional(g, &witness)? {
            return Err(Error::Contract(format!("{method} produced {witness}, which is not in general position: {violation:?}")));
        }
        Ok(GpResult { value: witness.len(), method, witness: Some(witness), verified: true })
    }
}

/// How [`solve_with`] may obtain the value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// First applicable formula, else exact search.
    #[default]
    Auto,
    Exact,
    /// First applicable formula; a domain error when none applies.
    Formula,
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Strategy> {
        match s {
            "auto" => Ok(Strategy::Auto),
            "exact" => Ok(Strategy::Exact),
            "formula" => Ok(Strategy::Formula),
            _ => Err(domain(format!("unknown method {s:?}; expected auto, exact or formula"))),
        }
    }
}

pub fn solve(g: &Graph, budget: &SearchBudget) -> Result<GpResult> {
    solve_with(g, budget, Strategy::Auto)
}

/// Cascade, first match wins: disconnected (sum over components), complete,
/// tree, cograph, universal vertex, diameter 2, bipartite of diameter 3, and
/// finally exact search.
pub fn solve_with(g: &Graph, budget: &SearchBudget, strategy: Strategy) -> Result<GpResult> {
    match strategy {
        Strategy::Exact => {
            let exact = gp_exact(g, budget)?;
            GpResult::certified(g, exact.witness, Method::Exact)
        }
        Strategy::Auto => cascade(g, budget, true),
        Strategy::Formula => cascade(g, budget, false),
    }
}

fn cascade(g: &Graph, budget: &SearchBudget, allow_exact: bool) -> Result<GpResult> {
    if g.n() == 0 {
        return GpResult::certified(g, VertexSet::new(), Method::ComponentsSum);
    }
    if !g.is_connected() {
        let mut value = 0;
        let mut witness = Some(VertexSet::new());
        for component in g.components() {
            let (sub, mapping) = induced_subgraph(g, &component)?;
            let part = cascade(&sub, budget, allow_exact)?;
            value += part.value;
            witness = witness.zip(part.witness).map(|(w, p)| w.union(&p.lift(&mapping)));
        }
        return match witness {
            Some(w) => GpResult::certified(g, w, Method::ComponentsSum),
            None => Ok(GpResult::bare(value, Method::ComponentsSum)),
        };
    }
    if g.is_complete() {
        return GpResult::certified(g, VertexSet::full(g.n()), Method::Cograph);
    }
    if g.is_tree() {
        return gp_tree(g);
    }
    if let Ok(tree) = build_cotree(g) {
        return dense::cograph_result(g, &tree);
    }
    if !g.universal_vertices().is_empty() {
        return gp_universal_vertex(g);
    }
    let diameter = g.diameter();
    if diameter == Distance::Finite(2) {
        return gp_diameter2(g);
    }
    if diameter == Distance::Finite(3) {
        if let Some(labeling) = g.bipartition() {
            if let BipartiteGp::Equal(result) = gp_bipartite(g, &labeling)? {
                return Ok(result);
            }
        }
    }
    if !allow_exact {
        return Err(domain("no closed form applies to this graph; use exact search"));
    }
    let exact = gp_exact(g, budget)?;
    GpResult::certified(g, exact.witness, Method::Exact)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::disjoint_union;
    use crate::family::{generate, FamilySpec};

    fn gen(spec: FamilySpec) -> Graph {
        generate(&spec).unwrap()
    }

    fn auto(g: &Graph) -> GpResult {
        solve(g, &SearchBudget::default()).unwrap()
    }

    #[test]
    fn dispatcher_fixtures() {
        let p = auto(&gen(FamilySpec::Petersen));
        assert_eq!((p.value, p.method), (6, Method::Diameter2));
        assert!(p.verified);

        let k3_p5 = disjoint_union(&gen(FamilySpec::Complete(3)), &gen(FamilySpec::Path(5)));
        let r = auto(&k3_p5);
        assert_eq!((r.value, r.method), (5, Method::ComponentsSum));
        assert_eq!(r.witness.unwrap().into_vec(), vec![0, 1, 2, 3, 7]);

        let q3 = auto(&gen(FamilySpec::Hypercube(3)));
        assert_eq!((q3.value, q3.method), (4, Method::BipartiteEquality));

        assert_eq!(auto(&gen(FamilySpec::Path(6))).method, Method::TreeLeaves);
        assert_eq!(auto(&gen(FamilySpec::Complete(5))).method, Method::Cograph);
        assert_eq!(auto(&gen(FamilySpec::Cycle(4))).value, 2);
        assert_eq!(auto(&gen(FamilySpec::Cycle(7))).method, Method::Exact);
        assert_eq!(auto(&Graph::edgeless(0)).value, 0);
    }

    #[test]
    fn formula_strategy_refuses_instead_of_searching() {
        let c7 = gen(FamilySpec::Cycle(7));
        assert!(matches!(solve_with(&c7, &SearchBudget::default(), Strategy::Formula), Err(Error::Domain(_))));
        let exact = solve_with(&c7, &SearchBudget::default(), Strategy::Exact).unwrap();
        assert_eq!((exact.value, exact.method), (3, Method::Exact));
    }

    #[test]
    fn cascade_matches_exact_on_random_graphs() {
        for seed in 0..80 {
            let g = gen(FamilySpec::RandomGnp { n: 3 + seed as usize % 8, p: 0.5, seed });
            let r = auto(&g);
            let exact = gp_exact(&g, &SearchBudget::default()).unwrap();
            assert_eq!(r.value, exact.value, "seed {seed}, method {}", r.method);
            assert!(r.verified);
        }
    }

    #[test]
    fn json_shape() {
        let r = auto(&gen(FamilySpec::Path(3)));
        assert_eq!(serde_json::to_string(&r).unwrap(), r#"{"value":2,"method":"TreeLeaves","witness":[0,2],"verified":true}"#);
        let bare = GpResult::bare(4, Method::KnMinusFormula);
        assert_eq!(serde_json::to_string(&bare).unwrap(), r#"{"value":4,"method":"KnMinusFormula","verified":false}"#);
        assert_eq!("formula".parse::<Strategy>().unwrap(), Strategy::Formula);
        assert!("fast".parse::<Strategy>().is_err());
    }
}
