//! Named graph families with fixed vertex numberings.
//!
//! Numberings:
//! - `Path(n)`: `0-1-...-(n-1)`; `Cycle(n)` closes it with `(n-1)-0`.
//! - `CompleteBipartite(r, s)`: side A is `0..r`, side B is `r..r+s`.
//! - `Star(k)`: center `0`, leaves `1..=k`.
//! - `Wheel(k)`: `k` vertices in total, hub `0`, rim cycle `1-2-...-(k-1)-1`.
//! - `Hypercube(k)`: binary words `0..2^k`, adjacent when they differ in one bit.
//! - `Grid(n, m)`: cell `(i, j)` is `i*m + j`, same as `Path(n) x Path(m)`.
//! - `Petersen`: outer cycle `0..5`, spokes `i - i+5`, inner pentagram `5+i - 5+(i+2)%5`.
//! - `KnMinus(n, H)`: `K_n` with the edges of `H` removed, `H` numbered as its own family on `0..|V(H)|`.
//! - `Gnk(n, k)`: `K_n` on `0..n` plus vertex `n` adjacent to `0..=k`.
//! - `Gn(n)`: `x_1..x_n = 0..n`, `a_1, a_2 = n, n+1`, `y_1..y_n = n+2..2n+2`,
//!   `b_1, b_2 = 2n+2, 2n+3`; `{x_i}` and `{y_i}` form `K_{n,n}`, plus `a_1y_1`, `a_2y_2`, `b_1x_1`, `b_2x_2`.
//! - `Hnmst(n, m, s, t)`: blocks `A1(n), A2(s), A3(t), B1(m), B2(t), B3(s)` numbered consecutively in
//!   that order; `A1 u A2` is complete to `B1 u B2`, `A2` to `B3`, `A3` to `B2`.
//! - `DoubleStar(a, b)`: centers `0` and `1`, leaves of `0` are `2..2+a`, leaves of `1` follow.
//!
//! Random families draw from ChaCha8 (`rand_chacha::ChaCha8Rng::seed_from_u64`).
//! `RandomTree` decodes a uniform Prüfer sequence; `RandomGnp` and
//! `RandomBipartite` flip one coin `gen::<f64>() < p` per candidate pair, pairs
//! visited in lexicographic order.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::graph::{Graph, GraphBuilder, Vertex};

/// Subgraph removed from `K_n` in the `KnMinus` family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RemovedGraph {
    Complete { k: usize },
    Star { k: usize },
    Path { k: usize },
    CompleteBipartite { r: usize, s: usize },
    Wheel { k: usize },
    Cycle { k: usize },
}

impl RemovedGraph {
    pub fn order(&self) -> usize {
        match *self {
            RemovedGraph::Complete { k } | RemovedGraph::Path { k } => k,
            RemovedGraph::Wheel { k } | RemovedGraph::Cycle { k } => k,
            RemovedGraph::Star { k } => k + 1,
            RemovedGraph::CompleteBipartite { r, s } => r + s,
        }
    }

    fn family(&self) -> FamilySpec {
        match *self {
            RemovedGraph::Complete { k } => FamilySpec::Complete(k),
            RemovedGraph::Star { k } => FamilySpec::Star(k),
            RemovedGraph::Path { k } => FamilySpec::Path(k),
            RemovedGraph::CompleteBipartite { r, s } => FamilySpec::CompleteBipartite(r, s),
            RemovedGraph::Wheel { k } => FamilySpec::Wheel(k),
            RemovedGraph::Cycle { k } => FamilySpec::Cycle(k),
        }
    }
}

impl fmt::Display for RemovedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RemovedGraph::Complete { k } => write!(f, "K{k}"),
            RemovedGraph::Star { k } => write!(f, "S{k}"),
            RemovedGraph::Path { k } => write!(f, "P{k}"),
            RemovedGraph::CompleteBipartite { r, s } => write!(f, "K{r}_{s}"),
            RemovedGraph::Wheel { k } => write!(f, "W{k}"),
            RemovedGraph::Cycle { k } => write!(f, "C{k}"),
        }
    }
}

impl FromStr for RemovedGraph {
    type Err = Error;

    /// `K5`, `S4` (= K_{1,4}), `P5`, `K2_3`, `W6`, `C5`.
    fn from_str(s: &str) -> Result<RemovedGraph> {
        let bad = || domain(format!("unknown removed subgraph {s:?}; expected K<k>, S<k>, P<k>, K<r>_<s>, W<k> or C<k>"));
        let (head, rest) = s.split_at(s.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?);
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        Ok(match head {
            "K" => match rest.split_once('_') {
                Some((r, t)) => RemovedGraph::CompleteBipartite { r: num(r)?, s: num(t)? },
                None => RemovedGraph::Complete { k: num(rest)? },
            },
            "S" => RemovedGraph::Star { k: num(rest)? },
            "P" => RemovedGraph::Path { k: num(rest)? },
            "W" => RemovedGraph::Wheel { k: num(rest)? },
            "C" => RemovedGraph::Cycle { k: num(rest)? },
            _ => return Err(bad()),
        })
    }
}

/// `K_n - E(H)`, restricted to the parameter ranges where a closed form is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KnMinusSpec {
    pub n: usize,
    pub removed: RemovedGraph,
}

impl KnMinusSpec {
    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        let check = |ok: bool, rule: &str| {
            if ok {
                Ok(())
            } else {
                Err(domain(format!("K_{n} - E({}): requires {rule}", self.removed)))
            }
        };
        match self.removed {
            RemovedGraph::Complete { k } => check(2 <= k && k < n, "2 <= k < n"),
            RemovedGraph::Star { k } => check(2 <= k && k < n, "2 <= k < n"),
            RemovedGraph::Path { k } => check(3 <= k && k < n, "3 <= k < n"),
            RemovedGraph::CompleteBipartite { r, s } => check(2 <= r && r <= s && r + s < n, "2 <= r <= s and r + s < n"),
            RemovedGraph::Wheel { k } => check(5 <= k && k < n, "5 <= k < n"),
            RemovedGraph::Cycle { k } => check(4 <= k && k < n, "4 <= k < n"),
        }
    }

    /// Every legal spec with `n <= n_max`, ordered by `n`, then removed family, then parameters.
    pub fn all_up_to(n_max: usize) -> Vec<KnMinusSpec> {
        let mut out = Vec::new();
        for n in 0..=n_max {
            let mut push = |removed| {
                let spec = KnMinusSpec { n, removed };
                if spec.validate().is_ok() {
                    out.push(spec);
                }
            };
            for k in 0..n {
                push(RemovedGraph::Complete { k });
            }
            for k in 0..n {
                push(RemovedGraph::Star { k });
            }
            for k in 0..n {
                push(RemovedGraph::Path { k });
            }
            for r in 0..n {
                for s in r..n {
                    push(RemovedGraph::CompleteBipartite { r, s });
                }
            }
            for k in 0..n {
                push(RemovedGraph::Wheel { k });
            }
            for k in 0..n {
                push(RemovedGraph::Cycle { k });
            }
        }
        out
    }
}

/// Generator selector. Serializes as its `Display` string (e.g. `grid:3x4`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    Wheel(usize),
    Hypercube(u32),
    Grid(usize, usize),
    Petersen,
    KnMinus(KnMinusSpec),
    Gnk(usize, usize),
    Gn(usize),
    Hnmst(usize, usize, usize, usize),
    DoubleStar(usize, usize),
    RandomTree { n: usize, seed: u64 },
    RandomGnp { n: usize, p: f64, seed: u64 },
    RandomBipartite { a: usize, b: usize, p: f64, seed: u64 },
}

const MAX_HYPERCUBE_DIM: u32 = 16;

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    let require = |ok: bool, rule: &str| if ok { Ok(()) } else { Err(domain(format!("{spec}: requires {rule}"))) };
    let check_p = |p: f64| require((0.0..=1.0).contains(&p), "0 <= p <= 1");
    let g = match *spec {
        FamilySpec::Path(n) => {
            require(n >= 1, "n >= 1")?;
            from_pairs(n, (1..n).map(|i| (i - 1, i)))
        }
        FamilySpec::Cycle(n) => {
            require(n >= 3, "n >= 3")?;
            from_pairs(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        FamilySpec::Complete(n) => {
            require(n >= 1, "n >= 1")?;
            from_pairs(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        FamilySpec::CompleteBipartite(r, s) => {
            require(r >= 1 && s >= 1, "r, s >= 1")?;
            from_pairs(r + s, (0..r).flat_map(|u| (r..r + s).map(move |v| (u, v))))
        }
        FamilySpec::Star(k) => {
            require(k >= 1, "k >= 1")?;
            from_pairs(k + 1, (1..=k).map(|v| (0, v)))
        }
        FamilySpec::Wheel(k) => {
            require(k >= 4, "k >= 4 (hub plus a rim cycle of length k - 1)")?;
            let rim = k - 1;
            let spokes = (1..k).map(|v| (0, v));
            let ring = (0..rim).map(|i| (1 + i, 1 + (i + 1) % rim));
            from_pairs(k, spokes.chain(ring))
        }
        FamilySpec::Hypercube(k) => {
            require((1..=MAX_HYPERCUBE_DIM).contains(&k), "1 <= k <= 16")?;
            let n = 1usize << k;
            from_pairs(n, (0..n).flat_map(|v| (0..k).map(move |b| (v, v ^ (1 << b))).filter(|&(v, w)| v < w)))
        }
        FamilySpec::Grid(n, m) => {
            require(n >= 1 && m >= 1, "n, m >= 1")?;
            let id = move |i: usize, j: usize| i * m + j;
            let across = (0..n).flat_map(move |i| (1..m).map(move |j| (id(i, j - 1), id(i, j))));
            let down = (1..n).flat_map(move |i| (0..m).map(move |j| (id(i - 1, j), id(i, j))));
            from_pairs(n * m, across.chain(down))
        }
        FamilySpec::Petersen => {
            let outer = (0..5).map(|i| (i, (i + 1) % 5));
            let spokes = (0..5).map(|i| (i, i + 5));
            let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
            from_pairs(10, outer.chain(spokes).chain(inner))
        }
        FamilySpec::KnMinus(kn) => {
            kn.validate()?;
            let h = generate(&kn.removed.family())?;
            let n = kn.n;
            from_pairs(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| v >= h.n() || !h.has_edge(u, v)))
        }
        FamilySpec::Gnk(n, k) => {
            require(n >= 3 && k + 1 < n, "n >= 3 and 1 <= k + 1 < n")?;
            let clique = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            from_pairs(n + 1, clique.chain((0..=k).map(|v| (v, n))))
        }
        FamilySpec::Gn(n) => {
            require(n >= 2, "n >= 2")?;
            let (x, a, y, b) = (0, n, n + 2, 2 * n + 2);
            let core = (0..n).flat_map(|i| (0..n).map(move |j| (x + i, y + j)));
            let extra = [(a, y), (a + 1, y + 1), (b, x), (b + 1, x + 1)];
            from_pairs(2 * n + 4, core.chain(extra))
        }
        FamilySpec::Hnmst(n, m, s, t) => {
            require(n >= 2 && m >= 2 && s >= 2 && t >= 2, "n, m, s, t >= 2")?;
            let blocks = HnmstBlocks::new(n, m, s, t);
            let mut b = GraphBuilder::new(blocks.order());
            let mut connect = |xs: std::ops::Range<usize>, ys: std::ops::Range<usize>| {
                for u in xs {
                    for v in ys.clone() {
                        b.add_edge(u, v);
                    }
                }
            };
            connect(blocks.a1.start..blocks.a2.end, blocks.b1.start..blocks.b2.end);
            connect(blocks.a2.clone(), blocks.b3.clone());
            connect(blocks.a3.clone(), blocks.b2.clone());
            b.build()
        }
        FamilySpec::DoubleStar(a, bb) => {
            require(a >= 1 && bb >= 1, "a, b >= 1")?;
            let left = (2..2 + a).map(|v| (0, v));
            let right = (2 + a..2 + a + bb).map(|v| (1, v));
            from_pairs(2 + a + bb, std::iter::once((0, 1)).chain(left).chain(right))
        }
        FamilySpec::RandomTree { n, seed } => {
            require(n >= 1, "n >= 1")?;
            random_tree(n, seed)
        }
        FamilySpec::RandomGnp { n, p, seed } => {
            check_p(p)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut b = GraphBuilder::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen::<f64>() < p {
                        b.add_edge(u, v);
                    }
                }
            }
            b.build()
        }
        FamilySpec::RandomBipartite { a, b: nb, p, seed } => {
            check_p(p)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut b = GraphBuilder::new(a + nb);
            for u in 0..a {
                for v in a..a + nb {
                    if rng.gen::<f64>() < p {
                        b.add_edge(u, v);
                    }
                }
            }
            b.build()
        }
    };
    Ok(g)
}

/// Vertex ranges of `H(n, m, s, t)` under the canonical numbering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HnmstBlocks {
    pub a1: std::ops::Range<usize>,
    pub a2: std::ops::Range<usize>,
    pub a3: std::ops::Range<usize>,
    pub b1: std::ops::Range<usize>,
    pub b2: std::ops::Range<usize>,
    pub b3: std::ops::Range<usize>,
}

impl HnmstBlocks {
    pub fn new(n: usize, m: usize, s: usize, t: usize) -> HnmstBlocks {
        let mut next = 0;
        let mut take = |len: usize| {
            let r = next..next + len;
            next += len;
            r
        };
        HnmstBlocks { a1: take(n), a2: take(s), a3: take(t), b1: take(m), b2: take(t), b3: take(s) }
    }

    pub fn order(&self) -> usize {
        self.b3.end
    }

    pub fn side_a(&self) -> std::ops::Range<usize> {
        self.a1.start..self.a3.end
    }
}

fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Graph {
    let mut b = GraphBuilder::new(n);
    for (u, v) in pairs {
        b.add_edge(u, v);
    }
    b.build()
}

fn random_tree(n: usize, seed: u64) -> Graph {
    if n <= 2 {
        return from_pairs(n, (1..n).map(|v| (0, v)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut b = GraphBuilder::new(n);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a Prüfer decode always has a leaf");
        b.add_edge(leaf, c);
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    b.add_edge(rest[0], rest[1]);
    b.build()
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::CompleteBipartite(r, s) => write!(f, "complete_bipartite:{r}x{s}"),
            FamilySpec::Star(k) => write!(f, "star:{k}"),
            FamilySpec::Wheel(k) => write!(f, "wheel:{k}"),
            FamilySpec::Hypercube(k) => write!(f, "hypercube:{k}"),
            FamilySpec::Grid(n, m) => write!(f, "grid:{n}x{m}"),
            FamilySpec::Petersen => f.write_str("petersen"),
            FamilySpec::KnMinus(KnMinusSpec { n, removed }) => write!(f, "kn_minus:n={n},h={removed}"),
            FamilySpec::Gnk(n, k) => write!(f, "gnk:n={n},k={k}"),
            FamilySpec::Gn(n) => write!(f, "gn:{n}"),
            FamilySpec::Hnmst(n, m, s, t) => write!(f, "hnmst:n={n},m={m},s={s},t={t}"),
            FamilySpec::DoubleStar(a, b) => write!(f, "double_star:{a}x{b}"),
            FamilySpec::RandomTree { n, seed } => write!(f, "random_tree:n={n},seed={seed}"),
            FamilySpec::RandomGnp { n, p, seed } => write!(f, "gnp:n={n},p={p},seed={seed}"),
            FamilySpec::RandomBipartite { a, b, p, seed } => write!(f, "random_bipartite:a={a},b={b},p={p},seed={seed}"),
        }
    }
}

impl Serialize for FamilySpec {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses `name[:args]`. Positional args are `N` or `NxM`; keyed args are
    /// `key=value` pairs separated by commas (see `Display` for every form).
    fn from_str(text: &str) -> Result<FamilySpec> {
        let (name, args) = text.split_once(':').unwrap_or((text, ""));
        let bad = |why: &str| domain(format!("generator {text:?}: {why}"));
        let keyed = || -> Result<Vec<(&str, &str)>> {
            args.split(',')
                .filter(|a| !a.is_empty())
                .map(|a| a.split_once('=').ok_or_else(|| bad("expected key=value arguments")))
                .collect()
        };
        let key = |k: &str| -> Result<&str> {
            keyed()?.into_iter().find(|(name, _)| *name == k).map(|(_, v)| v).ok_or_else(|| bad(&format!("missing {k}=")))
        };
        let int = |s: &str| s.parse::<usize>().map_err(|_| bad(&format!("bad integer {s:?}")));
        let uint = |k: &str| key(k).and_then(int);
        let seed = || key("seed").and_then(|s| s.parse::<u64>().map_err(|_| bad("bad seed")));
        let prob = || key("p").and_then(|s| s.parse::<f64>().map_err(|_| bad("bad probability")));
        let one = || int(args);
        let two = || -> Result<(usize, usize)> {
            let (a, b) = args.split_once('x').ok_or_else(|| bad("expected NxM"))?;
            Ok((int(a)?, int(b)?))
        };
        Ok(match name {
            "path" => FamilySpec::Path(one()?),
            "cycle" => FamilySpec::Cycle(one()?),
            "complete" => FamilySpec::Complete(one()?),
            "complete_bipartite" => {
                let (r, s) = two()?;
                FamilySpec::CompleteBipartite(r, s)
            }
            "star" => FamilySpec::Star(one()?),
            "wheel" => FamilySpec::Wheel(one()?),
            "hypercube" => FamilySpec::Hypercube(one()? as u32),
            "grid" => {
                let (n, m) = two()?;
                FamilySpec::Grid(n, m)
            }
            "petersen" => FamilySpec::Petersen,
            "kn_minus" => FamilySpec::KnMinus(KnMinusSpec { n: uint("n")?, removed: key("h")?.parse()? }),
            "gnk" => FamilySpec::Gnk(uint("n")?, uint("k")?),
            "gn" => FamilySpec::Gn(one()?),
            "hnmst" => FamilySpec::Hnmst(uint("n")?, uint("m")?, uint("s")?, uint("t")?),
            "double_star" => {
                let (a, b) = two()?;
                FamilySpec::DoubleStar(a, b)
            }
            "random_tree" => FamilySpec::RandomTree { n: uint("n")?, seed: seed()? },
            "gnp" => FamilySpec::RandomGnp { n: uint("n")?, p: prob()?, seed: seed()? },
            "random_bipartite" => FamilySpec::RandomBipartite { a: uint("a")?, b: uint("b")?, p: prob()?, seed: seed()? },
            _ => return Err(bad("unknown family")),
        })
    }
}
