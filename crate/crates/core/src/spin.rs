//! Dual graphs of nodal plane sextics and the combinatorics of stable spin
//! curves on them: evenness, Betti numbers, theta-characteristic counts and
//! subsets of nodes whose removal leaves an even graph.
//!
//! Genus convention: `p_a(C) = Σ g̃_i + δ − (#components − 1)` with
//! `g̃_i = (d_i−1)(d_i−2)/2 − n_i` the geometric genus of a component and `δ`
//! the total number of nodes (loops and cross edges).

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpinError {
    #[error("a component of degree {degree} has at most {max} nodes, got {nodes}")]
    TooManyNodes { degree: u32, nodes: u32, max: u32 },
    #[error("degree-0 component")]
    ZeroDegree,
    #[error("genus bookkeeping gives {got}, expected {expected}")]
    Genus { got: i64, expected: i64 },
    #[error("bad configuration {text:?}: {msg}")]
    Config { text: String, msg: String },
}

/// A plane curve component: its degree and number of internal nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Component {
    pub degree: u32,
    pub nodes: u32,
}

impl Component {
    pub fn arithmetic_genus(self) -> u32 {
        (self.degree - 1) * (self.degree.max(2) - 2) / 2
    }

    pub fn geometric_genus(self) -> i64 {
        self.arithmetic_genus() as i64 - self.nodes as i64
    }
}

/// An edge of the dual graph; `a == b` for a loop (an internal node).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
}

impl Edge {
    pub fn is_loop(self) -> bool {
        self.a == self.b
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualGraph {
    pub vertices: Vec<Component>,
    /// Cross edges in lexicographic order of endpoints, then loops by vertex.
    pub edges: Vec<Edge>,
}

impl DualGraph {
    /// Explicit cross multiplicities `(i, j, m)`; loops come from the node
    /// counts. No genus check.
    pub fn with_cross(vertices: Vec<Component>, cross: &[(usize, usize, u32)]) -> DualGraph {
        let mut edges = Vec::new();
        let mut cross = cross.to_vec();
        cross.sort();
        for (i, j, m) in cross {
            let (a, b) = (i.min(j), i.max(j));
            edges.extend(std::iter::repeat_n(Edge { a, b }, m as usize));
        }
        for (v, c) in vertices.iter().enumerate() {
            edges.extend(std::iter::repeat_n(Edge { a: v, b: v }, c.nodes as usize));
        }
        DualGraph { vertices, edges }
    }

    pub fn total_degree(&self) -> u32 {
        self.vertices.iter().map(|c| c.degree).sum()
    }

    /// Arithmetic genus of the whole curve, by the convention above.
    pub fn arithmetic_genus(&self) -> i64 {
        self.vertices.iter().map(|c| c.geometric_genus()).sum::<i64>() + self.edges.len() as i64
            - (self.vertices.len() as i64 - 1)
    }

    /// Degree of each vertex, loops counting twice.
    pub fn degrees(&self) -> Vec<usize> {
        degrees(self.vertices.len(), self.edges.iter().copied())
    }

    pub fn cross_edge_count(&self) -> usize {
        self.edges.iter().filter(|e| !e.is_loop()).count()
    }

    pub fn loop_count(&self) -> usize {
        self.edges.len() - self.cross_edge_count()
    }
}

fn degrees(n: usize, edges: impl Iterator<Item = Edge>) -> Vec<usize> {
    let mut deg = vec![0; n];
    for e in edges {
        deg[e.a] += 1;
        deg[e.b] += 1;
    }
    deg
}

/// Connected components as lists of vertices.
fn components(n: usize, edges: &[Edge]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut x = x;
        while p[x] != r {
            let next = p[x];
            p[x] = r;
            x = next;
        }
        r
    }
    for e in edges {
        let (ra, rb) = (find(&mut parent, e.a), find(&mut parent, e.b));
        parent[ra.max(rb)] = ra.min(rb);
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut index = vec![usize::MAX; n];
    for v in 0..n {
        let r = find(&mut parent, v);
        if index[r] == usize::MAX {
            index[r] = groups.len();
            groups.push(Vec::new());
        }
        groups[index[r]].push(v);
    }
    groups
}

/// Dual graph of a sextic whose components meet transversally in
/// `d_i·d_j` points.
pub fn build_dual_graph(config: &[Component], general_position: bool) -> Result<DualGraph, SpinError> {
    for &c in config {
        if c.degree == 0 {
            return Err(SpinError::ZeroDegree);
        }
        if c.geometric_genus() < 0 {
            return Err(SpinError::TooManyNodes {
                degree: c.degree,
                nodes: c.nodes,
                max: c.arithmetic_genus(),
            });
        }
    }
    let mut cross = Vec::new();
    if general_position {
        for i in 0..config.len() {
            for j in i + 1..config.len() {
                cross.push((i, j, config[i].degree * config[j].degree));
            }
        }
    }
    let g = DualGraph::with_cross(config.to_vec(), &cross);
    let d = g.total_degree() as i64;
    if general_position && d == 6 {
        let expected = (d - 1) * (d - 2) / 2;
        let got = g.arithmetic_genus();
        if got != expected {
            return Err(SpinError::Genus { got, expected });
        }
    }
    Ok(g)
}

/// `(is_even, b1)`: every vertex has even degree (loops count twice), and
/// the first Betti number `E − V + #components`.
pub fn graph_stats(g: &DualGraph) -> (bool, usize) {
    let even = g.degrees().iter().all(|d| d % 2 == 0);
    let comps = components(g.vertices.len(), &g.edges).len();
    (even, g.edges.len() + comps - g.vertices.len())
}

/// `(total, even, odd)` theta-characteristics on a smooth curve of genus
/// `g`: `2^{2g}`, `2^{g−1}(2^g + 1)`, `2^{g−1}(2^g − 1)`.
pub fn theta_counts(g: u32) -> (u128, u128, u128) {
    assert!(g <= 63, "genus too large for u128 counts");
    if g == 0 {
        return (1, 1, 0);
    }
    let half = 1u128 << (g - 1);
    let pg = 1u128 << g;
    (pg * pg, half * (pg + 1), half * (pg - 1))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinSubsetReport {
    /// Indices into `DualGraph::edges` of the removed nodes.
    pub removed: Vec<usize>,
    pub residual_even: bool,
    /// Arithmetic genus of the subcurve behind each connected component of
    /// the residual graph, after normalizing the removed loops.
    pub residual_genera: Vec<i64>,
    /// Ways of choosing odd theta-characteristics on an odd number of those
    /// subcurves.
    pub odd_choices: u128,
}

impl SpinSubsetReport {
    pub fn has_genus_one_component(&self) -> bool {
        self.residual_genera.contains(&1)
    }
}

fn report(g: &DualGraph, removed: Vec<usize>) -> SpinSubsetReport {
    let kept: Vec<Edge> = (0..g.edges.len())
        .filter(|i| removed.binary_search(i).is_err())
        .map(|i| g.edges[i])
        .collect();
    let n = g.vertices.len();
    let residual_even = degrees(n, kept.iter().copied()).iter().all(|d| d % 2 == 0);
    let residual_genera: Vec<i64> = components(n, &kept)
        .iter()
        .map(|vs| {
            let inner = kept.iter().filter(|e| vs.contains(&e.a)).count() as i64;
            vs.iter().map(|&v| g.vertices[v].geometric_genus()).sum::<i64>() + inner - vs.len() as i64 + 1
        })
        .collect();
    // Σ over odd-size choices = (Π(even+odd) − Π(even−odd)) / 2, and
    // even − odd = 2^g.
    let (all, signed) = residual_genera.iter().fold((1u128, 1u128), |(a, s), &gi| {
        let (t, _, _) = theta_counts(gi as u32);
        (a * t, s * (1u128 << gi))
    });
    SpinSubsetReport {
        removed,
        residual_even,
        residual_genera,
        odd_choices: (all - signed) / 2,
    }
}

/// Subsets of exactly `k` edges (loops included) leaving an even residual
/// graph, in lexicographic order; only the first when `enumerate_all` is
/// false.
pub fn spin_subsets(g: &DualGraph, k: usize, enumerate_all: bool) -> Vec<SpinSubsetReport> {
    let n = g.edges.len();
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mut deg = g.degrees();
        for &i in &idx {
            deg[g.edges[i].a] -= 1;
            deg[g.edges[i].b] -= 1;
        }
        if deg.iter().all(|d| d % 2 == 0) {
            out.push(report(g, idx.clone()));
            if !enumerate_all {
                return out;
            }
        }
        // Next combination.
        let Some(pos) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[pos] += 1;
        for j in pos + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// A sextic configuration: components with their internal node counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub components: Vec<Component>,
}

const NAMES: [(&str, &str, u32); 6] = [
    ("line", "lines", 1),
    ("conic", "conics", 2),
    ("cubic", "cubics", 3),
    ("quartic", "quartics", 4),
    ("quintic", "quintics", 5),
    ("sextic", "sextics", 6),
];

impl FromStr for Config {
    type Err = SpinError;

    /// Comma-separated `NAME[=COUNT][:nodes=N]`, e.g. `line,quintic:nodes=5`.
    fn from_str(text: &str) -> Result<Config, SpinError> {
        let err = |msg: &str| SpinError::Config {
            text: text.to_string(),
            msg: msg.to_string(),
        };
        let mut components = Vec::new();
        for item in text.split(',').map(str::trim) {
            let (head, nodes) = match item.split_once(':') {
                Some((h, rest)) => {
                    let n = rest
                        .trim()
                        .strip_prefix("nodes=")
                        .ok_or_else(|| err("expected `:nodes=N`"))?;
                    (h, n.trim().parse::<u32>().map_err(|_| err("node count is not a number"))?)
                }
                None => (item, 0),
            };
            let (name, count) = head.split_once('=').unwrap_or((head, "1"));
            let degree = NAMES
                .iter()
                .find(|(s, p, _)| *s == name.trim() || *p == name.trim())
                .map(|t| t.2)
                .ok_or_else(|| err(&format!("unknown component {:?}", name.trim())))?;
            let count: u32 = count.trim().parse().map_err(|_| err("count is not a number"))?;
            components.extend(std::iter::repeat_n(Component { degree, nodes }, count as usize));
        }
        if components.is_empty() {
            return Err(err("no components"));
        }
        components.sort_by(|a, b| a.degree.cmp(&b.degree).then(a.nodes.cmp(&b.nodes)));
        Ok(Config { components })
    }
}

impl fmt::Display for Config {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.components.len() {
            let c = self.components[i];
            let run = self.components[i..].iter().take_while(|&&d| d == c).count();
            let (s, p, _) = NAMES[c.degree as usize - 1];
            let name = if run == 1 { s } else { p };
            if c.nodes > 0 {
                parts.push(format!("{name}={run}:nodes={}", c.nodes));
            } else {
                parts.push(format!("{name}={run}"));
            }
            i += run;
        }
        write!(f, "{}", parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConfigPredicates {
    /// Irreducible with 10 nodes, or reducible with no smooth cubic, no
    /// quartic with at most 2 nodes and no quintic with at most 5 nodes.
    pub satisfies_prop41i: bool,
    /// One of the eight configurations carrying ten couples of planes.
    pub in_remark41_list: bool,
    /// Some 10 nodes can be removed leaving an even dual graph.
    pub admits_ten_node_witness: bool,
    /// Every component has geometric genus 0.
    pub all_components_rational: bool,
}

fn multiset(cfg: &Config) -> Vec<(u32, u32)> {
    let mut v: Vec<(u32, u32)> = cfg.components.iter().map(|c| (c.degree, c.nodes)).collect();
    v.sort();
    v
}

fn in_list(cfg: &Config) -> bool {
    let m = multiset(cfg);
    let is = |want: &[(u32, u32)]| {
        let mut w = want.to_vec();
        w.sort();
        w == m
    };
    is(&[(1, 0); 6])
        || is(&[(2, 0); 3])
        || is(&[(2, 0), (2, 0), (1, 0), (1, 0)])
        || is(&[(2, 0), (1, 0), (1, 0), (1, 0), (1, 0)])
        || is(&[(1, 0), (1, 0), (1, 0), (3, 1)])
        || is(&[(1, 0), (5, 5)])
        || is(&[(1, 0), (5, 6)])
        || is(&[(3, 0), (3, 1)])
        || is(&[(4, 1), (1, 0), (1, 0)])
        || is(&[(4, 2), (1, 0), (1, 0)])
}

pub fn config_predicates(cfg: &Config) -> Result<ConfigPredicates, SpinError> {
    let g = build_dual_graph(&cfg.components, true)?;
    let irreducible = cfg.components.len() == 1;
    let forbidden = cfg.components.iter().any(|c| {
        (c.degree == 3 && c.nodes == 0) || (c.degree == 4 && c.nodes <= 2) || (c.degree == 5 && c.nodes <= 5)
    });
    let satisfies_prop41i = if irreducible {
        cfg.components[0] == Component { degree: 6, nodes: 10 }
    } else {
        !forbidden
    };
    Ok(ConfigPredicates {
        satisfies_prop41i,
        in_remark41_list: in_list(cfg),
        admits_ten_node_witness: !spin_subsets(&g, 10, false).is_empty(),
        all_components_rational: cfg.components.iter().all(|c| c.geometric_genus() == 0),
    })
}
