//! Planarity through DFS orientation and left-right coloring of back edges.
//!
//! Each fork (a vertex with two outgoing edges) forces some back edges into a
//! common class and others into opposite classes. The graph is planar iff the
//! resulting parity constraints are satisfiable, which is checked with a
//! parity union-find. An unsatisfiable fork is the non-planarity certificate.

use crate::error::{Error, Result};
use crate::hypergraph::SupportGraph;
use std::collections::{BTreeMap, BTreeSet, HashMap};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DfsOrientation {
    pub root: usize,
    /// Parent to child, in discovery order.
    pub tree_edges: Vec<(usize, usize)>,
    /// Descendant to strict ancestor, in traversal order.
    pub cotree_edges: Vec<(usize, usize)>,
    /// Lowest vertex reachable through the edge and at most one back edge.
    pub low: HashMap<(usize, usize), usize>,
    pub height: Vec<Option<usize>>,
    pub parent: Vec<Option<usize>>,
    /// Vertices outside the root's component.
    pub unreached: Vec<usize>,
}

impl DfsOrientation {
    /// Child of the root whose subtree holds `x`.
    pub fn root_child_of(&self, x: usize) -> Option<usize> {
        let mut cur = x;
        loop {
            let p = self.parent[cur]?;
            if p == self.root {
                return Some(cur);
            }
            cur = p;
        }
    }
}

struct Forest {
    height: Vec<Option<usize>>,
    parent: Vec<Option<usize>>,
    /// Outgoing edges per vertex, tree and back, in traversal order.
    out: Vec<Vec<usize>>,
    tree: Vec<(usize, usize)>,
    back: Vec<(usize, usize)>,
    roots: Vec<usize>,
}

impl Forest {
    fn is_tree(&self, v: usize, w: usize) -> bool {
        self.parent[w] == Some(v) && self.height[w] == self.height[v].map(|h| h + 1)
    }
}

fn orient(adj: &[Vec<usize>], roots: impl IntoIterator<Item = usize>) -> Forest {
    let n = adj.len();
    let mut f = Forest {
        height: vec![None; n],
        parent: vec![None; n],
        out: vec![Vec::new(); n],
        tree: Vec::new(),
        back: Vec::new(),
        roots: Vec::new(),
    };
    let mut used: BTreeSet<(usize, usize)> = BTreeSet::new();
    for r in roots {
        if f.height[r].is_some() {
            continue;
        }
        f.roots.push(r);
        f.height[r] = Some(0);
        let mut stack: Vec<(usize, usize)> = vec![(r, 0)];
        while let Some(top) = stack.last_mut() {
            let (v, k) = *top;
            if k == adj[v].len() {
                stack.pop();
                continue;
            }
            top.1 += 1;
            let w = adj[v][k];
            let key = (v.min(w), v.max(w));
            if !used.insert(key) {
                continue;
            }
            f.out[v].push(w);
            if f.height[w].is_none() {
                f.height[w] = Some(f.height[v].unwrap() + 1);
                f.parent[w] = Some(v);
                f.tree.push((v, w));
                stack.push((w, 0));
            } else {
                f.back.push((v, w));
            }
        }
    }
    f
}

/// Back edges leaving the subtree of each vertex, and the lowest height each
/// outgoing edge reaches.
fn returns_and_low(f: &Forest) -> (Vec<Vec<(usize, usize)>>, HashMap<(usize, usize), usize>) {
    let n = f.height.len();
    let mut order: Vec<usize> = (0..n).filter(|&v| f.height[v].is_some()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(f.height[v].unwrap()));
    let mut rets: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    let mut lowh: HashMap<(usize, usize), usize> = HashMap::new();
    for &v in &order {
        let mut mine = Vec::new();
        for &w in &f.out[v] {
            if f.is_tree(v, w) {
                let l = rets[w].iter().map(|&(_, u)| f.height[u].unwrap()).min().unwrap_or(usize::MAX);
                lowh.insert((v, w), l.min(f.height[v].unwrap()));
                mine.extend(rets[w].iter().copied());
            } else {
                lowh.insert((v, w), f.height[w].unwrap());
                mine.push((v, w));
            }
        }
        rets[v] = mine;
    }
    (rets, lowh)
}

/// DFS from `root` with neighbors in ascending order.
pub fn dfs_orient(graph: &SupportGraph, root: usize) -> DfsOrientation {
    assert!(root < graph.n);
    let adj = graph.adjacency();
    let f = orient(&adj, [root]);
    let (_, lowh) = returns_and_low(&f);
    // map heights back to vertices along each edge's ancestor chain
    let mut low = HashMap::new();
    for (&(v, w), &h) in &lowh {
        let mut a = v;
        while f.height[a].unwrap() > h {
            a = f.parent[a].unwrap();
        }
        low.insert((v, w), a);
    }
    DfsOrientation {
        root,
        tree_edges: f.tree.clone(),
        cotree_edges: f.back.clone(),
        low,
        height: f.height.clone(),
        parent: f.parent.clone(),
        unreached: (0..graph.n).filter(|&v| f.height[v].is_none()).collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LrSide {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LrColoring {
    /// Back edge (descendant, ancestor) to its class.
    pub color: BTreeMap<(usize, usize), LrSide>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Planarity {
    Planar(LrColoring),
    /// The fork at `fork` whose constraints cannot be met; `vertices` lists the
    /// fork vertex, its two branch heads and the back edges involved.
    NonPlanar { fork: usize, branches: ((usize, usize), (usize, usize)), vertices: Vec<usize> },
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar(_))
    }
}

/// Pairwise parity requirement between two back edges: `same` or opposite classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Constraint {
    a: (usize, usize),
    b: (usize, usize),
    same: bool,
    fork: usize,
    branches: ((usize, usize), (usize, usize)),
}

fn fork_constraints(f: &Forest) -> Vec<Constraint> {
    let (rets, lowh) = returns_and_low(f);
    let n = f.height.len();
    let mut out = Vec::new();
    for v in 0..n {
        let Some(hv) = f.height[v] else { continue };
        let outs = &f.out[v];
        let ret_of = |w: usize| -> Vec<(usize, usize)> {
            if f.is_tree(v, w) {
                rets[w].iter().copied().filter(|&(_, u)| f.height[u].unwrap() < hv).collect()
            } else {
                vec![(v, w)]
            }
        };
        let all: Vec<Vec<(usize, usize)>> = outs.iter().map(|&w| ret_of(w)).collect();
        for i in 0..outs.len() {
            for j in i + 1..outs.len() {
                let (ei, ej) = ((v, outs[i]), (v, outs[j]));
                let (li, lj) = (lowh[&ei], lowh[&ej]);
                let a: Vec<_> = all[i].iter().copied().filter(|&(_, u)| f.height[u].unwrap() > lj).collect();
                let b: Vec<_> = all[j].iter().copied().filter(|&(_, u)| f.height[u].unwrap() > li).collect();
                for k in 1..a.len() {
                    out.push(Constraint { a: a[0], b: a[k], same: true, fork: v, branches: (ei, ej) });
                }
                for k in 1..b.len() {
                    out.push(Constraint { a: b[0], b: b[k], same: true, fork: v, branches: (ei, ej) });
                }
                if let (Some(&x), Some(&y)) = (a.first(), b.first()) {
                    out.push(Constraint { a: x, b: y, same: false, fork: v, branches: (ei, ej) });
                }
            }
        }
    }
    out
}

struct ParityUf {
    parent: HashMap<(usize, usize), (usize, usize)>,
    parity: HashMap<(usize, usize), bool>,
}

impl ParityUf {
    fn find(&mut self, x: (usize, usize)) -> ((usize, usize), bool) {
        let p = *self.parent.entry(x).or_insert(x);
        if p == x {
            return (x, false);
        }
        let (r, pp) = self.find(p);
        let px = self.parity.get(&x).copied().unwrap_or(false) ^ pp;
        self.parent.insert(x, r);
        self.parity.insert(x, px);
        (r, px)
    }

    /// Records `class(a) xor class(b) == diff`; false on contradiction.
    fn union(&mut self, a: (usize, usize), b: (usize, usize), diff: bool) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return (pa ^ pb) == diff;
        }
        self.parent.insert(ra, rb);
        self.parity.insert(ra, pa ^ pb ^ diff);
        true
    }
}

fn forest_of(graph: &SupportGraph) -> Forest {
    orient(&graph.adjacency(), 0..graph.n)
}

/// Left-right planarity test over the DFS forest rooted at the smallest vertex of each component.
pub fn lr_planarity(graph: &SupportGraph) -> Planarity {
    lr_on(&forest_of(graph))
}

/// As [`lr_planarity`], with the first DFS tree rooted at `root`; the coloring
/// then matches the back edges of `dfs_orient(graph, root)`.
pub fn lr_planarity_rooted(graph: &SupportGraph, root: usize) -> Planarity {
    assert!(root < graph.n);
    lr_on(&orient(&graph.adjacency(), std::iter::once(root).chain(0..graph.n)))
}

fn lr_on(f: &Forest) -> Planarity {
    let mut uf = ParityUf { parent: HashMap::new(), parity: HashMap::new() };
    for c in fork_constraints(f) {
        if !uf.union(c.a, c.b, !c.same) {
            let mut vs: BTreeSet<usize> = [c.fork, c.branches.0 .1, c.branches.1 .1].into_iter().collect();
            vs.extend([c.a.0, c.a.1, c.b.0, c.b.1]);
            return Planarity::NonPlanar { fork: c.fork, branches: c.branches, vertices: vs.into_iter().collect() };
        }
    }
    let mut coloring = LrColoring::default();
    for &e in &f.back {
        let (_, p) = uf.find(e);
        coloring.color.insert(e, if p { LrSide::Right } else { LrSide::Left });
    }
    Planarity::Planar(coloring)
}

pub fn is_planar(graph: &SupportGraph) -> bool {
    lr_planarity(graph).is_planar()
}

/// Whether `coloring` satisfies every fork constraint of the DFS forest used by `lr_planarity`.
pub fn is_valid_lr_coloring(graph: &SupportGraph, coloring: &LrColoring) -> bool {
    let f = forest_of(graph);
    if f.back.iter().any(|e| !coloring.color.contains_key(e)) {
        return false;
    }
    fork_constraints(&f).iter().all(|c| (coloring.color[&c.a] == coloring.color[&c.b]) == c.same)
}

/// Necessary condition for planarity: `m <= 3n - 6` when `n >= 3`.
pub fn euler_bound_ok(n: usize, m: usize) -> bool {
    n < 3 || m <= 3 * n - 6
}

/// Edge set left after removing the root and re-targeting its back edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shortcut {
    pub edges: BTreeSet<(usize, usize)>,
    /// Class of each re-targeted edge, inherited from the back edge it replaces.
    pub inherited: BTreeMap<(usize, usize), LrSide>,
}

/// Drops the root's tree edges and replaces each back edge `(x, root)` by `(x, w)`,
/// `w` being the root's child above `x`.
pub fn shortcut_cotree(orientation: &DfsOrientation, coloring: &LrColoring, v: usize) -> Result<Shortcut> {
    if v != orientation.root {
        return Err(Error::NotRoot(v));
    }
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    let mut edges = BTreeSet::new();
    let mut inherited = BTreeMap::new();
    for &(a, b) in &orientation.tree_edges {
        if a != v && b != v {
            edges.insert(key(a, b));
        }
    }
    for &(x, u) in &orientation.cotree_edges {
        if u != v {
            edges.insert(key(x, u));
            continue;
        }
        let w = orientation.root_child_of(x).expect("back edge from the root's subtree");
        if w != x {
            edges.insert(key(x, w));
            if let Some(&s) = coloring.color.get(&(x, u)) {
                inherited.insert(key(x, w), s);
            }
        }
    }
    Ok(Shortcut { edges, inherited })
}

/// Planar with all of `face` on one face: the graph plus an apex joined to `face` is planar.
pub fn planar_with_face(graph: &SupportGraph, face: &[usize]) -> bool {
    if face.is_empty() {
        return is_planar(graph);
    }
    let mut g = SupportGraph::new(graph.n + 1);
    g.edges = graph.edges.clone();
    let apex = graph.n;
    for &v in face {
        g.add_edge(v, apex);
    }
    is_planar(&g)
}
