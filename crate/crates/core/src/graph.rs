//! Bitset graph representation and the structural primitives used by the
//! subset-sum expansions.
//!
//! Vertices are `0..n` with `n <= 64`, so a vertex subset is a single `u64`.
//! Edges carry a canonical index: the position of `(u, v)`, `u < v`, in the
//! lexicographically sorted edge list. Edge subsets are masks over those
//! indices.

use std::collections::VecDeque;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, BitXor, Not, Sub};

use crate::error::{AlgoError, CapKind, GraphError};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices stored as a 64-bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// `{0, 1, ..., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;
    fn into_iter(self) -> Members {
        self.iter()
    }
}

/// Iterator over the members of a [`VertexSet`] in increasing order.
#[derive(Clone, Debug)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Members {}

macro_rules! set_ops {
    ($ty:ident) => {
        impl BitOr for $ty {
            type Output = $ty;
            #[inline]
            fn bitor(self, rhs: $ty) -> $ty {
                $ty(self.0 | rhs.0)
            }
        }
        impl BitOrAssign for $ty {
            #[inline]
            fn bitor_assign(&mut self, rhs: $ty) {
                self.0 |= rhs.0;
            }
        }
        impl BitAnd for $ty {
            type Output = $ty;
            #[inline]
            fn bitand(self, rhs: $ty) -> $ty {
                $ty(self.0 & rhs.0)
            }
        }
        impl BitAndAssign for $ty {
            #[inline]
            fn bitand_assign(&mut self, rhs: $ty) {
                self.0 &= rhs.0;
            }
        }
        impl BitXor for $ty {
            type Output = $ty;
            #[inline]
            fn bitxor(self, rhs: $ty) -> $ty {
                $ty(self.0 ^ rhs.0)
            }
        }
        impl Sub for $ty {
            type Output = $ty;
            #[inline]
            fn sub(self, rhs: $ty) -> $ty {
                $ty(self.0 & !rhs.0)
            }
        }
        impl Not for $ty {
            type Output = $ty;
            #[inline]
            fn not(self) -> $ty {
                $ty(!self.0)
            }
        }
    };
}

set_ops!(VertexSet);

/// A set of canonical edge indices.
///
/// Graphs on 64 vertices can have up to 2016 edges, so this is a word
/// vector rather than a single mask. Enumeration code that iterates over
/// `2^m` subsets works on raw `u64` masks and converts with
/// [`EdgeSet::from_mask`].
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    words: Vec<u64>,
}

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet::default()
    }

    /// Edge set whose low 64 indices are given by `mask`.
    pub fn from_mask(mask: u64) -> Self {
        let mut s = EdgeSet { words: vec![mask] };
        s.trim();
        s
    }

    /// All indices `0..m`.
    pub fn full(m: usize) -> Self {
        (0..m).collect()
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn contains(&self, e: usize) -> bool {
        self.words
            .get(e / 64)
            .is_some_and(|w| w >> (e % 64) & 1 == 1)
    }

    pub fn insert(&mut self, e: usize) {
        let i = e / 64;
        if self.words.len() <= i {
            self.words.resize(i + 1, 0);
        }
        self.words[i] |= 1u64 << (e % 64);
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// The set as a single mask, if every member is below 64.
    pub fn as_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn intersection(&self, other: &EdgeSet) -> EdgeSet {
        let mut s = EdgeSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        };
        s.trim();
        s
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, w)| w & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words
            .iter()
            .enumerate()
            .flat_map(|(i, &w)| Members(w).map(move |b| 64 * i + b))
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = EdgeSet::new();
        for e in iter {
            s.insert(e);
        }
        s
    }
}

/// Multiset of component orders, sorted in decreasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypePartition(Vec<usize>);

impl TypePartition {
    pub fn from_parts(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        TypePartition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of parts, i.e. the number of components.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts, i.e. the order of the described graph.
    pub fn order(&self) -> usize {
        self.0.iter().sum()
    }
}

/// One component with at least one edge, split into its two colour classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteComponent {
    pub vertices: VertexSet,
    /// Colour class holding the smallest vertex of the component.
    pub y: VertexSet,
    pub z: VertexSet,
    pub edge_count: usize,
}

/// Two-colouring of a bipartite graph, component by component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    /// Components with at least one edge, ordered by smallest vertex.
    pub components: Vec<BipartiteComponent>,
    /// Number of isolated vertices.
    pub isolated_count: usize,
}

/// A finite simple undirected graph on at most 64 vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// The graph with no vertices.
    pub fn null() -> Self {
        Graph {
            adj: Vec::new(),
            edges: Vec::new(),
        }
    }

    /// `n` vertices, no edges.
    pub fn edgeless(n: usize) -> Result<Self, GraphError> {
        Graph::new(n, [])
    }

    /// Builds a graph from an edge list. Duplicate edges and both
    /// orientations are merged; self-loops and out-of-range endpoints are
    /// rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph::from_adjacency(adj))
    }

    /// Builds the graph from symmetric, loop-free adjacency rows.
    fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        let mut edges = Vec::new();
        for (u, row) in adj.iter().enumerate() {
            for v in row.iter().filter(|&v| v > u) {
                edges.push((u, v));
            }
        }
        Graph { adj, edges }
    }

    /// Vertex count.
    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Edge count.
    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Open neighbourhood of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Canonical edge list: pairs `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    /// Canonical index of the edge `{u, v}`.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// `N[v]`.
    #[inline]
    pub fn closed_neighbor(&self, v: usize) -> VertexSet {
        self.adj[v] | VertexSet::singleton(v)
    }

    /// `N[W]`: `W` together with all neighbours of its members.
    #[inline]
    pub fn closed_neighborhood(&self, w: VertexSet) -> VertexSet {
        w.iter().fold(w, |acc, v| acc | self.adj[v])
    }

    /// True iff `N[W] = V`.
    #[inline]
    pub fn is_dominating(&self, w: VertexSet) -> bool {
        self.closed_neighborhood(w) == self.vertices()
    }

    /// Edges with exactly one endpoint in `W`.
    pub fn boundary_edges(&self, w: VertexSet) -> EdgeSet {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| w.contains(u) != w.contains(v))
            .map(|(i, _)| i)
            .collect()
    }

    /// Connected component of `G[within]` containing `v`.
    pub fn component_within(&self, v: usize, within: VertexSet) -> VertexSet {
        debug_assert!(within.contains(v));
        let mut comp = VertexSet::singleton(v);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for u in frontier {
                next |= self.adj[u];
            }
            frontier = next & (within - comp);
            comp |= frontier;
        }
        comp
    }

    /// Components of `G[within]`, ordered by smallest member.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within & self.vertices();
        let mut out = Vec::new();
        while let Some(v) = rest.min() {
            let c = self.component_within(v, rest);
            rest = rest - c;
            out.push(c);
        }
        out
    }

    /// Connected components, ordered by smallest member. Empty for the
    /// null graph.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Whether `G[W]` is connected (the empty set counts as disconnected).
    pub fn is_connected_within(&self, w: VertexSet) -> bool {
        w.min().is_some_and(|v| self.component_within(v, w) == w)
    }

    /// Component orders of `G[within]`.
    pub fn type_partition_within(&self, within: VertexSet) -> TypePartition {
        TypePartition::from_parts(
            self.components_within(within)
                .into_iter()
                .map(VertexSet::len)
                .collect(),
        )
    }

    /// Component orders of the whole graph.
    pub fn type_partition(&self) -> TypePartition {
        self.type_partition_within(self.vertices())
    }

    /// Breadth-first two-colouring; `None` if the graph has an odd cycle.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let n = self.n();
        let mut side = vec![u8::MAX; n];
        let mut components = Vec::new();
        let mut isolated_count = 0;
        let mut queue = VecDeque::new();
        for root in 0..n {
            if side[root] != u8::MAX {
                continue;
            }
            if self.adj[root].is_empty() {
                side[root] = 0;
                isolated_count += 1;
                continue;
            }
            let mut part = [VertexSet::EMPTY; 2];
            let mut degree_sum = 0;
            side[root] = 0;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                part[side[u] as usize].insert(u);
                degree_sum += self.degree(u);
                for w in self.adj[u] {
                    if side[w] == u8::MAX {
                        side[w] = side[u] ^ 1;
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
            components.push(BipartiteComponent {
                vertices: part[0] | part[1],
                y: part[0],
                z: part[1],
                edge_count: degree_sum / 2,
            });
        }
        Some(Bipartition {
            components,
            isolated_count,
        })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Vertices of some odd cycle, in cycle order, or `None` if bipartite.
    pub fn odd_cycle(&self) -> Option<Vec<usize>> {
        let n = self.n();
        let mut depth = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            if depth[root] != usize::MAX {
                continue;
            }
            depth[root] = 0;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for w in self.adj[u] {
                    if depth[w] == usize::MAX {
                        depth[w] = depth[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if depth[w] == depth[u] {
                        // Equal BFS depth: walk both tree paths up to the
                        // common ancestor. Path lengths are equal, so the
                        // cycle has odd length.
                        let (mut a, mut b) = (u, w);
                        let (mut left, mut right) = (vec![a], vec![b]);
                        while a != b {
                            a = parent[a];
                            b = parent[b];
                            left.push(a);
                            right.push(b);
                        }
                        right.pop();
                        right.reverse();
                        left.extend(right);
                        return Some(left);
                    }
                }
            }
        }
        None
    }

    /// `G[W]` with vertices relabelled by increasing original index. The
    /// second value maps new labels to original vertices.
    pub fn induced_subgraph(&self, w: VertexSet) -> (Graph, Vec<usize>) {
        let w = w & self.vertices();
        let map: Vec<usize> = w.iter().collect();
        let adj = map.iter().map(|&u| compress(self.adj[u] & w, w)).collect();
        (Graph::from_adjacency(adj), map)
    }

    /// `(V, F)`: same vertices, only the edges in `F`.
    pub fn spanning_subgraph(&self, f: &EdgeSet) -> Graph {
        let mut adj = vec![VertexSet::EMPTY; self.n()];
        for e in f.iter().filter(|&e| e < self.m()) {
            let (u, v) = self.edges[e];
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Graph::from_adjacency(adj)
    }

    /// `G - W`, i.e. `G[V \ W]`.
    pub fn delete_vertices(&self, w: VertexSet) -> Graph {
        self.induced_subgraph(self.vertices() - w).0
    }

    /// Every `W` containing `v` with `G[W]` connected, each exactly once.
    pub fn connected_sets_containing(&self, v: usize) -> ConnectedSets<'_> {
        ConnectedSets::new(self, v, self.vertices())
    }

    /// Every `W` such that each component of `G[W]` has even order, paired
    /// with the number of components of `G[W]`. Includes `W = {}` with 0.
    pub fn conformal_sets(&self) -> ConformalSets<'_> {
        ConformalSets::new(self)
    }

    /// Independence number by scanning all `2^n` subsets.
    pub fn independence_number_brute(&self, vertex_cap: usize) -> Result<usize, AlgoError> {
        AlgoError::check_cap(CapKind::Vertex, vertex_cap, self.n())?;
        let best = (0..1u64 << self.n())
            .map(VertexSet)
            .filter(|&w| w.iter().all(|v| (self.adj[v] & w).is_empty()))
            .map(VertexSet::len)
            .max()
            .unwrap_or(0);
        Ok(best)
    }
}

/// Packs the bits of `set` selected by `support` into the low bits.
fn compress(set: VertexSet, support: VertexSet) -> VertexSet {
    let mut out = 0u64;
    for (i, v) in support.iter().enumerate() {
        if set.contains(v) {
            out |= 1 << i;
        }
    }
    VertexSet(out)
}

/// Stream of connected vertex sets containing a fixed root.
///
/// Binary branching on the smallest frontier vertex: either it joins the
/// set, or it is forbidden for the rest of that branch. Each leaf is a
/// distinct connected set, and every connected set is reached by exactly
/// one branch sequence.
#[derive(Clone, Debug)]
pub struct ConnectedSets<'g> {
    graph: &'g Graph,
    within: VertexSet,
    stack: Vec<(VertexSet, VertexSet)>,
}

impl<'g> ConnectedSets<'g> {
    /// Connected sets of `G[within]` containing `root`.
    pub fn new(graph: &'g Graph, root: usize, within: VertexSet) -> Self {
        let stack = if within.contains(root) {
            vec![(VertexSet::singleton(root), VertexSet::EMPTY)]
        } else {
            Vec::new()
        };
        ConnectedSets {
            graph,
            within,
            stack,
        }
    }
}

impl Iterator for ConnectedSets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        loop {
            let (set, banned) = self.stack.pop()?;
            let mut frontier = VertexSet::EMPTY;
            for u in set {
                frontier |= self.graph.adj[u];
            }
            let candidates = frontier & (self.within - set - banned);
            match candidates.min() {
                None => return Some(set),
                Some(u) => {
                    let u = VertexSet::singleton(u);
                    self.stack.push((set, banned | u));
                    self.stack.push((set | u, banned));
                }
            }
        }
    }
}

struct ConformalFrame<'g> {
    allowed: VertexSet,
    chosen: VertexSet,
    count: usize,
    children: Option<ConnectedSets<'g>>,
}

/// Stream of conformal induced subgraphs.
///
/// Builds each conformal `W` component by component: the smallest allowed
/// vertex is either left out, or becomes the root of an even-order
/// connected set `C`, after which everything in `N[C]` is excluded so that
/// `C` stays a whole component.
pub struct ConformalSets<'g> {
    graph: &'g Graph,
    stack: Vec<ConformalFrame<'g>>,
}

impl<'g> ConformalSets<'g> {
    fn new(graph: &'g Graph) -> Self {
        ConformalSets {
            graph,
            stack: vec![ConformalFrame {
                allowed: graph.vertices(),
                chosen: VertexSet::EMPTY,
                count: 0,
                children: None,
            }],
        }
    }
}

impl Iterator for ConformalSets<'_> {
    type Item = (VertexSet, usize);

    fn next(&mut self) -> Option<(VertexSet, usize)> {
        loop {
            let top = self.stack.last_mut()?;
            let (allowed, chosen, count) = (top.allowed, top.chosen, top.count);
            match &mut top.children {
                None => {
                    let Some(v) = allowed.min() else {
                        self.stack.pop();
                        return Some((chosen, count));
                    };
                    top.children = Some(ConnectedSets::new(self.graph, v, allowed));
                    self.stack.push(ConformalFrame {
                        allowed: allowed - VertexSet::singleton(v),
                        chosen,
                        count,
                        children: None,
                    });
                }
                Some(children) => match children.find(|c| c.len() % 2 == 0) {
                    Some(c) => {
                        let allowed = allowed - self.graph.closed_neighborhood(c);
                        self.stack.push(ConformalFrame {
                            allowed,
                            chosen: chosen | c,
                            count: count + 1,
                            children: None,
                        });
                    }
                    None => {
                        self.stack.pop();
                    }
                },
            }
        }
    }
}
