//! Simple undirected graphs on dense vertex ids `0..n`.
//!
//! Adjacency is kept twice: sorted neighbour lists for iteration and, for
//! graphs with at most 64 vertices, a packed bit matrix for O(1) edge tests.

mod degeneracy;
pub mod edgelist;
pub mod graph6;
pub mod iso;
mod motif;
pub mod named;
mod separator;

pub use degeneracy::{degeneracy, DegeneracyOrdering};
pub use motif::{
    find_claw, find_induced_motif, find_net, ClawEmbedding, DiamondEmbedding, HouseEmbedding,
    Motif, MotifEmbedding, NetEmbedding,
};
pub(crate) use separator::for_each_subset;
pub use separator::{find_min_separator, is_three_connected, Separator};

use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertices {0} and {1} are adjacent")]
    Adjacent(usize, usize),
    #[error("cannot identify a vertex with itself ({0})")]
    SameVertex(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("separator search needs at least {need} vertices, graph has {n}")]
    TooSmall { need: usize, n: usize },
}

/// Immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    bits: Option<Vec<u64>>,
    edges: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edge_list())
            .finish()
    }
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Self::from_adjacency(vec![Vec::new(); n])
    }

    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_adjacency(adj))
    }

    fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let n = adj.len();
        let bits = (n <= 64).then(|| {
            adj.iter()
                .map(|list| list.iter().fold(0u64, |acc, &v| acc | (1u64 << v)))
                .collect()
        });
        let edges = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Graph { adj, bits, edges }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// Sorted neighbour list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        match &self.bits {
            Some(bits) => bits[u] >> v & 1 == 1,
            None => self.adj[u].binary_search(&v).is_ok(),
        }
    }

    /// Neighbourhood bit mask; only available when `n <= 64`.
    pub fn neighbor_mask(&self, v: usize) -> Option<u64> {
        self.bits.as_ref().map(|b| b[v])
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.vertices()
            .flat_map(|u| {
                self.adj[u]
                    .iter()
                    .filter(move |&&v| v > u)
                    .map(move |&v| (u, v))
            })
            .collect()
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut edges = self.edge_list();
        edges.push((u, v));
        Graph::from_edges(self.n(), &edges)
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.adj.iter().all(|l| l.len() == k)
    }

    pub fn is_cubic(&self) -> bool {
        self.is_regular(3)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_avoiding(&[])
    }

    /// Components of `G - removed`.
    pub fn components_avoiding(&self, removed: &[usize]) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        for &r in removed {
            seen[r] = true;
        }
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            queue.push_back(root);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced by `vertices`; local id `i` corresponds to `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Subgraph {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| local[w] != usize::MAX)
                    .map(|&w| local[w])
                    .collect()
            })
            .collect();
        Subgraph {
            graph: Graph::from_adjacency(adj),
            to_parent: vertices.to_vec(),
        }
    }

    /// Deletes `v`, shifting later ids down by one.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = self.vertices().filter(|&u| u != v).collect();
        self.induced_subgraph(&keep).graph
    }

    /// Replaces non-adjacent `x` and `y` by one vertex adjacent to `N(x) ∪ N(y)`.
    ///
    /// The merged vertex takes the slot of `x` (after `y` is removed and
    /// later ids shift down). The returned map sends old ids to new ids; both
    /// `x` and `y` map to the merged vertex.
    pub fn identify_vertices(&self, x: usize, y: usize) -> Result<(Graph, Vec<usize>), GraphError> {
        let n = self.n();
        for w in [x, y] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        if x == y {
            return Err(GraphError::SameVertex(x));
        }
        if self.has_edge(x, y) {
            return Err(GraphError::Adjacent(x, y));
        }
        let map: Vec<usize> = (0..n)
            .map(|v| {
                let v = if v == y { x } else { v };
                if v > y {
                    v - 1
                } else {
                    v
                }
            })
            .collect();
        let mut adj = vec![Vec::new(); n - 1];
        for (u, v) in self.edge_list() {
            adj[map[u]].push(map[v]);
            adj[map[v]].push(map[u]);
        }
        Ok((Graph::from_adjacency(adj), map))
    }

    /// All triangles `(a, b, c)` with `a < b < c`, in lexicographic order.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for a in self.vertices() {
            for &b in self.adj[a].iter().filter(|&&b| b > a) {
                for &c in self.adj[b].iter().filter(|&&c| c > b) {
                    if self.has_edge(a, c) {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }

    /// True if the vertices form a clique.
    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }
}

/// An induced subgraph together with the map back to parent ids.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Graph,
    pub to_parent: Vec<usize>,
}

impl Subgraph {
    /// Parent id -> local id table (`None` for vertices outside the subgraph).
    pub fn from_parent(&self, parent_n: usize) -> Vec<Option<usize>> {
        let mut out = vec![None; parent_n];
        for (i, &v) in self.to_parent.iter().enumerate() {
            out[v] = Some(i);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_bad_ids() {
        assert_eq!(
            Graph::from_edges(2, &[(1, 1)]),
            Err(GraphError::SelfLoop(1))
        );
        assert!(matches!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn parallel_edges_merge() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn identify_opposite_corners_of_c4() {
        let c4 = named::cycle(4);
        let (g, map) = c4.identify_vertices(0, 2).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(map, vec![0, 1, 0, 2]);
        // b - z - d
        assert_eq!(g.edge_list(), vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn identify_isolated_vertices() {
        let g = Graph::empty(3);
        let (h, map) = g.identify_vertices(1, 2).unwrap();
        assert_eq!(h.n(), 2);
        assert_eq!(h.degree(map[1]), 0);
        assert_eq!(h.edge_count(), 0);
    }

    #[test]
    fn identify_rejects_adjacent() {
        let g = named::path(3);
        assert_eq!(
            g.identify_vertices(0, 1).unwrap_err(),
            GraphError::Adjacent(0, 1)
        );
        assert_eq!(
            g.identify_vertices(1, 1).unwrap_err(),
            GraphError::SameVertex(1)
        );
    }

    #[test]
    fn identify_in_prism_unions_neighbourhoods() {
        let prism = named::prism();
        // 0 and 4 are non-adjacent: N(0) = {1,2,3}, N(4) = {1,3,5}
        let (g, map) = prism.identify_vertices(0, 4).unwrap();
        let z = map[0];
        let mut expect: Vec<usize> = [1, 2, 3, 5].iter().map(|&v| map[v]).collect();
        expect.sort_unstable();
        assert_eq!(g.neighbors(z), expect.as_slice());
        assert_eq!(g.n(), 5);
    }

    #[test]
    fn components_and_subgraphs() {
        let g = Graph::from_edges(5, &[(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
        let sub = g.induced_subgraph(&[1, 3, 4]);
        assert_eq!(sub.graph.edge_list(), vec![(1, 2)]);
        assert_eq!(sub.from_parent(5)[4], Some(2));
    }

    #[test]
    fn triangles_of_k4() {
        assert_eq!(named::complete(4).triangles().len(), 4);
        assert!(named::k33().triangles().is_empty());
    }

    #[test]
    fn large_graph_uses_neighbour_lists() {
        let g = named::cycle(70);
        assert!(g.neighbor_mask(0).is_none());
        assert!(g.has_edge(69, 0));
        assert!(!g.has_edge(0, 2));
        assert!(g.is_regular(2));
    }
}
