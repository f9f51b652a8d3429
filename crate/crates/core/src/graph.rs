//! Simple undirected graphs with an all-pairs BFS distance table, the
//! distance-i matrices, and i-neighborhood sizes.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::mat::Mat;

const UNREACHABLE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex index {index} out of range (n = {n})")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("distance class index {i} out of range (diameter {diameter})")]
    DistanceOutOfRange { i: usize, diameter: usize },
}

/// Immutable simple graph with its BFS distance table.
///
/// Construction never fails for disconnected or irregular input — those are
/// analysis preconditions, checked by the analysis entry points so a front end
/// can still describe the graph it refuses to analyze. [`Graph::from_edge_list`]
/// additionally enforces connectivity, matching the edge-list ingestion
/// contract.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    adj: Vec<Vec<u32>>,
    dist: Vec<u32>,
    diameter: usize,
    degree: Option<usize>,
    components: usize,
}

impl Graph {
    /// Build a graph from (possibly duplicated) edge pairs. Rejects self-loops
    /// and out-of-range indices; accepts disconnected graphs.
    pub fn build(
        n: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph, GraphError> {
        let mut edges: Vec<(u32, u32)> = Vec::new();
        for (u, v) in pairs {
            if u >= n {
                return Err(GraphError::IndexOutOfRange { index: u, n });
            }
            if v >= n {
                return Err(GraphError::IndexOutOfRange { index: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            edges.push((a as u32, b as u32));
        }
        edges.sort_unstable();
        edges.dedup();

        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }

        let mut dist = vec![UNREACHABLE; n * n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            dist[s * n + s] = 0;
            queue.clear();
            queue.push_back(s as u32);
            while let Some(u) = queue.pop_front() {
                let du = dist[s * n + u as usize];
                for &v in &adj[u as usize] {
                    if dist[s * n + v as usize] == UNREACHABLE {
                        dist[s * n + v as usize] = du + 1;
                        queue.push_back(v);
                    }
                }
            }
        }

        // a vertex heads a new component when no earlier vertex reaches it
        let components = (0..n)
            .filter(|&v| (0..v).all(|u| dist[u * n + v] == UNREACHABLE))
            .count();
        let diameter = dist
            .iter()
            .filter(|&&d| d != UNREACHABLE)
            .max()
            .copied()
            .unwrap_or(0) as usize;
        let degree = if n == 0 {
            None
        } else {
            let d0 = adj[0].len();
            if adj.iter().all(|a| a.len() == d0) {
                Some(d0)
            } else {
                None
            }
        };

        Ok(Graph { n, edges, adj, dist, diameter, degree, components })
    }

    /// Build and require connectivity.
    pub fn from_edge_list(
        n: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph, GraphError> {
        let g = Graph::build(n, pairs)?;
        if !g.is_connected() {
            return Err(GraphError::Disconnected { components: g.components });
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Sorted, deduplicated edges with u < v.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn neighbors(&self, u: usize) -> &[u32] {
        &self.adj[u]
    }

    /// Common degree, present only when the graph is regular.
    pub fn degree(&self) -> Option<usize> {
        self.degree
    }

    pub fn degree_of(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn is_regular(&self) -> bool {
        self.degree.is_some()
    }

    pub fn is_connected(&self) -> bool {
        self.components <= 1
    }

    pub fn components(&self) -> usize {
        self.components
    }

    /// Max finite distance; the diameter when the graph is connected.
    pub fn diameter(&self) -> usize {
        self.diameter
    }

    /// BFS distance, `None` when unreachable.
    pub fn dist(&self, u: usize, v: usize) -> Option<usize> {
        match self.dist[u * self.n + v] {
            UNREACHABLE => None,
            d => Some(d as usize),
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.dist[u * self.n + v] == 1
    }

    pub fn adjacency_matrix(&self) -> Mat {
        let mut a = Mat::zeros(self.n);
        for &(u, v) in &self.edges {
            a[(u as usize, v as usize)] = 1.0;
            a[(v as usize, u as usize)] = 1.0;
        }
        a
    }

    /// The distance-i matrices A_0 .. A_D.
    ///
    /// Requires a connected graph (the partition into distance classes only
    /// covers all pairs then).
    pub fn distance_matrices(&self) -> DistanceMatrices {
        assert!(self.is_connected(), "distance matrices require a connected graph");
        let n = self.n;
        let mut mats = vec![Mat::zeros(n); self.diameter + 1];
        for u in 0..n {
            for v in 0..n {
                let d = self.dist[u * n + v] as usize;
                mats[d][(u, v)] = 1.0;
            }
        }
        DistanceMatrices { mats }
    }

    /// `|N_i(u)|` for every u: the number of vertices within distance i of u,
    /// u included.
    pub fn neighborhood_sizes(&self, i: usize) -> Result<Vec<usize>, GraphError> {
        if i > self.diameter {
            return Err(GraphError::DistanceOutOfRange { i, diameter: self.diameter });
        }
        let n = self.n;
        Ok((0..n)
            .map(|u| {
                self.dist[u * n..(u + 1) * n]
                    .iter()
                    .filter(|&&d| d != UNREACHABLE && d as usize <= i)
                    .count()
            })
            .collect())
    }
}

/// The distance-i matrices A_0 = I, A_1 = A, ..., A_D of a connected graph.
/// They are entrywise disjoint 0/1 matrices summing to the all-ones matrix J.
#[derive(Debug, Clone)]
pub struct DistanceMatrices {
    mats: Vec<Mat>,
}

impl DistanceMatrices {
    /// D + 1.
    pub fn len(&self) -> usize {
        self.mats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mats.is_empty()
    }

    pub fn get(&self, i: usize) -> &Mat {
        &self.mats[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Mat> {
        self.mats.iter()
    }
}
