use crate::error::{Error, Result};

use super::family::FamilySpec;

/// Immutable simple graph in CSR form. Neighbor lists are sorted and
/// duplicate-free, adjacency is symmetric and loop-free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<u32>,
    family: Option<FamilySpec>,
}

impl Graph {
    /// Build from per-vertex neighbor lists. Lists are sorted and deduplicated;
    /// loops and asymmetric entries are rejected.
    pub fn from_adjacency(mut lists: Vec<Vec<u32>>, family: Option<FamilySpec>) -> Result<Self> {
        let n = lists.len();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut neighbors = Vec::with_capacity(lists.iter().map(Vec::len).sum());
        offsets.push(0);
        for (v, list) in lists.iter_mut().enumerate() {
            list.sort_unstable();
            list.dedup();
            if let Some(&w) = list.iter().find(|&&w| w as usize >= n || w as usize == v) {
                return Err(Error::BadParameter(format!("invalid neighbor {w} of vertex {v}")));
            }
            neighbors.extend_from_slice(list);
            offsets.push(neighbors.len());
        }
        let g = Graph {
            offsets,
            neighbors,
            family,
        };
        for u in 0..n {
            for &w in g.neighbors(u) {
                if g.neighbors(w as usize).binary_search(&(u as u32)).is_err() {
                    return Err(Error::BadParameter(format!("edge {u}->{w} has no reverse")));
                }
            }
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut lists = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::IndexOutOfRange { index: u.max(v), n });
            }
            lists[u].push(v as u32);
            lists[v].push(u as u32);
        }
        Graph::from_adjacency(lists, None)
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(n, &edges).expect("valid complete graph")
    }

    /// K_{1,leaves} with the center at index 0.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, &edges).expect("valid star")
    }

    pub fn empty(n: usize) -> Self {
        Graph::from_edges(n, &[]).expect("valid empty graph")
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn family(&self) -> Option<&FamilySpec> {
        self.family.as_ref()
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// The common degree, if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        (1..self.n()).all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.len() / 2
    }

    /// Adjacency test by binary search in u's neighbor list.
    pub fn has_edge(&self, u: usize, v: usize) -> Result<bool> {
        let n = self.n();
        for idx in [u, v] {
            if idx >= n {
                return Err(Error::IndexOutOfRange { index: idx, n });
            }
        }
        Ok(self.neighbors(u).binary_search(&(v as u32)).is_ok())
    }

    /// Undirected edges (u, v) with u < v in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| v as usize > u)
                .map(move |&v| (u, v as usize))
        })
    }

    /// Domain point of vertex `v`: coordinates for Euclidean, [x, y] for the
    /// half-plane, code components for code graphs, [v] otherwise.
    pub fn decode(&self, v: usize) -> Vec<u32> {
        match &self.family {
            Some(f) => f.decode(v),
            None => vec![v as u32],
        }
    }

    pub fn encode(&self, point: &[u32]) -> Option<usize> {
        match &self.family {
            Some(f) => f.encode(point),
            None => match point {
                [v] if (*v as usize) < self.n() => Some(*v as usize),
                _ => None,
            },
        }
    }

    /// Sorted degree sequence, descending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<_> = (0..self.n()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}
