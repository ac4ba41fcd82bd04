use std::collections::VecDeque;
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graphs::Graph;

use super::triangles::triangle_count;

/// A path or cycle length that may be infinite (no cycle, or disconnected).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Length {
    Finite(u32),
    Infinite,
}

impl Length {
    pub fn finite(self) -> Option<u32> {
        match self {
            Length::Finite(v) => Some(v),
            Length::Infinite => None,
        }
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(v) => write!(f, "{v}"),
            Length::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Length {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Length::Finite(v) => s.serialize_u32(*v),
            Length::Infinite => s.serialize_str("inf"),
        }
    }
}

const UNSEEN: u32 = u32::MAX;

/// BFS distances from `root`; unreachable vertices hold `u32::MAX`.
pub fn bfs_distances(g: &Graph, root: usize) -> Vec<u32> {
    let mut dist = vec![UNSEEN; g.n()];
    let mut queue = VecDeque::new();
    dist[root] = 0;
    queue.push_back(root);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            let w = w as usize;
            if dist[w] == UNSEEN {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Max distance from `root`; infinite if some vertex is unreachable.
pub fn eccentricity(g: &Graph, root: usize) -> Length {
    let dist = bfs_distances(g, root);
    if dist.contains(&UNSEEN) {
        Length::Infinite
    } else {
        Length::Finite(dist.into_iter().max().unwrap_or(0))
    }
}

/// Length of the shortest closed walk found by BFS from `root` that closes
/// through a non-tree edge. Equals the shortest cycle through `root` when
/// one exists and never undercuts the girth.
fn shortest_cycle_from(g: &Graph, root: usize, best: u32) -> u32 {
    let mut dist = vec![UNSEEN; g.n()];
    let mut parent = vec![u32::MAX; g.n()];
    let mut queue = VecDeque::new();
    let mut found = best;
    dist[root] = 0;
    queue.push_back(root);
    while let Some(u) = queue.pop_front() {
        if 2 * dist[u] + 1 >= found {
            break;
        }
        for &w in g.neighbors(u) {
            let wi = w as usize;
            if dist[wi] == UNSEEN {
                dist[wi] = dist[u] + 1;
                parent[wi] = u as u32;
                queue.push_back(wi);
            } else if parent[u] != w {
                found = found.min(dist[u] + dist[wi] + 1);
            }
        }
    }
    found
}

/// Exact girth. With `vertex_transitive` only vertex 0 is used as a root.
pub fn girth(g: &Graph, vertex_transitive: bool) -> Length {
    if g.n() == 0 {
        return Length::Infinite;
    }
    let best = if vertex_transitive {
        shortest_cycle_from(g, 0, UNSEEN)
    } else {
        (0..g.n())
            .into_par_iter()
            .map(|r| shortest_cycle_from(g, r, UNSEEN))
            .min()
            .unwrap_or(UNSEEN)
    };
    if best == UNSEEN {
        Length::Infinite
    } else {
        Length::Finite(best)
    }
}

/// Exact diameter; infinite for disconnected graphs.
pub fn diameter(g: &Graph, vertex_transitive: bool) -> Length {
    if g.n() == 0 {
        return Length::Finite(0);
    }
    if vertex_transitive {
        return eccentricity(g, 0);
    }
    (0..g.n())
        .into_par_iter()
        .map(|r| eccentricity(g, r))
        .max()
        .unwrap_or(Length::Finite(0))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Components {
    pub count: usize,
    /// Sizes ordered by each component's smallest vertex.
    pub sizes: Vec<usize>,
    /// Component label per vertex.
    pub labels: Vec<u32>,
}

pub fn connected_components(g: &Graph) -> Components {
    let mut labels = vec![u32::MAX; g.n()];
    let mut sizes = Vec::new();
    let mut stack = Vec::new();
    for start in 0..g.n() {
        if labels[start] != u32::MAX {
            continue;
        }
        let id = sizes.len() as u32;
        labels[start] = id;
        stack.push(start);
        let mut size = 0;
        while let Some(u) = stack.pop() {
            size += 1;
            for &w in g.neighbors(u) {
                if labels[w as usize] == u32::MAX {
                    labels[w as usize] = id;
                    stack.push(w as usize);
                }
            }
        }
        sizes.push(size);
    }
    Components {
        count: sizes.len(),
        sizes,
        labels,
    }
}

/// Vertices sampled evenly across the index range, always including 0.
pub fn sample_vertices(n: usize, samples: usize) -> Vec<usize> {
    let s = samples.min(n).max(1);
    let mut out: Vec<usize> = (0..s).map(|i| i * n / s).collect();
    out.dedup();
    out
}

/// True iff every sampled vertex has the same eccentricity.
pub fn eccentricity_uniformity_check(g: &Graph, samples: usize) -> Result<bool> {
    if samples < 2 {
        return Err(Error::BadParameter("need at least 2 samples".into()));
    }
    let ecc: Vec<Length> = sample_vertices(g.n(), samples)
        .into_par_iter()
        .map(|v| eccentricity(g, v))
        .collect();
    Ok(ecc.windows(2).all(|w| w[0] == w[1]))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MetricsReport {
    pub n: usize,
    pub edges: usize,
    pub degree: Option<usize>,
    pub girth: Length,
    pub diameter: Length,
    pub triangles: u64,
    pub components: usize,
    pub is_vertex_transitive_assumed: bool,
}

/// Girth, diameter, triangles and components. The single-source shortcut is
/// taken for the built-in families, all of which are vertex-transitive.
pub fn metrics_report(g: &Graph) -> MetricsReport {
    let vt = g.family().is_some();
    MetricsReport {
        n: g.n(),
        edges: g.edge_count(),
        degree: g.regular_degree(),
        girth: girth(g, vt),
        diameter: diameter(g, vt),
        triangles: triangle_count(g),
        components: connected_components(g).count,
        is_vertex_transitive_assumed: vt,
    }
}
