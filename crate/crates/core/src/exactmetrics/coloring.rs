use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;
use crate::graphs::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColoringOrder {
    /// Highest degree first, index breaks ties.
    DegreeDescending,
    Index,
    /// DSatur: most distinctly-colored neighbors first, then degree, then index.
    Saturation,
}

impl FromStr for ColoringOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "degree-descending" | "degree" => Ok(ColoringOrder::DegreeDescending),
            "index" => Ok(ColoringOrder::Index),
            "saturation" | "dsatur" => Ok(ColoringOrder::Saturation),
            other => Err(Error::BadParameter(format!("unknown coloring order {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coloring {
    pub colors: usize,
    pub assignment: Vec<u32>,
}

fn smallest_free(g: &Graph, v: usize, assignment: &[u32], used: &mut Vec<bool>) -> u32 {
    used.clear();
    used.resize(g.degree(v) + 1, false);
    for &w in g.neighbors(v) {
        let c = assignment[w as usize] as usize;
        if c < used.len() {
            used[c] = true;
        }
    }
    used.iter().position(|&u| !u).expect("degree + 1 slots") as u32
}

fn saturation_coloring(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let mut assignment = vec![u32::MAX; n];
    let mut seen: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut used = Vec::new();
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| assignment[v] == u32::MAX)
            .max_by_key(|&v| (seen[v].len(), g.degree(v), std::cmp::Reverse(v)))
            .expect("uncolored vertex remains");
        let c = smallest_free(g, v, &assignment, &mut used);
        assignment[v] = c;
        for &w in g.neighbors(v) {
            let s = &mut seen[w as usize];
            if let Err(pos) = s.binary_search(&c) {
                s.insert(pos, c);
            }
        }
    }
    assignment
}

/// First-fit coloring in the given order; deterministic.
pub fn greedy_coloring(g: &Graph, order: ColoringOrder) -> Coloring {
    if order == ColoringOrder::Saturation {
        let assignment = saturation_coloring(g);
        let colors = assignment.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
        return Coloring { colors, assignment };
    }
    let mut vertices: Vec<usize> = (0..g.n()).collect();
    if order == ColoringOrder::DegreeDescending {
        vertices.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    }
    let mut assignment = vec![u32::MAX; g.n()];
    let mut used = Vec::new();
    for v in vertices {
        assignment[v] = smallest_free(g, v, &assignment, &mut used);
    }
    let colors = assignment.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
    Coloring { colors, assignment }
}

pub fn is_proper(g: &Graph, assignment: &[u32]) -> bool {
    g.edges().all(|(u, v)| assignment[u] != assignment[v])
}
