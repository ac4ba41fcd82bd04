use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graphs::Graph;

/// Exact toughness value; `Infinite` when no vertex set disconnects the
/// graph (complete graphs).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Toughness {
    Finite { numerator: u64, denominator: u64 },
    Infinite,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Toughness {
    pub fn ratio(numerator: u64, denominator: u64) -> Self {
        let g = gcd(numerator, denominator).max(1);
        Toughness::Finite {
            numerator: numerator / g,
            denominator: denominator / g,
        }
    }

    pub fn as_f64(self) -> f64 {
        match self {
            Toughness::Finite { numerator, denominator } => numerator as f64 / denominator as f64,
            Toughness::Infinite => f64::INFINITY,
        }
    }

    /// Exact comparison against a float bound.
    pub fn exceeds(self, bound: f64) -> bool {
        match self {
            Toughness::Finite { numerator, denominator } => numerator as f64 > bound * denominator as f64,
            Toughness::Infinite => true,
        }
    }
}

impl fmt::Display for Toughness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Toughness::Finite { numerator, denominator } => write!(f, "{numerator}/{denominator}"),
            Toughness::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Toughness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ToughnessResult {
    pub value: Toughness,
    /// The first minimizing set in (size, lexicographic) order.
    pub witness: Vec<usize>,
    pub components_after: usize,
}

pub(crate) fn adjacency_masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|u| g.neighbors(u).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

/// Components of the subgraph induced on `alive`.
pub(crate) fn components_in(adj: &[u32], alive: u32) -> usize {
    let mut rest = alive;
    let mut count = 0;
    while rest != 0 {
        let mut frontier = rest & rest.wrapping_neg();
        let mut comp = frontier;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & alive & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        rest &= !comp;
        count += 1;
    }
    count
}

/// Calls `visit` on every size-`s` subset of 0..n as a bitmask, in
/// lexicographic order of the sorted index tuples.
fn for_each_combination(n: usize, s: usize, mut visit: impl FnMut(u32)) {
    let mut idx: Vec<usize> = (0..s).collect();
    loop {
        visit(idx.iter().fold(0u32, |m, &i| m | 1 << i));
        let Some(i) = (0..s).rev().find(|&i| idx[i] < n - s + i) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..s {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// min |S| / c(G - S) over all S leaving at least two components.
pub fn exact_toughness(g: &Graph, max_n: usize) -> Result<ToughnessResult> {
    let n = g.n();
    if n > max_n || n > 31 {
        return Err(Error::TooLarge {
            what: "exact toughness",
            n,
            limit: max_n.min(31),
        });
    }
    let adj = adjacency_masks(g);
    let full: u32 = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    // Best (size, components, set); compare a/b < c/d as a*d < c*b.
    let mut best: Option<(usize, usize, u32)> = None;
    for s in 0..n.saturating_sub(1) {
        for_each_combination(n, s, |set| {
            let c = components_in(&adj, full & !set);
            if c < 2 {
                return;
            }
            let better = match best {
                None => true,
                Some((bs, bc, _)) => (s * bc).cmp(&(bs * c)) == Ordering::Less,
            };
            if better {
                best = Some((s, c, set));
            }
        });
    }
    Ok(match best {
        Some((s, c, set)) => ToughnessResult {
            value: Toughness::ratio(s as u64, c as u64),
            witness: (0..n).filter(|&v| set >> v & 1 == 1).collect(),
            components_after: c,
        },
        None => ToughnessResult {
            value: Toughness::Infinite,
            witness: Vec::new(),
            components_after: 1,
        },
    })
}
