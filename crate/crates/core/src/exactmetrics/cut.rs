use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::Graph;

use super::toughness::adjacency_masks;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutResult {
    /// bip(G): max |δS| over |S| <= n/2.
    pub bip: usize,
    pub bip_side: Vec<usize>,
    /// min |δS| over |S| = floor(n/2).
    pub bisection: usize,
    pub bisection_side: Vec<usize>,
}

/// |δS|: edges with exactly one end in `set`.
pub fn cut_size(g: &Graph, set: &[usize]) -> usize {
    let mut inside = vec![false; g.n()];
    for &v in set {
        inside[v] = true;
    }
    set.iter()
        .map(|&u| g.neighbors(u).iter().filter(|&&w| !inside[w as usize]).count())
        .sum()
}

/// Exact bip and bisection width by enumerating every S with |S| <= n/2.
/// Ties keep the numerically smallest mask.
pub fn exact_max_cut_and_bisection(g: &Graph, max_n: usize) -> Result<CutResult> {
    let n = g.n();
    if n > max_n || n > 30 || n < 2 {
        return Err(Error::TooLarge {
            what: "exact cut enumeration",
            n,
            limit: max_n.min(30),
        });
    }
    let adj = adjacency_masks(g);
    let half = n / 2;
    let (mut bip, mut bip_mask) = (0usize, 0u32);
    let (mut bis, mut bis_mask) = (usize::MAX, 0u32);
    for set in 0u32..1 << n {
        let size = set.count_ones() as usize;
        if size > half {
            continue;
        }
        let mut cut = 0;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            cut += (adj[v] & !set).count_ones() as usize;
        }
        if cut > bip {
            bip = cut;
            bip_mask = set;
        }
        if size == half && cut < bis {
            bis = cut;
            bis_mask = set;
        }
    }
    let members = |m: u32| (0..n).filter(|&v| m >> v & 1 == 1).collect();
    Ok(CutResult {
        bip,
        bip_side: members(bip_mask),
        bisection: bis,
        bisection_side: members(bis_mask),
    })
}
