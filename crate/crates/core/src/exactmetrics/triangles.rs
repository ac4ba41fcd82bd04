use rayon::prelude::*;

use crate::graphs::Graph;

fn count_common_above(a: &[u32], b: &[u32], floor: u32) -> u64 {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += u64::from(a[i] > floor);
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Exact triangle count: for every edge u < v, common neighbors w > v.
pub fn triangle_count(g: &Graph) -> u64 {
    (0..g.n())
        .into_par_iter()
        .map(|u| {
            let nu = g.neighbors(u);
            nu.iter()
                .filter(|&&v| v as usize > u)
                .map(|&v| count_common_above(nu, g.neighbors(v as usize), v))
                .sum::<u64>()
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{build_code_graph_bch, build_euclidean};

    fn brute(g: &Graph) -> u64 {
        let n = g.n();
        let mut t = 0;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if g.has_edge(a, b).unwrap() && g.has_edge(b, c).unwrap() && g.has_edge(a, c).unwrap() {
                        t += 1;
                    }
                }
            }
        }
        t
    }

    #[test]
    fn counts() {
        assert_eq!(triangle_count(&Graph::complete(5)), 10);
        assert_eq!(triangle_count(&Graph::cycle(5)), 0);
        let d7 = build_euclidean(7, 2, 1, 10_000).unwrap();
        assert_eq!(triangle_count(&d7), 0);
        let d13 = build_euclidean(13, 2, 1, 10_000).unwrap();
        let t13 = triangle_count(&d13);
        assert!(t13 > 0);
        assert_eq!(t13, brute(&d13));
        let d3 = build_euclidean(3, 2, 1, 10_000).unwrap();
        assert_eq!(triangle_count(&d3), brute(&d3));
        assert_eq!(triangle_count(&d3), 6);
        assert_eq!(triangle_count(&build_code_graph_bch(3, 10_000).unwrap()), 0);
        assert_eq!(triangle_count(&build_code_graph_bch(4, 10_000).unwrap()), 0);
    }
}
