use serde::Serialize;

use crate::algebra::{BinaryFieldSpec, FieldSpec};
use crate::error::{Error, Result};

use super::family::{join_bits, FamilySpec};
use super::graph::Graph;

fn check_size(family: &FamilySpec, max_n: u64) -> Result<()> {
    let n = family.vertex_count();
    if n > max_n {
        return Err(Error::SizeLimitExceeded { n, limit: max_n });
    }
    Ok(())
}

/// Materialize any family, subject to the vertex limit.
pub fn build(family: &FamilySpec, max_n: u64) -> Result<Graph> {
    match *family {
        FamilySpec::Euclidean { q, m, a } => build_euclidean(q, m, a, max_n),
        FamilySpec::NonEuclidean { q, sigma, a } => build_non_euclidean(q, sigma, a, max_n),
        FamilySpec::CodeBch { k } => build_code_graph_bch(k, max_n),
        FamilySpec::CodeAlon { k } => build_code_graph_alon(k, max_n),
    }
}

/// Connection set of D_q^m(a) as vertex indices: every v with Q(0, v) = a.
pub fn euclidean_connection_set(q: u32, m: u32, a: u32) -> Vec<u32> {
    let n = (q as u64).pow(m) as u32;
    (0..n)
        .filter(|&v| {
            let mut rest = v;
            let mut sum = 0u64;
            for _ in 0..m {
                let c = (rest % q) as u64;
                sum += c * c;
                rest /= q;
            }
            sum % q as u64 == a as u64
        })
        .collect()
}

fn add_mod_digits(u: u32, s: u32, q: u32, m: u32) -> u32 {
    let (mut u, mut s) = (u, s);
    let mut out = 0;
    let mut place = 1;
    for _ in 0..m {
        out += ((u % q + s % q) % q) * place;
        u /= q;
        s /= q;
        place *= q;
    }
    out
}

/// Cayley graph on (F_q^m, +) with connection set {v : Q(0, v) = a}.
pub fn build_euclidean(q: u32, m: u32, a: u32, max_n: u64) -> Result<Graph> {
    let family = FamilySpec::euclidean(q, m, a)?;
    check_size(&family, max_n)?;
    let conn = euclidean_connection_set(q, m, a);
    let n = family.vertex_count() as u32;
    let lists = (0..n)
        .map(|u| conn.iter().map(|&s| add_mod_digits(u, s, q, m)).collect())
        .collect();
    Graph::from_adjacency(lists, Some(family))
}

/// V_q(sigma, a). For z = x + y√σ the neighbors w = x' + y'√σ satisfy
/// (x - x')^2 = a y y' + σ (y - y')^2, so each y' contributes the square
/// roots of the right-hand side.
pub fn build_non_euclidean(q: u32, sigma: u32, a: u32, max_n: u64) -> Result<Graph> {
    let family = FamilySpec::non_euclidean(q, sigma, a)?;
    check_size(&family, max_n)?;
    let roots = FieldSpec::new(q)?.sqrt_table();
    let (q64, s64, a64) = (q as u64, sigma as u64, a as u64);
    let mut lists = Vec::with_capacity(family.vertex_count() as usize);
    for x in 0..q64 {
        for y in 1..q64 {
            let mut nbrs = Vec::with_capacity(q as usize + 1);
            for y2 in 1..q64 {
                let dy = (y + q64 - y2) % q64;
                let rhs = (a64 * y % q64 * y2 + s64 * dy % q64 * dy) % q64;
                for &t in &roots[rhs as usize] {
                    let x2 = (x + q64 - t as u64) % q64;
                    nbrs.push((x2 * (q64 - 1) + y2 - 1) as u32);
                }
            }
            lists.push(nbrs);
        }
    }
    Graph::from_adjacency(lists, Some(family))
}

/// Connection set {(z, z^3) : z != 0} of the BCH code graph.
pub fn bch_connection_set(k: u32) -> Result<Vec<u32>> {
    let f = BinaryFieldSpec::new(k)?;
    let mut set: Vec<u32> = (1..f.order())
        .map(|z| join_bits(&[z, f.pow(z, 3)], k, 2).expect("reduced") as u32)
        .collect();
    set.sort_unstable();
    Ok(set)
}

/// Construction record for the Alon code graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlonConnection {
    pub k: u32,
    /// Nonzero α whose α^7 has leading bit (coefficient of x^{k-1}) 0.
    pub w0: Vec<u32>,
    /// Nonzero α whose α^7 has leading bit 1.
    pub w1: Vec<u32>,
    /// |W0| * |W1|.
    pub raw_sums: usize,
    /// Sums equal to zero, dropped from the connection set.
    pub zero_sums: usize,
    /// Distinct nonzero sums, sorted; this is the connection set.
    pub sums: Vec<u32>,
}

impl AlonConnection {
    pub fn predicted_degree(&self) -> usize {
        (1 << (self.k - 1)) * ((1 << (self.k - 1)) - 1)
    }

    /// Whether all |W0||W1| sums were distinct and nonzero.
    pub fn sums_distinct(&self) -> bool {
        self.sums.len() == self.raw_sums
    }
}

pub fn alon_connection_set(k: u32) -> Result<AlonConnection> {
    FamilySpec::alon(k)?;
    let f = BinaryFieldSpec::new(k)?;
    let (w0, w1): (Vec<u32>, Vec<u32>) =
        (1..f.order()).partition(|&alpha| f.leading_bit(f.pow(alpha, 7)) == 0);
    let triple = |w: u32| join_bits(&[w, f.pow(w, 3), f.pow(w, 5)], k, 3).expect("reduced") as u32;
    let mut sums = Vec::with_capacity(w0.len() * w1.len());
    let mut zero_sums = 0;
    for &a in &w0 {
        for &b in &w1 {
            let s = triple(a) ^ triple(b);
            if s == 0 {
                zero_sums += 1;
            } else {
                sums.push(s);
            }
        }
    }
    sums.sort_unstable();
    sums.dedup();
    Ok(AlonConnection {
        k,
        raw_sums: w0.len() * w1.len(),
        w0,
        w1,
        zero_sums,
        sums,
    })
}

fn xor_cayley(n: usize, conn: &[u32], family: FamilySpec) -> Result<Graph> {
    let lists = (0..n as u32)
        .map(|u| conn.iter().map(|&s| u ^ s).collect())
        .collect();
    Graph::from_adjacency(lists, Some(family))
}

pub fn build_code_graph_bch(k: u32, max_n: u64) -> Result<Graph> {
    let family = FamilySpec::bch(k)?;
    check_size(&family, max_n)?;
    xor_cayley(family.vertex_count() as usize, &bch_connection_set(k)?, family)
}

/// Builds even when the sum set is smaller than claimed; inspect
/// [`alon_connection_set`] for the discrepancy.
pub fn build_code_graph_alon(k: u32, max_n: u64) -> Result<Graph> {
    let family = FamilySpec::alon(k)?;
    check_size(&family, max_n)?;
    let conn = alon_connection_set(k)?;
    xor_cayley(family.vertex_count() as usize, &conn.sums, family)
}

/// Connection set of an abelian Cayley family, as vertex indices.
pub fn connection_set(family: &FamilySpec) -> Result<Vec<u32>> {
    match *family {
        FamilySpec::Euclidean { q, m, a } => {
            family.validate()?;
            Ok(euclidean_connection_set(q, m, a))
        }
        FamilySpec::CodeBch { k } => bch_connection_set(k),
        FamilySpec::CodeAlon { k } => Ok(alon_connection_set(k)?.sums),
        FamilySpec::NonEuclidean { .. } => Err(Error::UnsupportedFamily(family.to_string())),
    }
}
