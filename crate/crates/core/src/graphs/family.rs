use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{BinaryFieldSpec, FieldSpec};
use crate::error::{Error, Result};

/// Parameters identifying one graph. All field parameters are canonical
/// residues in `0..q`.
///
/// The quadrance graph is written D_q(a) (also Q_q(a)); the non-Euclidean
/// graph V_q(sigma, a) (also P_q(sigma, a)).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum FamilySpec {
    /// D_q^m(a) on F_q^m: X ~ Y iff Q(X, Y) = a.
    Euclidean { q: u32, m: u32, a: u32 },
    /// V_q(sigma, a) on H_q: z ~ w iff d(z, w) = a.
    #[serde(rename = "noneuclidean")]
    NonEuclidean { q: u32, sigma: u32, a: u32 },
    /// G_k on GF(2)^{2k}: u ~ v iff u + v = (z, z^3), z != 0.
    #[serde(rename = "bch")]
    CodeBch { k: u32 },
    /// G_n on GF(2)^{3k}: u + v = (w0, w0^3, w0^5) + (w1, w1^3, w1^5).
    #[serde(rename = "alon")]
    CodeAlon { k: u32 },
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Euclidean { q, m: 2, a } => write!(f, "D_{q}({a})"),
            FamilySpec::Euclidean { q, m, a } => write!(f, "D_{q}^{m}({a})"),
            FamilySpec::NonEuclidean { q, sigma, a } => write!(f, "V_{q}({sigma},{a})"),
            FamilySpec::CodeBch { k } => write!(f, "BCH_{k}"),
            FamilySpec::CodeAlon { k } => write!(f, "Alon_{k}"),
        }
    }
}

fn residue(name: &str, v: u32, q: u32) -> Result<()> {
    if v >= q {
        return Err(Error::BadParameter(format!("{name} = {v} is not a residue mod {q}")));
    }
    Ok(())
}

impl FamilySpec {
    pub fn euclidean(q: u32, m: u32, a: u32) -> Result<Self> {
        let f = FamilySpec::Euclidean { q, m, a };
        f.validate()?;
        Ok(f)
    }

    pub fn non_euclidean(q: u32, sigma: u32, a: u32) -> Result<Self> {
        let f = FamilySpec::NonEuclidean { q, sigma, a };
        f.validate()?;
        Ok(f)
    }

    pub fn bch(k: u32) -> Result<Self> {
        let f = FamilySpec::CodeBch { k };
        f.validate()?;
        Ok(f)
    }

    pub fn alon(k: u32) -> Result<Self> {
        let f = FamilySpec::CodeAlon { k };
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::Euclidean { q, m, a } => {
                FieldSpec::new(q)?;
                if !(2..=32).contains(&m) {
                    return Err(Error::BadParameter(format!("dimension m = {m} must be >= 2")));
                }
                residue("a", a, q)?;
                if a == 0 {
                    return Err(Error::BadParameter("a = 0 would make every vertex a loop".into()));
                }
                Ok(())
            }
            FamilySpec::NonEuclidean { q, sigma, a } => {
                let f = FieldSpec::new(q)?;
                residue("sigma", sigma, q)?;
                residue("a", a, q)?;
                if f.elem(sigma as u64).quadratic_character() != -1 {
                    return Err(Error::BadSigma { q, sigma });
                }
                if a == 0 || f.elem(a as u64) == f.elem(4 * sigma as u64) {
                    return Err(Error::DegenerateDistance { a, sigma });
                }
                Ok(())
            }
            FamilySpec::CodeBch { k } => BinaryFieldSpec::new(k).map(|_| ()),
            FamilySpec::CodeAlon { k } => {
                BinaryFieldSpec::new(k)?;
                if k % 3 == 0 {
                    return Err(Error::BadParameter(format!("k = {k} is divisible by 3")));
                }
                Ok(())
            }
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            FamilySpec::Euclidean { .. } => "euclidean",
            FamilySpec::NonEuclidean { .. } => "noneuclidean",
            FamilySpec::CodeBch { .. } => "bch",
            FamilySpec::CodeAlon { .. } => "alon",
        }
    }

    /// The field size q, or 2^k for code graphs.
    pub fn q(&self) -> u32 {
        match *self {
            FamilySpec::Euclidean { q, .. } | FamilySpec::NonEuclidean { q, .. } => q,
            FamilySpec::CodeBch { k } | FamilySpec::CodeAlon { k } => 1 << k,
        }
    }

    /// Sort key for report rows: (family, q, a).
    pub fn row_key(&self) -> (u8, u32, u32, u32) {
        match *self {
            FamilySpec::Euclidean { q, m, a } => (0, q, a, m),
            FamilySpec::NonEuclidean { q, sigma, a } => (1, q, a, sigma),
            FamilySpec::CodeBch { k } => (2, 1 << k, 0, k),
            FamilySpec::CodeAlon { k } => (3, 1 << k, 0, k),
        }
    }

    pub fn vertex_count(&self) -> u64 {
        match *self {
            FamilySpec::Euclidean { q, m, .. } => (q as u64).saturating_pow(m),
            FamilySpec::NonEuclidean { q, .. } => q as u64 * (q as u64 - 1),
            FamilySpec::CodeBch { k } => 1 << (2 * k),
            FamilySpec::CodeAlon { k } => 1 << (3 * k),
        }
    }

    /// Degree as predicted by the closed-form formulas. For Alon graphs
    /// this is the claimed 2^{k-1}(2^{k-1}-1), which the builder verifies.
    pub fn predicted_degree(&self) -> u64 {
        match *self {
            FamilySpec::Euclidean { q, m, a } => euclidean_degree(q, m, a),
            FamilySpec::NonEuclidean { q, .. } => q as u64 + 1,
            FamilySpec::CodeBch { k } => (1 << k) - 1,
            FamilySpec::CodeAlon { k } => (1 << (k - 1)) * ((1 << (k - 1)) - 1),
        }
    }

    /// Domain point of vertex `v`.
    pub fn decode(&self, v: usize) -> Vec<u32> {
        match *self {
            FamilySpec::Euclidean { q, m, .. } => {
                let mut rest = v as u64;
                (0..m)
                    .map(|_| {
                        let c = (rest % q as u64) as u32;
                        rest /= q as u64;
                        c
                    })
                    .collect()
            }
            FamilySpec::NonEuclidean { q, .. } => {
                let v = v as u32;
                vec![v / (q - 1), v % (q - 1) + 1]
            }
            FamilySpec::CodeBch { k } => split_bits(v as u32, k, 2),
            FamilySpec::CodeAlon { k } => split_bits(v as u32, k, 3),
        }
    }

    /// Inverse of [`FamilySpec::decode`]; `None` for points outside the vertex set.
    pub fn encode(&self, point: &[u32]) -> Option<usize> {
        match *self {
            FamilySpec::Euclidean { q, m, .. } => {
                if point.len() != m as usize || point.iter().any(|&c| c >= q) {
                    return None;
                }
                Some(point.iter().rev().fold(0usize, |acc, &c| acc * q as usize + c as usize))
            }
            FamilySpec::NonEuclidean { q, .. } => match *point {
                [x, y] if x < q && (1..q).contains(&y) => {
                    Some(x as usize * (q as usize - 1) + y as usize - 1)
                }
                _ => None,
            },
            FamilySpec::CodeBch { k } => join_bits(point, k, 2),
            FamilySpec::CodeAlon { k } => join_bits(point, k, 3),
        }
    }
}

/// Code-graph codec: component 0 occupies the most significant k bits.
pub(crate) fn join_bits(parts: &[u32], k: u32, count: usize) -> Option<usize> {
    if parts.len() != count || parts.iter().any(|&c| c >> k != 0) {
        return None;
    }
    Some(parts.iter().fold(0usize, |acc, &c| (acc << k) | c as usize))
}

fn split_bits(v: u32, k: u32, count: usize) -> Vec<u32> {
    let mask = (1 << k) - 1;
    (0..count)
        .rev()
        .map(|i| (v >> (k * i as u32)) & mask)
        .collect()
}

/// Number of v in F_q^m with Q(0, v) = a, a != 0:
/// q^{m-1} + chi((-1)^{(m-1)/2} a) q^{(m-1)/2} for odd m,
/// q^{m-1} - chi((-1)^{m/2}) q^{(m-2)/2} for even m.
pub fn euclidean_degree(q: u32, m: u32, a: u32) -> u64 {
    let f = FieldSpec::new(q).expect("validated prime");
    let qq = q as i64;
    let minus_one_pow = |e: u32| if e % 2 == 0 { f.one() } else { -f.one() };
    let value = if m % 2 == 1 {
        let chi = (minus_one_pow((m - 1) / 2) * f.elem(a as u64)).quadratic_character();
        qq.pow(m - 1) + chi as i64 * qq.pow((m - 1) / 2)
    } else {
        let chi = minus_one_pow(m / 2).quadratic_character();
        qq.pow(m - 1) - chi as i64 * qq.pow((m - 2) / 2)
    };
    value as u64
}

/// The same count with the character evaluated at (-1)^{(m-1)/2} alone, as
/// the unit-quadrance case is usually stated. Agrees with
/// [`euclidean_degree`] for even m and for square a.
pub fn euclidean_degree_unit_form(q: u32, m: u32) -> u64 {
    euclidean_degree(q, m, 1)
}
