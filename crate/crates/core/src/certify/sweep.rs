use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{odd_primes, FieldSpec};
use crate::error::Result;
use crate::graphs::FamilySpec;
use crate::limits::Limits;

use super::certificate::{Certificate, Status};
use super::suites::{certify_family, Measured};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    Euclidean,
    #[serde(rename = "noneuclidean")]
    NonEuclidean,
    Bch,
    Alon,
}

/// Keep q with q mod `modulus` == `remainder`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Residue {
    pub modulus: u32,
    pub remainder: u32,
}

fn default_q_min() -> u32 {
    3
}

fn default_families() -> Vec<FamilyKind> {
    vec![FamilyKind::Euclidean]
}

fn default_m() -> u32 {
    2
}

fn default_k_min() -> u32 {
    2
}

fn default_k_max() -> u32 {
    4
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    #[serde(default = "default_q_min")]
    pub q_min: u32,
    #[serde(default)]
    pub q_max: u32,
    #[serde(default = "default_families")]
    pub families: Vec<FamilyKind>,
    #[serde(default)]
    pub residue: Option<Residue>,
    /// Dimension for Euclidean graphs.
    #[serde(default = "default_m")]
    pub m: u32,
    /// Quadrance / distance; defaults to 1 (Euclidean) and 2 sigma (non-Euclidean).
    #[serde(default)]
    pub a: Option<u32>,
    /// Defaults to the smallest non-square mod q.
    #[serde(default)]
    pub sigma: Option<u32>,
    #[serde(default = "default_k_min")]
    pub k_min: u32,
    #[serde(default = "default_k_max")]
    pub k_max: u32,
    #[serde(default)]
    pub limits: Limits,
}

impl SweepConfig {
    /// Primes in [q_min, q_max] passing the residue filter.
    pub fn primes(&self) -> Vec<u32> {
        odd_primes(self.q_min, self.q_max)
            .filter(|q| self.residue.map_or(true, |r| r.modulus != 0 && q % r.modulus == r.remainder))
            .collect()
    }
}

/// One planned graph: either a valid family or the reason it is not one.
#[derive(Debug, Clone)]
struct Planned {
    key: (u8, u32, u32, u32),
    stem: String,
    family: std::result::Result<FamilySpec, String>,
    defaults: Vec<String>,
}

fn plan(config: &SweepConfig) -> Vec<Planned> {
    let mut out = Vec::new();
    let mut kinds = config.families.clone();
    kinds.sort();
    kinds.dedup();
    for kind in kinds {
        match kind {
            FamilyKind::Euclidean => {
                for q in config.primes() {
                    let mut defaults = Vec::new();
                    let a = config.a.map_or_else(
                        || {
                            defaults.push("a=1".to_string());
                            1
                        },
                        |a| a % q,
                    );
                    out.push(Planned {
                        key: (0, q, a, config.m),
                        stem: format!("euclidean_q{q}_m{}_a{a}", config.m),
                        family: FamilySpec::euclidean(q, config.m, a).map_err(|e| e.to_string()),
                        defaults,
                    });
                }
            }
            FamilyKind::NonEuclidean => {
                for q in config.primes() {
                    let mut defaults = Vec::new();
                    let f = FieldSpec::new(q).expect("odd prime");
                    let sigma = config.sigma.map_or_else(
                        || {
                            defaults.push("sigma=smallest non-square".to_string());
                            f.find_nonsquare().value()
                        },
                        |s| s % q,
                    );
                    let a = config.a.map_or_else(
                        || {
                            defaults.push("a=2 sigma".to_string());
                            2 * sigma % q
                        },
                        |a| a % q,
                    );
                    out.push(Planned {
                        key: (1, q, a, sigma),
                        stem: format!("noneuclidean_q{q}_s{sigma}_a{a}"),
                        family: FamilySpec::non_euclidean(q, sigma, a).map_err(|e| e.to_string()),
                        defaults,
                    });
                }
            }
            FamilyKind::Bch | FamilyKind::Alon => {
                for k in config.k_min..=config.k_max {
                    let (tag, family) = if kind == FamilyKind::Bch {
                        (2, FamilySpec::bch(k))
                    } else {
                        // Alon graphs are only defined for 3 not dividing k.
                        if k % 3 == 0 {
                            continue;
                        }
                        (3, FamilySpec::alon(k))
                    };
                    let name = if tag == 2 { "bch" } else { "alon" };
                    out.push(Planned {
                        key: (tag, 1 << k.min(31), 0, k),
                        stem: format!("{name}_k{k}"),
                        family: family.map_err(|e| e.to_string()),
                        defaults: Vec::new(),
                    });
                }
            }
        }
    }
    out.sort_by_key(|p| p.key);
    out
}

/// One CSV line of the sweep summary. Column order is frozen.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub family: String,
    pub label: String,
    pub q: Option<u32>,
    pub m: Option<u32>,
    pub sigma: Option<u32>,
    pub a: Option<u32>,
    pub k: Option<u32>,
    pub n: Option<usize>,
    pub d: Option<usize>,
    pub girth: Option<String>,
    pub diameter: Option<String>,
    pub triangles: Option<u64>,
    pub lambda: Option<f64>,
    pub theta2: Option<f64>,
    pub theta_n: Option<f64>,
    pub toughness_lower: Option<f64>,
    pub independence_upper: Option<f64>,
    pub bisection_estimate: Option<f64>,
    pub bip_upper: Option<f64>,
    pub chromatic_lower: Option<f64>,
    pub exact_alpha: Option<usize>,
    pub alpha_is_exact: Option<bool>,
    pub exact_toughness: Option<String>,
    pub exact_bip: Option<usize>,
    pub exact_bisection: Option<usize>,
    pub ramsey_t: Option<u64>,
    pub claims_pass: usize,
    pub claims_fail: usize,
    pub claims_recorded: usize,
    pub status: Status,
    pub error: Option<String>,
}

impl SummaryRow {
    fn new(planned: &Planned, cert: &Certificate, m: Option<&Measured>) -> Self {
        let (kind, q, dim, sigma, a, k) = match planned.family {
            Ok(FamilySpec::Euclidean { q, m, a }) => ("euclidean", Some(q), Some(m), None, Some(a), None),
            Ok(FamilySpec::NonEuclidean { q, sigma, a }) => ("noneuclidean", Some(q), None, Some(sigma), Some(a), None),
            Ok(FamilySpec::CodeBch { k }) => ("bch", None, None, None, None, Some(k)),
            Ok(FamilySpec::CodeAlon { k }) => ("alon", None, None, None, None, Some(k)),
            Err(_) => (["euclidean", "noneuclidean", "bch", "alon"][planned.key.0 as usize], None, None, None, None, None),
        };
        let count = |s| cert.claims.iter().filter(|c| c.status == s).count();
        let spec = m.and_then(|m| m.spectrum.as_ref().ok());
        let bounds = spec.and_then(|s| crate::spectral::SpectralBounds::from_summary(s).ok());
        SummaryRow {
            family: kind.into(),
            label: cert.subject.clone(),
            q,
            m: dim,
            sigma,
            a,
            k,
            n: m.map(|m| m.graph.n()),
            d: m.and_then(|m| m.metrics.degree),
            girth: m.map(|m| m.metrics.girth.to_string()),
            diameter: m.map(|m| m.metrics.diameter.to_string()),
            triangles: m.map(|m| m.metrics.triangles),
            lambda: spec.map(|s| s.lambda),
            theta2: spec.map(|s| s.theta2),
            theta_n: spec.map(|s| s.theta_n),
            toughness_lower: bounds.as_ref().map(|b| b.toughness_lower),
            independence_upper: bounds.as_ref().map(|b| b.independence_upper),
            bisection_estimate: bounds.as_ref().map(|b| b.bisection_lower),
            bip_upper: bounds.as_ref().map(|b| b.bip_upper),
            chromatic_lower: bounds.as_ref().map(|b| b.chromatic_lower),
            exact_alpha: m.and_then(|m| m.independence.as_ref()).map(|r| r.size),
            alpha_is_exact: m.and_then(|m| m.independence.as_ref()).map(|r| r.exact),
            exact_toughness: m.and_then(|m| m.toughness.as_ref()).map(|t| t.value.to_string()),
            exact_bip: m.and_then(|m| m.cut.as_ref()).map(|c| c.bip),
            exact_bisection: m.and_then(|m| m.cut.as_ref()).map(|c| c.bisection),
            ramsey_t: cert.ramsey.as_ref().map(|r| r.t),
            claims_pass: count(Status::Pass),
            claims_fail: count(Status::Fail),
            claims_recorded: count(Status::Recorded),
            status: cert.status,
            error: cert.error.clone(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepEntry {
    /// File stem of the certificate, e.g. `euclidean_q7_m2_a1`.
    pub stem: String,
    pub certificate: Certificate,
    pub row: SummaryRow,
}

/// Runs every planned graph (in parallel) and returns the results in row
/// order. Failures become `fail` rows, never errors.
pub fn sweep(config: &SweepConfig) -> Vec<SweepEntry> {
    plan(config)
        .into_par_iter()
        .map(|p| {
            let (cert, measured) = match &p.family {
                Ok(f) => match certify_family(f, &config.limits) {
                    Ok((c, m)) => (c, Some(m)),
                    Err(e) => (Certificate::failed("sweep", f.to_string(), Some(*f), e.to_string()), None),
                },
                Err(e) => (Certificate::failed("sweep", p.stem.clone(), None, e.clone()), None),
            };
            let mut cert = cert;
            cert.defaults = p.defaults.clone();
            let row = SummaryRow::new(&p, &cert, measured.as_ref());
            SweepEntry { stem: p.stem, certificate: cert, row }
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct SweepReport {
    pub entries: Vec<SweepEntry>,
    pub summary_path: PathBuf,
    pub certificate_paths: Vec<PathBuf>,
}

impl SweepReport {
    pub fn any_failed(&self) -> bool {
        self.entries.iter().any(|e| e.certificate.status == Status::Fail)
    }
}

pub const SUMMARY_FILE: &str = "summary.csv";

/// Writes `<stem>.json` per graph and `summary.csv` into `out_dir`.
pub fn run_sweep(config: &SweepConfig, out_dir: &Path) -> Result<SweepReport> {
    let entries = sweep(config);
    fs::create_dir_all(out_dir)?;
    let mut certificate_paths = Vec::with_capacity(entries.len());
    for e in &entries {
        let path = out_dir.join(format!("{}.json", e.stem));
        let mut json = serde_json::to_string_pretty(&e.certificate)?;
        json.push('\n');
        fs::write(&path, json)?;
        certificate_paths.push(path);
    }
    let summary_path = out_dir.join(SUMMARY_FILE);
    write_summary(&entries, csv::Writer::from_path(&summary_path)?)?;
    Ok(SweepReport { entries, summary_path, certificate_paths })
}

pub fn write_summary<W: std::io::Write>(entries: &[SweepEntry], mut w: csv::Writer<W>) -> Result<()> {
    for e in entries {
        w.serialize(&e.row)?;
    }
    if entries.is_empty() {
        w.write_record(SUMMARY_COLUMNS)?;
    }
    w.flush()?;
    Ok(())
}

pub const SUMMARY_COLUMNS: [&str; 31] = [
    "family",
    "label",
    "q",
    "m",
    "sigma",
    "a",
    "k",
    "n",
    "d",
    "girth",
    "diameter",
    "triangles",
    "lambda",
    "theta2",
    "theta_n",
    "toughness_lower",
    "independence_upper",
    "bisection_estimate",
    "bip_upper",
    "chromatic_lower",
    "exact_alpha",
    "alpha_is_exact",
    "exact_toughness",
    "exact_bip",
    "exact_bisection",
    "ramsey_t",
    "claims_pass",
    "claims_fail",
    "claims_recorded",
    "status",
    "error",
];

#[cfg(test)]
mod tests {
    use super::*;

    fn config(json: &str) -> SweepConfig {
        serde_json::from_str(json).unwrap()
    }

    #[test]
    fn residue_filters() {
        let c = config(r#"{"q_min": 7, "q_max": 31, "residue": {"modulus": 12, "remainder": 7}}"#);
        assert_eq!(c.primes(), vec![7, 19, 31]);
        let c = config(r#"{"q_min": 17, "q_max": 29, "residue": {"modulus": 12, "remainder": 5}, "families": ["noneuclidean"]}"#);
        assert_eq!(c.primes(), vec![17, 29]);
        assert!(serde_json::from_str::<SweepConfig>(r#"{"q_max": 5, "bogus": 1}"#).is_err());
    }

    #[test]
    fn plan_order_and_defaults() {
        let c = config(r#"{"q_min": 3, "q_max": 7, "families": ["bch", "noneuclidean", "euclidean"], "k_min": 2, "k_max": 3}"#);
        let p = plan(&c);
        let stems: Vec<&str> = p.iter().map(|p| p.stem.as_str()).collect();
        assert_eq!(
            stems,
            [
                "euclidean_q3_m2_a1",
                "euclidean_q5_m2_a1",
                "euclidean_q7_m2_a1",
                "noneuclidean_q3_s2_a1",
                "noneuclidean_q5_s2_a4",
                "noneuclidean_q7_s3_a6",
                "bch_k2",
                "bch_k3"
            ]
        );
        assert_eq!(p[0].defaults, ["a=1"]);
        let c = config(r#"{"q_max": 13, "families": ["alon"], "k_min": 2, "k_max": 6}"#);
        let stems: Vec<String> = plan(&c).into_iter().map(|p| p.stem).collect();
        assert_eq!(stems, ["alon_k2", "alon_k4", "alon_k5"]);
    }

    #[test]
    fn failures_become_rows() {
        let c = config(r#"{"q_min": 5, "q_max": 7, "families": ["noneuclidean"], "sigma": 1}"#);
        let entries = sweep(&c);
        assert_eq!(entries.len(), 2);
        assert!(entries.iter().all(|e| e.certificate.status == Status::Fail && e.row.error.is_some()));
        let mut limits = Limits::default();
        limits.max_n = 10;
        let c = SweepConfig { limits, ..config(r#"{"q_min": 3, "q_max": 5}"#) };
        let entries = sweep(&c);
        assert!(entries[0].row.error.is_none());
        assert!(entries[1].row.error.as_deref().unwrap().contains("25"));
    }

    #[test]
    fn writes_files() {
        let dir = tempfile::tempdir().unwrap();
        let c = config(r#"{"q_min": 3, "q_max": 7, "families": ["euclidean", "bch"], "k_min": 2, "k_max": 2}"#);
        let report = run_sweep(&c, dir.path()).unwrap();
        assert_eq!(report.entries.len(), 4);
        let text = fs::read_to_string(&report.summary_path).unwrap();
        let header = text.lines().next().unwrap();
        assert_eq!(header, SUMMARY_COLUMNS.join(","));
        assert_eq!(text.lines().count(), 5);
        for p in &report.certificate_paths {
            let cert: Certificate = serde_json::from_str(&fs::read_to_string(p).unwrap()).unwrap();
            assert!(cert.recheck().is_empty(), "{p:?}");
        }
        let d7 = &report.entries[2];
        assert_eq!(d7.stem, "euclidean_q7_m2_a1");
        assert_eq!(d7.row.exact_alpha, Some(14));
        assert_eq!(d7.row.ramsey_t, Some(15));
    }
}
