use std::io::{BufRead, Write};
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

use super::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dimacs,
    EdgeJsonl,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dimacs" => Ok(ExportFormat::Dimacs),
            "jsonl" | "edge-jsonl" => Ok(ExportFormat::EdgeJsonl),
            other => Err(Error::BadParameter(format!("unknown export format {other:?}"))),
        }
    }
}

#[derive(Serialize)]
struct EdgeRecord {
    u: usize,
    v: usize,
    pu: Vec<u32>,
    pv: Vec<u32>,
}

/// DIMACS: `p edge n m` then `e u v` (1-based, u < v, lexicographic).
/// Edge-JSONL: one `{"u","v","pu","pv"}` object per edge, 0-based indices
/// with decoded domain points.
pub fn export_graph<W: Write>(g: &Graph, format: ExportFormat, mut out: W) -> Result<()> {
    match format {
        ExportFormat::Dimacs => {
            writeln!(out, "p edge {} {}", g.n(), g.edge_count())?;
            for (u, v) in g.edges() {
                writeln!(out, "e {} {}", u + 1, v + 1)?;
            }
        }
        ExportFormat::EdgeJsonl => {
            for (u, v) in g.edges() {
                let rec = EdgeRecord {
                    u,
                    v,
                    pu: g.decode(u),
                    pv: g.decode(v),
                };
                serde_json::to_writer(&mut out, &rec)?;
                out.write_all(b"\n")?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

/// Parse a DIMACS edge file into a family-less graph. `c` lines are skipped.
pub fn read_dimacs<R: BufRead>(input: R) -> Result<Graph> {
    let bad = |line: usize, msg: &str| Error::BadParameter(format!("dimacs line {line}: {msg}"));
    let mut n = None;
    let mut edges = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let mut parts = line.split_whitespace();
        match parts.next() {
            None | Some("c") => {}
            Some("p") => {
                let nums: Vec<usize> = parts
                    .skip(1)
                    .map(|t| t.parse().map_err(|_| bad(i + 1, "bad header")))
                    .collect::<Result<_>>()?;
                n = Some(*nums.first().ok_or_else(|| bad(i + 1, "missing vertex count"))?);
            }
            Some("e") => {
                let ends: Vec<usize> = parts
                    .map(|t| t.parse().map_err(|_| bad(i + 1, "bad endpoint")))
                    .collect::<Result<_>>()?;
                match ends[..] {
                    [u, v] if u >= 1 && v >= 1 => edges.push((u - 1, v - 1)),
                    _ => return Err(bad(i + 1, "edge needs two 1-based endpoints")),
                }
            }
            Some(_) => return Err(bad(i + 1, "unknown line type")),
        }
    }
    let n = n.ok_or_else(|| bad(0, "no problem line"))?;
    Graph::from_edges(n, &edges)
}
