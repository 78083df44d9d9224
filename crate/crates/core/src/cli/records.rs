use std::io::Write;
use std::ops::RangeInclusive;
use std::time::Instant;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use crate::enumerate::{enumerate_oracle_with, enumerate_orderly_with, EnumConfig};
use crate::formulas::count_formula;
use crate::Result;

/// How a count was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Formula,
    Oracle,
    Orderly,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::Oracle => "oracle",
            Method::Orderly => "orderly",
        }
    }
}

/// Candidate counters of the level that produced a count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidates {
    #[serde(with = "decimal")]
    pub c1: u64,
    #[serde(with = "decimal")]
    pub c2: u64,
}

/// One `a_k(n)` value. Integers that may exceed 2^53 are written as
/// decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRecord {
    pub k: u32,
    pub n: u32,
    #[serde(with = "decimal")]
    pub count: u64,
    pub method: Method,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub candidates: Option<Candidates>,
    pub elapsed_ms: u64,
}

mod decimal {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &u64, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<u64, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

/// Counts for every `(k, n)` in the ranges, ordered by `k` then `n`.
/// Enumeration methods run once per `k` up to the largest requested `n`.
pub fn compute_records(
    ks: RangeInclusive<u32>,
    ns: RangeInclusive<u32>,
    method: Method,
    cfg: &EnumConfig,
) -> Result<Vec<CountRecord>> {
    let mut out = Vec::new();
    for k in ks {
        let start = Instant::now();
        match method {
            Method::Formula => {
                for n in ns.clone() {
                    let count = count_formula(k, n)?;
                    out.push(CountRecord {
                        k,
                        n,
                        count,
                        method,
                        candidates: None,
                        elapsed_ms: start.elapsed().as_millis() as u64,
                    });
                }
            }
            Method::Oracle | Method::Orderly => {
                let run = if method == Method::Oracle {
                    enumerate_oracle_with(k, *ns.end(), cfg)?
                } else {
                    enumerate_orderly_with(k, *ns.end(), cfg)?
                };
                let elapsed_ms = start.elapsed().as_millis() as u64;
                for n in ns.clone() {
                    let i = n as usize - 1;
                    let stats = run.stats[i];
                    out.push(CountRecord {
                        k,
                        n,
                        count: run.levels[i].len() as u64,
                        method,
                        candidates: Some(Candidates { c1: stats.candidates_naive, c2: stats.candidates_glue }),
                        elapsed_ms,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// CSV with header `k,n,count,method`.
pub fn write_csv<W: Write>(records: &[CountRecord], w: W) -> std::io::Result<()> {
    let mut csv = csv::Writer::from_writer(w);
    csv.write_record(["k", "n", "count", "method"])?;
    for r in records {
        csv.write_record([r.k.to_string(), r.n.to_string(), r.count.to_string(), r.method.as_str().to_string()])?;
    }
    csv.flush()
}

pub fn write_json<W: Write>(records: &[CountRecord], mut w: W) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut w, records)?;
    writeln!(w)
}

pub fn read_json(text: &str) -> serde_json::Result<Vec<CountRecord>> {
    serde_json::from_str(text)
}
