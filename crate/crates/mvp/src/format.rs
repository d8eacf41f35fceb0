//! The on-disk JSON form of a chamber-weight datum.
//!
//! ```json
//! {
//!   "cartan": [[2, -1], [-1, 2]],
//!   "labels": "A",
//!   "entries": [
//!     { "key": "L1:1,0", "value": -1, "pretty": "1" },
//!     ...
//!   ]
//! }
//! ```
//!
//! Keys are "L<level>:<c1,...,cr>" with a 1-based level and the weight in
//! fundamental coordinates. The entries must cover every chamber weight of
//! the Cartan matrix exactly once. `labels` selects the classical chart
//! ("A", "C", or "none"); `pretty` names are optional on input, checked
//! against the chart when present, and forbidden for "none".

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use mv_polytopes::bz::BZDatum;
use mv_polytopes::{CartanMatrix, Classical, Error, Result, RootSystem};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BZFile {
    pub cartan: Vec<Vec<i64>>,
    pub labels: String,
    pub entries: Vec<BZEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BZEntry {
    pub key: String,
    pub value: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pretty: Option<String>,
}

fn parse_key(key: &str, rank: usize) -> Result<(usize, Vec<i64>)> {
    let bad = || Error::Parse(format!("malformed key {key:?}"));
    let rest = key.strip_prefix('L').ok_or_else(bad)?;
    let (level, coords) = rest.split_once(':').ok_or_else(bad)?;
    let level: usize = level.parse().map_err(|_| bad())?;
    if level == 0 {
        return Err(bad());
    }
    let coords: Vec<i64> = coords
        .split(',')
        .map(|c| c.parse().map_err(|_| bad()))
        .collect::<Result<_>>()?;
    if coords.len() != rank {
        return Err(Error::Parse(format!(
            "key {key:?} needs {rank} coordinates"
        )));
    }
    Ok((level - 1, coords))
}

pub fn weight_key(level: usize, weight: &[i64]) -> String {
    let coords: Vec<String> = weight.iter().map(|c| c.to_string()).collect();
    format!("L{}:{}", level + 1, coords.join(","))
}

/// Build the root system a file describes. Chart checks happen here; the
/// entries are not touched.
pub fn system_from_file(file: &BZFile) -> Result<Arc<RootSystem>> {
    let cartan = CartanMatrix::new(file.cartan.clone())?;
    let rank = cartan.rank();
    let classical = match file.labels.as_str() {
        "A" => Some(Classical::A(rank + 1)),
        "C" => Some(Classical::C(rank)),
        "none" => None,
        other => {
            return Err(Error::Parse(format!(
                "labels must be \"A\", \"C\" or \"none\", got {other:?}"
            )))
        }
    };
    RootSystem::new(cartan, classical)
}

/// Parse a file into a datum over its own root system.
pub fn datum_from_file(file: &BZFile) -> Result<(Arc<RootSystem>, BZDatum)> {
    let sys = system_from_file(file)?;
    let n = sys.gamma.len();
    let mut m: Vec<Option<i64>> = vec![None; n];
    for entry in &file.entries {
        let (level, weight) = parse_key(&entry.key, sys.rank())?;
        let g = sys.gamma.lookup(&weight).ok_or_else(|| {
            Error::Parse(format!("key {:?} is not a chamber weight", entry.key))
        })?;
        if sys.gamma.items[g].level != level {
            return Err(Error::Parse(format!(
                "key {:?} has level {}, expected {}",
                entry.key,
                level + 1,
                sys.gamma.items[g].level + 1
            )));
        }
        if m[g].is_some() {
            return Err(Error::Parse(format!("duplicate key {:?}", entry.key)));
        }
        if let Some(pretty) = &entry.pretty {
            if file.labels == "none" {
                return Err(Error::Parse(
                    "pretty names need a classical chart (labels \"A\" or \"C\")".into(),
                ));
            }
            let expect = sys.datum.pretty_weight(&weight);
            if expect.as_deref() != Some(pretty.as_str()) {
                return Err(Error::Parse(format!(
                    "pretty name {pretty:?} does not match key {:?}",
                    entry.key
                )));
            }
        }
        m[g] = Some(entry.value);
    }
    let mut values = Vec::with_capacity(n);
    for (g, v) in m.into_iter().enumerate() {
        match v {
            Some(v) => values.push(v),
            None => {
                return Err(Error::Parse(format!(
                    "missing entry for chamber weight {}",
                    sys.gamma_name(g)
                )))
            }
        }
    }
    let bz = BZDatum::new(Arc::clone(&sys), values)?;
    Ok((sys, bz))
}

/// Serialize a datum, entries in canonical chamber-weight order.
pub fn file_from_datum(bz: &BZDatum) -> BZFile {
    let sys = &bz.sys;
    let labels = match sys.datum.classical() {
        Some(Classical::A(_)) => "A",
        Some(Classical::C(_)) => "C",
        None => "none",
    };
    let entries = sys
        .gamma
        .items
        .iter()
        .enumerate()
        .map(|(g, cw)| BZEntry {
            key: weight_key(cw.level, &cw.weight),
            value: bz.value(g),
            pretty: sys.datum.pretty_weight(&cw.weight),
        })
        .collect();
    BZFile {
        cartan: sys.datum.cartan().rows().to_vec(),
        labels: labels.to_string(),
        entries,
    }
}

/// Canonical rendering: two-space pretty JSON plus a trailing newline.
pub fn render(file: &BZFile) -> String {
    let mut out = serde_json::to_string_pretty(file).expect("serializable");
    out.push('\n');
    out
}

pub fn parse(text: &str) -> Result<BZFile> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad JSON: {e}")))
}
