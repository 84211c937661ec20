//! Loading loops from files or inline descriptions, and reading caps.

use std::fs;
use std::path::Path;

use loupe::ln_family::{build_ln, LnParams};
use loupe::loop_core::{cyclic_group, direct_product, symmetric_group, validate_loop};
use loupe::{Caps, FiniteLoop};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// The JSON loop document.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LoopDoc {
    pub size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub table: Vec<Vec<usize>>,
}

impl LoopDoc {
    pub fn from_loop(l: &FiniteLoop) -> Self {
        LoopDoc { size: l.order(), labels: l.labels().map(<[String]>::to_vec), table: l.rows() }
    }

    pub fn into_loop(self) -> Result<FiniteLoop, CliError> {
        if self.table.len() != self.size {
            return Err(CliError::usage(format!("size is {} but the table has {} rows", self.size, self.table.len())));
        }
        Ok(validate_loop(&self.table, self.labels)?)
    }
}

pub fn load_file(path: &Path) -> Result<FiniteLoop, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    parse_loop_text(&text).map_err(|e| CliError::usage(format!("{}: {}", path.display(), e.message)))
}

/// JSON when the first non-blank character is `{`, headerless CSV otherwise.
pub fn parse_loop_text(text: &str) -> Result<FiniteLoop, CliError> {
    if text.trim_start().starts_with('{') {
        let doc: LoopDoc = serde_json::from_str(text)
            .map_err(|e| CliError::usage(format!("line {}, column {}: {e}", e.line(), e.column())))?;
        return doc.into_loop();
    }
    let mut reader = csv::ReaderBuilder::new().has_headers(false).trim(csv::Trim::All).from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for (r, record) in reader.records().enumerate() {
        let record = record.map_err(|e| CliError::usage(format!("csv: {e}")))?;
        let row = record
            .iter()
            .enumerate()
            .map(|(c, cell)| {
                cell.parse::<usize>().map_err(|_| {
                    CliError::usage(format!("line {}, column {}: expected an integer, found {cell:?}", r + 1, c + 1))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    Ok(validate_loop(&rows, None)?)
}

/// Parses `factor (x factor)*` with factors `ln(N,M)`, `z(K)` and `s(K)`.
pub fn parse_spec(spec: &str) -> Result<FiniteLoop, CliError> {
    let mut factors = spec.split('x').map(str::trim);
    let first = factors.next().filter(|f| !f.is_empty()).ok_or_else(|| CliError::usage("empty loop spec"))?;
    let mut acc = parse_factor(first)?;
    for f in factors {
        acc = direct_product(&acc, &parse_factor(f)?)?;
    }
    Ok(acc)
}

fn parse_factor(f: &str) -> Result<FiniteLoop, CliError> {
    let bad = || CliError::usage(format!("cannot parse loop factor {f:?}; expected ln(N,M), z(K) or s(K)"));
    let (name, rest) = f.split_once('(').ok_or_else(bad)?;
    let args: Vec<u64> = rest
        .strip_suffix(')')
        .ok_or_else(bad)?
        .split(',')
        .map(|a| a.trim().parse().map_err(|_| bad()))
        .collect::<Result<_, _>>()?;
    match (name.trim(), args.as_slice()) {
        ("ln", &[n, m]) => Ok(build_ln(LnParams::new(n, m)?)),
        ("z", &[k]) => Ok(cyclic_group(k as usize)?),
        ("s", &[k]) => Ok(symmetric_group(k as usize)?),
        _ => Err(bad()),
    }
}

/// Reads `key=value` pairs separated by commas, e.g. `census=1000,mlt=20000`.
pub fn caps_from_env(value: Option<&str>) -> Result<Caps, CliError> {
    let mut caps = Caps::default();
    let Some(value) = value else { return Ok(caps) };
    for item in value.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, v) = item
            .split_once('=')
            .ok_or_else(|| CliError::usage(format!("LOUPE_CAPS: expected key=value, found {item:?}")))?;
        let v: usize = v
            .trim()
            .parse()
            .ok()
            .filter(|&v| v > 0)
            .ok_or_else(|| CliError::usage(format!("LOUPE_CAPS: {key} must be a positive integer")))?;
        let slot = match key.trim() {
            "mlt" => &mut caps.mlt,
            "up_subset" => &mut caps.up_subset,
            "census" => &mut caps.census,
            "census_order" => &mut caps.census_order,
            "coset_solutions" => &mut caps.coset_solutions,
            "isotopes" => &mut caps.isotopes,
            "coloring_nodes" => &mut caps.coloring_nodes,
            other => return Err(CliError::usage(format!("LOUPE_CAPS: unknown cap {other:?}"))),
        };
        *slot = v;
    }
    Ok(caps)
}

pub fn element(l: &FiniteLoop, s: &str) -> Result<usize, CliError> {
    l.element_by_label(s.trim()).ok_or_else(|| CliError::usage(format!("no element labelled {s:?}")))
}

/// A comma-separated list of element labels.
pub fn element_set(l: &FiniteLoop, s: &str) -> Result<Vec<usize>, CliError> {
    let mut out: Vec<usize> = s.split(',').map(|x| element(l, x)).collect::<Result<_, _>>()?;
    out.sort_unstable();
    out.dedup();
    Ok(out)
}
