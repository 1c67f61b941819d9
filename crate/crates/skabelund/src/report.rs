//! Sweep of the (a, b) grid and assembly of the comparison table:
//! per dual dimension k, the best two-point order bound d against the
//! best one-point order bound d1 of the same dimension.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use serde::Serialize;

use crate::bound::BoundTable;
use crate::error::{Error, Result};
use crate::params::CurveParams;
use crate::tau::TauTable;
use crate::two_point::{rr_dim, DivisorSpec};

/// One comparison row. Field order is the export column order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub k: i64,
    pub a: i64,
    pub b: i64,
    pub deg: i64,
    pub d: i64,
    pub goppa: i64,
    pub d1: i64,
    pub b_prime: i64,
    pub delta: i64,
}

/// Sweep configuration. Defaults: a, b ≥ 1, a + b ≤ 4g − 1, keep rows
/// with d − d1 ≥ 10.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub s: i64,
    pub a_min: i64,
    pub a_max: Option<i64>,
    pub b_min: i64,
    pub b_max: Option<i64>,
    /// Degree cap; clamped to 4g − 1 (beyond it the order bound equals
    /// the Goppa bound and the comparison is vacuous).
    pub max_degree: Option<i64>,
    pub delta_threshold: i64,
    /// Worker threads for the bound-table build; `None` uses the rayon
    /// default. The output is identical for every worker count.
    pub workers: Option<usize>,
}

impl SweepConfig {
    pub fn new(s: i64) -> Self {
        SweepConfig {
            s,
            a_min: 1,
            a_max: None,
            b_min: 1,
            b_max: None,
            max_degree: None,
            delta_threshold: 10,
            workers: None,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.a_min < 0 || self.b_min < 0 {
            return Err(Error::domain("sweep ranges must start at ≥ 0"));
        }
        if self.a_max.is_some_and(|m| m < self.a_min) || self.b_max.is_some_and(|m| m < self.b_min)
        {
            return Err(Error::domain("sweep ranges must be nonempty"));
        }
        if self.delta_threshold < 0 {
            return Err(Error::domain("delta threshold must be ≥ 0"));
        }
        Ok(())
    }
}

/// Sweep output: the filtered table plus any k where the best two-point
/// bound fell below the one-point bound (never observed for this family;
/// surfaced rather than silently dropped if it ever happens).
#[derive(Debug, Clone)]
pub struct SweepResult {
    pub rows: Vec<TableRow>,
    pub dominance_violations: Vec<TableRow>,
}

/// Run the sweep described by `cfg`.
pub fn sweep(cfg: &SweepConfig) -> Result<SweepResult> {
    cfg.validate()?;
    let params = CurveParams::new(cfg.s)?;
    let tt = TauTable::new(params);
    match cfg.workers {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::domain(format!("cannot build worker pool: {e}")))?;
            pool.install(|| run_sweep(cfg, &tt))
        }
        None => run_sweep(cfg, &tt),
    }
}

fn run_sweep(cfg: &SweepConfig, tt: &TauTable) -> Result<SweepResult> {
    let g = tt.genus();
    let n = tt.params().code_length;
    let boundary = 4 * g - 1;
    let max_deg = cfg.max_degree.unwrap_or(boundary).min(boundary);
    let table = BoundTable::build(tt);

    // Best two-point d per dual dimension k; lexicographically smallest
    // (a, b) witness since the scan is ascending and ties keep the first.
    let mut best: BTreeMap<i64, (i64, i64, i64)> = BTreeMap::new();
    let a_hi = cfg
        .a_max
        .unwrap_or(max_deg - cfg.b_min)
        .min(max_deg - cfg.b_min);
    for a in cfg.a_min.max(0)..=a_hi {
        let b_hi = cfg.b_max.unwrap_or(max_deg - a).min(max_deg - a);
        if b_hi < cfg.b_min {
            continue;
        }
        let mut rr = rr_dim(tt, DivisorSpec::new(a, cfg.b_min))?;
        for b in cfg.b_min..=b_hi {
            if b > cfg.b_min {
                // dim gains the single new candidate i = τ⁻¹(b) if i ≤ a
                if tt.tau_inv(b) <= a {
                    rr += 1;
                }
            }
            if a + b < 1 {
                continue;
            }
            let k = n - rr;
            let d = table.order_bound(DivisorSpec::new(a, b))?;
            match best.get_mut(&k) {
                Some(cur) if d <= cur.0 => {}
                Some(cur) => *cur = (d, a, b),
                None => {
                    best.insert(k, (d, a, b));
                }
            }
        }
    }

    // One-point competitors, indexed by dim L(b′P∞): max d1, smallest b′.
    let max_dim = 3 * g;
    let mut one_point: Vec<Option<(i64, i64)>> = vec![None; max_dim as usize + 1];
    let mut dim = 1i64;
    for b_prime in 1..=boundary {
        if tt.tau_inv(b_prime) <= 0 {
            dim += 1;
        }
        if dim > max_dim {
            break;
        }
        let d1 = table.order_bound(DivisorSpec::new(0, b_prime))?;
        let slot = &mut one_point[dim as usize];
        if slot.is_none_or(|(best_d1, _)| d1 > best_d1) {
            *slot = Some((d1, b_prime));
        }
    }

    let mut rows = Vec::new();
    let mut dominance_violations = Vec::new();
    for (&k, &(d, a, b)) in &best {
        let v = n - k;
        let (d1, b_prime) = one_point
            .get(v as usize)
            .copied()
            .flatten()
            .ok_or_else(|| {
                Error::domain(format!(
                    "no one-point competitor of dimension {v} (k = {k})"
                ))
            })?;
        let row = TableRow {
            k,
            a,
            b,
            deg: a + b,
            d,
            goppa: a + b - 2 * g + 2,
            d1,
            b_prime,
            delta: d - d1,
        };
        if row.d < row.d1 {
            dominance_violations.push(row);
        }
        if row.delta >= cfg.delta_threshold {
            rows.push(row);
        }
    }
    Ok(SweepResult {
        rows,
        dominance_violations,
    })
}

pub const CSV_HEADER: &str = "k,a,b,deg,d,goppa,d1,b_prime,delta";

/// Write rows as CSV with the fixed header.
pub fn write_csv<W: Write>(rows: &[TableRow], w: &mut W) -> io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for r in rows {
        writeln!(
            w,
            "{},{},{},{},{},{},{},{},{}",
            r.k, r.a, r.b, r.deg, r.d, r.goppa, r.d1, r.b_prime, r.delta
        )?;
    }
    Ok(())
}

/// Rows as a JSON array with the same keys as the CSV columns.
pub fn rows_to_json(rows: &[TableRow]) -> String {
    serde_json::to_string(rows).expect("TableRow serialization cannot fail")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Csv,
    Json,
}

/// Serialize rows to `dest` (or stdout when `None`). I/O failures carry
/// the path.
pub fn export(rows: &[TableRow], format: ExportFormat, dest: Option<&Path>) -> Result<()> {
    let payload = match format {
        ExportFormat::Csv => {
            let mut buf = Vec::new();
            write_csv(rows, &mut buf).expect("writing to a Vec cannot fail");
            buf
        }
        ExportFormat::Json => {
            let mut s = rows_to_json(rows);
            s.push('\n');
            s.into_bytes()
        }
    };
    match dest {
        Some(path) => {
            let mut f = File::create(path).map_err(|e| Error::io(path, e))?;
            f.write_all(&payload).map_err(|e| Error::io(path, e))
        }
        None => io::stdout()
            .write_all(&payload)
            .map_err(|e| Error::io("<stdout>", e)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_row() -> TableRow {
        TableRow {
            k: 28860,
            a: 1,
            b: 517,
            deg: 518,
            d: 138,
            goppa: 128,
            d1: 128,
            b_prime: 518,
            delta: 10,
        }
    }

    #[test]
    fn csv_golden_line() {
        let mut buf = Vec::new();
        write_csv(&[sample_row()], &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "k,a,b,deg,d,goppa,d1,b_prime,delta\n28860,1,517,518,138,128,128,518,10\n"
        );
    }

    #[test]
    fn csv_empty_is_header_only() {
        let mut buf = Vec::new();
        write_csv(&[], &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "k,a,b,deg,d,goppa,d1,b_prime,delta\n"
        );
    }

    #[test]
    fn json_keys_match_csv_columns() {
        let json = rows_to_json(&[sample_row()]);
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        let keys: Vec<&str> = parsed[0]
            .as_object()
            .unwrap()
            .keys()
            .map(|s| s.as_str())
            .collect();
        assert_eq!(keys, CSV_HEADER.split(',').collect::<Vec<_>>());
    }

    #[test]
    fn export_bad_path_has_context() {
        let err = export(
            &[],
            ExportFormat::Csv,
            Some(Path::new("/nonexistent-dir/out.csv")),
        )
        .unwrap_err();
        assert!(err.to_string().contains("/nonexistent-dir/out.csv"));
    }

    #[test]
    fn config_validation() {
        let mut cfg = SweepConfig::new(1);
        cfg.delta_threshold = -1;
        assert!(sweep(&cfg).is_err());
        let mut cfg = SweepConfig::new(1);
        cfg.a_max = Some(0);
        assert!(sweep(&cfg).is_err());
    }
}
