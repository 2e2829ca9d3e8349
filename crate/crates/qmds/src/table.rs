//! Parameter table generation with optional construction of small rows.

use std::collections::BTreeMap;
use std::io::Write;

use anyhow::Context;
use qmds_core::quantum::{self, Family, TableRow};
use qmds_core::{Field, Result};
use rayon::prelude::*;

use crate::construct::{self, Options, Params};
use crate::report::{CsvRecord, RowStatus, TableRecord};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

fn row_params(row: &TableRow) -> Result<Params> {
    let k = row.k_classical;
    match row.family {
        Family::A => Params::new(Family::A, row.q, row.s, row.lambda, k, None, false),
        Family::B => Params::new(Family::B, row.q, row.s, None, k, None, false),
    }
}

fn verify_row(field: &Field, row: &TableRow, opts: &Options) -> Result<RowStatus> {
    let params = row_params(row)?;
    if params.quantum() != row.quantum {
        return Ok(RowStatus::Failed);
    }
    let out = match construct::build_and_check(field, &params, opts) {
        Ok(out) => out,
        Err(e) if e.is_check_failure() => return Ok(RowStatus::Failed),
        Err(e) => return Err(e),
    };
    Ok(if out.fully_verified() {
        RowStatus::Verified
    } else if out.passed() {
        RowStatus::MdsSkippedBudget
    } else {
        RowStatus::Failed
    })
}

/// All rows up to `q_max`, building and checking those with `q <= verify_below`.
/// Output order is the row order regardless of how work is scheduled.
pub fn records(q_max: u64, verify_below: u64, opts: &Options) -> Result<Vec<TableRecord>> {
    let rows = quantum::table3_rows(q_max)?;
    let mut fields = BTreeMap::new();
    for row in rows.iter().filter(|r| r.q <= verify_below) {
        if let std::collections::btree_map::Entry::Vacant(slot) = fields.entry(row.q) {
            slot.insert(construct::field_for_q(row.q)?);
        }
    }
    rows.par_iter()
        .map(|row| {
            let status = match fields.get(&row.q) {
                Some(field) => verify_row(field, row, opts)?,
                None => RowStatus::NotRequested,
            };
            Ok(TableRecord::new(row, status))
        })
        .collect()
}

pub fn write_records(
    out: &mut dyn Write,
    records: &[TableRecord],
    format: Format,
) -> anyhow::Result<()> {
    match format {
        Format::Json => {
            for r in records {
                serde_json::to_writer(&mut *out, r)?;
                out.write_all(b"\n")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            for r in records {
                w.serialize(CsvRecord::from(r)).context("writing CSV row")?;
            }
            w.flush()?;
        }
    }
    Ok(())
}
