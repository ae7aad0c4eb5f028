use std::io::Write;
use std::ops::RangeInclusive;

use clap::ValueEnum;
use crossings_core::{
    asymptotic_lower_bound, binomial, build_crossing_graph, crossing_lower_bound, exact_max_cut, guy_number,
    heuristic_max_cut, Error, HeuristicParams, Result,
};
use serde::Serialize;

#[derive(Clone, Copy, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportRow {
    pub n: u32,
    pub z: u64,
    pub gn_edges: u64,
    pub maxcut: u64,
    /// `exact` rows are certified optima; `heuristic` rows are not.
    pub method: &'static str,
    pub lower_bound: u64,
    pub asymptotic_leading: f64,
}

#[derive(Serialize)]
struct Document<'a> {
    rows: &'a [ReportRow],
}

/// Exact MAX-CUT where feasible under `exact_limit`, heuristic otherwise.
pub fn build_rows(
    range: RangeInclusive<u32>,
    exact_limit: usize,
    heuristic: HeuristicParams,
) -> Result<Vec<ReportRow>> {
    range
        .map(|n| {
            let g = build_crossing_graph(n)?;
            let result = match exact_max_cut(&g, exact_limit) {
                Err(Error::TooLargeForExact { .. }) => heuristic_max_cut(&g, heuristic)?,
                other => other?,
            };
            Ok(ReportRow {
                n,
                z: guy_number(n)?,
                gn_edges: binomial(n as u64, 4),
                maxcut: result.value,
                method: result.method.as_str(),
                lower_bound: crossing_lower_bound(n, result.value)?,
                asymptotic_leading: asymptotic_lower_bound(n),
            })
        })
        .collect()
}

pub fn write_report(rows: &[ReportRow], format: Format, mut sink: impl Write) -> std::io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut sink, &Document { rows })?;
            writeln!(sink)?;
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(sink);
            for row in rows {
                writer.serialize(row)?;
            }
            writer.flush()?;
        }
    }
    Ok(())
}
