use serde_json::{Map, Value};
use std::io::Write;

use super::commands::{Cell, Table};
use super::config::RunConfig;
use crate::error::Result;

fn csv_cell(cell: &Cell) -> String {
    match cell {
        Cell::Num(v) => format!("{v:.16e}"),
        Cell::Bool(b) => b.to_string(),
        Cell::Text(s) => s.clone(),
    }
}

/// CSV with 17 significant digits and `\n` line endings.
pub fn write_csv(table: &Table, out: &mut impl Write) -> Result<()> {
    writeln!(out, "{}", table.header.join(","))?;
    for row in &table.rows {
        let line: Vec<String> = row.iter().map(csv_cell).collect();
        writeln!(out, "{}", line.join(","))?;
    }
    Ok(())
}

fn json_cell(cell: &Cell) -> Value {
    match cell {
        Cell::Num(v) => serde_json::Number::from_f64(*v).map_or(Value::Null, Value::Number),
        Cell::Bool(b) => Value::Bool(*b),
        Cell::Text(s) => Value::String(s.clone()),
    }
}

/// `{"config": ..., "rows": [{column: value, ...}, ...]}`; non-finite
/// numbers become `null`.
pub fn write_json(table: &Table, cfg: &RunConfig, out: &mut impl Write) -> Result<()> {
    let rows: Vec<Value> = table
        .rows
        .iter()
        .map(|row| {
            let obj: Map<String, Value> =
                table.header.iter().zip(row).map(|(k, c)| (k.to_string(), json_cell(c))).collect();
            Value::Object(obj)
        })
        .collect();
    let doc = serde_json::json!({ "config": cfg, "rows": rows });
    serde_json::to_writer_pretty(&mut *out, &doc)?;
    writeln!(out)?;
    Ok(())
}
