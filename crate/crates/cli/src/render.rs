use anyhow::Result;
use ears_core::Report;
use serde::Serialize;

use crate::{Format, Output};

pub fn json<T: Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

pub fn report_text(title: &str, r: &Report) -> String {
    let mut s = format!("{title}: {}\n", if r.is_ok() { "ok" } else { "FAIL" });
    for v in &r.violations {
        s.push_str(&format!("  violation {}: {}\n", v.check, v.witness));
    }
    for n in &r.notes {
        s.push_str(&format!("  note: {n}\n"));
    }
    s
}

/// A report-valued result: JSON is the report itself.
pub fn report(fmt: Format, title: &str, r: &Report) -> Result<Output> {
    let text = match fmt {
        Format::Json => json(r)?,
        Format::Table => report_text(title, r),
    };
    Ok(Output { text, ok: r.is_ok() })
}

/// Left-aligned columns joined by " | ".
pub fn grid(rows: &[Vec<String>]) -> String {
    let ncol = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..ncol).map(|j| rows.iter().filter_map(|r| r.get(j)).map(|c| c.chars().count()).max().unwrap_or(0)).collect();
    let mut s = String::new();
    for r in rows {
        let cells: Vec<String> =
            r.iter().enumerate().map(|(j, c)| format!("{}{}", c, " ".repeat(widths[j] - c.chars().count()))).collect();
        s.push_str(cells.join(" | ").trim_end());
        s.push('\n');
    }
    s
}

pub fn vec_str(v: &[i64]) -> String {
    let p: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("({})", p.join(","))
}
