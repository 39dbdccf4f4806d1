use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use ears_core::ears::{DatumJson, EarsDatum, EarsRoot};
use serde::de::DeserializeOwned;
use serde_json::Value;

/// `--in` accepts a path or, when it starts with `{` or `[`, inline JSON.
pub fn load(arg: Option<&str>) -> Result<Value> {
    let arg = arg.ok_or_else(|| anyhow!("missing --in"))?;
    let t = arg.trim_start();
    let text = if t.starts_with('{') || t.starts_with('[') {
        arg.to_string()
    } else {
        std::fs::read_to_string(Path::new(arg)).with_context(|| format!("reading {arg}"))?
    };
    Ok(serde_json::from_str(&text)?)
}

/// The datum is either the whole document or its "datum" field.
pub fn datum(v: &Value) -> Result<EarsDatum> {
    let d = v.get("datum").unwrap_or(v);
    let j: DatumJson = serde_json::from_value(d.clone())?;
    Ok(EarsDatum::from_json(j)?)
}

pub fn field<T: DeserializeOwned>(v: &Value, key: &str) -> Result<T> {
    let f = v.get(key).ok_or_else(|| anyhow!("input needs a \"{key}\" field"))?;
    serde_json::from_value(f.clone()).with_context(|| format!("field \"{key}\""))
}

pub fn opt_field<T: DeserializeOwned>(v: &Value, key: &str) -> Result<Option<T>> {
    match v.get(key) {
        None | Some(Value::Null) => Ok(None),
        Some(f) => Ok(Some(serde_json::from_value(f.clone()).with_context(|| format!("field \"{key}\""))?)),
    }
}

pub fn roots(v: &Value, key: &str) -> Result<Vec<EarsRoot>> {
    field(v, key)
}

/// "1,0,-1" → [1, 0, -1]
pub fn parse_vec(s: &str) -> Result<Vec<i64>> {
    let t = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    if t.is_empty() {
        bail!("empty vector");
    }
    t.split(',').map(|x| x.trim().parse::<i64>().with_context(|| format!("bad integer {x:?}"))).collect()
}
