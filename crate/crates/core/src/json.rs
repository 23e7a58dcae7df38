//! Versioned JSON reports.
//!
//! Every report is an object `{"result": ..., "schema": "expander-ledger/1",
//! "type": ...}`. Objects are emitted with sorted keys and rationals as
//! `"p/q"` strings, so identical inputs give byte-identical output.

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: &str = "expander-ledger/1";

pub fn envelope<T: Serialize>(kind: &str, body: &T) -> serde_json::Result<Value> {
    let mut map = serde_json::Map::new();
    map.insert("schema".into(), Value::from(SCHEMA));
    map.insert("type".into(), Value::from(kind));
    map.insert("result".into(), serde_json::to_value(body)?);
    Ok(Value::Object(map))
}

/// Pretty-printed envelope with a trailing newline.
pub fn render<T: Serialize>(kind: &str, body: &T) -> serde_json::Result<String> {
    let mut text = serde_json::to_string_pretty(&envelope(kind, body)?)?;
    text.push('\n');
    Ok(text)
}
