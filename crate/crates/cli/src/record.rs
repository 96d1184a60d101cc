//! Command output with a fixed key order.

use std::fmt::Write as _;

use serde_json::Value;

use crate::{json_number, json_object};

#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Text(String),
    Num(f64),
    Nums(Vec<f64>),
    Bool(bool),
    Int(u64),
}

/// Ordered `key → value` pairs; `command` always comes first and `status`
/// last. Numbers are rounded to 12 significant digits in both renderings.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputRecord {
    fields: Vec<(&'static str, Field)>,
}

/// Rounds to 12 significant digits and prints the shortest decimal of the
/// rounded value, so `0.5` stays `0.5` and `log₂` values print as
/// `0.881290899231`.
pub fn format_sig12(x: f64) -> String {
    round_sig12(x).to_string()
}

fn round_sig12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

impl OutputRecord {
    pub fn new(command: &str) -> Self {
        Self {
            fields: vec![("command", Field::Text(command.to_owned()))],
        }
    }

    pub fn push(&mut self, key: &'static str, value: Field) -> &mut Self {
        self.fields.push((key, value));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Field> {
        self.fields.iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }

    pub fn keys(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.fields.iter().map(|(k, _)| *k)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (key, value) in &self.fields {
            let rendered = match value {
                Field::Text(s) => s.clone(),
                Field::Num(x) => format_sig12(*x),
                Field::Nums(xs) => {
                    let parts: Vec<String> = xs.iter().map(|&x| format_sig12(x)).collect();
                    format!("({})", parts.join(", "))
                }
                Field::Bool(b) => b.to_string(),
                Field::Int(n) => n.to_string(),
            };
            let _ = writeln!(out, "{key}: {rendered}");
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json_object(self.fields.iter().map(|(key, value)| {
            let v = match value {
                Field::Text(s) => Value::String(s.clone()),
                Field::Num(x) => json_number(round_sig12(*x)),
                Field::Nums(xs) => {
                    Value::Array(xs.iter().map(|&x| json_number(round_sig12(x))).collect())
                }
                Field::Bool(b) => Value::Bool(*b),
                Field::Int(n) => Value::from(*n),
            };
            (key.to_string(), v)
        }))
    }
}
