use std::fmt::Display;
use std::str::FromStr;

use mixcay::IntMatrix;
use num_bigint::{BigInt, BigUint};
use serde_json::{Number, Value};

pub struct Printer {
    pub json: bool,
}

impl Printer {
    pub fn emit_json(&self, v: &Value) {
        println!("{}", serde_json::to_string_pretty(v).expect("JSON values serialize"));
    }
}

/// Exact JSON number for an integer of any size.
pub fn bigint(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integers are valid JSON numbers"))
}

pub fn big(n: &BigUint) -> Value {
    bigint(&BigInt::from(n.clone()))
}

pub fn matrix_json(m: &IntMatrix) -> Value {
    (0..m.dim()).map(|i| Value::Array(m.row(i).iter().map(bigint).collect())).collect()
}

pub fn matrix_rows(m: &IntMatrix) -> String {
    (0..m.dim())
        .map(|i| {
            let row: Vec<String> = m.row(i).iter().map(|x| x.to_string()).collect();
            format!("  [{}]", row.join(", "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn list<T: Display>(xs: &[T]) -> String {
    let items: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("[{}]", items.join(", "))
}

/// Copies the fields of `extra` into `v`; both must be objects.
pub fn merge(v: &mut Value, extra: Value) {
    if let (Value::Object(a), Value::Object(b)) = (v, extra) {
        a.extend(b);
    }
}
