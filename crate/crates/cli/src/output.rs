//! JSON and CSV emission with 12 significant digits.

use serde::Serialize;
use serde_json::Value;

/// Rounds to 12 significant digits. Non-finite values pass through.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

fn round_value(v: &mut Value) {
    match v {
        Value::Number(n) => {
            if n.is_f64() {
                if let Some(x) = n.as_f64() {
                    *v = Value::from(round12(x));
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_value),
        Value::Object(map) => map.values_mut().for_each(round_value),
        _ => {}
    }
}

/// Serializes `data` as one line of JSON with every float rounded.
pub fn to_json<T: Serialize>(data: &T) -> String {
    let mut v = serde_json::to_value(data).expect("output serializes");
    round_value(&mut v);
    serde_json::to_string(&v).expect("value serializes")
}

/// One CSV number.
pub fn csv_num(x: f64) -> String {
    format!("{}", round12(x))
}
