//! Output records and their JSON / CSV renderings.
//!
//! JSON is one compact object per line with keys in sorted order and floats
//! printed shortest-round-trip, so parsing a line and re-rendering it gives
//! back the same bytes. CSV prints floats at a fixed number of significant
//! digits (17 by default).

use std::collections::BTreeMap;

use gaussint::exact::HalfIntValue;
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// `coef_num/coef_den · √π^sqrt_pi_power`, with decimal-string integers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExactValue {
    pub coef_num: String,
    pub coef_den: String,
    pub sqrt_pi_power: i32,
}

impl From<&HalfIntValue> for ExactValue {
    fn from(v: &HalfIntValue) -> Self {
        ExactValue {
            coef_num: v.coef().numer().to_string(),
            coef_den: v.coef().denom().to_string(),
            sqrt_pi_power: v.sqrt_pi_power(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<ExactValue>,
    pub value: f64,
    pub method: String,
    pub error_estimate: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub units: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub extras: BTreeMap<String, Value>,
}

impl OutputRecord {
    pub fn new(command: &str, method: &str, value: f64) -> Self {
        OutputRecord {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            exact: None,
            value,
            method: method.to_string(),
            error_estimate: 0.0,
            units: None,
            extras: BTreeMap::new(),
        }
    }

    pub fn input(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn exact(mut self, value: &HalfIntValue) -> Self {
        self.exact = Some(value.into());
        self
    }

    pub fn error(mut self, estimate: f64) -> Self {
        self.error_estimate = estimate;
        self
    }

    pub fn units(mut self, units: &str) -> Self {
        self.units = Some(units.to_string());
        self
    }

    pub fn extra(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.extras.insert(key.to_string(), value.into());
        self
    }
}

/// Exact values nested in `extras` use the same shape as the top-level field.
pub fn exact_json(v: &HalfIntValue) -> Value {
    serde_json::to_value(ExactValue::from(v)).expect("plain struct")
}

/// Canonical one-line JSON: sorted keys, shortest round-trip floats.
pub fn to_json_line(record: &OutputRecord) -> String {
    // going through Value sorts every map, including nested ones
    let value = serde_json::to_value(record).expect("records contain only finite data");
    serde_json::to_string(&value).expect("Value always serializes")
}

pub fn render_json(records: &[OutputRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&to_json_line(r));
        out.push('\n');
    }
    out
}

pub const CSV_HEADER: &str =
    "command,inputs,coef_num,coef_den,sqrt_pi_power,value,method,error_estimate,units,extras";

pub fn format_float(v: f64, digits: usize) -> String {
    if v == 0.0 {
        // avoid "-0" vs "0" drift between platforms
        return format!("{:.*e}", digits - 1, 0.0);
    }
    format!("{:.*e}", digits - 1, v)
}

fn csv_value(v: &Value, digits: usize) -> String {
    match v {
        Value::Number(n) if n.is_f64() => format_float(n.as_f64().unwrap(), digits),
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        Value::Bool(b) => b.to_string(),
        Value::Null => String::new(),
        Value::Array(items) => items.iter().map(|i| csv_value(i, digits)).collect::<Vec<_>>().join(" "),
        Value::Object(map) => {
            let parts: Vec<String> =
                map.iter().map(|(k, v)| format!("{k}:{}", csv_value(v, digits))).collect();
            format!("{{{}}}", parts.join(" "))
        }
    }
}

fn csv_map(map: &BTreeMap<String, Value>, digits: usize) -> String {
    map.iter()
        .map(|(k, v)| format!("{k}={}", csv_value(v, digits)))
        .collect::<Vec<_>>()
        .join(";")
}

pub fn render_csv(records: &[OutputRecord], digits: usize) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = "writing to memory cannot fail";
    w.write_record(CSV_HEADER.split(',')).expect(io);
    for r in records {
        let (num, den, pow) = match &r.exact {
            Some(e) => (e.coef_num.clone(), e.coef_den.clone(), e.sqrt_pi_power.to_string()),
            None => Default::default(),
        };
        w.write_record([
            r.command.clone(),
            csv_map(&r.inputs, digits),
            num,
            den,
            pow,
            format_float(r.value, digits),
            r.method.clone(),
            format_float(r.error_estimate, digits),
            r.units.clone().unwrap_or_default(),
            csv_map(&r.extras, digits),
        ])
        .expect(io);
    }
    String::from_utf8(w.into_inner().expect(io)).expect("fields are UTF-8")
}
