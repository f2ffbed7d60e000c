//! Reports and their JSON, CSV and text renderings.

use gevrey::asympt::PiScaled;
use gevrey::numeric::scalar::format_rational;
use gevrey::{const_eval, BigFloat, ConstElem, QSeries, Rational, SqrtExt};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::cli::Format;
use crate::CliError;

/// Float rendering settings shared by one run.
#[derive(Clone, Copy, Debug)]
pub struct Numeric {
    pub approx: bool,
    pub precision: u32,
    pub digits: usize,
}

impl Numeric {
    pub fn new(approx: bool, precision: u32, digits: u32) -> Self {
        // never print more digits than the working precision carries
        let cap = ((precision as f64) * std::f64::consts::LOG10_2).floor() as usize;
        Numeric {
            approx,
            precision,
            digits: (digits as usize).min(cap),
        }
    }

    pub fn decimal(&self, x: &BigFloat) -> String {
        x.to_decimal(self.digits)
    }

    fn eval(&self, c: &ConstElem) -> Value {
        match const_eval(c, self.precision) {
            Ok(x) => Value::String(self.decimal(&x)),
            Err(_) => Value::Null,
        }
    }
}

/// Values with an exact serialization and an optional decimal one.
pub trait Exact {
    fn exact(&self) -> Value;
    fn approx(&self, num: &Numeric) -> Value;
}

impl Exact for Rational {
    fn exact(&self) -> Value {
        Value::String(format_rational(self))
    }

    fn approx(&self, num: &Numeric) -> Value {
        Value::String(num.decimal(&BigFloat::from_rational(self, num.precision)))
    }
}

impl<const D: i64> Exact for SqrtExt<D> {
    fn exact(&self) -> Value {
        json!({
            "rational": format_rational(&self.rational),
            "radical": format_rational(&self.radical),
            "surd": D,
        })
    }

    fn approx(&self, num: &Numeric) -> Value {
        num.eval(&ConstElem::from(self.clone()))
    }
}

impl Exact for PiScaled {
    fn exact(&self) -> Value {
        json!({
            "rational": format_rational(&self.rational),
            "inv_sqrt_pi": self.inv_sqrt_pi,
        })
    }

    fn approx(&self, num: &Numeric) -> Value {
        num.eval(&self.to_const())
    }
}

impl Exact for ConstElem {
    fn exact(&self) -> Value {
        serde_json::to_value(self).expect("terms serialize")
    }

    fn approx(&self, num: &Numeric) -> Value {
        num.eval(self)
    }
}

impl Exact for QSeries {
    fn exact(&self) -> Value {
        serde_json::to_value(self.to_record()).expect("records serialize")
    }

    fn approx(&self, num: &Numeric) -> Value {
        Value::Array(
            self.terms()
                .map(|(k, c)| json!({"exponent": k, "coeff": c.approx(num)}))
                .collect(),
        )
    }
}

impl<T: Exact> Exact for [T] {
    fn exact(&self) -> Value {
        Value::Array(self.iter().map(Exact::exact).collect())
    }

    fn approx(&self, num: &Numeric) -> Value {
        Value::Array(self.iter().map(|x| x.approx(num)).collect())
    }
}

/// One command's result: a flat JSON object plus rendering hints.
#[derive(Debug)]
pub struct Report {
    fields: Map<String, Value>,
    /// Dotted path of the array rendered as CSV rows.
    table: Option<&'static str>,
    csv: Option<String>,
    failure: Option<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut fields = Map::new();
        fields.insert(
            "schema".into(),
            Value::String(format!("gevrey.{command}/1")),
        );
        Report {
            fields,
            table: None,
            csv: None,
            failure: None,
        }
    }

    pub fn put(&mut self, key: &str, v: impl Serialize) {
        let v = serde_json::to_value(v).expect("report values serialize");
        self.fields.insert(key.into(), v);
    }

    /// Exact value under `key`, plus `key_approx` when requested.
    pub fn exact<E: Exact + ?Sized>(&mut self, key: &str, v: &E, num: &Numeric) {
        self.fields.insert(key.into(), v.exact());
        if num.approx {
            self.fields.insert(format!("{key}_approx"), v.approx(num));
        }
    }

    pub fn float(&mut self, key: &str, x: &BigFloat, num: &Numeric) {
        self.put(key, num.decimal(x));
        self.float_meta(x.precision(), num);
    }

    /// Precision metadata for the floats in this report.
    pub fn float_meta(&mut self, precision: u32, num: &Numeric) {
        self.put("precision_bits", precision);
        self.put("digits", num.digits);
    }

    pub fn table(&mut self, path: &'static str) {
        self.table = Some(path);
    }

    pub fn csv(&mut self, text: String) {
        self.csv = Some(text);
    }

    /// Marks a check that ran but did not hold; the report is still printed.
    pub fn fail(&mut self, msg: impl Into<String>) {
        self.failure = Some(msg.into());
    }

    pub fn failure(&self) -> Option<&str> {
        self.failure.as_deref()
    }

    pub fn json(&self) -> &Map<String, Value> {
        &self.fields
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.fields).expect("report serializes");
                s.push('\n');
                Ok(s)
            }
            Format::Csv => self.render_csv(),
            Format::Text => Ok(render_text(&self.fields)),
        }
    }

    fn render_csv(&self) -> Result<String, CliError> {
        if let Some(c) = &self.csv {
            return Ok(c.clone());
        }
        let path = self.table.ok_or_else(|| {
            CliError::Argument("this command has no tabular output; use json or text".into())
        })?;
        let root = Value::Object(self.fields.clone());
        let mut node = &root;
        for part in path.split('.') {
            node = node.get(part).unwrap_or(&Value::Null);
        }
        let rows = node.as_array().cloned().unwrap_or_default();
        Ok(csv_rows(&rows))
    }
}

fn csv_cell(v: &Value) -> String {
    let s = match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    };
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s
    }
}

fn csv_rows(rows: &[Value]) -> String {
    let mut out = String::new();
    match rows.first() {
        Some(Value::Object(first)) => {
            let cols: Vec<&String> = first.keys().collect();
            out.push_str(
                &cols
                    .iter()
                    .map(|c| c.as_str())
                    .collect::<Vec<_>>()
                    .join(","),
            );
            out.push('\n');
            for r in rows {
                let cells: Vec<String> = cols
                    .iter()
                    .map(|c| csv_cell(r.get(c.as_str()).unwrap_or(&Value::Null)))
                    .collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
        }
        _ => {
            out.push_str("index,value\n");
            for (i, r) in rows.iter().enumerate() {
                out.push_str(&format!("{i},{}\n", csv_cell(r)));
            }
        }
    }
    out
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render_text(fields: &Map<String, Value>) -> String {
    let mut out = String::new();
    for (k, v) in fields {
        if k == "schema" {
            continue;
        }
        match v {
            Value::Array(rows) if !rows.is_empty() && rows.iter().all(Value::is_object) => {
                out.push_str(&format!("{k}:\n"));
                out.push_str(&aligned_table(rows));
            }
            Value::Array(items) => {
                out.push_str(&format!("{k}:\n"));
                for (i, x) in items.iter().enumerate() {
                    out.push_str(&format!("  {i:>4}  {}\n", scalar_text(x)));
                }
            }
            Value::Object(m) => {
                out.push_str(&format!("{k}:\n"));
                for (kk, x) in m {
                    out.push_str(&format!("  {kk}: {}\n", scalar_text(x)));
                }
            }
            _ => out.push_str(&format!("{k}: {}\n", scalar_text(v))),
        }
    }
    out
}

fn aligned_table(rows: &[Value]) -> String {
    let cols: Vec<String> = rows[0]
        .as_object()
        .map(|m| m.keys().cloned().collect())
        .unwrap_or_default();
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            cols.iter()
                .map(|c| scalar_text(r.get(c).unwrap_or(&Value::Null)))
                .collect()
        })
        .collect();
    let widths: Vec<usize> = cols
        .iter()
        .enumerate()
        .map(|(j, c)| {
            cells
                .iter()
                .map(|r| r[j].chars().count())
                .chain([c.chars().count()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |items: &[String]| -> String {
        let padded: Vec<String> = items
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:<w$}"))
            .collect();
        format!("  {}\n", padded.join("  ").trim_end())
    };
    let mut out = line(&cols);
    for r in &cells {
        out.push_str(&line(r));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use gevrey::numeric::scalar::rat;

    #[test]
    fn csv_quotes_and_scalars() {
        assert_eq!(
            csv_rows(&[json!("1/2"), json!("3/4")]),
            "index,value\n0,1/2\n1,3/4\n"
        );
        let rows = [json!({"a": "x,y", "b": 1})];
        assert_eq!(csv_rows(&rows), "a,b\n\"x,y\",1\n");
    }

    #[test]
    fn approx_is_added_not_substituted() {
        let num = Numeric::new(true, 128, 10);
        let mut r = Report::new("t");
        r.exact("v", &rat(1, 3), &num);
        assert_eq!(r.json()["v"], json!("1/3"));
        assert_eq!(r.json()["v_approx"], json!("0.3333333333"));
    }

    #[test]
    fn digits_capped_by_precision() {
        assert_eq!(Numeric::new(false, 64, 100).digits, 19);
    }
}
