//! Machine-readable records for the command line, in plain text, JSON and
//! CSV. Counts and coefficients are always decimal strings.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::counting::{CountResult, GraphFamily, SplitSeries};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::series::{SeriesModel, SpectralEstimate};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Plain,
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(OutputFormat::Plain),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            _ => Err(Error::Parameter(format!("unknown format {s:?}, expected plain, json or csv"))),
        }
    }
}

/// One command's output. Object keys serialize in sorted order, so the JSON
/// text is canonical. Notes appear in JSON only.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub params: Map<String, Value>,
    pub results: Value,
    pub notes: Vec<String>,
}

fn dec(x: &BigUint) -> Value {
    Value::String(x.to_string())
}

fn decs<T: ToString>(xs: &[T]) -> Value {
    Value::Array(xs.iter().map(|x| Value::String(x.to_string())).collect())
}

fn params(pairs: &[(&str, Value)]) -> Map<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

/// Format a float with enough digits for its stated tolerance.
pub fn float_string(x: f64) -> String {
    format!("{x:.15}")
}

impl OutputRecord {
    pub fn count(r: &CountResult) -> OutputRecord {
        let mut res = Map::new();
        res.insert("value".into(), dec(&r.value));
        if let Some((f0, f1)) = &r.split {
            res.insert("f0".into(), dec(f0));
            res.insert("f1".into(), dec(f1));
        }
        OutputRecord {
            command: "count".into(),
            params: params(&[
                ("family", json!(r.family.name())),
                ("m", json!(r.m)),
                ("n", json!(r.n)),
                ("split", json!(r.split.is_some())),
            ]),
            results: Value::Object(res),
            notes: Vec::new(),
        }
    }

    pub fn series(family: GraphFamily, m: usize, values: &[BigUint], split: Option<&SplitSeries>) -> OutputRecord {
        let mut res = Map::new();
        res.insert("values".into(), decs(values));
        if let Some(s) = split {
            res.insert("f0".into(), decs(&s.even));
            res.insert("f1".into(), decs(&s.odd));
        }
        OutputRecord {
            command: "series".into(),
            params: params(&[
                ("family", json!(family.name())),
                ("m", json!(m)),
                ("nmax", json!(values.len())),
                ("split", json!(split.is_some())),
            ]),
            results: Value::Object(res),
            notes: Vec::new(),
        }
    }

    pub fn gfun(model: &SeriesModel) -> OutputRecord {
        let recurrence: Vec<String> = model.recurrence.iter().map(ToString::to_string).collect();
        OutputRecord {
            command: "gfun".into(),
            params: params(&[
                ("family", json!(model.family.map(GraphFamily::name))),
                ("m", json!(model.m)),
            ]),
            results: json!({
                "order": model.order,
                "reduced_order": model.reduced_order,
                "recurrence": recurrence,
                "numerator": decs(&model.numerator),
                "denominator": decs(&model.denominator),
                "terms_used": model.terms_used,
            }),
            notes: Vec::new(),
        }
    }

    pub fn eig(e: &SpectralEstimate) -> OutputRecord {
        OutputRecord {
            command: "eig".into(),
            params: params(&[("family", json!(e.family.name())), ("m", json!(e.m)), ("nmax", json!(e.n_used))]),
            results: json!({
                "theta": float_string(e.theta),
                "a": float_string(e.a),
                "residual": format!("{:.3e}", e.residual),
                "tolerance": format!("{:.0e}", crate::series::spectrum::RESIDUAL_TOLERANCE),
                "converged": e.converged,
            }),
            notes: Vec::new(),
        }
    }

    pub fn verify(scope: &str, lo: usize, hi: usize, report: &Report) -> OutputRecord {
        OutputRecord {
            command: "verify".into(),
            params: params(&[("scope", json!(scope)), ("m_from", json!(lo)), ("m_to", json!(hi))]),
            results: json!({
                "passed": report.passed(),
                "checks": serde_json::to_value(&report.checks).expect("checks serialize"),
            }),
            notes: Vec::new(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> OutputRecord {
        self.notes.push(note.into());
        self
    }

    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("record serializes");
        serde_json::to_string(&v).expect("value serializes")
    }

    pub fn from_json(s: &str) -> Result<OutputRecord> {
        serde_json::from_str(s).map_err(|e| Error::Parameter(format!("bad record: {e}")))
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => self.to_json(),
            OutputFormat::Plain => self.plain(),
            OutputFormat::Csv => self.csv(),
        }
    }

    fn str_at<'a>(&'a self, key: &str) -> &'a str {
        self.results.get(key).and_then(Value::as_str).unwrap_or("")
    }

    fn list(&self, key: &str) -> Vec<String> {
        self.results
            .get(key)
            .and_then(Value::as_array)
            .map(|a| a.iter().map(|v| v.as_str().map_or_else(|| v.to_string(), str::to_string)).collect())
            .unwrap_or_default()
    }

    fn plain(&self) -> String {
        let mut out = String::new();
        match self.command.as_str() {
            "count" => {
                out.push_str(self.str_at("value"));
                if self.results.get("f0").is_some() {
                    let _ = write!(out, "\nf0 {}\nf1 {}", self.str_at("f0"), self.str_at("f1"));
                }
            }
            "series" => {
                let v = self.list("values");
                if self.results.get("f0").is_some() {
                    let (f0, f1) = (self.list("f0"), self.list("f1"));
                    let lines: Vec<String> = (0..v.len()).map(|i| format!("{} {} {}", v[i], f0[i], f1[i])).collect();
                    out.push_str(&lines.join("\n"));
                } else {
                    out.push_str(&v.join("\n"));
                }
            }
            "gfun" => {
                let r = &self.results;
                let _ = writeln!(out, "order {}", r["order"]);
                if let Some(d) = r["reduced_order"].as_u64() {
                    let _ = writeln!(out, "order in x^2 {d}");
                }
                let _ = writeln!(out, "recurrence {}", self.list("recurrence").join(" "));
                let _ = writeln!(out, "P {}", self.list("numerator").join(" "));
                let _ = write!(out, "Q {}", self.list("denominator").join(" "));
            }
            "eig" => {
                let r = &self.results;
                let _ = write!(
                    out,
                    "theta {}\na {}\nresidual {}\nconverged {}",
                    self.str_at("theta"),
                    self.str_at("a"),
                    self.str_at("residual"),
                    r["converged"]
                );
            }
            "verify" => {
                for c in self.results["checks"].as_array().into_iter().flatten() {
                    let m = c["m"].as_u64().map_or("-".to_string(), |m| m.to_string());
                    let mark = if c["passed"].as_bool() == Some(true) { "PASS" } else { "FAIL" };
                    let _ = writeln!(out, "{mark} m={m} {}: {}", c["name"].as_str().unwrap_or(""), c["detail"].as_str().unwrap_or(""));
                }
                let _ = write!(out, "{}", if self.results["passed"].as_bool() == Some(true) { "all passed" } else { "FAILURES" });
            }
            _ => out.push_str(&self.to_json()),
        }
        out
    }

    fn csv(&self) -> String {
        let p = &self.params;
        let fam = p.get("family").and_then(Value::as_str).unwrap_or("");
        let m = p.get("m").map(ToString::to_string).unwrap_or_default();
        let split = self.results.get("f0").is_some();
        let head = if split { "family,m,n,value,f0,f1" } else { "family,m,n,value" };
        let mut rows = Vec::new();
        match self.command.as_str() {
            "count" => {
                rows.push(head.to_string());
                let n = &p["n"];
                let mut row = format!("{fam},{m},{n},{}", self.str_at("value"));
                if split {
                    let _ = write!(row, ",{},{}", self.str_at("f0"), self.str_at("f1"));
                }
                rows.push(row);
            }
            "series" => {
                rows.push(head.to_string());
                let (v, f0, f1) = (self.list("values"), self.list("f0"), self.list("f1"));
                for (i, x) in v.iter().enumerate() {
                    let mut row = format!("{fam},{m},{},{x}", i + 1);
                    if split {
                        let _ = write!(row, ",{},{}", f0[i], f1[i]);
                    }
                    rows.push(row);
                }
            }
            "gfun" => {
                rows.push("family,m,part,degree,coefficient".into());
                for (part, key) in [("recurrence", "recurrence"), ("P", "numerator"), ("Q", "denominator")] {
                    let start = usize::from(part == "recurrence");
                    for (i, c) in self.list(key).iter().enumerate() {
                        rows.push(format!("{fam},{m},{part},{},{c}", i + start));
                    }
                }
            }
            "eig" => {
                rows.push("family,m,theta,a,residual,converged".into());
                rows.push(format!(
                    "{fam},{m},{},{},{},{}",
                    self.str_at("theta"),
                    self.str_at("a"),
                    self.str_at("residual"),
                    self.results["converged"]
                ));
            }
            "verify" => {
                rows.push("check,m,passed".into());
                for c in self.results["checks"].as_array().into_iter().flatten() {
                    let name = c["name"].as_str().unwrap_or("").replace(',', ";");
                    let m = c["m"].as_u64().map_or(String::new(), |m| m.to_string());
                    rows.push(format!("{name},{m},{}", c["passed"]));
                }
            }
            _ => rows.push(self.to_json()),
        }
        rows.join("\n")
    }
}
