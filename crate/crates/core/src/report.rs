//! Record emission as CSV or JSON lines. Floats carry 17 significant digits.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coadjoint::PhaseSpaceClass;
use crate::linalg::Matrix;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    #[default]
    Csv,
    JsonLines,
}

impl Format {
    pub fn as_str(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::JsonLines => "json-lines",
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json-lines" | "jsonl" | "json_lines" => Ok(Format::JsonLines),
            _ => Err(Error::UnknownName { kind: "format", name: s.into(), valid: "csv, json-lines".into() }),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Str(String),
    Num(f64),
    Int(i64),
    /// rows joined by `;`, entries by spaces in CSV; nested arrays in JSON
    Matrix(Vec<Vec<f64>>),
    Null,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Str(s) if s.contains([',', '"', '\n']) => format!("\"{}\"", s.replace('"', "\"\"")),
            Cell::Str(s) => s.clone(),
            Cell::Num(x) => num(*x),
            Cell::Int(i) => i.to_string(),
            Cell::Matrix(m) => m.iter().map(|r| r.iter().map(|x| num(*x)).collect::<Vec<_>>().join(" ")).collect::<Vec<_>>().join(";"),
            Cell::Null => String::new(),
        }
    }

    fn json(&self) -> String {
        match self {
            Cell::Str(s) => serde_json::to_string(s).expect("string serializes"),
            Cell::Num(x) if x.is_finite() => num(*x),
            Cell::Num(_) => "null".into(),
            Cell::Int(i) => i.to_string(),
            Cell::Matrix(m) => format!(
                "[{}]",
                m.iter()
                    .map(|r| format!("[{}]", r.iter().map(|x| Cell::Num(*x).json()).collect::<Vec<_>>().join(",")))
                    .collect::<Vec<_>>()
                    .join(",")
            ),
            Cell::Null => "null".into(),
        }
    }
}

impl From<&Matrix<f64>> for Cell {
    fn from(m: &Matrix<f64>) -> Self {
        Cell::Matrix(m.to_rows())
    }
}

impl From<Option<f64>> for Cell {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Cell::Null, Cell::Num)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Str(s.into())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Str(s)
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<usize> for Cell {
    fn from(i: usize) -> Self {
        Cell::Int(i as i64)
    }
}

/// 17 significant digits.
pub fn num(x: f64) -> String {
    format!("{x:.16e}")
}

/// Ordered (column, value) pairs.
pub type Record = Vec<(&'static str, Cell)>;

/// Writes records with a metadata header: `# key=value` lines for CSV, a
/// leading `{"metadata": {...}}` object for JSON lines. All records must share columns.
pub fn write_records<W: Write>(mut w: W, format: Format, metadata: &[(&str, String)], records: &[Record]) -> Result<()> {
    match format {
        Format::Csv => {
            for (k, v) in metadata {
                writeln!(w, "# {k}={v}")?;
            }
            if let Some(first) = records.first() {
                writeln!(w, "{}", first.iter().map(|(k, _)| *k).collect::<Vec<_>>().join(","))?;
            }
            for r in records {
                writeln!(w, "{}", r.iter().map(|(_, c)| c.csv()).collect::<Vec<_>>().join(","))?;
            }
        }
        Format::JsonLines => {
            if !metadata.is_empty() {
                let meta: serde_json::Map<String, serde_json::Value> =
                    metadata.iter().map(|(k, v)| (k.to_string(), serde_json::Value::String(v.clone()))).collect();
                writeln!(w, "{}", serde_json::json!({ "metadata": meta }))?;
            }
            for r in records {
                let body: Vec<String> =
                    r.iter().map(|(k, c)| format!("{}:{}", serde_json::to_string(k).expect("key"), c.json())).collect();
                writeln!(w, "{{{}}}", body.join(","))?;
            }
        }
    }
    Ok(())
}

/// One row of an orbit or classification report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrbitRecord {
    pub name: String,
    pub variant: String,
    pub dim: usize,
    pub class: PhaseSpaceClass,
    pub g: f64,
    pub f: f64,
    pub max_residual: f64,
}

impl OrbitRecord {
    pub fn record(&self) -> Record {
        vec![
            ("name", self.name.clone().into()),
            ("variant", self.variant.clone().into()),
            ("dim", self.dim.into()),
            ("class", self.class.as_str().into()),
            ("G", self.g.into()),
            ("F", self.f.into()),
            ("max_residual", self.max_residual.into()),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows() -> Vec<Record> {
        vec![
            vec![("name", "a,b".into()), ("x", 1.0.into()), ("n", 3usize.into())],
            vec![("name", "c".into()), ("x", (-0.1).into()), ("n", 4usize.into())],
        ]
    }

    #[test]
    fn matrix_and_null_cells() {
        let r: Vec<Record> = vec![vec![("m", Cell::Matrix(vec![vec![1.0, 0.0], vec![0.0, 2.0]])), ("z", Cell::Null)]];
        let mut buf = Vec::new();
        write_records(&mut buf, Format::JsonLines, &[], &r).unwrap();
        let v: serde_json::Value = serde_json::from_str(std::str::from_utf8(&buf).unwrap().trim()).unwrap();
        assert_eq!(v["m"][1][1].as_f64(), Some(2.0));
        assert!(v["z"].is_null());
        let mut buf = Vec::new();
        write_records(&mut buf, Format::Csv, &[], &r).unwrap();
        assert!(String::from_utf8(buf).unwrap().ends_with("0.0000000000000000e0 2.0000000000000000e0,\n"));
    }

    #[test]
    fn csv_layout() {
        let mut buf = Vec::new();
        write_records(&mut buf, Format::Csv, &[("algebra", "G".into())], &rows()).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "# algebra=G\nname,x,n\n\"a,b\",1.0000000000000000e0,3\nc,-1.0000000000000001e-1,4\n"
        );
    }

    #[test]
    fn json_lines_parse_back() {
        let mut buf = Vec::new();
        write_records(&mut buf, Format::JsonLines, &[("k", "v".into())], &rows()).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<serde_json::Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
        assert_eq!(lines[0]["metadata"]["k"], "v");
        assert_eq!(lines[1]["name"], "a,b");
        assert_eq!(lines[2]["x"].as_f64().unwrap(), -0.1);
    }

    #[test]
    fn seventeen_digits_round_trip() {
        for x in [0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23] {
            assert_eq!(num(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn format_names() {
        assert_eq!("jsonl".parse::<Format>().unwrap(), Format::JsonLines);
        assert!("xml".parse::<Format>().is_err());
    }
}
