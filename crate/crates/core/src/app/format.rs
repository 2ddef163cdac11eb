//! JSON point and disk files. Rationals are written as strings (`"3"`,
//! `"-7/4"`); on input, JSON integers and decimal strings are accepted too.

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::kernel::rational::{format_rational, parse_rational};
use crate::kernel::{check_distinct, GeneralizedDisk, KernelError, RPoint, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("{path}: {msg}")]
    Field { path: String, msg: String },
    #[error("duplicate points {0} and {1}")]
    Duplicate(usize, usize),
}

fn field(path: impl Into<String>, msg: impl Into<String>) -> FormatError {
    FormatError::Field { path: path.into(), msg: msg.into() }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct PointsFile {
    pub points: Vec<RPoint>,
    pub meta: Option<Value>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct DisksFile {
    pub disks: Vec<GeneralizedDisk>,
    pub meta: Option<Value>,
}

fn parse_doc(text: &str) -> Result<Map<String, Value>, FormatError> {
    match serde_json::from_str::<Value>(text) {
        Ok(Value::Object(m)) => Ok(m),
        Ok(_) => Err(field("$", "expected an object")),
        Err(e) => Err(FormatError::Json(e.to_string())),
    }
}

fn rational_at(v: &Value, path: &str) -> Result<Rational, FormatError> {
    match v {
        Value::String(s) => parse_rational(s).map_err(|e| field(path, e.to_string())),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rational::from_integer(i.into()))
            } else if let Some(u) = n.as_u64() {
                Ok(Rational::from_integer(u.into()))
            } else {
                Err(field(path, format!("non-integer number {n}; write it as a string")))
            }
        }
        _ => Err(field(path, "expected a rational")),
    }
}

fn point_at(v: &Value, path: &str) -> Result<RPoint, FormatError> {
    match v.as_array().map(Vec::as_slice) {
        Some([x, y]) => Ok(RPoint::new(
            rational_at(x, &format!("{path}[0]"))?,
            rational_at(y, &format!("{path}[1]"))?,
        )),
        _ => Err(field(path, "expected [x, y]")),
    }
}

fn list<'a>(doc: &'a Map<String, Value>, key: &str) -> Result<&'a Vec<Value>, FormatError> {
    doc.get(key)
        .ok_or_else(|| field("$", format!("missing field \"{key}\"")))?
        .as_array()
        .ok_or_else(|| field(key, "expected a list"))
}

/// Parses a points file; points must be pairwise distinct.
pub fn parse_points(text: &str) -> Result<PointsFile, FormatError> {
    let doc = parse_doc(text)?;
    let points = list(&doc, "points")?
        .iter()
        .enumerate()
        .map(|(i, v)| point_at(v, &format!("points[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    if let Err(KernelError::Duplicate(i, j)) = check_distinct(&points) {
        return Err(FormatError::Duplicate(i, j));
    }
    Ok(PointsFile { points, meta: doc.get("meta").cloned() })
}

fn disk_at(v: &Value, path: &str) -> Result<GeneralizedDisk, FormatError> {
    let obj = v.as_object().ok_or_else(|| field(path, "expected an object"))?;
    let get = |k: &str| {
        obj.get(k)
            .ok_or_else(|| field(path, format!("missing field \"{k}\"")))
    };
    let kind = get("type")?;
    match kind.as_str() {
        Some("disk") => {
            let center = point_at(get("center")?, &format!("{path}.center"))?;
            let r2 = rational_at(get("r2")?, &format!("{path}.r2"))?;
            GeneralizedDisk::disk(center, r2).map_err(|e| field(format!("{path}.r2"), e.to_string()))
        }
        Some("halfplane") => {
            let a = rational_at(get("a")?, &format!("{path}.a"))?;
            let b = rational_at(get("b")?, &format!("{path}.b"))?;
            let c = rational_at(get("c")?, &format!("{path}.c"))?;
            GeneralizedDisk::half_plane(a, b, c).map_err(|e| field(path, e.to_string()))
        }
        _ => Err(field(format!("{path}.type"), format!("unknown disk type {kind}"))),
    }
}

pub fn parse_disks(text: &str) -> Result<DisksFile, FormatError> {
    let doc = parse_doc(text)?;
    let disks = list(&doc, "disks")?
        .iter()
        .enumerate()
        .map(|(i, v)| disk_at(v, &format!("disks[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DisksFile { disks, meta: doc.get("meta").cloned() })
}

fn q(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

fn point_json(p: &RPoint) -> Value {
    json!([q(&p.x), q(&p.y)])
}

pub fn disk_json(d: &GeneralizedDisk) -> Value {
    match d {
        GeneralizedDisk::Disk { center, r2 } => {
            json!({"type": "disk", "center": point_json(center), "r2": q(r2)})
        }
        GeneralizedDisk::HalfPlane { a, b, c } => {
            json!({"type": "halfplane", "a": q(a), "b": q(b), "c": q(c)})
        }
    }
}

/// One list item per line, keys in sorted order.
fn write_doc(key: &str, items: Vec<Value>, meta: Option<&Value>) -> String {
    let mut out = String::from("{\n");
    if let Some(m) = meta {
        out.push_str(&format!("  \"meta\": {m},\n"));
    }
    out.push_str(&format!("  \"{key}\": ["));
    for (i, v) in items.iter().enumerate() {
        out.push_str(if i == 0 { "\n    " } else { ",\n    " });
        out.push_str(&v.to_string());
    }
    if !items.is_empty() {
        out.push_str("\n  ");
    }
    out.push_str("]\n}\n");
    out
}

pub fn write_points(points: &[RPoint], meta: Option<&Value>) -> String {
    write_doc("points", points.iter().map(point_json).collect(), meta)
}

pub fn write_disks(disks: &[GeneralizedDisk], meta: Option<&Value>) -> String {
    write_doc("disks", disks.iter().map(disk_json).collect(), meta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::frac;

    #[test]
    fn points_accept_ints_decimals_and_fractions() {
        let f = parse_points(r#"{"points": [[1, "2.5"], ["-3/4", "0"]]}"#).unwrap();
        assert_eq!(f.points[0], RPoint::new(frac(1, 1), frac(5, 2)));
        assert_eq!(f.points[1], RPoint::new(frac(-3, 4), frac(0, 1)));
        assert_eq!(f.meta, None);
    }

    #[test]
    fn errors_carry_the_field_path() {
        let e = parse_points(r#"{"points": [[1, 2], [3, "1/0"]]}"#).unwrap_err();
        assert_eq!(e.to_string(), "points[1][1]: zero denominator in '1/0'");
        let e = parse_points(r#"{"points": [[1, 2.5]]}"#).unwrap_err();
        assert!(e.to_string().starts_with("points[0][1]: non-integer"));
        let e = parse_points(r#"{"points": [[1, 2], ["2/2", "4/2"]]}"#).unwrap_err();
        assert_eq!(e, FormatError::Duplicate(0, 1));
        let e = parse_disks(r#"{"disks": [{"type": "disk", "center": [0, 0]}]}"#).unwrap_err();
        assert_eq!(e.to_string(), "disks[0]: missing field \"r2\"");
        assert!(matches!(parse_points("{\"points\": [\n[1,"), Err(FormatError::Json(_))));
    }

    #[test]
    fn disks_round_trip() {
        let disks = vec![
            GeneralizedDisk::Disk { center: RPoint::new(frac(1, 3), frac(-2, 1)), r2: frac(7, 4) },
            GeneralizedDisk::HalfPlane { a: frac(0, 1), b: frac(1, 1), c: frac(3, 2) },
        ];
        let meta = json!({"family": "test"});
        let text = write_disks(&disks, Some(&meta));
        let back = parse_disks(&text).unwrap();
        assert_eq!(back.disks, disks);
        assert_eq!(back.meta, Some(meta));
        assert_eq!(parse_disks(&write_disks(&[], None)).unwrap().disks, vec![]);
    }
}
