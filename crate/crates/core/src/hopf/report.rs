//! Check reports with canonical serialization.
//!
//! Reports are the single output format of every checker and of the command
//! line tool. Serialization is deterministic: map keys are sorted, integers
//! are rendered as decimal strings, and no timing or host information enters
//! the bytes, so identical requests produce identical files.

use super::{GVec, TVec};
use serde_json::{Map, Value};
use std::fmt::Display;

/// Integer rendered as a decimal string, the canonical number form.
pub fn jint(x: i64) -> Value {
    Value::String(x.to_string())
}

pub fn jstr(x: impl Display) -> Value {
    Value::String(x.to_string())
}

pub fn jobj(pairs: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    for (k, v) in pairs {
        map.insert(k.to_string(), v);
    }
    Value::Object(map)
}

/// Grothendieck vector as {tag: coefficient-string}.
pub fn jgvec(v: &GVec) -> Value {
    let mut map = Map::new();
    for (t, c) in v.iter() {
        map.insert(t.to_string(), jint(*c));
    }
    Value::Object(map)
}

/// Tensor vector as {"a (x) b": coefficient-string}.
pub fn jtvec(v: &TVec) -> Value {
    let mut map = Map::new();
    for ((a, b), c) in v.iter() {
        map.insert(format!("{a} (x) {b}"), jint(*c));
    }
    Value::Object(map)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub inputs: Value,
    pub lhs: Value,
    pub rhs: Value,
    pub equal: bool,
}

impl Cell {
    pub fn new(inputs: Value, lhs: Value, rhs: Value) -> Self {
        let equal = lhs == rhs;
        Cell {
            inputs,
            lhs,
            rhs,
            equal,
        }
    }

    /// Cell whose verdict is decided by the caller rather than by equality of
    /// the serialized sides.
    pub fn with_verdict(inputs: Value, lhs: Value, rhs: Value, equal: bool) -> Self {
        Cell {
            inputs,
            lhs,
            rhs,
            equal,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub request: Value,
    pub cells: Vec<Cell>,
}

impl Report {
    pub fn new(request: Value) -> Self {
        Report {
            request,
            cells: Vec::new(),
        }
    }

    pub fn push(&mut self, cell: Cell) {
        self.cells.push(cell);
    }

    pub fn passed(&self) -> bool {
        self.cells.iter().all(|c| c.equal)
    }

    pub fn status(&self) -> &'static str {
        if self.passed() {
            "pass"
        } else {
            "fail"
        }
    }

    pub fn first_failure(&self) -> Option<&Cell> {
        self.cells.iter().find(|c| !c.equal)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter().filter(|c| !c.equal)
    }

    pub fn to_json(&self) -> Value {
        let cells: Vec<Value> = self
            .cells
            .iter()
            .map(|c| {
                jobj(vec![
                    ("equal", Value::Bool(c.equal)),
                    ("inputs", c.inputs.clone()),
                    ("lhs", c.lhs.clone()),
                    ("rhs", c.rhs.clone()),
                ])
            })
            .collect();
        jobj(vec![
            ("request", self.request.clone()),
            ("status", jstr(self.status())),
            ("cells", Value::Array(cells)),
            // Pinned so that report bytes depend only on the request.
            ("elapsed_ms", jint(0)),
        ])
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("inputs,lhs,rhs,equal\n");
        for c in &self.cells {
            let row = [
                serde_json::to_string(&c.inputs).unwrap(),
                serde_json::to_string(&c.lhs).unwrap(),
                serde_json::to_string(&c.rhs).unwrap(),
                c.equal.to_string(),
            ];
            let escaped: Vec<String> = row
                .iter()
                .map(|f| format!("\"{}\"", f.replace('"', "\"\"")))
                .collect();
            out.push_str(&escaped.join(","));
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn serialization_is_deterministic_and_sorted() {
        let mut r = Report::new(jobj(vec![("check", jstr("demo"))]));
        r.push(Cell::new(
            jobj(vec![("m", jint(2)), ("a", jstr("x"))]),
            jint(3),
            jint(3),
        ));
        let s1 = r.to_json_string();
        let s2 = r.to_json_string();
        assert_eq!(s1, s2);
        // Keys come out sorted regardless of insertion order.
        let a_pos = s1.find("\"a\"").unwrap();
        let m_pos = s1.find("\"m\"").unwrap();
        assert!(a_pos < m_pos);
        assert!(s1.contains("\"status\": \"pass\""));
        assert!(s1.contains("\"elapsed_ms\": \"0\""));
    }

    #[test]
    fn failures_flip_status() {
        let mut r = Report::new(Value::Null);
        r.push(Cell::new(Value::Null, jint(1), jint(2)));
        assert_eq!(r.status(), "fail");
        assert!(r.first_failure().is_some());
        let csv = r.to_csv();
        assert!(csv.starts_with("inputs,lhs,rhs,equal\n"));
        assert!(csv.contains("false"));
    }
}
