//! Named requests: the single entry point shared by the command line tool
//! and the integration suites. A request names a tower, a check or table, a
//! Grothendieck group, and a degree; it is validated against a per request
//! degree cap before any computation starts and produces a deterministic
//! report. Caps differ by route: module level sweeps stop where the
//! multiplication tables stop, character and word level sweeps go further.

use crate::comb::composition::Composition;
use crate::error::{Result, TowerError};
use crate::framework::checks::{
    check_condition3, check_condition5, check_conditions12, check_pairing, Group,
};
use crate::framework::Tower;
use crate::hecke0::{
    box_of, eta, hecke_g0_data, hecke_k0_data, hecke_pairing, nu, nu_tail, HeckeTower,
};
use crate::hopf::checks::{check_antipode, check_as_as, check_bialgebra, check_duality};
use crate::hopf::report::{jgvec, jint, jobj, jstr, jtvec, Cell, Report};
use crate::hopf::{BasisTag, HopfData, PairingMatrix};
use crate::sym::chars::CHAR_CAP;
use crate::sym::{sym_condition5_characters, sym_hopf_data, sym_pairing, SymTower};
use crate::z2::{z2_hopf_data, z2_pairing, Z2Tower};
use serde_json::Value;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TowerName {
    Sym,
    Hecke0,
    Z2,
}

impl TowerName {
    pub fn as_str(self) -> &'static str {
        match self {
            TowerName::Sym => "sym",
            TowerName::Hecke0 => "hecke0",
            TowerName::Z2 => "z2",
        }
    }
}

impl FromStr for TowerName {
    type Err = TowerError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sym" => Ok(TowerName::Sym),
            "hecke0" => Ok(TowerName::Hecke0),
            "z2" => Ok(TowerName::Z2),
            _ => Err(TowerError::UnknownName {
                kind: "tower",
                value: s.to_string(),
            }),
        }
    }
}

impl fmt::Display for TowerName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckName {
    Cond12,
    Cond3,
    Cond5,
    Cond5Prime,
    Bialgebra,
    Duality,
    Antipode,
    Pairing,
}

impl CheckName {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::Cond12 => "cond12",
            CheckName::Cond3 => "cond3",
            CheckName::Cond5 => "cond5",
            CheckName::Cond5Prime => "cond5prime",
            CheckName::Bialgebra => "bialgebra",
            CheckName::Duality => "duality",
            CheckName::Antipode => "antipode",
            CheckName::Pairing => "pairing",
        }
    }
}

impl FromStr for CheckName {
    type Err = TowerError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cond12" => Ok(CheckName::Cond12),
            "cond3" => Ok(CheckName::Cond3),
            "cond5" => Ok(CheckName::Cond5),
            "cond5prime" => Ok(CheckName::Cond5Prime),
            "bialgebra" => Ok(CheckName::Bialgebra),
            "duality" => Ok(CheckName::Duality),
            "antipode" => Ok(CheckName::Antipode),
            "pairing" => Ok(CheckName::Pairing),
            _ => Err(TowerError::UnknownName {
                kind: "check",
                value: s.to_string(),
            }),
        }
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn parse_group(s: &str) -> Result<Group> {
    match s {
        "g0" => Ok(Group::G0),
        "k0" => Ok(Group::K0),
        _ => Err(TowerError::UnknownName {
            kind: "group",
            value: s.to_string(),
        }),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = TowerError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            _ => Err(TowerError::UnknownName {
                kind: "format",
                value: s.to_string(),
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableOp {
    Product,
    Coproduct,
    Antipode,
    Pairing,
    Characters,
    ModuleBases,
}

impl TableOp {
    pub fn as_str(self) -> &'static str {
        match self {
            TableOp::Product => "product",
            TableOp::Coproduct => "coproduct",
            TableOp::Antipode => "antipode",
            TableOp::Pairing => "pairing",
            TableOp::Characters => "characters",
            TableOp::ModuleBases => "module-bases",
        }
    }
}

impl FromStr for TableOp {
    type Err = TowerError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "product" => Ok(TableOp::Product),
            "coproduct" => Ok(TableOp::Coproduct),
            "antipode" => Ok(TableOp::Antipode),
            "pairing" => Ok(TableOp::Pairing),
            "characters" => Ok(TableOp::Characters),
            "module-bases" => Ok(TableOp::ModuleBases),
            _ => Err(TowerError::UnknownName {
                kind: "table op",
                value: s.to_string(),
            }),
        }
    }
}

impl fmt::Display for TableOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn parse_degrees(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| TowerError::InvalidRequest(format!("bad degree list {s:?}")))
        })
        .collect()
}

pub fn parse_composition(s: &str) -> Result<Composition> {
    let parts = s
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| TowerError::InvalidComposition(s.to_string()))
        })
        .collect::<Result<Vec<usize>>>()?;
    Composition::new(parts)
}

#[derive(Clone, Debug)]
pub struct CheckRequest {
    pub tower: TowerName,
    pub check: CheckName,
    pub group: Group,
    pub max_degree: usize,
}

/// Largest degree each check accepts. Module level sweeps (conditions 1-3
/// and 5, module pairings) stop at the multiplication table caps; character
/// and word level sweeps on Grothendieck data go to 6. The 0-Hecke K_0 side
/// stops at 4 because its structure constants come from hom spaces over the
/// degree cap algebras.
pub fn check_cap(tower: TowerName, check: CheckName, group: Group) -> usize {
    use CheckName::*;
    match tower {
        TowerName::Z2 => 6,
        TowerName::Sym => match check {
            Cond12 | Cond3 | Cond5 => 5,
            Pairing => 4,
            Cond5Prime | Bialgebra | Duality | Antipode => CHAR_CAP,
        },
        TowerName::Hecke0 => match check {
            Cond12 | Cond3 | Pairing => 5,
            Cond5 | Duality => 4,
            Cond5Prime | Bialgebra | Antipode => match group {
                Group::G0 => 6,
                Group::K0 => 4,
            },
        },
    }
}

fn cap_guard(degree: usize, cap: usize, what: String) -> Result<()> {
    if degree > cap {
        return Err(TowerError::DegreeCap { degree, cap, what });
    }
    Ok(())
}

/// Grothendieck structure constants for data level checks. Semisimple
/// towers have one set; the 0-Hecke tower splits by group.
fn grothendieck_data(tower: TowerName, group: Group, max_degree: usize) -> Result<HopfData> {
    match tower {
        TowerName::Z2 => z2_hopf_data(max_degree),
        TowerName::Sym => sym_hopf_data(&SymTower::new(), max_degree),
        TowerName::Hecke0 => match group {
            Group::G0 => hecke_g0_data(max_degree),
            Group::K0 => hecke_k0_data(&HeckeTower::new(), max_degree),
        },
    }
}

fn tower_pairing(tower: TowerName, max_degree: usize) -> PairingMatrix {
    match tower {
        TowerName::Z2 => z2_pairing(max_degree),
        TowerName::Sym => sym_pairing(max_degree),
        TowerName::Hecke0 => hecke_pairing(max_degree),
    }
}

fn tower_tags(tower: TowerName, n: usize) -> Vec<BasisTag> {
    match tower {
        TowerName::Z2 => Z2Tower::new().tags(n),
        TowerName::Sym => SymTower::new().tags(n),
        TowerName::Hecke0 => HeckeTower::new().tags(n),
    }
}

pub fn run_check(req: &CheckRequest) -> Result<Report> {
    use CheckName::*;
    let cap = check_cap(req.tower, req.check, req.group);
    cap_guard(
        req.max_degree,
        cap,
        format!("{} {} on {}", req.tower, req.check, req.group.name()),
    )?;
    let d = req.max_degree;
    let mut report = match (req.tower, req.check) {
        (TowerName::Z2, Cond12) => check_conditions12(&Z2Tower::new(), d)?,
        (TowerName::Z2, Cond3) => check_condition3(&Z2Tower::new(), d)?,
        (TowerName::Z2, Cond5) => check_condition5(&Z2Tower::new(), req.group, d)?,
        (TowerName::Z2, Pairing) => check_pairing(&Z2Tower::new(), d)?,
        (TowerName::Sym, Cond12) => check_conditions12(&SymTower::new(), d)?,
        (TowerName::Sym, Cond3) => check_condition3(&SymTower::new(), d)?,
        (TowerName::Sym, Cond5) => sym_condition5_characters(&SymTower::new(), req.group, d)?,
        (TowerName::Sym, Pairing) => check_pairing(&SymTower::new(), d)?,
        (TowerName::Hecke0, Cond12) => check_conditions12(&HeckeTower::new(), d)?,
        (TowerName::Hecke0, Cond3) => check_condition3(&HeckeTower::new(), d)?,
        (TowerName::Hecke0, Cond5) => check_condition5(&HeckeTower::new(), req.group, d)?,
        (TowerName::Hecke0, Pairing) => check_pairing(&HeckeTower::new(), d)?,
        (_, Cond5Prime) => check_as_as(&grothendieck_data(req.tower, req.group, d)?, d)?,
        (_, Bialgebra) => check_bialgebra(&grothendieck_data(req.tower, req.group, d)?, d)?,
        (_, Antipode) => check_antipode(&grothendieck_data(req.tower, req.group, d)?, d)?,
        (_, Duality) => {
            let k = grothendieck_data(req.tower, Group::K0, d)?;
            let g = grothendieck_data(req.tower, Group::G0, d)?;
            check_duality(&k, &g, &tower_pairing(req.tower, d), d)?
        }
    };
    let suite = std::mem::replace(&mut report.request, Value::Null);
    report.request = jobj(vec![
        ("command", jstr("check")),
        ("tower", jstr(req.tower)),
        ("check", jstr(req.check)),
        ("group", jstr(req.group.name())),
        ("max_degree", jint(d as i64)),
        ("suite", suite),
    ]);
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct TableRequest {
    pub tower: TowerName,
    pub op: TableOp,
    pub group: Group,
    pub degrees: Vec<usize>,
    pub composition: Option<Composition>,
}

fn want_degrees(req: &TableRequest, count: usize) -> Result<()> {
    if req.degrees.len() != count {
        return Err(TowerError::InvalidRequest(format!(
            "table op {} wants {} degree value(s), got {:?}",
            req.op, count, req.degrees
        )));
    }
    Ok(())
}

pub fn run_table(req: &TableRequest) -> Result<Report> {
    let mut report = Report::new(jobj(vec![
        ("command", jstr("table")),
        ("tower", jstr(req.tower)),
        ("op", jstr(req.op)),
        ("group", jstr(req.group.name())),
        (
            "degrees",
            Value::Array(req.degrees.iter().map(|&d| jint(d as i64)).collect()),
        ),
        (
            "composition",
            req.composition.as_ref().map_or(Value::Null, jstr),
        ),
    ]));
    let data_cap = check_cap(req.tower, CheckName::Bialgebra, req.group);
    match req.op {
        TableOp::Product => {
            want_degrees(req, 2)?;
            let (m, n) = (req.degrees[0], req.degrees[1]);
            cap_guard(m + n, data_cap, format!("{} product table", req.tower))?;
            let data = grothendieck_data(req.tower, req.group, m + n)?;
            for a in data.basis(m) {
                for b in data.basis(n) {
                    let v = jgvec(data.product_tags(a, b)?);
                    report.push(Cell::new(
                        jobj(vec![
                            ("op", jstr("product")),
                            ("m", jint(m as i64)),
                            ("n", jint(n as i64)),
                            ("a", jstr(a)),
                            ("b", jstr(b)),
                        ]),
                        v.clone(),
                        v,
                    ));
                }
            }
        }
        TableOp::Coproduct => {
            want_degrees(req, 1)?;
            let n = req.degrees[0];
            cap_guard(n, data_cap, format!("{} coproduct table", req.tower))?;
            let data = grothendieck_data(req.tower, req.group, n)?;
            for a in data.basis(n) {
                let v = jtvec(data.coproduct_tag(a)?);
                report.push(Cell::new(
                    jobj(vec![
                        ("op", jstr("coproduct")),
                        ("n", jint(n as i64)),
                        ("a", jstr(a)),
                    ]),
                    v.clone(),
                    v,
                ));
            }
        }
        TableOp::Antipode => {
            want_degrees(req, 1)?;
            let n = req.degrees[0];
            cap_guard(n, data_cap, format!("{} antipode table", req.tower))?;
            let data = grothendieck_data(req.tower, req.group, n)?;
            for a in data.basis(n) {
                let v = jgvec(&data.antipode_tag(a)?);
                report.push(Cell::new(
                    jobj(vec![
                        ("op", jstr("antipode")),
                        ("n", jint(n as i64)),
                        ("a", jstr(a)),
                    ]),
                    v.clone(),
                    v,
                ));
            }
        }
        TableOp::Pairing => {
            want_degrees(req, 1)?;
            let n = req.degrees[0];
            cap_guard(n, data_cap, format!("{} pairing table", req.tower))?;
            let p = tower_pairing(req.tower, n);
            let tags = tower_tags(req.tower, n);
            for (i, a) in tags.iter().enumerate() {
                for (j, b) in tags.iter().enumerate() {
                    let v = jint(p.get(n, i, j));
                    report.push(Cell::new(
                        jobj(vec![
                            ("op", jstr("pairing")),
                            ("n", jint(n as i64)),
                            ("row", jstr(a)),
                            ("col", jstr(b)),
                        ]),
                        v.clone(),
                        v,
                    ));
                }
            }
        }
        TableOp::Characters => {
            if req.tower != TowerName::Sym {
                return Err(TowerError::InvalidRequest(format!(
                    "characters table exists only for sym, not {}",
                    req.tower
                )));
            }
            want_degrees(req, 1)?;
            let n = req.degrees[0];
            cap_guard(n, CHAR_CAP, "character table".to_string())?;
            let t = SymTower::new();
            let table = t.chars.table(n)?;
            for lam in &table.parts {
                for mu in &table.parts {
                    let v = jint(table.value(lam, mu));
                    report.push(Cell::new(
                        jobj(vec![
                            ("op", jstr("characters")),
                            ("n", jint(n as i64)),
                            ("irreducible", jstr(lam)),
                            ("class", jstr(mu)),
                        ]),
                        v.clone(),
                        v,
                    ));
                }
            }
        }
        TableOp::ModuleBases => {
            if req.tower != TowerName::Hecke0 {
                return Err(TowerError::InvalidRequest(format!(
                    "module-bases table exists only for hecke0, not {}",
                    req.tower
                )));
            }
            let i = req.composition.as_ref().ok_or_else(|| {
                TowerError::InvalidRequest("module-bases wants --composition".to_string())
            })?;
            let t = HeckeTower::new();
            cap_guard(i.weight(), t.module_cap(), format!("module bases for {i}"))?;
            let header = |element: &str| {
                jobj(vec![
                    ("op", jstr("module-bases")),
                    ("composition", jstr(i)),
                    ("element", jstr(element)),
                ])
            };
            let e = jstr(eta(i));
            report.push(Cell::new(header("eta"), e.clone(), e));
            let v = jstr(nu(i));
            report.push(Cell::new(header("nu"), v.clone(), v));
            let tail = box_of(&nu_tail(i));
            for (idx, sigma) in i.descent_class().iter().enumerate() {
                let w = jstr(tail.left_mul_t(sigma));
                report.push(Cell::new(
                    jobj(vec![
                        ("op", jstr("module-bases")),
                        ("composition", jstr(i)),
                        ("element", jstr("basis")),
                        ("index", jint(idx as i64)),
                        ("word", jstr(sigma)),
                    ]),
                    w.clone(),
                    w,
                ));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(tower: &str, check: &str, group: &str, d: usize) -> CheckRequest {
        CheckRequest {
            tower: tower.parse().unwrap(),
            check: check.parse().unwrap(),
            group: parse_group(group).unwrap(),
            max_degree: d,
        }
    }

    #[test]
    fn names_parse_and_reject_unknowns() {
        assert_eq!("hecke0".parse::<TowerName>().unwrap(), TowerName::Hecke0);
        assert_eq!(
            "cond5prime".parse::<CheckName>().unwrap(),
            CheckName::Cond5Prime
        );
        assert_eq!(
            "module-bases".parse::<TableOp>().unwrap(),
            TableOp::ModuleBases
        );
        assert_eq!("csv".parse::<OutputFormat>().unwrap(), OutputFormat::Csv);
        assert!(matches!(
            "heckle".parse::<TowerName>(),
            Err(TowerError::UnknownName { kind: "tower", .. })
        ));
        assert!(matches!(
            "cond4".parse::<CheckName>(),
            Err(TowerError::UnknownName { kind: "check", .. })
        ));
        assert!(matches!(
            parse_group("h0"),
            Err(TowerError::UnknownName { kind: "group", .. })
        ));
    }

    #[test]
    fn degree_and_composition_parsing() {
        assert_eq!(parse_degrees("1,2").unwrap(), vec![1, 2]);
        assert_eq!(parse_degrees("3").unwrap(), vec![3]);
        assert!(parse_degrees("one").is_err());
        assert_eq!(
            parse_composition("2,1").unwrap(),
            Composition::new(vec![2, 1]).unwrap()
        );
        assert!(parse_composition("2,0").is_err());
    }

    #[test]
    fn caps_reject_oversized_requests() {
        let err = run_check(&check("z2", "cond5", "g0", 7)).unwrap_err();
        assert!(matches!(
            err,
            TowerError::DegreeCap {
                degree: 7,
                cap: 6,
                ..
            }
        ));
        let err = run_check(&check("hecke0", "bialgebra", "k0", 5)).unwrap_err();
        assert!(matches!(
            err,
            TowerError::DegreeCap {
                degree: 5,
                cap: 4,
                ..
            }
        ));
        let err = run_check(&check("sym", "pairing", "g0", 5)).unwrap_err();
        assert!(matches!(
            err,
            TowerError::DegreeCap {
                degree: 5,
                cap: 4,
                ..
            }
        ));
    }

    #[test]
    fn z2_counterexample_through_the_request_layer() {
        let r = run_check(&check("z2", "cond5", "g0", 2)).unwrap();
        assert!(!r.passed());
        assert_eq!(r.request["command"], "check");
        assert_eq!(r.request["tower"], "z2");
        let witness = r.first_failure().unwrap();
        assert_eq!(witness.inputs["identity"], "mackey_compatibility");
    }

    #[test]
    fn sym_condition5_and_hecke_duality_pass_through_the_request_layer() {
        let r = run_check(&check("sym", "cond5", "g0", 4)).unwrap();
        assert!(r.passed(), "first failure: {:?}", r.first_failure());
        assert_eq!(r.request["suite"]["route"], "characters");
        let r = run_check(&check("hecke0", "duality", "g0", 3)).unwrap();
        assert!(r.passed(), "first failure: {:?}", r.first_failure());
    }

    #[test]
    fn product_table_dumps_the_expected_cell() {
        let r = run_table(&TableRequest {
            tower: TowerName::Hecke0,
            op: TableOp::Product,
            group: Group::G0,
            degrees: vec![1, 1],
            composition: None,
        })
        .unwrap();
        assert_eq!(r.cells.len(), 1);
        assert_eq!(
            r.cells[0].lhs,
            serde_json::json!({"(2)": "1", "(1,1)": "1"})
        );
        assert!(r.passed());
    }

    #[test]
    fn pairing_table_is_the_identity() {
        let r = run_table(&TableRequest {
            tower: TowerName::Sym,
            op: TableOp::Pairing,
            group: Group::G0,
            degrees: vec![3],
            composition: None,
        })
        .unwrap();
        assert_eq!(r.cells.len(), 9);
        for c in &r.cells {
            let expect = if c.inputs["row"] == c.inputs["col"] {
                "1"
            } else {
                "0"
            };
            assert_eq!(c.lhs, expect);
        }
    }

    #[test]
    fn characters_table_is_sym_only() {
        let r = run_table(&TableRequest {
            tower: TowerName::Sym,
            op: TableOp::Characters,
            group: Group::G0,
            degrees: vec![3],
            composition: None,
        })
        .unwrap();
        let cell = r
            .cells
            .iter()
            .find(|c| c.inputs["irreducible"] == "(2,1)" && c.inputs["class"] == "(1,1,1)")
            .unwrap();
        assert_eq!(cell.lhs, "2");
        let err = run_table(&TableRequest {
            tower: TowerName::Z2,
            op: TableOp::Characters,
            group: Group::G0,
            degrees: vec![2],
            composition: None,
        })
        .unwrap_err();
        assert!(matches!(err, TowerError::InvalidRequest(_)));
    }

    #[test]
    fn module_bases_table_matches_the_small_closed_forms() {
        let r = run_table(&TableRequest {
            tower: TowerName::Hecke0,
            op: TableOp::ModuleBases,
            group: Group::G0,
            degrees: vec![],
            composition: Some(parse_composition("2,1").unwrap()),
        })
        .unwrap();
        let by_element = |name: &str| {
            r.cells
                .iter()
                .find(|c| c.inputs["element"] == name)
                .map(|c| c.lhs.as_str().unwrap().to_string())
                .unwrap()
        };
        assert_eq!(by_element("eta"), "T[312] + T[321]");
        assert_eq!(by_element("nu"), "T[132] + T[312]");
        let basis: Vec<&Cell> = r
            .cells
            .iter()
            .filter(|c| c.inputs["element"] == "basis")
            .collect();
        assert_eq!(basis.len(), 2);
        let err = run_table(&TableRequest {
            tower: TowerName::Hecke0,
            op: TableOp::ModuleBases,
            group: Group::G0,
            degrees: vec![],
            composition: None,
        })
        .unwrap_err();
        assert!(matches!(err, TowerError::InvalidRequest(_)));
    }

    #[test]
    fn product_table_wants_two_degrees() {
        let err = run_table(&TableRequest {
            tower: TowerName::Sym,
            op: TableOp::Product,
            group: Group::G0,
            degrees: vec![3],
            composition: None,
        })
        .unwrap_err();
        assert!(matches!(err, TowerError::InvalidRequest(_)));
    }
}
