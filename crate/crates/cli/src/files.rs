//! JSON file formats for circle families, lattices and synthesis traces.
//!
//! Rationals are written as `"p/q"` strings. On input, integers and decimals
//! are also accepted, as JSON numbers or strings.

use circgeo_core::geometry::{Circle, CircleFamily, FamilyKind, Member, PlanarSettings, Side};
use circgeo_core::lattice::FiniteLattice;
use circgeo_core::rational::{self, Rational};
use circgeo_core::synthesis::{BaseCircle, SynthesisStep, SynthesisTrace};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Text(String),
    Integer(i64),
}

impl Number {
    fn parse(&self, path: &str) -> Result<Rational, CliError> {
        match self {
            Number::Text(s) => rational::parse(s).map_err(|e| CliError::Parse(format!("{path}: {e}: {s:?}"))),
            Number::Integer(n) => Ok(rational::int(*n)),
        }
    }

    fn of(x: &Rational) -> Self {
        Number::Text(rational::to_fraction_string(x))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircleEntry {
    pub id: String,
    pub x: Number,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<Number>,
    pub r: Number,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircleFile {
    pub kind: String,
    pub circles: Vec<CircleEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<Number>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeFile {
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
}

fn from_json<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T, CliError> {
    serde_json::from_str(text)
        .map_err(|e| CliError::Parse(format!("{what} at line {}, column {}: {e}", e.line(), e.column())))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn parse_circle_file(text: &str) -> Result<CircleFamily, CliError> {
    let file: CircleFile = from_json(text, "circle file")?;
    family_from_file(&file)
}

pub fn family_from_file(file: &CircleFile) -> Result<CircleFamily, CliError> {
    let kind = match file.kind.as_str() {
        "collinear" => FamilyKind::Collinear,
        "planar" => FamilyKind::Planar,
        other => {
            return Err(CliError::Parse(format!(
                "kind: expected \"collinear\" or \"planar\", found {other:?}"
            )))
        }
    };
    let mut members = Vec::with_capacity(file.circles.len());
    for (i, c) in file.circles.iter().enumerate() {
        let at = |field: &str| format!("circles[{i}].{field}");
        let x = c.x.parse(&at("x"))?;
        let y = match &c.y {
            Some(y) => y.parse(&at("y"))?,
            None => rational::zero(),
        };
        let r = c.r.parse(&at("r"))?;
        if kind == FamilyKind::Collinear && y != rational::zero() {
            return Err(CliError::Parse(format!("{}: collinear circles need y = 0", at("y"))));
        }
        members.push(Member {
            id: c.id.clone(),
            circle: Circle::new(x, y, r),
        });
    }
    let mut family = CircleFamily::new(kind, members).map_err(|e| CliError::Parse(format!("circles: {e}")))?;
    if let Some(t) = &file.tolerance {
        family = family.with_tolerance(t.parse("tolerance")?);
    }
    Ok(family)
}

fn default_tolerance() -> Rational {
    rational::from_f64(PlanarSettings::default().tolerance).expect("finite")
}

pub fn circle_file(family: &CircleFamily) -> CircleFile {
    let collinear = family.is_collinear();
    CircleFile {
        kind: if collinear { "collinear" } else { "planar" }.to_string(),
        circles: family
            .members()
            .iter()
            .map(|m| CircleEntry {
                id: m.id.clone(),
                x: Number::of(&m.circle.cx),
                y: (!collinear).then(|| Number::of(&m.circle.cy)),
                r: Number::of(&m.circle.r),
            })
            .collect(),
        tolerance: (*family.tolerance() != default_tolerance()).then(|| Number::of(family.tolerance())),
    }
}

pub fn emit_circle_file(family: &CircleFamily) -> String {
    to_json(&circle_file(family))
}

pub fn parse_lattice_file(text: &str) -> Result<FiniteLattice, CliError> {
    let file: LatticeFile = from_json(text, "lattice file")?;
    FiniteLattice::from_labeled_covers(file.elements, &file.covers)
        .map_err(|e| CliError::Parse(format!("lattice: {e}")))
}

pub fn lattice_file(l: &FiniteLattice) -> LatticeFile {
    LatticeFile {
        elements: l.labels().to_vec(),
        covers: l
            .cover_pairs()
            .into_iter()
            .map(|(a, b)| (l.label(a).to_string(), l.label(b).to_string()))
            .collect(),
    }
}

pub fn emit_lattice_file(l: &FiniteLattice) -> String {
    to_json(&lattice_file(l))
}

/// Which format a JSON document is in, judged by its top-level keys.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DocumentKind {
    Circles,
    Lattice,
}

pub fn sniff(text: &str) -> Result<DocumentKind, CliError> {
    let value: serde_json::Value = from_json(text, "input")?;
    match value {
        serde_json::Value::Object(map) if map.contains_key("circles") => Ok(DocumentKind::Circles),
        serde_json::Value::Object(map) if map.contains_key("elements") => Ok(DocumentKind::Lattice),
        _ => Err(CliError::Parse(
            "input: expected an object with \"circles\" or \"elements\"".into(),
        )),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BaseEntry {
    pub element: String,
    pub radius: Number,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepEntry {
    pub element: String,
    pub side: String,
    pub below: Vec<String>,
    pub left: Vec<String>,
    pub gap: (Option<Number>, Option<Number>),
    pub lmpt: Number,
    pub rmpt_initial: Number,
    pub rmpt: Number,
    pub repair_iterations: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceFile {
    pub base: Vec<BaseEntry>,
    pub steps: Vec<StepEntry>,
    pub backtracks: usize,
}

pub fn trace_file(trace: &SynthesisTrace) -> TraceFile {
    TraceFile {
        base: trace
            .base
            .iter()
            .map(|b| BaseEntry {
                element: b.element.clone(),
                radius: Number::of(&b.radius),
            })
            .collect(),
        steps: trace
            .steps
            .iter()
            .map(|s| StepEntry {
                element: s.element.clone(),
                side: match s.side {
                    Side::Left => "left",
                    Side::Right => "right",
                }
                .to_string(),
                below: s.below.clone(),
                left: s.left.clone(),
                gap: (s.gap.0.as_ref().map(Number::of), s.gap.1.as_ref().map(Number::of)),
                lmpt: Number::of(&s.lmpt),
                rmpt_initial: Number::of(&s.rmpt_initial),
                rmpt: Number::of(&s.rmpt),
                repair_iterations: s.repair_iterations,
            })
            .collect(),
        backtracks: trace.backtracks,
    }
}

pub fn emit_trace_file(trace: &SynthesisTrace) -> String {
    to_json(&trace_file(trace))
}

pub fn parse_trace_file(text: &str) -> Result<SynthesisTrace, CliError> {
    let file: TraceFile = from_json(text, "trace file")?;
    let base = file
        .base
        .iter()
        .enumerate()
        .map(|(i, b)| {
            Ok(BaseCircle {
                element: b.element.clone(),
                radius: b.radius.parse(&format!("base[{i}].radius"))?,
            })
        })
        .collect::<Result<_, CliError>>()?;
    let steps = file
        .steps
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let at = |field: &str| format!("steps[{i}].{field}");
            let side = match s.side.as_str() {
                "left" => Side::Left,
                "right" => Side::Right,
                other => return Err(CliError::Parse(format!("{}: unknown side {other:?}", at("side")))),
            };
            let bound = |n: &Option<Number>, field: &str| n.as_ref().map(|v| v.parse(&at(field))).transpose();
            Ok(SynthesisStep {
                element: s.element.clone(),
                side,
                below: s.below.clone(),
                left: s.left.clone(),
                gap: (bound(&s.gap.0, "gap[0]")?, bound(&s.gap.1, "gap[1]")?),
                lmpt: s.lmpt.parse(&at("lmpt"))?,
                rmpt_initial: s.rmpt_initial.parse(&at("rmpt_initial"))?,
                rmpt: s.rmpt.parse(&at("rmpt"))?,
                repair_iterations: s.repair_iterations,
            })
        })
        .collect::<Result<_, CliError>>()?;
    Ok(SynthesisTrace {
        base,
        steps,
        backtracks: file.backtracks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const THREE: &str = r#"{
  "kind": "collinear",
  "circles": [
    {
      "id": "A",
      "x": "0/1",
      "r": "1/1"
    },
    {
      "id": "B",
      "x": "2/1",
      "r": "1/1"
    }
  ]
}
"#;

    #[test]
    fn canonical_circle_file_round_trips() {
        let fam = parse_circle_file(THREE).unwrap();
        assert_eq!(emit_circle_file(&fam), THREE);
    }

    #[test]
    fn shorthand_numbers_are_accepted() {
        let fam = parse_circle_file(
            r#"{"kind":"planar","circles":[{"id":"p","x":1,"y":"0.5","r":"1/3"}],"tolerance":"1/1000"}"#,
        )
        .unwrap();
        assert_eq!(fam.circle(0).cy, rational::frac(1, 2));
        assert_eq!(*fam.tolerance(), rational::frac(1, 1000));
        let again = parse_circle_file(&emit_circle_file(&fam)).unwrap();
        assert_eq!(again, fam);
    }

    #[test]
    fn errors_are_positional() {
        let e = parse_circle_file("{\"kind\": \"collinear\",\n \"circles\": [ }").unwrap_err();
        assert!(e.to_string().contains("line 2"), "{e}");
        let e = parse_circle_file(
            r#"{"kind":"collinear","circles":[{"id":"a","x":"0","r":"1"},{"id":"b","x":"0","r":"x"}]}"#,
        )
        .unwrap_err();
        assert!(e.to_string().starts_with("circles[1].r"), "{e}");
        let e =
            parse_circle_file(r#"{"kind":"collinear","circles":[{"id":"a","x":"0","y":"1","r":"1"}]}"#).unwrap_err();
        assert!(e.to_string().contains("circles[0].y"), "{e}");
        let e = parse_circle_file(r#"{"kind":"collinear","circles":[{"id":"a","x":"0","r":"-1"}]}"#).unwrap_err();
        assert!(e.to_string().contains("negative"), "{e}");
    }

    #[test]
    fn lattice_file_round_trips() {
        let text = r#"{"elements":["0","a","b","1"],"covers":[["0","a"],["0","b"],["a","1"],["b","1"]]}"#;
        let l = parse_lattice_file(text).unwrap();
        let emitted = emit_lattice_file(&l);
        assert_eq!(emit_lattice_file(&parse_lattice_file(&emitted).unwrap()), emitted);
        assert!(parse_lattice_file(r#"{"elements":["0","a"],"covers":[["0","z"]]}"#).is_err());
    }

    #[test]
    fn sniffing() {
        assert_eq!(sniff(THREE).unwrap(), DocumentKind::Circles);
        assert_eq!(sniff(r#"{"elements":[],"covers":[]}"#).unwrap(), DocumentKind::Lattice);
        assert!(sniff("[]").is_err());
    }
}
