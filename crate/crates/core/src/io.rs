//! JSON documents: input maps, exact radii, barcodes, modules and reports.
//!
//! Rationals are always strings (`"p/q"` or `"p"`); a radius is either
//! `{"rat": "p/q"}` or `{"sqrt": "p/q"}` standing for `√(p/q)`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::classes::{Coefficients, Mode, PointedModule};
use crate::error::{Error, Result};
use crate::exact::{format_rational, parse_rational, ExactRadius, Field, Gap, Int, Norm, RatMatrix, Rational};
use crate::persistence::{Interval, PointedBarcode};
use crate::pipeline::Analysis;
use crate::simplicial::{Complex, PLMap};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub n: usize,
    pub norm: Norm,
    pub vertices: Vec<String>,
    /// Maximal simplices as lists of vertex ids.
    pub simplices: Vec<Vec<String>>,
    pub values: BTreeMap<String, Vec<String>>,
}

fn rational(text: &str, context: impl FnOnce() -> String) -> Result<Rational> {
    parse_rational(text).ok_or_else(|| Error::Input(format!("{}: `{text}` is not a rational", context())))
}

impl InputDocument {
    pub fn to_map(&self) -> Result<PLMap> {
        if self.n == 0 {
            return Err(Error::Input("n: must be at least 1".into()));
        }
        let mut declared = BTreeSet::new();
        for id in &self.vertices {
            if !declared.insert(id.as_str()) {
                return Err(Error::Input(format!("vertices: `{id}` is declared twice")));
            }
        }
        let mut used = BTreeSet::new();
        for (k, simplex) in self.simplices.iter().enumerate() {
            if simplex.is_empty() {
                return Err(Error::Input(format!("simplices[{k}]: empty simplex")));
            }
            for id in simplex {
                if !declared.contains(id.as_str()) {
                    return Err(Error::Input(format!("simplices[{k}]: undeclared vertex `{id}`")));
                }
                used.insert(id.as_str());
            }
        }
        if let Some(id) = self.values.keys().find(|id| !declared.contains(id.as_str())) {
            return Err(Error::Input(format!("values: undeclared vertex `{id}`")));
        }
        let mut tops: Vec<Vec<&str>> = self.simplices.iter().map(|s| s.iter().map(String::as_str).collect()).collect();
        // Declared vertices outside every listed simplex are isolated points.
        tops.extend(self.vertices.iter().filter(|v| !used.contains(v.as_str())).map(|v| vec![v.as_str()]));
        let complex = Complex::build(&tops).map_err(|e| Error::Input(format!("simplices: {e}")))?;
        let mut values = Vec::with_capacity(complex.vertex_count());
        for id in complex.vertices() {
            let raw = self.values.get(id).ok_or_else(|| Error::Input(format!("values: missing vertex `{id}`")))?;
            if raw.len() != self.n {
                return Err(Error::Input(format!(
                    "values.{id}: expected {} components, found {}",
                    self.n,
                    raw.len()
                )));
            }
            let v = raw
                .iter()
                .enumerate()
                .map(|(i, x)| rational(x, || format!("values.{id}[{i}]")))
                .collect::<Result<Vec<_>>>()?;
            values.push(v);
        }
        PLMap::new(complex, values, self.n, self.norm)
    }

    pub fn from_map(f: &PLMap) -> InputDocument {
        let x = f.complex();
        InputDocument {
            n: f.n(),
            norm: f.norm(),
            vertices: x.vertices().to_vec(),
            simplices: x.maximal_simplices().iter().map(|s| x.labels(s)).collect(),
            values: (0..x.vertex_count())
                .map(|v| (x.vertex_id(v).to_string(), f.value(v).iter().map(format_rational).collect()))
                .collect(),
        }
    }
}

/// Parses and validates an input document.
pub fn parse_input(text: &str) -> Result<PLMap> {
    let doc: InputDocument = serde_json::from_str(text).map_err(|e| Error::Input(format!("input document: {e}")))?;
    doc.to_map()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum RadiusDoc {
    Rat(String),
    Sqrt(String),
}

impl RadiusDoc {
    pub fn of(r: &ExactRadius) -> RadiusDoc {
        match r {
            ExactRadius::Rat(x) => RadiusDoc::Rat(format_rational(x)),
            ExactRadius::SqrtRat(q) => RadiusDoc::Sqrt(format_rational(q)),
        }
    }

    pub fn radius(&self) -> Result<ExactRadius> {
        match self {
            RadiusDoc::Rat(x) => Ok(ExactRadius::rat(rational(x, || "radius".into())?)),
            RadiusDoc::Sqrt(q) => {
                let q = rational(q, || "radius".into())?;
                if q < Rational::from_integer(0.into()) {
                    return Err(Error::Input(format!("radius: square root of negative {q}")));
                }
                Ok(ExactRadius::sqrt(q))
            }
        }
    }
}

/// A distance: a radius, or a difference of two radii that is not one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum DistanceDoc {
    Rat(String),
    Sqrt(String),
    Gap { hi: RadiusDoc, lo: RadiusDoc },
}

impl DistanceDoc {
    pub fn of(g: &Gap) -> DistanceDoc {
        match g.as_radius() {
            Some(r) => match RadiusDoc::of(&r) {
                RadiusDoc::Rat(x) => DistanceDoc::Rat(x),
                RadiusDoc::Sqrt(x) => DistanceDoc::Sqrt(x),
            },
            None => DistanceDoc::Gap { hi: RadiusDoc::of(&g.hi), lo: RadiusDoc::of(&g.lo) },
        }
    }

    pub fn gap(&self) -> Result<Gap> {
        Ok(match self {
            DistanceDoc::Rat(x) => Gap::of(&RadiusDoc::Rat(x.clone()).radius()?),
            DistanceDoc::Sqrt(x) => Gap::of(&RadiusDoc::Sqrt(x.clone()).radius()?),
            DistanceDoc::Gap { hi, lo } => Gap::between(&hi.radius()?, &lo.radius()?),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BarDoc {
    pub birth: RadiusDoc,
    pub death: RadiusDoc,
    pub multiplicity: usize,
    pub distinguished: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeedsDoc {
    pub master: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ray: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub probe: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BarcodeDocument {
    pub mode: Mode,
    pub field: Field,
    pub criticals: Vec<RadiusDoc>,
    pub bars: Vec<BarDoc>,
    pub robust_radius: RadiusDoc,
    pub seeds: SeedsDoc,
    pub determinacy: bool,
}

/// Bars in interval order; the distinguished copy gets its own entry.
pub fn bars_doc(b: &PointedBarcode) -> Vec<BarDoc> {
    let mut out = Vec::new();
    for (bar, &m) in &b.bars {
        let doc = |multiplicity, distinguished| BarDoc {
            birth: RadiusDoc::of(&bar.birth),
            death: RadiusDoc::of(&bar.death),
            multiplicity,
            distinguished,
        };
        if b.distinguished.as_ref() == Some(bar) {
            out.push(doc(1, true));
            if m > 1 {
                out.push(doc(m - 1, false));
            }
        } else {
            out.push(doc(m, false));
        }
    }
    out
}

pub fn barcode_from_bars(bars: &[BarDoc]) -> Result<PointedBarcode> {
    let mut out = PointedBarcode::default();
    for (k, bar) in bars.iter().enumerate() {
        let interval = Interval::new(bar.birth.radius()?, bar.death.radius()?)
            .map_err(|_| Error::Input(format!("bars[{k}]: birth must be below death")))?;
        if bar.multiplicity == 0 {
            return Err(Error::Input(format!("bars[{k}]: multiplicity 0")));
        }
        if bar.distinguished {
            if out.distinguished.is_some() {
                return Err(Error::Input(format!("bars[{k}]: second distinguished bar")));
            }
            if bar.multiplicity != 1 {
                return Err(Error::Input(format!("bars[{k}]: distinguished bar with multiplicity {}", bar.multiplicity)));
            }
            out.distinguished = Some(interval.clone());
        }
        *out.bars.entry(interval).or_insert(0) += bar.multiplicity;
    }
    Ok(out)
}

impl BarcodeDocument {
    pub fn from_analysis(a: &Analysis) -> BarcodeDocument {
        BarcodeDocument {
            mode: a.mode,
            field: a.field,
            criticals: a.criticals().iter().map(RadiusDoc::of).collect(),
            bars: bars_doc(&a.barcode),
            robust_radius: RadiusDoc::of(a.robust_radius()),
            seeds: SeedsDoc {
                master: a.seed,
                ray: a.classes.ray.as_ref().map(|_| a.classes.ray_seed),
                probe: a.classes.probe.as_ref().map(|_| a.classes.probe_seed),
            },
            determinacy: a.determinacy,
        }
    }

    pub fn barcode(&self) -> Result<PointedBarcode> {
        barcode_from_bars(&self.bars)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CriticalsDocument {
    pub criticals: Vec<RadiusDoc>,
    pub has_zero_min: bool,
    pub samples: Vec<RadiusDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDocument {
    pub mode: Mode,
    /// `"z"` or a field name.
    pub coefficients: String,
    pub samples: Vec<RadiusDoc>,
    /// Cyclic orders of the summands at each sample (`"0"` for a free summand).
    pub invariants: Vec<Vec<String>>,
    /// Row-major transition matrices, sample `i` to `i + 1`.
    pub transitions: Vec<Vec<Vec<String>>>,
    pub distinguished: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub injected: Option<RadiusDoc>,
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn parse_row(row: &[String], what: &str) -> Result<Vec<Rational>> {
    row.iter().map(|x| rational(x, || what.to_string())).collect()
}

impl ModuleDocument {
    pub fn of(m: &PointedModule) -> ModuleDocument {
        ModuleDocument {
            mode: m.mode,
            coefficients: m.coefficients.to_string(),
            samples: m.samples.iter().map(RadiusDoc::of).collect(),
            invariants: m.invariants.iter().map(|inv| inv.iter().map(Int::to_string).collect()).collect(),
            transitions: m.transitions.iter().map(|t| (0..t.rows()).map(|i| strings(t.row(i))).collect()).collect(),
            distinguished: m.distinguished.iter().map(|a| strings(a)).collect(),
            injected: m.injected.as_ref().map(RadiusDoc::of),
        }
    }

    pub fn module(&self) -> Result<PointedModule> {
        let coefficients: Coefficients = self.coefficients.parse().map_err(Error::Input)?;
        let samples = self.samples.iter().map(RadiusDoc::radius).collect::<Result<Vec<_>>>()?;
        let invariants = self
            .invariants
            .iter()
            .map(|inv| {
                inv.iter()
                    .map(|d| d.parse::<num_bigint::BigInt>().map(Int::from_big).map_err(|_| Error::Input(format!("invariant `{d}`"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let mut transitions = Vec::new();
        for (i, t) in self.transitions.iter().enumerate() {
            let rows = t.iter().map(|r| parse_row(r, "transitions")).collect::<Result<Vec<_>>>()?;
            let cols = invariants.get(i).map_or(0, Vec::len);
            if rows.iter().any(|r| r.len() != cols) {
                return Err(Error::Input(format!("transitions[{i}]: rows must have {cols} entries")));
            }
            let mut m = RatMatrix::zeros(rows.len(), cols);
            for (r, row) in rows.into_iter().enumerate() {
                m.row_mut(r).clone_from_slice(&row);
            }
            transitions.push(m);
        }
        let distinguished =
            self.distinguished.iter().map(|a| parse_row(a, "distinguished")).collect::<Result<Vec<_>>>()?;
        let module = PointedModule {
            mode: self.mode,
            coefficients,
            samples,
            invariants,
            transitions,
            distinguished,
            injected: self.injected.as_ref().map(RadiusDoc::radius).transpose()?,
        };
        module.validate().map_err(|e| Error::Input(format!("module document: {e}")))?;
        Ok(module)
    }
}

/// Deterministic pretty JSON.
pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("documents serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::pipeline::{analyze, Options};

    const EDGE: &str = r#"{"n":1,"norm":"linf","vertices":["v0","v1"],"simplices":[["v0","v1"]],
        "values":{"v0":["-1"],"v1":["1"]}}"#;

    #[test]
    fn edge_document() {
        let f = parse_input(EDGE).unwrap();
        assert_eq!(f, fixtures::edge());
        let doc = InputDocument::from_map(&f);
        assert_eq!(doc.to_map().unwrap(), f);
    }

    #[test]
    fn undeclared_vertex_is_named() {
        let bad = EDGE.replace(r#"["v0","v1"]]"#, r#"["v0","v9"]]"#);
        match parse_input(&bad) {
            Err(Error::Input(msg)) => assert!(msg.contains("`v9`"), "{msg}"),
            other => panic!("{other:?}"),
        }
        let bad = EDGE.replace(r#"["1"]"#, r#"["one"]"#);
        assert!(matches!(parse_input(&bad), Err(Error::Input(m)) if m.contains("values.v1[0]")));
        let bad = EDGE.replace(r#"["1"]"#, r#"["1","2"]"#);
        assert!(matches!(parse_input(&bad), Err(Error::Input(_))));
        assert!(matches!(parse_input("{"), Err(Error::Input(m)) if m.contains("line")));
    }

    #[test]
    fn grid_document() {
        let f = InputDocument::from_map(&fixtures::grid_identity()).to_map().unwrap();
        assert_eq!(f.complex().vertex_count(), 9);
        assert_eq!(f.complex().simplices(2).len(), 8);
    }

    #[test]
    fn radius_encodings() {
        assert_eq!(serde_json::to_string(&RadiusDoc::of(&ExactRadius::int(1))).unwrap(), r#"{"rat":"1"}"#);
        let root = ExactRadius::sqrt(Rational::new(1.into(), 2.into()));
        assert_eq!(serde_json::to_string(&RadiusDoc::of(&root)).unwrap(), r#"{"sqrt":"1/2"}"#);
        assert_eq!(RadiusDoc::of(&root).radius().unwrap(), root);
        let gap = Gap::between(&ExactRadius::sqrt(Rational::from_integer(2.into())), &ExactRadius::int(1));
        let doc = DistanceDoc::of(&gap);
        assert!(serde_json::to_string(&doc).unwrap().starts_with(r#"{"gap":"#));
        assert_eq!(doc.gap().unwrap(), gap);
    }

    #[test]
    fn barcode_and_module_round_trip() {
        for f in [fixtures::edge(), fixtures::grid_identity(), fixtures::octagon()] {
            let a = analyze(&f, &Options::default()).unwrap();
            let doc = BarcodeDocument::from_analysis(&a);
            let text = to_json(&doc);
            let back: BarcodeDocument = serde_json::from_str(&text).unwrap();
            assert_eq!(back, doc);
            assert_eq!(back.barcode().unwrap(), a.barcode);
            for m in [&a.module, &a.classes.module] {
                let doc = ModuleDocument::of(m);
                let back: ModuleDocument = serde_json::from_str(&to_json(&doc)).unwrap();
                assert_eq!(&back.module().unwrap(), m);
            }
        }
    }
}
