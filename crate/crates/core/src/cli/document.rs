//! The JSON algebra document.
//!
//! ```json
//! {
//!   "name": "E2",
//!   "dims": {"even": 2, "odd": 0},
//!   "products": [{"i": 0, "j": 0, "terms": [{"k": 1, "c": "1"}]}],
//!   "form": {"entries": [{"i": 0, "j": 1, "c": "1"}]},
//!   "maps": [{"name": "D", "degree": 1, "entries": [{"i": 1, "j": 0, "c": "1/2"}]}],
//!   "representations": [{"name": "R", "module": {"even": 1, "odd": 0},
//!                        "action": [{"element": 0, "entries": [...]}]}],
//!   "cocycles": [{"name": "W", "module": {"even": 1, "odd": 0},
//!                 "terms": [{"i": 0, "j": 0, "k": 0, "c": "1"}]}]
//! }
//! ```
//!
//! Map and action entries `(i, j, c)` set row `i`, column `j`: column `j` is
//! the image of `e_j`. Cocycle terms `(i, j, k, c)` add `c` to the `k`-th
//! module coordinate of `Ω(e_i, e_j)`. Repeated entries are summed and
//! omitted entries are zero.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::forms::BilinearForm;
use crate::kernel::rational::{parse as parse_rational, render};
use crate::kernel::{GradedDim, GradedMap, Matrix, Parity, Rational};
use crate::representation::{Cocycle, Representation};
use crate::superalgebra::SuperAlgebra;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedMap {
    pub name: String,
    pub map: GradedMap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedRepresentation {
    pub name: String,
    pub module: GradedDim,
    pub action: Vec<GradedMap>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedCocycle {
    pub name: String,
    pub cocycle: Cocycle,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub algebra: SuperAlgebra,
    pub form: Option<BilinearForm>,
    pub maps: Vec<NamedMap>,
    pub representations: Vec<NamedRepresentation>,
    pub cocycles: Vec<NamedCocycle>,
}

/// One located problem in a document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DocumentError {
    pub location: String,
    pub message: String,
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

impl AlgebraDocument {
    pub fn new(algebra: SuperAlgebra) -> Self {
        AlgebraDocument {
            algebra,
            form: None,
            maps: Vec::new(),
            representations: Vec::new(),
            cocycles: Vec::new(),
        }
    }

    pub fn with_form(algebra: SuperAlgebra, form: BilinearForm) -> Self {
        AlgebraDocument {
            form: Some(form),
            ..AlgebraDocument::new(algebra)
        }
    }

    pub fn map(&self, name: &str) -> Option<&GradedMap> {
        self.maps.iter().find(|m| m.name == name).map(|m| &m.map)
    }

    pub fn representation(&self, name: &str) -> Option<Representation> {
        let r = self.representations.iter().find(|r| r.name == name)?;
        Representation::new(self.algebra.clone(), r.module, r.action.clone()).ok()
    }

    pub fn cocycle(&self, name: &str) -> Option<&Cocycle> {
        self.cocycles.iter().find(|c| c.name == name).map(|c| &c.cocycle)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDoc {
    name: String,
    dims: RawDims,
    #[serde(default)]
    products: Vec<RawProduct>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    form: Option<RawForm>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    maps: Vec<RawMap>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    representations: Vec<RawRep>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    cocycles: Vec<RawCocycle>,
}

#[derive(Serialize, Deserialize, Clone, Copy)]
#[serde(deny_unknown_fields)]
struct RawDims {
    even: usize,
    odd: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProduct {
    i: usize,
    j: usize,
    terms: Vec<RawTerm>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTerm {
    k: usize,
    c: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawForm {
    entries: Vec<RawEntry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    i: usize,
    j: usize,
    c: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMap {
    name: String,
    degree: Parity,
    entries: Vec<RawEntry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRep {
    name: String,
    module: RawDims,
    action: Vec<RawAction>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAction {
    element: usize,
    entries: Vec<RawEntry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCocycle {
    name: String,
    module: RawDims,
    terms: Vec<RawCocycleTerm>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCocycleTerm {
    i: usize,
    j: usize,
    k: usize,
    c: String,
}

impl From<RawDims> for GradedDim {
    fn from(d: RawDims) -> Self {
        GradedDim::new(d.even, d.odd)
    }
}

impl From<GradedDim> for RawDims {
    fn from(d: GradedDim) -> Self {
        RawDims { even: d.even, odd: d.odd }
    }
}

struct Validator {
    errors: Vec<DocumentError>,
}

impl Validator {
    fn error(&mut self, location: String, message: impl Into<String>) {
        self.errors.push(DocumentError {
            location,
            message: message.into(),
        });
    }

    fn rational(&mut self, location: String, text: &str) -> Option<Rational> {
        match parse_rational(text) {
            Ok(q) => Some(q),
            Err(_) => {
                self.error(location, format!("malformed rational {text:?}"));
                None
            }
        }
    }

    fn index(&mut self, location: String, i: usize, n: usize) -> bool {
        if i >= n {
            self.error(location, format!("index {i} out of range for dimension {n}"));
            return false;
        }
        true
    }

    /// Fills a square matrix of size `dims` from entries, rejecting entries
    /// outside the blocks allowed by `degree`.
    fn matrix(&mut self, at: &str, dims: GradedDim, degree: Parity, entries: &[RawEntry]) -> Matrix {
        let n = dims.total();
        let mut m = Matrix::zeros(n, n);
        for (e, entry) in entries.iter().enumerate() {
            let loc = format!("{at}.entries[{e}]");
            let ok_i = self.index(format!("{loc}.i"), entry.i, n);
            let ok_j = self.index(format!("{loc}.j"), entry.j, n);
            let c = self.rational(format!("{loc}.c"), &entry.c);
            let (true, true, Some(c)) = (ok_i, ok_j, c) else {
                continue;
            };
            if c.is_zero() {
                continue;
            }
            if !GradedMap::allowed(dims, dims, degree, entry.i, entry.j) {
                self.error(
                    loc,
                    format!(
                        "parity inconsistency: entry ({}, {}) is not allowed in a map of degree {degree}",
                        entry.i, entry.j
                    ),
                );
                continue;
            }
            m[(entry.i, entry.j)] += c;
        }
        m
    }
}

/// Parses and validates a document, collecting every problem found.
pub fn parse(text: &str) -> Result<AlgebraDocument, Vec<DocumentError>> {
    let raw: RawDoc = serde_json::from_str(text).map_err(|e| {
        vec![DocumentError {
            location: format!("line {}, column {}", e.line(), e.column()),
            message: e.to_string(),
        }]
    })?;
    let mut v = Validator { errors: Vec::new() };
    let dims = GradedDim::from(raw.dims);
    let n = dims.total();

    let mut algebra = SuperAlgebra::abelian(raw.name, dims);
    for (p, prod) in raw.products.iter().enumerate() {
        let loc = format!("products[{p}]");
        let ok_i = v.index(format!("{loc}.i"), prod.i, n);
        let ok_j = v.index(format!("{loc}.j"), prod.j, n);
        for (t, term) in prod.terms.iter().enumerate() {
            let tloc = format!("{loc}.terms[{t}]");
            let ok_k = v.index(format!("{tloc}.k"), term.k, n);
            let c = v.rational(format!("{tloc}.c"), &term.c);
            if let (true, true, true, Some(c)) = (ok_i, ok_j, ok_k, c) {
                algebra.add_term(prod.i, prod.j, term.k, c).expect("indices checked");
            }
        }
    }

    let form = raw.form.as_ref().map(|f| {
        let gram = v.matrix("form", dims, 0, &f.entries);
        BilinearForm::new(dims, gram).expect("square gram")
    });

    let mut maps = Vec::new();
    for (m, raw_map) in raw.maps.iter().enumerate() {
        let loc = format!("maps[{m}]");
        if raw_map.degree > 1 {
            v.error(format!("{loc}.degree"), format!("degree must be 0 or 1, found {}", raw_map.degree));
            continue;
        }
        if maps.iter().any(|x: &NamedMap| x.name == raw_map.name) {
            v.error(format!("{loc}.name"), format!("duplicate map name {:?}", raw_map.name));
        }
        let matrix = v.matrix(&loc, dims, raw_map.degree, &raw_map.entries);
        maps.push(NamedMap {
            name: raw_map.name.clone(),
            map: GradedMap::new(dims, dims, raw_map.degree, matrix).expect("blocks checked"),
        });
    }

    let mut representations = Vec::new();
    for (r, raw_rep) in raw.representations.iter().enumerate() {
        let loc = format!("representations[{r}]");
        let module = GradedDim::from(raw_rep.module);
        let mut action: Vec<GradedMap> = (0..n).map(|i| GradedMap::zero(module, module, dims.parity(i))).collect();
        for (a, act) in raw_rep.action.iter().enumerate() {
            let aloc = format!("{loc}.action[{a}]");
            if !v.index(format!("{aloc}.element"), act.element, n) {
                continue;
            }
            let degree = dims.parity(act.element);
            let m = v.matrix(&aloc, module, degree, &act.entries);
            let sum = action[act.element].matrix.add(&m).expect("same shape");
            action[act.element] = GradedMap::new(module, module, degree, sum).expect("blocks checked");
        }
        representations.push(NamedRepresentation {
            name: raw_rep.name.clone(),
            module,
            action,
        });
    }

    let mut cocycles = Vec::new();
    for (w, raw_co) in raw.cocycles.iter().enumerate() {
        let loc = format!("cocycles[{w}]");
        let module = GradedDim::from(raw_co.module);
        let mut cocycle = Cocycle::zero(n, module);
        for (t, term) in raw_co.terms.iter().enumerate() {
            let tloc = format!("{loc}.terms[{t}]");
            let ok_i = v.index(format!("{tloc}.i"), term.i, n);
            let ok_j = v.index(format!("{tloc}.j"), term.j, n);
            let ok_k = v.index(format!("{tloc}.k"), term.k, module.total());
            let c = v.rational(format!("{tloc}.c"), &term.c);
            if let (true, true, true, Some(c)) = (ok_i, ok_j, ok_k, c) {
                cocycle.add_term(term.i, term.j, term.k, c).expect("indices checked");
            }
        }
        cocycles.push(NamedCocycle {
            name: raw_co.name.clone(),
            cocycle,
        });
    }

    if !v.errors.is_empty() {
        return Err(v.errors);
    }
    Ok(AlgebraDocument {
        algebra,
        form,
        maps,
        representations,
        cocycles,
    })
}

fn entries_of(m: &Matrix) -> Vec<RawEntry> {
    let mut out = Vec::new();
    for i in 0..m.rows() {
        for (j, c) in m.row(i).iter().enumerate() {
            if !c.is_zero() {
                out.push(RawEntry { i, j, c: render(c) });
            }
        }
    }
    out
}

/// Canonical text: fixed key order, entries sorted by index, zeros omitted,
/// two-space indentation and a trailing newline.
pub fn render_document(d: &AlgebraDocument) -> String {
    let a = &d.algebra;
    let mut products: Vec<RawProduct> = Vec::new();
    for (i, j, k, c) in a.entries() {
        let term = RawTerm { k, c: render(c) };
        match products.last_mut() {
            Some(p) if p.i == i && p.j == j => p.terms.push(term),
            _ => products.push(RawProduct { i, j, terms: vec![term] }),
        }
    }
    let raw = RawDoc {
        name: a.name.clone(),
        dims: a.dims().into(),
        products,
        form: d.form.as_ref().map(|f| RawForm {
            entries: entries_of(&f.gram),
        }),
        maps: d
            .maps
            .iter()
            .map(|m| RawMap {
                name: m.name.clone(),
                degree: m.map.degree,
                entries: entries_of(&m.map.matrix),
            })
            .collect(),
        representations: d
            .representations
            .iter()
            .map(|r| RawRep {
                name: r.name.clone(),
                module: r.module.into(),
                action: r
                    .action
                    .iter()
                    .enumerate()
                    .filter(|(_, m)| !m.is_zero())
                    .map(|(element, m)| RawAction {
                        element,
                        entries: entries_of(&m.matrix),
                    })
                    .collect(),
            })
            .collect(),
        cocycles: d
            .cocycles
            .iter()
            .map(|w| RawCocycle {
                name: w.name.clone(),
                module: w.cocycle.module.into(),
                terms: w
                    .cocycle
                    .entries()
                    .map(|(i, j, k, c)| RawCocycleTerm { i, j, k, c: render(c) })
                    .collect(),
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&raw).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn minimal_document() {
        let d = parse(r#"{"name": "zero", "dims": {"even": 0, "odd": 0}}"#).unwrap();
        assert_eq!(d.algebra.dim(), 0);
        assert!(d.form.is_none());
    }

    #[test]
    fn e2_document() {
        let text = r#"{"name": "E2", "dims": {"even": 2, "odd": 0},
            "products": [{"i": 0, "j": 0, "terms": [{"k": 1, "c": "1"}]}]}"#;
        let d = parse(text).unwrap();
        assert_eq!(d.algebra, catalog::e2());
        assert_eq!(parse(&render_document(&d)).unwrap(), d);
    }

    #[test]
    fn malformed_rational_is_located() {
        let text = r#"{"name": "E2", "dims": {"even": 2, "odd": 0},
            "products": [{"i": 0, "j": 0, "terms": [{"k": 1, "c": "1/0"}]}]}"#;
        let errs = parse(text).unwrap_err();
        assert_eq!(errs.len(), 1);
        assert_eq!(errs[0].location, "products[0].terms[0].c");
        assert!(errs[0].message.contains("malformed rational"));
    }

    #[test]
    fn index_and_parity_errors() {
        let text = r#"{"name": "x", "dims": {"even": 1, "odd": 1},
            "products": [{"i": 2, "j": 0, "terms": []}],
            "maps": [{"name": "D", "degree": 1, "entries": [{"i": 0, "j": 0, "c": "1"}]}]}"#;
        let errs = parse(text).unwrap_err();
        assert_eq!(errs[0].location, "products[0].i");
        assert!(errs[1].message.contains("parity inconsistency"));
    }

    #[test]
    fn syntax_error_has_line() {
        let errs = parse("{\n\"name\": }").unwrap_err();
        assert!(errs[0].location.starts_with("line 2"));
    }

    #[test]
    fn full_round_trip() {
        let p = catalog::d4();
        let mut d = AlgebraDocument::with_form(p.algebra.clone(), p.form.clone());
        let g = catalog::mixed_gdext_data();
        d.algebra = g.base.algebra.clone();
        d.form = Some(g.base.form.clone());
        d.maps.push(NamedMap {
            name: "D".into(),
            map: g.d.clone(),
        });
        let r = crate::representation::adjoint(&d.algebra).unwrap();
        d.representations.push(NamedRepresentation {
            name: "ad".into(),
            module: r.module,
            action: r.action.clone(),
        });
        let mut w = Cocycle::zero(4, GradedDim::new(1, 0));
        w.add_term(0, 0, 0, crate::kernel::rational::frac(-3, 4)).unwrap();
        d.cocycles.push(NamedCocycle { name: "W".into(), cocycle: w });
        let text = render_document(&d);
        let back = parse(&text).unwrap();
        assert_eq!(back, d);
        assert_eq!(render_document(&back), text);
        assert!(back.representation("ad").is_some());
    }
}
