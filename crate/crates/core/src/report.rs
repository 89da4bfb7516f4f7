//! Per-axiom verdicts with reproducible witnesses.

use std::fmt;

use serde::Serialize;

use crate::kernel::rational::render;
use crate::kernel::Rational;

/// A basis tuple together with the exact value observed on it.
///
/// On a failing entry the vector is the nonzero defect. On a passing entry a
/// witness, when present, is supporting evidence (for example an element of
/// a subspace that was required to be nonzero).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub vector: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomResult {
    pub label: String,
    pub passed: bool,
    pub witness: Option<Witness>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub entries: Vec<AxiomResult>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport::default()
    }

    pub fn pass(&mut self, label: impl Into<String>) -> &mut Self {
        self.push(label, true, None, None)
    }

    pub fn fail(&mut self, label: impl Into<String>, indices: Vec<usize>, vector: Vec<Rational>) -> &mut Self {
        self.push(label, false, Some(Witness { indices, vector }), None)
    }

    pub fn verdict(&mut self, label: impl Into<String>, witness: Option<Witness>) -> &mut Self {
        let passed = witness.is_none();
        self.push(label, passed, witness, None)
    }

    pub fn push(
        &mut self,
        label: impl Into<String>,
        passed: bool,
        witness: Option<Witness>,
        note: Option<String>,
    ) -> &mut Self {
        self.entries.push(AxiomResult {
            label: label.into(),
            passed,
            witness,
            note,
        });
        self
    }

    /// Attaches a note to the most recent entry.
    pub fn note(&mut self, note: impl Into<String>) -> &mut Self {
        if let Some(e) = self.entries.last_mut() {
            e.note = Some(note.into());
        }
        self
    }

    pub fn merge(&mut self, other: CheckReport) -> &mut Self {
        self.entries.extend(other.entries);
        self
    }

    /// Merges with every label prefixed by `prefix/`.
    pub fn merge_prefixed(&mut self, prefix: &str, other: CheckReport) -> &mut Self {
        for mut e in other.entries {
            e.label = format!("{prefix}/{}", e.label);
            self.entries.push(e);
        }
        self
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn get(&self, label: &str) -> Option<&AxiomResult> {
        self.entries.iter().find(|e| e.label == label)
    }

    pub fn passed(&self, label: &str) -> Option<bool> {
        self.get(label).map(|e| e.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomResult> {
        self.entries.iter().filter(|e| !e.passed)
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct W<'a> {
            indices: &'a [usize],
            vector: Vec<String>,
        }
        #[derive(Serialize)]
        struct E<'a> {
            label: &'a str,
            passed: bool,
            #[serde(skip_serializing_if = "Option::is_none")]
            witness: Option<W<'a>>,
            #[serde(skip_serializing_if = "Option::is_none")]
            note: Option<&'a str>,
        }
        let entries: Vec<E> = self
            .entries
            .iter()
            .map(|e| E {
                label: &e.label,
                passed: e.passed,
                witness: e.witness.as_ref().map(|w| W {
                    indices: &w.indices,
                    vector: w.vector.iter().map(render).collect(),
                }),
                note: e.note.as_deref(),
            })
            .collect();
        serde_json::json!({ "passed": self.all_passed(), "entries": entries })
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            write!(f, "{} {}", if e.passed { "PASS" } else { "FAIL" }, e.label)?;
            if let Some(w) = &e.witness {
                let idx: Vec<String> = w.indices.iter().map(|i| format!("e{i}")).collect();
                let v: Vec<String> = w.vector.iter().map(render).collect();
                write!(f, " at ({}) value [{}]", idx.join(","), v.join(", "))?;
            }
            if let Some(n) = &e.note {
                write!(f, " -- {n}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
