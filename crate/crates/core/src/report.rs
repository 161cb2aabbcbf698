use std::collections::BTreeMap;

use serde::Serialize;

use crate::ncrewrite::render::{self, RenderScalar, Style};
use crate::ncrewrite::{NCPoly, Presentation, Sector};
use crate::qscalar::Ring;

/// One identity inside a check.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Residual {
    pub label: String,
    pub zero: bool,
    /// The residual in text form (`0` when it vanishes).
    pub residual: String,
}

/// Outcome of a verification check.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Report {
    pub check: String,
    pub params: BTreeMap<String, String>,
    pub pass: bool,
    pub residuals: Vec<Residual>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(check: impl Into<String>) -> Self {
        Self { check: check.into(), params: BTreeMap::new(), pass: true, residuals: Vec::new(), notes: Vec::new() }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn record(&mut self, label: impl Into<String>, zero: bool, residual: impl FnOnce() -> String) {
        self.pass &= zero;
        self.residuals.push(Residual {
            label: label.into(),
            zero,
            residual: if zero { "0".into() } else { residual() },
        });
    }

    /// Records `lhs - rhs`, vanishing up to the ring's tolerance.
    pub fn identity<S: RenderScalar, T: Ring>(
        &mut self,
        label: impl Into<String>,
        lhs: &NCPoly<S>,
        rhs: &NCPoly<S>,
        pres: &Presentation<T>,
    ) -> bool {
        let diff = lhs - rhs;
        let scale = lhs.magnitude().max(rhs.magnitude()).max(1.0);
        let zero = diff.negligible(scale);
        self.record(label, zero, || render::poly(&diff, pres, Style::Text));
        zero
    }

    /// Records a scalar identity `lhs = rhs`.
    pub fn scalar_identity<S: RenderScalar>(
        &mut self,
        label: impl Into<String>,
        lhs: &S,
        rhs: &S,
        sector: Sector,
    ) -> bool {
        let diff = lhs.sub(rhs);
        let scale = lhs.magnitude().max(rhs.magnitude()).max(1.0);
        let zero = diff.negligible(scale);
        self.record(label, zero, || render::scalar(&diff, sector, Style::Text));
        zero
    }

    /// Number of identities that failed.
    pub fn failures(&self) -> usize {
        self.residuals.iter().filter(|r| !r.zero).count()
    }

    /// Sort key used when merging reports.
    pub fn sort_key(&self) -> (String, Vec<(String, String)>) {
        (self.check.clone(), self.params.iter().map(|(k, v)| (k.clone(), v.clone())).collect())
    }
}
