//! Structured verdicts for inequality checks.

use std::fmt;

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::arith::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// One checked inequality, always oriented as `lhs ≥ rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// Base point, coset index or prime the inequality is about.
    pub subject: String,
    pub inequality: String,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl Witness {
    pub fn new(
        subject: impl Into<String>,
        inequality: impl Into<String>,
        lhs: impl Into<Rational>,
        rhs: impl Into<Rational>,
    ) -> Self {
        Witness {
            subject: subject.into(),
            inequality: inequality.into(),
            lhs: lhs.into(),
            rhs: rhs.into(),
        }
    }

    pub fn holds(&self) -> bool {
        self.lhs >= self.rhs
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Witness", 5)?;
        s.serialize_field("subject", &self.subject)?;
        s.serialize_field("inequality", &self.inequality)?;
        s.serialize_field("lhs", &self.lhs.to_string())?;
        s.serialize_field("rhs", &self.rhs.to_string())?;
        s.serialize_field("holds", &self.holds())?;
        s.end()
    }
}

/// A bundle of inequality checks. The verdict is `Fail` iff some witness fails
/// or a failure was recorded explicitly.
#[derive(Debug, Clone, Default, Serialize)]
pub struct BoundReport {
    pub name: String,
    pub witnesses: Vec<Witness>,
    /// Free-form remarks, e.g. checks that were not applicable.
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

impl BoundReport {
    pub fn new(name: impl Into<String>) -> Self {
        BoundReport {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn push(&mut self, witness: Witness) {
        self.witnesses.push(witness);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn fail(&mut self, reason: impl Into<String>) {
        self.failures.push(reason.into());
    }

    pub fn verdict(&self) -> Verdict {
        if self.failures.is_empty() && self.witnesses.iter().all(Witness::holds) {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict().is_pass()
    }

    pub fn failing(&self) -> impl Iterator<Item = &Witness> {
        self.witnesses.iter().filter(|w| !w.holds())
    }

    pub fn merge(&mut self, other: BoundReport) {
        self.witnesses.extend(other.witnesses);
        self.notes.extend(other.notes);
        self.failures.extend(other.failures);
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut value = serde_json::to_value(self).expect("report serializes");
        value["verdict"] = serde_json::Value::String(self.verdict().to_string());
        value
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.name, self.verdict())?;
        for w in &self.witnesses {
            writeln!(
                f,
                "  [{}] {}: {} >= {} ... {}",
                w.subject,
                w.inequality,
                w.lhs,
                w.rhs,
                if w.holds() { "ok" } else { "VIOLATED" }
            )?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        for e in &self.failures {
            writeln!(f, "  FAILED: {e}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    #[test]
    fn verdict_tracks_witnesses() {
        let mut r = BoundReport::new("t");
        r.push(Witness::new("a", "x", ratio(3, 2), ratio(1, 1)));
        assert!(r.passed());
        r.push(Witness::new("a", "y", ratio(3, 2), ratio(2, 1)));
        assert_eq!(r.verdict(), Verdict::Fail);
        assert_eq!(r.failing().count(), 1);
    }

    #[test]
    fn json_renders_exact_rationals() {
        let mut r = BoundReport::new("t");
        r.push(Witness::new("p=2", "sum", ratio(3, 2), ratio(2, 1)));
        let v = r.to_json();
        assert_eq!(v["witnesses"][0]["lhs"], "3/2");
        assert_eq!(v["witnesses"][0]["rhs"], "2");
        assert_eq!(v["verdict"], "fail");
    }
}
