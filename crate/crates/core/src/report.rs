//! Structured pass/fail records for identity checks.

use serde::Serialize;

use crate::multipoly::MultiPoly;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Equal,
    EqualUpToSign,
    Mismatch,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Equal => "EQUAL",
            Verdict::EqualUpToSign => "EQUAL_UP_TO_SIGN",
            Verdict::Mismatch => "MISMATCH",
        }
    }
}

/// One side of a comparison.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum ReportValue {
    Rational(Rational),
    Poly(MultiPoly),
    Bool(bool),
    Table(Vec<Vec<Rational>>),
}

impl ReportValue {
    fn negated(&self) -> Option<ReportValue> {
        match self {
            ReportValue::Rational(q) if !q.is_zero() => Some(ReportValue::Rational(-q)),
            ReportValue::Poly(p) if !p.is_zero() => Some(ReportValue::Poly(-p)),
            _ => None,
        }
    }
}

impl From<Rational> for ReportValue {
    fn from(value: Rational) -> Self {
        ReportValue::Rational(value)
    }
}

impl From<MultiPoly> for ReportValue {
    fn from(value: MultiPoly) -> Self {
        ReportValue::Poly(value)
    }
}

impl From<bool> for ReportValue {
    fn from(value: bool) -> Self {
        ReportValue::Bool(value)
    }
}

impl From<Vec<Vec<Rational>>> for ReportValue {
    fn from(value: Vec<Vec<Rational>>) -> Self {
        ReportValue::Table(value)
    }
}

/// Outcome of comparing a computed left side against an expected right side.
///
/// `report_only` marks comparisons against printed closed forms that are
/// recorded but never treated as failures; direct computation is the ground
/// truth for those.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub verdict: Verdict,
    pub ratio: Option<Rational>,
    pub lhs: ReportValue,
    pub rhs: ReportValue,
    pub report_only: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerificationReport {
    pub fn compare(identity: impl Into<String>, lhs: impl Into<ReportValue>, rhs: impl Into<ReportValue>) -> Self {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        let verdict = if lhs == rhs {
            Verdict::Equal
        } else if rhs.negated().is_some_and(|neg| neg == lhs) {
            Verdict::EqualUpToSign
        } else {
            Verdict::Mismatch
        };
        let ratio = match (&lhs, &rhs) {
            (ReportValue::Rational(a), ReportValue::Rational(b)) if !a.is_zero() && !b.is_zero() => {
                Some(a / b)
            }
            _ => None,
        };
        VerificationReport {
            identity: identity.into(),
            verdict,
            ratio,
            lhs,
            rhs,
            report_only: false,
            note: None,
        }
    }

    pub fn report_only(mut self) -> Self {
        self.report_only = true;
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// A mismatch on an asserted identity.
    pub fn is_failure(&self) -> bool {
        self.verdict == Verdict::Mismatch && !self.report_only
    }

    /// Anything other than a clean `EQUAL`.
    pub fn is_flagged(&self) -> bool {
        self.verdict != Verdict::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts() {
        let q = Rational::frac;
        let r = VerificationReport::compare("x", q(1, 2), q(1, 2));
        assert_eq!((r.verdict, r.ratio), (Verdict::Equal, Some(Rational::one())));

        let r = VerificationReport::compare("x", q(1, 24), q(-1, 24));
        assert_eq!(r.verdict, Verdict::EqualUpToSign);
        assert_eq!(r.ratio, Some(-Rational::one()));

        let r = VerificationReport::compare("x", q(1, 2), q(1, 4));
        assert_eq!((r.verdict, r.ratio.clone()), (Verdict::Mismatch, Some(Rational::from(2))));
        assert!(r.is_failure());
        assert!(!r.clone().report_only().is_failure());

        let r = VerificationReport::compare("x", Rational::zero(), Rational::zero());
        assert_eq!((r.verdict, r.ratio), (Verdict::Equal, None));

        let r = VerificationReport::compare("x", true, false);
        assert_eq!(r.verdict, Verdict::Mismatch);
    }

    #[test]
    fn json_shape() {
        let r = VerificationReport::compare("cor35[D=2]", Rational::frac(1, 24), Rational::frac(-1, 24)).report_only();
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"identity":"cor35[D=2]","verdict":"EQUAL_UP_TO_SIGN","ratio":"-1","lhs":"1/24","rhs":"-1/24","report_only":true}"#
        );
    }
}
