use std::io;

use denumerant::partition::QuasiPolynomial;
use denumerant::report::VerificationReport;
use denumerant::{MultiPoly, Rational, UniPoly};

/// A computed artifact, rendered as JSON or CSV.
pub enum Artifact {
    Scalar(String),
    Matrix(Vec<Vec<Rational>>),
    Uni(UniPoly),
    Poly(MultiPoly),
    Quasi(QuasiPolynomial),
    Reports(Vec<VerificationReport>),
}

impl From<Rational> for Artifact {
    fn from(value: Rational) -> Self {
        Artifact::Scalar(value.to_string())
    }
}

impl Artifact {
    pub fn to_json(&self) -> serde_json::Result<String> {
        match self {
            Artifact::Scalar(s) => serde_json::to_string(s),
            Artifact::Matrix(m) => serde_json::to_string_pretty(m),
            Artifact::Uni(p) => serde_json::to_string_pretty(p),
            Artifact::Poly(p) => serde_json::to_string_pretty(p),
            Artifact::Quasi(q) => serde_json::to_string_pretty(q),
            Artifact::Reports(r) => serde_json::to_string_pretty(r),
        }
    }

    pub fn to_csv(&self) -> csv::Result<String> {
        let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
        match self {
            Artifact::Scalar(s) => {
                w.write_record(["value"])?;
                w.write_record([s])?;
            }
            Artifact::Matrix(m) => {
                for row in m {
                    w.write_record(row.iter().map(Rational::to_string))?;
                }
            }
            Artifact::Uni(p) => {
                w.write_record(["k", "coeff"])?;
                for (k, c) in p.coeffs().iter().enumerate() {
                    w.write_record([k.to_string(), c.to_string()])?;
                }
            }
            Artifact::Poly(p) => {
                let mut header: Vec<String> = (1..=p.nvars()).map(|i| format!("x{i}")).collect();
                header.push("coeff".into());
                w.write_record(&header)?;
                for (mono, c) in p.terms() {
                    let mut row: Vec<String> = mono.exps().iter().map(u32::to_string).collect();
                    row.push(c.to_string());
                    w.write_record(&row)?;
                }
            }
            Artifact::Quasi(q) => {
                w.write_record(["m", "v", "coeff"])?;
                for (m, row) in q.table().iter().enumerate() {
                    for (v, c) in row.iter().enumerate() {
                        w.write_record([m.to_string(), v.to_string(), c.to_string()])?;
                    }
                }
            }
            Artifact::Reports(reports) => {
                w.write_record(["identity", "verdict", "ratio", "report_only", "note", "lhs", "rhs"])?;
                for r in reports {
                    let json = |v| serde_json::to_string(v).map_err(io::Error::other);
                    w.write_record([
                        r.identity.clone(),
                        r.verdict.as_str().to_string(),
                        r.ratio.as_ref().map(Rational::to_string).unwrap_or_default(),
                        r.report_only.to_string(),
                        r.note.clone().unwrap_or_default(),
                        json(&r.lhs)?,
                        json(&r.rhs)?,
                    ])?;
                }
            }
        }
        let bytes = w.into_inner().map_err(|e| io::Error::other(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}
