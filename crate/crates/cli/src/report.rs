//! One row of output and its JSON / CSV / table renderings.
//!
//! Reals are written with 17 significant digits so that parsing the output
//! recovers every value bit for bit.

use ortho_l1::{FamilySpec, SignedTermLedger};
use serde::Serialize;
use serde_json::Number;
use std::io::{self, Write};
use std::str::FromStr;

pub const COLUMNS: [&str; 10] = [
    "family", "alpha", "beta", "n", "i", "formula", "oracle", "bound", "rel_disc", "ns",
];

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub family: FamilySpec,
    pub n: usize,
    pub i: usize,
    pub formula: Option<f64>,
    pub oracle: Option<f64>,
    pub bound: Option<f64>,
    pub rel_disc: Option<f64>,
    pub ns: u64,
    pub ledger: Option<SignedTermLedger>,
}

/// `{:.16e}`: 17 significant digits, enough to round-trip any double.
pub fn fmt_real(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

fn number(x: f64) -> Option<Number> {
    if x.is_finite() {
        Number::from_str(&fmt_real(x)).ok()
    } else {
        None
    }
}

#[derive(Serialize)]
struct JsonTerm {
    zero_index: usize,
    order: usize,
    value: Option<Number>,
}

#[derive(Serialize)]
struct JsonRow<'a> {
    family: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<Number>,
    #[serde(skip_serializing_if = "Option::is_none")]
    beta: Option<Number>,
    n: usize,
    i: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    formula: Option<Number>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<Number>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bound: Option<Number>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rel_disc: Option<Number>,
    ns: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    ledger: Option<Vec<JsonTerm>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    middle_term: Option<Number>,
}

impl Report {
    fn json_row(&self) -> JsonRow<'_> {
        let (ledger, middle_term) = match &self.ledger {
            Some(l) => (
                Some(
                    l.terms
                        .iter()
                        .map(|t| JsonTerm {
                            zero_index: t.zero_index,
                            order: t.order,
                            value: number(t.value),
                        })
                        .collect(),
                ),
                l.middle_term.and_then(number),
            ),
            None => (None, None),
        };
        JsonRow {
            family: self.family.name(),
            alpha: self.family.alpha().and_then(number),
            beta: self.family.beta().and_then(number),
            n: self.n,
            i: self.i,
            formula: self.formula.and_then(number),
            oracle: self.oracle.and_then(number),
            bound: self.bound.and_then(number),
            rel_disc: self.rel_disc.and_then(number),
            ns: self.ns,
            ledger,
            middle_term,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.json_row()).expect("report rows always serialize")
    }

    pub fn csv_record(&self) -> [String; 10] {
        let opt = |x: Option<f64>| x.map(fmt_real).unwrap_or_default();
        [
            self.family.name().to_string(),
            opt(self.family.alpha()),
            opt(self.family.beta()),
            self.n.to_string(),
            self.i.to_string(),
            opt(self.formula),
            opt(self.oracle),
            opt(self.bound),
            opt(self.rel_disc),
            self.ns.to_string(),
        ]
    }
}

/// JSON lines, one object per report.
pub fn write_json<W: Write + ?Sized>(out: &mut W, reports: &[Report]) -> io::Result<()> {
    for r in reports {
        writeln!(out, "{}", r.to_json())?;
    }
    Ok(())
}

pub fn write_csv<W: Write>(out: W, reports: &[Report]) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(COLUMNS)?;
    for r in reports {
        w.write_record(r.csv_record())?;
    }
    w.flush()
}

pub fn write_table<W: Write + ?Sized>(out: &mut W, reports: &[Report]) -> io::Result<()> {
    writeln!(
        out,
        "{:<9} {:>8} {:>8} {:>4} {:>3} {:>24} {:>24} {:>24} {:>10}",
        "family", "alpha", "beta", "n", "i", "formula", "oracle", "bound", "rel_disc"
    )?;
    let opt = |x: Option<f64>| x.map(fmt_real).unwrap_or_else(|| "-".into());
    let short = |x: Option<f64>| x.map(|v| format!("{v}")).unwrap_or_else(|| "-".into());
    for r in reports {
        writeln!(
            out,
            "{:<9} {:>8} {:>8} {:>4} {:>3} {:>24} {:>24} {:>24} {:>10}",
            r.family.name(),
            short(r.family.alpha()),
            short(r.family.beta()),
            r.n,
            r.i,
            opt(r.formula),
            opt(r.oracle),
            opt(r.bound),
            r.rel_disc.map(|d| format!("{d:.2e}")).unwrap_or_else(|| "-".into()),
        )?;
        if let Some(l) = &r.ledger {
            for t in &l.terms {
                writeln!(out, "    m={:<4} k={:<3} {:>24}", t.zero_index, t.order, fmt_real(t.value))?;
            }
            if let Some(m) = l.middle_term {
                writeln!(out, "    origin         {:>24}", fmt_real(m))?;
            }
        }
    }
    Ok(())
}
