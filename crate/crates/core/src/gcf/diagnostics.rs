use std::io::Write;

use num_integer::Integer as _;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{GcfInput, Recurrence};
use crate::exact::{Integer, Rational};
use crate::numeric::{self, format_real, Float};
use crate::{Error, Result};

pub const CSV_HEADER: &str = "n,p,q,d,P,q_root,baker_ratio,err,eff_exp,margin";

/// Per-depth record of the Diophantine diagnostics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagnosticsRow {
    pub n: usize,
    pub p: Integer,
    pub q: Integer,
    /// `gcd(p_n, q_n)`.
    pub d: Integer,
    /// `b_0⋯b_{n−1}`.
    pub big_p: Integer,
    /// `q_n^{1/n}` to 30 significant digits.
    pub q_root: Rational,
    /// `log q_{n+1} / log q_n`; undefined while `q_n = 1`.
    pub baker_ratio: Option<Rational>,
    /// `b_0⋯b_n/(q_n q_{n+1})`, which bounds `|θ − p_n/q_n|`.
    pub err: Rational,
    /// `−log(err)/log(q_n/d_n)`; undefined while `q_n = d_n`.
    pub eff_exp: Option<Rational>,
    /// `(q_n/d_n)/d_n`, exceeding 1 exactly when `d_n < q_n/d_n`.
    pub margin: Rational,
}

impl DiagnosticsRow {
    /// `d_n < q_n/d_n`.
    pub fn margin_holds(&self) -> bool {
        self.margin > Rational::one()
    }

    pub fn d_divides_p(&self) -> bool {
        self.big_p.is_multiple_of(&self.d)
    }

    fn cells(&self) -> [String; 10] {
        let opt = |x: &Option<Rational>| x.as_ref().map(format_real).unwrap_or_default();
        [
            self.n.to_string(),
            self.p.to_string(),
            self.q.to_string(),
            self.d.to_string(),
            self.big_p.to_string(),
            format_real(&self.q_root),
            opt(&self.baker_ratio),
            format_real(&self.err),
            opt(&self.eff_exp),
            self.margin.to_string(),
        ]
    }

    /// One JSON object with the CSV column names as keys, in column order.
    pub fn to_json(&self) -> String {
        let number = |text: String| -> serde_json::Value {
            serde_json::Value::Number(text.parse().expect("decimal literal"))
        };
        let opt = |x: &Option<Rational>| match x {
            Some(x) => number(format_real(x)),
            None => serde_json::Value::Null,
        };
        let row = JsonRow {
            n: self.n,
            p: number(self.p.to_string()),
            q: number(self.q.to_string()),
            d: number(self.d.to_string()),
            big_p: number(self.big_p.to_string()),
            q_root: number(format_real(&self.q_root)),
            baker_ratio: opt(&self.baker_ratio),
            err: number(format_real(&self.err)),
            eff_exp: opt(&self.eff_exp),
            margin: self.margin.to_string(),
        };
        serde_json::to_string(&row).expect("plain data")
    }
}

#[derive(Serialize)]
struct JsonRow {
    n: usize,
    p: serde_json::Value,
    q: serde_json::Value,
    d: serde_json::Value,
    #[serde(rename = "P")]
    big_p: serde_json::Value,
    q_root: serde_json::Value,
    baker_ratio: serde_json::Value,
    err: serde_json::Value,
    eff_exp: serde_json::Value,
    margin: String,
}

/// Stream of rows `n = 1, …, n_max`.
pub struct Diagnostics {
    rec: Option<Recurrence>,
    n_max: usize,
    /// `log q_n` for the row about to be emitted.
    ln_q: Option<Float>,
}

impl Iterator for Diagnostics {
    type Item = Result<DiagnosticsRow>;

    fn next(&mut self) -> Option<Self::Item> {
        let rec = self.rec.as_mut()?;
        if rec.n() > self.n_max {
            self.rec = None;
            return None;
        }
        let row = step(rec, &mut self.ln_q);
        if row.is_err() {
            self.rec = None;
        }
        Some(row)
    }
}

fn step(rec: &mut Recurrence, ln_q: &mut Option<Float>) -> Result<DiagnosticsRow> {
    let n = rec.n();
    let p = rec.p().clone();
    let q = rec.q().clone();
    let big_p = rec.b_product().clone();
    let d = p.gcd(&q);
    if !big_p.is_multiple_of(&d) {
        return Err(Error::invariant(format!(
            "d_{n} = {d} does not divide P_{n} = {big_p}"
        )));
    }
    let ln_qn = ln_q.take().unwrap_or_else(|| numeric::ln_integer(&q));
    rec.advance()?;
    let ln_next = numeric::ln_integer(rec.q());

    let q_root = numeric::approx(&numeric::exp(&(ln_qn.clone() / numeric::from_usize(n))));
    let baker_ratio = (!q.is_one()).then(|| numeric::approx(&(ln_next.clone() / ln_qn.clone())));
    let err = Rational::new(rec.b_product().clone(), &q * rec.q());
    let reduced_q = &q / &d;
    let eff_exp = (!reduced_q.is_one()).then(|| {
        let ln_err = numeric::ln_rational(&err);
        numeric::approx(&(-ln_err / numeric::ln_integer(&reduced_q)))
    });
    let margin = Rational::new(reduced_q, d.clone());
    *ln_q = Some(ln_next);
    Ok(DiagnosticsRow {
        n,
        p,
        q,
        d,
        big_p,
        q_root,
        baker_ratio,
        err,
        eff_exp,
        margin,
    })
}

pub fn diagnostics(input: &GcfInput, n_max: usize) -> Result<Diagnostics> {
    if n_max < 2 {
        return Err(Error::precondition("diagnostics need depth n_max ≥ 2"));
    }
    let mut rec = Recurrence::new(input)?;
    rec.advance()?;
    debug_assert!(!rec.q().is_zero());
    Ok(Diagnostics {
        rec: Some(rec),
        n_max,
        ln_q: None,
    })
}

pub fn write_csv<W: Write>(rows: &[DiagnosticsRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::precondition(format!("writing CSV: {e}"));
    w.write_record(CSV_HEADER.split(',')).map_err(io)?;
    for row in rows {
        w.write_record(row.cells()).map_err(io)?;
    }
    w.flush()
        .map_err(|e| Error::precondition(format!("writing CSV: {e}")))
}

/// One JSON object per line.
pub fn write_jsonl<W: Write>(rows: &[DiagnosticsRow], mut out: W) -> Result<()> {
    for row in rows {
        writeln!(out, "{}", row.to_json())
            .map_err(|e| Error::precondition(format!("writing JSON: {e}")))?;
    }
    Ok(())
}
