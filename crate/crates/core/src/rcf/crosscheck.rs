use serde::Serialize;

use super::{
    confirmed_quotients, folding_normal_form, interval_report, LetterEncoding, QuotientReport,
};
use crate::exact::Integer;
use crate::gcf::{enclosure, GcfInput};
use crate::substitution::{period_doubling, NumericAssignment};
use crate::Result;

/// Transducer-confirmed quotients against interval-confirmed quotients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheck {
    pub folding_steps: usize,
    pub gcf_depth: usize,
    pub transducer: QuotientReport,
    pub interval: QuotientReport,
    /// Length of the common confirmed prefix.
    pub agreed: usize,
    /// The two lists differ somewhere within their common length.
    pub discrepancy: bool,
    /// Where one list extends past the other, the longer list's next
    /// quotient respects the shorter list's lower bound.
    pub bounds_consistent: bool,
}

#[derive(Serialize)]
struct JsonCrossCheck {
    folding_steps: usize,
    gcf_depth: usize,
    agreed: usize,
    discrepancy: bool,
    bounds_consistent: bool,
    transducer: serde_json::Value,
    interval: serde_json::Value,
}

impl CrossCheck {
    pub fn to_json(&self) -> String {
        let value = |r: &QuotientReport| serde_json::from_str(&r.to_json()).expect("valid JSON");
        serde_json::to_string(&JsonCrossCheck {
            folding_steps: self.folding_steps,
            gcf_depth: self.gcf_depth,
            agreed: self.agreed,
            discrepancy: self.discrepancy,
            bounds_consistent: self.bounds_consistent,
            transducer: value(&self.transducer),
            interval: value(&self.interval),
        })
        .expect("plain data")
    }
}

fn bound_respected(short: &QuotientReport, long: &[Integer]) -> bool {
    long.get(short.confirmed.len())
        .map_or(true, |q| q >= &short.next_lower_bound)
}

/// On the period doubling `{1, 3}` instance.
pub fn cross_check(folding_steps: usize, gcf_depth: usize) -> Result<CrossCheck> {
    cross_check_with(folding_steps, gcf_depth, &"a=1,b=3".parse()?)
}

/// Runs both arms concurrently on the period doubling word read through
/// `values`.
pub fn cross_check_with(
    folding_steps: usize,
    gcf_depth: usize,
    values: &NumericAssignment<char>,
) -> Result<CrossCheck> {
    let enc = LetterEncoding::from_assignment(values);
    let input = GcfInput::from_substitution(period_doubling(), 'a', values.clone())?;
    let (transducer, interval) = std::thread::scope(|s| {
        let t = s.spawn(|| -> Result<QuotientReport> {
            Ok(confirmed_quotients(&folding_normal_form(
                folding_steps,
                &enc,
            )?))
        });
        let i = s.spawn(|| interval_report(&enclosure(&input, gcf_depth)?));
        (
            t.join().expect("transducer arm"),
            i.join().expect("interval arm"),
        )
    });
    let (transducer, interval) = (transducer?, interval?);
    let common = transducer.confirmed.len().min(interval.confirmed.len());
    let agreed = transducer
        .confirmed
        .iter()
        .zip(&interval.confirmed)
        .take_while(|(x, y)| x == y)
        .count();
    let discrepancy = agreed < common;
    let bounds_consistent = bound_respected(&transducer, &interval.confirmed)
        && bound_respected(&interval, &transducer.confirmed);
    Ok(CrossCheck {
        folding_steps,
        gcf_depth,
        transducer,
        interval,
        agreed,
        discrepancy,
        bounds_consistent,
    })
}
