//! Decision helpers shared by the claim evaluators.

use super::report::{fmt_interval, Status, Witness};
use super::tolerance::Tolerance;
use crate::exact_seq::IntervalReal;

/// Number of trailing points that must have non-increasing deviation.
pub(crate) const TAIL_POINTS: usize = 10;

/// Partial result of one check within a claim.
#[derive(Clone, Debug)]
pub(crate) struct Part {
    pub status: Status,
    /// Enclosure of the largest relevant deviation magnitude.
    pub max_dev: Option<IntervalReal>,
    pub witnesses: Vec<Witness>,
}

impl Part {
    pub fn ok() -> Self {
        Part {
            status: Status::Verified,
            max_dev: None,
            witnesses: Vec::new(),
        }
    }

    pub fn with_status(status: Status, witnesses: Vec<Witness>) -> Self {
        Part {
            status,
            max_dev: None,
            witnesses,
        }
    }
}

/// Everything a claim evaluator produces once decided.
#[derive(Clone, Debug, Default)]
pub(crate) struct Outcome {
    pub statuses: Vec<Status>,
    pub max_dev: Option<IntervalReal>,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
}

impl Outcome {
    pub fn push(&mut self, part: Part) {
        self.statuses.push(part.status);
        self.max_dev = match (self.max_dev.take(), part.max_dev) {
            (Some(a), Some(b)) => Some(a.max(&b)),
            (a, b) => a.or(b),
        };
        self.witnesses.extend(part.witnesses);
    }

    pub fn witness(&mut self, w: Witness) {
        self.witnesses.push(w);
    }

    pub fn note(&mut self, n: impl Into<String>) {
        self.notes.push(n.into());
    }

    pub fn status(&self) -> Status {
        Status::worst(self.statuses.iter().copied())
    }
}

/// Add the parameters in `extra` to a witness.
pub(crate) fn with_params(mut w: Witness, extra: &[(&str, i64)]) -> Witness {
    for (k, v) in extra {
        w = w.param(k, *v);
    }
    w
}

/// Limit check of `values[i].1 -> target`: `|dev(end)| <= tol(end)` and
/// `|dev|` non-increasing over the last [`TAIL_POINTS`] points.
///
/// `None` when some comparison is undecided at the current precision.
pub(crate) fn limit_check(
    param: &str,
    extra: &[(&str, i64)],
    values: &[(u64, IntervalReal)],
    target: &IntervalReal,
    tol: &Tolerance,
    prec: u32,
) -> Option<Part> {
    let (end_n, end_v) = values.last()?;
    let devs: Vec<IntervalReal> = values.iter().map(|(_, v)| (v - target).abs()).collect();
    let end_dev = devs.last().expect("non-empty");
    let tol_v = tol.at(*end_n, prec);
    let mut part = Part::ok();
    part.max_dev = Some(end_dev.clone());
    let w = with_params(Witness::new("limit").param(param, *end_n as i64), extra)
        .interval("value", end_v)
        .interval("target", target)
        .interval("deviation", end_dev)
        .value("tolerance", format!("{} = {}", tol.describe(), fmt_interval(&tol_v)));
    match end_dev.le(&tol_v) {
        Some(true) => part.witnesses.push(w),
        Some(false) => {
            part.status = Status::Refuted;
            part.witnesses.push(w.note("deviation exceeds tolerance"));
        }
        None => return None,
    }
    let start = devs.len().saturating_sub(TAIL_POINTS);
    for i in start + 1..devs.len() {
        match devs[i].le(&devs[i - 1]) {
            Some(true) => {}
            Some(false) => {
                part.status = Status::Refuted;
                let w = with_params(Witness::new("tail-increase"), extra)
                    .param(param, values[i].0 as i64)
                    .interval("deviation", &devs[i])
                    .interval("previous_deviation", &devs[i - 1])
                    .note(format!("deviation grew from {param} = {}", values[i - 1].0));
                part.witnesses.push(w);
            }
            None => return None,
        }
    }
    Some(part)
}

/// `|dev(n)| <= bound` for every point. The largest magnitude is reported
/// with its parameter.
pub(crate) fn bound_sweep(param: &str, devs: &[(u64, IntervalReal)], bound: &IntervalReal) -> Option<Part> {
    let mut part = Part::ok();
    let mut worst: Option<(u64, IntervalReal, IntervalReal)> = None;
    let mut max_dev: Option<IntervalReal> = None;
    for (n, d) in devs {
        let a = d.abs();
        match a.le(bound) {
            Some(true) => {}
            Some(false) => {
                part.status = Status::Refuted;
                part.witnesses.push(
                    Witness::new("violation")
                        .param(param, *n as i64)
                        .interval("deviation", d)
                        .interval("bound", bound),
                );
            }
            None => return None,
        }
        max_dev = Some(match max_dev {
            Some(m) => m.max(&a),
            None => a.clone(),
        });
        let bigger = match &worst {
            Some((_, _, wa)) => a.midpoint() > wa.midpoint(),
            None => true,
        };
        if bigger {
            worst = Some((*n, d.clone(), a));
        }
    }
    if let Some((n, d, _)) = worst {
        part.witnesses.push(
            Witness::new("max-deviation")
                .param(param, n as i64)
                .interval("deviation", &d)
                .interval("bound", bound),
        );
    }
    part.max_dev = max_dev;
    Some(part)
}

/// `|a - b| <= eps`, decided; witness records both values.
pub(crate) fn close_to(label: &str, a: &IntervalReal, b: &IntervalReal, eps: &IntervalReal) -> Option<(bool, Witness)> {
    let d = (a - b).abs();
    let ok = d.le(eps)?;
    Some((
        ok,
        Witness::new(label)
            .interval("value", a)
            .interval("expected", b)
            .interval("deviation", &d),
    ))
}
