//! Check reports and grid specifications shared by the verification suites
//! and the command-line front end.

use crate::error::{Error, Result};
use serde::Serialize;
use std::collections::BTreeMap;

/// Slack applied when turning a margin into a pass/fail verdict: a check
/// passes when margin = rhs - lhs >= -1e-12, absorbing benign rounding in
/// identities that are exact in real arithmetic.
pub const ASSERT_SLACK: f64 = 1e-12;

/// Record of one verified inequality lhs <= rhs.
///
/// `pass` is `None` for exploratory checks that are recorded but never
/// asserted (the validity note says why).
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub check_id: String,
    pub params: BTreeMap<String, f64>,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub pass: Option<bool>,
    pub validity_note: String,
}

impl CheckReport {
    /// An asserted check: pass iff margin >= -[`ASSERT_SLACK`].
    pub fn asserted(
        check_id: impl Into<String>,
        params: &[(&str, f64)],
        lhs: f64,
        rhs: f64,
        validity_note: impl Into<String>,
    ) -> Self {
        let margin = rhs - lhs;
        CheckReport {
            check_id: check_id.into(),
            params: to_map(params),
            lhs,
            rhs,
            margin,
            pass: Some(margin >= -ASSERT_SLACK && !margin.is_nan()),
            validity_note: validity_note.into(),
        }
    }

    /// A recorded-only check; margins are reported, nothing is asserted.
    pub fn exploratory(
        check_id: impl Into<String>,
        params: &[(&str, f64)],
        lhs: f64,
        rhs: f64,
        validity_note: impl Into<String>,
    ) -> Self {
        CheckReport {
            check_id: check_id.into(),
            params: to_map(params),
            lhs,
            rhs,
            margin: rhs - lhs,
            pass: None,
            validity_note: validity_note.into(),
        }
    }

    /// A check that is outside its proven validity window: not a failure.
    pub fn not_applicable(
        check_id: impl Into<String>,
        params: &[(&str, f64)],
        validity_note: impl Into<String>,
    ) -> Self {
        CheckReport {
            check_id: check_id.into(),
            params: to_map(params),
            lhs: f64::NAN,
            rhs: f64::NAN,
            margin: f64::NAN,
            pass: None,
            validity_note: validity_note.into(),
        }
    }

    pub fn is_failure(&self) -> bool {
        self.pass == Some(false)
    }
}

fn to_map(params: &[(&str, f64)]) -> BTreeMap<String, f64> {
    params.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

/// Grid point spacing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Spacing {
    Linear,
    Log,
}

/// A one-dimensional sampling grid: `count` points from `start` to `stop`
/// inclusive, linearly or log spaced.
#[derive(Debug, Clone, Serialize)]
pub struct GridSpec {
    pub variable: String,
    pub start: f64,
    pub stop: f64,
    pub count: usize,
    pub spacing: Spacing,
}

impl GridSpec {
    pub fn new(
        variable: impl Into<String>,
        start: f64,
        stop: f64,
        count: usize,
        spacing: Spacing,
    ) -> Result<Self> {
        if count < 2 {
            return Err(Error::usage(format!("grid needs count >= 2, got {count}")));
        }
        if !(start < stop) {
            return Err(Error::usage(format!(
                "grid needs start < stop, got {start}..{stop}"
            )));
        }
        if spacing == Spacing::Log && start <= 0.0 {
            return Err(Error::usage("log grid needs start > 0"));
        }
        Ok(GridSpec {
            variable: variable.into(),
            start,
            stop,
            count,
            spacing,
        })
    }

    pub fn points(&self) -> Vec<f64> {
        let n = self.count;
        (0..n)
            .map(|i| {
                let t = i as f64 / (n - 1) as f64;
                match self.spacing {
                    Spacing::Linear => self.start + (self.stop - self.start) * t,
                    Spacing::Log => {
                        (self.start.ln() + (self.stop.ln() - self.start.ln()) * t).exp()
                    }
                }
            })
            .collect()
    }
}
