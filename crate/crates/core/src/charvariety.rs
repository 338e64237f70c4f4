//! Trace functions on the torus character variety, the Goldman bracket in
//! trace coordinates, and the sweep comparing it with the Poisson bracket
//! coming from `A_g`.

use std::collections::HashMap;
use std::sync::Arc;

use itertools::iproduct;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::qlaurent::Rational;
use crate::qweyl_algebra::{AlgebraElement, CommPoly};
use crate::rootdata::{Family, RootData};

/// `tau_{a,b}`: the trace of `L^a M^b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TorusTrace {
    pub a: i64,
    pub b: i64,
}

impl TorusTrace {
    pub fn new(a: i64, b: i64) -> Self {
        TorusTrace { a, b }
    }
}

pub fn tau_poly(rd: &Arc<RootData>, t: TorusTrace) -> CommPoly {
    AlgebraElement::tau_lift(rd, t.a, t.b).epsilon()
}

/// `det * (tau_{a+c,b+d} - tau_{a,b} tau_{c,d} / n)` for `sl(n)` and
/// `det * (tau_{a+c,b+d} - tau_{a-c,b-d})` for the other families.
pub fn goldman_bracket(rd: &Arc<RootData>, x: TorusTrace, y: TorusTrace) -> CommPoly {
    let det = x.a * y.b - x.b * y.a;
    if det == 0 {
        return CommPoly::zero(rd);
    }
    let sum = tau_poly(rd, TorusTrace::new(x.a + y.a, x.b + y.b));
    let rest = match rd.family() {
        Family::Sl => (&tau_poly(rd, x) * &tau_poly(rd, y))
            .scale(&Rational::new(1.into(), (rd.n() as i64).into())),
        _ => tau_poly(rd, TorusTrace::new(x.a - y.a, x.b - y.b)),
    };
    (&sum - &rest).scale(&Rational::from_integer(det.into()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BracketFailure {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BracketReport {
    pub algebra: String,
    pub range: i64,
    pub checked: usize,
    pub failures: Vec<BracketFailure>,
}

impl BracketReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Compares `{tau_lift(a,b), tau_lift(c,d)}` with the Goldman bracket for
/// all `|a|, |b|, |c|, |d| <= range`. `threads` bounds the worker count;
/// the report is the same for any value.
pub fn compare_brackets(rd: &Arc<RootData>, range: i64, threads: Option<usize>) -> Result<BracketReport> {
    if range < 0 {
        return Err(Error::InvalidArgument("range must be nonnegative".into()));
    }
    let span: Vec<i64> = (-range..=range).collect();
    let pairs: Vec<(i64, i64)> = iproduct!(span.iter().copied(), span.iter().copied()).collect();
    let lifts: HashMap<(i64, i64), AlgebraElement> = pairs
        .iter()
        .map(|&(a, b)| ((a, b), AlgebraElement::tau_lift(rd, a, b)))
        .collect();
    let quads: Vec<((i64, i64), (i64, i64))> = iproduct!(pairs.iter().copied(), pairs.iter().copied()).collect();
    let run = || -> Result<Vec<Option<BracketFailure>>> {
        quads
            .par_iter()
            .map(|&((a, b), (c, d))| {
                let lhs = lifts[&(a, b)].poisson(&lifts[&(c, d)])?;
                let rhs = goldman_bracket(rd, TorusTrace::new(a, b), TorusTrace::new(c, d));
                Ok((lhs != rhs).then(|| BracketFailure {
                    a,
                    b,
                    c,
                    d,
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                }))
            })
            .collect()
    };
    let results = match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::Internal(e.to_string()))?
            .install(run)?,
        None => run()?,
    };
    Ok(BracketReport {
        algebra: rd.name(),
        range,
        checked: quads.len(),
        failures: results.into_iter().flatten().collect(),
    })
}
