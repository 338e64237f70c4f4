//! Functions on the weight lattice, the action of `A_g` on them, and knot
//! data: colored-Jones-type functions and generators of their invariant
//! recursion ideals.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use num_rational::Rational64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::qlaurent::{int, quantum_integer, Exponent, LaurentQ};
use crate::qweyl_algebra::AlgebraElement;
use crate::rootdata::{Family, RootData, Weight, WeylElement};

type Eval = dyn Fn(&Weight) -> Result<LaurentQ> + Send + Sync;

/// A function `Lambda -> LaurentQ`, evaluated lazily and memoized.
#[derive(Clone)]
pub struct LatticeFunction {
    rd: Arc<RootData>,
    name: String,
    eval: Arc<Eval>,
    cache: Arc<RwLock<HashMap<Weight, LaurentQ>>>,
}

impl fmt::Debug for LatticeFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LatticeFunction({}, {})", self.name, self.rd.name())
    }
}

impl LatticeFunction {
    pub fn new<F>(rd: &Arc<RootData>, name: impl Into<String>, f: F) -> Self
    where
        F: Fn(&Weight) -> Result<LaurentQ> + Send + Sync + 'static,
    {
        LatticeFunction {
            rd: rd.clone(),
            name: name.into(),
            eval: Arc::new(f),
            cache: Arc::new(RwLock::new(HashMap::new())),
        }
    }

    /// A function of the `sl(2)` index `n` of `n * alpha_1`.
    pub fn sl2<F>(name: impl Into<String>, f: F) -> Self
    where
        F: Fn(i64) -> LaurentQ + Send + Sync + 'static,
    {
        let rd = Arc::new(RootData::build(Family::Sl, 2).expect("sl2"));
        let r = rd.clone();
        Self::new(&rd, name, move |w| Ok(f(r.sl2_index(w).expect("sl2 weight"))))
    }

    pub fn zero(rd: &Arc<RootData>) -> Self {
        Self::new(rd, "zero", |_| Ok(LaurentQ::zero()))
    }

    /// The indicator of a single weight.
    pub fn delta(rd: &Arc<RootData>, at: &Weight) -> Self {
        let at = rd.add(at, &rd.zero_weight());
        Self::new(rd, format!("delta{at}"), move |w| {
            Ok(if *w == at { LaurentQ::one() } else { LaurentQ::zero() })
        })
    }

    /// `J(lambda) = sum_w sgn(w) q^{(lambda, w rho)} / sum_w sgn(w) q^{(rho, w rho)}`.
    pub fn unknot_j(rd: &Arc<RootData>) -> Result<Self> {
        let ws = rd.weyl_elements()?;
        let two_rho = rd.two_rho();
        let images: Vec<(i8, Weight)> = ws.iter().map(|w| (w.sgn(), rd.act(w, &two_rho))).collect();
        let denom: LaurentQ = images
            .iter()
            .map(|(s, img)| LaurentQ::monomial(rd.pair_unchecked(&two_rho, img) / 4, int(*s as i64)))
            .sum();
        if denom.is_zero() {
            return Err(Error::Internal(format!("Weyl denominator of {} vanishes", rd.name())));
        }
        let r = rd.clone();
        Ok(Self::new(rd, "unknot", move |lam| {
            let lam = r.add(lam, &r.zero_weight());
            let num: LaurentQ = images
                .iter()
                .map(|(s, img)| LaurentQ::monomial(r.pair_unchecked(&lam, img) / 2, int(*s as i64)))
                .sum();
            num.div_exact(&denom).ok_or_else(|| {
                Error::Internal(format!("Weyl denominator does not divide the numerator at {lam}"))
            })
        }))
    }

    pub fn rd(&self) -> &Arc<RootData> {
        &self.rd
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn try_at(&self, lam: &Weight) -> Result<LaurentQ> {
        if let Some(v) = self.cache.read().expect("cache lock").get(lam) {
            return Ok(v.clone());
        }
        let v = (self.eval)(lam)?;
        self.cache
            .write()
            .expect("cache lock")
            .entry(lam.clone())
            .or_insert_with(|| v.clone());
        Ok(v)
    }

    /// Panics if the evaluator fails; see [`try_at`](Self::try_at).
    pub fn at(&self, lam: &Weight) -> LaurentQ {
        self.try_at(lam).unwrap_or_else(|e| panic!("{}: {e}", self.name))
    }

    /// Value at `n * alpha_1` for `sl(2)` functions.
    pub fn at_index(&self, n: i64) -> LaurentQ {
        self.at(&self.rd.scale(n, &self.rd.basis_weight(0)))
    }

    /// `x . f` as a new function.
    pub fn acted_on_by(&self, x: &AlgebraElement) -> LatticeFunction {
        let f = self.clone();
        let x = x.clone();
        Self::new(&self.rd, format!("({x}).{}", self.name), move |lam| apply(&x, &f, lam))
    }

    /// `q -> q^{-1}` applied to every value.
    pub fn bar(&self) -> LatticeFunction {
        let f = self.clone();
        Self::new(&self.rd, format!("bar {}", self.name), move |lam| Ok(f.try_at(lam)?.bar()))
    }
}

/// `(c Q_a E_b) f (lambda) = c q^{(a, lambda)} f(lambda + b)`, summed.
pub fn apply(x: &AlgebraElement, f: &LatticeFunction, lam: &Weight) -> Result<LaurentQ> {
    let rd = x.rd();
    if **rd != **f.rd() {
        return Err(Error::AlgebraMismatch(rd.name(), f.rd().name()));
    }
    if lam.coords().len() != rd.num_coords() {
        return Err(Error::RankMismatch {
            expected: rd.num_coords(),
            got: lam.coords().len(),
        });
    }
    let mut acc = LaurentQ::zero();
    for (a, b, c) in x.terms() {
        let v = f.try_at(&rd.add(lam, b))?;
        if v.is_zero() {
            continue;
        }
        acc += (c * &v).shift(rd.pair_unchecked(a, lam));
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub generator: Option<usize>,
    pub lambda: Vec<i64>,
    pub weyl: Option<String>,
    pub value: String,
    pub expected: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub checked: usize,
    pub failures: Vec<Witness>,
}

const MAX_WITNESSES: usize = 16;

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn merge(mut self, other: CheckReport) -> CheckReport {
        self.checked += other.checked;
        for w in other.failures {
            if self.failures.len() < MAX_WITNESSES {
                self.failures.push(w);
            }
        }
        self
    }
}

/// Checks `f(w lambda) = sgn(w) f(lambda)` on the window of the given radius.
pub fn equivariance_check(f: &LatticeFunction, radius: i64) -> Result<CheckReport> {
    let rd = f.rd().clone();
    let ws = rd.weyl_elements()?;
    let window = rd.window(radius);
    let parts: Vec<Result<CheckReport>> = window
        .par_iter()
        .map(|lam| {
            let base = f.try_at(lam)?;
            let mut rep = CheckReport::default();
            for w in &ws {
                let got = f.try_at(&rd.act(w, lam))?;
                let want = if w.sgn() > 0 { base.clone() } else { -&base };
                rep.checked += 1;
                if got != want && rep.failures.len() < MAX_WITNESSES {
                    rep.failures.push(Witness {
                        generator: None,
                        lambda: lam.coords().to_vec(),
                        weyl: Some(w.to_string()),
                        value: got.to_string(),
                        expected: want.to_string(),
                    });
                }
            }
            Ok(rep)
        })
        .collect();
    parts
        .into_iter()
        .try_fold(CheckReport::default(), |acc, r| Ok(acc.merge(r?)))
}

/// Checks `P f (lambda) = 0` for every generator and every window point.
pub fn annihilation_check(gens: &[AlgebraElement], f: &LatticeFunction, radius: i64) -> Result<CheckReport> {
    annihilation_check_at(gens, f, &f.rd().window(radius))
}

pub fn annihilation_check_at(
    gens: &[AlgebraElement],
    f: &LatticeFunction,
    points: &[Weight],
) -> Result<CheckReport> {
    let parts: Vec<Result<CheckReport>> = points
        .par_iter()
        .map(|lam| {
            let mut rep = CheckReport::default();
            for (i, g) in gens.iter().enumerate() {
                let v = apply(g, f, lam)?;
                rep.checked += 1;
                if !v.is_zero() {
                    rep.failures.push(Witness {
                        generator: Some(i),
                        lambda: lam.coords().to_vec(),
                        weyl: None,
                        value: v.to_string(),
                        expected: "0".into(),
                    });
                }
            }
            Ok(rep)
        })
        .collect();
    parts
        .into_iter()
        .try_fold(CheckReport::default(), |acc, r| Ok(acc.merge(r?)))
}

/// Points of the window fixed by a nontrivial Weyl group element.
pub fn chamber_walls(rd: &RootData, radius: i64) -> Result<Vec<Weight>> {
    let ws: Vec<WeylElement> = rd
        .weyl_elements()?
        .into_iter()
        .filter(|w| *w != WeylElement::identity(rd.n()))
        .collect();
    Ok(rd
        .window(radius)
        .into_iter()
        .filter(|lam| ws.iter().any(|w| rd.act(w, lam) == *lam))
        .collect())
}

/// `sum_i E_{alpha_i} - [n]` for `sl(n)`.
pub fn sln_unknot_generator(rd: &Arc<RootData>) -> Result<AlgebraElement> {
    if rd.family() != Family::Sl {
        return Err(Error::InvalidArgument(format!("{} is not sl(n)", rd.name())));
    }
    let mut x = AlgebraElement::scalar(rd, -quantum_integer(rd.n() as i64));
    for i in 0..rd.n() {
        x = &x + &AlgebraElement::e(rd, &rd.basis_weight(i));
    }
    Ok(x)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Chirality {
    Left,
    Right,
}

impl Chirality {
    fn sign(self) -> i64 {
        match self {
            Chirality::Left => -1,
            Chirality::Right => 1,
        }
    }
}

impl std::str::FromStr for Chirality {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Chirality::Left),
            "right" => Ok(Chirality::Right),
            _ => Err(Error::InvalidArgument(format!("unknown chirality `{s}`"))),
        }
    }
}

/// Colored Jones function of the trefoil from the torus-knot character
/// sum, normalized by `J(1) = 1` and extended by `J(-n) = -J(n)`. The
/// framing factor is `q^{framing (n^2 - 1) / 4}`.
pub fn trefoil_oracle(chirality: Chirality, framing: i64) -> LatticeFunction {
    let s = chirality.sign();
    LatticeFunction::sl2(format!("trefoil-{chirality:?}-f{framing}").to_lowercase(), move |n| {
        let sign = n.signum();
        let n = n.abs();
        if n == 0 {
            return LaurentQ::zero();
        }
        let mut sum = LaurentQ::zero();
        for j in 0..n {
            let m = 2 * n - 1 - 2 * j;
            let mut t = quantum_integer(m).shift(Rational64::new(s * 3 * (m * m - 1), 8));
            if j % 2 == 1 {
                t = -t;
            }
            sum += t;
        }
        let e = Rational64::new(-s * 6 * (n * n - 1), 4) + Rational64::new(framing * (n * n - 1), 4);
        let v = sum.shift(e);
        if sign < 0 {
            -v
        } else {
            v
        }
    })
}

/// Values at the given `sl(2)` indices as `[[n, "poly"], ...]`.
pub fn export_values(f: &LatticeFunction, indices: &[i64]) -> serde_json::Value {
    serde_json::Value::Array(
        indices
            .iter()
            .map(|&n| serde_json::json!([n, f.at_index(n).to_string()]))
            .collect(),
    )
}

#[derive(Clone, Debug)]
pub struct KnotPreset {
    pub name: String,
    pub algebra: Arc<RootData>,
    pub generators: Vec<AlgebraElement>,
    pub note: String,
}

/// Order in which a written monomial `E^a Q^b` is multiplied out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Reading {
    EFirst,
    QFirst,
}

/// A transcription of the left-trefoil generators. The second generator
/// carries the coefficient `q^{slot} + q^{partner}` on `EQ^{-6} + E^{-1}Q^6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TrefoilReading {
    pub slot: Exponent,
    pub partner: Exponent,
    pub third: Reading,
}

impl TrefoilReading {
    pub fn resolved() -> Self {
        TrefoilReading {
            slot: Rational64::new(1, 2),
            partner: Rational64::new(5, 2),
            third: Reading::QFirst,
        }
    }
}

fn ex(e: Exponent) -> String {
    if e.is_integer() {
        format!("{}", e.numer())
    } else {
        format!("{}/{}", e.numer(), e.denom())
    }
}

fn eq_mono(e: i64, q: i64, r: Reading) -> String {
    match r {
        Reading::EFirst => format!("E^{{{e}}}Q^{{{q}}}"),
        Reading::QFirst => format!("Q^{{{q}}}E^{{{e}}}"),
    }
}

fn pair(e: i64, q: i64, r: Reading) -> String {
    format!("({} + {})", eq_mono(e, q, r), eq_mono(-e, -q, r))
}

fn sl2() -> Arc<RootData> {
    Arc::new(RootData::build(Family::Sl, 2).expect("sl2"))
}

pub fn unknot_generators(rd: &Arc<RootData>) -> Vec<AlgebraElement> {
    [
        "E + E^{-1} - (q^{1/2} + q^{-1/2})",
        "E*Q + E^{-1}*Q^{-1} - q*(Q + Q^{-1})",
    ]
    .iter()
    .map(|s| AlgebraElement::parse(s, rd).expect("unknot generator"))
    .collect()
}

pub fn trefoil_left_generators(rd: &Arc<RootData>, r: &TrefoilReading) -> Vec<AlgebraElement> {
    let e = Reading::EFirst;
    let g1 = format!(
        "q^{{5/4}}*{} - q^{{-7/4}}*{} - q^{{-3/4}}*(Q^{{5}} + Q^{{-5}}) + q^{{1/4}}*(Q + Q^{{-1}})",
        pair(1, -5, e),
        pair(1, -1, e)
    );
    let g2 = format!(
        "q^{{3}}*{} + (q^{{3/2}} + q^{{-3/2}})*(E + E^{{-1}}) - (q^{{{}}} + q^{{{}}})*{} + (Q^{{6}} + Q^{{-6}}) - 2*(q + q^{{-1}})",
        pair(2, -6, e),
        ex(r.slot),
        ex(r.partner),
        pair(1, -6, e)
    );
    let t = r.third;
    let g3 = format!(
        "-q^{{-7/2}}*{} + q^{{-3}}*{} + (q^{{-2}} - q^{{-1}})*{} - q*{} - (q^{{1/2}} - q^{{-1/2}})*(Q^{{3}} + Q^{{-3}}) + q^{{-3/2}}*(Q + Q^{{-1}})",
        pair(2, -7, t),
        pair(1, -7, t),
        pair(1, -3, t),
        pair(1, -1, t)
    );
    [g1, g2, g3]
        .iter()
        .map(|s| AlgebraElement::parse(s, rd).expect("trefoil generator"))
        .collect()
}

/// Built-in invariant recursion generators: `unknot`, `trefoil-left`,
/// `trefoil-right`.
pub fn preset(name: &str) -> Result<KnotPreset> {
    let rd = sl2();
    let (generators, note) = match name {
        "unknot" => (unknot_generators(&rd), "sl2 unknot".to_string()),
        "trefoil-left" => (
            trefoil_left_generators(&rd, &TrefoilReading::resolved()),
            "sl2 left-handed trefoil, framing 0; middle coefficient q^{1/2} + q^{5/2}; \
             third generator multiplied out with Q before E"
                .to_string(),
        ),
        "trefoil-right" => (
            trefoil_left_generators(&rd, &TrefoilReading::resolved())
                .iter()
                .map(AlgebraElement::mirror)
                .collect(),
            "mirror (Q -> Q^{-1}, q -> q^{-1}) of trefoil-left".to_string(),
        ),
        _ => return Err(Error::InvalidArgument(format!("unknown knot `{name}`"))),
    };
    Ok(KnotPreset {
        name: name.to_string(),
        algebra: rd,
        generators,
        note,
    })
}

/// The oracle matching a preset, or `None` for unknown names.
pub fn preset_function(name: &str) -> Option<LatticeFunction> {
    match name {
        "unknot" => LatticeFunction::unknot_j(&sl2()).ok(),
        "trefoil-left" => Some(trefoil_oracle(Chirality::Left, 0)),
        "trefoil-right" => Some(trefoil_oracle(Chirality::Right, 0)),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolution {
    pub framing: i64,
    pub reading: TrefoilReading,
}

/// Every (framing, transcription) under which all three left-trefoil
/// generators annihilate the oracle at the given indices.
pub fn resolve_trefoil(
    framings: &[i64],
    slots: &[Exponent],
    partners: &[Exponent],
    thirds: &[Reading],
    indices: &[i64],
) -> Vec<Resolution> {
    let rd = sl2();
    let points: Vec<Weight> = indices.iter().map(|&n| rd.scale(n, &rd.basis_weight(0))).collect();
    let mut cands = Vec::new();
    for &f in framings {
        for &slot in slots {
            for &partner in partners {
                for &third in thirds {
                    cands.push(Resolution {
                        framing: f,
                        reading: TrefoilReading { slot, partner, third },
                    });
                }
            }
        }
    }
    let oracles: HashMap<i64, LatticeFunction> = framings
        .iter()
        .map(|&f| (f, trefoil_oracle(Chirality::Left, f)))
        .collect();
    cands
        .into_par_iter()
        .filter(|c| {
            let gens = trefoil_left_generators(&rd, &c.reading);
            let f = &oracles[&c.framing];
            gens.iter()
                .all(|g| points.iter().all(|p| apply(g, f, p).map(|v| v.is_zero()).unwrap_or(false)))
        })
        .collect()
}
