//! Seeded randomized property suites. Every suite is deterministic for a
//! given seed.

use std::sync::Arc;

use num_rational::Rational64;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::knotdata::{apply, equivariance_check, LatticeFunction};
use crate::qlaurent::{int, quantum_integer, LaurentQ};
use crate::qweyl_algebra::{AlgebraElement, CommPoly};
use crate::rootdata::{RootData, Weight};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    fn new(name: impl Into<String>) -> Self {
        SuiteResult {
            name: name.into(),
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failures.len() < 8 {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

/// A Laurent polynomial with up to three terms, exponents in `(1/den) Z`.
pub fn random_laurent(rng: &mut impl Rng, den: i64) -> LaurentQ {
    let n = rng.gen_range(1..=3);
    LaurentQ::from_terms((0..n).map(|_| {
        let e = Rational64::new(rng.gen_range(-3 * den..=3 * den), den);
        let mut c = rng.gen_range(-4..=4);
        if c == 0 {
            c = 1;
        }
        (e, int(c))
    }))
}

fn random_weight(rng: &mut impl Rng, window: &[Weight]) -> Weight {
    window.choose(rng).unwrap().clone()
}

/// A degree-bounded element with one to three terms.
pub fn random_element(rng: &mut impl Rng, rd: &Arc<RootData>, radius: i64) -> AlgebraElement {
    let window = rd.window(radius);
    let n = rng.gen_range(1..=3);
    let mut x = AlgebraElement::zero(rd);
    for _ in 0..n {
        let a = random_weight(rng, &window);
        let b = random_weight(rng, &window);
        let c = random_laurent(rng, rd.d() as i64);
        x = &x + &AlgebraElement::monomial(rd, &a, &b, c).unwrap();
    }
    x
}

fn alg(name: &str) -> Arc<RootData> {
    Arc::new(name.parse().expect("built-in algebra"))
}

/// Ring axioms of the coefficient ring and the `h`-jet homomorphism.
pub fn laurent_suite(seed: u64, cases: usize) -> SuiteResult {
    let mut rng = rng_for(seed, 1);
    let mut s = SuiteResult::new("laurent ring axioms and h-jet");
    for _ in 0..cases {
        let den = *[1, 2, 3, 4].choose(&mut rng).unwrap();
        let x = random_laurent(&mut rng, den);
        let y = random_laurent(&mut rng, 2);
        let z = random_laurent(&mut rng, 3);
        s.check(&(&x * &y) * &z == &x * &(&y * &z), || format!("assoc {x} | {y} | {z}"));
        s.check(&x * &(&y + &z) == &(&x * &y) + &(&x * &z), || format!("distrib {x} | {y} | {z}"));
        s.check(&x * &y == &y * &x, || format!("comm {x} | {y}"));
        s.check((&x * &y).bar() == &x.bar() * &y.bar(), || format!("bar {x} | {y}"));
        s.check(x.bar().eval_q1() == x.eval_q1(), || format!("bar eval {x}"));
        let (jx, jy) = (x.h_jet(), y.h_jet());
        let jxy = (&x * &y).h_jet();
        s.check(
            jxy.c0 == &jx.c0 * &jy.c0 && jxy.c1 == &jx.c0 * &jy.c1 + &jx.c1 * &jy.c0,
            || format!("h-jet {x} | {y}"),
        );
    }
    for n in -50..=50 {
        s.check(
            quantum_integer(n + 1) + quantum_integer(n - 1) == quantum_integer(2) * quantum_integer(n),
            || format!("quantum integer recurrence at {n}"),
        );
    }
    s
}

/// Associativity, distributivity, `epsilon` multiplicativity and Weyl
/// equivariance of the product.
pub fn algebra_suite(seed: u64, name: &str, cases: usize) -> SuiteResult {
    let rd = alg(name);
    let mut rng = rng_for(seed, 2);
    let ws = rd.weyl_elements().expect("small Weyl group");
    let mut s = SuiteResult::new(format!("{name} ring axioms"));
    for _ in 0..cases {
        let x = random_element(&mut rng, &rd, 2);
        let y = random_element(&mut rng, &rd, 2);
        let z = random_element(&mut rng, &rd, 2);
        s.check(&(&x * &y) * &z == &x * &(&y * &z), || format!("assoc {x} | {y} | {z}"));
        s.check(&x * &(&y + &z) == &(&x * &y) + &(&x * &z), || format!("distrib {x} | {y} | {z}"));
        s.check((&x * &y).epsilon() == &x.epsilon() * &y.epsilon(), || format!("epsilon {x} | {y}"));
        let w = ws.choose(&mut rng).unwrap();
        let lhs = (&x * &y).weyl_act(w).unwrap();
        let rhs = &x.weyl_act(w).unwrap() * &y.weyl_act(w).unwrap();
        s.check(lhs == rhs, || format!("weyl {w} on {x} | {y}"));
        s.check(
            x.weyl_act(w).unwrap().epsilon() == x.epsilon().weyl_act(w).unwrap(),
            || format!("weyl/epsilon {w} on {x}"),
        );
    }
    s
}

/// `J(w lambda) = sgn(w) J(lambda)` for the unknot function.
pub fn equivariance_suite(name: &str, radius: i64) -> Result<SuiteResult> {
    let rd = alg(name);
    let rep = equivariance_check(&LatticeFunction::unknot_j(&rd)?, radius)?;
    let mut s = SuiteResult::new(format!("{name} unknot equivariance, radius {radius}"));
    s.cases = rep.checked;
    s.failures = rep
        .failures
        .iter()
        .take(8)
        .map(|w| format!("lambda {:?}, w {:?}: {} vs {}", w.lambda, w.weyl, w.value, w.expected))
        .collect();
    Ok(s)
}

/// Every nonzero element acts nontrivially on some delta function.
pub fn faithfulness_suite(seed: u64, cases: usize) -> SuiteResult {
    let rd = alg("sl2");
    let mut rng = rng_for(seed, 3);
    let mut s = SuiteResult::new("sl2 faithfulness on delta functions");
    for _ in 0..cases {
        let mut x = random_element(&mut rng, &rd, 3);
        if x.is_zero() {
            x = AlgebraElement::one(&rd);
        }
        let r = x.max_shift() + 1;
        let deltas = rd.window(r);
        let points = rd.window(2 * r);
        let hit = deltas.iter().any(|mu| {
            let d = LatticeFunction::delta(&rd, mu);
            points
                .iter()
                .any(|lam| !apply(&x, &d, lam).map(|v| v.is_zero()).unwrap_or(true))
        });
        s.check(hit, || format!("{x} kills every delta"));
    }
    s
}

/// Antisymmetry, Leibniz and Jacobi for brackets of trace lifts, plus
/// Weyl equivariance of the bracket.
pub fn poisson_suite(seed: u64, name: &str, cases: usize) -> SuiteResult {
    let rd = alg(name);
    let mut rng = rng_for(seed, 4);
    let ws = rd.weyl_elements().expect("small Weyl group");
    let mut s = SuiteResult::new(format!("{name} Poisson identities"));
    let tau = |rng: &mut ChaCha8Rng| {
        let a = rng.gen_range(-2..=2);
        let b = rng.gen_range(-2..=2);
        AlgebraElement::tau_lift(&rd, a, b)
    };
    for _ in 0..cases {
        let x = tau(&mut rng);
        let y = tau(&mut rng);
        let z = tau(&mut rng);
        let xy = x.poisson(&y).unwrap();
        s.check(xy == -&y.poisson(&x).unwrap(), || format!("antisymmetry {x} | {y}"));
        let lhs = x.poisson(&(&y * &z)).unwrap();
        let rhs = &(&xy * &z.epsilon()) + &(&y.epsilon() * &x.poisson(&z).unwrap());
        s.check(lhs == rhs, || format!("Leibniz {x} | {y} | {z}"));
        let (ex, ey, ez) = (x.epsilon(), y.epsilon(), z.epsilon());
        let br = |p: &CommPoly, q: &CommPoly| p.poisson(q).unwrap();
        let jac = &(&br(&ex, &br(&ey, &ez)) + &br(&ey, &br(&ez, &ex))) + &br(&ez, &br(&ex, &ey));
        s.check(jac.is_zero(), || format!("Jacobi {x} | {y} | {z}"));
        let w = ws.choose(&mut rng).unwrap();
        let lhs = xy.weyl_act(w).unwrap();
        let rhs = x.weyl_act(w).unwrap().poisson(&y.weyl_act(w).unwrap()).unwrap();
        s.check(lhs == rhs, || format!("weyl {w} on {x} | {y}"));
    }
    s
}

/// All suites with the default case counts.
pub fn run_all(seed: u64) -> Result<Vec<SuiteResult>> {
    let mut out = vec![laurent_suite(seed, 200)];
    for name in ["sl2", "sl3", "sp4"] {
        out.push(algebra_suite(seed, name, 200));
    }
    for name in ["sl2", "sl3", "sp4", "so5"] {
        out.push(equivariance_suite(name, 20)?);
    }
    out.push(faithfulness_suite(seed, 20));
    for name in ["sl2", "sp4"] {
        out.push(poisson_suite(seed, name, 50));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_are_deterministic_and_pass() {
        let a = algebra_suite(7, "sl2", 10);
        assert!(a.passed(), "{:?}", a.failures);
        assert_eq!(a, algebra_suite(7, "sl2", 10));
        assert!(laurent_suite(3, 20).passed());
        assert!(faithfulness_suite(1, 3).passed());
        assert!(poisson_suite(2, "sl2", 5).passed());
    }
}
