//! Buchberger's algorithm over `Q[x_0, ..., x_4]` in graded reverse
//! lexicographic order.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qlaurent::Rational;

pub const NVARS: usize = 5;

/// Default cap on reduction steps; `QWEYL_GUARD_STEPS` overrides it.
pub const DEFAULT_MAX_STEPS: u64 = 20_000_000;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial([u16; NVARS]);

impl Monomial {
    pub fn new(exp: [u16; NVARS]) -> Self {
        Monomial(exp)
    }

    pub fn one() -> Self {
        Monomial([0; NVARS])
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; NVARS];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u16; NVARS] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&x| x as u32).sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(&other.0) {
            *x = (*x).max(*y);
        }
        Monomial(e)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(&other.0) {
            *x += *y;
        }
        Monomial(e)
    }

    /// `self / other`; requires `other | self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(&other.0) {
            *x -= *y;
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        for i in (0..NVARS).rev() {
            match self.0[i].cmp(&other.0[i]) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial with terms sorted by decreasing monomial.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    terms: Vec<(Monomial, Rational)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_terms([(Monomial::one(), c)])
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(it: I) -> Self {
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in it {
            *map.entry(m).or_insert_with(Rational::zero) += c;
        }
        Self::from_map(map)
    }

    fn from_map(map: BTreeMap<Monomial, Rational>) -> Self {
        Poly {
            terms: map.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Monomial::one()
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn leading(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some((_, lc)) => {
                let inv = lc.recip();
                Poly {
                    terms: self.terms.iter().map(|(m, c)| (*m, c * &inv)).collect(),
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        Self::from_terms(self.terms.iter().chain(&other.terms).cloned())
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Self::from_terms(self.terms.iter().map(|(m, x)| (*m, x * c)))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.push((m1.mul(m2), c1 * c2));
            }
        }
        Self::from_terms(out)
    }

    fn mul_term(&self, m: &Monomial, c: &Rational) -> impl Iterator<Item = (Monomial, Rational)> + '_ {
        let m = *m;
        let c = c.clone();
        self.terms.iter().map(move |(m2, c2)| (m.mul(m2), &c * c2))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; NVARS] = ["e", "eb", "u", "ub", "t"];
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c < &Rational::zero();
            if i > 0 {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            } else if neg {
                write!(f, "-")?;
            }
            let a = if neg { -c } else { c.clone() };
            let vars: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(v, e)| if *e == 1 { NAMES[v].to_string() } else { format!("{}^{e}", NAMES[v]) })
                .collect();
            match (vars.is_empty(), a.is_one()) {
                (true, _) => write!(f, "{a}")?,
                (false, true) => write!(f, "{}", vars.join("*"))?,
                (false, false) => write!(f, "{a}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_basis: usize,
    pub max_degree: u32,
    pub max_steps: u64,
}

impl Default for Limits {
    fn default() -> Self {
        let max_steps = std::env::var("QWEYL_GUARD_STEPS")
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_MAX_STEPS);
        Limits {
            max_basis: 20_000,
            max_degree: 200,
            max_steps,
        }
    }
}

struct Counter {
    steps: u64,
    max: u64,
}

impl Counter {
    fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.max {
            return Err(Error::ResourceExceeded(format!("more than {} reduction steps", self.max)));
        }
        Ok(())
    }
}

/// Full reduction of `p` modulo monic polynomials `basis`.
fn reduce_counted(p: &Poly, basis: &[Poly], counter: &mut Counter) -> Result<Poly> {
    let mut work: BTreeMap<Monomial, Rational> = p.terms.iter().cloned().collect();
    let mut rem: Vec<(Monomial, Rational)> = Vec::new();
    while let Some((m, c)) = work.pop_last() {
        let div = basis
            .iter()
            .find(|g| g.leading().map(|(lm, _)| lm.divides(&m)).unwrap_or(false));
        match div {
            None => rem.push((m, c)),
            Some(g) => {
                counter.tick()?;
                let (lm, _) = g.leading().unwrap();
                let shift = m.div(lm);
                for (m2, c2) in g.terms[1..].iter() {
                    let key = shift.mul(m2);
                    let e = work.entry(key).or_insert_with(Rational::zero);
                    *e -= &c * c2;
                    if e.is_zero() {
                        work.remove(&key);
                    }
                }
            }
        }
    }
    Ok(Poly { terms: rem })
}

fn s_poly(f: &Poly, g: &Poly) -> Poly {
    let (lf, _) = f.leading().unwrap();
    let (lg, _) = g.leading().unwrap();
    let l = lf.lcm(lg);
    let one = Rational::one();
    Poly::from_terms(
        f.mul_term(&l.div(lf), &one)
            .chain(g.mul_term(&l.div(lg), &-one.clone())),
    )
}

/// A reduced Groebner basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    polys: Vec<Poly>,
    steps: u64,
}

impl GroebnerBasis {
    pub fn compute(gens: &[Poly], limits: &Limits) -> Result<GroebnerBasis> {
        let mut counter = Counter {
            steps: 0,
            max: limits.max_steps,
        };
        let mut g: Vec<Poly> = Vec::new();
        for p in gens {
            let h = reduce_counted(p, &g, &mut counter)?;
            if !h.is_zero() {
                g.push(h.monic());
            }
        }
        let mut pairs: HashSet<(usize, usize)> = HashSet::new();
        for j in 0..g.len() {
            for i in 0..j {
                pairs.insert((i, j));
            }
        }
        while !pairs.is_empty() {
            // normal strategy: smallest lcm first, ties broken by index
            let &(i, j) = pairs
                .iter()
                .min_by(|a, b| {
                    let la = g[a.0].leading().unwrap().0.lcm(&g[a.1].leading().unwrap().0);
                    let lb = g[b.0].leading().unwrap().0.lcm(&g[b.1].leading().unwrap().0);
                    la.cmp(&lb).then(a.cmp(b))
                })
                .unwrap();
            pairs.remove(&(i, j));
            let li = g[i].leading().unwrap().0;
            let lj = g[j].leading().unwrap().0;
            if li.coprime(&lj) {
                continue;
            }
            let l = li.lcm(&lj);
            let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
            let chain = (0..g.len()).any(|k| {
                k != i
                    && k != j
                    && g[k].leading().unwrap().0.divides(&l)
                    && !pairs.contains(&key(i, k))
                    && !pairs.contains(&key(j, k))
            });
            if chain {
                continue;
            }
            let h = reduce_counted(&s_poly(&g[i], &g[j]), &g, &mut counter)?;
            if h.is_zero() {
                continue;
            }
            let h = h.monic();
            if h.is_unit() {
                return Ok(GroebnerBasis {
                    polys: vec![h],
                    steps: counter.steps,
                });
            }
            if h.degree() > limits.max_degree {
                return Err(Error::ResourceExceeded(format!(
                    "basis element of degree {} exceeds {}",
                    h.degree(),
                    limits.max_degree
                )));
            }
            g.push(h);
            if g.len() > limits.max_basis {
                return Err(Error::ResourceExceeded(format!(
                    "basis has more than {} elements",
                    limits.max_basis
                )));
            }
            let n = g.len() - 1;
            for k in 0..n {
                pairs.insert((k, n));
            }
        }
        // minimal, then reduced
        let mut minimal: Vec<Poly> = Vec::new();
        for (idx, p) in g.iter().enumerate() {
            let lp = p.leading().unwrap().0;
            let redundant = g.iter().enumerate().any(|(k, q)| {
                let lq = q.leading().unwrap().0;
                k != idx && lq.divides(&lp) && (lq != lp || k < idx)
            });
            if !redundant {
                minimal.push(p.clone());
            }
        }
        let mut reduced = Vec::with_capacity(minimal.len());
        for i in 0..minimal.len() {
            let others: Vec<Poly> = minimal
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, p)| p.clone())
                .collect();
            let (lm, lc) = minimal[i].leading().unwrap().clone();
            let tail = Poly {
                terms: minimal[i].terms[1..].to_vec(),
            };
            let mut r = reduce_counted(&tail, &others, &mut counter)?;
            r.terms.insert(0, (lm, lc));
            reduced.push(r.monic());
        }
        reduced.sort_by(|a, b| b.leading().unwrap().0.cmp(&a.leading().unwrap().0));
        Ok(GroebnerBasis {
            polys: reduced,
            steps: counter.steps,
        })
    }

    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Reduction steps spent computing the basis.
    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn is_unit(&self) -> bool {
        self.polys.iter().any(Poly::is_unit)
    }

    pub fn normal_form(&self, p: &Poly) -> Poly {
        let mut c = Counter {
            steps: 0,
            max: u64::MAX,
        };
        reduce_counted(p, &self.polys, &mut c).expect("unbounded reduction")
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.normal_form(p).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlaurent::int;

    fn m(e: [u16; NVARS]) -> Monomial {
        Monomial::new(e)
    }

    fn x(i: usize) -> Poly {
        Poly::from_terms([(Monomial::var(i), int(1))])
    }

    fn c(n: i64) -> Poly {
        Poly::constant(int(n))
    }

    #[test]
    fn grevlex_order() {
        // degree first
        assert!(m([0, 0, 0, 0, 2]) > m([1, 0, 0, 0, 0]));
        // x0^2 > x0 x1 > x1^2 > x0 x2
        assert!(m([2, 0, 0, 0, 0]) > m([1, 1, 0, 0, 0]));
        assert!(m([1, 1, 0, 0, 0]) > m([0, 2, 0, 0, 0]));
        assert!(m([0, 2, 0, 0, 0]) > m([1, 0, 1, 0, 0]));
        assert!(m([1, 0, 0, 0, 0]) > m([0, 1, 0, 0, 0]));
    }

    #[test]
    fn textbook_basis() {
        // <x^2 - y, x^3 - x> contains y^2 - y
        let f = x(0).mul(&x(0)).add(&x(1).scale(&int(-1)));
        let g = x(0).mul(&x(0)).mul(&x(0)).add(&x(0).scale(&int(-1)));
        let gb = GroebnerBasis::compute(&[f, g], &Limits::default()).unwrap();
        let y2y = x(1).mul(&x(1)).add(&x(1).scale(&int(-1)));
        assert!(gb.contains(&y2y));
        assert!(!gb.contains(&x(1)));
        for p in gb.polys() {
            for q in gb.polys() {
                assert!(gb.normal_form(&s_poly(p, q)).is_zero());
            }
        }
    }

    #[test]
    fn unit_ideal_and_idempotence() {
        let gb = GroebnerBasis::compute(&[x(0).add(&c(-1)), x(0).add(&c(-2))], &Limits::default()).unwrap();
        assert!(gb.is_unit());
        let f = x(0).mul(&x(1)).add(&c(-1));
        let g = x(2).mul(&x(2)).add(&x(0).scale(&int(3)));
        let gb = GroebnerBasis::compute(&[f, g], &Limits::default()).unwrap();
        let again = GroebnerBasis::compute(gb.polys(), &Limits::default()).unwrap();
        assert_eq!(gb.polys(), again.polys());
    }

    #[test]
    fn step_guard_reports_exceeded() {
        let f = x(0).mul(&x(0)).add(&x(1).scale(&int(-1)));
        let g = x(0).mul(&x(0)).mul(&x(0)).add(&x(0).scale(&int(-1)));
        let limits = Limits {
            max_steps: 1,
            ..Limits::default()
        };
        assert!(matches!(
            GroebnerBasis::compute(&[f, g], &limits),
            Err(Error::ResourceExceeded(_))
        ));
    }
}
