//! The quantum Weyl algebra `A_g`: sums `sum c_{a,b} Q_a E_b` over pairs of
//! weights with `LaurentQ` coefficients, kept in `Q`-before-`E` normal form
//! using `E_a Q_b = q^{(a,b)} Q_b E_a`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::qlaurent::{LaurentQ, Rational};
use crate::rootdata::{Family, RootData, Weight, WeylElement};

type Key = (Weight, Weight);

fn same_algebra(x: &Arc<RootData>, y: &Arc<RootData>) -> Result<()> {
    if Arc::ptr_eq(x, y) || **x == **y {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch(x.name(), y.name()))
    }
}

fn check_weight(rd: &RootData, w: &Weight) -> Result<()> {
    if w.coords().len() != rd.num_coords() {
        return Err(Error::RankMismatch {
            expected: rd.num_coords(),
            got: w.coords().len(),
        });
    }
    Ok(())
}

fn check_weyl(rd: &RootData, w: &WeylElement) -> Result<()> {
    if rd.contains(w) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("{w} is not in the Weyl group of {}", rd.name())))
    }
}

/// Element of `A_g` in normal form.
#[derive(Clone, Debug)]
pub struct AlgebraElement {
    rd: Arc<RootData>,
    terms: BTreeMap<Key, LaurentQ>,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.rd, &other.rd).is_ok() && self.terms == other.terms
    }
}

impl Eq for AlgebraElement {}

impl AlgebraElement {
    pub fn zero(rd: &Arc<RootData>) -> Self {
        AlgebraElement {
            rd: rd.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rd: &Arc<RootData>) -> Self {
        Self::scalar(rd, LaurentQ::one())
    }

    pub fn scalar(rd: &Arc<RootData>, c: LaurentQ) -> Self {
        let z = rd.zero_weight();
        Self::from_terms(rd, [((z.clone(), z), c)])
    }

    /// `c * Q_a E_b`.
    pub fn monomial(rd: &Arc<RootData>, a: &Weight, b: &Weight, c: LaurentQ) -> Result<Self> {
        check_weight(rd, a)?;
        check_weight(rd, b)?;
        let a = rd.add(a, &rd.zero_weight());
        let b = rd.add(b, &rd.zero_weight());
        Ok(Self::from_terms(rd, [((a, b), c)]))
    }

    pub fn e(rd: &Arc<RootData>, b: &Weight) -> Self {
        Self::from_terms(rd, [((rd.zero_weight(), b.clone()), LaurentQ::one())])
    }

    pub fn q(rd: &Arc<RootData>, a: &Weight) -> Self {
        Self::from_terms(rd, [((a.clone(), rd.zero_weight()), LaurentQ::one())])
    }

    pub(crate) fn from_terms<I>(rd: &Arc<RootData>, it: I) -> Self
    where
        I: IntoIterator<Item = (Key, LaurentQ)>,
    {
        let mut terms: BTreeMap<Key, LaurentQ> = BTreeMap::new();
        for (k, c) in it {
            if c.is_zero() {
                continue;
            }
            match terms.entry(k) {
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    *o.get_mut() += &c;
                    if o.get().is_zero() {
                        o.remove();
                    }
                }
            }
        }
        AlgebraElement {
            rd: rd.clone(),
            terms,
        }
    }

    pub fn rd(&self) -> &Arc<RootData> {
        &self.rd
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms `(a, b, c)` of `sum c Q_a E_b`, in key order.
    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &Weight, &LaurentQ)> {
        self.terms.iter().map(|((a, b), c)| (a, b, c))
    }

    pub fn coeff(&self, a: &Weight, b: &Weight) -> LaurentQ {
        self.terms
            .get(&(a.clone(), b.clone()))
            .cloned()
            .unwrap_or_else(LaurentQ::zero)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        same_algebra(&self.rd, &other.rd)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            let e = out.terms.entry(k.clone()).or_insert_with(LaurentQ::zero);
            *e += c;
            if e.is_zero() {
                out.terms.remove(k);
            }
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        same_algebra(&self.rd, &other.rd)?;
        let rd = &self.rd;
        let mut terms = Vec::with_capacity(self.len() * other.len());
        for ((a, b), c1) in &self.terms {
            for ((c, d), c2) in &other.terms {
                let mut coeff = c1 * c2;
                let p = rd.pair_unchecked(b, c);
                if !p.is_zero() {
                    coeff = coeff.shift(p);
                }
                terms.push(((rd.add(a, c), rd.add(b, d)), coeff));
            }
        }
        Ok(Self::from_terms(rd, terms))
    }

    pub fn scale(&self, c: &LaurentQ) -> Self {
        Self::from_terms(&self.rd, self.terms.iter().map(|(k, x)| (k.clone(), x * c)))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.rd);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Inverse of an invertible monomial `c Q_a E_b` with `c` a monomial in `q`.
    pub fn inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let ((a, b), c) = self.terms.iter().next().unwrap();
        let inv = c.pow(-1)?;
        let coeff = inv.shift(self.rd.pair_unchecked(a, b));
        Some(Self::from_terms(
            &self.rd,
            [((self.rd.neg(a), self.rd.neg(b)), coeff)],
        ))
    }

    /// `w . x`, acting on both weights of every term.
    pub fn weyl_act(&self, w: &WeylElement) -> Result<Self> {
        check_weyl(&self.rd, w)?;
        let rd = &self.rd;
        Ok(Self::from_terms(
            rd,
            self.terms
                .iter()
                .map(|((a, b), c)| ((rd.act(w, a), rd.act(w, b)), c.clone())),
        ))
    }

    /// `sum_{w in W} w . x`.
    pub fn symmetrize(&self) -> Result<Self> {
        let rd = &self.rd;
        let mut terms = Vec::new();
        for w in rd.weyl_elements()? {
            for ((a, b), c) in &self.terms {
                terms.push(((rd.act(&w, a), rd.act(&w, b)), c.clone()));
            }
        }
        Ok(Self::from_terms(rd, terms))
    }

    /// Fixed by every simple reflection, hence by `W`.
    pub fn is_invariant(&self) -> bool {
        self.rd
            .weyl_generators()
            .iter()
            .all(|g| self.weyl_act(g).map(|y| &y == self).unwrap_or(false))
    }

    /// Evaluation at `q = 1`.
    pub fn epsilon(&self) -> CommPoly {
        CommPoly::from_terms(
            &self.rd,
            self.terms.iter().map(|(k, c)| (k.clone(), c.eval_q1())),
        )
    }

    /// First-order part of the commutator under `q = e^h`.
    ///
    /// Fails with [`Error::Internal`] if the commutator does not vanish at
    /// `q = 1`, which cannot happen for elements of `A_g`.
    pub fn poisson(&self, other: &Self) -> Result<CommPoly> {
        let comm = self.checked_mul(other)?.checked_sub(&other.checked_mul(self)?)?;
        let mut terms = Vec::with_capacity(comm.len());
        for ((a, b), c) in &comm.terms {
            let jet = c.h_jet();
            if !jet.c0.is_zero() {
                return Err(Error::Internal(format!(
                    "commutator coefficient {c} of Q{a}E{b} does not vanish at q=1"
                )));
            }
            terms.push(((a.clone(), b.clone()), jet.c1));
        }
        Ok(CommPoly::from_terms(&self.rd, terms))
    }

    /// Normal-ordered preimage of the trace function `tau_{a,b}`: the sum of
    /// `E_i^a Q_i^b` over the standard weights (and their negatives for
    /// `sp`/`so`).
    pub fn tau_lift(rd: &Arc<RootData>, a: i64, b: i64) -> Self {
        let mut acc = Self::zero(rd);
        let signs: &[i64] = match rd.family() {
            Family::Sl => &[1],
            _ => &[1, -1],
        };
        for i in 0..rd.num_coords() {
            let v = rd.basis_weight(i);
            for s in signs {
                let e = Self::e(rd, &rd.scale(s * a, &v));
                let q = Self::q(rd, &rd.scale(s * b, &v));
                acc = &acc + &(&e * &q);
            }
        }
        acc
    }

    /// The substitution `Q -> Q^{-1}`, `q -> q^{-1}`.
    pub fn mirror(&self) -> Self {
        let rd = &self.rd;
        Self::from_terms(
            rd,
            self.terms
                .iter()
                .map(|((a, b), c)| ((rd.neg(a), b.clone()), c.bar())),
        )
    }

    /// Largest absolute coordinate among the `E`-weights.
    pub fn max_shift(&self) -> i64 {
        self.terms
            .keys()
            .flat_map(|(_, b)| b.coords().iter().map(|c| c.abs()))
            .max()
            .unwrap_or(0)
    }

    pub fn parse(s: &str, rd: &Arc<RootData>) -> Result<Self> {
        crate::parse::parse_algebra(s, rd)
    }
}

fn fmt_gen(rd: &RootData, sym: char, w: &Weight, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if w.is_zero() {
        return Ok(());
    }
    match rd.sl2_index(w) {
        Some(1) => write!(f, "{sym}"),
        Some(k) => write!(f, "{sym}^{{{k}}}"),
        None => write!(f, "{sym}{w}"),
    }
}

/// Writes `sign coeff*monomial` terms; `coeff` is rendered by `fmt_coeff`.
fn fmt_sum<'a, C, I>(
    rd: &RootData,
    terms: I,
    f: &mut fmt::Formatter<'_>,
    split: impl Fn(&C) -> (bool, String, bool),
) -> fmt::Result
where
    C: 'a,
    I: Iterator<Item = (&'a Weight, &'a Weight, &'a C)>,
{
    let mut first = true;
    for (a, b, c) in terms {
        let (neg, body, is_unit) = split(c);
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        let mono = a.is_zero() && b.is_zero();
        if mono {
            write!(f, "{body}")?;
            continue;
        }
        if !is_unit {
            write!(f, "{body}*")?;
        }
        fmt_gen(rd, 'Q', a, f)?;
        fmt_gen(rd, 'E', b, f)?;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

fn split_laurent(c: &LaurentQ) -> (bool, String, bool) {
    match c.as_monomial() {
        Some((_, k)) if k.is_negative() => {
            let m = -c;
            (true, m.to_string(), m.is_one())
        }
        Some(_) => (false, c.to_string(), c.is_one()),
        None => (false, format!("({c})"), false),
    }
}

fn split_rational(c: &Rational) -> (bool, String, bool) {
    let a = c.abs();
    (c.is_negative(), a.to_string(), a.is_one())
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_sum(&self.rd, self.terms(), f, split_laurent)
    }
}

/// Element of the commutative group algebra `C[Lambda x Lambda]`, written as
/// `sum c Q_a E_b` with commuting symbols.
#[derive(Clone, Debug)]
pub struct CommPoly {
    rd: Arc<RootData>,
    terms: BTreeMap<Key, Rational>,
}

impl PartialEq for CommPoly {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.rd, &other.rd).is_ok() && self.terms == other.terms
    }
}

impl Eq for CommPoly {}

impl CommPoly {
    pub fn zero(rd: &Arc<RootData>) -> Self {
        CommPoly {
            rd: rd.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(rd: &Arc<RootData>, c: Rational) -> Self {
        let z = rd.zero_weight();
        Self::from_terms(rd, [((z.clone(), z), c)])
    }

    pub fn one(rd: &Arc<RootData>) -> Self {
        Self::constant(rd, Rational::one())
    }

    pub fn monomial(rd: &Arc<RootData>, a: &Weight, b: &Weight, c: Rational) -> Result<Self> {
        check_weight(rd, a)?;
        check_weight(rd, b)?;
        let a = rd.add(a, &rd.zero_weight());
        let b = rd.add(b, &rd.zero_weight());
        Ok(Self::from_terms(rd, [((a, b), c)]))
    }

    pub(crate) fn from_terms<I>(rd: &Arc<RootData>, it: I) -> Self
    where
        I: IntoIterator<Item = (Key, Rational)>,
    {
        let mut terms: BTreeMap<Key, Rational> = BTreeMap::new();
        for (k, c) in it {
            if c.is_zero() {
                continue;
            }
            let e = terms.entry(k.clone()).or_insert_with(Rational::zero);
            *e += c;
            if e.is_zero() {
                terms.remove(&k);
            }
        }
        CommPoly {
            rd: rd.clone(),
            terms,
        }
    }

    pub fn rd(&self) -> &Arc<RootData> {
        &self.rd
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &Weight, &Rational)> {
        self.terms.iter().map(|((a, b), c)| (a, b, c))
    }

    pub fn coeff(&self, a: &Weight, b: &Weight) -> Rational {
        self.terms
            .get(&(a.clone(), b.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        same_algebra(&self.rd, &other.rd)?;
        Ok(Self::from_terms(
            &self.rd,
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(k, c)| (k.clone(), c.clone())),
        ))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        same_algebra(&self.rd, &other.rd)?;
        let rd = &self.rd;
        let mut terms = Vec::with_capacity(self.len() * other.len());
        for ((a, b), c1) in &self.terms {
            for ((c, d), c2) in &other.terms {
                terms.push(((rd.add(a, c), rd.add(b, d)), c1 * c2));
            }
        }
        Ok(Self::from_terms(rd, terms))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(&self.rd, self.terms.iter().map(|(k, x)| (k.clone(), x * c)))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(&self.rd), |acc, _| &acc * self)
    }

    pub fn weyl_act(&self, w: &WeylElement) -> Result<Self> {
        check_weyl(&self.rd, w)?;
        let rd = &self.rd;
        Ok(Self::from_terms(
            rd,
            self.terms
                .iter()
                .map(|((a, b), c)| ((rd.act(w, a), rd.act(w, b)), c.clone())),
        ))
    }

    pub fn is_invariant(&self) -> bool {
        self.rd
            .weyl_generators()
            .iter()
            .all(|g| self.weyl_act(g).map(|y| &y == self).unwrap_or(false))
    }

    /// Each monomial lifted to `c Q_a E_b`.
    pub fn lift(&self) -> AlgebraElement {
        AlgebraElement::from_terms(
            &self.rd,
            self.terms
                .iter()
                .map(|(k, c)| (k.clone(), LaurentQ::from_rational(c.clone()))),
        )
    }

    /// The bracket computed through arbitrary lifts.
    pub fn poisson(&self, other: &Self) -> Result<CommPoly> {
        self.lift().poisson(&other.lift())
    }

    /// Evaluates at `Q_a E_b -> prod_i x_i^{a_i} y_i^{b_i}` for nonzero
    /// rational `x`, `y` (one value per coordinate). For `sl(n)` the values
    /// must have product one, or the result depends on the representative.
    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Result<Rational> {
        let k = self.rd.num_coords();
        if x.len() != k || y.len() != k {
            return Err(Error::RankMismatch {
                expected: k,
                got: x.len().min(y.len()),
            });
        }
        if x.iter().chain(y).any(|v| v.is_zero()) {
            return Err(Error::InvalidArgument("evaluation point has a zero coordinate".into()));
        }
        let pw = |v: &Rational, e: i64| -> Rational {
            if e >= 0 {
                num_traits::pow(v.clone(), e as usize)
            } else {
                num_traits::pow(v.recip(), (-e) as usize)
            }
        };
        let mut acc = Rational::zero();
        for ((a, b), c) in &self.terms {
            let mut t = c.clone();
            for i in 0..k {
                t *= pw(&x[i], a.coords()[i]) * pw(&y[i], b.coords()[i]);
            }
            acc += t;
        }
        Ok(acc)
    }

    pub fn parse(s: &str, rd: &Arc<RootData>) -> Result<Self> {
        crate::parse::parse_comm(s, rd)
    }
}

impl fmt::Display for CommPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_sum(&self.rd, self.terms(), f, split_rational)
    }
}

macro_rules! ring_ops {
    ($t:ty) => {
        impl Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                let mut out = self.clone();
                for c in out.terms.values_mut() {
                    *c = -&*c;
                }
                out
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
        ring_ops!(@bin $t, Add, add, checked_add);
        ring_ops!(@bin $t, Sub, sub, checked_sub);
        ring_ops!(@bin $t, Mul, mul, checked_mul);
    };
    (@bin $t:ty, $tr:ident, $m:ident, $checked:ident) => {
        /// Panics if the operands belong to different algebras; use the
        /// `checked_*` methods to get an error instead.
        impl<'a> $tr<&'a $t> for &'a $t {
            type Output = $t;
            fn $m(self, rhs: &'a $t) -> $t {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
    };
}

ring_ops!(AlgebraElement);
ring_ops!(CommPoly);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlaurent::{int, quantum_integer, rat};
    use num_rational::Rational64;

    fn alg(name: &str) -> Arc<RootData> {
        Arc::new(name.parse().unwrap())
    }

    fn p(s: &str, rd: &Arc<RootData>) -> AlgebraElement {
        AlgebraElement::parse(s, rd).unwrap()
    }

    fn qp(n: i64, d: i64) -> LaurentQ {
        LaurentQ::q_pow(Rational64::new(n, d))
    }

    #[test]
    fn monomials() {
        let rd = alg("sl2");
        let z = rd.zero_weight();
        let a = rd.basis_weight(0);
        assert_eq!(AlgebraElement::monomial(&rd, &z, &z, LaurentQ::one()).unwrap(), AlgebraElement::one(&rd));
        assert_eq!(AlgebraElement::monomial(&rd, &z, &a, LaurentQ::one()).unwrap(), AlgebraElement::e(&rd, &a));
        assert!(AlgebraElement::monomial(&rd, &a, &a, LaurentQ::zero()).unwrap().is_zero());
        let sl3 = alg("sl3");
        assert!(AlgebraElement::monomial(&rd, &sl3.basis_weight(0), &z, LaurentQ::one()).is_err());
    }

    #[test]
    fn commutation_relation() {
        let rd = alg("sl2");
        let eq = &p("E", &rd) * &p("Q", &rd);
        assert_eq!(eq, p("Q", &rd) * p("E", &rd).scale(&qp(1, 2)));
        assert_eq!(eq.to_string(), "q^{1/2}*QE");

        let sp4 = alg("sp4");
        let x = p("Q[1,0]E[1,0]", &sp4);
        assert_eq!(&x * &x, p("q*Q[2,0]E[2,0]", &sp4));

        let x = p("3*Q^{2}E^{-1} - q", &rd);
        assert_eq!(&x * &AlgebraElement::one(&rd), x);
        assert!(p("E", &rd).checked_mul(&p("E[1,0]", &alg("sp4"))).is_err());
    }

    #[test]
    fn associativity_on_small_elements() {
        for name in ["sl2", "sl3", "sp4", "so5"] {
            let rd = alg(name);
            let ws = rd.window(1);
            let el = |i: usize, j: usize, k: i64| {
                AlgebraElement::monomial(&rd, &ws[i % ws.len()], &ws[j % ws.len()], LaurentQ::from_int(k)).unwrap()
            };
            let x = &el(1, 2, 2) + &el(3, 0, -1);
            let y = &el(4, 5, 1) + &el(0, 7, 3);
            let z = &el(2, 2, 1) + &el(8, 1, 1);
            assert_eq!(&(&x * &y) * &z, &x * &(&y * &z), "{name}");
        }
    }

    #[test]
    fn weyl_action() {
        let rd = alg("sl2");
        let id = WeylElement::identity(2);
        let x = p("q*Q^{2}E - E^{-1}", &rd);
        assert_eq!(x.weyl_act(&id).unwrap(), x);
        let w = &rd.weyl_generators()[0];
        let y = p("E + E^{-1}", &rd);
        assert_eq!(y.weyl_act(w).unwrap(), y);
        assert!(y.is_invariant());
        assert!(!p("E", &rd).is_invariant());
        assert!(AlgebraElement::one(&rd).is_invariant());

        let sl3 = alg("sl3");
        let t = WeylElement::new(vec![1, 0, 2], vec![1, 1, 1]).unwrap();
        assert_eq!(p("Q[1,0,0]E[0,1,0]", &sl3).weyl_act(&t).unwrap(), p("Q[0,1,0]E[1,0,0]", &sl3));
        let bad = WeylElement::new(vec![0, 1, 2], vec![-1, 1, 1]).unwrap();
        assert!(p("E[1,0,0]", &sl3).weyl_act(&bad).is_err());
    }

    #[test]
    fn weyl_action_is_multiplicative() {
        let rd = alg("sp4");
        let x = p("q^{1/2}*Q[1,0]E[0,1] + E[2,-1]", &rd);
        let y = p("Q[0,-1]E[1,1] - 3*Q[2,1]", &rd);
        for w in rd.weyl_elements().unwrap() {
            assert_eq!((&x * &y).weyl_act(&w).unwrap(), &x.weyl_act(&w).unwrap() * &y.weyl_act(&w).unwrap());
        }
    }

    #[test]
    fn symmetrize_is_invariant() {
        let rd = alg("so6");
        let x = p("Q[1,0,0]E[0,1,2]", &rd);
        let s = x.symmetrize().unwrap();
        assert!(s.is_invariant());
        assert_eq!(s.len(), 24);
    }

    #[test]
    fn epsilon_examples() {
        let rd = alg("sl2");
        let g = p("E + E^{-1} - (q^{1/2} + q^{-1/2})", &rd);
        assert_eq!(g.epsilon(), CommPoly::parse("E + E^{-1} - 2", &rd).unwrap());
        let g = p("EQ + E^{-1}Q^{-1} - q(Q + Q^{-1})", &rd);
        assert_eq!(g.epsilon(), CommPoly::parse("EQ + E^{-1}Q^{-1} - Q - Q^{-1}", &rd).unwrap());
        assert_eq!(AlgebraElement::one(&rd).epsilon(), CommPoly::one(&rd));
        let x = p("q*E^{2} - Q", &rd);
        let y = p("Q^{3}E^{-1} + q^{-1/2}", &rd);
        assert_eq!((&x * &y).epsilon(), &x.epsilon() * &y.epsilon());
    }

    #[test]
    fn poisson_on_sl2_traces() {
        let rd = alg("sl2");
        let t10 = AlgebraElement::tau_lift(&rd, 1, 0);
        let t01 = AlgebraElement::tau_lift(&rd, 0, 1);
        assert!(t10.poisson(&t10).unwrap().is_zero());
        let lhs = t10.poisson(&t01).unwrap();
        // tau_{1,1} - tau_{1,0} tau_{0,1} / 2
        let t11 = AlgebraElement::tau_lift(&rd, 1, 1).epsilon();
        let prod = &t10.epsilon() * &t01.epsilon();
        assert_eq!(lhs, &t11 - &prod.scale(&rat(1, 2)));
        assert_eq!(t01.poisson(&t10).unwrap(), -&lhs);
    }

    #[test]
    fn poisson_depends_on_classical_limit_only() {
        let rd = alg("sl2");
        let x = p("E + Q^{2}E^{-1}", &rd);
        let y = p("Q^{-1} + 2*EQ", &rd);
        let z = p("Q^{2}E^{3} - E", &rd);
        let shifted = &x + &z.scale(&(qp(1, 1) - LaurentQ::one()));
        assert_eq!(x.poisson(&y).unwrap(), shifted.poisson(&y).unwrap());
        assert_eq!(x.epsilon().poisson(&y.epsilon()).unwrap(), x.poisson(&y).unwrap());
    }

    #[test]
    fn tau_lifts() {
        let rd = alg("sl2");
        assert_eq!(AlgebraElement::tau_lift(&rd, 1, 0), p("E + E^{-1}", &rd));
        assert_eq!(AlgebraElement::tau_lift(&rd, 0, 0), AlgebraElement::scalar(&rd, LaurentQ::from_int(2)));
        for name in ["sl3", "sl4", "sp4", "so5", "so6"] {
            let rd = alg(name);
            let k = rd.num_coords() as i64 * if rd.family() == Family::Sl { 1 } else { 2 };
            assert_eq!(AlgebraElement::tau_lift(&rd, 0, 0), AlgebraElement::scalar(&rd, LaurentQ::from_int(k)));
            for (a, b) in [(1, 0), (1, 1), (2, -1), (-1, 3)] {
                assert!(AlgebraElement::tau_lift(&rd, a, b).is_invariant(), "{name} {a} {b}");
            }
        }
        let sl3 = alg("sl3");
        let expected = p(
            "q^{2/3}*(Q[1,0,0]E[1,0,0] + Q[0,1,0]E[0,1,0] + Q[0,0,1]E[0,0,1])",
            &sl3,
        );
        assert_eq!(AlgebraElement::tau_lift(&sl3, 1, 1), expected);
    }

    #[test]
    fn mirror_is_an_involution() {
        let rd = alg("sl2");
        let x = p("q^{5/4}*Q^{-5}E - q^{-3/4}*(Q^{5} + Q^{-5}) + 7", &rd);
        assert_eq!(x.mirror().mirror(), x);
        assert_eq!(p("Q^{3}", &rd).mirror(), p("Q^{-3}", &rd));
        assert_eq!(p("q^{1/2}*E", &rd).mirror(), p("q^{-1/2}*E", &rd));
        let y = p("E^{2}Q + Q^{-1}", &rd);
        assert_eq!((&x * &y).mirror(), &x.mirror() * &y.mirror());
    }

    #[test]
    fn inverse_and_powers() {
        let rd = alg("sl3");
        let x = p("q^{1/3}*Q[1,0,0]E[0,2,0]", &rd);
        let inv = x.inverse().unwrap();
        assert_eq!(&x * &inv, AlgebraElement::one(&rd));
        assert_eq!(&inv * &x, AlgebraElement::one(&rd));
        assert_eq!(x.pow(3), &(&x * &x) * &x);
        assert!(p("E[1,0,0] + 1", &rd).inverse().is_none());
        let sl2 = alg("sl2");
        assert_eq!(p("E^{-2}", &sl2), p("E^{-1}E^{-1}", &sl2));
    }

    #[test]
    fn display_round_trips() {
        for (name, s) in [
            ("sl2", "q^{5/4}*Q^{-5}E + q^{-7/4}*Q^{-1}E - (q^{1/2} + 1)*Q^{3} - 2"),
            ("sl3", "q^{3/2}*Q[1,0,0]E[0,0,1] - 1/2*E[2,1,0]"),
            ("so5", "Q[1,-1]E[0,2] + (q - 1)*Q[0,1]"),
        ] {
            let rd = alg(name);
            let x = p(s, &rd);
            assert_eq!(p(&x.to_string(), &rd), x, "{x}");
            let c = x.epsilon();
            assert_eq!(CommPoly::parse(&c.to_string(), &rd).unwrap(), c, "{c}");
        }
        assert_eq!(AlgebraElement::zero(&alg("sl2")).to_string(), "0");
    }

    #[test]
    fn comm_poly_evaluation() {
        let rd = alg("sl2");
        let c = CommPoly::parse("Q - 1", &rd).unwrap();
        // (E, Q) = (1, -1): x = (m, 1/m) with m = -1
        let v = c.eval(&[int(-1), int(-1)], &[int(1), int(1)]).unwrap();
        assert_eq!(v, int(-2));
        assert!(c.eval(&[int(0), int(1)], &[int(1), int(1)]).is_err());
        assert_eq!(quantum_integer(1), LaurentQ::one());
    }
}
