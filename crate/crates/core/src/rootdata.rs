//! Weight lattices, dual Killing forms and Weyl groups of the classical Lie
//! algebras `sl(n)`, `sp(2n)`, `so(2n)` and `so(2n+1)`.
//!
//! `sl(n)` weights live in the redundant coordinates `alpha_1, ..., alpha_n`
//! (the weights of the standard representation) modulo
//! `alpha_1 + ... + alpha_n = 0`; the canonical representative has minimum
//! coordinate zero. For the other families the coordinates are taken in the
//! basis dual to `H_i = E_ii - E_{n+i,n+i}`, where the form is the identity.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_rational::Rational64;
use num_traits::Zero;

use crate::error::{Error, Result};

pub const WEYL_GROUP_LIMIT: u128 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `sl(n)`
    Sl,
    /// `sp(2n)`
    Sp,
    /// `so(2n)`
    SoEven,
    /// `so(2n+1)`
    SoOdd,
}

/// An integral weight in the coordinates of the owning [`RootData`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().join(","))
    }
}

/// Signed permutation `e_i -> signs[i] * e_{perm[i]}`. For `sl(n)` all signs
/// are `+1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl WeylElement {
    pub fn identity(k: usize) -> Self {
        WeylElement {
            perm: (0..k).collect(),
            signs: vec![1; k],
        }
    }

    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let k = perm.len();
        let mut seen = vec![false; k];
        for &p in &perm {
            if p >= k || seen[p] {
                return Err(Error::InvalidArgument(format!(
                    "{perm:?} is not a permutation"
                )));
            }
            seen[p] = true;
        }
        if signs.len() != k || signs.iter().any(|s| *s != 1 && *s != -1) {
            return Err(Error::InvalidArgument(format!("bad sign vector {signs:?}")));
        }
        Ok(WeylElement { perm, signs })
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    fn perm_sign(&self) -> i8 {
        let mut seen = vec![false; self.perm.len()];
        let mut sign = 1;
        for start in 0..self.perm.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = self.perm[j];
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    /// Determinant of the action: `sign(perm) * prod(signs)`.
    pub fn sgn(&self) -> i8 {
        self.signs.iter().fold(self.perm_sign(), |s, x| s * x)
    }

    /// `self * other`, acting as `other` first.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let perm = other.perm.iter().map(|&j| self.perm[j]).collect();
        let signs = other
            .signs
            .iter()
            .zip(&other.perm)
            .map(|(s, &j)| s * self.signs[j])
            .collect();
        WeylElement { perm, signs }
    }

    pub fn inverse(&self) -> WeylElement {
        let k = self.perm.len();
        let mut perm = vec![0; k];
        let mut signs = vec![1; k];
        for i in 0..k {
            perm[self.perm[i]] = i;
            signs[self.perm[i]] = self.signs[i];
        }
        WeylElement { perm, signs }
    }

    fn act_raw(&self, coords: &[i64]) -> Vec<i64> {
        let mut out = vec![0; coords.len()];
        for (i, &c) in coords.iter().enumerate() {
            out[self.perm[i]] = self.signs[i] as i64 * c;
        }
        out
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self
            .perm
            .iter()
            .zip(&self.signs)
            .map(|(p, s)| if *s < 0 { format!("-{}", p + 1) } else { format!("{}", p + 1) })
            .join(" ");
        write!(f, "({parts})")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootData {
    family: Family,
    n: usize,
    rank: usize,
    d: u32,
    // pairing on coordinate basis vectors
    pairing: Vec<Vec<Rational64>>,
    // 2 * rho, canonical
    two_rho: Vec<i64>,
    // pairing is the one from `build`
    standard: bool,
}

impl RootData {
    /// `sl(n)` for `Family::Sl`, `sp(2n)`, `so(2n)`, `so(2n+1)` otherwise.
    pub fn build(family: Family, n: usize) -> Result<RootData> {
        let min = match family {
            Family::Sl | Family::SoEven => 2,
            Family::Sp | Family::SoOdd => 1,
        };
        if n < min {
            return Err(Error::UnsupportedAlgebra(format!("{family:?}({n})")));
        }
        let (rank, d) = match family {
            Family::Sl => (n - 1, n as u32),
            Family::Sp => (n, 1),
            Family::SoOdd => (n, if (2 * n + 1) % 4 == 1 { 1 } else { 2 }),
            Family::SoEven => (n, if (2 * n).is_multiple_of(4) { 2 } else { 4 }),
        };
        let nn = n as i64;
        let pairing = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match family {
                        Family::Sl if i == j => Rational64::new(nn - 1, nn),
                        Family::Sl => Rational64::new(-1, nn),
                        _ if i == j => Rational64::from_integer(1),
                        _ => Rational64::zero(),
                    })
                    .collect()
            })
            .collect();
        // sl: rho = sum (n+1-2i)/2 alpha_i; other families use the
        // half-sum of positive roots in the e_i basis.
        let two_rho: Vec<i64> = (1..=nn)
            .map(|i| match family {
                Family::Sl => nn + 1 - 2 * i,
                Family::Sp => 2 * (nn + 1 - i),
                Family::SoOdd => 2 * (nn - i) + 1,
                Family::SoEven => 2 * (nn - i),
            })
            .collect();
        let mut rd = RootData {
            family,
            n,
            rank,
            d,
            pairing,
            two_rho: Vec::new(),
            standard: true,
        };
        rd.two_rho = rd.canonical(two_rho);
        Ok(rd)
    }

    /// A copy with a replaced pairing matrix. Used for negative controls.
    pub fn with_pairing(&self, pairing: Vec<Vec<Rational64>>) -> Result<RootData> {
        let k = self.num_coords();
        if pairing.len() != k || pairing.iter().any(|r| r.len() != k) {
            return Err(Error::InvalidArgument(format!("pairing must be {k}x{k}")));
        }
        for i in 0..k {
            for j in 0..k {
                if pairing[i][j] != pairing[j][i] {
                    return Err(Error::InvalidArgument("pairing must be symmetric".into()));
                }
            }
        }
        Ok(RootData {
            pairing,
            standard: false,
            ..self.clone()
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// The family parameter `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `D(g)`: the root-of-`q` denominator of the coefficient ring.
    pub fn d(&self) -> u32 {
        self.d
    }

    /// Length of a weight's coordinate vector.
    pub fn num_coords(&self) -> usize {
        self.n
    }

    pub fn pairing_matrix(&self) -> &[Vec<Rational64>] {
        &self.pairing
    }

    pub fn name(&self) -> String {
        match self.family {
            Family::Sl => format!("sl{}", self.n),
            Family::Sp => format!("sp{}", 2 * self.n),
            Family::SoEven => format!("so{}", 2 * self.n),
            Family::SoOdd => format!("so{}", 2 * self.n + 1),
        }
    }

    fn canonical(&self, mut coords: Vec<i64>) -> Vec<i64> {
        if self.family == Family::Sl {
            let m = coords.iter().copied().min().unwrap_or(0);
            if m != 0 {
                coords.iter_mut().for_each(|c| *c -= m);
            }
        }
        coords
    }

    pub fn weight(&self, coords: &[i64]) -> Result<Weight> {
        if coords.len() != self.num_coords() {
            return Err(Error::RankMismatch {
                expected: self.num_coords(),
                got: coords.len(),
            });
        }
        Ok(Weight(self.canonical(coords.to_vec())))
    }

    pub fn zero_weight(&self) -> Weight {
        Weight(vec![0; self.num_coords()])
    }

    /// The `i`-th coordinate basis weight (`alpha_i` in the notation above),
    /// zero-based.
    pub fn basis_weight(&self, i: usize) -> Weight {
        let mut v = vec![0; self.num_coords()];
        v[i] = 1;
        Weight(self.canonical(v))
    }

    pub fn add(&self, a: &Weight, b: &Weight) -> Weight {
        let v = a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect();
        Weight(self.canonical(v))
    }

    pub fn neg(&self, a: &Weight) -> Weight {
        Weight(self.canonical(a.0.iter().map(|x| -x).collect()))
    }

    pub fn scale(&self, k: i64, a: &Weight) -> Weight {
        Weight(self.canonical(a.0.iter().map(|x| k * x).collect()))
    }

    /// The pairing `(a, b)`, assuming both weights belong to `self`.
    pub fn pair_unchecked(&self, a: &Weight, b: &Weight) -> Rational64 {
        match self.family {
            Family::Sl if self.standard => {
                let dot: i64 = a.0.iter().zip(&b.0).map(|(x, y)| x * y).sum();
                let sa: i64 = a.0.iter().sum();
                let sb: i64 = b.0.iter().sum();
                Rational64::new(dot * self.n as i64 - sa * sb, self.n as i64)
            }
            _ => {
                let mut acc = Rational64::zero();
                for (i, x) in a.0.iter().enumerate() {
                    if *x == 0 {
                        continue;
                    }
                    for (j, y) in b.0.iter().enumerate() {
                        if *y != 0 {
                            acc += self.pairing[i][j] * (x * y);
                        }
                    }
                }
                acc
            }
        }
    }

    pub fn pair(&self, a: &Weight, b: &Weight) -> Result<Rational64> {
        for w in [a, b] {
            if w.0.len() != self.num_coords() {
                return Err(Error::RankMismatch {
                    expected: self.num_coords(),
                    got: w.0.len(),
                });
            }
        }
        Ok(self.pair_unchecked(a, b))
    }

    /// `2 * rho` as an integral weight.
    pub fn two_rho(&self) -> Weight {
        Weight(self.two_rho.clone())
    }

    /// `rho` itself when it is integral in these coordinates. It is not for
    /// `so(2n+1)`, whose `rho` has half-integer coordinates.
    pub fn rho(&self) -> Option<Weight> {
        // for sl(n) the canonical 2*rho is (2n-2, 2n-4, ..., 0)
        let v = &self.two_rho;
        if v.iter().any(|c| c % 2 != 0) {
            return None;
        }
        Some(Weight(self.canonical(v.iter().map(|c| c / 2).collect())))
    }

    /// `(a, rho)`, exact.
    pub fn pair_rho(&self, a: &Weight) -> Rational64 {
        self.pair_unchecked(a, &self.two_rho()) / 2
    }

    /// `(w(a), w(b))` for `b = 2*rho`, halved.
    pub fn pair_with_rho_image(&self, a: &Weight, w: &WeylElement) -> Rational64 {
        self.pair_unchecked(a, &self.act(w, &self.two_rho())) / 2
    }

    pub fn weyl_order(&self) -> u128 {
        let fact: u128 = (1..=self.n as u128).product();
        match self.family {
            Family::Sl => fact,
            Family::Sp | Family::SoOdd => fact << self.n,
            Family::SoEven => fact << (self.n - 1),
        }
    }

    /// Every element of the Weyl group, each exactly once.
    pub fn weyl_elements(&self) -> Result<Vec<WeylElement>> {
        let size = self.weyl_order();
        if size > WEYL_GROUP_LIMIT {
            return Err(Error::WeylGroupTooLarge {
                algebra: self.name(),
                size,
                limit: WEYL_GROUP_LIMIT,
            });
        }
        let n = self.n;
        let sign_vectors: Vec<Vec<i8>> = match self.family {
            Family::Sl => vec![vec![1; n]],
            _ => (0..(1u32 << n))
                .map(|mask| {
                    (0..n)
                        .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                        .collect::<Vec<i8>>()
                })
                .filter(|s| {
                    self.family != Family::SoEven || s.iter().filter(|x| **x < 0).count() % 2 == 0
                })
                .collect(),
        };
        let mut out = Vec::with_capacity(size as usize);
        for perm in (0..n).permutations(n) {
            for signs in &sign_vectors {
                out.push(WeylElement {
                    perm: perm.clone(),
                    signs: signs.clone(),
                });
            }
        }
        Ok(out)
    }

    /// Simple reflections; they generate the Weyl group.
    pub fn weyl_generators(&self) -> Vec<WeylElement> {
        let n = self.n;
        let mut gens = Vec::new();
        for i in 0..n.saturating_sub(1) {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.swap(i, i + 1);
            gens.push(WeylElement {
                perm,
                signs: vec![1; n],
            });
        }
        match self.family {
            Family::Sl => {}
            Family::Sp | Family::SoOdd => {
                let mut signs = vec![1; n];
                signs[n - 1] = -1;
                gens.push(WeylElement {
                    perm: (0..n).collect(),
                    signs,
                });
            }
            Family::SoEven => {
                // reflection in e_{n-1} + e_n
                let mut perm: Vec<usize> = (0..n).collect();
                perm.swap(n - 2, n - 1);
                let mut signs = vec![1; n];
                signs[n - 2] = -1;
                signs[n - 1] = -1;
                gens.push(WeylElement { perm, signs });
            }
        }
        gens
    }

    /// Checks that `w` is an element of this Weyl group.
    pub fn contains(&self, w: &WeylElement) -> bool {
        if w.perm.len() != self.n {
            return false;
        }
        match self.family {
            Family::Sl => w.signs.iter().all(|s| *s == 1),
            Family::SoEven => w.signs.iter().filter(|s| **s < 0).count() % 2 == 0,
            _ => true,
        }
    }

    pub fn act(&self, w: &WeylElement, a: &Weight) -> Weight {
        Weight(self.canonical(w.act_raw(&a.0)))
    }

    pub fn try_act(&self, w: &WeylElement, a: &Weight) -> Result<Weight> {
        if a.0.len() != self.num_coords() || w.perm.len() != self.num_coords() {
            return Err(Error::RankMismatch {
                expected: self.num_coords(),
                got: a.0.len().min(w.perm.len()),
            });
        }
        Ok(self.act(w, a))
    }

    /// Weights with every free coordinate in `[-radius, radius]`. For `sl(n)`
    /// the last coordinate is pinned to zero, which picks one representative
    /// per class.
    pub fn window(&self, radius: i64) -> Vec<Weight> {
        let free = match self.family {
            Family::Sl => self.n - 1,
            _ => self.n,
        };
        (0..free)
            .map(|_| -radius..=radius)
            .multi_cartesian_product()
            .map(|mut v| {
                if self.family == Family::Sl {
                    v.push(0);
                }
                Weight(self.canonical(v))
            })
            .collect()
    }

    /// For rank-one `sl(2)` weights, the integer `k` with `w = k * alpha_1`.
    pub fn sl2_index(&self, w: &Weight) -> Option<i64> {
        if self.family == Family::Sl && self.n == 2 {
            Some(w.0[0] - w.0[1])
        } else {
            None
        }
    }
}

impl FromStr for RootData {
    type Err = Error;

    /// Parses names such as `sl3`, `sp4`, `so5`, `so8`.
    fn from_str(s: &str) -> Result<RootData> {
        let s = s.trim();
        let bad = || Error::UnsupportedAlgebra(s.to_string());
        if s.len() < 3 || !s.is_char_boundary(2) {
            return Err(bad());
        }
        let (head, tail) = s.split_at(2);
        let m: usize = tail.parse().map_err(|_| bad())?;
        let rd = match head {
            "sl" => RootData::build(Family::Sl, m),
            "sp" if m.is_multiple_of(2) => RootData::build(Family::Sp, m / 2),
            "so" if m % 2 == 1 => RootData::build(Family::SoOdd, (m - 1) / 2),
            "so" => RootData::build(Family::SoEven, m / 2),
            _ => Err(bad()),
        };
        rd.map_err(|_| bad())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlaurent::{quantum_integer, LaurentQ};

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn dual_killing_denominators() {
        let cases = [
            ("sl2", 2),
            ("sl3", 3),
            ("sl5", 5),
            ("sp2", 1),
            ("sp4", 1),
            ("so5", 1),
            ("so9", 1),
            ("so3", 2),
            ("so7", 2),
            ("so4", 2),
            ("so8", 2),
            ("so6", 4),
            ("so10", 4),
        ];
        for (name, d) in cases {
            let rd: RootData = name.parse().unwrap();
            assert_eq!(rd.d(), d, "{name}");
            assert_eq!(rd.name(), name);
        }
    }

    #[test]
    fn pairing_invariants() {
        for name in ["sl2", "sl3", "sl4", "sp4", "so5", "so6", "so7", "so8"] {
            let rd: RootData = name.parse().unwrap();
            let k = rd.num_coords();
            for i in 0..k {
                for j in 0..k {
                    let a = rd.basis_weight(i);
                    let b = rd.basis_weight(j);
                    let p = rd.pair(&a, &b).unwrap();
                    assert_eq!(p, rd.pair(&b, &a).unwrap());
                    assert_eq!((p * rd.d() as i64).denom(), &1, "{name}");
                    let expected = match rd.family() {
                        Family::Sl if i == j => r(k as i64 - 1, k as i64),
                        Family::Sl => r(-1, k as i64),
                        _ if i == j => r(1, 1),
                        _ => r(0, 1),
                    };
                    assert_eq!(p, expected);
                }
            }
            let zero = rd.zero_weight();
            assert_eq!(rd.pair(&zero, &rd.basis_weight(0)).unwrap(), r(0, 1));
        }
    }

    #[test]
    fn sl2_generator_has_square_one_half() {
        let rd: RootData = "sl2".parse().unwrap();
        let a = rd.basis_weight(0);
        assert_eq!(rd.pair(&a, &a).unwrap(), r(1, 2));
        assert_eq!(rd.rho().unwrap(), a);
    }

    #[test]
    fn rank_mismatch_is_reported() {
        let rd: RootData = "sl3".parse().unwrap();
        assert!(matches!(rd.weight(&[1, 0]), Err(Error::RankMismatch { .. })));
        let other: RootData = "sp4".parse().unwrap();
        assert!(rd.pair(&other.basis_weight(0), &rd.basis_weight(0)).is_err());
    }

    #[test]
    fn sl_weights_are_taken_mod_the_relation() {
        let rd: RootData = "sl3".parse().unwrap();
        assert_eq!(rd.weight(&[1, 1, 1]).unwrap(), rd.zero_weight());
        assert_eq!(rd.weight(&[2, 0, 1]).unwrap(), rd.weight(&[3, 1, 2]).unwrap());
        let a = rd.weight(&[0, -1, 0]).unwrap();
        assert_eq!(a.coords(), &[1, 0, 1]);
    }

    #[test]
    fn unsupported_algebras() {
        for s in ["sl1", "sp3", "so2", "g2", "e8", "", "slx"] {
            assert!(s.parse::<RootData>().is_err(), "{s}");
        }
        assert!(RootData::build(Family::SoEven, 1).is_err());
        assert!(RootData::build(Family::Sp, 1).is_ok());
    }

    #[test]
    fn weyl_group_orders() {
        let count = |s: &str| s.parse::<RootData>().unwrap().weyl_elements().unwrap().len();
        assert_eq!(count("sl3"), 6);
        assert_eq!(count("sp4"), 8);
        assert_eq!(count("so4"), 4);
        assert_eq!(count("so5"), 8);
        assert_eq!(count("so6"), 24);
        assert_eq!(count("so7"), 48);
        assert_eq!(count("sl4"), 24);
        let big: RootData = "sl12".parse().unwrap();
        assert!(matches!(big.weyl_elements(), Err(Error::WeylGroupTooLarge { .. })));
    }

    #[test]
    fn weyl_elements_are_distinct_and_closed() {
        for name in ["sl3", "sp4", "so4", "so6"] {
            let rd: RootData = name.parse().unwrap();
            let ws = rd.weyl_elements().unwrap();
            let set: std::collections::HashSet<_> = ws.iter().cloned().collect();
            assert_eq!(set.len(), ws.len());
            for a in &ws {
                assert!(set.contains(&a.inverse()));
                assert_eq!(a.compose(&a.inverse()), WeylElement::identity(rd.n()));
                for b in &ws {
                    let ab = a.compose(b);
                    assert!(set.contains(&ab), "{name}: not closed");
                    assert_eq!(ab.sgn(), a.sgn() * b.sgn());
                }
            }
            for g in rd.weyl_generators() {
                assert!(set.contains(&g));
                assert_eq!(g.sgn(), -1);
            }
        }
    }

    #[test]
    fn composition_matches_action() {
        let rd: RootData = "so7".parse().unwrap();
        let ws = rd.weyl_elements().unwrap();
        let lam = rd.weight(&[3, -1, 2]).unwrap();
        for a in ws.iter().step_by(5) {
            for b in ws.iter().step_by(7) {
                assert_eq!(rd.act(&a.compose(b), &lam), rd.act(a, &rd.act(b, &lam)));
            }
        }
    }

    #[test]
    fn action_examples() {
        let rd: RootData = "sl3".parse().unwrap();
        let e = WeylElement::identity(3);
        let a = rd.weight(&[2, 0, 1]).unwrap();
        assert_eq!(rd.act(&e, &a), a);
        assert_eq!(e.sgn(), 1);
        let t = WeylElement::new(vec![1, 0, 2], vec![1, 1, 1]).unwrap();
        assert_eq!(rd.act(&t, &a), rd.weight(&[0, 2, 1]).unwrap());
        assert_eq!(t.sgn(), -1);

        let sp2: RootData = "sp2".parse().unwrap();
        let flip = WeylElement::new(vec![0], vec![-1]).unwrap();
        assert_eq!(sp2.act(&flip, &sp2.weight(&[5]).unwrap()), sp2.weight(&[-5]).unwrap());
        assert_eq!(flip.sgn(), -1);
        assert_eq!(sp2.weyl_elements().unwrap().len(), 2);
    }

    #[test]
    fn pairing_is_weyl_invariant() {
        for name in ["sl3", "sl4", "sp4", "so5", "so6"] {
            let rd: RootData = name.parse().unwrap();
            let win = rd.window(2);
            for w in rd.weyl_elements().unwrap() {
                for a in win.iter().step_by(3) {
                    for b in win.iter().step_by(5) {
                        assert_eq!(
                            rd.pair(&rd.act(&w, a), &rd.act(&w, b)).unwrap(),
                            rd.pair(a, b).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn sl_rho_pairings() {
        for n in 2..=5usize {
            let rd = RootData::build(Family::Sl, n).unwrap();
            let mut sum = LaurentQ::zero();
            for i in 1..=n {
                let p = rd.pair_rho(&rd.basis_weight(i - 1));
                assert_eq!(p, r(n as i64 + 1 - 2 * i as i64, 2));
                sum += LaurentQ::q_pow(p);
            }
            assert_eq!(sum, quantum_integer(n as i64));
            // rho is integral after the shift by the relation
            let rho = rd.rho().unwrap();
            assert_eq!(rd.pair(&rho, &rd.basis_weight(0)).unwrap(), rd.pair_rho(&rd.basis_weight(0)));
        }
    }

    #[test]
    fn rho_of_orthogonal_and_symplectic() {
        let so5: RootData = "so5".parse().unwrap();
        assert!(so5.rho().is_none());
        assert_eq!(so5.pair_rho(&so5.basis_weight(0)), r(3, 2));
        let sp4: RootData = "sp4".parse().unwrap();
        assert_eq!(sp4.rho().unwrap().coords(), &[2, 1]);
        let so6: RootData = "so6".parse().unwrap();
        assert_eq!(so6.rho().unwrap().coords(), &[2, 1, 0]);
    }

    #[test]
    fn windows() {
        let sl3: RootData = "sl3".parse().unwrap();
        assert_eq!(sl3.window(2).len(), 25);
        let sp4: RootData = "sp4".parse().unwrap();
        assert_eq!(sp4.window(1).len(), 9);
        let sl2: RootData = "sl2".parse().unwrap();
        let idx: Vec<i64> = sl2.window(3).iter().map(|w| sl2.sl2_index(w).unwrap()).collect();
        assert_eq!(idx, vec![-3, -2, -1, 0, 1, 2, 3]);
    }
}
