//! Root datum of gl(m|n) with the distinguished Borel.
//!
//! Coordinates: a weight is a vector of m+n exact rationals, the first m in
//! the ε-basis and the last n in the δ-basis. Positive roots are exactly the
//! differences e_p − e_q of combined basis slots with p < q; such a root is
//! odd when the pair straddles the m|n boundary (ε_i − δ_j), even otherwise.
//! With the distinguished Borel every odd root ε_i − δ_j is positive and
//! isotropic.
//!
//! Simple roots in the distinguished order are the consecutive differences
//! ε_1−ε_2, …, ε_{m−1}−ε_m, ε_m−δ_1, δ_1−δ_2, …, δ_{n−1}−δ_n.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::Error;
use crate::Rat;

/// Parity of a root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// A positive root e_plus − e_minus, stored by its two 0-based slots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    plus: usize,
    minus: usize,
    parity: Parity,
}

impl Root {
    /// Positive root e_p − e_q for combined slots p < q of gl(m|n).
    pub fn from_slots(p: usize, q: usize, m: usize) -> Root {
        assert!(p < q, "positive root needs plus slot below minus slot");
        let parity = if p < m && q >= m {
            Parity::Odd
        } else {
            Parity::Even
        };
        Root {
            plus: p,
            minus: q,
            parity,
        }
    }

    pub fn plus(&self) -> usize {
        self.plus
    }

    pub fn minus(&self) -> usize {
        self.minus
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn is_odd(&self) -> bool {
        self.parity == Parity::Odd
    }

    /// Coordinate vector of the root in a system of the given dimension.
    pub fn to_weight(&self, dim: usize) -> Weight {
        let mut coords = vec![Rat::zero(); dim];
        coords[self.plus] = Rat::from_integer(1);
        coords[self.minus] = Rat::from_integer(-1);
        Weight::new(coords)
    }

    /// Simple-root coordinates: a run of ones on slots plus..minus-1.
    pub fn simple_support(&self, num_simple: usize) -> Vec<u32> {
        let mut nu = vec![0u32; num_simple];
        nu[self.plus..self.minus].fill(1);
        nu
    }

    pub fn to_json(&self) -> Value {
        json!({
            "plus": self.plus,
            "minus": self.minus,
            "parity": match self.parity { Parity::Even => "even", Parity::Odd => "odd" },
        })
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = match self.parity {
            Parity::Even => "even",
            Parity::Odd => "odd",
        };
        write!(f, "(+{},-{},{})", self.plus, self.minus, p)
    }
}

/// Element of h*: m+n exact rational coordinates in the (ε|δ) basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(Vec<Rat>);

impl Weight {
    pub fn new(coords: Vec<Rat>) -> Weight {
        Weight(coords)
    }

    pub fn zero(dim: usize) -> Weight {
        Weight(vec![Rat::zero(); dim])
    }

    pub fn from_ints(coords: &[i64]) -> Weight {
        Weight(coords.iter().map(|&c| Rat::from_integer(c)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    pub fn get(&self, i: usize) -> Rat {
        self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.len(), other.len());
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.len(), other.len());
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: Rat) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    /// Parse a comma-separated list of rationals, e.g. `1,1/2,-3`.
    pub fn parse(text: &str) -> Result<Weight, Error> {
        let mut coords = Vec::new();
        for part in text.split(',') {
            let part = part.trim();
            let r: Rat = part
                .parse()
                .map_err(|_| Error::Parse(format!("bad rational {part:?}")))?;
            coords.push(r);
        }
        if coords.is_empty() {
            return Err(Error::Parse("empty weight".into()));
        }
        Ok(Weight(coords))
    }

    /// JSON form: array of rational strings.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.0
                .iter()
                .map(|c| Value::String(c.to_string()))
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Weight, Error> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("weight: expected array".into()))?;
        let mut coords = Vec::with_capacity(arr.len());
        for item in arr {
            let s = item
                .as_str()
                .ok_or_else(|| Error::Parse("weight: expected string entries".into()))?;
            let r: Rat = s
                .parse()
                .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
            coords.push(r);
        }
        if coords.is_empty() {
            return Err(Error::Parse("weight: empty array".into()));
        }
        Ok(Weight(coords))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Coordinates of `diff` in the simple-root basis (consecutive differences).
///
/// The simple roots span the sum-zero hyperplane, and the coordinates are the
/// prefix sums of `diff`. Returns `None` when the total is nonzero.
pub fn simple_coords(diff: &Weight) -> Option<Vec<Rat>> {
    let dim = diff.len();
    let mut coords = Vec::with_capacity(dim.saturating_sub(1));
    let mut acc = Rat::zero();
    for k in 0..dim {
        acc += diff.get(k);
        if k + 1 < dim {
            coords.push(acc);
        }
    }
    if acc.is_zero() {
        Some(coords)
    } else {
        None
    }
}

/// Like [`simple_coords`] but demanding integer coordinates.
pub fn simple_coords_integral(diff: &Weight) -> Option<Vec<i64>> {
    let coords = simple_coords(diff)?;
    let mut out = Vec::with_capacity(coords.len());
    for c in coords {
        if !c.is_integer() {
            return None;
        }
        out.push(c.to_integer());
    }
    Some(out)
}

/// Nonnegative-integer simple coordinates, if any.
pub fn simple_coords_nonneg(diff: &Weight) -> Option<Vec<u32>> {
    let coords = simple_coords_integral(diff)?;
    let mut out = Vec::with_capacity(coords.len());
    for c in coords {
        if c < 0 {
            return None;
        }
        out.push(c as u32);
    }
    Some(out)
}

/// The weight anchor − Σ ν_k α_k for simple-root coordinates ν.
pub fn weight_from_nu(anchor: &Weight, nu: &[u32]) -> Weight {
    debug_assert_eq!(nu.len() + 1, anchor.len());
    let mut coords: Vec<Rat> = anchor.coords().to_vec();
    for (k, &c) in nu.iter().enumerate() {
        let c = Rat::from_integer(c as i64);
        coords[k] -= c;
        coords[k + 1] += c;
    }
    Weight::new(coords)
}

/// Height of a simple-coordinate vector.
pub fn height(nu: &[u32]) -> u32 {
    nu.iter().sum()
}

/// The full root datum of gl(m|n) with the distinguished Borel.
#[derive(Debug, Clone)]
pub struct RootSystem {
    m: usize,
    n: usize,
    even_positive: Vec<Root>,
    odd_positive: Vec<Root>,
    simple: Vec<Root>,
    rho0: Weight,
    rho1: Weight,
    rho: Weight,
    gamma: std::sync::OnceLock<BTreeSet<Weight>>,
}

impl RootSystem {
    /// Build gl(m|n). Rejects m = n = 0.
    pub fn gl(m: usize, n: usize) -> Result<RootSystem, Error> {
        let dim = m + n;
        if dim == 0 {
            return Err(Error::EmptyAlgebra);
        }
        let mut even_positive = Vec::new();
        let mut odd_positive = Vec::new();
        for p in 0..dim {
            for q in p + 1..dim {
                let root = Root::from_slots(p, q, m);
                match root.parity() {
                    Parity::Even => even_positive.push(root),
                    Parity::Odd => odd_positive.push(root),
                }
            }
        }
        let simple: Vec<Root> = (0..dim.saturating_sub(1))
            .map(|k| Root::from_slots(k, k + 1, m))
            .collect();
        let half = Rat::new(1, 2);
        let half_sum = |roots: &[Root]| -> Weight {
            let mut acc = Weight::zero(dim);
            for r in roots {
                acc = acc.add(&r.to_weight(dim));
            }
            acc.scale(half)
        };
        let rho0 = half_sum(&even_positive);
        let rho1 = half_sum(&odd_positive);
        let rho = rho0.sub(&rho1);
        Ok(RootSystem {
            m,
            n,
            even_positive,
            odd_positive,
            simple,
            rho0,
            rho1,
            rho,
            gamma: std::sync::OnceLock::new(),
        })
    }

    /// Cached Γ: all sums of distinct odd positive roots.
    pub(crate) fn gamma_cache(&self) -> &BTreeSet<Weight> {
        self.gamma.get_or_init(|| {
            let mut set = BTreeSet::from([Weight::zero(self.dim())]);
            for alpha in &self.odd_positive {
                let shift = alpha.to_weight(self.dim());
                let bumped: Vec<Weight> = set.iter().map(|g| g.add(&shift)).collect();
                set.extend(bumped);
            }
            set
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.m + self.n
    }

    pub fn num_simple(&self) -> usize {
        self.simple.len()
    }

    pub fn even_positive(&self) -> &[Root] {
        &self.even_positive
    }

    pub fn odd_positive(&self) -> &[Root] {
        &self.odd_positive
    }

    pub fn simple(&self) -> &[Root] {
        &self.simple
    }

    pub fn rho0(&self) -> &Weight {
        &self.rho0
    }

    pub fn rho1(&self) -> &Weight {
        &self.rho1
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// Is this the positive root of some slot pair of the system?
    pub fn is_positive_root(&self, root: &Root) -> bool {
        root.plus < root.minus
            && root.minus < self.dim()
            && *root == Root::from_slots(root.plus, root.minus, self.m)
    }

    /// 0-based indices of the even simple roots (the reflection generators).
    pub fn even_simple_indices(&self) -> Vec<usize> {
        (0..self.num_simple())
            .filter(|&k| self.simple[k].parity() == Parity::Even)
            .collect()
    }

    /// Human-readable name like `e1-e2` or `e2-d1` (1-based).
    pub fn root_label(&self, root: &Root) -> String {
        let name = |slot: usize| -> String {
            if slot < self.m {
                format!("e{}", slot + 1)
            } else {
                format!("d{}", slot - self.m + 1)
            }
        };
        format!("{}-{}", name(root.plus), name(root.minus))
    }

    /// λ(h_α): for ε_i−ε_j and δ_i−δ_j the coordinate difference, for the
    /// isotropic ε_i−δ_j the coordinate sum.
    pub fn cartan_eval(&self, lam: &Weight, alpha: &Root) -> Result<Rat, Error> {
        if !self.is_positive_root(alpha) {
            return Err(Error::NotARoot { root: *alpha });
        }
        if lam.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: lam.len(),
            });
        }
        let a = lam.get(alpha.plus);
        let b = lam.get(alpha.minus);
        Ok(match alpha.parity() {
            Parity::Even => a - b,
            Parity::Odd => a + b,
        })
    }

    /// Standard parabolic generated by the given simple-root indices (0-based).
    pub fn parabolic(&self, simples: &BTreeSet<usize>) -> Result<ParabolicData, Error> {
        for &s in simples {
            if s >= self.num_simple() {
                return Err(Error::BadSimpleIndex {
                    index: s,
                    count: self.num_simple(),
                });
            }
        }
        // A positive root e_p - e_q is α_p + ... + α_{q-1}; it lies in the
        // Levi iff its whole support is among the chosen simples.
        let mut x = Vec::new();
        for roots in [&self.even_positive, &self.odd_positive] {
            for r in roots.iter() {
                if (r.plus..r.minus).all(|k| simples.contains(&k)) {
                    x.push(*r);
                }
            }
        }
        x.sort();
        let x0: Vec<Root> = x.iter().copied().filter(|r| !r.is_odd()).collect();
        let x1: Vec<Root> = x.iter().copied().filter(|r| r.is_odd()).collect();
        Ok(ParabolicData {
            simple_indices: simples.clone(),
            x,
            x0,
            x1,
        })
    }

    /// Does λ kill [l,l] ∩ h for the Levi with positive roots `x`?
    pub fn one_dim_violation(&self, x: &[Root], lam: &Weight) -> Option<(Root, Rat)> {
        for alpha in x {
            let v = self
                .cartan_eval(lam, alpha)
                .expect("Levi roots are positive roots of the system");
            if !v.is_zero() {
                return Some((*alpha, v));
            }
        }
        None
    }

    /// True iff λ(h_α) = 0 for every α in the Levi of `p`.
    pub fn is_one_dimensional(&self, p: &ParabolicData, lam: &Weight) -> bool {
        self.one_dim_violation(p.x(), lam).is_none()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "m": self.m,
            "n": self.n,
            "simple": self.simple.iter().map(Root::to_json).collect::<Vec<_>>(),
            "even_positive": self.even_positive.iter().map(Root::to_json).collect::<Vec<_>>(),
            "odd_positive": self.odd_positive.iter().map(Root::to_json).collect::<Vec<_>>(),
            "rho0": self.rho0.to_json(),
            "rho1": self.rho1.to_json(),
            "rho": self.rho.to_json(),
        })
    }
}

/// Standard parabolic data: chosen simple roots and X = Δ+(l).
#[derive(Debug, Clone)]
pub struct ParabolicData {
    simple_indices: BTreeSet<usize>,
    x: Vec<Root>,
    x0: Vec<Root>,
    x1: Vec<Root>,
}

impl ParabolicData {
    pub fn simple_indices(&self) -> &BTreeSet<usize> {
        &self.simple_indices
    }

    /// All positive roots of the Levi.
    pub fn x(&self) -> &[Root] {
        &self.x
    }

    /// Even positive roots of the Levi.
    pub fn x0(&self) -> &[Root] {
        &self.x0
    }

    /// Odd positive roots of the Levi (the set Z).
    pub fn x1(&self) -> &[Root] {
        &self.x1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gl(m: usize, n: usize) -> RootSystem {
        RootSystem::gl(m, n).unwrap()
    }

    fn rat(p: i64, q: i64) -> Rat {
        Rat::new(p, q)
    }

    #[test]
    fn gl_0_0_rejected() {
        assert_eq!(RootSystem::gl(0, 0).unwrap_err(), Error::EmptyAlgebra);
    }

    #[test]
    fn rho_gl_2_0() {
        let rs = gl(2, 0);
        assert_eq!(rs.rho0(), &Weight::new(vec![rat(1, 2), rat(-1, 2)]));
        assert!(rs.odd_positive().is_empty());
    }

    #[test]
    fn rho_gl_1_1() {
        let rs = gl(1, 1);
        assert_eq!(rs.rho0(), &Weight::zero(2));
        assert_eq!(rs.rho1(), &Weight::new(vec![rat(1, 2), rat(-1, 2)]));
        assert_eq!(rs.rho(), &Weight::new(vec![rat(-1, 2), rat(1, 2)]));
    }

    #[test]
    fn root_counts_gl_3_2() {
        // enumerate pairs i<j within each block and all (i,j) across blocks
        let rs = gl(3, 2);
        assert_eq!(rs.even_positive().len(), 4);
        assert_eq!(rs.odd_positive().len(), 6);
        assert_eq!(rs.simple().len(), 4);
    }

    #[test]
    fn root_counts_match_formula() {
        for (m, n) in [(1, 0), (0, 2), (2, 2), (3, 2), (4, 1), (3, 3)] {
            let rs = gl(m, n);
            let pairs = |k: usize| k.saturating_sub(1) * k / 2;
            assert_eq!(rs.even_positive().len(), pairs(m) + pairs(n));
            assert_eq!(rs.odd_positive().len(), m * n);
            // 2ρ0 and 2ρ1 are integral, and ρ = ρ0 − ρ1 exactly.
            for c in rs.rho0().coords().iter().chain(rs.rho1().coords()) {
                assert!((c * rat(2, 1)).is_integer());
            }
            assert_eq!(&rs.rho0().sub(rs.rho1()), rs.rho());
        }
    }

    #[test]
    fn odd_roots_positive_in_epsilon_slot() {
        let rs = gl(3, 2);
        for r in rs.odd_positive() {
            assert!(r.plus() < rs.m() && r.minus() >= rs.m());
        }
    }

    #[test]
    fn positive_roots_decompose_uniquely_in_simples() {
        // exhaustive for m+n <= 6
        for m in 0..=6usize {
            for n in 0..=(6 - m) {
                if m + n == 0 {
                    continue;
                }
                let rs = gl(m, n);
                for r in rs.even_positive().iter().chain(rs.odd_positive()) {
                    let w = r.to_weight(rs.dim());
                    let nu = simple_coords_nonneg(&w).expect("positive root in the cone");
                    assert_eq!(nu, r.simple_support(rs.num_simple()));
                    assert_eq!(weight_from_nu(&Weight::zero(rs.dim()), &nu), w.neg());
                }
            }
        }
    }

    #[test]
    fn cartan_eval_examples() {
        let rs = gl(2, 1);
        let lam = Weight::new(vec![rat(5, 1), rat(2, 1), rat(-2, 1)]);
        let odd = Root::from_slots(1, 2, 2);
        assert_eq!(rs.cartan_eval(&lam, &odd).unwrap(), rat(0, 1));

        let rs = gl(2, 0);
        let lam = Weight::from_ints(&[1, 0]);
        let alpha = Root::from_slots(0, 1, 2);
        assert_eq!(rs.cartan_eval(&lam, &alpha).unwrap(), rat(1, 1));

        // direct evaluation of h_α = E_11 + E_22 on λ
        let rs = gl(1, 1);
        let lam = Weight::from_ints(&[1, 1]);
        let alpha = Root::from_slots(0, 1, 1);
        assert_eq!(rs.cartan_eval(&lam, &alpha).unwrap(), rat(2, 1));
    }

    #[test]
    fn cartan_eval_rejects_foreign_root() {
        let rs = gl(2, 0);
        let alien = Root::from_slots(0, 2, 2); // slot out of range
        assert!(matches!(
            rs.cartan_eval(&Weight::zero(2), &alien),
            Err(Error::NotARoot { .. })
        ));
    }

    #[test]
    fn parabolic_borel_and_full() {
        let rs = gl(3, 2);
        let p = rs.parabolic(&BTreeSet::new()).unwrap();
        assert!(p.x().is_empty());
        let all: BTreeSet<usize> = (0..rs.num_simple()).collect();
        let p = rs.parabolic(&all).unwrap();
        assert_eq!(
            p.x().len(),
            rs.even_positive().len() + rs.odd_positive().len()
        );
    }

    #[test]
    fn parabolic_single_isotropic_simple() {
        // span of one isotropic simple root contains no other positive root
        let rs = gl(2, 1);
        let p = rs.parabolic(&BTreeSet::from([1])).unwrap();
        assert_eq!(p.x(), &[Root::from_slots(1, 2, 2)]);
        assert!(p.x0().is_empty());
        assert_eq!(p.x1().len(), 1);
    }

    #[test]
    fn parabolic_single_even_simple() {
        let rs = gl(3, 0);
        let p = rs.parabolic(&BTreeSet::from([0])).unwrap();
        assert_eq!(p.x(), &[Root::from_slots(0, 1, 3)]);
    }

    #[test]
    fn parabolic_x_is_closed() {
        for (m, n) in [(2, 1), (2, 2), (3, 2)] {
            let rs = gl(m, n);
            for mask in 0..(1u32 << rs.num_simple()) {
                let s: BTreeSet<usize> = (0..rs.num_simple())
                    .filter(|k| mask >> k & 1 == 1)
                    .collect();
                let p = rs.parabolic(&s).unwrap();
                for a in p.x() {
                    for b in p.x() {
                        // a + b is a root iff the slot pairs chain up
                        if a.minus() == b.plus() {
                            let sum = Root::from_slots(a.plus(), b.minus(), m);
                            assert!(p.x().contains(&sum), "X not closed under addition");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn one_dimensional_weight_checks() {
        let rs = gl(2, 1);
        let p = rs.parabolic(&BTreeSet::from([1])).unwrap();
        let lam = Weight::from_ints(&[5, 2, -2]);
        assert!(rs.is_one_dimensional(&p, &lam));

        let rs3 = gl(3, 0);
        let p3 = rs3.parabolic(&BTreeSet::from([0])).unwrap();
        assert!(!rs3.is_one_dimensional(&p3, &Weight::from_ints(&[1, 0, 0])));

        // empty condition
        let borel = rs.parabolic(&BTreeSet::new()).unwrap();
        assert!(rs.is_one_dimensional(&borel, &Weight::from_ints(&[7, 3, 1])));
    }

    #[test]
    fn weight_parse_and_display() {
        let w = Weight::parse("1,1/2,-3").unwrap();
        assert_eq!(w.to_string(), "[1,1/2,-3]");
        assert!(Weight::parse("1,,2").is_err());
        assert!(Weight::parse("").is_err());
    }

    #[test]
    fn weight_json_round_trip() {
        let w = Weight::parse("0,-5/3,2").unwrap();
        let v = w.to_json();
        assert_eq!(v, json!(["0", "-5/3", "2"]));
        assert_eq!(Weight::from_json(&v).unwrap(), w);
    }

    #[test]
    fn root_json_shape() {
        let r = Root::from_slots(1, 2, 2);
        assert_eq!(r.to_json(), json!({"plus": 1, "minus": 2, "parity": "odd"}));
    }
}
