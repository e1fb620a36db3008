//! Exact sparse arithmetic for anchored, height-truncated formal characters.
//!
//! A [`FormalCharacter`] is a finite map ν ↦ c of simple-root coordinate
//! vectors to nonzero integers, read as Σ c · e^{anchor − ν}. The whole
//! support lies in anchor − Q+, which makes truncation by height structural:
//! an element of order N has correct coefficients for every ν with
//! Σν_k ≤ N, and an `exact` element is a complete finite sum.
//!
//! Also here: the partition factors r_X, s_X, the Kostant series p, their
//! product p_X, the set Γ of sums of distinct odd positive roots with the
//! expansion coefficients K_Z, and the term-wise (linear or circle) action
//! of the Weyl group on exact elements.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde_json::{json, Value};

use crate::error::Error;
use crate::roots::{
    height, simple_coords_integral, weight_from_nu, Parity, Root, RootSystem, Weight,
};
use crate::weyl::WeylElement;
use crate::{Coeff, Rat};

/// Truncation bound of a formal character.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    /// Finite support, all terms present.
    Exact,
    /// Coefficients correct for all ν with height(ν) ≤ the bound.
    Height(u32),
}

impl Order {
    pub fn min(self, other: Order) -> Order {
        match (self, other) {
            (Order::Exact, o) | (o, Order::Exact) => o,
            (Order::Height(a), Order::Height(b)) => Order::Height(a.min(b)),
        }
    }

    pub fn admits(self, h: u32) -> bool {
        match self {
            Order::Exact => true,
            Order::Height(n) => h <= n,
        }
    }

    /// Order seen from an anchor raised by a shift of the given height.
    fn raised(self, by: u32) -> Order {
        match self {
            Order::Exact => Order::Exact,
            Order::Height(n) => Order::Height(n + by),
        }
    }

    pub fn to_json(self) -> Value {
        match self {
            Order::Exact => Value::String("exact".into()),
            Order::Height(n) => json!(n),
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Exact => write!(f, "exact"),
            Order::Height(n) => write!(f, "{n}"),
        }
    }
}

/// Simple-root coordinate key of a term.
pub type Nu = Vec<u32>;

/// Anchored, height-truncated sparse series with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalCharacter {
    anchor: Weight,
    terms: BTreeMap<Nu, Coeff>,
    order: Order,
}

/// One coefficient mismatch between two characters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub weight: Weight,
    pub lhs: Coeff,
    pub rhs: Coeff,
}

/// Outcome of comparing two characters on their shared window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowComparison {
    pub shared_order: Order,
    pub discrepancy: Option<Discrepancy>,
}

impl WindowComparison {
    pub fn agree(&self) -> bool {
        self.discrepancy.is_none()
    }
}

impl FormalCharacter {
    /// e^λ: single term, exact.
    pub fn exp(lam: &Weight) -> FormalCharacter {
        let nu = vec![0u32; lam.len().saturating_sub(1)];
        FormalCharacter {
            anchor: lam.clone(),
            terms: BTreeMap::from([(nu, 1)]),
            order: Order::Exact,
        }
    }

    /// The zero character (exact, empty support) anchored at 0.
    pub fn zero(dim: usize) -> FormalCharacter {
        FormalCharacter {
            anchor: Weight::zero(dim),
            terms: BTreeMap::new(),
            order: Order::Exact,
        }
    }

    /// The constant 1 truncated at the given height, used to seed products
    /// with infinite series.
    pub fn one_truncated(dim: usize, order: u32) -> FormalCharacter {
        let nu = vec![0u32; dim.saturating_sub(1)];
        FormalCharacter {
            anchor: Weight::zero(dim),
            terms: BTreeMap::from([(nu, 1)]),
            order: Order::Height(order),
        }
    }

    pub fn anchor(&self) -> &Weight {
        &self.anchor
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_exact(&self) -> bool {
        self.order == Order::Exact
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Nu, Coeff)> {
        self.terms.iter().map(|(nu, &c)| (nu, c))
    }

    /// Terms as explicit (weight, coefficient) pairs.
    pub fn weight_terms(&self) -> BTreeMap<Weight, Coeff> {
        self.terms
            .iter()
            .map(|(nu, &c)| (weight_from_nu(&self.anchor, nu), c))
            .collect()
    }

    /// Assemble an exact character from weight terms; the anchor becomes the
    /// least upper bound of the given weights in the simple-root cone.
    pub fn from_weight_terms<I>(dim: usize, terms: I) -> Result<FormalCharacter, Error>
    where
        I: IntoIterator<Item = (Weight, Coeff)>,
    {
        let terms: Vec<(Weight, Coeff)> = terms.into_iter().collect();
        let Some((first, _)) = terms.first() else {
            return Ok(FormalCharacter::zero(dim));
        };
        let mut anchor = first.clone();
        for (w, _) in &terms {
            let diff = anchor.sub(w);
            let coords = simple_coords_integral(&diff).ok_or(Error::NonLatticeShift)?;
            let lift: Vec<u32> = coords.iter().map(|&c| (-c).max(0) as u32).collect();
            if lift.iter().any(|&c| c > 0) {
                anchor = raise_anchor(&anchor, &lift);
            }
        }
        let mut map: BTreeMap<Nu, Coeff> = BTreeMap::new();
        for (w, c) in &terms {
            let diff = anchor.sub(w);
            let coords = simple_coords_integral(&diff).expect("anchor covers all terms");
            let nu: Vec<u32> = coords.iter().map(|&c| c as u32).collect();
            *map.entry(nu).or_insert(0) += c;
        }
        map.retain(|_, c| *c != 0);
        Ok(FormalCharacter {
            anchor,
            terms: map,
            order: Order::Exact,
        })
    }

    /// Stored coefficient at μ = anchor − ν. A weight outside the cone under
    /// the anchor is a true zero; a height beyond a finite order is an error.
    pub fn coefficient(&self, mu: &Weight) -> Result<Coeff, Error> {
        let diff = self.anchor.sub(mu);
        let Some(coords) = simple_coords_integral(&diff) else {
            return Ok(0);
        };
        if coords.iter().any(|&c| c < 0) {
            return Ok(0);
        }
        let nu: Vec<u32> = coords.iter().map(|&c| c as u32).collect();
        self.coefficient_at_nu(&nu)
    }

    /// Coefficient by simple-root coordinates relative to the anchor.
    pub fn coefficient_at_nu(&self, nu: &[u32]) -> Result<Coeff, Error> {
        let h = height(nu);
        match self.order {
            Order::Height(n) if h > n => Err(Error::WindowExceeded {
                height: h,
                order: n,
            }),
            _ => Ok(self.terms.get(nu).copied().unwrap_or(0)),
        }
    }

    pub fn scale(&self, k: Coeff) -> FormalCharacter {
        if k == 0 {
            return FormalCharacter {
                anchor: self.anchor.clone(),
                terms: BTreeMap::new(),
                order: self.order,
            };
        }
        FormalCharacter {
            anchor: self.anchor.clone(),
            terms: self
                .terms
                .iter()
                .map(|(nu, &c)| (nu.clone(), c * k))
                .collect(),
            order: self.order,
        }
    }

    /// Product: anchors add, orders take the minimum, terms convolve inside
    /// the window.
    pub fn mul(&self, rhs: &FormalCharacter) -> FormalCharacter {
        debug_assert_eq!(self.anchor.len(), rhs.anchor.len());
        let order = self.order.min(rhs.order);
        let anchor = self.anchor.add(&rhs.anchor);
        let mut terms: BTreeMap<Nu, Coeff> = BTreeMap::new();
        for (na, ca) in &self.terms {
            let ha = height(na);
            for (nb, cb) in &rhs.terms {
                let h = ha + height(nb);
                if !order.admits(h) {
                    continue;
                }
                let nu: Nu = na.iter().zip(nb).map(|(a, b)| a + b).collect();
                *terms.entry(nu).or_insert(0) += ca * cb;
            }
        }
        terms.retain(|_, c| *c != 0);
        FormalCharacter {
            anchor,
            terms,
            order,
        }
    }

    /// Sum. Anchors must differ by an integral combination of simple roots;
    /// the result is re-anchored to the componentwise least upper bound.
    /// When that bound exceeds both anchors (incomparable anchors), both
    /// operands must be exact.
    pub fn add(&self, rhs: &FormalCharacter) -> Result<FormalCharacter, Error> {
        debug_assert_eq!(self.anchor.len(), rhs.anchor.len());
        let diff = self.anchor.sub(&rhs.anchor);
        let coords = simple_coords_integral(&diff).ok_or(Error::NonLatticeShift)?;
        // lift for self where the difference is negative, for rhs where positive
        let lift_a: Vec<u32> = coords.iter().map(|&c| (-c).max(0) as u32).collect();
        let lift_b: Vec<u32> = coords.iter().map(|&c| c.max(0) as u32).collect();
        let mixed = lift_a.iter().any(|&c| c > 0) && lift_b.iter().any(|&c| c > 0);
        if mixed && !(self.is_exact() && rhs.is_exact()) {
            return Err(Error::IncomparableAnchors);
        }
        let anchor = raise_anchor(&self.anchor, &lift_a);
        debug_assert_eq!(anchor, raise_anchor(&rhs.anchor, &lift_b));
        let order = self
            .order
            .raised(height(&lift_a))
            .min(rhs.order.raised(height(&lift_b)));
        let mut terms: BTreeMap<Nu, Coeff> = BTreeMap::new();
        for (side, lift) in [(self, &lift_a), (rhs, &lift_b)] {
            for (nu, &c) in &side.terms {
                let shifted: Nu = nu.iter().zip(lift).map(|(a, b)| a + b).collect();
                if order.admits(height(&shifted)) {
                    *terms.entry(shifted).or_insert(0) += c;
                }
            }
        }
        terms.retain(|_, c| *c != 0);
        Ok(FormalCharacter {
            anchor,
            terms,
            order,
        })
    }

    pub fn sub(&self, rhs: &FormalCharacter) -> Result<FormalCharacter, Error> {
        self.add(&rhs.scale(-1))
    }

    /// Re-anchor to a target weight lying above the current anchor.
    pub fn re_anchored(&self, target: &Weight) -> Result<FormalCharacter, Error> {
        let diff = target.sub(&self.anchor);
        let coords = simple_coords_integral(&diff).ok_or(Error::NonLatticeShift)?;
        if coords.iter().any(|&c| c < 0) {
            return Err(Error::IncomparableAnchors);
        }
        let lift: Vec<u32> = coords.iter().map(|&c| c as u32).collect();
        let terms = self
            .terms
            .iter()
            .map(|(nu, &c)| (nu.iter().zip(&lift).map(|(a, b)| a + b).collect(), c))
            .collect();
        Ok(FormalCharacter {
            anchor: target.clone(),
            terms,
            order: self.order.raised(height(&lift)),
        })
    }

    /// Compare with another character on the window both know about. Returns
    /// the first mismatch in (height, lexicographic) order, if any.
    pub fn compare_on_window(&self, rhs: &FormalCharacter) -> Result<WindowComparison, Error> {
        let diff = self.anchor.sub(&rhs.anchor);
        let coords = simple_coords_integral(&diff).ok_or(Error::NonLatticeShift)?;
        let lift_a: Vec<u32> = coords.iter().map(|&c| (-c).max(0) as u32).collect();
        let cover = raise_anchor(&self.anchor, &lift_a);
        let a = self.re_anchored(&cover)?;
        let b = rhs.re_anchored(&cover)?;
        let shared = a.order.min(b.order);
        let mut keys: Vec<&Nu> = a.terms.keys().chain(b.terms.keys()).collect();
        keys.sort_by_key(|nu| (height(nu), (*nu).clone()));
        keys.dedup();
        for nu in keys {
            if !shared.admits(height(nu)) {
                continue;
            }
            let ca = a.terms.get(nu).copied().unwrap_or(0);
            let cb = b.terms.get(nu).copied().unwrap_or(0);
            if ca != cb {
                return Ok(WindowComparison {
                    shared_order: shared,
                    discrepancy: Some(Discrepancy {
                        weight: weight_from_nu(&cover, nu),
                        lhs: ca,
                        rhs: cb,
                    }),
                });
            }
        }
        Ok(WindowComparison {
            shared_order: shared,
            discrepancy: None,
        })
    }

    /// Exact characters compared as finite sums of weights.
    pub fn eq_exact(&self, rhs: &FormalCharacter) -> bool {
        self.is_exact() && rhs.is_exact() && self.weight_terms() == rhs.weight_terms()
    }

    /// Keys sorted by height, then lexicographically.
    fn sorted_keys(&self) -> Vec<&Nu> {
        let mut keys: Vec<&Nu> = self.terms.keys().collect();
        keys.sort_by_key(|nu| (height(nu), (*nu).clone()));
        keys
    }

    /// JSON form with terms sorted by height then lexicographic ν.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .sorted_keys()
            .into_iter()
            .map(|nu| json!({"nu": nu, "c": self.terms[nu]}))
            .collect();
        json!({
            "anchor": self.anchor.to_json(),
            "order": self.order.to_json(),
            "terms": terms,
        })
    }

    pub fn from_json(v: &Value) -> Result<FormalCharacter, Error> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse("character: expected object".into()))?;
        let anchor = Weight::from_json(
            obj.get("anchor")
                .ok_or_else(|| Error::Parse("character: missing anchor".into()))?,
        )?;
        let order = match obj.get("order") {
            Some(Value::String(s)) if s == "exact" => Order::Exact,
            Some(Value::Number(n)) => Order::Height(
                n.as_u64()
                    .ok_or_else(|| Error::Parse("character: bad order".into()))?
                    as u32,
            ),
            _ => return Err(Error::Parse("character: bad order".into())),
        };
        let mut terms = BTreeMap::new();
        let arr = obj
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("character: missing terms".into()))?;
        for item in arr {
            let nu: Vec<u32> = item
                .get("nu")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse("character: term missing nu".into()))?
                .iter()
                .map(|x| x.as_u64().map(|v| v as u32))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::Parse("character: bad nu entry".into()))?;
            if nu.len() + 1 != anchor.len() {
                return Err(Error::Parse("character: nu length mismatch".into()));
            }
            let c = item
                .get("c")
                .and_then(Value::as_i64)
                .ok_or_else(|| Error::Parse("character: bad coefficient".into()))?;
            if c != 0 && terms.insert(nu, c).is_some() {
                return Err(Error::Parse("character: duplicate nu".into()));
            }
        }
        Ok(FormalCharacter {
            anchor,
            terms,
            order,
        })
    }

    /// Text form: one `c*e^[...]` line per term, in JSON order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for nu in self.sorted_keys() {
            let w = weight_from_nu(&self.anchor, nu);
            out.push_str(&format!("{}*e^{}\n", self.terms[nu], w));
        }
        out
    }
}

fn raise_anchor(anchor: &Weight, lift: &[u32]) -> Weight {
    // adding lift_k α_k: the inverse of weight_from_nu's subtraction
    let mut coords: Vec<Rat> = anchor.coords().to_vec();
    for (k, &c) in lift.iter().enumerate() {
        let c = Rat::from_integer(c as i64);
        coords[k] += c;
        coords[k + 1] -= c;
    }
    Weight::new(coords)
}

/// 1 − e^{−α} for a positive root, or 1 + e^{−α} with `plus_sign`.
fn binomial_factor(rs: &RootSystem, alpha: &Root, plus_sign: bool) -> FormalCharacter {
    let mut terms = BTreeMap::new();
    terms.insert(vec![0u32; rs.num_simple()], 1);
    terms.insert(
        alpha.simple_support(rs.num_simple()),
        if plus_sign { 1 } else { -1 },
    );
    FormalCharacter {
        anchor: Weight::zero(rs.dim()),
        terms,
        order: Order::Exact,
    }
}

/// r_X = Π_{α ∈ X0} (1 − e^{−α}), a finite exact product.
pub fn r_factor(rs: &RootSystem, x0: &[Root]) -> Result<FormalCharacter, Error> {
    let mut acc = FormalCharacter::exp(&Weight::zero(rs.dim()));
    for alpha in x0 {
        if !rs.is_positive_root(alpha) || alpha.parity() != Parity::Even {
            return Err(Error::NotARoot { root: *alpha });
        }
        acc = acc.mul(&binomial_factor(rs, alpha, false));
    }
    Ok(acc)
}

/// s_X = Π_{α ∈ Δ1+ \ X1} (1 + e^{−α}): the product runs over the
/// complement of the given odd roots.
pub fn s_factor(rs: &RootSystem, x1: &[Root]) -> Result<FormalCharacter, Error> {
    for alpha in x1 {
        if !rs.is_positive_root(alpha) || alpha.parity() != Parity::Odd {
            return Err(Error::NotARoot { root: *alpha });
        }
    }
    let excluded: BTreeSet<Root> = x1.iter().copied().collect();
    let mut acc = FormalCharacter::exp(&Weight::zero(rs.dim()));
    for alpha in rs.odd_positive() {
        if !excluded.contains(alpha) {
            acc = acc.mul(&binomial_factor(rs, alpha, true));
        }
    }
    Ok(acc)
}

/// Kostant partition series p = Π_{α ∈ Δ0+} (1 − e^{−α})^{−1} up to height N:
/// the coefficient of e^{−ν} counts decompositions of ν into even positive
/// roots.
pub fn kostant_p(rs: &RootSystem, n: u32) -> FormalCharacter {
    let mut acc = FormalCharacter::one_truncated(rs.dim(), n);
    for alpha in rs.even_positive() {
        acc = acc.mul(&geometric_series(rs, alpha, n));
    }
    acc
}

fn geometric_series(rs: &RootSystem, alpha: &Root, n: u32) -> FormalCharacter {
    let step = alpha.simple_support(rs.num_simple());
    let h = height(&step).max(1);
    let mut terms = BTreeMap::new();
    let mut nu = vec![0u32; rs.num_simple()];
    let mut total = 0u32;
    while total <= n {
        terms.insert(nu.clone(), 1);
        for (v, s) in nu.iter_mut().zip(&step) {
            *v += s;
        }
        total += h;
    }
    FormalCharacter {
        anchor: Weight::zero(rs.dim()),
        terms,
        order: Order::Height(n),
    }
}

/// p_X = r_X · s_X · p for an arbitrary set of Levi roots, truncated at N.
pub fn p_series_for_roots(
    rs: &RootSystem,
    x0: &[Root],
    x1: &[Root],
    n: u32,
) -> Result<FormalCharacter, Error> {
    Ok(r_factor(rs, x0)?
        .mul(&s_factor(rs, x1)?)
        .mul(&kostant_p(rs, n)))
}

/// p_X for a standard parabolic.
pub fn p_series(
    rs: &RootSystem,
    p: &crate::roots::ParabolicData,
    n: u32,
) -> Result<FormalCharacter, Error> {
    p_series_for_roots(rs, p.x0(), p.x1(), n)
}

/// Γ: all sums of distinct odd positive roots, collisions merged.
pub fn gamma_set(rs: &RootSystem) -> BTreeSet<Weight> {
    rs.gamma_cache().clone()
}

/// Expansion coefficients K_Z(γ): Π_{α ∈ Δ1+ \ Z} (1 + e^{−α}) =
/// Σ_γ K_Z(γ) e^{−γ}. Keys are the γ themselves.
pub fn k_coeffs(rs: &RootSystem, z: &[Root]) -> BTreeMap<Weight, Coeff> {
    let excluded: BTreeSet<Root> = z.iter().copied().collect();
    let mut map = BTreeMap::from([(Weight::zero(rs.dim()), 1)]);
    for alpha in rs.odd_positive() {
        if excluded.contains(alpha) {
            continue;
        }
        let shift = alpha.to_weight(rs.dim());
        let mut next = map.clone();
        for (gamma, c) in &map {
            *next.entry(gamma.add(&shift)).or_insert(0) += c;
        }
        map = next;
    }
    map
}

/// How a Weyl element moves each term of an exact character.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Action {
    /// e^σ ↦ e^{wσ}.
    Linear,
    /// e^σ ↦ e^{w∘σ}.
    Circle,
}

/// Term-wise Weyl action on an exact character. The result is re-anchored to
/// the least upper bound of the image weights, which for a highest-weight
/// support is exactly the image of the anchor.
pub fn act_on_char(
    rs: &RootSystem,
    w: &WeylElement,
    chi: &FormalCharacter,
    action: Action,
) -> Result<FormalCharacter, Error> {
    if !chi.is_exact() {
        return Err(Error::NotExact);
    }
    let moved = chi.weight_terms().into_iter().map(|(sigma, c)| {
        let image = match action {
            Action::Linear => w.act(&sigma),
            Action::Circle => w.act_circle(rs, &sigma),
        };
        (image, c)
    });
    FormalCharacter::from_weight_terms(rs.dim(), moved)
}
