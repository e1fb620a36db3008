//! Finite-dimensional simple characters of the even Levi factor and the
//! decomposition of s_X · ch E into them.
//!
//! The even part of a standard Levi is a product of gl-blocks, one per
//! maximal run of slots joined by even simple roots of the Levi. The
//! character of its simple module with highest weight λ is computed by the
//! Kostant multiplicity formula over the Levi Weyl group, with the Levi
//! partition count evaluated by direct enumeration.

use std::collections::BTreeSet;

use serde_json::{json, Value};

use crate::char_ring::{s_factor, FormalCharacter};
use crate::error::Error;
use crate::roots::{
    height, simple_coords_integral, weight_from_nu, ParabolicData, Root, RootSystem, Weight,
};
use crate::weyl::WeylElement;
use crate::Coeff;

/// Multiset of highest weights appearing in a Levi decomposition, in
/// extraction order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviDecomposition {
    summands: Vec<(Weight, Coeff)>,
}

impl LeviDecomposition {
    pub fn summands(&self) -> &[(Weight, Coeff)] {
        &self.summands
    }

    /// Σ mult · ch of the recorded highest weights.
    pub fn reconstruct(
        &self,
        rs: &RootSystem,
        p: &ParabolicData,
    ) -> Result<FormalCharacter, Error> {
        // seed from the first summand: the anchor may sit off the root
        // lattice, where a zero character anchored at the origin cannot reach
        let mut acc: Option<FormalCharacter> = None;
        for (mu, mult) in &self.summands {
            let ch = levi_simple_char(rs, p, mu)?.scale(*mult);
            acc = Some(match acc {
                None => ch,
                Some(sum) => sum.add(&ch)?,
            });
        }
        Ok(acc.unwrap_or_else(|| FormalCharacter::zero(rs.dim())))
    }

    pub fn to_json(&self) -> Value {
        let arr: Vec<Value> = self
            .summands
            .iter()
            .map(|(w, c)| json!({"weight": w.to_json(), "mult": c}))
            .collect();
        json!({ "summands": arr })
    }
}

/// Even simple roots of the Levi: the adjacent-slot roots among X0.
pub fn levi_even_simples(x0: &[Root]) -> Vec<Root> {
    x0.iter()
        .copied()
        .filter(|r| r.minus() == r.plus() + 1)
        .collect()
}

/// The Weyl group of the even Levi, generated by the reflections of its
/// simple roots; enumerated by closure.
pub fn levi_weyl_group(rs: &RootSystem, x0: &[Root]) -> Vec<WeylElement> {
    let generators: Vec<WeylElement> = levi_even_simples(x0)
        .iter()
        .map(|r| WeylElement::simple_reflection(rs, r.plus()).expect("even simple root"))
        .collect();
    let mut seen: BTreeSet<WeylElement> = BTreeSet::from([WeylElement::identity(rs)]);
    let mut frontier: Vec<WeylElement> = seen.iter().cloned().collect();
    while let Some(w) = frontier.pop() {
        for g in &generators {
            let next = g.compose(&w);
            if seen.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    seen.into_iter().collect()
}

/// Longest element of the Levi Weyl group: reverses every block of slots
/// joined by Levi simple roots.
fn levi_longest(rs: &RootSystem, x0: &[Root]) -> WeylElement {
    let joined: BTreeSet<usize> = levi_even_simples(x0).iter().map(|r| r.plus()).collect();
    let mut w = WeylElement::identity(rs);
    let mut start = 0;
    for slot in 0..rs.dim() {
        let connected = slot + 1 < rs.dim() && joined.contains(&slot);
        if !connected {
            w = reverse_run(rs, start, slot).compose(&w);
            start = slot + 1;
        }
    }
    w
}

fn reverse_run(rs: &RootSystem, from: usize, to: usize) -> WeylElement {
    // product of the transpositions reversing slots from..=to
    let mut word = Vec::new();
    for width in (from..to).rev() {
        for k in from..=width {
            word.push(k);
        }
    }
    WeylElement::from_word(rs, &word).expect("adjacent even transpositions")
}

/// Half-sum of X0.
fn levi_rho(rs: &RootSystem, x0: &[Root]) -> Weight {
    let mut acc = Weight::zero(rs.dim());
    for r in x0 {
        acc = acc.add(&r.to_weight(rs.dim()));
    }
    acc.scale(crate::Rat::new(1, 2))
}

/// Number of ways to write β as a sum of roots from X0.
pub fn levi_partition_count(rs: &RootSystem, x0: &[Root], beta: &Weight) -> Coeff {
    let Some(coords) = simple_coords_integral(beta) else {
        return 0;
    };
    if coords.iter().any(|&c| c < 0) {
        return 0;
    }
    let parts: Vec<Vec<u32>> = x0
        .iter()
        .map(|r| r.simple_support(rs.num_simple()))
        .collect();
    count_multisets_i64(&parts, &coords)
}

fn count_multisets_i64(parts: &[Vec<u32>], target: &[i64]) -> Coeff {
    fn rec(parts: &[Vec<u32>], idx: usize, rest: &mut Vec<i64>) -> Coeff {
        if rest.iter().all(|&r| r == 0) {
            return 1;
        }
        if idx == parts.len() {
            return 0;
        }
        let mut total = rec(parts, idx + 1, rest);
        let part = &parts[idx];
        let mut taken = 0i64;
        loop {
            let mut fits = true;
            for (r, &p) in rest.iter_mut().zip(part) {
                *r -= p as i64;
                if *r < 0 {
                    fits = false;
                }
            }
            taken += 1;
            if !fits {
                break;
            }
            total += rec(parts, idx + 1, rest);
        }
        for (r, &p) in rest.iter_mut().zip(part) {
            *r += taken * p as i64;
        }
        total
    }
    let mut rest = target.to_vec();
    rec(parts, 0, &mut rest)
}

/// Exact character of the finite-dimensional simple module of the even Levi
/// with highest weight λ. Requires ⟨λ, α∨⟩ a nonnegative integer on every
/// Levi simple root; the multiplicity of μ is
/// Σ_{u} (−1)^{ℓ(u)} P_l(u(λ+ρ_l) − (μ+ρ_l)) over the Levi Weyl group.
pub fn levi_simple_char(
    rs: &RootSystem,
    p: &ParabolicData,
    lam: &Weight,
) -> Result<FormalCharacter, Error> {
    levi_simple_char_for_roots(rs, p.x0(), lam)
}

pub fn levi_simple_char_for_roots(
    rs: &RootSystem,
    x0: &[Root],
    lam: &Weight,
) -> Result<FormalCharacter, Error> {
    if lam.len() != rs.dim() {
        return Err(Error::DimensionMismatch {
            expected: rs.dim(),
            got: lam.len(),
        });
    }
    let simples = levi_even_simples(x0);
    for alpha in &simples {
        let v = rs.cartan_eval(lam, alpha)?;
        if !v.is_integer() || v < crate::Rat::from_integer(0) {
            return Err(Error::NotDominant {
                root: *alpha,
                value: v,
            });
        }
    }
    let group = levi_weyl_group(rs, x0);
    let rho_l = levi_rho(rs, x0);
    let lam_shifted = lam.add(&rho_l);
    let shifted_orbit: Vec<(i64, Weight)> = group
        .iter()
        .map(|u| (u.sign(), u.act(&lam_shifted)))
        .collect();

    // support box: the weights lie between λ and its image under the longest
    // element, in the cone on the Levi simple directions
    let lowest = levi_longest(rs, x0).act(lam);
    let bound = simple_coords_integral(&lam.sub(&lowest))
        .expect("dominant integral weights differ from their reversal by a root sum");
    let positions: Vec<usize> = simples.iter().map(|r| r.plus()).collect();
    debug_assert!(bound
        .iter()
        .enumerate()
        .all(|(k, &b)| b >= 0 && (b == 0 || positions.contains(&k))));

    let mut terms: Vec<(Weight, Coeff)> = Vec::new();
    let mut candidate = vec![0u32; rs.num_simple()];
    loop {
        let mu = weight_from_nu(lam, &candidate);
        let mu_shifted = mu.add(&rho_l);
        let mut mult = 0;
        for (sign, top) in &shifted_orbit {
            mult += sign * levi_partition_count(rs, x0, &top.sub(&mu_shifted));
        }
        if mult != 0 {
            debug_assert!(mult > 0, "Kostant multiplicity went negative at {mu}");
            terms.push((mu, mult));
        }
        // odometer over the box restricted to Levi simple positions
        let mut advanced = false;
        for &k in &positions {
            if (candidate[k] as i64) < bound[k] {
                candidate[k] += 1;
                advanced = true;
                break;
            }
            candidate[k] = 0;
        }
        if !advanced {
            break;
        }
    }
    FormalCharacter::from_weight_terms(rs.dim(), terms)
}

/// Decompose s_X · ch E into characters of even-Levi simples by repeatedly
/// stripping a maximal remaining weight (minimal height, then smallest ν).
pub fn levi_decompose(
    rs: &RootSystem,
    p: &ParabolicData,
    ch_e: &FormalCharacter,
) -> Result<LeviDecomposition, Error> {
    if !ch_e.is_exact() {
        return Err(Error::NotExact);
    }
    let mut rest = s_factor(rs, p.x1())?.mul(ch_e);
    let mut summands = Vec::new();
    let cap = 100_000;
    for _ in 0..cap {
        let Some((nu, mult)) = rest
            .terms()
            .map(|(nu, c)| (nu.clone(), c))
            .min_by_key(|(nu, _)| (height(nu), nu.clone()))
        else {
            return Ok(LeviDecomposition { summands });
        };
        let mu = weight_from_nu(rest.anchor(), &nu);
        if mult < 0 {
            return Err(Error::NegativeDecomposition {
                weight: mu,
                coefficient: mult,
            });
        }
        let ch = levi_simple_char(rs, p, &mu)?;
        rest = rest.sub(&ch.scale(mult))?;
        summands.push((mu, mult));
    }
    Err(Error::DecompositionDiverged)
}
