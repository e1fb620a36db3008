//! Characters of Verma modules and generalized Verma modules, plus the
//! brute-force PBW monomial count they are checked against.
//!
//! The induced module from a one-dimensional weight λ of a parabolic with
//! Levi roots X has character e^λ p_X; for a finite-dimensional module with
//! character ch L the character is ch L · p_X. The counting oracle
//! enumerates pairs (multiset of even roots outside X0, subset of odd roots
//! outside X1) directly, with no series arithmetic, so the two routes are
//! independent.

use crate::char_ring::{p_series, p_series_for_roots, FormalCharacter};
use crate::error::Error;
use crate::roots::{ParabolicData, Root, RootSystem, Weight};
use crate::Coeff;

/// ch M(λ) = e^λ p_∅ up to height N (the odd factor enters through p_∅).
pub fn verma_char(rs: &RootSystem, lam: &Weight, n: u32) -> FormalCharacter {
    FormalCharacter::exp(lam)
        .mul(&p_series_for_roots(rs, &[], &[], n).expect("empty root sets are valid"))
}

/// ch Ind L = ch L · p_X for an exact Levi-module character.
pub fn gvm_char(
    rs: &RootSystem,
    p: &ParabolicData,
    ch_l: &FormalCharacter,
    n: u32,
) -> Result<FormalCharacter, Error> {
    if !ch_l.is_exact() {
        return Err(Error::NotExact);
    }
    Ok(ch_l.mul(&p_series(rs, p, n)?))
}

/// ch Ind k_λ = e^λ p_X; λ must kill [l,l] ∩ h, and the offending root is
/// reported otherwise.
pub fn gvm_char_one_dim(
    rs: &RootSystem,
    p: &ParabolicData,
    lam: &Weight,
    n: u32,
) -> Result<FormalCharacter, Error> {
    if let Some((root, value)) = rs.one_dim_violation(p.x(), lam) {
        return Err(Error::NotOneDimensional { root, value });
    }
    Ok(FormalCharacter::exp(lam).mul(&p_series(rs, p, n)?))
}

/// Count multisets from `parts` (simple-root coordinate vectors) summing to
/// `target`, by direct recursion.
fn count_multisets(parts: &[Vec<u32>], target: &[i64]) -> Coeff {
    fn rec(parts: &[Vec<u32>], idx: usize, rest: &mut Vec<i64>) -> Coeff {
        if rest.iter().all(|&r| r == 0) {
            return 1;
        }
        if idx == parts.len() {
            return 0;
        }
        let mut total = rec(parts, idx + 1, rest);
        let part = &parts[idx];
        let mut taken = 0;
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

/// Number of PBW monomials of weight −ν over the radical complement of the
/// given Levi roots: pairs of an even multiset from Δ0+ \ X0 and an odd
/// subset of Δ1+ \ X1 summing to ν. Odd subsets are enumerated first.
pub fn pbw_monomial_count_for_roots(
    rs: &RootSystem,
    x0: &[Root],
    x1: &[Root],
    nu: &[u32],
) -> Coeff {
    let in_set = |set: &[Root], r: &Root| set.contains(r);
    let odd: Vec<Vec<u32>> = rs
        .odd_positive()
        .iter()
        .filter(|r| !in_set(x1, r))
        .map(|r| r.simple_support(rs.num_simple()))
        .collect();
    let even: Vec<Vec<u32>> = rs
        .even_positive()
        .iter()
        .filter(|r| !in_set(x0, r))
        .map(|r| r.simple_support(rs.num_simple()))
        .collect();

    fn odd_subsets(
        odd: &[Vec<u32>],
        idx: usize,
        rest: &mut Vec<i64>,
        even: &[Vec<u32>],
        total: &mut Coeff,
    ) {
        if idx == odd.len() {
            *total += count_multisets(even, rest);
            return;
        }
        odd_subsets(odd, idx + 1, rest, even, total);
        let part = &odd[idx];
        if rest.iter().zip(part).all(|(&r, &p)| r >= p as i64) {
            for (r, &p) in rest.iter_mut().zip(part) {
                *r -= p as i64;
            }
            odd_subsets(odd, idx + 1, rest, even, total);
            for (r, &p) in rest.iter_mut().zip(part) {
                *r += p as i64;
            }
        }
    }

    let mut rest: Vec<i64> = nu.iter().map(|&v| v as i64).collect();
    let mut total = 0;
    odd_subsets(&odd, 0, &mut rest, &even, &mut total);
    total
}

/// The counting oracle for a standard parabolic.
pub fn pbw_monomial_count(rs: &RootSystem, p: &ParabolicData, nu: &[u32]) -> Coeff {
    pbw_monomial_count_for_roots(rs, p.x0(), p.x1(), nu)
}
