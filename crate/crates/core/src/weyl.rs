//! The Weyl group W = S_m × S_n of gl(m|n) and its translated actions.
//!
//! An element is a pair of permutations acting on the ε- and δ-slots; it is
//! stored in canonical form (images, 0-based), never as a word. Besides the
//! linear action there are three translated actions:
//!
//! - dot:    w · λ = w(λ + ρ) − ρ
//! - circle: w ∘ λ = w(λ + ρ0) − ρ0
//! - star:   w ∗ γ = ρ1 − w(ρ1 − γ), defined on sums of distinct odd
//!   positive roots.

use std::fmt;

use itertools::Itertools;
use serde_json::{json, Value};

use crate::error::Error;
use crate::roots::{Parity, Root, RootSystem, Weight};

/// A pair of permutations (σ on ε-slots, τ on δ-slots), stored as images.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylElement {
    sigma: Vec<usize>,
    tau: Vec<usize>,
}

fn inversions(perm: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                count += 1;
            }
        }
    }
    count
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> WeylElement {
        WeylElement {
            sigma: (0..rs.m()).collect(),
            tau: (0..rs.n()).collect(),
        }
    }

    /// The reflection for the even simple root with the given index.
    pub fn simple_reflection(rs: &RootSystem, index: usize) -> Result<WeylElement, Error> {
        if index >= rs.num_simple() {
            return Err(Error::BadSimpleIndex {
                index,
                count: rs.num_simple(),
            });
        }
        let root = rs.simple()[index];
        if root.parity() == Parity::Odd {
            return Err(Error::OddReflection { index });
        }
        let mut w = WeylElement::identity(rs);
        let (p, q) = (root.plus(), root.minus());
        if q < rs.m() {
            w.sigma.swap(p, q);
        } else {
            w.tau.swap(p - rs.m(), q - rs.m());
        }
        Ok(w)
    }

    /// Product of the reflections named by `word`, applied left to right:
    /// the first index acts first.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<WeylElement, Error> {
        let mut acc = WeylElement::identity(rs);
        for &index in word {
            let s = WeylElement::simple_reflection(rs, index)?;
            acc = s.compose(&acc);
        }
        Ok(acc)
    }

    /// Parse whitespace-separated tokens `s1 t2 ...` (1-based generators:
    /// s_i swaps ε_i, ε_{i+1} and t_j swaps δ_j, δ_{j+1}).
    pub fn parse_word(rs: &RootSystem, text: &str) -> Result<WeylElement, Error> {
        let mut word = Vec::new();
        for token in text.split_whitespace() {
            let (kind, num) = token.split_at(1);
            let i: usize = num.parse().map_err(|_| Error::BadWordToken {
                token: token.to_string(),
            })?;
            if i == 0 {
                return Err(Error::BadWordToken {
                    token: token.to_string(),
                });
            }
            let index = match kind {
                "s" if i < rs.m() => i - 1,
                "t" if i < rs.n() => rs.m() + i - 1,
                _ => {
                    return Err(Error::BadWordToken {
                        token: token.to_string(),
                    })
                }
            };
            word.push(index);
        }
        WeylElement::from_word(rs, &word)
    }

    /// Group product: `self.compose(other)` applies `other` first.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        debug_assert_eq!(self.sigma.len(), other.sigma.len());
        debug_assert_eq!(self.tau.len(), other.tau.len());
        WeylElement {
            sigma: other.sigma.iter().map(|&i| self.sigma[i]).collect(),
            tau: other.tau.iter().map(|&i| self.tau[i]).collect(),
        }
    }

    pub fn inverse(&self) -> WeylElement {
        let mut sigma = vec![0; self.sigma.len()];
        let mut tau = vec![0; self.tau.len()];
        for (i, &img) in self.sigma.iter().enumerate() {
            sigma[img] = i;
        }
        for (i, &img) in self.tau.iter().enumerate() {
            tau[img] = i;
        }
        WeylElement { sigma, tau }
    }

    pub fn is_identity(&self) -> bool {
        self.sigma.iter().enumerate().all(|(i, &v)| i == v)
            && self.tau.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// ℓ(w) = inversions(σ) + inversions(τ) = |N(w)|.
    pub fn length(&self) -> usize {
        inversions(&self.sigma) + inversions(&self.tau)
    }

    /// (−1)^{ℓ(w)}.
    pub fn sign(&self) -> i64 {
        if self.length().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    fn image_slot(&self, slot: usize) -> usize {
        let m = self.sigma.len();
        if slot < m {
            self.sigma[slot]
        } else {
            m + self.tau[slot - m]
        }
    }

    /// Linear action: permutes ε-coordinates by σ and δ-coordinates by τ.
    pub fn act(&self, lam: &Weight) -> Weight {
        let dim = self.sigma.len() + self.tau.len();
        assert_eq!(
            lam.len(),
            dim,
            "dimension_mismatch: expected {dim} coordinates, got {}",
            lam.len()
        );
        let mut coords = vec![crate::Rat::from_integer(0); dim];
        for i in 0..dim {
            coords[self.image_slot(i)] = lam.get(i);
        }
        Weight::new(coords)
    }

    /// Dot action w · λ = w(λ + ρ) − ρ.
    pub fn act_dot(&self, rs: &RootSystem, lam: &Weight) -> Weight {
        self.act(&lam.add(rs.rho())).sub(rs.rho())
    }

    /// Circle action w ∘ λ = w(λ + ρ0) − ρ0.
    pub fn act_circle(&self, rs: &RootSystem, lam: &Weight) -> Weight {
        self.act(&lam.add(rs.rho0())).sub(rs.rho0())
    }

    /// Star action w ∗ γ = ρ1 − w(ρ1 − γ) on sums of distinct odd positive
    /// roots; rejects γ outside that set.
    pub fn act_star(&self, rs: &RootSystem, gamma: &Weight) -> Result<Weight, Error> {
        if !rs.gamma_cache().contains(gamma) {
            return Err(Error::NotInGamma {
                weight: gamma.clone(),
            });
        }
        Ok(rs.rho1().sub(&self.act(&rs.rho1().sub(gamma))))
    }

    /// Image of a positive root; the flag is true when the image is negative
    /// (returned as the opposite positive root).
    pub fn act_root(&self, rs: &RootSystem, root: &Root) -> (Root, bool) {
        let p = self.image_slot(root.plus());
        let q = self.image_slot(root.minus());
        if p < q {
            (Root::from_slots(p, q, rs.m()), false)
        } else {
            (Root::from_slots(q, p, rs.m()), true)
        }
    }

    /// N(w) = {α ∈ Δ0+ | wα < 0}, in the even-positive-root order.
    pub fn inversion_set(&self, rs: &RootSystem) -> Vec<Root> {
        rs.even_positive()
            .iter()
            .copied()
            .filter(|alpha| self.act_root(rs, alpha).1)
            .collect()
    }

    /// All |W| = m!·n! elements, in a deterministic order.
    pub fn all(rs: &RootSystem) -> Vec<WeylElement> {
        let sigmas: Vec<Vec<usize>> = (0..rs.m()).permutations(rs.m()).collect();
        let taus: Vec<Vec<usize>> = (0..rs.n()).permutations(rs.n()).collect();
        let mut out = Vec::with_capacity(sigmas.len().max(1) * taus.len().max(1));
        // permutations(0) of an empty range yields a single empty arrangement
        let sigmas = if sigmas.is_empty() {
            vec![vec![]]
        } else {
            sigmas
        };
        let taus = if taus.is_empty() { vec![vec![]] } else { taus };
        for s in &sigmas {
            for t in &taus {
                out.push(WeylElement {
                    sigma: s.clone(),
                    tau: t.clone(),
                });
            }
        }
        out
    }

    /// JSON form: 1-based image arrays.
    pub fn to_json(&self) -> Value {
        json!({
            "sigma": self.sigma.iter().map(|&i| i + 1).collect::<Vec<_>>(),
            "tau": self.tau.iter().map(|&i| i + 1).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_perm = |perm: &[usize]| -> String {
            perm.iter()
                .map(|&i| (i + 1).to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "sigma=[{}] tau=[{}]",
            fmt_perm(&self.sigma),
            fmt_perm(&self.tau)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::char_ring::gamma_set;
    use crate::roots::{simple_coords_nonneg, Weight};
    use crate::Rat;

    fn gl(m: usize, n: usize) -> RootSystem {
        RootSystem::gl(m, n).unwrap()
    }

    #[test]
    fn empty_word_is_identity() {
        let rs = gl(3, 2);
        assert!(WeylElement::from_word(&rs, &[]).unwrap().is_identity());
    }

    #[test]
    fn single_reflection_gl_3_2() {
        let rs = gl(3, 2);
        let w = WeylElement::from_word(&rs, &[0]).unwrap();
        assert_eq!(w.sigma, vec![1, 0, 2]);
        assert_eq!(w.tau, vec![0, 1]);
    }

    #[test]
    fn word_s1_t1_s1_gl_2_2() {
        // compose the three transpositions explicitly: σ cancels, τ swaps
        let rs = gl(2, 2);
        let w = WeylElement::parse_word(&rs, "s1 t1 s1").unwrap();
        assert_eq!(w.sigma, vec![0, 1]);
        assert_eq!(w.tau, vec![1, 0]);
    }

    #[test]
    fn odd_simple_rejected() {
        let rs = gl(2, 1);
        assert_eq!(
            WeylElement::from_word(&rs, &[1]).unwrap_err(),
            Error::OddReflection { index: 1 }
        );
        assert!(WeylElement::parse_word(&rs, "s2").is_err());
        assert!(WeylElement::parse_word(&rs, "t1").is_err());
        assert!(WeylElement::parse_word(&rs, "x1").is_err());
    }

    #[test]
    fn linear_action_examples() {
        let rs = gl(2, 0);
        let s = WeylElement::from_word(&rs, &[0]).unwrap();
        let lam = Weight::parse("3,7").unwrap();
        assert_eq!(s.act(&lam), Weight::parse("7,3").unwrap());

        // ρ1 of gl(2,1) is S2-symmetric in ε
        let rs = gl(2, 1);
        let s = WeylElement::from_word(&rs, &[0]).unwrap();
        assert_eq!(&s.act(rs.rho1()), rs.rho1());
    }

    #[test]
    fn dot_action_gl_2_0_at_zero() {
        // s(ρ) = −ρ forces s·0 = −α
        let rs = gl(2, 0);
        let s = WeylElement::from_word(&rs, &[0]).unwrap();
        let zero = Weight::zero(2);
        assert_eq!(s.act_dot(&rs, &zero), Weight::from_ints(&[-1, 1]));
        // with no odd roots the dot and circle actions coincide
        for w in WeylElement::all(&rs) {
            for lam in [
                Weight::parse("2,5").unwrap(),
                Weight::parse("1/2,-3").unwrap(),
            ] {
                assert_eq!(w.act_dot(&rs, &lam), w.act_circle(&rs, &lam));
            }
        }
    }

    #[test]
    fn circle_action_gl_2_1_at_zero() {
        // coordinate evaluation with ρ0 = (1/2, −1/2, 0)
        let rs = gl(2, 1);
        let s = WeylElement::from_word(&rs, &[0]).unwrap();
        assert_eq!(
            s.act_circle(&rs, &Weight::zero(3)),
            Weight::from_ints(&[-1, 1, 0])
        );
    }

    #[test]
    fn star_action_examples() {
        let rs = gl(2, 1);
        let s = WeylElement::from_word(&rs, &[0]).unwrap();
        let id = WeylElement::identity(&rs);
        let gamma = Weight::from_ints(&[1, 0, -1]); // ε1 − δ1
        assert_eq!(id.act_star(&rs, &gamma).unwrap(), gamma);
        // s fixes ρ1, so s∗γ = sγ = ε2 − δ1
        assert_eq!(
            s.act_star(&rs, &gamma).unwrap(),
            Weight::from_ints(&[0, 1, -1])
        );
        // w∗0 = ρ1 − w(ρ1) = 0 here
        assert_eq!(s.act_star(&rs, &Weight::zero(3)).unwrap(), Weight::zero(3));
        // not a sum of distinct odd positive roots
        assert!(matches!(
            s.act_star(&rs, &Weight::from_ints(&[2, 0, -2])),
            Err(Error::NotInGamma { .. })
        ));
    }

    #[test]
    fn inversion_sets() {
        let rs = gl(3, 0);
        assert!(WeylElement::identity(&rs).inversion_set(&rs).is_empty());
        let s1 = WeylElement::from_word(&rs, &[0]).unwrap();
        assert_eq!(s1.inversion_set(&rs), vec![Root::from_slots(0, 1, 3)]);
        // the longest element sends all three even positive roots negative
        let w0 = WeylElement::from_word(&rs, &[0, 1, 0]).unwrap();
        assert_eq!(w0.inversion_set(&rs).len(), 3);
        assert_eq!(w0.length(), 3);
    }

    #[test]
    fn length_matches_inversion_count() {
        for (m, n) in [(2, 1), (3, 0), (2, 2), (3, 2)] {
            let rs = gl(m, n);
            for w in WeylElement::all(&rs) {
                assert_eq!(w.length(), w.inversion_set(&rs).len());
            }
        }
    }

    #[test]
    fn inversion_set_determines_element() {
        let rs = gl(2, 2);
        let all = WeylElement::all(&rs);
        for a in &all {
            for b in &all {
                if a != b {
                    assert_ne!(a.inversion_set(&rs), b.inversion_set(&rs));
                }
            }
        }
    }

    #[test]
    fn group_action_laws_exhaustive() {
        // w1·(w2·λ) = (w1 w2)·λ and the same for the other actions, m, n ≤ 3
        let samples = |dim: usize| -> Vec<Weight> {
            vec![
                Weight::new((0..dim).map(|i| Rat::new(i as i64 + 1, 2)).collect()),
                Weight::new((0..dim).map(|i| Rat::new(-(i as i64), 3)).collect()),
            ]
        };
        for (m, n) in [(2, 1), (3, 1), (2, 2), (3, 3), (3, 0), (0, 3)] {
            let rs = gl(m, n);
            // a slice of Γ keeps the quadratic W × W loop at desk scale
            let gammas: Vec<Weight> = gamma_set(&rs).into_iter().take(6).collect();
            for w1 in WeylElement::all(&rs) {
                for w2 in WeylElement::all(&rs) {
                    let prod = w1.compose(&w2);
                    for lam in samples(rs.dim()) {
                        assert_eq!(w1.act(&w2.act(&lam)), prod.act(&lam));
                        assert_eq!(
                            w1.act_dot(&rs, &w2.act_dot(&rs, &lam)),
                            prod.act_dot(&rs, &lam)
                        );
                        assert_eq!(
                            w1.act_circle(&rs, &w2.act_circle(&rs, &lam)),
                            prod.act_circle(&rs, &lam)
                        );
                    }
                    for gamma in &gammas {
                        let inner = w2.act_star(&rs, gamma).unwrap();
                        assert_eq!(
                            w1.act_star(&rs, &inner).unwrap(),
                            prod.act_star(&rs, gamma).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn odd_positive_roots_are_permuted() {
        // wΔ1+ = Δ1+ and w∗Γ = Γ, exhaustive at m·n ≤ 6
        for (m, n) in [(1, 1), (2, 1), (2, 2), (3, 2), (2, 3)] {
            let rs = gl(m, n);
            let gammas = gamma_set(&rs);
            for w in WeylElement::all(&rs) {
                for alpha in rs.odd_positive() {
                    let (image, negated) = w.act_root(&rs, alpha);
                    assert!(!negated);
                    assert!(image.is_odd());
                }
                for gamma in &gammas {
                    assert!(gammas.contains(&w.act_star(&rs, gamma).unwrap()));
                }
            }
        }
    }

    #[test]
    fn translated_actions_shift_identity() {
        // w∘(λ − γ) = w·λ − w∗γ over all of W and Γ, sampled λ
        for (m, n) in [(2, 1), (2, 2), (3, 2)] {
            let rs = gl(m, n);
            let lams = [
                Weight::zero(rs.dim()),
                Weight::new(
                    (0..rs.dim())
                        .map(|i| Rat::new(2 * i as i64 - 1, 2))
                        .collect(),
                ),
            ];
            for w in WeylElement::all(&rs) {
                for gamma in gamma_set(&rs) {
                    for lam in &lams {
                        let lhs = w.act_circle(&rs, &lam.sub(&gamma));
                        let rhs = w.act_dot(&rs, lam).sub(&w.act_star(&rs, &gamma).unwrap());
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn image_roots_stay_in_simple_cone() {
        let rs = gl(3, 2);
        for w in WeylElement::all(&rs) {
            for alpha in rs.even_positive().iter().chain(rs.odd_positive()) {
                let (image, negated) = w.act_root(&rs, alpha);
                let v = image.to_weight(rs.dim());
                assert!(simple_coords_nonneg(&v).is_some());
                let direct = w.act(&alpha.to_weight(rs.dim()));
                assert_eq!(direct, if negated { v.neg() } else { v });
            }
        }
    }

    #[test]
    fn json_uses_one_based_images() {
        let rs = gl(2, 2);
        let w = WeylElement::parse_word(&rs, "s1").unwrap();
        assert_eq!(
            w.to_json(),
            serde_json::json!({"sigma": [2, 1], "tau": [1, 2]})
        );
    }
}
