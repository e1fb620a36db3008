//! Exhaustive desk-scale sweeps: enumerate standard parabolics, sample
//! admissible or Levi-dominant weights deterministically, and drive the
//! twist identities and verifiers over whole Weyl groups.

use std::collections::BTreeSet;

use crate::char_ring::{gamma_set, p_series_for_roots, r_factor, s_factor, FormalCharacter};
use crate::error::Error;
use crate::levi::levi_simple_char;
use crate::roots::{ParabolicData, Root, RootSystem, Weight};
use crate::twist::{
    twist_compatible, twisted_char_by_verma_expansion, twisted_gvm_char, twisted_gvm_char_one_dim,
    verify_action_shift, verify_circle_product_rule, verify_odd_product_invariance,
    verify_star_transport,
};
use crate::weyl::WeylElement;
use crate::Rat;

/// All 2^k standard parabolics, ordered by the subset bitmask.
pub fn standard_parabolics(rs: &RootSystem) -> Vec<ParabolicData> {
    let k = rs.num_simple();
    (0..(1u64 << k))
        .map(|mask| {
            let subset: BTreeSet<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
            rs.parabolic(&subset).expect("subset indices are in range")
        })
        .collect()
}

/// All simple-coordinate vectors of height at most `max`, ordered by height
/// then lexicographically.
pub fn nu_box(num_simple: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; num_simple];
    fn rec(current: &mut Vec<u32>, idx: usize, budget: u32, out: &mut Vec<Vec<u32>>) {
        if idx == current.len() {
            out.push(current.clone());
            return;
        }
        for v in 0..=budget {
            current[idx] = v;
            rec(current, idx + 1, budget - v, out);
        }
        current[idx] = 0;
    }
    if num_simple == 0 {
        return vec![vec![]];
    }
    rec(&mut current, 0, max, &mut out);
    out.sort_by_key(|nu| (crate::roots::height(nu), nu.clone()));
    out
}

const SEEDS: [(i64, i64); 10] = [
    (1, 1),
    (1, 2),
    (-2, 1),
    (5, 3),
    (3, 1),
    (-7, 2),
    (4, 1),
    (9, 1),
    (-11, 3),
    (6, 1),
];

/// Deterministic sample of weights with λ(h_α) = 0 for every α in `x`.
/// The constraints glue coordinates into signed classes; free classes take
/// values from a fixed seed list, so the sample always contains non-integral
/// coordinates.
pub fn admissible_weights(rs: &RootSystem, x: &[Root], count: usize) -> Vec<Weight> {
    let dim = rs.dim();
    // signed union-find: parent link plus sign relative to the parent
    let mut parent: Vec<usize> = (0..dim).collect();
    let mut sign: Vec<i64> = vec![1; dim];
    let mut zeroed: Vec<bool> = vec![false; dim];

    fn find(parent: &mut Vec<usize>, sign: &mut Vec<i64>, i: usize) -> (usize, i64) {
        if parent[i] == i {
            return (i, 1);
        }
        let (root, s) = find(parent, sign, parent[i]);
        parent[i] = root;
        sign[i] *= s;
        (root, sign[i])
    }

    for alpha in x {
        let rel = if alpha.is_odd() { -1 } else { 1 };
        let (ra, sa) = find(&mut parent, &mut sign, alpha.plus());
        let (rb, sb) = find(&mut parent, &mut sign, alpha.minus());
        if ra == rb {
            // λ_p = rel·λ_q already linked: a conflict forces the class to 0
            if sa != rel * sb {
                zeroed[ra] = true;
            }
        } else {
            parent[rb] = ra;
            sign[rb] = sa * rel * sb;
            if zeroed[rb] {
                zeroed[ra] = true;
            }
        }
    }

    // classes in order of their smallest slot
    let mut reps: Vec<usize> = Vec::new();
    let mut class_index = vec![usize::MAX; dim];
    for i in 0..dim {
        let (root, _) = find(&mut parent, &mut sign, i);
        if class_index[root] == usize::MAX {
            class_index[root] = reps.len();
            reps.push(root);
        }
    }

    (0..count)
        .map(|variant| {
            let coords: Vec<Rat> = (0..dim)
                .map(|i| {
                    let (root, s) = find(&mut parent, &mut sign, i);
                    if zeroed[root] {
                        return Rat::from_integer(0);
                    }
                    let (p, q) = SEEDS[(class_index[root] + variant) % SEEDS.len()];
                    Rat::new(p, q) * Rat::from_integer(s)
                })
                .collect();
            Weight::new(coords)
        })
        .collect()
}

/// Deterministic sample of weights dominant and integral on the even Levi:
/// descending integers inside each block, with the gap growing by variant.
pub fn dominant_levi_weights(rs: &RootSystem, p: &ParabolicData, count: usize) -> Vec<Weight> {
    let joined: BTreeSet<usize> = crate::levi::levi_even_simples(p.x0())
        .iter()
        .map(|r| r.plus())
        .collect();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut run = vec![0usize];
    for slot in 1..rs.dim() {
        if joined.contains(&(slot - 1)) {
            run.push(slot);
        } else {
            blocks.push(std::mem::replace(&mut run, vec![slot]));
        }
    }
    blocks.push(run);

    (0..count)
        .map(|variant| {
            let gap = variant as i64 + 1;
            let mut coords = vec![Rat::from_integer(0); rs.dim()];
            for block in &blocks {
                let len = block.len();
                for (pos, &slot) in block.iter().enumerate() {
                    let value = if len == 1 {
                        // free coordinate: vary it with the slot and variant
                        (slot as i64 % 3) - variant as i64
                    } else {
                        (len - 1 - pos) as i64 * gap
                    };
                    coords[slot] = Rat::from_integer(value);
                }
            }
            Weight::new(coords)
        })
        .collect()
}

/// Outcome of an exhaustive run: case count plus one line per failure.
#[derive(Debug, Clone, Default)]
pub struct SweepReport {
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn absorb(&mut self, other: SweepReport) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
    }
}

/// For every standard parabolic, compatible w and admissible λ: the two
/// closed forms and the expansion route agree coefficient-exactly.
pub fn sweep_one_dim_twists(rs: &RootSystem, n: u32, per_parabolic: usize) -> SweepReport {
    let mut report = SweepReport::default();
    let group = WeylElement::all(rs);
    for p in standard_parabolics(rs) {
        for w in &group {
            if !twist_compatible(rs, &p, w) {
                // the closed form must refuse rather than fall back
                report.cases += 1;
                let lam = Weight::zero(rs.dim());
                match twisted_gvm_char_one_dim(rs, &p, w, &lam, 1) {
                    Err(Error::IncompatibleTwist { .. }) => {}
                    other => report.failures.push(format!(
                        "P={:?} w=({w}) expected incompatible_twist, got {other:?}",
                        p.simple_indices()
                    )),
                }
                continue;
            }
            for lam in admissible_weights(rs, p.x(), per_parabolic) {
                report.cases += 1;
                let run = || -> Result<Option<String>, Error> {
                    let dot_form = twisted_gvm_char_one_dim(rs, &p, w, &lam, n)?;
                    let circle_form = twisted_gvm_char(rs, &p, w, &FormalCharacter::exp(&lam), n)?;
                    let expansion =
                        twisted_char_by_verma_expansion(rs, &p, w, &FormalCharacter::exp(&lam), n)?;
                    for (name, other) in [("circle", &circle_form), ("expansion", &expansion)] {
                        let cmp = dot_form.compare_on_window(other)?;
                        if let Some(d) = cmp.discrepancy {
                            return Ok(Some(format!(
                                "P={:?} w=({w}) lam={lam} vs {name}: at {} {} != {}",
                                p.simple_indices(),
                                d.weight,
                                d.lhs,
                                d.rhs
                            )));
                        }
                    }
                    Ok(None)
                };
                match run() {
                    Ok(None) => {}
                    Ok(Some(line)) => report.failures.push(line),
                    Err(e) => report
                        .failures
                        .push(format!("P={:?} w=({w}) lam={lam}: {e}", p.simple_indices())),
                }
            }
        }
    }
    report
}

/// Even-Levi version: ch L from the Levi simple character.
pub fn sweep_levi_twists(rs: &RootSystem, n: u32, per_parabolic: usize) -> SweepReport {
    let mut report = SweepReport::default();
    let group = WeylElement::all(rs);
    for p in standard_parabolics(rs) {
        if !p.x1().is_empty() {
            continue;
        }
        for w in &group {
            if !twist_compatible(rs, &p, w) {
                continue;
            }
            for lam in dominant_levi_weights(rs, &p, per_parabolic) {
                report.cases += 1;
                let run = || -> Result<Option<String>, Error> {
                    let ch_l = levi_simple_char(rs, &p, &lam)?;
                    let closed = twisted_gvm_char(rs, &p, w, &ch_l, n)?;
                    let expansion = twisted_char_by_verma_expansion(rs, &p, w, &ch_l, n)?;
                    let cmp = closed.compare_on_window(&expansion)?;
                    Ok(cmp.discrepancy.map(|d| {
                        format!(
                            "P={:?} w=({w}) lam={lam}: at {} {} != {}",
                            p.simple_indices(),
                            d.weight,
                            d.lhs,
                            d.rhs
                        )
                    }))
                };
                match run() {
                    Ok(None) => {}
                    Ok(Some(line)) => report.failures.push(line),
                    Err(e) => report
                        .failures
                        .push(format!("P={:?} w=({w}) lam={lam}: {e}", p.simple_indices())),
                }
            }
        }
    }
    report
}

/// Borel specialization: the twist of a Verma character is again a Verma
/// character, anchored at w∘λ = w·λ.
pub fn sweep_verma_specialization(rs: &RootSystem, n: u32, samples: usize) -> SweepReport {
    let mut report = SweepReport::default();
    let borel = rs.parabolic(&BTreeSet::new()).expect("empty subset");
    let lams = admissible_weights(rs, borel.x(), samples);
    for w in WeylElement::all(rs) {
        for lam in &lams {
            report.cases += 1;
            let run = || -> Result<Option<String>, Error> {
                let p_empty = p_series_for_roots(rs, &[], &[], n)?;
                let circle_route = FormalCharacter::exp(&w.act_circle(rs, lam)).mul(&p_empty);
                let dot_route = FormalCharacter::exp(&w.act_dot(rs, lam)).mul(&p_empty);
                let closed = twisted_gvm_char_one_dim(rs, &borel, &w, lam, n)?;
                let expansion =
                    twisted_char_by_verma_expansion(rs, &borel, &w, &FormalCharacter::exp(lam), n)?;
                for (name, other) in [
                    ("circle-route", &circle_route),
                    ("dot-route", &dot_route),
                    ("expansion", &expansion),
                ] {
                    let cmp = closed.compare_on_window(other)?;
                    if let Some(d) = cmp.discrepancy {
                        return Ok(Some(format!(
                            "w=({w}) lam={lam} vs {name}: at {} {} != {}",
                            d.weight, d.lhs, d.rhs
                        )));
                    }
                }
                Ok(None)
            };
            match run() {
                Ok(None) => {}
                Ok(Some(line)) => report.failures.push(line),
                Err(e) => report.failures.push(format!("w=({w}) lam={lam}: {e}")),
            }
        }
    }
    report
}

/// Star-transport identity over all w and all Z arising as X1 of a standard
/// parabolic.
pub fn sweep_star_transport(rs: &RootSystem) -> SweepReport {
    let mut report = SweepReport::default();
    let zs = parabolic_odd_sets(rs);
    for w in WeylElement::all(rs) {
        for z in &zs {
            report.cases += 1;
            if !verify_star_transport(rs, &w, z) {
                report.failures.push(format!("w=({w}) Z={z:?}"));
            }
        }
    }
    report
}

/// Odd product identity and its W-invariance over all parabolic Z.
pub fn sweep_odd_product(rs: &RootSystem) -> SweepReport {
    let mut report = SweepReport::default();
    for z in parabolic_odd_sets(rs) {
        report.cases += 1;
        if !verify_odd_product_invariance(rs, &z) {
            report.failures.push(format!("Z={z:?}"));
        }
    }
    report
}

/// Shift identity over all w, all γ ∈ Γ and the seed weights.
pub fn sweep_action_shift(rs: &RootSystem, samples: usize) -> SweepReport {
    let mut report = SweepReport::default();
    let lams = admissible_weights(rs, &[], samples);
    let gammas = gamma_set(rs);
    for w in WeylElement::all(rs) {
        for gamma in &gammas {
            for lam in &lams {
                report.cases += 1;
                match verify_action_shift(rs, &w, lam, gamma) {
                    Ok(true) => {}
                    Ok(false) => report
                        .failures
                        .push(format!("w=({w}) lam={lam} gamma={gamma}")),
                    Err(e) => report.failures.push(format!("w=({w}) gamma={gamma}: {e}")),
                }
            }
        }
    }
    report
}

/// Circle product rule over all w, with factors drawn from the r- and
/// s-factors of every parabolic and exponentials of seed weights.
pub fn sweep_circle_product(rs: &RootSystem, samples: usize) -> SweepReport {
    let mut report = SweepReport::default();
    let mut factors: Vec<FormalCharacter> = Vec::new();
    for p in standard_parabolics(rs) {
        factors.push(r_factor(rs, p.x0()).expect("parabolic evens"));
        factors.push(s_factor(rs, p.x1()).expect("parabolic odds"));
    }
    let exps: Vec<FormalCharacter> = admissible_weights(rs, &[], samples)
        .iter()
        .map(FormalCharacter::exp)
        .collect();
    for w in WeylElement::all(rs) {
        for a in &factors {
            for b in factors.iter().chain(&exps) {
                report.cases += 1;
                match verify_circle_product_rule(rs, &w, a, b) {
                    Ok(true) => {}
                    Ok(false) => report.failures.push(format!("w=({w}) product rule")),
                    Err(e) => report.failures.push(format!("w=({w}): {e}")),
                }
            }
        }
    }
    report
}

fn parabolic_odd_sets(rs: &RootSystem) -> Vec<Vec<Root>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for p in standard_parabolics(rs) {
        let z = p.x1().to_vec();
        if seen.insert(z.clone()) {
            out.push(z);
        }
    }
    out
}

/// Guard for CLI sweeps: refuse group orders past desk scale.
pub fn check_sweep_scale(rs: &RootSystem) -> Result<(), Error> {
    let factorial = |k: usize| -> u64 { (1..=k as u64).product::<u64>().max(1) };
    let order = factorial(rs.m()) * factorial(rs.n());
    if order > 10_080 {
        return Err(Error::SweepTooLarge(format!("|W| = {order} > 10080")));
    }
    if rs.m() * rs.n() > 12 {
        return Err(Error::SweepTooLarge(format!(
            "m·n = {} > 12",
            rs.m() * rs.n()
        )));
    }
    Ok(())
}
