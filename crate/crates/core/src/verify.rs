//! Exhaustive cross-check harness.
//!
//! Runs every structural statement the crate relies on over all objects of
//! size `n` for each `n` in a range, and reports per family how many checks
//! ran, how many failed, and the first failure found. Families are run in a
//! fixed order over a fixed enumeration, so the report is deterministic.

use std::collections::HashSet;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::arith::catalan;
use crate::count::{
    brute_force_counts, count_asym_planar, count_asym_rooted_planar, count_planar,
    count_rooted_planar, phi_period,
};
use crate::orbit::{allowed_lengths, kappa_orbit_table, orbit_table_capped, predicted_orbit_table};
use crate::partition::{is_complement, kreweras, rotate_nc, NoncrossingPartition};
use crate::sieve::{csp_verify_capped, fixed_point_count};
use crate::tree::{
    edge_parity, enumerate_trees_capped, is_meander, phi, phi_inverse, rho, rho_bar, rho_inverse,
    Parity, PlaneTree,
};
use crate::{Cap, Result};

/// Anti-isomorphism is checked over all pairs, so it stops at this size.
pub const ANTI_ISOMORPHISM_MAX_N: usize = 6;

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub range: RangeInclusive<usize>,
    pub cap: Cap,
    /// Test hook: makes the complement of the top element wrong, so the
    /// harness has something to catch.
    pub inject_fault: bool,
}

impl VerifyOptions {
    pub fn new(range: RangeInclusive<usize>) -> Self {
        Self {
            range,
            cap: Cap::default(),
            inject_fault: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub name: String,
    pub checks: u64,
    pub failures: u64,
    pub counterexample: Option<String>,
}

impl FamilyReport {
    pub fn pass(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub from: usize,
    pub to: usize,
    pub families: Vec<FamilyReport>,
    pub pass: bool,
}

impl VerifyReport {
    pub fn family(&self, name: &str) -> Option<&FamilyReport> {
        self.families.iter().find(|f| f.name == name)
    }

    pub fn counterexamples(&self) -> impl Iterator<Item = (&str, &str)> {
        self.families
            .iter()
            .filter_map(|f| f.counterexample.as_deref().map(|c| (f.name.as_str(), c)))
    }
}

/// Family names in report order.
pub const FAMILIES: [&str; 15] = [
    "rerooting-commutes",
    "rerooting-meander",
    "parity",
    "bijections",
    "kreweras-period",
    "kreweras-rotation",
    "kreweras-complement",
    "involution-boundary",
    "anti-isomorphism",
    "planar-counts",
    "orbit-counts",
    "allowed-lengths",
    "period-consistency",
    "burnside",
    "csp",
];

struct Harness {
    families: Vec<FamilyReport>,
    inject_fault: bool,
}

impl Harness {
    fn check(&mut self, family: &str, ok: bool, detail: impl FnOnce() -> String) {
        let f = self
            .families
            .iter_mut()
            .find(|f| f.name == family)
            .expect("known family");
        f.checks += 1;
        if !ok {
            f.failures += 1;
            if f.counterexample.is_none() {
                f.counterexample = Some(detail());
            }
        }
    }

    fn kappa(&self, p: &NoncrossingPartition) -> NoncrossingPartition {
        if self.inject_fault && p.n() >= 2 && p.is_top() {
            return p.clone();
        }
        kreweras(p)
    }
}

/// Runs every family over every `n` in the range.
pub fn verify(options: &VerifyOptions) -> Result<VerifyReport> {
    let mut h = Harness {
        families: FAMILIES
            .iter()
            .map(|name| FamilyReport {
                name: name.to_string(),
                checks: 0,
                failures: 0,
                counterexample: None,
            })
            .collect(),
        inject_fault: options.inject_fault,
    };
    // refuse up front rather than after the smaller sizes have run
    options.cap.check(*options.range.end())?;
    for n in options.range.clone() {
        verify_n(&mut h, n, options.cap)?;
    }
    let pass = h.families.iter().all(FamilyReport::pass);
    Ok(VerifyReport {
        from: *options.range.start(),
        to: *options.range.end(),
        families: h.families,
        pass,
    })
}

fn verify_n(h: &mut Harness, n: usize, cap: Cap) -> Result<()> {
    let trees: Vec<PlaneTree> = enumerate_trees_capped(n, cap)?.collect();
    let partitions: Vec<NoncrossingPartition> = trees.iter().map(rho).collect();
    let c_n = trees.len();

    for (t, p) in trees.iter().zip(&partitions) {
        let k = h.kappa(p);
        let lhs = rho(&phi(t));
        let bar = rho_bar(t);
        h.check("rerooting-commutes", lhs == k && bar == k, || {
            format!("n={n} T={t}: rho(phi(T))={lhs} rho_bar(T)={bar} kreweras(rho(T))={k}")
        });

        let next = phi(t);
        let ok = is_meander(&t.matching(), &next.matching())?;
        h.check("rerooting-meander", ok, || {
            format!("n={n} T={t} phi(T)={next} is not a meander")
        });

        let parents = t.parent_edges();
        let ok = parents.iter().all(|&(e, parent)| match parent {
            None => edge_parity(e) == Parity::Odd,
            Some(pe) => edge_parity(e) != edge_parity(pe),
        });
        h.check("parity", ok, || {
            format!("n={n} T={t}: root edges odd / alternation violated")
        });

        let back = rho_inverse(p);
        h.check("bijections", &back == t && phi_inverse(&next) == *t, || {
            format!("n={n} T={t}: rho_inverse(rho(T))={back}")
        });
    }

    // images of κ, φ, ρ, ρ̄ each have C_n distinct elements
    let distinct = |v: Vec<String>| v.into_iter().collect::<HashSet<_>>().len();
    for (what, image) in [
        (
            "rho",
            partitions.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        ),
        (
            "rho_bar",
            trees.iter().map(|t| rho_bar(t).to_string()).collect(),
        ),
        ("phi", trees.iter().map(|t| phi(t).to_string()).collect()),
        (
            "kreweras",
            partitions.iter().map(|p| h.kappa(p).to_string()).collect(),
        ),
    ] {
        let size = distinct(image);
        h.check("bijections", size == c_n, || {
            format!("n={n}: image of {what} has {size} elements, expected {c_n}")
        });
    }

    let mut some_non_involutive = false;
    for p in &partitions {
        let mut x = p.clone();
        let mut period = None;
        for step in 1..=2 * n {
            x = h.kappa(&x);
            if period.is_none() && &x == p {
                period = Some(step);
            }
        }
        let ok = &x == p && period.is_some_and(|l| (2 * n).is_multiple_of(l));
        h.check("kreweras-period", ok, || {
            format!("n={n} P={p}: kreweras^(2n)(P)={x}, period {period:?}")
        });

        let twice = h.kappa(&h.kappa(p));
        let rotated = rotate_nc(p, 1);
        h.check("kreweras-rotation", twice == rotated, || {
            format!("n={n} P={p}: kreweras^2(P)={twice} rotate(P,1)={rotated}")
        });
        some_non_involutive |= &twice != p;

        let k = h.kappa(p);
        h.check("kreweras-complement", is_complement(p, &k)?, || {
            format!("n={n} P={p}: kreweras(P)={k} is not a lattice complement")
        });
    }
    let expect_involution = n <= 2;
    h.check(
        "involution-boundary",
        some_non_involutive != expect_involution,
        || {
            if expect_involution {
                format!("n={n}: kreweras is not an involution")
            } else {
                format!("n={n}: kreweras is an involution")
            }
        },
    );

    if n <= ANTI_ISOMORPHISM_MAX_N {
        let images: Vec<NoncrossingPartition> = partitions.iter().map(|p| h.kappa(p)).collect();
        for (p, kp) in partitions.iter().zip(&images) {
            for (q, kq) in partitions.iter().zip(&images) {
                let forward = p.refines(q)?;
                let backward = kq.refines(kp)?;
                h.check("anti-isomorphism", forward == backward, || {
                    format!("n={n} P={p} Q={q}: P<=Q is {forward}, kreweras(Q)<=kreweras(P) is {backward}")
                });
            }
        }
    }

    verify_counts(h, n, cap)?;
    verify_orbits(h, n, cap, &trees, &partitions)?;
    verify_csp(h, n, cap)
}

fn verify_counts(h: &mut Harness, n: usize, cap: Cap) -> Result<()> {
    let brute = brute_force_counts(n, cap)?;
    let closed = [
        ("rootPT", count_rooted_planar(n)?, brute.rooted_planar),
        (
            "asymRootPT",
            count_asym_rooted_planar(n)?,
            brute.asym_rooted_planar,
        ),
        ("PT", count_planar(n)?, brute.planar),
        ("asymPT", count_asym_planar(n)?, brute.asym_planar),
    ];
    for (name, formula, counted) in &closed {
        h.check("planar-counts", *formula == BigUint::from(*counted), || {
            format!("n={n}: {name} formula {formula} vs brute force {counted}")
        });
    }
    // PT - asymPT = rootPT - asymRootPT + χ_odd(n) C_{(n-1)/2}
    let int = |x: &BigUint| BigInt::from(x.clone());
    let correction = if n % 2 == 1 {
        int(&catalan((n as u64 - 1) / 2))
    } else {
        BigInt::from(0)
    };
    let lhs = int(&closed[2].1) - int(&closed[3].1);
    let rhs = int(&closed[0].1) - int(&closed[1].1) + correction;
    h.check("planar-counts", lhs == rhs, || {
        format!("n={n}: PT - asymPT = {lhs}, expected {rhs}")
    });
    Ok(())
}

fn verify_orbits(
    h: &mut Harness,
    n: usize,
    cap: Cap,
    trees: &[PlaneTree],
    partitions: &[NoncrossingPartition],
) -> Result<()> {
    let table = orbit_table_capped(n, cap)?;
    let elements = table.total_elements();
    let c_n = catalan(n as u64);
    h.check("orbit-counts", elements == c_n, || {
        format!("n={n}: orbits cover {elements} elements, expected {c_n}")
    });
    let total = table.total_orbits();
    let planar = count_planar(n)?;
    h.check("orbit-counts", total == planar, || {
        format!("n={n}: {total} orbits, expected PT(n) = {planar}")
    });
    if n >= 2 {
        let predicted = predicted_orbit_table(n)?;
        h.check("orbit-counts", table.same_counts(&predicted), || {
            format!(
                "n={n}: orbit table {:?} vs predicted {:?}",
                entries(&table),
                entries(&predicted)
            )
        });
        let allowed = allowed_lengths(n)?;
        for l in table.lengths() {
            h.check("allowed-lengths", allowed.contains(&l), || {
                format!("n={n}: orbit length {l} not in {allowed:?}")
            });
        }
    }

    // κ-side orbits agree with φ-side orbits, element by element and in total
    let by_kappa = kappa_orbit_table(n, cap)?;
    h.check("period-consistency", by_kappa.same_counts(&table), || {
        format!(
            "n={n}: kreweras orbits {:?} vs phi orbits {:?}",
            entries(&by_kappa),
            entries(&table)
        )
    });
    for (t, p) in trees.iter().zip(partitions) {
        let mut x = h.kappa(p);
        let mut kp = 1;
        while &x != p && kp <= 2 * n {
            x = h.kappa(&x);
            kp += 1;
        }
        let tp = phi_period(t);
        h.check("period-consistency", kp == tp, || {
            format!("n={n} T={t} P={p}: kreweras period {kp}, phi period {tp}")
        });
    }

    // Burnside: Σ_c |Fix(c)| = |G| · #orbits
    let mut fixed_total: u64 = 0;
    for c in 0..2 * n {
        fixed_total += fixed_point_count(n, c, cap)?;
    }
    let expected = BigUint::from(2 * n) * &total;
    h.check("burnside", BigUint::from(fixed_total) == expected, || {
        format!("n={n}: sum of fixed points {fixed_total}, expected {expected}")
    });
    Ok(())
}

fn verify_csp(h: &mut Harness, n: usize, cap: Cap) -> Result<()> {
    let report = csp_verify_capped(n, cap)?;
    h.check("csp", report.condition1_pass, || {
        let bad = report.condition1.iter().find(|c| !c.pass).unwrap();
        format!(
            "n={n}: Φ_{} does not divide X(q) - {}",
            bad.d, bad.fixed_points
        )
    });
    h.check("csp", report.condition2.pass, || {
        format!(
            "n={n}: residues {:?} vs expected {:?}",
            report.condition2.residues, report.condition2.expected
        )
    });
    h.check("csp", report.conditions_agree, || {
        format!("n={n}: the two conditions disagree")
    });
    let a0 = &report.condition2.residues[0];
    let planar = BigInt::from(count_planar(n)?);
    h.check("csp", *a0 == planar, || {
        format!("n={n}: a_0 = {a0}, PT(n) = {planar}")
    });
    if n >= 2 {
        let a1 = &report.condition2.residues[1];
        let asym = BigInt::from(count_asym_planar(n)?);
        h.check("csp", *a1 == asym, || {
            format!("n={n}: a_1 = {a1}, asymPT(n) = {asym}")
        });
    }
    Ok(())
}

fn entries(t: &crate::OrbitTable) -> Vec<(usize, String)> {
    t.entries().map(|(l, c)| (l, c.to_string())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_range_passes() {
        let report = verify(&VerifyOptions::new(1..=5)).unwrap();
        for f in &report.families {
            assert!(f.pass(), "{}: {:?}", f.name, f.counterexample);
            assert!(f.checks > 0, "{} ran no checks", f.name);
        }
        assert!(report.pass);
        let commute = report.family("rerooting-commutes").unwrap();
        assert_eq!(commute.checks, 1 + 2 + 5 + 14 + 42);
    }

    #[test]
    fn injected_fault_is_caught() {
        let mut options = VerifyOptions::new(2..=4);
        options.inject_fault = true;
        let report = verify(&options).unwrap();
        assert!(!report.pass);
        let commute = report.family("rerooting-commutes").unwrap();
        assert!(commute.failures > 0);
        let example = commute.counterexample.as_deref().unwrap();
        assert!(example.starts_with("n=2 T=()()"), "{example}");
    }

    #[test]
    fn cap_is_enforced() {
        let mut options = VerifyOptions::new(1..=3);
        options.cap = Cap(2);
        assert!(verify(&options).is_err());
    }
}
