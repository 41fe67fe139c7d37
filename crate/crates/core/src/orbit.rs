//! Orbits of NC(n) under the Kreweras complement.
//!
//! Because `rho(phi(t)) == kreweras(rho(t))`, the orbits are computed on the
//! tree side, where one step of [`phi`](crate::phi) is an index shift, and
//! reported as partitions through [`rho`](crate::rho) when needed.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{catalan, divisors};
use crate::count::{count_asym_planar, count_asym_rooted_planar, phi_orbit};
use crate::partition::{enumerate_nc_capped, kreweras, NoncrossingPartition};
use crate::tree::{enumerate_trees_capped, PlaneTree};
use crate::{Cap, Error, Result};

/// Histogram of orbit lengths for one `n`, with optional representatives.
///
/// Lengths with no orbits are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "RawTable", try_from = "RawTable")]
pub struct OrbitTable {
    n: usize,
    counts: BTreeMap<usize, BigUint>,
    /// Least Dyck word of every orbit, grouped by length.
    representatives: Option<BTreeMap<usize, Vec<PlaneTree>>>,
}

#[derive(Serialize, Deserialize)]
struct RawTable {
    n: usize,
    orbits: Vec<RawEntry>,
}

#[derive(Serialize, Deserialize)]
struct RawEntry {
    length: usize,
    #[serde(serialize_with = "crate::bignum::serialize_uint")]
    #[serde(deserialize_with = "crate::bignum::deserialize_uint")]
    count: BigUint,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    representatives: Option<Vec<String>>,
}

impl From<OrbitTable> for RawTable {
    fn from(t: OrbitTable) -> Self {
        let orbits = t
            .entries()
            .map(|(length, count)| RawEntry {
                length,
                count: count.clone(),
                representatives: t
                    .representatives(length)
                    .map(|reps| reps.iter().map(PlaneTree::to_dyck).collect()),
            })
            .collect();
        RawTable { n: t.n, orbits }
    }
}

impl TryFrom<RawTable> for OrbitTable {
    type Error = Error;

    fn try_from(raw: RawTable) -> Result<Self> {
        let mut counts = BTreeMap::new();
        let mut reps = BTreeMap::new();
        let mut any_reps = false;
        for e in raw.orbits {
            if let Some(words) = e.representatives {
                any_reps = true;
                let trees = words
                    .iter()
                    .map(|w| PlaneTree::from_dyck(w))
                    .collect::<Result<Vec<_>>>()?;
                reps.insert(e.length, trees);
            }
            if !e.count.is_zero() && counts.insert(e.length, e.count).is_some() {
                return Err(Error::Parse(format!("length {} listed twice", e.length)));
            }
        }
        Ok(OrbitTable {
            n: raw.n,
            counts,
            representatives: any_reps.then_some(reps),
        })
    }
}

impl OrbitTable {
    /// A table without representatives. Zero counts are dropped.
    pub fn from_counts(n: usize, counts: impl IntoIterator<Item = (usize, BigUint)>) -> Self {
        let counts = counts.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Self {
            n,
            counts,
            representatives: None,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of orbits of length `l`; zero when absent.
    pub fn count(&self, l: usize) -> BigUint {
        self.counts.get(&l).cloned().unwrap_or_default()
    }

    /// `(length, count)` pairs, longest first.
    pub fn entries(&self) -> impl Iterator<Item = (usize, &BigUint)> + '_ {
        self.counts.iter().rev().map(|(&l, c)| (l, c))
    }

    pub fn lengths(&self) -> BTreeSet<usize> {
        self.counts.keys().copied().collect()
    }

    /// Least Dyck word of each orbit of length `l`, ascending.
    pub fn representatives(&self, l: usize) -> Option<&[PlaneTree]> {
        self.representatives.as_ref()?.get(&l).map(Vec::as_slice)
    }

    /// Total number of orbits.
    pub fn total_orbits(&self) -> BigUint {
        self.counts.values().sum()
    }

    /// `Σ l · o(l)`: the number of elements covered.
    pub fn total_elements(&self) -> BigUint {
        self.counts.iter().map(|(&l, c)| c * l).sum()
    }

    /// Entrywise equality of the counts; representatives are ignored.
    pub fn same_counts(&self, other: &OrbitTable) -> bool {
        self.n == other.n && self.counts == other.counts
    }

    /// Drops the representatives.
    pub fn without_representatives(mut self) -> Self {
        self.representatives = None;
        self
    }
}

/// `[p, κ(p), κ²(p), ...]` up to, not including, the first repeat.
pub fn kappa_orbit(p: &NoncrossingPartition) -> Vec<NoncrossingPartition> {
    let mut orbit = vec![p.clone()];
    let mut x = kreweras(p);
    while &x != p {
        let next = kreweras(&x);
        orbit.push(x);
        x = next;
    }
    orbit
}

/// The orbit decomposition of NC(n) under κ, computed on plane trees. Uses
/// the default cap.
pub fn orbit_table(n: usize) -> Result<OrbitTable> {
    orbit_table_capped(n, Cap::default())
}

/// A tree is counted iff it is the least Dyck word of its orbit, so every
/// orbit is seen exactly once and its representative comes for free.
pub fn orbit_table_capped(n: usize, cap: Cap) -> Result<OrbitTable> {
    let mut counts: BTreeMap<usize, BigUint> = BTreeMap::new();
    let mut reps: BTreeMap<usize, Vec<PlaneTree>> = BTreeMap::new();
    for t in enumerate_trees_capped(n, cap)? {
        let orbit = phi_orbit(&t);
        if orbit.iter().all(|x| &t <= x) {
            *counts.entry(orbit.len()).or_default() += 1u32;
            reps.entry(orbit.len()).or_default().push(t);
        }
    }
    Ok(OrbitTable {
        n,
        counts,
        representatives: Some(reps),
    })
}

/// The same decomposition computed directly by iterating κ on partitions.
/// Slower; kept as an independent check of [`orbit_table`].
pub fn kappa_orbit_table(n: usize, cap: Cap) -> Result<OrbitTable> {
    let mut seen: HashSet<NoncrossingPartition> = HashSet::new();
    let mut counts: BTreeMap<usize, BigUint> = BTreeMap::new();
    for p in enumerate_nc_capped(n, cap)? {
        if seen.contains(&p) {
            continue;
        }
        let orbit = kappa_orbit(&p);
        *counts.entry(orbit.len()).or_default() += 1u32;
        seen.extend(orbit);
    }
    Ok(OrbitTable::from_counts(n, counts))
}

/// Orbit lengths that can occur for `n >= 2`: `2d` for every `d | n`, and `n`
/// itself when `n` is odd.
pub fn allowed_lengths(n: usize) -> Result<BTreeSet<usize>> {
    if n < 2 {
        return Err(Error::Domain(
            "allowed orbit lengths are stated for n >= 2".into(),
        ));
    }
    let mut out: BTreeSet<usize> = divisors(n as u64)
        .into_iter()
        .map(|d| 2 * d as usize)
        .collect();
    if n % 2 == 1 {
        out.insert(n);
    }
    Ok(out)
}

/// Orbit counts predicted from the planar-tree counts, for `n >= 2`:
///
/// | length            | orbits                          |
/// |-------------------|---------------------------------|
/// | `2n`              | asymmetric planar trees         |
/// | `n`, `n` odd      | `C_{(n-1)/2}`                   |
/// | `n`, `n` even     | asymmetric rooted, `n/2` edges  |
/// | `2d`, `d \| n`, `d < n/2` | asymmetric rooted, `d` edges |
pub fn predicted_orbit_table(n: usize) -> Result<OrbitTable> {
    if n < 2 {
        return Err(Error::Domain(
            "the orbit count prediction is stated for n >= 2".into(),
        ));
    }
    let mut counts = vec![(2 * n, count_asym_planar(n)?)];
    let half_turn = if n % 2 == 1 {
        catalan((n as u64 - 1) / 2)
    } else {
        count_asym_rooted_planar(n / 2)?
    };
    counts.push((n, half_turn));
    for d in divisors(n as u64) {
        let d = d as usize;
        if 2 * d < n {
            counts.push((2 * d, count_asym_rooted_planar(d)?));
        }
    }
    Ok(OrbitTable::from_counts(n, counts))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(n: usize, pairs: &[(usize, u64)]) -> OrbitTable {
        OrbitTable::from_counts(n, pairs.iter().map(|&(l, c)| (l, BigUint::from(c))))
    }

    #[test]
    fn kappa_orbit_examples() {
        let top = NoncrossingPartition::top(4);
        assert_eq!(
            kappa_orbit(&top),
            vec![top.clone(), NoncrossingPartition::bottom(4)]
        );
        assert_eq!(kappa_orbit(&NoncrossingPartition::top(1)).len(), 1);
        let lengths: BTreeSet<usize> = enumerate_nc_capped(3, Cap::default())
            .unwrap()
            .map(|p| kappa_orbit(&p).len())
            .collect();
        assert_eq!(lengths, BTreeSet::from([2, 3]));
    }

    #[test]
    fn tables() {
        assert!(orbit_table(4)
            .unwrap()
            .same_counts(&table(4, &[(8, 1), (4, 1), (2, 1)])));
        assert!(orbit_table(5)
            .unwrap()
            .same_counts(&table(5, &[(10, 3), (5, 2), (2, 1)])));
        assert!(orbit_table(6)
            .unwrap()
            .same_counts(&table(6, &[(12, 9), (6, 3), (4, 1), (2, 1)])));
        assert!(orbit_table(1).unwrap().same_counts(&table(1, &[(1, 1)])));
        assert!(kappa_orbit_table(6, Cap::default())
            .unwrap()
            .same_counts(&orbit_table(6).unwrap()));
    }

    #[test]
    fn predictions() {
        assert!(predicted_orbit_table(4)
            .unwrap()
            .same_counts(&table(4, &[(8, 1), (4, 1), (2, 1)])));
        assert!(predicted_orbit_table(3)
            .unwrap()
            .same_counts(&table(3, &[(3, 1), (2, 1)])));
        assert!(predicted_orbit_table(2)
            .unwrap()
            .same_counts(&table(2, &[(2, 1)])));
        assert!(matches!(predicted_orbit_table(1), Err(Error::Domain(_))));
    }

    #[test]
    fn allowed() {
        assert_eq!(allowed_lengths(4).unwrap(), BTreeSet::from([2, 4, 8]));
        assert_eq!(allowed_lengths(3).unwrap(), BTreeSet::from([2, 3, 6]));
        assert_eq!(allowed_lengths(6).unwrap(), BTreeSet::from([2, 4, 6, 12]));
        assert!(allowed_lengths(1).is_err());
    }

    #[test]
    fn representatives_are_orbit_minima() {
        let t = orbit_table(4).unwrap();
        assert_eq!(t.representatives(2).unwrap()[0].to_dyck(), "(()()())");
        assert_eq!(t.representatives(8).unwrap().len(), 1);
        assert_eq!(t.total_orbits(), BigUint::from(3u32));
        assert_eq!(t.total_elements(), BigUint::from(14u32));
    }

    #[test]
    fn json_shape() {
        let t = orbit_table(4).unwrap().without_representatives();
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(
            json,
            r#"{"n":4,"orbits":[{"length":8,"count":1},{"length":4,"count":1},{"length":2,"count":1}]}"#
        );
        assert_eq!(serde_json::from_str::<OrbitTable>(&json).unwrap(), t);
        let with = orbit_table(3).unwrap();
        let back: OrbitTable =
            serde_json::from_str(&serde_json::to_string(&with).unwrap()).unwrap();
        assert_eq!(back, with);
    }
}
