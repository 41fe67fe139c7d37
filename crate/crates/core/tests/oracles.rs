//! The fast algorithms checked against slow definitions.

use kreweras_core::arith::catalan;
use kreweras_core::count::{
    brute_force_counts, count_asym_planar, count_asym_rooted_planar, count_planar,
    count_rooted_planar,
};
use kreweras_core::orbit::{orbit_table, predicted_orbit_table};
use kreweras_core::sieve::{fixed_point_count, q_catalan};
use kreweras_core::{
    enumerate_nc, enumerate_trees, is_complement, is_meander, kreweras, nc_join, nc_meet, phi, rho,
    Cap, Matching, NoncrossingPartition,
};
use num_bigint::BigUint;

/// Every set partition of `1..=n` as a label vector (restricted growth strings).
fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for l in 0..=max + 1 {
            cur.push(l);
            go(i + 1, n, max.max(l), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(1, n, 0, &mut vec![0], &mut out);
    }
    out
}

/// Crossing test straight from the definition, over all quadruples.
fn crossing(labels: &[usize]) -> bool {
    let m = labels.len();
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                for d in c + 1..m {
                    if labels[a] == labels[c] && labels[b] == labels[d] && labels[a] != labels[b] {
                        return true;
                    }
                }
            }
        }
    }
    false
}

fn labels_of(p: &NoncrossingPartition) -> Vec<usize> {
    let mut out = vec![0; p.n()];
    for (k, b) in p.blocks().iter().enumerate() {
        for &i in b {
            out[i - 1] = k;
        }
    }
    out
}

fn from_labels(labels: &[usize]) -> NoncrossingPartition {
    let k = labels.iter().max().map_or(0, |m| m + 1);
    let mut blocks = vec![Vec::new(); k];
    for (i, &l) in labels.iter().enumerate() {
        blocks[l].push(i + 1);
    }
    NoncrossingPartition::new(labels.len(), blocks).unwrap()
}

/// The coarsest partition of the primed points `1'..n'` such that P on the
/// unprimed points together with it is noncrossing on `1 < 1' < 2 < ... < n'`.
fn coarsest_complement(p: &NoncrossingPartition) -> NoncrossingPartition {
    let n = p.n();
    let unprimed = labels_of(p);
    let mut best: Option<Vec<usize>> = None;
    for q in set_partitions(n) {
        let mut joint = Vec::with_capacity(2 * n);
        for i in 0..n {
            joint.push(unprimed[i]);
            joint.push(n + q[i]);
        }
        if crossing(&joint) {
            continue;
        }
        let blocks = q.iter().max().unwrap() + 1;
        if best
            .as_ref()
            .is_none_or(|b| blocks < b.iter().max().unwrap() + 1)
        {
            best = Some(q);
        }
    }
    from_labels(&best.unwrap())
}

fn refines(p: &NoncrossingPartition, q: &NoncrossingPartition) -> bool {
    let lq = labels_of(q);
    p.blocks()
        .iter()
        .all(|b| b.iter().all(|&i| lq[i - 1] == lq[b[0] - 1]))
}

#[test]
fn kreweras_is_the_coarsest_compatible_partition() {
    for n in 1..=7 {
        for p in enumerate_nc(n).unwrap() {
            assert_eq!(kreweras(&p), coarsest_complement(&p), "P={p}");
        }
    }
    let p: NoncrossingPartition = "1,3/2".parse().unwrap();
    assert_eq!(coarsest_complement(&p).to_string(), "1,2/3");
}

#[test]
fn noncrossing_enumeration_matches_definition() {
    for n in 1..=7 {
        let mut brute: Vec<NoncrossingPartition> = set_partitions(n)
            .iter()
            .filter(|l| !crossing(l))
            .map(|l| from_labels(l))
            .collect();
        let mut fast: Vec<_> = enumerate_nc(n).unwrap().collect();
        brute.sort_by_key(|p| p.to_string());
        fast.sort_by_key(|p| p.to_string());
        assert_eq!(fast, brute);
        assert_eq!(BigUint::from(fast.len()), catalan(n as u64));
    }
}

#[test]
fn lattice_operations_match_order_definition() {
    for n in 1..=5 {
        let all: Vec<_> = enumerate_nc(n).unwrap().collect();
        for p in &all {
            for q in &all {
                let uppers: Vec<_> = all
                    .iter()
                    .filter(|r| refines(p, r) && refines(q, r))
                    .collect();
                let join = uppers
                    .iter()
                    .find(|j| uppers.iter().all(|r| refines(j, r)))
                    .unwrap();
                assert_eq!(&nc_join(p, q).unwrap(), *join);
                let lowers: Vec<_> = all
                    .iter()
                    .filter(|r| refines(r, p) && refines(r, q))
                    .collect();
                let meet = lowers
                    .iter()
                    .find(|m| lowers.iter().all(|r| refines(r, m)))
                    .unwrap();
                assert_eq!(&nc_meet(p, q).unwrap(), *meet);
            }
        }
    }
    let p: NoncrossingPartition = "1,3/2/4".parse().unwrap();
    let q: NoncrossingPartition = "2,4/1/3".parse().unwrap();
    assert!(nc_join(&p, &q).unwrap().is_top());
}

/// Number of closed loops drawn by two matchings, via union-find.
fn loop_count(a: &Matching, b: &Matching) -> usize {
    let m = 2 * a.n();
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    for (i, j) in a.pairs().into_iter().chain(b.pairs()) {
        let (ri, rj) = (find(&mut parent, i - 1), find(&mut parent, j - 1));
        parent[ri] = rj;
    }
    (0..m).filter(|&x| find(&mut parent, x) == x).count()
}

#[test]
fn meanders_match_loop_count() {
    for n in 1..=4 {
        let trees: Vec<_> = enumerate_trees(n).unwrap().collect();
        for s in &trees {
            for t in &trees {
                let (a, b) = (s.matching(), t.matching());
                assert_eq!(is_meander(&a, &b).unwrap(), loop_count(&a, &b) == 1);
            }
        }
    }
}

#[test]
fn rerooting_gives_meanders_and_complements() {
    for n in 1..=7 {
        for t in enumerate_trees(n).unwrap() {
            let u = phi(&t);
            assert_eq!(loop_count(&t.matching(), &u.matching()), 1, "T={t}");
            assert!(is_complement(&rho(&t), &rho(&u)).unwrap());
        }
    }
}

/// A meander always gives a complementary pair. The converse needs more
/// than the partitions record, as this pair shows.
#[test]
fn complements_need_not_be_meanders() {
    let t = "(((())))".parse::<kreweras_core::PlaneTree>().unwrap();
    let u = "(())(())".parse::<kreweras_core::PlaneTree>().unwrap();
    assert!(is_complement(&rho(&t), &rho(&u)).unwrap());
    assert!(!is_meander(&t.matching(), &u.matching()).unwrap());
}

#[test]
fn closed_forms_match_brute_force() {
    for n in 1..=10 {
        let b = brute_force_counts(n, Cap::default()).unwrap();
        assert_eq!(
            count_rooted_planar(n).unwrap(),
            BigUint::from(b.rooted_planar),
            "n={n}"
        );
        assert_eq!(
            count_asym_rooted_planar(n).unwrap(),
            BigUint::from(b.asym_rooted_planar)
        );
        assert_eq!(count_planar(n).unwrap(), BigUint::from(b.planar));
        assert_eq!(count_asym_planar(n).unwrap(), BigUint::from(b.asym_planar));
    }
    // the closed forms divide exactly far past the brute-force range
    for n in 1..=64 {
        assert!(count_asym_planar(n).unwrap() <= count_planar(n).unwrap());
        assert!(count_asym_rooted_planar(n).unwrap() <= count_rooted_planar(n).unwrap());
    }
}

#[test]
fn orbit_counts_and_sieve() {
    for n in 2..=9 {
        let t = orbit_table(n).unwrap();
        assert!(t.same_counts(&predicted_orbit_table(n).unwrap()), "n={n}");
        assert_eq!(t.total_elements(), catalan(n as u64));
        assert_eq!(t.total_orbits(), count_planar(n).unwrap());
    }
    for n in 0..=20 {
        let x = q_catalan(n).unwrap();
        assert_eq!(x.eval_at_one(), catalan(n as u64).into());
        if n > 0 {
            assert_eq!(x.degree(), Some(n * n - n));
        }
    }
    for n in 1..=7 {
        let burnside: u64 = (0..2 * n)
            .map(|c| fixed_point_count(n, c, Cap::default()).unwrap())
            .sum();
        let orbits: BigUint = orbit_table(n).unwrap().total_orbits();
        assert_eq!(BigUint::from(burnside), orbits * (2 * n));
    }
}
