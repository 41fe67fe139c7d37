//! Noncrossing partitions of `[1, n]`, the refinement lattice NC(n), and the
//! Kreweras complement.
//!
//! Partitions are always stored canonically: elements ascending inside each
//! block, blocks ordered by their minimum. Structural equality is therefore
//! partition equality.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::tree::{enumerate_trees_capped, rho};
use crate::{Cap, Error, Result};

/// A noncrossing set partition of `[1, n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPartition")]
pub struct NoncrossingPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl TryFrom<RawPartition> for NoncrossingPartition {
    type Error = Error;

    fn try_from(raw: RawPartition) -> Result<Self> {
        NoncrossingPartition::new(raw.n, raw.blocks)
    }
}

fn validate_partition(blocks: &[Vec<usize>], n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidPartition(
            "ground set must be non-empty".into(),
        ));
    }
    let mut seen = vec![false; n + 1];
    for block in blocks {
        if block.is_empty() {
            return Err(Error::InvalidPartition("empty block".into()));
        }
        for &x in block {
            if x == 0 || x > n {
                return Err(Error::InvalidPartition(format!(
                    "element {x} outside [1, {n}]"
                )));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPartition(format!("element {x} repeated")));
            }
        }
    }
    if let Some(missing) = (1..=n).find(|&x| !seen[x]) {
        return Err(Error::InvalidPartition(format!(
            "element {missing} missing"
        )));
    }
    Ok(())
}

fn canonicalize(mut blocks: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for b in &mut blocks {
        b.sort_unstable();
    }
    blocks.sort_unstable_by_key(|b| b[0]);
    blocks
}

/// Finds a crossing quadruple `a < b < c < d` in a canonical partition of `[1, n]`.
///
/// Single left-to-right scan with a stack of blocks that have been opened but
/// not finished: an element is legal only if its block is new or on top.
fn find_crossing(blocks: &[Vec<usize>], n: usize) -> Option<(usize, usize, usize, usize)> {
    let mut block_of = vec![0; n + 1];
    for (k, b) in blocks.iter().enumerate() {
        for &x in b {
            block_of[x] = k;
        }
    }
    // previous element of the same block, 0 for block minima
    let mut prev = vec![0; n + 1];
    for b in blocks {
        for w in b.windows(2) {
            prev[w[1]] = w[0];
        }
    }
    let mut stack: Vec<usize> = Vec::new();
    for x in 1..=n {
        let k = block_of[x];
        let block = &blocks[k];
        if block[0] != x {
            let top = *stack.last().expect("an open block is on the stack");
            if top != k {
                let other = &blocks[top];
                // `top` opened after prev[x] and has not finished yet.
                let b = *other.iter().find(|&&y| y > prev[x]).unwrap();
                let d = *other.iter().find(|&&y| y > x).unwrap();
                return Some((prev[x], b, x, d));
            }
        }
        let is_last = *block.last().unwrap() == x;
        match (block[0] == x, is_last) {
            (true, false) => stack.push(k),
            (false, true) => {
                stack.pop();
            }
            _ => {}
        }
    }
    None
}

/// Whether `blocks` (any order) is a noncrossing partition of `[1, n]`.
///
/// Fails if `blocks` is not a set partition of `[1, n]` at all.
pub fn is_noncrossing(blocks: &[Vec<usize>], n: usize) -> Result<bool> {
    validate_partition(blocks, n)?;
    let canonical = canonicalize(blocks.to_vec());
    Ok(find_crossing(&canonical, n).is_none())
}

impl NoncrossingPartition {
    /// Validates and canonicalises. Crossing input is rejected with the
    /// offending quadruple.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        validate_partition(&blocks, n)?;
        let blocks = canonicalize(blocks);
        if let Some((a, b, c, d)) = find_crossing(&blocks, n) {
            return Err(Error::Crossing { a, b, c, d });
        }
        Ok(Self { n, blocks })
    }

    /// Builds a partition from a block label per element (`labels[i]` is the
    /// label of `i + 1`). The caller guarantees the result is noncrossing.
    pub(crate) fn from_labels(labels: &[usize]) -> Self {
        let n = labels.len();
        // Scanning elements in order already yields the canonical form.
        let blocks = blocks_from_labels(labels);
        debug_assert!(find_crossing(&blocks, n).is_none());
        Self { n, blocks }
    }

    /// The one-block partition `{[1, n]}`.
    pub fn top(n: usize) -> Self {
        assert!(n >= 1, "NC(n) needs n >= 1");
        Self {
            n,
            blocks: vec![(1..=n).collect()],
        }
    }

    /// The all-singletons partition.
    pub fn bottom(n: usize) -> Self {
        assert!(n >= 1, "NC(n) needs n >= 1");
        Self {
            n,
            blocks: (1..=n).map(|i| vec![i]).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_top(&self) -> bool {
        self.blocks.len() == 1
    }

    pub fn is_bottom(&self) -> bool {
        self.blocks.len() == self.n
    }

    /// `index[x]` is the position in [`blocks`](Self::blocks) of the block
    /// containing `x`. Index 0 is unused.
    pub fn block_index(&self) -> Vec<usize> {
        let mut index = vec![0; self.n + 1];
        for (k, b) in self.blocks.iter().enumerate() {
            for &x in b {
                index[x] = k;
            }
        }
        index
    }

    /// Every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Self) -> Result<bool> {
        same_size(self, other)?;
        let index = other.block_index();
        Ok(self
            .blocks
            .iter()
            .all(|b| b.iter().all(|&x| index[x] == index[b[0]])))
    }
}

fn same_size(p: &NoncrossingPartition, q: &NoncrossingPartition) -> Result<()> {
    if p.n != q.n {
        return Err(Error::SizeMismatch {
            left: p.n,
            right: q.n,
        });
    }
    Ok(())
}

/// The Kreweras complement.
///
/// Interleave primed points `1 < 1' < 2 < 2' < ... < n < n'`. The complement is
/// the coarsest partition of the primed points whose union with `p` is still
/// noncrossing. Walking the interleaved order, the primed point `i'` is
/// followed in its block by `j'` where `j` is the predecessor of `i + 1`
/// (cyclically) inside its block of `p`; the blocks of the complement are the
/// cycles of that map.
pub fn kreweras(p: &NoncrossingPartition) -> NoncrossingPartition {
    let n = p.n;
    let mut pred = vec![0; n + 1];
    for b in &p.blocks {
        for (k, &x) in b.iter().enumerate() {
            pred[x] = b[(k + b.len() - 1) % b.len()];
        }
    }
    let next = |i: usize| pred[i % n + 1];
    let mut labels = vec![usize::MAX; n];
    for start in 1..=n {
        if labels[start - 1] != usize::MAX {
            continue;
        }
        let mut x = start;
        while labels[x - 1] == usize::MAX {
            labels[x - 1] = start;
            x = next(x);
        }
    }
    NoncrossingPartition::from_labels(&labels)
}

/// Relabels every element `j` as `j - i (mod n)`, represented in `[1, n]`.
pub fn rotate_nc(p: &NoncrossingPartition, i: i64) -> NoncrossingPartition {
    let n = p.n as i64;
    let shift = i.rem_euclid(n);
    let mut labels = vec![0; p.n];
    for (k, b) in p.blocks.iter().enumerate() {
        for &x in b {
            let y = (x as i64 - 1 - shift).rem_euclid(n) as usize;
            labels[y] = k;
        }
    }
    NoncrossingPartition::from_labels(&labels)
}

/// Greatest lower bound: the common refinement.
pub fn nc_meet(p: &NoncrossingPartition, q: &NoncrossingPartition) -> Result<NoncrossingPartition> {
    same_size(p, q)?;
    let pi = p.block_index();
    let qi = q.block_index();
    let labels: Vec<usize> = (1..=p.n).map(|x| pi[x] * q.blocks.len() + qi[x]).collect();
    Ok(NoncrossingPartition::from_labels(&labels))
}

/// Least upper bound in NC(n): the join in the full partition lattice, then
/// crossing blocks merged until none cross.
pub fn nc_join(p: &NoncrossingPartition, q: &NoncrossingPartition) -> Result<NoncrossingPartition> {
    same_size(p, q)?;
    let n = p.n;
    let mut dsu = Dsu::new(n + 1);
    for b in p.blocks.iter().chain(&q.blocks) {
        for &x in &b[1..] {
            dsu.union(b[0], x);
        }
    }
    loop {
        let labels: Vec<usize> = (1..=n).map(|x| dsu.find(x)).collect();
        let blocks = blocks_from_labels(&labels);
        match find_crossing(&blocks, n) {
            None => return Ok(NoncrossingPartition { n, blocks }),
            Some((a, b, _, _)) => dsu.union(a, b),
        }
    }
}

fn blocks_from_labels(labels: &[usize]) -> Vec<Vec<usize>> {
    let mut slot = std::collections::HashMap::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for (i, &l) in labels.iter().enumerate() {
        let k = *slot.entry(l).or_insert_with(|| {
            blocks.push(Vec::new());
            blocks.len() - 1
        });
        blocks[k].push(i + 1);
    }
    blocks
}

/// `p` and `q` are lattice complements: join is the top and meet the bottom.
pub fn is_complement(p: &NoncrossingPartition, q: &NoncrossingPartition) -> Result<bool> {
    Ok(nc_meet(p, q)?.is_bottom() && nc_join(p, q)?.is_top())
}

/// All of NC(n), in the order of their plane trees' Dyck words (lexicographic,
/// `(` before `)`), mapped through [`rho`]. Uses the default cap.
pub fn enumerate_nc(n: usize) -> Result<impl Iterator<Item = NoncrossingPartition>> {
    enumerate_nc_capped(n, Cap::default())
}

pub fn enumerate_nc_capped(
    n: usize,
    cap: Cap,
) -> Result<impl Iterator<Item = NoncrossingPartition>> {
    Ok(enumerate_trees_capped(n, cap)?.map(|t| rho(&t)))
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(len: usize) -> Self {
        Self {
            parent: (0..len).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Text form: blocks joined by `/`, elements by `,`, e.g. `1,3/2`.
impl fmt::Display for NoncrossingPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, b) in self.blocks.iter().enumerate() {
            if k > 0 {
                f.write_str("/")?;
            }
            for (t, x) in b.iter().enumerate() {
                if t > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

/// Parses the text form. `n` is the number of elements; block and element
/// order are free.
impl FromStr for NoncrossingPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty partition".into()));
        }
        let blocks = s
            .split('/')
            .map(|block| {
                block
                    .split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad element {x:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let n = blocks.iter().map(Vec::len).sum();
        Self::new(n, blocks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nc(s: &str) -> NoncrossingPartition {
        s.parse().unwrap()
    }

    #[test]
    fn crossing_detection() {
        assert!(!is_noncrossing(&[vec![1, 3], vec![2, 4]], 4).unwrap());
        assert!(is_noncrossing(&[vec![1, 4], vec![2, 3]], 4).unwrap());
        assert!(is_noncrossing(&[vec![1, 2, 3, 4]], 4).unwrap());
        assert!(is_noncrossing(&[vec![4, 1], vec![3], vec![2]], 4).unwrap());
    }

    #[test]
    fn invalid_partitions() {
        let bad = |blocks: Vec<Vec<usize>>, n| {
            matches!(is_noncrossing(&blocks, n), Err(Error::InvalidPartition(_)))
        };
        assert!(bad(vec![vec![1, 2], vec![2]], 2));
        assert!(bad(vec![vec![1]], 2));
        assert!(bad(vec![vec![1, 5]], 2));
        assert!(bad(vec![vec![0, 1]], 1));
        assert!(bad(vec![vec![1], vec![]], 1));
    }

    #[test]
    fn crossing_reports_quadruple() {
        let err = NoncrossingPartition::new(4, vec![vec![1, 3], vec![2, 4]]).unwrap_err();
        assert_eq!(
            err,
            Error::Crossing {
                a: 1,
                b: 2,
                c: 3,
                d: 4
            }
        );
        let err =
            NoncrossingPartition::new(6, vec![vec![1, 5], vec![2, 3, 6], vec![4]]).unwrap_err();
        let Error::Crossing { a, b, c, d } = err else {
            panic!()
        };
        assert!(a < b && b < c && c < d);
    }

    #[test]
    fn text_form() {
        let p = nc("2/3,1");
        assert_eq!(p.to_string(), "1,3/2");
        assert_eq!(p.blocks(), &[vec![1, 3], vec![2]]);
        assert_eq!(nc("1").n(), 1);
        assert!(matches!(
            "1,x".parse::<NoncrossingPartition>(),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            "".parse::<NoncrossingPartition>(),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            "1,3/2,4".parse::<NoncrossingPartition>(),
            Err(Error::Crossing { .. })
        ));
    }

    #[test]
    fn structured_form() {
        let p: NoncrossingPartition =
            serde_json::from_str(r#"{"n": 3, "blocks": [[2], [3, 1]]}"#).unwrap();
        assert_eq!(p, nc("1,3/2"));
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"n":3,"blocks":[[1,3],[2]]}"#
        );
        assert!(
            serde_json::from_str::<NoncrossingPartition>(r#"{"n":4,"blocks":[[1,3],[2,4]]}"#)
                .is_err()
        );
    }

    #[test]
    fn kreweras_examples() {
        assert_eq!(
            kreweras(&NoncrossingPartition::top(4)),
            NoncrossingPartition::bottom(4)
        );
        assert_eq!(kreweras(&nc("1,3/2")), nc("1,2/3"));
        assert_eq!(
            kreweras(&NoncrossingPartition::bottom(2)),
            NoncrossingPartition::top(2)
        );
        assert_eq!(kreweras(&nc("1")), nc("1"));
    }

    #[test]
    fn rotation_examples() {
        let p = nc("1,2/3/4");
        assert_eq!(rotate_nc(&p, 0), p);
        assert_eq!(rotate_nc(&p, 4), p);
        assert_eq!(rotate_nc(&p, -4), p);
        assert_eq!(rotate_nc(&p, 1), nc("1,4/2/3"));
        assert_eq!(rotate_nc(&p, -1), nc("1/2,3/4"));
    }

    #[test]
    fn lattice_operations() {
        let p = nc("1,3/2/4");
        let q = nc("2,4/1/3");
        assert_eq!(nc_meet(&p, &p).unwrap(), p);
        assert_eq!(nc_join(&p, &p).unwrap(), p);
        assert_eq!(nc_join(&p, &q).unwrap(), NoncrossingPartition::top(4));
        assert_eq!(nc_meet(&p, &q).unwrap(), NoncrossingPartition::bottom(4));
        assert_eq!(
            nc_join(&nc("1,2/3/4/5"), &nc("1/2/3,4/5")).unwrap(),
            nc("1,2/3,4/5")
        );
        assert_eq!(
            nc_meet(&nc("1,2,3/4"), &nc("1/2,3,4")).unwrap(),
            nc("1/2,3/4")
        );
        assert!(matches!(
            nc_join(&p, &nc("1,2")),
            Err(Error::SizeMismatch { left: 4, right: 2 })
        ));
        assert!(matches!(
            nc_meet(&p, &nc("1,2")),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn complements() {
        let top = NoncrossingPartition::top(2);
        assert!(is_complement(&top, &NoncrossingPartition::bottom(2)).unwrap());
        assert!(!is_complement(&top, &top).unwrap());
        assert!(is_complement(&nc("1,3/2/4"), &nc("2,4/1/3")).unwrap());
        assert!(matches!(
            is_complement(&top, &nc("1")),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn refinement() {
        let p = nc("1/2,3/4");
        assert!(p.refines(&nc("1,2,3/4")).unwrap());
        assert!(!nc("1,2,3/4").refines(&p).unwrap());
        assert!(NoncrossingPartition::bottom(4).refines(&p).unwrap());
        assert!(p.refines(&NoncrossingPartition::top(4)).unwrap());
    }

    #[test]
    fn enumeration_sizes() {
        let sizes: Vec<usize> = (1..=6).map(|n| enumerate_nc(n).unwrap().count()).collect();
        assert_eq!(sizes, [1, 2, 5, 14, 42, 132]);
        assert_eq!(enumerate_nc(1).unwrap().next().unwrap().to_string(), "1");
        assert!(matches!(
            enumerate_nc(13).err(),
            Some(Error::ResourceLimit { n: 13, cap: 12 })
        ));
    }
}
