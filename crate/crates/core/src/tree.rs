//! Plane trees on boundary indices `[1, 2n]`.
//!
//! Walking around a plane tree with `n` edges counter-clockwise from the root
//! visits `2n` edge sides; edge `(i, j)` has index `i` on its left side and
//! `j` on its right. The edge set is a noncrossing perfect matching of
//! `[1, 2n]`, and reading `(` at every left index and `)` at every right index
//! gives the tree's Dyck word.
//!
//! [`phi`] reroots a tree by shifting every index one step (`k -> k - 1`,
//! `1 -> 2n`). Under the bijection [`rho`] onto noncrossing partitions this is
//! exactly the Kreweras complement.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::partition::{kreweras, NoncrossingPartition};
use crate::{Cap, Error, Result};

const OPEN: u8 = b'(';
const CLOSE: u8 = b')';

/// An edge as its two boundary indices `(i, j)`, `i < j`.
pub type Edge = (usize, usize);

/// A plane tree with `n >= 1` edges.
///
/// Ordered by Dyck word with `(` before `)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "RawEdges", try_from = "RawEdges")]
pub struct PlaneTree {
    word: Vec<u8>,
    /// 0-based partner of every boundary position.
    mate: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawEdges {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl From<PlaneTree> for RawEdges {
    fn from(t: PlaneTree) -> Self {
        RawEdges {
            n: t.n(),
            edges: t.edges(),
        }
    }
}

impl TryFrom<RawEdges> for PlaneTree {
    type Error = Error;

    fn try_from(raw: RawEdges) -> Result<Self> {
        PlaneTree::from_edges(raw.n, &raw.edges)
    }
}

/// Parity of an edge: odd when its left index is odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Odd,
    Even,
}

/// Parity of edge `(i, j)`.
pub fn edge_parity(edge: (usize, usize)) -> Parity {
    if edge.0 % 2 == 1 {
        Parity::Odd
    } else {
        Parity::Even
    }
}

fn mates_from_word(word: &[u8]) -> Result<Vec<usize>> {
    if word.is_empty() || !word.len().is_multiple_of(2) {
        return Err(Error::InvalidDyckWord(format!(
            "length must be even and positive, got {}",
            word.len()
        )));
    }
    let mut mate = vec![0; word.len()];
    let mut stack = Vec::new();
    for (p, &c) in word.iter().enumerate() {
        match c {
            OPEN => stack.push(p),
            CLOSE => {
                let q = stack.pop().ok_or_else(|| {
                    Error::InvalidDyckWord(format!("unmatched ')' at position {}", p + 1))
                })?;
                mate[p] = q;
                mate[q] = p;
            }
            other => {
                return Err(Error::InvalidDyckWord(format!(
                    "unexpected character {:?}",
                    other as char
                )))
            }
        }
    }
    if !stack.is_empty() {
        return Err(Error::InvalidDyckWord(format!(
            "{} unclosed '('",
            stack.len()
        )));
    }
    Ok(mate)
}

impl PlaneTree {
    /// Parses a Dyck word over `(` and `)`.
    pub fn from_dyck(word: &str) -> Result<Self> {
        let word = word.as_bytes().to_vec();
        let mate = mates_from_word(&word)?;
        Ok(Self { word, mate })
    }

    /// Builds a tree from its `n` edges `(i, j)`, `1 <= i < j <= 2n`, in any order.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let matching = Matching::from_pairs(n, edges)?;
        if !matching.is_noncrossing() {
            return Err(Error::InvalidMatching("edges cross".into()));
        }
        Ok(Self::from_mates(matching.mate))
    }

    /// The word is read off the matching: a position opens iff its partner is later.
    fn from_mates(mate: Vec<usize>) -> Self {
        let word = mate
            .iter()
            .enumerate()
            .map(|(p, &q)| if q > p { OPEN } else { CLOSE })
            .collect();
        Self { word, mate }
    }

    pub fn n(&self) -> usize {
        self.word.len() / 2
    }

    pub fn to_dyck(&self) -> String {
        String::from_utf8(self.word.clone()).expect("Dyck words are ASCII")
    }

    pub fn dyck_bytes(&self) -> &[u8] {
        &self.word
    }

    /// Edges `(i, j)` with 1-based boundary indices, sorted by `i`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.mate
            .iter()
            .enumerate()
            .filter(|&(p, &q)| q > p)
            .map(|(p, &q)| (p + 1, q + 1))
            .collect()
    }

    /// 1-based partner of boundary index `i`.
    pub fn mate_of(&self, i: usize) -> usize {
        self.mate[i - 1] + 1
    }

    pub fn matching(&self) -> Matching {
        Matching {
            mate: self.mate.clone(),
        }
    }

    /// Relabels every boundary index `k` as `k + c (mod 2n)`.
    pub fn rotate(&self, c: i64) -> Self {
        let len = self.mate.len() as i64;
        let shift = |p: usize| (p as i64 + c).rem_euclid(len) as usize;
        let mut mate = vec![0; self.mate.len()];
        for (p, &q) in self.mate.iter().enumerate() {
            mate[shift(p)] = shift(q);
        }
        Self::from_mates(mate)
    }

    /// Whether rotating the chord diagram by `c` positions leaves it unchanged.
    pub fn is_fixed_by_rotation(&self, c: i64) -> bool {
        let len = self.mate.len() as i64;
        let shift = |p: usize| (p as i64 + c).rem_euclid(len) as usize;
        self.mate
            .iter()
            .enumerate()
            .all(|(p, &q)| self.mate[shift(p)] == shift(q))
    }

    /// Every edge with its parent edge, `None` for edges at the root.
    pub fn parent_edges(&self) -> Vec<(Edge, Option<Edge>)> {
        let mut out = Vec::with_capacity(self.n());
        let mut stack: Vec<Edge> = Vec::new();
        for (p, &q) in self.mate.iter().enumerate() {
            if q > p {
                let edge = (p + 1, q + 1);
                out.push((edge, stack.last().copied()));
                stack.push(edge);
            } else {
                stack.pop();
            }
        }
        out
    }

    /// The Dyck words of the root's subtrees, left to right, each wrapped
    /// in the edge that joins it to the root.
    pub fn root_components(&self) -> Vec<&[u8]> {
        let mut out = Vec::new();
        let mut p = 0;
        while p < self.word.len() {
            let q = self.mate[p];
            out.push(&self.word[p..=q]);
            p = q + 1;
        }
        out
    }
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(std::str::from_utf8(&self.word).expect("Dyck words are ASCII"))
    }
}

impl FromStr for PlaneTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_dyck(s.trim())
    }
}

/// The star `tp_n = {(2i - 1, 2i)}`: `n` leaves hanging off the root.
pub fn star_tp(n: usize) -> PlaneTree {
    assert!(n >= 1, "plane trees need n >= 1");
    PlaneTree::from_dyck(&"()".repeat(n)).unwrap()
}

/// The star `bt_n = {(1, 2n)} ∪ {(2i, 2i + 1)}`: the same star rooted at a leaf.
pub fn star_bt(n: usize) -> PlaneTree {
    assert!(n >= 1, "plane trees need n >= 1");
    PlaneTree::from_dyck(&format!("({})", "()".repeat(n - 1))).unwrap()
}

/// Reroots by shifting every boundary index one step: `(1, k) -> (k - 1, 2n)`
/// and `(i, j) -> (i - 1, j - 1)` otherwise.
pub fn phi(t: &PlaneTree) -> PlaneTree {
    t.rotate(-1)
}

pub fn phi_inverse(t: &PlaneTree) -> PlaneTree {
    t.rotate(1)
}

/// Groups edges into tree-partition parts and projects each part's odd
/// boundary indices `2i - 1 -> i`.
///
/// `odd_vertices = false` gives the parts of [`rho`]: the odd child edges of
/// an even vertex plus its (even) parent edge. `true` gives [`rho_bar`]: the
/// even child edges of an odd vertex plus its (odd) parent edge.
fn tree_partition(t: &PlaneTree, odd_vertices: bool) -> NoncrossingPartition {
    let n = t.n();
    let mut labels = vec![0; n];
    // Part key: the vertex the part hangs from, named by its parent edge's
    // left index (0 for the root).
    for ((i, j), parent) in t.parent_edges() {
        let odd = i % 2 == 1;
        let key = if odd != odd_vertices {
            parent.map_or(0, |(pi, _)| pi)
        } else {
            i
        };
        let odd_index = if odd { i } else { j };
        labels[odd_index.div_ceil(2) - 1] = key;
    }
    NoncrossingPartition::from_labels(&labels)
}

/// The bijection from plane trees to NC(n) built on the star `bt_n`.
///
/// `rho(tp_n)` is the top and `rho(bt_n)` the bottom of NC(n).
pub fn rho(t: &PlaneTree) -> NoncrossingPartition {
    tree_partition(t, false)
}

/// The dual bijection built on `tp_n`; equals `kreweras(rho(t))`.
pub fn rho_bar(t: &PlaneTree) -> NoncrossingPartition {
    tree_partition(t, true)
}

/// The unique tree with `rho(t) == p`.
///
/// Reads the Dyck word off `p` and its Kreweras complement. Position `2i - 1`
/// closes an even edge exactly when `i` is the largest element of a block of
/// `p` other than the root's block (the one containing 1). Position `2i`
/// closes an odd edge exactly when `i` is the largest element of its block in
/// the complement.
pub fn rho_inverse(p: &NoncrossingPartition) -> PlaneTree {
    let n = p.n();
    let k = kreweras(p);
    let last_of = |q: &NoncrossingPartition| {
        let mut last = vec![false; n + 1];
        for b in q.blocks() {
            last[*b.last().unwrap()] = true;
        }
        last
    };
    let p_last = last_of(p);
    let k_last = last_of(&k);
    let root_block = &p.blocks()[0];
    let mut word = Vec::with_capacity(2 * n);
    for i in 1..=n {
        let closes = p_last[i] && *root_block.last().unwrap() != i;
        word.push(if closes { CLOSE } else { OPEN });
        word.push(if k_last[i] { CLOSE } else { OPEN });
    }
    let mate = mates_from_word(&word).expect("rho_inverse always yields a Dyck word");
    PlaneTree { word, mate }
}

/// A perfect matching on `2n` points, as chords of a circle.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    mate: Vec<usize>,
}

impl Matching {
    /// Checks perfection only; see [`is_noncrossing`](Self::is_noncrossing).
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidMatching("need at least one chord".into()));
        }
        if pairs.len() != n {
            return Err(Error::InvalidMatching(format!(
                "expected {n} chords, got {}",
                pairs.len()
            )));
        }
        let mut mate = vec![usize::MAX; 2 * n];
        for &(a, b) in pairs {
            let (i, j) = (a.min(b), a.max(b));
            if i == 0 || j > 2 * n || i == j {
                return Err(Error::InvalidMatching(format!("bad chord ({a}, {b})")));
            }
            if mate[i - 1] != usize::MAX || mate[j - 1] != usize::MAX {
                return Err(Error::InvalidMatching(format!(
                    "endpoint reused in ({a}, {b})"
                )));
            }
            mate[i - 1] = j - 1;
            mate[j - 1] = i - 1;
        }
        Ok(Self { mate })
    }

    pub fn n(&self) -> usize {
        self.mate.len() / 2
    }

    /// Chords `(i, j)`, `i < j`, sorted by `i`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.mate
            .iter()
            .enumerate()
            .filter(|&(p, &q)| q > p)
            .map(|(p, &q)| (p + 1, q + 1))
            .collect()
    }

    pub fn is_noncrossing(&self) -> bool {
        let mut stack = Vec::new();
        for (p, &q) in self.mate.iter().enumerate() {
            if q > p {
                stack.push(p);
            } else if stack.pop() != Some(q) {
                return false;
            }
        }
        true
    }

    /// The closed loops formed by drawing `self` above a line and
    /// `other` below it. Each loop lists its endpoints in traversal order,
    /// starting from its smallest.
    pub fn loops_with(&self, other: &Matching) -> Result<Vec<Vec<usize>>> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let mut seen = vec![false; self.mate.len()];
        let mut loops = Vec::new();
        for start in 0..self.mate.len() {
            if seen[start] {
                continue;
            }
            let mut path = Vec::new();
            let mut x = start;
            loop {
                let y = self.mate[x];
                seen[x] = true;
                seen[y] = true;
                path.push(x + 1);
                path.push(y + 1);
                x = other.mate[y];
                if x == start {
                    break;
                }
            }
            loops.push(path);
        }
        Ok(loops)
    }
}

/// Whether `a` and `b` together trace a single closed loop through all `2n`
/// endpoints, i.e. the permutation `b ∘ a` is one cycle.
pub fn is_meander(a: &Matching, b: &Matching) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    let mut x = 0;
    let mut steps = 0;
    loop {
        x = b.mate[a.mate[x]];
        steps += 1;
        if x == 0 {
            break;
        }
    }
    Ok(steps == a.n())
}

/// All plane trees with `n` edges in lexicographic Dyck order. Uses the default cap.
pub fn enumerate_trees(n: usize) -> Result<DyckWords> {
    enumerate_trees_capped(n, Cap::default())
}

pub fn enumerate_trees_capped(n: usize, cap: Cap) -> Result<DyckWords> {
    if n == 0 {
        return Err(Error::Domain("plane trees need n >= 1".into()));
    }
    cap.check(n)?;
    let mut first = vec![OPEN; n];
    first.resize(2 * n, CLOSE);
    Ok(DyckWords {
        n,
        next: Some(first),
    })
}

/// Iterator over Dyck words of semilength `n` in lexicographic order.
#[derive(Debug, Clone)]
pub struct DyckWords {
    n: usize,
    next: Option<Vec<u8>>,
}

impl DyckWords {
    /// Lexicographic successor: turn the rightmost `(` that can become `)`
    /// into one, then complete with as many `(` as possible.
    fn successor(&self, word: &[u8]) -> Option<Vec<u8>> {
        let n = self.n;
        let mut opens_before: usize = word.iter().filter(|&&c| c == OPEN).count();
        for i in (0..word.len()).rev() {
            if word[i] == OPEN {
                opens_before -= 1;
                let depth_before = 2 * opens_before as isize - i as isize;
                if depth_before >= 1 && opens_before < n {
                    let mut out = word[..i].to_vec();
                    out.push(CLOSE);
                    let opens_left = n - opens_before;
                    out.extend(std::iter::repeat_n(OPEN, opens_left));
                    out.resize(2 * n, CLOSE);
                    return Some(out);
                }
            }
        }
        None
    }
}

impl Iterator for DyckWords {
    type Item = PlaneTree;

    fn next(&mut self) -> Option<PlaneTree> {
        let word = self.next.take()?;
        self.next = self.successor(&word);
        let mate = mates_from_word(&word).expect("enumeration yields Dyck words");
        Some(PlaneTree { word, mate })
    }
}
