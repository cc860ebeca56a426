//! Arc numbers.
//!
//! Cutting the circle at a set of gaps splits the points into blocks of
//! consecutive points. A block is usable as an arc embedding when it holds at
//! most one endpoint of every chord, and the arc number is the least number of
//! blocks in such a partition (1 for the empty diagram).

use serde::Serialize;

use crate::diagram::{ChordDiagram, GapIndex};
use crate::error::{Error, Result};

pub const DEFAULT_BRUTEFORCE_GUARD: usize = 8;

/// Cut gaps, kept sorted and distinct.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArcPartition {
    pub cuts: Vec<GapIndex>,
}

impl ArcPartition {
    pub fn new(mut cuts: Vec<GapIndex>) -> Self {
        cuts.sort();
        ArcPartition { cuts }
    }

    pub fn len(&self) -> usize {
        self.cuts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cuts.is_empty()
    }
}

/// Two antipodal gaps with every chord running from one side to the other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CuttingPair {
    pub g1: GapIndex,
    pub g2: GapIndex,
}

/// Outcome of scanning the antipodal gap pairs of a diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CuttingPairScan {
    /// Number of antipodal pairs examined; always `m`.
    pub inspected: usize,
    pub pairs: Vec<CuttingPair>,
}

/// The `m` antipodal gap pairs `(g_i, g_{i+m})`, `i = 0..m`.
pub fn antipodal_pairs(m: usize) -> impl Iterator<Item = (GapIndex, GapIndex)> {
    (0..m).map(move |i| (GapIndex(i), GapIndex(i + m)))
}

/// Whether the points `from+1, ..., from+len` (mod 2m) hold at most one
/// endpoint of every chord.
fn block_is_chord_free(
    c: &ChordDiagram,
    from_gap: usize,
    len: usize,
    seen: &mut [u32],
    stamp: u32,
) -> bool {
    let n = c.points();
    for k in 1..=len {
        let p = (from_gap + k) % n;
        if seen[c.partner(p)] == stamp {
            return false;
        }
        seen[p] = stamp;
    }
    true
}

fn cuts_are_valid(c: &ChordDiagram, cuts: &[usize]) -> bool {
    let n = c.points();
    let mut seen = vec![0u32; n];
    for (k, &g) in cuts.iter().enumerate() {
        let next = cuts[(k + 1) % cuts.len()];
        let len = if cuts.len() == 1 {
            n
        } else {
            (next + n - g) % n
        };
        if !block_is_chord_free(c, g, len, &mut seen, k as u32 + 1) {
            return false;
        }
    }
    true
}

pub fn is_valid_partition(c: &ChordDiagram, p: &ArcPartition) -> Result<bool> {
    if p.cuts.is_empty() {
        return Err(Error::EmptyCutSet);
    }
    if c.is_empty() {
        return Ok(true);
    }
    let n = c.points();
    let mut cuts: Vec<usize> = p.cuts.iter().map(|g| g.0).collect();
    cuts.sort_unstable();
    for w in cuts.windows(2) {
        if w[0] == w[1] {
            return Err(Error::DuplicateCut(w[0]));
        }
    }
    if let Some(&g) = cuts.iter().find(|&&g| g >= n) {
        return Err(Error::GapOutOfRange { gap: g, points: n });
    }
    Ok(cuts_are_valid(c, &cuts))
}

/// Greedy partition cut first at `start`, each block extended as far as it
/// stays chord-free. Returns the cuts in the order they were placed.
fn greedy_from(c: &ChordDiagram, start: usize, seen: &mut [u32], stamp: &mut u32) -> Vec<usize> {
    let n = c.points();
    let mut cuts = vec![start];
    *stamp += 1;
    for k in 1..=n {
        let p = (start + k) % n;
        if seen[c.partner(p)] == *stamp {
            cuts.push((p + n - 1) % n);
            *stamp += 1;
        }
        seen[p] = *stamp;
    }
    cuts
}

/// Least start gap and its greedy cut list among all optimal starts.
fn best_greedy(c: &ChordDiagram) -> Option<Vec<usize>> {
    let n = c.points();
    let mut seen = vec![0u32; n];
    let mut stamp = 0u32;
    let mut best: Option<Vec<usize>> = None;
    for start in 0..n {
        let cuts = greedy_from(c, start, &mut seen, &mut stamp);
        if best.as_ref().is_none_or(|b| cuts.len() < b.len()) {
            best = Some(cuts);
        }
    }
    best
}

/// Exact arc number by greedy scans from every starting gap.
pub fn arc_number(c: &ChordDiagram) -> usize {
    best_greedy(c).map_or(1, |cuts| cuts.len())
}

/// Exact arc number by exhaustive search over cut sets, smallest first.
pub fn arc_number_bruteforce(c: &ChordDiagram) -> Result<usize> {
    arc_number_bruteforce_with_guard(c, DEFAULT_BRUTEFORCE_GUARD)
}

pub fn arc_number_bruteforce_with_guard(c: &ChordDiagram, guard: usize) -> Result<usize> {
    let m = c.m();
    if m > guard {
        return Err(Error::GuardExceeded {
            limit: guard,
            actual: m,
        });
    }
    if m == 0 {
        return Ok(1);
    }
    let n = c.points();
    for k in 1..=n {
        let found = combinations(n, k).any(|cuts| cuts_are_valid(c, &cuts));
        if found {
            return Ok(k);
        }
    }
    Err(Error::Inconsistent(
        "cutting every gap must be a valid partition".into(),
    ))
}

/// k-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Option<Vec<usize>> = if k <= n { Some((0..k).collect()) } else { None };
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                cur = None;
                break;
            }
            i -= 1;
            if next[i] < n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                cur = Some(next);
                break;
            }
        }
        Some(out)
    })
}

/// A minimum partition: least starting gap among optima, greedy-maximal blocks.
pub fn min_partition(c: &ChordDiagram) -> Result<ArcPartition> {
    let cuts = best_greedy(c).ok_or(Error::EmptyDiagram)?;
    Ok(ArcPartition::new(cuts.into_iter().map(GapIndex).collect()))
}

fn is_cutting(c: &ChordDiagram, i: usize, side: &mut [bool]) -> bool {
    let m = c.m();
    let n = c.points();
    side.fill(false);
    for k in 1..=m {
        side[(i + k) % n] = true;
    }
    (0..n).all(|p| side[p] != side[c.partner(p)])
}

/// Examines all `m` antipodal pairs and collects the cutting ones.
pub fn scan_cutting_pairs(c: &ChordDiagram) -> Result<CuttingPairScan> {
    if c.is_empty() {
        return Err(Error::EmptyDiagram);
    }
    let mut side = vec![false; c.points()];
    let mut scan = CuttingPairScan {
        inspected: 0,
        pairs: Vec::new(),
    };
    for (g1, g2) in antipodal_pairs(c.m()) {
        scan.inspected += 1;
        if is_cutting(c, g1.0, &mut side) {
            scan.pairs.push(CuttingPair { g1, g2 });
        }
    }
    Ok(scan)
}

/// First cutting pair among the antipodal pairs, if any. Present iff the arc
/// number is 2.
pub fn find_cutting_pair(c: &ChordDiagram) -> Result<Option<CuttingPair>> {
    if c.is_empty() {
        return Err(Error::EmptyDiagram);
    }
    let mut side = vec![false; c.points()];
    Ok(antipodal_pairs(c.m())
        .find(|&(g1, _)| is_cutting(c, g1.0, &mut side))
        .map(|(g1, g2)| CuttingPair { g1, g2 }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> ChordDiagram {
        s.parse().unwrap()
    }

    fn gaps(v: &[usize]) -> ArcPartition {
        ArcPartition::new(v.iter().map(|&g| GapIndex(g)).collect())
    }

    #[test]
    fn partition_validity() {
        assert!(is_valid_partition(&d("0-2 1-3"), &gaps(&[0, 2])).unwrap());
        assert!(!is_valid_partition(&d("0-1 2-3 4-5"), &gaps(&[1, 4])).unwrap());
        assert!(is_valid_partition(&ChordDiagram::empty(), &gaps(&[0])).unwrap());
        assert_eq!(
            is_valid_partition(&d("0-1"), &gaps(&[])),
            Err(Error::EmptyCutSet)
        );
        assert_eq!(
            is_valid_partition(&d("0-1"), &gaps(&[1, 1])),
            Err(Error::DuplicateCut(1))
        );
        assert_eq!(
            is_valid_partition(&d("0-1"), &gaps(&[0, 2])),
            Err(Error::GapOutOfRange { gap: 2, points: 2 })
        );
        assert!(!is_valid_partition(&d("0-1"), &gaps(&[0])).unwrap());
    }

    #[test]
    fn arc_numbers() {
        assert_eq!(arc_number(&ChordDiagram::empty()), 1);
        assert_eq!(arc_number(&d("0-1 2-3 4-5")), 3);
        assert_eq!(arc_number(&d("0-3 1-4 2-5")), 2);
        assert_eq!(arc_number(&d("0-1")), 2);
    }

    #[test]
    fn bruteforce() {
        assert_eq!(arc_number_bruteforce(&d("0-3 2-5 4-7 6-9 8-1")), Ok(3));
        assert_eq!(arc_number_bruteforce(&d("0-1")), Ok(2));
        assert_eq!(arc_number_bruteforce(&ChordDiagram::empty()), Ok(1));
        assert_eq!(
            arc_number_bruteforce_with_guard(&d("0-1 2-3 4-5"), 2),
            Err(Error::GuardExceeded {
                limit: 2,
                actual: 3
            })
        );
    }

    #[test]
    fn combinations_are_complete() {
        assert_eq!(combinations(5, 2).count(), 10);
        assert_eq!(
            combinations(4, 4).collect::<Vec<_>>(),
            vec![vec![0, 1, 2, 3]]
        );
        assert_eq!(combinations(3, 0).count(), 1);
    }

    #[test]
    fn min_partitions() {
        assert_eq!(min_partition(&d("0-2 1-3")).unwrap(), gaps(&[0, 2]));
        let c3 = d("0-1 2-3 4-5");
        let p = min_partition(&c3).unwrap();
        assert_eq!(p.len(), 3);
        assert!(is_valid_partition(&c3, &p).unwrap());
        assert_eq!(min_partition(&d("0-1")).unwrap(), gaps(&[0, 1]));
        assert_eq!(
            min_partition(&ChordDiagram::empty()),
            Err(Error::EmptyDiagram)
        );
    }

    #[test]
    fn cutting_pairs() {
        assert_eq!(
            find_cutting_pair(&d("0-2 1-3")).unwrap(),
            Some(CuttingPair {
                g1: GapIndex(0),
                g2: GapIndex(2)
            })
        );
        assert_eq!(find_cutting_pair(&d("0-1 2-3 4-5")).unwrap(), None);
        assert_eq!(
            find_cutting_pair(&d("0-1")).unwrap(),
            Some(CuttingPair {
                g1: GapIndex(0),
                g2: GapIndex(1)
            })
        );
        assert_eq!(
            find_cutting_pair(&ChordDiagram::empty()),
            Err(Error::EmptyDiagram)
        );
        let scan = scan_cutting_pairs(&d("0-3 1-4 2-5")).unwrap();
        assert_eq!(scan.inspected, 3);
        assert_eq!(scan.pairs.len(), 3);
    }
}
