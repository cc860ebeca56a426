//! The odd obstruction family `C_{2n+1}`, minimal obstructions, and diagrams
//! whose chords all have length `m - 2`.

use rayon::prelude::*;
use serde::Serialize;

use crate::arcnum::arc_number;
use crate::diagram::{length_of, Chord, ChordDiagram};
use crate::error::{Error, Result};

pub const DEFAULT_SUBSET_GUARD: usize = 14;

/// The `(2n+1)`-chord obstruction on `4n+2` points: chords join `2i` and
/// `2i + 2n - 1 (mod 4n+2)` for `i = 0..=2n`.
pub fn make_c(n: usize) -> Result<ChordDiagram> {
    if n < 1 {
        return Err(Error::ParameterTooSmall { min: 1, got: n });
    }
    let points = 4 * n + 2;
    let chords: Vec<(usize, usize)> = (0..=2 * n)
        .map(|i| (2 * i, (2 * i + 2 * n - 1) % points))
        .collect();
    ChordDiagram::from_chords(&chords)
}

/// `Some(n)` iff `c` is equivalent to `make_c(n)`.
pub fn is_c_odd(c: &ChordDiagram) -> Option<usize> {
    let m = c.m();
    if m < 3 || m.is_multiple_of(2) {
        return None;
    }
    let n = (m - 1) / 2;
    let target = make_c(n).ok()?;
    (c.canonical_code() == target.canonical_code()).then_some(n)
}

/// Every chord has length exactly `m - 2`.
pub fn satisfies_star(c: &ChordDiagram) -> Result<bool> {
    let m = c.m();
    if m < 3 {
        return Err(Error::TooSmall(m));
    }
    Ok(c.chords()
        .iter()
        .all(|&ch| length_of(ch, c.points()) == m - 2))
}

/// Arc number at least 3 while every single-chord deletion has arc number 2.
/// By monotonicity this is the same as every proper sub-diagram having arc at
/// most 2.
pub fn is_minimal_obstruction(c: &ChordDiagram) -> bool {
    if arc_number(c) < 3 {
        return false;
    }
    c.chords()
        .iter()
        .all(|&ch| arc_number(&c.delete_chord(ch).expect("chord of the diagram")) <= 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum StarClass {
    /// `m` divisible by 4; the diagram has arc number 2.
    ArcTwo,
    /// `m` odd; the diagram is equivalent to `make_c(n)` with `m = 2n + 1`.
    EquivalentToCm { n: usize },
}

/// Classifies a diagram whose chords all have length `m - 2`, checking the
/// claimed property of each class.
pub fn classify_star(c: &ChordDiagram) -> Result<StarClass> {
    if !satisfies_star(c)? {
        return Err(Error::StarViolated);
    }
    let m = c.m();
    if m % 4 == 2 {
        return Err(Error::ImpossibleParity(m));
    }
    if m.is_multiple_of(4) {
        let arc = arc_number(c);
        if arc != 2 {
            return Err(Error::Inconsistent(format!(
                "star diagram with m = {m} has arc number {arc}"
            )));
        }
        return Ok(StarClass::ArcTwo);
    }
    let n = (m - 1) / 2;
    if !c.equivalent(&make_c(n)?) {
        return Err(Error::Inconsistent(format!(
            "odd star diagram with m = {m} is not equivalent to C_{m}"
        )));
    }
    Ok(StarClass::EquivalentToCm { n })
}

/// Circulant graph on `2m` vertices with edges `{i, i + m - 2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirculantGraph {
    pub order: usize,
    pub step: usize,
    pub edges: Vec<(usize, usize)>,
    /// Connected components, each listed in cycle order starting from its
    /// least vertex.
    pub cycles: Vec<Vec<usize>>,
}

impl CirculantGraph {
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(Vec::len).collect()
    }
}

pub fn circulant(m: usize) -> Result<CirculantGraph> {
    if m < 3 {
        return Err(Error::ParameterTooSmall { min: 3, got: m });
    }
    let order = 2 * m;
    let step = m - 2;
    let edges = (0..order).map(|i| (i, (i + step) % order)).collect();
    let mut visited = vec![false; order];
    let mut cycles = Vec::new();
    for start in 0..order {
        if visited[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut v = start;
        while !visited[v] {
            visited[v] = true;
            cycle.push(v);
            v = (v + step) % order;
        }
        cycles.push(cycle);
    }
    Ok(CirculantGraph {
        order,
        step,
        edges,
        cycles,
    })
}

/// All perfect matchings of `circulant(m)` as chord diagrams. Each even cycle
/// contributes its two alternating matchings; any odd cycle leaves none.
pub fn enumerate_star_diagrams(m: usize) -> Result<Vec<ChordDiagram>> {
    let g = circulant(m)?;
    if g.cycles.iter().any(|cy| cy.len() % 2 == 1) {
        return Ok(Vec::new());
    }
    let per_cycle: Vec<[Vec<(usize, usize)>; 2]> = g
        .cycles
        .iter()
        .map(|cy| {
            let k = cy.len();
            let even = (0..k)
                .step_by(2)
                .map(|i| (cy[i], cy[(i + 1) % k]))
                .collect();
            let odd = (1..k)
                .step_by(2)
                .map(|i| (cy[i], cy[(i + 1) % k]))
                .collect();
            [even, odd]
        })
        .collect();
    let mut out = Vec::new();
    for choice in 0..1u64 << per_cycle.len() {
        let chords: Vec<(usize, usize)> = per_cycle
            .iter()
            .enumerate()
            .flat_map(|(i, opts)| opts[(choice >> i & 1) as usize].iter().copied())
            .collect();
        out.push(ChordDiagram::from_chords(&chords)?);
    }
    Ok(out)
}

/// A chord subset of the input certifying a `C_{2n+1}` sub-diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObstructionWitness {
    pub chords: Vec<Chord>,
    pub n: usize,
}

/// Shrinks the diagram by deleting chords in index order while the arc number
/// stays at least 3. The survivors form a minimal obstruction.
///
/// # Panics
///
/// If the surviving sub-diagram is not equivalent to any `C_{2n+1}`.
pub fn find_obstruction(c: &ChordDiagram) -> Option<ObstructionWitness> {
    if arc_number(c) <= 2 {
        return None;
    }
    let chords = c.chords();
    let mut keep = vec![true; chords.len()];
    // A chord whose deletion drops the arc number keeps doing so after
    // further deletions, so one pass in index order suffices.
    for i in 0..chords.len() {
        keep[i] = false;
        let rest: Vec<Chord> = selected(&chords, &keep);
        let sub = c.sub_diagram(&rest).expect("chords come from the diagram");
        if arc_number(&sub) < 3 {
            keep[i] = true;
        }
    }
    let witness = selected(&chords, &keep);
    let sub = c
        .sub_diagram(&witness)
        .expect("chords come from the diagram");
    let n = is_c_odd(&sub)
        .unwrap_or_else(|| panic!("minimal obstruction {sub} is not equivalent to any C_(2n+1)"));
    Some(ObstructionWitness { chords: witness, n })
}

fn selected(chords: &[Chord], keep: &[bool]) -> Vec<Chord> {
    chords
        .iter()
        .zip(keep)
        .filter(|(_, &k)| k)
        .map(|(&ch, _)| ch)
        .collect()
}

/// Whether some `(2n+1)`-chord subset is equivalent to `make_c(n)`, by
/// exhaustive subset search.
pub fn contains_obstruction(c: &ChordDiagram, n: usize) -> Result<bool> {
    contains_obstruction_with(c, n, DEFAULT_SUBSET_GUARD, true)
}

/// Subset search with an explicit guard; `prune` skips partial subsets in which
/// some chord can no longer end up with length `k - 2`.
pub fn contains_obstruction_with(
    c: &ChordDiagram,
    n: usize,
    guard: usize,
    prune: bool,
) -> Result<bool> {
    if n < 1 {
        return Err(Error::ParameterTooSmall { min: 1, got: n });
    }
    let m = c.m();
    if m > guard {
        return Err(Error::GuardExceeded {
            limit: guard,
            actual: m,
        });
    }
    let k = 2 * n + 1;
    if k > m {
        return Ok(false);
    }
    let target = make_c(n)?.canonical_code();
    let chords = c.chords();
    let search = SubsetSearch {
        c,
        chords: &chords,
        k,
        target: &target,
        prune,
    };
    Ok((0..=m - k).into_par_iter().any(|first| {
        let mut chosen = vec![first];
        search.extend(&mut chosen)
    }))
}

struct SubsetSearch<'a> {
    c: &'a ChordDiagram,
    chords: &'a [Chord],
    k: usize,
    target: &'a crate::diagram::CanonicalCode,
    prune: bool,
}

impl SubsetSearch<'_> {
    fn extend(&self, chosen: &mut Vec<usize>) -> bool {
        if self.prune && !self.feasible(chosen) {
            return false;
        }
        if chosen.len() == self.k {
            let picked: Vec<Chord> = chosen.iter().map(|&i| self.chords[i]).collect();
            let sub = self
                .c
                .sub_diagram(&picked)
                .expect("chords come from the diagram");
            return sub.canonical_code() == *self.target;
        }
        let last = *chosen.last().expect("search starts with one chord");
        let remaining = self.k - chosen.len();
        for next in last + 1..=self.chords.len() - remaining {
            chosen.push(next);
            if self.extend(chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    /// In the final subset every chord has `k - 3` chosen points on one side
    /// and `k + 1` on the other. Side counts only grow as chords are added.
    fn feasible(&self, chosen: &[usize]) -> bool {
        let k = self.k;
        chosen.iter().all(|&i| {
            let ch = self.chords[i];
            let (mut inner, mut outer) = (0, 0);
            for &j in chosen {
                if j == i {
                    continue;
                }
                for p in self.chords[j].endpoints() {
                    if ch.a < p && p < ch.b {
                        inner += 1;
                    } else {
                        outer += 1;
                    }
                }
            }
            inner <= k + 1 && outer <= k + 1 && inner.min(outer) <= k - 3
        })
    }
}
