//! Local chord relations (parallel, next-to, close), twin doubling, the
//! forward/back traversal word, and the checks for a candidate curve whose
//! diagram should contain `C_{2n+1}` but no smaller member of the family.

use std::fmt;

use serde::Serialize;

use crate::arcnum::arc_number;
use crate::diagram::{Chord, ChordDiagram};
use crate::error::{Error, Result};
use crate::obstruction::{contains_obstruction_with, DEFAULT_SUBSET_GUARD};
use crate::realize::{is_planar_realizable_with_guard, DEFAULT_GENUS_GUARD};

/// Chords that do not cross.
pub fn parallel(c: &ChordDiagram, x: Chord, y: Chord) -> Result<bool> {
    Ok(!c.crosses(x, y)?)
}

/// Distinct points with no diagram point strictly between them on one side.
pub fn next_to(c: &ChordDiagram, x: usize, y: usize) -> Result<bool> {
    let n = c.points();
    for p in [x, y] {
        if p >= n {
            return Err(Error::OutOfRange {
                index: p,
                value: p,
                points: n,
            });
        }
    }
    if x == y {
        return Ok(false);
    }
    Ok((x + 1) % n == y || (y + 1) % n == x)
}

pub fn close(c: &ChordDiagram, x: Chord, y: Chord) -> Result<bool> {
    for ch in [x, y] {
        if !c.contains_chord(ch) {
            return Err(Error::NotAChord(ch.a, ch.b));
        }
    }
    if x == y {
        return Ok(false);
    }
    Ok((next_to(c, x.a, y.a)? && next_to(c, x.b, y.b)?)
        || (next_to(c, x.a, y.b)? && next_to(c, x.b, y.a)?))
}

/// Chords parallel to `d` whose endpoints both lie on the given side of `d`.
/// Side 0 is strictly between `d.a` and `d.b`; side 1 is the rest.
pub fn parallel_on_side(c: &ChordDiagram, d: Chord, side: usize) -> Result<Vec<Chord>> {
    if !c.contains_chord(d) {
        return Err(Error::NotAChord(d.a, d.b));
    }
    let inside = |p: usize| d.a < p && p < d.b;
    Ok(c.chords()
        .into_iter()
        .filter(|&e| e != d)
        .filter(|&e| inside(e.a) == (side == 0) && inside(e.b) == (side == 0))
        .collect())
}

/// A diagram in which every original chord has been doubled, with the twin
/// pairs listed by original chord index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinDouble {
    pub diagram: ChordDiagram,
    pub pairs: Vec<(Chord, Chord)>,
}

/// Replaces every chord `(a, b)` by itself and a twin whose endpoints sit
/// immediately counterclockwise of `a` and immediately clockwise of `b`.
pub fn twin_double_with_pairs(c: &ChordDiagram) -> TwinDouble {
    let n = c.points();
    // Each old point becomes two consecutive new points.
    let mut original = vec![0; n];
    let mut twin = vec![0; n];
    for p in 0..n {
        if p < c.partner(p) {
            original[p] = 2 * p;
            twin[p] = 2 * p + 1;
        } else {
            twin[p] = 2 * p;
            original[p] = 2 * p + 1;
        }
    }
    let mut chords = Vec::with_capacity(n);
    let mut pairs = Vec::with_capacity(n / 2);
    for ch in c.chords() {
        let kept = Chord::new(original[ch.a], original[ch.b]);
        let added = Chord::new(twin[ch.a], twin[ch.b]);
        chords.push((kept.a, kept.b));
        chords.push((added.a, added.b));
        pairs.push((kept, added));
    }
    let diagram =
        ChordDiagram::from_chords(&chords).expect("twin points are a relabelled partition");
    TwinDouble { diagram, pairs }
}

pub fn twin_double(c: &ChordDiagram) -> ChordDiagram {
    twin_double_with_pairs(c).diagram
}

/// The double traversal of the `(2n+1)`-cycle alternating one step forward
/// with three steps back. Labels are `0..2n+1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GaussWordFb {
    pub n: usize,
    pub labels: Vec<usize>,
}

impl GaussWordFb {
    pub fn to_diagram(&self) -> ChordDiagram {
        let tokens: Vec<String> = self.labels.iter().map(usize::to_string).collect();
        ChordDiagram::from_gauss_word(&tokens).expect("every label occurs twice")
    }
}

impl fmt::Display for GaussWordFb {
    /// 1-based labels separated by spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.labels.iter().map(|l| (l + 1).to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

pub fn forward_back_word(n: usize) -> Result<GaussWordFb> {
    if n == 0 {
        return Err(Error::ParameterTooSmall { min: 2, got: n });
    }
    if n == 1 {
        return Err(Error::DegenerateModulus);
    }
    let k = 2 * n + 1;
    let mut labels = Vec::with_capacity(2 * k);
    let mut v = 0;
    for _ in 0..k {
        labels.push(v);
        v = (v + 1) % k;
        labels.push(v);
        v = (v + k - 3) % k;
    }
    debug_assert_eq!(v, 0, "walk closes");
    Ok(GaussWordFb { n, labels })
}

#[derive(Debug, Clone, Copy)]
pub struct Prop12Guards {
    pub subset: usize,
    pub genus: usize,
}

impl Default for Prop12Guards {
    fn default() -> Self {
        Prop12Guards {
            subset: DEFAULT_SUBSET_GUARD,
            genus: DEFAULT_GENUS_GUARD,
        }
    }
}

/// Outcome of checking a candidate curve's diagram against index `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Prop12Report {
    pub n: usize,
    pub arc_is_three: bool,
    pub contains_target: bool,
    pub avoids_smaller: bool,
    pub planar: bool,
}

impl Prop12Report {
    pub fn passed(&self) -> bool {
        self.arc_is_three && self.contains_target && self.avoids_smaller && self.planar
    }
}

pub fn verify_prop12(c: &ChordDiagram, n: usize) -> Result<Prop12Report> {
    verify_prop12_with(c, n, Prop12Guards::default())
}

pub fn verify_prop12_with(
    c: &ChordDiagram,
    n: usize,
    guards: Prop12Guards,
) -> Result<Prop12Report> {
    if n < 1 {
        return Err(Error::ParameterTooSmall { min: 1, got: n });
    }
    let arc_is_three = arc_number(c) == 3;
    let contains_target = contains_obstruction_with(c, n, guards.subset, true)?;
    let mut avoids_smaller = true;
    for k in 1..n {
        if contains_obstruction_with(c, k, guards.subset, true)? {
            avoids_smaller = false;
            break;
        }
    }
    let planar = is_planar_realizable_with_guard(c, guards.genus)?;
    Ok(Prop12Report {
        n,
        arc_is_three,
        contains_target,
        avoids_smaller,
        planar,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::obstruction::{contains_obstruction, make_c};

    fn d(s: &str) -> ChordDiagram {
        s.parse().unwrap()
    }

    fn ch(a: usize, b: usize) -> Chord {
        Chord::new(a, b)
    }

    #[test]
    fn parallel_chords() {
        assert!(parallel(&d("0-1 2-3 4-5"), ch(0, 1), ch(2, 3)).unwrap());
        assert!(!parallel(&d("0-2 1-3"), ch(0, 2), ch(1, 3)).unwrap());
        let c5 = make_c(2).unwrap();
        let count = c5
            .chords()
            .into_iter()
            .filter(|&e| e != ch(0, 3) && parallel(&c5, ch(0, 3), e).unwrap())
            .count();
        assert_eq!(count, 2);
    }

    #[test]
    fn adjacency() {
        let c = d("0-2 1-3");
        assert!(next_to(&c, 0, 1).unwrap());
        assert!(!next_to(&c, 0, 2).unwrap());
        assert!(next_to(&c, 3, 0).unwrap());
        assert!(next_to(&c, 0, 4).is_err());
    }

    #[test]
    fn closeness() {
        assert!(close(&d("0-2 1-3"), ch(0, 2), ch(1, 3)).unwrap());
        let c5 = make_c(2).unwrap();
        let chords = c5.chords();
        for (i, &x) in chords.iter().enumerate() {
            for &y in &chords[i + 1..] {
                assert!(!close(&c5, x, y).unwrap());
            }
        }
    }

    #[test]
    fn doubling() {
        let t = twin_double_with_pairs(&d("0-1"));
        assert_eq!(t.diagram, d("0-3 1-2"));
        for (x, y) in &t.pairs {
            assert!(close(&t.diagram, *x, *y).unwrap());
            assert!(parallel(&t.diagram, *x, *y).unwrap());
        }
        let t = twin_double_with_pairs(&make_c(1).unwrap());
        assert_eq!(t.diagram.m(), 6);
        let pick: Vec<Chord> = t.pairs.iter().map(|p| p.1).collect();
        assert!(t
            .diagram
            .sub_diagram(&pick)
            .unwrap()
            .equivalent(&make_c(1).unwrap()));
        assert!(contains_obstruction(&t.diagram, 1).unwrap());
    }

    #[test]
    fn forward_back() {
        let w = forward_back_word(2).unwrap();
        assert_eq!(w.to_string(), "1 2 4 5 2 3 5 1 3 4");
        assert!(w.to_diagram().equivalent(&make_c(2).unwrap()));
        assert_eq!(forward_back_word(1), Err(Error::DegenerateModulus));
        for n in 2..=10 {
            let w = forward_back_word(n).unwrap();
            let mut counts = vec![0; 2 * n + 1];
            for &l in &w.labels {
                counts[l] += 1;
            }
            assert!(counts.iter().all(|&c| c == 2));
        }
    }

    #[test]
    fn candidate_curve_pipeline() {
        let r = verify_prop12(&make_c(1).unwrap(), 1).unwrap();
        assert!(r.passed());
        let r = verify_prop12(&make_c(2).unwrap(), 2).unwrap();
        assert!(r.arc_is_three && r.contains_target && r.avoids_smaller);
        assert!(!r.planar && !r.passed());
        let r = verify_prop12(&twin_double(&make_c(1).unwrap()), 1).unwrap();
        assert!(r.contains_target);
    }
}
