//! Chord diagrams as fixed-point-free involutions on `0..2m`.
//!
//! Points are indexed counterclockwise from 0. Two diagrams with the same
//! number of chords are equivalent when some rotation of the point labels
//! carries one pairing onto the other; reflections are only considered by
//! [`ChordDiagram::equivalent_dihedral`].

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A chord, stored with its endpoints ordered `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Chord {
    pub a: usize,
    pub b: usize,
}

impl Chord {
    pub fn new(x: usize, y: usize) -> Self {
        Chord {
            a: x.min(y),
            b: x.max(y),
        }
    }

    pub fn endpoints(self) -> [usize; 2] {
        [self.a, self.b]
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

/// The open arc of the circle between point `g` and point `g + 1 (mod 2m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GapIndex(pub usize);

impl fmt::Display for GapIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g{}", self.0)
    }
}

/// Lexicographically least rotation of the distance word
/// `d_i = (partner(i) - i) mod 2m`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalCode(pub Vec<u32>);

impl CanonicalCode {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn chord_count(&self) -> usize {
        self.0.len() / 2
    }

    /// The diagram whose distance word is exactly this code.
    pub fn representative(&self) -> ChordDiagram {
        let n = self.0.len();
        let partner = self
            .0
            .iter()
            .enumerate()
            .map(|(i, &d)| (i + d as usize) % n)
            .collect();
        ChordDiagram { partner }
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for d in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Index of the lexicographically least rotation of `s`.
///
/// Two-pointer scan; linear in `s.len()`.
pub(crate) fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let x = &s[(i + k) % n];
        let y = &s[(j + k) % n];
        if x == y {
            k += 1;
            continue;
        }
        if x > y {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

/// Text encodings accepted for a single diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    /// All-integer tokens → pairing; `a-b` tokens → pairs; anything else → Gauss word.
    #[default]
    Auto,
    /// `2m` integers, the j-th being the partner of point j.
    Pairing,
    /// One `a-b` token per chord.
    Pairs,
    /// Double-occurrence word of arbitrary symbols.
    Gauss,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ChordDiagram {
    partner: Vec<usize>,
}

impl ChordDiagram {
    pub fn empty() -> Self {
        ChordDiagram::default()
    }

    /// Validates a raw pairing. Errors name the first offending index.
    pub fn from_pairing(raw: &[usize]) -> Result<Self> {
        let n = raw.len();
        if !n.is_multiple_of(2) {
            return Err(Error::OddLength(n));
        }
        for (i, &p) in raw.iter().enumerate() {
            if p >= n {
                return Err(Error::OutOfRange {
                    index: i,
                    value: p,
                    points: n,
                });
            }
            if p == i {
                return Err(Error::FixedPoint(i));
            }
            if raw[p] != i {
                return Err(Error::NotInvolution(i));
            }
        }
        Ok(ChordDiagram {
            partner: raw.to_vec(),
        })
    }

    /// Joins the two occurrence positions of every symbol.
    pub fn from_gauss_word<S: AsRef<str>>(tokens: &[S]) -> Result<Self> {
        let mut seen: HashMap<&str, Vec<usize>> = HashMap::new();
        let mut order: Vec<&str> = Vec::new();
        for (i, t) in tokens.iter().enumerate() {
            let t = t.as_ref();
            let slot = seen.entry(t).or_default();
            if slot.is_empty() {
                order.push(t);
            }
            slot.push(i);
        }
        let mut partner = vec![0; tokens.len()];
        for sym in order {
            let pos = &seen[sym];
            if pos.len() != 2 {
                return Err(Error::BadMultiplicity {
                    symbol: sym.to_string(),
                    count: pos.len(),
                });
            }
            partner[pos[0]] = pos[1];
            partner[pos[1]] = pos[0];
        }
        Ok(ChordDiagram { partner })
    }

    /// Builds a diagram from endpoint pairs covering `0..2|chords|` exactly once.
    pub fn from_chords(chords: &[(usize, usize)]) -> Result<Self> {
        let n = 2 * chords.len();
        let mut partner = vec![usize::MAX; n];
        for &(x, y) in chords {
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
                return Err(Error::FixedPoint(x));
            }
            for p in [x, y] {
                if partner[p] != usize::MAX {
                    return Err(Error::DuplicatePoint(p));
                }
            }
            partner[x] = y;
            partner[y] = x;
        }
        Ok(ChordDiagram { partner })
    }

    /// Parses one line in the given format.
    pub fn parse(text: &str, format: Format) -> Result<Self> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let format = match format {
            Format::Auto => detect_format(&tokens),
            f => f,
        };
        match format {
            Format::Pairing | Format::Auto => {
                let raw = tokens
                    .iter()
                    .map(|t| {
                        t.parse::<usize>()
                            .map_err(|_| Error::BadToken(t.to_string()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Self::from_pairing(&raw)
            }
            Format::Pairs => {
                let pairs = tokens
                    .iter()
                    .map(|t| parse_pair(t))
                    .collect::<Result<Vec<_>>>()?;
                Self::from_chords(&pairs)
            }
            Format::Gauss => Self::from_gauss_word(&tokens),
        }
    }

    /// Number of chords.
    pub fn m(&self) -> usize {
        self.partner.len() / 2
    }

    /// Number of points, `2m`.
    pub fn points(&self) -> usize {
        self.partner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partner.is_empty()
    }

    pub fn partner(&self, point: usize) -> usize {
        self.partner[point]
    }

    pub fn pairing(&self) -> &[usize] {
        &self.partner
    }

    /// Chords ordered by their smaller endpoint. A chord's position in this
    /// list is its chord index.
    pub fn chords(&self) -> Vec<Chord> {
        self.partner
            .iter()
            .enumerate()
            .filter(|&(i, &p)| i < p)
            .map(|(i, &p)| Chord { a: i, b: p })
            .collect()
    }

    /// Chord index of every point.
    pub fn chord_index_of_points(&self) -> Vec<usize> {
        let mut idx = vec![0; self.points()];
        let mut next = 0;
        for i in 0..self.points() {
            if i < self.partner[i] {
                idx[i] = next;
                idx[self.partner[i]] = next;
                next += 1;
            }
        }
        idx
    }

    pub fn contains_chord(&self, c: Chord) -> bool {
        c.b < self.points() && c.a != c.b && self.partner[c.a] == c.b
    }

    fn check_chord(&self, c: Chord) -> Result<()> {
        if self.contains_chord(c) {
            Ok(())
        } else {
            Err(Error::NotAChord(c.a, c.b))
        }
    }

    /// Point `i` of the result is point `(i - k) mod 2m` of `self`.
    pub fn rotate(&self, k: i64) -> ChordDiagram {
        let n = self.points();
        if n == 0 {
            return self.clone();
        }
        let shift = k.rem_euclid(n as i64) as usize;
        let mut partner = vec![0; n];
        for (i, &p) in self.partner.iter().enumerate() {
            partner[(i + shift) % n] = (p + shift) % n;
        }
        ChordDiagram { partner }
    }

    /// Point `i` of the result is point `(-i) mod 2m` of `self`.
    pub fn reflect(&self) -> ChordDiagram {
        let n = self.points();
        let mut partner = vec![0; n];
        for (i, &p) in self.partner.iter().enumerate() {
            partner[(n - i) % n] = (n - p) % n;
        }
        ChordDiagram { partner }
    }

    /// The distance word `d_i = (partner(i) - i) mod 2m`.
    pub fn distance_word(&self) -> Vec<u32> {
        let n = self.points();
        self.partner
            .iter()
            .enumerate()
            .map(|(i, &p)| ((p + n - i) % n) as u32)
            .collect()
    }

    pub fn canonical_code(&self) -> CanonicalCode {
        let word = self.distance_word();
        let start = least_rotation(&word);
        let mut code = Vec::with_capacity(word.len());
        code.extend_from_slice(&word[start..]);
        code.extend_from_slice(&word[..start]);
        CanonicalCode(code)
    }

    /// Rotation-only equivalence. Diagrams of different sizes are never equivalent.
    pub fn equivalent(&self, other: &ChordDiagram) -> bool {
        self.points() == other.points() && self.canonical_code() == other.canonical_code()
    }

    /// Equivalence up to rotation and reflection.
    pub fn equivalent_dihedral(&self, other: &ChordDiagram) -> bool {
        self.equivalent(other) || self.equivalent(&other.reflect())
    }

    /// True iff `p` lies strictly inside the counterclockwise arc from `c.a` to `c.b`.
    fn inside(c: Chord, p: usize) -> bool {
        c.a < p && p < c.b
    }

    /// Whether the chords `c` and `d` intersect, i.e. exactly one endpoint of
    /// `d` lies strictly between the endpoints of `c`.
    pub fn crosses(&self, c: Chord, d: Chord) -> Result<bool> {
        self.check_chord(c)?;
        self.check_chord(d)?;
        if c == d {
            return Ok(false);
        }
        Ok(Self::inside(c, d.a) != Self::inside(c, d.b))
    }

    /// One plus the number of points on the smaller side of `c`.
    pub fn chord_length(&self, c: Chord) -> Result<usize> {
        self.check_chord(c)?;
        Ok(length_of(c, self.points()))
    }

    /// Restriction to the given chords, relabeled `0..2k` in cyclic order.
    pub fn sub_diagram(&self, chords: &[Chord]) -> Result<ChordDiagram> {
        let mut keep = vec![false; self.points()];
        for &c in chords {
            self.check_chord(c)?;
            keep[c.a] = true;
            keep[c.b] = true;
        }
        Ok(self.restrict_points(&keep))
    }

    /// Restriction to the chords whose index bit is set in `mask`.
    pub fn sub_diagram_mask(&self, mask: u64) -> ChordDiagram {
        let idx = self.chord_index_of_points();
        let keep: Vec<bool> = idx.iter().map(|&c| mask >> c & 1 == 1).collect();
        self.restrict_points(&keep)
    }

    fn restrict_points(&self, keep: &[bool]) -> ChordDiagram {
        let mut label = vec![usize::MAX; self.points()];
        let mut next = 0;
        for (i, &k) in keep.iter().enumerate() {
            if k {
                label[i] = next;
                next += 1;
            }
        }
        let mut partner = vec![0; next];
        for (i, &k) in keep.iter().enumerate() {
            if k {
                partner[label[i]] = label[self.partner[i]];
            }
        }
        ChordDiagram { partner }
    }

    pub fn delete_chord(&self, c: Chord) -> Result<ChordDiagram> {
        self.check_chord(c)?;
        let mut keep = vec![true; self.points()];
        keep[c.a] = false;
        keep[c.b] = false;
        Ok(self.restrict_points(&keep))
    }

    /// Adjacency lists over chord indices; `j ∈ adj[i]` iff chords `i` and `j` cross.
    pub fn interlacement_graph(&self) -> InterlacementGraph {
        let chords = self.chords();
        let mut adjacency = vec![Vec::new(); chords.len()];
        for (i, &c) in chords.iter().enumerate() {
            for (j, &d) in chords.iter().enumerate().skip(i + 1) {
                if Self::inside(c, d.a) != Self::inside(c, d.b) {
                    adjacency[i].push(j);
                    adjacency[j].push(i);
                }
            }
        }
        InterlacementGraph { adjacency }
    }

    /// Space-separated pairing, the format accepted by [`ChordDiagram::parse`].
    pub fn to_pairing_string(&self) -> String {
        let parts: Vec<String> = self.partner.iter().map(|p| p.to_string()).collect();
        parts.join(" ")
    }

    pub fn to_pairs_string(&self) -> String {
        let parts: Vec<String> = self.chords().iter().map(|c| c.to_string()).collect();
        parts.join(" ")
    }
}

pub(crate) fn length_of(c: Chord, points: usize) -> usize {
    let inner = c.b - c.a - 1;
    let outer = points - 2 - inner;
    inner.min(outer) + 1
}

fn parse_pair(token: &str) -> Result<(usize, usize)> {
    let bad = || Error::BadToken(token.to_string());
    let (x, y) = token.split_once('-').ok_or_else(bad)?;
    Ok((x.parse().map_err(|_| bad())?, y.parse().map_err(|_| bad())?))
}

fn detect_format(tokens: &[&str]) -> Format {
    if tokens.iter().all(|t| t.parse::<usize>().is_ok()) {
        Format::Pairing
    } else if tokens.iter().any(|t| t.contains('-')) {
        Format::Pairs
    } else {
        Format::Gauss
    }
}

impl FromStr for ChordDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ChordDiagram::parse(s, Format::Auto)
    }
}

impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pairing_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterlacementGraph {
    pub adjacency: Vec<Vec<usize>>,
}

impl InterlacementGraph {
    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(&v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> ChordDiagram {
        s.parse().unwrap()
    }

    fn c(a: usize, b: usize) -> Chord {
        Chord::new(a, b)
    }

    fn c5() -> ChordDiagram {
        d("0-3 2-5 4-7 6-9 8-1")
    }

    /// Lexicographic minimum over every rotation, computed directly.
    fn naive_code(cd: &ChordDiagram) -> Vec<u32> {
        let w = cd.distance_word();
        (0..w.len().max(1))
            .map(|s| {
                w.iter()
                    .cycle()
                    .skip(s)
                    .take(w.len())
                    .copied()
                    .collect::<Vec<_>>()
            })
            .min()
            .unwrap_or_default()
    }

    #[test]
    fn pairing_parses() {
        let cd = d("1 0 3 2 5 4");
        assert_eq!(cd.chords(), vec![c(0, 1), c(2, 3), c(4, 5)]);
        assert_eq!(d("").m(), 0);
    }

    #[test]
    fn pairing_errors_name_first_bad_index() {
        assert_eq!(
            ChordDiagram::from_pairing(&[0, 1]),
            Err(Error::FixedPoint(0))
        );
        assert_eq!(
            ChordDiagram::from_pairing(&[1, 0, 3]),
            Err(Error::OddLength(3))
        );
        assert_eq!(
            ChordDiagram::from_pairing(&[1, 0, 7, 2]),
            Err(Error::OutOfRange {
                index: 2,
                value: 7,
                points: 4
            })
        );
        assert_eq!(
            ChordDiagram::from_pairing(&[1, 2, 3, 0]),
            Err(Error::NotInvolution(0))
        );
    }

    #[test]
    fn gauss_words() {
        assert_eq!(d("a a b b c c").chords(), vec![c(0, 1), c(2, 3), c(4, 5)]);
        assert_eq!(d("a b a b").chords(), vec![c(0, 2), c(1, 3)]);
        assert_eq!(d("a b c a b c").chords(), vec![c(0, 3), c(1, 4), c(2, 5)]);
        assert!(matches!(
            ChordDiagram::parse("a b a", Format::Gauss),
            Err(Error::BadMultiplicity { count: 1, .. })
        ));
    }

    #[test]
    fn pairs_format_rejects_reuse() {
        assert_eq!(
            ChordDiagram::parse("0-1 1-2", Format::Pairs),
            Err(Error::DuplicatePoint(1))
        );
        assert!(matches!(
            ChordDiagram::parse("0-1 2-9", Format::Pairs),
            Err(Error::OutOfRange { .. })
        ));
        assert_eq!(
            ChordDiagram::parse("0-x", Format::Pairs),
            Err(Error::BadToken("0-x".into()))
        );
    }

    #[test]
    fn rotation() {
        let c3 = d("1 0 3 2 5 4");
        assert_eq!(c3.rotate(1).chords(), vec![c(0, 5), c(1, 2), c(3, 4)]);
        assert_eq!(c3.rotate(0), c3);
        assert_eq!(c3.rotate(6), c3);
        assert_eq!(c3.rotate(-1), c3.rotate(5));
    }

    #[test]
    fn canonical_codes() {
        assert_eq!(d("1 0 3 2 5 4").canonical_code().0, vec![1, 5, 1, 5, 1, 5]);
        assert_eq!(d("0-2 1-3").canonical_code().0, vec![2, 2, 2, 2]);
        assert_eq!(ChordDiagram::empty().canonical_code().0, Vec::<u32>::new());
        let cd = c5();
        assert_eq!(cd.canonical_code().0, naive_code(&cd));
        assert_eq!(
            cd.canonical_code().representative().canonical_code(),
            cd.canonical_code()
        );
    }

    #[test]
    fn equivalence() {
        assert!(d("0-1 2-3").equivalent(&d("0-3 1-2")));
        assert!(!d("0-2 1-3").equivalent(&d("0-1 2-3")));
        assert!(c5().equivalent(&c5()));
        assert!(!d("0-1").equivalent(&d("0-1 2-3")));
    }

    #[test]
    fn dihedral_is_opt_in() {
        let x = d("0-1 2-5 3-7 4-6");
        let y = x.reflect();
        assert!(!x.equivalent(&y));
        assert!(x.equivalent_dihedral(&y));
    }

    #[test]
    fn crossing_and_length() {
        let tre = d("0-3 1-4 2-5");
        assert!(tre.crosses(c(0, 3), c(1, 4)).unwrap());
        let c3 = d("0-1 2-3 4-5");
        assert!(!c3.crosses(c(0, 1), c(2, 3)).unwrap());
        assert!(!c5().crosses(c(0, 3), c(4, 7)).unwrap());
        assert_eq!(c3.crosses(c(0, 2), c(2, 3)), Err(Error::NotAChord(0, 2)));

        assert_eq!(c3.chord_length(c(0, 1)).unwrap(), 1);
        assert_eq!(c5().chord_length(c(0, 3)).unwrap(), 3);
        assert_eq!(d("0-2 1-3").chord_length(c(0, 2)).unwrap(), 2);
        assert_eq!(c3.chord_length(c(0, 5)), Err(Error::NotAChord(0, 5)));
    }

    #[test]
    fn sub_diagrams() {
        let sub = c5().sub_diagram(&[c(0, 3), c(2, 5), c(4, 7)]).unwrap();
        assert_eq!(sub.chords(), vec![c(0, 2), c(1, 4), c(3, 5)]);
        assert_eq!(c5().sub_diagram(&c5().chords()).unwrap(), c5());
        assert!(c5().sub_diagram(&[]).unwrap().is_empty());
        // chord indices of 0-3, 2-5, 4-7 are 0, 2, 3 (1-8 is index 1)
        assert_eq!(c5().sub_diagram_mask(0b01101), sub);
    }

    #[test]
    fn chord_deletion() {
        let c3 = d("0-1 2-3 4-5");
        assert_eq!(
            c3.delete_chord(c(0, 1)).unwrap().chords(),
            vec![c(0, 1), c(2, 3)]
        );
        assert!(d("0-1").delete_chord(c(0, 1)).unwrap().is_empty());
    }

    #[test]
    fn interlacement() {
        let g = d("0-1 2-3 4-5").interlacement_graph();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 0));
        let g = d("0-3 1-4 2-5").interlacement_graph();
        assert_eq!(g.edge_count(), 3);
        let g = c5().interlacement_graph();
        assert_eq!(g.edge_count(), 5);
        assert!((0..5).all(|v| g.degree(v) == 2));
    }

    #[test]
    fn least_rotation_matches_scan() {
        let words: [&[u32]; 4] = [&[3, 1, 2, 1, 2], &[1, 1, 1], &[2, 1, 2, 1, 1], &[5]];
        for w in words {
            let k = least_rotation(w);
            let rotated: Vec<u32> = w.iter().cycle().skip(k).take(w.len()).copied().collect();
            let best = (0..w.len())
                .map(|s| {
                    w.iter()
                        .cycle()
                        .skip(s)
                        .take(w.len())
                        .copied()
                        .collect::<Vec<_>>()
                })
                .min()
                .unwrap();
            assert_eq!(rotated, best);
        }
    }
}
