//! Planar realizability of a chord diagram as a closed curve with transverse
//! double points.
//!
//! Identifying the endpoints of every chord turns the circle into a 4-regular
//! graph: one vertex per chord and one edge per gap. A plane curve realizing
//! the diagram is the same as a genus-0 embedding of that graph in which the
//! two passages of the curve through each vertex cross. We search all such
//! embeddings and trace faces to get the genus.

use rayon::prelude::*;
use serde::Serialize;

use crate::diagram::ChordDiagram;
use crate::error::{Error, Result};

pub const DEFAULT_GENUS_GUARD: usize = 20;

/// Half-edge `2g` starts gap `g` (at point `g`); half-edge `2g + 1` ends it
/// (at point `g + 1`).
type Dart = usize;

fn dart_out(gap: usize) -> Dart {
    2 * gap
}

fn dart_in(gap: usize) -> Dart {
    2 * gap + 1
}

/// The 4-regular graph obtained from the circle by identifying chord endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientGraph {
    /// Endpoints of every chord, indexed by chord index.
    pub vertices: Vec<(usize, usize)>,
    /// Edge `g` joins the chords owning points `g` and `g + 1`.
    pub edges: Vec<(usize, usize)>,
}

impl QuotientGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum()
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == b).count()
    }

    /// No loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges
            .iter()
            .all(|&(a, b)| a != b && seen.insert((a.min(b), a.max(b))))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges
            .iter()
            .any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn neighbours(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for &(a, b) in &self.edges {
            if a == v {
                out.push(b);
            } else if b == v {
                out.push(a);
            }
        }
        out
    }
}

pub fn quotient_graph(c: &ChordDiagram) -> Result<QuotientGraph> {
    if c.is_empty() {
        return Err(Error::EmptyDiagram);
    }
    let owner = c.chord_index_of_points();
    let n = c.points();
    let vertices = c.chords().iter().map(|ch| (ch.a, ch.b)).collect();
    let edges = (0..n).map(|g| (owner[g], owner[(g + 1) % n])).collect();
    Ok(QuotientGraph { vertices, edges })
}

/// Whether `q` is the `(2n+1)`-cycle `v_0 .. v_{2n}` with extra edges
/// `v_i v_{i+3}`.
///
/// Searches for a Hamiltonian labelling `v_0, v_1, ...` starting at vertex 0,
/// pruning any prefix that lacks an edge `v_{j-3} v_j`, and accepts when the
/// labelled edge set is exactly the target's.
pub fn graph_is_g2n1(q: &QuotientGraph, n: usize) -> Result<bool> {
    if n < 2 {
        return Err(Error::ParameterTooSmall { min: 2, got: n });
    }
    let k = 2 * n + 1;
    if q.vertex_count() != k || q.edge_count() != 2 * k || !q.is_simple() {
        return Ok(false);
    }
    if (0..k).any(|v| q.degree(v) != 4) {
        return Ok(false);
    }
    let mut label = vec![0usize];
    let mut used = vec![false; k];
    used[0] = true;
    Ok(extend_labelling(q, k, &mut label, &mut used))
}

fn extend_labelling(
    q: &QuotientGraph,
    k: usize,
    label: &mut Vec<usize>,
    used: &mut [bool],
) -> bool {
    let j = label.len();
    if j == k {
        let pos = {
            let mut pos = vec![0; k];
            for (i, &v) in label.iter().enumerate() {
                pos[v] = i;
            }
            pos
        };
        return q.edges.iter().all(|&(a, b)| {
            let d = (pos[b] + k - pos[a]) % k;
            d == 1 || d == k - 1 || d == 3 || d == k - 3
        }) && (0..k).all(|i| {
            q.has_edge(label[i], label[(i + 1) % k]) && q.has_edge(label[i], label[(i + 3) % k])
        });
    }
    let last = label[j - 1];
    for w in q.neighbours(last) {
        if used[w] || (j >= 3 && !q.has_edge(label[j - 3], w)) {
            continue;
        }
        used[w] = true;
        label.push(w);
        if extend_labelling(q, k, label, used) {
            return true;
        }
        label.pop();
        used[w] = false;
    }
    false
}

/// Per-vertex cyclic orders of half-edges.
///
/// At the vertex of chord `(a, b)` the curve passes twice: through point `a`
/// (arriving along gap `a-1`, leaving along gap `a`) and through point `b`.
/// A transverse crossing alternates the two passages, leaving two cyclic orders:
///
/// * bit 0: `in_a, in_b, out_a, out_b`
/// * bit 1: `in_a, out_b, out_a, in_b`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    /// `next[d]` is the half-edge following `d` counterclockwise around its vertex.
    pub next: Vec<Dart>,
}

impl RotationSystem {
    /// Rotation system for the choice bits in `choices` (bit `i` for chord `i`).
    pub fn from_choices(c: &ChordDiagram, choices: u64) -> Self {
        let n = c.points();
        let mut next = vec![0; 2 * n];
        for (i, ch) in c.chords().iter().enumerate() {
            let in_a = dart_in((ch.a + n - 1) % n);
            let out_a = dart_out(ch.a);
            let in_b = dart_in((ch.b + n - 1) % n);
            let out_b = dart_out(ch.b);
            let order = if choices >> i & 1 == 0 {
                [in_a, in_b, out_a, out_b]
            } else {
                [in_a, out_b, out_a, in_b]
            };
            for k in 0..4 {
                next[order[k]] = order[(k + 1) % 4];
            }
        }
        RotationSystem { next }
    }

    /// Face boundary lengths; every half-edge lies on exactly one face.
    pub fn face_lengths(&self) -> Vec<usize> {
        let darts = self.next.len();
        let mut seen = vec![false; darts];
        let mut faces = Vec::new();
        for start in 0..darts {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                len += 1;
                d = self.next[d ^ 1];
            }
            faces.push(len);
        }
        faces
    }

    /// `2 - 2g = V - E + F` with `V = m`, `E = 2m`.
    pub fn euler_characteristic(&self) -> i64 {
        let e = (self.next.len() / 2) as i64;
        let v = e / 2;
        v - e + self.face_lengths().len() as i64
    }

    pub fn genus(&self) -> usize {
        ((2 - self.euler_characteristic()) / 2) as usize
    }
}

/// Least genus and the first choice bits attaining it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GenusResult {
    pub genus: usize,
    pub choices: u64,
}

impl GenusResult {
    /// Choice bits as a string, chord 0 first.
    pub fn choice_string(&self, m: usize) -> String {
        (0..m)
            .map(|i| if self.choices >> i & 1 == 1 { '1' } else { '0' })
            .collect()
    }
}

fn genus_of(c: &ChordDiagram, choices: u64) -> usize {
    RotationSystem::from_choices(c, choices).genus()
}

pub fn genus_min(c: &ChordDiagram) -> Result<GenusResult> {
    genus_min_with_guard(c, DEFAULT_GENUS_GUARD)
}

/// Minimum over all `2^m` transverse rotation systems. Chunks of assignments
/// are searched in parallel; the reduction keeps the least `(genus, choices)`.
pub fn genus_min_with_guard(c: &ChordDiagram, guard: usize) -> Result<GenusResult> {
    let m = c.m();
    if m == 0 {
        return Err(Error::EmptyDiagram);
    }
    if m > guard || m > 62 {
        return Err(Error::GuardExceeded {
            limit: guard.min(62),
            actual: m,
        });
    }
    let total = 1u64 << m;
    let chunk = 1u64 << m.min(10);
    let best = (0..total / chunk)
        .into_par_iter()
        .map(|block| {
            let mut best = (usize::MAX, u64::MAX);
            for choices in block * chunk..(block + 1) * chunk {
                let g = genus_of(c, choices);
                if (g, choices) < best {
                    best = (g, choices);
                    if g == 0 {
                        break;
                    }
                }
            }
            best
        })
        .min()
        .expect("at least one assignment");
    Ok(GenusResult {
        genus: best.0,
        choices: best.1,
    })
}

pub fn is_planar_realizable(c: &ChordDiagram) -> Result<bool> {
    is_planar_realizable_with_guard(c, DEFAULT_GENUS_GUARD)
}

pub fn is_planar_realizable_with_guard(c: &ChordDiagram, guard: usize) -> Result<bool> {
    if c.is_empty() {
        return Ok(true);
    }
    Ok(genus_min_with_guard(c, guard)?.genus == 0)
}

/// Every chord crosses an even number of chords. Necessary for planarity,
/// used only as a filter.
pub fn parity_filter(c: &ChordDiagram) -> bool {
    let g = c.interlacement_graph();
    (0..g.vertex_count()).all(|v| g.degree(v).is_multiple_of(2))
}
