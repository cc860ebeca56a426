//! Exhaustive enumeration of chord diagrams and the desk-scale checks built
//! on it.
//!
//! Matchings of `0..2m` are produced by pairing the smallest unpaired point
//! with each larger unpaired point in turn, depth first. Work is sharded by
//! the partner of point 0; per-shard results are keyed by canonical code and
//! merged with an order-independent union, so output does not depend on the
//! number of worker threads.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::arcnum::{
    arc_number, arc_number_bruteforce_with_guard, find_cutting_pair, scan_cutting_pairs,
};
use crate::diagram::{CanonicalCode, Chord, ChordDiagram, GapIndex};
use crate::error::{Error, Result};
use crate::obstruction::{
    classify_star, contains_obstruction_with, find_obstruction, is_c_odd, is_minimal_obstruction,
    satisfies_star, DEFAULT_SUBSET_GUARD,
};

pub const DEFAULT_ENUMERATION_GUARD: usize = 8;
pub const DEFAULT_VERIFY_GUARD: usize = 7;
pub const DEFAULT_ORACLE_MAX_M: usize = 5;

/// `(2m - 1)!!`, the number of perfect matchings on `2m` points.
pub fn double_factorial_odd(m: usize) -> u64 {
    (1..=m as u64).map(|k| 2 * k - 1).product()
}

fn check_guard(m: usize, guard: usize) -> Result<()> {
    if m > guard {
        Err(Error::GuardExceeded {
            limit: guard,
            actual: m,
        })
    } else {
        Ok(())
    }
}

/// Streaming generator of all matchings on `2m` points.
///
/// Each matching is addressed by a mixed-radix odometer: digit `l` selects
/// which of the `2m - 2l - 1` remaining larger points the smallest unpaired
/// point is joined to.
pub struct Matchings {
    m: usize,
    digits: Vec<usize>,
    first_fixed: bool,
    done: bool,
}

impl Matchings {
    fn radix(&self, level: usize) -> usize {
        2 * self.m - 2 * level - 1
    }

    fn decode(&self) -> ChordDiagram {
        let n = 2 * self.m;
        let mut unpaired: Vec<usize> = (0..n).collect();
        let mut partner = vec![0; n];
        for &d in &self.digits {
            let a = unpaired.remove(0);
            let b = unpaired.remove(d);
            partner[a] = b;
            partner[b] = a;
        }
        ChordDiagram::from_pairing(&partner).expect("decoded matching is an involution")
    }

    fn advance(&mut self) {
        let lowest = usize::from(self.first_fixed);
        for level in (lowest..self.m).rev() {
            self.digits[level] += 1;
            if self.digits[level] < self.radix(level) {
                return;
            }
            self.digits[level] = 0;
        }
        self.done = true;
    }
}

impl Iterator for Matchings {
    type Item = ChordDiagram;

    fn next(&mut self) -> Option<ChordDiagram> {
        if self.done {
            return None;
        }
        let out = self.decode();
        if self.m == 0 {
            self.done = true;
        } else {
            self.advance();
        }
        Some(out)
    }
}

pub fn all_matchings(m: usize) -> Result<Matchings> {
    all_matchings_with_guard(m, DEFAULT_ENUMERATION_GUARD)
}

pub fn all_matchings_with_guard(m: usize, guard: usize) -> Result<Matchings> {
    check_guard(m, guard)?;
    Ok(Matchings {
        m,
        digits: vec![0; m],
        first_fixed: false,
        done: false,
    })
}

/// The shard of matchings in which point 0 is joined to `partner`.
pub fn matchings_with_first_partner(m: usize, partner: usize, guard: usize) -> Result<Matchings> {
    check_guard(m, guard)?;
    if m == 0 || partner == 0 || partner >= 2 * m {
        return Err(Error::OutOfRange {
            index: 0,
            value: partner,
            points: 2 * m,
        });
    }
    let mut digits = vec![0; m];
    digits[0] = partner - 1;
    Ok(Matchings {
        m,
        digits,
        first_fixed: true,
        done: false,
    })
}

/// Runs `f` over each shard in parallel and returns the per-shard results in
/// shard order.
fn par_shards<T, F>(m: usize, guard: usize, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(Matchings) -> T + Sync + Send,
{
    check_guard(m, guard)?;
    if m == 0 {
        return Ok(vec![f(all_matchings_with_guard(0, guard)?)]);
    }
    (1..2 * m)
        .into_par_iter()
        .map(|p| matchings_with_first_partner(m, p, guard).map(&f))
        .collect()
}

/// One equivalence class of `m`-chord diagrams.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusEntry {
    pub m: usize,
    pub code: CanonicalCode,
    pub orbit_size: u64,
    pub arc: usize,
    pub cutting_pair: bool,
    /// Some sub-diagram is equivalent to a `C_{2n+1}` (exhaustive subset search).
    pub obstruction: bool,
    /// Every chord has length `m - 2` (false for `m < 3`).
    pub star: bool,
    /// Arc number at least 3 with every proper sub-diagram of arc at most 2.
    pub minimal: bool,
}

fn has_any_obstruction(c: &ChordDiagram) -> Result<bool> {
    for n in 1.. {
        if 2 * n + 1 > c.m() {
            break;
        }
        if contains_obstruction_with(c, n, DEFAULT_SUBSET_GUARD.max(c.m()), true)? {
            return Ok(true);
        }
    }
    Ok(false)
}

fn census_entry(code: CanonicalCode, orbit_size: u64) -> Result<CensusEntry> {
    let c = code.representative();
    let m = c.m();
    let cutting_pair = m > 0 && find_cutting_pair(&c)?.is_some();
    Ok(CensusEntry {
        m,
        arc: arc_number(&c),
        cutting_pair,
        obstruction: has_any_obstruction(&c)?,
        star: m >= 3 && satisfies_star(&c)?,
        minimal: is_minimal_obstruction(&c),
        code,
        orbit_size,
    })
}

fn merge_counts(
    mut a: BTreeMap<CanonicalCode, u64>,
    b: BTreeMap<CanonicalCode, u64>,
) -> BTreeMap<CanonicalCode, u64> {
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}

fn orbit_counts(m: usize, guard: usize) -> Result<BTreeMap<CanonicalCode, u64>> {
    let shards = par_shards(m, guard, |shard| {
        let mut counts = BTreeMap::new();
        for c in shard {
            *counts.entry(c.canonical_code()).or_insert(0) += 1;
        }
        counts
    })?;
    Ok(shards.into_iter().fold(BTreeMap::new(), merge_counts))
}

/// Equivalence classes of `m`-chord diagrams, sorted by canonical code.
pub fn classes(m: usize) -> Result<Vec<CensusEntry>> {
    classes_with_guard(m, DEFAULT_ENUMERATION_GUARD)
}

pub fn classes_with_guard(m: usize, guard: usize) -> Result<Vec<CensusEntry>> {
    let counts = orbit_counts(m, guard)?;
    let entries: Vec<(CanonicalCode, u64)> = counts.into_iter().collect();
    entries
        .into_par_iter()
        .map(|(code, size)| census_entry(code, size))
        .collect()
}

/// Number of classes by Burnside's lemma over the rotation group of order
/// `2m`, with fixed matchings counted by scanning every matching.
pub fn burnside_count(m: usize) -> Result<u64> {
    burnside_count_with_guard(m, DEFAULT_ENUMERATION_GUARD)
}

pub fn burnside_count_with_guard(m: usize, guard: usize) -> Result<u64> {
    let fixed = burnside_fixed_counts(m, guard)?;
    let total: u64 = fixed.iter().sum();
    Ok(total / fixed.len() as u64)
}

/// `fixed[k]` is the number of matchings invariant under rotation by `k`.
pub fn burnside_fixed_counts(m: usize, guard: usize) -> Result<Vec<u64>> {
    let n = (2 * m).max(1);
    let shards = par_shards(m, guard, |shard| {
        let mut fixed = vec![0u64; n];
        for c in shard {
            for (k, slot) in fixed.iter_mut().enumerate() {
                if c.rotate(k as i64) == c {
                    *slot += 1;
                }
            }
        }
        fixed
    })?;
    Ok(shards.into_iter().fold(vec![0; n], |mut acc, s| {
        for (a, b) in acc.iter_mut().zip(s) {
            *a += b;
        }
        acc
    }))
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Largest `m` verified.
    pub m_max: usize,
    /// Refuses `m_max` above this.
    pub guard: usize,
    /// Cross-check the greedy arc number against the brute-force oracle up to this `m`.
    pub oracle_max_m: usize,
}

impl VerifyOptions {
    pub fn new(m_max: usize) -> Self {
        VerifyOptions {
            m_max,
            guard: DEFAULT_VERIFY_GUARD,
            oracle_max_m: DEFAULT_ORACLE_MAX_M,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Counterexample {
    pub check: String,
    pub pairing: String,
    pub detail: String,
}

impl Counterexample {
    fn new(check: &str, c: &ChordDiagram, detail: String) -> Self {
        Counterexample {
            check: check.to_string(),
            pairing: c.to_pairing_string(),
            detail,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremSummary {
    pub m_max: usize,
    pub matchings: u64,
    pub classes: usize,
    pub oracle_checked: u64,
    /// `(m, arc) -> number of classes`
    pub classes_by_arc: BTreeMap<String, usize>,
    pub minimal: Vec<CanonicalCode>,
    pub counterexamples: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub census: Vec<CensusEntry>,
    pub counterexamples: Vec<Counterexample>,
    pub summary: TheoremSummary,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// Line-delimited JSON: census entries, then counterexamples, then the summary.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for e in &self.census {
            out.push_str(&serde_json::to_string(e).expect("census serializes"));
            out.push('\n');
        }
        for c in &self.counterexamples {
            out.push_str(&serde_json::json!({ "counterexample": c }).to_string());
            out.push('\n');
        }
        out.push_str(&serde_json::json!({ "summary": self.summary }).to_string());
        out.push('\n');
        out
    }
}

#[derive(Default)]
struct ShardOutcome {
    counts: BTreeMap<CanonicalCode, u64>,
    counterexamples: Vec<Counterexample>,
    oracle_checked: u64,
}

/// Every matching-level check applied to one diagram.
fn check_matching(c: &ChordDiagram, opts: &VerifyOptions, out: &mut ShardOutcome) -> Result<()> {
    let m = c.m();
    let arc = arc_number(c);
    if m <= opts.oracle_max_m {
        let oracle = arc_number_bruteforce_with_guard(c, m)?;
        out.oracle_checked += 1;
        if oracle != arc {
            out.counterexamples.push(Counterexample::new(
                "arc_oracle",
                c,
                format!("greedy {arc}, brute force {oracle}"),
            ));
        }
    }
    let cutting = find_cutting_pair(c)?.is_some();
    if cutting != (arc == 2) {
        out.counterexamples.push(Counterexample::new(
            "cutting_pair",
            c,
            format!("cutting pair {cutting}, arc {arc}"),
        ));
    }
    let obstructed = has_any_obstruction(c)?;
    if cutting == obstructed {
        out.counterexamples.push(Counterexample::new(
            "theorem",
            c,
            format!("cutting pair {cutting}, obstruction {obstructed}"),
        ));
    }
    if arc >= 3 {
        match find_obstruction(c) {
            Some(w) => {
                let sub = c.sub_diagram(&w.chords)?;
                if is_c_odd(&sub) != Some(w.n) || !is_minimal_obstruction(&sub) {
                    out.counterexamples.push(Counterexample::new(
                        "witness",
                        c,
                        format!("witness {:?} fails recheck", w.chords),
                    ));
                }
            }
            None => out.counterexamples.push(Counterexample::new(
                "witness",
                c,
                "no witness for arc >= 3".into(),
            )),
        }
    }
    *out.counts.entry(c.canonical_code()).or_insert(0) += 1;
    Ok(())
}

/// Checks the arc = 2 characterization on every matching with `1 <= m <= m_max`.
///
/// For each matching: greedy arc against the brute-force oracle (small `m`),
/// cutting-pair presence against arc = 2, cutting-pair presence against the
/// absence of every `C_{2k+1}` sub-diagram (independent subset search), and a
/// recheck of the extracted witness when arc >= 3.
pub fn verify_theorem(opts: &VerifyOptions) -> Result<TheoremReport> {
    check_guard(opts.m_max, opts.guard)?;
    let mut census = Vec::new();
    let mut counterexamples = Vec::new();
    let mut matchings = 0u64;
    let mut oracle_checked = 0u64;
    for m in 1..=opts.m_max {
        let shards = par_shards(m, opts.guard, |shard| -> Result<ShardOutcome> {
            let mut out = ShardOutcome::default();
            for c in shard {
                check_matching(&c, opts, &mut out)?;
            }
            Ok(out)
        })?;
        let mut counts = BTreeMap::new();
        for s in shards {
            let s = s?;
            counts = merge_counts(counts, s.counts);
            counterexamples.extend(s.counterexamples);
            oracle_checked += s.oracle_checked;
        }
        matchings += counts.values().sum::<u64>();
        let entries: Vec<(CanonicalCode, u64)> = counts.into_iter().collect();
        let level: Vec<CensusEntry> = entries
            .into_par_iter()
            .map(|(code, size)| census_entry(code, size))
            .collect::<Result<_>>()?;
        census.extend(level);
    }
    counterexamples.sort();

    let mut classes_by_arc = BTreeMap::new();
    for e in &census {
        *classes_by_arc
            .entry(format!("m={} arc={}", e.m, e.arc))
            .or_insert(0) += 1;
    }
    let minimal = census
        .iter()
        .filter(|e| e.minimal)
        .map(|e| e.code.clone())
        .collect();
    let summary = TheoremSummary {
        m_max: opts.m_max,
        matchings,
        classes: census.len(),
        oracle_checked,
        classes_by_arc,
        minimal,
        counterexamples: counterexamples.len(),
    };
    Ok(TheoremReport {
        census,
        counterexamples,
        summary,
    })
}

/// Gap-level violations of: for a minimal obstruction `c`, a chord `ch`, and a
/// cutting pair of `c` minus `ch`, the pair does not separate the endpoints of
/// `ch`.
///
/// A gap of the smaller diagram may correspond to up to three gaps of `c`
/// (the deleted endpoints sit inside it); every lift is checked.
pub fn deletion_cutting_pair_violations(
    c: &ChordDiagram,
) -> Result<Vec<(Chord, GapIndex, GapIndex)>> {
    let n = c.points();
    let mut violations = Vec::new();
    for ch in c.chords() {
        let rest = c.delete_chord(ch)?;
        if rest.is_empty() {
            continue;
        }
        let kept: Vec<usize> = (0..n).filter(|&p| p != ch.a && p != ch.b).collect();
        let lift = |g: GapIndex| -> Vec<usize> {
            let from = kept[g.0];
            let to = kept[(g.0 + 1) % kept.len()];
            let span = (to + n - from) % n;
            (0..span).map(|k| (from + k) % n).collect()
        };
        for pair in scan_cutting_pairs(&rest)?.pairs {
            for g in lift(pair.g1) {
                for h in lift(pair.g2) {
                    if gaps_separate(n, g, h, ch.a, ch.b) {
                        violations.push((ch, GapIndex(g), GapIndex(h)));
                    }
                }
            }
        }
    }
    Ok(violations)
}

/// Whether cutting at gaps `g` and `h` puts points `x` and `y` on different sides.
fn gaps_separate(n: usize, g: usize, h: usize, x: usize, y: usize) -> bool {
    let on_first_side = |p: usize| (p + n - g - 1) % n < (h + n - g) % n;
    on_first_side(x) != on_first_side(y)
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct LemmaViolation {
    pub lemma: String,
    pub pairing: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub m_max: usize,
    /// Minimal obstructions found, per `m`.
    pub minimal_by_m: BTreeMap<usize, usize>,
    pub minimal: Vec<CanonicalCode>,
    pub length_checks: usize,
    pub separation_checks: usize,
    pub violations: Vec<LemmaViolation>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Over every class with `m <= m_max` that is a minimal obstruction: every
/// chord has length `<= m - 2` and `>= m - 2`, the length-`(m-2)` classification
/// holds, and no cutting pair of a one-chord deletion separates the deleted
/// chord.
pub fn verify_lemmas(opts: &VerifyOptions) -> Result<LemmaReport> {
    check_guard(opts.m_max, opts.guard)?;
    let mut report = LemmaReport {
        m_max: opts.m_max,
        minimal_by_m: BTreeMap::new(),
        minimal: Vec::new(),
        length_checks: 0,
        separation_checks: 0,
        violations: Vec::new(),
    };
    for m in 1..=opts.m_max {
        let codes: Vec<CanonicalCode> = orbit_counts(m, opts.guard)?.into_keys().collect();
        let minimal: Vec<CanonicalCode> = codes
            .into_par_iter()
            .filter(|code| is_minimal_obstruction(&code.representative()))
            .collect();
        report.minimal_by_m.insert(m, minimal.len());
        for code in minimal {
            let c = code.representative();
            let pairing = c.to_pairing_string();
            let mut violation = |lemma: &str, detail: String| {
                report.violations.push(LemmaViolation {
                    lemma: lemma.to_string(),
                    pairing: pairing.clone(),
                    detail,
                })
            };
            for ch in c.chords() {
                let l = c.chord_length(ch)?;
                report.length_checks += 1;
                if l + 2 > m {
                    violation("length_upper", format!("chord {ch} has length {l} > m - 2"));
                }
                if l + 2 < m {
                    violation("length_lower", format!("chord {ch} has length {l} < m - 2"));
                }
            }
            if let Err(e) = classify_star(&c) {
                violation("star_classification", e.to_string());
            }
            report.separation_checks += c.m();
            for (ch, g, h) in deletion_cutting_pair_violations(&c)? {
                violation(
                    "cutting_pair_separation",
                    format!("{g} {h} separate chord {ch}"),
                );
            }
            report.minimal.push(code);
        }
    }
    report.violations.sort();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matching_counts() {
        assert_eq!(all_matchings(0).unwrap().count(), 1);
        assert_eq!(all_matchings(2).unwrap().count(), 3);
        assert_eq!(all_matchings(3).unwrap().count(), 15);
        assert_eq!(all_matchings(5).unwrap().count(), 945);
        assert!(all_matchings(9).is_err());
    }

    #[test]
    fn matching_order_is_depth_first() {
        let all: Vec<String> = all_matchings(2)
            .unwrap()
            .map(|c| c.to_pairs_string())
            .collect();
        assert_eq!(all, vec!["0-1 2-3", "0-2 1-3", "0-3 1-2"]);
    }

    #[test]
    fn shards_partition_the_stream() {
        let whole: Vec<ChordDiagram> = all_matchings(4).unwrap().collect();
        let sharded: Vec<ChordDiagram> = (1..8)
            .flat_map(|p| matchings_with_first_partner(4, p, 8).unwrap())
            .collect();
        assert_eq!(whole, sharded);
    }

    #[test]
    fn class_counts() {
        assert_eq!(classes(1).unwrap().len(), 1);
        assert_eq!(classes(2).unwrap().len(), 2);
        assert_eq!(burnside_fixed_counts(2, 8).unwrap(), vec![3, 1, 3, 1]);
        assert_eq!(burnside_count(2).unwrap(), 2);
        assert_eq!(burnside_count(1).unwrap(), 1);
        assert_eq!(burnside_count(3).unwrap(), classes(3).unwrap().len() as u64);
    }

    #[test]
    fn small_theorem_run() {
        let report = verify_theorem(&VerifyOptions::new(4)).unwrap();
        assert!(report.passed(), "{:?}", report.counterexamples);
        assert_eq!(report.summary.matchings, 1 + 3 + 15 + 105);
        assert!(report
            .census
            .iter()
            .filter(|e| e.m <= 2)
            .all(|e| e.arc == 2));
    }

    #[test]
    fn separation_lemma_on_c5() {
        let c5 = crate::obstruction::make_c(2).unwrap();
        assert!(deletion_cutting_pair_violations(&c5).unwrap().is_empty());
    }

    #[test]
    fn gap_sides() {
        // Cutting gaps 0 and 2 of a 4-point circle: {1, 2} | {3, 0}.
        assert!(gaps_separate(4, 0, 2, 1, 3));
        assert!(!gaps_separate(4, 0, 2, 1, 2));
        assert!(gaps_separate(4, 2, 0, 0, 2));
    }
}
