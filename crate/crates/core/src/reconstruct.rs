//! Reconstruction of a composition of `n >= 3k+1` from its k-deletions.
//!
//! The deck first decides whether the unknown composition has fewer than,
//! exactly, or more than `k` ones; each regime has its own procedure. Every
//! answer is checked by recomputing the deck of the result. Below the
//! threshold the brute-force oracle answers instead.

use std::collections::BTreeSet;
use std::fmt;

use crate::composition::Composition;
use crate::deck::Deck;
use crate::error::{Error, Result};
use crate::oracle;

/// How the number of ones in the unknown composition compares with `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OnesRegime {
    FewerThanK,
    ExactlyK,
    MoreThanK,
}

impl OnesRegime {
    /// The regime a known composition falls in.
    pub fn of(w: &Composition, k: usize) -> Self {
        match w.count_ones().cmp(&k) {
            std::cmp::Ordering::Less => OnesRegime::FewerThanK,
            std::cmp::Ordering::Equal => OnesRegime::ExactlyK,
            std::cmp::Ordering::Greater => OnesRegime::MoreThanK,
        }
    }
}

impl fmt::Display for OnesRegime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OnesRegime::FewerThanK => "fewer-than-k",
            OnesRegime::ExactlyK => "exactly-k",
            OnesRegime::MoreThanK => "more-than-k",
        })
    }
}

/// Run lengths of ones around the parts `>= 2`: entry `i` counts the ones
/// between large part `i - 1` and large part `i`, so there are `l + 1`
/// entries for `l` large parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GapVector(Vec<usize>);

impl GapVector {
    pub fn new(entries: Vec<usize>) -> Self {
        GapVector(entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of zero entries.
    pub fn holes(&self) -> usize {
        self.0.iter().filter(|&&z| z == 0).count()
    }

    /// Gaps of `w` around its large parts.
    pub fn of(w: &Composition) -> Self {
        let mut gaps = vec![0];
        for &p in w.parts() {
            if p == 1 {
                *gaps.last_mut().unwrap() += 1;
            } else {
                gaps.push(0);
            }
        }
        GapVector(gaps)
    }

    /// Interleaves ones runs with `large`. Requires `len() == large.len() + 1`.
    pub fn assemble(&self, large: &Composition) -> Composition {
        assert_eq!(self.0.len(), large.len() + 1, "gap vector length mismatch");
        let mut parts = Vec::with_capacity(self.total() + large.len());
        for (i, &gap) in self.0.iter().enumerate() {
            parts.extend(std::iter::repeat_n(1, gap));
            if let Some(&p) = large.parts().get(i) {
                parts.push(p);
            }
        }
        Composition::from_parts_unchecked(parts)
    }
}

impl fmt::Display for GapVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::composition::write_joined(f, &self.0)
    }
}

/// Intermediate quantities of each regime's procedure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Trace {
    FewerThanK {
        /// `ex(w) - k`, the exceedance of a longest deck element.
        slack: usize,
        /// Entrywise lower bound `a(i) = min(w(i), slack + 1)`.
        lower_bound: Composition,
    },
    ExactlyK {
        /// The large parts, read off a deck element without ones.
        large_parts: Composition,
        /// 0-based positions holding large parts.
        positions: Vec<usize>,
    },
    MoreThanK {
        large_parts: Composition,
        /// Probe values `x(i) = min(z(i), n - k - ||b_i||)`.
        probed: GapVector,
        /// The recovered gap vector `z`.
        gaps: GapVector,
    },
}

/// A candidate produced by one of the regime procedures, before validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    pub regime: OnesRegime,
    pub composition: Composition,
    pub trace: Trace,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReconstructionResult {
    Unique(Composition),
    Ambiguous(BTreeSet<Composition>),
    NotADeck(String),
}

impl ReconstructionResult {
    pub fn unique(&self) -> Option<&Composition> {
        match self {
            ReconstructionResult::Unique(w) => Some(w),
            _ => None,
        }
    }
}

impl fmt::Display for ReconstructionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReconstructionResult::Unique(w) => write!(f, "UNIQUE {w}"),
            ReconstructionResult::Ambiguous(set) => {
                f.write_str("AMBIGUOUS")?;
                for w in set {
                    write!(f, " {w}")?;
                }
                Ok(())
            }
            ReconstructionResult::NotADeck(why) => write!(f, "NOT A DECK {why}"),
        }
    }
}

/// `n = ||deck|| + k`, provided `k >= 1` and `n >= 3k+1`.
fn theorem_n(deck: &Deck, k: usize) -> Result<usize> {
    if k == 0 {
        return Err(Error::ZeroDeletions);
    }
    let n = deck.target_sum() + k;
    if n < 3 * k + 1 {
        return Err(Error::BelowThreshold { n, k });
    }
    Ok(n)
}

fn not_a_deck(msg: impl Into<String>) -> Error {
    Error::NotADeck(msg.into())
}

/// Largest `s` in `1..=cap` with `probe(s)` contained in the deck, or 0.
/// Containment of the probes is monotone decreasing in `s`, so the search
/// stops at the first failure.
fn max_probe(deck: &Deck, cap: usize, probe: impl Fn(usize) -> Composition) -> usize {
    let mut best = 0;
    for s in 1..=cap {
        if !deck.contains_probe(&probe(s)) {
            break;
        }
        best = s;
    }
    best
}

/// Decides the ones regime of the unknown composition from its deck.
pub fn classify_ones(deck: &Deck, k: usize) -> Result<OnesRegime> {
    let n = theorem_n(deck, k)?;
    let all_ones = deck.contains(&Composition::ones(n - k));
    let full_spread = deck.max_len() - deck.min_len() == k;
    if !all_ones && !full_spread {
        Ok(OnesRegime::FewerThanK)
    } else if deck.iter().any(|d| d.count_ones() == 0) {
        Ok(OnesRegime::ExactlyK)
    } else {
        Ok(OnesRegime::MoreThanK)
    }
}

/// Fewer than `k` ones. The composition has the length `m` of its longest
/// k-deletions, and probing `1^(i-1) s 1^(m-i)` bounds each part by
/// `min(w(i), t + 1)`; at most one part can exceed that bound.
pub fn reconstruct_few_ones(deck: &Deck, k: usize) -> Result<Derivation> {
    let n = theorem_n(deck, k)?;
    let m = deck.max_len();
    let longest = deck
        .iter()
        .find(|d| d.len() == m)
        .expect("deck is nonempty");
    let slack = longest.exceedance();

    let mut a = Vec::with_capacity(m);
    for i in 0..m {
        let s = max_probe(deck, n - k, |s| Composition::spike(i, s, m - 1 - i));
        if s == 0 {
            return Err(not_a_deck(format!(
                "no deck element has length {m} at position {}",
                i + 1
            )));
        }
        a.push(s);
    }
    let lower_bound = Composition::from_parts_unchecked(a.clone());
    let total: usize = a.iter().sum();

    if total > n {
        return Err(not_a_deck(format!(
            "lower bound {lower_bound} exceeds n = {n}"
        )));
    }
    if total < n {
        let capped: Vec<usize> = (0..m).filter(|&i| a[i] == slack + 1).collect();
        match capped.as_slice() {
            [i] => a[*i] += n - total,
            _ => {
                return Err(not_a_deck(format!(
                    "lower bound {lower_bound} is short of n = {n} with {} parts at the cap {}",
                    capped.len(),
                    slack + 1
                )))
            }
        }
    }

    Ok(Derivation {
        regime: OnesRegime::FewerThanK,
        composition: Composition::from_parts_unchecked(a),
        trace: Trace::FewerThanK { slack, lower_bound },
    })
}

/// Exactly `k` ones. A deck element without ones lists the large parts in
/// order; `1^(i-1) 2 1^(m-i)` is in the deck's down-set iff `w(i) >= 2`.
pub fn reconstruct_exactly_k(deck: &Deck, k: usize) -> Result<Derivation> {
    theorem_n(deck, k)?;
    let m = k + deck.min_len();
    let large_parts = deck
        .iter()
        .find(|d| d.count_ones() == 0)
        .cloned()
        .ok_or_else(|| not_a_deck("no element without ones"))?;
    if m.checked_sub(large_parts.len()) != Some(k) {
        return Err(not_a_deck(format!(
            "{} large parts do not fit length {m} with {k} ones",
            large_parts.len()
        )));
    }

    let positions: Vec<usize> = (0..m)
        .filter(|&i| deck.contains_probe(&Composition::spike(i, 2, m - 1 - i)))
        .collect();
    if positions.len() != large_parts.len() {
        return Err(not_a_deck(format!(
            "{} positions accept a large part but {} large parts are known",
            positions.len(),
            large_parts.len()
        )));
    }

    let mut parts = vec![1; m];
    for (&pos, &p) in positions.iter().zip(large_parts.parts()) {
        parts[pos] = p;
    }
    Ok(Derivation {
        regime: OnesRegime::ExactlyK,
        composition: Composition::from_parts_unchecked(parts),
        trace: Trace::ExactlyK {
            large_parts,
            positions,
        },
    })
}

/// More than `k` ones. The elements with fewest ones keep every large part,
/// giving `v`; the gaps `z` of ones around `v` are found in two passes.
///
/// First, `2^(i-1) 1 2^(l+1-i)` is contained in the deck iff `z(i) > 0`.
/// Then each nonzero gap is probed with `b_i` (the 2s of the nonzero gaps,
/// 1s for the holes) split open at gap `i`, which yields
/// `x(i) = min(z(i), c)` with `c = n - k - ||b_i||` the same for every
/// nonzero gap. If `||v|| + ||x|| < n` exactly one gap reached `c`: two gaps
/// at `c` would force `n <= 3k`. That gap absorbs the remainder.
pub fn reconstruct_many_ones(deck: &Deck, k: usize) -> Result<Derivation> {
    let n = theorem_n(deck, k)?;
    let fewest = deck
        .iter()
        .map(Composition::count_ones)
        .min()
        .expect("deck is nonempty");
    let mut heads = deck.iter().filter(|d| d.count_ones() == fewest);
    let large_parts = heads.next().expect("deck is nonempty").large_parts();
    if let Some(other) = heads.find(|d| d.large_parts() != large_parts) {
        return Err(not_a_deck(format!(
            "elements with fewest ones disagree on large parts: {large_parts} vs {}",
            other.large_parts()
        )));
    }
    let l = large_parts.len();

    let twos_around_one = |i: usize| {
        let mut parts = vec![2; l + 1];
        parts[i] = 1;
        Composition::from_parts_unchecked(parts)
    };
    let is_hole: Vec<bool> = (0..=l)
        .map(|i| !deck.contains_probe(&twos_around_one(i)))
        .collect();

    let mut x = vec![0; l + 1];
    let mut cap = 0;
    for i in (0..=l).filter(|&i| !is_hole[i]) {
        // b(j) = 1 when the gap separating it from its anchor is a hole.
        let b: Vec<usize> = (0..l)
            .map(|j| {
                let anchor_hole = if j < i { is_hole[j] } else { is_hole[j + 1] };
                if anchor_hole {
                    1
                } else {
                    2
                }
            })
            .collect();
        let b_sum: usize = b.iter().sum();
        cap = (n - k).saturating_sub(b_sum);
        x[i] = max_probe(deck, n - k, |s| {
            let mut parts = Vec::with_capacity(l + s);
            parts.extend_from_slice(&b[..i]);
            parts.extend(std::iter::repeat_n(1, s));
            parts.extend_from_slice(&b[i..]);
            Composition::from_parts_unchecked(parts)
        });
    }
    let probed = GapVector::new(x.clone());

    let total = large_parts.sum() + probed.total();
    if total > n {
        return Err(not_a_deck(format!("gaps {probed} overshoot n = {n}")));
    }
    if total < n {
        let capped: Vec<usize> = (0..=l).filter(|&i| !is_hole[i] && x[i] == cap).collect();
        match capped.as_slice() {
            [i] => x[*i] += n - total,
            _ => {
                return Err(not_a_deck(format!(
                    "gaps {probed} are short of n = {n} with {} gaps at the cap {cap}",
                    capped.len()
                )))
            }
        }
    }
    let gaps = GapVector::new(x);

    Ok(Derivation {
        regime: OnesRegime::MoreThanK,
        composition: gaps.assemble(&large_parts),
        trace: Trace::MoreThanK {
            large_parts,
            probed,
            gaps,
        },
    })
}

/// Classifies the deck and runs the matching procedure, without validation.
pub fn reconstruct_with_trace(deck: &Deck, k: usize) -> Result<Derivation> {
    match classify_ones(deck, k)? {
        OnesRegime::FewerThanK => reconstruct_few_ones(deck, k),
        OnesRegime::ExactlyK => reconstruct_exactly_k(deck, k),
        OnesRegime::MoreThanK => reconstruct_many_ones(deck, k),
    }
}

/// Recovers the composition whose k-deletions form `deck`.
///
/// For `n >= 3k+1` the regime procedures run and the result is validated
/// against the deck. For `n <= 3k` the brute-force oracle decides, which
/// fails with [`Error::EnumerationGuard`] for large `n`.
pub fn reconstruct(deck: &Deck, k: usize) -> Result<ReconstructionResult> {
    if k == 0 {
        return Ok(match deck.len() {
            1 => ReconstructionResult::Unique(deck.iter().next().unwrap().clone()),
            _ => ReconstructionResult::NotADeck("a 0-deck has exactly one element".into()),
        });
    }
    let n = deck.target_sum() + k;
    if n < 3 * k + 1 {
        let mut preimages = oracle::brute_force_preimages(deck, k)?;
        return Ok(match preimages.len() {
            0 => ReconstructionResult::NotADeck(format!("no composition of {n} has this deck")),
            1 => ReconstructionResult::Unique(preimages.pop_first().unwrap()),
            _ => ReconstructionResult::Ambiguous(preimages),
        });
    }
    match reconstruct_with_trace(deck, k) {
        Ok(d) => {
            if d.composition.k_deletions(k)? == *deck {
                Ok(ReconstructionResult::Unique(d.composition))
            } else {
                Ok(ReconstructionResult::NotADeck(format!(
                    "candidate {} has a different deck",
                    d.composition
                )))
            }
        }
        Err(Error::NotADeck(why)) => Ok(ReconstructionResult::NotADeck(why)),
        Err(e) => Err(e),
    }
}
