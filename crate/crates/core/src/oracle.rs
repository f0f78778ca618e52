//! Brute-force oracle, exhaustive sweeps, and the tightness witness.

use std::collections::{BTreeSet, HashMap};
use std::fmt::{self, Write as _};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::composition::Composition;
use crate::deck::Deck;
use crate::error::{Error, Result};
use crate::reconstruct::{reconstruct, ReconstructionResult};

/// Largest `n` whose compositions the oracle will enumerate (2^21 of them).
pub const ENUMERATION_GUARD: usize = 22;

/// Compositions of `n` in lexicographic order: first part ascending, then
/// recursively the compositions of the remainder. `[1; n]` comes first,
/// `[n]` last.
#[derive(Debug, Clone)]
pub struct Compositions {
    next: Option<Vec<usize>>,
}

impl Compositions {
    pub fn new(n: usize) -> Self {
        Compositions {
            next: Some(vec![1; n]),
        }
    }
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let current = self.next.take()?;
        if current.len() >= 2 {
            // drop the last part r, bump the new last part, refill with r-1 ones
            let mut succ = current.clone();
            let r = succ.pop().unwrap();
            *succ.last_mut().unwrap() += 1;
            succ.extend(std::iter::repeat_n(1, r - 1));
            self.next = Some(succ);
        }
        Some(Composition::from_parts_unchecked(current))
    }
}

/// Number of compositions of `n`.
pub fn composition_count(n: usize) -> u64 {
    if n == 0 {
        1
    } else {
        1u64 << (n - 1)
    }
}

/// All compositions of `n`, in the order of [`Compositions`].
pub fn enumerate_compositions(n: usize) -> Vec<Composition> {
    Compositions::new(n).collect()
}

/// The `index`-th composition of `n` in enumeration order.
///
/// Bit `n-1-j` of the cut mask says whether a part ends after unit `j`;
/// enumeration order is the cut mask counting down from all ones.
pub fn composition_at(n: usize, index: u64) -> Composition {
    let count = composition_count(n);
    assert!(index < count, "index {index} out of range for n = {n}");
    if n == 0 {
        return Composition::empty();
    }
    let mask = count - 1 - index;
    let mut parts = Vec::new();
    let mut run = 1;
    for j in 1..n {
        if mask >> (n - 1 - j) & 1 == 1 {
            parts.push(run);
            run = 1;
        } else {
            run += 1;
        }
    }
    parts.push(run);
    Composition::from_parts_unchecked(parts)
}

fn guard(n: usize) -> Result<()> {
    if n > ENUMERATION_GUARD {
        Err(Error::EnumerationGuard {
            n,
            max: ENUMERATION_GUARD,
        })
    } else {
        Ok(())
    }
}

/// Every composition of `||deck|| + k` whose k-deletion set is `deck`.
pub fn brute_force_preimages(deck: &Deck, k: usize) -> Result<BTreeSet<Composition>> {
    let n = deck.target_sum() + k;
    guard(n)?;
    let found: Vec<Composition> = (0..composition_count(n))
        .into_par_iter()
        .map(|i| composition_at(n, i))
        .filter(|w| deck.iter().all(|d| w.contains(d)))
        .filter(|w| w.k_deletions(k).is_ok_and(|own| own == *deck))
        .collect();
    Ok(found.into_iter().collect())
}

/// `(12)^k`, `(21)^k` and their shared k-deletion set, which is every
/// composition of `2k` with parts at most 2.
pub fn tightness_witness(k: usize) -> (Composition, Composition, Deck) {
    let up = Composition::from_parts_unchecked([1, 2].repeat(k));
    let down = Composition::from_parts_unchecked([2, 1].repeat(k));
    let deck = up.k_deletions(k).expect("k <= 3k");
    assert_eq!(deck, down.k_deletions(k).expect("k <= 3k"));
    assert!(deck.iter().all(|c| c.parts().iter().all(|&p| p <= 2)));
    (up, down, deck)
}

/// Outcome of an exhaustive reconstruction sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    pub k: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub total_checked: u64,
    pub failures: Vec<(Composition, ReconstructionResult)>,
    pub elapsed: Duration,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// `key=value` lines. Elapsed time is optional so that the output can
    /// be byte-stable.
    pub fn to_key_value(&self, with_elapsed: bool) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "k={}", self.k);
        let _ = writeln!(out, "n_min={}", self.n_min);
        let _ = writeln!(out, "n_max={}", self.n_max);
        let _ = writeln!(out, "total={}", self.total_checked);
        let _ = writeln!(out, "failures={}", self.failures.len());
        if with_elapsed {
            let _ = writeln!(out, "elapsed_ms={}", self.elapsed.as_millis());
        }
        for (w, r) in &self.failures {
            let _ = writeln!(out, "failure={w} {r}");
        }
        out
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "k: {}", self.k)?;
        writeln!(f, "n: {}..={}", self.n_min, self.n_max)?;
        writeln!(f, "total: {}", self.total_checked)?;
        writeln!(f, "failures: {}", self.failures.len())?;
        writeln!(f, "elapsed: {:.3}s", self.elapsed.as_secs_f64())?;
        for (w, r) in &self.failures {
            writeln!(f, "failure: {w} => {r}")?;
        }
        Ok(())
    }
}

fn check_one(w: Composition, k: usize) -> Option<(Composition, ReconstructionResult)> {
    let result = match w.k_deletions(k).and_then(|deck| reconstruct(&deck, k)) {
        Ok(r) => r,
        Err(e) => ReconstructionResult::NotADeck(e.to_string()),
    };
    match &result {
        ReconstructionResult::Unique(found) if *found == w => None,
        _ => Some((w, result)),
    }
}

/// Checks that every composition of every `n` in `n_min..=n_max` is
/// recovered from its k-deletions. Runs on the current rayon pool.
pub fn sweep(k: usize, n_min: usize, n_max: usize) -> Result<SweepReport> {
    if k == 0 || n_min < 3 * k + 1 || n_min > n_max {
        return Err(Error::SweepRange { k, n_min, n_max });
    }
    guard(n_max)?;
    let start = Instant::now();
    let mut total_checked = 0;
    let mut failures = Vec::new();
    for n in n_min..=n_max {
        let count = composition_count(n);
        total_checked += count;
        let found: Vec<_> = (0..count)
            .into_par_iter()
            .filter_map(|i| check_one(composition_at(n, i), k))
            .collect();
        failures.extend(found);
    }
    Ok(SweepReport {
        k,
        n_min,
        n_max,
        total_checked,
        failures,
        elapsed: start.elapsed(),
    })
}

/// [`sweep`] on a dedicated pool of `jobs` threads.
pub fn sweep_with_jobs(k: usize, n_min: usize, n_max: usize, jobs: usize) -> Result<SweepReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| sweep(k, n_min, n_max))
}

/// Groups the compositions of `n` by k-deletion set and returns the groups
/// with two or more members, each in enumeration order.
pub fn collision_classes(k: usize, n: usize) -> Result<Vec<Vec<Composition>>> {
    guard(n)?;
    if k > n {
        return Err(Error::TooManyDeletions { k, sum: n });
    }
    let decks: Vec<(Composition, Deck)> = (0..composition_count(n))
        .into_par_iter()
        .map(|i| {
            let w = composition_at(n, i);
            let deck = w.k_deletions(k).expect("k <= n");
            (w, deck)
        })
        .collect();
    let mut groups: HashMap<Deck, Vec<Composition>> = HashMap::new();
    let mut order = Vec::new();
    for (w, deck) in decks {
        let entry = groups.entry(deck.clone()).or_default();
        if entry.is_empty() {
            order.push(deck);
        }
        entry.push(w);
    }
    Ok(order
        .into_iter()
        .filter_map(|d| groups.remove(&d))
        .filter(|g| g.len() >= 2)
        .collect())
}

/// Number of k-deletion sets shared by two or more compositions of `n`.
pub fn ambiguity_census(k: usize, n: usize) -> Result<usize> {
    collision_classes(k, n).map(|c| c.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::comp;

    #[test]
    fn enumeration_small() {
        assert_eq!(enumerate_compositions(0), vec![Composition::empty()]);
        let three: Vec<String> = enumerate_compositions(3)
            .iter()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(three, ["1,1,1", "1,2", "2,1", "3"]);
        assert_eq!(enumerate_compositions(10).len(), 512);
    }

    #[test]
    fn indexed_matches_iterator() {
        for n in 0..=9 {
            let listed = enumerate_compositions(n);
            let indexed: Vec<_> = (0..composition_count(n))
                .map(|i| composition_at(n, i))
                .collect();
            assert_eq!(listed, indexed, "n = {n}");
        }
    }

    #[test]
    fn enumeration_is_first_part_recursive() {
        // first part p, then the compositions of n - p
        fn recursive(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in 1..=n {
                for mut rest in recursive(n - p) {
                    rest.insert(0, p);
                    out.push(rest);
                }
            }
            out
        }
        for n in 0..=8 {
            let ours: Vec<Vec<usize>> = enumerate_compositions(n)
                .into_iter()
                .map(Vec::from)
                .collect();
            assert_eq!(ours, recursive(n));
        }
    }

    #[test]
    fn preimages() {
        let d = Deck::new([comp("1,1"), comp("2")]).unwrap();
        assert_eq!(
            brute_force_preimages(&d, 1).unwrap(),
            BTreeSet::from([comp("1,2"), comp("2,1")])
        );
        let d = Deck::new([comp("4,1")]).unwrap();
        assert_eq!(
            brute_force_preimages(&d, 0).unwrap(),
            BTreeSet::from([comp("4,1")])
        );
        let d = Deck::new([comp("1")]).unwrap();
        assert!(matches!(
            brute_force_preimages(&d, 22),
            Err(Error::EnumerationGuard { n: 23, .. })
        ));
    }

    #[test]
    fn witnesses() {
        let (a, b, d) = tightness_witness(1);
        assert_eq!((a, b), (comp("1,2"), comp("2,1")));
        assert_eq!(d, Deck::new([comp("1,1"), comp("2")]).unwrap());
        let (a, b, d) = tightness_witness(2);
        assert_eq!(
            (a.to_string(), b.to_string()),
            ("1,2,1,2".into(), "2,1,2,1".into())
        );
        let expect = Deck::new(["1,1,1,1", "1,1,2", "1,2,1", "2,1,1", "2,2"].map(comp)).unwrap();
        assert_eq!(d, expect);
        for k in 1..=4 {
            let (a, b, _) = tightness_witness(k);
            assert_eq!(a.sum(), 3 * k);
            assert_eq!(b.sum(), 3 * k);
        }
    }

    #[test]
    fn sweeps() {
        let r = sweep(1, 4, 8).unwrap();
        assert_eq!(r.total_checked, 248);
        assert!(r.passed());
        let r = sweep_with_jobs(3, 10, 12, 2).unwrap();
        assert_eq!(r.total_checked, 512 + 1024 + 2048);
        assert!(r.passed(), "{r}");
        assert!(matches!(sweep(2, 6, 8), Err(Error::SweepRange { .. })));
        assert!(matches!(sweep(1, 5, 4), Err(Error::SweepRange { .. })));
        assert!(matches!(
            sweep(1, 4, 23),
            Err(Error::EnumerationGuard { .. })
        ));
    }

    #[test]
    fn report_formats() {
        let mut r = sweep(1, 4, 4).unwrap();
        r.elapsed = Duration::from_millis(5);
        assert_eq!(
            r.to_key_value(false),
            "k=1\nn_min=4\nn_max=4\ntotal=8\nfailures=0\n"
        );
        assert!(r.to_key_value(true).contains("elapsed_ms=5\n"));
        assert!(r.to_string().contains("failures: 0\n"));
        r.failures
            .push((comp("1,3"), ReconstructionResult::NotADeck("x".into())));
        assert!(r
            .to_key_value(false)
            .ends_with("failure=1,3 NOT A DECK x\n"));
    }

    #[test]
    fn census() {
        assert!(ambiguity_census(1, 3).unwrap() >= 1);
        assert!(collision_classes(1, 3)
            .unwrap()
            .contains(&vec![comp("1,2"), comp("2,1")]));
        assert_eq!(ambiguity_census(1, 4).unwrap(), 0);
        assert_eq!(ambiguity_census(2, 7).unwrap(), 0);
        assert!(ambiguity_census(3, 2).is_err());
    }
}
