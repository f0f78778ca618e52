//! Layered permutations and their correspondence with compositions.
//!
//! A layered permutation is a direct sum of decreasing permutations; its
//! layer lengths form a composition, and pattern containment between layered
//! permutations matches containment between the compositions.

use std::fmt;
use std::str::FromStr;

use crate::composition::{parse_list, write_joined, Composition};
use crate::error::{Error, Result};

/// Brute-force pattern search refuses texts longer than this.
pub const PATTERN_GUARD: usize = 12;

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    entries: Vec<usize>,
}

impl Permutation {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &e in &entries {
            if e == 0 || e > n || seen[e] {
                return Err(Error::NotAPermutation(format!(
                    "entry {e} is out of range or repeated for length {n}"
                )));
            }
            seen[e] = true;
        }
        Ok(Permutation { entries })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("()");
        }
        write_joined(f, &self.entries)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(parse_list(s, true)?)
    }
}

/// Direct sum of decreasing permutations of lengths `w(1), w(2), ...`.
pub fn composition_to_layered(w: &Composition) -> Permutation {
    let mut entries = Vec::with_capacity(w.sum());
    let mut offset = 0;
    for &p in w.parts() {
        entries.extend((offset + 1..=offset + p).rev());
        offset += p;
    }
    Permutation { entries }
}

/// Layer lengths of a layered permutation.
///
/// Cuts wherever the prefix is exactly `{1..=i}`; the permutation is layered
/// iff every block between cuts is decreasing.
pub fn layered_to_composition(p: &Permutation) -> Result<Composition> {
    let mut parts = Vec::new();
    let mut start = 0;
    let mut prefix_max = 0;
    for (i, &e) in p.entries.iter().enumerate() {
        prefix_max = prefix_max.max(e);
        if prefix_max == i + 1 {
            let block = &p.entries[start..=i];
            if block.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::NotLayered(p.to_string()));
            }
            parts.push(block.len());
            start = i + 1;
        }
    }
    Ok(Composition::from_parts_unchecked(parts))
}

fn same_pattern(sigma: &[usize], values: &[usize]) -> bool {
    (0..sigma.len())
        .all(|a| (a + 1..sigma.len()).all(|b| (sigma[a] < sigma[b]) == (values[a] < values[b])))
}

/// True iff some subsequence of `pi` is order-isomorphic to `sigma`.
///
/// Exhaustive over index subsets; `pi` is limited to [`PATTERN_GUARD`].
pub fn pattern_contains(sigma: &Permutation, pi: &Permutation) -> Result<bool> {
    if pi.len() > PATTERN_GUARD {
        return Err(Error::PatternTooLarge {
            len: pi.len(),
            max: PATTERN_GUARD,
        });
    }
    let (k, n) = (sigma.len(), pi.len());
    if k > n {
        return Ok(false);
    }
    // walk the k-subsets of 0..n in lexicographic order
    let mut idx: Vec<usize> = (0..k).collect();
    let mut values = vec![0; k];
    loop {
        for (v, &i) in values.iter_mut().zip(&idx) {
            *v = pi.entries[i];
        }
        if same_pattern(&sigma.entries, &values) {
            return Ok(true);
        }
        let Some(pos) = (0..k).rev().find(|&j| idx[j] < n - k + j) else {
            return Ok(false);
        };
        idx[pos] += 1;
        for j in pos + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::comp;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn to_layered() {
        assert_eq!(
            composition_to_layered(&comp("2,1,3,1,2")),
            perm("2,1,3,6,5,4,7,9,8")
        );
        assert_eq!(composition_to_layered(&comp("1")), perm("1"));
        assert_eq!(composition_to_layered(&comp("1,2,2")), perm("1,3,2,5,4"));
        assert_eq!(
            composition_to_layered(&Composition::empty()).to_string(),
            "()"
        );
    }

    #[test]
    fn from_layered() {
        assert_eq!(
            layered_to_composition(&perm("2,1,3,6,5,4,7,9,8")).unwrap(),
            comp("2,1,3,1,2")
        );
        assert_eq!(layered_to_composition(&perm("1")).unwrap(), comp("1"));
        assert_eq!(
            layered_to_composition(&perm("2,4,1,3")),
            Err(Error::NotLayered("2,4,1,3".into()))
        );
        assert!(layered_to_composition(&perm("1,3,2,4,6,5,7")).is_ok());
        // blocks must be decreasing, not merely closed under prefix
        assert!(layered_to_composition(&perm("2,3,1")).is_err());
    }

    #[test]
    fn patterns() {
        assert!(pattern_contains(&perm("1,3,2,5,4"), &perm("2,1,3,6,5,4,7,9,8")).unwrap());
        let p = perm("3,1,4,2");
        assert!(pattern_contains(&p, &p).unwrap());
        assert!(!pattern_contains(&perm("2,1"), &perm("1,2")).unwrap());
        assert!(pattern_contains(&perm("()"), &perm("1,2")).unwrap());
        assert!(!pattern_contains(&perm("1,2,3"), &perm("1,2")).unwrap());
        let big = Permutation::new((1..=13).collect()).unwrap();
        assert!(matches!(
            pattern_contains(&perm("1"), &big),
            Err(Error::PatternTooLarge { .. })
        ));
    }

    #[test]
    fn permutation_validation() {
        assert!("1,1".parse::<Permutation>().is_err());
        assert!("0,1".parse::<Permutation>().is_err());
        assert!("1,3".parse::<Permutation>().is_err());
        assert!("x".parse::<Permutation>().is_err());
    }
}
