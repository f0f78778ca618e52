//! Compositions, their statistics, and the subword containment order.
//!
//! A composition is a word of positive integers. `u` is contained in `w`
//! when some subword `w(i_1) .. w(i_l)` with `l = |u|` dominates `u`
//! entrywise. A 1-deletion lowers a part `>= 2` by one or removes a part
//! equal to 1; the k-deletions of `w` are exactly the compositions of
//! `|w| - k` contained in `w`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::deck::Deck;
use crate::error::{Error, ParseError, Result};

/// A finite word of positive integers.
///
/// The derived ordering is the canonical display order (shorter first, then
/// lexicographic on parts). It is unrelated to the containment order; use
/// [`Composition::contains`] for that.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    /// Builds a composition, rejecting zero parts.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(ParseError::at(pos + 1, "parts must be positive").into());
        }
        Ok(Composition { parts })
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.iter().all(|&p| p >= 1));
        Composition { parts }
    }

    /// The unique composition of 0.
    pub fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    /// `1^len`.
    pub fn ones(len: usize) -> Self {
        Composition {
            parts: vec![1; len],
        }
    }

    /// `1^before s 1^after`.
    pub fn spike(before: usize, value: usize, after: usize) -> Self {
        assert!(value >= 1);
        let mut parts = vec![1; before + 1 + after];
        parts[before] = value;
        Composition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// Number of parts, `|w|`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `||w||`, the integer this composes.
    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `ex(w) = ||w|| - |w|`.
    pub fn exceedance(&self) -> usize {
        self.sum() - self.len()
    }

    /// Sum of `w(i) - 2` over parts `>= 2`.
    pub fn second_exceedance(&self) -> usize {
        self.parts.iter().filter(|&&p| p >= 2).map(|&p| p - 2).sum()
    }

    pub fn count_ones(&self) -> usize {
        self.parts.iter().filter(|&&p| p == 1).count()
    }

    pub fn count_large(&self) -> usize {
        self.parts.iter().filter(|&&p| p >= 2).count()
    }

    /// The parts `>= 2`, in order.
    pub fn large_parts(&self) -> Composition {
        Composition {
            parts: self.parts.iter().copied().filter(|&p| p >= 2).collect(),
        }
    }

    /// True iff `u <= self` in the containment order.
    ///
    /// Greedy leftmost matching: each part of `u` takes the first unused
    /// position of `self` that dominates it. Any embedding can be shifted
    /// onto the leftmost feasible positions, so greedy failure means no
    /// embedding exists.
    pub fn contains(&self, u: &Composition) -> bool {
        let mut positions = self.parts.iter();
        u.parts
            .iter()
            .all(|&need| positions.by_ref().any(|&have| have >= need))
    }

    /// All compositions reachable by a single 1-deletion.
    pub fn one_deletions(&self) -> Result<BTreeSet<Composition>> {
        if self.is_empty() {
            return Err(Error::NothingToDelete);
        }
        let mut out = BTreeSet::new();
        for (i, &p) in self.parts.iter().enumerate() {
            let mut parts = self.parts.clone();
            if p == 1 {
                parts.remove(i);
            } else {
                parts[i] -= 1;
            }
            out.insert(Composition { parts });
        }
        Ok(out)
    }

    /// The set of k-deletions, by k-fold iteration of [`one_deletions`].
    ///
    /// [`one_deletions`]: Composition::one_deletions
    pub fn k_deletions(&self, k: usize) -> Result<Deck> {
        let sum = self.sum();
        if k > sum {
            return Err(Error::TooManyDeletions { k, sum });
        }
        let mut level = BTreeSet::from([self.clone()]);
        for _ in 0..k {
            let mut next = BTreeSet::new();
            for c in &level {
                next.extend(c.one_deletions()?);
            }
            level = next;
        }
        Ok(Deck::from_set_unchecked(level, sum - k))
    }

    /// The set of k-deletions, as the compositions of `||w|| - k` that
    /// `self` contains. Agrees with [`k_deletions`](Composition::k_deletions).
    pub fn k_deletions_by_containment(&self, k: usize) -> Result<Deck> {
        let sum = self.sum();
        if k > sum {
            return Err(Error::TooManyDeletions { k, sum });
        }
        let target = sum - k;
        let elements = crate::oracle::Compositions::new(target)
            .filter(|u| self.contains(u))
            .collect();
        Ok(Deck::from_set_unchecked(elements, target))
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.parts
            .len()
            .cmp(&other.parts.len())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("()");
        }
        write_joined(f, &self.parts)
    }
}

pub(crate) fn write_joined(f: &mut fmt::Formatter<'_>, items: &[usize]) -> fmt::Result {
    for (i, p) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

/// Splits `p1,p2,...` into integers, reporting 1-based columns. `()` is the
/// empty list.
pub(crate) fn parse_list(
    text: &str,
    allow_zero: bool,
) -> std::result::Result<Vec<usize>, ParseError> {
    let trimmed = text.trim();
    if trimmed == "()" {
        return Ok(Vec::new());
    }
    if trimmed.is_empty() {
        return Err(ParseError::at(
            1,
            "empty input; write () for the empty composition",
        ));
    }
    let mut out = Vec::new();
    let mut offset = 0;
    for token in text.split(',') {
        let lead = token.len() - token.trim_start().len();
        let column = offset + lead + 1;
        let t = token.trim();
        if t.is_empty() {
            return Err(ParseError::at(column, "missing value"));
        }
        let value: usize = t
            .parse()
            .map_err(|_| ParseError::at(column, format!("invalid integer `{t}`")))?;
        if value == 0 && !allow_zero {
            return Err(ParseError::at(column, "parts must be positive"));
        }
        out.push(value);
        offset += token.len() + 1;
    }
    Ok(out)
}

impl FromStr for Composition {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        parse_list(s, false).map(|parts| Composition { parts })
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

/// Shorthand for tests and examples: `comp("5,1,2,2")`.
///
/// Panics on malformed input.
pub fn comp(text: &str) -> Composition {
    text.parse()
        .unwrap_or_else(|e| panic!("bad composition literal {text:?}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(items: &[&str]) -> BTreeSet<Composition> {
        items.iter().map(|s| comp(s)).collect()
    }

    #[test]
    fn sums() {
        assert_eq!(comp("2,1,3,1,2").sum(), 9);
        assert_eq!(comp("1,2,1,1").sum(), 5);
        assert_eq!(Composition::empty().sum(), 0);
    }

    #[test]
    fn exceedances() {
        assert_eq!(comp("3,1,2,1").exceedance(), 3);
        assert_eq!(comp("1,1,1,1").exceedance(), 0);
        assert_eq!(comp("2,1,3,1,2").exceedance(), 4);
        assert_eq!(comp("3,2,2").second_exceedance(), 1);
        assert_eq!(comp("1,1,1,1").second_exceedance(), 0);
        assert_eq!(comp("1,1,1,2,2,1,2").second_exceedance(), 0);
        assert_eq!(comp("2,1,3,1,2").second_exceedance(), 1);
    }

    #[test]
    fn ones() {
        assert_eq!(comp("3,2,1,2,1,1").count_ones(), 3);
        assert_eq!(comp("2,2").count_ones(), 0);
        assert_eq!(comp("1,1,1,2,2,1,2").count_ones(), 4);
        assert_eq!(comp("1,1,1,2,2,1,2").large_parts(), comp("2,2,2"));
    }

    #[test]
    fn containment() {
        assert!(comp("2,1,3,1,2").contains(&comp("1,2,1,1")));
        assert!(comp("2,1,3,1,2").contains(&comp("2,1,3,1,2")));
        assert!(!comp("1,2,1,1").contains(&comp("2,2")));
        assert!(comp("1,2").contains(&Composition::empty()));
        assert!(!Composition::empty().contains(&comp("1")));
        // greedy must not consume the 3 for the leading 1 and then fail
        assert!(comp("3,1").contains(&comp("1,1")));
        assert!(!comp("1,3").contains(&comp("2,1")));
    }

    #[test]
    fn one_deletion_examples() {
        assert_eq!(comp("1,2").one_deletions().unwrap(), set(&["1,1", "2"]));
        assert_eq!(
            comp("1").one_deletions().unwrap(),
            BTreeSet::from([Composition::empty()])
        );
        assert_eq!(comp("2,2").one_deletions().unwrap(), set(&["1,2", "2,1"]));
        assert_eq!(
            Composition::empty().one_deletions(),
            Err(Error::NothingToDelete)
        );
    }

    #[test]
    fn k_deletion_examples() {
        let w = comp("5,1,2,2");
        assert_eq!(
            w.k_deletions(0).unwrap().elements(),
            &BTreeSet::from([w.clone()])
        );
        assert_eq!(
            w.k_deletions(3).unwrap().elements(),
            &set(&[
                "5,2", "3,2,2", "4,1,2", "4,2,1", "5,1,1", "2,1,2,2", "3,1,1,2", "3,1,2,1",
                "4,1,1,1"
            ])
        );
        assert!(comp("2,1,3,1,2")
            .k_deletions(4)
            .unwrap()
            .contains(&comp("1,2,1,1")));
        assert_eq!(
            comp("3").k_deletions(3).unwrap().elements(),
            &BTreeSet::from([Composition::empty()])
        );
        assert_eq!(
            comp("2,1").k_deletions(4),
            Err(Error::TooManyDeletions { k: 4, sum: 3 })
        );
        assert_eq!(
            comp("2,1").k_deletions_by_containment(4),
            Err(Error::TooManyDeletions { k: 4, sum: 3 })
        );
    }

    #[test]
    fn canonical_order() {
        let mut v = [
            comp("1,1"),
            comp("2"),
            comp("1,2"),
            comp("1,1,1"),
            Composition::empty(),
        ];
        v.sort();
        let shown: Vec<String> = v.iter().map(|c| c.to_string()).collect();
        assert_eq!(shown, ["()", "2", "1,1", "1,2", "1,1,1"]);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(comp("12, 1,3").parts(), &[12, 1, 3]);
        assert_eq!(comp("()"), Composition::empty());
        assert_eq!(comp("10,2").to_string(), "10,2");
        let err = "2,0,1".parse::<Composition>().unwrap_err();
        assert_eq!(err.column, 3);
        let err = "2,,1".parse::<Composition>().unwrap_err();
        assert_eq!(err.column, 3);
        let err = "2,x".parse::<Composition>().unwrap_err();
        assert_eq!(err.column, 3);
        assert!("".parse::<Composition>().is_err());
        assert!(Composition::new(vec![1, 0]).is_err());
    }
}
