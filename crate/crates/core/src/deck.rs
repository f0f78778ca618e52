//! Decks: nonempty sets of compositions sharing one sum.

use std::collections::BTreeSet;
use std::fmt;

use crate::composition::Composition;
use crate::error::{Error, Result};

/// The set of k-deletions of some (possibly unknown) composition.
///
/// Iteration follows the canonical order of [`Composition`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Deck {
    elements: BTreeSet<Composition>,
    target_sum: usize,
}

impl Deck {
    /// Collects compositions into a deck. Duplicates collapse; an empty
    /// input or mixed sums are rejected.
    pub fn new<I: IntoIterator<Item = Composition>>(items: I) -> Result<Self> {
        let mut elements = BTreeSet::new();
        let mut target = None;
        for c in items {
            let s = c.sum();
            match target {
                None => target = Some(s),
                Some(t) if t != s => {
                    return Err(Error::MixedSums {
                        expected: t,
                        found: s,
                        line: None,
                    })
                }
                _ => {}
            }
            elements.insert(c);
        }
        let target_sum = target.ok_or(Error::EmptyDeck)?;
        Ok(Deck {
            elements,
            target_sum,
        })
    }

    pub(crate) fn from_set_unchecked(elements: BTreeSet<Composition>, target_sum: usize) -> Self {
        debug_assert!(!elements.is_empty());
        debug_assert!(elements.iter().all(|c| c.sum() == target_sum));
        Deck {
            elements,
            target_sum,
        }
    }

    /// Parses a deck file: one composition per line, `#` comments and blank
    /// lines ignored. Errors carry the 1-based line number.
    pub fn parse(text: &str) -> Result<Self> {
        let mut elements = BTreeSet::new();
        let mut target: Option<usize> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let lead = raw.len() - raw.trim_start().len();
            let c: Composition = line.parse().map_err(|e: crate::ParseError| {
                let mut e = e.on_line(line_no);
                e.column += lead;
                e
            })?;
            let s = c.sum();
            match target {
                None => target = Some(s),
                Some(t) if t != s => {
                    return Err(Error::MixedSums {
                        expected: t,
                        found: s,
                        line: Some(line_no),
                    })
                }
                _ => {}
            }
            elements.insert(c);
        }
        let target_sum = target.ok_or(Error::EmptyDeck)?;
        Ok(Deck {
            elements,
            target_sum,
        })
    }

    pub fn elements(&self) -> &BTreeSet<Composition> {
        &self.elements
    }

    pub fn iter(&self) -> impl Iterator<Item = &Composition> {
        self.elements.iter()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Common sum of every element.
    pub fn target_sum(&self) -> usize {
        self.target_sum
    }

    /// Set membership.
    pub fn contains(&self, c: &Composition) -> bool {
        self.elements.contains(c)
    }

    /// True iff `probe` is, or is contained in, some element.
    pub fn contains_probe(&self, probe: &Composition) -> bool {
        self.elements.iter().any(|d| d.contains(probe))
    }

    pub fn min_len(&self) -> usize {
        self.elements
            .iter()
            .map(Composition::len)
            .min()
            .unwrap_or(0)
    }

    pub fn max_len(&self) -> usize {
        self.elements
            .iter()
            .map(Composition::len)
            .max()
            .unwrap_or(0)
    }
}

impl<'a> IntoIterator for &'a Deck {
    type Item = &'a Composition;
    type IntoIter = std::collections::btree_set::Iter<'a, Composition>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

/// One composition per line, canonical order.
impl fmt::Display for Deck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.elements {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}
