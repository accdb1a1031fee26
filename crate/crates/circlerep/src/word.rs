//! Circular double-occurrence words, the combinatorial encoding of chord
//! representations.
//!
//! A representation of a circle graph is the circular order of chord
//! endpoints; both endpoints of a chord carry the vertex label, so every
//! symbol occurs exactly twice. Two vertices are adjacent exactly when their
//! occurrences alternate. Words are stored with a fixed cut point but all
//! semantics are circular; extension equality is rotation-only (reflecting
//! the circle would move pre-drawn chords), with `reverse` exposed separately.

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("symbol {0:?} does not occur exactly twice")]
    OddOccurrence(String),
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),
}

/// A circular sequence of labels in which every label occurs exactly twice.
/// The empty word is permitted and represents the empty graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CircularWord {
    symbols: Vec<String>,
}

impl CircularWord {
    /// Parses a token sequence, requiring every token to appear exactly twice.
    pub fn parse<S: Into<String>>(tokens: impl IntoIterator<Item = S>) -> Result<Self, WordError> {
        let symbols: Vec<String> = tokens.into_iter().map(Into::into).collect();
        let mut counts: HashMap<&str, usize> = HashMap::new();
        for s in &symbols {
            *counts.entry(s).or_default() += 1;
        }
        // report the first offender in first-occurrence order
        let mut seen = std::collections::HashSet::new();
        for s in &symbols {
            if seen.insert(s.as_str()) && counts[s.as_str()] != 2 {
                return Err(WordError::OddOccurrence(s.clone()));
            }
        }
        Ok(CircularWord { symbols })
    }

    /// Parses a whitespace-separated string of tokens.
    pub fn parse_str(text: &str) -> Result<Self, WordError> {
        Self::parse(text.split_whitespace())
    }

    pub fn empty() -> Self {
        CircularWord { symbols: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// The stored linear sequence (an arbitrary cut of the circular word).
    pub fn tokens(&self) -> &[String] {
        &self.symbols
    }

    /// Distinct symbols in first-occurrence order.
    pub fn symbols(&self) -> Vec<&str> {
        let mut seen = std::collections::HashSet::new();
        self.symbols
            .iter()
            .filter(|s| seen.insert(s.as_str()))
            .map(|s| s.as_str())
            .collect()
    }

    pub fn contains(&self, symbol: &str) -> bool {
        self.symbols.iter().any(|s| s == symbol)
    }

    /// Both occurrence positions of `symbol` in the stored cut.
    pub fn positions(&self, symbol: &str) -> Option<(usize, usize)> {
        let mut it = self
            .symbols
            .iter()
            .enumerate()
            .filter(|(_, s)| s.as_str() == symbol)
            .map(|(i, _)| i);
        match (it.next(), it.next()) {
            (Some(a), Some(b)) => Some((a, b)),
            _ => None,
        }
    }

    pub fn rotate(&self, k: usize) -> CircularWord {
        if self.symbols.is_empty() {
            return self.clone();
        }
        let n = self.symbols.len();
        let k = k % n;
        let mut symbols = Vec::with_capacity(n);
        symbols.extend_from_slice(&self.symbols[k..]);
        symbols.extend_from_slice(&self.symbols[..k]);
        CircularWord { symbols }
    }

    /// True iff the four occurrences of `u` and `v` read circularly as
    /// `uvuv`. Both symbols must occur in the word and must differ.
    pub fn alternates(&self, u: &str, v: &str) -> Result<bool, WordError> {
        assert_ne!(u, v, "alternates takes two distinct labels");
        let (u1, u2) = self
            .positions(u)
            .ok_or_else(|| WordError::UnknownSymbol(u.to_string()))?;
        let (v1, v2) = self
            .positions(v)
            .ok_or_else(|| WordError::UnknownSymbol(v.to_string()))?;
        // exactly one occurrence of v strictly between the two u's
        let inside = |p: usize| u1 < p && p < u2;
        Ok(inside(v1) != inside(v2))
    }

    /// True iff the word's symbol set equals `V(g)` and alternation matches
    /// adjacency for every pair. A mismatched vertex set returns false.
    pub fn realizes(&self, g: &Graph) -> bool {
        let syms = self.symbols();
        if syms.len() != g.vertex_count() || !syms.iter().all(|s| g.contains(s)) {
            return false;
        }
        for (i, &u) in syms.iter().enumerate() {
            for &v in &syms[i + 1..] {
                if self.alternates(u, v).unwrap() != g.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// The circular subsequence retaining only occurrences of `keep`.
    pub fn induced_subword<'a>(
        &self,
        keep: impl IntoIterator<Item = &'a str>,
    ) -> Result<CircularWord, WordError> {
        let keep: std::collections::HashSet<&str> = keep.into_iter().collect();
        for &s in &keep {
            if !self.contains(s) {
                return Err(WordError::UnknownSymbol(s.to_string()));
            }
        }
        Ok(CircularWord {
            symbols: self
                .symbols
                .iter()
                .filter(|s| keep.contains(s.as_str()))
                .cloned()
                .collect(),
        })
    }

    /// True iff `other` is a rotation of `self`. Reflections do not count.
    pub fn circular_eq(&self, other: &CircularWord) -> bool {
        if self.symbols.len() != other.symbols.len() {
            return false;
        }
        if self.symbols.is_empty() {
            return true;
        }
        (0..self.symbols.len()).any(|k| {
            self.symbols[k..]
                .iter()
                .chain(&self.symbols[..k])
                .eq(other.symbols.iter())
        })
    }

    /// The rotation that is minimal under position-of-first-occurrence
    /// relabeling, ties broken by the label sequence itself. Two words have
    /// equal canonical forms exactly when they are rotations of each other.
    pub fn canonical_form(&self) -> Vec<String> {
        let n = self.symbols.len();
        if n == 0 {
            return Vec::new();
        }
        let mut best: Option<(Vec<u16>, Vec<&String>)> = None;
        for k in 0..n {
            let rot: Vec<&String> = self.symbols[k..].iter().chain(&self.symbols[..k]).collect();
            let mut ids: HashMap<&str, u16> = HashMap::new();
            let pattern: Vec<u16> = rot
                .iter()
                .map(|s| {
                    let next = ids.len() as u16;
                    *ids.entry(s.as_str()).or_insert(next)
                })
                .collect();
            let key = (pattern, rot);
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
        }
        best.unwrap().1.into_iter().cloned().collect()
    }

    /// The circular sequence read in the opposite orientation.
    pub fn reverse(&self) -> CircularWord {
        CircularWord {
            symbols: self.symbols.iter().rev().cloned().collect(),
        }
    }

    /// Space-separated rendering of the canonical cut.
    pub fn display_canonical(&self) -> String {
        self.canonical_form().join(" ")
    }
}

impl std::fmt::Display for CircularWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.symbols.join(" "))
    }
}

/// Builds a word from single-character tokens, a convenience for fixtures.
pub fn word_of_chars(s: &str) -> Result<CircularWord, WordError> {
    CircularWord::parse(s.chars().map(|c| c.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tau_star() -> CircularWord {
        word_of_chars("susxvxtutwvw").unwrap()
    }

    fn g_star() -> Graph {
        Graph::build(
            ["s", "t", "u", "v", "w", "x"],
            [("s", "u"), ("t", "u"), ("u", "v"), ("v", "x"), ("v", "w")],
        )
        .unwrap()
    }

    #[test]
    fn parse_checks_occurrences() {
        assert_eq!(tau_star().len(), 12);
        assert!(CircularWord::parse_str("a a").is_ok());
        assert_eq!(
            CircularWord::parse_str("a b a").unwrap_err(),
            WordError::OddOccurrence("b".into())
        );
    }

    #[test]
    fn alternation() {
        let w = word_of_chars("abab").unwrap();
        assert!(w.alternates("a", "b").unwrap());
        let w = word_of_chars("aabb").unwrap();
        assert!(!w.alternates("a", "b").unwrap());
        assert!(!tau_star().alternates("u", "w").unwrap());
        // symmetry
        assert_eq!(
            tau_star().alternates("s", "u").unwrap(),
            tau_star().alternates("u", "s").unwrap()
        );
    }

    #[test]
    fn realizes_fixture() {
        assert!(tau_star().realizes(&g_star()));
        let k1 = Graph::build(["a"], Vec::<(&str, &str)>::new()).unwrap();
        assert!(word_of_chars("aa").unwrap().realizes(&k1));
        let edgeless = Graph::build(["s", "t", "w", "x"], Vec::<(&str, &str)>::new()).unwrap();
        assert!(CircularWord::parse_str("s s t t x x w w").unwrap().realizes(&edgeless));
        // reversal keeps realization
        assert!(tau_star().reverse().realizes(&g_star()));
    }

    #[test]
    fn induced_subwords() {
        let t = tau_star();
        let sub = t.induced_subword(["s", "t", "w", "x"]).unwrap();
        assert!(sub.circular_eq(&CircularWord::parse_str("s s x x t t w w").unwrap()));
        let uv = t.induced_subword(["u", "v"]).unwrap();
        assert!(uv.circular_eq(&word_of_chars("uvuv").unwrap()));
        let all = t.induced_subword(t.symbols()).unwrap();
        assert_eq!(all, t);
    }

    #[test]
    fn rotation_equality() {
        let w1 = word_of_chars("abab").unwrap();
        assert!(w1.circular_eq(&word_of_chars("baba").unwrap()));
        assert!(word_of_chars("bacbca")
            .unwrap()
            .circular_eq(&word_of_chars("bcabac").unwrap()));
        assert!(!word_of_chars("abcabc")
            .unwrap()
            .circular_eq(&word_of_chars("acbacb").unwrap()));
    }

    #[test]
    fn canonical_forms() {
        let abab = word_of_chars("abab").unwrap();
        assert_eq!(abab.canonical_form(), word_of_chars("baba").unwrap().canonical_form());
        for k in 0..12 {
            assert_eq!(tau_star().canonical_form(), tau_star().rotate(k).canonical_form());
        }
        assert_ne!(abab.canonical_form(), word_of_chars("aabb").unwrap().canonical_form());
    }

    #[test]
    fn reverse_involution() {
        let t = tau_star();
        assert!(t.reverse().reverse().circular_eq(&t));
        let w = word_of_chars("abab").unwrap();
        assert!(w.reverse().circular_eq(&w));
    }

    #[test]
    fn empty_word() {
        let e = CircularWord::empty();
        let g = Graph::build(Vec::<&str>::new(), Vec::<(&str, &str)>::new()).unwrap();
        assert!(e.realizes(&g));
        assert!(e.circular_eq(&CircularWord::empty()));
        assert!(e.canonical_form().is_empty());
    }
}
