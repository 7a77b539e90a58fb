//! Generators and reduced words of the free product of three copies of Z/2.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// One of the three involutive generators `s1`, `s2`, `s3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct Generator(u8);

impl Generator {
    pub const S1: Generator = Generator(1);
    pub const S2: Generator = Generator(2);
    pub const S3: Generator = Generator(3);
    pub const ALL: [Generator; 3] = [Generator::S1, Generator::S2, Generator::S3];

    pub fn new(index: u8) -> Result<Self, Error> {
        match index {
            1..=3 => Ok(Generator(index)),
            _ => Err(Error::InvalidGenerator(index as i64)),
        }
    }

    /// The index in `{1,2,3}`.
    pub fn index(self) -> u8 {
        self.0
    }

    /// Zero-based position, handy for indexing coordinate arrays.
    pub fn pos(self) -> usize {
        (self.0 - 1) as usize
    }

    /// The generators different from `self`, in increasing order.
    pub fn others(self) -> [Generator; 2] {
        match self.0 {
            1 => [Generator::S2, Generator::S3],
            2 => [Generator::S1, Generator::S3],
            _ => [Generator::S1, Generator::S2],
        }
    }

    /// The generator outside the pair `{self, other}` (requires `self != other`).
    pub fn third(self, other: Generator) -> Generator {
        debug_assert_ne!(self, other);
        Generator(6 - self.0 - other.0)
    }
}

impl TryFrom<u8> for Generator {
    type Error = Error;
    fn try_from(v: u8) -> Result<Self, Error> {
        Generator::new(v)
    }
}

impl From<Generator> for u8 {
    fn from(g: Generator) -> u8 {
        g.0
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.0)
    }
}

/// A reduced word: no two adjacent letters are equal.
///
/// Since the group has no braid relations the reduced word is the unique
/// normal form of its element, so equality is sequence equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(into = "Vec<u8>")]
pub struct Word(Vec<Generator>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    /// Free reduction of an arbitrary letter sequence.
    pub fn reduce<I: IntoIterator<Item = Generator>>(letters: I) -> Self {
        let mut out: Vec<Generator> = Vec::new();
        for g in letters {
            if out.last() == Some(&g) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        Word(out)
    }

    /// Builds a word from indices, reducing it.
    pub fn from_indices(indices: &[u8]) -> Result<Self, Error> {
        let gens = indices
            .iter()
            .map(|&i| Generator::new(i))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Word::reduce(gens))
    }

    /// Builds a word that must already be reduced.
    pub fn from_reduced(letters: Vec<Generator>) -> Result<Self, Error> {
        if letters.windows(2).any(|p| p[0] == p[1]) {
            return Err(Error::NotReduced(letters.iter().map(|g| g.index()).collect()));
        }
        Ok(Word(letters))
    }

    /// Parses `"121"`, `"1,2,1"`, `"s1 s2 s1"`, `"id"` or `"[1,2,1]"`.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let t = text.trim();
        if t.is_empty() || t == "id" || t == "e" || t == "[]" {
            return Ok(Word::identity());
        }
        let mut idx = Vec::new();
        for c in t.chars() {
            match c {
                '1' | '2' | '3' => idx.push(c as u8 - b'0'),
                's' | ',' | ' ' | '[' | ']' | '.' | '*' => {}
                _ => return Err(Error::Parse(format!("bad word {text:?}"))),
            }
        }
        Word::from_indices(&idx)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn last(&self) -> Option<Generator> {
        self.0.last().copied()
    }

    pub fn indices(&self) -> Vec<u8> {
        self.0.iter().map(|g| g.index()).collect()
    }

    /// `self · s`, reduced.
    pub fn times(&self, s: Generator) -> Word {
        let mut v = self.0.clone();
        if v.last() == Some(&s) {
            v.pop();
        } else {
            v.push(s);
        }
        Word(v)
    }

    /// Whether `self · s` is longer than `self`.
    pub fn ascends(&self, s: Generator) -> bool {
        self.last() != Some(s)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Weak order: `self ≤ other` iff `self` is a prefix of `other`.
    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word(self.0[..n].to_vec())
    }

    /// Drops trailing letters while they lie in `pair`.
    pub fn strip_suffix_in(&self, pair: [Generator; 2]) -> Word {
        let mut v = self.0.clone();
        while matches!(v.last(), Some(g) if pair.contains(g)) {
            v.pop();
        }
        Word(v)
    }

    /// All reduced words of length exactly `n`, in lexicographic order.
    pub fn all_of_length(n: usize) -> Vec<Word> {
        let mut layer = vec![Word::identity()];
        for _ in 0..n {
            let mut next = Vec::with_capacity(layer.len() * 2);
            for w in &layer {
                for g in Generator::ALL {
                    if w.ascends(g) {
                        next.push(w.times(g));
                    }
                }
            }
            layer = next;
        }
        layer
    }

    /// All reduced words of length `1..=n`.
    pub fn all_up_to(n: usize) -> Vec<Word> {
        (1..=n).flat_map(Word::all_of_length).collect()
    }
}

impl From<Word> for Vec<u8> {
    fn from(w: Word) -> Vec<u8> {
        w.indices()
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<u8>::deserialize(d)?;
        let gens = v
            .iter()
            .map(|&i| Generator::new(i))
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        Word::from_reduced(gens).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "id");
        }
        let parts: Vec<String> = self.0.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(ix: &[u8]) -> Word {
        Word::from_indices(ix).unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(w(&[1, 2, 2, 3]).indices(), vec![1, 3]);
        assert!(w(&[1, 1]).is_empty());
        assert_eq!(w(&[1, 2, 1, 2]).indices(), vec![1, 2, 1, 2]);
        assert!(w(&[1, 2, 3, 3, 2, 1]).is_empty());
    }

    #[test]
    fn counts_by_length() {
        for n in 1..=8 {
            assert_eq!(Word::all_of_length(n).len(), 3 << (n - 1));
        }
        assert_eq!(Word::all_up_to(8).len(), 765);
        assert_eq!(Word::all_up_to(6).len(), 189);
    }

    #[test]
    fn parse_forms() {
        assert_eq!(Word::parse("121").unwrap(), w(&[1, 2, 1]));
        assert_eq!(Word::parse("s1 s2").unwrap(), w(&[1, 2]));
        assert_eq!(Word::parse("[1,2]").unwrap(), w(&[1, 2]));
        assert!(Word::parse("id").unwrap().is_empty());
        assert!(Word::parse("14").is_err());
        assert!(Word::from_reduced(vec![Generator::S1, Generator::S1]).is_err());
    }

    #[test]
    fn strip_suffix() {
        let pair = [Generator::S1, Generator::S2];
        assert_eq!(w(&[3, 1, 2, 1]).strip_suffix_in(pair), w(&[3]));
        assert_eq!(w(&[1, 2]).strip_suffix_in(pair), Word::identity());
    }

    #[test]
    fn json_round_trip() {
        let x = w(&[1, 2, 3]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, "[1,2,3]");
        assert_eq!(serde_json::from_str::<Word>(&s).unwrap(), x);
        assert!(serde_json::from_str::<Word>("[1,1]").is_err());
    }
}
