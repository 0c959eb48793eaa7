use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A word in the braid group on `strands` strands. Letter `±i` is the
/// generator `σ_i^{±1}` crossing strands `i` and `i+1` (1-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i64>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i64>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidBraid("a braid needs at least one strand".into()));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::InvalidBraid(format!("letter {l} out of range for {strands} strands")));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    /// Parses a comma-separated list such as `"1,-2,1,-2"`; the empty string
    /// is the identity braid.
    pub fn parse(s: &str, strands: usize) -> Result<Self> {
        let letters = s
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i64>().map_err(|e| Error::Parse(format!("braid letter {t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation of `d` copies.
    pub fn power(&self, d: usize) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.repeat(d) }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::DimensionMismatch { expected: self.strands, got: other.strands });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    /// Endpoint permutation: top position `p` ends at bottom position
    /// `perm[p]` when the letters are read top to bottom.
    pub fn permutation(&self) -> Permutation {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            for p in at.iter_mut() {
                if *p == i {
                    *p = i + 1;
                } else if *p == i + 1 {
                    *p = i;
                }
            }
        }
        Permutation(at)
    }

    pub fn closure_components(&self) -> ClosureComponents {
        ClosureComponents::from_permutation(&self.permutation())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(i64::to_string).collect();
        write!(f, "[{}] on {} strands", parts.join(","), self.strands)
    }
}

/// Permutation of `{0, …, n-1}`; `self.0[i]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation(pub Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&i| other.0[i]).collect())
    }

    pub fn pow(&self, d: usize) -> Permutation {
        (0..d).fold(Permutation::identity(self.len()), |acc, _| acc.then(self))
    }

    /// Cycles, each starting at its least element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut i = self.0[start];
            while i != start {
                seen[i] = true;
                cyc.push(i);
                i = self.0[i];
            }
            out.push(cyc);
        }
        out
    }

    /// 1-based images, for display.
    pub fn to_one_based(&self) -> Vec<usize> {
        self.0.iter().map(|i| i + 1).collect()
    }
}

/// Components of a braid-like closure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureComponents {
    pub count: usize,
    /// `labeling[p]` is the 1-based component id of strand position `p`;
    /// ids are ordered by least strand position.
    pub labeling: Vec<usize>,
}

impl ClosureComponents {
    pub fn from_permutation(p: &Permutation) -> Self {
        let cycles = p.cycles();
        let mut labeling = vec![0; p.len()];
        for (c, cyc) in cycles.iter().enumerate() {
            for &i in cyc {
                labeling[i] = c + 1;
            }
        }
        ClosureComponents { count: cycles.len(), labeling }
    }

    /// Least strand position (0-based) of each component.
    pub fn representatives(&self) -> Vec<usize> {
        (1..=self.count).map(|c| self.labeling.iter().position(|&l| l == c).unwrap()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(BraidWord::new(2, vec![1, -1]).is_ok());
        assert!(BraidWord::new(2, vec![2]).is_err());
        assert!(BraidWord::new(3, vec![0]).is_err());
        assert!(BraidWord::new(0, vec![]).is_err());
        assert!(BraidWord::identity(1).unwrap().is_empty());
    }

    #[test]
    fn parse_words() {
        let w = BraidWord::parse("1, -2,1,-2", 3).unwrap();
        assert_eq!(w.letters(), &[1, -2, 1, -2]);
        assert!(BraidWord::parse("", 1).unwrap().is_empty());
        assert!(matches!(BraidWord::parse("1,x", 3), Err(Error::Parse(_))));
    }

    #[test]
    fn single_generator_is_transposition() {
        let w = BraidWord::new(2, vec![1]).unwrap();
        assert_eq!(w.permutation(), Permutation(vec![1, 0]));
        assert_eq!(w.closure_components().count, 1);
        assert_eq!(w.power(2).letters(), &[1, 1]);
        assert_eq!(w.power(2).closure_components().count, 2);
    }

    #[test]
    fn identity_closure_components() {
        let w = BraidWord::identity(3).unwrap();
        let c = w.closure_components();
        assert_eq!(c.count, 3);
        assert_eq!(c.labeling, vec![1, 2, 3]);
    }

    #[test]
    fn permutation_power_matches_word_power() {
        let w = BraidWord::new(4, vec![1, 2, -3, 1]).unwrap();
        assert_eq!(w.power(3).permutation(), w.permutation().pow(3));
    }

    #[test]
    fn labeling_by_least_position() {
        let p = Permutation(vec![2, 3, 0, 1]);
        let c = ClosureComponents::from_permutation(&p);
        assert_eq!(c.labeling, vec![1, 2, 1, 2]);
        assert_eq!(c.representatives(), vec![0, 1]);
    }
}
