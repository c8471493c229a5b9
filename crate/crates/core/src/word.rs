//! Basis words of the complexified exterior algebra.
//!
//! Letters are drawn from {1..n} ∪ {1̄..n̄} with the fixed total order
//! 1 < … < n < 1̄ < … < n̄. Every stored word is strictly increasing in
//! this order; all wedge signs follow from sorting permutation parity.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    /// Barred letters sort after all unbarred ones.
    pub barred: bool,
    /// 1-based basis index.
    pub idx: u8,
}

impl Letter {
    pub fn plain(idx: u8) -> Self {
        Letter { barred: false, idx }
    }

    pub fn bar(idx: u8) -> Self {
        Letter { barred: true, idx }
    }

    /// Signed shorthand: k > 0 is the letter k, k < 0 is k̄.
    pub fn from_signed(k: i8) -> Self {
        if k > 0 {
            Letter::plain(k as u8)
        } else {
            assert!(k < 0, "letter index must be nonzero");
            Letter::bar((-k) as u8)
        }
    }

    pub fn conj(self) -> Self {
        Letter {
            barred: !self.barred,
            idx: self.idx,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.barred {
            write!(f, "c{}", self.idx)
        } else {
            write!(f, "{}", self.idx)
        }
    }
}

/// A strictly increasing word of letters; the empty word is degree 0.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Canonicalize an arbitrary letter sequence: sort, track parity.
    /// Returns None when a letter repeats (the word is zero).
    pub fn sort(mut letters: Vec<Letter>) -> Option<(Word, i8)> {
        let mut sign = 1i8;
        // insertion sort, counting transpositions
        for i in 1..letters.len() {
            let mut j = i;
            while j > 0 && letters[j - 1] > letters[j] {
                letters.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        for pair in letters.windows(2) {
            if pair[0] == pair[1] {
                return None;
            }
        }
        Some((Word(letters), sign))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// (unbarred count, barred count).
    pub fn bidegree(&self) -> (usize, usize) {
        let p = self.0.iter().filter(|l| !l.barred).count();
        (p, self.0.len() - p)
    }

    /// Concatenate two sorted words; None if a letter repeats.
    /// The sign is the parity of the merge permutation.
    pub fn merge(&self, other: &Word) -> Option<(Word, i8)> {
        for a in &self.0 {
            if other.0.contains(a) {
                return None;
            }
        }
        // parity = number of pairs (a from self, b from other) with b < a
        let mut inversions = 0usize;
        for a in &self.0 {
            for b in &other.0 {
                if b < a {
                    inversions += 1;
                }
            }
        }
        let mut letters = Vec::with_capacity(self.0.len() + other.0.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        letters.sort();
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        Some((Word(letters), sign))
    }

    /// Bar-flip every letter and re-sort, tracking the sign.
    pub fn conj(&self) -> (Word, i8) {
        let letters: Vec<Letter> = self.0.iter().map(|l| l.conj()).collect();
        Word::sort(letters).expect("conjugation cannot introduce repeats")
    }

    pub fn max_index(&self) -> u8 {
        self.0.iter().map(|l| l.idx).max().unwrap_or(0)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        write!(f, "w")?;
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}
