//! Braid words, writhe, closure combinatorics and Markov moves.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("letter {letter} out of range for {strands} strands")]
    IndexOutOfRange { letter: i32, strands: usize },
    #[error("strand count must be at least 1")]
    NoStrands,
    #[error("cannot parse braid letter {0:?}")]
    BadLetter(String),
}

/// A braid word: `strands` and a sequence of nonzero letters `g` with
/// `1 <= |g| <= strands - 1`; `g > 0` is the positive generator at position
/// `g`, `g < 0` its inverse. Words are never freely reduced automatically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands < 1 {
            return Err(BraidError::NoStrands);
        }
        for &g in &letters {
            if g == 0 || g.unsigned_abs() as usize > strands.saturating_sub(1) {
                return Err(BraidError::IndexOutOfRange { letter: g, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Parse a whitespace-separated list of signed generator indices.
    pub fn parse(text: &str, strands: usize) -> Result<Self, BraidError> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let g: i32 = tok
                .parse()
                .map_err(|_| BraidError::BadLetter(tok.to_string()))?;
            letters.push(g);
        }
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Abelianisation: the sum of letter signs.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&g| g.signum() as i64).sum()
    }

    /// Permutation induced on strand positions by the word, as the image
    /// vector: position `i` at the bottom ends at `perm[i]` at the top
    /// (0-based).
    pub fn closure_permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &g in &self.letters {
            let i = (g.unsigned_abs() as usize) - 1;
            // track where each bottom position currently sits
            for p in perm.iter_mut() {
                if *p == i {
                    *p = i + 1;
                } else if *p == i + 1 {
                    *p = i;
                }
            }
        }
        perm
    }

    /// The closure is a knot iff the permutation is a single cycle.
    pub fn is_knot(&self) -> bool {
        let perm = self.closure_permutation();
        let mut seen = vec![false; self.strands];
        let mut at = 0usize;
        let mut len = 0usize;
        while !seen[at] {
            seen[at] = true;
            len += 1;
            at = perm[at];
        }
        len == self.strands
    }

    /// The same letters viewed in the braid group with doubled strand count
    /// (the braid together with a trivial identity braid on `strands` more
    /// strands).
    pub fn embed_union_trivial(&self) -> BraidWord {
        BraidWord {
            strands: self.strands * 2,
            letters: self.letters.clone(),
        }
    }

    /// Markov conjugation `g · b · g^{-1}` (no free reduction).
    pub fn markov_conjugate(&self, g: i32) -> Result<BraidWord, BraidError> {
        if g == 0 || g.unsigned_abs() as usize > self.strands.saturating_sub(1) {
            return Err(BraidError::IndexOutOfRange {
                letter: g,
                strands: self.strands,
            });
        }
        let mut letters = Vec::with_capacity(self.letters.len() + 2);
        letters.push(g);
        letters.extend_from_slice(&self.letters);
        letters.push(-g);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Markov stabilization: append `σ_n^{±1}` in the group with one more
    /// strand.
    pub fn markov_stabilize(&self, sign: i8) -> BraidWord {
        assert!(sign == 1 || sign == -1, "sign must be ±1");
        let mut letters = self.letters.clone();
        letters.push(sign as i32 * self.strands as i32);
        BraidWord {
            strands: self.strands + 1,
            letters,
        }
    }

    /// Mirror image: every crossing reversed.
    pub fn mirror(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|g| -g).collect(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "strands": self.strands, "letters": self.letters })
    }
}

impl std::fmt::Display for BraidWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let word: Vec<String> = self.letters.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", word.join(" "))
    }
}

/// Deterministic pseudo-random braid word: `len` letters drawn uniformly from
/// the nonzero generators of `B_n`, reproducible per seed. For `n = 1` the
/// word is empty.
pub fn random_braid(strands: usize, len: usize, seed: u64) -> BraidWord {
    assert!(strands >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut letters = Vec::with_capacity(len);
    if strands > 1 {
        for _ in 0..len {
            let idx = rng.gen_range(1..strands as i32);
            let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
            letters.push(sign * idx);
        }
    }
    BraidWord { strands, letters }
}

/// Deterministic random braid whose closure is a knot, with at most
/// `max_len` letters. The closure permutation must be a single cycle, which
/// pins the parity of the word length, so the length is sampled too;
/// rejection-sampling over derived seeds keeps the result reproducible.
pub fn random_knot_braid(strands: usize, max_len: usize, seed: u64) -> BraidWord {
    for attempt in 0..10_000u64 {
        let derived = seed.wrapping_mul(1_000_003).wrapping_add(attempt);
        let mut rng = ChaCha8Rng::seed_from_u64(derived ^ 0x9e37_79b9);
        let len = if strands == 1 {
            0
        } else {
            rng.gen_range(0..=max_len)
        };
        let b = random_braid(strands, len, derived);
        if b.is_knot() {
            return b;
        }
    }
    panic!("no knot braid found for strands={strands}, max_len={max_len}, seed={seed}");
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_standard_words() {
        let trefoil = BraidWord::parse("1 1 1", 2).unwrap();
        assert_eq!(trefoil.letters(), &[1, 1, 1]);
        let fig8 = BraidWord::parse("1 -2 1 -2", 3).unwrap();
        assert_eq!(fig8.letters(), &[1, -2, 1, -2]);
        assert!(matches!(
            BraidWord::parse("3", 2),
            Err(BraidError::IndexOutOfRange { .. })
        ));
        assert!(matches!(BraidWord::parse("", 0), Err(BraidError::NoStrands)));
        assert!(BraidWord::parse("", 1).unwrap().is_empty());
    }

    #[test]
    fn writhe_is_abelianisation() {
        assert_eq!(BraidWord::parse("1 1 1", 2).unwrap().writhe(), 3);
        assert_eq!(BraidWord::parse("", 2).unwrap().writhe(), 0);
        assert_eq!(BraidWord::parse("1 -2 1 -2", 3).unwrap().writhe(), 0);
    }

    #[test]
    fn closure_permutation_and_knot_detection() {
        let sigma = BraidWord::parse("1", 2).unwrap();
        assert_eq!(sigma.closure_permutation(), vec![1, 0]);
        assert!(sigma.is_knot());

        let empty2 = BraidWord::parse("", 2).unwrap();
        assert_eq!(empty2.closure_permutation(), vec![0, 1]);
        assert!(!empty2.is_knot());

        let trefoil = BraidWord::parse("1 1 1", 2).unwrap();
        assert_eq!(trefoil.closure_permutation(), vec![1, 0]);
        assert!(trefoil.is_knot());

        // the unknot as the empty 1-braid
        assert!(BraidWord::parse("", 1).unwrap().is_knot());
    }

    #[test]
    fn embedding_doubles_strands_only() {
        let b = BraidWord::parse("1 -2", 3).unwrap();
        let e = b.embed_union_trivial();
        assert_eq!(e.strands(), 6);
        assert_eq!(e.letters(), b.letters());
        let unit = BraidWord::parse("", 1).unwrap().embed_union_trivial();
        assert_eq!(unit.strands(), 2);
    }

    #[test]
    fn markov_moves() {
        let trefoil = BraidWord::parse("1 1 1", 2).unwrap();
        let stab = trefoil.markov_stabilize(1);
        assert_eq!(stab.strands(), 3);
        assert_eq!(stab.letters(), &[1, 1, 1, 2]);

        let sigma = BraidWord::parse("1", 2).unwrap();
        let conj = sigma.markov_conjugate(1).unwrap();
        assert_eq!(conj.letters(), &[1, 1, -1]); // no free reduction

        assert_eq!(conj.writhe(), sigma.writhe());
        assert_eq!(stab.writhe(), trefoil.writhe() + 1);
        assert_eq!(
            trefoil.markov_stabilize(-1).writhe(),
            trefoil.writhe() - 1
        );
    }

    #[test]
    fn markov_moves_preserve_knottedness() {
        for seed in 0..20 {
            let b = random_knot_braid(3, 5, seed);
            assert!(b.is_knot());
            assert!(b.markov_conjugate(2).unwrap().is_knot());
            assert!(b.markov_stabilize(1).is_knot());
            assert!(b.markov_stabilize(-1).is_knot());
        }
    }

    #[test]
    fn random_braids_are_reproducible() {
        let a = random_braid(3, 6, 42);
        let b = random_braid(3, 6, 42);
        assert_eq!(a, b);
        assert_eq!(a.letters().len(), 6);
        assert_ne!(a, random_braid(3, 6, 43));
    }

    #[test]
    fn full_twist_word_is_a_cycle() {
        for n in 2..=8usize {
            let letters: Vec<i32> = (1..n as i32).collect();
            let b = BraidWord::new(n, letters).unwrap();
            assert!(b.is_knot(), "σ_1···σ_(n-1) closure must be a knot for n={n}");
        }
    }
}
