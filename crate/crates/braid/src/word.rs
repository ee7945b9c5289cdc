//! Braid words: sequences of Artin generators and inverses for a fixed strand
//! count, composed left to right.

use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum BraidError {
    StrandMismatch { left: usize, right: usize },
    IndexOutOfRange { index: usize, strands: usize },
    Parse(String),
    TooFewStrands(usize),
}

impl fmt::Display for BraidError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidError::StrandMismatch { left, right } => {
                write!(f, "strand counts differ: {left} vs {right}")
            }
            BraidError::IndexOutOfRange { index, strands } => {
                write!(f, "generator s{index} out of range for {strands} strands")
            }
            BraidError::Parse(s) => write!(f, "{s}"),
            BraidError::TooFewStrands(n) => write!(f, "need at least 2 strands, got {n}"),
        }
    }
}

impl std::error::Error for BraidError {}

/// One letter: generator index in `1..n-1`, sign +1 or -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub index: usize,
    pub sign: i8,
}

impl Letter {
    pub fn inverse(self) -> Letter {
        Letter { index: self.index, sign: -self.sign }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn identity(strands: usize) -> Self {
        BraidWord { strands, letters: Vec::new() }
    }

    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self, BraidError> {
        if strands < 2 {
            return Err(BraidError::TooFewStrands(strands));
        }
        for l in &letters {
            if l.index == 0 || l.index >= strands {
                return Err(BraidError::IndexOutOfRange { index: l.index, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn generator(strands: usize, index: usize, sign: i8) -> Result<Self, BraidError> {
        BraidWord::new(strands, vec![Letter { index, sign: if sign < 0 { -1 } else { 1 } }])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign as i64).sum()
    }

    /// Concatenation (left-to-right composition).
    pub fn then(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch { left: self.strands, right: other.strands });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Cancel adjacent `s s^-1` pairs.
    pub fn free_reduced(&self) -> BraidWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match out.last() {
                Some(&t) if t.index == l.index && t.sign == -l.sign => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        BraidWord { strands: self.strands, letters: out }
    }

    /// Conjugate `c^-1 self c`.
    pub fn conjugated_by(&self, c: &BraidWord) -> Result<BraidWord, BraidError> {
        c.inverse().then(self)?.then(c)
    }

    /// Underlying permutation: position before the braid to position after.
    pub fn permutation(&self) -> Vec<usize> {
        let mut p: Vec<usize> = (0..self.strands).collect();
        // p[s] = current position of the strand that started at s
        for l in &self.letters {
            let i = l.index - 1;
            for v in p.iter_mut() {
                if *v == i {
                    *v += 1;
                } else if *v == i + 1 {
                    *v -= 1;
                }
            }
        }
        p
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        // run-length collapse equal adjacent letters into powers
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut j = i;
            while j < self.letters.len() && self.letters[j] == l {
                j += 1;
            }
            let count = (j - i) as i64 * l.sign as i64;
            if count == 1 {
                parts.push(format!("s{}", l.index));
            } else {
                parts.push(format!("s{}^{}", l.index, count));
            }
            i = j;
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// Parse table notation: whitespace-separated tokens `sK` or `sK^E` with
/// nonzero integer `E`; `e` is the empty word.
pub fn parse_braid(text: &str, strands: usize) -> Result<BraidWord, BraidError> {
    if strands < 2 {
        return Err(BraidError::TooFewStrands(strands));
    }
    let mut letters = Vec::new();
    for tok in text.split_whitespace() {
        if tok == "e" {
            continue;
        }
        let rest = tok
            .strip_prefix('s')
            .ok_or_else(|| BraidError::Parse(format!("bad token `{tok}`: expected sK or sK^E")))?;
        let (istr, estr) = match rest.split_once('^') {
            None => (rest, "1"),
            Some((i, e)) => (i, e),
        };
        let index: usize = istr
            .parse()
            .map_err(|_| BraidError::Parse(format!("bad generator index in `{tok}`")))?;
        let exp: i64 = estr
            .parse()
            .map_err(|_| BraidError::Parse(format!("bad exponent in `{tok}`")))?;
        if exp == 0 {
            return Err(BraidError::Parse(format!("zero exponent in `{tok}`")));
        }
        if index == 0 || index >= strands {
            return Err(BraidError::IndexOutOfRange { index, strands });
        }
        let sign = if exp < 0 { -1i8 } else { 1 };
        for _ in 0..exp.unsigned_abs() {
            letters.push(Letter { index, sign });
        }
    }
    Ok(BraidWord { strands, letters })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_table_notation() {
        let w = parse_braid("s3 s2^4 s3^-1", 4).unwrap();
        let signs: Vec<(usize, i8)> = w.letters().iter().map(|l| (l.index, l.sign)).collect();
        assert_eq!(
            signs,
            vec![(3, 1), (2, 1), (2, 1), (2, 1), (2, 1), (3, -1)]
        );
        assert_eq!(parse_braid("e", 2).unwrap(), BraidWord::identity(2));
        assert!(parse_braid("s5", 4).is_err());
        assert!(parse_braid("s0", 4).is_err());
        assert!(parse_braid("t1", 4).is_err());
        assert!(parse_braid("s1^0", 4).is_err());
    }

    #[test]
    fn display_roundtrip() {
        for s in ["s3 s2^4 s3^-1", "e", "s1 s2 s1", "s1^-2 s2 s1^2"] {
            let w = parse_braid(s, 4).unwrap();
            assert_eq!(parse_braid(&w.to_string(), 4).unwrap(), w);
        }
    }

    #[test]
    fn free_reduction() {
        let w = parse_braid("s1 s1^-1 s2", 3).unwrap();
        assert_eq!(w.free_reduced(), parse_braid("s2", 3).unwrap());
        let w = parse_braid("s1 s2 s2^-1 s1^-1", 3).unwrap();
        assert!(w.free_reduced().is_empty());
    }

    #[test]
    fn permutation_convention() {
        // s1 in B2 swaps the two strands
        let w = parse_braid("s1", 2).unwrap();
        assert_eq!(w.permutation(), vec![1, 0]);
        // s1 s2 in B3 sends 0->1->? : strand 0 crosses at 1 then at 2
        let w = parse_braid("s1 s2", 3).unwrap();
        assert_eq!(w.permutation(), vec![2, 0, 1]);
    }

    #[test]
    fn exponent_sum() {
        let w = parse_braid("s3 s2^4 s3^-1", 4).unwrap();
        assert_eq!(w.exponent_sum(), 4);
    }
}
