//! The Artin action of braids on the free group, used as an independent
//! equality oracle: the representation is faithful, so two braid words are
//! equal iff they act identically on all generators.

use crate::word::{BraidError, BraidWord};

/// Freely reduced word in a free group of fixed rank. Letters are
/// (generator index 1..=rank, sign).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeGroupWord {
    rank: usize,
    letters: Vec<(usize, i8)>,
}

impl FreeGroupWord {
    pub fn identity(rank: usize) -> Self {
        FreeGroupWord { rank, letters: Vec::new() }
    }

    pub fn generator(rank: usize, index: usize) -> Result<Self, BraidError> {
        if index == 0 || index > rank {
            return Err(BraidError::IndexOutOfRange { index, strands: rank });
        }
        Ok(FreeGroupWord { rank, letters: vec![(index, 1)] })
    }

    pub fn from_letters(rank: usize, letters: Vec<(usize, i8)>) -> Result<Self, BraidError> {
        for &(i, _) in &letters {
            if i == 0 || i > rank {
                return Err(BraidError::IndexOutOfRange { index: i, strands: rank });
            }
        }
        Ok(FreeGroupWord { rank, letters }.reduced())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    fn reduced(self) -> Self {
        let mut out: Vec<(usize, i8)> = Vec::with_capacity(self.letters.len());
        for l in self.letters {
            match out.last() {
                Some(&(i, s)) if i == l.0 && s == -l.1 => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        FreeGroupWord { rank: self.rank, letters: out }
    }

    pub fn mul(&self, other: &FreeGroupWord) -> FreeGroupWord {
        assert_eq!(self.rank, other.rank);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        FreeGroupWord { rank: self.rank, letters }.reduced()
    }

    pub fn inverse(&self) -> FreeGroupWord {
        FreeGroupWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|&(i, s)| (i, -s)).collect(),
        }
    }
}

impl std::fmt::Display for FreeGroupWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&(i, s)| if s > 0 { format!("g{i}") } else { format!("g{i}^-1") })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Apply a braid to a free-group word, letter by letter in left-to-right
/// composition order. One positive generator acts by
/// `g_i -> g_i g_{i+1} g_i^-1`, `g_{i+1} -> g_i`, fixing the others.
pub fn artin_action(w: &BraidWord, g: &FreeGroupWord) -> Result<FreeGroupWord, BraidError> {
    if w.strands() != g.rank() {
        return Err(BraidError::StrandMismatch { left: w.strands(), right: g.rank() });
    }
    let rank = g.rank();
    let mut cur = g.clone();
    for l in w.letters() {
        let i = l.index;
        let mut out: Vec<(usize, i8)> = Vec::with_capacity(cur.letters.len() * 3);
        for &(k, s) in &cur.letters {
            let image: Vec<(usize, i8)> = if l.sign > 0 {
                // sigma_i: g_i -> g_i g_{i+1} g_i^-1 ; g_{i+1} -> g_i
                if k == i {
                    vec![(i, 1), (i + 1, 1), (i, -1)]
                } else if k == i + 1 {
                    vec![(i, 1)]
                } else {
                    vec![(k, 1)]
                }
            } else {
                // inverse automorphism: g_i -> g_{i+1} ; g_{i+1} -> g_{i+1}^-1 g_i g_{i+1}
                if k == i {
                    vec![(i + 1, 1)]
                } else if k == i + 1 {
                    vec![(i + 1, -1), (i, 1), (i + 1, 1)]
                } else {
                    vec![(k, 1)]
                }
            };
            if s > 0 {
                out.extend(image);
            } else {
                out.extend(image.into_iter().rev().map(|(a, b)| (a, -b)));
            }
        }
        cur = FreeGroupWord { rank, letters: out }.reduced();
    }
    Ok(cur)
}

/// Equality oracle from the faithfulness of the Artin representation: braids
/// agree iff they act identically on every generator.
pub fn artin_equals(w1: &BraidWord, w2: &BraidWord) -> Result<bool, BraidError> {
    if w1.strands() != w2.strands() {
        return Err(BraidError::StrandMismatch { left: w1.strands(), right: w2.strands() });
    }
    for i in 1..=w1.strands() {
        let g = FreeGroupWord::generator(w1.strands(), i)?;
        if artin_action(w1, &g)? != artin_action(w2, &g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_braid;

    #[test]
    fn switch_of_generators() {
        let s1 = parse_braid("s1", 2).unwrap();
        let g1 = FreeGroupWord::generator(2, 1).unwrap();
        let g2 = FreeGroupWord::generator(2, 2).unwrap();
        let img1 = artin_action(&s1, &g1).unwrap();
        assert_eq!(img1.to_string(), "g1 g2 g1^-1");
        let img2 = artin_action(&s1, &g2).unwrap();
        assert_eq!(img2.to_string(), "g1");
    }

    #[test]
    fn preserves_product_of_generators() {
        // sigma_1 on g1*g2 = (g1 g2 g1^-1)(g1) = g1 g2
        let s1 = parse_braid("s1", 2).unwrap();
        let g1 = FreeGroupWord::generator(2, 1).unwrap();
        let g2 = FreeGroupWord::generator(2, 2).unwrap();
        let prod = g1.mul(&g2);
        assert_eq!(artin_action(&s1, &prod).unwrap(), prod);
    }

    #[test]
    fn inverse_letter_inverts() {
        let w = parse_braid("s2 s1^-1", 3).unwrap();
        let back = w.then(&w.inverse()).unwrap();
        for i in 1..=3 {
            let g = FreeGroupWord::generator(3, i).unwrap();
            assert_eq!(artin_action(&back, &g).unwrap(), g);
        }
    }

    #[test]
    fn relations_hold_under_action() {
        let a = parse_braid("s1 s2 s1", 3).unwrap();
        let b = parse_braid("s2 s1 s2", 3).unwrap();
        assert!(artin_equals(&a, &b).unwrap());
        let c = parse_braid("s1 s2", 3).unwrap();
        let d = parse_braid("s2 s1", 3).unwrap();
        assert!(!artin_equals(&c, &d).unwrap());
    }
}
