//! Garside left normal form.
//!
//! A braid is represented canonically as `Delta^inf * A_1 ... A_k` where the
//! `A_i` are permutation braids (identity and Delta excluded) and each
//! adjacent pair is left-weighted. Two words are equal in the braid group iff
//! their normal forms coincide, which is how `equals` decides the word
//! problem.

use crate::word::{BraidError, BraidWord, Letter};

/// Permutation braid, stored as the permutation start-position -> end-position.
pub type Perm = Vec<usize>;

fn perm_id(n: usize) -> Perm {
    (0..n).collect()
}

fn perm_delta(n: usize) -> Perm {
    (0..n).map(|i| n - 1 - i).collect()
}

fn perm_inv(p: &Perm) -> Perm {
    let mut q = vec![0; p.len()];
    for (s, &e) in p.iter().enumerate() {
        q[e] = s;
    }
    q
}

/// Conjugation by Delta: tau(P) = Delta P Delta^{-1} (an involution here).
fn tau(p: &Perm) -> Perm {
    let n = p.len();
    let d = perm_delta(n);
    // (d then p then d)(s) = d[p[d[s]]]
    (0..n).map(|s| d[p[d[s]]]).collect()
}

/// Append sigma_i (1-based) after the braid with permutation `p`.
fn append_swap(p: &Perm, i: usize) -> Perm {
    let i = i - 1;
    p.iter().map(|&e| if e == i { i + 1 } else if e == i + 1 { i } else { e }).collect()
}

/// Remove sigma_i from the front: p = swap_i then p', so p'(s) = p(swap_i(s)).
fn strip_front_swap(p: &Perm, i: usize) -> Perm {
    let i = i - 1;
    (0..p.len())
        .map(|s| {
            let t = if s == i { i + 1 } else if s == i + 1 { i } else { s };
            p[t]
        })
        .collect()
}

/// Starting set: generators that are left divisors of the permutation braid.
fn starting_set(p: &Perm) -> Vec<usize> {
    (0..p.len() - 1).filter(|&i| p[i] > p[i + 1]).map(|i| i + 1).collect()
}

/// i is in the finishing set iff appending sigma_i does not stay a
/// permutation braid, i.e. the strands ending at i, i+1 already crossed.
fn in_finishing_set(p: &Perm, i: usize) -> bool {
    let q = perm_inv(p);
    q[i - 1] > q[i]
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    pub strands: usize,
    pub inf: i64,
    pub factors: Vec<Perm>,
}

impl NormalForm {
    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    /// Back to a concrete word: Delta^inf followed by the factors.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let mut letters: Vec<Letter> = Vec::new();
        let delta = delta_letters(n);
        if self.inf >= 0 {
            for _ in 0..self.inf {
                letters.extend_from_slice(&delta);
            }
        } else {
            let inv: Vec<Letter> = delta.iter().rev().map(|l| l.inverse()).collect();
            for _ in 0..(-self.inf) {
                letters.extend_from_slice(&inv);
            }
        }
        for f in &self.factors {
            letters.extend(perm_braid_letters(f));
        }
        BraidWord::new(n, letters).expect("valid by construction")
    }
}

/// Letters of Delta_n: (s1)(s2 s1)(s3 s2 s1)...
fn delta_letters(n: usize) -> Vec<Letter> {
    let mut out = Vec::new();
    for k in 1..n {
        for i in (1..=k).rev() {
            out.push(Letter { index: i, sign: 1 });
        }
    }
    out
}

/// A positive word for a permutation braid: bubble-sort decomposition.
fn perm_braid_letters(p: &Perm) -> Vec<Letter> {
    let mut v = perm_inv(p); // v[position] = strand; sort positions
    let mut out = Vec::new();
    // selection by adjacent transpositions on the inverse permutation:
    // sorting v by adjacent swaps emits the crossings in a valid order
    let n = v.len();
    loop {
        let mut swapped = false;
        for i in 0..n - 1 {
            if v[i] > v[i + 1] {
                v.swap(i, i + 1);
                out.push(Letter { index: i + 1, sign: 1 });
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    out.reverse();
    out
}

/// Left normal form of a braid word.
pub fn normal_form(w: &BraidWord) -> NormalForm {
    let n = w.strands();
    let idp = perm_id(n);
    let dn = perm_delta(n);
    // expand letters to (delta exponent, factor) items
    enum Item {
        D(i64),
        F(Perm),
    }
    let mut items: Vec<Item> = Vec::new();
    for &l in w.letters() {
        if l.sign > 0 {
            items.push(Item::F(append_swap(&idp, l.index)));
        } else {
            // sigma_i^{-1} = Delta^{-1} * A with A(s) = swap_i(Delta(s))
            let a: Perm = dn
                .iter()
                .map(|&e| {
                    let i = l.index - 1;
                    if e == i {
                        i + 1
                    } else if e == i + 1 {
                        i
                    } else {
                        e
                    }
                })
                .collect();
            items.push(Item::D(-1));
            items.push(Item::F(a));
        }
    }
    // push all Delta powers to the front; a factor crossed by k deltas on its
    // right picks up tau^k
    let mut inf: i64 = 0;
    let mut deltas_right: Vec<i64> = Vec::new();
    let mut cnt = 0i64;
    for item in items.iter().rev() {
        match item {
            Item::D(e) => cnt += e.abs(),
            Item::F(_) => deltas_right.push(cnt),
        }
    }
    deltas_right.reverse();
    let mut factors: Vec<Perm> = Vec::new();
    let mut fi = 0;
    for item in &items {
        match item {
            Item::D(e) => inf += e,
            Item::F(p) => {
                let f = if deltas_right[fi] % 2 == 1 { tau(p) } else { p.clone() };
                if f != idp {
                    factors.push(f);
                }
                fi += 1;
            }
        }
    }
    // left-weighting sweeps
    let mut changed = true;
    while changed {
        changed = false;
        let mut j = 0;
        while j + 1 < factors.len() {
            let mut a = factors[j].clone();
            let mut b = factors[j + 1].clone();
            let mut moved = false;
            loop {
                let cand = starting_set(&b)
                    .into_iter()
                    .find(|&i| !in_finishing_set(&a, i));
                match cand {
                    None => break,
                    Some(i) => {
                        a = append_swap(&a, i);
                        b = strip_front_swap(&b, i);
                        moved = true;
                    }
                }
            }
            if moved {
                factors[j] = a;
                if b == idp {
                    factors.remove(j + 1);
                } else {
                    factors[j + 1] = b;
                }
                changed = true;
            }
            j += 1;
        }
    }
    while factors.first().map(|f| *f == dn).unwrap_or(false) {
        factors.remove(0);
        inf += 1;
    }
    while factors.last().map(|f| *f == idp).unwrap_or(false) {
        factors.pop();
    }
    NormalForm { strands: n, inf, factors }
}

/// Group equality via normal forms.
pub fn equals(w1: &BraidWord, w2: &BraidWord) -> Result<bool, BraidError> {
    if w1.strands() != w2.strands() {
        return Err(BraidError::StrandMismatch { left: w1.strands(), right: w2.strands() });
    }
    Ok(normal_form(w1) == normal_form(w2))
}

/// Full twist Delta^2 = (s1 s2 ... s_{n-1})^n; central, exponent sum n(n-1).
pub fn full_twist(n: usize) -> Result<BraidWord, BraidError> {
    if n < 2 {
        return Err(BraidError::TooFewStrands(n));
    }
    let mut letters = Vec::with_capacity(n * (n - 1));
    for _ in 0..n {
        for i in 1..n {
            letters.push(Letter { index: i, sign: 1 });
        }
    }
    BraidWord::new(n, letters)
}

/// sigma_i^{2m}: the local braid of an intersection of multiplicity m placed
/// at strand position i.
pub fn local_monodromy_word(
    multiplicity: u32,
    position: usize,
    strands: usize,
) -> Result<BraidWord, BraidError> {
    if position == 0 || position >= strands {
        return Err(BraidError::IndexOutOfRange { index: position, strands });
    }
    let letters =
        vec![Letter { index: position, sign: 1 }; 2 * multiplicity as usize];
    BraidWord::new(strands, letters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_braid;

    fn nf(s: &str, n: usize) -> NormalForm {
        normal_form(&parse_braid(s, n).unwrap())
    }

    #[test]
    fn braid_relations() {
        assert_eq!(nf("s1 s2 s1", 3), nf("s2 s1 s2", 3));
        assert_eq!(nf("s1 s3", 4), nf("s3 s1", 4));
        assert_ne!(nf("s1 s2", 3), nf("s2 s1", 3));
    }

    #[test]
    fn trivial_word() {
        assert!(nf("s1 s1^-1", 2).is_identity());
        assert!(nf("s1 s2 s2^-1 s1^-1", 3).is_identity());
        assert!(!nf("s1", 2).is_identity());
    }

    #[test]
    fn inverse_cancels() {
        let w = parse_braid("s1 s2^-1 s3 s1^2", 4).unwrap();
        let prod = w.then(&w.inverse()).unwrap();
        assert!(normal_form(&prod).is_identity());
    }

    #[test]
    fn delta_power_normalization() {
        // Delta in B3 is s1 s2 s1; Delta^2 should normalize to inf=2, no factors
        let d2 = full_twist(3).unwrap();
        let nfd = normal_form(&d2);
        assert_eq!(nfd.inf, 2);
        assert!(nfd.factors.is_empty());
    }

    #[test]
    fn full_twist_central() {
        for n in 2..=5 {
            let ft = full_twist(n).unwrap();
            assert_eq!(ft.exponent_sum() as usize, n * (n - 1));
            for i in 1..n {
                let g = BraidWord::generator(n, i, 1).unwrap();
                let a = ft.then(&g).unwrap();
                let b = g.then(&ft).unwrap();
                assert!(equals(&a, &b).unwrap(), "n={n} i={i}");
            }
        }
    }

    #[test]
    fn to_word_roundtrip() {
        for s in ["s1 s2^-3 s1 s3", "s2^-1 s1 s2", "e", "s3 s2^4 s3^-1"] {
            let w = parse_braid(s, 4).unwrap();
            let n = normal_form(&w);
            assert!(equals(&w, &n.to_word()).unwrap(), "word {s}");
        }
    }

    #[test]
    fn local_monodromy() {
        let w = local_monodromy_word(4, 3, 4).unwrap();
        assert_eq!(w.to_string(), "s3^8");
        let w = local_monodromy_word(1, 3, 4).unwrap();
        assert_eq!(w.to_string(), "s3^2");
        assert!(local_monodromy_word(1, 5, 4).is_err());
    }

    #[test]
    fn strand_mismatch() {
        let a = parse_braid("s1", 2).unwrap();
        let b = parse_braid("s1", 3).unwrap();
        assert!(equals(&a, &b).is_err());
    }
}
