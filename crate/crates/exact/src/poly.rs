//! Sparse multivariate polynomials over the rationals.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors under graded
//! lexicographic order, so iteration order, printing and hashing are all
//! canonical. Variable lists are kept sorted under a fixed global ranking
//! (`x0 < x1 < x2 < x < y < t`, custom symbols after, alphabetically), so two
//! polynomials over different variable sets can always be aligned.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::rational::{fmt_rat, Rat};

const KNOWN_VARS: [&str; 6] = ["x0", "x1", "x2", "x", "y", "t"];

fn var_rank(name: &str) -> (usize, &str) {
    match KNOWN_VARS.iter().position(|k| *k == name) {
        Some(i) => (i, ""),
        None => (KNOWN_VARS.len(), name),
    }
}

fn var_cmp(a: &str, b: &str) -> Ordering {
    var_rank(a).cmp(&var_rank(b))
}

/// Exponent vector; compares in graded lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    vars: Vec<String>,
    terms: BTreeMap<Mono, Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { vars: Vec::new(), terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono(Vec::new()), c);
        }
        Poly { vars: Vec::new(), terms }
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Mono(vec![1]), Rat::one());
        Poly { vars: vec![name.to_string()], terms }
    }

    /// Build from explicit (vars, terms); vars need not be sorted.
    pub fn from_terms(vars: Vec<String>, terms: Vec<(Vec<u32>, Rat)>) -> Self {
        let mut order: Vec<usize> = (0..vars.len()).collect();
        order.sort_by(|&i, &j| var_cmp(&vars[i], &vars[j]));
        let sorted: Vec<String> = order.iter().map(|&i| vars[i].clone()).collect();
        let mut map = BTreeMap::new();
        for (exps, c) in terms {
            assert_eq!(exps.len(), vars.len(), "exponent vector length mismatch");
            if c.is_zero() {
                continue;
            }
            let remapped: Vec<u32> = order.iter().map(|&i| exps[i]).collect();
            let entry = map.entry(Mono(remapped)).or_insert_with(Rat::zero);
            *entry += c;
            // removal of cancelled entries happens below
        }
        map.retain(|_, c| !c.is_zero());
        Poly { vars: sorted, terms: map }.compacted()
    }

    /// Drop variables that appear in no term.
    fn compacted(mut self) -> Self {
        let used: Vec<bool> = (0..self.vars.len())
            .map(|i| self.terms.keys().any(|m| m.0[i] != 0))
            .collect();
        if used.iter().all(|&u| u) {
            return self;
        }
        let keep: Vec<usize> = (0..self.vars.len()).filter(|&i| used[i]).collect();
        let vars: Vec<String> = keep.iter().map(|&i| self.vars[i].clone()).collect();
        let terms = std::mem::take(&mut self.terms)
            .into_iter()
            .map(|(m, c)| (Mono(keep.iter().map(|&i| m.0[i]).collect()), c))
            .collect();
        Poly { vars, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|m| m.total_degree() == 0)
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_zero() {
            Some(Rat::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Iterate terms in descending graded-lex order (leading term first).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter().rev()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    pub fn degree_in(&self, var: &str) -> u32 {
        match self.vars.iter().position(|v| v == var) {
            None => 0,
            Some(i) => self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.total_degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Leading coefficient in graded-lex order.
    pub fn leading_coeff(&self) -> Rat {
        self.terms.values().next_back().cloned().unwrap_or_else(Rat::zero)
    }

    fn leading_term(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Divide by the graded-lex leading coefficient.
    pub fn monic(&self) -> Poly {
        let lc = self.leading_coeff();
        if lc.is_zero() || lc.is_one() {
            return self.clone();
        }
        self.scale(&(Rat::one() / lc))
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn neg(&self) -> Poly {
        self.scale(&(-Rat::one()))
    }

    /// Quotient `self / other` when the two differ by a nonzero scalar.
    pub fn proportional_to(&self, other: &Poly) -> Option<Rat> {
        if self.is_zero() || other.is_zero() {
            return None;
        }
        let (va, ta, tb) = align(self, other);
        let _ = va;
        if ta.len() != tb.len() {
            return None;
        }
        let mut ratio: Option<Rat> = None;
        for ((ma, ca), (mb, cb)) in ta.iter().rev().zip(tb.iter().rev()) {
            if ma != mb {
                return None;
            }
            let r = ca / cb;
            match &ratio {
                None => ratio = Some(r),
                Some(r0) if *r0 == r => {}
                _ => return None,
            }
        }
        ratio
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let (vars, ta, tb) = align(self, other);
        let mut map: BTreeMap<Mono, Rat> = ta.into_iter().collect();
        for (m, c) in tb {
            let e = map.entry(m).or_insert_with(Rat::zero);
            *e += c;
        }
        map.retain(|_, c| !c.is_zero());
        Poly { vars, terms: map }.compacted()
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let (vars, ta, tb) = align(self, other);
        let mut map: BTreeMap<Mono, Rat> = BTreeMap::new();
        for (ma, ca) in &ta {
            for (mb, cb) in &tb {
                let m = Mono(ma.0.iter().zip(&mb.0).map(|(a, b)| a + b).collect());
                let e = map.entry(m).or_insert_with(Rat::zero);
                *e += ca * cb;
            }
        }
        map.retain(|_, c| !c.is_zero());
        Poly { vars, terms: map }.compacted()
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    pub fn derivative(&self, var: &str) -> Poly {
        let i = match self.vars.iter().position(|v| v == var) {
            None => return Poly::zero(),
            Some(i) => i,
        };
        let mut map = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut v = m.0.clone();
            v[i] = e - 1;
            map.insert(Mono(v), c * Rat::from_integer(e.into()));
        }
        Poly { vars: self.vars.clone(), terms: map }.compacted()
    }

    /// Substitute `var` by a polynomial.
    pub fn substitute(&self, var: &str, value: &Poly) -> Poly {
        let i = match self.vars.iter().position(|v| v == var) {
            None => return self.clone(),
            Some(i) => i,
        };
        // split into coefficient polys per exponent of var
        let mut by_exp: BTreeMap<u32, Vec<(Vec<u32>, Rat)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut rest = m.0.clone();
            let e = rest[i];
            rest[i] = 0;
            by_exp.entry(e).or_default().push((rest, c.clone()));
        }
        let mut out = Poly::zero();
        let mut pow_cache: BTreeMap<u32, Poly> = BTreeMap::new();
        for (e, terms) in by_exp {
            let coeff = Poly::from_terms(self.vars.clone(), terms);
            let p = pow_cache.entry(e).or_insert_with(|| value.pow(e)).clone();
            out = out.add(&coeff.mul(&p));
        }
        out
    }

    /// Substitute several variables at once (simultaneous, not sequential).
    pub fn substitute_many(&self, subs: &[(&str, &Poly)]) -> Poly {
        // rename targets to temporaries first so substitutions do not interfere
        let mut cur = self.clone();
        let temps: Vec<String> =
            (0..subs.len()).map(|i| format!("__subst_tmp_{i}")).collect();
        for ((var, _), tmp) in subs.iter().zip(&temps) {
            cur = cur.rename_var(var, tmp);
        }
        for ((_, value), tmp) in subs.iter().zip(&temps) {
            cur = cur.substitute(tmp, value);
        }
        cur
    }

    pub fn rename_var(&self, from: &str, to: &str) -> Poly {
        if !self.vars.iter().any(|v| v == from) {
            return self.clone();
        }
        let vars: Vec<String> =
            self.vars.iter().map(|v| if v == from { to.to_string() } else { v.clone() }).collect();
        let terms: Vec<(Vec<u32>, Rat)> =
            self.terms.iter().map(|(m, c)| (m.0.clone(), c.clone())).collect();
        Poly::from_terms(vars, terms)
    }

    /// Evaluate at a full rational point; unmapped variables are an error.
    pub fn eval(&self, point: &[(&str, Rat)]) -> Result<Rat, String> {
        let idx: Vec<Rat> = self
            .vars
            .iter()
            .map(|v| {
                point
                    .iter()
                    .find(|(n, _)| n == v)
                    .map(|(_, r)| r.clone())
                    .ok_or_else(|| format!("no value for variable {v}"))
            })
            .collect::<Result<_, _>>()?;
        let mut out = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (e, x) in m.0.iter().zip(&idx) {
                for _ in 0..*e {
                    t *= x;
                }
            }
            out += t;
        }
        Ok(out)
    }

    /// Coefficient of `var^k` as a polynomial in the remaining variables.
    pub fn coeff_of(&self, var: &str, k: u32) -> Poly {
        let i = match self.vars.iter().position(|v| v == var) {
            None => {
                return if k == 0 { self.clone() } else { Poly::zero() };
            }
            Some(i) => i,
        };
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            if m.0[i] == k {
                let mut rest = m.0.clone();
                rest[i] = 0;
                terms.push((rest, c.clone()));
            }
        }
        Poly::from_terms(self.vars.clone(), terms)
    }

    /// View as univariate in `var`: ascending coefficient list. `None` if any
    /// other variable occurs.
    pub fn univariate_coeffs(&self, var: &str) -> Option<Vec<Rat>> {
        for (i, v) in self.vars.iter().enumerate() {
            if v != var && self.terms.keys().any(|m| m.0[i] != 0) {
                return None;
            }
        }
        let deg = self.degree_in(var) as usize;
        let mut out = vec![Rat::zero(); deg + 1];
        let i = self.vars.iter().position(|v| v == var);
        for (m, c) in &self.terms {
            let e = i.map(|i| m.0[i]).unwrap_or(0) as usize;
            out[e] = c.clone();
        }
        Some(out)
    }

    pub fn from_univariate(var: &str, coeffs: &[Rat]) -> Poly {
        let terms = coeffs
            .iter()
            .enumerate()
            .map(|(e, c)| (vec![e as u32], c.clone()))
            .collect();
        Poly::from_terms(vec![var.to_string()], terms)
    }

    /// Homogenize to total degree `deg` using `hvar` (must not already occur).
    pub fn homogenize(&self, hvar: &str, deg: u32) -> Result<Poly, String> {
        if self.vars.iter().any(|v| v == hvar) {
            return Err(format!("homogenizing variable {hvar} already present"));
        }
        let own = self.total_degree().unwrap_or(0);
        if own > deg {
            return Err(format!("degree {own} exceeds target {deg}"));
        }
        let mut vars = self.vars.clone();
        vars.push(hvar.to_string());
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut v = m.0.clone();
                v.push(deg - m.total_degree());
                (v, c.clone())
            })
            .collect();
        Ok(Poly::from_terms(vars, terms))
    }

    /// Exact division: `Some(q)` with `self = q * den`, or `None`.
    pub fn exact_div(&self, den: &Poly) -> Option<Poly> {
        assert!(!den.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let vars = merge_vars(&self.vars, &den.vars);
        let mut rem: BTreeMap<Mono, Rat> = remap_terms(self, &vars).into_iter().collect();
        let dterms: BTreeMap<Mono, Rat> = remap_terms(den, &vars).into_iter().collect();
        let (dm, dc) = dterms.iter().next_back().map(|(m, c)| (m.clone(), c.clone()))?;
        let mut quo: BTreeMap<Mono, Rat> = BTreeMap::new();
        while let Some((rm, rc)) = rem.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            if rm.0.iter().zip(&dm.0).any(|(a, b)| a < b) {
                return None;
            }
            let qm = Mono(rm.0.iter().zip(&dm.0).map(|(a, b)| a - b).collect());
            let qc = rc / &dc;
            subtract_scaled(&mut rem, &dterms, &qm, &qc);
            quo.insert(qm, qc);
        }
        Some(Poly { vars, terms: quo }.compacted())
    }

    /// Multivariate division by an ordered list: returns (quotients, remainder)
    /// with `self = sum q_i g_i + r` and no term of `r` divisible by any
    /// leading term of the `g_i`.
    pub fn divide_list(&self, divisors: &[Poly]) -> (Vec<Poly>, Poly) {
        let mut vars = self.vars.clone();
        for g in divisors {
            vars = merge_vars(&vars, &g.vars);
        }
        let gs: Vec<BTreeMap<Mono, Rat>> = divisors
            .iter()
            .map(|g| remap_terms(g, &vars).into_iter().collect())
            .collect();
        let leads: Vec<(Mono, Rat)> = gs
            .iter()
            .map(|g| {
                let (m, c) = g.iter().next_back().expect("zero divisor in list");
                (m.clone(), c.clone())
            })
            .collect();
        let mut work: BTreeMap<Mono, Rat> = remap_terms(self, &vars).into_iter().collect();
        let mut quots: Vec<BTreeMap<Mono, Rat>> = vec![BTreeMap::new(); divisors.len()];
        let mut rem: BTreeMap<Mono, Rat> = BTreeMap::new();
        'outer: while let Some((wm, wc)) =
            work.iter().next_back().map(|(m, c)| (m.clone(), c.clone()))
        {
            for (k, (gm, gc)) in leads.iter().enumerate() {
                if wm.0.iter().zip(&gm.0).all(|(a, b)| a >= b) {
                    let qm = Mono(wm.0.iter().zip(&gm.0).map(|(a, b)| a - b).collect());
                    let qc = &wc / gc;
                    subtract_scaled(&mut work, &gs[k], &qm, &qc);
                    let e = quots[k].entry(qm).or_insert_with(Rat::zero);
                    *e += qc;
                    continue 'outer;
                }
            }
            work.remove(&wm);
            rem.insert(wm, wc);
        }
        let mk = |t: BTreeMap<Mono, Rat>| Poly { vars: vars.clone(), terms: t }.compacted();
        (quots.into_iter().map(mk).collect(), mk(rem))
    }
}

/// In place: `target -= c * x^qm * g`, dropping cancelled terms.
fn subtract_scaled(target: &mut BTreeMap<Mono, Rat>, g: &BTreeMap<Mono, Rat>, qm: &Mono, c: &Rat) {
    for (m, gc) in g {
        let shifted = Mono(m.0.iter().zip(&qm.0).map(|(a, b)| a + b).collect());
        let entry = target.entry(shifted).or_insert_with(Rat::zero);
        *entry -= c * gc;
        if entry.is_zero() {
            let key = Mono(m.0.iter().zip(&qm.0).map(|(a, b)| a + b).collect());
            target.remove(&key);
        }
    }
}

fn merge_vars(a: &[String], b: &[String]) -> Vec<String> {
    let mut out = a.to_vec();
    for v in b {
        if !out.contains(v) {
            out.push(v.clone());
        }
    }
    out.sort_by(|x, y| var_cmp(x, y));
    out
}

fn remap_terms(p: &Poly, vars: &[String]) -> Vec<(Mono, Rat)> {
    let idx: Vec<usize> = p
        .vars
        .iter()
        .map(|v| vars.iter().position(|w| w == v).expect("merged vars"))
        .collect();
    p.terms
        .iter()
        .map(|(m, c)| {
            let mut e = vec![0u32; vars.len()];
            for (k, &i) in idx.iter().enumerate() {
                e[i] = m.0[k];
            }
            (Mono(e), c.clone())
        })
        .collect()
}

/// Align two polynomials over a merged variable list.
fn align(a: &Poly, b: &Poly) -> (Vec<String>, Vec<(Mono, Rat)>, Vec<(Mono, Rat)>) {
    if a.vars == b.vars {
        return (
            a.vars.clone(),
            a.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect(),
            b.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect(),
        );
    }
    let vars = merge_vars(&a.vars, &b.vars);
    let ta = remap_terms(a, &vars);
    let tb = remap_terms(b, &vars);
    (vars, ta, tb)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms_desc() {
            let neg = c.is_negative();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !mag.is_one() || m.total_degree() == 0 {
                parts.push(fmt_rat(&mag));
            }
            for (v, &e) in self.vars.iter().zip(&m.0) {
                if e == 1 {
                    parts.push(v.clone());
                } else if e > 1 {
                    parts.push(format!("{v}^{e}"));
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn p(s: &str) -> Poly {
        crate::parse::parse_poly(s).unwrap()
    }

    #[test]
    fn grlex_ordering() {
        let q = p("x^3*y - x*y^3 + 2*x^3 - y^3");
        assert_eq!(q.to_string(), "x^3*y - x*y^3 + 2*x^3 - y^3");
        assert_eq!(q.total_degree(), Some(4));
        assert_eq!(q.degree_in("y"), 3);
    }

    #[test]
    fn arithmetic() {
        let a = p("x + y");
        let b = p("x - y");
        assert_eq!(a.mul(&b), p("x^2 - y^2"));
        assert_eq!(a.pow(2), p("x^2 + 2*x*y + y^2"));
        assert_eq!(a.sub(&a), Poly::zero());
    }

    #[test]
    fn mixed_vars_align() {
        let a = p("x0 + 1");
        let b = p("t^2");
        assert_eq!(a.mul(&b).to_string(), "x0*t^2 + t^2");
    }

    #[test]
    fn derivative_and_subst() {
        let q = p("x^2*y + y^2");
        assert_eq!(q.derivative("x"), p("2*x*y"));
        assert_eq!(q.derivative("y"), p("x^2 + 2*y"));
        let r = q.substitute("y", &Poly::zero());
        assert_eq!(r, Poly::zero());
        let s = q.substitute("y", &p("x + 1"));
        assert_eq!(s, p("x^3 + x^2").add(&p("x^2 + 2*x + 1")));
    }

    #[test]
    fn simultaneous_substitution() {
        // swap x and y
        let q = p("x^2 - y");
        let out = q.substitute_many(&[("x", &Poly::var("y")), ("y", &Poly::var("x"))]);
        assert_eq!(out, p("y^2 - x"));
    }

    #[test]
    fn exact_division() {
        let n = p("x^2 - y^2");
        let d = p("x - y");
        assert_eq!(n.exact_div(&d).unwrap(), p("x + y"));
        assert!(p("x").exact_div(&p("y")).is_none());
        assert!(p("x^2 + y").exact_div(&p("x + 1")).is_none());
    }

    #[test]
    fn division_list_remainder() {
        let f = p("x^2*y + x*y^2 + y^2");
        let g1 = p("x*y - 1");
        let g2 = p("y^2 - 1");
        let (qs, r) = f.divide_list(&[g1.clone(), g2.clone()]);
        let recon = qs[0].mul(&g1).add(&qs[1].mul(&g2)).add(&r);
        assert_eq!(recon, f);
    }

    #[test]
    fn homogenize_quartic() {
        let q = p("x^3*y - x*y^3 + 2*x^3 - y^3");
        let h = q.homogenize("x0", 4).unwrap();
        assert!(h.is_homogeneous());
        assert_eq!(h.substitute("x0", &Poly::one()), q);
    }

    #[test]
    fn proportionality() {
        let a = p("2*x + 4*y");
        let b = p("x + 2*y");
        assert_eq!(a.proportional_to(&b), Some(rat(2)));
        assert_eq!(a.proportional_to(&p("x + y")), None);
        assert_eq!(Poly::zero().proportional_to(&b), None);
    }

    #[test]
    fn display_roundtrip() {
        for s in ["x0^2*x1 - 2*x1*x2 + 1/2", "-x + y - 1", "t^4 - t", "0", "3"] {
            let q = p(s);
            assert_eq!(crate::parse::parse_poly(&q.to_string()).unwrap(), q);
        }
    }
}
