//! Univariate root machinery: gcd, squarefree decomposition, Sturm chains,
//! real-root counting and isolation.

use num_traits::{One, Signed, Zero};

use crate::poly::Poly;
use crate::rational::{rat_to_f64, Rat};

#[derive(Debug, Clone, PartialEq)]
pub enum RootError {
    ZeroPolynomial,
    NotUnivariate(String),
    NotSquarefree,
}

impl std::fmt::Display for RootError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RootError::ZeroPolynomial => write!(f, "zero polynomial"),
            RootError::NotUnivariate(v) => write!(f, "not univariate: {v}"),
            RootError::NotSquarefree => write!(f, "input must be squarefree"),
        }
    }
}

impl std::error::Error for RootError {}

/// Univariate polynomial as ascending rational coefficients with no trailing
/// zero; the zero polynomial is the empty list.
#[derive(Clone, PartialEq, Debug)]
pub struct UniPoly(pub Vec<Rat>);

impl UniPoly {
    pub fn from_poly(p: &Poly, var: &str) -> Result<Self, RootError> {
        match p.univariate_coeffs(var) {
            Some(c) => Ok(UniPoly(c).trimmed()),
            None => Err(RootError::NotUnivariate(format!(
                "expected a polynomial in {var} only, got variables {:?}",
                p.vars()
            ))),
        }
    }

    pub fn to_poly(&self, var: &str) -> Poly {
        Poly::from_univariate(var, &self.0)
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn lc(&self) -> Rat {
        self.0.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.lc();
        UniPoly(self.0.iter().map(|c| c / &lc).collect())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut out = Rat::zero();
        for c in self.0.iter().rev() {
            out = out * x + c;
        }
        out
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut out = 0.0;
        for c in self.0.iter().rev() {
            out = out * x + rat_to_f64(c);
        }
        out
    }

    pub fn derivative(&self) -> UniPoly {
        if self.0.len() <= 1 {
            return UniPoly(Vec::new());
        }
        UniPoly(
            self.0[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * Rat::from_integer((i as u32 + 1).into()))
                .collect(),
        )
        .trimmed()
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly(Vec::new());
        }
        let mut out = vec![Rat::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly(out).trimmed()
    }

    /// Euclidean division: (quotient, remainder).
    pub fn div_rem(&self, den: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!den.is_zero(), "division by zero polynomial");
        let mut rem = self.0.clone();
        let dn = den.0.len();
        if rem.len() < dn {
            return (UniPoly(Vec::new()), UniPoly(rem).trimmed());
        }
        let mut quo = vec![Rat::zero(); rem.len() - dn + 1];
        let lc = den.lc();
        for k in (0..quo.len()).rev() {
            let c = &rem[k + dn - 1] / &lc;
            if c.is_zero() {
                continue;
            }
            quo[k] = c.clone();
            for (j, d) in den.0.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
        }
        (UniPoly(quo).trimmed(), UniPoly(rem).trimmed())
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.0.len().max(other.0.len());
        UniPoly(
            (0..n)
                .map(|i| {
                    self.0.get(i).cloned().unwrap_or_else(Rat::zero)
                        - other.0.get(i).cloned().unwrap_or_else(Rat::zero)
                })
                .collect(),
        )
        .trimmed()
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly(self.0.iter().map(|c| -c.clone()).collect())
    }

    /// Divide by |leading coefficient|: a positive rescale, so sign data is
    /// preserved (needed for Sturm chains).
    pub fn pos_normalized(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.lc().abs();
        UniPoly(self.0.iter().map(|c| c / &lc).collect())
    }

    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }
}

/// Yun's squarefree decomposition; returns `(factor, multiplicity)` pairs with
/// monic pairwise-coprime squarefree factors, product reconstructing the input
/// up to a nonzero scalar.
pub fn squarefree_decompose(p: &Poly, var: &str) -> Result<Vec<(Poly, u32)>, RootError> {
    let f = UniPoly::from_poly(p, var)?;
    if f.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    if f.degree() == 0 {
        return Ok(Vec::new());
    }
    let f = f.monic();
    let fp = f.derivative();
    let a0 = f.gcd(&fp);
    let mut b = f.div_rem(&a0).0;
    let mut c = fp.div_rem(&a0).0;
    let mut out = Vec::new();
    let mut i = 1u32;
    while b.degree() > 0 {
        let d = c.sub(&b.derivative());
        let a = b.gcd(&d);
        if a.degree() > 0 {
            out.push((a.to_poly(var).monic(), i));
        }
        b = b.div_rem(&a).0;
        c = d.div_rem(&a).0;
        i += 1;
    }
    Ok(out)
}

/// Squarefree part: product of the distinct factors.
pub fn squarefree_part(p: &Poly, var: &str) -> Result<Poly, RootError> {
    let parts = squarefree_decompose(p, var)?;
    let mut out = Poly::one();
    for (f, _) in parts {
        out = out.mul(&f);
    }
    Ok(out)
}

fn sturm_chain(p: &UniPoly) -> Vec<UniPoly> {
    let mut chain = vec![p.pos_normalized(), p.derivative().pos_normalized()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(r.neg().pos_normalized());
    }
    chain
}

fn sign_changes(values: &[i8]) -> usize {
    let mut out = 0;
    let mut last = 0i8;
    for &v in values {
        if v == 0 {
            continue;
        }
        if last != 0 && v != last {
            out += 1;
        }
        last = v;
    }
    out
}

fn sign_at(p: &UniPoly, x: &Rat) -> i8 {
    let v = p.eval(x);
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

fn sign_at_pos_inf(p: &UniPoly) -> i8 {
    if p.is_zero() {
        0
    } else if p.lc().is_positive() {
        1
    } else {
        -1
    }
}

fn sign_at_neg_inf(p: &UniPoly) -> i8 {
    let s = sign_at_pos_inf(p);
    if p.degree() % 2 == 1 {
        -s
    } else {
        s
    }
}

/// Exact count of distinct real roots of a squarefree polynomial, over the
/// whole line or in the half-open interval `(a, b]`.
pub fn real_root_count(
    p: &Poly,
    var: &str,
    interval: Option<(&Rat, &Rat)>,
) -> Result<usize, RootError> {
    let f = UniPoly::from_poly(p, var)?;
    if f.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    if f.degree() == 0 {
        return Ok(0);
    }
    if f.gcd(&f.derivative()).degree() > 0 {
        return Err(RootError::NotSquarefree);
    }
    let chain = sturm_chain(&f);
    let count = |signs_a: Vec<i8>, signs_b: Vec<i8>| {
        sign_changes(&signs_a) - sign_changes(&signs_b)
    };
    match interval {
        None => {
            let a: Vec<i8> = chain.iter().map(sign_at_neg_inf).collect();
            let b: Vec<i8> = chain.iter().map(sign_at_pos_inf).collect();
            Ok(count(a, b))
        }
        Some((lo, hi)) => {
            assert!(lo < hi, "empty interval");
            let a: Vec<i8> = chain.iter().map(|q| sign_at(q, lo)).collect();
            let b: Vec<i8> = chain.iter().map(|q| sign_at(q, hi)).collect();
            Ok(count(a, b))
        }
    }
}

/// Cauchy root bound: all real roots lie in [-B, B].
pub fn root_bound(f: &UniPoly) -> Rat {
    let lc = f.lc();
    let mut m = Rat::zero();
    for c in &f.0[..f.0.len().saturating_sub(1)] {
        let a = (c / &lc).abs();
        if a > m {
            m = a;
        }
    }
    m + Rat::one()
}

/// Isolating intervals `(a, b]` for every distinct real root of a squarefree
/// polynomial, in increasing order.
pub fn isolate_real_roots(p: &Poly, var: &str) -> Result<Vec<(Rat, Rat)>, RootError> {
    let f = UniPoly::from_poly(p, var)?;
    if f.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    if f.degree() == 0 {
        return Ok(Vec::new());
    }
    if f.gcd(&f.derivative()).degree() > 0 {
        return Err(RootError::NotSquarefree);
    }
    let chain = sturm_chain(&f);
    let var_count = |a: &Rat, b: &Rat| -> usize {
        let sa: Vec<i8> = chain.iter().map(|q| sign_at(q, a)).collect();
        let sb: Vec<i8> = chain.iter().map(|q| sign_at(q, b)).collect();
        sign_changes(&sa) - sign_changes(&sb)
    };
    let bound = root_bound(&f);
    let mut stack = vec![(-bound.clone(), bound.clone())];
    let mut out = Vec::new();
    while let Some((a, b)) = stack.pop() {
        let k = var_count(&a, &b);
        if k == 0 {
            continue;
        }
        if k == 1 {
            out.push((a, b));
            continue;
        }
        let mid = (&a + &b) / Rat::from_integer(2.into());
        stack.push((a, mid.clone()));
        stack.push((mid, b));
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(out)
}

/// Shrink an isolating interval by bisection until its width is below `tol`.
pub fn refine_root(p: &Poly, var: &str, interval: (Rat, Rat), tol: &Rat) -> (Rat, Rat) {
    let f = UniPoly::from_poly(p, var).expect("univariate");
    let chain = sturm_chain(&f);
    let var_count = |a: &Rat, b: &Rat| -> usize {
        let sa: Vec<i8> = chain.iter().map(|q| sign_at(q, a)).collect();
        let sb: Vec<i8> = chain.iter().map(|q| sign_at(q, b)).collect();
        sign_changes(&sa) - sign_changes(&sb)
    };
    let (mut a, mut b) = interval;
    while &b - &a > *tol {
        let mid = (&a + &b) / Rat::from_integer(2.into());
        if var_count(&a, &mid) == 1 {
            b = mid;
        } else {
            a = mid;
        }
    }
    (a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::rational::rat;

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn squarefree_examples() {
        // (x-1)^2 (x+2)
        let q = p("x^3 - 3*x + 2");
        let parts = squarefree_decompose(&q, "x").unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0], (p("x + 2"), 1));
        assert_eq!(parts[1], (p("x - 1"), 2));
        // reconstruction up to scalar
        let mut rec = Poly::one();
        for (f, m) in &parts {
            rec = rec.mul(&f.pow(*m));
        }
        assert!(rec.proportional_to(&q).is_some());
    }

    #[test]
    fn squarefree_trivial_cases() {
        let q = p("x^2 + 1");
        let parts = squarefree_decompose(&q, "x").unwrap();
        assert_eq!(parts, vec![(p("x^2 + 1"), 1)]);
        let q = p("x^4");
        let parts = squarefree_decompose(&q, "x").unwrap();
        assert_eq!(parts, vec![(p("x"), 4)]);
        assert!(squarefree_decompose(&Poly::zero(), "x").is_err());
    }

    #[test]
    fn sturm_counts() {
        assert_eq!(real_root_count(&p("x^2 + 1"), "x", None).unwrap(), 0);
        assert_eq!(real_root_count(&p("x^2 - 1"), "x", None).unwrap(), 2);
        assert_eq!(real_root_count(&p("2*x^3 - 4*x + 1"), "x", None).unwrap(), 3);
        assert!(real_root_count(&p("x^2 - 2*x + 1"), "x", None).is_err());
    }

    #[test]
    fn sturm_interval() {
        let q = p("x^2 - 1");
        let zero = rat(0);
        let two = rat(2);
        assert_eq!(real_root_count(&q, "x", Some((&zero, &two))).unwrap(), 1);
        let m2 = rat(-2);
        assert_eq!(real_root_count(&q, "x", Some((&m2, &two))).unwrap(), 2);
    }

    #[test]
    fn isolation_and_refinement() {
        let q = p("2*x^3 - 4*x + 1");
        let iv = isolate_real_roots(&q, "x").unwrap();
        assert_eq!(iv.len(), 3);
        let tol = crate::rational::ratio(1, 1 << 20);
        for (a, b) in iv {
            let (a2, b2) = refine_root(&q, "x", (a, b), &tol);
            assert!(&b2 - &a2 <= tol);
            let f = UniPoly::from_poly(&q, "x").unwrap();
            // sign change across the refined interval certifies the root
            assert!(f.eval(&a2).is_negative() != f.eval(&b2).is_negative() || f.eval(&b2).is_zero());
        }
    }

    #[test]
    fn division_identity() {
        let a = UniPoly::from_poly(&p("x^5 - x + 2"), "x").unwrap();
        let b = UniPoly::from_poly(&p("x^2 + 3"), "x").unwrap();
        let (q, r) = a.div_rem(&b);
        let recon = q.mul(&b);
        let sum = UniPoly(
            (0..recon.0.len().max(r.0.len()))
                .map(|i| {
                    recon.0.get(i).cloned().unwrap_or_else(Rat::zero)
                        + r.0.get(i).cloned().unwrap_or_else(Rat::zero)
                })
                .collect(),
        );
        assert_eq!(sum, a);
    }
}
