//! Dense rational and polynomial matrices.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::Poly;
use crate::rational::Rat;

#[derive(Debug, Clone, PartialEq)]
pub enum MatrixError {
    NotSquare { rows: usize, cols: usize },
    TooLarge { size: usize, max: usize },
    Shape(String),
}

impl fmt::Display for MatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixError::NotSquare { rows, cols } => {
                write!(f, "matrix is {rows}x{cols}, expected square")
            }
            MatrixError::TooLarge { size, max } => {
                write!(f, "matrix size {size} exceeds supported maximum {max}")
            }
            MatrixError::Shape(s) => write!(f, "{s}"),
        }
    }
}

impl std::error::Error for MatrixError {}

pub const MAX_DET_SIZE: usize = 32;

/// Dense matrix of rationals, row-major.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    a: Vec<Rat>,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, a: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self, MatrixError> {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        if rows.iter().any(|row| row.len() != c) {
            return Err(MatrixError::Shape("ragged rows".into()));
        }
        Ok(QMatrix { rows: r, cols: c, a: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.a[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.a[r * self.cols + c] = v;
    }

    pub fn transpose(&self) -> QMatrix {
        let mut out = QMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = QMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut s = Rat::zero();
                for k in 0..self.cols {
                    s += self.get(r, k) * other.get(k, c);
                }
                out.set(r, c, s);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c) * &v[c]).sum())
            .collect()
    }

    pub fn scale(&self, c: &Rat) -> QMatrix {
        QMatrix { rows: self.rows, cols: self.cols, a: self.a.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, other: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            a: self.a.iter().zip(&other.a).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|x| x.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..r).all(|c| self.get(r, c) == self.get(c, r)))
    }

    /// Fraction-free Bareiss determinant (rows cleared to integers first).
    pub fn det(&self) -> Result<Rat, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rat::one());
        }
        if n > MAX_DET_SIZE {
            return Err(MatrixError::TooLarge { size: n, max: MAX_DET_SIZE });
        }
        let mut scale = BigInt::one();
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for r in 0..n {
            let mut lcm = BigInt::one();
            for c in 0..n {
                lcm = lcm.lcm(self.get(r, c).denom());
            }
            scale *= &lcm;
            m.push(
                (0..n)
                    .map(|c| {
                        let v = self.get(r, c);
                        v.numer() * (&lcm / v.denom())
                    })
                    .collect(),
            );
        }
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return Ok(Rat::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = &t / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        let mut det = Rat::new(m[n - 1][n - 1].clone(), scale);
        if sign < 0 {
            det = -det;
        }
        Ok(det)
    }

    /// Reduced row echelon form; returns pivot column indices.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let pivot = (row..m.rows).find(|&r| !m.get(r, col).is_zero());
            let p = match pivot {
                None => continue,
                Some(p) => p,
            };
            if p != row {
                for c in 0..m.cols {
                    let tmp = m.get(p, c).clone();
                    m.set(p, c, m.get(row, c).clone());
                    m.set(row, c, tmp);
                }
            }
            let inv = Rat::one() / m.get(row, col).clone();
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r != row && !m.get(r, col).is_zero() {
                    let f = m.get(r, col).clone();
                    for c in col..m.cols {
                        let v = m.get(r, c) - &f * m.get(row, c);
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space. For each free column `f` (in increasing
    /// order) the basis vector has `v[f] = 1` and `v[pivot_i] = -rref[i][f]`.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let (r, pivots) = self.rref();
        let mut out = Vec::new();
        for f in 0..self.cols {
            if pivots.contains(&f) {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[f] = Rat::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, f).clone();
            }
            out.push(v);
        }
        out
    }

    /// Solve `self * x = b`; returns the echelon particular solution with free
    /// variables set to zero, or `None` if inconsistent.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = QMatrix::zero(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let (e, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // pivot in the augmented column
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = e.get(i, self.cols).clone();
        }
        Some(x)
    }
}

/// Dense matrix of polynomials.
#[derive(Clone, PartialEq, Debug)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    a: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        PolyMatrix { rows, cols, a: vec![Poly::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Result<Self, MatrixError> {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        if rows.iter().any(|row| row.len() != c) {
            return Err(MatrixError::Shape("ragged rows".into()));
        }
        Ok(PolyMatrix { rows: r, cols: c, a: rows.into_iter().flatten().collect() })
    }

    pub fn from_qmatrix(m: &QMatrix) -> Self {
        let mut out = PolyMatrix::zero(m.rows(), m.cols());
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                out.set(r, c, Poly::constant(m.get(r, c).clone()));
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Poly {
        &self.a[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Poly) {
        self.a[r * self.cols + c] = v;
    }

    pub fn add(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            a: self.a.iter().zip(&other.a).map(|(x, y)| x.add(y)).collect(),
        }
    }

    pub fn scale_poly(&self, p: &Poly) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            a: self.a.iter().map(|x| x.mul(p)).collect(),
        }
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = PolyMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut s = Poly::zero();
                for k in 0..self.cols {
                    s = s.add(&self.get(r, k).mul(other.get(k, c)));
                }
                out.set(r, c, s);
            }
        }
        out
    }

    fn all_constant(&self) -> bool {
        self.a.iter().all(|p| p.is_constant() || p.is_zero())
    }

    fn variables(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for p in &self.a {
            for v in p.vars() {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
        }
        out
    }

    /// Exact determinant. Constant matrices go through Bareiss; polynomial
    /// matrices up to 8x8 use subset minor expansion; larger ones are computed
    /// by evaluation and multivariate Lagrange interpolation on a rational
    /// grid.
    pub fn det(&self) -> Result<Poly, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n > MAX_DET_SIZE {
            return Err(MatrixError::TooLarge { size: n, max: MAX_DET_SIZE });
        }
        if n == 0 {
            return Ok(Poly::one());
        }
        if self.all_constant() {
            let mut q = QMatrix::zero(n, n);
            for r in 0..n {
                for c in 0..n {
                    q.set(r, c, self.get(r, c).as_constant().unwrap());
                }
            }
            return Ok(Poly::constant(q.det()?));
        }
        if n <= 8 {
            Ok(self.det_minor_dp())
        } else {
            Ok(self.det_interpolate())
        }
    }

    /// Laplace expansion with subset memoisation: O(2^n) polynomial products.
    fn det_minor_dp(&self) -> Poly {
        let n = self.rows;
        let mut cur: HashMap<u32, Poly> = HashMap::new();
        cur.insert(0, Poly::one());
        for r in 0..n {
            let mut next: HashMap<u32, Poly> = HashMap::new();
            for (&mask, minor) in &cur {
                if minor.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let bit = 1u32 << c;
                    if mask & bit != 0 {
                        continue;
                    }
                    let entry = self.get(r, c);
                    if entry.is_zero() {
                        continue;
                    }
                    // parity of previously used columns greater than c
                    let higher = (mask >> (c + 1)).count_ones();
                    let term = minor.mul(entry);
                    let term = if higher % 2 == 1 { term.neg() } else { term };
                    let slot = next.entry(mask | bit).or_insert_with(Poly::zero);
                    *slot = slot.add(&term);
                }
            }
            cur = next;
        }
        cur.remove(&((1u32 << n) - 1)).unwrap_or_else(Poly::zero)
    }

    fn det_interpolate(&self) -> Poly {
        let vars = self.variables();
        self.det_interp_rec(&vars)
    }

    fn det_interp_rec(&self, vars: &[String]) -> Poly {
        if vars.is_empty() {
            let mut q = QMatrix::zero(self.rows, self.cols);
            for r in 0..self.rows {
                for c in 0..self.cols {
                    q.set(r, c, self.get(r, c).as_constant().unwrap_or_else(Rat::zero));
                }
            }
            return Poly::constant(q.det().expect("square by construction"));
        }
        let v = &vars[0];
        // degree bound of det in v: sum over rows of max entry degree in v
        let bound: u32 = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c).degree_in(v)).max().unwrap_or(0))
            .sum();
        let nodes: Vec<Rat> = (0..=bound).map(|k| Rat::from_integer(k.into())).collect();
        let mut values = Vec::with_capacity(nodes.len());
        for t in &nodes {
            let mut sub = PolyMatrix::zero(self.rows, self.cols);
            let tp = Poly::constant(t.clone());
            for r in 0..self.rows {
                for c in 0..self.cols {
                    sub.set(r, c, self.get(r, c).substitute(v, &tp));
                }
            }
            values.push(sub.det_interp_rec(&vars[1..]));
        }
        // Lagrange combination in v over the rational nodes
        let vp = Poly::var(v);
        let mut out = Poly::zero();
        for (i, t) in nodes.iter().enumerate() {
            let mut basis = Poly::one();
            let mut denom = Rat::one();
            for (j, s) in nodes.iter().enumerate() {
                if i == j {
                    continue;
                }
                basis = basis.mul(&vp.sub(&Poly::constant(s.clone())));
                denom *= t - s;
            }
            out = out.add(&basis.scale(&(Rat::one() / denom)).mul(&values[i]));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::rational::{rat, ratio};

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn bareiss_small() {
        let m = QMatrix::from_rows(vec![
            vec![rat(1), rat(2)],
            vec![rat(3), rat(4)],
        ])
        .unwrap();
        assert_eq!(m.det().unwrap(), rat(-2));
        let m = QMatrix::from_rows(vec![
            vec![ratio(1, 2), rat(0)],
            vec![rat(7), ratio(2, 3)],
        ])
        .unwrap();
        assert_eq!(m.det().unwrap(), ratio(1, 3));
        assert_eq!(QMatrix::identity(5).det().unwrap(), rat(1));
    }

    #[test]
    fn singular_det() {
        let m = QMatrix::from_rows(vec![
            vec![rat(1), rat(2), rat(3)],
            vec![rat(2), rat(4), rat(6)],
            vec![rat(0), rat(1), rat(1)],
        ])
        .unwrap();
        assert_eq!(m.det().unwrap(), rat(0));
    }

    #[test]
    fn kernel_convention() {
        let m = QMatrix::from_rows(vec![vec![rat(1), rat(1), rat(1)]]).unwrap();
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        assert_eq!(k[0], vec![rat(-1), rat(1), rat(0)]);
        assert_eq!(k[1], vec![rat(-1), rat(0), rat(1)]);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
        let inv3 = QMatrix::from_rows(vec![
            vec![rat(2), rat(1), rat(0)],
            vec![rat(0), rat(1), rat(0)],
            vec![rat(5), rat(0), rat(3)],
        ])
        .unwrap();
        assert!(inv3.kernel_basis().is_empty());
    }

    #[test]
    fn poly_det_matches_trivial() {
        // identity of constants
        let id = PolyMatrix::from_qmatrix(&QMatrix::identity(3));
        assert_eq!(id.det().unwrap(), Poly::one());
        // 1x1 [x0]
        let m = PolyMatrix::from_rows(vec![vec![p("x0")]]).unwrap();
        assert_eq!(m.det().unwrap(), p("x0"));
    }

    #[test]
    fn poly_det_2x2() {
        let m = PolyMatrix::from_rows(vec![
            vec![p("x"), p("y")],
            vec![p("1"), p("x")],
        ])
        .unwrap();
        assert_eq!(m.det().unwrap(), p("x^2 - y"));
    }

    #[test]
    fn interpolation_agrees_with_dp() {
        // a 3x3 with polynomial entries, computed both ways
        let m = PolyMatrix::from_rows(vec![
            vec![p("x + 1"), p("y"), p("0")],
            vec![p("x*y"), p("2"), p("x")],
            vec![p("1"), p("x - y"), p("y + 3")],
        ])
        .unwrap();
        let dp = m.det_minor_dp();
        let ip = m.det_interpolate();
        assert_eq!(dp, ip);
    }

    #[test]
    fn solve_particular() {
        let m = QMatrix::from_rows(vec![
            vec![rat(1), rat(1), rat(0)],
            vec![rat(0), rat(1), rat(1)],
        ])
        .unwrap();
        let x = m.solve(&[rat(3), rat(5)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![rat(3), rat(5)]);
        let bad = QMatrix::from_rows(vec![vec![rat(1)], vec![rat(1)]]).unwrap();
        assert!(bad.solve(&[rat(0), rat(1)]).is_none());
    }
}
