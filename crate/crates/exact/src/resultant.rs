//! Sylvester resultants.
//!
//! Convention: the Sylvester matrix has the first polynomial's coefficients,
//! highest degree first, in the top rows. `res(y^2 - x, 2y) = -4x` under this
//! convention.

use crate::matrix::{MatrixError, PolyMatrix};
use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq)]
pub enum ResultantError {
    VarAbsent(String),
    Matrix(MatrixError),
}

impl std::fmt::Display for ResultantError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ResultantError::VarAbsent(v) => {
                write!(f, "variable {v} absent from both inputs")
            }
            ResultantError::Matrix(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ResultantError {}

/// Resultant of `p` and `q` eliminating `var`. Vanishes exactly at common
/// roots in `var` over the closure of the remaining-variable field.
pub fn resultant_wrt(p: &Poly, q: &Poly, var: &str) -> Result<Poly, ResultantError> {
    let m = p.degree_in(var) as usize;
    let n = q.degree_in(var) as usize;
    if m == 0 && n == 0 {
        return Err(ResultantError::VarAbsent(var.to_string()));
    }
    if m == 0 {
        return Ok(p.pow(n as u32));
    }
    if n == 0 {
        return Ok(q.pow(m as u32));
    }
    // coefficients of p and q in var, highest first
    let pc: Vec<Poly> = (0..=m).rev().map(|k| p.coeff_of(var, k as u32)).collect();
    let qc: Vec<Poly> = (0..=n).rev().map(|k| q.coeff_of(var, k as u32)).collect();
    let size = m + n;
    let mut s = PolyMatrix::zero(size, size);
    for r in 0..n {
        for (k, c) in pc.iter().enumerate() {
            s.set(r, r + k, c.clone());
        }
    }
    for r in 0..m {
        for (k, c) in qc.iter().enumerate() {
            s.set(n + r, r + k, c.clone());
        }
    }
    s.det().map_err(ResultantError::Matrix)
}

/// Discriminant-style resultant of `p` and its derivative in `var`.
pub fn discriminant_wrt(p: &Poly, var: &str) -> Result<Poly, ResultantError> {
    resultant_wrt(p, &p.derivative(var), var)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn sign_convention() {
        // res_y(y^2 - x, 2y) = -4x
        let r = resultant_wrt(&p("y^2 - x"), &p("2*y"), "y").unwrap();
        assert_eq!(r, p("-4*x"));
    }

    #[test]
    fn linear_case() {
        // res_y(y - a, y - b) = a - b, with a = x, b = t
        let r = resultant_wrt(&p("y - x"), &p("y - t"), "y").unwrap();
        assert_eq!(r, p("x - t"));
    }

    #[test]
    fn circle_branch_points() {
        let r = resultant_wrt(&p("x^2 + y^2 - 1"), &p("2*y"), "y").unwrap();
        assert_eq!(r, p("4*x^2 - 4"));
    }

    #[test]
    fn var_absent_is_error() {
        assert!(resultant_wrt(&p("x"), &p("x + 1"), "y").is_err());
    }

    #[test]
    fn common_root_vanishes() {
        // x is a common factor
        let r = resultant_wrt(&p("y*x"), &p("y - x"), "y").unwrap();
        // p on top: det [[x, 0], [1, -x]] = -x^2
        assert_eq!(r, p("-x^2"));
    }
}
