//! Complex adjoint embedding `A1 + A2 j -> [[A1, A2], [-conj(A2), conj(A1)]]`.

use std::fmt;

use nalgebra::DMatrix;

use super::{QMatrix, RankMethod, RankReport, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::quat::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex<S> {
    pub re: S,
    pub im: S,
}

impl<S: Scalar> Complex<S> {
    pub fn new(re: S, im: S) -> Self {
        Complex { re, im }
    }
    pub fn zero() -> Self {
        Complex::new(S::zero(), S::zero())
    }
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    pub fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }
    fn neg(&self) -> Self {
        Complex::new(-self.re.clone(), -self.im.clone())
    }
    fn mul(&self, o: &Self) -> Self {
        Complex::new(
            self.re.mul_ref(&o.re).sub_ref(&self.im.mul_ref(&o.im)),
            self.re.mul_ref(&o.im).add_ref(&self.im.mul_ref(&o.re)),
        )
    }
    fn sub(&self, o: &Self) -> Self {
        Complex::new(self.re.sub_ref(&o.re), self.im.sub_ref(&o.im))
    }
}

impl<S: Scalar> fmt::Display for Complex<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}i", self.re, self.im)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexMatrix<S> {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Complex<S>>,
}

impl<S: Scalar> ComplexMatrix<S> {
    pub fn get(&self, i: usize, j: usize) -> &Complex<S> {
        &self.entries[i * self.cols + j]
    }
}

pub fn complex_adjoint<S: Scalar>(a: &QMatrix<S>) -> ComplexMatrix<S> {
    let (m, n) = (a.rows(), a.cols());
    let mut entries = vec![Complex::zero(); 4 * m * n];
    let w = 2 * n;
    for i in 0..m {
        for j in 0..n {
            let q = a.get(i, j);
            let a1 = Complex::new(q.x0.clone(), q.x1.clone());
            let a2 = Complex::new(q.x2.clone(), q.x3.clone());
            entries[i * w + j] = a1.clone();
            entries[i * w + n + j] = a2.clone();
            entries[(m + i) * w + j] = a2.conj().neg();
            entries[(m + i) * w + n + j] = a1.conj();
        }
    }
    ComplexMatrix { rows: 2 * m, cols: w, entries }
}

pub fn rank_via_adjoint<S: Scalar>(a: &QMatrix<S>) -> Result<RankReport> {
    rank_via_adjoint_tol(a, DEFAULT_TOL)
}

/// Half the complex rank of the adjoint. Odd complex rank is reported as an error.
pub fn rank_via_adjoint_tol<S: Scalar>(a: &QMatrix<S>, tol: f64) -> Result<RankReport> {
    let c = complex_adjoint(a);
    let (crank, tolerance) = if S::EXACT {
        (complex_rank_exact(&c), None)
    } else {
        (complex_rank_svd(&c, tol), Some(tol))
    };
    if crank % 2 != 0 {
        return Err(Error::ParityViolation(crank));
    }
    Ok(RankReport { rank: crank / 2, method: RankMethod::Adjoint, tolerance, cross_check: None })
}

/// Gaussian elimination over `Q(i)`.
fn complex_rank_exact<S: Scalar>(c: &ComplexMatrix<S>) -> usize {
    let mut rows: Vec<Vec<Complex<S>>> =
        (0..c.rows).map(|i| c.entries[i * c.cols..(i + 1) * c.cols].to_vec()).collect();
    let mut rank = 0;
    for col in 0..c.cols {
        let Some(pr) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else { continue };
        rows.swap(rank, pr);
        let (top, rest) = rows.split_at_mut(rank + 1);
        let prow = &top[rank];
        let p = &prow[col];
        let pn = p.re.mul_ref(&p.re).add_ref(&p.im.mul_ref(&p.im));
        let pinv_n = pn.recip().expect("nonzero pivot");
        let pinv = Complex::new(p.re.mul_ref(&pinv_n), (-p.im.clone()).mul_ref(&pinv_n));
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let f = row[col].mul(&pinv);
            row[col] = Complex::zero();
            for j in col + 1..c.cols {
                row[j] = row[j].sub(&f.mul(&prow[j]));
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn complex_rank_svd<S: Scalar>(c: &ComplexMatrix<S>, tol: f64) -> usize {
    if c.rows == 0 || c.cols == 0 {
        return 0;
    }
    let m = DMatrix::from_fn(c.rows, c.cols, |i, j| {
        let z = c.get(i, j);
        nalgebra::Complex::new(z.re.to_f64(), z.im.to_f64())
    });
    let sv = m.singular_values();
    let smax = sv.iter().cloned().fold(0.0f64, f64::max);
    if smax == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > tol * smax).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::{Quaternion, Rational};

    type Q = Quaternion<Rational>;

    fn one_by_one(q: Q) -> ComplexMatrix<Rational> {
        complex_adjoint(&QMatrix::from_rows(vec![vec![q]]))
    }

    fn c(re: i64, im: i64) -> Complex<Rational> {
        Complex::new(Rational::integer(re), Rational::integer(im))
    }

    #[test]
    fn unit_embeddings() {
        assert_eq!(one_by_one(Q::j()).entries, vec![c(0, 0), c(1, 0), c(-1, 0), c(0, 0)]);
        assert_eq!(one_by_one(Q::i()).entries, vec![c(0, 1), c(0, 0), c(0, 0), c(0, -1)]);
    }

    #[test]
    fn single_edge_has_full_rank() {
        let a = QMatrix::from_rows(vec![vec![Q::zero(), Q::one()], vec![Q::one(), Q::zero()]]);
        let ad = complex_adjoint(&a);
        assert_eq!((ad.rows, ad.cols), (4, 4));
        assert_eq!(complex_rank_exact(&ad), 4);
        assert_eq!(rank_via_adjoint(&a).unwrap().rank, 2);
        assert_eq!(rank_via_adjoint(&a.to_float()).unwrap().rank, 2);
    }

    #[test]
    fn four_cycle_all_ones() {
        let mut a = QMatrix::<Rational>::zeros(4, 4);
        for i in 0..4 {
            a.set(i, (i + 1) % 4, Q::one());
            a.set((i + 1) % 4, i, Q::one());
        }
        assert_eq!(rank_via_adjoint(&a).unwrap().rank, 2);
        assert_eq!(rank_via_adjoint(&QMatrix::<Rational>::zeros(3, 3)).unwrap().rank, 0);
    }
}
