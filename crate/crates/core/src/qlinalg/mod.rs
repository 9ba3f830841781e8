//! Dense quaternion matrices and their left row rank.

mod adjoint;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::quat::{Quaternion, Scalar};

pub use adjoint::{complex_adjoint, rank_via_adjoint, rank_via_adjoint_tol, Complex, ComplexMatrix};

/// Relative tolerance used by the float tower when none is given.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Row-major `rows x cols` quaternion matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix<S: Scalar> {
    rows: usize,
    cols: usize,
    entries: Vec<Quaternion<S>>,
}

impl<S: Scalar> QMatrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, entries: vec![Quaternion::zero(); rows * cols] }
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Quaternion<S>>>) -> Self {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == n), "ragged rows");
        QMatrix { rows: m, cols: n, entries: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Quaternion<S> {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, q: Quaternion<S>) {
        self.entries[i * self.cols + j] = q;
    }

    pub fn row(&self, i: usize) -> &[Quaternion<S>] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Quaternion<S>>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn conj_transpose(&self) -> Self {
        let mut out = QMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    pub fn is_hermitian(&self) -> bool {
        self.rows == self.cols && *self == self.conj_transpose()
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (0..self.rows.min(self.cols)).all(|i| self.get(i, i).is_zero())
    }

    /// Removes row `i` and column `i`.
    pub fn delete_index(&self, i: usize) -> Self {
        let keep: Vec<usize> = (0..self.rows.max(self.cols)).filter(|&k| k != i).collect();
        let rows: Vec<Vec<_>> = keep
            .iter()
            .filter(|&&r| r < self.rows)
            .map(|&r| keep.iter().filter(|&&c| c < self.cols).map(|&c| self.get(r, c).clone()).collect())
            .collect();
        let cols = self.cols - usize::from(i < self.cols);
        let mut out = QMatrix::from_rows(rows);
        out.cols = cols;
        out
    }

    /// `diag(self, other)`.
    pub fn block_diag(&self, other: &Self) -> Self {
        let mut out = QMatrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    pub fn to_float(&self) -> QMatrix<f64> {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(Quaternion::to_float).collect(),
        }
    }
}

impl<S: Scalar> fmt::Display for QMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|q| q.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RankMethod {
    Elimination,
    Adjoint,
    Both,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RankReport {
    pub rank: usize,
    pub method: RankMethod,
    /// Relative threshold; `None` in the exact tower.
    pub tolerance: Option<f64>,
    /// Adjoint rank when `method` is `Both`.
    pub cross_check: Option<usize>,
}

impl RankReport {
    pub fn agrees(&self) -> bool {
        self.cross_check.is_none_or(|r| r == self.rank)
    }
}

pub fn left_row_rank_eliminate<S: Scalar>(a: &QMatrix<S>) -> RankReport {
    left_row_rank_eliminate_tol(a, DEFAULT_TOL)
}

/// Rank by forward elimination using only left scalar multiples of rows.
///
/// The exact tower runs fraction-free: a row `r` below pivot `p` becomes
/// `|p|^2 row_r - (a_rc conj(p)) row_p`, which keeps integer-valued rows
/// integral. The float tower divides by the pivot and treats entries with
/// `|x|^2 <= (tol * max_row_norm)^2` as zero.
pub fn left_row_rank_eliminate_tol<S: Scalar>(a: &QMatrix<S>, tol: f64) -> RankReport {
    let mut rows = a.to_rows();
    let (rank, tolerance) = if S::EXACT {
        for r in rows.iter_mut() {
            clear_denominators(r);
        }
        (eliminate_exact(&mut rows, a.cols), None)
    } else {
        (eliminate_float(&mut rows, a.cols, tol), Some(tol))
    };
    RankReport { rank, method: RankMethod::Elimination, tolerance, cross_check: None }
}

/// Rank by the requested method; `Both` runs the two and records the adjoint rank.
pub fn rank_with<S: Scalar>(a: &QMatrix<S>, method: RankMethod, tol: f64) -> crate::Result<RankReport> {
    match method {
        RankMethod::Elimination => Ok(left_row_rank_eliminate_tol(a, tol)),
        RankMethod::Adjoint => rank_via_adjoint_tol(a, tol),
        RankMethod::Both => {
            let e = left_row_rank_eliminate_tol(a, tol);
            let d = rank_via_adjoint_tol(a, tol)?;
            Ok(RankReport { method: RankMethod::Both, cross_check: Some(d.rank), ..e })
        }
    }
}

fn pick_pivot<S: Scalar>(rows: &[Vec<Quaternion<S>>], from: usize, c: usize) -> Option<(usize, f64)> {
    let mut best: Option<(usize, f64)> = None;
    for (r, row) in rows.iter().enumerate().skip(from) {
        if row[c].is_zero() {
            continue;
        }
        let w = row[c].norm_sq().to_f64();
        if best.is_none_or(|(_, b)| w > b) {
            best = Some((r, w));
        }
    }
    best
}

fn eliminate_exact<S: Scalar>(rows: &mut [Vec<Quaternion<S>>], cols: usize) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows.len() {
            break;
        }
        let Some((pr, _)) = pick_pivot(rows, rank, c) else { continue };
        rows.swap(rank, pr);
        let (top, rest) = rows.split_at_mut(rank + 1);
        let prow = &top[rank];
        let pn = prow[c].norm_sq();
        let pc = prow[c].conj();
        for row in rest.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let m = row[c].mul_ref(&pc);
            row[c] = Quaternion::zero();
            for j in c + 1..cols {
                row[j] = row[j].scale(&pn).sub_ref(&m.mul_ref(&prow[j]));
            }
            remove_content(row);
        }
        rank += 1;
    }
    rank
}

fn eliminate_float<S: Scalar>(rows: &mut [Vec<Quaternion<S>>], cols: usize, tol: f64) -> usize {
    let scale = rows
        .iter()
        .map(|r| r.iter().map(|q| q.norm_sq().to_f64()).sum::<f64>().sqrt())
        .fold(0.0f64, f64::max);
    if scale == 0.0 {
        return 0;
    }
    let thr2 = (tol * scale).powi(2);
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows.len() {
            break;
        }
        let Some((pr, w)) = pick_pivot(rows, rank, c) else { continue };
        if w <= thr2 {
            continue;
        }
        rows.swap(rank, pr);
        let (top, rest) = rows.split_at_mut(rank + 1);
        let prow = &top[rank];
        let pinv = prow[c].inverse().expect("pivot above threshold");
        for row in rest.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let m = row[c].mul_ref(&pinv);
            row[c] = Quaternion::zero();
            for j in c + 1..cols {
                row[j] = row[j].sub_ref(&m.mul_ref(&prow[j]));
            }
        }
        rank += 1;
    }
    rank
}

/// Multiplies a row by the lcm of its small denominators.
fn clear_denominators<S: Scalar>(row: &mut [Quaternion<S>]) {
    let mut l: i64 = 1;
    for q in row.iter() {
        for c in q.coeffs() {
            let Some((_, d)) = c.as_ratio() else { return };
            let g = gcd(l, d);
            match (l / g).checked_mul(d) {
                Some(v) => l = v,
                None => return,
            }
        }
    }
    if l > 1 {
        let s = S::from_i64(l);
        for q in row.iter_mut() {
            *q = q.scale(&s);
        }
    }
}

/// Divides an integer row by the gcd of its coefficients.
fn remove_content<S: Scalar>(row: &mut [Quaternion<S>]) {
    let mut g: i64 = 0;
    for q in row.iter() {
        for c in q.coeffs() {
            match c.as_ratio() {
                Some((n, 1)) => g = gcd(g, n),
                _ => return,
            }
        }
    }
    if g > 1 {
        let inv = S::one() / S::from_i64(g);
        for q in row.iter_mut() {
            *q = q.scale(&inv);
        }
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    i64::try_from(a).unwrap_or(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::{lipschitz_units, Rational};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    type Q = Quaternion<Rational>;

    fn path_matrix(gains: &[Q]) -> QMatrix<Rational> {
        let n = gains.len() + 1;
        let mut a = QMatrix::zeros(n, n);
        for (i, g) in gains.iter().enumerate() {
            a.set(i, i + 1, g.clone());
            a.set(i + 1, i, g.conj());
        }
        a
    }

    fn random_matrix(rng: &mut ChaCha8Rng, m: usize, n: usize, density: f64) -> QMatrix<Rational> {
        let units: Vec<Q> = lipschitz_units();
        let mut a = QMatrix::zeros(m, n);
        for i in 0..m {
            for j in 0..n {
                if rng.random_bool(density) {
                    a.set(i, j, units[rng.random_range(0..8)].clone());
                }
            }
        }
        a
    }

    #[test]
    fn empty_and_zero() {
        assert_eq!(left_row_rank_eliminate(&QMatrix::<Rational>::zeros(0, 0)).rank, 0);
        assert_eq!(left_row_rank_eliminate(&QMatrix::<Rational>::zeros(3, 3)).rank, 0);
        assert_eq!(left_row_rank_eliminate(&QMatrix::<f64>::zeros(2, 4)).rank, 0);
    }

    #[test]
    fn path_ranks() {
        assert_eq!(left_row_rank_eliminate(&path_matrix(&[Q::i(), Q::k()])).rank, 2);
        assert_eq!(left_row_rank_eliminate(&path_matrix(&[Q::j(), Q::one(), -Q::k()])).rank, 4);
    }

    #[test]
    fn left_not_right_dependence() {
        // j (1, i) = (j, -k) but (1, i) j = (j, k)
        let a = QMatrix::from_rows(vec![vec![Q::one(), Q::i()], vec![Q::j(), -Q::k()]]);
        assert_eq!(left_row_rank_eliminate(&a).rank, 1);
        let b = QMatrix::from_rows(vec![vec![Q::one(), Q::i()], vec![Q::j(), Q::k()]]);
        assert_eq!(left_row_rank_eliminate(&b).rank, 2);
    }

    #[test]
    fn hermitian_and_delete() {
        let a = path_matrix(&[Q::i(), Q::k()]);
        assert!(a.is_hermitian() && a.has_zero_diagonal());
        let b = a.delete_index(1);
        assert_eq!((b.rows(), b.cols()), (2, 2));
        assert!(b.get(0, 1).is_zero());
    }

    #[test]
    fn float_tower_matches_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let m = rng.random_range(1..8);
            let n = rng.random_range(1..8);
            let a = random_matrix(&mut rng, m, n, 0.4);
            assert_eq!(
                left_row_rank_eliminate(&a).rank,
                left_row_rank_eliminate(&a.to_float()).rank,
                "{a}"
            );
        }
    }

    #[test]
    fn block_diagonal_additivity() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let a = random_matrix(&mut rng, 4, 3, 0.5);
            let b = random_matrix(&mut rng, 3, 5, 0.5);
            let ra = left_row_rank_eliminate(&a).rank;
            let rb = left_row_rank_eliminate(&b).rank;
            assert_eq!(left_row_rank_eliminate(&a.block_diag(&b)).rank, ra + rb);
        }
    }

    #[test]
    fn both_methods_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..40 {
            let a = random_matrix(&mut rng, 6, 6, 0.5);
            let r = rank_with(&a, RankMethod::Both, DEFAULT_TOL).unwrap();
            assert!(r.agrees(), "{a}");
        }
    }
}
