//! Dense Gaussian elimination over [`Scalar`].
//!
//! The systems that arise here are tiny (one row and column per distinct
//! eigenvalue), so a straightforward elimination with magnitude pivoting is
//! plenty. Exact inputs stay exact all the way through.

use crate::scalar::Scalar;

/// Solves `A x = b` for square `A` given as rows. Returns `None` when no
/// usable pivot remains, i.e. the matrix is singular to within `tol` (exact
/// entries compare against zero exactly).
pub fn solve_system(a: &[Vec<Scalar>], b: &[Scalar], tol: f64) -> Option<Vec<Scalar>> {
    let n = a.len();
    debug_assert!(a.iter().all(|row| row.len() == n) && b.len() == n);
    let mut m: Vec<Vec<Scalar>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    for col in 0..n {
        let pivot = (col..n).max_by(|&i, &j| {
            m[i][col].abs().cmp_value(&m[j][col].abs())
        })?;
        if m[pivot][col].is_zero(tol) {
            return None;
        }
        m.swap(col, pivot);
        for row in 0..n {
            if row == col {
                continue;
            }
            let factor = &m[row][col] / &m[col][col];
            if factor.is_zero(0.0) {
                continue;
            }
            for k in col..=n {
                let t = &factor * &m[col][k];
                m[row][k] = &m[row][k] - &t;
            }
        }
    }
    Some((0..n).map(|i| &m[i][n] / &m[i][i]).collect())
}

/// Expresses `target` in the basis given by `basis` (each a length-n vector),
/// returning the coefficient on each basis vector.
pub fn expand_in_basis(basis: &[Vec<Scalar>], target: &[Scalar], tol: f64) -> Option<Vec<Scalar>> {
    let n = target.len();
    debug_assert_eq!(basis.len(), n);
    let rows: Vec<Vec<Scalar>> = (0..n)
        .map(|i| basis.iter().map(|v| v[i].clone()).collect())
        .collect();
    solve_system(&rows, target, tol)
}
