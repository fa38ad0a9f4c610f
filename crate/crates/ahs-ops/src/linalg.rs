//! Small dense linear algebra over exact rationals, enough for inverting
//! Cartan matrices and solving the normalization systems.

use crate::Rat;
use num_traits::{One, Zero};

/// Solve `a x = b` by Gauss-Jordan elimination. Returns `None` when the
/// matrix is singular. `a` must be square.
pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.len();
    assert!(a.iter().all(|row| row.len() == n) && b.len() == n);
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x = &*x / &p;
        }
        for row in 0..n {
            if row != col && !m[row][col].is_zero() {
                let f = m[row][col].clone();
                #[allow(clippy::needless_range_loop)]
                for c in col..=n {
                    let delta = &f * &m[col][c];
                    m[row][c] = &m[row][c] - delta;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Inverse of a square rational matrix, or `None` when singular.
pub fn invert(a: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = a.len();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = vec![Rat::zero(); n];
        e[j] = Rat::one();
        cols.push(solve(a, &e)?);
    }
    // `cols[j]` is the j-th column of the inverse.
    let mut inv = vec![vec![Rat::zero(); n]; n];
    for (j, col) in cols.iter().enumerate() {
        for (i, x) in col.iter().enumerate() {
            inv[i][j] = x.clone();
        }
    }
    Some(inv)
}

/// Basis of the null space of the (possibly rectangular) matrix `a`,
/// i.e. all `x` with `a x = 0`.
pub fn null_space(a: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let mut m: Vec<Vec<Rat>> = a.to_vec();
    let nrows = m.len();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == nrows {
            break;
        }
        if let Some(p) = (row..nrows).find(|&r| !m[r][col].is_zero()) {
            m.swap(row, p);
            let pv = m[row][col].clone();
            for x in m[row].iter_mut() {
                *x = &*x / &pv;
            }
            for r in 0..nrows {
                if r != row && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    #[allow(clippy::needless_range_loop)]
                    for c in 0..ncols {
                        let delta = &f * &m[row][c];
                        m[r][c] = &m[r][c] - delta;
                    }
                }
            }
            pivot_cols.push(col);
            row += 1;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivot_cols.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free {
        let mut v = vec![Rat::zero(); ncols];
        v[fc] = Rat::one();
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -m[r][fc].clone();
        }
        basis.push(v);
    }
    basis
}
