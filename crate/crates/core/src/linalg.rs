//! Small dense helpers: LU determinant/solve, orthonormal bases, exact
//! integer rank. Everything here targets desk-scale matrices.

use ndarray::Array2;

/// Determinant by LU with partial pivoting. The empty matrix has
/// determinant 1.
pub fn det(a: &Array2<f64>) -> f64 {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "det needs a square matrix");
    if n == 0 {
        return 1.0;
    }
    let mut m = a.clone();
    let mut sign = 1.0;
    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&i, &j| m[[i, col]].abs().total_cmp(&m[[j, col]].abs()))
            .unwrap();
        if m[[pivot_row, col]] == 0.0 {
            return 0.0;
        }
        if pivot_row != col {
            for j in 0..n {
                m.swap([pivot_row, j], [col, j]);
            }
            sign = -sign;
        }
        let pivot = m[[col, col]];
        for i in col + 1..n {
            let factor = m[[i, col]] / pivot;
            if factor != 0.0 {
                for j in col..n {
                    m[[i, j]] -= factor * m[[col, j]];
                }
            }
        }
    }
    (0..n).map(|i| m[[i, i]]).product::<f64>() * sign
}

/// Solves `a x = rhs` column by column via Gauss elimination with partial
/// pivoting; `None` when a pivot degenerates.
pub fn solve(a: &Array2<f64>, rhs: &Array2<f64>) -> Option<Array2<f64>> {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "solve needs a square matrix");
    assert_eq!(n, rhs.nrows(), "rhs row count must match");
    let k = rhs.ncols();
    if n == 0 {
        return Some(Array2::zeros((0, k)));
    }
    let scale = a.iter().fold(0.0f64, |m, &x| m.max(x.abs()));
    let tiny = 1e-14 * scale.max(1.0);
    let mut m = a.clone();
    let mut x = rhs.clone();
    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&i, &j| m[[i, col]].abs().total_cmp(&m[[j, col]].abs()))
            .unwrap();
        if m[[pivot_row, col]].abs() <= tiny {
            return None;
        }
        if pivot_row != col {
            for j in 0..n {
                m.swap([pivot_row, j], [col, j]);
            }
            for j in 0..k {
                x.swap([pivot_row, j], [col, j]);
            }
        }
        let pivot = m[[col, col]];
        for i in 0..n {
            if i == col {
                continue;
            }
            let factor = m[[i, col]] / pivot;
            if factor != 0.0 {
                for j in col..n {
                    m[[i, j]] -= factor * m[[col, j]];
                }
                for j in 0..k {
                    x[[i, j]] -= factor * x[[col, j]];
                }
            }
        }
    }
    for i in 0..n {
        let pivot = m[[i, i]];
        for j in 0..k {
            x[[i, j]] /= pivot;
        }
    }
    Some(x)
}

/// Matrix inverse; `None` if singular at pivot tolerance.
pub fn inv(a: &Array2<f64>) -> Option<Array2<f64>> {
    solve(a, &Array2::eye(a.nrows()))
}

/// Orthonormal basis of the zero-sum subspace (the orthogonal complement
/// of the all-ones vector): the n x (n-1) Helmert-style matrix whose j-th
/// column has j ones followed by -j, normalized.
pub fn zero_sum_basis(n: usize) -> Array2<f64> {
    assert!(n >= 1);
    let mut p = Array2::zeros((n, n - 1));
    for j in 1..n {
        let norm = ((j * (j + 1)) as f64).sqrt();
        for i in 0..j {
            p[[i, j - 1]] = 1.0 / norm;
        }
        p[[j, j - 1]] = -(j as f64) / norm;
    }
    p
}

/// Orthonormalizes the columns by modified Gram-Schmidt (two passes).
/// Assumes full column rank.
pub fn orthonormalize(a: &Array2<f64>) -> Array2<f64> {
    let mut q = a.clone();
    let cols = q.ncols();
    for _pass in 0..2 {
        for j in 0..cols {
            for i in 0..j {
                let proj = q.column(i).dot(&q.column(j));
                let qi = q.column(i).to_owned();
                let mut qj = q.column_mut(j);
                qj.scaled_add(-proj, &qi);
            }
            let norm = q.column(j).dot(&q.column(j)).sqrt();
            assert!(norm > 1e-12, "orthonormalize: rank-deficient input");
            q.column_mut(j).mapv_inplace(|x| x / norm);
        }
    }
    q
}

/// Exact rank of an integer matrix by fraction-free (Bareiss) elimination
/// in i128 arithmetic.
pub fn int_rank(a: &Array2<i64>) -> usize {
    let (rows, cols) = a.dim();
    if rows == 0 || cols == 0 {
        return 0;
    }
    let mut m: Vec<Vec<i128>> = (0..rows)
        .map(|i| (0..cols).map(|j| a[[i, j]] as i128).collect())
        .collect();
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot_row);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
            }
            m[i][col] = 0;
        }
        prev = m[rank][col];
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Largest entrywise deviation from symmetry.
pub fn max_asymmetry(a: &Array2<f64>) -> f64 {
    let n = a.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in i + 1..n {
            worst = worst.max((a[[i, j]] - a[[j, i]]).abs());
        }
    }
    worst
}
