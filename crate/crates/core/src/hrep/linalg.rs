//! Small dense helpers. Matrices are row-major `Vec<Vec<f64>>`.

use nalgebra::DMatrix;

pub(crate) fn to_dmatrix(rows: &[Vec<f64>], cols: usize) -> DMatrix<f64> {
    DMatrix::from_fn(rows.len(), cols, |i, j| rows[i][j])
}

/// Numerical rank from singular values: those above `tol * max(1, σ_max)`.
pub fn rank(rows: &[Vec<f64>], cols: usize, tol: f64) -> usize {
    if rows.is_empty() || cols == 0 {
        return 0;
    }
    let sv = singular_values(rows, cols);
    let cutoff = tol * sv.first().copied().unwrap_or(0.0).max(1.0);
    sv.iter().filter(|&&s| s > cutoff).count()
}

/// Singular values in decreasing order.
pub fn singular_values(rows: &[Vec<f64>], cols: usize) -> Vec<f64> {
    if rows.is_empty() || cols == 0 {
        return Vec::new();
    }
    let m = to_dmatrix(rows, cols);
    let mut sv: Vec<f64> = m.singular_values().iter().copied().collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    sv
}

/// Basis of the null space read off the reduced row echelon form: one
/// vector per free column, with a 1 in that column.
pub fn null_space_rref(rows: &[Vec<f64>], cols: usize, tol: f64) -> Vec<Vec<f64>> {
    let mut a: Vec<Vec<f64>> = rows.to_vec();
    let scale = a
        .iter()
        .flat_map(|r| r.iter())
        .fold(0.0f64, |acc, v| acc.max(v.abs()))
        .max(1.0);
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == a.len() {
            break;
        }
        let (best, val) = (row..a.len())
            .map(|r| (r, a[r][col].abs()))
            .fold((row, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if val <= tol * scale {
            continue;
        }
        a.swap(row, best);
        let p = a[row][col];
        for v in a[row].iter_mut() {
            *v /= p;
        }
        for r in 0..a.len() {
            if r != row {
                let factor = a[r][col];
                if factor != 0.0 {
                    for c in 0..cols {
                        a[r][c] -= factor * a[row][c];
                    }
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0.0; cols];
            v[f] = 1.0;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[r][f];
            }
            v
        })
        .collect()
}

/// Solves the square system `m x = rhs`, or `None` when `m` is singular
/// at tolerance `tol`.
pub fn solve(rows: &[Vec<f64>], rhs: &[f64], tol: f64) -> Option<Vec<f64>> {
    let n = rhs.len();
    if rank(rows, n, tol) < n {
        return None;
    }
    let m = to_dmatrix(rows, n);
    let b = nalgebra::DVector::from_column_slice(rhs);
    m.lu().solve(&b).map(|x| x.iter().copied().collect())
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order.
pub fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}
