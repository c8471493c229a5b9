//! Dense exact linear algebra over [`Scalar`]: row reduction, rank,
//! kernels, consistent solves and inversion. On the approx backend the
//! zero tests respect the tagged eps and pivots are chosen by magnitude.

use crate::scalar::Scalar;

pub type Matrix = Vec<Vec<Scalar>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        // best pivot in column c at or below row r
        let mut best: Option<usize> = None;
        for i in r..rows {
            if !m[i][c].is_zero() {
                match best {
                    None => best = Some(i),
                    Some(b) => {
                        if m[i][c].magnitude() > m[b][c].magnitude() {
                            best = Some(i);
                        }
                    }
                }
            }
        }
        let Some(p) = best else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv();
        for j in 0..cols {
            m[r][j] = &m[r][j] * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in 0..cols {
                    let sub = &m[r][j] * &factor;
                    m[i][j] = m[i][j].clone() - sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut m = m.clone();
    rref(&mut m).len()
}

/// Basis of the right kernel of an m×n matrix.
pub fn kernel_basis(m: &Matrix, cols: usize) -> Vec<Vec<Scalar>> {
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let mut basis = Vec::new();
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    for &f in &free {
        let mut v = vec![Scalar::zero(); cols];
        v[f] = Scalar::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -a[i][f].clone();
        }
        basis.push(v);
    }
    basis
}

/// Solve A x = b for a possibly overdetermined system; None when
/// inconsistent. Exact inputs give an exact consistency check; approx
/// inputs check the residual against the tagged eps.
pub fn solve(a: &Matrix, b: &[Scalar]) -> Option<Vec<Scalar>> {
    let rows = a.len();
    assert_eq!(rows, b.len());
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&cols) {
        return None; // pivot in the augmented column
    }
    let mut x = vec![Scalar::zero(); cols];
    for (i, &p) in pivots.iter().enumerate() {
        x[i] = aug[i][cols].clone();
        let _ = p;
    }
    // place pivot solutions at their columns (free vars stay 0)
    let mut x2 = vec![Scalar::zero(); cols];
    for (i, &p) in pivots.iter().enumerate() {
        x2[p] = x[i].clone();
    }
    Some(x2)
}

pub fn invert(m: &[Vec<Scalar>]) -> Option<Matrix> {
    let n = m.len();
    let mut aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j { Scalar::one() } else { Scalar::zero() });
            }
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    // invertible iff every pivot of the left block exists, i.e. no pivot
    // spills into the adjoined identity columns
    if pivots.iter().filter(|&&p| p < n).count() < n {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn mat_vec(m: &Matrix, v: &[Scalar]) -> Vec<Scalar> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
        })
        .collect()
}

/// Row-space basis (echelon rows) of a list of vectors.
pub fn span_basis(vectors: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    if vectors.is_empty() {
        return vec![];
    }
    let mut m = vectors.to_vec();
    let pivots = rref(&mut m);
    m.truncate(pivots.len());
    m
}

/// Does `v` lie in the row space spanned by the echelon rows `basis`?
pub fn in_span(basis: &[Vec<Scalar>], v: &[Scalar]) -> bool {
    let mut m = basis.to_vec();
    m.push(v.to_vec());
    rank(&m) == basis.len()
}
