//! Dense linear algebra over a finite field.

use crate::algebra::field::{Elem, FieldDesc};
use crate::error::{Error, Result};

pub type Matrix = Vec<Vec<Elem>>;

/// Reduced row echelon form; returns the reduced matrix and pivot columns.
pub fn rref(f: &FieldDesc, mat: &Matrix) -> (Matrix, Vec<usize>) {
    let mut m = mat.clone();
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let inv = f.inv(m[r][c]).unwrap();
        for x in m[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let factor = m[i][c];
                for j in 0..cols {
                    let t = f.mul(factor, m[r][j]);
                    m[i][j] = f.sub(m[i][j], t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

pub fn rank(f: &FieldDesc, mat: &Matrix) -> usize {
    rref(f, mat).1.len()
}

/// Basis of `{v : mat · v = 0}`.
pub fn kernel(f: &FieldDesc, mat: &Matrix, cols: usize) -> Matrix {
    if mat.is_empty() {
        return (0..cols)
            .map(|i| (0..cols).map(|j| (i == j) as Elem).collect())
            .collect();
    }
    let (m, pivots) = rref(f, mat);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0; cols];
            v[fc] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m[r][fc]);
            }
            v
        })
        .collect()
}

pub fn inverse(f: &FieldDesc, mat: &Matrix) -> Result<Matrix> {
    let n = mat.len();
    let aug: Matrix = mat
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| (i == j) as Elem));
            r
        })
        .collect();
    let (m, pivots) = rref(f, &aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::SingularMatrix);
    }
    Ok(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn determinant(f: &FieldDesc, mat: &Matrix) -> Elem {
    let n = mat.len();
    let mut m = mat.clone();
    let mut det = 1;
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| m[i][c] != 0) else {
            return 0;
        };
        if pr != c {
            m.swap(pr, c);
            det = f.neg(det);
        }
        det = f.mul(det, m[c][c]);
        let inv = f.inv(m[c][c]).unwrap();
        for i in c + 1..n {
            if m[i][c] != 0 {
                let factor = f.mul(m[i][c], inv);
                for j in c..n {
                    let t = f.mul(factor, m[c][j]);
                    m[i][j] = f.sub(m[i][j], t);
                }
            }
        }
    }
    det
}

/// Indices of a greedy maximal set of linearly independent rows.
pub fn independent_rows(f: &FieldDesc, mat: &Matrix) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut basis: Matrix = Vec::new();
    for (i, row) in mat.iter().enumerate() {
        let mut trial = basis.clone();
        trial.push(row.clone());
        if rank(f, &trial) == trial.len() {
            basis = trial;
            chosen.push(i);
        }
    }
    chosen
}

/// Some solution of `mat · x = rhs`, if one exists.
pub fn solve(f: &FieldDesc, mat: &Matrix, rhs: &[Elem]) -> Option<Vec<Elem>> {
    let cols = mat.first().map_or(0, |r| r.len());
    let aug: Matrix = mat
        .iter()
        .zip(rhs)
        .map(|(row, &b)| {
            let mut r = row.clone();
            r.push(b);
            r
        })
        .collect();
    let (m, pivots) = rref(f, &aug);
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![0; cols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = m[r][cols];
    }
    Some(x)
}

pub fn mat_mul(f: &FieldDesc, a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![0; cols]; n];
    for i in 0..n {
        for k in 0..inner {
            let aik = a[i][k];
            if aik == 0 {
                continue;
            }
            for j in 0..cols {
                out[i][j] = f.add(out[i][j], f.mul(aik, b[k][j]));
            }
        }
    }
    out
}

pub fn mat_vec(f: &FieldDesc, a: &Matrix, v: &[Elem]) -> Vec<Elem> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
        })
        .collect()
}

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| (i == j) as Elem).collect())
        .collect()
}

pub fn transpose(a: &Matrix) -> Matrix {
    let cols = a.first().map_or(0, |r| r.len());
    (0..cols)
        .map(|j| a.iter().map(|r| r[j]).collect())
        .collect()
}
