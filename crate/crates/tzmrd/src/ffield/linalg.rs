//! Dense matrices over the big field, with Gaussian elimination.
//!
//! Pivoting is deterministic (first nonzero row), so solutions, inverses and
//! nullspace bases are reproducible across runs.

use super::{Fe, FieldCtx};
use crate::error::{Error, Result};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    /// row-major entries, length rows * cols
    pub data: Vec<Fe>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Fe>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zero(ctx: &FieldCtx, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![ctx.zero(); rows * cols],
        }
    }

    pub fn identity(ctx: &FieldCtx, size: usize) -> Matrix {
        let mut m = Matrix::zero(ctx, size, size);
        for i in 0..size {
            *m.at_mut(i, i) = ctx.one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Fe) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &Fe {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Fe {
        &mut self.data[i * self.cols + j]
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn matvec(&self, ctx: &FieldCtx, v: &[Fe]) -> Result<Vec<Fe>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "matvec: {} columns vs vector length {}",
                self.cols,
                v.len()
            )));
        }
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut acc = ctx.zero();
            for j in 0..self.cols {
                let e = self.at(i, j);
                if !e.is_zero() && !v[j].is_zero() {
                    acc = ctx.add(&acc, &ctx.mul(e, &v[j]));
                }
            }
            out.push(acc);
        }
        Ok(out)
    }

    pub fn mul(&self, ctx: &FieldCtx, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "matmul: {}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zero(ctx, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.at(i, k).clone();
                if aik.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = ctx.mul(&aik, other.at(k, j));
                    *out.at_mut(i, j) = ctx.add(out.at(i, j), &t);
                }
            }
        }
        Ok(out)
    }

    /// Cyclic square submatrix: rows r0..r0+size-1 and columns c0..c0+size-1,
    /// indices taken modulo the matrix dimensions.
    pub fn cyclic_submatrix(&self, r0: usize, c0: usize, size: usize) -> Matrix {
        Matrix::from_fn(size, size, |i, j| {
            self.at((r0 + i) % self.rows, (c0 + j) % self.cols).clone()
        })
    }
}

/// Result of [`solve_linear`]: one solution when the system is consistent,
/// the rank, and a basis of the homogeneous solution space.
#[derive(Debug, Clone)]
pub struct SolveOutcome {
    pub solution: Option<Vec<Fe>>,
    pub rank: usize,
    pub nullspace: Vec<Vec<Fe>>,
}

/// Solve A x = b over the field by Gauss-Jordan elimination.
pub fn solve_linear(ctx: &FieldCtx, a: &Matrix, b: &[Fe]) -> Result<SolveOutcome> {
    if b.len() != a.rows {
        return Err(Error::DimensionMismatch(format!(
            "solve: {} rows vs rhs length {}",
            a.rows,
            b.len()
        )));
    }
    let rows = a.rows;
    let cols = a.cols;
    let mut work = a.data.clone();
    let mut rhs = b.to_vec();
    let at = |w: &Vec<Fe>, i: usize, j: usize| w[i * cols + j].clone();

    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        let Some(sel) = (r..rows).find(|&i| !at(&work, i, c).is_zero()) else {
            continue;
        };
        for j in 0..cols {
            work.swap(r * cols + j, sel * cols + j);
        }
        rhs.swap(r, sel);
        let inv = ctx.inv(&at(&work, r, c))?;
        for j in 0..cols {
            work[r * cols + j] = ctx.mul(&work[r * cols + j], &inv);
        }
        rhs[r] = ctx.mul(&rhs[r], &inv);
        for i in 0..rows {
            if i != r {
                let f = at(&work, i, c);
                if f.is_zero() {
                    continue;
                }
                for j in 0..cols {
                    let t = ctx.mul(&f, &work[r * cols + j]);
                    work[i * cols + j] = ctx.sub(&work[i * cols + j], &t);
                }
                let t = ctx.mul(&f, &rhs[r]);
                rhs[i] = ctx.sub(&rhs[i], &t);
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let rank = pivots.len();

    let consistent = rhs[rank..].iter().all(Fe::is_zero);
    let solution = if consistent {
        let mut x = vec![ctx.zero(); cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = rhs[row].clone();
        }
        Some(x)
    } else {
        None
    };

    let mut nullspace = Vec::new();
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![ctx.zero(); cols];
        v[free] = ctx.one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = ctx.neg(&at(&work, row, free));
        }
        nullspace.push(v);
    }

    Ok(SolveOutcome {
        solution,
        rank,
        nullspace,
    })
}

pub fn rank(ctx: &FieldCtx, a: &Matrix) -> usize {
    let zeros = vec![ctx.zero(); a.rows];
    solve_linear(ctx, a, &zeros).expect("dimensions consistent").rank
}

/// Matrix inverse, None when singular.
pub fn invert(ctx: &FieldCtx, a: &Matrix) -> Result<Option<Matrix>> {
    if a.rows != a.cols {
        return Err(Error::DimensionMismatch(format!(
            "invert: {}x{} is not square",
            a.rows, a.cols
        )));
    }
    let size = a.rows;
    let mut work = a.data.clone();
    let mut aug = Matrix::identity(ctx, size).data;
    for c in 0..size {
        let Some(sel) = (c..size).find(|&i| !work[i * size + c].is_zero()) else {
            return Ok(None);
        };
        for j in 0..size {
            work.swap(c * size + j, sel * size + j);
            aug.swap(c * size + j, sel * size + j);
        }
        let inv = ctx.inv(&work[c * size + c])?;
        for j in 0..size {
            work[c * size + j] = ctx.mul(&work[c * size + j], &inv);
            aug[c * size + j] = ctx.mul(&aug[c * size + j], &inv);
        }
        for i in 0..size {
            if i != c && !work[i * size + c].is_zero() {
                let f = work[i * size + c].clone();
                for j in 0..size {
                    let t = ctx.mul(&f, &work[c * size + j]);
                    work[i * size + j] = ctx.sub(&work[i * size + j], &t);
                    let t = ctx.mul(&f, &aug[c * size + j]);
                    aug[i * size + j] = ctx.sub(&aug[i * size + j], &t);
                }
            }
        }
    }
    Ok(Some(Matrix {
        rows: size,
        cols: size,
        data: aug,
    }))
}
