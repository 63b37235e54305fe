//! Small dense linear algebra over the prime field F_p, on raw digit rows.
//! Used for Frobenius fixed-field computations, q-polynomial kernels, and
//! F_q-rank bookkeeping.

/// Row-reduce `rows` in place over F_p. Returns the pivot column of each
/// surviving row, in order. Zero rows are dropped.
pub fn rref(rows: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        let Some(sel) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = inv_mod(rows[r][c], p);
        for v in rows[r].iter_mut() {
            *v = mul_mod(*v, inv, p);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..cols {
                    let sub = mul_mod(f, rows[r][j], p);
                    rows[i][j] = (rows[i][j] + p - sub) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of the right nullspace of the matrix given by `rows` (each row has
/// `cols` entries). Deterministic: free columns in increasing order.
pub fn nullspace(rows: &[Vec<u64>], cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut work: Vec<Vec<u64>> = rows.to_vec();
    let pivots = rref(&mut work, p);
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for (row, &pc) in work.iter().zip(&pivots) {
            // pivot entry is 1, so the pivot coordinate is -row[free]
            v[pc] = (p - row[free]) % p;
        }
        basis.push(v);
    }
    basis
}

/// Incremental row-echelon accumulator over F_p.
pub struct EchelonSpan {
    p: u64,
    /// rows in echelon form, each paired with its pivot column
    rows: Vec<(usize, Vec<u64>)>,
}

impl EchelonSpan {
    pub fn new(p: u64) -> Self {
        EchelonSpan { p, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the span; if a nonzero remainder survives it is
    /// absorbed and `true` is returned.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        let p = self.p;
        for &(pc, ref row) in &self.rows {
            if v[pc] != 0 {
                let f = v[pc];
                for (vj, rj) in v.iter_mut().zip(row) {
                    let sub = mul_mod(f, *rj, p);
                    *vj = (*vj + p - sub) % p;
                }
            }
        }
        match v.iter().position(|&x| x != 0) {
            None => false,
            Some(pc) => {
                let inv = inv_mod(v[pc], p);
                for x in v.iter_mut() {
                    *x = mul_mod(*x, inv, p);
                }
                let at = self.rows.partition_point(|&(c, _)| c < pc);
                self.rows.insert(at, (pc, v));
                true
            }
        }
    }

    /// Would `v` grow the span? (non-destructive membership test)
    pub fn contains(&self, v: &[u64]) -> bool {
        let p = self.p;
        let mut v = v.to_vec();
        for &(pc, ref row) in &self.rows {
            if v[pc] != 0 {
                let f = v[pc];
                for (vj, rj) in v.iter_mut().zip(row) {
                    let sub = mul_mod(f, *rj, p);
                    *vj = (*vj + p - sub) % p;
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime and a != 0 mod p
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nullspace_of_identity_is_empty() {
        let rows = vec![vec![1, 0], vec![0, 1]];
        assert!(nullspace(&rows, 2, 3).is_empty());
    }

    #[test]
    fn nullspace_dimension() {
        // rank-1 matrix over F_3, 3 columns -> nullity 2
        let rows = vec![vec![1, 2, 0], vec![2, 4 % 3, 0]];
        let ns = nullspace(&rows, 3, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let dot: u64 = v.iter().zip(&rows[0]).map(|(a, b)| a * b).sum();
            assert_eq!(dot % 3, 0);
        }
    }

    #[test]
    fn echelon_span_counts_dims() {
        let mut span = EchelonSpan::new(3);
        assert!(span.insert(vec![1, 1, 0]));
        assert!(!span.insert(vec![2, 2, 0]));
        assert!(span.insert(vec![0, 1, 1]));
        assert_eq!(span.dim(), 2);
        assert!(span.contains(&[1, 2, 1]));
        assert!(!span.contains(&[0, 0, 1]));
    }
}
