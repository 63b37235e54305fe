//! Linearized polynomials over F_{q^{2n}} in the twisted monomial basis
//! x^{[i]} = x^{q^{si}}, with Dickson matrices, kernels and Moore-matrix
//! interpolation.
//!
//! Coefficient vectors have fixed length 2n (high zeros retained), so the
//! index arithmetic mod 2n of the Dickson matrix and of composition stays
//! trivial.

use crate::error::{Error, Result};
use crate::ffield::linalg::{self, Matrix};
use crate::ffield::{fplin, subspace, Fe, FieldCtx};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct LinearizedPoly {
    coeffs: Vec<Fe>,
}

impl LinearizedPoly {
    /// Wrap a coefficient vector, padding with zeros up to length 2n.
    pub fn new(ctx: &FieldCtx, mut coeffs: Vec<Fe>) -> Result<LinearizedPoly> {
        if coeffs.len() > ctx.two_n() {
            return Err(Error::DimensionMismatch(format!(
                "linearized polynomial has {} coefficients, expected at most {}",
                coeffs.len(),
                ctx.two_n()
            )));
        }
        coeffs.resize(ctx.two_n(), ctx.zero());
        Ok(LinearizedPoly { coeffs })
    }

    pub fn zero(ctx: &FieldCtx) -> LinearizedPoly {
        LinearizedPoly {
            coeffs: vec![ctx.zero(); ctx.two_n()],
        }
    }

    /// The polynomial x.
    pub fn identity(ctx: &FieldCtx) -> LinearizedPoly {
        Self::monomial(ctx, 0, ctx.one())
    }

    /// c * x^{[i]}
    pub fn monomial(ctx: &FieldCtx, i: usize, c: Fe) -> LinearizedPoly {
        let mut coeffs = vec![ctx.zero(); ctx.two_n()];
        coeffs[i % ctx.two_n()] = c;
        LinearizedPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Fe {
        &self.coeffs[i]
    }

    pub fn set_coeff(&mut self, i: usize, c: Fe) {
        self.coeffs[i] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Fe::is_zero)
    }

    /// Largest index with a nonzero coefficient; None for the zero polynomial.
    pub fn q_degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }
}

/// Evaluate L at x: sum of coeffs[i] * x^{[i]}. The bracket powers are built
/// incrementally, one Frobenius per index.
pub fn eval(ctx: &FieldCtx, l: &LinearizedPoly, x: &Fe) -> Fe {
    let mut acc = ctx.zero();
    let mut xi = x.clone();
    for (i, c) in l.coeffs.iter().enumerate() {
        if i > 0 {
            xi = ctx.bracket(&xi, 1);
        }
        if !c.is_zero() {
            acc = ctx.add(&acc, &ctx.mul(c, &xi));
        }
    }
    acc
}

pub fn add(ctx: &FieldCtx, a: &LinearizedPoly, b: &LinearizedPoly) -> LinearizedPoly {
    LinearizedPoly {
        coeffs: a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| ctx.add(x, y))
            .collect(),
    }
}

pub fn sub(ctx: &FieldCtx, a: &LinearizedPoly, b: &LinearizedPoly) -> LinearizedPoly {
    LinearizedPoly {
        coeffs: a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| ctx.sub(x, y))
            .collect(),
    }
}

pub fn scale(ctx: &FieldCtx, l: &LinearizedPoly, c: &Fe) -> LinearizedPoly {
    LinearizedPoly {
        coeffs: l.coeffs.iter().map(|x| ctx.mul(c, x)).collect(),
    }
}

/// Composition L1(L2(x)) reduced in the quotient where x^{[2n]} = x: the
/// coefficient at (i+j) mod 2n accumulates L1_i * L2_j^{[i]}.
pub fn compose(ctx: &FieldCtx, l1: &LinearizedPoly, l2: &LinearizedPoly) -> LinearizedPoly {
    let two_n = ctx.two_n();
    let mut out = vec![ctx.zero(); two_n];
    for (i, a) in l1.coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in l2.coeffs.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let t = ctx.mul(a, &ctx.bracket(b, i));
            let idx = (i + j) % two_n;
            out[idx] = ctx.add(&out[idx], &t);
        }
    }
    LinearizedPoly { coeffs: out }
}

/// Dickson matrix: entry (i, j) = coeffs[(i - j) mod 2n]^{[j]}.
pub fn dickson(ctx: &FieldCtx, l: &LinearizedPoly) -> Matrix {
    let two_n = ctx.two_n();
    Matrix::from_fn(two_n, two_n, |i, j| {
        let idx = (i + two_n - j) % two_n;
        ctx.bracket(&l.coeffs[idx], j)
    })
}

/// Rank of L as an F_q-linear map, via the rank of its Dickson matrix over
/// the big field.
pub fn rank(ctx: &FieldCtx, l: &LinearizedPoly) -> usize {
    linalg::rank(ctx, &dickson(ctx, l))
}

/// The d x d matrix over F_p of the map x -> L(x) in the power basis.
fn fp_matrix(ctx: &FieldCtx, l: &LinearizedPoly) -> Vec<Vec<u64>> {
    let d = ctx.degree();
    let mut cols: Vec<Vec<u64>> = Vec::with_capacity(d);
    for j in 0..d {
        let mut basis = vec![0u64; d];
        basis[j] = 1;
        let img = eval(ctx, l, &ctx.from_digits(&basis).unwrap());
        cols.push(img.digits().to_vec());
    }
    // transpose into rows
    (0..d)
        .map(|i| (0..d).map(|j| cols[j][i]).collect())
        .collect()
}

/// An F_q-basis of Ker(L), computed by expanding the field as an F_q-vector
/// space and taking the nullspace over F_p.
pub fn kernel_basis(ctx: &FieldCtx, l: &LinearizedPoly) -> Vec<Fe> {
    let rows = fp_matrix(ctx, l);
    let null = fplin::nullspace(&rows, ctx.degree(), ctx.p());
    let elems: Vec<Fe> = null
        .into_iter()
        .map(|v| ctx.from_digits(&v).unwrap())
        .collect();
    subspace::fq_independent_subset(ctx, &elems)
}

/// F_q-dimension of Ker(L).
pub fn kernel_dim(ctx: &FieldCtx, l: &LinearizedPoly) -> usize {
    let rows = fp_matrix(ctx, l);
    let null = fplin::nullspace(&rows, ctx.degree(), ctx.p());
    debug_assert_eq!(null.len() % ctx.m(), 0);
    null.len() / ctx.m()
}

/// Necessary norm condition for a q-degree-k polynomial to attain the
/// maximal kernel size q^k: Norm(l_k) = (-1)^{Dk} Norm(l_0) with D the
/// field degree over F_q.
pub fn gow_quinlan_holds(ctx: &FieldCtx, l: &LinearizedPoly) -> Result<bool> {
    let k = l.q_degree().ok_or(Error::ZeroPolynomial)?;
    let n0 = ctx.norm_to(&l.coeffs[0], 1)?;
    let nk = ctx.norm_to(&l.coeffs[k], 1)?;
    let sign_is_neg = (ctx.two_n() * k) % 2 == 1;
    let rhs = if sign_is_neg { ctx.neg(&n0) } else { n0 };
    Ok(nk == rhs)
}

/// Monic linearized polynomial whose kernel is exactly the F_q-span of
/// `elems` (dependent or zero entries are skipped). Built by the usual
/// tower recursion L <- L^{[1]} - (L(w)^{[1]}/L(w)) L, one step per
/// independent element, so the twisted q-degree equals the span dimension.
pub fn subspace_poly(ctx: &FieldCtx, elems: &[Fe]) -> Result<LinearizedPoly> {
    let mut l = LinearizedPoly::identity(ctx);
    let mut dim = 0usize;
    for w in elems {
        let val = eval(ctx, &l, w);
        if val.is_zero() {
            continue; // already in the kernel
        }
        dim += 1;
        if dim >= ctx.two_n() {
            return Err(Error::DimensionMismatch(
                "subspace polynomial would have full degree".into(),
            ));
        }
        let shifted = compose(ctx, &LinearizedPoly::monomial(ctx, 1, ctx.one()), &l);
        let ratio = ctx.div(&ctx.bracket(&val, 1), &val)?;
        l = sub(ctx, &shifted, &scale(ctx, &l, &ratio));
    }
    Ok(l)
}

/// The unique L in L_{2n} with L(points[i]) = values[i], by solving the
/// Moore system. The points must be F_q-linearly independent.
pub fn interpolate(ctx: &FieldCtx, points: &[Fe], values: &[Fe]) -> Result<LinearizedPoly> {
    let two_n = ctx.two_n();
    if points.len() != two_n || values.len() != two_n {
        return Err(Error::DimensionMismatch(format!(
            "interpolation needs {} points and values",
            two_n
        )));
    }
    let moore = moore_matrix(ctx, points);
    let out = linalg::solve_linear(ctx, &moore, values)?;
    if out.rank < two_n {
        return Err(Error::DependentPoints);
    }
    LinearizedPoly::new(ctx, out.solution.expect("full-rank square system"))
}

/// Moore matrix with entry (i, j) = points[i]^{[j]}.
pub fn moore_matrix(ctx: &FieldCtx, points: &[Fe]) -> Matrix {
    let cols = ctx.two_n();
    let mut data = Vec::with_capacity(points.len() * cols);
    for x in points {
        let mut xi = x.clone();
        for j in 0..cols {
            if j > 0 {
                xi = ctx.bracket(&xi, 1);
            }
            data.push(xi.clone());
        }
    }
    Matrix {
        rows: points.len(),
        cols,
        data,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::tests::f34;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn rand_poly(ctx: &FieldCtx, rng: &mut impl Rng) -> LinearizedPoly {
        let coeffs: Vec<Fe> = (0..ctx.two_n())
            .map(|_| {
                let digits: Vec<u64> =
                    (0..ctx.degree()).map(|_| rng.gen_range(0..ctx.p())).collect();
                ctx.from_digits(&digits).unwrap()
            })
            .collect();
        LinearizedPoly::new(ctx, coeffs).unwrap()
    }

    #[test]
    fn eval_identity_and_zero() {
        let ctx = f34();
        let id = LinearizedPoly::identity(ctx);
        let l = LinearizedPoly::new(ctx, vec![ctx.scalar(2), ctx.one(), ctx.generator()]).unwrap();
        for a in ctx.elements() {
            assert_eq!(eval(ctx, &id, &a), a);
        }
        assert_eq!(eval(ctx, &l, &ctx.zero()), ctx.zero());
    }

    #[test]
    fn eval_is_fq_linear() {
        let ctx = f34();
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(1);
        let l = rand_poly(ctx, &mut rng);
        let scalars = ctx.subfield_elements(1).unwrap();
        let xs: Vec<Fe> = ctx.elements().take(9).collect();
        for c in &scalars {
            for x in &xs {
                for y in &xs {
                    let lhs = eval(ctx, &l, &ctx.add(&ctx.mul(c, x), y));
                    let rhs = ctx.add(&ctx.mul(c, &eval(ctx, &l, x)), &eval(ctx, &l, y));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn dickson_of_simple_polynomials() {
        let ctx = f34();
        let z = dickson(ctx, &LinearizedPoly::zero(ctx));
        assert!(z.data.iter().all(Fe::is_zero));
        let id = dickson(ctx, &LinearizedPoly::identity(ctx));
        for i in 0..4 {
            for j in 0..4 {
                let expect = if i == j { ctx.one() } else { ctx.zero() };
                assert_eq!(*id.at(i, j), expect);
            }
        }
        assert_eq!(rank(ctx, &LinearizedPoly::identity(ctx)), 4);
        assert_eq!(rank(ctx, &LinearizedPoly::zero(ctx)), 0);
    }

    #[test]
    fn rank_of_frobenius_minus_identity() {
        // x^{[1]} - x has kernel exactly F_q, so rank 2n - 1
        let ctx = f34();
        let l = LinearizedPoly::new(ctx, vec![ctx.neg(&ctx.one()), ctx.one()]).unwrap();
        assert_eq!(rank(ctx, &l), 3);
        assert_eq!(kernel_dim(ctx, &l), 1);
        let basis = kernel_basis(ctx, &l);
        assert_eq!(basis.len(), 1);
        assert!(ctx.in_subfield(&basis[0], 1).unwrap());
    }

    #[test]
    fn dickson_rank_equals_codim_of_kernel() {
        let ctx = f34();
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(2);
        for _ in 0..200 {
            let l = rand_poly(ctx, &mut rng);
            assert_eq!(rank(ctx, &l) + kernel_dim(ctx, &l), 4);
        }
    }

    #[test]
    fn kernel_basis_spans_the_kernel() {
        let ctx = f34();
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(3);
        for _ in 0..50 {
            let l = rand_poly(ctx, &mut rng);
            let exhaustive: Vec<Fe> = ctx
                .elements()
                .filter(|x| eval(ctx, &l, x).is_zero())
                .collect();
            let dim = kernel_dim(ctx, &l);
            assert_eq!(exhaustive.len(), 3usize.pow(dim as u32));
            let basis = kernel_basis(ctx, &l);
            assert_eq!(basis.len(), dim);
            for b in &basis {
                assert!(eval(ctx, &l, b).is_zero());
            }
        }
    }

    #[test]
    fn compose_matches_pointwise_evaluation() {
        let ctx = f34();
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(4);
        // x^{[1]} o x^{[1]} = x^{[2]}
        let m1 = LinearizedPoly::monomial(ctx, 1, ctx.one());
        assert_eq!(
            compose(ctx, &m1, &m1),
            LinearizedPoly::monomial(ctx, 2, ctx.one())
        );
        for _ in 0..20 {
            let a = rand_poly(ctx, &mut rng);
            let b = rand_poly(ctx, &mut rng);
            assert_eq!(compose(ctx, &LinearizedPoly::identity(ctx), &b), b);
            let c = compose(ctx, &a, &b);
            for x in ctx.elements() {
                assert_eq!(eval(ctx, &c, &x), eval(ctx, &a, &eval(ctx, &b, &x)));
            }
        }
    }

    #[test]
    fn compose_is_associative() {
        let ctx = f34();
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(5);
        for _ in 0..20 {
            let a = rand_poly(ctx, &mut rng);
            let b = rand_poly(ctx, &mut rng);
            let c = rand_poly(ctx, &mut rng);
            assert_eq!(
                compose(ctx, &compose(ctx, &a, &b), &c),
                compose(ctx, &a, &compose(ctx, &b, &c))
            );
        }
    }

    proptest! {
        #[test]
        fn interpolation_roundtrip(seed in 0u64..200) {
            let ctx = f34();
            let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(seed);
            let l = rand_poly(ctx, &mut rng);
            let g = ctx.generator();
            let points: Vec<Fe> = (0..4).map(|i| ctx.pow(&g, i)).collect();
            let values: Vec<Fe> = points.iter().map(|x| eval(ctx, &l, x)).collect();
            let back = interpolate(ctx, &points, &values).unwrap();
            prop_assert_eq!(back, l);
        }
    }

    #[test]
    fn interpolate_special_data() {
        let ctx = f34();
        let g = ctx.generator();
        let points: Vec<Fe> = (0..4).map(|i| ctx.pow(&g, i)).collect();
        let zeros = vec![ctx.zero(); 4];
        assert_eq!(
            interpolate(ctx, &points, &zeros).unwrap(),
            LinearizedPoly::zero(ctx)
        );
        assert_eq!(
            interpolate(ctx, &points, &points).unwrap(),
            LinearizedPoly::identity(ctx)
        );
        let dependent = vec![ctx.one(), ctx.one(), g.clone(), ctx.add(&g, &ctx.one())];
        assert_eq!(
            interpolate(ctx, &dependent, &zeros),
            Err(Error::DependentPoints)
        );
    }

    #[test]
    fn gow_quinlan_on_simple_cases() {
        let ctx = f34();
        // x has q-degree 0: both norms are Norm(1)
        assert!(gow_quinlan_holds(ctx, &LinearizedPoly::identity(ctx)).unwrap());
        assert_eq!(
            gow_quinlan_holds(ctx, &LinearizedPoly::zero(ctx)),
            Err(Error::ZeroPolynomial)
        );
        // x^{[1]} - x has kernel F_q of size q^1 = maximal for degree 1
        let l = LinearizedPoly::new(ctx, vec![ctx.neg(&ctx.one()), ctx.one()]).unwrap();
        assert!(gow_quinlan_holds(ctx, &l).unwrap());
    }

    #[test]
    fn subspace_polys_have_prescribed_kernels() {
        let ctx = f34();
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(6);
        for _ in 0..60 {
            let dim = rng.gen_range(1..=3);
            let gens: Vec<Fe> = (0..dim)
                .map(|_| {
                    let digits: Vec<u64> = (0..4).map(|_| rng.gen_range(0..3)).collect();
                    ctx.from_digits(&digits).unwrap()
                })
                .collect();
            let l = subspace_poly(ctx, &gens).unwrap();
            let k = l.q_degree().unwrap();
            assert_eq!(k, crate::ffield::subspace::fq_rank(ctx, &gens));
            assert_eq!(kernel_dim(ctx, &l), k);
            for g in &gens {
                assert!(eval(ctx, &l, g).is_zero());
            }
            assert_eq!(*l.coeff(k), ctx.one());
        }
    }

    #[test]
    fn maximal_kernel_implies_norm_condition() {
        // maximal-kernel polynomials are exactly the scaled subspace
        // polynomials, so build them directly
        let ctx = f34();
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(7);
        let mut checked = 0;
        for _ in 0..200 {
            let dim = rng.gen_range(1..=3);
            let gens: Vec<Fe> = (0..dim)
                .map(|_| {
                    let digits: Vec<u64> = (0..4).map(|_| rng.gen_range(0..3)).collect();
                    ctx.from_digits(&digits).unwrap()
                })
                .collect();
            let l = subspace_poly(ctx, &gens).unwrap();
            let k = l.q_degree().unwrap();
            if k == 0 {
                continue;
            }
            let scalars: Vec<u64> = vec![1, 2];
            for c in scalars {
                let scaled = scale(ctx, &l, &ctx.scalar(c));
                assert_eq!(kernel_dim(ctx, &scaled), k);
                assert!(gow_quinlan_holds(ctx, &scaled).unwrap());
                checked += 1;
            }
        }
        assert!(checked > 100);
    }
}
