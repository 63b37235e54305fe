//! F_q-linear span bookkeeping for field elements.
//!
//! The F_q-span of elements of F_{q^{2n}} is tracked through their F_p digit
//! vectors: an element v contributes the rows w*v for every w in the fixed
//! F_p-basis of F_q, so F_q-dimensions are F_p-dimensions divided by m.

use super::fplin::EchelonSpan;
use super::{Fe, FieldCtx};

pub struct FqSpan<'a> {
    ctx: &'a FieldCtx,
    span: EchelonSpan,
}

impl<'a> FqSpan<'a> {
    pub fn new(ctx: &'a FieldCtx) -> Self {
        FqSpan {
            ctx,
            span: EchelonSpan::new(ctx.p()),
        }
    }

    /// Add an element; true when it was F_q-independent of the span so far.
    pub fn push(&mut self, v: &Fe) -> bool {
        let mut grew = false;
        if self.ctx.m() == 1 {
            grew |= self.span.insert(v.digits().to_vec());
        } else {
            for w in self.ctx.fq_basis() {
                let wv = self.ctx.mul(w, v);
                grew |= self.span.insert(wv.digits().to_vec());
            }
        }
        debug_assert_eq!(self.span.dim() % self.ctx.m(), 0);
        grew
    }

    pub fn contains(&self, v: &Fe) -> bool {
        self.span.contains(v.digits())
    }

    /// F_q-dimension of the span.
    pub fn dim(&self) -> usize {
        self.span.dim() / self.ctx.m()
    }
}

/// F_q-dimension of the span of `elems`.
pub fn fq_rank(ctx: &FieldCtx, elems: &[Fe]) -> usize {
    let mut span = FqSpan::new(ctx);
    for v in elems {
        span.push(v);
    }
    span.dim()
}

/// Greedy F_q-independent subset of `elems`, in input order.
pub fn fq_independent_subset(ctx: &FieldCtx, elems: &[Fe]) -> Vec<Fe> {
    let mut span = FqSpan::new(ctx);
    let mut out = Vec::new();
    for v in elems {
        if !v.is_zero() && span.push(v) {
            out.push(v.clone());
        }
    }
    out
}
