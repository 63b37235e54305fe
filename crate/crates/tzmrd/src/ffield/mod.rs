//! Exact arithmetic in F_{p^d} with the subfield tower F_q < F_{q^n} < F_{q^{2n}},
//! where q = p^m and d = 2nm.
//!
//! Elements are coordinate vectors over F_p in the power basis of one fixed
//! irreducible modulus, chosen deterministically (least monic irreducible in
//! the lexicographic order of its low-to-high coefficient vector). Subfields
//! are recognized by Frobenius fixed-point tests rather than separate tower
//! types. The q-power Frobenius is precomputed as a d x d matrix over F_p,
//! so every `a^(q^e)` is a single matrix application.

pub mod fplin;
pub mod linalg;
mod prim;
pub mod subspace;
pub mod telemetry;


use crate::error::{Error, Result};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use smallvec::SmallVec;
use std::sync::OnceLock;

type Digits = SmallVec<[u64; 16]>;

/// Field element: little-endian base-p digits in the power basis, always of
/// length d. Equality and ordering are digit-wise, so representations are
/// canonical and the `Ord` order is the element enumeration order used by
/// every deterministic scan in this crate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fe {
    digits: Digits,
}

impl Fe {
    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn is_zero(&self) -> bool {
        self.digits.iter().all(|&x| x == 0)
    }
}

impl std::fmt::Debug for Fe {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Display::fmt(self, f)
    }
}

impl std::fmt::Display for Fe {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, d) in self.digits.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for Fe {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.digits.len()))?;
        for d in &self.digits {
            seq.serialize_element(d)?;
        }
        seq.end()
    }
}

/// Constructed field F_{p^{2nm}} together with the code-level integers n and
/// s that fix the twisted Frobenius bracket [i] = q^{si}.
#[derive(Debug, Clone)]
pub struct FieldCtx {
    p: u64,
    m: usize,
    n: usize,
    s: usize,
    d: usize,
    /// monic modulus, length d+1, little-endian
    modulus: Vec<u64>,
    /// x^{d+i} mod modulus for i in 0..d-1
    reduction: Vec<Vec<u64>>,
    /// row-major d x d matrices over F_p: entry e is the matrix of a -> a^{q^e}
    frob_mats: Vec<Vec<u64>>,
    /// F_p-basis of F_q inside the big field
    fq_basis: Vec<Fe>,
    /// p^d
    order: u128,
    /// p^m
    q: u128,
    /// cached quadratic non-residue for square roots
    nonresidue: OnceLock<Fe>,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        (self.p, self.m, self.n, self.s) == (other.p, other.m, other.n, other.s)
            && self.modulus == other.modulus
    }
}
impl Eq for FieldCtx {}

impl Serialize for FieldCtx {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("FieldCtx", 5)?;
        st.serialize_field("p", &self.p)?;
        st.serialize_field("m", &self.m)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("s", &self.s)?;
        st.serialize_field("modulus", &self.modulus)?;
        st.end()
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl FieldCtx {
    /// Build the field context for F_{p^{2nm}}. The modulus is the least
    /// monic irreducible of degree 2nm over F_p, so two runs with the same
    /// parameters agree on every element representation.
    pub fn new(p: u64, m: usize, n: usize, s: usize) -> Result<FieldCtx> {
        if p % 2 == 0 {
            return Err(Error::EvenCharacteristic);
        }
        if !prim::is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 || n == 0 {
            return Err(Error::MalformedInput("m and n must be positive".into()));
        }
        let two_n = 2 * n;
        if gcd(s, two_n) != 1 {
            return Err(Error::GcdViolation { s, two_n });
        }
        let d = two_n * m;
        if p >= (1 << 31) {
            return Err(Error::FieldTooLarge { p, d });
        }
        let order = (p as u128)
            .checked_pow(d as u32)
            .ok_or(Error::FieldTooLarge { p, d })?;
        let q = (p as u128).pow(m as u32);

        let modulus = prim::least_irreducible(d, p);

        // reduction rows: x^{d+i} mod f
        let mut reduction: Vec<Vec<u64>> = Vec::with_capacity(d.saturating_sub(1));
        let mut cur: Vec<u64> = (0..d).map(|j| (p - modulus[j]) % p).collect();
        reduction.push(cur.clone());
        for _ in 1..d.saturating_sub(1) {
            let carry = cur[d - 1];
            let mut next = vec![0u64; d];
            for j in (1..d).rev() {
                next[j] = cur[j - 1];
            }
            if carry != 0 {
                for j in 0..d {
                    next[j] = ((next[j] as u128 + carry as u128 * reduction[0][j] as u128)
                        % p as u128) as u64;
                }
            }
            reduction.push(next.clone());
            cur = next;
        }

        let mut ctx = FieldCtx {
            p,
            m,
            n,
            s,
            d,
            modulus,
            reduction,
            frob_mats: Vec::new(),
            fq_basis: Vec::new(),
            order,
            q,
            nonresidue: OnceLock::new(),
        };

        // q-power Frobenius matrix and its powers, via raw (uncounted) pow
        let mut qmat = vec![0u64; d * d];
        for j in 0..d {
            let mut basis = vec![0u64; d];
            basis[j] = 1;
            let img = ctx.raw_pow(&basis, q);
            for i in 0..d {
                qmat[i * d + j] = img[i];
            }
        }
        let mut frob_mats = Vec::with_capacity(two_n);
        let mut ident = vec![0u64; d * d];
        for i in 0..d {
            ident[i * d + i] = 1;
        }
        frob_mats.push(ident);
        for e in 1..two_n {
            frob_mats.push(mat_mul_fp(&qmat, &frob_mats[e - 1], d, p));
        }
        ctx.frob_mats = frob_mats;

        // F_p-basis of F_q = fixed field of the q-Frobenius
        ctx.fq_basis = ctx.fixed_field_basis(1);
        Ok(ctx)
    }

    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn m(&self) -> usize {
        self.m
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn s(&self) -> usize {
        self.s
    }
    /// degree of the full field over F_p
    pub fn degree(&self) -> usize {
        self.d
    }
    pub fn two_n(&self) -> usize {
        2 * self.n
    }
    /// q = p^m
    pub fn q(&self) -> u128 {
        self.q
    }
    /// p^d, the field size
    pub fn order(&self) -> u128 {
        self.order
    }
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }
    /// F_p-basis of F_q (m elements)
    pub fn fq_basis(&self) -> &[Fe] {
        &self.fq_basis
    }

    pub fn zero(&self) -> Fe {
        Fe {
            digits: smallvec::smallvec![0; self.d],
        }
    }

    pub fn one(&self) -> Fe {
        self.scalar(1)
    }

    /// Embed an integer scalar (mod p) as a constant.
    pub fn scalar(&self, c: u64) -> Fe {
        let mut digits: Digits = smallvec::smallvec![0; self.d];
        digits[0] = c % self.p;
        Fe { digits }
    }

    /// The class of x, i.e. the power-basis root of the modulus.
    pub fn generator(&self) -> Fe {
        let mut digits: Digits = smallvec::smallvec![0; self.d];
        digits[1] = 1;
        Fe { digits }
    }

    /// Validate and pad a digit vector (little-endian base p).
    pub fn from_digits(&self, digits: &[u64]) -> Result<Fe> {
        if digits.len() > self.d {
            return Err(Error::MalformedInput(format!(
                "element has {} digits, field degree is {}",
                digits.len(),
                self.d
            )));
        }
        if digits.iter().any(|&x| x >= self.p) {
            return Err(Error::MalformedInput(format!(
                "digit out of range for p = {}",
                self.p
            )));
        }
        let mut v: Digits = SmallVec::from_slice(digits);
        v.resize(self.d, 0);
        Ok(Fe { digits: v })
    }

    pub fn add(&self, a: &Fe, b: &Fe) -> Fe {
        let p = self.p;
        let digits = a
            .digits
            .iter()
            .zip(&b.digits)
            .map(|(&x, &y)| {
                let t = x + y;
                if t >= p {
                    t - p
                } else {
                    t
                }
            })
            .collect();
        Fe { digits }
    }

    pub fn sub(&self, a: &Fe, b: &Fe) -> Fe {
        let p = self.p;
        let digits = a
            .digits
            .iter()
            .zip(&b.digits)
            .map(|(&x, &y)| if x >= y { x - y } else { x + p - y })
            .collect();
        Fe { digits }
    }

    pub fn neg(&self, a: &Fe) -> Fe {
        let p = self.p;
        let digits = a
            .digits
            .iter()
            .map(|&x| if x == 0 { 0 } else { p - x })
            .collect();
        Fe { digits }
    }

    pub fn mul(&self, a: &Fe, b: &Fe) -> Fe {
        telemetry::count_mul();
        Fe {
            digits: SmallVec::from_vec(self.raw_mul(&a.digits, &b.digits)),
        }
    }

    pub fn square(&self, a: &Fe) -> Fe {
        self.mul(a, a)
    }

    /// Multiplicative inverse by extended Euclid on the underlying
    /// polynomials; one tallied inversion.
    pub fn inv(&self, a: &Fe) -> Result<Fe> {
        let inv = prim::poly_inverse(&a.digits, &self.modulus, self.p)
            .ok_or(Error::DivisionByZero)?;
        telemetry::count_inv();
        let mut digits: Digits = SmallVec::from_vec(inv);
        digits.resize(self.d, 0);
        Ok(Fe { digits })
    }

    pub fn div(&self, a: &Fe, b: &Fe) -> Result<Fe> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// a^e for a machine-word exponent, square-and-multiply.
    pub fn pow(&self, a: &Fe, e: u128) -> Fe {
        if e == 0 {
            return self.one();
        }
        let mut base = a.clone();
        let mut acc: Option<Fe> = None;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(x) => self.mul(&x, &base),
                });
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc.unwrap()
    }

    /// a^{q^e}; one tallied Frobenius application (one matrix-vector product
    /// over F_p). The exponent is reduced mod 2n, and e = 0 is free.
    pub fn frob_q(&self, a: &Fe, e: usize) -> Fe {
        let e = e % self.two_n();
        if e == 0 {
            return a.clone();
        }
        telemetry::count_frob();
        let mat = &self.frob_mats[e];
        Fe {
            digits: SmallVec::from_vec(mat_vec_fp(mat, &a.digits, self.d, self.p)),
        }
    }

    /// The twisted bracket power a^{[i]} = a^{q^{si}}.
    pub fn bracket(&self, a: &Fe, i: usize) -> Fe {
        self.frob_q(a, (self.s * (i % self.two_n())) % self.two_n())
    }

    /// Norm from F_{q^{2n}} onto F_{q^{sub_deg}}:
    /// a^{(q^{2n}-1)/(q^{sub_deg}-1)}.
    pub fn norm_to(&self, a: &Fe, sub_deg: usize) -> Result<Fe> {
        self.check_subfield(sub_deg)?;
        let qs = self.q.pow(sub_deg as u32);
        let e = (self.order - 1) / (qs - 1);
        Ok(self.pow(a, e))
    }

    /// Membership test for F_{q^{sub_deg}}: a^{q^{sub_deg}} = a.
    pub fn in_subfield(&self, a: &Fe, sub_deg: usize) -> Result<bool> {
        self.check_subfield(sub_deg)?;
        Ok(self.frob_q(a, sub_deg % self.two_n()) == *a)
    }

    fn check_subfield(&self, sub_deg: usize) -> Result<()> {
        if sub_deg == 0 || self.two_n() % sub_deg != 0 {
            Err(Error::InvalidSubfield(sub_deg, self.two_n()))
        } else {
            Ok(())
        }
    }

    /// Euler criterion in the big field. Zero counts as a square.
    pub fn is_square(&self, a: &Fe) -> bool {
        if a.is_zero() {
            return true;
        }
        self.pow(a, (self.order - 1) / 2) == self.one()
    }

    /// Euler criterion inside F_{q^{sub_deg}}; the argument must lie there.
    pub fn is_square_in_subfield(&self, a: &Fe, sub_deg: usize) -> Result<bool> {
        if !self.in_subfield(a, sub_deg)? {
            return Err(Error::SubfieldViolation);
        }
        if a.is_zero() {
            return Ok(true);
        }
        let qs = self.q.pow(sub_deg as u32);
        Ok(self.pow(a, (qs - 1) / 2) == self.one())
    }

    /// Tonelli-Shanks square root. Returns the root whose digit vector is
    /// lexicographically smaller (of the pair y, -y), or None for
    /// non-residues.
    pub fn sqrt(&self, a: &Fe) -> Option<Fe> {
        if a.is_zero() {
            return Some(self.zero());
        }
        if !self.is_square(a) {
            return None;
        }
        let mut t = self.order - 1;
        let mut e = 0u32;
        while t % 2 == 0 {
            t /= 2;
            e += 1;
        }
        let y = if e == 1 {
            // order = 3 mod 4
            self.pow(a, (self.order + 1) / 4)
        } else {
            let z = self.nonresidue().clone();
            let mut c = self.pow(&z, t);
            let mut x = self.pow(a, (t + 1) / 2);
            let mut b = self.pow(a, t);
            let mut mexp = e;
            loop {
                if b == self.one() {
                    break x;
                }
                let mut i = 0u32;
                let mut probe = b.clone();
                while probe != self.one() {
                    probe = self.square(&probe);
                    i += 1;
                }
                let g = self.pow(&c, 1u128 << (mexp - i - 1));
                x = self.mul(&x, &g);
                c = self.square(&g);
                b = self.mul(&b, &c);
                mexp = i;
            }
        };
        let neg = self.neg(&y);
        debug_assert_eq!(self.square(&y), *a);
        Some(if y <= neg { y } else { neg })
    }

    fn nonresidue(&self) -> &Fe {
        self.nonresidue.get_or_init(|| {
            self.elements()
                .find(|x| !x.is_zero() && !self.is_square(x))
                .expect("odd-order field has non-residues")
        })
    }

    /// All field elements in canonical (digit-lexicographic) order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> + '_ {
        ElemIter {
            ctx: self,
            next: Some(self.zero()),
        }
    }

    /// F_p-basis of the subfield F_{q^{sub_deg}} (the fixed field of the
    /// sub_deg-th q-Frobenius power), sorted canonically.
    pub fn subfield_basis(&self, sub_deg: usize) -> Result<Vec<Fe>> {
        self.check_subfield(sub_deg)?;
        Ok(self.fixed_field_basis(sub_deg))
    }

    fn fixed_field_basis(&self, sub_deg: usize) -> Vec<Fe> {
        let d = self.d;
        let p = self.p;
        let e = sub_deg % self.two_n();
        let mat = &self.frob_mats[e];
        // rows of (Q^e - I)
        let mut rows: Vec<Vec<u64>> = Vec::with_capacity(d);
        for i in 0..d {
            let mut row: Vec<u64> = mat[i * d..(i + 1) * d].to_vec();
            row[i] = (row[i] + p - 1) % p;
            rows.push(row);
        }
        let mut basis: Vec<Fe> = fplin::nullspace(&rows, d, p)
            .into_iter()
            .map(|v| Fe {
                digits: SmallVec::from_vec(v),
            })
            .collect();
        basis.sort();
        debug_assert_eq!(basis.len(), self.m * sub_deg.min(self.two_n()));
        basis
    }

    /// Every element of F_{q^{sub_deg}}, canonically sorted. Guarded against
    /// oversized enumerations.
    pub fn subfield_elements(&self, sub_deg: usize) -> Result<Vec<Fe>> {
        let basis = self.subfield_basis(sub_deg)?;
        let count = (self.p as u128).checked_pow(basis.len() as u32);
        match count {
            Some(c) if c <= 1_000_000 => {}
            _ => {
                return Err(Error::TooLarge(format!(
                    "subfield of degree {sub_deg} has more than 10^6 elements"
                )))
            }
        }
        let mut out = vec![self.zero()];
        for b in &basis {
            let mut next = Vec::with_capacity(out.len() * self.p as usize);
            let mut scaled = self.zero();
            for _ in 0..self.p {
                for x in &out {
                    next.push(self.add(x, &scaled));
                }
                scaled = self.add(&scaled, b);
            }
            out = next;
        }
        out.sort();
        Ok(out)
    }

    /// Uncounted digit-level multiply with modulus reduction.
    fn raw_mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let d = self.d;
        let p = self.p as u128;
        let mut acc = vec![0u128; 2 * d - 1];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                acc[i + j] += ai as u128 * bj as u128;
            }
        }
        let mut out: Vec<u64> = acc[..d].iter().map(|&v| (v % p) as u64).collect();
        for i in 0..d - 1 {
            let hi = (acc[d + i] % p) as u64;
            if hi != 0 {
                let row = &self.reduction[i];
                for j in 0..d {
                    out[j] = ((out[j] as u128 + hi as u128 * row[j] as u128) % p) as u64;
                }
            }
        }
        out
    }

    fn raw_pow(&self, a: &[u64], mut e: u128) -> Vec<u64> {
        let mut base = a.to_vec();
        let mut acc = vec![0u64; self.d];
        acc[0] = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.raw_mul(&acc, &base);
            }
            base = self.raw_mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

struct ElemIter<'a> {
    ctx: &'a FieldCtx,
    next: Option<Fe>,
}

impl Iterator for ElemIter<'_> {
    type Item = Fe;

    fn next(&mut self) -> Option<Fe> {
        let cur = self.next.take()?;
        // odometer: last digit fastest, which ascends in digit-lex order
        let mut succ = cur.clone();
        let mut i = succ.digits.len();
        loop {
            if i == 0 {
                self.next = None;
                break;
            }
            i -= 1;
            succ.digits[i] += 1;
            if succ.digits[i] < self.ctx.p {
                self.next = Some(succ);
                break;
            }
            succ.digits[i] = 0;
        }
        Some(cur)
    }
}

fn mat_mul_fp(a: &[u64], b: &[u64], d: usize, p: u64) -> Vec<u64> {
    let mut out = vec![0u64; d * d];
    for i in 0..d {
        for k in 0..d {
            let aik = a[i * d + k];
            if aik == 0 {
                continue;
            }
            for j in 0..d {
                out[i * d + j] =
                    ((out[i * d + j] as u128 + aik as u128 * b[k * d + j] as u128) % p as u128)
                        as u64;
            }
        }
    }
    out
}

fn mat_vec_fp(a: &[u64], v: &[u64], d: usize, p: u64) -> Vec<u64> {
    let mut out = vec![0u64; d];
    for i in 0..d {
        let mut acc = 0u128;
        for j in 0..d {
            acc += a[i * d + j] as u128 * v[j] as u128;
        }
        out[i] = (acc % p as u128) as u64;
    }
    out
}
