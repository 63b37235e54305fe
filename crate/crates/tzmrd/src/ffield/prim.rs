//! Prime-field bootstrap helpers: u64 primality and dense F_p[x] arithmetic,
//! used only while constructing a [`super::FieldCtx`] (modulus search and
//! irreducibility testing). Everything here is independent of `Fe`.

/// Deterministic Miller-Rabin for u64 (the witness set below is exact for
/// all 64-bit integers).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == small {
            return true;
        }
        if n % small == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u64(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Dense polynomial over F_p, little-endian coefficients, no trailing zeros.
pub type FpPoly = Vec<u64>;

pub fn trim(mut a: FpPoly) -> FpPoly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn poly_mul(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut acc = vec![0u128; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            acc[i + j] += ai as u128 * bj as u128;
        }
    }
    trim(acc.into_iter().map(|v| (v % p as u128) as u64).collect())
}

/// Remainder of `a` modulo the monic polynomial `f`.
pub fn poly_rem(a: &[u64], f: &[u64], p: u64) -> FpPoly {
    debug_assert_eq!(*f.last().unwrap(), 1, "modulus must be monic");
    let d = f.len() - 1;
    let mut r: Vec<u64> = a.to_vec();
    while r.len() > d {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - d;
        if lead != 0 {
            for i in 0..d {
                let sub = (lead as u128 * f[i] as u128) % p as u128;
                let idx = shift + i;
                r[idx] = ((r[idx] as u128 + p as u128 * p as u128 - sub) % p as u128) as u64;
            }
        }
        r.pop();
    }
    trim(r)
}

pub fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem_by_nonmonic(&a, &b, p);
        a = b;
        b = r;
    }
    // normalize to monic
    if let Some(&lead) = a.last() {
        let inv = pow_mod_u64(lead, p - 2, p);
        for c in a.iter_mut() {
            *c = mul_mod_u64(*c, inv, p);
        }
    }
    a
}

fn rem_by_nonmonic(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = pow_mod_u64(*b.last().unwrap(), p - 2, p);
    while r.len() > db {
        let coef = mul_mod_u64(*r.last().unwrap(), lead_inv, p);
        let shift = r.len() - 1 - db;
        if coef != 0 {
            for i in 0..db {
                let sub = mul_mod_u64(coef, b[i], p);
                let idx = shift + i;
                r[idx] = ((r[idx] + p) - sub) % p;
            }
        }
        r.pop();
        r = trim(r);
        if r.len() <= db {
            break;
        }
    }
    trim(r)
}

/// Quotient and remainder of `a` by nonzero `b`.
pub fn poly_divrem(a: &[u64], b: &[u64], p: u64) -> (FpPoly, FpPoly) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = pow_mod_u64(*b.last().unwrap(), p - 2, p);
    let mut q = vec![0u64; r.len() - db];
    while r.len() > db {
        let coef = mul_mod_u64(*r.last().unwrap(), lead_inv, p);
        let shift = r.len() - 1 - db;
        q[shift] = coef;
        if coef != 0 {
            for i in 0..=db {
                let sub = mul_mod_u64(coef, b[i], p);
                let idx = shift + i;
                r[idx] = ((r[idx] + p) - sub) % p;
            }
        }
        r = trim(r);
        if r.len() <= db {
            break;
        }
    }
    (trim(q), r)
}

/// Inverse of `a` modulo the monic irreducible `f`, by extended Euclid.
/// Returns None for a = 0 mod f.
pub fn poly_inverse(a: &[u64], f: &[u64], p: u64) -> Option<FpPoly> {
    let mut r0 = f.to_vec();
    let mut r1 = poly_rem(a, f, p);
    if r1.is_empty() {
        return None;
    }
    let mut t0: FpPoly = Vec::new();
    let mut t1: FpPoly = vec![1];
    while !r1.is_empty() {
        let (q, r2) = poly_divrem(&r0, &r1, p);
        let qt1 = poly_mul(&q, &t1, p);
        let mut t2 = t0.clone();
        t2.resize(t2.len().max(qt1.len()), 0);
        for (i, &c) in qt1.iter().enumerate() {
            t2[i] = ((t2[i] + p) - c) % p;
        }
        t0 = t1;
        t1 = trim(t2);
        r0 = r1;
        r1 = r2;
    }
    // r0 is the gcd; f irreducible and a nonzero => gcd is a nonzero constant
    let c = r0[0];
    debug_assert_eq!(r0.len(), 1);
    let cinv = pow_mod_u64(c, p - 2, p);
    Some(trim(t0.iter().map(|&x| mul_mod_u64(x, cinv, p)).collect()))
}

/// `g^p mod f` by square-and-multiply on the exponent p.
fn poly_pow_p(g: &[u64], f: &[u64], p: u64) -> FpPoly {
    let mut acc: FpPoly = vec![1];
    let mut base = poly_rem(g, f, p);
    let mut e = p;
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_rem(&poly_mul(&acc, &base, p), f, p);
        }
        base = poly_rem(&poly_mul(&base, &base, p), f, p);
        e >>= 1;
    }
    acc
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut c = 2;
    while c * c <= n {
        if n % c == 0 {
            out.push(c);
            while n % c == 0 {
                n /= c;
            }
        }
        c += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's irreducibility test for a monic `f` of degree d over F_p:
/// x^{p^d} = x mod f, and gcd(x^{p^{d/r}} - x, f) = 1 for every prime r | d.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let d = f.len() - 1;
    if d == 0 {
        return false;
    }
    if f[0] == 0 {
        return d == 1; // divisible by x
    }
    let x: FpPoly = vec![0, 1];
    // frob[j] = x^{p^j} mod f, computed iteratively
    let mut t = x.clone();
    let divisors = prime_divisors(d);
    let checkpoints: Vec<usize> = divisors.iter().map(|r| d / r).collect();
    for j in 1..=d {
        t = poly_pow_p(&t, f, p);
        if checkpoints.contains(&j) {
            // gcd(t - x, f) must be trivial
            let mut diff = t.clone();
            if diff.len() < 2 {
                diff.resize(2, 0);
            }
            diff[1] = (diff[1] + p - 1) % p;
            let g = poly_gcd(&trim(diff), f, p);
            if g.len() != 1 {
                return false;
            }
        }
    }
    t == x
}

/// The least monic irreducible of degree d over F_p, where candidates are
/// ordered lexicographically by their low-to-high coefficient vector
/// (c_0, c_1, ..., c_{d-1}).
pub fn least_irreducible(d: usize, p: u64) -> FpPoly {
    let mut coeffs = vec![0u64; d];
    loop {
        // c_0 = 0 makes f divisible by x; the odometer below skips nothing
        // else, so simply test each candidate.
        let mut f = coeffs.clone();
        f.push(1);
        if coeffs[0] != 0 && is_irreducible(&f, p) {
            return f;
        }
        // advance the odometer: last coefficient fastest, so the order is
        // lexicographic in (c_0, ..., c_{d-1})
        let mut i = d;
        loop {
            if i == 0 {
                unreachable!("no irreducible polynomial of degree {d} over F_{p}");
            }
            i -= 1;
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(3));
        assert!(is_prime_u64(2147483647));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(9));
        assert!(!is_prime_u64(561)); // Carmichael
    }

    #[test]
    fn irreducibility_deg2_over_f3() {
        // x^2 + 1 is irreducible over F_3, x^2 + 2 = (x-1)(x+1) is not.
        assert!(is_irreducible(&[1, 0, 1], 3));
        assert!(!is_irreducible(&[2, 0, 1], 3));
        assert!(!is_irreducible(&[0, 0, 1], 3));
    }

    #[test]
    fn least_irreducible_is_irreducible_and_minimal() {
        for (d, p) in [(2usize, 3u64), (4, 3), (6, 3), (2, 5), (4, 5)] {
            let f = least_irreducible(d, p);
            assert_eq!(f.len(), d + 1);
            assert!(is_irreducible(&f, p));
        }
        // hand check: the first monic deg-2 candidates over F_3 in
        // (c_0, c_1) order are x^2, x^2+x, x^2+2x, x^2+1 -> irreducible
        assert_eq!(least_irreducible(2, 3), vec![1, 0, 1]);
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        // (x+1) and (x+2) over F_3
        let g = poly_gcd(&[1, 1], &[2, 1], 3);
        assert_eq!(g, vec![1]);
    }
}
