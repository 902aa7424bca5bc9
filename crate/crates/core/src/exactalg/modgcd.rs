//! Modular gcd of integer polynomials in one variable and in two variables
//! (dense, small primes, evaluation/interpolation, CRT and trial division).

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Dense univariate polynomial over Z, index = degree, no trailing zeros.
pub(crate) type ZPoly = Vec<BigInt>;
/// Dense bivariate polynomial over Z indexed `[t][q]`.
pub(crate) type ZPoly2 = Vec<ZPoly>;

const MAX_PRIMES: usize = 200;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The `MAX_PRIMES` largest primes below `2^31`, computed once.
fn primes() -> impl Iterator<Item = u64> {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES
        .get_or_init(|| {
            (1u64 << 20..(1u64 << 31))
                .rev()
                .filter(|&n| n % 2 == 1 && is_prime(n))
                .take(MAX_PRIMES)
                .collect()
        })
        .iter()
        .copied()
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn trim_z(v: &mut ZPoly) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn reduce(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits")
}

fn reduce_poly(a: &[BigInt], p: u64) -> Vec<u64> {
    let mut v: Vec<u64> = a.iter().map(|x| reduce(x, p)).collect();
    trim(&mut v);
    v
}

fn monic_mod(a: &mut [u64], p: u64) {
    if let Some(&lc) = a.last() {
        let inv = inv_mod(lc, p);
        for x in a.iter_mut() {
            *x = *x * inv % p;
        }
    }
}

fn rem_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = inv_mod(b[db], p);
    while r.len() > db {
        let dr = r.len() - 1;
        let f = r[dr] * inv % p;
        if f != 0 {
            for (i, &bi) in b.iter().enumerate() {
                let k = dr - db + i;
                r[k] = (r[k] + p - f * bi % p) % p;
            }
        }
        r.pop();
        trim(&mut r);
    }
    r
}

/// Monic gcd over Z_p.
fn gcd_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    while !b.is_empty() {
        let r = rem_mod(&a, &b, p);
        a = b;
        b = r;
    }
    monic_mod(&mut a, p);
    a
}

fn eval_mod(a: &[u64], x: u64, p: u64) -> u64 {
    a.iter().rev().fold(0, |acc, &c| (acc * x + c) % p)
}

/// Coefficients of the interpolating polynomial through `(xs[i], ys[i])`.
fn interpolate_mod(xs: &[u64], ys: &[u64], p: u64) -> Vec<u64> {
    let n = xs.len();
    // Newton divided differences
    let mut c = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = (c[i] + p - c[i - 1]) % p;
            let den = (xs[i] + p - xs[i - j]) % p;
            c[i] = num * inv_mod(den, p) % p;
        }
    }
    let mut out = vec![0u64; n];
    for i in (0..n).rev() {
        // out = out * (x - xs[i]) + c[i]
        let mut next = vec![0u64; n];
        for k in 0..n {
            if out[k] == 0 {
                continue;
            }
            if k + 1 < n {
                next[k + 1] = (next[k + 1] + out[k]) % p;
            }
            next[k] = (next[k] + p - out[k] * xs[i] % p) % p;
        }
        next[0] = (next[0] + c[i]) % p;
        out = next;
    }
    trim(&mut out);
    out
}

/// Fold a new residue image into `acc` (symmetric representatives modulo
/// `modulus`). Returns whether any value changed.
fn crt_step(acc: &mut [BigInt], modulus: &BigInt, image: &[u64], p: u64) -> bool {
    let m_mod_p = reduce(modulus, p);
    let inv = inv_mod(m_mod_p, p);
    let new_mod = modulus * BigInt::from(p);
    let half = &new_mod >> 1;
    let mut changed = false;
    for (x, &r) in acc.iter_mut().zip(image) {
        let cur = reduce(x, p);
        let k = (r + p - cur) % p * inv % p;
        if k != 0 {
            let mut y = &*x + modulus * BigInt::from(k);
            if y > half {
                y -= &new_mod;
            }
            changed |= y != *x;
            *x = y;
        }
    }
    changed
}

fn content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Divide out the integer content and make the leading coefficient positive.
fn primitive_z(a: &[BigInt]) -> ZPoly {
    let c = content(a);
    let sign = a.last().is_some_and(|x| x.is_negative());
    a.iter()
        .map(|x| {
            let y = x / &c;
            if sign {
                -y
            } else {
                y
            }
        })
        .collect()
}

/// Exact division over Z, `None` if `b` does not divide `a`.
pub(crate) fn div_z(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lc = &b[db];
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let (f, rem) = r[dr].div_rem(lc);
        if !rem.is_zero() {
            return None;
        }
        for i in 0..=db {
            r[dr - db + i] -= &f * &b[i];
        }
        q[dr - db] = f;
        trim_z(&mut r);
    }
    if r.is_empty() {
        trim_z(&mut q);
        Some(q)
    } else {
        None
    }
}

/// Primitive gcd of nonzero integer polynomials, positive leading
/// coefficient.
pub(crate) fn gcd_z(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() {
        return primitive_z(b);
    }
    if b.is_empty() {
        return primitive_z(a);
    }
    if a.len() == 1 || b.len() == 1 {
        return vec![BigInt::one()];
    }
    let a = primitive_z(a);
    let b = primitive_z(b);
    let gamma = a.last().unwrap().gcd(b.last().unwrap());
    let mut acc: Option<(ZPoly, BigInt)> = None;
    for p in primes().take(MAX_PRIMES) {
        let ap = reduce_poly(&a, p);
        let bp = reduce_poly(&b, p);
        if ap.len() != a.len() || bp.len() != b.len() {
            continue;
        }
        let mut g = gcd_mod(&ap, &bp, p);
        if g.len() == 1 {
            return vec![BigInt::one()];
        }
        let gm = reduce(&gamma, p);
        for x in g.iter_mut() {
            *x = *x * gm % p;
        }
        let stable = match &mut acc {
            Some((h, m)) if h.len() == g.len() => {
                let changed = crt_step(h, m, &g, p);
                *m *= BigInt::from(p);
                !changed
            }
            Some((h, _)) if h.len() < g.len() => continue,
            _ => {
                let h: ZPoly = g.iter().map(|&x| symmetric(x, p)).collect();
                acc = Some((h, BigInt::from(p)));
                false
            }
        };
        if stable {
            let cand = primitive_z(&acc.as_ref().unwrap().0);
            if div_z(&a, &cand).is_some() && div_z(&b, &cand).is_some() {
                return cand;
            }
        }
    }
    panic!("modular gcd did not converge");
}

fn symmetric(x: u64, p: u64) -> BigInt {
    if x > p / 2 {
        BigInt::from(x) - BigInt::from(p)
    } else {
        BigInt::from(x)
    }
}

fn trim2(a: &mut ZPoly2) {
    for u in a.iter_mut() {
        trim_z(u);
    }
    while a.last().is_some_and(Vec::is_empty) {
        a.pop();
    }
}

fn deg_q2(a: &ZPoly2) -> usize {
    a.iter().map(|u| u.len().saturating_sub(1)).max().unwrap_or(0)
}

/// Primitive gcd of the coefficients in `t`, shortest first so that a
/// trivial content is found early.
fn content_q(a: &ZPoly2) -> ZPoly {
    let mut coeffs: Vec<&ZPoly> = a.iter().filter(|u| !u.is_empty()).collect();
    coeffs.sort_by_key(|u| u.len());
    let mut g: ZPoly = Vec::new();
    for u in coeffs {
        g = gcd_z(&g, u);
        if g.len() == 1 {
            break;
        }
    }
    g
}

/// Gcd of nonzero polynomials in Z[q][t], primitive over Z, with positive
/// leading coefficient in the `[t][q]` order.
pub(crate) fn gcd_z2(a: &ZPoly2, b: &ZPoly2) -> ZPoly2 {
    let ca = content_q(a);
    let cb = content_q(b);
    let c = gcd_z(&ca, &cb);
    let strip = |x: &ZPoly2, cx: &ZPoly| -> ZPoly2 {
        x.iter()
            .map(|u| div_z(u, cx).expect("content divides"))
            .collect()
    };
    let (a, b) = (strip(a, &ca), strip(b, &cb));
    if a.len() == 1 || b.len() == 1 {
        return vec![c];
    }
    let lca = a.last().unwrap();
    let lcb = b.last().unwrap();
    // the leading coefficient of the gcd divides gamma, integer content included
    let gamma: ZPoly = gcd_z(lca, lcb)
        .into_iter()
        .map(|x| x * content(lca).gcd(&content(lcb)))
        .collect();
    let bound = gamma.len() - 1 + deg_q2(&a).min(deg_q2(&b));
    let mut acc: Option<(ZPoly2, BigInt, usize)> = None;
    for p in primes().take(MAX_PRIMES) {
        let ap: Vec<Vec<u64>> = a.iter().map(|u| reduce_poly(u, p)).collect();
        let bp: Vec<Vec<u64>> = b.iter().map(|u| reduce_poly(u, p)).collect();
        let gp = reduce_poly(&gamma, p);
        if ap.last().unwrap().is_empty() || bp.last().unwrap().is_empty() {
            continue;
        }
        let Some(image) = image_mod(&ap, &bp, &gp, bound, p) else {
            continue;
        };
        if image.len() == 1 {
            return vec![c];
        }
        let d = image.len() - 1;
        let flat: Vec<u64> = image
            .iter()
            .flat_map(|u| (0..=bound).map(move |k| u.get(k).copied().unwrap_or(0)))
            .collect();
        let stable = match &mut acc {
            Some((h, m, dh)) if *dh == d => {
                let mut flat_h: Vec<BigInt> = h
                    .iter()
                    .flat_map(|u| (0..=bound).map(move |k| u.get(k).cloned().unwrap_or_default()))
                    .collect();
                let changed = crt_step(&mut flat_h, m, &flat, p);
                *m *= BigInt::from(p);
                *h = flat_h.chunks(bound + 1).map(|c| c.to_vec()).collect();
                !changed
            }
            Some((_, _, dh)) if *dh < d => continue,
            _ => {
                let h = flat
                    .chunks(bound + 1)
                    .map(|c| c.iter().map(|&x| symmetric(x, p)).collect())
                    .collect();
                acc = Some((h, BigInt::from(p), d));
                false
            }
        };
        if stable {
            let mut h = acc.as_ref().unwrap().0.clone();
            trim2(&mut h);
            let ch = content_q(&h);
            let mut cand: ZPoly2 = h
                .iter()
                .map(|u| div_z(u, &ch).expect("content divides"))
                .collect();
            let k = cand.iter().fold(BigInt::zero(), |g, u| g.gcd(&content(u)));
            for u in cand.iter_mut() {
                for x in u.iter_mut() {
                    *x /= &k;
                }
            }
            if div_z2(&a, &cand).is_some() && div_z2(&b, &cand).is_some() {
                return mul_z2(&cand, &c);
            }
        }
    }
    panic!("modular gcd did not converge");
}

/// Image of `gamma * gcd(a, b) / lc` modulo `p`, indexed `[t][q]`, or `None`
/// when the prime runs out of good evaluation points.
fn image_mod(a: &[Vec<u64>], b: &[Vec<u64>], gamma: &[u64], bound: usize, p: u64) -> Option<Vec<Vec<u64>>> {
    let lca = a.last().unwrap();
    let lcb = b.last().unwrap();
    let mut xs = Vec::new();
    let mut vals: Vec<Vec<u64>> = Vec::new();
    let mut deg = usize::MAX;
    let mut state = p ^ 0x9e37_79b9_7f4a_7c15;
    let mut tries = 0;
    while xs.len() < bound + 1 {
        tries += 1;
        if tries > 4 * (bound + 16) {
            return None;
        }
        // xorshift; fixed points such as 1 are often unlucky
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        let alpha = state % p;
        if xs.contains(&alpha) {
            continue;
        }
        if eval_mod(lca, alpha, p) == 0 || eval_mod(lcb, alpha, p) == 0 {
            continue;
        }
        let gv = eval_mod(gamma, alpha, p);
        if gv == 0 {
            continue;
        }
        let mut av: Vec<u64> = a.iter().map(|u| eval_mod(u, alpha, p)).collect();
        let mut bv: Vec<u64> = b.iter().map(|u| eval_mod(u, alpha, p)).collect();
        trim(&mut av);
        trim(&mut bv);
        let g = gcd_mod(&av, &bv, p);
        let d = g.len() - 1;
        if d == 0 {
            return Some(vec![gamma.to_vec()]);
        }
        if d > deg {
            continue;
        }
        if d < deg {
            deg = d;
            xs.clear();
            vals.clear();
        }
        xs.push(alpha);
        vals.push(g.iter().map(|&x| x * gv % p).collect());
    }
    let mut out = Vec::with_capacity(deg + 1);
    for k in 0..=deg {
        let ys: Vec<u64> = vals.iter().map(|v| v[k]).collect();
        out.push(interpolate_mod(&xs, &ys, p));
    }
    Some(out)
}

fn mul_z(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim_z(&mut out);
    out
}

fn mul_z2(a: &ZPoly2, c: &ZPoly) -> ZPoly2 {
    a.iter().map(|u| mul_z(u, c)).collect()
}

/// Exact division in Z[q][t].
fn div_z2(a: &ZPoly2, b: &ZPoly2) -> Option<ZPoly2> {
    let db = b.len() - 1;
    let lc = &b[db];
    let mut r = a.clone();
    trim2(&mut r);
    if r.len() < b.len() {
        return if r.is_empty() { Some(Vec::new()) } else { None };
    }
    let mut q: ZPoly2 = vec![Vec::new(); r.len() - db];
    while !r.is_empty() {
        let dr = r.len() - 1;
        if dr < db {
            return None;
        }
        let f = div_z(&r[dr], lc)?;
        for (i, bi) in b.iter().enumerate() {
            let prod = mul_z(&f, bi);
            let target = &mut r[dr - db + i];
            if target.len() < prod.len() {
                target.resize(prod.len(), BigInt::zero());
            }
            for (k, x) in prod.into_iter().enumerate() {
                target[k] -= x;
            }
        }
        q[dr - db] = f;
        trim2(&mut r);
        if r.len() > dr {
            return None;
        }
        if !r.is_empty() && r.len() - 1 == dr {
            return None;
        }
    }
    Some(q)
}
