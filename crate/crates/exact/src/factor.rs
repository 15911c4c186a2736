//! Factorization of rational polynomials into irreducibles.
//!
//! Square-free parts are factored with the Zassenhaus scheme: Berlekamp
//! factorization modulo a small prime, quadratic Hensel lifting along a
//! factor tree, then recombination of lifted factors by trial division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::Poly;
use crate::Rat;

/// Monic irreducible factors of `p` with their multiplicities, in no
/// particular order. Constants have no factors.
pub fn factor(p: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    for (sqf, mult) in p.square_free_decomposition() {
        for f in factor_square_free(&sqf) {
            out.push((f, mult));
        }
    }
    out
}

/// Monic irreducible factors of a square-free polynomial.
pub fn factor_square_free(p: &Poly) -> Vec<Poly> {
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    if deg == 0 {
        return Vec::new();
    }
    if deg == 1 {
        return vec![p.monic()];
    }
    let mut ints = p.primitive_integer();
    let mut out = Vec::new();
    if ints[0].is_zero() {
        out.push(Poly::x());
        ints.remove(0);
    }
    if ints.len() == 2 {
        out.push(Poly::from_integers(&ints).monic());
        return out;
    }
    if ints.len() > 2 {
        for f in zassenhaus(&ints) {
            out.push(Poly::from_integers(&f).monic());
        }
    }
    out
}

/// Whether `p` is irreducible over the rationals (constants are not).
pub fn is_irreducible(p: &Poly) -> bool {
    match p.degree() {
        None | Some(0) => false,
        Some(1) => true,
        Some(_) => {
            let sqf = p.square_free_part();
            sqf.degree() == p.degree() && factor_square_free(p).len() == 1
        }
    }
}

const SMALL_PRIMES: &[u64] = &[
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109,
    113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229, 233, 239,
    241, 251, 257, 263, 269, 271, 277, 281, 283, 293, 307, 311, 313, 317, 331, 337, 347, 349, 353, 359, 367, 373, 379,
    383, 389, 397, 401, 409, 419, 421, 431, 433, 439, 443, 449, 457, 461, 463, 467, 479, 487, 491, 499, 503, 509, 521,
    523, 541, 547, 557, 563, 569, 571, 577, 587, 593, 599, 601, 607, 613, 617, 619, 631, 641, 643, 647, 653, 659, 661,
    673, 677, 683, 691, 701, 709, 719, 727, 733, 739, 743, 751, 757, 761, 769, 773, 787, 797, 809, 811, 821, 823, 827,
    829, 839, 853, 857, 859, 863, 877, 881, 883, 887, 907, 911, 919, 929, 937, 941, 947, 953, 967, 971, 977, 983, 991,
    997,
];

/// Number of usable primes tried before settling on the one with the
/// fewest modular factors.
const PRIME_TRIALS: usize = 5;

/// Irreducible factors of a primitive square-free integer polynomial with
/// positive leading coefficient and nonzero constant term.
fn zassenhaus(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    let lc = f[n].clone();

    let mut best: Option<(u64, Vec<Vec<u64>>)> = None;
    let mut tried = 0;
    for &p in SMALL_PRIMES {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = modp::from_big(f, p);
        if !modp::gcd(&fp, &modp::derivative(&fp, p), p).eq(&[1]) {
            continue;
        }
        let monic = modp::monic(&fp, p);
        let factors = modp::berlekamp(&monic, p);
        if factors.len() == 1 {
            return vec![f.to_vec()];
        }
        if best.as_ref().is_none_or(|(_, b)| factors.len() < b.len()) {
            best = Some((p, factors));
        }
        tried += 1;
        if tried >= PRIME_TRIALS {
            break;
        }
    }
    let (p, modular) = best.expect("some small prime keeps a square-free polynomial square-free");

    // Coefficient bound for lc * (any factor), with slack.
    let max_coeff = f.iter().map(|c| c.abs()).max().expect("nonempty");
    let bound = BigInt::from(n + 1) * (BigInt::one() << n) * lc.abs() * max_coeff;
    let two_bound = bound * 2;
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    while modulus <= two_bound {
        modulus *= &pb;
    }

    let target: Vec<BigInt> = f.iter().map(|c| c.mod_floor(&modulus)).collect();
    let lifted = hensel::lift(&target, &modular, p, &modulus);
    recombine(f, lifted, &modulus)
}

fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn primitive(f: &[BigInt]) -> Vec<BigInt> {
    let content = f.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    let sign = if f.last().is_some_and(|c| c.is_negative()) {
        -1
    } else {
        1
    };
    let d = content * sign;
    f.iter().map(|c| c / &d).collect()
}

fn recombine(f: &[BigInt], lifted: Vec<Vec<BigInt>>, modulus: &BigInt) -> Vec<Vec<BigInt>> {
    let mut remaining: Vec<Vec<BigInt>> = lifted;
    let mut current = f.to_vec();
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= remaining.len() {
        let lc = current.last().expect("nonempty").clone();
        let mut found = None;
        for subset in combinations(remaining.len(), size) {
            let mut g = vec![lc.clone()];
            for &i in &subset {
                g = hensel::mul_mod(&g, &remaining[i], modulus);
            }
            let g: Vec<BigInt> = g.iter().map(|c| symmetric(c, modulus)).collect();
            let g = primitive(&trim(g));
            let candidate = Poly::from_integers(&g);
            if let Some(q) = Poly::from_integers(&current).div_exact(&candidate) {
                found = Some((subset, g, q));
                break;
            }
        }
        match found {
            Some((subset, g, q)) => {
                out.push(g);
                current = q.primitive_integer();
                let mut k = 0;
                remaining.retain(|_| {
                    let keep = !subset.contains(&k);
                    k += 1;
                    keep
                });
            }
            None => size += 1,
        }
    }
    out.push(current);
    out
}

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// All `k`-element subsets of `0..n`, in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 && idx[0] == n - k {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Polynomials over the prime field `F_p`, coefficients lowest first.
mod modp {
    use super::*;

    pub fn trim(mut v: Vec<u64>) -> Vec<u64> {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    pub fn from_big(f: &[BigInt], p: u64) -> Vec<u64> {
        let pb = BigInt::from(p);
        trim(f.iter().map(|c| c.mod_floor(&pb).to_u64().expect("reduced")).collect())
    }

    pub fn inv(a: u64, p: u64) -> u64 {
        pow(a % p, p - 2, p)
    }

    fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * a % p;
            }
            a = a * a % p;
            e >>= 1;
        }
        acc
    }

    pub fn derivative(f: &[u64], p: u64) -> Vec<u64> {
        trim(
            f.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| (i as u64 % p) * c % p)
                .collect(),
        )
    }

    pub fn monic(f: &[u64], p: u64) -> Vec<u64> {
        match f.last() {
            Some(&lc) if lc != 1 => {
                let li = inv(lc, p);
                f.iter().map(|&c| c * li % p).collect()
            }
            _ => f.to_vec(),
        }
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| {
                    let x = a.get(i).copied().unwrap_or(0);
                    let y = b.get(i).copied().unwrap_or(0);
                    (x + p - y) % p
                })
                .collect(),
        )
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(out)
    }

    pub fn div_rem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
        let db = b.len() - 1;
        if a.len() < b.len() {
            return (Vec::new(), a.to_vec());
        }
        let li = inv(b[db], p);
        let mut rem = a.to_vec();
        let mut quot = vec![0u64; a.len() - db];
        for k in (0..quot.len()).rev() {
            let c = rem[k + db] * li % p;
            if c == 0 {
                continue;
            }
            for (j, &bc) in b.iter().enumerate() {
                rem[k + j] = (rem[k + j] + p - c * bc % p) % p;
            }
            quot[k] = c;
        }
        rem.truncate(db);
        (trim(quot), trim(rem))
    }

    pub fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        div_rem(a, b, p).1
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        monic(&a, p)
    }

    /// `(s, t)` with `s*a + t*b = 1`, assuming `gcd(a, b) = 1`.
    pub fn bezout(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = div_rem(&r0, &r1, p);
            let s = sub(&s0, &mul(&q, &s1, p), p);
            let t = sub(&t0, &mul(&q, &t1, p), p);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        debug_assert_eq!(r0.len(), 1, "inputs must be coprime");
        let li = inv(r0[0], p);
        let scale = |v: Vec<u64>| trim(v.into_iter().map(|c| c * li % p).collect());
        (scale(s0), scale(t0))
    }

    fn powmod_x(e: u64, f: &[u64], p: u64) -> Vec<u64> {
        let mut base = rem(&[0, 1], f, p);
        let mut acc = vec![1u64];
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = rem(&mul(&acc, &base, p), f, p);
            }
            base = rem(&mul(&base, &base, p), f, p);
            e >>= 1;
        }
        acc
    }

    /// Null space basis of an `n x n` matrix over `F_p`.
    fn null_space(mut m: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
        let n = m.len();
        let cols = m.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..cols {
            let Some(r) = (row..n).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(row, r);
            let li = inv(m[row][col], p);
            for x in m[row].iter_mut() {
                *x = *x * li % p;
            }
            for r in 0..n {
                if r != row && m[r][col] != 0 {
                    let c = m[r][col];
                    for k in 0..cols {
                        m[r][k] = (m[r][k] + p - c * m[row][k] % p) % p;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        let mut basis = Vec::new();
        for free in (0..cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0u64; cols];
            v[free] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - m[i][free]) % p;
            }
            basis.push(v);
        }
        basis
    }

    /// Irreducible monic factors of a monic square-free `f` over `F_p`.
    pub fn berlekamp(f: &[u64], p: u64) -> Vec<Vec<u64>> {
        let n = f.len() - 1;
        if n <= 1 {
            return vec![f.to_vec()];
        }
        let xp = powmod_x(p, f, p);
        // Row i holds x^(i p) mod f.
        let mut rows = Vec::with_capacity(n);
        let mut cur = vec![1u64];
        for _ in 0..n {
            let mut row = cur.clone();
            row.resize(n, 0);
            rows.push(row);
            cur = rem(&mul(&cur, &xp, p), f, p);
        }
        // Solve (Q - I)^T v = 0.
        let mut m = vec![vec![0u64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let q = if i == j { (rows[j][i] + p - 1) % p } else { rows[j][i] };
                m[i][j] = q;
            }
        }
        let basis = null_space(m, p);
        let r = basis.len();
        let mut factors = vec![f.to_vec()];
        if r == 1 {
            return factors;
        }
        for v in basis.iter() {
            let v = trim(v.clone());
            if v.len() <= 1 {
                continue;
            }
            for s in 0..p {
                let mut vs = v.clone();
                vs[0] = (vs[0] + p - s) % p;
                let vs = trim(vs);
                let mut next = Vec::with_capacity(factors.len() + 1);
                for h in factors.drain(..) {
                    if h.len() <= 2 {
                        next.push(h);
                        continue;
                    }
                    let g = gcd(&h, &vs, p);
                    if g.len() > 1 && g.len() < h.len() {
                        let (q, _) = div_rem(&h, &g, p);
                        next.push(g);
                        next.push(monic(&q, p));
                    } else {
                        next.push(h);
                    }
                }
                factors = next;
                if factors.len() == r {
                    return factors;
                }
            }
        }
        factors
    }
}

/// Hensel lifting of a modular factorization to a prime power modulus.
mod hensel {
    use super::*;

    fn reduce(v: Vec<BigInt>, m: &BigInt) -> Vec<BigInt> {
        trim(v.into_iter().map(|c| c.mod_floor(m)).collect())
    }

    fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        v
    }

    fn to_big(v: &[u64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    fn add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
        let n = a.len().max(b.len());
        reduce(
            (0..n)
                .map(|i| a.get(i).cloned().unwrap_or_default() + b.get(i).cloned().unwrap_or_default())
                .collect(),
            m,
        )
    }

    fn sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
        let n = a.len().max(b.len());
        reduce(
            (0..n)
                .map(|i| a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default())
                .collect(),
            m,
        )
    }

    pub fn mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
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
        reduce(out, m)
    }

    /// Division by a monic polynomial modulo `m`.
    fn div_rem_monic(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
        let db = b.len() - 1;
        if a.len() < b.len() {
            return (Vec::new(), a.to_vec());
        }
        let mut rem = a.to_vec();
        let mut quot = vec![BigInt::zero(); a.len() - db];
        for k in (0..quot.len()).rev() {
            let c = rem[k + db].mod_floor(m);
            if c.is_zero() {
                continue;
            }
            for (j, bc) in b.iter().enumerate() {
                rem[k + j] = (&rem[k + j] - &c * bc).mod_floor(m);
            }
            quot[k] = c;
        }
        rem.truncate(db);
        (reduce(quot, m), reduce(rem, m))
    }

    fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
        let e = a.extended_gcd(m);
        debug_assert!(e.gcd.is_one());
        e.x.mod_floor(m)
    }

    /// One quadratic Hensel step from modulus `m` to `next` (a divisor of
    /// `m^2`): `f = g h` and `s g + t h = 1` are lifted, with `h` monic.
    #[allow(clippy::too_many_arguments)]
    fn step(
        f: &[BigInt],
        g: &[BigInt],
        h: &[BigInt],
        s: &[BigInt],
        t: &[BigInt],
        next: &BigInt,
    ) -> (Vec<BigInt>, Vec<BigInt>, Vec<BigInt>, Vec<BigInt>) {
        let e = sub(f, &mul_mod(g, h, next), next);
        let (q, r) = div_rem_monic(&mul_mod(s, &e, next), h, next);
        let g2 = add(g, &add(&mul_mod(t, &e, next), &mul_mod(&q, g, next), next), next);
        let h2 = add(h, &r, next);
        let one = vec![BigInt::one()];
        let b = sub(&add(&mul_mod(s, &g2, next), &mul_mod(t, &h2, next), next), &one, next);
        let (c, d) = div_rem_monic(&mul_mod(s, &b, next), &h2, next);
        let s2 = sub(s, &d, next);
        let t2 = sub(&sub(t, &mul_mod(t, &b, next), next), &mul_mod(&c, &g2, next), next);
        (g2, h2, s2, t2)
    }

    /// Lifts `f = lc(f) * prod(factors) (mod p)` to monic factors modulo
    /// `modulus`, a power of `p`.
    pub fn lift(f: &[BigInt], factors: &[Vec<u64>], p: u64, modulus: &BigInt) -> Vec<Vec<BigInt>> {
        let lc = f.last().expect("nonempty").clone();
        if factors.len() == 1 {
            let li = mod_inverse(&lc, modulus);
            return vec![reduce(f.iter().map(|c| c * &li).collect(), modulus)];
        }
        let k = factors.len() / 2;
        let lc_p = (lc.mod_floor(&BigInt::from(p))).to_u64().expect("reduced");
        let g0 = factors[..k].iter().fold(vec![lc_p], |acc, fi| modp::mul(&acc, fi, p));
        let h0 = factors[k..].iter().fold(vec![1u64], |acc, fi| modp::mul(&acc, fi, p));
        let (s0, t0) = modp::bezout(&g0, &h0, p);
        // Bring s below deg h and t below deg g.
        let (qs, s0) = modp::div_rem(&s0, &h0, p);
        let t0 = modp::trim({
            let adj = modp::mul(&qs, &g0, p);
            let n = t0.len().max(adj.len());
            (0..n)
                .map(|i| (t0.get(i).copied().unwrap_or(0) + adj.get(i).copied().unwrap_or(0)) % p)
                .collect()
        });

        let mut g = to_big(&g0);
        // g carries the true leading coefficient of f modulo the current modulus.
        let mut h = to_big(&h0);
        let mut s = to_big(&s0);
        let mut t = to_big(&t0);
        let mut m = BigInt::from(p);
        while &m < modulus {
            let next = (&m * &m).min(modulus.clone());
            let gl = g.len() - 1;
            g[gl] = lc.mod_floor(&m);
            let (g2, h2, s2, t2) = step(f, &g, &h, &s, &t, &next);
            g = g2;
            h = h2;
            s = s2;
            t = t2;
            m = next;
        }
        let mut out = lift(&g, &factors[..k], p, modulus);
        out.extend(lift(&h, &factors[k..], p, modulus));
        out
    }
}

/// Rational roots of `p`, each once, in increasing order.
pub fn rational_roots(p: &Poly) -> Vec<Rat> {
    let mut roots: Vec<Rat> = factor(p)
        .into_iter()
        .filter(|(f, _)| f.degree() == Some(1))
        .map(|(f, _)| -f.coeff(0))
        .collect();
    roots.sort();
    roots
}
