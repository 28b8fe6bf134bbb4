//! Exact integer arithmetic: primality, factoring, modular powers.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use once_cell::sync::Lazy;

/// Upper bound of the precomputed trial-division table.
pub const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

static SMALL_PRIMES: Lazy<Vec<u64>> = Lazy::new(|| sieve(TRIAL_DIVISION_BOUND));

/// Witness bases that make Miller-Rabin exact for every 64-bit integer.
const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// All primes `<= bound` by the sieve of Eratosthenes.
pub fn sieve(bound: u64) -> Vec<u64> {
    let n = bound as usize;
    if n < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

pub fn small_primes() -> &'static [u64] {
    &SMALL_PRIMES
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &MR_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

// Brent's variant; `n` must be odd and composite.
fn pollard_rho(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut q, mut g) = (2u64, 2u64, 1u64, 1u64);
        let mut r = 1u64;
        let mut ys = 2u64;
        const BLOCK: u64 = 128;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BLOCK.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += BLOCK;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

fn split_into(n: u64, out: &mut BTreeMap<u64, u32>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        *out.entry(n).or_default() += 1;
        return;
    }
    let d = pollard_rho(n);
    split_into(d, out);
    split_into(n / d, out);
}

/// Prime factorization as `prime -> exponent`.
pub fn factorize(mut n: u64) -> BTreeMap<u64, u32> {
    let mut out = BTreeMap::new();
    if n <= 1 {
        return out;
    }
    for &p in small_primes() {
        if p * p > n {
            break;
        }
        if n % p == 0 {
            let e = out.entry(p).or_insert(0);
            while n % p == 0 {
                n /= p;
                *e += 1;
            }
        }
    }
    if n > 1 {
        let bound = TRIAL_DIVISION_BOUND;
        if n <= bound * bound {
            *out.entry(n).or_default() += 1;
        } else {
            split_into(n, &mut out);
        }
    }
    out
}

/// The set π(n) of prime divisors.
pub fn prime_divisors(n: u64) -> BTreeSet<u64> {
    factorize(n).into_keys().collect()
}

/// Exponent of `p` in `n` (`n > 0`).
pub fn valuation(mut n: u64, p: u64) -> u32 {
    let mut v = 0;
    while n > 0 && n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

/// Largest divisor of `n` whose prime divisors all lie in `primes`.
pub fn pi_part(mut n: u64, primes: &BTreeSet<u64>) -> u64 {
    let mut part = 1;
    for &p in primes {
        while p > 1 && n % p == 0 {
            n /= p;
            part *= p;
        }
    }
    part
}

/// Multiplicative order of `u` modulo `m`, or `None` when `u` is not a unit.
pub fn multiplicative_order(u: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    let u = u % m;
    if gcd(u, m) != 1 {
        return None;
    }
    // The order divides the group exponent, which divides m * φ(m); search
    // divisors of φ(m) computed from the factorization.
    let fac = factorize(m);
    let mut phi: u64 = 1;
    for (&p, &e) in &fac {
        phi *= (p - 1) * p.pow(e - 1);
    }
    let mut order = phi;
    for &q in factorize(phi).keys() {
        while order % q == 0 && pow_mod(u, order / q, m) == 1 {
            order /= q;
        }
    }
    Some(order)
}

/// Ascending primes starting at `from` that are not in `exclude`.
pub fn primes_from(from: u64, exclude: &BTreeSet<u64>) -> impl Iterator<Item = u64> + '_ {
    (from.max(2)..).filter(|&n| is_prime(n)).filter(move |p| !exclude.contains(p))
}
