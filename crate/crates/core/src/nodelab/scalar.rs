//! Modular scalar arithmetic on `u64` residues, plus deterministic
//! primality testing. All products go through `u128`; nothing here is
//! probabilistic.

/// `a + b mod p`, operands already reduced.
#[inline]
pub fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

/// `a - b mod p`, operands already reduced.
#[inline]
pub fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub fn negm(a: u64, p: u64) -> u64 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

#[inline]
pub fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn powm(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulm(acc, base, p);
        }
        base = mulm(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Multiplicative inverse mod a prime `p`; `None` for zero.
pub fn invm(a: u64, p: u64) -> Option<u64> {
    if a % p == 0 {
        None
    } else {
        Some(powm(a, p - 2, p))
    }
}

/// Deterministic Miller-Rabin over the bases sufficient for all of `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powm(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulm(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Uniform draw from `0..n` by rejection on the raw 64-bit stream, so the
/// result depends only on the generator state, not on any library's
/// distribution internals.
pub fn uniform_below(rng: &mut impl rand_core::RngCore, n: u64) -> u64 {
    debug_assert!(n > 0);
    let zone = u64::MAX - (u64::MAX % n);
    loop {
        let v = rng.next_u64();
        if v < zone {
            return v % n;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small_and_known() {
        let primes = [2u64, 3, 5, 7, 10007, 1_000_000_007, 2_147_483_647];
        for p in primes {
            assert!(is_prime(p), "{}", p);
        }
        let composites = [0u64, 1, 4, 9, 10005, 10007 * 10009, 3_215_031_751];
        for c in composites {
            assert!(!is_prime(c), "{}", c);
        }
    }

    #[test]
    fn inverse_round_trip() {
        let p = 10007;
        for a in 1..200 {
            let inv = invm(a, p).unwrap();
            assert_eq!(mulm(a, inv, p), 1);
        }
        assert_eq!(invm(0, p), None);
    }

    #[test]
    fn uniform_below_is_in_range_and_deterministic() {
        use rand_core::SeedableRng;
        let mut a = rand_chacha::ChaCha20Rng::seed_from_u64(7);
        let mut b = rand_chacha::ChaCha20Rng::seed_from_u64(7);
        for _ in 0..100 {
            let x = uniform_below(&mut a, 10007);
            let y = uniform_below(&mut b, 10007);
            assert_eq!(x, y);
            assert!(x < 10007);
        }
    }
}
