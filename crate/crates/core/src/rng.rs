//! The deterministic generator behind every probe sequence and fuzz corpus.
//!
//! State update (xorshift64*), all arithmetic modulo 2^64:
//!
//! ```text
//! x ^= x >> 12;  x ^= x << 25;  x ^= x >> 27;
//! output = x * 0x2545_F491_4F6C_DD1D
//! ```
//!
//! The initial state is `splitmix64(seed)`, replaced by `1` if it is zero:
//!
//! ```text
//! z = seed + 0x9E37_79B9_7F4A_7C15
//! z = (z ^ (z >> 30)) * 0xBF58_476D_1CE4_E5B9
//! z = (z ^ (z >> 27)) * 0x94D0_49BB_1331_11EB
//! z ^ (z >> 31)
//! ```

use crate::field::Field;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XorShift64 {
    state: u64,
}

fn splitmix64(seed: u64) -> u64 {
    let mut z = seed.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

impl XorShift64 {
    pub fn new(seed: u64) -> Self {
        let s = splitmix64(seed);
        XorShift64 {
            state: if s == 0 { 1 } else { s },
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    /// Uniform in `0..n` by rejection; `n > 0`.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        let zone = u64::MAX - u64::MAX % n;
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % n;
            }
        }
    }

    /// Uniform in the inclusive range `lo..=hi`.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        lo + self.below((hi - lo + 1) as u64) as i64
    }

    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.below(den) < num
    }

    pub fn pick<'a, X>(&mut self, xs: &'a [X]) -> &'a X {
        &xs[self.below(xs.len() as u64) as usize]
    }

    /// A scalar: uniform over a finite field, a small integer over the rationals.
    pub fn scalar<T: Field>(&mut self, small: i64) -> T {
        match T::order() {
            Some(p) => T::from_i64(self.below(p) as i64),
            None => T::from_i64(self.range(-small, small)),
        }
    }

    /// A nonzero scalar.
    pub fn nonzero_scalar<T: Field>(&mut self, small: i64) -> T {
        loop {
            let s = self.scalar::<T>(small);
            if !s.is_zero() {
                return s;
            }
        }
    }

    /// Derives an independent stream; used to give each corpus instance its own seed.
    pub fn fork(&mut self) -> u64 {
        self.next_u64()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stream_is_reproducible() {
        let mut a = XorShift64::new(42);
        let mut b = XorShift64::new(42);
        let xs: Vec<u64> = (0..8).map(|_| a.next_u64()).collect();
        let ys: Vec<u64> = (0..8).map(|_| b.next_u64()).collect();
        assert_eq!(xs, ys);
        assert_ne!(XorShift64::new(43).next_u64(), xs[0]);
    }

    #[test]
    fn zero_seed_is_usable() {
        let mut r = XorShift64::new(0);
        assert_ne!(r.next_u64(), r.next_u64());
    }

    #[test]
    fn below_stays_in_range() {
        let mut r = XorShift64::new(7);
        for n in 1..20 {
            for _ in 0..50 {
                assert!(r.below(n) < n);
            }
        }
        for _ in 0..100 {
            let v = r.range(-3, 3);
            assert!((-3..=3).contains(&v));
        }
    }
}
