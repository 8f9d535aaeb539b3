//! Seeded pseudo-random generator for the sampling modes.
//!
//! The generator is fixed by its update equations rather than borrowed from a
//! library so that samples can be reproduced from any language:
//!
//! ```text
//! x ^= x >> 12
//! x ^= x << 25
//! x ^= x >> 27
//! output = x * 0x2545F4914F6CDD1D   (mod 2^64)
//! ```
//!
//! The state is the pre-multiplication `x`. A zero seed would trap the state
//! at zero, so it is replaced by a fixed nonzero constant; any other seed is
//! used as-is.

#[derive(Clone, Debug)]
pub struct SeededRng {
    state: u64,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng {
            state: if seed == 0 { 0x9E37_79B9_7F4A_7C15 } else { seed },
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

    /// Uniform-enough draw from `0..bound` by reduction; `bound` is tiny
    /// (point counts, family sizes) next to 2^64, so the bias is negligible
    /// and the result stays reproducible from the equations above.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        self.next_u64() % bound
    }

    pub fn choose<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.below(items.len() as u64) as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequences_are_deterministic_per_seed() {
        let mut a = SeededRng::new(42);
        let mut b = SeededRng::new(42);
        let xs: Vec<u64> = (0..5).map(|_| a.next_u64()).collect();
        let ys: Vec<u64> = (0..5).map(|_| b.next_u64()).collect();
        assert_eq!(xs, ys);
        let mut c = SeededRng::new(43);
        assert_ne!(xs[0], c.next_u64());
    }

    #[test]
    fn zero_seed_is_remapped() {
        let mut z = SeededRng::new(0);
        assert_ne!(z.next_u64(), 0);
        let mut z2 = SeededRng::new(0x9E37_79B9_7F4A_7C15);
        let mut z3 = SeededRng::new(0);
        assert_eq!(z2.next_u64(), z3.next_u64());
    }

    #[test]
    fn matches_the_documented_equations() {
        let mut r = SeededRng::new(1);
        let mut x: u64 = 1;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        assert_eq!(r.next_u64(), x.wrapping_mul(0x2545_F491_4F6C_DD1D));
    }

    #[test]
    fn bounded_draws_stay_in_range() {
        let mut r = SeededRng::new(7);
        for _ in 0..100 {
            assert!(r.below(3) < 3);
        }
        let items = [10, 20, 30];
        assert!(items.contains(r.choose(&items)));
    }
}
