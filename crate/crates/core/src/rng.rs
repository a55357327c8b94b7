//! Seeded linear congruential generator.
//!
//! Corpora and scrambles must be reproducible across implementations, so the
//! generator is fixed here rather than delegated to a crate whose stream may
//! change between versions.
//!
//! State update: `s <- s * 6364136223846793005 + 1442695040888963407 (mod 2^64)`.
//! Seeding: `s0 = seed ^ 0x853C49E6748FEA9B`, followed by one update.
//! Outputs are taken from the high bits of the state after each update.

const MULTIPLIER: u64 = 6364136223846793005;
const INCREMENT: u64 = 1442695040888963407;
const SEED_MIX: u64 = 0x853C_49E6_748F_EA9B;

#[derive(Clone, Debug)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        let mut rng = Lcg {
            state: seed ^ SEED_MIX,
        };
        rng.step();
        rng
    }

    fn step(&mut self) -> u64 {
        self.state = self
            .state
            .wrapping_mul(MULTIPLIER)
            .wrapping_add(INCREMENT);
        self.state
    }

    /// High 32 bits of the next state.
    pub fn next_u32(&mut self) -> u32 {
        (self.step() >> 32) as u32
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.step() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `0..bound` via multiply-shift on a 32-bit draw. `bound` must be nonzero.
    pub fn next_below(&mut self, bound: usize) -> usize {
        assert!(bound > 0);
        ((self.next_u32() as u64 * bound as u64) >> 32) as usize
    }

    /// Fisher-Yates, drawing from the highest index down.
    pub fn permutation(&mut self, len: usize) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..len).collect();
        for i in (1..len).rev() {
            let j = self.next_below(i + 1);
            perm.swap(i, j);
        }
        perm
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let mut a = Lcg::new(7);
        let mut b = Lcg::new(7);
        for _ in 0..100 {
            assert_eq!(a.next_u32(), b.next_u32());
        }
    }

    #[test]
    fn permutation_is_bijective() {
        let mut rng = Lcg::new(3);
        let mut p = rng.permutation(50);
        p.sort_unstable();
        assert_eq!(p, (0..50).collect::<Vec<_>>());
    }

    #[test]
    fn unit_interval() {
        let mut rng = Lcg::new(0);
        for _ in 0..1000 {
            let x = rng.next_f64();
            assert!((0.0..1.0).contains(&x));
        }
    }
}
