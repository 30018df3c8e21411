#![allow(dead_code)]

use qcam::{FactorTag, InitPattern};

/// Amplitude of basis index `k` in the product of `tags`, read straight off
/// the definition: one factor per bit, first tag on the top bit.
pub fn product_amplitude(tags: &[FactorTag], k: usize) -> f64 {
    let n = tags.len();
    tags.iter()
        .enumerate()
        .map(|(j, t)| {
            let bit = (k >> (n - 1 - j)) & 1;
            match (t, bit) {
                (FactorTag::Zero, 0) | (FactorTag::One, 1) | (FactorTag::Both, _) => 1.0,
                _ => 0.0,
            }
        })
        .product()
}

/// All patterns of length `n` via base-3 counting, independent of the
/// crate's iterator.
pub fn all_patterns(n: usize) -> Vec<InitPattern> {
    let total = 3usize.pow(n as u32);
    (0..total)
        .map(|mut c| {
            let mut tags = vec![FactorTag::Zero; n];
            for slot in tags.iter_mut().rev() {
                *slot = FactorTag::ALL[c % 3];
                c /= 3;
            }
            InitPattern::new(tags).unwrap()
        })
        .collect()
}

/// Small deterministic LCG for test fixtures that need "random" functions
/// without pulling the crate's own generator into the oracle.
pub struct Lcg(pub u64);

impl Lcg {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0 >> 11
    }

    pub fn bit(&mut self) -> bool {
        self.next_u64() & 1 == 1
    }

    pub fn unit(&mut self) -> f64 {
        (self.next_u64() as f64) / ((1u64 << 53) as f64)
    }
}
