//! Seeded instance generation.
//!
//! The generator is SplitMix64; bounded draws use rejection sampling and
//! cross edges are chosen with Floyd's subset algorithm over the `m·n` grid
//! cells numbered `(l - 1)·n + (r - 1)`. The whole pipeline is fixed here so
//! instances reproduce exactly from a seed on any platform.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::ladder::{CrossEdge, GeneralizedLadder};

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound`; `bound` must be positive.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let threshold = bound.wrapping_neg() % bound;
        loop {
            let x = self.next_u64();
            if x >= threshold {
                return x % bound;
            }
        }
    }

    /// Uniform in `lo..=hi`.
    pub fn between(&mut self, lo: u64, hi: u64) -> u64 {
        lo + self.below(hi - lo + 1)
    }
}

/// `k` distinct cross edges drawn uniformly from `[1, m] × [1, n]`.
pub fn random_instance(seed: u64, m: usize, n: usize, k: usize) -> Result<GeneralizedLadder> {
    random_instance_with(&mut SplitMix64::new(seed), m, n, k)
}

pub fn random_instance_with(rng: &mut SplitMix64, m: usize, n: usize, k: usize) -> Result<GeneralizedLadder> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidDimension { m, n });
    }
    let cells = (m as u64)
        .checked_mul(n as u64)
        .ok_or(Error::TooManyEdges { m, n, k })?;
    if k as u64 > cells {
        return Err(Error::TooManyEdges { m, n, k });
    }
    let mut chosen: HashSet<u64> = HashSet::with_capacity(k);
    for j in cells - k as u64..cells {
        let t = rng.below(j + 1);
        if !chosen.insert(t) {
            chosen.insert(j);
        }
    }
    let n64 = n as u64;
    GeneralizedLadder::new(
        m,
        n,
        chosen
            .into_iter()
            .map(|c| CrossEdge::new((c / n64) as usize + 1, (c % n64) as usize + 1)),
    )
}
