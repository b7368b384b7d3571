//! Seeded randomness. Every randomized choice draws from a generator
//! derived from the field seed, a label and a trial index.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in bytes {
        h ^= *b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

pub fn rng_for(seed: u64, label: &str, trial: u64) -> ChaCha8Rng {
    let mix = seed ^ fnv1a(label.as_bytes()).rotate_left(17) ^ trial.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    ChaCha8Rng::seed_from_u64(mix)
}

/// Outcome of repeated randomized trials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Majority<T> {
    pub value: T,
    pub votes: Vec<T>,
}

impl<T: Clone + PartialEq> Majority<T> {
    pub fn unanimous(&self) -> bool {
        self.votes.iter().all(|v| *v == self.value)
    }
}

/// Run `trials` seeded repetitions and take the strict majority. A split
/// with a majority is logged; no majority is an error.
pub fn majority<T, F>(seed: u64, label: &str, trials: usize, mut f: F) -> Result<Majority<T>>
where
    T: Clone + PartialEq + std::fmt::Debug + Into<i64>,
    F: FnMut(&mut ChaCha8Rng) -> Result<T>,
{
    let trials = trials.max(1);
    let mut votes = Vec::with_capacity(trials);
    for k in 0..trials {
        let mut rng = rng_for(seed, label, k as u64);
        votes.push(f(&mut rng)?);
    }
    for v in &votes {
        let n = votes.iter().filter(|w| *w == v).count();
        if 2 * n > votes.len() {
            if n < votes.len() {
                log::warn!("{label}: trials disagree {votes:?}, majority {v:?}");
            }
            return Ok(Majority { value: v.clone(), votes });
        }
    }
    Err(Error::DisagreementAcrossTrials(votes.into_iter().map(Into::into).collect()))
}
