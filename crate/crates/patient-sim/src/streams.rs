//! Named deterministic random streams.
//!
//! Every random draw in a trial comes from a stream addressed by
//! `(master seed, name parts...)`. Streams are independent of execution
//! order, so cohort members can run in parallel and scenarios sharing a
//! stream name draw identical values.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

/// 32-byte seed derived from the master seed and the name parts.
pub fn stream_seed(master: u64, parts: &[&str]) -> [u8; 32] {
    let mut hasher = Sha256::new();
    hasher.update(master.to_le_bytes());
    for part in parts {
        hasher.update([0xff]);
        hasher.update(part.as_bytes());
    }
    hasher.finalize().into()
}

/// Seeded generator for one named stream.
pub fn stream_rng(master: u64, parts: &[&str]) -> ChaCha8Rng {
    ChaCha8Rng::from_seed(stream_seed(master, parts))
}
