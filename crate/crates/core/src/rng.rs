//! Seeding and replica fan-out.
//!
//! Every experiment has one 64-bit root seed. Replica `i` draws from
//! `ChaCha8Rng::seed_from_u64(root)` switched to stream `i`: the ChaCha
//! block counter is shared, the 64-bit stream id (nonce) differs, so the
//! replica streams are independent keystreams and each replica can be
//! regenerated on its own.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub type ReplicaRng = ChaCha8Rng;

/// The random stream of replica `index` under `root`.
pub fn replica_rng(root: u64, index: u64) -> ReplicaRng {
    let mut rng = ChaCha8Rng::seed_from_u64(root);
    rng.set_stream(index);
    rng
}

/// Runs `count` replicas on the current rayon pool and returns their results
/// ordered by replica index, so the output does not depend on scheduling.
pub fn run_replicas<R, F>(root: u64, count: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(u64, &mut ReplicaRng) -> R + Sync,
{
    (0..count as u64)
        .into_par_iter()
        .map(|i| f(i, &mut replica_rng(root, i)))
        .collect()
}
