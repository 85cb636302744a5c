//! Seeded sampling of small exact rationals and window elements.
//!
//! Each sample index gets its own generator derived from `(seed, stream,
//! index)`, so parallel and sequential runs draw identical values.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{q, Q};

/// Independent generator for sample `index` of `stream` under `seed`.
pub fn rng_for(seed: u64, stream: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng.set_word_pos((index as u128) << 16);
    rng
}

/// Numerator in `{-3..3} \ {0}`, denominator in `{1, 2, 3}`.
pub fn small_rational(rng: &mut impl Rng) -> Q {
    let mut n = rng.gen_range(1..=3);
    if rng.gen_bool(0.5) {
        n = -n;
    }
    q(n, rng.gen_range(1..=3))
}

pub fn pick<'a, T>(rng: &mut impl Rng, items: &'a [T]) -> &'a T {
    items.choose(rng).expect("nonempty sample pool")
}
