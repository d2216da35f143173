//! Shared helpers for the integration tests.

pub mod ratcurv;

use pqk_core::scalar::ratio;
use pqk_core::{FueterTerm, Paraquaternion, PolyMap, Poly4, Scalar, Side};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng_with_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rand_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

pub fn rand_pq(rng: &mut ChaCha8Rng) -> Paraquaternion {
    Paraquaternion::new(
        rand_scalar(rng),
        rand_scalar(rng),
        rand_scalar(rng),
        rand_scalar(rng),
    )
}

pub fn rand_poly(rng: &mut ChaCha8Rng, max_degree: u32, max_terms: usize) -> Poly4 {
    let mut p = Poly4::zero();
    for _ in 0..rng.gen_range(0..=max_terms) {
        let exp = loop {
            let e: [u32; 4] = std::array::from_fn(|_| rng.gen_range(0..=max_degree));
            if e.iter().sum::<u32>() <= max_degree {
                break e;
            }
        };
        p.add_term(exp, rand_scalar(rng));
    }
    p
}

pub fn rand_map(rng: &mut ChaCha8Rng, max_degree: u32) -> PolyMap {
    PolyMap::new(
        rand_poly(rng, max_degree, 4),
        rand_poly(rng, max_degree, 4),
        rand_poly(rng, max_degree, 4),
        rand_poly(rng, max_degree, 4),
    )
}

pub fn rand_zero_re_map(rng: &mut ChaCha8Rng, max_degree: u32) -> PolyMap {
    PolyMap::new(
        Poly4::zero(),
        rand_poly(rng, max_degree, 4),
        rand_poly(rng, max_degree, 4),
        rand_poly(rng, max_degree, 4),
    )
}

pub fn rand_fueter_terms(
    rng: &mut ChaCha8Rng,
    side: Side,
    max_len: usize,
    max_terms: usize,
) -> Vec<FueterTerm> {
    let count = rng.gen_range(1..=max_terms);
    (0..count)
        .map(|_| {
            let len = rng.gen_range(1..=max_len);
            let indices = (0..len).map(|_| rng.gen_range(1..=3u8)).collect();
            FueterTerm::new(side, indices, rand_pq(rng)).unwrap()
        })
        .collect()
}
