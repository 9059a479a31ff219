#![allow(dead_code)]

use pitelescope::{ExactRational, FamilyId, SeriesParams};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub const XS: [(i64, i64); 9] = [(1, 2), (1, 3), (1, 4), (1, 6), (1, 10), (3, 10), (1, 12), (5, 12), (2, 5)];

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> ExactRational {
    ExactRational::new(n.into(), d.into())
}

/// A random valid parameter set: `m ∈ {1,2,3}`, `x` from [`XS`],
/// `p, q ∈ [0,3]`, and `r` over the family's valid range (T12 takes
/// `r ∈ [−2,3]`).
pub fn random_params(rng: &mut StdRng, family: FamilyId) -> SeriesParams {
    let m = rng.gen_range(1..=3);
    let mut x = Vec::new();
    let (mut p, mut qv, mut r) = (Vec::new(), Vec::new(), Vec::new());
    for _ in 0..m {
        let (a, b) = XS[rng.gen_range(0..XS.len())];
        x.push(q(a, b));
        let pi = rng.gen_range(0..=3);
        let qi = rng.gen_range(0..=3);
        let ri = match family {
            FamilyId::T1 => rng.gen_range(0..=pi + qi + 1),
            FamilyId::T12 => rng.gen_range(-2..=3),
        };
        p.push(pi);
        qv.push(qi);
        r.push(ri);
    }
    SeriesParams::new(family, x, p, qv, r)
}

pub fn random_family(rng: &mut StdRng) -> FamilyId {
    if rng.gen_bool(0.5) {
        FamilyId::T1
    } else {
        FamilyId::T12
    }
}
