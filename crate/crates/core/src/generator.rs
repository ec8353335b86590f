//! Seeded random Brauer configurations for fuzzing.
//!
//! The random source is ChaCha8 (`rand_chacha::ChaCha8Rng::seed_from_u64`),
//! so a seed names the same configuration on every platform. Each attempt:
//!
//! 1. draws |Γ₀| in `1..=max_vertices` and |Γ₁| in `1..=max_polygons`;
//! 2. puts every vertex into one uniformly chosen polygon with an occurrence
//!    count in `1..=max_occ`, then adds each remaining (polygon, vertex) pair
//!    with probability 0.3;
//! 3. tops up polygons with fewer than two occurrences;
//! 4. gives each vertex μ = 1 with probability 0.5, otherwise μ in `1..=max_mu`;
//! 5. shuffles each nontruncated vertex's occurrence list into its successor
//!    sequence.
//!
//! Attempts that break an axiom are discarded and redrawn from the same stream.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::model::{BrauerConfiguration, PolygonId, VertexId};

pub const MAX_ATTEMPTS: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorBounds {
    pub seed: u64,
    pub max_vertices: usize,
    pub max_polygons: usize,
    pub max_occ: u64,
    pub max_mu: u64,
}

impl GeneratorBounds {
    pub fn new(
        seed: u64,
        max_vertices: usize,
        max_polygons: usize,
        max_occ: u64,
        max_mu: u64,
    ) -> Self {
        Self {
            seed,
            max_vertices,
            max_polygons,
            max_occ,
            max_mu,
        }
    }

    /// Polygons are sets and μ ≡ 1.
    pub fn set_polygons(seed: u64, max_vertices: usize, max_polygons: usize) -> Self {
        Self::new(seed, max_vertices, max_polygons, 1, 1)
    }

    pub fn with_seed(self, seed: u64) -> Self {
        Self { seed, ..self }
    }

    fn check(&self) -> Result<()> {
        if self.max_vertices == 0 || self.max_polygons == 0 || self.max_occ == 0 || self.max_mu == 0
        {
            return Err(Error::InvalidBounds(format!(
                "all bounds must be at least 1, got {}/{}/{}/{}",
                self.max_vertices, self.max_polygons, self.max_occ, self.max_mu
            )));
        }
        Ok(())
    }
}

pub fn generate_random(bounds: &GeneratorBounds) -> Result<BrauerConfiguration> {
    bounds.check()?;
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
    for _ in 0..MAX_ATTEMPTS {
        if let Some(config) = attempt(&mut rng, bounds) {
            return Ok(config);
        }
    }
    Err(Error::Unsatisfiable {
        attempts: MAX_ATTEMPTS,
    })
}

fn attempt(rng: &mut ChaCha8Rng, bounds: &GeneratorBounds) -> Option<BrauerConfiguration> {
    let nv = rng.random_range(1..=bounds.max_vertices);
    let np = rng.random_range(1..=bounds.max_polygons);
    let mut counts = vec![vec![0u64; nv]; np];

    #[allow(clippy::needless_range_loop)]
    for j in 0..nv {
        let i = rng.random_range(0..np);
        counts[i][j] = rng.random_range(1..=bounds.max_occ);
    }
    for row in counts.iter_mut() {
        for c in row.iter_mut() {
            if *c == 0 && rng.random_bool(0.3) {
                *c = rng.random_range(1..=bounds.max_occ);
            }
        }
    }
    for row in counts.iter_mut() {
        let mut tries = 0;
        while row.iter().sum::<u64>() < 2 {
            let j = rng.random_range(0..nv);
            if row[j] < bounds.max_occ {
                row[j] += 1;
            }
            tries += 1;
            if tries > 4 * nv {
                return None;
            }
        }
    }

    let mu: Vec<u64> = (0..nv)
        .map(|_| {
            if rng.random_bool(0.5) {
                1
            } else {
                rng.random_range(1..=bounds.max_mu)
            }
        })
        .collect();

    let vertex = |j: usize| VertexId::new((j + 1).to_string());
    let polygon = |i: usize| PolygonId::new(format!("V{}", i + 1));

    let mut builder = BrauerConfiguration::builder().vertices((0..nv).map(vertex));
    for (i, row) in counts.iter().enumerate() {
        let members = row
            .iter()
            .enumerate()
            .flat_map(|(j, &c)| std::iter::repeat_n(vertex(j), c as usize));
        builder = builder.polygon(polygon(i), members);
    }
    for (j, &m) in mu.iter().enumerate() {
        builder = builder.multiplicity(vertex(j), m);
    }
    for j in 0..nv {
        let val: u64 = counts.iter().map(|row| row[j]).sum();
        if val == 1 && mu[j] == 1 {
            continue;
        }
        let mut seq: Vec<PolygonId> = counts
            .iter()
            .enumerate()
            .flat_map(|(i, row)| std::iter::repeat_n(polygon(i), row[j] as usize))
            .collect();
        seq.shuffle(rng);
        builder = builder.orientation(vertex(j), seq);
    }
    builder.build().ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::validate;

    #[test]
    fn deterministic_in_seed() {
        let b = GeneratorBounds::new(17, 5, 5, 3, 3);
        assert_eq!(generate_random(&b).unwrap(), generate_random(&b).unwrap());
    }

    #[test]
    fn always_valid() {
        for seed in 0..300 {
            let g = generate_random(&GeneratorBounds::new(seed, 5, 5, 3, 3)).unwrap();
            assert!(validate(&g).is_empty(), "seed {seed}");
        }
    }

    #[test]
    fn covers_the_interesting_cases() {
        let (mut loops, mut repeats, mut truncated) = (false, false, false);
        for seed in 0..300 {
            let g = generate_random(&GeneratorBounds::new(seed, 5, 5, 3, 3)).unwrap();
            for a in g.vertices() {
                let val = g.val(a).unwrap();
                let mu = g.multiplicity(a).unwrap();
                loops |= val == 1 && mu > 1;
                truncated |= val == 1 && mu == 1;
                repeats |= g.polygons().iter().any(|p| p.members.count(a) > 1);
            }
        }
        assert!(loops && repeats && truncated);
    }

    #[test]
    fn set_polygon_bounds() {
        for seed in 0..100 {
            let g = generate_random(&GeneratorBounds::set_polygons(seed, 5, 5)).unwrap();
            assert!(g.explicit_multiplicities().is_empty());
            assert!(g
                .polygons()
                .iter()
                .all(|p| p.members.iter().all(|(_, c)| c == 1)));
        }
    }

    #[test]
    fn unsatisfiable_and_bad_bounds() {
        // One set polygon with μ ≡ 1 can never satisfy C3.
        assert_eq!(
            generate_random(&GeneratorBounds::set_polygons(0, 5, 1)),
            Err(Error::Unsatisfiable {
                attempts: MAX_ATTEMPTS
            })
        );
        assert!(matches!(
            generate_random(&GeneratorBounds::new(0, 0, 5, 3, 3)),
            Err(Error::InvalidBounds(_))
        ));
    }
}
