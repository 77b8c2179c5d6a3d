//! Paths and circuit weights, conservativity, the core groupoid, and seeded
//! generators for test data.

pub mod conservativity;
pub mod core;
pub mod generate;
pub mod paths;

use serde::Serialize;

pub use self::conservativity::{
    circuit_sweep, conservative_oracle, face2_commutes, is_conservative, potential_check, CircuitSweep,
    ConservativityReport, FaceCheck, FaceWitness, PotentialCheck,
};
pub use self::core::{core_arrows, is_uniform, CoreArrowSet, DefectPair, UniformityReport};
pub use self::generate::{random_conservative, random_conservative_in, random_perturbed};
pub use self::paths::{path_weight, Direction, PathStep, WeightedPath};

use rand::RngCore;

/// Outcome of running both deciders over generated populations.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremSweep {
    pub n: usize,
    pub instances: usize,
    pub agreements: usize,
    /// Largest face holonomy deviation over the conservative population.
    pub max_conservative_deviation: f64,
    /// Seeds of instances on which the two deciders disagreed, with the
    /// population they came from.
    pub disagreements: Vec<(String, u64)>,
}

/// Generates `trials` conservative and `trials` perturbed skeletons of
/// dimension `n` and compares [`is_conservative`] with
/// [`conservative_oracle`] on each. Instance seeds are drawn from a stream
/// seeded with `seed`.
pub fn verify_theorem(n: usize, trials: usize, seed: u64, tol: f64) -> TheoremSweep {
    let mut seeds = generate::rng(seed);
    let mut sweep = TheoremSweep {
        n,
        instances: 0,
        agreements: 0,
        max_conservative_deviation: 0.0,
        disagreements: Vec::new(),
    };
    for _ in 0..trials {
        let s = seeds.next_u64();
        let t = random_conservative(n, s);
        let report = is_conservative(&t, tol);
        sweep.max_conservative_deviation = sweep.max_conservative_deviation.max(report.max_deviation);
        sweep.record("conservative", s, report.verdict, conservative_oracle(&t, tol), true);

        let s = seeds.next_u64();
        let (p, _) = random_perturbed(n, s);
        sweep.record(
            "perturbed",
            s,
            is_conservative(&p, tol).verdict,
            conservative_oracle(&p, tol),
            false,
        );
    }
    sweep
}

impl TheoremSweep {
    fn record(&mut self, population: &str, seed: u64, faces: bool, oracle: bool, expected: bool) {
        self.instances += 1;
        if faces == oracle && faces == expected {
            self.agreements += 1;
        } else {
            self.disagreements.push((population.to_owned(), seed));
        }
    }

    pub fn all_agree(&self) -> bool {
        self.agreements == self.instances
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_agree() {
        for n in 2..=4 {
            let s = verify_theorem(n, 10, 1, 1e-9);
            assert_eq!(s.instances, 20);
            assert!(s.all_agree(), "{:?}", s.disagreements);
            assert!(s.max_conservative_deviation < 1e-8);
        }
    }

    #[test]
    fn sweep_is_deterministic() {
        assert_eq!(verify_theorem(3, 5, 9, 1e-9), verify_theorem(3, 5, 9, 1e-9));
    }
}
