use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::rng_from_seed;
use crate::state;

/// Default cap on the number of chain states (orders up to 16 bits).
pub const DEFAULT_STATE_CAP: usize = 1 << 16;

/// How to obtain the per-state type-1 transition probabilities.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum P1Spec {
    /// Explicit vector of length `2^order`.
    Explicit(Vec<f64>),
    /// Entries drawn independently, uniform on `[floor, 1 - floor]`.
    Random { floor: f64, seed: u64 },
}

/// An order-k* binary Markov source.
///
/// State `s` has exactly two out-edges: a type-1 transition to
/// `shift(s, 1)` taken with probability `p1[s]`, and a type-0 transition
/// to `shift(s, 0)` with the remaining mass.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransitionModel {
    order: u32,
    p1: Vec<f64>,
}

impl TransitionModel {
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn num_states(&self) -> usize {
        state::num_states(self.order)
    }

    /// Probability of a type-1 transition out of `s`.
    pub fn p1(&self, s: usize) -> f64 {
        self.p1[s]
    }

    pub fn p1_vector(&self) -> &[f64] {
        &self.p1
    }

    /// Successor of `s` when bit `bit` is emitted.
    pub fn shift(&self, s: usize, bit: u8) -> usize {
        state::shift(s, bit, self.order)
    }

    /// Dense row-stochastic transition matrix (rows sum to 1 exactly:
    /// the two permitted out-edges carry `1 - p1` and `p1`).
    pub fn transition_matrix(&self) -> nalgebra::DMatrix<f64> {
        let n = self.num_states();
        let mut t = nalgebra::DMatrix::zeros(n, n);
        for s in 0..n {
            t[(s, self.shift(s, 0))] += 1.0 - self.p1[s];
            t[(s, self.shift(s, 1))] += self.p1[s];
        }
        t
    }

    /// Out-edges of `s` with nonzero probability.
    pub fn support_edges(&self, s: usize) -> impl Iterator<Item = usize> + '_ {
        let mut out = Vec::with_capacity(2);
        if self.p1[s] < 1.0 {
            out.push(self.shift(s, 0));
        }
        if self.p1[s] > 0.0 {
            out.push(self.shift(s, 1));
        }
        out.into_iter()
    }
}

/// Construct an order-k* source, validating shape and probability ranges.
///
/// Randomized construction is deterministic in the spec's seed.
pub fn build_source(order: u32, spec: &P1Spec, state_cap: usize) -> Result<TransitionModel> {
    if order == 0 {
        return Err(Error::InvalidOrder(order));
    }
    let implied = 1u128 << order;
    if order >= usize::BITS || implied > state_cap as u128 {
        return Err(Error::StateCapExceeded {
            order,
            implied,
            cap: state_cap,
        });
    }
    let n = 1usize << order;
    let p1 = match spec {
        P1Spec::Explicit(v) => {
            if v.len() != n {
                return Err(Error::WrongVectorLength {
                    expected: n,
                    got: v.len(),
                });
            }
            for (i, &p) in v.iter().enumerate() {
                if !(0.0..=1.0).contains(&p) {
                    return Err(Error::ProbabilityOutOfRange { index: i, value: p });
                }
            }
            v.clone()
        }
        P1Spec::Random { floor, seed } => {
            if !(0.0..0.5).contains(floor) {
                return Err(Error::Domain {
                    name: "floor",
                    value: *floor,
                    constraint: "0 <= floor < 1/2",
                });
            }
            let mut rng = rng_from_seed(*seed);
            (0..n)
                .map(|_| floor + rng.gen::<f64>() * (1.0 - 2.0 * floor))
                .collect()
        }
    };
    Ok(TransitionModel { order, p1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_one_places_masses() {
        let m = build_source(1, &P1Spec::Explicit(vec![0.3, 0.6]), DEFAULT_STATE_CAP).unwrap();
        let t = m.transition_matrix();
        assert_eq!(t[(0, 0)], 0.7);
        assert_eq!(t[(0, 1)], 0.3);
        assert_eq!(t[(1, 0)], 0.4);
        assert_eq!(t[(1, 1)], 0.6);
    }

    #[test]
    fn fair_coin_embeds_on_four_states() {
        let m = build_source(2, &P1Spec::Explicit(vec![0.5; 4]), DEFAULT_STATE_CAP).unwrap();
        let t = m.transition_matrix();
        for s in 0..4 {
            assert_eq!(t.row(s).sum(), 1.0);
            assert_eq!(t[(s, m.shift(s, 1))], 0.5);
        }
    }

    #[test]
    fn rows_sum_to_one_exactly_and_out_degree_two() {
        let m = build_source(
            3,
            &P1Spec::Random {
                floor: 0.05,
                seed: 9,
            },
            DEFAULT_STATE_CAP,
        )
        .unwrap();
        let t = m.transition_matrix();
        for s in 0..m.num_states() {
            assert_eq!(t.row(s).sum(), 1.0);
            assert_eq!(t.row(s).iter().filter(|&&v| v > 0.0).count(), 2);
        }
    }

    #[test]
    fn randomized_is_deterministic_in_seed() {
        let spec = P1Spec::Random {
            floor: 0.05,
            seed: 42,
        };
        let a = build_source(3, &spec, DEFAULT_STATE_CAP).unwrap();
        let b = build_source(3, &spec, DEFAULT_STATE_CAP).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(
            build_source(0, &P1Spec::Explicit(vec![]), DEFAULT_STATE_CAP),
            Err(Error::InvalidOrder(0))
        ));
        assert!(matches!(
            build_source(2, &P1Spec::Explicit(vec![0.5; 3]), DEFAULT_STATE_CAP),
            Err(Error::WrongVectorLength { expected: 4, got: 3 })
        ));
        assert!(matches!(
            build_source(1, &P1Spec::Explicit(vec![0.5, 1.2]), DEFAULT_STATE_CAP),
            Err(Error::ProbabilityOutOfRange { index: 1, .. })
        ));
        assert!(matches!(
            build_source(8, &P1Spec::Explicit(vec![0.5; 256]), 128),
            Err(Error::StateCapExceeded { .. })
        ));
    }
}
