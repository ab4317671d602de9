//! Seeded random inputs. Every sample draws from its own ChaCha stream, so
//! results do not depend on evaluation order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::endo::Endo7;
use crate::exterior::basis;
use crate::exterior::{Form, Vec7};
use crate::scalar::Scalar;

pub const DEFAULT_RANGE: i64 = 9;

pub struct Sampler {
    rng: ChaCha8Rng,
    range: i64,
}

impl Sampler {
    /// Integers are drawn uniformly from [−range, range]; `range` ≥ 1.
    pub fn new(seed: u64, range: i64) -> Self {
        assert!(range >= 1, "sampling range must be positive");
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            range,
        }
    }

    /// Independent stream for sample `index` of check group `group`.
    pub fn for_sample(seed: u64, range: i64, group: u32, index: u64) -> Self {
        let mut s = Self::new(seed, range);
        s.rng.set_stream((u64::from(group) << 40) | index);
        s
    }

    pub fn int(&mut self) -> i64 {
        self.rng.random_range(-self.range..=self.range)
    }

    /// n/d with n ∈ [−range, range], d ∈ [1, range].
    pub fn rational<S: Scalar>(&mut self) -> S {
        let n = self.int();
        let d = self.rng.random_range(1..=self.range);
        S::ratio(n, d)
    }

    pub fn int_vec<S: Scalar>(&mut self) -> Vec7<S> {
        Vec7(std::array::from_fn(|_| S::from_int(self.int())))
    }

    pub fn rational_vec<S: Scalar>(&mut self) -> Vec7<S> {
        Vec7(std::array::from_fn(|_| self.rational()))
    }

    pub fn int_endo<S: Scalar>(&mut self) -> Endo7<S> {
        Endo7::from_fn(|_, _| S::from_int(self.int()))
    }

    pub fn symmetric_endo<S: Scalar>(&mut self) -> Endo7<S> {
        let mut a = Endo7::zero();
        for i in 0..7 {
            for j in i..7 {
                let x = S::from_int(self.int());
                a.set(j, i, x.clone());
                a.set(i, j, x);
            }
        }
        a
    }

    pub fn int_form<S: Scalar>(&mut self, degree: usize) -> Form<S> {
        let coeffs = (0..basis::dim(degree))
            .map(|_| S::from_int(self.int()))
            .collect();
        Form::from_coeffs(degree, coeffs).expect("degree within range")
    }
}
