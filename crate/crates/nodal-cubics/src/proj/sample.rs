//! Seeded deterministic sampling of rational points.
//!
//! Coordinates are drawn as small integers (|value| <= 100) to control
//! coefficient growth in the exact elimination downstream. Degenerate draws
//! are the caller's problem: every sampler here either retries internally a
//! bounded number of times or returns `Option`.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exact::poly::MultiPoly;
use crate::exact::scalar::{int, Scalar};

use super::point::ProjPoint;

const MAX_COORD: i64 = 100;
const RETRIES: usize = 64;

/// Deterministic point sampler; the same seed yields the same stream.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn small_int(&mut self) -> i64 {
        self.rng.random_range(-MAX_COORD..=MAX_COORD)
    }

    pub fn small_scalar(&mut self) -> Scalar {
        int(self.small_int())
    }

    /// Integer in a caller-chosen symmetric range.
    pub fn int_in(&mut self, bound: i64) -> i64 {
        self.rng.random_range(-bound..=bound)
    }

    /// Random point of projective space with the given number of
    /// homogeneous coordinates.
    pub fn proj_point(&mut self, coords: usize) -> ProjPoint {
        for _ in 0..RETRIES {
            let v: Vec<Scalar> = (0..coords).map(|_| self.small_scalar()).collect();
            if let Some(p) = ProjPoint::try_new(v) {
                return p;
            }
        }
        unreachable!("all-zero draws {RETRIES} times in a row");
    }

    /// Random point on the hyperplane where the coordinates sum to zero.
    pub fn proj_point_sum_zero(&mut self, coords: usize) -> ProjPoint {
        for _ in 0..RETRIES {
            let mut v: Vec<Scalar> = (0..coords - 1).map(|_| self.small_scalar()).collect();
            let last: Scalar = -v.iter().sum::<Scalar>();
            v.push(last);
            if let Some(p) = ProjPoint::try_new(v) {
                return p;
            }
        }
        unreachable!("all-zero draws {RETRIES} times in a row");
    }

    /// Random point on the line spanned by `a` and `b`.
    pub fn point_on_line(&mut self, a: &ProjPoint, b: &ProjPoint) -> ProjPoint {
        loop {
            let (s, t) = (int(self.int_in(20)), int(self.int_in(20)));
            if let Some(p) = ProjPoint::combine(&s, a, &t, b) {
                return p;
            }
        }
    }

    /// Image of a random parameter point under a polynomial map, retrying
    /// past base points; `None` once the retry budget is exhausted.
    pub fn map_image(&mut self, map: &[MultiPoly], param_coords: usize) -> Option<ProjPoint> {
        for _ in 0..RETRIES {
            let p = self.proj_point(param_coords);
            let image: Vec<Scalar> = map.iter().map(|q| q.evaluate(p.coords())).collect();
            if let Some(img) = ProjPoint::try_new(image) {
                return Some(img);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn fixed_seed_reproduces_the_point() {
        let p1 = Sampler::new(7).proj_point(4);
        let p2 = Sampler::new(7).proj_point(4);
        assert_eq!(p1, p2);
        let q = Sampler::new(8).proj_point(4);
        assert_ne!(p1, q, "different seeds should give different points");
    }

    #[test]
    fn images_of_the_split_quadric_parametrization_lie_on_it() {
        // (u, v; s, w) -> (us, uw, vs, vw) satisfies t0*t3 - t1*t2 = 0.
        let m = |e: Vec<u32>| MultiPoly::from_terms(4, [(e, int(1))]);
        let map = vec![
            m(vec![1, 0, 1, 0]),
            m(vec![1, 0, 0, 1]),
            m(vec![0, 1, 1, 0]),
            m(vec![0, 1, 0, 1]),
        ];
        let mut s = Sampler::new(11);
        for _ in 0..10 {
            let img = s.map_image(&map, 4).unwrap();
            let c = img.coords();
            assert!((&c[0] * &c[3] - &c[1] * &c[2]).is_zero());
        }
    }

    #[test]
    fn line_points_satisfy_the_dual_equations() {
        use crate::proj::subspace::LinearSubspace;
        let a = ProjPoint::from_ints(&[1, 2, 3, 4]);
        let b = ProjPoint::from_ints(&[0, 1, 0, -1]);
        let line = LinearSubspace::span_of(&[a.clone(), b.clone()]);
        let mut s = Sampler::new(3);
        for _ in 0..10 {
            let p = s.point_on_line(&a, &b);
            assert!(line.contains(&p));
        }
    }
}
