//! The quadric linear system through the five reference points of
//! projective 3-space and the rational map it defines into projective
//! 4-space, whose image is a ten-nodal cubic.

use num_traits::Zero;

use crate::exact::linalg::vanishing_forms;
use crate::exact::poly::MultiPoly;
use crate::exact::scalar::{int, Scalar};
use crate::proj::{reference_points, ProjPoint, Sampler};

/// The degree-2 linear system `|2h - q1 - ... - q5|` with the reference
/// points as base locus, and the map to projective 4-space it defines.
pub struct CastelnuovoMap {
    base_points: Vec<ProjPoint>,
    quadrics: Vec<MultiPoly>,
}

impl CastelnuovoMap {
    pub fn new() -> Self {
        let base_points = reference_points(4);
        let pts: Vec<Vec<Scalar>> = base_points.iter().map(|p| p.coords().to_vec()).collect();
        let quadrics = vanishing_forms(&pts, 4, 2);
        assert_eq!(quadrics.len(), 5, "the quadric system must be 5-dimensional");
        CastelnuovoMap {
            base_points,
            quadrics,
        }
    }

    pub fn base_points(&self) -> &[ProjPoint] {
        &self.base_points
    }

    pub fn quadrics(&self) -> &[MultiPoly] {
        &self.quadrics
    }

    /// Every basis quadric is supported on the mixed monomials `u_i u_j`
    /// and its coefficients sum to zero.
    pub fn basis_has_castelnuovo_shape(&self) -> bool {
        self.quadrics.iter().all(|q| {
            let mut coeff_sum = int(0);
            for (exps, c) in q.terms() {
                if exps.iter().any(|&e| e > 1) {
                    return false; // a square monomial u_i^2
                }
                coeff_sum += c;
            }
            coeff_sum.is_zero()
        })
    }

    /// Image of a point, `None` exactly on the base locus.
    pub fn evaluate(&self, p: &ProjPoint) -> Option<ProjPoint> {
        let image: Vec<Scalar> = self
            .quadrics
            .iter()
            .map(|q| q.evaluate(p.coords()))
            .collect();
        ProjPoint::try_new(image)
    }

    /// Seeded generic images of the map.
    pub fn sample_images(&self, sampler: &mut Sampler, count: usize) -> Vec<ProjPoint> {
        let mut out = Vec::with_capacity(count);
        while out.len() < count {
            if let Some(img) = sampler.map_image(&self.quadrics, 4) {
                out.push(img);
            }
        }
        out
    }

    /// Interpolates the image at the given degree; returns the basis of
    /// forms vanishing on all sampled images.
    pub fn interpolate_image(&self, images: &[ProjPoint], degree: u32) -> Vec<MultiPoly> {
        let pts: Vec<Vec<Scalar>> = images.iter().map(|p| p.coords().to_vec()).collect();
        vanishing_forms(&pts, 5, degree)
    }

    /// Image of the line joining base points `i` and `j`, computed from
    /// three distinct sample points on the line. All three images must
    /// agree as one projective point for the result to be `Some`.
    pub fn line_image(&self, i: usize, j: usize) -> Option<ProjPoint> {
        let (qi, qj) = (&self.base_points[i], &self.base_points[j]);
        let params = [(1i64, 1i64), (1, 2), (2, 1)];
        let mut images = Vec::new();
        for (a, b) in params {
            let p = ProjPoint::combine(&int(a), qi, &int(b), qj)?;
            images.push(self.evaluate(&p)?);
        }
        if images[0] == images[1] && images[1] == images[2] {
            Some(images[0].clone())
        } else {
            None
        }
    }

    /// All ten line images, in index order.
    pub fn all_line_images(&self) -> Vec<Option<ProjPoint>> {
        let mut out = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                out.push(self.line_image(i, j));
            }
        }
        out
    }
}

impl Default for CastelnuovoMap {
    fn default() -> Self {
        Self::new()
    }
}

/// Whether a point is a singular point of the hypersurface (all partials
/// vanish; for a homogeneous form this implies membership).
pub fn hypersurface_singular_at(f: &MultiPoly, p: &ProjPoint) -> bool {
    f.gradient_at(p.coords()).iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadrics_vanish_at_all_base_points() {
        let map = CastelnuovoMap::new();
        for q in map.quadrics() {
            for p in map.base_points() {
                assert!(q.evaluate(p.coords()).is_zero());
            }
        }
        assert!(map.basis_has_castelnuovo_shape());
    }

    #[test]
    fn image_lies_on_a_unique_cubic_with_ten_singular_line_images() {
        let map = CastelnuovoMap::new();
        let mut sampler = Sampler::new(2024);
        let images = map.sample_images(&mut sampler, 40);
        let cubic_basis = map.interpolate_image(&images, 3);
        assert_eq!(cubic_basis.len(), 1, "image cubic must be unique");
        let cubic = &cubic_basis[0];

        let line_images = map.all_line_images();
        assert_eq!(line_images.len(), 10);
        let mut distinct = std::collections::HashSet::new();
        for img in line_images {
            let img = img.expect("line image must be a single well-defined point");
            assert!(hypersurface_singular_at(cubic, &img));
            distinct.insert(img);
        }
        assert_eq!(distinct.len(), 10, "the ten images are distinct nodes");
    }
}
