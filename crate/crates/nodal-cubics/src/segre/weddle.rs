//! The Weddle quartic: the locus of singular points of quadrics through
//! six general points of projective 3-space.

use std::fmt;

use crate::exact::linalg::vanishing_forms;
use crate::exact::matrix::PolyMatrix;
use crate::exact::poly::MultiPoly;
use crate::exact::scalar::Scalar;
use crate::proj::ProjPoint;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeddleError {
    WrongPointCount { got: usize },
    /// The quadric system through the points is not 4-dimensional, so the
    /// configuration is degenerate (e.g. four points coplanar).
    DegenerateQuadricSystem { dim: usize },
}

impl fmt::Display for WeddleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeddleError::WrongPointCount { got } => {
                write!(f, "expected 6 points, got {got}")
            }
            WeddleError::DegenerateQuadricSystem { dim } => {
                write!(f, "quadric system has dimension {dim}, expected 4")
            }
        }
    }
}

impl std::error::Error for WeddleError {}

/// Builds the Weddle surface of six points: the determinant of the 4x4
/// matrix whose columns are the gradients of a basis of the quadrics
/// through the points. A point lies on the locus iff some quadric of the
/// family is singular there, i.e. iff the four gradients are dependent.
pub fn weddle_surface(points: &[ProjPoint]) -> Result<MultiPoly, WeddleError> {
    if points.len() != 6 {
        return Err(WeddleError::WrongPointCount { got: points.len() });
    }
    let pts: Vec<Vec<Scalar>> = points.iter().map(|p| p.coords().to_vec()).collect();
    let quadrics = vanishing_forms(&pts, 4, 2);
    if quadrics.len() != 4 {
        return Err(WeddleError::DegenerateQuadricSystem {
            dim: quadrics.len(),
        });
    }
    let gradient_cols: Vec<Vec<MultiPoly>> = quadrics.iter().map(MultiPoly::gradient).collect();
    let matrix = PolyMatrix::from_rows(
        (0..4)
            .map(|r| (0..4).map(|c| gradient_cols[c][r].clone()).collect())
            .collect(),
    );
    Ok(matrix.det())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::proj::{reference_points, Sampler};
    use num_traits::Zero;

    fn six_points(seed: u64) -> Vec<ProjPoint> {
        let mut pts = reference_points(4); // e0..e3 and [1,1,1,1]
        let mut s = Sampler::new(seed);
        pts.push(s.proj_point(4));
        pts
    }

    #[test]
    fn weddle_is_a_quartic_through_the_six_points() {
        for seed in [1, 2, 3] {
            let pts = six_points(seed);
            let w = weddle_surface(&pts).unwrap();
            assert!(w.is_homogeneous(4), "degree must be 4");
            assert!(!w.is_zero());
            for p in &pts {
                assert!(w.evaluate(p.coords()).is_zero(), "must vanish at input point");
            }
        }
    }

    #[test]
    fn degenerate_input_is_rejected() {
        // Six points with four on a plane and three collinear collapse the
        // quadric system dimension — here: too few points.
        assert!(matches!(
            weddle_surface(&reference_points(4)),
            Err(WeddleError::WrongPointCount { got: 5 })
        ));
    }
}
