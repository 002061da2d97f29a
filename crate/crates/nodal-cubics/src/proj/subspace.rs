//! Linear subspaces of projective space with dual presentations.

use num_traits::Zero;

use crate::exact::linalg::{nullspace, rref};
use crate::exact::matrix::ScalarMatrix;
use crate::exact::scalar::Scalar;

use super::point::ProjPoint;

/// A linear subspace carried in both presentations at once: a spanning set
/// of homogeneous vectors and the linear forms cutting it out. Both are
/// stored in reduced echelon form, so two equal subspaces compare equal
/// componentwise.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LinearSubspace {
    /// Homogeneous coordinate count of the ambient projective space.
    coords: usize,
    span: Vec<Vec<Scalar>>,
    dual: Vec<Vec<Scalar>>,
}

impl LinearSubspace {
    /// Smallest subspace containing all the points. Panics on empty input or
    /// mismatched ambient dimensions.
    pub fn span_of(points: &[ProjPoint]) -> Self {
        assert!(!points.is_empty(), "span of no points");
        let coords = points[0].len();
        assert!(points.iter().all(|p| p.len() == coords));
        let rows: Vec<Vec<Scalar>> = points.iter().map(|p| p.coords().to_vec()).collect();
        Self::from_span_rows(coords, rows)
    }

    fn from_span_rows(coords: usize, rows: Vec<Vec<Scalar>>) -> Self {
        let span = rref(&rows);
        let dual = nullspace(&ScalarMatrix::from_rows(span.clone()));
        let dual = rref(&dual);
        LinearSubspace { coords, span, dual }
    }

    /// Subspace cut out by the given linear forms (coefficient vectors).
    pub fn from_equations(coords: usize, forms: Vec<Vec<Scalar>>) -> Self {
        assert!(forms.iter().all(|f| f.len() == coords));
        let dual = rref(&forms);
        let span = nullspace(&ScalarMatrix::from_rows(dual.clone()));
        let span = rref(&span);
        LinearSubspace { coords, span, dual }
    }

    pub fn ambient_coords(&self) -> usize {
        self.coords
    }

    /// Projective dimension (span rank minus one).
    pub fn proj_dim(&self) -> usize {
        self.span.len() - 1
    }

    pub fn span_rank(&self) -> usize {
        self.span.len()
    }

    pub fn span_basis(&self) -> &[Vec<Scalar>] {
        &self.span
    }

    pub fn dual_equations(&self) -> &[Vec<Scalar>] {
        &self.dual
    }

    /// True iff every dual equation vanishes at the point.
    pub fn contains(&self, p: &ProjPoint) -> bool {
        assert_eq!(p.len(), self.coords, "ambient dimension mismatch");
        self.dual.iter().all(|form| {
            form.iter()
                .zip(p.coords())
                .map(|(a, x)| a * x)
                .sum::<Scalar>()
                .is_zero()
        })
    }

    /// Image under a coordinate permutation (slot `i` moves to `perm[i]`).
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.coords);
        let permute = |v: &Vec<Scalar>| {
            let mut out = vec![Scalar::zero(); v.len()];
            for (i, &j) in perm.iter().enumerate() {
                out[j] = v[i].clone();
            }
            out
        };
        Self::from_span_rows(self.coords, self.span.iter().map(permute).collect())
    }

    /// Spanning vectors as the columns of a matrix, parametrizing the
    /// subspace: substituting this matrix into a form restricts it to the
    /// subspace.
    pub fn param_matrix(&self) -> ScalarMatrix {
        ScalarMatrix::from_cols(self.span.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::ints;

    #[test]
    fn line_through_two_points() {
        let a = ProjPoint::from_ints(&[1, 0, 0]);
        let b = ProjPoint::from_ints(&[0, 1, 1]);
        let line = LinearSubspace::span_of(&[a.clone(), b.clone()]);
        assert_eq!(line.span_rank(), 2);
        assert_eq!(line.dual_equations().len(), 1);
        assert!(line.contains(&a));
        assert!(line.contains(&b));
        assert!(line.contains(&ProjPoint::from_ints(&[3, -1, -1])));
        assert!(!line.contains(&ProjPoint::from_ints(&[0, 1, 0])));
    }

    #[test]
    fn rank_sum_invariant() {
        let s = LinearSubspace::from_equations(
            6,
            vec![ints(&[1, 1, 0, 0, 0, 0]), ints(&[0, 0, 1, 1, 0, 0]), ints(&[0, 0, 0, 0, 1, 1])],
        );
        assert_eq!(s.span_rank() + s.dual_equations().len(), 6);
        assert_eq!(s.proj_dim(), 2);
        assert!(s.contains(&ProjPoint::from_ints(&[1, -1, 1, -1, 1, -1])));
    }

    #[test]
    fn presentations_agree_regardless_of_construction() {
        let via_points = LinearSubspace::span_of(&[
            ProjPoint::from_ints(&[1, -1, 0, 0]),
            ProjPoint::from_ints(&[0, 0, 1, -1]),
        ]);
        let via_forms = LinearSubspace::from_equations(
            4,
            vec![ints(&[1, 1, 0, 0]), ints(&[0, 0, 1, 1])],
        );
        assert_eq!(via_points, via_forms);
    }
}
