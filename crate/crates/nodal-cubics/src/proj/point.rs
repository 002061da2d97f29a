//! Projective points with a canonical representative.

use std::fmt;

use crate::exact::scalar::{int, primitive, Scalar};

/// Point of projective space, stored as the primitive integer vector with
/// positive first nonzero coordinate. Equality, ordering, and hashing all
/// act on this canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjPoint {
    coords: Vec<Scalar>,
}

impl ProjPoint {
    /// Panics on the zero vector; use [`ProjPoint::try_new`] where the input
    /// may degenerate.
    pub fn new(coords: Vec<Scalar>) -> Self {
        Self::try_new(coords).expect("projective point cannot be the zero vector")
    }

    pub fn try_new(coords: Vec<Scalar>) -> Option<Self> {
        primitive(&coords).map(|coords| ProjPoint { coords })
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| int(c)).collect())
    }

    /// Number of homogeneous coordinates (projective dimension + 1).
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Scalar {
        &self.coords[i]
    }

    /// Image under a coordinate permutation: coordinate `i` moves to slot
    /// `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.coords.len());
        let mut out = vec![int(0); self.coords.len()];
        for (i, &j) in perm.iter().enumerate() {
            out[j] = self.coords[i].clone();
        }
        ProjPoint::new(out)
    }

    /// Drops coordinate `i`; `None` if the rest are all zero (the point was
    /// the centre of the projection).
    pub fn project_away(&self, i: usize) -> Option<Self> {
        let mut coords = self.coords.clone();
        coords.remove(i);
        Self::try_new(coords)
    }

    /// The coordinate point `e_i`.
    pub fn coordinate(coords: usize, i: usize) -> Self {
        let mut v = vec![int(0); coords];
        v[i] = int(1);
        ProjPoint { coords: v }
    }

    /// Linear combination `a * p + b * q` of two points in the same ambient
    /// space, if nonzero.
    pub fn combine(a: &Scalar, p: &ProjPoint, b: &Scalar, q: &ProjPoint) -> Option<Self> {
        assert_eq!(p.len(), q.len());
        let coords: Vec<Scalar> = p
            .coords
            .iter()
            .zip(&q.coords)
            .map(|(x, y)| a * x + b * y)
            .collect();
        Self::try_new(coords)
    }
}

/// The `n+2` reference points of projective n-space: the coordinate points
/// followed by the all-ones point.
pub fn reference_points(coords: usize) -> Vec<ProjPoint> {
    let mut pts: Vec<ProjPoint> = (0..coords).map(|i| ProjPoint::coordinate(coords, i)).collect();
    pts.push(ProjPoint::new(vec![int(1); coords]));
    pts
}

/// True iff all the points lie on a common line (matrix rank at most 2).
pub fn collinear(points: &[&ProjPoint]) -> bool {
    let rows: Vec<Vec<Scalar>> = points.iter().map(|p| p.coords().to_vec()).collect();
    crate::exact::linalg::rank_of_rows(&rows) <= 2
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
