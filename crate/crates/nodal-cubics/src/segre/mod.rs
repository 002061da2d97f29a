//! The Segre cubic primal and its verification machinery: nodes, planes,
//! the incidence configuration, node charts, the associated sextic curve,
//! and the classical maps out of it.

pub mod castelnuovo;
pub mod chart;
pub mod coble;
pub mod kummer;
pub mod weddle;

use num_traits::Zero;

use crate::exact::linalg::{nullspace, rank_of_rows};
use crate::exact::matrix::ScalarMatrix;
use crate::exact::poly::MultiPoly;
use crate::exact::scalar::{int, Scalar};
use crate::proj::{orbit, LinearSubspace, PermAction, ProjPoint, Sampler};

pub use chart::{node_chart, ChartError, NodeChart};

/// A cubic threefold, either as a cubic form in five variables, or as a
/// cubic form in six variables together with a linear constraint cutting
/// the ambient space down to a hyperplane.
#[derive(Clone, Debug)]
pub struct CubicThreefold {
    equation: MultiPoly,
    constraint: Option<MultiPoly>,
}

impl CubicThreefold {
    pub fn new(equation: MultiPoly, constraint: Option<MultiPoly>) -> Self {
        assert!(!equation.is_zero(), "cubic equation must be nonzero");
        assert!(equation.is_homogeneous(3), "equation must be a cubic form");
        if let Some(c) = &constraint {
            assert!(c.is_homogeneous(1) && !c.is_zero(), "constraint must be linear");
            assert_eq!(c.vars(), equation.vars());
        }
        CubicThreefold {
            equation,
            constraint,
        }
    }

    pub fn equation(&self) -> &MultiPoly {
        &self.equation
    }

    pub fn constraint(&self) -> Option<&MultiPoly> {
        self.constraint.as_ref()
    }

    /// Homogeneous coordinate count of the ambient projective space.
    pub fn coords(&self) -> usize {
        self.equation.vars()
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.equation.evaluate(p.coords()).is_zero()
            && self
                .constraint
                .as_ref()
                .map_or(true, |c| c.evaluate(p.coords()).is_zero())
    }

    /// Singularity test that avoids any division: the gradient of the cubic
    /// must be proportional to the gradient of the constraint (or vanish
    /// outright when there is none).
    pub fn singular_at(&self, p: &ProjPoint) -> bool {
        if !self.contains(p) {
            return false;
        }
        let grad = self.equation.gradient_at(p.coords());
        match &self.constraint {
            None => grad.iter().all(Zero::is_zero),
            Some(c) => {
                let cgrad: Vec<Scalar> = (0..c.vars())
                    .map(|i| c.partial(i).evaluate(p.coords()))
                    .collect();
                rank_of_rows(&[grad, cgrad]) <= 1
            }
        }
    }

    /// Full per-point report: membership, singularity, and whether the
    /// singularity is an ordinary double point (nondegenerate local
    /// quadratic form, rank 4 for a threefold).
    pub fn point_report(&self, p: &ProjPoint) -> PointReport {
        let on_variety = self.contains(p);
        let singular = on_variety && self.singular_at(p);
        let ordinary_double_point = singular && node_chart(self, p).is_ok();
        PointReport {
            point: p.clone(),
            on_variety,
            singular,
            ordinary_double_point,
        }
    }

    /// Basis of the constraint hyperplane (all coordinates when there is no
    /// constraint).
    fn constraint_kernel(&self) -> Vec<Vec<Scalar>> {
        match &self.constraint {
            None => (0..self.coords())
                .map(|i| {
                    let mut v = vec![int(0); self.coords()];
                    v[i] = int(1);
                    v
                })
                .collect(),
            Some(c) => {
                let coeffs: Vec<Scalar> = (0..c.vars())
                    .map(|i| c.coeff(&unit_exp(c.vars(), i)))
                    .collect();
                nullspace(&ScalarMatrix::from_rows(vec![coeffs]))
            }
        }
    }

    /// Random point of the ambient space satisfying the linear constraint.
    fn sample_ambient(&self, sampler: &mut Sampler) -> ProjPoint {
        let kernel = self.constraint_kernel();
        loop {
            let mut v = vec![int(0); self.coords()];
            for basis in &kernel {
                let c = int(sampler.int_in(20));
                for (vi, bi) in v.iter_mut().zip(basis) {
                    *vi += &c * bi;
                }
            }
            if let Some(p) = ProjPoint::try_new(v) {
                return p;
            }
        }
    }

    /// Exact rational point of the cubic: the residual intersection of the
    /// cubic with a line through one of its nodes. A line through a double
    /// point meets the cubic twice there, so the third intersection point
    /// is rational whenever it exists.
    pub fn residual_point(&self, node: &ProjPoint, other: &ProjPoint) -> Option<ProjPoint> {
        let grad_at_other = self.equation.gradient_at(other.coords());
        let polar: Scalar = grad_at_other
            .iter()
            .zip(node.coords())
            .map(|(g, x)| g * x)
            .sum();
        if polar.is_zero() {
            return None;
        }
        let value = self.equation.evaluate(other.coords());
        let p = ProjPoint::combine(&value, node, &-polar, other)?;
        if &p == node {
            return None;
        }
        debug_assert!(self.contains(&p));
        Some(p)
    }

    /// Seeded sample of a point on the cubic, through the given node.
    pub fn sample_point_through_node(
        &self,
        node: &ProjPoint,
        sampler: &mut Sampler,
    ) -> ProjPoint {
        loop {
            let r = self.sample_ambient(sampler);
            if let Some(p) = self.residual_point(node, &r) {
                return p;
            }
        }
    }

    /// Seeded sample of a nonsingular point on the cubic.
    pub fn sample_smooth_point(&self, node: &ProjPoint, sampler: &mut Sampler) -> ProjPoint {
        loop {
            let p = self.sample_point_through_node(node, sampler);
            if !self.singular_at(&p) {
                return p;
            }
        }
    }
}

fn unit_exp(vars: usize, i: usize) -> Vec<u32> {
    let mut e = vec![0; vars];
    e[i] = 1;
    e
}

/// Membership/singularity verdict for one candidate point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointReport {
    pub point: ProjPoint,
    pub on_variety: bool,
    pub singular: bool,
    pub ordinary_double_point: bool,
}

/// Reports for a batch of candidates.
pub fn singular_points_check(x: &CubicThreefold, candidates: &[ProjPoint]) -> Vec<PointReport> {
    candidates.iter().map(|p| x.point_report(p)).collect()
}

/// The Segre cubic: sum of cubes in six coordinates restricted to the
/// hyperplane where the coordinates sum to zero.
pub fn build_segre() -> CubicThreefold {
    let cubes = MultiPoly::from_terms(
        6,
        (0..6).map(|i| {
            let mut e = vec![0; 6];
            e[i] = 3;
            (e, int(1))
        }),
    );
    let sum = MultiPoly::linear_form(&vec![int(1); 6]);
    CubicThreefold::new(cubes, Some(sum))
}

/// The ten nodes: the coordinate-permutation orbit of `[1,1,1,-1,-1,-1]`.
pub fn segre_nodes() -> Vec<ProjPoint> {
    orbit(
        &ProjPoint::from_ints(&[1, 1, 1, -1, -1, -1]),
        &PermAction::symmetric(6),
    )
}

/// The fifteen planes: the orbit of `t0+t1 = t2+t3 = t4+t5 = 0`.
pub fn segre_planes() -> Vec<LinearSubspace> {
    let seed = LinearSubspace::from_equations(
        6,
        vec![
            crate::exact::scalar::ints(&[1, 1, 0, 0, 0, 0]),
            crate::exact::scalar::ints(&[0, 0, 1, 1, 0, 0]),
            crate::exact::scalar::ints(&[0, 0, 0, 0, 1, 1]),
        ],
    );
    orbit(&seed, &PermAction::symmetric(6))
}

/// Incidence bookkeeping between the nodes and planes of a cubic.
#[derive(Clone, Debug)]
pub struct IncidenceReport {
    pub plane_count: usize,
    pub node_count: usize,
    /// Whether each plane, substituted parametrically, kills the equation
    /// and the constraint identically.
    pub all_planes_on_cubic: bool,
    pub nodes_per_plane: Vec<usize>,
    pub planes_per_node: Vec<usize>,
    pub incidence_total: usize,
}

impl IncidenceReport {
    /// The (15_4, 10_6) configuration with double count 60.
    pub fn is_segre_configuration(&self) -> bool {
        self.plane_count == 15
            && self.node_count == 10
            && self.all_planes_on_cubic
            && self.nodes_per_plane.iter().all(|&n| n == 4)
            && self.planes_per_node.iter().all(|&n| n == 6)
            && self.incidence_total == 60
    }
}

/// Checks that every plane lies on the cubic and tallies the incidences.
pub fn plane_incidence(
    x: &CubicThreefold,
    planes: &[LinearSubspace],
    nodes: &[ProjPoint],
) -> IncidenceReport {
    let mut all_planes_on_cubic = true;
    for plane in planes {
        let param = plane.param_matrix();
        if !x.equation.substitute_linear(&param).is_zero() {
            all_planes_on_cubic = false;
        }
        if let Some(c) = &x.constraint {
            if !c.substitute_linear(&param).is_zero() {
                all_planes_on_cubic = false;
            }
        }
    }
    let nodes_per_plane: Vec<usize> = planes
        .iter()
        .map(|pl| nodes.iter().filter(|n| pl.contains(n)).count())
        .collect();
    let planes_per_node: Vec<usize> = nodes
        .iter()
        .map(|n| planes.iter().filter(|pl| pl.contains(n)).count())
        .collect();
    let incidence_total = nodes_per_plane.iter().sum();
    IncidenceReport {
        plane_count: planes.len(),
        node_count: nodes.len(),
        all_planes_on_cubic,
        nodes_per_plane,
        planes_per_node,
        incidence_total,
    }
}

/// Exhaustive collinearity scan: true iff no three of the points are
/// collinear.
pub fn no_three_collinear(points: &[ProjPoint]) -> bool {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if crate::proj::collinear(&[&points[i], &points[j], &points[k]]) {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::ints;

    #[test]
    fn segre_equation_values() {
        let x = build_segre();
        let node = ProjPoint::from_ints(&[1, 1, 1, -1, -1, -1]);
        assert!(x.contains(&node));
        // Coordinate points satisfy the cubic but not the constraint.
        let e0 = ProjPoint::from_ints(&[1, 0, 0, 0, 0, 0]);
        assert_eq!(x.equation().evaluate(e0.coords()), int(1));
        assert!(!x.contains(&e0));
    }

    #[test]
    fn segre_orbits_have_expected_sizes() {
        assert_eq!(segre_nodes().len(), 10);
        assert_eq!(segre_planes().len(), 15);
    }

    #[test]
    fn all_nodes_are_ordinary_double_points() {
        let x = build_segre();
        for report in singular_points_check(&x, &segre_nodes()) {
            assert!(report.on_variety, "{:?}", report.point);
            assert!(report.singular, "{:?}", report.point);
            assert!(report.ordinary_double_point, "{:?}", report.point);
        }
    }

    #[test]
    fn incidence_is_the_segre_configuration() {
        let x = build_segre();
        let rep = plane_incidence(&x, &segre_planes(), &segre_nodes());
        assert!(rep.is_segre_configuration(), "{rep:?}");
    }

    #[test]
    fn matching_plane_contains_alternating_point() {
        let plane = LinearSubspace::from_equations(
            6,
            vec![ints(&[1, 1, 0, 0, 0, 0]), ints(&[0, 0, 1, 1, 0, 0]), ints(&[0, 0, 0, 0, 1, 1])],
        );
        assert!(plane.contains(&ProjPoint::from_ints(&[1, -1, 1, -1, 1, -1])));
        assert!(!plane.contains(&ProjPoint::from_ints(&[1, 0, 0, 0, 0, -1])));
    }

    #[test]
    fn hyperplane_contains_every_node() {
        let h = LinearSubspace::from_equations(6, vec![ints(&[1, 1, 1, 1, 1, 1])]);
        for n in segre_nodes() {
            assert!(h.contains(&n));
        }
    }

    #[test]
    fn no_three_nodes_collinear() {
        assert!(no_three_collinear(&segre_nodes()));
    }

    #[test]
    fn sampled_points_lie_on_the_cubic_and_are_generically_smooth() {
        let x = build_segre();
        let nodes = segre_nodes();
        let mut s = Sampler::new(5);
        let p = x.sample_smooth_point(&nodes[0], &mut s);
        assert!(x.contains(&p));
        assert!(!x.singular_at(&p));
    }

    #[test]
    fn residual_sampling_is_deterministic() {
        let x = build_segre();
        let nodes = segre_nodes();
        let a = x.sample_point_through_node(&nodes[0], &mut Sampler::new(42));
        let b = x.sample_point_through_node(&nodes[0], &mut Sampler::new(42));
        assert_eq!(a, b);
    }
}
