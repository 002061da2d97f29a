//! Projection of the Segre cubic from a nonsingular point of itself.
//!
//! The projection is a 2:1 cover of projective 3-space (a general line
//! through the center meets the cubic in two residual points), and the
//! classical quartic — the Kummer surface — is its branch locus. Writing
//! the equation in coordinates adapted to the center as
//! `a1*t0^2 + a2*t0 + a3` (graded by the center coordinate), the branch
//! locus is the discriminant `a2^2 - 4*a1*a3`, a quartic in the four
//! projection coordinates.
//!
//! The verification samples exact rational points of the contact surface
//! (the cubic cut by the polar quadric of the center: inside each of the
//! fifteen planes the polar quadric cuts a conic through the plane's four
//! nodes, and a conic with a rational point is rationally parametrized),
//! projects them, and interpolates: degree 4 must have nullity exactly 1
//! and degree 3 nullity 0. The interpolated quartic is then compared with
//! the closed-form discriminant, which is computed independently.

use num_traits::Zero;

use crate::exact::linalg::{solve, vanishing_forms};
use crate::exact::matrix::ScalarMatrix;
use crate::exact::poly::MultiPoly;
use crate::exact::scalar::{int, Scalar};
use crate::proj::{LinearSubspace, ProjPoint, Sampler};

use super::chart::Frame;
use super::CubicThreefold;

pub struct KummerProjection {
    pub center: ProjPoint,
    /// Basis of degree-4 forms through the projected contact samples
    /// (expected size 1).
    pub quartic_basis: Vec<MultiPoly>,
    /// Basis of degree-3 forms through the same samples (expected empty).
    pub cubic_basis: Vec<MultiPoly>,
    /// The discriminant `a2^2 - 4*a1*a3` in the same projection
    /// coordinates, computed without any sampling.
    pub discriminant: MultiPoly,
    /// Projections of extra held-out samples.
    pub holdout_projections: Vec<ProjPoint>,
}

impl KummerProjection {
    pub fn quartic(&self) -> Option<&MultiPoly> {
        match self.quartic_basis.as_slice() {
            [q] => Some(q),
            _ => None,
        }
    }

    /// The interpolated quartic and the closed-form discriminant agree up
    /// to a scalar.
    pub fn matches_discriminant(&self) -> bool {
        let Some(q) = self.quartic() else {
            return false;
        };
        proportional(q, &self.discriminant)
    }

    /// The interpolated quartic vanishes at every held-out projection.
    pub fn holdouts_consistent(&self) -> bool {
        match self.quartic() {
            None => false,
            Some(q) => self
                .holdout_projections
                .iter()
                .all(|p| q.evaluate(p.coords()).is_zero()),
        }
    }
}

/// True iff the polynomials agree up to a nonzero scalar.
pub fn proportional(a: &MultiPoly, b: &MultiPoly) -> bool {
    if a.is_zero() || b.is_zero() {
        return a.is_zero() && b.is_zero();
    }
    let Some((exps, ca)) = a.terms().next() else {
        return false;
    };
    let cb = b.coeff(exps);
    if cb.is_zero() {
        return false;
    }
    let ratio = ca / &cb;
    &b.scale(&ratio) == a
}

/// Projects the cubic from the smooth point `center`, drawing
/// `sample_count` seeded exact points of the contact surface (plus
/// `holdout` extra ones) through the planes of the cubic.
pub fn kummer_projection(
    x: &CubicThreefold,
    planes: &[LinearSubspace],
    nodes: &[ProjPoint],
    center: &ProjPoint,
    sampler: &mut Sampler,
    sample_count: usize,
    holdout: usize,
) -> KummerProjection {
    assert!(
        x.contains(center) && !x.singular_at(center),
        "center must be a smooth point of the cubic"
    );
    let frame = Frame::at(x, center);
    let f = frame.local_equation();
    let a1 = f.coeff_of_power(0, 2).drop_var(0);
    let a2 = f.coeff_of_power(0, 1).drop_var(0);
    let a3 = f.coeff_of_power(0, 0).drop_var(0);
    assert!(!a1.is_zero(), "center is smooth, so the linear part is nonzero");
    let discriminant = &(&a2 * &a2) - &(&a1 * &a3).scale(&int(4));

    // Polar quadric of the center: sum of center coordinates times the
    // partials of the cubic.
    let polar = {
        let mut acc = MultiPoly::zero(x.coords());
        for (i, c) in center.coords().iter().enumerate() {
            acc = &acc + &x.equation().partial(i).scale(c);
        }
        acc
    };

    let mut projections: Vec<ProjPoint> = Vec::new();
    let mut plane_cursor = 0usize;
    let mut guard = 0usize;
    while projections.len() < sample_count + holdout {
        guard += 1;
        assert!(guard < 100_000, "contact-surface sampling failed to converge");
        let plane = &planes[plane_cursor % planes.len()];
        plane_cursor += 1;
        let Some(contact) = contact_point_in_plane(&polar, plane, nodes, sampler) else {
            continue;
        };
        let Some(proj) = frame.project_from_center(&contact) else {
            continue;
        };
        if !projections.contains(&proj) {
            projections.push(proj);
        }
    }
    let holdout_projections = projections.split_off(sample_count);
    let pts: Vec<Vec<Scalar>> = projections.iter().map(|p| p.coords().to_vec()).collect();
    KummerProjection {
        center: center.clone(),
        quartic_basis: vanishing_forms(&pts, 4, 4),
        cubic_basis: vanishing_forms(&pts, 4, 3),
        discriminant,
        holdout_projections,
    }
}

/// Rational point of the conic cut by the polar quadric on a plane of the
/// cubic, via the line through one of the plane's nodes.
fn contact_point_in_plane(
    polar: &MultiPoly,
    plane: &LinearSubspace,
    nodes: &[ProjPoint],
    sampler: &mut Sampler,
) -> Option<ProjPoint> {
    let param = plane.param_matrix();
    let conic = polar.substitute_linear(&param); // quadratic form in 3 plane parameters
    if conic.is_zero() {
        return None; // the plane lies inside the polar quadric
    }
    // Plane parameters of a node lying in the plane.
    let node = nodes.iter().find(|n| plane.contains(n))?;
    let z0 = solve(&param, node.coords())?;
    debug_assert!(conic.evaluate(&z0).is_zero(), "nodes lie on the polar quadric");
    for _ in 0..16 {
        let w: Vec<Scalar> = (0..3).map(|_| int(sampler.int_in(50))).collect();
        // Residual intersection of the conic with the line z0 + t*w:
        // conic(z0 + t w) = t * (2 B(z0, w)) + t^2 * conic(w).
        let cw = conic.evaluate(&w);
        let mixed: Scalar = conic
            .gradient_at(&z0)
            .iter()
            .zip(&w)
            .map(|(g, wi)| g * wi)
            .sum();
        let z: Vec<Scalar> = z0
            .iter()
            .zip(&w)
            .map(|(zi, wi)| &cw * zi - &mixed * wi)
            .collect();
        if z.iter().all(Zero::is_zero) {
            continue;
        }
        debug_assert!(conic.evaluate(&z).is_zero());
        if let Some(p) = ProjPoint::try_new(param.matvec(&z)) {
            return Some(p);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::segre::{build_segre, segre_nodes, segre_planes};

    #[test]
    fn proportionality_helper() {
        let t = |i| MultiPoly::variable(2, i);
        let p = &t(0) + &t(1);
        assert!(proportional(&p, &p.scale(&int(-7))));
        assert!(!proportional(&p, &(&t(0) - &t(1))));
    }

    #[test]
    fn projection_branch_locus_is_a_quartic_and_not_a_cubic() {
        let x = build_segre();
        let nodes = segre_nodes();
        let planes = segre_planes();
        let mut sampler = Sampler::new(77);
        let center = x.sample_smooth_point(&nodes[3], &mut sampler);
        let proj = kummer_projection(&x, &planes, &nodes, &center, &mut sampler, 50, 5);
        assert_eq!(proj.quartic_basis.len(), 1, "degree-4 nullity must be 1");
        assert!(proj.cubic_basis.is_empty(), "degree-3 nullity must be 0");
        assert!(proj.quartic().unwrap().is_homogeneous(4));
        assert!(proj.discriminant.is_homogeneous(4));
        assert!(proj.matches_discriminant(), "interpolation and discriminant agree");
        assert!(proj.holdouts_consistent());
    }
}
