//! Local coordinates at a point of a cubic threefold.
//!
//! A chart moves the chosen point to `[1,0,0,0,0]` (eliminating the linear
//! constraint first when there is one) and splits the equation by the
//! degree in the first coordinate. At a double point the split has no
//! cubic or quadratic part in that coordinate, leaving `t0*a2 + a3` with
//! `a2` of degree 2 and `a3` of degree 3 in the remaining four variables.

use std::fmt;

use num_traits::Zero;

use crate::exact::linalg::{inverse, rank, rank_of_rows};
use crate::exact::matrix::ScalarMatrix;
use crate::exact::poly::MultiPoly;
use crate::exact::scalar::{int, ratio, Scalar};
use crate::proj::ProjPoint;

use super::CubicThreefold;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChartError {
    NotOnVariety,
    NotSingular,
    /// The local quadratic form is degenerate (rank below 4), so the point
    /// is a worse-than-ordinary singularity.
    DegenerateQuadraticPart { rank: usize },
}

impl fmt::Display for ChartError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChartError::NotOnVariety => write!(f, "point does not lie on the cubic"),
            ChartError::NotSingular => write!(f, "point is a nonsingular point of the cubic"),
            ChartError::DegenerateQuadraticPart { rank } => {
                write!(f, "local quadratic form has rank {rank}, expected 4")
            }
        }
    }
}

impl std::error::Error for ChartError {}

/// Adapted coordinates at a point: an invertible change of coordinates
/// sending `[1,0,...,0]` to the point, with the constraint hyperplane (if
/// any) already eliminated so that the equation lives in five variables.
pub struct Frame {
    transform: ScalarMatrix,
    inverse: ScalarMatrix,
    /// The cubic written in the adapted variables (constraint eliminated).
    local_equation: MultiPoly,
    /// Ambient coordinate count before elimination.
    coords: usize,
    constrained: bool,
}

impl Frame {
    /// Builds the frame; requires only that the point satisfy the
    /// constraint (not the cubic).
    pub fn at(x: &CubicThreefold, p: &ProjPoint) -> Frame {
        let n = x.coords();
        assert_eq!(p.len(), n, "point has wrong ambient dimension");
        let mut columns: Vec<Vec<Scalar>> = vec![p.coords().to_vec()];
        match x.constraint() {
            None => {
                // Complete with standard basis vectors.
                for i in 0..n {
                    if columns.len() == n {
                        break;
                    }
                    let mut e = vec![int(0); n];
                    e[i] = int(1);
                    if rank_of_rows(&with_row(&columns, &e)) > columns.len() {
                        columns.push(e);
                    }
                }
            }
            Some(c) => {
                assert!(
                    c.evaluate(p.coords()).is_zero(),
                    "point must satisfy the linear constraint"
                );
                // Complete inside the constraint hyperplane, then add one
                // transversal vector scaled so the constraint becomes the
                // last coordinate exactly.
                let kernel = constraint_kernel_basis(c);
                for k in &kernel {
                    if columns.len() == n - 1 {
                        break;
                    }
                    if rank_of_rows(&with_row(&columns, k)) > columns.len() {
                        columns.push(k.clone());
                    }
                }
                let coeffs = linear_coeffs(c);
                let j = coeffs
                    .iter()
                    .position(|a| !a.is_zero())
                    .expect("constraint is nonzero");
                let mut v = vec![int(0); n];
                v[j] = ratio(1, 1) / coeffs[j].clone();
                columns.push(v);
            }
        }
        let transform = ScalarMatrix::from_cols(columns);
        let inv = inverse(&transform).expect("adapted frame is invertible by construction");
        let mut local = x.equation().substitute_linear(&transform);
        if let Some(c) = x.constraint() {
            // The constraint reads off as the last adapted coordinate.
            debug_assert_eq!(
                c.substitute_linear(&transform),
                MultiPoly::variable(n, n - 1)
            );
            local = local.set_var_zero(n - 1).drop_var(n - 1);
        }
        Frame {
            transform,
            inverse: inv,
            local_equation: local,
            coords: n,
            constrained: x.constraint().is_some(),
        }
    }

    pub fn transform(&self) -> &ScalarMatrix {
        &self.transform
    }

    pub fn local_equation(&self) -> &MultiPoly {
        &self.local_equation
    }

    /// Adapted coordinates of an ambient point (constraint coordinate
    /// dropped). `None` if the point violates the constraint.
    pub fn to_local(&self, p: &ProjPoint) -> Option<ProjPoint> {
        assert_eq!(p.len(), self.coords);
        let mut s = self.inverse.matvec(p.coords());
        if self.constrained {
            if !s[self.coords - 1].is_zero() {
                return None;
            }
            s.pop();
        }
        ProjPoint::try_new(s)
    }

    /// Projection away from the framed point: adapted coordinates with the
    /// first coordinate dropped, landing in projective 3-space. `None`
    /// exactly at the framed point itself.
    pub fn project_from_center(&self, p: &ProjPoint) -> Option<ProjPoint> {
        self.to_local(p)?.project_away(0)
    }
}

fn with_row(rows: &[Vec<Scalar>], extra: &[Scalar]) -> Vec<Vec<Scalar>> {
    let mut out = rows.to_vec();
    out.push(extra.to_vec());
    out
}

fn linear_coeffs(c: &MultiPoly) -> Vec<Scalar> {
    (0..c.vars())
        .map(|i| {
            let mut e = vec![0; c.vars()];
            e[i] = 1;
            c.coeff(&e)
        })
        .collect()
}

fn constraint_kernel_basis(c: &MultiPoly) -> Vec<Vec<Scalar>> {
    crate::exact::linalg::nullspace(&ScalarMatrix::from_rows(vec![linear_coeffs(c)]))
}

/// Symmetric matrix of a quadratic form.
pub fn quadratic_form_matrix(q: &MultiPoly) -> ScalarMatrix {
    assert!(q.is_homogeneous(2), "quadratic form expected");
    let n = q.vars();
    let mut m = ScalarMatrix::zero(n, n);
    for (exps, c) in q.terms() {
        let idx: Vec<usize> = exps
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat(i).take(e as usize))
            .collect();
        let (i, j) = (idx[0], idx[1]);
        if i == j {
            *m.at_mut(i, i) = c.clone();
        } else {
            let half = c * ratio(1, 2);
            *m.at_mut(i, j) = half.clone();
            *m.at_mut(j, i) = half;
        }
    }
    m
}

/// Node chart: the equation in adapted coordinates is exactly
/// `t0*a2 + a3`, with `a2` a rank-4 quadratic form.
pub struct NodeChart {
    node: ProjPoint,
    frame: Frame,
    a2: MultiPoly,
    a3: MultiPoly,
}

impl NodeChart {
    pub fn node(&self) -> &ProjPoint {
        &self.node
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// Quadratic part, four variables.
    pub fn a2(&self) -> &MultiPoly {
        &self.a2
    }

    /// Cubic part, four variables.
    pub fn a3(&self) -> &MultiPoly {
        &self.a3
    }

    /// Projection of an ambient point away from the node, into the
    /// projective 3-space where the associated curve `a2 = a3 = 0` lives.
    pub fn project(&self, p: &ProjPoint) -> Option<ProjPoint> {
        self.frame.project_from_center(p)
    }

    /// Membership and singularity of points against the associated curve.
    pub fn curve_report(&self, p: &ProjPoint) -> CurvePointReport {
        assert_eq!(p.len(), 4);
        let on_curve = self.a2.evaluate(p.coords()).is_zero()
            && self.a3.evaluate(p.coords()).is_zero();
        let jac = vec![
            self.a2.gradient_at(p.coords()),
            self.a3.gradient_at(p.coords()),
        ];
        let curve_singular = on_curve && rank_of_rows(&jac) <= 1;
        CurvePointReport {
            on_curve,
            curve_singular,
        }
    }

    /// True iff the line through `p` and `q` lies on both `V(a2)` and
    /// `V(a3)` (parametric substitution is identically zero).
    pub fn line_on_curve_surfaces(&self, p: &ProjPoint, q: &ProjPoint) -> bool {
        let m = ScalarMatrix::from_cols(vec![p.coords().to_vec(), q.coords().to_vec()]);
        self.a2.substitute_linear(&m).is_zero() && self.a3.substitute_linear(&m).is_zero()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CurvePointReport {
    pub on_curve: bool,
    pub curve_singular: bool,
}

/// Builds the chart at `q`, certifying along the way that `q` is an
/// ordinary double point.
pub fn node_chart(x: &CubicThreefold, q: &ProjPoint) -> Result<NodeChart, ChartError> {
    if !x.contains(q) {
        return Err(ChartError::NotOnVariety);
    }
    let frame = Frame::at(x, q);
    let f = frame.local_equation();
    // Split the equation by the degree in the first adapted coordinate:
    // f = c*t0^3 + a1*t0^2 + a2*t0 + a3.
    let c3 = f.coeff_of_power(0, 3);
    let a1 = f.coeff_of_power(0, 2);
    let a2 = f.coeff_of_power(0, 1);
    let a3 = f.coeff_of_power(0, 0);
    debug_assert!(c3.is_zero(), "membership was already checked");
    if !a1.is_zero() {
        return Err(ChartError::NotSingular);
    }
    let a2 = a2.drop_var(0);
    let a3 = a3.drop_var(0);
    let qrank = rank(&quadratic_form_matrix(&a2));
    if qrank != 4 {
        return Err(ChartError::DegenerateQuadraticPart { rank: qrank });
    }
    Ok(NodeChart {
        node: q.clone(),
        frame,
        a2,
        a3,
    })
}

/// All collinear triples among the given points (indices), by exhaustive
/// rank checks over every 3-subset.
pub fn collinear_triples(points: &[ProjPoint]) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if crate::proj::collinear(&[&points[i], &points[j], &points[k]]) {
                    out.push([i, j, k]);
                }
            }
        }
    }
    out
}
