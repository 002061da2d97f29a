//! Dimension counts for the linear systems `|g*h - (g-1)(q_1+...+q_{2g+1})|`
//! of degree-g forms in 2g variables with multiplicity g-1 at 2g+1 general
//! points.
//!
//! Two numbers are computed side by side: the exact nullity of the
//! conditions matrix at seeded general points, and the closed-form value
//! `binom(2g, g) - binom(2g, 2g-2)`. They are reported together and never
//! asserted equal; at g = 2 the closed form gives 0 while the system is
//! manifestly 5-dimensional, and at g = 3 the computed dimension (14)
//! differs from the closed form (5) as well.

use crate::exact::matrix::ScalarMatrix;
use crate::exact::poly::MultiPoly;
use crate::exact::scalar::{int, Scalar};
use crate::proj::Sampler;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CobleDimensions {
    pub genus: u32,
    /// Rows and columns of the conditions matrix.
    pub matrix_shape: (usize, usize),
    pub matrix_rank: usize,
    /// Linear dimension of the system: the exact nullity.
    pub computed_dim: usize,
    /// The closed-form count, which may disagree (see module docs).
    pub formula_value: i64,
}

fn binomial(n: u64, k: u64) -> i64 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as i64
}

/// Computes both dimension counts for `2 <= g <= 4` (the conditions matrix
/// grows past desk scale beyond that).
pub fn coble_dimension(g: u32, sampler: &mut Sampler) -> CobleDimensions {
    assert!((2..=4).contains(&g), "supported range is 2 <= g <= 4");
    let vars = (2 * g) as usize;
    let degree = g;
    let point_count = (2 * g + 1) as usize;
    let monomials = MultiPoly::monomials(vars, degree);
    let derivative_orders = MultiPoly::multi_indices_up_to(vars, g - 2);

    let points: Vec<Vec<Scalar>> = (0..point_count)
        .map(|_| sampler.proj_point(vars).coords().to_vec())
        .collect();

    let mut rows = Vec::with_capacity(point_count * derivative_orders.len());
    for p in &points {
        for alpha in &derivative_orders {
            rows.push(
                monomials
                    .iter()
                    .map(|m| evaluate_monomial_derivative(m, alpha, p))
                    .collect::<Vec<Scalar>>(),
            );
        }
    }
    let matrix = ScalarMatrix::from_rows(rows);
    let rank = crate::exact::linalg::rank(&matrix);
    CobleDimensions {
        genus: g,
        matrix_shape: (matrix.rows(), matrix.cols()),
        matrix_rank: rank,
        computed_dim: matrix.cols() - rank,
        formula_value: binomial(2 * g as u64, g as u64)
            - binomial(2 * g as u64, 2 * g as u64 - 2),
    }
}

/// Value of `d^alpha (x^exps)` at `p`, exactly.
fn evaluate_monomial_derivative(exps: &[u32], alpha: &[u32], p: &[Scalar]) -> Scalar {
    let mut acc = int(1);
    for ((&e, &a), x) in exps.iter().zip(alpha).zip(p) {
        if a > e {
            return int(0);
        }
        for k in 0..a {
            acc *= int((e - k) as i64);
        }
        for _ in 0..(e - a) {
            acc *= x;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_two_is_the_castelnuovo_quadric_system() {
        let d = coble_dimension(2, &mut Sampler::new(9));
        assert_eq!(d.matrix_shape, (5, 10));
        assert_eq!(d.computed_dim, 5, "quadrics in P^3 through 5 general points");
        assert_eq!(d.formula_value, 0, "the closed form degenerates at g = 2");
    }

    #[test]
    fn genus_three_counts() {
        let d = coble_dimension(3, &mut Sampler::new(9));
        assert_eq!(d.matrix_shape, (49, 56));
        assert_eq!(d.matrix_rank, 42);
        // Frozen from an independent exact elimination over random general
        // points; the value is stable for any general configuration.
        assert_eq!(d.computed_dim, 14);
        assert_eq!(d.formula_value, 5, "binom(6,3) - binom(6,4) = 20 - 15");
        assert_ne!(
            d.computed_dim as i64, d.formula_value,
            "the two counts genuinely disagree and are reported, not asserted equal"
        );
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(6, 4), 15);
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(3, 5), 0);
    }
}
