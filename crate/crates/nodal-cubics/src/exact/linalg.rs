//! Exact linear algebra: rank, nullspace, linear solving, inverses, and
//! hypersurface interpolation.
//!
//! The elimination kernel is fraction-free (Bareiss) over integers after
//! clearing row denominators, so intermediate entries stay integral and
//! bounded. No tolerances exist anywhere: pivots are the first nonzero
//! entry in scan order, and every comparison is an exact equality.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::ScalarMatrix;
use super::poly::MultiPoly;
use super::scalar::{int, primitive, Scalar};

/// Row echelon form produced by fraction-free elimination.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivot_cols: Vec<usize>,
    cols: usize,
}

fn integer_rows(m: &ScalarMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|r| {
            let row = m.row(r);
            let mut lcm = BigInt::one();
            for x in &row {
                lcm = lcm.lcm(x.denom());
            }
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect()
}

/// Bareiss fraction-free elimination. The division in the update step is
/// exact by the Sylvester identity.
fn bareiss(mut rows: Vec<Vec<BigInt>>, cols: usize) -> Echelon {
    let nrows = rows.len();
    let mut pivot_cols = Vec::new();
    let mut prev = BigInt::one();
    let mut pr = 0;
    for col in 0..cols {
        let Some(found) = (pr..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pr, found);
        let pivot = rows[pr][col].clone();
        for r in pr + 1..nrows {
            let factor = rows[r][col].clone();
            for c in col..cols {
                let v = &rows[r][c] * &pivot - &rows[pr][c] * &factor;
                rows[r][c] = v / &prev;
            }
        }
        pivot_cols.push(col);
        prev = pivot;
        pr += 1;
        if pr == nrows {
            break;
        }
    }
    Echelon {
        rows,
        pivot_cols,
        cols,
    }
}

fn echelon_of(m: &ScalarMatrix) -> Echelon {
    bareiss(integer_rows(m), m.cols())
}

/// Exact rank over the rationals.
pub fn rank(m: &ScalarMatrix) -> usize {
    echelon_of(m).pivot_cols.len()
}

/// Rank of the matrix whose rows are the given vectors.
pub fn rank_of_rows(rows: &[Vec<Scalar>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    rank(&ScalarMatrix::from_rows(rows.to_vec()))
}

/// Basis of the right nullspace, one canonical primitive integer vector per
/// free column. `rank + nullity = cols` always holds.
pub fn nullspace(m: &ScalarMatrix) -> Vec<Vec<Scalar>> {
    let ech = echelon_of(m);
    let free_cols: Vec<usize> = (0..ech.cols)
        .filter(|c| !ech.pivot_cols.contains(c))
        .collect();
    free_cols
        .iter()
        .map(|&f| {
            let mut x = vec![int(0); ech.cols];
            x[f] = int(1);
            for (i, &pc) in ech.pivot_cols.iter().enumerate().rev() {
                let mut acc = int(0);
                for c in pc + 1..ech.cols {
                    if !ech.rows[i][c].is_zero() && !x[c].is_zero() {
                        acc += BigRational::from_integer(ech.rows[i][c].clone()) * &x[c];
                    }
                }
                x[pc] = -acc / BigRational::from_integer(ech.rows[i][pc].clone());
            }
            primitive(&x).expect("nullspace vector is nonzero by construction")
        })
        .collect()
}

/// One exact solution of `a x = b` with free variables set to zero, or
/// `None` if the system is inconsistent.
pub fn solve(a: &ScalarMatrix, b: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(a.rows(), b.len(), "rhs length mismatch");
    let mut rows = Vec::with_capacity(a.rows());
    for r in 0..a.rows() {
        let mut row = a.row(r);
        row.push(b[r].clone());
        rows.push(row);
    }
    let aug = ScalarMatrix::from_rows(rows);
    let ech = echelon_of(&aug);
    // A pivot in the appended column means the system is inconsistent.
    if ech.pivot_cols.contains(&a.cols()) {
        return None;
    }
    let mut x = vec![int(0); a.cols()];
    for (i, &pc) in ech.pivot_cols.iter().enumerate().rev() {
        let mut acc = BigRational::from_integer(ech.rows[i][a.cols()].clone());
        for c in pc + 1..a.cols() {
            if !ech.rows[i][c].is_zero() && !x[c].is_zero() {
                acc -= BigRational::from_integer(ech.rows[i][c].clone()) * &x[c];
            }
        }
        x[pc] = acc / BigRational::from_integer(ech.rows[i][pc].clone());
    }
    Some(x)
}

/// Exact inverse, or `None` for singular input.
pub fn inverse(m: &ScalarMatrix) -> Option<ScalarMatrix> {
    assert_eq!(m.rows(), m.cols(), "inverse of a non-square matrix");
    let n = m.rows();
    // Gauss-Jordan on [m | I] over the rationals.
    let mut rows: Vec<Vec<Scalar>> = (0..n)
        .map(|r| {
            let mut row = m.row(r);
            for c in 0..n {
                row.push(if c == r { int(1) } else { int(0) });
            }
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(col, piv);
        let p = rows[col][col].clone();
        for v in rows[col].iter_mut() {
            *v /= p.clone();
        }
        for r in 0..n {
            if r != col && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                let pivot_row = rows[col].clone();
                for (v, pv) in rows[r].iter_mut().zip(&pivot_row) {
                    *v -= &f * pv;
                }
            }
        }
    }
    Some(ScalarMatrix::from_rows(
        rows.into_iter().map(|r| r[n..].to_vec()).collect(),
    ))
}

/// Reduced row echelon form with every row rescaled to a primitive integer
/// vector. Two row spans are equal iff their outputs are equal, which makes
/// this the canonical form for linear subspaces.
pub fn rref(rows: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let cols = rows[0].len();
    let mut rows: Vec<Vec<Scalar>> = rows.to_vec();
    let nrows = rows.len();
    let mut pr = 0;
    for col in 0..cols {
        let Some(found) = (pr..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pr, found);
        let p = rows[pr][col].clone();
        for v in rows[pr].iter_mut() {
            *v /= p.clone();
        }
        for r in 0..nrows {
            if r != pr && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                let pivot_row = rows[pr].clone();
                for (v, pv) in rows[r].iter_mut().zip(&pivot_row) {
                    *v -= &f * pv;
                }
            }
        }
        pr += 1;
        if pr == nrows {
            break;
        }
    }
    rows.truncate(pr);
    rows.iter()
        .map(|r| primitive(r).expect("pivot rows are nonzero"))
        .collect()
}

/// Basis of the degree-`degree` forms in `vars` variables vanishing at all
/// the given points (exact nullspace of the monomial evaluation matrix).
/// An empty basis is a legitimate answer.
pub fn vanishing_forms(points: &[Vec<Scalar>], vars: usize, degree: u32) -> Vec<MultiPoly> {
    let monomials = MultiPoly::monomials(vars, degree);
    if points.is_empty() {
        return monomials
            .iter()
            .map(|m| MultiPoly::from_terms(vars, [(m.clone(), int(1))]))
            .collect();
    }
    let rows: Vec<Vec<Scalar>> = points
        .iter()
        .map(|p| {
            assert_eq!(p.len(), vars, "point has wrong ambient dimension");
            monomials
                .iter()
                .map(|e| {
                    let mut v = int(1);
                    for (exp, x) in e.iter().zip(p) {
                        for _ in 0..*exp {
                            v *= x;
                        }
                    }
                    v
                })
                .collect()
        })
        .collect();
    nullspace(&ScalarMatrix::from_rows(rows))
        .into_iter()
        .map(|coeffs| {
            MultiPoly::from_terms(
                vars,
                monomials.iter().cloned().zip(coeffs),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::{ints, ratio};

    #[test]
    fn identity_has_full_rank_and_trivial_nullspace() {
        let id = ScalarMatrix::identity(4);
        assert_eq!(rank(&id), 4);
        assert!(nullspace(&id).is_empty());
    }

    #[test]
    fn zero_matrix_has_full_nullity() {
        let z = ScalarMatrix::zero(3, 5);
        assert_eq!(rank(&z), 0);
        let ns = nullspace(&z);
        assert_eq!(ns.len(), 5);
    }

    #[test]
    fn nullspace_vectors_annihilate() {
        let m = ScalarMatrix::from_rows(vec![
            ints(&[1, 2, 3, 4]),
            ints(&[2, 4, 6, 8]),
            ints(&[0, 1, 1, 0]),
        ]);
        assert_eq!(rank(&m), 2);
        let ns = nullspace(&m);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for r in 0..m.rows() {
                let dot: Scalar = m
                    .row(r)
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = ScalarMatrix::from_rows(vec![ints(&[1, 1]), ints(&[1, -1])]);
        let x = solve(&a, &ints(&[3, 1])).unwrap();
        assert_eq!(x, ints(&[2, 1]));

        let b = ScalarMatrix::from_rows(vec![ints(&[1, 1]), ints(&[2, 2])]);
        assert!(solve(&b, &ints(&[1, 3])).is_none());
        assert!(solve(&b, &ints(&[1, 2])).is_some());
    }

    #[test]
    fn inverse_round_trip() {
        let m = ScalarMatrix::from_rows(vec![
            vec![ratio(1, 2), int(1), int(0)],
            ints(&[0, 1, 3]),
            ints(&[5, 0, 1]),
        ]);
        let inv = inverse(&m).unwrap();
        assert_eq!(m.matmul(&inv), ScalarMatrix::identity(3));
        let singular = ScalarMatrix::from_rows(vec![ints(&[1, 2]), ints(&[2, 4])]);
        assert!(inverse(&singular).is_none());
    }

    #[test]
    fn rref_is_canonical_for_row_span() {
        let a = vec![ints(&[2, 4, 0]), ints(&[0, 0, 3])];
        let b = vec![ints(&[1, 2, 5]), ints(&[0, 0, -7]), ints(&[2, 4, 5])];
        assert_eq!(rref(&a), rref(&b));
    }

    #[test]
    fn line_through_two_points() {
        // Degree-1 forms in P^2 vanishing at two generic points: dimension 1.
        let pts = vec![ints(&[1, 2, 3]), ints(&[0, 1, -1])];
        let basis = vanishing_forms(&pts, 3, 1);
        assert_eq!(basis.len(), 1);
        for p in &pts {
            assert!(basis[0].evaluate(p).is_zero());
        }
    }

    #[test]
    fn quadrics_through_five_reference_points_of_p3() {
        let pts = vec![
            ints(&[1, 0, 0, 0]),
            ints(&[0, 1, 0, 0]),
            ints(&[0, 0, 1, 0]),
            ints(&[0, 0, 0, 1]),
            ints(&[1, 1, 1, 1]),
        ];
        let basis = vanishing_forms(&pts, 4, 2);
        assert_eq!(basis.len(), 5);
    }
}
