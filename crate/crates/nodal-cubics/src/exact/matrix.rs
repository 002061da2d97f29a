//! Dense matrices over exact scalars and over polynomials.

use std::fmt;

use super::poly::MultiPoly;
use super::scalar::{int, Scalar};

/// Row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct ScalarMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl ScalarMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        ScalarMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        ScalarMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        ScalarMatrix {
            rows,
            cols,
            entries: vec![int(0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = int(1);
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(cols: Vec<Vec<Scalar>>) -> Self {
        Self::from_rows(cols).transpose()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> Vec<Scalar> {
        self.entries[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *out.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        out
    }

    pub fn matmul(&self, rhs: &ScalarMatrix) -> ScalarMatrix {
        assert_eq!(self.cols, rhs.rows, "matmul shape mismatch");
        let mut out = Self::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for c in 0..rhs.cols {
                let mut acc = int(0);
                for k in 0..self.cols {
                    acc += self.at(r, k) * rhs.at(k, c);
                }
                *out.at_mut(r, c) = acc;
            }
        }
        out
    }

    pub fn matvec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matvec shape mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = int(0);
                for (k, x) in v.iter().enumerate() {
                    acc += self.at(r, k) * x;
                }
                acc
            })
            .collect()
    }
}

impl fmt::Debug for ScalarMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ScalarMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Row-major matrix of polynomials over a shared variable set.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    vars: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<MultiPoly>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        let vars = entries.first().map_or(0, MultiPoly::vars);
        assert!(
            entries.iter().all(|p| p.vars() == vars),
            "entries must share one variable set"
        );
        PolyMatrix {
            rows,
            cols,
            vars,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<MultiPoly>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Self::new(nrows, ncols, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn at(&self, r: usize, c: usize) -> &MultiPoly {
        &self.entries[r * self.cols + c]
    }

    pub fn col(&self, c: usize) -> Vec<MultiPoly> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.at(r, c).clone());
            }
        }
        PolyMatrix {
            rows: self.cols,
            cols: self.rows,
            vars: self.vars,
            entries,
        }
    }

    /// Replaces the column `c` (returning a new matrix).
    pub fn with_col(&self, c: usize, col: Vec<MultiPoly>) -> Self {
        assert_eq!(col.len(), self.rows);
        let mut out = self.clone();
        for (r, p) in col.into_iter().enumerate() {
            out.entries[r * self.cols + c] = p;
        }
        out
    }

    /// Applies a substitution `t_var := 0` to every entry.
    pub fn set_var_zero(&self, var: usize) -> Self {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            vars: self.vars,
            entries: self.entries.iter().map(|p| p.set_var_zero(var)).collect(),
        }
    }

    /// Evaluates every entry at a point, giving a scalar matrix.
    pub fn evaluate(&self, point: &[Scalar]) -> ScalarMatrix {
        ScalarMatrix::new(
            self.rows,
            self.cols,
            self.entries.iter().map(|p| p.evaluate(point)).collect(),
        )
    }

    /// Exact determinant by cofactor expansion along the first row.
    ///
    /// Fine at the sizes that occur here (nothing above 4x4); the expansion
    /// is exact in any case.
    pub fn det(&self) -> MultiPoly {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        match n {
            0 => MultiPoly::one(self.vars),
            1 => self.at(0, 0).clone(),
            _ => {
                let mut acc = MultiPoly::zero(self.vars);
                for c in 0..n {
                    let entry = self.at(0, c);
                    if entry.is_zero() {
                        continue;
                    }
                    let minor = self.minor(0, c);
                    let term = entry * &minor.det();
                    acc = if c % 2 == 0 { &acc + &term } else { &acc - &term };
                }
                acc
            }
        }
    }

    fn minor(&self, skip_r: usize, skip_c: usize) -> PolyMatrix {
        let mut entries = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for r in 0..self.rows {
            if r == skip_r {
                continue;
            }
            for c in 0..self.cols {
                if c == skip_c {
                    continue;
                }
                entries.push(self.at(r, c).clone());
            }
        }
        PolyMatrix {
            rows: self.rows - 1,
            cols: self.cols - 1,
            vars: self.vars,
            entries,
        }
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::ints;

    fn t(vars: usize, i: usize) -> MultiPoly {
        MultiPoly::variable(vars, i)
    }

    #[test]
    fn det_2x2_of_variables() {
        let m = PolyMatrix::from_rows(vec![
            vec![t(4, 0), t(4, 1)],
            vec![t(4, 2), t(4, 3)],
        ]);
        let expected = &(&t(4, 0) * &t(4, 3)) - &(&t(4, 1) * &t(4, 2));
        assert_eq!(m.det(), expected);
    }

    #[test]
    fn det_constant_identity() {
        let one = MultiPoly::one(1);
        let zero = MultiPoly::zero(1);
        let m = PolyMatrix::from_rows(vec![
            vec![one.clone(), zero.clone(), zero.clone()],
            vec![zero.clone(), one.clone(), zero.clone()],
            vec![zero.clone(), zero.clone(), one.clone()],
        ]);
        assert_eq!(m.det(), MultiPoly::one(1));
    }

    #[test]
    fn det_equal_columns_is_zero() {
        let m = PolyMatrix::from_rows(vec![
            vec![t(3, 0), t(3, 0), t(3, 1)],
            vec![t(3, 1), t(3, 1), t(3, 2)],
            vec![t(3, 2), t(3, 2), t(3, 0)],
        ]);
        assert!(m.det().is_zero());
    }

    #[test]
    fn matvec_and_matmul_agree() {
        let m = ScalarMatrix::from_rows(vec![ints(&[1, 2]), ints(&[3, 4])]);
        let v = ints(&[5, -1]);
        let direct = m.matvec(&v);
        let via_mul = m.matmul(&ScalarMatrix::from_cols(vec![v]));
        assert_eq!(direct, via_mul.col(0));
    }
}
