//! Sparse multivariate polynomials over exact rationals.
//!
//! Terms are stored in a `BTreeMap` keyed by the exponent vector, so a
//! polynomial has exactly one representation: no zero coefficients, and a
//! deterministic term order everywhere it is printed or serialized.
//! Variables are named `t0..t{n-1}` in display output.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::matrix::ScalarMatrix;
use super::scalar::{int, Scalar};

/// Sparse polynomial in a fixed number of variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    vars: usize,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl MultiPoly {
    pub fn zero(vars: usize) -> Self {
        MultiPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, c: Scalar) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars], c);
        }
        p
    }

    pub fn one(vars: usize) -> Self {
        Self::constant(vars, int(1))
    }

    /// The variable `t{index}`.
    pub fn variable(vars: usize, index: usize) -> Self {
        assert!(index < vars, "variable index {index} out of range ({vars} vars)");
        let mut exps = vec![0; vars];
        exps[index] = 1;
        Self::from_terms(vars, [(exps, int(1))])
    }

    /// Builds a polynomial from `(exponent vector, coefficient)` pairs,
    /// summing duplicates and dropping zero coefficients.
    pub fn from_terms<I>(vars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Scalar)>,
    {
        let mut map: BTreeMap<Vec<u32>, Scalar> = BTreeMap::new();
        for (exps, c) in terms {
            assert_eq!(exps.len(), vars, "exponent vector length mismatch");
            if c.is_zero() {
                continue;
            }
            let entry = map.entry(exps).or_insert_with(|| int(0));
            *entry += c;
        }
        map.retain(|_, c| !c.is_zero());
        MultiPoly { vars, terms: map }
    }

    /// Linear form `sum coeffs[i] * t_i`.
    pub fn linear_form(coeffs: &[Scalar]) -> Self {
        let vars = coeffs.len();
        Self::from_terms(
            vars,
            coeffs.iter().enumerate().map(|(i, c)| {
                let mut e = vec![0; vars];
                e[i] = 1;
                (e, c.clone())
            }),
        )
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Scalar)> {
        self.terms.iter()
    }

    /// Coefficient of the given exponent vector (zero if absent).
    pub fn coeff(&self, exps: &[u32]) -> Scalar {
        self.terms.get(exps).cloned().unwrap_or_else(|| int(0))
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// True iff every exponent vector sums to exactly `d` (zero counts as
    /// homogeneous of every degree).
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == d)
    }

    /// Degree in the variables of `[lo, hi)` only, or `None` if zero.
    pub fn degree_in(&self, lo: usize, hi: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[lo..hi].iter().sum()).max()
    }

    /// True iff every term has degree `a` in the first `split` variables and
    /// degree `b` in the rest.
    pub fn is_bihomogeneous(&self, split: usize, a: u32, b: u32) -> bool {
        self.terms.keys().all(|e| {
            e[..split].iter().sum::<u32>() == a && e[split..].iter().sum::<u32>() == b
        })
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        MultiPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    /// Exact value at a point given by one scalar per variable.
    pub fn evaluate(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.vars, "evaluation point length mismatch");
        let mut acc = int(0);
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (e, x) in exps.iter().zip(point) {
                for _ in 0..*e {
                    term *= x;
                }
            }
            acc += term;
        }
        acc
    }

    /// Formal partial derivative with respect to `var`.
    pub fn partial(&self, var: usize) -> Self {
        assert!(var < self.vars, "derivative index out of range");
        Self::from_terms(
            self.vars,
            self.terms.iter().filter(|(e, _)| e[var] > 0).map(|(e, c)| {
                let mut e2 = e.clone();
                e2[var] -= 1;
                (e2, c * int(e[var] as i64))
            }),
        )
    }

    /// All partial derivatives, in variable order.
    pub fn gradient(&self) -> Vec<Self> {
        (0..self.vars).map(|i| self.partial(i)).collect()
    }

    /// Gradient evaluated at a point.
    pub fn gradient_at(&self, point: &[Scalar]) -> Vec<Scalar> {
        (0..self.vars)
            .map(|i| self.partial(i).evaluate(point))
            .collect()
    }

    /// Substitutes `t_i := images[i]`; the images share a common variable set.
    pub fn compose(&self, images: &[MultiPoly]) -> Self {
        assert_eq!(images.len(), self.vars, "one image per variable required");
        let out_vars = images.first().map_or(0, MultiPoly::vars);
        assert!(images.iter().all(|p| p.vars() == out_vars));
        // Memoized powers: powers[i][k] = images[i]^k.
        let max_deg: Vec<u32> = (0..self.vars)
            .map(|i| self.terms.keys().map(|e| e[i]).max().unwrap_or(0))
            .collect();
        let mut powers: Vec<Vec<MultiPoly>> = Vec::with_capacity(self.vars);
        for (img, &d) in images.iter().zip(&max_deg) {
            let mut ps = vec![MultiPoly::one(out_vars)];
            for k in 1..=d as usize {
                let next = &ps[k - 1] * img;
                ps.push(next);
            }
            powers.push(ps);
        }
        let mut acc = MultiPoly::zero(out_vars);
        for (exps, c) in &self.terms {
            let mut term = MultiPoly::constant(out_vars, c.clone());
            for (i, &e) in exps.iter().enumerate() {
                if e > 0 {
                    term = &term * &powers[i][e as usize];
                }
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Linear change of variables `t_i := sum_j map[i][j] * s_j`.
    ///
    /// `map` has one row per current variable; the column count is the number
    /// of variables of the result, so that
    /// `substitute_linear(p, m).evaluate(x) == p.evaluate(m * x)`.
    pub fn substitute_linear(&self, map: &ScalarMatrix) -> Self {
        assert_eq!(map.rows(), self.vars, "substitution needs one row per variable");
        let images: Vec<MultiPoly> = (0..map.rows())
            .map(|i| MultiPoly::linear_form(&map.row(i)))
            .collect();
        self.compose(&images)
    }

    /// The coefficient of `t_var^k`, as a polynomial in the same variable set
    /// (with `t_var` no longer occurring).
    pub fn coeff_of_power(&self, var: usize, k: u32) -> Self {
        Self::from_terms(
            self.vars,
            self.terms
                .iter()
                .filter(|(e, _)| e[var] == k)
                .map(|(e, c)| {
                    let mut e2 = e.clone();
                    e2[var] = 0;
                    (e2, c.clone())
                }),
        )
    }

    /// Substitutes `t_var := 0`.
    pub fn set_var_zero(&self, var: usize) -> Self {
        self.coeff_of_power(var, 0)
    }

    /// Removes an unused variable slot, renumbering the later variables down.
    /// Panics if the variable actually occurs.
    pub fn drop_var(&self, var: usize) -> Self {
        assert!(
            self.terms.keys().all(|e| e[var] == 0),
            "cannot drop a variable that occurs"
        );
        Self::from_terms(
            self.vars - 1,
            self.terms.iter().map(|(e, c)| {
                let mut e2 = e.clone();
                e2.remove(var);
                (e2, c.clone())
            }),
        )
    }

    /// All exponent vectors of total degree `deg` in `vars` variables,
    /// in descending lexicographic order.
    pub fn monomials(vars: usize, deg: u32) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(vars);
        fn rec(prefix: &mut Vec<u32>, rem: u32, slots: usize, out: &mut Vec<Vec<u32>>) {
            if slots == 1 {
                prefix.push(rem);
                out.push(prefix.clone());
                prefix.pop();
                return;
            }
            for e in (0..=rem).rev() {
                prefix.push(e);
                rec(prefix, rem - e, slots - 1, out);
                prefix.pop();
            }
        }
        assert!(vars > 0);
        rec(&mut prefix, deg, vars, &mut out);
        out
    }

    /// All exponent vectors of multi-order at most `max_order` (used for
    /// derivative conditions), ascending by total order then lex.
    pub fn multi_indices_up_to(vars: usize, max_order: u32) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for d in 0..=max_order {
            out.extend(Self::monomials(vars, d));
        }
        out
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.vars, rhs.vars, "variable count mismatch in add");
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let entry = terms.entry(e.clone()).or_insert_with(|| int(0));
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        MultiPoly {
            vars: self.vars,
            terms,
        }
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.vars, rhs.vars, "variable count mismatch in mul");
        let mut terms: BTreeMap<Vec<u32>, Scalar> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let entry = terms.entry(e).or_insert_with(|| int(0));
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        MultiPoly {
            vars: self.vars,
            terms,
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        // Highest exponent vectors first reads most naturally.
        for (exps, c) in self.terms.iter().rev() {
            let mono: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(i, e)| {
                    if *e == 1 {
                        format!("t{i}")
                    } else {
                        format!("t{i}^{e}")
                    }
                })
                .collect();
            let mono = mono.join("*");
            let sign = if c < &int(0) { "-" } else { "+" };
            let abs = if c < &int(0) { -c.clone() } else { c.clone() };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
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
    fn add_cancels() {
        // (t0 + t1) + (t0 - t1) = 2 t0
        let a = &t(2, 0) + &t(2, 1);
        let b = &t(2, 0) - &t(2, 1);
        let sum = &a + &b;
        assert_eq!(sum, t(2, 0).scale(&int(2)));
    }

    #[test]
    fn product_of_variables() {
        let p = &(&t(3, 0) * &t(3, 1)) * &t(3, 2);
        assert_eq!(p.coeff(&[1, 1, 1]), int(1));
        assert_eq!(p.term_count(), 1);
    }

    #[test]
    fn subtracting_self_gives_zero() {
        let cubes = MultiPoly::from_terms(
            6,
            (0..6).map(|i| {
                let mut e = vec![0; 6];
                e[i] = 3;
                (e, int(1))
            }),
        );
        assert!((&cubes - &cubes).is_zero());
    }

    #[test]
    fn evaluation_at_sign_split_point() {
        let cubes = MultiPoly::from_terms(
            6,
            (0..6).map(|i| {
                let mut e = vec![0; 6];
                e[i] = 3;
                (e, int(1))
            }),
        );
        let linear = MultiPoly::linear_form(&ints(&[1, 1, 1, 1, 1, 1]));
        let p = ints(&[1, 1, 1, -1, -1, -1]);
        assert!(cubes.evaluate(&p).is_zero());
        assert!(linear.evaluate(&p).is_zero());
        assert!((&t(2, 0) * &t(2, 1)).evaluate(&ints(&[0, 5])).is_zero());
    }

    #[test]
    fn partial_derivatives() {
        let cube = MultiPoly::from_terms(1, [(vec![3], int(1))]);
        let d = cube.partial(0);
        assert_eq!(d.coeff(&[2]), int(3));

        let cubes = MultiPoly::from_terms(
            6,
            (0..6).map(|i| {
                let mut e = vec![0; 6];
                e[i] = 3;
                (e, int(1))
            }),
        );
        let v = cubes.partial(2).evaluate(&ints(&[1, 1, 1, -1, -1, -1]));
        assert_eq!(v, int(3));
    }

    #[test]
    fn chart_shape_derivative() {
        // d/dt0 of (t0*a2 + a3) = a2 when a2, a3 do not involve t0.
        let a2 = &(&t(5, 1) * &t(5, 4)) - &(&t(5, 2) * &t(5, 3));
        let a3 = &(&t(5, 1) * &t(5, 2)) * &t(5, 3);
        let x = &(&t(5, 0) * &a2) + &a3;
        assert_eq!(x.partial(0), a2);
    }

    #[test]
    fn substitute_identity_and_shear() {
        let p = &(&t(2, 0) * &t(2, 0)) + &(&t(2, 0) * &t(2, 1));
        let id = ScalarMatrix::identity(2);
        assert_eq!(p.substitute_linear(&id), p);

        // t0 -> t0 + t1 in t0^2 gives t0^2 + 2 t0 t1 + t1^2.
        let sq = &t(2, 0) * &t(2, 0);
        let m = ScalarMatrix::from_rows(vec![ints(&[1, 1]), ints(&[0, 1])]);
        let out = sq.substitute_linear(&m);
        assert_eq!(out.coeff(&[2, 0]), int(1));
        assert_eq!(out.coeff(&[1, 1]), int(2));
        assert_eq!(out.coeff(&[0, 2]), int(1));
    }

    #[test]
    fn permutation_invariance_of_symmetric_cubic() {
        let cubes = MultiPoly::from_terms(
            6,
            (0..6).map(|i| {
                let mut e = vec![0; 6];
                e[i] = 3;
                (e, int(1))
            }),
        );
        // Cyclic permutation matrix: t_i -> t_{i+1 mod 6}.
        let mut rows = Vec::new();
        for i in 0..6 {
            let mut row = vec![int(0); 6];
            row[(i + 1) % 6] = int(1);
            rows.push(row);
        }
        let m = ScalarMatrix::from_rows(rows);
        assert_eq!(cubes.substitute_linear(&m), cubes);
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(MultiPoly::monomials(4, 2).len(), 10);
        assert_eq!(MultiPoly::monomials(5, 3).len(), 35);
        assert_eq!(MultiPoly::monomials(6, 3).len(), 56);
        assert_eq!(MultiPoly::multi_indices_up_to(6, 1).len(), 7);
    }

    #[test]
    fn homogeneity_predicates() {
        let p = &(&t(4, 0) * &t(4, 1)) + &(&t(4, 2) * &t(4, 3));
        assert!(p.is_homogeneous(2));
        assert!(!p.is_homogeneous(3));
        let bi = MultiPoly::from_terms(4, [(vec![2, 0, 1, 0], int(1)), (vec![1, 1, 0, 1], int(-2))]);
        assert!(bi.is_bihomogeneous(2, 2, 1));
        assert!(!bi.is_bihomogeneous(2, 1, 2));
    }
}
