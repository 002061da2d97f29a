//! Text serialization for polynomials: one term per line,
//! `e0 e1 ... e{n-1} : numerator / denominator`, terms in the canonical
//! `BTreeMap` order. Used by fixtures and reports.

use super::poly::MultiPoly;
use super::scalar::{format_scalar, parse_scalar};

pub fn poly_to_lines(p: &MultiPoly) -> Vec<String> {
    p.terms()
        .map(|(exps, c)| {
            let e: Vec<String> = exps.iter().map(u32::to_string).collect();
            format!("{} : {}", e.join(" "), format_scalar(c))
        })
        .collect()
}

pub fn poly_from_lines(vars: usize, lines: &[String]) -> Result<MultiPoly, String> {
    let mut terms = Vec::with_capacity(lines.len());
    for line in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let (exps, coeff) = line
            .split_once(':')
            .ok_or_else(|| format!("malformed term `{line}`: expected `exps : num / den`"))?;
        let exps: Vec<u32> = exps
            .split_whitespace()
            .map(|s| s.parse().map_err(|e| format!("bad exponent in `{line}`: {e}")))
            .collect::<Result<_, _>>()?;
        if exps.len() != vars {
            return Err(format!(
                "term `{line}` has {} exponents, expected {vars}",
                exps.len()
            ));
        }
        terms.push((exps, parse_scalar(coeff)?));
    }
    Ok(MultiPoly::from_terms(vars, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::{int, ratio};

    #[test]
    fn round_trip() {
        let p = MultiPoly::from_terms(
            3,
            [
                (vec![3, 0, 0], int(1)),
                (vec![1, 1, 1], ratio(-7, 2)),
                (vec![0, 0, 2], int(5)),
            ],
        );
        let lines = poly_to_lines(&p);
        assert_eq!(poly_from_lines(3, &lines).unwrap(), p);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(poly_from_lines(2, &["1 1".to_string()]).is_err());
        assert!(poly_from_lines(2, &["1 : 1 / 1".to_string()]).is_err());
        assert!(poly_from_lines(2, &["1 1 : 1 / 0".to_string()]).is_err());
    }
}
