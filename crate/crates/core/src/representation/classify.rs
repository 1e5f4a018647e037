use num_traits::Signed;
use serde_json::{json, Value};

use crate::diagrams::{in_lambda_plus_kappa, SkewDiagram};
use crate::error::{Error, Result};
use crate::qalgebra::{int, num_den, Rational};
use crate::tableaux::{content_vector_classical, row_reading};

/// `F_zeta(i) = zeta_{i bar} - k kappa` for `i = i bar + k n`, `i bar` in `[1, n]`.
pub fn f_weight(zeta: &[Rational], kappa: &Rational, i: i64) -> Rational {
    let n = zeta.len() as i64;
    let ibar = (i - 1).rem_euclid(n) + 1;
    let k = (i - ibar) / n;
    &zeta[(ibar - 1) as usize] - kappa * int(k)
}

/// True when no `k` in `(i, j)` has `F(k) = F(i) + 1`, or none has `F(k) = F(i) - 1`.
/// Such a pair rules out a weight decomposition for any module with weight `zeta`.
pub fn obstruction_exists(zeta: &[Rational], kappa: &Rational, i: i64, j: i64) -> Result<bool> {
    let fi = f_weight(zeta, kappa, i);
    if i >= j || fi != f_weight(zeta, kappa, j) {
        return Err(Error::Precondition(format!("need i < j and F(i) = F(j), got i = {i}, j = {j}")));
    }
    let up = &fi + int(1);
    let down = &fi - int(1);
    let vals: Vec<Rational> = (i + 1..j).map(|k| f_weight(zeta, kappa, k)).collect();
    Ok(!vals.contains(&up) || !vals.contains(&down))
}

/// Contents of the row reading tableau of `lambda`, in the order of its entries.
pub fn row_reading_weight(lambda: &[i64]) -> Result<Vec<Rational>> {
    let theta = SkewDiagram::from_partitions(lambda, &[])?;
    Ok(content_vector_classical(&theta, &row_reading(&theta)))
}

/// Entry of the row reading tableau at `(row, col)`, both 1-based.
fn reading_entry(lambda: &[i64], row: usize, col: i64) -> i64 {
    lambda[..row - 1].iter().sum::<i64>() + col
}

/// The pair `(i, j)` built for `lambda` outside `Lambda^+_kappa`.
pub fn obstruction_witness(lambda: &[i64], kappa: &Rational) -> Option<(i64, i64)> {
    if in_lambda_plus_kappa(lambda, kappa) || !kappa.is_positive() {
        return None;
    }
    let (s, r) = num_den(kappa);
    let m = lambda.len();
    let n: i64 = lambda.iter().sum();
    if s < m as i64 {
        let a = m - s as usize;
        Some((reading_entry(lambda, m, 1), reading_entry(lambda, a, 1) + r * n))
    } else {
        let b = 1 + lambda[m - 1] + s - m as i64;
        Some((n, reading_entry(lambda, 1, b) + r * n))
    }
}

/// All obstructed pairs `(i, j)` with `i` in `[1, n]` and `i < j <= i + span`.
pub fn scan_obstructions(zeta: &[Rational], kappa: &Rational, span: i64) -> Vec<(i64, i64)> {
    let n = zeta.len() as i64;
    let mut out = Vec::new();
    for i in 1..=n {
        let fi = f_weight(zeta, kappa, i);
        for j in i + 1..=i + span {
            if f_weight(zeta, kappa, j) == fi && obstruction_exists(zeta, kappa, i, j).unwrap_or(false) {
                out.push((i, j));
            }
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct Classification {
    pub lambda: Vec<i64>,
    pub kappa: Rational,
    pub in_lambda_plus: bool,
    pub witness: Option<(i64, i64)>,
    pub witness_obstructed: bool,
    pub scan: Vec<(i64, i64)>,
}

impl Classification {
    /// The predicate and the obstruction check tell the same story.
    pub fn consistent(&self) -> bool {
        if self.in_lambda_plus {
            self.witness.is_none() && self.scan.is_empty()
        } else {
            self.witness_obstructed
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "lambda": self.lambda,
            "kappa": self.kappa.to_string(),
            "in_lambda_plus": self.in_lambda_plus,
            "witness": self.witness.map(|(i, j)| vec![i, j]),
            "witness_obstructed": self.witness_obstructed,
            "obstructions_in_scan": self.scan.len(),
            "consistent": self.consistent(),
        })
    }
}

pub fn classify(lambda: &[i64], kappa: &Rational, span: Option<i64>) -> Result<Classification> {
    let zeta = row_reading_weight(lambda)?;
    let span = span.unwrap_or(3 * zeta.len() as i64);
    let witness = obstruction_witness(lambda, kappa);
    let witness_obstructed = match witness {
        Some((i, j)) => obstruction_exists(&zeta, kappa, i, j)?,
        None => false,
    };
    Ok(Classification {
        lambda: lambda.to_vec(),
        kappa: kappa.clone(),
        in_lambda_plus: in_lambda_plus_kappa(lambda, kappa),
        witness,
        witness_obstructed,
        scan: scan_obstructions(&zeta, kappa, span),
    })
}
