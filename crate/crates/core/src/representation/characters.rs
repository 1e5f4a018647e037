use serde_json::{json, Value};

use crate::diagrams::{in_lambda_plus_kappa, PeriodicSkewDiagram, SkewDiagram};
use crate::error::{Error, Result};
use crate::genfun::{gf_single_column, single_column};
use crate::plane_partitions::{count_by_weight, kostka, kostka_restricted, PpVariant, Shape};
use crate::qalgebra::{char_equal, int, qfac, rat, series_quotient, QCharacter, QPoly, QSeries, Rational};
use crate::tableaux::{enumerate_st, enumerate_st_gamma};

use super::{aff_module, Sign};

/// `d_lambda = (1 / 2 kappa) sum_i lambda_i (lambda_i - 2i + 1)`.
pub fn d_lambda(lambda: &[i64], kappa: &Rational) -> Rational {
    let s: i64 = lambda
        .iter()
        .enumerate()
        .map(|(i, &l)| l * (l - 2 * (i as i64 + 1) + 1))
        .sum();
    int(s) / (int(2) * kappa)
}

fn diagram_of(lambda: &[i64], kappa: &Rational) -> Result<PeriodicSkewDiagram> {
    if !in_lambda_plus_kappa(lambda, kappa) {
        return Err(Error::NotInLambdaPlus(format!("{lambda:?} at kappa = {kappa}")));
    }
    PeriodicSkewDiagram::from_partitions(lambda, &[], kappa.clone())
}

/// Graded dimension of the span of standard tableaux with nonnegative `rho`.
pub fn graded_dimension(d: &PeriodicSkewDiagram, max_degree: usize) -> QSeries {
    let mut s = QSeries::zero(max_degree);
    for f in enumerate_st_gamma(d, max_degree as i64) {
        s.add_term(f.weight() as usize, f.tableaux.len() as i64);
    }
    s
}

/// Character of `L(lambda)`, spanned by the positive standard tableaux.
pub fn character_l(lambda: &[i64], kappa: &Rational, max_degree: usize) -> Result<QCharacter> {
    let d = diagram_of(lambda, kappa)?;
    Ok(QCharacter::new(d_lambda(lambda, kappa), graded_dimension(&d, max_degree)))
}

/// `e_+ L` counts periodic column-strict, `e_- L` periodic row-strict plane partitions.
pub fn spherical_character(lambda: &[i64], kappa: &Rational, sign: Sign, max_degree: usize) -> Result<QCharacter> {
    let d = diagram_of(lambda, kappa)?;
    let c = count_by_weight(&Shape::Periodic(&d), sign.variant(), max_degree as i64);
    Ok(QCharacter::new(d_lambda(lambda, kappa), QSeries::from_coeffs(c)))
}

/// Spherical character from the ranks of the projectors on each fiber.
pub fn spherical_character_by_rank(
    lambda: &[i64],
    kappa: &Rational,
    sign: Sign,
    max_degree: usize,
) -> Result<QCharacter> {
    let d = diagram_of(lambda, kappa)?;
    let mut s = QSeries::zero(max_degree);
    for f in enumerate_st_gamma(&d, max_degree as i64) {
        let rank = aff_module(&f.level)?.projector(sign).rank();
        s.add_term(f.weight() as usize, rank as i64);
    }
    Ok(QCharacter::new(d_lambda(lambda, kappa), s))
}

/// `q^{d_lambda} K_check^{(kappa - m)} / (q)_n` for integral `kappa`.
pub fn spherical_character_formula(lambda: &[i64], kappa: &Rational, max_degree: usize) -> Result<QCharacter> {
    let d = diagram_of(lambda, kappa)?;
    let k = kostka_restricted(&d)?;
    Ok(QCharacter::new(d_lambda(lambda, kappa), series_quotient(&k, &qfac(d.n()), max_degree)?))
}

/// `q^{d_lambda} dim S_lambda / (1 - q)^n`.
pub fn character_standard(lambda: &[i64], kappa: &Rational, max_degree: usize) -> Result<QCharacter> {
    let theta = SkewDiagram::from_partitions(lambda, &[])?;
    let n = theta.len();
    let dim = enumerate_st(&theta).len() as i64;
    let mut den = QPoly::one();
    for _ in 0..n {
        den = &den * &qfac(1);
    }
    Ok(QCharacter::new(
        d_lambda(lambda, kappa),
        series_quotient(&QPoly::monomial(0, dim), &den, max_degree)?,
    ))
}

/// `q^{d_lambda} K_check / (q)_n` for `+` and `q^{d_lambda} K / (q)_n` for `-`.
pub fn spherical_standard(lambda: &[i64], kappa: &Rational, sign: Sign, max_degree: usize) -> Result<QCharacter> {
    let theta = SkewDiagram::from_partitions(lambda, &[])?;
    let (kc, k) = kostka(&theta);
    let num = if sign == Sign::Plus { kc } else { k };
    Ok(QCharacter::new(
        d_lambda(lambda, kappa),
        series_quotient(&num, &qfac(theta.len()), max_degree)?,
    ))
}

/// The module on a column of height `n` at `kappa = n / r`.
#[derive(Debug, Clone)]
pub struct SingleColumnReport {
    pub n: usize,
    pub r: usize,
    /// Positive standard tableaux with `T(1, 1) = 1`.
    pub rank: usize,
    /// The tableaux above correspond one-to-one to maps `[2, n] -> [0, r - 1]`.
    pub bijection_ok: bool,
    pub ch: QCharacter,
    pub ch_formula: QCharacter,
    pub ch_plus: QCharacter,
    pub ch_plus_formula: QCharacter,
    pub ch_minus: QCharacter,
    pub ch_minus_formula: QCharacter,
}

impl SingleColumnReport {
    pub fn all_match(&self) -> bool {
        let r = (self.r as u32).pow(self.n as u32 - 1) as usize;
        self.rank == r
            && self.bijection_ok
            && char_equal(&self.ch, &self.ch_formula)
            && char_equal(&self.ch_plus, &self.ch_plus_formula)
            && char_equal(&self.ch_minus, &self.ch_minus_formula)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "r": self.r,
            "kappa": format!("{}/{}", self.n, self.r),
            "rank_over_pi": self.rank,
            "expected_rank": (self.r as u64).pow(self.n as u32 - 1),
            "bijection_with_maps": self.bijection_ok,
            "ch": self.ch.to_json(),
            "ch_formula": self.ch_formula.to_json(),
            "ch_plus": self.ch_plus.to_json(),
            "ch_plus_formula": self.ch_plus_formula.to_json(),
            "ch_minus": self.ch_minus.to_json(),
            "ch_minus_formula": self.ch_minus_formula.to_json(),
            "all_match": self.all_match(),
        })
    }
}

pub fn single_column_report(n: usize, r: usize, max_degree: usize) -> Result<SingleColumnReport> {
    let d = single_column(n, r)?;
    let offset = rat(-((r * (n - 1)) as i64), 2);
    let nn = n as i64;
    let mut maps = std::collections::BTreeSet::new();
    let mut rank = 0;
    let mut bijection_ok = true;
    for f in enumerate_st_gamma(&d, ((n - 1) * r) as i64) {
        for t in f.tableaux.iter().filter(|t| t[0] == 1) {
            rank += 1;
            let mut map = vec![0i64; n + 1];
            for &v in &t[1..] {
                let ibar = (v - 1).rem_euclid(nn) + 1;
                let k = (v - ibar) / nn;
                if ibar < 2 || k < 0 || k >= r as i64 {
                    bijection_ok = false;
                }
                map[ibar as usize] = k;
            }
            bijection_ok &= maps.insert(map);
        }
    }
    bijection_ok &= maps.len() == (r as u64).pow(n as u32 - 1) as usize;

    // 1/(1-q) ((1-q^r)/(1-q))^{n-1}
    let mut num = QPoly::one();
    let mut den = qfac(1);
    let one_minus_qr = &QPoly::one() - &QPoly::monomial(r as i64, 1);
    for _ in 1..n {
        num = &num * &one_minus_qr;
        den = &den * &qfac(1);
    }
    let ch_formula = QCharacter::new(offset.clone(), series_quotient(&num, &den, max_degree)?);
    let ch = QCharacter::new(offset.clone(), graded_dimension(&d, max_degree));
    let count = |v: PpVariant| QSeries::from_coeffs(count_by_weight(&Shape::Periodic(&d), v, max_degree as i64));
    Ok(SingleColumnReport {
        n,
        r,
        rank,
        bijection_ok,
        ch,
        ch_formula,
        ch_plus: QCharacter::new(offset.clone(), count(PpVariant::ColumnStrict)),
        ch_plus_formula: QCharacter::new(offset.clone(), gf_single_column(n, r, PpVariant::ColumnStrict, max_degree)?),
        ch_minus: QCharacter::new(offset.clone(), count(PpVariant::RowStrict)),
        ch_minus_formula: QCharacter::new(offset, gf_single_column(n, r, PpVariant::RowStrict, max_degree)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn column_character() {
        let ch = character_l(&[1, 1], &int(3), 3).unwrap();
        assert_eq!(ch.offset, rat(-1, 3));
        assert_eq!(ch.series.coeffs(), &[1, 2, 3, 4]);
        assert!(char_equal(&ch, &character_standard(&[1, 1], &int(3), 3).unwrap()));
        let sp = spherical_character(&[1, 1], &int(3), Sign::Plus, 6).unwrap();
        assert_eq!(sp.series.coeffs(), &[0, 1, 1, 2, 2, 3, 3]);
        assert!(char_equal(&sp, &spherical_character_formula(&[1, 1], &int(3), 6).unwrap()));
        assert!(character_l(&[2, 1], &int(2), 3).is_err());
    }

    #[test]
    fn single_column_three_two() {
        let rep = single_column_report(3, 2, 8).unwrap();
        assert_eq!(rep.rank, 4);
        assert!(rep.all_match(), "{:?}", rep);
    }
}
