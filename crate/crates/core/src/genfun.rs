//! Generating functions of plane partitions, by enumeration and in closed form.

use crate::diagrams::{PeriodicSkewDiagram, SkewDiagram};
use crate::error::{Error, Result};
use crate::plane_partitions::{count_by_weight, kostka, kostka_restricted, PpVariant, Shape};
use crate::qalgebra::{gcd, qfac, series_quotient, QPoly, QSeries};

/// `sum_p q^{|p|}` through degree `max_degree`.
pub fn gf_enumerated(shape: &Shape, variant: PpVariant, max_degree: usize) -> QSeries {
    QSeries::from_coeffs(count_by_weight(shape, variant, max_degree as i64))
}

/// `K_check / (q)_n` for column-strict and `K / (q)_n` for row-strict plane partitions.
pub fn gf_classical_formula(theta: &SkewDiagram, variant: PpVariant, max_degree: usize) -> Result<QSeries> {
    let (kc, k) = kostka(theta);
    let num = match variant {
        PpVariant::ColumnStrict => kc,
        PpVariant::RowStrict => k,
        PpVariant::Weak => {
            return Err(Error::Precondition("no closed form for weak plane partitions".into()))
        }
    };
    series_quotient(&num, &qfac(theta.len()), max_degree)
}

/// `K_check^{(kappa - m)} / (q)_n` for periodic column-strict plane partitions, `kappa` a
/// positive integer.
pub fn gf_periodic_formula(d: &PeriodicSkewDiagram, max_degree: usize) -> Result<QSeries> {
    let k = kostka_restricted(d)?;
    series_quotient(&k, &qfac(d.n()), max_degree)
}

/// Periodic plane partitions on a column of height `n` with `kappa = n / r`:
///
/// * weak and row-strict: `(q)_{n+r-1} / ((q)_n (q)_r)`,
/// * column-strict: `q^{n(n-1)/2} (q)_{r-1} / ((q)_n (q)_{r-n})` for `r >= n`, else `0`.
///
/// The power of `q` in the column-strict case is the weight of the smallest filling
/// `0 < 1 < ... < n - 1`.
pub fn gf_single_column(n: usize, r: usize, variant: PpVariant, max_degree: usize) -> Result<QSeries> {
    if gcd(n as i64, r as i64) != 1 {
        return Err(Error::GcdRequired { n: n as i64, r: r as i64 });
    }
    match variant {
        PpVariant::Weak | PpVariant::RowStrict => {
            let num = qfac(n + r - 1);
            let den = &qfac(n) * &qfac(r);
            series_quotient(&num, &den, max_degree)
        }
        PpVariant::ColumnStrict => {
            if r < n {
                return Ok(QSeries::zero(max_degree));
            }
            let num = &qfac(r - 1) * &QPoly::monomial((n * (n - 1) / 2) as i64, 1);
            let den = &qfac(n) * &qfac(r - n);
            series_quotient(&num, &den, max_degree)
        }
    }
}

/// Column of height `n` as a periodic diagram with `kappa = n / r`.
pub fn single_column(n: usize, r: usize) -> Result<PeriodicSkewDiagram> {
    if gcd(n as i64, r as i64) != 1 {
        return Err(Error::GcdRequired { n: n as i64, r: r as i64 });
    }
    PeriodicSkewDiagram::from_partitions(&vec![1; n], &[], crate::qalgebra::rat(n as i64, r as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebra::int;

    #[test]
    fn two_one_column_strict() {
        let th = SkewDiagram::from_partitions(&[2, 1], &[]).unwrap();
        let e = gf_enumerated(&Shape::Classical(&th), PpVariant::ColumnStrict, 5);
        assert_eq!(e.coeffs(), &[0, 1, 2, 3, 5, 7]);
        assert_eq!(gf_classical_formula(&th, PpVariant::ColumnStrict, 5).unwrap(), e);
    }

    #[test]
    fn column_periodic() {
        let d = PeriodicSkewDiagram::from_partitions(&[1, 1], &[], int(3)).unwrap();
        let f = gf_periodic_formula(&d, 6).unwrap();
        assert_eq!(f.coeffs(), &[0, 1, 1, 2, 2, 3, 3]);
        assert!(gf_periodic_formula(&PeriodicSkewDiagram::from_partitions(&[1, 1], &[], crate::qalgebra::rat(5, 2)).unwrap(), 3).is_err());
    }

    #[test]
    fn single_column_small_cases() {
        assert_eq!(gf_single_column(2, 3, PpVariant::ColumnStrict, 4).unwrap().coeffs(), &[0, 1, 1, 1, 1]);
        assert_eq!(gf_single_column(2, 3, PpVariant::Weak, 4).unwrap().coeffs(), &[1, 1, 2, 2, 2]);
        assert_eq!(gf_single_column(3, 2, PpVariant::ColumnStrict, 4).unwrap().coeffs(), &[0; 5]);
        assert!(gf_single_column(2, 4, PpVariant::Weak, 4).is_err());
        for (n, r) in [(2, 3), (3, 2), (3, 4), (2, 1), (3, 1), (1, 2)] {
            let d = single_column(n, r).unwrap();
            for v in [PpVariant::Weak, PpVariant::RowStrict, PpVariant::ColumnStrict] {
                assert_eq!(
                    gf_enumerated(&Shape::Periodic(&d), v, 8),
                    gf_single_column(n, r, v, 8).unwrap(),
                    "n={n} r={r} {v:?}"
                );
            }
        }
    }
}
