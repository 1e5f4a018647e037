//! Standard tableaux on skew diagrams and on their periodic extensions.
//!
//! A tableau is stored as the vector of its values on the cells of the (fundamental)
//! diagram, in the diagram's cell order. A periodic tableau is extended by
//! `T(u + gamma) = T(u) - n`.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::affine_weyl::{residue, AffinePermutation};
use crate::diagrams::{is_dominant, Cell, Constraint, PeriodicSkewDiagram, SkewDiagram};
use crate::error::{Error, Result};
use crate::plane_partitions::{enumerate_pp, PpVariant, Shape};
use crate::qalgebra::{int, Rational};

/// All orderings `cells -> 1..=n` compatible with `constraints`, in lexicographic order
/// of the value vectors.
pub fn linear_extensions(n: usize, constraints: &[Constraint]) -> Vec<Vec<i64>> {
    let mut preds = vec![0u64; n];
    for c in constraints {
        if c.from != c.to {
            preds[c.to] |= 1 << c.from;
        }
    }
    let mut out = Vec::new();
    let mut values = vec![0i64; n];
    fn rec(step: usize, placed: u64, preds: &[u64], values: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let n = preds.len();
        if step == n {
            out.push(values.clone());
            return;
        }
        for i in 0..n {
            if placed & (1 << i) == 0 && preds[i] & !placed == 0 {
                values[i] = step as i64 + 1;
                rec(step + 1, placed | (1 << i), preds, values, out);
            }
        }
    }
    rec(0, 0, &preds, &mut values, &mut out);
    out.sort();
    out
}

/// The row reading tableau: cells numbered left to right, top to bottom.
pub fn row_reading(theta: &SkewDiagram) -> Vec<i64> {
    (1..=theta.len() as i64).collect()
}

/// Standard tableaux of a (classical) skew diagram.
pub fn enumerate_st(theta: &SkewDiagram) -> Vec<Vec<i64>> {
    linear_extensions(theta.len(), &theta.constraints())
}

pub fn is_standard_classical(theta: &SkewDiagram, values: &[i64]) -> bool {
    let n = theta.len();
    if values.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in values {
        if v < 1 || v > n as i64 || seen[v as usize - 1] {
            return false;
        }
        seen[v as usize - 1] = true;
    }
    theta.constraints().iter().all(|c| values[c.from] < values[c.to])
}

/// `c_T(i) = content(T^{-1}(i))` for `i = 1..=n`.
pub fn content_vector_classical(theta: &SkewDiagram, values: &[i64]) -> Vec<Rational> {
    let mut out = vec![int(0); theta.len()];
    for (cell, &v) in theta.cells().iter().zip(values) {
        out[v as usize - 1] = cell.content();
    }
    out
}

/// Values are in bijection with the residues mod `n`.
pub fn has_distinct_residues(values: &[i64]) -> bool {
    let n = values.len();
    let mut seen = vec![false; n];
    for &v in values {
        let r = residue(v, n) - 1;
        if seen[r] {
            return false;
        }
        seen[r] = true;
    }
    true
}

/// Standardness on the cylinder, checked through the finitely many relations
/// leaving the fundamental domain.
pub fn is_standard(d: &PeriodicSkewDiagram, values: &[i64]) -> bool {
    is_standard_with(d.n(), &d.constraints(), values)
}

pub fn is_standard_with(n: usize, constraints: &[Constraint], values: &[i64]) -> bool {
    values.len() == n
        && has_distinct_residues(values)
        && constraints
            .iter()
            .all(|c| values[c.from] < values[c.to] - c.shift * n as i64)
}

/// `(index, k)` with `T(cells[index] + k gamma) = j`.
pub fn preimage(values: &[i64], j: i64) -> (usize, i64) {
    let n = values.len() as i64;
    let r = residue(j, values.len());
    let idx = values
        .iter()
        .position(|&v| residue(v, values.len()) == r)
        .expect("values must cover every residue");
    (idx, (values[idx] - j) / n)
}

/// `c_T(j)` for any integer `j`; satisfies `c_T(j + n) = c_T(j) - kappa`.
pub fn content_at(d: &PeriodicSkewDiagram, values: &[i64], j: i64) -> Rational {
    let (idx, k) = preimage(values, j);
    d.content_of(idx, k)
}

/// `(c_T(1), ..., c_T(n))`.
pub fn content_vector(d: &PeriodicSkewDiagram, values: &[i64]) -> Vec<Rational> {
    (1..=d.n() as i64).map(|j| content_at(d, values, j)).collect()
}

/// `w T = w o T`.
pub fn act(w: &AffinePermutation, values: &[i64]) -> Vec<i64> {
    values.iter().map(|&v| w.apply(v)).collect()
}

/// `rho(T)(u) = floor((T(u) - 1) / n)`.
pub fn rho(values: &[i64]) -> Vec<i64> {
    let n = values.len() as i64;
    values.iter().map(|&v| (v - 1).div_euclid(n)).collect()
}

/// `T - n rho(T)`, a bijection onto `1..=n`.
pub fn bar(values: &[i64]) -> Vec<i64> {
    let n = values.len() as i64;
    values.iter().map(|&v| (v - 1).rem_euclid(n) + 1).collect()
}

/// The cells of the cylinder carrying the values `1..=n`.
pub fn theta_t(d: &PeriodicSkewDiagram, values: &[i64]) -> SkewDiagram {
    SkewDiagram::from_cells(
        d.cells()
            .iter()
            .zip(rho(values))
            .map(|(c, k)| d.translate(c, k)),
    )
}

/// `p^{-1}(0)`: the cells `u + p(u) gamma`.
pub fn zero_level(d: &PeriodicSkewDiagram, p: &[i64]) -> SkewDiagram {
    SkewDiagram::from_cells(d.cells().iter().zip(p).map(|(c, &k)| d.translate(c, k)))
}

/// Transports a standard tableau `s` of `p^{-1}(0)` to the periodic tableau
/// `T(u) = s(u + p(u) gamma) + n p(u)`.
pub fn transport(d: &PeriodicSkewDiagram, p: &[i64], level: &SkewDiagram, s: &[i64]) -> Vec<i64> {
    let n = d.n() as i64;
    d.cells()
        .iter()
        .zip(p)
        .map(|(c, &k)| {
            let idx = level.index_of(&d.translate(c, k)).expect("cell of the zero level");
            s[idx] + n * k
        })
        .collect()
}

/// Inverse of [`transport`]: the tableau of `p^{-1}(0)` underlying `T` with `rho(T) = p`.
pub fn untransport(d: &PeriodicSkewDiagram, values: &[i64]) -> (Vec<i64>, SkewDiagram, Vec<i64>) {
    let p = rho(values);
    let level = zero_level(d, &p);
    let mut s = vec![0i64; d.n()];
    for (i, c) in d.cells().iter().enumerate() {
        let idx = level.index_of(&d.translate(c, p[i])).unwrap();
        s[idx] = values[i] - d.n() as i64 * p[i];
    }
    (p, level, s)
}

/// The section `T_p = S + n p` where `S` fills the levels of `p` from the top value
/// downward, each level in row reading order.
pub fn fiber_section(d: &PeriodicSkewDiagram, p: &[i64]) -> Vec<i64> {
    let n = d.n() as i64;
    let mut order: Vec<usize> = (0..d.n()).collect();
    order.sort_by_key(|&i| (-p[i], i));
    let mut s = vec![0i64; d.n()];
    for (rank, &i) in order.iter().enumerate() {
        s[i] = rank as i64 + 1;
    }
    s.iter().zip(p).map(|(&v, &k)| v + n * k).collect()
}

/// One fiber of `St_gamma`: all standard tableaux `T` with `rho(T) = p`.
#[derive(Debug, Clone)]
pub struct Fiber {
    pub p: Vec<i64>,
    pub level: SkewDiagram,
    pub tableaux: Vec<Vec<i64>>,
}

impl Fiber {
    pub fn weight(&self) -> i64 {
        self.p.iter().sum()
    }
}

pub fn fiber(d: &PeriodicSkewDiagram, p: &[i64]) -> Fiber {
    let level = zero_level(d, p);
    let tableaux = enumerate_st(&level)
        .iter()
        .map(|s| transport(d, p, &level, s))
        .collect::<Vec<_>>();
    let mut tableaux = tableaux;
    tableaux.sort();
    Fiber { p: p.to_vec(), level, tableaux }
}

/// Standard tableaux `T` of the cylinder with `rho(T)` a nonnegative weak plane
/// partition of weight at most `max_weight`, fiber by fiber in the order
/// `(|p|, p, T)`.
pub fn enumerate_st_gamma(d: &PeriodicSkewDiagram, max_weight: i64) -> Vec<Fiber> {
    enumerate_pp(&Shape::Periodic(d), PpVariant::Weak, max_weight)
        .iter()
        .map(|p| fiber(d, p))
        .collect()
}

pub fn is_positive(values: &[i64]) -> bool {
    values.iter().all(|&v| v >= 1)
}

/// `nu` with `T^{-1}([1, k]) = nu / mu`, for a standard tableau of the fundamental domain.
pub fn partial_shape(d: &PeriodicSkewDiagram, values: &[i64], k: i64) -> Vec<Rational> {
    let mut nu = d.mu().to_vec();
    for (c, &v) in d.cells().iter().zip(values) {
        if v <= k {
            nu[c.row as usize - 1] += int(1);
        }
    }
    nu
}

/// Every partial shape lies in the level-`kappa` dominance set.
pub fn is_restricted(d: &PeriodicSkewDiagram, values: &[i64]) -> bool {
    (1..=d.n() as i64).all(|k| is_dominant(&partial_shape(d, values, k), d.kappa()))
}

/// Restricted standard tableaux of the fundamental domain.
pub fn enumerate_restricted(d: &PeriodicSkewDiagram) -> Result<Vec<Vec<i64>>> {
    let k = d.kappa();
    if !k.is_integer() || *k < int(1) {
        return Err(Error::LevelRequiresPositiveInteger(k.to_string()));
    }
    Ok(enumerate_st(&d.fundamental())
        .into_iter()
        .filter(|t| is_restricted(d, t))
        .collect())
}

pub fn tableau_json(cells: &[Cell], values: &[i64]) -> Value {
    let mut rows: BTreeMap<i64, Vec<Value>> = BTreeMap::new();
    for (c, v) in cells.iter().zip(values) {
        rows.entry(c.row).or_default().push(json!([c.col.to_string(), v]));
    }
    json!({
        "values": values,
        "rows": rows.into_iter().map(|(r, v)| json!({"row": r, "cells": v})).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine_weyl::Generator;

    fn running() -> PeriodicSkewDiagram {
        PeriodicSkewDiagram::from_partitions(&[5, 3], &[1, 0], int(5)).unwrap()
    }

    /// Number of standard tableaux of `lambda / mu` from the Aitken determinant.
    fn aitken(lambda: &[i64], mu: &[i64]) -> i64 {
        let m = lambda.len();
        let n: i64 = lambda.iter().sum::<i64>() - mu.iter().sum::<i64>();
        let fact = |k: i64| -> Rational {
            if k < 0 {
                int(0)
            } else {
                Rational::from_integer((1..=k).product::<i64>().into())
            }
        };
        let mut a: Vec<Vec<Rational>> = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        let k = lambda[i] - mu[j] - i as i64 + j as i64;
                        if k < 0 {
                            int(0)
                        } else {
                            int(1) / fact(k)
                        }
                    })
                    .collect()
            })
            .collect();
        let mut det = int(1);
        for c in 0..m {
            let Some(piv) = (c..m).find(|&r| a[r][c] != int(0)) else { return 0 };
            if piv != c {
                a.swap(piv, c);
                det = -det;
            }
            det *= a[c][c].clone();
            for r in c + 1..m {
                let f = &a[r][c] / &a[c][c];
                for cc in c..m {
                    let t = &f * &a[c][cc];
                    a[r][cc] -= t;
                }
            }
        }
        let total = det * fact(n);
        crate::qalgebra::to_i64(&total)
    }

    #[test]
    fn counts_match_aitken() {
        let shapes: &[(&[i64], &[i64])] = &[
            (&[5, 3], &[1, 0]),
            (&[3, 2, 1], &[]),
            (&[4, 2, 2], &[2, 1]),
            (&[3, 3], &[1]),
            (&[2, 2, 2], &[1, 1]),
        ];
        for (l, u) in shapes {
            let mut mu = u.to_vec();
            mu.resize(l.len(), 0);
            let d = SkewDiagram::from_partitions(l, &mu).unwrap();
            assert_eq!(enumerate_st(&d).len() as i64, aitken(l, &mu), "{l:?}/{u:?}");
        }
        let d = SkewDiagram::from_partitions(&[5, 3], &[1, 0]).unwrap();
        assert_eq!(enumerate_st(&d).len(), 28);
    }

    #[test]
    fn row_reading_contents() {
        let d = running();
        let t = row_reading(&d.fundamental());
        assert!(is_standard(&d, &t));
        assert_eq!(
            content_vector(&d, &t),
            [1, 2, 3, 4, -1, 0, 1].iter().map(|&x| int(x)).collect::<Vec<_>>()
        );
        for j in -10..10 {
            assert_eq!(content_at(&d, &t, j + 7), content_at(&d, &t, j) - int(5));
        }
    }

    #[test]
    fn rho_and_bar() {
        let v = [0, 6, 17, 8, 9];
        assert_eq!(rho(&v), vec![-1, 1, 3, 1, 1]);
        assert_eq!(bar(&v), vec![5, 1, 2, 3, 4]);
        let d = PeriodicSkewDiagram::from_partitions(&[3, 2], &[], int(5)).unwrap();
        let tt = theta_t(&d, &v);
        assert_eq!(tt.len(), 5);
        assert!(tt.contains(&Cell::int(3, -2)));
        assert!(tt.contains(&Cell::int(-5, 12)));
    }

    #[test]
    fn action_permutes_contents() {
        let d = running();
        let t = row_reading(&d.fundamental());
        let n = d.n();
        for i in 0..n {
            let w = AffinePermutation::generator(Generator::S(i), n);
            let wt = act(&w, &t);
            let winv = w.inverse();
            for j in -3..10 {
                assert_eq!(content_at(&d, &wt, j), content_at(&d, &t, winv.apply(j)));
            }
        }
    }

    #[test]
    fn fibers_of_a_column() {
        let d = PeriodicSkewDiagram::from_partitions(&[1, 1], &[], int(3)).unwrap();
        let fibers = enumerate_st_gamma(&d, 1);
        assert_eq!(fibers.len(), 2);
        assert_eq!(fibers[0].p, vec![0, 0]);
        assert_eq!(fibers[0].tableaux.len(), 1);
        assert_eq!(fibers[1].p, vec![0, 1]);
        assert_eq!(fibers[1].tableaux.len(), 2);
    }

    #[test]
    fn fibers_are_standard_and_contain_section() {
        for (l, u, k) in [(&[5, 3][..], &[1, 0][..], int(5)), (&[2, 1], &[0, 0], int(3)), (&[2, 2], &[], int(3))] {
            let d = PeriodicSkewDiagram::from_partitions(l, u, k).unwrap();
            for f in enumerate_st_gamma(&d, 2) {
                for t in &f.tableaux {
                    assert!(is_standard(&d, t));
                    assert_eq!(rho(t), f.p);
                    let (p, level, s) = untransport(&d, t);
                    assert_eq!(transport(&d, &p, &level, &s), *t);
                }
                let sec = fiber_section(&d, &f.p);
                assert!(f.tableaux.contains(&sec), "section of {:?}", f.p);
            }
        }
    }

    #[test]
    fn restricted_examples() {
        let d = PeriodicSkewDiagram::from_partitions(&[1, 1], &[], int(2)).unwrap();
        let t = row_reading(&d.fundamental());
        assert_eq!(partial_shape(&d, &t, 1), vec![int(1), int(0)]);
        assert!(!is_restricted(&d, &t));
        let d = PeriodicSkewDiagram::from_partitions(&[2, 1], &[], int(3)).unwrap();
        assert_eq!(enumerate_restricted(&d).unwrap(), vec![vec![1, 3, 2]]);
        let d = PeriodicSkewDiagram::from_partitions(&[2, 1], &[], rat_k()).unwrap();
        assert!(enumerate_restricted(&d).is_err());
    }

    fn rat_k() -> Rational {
        crate::qalgebra::rat(7, 2)
    }
}
