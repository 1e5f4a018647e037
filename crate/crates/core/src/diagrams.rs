//! Skew diagrams in `Z x Q` and their periodic extensions along `gamma = (-m, kappa - m)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::qalgebra::{ceil_i64, floor_i64, int, is_integer, num_den, to_i64, Rational};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: i64,
    pub col: Rational,
}

impl Cell {
    pub fn new(row: i64, col: Rational) -> Self {
        Self { row, col }
    }

    pub fn int(row: i64, col: i64) -> Self {
        Self { row, col: int(col) }
    }

    pub fn content(&self) -> Rational {
        &self.col - int(self.row)
    }

    pub fn right(&self) -> Self {
        Self { row: self.row, col: &self.col + int(1) }
    }

    pub fn left(&self) -> Self {
        Self { row: self.row, col: &self.col - int(1) }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Kind of an order relation between two cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// `(a, b)` and `(a, b + 1)`.
    Row,
    /// `(a, b)` and `(a + k + 1, b + k)` with `k >= 0`.
    Diagonal,
}

/// `f(from) <= f(to + shift * gamma)` style relation between cells of a fundamental domain.
///
/// For tableaux the target value is `f(to) - shift * n`, for plane partitions `f(to) - shift`.
/// Classical diagrams only produce `shift = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Constraint {
    pub from: usize,
    pub to: usize,
    pub shift: i64,
    pub kind: Relation,
}

/// A finite set of cells; it is a skew diagram when [`SkewDiagram::is_skew`] holds.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewDiagram {
    cells: Vec<Cell>,
}

impl SkewDiagram {
    pub fn from_cells(cells: impl IntoIterator<Item = Cell>) -> Self {
        let set: BTreeSet<Cell> = cells.into_iter().collect();
        Self { cells: set.into_iter().collect() }
    }

    /// `lambda / mu` with rows indexed from 1.
    pub fn from_rows(lambda: &[Rational], mu: &[Rational]) -> Result<Self> {
        if lambda.len() != mu.len() {
            return Err(Error::InvalidDiagram("lambda and mu differ in length".into()));
        }
        let mut cells = Vec::new();
        for (a, (l, u)) in lambda.iter().zip(mu).enumerate() {
            let len = l - u;
            if !is_integer(&len) || len.is_negative() {
                return Err(Error::InvalidDiagram(format!(
                    "row {}: lambda - mu = {len} is not a nonnegative integer",
                    a + 1
                )));
            }
            for k in 1..=to_i64(&len) {
                cells.push(Cell::new(a as i64 + 1, u + int(k)));
            }
        }
        Ok(Self::from_cells(cells))
    }

    pub fn from_partitions(lambda: &[i64], mu: &[i64]) -> Result<Self> {
        let mut mu = mu.to_vec();
        mu.resize(lambda.len(), 0);
        let l: Vec<Rational> = lambda.iter().map(|&x| int(x)).collect();
        let u: Vec<Rational> = mu.iter().map(|&x| int(x)).collect();
        Self::from_rows(&l, &u)
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: &Cell) -> bool {
        self.cells.binary_search(c).is_ok()
    }

    pub fn index_of(&self, c: &Cell) -> Option<usize> {
        self.cells.binary_search(c).ok()
    }

    pub fn is_integral(&self) -> bool {
        self.cells.iter().all(|c| is_integer(&c.col))
    }

    /// Rows are intervals and the diagonal closure condition holds.
    pub fn is_skew(&self) -> bool {
        let mut rows: BTreeMap<i64, Vec<&Rational>> = BTreeMap::new();
        for c in &self.cells {
            rows.entry(c.row).or_default().push(&c.col);
        }
        for cols in rows.values() {
            for w in cols.windows(2) {
                if w[1] - w[0] != int(1) {
                    return false;
                }
            }
        }
        for u in &self.cells {
            for v in &self.cells {
                if v.row <= u.row {
                    continue;
                }
                let d = v.content() - u.content();
                if is_integer(&d) && !d.is_negative() && !(self.contains(&u.right()) && self.contains(&v.left())) {
                    return false;
                }
            }
        }
        true
    }

    /// There are cells `(a, b)` and `(a + k + 1, b + k)` with `k >= 0`.
    pub fn is_linked(&self) -> bool {
        self.cells.iter().any(|u| {
            self.cells
                .iter()
                .any(|v| v.row > u.row && v.content() == u.content() - int(1))
        })
    }

    /// Transpose `(a, b) -> (b, a)`; requires integral columns.
    pub fn conjugate(&self) -> Result<Self> {
        let mut cells = Vec::new();
        for c in &self.cells {
            if !is_integer(&c.col) {
                return Err(Error::NonIntegerColumn(c.col.to_string()));
            }
            cells.push(Cell::int(to_i64(&c.col), c.row));
        }
        Ok(Self::from_cells(cells))
    }

    /// Row and diagonal relations between cells.
    pub fn constraints(&self) -> Vec<Constraint> {
        let mut out = Vec::new();
        for (i, u) in self.cells.iter().enumerate() {
            if let Some(j) = self.index_of(&u.right()) {
                out.push(Constraint { from: i, to: j, shift: 0, kind: Relation::Row });
            }
            let target = u.content() - int(1);
            for (j, v) in self.cells.iter().enumerate() {
                if v.row > u.row && v.content() == target {
                    out.push(Constraint { from: i, to: j, shift: 0, kind: Relation::Diagonal });
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!(self.cells.iter().map(|c| json!([c.row, c.col.to_string()])).collect::<Vec<_>>())
    }
}

/// Whether `nu` lies in the level-`kappa` dominance set of length `m = nu.len()`.
pub fn is_dominant(nu: &[Rational], kappa: &Rational) -> bool {
    if !kappa.is_positive() {
        return false;
    }
    for i in 0..nu.len() {
        for j in i + 1..nu.len() {
            let c = (&nu[i] - int(i as i64)) - (&nu[j] - int(j as i64));
            let pmax = floor_i64(&(-&c / kappa));
            for p in 0..=pmax {
                if is_integer(&(int(p) * kappa + &c)) {
                    return false;
                }
            }
            let pmax = floor_i64(&(&c / kappa));
            for p in 1..=pmax {
                if is_integer(&(int(p) * kappa - &c)) {
                    return false;
                }
            }
        }
    }
    true
}

/// `lambda / mu` with `m` rows, extended periodically by `gamma = (-m, kappa - m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicSkewDiagram {
    m: usize,
    kappa: Rational,
    lambda: Vec<Rational>,
    mu: Vec<Rational>,
    cells: Vec<Cell>,
    contents: Vec<Rational>,
}

impl PeriodicSkewDiagram {
    /// Builds the diagram and checks that its periodic extension is a skew diagram.
    pub fn new(lambda: &[Rational], mu: &[Rational], kappa: Rational) -> Result<Self> {
        let d = Self::new_unchecked(lambda, mu, kappa)?;
        if !d.kappa.is_positive() {
            return Err(Error::InvalidDiagram(format!("kappa = {} must be positive", d.kappa)));
        }
        if !d.is_valid() {
            return Err(Error::InvalidDiagram(format!(
                "{} is not a periodic skew diagram for kappa = {}",
                d.describe(),
                d.kappa
            )));
        }
        Ok(d)
    }

    pub fn from_partitions(lambda: &[i64], mu: &[i64], kappa: Rational) -> Result<Self> {
        let mut mu = mu.to_vec();
        mu.resize(lambda.len(), 0);
        let l: Vec<Rational> = lambda.iter().map(|&x| int(x)).collect();
        let u: Vec<Rational> = mu.iter().map(|&x| int(x)).collect();
        Self::new(&l, &u, kappa)
    }

    /// Builds the cell data without checking the periodic axioms.
    pub fn new_unchecked(lambda: &[Rational], mu: &[Rational], kappa: Rational) -> Result<Self> {
        if lambda.is_empty() {
            return Err(Error::InvalidDiagram("m must be at least 1".into()));
        }
        let base = SkewDiagram::from_rows(lambda, mu)?;
        if base.is_empty() {
            return Err(Error::InvalidDiagram("the diagram has no cells".into()));
        }
        let cells = base.cells;
        let contents = cells.iter().map(Cell::content).collect();
        Ok(Self { m: lambda.len(), kappa, lambda: lambda.to_vec(), mu: mu.to_vec(), cells, contents })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.cells.len()
    }

    pub fn kappa(&self) -> &Rational {
        &self.kappa
    }

    pub fn lambda(&self) -> &[Rational] {
        &self.lambda
    }

    pub fn mu(&self) -> &[Rational] {
        &self.mu
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn contents(&self) -> &[Rational] {
        &self.contents
    }

    /// `(-m, kappa - m)`.
    pub fn gamma(&self) -> (i64, Rational) {
        (-(self.m as i64), &self.kappa - int(self.m as i64))
    }

    pub fn fundamental(&self) -> SkewDiagram {
        SkewDiagram { cells: self.cells.clone() }
    }

    pub fn is_integral(&self) -> bool {
        self.cells.iter().all(|c| is_integer(&c.col)) && is_integer(&self.kappa)
    }

    pub fn describe(&self) -> String {
        let f = |v: &[Rational]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        format!("({})/({})", f(&self.lambda), f(&self.mu))
    }

    /// `c + k * gamma`.
    pub fn translate(&self, c: &Cell, k: i64) -> Cell {
        Cell {
            row: c.row - k * self.m as i64,
            col: &c.col + int(k) * (&self.kappa - int(self.m as i64)),
        }
    }

    /// Content of `cells[i] + k * gamma`.
    pub fn content_of(&self, i: usize, k: i64) -> Rational {
        &self.contents[i] + int(k) * &self.kappa
    }

    /// Writes `c = cells[i] + k * gamma` if `c` lies in the cylinder.
    pub fn locate(&self, c: &Cell) -> Option<(usize, i64)> {
        let m = self.m as i64;
        let r = (c.row - 1).rem_euclid(m) + 1;
        let k = (r - c.row) / m;
        let v = self.translate(c, -k);
        self.cells.binary_search(&v).ok().map(|i| (i, k))
    }

    pub fn contains(&self, c: &Cell) -> bool {
        self.locate(c).is_some()
    }

    /// Cells `cells[j] + k * gamma` of the cylinder lying strictly below row `row`
    /// with the given content. There are finitely many since `kappa != 0`.
    pub fn cells_with_content_below(&self, content: &Rational, row: i64) -> Vec<(usize, i64)> {
        let mut out = Vec::new();
        for (j, v) in self.cells.iter().enumerate() {
            let k = (content - &self.contents[j]) / &self.kappa;
            if !is_integer(&k) {
                continue;
            }
            let k = to_i64(&k);
            if v.row - k * self.m as i64 > row {
                out.push((j, k));
            }
        }
        out
    }

    /// Row and diagonal relations from cells of the fundamental domain to cells of the cylinder.
    /// Together with translation they generate every relation on the cylinder.
    pub fn constraints(&self) -> Vec<Constraint> {
        let mut out = Vec::new();
        for (i, u) in self.cells.iter().enumerate() {
            if let Ok(j) = self.cells.binary_search(&u.right()) {
                out.push(Constraint { from: i, to: j, shift: 0, kind: Relation::Row });
            }
            let target = &self.contents[i] - int(1);
            for (j, k) in self.cells_with_content_below(&target, u.row) {
                out.push(Constraint { from: i, to: j, shift: k, kind: Relation::Diagonal });
            }
        }
        out
    }

    /// Checks the periodic skew axioms exactly; only finitely many pairs can interact.
    pub fn is_valid(&self) -> bool {
        if !self.kappa.is_positive() {
            return false;
        }
        let m = self.m as i64;
        for (i, u) in self.cells.iter().enumerate() {
            for (j, v) in self.cells.iter().enumerate() {
                let lo = ceil_i64(&((&self.contents[i] - &self.contents[j]) / &self.kappa));
                let hi = (v.row - u.row - 1).div_euclid(m);
                for k in lo..=hi {
                    let d = self.content_of(j, k) - &self.contents[i];
                    if !is_integer(&d) || d.is_negative() {
                        continue;
                    }
                    let w = self.translate(v, k);
                    if !self.contains(&u.right()) || !self.contains(&w.left()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Cells of the copies `theta + k gamma` for `|k| <= copies`.
    pub fn window_cells(&self, copies: i64) -> Vec<(Cell, usize, i64)> {
        let mut out = Vec::new();
        for k in -copies..=copies {
            for (i, c) in self.cells.iter().enumerate() {
                out.push((self.translate(c, k), i, k));
            }
        }
        out
    }

    /// Brute-force check of the skew axioms on the copies `|k| <= copies`.
    pub fn check_periodic_window(&self, copies: i64) -> bool {
        let cells: BTreeSet<Cell> = self.window_cells(copies).into_iter().map(|t| t.0).collect();
        let diagram = SkewDiagram { cells: cells.into_iter().collect() };
        diagram.is_skew()
    }

    /// For every cell of the fundamental domain, its diagonal successors in the
    /// cylinder lie in the fundamental domain.
    pub fn is_generic(&self) -> bool {
        self.constraints()
            .iter()
            .all(|c| c.kind == Relation::Row || c.shift == 0)
    }

    /// ASCII picture of the copies `|k| <= copies`. Cells show `values[i] - k * scale`
    /// when values are given. Rows of the fundamental domain are marked with `*`.
    pub fn render(&self, copies: i64, values: Option<(&[i64], i64)>) -> String {
        let cells = self.window_cells(copies);
        let min_col = cells.iter().map(|t| t.0.col.clone()).min().unwrap_or_else(Rational::zero);
        let width = values
            .map(|(v, s)| {
                cells
                    .iter()
                    .map(|&(_, i, k)| (v[i] - k * s).to_string().len())
                    .max()
                    .unwrap_or(1)
            })
            .unwrap_or(1)
            .max(2);
        let cell_w = width + 2;
        let mut rows: BTreeMap<i64, Vec<(i64, String)>> = BTreeMap::new();
        for (c, i, k) in &cells {
            let x = (&c.col - &min_col) * int(cell_w as i64);
            let x = floor_i64(&(x + Rational::new(1.into(), 2.into())));
            let label = match values {
                Some((v, s)) => format!("[{:>width$}]", v[*i] - k * s),
                None => format!("[{}]", " ".repeat(width)),
            };
            rows.entry(c.row).or_default().push((x, label));
        }
        let mut out = String::new();
        for (r, mut items) in rows {
            items.sort();
            let mut line = String::new();
            for (x, label) in items {
                while (line.len() as i64) < x {
                    line.push(' ');
                }
                line.push_str(&label);
            }
            let mark = if (1..=self.m as i64).contains(&r) { " *" } else { "" };
            out.push_str(&format!("{r:>4} {line}{mark}\n"));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let (g0, g1) = self.gamma();
        json!({
            "lambda": self.lambda.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "mu": self.mu.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "m": self.m,
            "kappa": self.kappa.to_string(),
            "gamma": [g0, g1.to_string()],
            "n": self.n(),
            "cells": self.fundamental().to_json(),
        })
    }
}

/// Whether `lambda / mu` with `m = lambda.len()` rows is a periodic skew diagram along
/// `gamma = (-m, kappa - m)`. With no empty rows this is dominance of `lambda` and `mu`;
/// otherwise the axioms are checked directly.
pub fn is_in_y_gamma(lambda: &[Rational], mu: &[Rational], kappa: &Rational) -> bool {
    let Ok(d) = PeriodicSkewDiagram::new_unchecked(lambda, mu, kappa.clone()) else {
        return false;
    };
    if !kappa.is_positive() {
        return false;
    }
    if lambda.iter().zip(mu).all(|(l, u)| l != u) {
        is_dominant(lambda, kappa) && is_dominant(mu, kappa)
    } else {
        d.is_valid()
    }
}

/// `lambda` (with `m = lambda.len()` nonzero parts) satisfies `s - m - lambda_1 + lambda_m >= 0`
/// where `kappa = s / r` in lowest terms.
pub fn in_lambda_plus_kappa(lambda: &[i64], kappa: &Rational) -> bool {
    if lambda.is_empty() || !kappa.is_positive() {
        return false;
    }
    if lambda.windows(2).any(|w| w[0] < w[1]) || *lambda.last().unwrap() < 1 {
        return false;
    }
    let (s, _) = num_den(kappa);
    let m = lambda.len() as i64;
    s - m - lambda[0] + lambda[lambda.len() - 1] >= 0
}

/// Genericity of `kappa = s / r` for a partition `lambda` with `m` rows: the shifted copy
/// `lambda - r gamma` meets no diagonal below a cell of `lambda`, i.e. `lambda_1 <= s - m`.
pub fn is_generic_partition(lambda: &[i64], kappa: &Rational) -> bool {
    let (s, _) = num_den(kappa);
    let m = lambda.len() as i64;
    lambda[0] <= s - m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebra::rat;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn dominance_examples() {
        assert!(!is_dominant(&ints(&[1, 0]), &int(2)));
        assert!(is_dominant(&ints(&[1, 0]), &int(3)));
        assert!(is_dominant(&ints(&[5, 3]), &int(5)));
        assert!(!is_dominant(&ints(&[5, 3]), &int(0)));
        assert!(!is_dominant(&ints(&[5, 3]), &int(-2)));
    }

    #[test]
    fn running_example_is_periodic() {
        let d = PeriodicSkewDiagram::from_partitions(&[5, 3], &[1, 0], int(5)).unwrap();
        assert_eq!(d.gamma(), (-2, int(3)));
        assert_eq!(d.n(), 7);
        assert!(d.check_periodic_window(3));
        let t: Vec<Rational> = d.contents().to_vec();
        assert_eq!(t, ints(&[1, 2, 3, 4, -1, 0, 1]));
    }

    #[test]
    fn overlap_detected_for_small_kappa() {
        assert!(is_in_y_gamma(&ints(&[1, 1]), &ints(&[0, 0]), &int(2)));
        assert!(!is_in_y_gamma(&ints(&[1, 1]), &ints(&[0, 0]), &rat(1, 2)));
        let bad = PeriodicSkewDiagram::new_unchecked(&ints(&[1, 1]), &ints(&[0, 0]), rat(1, 2)).unwrap();
        assert!(!bad.check_periodic_window(3));
        assert!(!bad.is_valid());
        assert!(PeriodicSkewDiagram::new(&ints(&[1, 1]), &ints(&[0, 0]), rat(1, 2)).is_err());
    }

    #[test]
    fn classical_skew_checks() {
        let d = SkewDiagram::from_partitions(&[5, 3], &[1, 0]).unwrap();
        assert!(d.is_skew());
        assert!(d.is_linked());
        let gap = SkewDiagram::from_cells([Cell::int(1, 1), Cell::int(1, 3)]);
        assert!(!gap.is_skew());
        let bad = SkewDiagram::from_cells([Cell::int(1, 1), Cell::int(2, 1), Cell::int(2, 2)]);
        assert!(!bad.is_skew());
        let row = SkewDiagram::from_partitions(&[3], &[]).unwrap();
        assert!(!row.is_linked());
        assert!(row.conjugate().unwrap().is_linked());
    }

    #[test]
    fn conjugate_of_two_one() {
        let d = SkewDiagram::from_partitions(&[2, 1], &[]).unwrap();
        assert_eq!(d.conjugate().unwrap(), d);
        let e = SkewDiagram::from_partitions(&[3, 1], &[]).unwrap();
        assert_eq!(e.conjugate().unwrap(), SkewDiagram::from_partitions(&[2, 1, 1], &[]).unwrap());
        let f = SkewDiagram::from_cells([Cell::new(1, rat(1, 2))]);
        assert!(matches!(f.conjugate(), Err(Error::NonIntegerColumn(_))));
    }

    #[test]
    fn lambda_plus_examples() {
        assert!(in_lambda_plus_kappa(&[2, 1], &int(3)));
        assert!(!in_lambda_plus_kappa(&[2, 1], &int(2)));
        assert!(in_lambda_plus_kappa(&[1, 1, 1], &rat(3, 2)));
        assert!(!in_lambda_plus_kappa(&[3, 1], &int(3)));
    }

    #[test]
    fn genericity_by_definition_and_by_partition() {
        let cases: &[(&[i64], Rational, bool)] = &[
            (&[2, 1], int(3), false),
            (&[1, 1], int(3), true),
            (&[2, 1], int(5), true),
            (&[1, 1, 1], int(3), false),
            (&[1, 1, 1], rat(4, 3), true),
            (&[1, 1, 1], rat(3, 2), false),
        ];
        for (lambda, kappa, expected) in cases {
            let d = PeriodicSkewDiagram::from_partitions(lambda, &[], kappa.clone()).unwrap();
            assert_eq!(d.is_generic(), *expected, "{lambda:?} {kappa}");
            assert_eq!(is_generic_partition(lambda, kappa), *expected);
        }
    }

    #[test]
    fn irrational_like_shift_keeps_diagonals_apart() {
        let d = PeriodicSkewDiagram::from_partitions(&[2, 1], &[], rat(7, 2)).unwrap();
        assert!(d.is_generic());
    }

    #[test]
    fn render_running_example() {
        let d = PeriodicSkewDiagram::from_partitions(&[5, 3], &[1, 0], int(5)).unwrap();
        let vals = [0, 1, 1, 3, 1, 2, 2];
        let pic = d.render(1, Some((&vals, 1)));
        let lines: Vec<&str> = pic.lines().collect();
        assert_eq!(lines.len(), 6);
        assert!(lines[0].starts_with("  -1"));
        assert!(lines[0].contains("[-1][ 0][ 0][ 2]"));
        assert!(lines[2].contains("[ 0][ 1][ 1][ 3] *"));
        assert!(lines[5].contains("[ 2][ 3][ 3]"));
    }
}
