//! Plane partitions on skew diagrams and cylinders, charge, Kostka polynomials and the
//! bijections between tableau data and plane partitions.

use crate::diagrams::{Cell, Constraint, PeriodicSkewDiagram, Relation, SkewDiagram};
use crate::error::{Error, Result};
use crate::qalgebra::{is_integer, QPoly};
use crate::tableaux::{enumerate_restricted, enumerate_st, is_restricted, is_standard_classical};

/// A diagram on which plane partitions live.
#[derive(Debug, Clone, Copy)]
pub enum Shape<'a> {
    Classical(&'a SkewDiagram),
    /// Plane partitions extended by `p(u + gamma) = p(u) - 1`.
    Periodic(&'a PeriodicSkewDiagram),
}

impl Shape<'_> {
    pub fn n(&self) -> usize {
        match self {
            Shape::Classical(d) => d.len(),
            Shape::Periodic(d) => d.n(),
        }
    }

    pub fn cells(&self) -> &[Cell] {
        match self {
            Shape::Classical(d) => d.cells(),
            Shape::Periodic(d) => d.cells(),
        }
    }

    pub fn constraints(&self) -> Vec<Constraint> {
        match self {
            Shape::Classical(d) => d.constraints(),
            Shape::Periodic(d) => d.constraints(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PpVariant {
    Weak,
    /// Strict along rows.
    RowStrict,
    /// Strict along columns and diagonals `(a, b) -> (a + k + 1, b + k)`.
    ColumnStrict,
}

impl PpVariant {
    fn strict(self, kind: Relation) -> bool {
        matches!(
            (self, kind),
            (PpVariant::RowStrict, Relation::Row) | (PpVariant::ColumnStrict, Relation::Diagonal)
        )
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "weak" | "W" | "w" => Ok(PpVariant::Weak),
            "R" | "row" | "row-strict" | "r" => Ok(PpVariant::RowStrict),
            "C" | "column" | "column-strict" | "c" => Ok(PpVariant::ColumnStrict),
            _ => Err(Error::Parse(format!("unknown plane partition variant {s:?}"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PpVariant::Weak => "weak",
            PpVariant::RowStrict => "row-strict",
            PpVariant::ColumnStrict => "column-strict",
        }
    }
}

fn holds(c: &Constraint, variant: PpVariant, p: &[i64]) -> bool {
    let rhs = p[c.to] - c.shift;
    if variant.strict(c.kind) {
        p[c.from] < rhs
    } else {
        p[c.from] <= rhs
    }
}

/// Order relations only, with no sign condition.
pub fn satisfies_pp_relations(shape: &Shape, variant: PpVariant, p: &[i64]) -> bool {
    p.len() == shape.n() && shape.constraints().iter().all(|c| holds(c, variant, p))
}

/// A nonnegative plane partition of the given variant.
pub fn is_pp(shape: &Shape, variant: PpVariant, p: &[i64]) -> bool {
    p.iter().all(|&x| x >= 0) && satisfies_pp_relations(shape, variant, p)
}

pub fn weight(p: &[i64]) -> i64 {
    p.iter().sum()
}

/// Nonnegative plane partitions of weight at most `max_weight`, ordered by weight and
/// then lexicographically.
pub fn enumerate_pp(shape: &Shape, variant: PpVariant, max_weight: i64) -> Vec<Vec<i64>> {
    let n = shape.n();
    let mut by_last: Vec<Vec<Constraint>> = vec![Vec::new(); n];
    for c in shape.constraints() {
        by_last[c.from.max(c.to)].push(c);
    }
    let mut out = Vec::new();
    let mut p = vec![0i64; n];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        left: i64,
        p: &mut Vec<i64>,
        by_last: &[Vec<Constraint>],
        variant: PpVariant,
        out: &mut Vec<Vec<i64>>,
    ) {
        if i == p.len() {
            out.push(p.clone());
            return;
        }
        for v in 0..=left {
            p[i] = v;
            if by_last[i].iter().all(|c| holds(c, variant, p)) {
                rec(i + 1, left - v, p, by_last, variant, out);
            }
        }
    }
    rec(0, max_weight, &mut p, &by_last, variant, &mut out);
    out.sort_by(|a, b| (weight(a), a).cmp(&(weight(b), b)));
    out
}

/// Counts of plane partitions by weight, `0..=max_weight`.
pub fn count_by_weight(shape: &Shape, variant: PpVariant, max_weight: i64) -> Vec<i64> {
    let mut counts = vec![0i64; max_weight as usize + 1];
    for p in enumerate_pp(shape, variant, max_weight) {
        counts[weight(&p) as usize] += 1;
    }
    counts
}

/// Cell carrying value `i` in a standard tableau.
fn inverse(values: &[i64]) -> Vec<usize> {
    let mut inv = vec![0usize; values.len()];
    for (idx, &v) in values.iter().enumerate() {
        inv[v as usize - 1] = idx;
    }
    inv
}

/// `d_i(T)` for `i = 1..n-1`: whether `i + 1` sits in a strictly lower row, at an integral
/// column offset.
pub fn charge_d(theta: &SkewDiagram, values: &[i64]) -> Vec<u8> {
    let inv = inverse(values);
    let cells = theta.cells();
    (0..values.len().saturating_sub(1))
        .map(|i| {
            let (u, v) = (&cells[inv[i]], &cells[inv[i + 1]]);
            u8::from(v.row > u.row && is_integer(&(&v.col - &u.col)))
        })
        .collect()
}

/// `h_T = sum_i (d_1 + ... + d_{i-1}) e_i`.
pub fn h_from_charge(d: &[u8]) -> Vec<i64> {
    let mut h = vec![0i64; d.len() + 1];
    for i in 1..h.len() {
        h[i] = h[i - 1] + d[i - 1] as i64;
    }
    h
}

pub fn h_vector(theta: &SkewDiagram, values: &[i64]) -> Vec<i64> {
    h_from_charge(&charge_d(theta, values))
}

/// Kostka polynomials `(K_check, K)` with `K(q) = q^{n(n-1)/2} K_check(q^{-1})`.
pub fn kostka(theta: &SkewDiagram) -> (QPoly, QPoly) {
    kostka_with(theta, &|t| charge_d(theta, t))
}

/// [`kostka`] with a substitute charge statistic.
pub fn kostka_with(theta: &SkewDiagram, charge: &dyn Fn(&[i64]) -> Vec<u8>) -> (QPoly, QPoly) {
    let n = theta.len() as i64;
    let mut k = QPoly::zero();
    for t in enumerate_st(theta) {
        k.add_term(weight(&h_from_charge(&charge(&t))), 1);
    }
    let kk = k.reverse(n * (n - 1) / 2);
    (k, kk)
}

/// Level-restricted `K_check`: the sum runs over restricted standard tableaux only.
pub fn kostka_restricted(d: &PeriodicSkewDiagram) -> Result<QPoly> {
    let theta = d.fundamental();
    kostka_restricted_with(d, &|t| charge_d(&theta, t))
}

pub fn kostka_restricted_with(
    d: &PeriodicSkewDiagram,
    charge: &dyn Fn(&[i64]) -> Vec<u8>,
) -> Result<QPoly> {
    let mut k = QPoly::zero();
    for t in enumerate_restricted(d)? {
        k.add_term(weight(&h_from_charge(&charge(&t))), 1);
    }
    Ok(k)
}

/// `zeta_1 <= ... <= zeta_n` and `zeta_1 >= 0`.
pub fn is_antidominant_nonneg(zeta: &[i64]) -> bool {
    zeta.first().is_none_or(|&z| z >= 0) && zeta.windows(2).all(|w| w[0] <= w[1])
}

/// Anti-dominant weights with nonnegative entries and `|zeta| <= max_weight`.
pub fn enumerate_antidominant(n: usize, max_weight: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut z = vec![0i64; n];
    fn rec(i: usize, lo: i64, left: i64, z: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == z.len() {
            out.push(z.clone());
            return;
        }
        let rem = (z.len() - i) as i64;
        let mut v = lo;
        while v * rem <= left {
            z[i] = v;
            rec(i + 1, v, left - v, z, out);
            v += 1;
        }
    }
    rec(0, 0, max_weight, &mut z, &mut out);
    out
}

/// `(zeta, T) -> p` with `p(T^{-1}(i)) = (zeta + h_T)_i`.
pub fn classical_bijection(theta: &SkewDiagram, zeta: &[i64], values: &[i64]) -> Result<Vec<i64>> {
    if !is_antidominant_nonneg(zeta) || zeta.len() != theta.len() {
        return Err(Error::NotAntiDominant(format!("{zeta:?}")));
    }
    if !is_standard_classical(theta, values) {
        return Err(Error::InvalidTableau(format!("{values:?} is not standard")));
    }
    let h = h_vector(theta, values);
    Ok(values
        .iter()
        .map(|&v| zeta[v as usize - 1] + h[v as usize - 1])
        .collect())
}

/// Inverse of [`classical_bijection`] on column-strict plane partitions: cells are read in
/// increasing order of `(p, column, row)`.
pub fn beta(theta: &SkewDiagram, p: &[i64]) -> Result<(Vec<i64>, Vec<i64>)> {
    if !is_pp(&Shape::Classical(theta), PpVariant::ColumnStrict, p) {
        return Err(Error::InvalidPlanePartition(format!("{p:?} is not column strict")));
    }
    let cells = theta.cells();
    let mut order: Vec<usize> = (0..p.len()).collect();
    order.sort_by(|&a, &b| {
        (p[a], &cells[a].col, cells[a].row).cmp(&(p[b], &cells[b].col, cells[b].row))
    });
    let mut t = vec![0i64; p.len()];
    for (rank, &idx) in order.iter().enumerate() {
        t[idx] = rank as i64 + 1;
    }
    let h = h_vector(theta, &t);
    let zeta = order.iter().enumerate().map(|(i, &idx)| p[idx] - h[i]).collect();
    Ok((zeta, t))
}

/// The same map as [`classical_bijection`] for restricted tableaux; the image is a periodic
/// column-strict plane partition.
pub fn restricted_bijection(d: &PeriodicSkewDiagram, zeta: &[i64], values: &[i64]) -> Result<Vec<i64>> {
    if !d.kappa().is_integer() {
        return Err(Error::LevelRequiresPositiveInteger(d.kappa().to_string()));
    }
    let theta = d.fundamental();
    if !is_standard_classical(&theta, values) || !is_restricted(d, values) {
        return Err(Error::NotRestricted);
    }
    classical_bijection(&theta, zeta, values)
}

/// For `zeta` in `Z^n` and a standard `T`: sort the numbers `i + n zeta_i` as
/// `j_1 < ... < j_n` and put `S(u) = j_{T(u)}`.
pub fn generic_bijection(n: usize, zeta: &[i64], values: &[i64]) -> Vec<i64> {
    let nn = n as i64;
    let mut j: Vec<i64> = (0..n).map(|i| i as i64 + 1 + nn * zeta[i]).collect();
    j.sort();
    values.iter().map(|&v| j[v as usize - 1]).collect()
}

/// Inverse of [`generic_bijection`].
pub fn generic_bijection_inverse(s: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let n = s.len() as i64;
    let mut sorted = s.to_vec();
    sorted.sort();
    let mut zeta = vec![0i64; s.len()];
    for &l in &sorted {
        let lbar = (l - 1).rem_euclid(n) + 1;
        zeta[lbar as usize - 1] = (l - lbar) / n;
    }
    let t = s
        .iter()
        .map(|v| sorted.binary_search(v).unwrap() as i64 + 1)
        .collect();
    (zeta, t)
}

/// Transposes `p` together with the diagram.
pub fn conjugate_pp(theta: &SkewDiagram, p: &[i64]) -> Result<(SkewDiagram, Vec<i64>)> {
    let conj = theta.conjugate()?;
    let mut q = vec![0i64; p.len()];
    for (c, &v) in theta.cells().iter().zip(p) {
        let t = Cell::new(crate::qalgebra::to_i64(&c.col), crate::qalgebra::int(c.row));
        q[conj.index_of(&t).unwrap()] = v;
    }
    Ok((conj, q))
}

/// Restricted tableaux paired with weights give exactly the periodic column-strict plane
/// partitions; returns the images with `|zeta| + |h_T| <= max_weight`.
pub fn restricted_images(d: &PeriodicSkewDiagram, max_weight: i64) -> Result<Vec<Vec<i64>>> {
    let theta = d.fundamental();
    let mut out = Vec::new();
    for t in enumerate_restricted(d)? {
        let hw = weight(&h_vector(&theta, &t));
        for z in enumerate_antidominant(d.n(), max_weight - hw) {
            out.push(restricted_bijection(d, &z, &t)?);
        }
    }
    out.sort_by(|a, b| (weight(a), a).cmp(&(weight(b), b)));
    Ok(out)
}
