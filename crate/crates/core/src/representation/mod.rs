//! The tableau representation: the span of `v_T` over standard tableaux of a cylinder,
//! with the trigonometric action of the degenerate double affine Hecke algebra.

mod affine;
mod characters;
mod classify;

pub use affine::*;
pub use characters::*;
pub use classify::*;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::affine_weyl::{AffinePermutation, Generator};
use crate::diagrams::{Constraint, PeriodicSkewDiagram};
use crate::error::{Error, Result};
use crate::qalgebra::{int, Rational};
use crate::tableaux::{act, content_at, is_standard_with, rho};

/// A finite linear combination of basis vectors `v_T`, keyed by the values of `T` on the
/// fundamental domain.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ModuleVector {
    terms: BTreeMap<Vec<i64>, Rational>,
}

impl ModuleVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: Vec<i64>) -> Self {
        let mut v = Self::zero();
        v.add_term(key, Rational::one());
        v
    }

    pub fn add_term(&mut self, key: Vec<i64>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &[i64]) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut v = self.clone();
        for (k, c) in other.terms() {
            v.add_term(k.clone(), c.clone());
        }
        v
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut v = self.clone();
        for (k, c) in other.terms() {
            v.add_term(k.clone(), -c);
        }
        v
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let mut v = Self::zero();
        for (k, c) in self.terms() {
            v.add_term(k.clone(), c * s);
        }
        v
    }

    pub fn to_json(&self) -> Value {
        json!(self
            .terms()
            .map(|(k, c)| json!({"tableau": k, "coefficient": c.to_string()}))
            .collect::<Vec<_>>())
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}) v{k:?}")?;
        }
        Ok(())
    }
}

/// The operators on the span of standard tableaux of a cylinder.
#[derive(Debug, Clone)]
pub struct TableauModule {
    d: PeriodicSkewDiagram,
    constraints: Vec<Constraint>,
    corruption: Option<Corruption>,
}

/// A deliberate error in one matrix coefficient of some `s_i`, for negative controls.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corruption {
    pub generator: usize,
    /// Restrict to the column of this tableau; `None` corrupts every column.
    pub tableau: Option<Vec<i64>>,
    /// Corrupt the coefficient of `v_{s_i T}` instead of the one of `v_T`.
    pub off_diagonal: bool,
    pub delta: Rational,
}

impl TableauModule {
    pub fn new(d: PeriodicSkewDiagram) -> Self {
        let constraints = d.constraints();
        Self { d, constraints, corruption: None }
    }

    /// Only for negative controls.
    pub fn with_corruption(mut self, c: Corruption) -> Self {
        self.corruption = Some(c);
        self
    }

    pub fn diagram(&self) -> &PeriodicSkewDiagram {
        &self.d
    }

    pub fn n(&self) -> usize {
        self.d.n()
    }

    pub fn is_standard(&self, key: &[i64]) -> bool {
        is_standard_with(self.n(), &self.constraints, key)
    }

    pub fn content(&self, key: &[i64], j: i64) -> Rational {
        content_at(&self.d, key, j)
    }

    fn linear(&self, v: &ModuleVector, f: impl Fn(&[i64]) -> Result<ModuleVector>) -> Result<ModuleVector> {
        let mut out = ModuleVector::zero();
        for (k, c) in v.terms() {
            for (k2, c2) in f(k)?.terms {
                out.add_term(k2, c2 * c);
            }
        }
        Ok(out)
    }

    /// `eps_i^vee v_T = c_T(i) v_T`.
    pub fn eps(&self, i: usize, v: &ModuleVector) -> ModuleVector {
        let mut out = ModuleVector::zero();
        for (k, c) in v.terms() {
            out.add_term(k.clone(), c * self.content(k, i as i64));
        }
        out
    }

    fn s_basis(&self, i: usize, key: &[i64]) -> Result<ModuleVector> {
        let n = self.n();
        let ci = self.content(key, i as i64);
        let cj = self.content(key, i as i64 + 1);
        let c = &ci - &cj;
        if c.is_zero() {
            return Err(Error::DegenerateContents(format!("s_{i} on {key:?}")));
        }
        let inv = Rational::one() / &c;
        let mut diag = -inv.clone();
        let mut off = (Rational::one() + &c) * inv;
        if let Some(x) = &self.corruption {
            if x.generator == i && x.tableau.as_deref().is_none_or(|t| t == key) {
                if x.off_diagonal {
                    off += &x.delta;
                } else {
                    diag += &x.delta;
                }
            }
        }
        let mut out = ModuleVector::zero();
        out.add_term(key.to_vec(), diag);
        let st = act(&AffinePermutation::generator(Generator::S(i), n), key);
        if self.is_standard(&st) {
            out.add_term(st, off);
        }
        Ok(out)
    }

    /// `s_i` for `i` in `0..n`.
    pub fn s(&self, i: usize, v: &ModuleVector) -> Result<ModuleVector> {
        self.linear(v, |k| self.s_basis(i % self.n(), k))
    }

    pub fn pi(&self, v: &ModuleVector) -> ModuleVector {
        let mut out = ModuleVector::zero();
        for (k, c) in v.terms() {
            out.add_term(k.iter().map(|x| x + 1).collect(), c.clone());
        }
        out
    }

    pub fn pi_inv(&self, v: &ModuleVector) -> ModuleVector {
        let mut out = ModuleVector::zero();
        for (k, c) in v.terms() {
            out.add_term(k.iter().map(|x| x - 1).collect(), c.clone());
        }
        out
    }

    /// `s_{w_1} s_{w_2} ... s_{w_k} v`.
    pub fn word(&self, word: &[usize], v: &ModuleVector) -> Result<ModuleVector> {
        let mut out = v.clone();
        for &i in word.iter().rev() {
            out = self.s(i, &out)?;
        }
        Ok(out)
    }

    /// The transposition `s_{ab}`, `1 <= a < b <= n`.
    pub fn transposition(&self, a: usize, b: usize, v: &ModuleVector) -> Result<ModuleVector> {
        let (a, b) = (a.min(b), a.max(b));
        let mut word: Vec<usize> = (a..b).rev().collect();
        word.extend(a + 1..b);
        self.word(&word, v)
    }

    /// `x_1 = pi s_{n-1} ... s_1`, `x_{j+1} = s_j x_j s_j`.
    pub fn x(&self, j: usize, v: &ModuleVector) -> Result<ModuleVector> {
        let n = self.n();
        let conj: Vec<usize> = (1..j).collect();
        let mut w = v.clone();
        for &i in conj.iter().rev() {
            w = self.s(i, &w)?;
        }
        for i in 1..n {
            w = self.s(i, &w)?;
        }
        w = self.pi(&w);
        for &i in &conj {
            w = self.s(i, &w)?;
        }
        Ok(w)
    }

    /// `x_j^{-1}`, with `x_1^{-1} = s_1 ... s_{n-1} pi^{-1}`.
    pub fn x_inv(&self, j: usize, v: &ModuleVector) -> Result<ModuleVector> {
        let n = self.n();
        let conj: Vec<usize> = (1..j).collect();
        let mut w = v.clone();
        for &i in conj.iter().rev() {
            w = self.s(i, &w)?;
        }
        w = self.pi_inv(&w);
        for i in (1..n).rev() {
            w = self.s(i, &w)?;
        }
        for &i in &conj {
            w = self.s(i, &w)?;
        }
        Ok(w)
    }

    /// `y_i = x_i^{-1} (eps_i^vee - sum_{j < i} s_{ji})`.
    pub fn y(&self, i: usize, v: &ModuleVector) -> Result<ModuleVector> {
        let mut w = self.eps(i, v);
        for j in 1..i {
            w = w.sub(&self.transposition(j, i, v)?);
        }
        self.x_inv(i, &w)
    }

    /// Tableaux reachable from `start` through `pi`, `pi^{-1}` and the intertwiners
    /// `(1 + c s_i) v_T = (1 + c) v_{s_i T}`, `c = c_T(i) - c_T(i + 1)`, without leaving
    /// `in_window`.
    pub fn intertwiner_orbit(&self, start: &[i64], in_window: &dyn Fn(&[i64]) -> bool) -> BTreeSet<Vec<i64>> {
        let n = self.n();
        let gens: Vec<AffinePermutation> = (0..n).map(|i| AffinePermutation::generator(Generator::S(i), n)).collect();
        let mut seen = BTreeSet::from([start.to_vec()]);
        let mut queue = vec![start.to_vec()];
        while let Some(t) = queue.pop() {
            let mut next = vec![t.iter().map(|x| x + 1).collect::<Vec<_>>(), t.iter().map(|x| x - 1).collect()];
            for (i, g) in gens.iter().enumerate() {
                let c = self.content(&t, i as i64) - self.content(&t, i as i64 + 1);
                let st = act(g, &t);
                if c != -Rational::one() && self.is_standard(&st) {
                    next.push(st);
                }
            }
            for u in next {
                if in_window(&u) && seen.insert(u.clone()) {
                    queue.push(u);
                }
            }
        }
        seen
    }

    /// `kappa^{-1} sum_i c_T(i)`.
    pub fn degree(&self, key: &[i64]) -> Rational {
        let s: Rational = (1..=self.n() as i64).map(|j| self.content(key, j)).sum();
        s / self.d.kappa()
    }
}

/// Outcome of checking one family of relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationReport {
    pub family: &'static str,
    pub checked: usize,
    pub failed: usize,
    pub skipped: usize,
    pub first_failure: Option<String>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "family": self.family,
            "checked": self.checked,
            "failed": self.failed,
            "skipped": self.skipped,
            "first_failure": self.first_failure,
        })
    }
}

/// `R1`-`R5` are the defining relations; `X` (the `x_i` commute) and `Y` (the commutator
/// `[y_i, x_j]`) are consequences, checked on request.
pub const RELATION_FAMILIES: [&str; 7] = ["R1", "R2", "R3", "R4", "R5", "X", "Y"];
pub const DEFINING_RELATIONS: [&str; 5] = ["R1", "R2", "R3", "R4", "R5"];

const R1: usize = 0;
const R2: usize = 1;
const R3: usize = 2;
const R4: usize = 3;
const R5: usize = 4;
const X: usize = 5;
const Y: usize = 6;

fn pairing(i: usize, a: usize, b: usize) -> i64 {
    i64::from(i == a) - i64::from(i == b)
}

struct Outcome {
    family: usize,
    ok: Option<bool>,
    label: String,
}

fn record(out: &mut Vec<Outcome>, family: usize, label: String, r: Result<bool>) {
    out.push(Outcome { family, ok: Some(r.unwrap_or(false)), label });
}

impl TableauModule {
    fn check_vector(
        &self,
        key: &[i64],
        in_window: &(dyn Fn(&[i64]) -> bool + Sync),
        which: &[bool; 7],
    ) -> Vec<Outcome> {
        let n = self.n();
        let v = ModuleVector::basis(key.to_vec());
        let kappa = self.d.kappa().clone();
        let mut out = Vec::new();
        if which[R1] {
            for i in 0..n {
                record(&mut out, R1, format!("s_{i}^2 on {key:?}"), (|| Ok(self.s(i, &self.s(i, &v)?)? == v))());
            }
        }
        if which[R2] {
            for i in 0..n {
                let j = (i + 1) % n;
                record(
                    &mut out,
                    R2,
                    format!("pi s_{i} pi^-1 on {key:?}"),
                    (|| Ok(self.pi(&self.s(i, &self.pi_inv(&v))?) == self.s(j, &v)?))(),
                );
                if n >= 3 {
                    record(
                        &mut out,
                        R2,
                        format!("braid s_{i} s_{j} on {key:?}"),
                        (|| Ok(self.word(&[i, j, i], &v)? == self.word(&[j, i, j], &v)?))(),
                    );
                    for k in i + 1..n {
                        if (k + 1) % n != i && k != i + 1 {
                            record(
                                &mut out,
                                R2,
                                format!("s_{i} s_{k} commute on {key:?}"),
                                (|| Ok(self.word(&[i, k], &v)? == self.word(&[k, i], &v)?))(),
                            );
                        }
                    }
                }
            }
            record(&mut out, R2, format!("pi pi^-1 on {key:?}"), Ok(self.pi(&self.pi_inv(&v)) == v));
        }
        if which[R3] {
            for i in 1..n {
                let si = AffinePermutation::generator(Generator::S(i), n);
                for j in 1..=n {
                    let sj = si.apply(j as i64) as usize;
                    let r = (|| {
                        let lhs = self.s(i, &self.eps(j, &v))?.sub(&self.eps(sj, &self.s(i, &v)?));
                        Ok(lhs == v.scale(&int(-pairing(j, i, i + 1))))
                    })();
                    record(&mut out, R3, format!("s_{i} eps_{j} on {key:?}"), r);
                }
            }
        }
        if which[R4] {
            for j in 1..=n {
                let lhs = self.eps(j, &self.pi(&v));
                let rhs = if j >= 2 {
                    self.pi(&self.eps(j - 1, &v))
                } else {
                    self.pi(&self.eps(n, &v).add(&v.scale(&kappa)))
                };
                record(&mut out, R4, format!("eps_{j} pi on {key:?}"), Ok(lhs == rhs));
            }
        }
        if which[R5] || which[X] || which[Y] {
            self.check_x_relations(key, &v, in_window, which, &mut out);
        }
        out
    }

    fn check_x_relations(
        &self,
        key: &[i64],
        v: &ModuleVector,
        in_window: &(dyn Fn(&[i64]) -> bool + Sync),
        which: &[bool; 7],
        out: &mut Vec<Outcome>,
    ) {
        let n = self.n();
        let kappa = self.d.kappa().clone();
        let mut xs = Vec::with_capacity(n + 1);
        xs.push(None);
        for j in 1..=n {
            xs.push(self.x(j, v).ok().filter(|xv| xv.terms().all(|(k, _)| in_window(k))));
        }
        // x_a s_ab v for a < b, shared by the R5 right hand sides.
        let mut xt = BTreeMap::new();
        if which[R5] {
            for a in 1..=n {
                for b in a + 1..=n {
                    xt.insert((a, b), self.transposition(a, b, v).and_then(|t| self.x(a, &t)));
                }
            }
        }
        let xt = |a: usize, b: usize| -> Result<ModuleVector> {
            xt.get(&(a, b)).cloned().unwrap_or_else(|| Err(Error::Precondition(String::new())))
        };
        for j in 1..=n {
            let Some(xv) = &xs[j] else {
                for f in [R5, X, Y] {
                    if which[f] {
                        out.push(Outcome { family: f, ok: None, label: String::new() });
                    }
                }
                continue;
            };
            for i in 1..=n {
                if which[R5] {
                    let r = (|| {
                        let ci = self.content(key, i as i64);
                        let lhs = self.eps(i, xv).sub(&xv.scale(&ci));
                        let mut rhs = if i == j { xv.scale(&kappa) } else { ModuleVector::zero() };
                        for k in j + 1..=n {
                            let c = pairing(i, j, k);
                            if c != 0 {
                                rhs = rhs.add(&xt(j, k)?.scale(&int(c)));
                            }
                        }
                        for l in 1..j {
                            let c = pairing(i, l, j);
                            if c != 0 {
                                rhs = rhs.sub(&xt(l, j)?.scale(&int(c)));
                            }
                        }
                        Ok(lhs == rhs)
                    })();
                    record(out, R5, format!("[eps_{i}, x_{j}] on {key:?}"), r);
                }
                if which[X] && i < j {
                    let r = (|| {
                        let xi = xs[i].clone().map_or_else(|| self.x(i, v), Ok)?;
                        Ok(self.x(i, xv)? == self.x(j, &xi)?)
                    })();
                    record(out, X, format!("x_{i} x_{j} commute on {key:?}"), r);
                }
                if which[Y] {
                    let r = (|| {
                        let lhs = self.y(i, xv)?.sub(&self.x(j, &self.y(i, v)?)?);
                        let rhs = if i == j {
                            let mut t = v.scale(&kappa);
                            for k in 1..=n {
                                if k != i {
                                    t = t.add(&self.transposition(i, k, v)?);
                                }
                            }
                            t
                        } else {
                            self.transposition(i, j, v)?.scale(&int(-1))
                        };
                        Ok(lhs == rhs)
                    })();
                    record(out, Y, format!("[y_{i}, x_{j}] on {key:?}"), r);
                }
            }
        }
    }

    /// Checks the selected relation families on each basis vector. Relations involving `x`
    /// are skipped on vectors whose `x_j`-image leaves `in_window`.
    pub fn verify_relations(
        &self,
        basis: &[Vec<i64>],
        in_window: &(dyn Fn(&[i64]) -> bool + Sync),
        families: &[&str],
        parallel: bool,
    ) -> Result<Vec<RelationReport>> {
        let mut which = [false; 7];
        for f in families {
            let i = RELATION_FAMILIES
                .iter()
                .position(|g| g == f)
                .ok_or_else(|| Error::Parse(format!("unknown relation family {f:?}")))?;
            which[i] = true;
        }
        let outcomes: Vec<Vec<Outcome>> = if parallel {
            basis.par_iter().map(|k| self.check_vector(k, in_window, &which)).collect()
        } else {
            basis.iter().map(|k| self.check_vector(k, in_window, &which)).collect()
        };
        let mut reports: Vec<RelationReport> = RELATION_FAMILIES
            .iter()
            .map(|f| RelationReport { family: f, checked: 0, failed: 0, skipped: 0, first_failure: None })
            .collect();
        for o in outcomes.into_iter().flatten() {
            let r = &mut reports[o.family];
            match o.ok {
                None => r.skipped += 1,
                Some(true) => r.checked += 1,
                Some(false) => {
                    r.checked += 1;
                    r.failed += 1;
                    r.first_failure.get_or_insert(o.label);
                }
            }
        }
        Ok(reports.into_iter().enumerate().filter(|(i, _)| which[*i]).map(|(_, r)| r).collect())
    }
}

/// `rho(T) >= 0` with `|rho(T)| <= max_weight`.
pub fn window(max_weight: i64) -> impl Fn(&[i64]) -> bool + Sync {
    move |k: &[i64]| {
        let r = rho(k);
        r.iter().all(|&x| x >= 0) && r.iter().sum::<i64>() <= max_weight
    }
}
