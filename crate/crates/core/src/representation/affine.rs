use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::affine_weyl::{AffinePermutation, Generator};
use crate::diagrams::{PeriodicSkewDiagram, SkewDiagram};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::plane_partitions::{satisfies_pp_relations, PpVariant, Shape};
use crate::qalgebra::{int, Rational};
use crate::tableaux::{
    content_vector_classical, enumerate_st, enumerate_st_gamma, is_standard_classical, untransport, Fiber,
};

use super::{ModuleVector, TableauModule};

/// The degenerate affine Hecke algebra module on standard tableaux of a skew diagram.
#[derive(Debug, Clone)]
pub struct AffModule {
    pub basis: Vec<Vec<i64>>,
    /// Matrices of `s_1, ..., s_{n-1}`; column `t` is the image of `v_{basis[t]}`.
    pub s: Vec<Matrix>,
    /// Diagonal of `eps_i^vee`, i.e. `c_T(i)`.
    pub contents: Vec<Vec<Rational>>,
}

pub fn aff_module(theta: &SkewDiagram) -> Result<AffModule> {
    let basis = enumerate_st(theta);
    let n = theta.len();
    let dim = basis.len();
    let contents: Vec<Vec<Rational>> = basis.iter().map(|t| content_vector_classical(theta, t)).collect();
    let mut s = Vec::new();
    for i in 1..n {
        let w = AffinePermutation::generator(Generator::S(i), n);
        let mut m = Matrix::zeros(dim, dim);
        for (col, t) in basis.iter().enumerate() {
            let c = &contents[col][i - 1] - &contents[col][i];
            if c.is_zero() {
                return Err(Error::DegenerateContents(format!("s_{i} on {t:?}")));
            }
            let inv = Rational::one() / &c;
            m.set(col, col, -inv.clone());
            let st: Vec<i64> = t.iter().map(|&v| w.apply(v)).collect();
            if is_standard_classical(theta, &st) {
                let row = basis.binary_search(&st).expect("standard tableau in basis");
                m.set(row, col, (Rational::one() + &c) * inv);
            }
        }
        s.push(m);
    }
    Ok(AffModule { basis, s, contents })
}

impl AffModule {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Matrix of `s_{w_1} ... s_{w_k}`.
    pub fn word(&self, word: &[usize]) -> Matrix {
        word.iter()
            .fold(Matrix::identity(self.dim()), |acc, &i| acc.mul(&self.s[i - 1]))
    }

    /// `e_+ = (1/n!) sum_w w` or `e_- = (1/n!) sum_w (-1)^{l(w)} w`, summed over cosets:
    /// `sum_{S_k} = (sum_j (+-1)^{k-j} s_j s_{j+1} ... s_{k-1}) sum_{S_{k-1}}`.
    pub fn projector(&self, sign: Sign) -> Matrix {
        let n = self.s.len() + 1;
        let dim = self.dim();
        let mut total = Matrix::identity(dim);
        let mut nfact = int(1);
        for k in 2..=n {
            let mut rep = Matrix::identity(dim);
            let mut sum = Matrix::identity(dim);
            for j in (1..k).rev() {
                rep = self.s[j - 1].mul(&rep);
                let term = if sign == Sign::Minus && (k - j) % 2 == 1 { rep.scale(&int(-1)) } else { rep.clone() };
                sum = sum.add(&term);
            }
            total = sum.mul(&total);
            nfact *= int(k as i64);
        }
        total.scale(&(Rational::one() / nfact))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "+" | "plus" => Ok(Sign::Plus),
            "-" | "minus" => Ok(Sign::Minus),
            _ => Err(Error::Parse(format!("sign must be + or -, got {s:?}"))),
        }
    }

    /// The plane partition variant detected by the projector.
    pub fn variant(self) -> PpVariant {
        match self {
            Sign::Plus => PpVariant::ColumnStrict,
            Sign::Minus => PpVariant::RowStrict,
        }
    }
}

/// One weight space summand of the restriction to the degenerate affine Hecke algebra.
#[derive(Debug, Clone)]
pub struct Summand {
    pub p: Vec<i64>,
    pub level: SkewDiagram,
    pub dim: usize,
    /// The `s_i` action on the fiber agrees with the action on standard tableaux of
    /// `p^{-1}(0)`.
    pub matches_level_module: bool,
}

impl Summand {
    pub fn to_json(&self) -> Value {
        json!({
            "p": self.p,
            "weight": self.p.iter().sum::<i64>(),
            "dim": self.dim,
            "zero_level": self.level.to_json(),
            "matches_level_module": self.matches_level_module,
        })
    }
}

fn fiber_matches(m: &TableauModule, f: &Fiber) -> Result<bool> {
    let aff = aff_module(&f.level)?;
    let n = m.n();
    let d = m.diagram();
    let mut index = Vec::new();
    for t in &f.tableaux {
        let (_, _, s) = untransport(d, t);
        index.push(aff.basis.binary_search(&s).map_err(|_| Error::InvalidTableau(format!("{t:?}")))?);
    }
    for i in 1..n {
        for (col, t) in f.tableaux.iter().enumerate() {
            let img = m.s(i, &ModuleVector::basis(t.clone()))?;
            let mut expected = ModuleVector::zero();
            for (row, t2) in f.tableaux.iter().enumerate() {
                expected.add_term(t2.clone(), aff.s[i - 1].get(index[row], index[col]).clone());
            }
            if img != expected {
                return Ok(false);
            }
        }
    }
    Ok(aff.dim() == f.tableaux.len())
}

/// The fibers `rho^{-1}(p)` with `|p| <= max_weight`, each compared with the module of its
/// zero level.
pub fn restriction_decomposition(d: &PeriodicSkewDiagram, max_weight: i64) -> Result<Vec<Summand>> {
    let m = TableauModule::new(d.clone());
    enumerate_st_gamma(d, max_weight)
        .into_iter()
        .map(|f| {
            Ok(Summand {
                matches_level_module: fiber_matches(&m, &f)?,
                dim: f.tableaux.len(),
                p: f.p,
                level: f.level,
            })
        })
        .collect()
}

/// Spherical dimensions of one fiber from the plane partition predicate and from the
/// projector rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphericalDims {
    pub p: Vec<i64>,
    pub predicate_plus: usize,
    pub predicate_minus: usize,
    pub rank_plus: usize,
    pub rank_minus: usize,
}

impl SphericalDims {
    pub fn agree(&self) -> bool {
        self.predicate_plus == self.rank_plus && self.predicate_minus == self.rank_minus
    }

    pub fn to_json(&self) -> Value {
        json!({
            "p": self.p,
            "predicate_plus": self.predicate_plus,
            "rank_plus": self.rank_plus,
            "predicate_minus": self.predicate_minus,
            "rank_minus": self.rank_minus,
        })
    }
}

pub fn spherical_dims(d: &PeriodicSkewDiagram, max_weight: i64) -> Result<Vec<SphericalDims>> {
    let shape = Shape::Periodic(d);
    enumerate_st_gamma(d, max_weight)
        .into_iter()
        .map(|f| {
            let aff = aff_module(&f.level)?;
            Ok(SphericalDims {
                predicate_plus: usize::from(satisfies_pp_relations(&shape, PpVariant::ColumnStrict, &f.p)),
                predicate_minus: usize::from(satisfies_pp_relations(&shape, PpVariant::RowStrict, &f.p)),
                rank_plus: aff.projector(Sign::Plus).rank(),
                rank_minus: aff.projector(Sign::Minus).rank(),
                p: f.p,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine_weyl::finite_group;
    use crate::qalgebra::int;

    #[test]
    fn projector_matches_group_sum() {
        for (l, u) in [(&[2, 1][..], &[][..]), (&[3, 2], &[1]), (&[2, 2], &[]), (&[3, 1], &[1])] {
            let th = SkewDiagram::from_partitions(l, u).unwrap();
            let aff = aff_module(&th).unwrap();
            let n = th.len();
            let mut plus = Matrix::zeros(aff.dim(), aff.dim());
            let mut minus = plus.clone();
            let group = finite_group(n);
            for (_, word) in &group {
                let m = aff.word(word);
                plus = plus.add(&m);
                minus = if word.len() % 2 == 0 { minus.add(&m) } else { minus.sub(&m) };
            }
            let scale = Rational::one() / int(group.len() as i64);
            let ep = aff.projector(Sign::Plus);
            let em = aff.projector(Sign::Minus);
            assert_eq!(ep, plus.scale(&scale));
            assert_eq!(em, minus.scale(&scale));
            assert_eq!(ep.mul(&ep), ep);
            assert_eq!(em.mul(&em), em);
            for i in 0..n - 1 {
                assert_eq!(aff.s[i].mul(&ep), ep);
                assert_eq!(aff.s[i].mul(&em), em.scale(&int(-1)));
            }
            assert_eq!(ep.rank(), usize::from(!th.is_linked()));
            assert_eq!(em.rank(), usize::from(!th.conjugate().unwrap().is_linked()));
        }
    }

    #[test]
    fn relations_of_affine_module() {
        let th = SkewDiagram::from_partitions(&[3, 2], &[1]).unwrap();
        let aff = aff_module(&th).unwrap();
        let id = Matrix::identity(aff.dim());
        for i in 0..aff.s.len() {
            assert_eq!(aff.s[i].mul(&aff.s[i]), id);
            if i + 1 < aff.s.len() {
                assert_eq!(aff.word(&[i + 1, i + 2, i + 1]), aff.word(&[i + 2, i + 1, i + 2]));
            }
        }
    }

    #[test]
    fn column_fibers() {
        let d = PeriodicSkewDiagram::from_partitions(&[1, 1], &[], int(3)).unwrap();
        let r = restriction_decomposition(&d, 1).unwrap();
        assert_eq!(r.iter().map(|s| s.dim).collect::<Vec<_>>(), vec![1, 2]);
        assert!(r.iter().all(|s| s.matches_level_module));
    }
}
