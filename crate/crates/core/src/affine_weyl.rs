//! The extended affine symmetric group acting on `Z`, in window notation.
//!
//! An element `w` is a bijection of `Z` with `w(j + n) = w(j) + n`, stored as
//! the window `[w(1), ..., w(n)]`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffinePermutation {
    window: Vec<i64>,
}

/// Generators of the extended affine Weyl group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    /// `s_i` for `i` in `0..n`; `s_0` is the affine reflection.
    S(usize),
    /// The rotation `j -> j + 1`.
    Pi,
    PiInv,
    /// Translation `t_{e_i}` for `i` in `1..=n`: `j -> j + n` on `j = i mod n`.
    T(usize),
}

/// Residue of `j` in `1..=n`.
pub fn residue(j: i64, n: usize) -> usize {
    ((j - 1).rem_euclid(n as i64) + 1) as usize
}

impl AffinePermutation {
    pub fn identity(n: usize) -> Self {
        Self { window: (1..=n as i64).collect() }
    }

    /// Validates that `window` defines a bijection of `Z`.
    pub fn from_window(window: Vec<i64>) -> Result<Self> {
        let n = window.len();
        if n == 0 {
            return Err(Error::Precondition("empty window".into()));
        }
        let mut seen = vec![false; n];
        for &v in &window {
            let r = residue(v, n) - 1;
            if seen[r] {
                return Err(Error::Precondition(format!(
                    "window {window:?} repeats a residue mod {n}"
                )));
            }
            seen[r] = true;
        }
        Ok(Self { window })
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn apply(&self, j: i64) -> i64 {
        let n = self.n();
        let r = residue(j, n);
        let k = (j - r as i64) / n as i64;
        self.window[r - 1] + k * n as i64
    }

    pub fn generator(g: Generator, n: usize) -> Self {
        let nn = n as i64;
        let window = (1..=nn)
            .map(|j| match g {
                Generator::S(i) => {
                    let i = i % n;
                    let jr = (j % nn) as usize;
                    if jr == i {
                        j + 1
                    } else if jr == (i + 1) % n {
                        j - 1
                    } else {
                        j
                    }
                }
                Generator::Pi => j + 1,
                Generator::PiInv => j - 1,
                Generator::T(i) => {
                    if residue(j, n) == i {
                        j + nn
                    } else {
                        j
                    }
                }
            })
            .collect();
        Self { window }
    }

    /// The transposition `s_{ij}` of `S_n`, for `i, j` in `1..=n`.
    pub fn transposition(i: usize, j: usize, n: usize) -> Self {
        let mut window: Vec<i64> = (1..=n as i64).collect();
        window.swap(i - 1, j - 1);
        Self { window }
    }

    /// The product `g_1 g_2 ... g_k`; the rightmost factor acts first.
    pub fn from_generators(word: &[Generator], n: usize) -> Self {
        word.iter()
            .fold(Self::identity(n), |acc, &g| acc.compose(&Self::generator(g, n)))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n());
        Self { window: other.window.iter().map(|&j| self.apply(j)).collect() }
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut window = vec![0i64; n];
        for (i, &v) in self.window.iter().enumerate() {
            let r = residue(v, n);
            let k = (v - r as i64) / n as i64;
            window[r - 1] = (i as i64 + 1) - k * n as i64;
        }
        Self { window }
    }

    /// Power of `pi` in the decomposition `w = pi^k w'` with `w'` in the affine Weyl group.
    pub fn pi_power(&self) -> i64 {
        let n = self.n() as i64;
        let s: i64 = self.window.iter().enumerate().map(|(i, &v)| v - (i as i64 + 1)).sum();
        s / n
    }

    /// Coxeter length, computed as the affine inversion count. It ignores the `pi` factor.
    pub fn length(&self) -> usize {
        let n = self.n() as i64;
        let w = &self.window;
        let mut l = 0i64;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                l += (w[j] - w[i]).div_euclid(n).abs();
            }
        }
        l as usize
    }

    /// Whether `w` fixes `[1, n]` setwise up to order, i.e. lies in the finite group `S_n`.
    pub fn is_finite(&self) -> bool {
        let n = self.n() as i64;
        self.window.iter().all(|&v| (1..=n).contains(&v))
    }
}

impl fmt::Display for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.window.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// All elements of `S_n` as windows, with a reduced word for each.
pub fn finite_group(n: usize) -> Vec<(AffinePermutation, Vec<usize>)> {
    use std::collections::{HashSet, VecDeque};
    let id = AffinePermutation::identity(n);
    let mut seen: HashSet<AffinePermutation> = HashSet::from([id.clone()]);
    let mut out = vec![(id.clone(), vec![])];
    let mut queue = VecDeque::from([(id, Vec::<usize>::new())]);
    while let Some((w, word)) = queue.pop_front() {
        for i in 1..n {
            let v = w.compose(&AffinePermutation::generator(Generator::S(i), n));
            if seen.insert(v.clone()) {
                let mut wd = word.clone();
                wd.push(i);
                out.push((v.clone(), wd.clone()));
                queue.push_back((v, wd));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashMap, VecDeque};
    use Generator::*;

    #[test]
    fn translation_from_pi() {
        let n = 3;
        let w = AffinePermutation::from_generators(&[Pi, S(2), S(1)], n);
        assert_eq!(w.window(), &[4, 2, 3]);
        assert_eq!(w, AffinePermutation::generator(T(1), n));
        assert_eq!(w.length(), 2);
    }

    #[test]
    fn s0_is_translated_reflection() {
        for n in 2..6 {
            let t = AffinePermutation::compose(
                &AffinePermutation::generator(T(1), n),
                &AffinePermutation::generator(T(n), n).inverse(),
            );
            let s0 = t.compose(&AffinePermutation::transposition(1, n, n));
            assert_eq!(s0, AffinePermutation::generator(S(0), n));
            assert_eq!(s0.length(), 1);
        }
    }

    #[test]
    fn inverse_and_apply() {
        let w = AffinePermutation::from_window(vec![0, 6, 17, 8, 9]).unwrap();
        let wi = w.inverse();
        for j in -12..12 {
            assert_eq!(wi.apply(w.apply(j)), j);
            assert_eq!(w.apply(wi.apply(j)), j);
        }
        assert!(AffinePermutation::from_window(vec![1, 4, 3]).is_err());
    }

    #[test]
    fn pi_conjugates_simple_reflections() {
        let n = 4;
        let pi = AffinePermutation::generator(Pi, n);
        for i in 0..n {
            let lhs = pi
                .compose(&AffinePermutation::generator(S(i), n))
                .compose(&pi.inverse());
            assert_eq!(lhs, AffinePermutation::generator(S((i + 1) % n), n));
        }
    }

    /// Breadth-first word length over `s_0, ..., s_{n-1}` after removing the `pi` factor.
    fn bfs_lengths(n: usize, radius: usize) -> HashMap<AffinePermutation, usize> {
        let id = AffinePermutation::identity(n);
        let mut dist = HashMap::from([(id.clone(), 0usize)]);
        let mut queue = VecDeque::from([id]);
        while let Some(w) = queue.pop_front() {
            let d = dist[&w];
            if d == radius {
                continue;
            }
            for i in 0..n {
                let v = w.compose(&AffinePermutation::generator(S(i), n));
                if !dist.contains_key(&v) {
                    dist.insert(v.clone(), d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    #[test]
    fn length_matches_word_length() {
        for n in 2..=4 {
            let dist = bfs_lengths(n, 6);
            let pi = AffinePermutation::generator(Pi, n);
            for (w, &d) in &dist {
                assert_eq!(w.length(), d, "{w}");
                assert_eq!(w.compose(&pi).length(), d);
                assert_eq!(w.pi_power(), 0);
            }
        }
    }

    #[test]
    fn finite_group_size() {
        assert_eq!(finite_group(4).len(), 24);
        for (w, word) in finite_group(4) {
            assert!(w.is_finite());
            assert_eq!(w.length(), word.len());
        }
    }
}
