//! Lattice parameter sets, the domain `V`, the index sets `H ⊆ CH`, and the
//! `d = 2` height function.

use crate::error::{Error, Result};
use crate::exact::binomial_int;
use num_traits::ToPrimitive;
use serde::Serialize;
use std::cmp::Ordering;
use std::fmt;

/// A point of `ℕ₀^d`, used both for lattice points `x` and indices `ν`.
///
/// Entries are signed so shifted stencil targets can be represented and
/// rejected explicitly. Indexing helpers are 1-based to match `ν_1..ν_d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct MultiIndex(pub Vec<i64>);

impl MultiIndex {
    pub fn new(v: Vec<i64>) -> Self {
        MultiIndex(v)
    }

    pub fn zeros(d: usize) -> Self {
        MultiIndex(vec![0; d])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Entry `ν_j`, 1-based.
    pub fn at(&self, j: usize) -> i64 {
        self.0[j - 1]
    }

    /// `|ν̄_j| = ν_1 + ... + ν_j`.
    pub fn head(&self, j: usize) -> i64 {
        self.0[..j.min(self.0.len())].iter().sum()
    }

    /// `|ν^j| = ν_j + ... + ν_d`; zero when `j > d`.
    pub fn tail(&self, j: usize) -> i64 {
        if j > self.0.len() {
            0
        } else {
            self.0[j - 1..].iter().sum()
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&v| v >= 0)
    }

    pub fn shifted(&self, offset: &[i64]) -> MultiIndex {
        MultiIndex(self.0.iter().zip(offset).map(|(a, b)| a + b).collect())
    }

    pub fn parse(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let v: std::result::Result<Vec<i64>, _> =
            body.split(',').map(|t| t.trim().parse::<i64>()).collect();
        v.map(MultiIndex).map_err(|e| Error::InvalidParams(format!("bad index list {s:?}: {e}")))
    }
}

impl Ord for MultiIndex {
    /// Graded lexicographic order.
    fn cmp(&self, o: &Self) -> Ordering {
        self.total().cmp(&o.total()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<i64>> for MultiIndex {
    fn from(v: Vec<i64>) -> Self {
        MultiIndex(v)
    }
}

/// `(ℓ, N)` with `ℓ ∈ ℕ^{d+1}`, checked at construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LatticeParams {
    ell: Vec<i64>,
    #[serde(rename = "N")]
    big_n: i64,
}

impl LatticeParams {
    /// Requires `d ≥ 1`, positive entries, `ℓ_i ≤ N` and `ℓ_i + ℓ_j ≥ N`.
    pub fn new(ell: Vec<i64>, big_n: i64) -> Result<Self> {
        if ell.len() < 2 {
            return Err(Error::InvalidParams(format!("need at least 2 entries in l, got {}", ell.len())));
        }
        if big_n < 1 || ell.iter().any(|&l| l < 1) {
            return Err(Error::InvalidParams(format!("l={ell:?}, N={big_n} must be positive")));
        }
        if let Some(l) = ell.iter().find(|&&l| l > big_n) {
            return Err(Error::InvalidParams(format!("l_i={l} > N={big_n}")));
        }
        for i in 0..ell.len() {
            for j in i + 1..ell.len() {
                if ell[i] + ell[j] < big_n {
                    return Err(Error::InvalidParams(format!(
                        "l_{}+l_{}={} < N={big_n}",
                        i + 1,
                        j + 1,
                        ell[i] + ell[j]
                    )));
                }
            }
        }
        Ok(LatticeParams { ell, big_n })
    }

    pub fn d(&self) -> usize {
        self.ell.len() - 1
    }

    pub fn big_n(&self) -> i64 {
        self.big_n
    }

    pub fn ell(&self) -> &[i64] {
        &self.ell
    }

    /// `ℓ_i`, 1-based, `i ≤ d+1`.
    pub fn ell_at(&self, i: usize) -> i64 {
        self.ell[i - 1]
    }

    /// `|ℓ|`.
    pub fn ell_total(&self) -> i64 {
        self.ell.iter().sum()
    }

    /// `|ℓ^j| = ℓ_j + ... + ℓ_{d+1}`.
    pub fn ell_tail(&self, j: usize) -> i64 {
        if j > self.ell.len() {
            0
        } else {
            self.ell[j - 1..].iter().sum()
        }
    }

    pub fn ell_min(&self) -> i64 {
        *self.ell.iter().min().unwrap()
    }

    fn check_dim(&self, m: &MultiIndex) -> Result<()> {
        if m.len() != self.d() {
            Err(Error::Dimension { expected: self.d(), got: m.len() })
        } else {
            Ok(())
        }
    }

    pub fn in_v(&self, x: &MultiIndex) -> bool {
        x.len() == self.d()
            && x.is_nonnegative()
            && x.0.iter().zip(&self.ell).all(|(a, l)| a <= l)
            && {
                let t = x.total();
                self.big_n - self.ell[self.d()] <= t && t <= self.big_n
            }
    }

    pub fn in_ch(&self, nu: &MultiIndex) -> bool {
        nu.len() == self.d()
            && nu.is_nonnegative()
            && nu.0.iter().zip(&self.ell).all(|(a, l)| a <= l)
            && nu.total() <= self.big_n
    }

    pub fn in_h(&self, nu: &MultiIndex) -> bool {
        if !self.in_ch(nu) || nu.total() > self.ell_total() - self.big_n {
            return false;
        }
        (1..=self.d()).all(|j| nu.at(j) <= zhat_a(j, nu, self))
    }

    /// Boxes `0 ≤ v_i ≤ ℓ_i` with `|v| ≤ N`, in graded-lex order.
    fn boxed(&self) -> Vec<MultiIndex> {
        let d = self.d();
        let mut out = Vec::new();
        let mut cur = vec![0i64; d];
        fn rec(i: usize, rem: i64, cur: &mut Vec<i64>, ell: &[i64], out: &mut Vec<MultiIndex>) {
            if i == cur.len() {
                out.push(MultiIndex(cur.clone()));
                return;
            }
            for v in 0..=ell[i].min(rem) {
                cur[i] = v;
                rec(i + 1, rem - v, cur, ell, out);
            }
            cur[i] = 0;
        }
        rec(0, self.big_n, &mut cur, &self.ell, &mut out);
        out.sort();
        out
    }

    pub fn enum_v(&self) -> Vec<MultiIndex> {
        self.boxed().into_iter().filter(|x| self.in_v(x)).collect()
    }

    pub fn enum_ch(&self) -> Vec<MultiIndex> {
        self.boxed()
    }

    pub fn enum_h(&self) -> Vec<MultiIndex> {
        self.boxed().into_iter().filter(|v| self.in_h(v)).collect()
    }

    pub fn index_sets(&self) -> IndexSets {
        IndexSets { v: self.enum_v(), h: self.enum_h(), ch: self.enum_ch() }
    }

    /// `binom(N+d, d) - Σ_k binom(N-ℓ_k+d-1, d)`.
    pub fn card_v_formula(&self) -> u64 {
        let d = self.d() as i64;
        let mut c = binomial_int(self.big_n + d, d);
        for &l in &self.ell {
            c -= binomial_int(self.big_n - l + d - 1, d);
        }
        c.to_u64().expect("cardinality is a small nonnegative integer")
    }

    /// `max{|ν| : ν ∈ H}`.
    pub fn max_degree(&self) -> i64 {
        self.enum_h().iter().map(MultiIndex::total).max().unwrap_or(0)
    }

    /// The `d = 2` height `min(ℓ2, ℓ3, ⌊(ℓ2+ℓ3-ν1)/2⌋, |ℓ|-N-ν1, N-ν1) + 1`.
    pub fn height(&self, nu1: i64) -> Result<i64> {
        self.height_pre(nu1)?;
        let (l2, l3) = (self.ell[1], self.ell[2]);
        let l = self.ell_total();
        let n = self.big_n;
        Ok([l2, l3, (l2 + l3 - nu1).div_euclid(2), l - n - nu1, n - nu1]
            .into_iter()
            .min()
            .unwrap()
            + 1)
    }

    /// Piecewise closed form of the height function.
    pub fn height_piecewise(&self, nu1: i64) -> Result<i64> {
        self.height_pre(nu1)?;
        let (l1, l2, l3) = (self.ell[0], self.ell[1], self.ell[2]);
        let l = self.ell_total();
        let n = self.big_n;
        let dd = (l3 - l2).abs();
        let m = l2.min(l3);
        Ok(if nu1 <= dd {
            m + 1
        } else if nu1 <= l1 - (2 * n - l).abs() {
            m - (nu1 - dd + 1).div_euclid(2) + 1
        } else if l <= 2 * n {
            l - n - nu1 + 1
        } else {
            n - nu1 + 1
        })
    }

    fn height_pre(&self, nu1: i64) -> Result<()> {
        if self.d() != 2 {
            return Err(Error::NotApplicable(format!("height needs d=2, got d={}", self.d())));
        }
        if nu1 < 0 || nu1 > self.ell[0] {
            return Err(Error::OutOfRange(format!("nu1={nu1} outside [0, {}]", self.ell[0])));
        }
        Ok(())
    }

    pub(crate) fn check_index(&self, m: &MultiIndex) -> Result<()> {
        self.check_dim(m)
    }
}

impl fmt::Display for LatticeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "l={:?},N={}", self.ell, self.big_n)
    }
}

/// `ẑa_j = |ℓ^{j+1}| - 2|ν^{j+1}|`; equals `ℓ_{d+1}` at `j = d`.
pub fn zhat_a(j: usize, nu: &MultiIndex, p: &LatticeParams) -> i64 {
    p.ell_tail(j + 1) - 2 * nu.tail(j + 1)
}

/// The three lattice sets of one parameter choice, each sorted graded-lex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexSets {
    pub v: Vec<MultiIndex>,
    pub h: Vec<MultiIndex>,
    pub ch: Vec<MultiIndex>,
}

impl IndexSets {
    pub fn contains_v(&self, x: &MultiIndex) -> bool {
        self.v.binary_search(x).is_ok()
    }
    pub fn contains_h(&self, x: &MultiIndex) -> bool {
        self.h.binary_search(x).is_ok()
    }
    pub fn contains_ch(&self, x: &MultiIndex) -> bool {
        self.ch.binary_search(x).is_ok()
    }
}

/// Every admissible `(ℓ, N)` in dimension `d` with `ℓ_i ≤ max_ell`, `N ≤ max_n`.
pub fn grid(d: usize, max_ell: i64, max_n: i64) -> Vec<LatticeParams> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let mut ell = vec![1i64; d + 1];
        loop {
            if let Ok(p) = LatticeParams::new(ell.clone(), n) {
                out.push(p);
            }
            let mut i = 0;
            while i <= d {
                if ell[i] < max_ell.min(n) {
                    ell[i] += 1;
                    break;
                }
                ell[i] = 1;
                i += 1;
            }
            if i > d {
                break;
            }
        }
    }
    out
}

/// The default `d = 2` grid: `ℓ_i ≤ 6`, `N ≤ 8`.
pub fn grid_d2_small() -> Vec<LatticeParams> {
    grid(2, 6, 8)
}

/// The default `d = 3` grid: `ℓ_i ≤ 4`, `N ≤ 5`.
pub fn grid_d3_small() -> Vec<LatticeParams> {
    grid(3, 4, 5)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex() -> LatticeParams {
        LatticeParams::new(vec![6, 4, 4], 7).unwrap()
    }

    #[test]
    fn example_sizes() {
        let p = ex();
        assert_eq!(p.enum_v().len(), 23);
        assert_eq!(p.enum_h().len(), 23);
        assert_eq!(p.card_v_formula(), 23);
        assert!(!p.in_h(&MultiIndex(vec![0, 5])));
        assert!(!p.in_h(&MultiIndex(vec![3, 3])));
        assert!(!p.in_ch(&MultiIndex(vec![0, 5])));
        assert!(p.in_ch(&MultiIndex(vec![3, 3])));
        assert_eq!(p.height(0).unwrap(), 5);
        assert_eq!(p.height(3).unwrap(), 3);
        let total: i64 = (0..=6).map(|v| p.height(v).unwrap()).sum();
        assert_eq!(total, 23);
        assert_eq!(zhat_a(1, &MultiIndex(vec![3, 3]), &p), 2);
        assert_eq!(zhat_a(2, &MultiIndex(vec![3, 3]), &p), 4);
    }

    #[test]
    fn d1_and_simplex() {
        let p = LatticeParams::new(vec![4, 4], 4).unwrap();
        assert_eq!(p.enum_v().len(), 5);
        let p = LatticeParams::new(vec![3, 3, 3], 3).unwrap();
        assert_eq!(p.enum_v().len(), 10);
        assert_eq!(p.card_v_formula(), 10);
    }

    #[test]
    fn grids_nonempty() {
        assert!(grid_d2_small().len() > 50);
        assert!(!grid_d3_small().is_empty());
        assert!(grid_d2_small().iter().all(|p| p.ell().iter().all(|&l| l <= 6)));
    }

    #[test]
    fn rejects_bad_params() {
        assert!(LatticeParams::new(vec![6, 8], 7).is_err());
        assert!(LatticeParams::new(vec![2, 2, 2], 5).is_err());
        assert!(LatticeParams::new(vec![2], 2).is_err());
    }
}
