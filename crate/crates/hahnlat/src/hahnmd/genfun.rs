//! Generating function of the `H`-normalized polynomials in homogeneous
//! coordinates: `|y|^{N-|ν|} Π_j Σ_k c_k^{(ẑa_j, ℓ_j)} B_j^k A_j^{ν_j-k}` with
//! `A_j = y_j + ... + y_{d+1}` and `B_j = y_{j+1} + ... + y_{d+1}`.

use super::{normalization_constant, sq_nu_value, zhat_a, LatticeParams, MultiIndex, Normalization};
use crate::error::{Error, Result};
use crate::exact::{factorial_q, Q};
use crate::hahn1d::g_coeffs;
use crate::poly::PolyQ;
use num_traits::Zero;
use std::collections::BTreeMap;

/// The generating polynomial in `y_1..y_{d+1}`, homogeneous of degree `N`.
pub fn genfun_poly(nu: &MultiIndex, p: &LatticeParams) -> Result<PolyQ> {
    if !p.in_h(nu) {
        return Err(Error::OutOfRange(format!("{nu} is not in H for {p}")));
    }
    let d = p.d();
    let y: Vec<PolyQ> = (0..=d).map(|i| PolyQ::var(d + 1, i)).collect();
    let tail = |from: usize| y[from..].iter().fold(PolyQ::zero(d + 1), |a, b| a + b.clone());
    let mut out = tail(0).pow((p.big_n() - nu.total()) as u32);
    for j in 1..=d {
        let a = tail(j - 1);
        let b = tail(j);
        let nj = nu.at(j) as u32;
        let mut s = PolyQ::zero(d + 1);
        for (k, c) in g_coeffs(nj, zhat_a(j, nu, p), p.ell_at(j))?.iter().enumerate() {
            let k = k as u32;
            s = s + (b.pow(k) * a.pow(nj - k)).scale(c);
        }
        out = out * s;
    }
    Ok(out)
}

/// Coefficients of [`genfun_poly`] divided by `N!/α!`, for every `α` with
/// `|α| = N` (zero coefficients included).
pub fn genfun_md(nu: &MultiIndex, p: &LatticeParams) -> Result<BTreeMap<Vec<u32>, Q>> {
    let poly = genfun_poly(nu, p)?;
    let nf = factorial_q(p.big_n() as u32);
    let mut out = BTreeMap::new();
    for alpha in compositions(p.big_n() as u32, p.d() + 1) {
        let mut c = poly.coeff(&alpha);
        if !c.is_zero() {
            for &a in &alpha {
                c *= factorial_q(a);
            }
            c /= &nf;
        }
        out.insert(alpha, c);
    }
    Ok(out)
}

/// All `α ∈ ℕ₀^parts` with `|α| = total`.
pub fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Compares every coefficient with `sH_ν(α')`, `α' = (α_1..α_d)`.
pub fn genfun_md_check(nu: &MultiIndex, p: &LatticeParams) -> Result<bool> {
    let c = normalization_constant(nu, p, Normalization::H)?;
    for (alpha, coeff) in genfun_md(nu, p)? {
        let x = MultiIndex(alpha[..p.d()].iter().map(|&a| a as i64).collect());
        if coeff != &c * sq_nu_value(nu, &x, p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn example_indices() {
        let p = LatticeParams::new(vec![6, 4, 4], 7).unwrap();
        for nu in [vec![0, 0], vec![1, 0], vec![1, 1], vec![2, 3]] {
            assert!(genfun_md_check(&MultiIndex(nu), &p).unwrap());
        }
        let m = genfun_md(&MultiIndex(vec![0, 0]), &p).unwrap();
        assert!(m.values().all(|v| v == &Q::one()));
        assert_eq!(m.len(), 36);
    }
}
