//! Reproducing kernels `P_n(x, y)` on `V`, their closed form through the
//! elementary sums `E_k`, and the Poisson kernel `Σ P_n r^n`.

use super::{Basis, LatticeParams, MultiIndex};
use crate::error::{Error, Result};
use crate::exact::{factorial_q, poch_i, q, Q};
use crate::hahn1d::{hahn_sq, sign_pow, Params1D};
use crate::poly::PolyQ;
use num_traits::{One, Signed, Zero};

fn homogeneous(x: &MultiIndex, p: &LatticeParams) -> Vec<i64> {
    let mut v = x.0.clone();
    v.push(p.big_n() - x.total());
    v
}

fn require_v(x: &MultiIndex, p: &LatticeParams) -> Result<()> {
    if !p.in_v(x) {
        return Err(Error::OutOfRange(format!("{x} is not in V for {p}")));
    }
    Ok(())
}

/// `E_k(x, y) = Σ_{|γ|=k, γ_i ≤ ℓ_i} Π (-X_i)_{γ_i} (-Y_i)_{γ_i} / ((-ℓ_i)_{γ_i} γ_i!)`
/// with `X = (x, N-|x|)`, `Y = (y, N-|y|)`.
pub fn elementary_e(k: u32, x: &MultiIndex, y: &MultiIndex, p: &LatticeParams) -> Result<Q> {
    Ok(elementary_e_upto(k, x, y, p)?.swap_remove(k as usize))
}

/// `[E_0, .., E_kmax]` from one convolution.
pub fn elementary_e_upto(k: u32, x: &MultiIndex, y: &MultiIndex, p: &LatticeParams) -> Result<Vec<Q>> {
    require_v(x, p)?;
    require_v(y, p)?;
    let xx = homogeneous(x, p);
    let yy = homogeneous(y, p);
    let ell = p.ell();
    // per-coordinate factor tables, then a convolution over |γ| = k
    let mut acc = vec![Q::zero(); k as usize + 1];
    acc[0] = Q::one();
    for i in 0..ell.len() {
        let top = (ell[i].min(k as i64)) as u32;
        let f: Vec<Q> = (0..=top)
            .map(|g| {
                poch_i(-xx[i], g) * poch_i(-yy[i], g) / (poch_i(-ell[i], g) * factorial_q(g))
            })
            .collect();
        let mut next = vec![Q::zero(); k as usize + 1];
        for (s, a) in acc.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (g, b) in f.iter().enumerate() {
                if s + g <= k as usize {
                    next[s + g] += a * b;
                }
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// How to evaluate `P_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelMethod {
    /// `Σ_{ν ∈ H, |ν| = n} sQ_ν(x) sQ_ν(y) / sB_ν`.
    Direct,
    /// The closed form in terms of `E_k`, valid for `n ≤ ℓ_min`.
    Closed,
}

/// The direct sum using precomputed basis values.
pub fn kernel_direct(b: &Basis, n: i64, xi: usize, yi: usize) -> Q {
    let mut s = Q::zero();
    for (a, nu) in b.h.iter().enumerate() {
        if nu.total() == n {
            s += &b.values[a][xi] * &b.values[a][yi] / &b.norms[a];
        }
    }
    s
}

/// Closed form `(-N)_n (-L)_N (-L)_n (L+1-2n) / (n! (-L)_{N+n} (L+1-n)) · Σ_k (-n)_k (n-1-L)_k / ((-N)_k)² E_k`.
pub fn kernel_closed(n: u32, x: &MultiIndex, y: &MultiIndex, p: &LatticeParams) -> Result<Q> {
    let w = closed_weights(n, p)?;
    let e = elementary_e_upto(n, x, y, p)?;
    Ok(w.iter().zip(&e).map(|(a, b)| a * b).sum())
}

/// Weights `w_k` with `P_n = Σ_k w_k E_k` in the closed form, `n ≤ ℓ_min`.
pub fn closed_weights(n: u32, p: &LatticeParams) -> Result<Vec<Q>> {
    if n as i64 > p.ell_min() {
        return Err(Error::NotApplicable(format!("closed kernel needs n={n} <= l_min={}", p.ell_min())));
    }
    let nn = p.big_n();
    let l = p.ell_total();
    let ni = n as i64;
    let pre = poch_i(-nn, n) * poch_i(-l, nn as u32) * poch_i(-l, n) * q(l + 1 - 2 * ni)
        / (factorial_q(n) * poch_i(-l, (nn + ni) as u32) * q(l + 1 - ni));
    Ok((0..=n)
        .map(|k| {
            let d = poch_i(-nn, k);
            &pre * poch_i(-ni, k) * poch_i(ni - 1 - l, k) / (&d * &d)
        })
        .collect())
}

/// `P_n(x, y)` by either method. The direct method builds the whole basis.
pub fn kernel_p(n: u32, x: &MultiIndex, y: &MultiIndex, p: &LatticeParams, method: KernelMethod) -> Result<Q> {
    require_v(x, p)?;
    require_v(y, p)?;
    match method {
        KernelMethod::Closed => kernel_closed(n, x, y, p),
        KernelMethod::Direct => {
            let b = Basis::new(p)?;
            let max = p.max_degree();
            if n as i64 > max {
                return Err(Error::OutOfRange(format!("n={n} > max degree {max}")));
            }
            Ok(kernel_direct(&b, n as i64, b.index_of_v(x).unwrap(), b.index_of_v(y).unwrap()))
        }
    }
}

/// `Σ_{n=0}^{M} P_n(x, y) r^n` as a polynomial in `r`.
pub fn poisson_poly(b: &Basis, xi: usize, yi: usize) -> PolyQ {
    let max = b.h.iter().map(MultiIndex::total).max().unwrap_or(0);
    let c: Vec<Q> = (0..=max).map(|n| kernel_direct(b, n, xi, yi)).collect();
    PolyQ::from_coeffs(&c)
}

/// `Φ_r(x, y) = Σ_{n=0}^{M} P_n(x, y) r^n` for `0 ≤ r ≤ 1`.
pub fn poisson_phi(r: &Q, x: &MultiIndex, y: &MultiIndex, p: &LatticeParams) -> Result<Q> {
    if r.is_negative() || r > &Q::one() {
        return Err(Error::OutOfRange(format!("r={r} outside [0,1]")));
    }
    require_v(x, p)?;
    require_v(y, p)?;
    let b = Basis::new(p)?;
    let poly = poisson_poly(&b, b.index_of_v(x).unwrap(), b.index_of_v(y).unwrap());
    poly.eval(std::slice::from_ref(r))
}

/// Triangle case `ℓ_i = ℓ`, `N = 2ℓ`, `y = (0, ℓ)`:
/// `Σ_n (-1)^n (-3ℓ-1)_n (-3ℓ)_{2n} / (n! (-3ℓ-1)_{2n}) · sQ_n(x1; ℓ, 2ℓ, 2ℓ) r^n`.
pub fn poisson_triangle_formula(ell: i64, x1: i64) -> Result<PolyQ> {
    let p1 = Params1D::new(ell, 2 * ell, 2 * ell)?;
    let mut c = Vec::new();
    for n in 0..=ell as u32 {
        let k = sign_pow(n) * poch_i(-3 * ell - 1, n) * poch_i(-3 * ell, 2 * n)
            / (factorial_q(n) * poch_i(-3 * ell - 1, 2 * n));
        c.push(k * hahn_sq(n, &p1)?.eval_int(&[x1])?);
    }
    Ok(PolyQ::from_coeffs(&c))
}

/// Sign changes of a polynomial sampled at `r = k/samples`, `k = 0..=samples`,
/// ignoring zero samples. A report, not a proof of the count.
pub fn sign_changes_sampled(poly: &PolyQ, samples: u32) -> Result<u32> {
    let mut last = 0i32;
    let mut changes = 0;
    for k in 0..=samples {
        let v = poly.eval(&[Q::new(k.into(), samples.into())])?;
        let s = crate::exact::sign(&v);
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    Ok(changes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex() -> LatticeParams {
        LatticeParams::new(vec![6, 4, 4], 7).unwrap()
    }

    #[test]
    fn closed_matches_direct_on_example() {
        let p = ex();
        let b = Basis::new(&p).unwrap();
        for n in 0..=4u32 {
            for (i, x) in b.v.iter().enumerate().step_by(3) {
                for (j, y) in b.v.iter().enumerate().step_by(4) {
                    assert_eq!(kernel_direct(&b, n as i64, i, j), kernel_closed(n, x, y, &p).unwrap());
                }
            }
        }
    }

    #[test]
    fn e_basic() {
        let p = ex();
        let v = p.enum_v();
        assert_eq!(elementary_e(0, &v[0], &v[5], &p).unwrap(), Q::one());
        for k in 0..=4 {
            let a = elementary_e(k, &v[2], &v[7], &p).unwrap();
            assert_eq!(a, elementary_e(k, &v[7], &v[2], &p).unwrap());
        }
    }

    #[test]
    fn triangle_poisson() {
        for ell in 1..=3 {
            let p = LatticeParams::new(vec![ell, ell, ell], 2 * ell).unwrap();
            let b = Basis::new(&p).unwrap();
            let yi = b.index_of_v(&MultiIndex(vec![0, ell])).unwrap();
            for (xi, x) in b.v.iter().enumerate() {
                assert_eq!(poisson_poly(&b, xi, yi), poisson_triangle_formula(ell, x.at(1)).unwrap());
            }
        }
    }
}
