//! Multivariate Hahn polynomials with negative integer parameters on the
//! polyhedral domain `V`, their norms and the vanishing of zero-norm members.
//!
//! Each one-variable factor is computed in cleared form, so `(-N_j)_{ν_j}`
//! multiplies through the series and no `0/0` is ever formed. Definedness
//! follows the raw series: the first factor has the constant lower parameter
//! `N_1 = N - |ν^2|` and is undefined if `(-ℓ_1)_k (-N_1)_k` vanishes before
//! the numerator does; later factors are undefined if `(-ℓ_j)_k` does.

pub mod frontier;
pub mod genfun;
pub mod kernel;

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial_q, poch_i, poch_int, poch_ratio, q, EvalResult, Graded, Q};
use crate::hahn1d::{hahn_series, hahn_series_value, sign_pow, Lower};
pub use crate::lattice::{zhat_a, IndexSets, LatticeParams, MultiIndex};
use crate::poly::PolyQ;
use num_traits::{One, Zero};

/// Binomial form `Π binom(ℓ_i, x_i) · binom(ℓ_{d+1}, N-|x|) / binom(|ℓ|, N)`.
pub fn weight_h_md(x: &MultiIndex, p: &LatticeParams) -> Q {
    if x.len() != p.d() || !x.is_nonnegative() {
        return Q::zero();
    }
    let mut w = binomial(p.ell_at(p.d() + 1), p.big_n() - x.total());
    for (i, &xi) in x.0.iter().enumerate() {
        w *= binomial(p.ell()[i], xi);
    }
    w / binomial(p.ell_total(), p.big_n())
}

/// Pochhammer form `N!/(-|ℓ|)_N · Π (-ℓ_i)_{x_i}/x_i! · (-ℓ_{d+1})_{N-|x|}/(N-|x|)!`.
pub fn weight_h_md_pochhammer(x: &MultiIndex, p: &LatticeParams) -> Q {
    if x.len() != p.d() || !x.is_nonnegative() || x.total() > p.big_n() {
        return Q::zero();
    }
    let n = p.big_n() as u32;
    let rest = (p.big_n() - x.total()) as u32;
    let mut w = factorial_q(n) / poch_i(-p.ell_total(), n) * poch_i(-p.ell_at(p.d() + 1), rest)
        / factorial_q(rest);
    for (i, &xi) in x.0.iter().enumerate() {
        w *= poch_i(-p.ell()[i], xi as u32) / factorial_q(xi as u32);
    }
    w
}

fn check_nu(nu: &MultiIndex, p: &LatticeParams) -> Result<()> {
    p.check_index(nu)?;
    if !nu.is_nonnegative() {
        return Err(Error::OutOfRange(format!("index {nu} has a negative entry")));
    }
    Ok(())
}

/// Walks the numerator/denominator pattern of a raw series without building
/// it, reporting where a denominator would vanish first.
fn series_defined(n: u32, ell1: i64, ell2: i64, lower: Option<i64>) -> std::result::Result<(), String> {
    let ni = n as i64;
    for k in 0..=n {
        if poch_int(-ni, k).is_zero() || poch_int(ni - ell1 - ell2 - 1, k).is_zero() {
            return Ok(());
        }
        if poch_int(-ell1, k).is_zero() {
            return Err(format!("(-{ell1})_{k} vanishes before the series terminates"));
        }
        if let Some(m) = lower {
            if poch_int(-m, k).is_zero() {
                return Err(format!("(-{m})_{k} vanishes before the series terminates"));
            }
        }
    }
    Ok(())
}

fn definedness(nu: &MultiIndex, p: &LatticeParams) -> Result<()> {
    for j in 1..=p.d() {
        let lower = (j == 1).then(|| p.big_n() - nu.tail(2));
        series_defined(nu.at(j) as u32, p.ell_at(j), zhat_a(j, nu, p), lower).map_err(|e| {
            Error::Undefined(format!("sQ_{nu} for {p}: factor j={j}: {e}"))
        })?;
    }
    Ok(())
}

/// `sQ_ν(x; ℓ, N) = Π_j (-N_j)_{ν_j} sQ_{ν_j}(x_j; ℓ_j, ẑa_j, N_j)` with
/// `N_j = N - |x̄_{j-1}| - |ν^{j+1}|`, as a polynomial in `x_1..x_d`.
pub fn sq_nu(nu: &MultiIndex, p: &LatticeParams) -> Result<PolyQ> {
    check_nu(nu, p)?;
    definedness(nu, p)?;
    let d = p.d();
    let xs: Vec<PolyQ> = (0..d).map(|i| PolyQ::var(d, i)).collect();
    let mut prev = PolyQ::zero(d);
    let mut out = PolyQ::one(d);
    for j in 1..=d {
        let m = (&PolyQ::constant(d, q(p.big_n() - nu.tail(j + 1)))) - &prev;
        let f = hahn_series(nu.at(j) as u32, p.ell_at(j), zhat_a(j, nu, p), &xs[j - 1], &Lower::Cleared(m))
            .map_err(Error::Undefined)?;
        out = &out * &f;
        prev = &prev + &xs[j - 1];
    }
    Ok(out)
}

/// Value of [`sq_nu`] at one integer point, without building the polynomial.
pub fn sq_nu_value(nu: &MultiIndex, x: &MultiIndex, p: &LatticeParams) -> Result<Q> {
    check_nu(nu, p)?;
    p.check_index(x)?;
    definedness(nu, p)?;
    let mut prev = 0;
    let mut out = Q::one();
    for j in 1..=p.d() {
        let m = p.big_n() - nu.tail(j + 1) - prev;
        let f = hahn_series_value(nu.at(j) as u32, p.ell_at(j), zhat_a(j, nu, p), x.at(j), m, true)
            .map_err(Error::Undefined)?;
        if f.is_zero() {
            return Ok(Q::zero());
        }
        out *= f;
        prev += x.at(j);
    }
    Ok(out)
}

/// Closed-form squared norm `sB_ν(ℓ, N)`. Pochhammer ratios that contain a
/// zero factor on both sides are cancelled exactly; a net zero gives `0` and
/// a net pole gives `Undefined`.
pub fn norm_b_nu(nu: &MultiIndex, p: &LatticeParams) -> Result<EvalResult> {
    check_nu(nu, p)?;
    let n = nu.total();
    let nn = p.big_n();
    let l = p.ell_total();
    let nu_ = n as u32;
    let mut g = Graded::from_q(sign_pow(nu_))
        .mul(Graded::from_poch(-nn, nu_))
        .mul(poch_ratio(-l, (nn + n) as u32, (2 * n) as u32))
        .div(Graded::from_poch(-l, nn as u32));
    for j in 1..=p.d() {
        let vj = nu.at(j) as u32;
        let za = zhat_a(j, nu, p);
        let lj = p.ell_at(j);
        g = g
            .mul(Graded::from_poch(-za, vj))
            .mul(poch_ratio(-lj - za - 1, 2 * vj, vj))
            .mul(Graded::from_q(factorial_q(vj)))
            .div(Graded::from_poch(-lj, vj));
    }
    Ok(g.eval(&format!("B_{nu} for {p}")))
}

/// `Σ_{x∈V} sQ_ν(x)² sH(x)` by direct summation.
pub fn norm_b_brute(nu: &MultiIndex, p: &LatticeParams) -> Result<Q> {
    let mut s = Q::zero();
    for x in p.enum_v() {
        let v = sq_nu_value(nu, &x, p)?;
        s += &v * &v * weight_h_md(&x, p);
    }
    Ok(s)
}

/// True iff `sQ_ν` vanishes at every point of `V`. Applies to defined `ν ∉ H`.
pub fn vanishing_check(nu: &MultiIndex, p: &LatticeParams) -> Result<bool> {
    check_nu(nu, p)?;
    if p.in_h(nu) {
        return Err(Error::NotApplicable(format!("{nu} is in H for {p}")));
    }
    for x in p.enum_v() {
        if !sq_nu_value(nu, &x, p)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Which constant multiple of `sQ_ν` a [`HahnMD`] carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    /// `sQ_ν` itself.
    Q,
    /// `(-1)^{|ν|}/(-N)_{|ν|} · Π (-ℓ_j)_{ν_j}/(-ẑa_j)_{ν_j} · sQ_ν`, the
    /// homogeneous-coordinate form matched by the generating function.
    H,
    /// `sQ_ν/(-N)_{|ν|}`, the form diagonalized by both operator families.
    Hat,
}

impl std::str::FromStr for Normalization {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "q" | "Q" => Ok(Normalization::Q),
            "h" | "H" => Ok(Normalization::H),
            "hat" => Ok(Normalization::Hat),
            _ => Err(Error::InvalidParams(format!("unknown normalization {s:?} (q, h, hat)"))),
        }
    }
}

/// Constant relating `normalization` to `sQ_ν`. `ν` must lie in `H` for the
/// `H` and `Hat` forms.
pub fn normalization_constant(nu: &MultiIndex, p: &LatticeParams, norm: Normalization) -> Result<Q> {
    if norm != Normalization::Q && !p.in_h(nu) {
        return Err(Error::OutOfRange(format!("{nu} is not in H for {p}")));
    }
    let n = nu.total() as u32;
    let hat = poch_i(-p.big_n(), n).recip();
    Ok(match norm {
        Normalization::Q => Q::one(),
        Normalization::Hat => hat,
        Normalization::H => {
            let mut c = sign_pow(n) * hat;
            for j in 1..=p.d() {
                let vj = nu.at(j) as u32;
                c *= poch_i(-p.ell_at(j), vj) / poch_i(-zhat_a(j, nu, p), vj);
            }
            c
        }
    })
}

/// One multivariate Hahn polynomial with its index, parameters and scaling.
#[derive(Clone, Debug, PartialEq)]
pub struct HahnMD {
    pub nu: MultiIndex,
    pub params: LatticeParams,
    pub poly: PolyQ,
    pub normalization: Normalization,
}

impl HahnMD {
    pub fn new(nu: MultiIndex, params: LatticeParams, normalization: Normalization) -> Result<Self> {
        let c = normalization_constant(&nu, &params, normalization)?;
        let poly = sq_nu(&nu, &params)?.scale(&c);
        Ok(HahnMD { nu, params, poly, normalization })
    }
}

/// Values of every `sQ_ν`, `ν ∈ H`, on every point of `V`, with the norms.
#[derive(Clone, Debug)]
pub struct Basis {
    pub params: LatticeParams,
    pub v: Vec<MultiIndex>,
    pub h: Vec<MultiIndex>,
    /// `values[i][k] = sQ_{h[i]}(v[k])`.
    pub values: Vec<Vec<Q>>,
    pub norms: Vec<Q>,
    pub weights: Vec<Q>,
}

impl Basis {
    pub fn new(p: &LatticeParams) -> Result<Self> {
        let v = p.enum_v();
        let h = p.enum_h();
        let mut values = Vec::with_capacity(h.len());
        let mut norms = Vec::with_capacity(h.len());
        for nu in &h {
            values.push(v.iter().map(|x| sq_nu_value(nu, x, p)).collect::<Result<Vec<_>>>()?);
            match norm_b_nu(nu, p)? {
                EvalResult::Finite(b) => norms.push(b),
                EvalResult::Undefined(s) => return Err(Error::Invariant(s)),
            }
        }
        let weights = v.iter().map(|x| weight_h_md(x, p)).collect();
        Ok(Basis { params: p.clone(), v, h, values, norms, weights })
    }

    pub fn index_of_v(&self, x: &MultiIndex) -> Option<usize> {
        self.v.binary_search(x).ok()
    }

    pub fn index_of_h(&self, nu: &MultiIndex) -> Option<usize> {
        self.h.binary_search(nu).ok()
    }

    /// `Σ_x sQ_μ(x) sQ_ν(x) sH(x)` for basis positions `a`, `b`.
    pub fn gram(&self, a: usize, b: usize) -> Q {
        let mut s = Q::zero();
        for ((u, w), wt) in self.values[a].iter().zip(&self.values[b]).zip(&self.weights) {
            if !u.is_zero() && !w.is_zero() {
                s += u * w * wt;
            }
        }
        s
    }

    /// First failing pair of the orthogonality relation, if any.
    pub fn orthogonality_failure(&self) -> Option<(MultiIndex, MultiIndex, Q)> {
        for a in 0..self.h.len() {
            for b in a..self.h.len() {
                let g = self.gram(a, b);
                let want = if a == b { self.norms[a].clone() } else { Q::zero() };
                if g != want {
                    return Some((self.h[a].clone(), self.h[b].clone(), g));
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::qr;
    use crate::hahn1d::{hahn_sq, norm_b, Params1D};

    fn ex() -> LatticeParams {
        LatticeParams::new(vec![6, 4, 4], 7).unwrap()
    }

    fn mi(v: &[i64]) -> MultiIndex {
        MultiIndex(v.to_vec())
    }

    #[test]
    fn weight_forms_agree() {
        let p = ex();
        let mut s = Q::zero();
        for x in p.enum_ch() {
            assert_eq!(weight_h_md(&x, &p), weight_h_md_pochhammer(&x, &p));
            s += weight_h_md(&x, &p);
        }
        assert_eq!(s, Q::one());
    }

    #[test]
    fn example_orthogonality() {
        let b = Basis::new(&ex()).unwrap();
        assert_eq!(b.orthogonality_failure(), None);
        assert!(b.norms.iter().all(|n| n > &Q::zero()));
    }

    #[test]
    fn example_zero_norms() {
        let p = ex();
        for nu in [mi(&[0, 5]), mi(&[3, 3])] {
            assert!(norm_b_nu(&nu, &p).unwrap().is_zero());
            assert!(vanishing_check(&nu, &p).unwrap());
        }
        assert_eq!(norm_b_nu(&mi(&[1, 1]), &p).unwrap().finite().unwrap(), &norm_b_brute(&mi(&[1, 1]), &p).unwrap());
        assert_eq!(sq_nu(&mi(&[0, 0]), &p).unwrap(), PolyQ::one(2));
    }

    #[test]
    fn d1_reduction() {
        let p = LatticeParams::new(vec![6, 8], 8).unwrap();
        let p1 = Params1D::new(6, 8, 8).unwrap();
        for n in 0..=6u32 {
            let nu = mi(&[n as i64]);
            let c = poch_i(-8, n);
            assert_eq!(sq_nu(&nu, &p).unwrap(), hahn_sq(n, &p1).unwrap().scale(&c));
            if n as i64 <= p1.deg_bound() {
                assert_eq!(norm_b_nu(&nu, &p).unwrap(), EvalResult::Finite(norm_b(n, &p1).unwrap() * &c * &c));
            }
        }
    }

    #[test]
    fn hat_normalization() {
        let p = ex();
        let h = HahnMD::new(mi(&[1, 0]), p.clone(), Normalization::Hat).unwrap();
        assert_eq!(h.poly, sq_nu(&mi(&[1, 0]), &p).unwrap().scale(&qr(-1, 7)));
    }
}
