//! One-variable Hahn polynomials, classical and with negative integer
//! parameters, together with their weight, norms, factorization, generating
//! functions, moment functional and three-term relation.

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial_q, poch_i, poch_int, pochhammer, q, qr, EvalResult, Q};
use crate::poly::PolyQ;
use num_traits::{One, Zero};

/// Parameters `(ℓ1, ℓ2, N)` of the one-variable family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Params1D {
    pub ell1: i64,
    pub ell2: i64,
    pub big_n: i64,
}

/// Support `[lo, hi]` of the weight, with `deg_bound = hi - lo`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Support1D {
    pub lo: i64,
    pub hi: i64,
    pub deg_bound: i64,
}

impl Params1D {
    pub fn new(ell1: i64, ell2: i64, big_n: i64) -> Result<Self> {
        if ell1 < 1 || ell2 < 1 || big_n < 1 {
            return Err(Error::InvalidParams(format!(
                "l1={ell1}, l2={ell2}, N={big_n} must be positive"
            )));
        }
        if ell1 + ell2 < big_n {
            return Err(Error::InvalidParams(format!("l1+l2={} < N={big_n}", ell1 + ell2)));
        }
        Ok(Params1D { ell1, ell2, big_n })
    }

    /// Parameters for series evaluation only, without the `ℓ1 + ℓ2 ≥ N`
    /// condition. The reduced factors of [`factorize_thm`] live here, e.g.
    /// `sQ_3(x; 3, 5, 12)`. Weight, norm and support are meaningless for them.
    pub fn series_only(ell1: i64, ell2: i64, big_n: i64) -> Self {
        Params1D { ell1, ell2, big_n }
    }

    pub fn support(&self) -> Support1D {
        let lo = self.big_n - self.ell2.min(self.big_n);
        let hi = self.ell1.min(self.big_n);
        Support1D { lo, hi, deg_bound: hi - lo }
    }

    pub fn deg_bound(&self) -> i64 {
        self.support().deg_bound
    }

    /// All admissible parameter sets with `ℓ1, ℓ2 ≤ max_ell` and `N ≤ max_n`.
    pub fn grid(max_ell: i64, max_n: i64) -> Vec<Params1D> {
        let mut out = Vec::new();
        for n in 1..=max_n {
            for l1 in 1..=max_ell {
                for l2 in 1..=max_ell {
                    if l1 + l2 >= n {
                        out.push(Params1D { ell1: l1, ell2: l2, big_n: n });
                    }
                }
            }
        }
        out
    }
}

fn x_poly() -> PolyQ {
    PolyQ::var(1, 0)
}

/// Weight `binom(ℓ1,x) binom(ℓ2,N-x) / binom(ℓ1+ℓ2,N)`.
pub fn weight_h(x: i64, p: &Params1D) -> Q {
    binomial(p.ell1, x) * binomial(p.ell2, p.big_n - x) / binomial(p.ell1 + p.ell2, p.big_n)
}

/// Pochhammer form `N!/(-ℓ1-ℓ2)_N · (-ℓ1)_x (-ℓ2)_{N-x} / (x! (N-x)!)`.
pub fn weight_h_pochhammer(x: i64, p: &Params1D) -> Q {
    if x < 0 || x > p.big_n {
        return Q::zero();
    }
    let n = p.big_n as u32;
    let xu = x as u32;
    factorial_q(n) / poch_i(-p.ell1 - p.ell2, n) * poch_i(-p.ell1, xu)
        * poch_i(-p.ell2, n - xu)
        / (factorial_q(xu) * factorial_q(n - xu))
}

fn inv_factorial(k: i64) -> Q {
    if k < 0 {
        Q::zero()
    } else {
        factorial_q(k as u32).recip()
    }
}

/// The form written with `ℓ ∧ N` and `ℓ ∨ N`, supported on `[lo, hi]` directly.
pub fn weight_h_minmax(x: i64, p: &Params1D) -> Q {
    if x < 0 || x > p.big_n {
        return Q::zero();
    }
    let (l1, l2, n) = (p.ell1, p.ell2, p.big_n);
    let (mn1, mx1) = (l1.min(n), l1.max(n));
    let (mn2, mx2) = (l2.min(n), l2.max(n));
    factorial_q(mx1 as u32) * factorial_q(mx2 as u32)
        / (factorial_q(n as u32) * poch_i(-l1 - l2, n as u32))
        * poch_i(-mn1, x as u32)
        * poch_i(-mn2, (n - x) as u32)
        * inv_factorial(x - n + mx2)
        * inv_factorial(mx1 - x)
}

/// One term generator of a terminating `3F2(-n, n-ℓ1-ℓ2-1, -x; -ℓ1, lower; 1)`.
///
/// `Lower::Raw(M)` divides by `(-M)_k`. `Lower::Cleared(M)` multiplies the
/// whole sum by `(-M)_n`, so term `k` carries `(-M+k)_{n-k}` instead and `M`
/// may be a polynomial.
#[derive(Clone, Debug)]
pub enum Lower {
    Raw(i64),
    Cleared(PolyQ),
}

/// Terminating series in the variable polynomial `x`. Truncates at the first
/// vanishing numerator before looking at any denominator; a zero denominator
/// reached before that is reported as `Err(description)`.
pub fn hahn_series(
    n: u32,
    ell1: i64,
    ell2: i64,
    x: &PolyQ,
    lower: &Lower,
) -> std::result::Result<PolyQ, String> {
    let nv = x.nvars();
    let neg_x = x.scale(&-Q::one());
    let mut sum = PolyQ::zero(nv);
    let n_i = n as i64;
    for k in 0..=n {
        let num = poch_int(-n_i, k) * poch_int(n_i - ell1 - ell2 - 1, k);
        if num.is_zero() {
            break;
        }
        let mut den = poch_int(-ell1, k) * crate::exact::factorial(k);
        if let Lower::Raw(m) = lower {
            den *= poch_int(-m, k);
        }
        if den.is_zero() {
            return Err(format!(
                "denominator vanishes at k={k} (n={n}, l1={ell1}, l2={ell2}, {})",
                match lower {
                    Lower::Raw(m) => format!("M={m}"),
                    Lower::Cleared(_) => "cleared".to_string(),
                }
            ));
        }
        let c = Q::new(num, den);
        let mut term = neg_x.rising(k).scale(&c);
        if let Lower::Cleared(m) = lower {
            let base = m.scale(&-Q::one()).add_const(&q(k as i64));
            term = &term * &base.rising(n - k);
        }
        sum = &sum + &term;
    }
    Ok(sum)
}

/// Numeric counterpart of [`hahn_series`] at an integer `x` and integer `M`.
pub fn hahn_series_value(n: u32, ell1: i64, ell2: i64, x: i64, m: i64, cleared: bool) -> std::result::Result<Q, String> {
    let n_i = n as i64;
    let mut sum = Q::zero();
    for k in 0..=n {
        let num = poch_int(-n_i, k) * poch_int(n_i - ell1 - ell2 - 1, k);
        if num.is_zero() {
            break;
        }
        let mut den = poch_int(-ell1, k) * crate::exact::factorial(k);
        if !cleared {
            den *= poch_int(-m, k);
        }
        if den.is_zero() {
            return Err(format!("denominator vanishes at k={k} (n={n}, l1={ell1}, l2={ell2}, M={m})"));
        }
        let mut top = num * poch_int(-x, k);
        if cleared {
            top *= poch_int(-m + k as i64, n - k);
        }
        sum += Q::new(top, den);
    }
    Ok(sum)
}

/// Classical Hahn polynomial `3F2(-n, n+a+b+1, -x; a+1, -N; 1)` with rational
/// parameters.
pub fn hahn_classical(n: u32, a: &Q, b: &Q, big_n: i64) -> Result<PolyQ> {
    if n as i64 > big_n {
        return Err(Error::OutOfRange(format!("n={n} > N={big_n}")));
    }
    let x = x_poly();
    let neg_x = x.scale(&-Q::one());
    let nq = q(n as i64);
    let second = &nq + a + b + Q::one();
    let a1 = a + Q::one();
    let mut sum = PolyQ::zero(1);
    for k in 0..=n {
        let num = pochhammer(&-nq.clone(), k) * pochhammer(&second, k);
        if num.is_zero() {
            break;
        }
        let den = pochhammer(&a1, k) * poch_i(-big_n, k) * factorial_q(k);
        if den.is_zero() {
            return Err(Error::Undefined(format!(
                "classical Hahn n={n}, a={a}, b={b}, N={big_n}: denominator vanishes at k={k}"
            )));
        }
        sum = &sum + &neg_x.rising(k).scale(&(num / den));
    }
    Ok(sum)
}

/// Classical weight `N!/(a+b+2)_N · (a+1)_x (b+1)_{N-x} / (x! (N-x)!)`.
pub fn weight_classical(x: i64, a: &Q, b: &Q, big_n: i64) -> Q {
    if x < 0 || x > big_n {
        return Q::zero();
    }
    let n = big_n as u32;
    let xu = x as u32;
    factorial_q(n) / pochhammer(&(a + b + q(2)), n) * pochhammer(&(a + Q::one()), xu)
        * pochhammer(&(b + Q::one()), n - xu)
        / (factorial_q(xu) * factorial_q(n - xu))
}

/// `sQ_n(x; ℓ1, ℓ2, N)`, defined for `n ≤ ℓ1 ∧ N`.
pub fn hahn_sq(n: u32, p: &Params1D) -> Result<PolyQ> {
    let cap = p.ell1.min(p.big_n);
    if n as i64 > cap {
        return Err(Error::OutOfRange(format!("n={n} > l1∧N={cap}")));
    }
    hahn_series(n, p.ell1, p.ell2, &x_poly(), &Lower::Raw(p.big_n))
        .map_err(Error::Invariant)
}

/// `Σ_{x=lo}^{hi} f(x) g(x) sH(x)`.
pub fn inner_product(f: &PolyQ, g: &PolyQ, p: &Params1D) -> Result<Q> {
    for h in [f, g] {
        if h.nvars() != 1 {
            return Err(Error::Dimension { expected: 1, got: h.nvars() });
        }
    }
    let s = p.support();
    let mut acc = Q::zero();
    for x in s.lo..=s.hi {
        acc += f.eval_int(&[x])? * g.eval_int(&[x])? * weight_h(x, p);
    }
    Ok(acc)
}

/// Closed-form squared norm `sB_n(ℓ, N)`.
pub fn norm_b(n: u32, p: &Params1D) -> Result<Q> {
    let deg = p.deg_bound();
    if n as i64 > deg {
        return Err(Error::OutOfRange(format!("n={n} > deg={deg}")));
    }
    let (l1, l2, nn) = (p.ell1, p.ell2, p.big_n);
    let ni = n as i64;
    let sign = if n.is_multiple_of(2) { Q::one() } else { -Q::one() };
    let num = sign
        * factorial_q(n)
        * poch_i(-l2, n)
        * poch_i(-l1 - l2 + nn, n)
        * q(-ni + l1 + l2 + 1);
    let den = poch_i(-l1, n) * poch_i(-l1 - l2, n) * poch_i(-nn, n) * q(-2 * ni + l1 + l2 + 1);
    Ok(num / den)
}

/// Decomposition `sQ_n = prefactor · Π (x - root) · reduced`.
#[derive(Clone, Debug, PartialEq)]
pub struct Factor1D {
    pub prefactor: Q,
    pub linear_roots: Vec<i64>,
    pub reduced: PolyQ,
}

impl Factor1D {
    pub fn product(&self) -> PolyQ {
        let x = x_poly();
        let mut r = self.reduced.scale(&self.prefactor);
        for &root in &self.linear_roots {
            r = &r * &x.add_const(&q(-root));
        }
        r
    }
}

/// Factorization of `sQ_n` beyond the degree bound, for `ℓ2 ≤ N` and
/// `deg < n ≤ ℓ1 ∧ N`. The result is re-multiplied and compared with
/// [`hahn_sq`]; a mismatch is an error.
pub fn factorize_thm(n: u32, p: &Params1D) -> Result<Factor1D> {
    let (l1, l2, nn) = (p.ell1, p.ell2, p.big_n);
    let deg = p.deg_bound();
    let ni = n as i64;
    if l2 > nn || ni <= deg || ni > l1.min(nn) {
        return Err(Error::NotApplicable(format!(
            "factorization needs l2 <= N and deg < n <= l1∧N (n={n}, l=({l1},{l2}), N={nn}, deg={deg})"
        )));
    }
    let m = (ni - deg - 1) as u32;
    let prefactor = poch_i(-nn + l2 + 1, m) / poch_i(-l1.min(nn), n);
    let linear_roots: Vec<i64> = (nn - l2..=l1.min(nn)).collect();
    let reduced = hahn_series(m, nn - l2 - 1, (nn - l1).abs() - 1, &x_poly(), &Lower::Raw(l1.max(nn)))
        .map_err(Error::Invariant)?;
    let f = Factor1D { prefactor, linear_roots, reduced };
    if f.product() != hahn_sq(n, p)? {
        return Err(Error::Invariant(format!(
            "factorization of sQ_{n}(x;{l1},{l2},{nn}) does not re-multiply"
        )));
    }
    Ok(f)
}

/// Coefficients `(-n)_k (n-a-b-1)_k / ((-a)_k k!)` of `G_n^{(a,b)}` in powers
/// of `(1-t)/2`.
pub fn g_coeffs(n: u32, a: i64, b: i64) -> Result<Vec<Q>> {
    let ni = n as i64;
    let mut out = Vec::new();
    for k in 0..=n {
        let num = poch_int(-ni, k) * poch_int(ni - a - b - 1, k);
        if num.is_zero() {
            break;
        }
        let den = poch_int(-a, k) * crate::exact::factorial(k);
        if den.is_zero() {
            return Err(Error::Undefined(format!("G_{n}^({a},{b}): (-{a})_{k} = 0")));
        }
        out.push(Q::new(num, den));
    }
    Ok(out)
}

/// `G_n^{(ℓ1,ℓ2)}(t) = 2F1(-n, n-ℓ1-ℓ2-1; -ℓ1; (1-t)/2)`.
pub fn jacobi_g(n: u32, ell1: i64, ell2: i64) -> Result<PolyQ> {
    if n as i64 > ell1.min(ell2) {
        return Err(Error::OutOfRange(format!("n={n} > l1∧l2={}", ell1.min(ell2))));
    }
    let t = x_poly();
    let s = PolyQ::one(1).try_sub(&t)?.scale(&qr(1, 2));
    let mut r = PolyQ::zero(1);
    for (k, c) in g_coeffs(n, ell1, ell2)?.iter().enumerate() {
        r = &r + &s.pow(k as u32).scale(c);
    }
    Ok(r)
}

/// `(1+t)^D G_n^{(a,b)}((1-t)/(1+t)) = Σ_k c_k t^k (1+t)^{D-k}` as a polynomial.
pub fn homogenized_g(n: u32, a: i64, b: i64, big_d: u32) -> Result<PolyQ> {
    let t = x_poly();
    let one_t = t.add_const(&Q::one());
    let mut r = PolyQ::zero(1);
    for (k, c) in g_coeffs(n, a, b)?.iter().enumerate() {
        let k = k as u32;
        if k > big_d {
            return Err(Error::OutOfRange(format!("degree {k} exceeds homogenizing degree {big_d}")));
        }
        r = &r + &(&t.pow(k) * &one_t.pow(big_d - k)).scale(c);
    }
    Ok(r)
}

/// The constant `b_{ℓ,N}` of the restricted generating function.
pub fn genfun_b(n: u32, p: &Params1D) -> Q {
    let (l1, l2, nn) = (p.ell1, p.ell2, p.big_n);
    let m2 = l2.min(nn);
    poch_i(-l2, n) * poch_i(-l1 - m2 + nn, n) / (poch_i(-l1, n) * poch_i(-l2 + m2 - nn, n))
}

/// Both sides of the restricted generating function, as polynomials in `t`.
pub fn genfun_sides(n: u32, p: &Params1D) -> Result<(PolyQ, PolyQ)> {
    let s = p.support();
    if n as i64 > s.deg_bound {
        return Err(Error::OutOfRange(format!("n={n} > deg={}", s.deg_bound)));
    }
    let (l1, l2, nn) = (p.ell1, p.ell2, p.big_n);
    let alpha = l1 + l2.min(nn) - l1.min(nn);
    let beta = l2 + l1.min(nn) - l2.min(nn);
    let t = x_poly();
    let lhs = (&t.pow(s.lo as u32) * &homogenized_g(n, alpha, beta, s.deg_bound as u32)?)
        .scale(&genfun_b(n, p));
    let sq = hahn_sq(n, p)?;
    let mut rhs = PolyQ::zero(1);
    for x in s.lo..=s.hi {
        let c = binomial(s.deg_bound, s.hi - x) * sq.eval_int(&[x])?;
        rhs = &rhs + &t.pow(x as u32).scale(&c);
    }
    Ok((lhs, rhs))
}

pub fn genfun_check(n: u32, p: &Params1D) -> Result<bool> {
    let (l, r) = genfun_sides(n, p)?;
    Ok(l == r)
}

/// The unrestricted identity `(1+t)^N G_n((1-t)/(1+t)) = Σ_{x=0}^N binom(N,x) sQ_n(x) t^x`,
/// for `n ≤ ℓ1 ∧ ℓ2 ∧ N`.
pub fn genfun_full_check(n: u32, p: &Params1D) -> Result<bool> {
    let (l1, l2, nn) = (p.ell1, p.ell2, p.big_n);
    if n as i64 > l1.min(l2).min(nn) {
        return Err(Error::OutOfRange(format!("n={n} > l1∧l2∧N")));
    }
    let lhs = homogenized_g(n, l1, l2, nn as u32)?;
    let sq = hahn_sq(n, p)?;
    let t = x_poly();
    let mut rhs = PolyQ::zero(1);
    for x in 0..=nn {
        rhs = &rhs + &t.pow(x as u32).scale(&(binomial(nn, x) * sq.eval_int(&[x])?));
    }
    Ok(lhs == rhs)
}

/// The moment functional `L(x^k) = 2F1(-k, -ℓ1; -ℓ1-ℓ2; 2)`, extended linearly.
pub fn moment_l(poly: &PolyQ, ell1: i64, ell2: i64) -> Result<Q> {
    if poly.nvars() != 1 {
        return Err(Error::Dimension { expected: 1, got: poly.nvars() });
    }
    let deg = poly.degree().unwrap_or(0) as i64;
    if deg > ell1 + ell2 {
        return Err(Error::OutOfRange(format!("degree {deg} > l1+l2={}", ell1 + ell2)));
    }
    let mut acc = Q::zero();
    for (e, c) in poly.terms() {
        acc += c * moment_power(e[0], ell1, ell2);
    }
    Ok(acc)
}

fn moment_power(k: u32, ell1: i64, ell2: i64) -> Q {
    let mut s = Q::zero();
    let mut pow2 = Q::one();
    for j in 0..=k {
        let num = poch_i(-(k as i64), j) * poch_i(-ell1, j);
        if num.is_zero() {
            break;
        }
        s += num * &pow2 / (poch_i(-ell1 - ell2, j) * factorial_q(j));
        pow2 *= q(2);
    }
    s
}

/// `h_n = n! (-ℓ2)_n (1+ℓ1+ℓ2-n) / ((-ℓ1)_n (-ℓ1-ℓ2)_n (1+ℓ1+ℓ2-2n))`.
pub fn h_n(n: u32, ell1: i64, ell2: i64) -> Result<Q> {
    if n as i64 > ell1.min(ell2) {
        return Err(Error::OutOfRange(format!("n={n} > l1∧l2")));
    }
    let ni = n as i64;
    Ok(factorial_q(n) * poch_i(-ell2, n) * q(1 + ell1 + ell2 - ni)
        / (poch_i(-ell1, n) * poch_i(-ell1 - ell2, n) * q(1 + ell1 + ell2 - 2 * ni)))
}

fn ratio(num: i64, den: i64, what: &str) -> EvalResult {
    if den == 0 {
        EvalResult::Undefined(format!("{what}: zero denominator"))
    } else {
        EvalResult::Finite(qr(num, den))
    }
}

/// Coefficients `(A_n, C_n)` of `x φ_n = -A_n φ_{n+1} + (A_n+C_n) φ_n - C_n φ_{n-1}`.
pub fn three_term_coeffs(n: u32, p: &Params1D) -> Result<(EvalResult, EvalResult)> {
    if n as i64 > p.deg_bound() {
        return Err(Error::OutOfRange(format!("n={n} > deg={}", p.deg_bound())));
    }
    let (l1, l2, nn) = (p.ell1, p.ell2, p.big_n);
    let n = n as i64;
    let l = l1 + l2;
    let a = ratio(
        (n - l - 1) * (n - l1) * (nn - n),
        (2 * n - l - 1) * (2 * n - l),
        "A_n",
    );
    let c = ratio(
        n * (n + nn - l - 1) * (n - l2 - 1),
        (2 * n - l - 1) * (2 * n - l - 2),
        "C_n",
    );
    Ok((a, c))
}

/// Checks the three-term relation at `n` as a polynomial identity. Returns
/// `None` when a coefficient is undefined or `φ_{n+1}` does not exist.
pub fn three_term_check(n: u32, p: &Params1D) -> Result<Option<bool>> {
    let (a, c) = three_term_coeffs(n, p)?;
    let (Some(a), Some(c)) = (a.into_finite(), c.into_finite()) else {
        return Ok(None);
    };
    if n as i64 + 1 > p.ell1.min(p.big_n) {
        return Ok(None);
    }
    let phi = |k: u32| hahn_sq(k, p);
    let lhs = &x_poly() * &phi(n)?;
    let mut rhs = phi(n + 1)?.scale(&-a.clone()) + phi(n)?.scale(&(&a + &c));
    if n > 0 {
        rhs = rhs - phi(n - 1)?.scale(&c);
    }
    Ok(Some(lhs == rhs))
}

/// `R_n(x; ℓ1, ℓ2, y) = Σ_k (-n)_k (n-ℓ1-ℓ2-1)_k (-x)_k (-y+k)_{n-k} / ((-ℓ1)_k k!)`
/// in the variables `(x, y)`.
pub fn r_poly(n: u32, ell1: i64, ell2: i64) -> Result<PolyQ> {
    if n as i64 > ell1.min(ell2) {
        return Err(Error::OutOfRange(format!("n={n} > l1∧l2={}", ell1.min(ell2))));
    }
    hahn_series(n, ell1, ell2, &PolyQ::var(2, 0), &Lower::Cleared(PolyQ::var(2, 1)))
        .map_err(Error::Undefined)
}

pub(crate) fn sign_pow(n: u32) -> Q {
    if n.is_multiple_of(2) {
        Q::one()
    } else {
        -Q::one()
    }
}

/// `(-1)^n (-ℓ2)_n / (-ℓ1)_n`, the constant in the reflection identities.
pub fn reflection_constant(n: u32, ell1: i64, ell2: i64) -> Q {
    sign_pow(n) * poch_i(-ell2, n) / poch_i(-ell1, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(a: i64, b: i64, n: i64) -> Params1D {
        Params1D::new(a, b, n).unwrap()
    }

    fn cubic() -> PolyQ {
        // -(1/132)(x-4)(2x^2-13x+33)
        let a = PolyQ::from_int_coeffs(&[-4, 1]);
        let b = PolyQ::from_int_coeffs(&[33, -13, 2]);
        (&a * &b).scale(&qr(-1, 132))
    }

    #[test]
    fn printed_examples() {
        let s = Params1D::series_only;
        assert_eq!(hahn_sq(3, &s(3, 5, 12)).unwrap(), cubic());
        let a = PolyQ::from_int_coeffs(&[52, -14, 1]);
        let b = PolyQ::from_int_coeffs(&[-480, 159, -20, 1]);
        assert_eq!(hahn_sq(5, &s(6, 7, 16)).unwrap(), (&a * &b).scale(&qr(-1, 24960)));
        assert_eq!(hahn_sq(0, &p(6, 8, 12)).unwrap(), PolyQ::one(1));
    }

    #[test]
    fn weights_agree_and_sum_to_one() {
        for pp in Params1D::grid(6, 8) {
            let mut s = Q::zero();
            for x in 0..=pp.big_n + 1 {
                let w = weight_h(x, &pp);
                assert_eq!(w, weight_h_pochhammer(x, &pp), "{pp:?} x={x}");
                assert_eq!(w, weight_h_minmax(x, &pp), "{pp:?} x={x}");
                s += w;
            }
            assert_eq!(s, Q::one());
        }
        assert_eq!(weight_h(0, &p(1, 1, 1)), qr(1, 2));
        assert_eq!(weight_h(3, &p(6, 8, 12)), Q::zero());
    }

    #[test]
    fn factor_examples() {
        let f = factorize_thm(6, &p(6, 8, 12)).unwrap();
        assert_eq!(f.prefactor, qr(-1, 120));
        assert_eq!(f.linear_roots, vec![4, 5, 6]);
        assert_eq!(f.reduced, cubic());
        let f = factorize_thm(7, &p(8, 9, 16)).unwrap();
        assert_eq!(f.prefactor, qr(1, 56));
        assert_eq!(f.linear_roots, vec![7, 8]);
        assert_eq!(f.reduced, hahn_sq(5, &Params1D::series_only(6, 7, 16)).unwrap());
        assert!(matches!(factorize_thm(1, &p(6, 8, 12)), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn classical_orthogonality() {
        let h = qr(1, 2);
        let polys: Vec<PolyQ> = (0..=4).map(|n| hahn_classical(n, &h, &h, 4).unwrap()).collect();
        for m in 0..=4 {
            for n in 0..=4 {
                let mut s = Q::zero();
                for x in 0..=4 {
                    s += polys[m].eval_int(&[x]).unwrap()
                        * polys[n].eval_int(&[x]).unwrap()
                        * weight_classical(x, &h, &h, 4);
                }
                assert_eq!(s.is_zero(), m != n);
            }
            assert_eq!(polys[m].constant_term(), Q::one());
        }
    }

    #[test]
    fn three_term_pole() {
        let (a, c) = three_term_coeffs(2, &p(2, 2, 2)).unwrap();
        assert!(a.is_undefined());
        assert!(!c.is_undefined());
        let (_, c0) = three_term_coeffs(0, &p(6, 8, 12)).unwrap();
        assert!(c0.is_zero());
        assert_eq!(three_term_check(0, &p(6, 8, 12)).unwrap(), Some(true));
        assert_eq!(three_term_check(1, &p(6, 8, 12)).unwrap(), Some(true));
    }

    #[test]
    fn jacobi_reflection() {
        for n in 0..=3 {
            let g = jacobi_g(n, 3, 5).unwrap();
            let h = jacobi_g(n, 5, 3).unwrap();
            let h_neg = h.compose(&[x_poly().scale(&-Q::one())]).unwrap();
            assert_eq!(g, h_neg.scale(&reflection_constant(n, 3, 5)));
            assert_eq!(g.eval_int(&[1]).unwrap(), Q::one());
            assert_eq!(g.degree().unwrap_or(0), n);
        }
    }

    #[test]
    fn r_poly_small() {
        assert_eq!(r_poly(0, 2, 2).unwrap(), PolyQ::one(2));
        let r1 = r_poly(1, 2, 2).unwrap();
        let lin = PolyQ::from_terms(2, [(vec![0, 1], q(1)), (vec![1, 0], q(-2))]).unwrap();
        assert!(r1.div_exact(&lin).unwrap().is_some());
    }
}
