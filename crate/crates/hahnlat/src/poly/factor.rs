//! Desk-scale factorization over the rationals.
//!
//! Univariate: square-free split, then Kronecker's method. Candidate factor
//! degrees are first pruned with distinct-degree factorization modulo a few
//! small primes. Bivariate: a shear `y -> y + c x` makes the polynomial monic
//! in `x` up to a constant, after which every factor is determined by its
//! specializations at `y = a` and can be recovered by interpolation.

use super::uni::{squarefree_decomposition, trim, uni_div_rem};
use super::PolyQ;
use crate::error::{Error, Result};
use crate::exact::{q, qz, Q};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeSet;

pub const UNIVARIATE_MAX_DEGREE: u32 = 12;
pub const BIVARIATE_MAX_DEGREE: u32 = 8;
const COMBINATION_BUDGET: u64 = 4_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub content: Q,
    pub factors: Vec<(PolyQ, u32)>,
}

impl Factorization {
    pub fn product(&self) -> PolyQ {
        let nvars = self.factors.first().map(|f| f.0.nvars()).unwrap_or(1);
        self.factors
            .iter()
            .fold(PolyQ::constant(nvars, self.content.clone()), |acc, (f, m)| &acc * &f.pow(*m))
    }

    /// Rational roots of the linear factors.
    pub fn linear_roots(&self) -> Vec<Q> {
        self.factors
            .iter()
            .filter(|(f, _)| f.degree() == Some(1))
            .flat_map(|(f, m)| {
                let c = f.uni_coeffs();
                std::iter::repeat_n(-&c[0] / &c[1], *m as usize)
            })
            .collect()
    }

    pub fn splits(&self) -> bool {
        self.factors.iter().all(|(f, _)| f.degree() == Some(1))
    }
}

/// Complete factorization of a univariate polynomial of degree at most 12.
pub fn univariate_factor(p: &PolyQ) -> Result<Factorization> {
    if p.nvars() != 1 {
        return Err(Error::Dimension { expected: 1, got: p.nvars() });
    }
    let deg = match p.degree() {
        None => return Err(Error::OutOfRange("cannot factor the zero polynomial".into())),
        Some(d) => d,
    };
    if deg > UNIVARIATE_MAX_DEGREE {
        return Err(Error::UnsupportedDegree { degree: deg, max: UNIVARIATE_MAX_DEGREE });
    }
    let mut factors: Vec<(PolyQ, u32)> = Vec::new();
    if deg > 0 {
        let parts = squarefree_decomposition(&p.uni_coeffs());
        for (i, part) in parts.iter().enumerate() {
            if part.len() <= 1 {
                continue;
            }
            let (_, prim) = PolyQ::from_coeffs(part).primitive();
            for f in factor_squarefree(&to_int(&prim))? {
                factors.push((from_int(&f), i as u32 + 1));
            }
        }
    }
    factors.sort_by(|a, b| {
        a.0.degree().cmp(&b.0.degree()).then_with(|| a.0.uni_coeffs().cmp(&b.0.uni_coeffs()))
    });
    let mut out = Factorization { content: Q::one(), factors };
    let lead_p = p.leading().unwrap().1.clone();
    let lead_f = out.product().leading().unwrap().1.clone();
    out.content = lead_p / lead_f;
    if out.product() != *p {
        return Err(Error::Invariant("factorization does not multiply back".into()));
    }
    Ok(out)
}

fn to_int(p: &PolyQ) -> Vec<BigInt> {
    p.uni_coeffs().iter().map(|c| c.to_integer()).collect()
}

fn from_int(c: &[BigInt]) -> PolyQ {
    PolyQ::from_coeffs(&c.iter().map(qz).collect::<Vec<_>>())
}

fn int_eval(f: &[BigInt], x: i64) -> BigInt {
    let xb = BigInt::from(x);
    f.iter().rev().fold(BigInt::zero(), |acc, c| acc * &xb + c)
}

/// Exact division in Z[x]; `None` if `g` does not divide `f`.
fn int_div(f: &[BigInt], g: &[BigInt]) -> Option<Vec<BigInt>> {
    let fq: Vec<Q> = f.iter().map(qz).collect();
    let gq: Vec<Q> = g.iter().map(qz).collect();
    let (quo, rem) = uni_div_rem(&fq, &gq);
    if !rem.is_empty() || quo.iter().any(|c| !c.is_integer()) {
        return None;
    }
    Some(quo.iter().map(|c| c.to_integer()).collect())
}

/// Irreducible factors of a primitive square-free integer polynomial.
fn factor_squarefree(f: &[BigInt]) -> Result<Vec<Vec<BigInt>>> {
    let mut f = f.to_vec();
    let mut out = Vec::new();
    // pull out x itself so every evaluation point can be nonzero
    if f.len() > 1 && f[0].is_zero() {
        out.push(vec![BigInt::zero(), BigInt::one()]);
        f.remove(0);
    }
    let mut e = 1;
    while f.len() > 2 * e {
        let allowed = possible_degrees(&f);
        if !allowed.contains(&e) {
            e += 1;
            continue;
        }
        match kronecker_find(&f, e)? {
            Some(g) => {
                f = int_div(&f, &g).expect("found factor divides");
                out.push(g);
            }
            None => e += 1,
        }
    }
    if f.len() > 1 {
        out.push(f);
    }
    Ok(out)
}

/// Search for a factor of exact degree `e` with positive leading coefficient.
fn kronecker_find(f: &[BigInt], e: usize) -> Result<Option<Vec<BigInt>>> {
    let lead = f.last().unwrap().abs();
    let npts = e + 1;
    // rank candidate points by divisor count of f(x)
    let mut cands: Vec<(usize, i64, Vec<BigInt>)> = Vec::new();
    let mut x = 0i64;
    let mut step = 0;
    while cands.len() < 4 * npts + 8 && step < 200 {
        let v = int_eval(f, x);
        if !v.is_zero() {
            if let Some(ds) = divisors(&v.abs()) {
                cands.push((ds.len(), x, ds));
            }
        }
        step += 1;
        x = if x > 0 { -x } else { -x + 1 };
    }
    if cands.len() < npts {
        return Err(Error::SearchBudget("not enough usable evaluation points".into()));
    }
    cands.sort_by_key(|c| c.0);
    cands.truncate(npts);
    let total: f64 = cands.iter().map(|c| 2.0 * c.0 as f64).product::<f64>() / 2.0;
    if total > COMBINATION_BUDGET as f64 {
        return Err(Error::SearchBudget(format!("degree {e} search needs {total:.0} candidates")));
    }
    let xs: Vec<i64> = cands.iter().map(|c| c.1).collect();
    let choices: Vec<Vec<BigInt>> = cands
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let mut v: Vec<BigInt> = c.2.clone();
            if i > 0 {
                v.extend(c.2.iter().map(|d| -d));
            }
            v
        })
        .collect();
    let mut idx = vec![0usize; npts];
    loop {
        // the first value is taken positive; both signs of g are tried via
        // the sign normalization below
        for sgn in [1i64, -1] {
            let vals: Vec<Q> = idx
                .iter()
                .enumerate()
                .map(|(i, &k)| {
                    let v = qz(&choices[i][k]);
                    if i == 0 {
                        v * q(sgn)
                    } else {
                        v
                    }
                })
                .collect();
            if let Some(g) = interpolate_int(&xs, &vals, e) {
                let lg = g.last().unwrap();
                if lg.is_positive() && lead.is_multiple_of(lg) {
                    if int_div(f, &g).is_some() {
                        return Ok(Some(g));
                    }
                }
            }
        }
        let mut i = 0;
        loop {
            if i == npts {
                return Ok(None);
            }
            idx[i] += 1;
            if idx[i] < choices[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

/// Lagrange interpolation; `Some` only for integer coefficients of exact degree `e`.
fn interpolate_int(xs: &[i64], vals: &[Q], e: usize) -> Option<Vec<BigInt>> {
    let c = lagrange(&xs.iter().map(|&x| q(x)).collect::<Vec<_>>(), vals);
    if c.len() != e + 1 || c.iter().any(|v| !v.is_integer()) {
        return None;
    }
    Some(c.iter().map(|v| v.to_integer()).collect())
}

/// Ascending coefficients of the interpolating polynomial.
pub(crate) fn lagrange(xs: &[Q], vals: &[Q]) -> Vec<Q> {
    let n = xs.len();
    let mut out = vec![Q::zero(); n];
    for i in 0..n {
        if vals[i].is_zero() {
            continue;
        }
        let mut basis = vec![Q::one()];
        let mut den = Q::one();
        for j in 0..n {
            if j == i {
                continue;
            }
            let mut nb = vec![Q::zero(); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                nb[k + 1] += b;
                nb[k] -= b * &xs[j];
            }
            basis = nb;
            den *= &xs[i] - &xs[j];
        }
        let s = &vals[i] / den;
        for (k, b) in basis.iter().enumerate() {
            out[k] += b * &s;
        }
    }
    trim(&mut out);
    out
}

/// All positive divisors, or `None` when `n` cannot be fully factored cheaply.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let mut n = n.clone();
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut p = 2u64;
    while p < 100_000 {
        let pb = BigInt::from(p);
        if &pb * &pb > n {
            break;
        }
        let mut k = 0;
        while (&n % &pb).is_zero() {
            n /= &pb;
            k += 1;
        }
        if k > 0 {
            primes.push((pb, k));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > BigInt::one() {
        let bound = BigInt::from(100_000u64) * BigInt::from(100_000u64);
        if n < bound || is_probable_prime(&n) {
            primes.push((n, 1));
        } else {
            return None;
        }
    }
    let mut ds = vec![BigInt::one()];
    for (pr, k) in primes {
        let mut next = Vec::new();
        for d in &ds {
            let mut m = d.clone();
            for _ in 0..=k {
                next.push(m.clone());
                m *= &pr;
            }
        }
        ds = next;
    }
    ds.sort();
    Some(ds)
}

fn is_probable_prime(n: &BigInt) -> bool {
    let one = BigInt::one();
    let two = BigInt::from(2);
    let nm1 = n - &one;
    let mut d = nm1.clone();
    let mut s = 0;
    while d.is_even() {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        let a = BigInt::from(a);
        if &a >= n {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Degrees that a nontrivial factor over Z could have, from distinct-degree
/// factorization modulo several primes.
fn possible_degrees(f: &[BigInt]) -> BTreeSet<usize> {
    let n = f.len() - 1;
    let mut allowed: BTreeSet<usize> = (1..n).collect();
    let mut used = 0;
    for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71] {
        if used == 6 || allowed.is_empty() {
            break;
        }
        let fp: Vec<u64> = f.iter().map(|c| c.mod_floor(&BigInt::from(p)).to_u64().unwrap()).collect();
        if fp[n] == 0 {
            continue;
        }
        let Some(pattern) = ddf_mod_p(&fp, p) else { continue };
        used += 1;
        let mut sums: BTreeSet<usize> = BTreeSet::from([0]);
        for d in pattern {
            let add: Vec<usize> = sums.iter().map(|s| s + d).collect();
            sums.extend(add);
        }
        allowed.retain(|d| sums.contains(d));
    }
    allowed
}

// ---- arithmetic in F_p[x], ascending u64 coefficients ----

fn mtrim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn minv(a: u64, p: u64) -> u64 {
    mpow(a, p - 2, p)
}

fn mpow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

fn mrem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    mtrim(&mut r);
    let db = b.len() - 1;
    let inv = minv(b[db], p);
    while r.len() > db {
        let k = r.len() - 1 - db;
        let c = r.last().unwrap() * inv % p;
        for (i, bi) in b.iter().enumerate() {
            r[k + i] = (r[k + i] + p - c * bi % p) % p;
        }
        mtrim(&mut r);
    }
    r
}

fn mdiv(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    mtrim(&mut r);
    let db = b.len() - 1;
    let inv = minv(b[db], p);
    let mut quo = vec![0u64; r.len().saturating_sub(db)];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let c = r.last().unwrap() * inv % p;
        quo[k] = c;
        for (i, bi) in b.iter().enumerate() {
            r[k + i] = (r[k + i] + p - c * bi % p) % p;
        }
        mtrim(&mut r);
    }
    quo
}

fn mmul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut r = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            r[i + j] = (r[i + j] + x * y) % p;
        }
    }
    mtrim(&mut r);
    r
}

fn mgcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    mtrim(&mut x);
    mtrim(&mut y);
    while !y.is_empty() {
        let r = mrem(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

fn mpowmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut r = vec![1u64];
    let mut b = mrem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            r = mrem(&mmul(&r, &b, p), m, p);
        }
        b = mrem(&mmul(&b, &b, p), m, p);
        e >>= 1;
    }
    r
}

/// Degrees of the irreducible factors mod p, or `None` if f is not square free mod p.
fn ddf_mod_p(f: &[u64], p: u64) -> Option<Vec<usize>> {
    let deriv: Vec<u64> = f.iter().enumerate().skip(1).map(|(i, c)| c * (i as u64 % p) % p).collect();
    let mut d = deriv;
    mtrim(&mut d);
    if d.is_empty() || mgcd(f, &d, p).len() != 1 {
        return None;
    }
    let mut g = f.to_vec();
    let mut h = vec![0u64, 1];
    let mut out = Vec::new();
    let mut i = 1;
    while g.len() > 2 * i {
        h = mpowmod(&h, p, &g, p);
        let mut hx = h.clone();
        if hx.len() < 2 {
            hx.resize(2, 0);
        }
        hx[1] = (hx[1] + p - 1) % p;
        mtrim(&mut hx);
        let gg = mgcd(&g, &hx, p);
        if gg.len() > 1 {
            let deg = gg.len() - 1;
            for _ in 0..deg / i {
                out.push(i);
            }
            g = mdiv(&g, &gg, p);
            h = mrem(&h, &g, p);
        }
        i += 1;
    }
    if g.len() > 1 {
        out.push(g.len() - 1);
    }
    Some(out)
}

// ---- bivariate ----

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BivariateOutcome {
    /// No factorization into two nonconstant polynomials exists.
    Irreducible,
    /// A nontrivial split `p = f * g`, with `f` of smallest found degree.
    Factors(PolyQ, PolyQ),
}

/// True iff `p` (two variables, total degree at most 8) admits no
/// factorization into nonconstant polynomials over the rationals.
/// Nonzero constants are units and count as not irreducible.
pub fn bivariate_irreducible(p: &PolyQ) -> Result<bool> {
    if p.degree() == Some(0) {
        return Ok(false);
    }
    Ok(bivariate_factor(p)? == BivariateOutcome::Irreducible)
}

pub fn bivariate_factor(p: &PolyQ) -> Result<BivariateOutcome> {
    if p.nvars() != 2 {
        return Err(Error::Dimension { expected: 2, got: p.nvars() });
    }
    let deg = match p.degree() {
        None => return Err(Error::OutOfRange("cannot factor the zero polynomial".into())),
        Some(d) => d,
    };
    if deg > BIVARIATE_MAX_DEGREE {
        return Err(Error::UnsupportedDegree { degree: deg, max: BIVARIATE_MAX_DEGREE });
    }
    if deg <= 1 {
        return Ok(BivariateOutcome::Irreducible);
    }
    let x = PolyQ::var(2, 0);
    let y = PolyQ::var(2, 1);
    // shear so that the x^deg coefficient is a nonzero constant
    let top = |c: i64| -> Q {
        p.terms()
            .filter(|(e, _)| e[0] + e[1] == deg)
            .map(|(e, v)| v * q(c).pow(e[1] as i32))
            .sum()
    };
    let shift = (0..)
        .map(|k: i64| if k % 2 == 0 { k / 2 } else { -(k + 1) / 2 })
        .find(|&c| !top(c).is_zero())
        .unwrap();
    let sheared = p.compose(&[x.clone(), &y + &x.scale(&q(shift))])?;
    let unshear = |f: &PolyQ| f.compose(&[x.clone(), &y - &x.scale(&q(shift))]);

    let d = deg as usize;
    let mut specs: Vec<(i64, Factorization)> = Vec::new();
    let mut allowed: BTreeSet<usize> = (1..d).collect();
    let mut a = 0i64;
    let mut k = 0;
    while k < 3 * d + 6 && !allowed.is_empty() {
        let ua = specialize_y(&sheared, a);
        let fz = univariate_factor(&ua)?;
        let sums = degree_sums(&fz);
        allowed.retain(|e| sums.contains(e));
        specs.push((a, fz));
        k += 1;
        a = if a > 0 { -a } else { -a + 1 };
    }
    for e in allowed.iter().copied().filter(|&e| 2 * e <= d) {
        // monic divisors of degree e at each specialization
        let mut options: Vec<(i64, Vec<Vec<Q>>)> = specs
            .iter()
            .map(|(a, fz)| (*a, monic_divisors(fz, e)))
            .collect();
        options.sort_by_key(|o| o.1.len());
        options.truncate(e + 1);
        let total: f64 = options.iter().map(|o| o.1.len() as f64).product();
        if total > COMBINATION_BUDGET as f64 {
            return Err(Error::SearchBudget(format!("bivariate degree {e} needs {total:.0} candidates")));
        }
        let ys: Vec<Q> = options.iter().map(|o| q(o.0)).collect();
        let mut idx = vec![0usize; options.len()];
        'combos: loop {
            if options.iter().all(|o| !o.1.is_empty()) {
                let mut cand = PolyQ::zero(2);
                for i in 0..=e {
                    let vals: Vec<Q> =
                        options.iter().zip(&idx).map(|(o, &j)| o.1[j][i].clone()).collect();
                    let c = lagrange(&ys, &vals);
                    for (j, cj) in c.iter().enumerate() {
                        cand = &cand + &PolyQ::monomial(2, vec![i as u32, j as u32], cj.clone());
                    }
                }
                if cand.degree() == Some(e as u32)
                    && sheared.div_exact(&cand)?.is_some() {
                        let f = unshear(&cand)?;
                        let (_, f) = f.primitive();
                        let g = p.div_exact(&f)?.expect("sheared factor divides");
                        return Ok(BivariateOutcome::Factors(f, g));
                    }
            } else {
                break 'combos;
            }
            let mut i = 0;
            loop {
                if i == idx.len() {
                    break 'combos;
                }
                idx[i] += 1;
                if idx[i] < options[i].1.len() {
                    break;
                }
                idx[i] = 0;
                i += 1;
            }
        }
    }
    Ok(BivariateOutcome::Irreducible)
}

fn specialize_y(p: &PolyQ, a: i64) -> PolyQ {
    let mut coeffs: Vec<Q> = vec![Q::zero(); p.degree_in(0).unwrap_or(0) as usize + 1];
    for (e, c) in p.terms() {
        coeffs[e[0] as usize] += c * q(a).pow(e[1] as i32);
    }
    PolyQ::from_coeffs(&coeffs)
}

fn degree_sums(fz: &Factorization) -> BTreeSet<usize> {
    let mut sums: BTreeSet<usize> = BTreeSet::from([0]);
    for (f, m) in &fz.factors {
        let d = f.degree().unwrap() as usize;
        for _ in 0..*m {
            let add: Vec<usize> = sums.iter().map(|s| s + d).collect();
            sums.extend(add);
        }
    }
    sums
}

/// Ascending coefficient vectors (length e+1, monic) of degree-e divisors.
fn monic_divisors(fz: &Factorization, e: usize) -> Vec<Vec<Q>> {
    let mut acc: Vec<(usize, PolyQ)> = vec![(0, PolyQ::one(1))];
    for (f, m) in &fz.factors {
        let d = f.degree().unwrap() as usize;
        let mut next = Vec::new();
        for (deg, poly) in &acc {
            let mut cur = poly.clone();
            for k in 0..=*m as usize {
                if deg + k * d > e {
                    break;
                }
                next.push((deg + k * d, cur.clone()));
                cur = &cur * f;
            }
        }
        acc = next;
    }
    let mut out: Vec<Vec<Q>> = acc
        .into_iter()
        .filter(|(d, _)| *d == e)
        .map(|(_, poly)| {
            let c = poly.uni_coeffs();
            let l = c.last().unwrap().clone();
            c.iter().map(|v| v / &l).collect()
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> PolyQ {
        PolyQ::from_int_coeffs(c)
    }

    #[test]
    fn difference_of_squares() {
        let f = univariate_factor(&poly(&[-1, 0, 1])).unwrap();
        assert_eq!(f.content, q(1));
        assert_eq!(f.factors, vec![(poly(&[-1, 1]), 1), (poly(&[1, 1]), 1)]);
    }

    #[test]
    fn quadratic_times_cubic() {
        let a = poly(&[52, -14, 1]);
        let b = poly(&[-480, 159, -20, 1]);
        let f = univariate_factor(&(&a * &b).scale(&q(-3))).unwrap();
        assert_eq!(f.content, q(-3));
        assert_eq!(f.factors, vec![(a, 1), (b, 1)]);
    }

    #[test]
    fn repeated_and_zero_roots() {
        let p = &(&poly(&[0, 1]) * &poly(&[0, 1])) * &poly(&[1, 0, 1]).pow(2);
        let f = univariate_factor(&p).unwrap();
        assert_eq!(f.factors, vec![(poly(&[0, 1]), 2), (poly(&[1, 0, 1]), 2)]);
        assert_eq!(f.product(), p);
    }

    #[test]
    fn degree_bound() {
        let p = poly(&[1; 14]);
        assert!(matches!(univariate_factor(&p), Err(Error::UnsupportedDegree { .. })));
    }

    #[test]
    fn x4_plus_1_is_irreducible() {
        let f = univariate_factor(&poly(&[1, 0, 0, 0, 1])).unwrap();
        assert_eq!(f.factors.len(), 1);
    }

    #[test]
    fn bivariate_basic() {
        let x = PolyQ::var(2, 0);
        let y = PolyQ::var(2, 1);
        assert!(!bivariate_irreducible(&(&x * &y)).unwrap());
        assert!(bivariate_irreducible(&(&(&x * &x) + &(&y * &y)).add_const(&q(1))).unwrap());
        let f = &y - &x.scale(&q(2));
        let g = &(&x * &y).add_const(&q(3)) + &y.pow(2);
        match bivariate_factor(&(&f * &g)).unwrap() {
            BivariateOutcome::Factors(a, b) => assert_eq!(&a * &b, &f * &g),
            BivariateOutcome::Irreducible => panic!("missed factor"),
        }
    }

    #[test]
    fn bivariate_pure_y_factor() {
        let x = PolyQ::var(2, 0);
        let y = PolyQ::var(2, 1);
        let p = &y.add_const(&q(1)) * &(&x * &x).add_const(&q(2));
        assert!(!bivariate_irreducible(&p).unwrap());
    }
}
