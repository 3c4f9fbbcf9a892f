//! Sparse multivariate polynomials over the rationals.
//!
//! A [`PolyQ`] stores an exponent-vector -> coefficient map with no zero
//! entries, so structural equality is polynomial equality.

mod factor;
mod uni;

pub use factor::{
    bivariate_factor, bivariate_irreducible, univariate_factor, BivariateOutcome, Factorization,
};
pub use uni::{uni_div_rem, uni_gcd};

use crate::error::{Error, Result};
use crate::exact::{common_denominator, q, Q};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyQ {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Q>,
}

/// Graded lexicographic comparison of exponent vectors.
pub fn grlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl PolyQ {
    pub fn zero(nvars: usize) -> Self {
        PolyQ { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Q::one())
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn monomial(nvars: usize, exp: Vec<u32>, c: Q) -> Self {
        assert_eq!(exp.len(), nvars, "exponent length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        PolyQ { nvars, terms }
    }

    /// The coordinate polynomial `x_{i+1}` (zero based `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, Q::one())
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Q)>) -> Result<Self> {
        let mut p = PolyQ::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::Dimension { expected: nvars, got: e.len() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Univariate polynomial from ascending coefficients.
    pub fn from_coeffs(coeffs: &[Q]) -> Self {
        let mut p = PolyQ::zero(1);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(vec![i as u32], c.clone());
        }
        p
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(&coeffs.iter().map(|&c| q(c)).collect::<Vec<_>>())
    }

    fn add_term(&mut self, e: Vec<u32>, c: Q) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Q)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &[u32]) -> Q {
        self.terms.get(exp).cloned().unwrap_or_else(Q::zero)
    }

    pub fn constant_term(&self) -> Q {
        self.coeff(&vec![0; self.nvars])
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    /// Leading term under graded lex order.
    pub fn leading(&self) -> Option<(&Vec<u32>, &Q)> {
        self.terms.iter().max_by(|a, b| grlex_cmp(a.0, b.0))
    }

    /// Terms sorted from the leading term down.
    pub fn sorted_terms(&self) -> Vec<(&Vec<u32>, &Q)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| grlex_cmp(b.0, a.0));
        v
    }

    fn check(&self, o: &PolyQ) -> Result<()> {
        if self.nvars != o.nvars {
            return Err(Error::Dimension { expected: self.nvars, got: o.nvars });
        }
        Ok(())
    }

    pub fn try_add(&self, o: &PolyQ) -> Result<PolyQ> {
        self.check(o)?;
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn try_sub(&self, o: &PolyQ) -> Result<PolyQ> {
        self.try_add(&o.neg())
    }

    pub fn try_mul(&self, o: &PolyQ) -> Result<PolyQ> {
        self.check(o)?;
        let mut acc: BTreeMap<Vec<u32>, Q> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(Q::zero) += ca * cb;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(PolyQ { nvars: self.nvars, terms: acc })
    }

    pub fn scale(&self, c: &Q) -> PolyQ {
        if c.is_zero() {
            return PolyQ::zero(self.nvars);
        }
        PolyQ {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn add_const(&self, c: &Q) -> PolyQ {
        self + &PolyQ::constant(self.nvars, c.clone())
    }

    pub fn pow(&self, k: u32) -> PolyQ {
        let mut r = PolyQ::one(self.nvars);
        for _ in 0..k {
            r = &r * self;
        }
        r
    }

    /// Rising factorial `(p)_k = p (p+1) ... (p+k-1)`.
    pub fn rising(&self, k: u32) -> PolyQ {
        let mut r = PolyQ::one(self.nvars);
        for i in 0..k {
            r = &r * &self.add_const(&q(i as i64));
        }
        r
    }

    pub fn eval(&self, point: &[Q]) -> Result<Q> {
        if point.len() != self.nvars {
            return Err(Error::Dimension { expected: self.nvars, got: point.len() });
        }
        let maxdeg: Vec<u32> =
            (0..self.nvars).map(|i| self.degree_in(i).unwrap_or(0)).collect();
        let powers: Vec<Vec<Q>> = point
            .iter()
            .zip(&maxdeg)
            .map(|(x, &m)| {
                let mut v = Vec::with_capacity(m as usize + 1);
                let mut acc = Q::one();
                v.push(acc.clone());
                for _ in 0..m {
                    acc *= x;
                    v.push(acc.clone());
                }
                v
            })
            .collect();
        let mut s = Q::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t *= &powers[i][k as usize];
                }
            }
            s += t;
        }
        Ok(s)
    }

    pub fn eval_int(&self, point: &[i64]) -> Result<Q> {
        let p: Vec<Q> = point.iter().map(|&v| q(v)).collect();
        self.eval(&p)
    }

    /// Substitute `subs[i]` for variable `i`; all substitutes share one ring.
    pub fn compose(&self, subs: &[PolyQ]) -> Result<PolyQ> {
        if subs.len() != self.nvars {
            return Err(Error::Dimension { expected: self.nvars, got: subs.len() });
        }
        let target = subs.first().map(|s| s.nvars).unwrap_or(0);
        for s in subs {
            if s.nvars != target {
                return Err(Error::Dimension { expected: target, got: s.nvars });
            }
        }
        let mut cache: Vec<Vec<PolyQ>> = subs.iter().map(|s| vec![PolyQ::one(s.nvars), s.clone()]).collect();
        let mut r = PolyQ::zero(target);
        for (e, c) in &self.terms {
            let mut t = PolyQ::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                while cache[i].len() <= k as usize {
                    let next = cache[i].last().unwrap() * &subs[i];
                    cache[i].push(next);
                }
                t = &t * &cache[i][k as usize];
            }
            r = &r + &t;
        }
        Ok(r)
    }

    /// View the polynomial in a larger ring, placing variable `i` at `map[i]`.
    pub fn embed(&self, nvars: usize, map: &[usize]) -> PolyQ {
        let mut r = PolyQ::zero(nvars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; nvars];
            for (i, &k) in e.iter().enumerate() {
                ne[map[i]] += k;
            }
            r.add_term(ne, c.clone());
        }
        r
    }

    pub fn derivative(&self, var: usize) -> PolyQ {
        let mut r = PolyQ::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[var] > 0 {
                let mut ne = e.clone();
                ne[var] -= 1;
                r.add_term(ne, c * q(e[var] as i64));
            }
        }
        r
    }

    /// Division by a single divisor with respect to graded lex order.
    /// The remainder is zero exactly when `d` divides `self`.
    pub fn div_rem(&self, d: &PolyQ) -> Result<(PolyQ, PolyQ)> {
        self.check(d)?;
        let (ld, lc) = match d.leading() {
            Some((e, c)) => (e.clone(), c.clone()),
            None => return Err(Error::Domain("division by zero polynomial".into())),
        };
        let mut rem = self.clone();
        let mut quo = PolyQ::zero(self.nvars);
        let mut out = PolyQ::zero(self.nvars);
        while let Some((e, c)) = rem.leading().map(|(e, c)| (e.clone(), c.clone())) {
            if e.iter().zip(&ld).all(|(a, b)| a >= b) {
                let qe: Vec<u32> = e.iter().zip(&ld).map(|(a, b)| a - b).collect();
                let t = PolyQ::monomial(self.nvars, qe, c / &lc);
                rem = &rem - &(&t * d);
                quo = &quo + &t;
            } else {
                rem.terms.remove(&e);
                out.add_term(e, c);
            }
        }
        Ok((quo, out))
    }

    /// Exact quotient if `d` divides `self`.
    pub fn div_exact(&self, d: &PolyQ) -> Result<Option<PolyQ>> {
        let (quo, rem) = self.div_rem(d)?;
        Ok(if rem.is_zero() { Some(quo) } else { None })
    }

    /// Split into rational content and primitive integer part with positive
    /// leading coefficient.
    pub fn primitive(&self) -> (Q, PolyQ) {
        if self.is_zero() {
            return (Q::zero(), self.clone());
        }
        let den = common_denominator(self.terms.values());
        let ints: Vec<BigInt> =
            self.terms.values().map(|c| (c * Q::from_integer(den.clone())).to_integer()).collect();
        let mut g = ints.iter().fold(BigInt::zero(), |a, b| a.gcd(b));
        if self.leading().unwrap().1.is_negative() {
            g = -g;
        }
        let content = Q::new(g.clone(), den);
        let prim = PolyQ {
            nvars: self.nvars,
            terms: self
                .terms
                .keys()
                .cloned()
                .zip(ints)
                .map(|(e, v)| (e, Q::from_integer(v / &g)))
                .collect(),
        };
        (content, prim)
    }

    /// Ascending coefficient list of a univariate polynomial.
    pub fn uni_coeffs(&self) -> Vec<Q> {
        assert_eq!(self.nvars, 1, "univariate polynomial expected");
        let n = self.degree().map(|d| d as usize + 1).unwrap_or(0);
        (0..n).map(|i| self.coeff(&[i as u32])).collect()
    }

    fn var_name(&self, i: usize) -> String {
        if self.nvars == 1 {
            "x".to_string()
        } else {
            format!("x{}", i + 1)
        }
    }
}

impl Add for &PolyQ {
    type Output = PolyQ;
    fn add(self, o: &PolyQ) -> PolyQ {
        self.try_add(o).expect("PolyQ add: nvars mismatch")
    }
}

impl Sub for &PolyQ {
    type Output = PolyQ;
    fn sub(self, o: &PolyQ) -> PolyQ {
        self.try_sub(o).expect("PolyQ sub: nvars mismatch")
    }
}

impl Mul for &PolyQ {
    type Output = PolyQ;
    fn mul(self, o: &PolyQ) -> PolyQ {
        self.try_mul(o).expect("PolyQ mul: nvars mismatch")
    }
}

impl Neg for &PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        self.scale(&q(-1))
    }
}

macro_rules! owned_op {
    ($tr:ident, $m:ident) => {
        impl $tr for PolyQ {
            type Output = PolyQ;
            fn $m(self, o: PolyQ) -> PolyQ {
                (&self).$m(&o)
            }
        }
    };
}
owned_op!(Add, add);
owned_op!(Sub, sub);
owned_op!(Mul, mul);

impl Neg for PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        (&self).neg()
    }
}

/// The four ring operations exposed as data, for command surfaces.
#[derive(Clone, Debug)]
pub enum ArithOp {
    Add(PolyQ),
    Sub(PolyQ),
    Mul(PolyQ),
    Scale(Q),
}

pub fn poly_arith(p: &PolyQ, op: &ArithOp) -> Result<PolyQ> {
    match op {
        ArithOp::Add(o) => p.try_add(o),
        ArithOp::Sub(o) => p.try_sub(o),
        ArithOp::Mul(o) => p.try_mul(o),
        ArithOp::Scale(c) => Ok(p.scale(c)),
    }
}

impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        self.var_name(i)
                    } else {
                        format!("{}^{}", self.var_name(i), k)
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else if a.is_integer() {
                write!(f, "{}*{}", a, mono.join("*"))?;
            } else {
                write!(f, "({})*{}", a, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<u32>,
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    nvars: usize,
    terms: Vec<TermJson>,
}

impl Serialize for PolyQ {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            nvars: self.nvars,
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(e, c)| TermJson {
                    exp: e.clone(),
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PolyQ {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PolyJson::deserialize(d)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            let num: BigInt = t.num.parse().map_err(|_| D::Error::custom("bad numerator"))?;
            let den: BigInt = t.den.parse().map_err(|_| D::Error::custom("bad denominator"))?;
            if den.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            terms.push((t.exp, Q::new(num, den)));
        }
        PolyQ::from_terms(raw.nvars, terms).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::qr;

    fn x() -> PolyQ {
        PolyQ::var(1, 0)
    }

    #[test]
    fn product_example() {
        let a = x().add_const(&q(-4));
        let b = PolyQ::from_int_coeffs(&[33, -13, 2]);
        assert_eq!(&a * &b, PolyQ::from_int_coeffs(&[-132, 85, -21, 2]));
    }

    #[test]
    fn zero_identities() {
        let p = PolyQ::from_int_coeffs(&[1, 2, 3]);
        assert_eq!(&p + &PolyQ::zero(1), p);
        let z = p.scale(&q(0));
        assert!(z.is_zero());
        assert_eq!(z.num_terms(), 0);
    }

    #[test]
    fn eval_examples() {
        let p = PolyQ::from_int_coeffs(&[-132, 85, -21, 2]).scale(&qr(-1, 132));
        assert_eq!(p.eval_int(&[0]).unwrap(), q(1));
        assert_eq!(PolyQ::one(3).eval_int(&[4, 5, 6]).unwrap(), q(1));
        let l = &PolyQ::var(2, 0) + &PolyQ::var(2, 1).scale(&q(2));
        assert_eq!(l.eval_int(&[3, 2]).unwrap(), q(7));
        assert!(l.eval_int(&[3]).is_err());
    }

    #[test]
    fn mismatch_is_dimension_error() {
        let r = PolyQ::one(1).try_add(&PolyQ::one(2));
        assert_eq!(r, Err(Error::Dimension { expected: 1, got: 2 }));
    }

    #[test]
    fn division_and_compose() {
        let xv = PolyQ::var(2, 0);
        let yv = PolyQ::var(2, 1);
        let f = &yv - &xv.scale(&q(2));
        let g = &(&xv * &xv) + &yv.add_const(&q(3));
        let p = &f * &g;
        assert_eq!(p.div_exact(&f).unwrap(), Some(g.clone()));
        assert_eq!(p.add_const(&q(1)).div_exact(&f).unwrap(), None);
        let swapped = p.compose(&[yv.clone(), xv.clone()]).unwrap();
        assert_eq!(swapped.compose(&[yv, xv]).unwrap(), p);
    }

    #[test]
    fn json_roundtrip_sorted() {
        let p = PolyQ::from_int_coeffs(&[33, -13, 2]).scale(&qr(1, 7));
        let s = serde_json::to_string(&p).unwrap();
        assert!(s.starts_with(r#"{"nvars":1,"terms":[{"exp":[2],"num":"2","den":"7"}"#));
        let back: PolyQ = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn primitive_normalizes_sign() {
        let p = PolyQ::from_coeffs(&[qr(1, 2), qr(-3, 4)]);
        let (c, prim) = p.primitive();
        assert_eq!(prim, PolyQ::from_int_coeffs(&[-2, 3]));
        assert_eq!(prim.scale(&c), p);
    }
}
