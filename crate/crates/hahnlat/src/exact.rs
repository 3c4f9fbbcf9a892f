//! Exact scalars and the combinatorial primitives built on them.
//!
//! Every quantity in the crate is a [`Q`] (an arbitrary precision rational
//! kept in lowest terms by `num-rational`). Values that may hit a pole are
//! carried as [`EvalResult`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Exact rational scalar.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qz(n: &BigInt) -> Q {
    Q::from_integer(n.clone())
}

/// Rising factorial `(a)_k = a (a+1) ... (a+k-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &Q, k: u32) -> Q {
    let mut r = Q::one();
    let mut t = a.clone();
    for _ in 0..k {
        r *= &t;
        t += Q::one();
    }
    r
}

/// Integer rising factorial.
pub fn poch_int(a: i64, k: u32) -> BigInt {
    let mut r = BigInt::one();
    for i in 0..k as i64 {
        r *= a + i;
    }
    r
}

pub fn poch_i(a: i64, k: u32) -> Q {
    qz(&poch_int(a, k))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n as u64).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn factorial_q(n: u32) -> Q {
    qz(&factorial(n))
}

/// Binomial coefficient, zero when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> Q {
    qz(&binomial_int(n, k))
}

pub fn binomial_int(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// `(a)_m / (a)_n` for integer `a`, cancelling common factors exactly so the
/// result is meaningful even when both sides contain a zero factor.
pub fn poch_ratio(a: i64, m: u32, n: u32) -> Graded {
    if m >= n {
        Graded::from_poch(a + n as i64, m - n)
    } else {
        Graded::from_poch(a + m as i64, n - m).recip()
    }
}

/// A rational value together with an integer order of vanishing.
///
/// Used for products of Pochhammer symbols where individual factors may be
/// zero: order `> 0` means the product is zero, `< 0` means it has a pole.
#[derive(Clone, Debug, PartialEq)]
pub struct Graded {
    pub unit: Q,
    pub order: i32,
}

impl Graded {
    pub fn one() -> Self {
        Graded { unit: Q::one(), order: 0 }
    }

    pub fn from_q(v: Q) -> Self {
        if v.is_zero() {
            Graded { unit: Q::one(), order: 1 }
        } else {
            Graded { unit: v, order: 0 }
        }
    }

    pub fn from_poch(a: i64, k: u32) -> Self {
        let mut g = Graded::one();
        for i in 0..k as i64 {
            let f = a + i;
            if f == 0 {
                g.order += 1;
            } else {
                g.unit *= q(f);
            }
        }
        g
    }

    pub fn recip(self) -> Self {
        Graded { unit: self.unit.recip(), order: -self.order }
    }

    pub fn mul(self, o: Graded) -> Self {
        Graded { unit: self.unit * o.unit, order: self.order + o.order }
    }

    pub fn div(self, o: Graded) -> Self {
        self.mul(o.recip())
    }

    pub fn eval(&self, what: &str) -> EvalResult {
        match self.order {
            0 => EvalResult::Finite(self.unit.clone()),
            o if o > 0 => EvalResult::Finite(Q::zero()),
            o => EvalResult::Undefined(format!("{what}: pole of order {}", -o)),
        }
    }
}

/// A value that is either a finite rational or an in-band pole.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalResult {
    Finite(Q),
    Undefined(String),
}

impl EvalResult {
    pub fn finite(&self) -> Option<&Q> {
        match self {
            EvalResult::Finite(v) => Some(v),
            EvalResult::Undefined(_) => None,
        }
    }

    pub fn into_finite(self) -> Option<Q> {
        match self {
            EvalResult::Finite(v) => Some(v),
            EvalResult::Undefined(_) => None,
        }
    }

    pub fn is_undefined(&self) -> bool {
        matches!(self, EvalResult::Undefined(_))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, EvalResult::Finite(v) if v.is_zero())
    }
}

impl fmt::Display for EvalResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalResult::Finite(v) => write!(f, "{v}"),
            EvalResult::Undefined(why) => write!(f, "undefined ({why})"),
        }
    }
}

/// Sign of a rational as -1, 0 or 1.
pub fn sign(v: &Q) -> i32 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// Least common multiple of the denominators of `vals`.
pub fn common_denominator<'a>(vals: impl IntoIterator<Item = &'a Q>) -> BigInt {
    vals.into_iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&q(7), 0), q(1));
        assert_eq!(pochhammer(&q(-3), 5), q(0));
        assert_eq!(pochhammer(&q(-3), 2), q(6));
        assert_eq!(pochhammer(&qr(1, 2), 2), qr(3, 4));
        assert_eq!(poch_i(-3, 2), q(6));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(9, 2), q(36));
        assert_eq!(binomial(5, 0), q(1));
        assert_eq!(binomial(4, 7), q(0));
        assert_eq!(binomial(4, -1), q(0));
    }

    #[test]
    fn ratio_cancels_shared_zeros() {
        // (-4)_6 / (-4)_5 = (1)_1 = 1 although both contain the zero factor
        assert_eq!(poch_ratio(-4, 6, 5).eval("r"), EvalResult::Finite(q(1)));
        assert_eq!(poch_ratio(-6, 2, 3).eval("r"), EvalResult::Finite(qr(-1, 4)));
        assert!(poch_ratio(-2, 1, 4).eval("r").is_undefined());
        assert!(poch_ratio(-2, 4, 1).eval("r").is_zero());
    }

    #[test]
    fn graded_orders_add() {
        let a = Graded::from_poch(-1, 3);
        assert_eq!(a.order, 1);
        assert_eq!(a.unit, q(-1) * q(1));
        assert_eq!(a.clone().div(a).eval("x"), EvalResult::Finite(q(1)));
    }
}
