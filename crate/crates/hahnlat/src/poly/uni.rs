//! Dense univariate helpers over the rationals (ascending coefficient vectors).

use crate::exact::Q;
use num_traits::Zero;

pub(crate) fn trim(v: &mut Vec<Q>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Quotient and remainder; panics on a zero divisor.
pub fn uni_div_rem(a: &[Q], b: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let mut b = b.to_vec();
    trim(&mut b);
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return (vec![], r);
    }
    let db = b.len() - 1;
    let lb = b[db].clone();
    let mut quo = vec![Q::zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let c = r.last().unwrap() / &lb;
        for (i, bi) in b.iter().enumerate() {
            r[k + i] -= &c * bi;
        }
        quo[k] = c;
        r.pop();
        trim(&mut r);
    }
    trim(&mut quo);
    (quo, r)
}

/// Monic greatest common divisor.
pub fn uni_gcd(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = uni_div_rem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(l) = x.last().cloned() {
        for c in x.iter_mut() {
            *c /= &l;
        }
    }
    x
}

pub(crate) fn uni_derivative(a: &[Q]) -> Vec<Q> {
    a.iter().enumerate().skip(1).map(|(i, c)| c * Q::from_integer((i as i64).into())).collect()
}

/// Yun's square-free decomposition: returns `a_1, a_2, ...` with
/// `f = c * a_1 * a_2^2 * ...`, each `a_i` monic and square free.
pub(crate) fn squarefree_decomposition(f: &[Q]) -> Vec<Vec<Q>> {
    let mut out = Vec::new();
    let fp = uni_derivative(f);
    let a0 = uni_gcd(f, &fp);
    let mut b = uni_div_rem(f, &a0).0;
    let mut c = uni_div_rem(&fp, &a0).0;
    let mut d = sub(&c, &uni_derivative(&b));
    loop {
        let a = uni_gcd(&b, &d);
        out.push(a.clone());
        b = uni_div_rem(&b, &a).0;
        if b.len() <= 1 {
            break;
        }
        c = uni_div_rem(&d, &a).0;
        d = sub(&c, &uni_derivative(&b));
    }
    out
}

fn sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    let n = a.len().max(b.len());
    let mut r: Vec<Q> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Q::zero);
            let y = b.get(i).cloned().unwrap_or_else(Q::zero);
            x - y
        })
        .collect();
    trim(&mut r);
    r
}

#[cfg(test)]
pub(crate) fn uni_mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut r = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    trim(&mut r);
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    fn v(c: &[i64]) -> Vec<Q> {
        c.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn div_rem_roundtrip() {
        let a = v(&[5, 0, 3, 1]);
        let b = v(&[1, 1]);
        let (qq, r) = uni_div_rem(&a, &b);
        let mut back = uni_mul(&qq, &b);
        back.resize(4, Q::zero());
        for (i, ri) in r.iter().enumerate() {
            back[i] += ri;
        }
        assert_eq!(back, a);
    }

    #[test]
    fn yun_finds_square() {
        // (x-1)^2 (x+2)
        let f = uni_mul(&uni_mul(&v(&[-1, 1]), &v(&[-1, 1])), &v(&[2, 1]));
        let parts = squarefree_decomposition(&f);
        assert_eq!(parts[0], v(&[2, 1]));
        assert_eq!(parts[1], v(&[-1, 1]));
    }
}
