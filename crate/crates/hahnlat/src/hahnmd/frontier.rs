//! The `d = 2` frontier: indices `(ν1, h(ν1))` just above `H`, where `sQ_ν`
//! is either undefined or factors as `sQ_{ν1}(x1; ℓ̂, N̂) · sR_{ν2}(x)`.

use super::{sq_nu, LatticeParams, MultiIndex};
use crate::error::{Error, Result};
use crate::exact::{poch_i, q, qr, Q};
use crate::hahn1d::{hahn_series, Lower};
use crate::poly::{univariate_factor, PolyQ};
use num_traits::{One, Zero};

fn need_d2(p: &LatticeParams) -> Result<()> {
    if p.d() != 2 {
        return Err(Error::NotApplicable(format!("frontier analysis needs d=2, got {p}")));
    }
    Ok(())
}

/// `sQ_{ν1}(x1; (ℓ1, ℓ2+ℓ3-2ν2), N-ν2)` as a raw series in `x1`; `Err` on a pole.
pub fn first_factor(nu1: i64, nu2: i64, p: &LatticeParams) -> std::result::Result<PolyQ, String> {
    let (l1, l2, l3) = (p.ell_at(1), p.ell_at(2), p.ell_at(3));
    hahn_series(nu1 as u32, l1, l2 + l3 - 2 * nu2, &PolyQ::var(1, 0), &Lower::Raw(p.big_n() - nu2))
}

/// `sR_{ν2}(x; ℓ2, ℓ3, N) = (-N+x1)_{ν2} sQ_{ν2}(x2; ℓ2, ℓ3, N-x1)` in cleared form.
pub fn sr(nu2: i64, ell2: i64, ell3: i64, big_n: i64) -> Result<PolyQ> {
    if nu2 < 0 || nu2 > ell2.min(ell3) + 1 {
        return Err(Error::OutOfRange(format!("nu2={nu2} outside [0, l2∧l3+1]")));
    }
    let x1 = PolyQ::var(2, 0);
    let m = PolyQ::constant(2, q(big_n)) - x1;
    hahn_series(nu2 as u32, ell2, ell3, &PolyQ::var(2, 1), &Lower::Cleared(m))
        .map_err(|e| Error::Undefined(format!("sR_{nu2}(l2={ell2}, l3={ell3}, N={big_n}): {e}")))
}

fn x1() -> PolyQ {
    PolyQ::var(2, 0)
}
fn x2() -> PolyQ {
    PolyQ::var(2, 1)
}

/// `((-N+x1+x2)_{ℓ2+1} - (-1)^{ℓ2+1} (-x2)_{ℓ2+1}) / (-N+ℓ2+x1)`, the closed
/// form of `sR_{ℓ2}` when `ℓ2 = ℓ3`.
pub fn sr_closed_equal(ell2: i64, big_n: i64) -> Result<PolyQ> {
    let k = (ell2 + 1) as u32;
    let a = (x1() + x2()).add_const(&q(-big_n)).rising(k);
    let b = (-x2()).rising(k).scale(&crate::hahn1d::sign_pow(k));
    let d = x1().add_const(&q(ell2 - big_n));
    (a - b)
        .div_exact(&d)?
        .ok_or_else(|| Error::Invariant("closed form numerator not divisible".into()))
}

/// Closed form of `sR_{ℓ2}` when `ℓ3 = ℓ2 + 1`, from
/// `sR·D(D+1) = (-N+x1+x2)_{ℓ2+2} - (-1)^{ℓ2+1}(ℓ2+2)(-x2)_{ℓ2+1}(D+1) - (-1)^{ℓ2+2}(-x2)_{ℓ2+2}`
/// with `D = -N+ℓ2+x1`.
pub fn sr_closed_successor(ell2: i64, big_n: i64) -> Result<PolyQ> {
    let k = (ell2 + 1) as u32;
    let d = x1().add_const(&q(ell2 - big_n));
    let d1 = d.add_const(&Q::one());
    let a = (x1() + x2()).add_const(&q(-big_n)).rising(k + 1);
    let b = ((-x2()).rising(k) * d1.clone()).scale(&(crate::hahn1d::sign_pow(k) * q(ell2 + 2)));
    let c = (-x2()).rising(k + 1).scale(&crate::hahn1d::sign_pow(k + 1));
    (a - b - c)
        .div_exact(&(d * d1))?
        .ok_or_else(|| Error::Invariant("closed form numerator not divisible".into()))
}

/// Which explicit split formula produced a factorization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitFormula {
    /// `j = 2i - 1`: a product of consecutive linear factors.
    A,
    /// `j = 2i`: the same product times `(1 - a_i x1)`.
    B,
    /// `|ℓ| ≤ 2N` tail: linear factors ending at `ℓ1`.
    C,
    /// Found by factoring the first factor directly.
    Direct,
}

/// Classification of the frontier index `(ν1, h(ν1))`.
#[derive(Clone, Debug, PartialEq)]
pub enum FrontierClass {
    Undefined(String),
    Splits { formula: SplitFormula, constant: Q, roots: Vec<Q>, first_factor: PolyQ },
    General { first_factor: PolyQ },
}

impl FrontierClass {
    pub fn is_undefined(&self) -> bool {
        matches!(self, FrontierClass::Undefined(_))
    }
}

/// Which value of `a_i` to use in the `j = 2i` formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AiVariant {
    /// `(ℓ1+ℓ2-ℓ3-2i) / ((N-ℓ3-i) ℓ1)`, which matches direct evaluation.
    Corrected,
    /// `(ℓ1+ℓ2-ℓ3-2i) / ((N-ℓ3-i)(N-ℓ2+i-1))` as printed.
    Printed,
}

fn lin_product(lo: i64, hi: i64) -> PolyQ {
    let x = PolyQ::var(1, 0);
    let mut r = PolyQ::one(1);
    for k in lo..=hi {
        r = r * x.add_const(&q(-k));
    }
    r
}

/// The explicit split form of the first factor, when one of the formulas
/// applies to `ν1` (with `ℓ2, ℓ3` sorted ascending). Returns `None` outside
/// their range, for `ν1 = 0`, or when a constant would divide by zero.
pub fn split_formula(nu1: i64, p: &LatticeParams, variant: AiVariant) -> Option<(SplitFormula, PolyQ)> {
    if p.d() != 2 || nu1 < 1 {
        return None;
    }
    let l1 = p.ell_at(1);
    let (l2, l3) = {
        let (a, b) = (p.ell_at(2), p.ell_at(3));
        (a.min(b), a.max(b))
    };
    let nn = p.big_n();
    let l = p.ell_total();
    let nu = nu1 as u32;
    let j = nu1 - (l3 - l2);
    if j >= -1 && nu1 <= l1 - (2 * nn - l).abs() {
        let odd = j.rem_euclid(2) == 1;
        let i = if odd { (j + 1) / 2 } else { j / 2 };
        let den = poch_i(-nn + l2 - i + 1, nu);
        if den.is_zero() {
            return None;
        }
        let prod = lin_product(nn - l3 - i + 1, nn - l2 + i - 1);
        if odd {
            return Some((SplitFormula::A, prod.scale(&den.recip())));
        }
        let a_den = match variant {
            AiVariant::Corrected => (nn - l3 - i) * l1,
            AiVariant::Printed => (nn - l3 - i) * (nn - l2 + i - 1),
        };
        if a_den == 0 {
            return None;
        }
        let a_i = qr(l1 + l2 - l3 - 2 * i, a_den);
        let lin = PolyQ::from_coeffs(&[Q::one(), -a_i]);
        let c = q(-nn + l3 + i) / den;
        return Some((SplitFormula::B, (prod * lin).scale(&c)));
    }
    if l <= 2 * nn {
        let jj = nu1 - (l1 + l - 2 * nn);
        if (1..=2 * nn - l).contains(&jj) {
            let den = poch_i(-l1, nu);
            if den.is_zero() {
                return None;
            }
            return Some((SplitFormula::C, lin_product(2 * nn - l - jj + 1, l1).scale(&den.recip())));
        }
    }
    None
}

/// Direct definedness of `sQ_(ν1, h(ν1))` from the two raw factors.
pub fn frontier_undefined(nu1: i64, p: &LatticeParams) -> Result<Option<String>> {
    need_d2(p)?;
    let nu2 = p.height(nu1)?;
    if let Err(e) = first_factor(nu1, nu2, p) {
        return Ok(Some(format!("first factor: {e}")));
    }
    match sr(nu2, p.ell_at(2), p.ell_at(3), p.big_n()) {
        Err(Error::Undefined(e)) => Ok(Some(e)),
        Err(e) => Err(e),
        Ok(_) => Ok(None),
    }
}

/// Classifies `sQ_(ν1, h(ν1))`. Whenever an explicit formula applies it is
/// compared with the directly computed first factor, and a mismatch is an
/// [`Error::Invariant`].
pub fn d2_frontier_classify(nu1: i64, p: &LatticeParams) -> Result<FrontierClass> {
    if let Some(why) = frontier_undefined(nu1, p)? {
        return Ok(FrontierClass::Undefined(why));
    }
    let nu2 = p.height(nu1)?;
    let ff = first_factor(nu1, nu2, p).map_err(Error::Undefined)?;
    if let Some((formula, poly)) = split_formula(nu1, p, AiVariant::Corrected) {
        if poly != ff {
            return Err(Error::Invariant(format!(
                "split formula {formula:?} disagrees with first factor at nu1={nu1}, {p}"
            )));
        }
        let (constant, roots) = roots_of(&ff)?.expect("explicit split formula is a product of linear factors");
        return Ok(FrontierClass::Splits { formula, constant, roots, first_factor: ff });
    }
    match roots_of(&ff)? {
        Some((constant, roots)) => {
            Ok(FrontierClass::Splits { formula: SplitFormula::Direct, constant, roots, first_factor: ff })
        }
        None => Ok(FrontierClass::General { first_factor: ff }),
    }
}

/// `Some((c, roots))` when `p = c Π (x - r)` over the rationals.
fn roots_of(p: &PolyQ) -> Result<Option<(Q, Vec<Q>)>> {
    if p.is_constant() {
        return Ok(Some((p.constant_term(), Vec::new())));
    }
    let f = univariate_factor(p)?;
    if !f.splits() {
        return Ok(None);
    }
    let mut lead = f.content.clone();
    for (g, m) in &f.factors {
        let c = g.uni_coeffs();
        for _ in 0..*m {
            lead *= &c[1];
        }
    }
    Ok(Some((lead, f.linear_roots())))
}

/// The undefinedness condition as printed: `(ℓ3 ≥ ℓ2 and ν1 ≤ ℓ3-ℓ2)` or
/// `(|ℓ| > 2N and ν1 ≥ 2N+1-ℓ2-ℓ3)`.
pub fn undefined_condition_printed(nu1: i64, p: &LatticeParams) -> bool {
    let (l2, l3, nn) = (p.ell_at(2), p.ell_at(3), p.big_n());
    (l3 >= l2 && nu1 <= l3 - l2) || (p.ell_total() > 2 * nn && nu1 >= 2 * nn + 1 - l2 - l3)
}

/// The condition that matches direct evaluation: strict `ℓ3 > ℓ2` in the
/// first case and `ν1 ≥ max(1, 2N-ℓ2-ℓ3)` in the second.
pub fn undefined_condition_corrected(nu1: i64, p: &LatticeParams) -> bool {
    let (l2, l3, nn) = (p.ell_at(2), p.ell_at(3), p.big_n());
    (l3 > l2 && nu1 <= l3 - l2) || (p.ell_total() > 2 * nn && nu1 >= (2 * nn - l2 - l3).max(1))
}

fn int_poly(terms: &[(u32, u32, i64)]) -> PolyQ {
    PolyQ::from_terms(2, terms.iter().map(|&(a, b, c)| (vec![a, b], q(c)))).expect("two variables")
}

/// Quartic factor of `sQ_(0,5)` for `ℓ = (6,4,4)`, `N = 7`.
pub fn example_quartic() -> PolyQ {
    int_poly(&[
        (0, 0, 840),
        (1, 0, -638),
        (0, 1, -910),
        (2, 0, 179),
        (1, 1, 480),
        (0, 2, 375),
        (3, 0, -22),
        (2, 1, -85),
        (1, 2, -120),
        (0, 3, -70),
        (4, 0, 1),
        (3, 1, 5),
        (2, 2, 10),
        (1, 3, 10),
        (0, 4, 5),
    ])
}

/// Quadratic factor of `sQ_(3,3)` for `ℓ = (6,4,4)`, `N = 7`.
pub fn example_quadratic() -> PolyQ {
    int_poly(&[(0, 0, 60), (1, 0, -22), (0, 1, -35), (2, 0, 2), (1, 1, 5), (0, 2, 5)])
}

/// `(x1-3) · quartic`, as printed for `ν = (0,5)`.
pub fn example_q05_printed() -> PolyQ {
    x1().add_const(&q(-3)) * example_quartic()
}

/// `-(1/48)(x1-4)(x1-3)(x1-2)(x1+2x2-7) · quadratic`, as printed for `ν = (3,3)`.
pub fn example_q33_printed() -> PolyQ {
    let lin = |c: i64| x1().add_const(&q(-c));
    let l = (x1() + x2().scale(&q(2))).add_const(&q(-7));
    (lin(4) * lin(3) * lin(2) * l * example_quadratic()).scale(&qr(-1, 48))
}

/// `first_factor(3,3) · sR_3`, the product without the `(-N+ν2)_{ν1}` prefactor.
pub fn example_q33_unprefixed() -> Result<PolyQ> {
    let p = LatticeParams::new(vec![6, 4, 4], 7)?;
    let ff = first_factor(3, 3, &p).map_err(Error::Undefined)?;
    Ok(ff.embed(2, &[0]) * sr(3, 4, 4, 7)?)
}

/// Integer points of `[0,6]×[0,4]` where both example factors vanish.
pub fn example_common_zeros() -> Vec<MultiIndex> {
    let (a, b) = (example_quartic(), example_quadratic());
    let mut out = Vec::new();
    for u in 0..=6 {
        for v in 0..=4 {
            if a.eval_int(&[u, v]).unwrap().is_zero() && b.eval_int(&[u, v]).unwrap().is_zero() {
                out.push(MultiIndex(vec![u, v]));
            }
        }
    }
    out
}

/// `sQ_ν` for one of the two printed examples.
pub fn example_sq(nu: &[i64]) -> Result<PolyQ> {
    sq_nu(&MultiIndex(nu.to_vec()), &LatticeParams::new(vec![6, 4, 4], 7)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_example_polys() {
        assert_eq!(example_sq(&[0, 5]).unwrap(), example_q05_printed());
        assert_eq!(example_q33_unprefixed().unwrap(), example_q33_printed());
        assert_eq!(example_sq(&[3, 3]).unwrap(), example_q33_printed().scale(&q(-24)));
        assert_eq!(example_common_zeros().len(), 8);
    }

    #[test]
    fn closed_forms() {
        for l2 in 1..=5 {
            for n in l2..=2 * l2 {
                let direct = sr(l2, l2, l2, n).unwrap();
                assert_eq!(direct, sr_closed_equal(l2, n).unwrap());
                let next = sr(l2 + 1, l2, l2, n).unwrap();
                assert_eq!(next, direct.clone() * x1().add_const(&q(l2 - n)));
                if l2 % 2 == 1 {
                    let lin = (x1() + x2().scale(&q(2))).add_const(&q(-n)).scale(&q(-1));
                    assert!(direct.div_exact(&lin).unwrap().is_some());
                }
                assert_eq!(sr(l2, l2, l2 + 1, n + 1).unwrap(), sr_closed_successor(l2, n + 1).unwrap());
            }
        }
    }

    #[test]
    fn example_column_one() {
        let p = LatticeParams::new(vec![6, 4, 4], 7).unwrap();
        assert_eq!(p.height(1).unwrap(), 4);
        let r = sr(4, 4, 4, 7).unwrap();
        assert_eq!(r, sr_closed_equal(4, 7).unwrap());
        let quartic = example_quartic();
        let (_, a) = r.primitive();
        let (_, b) = quartic.primitive();
        assert!(a == b || a == -&b);
    }
}
