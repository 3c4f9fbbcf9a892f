//! The two commuting operator families diagonalized by `ŝQ_ν = sQ_ν/(-N)_{|ν|}`:
//! `L^x_k` shifting the variables and `L^ν_k` shifting the indices.
//!
//! The index-operator coefficient tables are written once over a generic
//! [`Scalar`], so the same code yields numbers and symbolic rational
//! functions for comparison with the explicit `d = 2` forms.

use crate::error::{Error, Result};
use crate::exact::{q, qr, EvalResult, Q};
use crate::hahnmd::{sq_nu_value, HahnMD, LatticeParams, MultiIndex, Normalization};
use crate::poly::PolyQ;
use num_traits::Zero;
use std::ops::{Add, Mul, Sub};
use std::sync::Arc;

/// `ŝQ_ν`, defined for `ν ∈ H`.
pub fn hat_sq(nu: &MultiIndex, p: &LatticeParams) -> Result<PolyQ> {
    Ok(HahnMD::new(nu.clone(), p.clone(), Normalization::Hat)?.poly)
}

/// `ŝQ_ν(x)` for any `ν ∈ CH` (zero on `V` outside `H`).
pub fn hat_sq_value(nu: &MultiIndex, x: &MultiIndex, p: &LatticeParams) -> Result<Q> {
    if nu.total() > p.big_n() {
        return Err(Error::OutOfRange(format!("|{nu}| > N")));
    }
    Ok(sq_nu_value(nu, x, p)? / crate::exact::poch_i(-p.big_n(), nu.total() as u32))
}

/// A rational function on a finite set of lattice points. Lookups outside the
/// domain return `None`, distinct from a stored zero.
#[derive(Clone, Debug, PartialEq)]
pub struct GridFunction {
    domain: Vec<MultiIndex>,
    values: Vec<Q>,
}

impl GridFunction {
    pub fn new(mut pairs: Vec<(MultiIndex, Q)>) -> Self {
        pairs.sort_by(|a, b| a.0.cmp(&b.0));
        pairs.dedup_by(|a, b| a.0 == b.0);
        let (domain, values) = pairs.into_iter().unzip();
        GridFunction { domain, values }
    }

    pub fn from_fn(domain: &[MultiIndex], mut f: impl FnMut(&MultiIndex) -> Result<Q>) -> Result<Self> {
        let pairs = domain.iter().map(|x| Ok((x.clone(), f(x)?))).collect::<Result<Vec<_>>>()?;
        Ok(GridFunction::new(pairs))
    }

    pub fn get(&self, x: &MultiIndex) -> Option<&Q> {
        self.domain.binary_search(x).ok().map(|i| &self.values[i])
    }

    pub fn domain(&self) -> &[MultiIndex] {
        &self.domain
    }

    pub fn iter(&self) -> impl Iterator<Item = (&MultiIndex, &Q)> {
        self.domain.iter().zip(&self.values)
    }
}

type CoeffFn = Arc<dyn Fn(&MultiIndex) -> EvalResult + Send + Sync>;

/// A shift operator `Σ c_s(x) (f(x + s) - f(x))`.
#[derive(Clone)]
pub struct Stencil {
    pub shifts: Vec<(Vec<i64>, CoeffFn)>,
}

impl Stencil {
    /// Value at `x`. A nonzero coefficient whose target lies outside the
    /// domain of `f` is a [`Error::Domain`].
    pub fn apply_at(&self, f: &GridFunction, x: &MultiIndex) -> Result<EvalResult> {
        let fx = f.get(x).ok_or_else(|| Error::Domain(format!("{x} outside the function domain")))?;
        let mut s = Q::zero();
        for (off, c) in &self.shifts {
            let c = match c(x) {
                EvalResult::Finite(c) => c,
                u => return Ok(u),
            };
            if c.is_zero() {
                continue;
            }
            let t = x.shifted(off);
            let ft = f.get(&t).ok_or_else(|| {
                Error::Domain(format!("shift {off:?} from {x} leaves the domain with coefficient {c}"))
            })?;
            s += c * (ft - fx);
        }
        Ok(EvalResult::Finite(s))
    }

    /// Applies the stencil at every point of `domain`.
    pub fn apply(&self, f: &GridFunction, domain: &[MultiIndex]) -> Result<GridFunction> {
        GridFunction::from_fn(domain, |x| match self.apply_at(f, x)? {
            EvalResult::Finite(v) => Ok(v),
            EvalResult::Undefined(s) => Err(Error::Undefined(s)),
        })
    }
}

fn unit(d: usize, i: usize, s: i64) -> Vec<i64> {
    let mut v = vec![0; d];
    v[i] = s;
    v
}

/// `L^x_k`, acting on the last `k` coordinates with `ℓ̃ = (ℓ_{d-k+1}..ℓ_{d+1})`
/// and `Ñ = N - |x̄_{d-k}|`.
pub fn lx_stencil(k: usize, p: &LatticeParams) -> Result<Stencil> {
    let d = p.d();
    if k == 0 || k > d {
        return Err(Error::OutOfRange(format!("k={k} outside 1..={d}")));
    }
    let off = d - k;
    let ell: Vec<i64> = p.ell()[off..].to_vec();
    let big_n = p.big_n();
    let ctx = move |x: &MultiIndex| -> (Vec<i64>, i64, i64) {
        let xt = x.0[off..].to_vec();
        let nt = big_n - x.head(off);
        let t: i64 = xt.iter().sum();
        (xt, nt, t)
    };
    let ctx = Arc::new(ctx);
    let mut shifts: Vec<(Vec<i64>, CoeffFn)> = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            let mut o = unit(d, off + i, 1);
            o[off + j] = -1;
            let (c, l) = (ctx.clone(), ell.clone());
            shifts.push((o, Arc::new(move |x| {
                let (xt, _, _) = c(x);
                EvalResult::Finite(q(xt[j] * (xt[i] - l[i])))
            })));
        }
        let (c, l) = (ctx.clone(), ell.clone());
        shifts.push((unit(d, off + i, 1), Arc::new(move |x| {
            let (xt, nt, t) = c(x);
            EvalResult::Finite(q((xt[i] - l[i]) * (nt - t)))
        })));
        let (c, l) = (ctx.clone(), ell.clone());
        shifts.push((unit(d, off + i, -1), Arc::new(move |x| {
            let (xt, nt, t) = c(x);
            EvalResult::Finite(q(xt[i] * (nt - t - l[k])))
        })));
    }
    Ok(Stencil { shifts })
}

/// Applies `L^x_k` over `V`; `f` must be defined wherever a nonzero
/// coefficient reaches.
pub fn apply_lx(k: usize, f: &GridFunction, p: &LatticeParams) -> Result<GridFunction> {
    lx_stencil(k, p)?.apply(f, &p.enum_v())
}

/// `-|ν^{d-k+1}| (|ν^{d-k+1}| - |ℓ^{d-k+1}| - 1)`.
pub fn lx_eigenvalue(k: usize, nu: &MultiIndex, p: &LatticeParams) -> Q {
    let j = p.d() - k + 1;
    let v = nu.tail(j);
    q(-v * (v - p.ell_tail(j) - 1))
}

/// Ring operations needed to evaluate the coefficient tables.
pub trait Scalar: Clone + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> {
    /// The integer `c` in the ring of `self`.
    fn konst(&self, c: i64) -> Self;
    fn half(&self) -> Self;
    fn is_zero_value(&self) -> bool;
}

impl Scalar for Q {
    fn konst(&self, c: i64) -> Self {
        q(c)
    }
    fn half(&self) -> Self {
        self * qr(1, 2)
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}

impl Scalar for PolyQ {
    fn konst(&self, c: i64) -> Self {
        PolyQ::constant(self.nvars(), q(c))
    }
    fn half(&self) -> Self {
        self.scale(&qr(1, 2))
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}

/// Inputs of the index-operator tables: `ν ∈ T^d`, `ℓ ∈ T^{d+1}`, `N`.
#[derive(Clone, Debug)]
pub struct TableArgs<T> {
    pub nu: Vec<T>,
    pub ell: Vec<T>,
    pub big_n: T,
}

impl<T: Scalar> TableArgs<T> {
    fn d(&self) -> usize {
        self.nu.len()
    }
    fn zero(&self) -> T {
        self.big_n.konst(0)
    }
    /// `|ν^i|`, 1-based.
    fn nu_tail(&self, i: usize) -> T {
        self.nu.iter().skip(i.saturating_sub(1)).fold(self.zero(), |a, b| a + b.clone())
    }
    /// `|ℓ^i|`, 1-based.
    fn ell_tail(&self, i: usize) -> T {
        self.ell.iter().skip(i.saturating_sub(1)).fold(self.zero(), |a, b| a + b.clone())
    }
}

impl TableArgs<Q> {
    pub fn numeric(nu: &MultiIndex, p: &LatticeParams) -> Self {
        TableArgs {
            nu: nu.0.iter().map(|&v| q(v)).collect(),
            ell: p.ell().iter().map(|&v| q(v)).collect(),
            big_n: q(p.big_n()),
        }
    }

    /// The reduced problem for `L^ν_k`: `ν̄_k`, `(ℓ_1..ℓ_k, |ℓ^{k+1}| - 2|ν^{k+1}|)`,
    /// `N - |ν^{k+1}|`.
    pub fn reduced(k: usize, nu: &MultiIndex, p: &LatticeParams) -> Self {
        let tail = nu.tail(k + 1);
        let mut ell: Vec<Q> = p.ell()[..k].iter().map(|&v| q(v)).collect();
        ell.push(q(p.ell_tail(k + 1) - 2 * tail));
        TableArgs { nu: nu.0[..k].iter().map(|&v| q(v)).collect(), ell, big_n: q(p.big_n() - tail) }
    }
}

/// `B_i^{j,k}`; row `i = 0` only has `j = 0`.
pub fn b_entry<T: Scalar>(i: usize, j: i8, k: i8, a: &TableArgs<T>) -> Result<T> {
    let c = |v: i64| a.big_n.konst(v);
    if i == 0 {
        if j != 0 {
            return Err(Error::Table(format!("B_0^({j},{k})")));
        }
        let nu = a.nu_tail(1);
        let l = a.ell_tail(1);
        let n = a.big_n.clone();
        return match k {
            0 => Ok((l - n.clone() - n).half()),
            1 => Ok(n - nu),
            -1 => Ok(nu - l + n - c(1)),
            _ => Err(Error::Table(format!("B_0^({j},{k})"))),
        };
    }
    if i > a.d() {
        return Err(Error::Table(format!("B_{i} with d={}", a.d())));
    }
    let ni = a.nu[i - 1].clone();
    let li = a.ell[i - 1].clone();
    let vi = a.nu_tail(i);
    let vi1 = a.nu_tail(i + 1);
    let big_li = a.ell_tail(i);
    let big_li1 = a.ell_tail(i + 1);
    let two_vi1 = vi1.clone() + vi1.clone();
    // ν_i + 2|ν^{i+1}| - |ℓ^i| - 1 and its |ℓ^{i+1}| sibling
    let u = ni.clone() + two_vi1.clone() - big_li.clone() - c(1);
    let w = ni.clone() + two_vi1 - big_li1.clone() - c(1);
    Ok(match (j, k) {
        (0, 0) => {
            vi.clone() * (vi - big_li.clone() - c(1))
                + vi1.clone() * (vi1 - big_li1.clone() - c(1))
                + (big_li1 * (big_li + c(2))).half()
        }
        (0, 1) => c(0) - ni.clone() * u,
        (0, -1) => (li - ni) * w,
        (1, 0) => (li - ni) * u,
        (-1, 0) => c(0) - ni * w,
        (1, 1) => u.clone() * (u + c(1)),
        (-1, 1) => ni.clone() * (ni - c(1)),
        (1, -1) => (li.clone() - ni.clone()) * (li - ni - c(1)),
        (-1, -1) => w.clone() * (w - c(1)),
        _ => return Err(Error::Table(format!("B_{i}^({j},{k})"))),
    })
}

/// `b_k^{j}` with `s = 2|ν^k| - |ℓ^k|`.
pub fn small_b_entry<T: Scalar>(k: usize, j: i8, a: &TableArgs<T>) -> Result<T> {
    if k == 0 || k > a.d() {
        return Err(Error::Table(format!("b_{k}")));
    }
    let c = |v: i64| a.big_n.konst(v);
    let vt = a.nu_tail(k);
    let s = vt.clone() + vt - a.ell_tail(k);
    Ok(match j {
        0 => (s.clone() * (s - c(2))).half(),
        1 => s.clone() * (s - c(1)),
        -1 => (s.clone() - c(2)) * (s - c(1)),
        _ => return Err(Error::Table(format!("b_{k}^{j}"))),
    })
}

/// Numerator `Π_{k=0}^{d} B_k^{m_k, m_{k+1}}` and denominator `Π_{k=1}^{d} b_k^{m_k}`
/// of `C_μ`, with `m = (0, μ, 0)`.
pub fn c_parts<T: Scalar>(mu: &[i8], a: &TableArgs<T>) -> Result<(T, T)> {
    let d = a.d();
    if mu.len() != d {
        return Err(Error::Dimension { expected: d, got: mu.len() });
    }
    let m = |i: usize| if i == 0 || i > d { 0 } else { mu[i - 1] };
    let mut num = a.big_n.konst(1);
    for k in 0..=d {
        num = num * b_entry(k, m(k), m(k + 1), a)?;
    }
    let mut den = a.big_n.konst(1);
    for k in 1..=d {
        den = den * small_b_entry(k, m(k), a)?;
    }
    Ok((num, den))
}

/// `C_μ(ν)`. A vanishing denominator gives `Undefined` even when the
/// numerator vanishes too; otherwise a zero numerator gives `0`.
pub fn coeff_c_args(mu: &[i8], a: &TableArgs<Q>) -> Result<EvalResult> {
    let (num, den) = c_parts(mu, a)?;
    if den.is_zero() {
        return Ok(EvalResult::Undefined(format!("C_{mu:?}: b-denominator vanishes")));
    }
    Ok(EvalResult::Finite(num / den))
}

pub fn coeff_b(i: usize, j: i8, k: i8, nu: &MultiIndex, p: &LatticeParams) -> Result<Q> {
    b_entry(i, j, k, &TableArgs::numeric(nu, p))
}

pub fn coeff_c(mu: &[i8], nu: &MultiIndex, p: &LatticeParams) -> Result<EvalResult> {
    if mu.iter().all(|&m| m == 0) {
        return Err(Error::Table("C_0 is not a shift coefficient".into()));
    }
    coeff_c_args(mu, &TableArgs::numeric(nu, p))
}

/// All nonzero `μ ∈ {-1,0,1}^k`.
pub fn shift_patterns(k: usize) -> Vec<Vec<i8>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|v| {
                [-1i8, 0, 1].into_iter().map(move |s| {
                    let mut w = v.clone();
                    w.push(s);
                    w
                })
            })
            .collect();
    }
    out.retain(|v| v.iter().any(|&s| s != 0));
    out
}

/// Index shift of `μ`: `ν_i ↦ ν_i + m_i - m_{i+1}` on the first `k` entries.
pub fn mu_offset(mu: &[i8], d: usize) -> Vec<i64> {
    let k = mu.len();
    let m = |i: usize| if i == 0 || i > k { 0 } else { mu[i - 1] as i64 };
    (1..=d).map(|i| if i <= k { m(i) - m(i + 1) } else { 0 }).collect()
}

/// Result of one application of `L^ν_k` at an index.
#[derive(Clone, Debug, PartialEq)]
pub struct LnuOutcome {
    pub value: EvalResult,
    /// Terms with zero coefficient whose target has a negative entry.
    pub dropped: usize,
}

/// Coefficients of `L^ν_k` at one index. They do not depend on the function
/// the operator is applied to.
#[derive(Clone, Debug, PartialEq)]
pub enum LnuRow {
    /// Nonzero coefficients with their targets, plus the number of dropped
    /// zero-coefficient terms pointing at negative indices.
    Terms { terms: Vec<(MultiIndex, Q)>, dropped: usize },
    Undefined(String),
}

pub fn lnu_row(k: usize, nu: &MultiIndex, p: &LatticeParams) -> Result<LnuRow> {
    let d = p.d();
    if k == 0 || k > d {
        return Err(Error::OutOfRange(format!("k={k} outside 1..={d}")));
    }
    let args = TableArgs::reduced(k, nu, p);
    let mut terms = Vec::new();
    let mut dropped = 0;
    for mu in shift_patterns(k) {
        let c = match coeff_c_args(&mu, &args)? {
            EvalResult::Finite(c) => c,
            EvalResult::Undefined(why) => {
                return Ok(LnuRow::Undefined(format!("L^nu_{k} at {nu}, {p}: {why}")));
            }
        };
        let t = nu.shifted(&mu_offset(&mu, d));
        if c.is_zero() {
            if !t.is_nonnegative() {
                dropped += 1;
            }
            continue;
        }
        if !t.is_nonnegative() {
            return Err(Error::Invariant(format!(
                "L^nu_{k} at {nu}, {p}: shift {mu:?} to {t} has nonzero coefficient {c}"
            )));
        }
        terms.push((t, c));
    }
    Ok(LnuRow::Terms { terms, dropped })
}

/// Applies precomputed coefficients to `g` at `nu`.
pub fn apply_lnu_row(row: &LnuRow, g: &GridFunction, nu: &MultiIndex) -> Result<LnuOutcome> {
    let gv = g.get(nu).ok_or_else(|| Error::Domain(format!("{nu} outside the function domain")))?;
    match row {
        LnuRow::Undefined(why) => Ok(LnuOutcome { value: EvalResult::Undefined(why.clone()), dropped: 0 }),
        LnuRow::Terms { terms, dropped } => {
            let mut s = Q::zero();
            for (t, c) in terms {
                let gt = g
                    .get(t)
                    .ok_or_else(|| Error::Domain(format!("L^nu at {nu}: shift to {t} leaves the domain")))?;
                s += c * (gt - gv);
            }
            Ok(LnuOutcome { value: EvalResult::Finite(s), dropped: *dropped })
        }
    }
}

/// `(L^ν_k g)(ν)` for `g` defined on a set of indices.
pub fn apply_lnu(k: usize, g: &GridFunction, nu: &MultiIndex, p: &LatticeParams) -> Result<LnuOutcome> {
    if g.get(nu).is_none() {
        return Err(Error::Domain(format!("{nu} outside the function domain")));
    }
    apply_lnu_row(&lnu_row(k, nu, p)?, g, nu)
}

/// Family selector for [`commutator_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    X,
    Nu,
}

/// Outcome of a commutator sweep; `skipped` counts `(ν, x)` pairs where one
/// order could not be evaluated (undefined coefficient or domain exit).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutatorReport {
    pub compared: usize,
    pub mismatches: usize,
    pub skipped: usize,
}

/// Applies the operators `k1`, `k2` in both orders to every `ŝQ_ν`.
pub fn commutator_report(family: Family, k1: usize, k2: usize, p: &LatticeParams) -> Result<CommutatorReport> {
    let mut rep = CommutatorReport { compared: 0, mismatches: 0, skipped: 0 };
    let v = p.enum_v();
    let h = p.enum_h();
    match family {
        Family::X => {
            let (a, b) = (lx_stencil(k1, p)?, lx_stencil(k2, p)?);
            for nu in &h {
                let f = GridFunction::from_fn(&v, |x| hat_sq_value(nu, x, p))?;
                let ab = a.apply(&b.apply(&f, &v)?, &v)?;
                let ba = b.apply(&a.apply(&f, &v)?, &v)?;
                for (x, val) in ab.iter() {
                    rep.compared += 1;
                    if Some(val) != ba.get(x) {
                        rep.mismatches += 1;
                    }
                }
            }
        }
        Family::Nu => {
            let ch = p.enum_ch();
            let mut rows = std::collections::BTreeMap::new();
            for k in [k1, k2] {
                for nu in &ch {
                    rows.insert((k, nu.clone()), lnu_row(k, nu, p)?);
                }
            }
            let values: Vec<GridFunction> =
                ch.iter().map(|nu| GridFunction::from_fn(&v, |x| hat_sq_value(nu, x, p))).collect::<Result<_>>()?;
            for x in &v {
                let g = GridFunction::new(
                    ch.iter().zip(&values).map(|(nu, f)| (nu.clone(), f.get(x).unwrap().clone())).collect(),
                );
                let once = |k: usize, f: &GridFunction| -> Result<GridFunction> {
                    let mut pairs = Vec::new();
                    for nu in f.domain() {
                        match apply_lnu_row(&rows[&(k, nu.clone())], f, nu) {
                            Ok(LnuOutcome { value: EvalResult::Finite(val), .. }) => pairs.push((nu.clone(), val)),
                            Ok(_) | Err(Error::Domain(_)) => {}
                            Err(e) => return Err(e),
                        }
                    }
                    Ok(GridFunction::new(pairs))
                };
                let (g1, g2) = (once(k2, &g)?, once(k1, &g)?);
                let (ab, ba) = (once(k1, &g1)?, once(k2, &g2)?);
                for nu in &h {
                    match (ab.get(nu), ba.get(nu)) {
                        (Some(a), Some(b)) => {
                            rep.compared += 1;
                            if a != b {
                                rep.mismatches += 1;
                            }
                        }
                        _ => rep.skipped += 1,
                    }
                }
            }
        }
    }
    Ok(rep)
}

/// True iff both orders agree wherever both are defined.
pub fn commutator_check(family: Family, k1: usize, k2: usize, p: &LatticeParams) -> Result<bool> {
    Ok(commutator_report(family, k1, k2, p)?.mismatches == 0)
}

/// Explicit `d = 2` index-operator coefficients, as `(numerator, denominator)`
/// polynomials in `(ν1, ν2, ℓ1, ℓ2, ℓ3, N)`.
pub mod explicit_d2 {
    use super::TableArgs;
    use crate::exact::q;
    use crate::poly::PolyQ;

    pub const NVARS: usize = 6;

    fn v(i: usize) -> PolyQ {
        PolyQ::var(NVARS, i)
    }
    fn k(c: i64) -> PolyQ {
        PolyQ::constant(NVARS, q(c))
    }

    /// Symbolic table arguments `ν = (ν1, ν2)`, `ℓ = (ℓ1, ℓ2, ℓ3)`, `N`.
    pub fn symbolic_args() -> TableArgs<PolyQ> {
        TableArgs { nu: vec![v(0), v(1)], ell: vec![v(2), v(3), v(4)], big_n: v(5) }
    }

    /// Arguments of the reduced `k = 1` problem: `ν1`, `(ℓ1, ℓ2+ℓ3-2ν2)`, `N-ν2`.
    pub fn symbolic_reduced_args() -> TableArgs<PolyQ> {
        TableArgs { nu: vec![v(0)], ell: vec![v(2), v(3) + v(4) - v(1) - v(1)], big_n: v(5) - v(1) }
    }

    struct S {
        n1: PolyQ,
        n2: PolyQ,
        l1: PolyQ,
        l2: PolyQ,
        l3: PolyQ,
        nn: PolyQ,
        n: PolyQ,
        s: PolyQ,
        l: PolyQ,
    }

    fn syms() -> S {
        let (n1, n2, l1, l2, l3, nn) = (v(0), v(1), v(2), v(3), v(4), v(5));
        S {
            n: n1.clone() + n2.clone(),
            s: l2.clone() + l3.clone(),
            l: l1.clone() + l2.clone() + l3.clone(),
            n1,
            n2,
            l1,
            l2,
            l3,
            nn,
        }
    }

    fn prod(fs: Vec<PolyQ>) -> PolyQ {
        fs.into_iter().fold(k(1), |a, b| a * b)
    }

    /// `C_μ` for `μ ∈ {-1,0,1}² ∖ 0`. With `printed = true` the `(-1,-1)`
    /// entry uses the factor `(2ν2 - ℓ2 - ℓ3)` in its denominator; otherwise
    /// `(2ν2 - ℓ2 - ℓ3 - 2)`.
    pub fn coefficient(mu: (i8, i8), printed: bool) -> Option<(PolyQ, PolyQ)> {
        let S { n1, n2, l1, l2, l3, nn, n, s, l } = syms();
        let two = |p: &PolyQ| p.clone() + p.clone();
        let bracket = two(&n2) * (n2.clone() - s.clone() - k(1)) + l3.clone() * (s.clone() + k(2));
        let a0 = two(&n) - l.clone(); // 2n - L
        let a1 = a0.clone() - k(1);
        let a2 = a0.clone() - k(2);
        let b0 = two(&n2) - s.clone(); // 2ν2 - s
        let b1 = b0.clone() - k(1);
        let b2 = b0.clone() - k(2);
        let n_minus = nn.clone() - n.clone(); // N - n
        let back = n.clone() - l.clone() + nn.clone() - k(1); // n - L + N - 1
        let u = n1.clone() + two(&n2) - l.clone() - k(1); // ν1 + 2ν2 - L - 1
        let w = n1.clone() + two(&n2) - s.clone() - k(1); // ν1 + 2ν2 - s - 1
        let two_n_l = two(&nn) - l.clone();
        let up2 = (l2.clone() - n2.clone()) * (n2.clone() - s.clone() - k(1));
        let dn2 = n2.clone() * (n2.clone() - l3.clone() - k(1));
        Some(match mu {
            (1, 0) => (
                prod(vec![n_minus, l1.clone() - n1.clone(), u, bracket]),
                prod(vec![a0, a1, b0, b2]),
            ),
            (-1, 0) => (
                prod(vec![k(-1), back, n1.clone(), w, bracket]),
                prod(vec![a2, a1, b0, b2]),
            ),
            (0, 1) => (prod(vec![two_n_l, n1.clone(), u, up2]), prod(vec![a0, a2, b0, b1])),
            (0, -1) => (prod(vec![two_n_l, l1.clone() - n1.clone(), w, dn2]), prod(vec![a0, a2, b2, b1])),
            (1, 1) => (prod(vec![n_minus, u.clone(), u + k(1), up2]), prod(vec![a0, a1, b0, b1])),
            (-1, 1) => (prod(vec![back, n1.clone(), n1 - k(1), up2]), prod(vec![a2, a1, b0, b1])),
            (1, -1) => (
                prod(vec![k(-1), n_minus, l1.clone() - n1.clone(), l1 - n1 - k(1), dn2]),
                prod(vec![a0, a1, b2, b1]),
            ),
            (-1, -1) => (
                prod(vec![k(-1), back, w.clone(), w - k(1), dn2]),
                prod(vec![a2, a1, if printed { b0 } else { b2 }, b1]),
            ),
            _ => return None,
        })
    }

    /// `C'_{±1}` of `L^ν_1` for `d = 2`.
    pub fn reduced_coefficient(mu: i8) -> Option<(PolyQ, PolyQ)> {
        let S { n1, n2, l1, nn, n, s, l, .. } = syms();
        let two_n2 = n2.clone() + n2;
        let a0 = n.clone() + n.clone() - l.clone();
        Some(match mu {
            1 => (
                prod(vec![nn - n, l1 - n1.clone(), n1 + two_n2 - l - k(1)]),
                prod(vec![a0.clone(), a0 - k(1)]),
            ),
            -1 => (
                prod(vec![k(-1), n - l + nn - k(1), n1.clone(), n1 + two_n2 - s - k(1)]),
                prod(vec![a0.clone() - k(2), a0 - k(1)]),
            ),
            _ => return None,
        })
    }

    /// All eight shift patterns of the `d = 2` table.
    pub const PATTERNS: [(i8, i8); 8] = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, 1), (1, -1), (-1, -1)];
}

/// Whether the generic construction equals the explicit `d = 2` entry for
/// `μ`, as an identity of rational functions (cross-multiplied).
pub fn explicit_entry_matches(mu: (i8, i8), printed: bool) -> Result<bool> {
    let (gn, gd) = c_parts(&[mu.0, mu.1], &explicit_d2::symbolic_args())?;
    let (en, ed) = explicit_d2::coefficient(mu, printed).ok_or_else(|| Error::Table(format!("{mu:?}")))?;
    Ok(gn * ed == en * gd)
}

/// Same comparison for the reduced `L^ν_1` coefficients `C'_{±1}`.
pub fn explicit_reduced_matches(mu: i8) -> Result<bool> {
    let (gn, gd) = c_parts(&[mu], &explicit_d2::symbolic_reduced_args())?;
    let (en, ed) = explicit_d2::reduced_coefficient(mu).ok_or_else(|| Error::Table(format!("{mu}")))?;
    Ok(gn * ed == en * gd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn ex() -> LatticeParams {
        LatticeParams::new(vec![6, 4, 4], 7).unwrap()
    }

    #[test]
    fn lx_eigen_example() {
        let p = ex();
        let v = p.enum_v();
        for k in 1..=2 {
            for nu in p.enum_h() {
                let f = GridFunction::from_fn(&v, |x| hat_sq_value(&nu, x, &p)).unwrap();
                let g = apply_lx(k, &f, &p).unwrap();
                let ev = lx_eigenvalue(k, &nu, &p);
                for (x, val) in g.iter() {
                    assert_eq!(val, &(&ev * f.get(x).unwrap()), "k={k} nu={nu} x={x}");
                }
            }
        }
        let one = GridFunction::from_fn(&v, |_| Ok(Q::one())).unwrap();
        assert!(apply_lx(2, &one, &p).unwrap().iter().all(|(_, v)| v.is_zero()));
    }

    #[test]
    fn table_boundary_zeros() {
        let p = ex();
        let nu = MultiIndex(vec![0, 1]);
        assert!(coeff_b(1, -1, 0, &nu, &p).unwrap().is_zero());
        assert!(coeff_b(1, -1, 1, &nu, &p).unwrap().is_zero());
        assert!(coeff_b(2, -1, 1, &nu, &p).unwrap().is_zero());
        assert!(coeff_b(0, 0, 0, &nu, &p).unwrap().is_zero());
        assert!(coeff_b(0, 1, 0, &nu, &p).is_err());
    }

    #[test]
    fn explicit_table() {
        for mu in explicit_d2::PATTERNS {
            assert!(explicit_entry_matches(mu, false).unwrap(), "{mu:?}");
        }
        assert!(!explicit_entry_matches((-1, -1), true).unwrap());
        assert!(explicit_reduced_matches(1).unwrap());
        assert!(explicit_reduced_matches(-1).unwrap());
    }

    #[test]
    fn commutators_example() {
        assert!(commutator_check(Family::X, 1, 2, &ex()).unwrap());
    }
}
