//! Randomized identities over small parameters.

use hahnlat::exact::{poch_i, pochhammer, q, qr, Q};
use hahnlat::hahn1d::{hahn_sq, inner_product, norm_b, Params1D};
use hahnlat::hahnmd::{sq_nu, sq_nu_value, LatticeParams, MultiIndex};
use hahnlat::poly::{univariate_factor, PolyQ};
use num_traits::Zero;
use proptest::prelude::*;

fn small_q() -> impl Strategy<Value = Q> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| qr(n, d))
}

fn uni_poly(max_deg: usize) -> impl Strategy<Value = PolyQ> {
    prop::collection::vec(-4i64..=4, 1..=max_deg + 1).prop_map(|c| PolyQ::from_int_coeffs(&c))
}

fn biv_poly() -> impl Strategy<Value = PolyQ> {
    prop::collection::vec(((0u32..3, 0u32..3), -5i64..=5), 1..6).prop_map(|terms| {
        PolyQ::from_terms(2, terms.into_iter().map(|((a, b), c)| (vec![a, b], q(c)))).unwrap()
    })
}

fn params_1d() -> impl Strategy<Value = Params1D> {
    (1i64..=8, 1i64..=8)
        .prop_flat_map(|(a, b)| (Just(a), Just(b), 1i64..=(a + b).min(10)))
        .prop_map(|(a, b, n)| Params1D::new(a, b, n).unwrap())
}

fn lattice_d2() -> impl Strategy<Value = LatticeParams> {
    (1i64..=6, 1i64..=6, 1i64..=6, 1i64..=8)
        .prop_filter_map("admissible", |(a, b, c, n)| LatticeParams::new(vec![a, b, c], n).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pochhammer_splits(a in small_q(), m in 0u32..5, n in 0u32..5) {
        let lhs = pochhammer(&a, m + n);
        let rhs = pochhammer(&a, m) * pochhammer(&(&a + q(m as i64)), n);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pochhammer_of_negative_integer_terminates(n in 0i64..8, extra in 1u32..4) {
        prop_assert!(poch_i(-n, n as u32 + extra).is_zero());
        prop_assert!(!poch_i(-n, n as u32).is_zero());
    }

    #[test]
    fn ring_axioms(a in biv_poly(), b in biv_poly(), c in biv_poly()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !b.is_zero() {
            prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), Some(a.clone()));
        }
    }

    #[test]
    fn json_roundtrip(a in biv_poly()) {
        let s = serde_json::to_string(&a).unwrap();
        let back: PolyQ = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn factorization_multiplies_back(f in uni_poly(3), g in uni_poly(3)) {
        let p = &f * &g;
        prop_assume!(!p.is_zero());
        let fac = univariate_factor(&p).unwrap();
        prop_assert_eq!(fac.product(), p);
    }

    #[test]
    fn one_d_orthogonality(p in params_1d(), m in 0u32..9, n in 0u32..9) {
        let deg = p.deg_bound() as u32;
        let (m, n) = (m.min(deg), n.min(deg));
        let ip = inner_product(&hahn_sq(m, &p).unwrap(), &hahn_sq(n, &p).unwrap(), &p).unwrap();
        if m == n {
            prop_assert_eq!(ip, norm_b(n, &p).unwrap());
        } else {
            prop_assert!(ip.is_zero());
        }
    }

    #[test]
    fn pointwise_value_matches_polynomial(p in lattice_d2(), i in 0usize..64, j in 0usize..64) {
        let ch = p.enum_ch();
        let v = p.enum_v();
        let nu = &ch[i % ch.len()];
        let x = &v[j % v.len()];
        let poly = sq_nu(nu, &p).unwrap();
        prop_assert_eq!(poly.eval_int(&x.0).unwrap(), sq_nu_value(nu, x, &p).unwrap());
    }

    #[test]
    fn cardinalities_agree(p in lattice_d2()) {
        let s = p.index_sets();
        prop_assert_eq!(s.v.len(), s.h.len());
        prop_assert_eq!(s.v.len() as u64, p.card_v_formula());
        prop_assert!(s.v.iter().all(|x| p.in_v(x)));
    }

    #[test]
    fn multi_index_display_parses_back(v in prop::collection::vec(-9i64..20, 1..5)) {
        let m = MultiIndex(v);
        prop_assert_eq!(MultiIndex::parse(&m.to_string()).unwrap(), m);
    }
}
