//! Symbolic table invariants over every prime power q ≤ 64.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use psu3_ekr::gf::prime_power;
use psu3_ekr::spectra::{
    check_condition2, group_order, rows_to_csv, rows_to_json, sanity, table_gamma, table_union, table_weighted,
    weighted_bound, EigenRow, Family, Graph,
};
use psu3_ekr::triples::{self, Chi6Key, GcdCase};

fn prime_powers(hi: u64) -> impl Iterator<Item = u64> {
    (2..=hi).filter(|&q| prime_power(q).is_some())
}

fn int(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

#[test]
fn degree_sum_and_trace() {
    for q in prime_powers(64) {
        let rows = table_union(q).unwrap();
        let report = sanity(&rows, q).unwrap();
        assert_eq!(report.degree_sum, group_order(q));
        assert!(report.trace.is_zero());
        // rows appear even when empty
        let expected = if GcdCase::of(q) == GcdCase::One { 11 } else { 16 };
        assert_eq!(rows.len(), expected, "q = {q}");
    }
}

#[test]
fn weighted_extremes_and_bound() {
    for q in prime_powers(64).filter(|&q| q != 2) {
        let w = table_weighted(q).unwrap();
        let cube = int(q * q * q);
        assert_eq!(w.max(), cube, "q = {q}");
        assert_eq!(w.min(), -BigRational::one(), "q = {q}");
        for fam in [Family::Chi1, Family::Chi2] {
            let row = w.rows.iter().find(|r| r.family == fam).unwrap();
            assert_eq!(row.lam, -BigRational::one(), "q = {q}, {fam:?}");
        }
        let b = weighted_bound(q).unwrap();
        assert_eq!(b.bound * int(q * q * q + 1), int(group_order(q)));
    }
}

#[test]
fn condition2_scan() {
    for q in prime_powers(64) {
        let c = check_condition2(q).unwrap();
        assert_eq!(c.holds, q != 5, "q = {q}: {:?}", c.attaining);
    }
}

#[test]
fn union_eigenvalues_are_integers() {
    for q in prime_powers(64) {
        for r in table_union(q).unwrap().iter().filter(|r| r.count > 0) {
            assert!(r.lam.is_integer(), "q = {q}, {}", r.label());
        }
    }
}

fn find<'a>(rows: &'a [EigenRow], fam: Family, param: &str) -> &'a EigenRow {
    rows.iter().find(|r| r.family == fam && r.param.as_deref() == Some(param)).unwrap()
}

/// Γ₂ entry for a character of degree `d` whose C₂ character sum is `s`:
/// `c·|G|/((q+1)²d)·s` with c = gcd(3, q+1).
fn gamma2_from_sum(q: u64, d: &BigInt, s: BigInt) -> BigRational {
    let c = GcdCase::of(q).gcd();
    BigRational::new(group_order(q) * c, BigInt::from((q + 1) * (q + 1)) * d) * int(s)
}

#[test]
fn gamma_rows_agree_with_enumerated_sums() {
    for q in prime_powers(23) {
        let g2 = table_gamma(q, Graph::Gamma2).unwrap();
        match GcdCase::of(q) {
            GcdCase::One => {
                let odd = q % 2 == 1;
                let cases = [("u=(q+1)/2", (q + 1) / 2, odd), ("u!=(q+1)/2", 1, true)];
                for (param, u, live) in cases {
                    if !live {
                        continue;
                    }
                    let s = triples::chi3_sum(q, u).unwrap();
                    let r3 = find(&g2, Family::Chi3, param);
                    assert_eq!(r3.lam, gamma2_from_sum(q, &r3.dim, s.clone()), "q = {q}, chi3 {param}");
                    let r4 = find(&g2, Family::Chi4, param);
                    assert_eq!(r4.lam, -gamma2_from_sum(q, &r4.dim, s), "q = {q}, chi4 {param}");
                }
                for &tr in &triples::enumerate_t(q).unwrap().triples {
                    let param = if tr.2 == q + 1 { "q+1 in (u,v,w)" } else { "q+1 not in (u,v,w)" };
                    let r5 = find(&g2, Family::Chi5, param);
                    let s = triples::chi5_sum(q, tr).unwrap();
                    assert_eq!(r5.lam, -gamma2_from_sum(q, &r5.dim, s), "q = {q}, chi5 {tr:?}");
                }
            }
            GcdCase::Three => {
                let g3 = table_gamma(q, Graph::Gamma3).unwrap();
                for u in 1..(q + 1) / 3 {
                    let param = if q % 2 == 1 && 6 * u == q + 1 { "u=(q+1)/6" } else { "u!=(q+1)/6" };
                    let s = triples::chi3_sum_gcd3(q, u).unwrap();
                    let r3 = find(&g2, Family::Chi3, param);
                    assert_eq!(r3.lam, gamma2_from_sum(q, &r3.dim, s.clone()), "q = {q}, chi3 u={u}");
                    let r4 = find(&g2, Family::Chi4, param);
                    assert_eq!(r4.lam, -gamma2_from_sum(q, &r4.dim, s), "q = {q}, chi4 u={u}");
                }
                let live5 = g2.iter().find(|r| r.family == Family::Chi5 && r.count > 0);
                if let Some(r5) = live5 {
                    let w = triples::omega_pair_sum(q).unwrap();
                    assert_eq!(r5.lam, -gamma2_from_sum(q, &r5.dim, w), "q = {q}, chi5");
                }
                for &tr in &triples::enumerate_t(q).unwrap().triples {
                    let key = Chi6Key::of(q, tr);
                    let s = triples::chi6_sum(q, tr).unwrap().value;
                    let r6 = find(&g2, Family::Chi6, key.label());
                    assert_eq!(r6.lam, -gamma2_from_sum(q, &r6.dim, s), "q = {q}, chi6 {tr:?}");
                    let c3 = triples::chi6_gamma3_value(tr.0 as i64, tr.1 as i64);
                    let k = BigRational::new(group_order(q), BigInt::from((q + 1) * (q + 1)) * &r6.dim);
                    assert_eq!(find(&g3, Family::Chi6, key.label()).lam, k * int(c3), "q = {q}, chi6 {tr:?}");
                }
            }
        }
    }
}

#[test]
fn union_is_the_sum_of_the_gamma_tables() {
    for q in prime_powers(64) {
        let u = table_union(q).unwrap();
        let mut parts = vec![table_gamma(q, Graph::Gamma1).unwrap(), table_gamma(q, Graph::Gamma2).unwrap()];
        if GcdCase::of(q) == GcdCase::Three {
            parts.push(table_gamma(q, Graph::Gamma3).unwrap());
        }
        for (i, row) in u.iter().enumerate() {
            let sum: BigRational = parts.iter().map(|p| p[i].lam.clone()).sum();
            assert_eq!(row.lam, sum, "q = {q}, {}", row.label());
        }
    }
}

#[test]
fn renderings_are_deterministic() {
    for q in [3, 8, 64] {
        let a = table_union(q).unwrap();
        let b = table_union(q).unwrap();
        assert_eq!(rows_to_json(&a).to_string(), rows_to_json(&b).to_string());
        assert_eq!(rows_to_csv(&a), rows_to_csv(&b));
        assert!(!rows_to_csv(&a).contains('.'), "no floats in output");
    }
}
