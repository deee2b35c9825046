//! Acceptance criteria, one line each. Exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use psu3_ekr::gf::prime_power;
use psu3_ekr::linalg::{certified_rank, shifted_det, IntMatrix};
use psu3_ekr::spectra::{
    check_condition2, distinct_eigenvalues, group_order, hoffman, sanity, table_gamma, table_union, table_weighted,
    weighted_bound, weights, Graph,
};
use psu3_ekr::triples::{self, GcdCase};
use psu3_ekr::unitary::{build_psu3, indicator, max_cocliques_q2, noncanonical_transversal_q2, PermModule};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn int(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

fn prime_powers(hi: u64) -> impl Iterator<Item = u64> {
    (2..=hi).filter(|&q| prime_power(q).is_some())
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn nullity(a: &IntMatrix, lam: i64) -> usize {
    let shifted: IntMatrix = a
        .iter()
        .enumerate()
        .map(|(i, r)| r.iter().enumerate().map(|(j, x)| if i == j { x - lam } else { x.clone() }).collect())
        .collect();
    a.len() - certified_rank(&shifted).expect("square").rank
}

fn q2_end_to_end() -> Outcome {
    let g = build_psu3(2).map_err(|e| e.to_string())?;
    ensure(g.order() == 72, || format!("order {}", g.order()))?;
    let (_, d) = g.derangement_set();
    ensure(d == 8, || format!("{d} derangements"))?;
    let rep = max_cocliques_q2(&g).map_err(|e| e.to_string())?;
    ensure(
        rep.components == 8 && rep.component_sizes.iter().all(|&s| s == 9) && rep.components_complete,
        || format!("components {:?}, complete {}", rep.component_sizes, rep.components_complete),
    )?;
    let a = g.adjacency_matrix();
    let (n8, n1) = (nullity(&a, 8), nullity(&a, -1));
    ensure(n8 == 8 && n1 == 64, || format!("nullities 8:{n8}, -1:{n1}"))?;
    let rows = table_union(2).map_err(|e| e.to_string())?;
    let mut predicted: Vec<(BigRational, BigInt)> = Vec::new();
    for r in rows.iter().filter(|r| r.count > 0) {
        match predicted.iter_mut().find(|(l, _)| *l == r.lam) {
            Some(e) => e.1 += r.eigenspace_dim(),
            None => predicted.push((r.lam.clone(), r.eigenspace_dim())),
        }
    }
    predicted.sort();
    let expected = vec![(int(-1), BigInt::from(64)), (int(8), BigInt::from(8))];
    ensure(predicted == expected, || format!("table predicts {predicted:?}"))?;
    Ok("order 72, 8 derangements, 8 x K9, spectrum {8^8, -1^64} matches table".into())
}

fn oracle_equivalence(q: u64) -> Outcome {
    let g = build_psu3(q).map_err(|e| e.to_string())?;
    let n = g.quotient_matrix();
    let big = n.to_big();
    let rows = table_union(q).map_err(|e| e.to_string())?;
    let lams = distinct_eigenvalues(&rows);
    for (lam, _) in &lams {
        let det = shifted_det(&big, lam).map_err(|e| e.to_string())?;
        ensure(det.is_zero(), || format!("q={q}: det(N - {lam} I) = {det}"))?;
    }
    let fix = g.fix_character_eigencheck_with(&n);
    let (_, d) = g.derangement_set();
    let target = BigRational::new(-BigInt::from(d), BigInt::from(q).pow(3));
    ensure(fix.holds && fix.eigenvalue == target, || format!("q={q}: fix check {:?}", fix))?;
    if q == 3 {
        ensure(target == int(-78), || format!("q=3 fix eigenvalue {target}"))?;
    }
    Ok(format!("q={q}: {} eigenvalues vanish on {}x{} N, fix eigenvalue {target}", lams.len(), big.len(), big.len()))
}

fn oracle_q3_q4() -> Outcome {
    let a = oracle_equivalence(3)?;
    let b = oracle_equivalence(4)?;
    Ok(format!("{a}; {b}"))
}

fn table_identities() -> Outcome {
    let mut n = 0;
    for q in prime_powers(64) {
        let rows = table_union(q).map_err(|e| e.to_string())?;
        sanity(&rows, q).map_err(|e| format!("q={q}: {e}"))?;
        n += 1;
    }
    Ok(format!("degree sum and trace exact for {n} prime powers"))
}

fn hoffman_bounds() -> Outcome {
    let rows = table_union(3).map_err(|e| e.to_string())?;
    let h = hoffman(3, &rows);
    ensure(h.bound == int(432) && h.bound > int(216), || format!("q=3 unweighted bound {}", h.bound))?;
    let mut n = 0;
    for q in prime_powers(64).filter(|&q| q != 2) {
        let w = table_weighted(q).map_err(|e| e.to_string())?;
        let b = weighted_bound(q).map_err(|e| e.to_string())?;
        let cube = int(q * q * q);
        ensure(w.max() == cube && w.min() == -BigRational::one(), || {
            format!("q={q}: weighted extremes {} {}", w.max(), w.min())
        })?;
        ensure(b.bound == int(group_order(q)) / int(q * q * q + 1), || format!("q={q}: weighted bound {}", b.bound))?;
        n += 1;
    }
    Ok(format!("q=3 bound 432 > 216; weighted bound |G|/(q^3+1) with extremes q^3, -1 for {n} q"))
}

fn weight_spot_check() -> Outcome {
    let (a, b) = weights(3).map_err(|e| e.to_string())?;
    ensure(a == rat(5, 432) && b == rat(1, 54), || format!("a = {a}, b = {b}"))?;
    let c1 = &table_gamma(3, Graph::Gamma1).map_err(|e| e.to_string())?[0].lam;
    let c2 = &table_gamma(3, Graph::Gamma2).map_err(|e| e.to_string())?[0].lam;
    ensure(*c1 == int(1728) && *c2 == int(378), || format!("class totals {c1}, {c2}"))?;
    let total = &a * c1 + &b * c2;
    ensure(total == int(27), || format!("weighted degree {total}"))?;
    Ok("a = 5/432, b = 1/54, 5/432*1728 + 1/54*378 = 27".into())
}

fn condition2_scan() -> Outcome {
    for q in [3u64, 4, 7, 8, 9, 11, 13, 16] {
        let c = check_condition2(q).map_err(|e| e.to_string())?;
        ensure(c.holds, || format!("q={q}: attaining {:?}", c.attaining))?;
    }
    let c = check_condition2(5).map_err(|e| e.to_string())?;
    ensure(!c.holds && c.attaining == ["chi1", "chi2"], || format!("q=5: attaining {:?}", c.attaining))?;
    Ok(format!("unique at q in {{3,4,7,8,9,11,13,16}}; q=5 tie chi1, chi2 at {}", c.target))
}

/// Each closed-form character sum as stated, compared with exact enumeration.
fn identity_suite() -> Outcome {
    let mut failures: Vec<String> = Vec::new();
    let mut note = |ok: bool, what: String| {
        if !ok {
            failures.push(what);
        }
    };

    for q in prime_powers(64).filter(|&q| GcdCase::of(q) == GcdCase::One) {
        let t = triples::enumerate_t(q).map_err(|e| e.to_string())?;
        note(t.len() as u64 == (q * q - q) / 6, format!("q={q}: |T| = {}", t.len()));
        for (x, c) in triples::occurrence_counts(q).map_err(|e| e.to_string())? {
            note(c == triples::occurrence_claim(q, x), format!("q={q}: {x} occurs {c} times"));
        }
        for u in 1..=q {
            let s = triples::chi3_sum(q, u).map_err(|e| e.to_string())?;
            let claim = if q % 2 == 1 && 2 * u == q + 1 { -(q as i64 - 1) / 2 } else { 1 };
            note(s == BigInt::from(claim), format!("q={q}: chi3 sum at u={u} is {s}"));
        }
        for &tr in &t.triples {
            let s = triples::chi5_sum(q, tr).map_err(|e| e.to_string())?;
            let claim = if tr.2 == q + 1 { 1 - q as i64 } else { 2 };
            note(s == BigInt::from(claim), format!("q={q}: chi5 sum at {tr:?} is {s}"));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..10_000 {
        let m: u64 = rng.gen_range(1..=36);
        let (a, b, c): (i64, i64, i64) = (rng.gen_range(-60..=60), rng.gen_range(-60..=60), rng.gen_range(-60..=60));
        let mi = m as i64;
        let brute = (0..mi)
            .flat_map(|x| (0..mi).map(move |y| (x, y)))
            .filter(|&(x, y)| (a * x + b * y - c).rem_euclid(mi) == 0)
            .count() as u64;
        note(triples::count_solutions(a, b, c, m) == brute, format!("count_solutions({a},{b},{c},{m})"));
    }

    let mut zero_bad = Vec::new();
    let mut omega_bad = Vec::new();
    let mut sign_fits = [true, true];
    for q in prime_powers(64).filter(|&q| GcdCase::of(q) == GcdCase::Three) {
        let t = triples::enumerate_t(q).map_err(|e| e.to_string())?;
        note(t.len() as u64 == (q * q - q - 2) / 18, format!("q={q}: |T| = {}", t.len()));
        for u in 1..(q + 1) / 3 {
            let s = triples::chi3_sum_gcd3(q, u).map_err(|e| e.to_string())?;
            if !s.is_zero() {
                zero_bad.push(format!("q={q},u={u}:{s}"));
            }
        }
        let w = triples::omega_pair_sum(q).map_err(|e| e.to_string())?;
        if w.clone() * 3 != BigInt::from(triples::omega_pair_claim_times3(q)) {
            omega_bad.push(format!("q={q}:{w}"));
        }
        let qi = q as i64;
        for &tr in &t.triples {
            let s = triples::chi6_sum(q, tr).map_err(|e| e.to_string())?;
            let v = int(s.value.clone());
            match (s.key.diff_divisible, s.key.has_multiple) {
                (true, true) => note(v == rat(-(qi + 1), 3), format!("q={q}: chi6 {tr:?} = {v}")),
                (true, false) => note(v.is_zero(), format!("q={q}: chi6 {tr:?} = {v}")),
                (false, false) => note(v == int(3), format!("q={q}: chi6 {tr:?} = {v}")),
                (false, true) => {
                    sign_fits[0] &= v == rat(qi - 8, 3);
                    sign_fits[1] &= v == rat(8 - qi, 3);
                }
            }
        }
    }
    for (q, stated) in [(8u64, -6i64), (5, 1), (2, 0)] {
        let w = triples::omega_pair_sum(q).map_err(|e| e.to_string())?;
        if w != BigInt::from(stated) {
            omega_bad.push(format!("example q={q}: {w} vs {stated}"));
        }
    }
    if !zero_bad.is_empty() {
        failures.push(format!("zero-sum identity nonzero at {}", zero_bad.join(" ")));
    }
    if !omega_bad.is_empty() {
        failures.push(format!("omega pair sum off the mod-9 formulas at {}", omega_bad.join(" ")));
    }
    let which: Vec<&str> =
        ["(q-8)/3", "(8-q)/3"].into_iter().zip(sign_fits).filter(|(_, ok)| *ok).map(|(s, _)| s).collect();
    if which.len() != 1 {
        failures.push(format!("second chi6 branch consistent with {which:?}"));
    }
    if failures.is_empty() {
        Ok(format!("all identities match; second chi6 branch is {}", which[0]))
    } else {
        Err(format!("{}; second chi6 branch is {}", failures.join("; "), which.join(" and ")))
    }
}

fn module_check() -> Outcome {
    let mut failures = Vec::new();
    let g2 = build_psu3(2).map_err(|e| e.to_string())?;
    let m2 = PermModule::new(&g2).map_err(|e| e.to_string())?;
    let t = noncanonical_transversal_q2(&g2, &m2).map_err(|e| e.to_string())?;
    let maximal = t.members.len() == g2.canonical_coclique(0, 0).len();
    if !(t.is_coclique && maximal && !t.is_canonical) {
        failures.push("q=2: no non-canonical maximum coclique constructed".to_string());
    }
    if t.in_module {
        failures.push(format!(
            "q=2: non-canonical maximum coclique lies in the module (rank {}); membership is true, not false",
            m2.rank()
        ));
    }
    let canonical_in = m2.contains(&indicator(&g2, &g2.canonical_coclique(0, 0))).map_err(|e| e.to_string())?;
    if !canonical_in {
        failures.push("q=2: canonical vector outside the module".to_string());
    }
    let g3 = build_psu3(3).map_err(|e| e.to_string())?;
    let m3 = PermModule::new(&g3).map_err(|e| e.to_string())?;
    if m3.rank() != 730 {
        failures.push(format!("q=3: rank {}", m3.rank()));
    }
    if failures.is_empty() {
        Ok("q=2 transversal outside the module; q=3 rank 730".into())
    } else {
        Err(format!("{}; q=3 rank {}", failures.join("; "), m3.rank()))
    }
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "q=2 end-to-end", limit: Duration::from_secs(5), run: q2_end_to_end },
        Criterion { id: 2, name: "oracle equivalence q=3,4", limit: Duration::from_secs(120 + 900), run: oracle_q3_q4 },
        Criterion { id: 3, name: "table identities q<=64", limit: Duration::from_secs(10), run: table_identities },
        Criterion { id: 4, name: "ratio bounds", limit: Duration::from_secs(600), run: hoffman_bounds },
        Criterion { id: 5, name: "weights at q=3", limit: Duration::from_secs(600), run: weight_spot_check },
        Criterion { id: 6, name: "condition 2 scan", limit: Duration::from_secs(600), run: condition2_scan },
        Criterion { id: 7, name: "character-sum identities q<=64", limit: Duration::from_secs(120), run: identity_suite },
        Criterion { id: 8, name: "permutation module", limit: Duration::from_secs(600), run: module_check },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let mut outcome = (c.run)();
        let elapsed = start.elapsed();
        if outcome.is_ok() && elapsed > c.limit {
            outcome = Err(format!("took {elapsed:.1?}, limit {:?}", c.limit));
        }
        let (tag, text) = match &outcome {
            Ok(s) => ("PASS", s),
            Err(s) => {
                failed += 1;
                ("FAIL", s)
            }
        };
        println!("criterion {} [{tag}] {} ({elapsed:.2?}): {text}", c.id, c.name);
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
