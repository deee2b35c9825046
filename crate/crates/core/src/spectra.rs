//! Eigenvalue tables of the derangement graph of PSU(3,q), ratio bounds and
//! the EKR-module conditions.
//!
//! Every table row carries the eigenvalue of Γ₁, Γ₂ and (when 3 | q+1) Γ₃,
//! the graphs whose connection sets are the derangement class families
//! C₁, C₂, C₃; the union row is their sum. An eigenvalue of a family is
//! `Σ_C |C| ψ(c) / ψ(1)` over its classes.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::gf::prime_power;
use crate::triples::{self, Chi6Key, GcdCase, TriplesError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectraError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("gamma3 is only defined when 3 divides q+1 (q = {0})")]
    NoGamma3(u64),
    #[error("weights undefined at q=2")]
    WeightsUndefined,
    #[error("enumerated chi6 sums disagree inside branch '{0}'")]
    Chi6Branch(&'static str),
    #[error("table identity failed (degree sum {degree_sum}, trace {trace}) over rows {rows:?}")]
    Sanity { degree_sum: BigInt, trace: BigRational, rows: Vec<String> },
    #[error(transparent)]
    Triples(#[from] TriplesError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    Trivial,
    Chi1,
    Chi2,
    Chi3,
    Chi4,
    Chi5,
    Chi6,
    Chi7,
    Chi8,
}

impl Family {
    pub fn label(self) -> &'static str {
        match self {
            Family::Trivial => "trivial",
            Family::Chi1 => "chi1",
            Family::Chi2 => "chi2",
            Family::Chi3 => "chi3",
            Family::Chi4 => "chi4",
            Family::Chi5 => "chi5",
            Family::Chi6 => "chi6",
            Family::Chi7 => "chi7",
            Family::Chi8 => "chi8",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Provenance {
    #[serde(rename = "closed-form")]
    ClosedForm,
    #[serde(rename = "enumerated")]
    Enumerated,
}

impl Provenance {
    pub fn label(self) -> &'static str {
        match self {
            Provenance::ClosedForm => "closed-form",
            Provenance::Enumerated => "enumerated",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Graph {
    Gamma1,
    Gamma2,
    Gamma3,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenRow {
    pub family: Family,
    pub param: Option<String>,
    pub count: u64,
    pub dim: BigInt,
    pub lam: BigRational,
    pub lam_over_order: BigRational,
    pub provenance: Provenance,
}

impl EigenRow {
    pub fn label(&self) -> String {
        match &self.param {
            Some(p) => format!("{} [{}]", self.family.label(), p),
            None => self.family.label().to_string(),
        }
    }

    /// Dimension of the eigenspace contributed by this row.
    pub fn eigenspace_dim(&self) -> BigInt {
        BigInt::from(self.count) * &self.dim * &self.dim
    }
}

fn int(x: i64) -> BigInt {
    BigInt::from(x)
}

fn rat(num: BigInt, den: BigInt) -> BigRational {
    BigRational::new(num, den)
}

/// |PSU(3,q)|.
pub fn group_order(q: u64) -> BigInt {
    let q = int(q as i64);
    let g = &q * &q * &q * (&q * &q - 1u32) * (&q * &q * &q + 1u32);
    if (&q + 1u32) % 3u32 == BigInt::zero() {
        g / 3u32
    } else {
        g
    }
}

fn check_q(q: u64) -> Result<GcdCase, SpectraError> {
    prime_power(q).ok_or(SpectraError::NotPrimePower(q))?;
    Ok(GcdCase::of(q))
}

/// Per-family eigenvalues of one character row.
#[derive(Debug, Clone)]
struct RawRow {
    family: Family,
    param: Option<String>,
    count: u64,
    dim: BigInt,
    gammas: [BigRational; 3],
    provenance: Provenance,
}

fn raw_rows(q: u64) -> Result<Vec<RawRow>, SpectraError> {
    match check_q(q)? {
        GcdCase::One => raw_rows_gcd1(q),
        GcdCase::Three => raw_rows_gcd3(q),
    }
}

fn row(
    family: Family,
    param: Option<&str>,
    count: u64,
    dim: BigInt,
    g: [BigRational; 3],
) -> RawRow {
    RawRow {
        family,
        param: param.map(str::to_string),
        count,
        dim,
        gammas: g,
        provenance: Provenance::ClosedForm,
    }
}

fn raw_rows_gcd1(q: u64) -> Result<Vec<RawRow>, SpectraError> {
    let g = group_order(q);
    let qi = q as i64;
    let qb = int(qi);
    let h = int(qi * qi - qi + 1);
    let p1sq = int((qi + 1) * (qi + 1));
    let z = BigRational::zero;
    let t = triples::enumerate_t(q)?;
    let with_top = t.triples.iter().filter(|tr| tr.2 == q + 1).count() as u64;
    let half_exists = q % 2 == 1;
    // Γ2 entry per unit of C2 character sum, for a character of degree d
    let per = |d: &BigInt| rat(g.clone(), &p1sq * d);
    let k = rat(g.clone(), &p1sq * int(qi - 1) * &h);

    let dim3 = h.clone();
    let dim4 = &qb * &h;
    let dim5 = int(qi - 1) * &h;
    let s_half = rat(int(-(qi - 1)), int(2));
    let s_other = BigRational::one();

    Ok(vec![
        row(
            Family::Trivial,
            None,
            1,
            BigInt::one(),
            [
                rat(&g * int(qi * qi - qi), int(3) * &h),
                rat(&g * int(qi * qi - qi), int(6) * &p1sq),
                z(),
            ],
        ),
        row(
            Family::Chi1,
            None,
            1,
            int(qi * (qi - 1)),
            [rat(-&g, int(3) * &h), rat(g.clone(), int(3) * &p1sq), z()],
        ),
        row(
            Family::Chi2,
            None,
            1,
            int(qi * qi * qi),
            [
                rat(-&g * int(qi - 1), int(3 * qi * qi) * &h),
                rat(-&g * int(qi - 1), int(6 * qi * qi) * &p1sq),
                z(),
            ],
        ),
        row(
            Family::Chi3,
            Some("u=(q+1)/2"),
            half_exists as u64,
            dim3.clone(),
            [z(), per(&dim3) * &s_half, z()],
        ),
        row(
            Family::Chi3,
            Some("u!=(q+1)/2"),
            q - half_exists as u64,
            dim3.clone(),
            [z(), per(&dim3) * &s_other, z()],
        ),
        row(
            Family::Chi4,
            Some("u=(q+1)/2"),
            half_exists as u64,
            dim4.clone(),
            [z(), -per(&dim4) * &s_half, z()],
        ),
        row(
            Family::Chi4,
            Some("u!=(q+1)/2"),
            q - half_exists as u64,
            dim4.clone(),
            [z(), -per(&dim4) * &s_other, z()],
        ),
        row(
            Family::Chi5,
            Some("q+1 in (u,v,w)"),
            with_top,
            dim5.clone(),
            [z(), -per(&dim5) * BigRational::from_integer(int(1 - qi)), z()],
        ),
        row(
            Family::Chi5,
            Some("q+1 not in (u,v,w)"),
            t.len() as u64 - with_top,
            dim5.clone(),
            [z(), -per(&dim5) * BigRational::from_integer(int(2)), z()],
        ),
        row(
            Family::Chi6,
            None,
            ((qi * qi - qi - 2) / 2) as u64,
            int(qi + 1) * &h,
            [z(), z(), z()],
        ),
        row(Family::Chi7, None, ((qi * qi - qi) / 3) as u64, &p1sq * int(qi - 1), [k, z(), z()]),
    ])
}

fn raw_rows_gcd3(q: u64) -> Result<Vec<RawRow>, SpectraError> {
    let g = group_order(q);
    let qi = q as i64;
    let qb = int(qi);
    let h = int(qi * qi - qi + 1);
    let p1 = int(qi + 1);
    let p1sq = int((qi + 1) * (qi + 1));
    let z = BigRational::zero;
    let k = rat(g.clone(), &p1sq * int(qi - 1) * &h);
    let t = triples::enumerate_t(q)?;
    let odd = q % 2 == 1;
    let chi34 = ((qi - 2) / 3) as u64;

    let dim3 = h.clone();
    let dim4 = &qb * &h;
    // Γ2 is 3|G|/(q+1)² per unit of the C2 sum; Γ3 is |G|/(q+1)² per unit of the C3 value
    let c2 = |d: &BigInt, s: BigRational| rat(int(3) * &g, &p1sq * d) * s;
    let c3 = |d: &BigInt, s: i64| rat(g.clone() * s, &p1sq * d);
    let s_special = BigRational::from_integer(int(-(qi + 1) / 6));

    let mut rows = vec![
        row(
            Family::Trivial,
            None,
            1,
            BigInt::one(),
            [
                rat(&g * int(qi * qi - qi - 2), int(3) * &h),
                rat(&g * int(qi - 2), int(6) * &p1),
                rat(g.clone(), p1sq.clone()),
            ],
        ),
        row(
            Family::Chi1,
            None,
            1,
            int(qi * (qi - 1)),
            [
                rat(-&g * int(qi * qi - qi - 2), int(3 * qi * (qi - 1)) * &h),
                rat(&g * int(qi - 2), int(3 * qi * (qi - 1)) * &p1),
                rat(int(2) * &g, int(qi * (qi - 1)) * &p1sq),
            ],
        ),
        row(
            Family::Chi2,
            None,
            1,
            int(qi * qi * qi),
            [
                rat(-&g * int(qi * qi - qi - 2), int(3 * qi * qi * qi) * &h),
                rat(-&g * int(qi - 2), int(6 * qi * qi * qi) * &p1),
                rat(-&g, int(qi * qi * qi) * &p1sq),
            ],
        ),
        row(
            Family::Chi3,
            Some("u=(q+1)/6"),
            odd as u64,
            dim3.clone(),
            [z(), c2(&dim3, s_special.clone()), c3(&dim3, 3)],
        ),
        row(
            Family::Chi3,
            Some("u!=(q+1)/6"),
            chi34 - odd as u64,
            dim3.clone(),
            [z(), z(), c3(&dim3, 3)],
        ),
        row(
            Family::Chi4,
            Some("u=(q+1)/6"),
            odd as u64,
            dim4.clone(),
            [z(), -c2(&dim4, s_special), c3(&dim4, -3)],
        ),
        row(
            Family::Chi4,
            Some("u!=(q+1)/6"),
            chi34 - odd as u64,
            dim4.clone(),
            [z(), z(), c3(&dim4, -3)],
        ),
    ];

    let r9 = (q + 1) % 9;
    for (residue, label) in [(0, "q+1=0 mod 9"), (3, "q+1=3 mod 9"), (6, "q+1=6 mod 9")] {
        // the ω pair sum and the C3 value as they would be at this residue
        let w = if residue == 0 { -(qi + 1) / 3 } else { -(qi - 2) / 3 };
        let c3v = if residue == 0 { -2 } else { 1 };
        rows.push(row(
            Family::Chi5,
            Some(label),
            if r9 == residue { 3 } else { 0 },
            int(qi - 1) * &h / 3,
            [
                z(),
                &k * BigRational::from_integer(int(-9 * w)),
                &k * BigRational::from_integer(int(3 * c3v)),
            ],
        ));
    }

    let mut by_key: Vec<(Chi6Key, Vec<triples::Triple>)> = Chi6Key::all().into_iter().map(|k| (k, Vec::new())).collect();
    for &tr in &t.triples {
        let key = Chi6Key::of(q, tr);
        by_key.iter_mut().find(|(k, _)| *k == key).expect("four keys").1.push(tr);
    }
    for (key, members) in by_key {
        let g3 = if key.diff_divisible { -6 } else { 3 };
        let (s, prov) = match members.first() {
            Some(&first) => {
                let s = triples::chi6_sum(q, first)?.value;
                for &tr in &members[1..] {
                    if triples::chi6_sum(q, tr)?.value != s {
                        return Err(SpectraError::Chi6Branch(key.label()));
                    }
                }
                (BigRational::from_integer(s), Provenance::Enumerated)
            }
            None => (
                rat(int(key.closed_form_times3(q)), int(3)),
                Provenance::ClosedForm,
            ),
        };
        let mut r = row(
            Family::Chi6,
            Some(key.label()),
            members.len() as u64,
            int(qi - 1) * &h,
            [z(), &k * BigRational::from_integer(int(-3)) * s, &k * BigRational::from_integer(int(g3))],
        );
        r.provenance = prov;
        rows.push(r);
    }

    rows.push(row(
        Family::Chi7,
        None,
        ((qi * qi - qi - 2) / 6) as u64,
        &p1 * &h,
        [z(), z(), z()],
    ));
    rows.push(row(
        Family::Chi8,
        None,
        ((qi * qi - qi - 2) / 9) as u64,
        &p1sq * int(qi - 1),
        [&k * BigRational::from_integer(int(3)), z(), z()],
    ));
    Ok(rows)
}

fn finish(q: u64, raw: RawRow, lam: BigRational) -> EigenRow {
    let order = BigRational::from_integer(group_order(q));
    EigenRow {
        family: raw.family,
        param: raw.param,
        count: raw.count,
        dim: raw.dim,
        lam_over_order: &lam / order,
        lam,
        provenance: raw.provenance,
    }
}

/// Eigenvalues of Γ₁, Γ₂ or Γ₃ alone.
pub fn table_gamma(q: u64, which: Graph) -> Result<Vec<EigenRow>, SpectraError> {
    if which == Graph::Gamma3 && check_q(q)? == GcdCase::One {
        return Err(SpectraError::NoGamma3(q));
    }
    let idx = match which {
        Graph::Gamma1 => 0,
        Graph::Gamma2 => 1,
        Graph::Gamma3 => 2,
    };
    Ok(raw_rows(q)?
        .into_iter()
        .map(|r| {
            let lam = r.gammas[idx].clone();
            finish(q, r, lam)
        })
        .collect())
}

/// Eigenvalues of the derangement graph: Γ₁ + Γ₂ (+ Γ₃).
pub fn table_union(q: u64) -> Result<Vec<EigenRow>, SpectraError> {
    Ok(raw_rows(q)?
        .into_iter()
        .map(|r| {
            let lam = r.gammas.iter().sum();
            finish(q, r, lam)
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SanityReport {
    pub degree_sum: BigInt,
    pub trace: BigRational,
}

/// Checks Σ count·dim² = |G| and Σ count·dim²·λ = 0.
pub fn sanity(rows: &[EigenRow], q: u64) -> Result<SanityReport, SpectraError> {
    let degree_sum: BigInt = rows.iter().map(EigenRow::eigenspace_dim).sum();
    let trace: BigRational = rows
        .iter()
        .map(|r| BigRational::from_integer(r.eigenspace_dim()) * &r.lam)
        .sum();
    if degree_sum != group_order(q) || !trace.is_zero() {
        return Err(SpectraError::Sanity {
            degree_sum,
            trace,
            rows: rows.iter().filter(|r| r.count > 0).map(EigenRow::label).collect(),
        });
    }
    Ok(SanityReport { degree_sum, trace })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub degree: BigRational,
    pub least: BigRational,
    pub bound: BigRational,
    pub tight: bool,
}

fn ratio_bound(q: u64, d: BigRational, tau: BigRational) -> BoundReport {
    let order = BigRational::from_integer(group_order(q));
    let bound = &order / (BigRational::one() - &d / &tau);
    let canonical = &order / BigRational::from_integer(int(q as i64).pow(3) + 1);
    BoundReport { tight: bound == canonical, degree: d, least: tau, bound }
}

fn extremes(rows: &[EigenRow]) -> (BigRational, BigRational) {
    let live = rows.iter().filter(|r| r.count > 0).map(|r| &r.lam);
    let min = live.clone().min().cloned().unwrap_or_default();
    let max = live.max().cloned().unwrap_or_default();
    (min, max)
}

/// Ratio bound from the union table: degree = trivial eigenvalue, τ = least
/// eigenvalue over rows with positive count.
pub fn hoffman(q: u64, rows: &[EigenRow]) -> BoundReport {
    let d = rows
        .iter()
        .find(|r| r.family == Family::Trivial)
        .map(|r| r.lam.clone())
        .unwrap_or_default();
    ratio_bound(q, d, extremes(rows).0)
}

/// The class weights (a on C₁, b on C₂ and C₃).
pub fn weights(q: u64) -> Result<(BigRational, BigRational), SpectraError> {
    let g = group_order(q);
    let qi = q as i64;
    let h = int(qi * qi - qi + 1);
    let p1sq = int((qi + 1) * (qi + 1));
    match check_q(q)? {
        GcdCase::One => Ok((
            rat(&h * int(2 * qi * qi + qi - 1), &g * int(qi - 1)),
            rat(int(2) * &h * &p1sq, &g * int(qi - 1)),
        )),
        GcdCase::Three => {
            if q == 2 {
                return Err(SpectraError::WeightsUndefined);
            }
            Ok((
                rat(int(qi) * &h * int(2 * qi * qi + qi - 1), &g * int(qi * qi - qi - 2)),
                rat(int(2 * qi) * &p1sq * &h, &g * int(qi * qi - qi + 4)),
            ))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedTable {
    pub a: BigRational,
    pub b: BigRational,
    pub rows: Vec<EigenRow>,
}

impl WeightedTable {
    pub fn max(&self) -> BigRational {
        extremes(&self.rows).1
    }

    pub fn min(&self) -> BigRational {
        extremes(&self.rows).0
    }
}

/// Eigenvalues of the weighted adjacency matrix `a·A₁ + b·(A₂ + A₃)`.
pub fn table_weighted(q: u64) -> Result<WeightedTable, SpectraError> {
    let (a, b) = weights(q)?;
    let rows = raw_rows(q)?
        .into_iter()
        .map(|r| {
            let lam = &a * &r.gammas[0] + &b * (&r.gammas[1] + &r.gammas[2]);
            finish(q, r, lam)
        })
        .collect();
    Ok(WeightedTable { a, b, rows })
}

/// Weighted ratio bound with degree the weighted trivial eigenvalue and τ the
/// least weighted eigenvalue.
pub fn weighted_bound(q: u64) -> Result<BoundReport, SpectraError> {
    let w = table_weighted(q)?;
    let d = w
        .rows
        .iter()
        .find(|r| r.family == Family::Trivial)
        .map(|r| r.lam.clone())
        .unwrap_or_default();
    Ok(ratio_bound(q, d, w.min()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condition2 {
    pub holds: bool,
    pub target: BigRational,
    pub attaining: Vec<String>,
}

/// Whether the fix−1 eigenvalue −d/(n−1) is attained only by the row of
/// degree q³.
pub fn check_condition2(q: u64) -> Result<Condition2, SpectraError> {
    let rows = table_union(q)?;
    let d = rows
        .iter()
        .find(|r| r.family == Family::Trivial)
        .map(|r| r.lam.clone())
        .unwrap_or_default();
    let n1 = BigRational::from_integer(int(q as i64).pow(3));
    let target = -(d / &n1);
    let hits: Vec<&EigenRow> = rows.iter().filter(|r| r.count > 0 && r.lam == target).collect();
    let holds = hits.len() == 1 && hits[0].dim == *n1.numer();
    Ok(Condition2 { holds, target, attaining: hits.iter().map(|r| r.label()).collect() })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub q: u64,
    /// `None` when the weights are undefined.
    pub weighted: Option<BoundReport>,
    pub weighted_extremes_ok: Option<bool>,
    pub condition2: Condition2,
    pub certified: bool,
    pub note: String,
}

/// Combines the weighted-bound tightness with condition 2.
pub fn ekr_module_verdict(q: u64) -> Result<Verdict, SpectraError> {
    let condition2 = check_condition2(q)?;
    let (weighted, extremes_ok) = match table_weighted(q) {
        Ok(w) => {
            let cube = BigRational::from_integer(int(q as i64).pow(3));
            let ok = w.max() == cube && w.min() == -BigRational::one();
            (Some(weighted_bound(q)?), Some(ok))
        }
        Err(SpectraError::WeightsUndefined) => (None, None),
        Err(e) => return Err(e),
    };
    let tight = weighted.as_ref().is_some_and(|b| b.tight) && extremes_ok == Some(true);
    let certified = tight && condition2.holds;
    let note = match (&weighted, condition2.holds) {
        (None, _) => "weights undefined; not certified by the weighted bound (see module check)".to_string(),
        (Some(_), false) => format!("condition 2 fails: {} attain {}", condition2.attaining.join(", "), condition2.target),
        (Some(_), true) if !tight => "weighted bound is not tight".to_string(),
        _ => "EKR-module property certified".to_string(),
    };
    Ok(Verdict { q, weighted, weighted_extremes_ok: extremes_ok, condition2, certified, note })
}

#[derive(Debug, Clone, Serialize)]
struct JsonFrac {
    num: String,
    den: String,
}

impl From<&BigRational> for JsonFrac {
    fn from(r: &BigRational) -> Self {
        JsonFrac { num: r.numer().to_string(), den: r.denom().to_string() }
    }
}

#[derive(Debug, Clone, Serialize)]
struct JsonRow {
    family: &'static str,
    param: Option<String>,
    count: u64,
    dim: String,
    lambda: JsonFrac,
    lambda_over_order: JsonFrac,
    provenance: &'static str,
}

impl From<&EigenRow> for JsonRow {
    fn from(r: &EigenRow) -> Self {
        JsonRow {
            family: r.family.label(),
            param: r.param.clone(),
            count: r.count,
            dim: r.dim.to_string(),
            lambda: (&r.lam).into(),
            lambda_over_order: (&r.lam_over_order).into(),
            provenance: r.provenance.label(),
        }
    }
}

pub fn rows_to_json(rows: &[EigenRow]) -> serde_json::Value {
    serde_json::to_value(rows.iter().map(JsonRow::from).collect::<Vec<_>>()).expect("serializable")
}

pub(crate) fn frac(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn csv_field(s: &str) -> String {
    if s.contains([',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn rows_to_csv(rows: &[EigenRow]) -> String {
    let mut out = String::from("family,param,count,dim,lambda,lambda_over_order,provenance\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.family.label(),
            csv_field(r.param.as_deref().unwrap_or("")),
            r.count,
            r.dim,
            frac(&r.lam),
            frac(&r.lam_over_order),
            r.provenance.label()
        );
    }
    out
}

pub fn rows_to_markdown(rows: &[EigenRow]) -> String {
    let mut out = String::from(
        "| family | param | count | dim | lambda | lambda/|G| | provenance |\n|---|---|---|---|---|---|---|\n",
    );
    for r in rows {
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} | {} |",
            r.family.label(),
            r.param.as_deref().unwrap_or(""),
            r.count,
            r.dim,
            frac(&r.lam),
            frac(&r.lam_over_order),
            r.provenance.label()
        );
    }
    out
}

/// Distinct eigenvalues over rows with positive count, ascending, with
/// their total number of characters.
pub fn distinct_eigenvalues(rows: &[EigenRow]) -> Vec<(BigRational, u64)> {
    let mut out: Vec<(BigRational, u64)> = Vec::new();
    for r in rows.iter().filter(|r| r.count > 0) {
        match out.iter_mut().find(|(l, _)| *l == r.lam) {
            Some(e) => e.1 += r.count,
            None => out.push((r.lam.clone(), r.count)),
        }
    }
    out.sort();
    out
}
