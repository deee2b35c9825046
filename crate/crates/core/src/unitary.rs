//! PSU(3,q) as an explicit permutation group on the Hermitian curve
//! `x0^(q+1) + x1^(q+1) + x2^(q+1) = 0` over GF(q²), for small q.
//!
//! Special unitary matrices are enumerated by orthonormal frames: a norm-1
//! first column, a norm-1 second column orthogonal to it, and the conjugated
//! cross product as third column (which has norm 1 and makes det = 1). Each
//! matrix is turned into its permutation of the curve points; deduplicating
//! those permutations divides out the centre.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::gf::{prime_power, FieldCtx, FieldTables, GfError};
use crate::linalg::{certified_rank, IntMatrix, LinalgError};

/// Largest q for which the whole group is enumerated.
pub const MAX_GROUP_Q: u64 = 5;
/// Largest q for which the curve points are enumerated.
pub const MAX_POINTS_Q: u64 = 9;

const GENERATOR_SEED: u64 = 0x5053_5533;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("q = {0} exceeds the point enumeration cap {MAX_POINTS_Q}")]
    PointsTooLarge(u64),
    #[error("group too large for explicit enumeration (q = {0}, cap {MAX_GROUP_Q})")]
    GroupTooLarge(u64),
    #[error("exhaustive structure check is q=2 only (q = {0})")]
    NotQ2(u64),
    #[error("vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Field(#[from] GfError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// |PSU(3,q)| = q³(q²−1)(q³+1)/gcd(3,q+1).
pub fn psu3_order(q: u64) -> u64 {
    let g = if (q + 1) % 3 == 0 { 3 } else { 1 };
    q.pow(3) * (q * q - 1) * (q.pow(3) + 1) / g
}

/// A normalized point; coordinates are encoded GF(q²) elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ProjPoint(pub [u16; 3]);

/// A permutation of the point indices; point `i` maps to `self.0[i]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(pub Box<[u16]>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u16).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u16; self.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u16;
        }
        Perm(inv.into())
    }

    pub fn fixed_points(&self) -> usize {
        self.0.iter().enumerate().filter(|&(i, &j)| i == j as usize).count()
    }

    /// Whether `self⁻¹ ∘ other` fixes a point.
    pub fn agrees_somewhere(&self, other: &Perm) -> bool {
        self.0.iter().zip(other.0.iter()).any(|(a, b)| a == b)
    }
}

struct Curve {
    tables: FieldTables,
    points: Vec<ProjPoint>,
    /// encoded (x0,x1,x2) ↦ point index, `u16::MAX` off the curve
    lookup: Vec<u16>,
}

impl Curve {
    fn new(q: u64) -> Result<Self, GroupError> {
        let (p, m) = prime_power(q).ok_or(GroupError::NotPrimePower(q))?;
        if q > MAX_POINTS_Q {
            return Err(GroupError::PointsTooLarge(q));
        }
        let tables = FieldCtx::build(p, 2 * m)?.tables();
        let f = tables.order() as u16;
        let mut points = Vec::new();
        let mut lookup = vec![u16::MAX; (f as usize).pow(3)];
        for a in 0..f {
            for b in 0..f {
                for c in 0..f {
                    let first = [a, b, c].into_iter().find(|&x| x != 0);
                    if first != Some(1) {
                        continue;
                    }
                    let s = tables.add(tables.add(tables.norm(a), tables.norm(b)), tables.norm(c));
                    if s == 0 {
                        lookup[Self::code(f, [a, b, c])] = points.len() as u16;
                        points.push(ProjPoint([a, b, c]));
                    }
                }
            }
        }
        Ok(Curve { tables, points, lookup })
    }

    fn code(f: u16, v: [u16; 3]) -> usize {
        let f = f as usize;
        (v[0] as usize * f + v[1] as usize) * f + v[2] as usize
    }

    fn normalize(&self, v: [u16; 3]) -> Option<[u16; 3]> {
        let lead = v.into_iter().find(|&x| x != 0)?;
        let inv = self.tables.inv(lead);
        Some(v.map(|x| self.tables.mul(x, inv)))
    }

    fn index_of(&self, v: [u16; 3]) -> Option<u16> {
        let v = self.normalize(v)?;
        let i = self.lookup[Self::code(self.tables.order() as u16, v)];
        (i != u16::MAX).then_some(i)
    }
}

/// The q³+1 points of the Hermitian curve, in lexicographic order of their
/// normalized encoded coordinates.
pub fn hermitian_points(q: u64) -> Result<Vec<ProjPoint>, GroupError> {
    Ok(Curve::new(q)?.points)
}

/// Conjugacy-class partition of the elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classes {
    pub class_of: Vec<u32>,
    pub reps: Vec<usize>,
    pub sizes: Vec<u64>,
}

#[derive(Debug, Clone)]
pub struct GroupData {
    pub q: u64,
    pub points: Vec<ProjPoint>,
    /// sorted lexicographically; index 0 is the identity
    pub elements: Vec<Perm>,
    pub class_of: Vec<u32>,
    pub class_reps: Vec<usize>,
    pub class_sizes: Vec<u64>,
    pub fix_counts: Vec<u32>,
    pub derangement_classes: Vec<usize>,
    pub generators: Vec<usize>,
}

/// Enumerates PSU(3,q) for `q ≤ MAX_GROUP_Q`.
pub fn build_psu3(q: u64) -> Result<GroupData, GroupError> {
    prime_power(q).ok_or(GroupError::NotPrimePower(q))?;
    if q > MAX_GROUP_Q {
        return Err(GroupError::GroupTooLarge(q));
    }
    let curve = Curve::new(q)?;
    let elements = enumerate_elements(&curve)?;
    if elements.len() as u64 != psu3_order(q) {
        return Err(GroupError::Inconsistent(format!(
            "enumerated {} elements, expected {}",
            elements.len(),
            psu3_order(q)
        )));
    }
    let mut g = GroupData {
        q,
        points: curve.points,
        elements,
        class_of: Vec::new(),
        class_reps: Vec::new(),
        class_sizes: Vec::new(),
        fix_counts: Vec::new(),
        derangement_classes: Vec::new(),
        generators: Vec::new(),
    };
    g.generators = g.find_generators()?;
    let classes = g.compute_classes();
    g.fix_counts = classes.reps.iter().map(|&r| g.elements[r].fixed_points() as u32).collect();
    g.derangement_classes = (0..classes.reps.len()).filter(|&c| g.fix_counts[c] == 0).collect();
    g.class_of = classes.class_of;
    g.class_reps = classes.reps;
    g.class_sizes = classes.sizes;
    Ok(g)
}

fn enumerate_elements(curve: &Curve) -> Result<Vec<Perm>, GroupError> {
    let t = &curve.tables;
    let f = t.order() as u16;
    let mut unit = Vec::new();
    for a in 0..f {
        for b in 0..f {
            for c in 0..f {
                if t.add(t.add(t.norm(a), t.norm(b)), t.norm(c)) == 1 {
                    unit.push([a, b, c]);
                }
            }
        }
    }
    let herm = |x: &[u16; 3], y: &[u16; 3]| {
        (0..3).fold(0u16, |s, i| t.add(s, t.mul(x[i], t.conj(y[i]))))
    };
    let mut perms = Vec::new();
    for c1 in &unit {
        for c2 in unit.iter().filter(|c2| herm(c1, c2) == 0) {
            let x = [
                t.sub(t.mul(c1[1], c2[2]), t.mul(c1[2], c2[1])),
                t.sub(t.mul(c1[2], c2[0]), t.mul(c1[0], c2[2])),
                t.sub(t.mul(c1[0], c2[1]), t.mul(c1[1], c2[0])),
            ];
            let c3 = x.map(|v| t.conj(v));
            let det = (0..3).fold(0u16, |s, i| t.add(s, t.mul(c3[i], x[i])));
            if herm(&c3, &c3) != 1 || det != 1 {
                return Err(GroupError::Inconsistent("frame completion is not special unitary".into()));
            }
            let mut img = Vec::with_capacity(curve.points.len());
            for &ProjPoint([p0, p1, p2]) in &curve.points {
                let v: [u16; 3] = std::array::from_fn(|i| {
                    t.add(t.add(t.mul(c1[i], p0), t.mul(c2[i], p1)), t.mul(c3[i], p2))
                });
                let j = curve
                    .index_of(v)
                    .ok_or_else(|| GroupError::Inconsistent("image left the curve".into()))?;
                img.push(j);
            }
            perms.push(Perm(img.into()));
        }
    }
    perms.sort_unstable();
    perms.dedup();
    Ok(perms)
}

impl GroupData {
    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    /// Number of points, q³+1.
    pub fn degree(&self) -> usize {
        self.points.len()
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    fn find_generators(&self) -> Result<Vec<usize>, GroupError> {
        let mut rng = ChaCha8Rng::seed_from_u64(GENERATOR_SEED);
        let n = self.elements.len();
        let mut gens: Vec<usize> = (0..2).map(|_| rng.gen_range(0..n)).collect();
        for _ in 0..16 {
            if self.closure_size(&gens) == n {
                return Ok(gens);
            }
            gens.push(rng.gen_range(0..n));
        }
        Err(GroupError::Inconsistent("random elements failed to generate".into()))
    }

    /// Size of the subgroup generated by the given elements.
    pub fn closure_size(&self, gens: &[usize]) -> usize {
        let mut seen = vec![false; self.elements.len()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.index_of(&self.elements[g].compose(&self.elements[x])).expect("closed");
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    queue.push_back(y);
                }
            }
        }
        count
    }

    fn compute_classes(&self) -> Classes {
        let n = self.elements.len();
        let gens: Vec<(&Perm, Perm)> =
            self.generators.iter().map(|&g| (&self.elements[g], self.elements[g].inverse())).collect();
        let mut class_of = vec![u32::MAX; n];
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        for start in 0..n {
            if class_of[start] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            class_of[start] = id;
            let mut size = 1u64;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for (g, ginv) in &gens {
                    let y = g.compose(&self.elements[x]).compose(ginv);
                    let y = self.index_of(&y).expect("closed");
                    if class_of[y] == u32::MAX {
                        class_of[y] = id;
                        size += 1;
                        queue.push_back(y);
                    }
                }
            }
            reps.push(start);
            sizes.push(size);
        }
        Classes { class_of, reps, sizes }
    }

    /// The conjugacy classes, representatives being least element indices.
    pub fn conjugacy_classes(&self) -> Classes {
        Classes {
            class_of: self.class_of.clone(),
            reps: self.class_reps.clone(),
            sizes: self.class_sizes.clone(),
        }
    }

    pub fn class_count(&self) -> usize {
        self.class_reps.len()
    }

    pub fn is_derangement(&self, idx: usize) -> bool {
        self.fix_counts[self.class_of[idx] as usize] == 0
    }

    /// Derangement classes and the total number of derangements.
    pub fn derangement_set(&self) -> (Vec<usize>, u64) {
        let total = self.derangement_classes.iter().map(|&c| self.class_sizes[c]).sum();
        (self.derangement_classes.clone(), total)
    }

    pub fn derangements(&self) -> Vec<usize> {
        (0..self.elements.len()).filter(|&i| self.is_derangement(i)).collect()
    }

    /// `N[C][C'] = #{d ∈ D : d ∘ c_C ∈ C'}`.
    pub fn quotient_matrix(&self) -> QuotientMatrix {
        let k = self.class_count();
        let ders = self.derangements();
        let mut rows = vec![vec![0u64; k]; k];
        for (c, &rep) in self.class_reps.iter().enumerate() {
            let r = &self.elements[rep];
            for &d in &ders {
                let y = self.index_of(&self.elements[d].compose(r)).expect("closed");
                rows[c][self.class_of[y] as usize] += 1;
            }
        }
        QuotientMatrix { rows }
    }

    /// Checks `N v = −|D|/(n−1) · v` for `v(C) = fix(c_C) − 1`.
    pub fn fix_character_eigencheck(&self) -> FixCheck {
        self.fix_character_eigencheck_with(&self.quotient_matrix())
    }

    pub fn fix_character_eigencheck_with(&self, n: &QuotientMatrix) -> FixCheck {
        let (_, d) = self.derangement_set();
        let lam = BigRational::new(-BigInt::from(d), BigInt::from(self.degree() as u64 - 1));
        let v: Vec<BigRational> = self
            .fix_counts
            .iter()
            .map(|&f| BigRational::from_integer(BigInt::from(f as i64 - 1)))
            .collect();
        let holds = n.rows.iter().zip(&v).all(|(row, vc)| {
            let nv: BigRational = row
                .iter()
                .zip(&v)
                .map(|(&x, y)| y * BigRational::from_integer(BigInt::from(x)))
                .sum();
            nv == &lam * vc
        });
        FixCheck { holds, eigenvalue: lam }
    }

    /// Whether the orbit of the ordered pair (0, 1) is every ordered pair of
    /// distinct points.
    pub fn is_two_transitive(&self) -> bool {
        let n = self.degree();
        let mut seen = vec![false; n * n];
        let mut queue = VecDeque::from([(0usize, 1usize)]);
        seen[1] = true;
        let mut count = 1;
        while let Some((a, b)) = queue.pop_front() {
            for &g in &self.generators {
                let e = &self.elements[g];
                let (x, y) = (e.image(a), e.image(b));
                if !seen[x * n + y] {
                    seen[x * n + y] = true;
                    count += 1;
                    queue.push_back((x, y));
                }
            }
        }
        count == n * (n - 1)
    }

    /// Degree of a vertex in the derangement graph, counted directly.
    pub fn vertex_degree(&self, idx: usize) -> u64 {
        let g = &self.elements[idx];
        self.elements.iter().filter(|h| !g.agrees_somewhere(h)).count() as u64
    }

    /// Elements mapping point `i` to point `j`.
    pub fn canonical_coclique(&self, i: usize, j: usize) -> Vec<usize> {
        (0..self.elements.len()).filter(|&x| self.elements[x].image(i) == j).collect()
    }

    /// Whether every pair in the set is intersecting.
    pub fn is_coclique(&self, members: &[usize]) -> bool {
        members.iter().enumerate().all(|(a, &x)| {
            members[a + 1..].iter().all(|&y| self.elements[x].agrees_somewhere(&self.elements[y]))
        })
    }

    /// Connected components of the derangement graph, each sorted.
    pub fn derangement_components(&self) -> Vec<Vec<usize>> {
        let n = self.elements.len();
        let ders = self.derangements();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[start] = id;
            let mut members = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &d in &ders {
                    let y = self.index_of(&self.elements[x].compose(&self.elements[d])).expect("closed");
                    if comp[y] == usize::MAX {
                        comp[y] = id;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Full adjacency matrix of the derangement graph.
    pub fn adjacency_matrix(&self) -> IntMatrix {
        let n = self.elements.len();
        (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| BigInt::from(!self.elements[a].agrees_somewhere(&self.elements[b]) as i64))
                    .collect()
            })
            .collect()
    }

    pub fn export(&self) -> GroupExport {
        GroupExport {
            q: self.q,
            n: self.degree() as u64,
            order: self.order(),
            classes: (0..self.class_count())
                .map(|c| ClassExport {
                    size: self.class_sizes[c],
                    fix: self.fix_counts[c],
                    derangement: self.fix_counts[c] == 0,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientMatrix {
    pub rows: Vec<Vec<u64>>,
}

impl QuotientMatrix {
    pub fn to_big(&self) -> IntMatrix {
        self.rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixCheck {
    pub holds: bool,
    pub eigenvalue: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassExport {
    pub size: u64,
    pub fix: u32,
    pub derangement: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupExport {
    pub q: u64,
    pub n: u64,
    pub order: u64,
    pub classes: Vec<ClassExport>,
}

/// The span of the canonical-coclique vectors `v_{i,j}`, handled through
/// its Gram matrix `G[(i,j)][(k,l)] = |S_{i,j} ∩ S_{k,l}|`, which has the
/// same rational rank as the spanning set.
pub struct PermModule<'a> {
    group: &'a GroupData,
    gram: Vec<Vec<i64>>,
    rank: usize,
}

impl<'a> PermModule<'a> {
    pub fn new(group: &'a GroupData) -> Result<Self, GroupError> {
        let n = group.degree();
        let mut gram = vec![vec![0i64; n * n]; n * n];
        for e in &group.elements {
            let sets: Vec<usize> = (0..n).map(|i| i * n + e.image(i)).collect();
            for &a in &sets {
                for &b in &sets {
                    gram[a][b] += 1;
                }
            }
        }
        let big: IntMatrix = gram.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let rank = certified_rank(&big)?.rank;
        Ok(PermModule { group, gram, rank })
    }

    /// Dimension of the span of the `v_{i,j}`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Whether a rational vector indexed by group elements lies in the span.
    pub fn contains(&self, v: &[BigRational]) -> Result<bool, GroupError> {
        let g = self.group;
        if v.len() != g.elements.len() {
            return Err(GroupError::DimensionMismatch { expected: g.elements.len(), got: v.len() });
        }
        let lcm = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        let vi: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
        let n = g.degree();
        let mut cross = vec![BigInt::zero(); n * n];
        for (e, x) in g.elements.iter().zip(&vi) {
            if x.is_zero() {
                continue;
            }
            for i in 0..n {
                cross[i * n + e.image(i)] += x;
            }
        }
        let self_dot: BigInt = vi.iter().map(|x| x * x).sum();
        let mut aug: IntMatrix = self
            .gram
            .iter()
            .zip(&cross)
            .map(|(r, c)| r.iter().map(|&x| BigInt::from(x)).chain([c.clone()]).collect())
            .collect();
        aug.push(cross.into_iter().chain([self_dot]).collect());
        Ok(certified_rank(&aug)?.rank == self.rank)
    }
}

/// Membership of `v` in the span of the canonical-coclique vectors.
pub fn perm_module_membership(g: &GroupData, v: &[BigRational]) -> Result<bool, GroupError> {
    PermModule::new(g)?.contains(v)
}

/// Characteristic vector of a set of elements.
pub fn indicator(g: &GroupData, members: &[usize]) -> Vec<BigRational> {
    let mut v = vec![BigRational::zero(); g.elements.len()];
    for &m in members {
        v[m] = BigRational::one();
    }
    v
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocliqueReport {
    pub components: usize,
    pub component_sizes: Vec<usize>,
    pub components_complete: bool,
    pub max_coclique_size: usize,
    pub max_coclique_count: BigInt,
}

/// Structure of the derangement graph at q = 2: a disjoint union of
/// complete graphs, whose maximum cocliques are exactly the transversals.
pub fn max_cocliques_q2(g: &GroupData) -> Result<CocliqueReport, GroupError> {
    if g.q != 2 {
        return Err(GroupError::NotQ2(g.q));
    }
    let comps = g.derangement_components();
    let complete = comps.iter().all(|c| {
        c.iter().enumerate().all(|(a, &x)| {
            c[a + 1..].iter().all(|&y| !g.elements[x].agrees_somewhere(&g.elements[y]))
        })
    });
    let sizes: Vec<usize> = comps.iter().map(Vec::len).collect();
    Ok(CocliqueReport {
        components: comps.len(),
        max_coclique_size: comps.len(),
        max_coclique_count: sizes.iter().map(|&s| BigInt::from(s)).product(),
        component_sizes: sizes,
        components_complete: complete,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransversalReport {
    pub members: Vec<usize>,
    pub is_coclique: bool,
    pub is_canonical: bool,
    pub in_module: bool,
}

/// A maximum coclique at q = 2 obtained from the stabilizer of point 0 by
/// replacing one element with another vertex of the same component. The
/// first swap (in index order) whose vector leaves the permutation module
/// is returned; if every swap stays inside, the last one tried is.
pub fn noncanonical_transversal_q2(
    g: &GroupData,
    module: &PermModule<'_>,
) -> Result<TransversalReport, GroupError> {
    if g.q != 2 {
        return Err(GroupError::NotQ2(g.q));
    }
    let comps = g.derangement_components();
    let stab = g.canonical_coclique(0, 0);
    let n = g.degree();
    let canonical: Vec<Vec<usize>> =
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| g.canonical_coclique(i, j)).collect();
    let mut last = None;
    for (pos, &sigma) in stab.iter().enumerate() {
        let comp = comps.iter().find(|c| c.contains(&sigma)).expect("every vertex has a component");
        for &tau in comp.iter().filter(|&&t| t != sigma) {
            let mut members = stab.clone();
            members[pos] = tau;
            members.sort_unstable();
            let report = TransversalReport {
                is_coclique: g.is_coclique(&members),
                is_canonical: canonical.contains(&members),
                in_module: module.contains(&indicator(g, &members))?,
                members,
            };
            if !report.in_module {
                return Ok(report);
            }
            last = Some(report);
        }
    }
    last.ok_or_else(|| GroupError::Inconsistent("no swap available".into()))
}
