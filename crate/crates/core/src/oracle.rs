//! Degree-by-degree linear algebra checks.
//!
//! Everything here is brute force: the matrix of `theta` on a graded
//! component, the span of the 2x2 minors sandwiched between PBW words, and the
//! grading-zero part of the tensor product, all compared by exact elimination.
//! The minors are built here from their defining formula rather than taken
//! from [`crate::detid`], whose reduction this module is meant to check.

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::detid::{is_s_word, reduce_mod_i1, reduce_mod_i1_by_cases, s_basis};
use crate::error::{Error, Result};
use crate::hspec::scalar_commutator;
use crate::maps::{coinvariant_check, gamma_weight, ThetaMap};
use crate::ncalg::{
    component_dimension, pbw_basis, sorted_words, Algebra, Letter, NCPoly, Reducer, Strategy, Word,
};
use crate::scalar::{rank_at, LaurentScalar, RatMatrix, RatScalar, Rational, RowEchelon, SparseRow};

/// Size limits for the brute-force checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Caps {
    pub max_m: usize,
    pub max_n: usize,
    pub max_degree: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self { max_m: 3, max_n: 3, max_degree: 4 }
    }
}

impl Caps {
    pub fn check(&self, m: usize, n: usize, d: usize) -> Result<()> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidShape(format!("{m}x{n} matrices")));
        }
        if m > self.max_m {
            return Err(Error::CapExceeded { what: "m", value: m, cap: self.max_m });
        }
        if n > self.max_n {
            return Err(Error::CapExceeded { what: "n", value: n, cap: self.max_n });
        }
        if d > self.max_degree {
            return Err(Error::CapExceeded { what: "degree", value: d, cap: self.max_degree });
        }
        Ok(())
    }
}

/// One line of a verification run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub m: usize,
    pub n: usize,
    pub d: usize,
    pub expected: u64,
    pub got: u64,
    pub pass: bool,
}

fn binomial(n: u64, k: u64) -> u64 {
    (1..=k).fold(1u64, |acc, i| acc * (n - k + i) / i)
}

/// Number of multisets of size `d` from `g` items.
fn multisets(g: usize, d: usize) -> u64 {
    if g == 0 {
        return u64::from(d == 0);
    }
    binomial((g + d - 1) as u64, d as u64)
}

/// The matrix of `theta` from the degree-`d` component of `O_q(M_{m,n})` to
/// the bidegree-`(d, d)` component of `O_q(k^m) (x) O_q(k^n)`, in PBW bases.
/// Column `j` holds the coordinates of the image of `source_basis[j]`.
#[derive(Clone, Debug)]
pub struct TruncatedMap {
    pub m: usize,
    pub n: usize,
    pub d: usize,
    pub source: Arc<Algebra>,
    pub target: Arc<Algebra>,
    pub source_basis: Vec<Word>,
    pub target_basis: Vec<Word>,
    pub matrix: RatMatrix,
    columns: Vec<SparseRow>,
}

/// PBW basis of the tensor product in bidegree `(r, s)`: sorted `y` words
/// followed by sorted `z` words.
fn bidegree_basis(m: usize, n: usize, r: usize, s: usize) -> Vec<Word> {
    let ys = sorted_words(m, r);
    let zs = sorted_words(n, s);
    let mut out = Vec::with_capacity(ys.len() * zs.len());
    for y in &ys {
        for z in &zs {
            out.push(y.iter().copied().chain(z.iter().map(|&l| l + m as Letter)).collect());
        }
    }
    out
}

fn index(basis: &[Word]) -> HashMap<&Word, usize> {
    basis.iter().enumerate().map(|(i, w)| (w, i)).collect()
}

/// Applies `theta` to each word, one reducer per worker thread.
fn theta_columns(source: &Arc<Algebra>, words: &[Word], target_index: &HashMap<&Word, usize>) -> Result<Vec<SparseRow>> {
    words
        .par_iter()
        .map_init(
            || ThetaMap::new(source).expect("source is a matrix algebra"),
            |tm, w| {
                let mut col = SparseRow::new();
                for (v, c) in tm.word(w).iter() {
                    let row = *target_index
                        .get(v)
                        .ok_or_else(|| Error::DimensionMismatch { expected: target_index.len(), got: v.len() })?;
                    col.insert(row, c.clone());
                }
                Ok(col)
            },
        )
        .collect()
}

pub fn build_theta_matrix(m: usize, n: usize, d: usize, caps: &Caps) -> Result<TruncatedMap> {
    caps.check(m, n, d)?;
    let source = Algebra::quantum_matrix(m, n)?;
    let target = Algebra::affine_tensor(m, n)?;
    let source_basis = pbw_basis(&source, d);
    let target_basis = bidegree_basis(m, n, d, d);
    let columns = theta_columns(&source, &source_basis, &index(&target_basis))?;
    let mut matrix = RatMatrix::zeros(target_basis.len(), source_basis.len());
    for (j, col) in columns.iter().enumerate() {
        for (&i, c) in col {
            matrix.set(i, j, RatScalar::from(c.clone()));
        }
    }
    Ok(TruncatedMap { m, n, d, source, target, source_basis, target_basis, matrix, columns })
}

impl TruncatedMap {
    fn row_echelon(&self) -> RowEchelon {
        let mut e = RowEchelon::new(self.source_basis.len());
        for i in 0..self.matrix.nrows() {
            let row: SparseRow = self.matrix.row(i).iter().map(|(&c, v)| (c, v.numer().clone())).collect();
            e.insert(row);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.row_echelon().rank()
    }

    /// Rank after evaluating at `q = c`.
    pub fn rank_at(&self, c: &Rational) -> Result<usize> {
        rank_at(&self.matrix, c)
    }

    /// A basis of the kernel, as elements of the source algebra.
    pub fn kernel(&self) -> Vec<NCPoly> {
        self.row_echelon()
            .kernel_basis()
            .into_iter()
            .map(|v| {
                NCPoly::from_terms(
                    &self.source,
                    v.into_iter().enumerate().map(|(j, c)| (self.source_basis[j].clone(), c)),
                )
            })
            .collect()
    }

    /// Image coordinates of a combination of source basis words.
    pub fn apply(&self, v: &SparseRow) -> SparseRow {
        let mut out = SparseRow::new();
        for (&j, c) in v {
            for (&i, a) in &self.columns[j] {
                *out.entry(i).or_default() += &(c * a);
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Coordinates of a canonical element of the source in the source basis.
    pub fn coordinates(&self, p: &NCPoly) -> Result<SparseRow> {
        let idx = index(&self.source_basis);
        p.terms()
            .map(|(w, c)| {
                idx.get(w)
                    .map(|&j| (j, c.clone()))
                    .ok_or_else(|| Error::DimensionMismatch { expected: self.d, got: w.len() })
            })
            .collect()
    }
}

/// The degree-`d` part of `I_1` as rows over the PBW basis: every product
/// `u * minor * v` with `u`, `v` PBW words, normal formed.
fn i1_span(source: &Arc<Algebra>, d: usize, basis: &[Word]) -> Result<Vec<SparseRow>> {
    let (m, n) = source.matrix_dims().expect("matrix algebra");
    if d < 2 {
        return Ok(Vec::new());
    }
    let x = |i: usize, j: usize| ((i - 1) * n + j - 1) as Letter;
    let q = LaurentScalar::q();
    let mut minors: Vec<Vec<(Word, LaurentScalar)>> = Vec::new();
    for i in 1..=m {
        for l in i + 1..=m {
            for j in 1..=n {
                for s in j + 1..=n {
                    minors.push(vec![
                        (Word::new(vec![x(i, j), x(l, s)]), LaurentScalar::one()),
                        (Word::new(vec![x(i, s), x(l, j)]), -&q),
                    ]);
                }
            }
        }
    }
    let mut products: Vec<(Word, usize, Word)> = Vec::new();
    for a in 0..=d - 2 {
        let left = pbw_basis(source, a);
        let right = pbw_basis(source, d - 2 - a);
        for u in &left {
            for g in 0..minors.len() {
                for v in &right {
                    products.push((u.clone(), g, v.clone()));
                }
            }
        }
    }
    let idx = index(basis);
    products
        .par_iter()
        .map_init(
            || source.reducer(),
            |reducer, (u, g, v)| {
                let terms: Vec<(Word, LaurentScalar)> =
                    minors[*g].iter().map(|(w, c)| (u.concat(w).concat(v), c.clone())).collect();
                let nf = reducer.reduce(terms.iter().map(|(w, c)| (w, c)));
                nf.into_iter()
                    .map(|(w, c)| {
                        idx.get(&w).map(|&j| (j, c)).ok_or(Error::DimensionMismatch { expected: d, got: w.len() })
                    })
                    .collect()
            },
        )
        .collect()
}

/// Dimensions of `ker theta` and of the degree-`d` part of `I_1`, and the
/// two containments.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelReport {
    pub m: usize,
    pub n: usize,
    pub d: usize,
    pub kernel_dim: usize,
    pub i1_dim: usize,
    pub i1_in_kernel: bool,
    pub kernel_in_i1: bool,
}

impl KernelReport {
    pub fn pass(&self) -> bool {
        self.kernel_dim == self.i1_dim && self.i1_in_kernel && self.kernel_in_i1
    }

    pub fn to_check(&self) -> CheckReport {
        CheckReport {
            check: "theta-kernel".into(),
            m: self.m,
            n: self.n,
            d: self.d,
            expected: self.kernel_dim as u64,
            got: self.i1_dim as u64,
            pass: self.pass(),
        }
    }
}

pub fn kernel_equals_i1(m: usize, n: usize, d: usize, caps: &Caps) -> Result<KernelReport> {
    let map = build_theta_matrix(m, n, d, caps)?;
    let rows = i1_span(&map.source, d, &map.source_basis)?;
    let i1_in_kernel = rows.iter().all(|r| map.apply(r).is_empty());
    let mut span = RowEchelon::new(map.source_basis.len());
    for r in rows {
        span.insert(r);
    }
    let kernel = map.kernel();
    let mut kernel_in_i1 = true;
    for k in &kernel {
        kernel_in_i1 &= span.contains(map.coordinates(k)?);
    }
    Ok(KernelReport { m, n, d, kernel_dim: kernel.len(), i1_dim: span.rank(), i1_in_kernel, kernel_in_i1 })
}

/// Size and independence of the spanning set modulo `I_1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SBasisReport {
    pub m: usize,
    pub n: usize,
    pub d: usize,
    /// Product of multiset counts for rows and columns.
    pub expected: usize,
    pub s_words: usize,
    pub theta_rank: usize,
    pub s_image_rank: usize,
    /// Every word is reduced onto spanning words, identically by both reductions.
    pub reductions_agree: bool,
}

impl SBasisReport {
    pub fn pass(&self) -> bool {
        self.s_words == self.expected
            && self.theta_rank == self.expected
            && self.s_image_rank == self.expected
            && self.reductions_agree
    }

    pub fn to_check(&self) -> CheckReport {
        CheckReport {
            check: "s-basis".into(),
            m: self.m,
            n: self.n,
            d: self.d,
            expected: self.expected as u64,
            got: self.s_image_rank as u64,
            pass: self.pass(),
        }
    }
}

pub fn verify_s_basis(m: usize, n: usize, d: usize, caps: &Caps) -> Result<SBasisReport> {
    let map = build_theta_matrix(m, n, d, caps)?;
    let words = s_basis(&map.source, d)?;
    let s_cols = theta_columns(&map.source, &words, &index(&map.target_basis))?;
    let mut e = RowEchelon::new(map.target_basis.len());
    for c in s_cols {
        e.insert(c);
    }
    let mut reductions_agree = true;
    for w in &map.source_basis {
        let p = NCPoly::from_terms(&map.source, [(w.clone(), LaurentScalar::one())]);
        let a = reduce_mod_i1(&p)?;
        reductions_agree &= a.terms().all(|(v, _)| is_s_word(&map.source, v)) && a == reduce_mod_i1_by_cases(&p)?;
    }
    Ok(SBasisReport {
        m,
        n,
        d,
        expected: (multisets(m, d) * multisets(n, d)) as usize,
        s_words: words.len(),
        theta_rank: map.rank(),
        s_image_rank: e.rank(),
        reductions_agree,
    })
}

/// Image dimension and grading-zero dimension in one bidegree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BidegreeDims {
    pub r: usize,
    pub s: usize,
    pub coinvariant_dim: usize,
    /// Rank of `theta` on degree `r` (diagonal bidegrees only).
    pub image_dim: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoinvariantReport {
    pub m: usize,
    pub n: usize,
    pub d: usize,
    pub bidegrees: Vec<BidegreeDims>,
    /// Every image of a basis word has grading zero.
    pub images_coinvariant: bool,
}

impl CoinvariantReport {
    pub fn pass(&self) -> bool {
        self.images_coinvariant
            && self.bidegrees.iter().all(|b| match b.image_dim {
                Some(i) => i == b.coinvariant_dim,
                None => b.coinvariant_dim == 0,
            })
    }

    fn top(&self) -> Option<&BidegreeDims> {
        self.bidegrees.iter().find(|b| b.r == self.d && b.s == self.d)
    }

    pub fn to_check(&self) -> CheckReport {
        let top = self.top();
        CheckReport {
            check: "coinv".into(),
            m: self.m,
            n: self.n,
            d: self.d,
            expected: top.map_or(0, |b| b.coinvariant_dim) as u64,
            got: top.and_then(|b| b.image_dim).unwrap_or(0) as u64,
            pass: self.pass(),
        }
    }
}

/// Dimension of the grading-zero part of bidegree `(r, s)`.
pub fn coinvariant_dimension(target: &Algebra, r: usize, s: usize) -> Result<usize> {
    let (m, n) = target.tensor_dims().ok_or(Error::WrongAlgebra { expected: "a tensor product of quantum affine spaces" })?;
    let mut count = 0;
    for w in bidegree_basis(m, n, r, s) {
        if gamma_weight(target, &w)?.0 == 0 {
            count += 1;
        }
    }
    Ok(count)
}

pub fn verify_coinvariants(m: usize, n: usize, d: usize, caps: &Caps) -> Result<CoinvariantReport> {
    caps.check(m, n, d)?;
    let mut bidegrees = Vec::new();
    let mut images_coinvariant = true;
    let target = Algebra::affine_tensor(m, n)?;
    for r in 0..=d {
        for s in 0..=d {
            let coinvariant_dim = coinvariant_dimension(&target, r, s)?;
            let image_dim = if r == s {
                let map = build_theta_matrix(m, n, r, caps)?;
                for col in &map.columns {
                    let img = NCPoly::from_terms(
                        &map.target,
                        col.iter().map(|(&i, c)| (map.target_basis[i].clone(), c.clone())),
                    );
                    images_coinvariant &= coinvariant_check(&img)?.coinvariant;
                }
                Some(map.rank())
            } else {
                None
            };
            bidegrees.push(BidegreeDims { r, s, coinvariant_dim, image_dim });
        }
    }
    Ok(CoinvariantReport { m, n, d, bidegrees, images_coinvariant })
}

/// Component dimensions and agreement of the two rewriting strategies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PbwReport {
    pub m: usize,
    pub n: usize,
    pub d: usize,
    /// `(degree, enumerated PBW words, multiset count)` for degrees `0..=d`.
    pub dims: Vec<(usize, u64, u64)>,
    /// All words of length at most three, which include every overlap.
    pub words_checked: usize,
    pub confluent: bool,
}

impl PbwReport {
    pub fn pass(&self) -> bool {
        self.confluent && self.dims.iter().all(|&(_, a, b)| a == b)
    }

    pub fn to_check(&self) -> CheckReport {
        let &(_, got, expected) = self.dims.last().expect("degree 0 is always present");
        CheckReport { check: "pbw".into(), m: self.m, n: self.n, d: self.d, expected, got, pass: self.pass() }
    }
}

/// Whether the two strategies give the same normal form of `w`.
pub fn strategies_agree(
    left: &mut Reducer,
    right: &mut Reducer,
    w: &[Letter],
) -> bool {
    debug_assert_eq!((left.strategy(), right.strategy()), (Strategy::Leftmost, Strategy::Rightmost));
    left.word(w) == right.word(w)
}

pub fn verify_pbw(m: usize, n: usize, d: usize, caps: &Caps) -> Result<PbwReport> {
    caps.check(m, n, d)?;
    let a = Algebra::quantum_matrix(m, n)?;
    let g = a.generator_count();
    let dims = (0..=d)
        .map(|k| {
            let enumerated = pbw_basis(&a, k).len() as u64;
            debug_assert_eq!(u128::from(enumerated), component_dimension(&a, k));
            (k, enumerated, multisets(g, k))
        })
        .collect();
    let mut left = Reducer::with_strategy(a.clone(), Strategy::Leftmost);
    let mut right = Reducer::with_strategy(a.clone(), Strategy::Rightmost);
    let mut words_checked = 0;
    let mut confluent = true;
    for len in 0..=3usize {
        for code in 0..g.pow(len as u32) {
            let w: Vec<Letter> = (0..len).map(|p| (code / g.pow(p as u32) % g) as Letter).collect();
            confluent &= strategies_agree(&mut left, &mut right, &w);
            words_checked += 1;
        }
    }
    Ok(PbwReport { m, n, d, dims, words_checked, confluent })
}

/// Commutation scalars checked against reduction modulo `I_1` for every
/// quadruple of indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommutationReport {
    pub m: usize,
    pub n: usize,
    pub quadruples: usize,
    pub scalars_in_range: usize,
    pub alpha_relations: usize,
    pub beta_relations: usize,
    pub failures: Vec<String>,
}

impl CommutationReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
            && self.scalars_in_range == self.quadruples
            && self.alpha_relations == self.quadruples
            && self.beta_relations == self.quadruples
    }

    pub fn to_check(&self) -> CheckReport {
        CheckReport {
            check: "commutation".into(),
            m: self.m,
            n: self.n,
            d: 2,
            expected: self.quadruples as u64,
            got: self.alpha_relations.min(self.beta_relations).min(self.scalars_in_range) as u64,
            pass: self.pass(),
        }
    }
}

pub fn verify_commutation_scalars(m: usize, n: usize, caps: &Caps) -> Result<CommutationReport> {
    caps.check(m, n, 2)?;
    let a = Algebra::quantum_matrix(m, n)?;
    let mut reducer = a.reducer();
    let allowed_alpha: Vec<LaurentScalar> = (-2..=2).map(LaurentScalar::q_pow).collect();
    let allowed_beta: Vec<LaurentScalar> = (-1..=1).map(LaurentScalar::q_pow).collect();
    let mut report = CommutationReport {
        m,
        n,
        quadruples: 0,
        scalars_in_range: 0,
        alpha_relations: 0,
        beta_relations: 0,
        failures: Vec::new(),
    };
    let x = |i: usize, j: usize| NCPoly::entries(&a, &[(i, j)]);
    for i in 1..=m {
        for j in 1..=n {
            for s in 1..=m {
                for t in 1..=n {
                    report.quadruples += 1;
                    let c = scalar_commutator(i, j, s, t)?;
                    if allowed_alpha.contains(&c.alpha) && allowed_beta.contains(&c.beta) {
                        report.scalars_in_range += 1;
                    }
                    let lhs = x(i, j)?.mul_raw(&x(s, t)?)?;
                    let swapped = x(s, t)?.mul_raw(&x(i, j)?)?.scale(&c.alpha);
                    let crossed = x(i, t)?.mul_raw(&x(s, j)?)?.scale(&c.beta);
                    let alpha_ok = reduce_mod_i1(&lhs.try_sub(&swapped)?.normal_form_by(&mut reducer))?.is_zero();
                    let beta_ok = reduce_mod_i1(&lhs.try_sub(&crossed)?.normal_form_by(&mut reducer))?.is_zero();
                    report.alpha_relations += usize::from(alpha_ok);
                    report.beta_relations += usize::from(beta_ok);
                    if !(alpha_ok && beta_ok) {
                        report.failures.push(format!("({i},{j},{s},{t}): alpha {} beta {}", c.alpha, c.beta));
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Every check in the range `m, n <= caps`, `d <= caps.max_degree`, run
/// concurrently and returned in a fixed order.
pub fn verify_all(caps: &Caps) -> Result<Vec<CheckReport>> {
    #[derive(Clone, Copy)]
    enum Job {
        Pbw(usize, usize, usize),
        Kernel(usize, usize, usize),
        SBasis(usize, usize, usize),
        Coinv(usize, usize, usize),
        Commutation(usize, usize),
    }
    let mut jobs = Vec::new();
    for m in 1..=caps.max_m {
        for n in 1..=caps.max_n {
            jobs.push(Job::Pbw(m, n, caps.max_degree));
            for d in 0..=caps.max_degree {
                jobs.push(Job::Kernel(m, n, d));
                jobs.push(Job::SBasis(m, n, d));
            }
            jobs.push(Job::Coinv(m, n, caps.max_degree.min(3)));
            jobs.push(Job::Commutation(m, n));
        }
    }
    jobs.par_iter()
        .map(|job| match *job {
            Job::Pbw(m, n, d) => verify_pbw(m, n, d, caps).map(|r| r.to_check()),
            Job::Kernel(m, n, d) => kernel_equals_i1(m, n, d, caps).map(|r| r.to_check()),
            Job::SBasis(m, n, d) => verify_s_basis(m, n, d, caps).map(|r| r.to_check()),
            Job::Coinv(m, n, d) => verify_coinvariants(m, n, d, caps).map(|r| r.to_check()),
            Job::Commutation(m, n) => verify_commutation_scalars(m, n, caps).map(|r| r.to_check()),
        })
        .collect()
}
