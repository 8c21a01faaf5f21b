//! Torus-invariant primes of `O_q(M_{m,n})` containing `I_1`.
//!
//! Apart from the ideal generated by all the `X_ij`, these are the ideals
//! `P(I, J) = I_1 + <X_ij : i in I or j in J>` for proper subsets `I` of the
//! rows and `J` of the columns. Each quotient by a non-maximal one is again a
//! quantum matrix algebra modulo its 2x2 minors, on the surviving rows and
//! columns.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};

use crate::detid::{i1_generators, reduce_mod_i1};
use crate::error::{Error, Result};
use crate::ncalg::{pbw_basis, Algebra, Generator, NCPoly, Word};
use crate::scalar::LaurentScalar;

/// Largest `m` or `n` accepted by [`enumerate_hprimes`].
pub const MAX_ENUMERATION_DIM: usize = 16;

/// One torus-invariant prime containing `I_1`: either `P(I, J)` with `I`, `J`
/// proper, or the maximal ideal generated by every `X_ij`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IdealPair {
    m: usize,
    n: usize,
    rows: Vec<usize>,
    cols: Vec<usize>,
    maximal: bool,
}

impl IdealPair {
    /// `P(I, J)` with 1-based indices. Pairs with `I` or `J` full describe the
    /// maximal ideal and are canonicalized to it.
    pub fn new(m: usize, n: usize, rows: &[usize], cols: &[usize]) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidShape(format!("{m}x{n} matrices")));
        }
        let rows: BTreeSet<usize> = rows.iter().copied().collect();
        let cols: BTreeSet<usize> = cols.iter().copied().collect();
        if let Some(bad) = rows.iter().find(|&&i| i == 0 || i > m) {
            return Err(Error::IndexOutOfRange(format!("row {bad} of {m}")));
        }
        if let Some(bad) = cols.iter().find(|&&j| j == 0 || j > n) {
            return Err(Error::IndexOutOfRange(format!("column {bad} of {n}")));
        }
        if rows.len() == m || cols.len() == n {
            return Ok(Self::maximal(m, n));
        }
        Ok(Self { m, n, rows: rows.into_iter().collect(), cols: cols.into_iter().collect(), maximal: false })
    }

    pub fn maximal(m: usize, n: usize) -> Self {
        Self { m, n, rows: (1..=m).collect(), cols: (1..=n).collect(), maximal: true }
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn is_maximal(&self) -> bool {
        self.maximal
    }

    /// Whether `X_ij` is one of the generators of this ideal.
    pub fn kills(&self, i: usize, j: usize) -> bool {
        self.maximal || self.rows.contains(&i) || self.cols.contains(&j)
    }

    /// Rows not in `I`, ascending.
    pub fn surviving_rows(&self) -> Vec<usize> {
        (1..=self.m).filter(|i| !self.kills_row(*i)).collect()
    }

    /// Columns not in `J`, ascending.
    pub fn surviving_cols(&self) -> Vec<usize> {
        (1..=self.n).filter(|j| !self.kills_col(*j)).collect()
    }

    fn kills_row(&self, i: usize) -> bool {
        self.maximal || self.rows.contains(&i)
    }

    fn kills_col(&self, j: usize) -> bool {
        self.maximal || self.cols.contains(&j)
    }

    fn join(ix: &[usize]) -> String {
        let sep = if ix.iter().any(|&i| i >= 10) { "." } else { "" };
        ix.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(sep)
    }

    /// Identifier for graph output: `P_<I>_<J>`, or `M` for the maximal ideal.
    pub fn id(&self) -> String {
        if self.maximal {
            "M".into()
        } else {
            format!("P_{}_{}", Self::join(&self.rows), Self::join(&self.cols))
        }
    }

    /// Display label. For 2x2 matrices this is a picture with a bullet for each
    /// `X_ij` in the ideal and a circle otherwise (rows separated by `/`), and
    /// a square for `P(empty, empty)`.
    pub fn label(&self) -> String {
        if (self.m, self.n) == (2, 2) {
            if !self.maximal && self.rows.is_empty() && self.cols.is_empty() {
                return "(\u{25a1})".into();
            }
            let row = |i: usize| -> String {
                (1..=2).map(|j| if self.kills(i, j) { '\u{2022}' } else { '\u{2218}' }).collect()
            };
            return format!("({}/{})", row(1), row(2));
        }
        if self.maximal {
            return "M".into();
        }
        let set = |ix: &[usize]| format!("{{{}}}", ix.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","));
        format!("P({}, {})", set(&self.rows), set(&self.cols))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id(),
            "label": self.label(),
            "rows": self.rows,
            "cols": self.cols,
            "maximal": self.maximal,
        })
    }
}

/// All torus-invariant primes containing `I_1`, by increasing size of
/// `|I| + |J|` with the maximal ideal last. There are
/// `(2^m - 1)(2^n - 1) + 1` of them.
pub fn enumerate_hprimes(m: usize, n: usize) -> Result<Vec<IdealPair>> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidShape(format!("{m}x{n} matrices")));
    }
    let big = m.max(n);
    if big > MAX_ENUMERATION_DIM {
        return Err(Error::CapExceeded { what: "matrix dimension for enumeration", value: big, cap: MAX_ENUMERATION_DIM });
    }
    let subsets = |k: usize| -> Vec<Vec<usize>> {
        (0u32..(1 << k) - 1).map(|mask| (1..=k).filter(|i| mask >> (i - 1) & 1 == 1).collect()).collect()
    };
    let mut out = Vec::new();
    for rows in subsets(m) {
        for cols in subsets(n) {
            out.push(IdealPair { m, n, rows: rows.clone(), cols, maximal: false });
        }
    }
    out.sort_by(|a, b| (a.rows.len() + a.cols.len(), &a.rows, &a.cols).cmp(&(b.rows.len() + b.cols.len(), &b.rows, &b.cols)));
    out.push(IdealPair::maximal(m, n));
    Ok(out)
}

/// Number of torus-invariant primes containing `I_1`, in closed form.
pub fn hprime_count(m: u32, n: u32) -> Option<u128> {
    let a = 1u128.checked_shl(m)?.checked_sub(1)?;
    let b = 1u128.checked_shl(n)?.checked_sub(1)?;
    a.checked_mul(b)?.checked_add(1)
}

fn same_dims(a: &IdealPair, b: &IdealPair) -> Result<()> {
    if a.dims() != b.dims() {
        return Err(Error::DimensionMismatch { expected: a.m * a.n, got: b.m * b.n });
    }
    Ok(())
}

/// Inclusion `a <= b`, combinatorially.
pub fn hprime_leq(a: &IdealPair, b: &IdealPair) -> Result<bool> {
    same_dims(a, b)?;
    if b.maximal {
        return Ok(true);
    }
    if a.maximal {
        return Ok(false);
    }
    Ok(a.rows.iter().all(|i| b.rows.contains(i)) && a.cols.iter().all(|j| b.cols.contains(j)))
}

/// The homomorphism `O_q(M_{m,n}) -> O_q(M_{m',n'})` killing the generators
/// of `P(I, J)` and renumbering the surviving entries, together with its
/// section `X'_ab -> X_{row_a, col_b}`.
pub struct QuotientModel {
    pair: IdealPair,
    source: Arc<Algebra>,
    target: Arc<Algebra>,
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl QuotientModel {
    pub fn new(pair: &IdealPair) -> Result<Self> {
        if pair.maximal {
            return Err(Error::InvalidPair("the maximal ideal has no matrix quotient model".into()));
        }
        let (rows, cols) = (pair.surviving_rows(), pair.surviving_cols());
        Ok(Self {
            pair: pair.clone(),
            source: Algebra::quantum_matrix(pair.m, pair.n)?,
            target: Algebra::quantum_matrix(rows.len(), cols.len())?,
            rows,
            cols,
        })
    }

    pub fn source(&self) -> &Arc<Algebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Algebra> {
        &self.target
    }

    /// The quotient map on elements of the source.
    pub fn project(&self, p: &NCPoly) -> Result<NCPoly> {
        p.substitute(&self.target, |g| {
            let Generator::Entry { row, col } = g else { unreachable!() };
            match (self.rows.iter().position(|&r| r == row), self.cols.iter().position(|&c| c == col)) {
                (Some(a), Some(b)) => NCPoly::entries(&self.target, &[(a + 1, b + 1)]),
                _ => Ok(NCPoly::zero(&self.target)),
            }
        })
    }

    /// The section on elements of the target.
    pub fn lift(&self, p: &NCPoly) -> Result<NCPoly> {
        p.substitute(&self.source, |g| {
            let Generator::Entry { row, col } = g else { unreachable!() };
            NCPoly::entries(&self.source, &[(self.rows[row - 1], self.cols[col - 1])])
        })
    }

    /// Whether `p` lies in `P(I, J)`: its image is zero modulo `I_1` of the
    /// target.
    pub fn contains(&self, p: &NCPoly) -> Result<bool> {
        Ok(reduce_mod_i1(&self.project(p)?)?.is_zero())
    }

    pub fn pair(&self) -> &IdealPair {
        &self.pair
    }
}

/// The listed generators of an H-prime: the 2x2 minors followed by the
/// killed `X_ij`.
pub fn p_ideal_generators(pair: &IdealPair) -> Result<Vec<NCPoly>> {
    let a = Algebra::quantum_matrix(pair.m, pair.n)?;
    let mut out = i1_generators(&a)?;
    for i in 1..=pair.m {
        for j in 1..=pair.n {
            if pair.kills(i, j) {
                out.push(NCPoly::entries(&a, &[(i, j)])?);
            }
        }
    }
    Ok(out)
}

/// Inclusion `a <= b` decided algebraically: every generator of `a` vanishes
/// in the quotient by `b`.
pub fn hprime_leq_semantic(a: &IdealPair, b: &IdealPair) -> Result<bool> {
    same_dims(a, b)?;
    let gens = p_ideal_generators(a)?;
    if b.maximal {
        // the quotient is the base field: everything without constant term dies
        return Ok(gens.iter().all(|g| g.coeff(&Word::empty()).is_zero()));
    }
    let model = QuotientModel::new(b)?;
    for g in &gens {
        if !model.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The two scalars with `X_ij X_st = alpha X_st X_ij` and
/// `X_ij X_st = beta X_it X_sj` modulo `I_1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommutationScalars {
    pub alpha: LaurentScalar,
    pub beta: LaurentScalar,
}

/// Commutation scalars for `X_ij` and `X_st` modulo `I_1` (1-based indices).
pub fn scalar_commutator(i: usize, j: usize, s: usize, t: usize) -> Result<CommutationScalars> {
    if [i, j, s, t].contains(&0) {
        return Err(Error::IndexOutOfRange("indices are 1-based".into()));
    }
    let sign = |a: usize, b: usize| -> i32 {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => 1,
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Greater => -1,
        }
    };
    let (r, c) = (sign(i, s), sign(j, t));
    let (alpha, beta) = match (r, c) {
        (0, c) => (c, c),
        (r, 0) => (r, 0),
        (r, c) if r == c => (2 * r, r),
        (_, c) => (0, c),
    };
    Ok(CommutationScalars { alpha: LaurentScalar::q_pow(alpha), beta: LaurentScalar::q_pow(beta) })
}

/// Default node cap for [`hasse_diagram`].
pub const DEFAULT_HASSE_CAP: usize = 4096;

/// Inclusion order on the H-primes containing `I_1`, as its cover relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseDiagram {
    pub nodes: Vec<IdealPair>,
    /// `(smaller, larger)` node indices of each cover.
    pub edges: Vec<(usize, usize)>,
}

impl HasseDiagram {
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph hspec {\n  rankdir=BT;\n");
        for v in &self.nodes {
            let _ = writeln!(s, "  \"{}\" [label=\"{}\"];", v.id(), v.label());
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(s, "  \"{}\" -> \"{}\";", self.nodes[a].id(), self.nodes[b].id());
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> Value {
        json!({
            "nodes": self.nodes.iter().map(IdealPair::to_json).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|&(a, b)| json!([self.nodes[a].id(), self.nodes[b].id()])).collect::<Vec<_>>(),
        })
    }
}

/// The Hasse diagram, refusing more than `cap` nodes.
pub fn hasse_diagram(m: usize, n: usize, cap: usize) -> Result<HasseDiagram> {
    let count = hprime_count(m.min(127) as u32, n.min(127) as u32).unwrap_or(u128::MAX);
    if count > cap as u128 {
        return Err(Error::CapExceeded { what: "Hasse diagram nodes", value: count.min(usize::MAX as u128) as usize, cap });
    }
    let nodes = enumerate_hprimes(m, n)?;
    let k = nodes.len();
    let mut leq = vec![false; k * k];
    for a in 0..k {
        for b in 0..k {
            leq[a * k + b] = hprime_leq(&nodes[a], &nodes[b])?;
        }
    }
    let mut edges = Vec::new();
    for a in 0..k {
        for b in 0..k {
            if a == b || !leq[a * k + b] {
                continue;
            }
            let covered = (0..k).any(|c| c != a && c != b && leq[a * k + c] && leq[c * k + b]);
            if !covered {
                edges.push((a, b));
            }
        }
    }
    Ok(HasseDiagram { nodes, edges })
}

/// Outcome of checking `O_q(M_{m,n}) / P(I, J) = O_q(M_{m',n'}) / I_1'`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoReport {
    pub m: usize,
    pub n: usize,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub m_prime: usize,
    pub n_prime: usize,
    /// The quotient map kills every defining relation of the source.
    pub relations_respected: bool,
    /// The quotient map kills every generator of `P(I, J)` modulo `I_1'`.
    pub ideal_killed: bool,
    /// The section sends each 2x2 minor of the target to a generator of `P(I, J)`.
    pub minors_lifted: bool,
    /// Quotient after section is the identity on target generators.
    pub section_then_quotient: bool,
    /// Section after quotient is the identity on source generators modulo `P(I, J)`.
    pub quotient_then_section: bool,
    pub pass: bool,
}

/// Checks that the quotient map and section are mutually inverse isomorphisms
/// on generators and relations.
pub fn quotient_iso_check(pair: &IdealPair) -> Result<IsoReport> {
    let model = QuotientModel::new(pair)?;
    let (src, tgt) = (model.source.clone(), model.target.clone());

    let mut relations_respected = true;
    for w in pbw_basis(&src, 2) {
        let rev: Word = w.iter().rev().copied().collect();
        if rev == w {
            continue;
        }
        // word minus its rewrite, mapped term by term without normalizing first
        let raw = NCPoly::from_terms(&src, [(rev, LaurentScalar::one())]);
        let relation = raw.try_sub(&raw.normal_form())?;
        relations_respected &= model.project(&relation)?.is_zero();
    }

    let generators = p_ideal_generators(pair)?;
    let mut ideal_killed = true;
    for g in &generators {
        ideal_killed &= model.contains(g)?;
    }

    let mut minors_lifted = true;
    for g in i1_generators(&tgt)? {
        minors_lifted &= generators.contains(&model.lift(&g)?);
    }

    let mut section_then_quotient = true;
    for a in 1..=model.rows.len() {
        for b in 1..=model.cols.len() {
            let x = NCPoly::entries(&tgt, &[(a, b)])?;
            section_then_quotient &= model.project(&model.lift(&x)?)? == x;
        }
    }

    let mut quotient_then_section = true;
    for i in 1..=pair.m {
        for j in 1..=pair.n {
            let x = NCPoly::entries(&src, &[(i, j)])?;
            let back = model.lift(&model.project(&x)?)?;
            quotient_then_section &= if pair.kills(i, j) { back.is_zero() && generators.contains(&x) } else { back == x };
        }
    }

    let pass = relations_respected && ideal_killed && minors_lifted && section_then_quotient && quotient_then_section;
    Ok(IsoReport {
        m: pair.m,
        n: pair.n,
        rows: pair.rows.clone(),
        cols: pair.cols.clone(),
        m_prime: model.rows.len(),
        n_prime: model.cols.len(),
        relations_respected,
        ideal_killed,
        minors_lifted,
        section_then_quotient,
        quotient_then_section,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(enumerate_hprimes(2, 2).unwrap().len(), 10);
        assert_eq!(enumerate_hprimes(2, 3).unwrap().len(), 22);
        assert_eq!(hprime_count(3, 3), Some(50));
        assert!(matches!(enumerate_hprimes(40, 1), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn full_index_set_is_maximal() {
        let p = IdealPair::new(2, 3, &[1, 2], &[]).unwrap();
        assert!(p.is_maximal());
        assert_eq!(p, IdealPair::new(2, 3, &[], &[1, 2, 3]).unwrap());
        assert!(IdealPair::new(2, 3, &[3], &[]).is_err());
    }

    #[test]
    fn labels_and_ids() {
        let bottom = IdealPair::new(2, 2, &[], &[]).unwrap();
        assert_eq!(bottom.label(), "(\u{25a1})");
        assert_eq!(bottom.id(), "P__");
        let p = IdealPair::new(2, 2, &[1], &[2]).unwrap();
        assert_eq!(p.label(), "(\u{2022}\u{2022}/\u{2218}\u{2022})");
        assert_eq!(p.id(), "P_1_2");
        assert_eq!(IdealPair::new(12, 2, &[3, 11], &[]).unwrap().id(), "P_3.11_");
    }

    #[test]
    fn commutation_scalars() {
        let q = LaurentScalar::q_pow;
        assert_eq!(scalar_commutator(1, 1, 1, 2).unwrap(), CommutationScalars { alpha: q(1), beta: q(1) });
        assert_eq!(scalar_commutator(1, 1, 2, 2).unwrap(), CommutationScalars { alpha: q(2), beta: q(1) });
        assert_eq!(scalar_commutator(2, 1, 1, 2).unwrap(), CommutationScalars { alpha: q(0), beta: q(1) });
        assert_eq!(scalar_commutator(2, 1, 1, 1).unwrap(), CommutationScalars { alpha: q(-1), beta: q(0) });
    }

    #[test]
    fn small_hasse() {
        let h = hasse_diagram(2, 2, DEFAULT_HASSE_CAP).unwrap();
        assert_eq!(h.nodes.len(), 10);
        assert_eq!(h.edges.len(), 16);
        assert!(hasse_diagram(3, 3, 10).is_err());
    }

    #[test]
    fn quotient_iso() {
        let r = quotient_iso_check(&IdealPair::new(2, 3, &[1], &[2]).unwrap()).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!((r.m_prime, r.n_prime), (1, 2));
        assert!(quotient_iso_check(&IdealPair::maximal(2, 2)).is_err());
    }
}
