//! Exact rank and kernel computations over the fraction field of the Laurent
//! scalars.
//!
//! Elimination is fraction-free: rows are cleared to Laurent entries and every
//! row operation is a cross-multiplication followed by removal of the row's
//! content (gcd of its entries), so entries stay polynomial and small.
//! Rows are sparse; matrices arising from graded algebras are block sparse and
//! the elimination never touches the zero entries.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{LaurentScalar, RatScalar, Rational};
use crate::error::{Error, Result};

/// Sparse row with Laurent entries, keyed by column.
pub type SparseRow = BTreeMap<usize, LaurentScalar>;

/// Sparse matrix over the fraction field.
#[derive(Clone, Debug, PartialEq)]
pub struct RatMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<BTreeMap<usize, RatScalar>>,
}

impl RatMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self { nrows, ncols, rows: vec![BTreeMap::new(); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, RatScalar::one());
        }
        m
    }

    /// Builds a matrix from dense rows, which must all have the same length.
    pub fn from_rows(rows: Vec<Vec<RatScalar>>) -> Result<Self> {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), ncols);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::DimensionMismatch { expected: ncols, got: row.len() });
            }
            for (c, v) in row.into_iter().enumerate() {
                m.set(r, c, v);
            }
        }
        Ok(m)
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn set(&mut self, r: usize, c: usize, v: RatScalar) {
        assert!(r < self.nrows && c < self.ncols, "entry ({r},{c}) out of bounds");
        if v.is_zero() {
            self.rows[r].remove(&c);
        } else {
            self.rows[r].insert(c, v);
        }
    }

    pub fn get(&self, r: usize, c: usize) -> RatScalar {
        self.rows[r].get(&c).cloned().unwrap_or_else(RatScalar::zero)
    }

    /// Nonzero entries of row `r`.
    pub fn row(&self, r: usize) -> &BTreeMap<usize, RatScalar> {
        &self.rows[r]
    }

    pub fn nonzero_count(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[LaurentScalar]) -> Result<Vec<RatScalar>> {
        if v.len() != self.ncols {
            return Err(Error::DimensionMismatch { expected: self.ncols, got: v.len() });
        }
        Ok(self
            .rows
            .iter()
            .map(|row| {
                row.iter().fold(RatScalar::zero(), |acc, (&c, a)| {
                    if v[c].is_zero() {
                        acc
                    } else {
                        &acc + &(a * &RatScalar::from(v[c].clone()))
                    }
                })
            })
            .collect())
    }

    /// Evaluates every entry at `q = c`.
    pub fn specialize(&self, c: &Rational) -> Result<Vec<BTreeMap<usize, Rational>>> {
        self.rows
            .iter()
            .map(|row| {
                let mut out = BTreeMap::new();
                for (&col, v) in row {
                    let x = v.specialize(c)?;
                    if !x.is_zero() {
                        out.insert(col, x);
                    }
                }
                Ok(out)
            })
            .collect()
    }

    // Rows with denominators cleared.
    fn integral_rows(&self) -> impl Iterator<Item = SparseRow> + '_ {
        self.rows.iter().map(clear_denominators)
    }
}

fn lcm(a: &LaurentScalar, b: &LaurentScalar) -> LaurentScalar {
    let g = a.gcd(b);
    (a * b).div_exact(&g).expect("gcd divides the product")
}

fn clear_denominators(row: &BTreeMap<usize, RatScalar>) -> SparseRow {
    let common = row.values().fold(LaurentScalar::one(), |acc, v| lcm(&acc, v.denom()));
    row.iter()
        .map(|(&c, v)| {
            let factor = common.div_exact(v.denom()).expect("lcm is a multiple");
            (c, v.numer() * &factor)
        })
        .collect()
}

/// Divides a row by the gcd of its entries and by the unit of its first entry.
fn make_primitive(row: &mut SparseRow) {
    let Some(first) = row.values().next() else {
        return;
    };
    let mut g = first.clone();
    for v in row.values().skip(1) {
        if g.is_one() {
            break;
        }
        g = g.gcd(v);
    }
    if !g.is_one() && !g.is_unit() {
        for v in row.values_mut() {
            *v = v.div_exact(&g).expect("gcd divides every entry");
        }
    }
    let (_, unit) = row.values().next().unwrap().normalize_unit();
    if !unit.is_one() {
        let inv = unit.unit_inverse().unwrap();
        for v in row.values_mut() {
            *v = &*v * &inv;
        }
    }
}

// row <- (p/g) row - (a/g) pivot, where p = pivot[col], a = row[col].
fn eliminate(row: &SparseRow, pivot: &SparseRow, col: usize) -> SparseRow {
    let p = &pivot[&col];
    let a = &row[&col];
    let g = p.gcd(a);
    let (ps, as_) = if g.is_one() {
        (p.clone(), a.clone())
    } else {
        (p.div_exact(&g).unwrap(), a.div_exact(&g).unwrap())
    };
    let mut out: SparseRow = BTreeMap::new();
    for (&c, v) in row {
        out.insert(c, &ps * v);
    }
    for (&c, v) in pivot {
        let t = &as_ * v;
        let e = out.entry(c).or_default();
        *e -= &t;
        if e.is_zero() {
            out.remove(&c);
        }
    }
    out.retain(|_, v| !v.is_zero());
    debug_assert!(!out.contains_key(&col));
    make_primitive(&mut out);
    out
}

/// Incrementally built row echelon form; each stored row has a distinct
/// leading column.
#[derive(Clone, Debug, Default)]
pub struct RowEchelon {
    ncols: usize,
    pivots: BTreeMap<usize, SparseRow>,
}

impl RowEchelon {
    pub fn new(ncols: usize) -> Self {
        Self { ncols, pivots: BTreeMap::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Reduces `row` by the stored pivots until its leading column is not a
    /// pivot column. The result is empty iff `row` lies in the span.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        row.retain(|_, v| !v.is_zero());
        while let Some(&lead) = row.keys().next() {
            match self.pivots.get(&lead) {
                Some(pivot) => row = eliminate(&row, pivot, lead),
                None => break,
            }
        }
        row
    }

    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }

    /// Adds a row; returns whether it increased the rank.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        if let Some(&c) = row.keys().next_back() {
            assert!(c < self.ncols, "column {c} out of range");
        }
        let mut row = self.reduce(row);
        match row.keys().next() {
            Some(&lead) => {
                make_primitive(&mut row);
                self.pivots.insert(lead, row);
                true
            }
            None => false,
        }
    }

    /// Basis of the right kernel of the matrix whose rows were inserted,
    /// one vector per free column, cleared to Laurent entries with content
    /// removed and the free coordinate normalized to a monic polynomial.
    pub fn kernel_basis(&self) -> Vec<Vec<LaurentScalar>> {
        // back-substitute so each pivot column is zero outside its own row
        let mut rows = self.pivots.clone();
        let cols: Vec<usize> = rows.keys().copied().collect();
        for &c in cols.iter().rev() {
            let pivot = rows[&c].clone();
            for &r in cols.iter().filter(|&&r| r < c) {
                if rows[&r].contains_key(&c) {
                    let reduced = eliminate(&rows[&r], &pivot, c);
                    rows.insert(r, reduced);
                }
            }
        }
        let mut out = Vec::new();
        for free in (0..self.ncols).filter(|f| !rows.contains_key(f)) {
            let mut x = vec![RatScalar::zero(); self.ncols];
            x[free] = RatScalar::one();
            for (&c, row) in &rows {
                if let Some(a) = row.get(&free) {
                    let ratio = RatScalar::new(-a, row[&c].clone()).expect("pivot is nonzero");
                    x[c] = ratio;
                }
            }
            let common = x.iter().fold(LaurentScalar::one(), |acc, v| lcm(&acc, v.denom()));
            let mut v: SparseRow = x
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(c, v)| (c, v.numer() * &common.div_exact(v.denom()).unwrap()))
                .collect();
            make_primitive(&mut v);
            let (_, unit) = v[&free].normalize_unit();
            let inv = unit.unit_inverse().unwrap();
            let mut dense = vec![LaurentScalar::zero(); self.ncols];
            for (c, e) in v {
                dense[c] = &e * &inv;
            }
            out.push(dense);
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveMode {
    Rank,
    KernelBasis,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Solution {
    Rank(usize),
    Kernel(Vec<Vec<LaurentScalar>>),
}

fn echelon(m: &RatMatrix) -> RowEchelon {
    let mut e = RowEchelon::new(m.ncols);
    for row in m.integral_rows() {
        e.insert(row);
    }
    e
}

pub fn rs_solve(m: &RatMatrix, mode: SolveMode) -> Solution {
    let e = echelon(m);
    match mode {
        SolveMode::Rank => Solution::Rank(e.rank()),
        SolveMode::KernelBasis => Solution::Kernel(e.kernel_basis()),
    }
}

pub fn rank(m: &RatMatrix) -> usize {
    echelon(m).rank()
}

pub fn kernel_basis(m: &RatMatrix) -> Vec<Vec<LaurentScalar>> {
    echelon(m).kernel_basis()
}

/// Rank of the matrix after specializing `q = c`, by ordinary Gaussian
/// elimination over the rationals.
pub fn rank_at(m: &RatMatrix, c: &Rational) -> Result<usize> {
    let mut pivots: BTreeMap<usize, BTreeMap<usize, Rational>> = BTreeMap::new();
    for mut row in m.specialize(c)? {
        while let Some((&lead, a)) = row.iter().next() {
            let Some(pivot) = pivots.get(&lead) else {
                let inv = a.recip();
                for v in row.values_mut() {
                    *v *= &inv;
                }
                pivots.insert(lead, row);
                break;
            };
            let a = a.clone();
            for (&col, v) in pivot {
                let e = row.entry(col).or_insert_with(Rational::zero);
                *e -= &a * v;
            }
            row.retain(|_, v| !v.is_zero());
        }
    }
    debug_assert!(pivots.values().all(|r| r.values().next().is_some_and(One::is_one)));
    Ok(pivots.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::integer;

    fn ls(k: i32) -> RatScalar {
        LaurentScalar::q_pow(k).into()
    }

    #[test]
    fn identity_has_full_rank_and_trivial_kernel() {
        let m = RatMatrix::identity(3);
        assert_eq!(rs_solve(&m, SolveMode::Rank), Solution::Rank(3));
        assert_eq!(rs_solve(&m, SolveMode::KernelBasis), Solution::Kernel(vec![]));
    }

    #[test]
    fn single_relation_kernel() {
        let m = RatMatrix::from_rows(vec![vec![RatScalar::one(), (-LaurentScalar::q()).into()]]).unwrap();
        let k = kernel_basis(&m);
        assert_eq!(k, vec![vec![LaurentScalar::q(), LaurentScalar::one()]]);
        let image = m.apply(&k[0]).unwrap();
        assert!(image.iter().all(RatScalar::is_zero));
    }

    #[test]
    fn symbolic_rank_drops_under_bad_specialization() {
        // [[1, q], [q, 1]] has determinant 1 - q^2: rank 2 symbolically, 1 at q = 1
        let m = RatMatrix::from_rows(vec![vec![RatScalar::one(), ls(1)], vec![ls(1), RatScalar::one()]])
            .unwrap();
        assert_eq!(rank(&m), 2);
        assert_eq!(rank_at(&m, &integer(1)).unwrap(), 1);
        assert_eq!(rank_at(&m, &integer(3)).unwrap(), 2);
    }

    #[test]
    fn kernel_with_fractions() {
        // rows: [q, 1, 0], [0, q - 1, 1/(q+1)]
        let qp1 = LaurentScalar::q() + LaurentScalar::one();
        let m = RatMatrix::from_rows(vec![
            vec![ls(1), RatScalar::one(), RatScalar::zero()],
            vec![
                RatScalar::zero(),
                (LaurentScalar::q() - LaurentScalar::one()).into(),
                RatScalar::new(LaurentScalar::one(), qp1).unwrap(),
            ],
        ])
        .unwrap();
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 1);
        assert!(m.apply(&k[0]).unwrap().iter().all(RatScalar::is_zero));
        assert!(!k[0][2].is_zero());
    }

    #[test]
    fn echelon_membership() {
        let mut e = RowEchelon::new(3);
        let r1: SparseRow = [(0, LaurentScalar::one()), (1, LaurentScalar::q())].into();
        let r2: SparseRow = [(1, LaurentScalar::one()), (2, LaurentScalar::q_minus_q_inv())].into();
        assert!(e.insert(r1.clone()));
        assert!(e.insert(r2.clone()));
        let combo: SparseRow = [
            (0, LaurentScalar::q()),
            (1, LaurentScalar::q_pow(2) + LaurentScalar::one()),
            (2, LaurentScalar::q_minus_q_inv()),
        ]
        .into();
        assert!(e.contains(combo.clone()));
        assert!(!e.insert(combo));
        assert_eq!(e.rank(), 2);
        assert!(!e.contains([(2, LaurentScalar::one())].into()));
    }
}
