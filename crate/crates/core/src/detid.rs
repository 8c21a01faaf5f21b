//! Quantum minors, the ideal `I_1` generated by the 2x2 quantum minors, and
//! reduction modulo `I_1` onto the spanning set of words
//! `X_{i1 j1} ... X_{il jl}` with `i1 >= ... >= il` and `j1 <= ... <= jl`.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ncalg::{sorted_words, Algebra, Generator, Letter, NCPoly, Word};
use crate::scalar::LaurentScalar;

/// Row and column index sets of a quantum minor, both sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MinorSpec {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl MinorSpec {
    pub fn new(mut rows: Vec<usize>, mut cols: Vec<usize>) -> Result<Self> {
        rows.sort_unstable();
        cols.sort_unstable();
        if rows.windows(2).any(|p| p[0] == p[1]) || cols.windows(2).any(|p| p[0] == p[1]) {
            return Err(Error::InvalidMinor("repeated index".into()));
        }
        if rows.len() != cols.len() {
            return Err(Error::InvalidMinor(format!("{} rows but {} columns", rows.len(), cols.len())));
        }
        if rows.is_empty() {
            return Err(Error::InvalidMinor("empty index sets".into()));
        }
        if rows.contains(&0) || cols.contains(&0) {
            return Err(Error::InvalidMinor("indices are 1-based".into()));
        }
        Ok(Self { rows, cols })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }
}

fn matrix_dims(algebra: &Algebra) -> Result<(usize, usize)> {
    algebra.matrix_dims().ok_or(Error::WrongAlgebra { expected: "a quantum matrix algebra" })
}

fn entry_letter(n: usize, row: usize, col: usize) -> Letter {
    ((row - 1) * n + col - 1) as Letter
}

fn letter_entry(n: usize, l: Letter) -> (usize, usize) {
    let l = l as usize;
    (l / n + 1, l % n + 1)
}

/// All permutations of `0..t` in lexicographic order.
fn permutations(t: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (0..t).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..t).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..t).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

fn inversions(seq: &[usize]) -> usize {
    (0..seq.len()).map(|a| seq[a + 1..].iter().filter(|&&b| b < seq[a]).count()).sum()
}

/// The quantum minor on the given rows and columns: the sum over bijections
/// `sigma` of `(-q)^{l(sigma)} X_{r1, sigma(r1)} ... X_{rt, sigma(rt)}`, rows
/// ascending, `l` the inversion count of the column sequence.
pub fn quantum_minor(algebra: &Arc<Algebra>, spec: &MinorSpec) -> Result<NCPoly> {
    let (m, n) = matrix_dims(algebra)?;
    if spec.rows.last().is_some_and(|&r| r > m) || spec.cols.last().is_some_and(|&c| c > n) {
        return Err(Error::InvalidMinor(format!("indices exceed {m}x{n}")));
    }
    let mut out = NCPoly::zero(algebra);
    for perm in permutations(spec.size()) {
        let word: Word = spec
            .rows
            .iter()
            .zip(&perm)
            .map(|(&r, &p)| entry_letter(n, r, spec.cols[p]))
            .collect();
        out.add_term(word, &LaurentScalar::neg_q_pow(inversions(&perm) as i32));
    }
    Ok(out.normal_form())
}

/// The quantum determinant of `O_q(M_n)`.
pub fn quantum_determinant(algebra: &Arc<Algebra>) -> Result<NCPoly> {
    let (m, n) = matrix_dims(algebra)?;
    if m != n {
        return Err(Error::InvalidMinor(format!("determinant of a non-square {m}x{n} algebra")));
    }
    quantum_minor(algebra, &MinorSpec::new((1..=n).collect(), (1..=n).collect())?)
}

/// All 2x2 quantum minors `X_ij X_ls - q X_is X_lj`, `i < l`, `j < s`, in
/// lexicographic order of `(i, l, j, s)`.
pub fn i1_generators(algebra: &Arc<Algebra>) -> Result<Vec<NCPoly>> {
    let (m, n) = matrix_dims(algebra)?;
    let mut out = Vec::new();
    for i in 1..=m {
        for l in i + 1..=m {
            for j in 1..=n {
                for s in j + 1..=n {
                    out.push(quantum_minor(algebra, &MinorSpec::new(vec![i, l], vec![j, s])?)?);
                }
            }
        }
    }
    Ok(out)
}

/// Generators of the ideal of `t x t` quantum minors (enumeration only).
pub fn minors_of_size(algebra: &Arc<Algebra>, t: usize) -> Result<Vec<NCPoly>> {
    let (m, n) = matrix_dims(algebra)?;
    let subsets = |k: usize, t: usize| -> Vec<Vec<usize>> {
        (0u64..1 << k)
            .filter(|mask| mask.count_ones() as usize == t)
            .map(|mask| (1..=k).filter(|i| mask >> (i - 1) & 1 == 1).collect())
            .collect()
    };
    if t == 0 || t > m.min(n) || m.max(n) > 20 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for rows in subsets(m, t) {
        for cols in subsets(n, t) {
            out.push(quantum_minor(algebra, &MinorSpec::new(rows.clone(), cols)?)?);
        }
    }
    Ok(out)
}

/// Whether `w` has non-increasing rows and non-decreasing columns.
pub fn is_s_word(algebra: &Algebra, w: &Word) -> bool {
    let Some((_, n)) = algebra.matrix_dims() else {
        return false;
    };
    w.windows(2).all(|p| {
        let (i1, j1) = letter_entry(n, p[0]);
        let (i2, j2) = letter_entry(n, p[1]);
        i1 >= i2 && j1 <= j2
    })
}

/// All words of the spanning set of length `d`: row multisets in descending
/// order paired with column multisets in ascending order.
pub fn s_basis(algebra: &Algebra, d: usize) -> Result<Vec<Word>> {
    let (m, n) = matrix_dims(algebra)?;
    let rows = sorted_words(m, d);
    let cols = sorted_words(n, d);
    let mut out = Vec::with_capacity(rows.len() * cols.len());
    for r in &rows {
        for c in &cols {
            out.push(r.iter().rev().zip(c.iter()).map(|(&i, &j)| entry_letter(n, i as usize + 1, j as usize + 1)).collect());
        }
    }
    Ok(out)
}

/// Reduction of one word through the tensor embedding: sort the `y` part
/// descending and the `z` part ascending, collecting `q` powers from
/// `y_b y_a = q^{-1} y_a y_b` (`a < b`), then read the spanning word back.
fn pullback_word(n: usize, w: &Word) -> (i32, Word) {
    let entries: Vec<(usize, usize)> = w.iter().map(|&l| letter_entry(n, l)).collect();
    let mut exp = 0i32;
    for a in 0..entries.len() {
        for b in a + 1..entries.len() {
            // ascending y pair to descending: y_i y_l = q y_l y_i for i < l
            if entries[a].0 < entries[b].0 {
                exp += 1;
            }
            // descending z pair to ascending: z_s z_j = q^{-1} z_j z_s for j < s
            if entries[a].1 > entries[b].1 {
                exp -= 1;
            }
        }
    }
    let mut rows: Vec<usize> = entries.iter().map(|e| e.0).collect();
    let mut cols: Vec<usize> = entries.iter().map(|e| e.1).collect();
    rows.sort_unstable_by(|a, b| b.cmp(a));
    cols.sort_unstable();
    (exp, rows.into_iter().zip(cols).map(|(i, j)| entry_letter(n, i, j)).collect())
}

/// The representative of `p + I_1` in the span of the spanning-set words.
pub fn reduce_mod_i1(p: &NCPoly) -> Result<NCPoly> {
    let (_, n) = matrix_dims(p.algebra())?;
    let mut out: HashMap<Word, LaurentScalar> = HashMap::new();
    for (w, c) in p.terms() {
        let (exp, s) = pullback_word(n, w);
        *out.entry(s).or_default() += &c.shift(exp);
    }
    Ok(NCPoly::from_terms(p.algebra(), out))
}

/// One-word reduction by the inductive case analysis on the first position
/// `r` where rows increase or columns decrease.
fn cases_word(n: usize, w: &Word) -> (i32, Word) {
    let mut e: Vec<(usize, usize)> = w.iter().map(|&l| letter_entry(n, l)).collect();
    let mut exp = 0i32;
    loop {
        let Some(r) = (0..e.len().saturating_sub(1)).find(|&r| e[r].0 < e[r + 1].0 || e[r].1 > e[r + 1].1) else {
            break;
        };
        let ((i, j), (l, s)) = (e[r], e[r + 1]);
        if i < l && j >= s {
            // same column: X_ij X_lj = q X_lj X_ij; otherwise the pair commutes
            if j == s {
                exp += 1;
            }
            e.swap(r, r + 1);
        } else if i == l && j > s {
            // X_ij X_is = q^{-1} X_is X_ij for s < j
            exp -= 1;
            e.swap(r, r + 1);
        } else if i < l && j < s {
            // X_ij X_ls = q X_lj X_is modulo I_1
            exp += 1;
            e[r] = (l, j);
            e[r + 1] = (i, s);
        } else {
            // i > l, j > s: X_ij X_ls = q^{-1} X_is X_lj modulo I_1
            exp -= 1;
            e[r] = (i, s);
            e[r + 1] = (l, j);
        }
    }
    (exp, e.into_iter().map(|(i, j)| entry_letter(n, i, j)).collect())
}

/// Reduction modulo `I_1` by the inductive rewriting of the complete
/// primeness argument. Kept as an independent check of [`reduce_mod_i1`].
pub fn reduce_mod_i1_by_cases(p: &NCPoly) -> Result<NCPoly> {
    let (_, n) = matrix_dims(p.algebra())?;
    let mut out: HashMap<Word, LaurentScalar> = HashMap::new();
    for (w, c) in p.terms() {
        let (exp, s) = cases_word(n, w);
        *out.entry(s).or_default() += &c.shift(exp);
    }
    Ok(NCPoly::from_terms(p.algebra(), out))
}

/// Convenience: `X[row, col]` as a polynomial.
pub fn entry(algebra: &Arc<Algebra>, row: usize, col: usize) -> Result<NCPoly> {
    NCPoly::generator(algebra, Generator::Entry { row, col })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(a: &Arc<Algebra>, idx: &[(usize, usize)]) -> NCPoly {
        NCPoly::entries(a, idx).unwrap()
    }

    #[test]
    fn one_by_one_minor() {
        let a = Algebra::quantum_matrix(2, 3).unwrap();
        let d = quantum_minor(&a, &MinorSpec::new(vec![1], vec![2]).unwrap()).unwrap();
        assert_eq!(d, x(&a, &[(1, 2)]));
    }

    #[test]
    fn two_by_two_determinant() {
        let a = Algebra::quantum_matrix(2, 2).unwrap();
        let d = quantum_determinant(&a).unwrap();
        let want = &x(&a, &[(1, 1), (2, 2)]) - &x(&a, &[(1, 2), (2, 1)]).scale(&LaurentScalar::q());
        assert_eq!(d, want);
    }

    #[test]
    fn three_by_three_determinant_terms() {
        let a = Algebra::quantum_matrix(3, 3).unwrap();
        let d = quantum_determinant(&a).unwrap();
        assert_eq!(d.len(), 6);
        // X11 X23 X32 has one inversion; X13 X22 X31 has three
        assert_eq!(d.coeff(&x(&a, &[(1, 1), (2, 3), (3, 2)]).terms().next().unwrap().0.clone()), -LaurentScalar::q());
        assert_eq!(
            d.coeff(&x(&a, &[(1, 3), (2, 2), (3, 1)]).terms().next().unwrap().0.clone()),
            -LaurentScalar::q_pow(3)
        );
    }

    #[test]
    fn minor_errors() {
        assert!(MinorSpec::new(vec![1, 2], vec![1]).is_err());
        assert!(MinorSpec::new(vec![1, 1], vec![1, 2]).is_err());
        let a = Algebra::quantum_matrix(2, 2).unwrap();
        assert!(quantum_minor(&a, &MinorSpec::new(vec![1, 3], vec![1, 2]).unwrap()).is_err());
        assert!(quantum_determinant(&Algebra::quantum_matrix(2, 3).unwrap()).is_err());
    }

    #[test]
    fn i1_generator_counts() {
        assert!(i1_generators(&Algebra::quantum_matrix(1, 5).unwrap()).unwrap().is_empty());
        let a = Algebra::quantum_matrix(2, 2).unwrap();
        assert_eq!(i1_generators(&a).unwrap(), vec![quantum_determinant(&a).unwrap()]);
        assert_eq!(i1_generators(&Algebra::quantum_matrix(2, 3).unwrap()).unwrap().len(), 3);
        assert_eq!(minors_of_size(&Algebra::quantum_matrix(3, 3).unwrap(), 2).unwrap().len(), 9);
    }

    #[test]
    fn reductions() {
        let a = Algebra::quantum_matrix(2, 2).unwrap();
        assert_eq!(reduce_mod_i1(&x(&a, &[(1, 1), (2, 2)])).unwrap(), x(&a, &[(2, 1), (1, 2)]).scale(&LaurentScalar::q()));
        assert!(reduce_mod_i1(&quantum_determinant(&a).unwrap()).unwrap().is_zero());
        assert_eq!(reduce_mod_i1(&x(&a, &[(1, 2), (2, 1)])).unwrap(), x(&a, &[(2, 1), (1, 2)]));
        for w in [&[(1, 1), (2, 2)][..], &[(1, 2), (2, 1)], &[(2, 2), (1, 1), (1, 2)]] {
            let p = x(&a, w);
            assert_eq!(reduce_mod_i1(&p).unwrap(), reduce_mod_i1_by_cases(&p).unwrap());
        }
    }

    #[test]
    fn spanning_set_counts() {
        let a = Algebra::quantum_matrix(2, 2).unwrap();
        assert_eq!(s_basis(&a, 0).unwrap(), vec![Word::empty()]);
        let s2 = s_basis(&a, 2).unwrap();
        assert_eq!(s2.len(), 9);
        assert!(s2.iter().all(|w| is_s_word(&a, w)));
        assert_eq!(s_basis(&Algebra::quantum_matrix(2, 3).unwrap(), 1).unwrap().len(), 6);
        assert!(!is_s_word(&a, &x(&a, &[(1, 1), (2, 2)]).terms().next().unwrap().0.clone()));
    }

    #[test]
    fn permutation_enumeration() {
        let p = permutations(3);
        assert_eq!(p.len(), 6);
        assert_eq!(p.iter().map(|s| inversions(s)).sum::<usize>(), 9);
    }
}
