use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::rewrite::{Reducer, Rule};
use super::word::{Letter, Word};
use crate::error::{Error, Result};
use crate::scalar::LaurentScalar;

/// A generator of a presented algebra, with 1-based coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Generator {
    /// `X[row, col]` of a quantum matrix algebra.
    Entry { row: usize, col: usize },
    /// The `index`-th generator of a (tensor product of) quantum affine space(s).
    Affine(usize),
}

/// Presentation data of an algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shape {
    /// Quantum `m x n` matrices.
    QuantumMatrix { m: usize, n: usize },
    /// Multiparameter quantum affine space: `y_a y_b = lambda[a][b] y_b y_a`
    /// for `a < b` (0-based). Entries on or below the diagonal are ignored.
    QuantumAffine { dim: usize, lambda: Vec<Vec<LaurentScalar>> },
    /// Tensor product of two quantum affine spaces. Left generators precede
    /// right ones and the two sides commute.
    Tensor { left: Box<Shape>, right: Box<Shape> },
}

/// An immutable presented algebra: generators in their total order together
/// with the rewrite rule for every descending adjacent pair.
///
/// Equality is equality of presentations.
#[derive(Debug)]
pub struct Algebra {
    shape: Shape,
    generators: Vec<Generator>,
    // letters below `split` print as y[..], the rest as z[..]
    split: Option<usize>,
    rules: Vec<Option<Rule<LaurentScalar>>>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.shape == other.shape
    }
}

impl Eq for Algebra {}

fn standard_lambda(dim: usize) -> Vec<Vec<LaurentScalar>> {
    (0..dim)
        .map(|a| {
            (0..dim).map(|b| if a < b { LaurentScalar::q() } else { LaurentScalar::one() }).collect()
        })
        .collect()
}

impl Algebra {
    /// The coordinate ring of quantum `m x n` matrices.
    pub fn quantum_matrix(m: usize, n: usize) -> Result<Arc<Self>> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidShape(format!("quantum matrices need m, n >= 1 (got {m}x{n})")));
        }
        check_letter_count(m * n)?;
        let generators: Vec<Generator> = (1..=m)
            .flat_map(|row| (1..=n).map(move |col| Generator::Entry { row, col }))
            .collect();
        let g = generators.len();
        let mut rules = vec![None; g * g];
        for hi in 0..g {
            for lo in 0..hi {
                rules[hi * g + lo] = Some(matrix_rule(generators[hi], generators[lo], n));
            }
        }
        Ok(Arc::new(Self { shape: Shape::QuantumMatrix { m, n }, generators, split: None, rules }))
    }

    /// Quantum affine space with `y_i y_j = q y_j y_i` for `i < j`.
    pub fn quantum_affine(dim: usize) -> Result<Arc<Self>> {
        Self::multiparameter_affine(dim, standard_lambda(dim))
    }

    /// Multiparameter quantum affine space. Every `lambda[a][b]` with `a < b`
    /// must be a unit (a monomial `c q^k`).
    pub fn multiparameter_affine(dim: usize, lambda: Vec<Vec<LaurentScalar>>) -> Result<Arc<Self>> {
        let shape = Shape::QuantumAffine { dim, lambda };
        let (rules, generators) = affine_rules(&shape)?;
        Ok(Arc::new(Self { shape, generators, split: None, rules }))
    }

    /// Tensor product of two quantum affine spaces, presented as a
    /// multiparameter affine space with trivial cross-commutation.
    pub fn tensor(left: &Algebra, right: &Algebra) -> Result<Arc<Self>> {
        let shape = Shape::Tensor { left: Box::new(left.shape.clone()), right: Box::new(right.shape.clone()) };
        let (rules, generators) = affine_rules(&shape)?;
        Ok(Arc::new(Self { shape, generators, split: Some(left.generator_count()), rules }))
    }

    /// `O_q(k^m) (x) O_q(k^n)`, the target of the map `X_ij -> y_i (x) z_j`.
    pub fn affine_tensor(m: usize, n: usize) -> Result<Arc<Self>> {
        Self::tensor(&*Self::quantum_affine(m)?, &*Self::quantum_affine(n)?)
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator(&self, letter: Letter) -> Generator {
        self.generators[letter as usize]
    }

    /// Position of a generator in the generator order.
    pub fn letter(&self, g: Generator) -> Result<Letter> {
        let idx = match (g, &self.shape) {
            (Generator::Entry { row, col }, Shape::QuantumMatrix { m, n }) => {
                if (1..=*m).contains(&row) && (1..=*n).contains(&col) {
                    Some((row - 1) * n + col - 1)
                } else {
                    None
                }
            }
            (Generator::Affine(i), Shape::QuantumAffine { .. } | Shape::Tensor { .. }) => {
                (1..=self.generators.len()).contains(&i).then(|| i - 1)
            }
            _ => None,
        };
        idx.map(|i| i as Letter).ok_or_else(|| Error::IndexOutOfRange(self.describe(g)))
    }

    /// `(m, n)` for quantum matrix algebras.
    pub fn matrix_dims(&self) -> Option<(usize, usize)> {
        match self.shape {
            Shape::QuantumMatrix { m, n } => Some((m, n)),
            _ => None,
        }
    }

    /// `(left dimension, right dimension)` for tensor products.
    pub fn tensor_dims(&self) -> Option<(usize, usize)> {
        let split = self.split?;
        Some((split, self.generators.len() - split))
    }

    /// For tensor products: whether `letter` lies in the left factor.
    pub fn is_left(&self, letter: Letter) -> Option<bool> {
        self.split.map(|s| (letter as usize) < s)
    }

    /// Human-readable name of a generator (`X[1,2]`, `y[1]`, `z[3]`).
    pub fn describe(&self, g: Generator) -> String {
        match g {
            Generator::Entry { row, col } => format!("X[{row},{col}]"),
            Generator::Affine(i) => match self.split {
                Some(s) if i > s => format!("z[{}]", i - s),
                _ => format!("y[{i}]"),
            },
        }
    }

    pub fn letter_name(&self, letter: Letter) -> String {
        self.describe(self.generator(letter))
    }

    #[cfg(test)]
    pub(crate) fn rule(&self, hi: Letter, lo: Letter) -> &Rule<LaurentScalar> {
        self.rules[hi as usize * self.generators.len() + lo as usize]
            .as_ref()
            .expect("rules exist only for descending pairs")
    }

    pub(crate) fn rules(&self) -> &[Option<Rule<LaurentScalar>>] {
        &self.rules
    }

    /// A rewriting engine over this algebra with its own memo table.
    pub fn reducer(self: &Arc<Self>) -> Reducer<LaurentScalar> {
        Reducer::new(self.clone())
    }

    pub fn validate_word(&self, w: &Word) -> Result<()> {
        match w.iter().find(|&&l| l as usize >= self.generators.len()) {
            Some(l) => Err(Error::IndexOutOfRange(format!("letter {l}"))),
            None => Ok(()),
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.shape {
            Shape::QuantumMatrix { m, n } => write!(f, "O_q(M_{{{m},{n}}})"),
            Shape::QuantumAffine { dim, .. } => write!(f, "O_lambda(k^{dim})"),
            Shape::Tensor { .. } => {
                let (l, r) = self.tensor_dims().unwrap();
                write!(f, "O(k^{l}) (x) O(k^{r})")
            }
        }
    }
}

fn check_letter_count(g: usize) -> Result<()> {
    if g > Letter::MAX as usize {
        return Err(Error::CapExceeded { what: "generator count", value: g, cap: Letter::MAX as usize });
    }
    Ok(())
}

/// Rewrite rule for the descending pair `hi lo` of quantum matrix generators.
fn matrix_rule(hi: Generator, lo: Generator, n: usize) -> Rule<LaurentScalar> {
    let (Generator::Entry { row: l, col: s }, Generator::Entry { row: i, col: j }) = (hi, lo) else {
        unreachable!("matrix algebras only have entry generators")
    };
    let letter = |r: usize, c: usize| ((r - 1) * n + c - 1) as Letter;
    let (hi_l, lo_l) = (letter(l, s), letter(i, j));
    let q_inv = LaurentScalar::q_pow(-1);
    if i == l {
        // same row, j < s: X_is X_ij = q^{-1} X_ij X_is
        Rule::new(vec![(q_inv, [lo_l, hi_l])])
    } else if j == s {
        // same column, i < l: X_lj X_ij = q^{-1} X_ij X_lj
        Rule::new(vec![(q_inv, [lo_l, hi_l])])
    } else if j > s {
        // X_{l,s} X_{i,j} with i < l, s < j: these commute
        Rule::new(vec![(LaurentScalar::one(), [lo_l, hi_l])])
    } else {
        // i < l, j < s: X_ls X_ij = X_ij X_ls - (q - q^{-1}) X_is X_lj
        Rule::new(vec![
            (LaurentScalar::one(), [lo_l, hi_l]),
            (-LaurentScalar::q_minus_q_inv(), [letter(i, s), letter(l, j)]),
        ])
    }
}

// Flattens an affine or tensor-of-affine shape into its full lambda matrix.
fn flat_lambda(shape: &Shape) -> Result<Vec<Vec<LaurentScalar>>> {
    match shape {
        Shape::QuantumAffine { dim, lambda } => {
            if *dim == 0 {
                return Err(Error::InvalidShape("quantum affine space of dimension 0".into()));
            }
            if lambda.len() != *dim || lambda.iter().any(|r| r.len() != *dim) {
                return Err(Error::InvalidShape(format!("parameter matrix must be {dim}x{dim}")));
            }
            Ok(lambda.clone())
        }
        Shape::Tensor { left, right } => {
            let (a, b) = (flat_lambda(left)?, flat_lambda(right)?);
            let (l, r) = (a.len(), b.len());
            let mut out = vec![vec![LaurentScalar::one(); l + r]; l + r];
            for x in 0..l {
                for y in 0..l {
                    out[x][y] = a[x][y].clone();
                }
            }
            for x in 0..r {
                for y in 0..r {
                    out[l + x][l + y] = b[x][y].clone();
                }
            }
            Ok(out)
        }
        Shape::QuantumMatrix { .. } => {
            Err(Error::InvalidShape("tensor factors must be quantum affine spaces".into()))
        }
    }
}

type RuleTable = Vec<Option<Rule<LaurentScalar>>>;

fn affine_rules(shape: &Shape) -> Result<(RuleTable, Vec<Generator>)> {
    let lambda = flat_lambda(shape)?;
    let g = lambda.len();
    check_letter_count(g)?;
    let mut rules = vec![None; g * g];
    for b in 0..g {
        for a in 0..b {
            // y_b y_a = lambda_ab^{-1} y_a y_b
            let inv = lambda[a][b].unit_inverse().ok_or_else(|| {
                Error::InvalidShape(format!("parameter lambda[{}][{}] = {} is not a unit", a + 1, b + 1, lambda[a][b]))
            })?;
            rules[b * g + a] = Some(Rule::new(vec![(inv, [a as Letter, b as Letter])]));
        }
    }
    Ok((rules, (1..=g).map(Generator::Affine).collect()))
}
