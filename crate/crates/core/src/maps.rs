//! The embedding `theta: X_ij -> y_i (x) z_j` of quantum matrices into a
//! tensor product of quantum affine spaces, the grading whose degree-zero
//! part is the image, and the torus weights.

use std::collections::HashMap;
use std::fmt;
use std::ops::Add;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ncalg::{Algebra, Letter, NCPoly, Reducer, Word};
use crate::scalar::LaurentScalar;

/// Grading on the tensor product: `y` letters weigh `+1`, `z` letters `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GammaWeight(pub i64);

impl fmt::Display for GammaWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Torus weight of a word in `O_q(M_{m,n})`: occurrences of each row index and
/// of each column index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TorusWeight {
    pub rows: Vec<u32>,
    pub cols: Vec<u32>,
}

impl TorusWeight {
    pub fn zero(m: usize, n: usize) -> Self {
        Self { rows: vec![0; m], cols: vec![0; n] }
    }
}

impl Add for &TorusWeight {
    type Output = TorusWeight;
    fn add(self, other: &TorusWeight) -> TorusWeight {
        assert_eq!((self.rows.len(), self.cols.len()), (other.rows.len(), other.cols.len()));
        TorusWeight {
            rows: self.rows.iter().zip(&other.rows).map(|(a, b)| a + b).collect(),
            cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a + b).collect(),
        }
    }
}

/// Torus weight of a word of a quantum matrix algebra.
pub fn h_weight(algebra: &Algebra, w: &Word) -> Result<TorusWeight> {
    let (m, n) = algebra.matrix_dims().ok_or(Error::WrongAlgebra { expected: "a quantum matrix algebra" })?;
    algebra.validate_word(w)?;
    let mut out = TorusWeight::zero(m, n);
    for &l in w.iter() {
        out.rows[l as usize / n] += 1;
        out.cols[l as usize % n] += 1;
    }
    Ok(out)
}

/// The common torus weight of the terms of `p`, or `None` if terms disagree
/// or `p` is zero.
pub fn poly_h_weight(p: &NCPoly) -> Result<Option<TorusWeight>> {
    let mut seen: Option<TorusWeight> = None;
    for (w, _) in p.terms() {
        let t = h_weight(p.algebra(), w)?;
        match &seen {
            Some(s) if *s != t => return Ok(None),
            _ => seen = Some(t),
        }
    }
    Ok(seen)
}

fn tensor_dims(algebra: &Algebra) -> Result<(usize, usize)> {
    algebra.tensor_dims().ok_or(Error::WrongAlgebra { expected: "a tensor product of quantum affine spaces" })
}

/// Grading of a tensor-product word.
pub fn gamma_weight(algebra: &Algebra, w: &Word) -> Result<GammaWeight> {
    let (m, _) = tensor_dims(algebra)?;
    algebra.validate_word(w)?;
    Ok(GammaWeight(w.iter().map(|&l| if (l as usize) < m { 1 } else { -1 }).sum()))
}

/// Applies `theta` with a persistent reducer on the tensor product.
pub struct ThetaMap {
    source: Arc<Algebra>,
    target: Arc<Algebra>,
    reducer: Reducer,
}

impl ThetaMap {
    pub fn new(source: &Arc<Algebra>) -> Result<Self> {
        let (m, n) = source.matrix_dims().ok_or(Error::WrongAlgebra { expected: "a quantum matrix algebra" })?;
        let target = Algebra::affine_tensor(m, n)?;
        let reducer = target.reducer();
        Ok(Self { source: source.clone(), target, reducer })
    }

    pub fn source(&self) -> &Arc<Algebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Algebra> {
        &self.target
    }

    /// The raw image word `y_i1 z_j1 y_i2 z_j2 ...` before normalization.
    fn image_word(&self, w: &Word) -> Word {
        let (m, n) = self.source.matrix_dims().unwrap();
        w.iter()
            .flat_map(|&l| {
                let (i, j) = (l as usize / n, l as usize % n);
                [i as Letter, (m + j) as Letter]
            })
            .collect()
    }

    /// Normal form of the image of one word.
    pub fn word(&mut self, w: &Word) -> Arc<Vec<(Word, LaurentScalar)>> {
        let img = self.image_word(w);
        self.reducer.word(&img)
    }

    pub fn apply(&mut self, p: &NCPoly) -> Result<NCPoly> {
        if **p.algebra() != *self.source {
            return Err(Error::AlgebraMismatch);
        }
        let mut acc: HashMap<Word, LaurentScalar> = HashMap::new();
        for (w, c) in p.terms() {
            for (v, d) in self.word(w).iter() {
                *acc.entry(v.clone()).or_default() += &(c * d);
            }
        }
        Ok(NCPoly::from_terms(&self.target, acc))
    }
}

/// `theta(p)` in normal form in `O_q(k^m) (x) O_q(k^n)`.
pub fn theta(p: &NCPoly) -> Result<NCPoly> {
    ThetaMap::new(p.algebra())?.apply(p)
}

/// Result of testing whether an element is homogeneous of grading zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoinvariantCheck {
    pub coinvariant: bool,
    /// The smallest offending word (ascending word order) and its grading.
    pub witness: Option<(String, GammaWeight)>,
}

/// Tests every normal-form term of `p` for grading zero.
pub fn coinvariant_check(p: &NCPoly) -> Result<CoinvariantCheck> {
    let algebra = p.algebra();
    tensor_dims(algebra)?;
    let nf = p.normal_form();
    let mut bad: Option<(Word, GammaWeight)> = None;
    for (w, _) in nf.terms() {
        let g = gamma_weight(algebra, w)?;
        if g.0 != 0 && bad.as_ref().is_none_or(|(b, _)| w < b) {
            bad = Some((w.clone(), g));
        }
    }
    Ok(CoinvariantCheck {
        coinvariant: bad.is_none(),
        witness: bad.map(|(w, g)| (w.iter().map(|&l| algebra.letter_name(l)).collect::<Vec<_>>().join("*"), g)),
    })
}

/// The unique preimage under `theta` of a coinvariant, written on the
/// spanning words (rows descending, columns ascending).
pub fn coinvariant_preimage(p: &NCPoly) -> Result<NCPoly> {
    let (m, n) = tensor_dims(p.algebra())?;
    let check = coinvariant_check(p)?;
    if let Some((witness, weight)) = check.witness {
        return Err(Error::NotCoinvariant { witness, weight: weight.0 });
    }
    let source = Algebra::quantum_matrix(m, n)?;
    let mut out = NCPoly::zero(&source);
    for (w, c) in p.normal_form().terms() {
        let (ys, zs): (Vec<usize>, Vec<usize>) = w.iter().map(|&l| l as usize).partition(|&l| l < m);
        // y_a1 ... y_ar ascending equals q^N times the descending product,
        // N the number of pairs of distinct indices
        let mut pairs = 0i32;
        for a in 0..ys.len() {
            pairs += ys[a + 1..].iter().filter(|&&b| b != ys[a]).count() as i32;
        }
        let word: Word = ys.iter().rev().zip(&zs).map(|(&i, &z)| (i * n + (z - m)) as Letter).collect();
        out.add_term(word, &c.shift(pairs));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::Generator;

    #[test]
    fn theta_of_generators_and_determinant() {
        let a = Algebra::quantum_matrix(2, 2).unwrap();
        let t = theta(&NCPoly::entries(&a, &[(2, 1)]).unwrap()).unwrap();
        let target = Algebra::affine_tensor(2, 2).unwrap();
        assert_eq!(t, NCPoly::monomial(&target, &[Generator::Affine(2), Generator::Affine(3)]).unwrap());
        let d = crate::detid::quantum_determinant(&a).unwrap();
        assert!(theta(&d).unwrap().is_zero());
    }

    #[test]
    fn weights() {
        let a = Algebra::quantum_matrix(2, 3).unwrap();
        let w = NCPoly::entries(&a, &[(1, 2), (2, 2)]).unwrap();
        let word = w.terms().next().unwrap().0.clone();
        assert_eq!(h_weight(&a, &word).unwrap(), TorusWeight { rows: vec![1, 1], cols: vec![0, 2, 0] });
        let t = Algebra::affine_tensor(2, 3).unwrap();
        assert_eq!(gamma_weight(&t, &Word::new(vec![0, 0, 3])).unwrap(), GammaWeight(1));
        assert!(gamma_weight(&a, &word).is_err());
    }

    #[test]
    fn coinvariant_witness_is_smallest_word() {
        let t = Algebra::affine_tensor(2, 2).unwrap();
        let p = &NCPoly::monomial(&t, &[Generator::Affine(1)]).unwrap()
            + &NCPoly::monomial(&t, &[Generator::Affine(3)]).unwrap();
        let c = coinvariant_check(&p).unwrap();
        assert!(!c.coinvariant);
        assert_eq!(c.witness, Some(("y[1]".to_string(), GammaWeight(1))));
        let err = coinvariant_preimage(&p).unwrap_err();
        assert_eq!(err, Error::NotCoinvariant { witness: "y[1]".into(), weight: 1 });
    }

    #[test]
    fn preimage_of_ascending_product() {
        let t = Algebra::affine_tensor(2, 2).unwrap();
        // y1 y2 z1 z2 = q * theta(X21 X12)
        let p = NCPoly::monomial(&t, &[1, 2, 3, 4].map(Generator::Affine)).unwrap();
        let pre = coinvariant_preimage(&p).unwrap();
        let a = Algebra::quantum_matrix(2, 2).unwrap();
        assert_eq!(pre, NCPoly::entries(&a, &[(2, 1), (1, 2)]).unwrap().scale(&LaurentScalar::q()));
        assert_eq!(theta(&pre).unwrap(), p);
    }
}
