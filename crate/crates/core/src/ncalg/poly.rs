use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::algebra::{Algebra, Generator, Shape};
use super::rewrite::{Reducer, Strategy};
use super::word::{sorted_words, Word};
use crate::error::{Error, Result};
use crate::scalar::{LaurentScalar, Rational};

/// A finite linear combination of words over a presented algebra.
///
/// The terms need not be in normal form; [`NCPoly::normal_form`] produces the
/// canonical representative, supported on non-decreasing words.
#[derive(Clone)]
pub struct NCPoly {
    algebra: Arc<Algebra>,
    terms: HashMap<Word, LaurentScalar>,
}

impl PartialEq for NCPoly {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra && self.terms == other.terms
    }
}

impl Eq for NCPoly {}

impl NCPoly {
    pub fn zero(algebra: &Arc<Algebra>) -> Self {
        Self { algebra: algebra.clone(), terms: HashMap::new() }
    }

    pub fn one(algebra: &Arc<Algebra>) -> Self {
        Self::constant(algebra, LaurentScalar::one())
    }

    pub fn constant(algebra: &Arc<Algebra>, c: LaurentScalar) -> Self {
        Self::from_terms(algebra, [(Word::empty(), c)])
    }

    pub fn generator(algebra: &Arc<Algebra>, g: Generator) -> Result<Self> {
        Self::monomial(algebra, &[g])
    }

    /// The word `g_1 g_2 ... g_k` with coefficient 1, not normalized.
    pub fn monomial(algebra: &Arc<Algebra>, gens: &[Generator]) -> Result<Self> {
        let w = gens.iter().map(|&g| algebra.letter(g)).collect::<Result<Word>>()?;
        Ok(Self::from_terms(algebra, [(w, LaurentScalar::one())]))
    }

    /// Shorthand for `X[i1,j1] X[i2,j2] ...`.
    pub fn entries(algebra: &Arc<Algebra>, idx: &[(usize, usize)]) -> Result<Self> {
        let gens: Vec<_> = idx.iter().map(|&(row, col)| Generator::Entry { row, col }).collect();
        Self::monomial(algebra, &gens)
    }

    /// Builds a polynomial from (word, coefficient) pairs, summing repeats.
    /// Letters are assumed valid for `algebra`.
    pub fn from_terms<I: IntoIterator<Item = (Word, LaurentScalar)>>(algebra: &Arc<Algebra>, terms: I) -> Self {
        let mut out = Self::zero(algebra);
        for (w, c) in terms {
            out.add_term(w, &c);
        }
        out
    }

    pub(crate) fn from_map(algebra: &Arc<Algebra>, mut terms: HashMap<Word, LaurentScalar>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        Self { algebra: algebra.clone(), terms }
    }

    pub fn add_term(&mut self, w: Word, c: &LaurentScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &LaurentScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> LaurentScalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest word length, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.len()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut lens = self.terms.keys().map(|w| w.len());
        match lens.next() {
            Some(d) => lens.all(|e| e == d),
            None => true,
        }
    }

    /// Supported only on non-decreasing words.
    pub fn is_canonical(&self) -> bool {
        self.terms.keys().all(Word::is_sorted)
    }

    /// Terms in the serialization order: descending lexicographic order of
    /// the generator sequences.
    pub fn sorted_terms(&self) -> Vec<(&Word, &LaurentScalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.cmp(a.0));
        v
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn scale(&self, c: &LaurentScalar) -> Self {
        Self::from_map(&self.algebra, self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect())
    }

    /// Product by concatenation of words, without normalizing.
    pub fn mul_raw(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = Self::zero(&self.algebra);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), &(a * b));
            }
        }
        Ok(out)
    }

    pub fn normal_form(&self) -> Self {
        self.normal_form_with(Strategy::Leftmost)
    }

    pub fn normal_form_with(&self, strategy: Strategy) -> Self {
        let mut r = Reducer::with_strategy(self.algebra.clone(), strategy);
        self.normal_form_by(&mut r)
    }

    /// Normal form using a caller-held reducer (and its memo table).
    pub fn normal_form_by(&self, reducer: &mut Reducer) -> Self {
        assert!(**reducer.algebra() == *self.algebra, "reducer belongs to another algebra");
        let terms = reducer.reduce(self.terms.iter());
        Self::from_map(&self.algebra, terms)
    }

    /// Canonical product.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        Ok(self.mul_raw(other)?.normal_form())
    }

    /// Coefficientwise evaluation at `q = c`.
    pub fn specialize(&self, c: &Rational) -> Result<RationalPoly> {
        let mut terms = HashMap::new();
        for (w, v) in &self.terms {
            let x = v.specialize(c)?;
            if !x.is_zero() {
                terms.insert(w.clone(), x);
            }
        }
        Ok(RationalPoly { algebra: self.algebra.clone(), q: c.clone(), terms })
    }

    /// Applies the algebra homomorphism sending each generator `g` to
    /// `image(g)` in `target`. The result is in normal form.
    pub fn substitute<F>(&self, target: &Arc<Algebra>, mut image: F) -> Result<Self>
    where
        F: FnMut(Generator) -> Result<NCPoly>,
    {
        let mut reducer = target.reducer();
        let mut images: HashMap<u16, NCPoly> = HashMap::new();
        let mut out = Self::zero(target);
        for (w, c) in &self.terms {
            let mut acc = Self::constant(target, c.clone());
            for &l in w.iter() {
                if !images.contains_key(&l) {
                    let img = image(self.algebra.generator(l))?;
                    if *img.algebra != **target {
                        return Err(Error::AlgebraMismatch);
                    }
                    images.insert(l, img);
                }
                acc = acc.mul_raw(&images[&l])?.normal_form_by(&mut reducer);
                if acc.is_zero() {
                    break;
                }
            }
            out = out.try_add(&acc)?;
        }
        Ok(out)
    }

    /// JSON form: a list of `{word, coeff}` objects in descending word order.
    /// Matrix words are lists of `[i, j]` pairs, affine words lists of indices.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.sorted_terms()
                .into_iter()
                .map(|(w, c)| {
                    let word: Vec<Value> = w
                        .iter()
                        .map(|&l| match self.algebra.generator(l) {
                            Generator::Entry { row, col } => json!([row, col]),
                            Generator::Affine(i) => json!(i),
                        })
                        .collect();
                    json!({ "word": word, "coeff": c.to_string() })
                })
                .collect(),
        )
    }

    pub fn from_json(algebra: &Arc<Algebra>, v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Json(m.to_string());
        let items = v.as_array().ok_or_else(|| bad("expected a list of terms"))?;
        let mut out = Self::zero(algebra);
        for item in items {
            let word = item.get("word").and_then(Value::as_array).ok_or_else(|| bad("term without word"))?;
            let coeff: LaurentScalar = item
                .get("coeff")
                .and_then(Value::as_str)
                .ok_or_else(|| bad("term without coeff string"))?
                .parse()?;
            let mut letters = Vec::with_capacity(word.len());
            for g in word {
                let gen = match (g, algebra.shape()) {
                    (Value::Array(p), Shape::QuantumMatrix { .. }) if p.len() == 2 => {
                        let row = p[0].as_u64().ok_or_else(|| bad("bad row index"))? as usize;
                        let col = p[1].as_u64().ok_or_else(|| bad("bad column index"))? as usize;
                        Generator::Entry { row, col }
                    }
                    (Value::Number(i), Shape::QuantumAffine { .. } | Shape::Tensor { .. }) => {
                        Generator::Affine(i.as_u64().ok_or_else(|| bad("bad index"))? as usize)
                    }
                    _ => return Err(bad("generator does not match the algebra")),
                };
                letters.push(algebra.letter(gen)?);
            }
            out.add_term(Word::new(letters), &coeff);
        }
        Ok(out)
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCPoly[{}]({self})", self.algebra)
    }
}

// Writes |c| q^k style coefficient and returns whether the term is negative.
fn coeff_text(c: &LaurentScalar) -> (bool, Option<String>) {
    match c.as_monomial() {
        Some((r, k)) => {
            let neg = r.is_negative();
            let r = r.abs();
            let mut parts = Vec::new();
            if !r.is_one() {
                parts.push(r.to_string());
            }
            match k {
                0 => {}
                1 => parts.push("q".to_string()),
                _ => parts.push(format!("q^{k}")),
            }
            (neg, (!parts.is_empty()).then(|| parts.join("*")))
        }
        None => (false, Some(format!("({c})"))),
    }
}

pub(crate) fn write_terms<'a, I>(f: &mut fmt::Formatter<'_>, algebra: &Algebra, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (&'a Word, (bool, Option<String>))>,
{
    let mut first = true;
    for (w, (neg, coeff)) in terms {
        let mut parts: Vec<String> = coeff.into_iter().collect();
        parts.extend(w.iter().map(|&l| algebra.letter_name(l)));
        let body = if parts.is_empty() { "1".to_string() } else { parts.join("*") };
        match (first, neg) {
            (true, true) => write!(f, "-{body}")?,
            (true, false) => write!(f, "{body}")?,
            (false, true) => write!(f, " - {body}")?,
            (false, false) => write!(f, " + {body}")?,
        }
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// Text form accepted by the expression parser; terms ordered by degree then
/// lexicographically.
impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| (a.0.len(), a.0).cmp(&(b.0.len(), b.0)));
        write_terms(f, &self.algebra, v.into_iter().map(|(w, c)| (w, coeff_text(c))))
    }
}

impl Add for &NCPoly {
    type Output = NCPoly;
    /// Panics if the operands belong to different algebras.
    fn add(self, rhs: &NCPoly) -> NCPoly {
        self.try_add(rhs).expect("algebra mismatch")
    }
}

impl Sub for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        self.try_sub(rhs).expect("algebra mismatch")
    }
}

/// Canonical product; panics if the operands belong to different algebras.
impl Mul for &NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        self.try_mul(rhs).expect("algebra mismatch")
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        NCPoly { algebra: self.algebra.clone(), terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

/// A polynomial with rational coefficients: an element of the algebra
/// specialized at a fixed value of `q`.
#[derive(Clone, Debug)]
pub struct RationalPoly {
    algebra: Arc<Algebra>,
    q: Rational,
    terms: HashMap<Word, Rational>,
}

impl PartialEq for RationalPoly {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra && self.q == other.q && self.terms == other.terms
    }
}

impl RationalPoly {
    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Normal form computed with the relations specialized at `q`.
    pub fn normal_form(&self) -> Result<Self> {
        let mut r = Reducer::specialized(self.algebra.clone(), &self.q, Strategy::Leftmost)?;
        let terms = r.reduce(self.terms.iter());
        Ok(Self { algebra: self.algebra.clone(), q: self.q.clone(), terms })
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| (a.0.len(), a.0).cmp(&(b.0.len(), b.0)));
        write_terms(
            f,
            &self.algebra,
            v.into_iter().map(|(w, c)| {
                let a = c.abs();
                (w, (c.is_negative(), (!a.is_one()).then(|| a.to_string())))
            }),
        )
    }
}

pub fn normal_form(p: &NCPoly) -> NCPoly {
    p.normal_form()
}

/// Canonical product; fails when the operands live in different algebras.
pub fn multiply(a: &NCPoly, b: &NCPoly) -> Result<NCPoly> {
    a.try_mul(b)
}

pub fn specialize_poly(p: &NCPoly, c: &Rational) -> Result<RationalPoly> {
    p.specialize(c)
}

/// Dimension of the degree-`d` component: the number of non-decreasing words
/// of length `d`, `C(g + d - 1, d)` for `g` generators.
pub fn component_dimension(algebra: &Algebra, d: usize) -> u128 {
    let g = algebra.generator_count() as u128;
    let mut c: u128 = 1;
    for k in 1..=d as u128 {
        c = c.checked_mul(g + k - 1).expect("component dimension overflows u128") / k;
    }
    c
}

/// The PBW basis of the degree-`d` component in lexicographic order.
pub fn pbw_basis(algebra: &Algebra, d: usize) -> Vec<Word> {
    sorted_words(algebra.generator_count(), d)
}
