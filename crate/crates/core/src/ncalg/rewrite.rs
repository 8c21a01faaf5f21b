//! Normal forms by rewriting descending adjacent pairs.
//!
//! Each rule replaces a pair `b a` with `b > a` by a combination of pairs
//! with fewer inversions, so rewriting terminates (measure: inversion count,
//! then lexicographic order of the word) and normal words are exactly the
//! non-decreasing ones.

use std::collections::HashMap;
use std::fmt::Debug;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::algebra::Algebra;
use super::word::{Letter, Word};
use crate::error::Result;
use crate::scalar::{LaurentScalar, Rational};

/// Coefficient ring for rewriting.
pub trait Coefficient: Clone + PartialEq + Debug + Send + Sync {
    fn additive_identity() -> Self;
    fn unit() -> Self;
    fn vanishes(&self) -> bool;
    fn accumulate(&mut self, other: &Self);
    fn times(&self, other: &Self) -> Self;
}

impl Coefficient for LaurentScalar {
    fn additive_identity() -> Self {
        LaurentScalar::zero()
    }
    fn unit() -> Self {
        LaurentScalar::one()
    }
    fn vanishes(&self) -> bool {
        LaurentScalar::is_zero(self)
    }
    fn accumulate(&mut self, other: &Self) {
        *self += other;
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
}

impl Coefficient for Rational {
    fn additive_identity() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        One::one()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn accumulate(&mut self, other: &Self) {
        *self += other;
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
}

/// Replacement for one descending pair: a combination of letter pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct Rule<C> {
    terms: Vec<(C, [Letter; 2])>,
}

impl<C> Rule<C> {
    pub fn new(terms: Vec<(C, [Letter; 2])>) -> Self {
        Self { terms }
    }

    pub fn terms(&self) -> &[(C, [Letter; 2])] {
        &self.terms
    }
}

/// Which descending pair to rewrite first.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Strategy {
    #[default]
    Leftmost,
    Rightmost,
}

pub type Expansion<C> = Arc<Vec<(Word, C)>>;

/// Rewriting engine with a memo table of word normal forms.
///
/// A reducer is cheap to create; long computations should keep one around so
/// the memo is shared across calls.
pub struct Reducer<C: Coefficient = LaurentScalar> {
    algebra: Arc<Algebra>,
    rules: Vec<Option<Rule<C>>>,
    strategy: Strategy,
    memo: HashMap<Word, Expansion<C>>,
}

impl Reducer<LaurentScalar> {
    pub fn new(algebra: Arc<Algebra>) -> Self {
        Self::with_strategy(algebra, Strategy::Leftmost)
    }

    pub fn with_strategy(algebra: Arc<Algebra>, strategy: Strategy) -> Self {
        let rules = algebra.rules().to_vec();
        Self { algebra, rules, strategy, memo: HashMap::new() }
    }
}

impl Reducer<Rational> {
    /// Reducer for the algebra specialized at `q = c`.
    pub fn specialized(algebra: Arc<Algebra>, c: &Rational, strategy: Strategy) -> Result<Self> {
        let rules = algebra
            .rules()
            .iter()
            .map(|r| match r {
                None => Ok(None),
                Some(rule) => {
                    let terms = rule
                        .terms()
                        .iter()
                        .map(|(k, pair)| Ok((k.specialize(c)?, *pair)))
                        .collect::<Result<Vec<_>>>()?;
                    Ok(Some(Rule::new(terms)))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { algebra, rules, strategy, memo: HashMap::new() })
    }
}

impl<C: Coefficient> Reducer<C> {
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    fn descent(&self, w: &[Letter]) -> Option<usize> {
        match self.strategy {
            Strategy::Leftmost => w.windows(2).position(|p| p[0] > p[1]),
            Strategy::Rightmost => w.windows(2).rposition(|p| p[0] > p[1]),
        }
    }

    /// Normal form of a single word, as (sorted word, coefficient) pairs in
    /// ascending word order.
    pub fn word(&mut self, w: &[Letter]) -> Expansion<C> {
        let Some(k) = self.descent(w) else {
            return Arc::new(vec![(Word::new(w.to_vec()), C::unit())]);
        };
        if let Some(hit) = self.memo.get(w) {
            return hit.clone();
        }
        let g = self.algebra.generator_count();
        let rule = self.rules[w[k] as usize * g + w[k + 1] as usize]
            .clone()
            .expect("descending pair has a rule");
        let mut acc: HashMap<Word, C> = HashMap::new();
        let mut buf = w.to_vec();
        for (c, [a, b]) in rule.terms {
            buf[k] = a;
            buf[k + 1] = b;
            for (v, d) in self.word(&buf).iter() {
                let t = c.times(d);
                acc.entry(v.clone()).or_insert_with(C::additive_identity).accumulate(&t);
            }
        }
        let mut out: Vec<(Word, C)> = acc.into_iter().filter(|(_, c)| !c.vanishes()).collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        let out = Arc::new(out);
        self.memo.insert(Word::new(w.to_vec()), out.clone());
        out
    }

    /// Normal form of a linear combination of words.
    pub fn reduce<'a, I>(&mut self, terms: I) -> HashMap<Word, C>
    where
        I: IntoIterator<Item = (&'a Word, &'a C)>,
        C: 'a,
    {
        let mut acc: HashMap<Word, C> = HashMap::new();
        for (w, c) in terms {
            if c.vanishes() {
                continue;
            }
            for (v, d) in self.word(w).iter() {
                let t = c.times(d);
                acc.entry(v.clone()).or_insert_with(C::additive_identity).accumulate(&t);
            }
        }
        acc.retain(|_, c| !c.vanishes());
        acc
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;

    #[test]
    fn affine_reordering() {
        let a = Algebra::quantum_affine(3).unwrap();
        let mut r = a.reducer();
        // y3 y2 y1 = q^{-3} y1 y2 y3
        let nf = r.word(&[2, 1, 0]);
        assert_eq!(nf.as_slice(), &[(Word::new(vec![0, 1, 2]), LaurentScalar::q_pow(-3))]);
    }

    #[test]
    fn rational_reducer_matches_specialized_laurent() {
        let a = Algebra::quantum_matrix(2, 2).unwrap();
        let c = rational(3, 2);
        let mut lr = a.reducer();
        let mut rr = Reducer::specialized(a.clone(), &c, Strategy::Rightmost).unwrap();
        let w = [3, 2, 1, 0];
        let lhs: Vec<(Word, Rational)> =
            lr.word(&w).iter().map(|(v, k)| (v.clone(), k.specialize(&c).unwrap())).filter(|(_, k)| !k.is_zero()).collect();
        assert_eq!(lhs, *rr.word(&w));
    }
}
