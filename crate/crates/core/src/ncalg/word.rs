use std::borrow::Borrow;
use std::ops::Deref;

/// Position of a generator in its algebra's generator order.
pub type Letter = u16;

/// A word in the generators, stored as letters. The empty word is the unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Self(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Non-decreasing in the generator order, i.e. a PBW word.
    pub fn is_sorted(&self) -> bool {
        self.0.windows(2).all(|p| p[0] <= p[1])
    }

    /// Number of pairs `a < b` of positions with `w[a] > w[b]`.
    pub fn inversions(&self) -> usize {
        let mut n = 0;
        for (a, x) in self.0.iter().enumerate() {
            n += self.0[a + 1..].iter().filter(|y| x > y).count();
        }
        n
    }
}

impl Deref for Word {
    type Target = [Letter];
    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

// Word hashes exactly like its letter slice, so slices can key memo lookups.
impl Borrow<[Letter]> for Word {
    fn borrow(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Self(v)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

/// All non-decreasing words of length `d` over `g` letters, in lexicographic
/// order.
pub fn sorted_words(g: usize, d: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if g == 0 {
        if d == 0 {
            out.push(Word::empty());
        }
        return out;
    }
    let mut cur = vec![0 as Letter; d];
    loop {
        out.push(Word(cur.clone()));
        // advance to the next multiset
        let Some(pos) = cur.iter().rposition(|&x| (x as usize) < g - 1) else {
            break;
        };
        let v = cur[pos] + 1;
        for x in &mut cur[pos..] {
            *x = v;
        }
    }
    out
}
