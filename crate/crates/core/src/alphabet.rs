//! Finite alphabets of string tokens, and product alphabets whose symbols
//! are tuples of symbols from factor alphabets.
//!
//! Symbols are referred to by their index in the alphabet (`Sym`). A product
//! alphabet `A1 × … × Ak` numbers its tuples in mixed radix with the first
//! factor most significant, and renders them as `(a1,…,ak)`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

pub type Sym = usize;
pub type Word = Vec<Sym>;

#[derive(Clone)]
pub struct Alphabet {
    symbols: Vec<String>,
    index: HashMap<String, Sym>,
    parts: Vec<Alphabet>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::input("alphabet must be nonempty"));
        }
        let mut index = HashMap::with_capacity(symbols.len());
        for (i, s) in symbols.iter().enumerate() {
            if index.insert(s.clone(), i).is_some() {
                return Err(Error::input(format!("duplicate symbol `{s}` in alphabet")));
            }
        }
        Ok(Alphabet {
            symbols,
            index,
            parts: Vec::new(),
        })
    }

    /// The alphabet `{"0", "1", …, "n-1"}`.
    pub fn digits(n: usize) -> Self {
        Alphabet::new((0..n).map(|i| i.to_string())).expect("n >= 1")
    }

    pub fn product(factors: &[&Alphabet]) -> Self {
        assert!(!factors.is_empty(), "product of no alphabets");
        let sizes: Vec<usize> = factors.iter().map(|a| a.len()).collect();
        let total: usize = sizes.iter().product();
        let mut symbols = Vec::with_capacity(total);
        for idx in 0..total {
            let coords = split_radix(idx, &sizes);
            let tokens: Vec<&str> = coords
                .iter()
                .zip(factors)
                .map(|(&c, a)| a.token(c))
                .collect();
            symbols.push(format!("({})", tokens.join(",")));
        }
        let mut alphabet = Alphabet::new(symbols).expect("product tokens are distinct");
        alphabet.parts = factors.iter().map(|&a| a.clone()).collect();
        alphabet
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn token(&self, sym: Sym) -> &str {
        &self.symbols[sym]
    }

    pub fn index_of(&self, token: &str) -> Option<Sym> {
        self.index.get(token).copied()
    }

    pub fn sym(&self, token: &str) -> Result<Sym> {
        self.index_of(token)
            .ok_or_else(|| Error::UnknownSymbol(token.to_string()))
    }

    /// Factor alphabets of a product alphabet; empty for an atomic one.
    pub fn parts(&self) -> &[Alphabet] {
        &self.parts
    }

    pub fn is_product(&self) -> bool {
        !self.parts.is_empty()
    }

    /// Factor alphabets, or an error naming the expected arity.
    pub fn expect_parts(&self, arity: usize) -> Result<&[Alphabet]> {
        if self.parts.len() == arity {
            Ok(&self.parts)
        } else {
            Err(Error::input(format!(
                "expected a product of {arity} alphabets, found {} factor(s)",
                self.parts.len()
            )))
        }
    }

    /// Coordinates of a product symbol.
    pub fn split(&self, sym: Sym) -> Vec<Sym> {
        split_radix(sym, &self.part_sizes())
    }

    pub fn join(&self, coords: &[Sym]) -> Sym {
        join_radix(coords, &self.part_sizes())
    }

    fn part_sizes(&self) -> Vec<usize> {
        self.parts.iter().map(|a| a.len()).collect()
    }

    /// True when every token is a single character, so words can be written
    /// without separators.
    pub fn is_compact(&self) -> bool {
        self.symbols.iter().all(|s| s.chars().count() == 1)
    }

    /// Parse a word. Compact alphabets read one character per symbol;
    /// otherwise tokens are separated by whitespace.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        if self.is_compact() && !text.contains(char::is_whitespace) {
            text.chars().map(|c| self.sym(&c.to_string())).collect()
        } else {
            text.split_whitespace().map(|t| self.sym(t)).collect()
        }
    }

    pub fn word_from_tokens<S: AsRef<str>>(&self, tokens: &[S]) -> Result<Word> {
        tokens.iter().map(|t| self.sym(t.as_ref())).collect()
    }

    pub fn tokens(&self, word: &[Sym]) -> Vec<String> {
        word.iter().map(|&s| self.symbols[s].clone()).collect()
    }

    pub fn render(&self, word: &[Sym]) -> String {
        let sep = if self.is_compact() { "" } else { " " };
        word.iter()
            .map(|&s| self.symbols[s].as_str())
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// All words of length `n` in lexicographic order.
    pub fn all_words(&self, n: usize) -> impl Iterator<Item = Word> + '_ {
        let sizes = vec![self.len(); n];
        let total = self.len().checked_pow(n as u32).expect("word count overflow");
        (0..total).map(move |i| split_radix(i, &sizes))
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols && self.parts == other.parts
    }
}

impl Eq for Alphabet {}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.symbols).finish()
    }
}

/// Mixed-radix decomposition, most significant digit first.
pub fn split_radix(mut idx: usize, sizes: &[usize]) -> Vec<usize> {
    let mut out = vec![0; sizes.len()];
    for (slot, &size) in out.iter_mut().zip(sizes).rev() {
        *slot = idx % size;
        idx /= size;
    }
    out
}

pub fn join_radix(coords: &[usize], sizes: &[usize]) -> usize {
    coords
        .iter()
        .zip(sizes)
        .fold(0, |acc, (&c, &size)| acc * size + c)
}

/// Index of a word of length `n` over an alphabet of size `base`, first
/// letter most significant.
pub fn word_index(word: &[Sym], base: usize) -> usize {
    word.iter().fold(0, |acc, &s| acc * base + s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_duplicates() {
        assert!(Alphabet::new(Vec::<String>::new()).is_err());
        assert!(Alphabet::new(["a", "b", "a"]).is_err());
    }

    #[test]
    fn product_tokens_and_radix() {
        let a = Alphabet::new(["0", "1"]).unwrap();
        let b = Alphabet::new(["x", "y", "z"]).unwrap();
        let p = Alphabet::product(&[&a, &b]);
        assert_eq!(p.len(), 6);
        assert_eq!(p.token(0), "(0,x)");
        assert_eq!(p.token(5), "(1,z)");
        assert_eq!(p.split(4), vec![1, 1]);
        assert_eq!(p.join(&[1, 1]), 4);
        assert!(!p.is_compact());
    }

    #[test]
    fn parse_compact_and_spaced() {
        let a = Alphabet::digits(2);
        assert_eq!(a.parse_word("0110").unwrap(), vec![0, 1, 1, 0]);
        let p = Alphabet::product(&[&a, &a]);
        assert_eq!(p.parse_word("(0,1) (1,1)").unwrap(), vec![1, 3]);
        assert!(matches!(a.parse_word("012"), Err(Error::UnknownSymbol(_))));
    }

    #[test]
    fn all_words_lexicographic() {
        let a = Alphabet::digits(2);
        let words: Vec<_> = a.all_words(2).collect();
        assert_eq!(words, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }
}
