//! Alphabets and finite words.
//!
//! Symbols are tokens: a word over single-character symbols is written
//! without delimiters (`0100`), a word over multi-character symbols needs a
//! separator (`r0 r1 r0` with separator `" "`). Internally a [`Word`] stores
//! symbol ids, so renaming the alphabet never touches the letter sequence.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Range;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Symbol id, an index into an [`Alphabet`].
pub type Letter = u32;

/// An ordered set of distinct, non-empty symbol names.
#[derive(Debug, Clone)]
pub struct Alphabet {
    symbols: Vec<String>,
    index: HashMap<String, Letter>,
    separator: Option<String>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::with_separator(symbols, None)
    }

    /// Builds an alphabet whose words print with `separator` between symbols.
    ///
    /// A separator is required as soon as one symbol has more than one
    /// character; `" "` is used when none is given.
    pub fn with_separator<I, S>(symbols: I, separator: Option<&str>) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(symbols.len());
        for (id, s) in symbols.iter().enumerate() {
            if s.is_empty() {
                return Err(Error::Parse("empty symbol name".into()));
            }
            if index.insert(s.clone(), id as Letter).is_some() {
                return Err(Error::Parse(format!("duplicate symbol `{s}`")));
            }
        }
        let separator = match separator {
            Some(sep) if !sep.is_empty() => Some(sep.to_string()),
            _ if symbols.iter().any(|s| s.chars().count() > 1) => Some(" ".to_string()),
            _ => None,
        };
        Ok(Arc::new(Alphabet {
            symbols,
            index,
            separator,
        }))
    }

    /// The alphabet `{0, 1}`.
    pub fn binary() -> Arc<Self> {
        Self::new(["0", "1"]).expect("static alphabet")
    }

    pub fn size(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn symbol(&self, letter: Letter) -> &str {
        &self.symbols[letter as usize]
    }

    pub fn id(&self, symbol: &str) -> Option<Letter> {
        self.index.get(symbol).copied()
    }

    pub fn separator(&self) -> Option<&str> {
        self.separator.as_deref()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        0..self.symbols.len() as Letter
    }

    /// Splits `text` into symbol tokens.
    pub(crate) fn tokenize<'a>(text: &'a str, separator: Option<&str>) -> Vec<&'a str> {
        match separator {
            Some(sep) if !sep.is_empty() => text
                .split(sep)
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .collect(),
            _ => text
                .char_indices()
                .map(|(i, c)| &text[i..i + c.len_utf8()])
                .filter(|t| !t.trim().is_empty())
                .collect(),
        }
    }

    fn render(&self, letters: &[Letter], f: &mut impl fmt::Write) -> fmt::Result {
        let sep = self.separator.as_deref().unwrap_or("");
        for (i, &l) in letters.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            f.write_str(self.symbol(l))?;
        }
        Ok(())
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols
    }
}

impl Eq for Alphabet {}

/// A finite word over an [`Alphabet`]. The empty word is a valid value.
#[derive(Clone)]
pub struct Word {
    alphabet: Arc<Alphabet>,
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty(alphabet: &Arc<Alphabet>) -> Self {
        Word {
            alphabet: Arc::clone(alphabet),
            letters: Vec::new(),
        }
    }

    /// Wraps a letter sequence, checking every id against the alphabet.
    pub fn from_letters(alphabet: &Arc<Alphabet>, letters: Vec<Letter>) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&l| l as usize >= alphabet.size()) {
            return Err(Error::Parse(format!(
                "letter id {bad} outside alphabet of size {}",
                alphabet.size()
            )));
        }
        Ok(Word {
            alphabet: Arc::clone(alphabet),
            letters,
        })
    }

    pub(crate) fn from_letters_unchecked(alphabet: &Arc<Alphabet>, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|&l| (l as usize) < alphabet.size()));
        Word {
            alphabet: Arc::clone(alphabet),
            letters,
        }
    }

    /// Parses a word, inferring the alphabet as the sorted set of its symbols.
    pub fn parse(text: &str, separator: Option<&str>) -> Result<Self> {
        let tokens = Alphabet::tokenize(text, separator);
        let symbols: BTreeSet<&str> = tokens.iter().copied().collect();
        let alphabet = Alphabet::with_separator(symbols, separator)?;
        Self::parse_tokens(&alphabet, &tokens)
    }

    /// Parses a word over a declared alphabet, using its separator.
    pub fn parse_in(alphabet: &Arc<Alphabet>, text: &str) -> Result<Self> {
        let tokens = Alphabet::tokenize(text, alphabet.separator());
        Self::parse_tokens(alphabet, &tokens)
    }

    fn parse_tokens(alphabet: &Arc<Alphabet>, tokens: &[&str]) -> Result<Self> {
        let letters = tokens
            .iter()
            .map(|t| {
                alphabet
                    .id(t)
                    .ok_or_else(|| Error::Parse(format!("unknown symbol `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Word {
            alphabet: Arc::clone(alphabet),
            letters,
        })
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    /// The factor occupying `range`.
    pub fn factor(&self, range: Range<usize>) -> Word {
        Word::from_letters_unchecked(&self.alphabet, self.letters[range].to_vec())
    }

    pub fn prefix(&self, n: usize) -> Word {
        self.factor(0..n.min(self.len()))
    }

    /// Concatenation. Panics if the alphabets differ.
    pub fn concat(&self, other: &Word) -> Word {
        assert!(
            self.alphabet == other.alphabet,
            "concatenating words over different alphabets"
        );
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word::from_letters_unchecked(&self.alphabet, letters)
    }

    /// `self` repeated `n` times.
    pub fn power(&self, n: usize) -> Word {
        Word::from_letters_unchecked(&self.alphabet, self.letters.repeat(n))
    }

    /// The mirror image, letters in reverse order.
    pub fn mirror(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word::from_letters_unchecked(&self.alphabet, letters)
    }

    pub fn is_palindrome(&self) -> bool {
        is_palindrome(&self.letters)
    }

    /// Ascending start indices of `f` in `self`; for `f = ε` every index `0..=|self|`.
    pub fn occurrences(&self, f: &Word) -> Vec<usize> {
        occurrences(&self.letters, &f.letters)
    }

    pub fn contains(&self, f: &Word) -> bool {
        contains(&self.letters, &f.letters)
    }

    pub fn starts_with(&self, f: &Word) -> bool {
        self.letters.starts_with(&f.letters)
    }

    pub fn ends_with(&self, f: &Word) -> bool {
        self.letters.ends_with(&f.letters)
    }

    /// Re-expresses the word over a different alphabet with the same symbols
    /// at possibly different ids.
    pub fn relabel(&self, alphabet: &Arc<Alphabet>) -> Result<Word> {
        let letters = self
            .letters
            .iter()
            .map(|&l| {
                let s = self.alphabet.symbol(l);
                alphabet
                    .id(s)
                    .ok_or_else(|| Error::AlphabetMismatch(format!("symbol `{s}` missing")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Word::from_letters_unchecked(alphabet, letters))
    }
}

/// Shortlex order: by length, then lexicographically by symbol id.
pub fn shortlex(a: &[Letter], b: &[Letter]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

pub(crate) fn is_palindrome(letters: &[Letter]) -> bool {
    let n = letters.len();
    (0..n / 2).all(|i| letters[i] == letters[n - 1 - i])
}

pub(crate) fn occurrences(text: &[Letter], pattern: &[Letter]) -> Vec<usize> {
    if pattern.is_empty() {
        return (0..=text.len()).collect();
    }
    if pattern.len() > text.len() {
        return Vec::new();
    }
    text.windows(pattern.len())
        .enumerate()
        .filter(|(_, w)| *w == pattern)
        .map(|(i, _)| i)
        .collect()
}

pub(crate) fn contains(text: &[Letter], pattern: &[Letter]) -> bool {
    pattern.is_empty() || text.windows(pattern.len()).any(|w| w == pattern)
}

/// Primitive root: the shortest `z` with `letters ∈ z⁺`.
pub(crate) fn primitive_root(letters: &[Letter]) -> &[Letter] {
    let n = letters.len();
    for p in 1..=n {
        if n.is_multiple_of(p) && (p..n).all(|i| letters[i] == letters[i - p]) {
            return &letters[..p];
        }
    }
    letters
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.letters == other.letters && self.alphabet == other.alphabet
    }
}

impl Eq for Word {}

impl Hash for Word {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.letters.hash(state);
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        shortlex(&self.letters, &other.letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.alphabet.render(&self.letters, f)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("ε")
        } else {
            write!(f, "\"{self}\"")
        }
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
