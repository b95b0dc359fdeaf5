//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use palrich::{Alphabet, Letter, Morphism, Word};

pub fn bin(s: &str) -> Word {
    Word::parse_in(&Alphabet::binary(), s).unwrap()
}

pub fn m(s: &str) -> Morphism {
    s.parse().unwrap()
}

/// All binary words of length exactly `n`, as letter vectors.
pub fn binary_words(n: usize) -> impl Iterator<Item = Vec<Letter>> {
    (0u32..1 << n).map(move |bits| (0..n).map(|i| (bits >> i) & 1).collect())
}

pub fn is_pal(s: &[Letter]) -> bool {
    s.iter().eq(s.iter().rev())
}

/// Every palindromic factor, including the empty word.
pub fn palindromes(s: &[Letter]) -> BTreeSet<Vec<Letter>> {
    let mut out = BTreeSet::from([Vec::new()]);
    for i in 0..s.len() {
        for j in i + 1..=s.len() {
            if is_pal(&s[i..j]) {
                out.insert(s[i..j].to_vec());
            }
        }
    }
    out
}

pub fn rich(s: &[Letter]) -> bool {
    palindromes(s).len() == s.len() + 1
}

pub fn occurrences(text: &[Letter], pattern: &[Letter]) -> Vec<usize> {
    if pattern.len() > text.len() {
        return Vec::new();
    }
    (0..=text.len() - pattern.len())
        .filter(|&i| &text[i..i + pattern.len()] == pattern)
        .collect()
}

pub fn is_factor(text: &[Letter], pattern: &[Letter]) -> bool {
    !occurrences(text, pattern).is_empty()
}

pub fn factors(s: &[Letter], k: usize) -> BTreeSet<Vec<Letter>> {
    if k > s.len() {
        return BTreeSet::new();
    }
    (0..=s.len() - k).map(|i| s[i..i + k].to_vec()).collect()
}

/// Letter-by-letter application of a morphism given as image vectors.
pub fn apply(images: &[Vec<Letter>], u: &[Letter]) -> Vec<Letter> {
    u.iter()
        .flat_map(|&a| images[a as usize].iter().copied())
        .collect()
}

pub fn images(phi: &Morphism) -> Vec<Vec<Letter>> {
    phi.images().iter().map(|w| w.letters().to_vec()).collect()
}

/// Prefix of `φ^ω(seed)` by naive iteration.
pub fn fixed_point(phi: &Morphism, seed: Letter, n: usize) -> Vec<Letter> {
    let imgs = images(phi);
    let mut u = vec![seed];
    while u.len() < n {
        u = apply(&imgs, &u);
    }
    u.truncate(n);
    u
}

pub fn word_in(alphabet: &std::sync::Arc<Alphabet>, letters: Vec<Letter>) -> Word {
    Word::from_letters(alphabet, letters).unwrap()
}
