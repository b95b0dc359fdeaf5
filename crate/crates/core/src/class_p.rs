//! Class P, Class P_ret and markedness of morphisms.
//!
//! A morphism is in class P_ret when some palindrome `w` (its marker) makes
//! every `φ(a)·w` a palindromic complete return word to `w`, and the images
//! are pairwise distinct. Any marker `w` satisfies `φ(a)·w = w·ξ(a)` for all
//! letters, so `w` is one of the words obtained by repeatedly popping the
//! common first letter of the images. That chain is finite for acyclic
//! morphisms, which makes the marker search exhaustive.

use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::word::{Alphabet, Letter, Word};

/// `φ(a) = p·q_a` with `p` and every `q_a` palindromes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassPDecomposition {
    pub p: Word,
    pub q: Vec<Word>,
}

/// The decomposition with the longest valid `p`, if any.
pub fn class_p_decomposition(phi: &Morphism) -> Option<ClassPDecomposition> {
    let images = phi.images();
    let first = images.first()?;
    let common = images.iter().fold(first.len(), |n, w| {
        n.min(
            first
                .letters()
                .iter()
                .zip(w.letters())
                .take_while(|(a, b)| a == b)
                .count(),
        )
    });
    (0..=common).rev().find_map(|len| {
        let p = first.prefix(len);
        if !p.is_palindrome() {
            return None;
        }
        let q: Vec<Word> = images.iter().map(|w| w.factor(len..w.len())).collect();
        q.iter()
            .all(Word::is_palindrome)
            .then_some(ClassPDecomposition { p, q })
    })
}

/// An acyclic morphism is conjugate to a class-P morphism iff
/// `φ_R(a) = mirror(φ_L(a))` for every letter.
pub fn conjugate_to_class_p(phi: &Morphism) -> Result<bool> {
    let chain = phi.conjugation_chain()?;
    let (Some(left), Some(right)) = (chain.leftmost(), chain.rightmost()) else {
        return Err(cyclic_error(phi));
    };
    Ok(left
        .images()
        .iter()
        .zip(right.images())
        .all(|(l, r)| &l.mirror() == r))
}

fn cyclic_error(phi: &Morphism) -> Error {
    let root = phi.images()[0].to_string();
    Error::Cyclic(root)
}

/// Check of `φ(a)·w` for one letter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MarkerCheck {
    pub letter: String,
    pub complete_return: Word,
    pub palindrome: bool,
    pub occurrences: Vec<usize>,
}

impl MarkerCheck {
    fn passes(&self, image_len: usize) -> bool {
        self.palindrome && self.occurrences == [0, image_len]
    }
}

/// Evidence that a morphism is in class P_ret with the given marker.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PretWitness {
    pub marker: Word,
    pub checks: Vec<MarkerCheck>,
    pub injective: bool,
}

/// The conjugating words `w_0 = ε, w_1, w_2, …` obtained by popping common
/// first letters of the images. Empty for erasing morphisms; only `ε` for
/// cyclic ones.
pub fn marker_candidates(phi: &Morphism) -> Vec<Word> {
    if phi.require_non_erasing().is_err() {
        return Vec::new();
    }
    let mut out = vec![Word::empty(phi.codomain())];
    if phi.is_cyclic().unwrap_or(true) {
        return out;
    }
    let mut popped = Vec::new();
    let mut current = phi.clone();
    while let Some((c, next)) = current.shift_left() {
        popped.push(c);
        out.push(Word::from_letters_unchecked(phi.codomain(), popped.clone()));
        current = next;
    }
    out
}

/// Verifies the class P_ret conditions for a proposed marker `w`.
pub fn verify_marker(phi: &Morphism, w: &Word) -> Option<PretWitness> {
    if !w.is_palindrome() || phi.require_non_erasing().is_err() {
        return None;
    }
    let checks: Vec<MarkerCheck> = phi
        .images()
        .iter()
        .enumerate()
        .map(|(a, image)| {
            let complete_return = image.concat(w);
            MarkerCheck {
                letter: phi.domain().symbol(a as Letter).to_string(),
                palindrome: complete_return.is_palindrome(),
                occurrences: complete_return.occurrences(w),
                complete_return,
            }
        })
        .collect();
    let images = phi.images();
    let injective =
        (0..images.len()).all(|i| (i + 1..images.len()).all(|j| images[i] != images[j]));
    let ok = injective
        && checks
            .iter()
            .zip(images)
            .all(|(check, image)| check.passes(image.len()));
    ok.then(|| PretWitness {
        marker: w.clone(),
        checks,
        injective,
    })
}

/// The marker witness if `φ ∈ P_ret`.
pub fn pret_marker(phi: &Morphism) -> Option<PretWitness> {
    marker_candidates(phi)
        .iter()
        .filter(|w| w.is_palindrome())
        .find_map(|w| verify_marker(phi, w))
}

/// `ρ(a) = Lst(φ_R(a))` and `λ(a) = Fst(φ_L(a))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkMaps {
    pub rho: Vec<Letter>,
    pub lambda: Vec<Letter>,
    codomain: Arc<Alphabet>,
}

impl MarkMaps {
    pub fn rho_symbols(&self) -> Vec<&str> {
        self.rho.iter().map(|&l| self.codomain.symbol(l)).collect()
    }

    pub fn lambda_symbols(&self) -> Vec<&str> {
        self.lambda
            .iter()
            .map(|&l| self.codomain.symbol(l))
            .collect()
    }
}

impl Serialize for MarkMaps {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("MarkMaps", 2)?;
        s.serialize_field("rho", &self.rho_symbols())?;
        s.serialize_field("lambda", &self.lambda_symbols())?;
        s.end()
    }
}

pub fn mark_maps(phi: &Morphism) -> Result<MarkMaps> {
    let chain = phi.conjugation_chain()?;
    let (Some(left), Some(right)) = (chain.leftmost(), chain.rightmost()) else {
        return Err(cyclic_error(phi));
    };
    let last = |w: &Word| w.last().expect("non-erasing");
    let first = |w: &Word| w.first().expect("non-erasing");
    Ok(MarkMaps {
        rho: right.images().iter().map(last).collect(),
        lambda: left.images().iter().map(first).collect(),
        codomain: Arc::clone(phi.codomain()),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Markedness {
    pub right_marked: bool,
    pub left_marked: bool,
    pub marked: bool,
    pub well_marked: bool,
}

fn injective(map: &[Letter]) -> bool {
    let mut seen = map.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len() == map.len()
}

pub fn markedness(phi: &Morphism) -> Result<Markedness> {
    let maps = mark_maps(phi)?;
    let right_marked = injective(&maps.rho);
    let left_marked = injective(&maps.lambda);
    let is_identity = |map: &[Letter]| {
        map.iter()
            .enumerate()
            .all(|(a, &b)| phi.domain().symbol(a as Letter) == phi.codomain().symbol(b))
    };
    let marked = right_marked && left_marked;
    Ok(Markedness {
        right_marked,
        left_marked,
        marked,
        well_marked: marked && is_identity(&maps.rho) && is_identity(&maps.lambda),
    })
}

/// Smallest `k ≥ 1` with `φᵏ` well-marked, for right-marked `φ ∈ P_ret`.
pub fn well_marked_power(phi: &Morphism) -> Result<u32> {
    phi.require_endomorphism()?;
    if pret_marker(phi).is_none() {
        return Err(Error::NotPret);
    }
    if !markedness(phi)?.right_marked {
        return Err(Error::NotRightMarked);
    }
    let d = phi.domain().size();
    let cap: usize = (1..=d).product();
    let mut power = phi.clone();
    for k in 1..=cap {
        if markedness(&power)?.well_marked {
            return Ok(k as u32);
        }
        power = phi.compose(&power)?;
    }
    Err(Error::NoWellMarkedPower(cap))
}
