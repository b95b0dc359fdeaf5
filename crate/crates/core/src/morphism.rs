//! Morphisms of free monoids: application, composition, conjugation chains,
//! incidence matrices, primitivity, Perron data and fixed points.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::word::{primitive_root, Alphabet, Letter, Word};

/// Prefix length cap used when no other cap is configured.
pub const DEFAULT_LENGTH_CAP: usize = 1_000_000;

/// A map from letters of `domain` to words over `codomain`, extended to words.
#[derive(Clone, PartialEq, Eq)]
pub struct Morphism {
    domain: Arc<Alphabet>,
    codomain: Arc<Alphabet>,
    images: Vec<Word>,
}

impl Morphism {
    pub fn new(
        domain: &Arc<Alphabet>,
        codomain: &Arc<Alphabet>,
        images: Vec<Word>,
    ) -> Result<Self> {
        if images.len() != domain.size() {
            return Err(Error::AlphabetMismatch(format!(
                "{} images for {} letters",
                images.len(),
                domain.size()
            )));
        }
        if let Some(bad) = images.iter().find(|w| w.alphabet() != codomain) {
            return Err(Error::AlphabetMismatch(format!(
                "image `{bad}` is not over the codomain"
            )));
        }
        Ok(Morphism {
            domain: Arc::clone(domain),
            codomain: Arc::clone(codomain),
            images,
        })
    }

    /// An endomorphism of `alphabet` from image texts, one per letter in order.
    pub fn from_images(alphabet: &Arc<Alphabet>, images: &[&str]) -> Result<Self> {
        let images = images
            .iter()
            .map(|s| Word::parse_in(alphabet, s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(alphabet, alphabet, images)
    }

    pub(crate) fn from_letter_images(alphabet: &Arc<Alphabet>, images: Vec<Vec<Letter>>) -> Self {
        let images = images
            .into_iter()
            .map(|l| Word::from_letters_unchecked(alphabet, l))
            .collect();
        Morphism {
            domain: Arc::clone(alphabet),
            codomain: Arc::clone(alphabet),
            images,
        }
    }

    pub fn identity(alphabet: &Arc<Alphabet>) -> Self {
        Self::from_letter_images(alphabet, alphabet.letters().map(|a| vec![a]).collect())
    }

    /// Parses `a->image;b->image;...`. The domain is the left-hand symbols in
    /// rule order. The codomain equals the domain when every image symbol is
    /// a domain symbol; otherwise new symbols are appended in order of first
    /// appearance.
    pub fn parse(text: &str, separator: Option<&str>) -> Result<Self> {
        let mut lhs = Vec::new();
        let mut rhs = Vec::new();
        for rule in text.split(';').map(str::trim).filter(|r| !r.is_empty()) {
            let (a, image) = rule
                .split_once("->")
                .ok_or_else(|| Error::Parse(format!("rule `{rule}` lacks `->`")))?;
            let a = a.trim();
            if a.is_empty() {
                return Err(Error::Parse(format!("rule `{rule}` has no letter")));
            }
            lhs.push(a.to_string());
            rhs.push(Alphabet::tokenize(image, separator));
        }
        if lhs.is_empty() {
            return Err(Error::Parse("empty morphism".into()));
        }
        let domain = Alphabet::with_separator(lhs.iter().cloned(), separator)?;
        let mut extra: Vec<String> = Vec::new();
        for token in rhs.iter().flatten() {
            if domain.id(token).is_none() && !extra.iter().any(|e| e == token) {
                extra.push(token.to_string());
            }
        }
        let codomain = if extra.is_empty() {
            Arc::clone(&domain)
        } else {
            Alphabet::with_separator(lhs.iter().cloned().chain(extra), separator)?
        };
        let images = rhs
            .iter()
            .map(|tokens| {
                let letters = tokens
                    .iter()
                    .map(|t| codomain.id(t).expect("symbol registered above"))
                    .collect();
                Word::from_letters_unchecked(&codomain, letters)
            })
            .collect();
        Ok(Morphism {
            domain,
            codomain,
            images,
        })
    }

    pub fn domain(&self) -> &Arc<Alphabet> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<Alphabet> {
        &self.codomain
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn image(&self, a: Letter) -> &Word {
        &self.images[a as usize]
    }

    pub fn is_endomorphism(&self) -> bool {
        self.domain == self.codomain
    }

    pub fn require_endomorphism(&self) -> Result<()> {
        if self.is_endomorphism() {
            Ok(())
        } else {
            Err(Error::NotEndomorphism)
        }
    }

    pub fn is_erasing(&self) -> bool {
        self.images.iter().any(Word::is_empty)
    }

    pub fn require_non_erasing(&self) -> Result<()> {
        match self.images.iter().position(Word::is_empty) {
            Some(a) => Err(Error::Erasing(self.domain.symbol(a as Letter).to_string())),
            None => Ok(()),
        }
    }

    pub fn min_image_len(&self) -> usize {
        self.images.iter().map(Word::len).min().unwrap_or(0)
    }

    pub(crate) fn apply_letters(&self, letters: &[Letter]) -> Vec<Letter> {
        let mut out = Vec::new();
        for &a in letters {
            out.extend_from_slice(self.images[a as usize].letters());
        }
        out
    }

    /// `φ(u)`, the concatenation of the images of the letters of `u`.
    pub fn apply(&self, u: &Word) -> Result<Word> {
        if u.alphabet() != &self.domain {
            return Err(Error::AlphabetMismatch(format!(
                "`{u}` is not over the domain of `{self}`"
            )));
        }
        Ok(Word::from_letters_unchecked(
            &self.codomain,
            self.apply_letters(u.letters()),
        ))
    }

    /// `self ∘ inner`: first `inner`, then `self`.
    pub fn compose(&self, inner: &Morphism) -> Result<Morphism> {
        if inner.codomain != self.domain {
            return Err(Error::AlphabetMismatch(
                "codomain of the inner morphism differs from the outer domain".into(),
            ));
        }
        let images = inner
            .images
            .iter()
            .map(|w| Word::from_letters_unchecked(&self.codomain, self.apply_letters(w.letters())))
            .collect();
        Ok(Morphism {
            domain: Arc::clone(&inner.domain),
            codomain: Arc::clone(&self.codomain),
            images,
        })
    }

    /// `φᵏ` for `k ≥ 0`.
    pub fn power(&self, k: u32) -> Result<Morphism> {
        self.require_endomorphism()?;
        let mut acc = Morphism::identity(&self.domain);
        for _ in 0..k {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }

    pub fn incidence_matrix(&self) -> IncidenceMatrix {
        let rows = self.codomain.size();
        let cols = self.domain.size();
        let mut entries = vec![vec![0u64; cols]; rows];
        for (b, image) in self.images.iter().enumerate() {
            for &a in image.letters() {
                entries[a as usize][b] += 1;
            }
        }
        IncidenceMatrix { entries }
    }

    /// True iff all images are powers of one common primitive word.
    pub fn is_cyclic(&self) -> Result<bool> {
        self.require_non_erasing()?;
        Ok(self.common_root().is_some())
    }

    fn common_root(&self) -> Option<&[Letter]> {
        let root = primitive_root(self.images[0].letters());
        self.images
            .iter()
            .all(|w| primitive_root(w.letters()) == root)
            .then_some(root)
    }

    /// Some power `k ≤ d² − 2d + 2` of the incidence matrix is positive.
    pub fn is_primitive(&self) -> Result<bool> {
        self.require_endomorphism()?;
        let d = self.domain.size();
        let m = self.incidence_matrix().support();
        let bound = (d * d + 2).saturating_sub(2 * d).max(1);
        let mut power = m.clone();
        for _ in 0..bound {
            if power.iter().flatten().all(|&x| x) {
                return Ok(true);
            }
            power = bool_mul(&power, &m);
        }
        Ok(false)
    }

    /// Dominant eigenvalue and normalized Perron eigenvector of the incidence matrix.
    pub fn perron(&self) -> Result<PerronData> {
        if !self.is_primitive()? {
            return Err(Error::NotPrimitive);
        }
        power_iteration(&self.incidence_matrix())
    }

    /// Checks that `φ^ω(seed)` exists: `φ(seed)` starts with `seed` and the
    /// iterates grow without bound.
    pub fn check_substitution(&self, seed: Letter) -> Result<()> {
        self.require_endomorphism()?;
        let fail = |reason: &str| Error::NotSubstitution {
            seed: self.domain.symbol(seed).to_string(),
            reason: reason.to_string(),
        };
        self.require_non_erasing()?;
        let image = self.image(seed);
        if image.first() != Some(seed) {
            return Err(fail("image does not start with the seed"));
        }
        // Non-erasing with φ(a) = a·v, v ≠ ε grows by at least one letter per step.
        if image.len() < 2 {
            return Err(fail("image of the seed is the seed itself"));
        }
        Ok(())
    }

    /// Prefix of length `n` of `φ^ω(seed)`.
    pub fn fixed_point_prefix(&self, seed: Letter, n: usize) -> Result<Word> {
        self.fixed_point_prefix_capped(seed, n, DEFAULT_LENGTH_CAP)
    }

    pub fn fixed_point_prefix_capped(&self, seed: Letter, n: usize, cap: usize) -> Result<Word> {
        self.check_substitution(seed)?;
        if n > cap {
            return Err(Error::LengthCap { needed: n, cap });
        }
        let mut out: Vec<Letter> = self.image(seed).letters().to_vec();
        let mut next = 1;
        while out.len() < n {
            let a = out[next];
            out.extend_from_slice(self.image(a).letters());
            next += 1;
        }
        out.truncate(n);
        Ok(Word::from_letters_unchecked(&self.domain, out))
    }

    /// Leftmost-to-rightmost chain of conjugates of this morphism.
    pub fn conjugation_chain(&self) -> Result<ConjugationChain> {
        ConjugationChain::build(self)
    }

    fn map_images(&self, f: impl Fn(&[Letter]) -> Vec<Letter>) -> Morphism {
        Morphism {
            domain: Arc::clone(&self.domain),
            codomain: Arc::clone(&self.codomain),
            images: self
                .images
                .iter()
                .map(|w| Word::from_letters_unchecked(&self.codomain, f(w.letters())))
                .collect(),
        }
    }

    fn common_first(&self) -> Option<Letter> {
        let c = self.images[0].first()?;
        self.images
            .iter()
            .all(|w| w.first() == Some(c))
            .then_some(c)
    }

    fn common_last(&self) -> Option<Letter> {
        let c = self.images[0].last()?;
        self.images.iter().all(|w| w.last() == Some(c)).then_some(c)
    }

    /// `a ↦ c⁻¹ φ(a) c` for the common first letter `c`.
    pub(crate) fn shift_left(&self) -> Option<(Letter, Morphism)> {
        let c = self.common_first()?;
        Some((
            c,
            self.map_images(|w| {
                let mut v = w[1..].to_vec();
                v.push(c);
                v
            }),
        ))
    }

    /// `a ↦ c φ(a) c⁻¹` for the common last letter `c`.
    pub(crate) fn shift_right(&self) -> Option<(Letter, Morphism)> {
        let c = self.common_last()?;
        Some((
            c,
            self.map_images(|w| {
                let mut v = Vec::with_capacity(w.len());
                v.push(c);
                v.extend_from_slice(&w[..w.len() - 1]);
                v
            }),
        ))
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, image) in self.images.iter().enumerate() {
            if a > 0 {
                f.write_str(";")?;
            }
            write!(f, "{}->{}", self.domain.symbol(a as Letter), image)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Morphism({self})")
    }
}

impl FromStr for Morphism {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Morphism::parse(s, None)
    }
}

impl Serialize for Morphism {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// `M[a][b]` = number of occurrences of letter `a` in `φ(b)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IncidenceMatrix {
    entries: Vec<Vec<u64>>,
}

impl IncidenceMatrix {
    pub fn from_rows(entries: Vec<Vec<u64>>) -> Self {
        IncidenceMatrix { entries }
    }

    pub fn get(&self, a: usize, b: usize) -> u64 {
        self.entries[a][b]
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.entries
    }

    pub fn column_sums(&self) -> Vec<u64> {
        let cols = self.entries.first().map_or(0, Vec::len);
        (0..cols)
            .map(|b| self.entries.iter().map(|row| row[b]).sum())
            .collect()
    }

    pub fn mul(&self, rhs: &IncidenceMatrix) -> IncidenceMatrix {
        let inner = rhs.entries.len();
        let cols = rhs.entries.first().map_or(0, Vec::len);
        let entries = self
            .entries
            .iter()
            .map(|row| {
                (0..cols)
                    .map(|j| (0..inner).map(|k| row[k] * rhs.entries[k][j]).sum())
                    .collect()
            })
            .collect();
        IncidenceMatrix { entries }
    }

    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        self.entries
            .iter()
            .map(|row| row.iter().zip(v).map(|(&m, &x)| m as f64 * x).sum())
            .collect()
    }

    fn support(&self) -> Vec<Vec<bool>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|&x| x > 0).collect())
            .collect()
    }
}

fn bool_mul(a: &[Vec<bool>], b: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| row.iter().enumerate().any(|(k, &x)| x && b[k][j]))
                .collect()
        })
        .collect()
}

/// Dominant eigen-data of a primitive incidence matrix.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PerronData {
    pub eigenvalue: f64,
    /// Positive eigenvector normalized to sum 1; letter densities of fixed points.
    pub densities: Vec<f64>,
    /// `‖Mρ − Λρ‖₂`
    pub residual: f64,
    pub iterations: usize,
}

pub const PERRON_MAX_ITERATIONS: usize = 100_000;
pub const PERRON_RESIDUAL_BOUND: f64 = 1e-9;

fn residual(m: &IncidenceMatrix, v: &[f64], lambda: f64) -> f64 {
    m.apply(v)
        .iter()
        .zip(v)
        .map(|(mv, x)| (mv - lambda * x).powi(2))
        .sum::<f64>()
        .sqrt()
}

/// Power iteration from the all-ones vector.
pub(crate) fn power_iteration(m: &IncidenceMatrix) -> Result<PerronData> {
    let d = m.rows().len();
    let mut v = vec![1.0 / d as f64; d];
    let mut best: Option<PerronData> = None;
    let mut stale = 0;
    for it in 1..=PERRON_MAX_ITERATIONS {
        let w = m.apply(&v);
        let lambda: f64 = w.iter().sum();
        v = w.into_iter().map(|x| x / lambda).collect();
        let lambda: f64 = m.apply(&v).iter().sum();
        let r = residual(m, &v, lambda);
        if best.as_ref().is_none_or(|b| r < b.residual) {
            best = Some(PerronData {
                eigenvalue: lambda,
                densities: v.clone(),
                residual: r,
                iterations: it,
            });
            stale = 0;
        } else {
            stale += 1;
        }
        if r <= 1e-15 * lambda.max(1.0) || stale > 64 {
            break;
        }
    }
    let best = best.expect("at least one iteration");
    if best.residual <= PERRON_RESIDUAL_BOUND {
        Ok(best)
    } else {
        Err(Error::NoConvergence(best.residual))
    }
}

/// Conjugates of an acyclic morphism from the leftmost (position 0) to the
/// rightmost (position `D`).
#[derive(Debug, Clone, Serialize)]
pub struct ConjugationChain {
    pub positions: Vec<Morphism>,
    /// `conjugators[t]` satisfies `positions[t](a)·c = c·positions[0](a)`, `|c| = t`.
    pub conjugators: Vec<Word>,
    /// Position of the morphism the chain was built from.
    pub input_position: usize,
    pub cyclic: bool,
}

impl ConjugationChain {
    fn build(phi: &Morphism) -> Result<Self> {
        phi.require_non_erasing()?;
        if phi.common_root().is_some() {
            return Ok(ConjugationChain {
                positions: Vec::new(),
                conjugators: Vec::new(),
                input_position: 0,
                cyclic: true,
            });
        }

        let mut seen: HashSet<Vec<Vec<Letter>>> = HashSet::new();
        let mut seen_insert =
            |m: &Morphism| seen.insert(m.images.iter().map(|w| w.letters().to_vec()).collect());
        seen_insert(phi);

        // Towards the leftmost end: pop common first letters.
        let mut left = Vec::new();
        let mut popped = Vec::new();
        let mut current = phi.clone();
        while let Some((c, next)) = current.shift_left() {
            if !seen_insert(&next) {
                unreachable!("acyclic morphism revisited a conjugate");
            }
            popped.push(c);
            left.push(next.clone());
            current = next;
        }
        // Towards the rightmost end: pop common last letters.
        let mut right = Vec::new();
        let mut pushed = Vec::new();
        let mut current = phi.clone();
        while let Some((c, next)) = current.shift_right() {
            if !seen_insert(&next) {
                unreachable!("acyclic morphism revisited a conjugate");
            }
            pushed.push(c);
            right.push(next.clone());
            current = next;
        }

        let k = popped.len();
        let mut positions: Vec<Morphism> = left.into_iter().rev().collect();
        positions.push(phi.clone());
        positions.extend(right);

        let codomain = phi.codomain();
        let mut conjugators = Vec::with_capacity(positions.len());
        for t in 0..=k {
            conjugators.push(Word::from_letters_unchecked(
                codomain,
                popped[k - t..].to_vec(),
            ));
        }
        for j in 1..=pushed.len() {
            let mut c: Vec<Letter> = pushed[..j].iter().rev().copied().collect();
            c.extend_from_slice(&popped);
            conjugators.push(Word::from_letters_unchecked(codomain, c));
        }
        Ok(ConjugationChain {
            positions,
            conjugators,
            input_position: k,
            cyclic: false,
        })
    }

    pub fn leftmost(&self) -> Option<&Morphism> {
        self.positions.first()
    }

    pub fn rightmost(&self) -> Option<&Morphism> {
        self.positions.last()
    }

    /// Shift distance `D` between the extremal conjugates.
    pub fn shift(&self) -> usize {
        self.positions.len().saturating_sub(1)
    }

    /// Conjugating word `x` with `φ_R(a)·x = x·φ_L(a)`.
    pub fn extremal_conjugator(&self) -> Option<&Word> {
        self.conjugators.last()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Morphism {
        s.parse().unwrap()
    }

    fn word(phi: &Morphism, s: &str) -> Word {
        Word::parse_in(phi.domain(), s).unwrap()
    }

    #[test]
    fn apply_examples() {
        let fib = m("0->01;1->0");
        assert_eq!(
            fib.apply(&word(&fib, "0001110")).unwrap().to_string(),
            "01010100001"
        );
        let tau = m("0->01;1->02;2->0");
        assert_eq!(tau.apply(&word(&tau, "0")).unwrap().to_string(), "01");
        assert!(fib.apply(&word(&fib, "")).unwrap().is_empty());
        let other = Word::parse("ab", None).unwrap();
        assert!(matches!(fib.apply(&other), Err(Error::AlphabetMismatch(_))));
    }

    #[test]
    fn parse_round_trip() {
        for text in ["0->01;1->0", "r->rss;s->r", "a->aca;b->a;c->b", "0->;1->1"] {
            assert_eq!(m(text).to_string(), text);
        }
        let multi = Morphism::parse("r0->r0 r1;r1->r0", Some(" ")).unwrap();
        assert_eq!(multi.to_string(), "r0->r0 r1;r1->r0");
        assert!(Morphism::parse("0-01", None).is_err());
        assert!(Morphism::parse("0->1;0->0", None).is_err());
    }

    #[test]
    fn cross_alphabet_codomain() {
        let phi = m("a->xy;b->x");
        assert!(!phi.is_endomorphism());
        assert_eq!(phi.codomain().symbols(), &["a", "b", "x", "y"]);
        let zeta = m("0->0100;1->01011;2->010111");
        assert_eq!(zeta.codomain().size(), 3);
    }

    #[test]
    fn compose_examples() {
        let psi0 = m("0->0;1->01");
        let pi = m("0->1;1->0");
        assert_eq!(psi0.compose(&pi).unwrap(), m("0->01;1->0"));
        let tau = m("0->01;1->02;2->0");
        let tau3 = tau.power(3).unwrap();
        assert!(tau3.image(0).to_string().starts_with("0102010"));
        let id = Morphism::identity(tau.domain());
        assert_eq!(tau.compose(&id).unwrap(), tau);
    }

    #[test]
    fn cyclicity() {
        assert!(m("0->00;1->0").is_cyclic().unwrap());
        assert!(m("0->0101;1->01").is_cyclic().unwrap());
        assert!(!m("0->01;1->0").is_cyclic().unwrap());
        assert!(matches!(m("0->;1->0").is_cyclic(), Err(Error::Erasing(_))));
    }

    #[test]
    fn primitivity() {
        assert!(m("0->01;1->0").is_primitive().unwrap());
        assert!(!m("0->0;1->1").is_primitive().unwrap());
        assert!(m("r->rss;s->r").is_primitive().unwrap());
        assert!(!m("0->01;1->1").is_primitive().unwrap());
        assert!(m("a->xy;b->x").is_primitive().is_err());
    }

    #[test]
    fn perron_examples() {
        let alpha = m("r->rrssrssrss;s->r").perron().unwrap();
        assert!((alpha.eigenvalue - (2.0 + 10f64.sqrt())).abs() < 1e-9);
        let beta = m("r->rrss;s->r").perron().unwrap();
        assert!((beta.eigenvalue - (1.0 + 3f64.sqrt())).abs() < 1e-9);
        let xi = m("0->11;1->10").perron().unwrap();
        assert!((xi.eigenvalue - 2.0).abs() < 1e-9);
        assert!((xi.densities[0] - 1.0 / 3.0).abs() < 1e-9);
        assert!((xi.densities[1] - 2.0 / 3.0).abs() < 1e-9);
        assert!(xi.residual <= PERRON_RESIDUAL_BOUND);
        assert_eq!(m("0->0;1->1").perron(), Err(Error::NotPrimitive));
    }

    #[test]
    fn fixed_points() {
        let xi = m("0->11;1->10");
        assert_eq!(
            xi.fixed_point_prefix(1, 19).unwrap().to_string(),
            "1011101010111011101"
        );
        let eta = m("r->rss;s->r");
        assert_eq!(
            eta.fixed_point_prefix(0, 13).unwrap().to_string(),
            "rssrrrssrssrs"
        );
        let sigma = m("0->01;1->0111");
        let shown = "0 1 0111 01 0111 0111 0111 01 0111 01 0111 0111 0111 01".replace(' ', "");
        assert_eq!(
            sigma
                .fixed_point_prefix(0, shown.len())
                .unwrap()
                .to_string(),
            shown
        );
        assert!(matches!(
            xi.fixed_point_prefix(0, 5),
            Err(Error::NotSubstitution { .. })
        ));
        assert!(matches!(
            m("0->0;1->10").fixed_point_prefix(0, 5),
            Err(Error::NotSubstitution { .. })
        ));
        assert_eq!(
            eta.fixed_point_prefix_capped(0, 100, 10),
            Err(Error::LengthCap {
                needed: 100,
                cap: 10
            })
        );
    }

    #[test]
    fn chain_for_sigma() {
        let sigma = m("0->01;1->0111");
        let chain = sigma.conjugation_chain().unwrap();
        assert!(!chain.cyclic);
        assert_eq!(chain.leftmost().unwrap(), &m("0->01;1->1101"));
        assert_eq!(chain.rightmost().unwrap(), &m("0->10;1->1011"));
        assert_eq!(chain.extremal_conjugator().unwrap().to_string(), "101");
        assert_eq!(chain.positions[chain.input_position], sigma);
        assert_eq!(chain.shift(), 3);
    }

    #[test]
    fn chain_for_tribonacci_and_cyclic() {
        let tau = m("0->01;1->02;2->0");
        let chain = tau.conjugation_chain().unwrap();
        assert_eq!(chain.rightmost().unwrap(), &tau);
        assert_eq!(chain.leftmost().unwrap(), &m("0->10;1->20;2->0"));
        let cyc = m("0->zz;1->z").conjugation_chain().unwrap();
        assert!(cyc.cyclic);
        assert!(cyc.positions.is_empty());
    }

    #[test]
    fn incidence_matrix_columns() {
        let phi = m("0->011;1->0");
        let mat = phi.incidence_matrix();
        assert_eq!(mat.rows(), &[vec![1, 1], vec![2, 0]]);
        assert_eq!(mat.column_sums(), vec![3, 1]);
    }
}
