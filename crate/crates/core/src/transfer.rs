//! Certificates that a morphism preserves richness, and constructions of new
//! rich substitutions.

use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::class_p::pret_marker;
use crate::error::{Error, Result};
use crate::language::{derived_alphabet, derived_word, LanguageView, WordSource};
use crate::morphism::{Morphism, DEFAULT_LENGTH_CAP};
use crate::palindrome::{is_rich, richness_report, RichnessReport};
use crate::word::{Alphabet, Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    BinaryPretCriterion,
    ArnouxRauzyExpression,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Evidence {
    #[serde(rename = "phi_R")]
    pub phi_r: Option<Morphism>,
    pub marker: Option<Word>,
    pub test_word: Option<Word>,
    pub test_word_rich: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expression: Option<ArExpression>,
    #[serde(skip)]
    pub test_word_report: Option<RichnessReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Certificate {
    pub subject: Morphism,
    pub kind: CertificateKind,
    pub evidence: Evidence,
    /// Whether the morphism is certified to preserve richness.
    pub verdict: bool,
    pub caveats: Vec<String>,
}

impl Certificate {
    /// Recomputes the certificate from its subject (and expression) and
    /// checks that the stored evidence and verdict are reproduced.
    pub fn reverify(&self) -> Result<bool> {
        let fresh = match self.kind {
            CertificateKind::BinaryPretCriterion => certify_binary(&self.subject)?,
            CertificateKind::ArnouxRauzyExpression => {
                let expr = self
                    .evidence
                    .expression
                    .as_ref()
                    .ok_or_else(|| Error::MalformedExpression("missing expression".into()))?;
                let (morphism, cert) = ar_eval(expr)?;
                if morphism != self.subject {
                    return Ok(false);
                }
                cert
            }
        };
        Ok(&fresh == self)
    }
}

/// Applies the binary criterion: with `φ_R` the rightmost conjugate and `w` its
/// marker, `φ` preserves richness when `φ_R(0)·φ_R(1)·w` is rich.
pub fn certify_binary(phi: &Morphism) -> Result<Certificate> {
    if phi.domain().size() != 2 {
        return Err(Error::NotBinary {
            size: phi.domain().size(),
        });
    }
    phi.require_endomorphism()?;
    let chain = phi.conjugation_chain()?;
    let right = chain.rightmost().ok_or(Error::NotConjugateToPret)?;
    let marker = pret_marker(right).ok_or(Error::NotConjugateToPret)?.marker;
    let test_word = right.image(0).concat(right.image(1)).concat(&marker);
    let report = richness_report(&test_word);
    let verdict = report.rich;
    let caveats = if verdict {
        vec![
            "images of recurrent rich binary words are rich".to_string(),
            "fixed points are rich when the morphism is primitive".to_string(),
        ]
    } else {
        vec!["the sufficient condition fails; preservation is not refuted".to_string()]
    };
    Ok(Certificate {
        subject: phi.clone(),
        kind: CertificateKind::BinaryPretCriterion,
        evidence: Evidence {
            phi_r: Some(right.clone()),
            marker: Some(marker),
            test_word: Some(test_word),
            test_word_rich: Some(verdict),
            expression: None,
            test_word_report: Some(report),
        },
        verdict,
        caveats,
    })
}

/// Elementary Arnoux-Rauzy morphisms and letter permutations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    /// `a ↦ a`, `b ↦ ab`
    Psi(Letter),
    /// `a ↦ a`, `b ↦ ba`
    PsiBar(Letter),
    /// `b ↦ images[b]`
    Perm(Vec<Letter>),
}

/// A composition `g₁ ∘ g₂ ∘ … ∘ g_k` of generators over a fixed alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArExpression {
    alphabet: Arc<Alphabet>,
    generators: Vec<Generator>,
}

impl ArExpression {
    pub fn new(alphabet: &Arc<Alphabet>, generators: Vec<Generator>) -> Result<Self> {
        let d = alphabet.size() as Letter;
        for g in &generators {
            let ok = match g {
                Generator::Psi(a) | Generator::PsiBar(a) => *a < d,
                Generator::Perm(p) => {
                    let mut sorted = p.clone();
                    sorted.sort_unstable();
                    sorted.into_iter().eq(0..d)
                }
            };
            if !ok {
                return Err(Error::MalformedExpression(format!("{g:?}")));
            }
        }
        Ok(ArExpression {
            alphabet: Arc::clone(alphabet),
            generators,
        })
    }

    /// Parses whitespace-separated generators `psi:<a>`, `psibar:<a>` and
    /// `perm:<b0>,<b1>,…`.
    pub fn parse(alphabet: &Arc<Alphabet>, text: &str) -> Result<Self> {
        let letter = |s: &str| {
            alphabet
                .id(s.trim())
                .ok_or_else(|| Error::MalformedExpression(format!("unknown letter `{s}`")))
        };
        let generators = text
            .split_whitespace()
            .map(|token| {
                let (name, arg) = token
                    .split_once(':')
                    .ok_or_else(|| Error::MalformedExpression(format!("`{token}`")))?;
                match name {
                    "psi" => Ok(Generator::Psi(letter(arg)?)),
                    "psibar" => Ok(Generator::PsiBar(letter(arg)?)),
                    "perm" => Ok(Generator::Perm(
                        arg.split(',').map(letter).collect::<Result<_>>()?,
                    )),
                    _ => Err(Error::MalformedExpression(format!(
                        "unknown generator `{name}`"
                    ))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        if generators.is_empty() {
            return Err(Error::MalformedExpression("no generators".into()));
        }
        Self::new(alphabet, generators)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    fn generator_morphism(&self, g: &Generator) -> Morphism {
        let images = self
            .alphabet
            .letters()
            .map(|b| match g {
                Generator::Psi(a) if b == *a => vec![b],
                Generator::Psi(a) => vec![*a, b],
                Generator::PsiBar(a) if b == *a => vec![b],
                Generator::PsiBar(a) => vec![b, *a],
                Generator::Perm(p) => vec![p[b as usize]],
            })
            .collect();
        Morphism::from_letter_images(&self.alphabet, images)
    }

    pub fn evaluate(&self) -> Morphism {
        self.generators
            .iter()
            .fold(Morphism::identity(&self.alphabet), |acc, g| {
                acc.compose(&self.generator_morphism(g))
                    .expect("generators share the alphabet")
            })
    }
}

impl fmt::Display for ArExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match g {
                Generator::Psi(a) => write!(f, "psi:{}", self.alphabet.symbol(*a))?,
                Generator::PsiBar(a) => write!(f, "psibar:{}", self.alphabet.symbol(*a))?,
                Generator::Perm(p) => {
                    let names: Vec<&str> = p.iter().map(|&b| self.alphabet.symbol(b)).collect();
                    write!(f, "perm:{}", names.join(","))?;
                }
            }
        }
        Ok(())
    }
}

impl Serialize for ArExpression {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Evaluates an Arnoux-Rauzy expression and certifies it: such morphisms
/// preserve richness of words whose language is closed under reversal.
pub fn ar_eval(expr: &ArExpression) -> Result<(Morphism, Certificate)> {
    let phi = expr.evaluate();
    let chain = phi.conjugation_chain()?;
    let mut caveats = vec!["applies to words whose language is closed under reversal".to_string()];
    let right = chain.rightmost().cloned();
    let marker = right.as_ref().and_then(pret_marker).map(|w| w.marker);
    if let Some(r) = &right {
        if r != &phi {
            let shift = chain.shift() - chain.input_position;
            let x = chain.extremal_conjugator().expect("acyclic").prefix(shift);
            caveats.push(format!("conjugate to `{r}` with conjugate word `{x}`"));
        }
    }
    let certificate = Certificate {
        subject: phi.clone(),
        kind: CertificateKind::ArnouxRauzyExpression,
        evidence: Evidence {
            phi_r: right,
            marker,
            test_word: None,
            test_word_rich: None,
            expression: Some(expr.clone()),
            test_word_report: None,
        },
        verdict: true,
        caveats,
    };
    Ok((phi, certificate))
}

/// A substitution built from two return words, with its certificate.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Construction {
    pub morphism: Morphism,
    pub certificate: Certificate,
}

/// Builds `ψ(0) = r₀`, `ψ(1) = r₁` for every ordered pair of return words to the
/// palindromic bispecial factor `w` whose last letters differ and whose
/// concatenation is a factor, keeping those with marker `w` and `ψ = ψ_R`.
pub fn construct_from_rich(source: &WordSource, w: &Word) -> Result<Vec<Construction>> {
    let alphabet = source.alphabet();
    if alphabet.size() != 2 {
        return Err(Error::NotBinary {
            size: alphabet.size(),
        });
    }
    let w = w
        .relabel(alphabet)
        .map_err(|_| Error::FactorAbsent(w.to_string()))?;
    if !w.is_palindrome() {
        return Err(Error::NotPalindrome(w.to_string()));
    }
    let view = LanguageView::build(source, w.len() + 2)?;
    let returns = view.returns(&w)?;
    if returns.returns.len() < 2 {
        return Err(Error::TooFewReturnWords(format!(
            "`{w}` has {} return word(s)",
            returns.returns.len()
        )));
    }
    if !view.extension_data(&w)?.is_bispecial() {
        return Err(Error::NotBispecial(w.to_string()));
    }
    let longest = returns.returns.iter().map(Word::len).max().unwrap_or(0);
    let pair_view = LanguageView::build(source, 2 * longest)?;
    let mut out = Vec::new();
    for r0 in &returns.returns {
        for r1 in &returns.returns {
            if r0.last() == r1.last() || !pair_view.contains(&r0.concat(r1)) {
                continue;
            }
            let psi = Morphism::from_letter_images(
                alphabet,
                vec![r0.letters().to_vec(), r1.letters().to_vec()],
            );
            let marker_ok = pret_marker(&psi).is_some_and(|m| m.marker == w);
            let rightmost = psi
                .conjugation_chain()?
                .rightmost()
                .is_some_and(|r| r == &psi);
            if marker_ok && rightmost {
                let certificate = certify_binary(&psi)?;
                out.push(Construction {
                    morphism: psi,
                    certificate,
                });
            }
        }
    }
    if out.is_empty() {
        return Err(Error::TooFewReturnWords(format!(
            "no pair of return words to `{w}` qualifies"
        )));
    }
    Ok(out)
}

/// The substitution fixing the derived word of `φ^ω(seed)` to a palindromic
/// prefix, with the checks performed on it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DerivedSubstitution {
    pub factor: Word,
    pub dictionary: Vec<Word>,
    pub substitution: Morphism,
    /// Length of the prefix on which the fixed point was compared with the derived word.
    pub verified_prefix: usize,
    pub marker: Option<Word>,
    pub eigenvalue: f64,
    pub derived_eigenvalue: f64,
    pub same_eigenvalue: bool,
}

pub const DERIVED_CHECK_LENGTH: usize = 200;

pub fn derived_substitution(phi: &Morphism, seed: Letter, p: &Word) -> Result<DerivedSubstitution> {
    if !phi.is_primitive()? {
        return Err(Error::NotPrimitive);
    }
    let source = WordSource::fixed_point(phi.clone(), seed)?;
    let p = p
        .relabel(phi.domain())
        .map_err(|_| Error::FactorAbsent(p.to_string()))?;
    if !p.is_palindrome() {
        return Err(Error::NotPalindrome(p.to_string()));
    }
    if source.prefix(p.len(), DEFAULT_LENGTH_CAP)? != p {
        return Err(Error::DecompositionFailed(format!("`{p}` is not a prefix")));
    }
    let view = LanguageView::build(&source, p.len().max(1))?;
    let dictionary = view.returns(&p)?.returns;
    let mut images = Vec::with_capacity(dictionary.len());
    for r in &dictionary {
        let t = phi.apply(r)?.concat(&p);
        let occ = t.occurrences(&p);
        if occ.first() != Some(&0) || occ.last() != Some(&(t.len() - p.len())) {
            return Err(Error::DecompositionFailed(t.to_string()));
        }
        let indices = occ
            .windows(2)
            .map(|pair| {
                let piece = &t.letters()[pair[0]..pair[1]];
                dictionary
                    .iter()
                    .position(|d| d.letters() == piece)
                    .map(|i| i as Letter)
                    .ok_or_else(|| Error::DecompositionFailed(t.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        images.push(indices);
    }
    let alphabet = derived_alphabet(dictionary.len());
    let eta = Morphism::from_letter_images(&alphabet, images);
    let n = DERIVED_CHECK_LENGTH;
    let expected = derived_word(&source, &p, n, DEFAULT_LENGTH_CAP)?;
    if eta.fixed_point_prefix(0, n)?.letters() != expected.word.letters() {
        return Err(Error::DecompositionFailed(format!(
            "fixed point of `{eta}` differs from the derived word"
        )));
    }
    let eigenvalue = phi.perron()?.eigenvalue;
    let derived_eigenvalue = eta.perron()?.eigenvalue;
    Ok(DerivedSubstitution {
        factor: p,
        dictionary,
        marker: pret_marker(&eta).map(|w| w.marker),
        substitution: eta,
        verified_prefix: n,
        eigenvalue,
        derived_eigenvalue,
        same_eigenvalue: (eigenvalue - derived_eigenvalue).abs() <= 1e-9,
    })
}

/// The word `0^{a₁} 1^{b₁} ⋯ 0^{a_k} 1^{b_k}` for non-decreasing positive
/// exponent lists, which is always rich.
pub fn gss_word(a: &[usize], b: &[usize]) -> Result<Word> {
    if a.len() != b.len() || a.is_empty() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    for list in [a, b] {
        if list[0] == 0 || list.windows(2).any(|p| p[0] > p[1]) {
            return Err(Error::NotNonDecreasing(list.to_vec()));
        }
    }
    let mut letters = Vec::new();
    for (&x, &y) in a.iter().zip(b) {
        letters.extend(std::iter::repeat_n(0, x));
        letters.extend(std::iter::repeat_n(1, y));
    }
    let word = Word::from_letters_unchecked(&Alphabet::binary(), letters);
    assert!(is_rich(&word), "exponent conditions guarantee richness");
    Ok(word)
}
