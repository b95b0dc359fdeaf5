//! Palindromic richness of finite and infinite words, and morphisms that
//! preserve it.

pub mod class_p;
pub mod error;
pub mod language;
pub mod morphism;
pub mod palindrome;
pub mod transfer;
pub mod word;

pub use error::{Error, Result};
pub use language::{LanguageView, WordSource};
pub use morphism::{ConjugationChain, IncidenceMatrix, Morphism, PerronData};
pub use transfer::{ArExpression, Certificate, CertificateKind};
pub use word::{Alphabet, Letter, Word};
