//! Horizon-bounded views of the factor language of a word source.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::morphism::{Morphism, DEFAULT_LENGTH_CAP};
use crate::word::{shortlex, Alphabet, Letter, Word};

/// A finite or infinite word that can be expanded to any prefix length.
#[derive(Debug, Clone, PartialEq)]
pub enum WordSource {
    Finite(Word),
    /// `preperiod · block^ω`
    Periodic {
        block: Word,
        preperiod: Word,
    },
    /// `φ^ω(seed)`
    FixedPoint {
        morphism: Morphism,
        seed: Letter,
    },
    /// `φ(inner)`
    Image {
        morphism: Morphism,
        inner: Box<WordSource>,
    },
}

impl WordSource {
    pub fn finite(word: Word) -> Self {
        WordSource::Finite(word)
    }

    pub fn periodic(block: Word, preperiod: Option<Word>) -> Result<Self> {
        if block.is_empty() {
            return Err(Error::EmptyWord("periodic block"));
        }
        let preperiod = match preperiod {
            Some(p) => p.relabel(block.alphabet())?,
            None => Word::empty(block.alphabet()),
        };
        Ok(WordSource::Periodic { block, preperiod })
    }

    pub fn fixed_point(morphism: Morphism, seed: Letter) -> Result<Self> {
        morphism.check_substitution(seed)?;
        Ok(WordSource::FixedPoint { morphism, seed })
    }

    pub fn image(morphism: Morphism, inner: WordSource) -> Result<Self> {
        morphism.require_non_erasing()?;
        for symbol in inner.alphabet().symbols() {
            if morphism.domain().id(symbol).is_none() {
                return Err(Error::AlphabetMismatch(format!(
                    "symbol `{symbol}` is outside the morphism's domain"
                )));
            }
        }
        Ok(WordSource::Image {
            morphism,
            inner: Box::new(inner),
        })
    }

    /// Parses `finite:<w>`, `periodic:<block>[+<pre>]`, `fix:<morphism>@<seed>`
    /// or `img:<morphism>(<source>)`.
    pub fn parse(text: &str, separator: Option<&str>) -> Result<Self> {
        let text = text.trim();
        let (kind, body) = text
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("source `{text}` lacks a kind prefix")))?;
        match kind {
            "finite" => Ok(WordSource::Finite(Word::parse(body, separator)?)),
            "periodic" => {
                let (block, pre) = match body.split_once('+') {
                    Some((b, p)) => (b, Some(p)),
                    None => (body, None),
                };
                let mut symbols = BTreeSet::new();
                for part in std::iter::once(block).chain(pre) {
                    symbols.extend(Alphabet::tokenize(part, separator));
                }
                let alphabet = Alphabet::with_separator(symbols, separator)?;
                let block = Word::parse_in(&alphabet, block)?;
                let pre = pre.map(|p| Word::parse_in(&alphabet, p)).transpose()?;
                WordSource::periodic(block, pre)
            }
            "fix" => {
                let (spec, seed) = body
                    .rsplit_once('@')
                    .ok_or_else(|| Error::Parse(format!("`{body}` lacks `@<seed>`")))?;
                let morphism = Morphism::parse(spec, separator)?;
                let seed = seed.trim();
                let seed = morphism
                    .domain()
                    .id(seed)
                    .ok_or_else(|| Error::Parse(format!("seed `{seed}` is not a domain letter")))?;
                WordSource::fixed_point(morphism, seed)
            }
            "img" => {
                let open = body
                    .find('(')
                    .filter(|_| body.ends_with(')'))
                    .ok_or_else(|| {
                        Error::Parse(format!("`{body}` is not `<morphism>(<source>)`"))
                    })?;
                let morphism = Morphism::parse(&body[..open], separator)?;
                let inner = WordSource::parse(&body[open + 1..body.len() - 1], separator)?;
                WordSource::image(morphism, inner)
            }
            other => Err(Error::Parse(format!("unknown source kind `{other}`"))),
        }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        match self {
            WordSource::Finite(w) => w.alphabet(),
            WordSource::Periodic { block, .. } => block.alphabet(),
            WordSource::FixedPoint { morphism, .. } => morphism.domain(),
            WordSource::Image { morphism, .. } => morphism.codomain(),
        }
    }

    pub fn is_finite(&self) -> bool {
        match self {
            WordSource::Finite(_) => true,
            WordSource::Image { inner, .. } => inner.is_finite(),
            _ => false,
        }
    }

    /// The first `n` letters, or the whole word if it is finite and shorter.
    pub fn prefix(&self, n: usize, cap: usize) -> Result<Word> {
        if n > cap {
            return Err(Error::LengthCap { needed: n, cap });
        }
        match self {
            WordSource::Finite(w) => Ok(w.prefix(n.min(w.len()))),
            WordSource::Periodic { block, preperiod } => {
                let letters: Vec<Letter> = preperiod
                    .letters()
                    .iter()
                    .chain(block.letters().iter().cycle())
                    .take(n)
                    .copied()
                    .collect();
                Ok(Word::from_letters_unchecked(block.alphabet(), letters))
            }
            WordSource::FixedPoint { morphism, seed } => {
                morphism.fixed_point_prefix_capped(*seed, n, cap)
            }
            WordSource::Image { morphism, inner } => {
                let m = n.div_ceil(morphism.min_image_len()).max(1);
                let u = inner.prefix(m, cap)?.relabel(morphism.domain())?;
                let mut letters = morphism.apply_letters(u.letters());
                letters.truncate(n);
                Ok(Word::from_letters_unchecked(morphism.codomain(), letters))
            }
        }
    }
}

impl fmt::Display for WordSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordSource::Finite(w) => write!(f, "finite:{w}"),
            WordSource::Periodic { block, preperiod } if preperiod.is_empty() => {
                write!(f, "periodic:{block}")
            }
            WordSource::Periodic { block, preperiod } => write!(f, "periodic:{block}+{preperiod}"),
            WordSource::FixedPoint { morphism, seed } => {
                write!(f, "fix:{morphism}@{}", morphism.domain().symbol(*seed))
            }
            WordSource::Image { morphism, inner } => write!(f, "img:{morphism}({inner})"),
        }
    }
}

impl std::str::FromStr for WordSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        WordSource::parse(s, None)
    }
}

/// Lengths of the factor sets of `letters` for every length up to `h`.
fn factor_set_sizes(letters: &[Letter], h: usize) -> Vec<usize> {
    (0..=h)
        .map(|k| match k {
            0 => 1,
            k if k > letters.len() => 0,
            k => letters.windows(k).collect::<HashSet<_>>().len(),
        })
        .collect()
}

fn factor_sets(letters: &[Letter], h: usize) -> Vec<HashSet<Vec<Letter>>> {
    (0..=h)
        .map(|k| match k {
            0 => HashSet::from([Vec::new()]),
            k if k > letters.len() => HashSet::new(),
            k => letters
                .windows(k)
                .collect::<HashSet<_>>()
                .into_iter()
                .map(<[Letter]>::to_vec)
                .collect(),
        })
        .collect()
}

/// Factors of length `0..=horizon` of a source, read off a generated prefix.
#[derive(Debug, Clone)]
pub struct LanguageView {
    source: WordSource,
    horizon: usize,
    cap: usize,
    factors: Vec<HashSet<Vec<Letter>>>,
    exact: Vec<bool>,
    prefix: Word,
}

impl LanguageView {
    pub fn build(source: &WordSource, horizon: usize) -> Result<Self> {
        Self::build_with_cap(source, horizon, DEFAULT_LENGTH_CAP)
    }

    pub fn build_with_cap(source: &WordSource, horizon: usize, cap: usize) -> Result<Self> {
        if horizon == 0 {
            return Err(Error::HorizonTooSmall { needed: 1, horizon });
        }
        let (prefix, exact) = match source {
            WordSource::Finite(w) => (w.clone(), false),
            WordSource::Periodic { block, preperiod } => {
                let n = preperiod.len() + block.len() + horizon;
                (source.prefix(n, cap.max(n))?, true)
            }
            WordSource::FixedPoint { morphism, seed } => {
                (Self::stable_iterate(morphism, *seed, horizon, cap)?, true)
            }
            WordSource::Image { morphism, inner } => {
                let m = (horizon - 1).div_ceil(morphism.min_image_len()) + 1;
                let inner_view = LanguageView::build_with_cap(inner, m, cap)?;
                let u = inner_view.prefix.relabel(morphism.domain())?;
                let letters = morphism.apply_letters(u.letters());
                if letters.len() > cap {
                    return Err(Error::LengthCap {
                        needed: letters.len(),
                        cap,
                    });
                }
                let exact = inner_view.is_exact(m);
                (
                    Word::from_letters_unchecked(morphism.codomain(), letters),
                    exact,
                )
            }
        };
        let factors = factor_sets(prefix.letters(), horizon);
        let mut flags = vec![exact; horizon + 1];
        flags[0] = true;
        Ok(LanguageView {
            source: source.clone(),
            horizon,
            cap,
            factors,
            exact: flags,
            prefix,
        })
    }

    /// Iterates `φ` on the seed until the factor sets up to `horizon` agree for
    /// two consecutive iterates. Since a factor of length `h` of `φ(x)` lies in
    /// the image of a factor of `x` of length at most `h`, equality at one step
    /// persists forever.
    fn stable_iterate(phi: &Morphism, seed: Letter, horizon: usize, cap: usize) -> Result<Word> {
        phi.check_substitution(seed)?;
        let mut current = phi.image(seed).letters().to_vec();
        let mut sizes = factor_set_sizes(&current, horizon);
        loop {
            let next = phi.apply_letters(&current);
            if next.len() > cap {
                return Err(Error::LengthCap {
                    needed: next.len(),
                    cap,
                });
            }
            let next_sizes = factor_set_sizes(&next, horizon);
            if next_sizes == sizes {
                return Ok(Word::from_letters_unchecked(phi.domain(), next));
            }
            current = next;
            sizes = next_sizes;
        }
    }

    pub fn source(&self) -> &WordSource {
        &self.source
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        self.prefix.alphabet()
    }

    /// The generated prefix the factor sets were read from.
    pub fn prefix(&self) -> &Word {
        &self.prefix
    }

    /// Whether the length-`k` factor set is provably complete.
    pub fn is_exact(&self, k: usize) -> bool {
        self.exact.get(k).copied().unwrap_or(false)
    }

    /// Length-`k` factors in shortlex order.
    pub fn factors(&self, k: usize) -> Vec<Word> {
        let Some(set) = self.factors.get(k) else {
            return Vec::new();
        };
        let mut out: Vec<&Vec<Letter>> = set.iter().collect();
        out.sort_by(|a, b| shortlex(a, b));
        out.into_iter()
            .map(|l| Word::from_letters_unchecked(self.alphabet(), l.clone()))
            .collect()
    }

    pub fn complexity(&self, k: usize) -> usize {
        self.factors.get(k).map_or(0, HashSet::len)
    }

    fn has(&self, letters: &[Letter]) -> bool {
        self.factors
            .get(letters.len())
            .is_some_and(|set| set.contains(letters))
    }

    pub fn contains(&self, u: &Word) -> bool {
        match u.relabel(self.alphabet()) {
            Ok(u) => self.has(u.letters()),
            Err(_) => false,
        }
    }

    fn require_factor(&self, u: &Word, extra: usize) -> Result<Word> {
        if u.len() + extra > self.horizon {
            return Err(Error::HorizonTooSmall {
                needed: u.len() + extra,
                horizon: self.horizon,
            });
        }
        let u = u
            .relabel(self.alphabet())
            .map_err(|_| Error::NotInLanguage(u.to_string()))?;
        if !self.has(u.letters()) {
            return Err(Error::NotInLanguage(u.to_string()));
        }
        Ok(u)
    }

    pub fn extension_data(&self, u: &Word) -> Result<ExtensionData> {
        let u = self.require_factor(u, 2)?;
        let letters: Vec<Letter> = self.alphabet().letters().collect();
        let wrap = |a: Option<Letter>, b: Option<Letter>| {
            let mut v = Vec::with_capacity(u.len() + 2);
            v.extend(a);
            v.extend_from_slice(u.letters());
            v.extend(b);
            v
        };
        let left: BTreeSet<Letter> = letters
            .iter()
            .copied()
            .filter(|&a| self.has(&wrap(Some(a), None)))
            .collect();
        let right: BTreeSet<Letter> = letters
            .iter()
            .copied()
            .filter(|&b| self.has(&wrap(None, Some(b))))
            .collect();
        let bi: BTreeSet<(Letter, Letter)> = left
            .iter()
            .flat_map(|&a| right.iter().map(move |&b| (a, b)))
            .filter(|&(a, b)| self.has(&wrap(Some(a), Some(b))))
            .collect();
        let bilateral_order = bi.len() as i64 - left.len() as i64 - right.len() as i64 + 1;
        let pext = if u.is_palindrome() {
            bi.iter().filter(|(a, b)| a == b).count()
        } else {
            0
        };
        Ok(ExtensionData {
            exact: self.is_exact(u.len() + 2),
            factor: u,
            left,
            right,
            bi,
            bilateral_order,
            pext,
        })
    }

    /// Factors with at least two left and two right extensions, of length at
    /// most `max_len`, in shortlex order.
    pub fn bispecials(&self, max_len: usize) -> Result<Vec<Word>> {
        if max_len + 2 > self.horizon {
            return Err(Error::HorizonTooSmall {
                needed: max_len + 2,
                horizon: self.horizon,
            });
        }
        let mut out = Vec::new();
        for k in 0..=max_len {
            for u in self.factors(k) {
                let ext = self.extension_data(&u)?;
                if ext.is_bispecial() {
                    out.push(u);
                }
            }
        }
        Ok(out)
    }

    /// First factor (shortlex) of length at most `up_to` whose mirror image is
    /// missing from the view.
    pub fn reversal_failure(&self, up_to: usize) -> Option<Word> {
        (0..=up_to.min(self.horizon))
            .flat_map(|k| self.factors(k))
            .find(|u| !self.has(u.mirror().letters()))
    }

    pub fn reversal_closed(&self, up_to: usize) -> bool {
        self.reversal_failure(up_to).is_none()
    }

    /// Return words to `u` read off prefixes of the source. For infinite
    /// sources the prefix is doubled until every distinct return word has
    /// been seen twice and the set survives one more doubling; otherwise the
    /// result is flagged approximate.
    pub fn returns(&self, u: &Word) -> Result<Returns> {
        let u = u
            .relabel(self.alphabet())
            .map_err(|_| Error::FactorAbsent(u.to_string()))?;
        if !self.prefix.contains(&u) && self.source.is_finite() {
            return Err(Error::FactorAbsent(u.to_string()));
        }
        let mut current = gap_census(&self.prefix, &u);
        if self.source.is_finite() {
            if current.order.is_empty() && current.occurrences == 0 {
                return Err(Error::FactorAbsent(u.to_string()));
            }
            return Ok(current.into_returns(&u, true));
        }
        let mut len = self.prefix.len().max(u.len() + 1);
        loop {
            let doubled = len.saturating_mul(2);
            if doubled > self.cap {
                if current.occurrences == 0 {
                    return Err(Error::FactorAbsent(u.to_string()));
                }
                return Ok(current.into_returns(&u, true));
            }
            let next = gap_census(&self.source.prefix(doubled, self.cap)?, &u);
            let stable = !next.order.is_empty()
                && next.order == current.order
                && next.counts.values().all(|&c| c >= 2);
            if stable {
                return Ok(next.into_returns(&u, false));
            }
            current = next;
            len = doubled;
        }
    }
}

struct GapCensus {
    occurrences: usize,
    order: Vec<Vec<Letter>>,
    counts: HashMap<Vec<Letter>, usize>,
}

impl GapCensus {
    fn into_returns(self, u: &Word, approximate: bool) -> Returns {
        let alphabet = u.alphabet();
        let returns: Vec<Word> = self
            .order
            .into_iter()
            .map(|r| Word::from_letters_unchecked(alphabet, r))
            .collect();
        Returns {
            factor: u.clone(),
            complete: returns.iter().map(|r| r.concat(u)).collect(),
            returns,
            approximate,
        }
    }
}

/// Distinct gaps between consecutive occurrences of `u`, by first appearance.
fn gap_census(prefix: &Word, u: &Word) -> GapCensus {
    let occ = prefix.occurrences(u);
    let mut order = Vec::new();
    let mut counts: HashMap<Vec<Letter>, usize> = HashMap::new();
    for pair in occ.windows(2) {
        let gap = prefix.letters()[pair[0]..pair[1]].to_vec();
        let count = counts.entry(gap.clone()).or_insert(0);
        if *count == 0 {
            order.push(gap);
        }
        *count += 1;
    }
    GapCensus {
        occurrences: occ.len(),
        order,
        counts,
    }
}

/// Left, right and two-sided extensions of a factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionData {
    pub factor: Word,
    pub left: BTreeSet<Letter>,
    pub right: BTreeSet<Letter>,
    pub bi: BTreeSet<(Letter, Letter)>,
    pub bilateral_order: i64,
    /// Number of letters `a` with `a·u·a` a factor; zero unless `u` is a palindrome.
    pub pext: usize,
    pub exact: bool,
}

impl ExtensionData {
    pub fn is_bispecial(&self) -> bool {
        self.left.len() >= 2 && self.right.len() >= 2
    }

    fn symbol(&self, l: Letter) -> &str {
        self.factor.alphabet().symbol(l)
    }

    pub fn left_symbols(&self) -> Vec<&str> {
        self.left.iter().map(|&l| self.symbol(l)).collect()
    }

    pub fn right_symbols(&self) -> Vec<&str> {
        self.right.iter().map(|&l| self.symbol(l)).collect()
    }

    pub fn bi_symbols(&self) -> Vec<(&str, &str)> {
        self.bi
            .iter()
            .map(|&(a, b)| (self.symbol(a), self.symbol(b)))
            .collect()
    }
}

impl Serialize for ExtensionData {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ExtensionData", 7)?;
        s.serialize_field("factor", &self.factor)?;
        s.serialize_field("left", &self.left_symbols())?;
        s.serialize_field("right", &self.right_symbols())?;
        s.serialize_field("bi", &self.bi_symbols())?;
        s.serialize_field("bilateral_order", &self.bilateral_order)?;
        s.serialize_field("pext", &self.pext)?;
        s.serialize_field("exact", &self.exact)?;
        s.end()
    }
}

/// Return words `r` to a factor `u`, so that `r·u` is a complete return word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Returns {
    pub factor: Word,
    pub complete: Vec<Word>,
    /// In order of first occurrence.
    pub returns: Vec<Word>,
    pub approximate: bool,
}

/// Names of derived letters: `r, s, …, z, a, …, q`, then decimal indices.
pub fn derived_alphabet(size: usize) -> Arc<Alphabet> {
    let names: Vec<String> = if size <= 26 {
        (0..size)
            .map(|i| char::from(b'a' + ((i + 17) % 26) as u8).to_string())
            .collect()
    } else {
        (0..size).map(|i| i.to_string()).collect()
    };
    let sep = (size > 26).then_some(" ");
    Alphabet::with_separator(names, sep).expect("distinct names")
}

/// A source read as a sequence of return words to a factor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivedWord {
    pub word: Word,
    pub dictionary: Vec<Word>,
    /// The part of the source before the first occurrence of the factor.
    pub preprefix: Word,
}

/// The first `out_len` letters of the derived word of `source` to `x`.
pub fn derived_word(
    source: &WordSource,
    x: &Word,
    out_len: usize,
    cap: usize,
) -> Result<DerivedWord> {
    let x = x
        .relabel(source.alphabet())
        .map_err(|_| Error::FactorAbsent(x.to_string()))?;
    let mut len = (4 * (out_len + 1) * x.len().max(1)).max(64).min(cap);
    let (prefix, occ) = loop {
        let prefix = source.prefix(len, cap)?;
        let occ = prefix.occurrences(&x);
        let exhausted = source.is_finite() || len == cap;
        if occ.len() > out_len || exhausted {
            break (prefix, occ);
        }
        len = len.saturating_mul(2).min(cap);
    };
    if occ.is_empty() {
        return Err(Error::FactorAbsent(x.to_string()));
    }
    if occ.len() <= out_len {
        return Err(Error::InsufficientOccurrences {
            found: occ.len(),
            needed: out_len + 1,
        });
    }
    let mut dictionary: Vec<Vec<Letter>> = Vec::new();
    let mut indices = Vec::with_capacity(out_len);
    for pair in occ.windows(2).take(out_len) {
        let gap = &prefix.letters()[pair[0]..pair[1]];
        let i = match dictionary.iter().position(|r| r == gap) {
            Some(i) => i,
            None => {
                dictionary.push(gap.to_vec());
                dictionary.len() - 1
            }
        };
        indices.push(i as Letter);
    }
    let alphabet = derived_alphabet(dictionary.len());
    Ok(DerivedWord {
        word: Word::from_letters_unchecked(&alphabet, indices),
        dictionary: dictionary
            .into_iter()
            .map(|r| Word::from_letters_unchecked(prefix.alphabet(), r))
            .collect(),
        preprefix: prefix.prefix(occ[0]),
    })
}

/// One bispecial factor checked against the richness condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditEntry {
    pub factor: Word,
    pub palindrome: bool,
    pub bilateral_order: i64,
    pub pext: usize,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub max_len: usize,
    pub entries: Vec<AuditEntry>,
    pub violators: Vec<Word>,
    pub approximate: bool,
}

impl AuditReport {
    pub fn consistent(&self) -> bool {
        self.violators.is_empty()
    }
}

/// Checks `b(u) = Pext(u) − 1` for palindromic and `b(u) = 0` for other
/// bispecial factors up to `max_len`. The language must be closed under
/// reversal up to `max_len + 2`.
pub fn richness_audit(view: &LanguageView, max_len: usize) -> Result<AuditReport> {
    if max_len + 2 > view.horizon() {
        return Err(Error::HorizonTooSmall {
            needed: max_len + 2,
            horizon: view.horizon(),
        });
    }
    if let Some(word) = view.reversal_failure(max_len + 2) {
        return Err(Error::NotReversalClosed {
            length: word.len(),
            word: word.to_string(),
        });
    }
    let mut entries = Vec::new();
    for u in view.bispecials(max_len)? {
        let ext = view.extension_data(&u)?;
        let palindrome = u.is_palindrome();
        let ok = if palindrome {
            ext.bilateral_order == ext.pext as i64 - 1
        } else {
            ext.bilateral_order == 0
        };
        entries.push(AuditEntry {
            factor: u,
            palindrome,
            bilateral_order: ext.bilateral_order,
            pext: ext.pext,
            ok,
        });
    }
    let violators = entries
        .iter()
        .filter(|e| !e.ok)
        .map(|e| e.factor.clone())
        .collect();
    Ok(AuditReport {
        max_len,
        entries,
        violators,
        approximate: !view.is_exact(max_len + 2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn src(s: &str) -> WordSource {
        s.parse().unwrap()
    }

    fn view(s: &str, h: usize) -> LanguageView {
        LanguageView::build(&src(s), h).unwrap()
    }

    fn strings(ws: &[Word]) -> Vec<String> {
        ws.iter().map(ToString::to_string).collect()
    }

    fn w(v: &LanguageView, s: &str) -> Word {
        Word::parse_in(v.alphabet(), s).unwrap()
    }

    const FIB: &str = "fix:0->01;1->0@0";

    #[test]
    fn parse_and_display_round_trip() {
        for s in [
            "finite:ananas",
            "periodic:01",
            "periodic:01+001",
            FIB,
            "img:0->010;1->01001(fix:0->01;1->0@0)",
        ] {
            assert_eq!(src(s).to_string(), s);
        }
        assert!(WordSource::parse("fix:0->10;1->0@0", None).is_err());
        assert!(WordSource::parse("periodic:", None).is_err());
        assert!(WordSource::parse("loop:0", None).is_err());
        assert!(WordSource::parse("img:0->1(finite:2)", None).is_err());
    }

    #[test]
    fn prefixes() {
        assert_eq!(src(FIB).prefix(8, 100).unwrap().to_string(), "01001010");
        assert_eq!(
            src("periodic:01+2").prefix(6, 100).unwrap().to_string(),
            "201010"
        );
        assert_eq!(
            src("finite:abc").prefix(10, 100).unwrap().to_string(),
            "abc"
        );
        let img = src("img:0->11;1->10(periodic:0)");
        assert_eq!(img.prefix(5, 100).unwrap().to_string(), "11111");
        assert!(matches!(
            src(FIB).prefix(200, 100),
            Err(Error::LengthCap { .. })
        ));
    }

    #[test]
    fn fibonacci_factor_sets() {
        let v = view(FIB, 3);
        assert_eq!(strings(&v.factors(2)), ["00", "01", "10"]);
        assert_eq!(strings(&v.factors(3)), ["001", "010", "100", "101"]);
        assert!(v.is_exact(3));
        for k in 1..=3 {
            for u in v.factors(k) {
                assert!(v.contains(&u.prefix(k - 1)));
                assert!(v.contains(&u.factor(1..k)));
            }
        }
    }

    #[test]
    fn trivial_views() {
        let v = view("periodic:0", 5);
        assert_eq!(strings(&v.factors(5)), ["00000"]);
        assert!(v.bispecials(3).unwrap().is_empty());
        let v = view("finite:ananas", 2);
        assert_eq!(strings(&v.factors(2)), ["an", "as", "na"]);
        assert!(!v.is_exact(2));
    }

    #[test]
    fn fibonacci_extensions() {
        let v = view(FIB, 6);
        let e = v.extension_data(&w(&v, "")).unwrap();
        assert_eq!(e.bi_symbols(), [("0", "0"), ("0", "1"), ("1", "0")]);
        assert_eq!((e.bilateral_order, e.pext), (0, 1));
        let e = v.extension_data(&w(&v, "1")).unwrap();
        assert_eq!(e.left_symbols(), ["0"]);
        assert_eq!(e.right_symbols(), ["0"]);
        assert_eq!(e.bi_symbols(), [("0", "0")]);
        assert!(v.extension_data(&w(&v, "11")).is_err());
        assert!(matches!(
            v.extension_data(&w(&v, "01010")),
            Err(Error::HorizonTooSmall { .. })
        ));
    }

    #[test]
    fn tribonacci_extensions() {
        let v = view("fix:0->01;1->02;2->0@0", 6);
        let e = v.extension_data(&w(&v, "2010")).unwrap();
        assert_eq!(e.left_symbols(), ["0"]);
        assert_eq!(e.right_symbols(), ["0", "1", "2"]);
        assert_eq!(e.bi_symbols(), [("0", "0"), ("0", "1"), ("0", "2")]);
    }

    #[test]
    fn bispecial_lists() {
        let v = view(FIB, 3);
        assert_eq!(strings(&v.bispecials(1).unwrap()), ["", "0"]);
    }

    #[test]
    fn reversal_closure() {
        assert!(view(FIB, 3).reversal_closed(3));
        assert!(!view("finite:001", 2).reversal_closed(2));
        assert!(view("periodic:01", 4).reversal_closed(4));
    }

    #[test]
    fn return_words() {
        let v = view("fix:0->11;1->10@1", 4);
        let r = v.returns(&w(&v, "1")).unwrap();
        assert_eq!(strings(&r.returns), ["10", "1"]);
        assert_eq!(strings(&r.complete), ["101", "11"]);
        assert!(!r.approximate);

        let v = view("fix:r->rss;s->r@r", 4);
        let r = v.returns(&w(&v, "rr")).unwrap();
        let mut got = strings(&r.returns);
        got.sort();
        assert_eq!(got, ["r", "rrss", "rrssrssrss"]);

        let v = view("periodic:0", 3);
        assert_eq!(strings(&v.returns(&w(&v, "0")).unwrap().returns), ["0"]);

        let v = view("finite:abab", 2);
        let r = v.returns(&w(&v, "ab")).unwrap();
        assert!(r.approximate);
        assert!(v.returns(&w(&v, "bb")).is_err());
    }

    #[test]
    fn derived_words() {
        let d = derived_word(
            &src("fix:0->11;1->10@1"),
            &Word::parse("1", None).unwrap(),
            13,
            1000,
        )
        .unwrap();
        assert_eq!(d.word.to_string(), "rssrrrssrssrs");
        assert_eq!(strings(&d.dictionary), ["10", "1"]);
        assert!(d.preprefix.is_empty());

        let d = derived_word(
            &src("periodic:01"),
            &Word::parse("0", None).unwrap(),
            4,
            1000,
        )
        .unwrap();
        assert_eq!(d.word.to_string(), "rrrr");
        assert_eq!(strings(&d.dictionary), ["01"]);

        let d = derived_word(
            &src("periodic:01+11"),
            &Word::parse("0", None).unwrap(),
            2,
            1000,
        )
        .unwrap();
        assert_eq!(d.preprefix.to_string(), "11");

        assert!(matches!(
            derived_word(
                &src("finite:0101"),
                &Word::parse("0", None).unwrap(),
                3,
                1000
            ),
            Err(Error::InsufficientOccurrences {
                found: 2,
                needed: 4
            })
        ));
    }

    #[test]
    fn derived_alphabet_names() {
        assert_eq!(derived_alphabet(3).symbols(), ["r", "s", "t"]);
        assert_eq!(derived_alphabet(26).symbols()[9], "a");
        assert_eq!(derived_alphabet(27).symbols()[26], "26");
    }

    #[test]
    fn audits() {
        let report = richness_audit(&view(FIB, 3), 1).unwrap();
        assert!(report.consistent());
        assert_eq!(report.entries.len(), 2);

        let report = richness_audit(&view("periodic:001011001101", 14), 12).unwrap();
        assert!(!report.consistent());

        assert!(matches!(
            richness_audit(&view("periodic:0010101101011100", 8), 6),
            Err(Error::NotReversalClosed { .. })
        ));
    }

    #[test]
    fn image_views() {
        let v = view("img:0->1110;1->1(fix:0->01;1->0@0)", 6);
        assert!(v.is_exact(6));
        assert_eq!(strings(&v.bispecials(2).unwrap()), ["", "1", "11"]);
    }
}
