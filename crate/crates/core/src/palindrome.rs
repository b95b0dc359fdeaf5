//! Distinct palindromic factors, defect and richness.
//!
//! [`PalindromeIndex`] is an eertree: every node is a distinct palindromic
//! factor, with two roots of length -1 and 0. Appending a letter walks the
//! suffix-link chain of the current longest palindromic suffix and creates at
//! most one node, so the per-prefix palindrome count grows by 0 or 1.

use serde::Serialize;
use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::word::{is_palindrome, Letter, Word};

const IMAGINARY_ROOT: usize = 0;
const EMPTY_ROOT: usize = 1;

#[derive(Debug, Clone)]
struct Node {
    len: isize,
    link: usize,
    /// Outgoing `a·p·a` edges; alphabets are small, a flat list beats a map.
    edges: Vec<(Letter, usize)>,
    /// End index (exclusive) of the first occurrence.
    first_end: usize,
}

impl Node {
    fn child(&self, a: Letter) -> Option<usize> {
        self.edges.iter().find(|(l, _)| *l == a).map(|&(_, n)| n)
    }
}

/// Incremental index of the distinct palindromic factors of a word.
#[derive(Debug, Clone)]
pub struct PalindromeIndex {
    nodes: Vec<Node>,
    letters: Vec<Letter>,
    /// Node of the longest palindromic suffix of the current word.
    suffix: usize,
    /// One bit per appended letter: did it create a new palindrome?
    new_flags: Vec<bool>,
}

impl Default for PalindromeIndex {
    fn default() -> Self {
        Self::new()
    }
}

impl PalindromeIndex {
    pub fn new() -> Self {
        let roots = vec![
            Node {
                len: -1,
                link: IMAGINARY_ROOT,
                edges: Vec::new(),
                first_end: 0,
            },
            Node {
                len: 0,
                link: IMAGINARY_ROOT,
                edges: Vec::new(),
                first_end: 0,
            },
        ];
        PalindromeIndex {
            nodes: roots,
            letters: Vec::new(),
            suffix: EMPTY_ROOT,
            new_flags: Vec::new(),
        }
    }

    pub fn from_letters(letters: &[Letter]) -> Self {
        let mut index = Self::new();
        index.letters.reserve(letters.len());
        index.new_flags.reserve(letters.len());
        for &a in letters {
            index.push(a);
        }
        index
    }

    /// Appends `a`; returns whether a new distinct palindrome appeared.
    pub fn push(&mut self, a: Letter) -> bool {
        let i = self.letters.len();
        self.letters.push(a);

        let parent = self.extendable_suffix(self.suffix, i, a);
        if let Some(existing) = self.nodes[parent].child(a) {
            self.suffix = existing;
            self.new_flags.push(false);
            return false;
        }

        let len = self.nodes[parent].len + 2;
        let link = if len == 1 {
            EMPTY_ROOT
        } else {
            let p = self.extendable_suffix(self.nodes[parent].link, i, a);
            self.nodes[p].child(a).expect("suffix palindrome exists")
        };
        let id = self.nodes.len();
        self.nodes.push(Node {
            len,
            link,
            edges: Vec::new(),
            first_end: i + 1,
        });
        self.nodes[parent].edges.push((a, id));
        self.suffix = id;
        self.new_flags.push(true);
        true
    }

    /// Follows suffix links from `node` until `a·node·a` ends at position `i`.
    fn extendable_suffix(&self, mut node: usize, i: usize, a: Letter) -> usize {
        loop {
            let len = self.nodes[node].len;
            let j = i as isize - len - 1;
            if j >= 0 && self.letters[j as usize] == a {
                return node;
            }
            if node == IMAGINARY_ROOT {
                // len = -1 gives j = i, which always matches.
                unreachable!("imaginary root always extends");
            }
            node = self.nodes[node].link;
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of distinct palindromic factors, counting ε.
    pub fn distinct_count(&self) -> usize {
        self.nodes.len() - 1
    }

    /// Distinct palindrome count (with ε) of the prefix of length `k`.
    pub fn count_at(&self, k: usize) -> usize {
        1 + self.new_flags[..k].iter().filter(|&&b| b).count()
    }

    /// Per-prefix counts for prefix lengths `0..=len`.
    pub fn prefix_counts(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len() + 1);
        let mut c = 1;
        out.push(c);
        for &b in &self.new_flags {
            c += b as usize;
            out.push(c);
        }
        out
    }

    pub fn new_flags(&self) -> &[bool] {
        &self.new_flags
    }

    /// Length of the longest palindromic suffix of the whole word.
    pub fn longest_palindromic_suffix(&self) -> usize {
        self.nodes[self.suffix].len.max(0) as usize
    }

    /// The distinct palindromes as letter sequences, ε first, then by
    /// order of first appearance.
    pub fn palindromes(&self) -> Vec<Vec<Letter>> {
        let mut out = vec![Vec::new()];
        let mut created: Vec<&Node> = self.nodes[2..].iter().collect();
        created.sort_by_key(|n| (n.first_end, n.len));
        for node in created {
            let start = node.first_end - node.len as usize;
            out.push(self.letters[start..node.first_end].to_vec());
        }
        out
    }

    pub fn defect(&self) -> usize {
        self.len() + 1 - self.distinct_count()
    }
}

/// Indexes all of `u`.
pub fn index_word(u: &Word) -> PalindromeIndex {
    PalindromeIndex::from_letters(u.letters())
}

/// `D(u) = |u| + 1 − #palindromes(u)`.
pub fn defect(u: &Word) -> usize {
    index_word(u).defect()
}

pub fn is_rich(u: &Word) -> bool {
    is_rich_letters(u.letters())
}

pub(crate) fn is_rich_letters(letters: &[Letter]) -> bool {
    let mut index = PalindromeIndex::new();
    letters.iter().all(|&a| index.push(a))
}

/// Prefix lengths whose longest palindromic suffix already occurred earlier
/// in the prefix. Empty exactly when `u` is rich.
pub fn property_ju_violations(u: &Word) -> Vec<usize> {
    index_word(u)
        .new_flags()
        .iter()
        .enumerate()
        .filter(|(_, &fresh)| !fresh)
        .map(|(i, _)| i + 1)
        .collect()
}

/// Summary of the palindromic content of a finite word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RichnessReport {
    pub length: usize,
    pub palindromes: usize,
    pub defect: usize,
    pub rich: bool,
    /// Shortest prefix whose longest palindromic suffix is not unioccurrent.
    pub first_ju_violation: Option<usize>,
}

pub fn richness_report(u: &Word) -> RichnessReport {
    let index = index_word(u);
    let first_ju_violation = index.new_flags().iter().position(|&b| !b).map(|i| i + 1);
    let defect = index.defect();
    RichnessReport {
        length: u.len(),
        palindromes: index.distinct_count(),
        defect,
        rich: defect == 0,
        first_ju_violation,
    }
}

/// For a binary word that is not rich, the shortest (then least) non-palindromic
/// `q` such that `0q0`, `1q1`, `0q̄1` and `1q̄0` all occur in `u`.
pub fn non_richness_witness(u: &Word) -> Result<Option<Word>> {
    let size = u.alphabet().size();
    if size != 2 {
        return Err(Error::NotBinary { size });
    }
    if is_rich(u) {
        return Ok(None);
    }
    let letters = u.letters();
    let n = letters.len();
    for q_len in 2..=n.saturating_sub(2) {
        let framed: HashSet<&[Letter]> = letters.windows(q_len + 2).collect();
        let candidates: BTreeSet<&[Letter]> = framed
            .iter()
            .filter(|f| f[0] == 0 && f[q_len + 1] == 0)
            .map(|f| &f[1..=q_len])
            .filter(|q| !is_palindrome(q))
            .collect();
        let has = |left: Letter, mid: &[Letter], right: Letter| {
            let mut probe = Vec::with_capacity(q_len + 2);
            probe.push(left);
            probe.extend_from_slice(mid);
            probe.push(right);
            framed.contains(probe.as_slice())
        };
        for q in candidates {
            let rev: Vec<Letter> = q.iter().rev().copied().collect();
            if has(1, q, 1) && has(0, &rev, 1) && has(1, &rev, 0) {
                return Ok(Some(Word::from_letters_unchecked(u.alphabet(), q.to_vec())));
            }
        }
    }
    unreachable!("a non-rich binary word always has a witness")
}

/// Length of the prefix of `(pq)^ω` whose richness decides the whole word.
pub fn periodic_test_length(p_len: usize, q_len: usize) -> usize {
    p_len + q_len + p_len.abs_diff(q_len) / 3
}

/// Decides richness of `(pq)^ω` for palindromes `p`, `q` with `pq ≠ ε`.
pub fn periodic_richness(p: &Word, q: &Word) -> Result<bool> {
    if p.alphabet() != q.alphabet() {
        return Err(Error::AlphabetMismatch("p and q".into()));
    }
    for w in [p, q] {
        if !w.is_palindrome() {
            return Err(Error::NotPalindrome(w.to_string()));
        }
    }
    let block = p.concat(q);
    if block.is_empty() {
        return Err(Error::EmptyWord("pq"));
    }
    let n = periodic_test_length(p.len(), q.len());
    let prefix: Vec<Letter> = block.letters().iter().copied().cycle().take(n).collect();
    Ok(is_rich_letters(&prefix))
}
