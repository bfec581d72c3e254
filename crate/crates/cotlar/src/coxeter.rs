//! Finitely generated Coxeter systems: exact word problem, lengths,
//! descents, parabolic membership and Cayley-ball enumeration.
//!
//! The word problem is solved by exhaustive closure under M-operations
//! (delete `ss`, swap alternating braid subwords), which is complete by
//! Tits' theorem. The canonical representative of a group element is the
//! ShortLex-least reduced word, so equality, hashing and deterministic
//! ordering all come for free. Right-angled systems take a polynomial
//! shuffle path that is cross-checked against the generic closure in the
//! test suite.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on word lengths. The closure never lengthens a word, so
/// the cap is a pure resource bound checked at API entry.
pub const DEFAULT_MAX_WORD_LEN: usize = 16;

/// An entry of a Coxeter matrix: the order of the product of two
/// generators, possibly infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoxeterOrder {
    Finite(u32),
    Infinite,
}

impl CoxeterOrder {
    pub fn is_finite(self) -> bool {
        matches!(self, CoxeterOrder::Finite(_))
    }
}

impl fmt::Display for CoxeterOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterOrder::Finite(n) => write!(f, "{n}"),
            CoxeterOrder::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for CoxeterOrder {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            CoxeterOrder::Finite(n) => ser.serialize_u32(*n),
            CoxeterOrder::Infinite => ser.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for CoxeterOrder {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Text(String),
        }
        match Raw::deserialize(de)? {
            Raw::Num(n) => {
                if n == 0 || n > u32::MAX as u64 {
                    return Err(D::Error::custom(format!("invalid coxeter order {n}")));
                }
                Ok(CoxeterOrder::Finite(n as u32))
            }
            Raw::Text(t) if t == "inf" => Ok(CoxeterOrder::Infinite),
            Raw::Text(t) => Err(D::Error::custom(format!(
                "invalid coxeter order {t:?}; expected a positive integer or \"inf\""
            ))),
        }
    }
}

/// A group element, identified with its ShortLex-least reduced word.
///
/// Two canonical elements of the same system are equal as group elements
/// iff their words are identical; `Ord` is ShortLex (length first, then
/// lexicographic on generator indices).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalElement {
    word: Vec<u8>,
}

impl CanonicalElement {
    pub(crate) fn from_word(word: Vec<u8>) -> Self {
        CanonicalElement { word }
    }

    pub fn identity() -> Self {
        CanonicalElement { word: Vec::new() }
    }

    /// The underlying reduced word as generator indices.
    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Generator indices appearing in the word (its support).
    pub fn support(&self) -> BTreeSet<usize> {
        self.word.iter().map(|&l| l as usize).collect()
    }
}

impl PartialOrd for CanonicalElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        shortlex_cmp(&self.word, &other.word)
    }
}

pub(crate) fn shortlex_cmp(a: &[u8], b: &[u8]) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// Left and right descent sets of an element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentInfo {
    pub left: BTreeSet<usize>,
    pub right: BTreeSet<usize>,
}

/// A validated Coxeter system: named generators plus the symmetric
/// Coxeter matrix, with a configurable word-length cap.
#[derive(Debug, Clone)]
pub struct CoxeterSystem {
    names: Vec<String>,
    matrix: Vec<Vec<CoxeterOrder>>,
    max_word_len: usize,
    right_angled: bool,
}

impl CoxeterSystem {
    /// Validates the Coxeter-matrix axioms: square, symmetric, diagonal 1,
    /// off-diagonal at least 2, names unique.
    pub fn new(names: Vec<String>, matrix: Vec<Vec<CoxeterOrder>>) -> Result<Self> {
        let n = names.len();
        if matrix.len() != n || matrix.iter().any(|row| row.len() != n) {
            return Err(Error::BadShape {
                rows: matrix.len(),
                expected: n,
            });
        }
        for i in 0..n {
            for j in 0..n {
                if matrix[i][j] != matrix[j][i] {
                    return Err(Error::NonSymmetric(i, j));
                }
                if i == j {
                    if matrix[i][j] != CoxeterOrder::Finite(1) {
                        return Err(Error::BadDiagonal(i));
                    }
                } else if matrix[i][j] == CoxeterOrder::Finite(1) {
                    return Err(Error::OffDiagonalOne(i, j));
                }
            }
        }
        let mut seen = HashSet::new();
        for name in &names {
            if !seen.insert(name.clone()) {
                return Err(Error::DuplicateName(name.clone()));
            }
        }
        let right_angled = (0..n).all(|i| {
            (0..n).all(|j| {
                i == j
                    || matches!(
                        matrix[i][j],
                        CoxeterOrder::Finite(2) | CoxeterOrder::Infinite
                    )
            })
        });
        Ok(CoxeterSystem {
            names,
            matrix,
            max_word_len: DEFAULT_MAX_WORD_LEN,
            right_angled,
        })
    }

    pub fn with_max_word_len(mut self, cap: usize) -> Self {
        self.max_word_len = cap;
        self
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_owned()))
    }

    pub fn order(&self, i: usize, j: usize) -> CoxeterOrder {
        self.matrix[i][j]
    }

    pub fn matrix(&self) -> &[Vec<CoxeterOrder>] {
        &self.matrix
    }

    pub fn max_word_len(&self) -> usize {
        self.max_word_len
    }

    pub fn is_right_angled(&self) -> bool {
        self.right_angled
    }

    fn commutes(&self, a: u8, b: u8) -> bool {
        self.matrix[a as usize][b as usize] == CoxeterOrder::Finite(2)
    }

    fn check_letters(&self, letters: &[usize]) -> Result<Vec<u8>> {
        let rank = self.rank();
        letters
            .iter()
            .map(|&l| {
                if l < rank {
                    Ok(l as u8)
                } else {
                    Err(Error::BadGeneratorIndex { index: l, rank })
                }
            })
            .collect()
    }

    pub fn identity(&self) -> CanonicalElement {
        CanonicalElement::identity()
    }

    pub fn generator(&self, i: usize) -> Result<CanonicalElement> {
        if i >= self.rank() {
            return Err(Error::BadGeneratorIndex {
                index: i,
                rank: self.rank(),
            });
        }
        Ok(CanonicalElement::from_word(vec![i as u8]))
    }

    /// Word problem: the ShortLex-least reduced word representing the
    /// same group element as `letters`.
    pub fn reduce(&self, letters: &[usize]) -> Result<CanonicalElement> {
        let word = self.check_letters(letters)?;
        if word.len() > self.max_word_len {
            return Err(Error::WordTooLong {
                len: word.len(),
                cap: self.max_word_len,
            });
        }
        Ok(self.reduce_raw(word))
    }

    /// Closure-based reduction without the entry cap, for internal words
    /// that are at most one letter over it (descent tests). M-operations
    /// never lengthen a word, so this terminates within the input length.
    pub(crate) fn reduce_raw(&self, word: Vec<u8>) -> CanonicalElement {
        if self.right_angled {
            CanonicalElement::from_word(self.reduce_right_angled(&word))
        } else {
            CanonicalElement::from_word(self.reduce_generic(word))
        }
    }

    fn reduce_generic(&self, word: Vec<u8>) -> Vec<u8> {
        let mut current = strip_adjacent_pairs(word);
        loop {
            // BFS over braid moves; stop as soon as any member of the class
            // exposes a deletable ss pair.
            let mut seen: HashSet<Vec<u8>> = HashSet::new();
            let mut queue: VecDeque<Vec<u8>> = VecDeque::new();
            seen.insert(current.clone());
            queue.push_back(current.clone());
            let mut shortened: Option<Vec<u8>> = None;
            'bfs: while let Some(w) = queue.pop_front() {
                if let Some(d) = delete_first_pair(&w) {
                    shortened = Some(d);
                    break 'bfs;
                }
                self.for_each_braid_neighbor(&w, |nb| {
                    if !seen.contains(&nb) {
                        seen.insert(nb.clone());
                        queue.push_back(nb);
                    }
                });
            }
            match shortened {
                Some(w) => current = strip_adjacent_pairs(w),
                // The whole braid class is deletion-free: the word is
                // reduced and `seen` is exactly its set of reduced
                // expressions. Pick the ShortLex-least.
                None => {
                    return seen
                        .into_iter()
                        .min_by(|a, b| shortlex_cmp(a, b))
                        .unwrap_or_default();
                }
            }
        }
    }

    fn for_each_braid_neighbor(&self, w: &[u8], mut visit: impl FnMut(Vec<u8>)) {
        let n = w.len();
        for i in 0..n.saturating_sub(1) {
            let a = w[i];
            let b = w[i + 1];
            if a == b {
                continue;
            }
            let m = match self.matrix[a as usize][b as usize] {
                CoxeterOrder::Finite(m) => m as usize,
                CoxeterOrder::Infinite => continue,
            };
            if i + m > n {
                continue;
            }
            // check w[i..i+m] alternates a,b,a,b,...
            let alternating = (0..m).all(|k| w[i + k] == if k % 2 == 0 { a } else { b });
            if !alternating {
                continue;
            }
            let mut nb = w.to_vec();
            for (k, slot) in nb[i..i + m].iter_mut().enumerate() {
                *slot = if k % 2 == 0 { b } else { a };
            }
            visit(nb);
        }
    }

    /// Polynomial normal form for right-angled systems: insertion with
    /// cancellation through commuting letters, then the lexicographically
    /// least linearization of the resulting heap.
    fn reduce_right_angled(&self, word: &[u8]) -> Vec<u8> {
        let mut out: Vec<u8> = Vec::with_capacity(word.len());
        for &x in word {
            let mut cancel = None;
            for i in (0..out.len()).rev() {
                let y = out[i];
                if y == x {
                    cancel = Some(i);
                    break;
                }
                if !self.commutes(x, y) {
                    break;
                }
            }
            match cancel {
                Some(i) => {
                    out.remove(i);
                }
                None => out.push(x),
            }
        }
        self.least_linearization(out)
    }

    /// Greedy least-frontable-letter linearization; on a reduced word of a
    /// right-angled system this is the ShortLex-least reduced expression.
    fn least_linearization(&self, mut rem: Vec<u8>) -> Vec<u8> {
        let mut out = Vec::with_capacity(rem.len());
        while !rem.is_empty() {
            let mut best: Option<usize> = None;
            for i in 0..rem.len() {
                let frontable = (0..i).all(|j| self.commutes(rem[j], rem[i]));
                if frontable && best.is_none_or(|b| rem[i] < rem[b]) {
                    best = Some(i);
                }
            }
            let i = best.expect("nonempty word has a frontable letter");
            out.push(rem.remove(i));
        }
        out
    }

    /// Concatenate-then-reduce product.
    pub fn multiply(&self, a: &CanonicalElement, b: &CanonicalElement) -> Result<CanonicalElement> {
        let total = a.length() + b.length();
        if total > self.max_word_len {
            return Err(Error::WordTooLong {
                len: total,
                cap: self.max_word_len,
            });
        }
        let mut word = Vec::with_capacity(total);
        word.extend_from_slice(&a.word);
        word.extend_from_slice(&b.word);
        Ok(self.reduce_raw(word))
    }

    /// Inverse: generators are involutions, so reversing a reduced word
    /// gives a reduced word of the inverse; canonicalize within its class.
    pub fn invert(&self, a: &CanonicalElement) -> CanonicalElement {
        let word: Vec<u8> = a.word.iter().rev().copied().collect();
        self.reduce_raw(word)
    }

    pub fn length(&self, a: &CanonicalElement) -> usize {
        a.length()
    }

    /// True iff left-multiplying by generator `s` shortens `a`.
    pub fn is_left_descent(&self, s: usize, a: &CanonicalElement) -> bool {
        debug_assert!(s < self.rank());
        let mut word = Vec::with_capacity(a.length() + 1);
        word.push(s as u8);
        word.extend_from_slice(&a.word);
        self.reduce_raw(word).length() < a.length()
    }

    pub fn is_right_descent(&self, s: usize, a: &CanonicalElement) -> bool {
        debug_assert!(s < self.rank());
        let mut word = a.word.clone();
        word.push(s as u8);
        self.reduce_raw(word).length() < a.length()
    }

    pub fn descents(&self, a: &CanonicalElement) -> DescentInfo {
        let left = (0..self.rank())
            .filter(|&s| self.is_left_descent(s, a))
            .collect();
        let right = (0..self.rank())
            .filter(|&s| self.is_right_descent(s, a))
            .collect();
        DescentInfo { left, right }
    }

    /// Membership in the standard parabolic subgroup generated by `t`,
    /// decided by the support of the canonical word (reduced expressions
    /// of one element share their support; the BFS oracle in the test
    /// suite cross-checks this rule).
    pub fn in_parabolic(&self, t: &BTreeSet<usize>, a: &CanonicalElement) -> bool {
        a.word.iter().all(|&l| t.contains(&(l as usize)))
    }

    /// All elements of length at most `radius`, ShortLex sorted.
    pub fn ball(&self, radius: usize) -> Result<Vec<CanonicalElement>> {
        if radius > self.max_word_len {
            return Err(Error::WordTooLong {
                len: radius,
                cap: self.max_word_len,
            });
        }
        let mut ball: BTreeSet<CanonicalElement> = BTreeSet::new();
        ball.insert(self.identity());
        let mut frontier = vec![self.identity()];
        for depth in 1..=radius {
            let mut next = Vec::new();
            for w in &frontier {
                for s in 0..self.rank() {
                    let mut word = w.word.clone();
                    word.push(s as u8);
                    let x = self.reduce_raw(word);
                    if x.length() == depth && ball.insert(x.clone()) {
                        next.push(x);
                    }
                }
            }
            frontier = next;
        }
        Ok(ball.into_iter().collect())
    }

    /// The restriction of the system to the generators in `t` (order
    /// preserved). Returns the subsystem and the map from subsystem
    /// generator indices back to indices of `self`.
    pub fn subsystem(&self, t: &BTreeSet<usize>) -> Result<(CoxeterSystem, Vec<usize>)> {
        let idx: Vec<usize> = t.iter().copied().collect();
        for &i in &idx {
            if i >= self.rank() {
                return Err(Error::BadGeneratorIndex {
                    index: i,
                    rank: self.rank(),
                });
            }
        }
        let names = idx.iter().map(|&i| self.names[i].clone()).collect();
        let matrix = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| self.matrix[i][j]).collect())
            .collect();
        let sub = CoxeterSystem::new(names, matrix)?.with_max_word_len(self.max_word_len);
        Ok((sub, idx))
    }

    /// Renders an element using generator names; the identity prints as "e".
    pub fn format_element(&self, a: &CanonicalElement) -> String {
        if a.is_identity() {
            return "e".to_owned();
        }
        let single = self.names.iter().all(|n| n.chars().count() == 1);
        let parts: Vec<&str> = a.word.iter().map(|&l| self.names[l as usize].as_str()).collect();
        if single {
            parts.concat()
        } else {
            parts.join(".")
        }
    }

    /// Parses a word over generator names ("sts", "s.t.s" or "s t s").
    pub fn parse_word(&self, text: &str) -> Result<Vec<usize>> {
        let text = text.trim();
        if text.is_empty() || text == "e" {
            return Ok(Vec::new());
        }
        if text.contains('.') || text.contains(' ') || text.contains(',') {
            return text
                .split(['.', ' ', ','])
                .filter(|t| !t.is_empty())
                .map(|t| self.index_of(t))
                .collect();
        }
        // single-character generator names: letters concatenate
        text.chars()
            .map(|c| self.index_of(&c.to_string()))
            .collect()
    }
}

fn strip_adjacent_pairs(mut word: Vec<u8>) -> Vec<u8> {
    // repeatedly delete adjacent equal pairs; a stack pass does them all
    let mut out: Vec<u8> = Vec::with_capacity(word.len());
    for x in word.drain(..) {
        if out.last() == Some(&x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

fn delete_first_pair(w: &[u8]) -> Option<Vec<u8>> {
    for i in 0..w.len().saturating_sub(1) {
        if w[i] == w[i + 1] {
            let mut out = Vec::with_capacity(w.len() - 2);
            out.extend_from_slice(&w[..i]);
            out.extend_from_slice(&w[i + 2..]);
            return Some(out);
        }
    }
    None
}

/// Convenience constructors for the systems the test and example corpus
/// lean on.
pub mod systems {
    use super::*;

    fn fin(n: u32) -> CoxeterOrder {
        CoxeterOrder::Finite(n)
    }

    /// Rank-2 system with one braid order.
    pub fn dihedral(name_a: &str, name_b: &str, order: CoxeterOrder) -> CoxeterSystem {
        CoxeterSystem::new(
            vec![name_a.to_owned(), name_b.to_owned()],
            vec![vec![fin(1), order], vec![order, fin(1)]],
        )
        .expect("valid dihedral matrix")
    }

    /// The infinite dihedral group, m_st = infinity.
    pub fn d_infinity() -> CoxeterSystem {
        dihedral("s", "t", CoxeterOrder::Infinite)
    }

    /// Type A2 (the symmetric group on three letters), m_st = 3.
    pub fn a2() -> CoxeterSystem {
        dihedral("s", "t", fin(3))
    }

    /// The affine triangle group on generators s, t, u with all braid
    /// orders 3.
    pub fn a2_tilde() -> CoxeterSystem {
        CoxeterSystem::new(
            vec!["s".into(), "t".into(), "u".into()],
            vec![
                vec![fin(1), fin(3), fin(3)],
                vec![fin(3), fin(1), fin(3)],
                vec![fin(3), fin(3), fin(1)],
            ],
        )
        .expect("valid affine triangle matrix")
    }

    /// The rank-3 hyperbolic system with m_ut = 3, m_su = 2, m_ts = inf
    /// (the reflection presentation of PGL2(Z)), generators ordered s, t, u.
    pub fn pgl2z() -> CoxeterSystem {
        CoxeterSystem::new(
            vec!["s".into(), "t".into(), "u".into()],
            vec![
                vec![fin(1), CoxeterOrder::Infinite, fin(2)],
                vec![CoxeterOrder::Infinite, fin(1), fin(3)],
                vec![fin(2), fin(3), fin(1)],
            ],
        )
        .expect("valid matrix")
    }

    /// Right-angled system on a cycle of `n` generators: adjacent pairs
    /// commute, all other pairs are free.
    pub fn cycle_right_angled(n: usize) -> CoxeterSystem {
        let names = (0..n).map(|i| format!("s{i}")).collect();
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            fin(1)
                        } else if (i + 1) % n == j || (j + 1) % n == i {
                            fin(2)
                        } else {
                            CoxeterOrder::Infinite
                        }
                    })
                    .collect()
            })
            .collect();
        CoxeterSystem::new(names, matrix).expect("valid cycle matrix")
    }
}
