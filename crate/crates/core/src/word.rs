//! Words over the vertex groups and their canonical normal forms.
//!
//! Reduction merges a syllable into an earlier one of the same vertex whenever
//! everything in between commutes with it. Appending one syllable to a reduced
//! word needs at most one such merge, so reducing is a left fold. The canonical
//! representative is the lexicographically least shuffle: repeatedly take the
//! front-movable syllable with the smallest vertex id.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DefiningGraph, VertexId, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Syllable {
    pub vertex: VertexId,
    pub elem: u32,
}

impl Syllable {
    pub fn new(vertex: u32, elem: u32) -> Self {
        Syllable {
            vertex: VertexId(vertex),
            elem,
        }
    }

    pub fn validate(&self, g: &DefiningGraph) -> Result<()> {
        g.check_vertex(self.vertex)?;
        let order = g.group(self.vertex).order();
        if self.elem == 0 || self.elem as usize >= order {
            return Err(Error::VertexGroupMismatch {
                vertex: self.vertex,
                index: self.elem,
                order,
            });
        }
        Ok(())
    }

    pub fn inverse(&self, g: &DefiningGraph) -> Syllable {
        Syllable {
            vertex: self.vertex,
            elem: g.group(self.vertex).inv(self.elem),
        }
    }
}

impl fmt::Display for Syllable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.vertex, self.elem)
    }
}

/// An arbitrary (possibly non-geodesic) word.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word(pub Vec<Syllable>);

/// The canonical geodesic representative of a group element.
///
/// Only constructible through reduction, so holding one is the proof of canonicity.
/// Serializes as its display string, `"0:1 2:1"` or `"e"`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NormalForm(Vec<Syllable>);

impl Serialize for NormalForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn fmt_syllables(s: &[Syllable], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if s.is_empty() {
        return write!(f, "e");
    }
    for (i, x) in s.iter().enumerate() {
        if i > 0 {
            write!(f, " ")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_syllables(&self.0, f)
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_syllables(&self.0, f)
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses space separated `vertex:index` tokens; `e` (or empty input) is the empty word.
    fn from_str(s: &str) -> Result<Self> {
        let mut out = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "e" {
                continue;
            }
            let (v, i) = tok
                .split_once(':')
                .ok_or_else(|| Error::WordParse(tok.to_string()))?;
            let v: u32 = v.parse().map_err(|_| Error::WordParse(tok.to_string()))?;
            let i: u32 = i.parse().map_err(|_| Error::WordParse(tok.to_string()))?;
            out.push(Syllable::new(v, i));
        }
        Ok(Word(out))
    }
}

impl Word {
    pub fn validate(&self, g: &DefiningGraph) -> Result<()> {
        self.0.iter().try_for_each(|s| s.validate(g))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Appends `s` to a reduced syllable sequence, merging across commuting syllables.
fn push_reduced(out: &mut Vec<Syllable>, s: Syllable, g: &DefiningGraph) {
    for k in (0..out.len()).rev() {
        let t = out[k];
        if t.vertex == s.vertex {
            let merged = g.group(s.vertex).mul(t.elem, s.elem);
            if merged == 0 {
                out.remove(k);
            } else {
                out[k].elem = merged;
            }
            return;
        }
        if !g.adjacent(t.vertex, s.vertex) {
            break;
        }
    }
    out.push(s);
}

/// Lexicographically least shuffle of a reduced sequence.
fn canonical_order(reduced: Vec<Syllable>, g: &DefiningGraph) -> Vec<Syllable> {
    let n = reduced.len();
    if n < 2 {
        return reduced;
    }
    let mut used = vec![false; n];
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best: Option<usize> = None;
        for j in 0..n {
            if used[j] {
                continue;
            }
            let v = reduced[j].vertex;
            let movable = (0..j).all(|i| used[i] || g.adjacent(reduced[i].vertex, v));
            if movable && best.is_none_or(|b| v < reduced[b].vertex) {
                best = Some(j);
            }
        }
        let b = best.expect("the first unused syllable is always front-movable");
        used[b] = true;
        out.push(reduced[b]);
    }
    out
}

fn reduce_iter(syllables: impl IntoIterator<Item = Syllable>, g: &DefiningGraph) -> NormalForm {
    let mut out = Vec::new();
    for s in syllables {
        push_reduced(&mut out, s, g);
    }
    NormalForm(canonical_order(out, g))
}

/// Canonical normal form of an arbitrary word.
pub fn normal_form(w: &Word, g: &DefiningGraph) -> Result<NormalForm> {
    w.validate(g)?;
    Ok(reduce_iter(w.0.iter().copied(), g))
}

/// Product together with whether the lengths added up exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Product {
    pub form: NormalForm,
    pub reduced: bool,
}

pub fn multiply(x: &NormalForm, y: &NormalForm, g: &DefiningGraph) -> Result<Product> {
    x.validate(g).map_err(|_| Error::GraphMismatch)?;
    y.validate(g).map_err(|_| Error::GraphMismatch)?;
    let form = x.mul(y, g);
    let reduced = form.len() == x.len() + y.len();
    Ok(Product { form, reduced })
}

pub fn invert(x: &NormalForm, g: &DefiningGraph) -> NormalForm {
    x.inverse(g)
}

/// True iff the syllable lengths of the parts add up to the length of their product.
pub fn is_reduced_decomposition(parts: &[NormalForm], g: &DefiningGraph) -> bool {
    let total: usize = parts.iter().map(NormalForm::len).sum();
    let product = reduce_iter(parts.iter().flat_map(|p| p.0.iter().copied()), g);
    product.len() == total
}

/// All shuffles of a normal form, up to `cap` members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShuffleSet {
    pub words: BTreeSet<Vec<Syllable>>,
    pub overflow: bool,
}

pub fn enumerate_normal_forms(x: &NormalForm, g: &DefiningGraph, cap: usize) -> ShuffleSet {
    let mut words = BTreeSet::new();
    let mut queue = VecDeque::new();
    words.insert(x.0.clone());
    queue.push_back(x.0.clone());
    let mut overflow = false;
    'outer: while let Some(w) = queue.pop_front() {
        for i in 0..w.len().saturating_sub(1) {
            if g.adjacent(w[i].vertex, w[i + 1].vertex) {
                let mut next = w.clone();
                next.swap(i, i + 1);
                if !words.contains(&next) {
                    if words.len() >= cap {
                        overflow = true;
                        break 'outer;
                    }
                    words.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
    }
    ShuffleSet { words, overflow }
}

/// Checks the geodesic condition: two syllables on the same vertex are always
/// separated by a syllable that does not commute with them.
pub fn is_geodesic_sequence(s: &[Syllable], g: &DefiningGraph) -> bool {
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if s[i].vertex == s[j].vertex
                && (i + 1..j).all(|k| g.adjacent(s[k].vertex, s[i].vertex))
            {
                return false;
            }
        }
    }
    true
}

impl NormalForm {
    pub fn identity() -> Self {
        NormalForm(Vec::new())
    }

    /// Normal form of a single syllable.
    pub fn syllable(s: Syllable) -> Self {
        if s.elem == 0 {
            Self::identity()
        } else {
            NormalForm(vec![s])
        }
    }

    pub fn parse(text: &str, g: &DefiningGraph) -> Result<Self> {
        normal_form(&text.parse()?, g)
    }

    /// Reduces an arbitrary syllable sequence without validating it.
    pub fn from_syllables(s: impl IntoIterator<Item = Syllable>, g: &DefiningGraph) -> Self {
        reduce_iter(s, g)
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_word(&self) -> Word {
        Word(self.0.clone())
    }

    pub fn validate(&self, g: &DefiningGraph) -> Result<()> {
        self.0.iter().try_for_each(|s| s.validate(g))
    }

    pub fn mul(&self, other: &NormalForm, g: &DefiningGraph) -> NormalForm {
        let mut out = self.0.clone();
        for &s in &other.0 {
            push_reduced(&mut out, s, g);
        }
        NormalForm(canonical_order(out, g))
    }

    pub fn mul_syllable(&self, s: Syllable, g: &DefiningGraph) -> NormalForm {
        let mut out = self.0.clone();
        push_reduced(&mut out, s, g);
        NormalForm(canonical_order(out, g))
    }

    pub fn inverse(&self, g: &DefiningGraph) -> NormalForm {
        let rev = self.0.iter().rev().map(|s| s.inverse(g)).collect();
        NormalForm(canonical_order(rev, g))
    }

    pub fn pow(&self, k: usize, g: &DefiningGraph) -> NormalForm {
        let mut acc = NormalForm::identity();
        for _ in 0..k {
            acc = acc.mul(self, g);
        }
        acc
    }

    /// `self * other * self^-1`.
    pub fn conjugate(&self, other: &NormalForm, g: &DefiningGraph) -> NormalForm {
        self.mul(other, g).mul(&self.inverse(g), g)
    }

    pub fn support(&self) -> BTreeSet<VertexId> {
        self.0.iter().map(|s| s.vertex).collect()
    }

    pub fn support_within(&self, set: &VertexSet) -> bool {
        self.0.iter().all(|s| set.contains(s.vertex))
    }

    /// Contiguous subword as a syllable slice (already a normal form, not necessarily canonical).
    pub fn subword(&self, i: usize, j: usize) -> &[Syllable] {
        &self.0[i..j]
    }

    pub fn is_canonical(&self, g: &DefiningGraph) -> bool {
        is_geodesic_sequence(&self.0, g) && canonical_order(self.0.clone(), g) == self.0
    }
}

/// `(supp(x), ||x||)`.
pub fn support_query(x: &NormalForm) -> (BTreeSet<VertexId>, usize) {
    (x.support(), x.len())
}
