//! Words, left-weighted factorizations and group arithmetic.
//!
//! Every group element is stored as `Δ^k · s_1 ⋯ s_r` where the `s_t` are
//! proper simples and each adjacent pair is greedy. Because two proper
//! simples of a circular factor never renormalize into two *different*
//! proper simples, appending a simple on the right only ever disturbs the
//! last factor: the new simple either stays put, merges into the last
//! factor, or releases a Δ which then travels to the front through φ.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::presentation::{PairProduct, Presentation, Simple};

/// One letter of a raw word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    Atom {
        factor: usize,
        index: usize,
        inverse: bool,
    },
    Delta(i64),
}

/// A raw word over signed atoms and powers of Δ.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn empty() -> Self {
        Word::default()
    }

    /// A positive word from `(factor, index)` pairs.
    pub fn from_atoms(atoms: &[(usize, usize)]) -> Self {
        Word::new(
            atoms
                .iter()
                .map(|&(factor, index)| Letter::Atom {
                    factor,
                    index,
                    inverse: false,
                })
                .collect(),
        )
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| match *l {
            Letter::Atom { inverse, .. } => !inverse,
            Letter::Delta(e) => e >= 0,
        })
    }

    pub fn push(&mut self, letter: Letter) {
        self.letters.push(letter);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| match *l {
                    Letter::Atom {
                        factor,
                        index,
                        inverse,
                    } => Letter::Atom {
                        factor,
                        index,
                        inverse: !inverse,
                    },
                    Letter::Delta(e) => Letter::Delta(-e),
                })
                .collect(),
        }
    }

    /// Parses the whitespace-separated token syntax: `a<i>`, `a<j>:<i>`
    /// (1-based factor `j`) or `D`, each with an optional `^<int>` suffix.
    /// The token `1` is the empty word, as printed by [`Word::display`].
    pub fn parse(pres: &Presentation, text: &str) -> Result<Word> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            if token == "1" {
                continue;
            }
            let bad = |why: &str| Error::InvalidWord(format!("`{token}`: {why}"));
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b, e.parse::<i64>().map_err(|_| bad("bad exponent"))?),
                None => (token, 1),
            };
            if base == "D" {
                if exp != 0 {
                    letters.push(Letter::Delta(exp));
                }
                continue;
            }
            let body = base
                .strip_prefix('a')
                .ok_or_else(|| bad("expected `a…` or `D`"))?;
            let (factor, index) = match body.split_once(':') {
                Some((j, i)) => {
                    let j: usize = j.parse().map_err(|_| bad("bad factor"))?;
                    if j == 0 || j > pres.num_factors() {
                        return Err(bad("factor out of range"));
                    }
                    (
                        j - 1,
                        i.parse::<usize>().map_err(|_| bad("bad atom index"))?,
                    )
                }
                None => {
                    if !pres.is_circular() {
                        return Err(bad("multi-factor presentations need `a<j>:<i>`"));
                    }
                    (0, body.parse::<usize>().map_err(|_| bad("bad atom index"))?)
                }
            };
            if index >= pres.factor(factor).m {
                return Err(bad("atom index out of range"));
            }
            for _ in 0..exp.unsigned_abs() {
                letters.push(Letter::Atom {
                    factor,
                    index,
                    inverse: exp < 0,
                });
            }
        }
        Ok(Word { letters })
    }

    /// Formats in the syntax accepted by [`Word::parse`].
    pub fn display<'a>(&'a self, pres: &'a Presentation) -> WordDisplay<'a> {
        WordDisplay { word: self, pres }
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    pres: &'a Presentation,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, letter) in self.word.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            match *letter {
                Letter::Delta(1) => f.write_str("D")?,
                Letter::Delta(e) => write!(f, "D^{e}")?,
                Letter::Atom {
                    factor,
                    index,
                    inverse,
                } => {
                    if self.pres.is_circular() {
                        write!(f, "a{index}")?;
                    } else {
                        write!(f, "a{}:{index}", factor + 1)?;
                    }
                    if inverse {
                        f.write_str("^-1")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Left-weighted factorization `Δ^k · s_1 ⋯ s_r` of a group element.
///
/// The derived ordering (by `k`, then lexicographically by the simples) is
/// the canonical vertex order of super-summit sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GarsideElement {
    delta_exp: i64,
    simples: Vec<Simple>,
}

impl GarsideElement {
    pub fn identity() -> Self {
        GarsideElement {
            delta_exp: 0,
            simples: Vec::new(),
        }
    }

    pub fn delta_power(k: i64) -> Self {
        GarsideElement {
            delta_exp: k,
            simples: Vec::new(),
        }
    }

    pub fn delta_exp(&self) -> i64 {
        self.delta_exp
    }

    pub fn simples(&self) -> &[Simple] {
        &self.simples
    }

    /// Canonical length `r`.
    pub fn canonical_length(&self) -> usize {
        self.simples.len()
    }

    pub fn inf(&self) -> i64 {
        self.delta_exp
    }

    pub fn sup(&self) -> i64 {
        self.delta_exp + self.simples.len() as i64
    }

    pub fn is_identity(&self) -> bool {
        self.delta_exp == 0 && self.simples.is_empty()
    }

    pub fn is_delta_power(&self) -> bool {
        self.simples.is_empty()
    }

    pub(crate) fn from_raw(delta_exp: i64, simples: Vec<Simple>) -> Self {
        GarsideElement { delta_exp, simples }
    }
}

/// Serialized form: `{"delta_exp": k, "simples": [{"factor": j, "i": i, "p": p}, …]}`
/// with 1-based factor indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalJson {
    pub delta_exp: i64,
    pub simples: Vec<SimpleJson>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleJson {
    pub factor: usize,
    pub i: usize,
    pub p: usize,
}

impl Presentation {
    /// Builds an element from canonical data, checking every invariant.
    pub fn element(&self, delta_exp: i64, simples: Vec<Simple>) -> Result<GarsideElement> {
        for s in &simples {
            match *s {
                Simple::Proper { factor, i, p }
                    if factor < self.num_factors()
                        && i < self.factor(factor).m
                        && p >= 1
                        && p < self.factor(factor).l => {}
                _ => {
                    return Err(Error::InvalidSimple(format!(
                        "{s:?} is not a canonical proper simple"
                    )))
                }
            }
        }
        for w in simples.windows(2) {
            if !self.is_greedy_pair(w[0], w[1]) {
                return Err(Error::InvalidSimple(format!(
                    "{} {} is not greedy",
                    self.simple_label(w[0]),
                    self.simple_label(w[1])
                )));
            }
        }
        Ok(GarsideElement { delta_exp, simples })
    }

    /// The element represented by a single simple.
    pub fn simple_element(&self, s: Simple) -> GarsideElement {
        match s {
            Simple::Identity => GarsideElement::identity(),
            Simple::Delta => GarsideElement::delta_power(1),
            s => GarsideElement::from_raw(0, vec![s]),
        }
    }

    /// Right-multiplies by `Δ^e`: `Δ^k·P·Δ^e = Δ^(k+e)·φ^e(P)`.
    pub(crate) fn push_delta(&self, x: &mut GarsideElement, e: i64) {
        if e == 0 {
            return;
        }
        x.delta_exp += e;
        for s in x.simples.iter_mut() {
            *s = self.phi(*s, e);
        }
    }

    /// Right-multiplies a canonical form by a simple, restoring greediness.
    pub(crate) fn push_simple(&self, x: &mut GarsideElement, t: Simple) {
        let mut active = match t {
            Simple::Identity => return,
            Simple::Delta => return self.push_delta(x, 1),
            t => t,
        };
        loop {
            let Some(&last) = x.simples.last() else {
                x.simples.push(active);
                return;
            };
            match self.pair_normalize(last, active) {
                PairProduct::Greedy(..) => {
                    x.simples.push(active);
                    return;
                }
                PairProduct::Merged(u) => {
                    x.simples.pop();
                    active = u;
                }
                PairProduct::Delta => {
                    x.simples.pop();
                    self.push_delta(x, 1);
                    return;
                }
                PairProduct::DeltaTimes(v) => {
                    x.simples.pop();
                    self.push_delta(x, 1);
                    active = v;
                }
            }
        }
    }

    /// Left-weighted form of a positive word.
    pub fn normalize_positive(&self, w: &Word) -> Result<GarsideElement> {
        if !w.is_positive() {
            return Err(Error::InvalidWord("word contains inverse letters".into()));
        }
        Ok(self.to_left_weighted(w))
    }

    /// Left-weighted form of an arbitrary word. Inverse atoms are rewritten
    /// as `a⁻¹ = Δ⁻¹·a*`.
    pub fn to_left_weighted(&self, w: &Word) -> GarsideElement {
        let mut x = GarsideElement::identity();
        for letter in w.letters() {
            match *letter {
                Letter::Delta(e) => self.push_delta(&mut x, e),
                Letter::Atom {
                    factor,
                    index,
                    inverse,
                } => {
                    let a = self.atom(factor, index);
                    if inverse {
                        self.push_delta(&mut x, -1);
                        self.push_simple(&mut x, self.right_complement(a));
                    } else {
                        self.push_simple(&mut x, a);
                    }
                }
            }
        }
        x
    }

    /// Spells an element as a word: `D^k` followed by the atoms of each simple.
    pub fn element_to_word(&self, x: &GarsideElement) -> Word {
        let mut w = Word::empty();
        if x.delta_exp != 0 {
            w.push(Letter::Delta(x.delta_exp));
        }
        for &s in &x.simples {
            for (factor, index) in self.simple_letters(s) {
                w.push(Letter::Atom {
                    factor,
                    index,
                    inverse: false,
                });
            }
        }
        w
    }

    /// Signed weighted length, a homomorphism to `Z`.
    pub fn word_weight(&self, w: &Word) -> i64 {
        w.letters()
            .iter()
            .map(|l| match *l {
                Letter::Delta(e) => e * self.delta_length() as i64,
                Letter::Atom {
                    factor, inverse, ..
                } => {
                    let wt = self.atom_weight(factor) as i64;
                    if inverse {
                        -wt
                    } else {
                        wt
                    }
                }
            })
            .sum()
    }

    pub fn element_weight(&self, x: &GarsideElement) -> i64 {
        x.delta_exp * self.delta_length() as i64
            + x.simples
                .iter()
                .map(|&s| self.weight(s) as i64)
                .sum::<i64>()
    }

    pub fn multiply(&self, x: &GarsideElement, y: &GarsideElement) -> GarsideElement {
        let mut out = x.clone();
        self.push_delta(&mut out, y.delta_exp);
        for &s in &y.simples {
            self.push_simple(&mut out, s);
        }
        out
    }

    pub fn inverse(&self, x: &GarsideElement) -> GarsideElement {
        // (Δ^k s_1⋯s_r)⁻¹ = s_r⁻¹⋯s_1⁻¹Δ^{-k} and s⁻¹ = Δ⁻¹·s*
        let mut out = GarsideElement::identity();
        for &s in x.simples.iter().rev() {
            self.push_delta(&mut out, -1);
            self.push_simple(&mut out, self.right_complement(s));
        }
        self.push_delta(&mut out, -x.delta_exp);
        out
    }

    pub fn power(&self, x: &GarsideElement, n: i64) -> GarsideElement {
        let mut base = if n < 0 { self.inverse(x) } else { x.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = GarsideElement::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.multiply(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.multiply(&base, &base);
            }
        }
        acc
    }

    /// `x^g = g⁻¹·x·g`.
    pub fn conjugate(&self, x: &GarsideElement, g: &GarsideElement) -> GarsideElement {
        self.multiply(&self.multiply(&self.inverse(g), x), g)
    }

    /// `s⁻¹·x·s` for a simple `s`.
    pub fn conjugate_by_simple(&self, x: &GarsideElement, s: Simple) -> GarsideElement {
        let mut out = GarsideElement::from_raw(-1, vec![]);
        self.push_simple(&mut out, self.right_complement(s));
        let mut out = self.multiply(&out, x);
        self.push_simple(&mut out, s);
        out
    }

    /// `init(x) = φ^{-k}(s_1)`.
    pub fn init(&self, x: &GarsideElement) -> Result<Simple> {
        x.simples
            .first()
            .map(|&s| self.phi(s, -x.delta_exp))
            .ok_or(Error::PureDeltaPower)
    }

    /// `fin(x) = s_r`.
    pub fn fin(&self, x: &GarsideElement) -> Result<Simple> {
        x.simples.last().copied().ok_or(Error::PureDeltaPower)
    }

    /// Applies φ^e to an element (conjugation by `Δ^e`).
    pub fn phi_element(&self, x: &GarsideElement, e: i64) -> GarsideElement {
        GarsideElement::from_raw(
            x.delta_exp,
            x.simples.iter().map(|&s| self.phi(s, e)).collect(),
        )
    }

    /// Transports an element of the standalone circular group of factor `j`
    /// (given in its own coordinates) into this presentation.
    pub fn embed_from_factor(&self, j: usize, x: &GarsideElement) -> GarsideElement {
        GarsideElement::from_raw(
            x.delta_exp,
            x.simples
                .iter()
                .map(|s| match *s {
                    Simple::Proper { i, p, .. } => Simple::Proper { factor: j, i, p },
                    other => other,
                })
                .collect(),
        )
    }

    pub fn to_canonical_json(&self, x: &GarsideElement) -> CanonicalJson {
        CanonicalJson {
            delta_exp: x.delta_exp,
            simples: x
                .simples
                .iter()
                .filter_map(|s| match *s {
                    Simple::Proper { factor, i, p } => Some(SimpleJson {
                        factor: factor + 1,
                        i,
                        p,
                    }),
                    _ => None,
                })
                .collect(),
        }
    }

    pub fn from_canonical_json(&self, json: &CanonicalJson) -> Result<GarsideElement> {
        let simples = json
            .simples
            .iter()
            .map(|s| {
                if s.factor == 0 {
                    Err(Error::InvalidSimple("factor indices are 1-based".into()))
                } else {
                    Ok(Simple::Proper {
                        factor: s.factor - 1,
                        i: s.i,
                        p: s.p,
                    })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        self.element(json.delta_exp, simples)
    }

    /// Compact canonical JSON string.
    pub fn element_json(&self, x: &GarsideElement) -> String {
        serde_json::to_string(&self.to_canonical_json(x)).expect("plain data serializes")
    }

    /// Human-readable form, e.g. `Δ^-1 · s(0,2) s(1,1)`.
    pub fn format_element(&self, x: &GarsideElement) -> String {
        let mut out = format!("Δ^{}", x.delta_exp);
        if !x.simples.is_empty() {
            out.push_str(" ·");
            for &s in &x.simples {
                out.push(' ');
                out.push_str(&self.simple_label(s));
            }
        }
        out
    }
}
