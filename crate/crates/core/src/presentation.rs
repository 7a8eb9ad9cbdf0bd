//! Circular monoids `M(m, ℓ)` and their Δ-products, together with the
//! closed-form arithmetic of simple elements.
//!
//! A circular monoid has atoms `a_0, …, a_{m-1}` (indices read mod `m`) and
//! relations saying that every product of `ℓ` cyclically consecutive atoms
//! is the same element Δ. The simple elements are the words
//! `s(i, p) = a_i a_{i+1} ⋯ a_{i+p-1}` for `0 ≤ p ≤ ℓ`, with `s(i, 0) = 1`
//! and `s(i, ℓ) = Δ` for every `i`.
//!
//! A Δ-product glues several circular monoids along their Garside elements.
//! Its simples are the union of the factor simples, so a [`Simple`] carries
//! the index of the factor it lives in.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// Parameters `(m, ℓ)` of one circular factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Factor {
    pub m: usize,
    pub l: usize,
}

impl Factor {
    pub fn new(m: usize, l: usize) -> Self {
        Factor { m, l }
    }

    /// Number of distinct atoms. When `ℓ = 1` every atom equals Δ.
    pub fn distinct_atoms(&self) -> usize {
        if self.l == 1 {
            1
        } else {
            self.m
        }
    }
}

/// A simple element, i.e. a divisor of Δ.
///
/// Proper simples are kept canonical: `0 ≤ i < m_j` and `1 ≤ p ≤ ℓ_j − 1`.
/// Lengths `0` and `ℓ_j` always collapse to [`Simple::Identity`] and
/// [`Simple::Delta`], so structural equality is element equality.
///
/// The derived ordering (identity, then proper simples by factor, `i`, `p`,
/// then Δ) is the canonical order used for every set-valued output.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Simple {
    Identity,
    Proper { factor: usize, i: usize, p: usize },
    Delta,
}

impl Simple {
    pub fn is_proper(&self) -> bool {
        matches!(self, Simple::Proper { .. })
    }

    pub fn factor(&self) -> Option<usize> {
        match *self {
            Simple::Proper { factor, .. } => Some(factor),
            _ => None,
        }
    }
}

/// Left-weighted form of a product of two proper simples.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairProduct {
    /// The pair was already greedy.
    Greedy(Simple, Simple),
    /// The product is a single proper simple.
    Merged(Simple),
    /// The product is exactly Δ.
    Delta,
    /// The product is Δ followed by a proper simple.
    DeltaTimes(Simple),
}

impl PairProduct {
    pub fn delta_count(&self) -> u8 {
        match self {
            PairProduct::Greedy(..) | PairProduct::Merged(_) => 0,
            PairProduct::Delta | PairProduct::DeltaTimes(_) => 1,
        }
    }

    pub fn simples(&self) -> Vec<Simple> {
        match *self {
            PairProduct::Greedy(s, t) => vec![s, t],
            PairProduct::Merged(s) | PairProduct::DeltaTimes(s) => vec![s],
            PairProduct::Delta => vec![],
        }
    }
}

/// A circular monoid (one factor) or a Δ-product of circular monoids.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    factors: Vec<Factor>,
    delta_len: usize,
    weights: Vec<usize>,
}

impl Presentation {
    pub fn new(factors: Vec<Factor>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidPresentation("no factors".into()));
        }
        for f in &factors {
            if f.m == 0 || f.l == 0 {
                return Err(Error::InvalidPresentation(format!(
                    "factor ({},{}) must have m, ℓ ≥ 1",
                    f.m, f.l
                )));
            }
            // M(m,1) is M(1,1) with relabelled atoms, and M *_Δ M(1,1) = M.
            if factors.len() > 1 && f.l == 1 {
                return Err(Error::InvalidPresentation(format!(
                    "factor ({},{}) is redundant in a Δ-product",
                    f.m, f.l
                )));
            }
        }
        let delta_len = factors.iter().fold(1, |acc, f| acc.lcm(&f.l));
        let weights = factors.iter().map(|f| delta_len / f.l).collect();
        Ok(Presentation {
            factors,
            delta_len,
            weights,
        })
    }

    pub fn circular(m: usize, l: usize) -> Result<Self> {
        Self::new(vec![Factor::new(m, l)])
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn factor(&self, j: usize) -> Factor {
        self.factors[j]
    }

    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    pub fn is_circular(&self) -> bool {
        self.factors.len() == 1
    }

    /// Weighted length of Δ: the lcm of the `ℓ_j`.
    pub fn delta_length(&self) -> usize {
        self.delta_len
    }

    /// Weighted length of each atom of factor `j`, equal to `L / ℓ_j`.
    pub fn atom_weight(&self, j: usize) -> usize {
        self.weights[j]
    }

    pub fn weight(&self, s: Simple) -> usize {
        match s {
            Simple::Identity => 0,
            Simple::Delta => self.delta_len,
            Simple::Proper { factor, p, .. } => p * self.weights[factor],
        }
    }

    /// Total number of atom letters `Σ m_j`.
    pub fn letter_count(&self) -> usize {
        self.factors.iter().map(|f| f.m).sum()
    }

    /// Number of distinct atoms of the monoid.
    pub fn atom_count(&self) -> usize {
        self.factors.iter().map(Factor::distinct_atoms).sum()
    }

    /// Builds a simple from any integer start index, collapsing `p = 0` and
    /// `p = ℓ_j`.
    pub fn simple(&self, j: usize, i: i64, p: usize) -> Result<Simple> {
        let f = self
            .factors
            .get(j)
            .ok_or_else(|| Error::InvalidSimple(format!("factor {} out of range", j + 1)))?;
        if p > f.l {
            return Err(Error::InvalidSimple(format!(
                "length {} exceeds ℓ = {}",
                p, f.l
            )));
        }
        Ok(self.make(j, i, p))
    }

    /// Unchecked constructor: `p ≤ ℓ_j` is assumed.
    pub(crate) fn make(&self, j: usize, i: i64, p: usize) -> Simple {
        let f = self.factors[j];
        if p == 0 {
            Simple::Identity
        } else if p == f.l {
            Simple::Delta
        } else {
            Simple::Proper {
                factor: j,
                i: i.rem_euclid(f.m as i64) as usize,
                p,
            }
        }
    }

    /// The atom `a_i` of factor `j` as a simple.
    pub fn atom(&self, j: usize, i: usize) -> Simple {
        self.make(j, i as i64, 1)
    }

    /// Distinct atoms in canonical order.
    pub fn atoms(&self) -> Vec<Simple> {
        let mut out: Vec<Simple> = self
            .factors
            .iter()
            .enumerate()
            .flat_map(|(j, f)| (0..f.m).map(move |i| (j, i)))
            .map(|(j, i)| self.atom(j, i))
            .collect();
        out.dedup();
        out
    }

    /// Every proper simple, in canonical order.
    pub fn proper_simples(&self) -> Vec<Simple> {
        let mut out = Vec::new();
        for (j, f) in self.factors.iter().enumerate() {
            for i in 0..f.m {
                for p in 1..f.l {
                    out.push(Simple::Proper { factor: j, i, p });
                }
            }
        }
        out
    }

    /// Every simple, identity first and Δ last.
    pub fn simples(&self) -> Vec<Simple> {
        let mut out = vec![Simple::Identity];
        out.extend(self.proper_simples());
        out.push(Simple::Delta);
        out
    }

    /// The simple `s̄` with `s·s̄ = Δ`.
    pub fn left_complement(&self, s: Simple) -> Simple {
        match s {
            Simple::Identity => Simple::Delta,
            Simple::Delta => Simple::Identity,
            Simple::Proper { factor, i, p } => {
                let l = self.factors[factor].l;
                self.make(factor, (i + p) as i64, l - p)
            }
        }
    }

    /// The simple `s*` with `s*·s = Δ`.
    pub fn right_complement(&self, s: Simple) -> Simple {
        match s {
            Simple::Identity => Simple::Delta,
            Simple::Delta => Simple::Identity,
            Simple::Proper { factor, i, p } => {
                let l = self.factors[factor].l;
                self.make(factor, i as i64 + p as i64 - l as i64, l - p)
            }
        }
    }

    /// The Garside automorphism `φ^power`, where `s·Δ = Δ·φ(s)`.
    pub fn phi(&self, s: Simple, power: i64) -> Simple {
        match s {
            Simple::Proper { factor, i, p } => {
                let f = self.factors[factor];
                let shift = (power.rem_euclid(f.m as i64) * (f.l as i64)) % f.m as i64;
                Simple::Proper {
                    factor,
                    i: (i + shift as usize) % f.m,
                    p,
                }
            }
            other => other,
        }
    }

    /// Order of φ on the simples: `lcm_j (m_j / gcd(m_j, ℓ_j))`.
    pub fn phi_order(&self) -> usize {
        self.factors
            .iter()
            .fold(1, |acc, f| acc.lcm(&(f.m / f.m.gcd(&f.l))))
    }

    /// Left divisibility `s ⪯ t` between simples.
    pub fn left_divides(&self, s: Simple, t: Simple) -> bool {
        match (s, t) {
            (Simple::Identity, _) | (_, Simple::Delta) => true,
            (
                Simple::Proper { factor, i, p },
                Simple::Proper {
                    factor: f2,
                    i: i2,
                    p: p2,
                },
            ) => factor == f2 && i == i2 && p <= p2,
            _ => false,
        }
    }

    /// Left gcd of two simples.
    pub fn gcd(&self, s: Simple, t: Simple) -> Simple {
        if self.left_divides(s, t) {
            s
        } else if self.left_divides(t, s) {
            t
        } else {
            Simple::Identity
        }
    }

    /// Right lcm of two simples.
    pub fn lcm(&self, s: Simple, t: Simple) -> Simple {
        if self.left_divides(s, t) {
            t
        } else if self.left_divides(t, s) {
            s
        } else {
            Simple::Delta
        }
    }

    /// Left-weighted form of the product `s·t` of two simples.
    ///
    /// Non-proper inputs are accepted for convenience: an identity operand is
    /// absorbed, and a Δ operand is moved to the front through φ.
    pub fn pair_normalize(&self, s: Simple, t: Simple) -> PairProduct {
        match (s, t) {
            (Simple::Identity, x) | (x, Simple::Identity) => match x {
                Simple::Identity => PairProduct::Greedy(Simple::Identity, Simple::Identity),
                Simple::Delta => PairProduct::Delta,
                x => PairProduct::Merged(x),
            },
            (Simple::Delta, Simple::Delta) => PairProduct::Greedy(Simple::Delta, Simple::Delta),
            (Simple::Delta, x) => PairProduct::DeltaTimes(x),
            (x, Simple::Delta) => PairProduct::DeltaTimes(self.phi(x, 1)),
            (
                Simple::Proper { factor, i, p },
                Simple::Proper {
                    factor: f2,
                    i: i2,
                    p: p2,
                },
            ) => {
                let f = self.factors[factor];
                if factor != f2 || (i + p) % f.m != i2 {
                    return PairProduct::Greedy(s, t);
                }
                let total = p + p2;
                if total < f.l {
                    PairProduct::Merged(Simple::Proper {
                        factor,
                        i,
                        p: total,
                    })
                } else if total == f.l {
                    PairProduct::Delta
                } else {
                    PairProduct::DeltaTimes(self.make(factor, (i + f.l) as i64, total - f.l))
                }
            }
        }
    }

    /// Whether the two-letter word `s t` of proper simples is greedy.
    pub fn is_greedy_pair(&self, s: Simple, t: Simple) -> bool {
        matches!(self.pair_normalize(s, t), PairProduct::Greedy(..))
    }

    /// The atom letters `(factor, index)` spelling a simple. Δ is spelled in
    /// the first factor.
    pub fn simple_letters(&self, s: Simple) -> Vec<(usize, usize)> {
        match s {
            Simple::Identity => vec![],
            Simple::Delta => {
                let f = self.factors[0];
                (0..f.l).map(|k| (0, k % f.m)).collect()
            }
            Simple::Proper { factor, i, p } => {
                let m = self.factors[factor].m;
                (0..p).map(|k| (factor, (i + k) % m)).collect()
            }
        }
    }

    /// Human-readable label: `1`, `Δ`, `s(i,p)` or `s<j>(i,p)` (1-based `j`).
    pub fn simple_label(&self, s: Simple) -> String {
        match s {
            Simple::Identity => "1".into(),
            Simple::Delta => "Δ".into(),
            Simple::Proper { factor, i, p } if self.is_circular() => {
                let _ = factor;
                format!("s({i},{p})")
            }
            Simple::Proper { factor, i, p } => format!("s{}({i},{p})", factor + 1),
        }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, fac) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str(";")?;
            }
            write!(f, "{},{}", fac.m, fac.l)?;
        }
        Ok(())
    }
}

impl FromStr for Presentation {
    type Err = Error;

    /// Parses `m,l` or `m1,l1;m2,l2;…` (ASCII digits, no whitespace).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidPresentation(format!("cannot parse `{s}`"));
        let mut factors = Vec::new();
        for part in s.split(';') {
            let (m, l) = part.split_once(',').ok_or_else(bad)?;
            let digits = |x: &str| !x.is_empty() && x.bytes().all(|b| b.is_ascii_digit());
            if !digits(m) || !digits(l) {
                return Err(bad());
            }
            factors.push(Factor::new(
                m.parse().map_err(|_| bad())?,
                l.parse().map_err(|_| bad())?,
            ));
        }
        Presentation::new(factors)
    }
}
