//! Brute-force ground truth for small presentations.
//!
//! A [`Ball`] holds every positive atom word up to a weighted radius, split
//! into classes of the congruence generated by the defining relations. It
//! knows nothing about simples or normal forms, so it can be used to check
//! them.
//!
//! Relations used: within factor `j`, `s_j(i, ℓ_j) = s_j(i+1, ℓ_j)` for every
//! `i`; across factors, `s_1(0, ℓ_1) = s_j(0, ℓ_j)` (all the Δ's agree).

use std::collections::HashMap;

use crate::element::{Letter, Word};
use crate::error::{Error, Result};
use crate::presentation::Presentation;

/// A positive word as `(factor, atom index)` letters.
pub type AtomWord = Vec<(usize, usize)>;

/// Default cap on the number of enumerated words.
pub const DEFAULT_WORD_LIMIT: u64 = 1_000_000;

#[derive(Debug, Clone)]
pub struct Ball {
    pres: Presentation,
    radius: usize,
    words: Vec<AtomWord>,
    weights: Vec<usize>,
    index: HashMap<AtomWord, usize>,
    class: Vec<usize>,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller index as root so representatives are stable
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Number of positive words of weighted length `≤ radius`.
pub fn word_count(pres: &Presentation, radius: usize) -> u64 {
    let letter_weights: Vec<usize> = letters(pres)
        .iter()
        .map(|&(j, _)| pres.atom_weight(j))
        .collect();
    let mut count = vec![0u64; radius + 1];
    count[0] = 1;
    for w in 1..=radius {
        count[w] = letter_weights
            .iter()
            .filter(|&&lw| lw <= w)
            .fold(0u64, |acc, &lw| acc.saturating_add(count[w - lw]));
    }
    count.iter().fold(0u64, |a, &c| a.saturating_add(c))
}

fn letters(pres: &Presentation) -> Vec<(usize, usize)> {
    pres.factors()
        .iter()
        .enumerate()
        .flat_map(|(j, f)| (0..f.m).map(move |i| (j, i)))
        .collect()
}

fn factor_delta(pres: &Presentation, j: usize, start: usize) -> AtomWord {
    let f = pres.factor(j);
    (0..f.l).map(|k| (j, (start + k) % f.m)).collect()
}

fn relations(pres: &Presentation) -> Vec<(AtomWord, AtomWord)> {
    let mut rels = Vec::new();
    for (j, f) in pres.factors().iter().enumerate() {
        for i in 0..f.m {
            let lhs = factor_delta(pres, j, i);
            let rhs = factor_delta(pres, j, (i + 1) % f.m);
            if lhs != rhs {
                rels.push((lhs.clone(), rhs.clone()));
                rels.push((rhs, lhs));
            }
        }
    }
    let glue = factor_delta(pres, 0, 0);
    for j in 1..pres.num_factors() {
        let other = factor_delta(pres, j, 0);
        rels.push((glue.clone(), other.clone()));
        rels.push((other, glue.clone()));
    }
    rels
}

impl Ball {
    pub fn build(pres: &Presentation, radius: usize) -> Result<Ball> {
        Self::build_with_limit(pres, radius, DEFAULT_WORD_LIMIT)
    }

    pub fn build_with_limit(pres: &Presentation, radius: usize, limit: u64) -> Result<Ball> {
        let needed = word_count(pres, radius);
        if needed > limit {
            return Err(Error::BudgetExceeded { needed, limit });
        }
        let alphabet = letters(pres);
        let mut words: Vec<AtomWord> = vec![vec![]];
        let mut weights = vec![0usize];
        // breadth-first by weight keeps each stratum contiguous-ish and the
        // enumeration order deterministic
        let mut frontier = 0;
        while frontier < words.len() {
            let w = words[frontier].clone();
            let wt = weights[frontier];
            for &(j, i) in &alphabet {
                let nw = wt + pres.atom_weight(j);
                if nw <= radius {
                    let mut next = w.clone();
                    next.push((j, i));
                    words.push(next);
                    weights.push(nw);
                }
            }
            frontier += 1;
        }
        let index: HashMap<AtomWord, usize> = words
            .iter()
            .enumerate()
            .map(|(k, w)| (w.clone(), k))
            .collect();

        let rels = relations(pres);
        let mut uf = UnionFind::new(words.len());
        for (k, w) in words.iter().enumerate() {
            for (lhs, rhs) in &rels {
                if lhs.len() > w.len() {
                    continue;
                }
                for pos in 0..=(w.len() - lhs.len()) {
                    if w[pos..pos + lhs.len()] == lhs[..] {
                        let mut v = Vec::with_capacity(w.len() - lhs.len() + rhs.len());
                        v.extend_from_slice(&w[..pos]);
                        v.extend_from_slice(rhs);
                        v.extend_from_slice(&w[pos + lhs.len()..]);
                        uf.union(k, index[&v]);
                    }
                }
            }
        }
        let class = (0..words.len()).map(|k| uf.find(k)).collect();
        Ok(Ball {
            pres: pres.clone(),
            radius,
            words,
            weights,
            index,
            class,
        })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn words(&self) -> &[AtomWord] {
        &self.words
    }

    pub fn word_weight(&self, w: &[(usize, usize)]) -> usize {
        w.iter().map(|&(j, _)| self.pres.atom_weight(j)).sum()
    }

    /// Class id of a word, or `None` if it lies outside the ball.
    pub fn class_of(&self, w: &[(usize, usize)]) -> Option<usize> {
        self.index.get(w).map(|&k| self.class[k])
    }

    /// Monoid equality.
    ///
    /// Panics if either word is outside the ball.
    pub fn equal(&self, a: &[(usize, usize)], b: &[(usize, usize)]) -> bool {
        let ca = self.class_of(a).expect("word outside oracle ball");
        let cb = self.class_of(b).expect("word outside oracle ball");
        ca == cb
    }

    /// Left divisibility `a ⪯ b`: some word `u` has `a·u ≡ b`.
    ///
    /// Panics if `b` is outside the ball.
    pub fn left_divides(&self, a: &[(usize, usize)], b: &[(usize, usize)]) -> bool {
        let target = self.class_of(b).expect("word outside oracle ball");
        let (wa, wb) = (self.word_weight(a), self.word_weight(b));
        if wa > wb {
            return false;
        }
        let gap = wb - wa;
        self.words
            .iter()
            .zip(&self.weights)
            .filter(|(_, &wt)| wt == gap)
            .any(|(u, _)| {
                let mut v = a.to_vec();
                v.extend_from_slice(u);
                self.class_of(&v) == Some(target)
            })
    }

    /// All classes, each sorted, with the lexicographically least word first.
    /// Classes are ordered by that representative.
    pub fn classes(&self) -> Vec<Vec<AtomWord>> {
        let mut groups: HashMap<usize, Vec<AtomWord>> = HashMap::new();
        for (k, w) in self.words.iter().enumerate() {
            groups.entry(self.class[k]).or_default().push(w.clone());
        }
        let mut out: Vec<Vec<AtomWord>> = groups
            .into_values()
            .map(|mut g| {
                g.sort();
                g
            })
            .collect();
        out.sort();
        out
    }

    /// Members of the class of `w` (including `w`).
    pub fn class_members(&self, w: &[(usize, usize)]) -> Vec<AtomWord> {
        let c = self.class_of(w).expect("word outside oracle ball");
        self.words
            .iter()
            .enumerate()
            .filter(|(k, _)| self.class[*k] == c)
            .map(|(_, w)| w.clone())
            .collect()
    }
}

/// Ground-truth equality of two positive words, building a ball just large
/// enough.
pub fn oracle_equal(
    pres: &Presentation,
    a: &[(usize, usize)],
    b: &[(usize, usize)],
) -> Result<bool> {
    let weight = |w: &[(usize, usize)]| w.iter().map(|&(j, _)| pres.atom_weight(j)).sum::<usize>();
    if weight(a) != weight(b) {
        return Ok(false);
    }
    let ball = Ball::build(pres, weight(a))?;
    Ok(ball.equal(a, b))
}

pub fn oracle_left_divides(
    pres: &Presentation,
    a: &[(usize, usize)],
    b: &[(usize, usize)],
) -> Result<bool> {
    let weight = b.iter().map(|&(j, _)| pres.atom_weight(j)).sum::<usize>();
    let ball = Ball::build(pres, weight)?;
    Ok(ball.left_divides(a, b))
}

/// Rewrites any word as `Δ^n · P` with `P` positive, using only
/// `a⁻¹ = Δ⁻¹·a*` (where `a*·a = s(i+1−ℓ, ℓ)` is read off the relations) and
/// `P·Δ⁻¹ = Δ⁻¹·φ⁻¹(P)` with `φ(a_i) = a_{i+ℓ}` acting letterwise.
pub fn fraction_form(pres: &Presentation, word: &Word) -> (i64, AtomWord) {
    let mut shift = 0i64;
    let mut pos: AtomWord = Vec::new();
    let unshift = |pos: &mut AtomWord| {
        for letter in pos.iter_mut() {
            let f = pres.factor(letter.0);
            letter.1 = ((letter.1 as i64 - f.l as i64).rem_euclid(f.m as i64)) as usize;
        }
    };
    for letter in word.letters() {
        match *letter {
            Letter::Atom {
                factor,
                index,
                inverse: false,
            } => pos.push((factor, index)),
            Letter::Atom {
                factor,
                index,
                inverse: true,
            } => {
                shift -= 1;
                unshift(&mut pos);
                let f = pres.factor(factor);
                let start = index as i64 + 1 - f.l as i64;
                for k in 0..(f.l - 1) {
                    pos.push((factor, ((start + k as i64).rem_euclid(f.m as i64)) as usize));
                }
            }
            Letter::Delta(e) if e >= 0 => {
                for _ in 0..e {
                    pos.extend(factor_delta(pres, 0, 0));
                }
            }
            Letter::Delta(e) => {
                for _ in 0..(-e) {
                    shift -= 1;
                    unshift(&mut pos);
                }
            }
        }
    }
    (shift, pos)
}

/// Ground-truth equality of two arbitrary words in the group of fractions.
pub fn oracle_group_equal(pres: &Presentation, a: &Word, b: &Word) -> Result<bool> {
    let (na, mut pa) = fraction_form(pres, a);
    let (nb, mut pb) = fraction_form(pres, b);
    // Δ^na·Pa = Δ^nb·Pb  ⇔  Δ^(na−n)·Pa = Δ^(nb−n)·Pb for n = min
    let n = na.min(nb);
    let pad = |k: i64, p: &mut AtomWord| {
        let mut out = Vec::new();
        for _ in 0..k {
            out.extend(factor_delta(pres, 0, 0));
        }
        out.append(p);
        *p = out;
    };
    pad(na - n, &mut pa);
    pad(nb - n, &mut pb);
    oracle_equal(pres, &pa, &pb)
}
