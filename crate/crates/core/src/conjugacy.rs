//! Cycling, decycling, super-summit sets and conjugacy graphs.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::element::{CanonicalJson, GarsideElement};
use crate::error::Result;
use crate::presentation::{Presentation, Simple};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub from: usize,
    pub to: usize,
    pub label: Simple,
}

/// The super-summit set of an element together with its minimal arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyGraph {
    vertices: Vec<GarsideElement>,
    arrows: Vec<Arrow>,
    base: usize,
    conjugator_to_base: GarsideElement,
    // tree[v] conjugates the base vertex to vertex v
    tree: Vec<GarsideElement>,
}

impl ConjugacyGraph {
    pub fn vertices(&self) -> &[GarsideElement] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn base(&self) -> usize {
        self.base
    }

    /// Conjugates the query element to the base vertex.
    pub fn conjugator_to_base(&self) -> &GarsideElement {
        &self.conjugator_to_base
    }

    /// Conjugates the base vertex to vertex `v`.
    pub fn conjugator_from_base(&self, v: usize) -> &GarsideElement {
        &self.tree[v]
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, x: &GarsideElement) -> Option<usize> {
        self.vertices.binary_search(x).ok()
    }

    pub fn contains(&self, x: &GarsideElement) -> bool {
        self.index_of(x).is_some()
    }

    pub fn out_arrows(&self, v: usize) -> impl Iterator<Item = &Arrow> {
        self.arrows.iter().filter(move |a| a.from == v)
    }

    pub fn to_dot(&self, pres: &Presentation) -> String {
        let mut out = String::from("digraph sss {\n");
        for (k, v) in self.vertices.iter().enumerate() {
            let label = pres.element_json(v).replace('"', "\\\"");
            let _ = writeln!(out, "  v{k} [label=\"{label}\"];");
        }
        for a in &self.arrows {
            let _ = writeln!(
                out,
                "  v{} -> v{} [label=\"{}\"];",
                a.from,
                a.to,
                pres.simple_label(a.label)
            );
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self, pres: &Presentation) -> GraphJson {
        GraphJson {
            vertices: self
                .vertices
                .iter()
                .map(|v| pres.to_canonical_json(v))
                .collect(),
            arrows: self
                .arrows
                .iter()
                .map(|a| ArrowJson {
                    from: a.from,
                    to: a.to,
                    label: pres.simple_label(a.label),
                })
                .collect(),
            base: self.base,
            conjugator_to_base: pres.to_canonical_json(&self.conjugator_to_base),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphJson {
    pub vertices: Vec<CanonicalJson>,
    pub arrows: Vec<ArrowJson>,
    pub base: usize,
    pub conjugator_to_base: CanonicalJson,
}

#[derive(Clone, Debug, Serialize)]
pub struct ArrowJson {
    pub from: usize,
    pub to: usize,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Conjugacy {
    Conjugate(GarsideElement),
    NotConjugate,
}

impl Conjugacy {
    pub fn is_conjugate(&self) -> bool {
        matches!(self, Conjugacy::Conjugate(_))
    }

    pub fn witness(&self) -> Option<&GarsideElement> {
        match self {
            Conjugacy::Conjugate(w) => Some(w),
            Conjugacy::NotConjugate => None,
        }
    }
}

impl Presentation {
    /// `cyc(x) = x^{init(x)}`, returned with `init(x)`.
    pub fn cycling(&self, x: &GarsideElement) -> Result<(GarsideElement, Simple)> {
        let init = self.init(x)?;
        let mut y = GarsideElement::from_raw(x.delta_exp(), x.simples()[1..].to_vec());
        self.push_simple(&mut y, init);
        Ok((y, init))
    }

    /// `dec(x) = x^{fin(x)⁻¹}`, returned with the conjugator `fin(x)⁻¹`.
    pub fn decycling(&self, x: &GarsideElement) -> Result<(GarsideElement, GarsideElement)> {
        let fin = self.fin(x)?;
        let k = x.delta_exp();
        let r = x.canonical_length();
        let mut y = GarsideElement::from_raw(k, vec![self.phi(fin, k)]);
        for &s in &x.simples()[..r - 1] {
            self.push_simple(&mut y, s);
        }
        Ok((y, self.inverse(&self.simple_element(fin))))
    }

    pub fn is_rigid(&self, x: &GarsideElement) -> bool {
        match (self.fin(x), self.init(x)) {
            (Ok(fin), Ok(init)) => self.is_greedy_pair(fin, init),
            _ => true,
        }
    }

    /// Conjugates `x` into its super-summit set; returns `(y, c)` with `x^c = y`.
    pub fn send_to_sss(&self, x: &GarsideElement) -> (GarsideElement, GarsideElement) {
        let (y, c) = self.iterate_until_stable(x.clone(), GarsideElement::identity(), true);
        self.iterate_until_stable(y, c, false)
    }

    fn iterate_until_stable(
        &self,
        mut cur: GarsideElement,
        mut conj: GarsideElement,
        cycle: bool,
    ) -> (GarsideElement, GarsideElement) {
        let mut seen: HashMap<GarsideElement, GarsideElement> = HashMap::new();
        seen.insert(cur.clone(), conj.clone());
        while !cur.is_delta_power() {
            let (next, step) = if cycle {
                let (n, s) = self.cycling(&cur).expect("not a Δ-power");
                (n, self.simple_element(s))
            } else {
                self.decycling(&cur).expect("not a Δ-power")
            };
            conj = self.multiply(&conj, &step);
            let progressed = if cycle {
                next.inf() > cur.inf()
            } else {
                next.sup() < cur.sup()
            };
            if progressed {
                seen.clear();
            } else if let Some(c) = seen.get(&next) {
                return (next, c.clone());
            }
            seen.insert(next.clone(), conj.clone());
            cur = next;
        }
        (cur, conj)
    }

    /// Proper nontrivial left divisors of a simple.
    fn proper_left_divisors(&self, s: Simple) -> Vec<Simple> {
        match s {
            Simple::Identity => vec![],
            Simple::Delta => self.proper_simples(),
            Simple::Proper { factor, i, p } => {
                (1..p).map(|q| Simple::Proper { factor, i, p: q }).collect()
            }
        }
    }

    pub fn super_summit_set(&self, x: &GarsideElement) -> ConjugacyGraph {
        let (start, c) = self.send_to_sss(x);
        let (inf, sup) = (start.inf(), start.sup());
        let labels: Vec<Simple> = self
            .simples()
            .into_iter()
            .filter(|s| *s != Simple::Identity)
            .collect();

        let mut found: Vec<GarsideElement> = vec![start.clone()];
        let mut paths: Vec<GarsideElement> = vec![GarsideElement::identity()];
        let mut index: HashMap<GarsideElement, usize> = HashMap::from([(start, 0)]);
        let mut moves: Vec<(usize, usize, Simple)> = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(u) = queue.pop_front() {
            for &s in &labels {
                let y = self.conjugate_by_simple(&found[u], s);
                if y.inf() != inf || y.sup() != sup {
                    continue;
                }
                let v = match index.get(&y) {
                    Some(&v) => v,
                    None => {
                        let v = found.len();
                        let mut path = paths[u].clone();
                        self.push_simple(&mut path, s);
                        index.insert(y.clone(), v);
                        found.push(y);
                        paths.push(path);
                        queue.push_back(v);
                        v
                    }
                };
                moves.push((u, v, s));
            }
        }

        let minimal: Vec<(usize, usize, Simple)> = moves
            .into_iter()
            .filter(|&(u, _, s)| {
                self.proper_left_divisors(s)
                    .into_iter()
                    .all(|t| !index.contains_key(&self.conjugate_by_simple(&found[u], t)))
            })
            .collect();

        let mut order: Vec<usize> = (0..found.len()).collect();
        order.sort_by(|&a, &b| found[a].cmp(&found[b]));
        let mut rank = vec![0; found.len()];
        for (new, &old) in order.iter().enumerate() {
            rank[old] = new;
        }
        let mut arrows: Vec<Arrow> = minimal
            .into_iter()
            .map(|(u, v, label)| Arrow {
                from: rank[u],
                to: rank[v],
                label,
            })
            .collect();
        arrows.sort();
        ConjugacyGraph {
            vertices: order.iter().map(|&o| found[o].clone()).collect(),
            tree: order.iter().map(|&o| paths[o].clone()).collect(),
            arrows,
            base: rank[0],
            conjugator_to_base: c,
        }
    }

    /// Decides conjugacy; a returned witness `w` satisfies `x^w = y`.
    pub fn are_conjugate(&self, x: &GarsideElement, y: &GarsideElement) -> Conjugacy {
        if self.element_weight(x) != self.element_weight(y) {
            return Conjugacy::NotConjugate;
        }
        let (ys, cy) = self.send_to_sss(y);
        let (xs, _) = self.send_to_sss(x);
        if (xs.inf(), xs.sup()) != (ys.inf(), ys.sup()) {
            return Conjugacy::NotConjugate;
        }
        let graph = self.super_summit_set(x);
        let Some(v) = graph.index_of(&ys) else {
            return Conjugacy::NotConjugate;
        };
        let w = self.multiply(
            &self.multiply(graph.conjugator_to_base(), graph.conjugator_from_base(v)),
            &self.inverse(&cy),
        );
        assert_eq!(
            &self.conjugate(x, &w),
            y,
            "conjugacy witness failed to verify"
        );
        Conjugacy::Conjugate(w)
    }

    /// Generators of the centralizer of `x`, one per arrow of its conjugacy
    /// graph, with trivial loops dropped.
    pub fn centralizer_generators(&self, x: &GarsideElement) -> Vec<GarsideElement> {
        let graph = self.super_summit_set(x);
        let c = graph.conjugator_to_base();
        let c_inv = self.inverse(c);
        let mut gens: Vec<GarsideElement> = graph
            .arrows()
            .iter()
            .map(|a| {
                let mut lp = graph.conjugator_from_base(a.from).clone();
                self.push_simple(&mut lp, a.label);
                let lp = self.multiply(&lp, &self.inverse(graph.conjugator_from_base(a.to)));
                self.multiply(&self.multiply(c, &lp), &c_inv)
            })
            .filter(|g| !g.is_identity())
            .collect();
        gens.sort();
        gens.dedup();
        for g in &gens {
            assert_eq!(
                &self.conjugate(x, g),
                x,
                "centralizer generator failed to verify"
            );
        }
        gens
    }
}
