//! Conjugacy of elements sharing an n-th power.

use std::collections::{HashMap, VecDeque};

use crate::element::GarsideElement;
use crate::presentation::Presentation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootsVerdict {
    /// `α^w = β`, verified.
    Conjugate(GarsideElement),
    NonconjugatePeriodic,
    /// `αⁿ ≠ βⁿ`, or `n = 0`.
    PreconditionFailed,
}

/// A step between rigid elements of one super-summit set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    Cycling,
    Decycling,
    Phi,
    PhiInverse,
}

const MOVES: [Move; 4] = [Move::Cycling, Move::Decycling, Move::Phi, Move::PhiInverse];

impl Presentation {
    /// Applies a move and returns the result with the conjugator used.
    pub fn apply_move(&self, x: &GarsideElement, mv: Move) -> (GarsideElement, GarsideElement) {
        match mv {
            Move::Cycling => {
                let (y, s) = self
                    .cycling(x)
                    .expect("rigid elements have a proper factor");
                (y, self.simple_element(s))
            }
            Move::Decycling => self
                .decycling(x)
                .expect("rigid elements have a proper factor"),
            Move::Phi => (self.phi_element(x, 1), GarsideElement::delta_power(1)),
            Move::PhiInverse => (self.phi_element(x, -1), GarsideElement::delta_power(-1)),
        }
    }

    /// Shortest sequence of moves carrying `from` to `to`, if any.
    pub fn move_path(&self, from: &GarsideElement, to: &GarsideElement) -> Option<Vec<Move>> {
        let mut parent: HashMap<GarsideElement, Option<(GarsideElement, Move)>> =
            HashMap::from([(from.clone(), None)]);
        let mut queue = VecDeque::from([from.clone()]);
        while let Some(u) = queue.pop_front() {
            if &u == to {
                let mut path = Vec::new();
                let mut cur = u;
                while let Some(Some((prev, mv))) = parent.get(&cur) {
                    path.push(*mv);
                    cur = prev.clone();
                }
                path.reverse();
                return Some(path);
            }
            if u.is_delta_power() {
                continue;
            }
            for mv in MOVES {
                let (v, _) = self.apply_move(&u, mv);
                if !parent.contains_key(&v) {
                    parent.insert(v.clone(), Some((u.clone(), mv)));
                    queue.push_back(v);
                }
            }
        }
        None
    }

    /// The unique rigid `α` with `αⁿ = x`, when `x` is rigid and has one.
    pub fn rigid_root(&self, x: &GarsideElement, n: u32) -> Option<GarsideElement> {
        let n = n as i64;
        let r = x.canonical_length() as i64;
        if n == 0 || x.inf() % n != 0 || r % n != 0 {
            return None;
        }
        let tail = x.simples()[(r - r / n) as usize..].to_vec();
        let alpha = self.element(x.inf() / n, tail).ok()?;
        (self.is_rigid(&alpha) && self.power(&alpha, n) == *x).then_some(alpha)
    }

    /// For rigid, non-periodic `a` and `b`, finds `w` with `a^w = b` by
    /// joining `aⁿ` to `bⁿ` with moves and replaying the moves on `a`.
    pub fn transport_rigid_roots(
        &self,
        a: &GarsideElement,
        b: &GarsideElement,
        n: u32,
    ) -> Option<GarsideElement> {
        let x = self.power(a, n as i64);
        if x.is_delta_power() {
            return None;
        }
        let path = self.move_path(&x, &self.power(b, n as i64))?;
        let mut cur = a.clone();
        let mut w = GarsideElement::identity();
        for mv in path {
            let (next, c) = self.apply_move(&cur, mv);
            w = self.multiply(&w, &c);
            cur = next;
        }
        (&cur == b).then_some(w)
    }

    /// Given `αⁿ = βⁿ`, decides whether `α` and `β` are conjugate.
    pub fn same_power_conjugate(
        &self,
        alpha: &GarsideElement,
        beta: &GarsideElement,
        n: i64,
    ) -> RootsVerdict {
        if n == 0 || self.power(alpha, n) != self.power(beta, n) {
            return RootsVerdict::PreconditionFailed;
        }
        let (alpha, beta) = if n < 0 {
            (self.inverse(alpha), self.inverse(beta))
        } else {
            (alpha.clone(), beta.clone())
        };
        let n = n.abs();
        if alpha == beta {
            return RootsVerdict::Conjugate(GarsideElement::identity());
        }

        if self.periodicity(&alpha).is_periodic() {
            return match self.are_conjugate(&alpha, &beta).witness() {
                Some(w) => RootsVerdict::Conjugate(w.clone()),
                None => RootsVerdict::NonconjugatePeriodic,
            };
        }

        let (a1, ca) = self.send_to_sss(&alpha);
        let (b1, cb) = self.send_to_sss(&beta);
        assert!(
            self.is_rigid(&a1) && self.is_rigid(&b1) && !a1.is_delta_power(),
            "non-periodic super-summit elements are rigid"
        );
        let w = self
            .transport_rigid_roots(&a1, &b1, n as u32)
            .expect("powers of conjugate rigid elements are joined by cycling, decycling and φ");
        let w = self.multiply(&ca, &w);
        let w = self.multiply(&w, &self.inverse(&cb));
        assert_eq!(
            self.conjugate(&alpha, &w),
            beta,
            "roots witness failed to verify"
        );
        RootsVerdict::Conjugate(w)
    }
}
