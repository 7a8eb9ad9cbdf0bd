//! Periodic elements, centers and irreducible periodic classes.

use num_integer::{gcd, lcm};

use crate::element::{GarsideElement, Letter, Word};
use crate::presentation::{Presentation, Simple};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PeriodicWitness {
    DeltaPower,
    /// The super-summit representative is supported on this factor.
    Factor(usize),
}

/// `Periodic { p, q, .. }` means `x^p = Δ^q` with `p` minimal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Periodicity {
    NotPeriodic,
    Periodic {
        p: u64,
        q: i64,
        witness: PeriodicWitness,
    },
}

impl Periodicity {
    pub fn is_periodic(&self) -> bool {
        matches!(self, Periodicity::Periodic { .. })
    }

    pub fn exponents(&self) -> Option<(u64, i64)> {
        match *self {
            Periodicity::Periodic { p, q, .. } => Some((p, q)),
            Periodicity::NotPeriodic => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Center {
    /// Smallest positive central power of Δ.
    pub generator: GarsideElement,
    /// The group is abelian and the center is everything.
    pub whole_group: bool,
}

impl Presentation {
    pub fn periodicity(&self, x: &GarsideElement) -> Periodicity {
        let (y, _) = self.send_to_sss(x);
        let k = y.delta_exp();
        let (p, q, witness) = match *y.simples() {
            [] => (1u64, k, PeriodicWitness::DeltaPower),
            [Simple::Proper { factor, p, .. }] => {
                let f = self.factor(factor);
                let (m, l) = (f.m as i64, f.l as i64);
                let v = p as i64 + k * l;
                if v.rem_euclid(m) != 0 {
                    return Periodicity::NotPeriodic;
                }
                let d = gcd(p as i64, l);
                ((l / d) as u64, v / d, PeriodicWitness::Factor(factor))
            }
            _ => return Periodicity::NotPeriodic,
        };
        // y^p = Δ^q always; for x the Δ-power may need to be central first.
        let order = self.phi_order() as u64;
        let t = (1..=order)
            .find(|&t| self.power(x, (t * p) as i64) == GarsideElement::delta_power(t as i64 * q))
            .expect("some power of a periodic element is a central Δ-power");
        Periodicity::Periodic {
            p: t * p,
            q: t as i64 * q,
            witness,
        }
    }

    pub fn center(&self) -> Center {
        let k = self
            .factors()
            .iter()
            .map(|f| f.m / gcd(f.m, f.l))
            .fold(1, lcm);
        let whole_group = match self.factors() {
            [f] => f.m == 1 || f.l == 1 || (f.m == 2 && f.l == 2),
            _ => false,
        };
        Center {
            generator: GarsideElement::delta_power(k as i64),
            whole_group,
        }
    }

    /// The product `a_i a_{i+1} ⋯ a_{i+len-1}` of consecutive atoms of factor `j`.
    /// Unlike a simple, `len` may exceed `ℓ_j`.
    pub fn cyclic_product(&self, j: usize, i: usize, len: usize) -> GarsideElement {
        let m = self.factor(j).m;
        let w = Word::new(
            (0..len)
                .map(|t| Letter::Atom {
                    factor: j,
                    index: (i + t) % m,
                    inverse: false,
                })
                .collect(),
        );
        self.to_left_weighted(&w)
    }

    /// Representatives of the conjugacy classes of irreducible periodic elements.
    pub fn irreducible_periodic_classes(&self) -> Vec<GarsideElement> {
        let mut reps: Vec<GarsideElement> = Vec::new();
        for (j, f) in self.factors().iter().enumerate() {
            let (m_divides_l, l_divides_m) = (f.l % f.m == 0, f.m % f.l == 0);
            let mut candidates = Vec::new();
            if m_divides_l || !l_divides_m {
                let s = self.cyclic_product(j, 0, f.m);
                candidates.push(self.inverse(&s));
                candidates.push(s);
            }
            if l_divides_m || !m_divides_l {
                candidates.push(GarsideElement::delta_power(1));
                candidates.push(GarsideElement::delta_power(-1));
            }
            for c in candidates {
                if !reps
                    .iter()
                    .any(|r| self.are_conjugate(r, &c).is_conjugate())
                {
                    reps.push(c);
                }
            }
        }
        reps
    }

    /// Conjugacy of two periodic elements with equal exponents.
    pub fn periodic_conjugate(&self, x: &GarsideElement, y: &GarsideElement) -> bool {
        let (px, py) = (self.periodicity(x), self.periodicity(y));
        let (
            Periodicity::Periodic {
                p: p1,
                q: q1,
                witness: w1,
            },
            Periodicity::Periodic {
                p: p2,
                q: q2,
                witness: w2,
            },
        ) = (px, py)
        else {
            return false;
        };
        (p1, q1) == (p2, q2) && (self.is_circular() || w1 == w2)
    }
}
