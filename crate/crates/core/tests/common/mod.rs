#![allow(dead_code)]

use circular_garside::{GarsideElement, Letter, Presentation, Simple, Word};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn pres(s: &str) -> Presentation {
    s.parse().unwrap()
}

pub fn sp(i: usize, p: usize) -> Simple {
    Simple::Proper { factor: 0, i, p }
}

/// All atoms of a presentation as `(factor, index)` pairs.
pub fn atom_pairs(p: &Presentation) -> Vec<(usize, usize)> {
    p.factors()
        .iter()
        .enumerate()
        .flat_map(|(j, f)| (0..f.m).map(move |i| (j, i)))
        .collect()
}

pub fn random_signed_word(p: &Presentation, rng: &mut StdRng, max_len: usize) -> Word {
    let atoms = atom_pairs(p);
    let len = rng.gen_range(0..=max_len);
    Word::new(
        (0..len)
            .map(|_| {
                let &(factor, index) = atoms.choose(rng).unwrap();
                Letter::Atom {
                    factor,
                    index,
                    inverse: rng.gen_bool(0.5),
                }
            })
            .collect(),
    )
}

/// A positive atom word whose weighted length is at most `max_weight`.
pub fn random_positive_word(
    p: &Presentation,
    rng: &mut StdRng,
    max_weight: usize,
) -> Vec<(usize, usize)> {
    let atoms = atom_pairs(p);
    let target = rng.gen_range(0..=max_weight);
    let mut w = Vec::new();
    let mut weight = 0;
    loop {
        let fits: Vec<&(usize, usize)> = atoms
            .iter()
            .filter(|(j, _)| weight + p.atom_weight(*j) <= target)
            .collect();
        let Some(&&a) = fits.choose(rng) else { break };
        weight += p.atom_weight(a.0);
        w.push(a);
    }
    w
}

pub fn random_element(p: &Presentation, rng: &mut StdRng, max_len: usize) -> GarsideElement {
    p.to_left_weighted(&random_signed_word(p, rng, max_len))
}

/// A random left-weighted element with `1 ≤ r ≤ max_r` and `|inf| ≤ 2`.
pub fn random_canonical(p: &Presentation, rng: &mut StdRng, max_r: usize) -> GarsideElement {
    let proper = p.proper_simples();
    loop {
        let r = rng.gen_range(1..=max_r);
        let mut simples: Vec<Simple> = vec![*proper.choose(rng).unwrap()];
        while simples.len() < r {
            let last = *simples.last().unwrap();
            let next: Vec<Simple> = proper
                .iter()
                .copied()
                .filter(|&t| p.is_greedy_pair(last, t))
                .collect();
            match next.choose(rng) {
                Some(&t) => simples.push(t),
                None => break,
            }
        }
        if let Ok(x) = p.element(rng.gen_range(-2..=2), simples) {
            return x;
        }
    }
}

pub fn random_rigid(p: &Presentation, rng: &mut StdRng, max_r: usize) -> GarsideElement {
    loop {
        let x = random_canonical(p, rng, max_r);
        if p.is_rigid(&x) {
            return x;
        }
    }
}

/// `s(i,ℓ)·s(i+1,ℓ)⁻¹` in factor `j`, a relator of the presentation.
pub fn relator(p: &Presentation, j: usize, i: usize) -> Word {
    let f = p.factor(j);
    let run = |start: usize| -> Vec<(usize, usize)> {
        (0..f.l).map(|t| (j, (start + t) % f.m)).collect()
    };
    Word::from_atoms(&run(i)).concat(&Word::from_atoms(&run(i + 1)).inverse())
}

/// Determinantal-divisor invariants of an integer matrix: `d_k / d_{k-1}` for
/// the nonzero `k × k` minor gcds. Independent of any elimination order.
pub fn determinantal_invariants(rows: &[Vec<i64>], cols: usize) -> Vec<u64> {
    let n = rows.len();
    let mut out = Vec::new();
    let mut prev: i128 = 1;
    for k in 1..=n.min(cols) {
        let mut g: i128 = 0;
        for rs in combinations(n, k) {
            for cs in combinations(cols, k) {
                let m: Vec<Vec<i128>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| rows[r][c] as i128).collect())
                    .collect();
                g = gcd_i128(g, det(m));
            }
        }
        if g == 0 {
            break;
        }
        out.push((g / prev) as u64);
        prev = g;
    }
    out
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Bareiss fraction-free determinant.
fn det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Abelianization straight from the defining presentation: one generator per
/// atom, one row per defining relation and per Δ identification.
pub fn abelianization_oracle(p: &Presentation) -> (usize, Vec<u64>) {
    let atoms = atom_pairs(p);
    let col = |j: usize, i: usize| atoms.iter().position(|&a| a == (j, i)).unwrap();
    let cols = atoms.len();
    let run = |j: usize, start: usize| {
        let f = p.factor(j);
        let mut v = vec![0i64; cols];
        for t in 0..f.l {
            v[col(j, (start + t) % f.m)] += 1;
        }
        v
    };
    let mut rows = Vec::new();
    for (j, f) in p.factors().iter().enumerate() {
        for i in 0..f.m {
            let d: Vec<i64> = run(j, i)
                .iter()
                .zip(run(j, i + 1))
                .map(|(a, b)| a - b)
                .collect();
            if d.iter().any(|&x| x != 0) {
                rows.push(d);
            }
        }
        if j > 0 {
            rows.push(
                run(0, 0)
                    .iter()
                    .zip(run(j, 0))
                    .map(|(a, b)| a - b)
                    .collect(),
            );
        }
    }
    let inv = determinantal_invariants(&rows, cols);
    let free = cols - inv.len();
    (free, inv.into_iter().filter(|&d| d > 1).collect())
}
