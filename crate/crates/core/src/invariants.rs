//! Homology, abelianization, isomorphisms between circular groups and the
//! rank-2 braid table.

use std::fmt;

use num_integer::{gcd, Integer};
use serde::Serialize;

use crate::element::{Letter, Word};
use crate::error::{Error, Result};
use crate::presentation::Presentation;

/// `Z^free_rank ⊕ Z/t_1 ⊕ … ⊕ Z/t_k` with `t_1 | t_2 | … | t_k`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianGroup {
    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn trivial() -> Self {
        AbelianGroup::default()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Cokernel of an integer relation matrix with `cols` generators.
    pub fn from_relations(rows: &[Vec<i64>], cols: usize) -> Self {
        let diag = smith_diagonal(rows, cols);
        let rank = diag.len();
        AbelianGroup {
            free_rank: cols - rank,
            torsion: diag.into_iter().filter(|&d| d > 1).collect(),
        }
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" ⊕ "))
        }
    }
}

/// Nonzero invariant factors of an integer matrix, in divisibility order.
///
/// Pivots are always taken at the entry of smallest absolute value.
pub fn smith_diagonal(rows: &[Vec<i64>], cols: usize) -> Vec<u64> {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), cols, "ragged relation matrix");
            r.iter().map(|&x| x as i128).collect()
        })
        .collect();
    let n_rows = a.len();
    let mut diag: Vec<i128> = Vec::new();
    let mut t = 0;
    while t < n_rows.min(cols) {
        let pivot = (t..n_rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| a[i][j] != 0)
            .min_by_key(|&(i, j)| (a[i][j].abs(), i, j));
        let Some((pi, pj)) = pivot else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let p = a[t][t];
        let mut clean = true;
        for i in t + 1..n_rows {
            let q = Integer::div_floor(&a[i][t], &p);
            if q != 0 {
                let pivot = a[t].clone();
                for (x, y) in a[i][t..].iter_mut().zip(&pivot[t..]) {
                    *x -= q * y;
                }
            }
            clean &= a[i][t] == 0;
        }
        for j in t + 1..cols {
            let q = Integer::div_floor(&a[t][j], &p);
            if q != 0 {
                for row in a.iter_mut() {
                    row[j] -= q * row[t];
                }
            }
            clean &= a[t][j] == 0;
        }
        if clean {
            diag.push(p.abs());
            t += 1;
        }
    }
    // Diagonal to invariant-factor form.
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let (g, l) = (gcd(diag[i], diag[j]), diag[i].lcm(&diag[j]));
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag.into_iter().map(|d| d as u64).collect()
}

impl Presentation {
    /// Cell counts `(|X₀|, |X₁|, |X₂|)` of the Dehornoy–Lafont complex;
    /// all higher dimensions are empty.
    pub fn dl_cells(&self) -> [usize; 3] {
        let a = self.atom_count();
        [1, a, a - 1]
    }

    pub fn abelianization(&self) -> AbelianGroup {
        let ds: Vec<usize> = self.factors().iter().map(|f| gcd(f.m, f.l)).collect();
        let cols: usize = ds.iter().sum();
        let offsets: Vec<usize> = ds
            .iter()
            .scan(0, |acc, &d| {
                let o = *acc;
                *acc += d;
                Some(o)
            })
            .collect();
        let delta_image = |j: usize| {
            let mut v = vec![0i64; cols];
            let per = (self.factor(j).l / ds[j]) as i64;
            for c in 0..ds[j] {
                v[offsets[j] + c] = per;
            }
            v
        };
        let first = delta_image(0);
        let rows: Vec<Vec<i64>> = (1..self.num_factors())
            .map(|j| {
                first
                    .iter()
                    .zip(delta_image(j))
                    .map(|(a, b)| a - b)
                    .collect()
            })
            .collect();
        AbelianGroup::from_relations(&rows, cols)
    }

    /// Integral homology `H_n`.
    pub fn homology(&self, n: usize) -> AbelianGroup {
        match n {
            0 => AbelianGroup::free(1),
            1 => self.abelianization(),
            2 => AbelianGroup::free(self.abelianization().free_rank.saturating_sub(1)),
            _ => AbelianGroup::trivial(),
        }
    }
}

/// Whether two circular groups are isomorphic.
pub fn classify_isomorphic(p1: &Presentation, p2: &Presentation) -> Result<bool> {
    let (a, b) = match (p1.factors(), p2.factors()) {
        ([a], [b]) => (a, b),
        _ => return Err(Error::NotCircular),
    };
    let cyclic = |m: usize, l: usize| m == 1 || l == 1;
    Ok((cyclic(a.m, a.l) && cyclic(b.m, b.l))
        || (a.m, a.l) == (b.m, b.l)
        || (a.m, a.l) == (b.l, b.m))
}

fn atom_letter(index: usize, inverse: bool) -> Letter {
    Letter::Atom {
        factor: 0,
        index,
        inverse,
    }
}

/// `x_start x_{start+1} ⋯` of length `len`, indices mod `n`.
fn consecutive(start: usize, len: usize, n: usize) -> Word {
    Word::new(
        (0..len)
            .map(|t| atom_letter((start + t) % n, false))
            .collect(),
    )
}

fn power_word(w: &Word, e: i64) -> Word {
    let base = if e < 0 { w.inverse() } else { w.clone() };
    (0..e.unsigned_abs()).fold(Word::empty(), |acc, _| acc.concat(&base))
}

/// `c⁻¹ x c`.
fn conj_word(x: &Word, c: &Word) -> Word {
    c.inverse().concat(x).concat(c)
}

/// The isomorphism `G(m,ℓ) → G(ℓ,m)` on words.
///
/// For `m < ℓ` atoms go to `f(a_i) = t(m−i,i)⁻¹·b_{m−i−1}·t(m−i,i)`; for
/// `m > ℓ` the inverse map `g` of the opposite direction is used, so applying
/// the function twice returns an equal element.
pub fn explicit_iso_map(m: usize, l: usize, w: &Word) -> Result<Word> {
    Presentation::circular(m, l)?;
    let image_of_atom = |i: usize| -> Word {
        if m < l {
            // t(j,k) = b_j ⋯ b_{j+k−1} in M(ℓ,m)
            let t = consecutive(m - i, i, l);
            conj_word(&Word::new(vec![atom_letter(m - i - 1, false)]), &t)
        } else {
            // here the source is M(ℓ',m') with m' = l < ℓ' = m
            let (small, j) = (l, i);
            let (p, jr) = (j / small, j % small);
            let k = small - jr - 1;
            let s0k = consecutive(0, k, small);
            let base = conj_word(&Word::new(vec![atom_letter(k, false)]), &s0k.inverse());
            conj_word(&base, &power_word(&consecutive(0, small, small), p as i64))
        }
    };
    let mut out = Word::empty();
    for letter in w.letters() {
        match *letter {
            Letter::Atom {
                factor,
                index,
                inverse,
            } => {
                if factor != 0 || index >= m {
                    return Err(Error::InvalidWord(format!(
                        "letter {letter:?} not in G({m},{l})"
                    )));
                }
                if m == l {
                    out.push(*letter);
                } else {
                    let img = image_of_atom(index);
                    out = out.concat(&if inverse { img.inverse() } else { img });
                }
            }
            Letter::Delta(e) => {
                if m == l {
                    out.push(*letter);
                } else {
                    let img = consecutive(0, l, m)
                        .letters()
                        .iter()
                        .map(|a| match *a {
                            Letter::Atom { index, .. } => image_of_atom(index),
                            Letter::Delta(_) => unreachable!(),
                        })
                        .fold(Word::empty(), |acc, x| acc.concat(&x));
                    out = out.concat(&power_word(&img, e));
                }
            }
        }
    }
    Ok(out)
}

/// A letter `x_i` or `x_i⁻¹` of the free group `F_{m−1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FreeLetter {
    pub index: usize,
    pub inverse: bool,
}

/// Image of an element of `G(m,m)` in `Z × F_{m−1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GmmImage {
    pub z_exp: i64,
    pub free_word: Vec<FreeLetter>,
}

impl fmt::Display for GmmImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z^{}", self.z_exp)?;
        for x in &self.free_word {
            write!(f, " x{}", x.index)?;
            if x.inverse {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

fn push_reduced(word: &mut Vec<FreeLetter>, x: FreeLetter) {
    match word.last() {
        Some(y) if y.index == x.index && y.inverse != x.inverse => {
            word.pop();
        }
        _ => word.push(x),
    }
}

/// Maps `a_i ↦ x_i` (`i ≤ m−2`), `a_{m−1} ↦ (x_0⋯x_{m−2})⁻¹z`, `Δ ↦ z`.
pub fn gmm_decompose(pres: &Presentation, w: &Word) -> Result<GmmImage> {
    let f = match pres.factors() {
        [f] => *f,
        _ => return Err(Error::NotCircular),
    };
    if f.m != f.l {
        return Err(Error::NotSquare { m: f.m, l: f.l });
    }
    let m = f.m;
    let mut z_exp = 0i64;
    let mut free: Vec<FreeLetter> = Vec::new();
    for letter in w.letters() {
        match *letter {
            Letter::Delta(e) => z_exp += e,
            Letter::Atom { index, inverse, .. } if index + 1 < m => {
                push_reduced(&mut free, FreeLetter { index, inverse })
            }
            Letter::Atom { inverse, .. } => {
                // a_{m−1}^{±1} = ((x_0⋯x_{m−2})⁻¹)^{±1} z^{±1}
                z_exp += if inverse { -1 } else { 1 };
                if inverse {
                    for index in 0..m - 1 {
                        push_reduced(
                            &mut free,
                            FreeLetter {
                                index,
                                inverse: false,
                            },
                        );
                    }
                } else {
                    for index in (0..m - 1).rev() {
                        push_reduced(
                            &mut free,
                            FreeLetter {
                                index,
                                inverse: true,
                            },
                        );
                    }
                }
            }
        }
    }
    Ok(GmmImage {
        z_exp,
        free_word: free,
    })
}

const BRAID_TABLE: &str = include_str!("../data/braid_rank2.txt");

fn braid_table() -> Result<Vec<(String, String, String)>> {
    let mut entries = Vec::new();
    for (n, raw) in BRAID_TABLE.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |reason: &str| Error::BraidTable {
            line: n + 1,
            reason: reason.into(),
        };
        let mut parts = line.split_whitespace();
        let (Some(label), Some(value), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(bad("expected `<label> <m>,<l>`"));
        };
        let (m, l) = value
            .split_once(',')
            .ok_or_else(|| bad("value is not `m,l`"))?;
        entries.push((label.to_string(), m.to_string(), l.to_string()));
    }
    Ok(entries)
}

/// Parses `G(a,b,2)` into `(a, b)`.
fn parse_family(label: &str) -> Option<(usize, usize)> {
    let inner = label.strip_prefix("G(")?.strip_suffix(')')?;
    let nums: Vec<usize> = inner
        .split(',')
        .map(|t| t.trim().parse().ok())
        .collect::<Option<_>>()?;
    match nums[..] {
        [a, b, 2] if b > 0 && a % b == 0 => Some((a, b)),
        _ => None,
    }
}

fn is_reducible_label(label: &str) -> bool {
    let norm = label.replace(['×', 'x', '*'], "x");
    let parts: Vec<&str> = norm.split('x').collect();
    parts.len() == 2
        && parts.iter().all(|p| {
            p.trim()
                .strip_prefix("Z/")
                .is_some_and(|n| n.parse::<usize>().is_ok_and(|d| d >= 1))
        })
}

/// Circular parameters `(m, ℓ)` of the braid group of a rank-2 complex
/// reflection group.
pub fn braid_rank2_lookup(label: &str) -> Result<(usize, usize)> {
    let label = label.trim();
    let table = braid_table()?;
    let (key, e) = if is_reducible_label(label) {
        ("Z/d×Z/d'".to_string(), None)
    } else if let Some((de, e)) = parse_family(label) {
        let d = de / e;
        match (d, e) {
            (1, 2) => ("Z/d×Z/d'".to_string(), None),
            (1, e) if e >= 3 => ("G(e,e,2)".to_string(), Some(e)),
            (d, e) if d >= 2 && e % 2 == 1 => ("G(de,e,2):e-odd".to_string(), Some(e)),
            (d, e) if d >= 2 => ("G(de,e,2):e-even".to_string(), Some(e)),
            _ => return Err(Error::UnknownLabel(label.into())),
        }
    } else {
        (label.to_string(), None)
    };
    let (_, m, l) = table
        .iter()
        .find(|(k, _, _)| *k == key)
        .ok_or_else(|| Error::UnknownLabel(label.into()))?;
    let value = |s: &str| -> Result<usize> {
        match (s, e) {
            ("e", Some(e)) => Ok(e),
            _ => s
                .parse()
                .map_err(|_| Error::UnknownLabel(format!("{label}: bad table value `{s}`"))),
        }
    };
    Ok((value(m)?, value(l)?))
}
