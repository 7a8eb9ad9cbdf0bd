mod common;

use circular_garside::oracle::{oracle_group_equal, word_count, Ball};
use circular_garside::{Factor, GarsideElement, Letter, Presentation, Simple, Word};
use common::*;
use proptest::prelude::*;

const PRESENTATIONS: &[&str] = &[
    "2,3", "3,3", "2,4", "3,4", "4,2", "1,5", "5,1", "1,2;1,3", "2,3;2,3", "2,3;3,3",
];

fn small_presentations(max: usize, max_factors: usize) -> Vec<Presentation> {
    let factors: Vec<Factor> = (1..=max)
        .flat_map(|m| (1..=max).map(move |l| Factor::new(m, l)))
        .collect();
    let mut out: Vec<Presentation> = factors
        .iter()
        .map(|&f| Presentation::new(vec![f]).unwrap())
        .collect();
    if max_factors >= 2 {
        for (a, f) in factors.iter().enumerate() {
            for g in &factors[a..] {
                if let Ok(p) = Presentation::new(vec![*f, *g]) {
                    out.push(p);
                }
            }
        }
    }
    out
}

fn letters_of(p: &Presentation, s: Simple) -> Vec<(usize, usize)> {
    p.simple_letters(s)
}

#[test]
fn complements_multiply_to_delta() {
    for p in small_presentations(5, 1) {
        let ball = Ball::build(&p, p.delta_length()).unwrap();
        let delta = letters_of(&p, Simple::Delta);
        for s in p.simples() {
            let mut left = letters_of(&p, s);
            left.extend(letters_of(&p, p.left_complement(s)));
            let mut right = letters_of(&p, p.right_complement(s));
            right.extend(letters_of(&p, s));
            assert!(
                ball.equal(&left, &delta),
                "{p}: s·s̄ for {}",
                p.simple_label(s)
            );
            assert!(
                ball.equal(&right, &delta),
                "{p}: s̃·s for {}",
                p.simple_label(s)
            );
        }
    }
}

#[test]
fn phi_has_order_dividing_the_center_exponent() {
    for p in small_presentations(5, 2) {
        let n = p
            .factors()
            .iter()
            .map(|f| f.m / num_integer::gcd(f.m, f.l))
            .fold(1, num_integer::lcm) as i64;
        for s in p.simples() {
            assert_eq!(p.phi(s, n), s, "{p}");
        }
    }
}

#[test]
fn divisibility_gcd_lcm_agree_with_oracle() {
    for p in small_presentations(4, 2) {
        let ball = Ball::build(&p, p.delta_length()).unwrap();
        let simples = p.simples();
        let divides =
            |a: Simple, b: Simple| ball.left_divides(&letters_of(&p, a), &letters_of(&p, b));
        for &s in &simples {
            for &t in &simples {
                assert_eq!(
                    p.left_divides(s, t),
                    divides(s, t),
                    "{p}: {} ≼ {}",
                    p.simple_label(s),
                    p.simple_label(t)
                );
                let g = p.gcd(s, t);
                assert!(divides(g, s) && divides(g, t), "{p}: gcd");
                let l = p.lcm(s, t);
                assert!(divides(s, l) && divides(t, l), "{p}: lcm");
                for &u in &simples {
                    if divides(u, s) && divides(u, t) {
                        assert!(divides(u, g), "{p}: gcd not greatest");
                    }
                    if divides(s, u) && divides(t, u) {
                        assert!(divides(l, u), "{p}: lcm not least");
                    }
                }
            }
        }
    }
}

#[test]
fn pair_normalize_agrees_with_oracle() {
    for p in small_presentations(4, 2) {
        if word_count(&p, 2 * p.delta_length()) > 200_000 {
            continue;
        }
        let ball = Ball::build(&p, 2 * p.delta_length()).unwrap();
        for s in p.proper_simples() {
            for t in p.proper_simples() {
                let mut st = letters_of(&p, s);
                st.extend(letters_of(&p, t));
                let mut out: Vec<(usize, usize)> = Vec::new();
                let product = p.pair_normalize(s, t);
                for _ in 0..product.delta_count() {
                    out.extend(letters_of(&p, Simple::Delta));
                }
                for u in product.simples() {
                    out.extend(letters_of(&p, u));
                }
                assert!(
                    ball.equal(&st, &out),
                    "{p}: {} {}",
                    p.simple_label(s),
                    p.simple_label(t)
                );
            }
        }
    }
}

/// Largest radius ≤ `max` whose ball stays under `budget` words.
fn affordable_radius(p: &Presentation, max: usize, budget: u64) -> usize {
    (1..=max)
        .rev()
        .find(|&r| word_count(p, r) <= budget)
        .unwrap_or(1)
}

#[test]
fn normal_forms_partition_like_the_oracle() {
    for p in small_presentations(4, 2) {
        let radius = affordable_radius(&p, 12, 40_000);
        let ball = Ball::build(&p, radius).unwrap();
        let mut forms: std::collections::HashMap<GarsideElement, usize> = Default::default();
        let mut classes: std::collections::HashMap<usize, GarsideElement> = Default::default();
        for w in ball.words() {
            let x = p.normalize_positive(&Word::from_atoms(w)).unwrap();
            let c = ball.class_of(w).unwrap();
            assert_eq!(
                *forms.entry(x.clone()).or_insert(c),
                c,
                "{p} r={radius}: {w:?}"
            );
            assert_eq!(
                *classes.entry(c).or_insert(x.clone()),
                x,
                "{p} r={radius}: {w:?}"
            );
        }
    }
}

#[test]
fn mixed_sign_words_agree_with_fraction_oracle() {
    use rand::SeedableRng;
    let mut rng = rand::rngs::StdRng::seed_from_u64(3);
    let mut checked = 0;
    for text in PRESENTATIONS {
        let p = pres(text);
        for _ in 0..60 {
            let u = random_signed_word(&p, &mut rng, 4);
            let v = p.element_to_word(&p.to_left_weighted(&u));
            // words whose positive form outgrows the oracle budget are skipped
            if let Ok(eq) = oracle_group_equal(&p, &u, &v) {
                assert!(eq, "{p}: {}", u.display(&p));
                checked += 1;
            }
            let w = random_signed_word(&p, &mut rng, 4);
            let same = p.to_left_weighted(&u) == p.to_left_weighted(&w);
            if p.word_weight(&u) != p.word_weight(&w) {
                assert!(!same);
            } else if let Ok(eq) = oracle_group_equal(&p, &u, &w) {
                assert_eq!(same, eq, "{p}: {} vs {}", u.display(&p), w.display(&p));
                checked += 1;
            }
        }
    }
    assert!(
        checked >= 600,
        "only {checked} comparisons fit the oracle budget"
    );
}

fn word_strategy() -> impl Strategy<Value = (usize, Vec<(usize, bool)>)> {
    (
        0..PRESENTATIONS.len(),
        prop::collection::vec((any::<usize>(), any::<bool>()), 0..10),
    )
}

fn build(p: &Presentation, raw: &[(usize, bool)]) -> Word {
    let atoms = atom_pairs(p);
    Word::new(
        raw.iter()
            .map(|&(k, inverse)| {
                let (factor, index) = atoms[k % atoms.len()];
                Letter::Atom {
                    factor,
                    index,
                    inverse,
                }
            })
            .collect(),
    )
}

proptest! {
    #[test]
    fn normal_forms_are_canonical((k, raw) in word_strategy()) {
        let p = pres(PRESENTATIONS[k]);
        let x = p.to_left_weighted(&build(&p, &raw));
        prop_assert_eq!(p.element(x.delta_exp(), x.simples().to_vec()).unwrap(), x.clone());
        prop_assert_eq!(p.to_left_weighted(&p.element_to_word(&x)), x.clone());
        let json = p.to_canonical_json(&x);
        prop_assert_eq!(p.from_canonical_json(&json).unwrap(), x);
    }

    #[test]
    fn weight_is_homogeneous((k, raw) in word_strategy()) {
        let p = pres(PRESENTATIONS[k]);
        let w = build(&p, &raw);
        prop_assert_eq!(p.element_weight(&p.to_left_weighted(&w)), p.word_weight(&w));
    }

    #[test]
    fn group_axioms((k, a) in word_strategy(), b in prop::collection::vec((any::<usize>(), any::<bool>()), 0..8),
                    c in prop::collection::vec((any::<usize>(), any::<bool>()), 0..8), e1 in -3i64..4, e2 in -3i64..4) {
        let p = pres(PRESENTATIONS[k]);
        let x = p.to_left_weighted(&build(&p, &a));
        let y = p.to_left_weighted(&build(&p, &b));
        let z = p.to_left_weighted(&build(&p, &c));
        prop_assert_eq!(p.multiply(&p.multiply(&x, &y), &z), p.multiply(&x, &p.multiply(&y, &z)));
        prop_assert!(p.multiply(&x, &p.inverse(&x)).is_identity());
        prop_assert!(p.multiply(&p.inverse(&x), &x).is_identity());
        prop_assert_eq!(p.power(&x, e1 + e2), p.multiply(&p.power(&x, e1), &p.power(&x, e2)));
        let uv = build(&p, &a).concat(&build(&p, &b));
        prop_assert_eq!(p.to_left_weighted(&uv), p.multiply(&x, &y));
    }

    #[test]
    fn word_syntax_round_trips((k, raw) in word_strategy()) {
        let p = pres(PRESENTATIONS[k]);
        let w = build(&p, &raw);
        let text = w.display(&p).to_string();
        prop_assert_eq!(Word::parse(&p, &text).unwrap(), w);
    }
}

#[test]
fn delta_letters_match_atom_spelling() {
    for text in PRESENTATIONS {
        let p = pres(text);
        let spelled = Word::from_atoms(&p.simple_letters(Simple::Delta));
        let d = Word::new(vec![Letter::Delta(1)]);
        assert_eq!(p.to_left_weighted(&spelled), p.to_left_weighted(&d));
        assert_eq!(p.to_left_weighted(&d), GarsideElement::delta_power(1));
    }
}
