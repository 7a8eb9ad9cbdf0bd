mod common;

use std::collections::HashMap;

use circular_garside::invariants::{classify_isomorphic, explicit_iso_map};
use circular_garside::oracle::Ball;
use circular_garside::{
    GarsideElement, Letter, Periodicity, Presentation, RootsVerdict, Simple, Word,
};
use common::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const SAMPLES: &[&str] = &["2,3", "3,3", "3,4", "4,6", "2,5", "1,2;1,3", "2,3;3,3"];

fn samples() -> impl Iterator<Item = Presentation> {
    SAMPLES.iter().map(|s| pres(s))
}

#[test]
fn super_summit_vertices_share_bounds_and_are_rigid_or_short() {
    let mut rng = StdRng::seed_from_u64(21);
    for p in samples() {
        for _ in 0..25 {
            let x = random_element(&p, &mut rng, 8);
            let g = p.super_summit_set(&x);
            let (inf, sup) = (g.vertices()[0].inf(), g.vertices()[0].sup());
            for v in g.vertices() {
                assert_eq!((v.inf(), v.sup()), (inf, sup), "{p}");
                assert!(
                    p.is_rigid(v) || v.canonical_length() <= 1,
                    "{p}: {}",
                    p.format_element(v)
                );
            }
            let base = &g.vertices()[g.base()];
            assert_eq!(&p.conjugate(&x, g.conjugator_to_base()), base);
            for (k, v) in g.vertices().iter().enumerate() {
                assert_eq!(&p.conjugate(base, g.conjugator_from_base(k)), v);
            }
        }
    }
}

#[test]
fn summit_bounds_are_extremal_over_conjugates() {
    let mut rng = StdRng::seed_from_u64(22);
    for p in samples() {
        for _ in 0..25 {
            let x = random_element(&p, &mut rng, 8);
            let (s, _) = p.send_to_sss(&x);
            for _ in 0..8 {
                let y = p.conjugate(&x, &random_element(&p, &mut rng, 6));
                assert!(
                    y.inf() <= s.inf() && y.sup() >= s.sup(),
                    "{p}: {}",
                    p.format_element(&x)
                );
                let (t, _) = p.send_to_sss(&y);
                assert_eq!((t.inf(), t.sup()), (s.inf(), s.sup()));
            }
        }
    }
}

#[test]
fn arrows_conjugate_correctly_and_are_minimal() {
    let mut rng = StdRng::seed_from_u64(23);
    for p in samples() {
        let nontrivial: Vec<Simple> = p
            .simples()
            .into_iter()
            .filter(|&s| s != Simple::Identity)
            .collect();
        for _ in 0..15 {
            let x = random_element(&p, &mut rng, 8);
            let g = p.super_summit_set(&x);
            for a in g.arrows() {
                let from = &g.vertices()[a.from];
                assert_eq!(&p.conjugate_by_simple(from, a.label), &g.vertices()[a.to]);
                for &t in &nontrivial {
                    if t != a.label && p.left_divides(t, a.label) {
                        assert!(
                            !g.contains(&p.conjugate_by_simple(from, t)),
                            "{p}: arrow not minimal"
                        );
                    }
                }
            }
            // every vertex is reached, so the arrows span the set
            let mut seen = vec![false; g.len()];
            seen[g.base()] = true;
            let mut stack = vec![g.base()];
            while let Some(u) = stack.pop() {
                for a in g.out_arrows(u) {
                    if !seen[a.to] {
                        seen[a.to] = true;
                        stack.push(a.to);
                    }
                }
            }
            assert!(seen.iter().all(|&b| b), "{p}: arrows do not span");
        }
    }
}

#[test]
fn random_conjugates_are_recognised() {
    let mut rng = StdRng::seed_from_u64(24);
    for p in samples() {
        for _ in 0..30 {
            let x = random_element(&p, &mut rng, 8);
            let c = random_element(&p, &mut rng, 6);
            let y = p.conjugate(&x, &c);
            let w = p
                .are_conjugate(&x, &y)
                .witness()
                .cloned()
                .expect("conjugate pair rejected");
            assert_eq!(p.conjugate(&x, &w), y);
            let z = random_element(&p, &mut rng, 8);
            assert_eq!(
                p.are_conjugate(&x, &z).is_conjugate(),
                p.are_conjugate(&z, &x).is_conjugate(),
                "{p}"
            );
        }
    }
}

#[test]
fn centralizer_generators_commute() {
    let mut rng = StdRng::seed_from_u64(25);
    for p in samples() {
        for _ in 0..15 {
            let x = random_element(&p, &mut rng, 8);
            for g in p.centralizer_generators(&x) {
                assert_eq!(p.multiply(&x, &g), p.multiply(&g, &x), "{p}");
            }
        }
    }
}

#[test]
fn periodicity_is_sound_and_complete() {
    let mut rng = StdRng::seed_from_u64(26);
    for text in ["3,4", "2,5", "3,3", "1,2;1,3"] {
        let p = pres(text);
        let classes = p.irreducible_periodic_classes();
        let mut periodic = 0;
        for t in 0..200 {
            let x = if t % 2 == 0 {
                random_element(&p, &mut rng, 8)
            } else {
                let base = &classes[rng.gen_range(0..classes.len())];
                let x = p.power(base, rng.gen_range(-3..=3));
                p.conjugate(&x, &random_element(&p, &mut rng, 6))
            };
            let central = (1..=24).find(|&k| p.power(&x, k).is_delta_power());
            match p.periodicity(&x) {
                Periodicity::Periodic { p: e, q, .. } => {
                    periodic += 1;
                    assert_eq!(p.power(&x, e as i64), GarsideElement::delta_power(q), "{p}");
                    assert!(central.is_some());
                }
                Periodicity::NotPeriodic => {
                    assert!(central.is_none(), "{p}: {}", p.format_element(&x))
                }
            }
        }
        assert!(periodic >= 80, "{p}: only {periodic} periodic samples");
    }
}

#[test]
fn periodic_elements_with_equal_exponents_are_conjugate() {
    let mut rng = StdRng::seed_from_u64(27);
    for text in ["3,4", "2,5", "4,6", "2,3"] {
        let p = pres(text);
        let classes = p.irreducible_periodic_classes();
        let mut by_exponents: HashMap<(u64, i64), Vec<GarsideElement>> = HashMap::new();
        for _ in 0..60 {
            let base = &classes[rng.gen_range(0..classes.len())];
            let x = p.power(base, rng.gen_range(-3..=3));
            let x = p.conjugate(&x, &random_element(&p, &mut rng, 6));
            let (e, q) = p.periodicity(&x).exponents().unwrap();
            by_exponents.entry((e, q)).or_default().push(x);
        }
        for group in by_exponents.values() {
            for y in &group[1..] {
                assert!(p.are_conjugate(&group[0], y).is_conjugate(), "{p}");
            }
        }
    }
}

#[test]
fn roots_verdict_ignores_the_sign_of_n() {
    let mut rng = StdRng::seed_from_u64(28);
    for p in samples() {
        for _ in 0..20 {
            let a = random_element(&p, &mut rng, 6);
            let n = rng.gen_range(1..=3);
            let b = match rng.gen_range(0..3) {
                0 => p.conjugate(&a, &random_element(&p, &mut rng, 4)),
                1 => {
                    let an = p.power(&a, n);
                    let gens = p.centralizer_generators(&an);
                    match gens.first() {
                        Some(c) => p.conjugate(&a, c),
                        None => a.clone(),
                    }
                }
                _ => random_element(&p, &mut rng, 6),
            };
            let pos = p.same_power_conjugate(&a, &b, n);
            let neg = p.same_power_conjugate(&a, &b, -n);
            assert_eq!(
                std::mem::discriminant(&pos),
                std::mem::discriminant(&neg),
                "{p}"
            );
            for v in [pos, neg] {
                if let RootsVerdict::Conjugate(w) = v {
                    assert_eq!(p.conjugate(&a, &w), b);
                }
            }
        }
    }
}

#[test]
fn abelianization_matches_the_defining_relations() {
    let mut presentations: Vec<Presentation> = Vec::new();
    for m in 1..=5 {
        for l in 1..=5 {
            presentations.push(Presentation::circular(m, l).unwrap());
        }
    }
    for a in ["1,2", "2,2", "2,3", "3,2", "3,3", "1,3", "2,1"] {
        for b in ["1,2", "2,2", "2,3", "3,2", "3,3", "1,3", "2,1"] {
            if let Ok(p) = format!("{a};{b}").parse() {
                presentations.push(p);
            }
        }
    }
    assert!(presentations.len() > 40);
    for p in presentations {
        let h1 = p.abelianization();
        let (free, torsion) = abelianization_oracle(&p);
        assert_eq!((h1.free_rank, h1.torsion.clone()), (free, torsion), "{p}");
        assert_eq!(p.homology(2).free_rank, h1.free_rank - 1, "{p}");
        assert!(p.homology(2).torsion.is_empty() && p.homology(3).is_trivial());
    }
}

#[test]
fn iso_map_preserves_equality_of_words() {
    for (m, l) in [(2, 3), (3, 2), (2, 4), (3, 4), (4, 3)] {
        let src = Presentation::circular(m, l).unwrap();
        let tgt = Presentation::circular(l, m).unwrap();
        let ball = Ball::build(&src, 2 * src.delta_length()).unwrap();
        let image = |w: &[(usize, usize)]| {
            tgt.to_left_weighted(&explicit_iso_map(m, l, &Word::from_atoms(w)).unwrap())
        };
        let mut reps: HashMap<GarsideElement, usize> = HashMap::new();
        for class in ball.classes() {
            let x = image(&class[0]);
            for w in &class[1..] {
                assert_eq!(image(w), x, "G({m},{l}): {w:?}");
            }
            // distinct classes stay distinct: the map is injective
            let id = reps.len();
            assert!(
                reps.insert(x, id).is_none(),
                "G({m},{l}): two classes collide"
            );
        }
    }
}

#[test]
fn iso_map_inverts_itself() {
    let mut rng = StdRng::seed_from_u64(29);
    for (m, l) in [(2, 3), (3, 4), (2, 5), (4, 3)] {
        let src = Presentation::circular(m, l).unwrap();
        for _ in 0..40 {
            let w = random_signed_word(&src, &mut rng, 6);
            let back = explicit_iso_map(l, m, &explicit_iso_map(m, l, &w).unwrap()).unwrap();
            assert_eq!(src.to_left_weighted(&back), src.to_left_weighted(&w));
        }
    }
}

#[test]
fn classification_agrees_with_invariants() {
    let mut counts: HashMap<(usize, usize), usize> = HashMap::new();
    for m in 1..=5 {
        for l in 1..=5 {
            let p = Presentation::circular(m, l).unwrap();
            counts.insert((m, l), p.irreducible_periodic_classes().len());
        }
    }
    for m in 1..=5 {
        for l in 1..=5 {
            for m2 in 1..=5 {
                for l2 in 1..=5 {
                    let (p, q) = (
                        Presentation::circular(m, l).unwrap(),
                        Presentation::circular(m2, l2).unwrap(),
                    );
                    if classify_isomorphic(&p, &q).unwrap() {
                        assert_eq!(p.abelianization(), q.abelianization(), "{p} vs {q}");
                        assert_eq!(p.homology(2), q.homology(2));
                        let abelian = |a: usize, b: usize| a == 1 || b == 1;
                        if !abelian(m, l) {
                            assert_eq!(counts[&(m, l)], counts[&(m2, l2)], "{p} vs {q}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn oracle_equality_is_a_congruence() {
    let mut rng = StdRng::seed_from_u64(30);
    for p in [pres("2,3"), pres("3,4"), pres("2,2;1,2")] {
        let ball = Ball::build(&p, 2 * p.delta_length()).unwrap();
        let classes: Vec<_> = ball.classes().into_iter().filter(|c| c.len() > 1).collect();
        for _ in 0..200 {
            let class = &classes[rng.gen_range(0..classes.len())];
            let (u, v) = (
                &class[rng.gen_range(0..class.len())],
                &class[rng.gen_range(0..class.len())],
            );
            let room = ball.radius() - ball.word_weight(u);
            let x = random_positive_word(&p, &mut rng, room);
            let room = room - ball.word_weight(&x);
            let y = random_positive_word(&p, &mut rng, room);
            let wrap = |w: &[(usize, usize)]| [x.as_slice(), w, y.as_slice()].concat();
            assert!(ball.equal(&wrap(u), &wrap(v)), "{p}");
        }
    }
}

#[test]
fn factor_letters_embed_as_written() {
    let p = pres("2,3;3,3");
    let a = Word::new(vec![Letter::Atom {
        factor: 1,
        index: 2,
        inverse: false,
    }]);
    let x = p.to_left_weighted(&a);
    assert_eq!(x.simples(), [p.atom(1, 2)]);
}
