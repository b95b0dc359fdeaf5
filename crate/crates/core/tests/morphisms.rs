mod common;

use common::*;
use palrich::{Alphabet, IncidenceMatrix, Letter, Morphism};
use proptest::prelude::*;

fn digits(n: u32) -> std::sync::Arc<Alphabet> {
    Alphabet::new((0..n).map(|i| i.to_string())).unwrap()
}

fn morphism_strategy(d: u32, max_len: usize) -> impl Strategy<Value = Morphism> {
    prop::collection::vec(prop::collection::vec(0..d, 1..=max_len), d as usize).prop_map(
        move |imgs| {
            let alphabet = digits(d);
            let images = imgs.into_iter().map(|l| word_in(&alphabet, l)).collect();
            Morphism::new(&alphabet, &alphabet, images).unwrap()
        },
    )
}

fn matrix_oracle(phi: &Morphism) -> Vec<Vec<u64>> {
    let d = phi.domain().size();
    let mut rows = vec![vec![0u64; d]; d];
    for (b, img) in images(phi).iter().enumerate() {
        for &a in img {
            rows[a as usize][b] += 1;
        }
    }
    rows
}

fn product(x: &[Vec<u64>], y: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let d = x.len();
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| (0..d).map(|k| x[i][k] * y[k][j]).sum())
                .collect()
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn chain_relation_holds(phi in (2u32..=3).prop_flat_map(|d| morphism_strategy(d, 6))) {
        let chain = phi.conjugation_chain().unwrap();
        prop_assume!(!chain.cyclic);
        let left = images(chain.leftmost().unwrap());
        for (t, pos) in chain.positions.iter().enumerate() {
            let c = chain.conjugators[t].letters();
            prop_assert_eq!(c.len(), t);
            for (a, img) in images(pos).iter().enumerate() {
                let lhs: Vec<Letter> = img.iter().chain(c).copied().collect();
                let rhs: Vec<Letter> = c.iter().chain(&left[a]).copied().collect();
                prop_assert_eq!(lhs, rhs);
            }
        }
        let firsts: std::collections::BTreeSet<_> = left.iter().map(|w| w[0]).collect();
        prop_assert!(firsts.len() > 1);
        let right = images(chain.rightmost().unwrap());
        let lasts: std::collections::BTreeSet<_> = right.iter().map(|w| *w.last().unwrap()).collect();
        prop_assert!(lasts.len() > 1);
        prop_assert_eq!(&chain.positions[chain.input_position], &phi);
    }

    #[test]
    fn incidence_matrix_multiplies(
        (sigma, phi) in (2u32..=3).prop_flat_map(|d| (morphism_strategy(d, 5), morphism_strategy(d, 5)))
    ) {
        prop_assert_eq!(phi.incidence_matrix().rows().to_vec(), matrix_oracle(&phi));
        let composed = sigma.compose(&phi).unwrap();
        prop_assert_eq!(
            composed.incidence_matrix().rows().to_vec(),
            product(&matrix_oracle(&sigma), &matrix_oracle(&phi))
        );
        let lens: Vec<u64> = phi.images().iter().map(|w| w.len() as u64).collect();
        prop_assert_eq!(phi.incidence_matrix().column_sums(), lens);
    }

    #[test]
    fn image_length_is_matrix_norm(
        (phi, u) in (2u32..=3).prop_flat_map(|d| (morphism_strategy(d, 5), prop::collection::vec(0..d, 0..30)))
    ) {
        let d = phi.domain().size();
        let mut counts = vec![0u64; d];
        for &a in &u {
            counts[a as usize] += 1;
        }
        let m = matrix_oracle(&phi);
        let norm: u64 = (0..d).map(|i| (0..d).map(|j| m[i][j] * counts[j]).sum::<u64>()).sum();
        let image = phi.apply(&word_in(phi.domain(), u.clone())).unwrap();
        prop_assert_eq!(image.len() as u64, norm);
        prop_assert_eq!(image.letters(), &apply(&images(&phi), &u)[..]);
    }

    #[test]
    fn apply_distributes(
        (phi, u, v) in (2u32..=3).prop_flat_map(|d| (
            morphism_strategy(d, 5),
            prop::collection::vec(0..d, 0..20),
            prop::collection::vec(0..d, 0..20),
        ))
    ) {
        let a = phi.domain();
        let (u, v) = (word_in(a, u), word_in(a, v));
        prop_assert_eq!(
            phi.apply(&u.concat(&v)).unwrap(),
            phi.apply(&u).unwrap().concat(&phi.apply(&v).unwrap())
        );
    }

    #[test]
    fn perron_data_is_consistent(phi in (2u32..=3).prop_flat_map(|d| morphism_strategy(d, 4))) {
        prop_assume!(phi.is_primitive().unwrap());
        let p = phi.perron().unwrap();
        prop_assert!(p.residual <= 1e-9);
        prop_assert!((p.densities.iter().sum::<f64>() - 1.0).abs() <= 1e-12);
        prop_assert!(p.densities.iter().all(|&x| x > 0.0));
        if phi.domain().size() == 2 {
            let m = matrix_oracle(&phi);
            let (a, b, c, d) = (m[0][0] as f64, m[0][1] as f64, m[1][0] as f64, m[1][1] as f64);
            let tr = a + d;
            let det = a * d - b * c;
            let root = (tr + (tr * tr - 4.0 * det).sqrt()) / 2.0;
            prop_assert!((p.eigenvalue - root).abs() <= 1e-9);
        }
    }

    #[test]
    fn fixed_point_prefixes_are_consistent(
        (phi, n, k) in (2u32..=3)
            .prop_flat_map(|d| morphism_strategy(d, 4))
            .prop_flat_map(|phi| (Just(phi), 0usize..200, 0usize..200))
    ) {
        prop_assume!(phi.check_substitution(0).is_ok());
        let (short, long) = (n.min(k), n.max(k));
        let a = phi.fixed_point_prefix(0, short).unwrap();
        let b = phi.fixed_point_prefix(0, long).unwrap();
        prop_assert!(b.starts_with(&a));
        prop_assert_eq!(b.letters(), &fixed_point(&phi, 0, long)[..]);
    }
}

#[test]
fn primitivity_matches_matrix_powers() {
    // Exhaustive over binary morphisms with images of length at most 3.
    let alphabet = digits(2);
    let all: Vec<Vec<Letter>> = (1..=3).flat_map(binary_words).collect();
    for x in &all {
        for y in &all {
            let phi = Morphism::new(
                &alphabet,
                &alphabet,
                vec![word_in(&alphabet, x.clone()), word_in(&alphabet, y.clone())],
            )
            .unwrap();
            let m = matrix_oracle(&phi);
            let mut power = m.clone();
            let mut positive = false;
            for _ in 0..16 {
                if power.iter().flatten().all(|&v| v > 0) {
                    positive = true;
                    break;
                }
                power = product(&power, &m);
            }
            assert_eq!(phi.is_primitive().unwrap(), positive, "{phi}");
        }
    }
}

#[test]
fn incidence_matrix_constructor_round_trips() {
    let m = IncidenceMatrix::from_rows(vec![vec![1, 1], vec![1, 0]]);
    assert_eq!(m.mul(&m).rows(), &[vec![2, 1], vec![1, 1]][..]);
    assert_eq!(m.get(0, 1), 1);
}
