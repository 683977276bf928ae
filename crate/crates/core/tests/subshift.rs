mod common;

use std::collections::BTreeSet;

use common::{all_words, greedy_expansion, SftOracle};
use infcc::shift::{
    apply_block_code, beta_root, beta_shift, build_sft, build_sft_from_text, is_admissible, product_shift,
    sofic_compare, sofic_equal, BlockCode, SftPresentation, SoficPresentation, Subshift,
};
use infcc::{Alphabet, Error};
use num_bigint::BigUint;

fn bin() -> Alphabet {
    Alphabet::digits(2)
}

fn golden() -> SftPresentation {
    build_sft_from_text(&bin(), &["11"]).unwrap()
}

fn language(s: &SoficPresentation, n: usize) -> BTreeSet<Vec<usize>> {
    s.words(n).unwrap().into_iter().collect()
}

#[test]
fn golden_mean_graph() {
    let g = golden();
    assert_eq!(g.window(), 2);
    assert_eq!(g.vertices(), &[vec![0], vec![1]]);
    let blocks: Vec<_> = g.blocks().cloned().collect();
    assert_eq!(blocks, vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
}

#[test]
fn empty_forbidden_list_is_full_shift() {
    let f = build_sft(&bin(), &[]).unwrap();
    assert_eq!(f.window(), 1);
    assert_eq!(f.edges().len(), 2);
    assert_eq!(f.count_words(3), BigUint::from(8u32));
}

#[test]
fn unknown_symbol_is_input_error() {
    assert!(matches!(build_sft_from_text(&bin(), &["12"]), Err(Error::UnknownSymbol(_))));
}

#[test]
fn golden_counts_match_brute_force() {
    let mut oracle = SftOracle::new(2, vec![vec![1, 1]]);
    let g = golden();
    for n in 1..=12 {
        assert_eq!(g.count_words(n), BigUint::from(oracle.language(n).len()), "n = {n}");
    }
    let first: Vec<BigUint> = (1..=4).map(|n| g.count_words(n)).collect();
    assert_eq!(first, [2u32, 3, 5, 8].map(BigUint::from));
}

#[test]
fn empty_shift() {
    let e = build_sft_from_text(&bin(), &["0", "1"]).unwrap();
    assert!(e.is_empty());
    assert_eq!(e.count_words(1), BigUint::from(0u32));
    assert!(e.entropy(1e-9).is_empty_shift());
    assert_eq!(Subshift::from(e).entropy(1e-9).unwrap().bits(), f64::NEG_INFINITY);
}

#[test]
fn transient_words_are_not_factors() {
    // 1 may only be followed by 1 and preceded by 0, so no point contains 1
    let s = build_sft_from_text(&bin(), &["10", "11"]).unwrap();
    let mut oracle = SftOracle::new(2, vec![vec![1, 0], vec![1, 1]]);
    for n in 1..=5 {
        assert_eq!(s.count_words(n), BigUint::from(oracle.language(n).len()));
    }
    assert_eq!(s.count_words(3), BigUint::from(1u32));
}

#[test]
fn random_sft_counts_match_brute_force() {
    let cases: &[(usize, &[&[usize]])] = &[
        (2, &[&[0, 1, 0], &[1, 1]]),
        (3, &[&[0, 0], &[1, 2], &[2, 1, 0]]),
        (3, &[&[2], &[0, 1, 1]]),
        (2, &[&[0, 0, 0], &[1, 1, 1], &[0, 1, 0]]),
    ];
    for &(k, forbidden) in cases {
        let words: Vec<Vec<usize>> = forbidden.iter().map(|w| w.to_vec()).collect();
        let s = build_sft(&Alphabet::digits(k), &words).unwrap();
        let mut oracle = SftOracle::new(k, words);
        for n in 0..=7 {
            let expected = oracle.language(n);
            assert_eq!(s.count_words(n), BigUint::from(expected.len()), "{forbidden:?} n = {n}");
            let listed: BTreeSet<_> = s.words(n).unwrap().into_iter().collect();
            assert_eq!(listed, expected);
        }
    }
}

#[test]
fn full_shift_entropies() {
    for k in [2usize, 3, 4, 8] {
        let h = SftPresentation::full_shift(&Alphabet::digits(k)).entropy(1e-12).bits();
        assert!((h - (k as f64).log2()).abs() < 1e-9);
    }
}

#[test]
fn golden_entropy_matches_count_growth() {
    let g = golden();
    let h = g.entropy(1e-12).bits();
    let mut oracle = SftOracle::new(2, vec![vec![1, 1]]);
    let c: Vec<f64> = (15..=16).map(|n| oracle.language(n).len() as f64).collect();
    // successive ratios converge like φ^(-2n)
    assert!(((c[1] / c[0]).log2() - h).abs() < 1e-5);
    assert!((h - 0.694242).abs() < 1e-6);
}

#[test]
fn products() {
    let full = SftPresentation::full_shift(&bin());
    let ff = product_shift(&full, &full).unwrap();
    assert!((ff.entropy(1e-12).bits() - 2.0).abs() < 1e-9);
    let gf = product_shift(&golden(), &full).unwrap();
    assert!((gf.entropy(1e-12).bits() - 1.0 - golden().entropy(1e-12).bits()).abs() < 2e-9);
    for n in 1..=6 {
        assert_eq!(gf.count_words(n), golden().count_words(n) * BigUint::from(1u32 << n));
    }
    let empty = build_sft_from_text(&bin(), &["0", "1"]).unwrap();
    assert!(product_shift(&golden(), &empty).unwrap().is_empty());
}

#[test]
fn block_code_images() {
    let full: Subshift = SftPresentation::full_shift(&bin()).into();
    let g: Subshift = golden().into();
    let id = apply_block_code(&BlockCode::identity(&bin()), &g).unwrap();
    assert!(sofic_equal(&id, &g.to_sofic()).unwrap());

    let one = Alphabet::new(["a"]).unwrap();
    let constant = apply_block_code(&BlockCode::symbol_map(&bin(), &one, |_| 0).unwrap(), &full).unwrap();
    assert_eq!(constant.entropy(1e-9).unwrap().bits(), 0.0);

    // x_i xor x_{i+1}, centered on a radius-1 window
    let xor = BlockCode::from_fn(bin(), bin(), 1, |w| w[1] ^ w[2]).unwrap();
    let image = apply_block_code(&xor, &full).unwrap();
    for n in 0..=8 {
        let brute: BTreeSet<Vec<usize>> = all_words(2, n + 2).iter().map(|w| xor.apply_word(w).unwrap()).collect();
        assert_eq!(language(&image, n), brute);
    }
    assert!((image.entropy(1e-12).unwrap().bits() - 1.0).abs() < 1e-9);
}

#[test]
fn block_code_on_golden_brute_force() {
    // 2-block code (x_i, x_{i+1}) -> x_i + x_{i+1} on the golden mean shift
    let three = Alphabet::digits(3);
    let code = BlockCode::from_fn(bin(), three, 1, |w| w[1] + w[2]).unwrap();
    let image = apply_block_code(&code, &golden().into()).unwrap();
    let mut oracle = SftOracle::new(2, vec![vec![1, 1]]);
    for n in 0..=6 {
        let brute: BTreeSet<Vec<usize>> =
            oracle.language(n + 2).iter().map(|w| code.apply_word(w).unwrap()).collect();
        assert_eq!(language(&image, n), brute, "n = {n}");
    }
}

fn even_by_hand() -> (SoficPresentation, SoficPresentation) {
    let a = SoficPresentation::new(bin(), 2, vec![(0, 0, 0), (0, 1, 1), (1, 1, 0)]).unwrap();
    // three states: after 0, after an odd run of 1s, after an even run
    let b = SoficPresentation::new(
        bin(),
        3,
        vec![(0, 0, 0), (0, 1, 1), (1, 1, 2), (2, 1, 1), (2, 0, 0)],
    )
    .unwrap();
    (a, b)
}

fn has_odd_run(w: &[usize]) -> bool {
    let zeros: Vec<usize> = (0..w.len()).filter(|&i| w[i] == 0).collect();
    zeros.windows(2).any(|p| (p[1] - p[0] - 1) % 2 == 1)
}

#[test]
fn even_shift_presentations_agree() {
    let (a, b) = even_by_hand();
    for n in 0..=10 {
        let brute: BTreeSet<Vec<usize>> = all_words(2, n).into_iter().filter(|w| !has_odd_run(w)).collect();
        assert_eq!(language(&a, n), brute);
        assert_eq!(language(&b, n), brute);
    }
    assert!(sofic_equal(&a, &b).unwrap());
}

#[test]
fn equality_and_witnesses() {
    let g: SoficPresentation = (&golden()).into();
    assert!(sofic_equal(&g, &(&golden()).into()).unwrap());
    let full: SoficPresentation = (&SftPresentation::full_shift(&bin())).into();
    let cmp = sofic_compare(&g, &full).unwrap();
    assert!(!cmp.equal);
    assert_eq!(cmp.witness.unwrap(), vec![1, 1]);
    let (even, _) = even_by_hand();
    let cmp = sofic_compare(&even, &full).unwrap();
    assert_eq!(cmp.witness.unwrap(), vec![0, 1, 0]);
}

#[test]
fn beta_examples() {
    let two = beta_shift(&[2]).unwrap();
    assert_eq!(two.alphabet().len(), 2);
    assert!((two.entropy(1e-12).bits() - 1.0).abs() < 1e-9);
    let phi = beta_shift(&[1, 1]).unwrap();
    assert!(sofic_equal(&(&phi).into(), &(&golden()).into()).unwrap());
    assert!((beta_root(&[1, 1]).unwrap() - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-12);
    assert!(matches!(beta_shift(&[1, 2]), Err(Error::Input(_))));
}

#[test]
fn beta_admissibility_matches_greedy_expansion() {
    let mut checked = 0;
    for len in 1..=4usize {
        for digits in all_words(4, len) {
            if digits[0] == 0 || digits[len - 1] == 0 {
                continue;
            }
            let greedy = |d: &[usize]| -> bool {
                // β from the polynomial, then expand 1 greedily
                let f = |x: f64| x.powi(d.len() as i32) - d.iter().enumerate().map(|(i, &c)| c as f64 * x.powi((d.len() - 1 - i) as i32)).sum::<f64>();
                let (mut lo, mut hi) = (1.0f64, 5.0f64);
                if f(lo) >= -1e-12 {
                    return false;
                }
                for _ in 0..200 {
                    let mid = (lo + hi) / 2.0;
                    if f(mid) < 0.0 { lo = mid } else { hi = mid }
                }
                greedy_expansion(lo, d.len() + 3) == d
            };
            assert_eq!(is_admissible(&digits), greedy(&digits), "{digits:?}");
            if is_admissible(&digits) {
                let h = beta_shift(&digits).unwrap().entropy(1e-12).bits();
                assert!((h - beta_root(&digits).unwrap().log2()).abs() < 1e-9, "{digits:?}");
            }
            checked += 1;
        }
    }
    assert!(checked > 50);
}
