//! Acceptance suite: one test per criterion, exact arithmetic throughout.
//!
//! Each test prints a PASS line with its elapsed time (visible with
//! `cargo test --test acceptance -- --nocapture`). The n = 6 tier of the
//! Proposition-2 suite is behind `--ignored` because it decides every one
//! of the 2825 subspaces of F2^6.

use std::time::Instant;
use tricode::codes::{LinearCode, DEFAULT_DISTANCE_BUDGET};
use tricode::gf2::{BitMatrix, BitVector};
use tricode::oracle;
use tricode::poset::{
    enumerate_triorthogonal, extend, extension_candidates, is_maximal, is_minimal_in, leq,
    obstruction_all_ones, paper_minimal_predicate, subspaces, Parity, PosetNode,
};
use tricode::quantum::{csst_check, css_params, tri_quantum_params};
use tricode::triortho::{
    check_transform, decide_triorthogonal, gram, is_triorthogonal, BlockTransform, Decision,
    TriorthogonalForm, DEFAULT_SEARCH_LIMIT,
};

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

fn pass(name: &str, started: Instant) {
    println!("criterion {name}: PASS in {:.3?}", started.elapsed());
}

fn paper_code() -> LinearCode {
    LinearCode::from_bit_strings(&["11000", "01100", "00011"])
}

#[test]
fn criterion_01_worked_counterexample_exact() {
    let started = Instant::now();
    let c = paper_code();

    assert_eq!(c.dual(), LinearCode::from_bit_strings(&["11100", "00011"]));
    assert_eq!(
        c.schur_square(),
        LinearCode::from_bit_strings(&["10000", "01000", "00100", "00011"])
    );
    assert_eq!(c.schur_square(), c.sum(&c.dual()));
    assert_eq!(c.hull(), LinearCode::from_bit_strings(&["00011"]));
    assert_eq!(
        decide_triorthogonal(&c, DEFAULT_SEARCH_LIMIT).unwrap(),
        Decision::NotTriorthogonal
    );
    assert!(c.is_even());

    pass("1 (worked counterexample)", started);
}

fn proposition_2_suite(n: usize) {
    let enumeration = enumerate_triorthogonal(n).unwrap();
    assert!(!enumeration.nodes.is_empty());
    for node in &enumeration.nodes {
        let c = node.code();
        let square = c.schur_square();
        let hull = c.hull();
        assert!(
            c.sum(&c.dual()).contains_code(&square),
            "square not inside C + C⊥ for {:?}",
            c.basis().to_string()
        );
        let pair = csst_check(c, &hull).expect("hull pair must verify");
        assert!(pair.is_verified());
    }
}

#[test]
fn criterion_02_square_inside_sum_and_hull_pair_verifies() {
    let started = Instant::now();
    for n in 2..=5 {
        proposition_2_suite(n);
    }
    pass("2 (square ⊆ C + C⊥, hull pair CSS-T, n ≤ 5)", started);
}

#[test]
#[ignore = "slow tier: decides all 2825 subspaces of F2^6"]
fn criterion_02_slow_tier_n6() {
    let started = Instant::now();
    proposition_2_suite(6);
    params_agreement(6);
    pass("2 (slow tier, n = 6)", started);
}

fn block_identity(form: &TriorthogonalForm) -> bool {
    let g = gram(&form.stacked());
    let k = form.k1() + form.k0();
    (0..k).all(|i| (0..k).all(|j| g.row(i).get(j) == (i == j && i < form.k1())))
}

#[test]
fn criterion_03_gram_and_hull_identities_on_every_form() {
    let started = Instant::now();
    let mut forms: Vec<TriorthogonalForm> = Vec::new();
    for n in 2..=5 {
        forms.extend(
            enumerate_triorthogonal(n)
                .unwrap()
                .nodes
                .into_iter()
                .map(|node| node.form().clone()),
        );
    }
    for rows in [&["111", "110"][..], &["1110000", "0001000"][..], &["11"][..]] {
        forms.push(TriorthogonalForm::normal_form(&BitMatrix::from_bit_strings(rows)).unwrap());
    }
    let mut seed_rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        forms.push(random_form(&mut seed_rng, 10, 3));
    }
    assert!(forms.len() > 400);
    for form in &forms {
        assert!(block_identity(form));
        assert_eq!(&LinearCode::from_generators(form.g0()), form.hull());
        assert_eq!(form.hull(), &form.code().hull());
        assert_eq!(
            form.code().hull(),
            form.code().relative_hull(&form.code().schur_square())
        );
    }
    pass("3 (Gram block identity and hull identities)", started);
}

fn matrix_from_bits(n: usize, bits: u32) -> BitMatrix {
    let rows = (0..n)
        .map(|r| BitVector::from_bits((0..n).map(|c| bits >> (r * n + c) & 1 == 1)))
        .collect();
    BitMatrix::from_rows(n, rows)
}

#[test]
fn criterion_04_nonsingular_triorthogonal_is_permutation_exhaustive() {
    let started = Instant::now();
    let general_linear_sizes = [(2usize, 6u64), (3, 168), (4, 20160)];
    for (n, expected_nonsingular) in general_linear_sizes {
        let mut nonsingular = 0u64;
        for bits in 0..1u32 << (n * n) {
            let m = matrix_from_bits(n, bits);
            if m.rank() != n {
                continue;
            }
            nonsingular += 1;
            assert_eq!(
                is_triorthogonal(&m),
                m.is_permutation(),
                "disagreement at n = {n}, bits = {bits:#x}"
            );
        }
        assert_eq!(nonsingular, expected_nonsingular);
    }
    pass("4 (nonsingular triorthogonal ⇔ permutation, n ≤ 4)", started);
}

/// A random triorthogonal form: a random nonzero seed vector, extended a
/// few times by random vectors in the dual of the Schur square.
fn random_form(rng: &mut ChaCha8Rng, max_len: usize, max_steps: usize) -> TriorthogonalForm {
    let n = rng.random_range(2..=max_len);
    let seed_vector = loop {
        let v = BitVector::from_bits((0..n).map(|_| rng.random::<bool>()));
        if !v.is_zero() {
            break v;
        }
    };
    let mut form =
        TriorthogonalForm::normal_form(&BitMatrix::from_rows(n, vec![seed_vector])).unwrap();
    for _ in 0..rng.random_range(0..=max_steps) {
        let candidates = extension_candidates(&form);
        if candidates.is_empty() {
            break;
        }
        let pick = rng.random_range(0..candidates.len());
        form = extend(&form, &candidates[pick].vector).unwrap();
    }
    form
}

fn random_bit_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> BitMatrix {
    let rows = (0..rows)
        .map(|_| BitVector::from_bits((0..cols).map(|_| rng.random::<bool>())))
        .collect();
    BitMatrix::from_rows(cols, rows)
}

fn random_nonsingular(rng: &mut ChaCha8Rng, k: usize) -> BitMatrix {
    loop {
        let m = random_bit_matrix(rng, k, k);
        if m.rank() == k {
            return m;
        }
    }
}

fn random_block_transform(rng: &mut ChaCha8Rng, k1: usize, k0: usize) -> BlockTransform {
    let mut order: Vec<usize> = (0..k1).collect();
    order.shuffle(rng);
    let p = BitMatrix::identity(k1).select_rows(&order);
    let m2 = random_bit_matrix(rng, k1, k0);
    let m4 = random_nonsingular(rng, k0);
    BlockTransform::new(p, m2, m4).expect("valid blocks by construction")
}

#[test]
fn criterion_05_transform_classification_randomized() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(17);

    // direction (a): every block transform of a normal form stays triorthogonal
    for _ in 0..1000 {
        let form = random_form(&mut rng, 10, 3);
        let bt = random_block_transform(&mut rng, form.k1(), form.k0());
        let product = &bt.assemble() * &form.stacked();
        assert!(is_triorthogonal(&product));
        assert!(check_transform(&form, &bt.assemble()).unwrap().is_some());
    }

    // direction (b): block admissibility agrees with the direct predicate
    for trial in 0..1000 {
        let form = random_form(&mut rng, 10, 3);
        let k = form.k1() + form.k0();
        let m = if trial % 2 == 0 {
            random_nonsingular(&mut rng, k)
        } else {
            random_block_transform(&mut rng, form.k1(), form.k0()).assemble()
        };
        let classified = check_transform(&form, &m).unwrap().is_some();
        let direct = is_triorthogonal(&(&m * &form.stacked()));
        assert_eq!(classified, direct, "trial {trial}");
    }

    pass("5 (transform classification, 1000 trials per direction)", started);
}

#[test]
fn criterion_06_extension_rule_and_parameter_propagation() {
    let started = Instant::now();
    for n in 2..=5 {
        for node in enumerate_triorthogonal(n).unwrap().nodes {
            let form = node.form();
            let before = tri_quantum_params(form, DEFAULT_DISTANCE_BUDGET).unwrap();
            for candidate in extension_candidates(form) {
                let extended = extend(form, &candidate.vector).unwrap();
                assert!(is_triorthogonal(&extended.stacked()));
                let after = tri_quantum_params(&extended, DEFAULT_DISTANCE_BUDGET).unwrap();
                match candidate.parity {
                    Parity::Odd => {
                        assert_eq!(extended.hull(), form.hull());
                        assert_eq!(extended.k1(), form.k1() + 1);
                        assert_eq!(after.k, before.k + 1);
                        assert_eq!(after.d_bound, before.d_bound);
                    }
                    Parity::Even => {
                        assert_eq!(extended.hull().dimension(), form.hull().dimension() + 1);
                        assert!(after.d_bound >= before.d_bound);
                    }
                }
            }
        }
    }
    pass("6 (extension rule and parameter propagation, n ≤ 5)", started);
}

#[test]
fn criterion_07_minimal_and_maximal_elements() {
    let started = Instant::now();
    for n in 2..=5 {
        let nodes = enumerate_triorthogonal(n).unwrap().nodes;

        // maximal elements coincide with the square-dual characterization
        for a in &nodes {
            let has_strict_upper = nodes
                .iter()
                .any(|b| b.code() != a.code() && leq(a, b));
            assert_eq!(
                is_maximal(a.form()),
                !has_strict_upper,
                "maximality mismatch at n = {n} for {}",
                a.code().basis()
            );
        }

        // every one-dimensional even code is minimal
        let mut computed_minimal: Vec<&PosetNode> = Vec::new();
        for a in &nodes {
            if is_minimal_in(a.form(), &nodes).unwrap() {
                computed_minimal.push(a);
            }
        }
        for a in &nodes {
            if paper_minimal_predicate(a.form()) {
                assert!(
                    computed_minimal.iter().any(|m| m.code() == a.code()),
                    "one-dimensional even code not minimal at n = {n}"
                );
            }
        }

        // report the computed minimal set; elements outside the closed-form
        // characterization are documented discrepancies, not failures
        let discrepancies: Vec<&&PosetNode> = computed_minimal
            .iter()
            .filter(|m| !paper_minimal_predicate(m.form()))
            .collect();
        println!(
            "n = {n}: {} computed minimal elements, {} outside the one-dimensional-even characterization",
            computed_minimal.len(),
            discrepancies.len()
        );
        for d in &discrepancies {
            println!("  discrepancy (documented): {}", d.code().basis());
            // the known shape: one-dimensional odd codes
            assert_eq!(d.code_dim(), 1);
            assert!(d.code().has_odd_vectors());
        }
    }
    pass("7 (minimal/maximal characterization, n ≤ 5)", started);
}

#[test]
fn criterion_08_all_ones_obstruction() {
    let started = Instant::now();
    for n in 2..=5 {
        for node in enumerate_triorthogonal(n).unwrap().nodes {
            if obstruction_all_ones(node.form()) {
                for candidate in extension_candidates(node.form()) {
                    assert_eq!(
                        candidate.parity,
                        Parity::Even,
                        "odd candidate despite the all-ones obstruction at n = {n}"
                    );
                }
            }
        }
    }
    pass("8 (all-ones obstruction forces even candidates)", started);
}

fn random_code(rng: &mut ChaCha8Rng) -> LinearCode {
    loop {
        let n = rng.random_range(1..=12);
        let k = rng.random_range(1..=n.min(8));
        let code = LinearCode::from_generators(&random_bit_matrix(rng, k, n));
        if !code.is_zero_code() {
            return code;
        }
    }
}

#[test]
fn criterion_09_oracle_equivalence() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(29);

    for _ in 0..200 {
        let c = random_code(&mut rng);
        assert_eq!(
            oracle::brute_codewords(&c.dual()).unwrap(),
            oracle::brute_dual(&c).unwrap()
        );
        assert_eq!(
            c.min_distance(DEFAULT_DISTANCE_BUDGET).unwrap(),
            oracle::brute_min_distance(&c).unwrap()
        );
        assert_eq!(
            oracle::brute_codewords(&c.schur_square()).unwrap(),
            oracle::brute_schur_square(&c).unwrap()
        );
    }

    // exhaustive agreement of the decision procedure with the basis search
    for n in 1..=5 {
        for code in subspaces(n) {
            if code.dimension() == 0 || code.dimension() > 4 {
                continue;
            }
            let decided = decide_triorthogonal(&code, DEFAULT_SEARCH_LIMIT)
                .unwrap()
                .is_triorthogonal();
            let brute = oracle::brute_triorthogonal(&code).unwrap();
            assert_eq!(decided, brute, "disagreement on {}", code.basis());
        }
    }

    pass("9 (oracle equivalence)", started);
}

fn gaussian_binomial(n: u32, k: u32) -> u128 {
    let mut numerator: u128 = 1;
    let mut denominator: u128 = 1;
    for i in 0..k {
        numerator *= (1u128 << (n - i)) - 1;
        denominator *= (1u128 << (i + 1)) - 1;
    }
    numerator / denominator
}

#[test]
fn criterion_10_enumeration_integrity() {
    let started = Instant::now();

    let expected = |n: u32| -> u64 { (0..=n).map(|k| gaussian_binomial(n, k)).sum::<u128>() as u64 };
    assert_eq!(expected(4), 67);
    assert_eq!(expected(5), 374);
    assert_eq!(expected(6), 2825);

    for n in [4usize, 5, 6] {
        let enumeration = enumerate_triorthogonal(n).unwrap();
        assert_eq!(enumeration.subspaces_visited, expected(n as u32));
    }

    assert_eq!(enumerate_triorthogonal(2).unwrap().nodes.len(), 4);
    assert_eq!(enumerate_triorthogonal(3).unwrap().nodes.len(), 14);

    pass("10 (subspace counts and censuses)", started);
}

fn params_agreement(n: usize) {
    for node in enumerate_triorthogonal(n).unwrap().nodes {
        let form = node.form();
        let pair = csst_check(form.code(), form.hull()).unwrap();
        let a = tri_quantum_params(form, DEFAULT_DISTANCE_BUDGET).unwrap();
        let b = css_params(&pair, DEFAULT_DISTANCE_BUDGET).unwrap();
        assert_eq!((a.n, a.k, a.d_bound), (b.n, b.k, b.d_bound));
    }
}

#[test]
fn quantum_params_agree_across_routes() {
    let started = Instant::now();
    for n in 2..=5 {
        params_agreement(n);
    }
    pass("(supplement) parameter route agreement, n ≤ 5", started);
}
