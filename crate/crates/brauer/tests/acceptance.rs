//! The acceptance gate: one test per criterion, each printing a pass line
//! (run with `--nocapture` to see them; a failed assert is the fail line).

use num::rational::BigRational;
use num::{BigInt, FromPrimitive};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use brauer::cap::{block_in_lambda_n, decomposition_matrix};
use brauer::geometry::{
    a_delta_by_bfs, count_walks, degree_of_rho, degree_of_singularity, in_a_delta,
};
use brauer::leduc_ram::{
    check_relations, decoupling_max, diamond, evaluate_at, generic_matrices, geometric_diamond,
    simple_matrices,
};
use brauer::oracle::{
    cell_dimension, e_gen, element_from, gram_rank, identity, multiply_elements, sigma_gen,
    Element,
};
use brauer::partition::{lambda_n, partitions_up_to, Partition};
use brauer::ratfun::rational_to_f64;
use brauer::restriction::restrict_simple;
use brauer::weight::{circ_pairs, times_pairs, weight_diagram, Label};

const DELTAS: [i64; 7] = [-3, -2, -1, 1, 2, 3, 4];

fn q(n: i64) -> BigRational {
    BigRational::from_i64(n).unwrap()
}

#[test]
fn criterion_01_weight_diagram_round_trip() {
    for delta in -8..=8 {
        for l in partitions_up_to(10) {
            let w = weight_diagram(&l, delta);
            assert_eq!(w.to_partition().as_ref(), Ok(&l), "δ={delta}");
        }
        let worked: Partition = "10,10,9,9,8,5,3,3".parse().unwrap();
        let w = weight_diagram(&worked, delta);
        assert_eq!(w.to_partition().unwrap(), worked, "worked example at δ={delta}");
    }
    println!("criterion 1 (weight-diagram round trip): pass");
}

#[test]
fn criterion_02_circle_times_balance() {
    for delta in -8..=8 {
        for l in partitions_up_to(10) {
            let w = weight_diagram(&l, delta);
            w.check_balance().unwrap();
            assert_eq!(
                w.count(Label::Circle) as i64 - w.count(Label::Times) as i64,
                w.m(),
                "λ={l} δ={delta}"
            );
        }
    }
    println!("criterion 2 (#circ - #times = m): pass");
}

#[test]
fn criterion_03_king_root_multiplicity() {
    for delta in -6..=6 {
        for l in partitions_up_to(8) {
            let mult = l.king_root_multiplicity(delta);
            assert_eq!(
                mult,
                degree_of_singularity(&l, delta) - degree_of_rho(delta),
                "λ={l} δ={delta}"
            );
            let witnesses = times_pairs(&l, delta).iter().filter(|w| w.in_diagram).count()
                + circ_pairs(&l, delta).iter().filter(|w| w.in_diagram).count();
            assert_eq!(mult, witnesses, "witness count for λ={l} δ={delta}");
        }
    }
    println!("criterion 3 (King multiplicity = singularity degree = witnesses): pass");
}

#[test]
fn criterion_04_a_delta_closed_form() {
    for delta in -6..=6 {
        if delta == 0 {
            continue;
        }
        let mut closed: Vec<Partition> = partitions_up_to(8)
            .into_iter()
            .filter(|l| in_a_delta(l, delta))
            .collect();
        closed.sort();
        assert_eq!(closed, a_delta_by_bfs(delta, 8), "δ={delta}");
    }
    println!("criterion 4 (A_delta closed form = BFS): pass");
}

#[test]
fn criterion_05_standard_dimensions() {
    for n in 1..=8usize {
        for l in lambda_n(n) {
            assert_eq!(
                count_walks(&l, n, 0, false).unwrap() as usize,
                cell_dimension(&l, n),
                "λ={l} n={n}"
            );
        }
    }
    let mut double_factorial = 1u64;
    for k in 1..=5u64 {
        double_factorial *= 2 * k - 1;
        assert_eq!(
            count_walks(&Partition::empty(), 2 * k as usize, 0, false).unwrap(),
            double_factorial
        );
    }
    println!("criterion 5 (walk counts = cell dimensions, (2k-1)!!): pass");
}

#[test]
fn criterion_06_decomposition_identity() {
    for delta in DELTAS {
        for n in 1..=5usize {
            for mu in lambda_n(n) {
                let members = block_in_lambda_n(&mu, n, delta);
                let d = decomposition_matrix(&members, delta);
                let col = members.iter().position(|m| m == &mu).unwrap();
                let total: u64 = members
                    .iter()
                    .enumerate()
                    .map(|(i, l)| d[i][col] as u64 * gram_rank(l, n, &q(delta)) as u64)
                    .sum();
                assert_eq!(
                    total,
                    count_walks(&mu, n, 0, false).unwrap(),
                    "μ={mu} n={n} δ={delta}"
                );
            }
        }
    }
    println!("criterion 6 (dim Delta = sum of D * gram ranks): pass");
}

#[test]
fn criterion_07_restriction_theorem() {
    for delta in DELTAS {
        for n in 1..=5usize {
            for l in lambda_n(n) {
                if !in_a_delta(&l, delta) {
                    continue;
                }
                let comps = restrict_simple(&l, n, delta).unwrap();
                let mut total = 0usize;
                for s in comps.values() {
                    total += s
                        .factors()
                        .iter()
                        .map(|f| gram_rank(&f.partition, n - 1, &q(delta)))
                        .sum::<usize>();
                    if !s.is_single_layer() {
                        assert_eq!(s.head, s.socle, "λ={l} n={n} δ={delta}");
                        assert_eq!(s.head.len(), 1, "simple head for λ={l} n={n} δ={delta}");
                    }
                }
                assert_eq!(total, gram_rank(&l, n, &q(delta)), "λ={l} n={n} δ={delta}");
            }
        }
    }
    println!("criterion 7 (restriction theorem fills dim L, head = socle): pass");
}

#[test]
fn criterion_08_generic_relations_at_random_u() {
    let mut rng = ChaCha8Rng::seed_from_u64(20260823);
    let mut points = Vec::new();
    while points.len() < 5 {
        let den = rng.gen_range(1i64..=9);
        let num = rng.gen_range(17 * den..=97 * den);
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        points.push(BigRational::new(BigInt::from(sign * num), BigInt::from(den)));
    }
    for u0 in &points {
        for n in 1..=5usize {
            for l in lambda_n(n) {
                let m = generic_matrices(&l, n).unwrap();
                let num = evaluate_at(&m, u0).unwrap();
                let rep = check_relations(&num, rational_to_f64(u0));
                assert!(
                    rep.passes(1e-9),
                    "u={u0} n={n} λ={l} residual {}",
                    rep.max_residual()
                );
            }
        }
    }
    println!("criterion 8 (generic relations at 5 random u): pass");
}

#[test]
fn criterion_09_specialisation_and_decoupling() {
    for delta in [-4i64, -3, -2, -1, 1, 2, 3, 4] {
        for n in 1..=5usize {
            for l in lambda_n(n) {
                if !in_a_delta(&l, delta) {
                    continue;
                }
                let full = generic_matrices(&l, n).unwrap();
                assert!(
                    decoupling_max(&full, delta) <= 1e-9,
                    "decoupling for δ={delta} n={n} λ={l}"
                );
                let m = simple_matrices(&l, n, delta).unwrap();
                let rep = check_relations(&m, delta as f64);
                assert!(
                    rep.passes(1e-9),
                    "relations for δ={delta} n={n} λ={l}: {}",
                    rep.max_residual()
                );
                assert_eq!(m.basis.len(), gram_rank(&l, n, &q(delta)), "δ={delta} n={n} λ={l}");
            }
        }
    }
    println!("criterion 9 (specialisation: decoupling, relations, dim = gram rank): pass");
}

#[test]
fn criterion_10_diamond_agreement() {
    let mut same_box_cases = 0usize;
    for x in partitions_up_to(7) {
        let (add, rem) = x.box_neighbors();
        let mids: Vec<Partition> = add
            .into_iter()
            .chain(rem)
            .filter(|m| m.size() <= 6)
            .collect();
        for s_mid in &mids {
            let (a2, r2) = s_mid.box_neighbors();
            for next in a2.into_iter().chain(r2) {
                for t_mid in &mids {
                    let Ok(c) = diamond(&x, s_mid, t_mid, &next) else {
                        continue;
                    };
                    for delta in -6..=6 {
                        let Ok(g) = geometric_diamond(&x, s_mid, t_mid, &next, delta) else {
                            continue;
                        };
                        assert_eq!(
                            c.evaluate(&q(delta)),
                            q(g),
                            "x={x} s={s_mid} t={t_mid} z={next} δ={delta}"
                        );
                        // same column twice (i = j) must give -1
                        if s_mid == t_mid && next != x && g == -1 {
                            same_box_cases += 1;
                        }
                    }
                }
            }
        }
    }
    assert!(same_box_cases > 0, "the i = j → -1 case must occur");
    println!("criterion 10 (combinatorial diamond = geometric diamond): pass");
}

#[test]
fn criterion_11_oracle_self_consistency() {
    let delta = BigRational::new(BigInt::from(355), BigInt::from(113));
    let mul = |a: &Element, b: &Element| multiply_elements(a, b, &delta);
    let scale = |a: &Element, c: &BigRational| -> Element {
        a.iter().map(|(k, v)| (k.clone(), v * c)).collect()
    };
    for n in 2..=5usize {
        let sig: Vec<Element> = (1..n).map(|i| element_from(sigma_gen(n, i))).collect();
        let es: Vec<Element> = (1..n).map(|i| element_from(e_gen(n, i))).collect();
        let id = element_from(identity(n));
        for i in 0..n - 1 {
            assert_eq!(mul(&sig[i], &sig[i]), id);
            assert_eq!(mul(&es[i], &es[i]), scale(&es[i], &delta));
            assert_eq!(mul(&es[i], &sig[i]), es[i]);
            assert_eq!(mul(&sig[i], &es[i]), es[i]);
        }
        for i in 0..(n - 1).saturating_sub(1) {
            let j = i + 1;
            assert_eq!(
                mul(&mul(&sig[i], &sig[j]), &sig[i]),
                mul(&mul(&sig[j], &sig[i]), &sig[j])
            );
            for (a, b) in [(i, j), (j, i)] {
                assert_eq!(mul(&mul(&es[a], &sig[b]), &es[a]), es[a]);
                assert_eq!(mul(&mul(&es[a], &es[b]), &es[a]), es[a]);
            }
        }
        for i in 0..n - 1 {
            for j in i + 2..n - 1 {
                assert_eq!(mul(&sig[i], &sig[j]), mul(&sig[j], &sig[i]));
                assert_eq!(mul(&es[i], &es[j]), mul(&es[j], &es[i]));
                assert_eq!(mul(&sig[i], &es[j]), mul(&es[j], &sig[i]));
            }
        }
    }
    // associativity over the whole diagram basis of B_3, generated by
    // closing under multiplication and keeping the bare diagrams
    let basis: Vec<Element> = {
        let seed = [sigma_gen(3, 1), sigma_gen(3, 2), e_gen(3, 1), e_gen(3, 2)];
        let mut diagrams = vec![identity(3)];
        let mut frontier = diagrams.clone();
        while let Some(d) = frontier.pop() {
            for s in &seed {
                let prod =
                    multiply_elements(&element_from(d.clone()), &element_from(s.clone()), &delta);
                for nd in prod.keys() {
                    if !diagrams.contains(nd) {
                        diagrams.push(nd.clone());
                        frontier.push(nd.clone());
                    }
                }
            }
        }
        diagrams.into_iter().map(element_from).collect()
    };
    assert!(basis.len() >= 15, "B_3 has 15 diagrams, found {}", basis.len());
    for a in &basis {
        for b in &basis {
            let ab = mul(a, b);
            for c in &basis {
                assert_eq!(mul(&ab, c), mul(a, &mul(b, c)));
            }
        }
    }
    println!("criterion 11 (oracle relations and associativity): pass");
}
