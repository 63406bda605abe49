//! Restriction and induction of standard modules, and the full Loewy
//! structure of restricted simple modules, block by block.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::cap::{block_in_lambda_n, CapDiagram};
use crate::geometry::degree_of_singularity;
use crate::partition::{in_lambda_n, Partition};
use crate::weight::{weight_diagram, Label, WeightDiagram};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RestrictionError {
    #[error("δ = 0 is excluded")]
    DeltaZero,
    #[error("{0} is not in Λ_{1}")]
    NotInLambdaN(String, usize),
    #[error("no adjacent ∘×/×∘ configuration in the weight diagram")]
    NoSingularPair,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum ModuleKind {
    Simple,
    Standard,
    Projective,
}

/// A named module of `B_n(δ)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ModuleLabel {
    pub kind: ModuleKind,
    pub partition: Partition,
    pub n: usize,
    pub delta: i64,
}

impl ModuleLabel {
    pub fn simple(partition: Partition, n: usize, delta: i64) -> Self {
        Self { kind: ModuleKind::Simple, partition, n, delta }
    }

    pub fn standard(partition: Partition, n: usize, delta: i64) -> Self {
        Self { kind: ModuleKind::Standard, partition, n, delta }
    }
}

/// Radical-filtration description of one block component of a restricted
/// simple module.  A single-layer (simple) component has `head == socle`
/// and empty `middle`; its composition factors count the head once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoewyStructure {
    pub head: Vec<ModuleLabel>,
    pub middle: Vec<ModuleLabel>,
    pub socle: Vec<ModuleLabel>,
}

impl LoewyStructure {
    pub fn simple(label: ModuleLabel) -> Self {
        Self { head: vec![label.clone()], middle: Vec::new(), socle: vec![label] }
    }

    pub fn is_single_layer(&self) -> bool {
        self.middle.is_empty() && self.head == self.socle
    }

    /// Composition factors with multiplicity (head and socle collapse to
    /// one copy for single-layer components).
    pub fn factors(&self) -> Vec<ModuleLabel> {
        if self.is_single_layer() {
            self.head.clone()
        } else {
            self.head
                .iter()
                .chain(self.middle.iter())
                .chain(self.socle.iter())
                .cloned()
                .collect()
        }
    }
}

/// `res Δ_n(λ)` as a multiset of standards of `B_{n−1}(δ)`.
pub fn restrict_standard(
    lambda: &Partition,
    n: usize,
    delta: i64,
) -> Result<Vec<ModuleLabel>, RestrictionError> {
    if !in_lambda_n(lambda, n) {
        return Err(RestrictionError::NotInLambdaN(lambda.to_string(), n));
    }
    let (added, removed) = lambda.box_neighbors();
    Ok(removed
        .into_iter()
        .chain(added)
        .filter(|mu| n >= 1 && in_lambda_n(mu, n - 1))
        .map(|mu| ModuleLabel::standard(mu, n - 1, delta))
        .collect())
}

/// `ind Δ_n(λ)` as a multiset of standards of `B_{n+1}(δ)`.
pub fn induce_standard(
    lambda: &Partition,
    n: usize,
    delta: i64,
) -> Result<Vec<ModuleLabel>, RestrictionError> {
    if !in_lambda_n(lambda, n) {
        return Err(RestrictionError::NotInLambdaN(lambda.to_string(), n));
    }
    let (added, removed) = lambda.box_neighbors();
    Ok(removed
        .into_iter()
        .chain(added)
        .filter(|mu| in_lambda_n(mu, n + 1))
        .map(|mu| ModuleLabel::standard(mu, n + 1, delta))
        .collect())
}

/// One adjacent `∘×`/`×∘` configuration of a singular weight, with the
/// two block-companions obtained by replacing it with `∨∧` (λ⁺, one box
/// more) or `∧∨` (λ⁻, one box less).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularPair {
    pub plus: Partition,
    pub minus: Partition,
    /// The right slot `i` of the configuration at `(i−1, i)`.
    pub slot: usize,
}

/// All `∘×`/`×∘` configurations of `x_{λ′}`, left to right.
pub fn lambda_pm_all(lambda_prime: &Partition, delta: i64) -> Vec<SingularPair> {
    let x = weight_diagram(lambda_prime, delta);
    let mut out = Vec::new();
    for p in 0..x.prefix_len().saturating_sub(1) {
        let pat = (x.label(p), x.label(p + 1));
        if !matches!(
            pat,
            (Label::Circle, Label::Times) | (Label::Times, Label::Circle)
        ) {
            continue;
        }
        let plus = x
            .with_label(p, Label::Down)
            .with_label(p + 1, Label::Up)
            .to_partition()
            .expect("∨∧ replacement stays balanced");
        let minus = x
            .with_label(p, Label::Up)
            .with_label(p + 1, Label::Down)
            .to_partition()
            .expect("∧∨ replacement stays balanced");
        out.push(SingularPair { plus, minus, slot: p + 1 });
    }
    out
}

/// The unique configuration when exactly one exists; leftmost otherwise.
pub fn lambda_pm(
    lambda_prime: &Partition,
    delta: i64,
) -> Result<SingularPair, RestrictionError> {
    lambda_pm_all(lambda_prime, delta)
        .into_iter()
        .next()
        .ok_or(RestrictionError::NoSingularPair)
}

/// The vertex set `I(λ′, λ⁺)`: slots `j` of `c_{λ′}` lying in the chamber
/// of the configuration vertex `i` and satisfying one of the three
/// membership conditions.
pub fn i_set(lambda_prime: &Partition, pair: &SingularPair, delta: i64) -> Vec<usize> {
    let cap = CapDiagram::from_partition(lambda_prime, delta);
    let x = cap.weight();
    let i = pair.slot;
    let chamber = cap.chamber_of(i);
    let mut out = Vec::new();
    let horizon = x.prefix_len() + 1;
    for j in 0..horizon {
        if j == i || j + 1 == i {
            continue;
        }
        let label = x.label(j);
        if !matches!(label, Label::Down | Label::Up) {
            continue;
        }
        if !cap.chambers_at(j).contains(&chamber) {
            continue;
        }
        let keep = if j > i {
            label == Label::Down
        } else if label == Label::Up {
            true
        } else {
            // j < i labelled ∨: on a ray or its arc reaches past i
            match cap.partner(j) {
                None => true,
                Some(k) => k > i,
            }
        };
        if keep {
            out.push(j);
        }
    }
    out
}

/// The partition `λ′_{(j)}`, rewriting the configuration and vertex `j`.
pub fn lambda_prime_j(
    lambda_prime: &Partition,
    pair: &SingularPair,
    j: usize,
    delta: i64,
) -> Partition {
    let x = weight_diagram(lambda_prime, delta);
    let i = pair.slot;
    let rebuilt: WeightDiagram = if j > i {
        // (10): j was ∨, becomes ∧; configuration becomes ∨∨
        x.with_label(j, Label::Up)
            .with_label(i - 1, Label::Down)
            .with_label(i, Label::Down)
    } else if x.label(j) == Label::Up {
        // (11): j was ∧, becomes ∨; configuration becomes ∧∧
        x.with_label(j, Label::Down)
            .with_label(i - 1, Label::Up)
            .with_label(i, Label::Up)
    } else {
        // (12): j was ∨; j and the configuration all become ∧
        x.with_label(j, Label::Up)
            .with_label(i - 1, Label::Up)
            .with_label(i, Label::Up)
    };
    rebuilt.to_partition().expect("rewriting preserves the balance")
}

/// Canonical representative of the block of `mu` inside `Λ_{n}`.
pub fn block_representative(mu: &Partition, n: usize, delta: i64) -> Partition {
    block_in_lambda_n(mu, n, delta)
        .into_iter()
        .next()
        .expect("mu itself lies in its block")
}

/// The Loewy structure of `res L_n(λ)`, one entry per block of
/// `B_{n−1}(δ)` with nonzero component, keyed by the canonical block
/// representative.
pub fn restrict_simple(
    lambda: &Partition,
    n: usize,
    delta: i64,
) -> Result<BTreeMap<Partition, LoewyStructure>, RestrictionError> {
    if delta == 0 {
        return Err(RestrictionError::DeltaZero);
    }
    if !in_lambda_n(lambda, n) || n == 0 {
        return Err(RestrictionError::NotInLambdaN(lambda.to_string(), n));
    }
    let deg = degree_of_singularity(lambda, delta) as i64;
    let mut out: BTreeMap<Partition, LoewyStructure> = BTreeMap::new();
    let insert = |key: Partition, value: LoewyStructure, out: &mut BTreeMap<_, _>| {
        let prev = out.insert(key, value);
        assert!(prev.is_none(), "two components in one block for λ={lambda}, δ={delta}");
    };
    let (added, removed) = lambda.box_neighbors();
    let mut case3_done: Vec<usize> = Vec::new();
    for mu in removed.into_iter().chain(added) {
        if !in_lambda_n(&mu, n - 1) {
            continue;
        }
        let mu_deg = degree_of_singularity(&mu, delta) as i64;
        if mu_deg == deg {
            // Case I: the component is the simple L_{n−1}(μ)
            let key = block_representative(&mu, n - 1, delta);
            insert(
                key,
                LoewyStructure::simple(ModuleLabel::simple(mu, n - 1, delta)),
                &mut out,
            );
        } else if mu_deg == deg + 1 {
            // Case II: μ is singular and λ is one of its companions
            let pairs = lambda_pm_all(&mu, delta);
            let pair = pairs
                .iter()
                .find(|p| p.plus == *lambda || p.minus == *lambda)
                .expect("λ must be a companion of its singular neighbor");
            if pair.plus == *lambda {
                let key = block_representative(&mu, n - 1, delta);
                insert(
                    key,
                    LoewyStructure::simple(ModuleLabel::simple(mu.clone(), n - 1, delta)),
                    &mut out,
                );
            }
            // λ = λ⁻: the component vanishes
        } else {
            // Case III: λ itself is singular here; μ ∈ {λ⁺, λ⁻} of some
            // configuration, both in one block, handled once per slot
            assert_eq!(mu_deg, deg - 1, "neighbor degree must change by at most one");
            let pairs = lambda_pm_all(lambda, delta);
            let pair = pairs
                .iter()
                .find(|p| p.plus == mu || p.minus == mu)
                .expect("degree-dropping neighbor must come from a configuration");
            if case3_done.contains(&pair.slot) {
                continue;
            }
            case3_done.push(pair.slot);
            let key = block_representative(&mu, n - 1, delta);
            if lambda.size() == n {
                insert(
                    key,
                    LoewyStructure::simple(ModuleLabel::simple(
                        pair.minus.clone(),
                        n - 1,
                        delta,
                    )),
                    &mut out,
                );
            } else {
                let head = vec![ModuleLabel::simple(pair.plus.clone(), n - 1, delta)];
                let mut middle = vec![ModuleLabel::simple(pair.minus.clone(), n - 1, delta)];
                for j in i_set(lambda, pair, delta) {
                    let nu = lambda_prime_j(lambda, pair, j, delta);
                    if in_lambda_n(&nu, n - 1) {
                        middle.push(ModuleLabel::simple(nu, n - 1, delta));
                    }
                }
                middle.sort();
                insert(
                    key,
                    LoewyStructure { head: head.clone(), middle, socle: head },
                    &mut out,
                );
            }
        }
    }
    Ok(out)
}

/// JSON form of one block component.
#[derive(Debug, Serialize)]
pub struct LoewyJson {
    pub block: String,
    pub head: Vec<String>,
    pub middle: Vec<String>,
    pub socle: Vec<String>,
}

pub fn loewy_json(components: &BTreeMap<Partition, LoewyStructure>) -> Vec<LoewyJson> {
    components
        .iter()
        .map(|(block, s)| LoewyJson {
            block: block.to_string(),
            head: s.head.iter().map(|l| l.partition.to_string()).collect(),
            middle: s.middle.iter().map(|l| l.partition.to_string()).collect(),
            socle: s.socle.iter().map(|l| l.partition.to_string()).collect(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cap::simple_dimension;
    use crate::geometry::{count_walks, in_a_delta};
    use crate::partition::{lambda_n, partitions_up_to};
    use crate::weight::same_block;

    fn parts(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn restrict_standard_examples() {
        let r = restrict_standard(&parts("1"), 1, 3).unwrap();
        assert_eq!(r, vec![ModuleLabel::standard(Partition::empty(), 0, 3)]);
        let r = restrict_standard(&Partition::empty(), 2, 3).unwrap();
        assert_eq!(r, vec![ModuleLabel::standard(parts("1"), 1, 3)]);
        assert!(restrict_standard(&parts("1"), 2, 3).is_err());
    }

    #[test]
    fn restriction_dimensions_add_up() {
        for n in 1..=8usize {
            for l in lambda_n(n) {
                let total: u64 = restrict_standard(&l, n, 1)
                    .unwrap()
                    .iter()
                    .map(|m| count_walks(&m.partition, n - 1, 1, false).unwrap())
                    .sum();
                assert_eq!(total, count_walks(&l, n, 1, false).unwrap(), "n={n} λ={l}");
            }
        }
    }

    #[test]
    fn induction_matches_restriction_transpose() {
        for n in 0..=6usize {
            for l in lambda_n(n) {
                for m in induce_standard(&l, n, 2).unwrap() {
                    assert!(restrict_standard(&m.partition, n + 1, 2)
                        .unwrap()
                        .iter()
                        .any(|r| r.partition == l));
                }
            }
        }
    }

    #[test]
    fn singular_pairs_are_box_neighbors() {
        for delta in [-4, -3, -2, -1, 1, 2, 3, 4] {
            for l in partitions_up_to(8) {
                for pair in lambda_pm_all(&l, delta) {
                    assert!(l.addable().contains(&pair.plus), "δ={delta} λ′={l}");
                    assert!(l.removable().contains(&pair.minus), "δ={delta} λ′={l}");
                    let d = degree_of_singularity(&l, delta);
                    assert_eq!(degree_of_singularity(&pair.plus, delta), d - 1);
                    assert_eq!(degree_of_singularity(&pair.minus, delta), d - 1);
                    assert!(same_block(&pair.plus, &pair.minus, delta));
                    assert!(
                        crate::weight::order_leq(&pair.minus, &pair.plus, delta).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn lambda_prime_j_lands_in_the_companion_block() {
        for delta in [-3, -2, 1, 2, 3] {
            for l in partitions_up_to(8) {
                for pair in lambda_pm_all(&l, delta) {
                    for j in i_set(&l, &pair, delta) {
                        let nu = lambda_prime_j(&l, &pair, j, delta);
                        assert!(
                            same_block(&nu, &pair.plus, delta),
                            "δ={delta} λ′={l} j={j} ν={nu}"
                        );
                        assert_ne!(nu, pair.plus);
                        assert_ne!(nu, pair.minus);
                    }
                }
            }
        }
    }

    #[test]
    fn delta_zero_rejected() {
        assert_eq!(
            restrict_simple(&parts("1"), 3, 0),
            Err(RestrictionError::DeltaZero)
        );
    }

    #[test]
    fn restricted_regular_weights_stay_semisimple() {
        // λ ∈ A_δ: the factors are exactly the restricted neighbors
        for delta in [-3, -2, -1, 1, 2, 3] {
            for n in 1..=5usize {
                for l in lambda_n(n) {
                    if !in_a_delta(&l, delta) {
                        continue;
                    }
                    let comps = restrict_simple(&l, n, delta).unwrap();
                    let mut got: Vec<Partition> = comps
                        .values()
                        .flat_map(|s| s.factors())
                        .filter(|m| in_a_delta(&m.partition, delta))
                        .map(|m| m.partition)
                        .collect();
                    got.sort();
                    let mut expected: Vec<Partition> =
                        crate::geometry::restricted_neighbors(&l, delta)
                            .unwrap()
                            .into_iter()
                            .filter(|m| in_lambda_n(m, n - 1))
                            .collect();
                    expected.sort();
                    assert_eq!(got, expected, "δ={delta} n={n} λ={l}");
                }
            }
        }
    }

    #[test]
    fn case_three_heads_equal_socles() {
        for delta in [-2, -1, 1, 2, 3] {
            for n in 1..=5usize {
                for l in lambda_n(n) {
                    for s in restrict_simple(&l, n, delta).unwrap().values() {
                        assert_eq!(s.head, s.socle);
                        assert!(!s.head.is_empty());
                    }
                }
            }
        }
    }

    #[test]
    fn dimension_bookkeeping_small() {
        // Σ over components of Σ dim(factors) = dim L_n(λ), dims from the
        // decomposition-matrix route
        for delta in [-2, -1, 1, 2, 3] {
            for n in 1..=5usize {
                for l in lambda_n(n) {
                    let lhs: u128 = restrict_simple(&l, n, delta)
                        .unwrap()
                        .values()
                        .flat_map(|s| s.factors())
                        .map(|m| simple_dimension(&m.partition, n - 1, delta))
                        .sum();
                    assert_eq!(
                        lhs,
                        simple_dimension(&l, n, delta),
                        "δ={delta} n={n} λ={l}"
                    );
                }
            }
        }
    }
}
