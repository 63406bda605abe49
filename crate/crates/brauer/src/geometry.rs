//! The embedding of the Young graph into `R^N`, degree of singularity,
//! δ-regularity, the restricted set `A_δ`, and walk enumeration on the
//! full and restricted Young graphs.
//!
//! A partition λ maps to the strictly decreasing sequence with entries
//! `λ^T_i − δ/2 − (i−1)`.  Entries are stored doubled (`2·x_i`) so that
//! half-integers for odd δ stay exact in integer arithmetic.  Beyond the
//! stored prefix the sequence follows the arithmetic tail of the base
//! point `ρ_δ = (−δ/2, −δ/2−1, …)`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partition::Partition;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeometryError {
    #[error("walk length {n} has the wrong parity or is too short for |λ| = {size}")]
    ParityMismatch { n: usize, size: usize },
    #[error("partition {0} is not in A_δ for δ = {1}")]
    NotRestricted(String, i64),
}

/// A point of the embedded Young graph, stored as doubled integer entries
/// over an arithmetic tail.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EmbeddedPoint {
    /// `2·x_i` for `i = 1..=prefix_len`; beyond that the tail formula applies.
    doubled_prefix: Vec<i64>,
    delta: i64,
}

impl EmbeddedPoint {
    /// The embedding `e_δ(λ) = λ^T + ρ_δ`.
    pub fn embed(lambda: &Partition, delta: i64) -> Self {
        let t = lambda.transpose();
        let doubled_prefix = (1..=t.len())
            .map(|i| 2 * t.part(i) as i64 - delta - 2 * (i as i64 - 1))
            .collect();
        Self { doubled_prefix, delta }
    }

    /// The base point `ρ_δ` (the image of the empty partition).
    pub fn rho(delta: i64) -> Self {
        Self { doubled_prefix: Vec::new(), delta }
    }

    pub fn delta(&self) -> i64 {
        self.delta
    }

    /// Doubled entry `2·x_i`, 1-based, valid for any `i`.
    pub fn doubled_entry(&self, i: usize) -> i64 {
        assert!(i >= 1);
        if i <= self.doubled_prefix.len() {
            self.doubled_prefix[i - 1]
        } else {
            -self.delta - 2 * (i as i64 - 1)
        }
    }

    /// The first `k` doubled entries.
    pub fn doubled_entries(&self, k: usize) -> Vec<i64> {
        (1..=k).map(|i| self.doubled_entry(i)).collect()
    }

    /// True if `2v` occurs among the doubled entries (prefix or tail).
    pub fn contains_doubled(&self, v: i64) -> bool {
        if self.doubled_prefix.contains(&v) {
            return true;
        }
        // tail: v = −δ − 2(i−1) for some integer i > prefix_len
        let num = -self.delta - v;
        if num % 2 != 0 {
            return false;
        }
        let i = num / 2 + 1;
        i >= 1 && i as usize > self.doubled_prefix.len()
    }

    /// Number of pairs `i < j` with `x_i = −x_j`.  Only finitely many
    /// entries are non-negative, so the count is exact.
    pub fn degree_of_singularity(&self) -> usize {
        // all non-negative entries live within the prefix or the early tail
        let mut count = 0;
        let mut i = 1;
        loop {
            let v = self.doubled_entry(i);
            let in_tail = i > self.doubled_prefix.len();
            if v < 0 && in_tail {
                break;
            }
            if v > 0 && self.contains_doubled(-v) {
                count += 1;
            }
            i += 1;
        }
        count
    }
}

/// `deg(ρ_δ)`: zero for δ ≥ 0, `−m` for δ = 2m or 2m+1 negative.
pub fn degree_of_rho(delta: i64) -> usize {
    EmbeddedPoint::rho(delta).degree_of_singularity()
}

/// `deg_δ(λ) = deg(e_δ(λ))`.
pub fn degree_of_singularity(lambda: &Partition, delta: i64) -> usize {
    EmbeddedPoint::embed(lambda, delta).degree_of_singularity()
}

/// λ is δ-regular iff its degree of singularity equals that of `ρ_δ`.
pub fn is_delta_regular(lambda: &Partition, delta: i64) -> bool {
    degree_of_singularity(lambda, delta) == degree_of_rho(delta)
}

/// Closed-form membership test for the restricted set `A_δ`:
/// δ ≥ 0 requires `λ^T_1 + λ^T_2 ≤ δ`; δ = −2m requires `λ_1 ≤ m`;
/// δ = −2m+1 requires `λ_1 + λ_2 ≤ 2m+1`.
pub fn in_a_delta(lambda: &Partition, delta: i64) -> bool {
    if delta >= 0 {
        let t = lambda.transpose();
        t.part(1) as i64 + t.part(2) as i64 <= delta
    } else if delta % 2 == 0 {
        let m = -delta / 2;
        lambda.part(1) as i64 <= m
    } else {
        let m = (1 - delta) / 2;
        lambda.part(1) as i64 + lambda.part(2) as i64 <= 2 * m + 1
    }
}

/// Box neighbours of λ inside `A_δ`.  Errors if λ itself is outside.
pub fn restricted_neighbors(
    lambda: &Partition,
    delta: i64,
) -> Result<Vec<Partition>, GeometryError> {
    if !in_a_delta(lambda, delta) {
        return Err(GeometryError::NotRestricted(lambda.to_string(), delta));
    }
    let (add, rem) = lambda.box_neighbors();
    Ok(add
        .into_iter()
        .chain(rem)
        .filter(|m| in_a_delta(m, delta))
        .collect())
}

/// The graph-theoretic definition of `A_δ`: BFS from ∅ over box moves
/// through δ-regular partitions only, up to `max_size` boxes.  Used as an
/// oracle for [`in_a_delta`].
pub fn a_delta_by_bfs(delta: i64, max_size: usize) -> Vec<Partition> {
    use std::collections::{HashSet, VecDeque};
    let mut seen: HashSet<Partition> = HashSet::new();
    let mut queue = VecDeque::new();
    if is_delta_regular(&Partition::empty(), delta) {
        seen.insert(Partition::empty());
        queue.push_back(Partition::empty());
    }
    while let Some(p) = queue.pop_front() {
        let (add, rem) = p.box_neighbors();
        for q in add.into_iter().chain(rem) {
            if q.size() <= max_size && !seen.contains(&q) && is_delta_regular(&q, delta) {
                seen.insert(q.clone());
                queue.push_back(q);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort();
    out
}

/// An up-down tableau: a sequence of partitions starting at ∅ with
/// consecutive entries differing by one box.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Walk {
    steps: Vec<Partition>,
}

impl Walk {
    pub fn new(steps: Vec<Partition>) -> Option<Self> {
        if steps.first() != Some(&Partition::empty()) {
            return None;
        }
        for w in steps.windows(2) {
            let (add, rem) = w[0].box_neighbors();
            if !add.contains(&w[1]) && !rem.contains(&w[1]) {
                return None;
            }
        }
        Some(Self { steps })
    }

    pub fn steps(&self) -> &[Partition] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The partition at position `m`, `0 ≤ m ≤ len`.
    pub fn step(&self, m: usize) -> &Partition {
        &self.steps[m]
    }

    pub fn end(&self) -> &Partition {
        self.steps.last().unwrap()
    }

    /// The walk with position `m` replaced; `None` if the result is not a
    /// valid walk.
    pub fn with_step(&self, m: usize, p: Partition) -> Option<Self> {
        let mut steps = self.steps.clone();
        steps[m] = p;
        Self::new(steps)
    }
}

/// The move keys used for the lexicographic enumeration order: adding a
/// box sorts before removing one, then by row index.
fn ordered_moves(p: &Partition) -> Vec<Partition> {
    let mut out: Vec<(u8, usize, Partition)> = Vec::new();
    for r in p.addable_rows() {
        out.push((0, r, p.with_box_added(r).unwrap()));
    }
    for r in p.removable_rows() {
        out.push((1, r, p.with_box_removed(r).unwrap()));
    }
    out.sort_by_key(|(k, r, _)| (*k, *r));
    out.into_iter().map(|(_, _, q)| q).collect()
}

/// Number of walks of length `n` from ∅ to λ; restricted walks stay
/// inside `A_δ` at every step.  Errors on parity mismatch, and (for the
/// restricted count) if λ itself lies outside `A_δ`.
pub fn count_walks(
    lambda: &Partition,
    n: usize,
    delta: i64,
    restricted: bool,
) -> Result<u64, GeometryError> {
    check_walk_args(lambda, n, delta, restricted)?;
    let mut memo: HashMap<(Partition, usize), u64> = HashMap::new();
    Ok(count_rec(lambda, n, delta, restricted, &mut memo))
}

fn check_walk_args(
    lambda: &Partition,
    n: usize,
    delta: i64,
    restricted: bool,
) -> Result<(), GeometryError> {
    if n < lambda.size() || !(n - lambda.size()).is_multiple_of(2) {
        return Err(GeometryError::ParityMismatch { n, size: lambda.size() });
    }
    if restricted && !in_a_delta(lambda, delta) {
        return Err(GeometryError::NotRestricted(lambda.to_string(), delta));
    }
    Ok(())
}

fn count_rec(
    target: &Partition,
    remaining: usize,
    delta: i64,
    restricted: bool,
    memo: &mut HashMap<(Partition, usize), u64>,
) -> u64 {
    // counts walks from ∅ to `target` of length `remaining`, by peeling
    // the last step
    if remaining == 0 {
        return u64::from(target.is_empty());
    }
    if target.size() > remaining {
        return 0;
    }
    if restricted && !in_a_delta(target, delta) {
        return 0;
    }
    if let Some(&c) = memo.get(&(target.clone(), remaining)) {
        return c;
    }
    let (add, rem) = target.box_neighbors();
    let total = add
        .into_iter()
        .chain(rem)
        .map(|prev| count_rec(&prev, remaining - 1, delta, restricted, memo))
        .sum();
    memo.insert((target.clone(), remaining), total);
    total
}

/// All walks of length `n` from ∅ to λ, in the lexicographic move order
/// that fixes matrix row/column indexing downstream.
pub fn enumerate_walks(
    lambda: &Partition,
    n: usize,
    delta: i64,
    restricted: bool,
) -> Result<Vec<Walk>, GeometryError> {
    check_walk_args(lambda, n, delta, restricted)?;
    let mut out = Vec::new();
    let mut prefix = vec![Partition::empty()];
    walk_dfs(lambda, n, delta, restricted, &mut prefix, &mut out);
    Ok(out)
}

fn walk_dfs(
    target: &Partition,
    n: usize,
    delta: i64,
    restricted: bool,
    prefix: &mut Vec<Partition>,
    out: &mut Vec<Walk>,
) {
    let cur = prefix.last().unwrap().clone();
    let done = prefix.len() - 1;
    if done == n {
        if &cur == target {
            out.push(Walk { steps: prefix.clone() });
        }
        return;
    }
    let remaining = n - done;
    for next in ordered_moves(&cur) {
        // prune: must still be able to reach the target
        let dist = box_distance(&next, target);
        if dist > remaining - 1 || !(remaining - 1 - dist).is_multiple_of(2) {
            continue;
        }
        if restricted && !in_a_delta(&next, delta) {
            continue;
        }
        prefix.push(next);
        walk_dfs(target, n, delta, restricted, prefix, out);
        prefix.pop();
    }
}

/// Minimal number of box moves between two partitions: the size of the
/// symmetric difference of their diagrams.
fn box_distance(a: &Partition, b: &Partition) -> usize {
    let rows = a.len().max(b.len());
    let mut d = 0;
    for i in 1..=rows {
        d += (a.part(i) as i64 - b.part(i) as i64).unsigned_abs() as usize;
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_up_to;

    fn parts(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn embed_examples() {
        // e_δ(∅) = ρ_δ
        let r = EmbeddedPoint::embed(&Partition::empty(), 4);
        assert_eq!(r.doubled_entries(3), vec![-4, -6, -8]);
        // e_2((1)) = (0, −2, −3, −4, …)
        let p = EmbeddedPoint::embed(&parts("1"), 2);
        assert_eq!(p.doubled_entries(4), vec![0, -4, -6, -8]);
        // e_0((1,1)) = (2, −1, −2, …) via λ^T = (2)
        let p = EmbeddedPoint::embed(&parts("1,1"), 0);
        assert_eq!(p.doubled_entries(3), vec![4, -2, -4]);
    }

    #[test]
    fn degrees() {
        assert_eq!(degree_of_rho(4), 0);
        assert_eq!(degree_of_rho(-4), 2);
        // ρ_{−5} = (5/2, 3/2, 1/2, −1/2, −3/2, −5/2, …): three pairs
        assert_eq!(degree_of_rho(-5), 3);
        assert_eq!(degree_of_rho(0), 0);
        // e_0((1,1)) = (2,−1,−2,…): one pair (2, −2)
        assert_eq!(degree_of_singularity(&parts("1,1"), 0), 1);
    }

    #[test]
    fn regularity() {
        assert!(is_delta_regular(&Partition::empty(), 3));
        assert!(is_delta_regular(&Partition::empty(), -3));
        assert!(!is_delta_regular(&parts("1,1"), 0));
        assert!(is_delta_regular(&parts("1"), 2));
    }

    #[test]
    fn a_delta_examples() {
        assert!(in_a_delta(&parts("1,1"), 2));
        assert!(in_a_delta(&parts("2,2"), -4));
        assert!(!in_a_delta(&parts("3,3"), -3));
        assert!(in_a_delta(&Partition::empty(), 0));
        assert!(!in_a_delta(&parts("1"), 0));
    }

    #[test]
    fn restricted_neighbors_examples() {
        assert_eq!(
            restricted_neighbors(&Partition::empty(), 2).unwrap(),
            vec![parts("1")]
        );
        // at δ = 1 both (2) and (1,1) fail the column test λ^T_1 + λ^T_2 ≤ 1
        let n = restricted_neighbors(&parts("1"), 1).unwrap();
        assert_eq!(n, vec![Partition::empty()]);
        let n = restricted_neighbors(&parts("1"), 2).unwrap();
        assert_eq!(n, vec![parts("2"), parts("1,1"), Partition::empty()]);
        assert!(restricted_neighbors(&Partition::empty(), 0)
            .unwrap()
            .is_empty());
        assert!(restricted_neighbors(&parts("3"), 0).is_err());
    }

    #[test]
    fn walk_counts() {
        assert_eq!(count_walks(&Partition::empty(), 2, 0, false).unwrap(), 1);
        assert_eq!(count_walks(&Partition::empty(), 4, 0, false).unwrap(), 3);
        // at δ = 1 only ∅ and (1) are restricted, so the single restricted
        // walk of length 3 is ∅ → (1) → ∅ → (1)
        assert_eq!(count_walks(&parts("1"), 3, 1, true).unwrap(), 1);
        assert_eq!(count_walks(&parts("1"), 3, 2, true).unwrap(), 3);
        assert!(count_walks(&parts("1"), 2, 0, false).is_err());
        // (2k−1)!! walks of length 2k back to ∅
        let mut dfac = 1u64;
        for k in 1..=5u64 {
            dfac *= 2 * k - 1;
            assert_eq!(
                count_walks(&Partition::empty(), 2 * k as usize, 0, false).unwrap(),
                dfac
            );
        }
    }

    #[test]
    fn enumeration_matches_count_and_is_sorted() {
        for lambda in [Partition::empty(), parts("1"), parts("2,1")] {
            for extra in [0usize, 2, 4] {
                let n = lambda.size() + extra;
                let walks = enumerate_walks(&lambda, n, 0, false).unwrap();
                assert_eq!(
                    walks.len() as u64,
                    count_walks(&lambda, n, 0, false).unwrap()
                );
                for w in &walks {
                    assert_eq!(w.len(), n);
                    assert_eq!(w.end(), &lambda);
                }
                // distinct
                let mut dedup = walks.clone();
                dedup.dedup();
                assert_eq!(dedup.len(), walks.len());
            }
        }
    }

    #[test]
    fn closed_form_a_delta_matches_bfs() {
        for delta in -6..=6 {
            let bfs = a_delta_by_bfs(delta, 8);
            for p in partitions_up_to(8) {
                assert_eq!(
                    in_a_delta(&p, delta),
                    bfs.contains(&p),
                    "δ={delta} λ={p}"
                );
            }
        }
    }

    #[test]
    fn graph_isomorphism_on_embedding() {
        // box moves correspond to ±ε_i steps of the embedded points
        for p in partitions_up_to(6) {
            let ep = EmbeddedPoint::embed(&p, 3);
            let (add, rem) = p.box_neighbors();
            for q in add.into_iter().chain(rem) {
                let eq = EmbeddedPoint::embed(&q, 3);
                let k = p.transpose().len().max(q.transpose().len()) + 1;
                let diffs: Vec<i64> = (1..=k)
                    .map(|i| eq.doubled_entry(i) - ep.doubled_entry(i))
                    .filter(|&d| d != 0)
                    .collect();
                assert!(diffs == vec![2] || diffs == vec![-2]);
            }
        }
    }

    #[test]
    fn every_a_delta_member_is_regular() {
        for delta in -6..=6 {
            for p in partitions_up_to(8) {
                if in_a_delta(&p, delta) {
                    assert!(is_delta_regular(&p, delta));
                }
            }
        }
    }
}
