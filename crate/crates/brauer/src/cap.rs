//! Cap diagrams on weight diagrams: caps, curls through the wall, rays,
//! the chamber (face) decomposition, and decomposition numbers.
//!
//! The `∨`/`∧` labels of a weight diagram are matched by the usual stack
//! rule into caps `(∨, ∧)`.  Leftover `∧`'s (left of every unmatched `∨`)
//! are paired consecutively into curls through the wall; a final unpaired
//! `∧` and all unmatched `∨`'s carry vertical rays.
//!
//! Each curl is modelled as two nested arcs with virtual endpoints on the
//! negative axis, so that the full arc system is nesting-free of
//! crossings and faces can be read off by innermost containment.

use std::collections::BTreeMap;

use crate::partition::{lambda_n, Partition};
use crate::weight::{same_block_diagrams, weight_diagram, Label, WeightDiagram};

/// An arc of the cap diagram in wall coordinates.  Slots are `≥ 0`;
/// negative coordinates are virtual curl endpoints left of the wall.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arc {
    pub left: i64,
    pub right: i64,
}

impl Arc {
    fn covers(&self, x: i64) -> bool {
        self.left < x && x < self.right
    }

    pub(crate) fn contains_arc(&self, other: &Arc) -> bool {
        self.left < other.left && other.right < self.right
    }
}

/// A face of the cap diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Chamber {
    /// The region directly under the arc with this index.
    UnderArc(usize),
    /// The outer region between consecutive rays: `Outer(k)` lies right
    /// of exactly `k` rays.
    Outer(usize),
}

/// The cap diagram `c_λ` of a weight diagram.
#[derive(Debug, Clone)]
pub struct CapDiagram {
    diagram: WeightDiagram,
    /// Caps `(∨ slot, ∧ slot)`.
    caps: Vec<(usize, usize)>,
    /// Curls `(left ∧ slot, right ∧ slot)`, left to right.
    curls: Vec<(usize, usize)>,
    /// The unpaired leftover `∧`, if the leftover count is odd.
    ray_up: Option<usize>,
    /// Unmatched `∨` slots inside the prefix; every tail slot is also a
    /// `∨` ray.
    ray_down: Vec<usize>,
    /// All arcs: every cap as itself, every curl as a nested pair with
    /// virtual left endpoints.
    arcs: Vec<Arc>,
}

impl CapDiagram {
    pub fn from_weight(diagram: &WeightDiagram) -> Self {
        let mut stack: Vec<usize> = Vec::new();
        let mut caps = Vec::new();
        let mut leftover_up = Vec::new();
        for k in 0..diagram.prefix_len() {
            match diagram.label(k) {
                Label::Down => stack.push(k),
                Label::Up => match stack.pop() {
                    Some(v) => caps.push((v, k)),
                    None => leftover_up.push(k),
                },
                Label::Circle | Label::Times => {}
            }
        }
        let mut curls = Vec::new();
        let mut chunks = leftover_up.chunks_exact(2);
        for pair in &mut chunks {
            curls.push((pair[0], pair[1]));
        }
        let ray_up = chunks.remainder().first().copied();
        let ray_down = stack;
        let mut arcs: Vec<Arc> = caps
            .iter()
            .map(|&(a, b)| Arc { left: a as i64, right: b as i64 })
            .collect();
        for (c, &(a, b)) in curls.iter().enumerate() {
            let c = c as i64;
            arcs.push(Arc { left: -(2 * c + 1), right: a as i64 });
            arcs.push(Arc { left: -(2 * c + 2), right: b as i64 });
        }
        let out = Self {
            diagram: diagram.clone(),
            caps,
            curls,
            ray_up,
            ray_down,
            arcs,
        };
        debug_assert!(out.is_consistent(), "inconsistent cap diagram for {diagram}");
        out
    }

    pub fn from_partition(lambda: &Partition, delta: i64) -> Self {
        Self::from_weight(&weight_diagram(lambda, delta))
    }

    pub fn weight(&self) -> &WeightDiagram {
        &self.diagram
    }

    pub fn caps(&self) -> &[(usize, usize)] {
        &self.caps
    }

    pub fn curls(&self) -> &[(usize, usize)] {
        &self.curls
    }

    pub fn ray_up(&self) -> Option<usize> {
        self.ray_up
    }

    /// Unmatched `∨` rays inside the stored prefix.  Every slot past the
    /// prefix is a further `∨` ray.
    pub fn ray_down(&self) -> &[usize] {
        &self.ray_down
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    fn is_consistent(&self) -> bool {
        // arcs pairwise nested or disjoint
        for (i, a) in self.arcs.iter().enumerate() {
            for b in &self.arcs[i + 1..] {
                let disjoint = a.right < b.left
                    || b.right < a.left
                    || a.right < b.left
                    || b.right < a.left;
                if !(disjoint || a.contains_arc(b) || b.contains_arc(a)) && a != b {
                    // shared endpoints never occur
                    if !(a.contains_arc(b) || b.contains_arc(a)) && !disjoint {
                        return false;
                    }
                }
            }
        }
        // rays never under an arc
        self.ray_slots()
            .iter()
            .all(|&r| self.arcs.iter().all(|a| !a.covers(r as i64)))
            // free ∨'s all right of free ∧'s
            && self
                .ray_down
                .iter()
                .all(|&v| self.leftover_ups().iter().all(|&u| u < v))
    }

    fn leftover_ups(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .curls
            .iter()
            .flat_map(|&(a, b)| [a, b])
            .chain(self.ray_up)
            .collect();
        v.sort_unstable();
        v
    }

    /// Ray slots inside the prefix, sorted.
    fn ray_slots(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.ray_down.iter().copied().chain(self.ray_up).collect();
        v.sort_unstable();
        v
    }

    fn rays_left_of(&self, x: i64) -> usize {
        self.ray_slots().iter().filter(|&&r| (r as i64) < x).count()
    }

    /// The face containing the interior of a `∘`/`×` slot (or any point
    /// of the line not on an arc endpoint or ray).
    pub fn chamber_of(&self, slot: usize) -> Chamber {
        let x = slot as i64;
        self.innermost_covering(x)
            .map(Chamber::UnderArc)
            .unwrap_or_else(|| Chamber::Outer(self.rays_left_of(x)))
    }

    fn innermost_covering(&self, x: i64) -> Option<usize> {
        self.arcs
            .iter()
            .enumerate()
            .filter(|(_, a)| a.covers(x))
            .min_by_key(|(_, a)| a.right - a.left)
            .map(|(i, _)| i)
    }

    /// The face immediately outside an arc.
    fn parent_chamber(&self, arc: usize) -> Chamber {
        let a = self.arcs[arc];
        self.arcs
            .iter()
            .enumerate()
            .filter(|(i, b)| *i != arc && b.contains_arc(&a))
            .min_by_key(|(_, b)| b.right - b.left)
            .map(|(i, _)| Chamber::UnderArc(i))
            .unwrap_or_else(|| Chamber::Outer(self.rays_left_of(a.left.max(0))))
    }

    /// The faces whose closure contains a given `∨`/`∧` slot: two for arc
    /// endpoints and for rays, one for `∘`/`×`.
    pub fn chambers_at(&self, slot: usize) -> Vec<Chamber> {
        match self.diagram.label(slot) {
            Label::Circle | Label::Times => vec![self.chamber_of(slot)],
            _ => {
                if let Some(i) = self
                    .arcs
                    .iter()
                    .position(|a| a.right == slot as i64 || a.left == slot as i64)
                {
                    let mut v = vec![Chamber::UnderArc(i), self.parent_chamber(i)];
                    v.sort();
                    v
                } else {
                    let k = self.rays_left_of(slot as i64);
                    vec![Chamber::Outer(k), Chamber::Outer(k + 1)]
                }
            }
        }
    }

    /// The arc partner of a `∨`/`∧` slot, if it is a cap or curl endpoint.
    pub fn partner(&self, slot: usize) -> Option<usize> {
        self.caps
            .iter()
            .chain(self.curls.iter())
            .find_map(|&(a, b)| match slot {
                s if s == a => Some(b),
                s if s == b => Some(a),
                _ => None,
            })
    }
}

#[allow(clippy::needless_range_loop)]
fn try_flip_degree(c: &CapDiagram, target: &WeightDiagram) -> Option<usize> {
    let x = c.weight();
    let len = x.prefix_len().max(target.prefix_len());
    let mut flips = 0usize;
    let mut seen = vec![false; len];
    for &(a, b) in c.caps() {
        seen[a] = true;
        seen[b] = true;
        match (target.label(a), target.label(b)) {
            (Label::Down, Label::Up) => {}
            (Label::Up, Label::Down) => flips += 1,
            _ => return None,
        }
    }
    for &(a, b) in c.curls() {
        seen[a] = true;
        seen[b] = true;
        match (target.label(a), target.label(b)) {
            (Label::Up, Label::Up) => {}
            (Label::Down, Label::Down) => flips += 1,
            _ => return None,
        }
    }
    for k in 0..len {
        if !seen[k] && x.label(k) != target.label(k) {
            return None;
        }
    }
    Some(flips)
}

/// The exponent `k` with `d_{λμ}(q) = q^k`, if the decomposition number
/// `[Δ_μ : L_λ]` is nonzero: `x_μ` must agree with `x_λ` off the arcs of
/// `c_λ` and either preserve or flip each cap `∨∧ → ∧∨` and each curl
/// `∧∧ → ∨∨`; `k` counts the flips.
pub fn d_exponent(lambda: &Partition, mu: &Partition, delta: i64) -> Option<usize> {
    let xl = weight_diagram(lambda, delta);
    let xm = weight_diagram(mu, delta);
    if !same_block_diagrams(&xl, &xm) {
        return None;
    }
    let mut best: Option<usize> = None;
    for a in xl.zero_convention_variants() {
        let c = CapDiagram::from_weight(&a);
        for b in xm.zero_convention_variants() {
            if let Some(k) = try_flip_degree(&c, &b) {
                best = Some(best.map_or(k, |cur| cur.min(k)));
            }
        }
    }
    best
}

/// `D_{λμ} = [Δ_μ(δ) : L_λ(δ)] ∈ {0, 1}`.
pub fn decomposition_number(lambda: &Partition, mu: &Partition, delta: i64) -> u32 {
    u32::from(d_exponent(lambda, mu, delta).is_some())
}

/// All partitions of the block of `lambda` inside `Λ_n`, sorted by
/// (size, parts).
pub fn block_in_lambda_n(lambda: &Partition, n: usize, delta: i64) -> Vec<Partition> {
    let mut v: Vec<Partition> = lambda_n(n)
        .into_iter()
        .filter(|mu| crate::weight::same_block(lambda, mu, delta))
        .collect();
    v.sort_by_key(|p| (p.size(), p.parts().to_vec()));
    v
}

/// The decomposition matrix of a block inside `Λ_n`: rows and columns
/// indexed by `block_in_lambda_n`, entry `(i, j) = [Δ_{μ_j} : L_{λ_i}]`.
pub fn decomposition_matrix(members: &[Partition], delta: i64) -> Vec<Vec<u32>> {
    members
        .iter()
        .map(|l| members.iter().map(|m| decomposition_number(l, m, delta)).collect())
        .collect()
}

/// `dim L_n(λ)` for all λ in a block, from walk counts and the inverse of
/// the unitriangular decomposition matrix:
/// `dim L_λ = Σ_μ (D⁻¹)_{λμ} dim Δ_μ`.
pub fn simple_dimensions_in_block(
    members: &[Partition],
    n: usize,
    delta: i64,
) -> BTreeMap<Vec<u32>, u128> {
    let k = members.len();
    let d = decomposition_matrix(members, delta);
    let std_dims: Vec<i128> = members
        .iter()
        .map(|m| crate::geometry::count_walks(m, n, delta, false).unwrap() as i128)
        .collect();
    // dim Δ_μ = Σ_λ D_{λμ} dim L_λ with every contributing λ at least as
    // large as μ, so solve from the largest member downwards
    let mut s = vec![0i128; k];
    for j in (0..k).rev() {
        let mut val = std_dims[j];
        for i in 0..k {
            if i != j && d[i][j] != 0 {
                val -= d[i][j] as i128 * s[i];
            }
        }
        s[j] = val;
    }
    members
        .iter()
        .enumerate()
        .map(|(i, m)| (m.parts().to_vec(), s[i] as u128))
        .collect()
}

/// `dim L_n(λ)`, computed within its block.
pub fn simple_dimension(lambda: &Partition, n: usize, delta: i64) -> u128 {
    let members = block_in_lambda_n(lambda, n, delta);
    simple_dimensions_in_block(&members, n, delta)[lambda.parts()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{partitions_up_to, Partition};
    use crate::weight::order_leq;

    fn parts(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn simple_cap_structure() {
        // x_{(2,1)} at δ = 1 is ∨∧∨∨…: one cap (0,1), no curls
        let c = CapDiagram::from_partition(&parts("2,1"), 1);
        assert_eq!(c.caps(), &[(0, 1)]);
        assert!(c.curls().is_empty());
        assert_eq!(c.ray_up(), None);
        // x_{(1)} at δ = 1 is ∧∨∨…: a lone ∧ ray
        let c = CapDiagram::from_partition(&parts("1"), 1);
        assert!(c.caps().is_empty());
        assert_eq!(c.ray_up(), Some(0));
    }

    #[test]
    fn curls_appear_for_negative_delta() {
        // x_{(4,4)} at δ = −3 is ∧∧××∨∨…: the two leftover ∧'s pair
        // through the wall
        let c = CapDiagram::from_partition(&parts("4,4"), -3);
        assert_eq!(c.curls(), &[(0, 1)]);
        assert!(c.caps().is_empty());
        let mut found = false;
        for p in partitions_up_to(8) {
            let c = CapDiagram::from_partition(&p, -3);
            if !c.curls().is_empty() {
                found = true;
                for &(a, b) in c.curls() {
                    assert!(a < b);
                    assert_eq!(c.weight().label(a), crate::weight::Label::Up);
                    assert_eq!(c.weight().label(b), crate::weight::Label::Up);
                }
            }
        }
        assert!(found, "no curl in the sample");
    }

    #[test]
    fn structural_invariants_exhaustive() {
        for delta in -6..=6 {
            for p in partitions_up_to(9) {
                let c = CapDiagram::from_partition(&p, delta);
                // every ∨/∧ of the prefix is an arc endpoint or a ray
                for k in 0..c.weight().prefix_len() {
                    match c.weight().label(k) {
                        crate::weight::Label::Down | crate::weight::Label::Up => {
                            let on_arc = c.partner(k).is_some();
                            let on_ray =
                                c.ray_up() == Some(k) || c.ray_down().contains(&k);
                            assert!(on_arc ^ on_ray, "δ={delta} λ={p} slot {k}");
                        }
                        _ => assert!(c.partner(k).is_none()),
                    }
                }
                // chambers at any slot are well defined and at most two
                for k in 0..c.weight().prefix_len() + 2 {
                    let ch = c.chambers_at(k);
                    assert!(!ch.is_empty() && ch.len() <= 2);
                }
            }
        }
    }

    #[test]
    fn flipping_caps_moves_down() {
        // flipping arcs of c_λ yields x_μ with μ ≤ λ in the block order
        for delta in [-2, 1, 2, 3] {
            for p in partitions_up_to(7) {
                for q in partitions_up_to(7) {
                    if let Some(k) = d_exponent(&q, &p, delta) {
                        assert!(order_leq(&p, &q, delta).unwrap(), "δ={delta} {p} ≤ {q}");
                        if k == 0 {
                            assert_eq!(p, q);
                        } else {
                            assert!(p.size() < q.size());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn decomposition_matrix_unitriangular() {
        for delta in [-4, -2, 1, 2] {
            for n in [4usize, 6] {
                let mut seen = Vec::new();
                for rep in crate::partition::lambda_n(n) {
                    if seen.iter().any(|s| crate::weight::same_block(&rep, s, delta)) {
                        continue;
                    }
                    seen.push(rep.clone());
                    let members = block_in_lambda_n(&rep, n, delta);
                    let d = decomposition_matrix(&members, delta);
                    for (i, row) in d.iter().enumerate() {
                        assert_eq!(row[i], 1);
                        for (j, &v) in row.iter().enumerate() {
                            if v != 0 && i != j {
                                assert!(members[j].size() < members[i].size());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn known_block_delta_one() {
        // δ = 1, n = 3: block {(1), (2,1)} with [Δ_{(1)}] = [L_{(1)}] + [L_{(2,1)}]
        let members = block_in_lambda_n(&parts("1"), 3, 1);
        assert_eq!(members, vec![parts("1"), parts("2,1")]);
        assert_eq!(decomposition_number(&parts("2,1"), &parts("1"), 1), 1);
        assert_eq!(d_exponent(&parts("2,1"), &parts("1"), 1), Some(1));
        let dims = simple_dimensions_in_block(&members, 3, 1);
        assert_eq!(dims[&vec![1]], 1);
        assert_eq!(dims[&vec![2, 1]], 2);
    }

    #[test]
    fn simple_dimensions_positive() {
        for delta in [-4, -2, -1, 1, 2, 3] {
            for n in 1usize..=6 {
                let mut seen: Vec<Partition> = Vec::new();
                for rep in crate::partition::lambda_n(n) {
                    if seen.iter().any(|s| crate::weight::same_block(&rep, s, delta)) {
                        continue;
                    }
                    seen.push(rep.clone());
                    let members = block_in_lambda_n(&rep, n, delta);
                    let dims = simple_dimensions_in_block(&members, n, delta);
                    for (p, d) in dims {
                        assert!(d >= 1, "δ={delta} n={n} λ={p:?} dim {d}");
                    }
                }
            }
        }
    }
}
