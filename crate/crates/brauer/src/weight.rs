//! Weight diagrams: labellings of a half-line by `∘ × ∨ ∧` encoding the
//! embedded point `e_δ(λ)`, the two readings back to partitions, block
//! equivalence and the partial order's generating moves.
//!
//! Vertices are indexed by slots `0, 1, 2, …` meaning vertex `k` for even
//! δ and vertex `k + ½` for odd δ.  Beyond the stored prefix every vertex
//! carries the implicit label `∨`.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::geometry::EmbeddedPoint;
use crate::partition::Partition;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WeightError {
    #[error("malformed weight diagram: #∘ − #× = {found}, expected {expected}")]
    BadCircleTimesBalance { found: i64, expected: i64 },
    #[error("{0} is not obtained from {1} by adding one box")]
    NotOneBoxMove(String, String),
    #[error("partitions lie in different blocks")]
    DifferentBlocks,
    #[error("no ∘×/×∘ configuration at adjacent vertices")]
    NoAdjacentPair,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    /// `∘`: vertex in neither index set.
    Circle,
    /// `×`: vertex in both index sets.
    Times,
    /// `∨`: vertex in `I_∨` only (the implicit tail label).
    Down,
    /// `∧`: vertex in `I_∧` only.
    Up,
}

impl Label {
    pub fn ascii(self) -> char {
        match self {
            Label::Circle => 'o',
            Label::Times => 'x',
            Label::Down => 'v',
            Label::Up => '^',
        }
    }
}

/// A weight diagram: a finite label prefix over an all-`∨` tail.
///
/// For even δ a label `∨`/`∧` at slot 0 records that some embedded entry
/// is zero; the two choices name the same partition and are canonicalised
/// to `∨`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightDiagram {
    labels: Vec<Label>,
    delta: i64,
}

impl WeightDiagram {
    pub fn from_labels(mut labels: Vec<Label>, delta: i64) -> Self {
        if delta % 2 == 0 {
            if let Some(first) = labels.first_mut() {
                if *first == Label::Up {
                    *first = Label::Down;
                }
            }
        }
        while labels.last() == Some(&Label::Down) {
            labels.pop();
        }
        Self { labels, delta }
    }

    /// The weight diagram `x_λ` of a partition.
    pub fn from_partition(lambda: &Partition, delta: i64) -> Self {
        let point = EmbeddedPoint::embed(lambda, delta);
        let t_len = lambda.transpose().len() as i64;
        // beyond this bound every vertex is covered by the arithmetic tail
        let bound = 2 * (delta.abs() / 2 + t_len + 2);
        let mut max_doubled = bound;
        let mut entries = Vec::new();
        let mut i = 1usize;
        loop {
            let d = point.doubled_entry(i);
            entries.push(d);
            if d.abs() > max_doubled && d < 0 && i > t_len as usize {
                max_doubled = max_doubled.max(d.abs());
                break;
            }
            if d < -max_doubled - 2 {
                break;
            }
            i += 1;
        }
        for &d in &entries {
            max_doubled = max_doubled.max(d.abs());
        }
        let parity = delta.rem_euclid(2);
        let slot_count = ((max_doubled - parity) / 2 + 1) as usize;
        let mut labels = vec![Label::Circle; slot_count];
        let mut zero = false;
        let in_up = |v: i64| point.contains_doubled(v);
        let in_down = |v: i64| point.contains_doubled(-v);
        for (k, slot) in labels.iter_mut().enumerate() {
            let v = 2 * k as i64 + parity;
            if v == 0 {
                continue; // handled by the zero convention below
            }
            *slot = match (in_down(v), in_up(v)) {
                (false, false) => Label::Circle,
                (true, true) => Label::Times,
                (true, false) => Label::Down,
                (false, true) => Label::Up,
            };
        }
        if parity == 0 {
            zero = point.contains_doubled(0);
            labels[0] = if zero { Label::Down } else { Label::Circle };
        }
        let _ = zero;
        Self::from_labels(labels, delta)
    }

    pub fn delta(&self) -> i64 {
        self.delta
    }

    /// `m` with δ = 2m or 2m + 1.
    pub fn m(&self) -> i64 {
        self.delta.div_euclid(2)
    }

    /// Stored prefix; every later slot is `∨`.
    pub fn prefix(&self) -> &[Label] {
        &self.labels
    }

    pub fn prefix_len(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, slot: usize) -> Label {
        self.labels.get(slot).copied().unwrap_or(Label::Down)
    }

    /// Whether some embedded entry is zero (even δ only); the slot-0 label
    /// is then conventionally `∨` but may act as `∧`.
    pub fn zero_flag(&self) -> bool {
        self.delta % 2 == 0 && matches!(self.label(0), Label::Down | Label::Up)
    }

    /// The vertex value of a slot, doubled (`2k` or `2k+1`).
    pub fn doubled_vertex(&self, slot: usize) -> i64 {
        2 * slot as i64 + self.delta.rem_euclid(2)
    }

    /// Pretty vertex name for a slot, e.g. `3` or `7/2`.
    pub fn vertex_name(&self, slot: usize) -> String {
        if self.delta % 2 == 0 {
            format!("{slot}")
        } else {
            format!("{}/2", 2 * slot + 1)
        }
    }

    pub fn count(&self, label: Label) -> usize {
        self.labels.iter().filter(|&&l| l == label).count()
    }

    /// `deg_δ(λ)`: the number of `×` labels.
    pub fn degree(&self) -> usize {
        self.count(Label::Times)
    }

    /// The invariant `#∘ − #× = m`.
    pub fn check_balance(&self) -> Result<(), WeightError> {
        let found = self.count(Label::Circle) as i64 - self.count(Label::Times) as i64;
        if found == self.m() {
            Ok(())
        } else {
            Err(WeightError::BadCircleTimesBalance { found, expected: self.m() })
        }
    }

    pub fn with_label(&self, slot: usize, label: Label) -> Self {
        let mut labels = self.labels.clone();
        if slot >= labels.len() {
            labels.resize(slot + 1, Label::Down);
        }
        labels[slot] = label;
        Self::from_labels(labels, self.delta)
    }

    /// First reading (symbols below the line right-to-left, then above the
    /// line left-to-right): recovers the transpose row by row.
    fn read_transpose(&self) -> Result<Vec<u32>, WeightError> {
        self.check_balance()?;
        let even = self.delta % 2 == 0;
        let len = self.labels.len();
        // token stream: true = symbol (step right), false = step up
        let mut tokens: Vec<bool> = Vec::new();
        let low = usize::from(even);
        for k in (low..len).rev() {
            tokens.push(matches!(self.label(k), Label::Up | Label::Times));
        }
        if even {
            // slot 0 is read exactly once: a step up iff it carries ∘
            tokens.push(self.label(0) != Label::Circle);
        }
        for k in low..len {
            tokens.push(matches!(self.label(k), Label::Down | Label::Times));
        }
        // beyond the prefix the tail contributes only symbols, with no
        // further up-steps, hence only zero parts
        let total_up = tokens.iter().filter(|&&t| !t).count();
        let mut ups_seen = 0usize;
        let mut rows = Vec::new();
        for t in tokens {
            if t {
                rows.push((total_up - ups_seen) as u32);
            } else {
                ups_seen += 1;
            }
        }
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Ok(rows)
    }

    /// Second reading (above the line right-to-left, then below
    /// left-to-right): recovers the partition itself row by row.
    fn read_direct(&self) -> Result<Vec<u32>, WeightError> {
        self.check_balance()?;
        let even = self.delta % 2 == 0;
        let len = self.labels.len();
        // token stream: true = symbol (step left), false = step down
        let mut tokens: Vec<bool> = Vec::new();
        let low = usize::from(even);
        for k in (low..len).rev() {
            tokens.push(matches!(self.label(k), Label::Down | Label::Times));
        }
        if even {
            tokens.push(self.label(0) != Label::Circle);
        }
        for k in low..len {
            tokens.push(matches!(self.label(k), Label::Up | Label::Times));
        }
        let total_left = tokens.iter().filter(|&&t| t).count();
        let mut lefts_seen = 0usize;
        let mut rows = Vec::new();
        for t in tokens {
            if t {
                lefts_seen += 1;
            } else {
                rows.push((total_left - lefts_seen) as u32);
            }
        }
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Ok(rows)
    }

    /// Recover the partition.  Both readings are computed and must agree.
    pub fn to_partition(&self) -> Result<Partition, WeightError> {
        let via_transpose = Partition::new(self.read_transpose()?)
            .map_err(|_| WeightError::BadCircleTimesBalance {
                found: 0,
                expected: self.m(),
            })?
            .transpose();
        let direct = Partition::new(self.read_direct()?).map_err(|_| {
            WeightError::BadCircleTimesBalance { found: 0, expected: self.m() }
        })?;
        debug_assert_eq!(via_transpose, direct, "the two readings disagree on {self}");
        Ok(direct)
    }

    /// The diagram together with the alternative reading of the zero
    /// convention: when slot 0 stands for a zero entry its `∨` may act as
    /// an `∧`.  Without the zero flag, just the diagram itself.
    pub fn zero_convention_variants(&self) -> Vec<WeightDiagram> {
        if self.zero_flag() {
            vec![self.clone(), self.with_label_raw(0, Label::Up)]
        } else {
            vec![self.clone()]
        }
    }

    /// Slots carrying `∘` / `×`.
    pub fn slots_with(&self, label: Label) -> Vec<usize> {
        self.labels
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == label)
            .map(|(k, _)| k)
            .collect()
    }
}

impl fmt::Display for WeightDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s: String = self.labels.iter().map(|l| l.ascii()).collect();
        s.push_str("vvv...");
        write!(f, "{s}")
    }
}

/// Construct `x_λ`.
pub fn weight_diagram(lambda: &Partition, delta: i64) -> WeightDiagram {
    WeightDiagram::from_partition(lambda, delta)
}

/// Both readings of a weight diagram, checked against each other.
pub fn partition_from_weight(x: &WeightDiagram) -> Result<Partition, WeightError> {
    x.to_partition()
}

/// The nine one-box configurations of the weight-diagram comparison lemma.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoxMoveCase {
    /// Case I (degree preserved), variants (i)–(v).
    DegreeEqual(u8),
    /// Case II (degree + 1), variants (vi)–(vii).
    DegreeUp(u8),
    /// Case III (degree − 1), variants (viii)–(ix).
    DegreeDown(u8),
}

impl BoxMoveCase {
    pub fn variant(self) -> u8 {
        match self {
            BoxMoveCase::DegreeEqual(v) | BoxMoveCase::DegreeUp(v) | BoxMoveCase::DegreeDown(v) => v,
        }
    }
}

fn match_pattern(a: (Label, Label), b: (Label, Label)) -> Option<BoxMoveCase> {
    use Label::*;
    let case = match (a, b) {
        ((Times, Down), (Down, Times)) => BoxMoveCase::DegreeEqual(1),
        ((Up, Times), (Times, Up)) => BoxMoveCase::DegreeEqual(2),
        ((Circle, Down), (Down, Circle)) => BoxMoveCase::DegreeEqual(3),
        ((Up, Circle), (Circle, Up)) => BoxMoveCase::DegreeEqual(4),
        ((Up, Down), (Circle, Times)) => BoxMoveCase::DegreeUp(6),
        ((Up, Down), (Times, Circle)) => BoxMoveCase::DegreeUp(7),
        ((Circle, Times), (Down, Up)) => BoxMoveCase::DegreeDown(8),
        ((Times, Circle), (Down, Up)) => BoxMoveCase::DegreeDown(9),
        _ => return None,
    };
    Some(case)
}

/// Classify the weight-diagram change of a single added box, `μ ▷ λ`.
pub fn classify_box_move(
    lambda: &Partition,
    mu: &Partition,
    delta: i64,
) -> Result<BoxMoveCase, WeightError> {
    if !lambda.addable().contains(mu) {
        return Err(WeightError::NotOneBoxMove(mu.to_string(), lambda.to_string()));
    }
    let xl = weight_diagram(lambda, delta);
    let xm = weight_diagram(mu, delta);
    // slot-0 `∨` with the zero convention may act as `∧`
    let variants = |x: &WeightDiagram| -> Vec<WeightDiagram> {
        if x.zero_flag() {
            vec![x.clone(), x.with_label_raw(0, Label::Up)]
        } else {
            vec![x.clone()]
        }
    };
    for a in variants(&xl) {
        for b in variants(&xm) {
            // case (v): odd δ, only vertex ½ flips ∨ → ∧
            if delta % 2 != 0 {
                let len = a.prefix_len().max(b.prefix_len());
                let diffs: Vec<usize> =
                    (0..len).filter(|&k| a.label(k) != b.label(k)).collect();
                if diffs == [0] && a.label(0) == Label::Down && b.label(0) == Label::Up {
                    return Ok(BoxMoveCase::DegreeEqual(5));
                }
            }
            let len = a.prefix_len().max(b.prefix_len());
            let diffs: Vec<usize> = (0..len).filter(|&k| a.label(k) != b.label(k)).collect();
            if diffs.len() == 2 && diffs[1] == diffs[0] + 1 {
                let p = diffs[0];
                if let Some(case) = match_pattern(
                    (a.label(p), a.label(p + 1)),
                    (b.label(p), b.label(p + 1)),
                ) {
                    return Ok(case);
                }
            }
        }
    }
    Err(WeightError::NotOneBoxMove(mu.to_string(), lambda.to_string()))
}

impl WeightDiagram {
    /// Like [`Self::with_label`] but without the slot-0 canonicalisation;
    /// internal, for exploring the zero-vertex convention.
    fn with_label_raw(&self, slot: usize, label: Label) -> Self {
        let mut labels = self.labels.clone();
        if slot >= labels.len() {
            labels.resize(slot + 1, Label::Down);
        }
        labels[slot] = label;
        while labels.last() == Some(&Label::Down) {
            labels.pop();
        }
        Self { labels, delta: self.delta }
    }
}

/// The ×/∘ pair datum of the root-multiplicity bijection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairWitness {
    /// Slot of the `×` or `∘`.
    pub slot: usize,
    /// The pair `(i, j)` solving the defining equation.
    pub pair: (usize, usize),
    /// Whether the box `(i, j)` lies in `[λ]`.
    pub in_diagram: bool,
    /// The left-count admissibility condition.
    pub admissible: bool,
}

/// `#×` minus `#∘` strictly left of a slot.
fn left_imbalance(x: &WeightDiagram, slot: usize) -> i64 {
    let times = (0..slot).filter(|&k| x.label(k) == Label::Times).count() as i64;
    let circles = (0..slot).filter(|&k| x.label(k) == Label::Circle).count() as i64;
    times - circles
}

fn admissibility_threshold(delta: i64) -> i64 {
    let m = delta.div_euclid(2);
    if delta % 2 == 0 {
        m - 1
    } else {
        m
    }
}

/// For each `×` at vertex n: the pair `i > j` with
/// `λ^T_i + λ^T_j − i − j + 2 = δ`, plus the in-diagram test.
pub fn times_pairs(lambda: &Partition, delta: i64) -> Vec<PairWitness> {
    let x = weight_diagram(lambda, delta);
    let point = EmbeddedPoint::embed(lambda, delta);
    let t = lambda.transpose();
    let mut out = Vec::new();
    for slot in x.slots_with(Label::Times) {
        let dv = x.doubled_vertex(slot);
        let bound = t.len() + (delta.unsigned_abs() as usize) + dv.unsigned_abs() as usize + 4;
        let a = (1..=bound).find(|&i| point.doubled_entry(i) == dv);
        let b = (1..=bound).find(|&i| point.doubled_entry(i) == -dv);
        let (a, b) = (a.expect("× vertex must come from a positive entry"),
                      b.expect("× vertex must come from a negative entry"));
        // pair (i > j) with i the index of the negative entry
        let (i, j) = (b, a);
        let in_diagram = lambda.contains_box(i, j);
        let admissible = left_imbalance(&x, slot) < admissibility_threshold(delta);
        out.push(PairWitness { slot, pair: (i, j), in_diagram, admissible });
    }
    out
}

/// For each `∘` at vertex n: the pair `i ≤ j` with
/// `−λ_i − λ_j + i + j = δ`, plus the in-diagram test.
pub fn circ_pairs(lambda: &Partition, delta: i64) -> Vec<PairWitness> {
    let x = weight_diagram(lambda, delta);
    let mut out = Vec::new();
    let bound = lambda.len() + delta.unsigned_abs() as usize + 2 * x.prefix_len() + 4;
    for slot in x.slots_with(Label::Circle) {
        let dv = x.doubled_vertex(slot);
        // λ_i − i + δ/2 = n  and  λ_j − j + δ/2 = −n, doubled
        let solve = |target: i64| {
            (1..=bound).find(|&i| 2 * lambda.part(i) as i64 - 2 * i as i64 + delta == target)
        };
        let i = solve(dv).expect("∘ vertex must define a first index");
        let j = solve(-dv).expect("∘ vertex must define a second index");
        let in_diagram = lambda.contains_box(i, j);
        let admissible = left_imbalance(&x, slot) > admissibility_threshold(delta);
        out.push(PairWitness { slot, pair: (i, j), in_diagram, admissible });
    }
    out
}

/// Block equivalence: identical `∘` and `×` vertex sets and matching `∧`
/// parity, the parity being unconstrained when the zero convention is in
/// force.
pub fn same_block(lambda: &Partition, mu: &Partition, delta: i64) -> bool {
    let a = weight_diagram(lambda, delta);
    let b = weight_diagram(mu, delta);
    same_block_diagrams(&a, &b)
}

pub fn same_block_diagrams(a: &WeightDiagram, b: &WeightDiagram) -> bool {
    if a.delta() != b.delta() {
        return false;
    }
    if a.slots_with(Label::Circle) != b.slots_with(Label::Circle)
        || a.slots_with(Label::Times) != b.slots_with(Label::Times)
    {
        return false;
    }
    if a.zero_flag() {
        // slot 0 may act as either ∨ or ∧, so both parities are reachable;
        // identical ∘/× slots force the zero convention on both sides
        return true;
    }
    a.count(Label::Up) % 2 == b.count(Label::Up) % 2
}

fn diagram_key(x: &WeightDiagram) -> Vec<Label> {
    x.prefix().to_vec()
}

#[allow(clippy::needless_range_loop)]
fn block_successors(x: &WeightDiagram, order_only: bool) -> Vec<WeightDiagram> {
    let mut out = Vec::new();
    let mut sources = vec![x.clone()];
    if x.zero_flag() {
        sources.push(x.with_label_raw(0, Label::Up));
    }
    for s in sources {
        let len = s.prefix_len();
        let slots: Vec<Label> = (0..len).map(|k| s.label(k)).collect();
        for p in 0..len {
            for q in 0..len {
                if p == q {
                    continue;
                }
                // swap a ∨ and an ∧; for the order moves the ∧ must move right
                if slots[p] == Label::Up && slots[q] == Label::Down && (!order_only || q > p) {
                    out.push(
                        s.with_label_raw(p, Label::Down).with_label_raw(q, Label::Up),
                    );
                }
            }
        }
        // an ∧ may also move right into the implicit tail: extend the prefix
        for p in 0..len {
            if slots[p] == Label::Up {
                out.push(
                    s.with_label_raw(len, Label::Up).with_label_raw(p, Label::Down),
                );
            }
        }
        // replace a pair of ∨'s by ∧'s (and, for block moves, conversely)
        let extended = len + 1;
        for p in 0..extended {
            for q in (p + 1)..=extended {
                if s.label(p) == Label::Down && s.label(q) == Label::Down {
                    out.push(s.with_label_raw(p, Label::Up).with_label_raw(q, Label::Up));
                }
                if !order_only && s.label(p) == Label::Up && s.label(q) == Label::Up {
                    out.push(
                        s.with_label_raw(p, Label::Down).with_label_raw(q, Label::Down),
                    );
                }
            }
        }
    }
    out.into_iter()
        .map(|d| WeightDiagram::from_labels(d.labels, d.delta))
        .collect()
}

/// Reachability oracle for [`same_block`]: BFS over the two generating
/// moves (in both directions), bounded by partition size and prefix
/// length.  Test-scale only.
pub fn same_block_by_moves(lambda: &Partition, mu: &Partition, delta: i64) -> bool {
    reachable(lambda, mu, delta, false)
}

/// The partial order `λ ≤ μ`: reachability under the two order-increasing
/// moves.  Errors when the two partitions are in different blocks.
pub fn order_leq(lambda: &Partition, mu: &Partition, delta: i64) -> Result<bool, WeightError> {
    if !same_block(lambda, mu, delta) {
        return Err(WeightError::DifferentBlocks);
    }
    Ok(reachable(lambda, mu, delta, true))
}

fn reachable(lambda: &Partition, mu: &Partition, delta: i64, order_only: bool) -> bool {
    let start = weight_diagram(lambda, delta);
    let target = weight_diagram(mu, delta);
    if start == target {
        return true;
    }
    let max_size = if order_only {
        mu.size()
    } else {
        lambda.size().max(mu.size()) + 4
    };
    let max_prefix = start.prefix_len().max(target.prefix_len()) + if order_only { 0 } else { 2 };
    let mut seen: HashSet<Vec<Label>> = HashSet::new();
    seen.insert(diagram_key(&start));
    let mut queue = VecDeque::from([start]);
    while let Some(d) = queue.pop_front() {
        for nx in block_successors(&d, order_only) {
            if nx.prefix_len() > max_prefix {
                continue;
            }
            let key = diagram_key(&nx);
            if seen.contains(&key) {
                continue;
            }
            match nx.to_partition() {
                Ok(p) if p.size() <= max_size => {}
                _ => continue,
            }
            if nx == target {
                return true;
            }
            seen.insert(key);
            queue.push_back(nx);
        }
    }
    false
}
