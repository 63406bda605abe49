//! Partitions, Young diagrams, the Young graph and King polynomials.
//!
//! Row and column indices are 1-based throughout, matching the usual
//! conventions for hook lengths and contents.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing and positive: {0:?}")]
    NotWeaklyDecreasing(Vec<i64>),
    #[error("cannot parse partition from {0:?}")]
    Parse(String),
    #[error("box ({0},{1}) lies outside the Young diagram")]
    BoxOutsideDiagram(usize, usize),
}

/// A partition: a weakly decreasing finite sequence of positive integers.
///
/// The empty sequence is the empty partition, printed as `-`.
/// Partitions are value objects; equality is structural and the stored
/// form is canonical (no trailing zeros).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self, PartitionError> {
        let mut parts: Vec<u32> = parts.into();
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(PartitionError::NotWeaklyDecreasing(
                parts.iter().map(|&p| p as i64).collect(),
            ));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of boxes `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// `λ_i` with 1-based `i`; zero beyond the last row.
    pub fn part(&self, i: usize) -> u32 {
        assert!(i >= 1);
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// The transpose (conjugate) partition: columns become rows.
    pub fn transpose(&self) -> Self {
        let ncols = self.parts.first().copied().unwrap_or(0) as usize;
        let parts = (1..=ncols)
            .map(|c| self.parts.iter().take_while(|&&p| p as usize >= c).count() as u32)
            .collect();
        Self { parts }
    }

    /// All boxes `(i, j)` of the Young diagram, 1-based, row-major.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (1..=p as usize).map(move |j| (r + 1, j)))
    }

    pub fn contains_box(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && self.part(i) as usize >= j
    }

    /// Rows in which a box can be added, producing a partition.
    pub fn addable_rows(&self) -> Vec<usize> {
        let mut rows = Vec::new();
        for i in 1..=self.parts.len() + 1 {
            if i == 1 || self.part(i) < self.part(i - 1) {
                rows.push(i);
            }
        }
        rows
    }

    /// Rows from which a box can be removed, producing a partition.
    pub fn removable_rows(&self) -> Vec<usize> {
        let mut rows = Vec::new();
        for i in 1..=self.parts.len() {
            if self.part(i) > self.part(i + 1) {
                rows.push(i);
            }
        }
        rows
    }

    pub fn with_box_added(&self, row: usize) -> Option<Self> {
        let mut parts = self.parts.clone();
        if row == parts.len() + 1 {
            parts.push(1);
        } else if row >= 1 && row <= parts.len() {
            parts[row - 1] += 1;
        } else {
            return None;
        }
        Self::new(parts).ok()
    }

    pub fn with_box_removed(&self, row: usize) -> Option<Self> {
        let mut parts = self.parts.clone();
        if row >= 1 && row <= parts.len() {
            parts[row - 1] -= 1;
        } else {
            return None;
        }
        Self::new(parts).ok()
    }

    /// All partitions obtained by adding one box.
    pub fn addable(&self) -> Vec<Self> {
        self.addable_rows()
            .into_iter()
            .filter_map(|r| self.with_box_added(r))
            .collect()
    }

    /// All partitions obtained by removing one box.
    pub fn removable(&self) -> Vec<Self> {
        self.removable_rows()
            .into_iter()
            .filter_map(|r| self.with_box_removed(r))
            .collect()
    }

    /// Box neighbours in the Young graph: `(addable, removable)`.
    pub fn box_neighbors(&self) -> (Vec<Self>, Vec<Self>) {
        (self.addable(), self.removable())
    }

    /// Hook length `h(i, j)`.
    pub fn hook_length(&self, i: usize, j: usize) -> Result<u32, PartitionError> {
        if !self.contains_box(i, j) {
            return Err(PartitionError::BoxOutsideDiagram(i, j));
        }
        let arm = self.part(i) as usize - j;
        let leg = self.transpose().part(j) as usize - i;
        Ok((arm + leg + 1) as u32)
    }

    /// The content-like quantity `d(i, j)` entering the King polynomial:
    /// `λ_i + λ_j − i − j + 1` for `i ≤ j`, and
    /// `−λ^T_i − λ^T_j + i + j − 1` for `i > j`.
    pub fn d_value(&self, i: usize, j: usize) -> Result<i64, PartitionError> {
        if !self.contains_box(i, j) {
            return Err(PartitionError::BoxOutsideDiagram(i, j));
        }
        let v = if i <= j {
            self.part(i) as i64 + self.part(j) as i64 - i as i64 - j as i64 + 1
        } else {
            let t = self.transpose();
            -(t.part(i) as i64) - t.part(j) as i64 + i as i64 + j as i64 - 1
        };
        Ok(v)
    }

    /// King polynomial `P_λ(u) = Π_{(i,j)} (u − 1 + d(i,j)) / h(i,j)`,
    /// kept in factored form.
    pub fn king_polynomial(&self) -> KingPolynomial {
        let mut roots = Vec::new();
        let mut denominator = BigInt::one();
        for (i, j) in self.boxes() {
            roots.push(1 - self.d_value(i, j).unwrap());
            denominator *= BigInt::from(self.hook_length(i, j).unwrap());
        }
        roots.sort_unstable();
        KingPolynomial { roots, denominator }
    }

    /// Multiplicity of `δ` as a root of `P_λ(u)`: the number of boxes with
    /// `d(i,j) = 1 − δ`.
    pub fn king_root_multiplicity(&self, delta: i64) -> usize {
        self.king_polynomial().root_multiplicity(delta)
    }

    /// Number of standard Young tableaux of this shape (hook length formula).
    pub fn standard_tableaux_count(&self) -> BigInt {
        let mut num = BigInt::one();
        for k in 1..=self.size() {
            num *= BigInt::from(k);
        }
        let mut den = BigInt::one();
        for (i, j) in self.boxes() {
            den *= BigInt::from(self.hook_length(i, j).unwrap());
        }
        num / den
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Self::empty());
        }
        let parts: Result<Vec<u32>, _> = s.split(',').map(|p| p.trim().parse::<u32>()).collect();
        match parts {
            Ok(parts) => Self::new(parts).map_err(|_| PartitionError::Parse(s.to_string())),
            Err(_) => Err(PartitionError::Parse(s.to_string())),
        }
    }
}

impl TryFrom<String> for Partition {
    type Error = PartitionError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<Partition> for String {
    fn from(p: Partition) -> String {
        p.to_string()
    }
}

/// The King polynomial in factored form: an integer root multiset
/// (box `(i,j)` contributes the root `1 − d(i,j)`) over a positive integer
/// denominator (the product of all hook lengths).  Never expanded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KingPolynomial {
    roots: Vec<i64>,
    denominator: BigInt,
}

impl KingPolynomial {
    pub fn roots(&self) -> &[i64] {
        &self.roots
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    pub fn root_multiplicity(&self, r: i64) -> usize {
        self.roots.iter().filter(|&&x| x == r).count()
    }

    /// Exact evaluation `Π (u − r) / denominator` at a rational point.
    pub fn evaluate(&self, u: &BigRational) -> BigRational {
        let mut v = BigRational::one();
        for &r in &self.roots {
            v *= u - BigRational::from_integer(BigInt::from(r));
        }
        v / BigRational::from_integer(self.denominator.clone())
    }

    pub fn evaluate_at_int(&self, u: i64) -> BigRational {
        self.evaluate(&BigRational::from_integer(BigInt::from(u)))
    }
}

/// All partitions of exactly `k` boxes, in lexicographically decreasing order.
pub fn partitions_of(k: usize) -> Vec<Partition> {
    fn go(remaining: usize, max_part: usize, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::new(acc.clone()).unwrap());
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            acc.push(p as u32);
            go(remaining - p, p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k.max(1), &mut Vec::new(), &mut out);
    if k == 0 {
        return vec![Partition::empty()];
    }
    out
}

/// All partitions with at most `max_size` boxes.
pub fn partitions_up_to(max_size: usize) -> Vec<Partition> {
    (0..=max_size).flat_map(partitions_of).collect()
}

/// The index set `Λ_n`: partitions of `n, n−2, n−4, …`.
pub fn lambda_n(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut k = n as i64;
    while k >= 0 {
        out.extend(partitions_of(k as usize));
        k -= 2;
    }
    out
}

/// Membership in `Λ_n`: `|λ| ≤ n` with the same parity.
pub fn in_lambda_n(p: &Partition, n: usize) -> bool {
    p.size() <= n && (n - p.size()).is_multiple_of(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn parts(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn transpose_small() {
        assert_eq!(parts("2").transpose(), parts("1,1"));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        let p = parts("10,10,9,9,8,5,3,3");
        assert_eq!(p.transpose().transpose(), p);
        // direct column count
        assert_eq!(p.transpose(), parts("8,8,8,6,6,5,5,5,4,2"));
    }

    #[test]
    fn box_neighbors_small() {
        assert_eq!(Partition::empty().addable(), vec![parts("1")]);
        assert!(Partition::empty().removable().is_empty());
        assert_eq!(parts("1").addable(), vec![parts("2"), parts("1,1")]);
        assert_eq!(parts("1").removable(), vec![Partition::empty()]);
        let (add, rem) = parts("2,1").box_neighbors();
        assert_eq!(add, vec![parts("3,1"), parts("2,2"), parts("2,1,1")]);
        assert_eq!(rem, vec![parts("1,1"), parts("2")]);
    }

    #[test]
    fn neighbor_counts_match_distinct_part_sizes() {
        for p in partitions_up_to(8) {
            let mut distinct: Vec<u32> = p.parts().to_vec();
            distinct.dedup();
            let k = distinct.len();
            assert_eq!(p.addable().len(), k + 1);
            assert_eq!(p.removable().len(), k);
        }
    }

    #[test]
    fn d_values() {
        assert_eq!(parts("1").d_value(1, 1).unwrap(), 1);
        // (2): boxes (1,1) and (1,2); roots 1−d must be {−2, 1} giving
        // P_{(2)}(u) = (u+2)(u−1)/2
        assert_eq!(parts("2").d_value(1, 1).unwrap(), 3);
        assert_eq!(parts("2").d_value(1, 2).unwrap(), 0);
        // (1,1): i>j branch; P_{(1²)}(u) = u(u−1)/2
        assert_eq!(parts("1,1").d_value(1, 1).unwrap(), 1);
        assert_eq!(parts("1,1").d_value(2, 1).unwrap(), 0);
        assert!(parts("2").d_value(2, 1).is_err());
    }

    #[test]
    fn king_polynomial_examples() {
        let p = Partition::empty().king_polynomial();
        assert!(p.roots().is_empty());
        assert_eq!(p.evaluate_at_int(17), BigRational::from_integer(1.into()));

        // P_{(1)}(u) = u
        let p1 = parts("1").king_polynomial();
        assert_eq!(p1.roots(), &[0]);
        assert_eq!(p1.denominator(), &BigInt::from(1));

        // P_{(2)}(u) = (u+2)(u−1)/2
        let p2 = parts("2").king_polynomial();
        assert_eq!(p2.roots(), &[-2, 1]);
        assert_eq!(p2.denominator(), &BigInt::from(2));

        // P_{(2,1)}(u) = (u+2)u(u−2)/3
        let p21 = parts("2,1").king_polynomial();
        assert_eq!(p21.roots(), &[-2, 0, 2]);
        assert_eq!(p21.denominator(), &BigInt::from(3));

        // P_{(1³)}(u) = u(u−2)(u−1)/3!
        let p111 = parts("1,1,1").king_polynomial();
        assert_eq!(p111.roots(), &[0, 1, 2]);
        assert_eq!(p111.denominator(), &BigInt::from(6));

        // P_{(3)}(u) = (u+4)u(u−1)/3!
        let p3 = parts("3").king_polynomial();
        assert_eq!(p3.roots(), &[-4, 0, 1]);
        assert_eq!(p3.denominator(), &BigInt::from(6));

        // P_{(2,1²)}(u) = (u+2)u(u−3)(u−1)/(4·2)
        let p211 = parts("2,1,1").king_polynomial();
        assert_eq!(p211.roots(), &[-2, 0, 1, 3]);
        assert_eq!(p211.denominator(), &BigInt::from(8));
    }

    #[test]
    fn king_root_multiplicities() {
        assert_eq!(Partition::empty().king_root_multiplicity(3), 0);
        assert_eq!(parts("2").king_root_multiplicity(1), 1);
        assert_eq!(parts("2,1").king_root_multiplicity(-2), 1);
    }

    #[test]
    fn hook_denominator_from_transpose() {
        for p in partitions_up_to(8) {
            let t = p.transpose();
            let mut den = BigInt::one();
            for (i, j) in t.boxes() {
                den *= BigInt::from(t.hook_length(i, j).unwrap());
            }
            assert_eq!(&den, p.king_polynomial().denominator());
            assert_eq!(p.boxes().count(), p.size());
            assert!(p.boxes().all(|(i, j)| p.hook_length(i, j).unwrap() >= 1));
        }
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(parts("10,10,9,9,8,5,3,3").to_string(), "10,10,9,9,8,5,3,3");
        assert_eq!(Partition::empty().to_string(), "-");
        assert_eq!("-".parse::<Partition>().unwrap(), Partition::empty());
        assert!("3,5".parse::<Partition>().is_err());
    }

    #[test]
    fn lambda_n_parity() {
        assert_eq!(lambda_n(2).len(), 3); // (2), (1,1), ∅
        for p in lambda_n(6) {
            assert!(in_lambda_n(&p, 6));
        }
    }

    proptest! {
        #[test]
        fn transpose_involution(idx in 0usize..200) {
            let all = partitions_up_to(9);
            let p = &all[idx % all.len()];
            prop_assert_eq!(&p.transpose().transpose(), p);
        }

        #[test]
        fn box_neighbors_symmetric(idx in 0usize..200) {
            let all = partitions_up_to(8);
            let p = &all[idx % all.len()];
            for q in p.addable() {
                prop_assert!(q.removable().contains(p));
            }
            for q in p.removable() {
                prop_assert!(q.addable().contains(p));
            }
        }
    }
}
