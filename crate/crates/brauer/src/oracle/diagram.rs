//! Brauer diagrams as perfect matchings on 2n points and their
//! concatenation product with exact loop counting.

use std::collections::BTreeMap;

use num::rational::BigRational;
use num::{One, Zero};

/// A pair partition of 2n points: `0..n` on top, `n..2n` on the bottom.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BrauerDiagram {
    n: usize,
    partner: Vec<usize>,
}

impl BrauerDiagram {
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Self {
        assert_eq!(pairs.len(), n, "need exactly n pairs");
        let mut partner = vec![usize::MAX; 2 * n];
        for &(a, b) in pairs {
            assert!(a < 2 * n && b < 2 * n && a != b);
            assert!(partner[a] == usize::MAX && partner[b] == usize::MAX);
            partner[a] = b;
            partner[b] = a;
        }
        Self { n, partner }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partner(&self, point: usize) -> usize {
        self.partner[point]
    }

    /// Concatenation: `self` stacked on top of `other`; returns the
    /// resulting diagram and the number of closed loops removed.
    pub fn multiply(&self, other: &BrauerDiagram) -> (BrauerDiagram, u32) {
        assert_eq!(self.n, other.n, "rank mismatch");
        let n = self.n;
        // global nodes: self at 0..2n, other at 2n..4n; glue self's
        // bottom n+i to other's top 2n+i
        let pg = |x: usize| {
            if x < 2 * n {
                self.partner[x]
            } else {
                2 * n + other.partner[x - 2 * n]
            }
        };
        let glue = |x: usize| if x < 2 * n { x + n } else { x - n };
        let external = |x: usize| x < n || x >= 3 * n;
        let to_result = |x: usize| if x < n { x } else { x - 2 * n };
        let mut visited = vec![false; 4 * n];
        let mut partner = vec![usize::MAX; 2 * n];
        for start in (0..n).chain(3 * n..4 * n) {
            if partner[to_result(start)] != usize::MAX {
                continue;
            }
            let mut y = pg(start);
            while !external(y) {
                visited[y] = true;
                let y2 = glue(y);
                visited[y2] = true;
                y = pg(y2);
            }
            partner[to_result(start)] = to_result(y);
            partner[to_result(y)] = to_result(start);
        }
        let mut loops = 0u32;
        for z in n..3 * n {
            if visited[z] {
                continue;
            }
            loops += 1;
            let mut cur = z;
            loop {
                visited[cur] = true;
                let nxt = pg(cur);
                visited[nxt] = true;
                cur = glue(nxt);
                if cur == z {
                    break;
                }
            }
        }
        (BrauerDiagram { n, partner }, loops)
    }
}

pub fn identity(n: usize) -> BrauerDiagram {
    let pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, n + i)).collect();
    BrauerDiagram::from_pairs(n, &pairs)
}

/// The transposition generator σ_i, 1 ≤ i ≤ n−1.
pub fn sigma_gen(n: usize, i: usize) -> BrauerDiagram {
    assert!((1..n).contains(&i));
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..n {
        if j == i - 1 {
            pairs.push((j, n + i));
        } else if j == i {
            pairs.push((j, n + i - 1));
        } else {
            pairs.push((j, n + j));
        }
    }
    BrauerDiagram::from_pairs(n, &pairs)
}

/// The contraction generator e_i, 1 ≤ i ≤ n−1.
pub fn e_gen(n: usize, i: usize) -> BrauerDiagram {
    assert!((1..n).contains(&i));
    let mut pairs: Vec<(usize, usize)> = vec![(i - 1, i), (n + i - 1, n + i)];
    for j in 0..n {
        if j != i - 1 && j != i {
            pairs.push((j, n + j));
        }
    }
    BrauerDiagram::from_pairs(n, &pairs)
}

/// A linear combination of diagrams over the rationals, for a fixed
/// numeric δ.
pub type Element = BTreeMap<BrauerDiagram, BigRational>;

pub fn element_from(d: BrauerDiagram) -> Element {
    BTreeMap::from([(d, BigRational::one())])
}

pub fn add_scaled(acc: &mut Element, d: BrauerDiagram, c: BigRational) {
    use std::collections::btree_map::Entry;
    match acc.entry(d) {
        Entry::Vacant(slot) => {
            if !c.is_zero() {
                slot.insert(c);
            }
        }
        Entry::Occupied(mut slot) => {
            *slot.get_mut() += c;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}

pub fn multiply_elements(a: &Element, b: &Element, delta: &BigRational) -> Element {
    let mut out = Element::new();
    for (da, ca) in a {
        for (db, cb) in b {
            let (d, loops) = da.multiply(db);
            let mut c = ca * cb;
            for _ in 0..loops {
                c *= delta;
            }
            add_scaled(&mut out, d, c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::FromPrimitive;

    fn q(x: i64) -> BigRational {
        BigRational::from_i64(x).unwrap()
    }

    fn all_diagrams(n: usize) -> Vec<BrauerDiagram> {
        fn rec(n: usize, partner: &mut Vec<usize>, out: &mut Vec<BrauerDiagram>) {
            if let Some(a) = partner.iter().position(|&p| p == usize::MAX) {
                for b in a + 1..2 * n {
                    if partner[b] == usize::MAX {
                        partner[a] = b;
                        partner[b] = a;
                        rec(n, partner, out);
                        partner[a] = usize::MAX;
                        partner[b] = usize::MAX;
                    }
                }
            } else {
                let pairs: Vec<(usize, usize)> = (0..2 * n)
                    .filter(|&i| i < partner[i])
                    .map(|i| (i, partner[i]))
                    .collect();
                out.push(BrauerDiagram::from_pairs(n, &pairs));
            }
        }
        let mut out = Vec::new();
        rec(n, &mut vec![usize::MAX; 2 * n], &mut out);
        out
    }

    #[test]
    fn diagram_count_is_double_factorial() {
        assert_eq!(all_diagrams(1).len(), 1);
        assert_eq!(all_diagrams(2).len(), 3);
        assert_eq!(all_diagrams(3).len(), 15);
        assert_eq!(all_diagrams(4).len(), 105);
    }

    #[test]
    fn generator_products() {
        // e_1 · e_1 = δ e_1 at n = 2
        let e1 = e_gen(2, 1);
        let (d, loops) = e1.multiply(&e1);
        assert_eq!(d, e1);
        assert_eq!(loops, 1);
        // σ_1² = 1
        let s1 = sigma_gen(2, 1);
        let (d, loops) = s1.multiply(&s1);
        assert_eq!(d, identity(2));
        assert_eq!(loops, 0);
        // e_1 σ_2 e_1 = e_1 at n = 3
        let (d, l1) = e_gen(3, 1).multiply(&sigma_gen(3, 2));
        let (d, l2) = d.multiply(&e_gen(3, 1));
        assert_eq!(d, e_gen(3, 1));
        assert_eq!(l1 + l2, 0);
    }

    fn assert_equal_elements(a: &Element, b: &Element) {
        assert_eq!(a, b);
    }

    #[test]
    fn defining_relations_exact() {
        for delta in [q(-3), q(0), q(2), q(7)] {
            for n in 2..=5usize {
                let id = element_from(identity(n));
                let s = |i| element_from(sigma_gen(n, i));
                let e = |i| element_from(e_gen(n, i));
                let mul = |a: &Element, b: &Element| multiply_elements(a, b, &delta);
                let mul3 = |a: &Element, b: &Element, c: &Element| mul(&mul(a, b), c);
                for i in 1..n {
                    assert_equal_elements(&mul(&s(i), &s(i)), &id);
                    let mut de = Element::new();
                    add_scaled(&mut de, e_gen(n, i), delta.clone());
                    assert_equal_elements(&mul(&e(i), &e(i)), &de);
                    assert_equal_elements(&mul(&e(i), &s(i)), &e(i));
                    assert_equal_elements(&mul(&s(i), &e(i)), &e(i));
                }
                for i in 1..n.saturating_sub(1) {
                    let j = i + 1;
                    assert_equal_elements(
                        &mul3(&s(i), &s(j), &s(i)),
                        &mul3(&s(j), &s(i), &s(j)),
                    );
                    assert_equal_elements(&mul3(&e(i), &s(j), &e(i)), &e(i));
                    assert_equal_elements(&mul3(&e(j), &s(i), &e(j)), &e(j));
                    assert_equal_elements(&mul3(&e(i), &e(j), &e(i)), &e(i));
                    assert_equal_elements(&mul3(&e(j), &e(i), &e(j)), &e(j));
                }
                for i in 1..n {
                    for j in 1..n {
                        if i.abs_diff(j) >= 2 {
                            assert_equal_elements(&mul(&s(i), &s(j)), &mul(&s(j), &s(i)));
                            assert_equal_elements(&mul(&e(i), &e(j)), &mul(&e(j), &e(i)));
                            assert_equal_elements(&mul(&s(i), &e(j)), &mul(&e(j), &s(i)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn associativity_exhaustive_n3() {
        let delta = q(5);
        let ds = all_diagrams(3);
        for a in &ds {
            for b in &ds {
                let ab = multiply_elements(&element_from(a.clone()), &element_from(b.clone()), &delta);
                for c in &ds {
                    let bc = multiply_elements(
                        &element_from(b.clone()),
                        &element_from(c.clone()),
                        &delta,
                    );
                    let left = multiply_elements(&ab, &element_from(c.clone()), &delta);
                    let right = multiply_elements(&element_from(a.clone()), &bc, &delta);
                    assert_eq!(left, right);
                }
            }
        }
    }
}
