//! Cell (standard) modules of the Brauer algebra: half-diagram ⊗ Specht
//! bases, generator actions, and the cellular Gram form with exact rank.

use num::rational::BigRational;
use num::{One, Zero};

use crate::partition::Partition;

use super::diagram::BrauerDiagram;
use super::linalg::rank_rational;
use super::specht::{
    apply_permutation, express_in_basis, inner_product, polytabloid, standard_tableaux, SpechtVec,
    Tableau,
};

/// `k` arcs among `n` points, the rest free (through strands).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfDiagram {
    n: usize,
    /// Sorted arcs `(a < b)` over points `0..n`.
    arcs: Vec<(usize, usize)>,
}

impl HalfDiagram {
    pub fn new(n: usize, mut arcs: Vec<(usize, usize)>) -> Self {
        for a in &mut arcs {
            if a.0 > a.1 {
                *a = (a.1, a.0);
            }
        }
        arcs.sort_unstable();
        Self { n, arcs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn arc_partner(&self, p: usize) -> Option<usize> {
        self.arcs.iter().find_map(|&(a, b)| match p {
            x if x == a => Some(b),
            x if x == b => Some(a),
            _ => None,
        })
    }

    /// Free points in increasing order; their positions are the tensor
    /// slots of the Specht factor.
    pub fn free_points(&self) -> Vec<usize> {
        (0..self.n).filter(|&p| self.arc_partner(p).is_none()).collect()
    }
}

/// All half-diagrams with exactly `k` arcs, in a fixed sorted order.
pub fn enumerate_half_diagrams(n: usize, k: usize) -> Vec<HalfDiagram> {
    fn rec(
        n: usize,
        budget: usize,
        next: usize,
        used: &mut Vec<bool>,
        arcs: &mut Vec<(usize, usize)>,
        out: &mut Vec<HalfDiagram>,
    ) {
        if next == n {
            if budget == 0 {
                out.push(HalfDiagram::new(n, arcs.clone()));
            }
            return;
        }
        if used[next] {
            rec(n, budget, next + 1, used, arcs, out);
            return;
        }
        // leave `next` free
        rec(n, budget, next + 1, used, arcs, out);
        if budget > 0 {
            for b in next + 1..n {
                if !used[b] {
                    used[b] = true;
                    arcs.push((next, b));
                    rec(n, budget - 1, next + 1, used, arcs, out);
                    arcs.pop();
                    used[b] = false;
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(n, k, 0, &mut vec![false; n], &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Ordered basis of `Δ_n(λ)`: half-diagram major, tableau minor.
pub struct CellBasis {
    pub n: usize,
    pub lambda: Partition,
    pub half: Vec<HalfDiagram>,
    pub tableaux: Vec<Tableau>,
    pub polytabloids: Vec<SpechtVec>,
}

impl CellBasis {
    pub fn new(lambda: &Partition, n: usize) -> Self {
        let f = lambda.size();
        assert!(n >= f && (n - f).is_multiple_of(2), "λ ∉ Λ_n");
        let k = (n - f) / 2;
        let tableaux = standard_tableaux(lambda);
        let polytabloids = tableaux.iter().map(|t| polytabloid(t, f)).collect();
        Self {
            n,
            lambda: lambda.clone(),
            half: enumerate_half_diagrams(n, k),
            tableaux,
            polytabloids,
        }
    }

    pub fn dim(&self) -> usize {
        self.half.len() * self.tableaux.len()
    }

    pub fn index(&self, h: usize, t: usize) -> usize {
        h * self.tableaux.len() + t
    }
}

pub fn cell_dimension(lambda: &Partition, n: usize) -> usize {
    CellBasis::new(lambda, n).dim()
}

/// Glue a diagram on top of a half-diagram.  `None` when a through
/// strand gets capped; otherwise the new half-diagram, the through-strand
/// permutation (0-based image vector), and the loop count.
fn act_on_half(
    d: &BrauerDiagram,
    h: &HalfDiagram,
) -> Option<(HalfDiagram, Vec<usize>, u32)> {
    let n = h.n();
    // nodes 0..n are d's top, n..2n d's bottom carrying h
    let mut visited = vec![false; 2 * n];
    let mut arcs = Vec::new();
    let mut through: Vec<(usize, usize)> = Vec::new(); // (top point, h free point)
    for start in 0..n {
        if visited[start] {
            continue;
        }
        visited[start] = true;
        let mut cur = d.partner(start);
        loop {
            visited[cur] = true;
            if cur < n {
                arcs.push((start, cur));
                break;
            }
            match h.arc_partner(cur - n) {
                Some(q) => {
                    visited[n + q] = true;
                    cur = d.partner(n + q);
                }
                None => {
                    through.push((start, cur - n));
                    break;
                }
            }
        }
    }
    if arcs.len() != h.arcs().len() {
        return None;
    }
    // loops: unvisited bottom nodes form alternating cycles
    let mut loops = 0u32;
    for z in n..2 * n {
        if visited[z] {
            continue;
        }
        loops += 1;
        let mut cur = z;
        loop {
            visited[cur] = true;
            let q = n + h.arc_partner(cur - n).expect("loop node must be on an arc");
            visited[q] = true;
            cur = d.partner(q);
            if cur == z {
                break;
            }
        }
    }
    let out = HalfDiagram::new(n, arcs);
    let new_free = out.free_points();
    let old_free = h.free_points();
    let mut pi = vec![usize::MAX; old_free.len()];
    for &(top, hp) in &through {
        let i = new_free.binary_search(&top).unwrap();
        let j = old_free.binary_search(&hp).unwrap();
        pi[j] = i;
    }
    Some((out, pi, loops))
}

fn pow_delta(delta: &BigRational, loops: u32) -> BigRational {
    let mut c = BigRational::one();
    for _ in 0..loops {
        c *= delta;
    }
    c
}

/// Matrix of a diagram acting on `Δ_n(λ)` (columns are images).
pub fn action_matrix(
    basis: &CellBasis,
    d: &BrauerDiagram,
    delta: &BigRational,
) -> Vec<Vec<BigRational>> {
    let dim = basis.dim();
    let mut mat = vec![vec![BigRational::zero(); dim]; dim];
    for (hi, h) in basis.half.iter().enumerate() {
        let Some((h2, pi, loops)) = act_on_half(d, h) else {
            continue;
        };
        let h2i = basis.half.binary_search(&h2).unwrap();
        let c = pow_delta(delta, loops);
        for (ti, p) in basis.polytabloids.iter().enumerate() {
            let image = apply_permutation(&pi, p);
            let coords = express_in_basis(&basis.polytabloids, &image);
            for (tj, coeff) in coords.into_iter().enumerate() {
                if !coeff.is_zero() {
                    mat[basis.index(h2i, tj)][basis.index(hi, ti)] = &c * coeff;
                }
            }
        }
    }
    mat
}

/// Matrices of all σ_i and e_i on `Δ_n(λ)`.
#[allow(clippy::type_complexity)]
pub fn cell_action(
    lambda: &Partition,
    n: usize,
    delta: &BigRational,
) -> (CellBasis, Vec<Vec<Vec<BigRational>>>, Vec<Vec<Vec<BigRational>>>) {
    let basis = CellBasis::new(lambda, n);
    let sigmas = (1..n)
        .map(|i| action_matrix(&basis, &super::diagram::sigma_gen(n, i), delta))
        .collect();
    let es = (1..n)
        .map(|i| action_matrix(&basis, &super::diagram::e_gen(n, i), delta))
        .collect();
    (basis, sigmas, es)
}

/// Pair two half-diagrams: reflect `v` and glue onto `w`.  `None` when a
/// through strand is capped; otherwise the through permutation (indices
/// into `v`'s free points) and the loop count.
fn pair_halves(v: &HalfDiagram, w: &HalfDiagram) -> Option<(Vec<usize>, u32)> {
    let n = v.n();
    let v_free = v.free_points();
    let w_free = w.free_points();
    let mut visited = vec![false; n];
    let mut pi = vec![usize::MAX; w_free.len()];
    // paths start at points free in v or in w, alternate w-arcs / v-arcs
    for &start in v_free.iter() {
        if visited[start] {
            continue;
        }
        visited[start] = true;
        let i = v_free.binary_search(&start).unwrap();
        // walk on the w side first
        let mut cur = start;
        loop {
            match w.arc_partner(cur) {
                None => {
                    // lands on a w-free point: a through strand
                    let j = w_free.binary_search(&cur).unwrap();
                    pi[j] = i;
                    break;
                }
                Some(q) => {
                    visited[q] = true;
                    {
                        let r = v.arc_partner(q)?;
                        visited[r] = true;
                        cur = r;
                    }
                }
            }
        }
    }
    if pi.contains(&usize::MAX) {
        return None; // some w-free point pairs with another w-free point
    }
    let mut loops = 0u32;
    for z in 0..n {
        if visited[z] || v.arc_partner(z).is_none() {
            continue;
        }
        loops += 1;
        let mut cur = z;
        loop {
            visited[cur] = true;
            let q = v.arc_partner(cur).expect("cycle stays on arcs");
            visited[q] = true;
            cur = w.arc_partner(q).expect("cycle stays on arcs");
            if cur == z {
                break;
            }
        }
    }
    Some((pi, loops))
}

/// The cellular Gram matrix of `Δ_n(λ)` at numeric δ.
pub fn gram_matrix(lambda: &Partition, n: usize, delta: &BigRational) -> Vec<Vec<BigRational>> {
    let basis = CellBasis::new(lambda, n);
    let dim = basis.dim();
    let mut g = vec![vec![BigRational::zero(); dim]; dim];
    for (vi, v) in basis.half.iter().enumerate() {
        for (wi, w) in basis.half.iter().enumerate() {
            let Some((pi, loops)) = pair_halves(v, w) else {
                continue;
            };
            let c = pow_delta(delta, loops);
            for (si, s) in basis.polytabloids.iter().enumerate() {
                for (ti, t) in basis.polytabloids.iter().enumerate() {
                    let val = inner_product(s, &apply_permutation(&pi, t));
                    if !val.is_zero() {
                        g[basis.index(vi, si)][basis.index(wi, ti)] = &c * val;
                    }
                }
            }
        }
    }
    g
}

/// `dim L_n(λ)` for δ ≠ 0: the exact rank of the Gram form.
pub fn gram_rank(lambda: &Partition, n: usize, delta: &BigRational) -> usize {
    rank_rational(&gram_matrix(lambda, n, delta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::count_walks;
    use crate::partition::lambda_n;
    use num::FromPrimitive;

    fn q(x: i64) -> BigRational {
        BigRational::from_i64(x).unwrap()
    }

    fn parts(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn half_diagram_counts() {
        assert_eq!(enumerate_half_diagrams(4, 0).len(), 1);
        assert_eq!(enumerate_half_diagrams(4, 1).len(), 6);
        assert_eq!(enumerate_half_diagrams(4, 2).len(), 3);
        assert_eq!(enumerate_half_diagrams(6, 3).len(), 15);
    }

    #[test]
    fn cell_dimension_equals_walk_count() {
        for n in 1..=8usize {
            for l in lambda_n(n) {
                assert_eq!(
                    cell_dimension(&l, n) as u64,
                    count_walks(&l, n, 0, false).unwrap(),
                    "n={n} λ={l}"
                );
            }
        }
    }

    #[test]
    fn small_gram_matrices() {
        // Δ_2(∅): single arc, Gram = [δ]
        let g = gram_matrix(&Partition::empty(), 2, &q(5));
        assert_eq!(g, vec![vec![q(5)]]);
        assert_eq!(gram_rank(&Partition::empty(), 2, &q(5)), 1);
        assert_eq!(gram_rank(&Partition::empty(), 2, &q(0)), 0);
        // Δ_3((1)): Gram = δ on the diagonal, 1 off it
        let g = gram_matrix(&parts("1"), 3, &q(1));
        assert_eq!(g, vec![vec![q(1); 3]; 3]);
        assert_eq!(gram_rank(&parts("1"), 3, &q(1)), 1);
    }

    #[test]
    fn generic_delta_is_semisimple() {
        let generic = BigRational::new(1000000.into(), 7.into());
        for n in 1..=5usize {
            for l in lambda_n(n) {
                assert_eq!(gram_rank(&l, n, &generic), cell_dimension(&l, n), "n={n} λ={l}");
            }
        }
    }

    #[test]
    fn top_layer_gram_is_specht_gram() {
        // |λ| = n: no arcs, the form restricts to the Specht module and
        // is δ-independent and nondegenerate over ℚ
        for n in 1..=4usize {
            for l in lambda_n(n) {
                if l.size() != n {
                    continue;
                }
                let g5 = gram_matrix(&l, n, &q(5));
                let g2 = gram_matrix(&l, n, &q(-2));
                assert_eq!(g5, g2);
                assert_eq!(rank_rational(&g5), cell_dimension(&l, n));
            }
        }
    }

    #[test]
    fn cell_action_satisfies_relations() {
        for delta in [q(-2), q(0), q(3)] {
            for n in 2..=4usize {
                for l in lambda_n(n) {
                    let (basis, s, e) = cell_action(&l, n, &delta);
                    let dim = basis.dim();
                    let mul = |a: &Vec<Vec<BigRational>>, b: &Vec<Vec<BigRational>>| {
                        let mut out = vec![vec![BigRational::zero(); dim]; dim];
                        for i in 0..dim {
                            for k in 0..dim {
                                if a[i][k].is_zero() {
                                    continue;
                                }
                                for j in 0..dim {
                                    let t = &a[i][k] * &b[k][j];
                                    out[i][j] += t;
                                }
                            }
                        }
                        out
                    };
                    let mut eye = vec![vec![BigRational::zero(); dim]; dim];
                    for (i, row) in eye.iter_mut().enumerate() {
                        row[i] = BigRational::one();
                    }
                    for i in 0..n - 1 {
                        assert_eq!(mul(&s[i], &s[i]), eye, "σ² n={n} λ={l}");
                        let de: Vec<Vec<BigRational>> = e[i]
                            .iter()
                            .map(|r| r.iter().map(|x| x * &delta).collect())
                            .collect();
                        assert_eq!(mul(&e[i], &e[i]), de, "e² n={n} λ={l}");
                        assert_eq!(mul(&e[i], &s[i]), e[i], "eσ n={n} λ={l}");
                        assert_eq!(mul(&s[i], &e[i]), e[i], "σe n={n} λ={l}");
                    }
                    for i in 0..(n - 1).saturating_sub(1) {
                        assert_eq!(
                            mul(&mul(&s[i], &s[i + 1]), &s[i]),
                            mul(&mul(&s[i + 1], &s[i]), &s[i + 1]),
                            "braid n={n} λ={l}"
                        );
                        assert_eq!(
                            mul(&mul(&e[i], &s[i + 1]), &e[i]),
                            e[i],
                            "eσe n={n} λ={l}"
                        );
                        assert_eq!(
                            mul(&mul(&e[i], &e[i + 1]), &e[i]),
                            e[i],
                            "eee n={n} λ={l}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn gram_respects_the_action() {
        // ⟨g v, w⟩ = ⟨v, g* w⟩ with σ* = σ and e* = e (diagram reflection)
        for n in 2..=4usize {
            for l in lambda_n(n) {
                let delta = q(3);
                let g = gram_matrix(&l, n, &delta);
                let (basis, s, e) = cell_action(&l, n, &delta);
                let dim = basis.dim();
                for m in s.iter().chain(e.iter()) {
                    // check Mᵀ G = G M
                    for i in 0..dim {
                        for j in 0..dim {
                            let mut left = BigRational::zero();
                            let mut right = BigRational::zero();
                            for k in 0..dim {
                                left += &m[k][i] * &g[k][j];
                                right += &g[i][k] * &m[k][j];
                            }
                            assert_eq!(left, right, "n={n} λ={l}");
                        }
                    }
                }
            }
        }
    }
}
