//! Specht modules of the symmetric group in Young's natural
//! (polytabloid) form, embedded in the tabloid permutation module.

use std::collections::BTreeMap;

use num::rational::BigRational;
use num::{FromPrimitive, Zero};

use crate::partition::Partition;

use super::linalg::solve_in_span;

/// A standard Young tableau: rows of 1-based entries.
pub type Tableau = Vec<Vec<u8>>;

/// A tabloid is the row map `element − 1 → row index`; a Specht vector is
/// a rational combination of tabloids.
pub type SpechtVec = BTreeMap<Vec<u8>, BigRational>;

pub fn standard_tableaux(lambda: &Partition) -> Vec<Tableau> {
    let shape: Vec<u32> = lambda.parts().to_vec();
    let k = lambda.size();
    let mut out = Vec::new();
    let mut fill = vec![0u32; shape.len()];
    let mut tab: Vec<Vec<u8>> = shape.iter().map(|_| Vec::new()).collect();
    fn rec(
        v: u8,
        k: u8,
        shape: &[u32],
        fill: &mut [u32],
        tab: &mut Vec<Vec<u8>>,
        out: &mut Vec<Tableau>,
    ) {
        if v > k {
            out.push(tab.clone());
            return;
        }
        for r in 0..shape.len() {
            if fill[r] < shape[r] && (r == 0 || fill[r - 1] > fill[r]) {
                fill[r] += 1;
                tab[r].push(v);
                rec(v + 1, k, shape, fill, tab, out);
                tab[r].pop();
                fill[r] -= 1;
            }
        }
    }
    rec(1, k as u8, &shape, &mut fill, &mut tab, &mut out);
    out
}

fn row_map(tab: &Tableau, k: usize) -> Vec<u8> {
    let mut m = vec![0u8; k];
    for (r, row) in tab.iter().enumerate() {
        for &v in row {
            m[v as usize - 1] = r as u8;
        }
    }
    m
}

/// All value permutations in the column stabilizer with their signs.
fn column_stabilizer(tab: &Tableau, k: usize) -> Vec<(Vec<u8>, i8)> {
    let ncols = tab.first().map_or(0, |r| r.len());
    let columns: Vec<Vec<u8>> = (0..ncols)
        .map(|c| tab.iter().filter_map(|row| row.get(c).copied()).collect())
        .collect();
    let mut acc: Vec<(Vec<u8>, i8)> = vec![((1..=k as u8).collect(), 1)];
    for col in &columns {
        let perms = permutations_with_sign(col);
        let mut next = Vec::with_capacity(acc.len() * perms.len());
        for (sigma, s1) in &acc {
            for (tau, s2) in &perms {
                // tau permutes the values of this column; compose
                let mut composed = sigma.clone();
                for (a, b) in tau {
                    composed[*a as usize - 1] = sigma[*b as usize - 1];
                }
                next.push((composed, s1 * s2));
            }
        }
        acc = next;
    }
    acc
}

/// All bijections of a value set onto itself, as (from, to) pair lists.
fn permutations_with_sign(values: &[u8]) -> Vec<(Vec<(u8, u8)>, i8)> {
    let m = values.len();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = Vec::new();
    let mut used = vec![false; m];
    fn rec(
        m: usize,
        values: &[u8],
        perm: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<(Vec<(u8, u8)>, i8)>,
    ) {
        if perm.len() == m {
            let mut inv = 0usize;
            for i in 0..m {
                for j in i + 1..m {
                    if perm[i] > perm[j] {
                        inv += 1;
                    }
                }
            }
            let pairs: Vec<(u8, u8)> =
                (0..m).map(|i| (values[i], values[perm[i]])).collect();
            out.push((pairs, if inv.is_multiple_of(2) { 1 } else { -1 }));
            return;
        }
        for cand in 0..m {
            if !used[cand] {
                used[cand] = true;
                perm.push(cand);
                rec(m, values, perm, used, out);
                perm.pop();
                used[cand] = false;
            }
        }
    }
    rec(m, values, &mut perm, &mut used, &mut out);
    out
}

/// The polytabloid `e_t = Σ_{σ ∈ C_t} sign(σ) {σ t}`.
pub fn polytabloid(tab: &Tableau, k: usize) -> SpechtVec {
    let base = row_map(tab, k);
    let mut out = SpechtVec::new();
    for (sigma, sign) in column_stabilizer(tab, k) {
        // element σ(x) sits in the row of x
        let mut key = vec![0u8; k];
        for x in 0..k {
            key[sigma[x] as usize - 1] = base[x];
        }
        let entry = out.entry(key).or_insert_with(BigRational::zero);
        *entry += BigRational::from_i8(sign).unwrap();
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Left action of a permutation (0-based image vector) on a Specht vector.
pub fn apply_permutation(pi: &[usize], v: &SpechtVec) -> SpechtVec {
    let mut out = SpechtVec::new();
    for (key, c) in v {
        let mut nk = vec![0u8; key.len()];
        for (x, &row) in key.iter().enumerate() {
            nk[pi[x]] = row;
        }
        let entry = out.entry(nk).or_insert_with(BigRational::zero);
        *entry += c;
    }
    out
}

/// The tabloid-orthonormal pairing.
pub fn inner_product(a: &SpechtVec, b: &SpechtVec) -> BigRational {
    let mut s = BigRational::zero();
    for (key, c) in a {
        if let Some(d) = b.get(key) {
            s += c * d;
        }
    }
    s
}

/// Express Specht vectors in a common dense coordinate system.
fn densify(vectors: &[&SpechtVec]) -> Vec<Vec<BigRational>> {
    let mut keys: Vec<&Vec<u8>> = vectors.iter().flat_map(|v| v.keys()).collect();
    keys.sort();
    keys.dedup();
    vectors
        .iter()
        .map(|v| {
            keys.iter()
                .map(|k| v.get(*k).cloned().unwrap_or_else(BigRational::zero))
                .collect()
        })
        .collect()
}

/// Coordinates of `target` in the standard polytabloid basis.
pub fn express_in_basis(basis: &[SpechtVec], target: &SpechtVec) -> Vec<BigRational> {
    let mut all: Vec<&SpechtVec> = basis.iter().collect();
    all.push(target);
    let mut dense = densify(&all);
    let target_dense = dense.pop().unwrap();
    // columns of the system are the basis vectors
    let cols: Vec<Vec<BigRational>> = dense;
    solve_in_span(&cols, &target_dense).expect("vector not in the Specht module")
}

/// Exact matrices of the adjacent transpositions `s_1..s_{k−1}` on the
/// standard polytabloid basis (columns are images of basis vectors).
pub fn specht_matrices(lambda: &Partition) -> (Vec<Tableau>, Vec<Vec<Vec<BigRational>>>) {
    let k = lambda.size();
    let tabs = standard_tableaux(lambda);
    let basis: Vec<SpechtVec> = tabs.iter().map(|t| polytabloid(t, k)).collect();
    let mut mats = Vec::new();
    for i in 1..k {
        let mut pi: Vec<usize> = (0..k).collect();
        pi.swap(i - 1, i);
        let mut mat = vec![vec![BigRational::zero(); basis.len()]; basis.len()];
        for (col, b) in basis.iter().enumerate() {
            let image = apply_permutation(&pi, b);
            for (row, c) in express_in_basis(&basis, &image).into_iter().enumerate() {
                mat[row][col] = c;
            }
        }
        mats.push(mat);
    }
    (tabs, mats)
}
