//! Walk-basis matrices for the generic Brauer algebra: Brauer diamonds
//! (combinatorial and geometric), the generator matrices over exact
//! rational functions in `u`, specialisation at `u = δ` by gcd reduction,
//! and truncation to δ-restricted walks giving matrices for `L_n(λ)`.

use std::collections::HashMap;

use num::complex::Complex64;
use num::{BigInt, BigRational, FromPrimitive, One, Signed, Zero};
use thiserror::Error;

use crate::geometry::{enumerate_walks, in_a_delta, EmbeddedPoint, GeometryError, Walk};
use crate::partition::Partition;
use crate::ratfun::{rational_to_f64, Poly, RatFunError, RationalFunction};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LeducRamError {
    #[error("not a diamond configuration")]
    NotDiamond,
    #[error("vanishing diamond in a denominator")]
    DegenerateDiamond,
    #[error("pole at the evaluation point")]
    Pole,
    #[error("negative value under a radical at the evaluation point")]
    NegativeRadicand,
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

impl From<RatFunError> for LeducRamError {
    fn from(e: RatFunError) -> Self {
        match e {
            RatFunError::Pole => Self::Pole,
            RatFunError::DivisionByZero => Self::DegenerateDiamond,
        }
    }
}

/// The single box by which `to` differs from `from`: `(sign, row)` with
/// 1-based row; `None` if the pair is not one box apart.
fn step_row(from: &Partition, to: &Partition) -> Option<(i64, usize)> {
    let rows = from.len().max(to.len());
    let mut diff = None;
    for r in 1..=rows {
        let a = from.part(r) as i64;
        let b = to.part(r) as i64;
        if a != b {
            if diff.is_some() || (b - a).abs() != 1 {
                return None;
            }
            diff = Some((if b > a { 1 } else { -1 }, r));
        }
    }
    diff
}

/// The same step in transpose (column) coordinates: the embedded point
/// moves by `sign·ε_col`.
fn step_column(from: &Partition, to: &Partition) -> Option<(i64, usize)> {
    let (sign, row) = step_row(from, to)?;
    let col = if sign > 0 { to.part(row) } else { from.part(row) };
    Some((sign, col as usize))
}

/// The combinatorial Brauer diamond `◇_m(S, T)` as a polynomial in `u`,
/// given the three relevant steps `s(m−1), s(m), s(m+1)` of `S` and the
/// middle step `t(m)` of `T`.  Constant when the step into `t(m)` and the
/// step out of `s(m)` point the same way, linear in `u` otherwise.
pub fn diamond(
    prev: &Partition,
    s_mid: &Partition,
    t_mid: &Partition,
    next: &Partition,
) -> Result<Poly, LeducRamError> {
    let (sign1, l) = step_row(prev, t_mid).ok_or(LeducRamError::NotDiamond)?;
    let (sign2, k) = step_row(s_mid, next).ok_or(LeducRamError::NotDiamond)?;
    let tml = t_mid.part(l) as i64 - l as i64;
    let snk = next.part(k) as i64 - k as i64;
    Ok(if sign1 == sign2 {
        Poly::from_int(sign1 * (snk - tml))
    } else {
        let p = Poly::linear(1, tml + snk);
        if sign2 < 0 {
            -&p
        } else {
            p
        }
    })
}

/// The geometric value of the same diamond at `u = δ`, from the embedded
/// walk: inner products of the base point with the step directions.
pub fn geometric_diamond(
    prev: &Partition,
    s_mid: &Partition,
    t_mid: &Partition,
    next: &Partition,
    delta: i64,
) -> Result<i64, LeducRamError> {
    let (sa, ca) = step_column(prev, s_mid).ok_or(LeducRamError::NotDiamond)?;
    let x = EmbeddedPoint::embed(prev, delta);
    if prev == next {
        // x → x+α → x against x → x+β → x: ⟨x, α+β⟩ + 1
        let (sb, cb) = step_column(prev, t_mid).ok_or(LeducRamError::NotDiamond)?;
        let doubled = sa * x.doubled_entry(ca) + sb * x.doubled_entry(cb);
        assert_eq!(doubled % 2, 0);
        return Ok(doubled / 2 + 1);
    }
    step_column(t_mid, next).ok_or(LeducRamError::NotDiamond)?;
    if s_mid != t_mid {
        return Ok(0);
    }
    let (sb, cb) = step_column(s_mid, next).ok_or(LeducRamError::NotDiamond)?;
    Ok(if sa == sb {
        if ca == cb {
            -1
        } else {
            sa * (x.doubled_entry(ca) - x.doubled_entry(cb)) / 2
        }
    } else {
        sa * (x.doubled_entry(ca) + x.doubled_entry(cb)) / 2
    })
}

/// `P_s P_t` in factored form, for the radicand of a closed entry.
fn king_product_radicand(s: &Partition, t: &Partition) -> FactoredRadicand {
    let (ks, kt) = (s.king_polynomial(), t.king_polynomial());
    let scale = BigRational::new(BigInt::one(), ks.denominator() * kt.denominator());
    let factors = ks
        .roots()
        .iter()
        .chain(kt.roots())
        .map(|&r| (BigRational::from_i64(r).unwrap(), 1))
        .collect();
    FactoredRadicand { scale, factors }
}

/// `(◇² − 1)/◇²` in factored form, for the radicand of an open entry.
fn open_radicand(dia: &Poly) -> FactoredRadicand {
    if dia.degree() == 0 {
        let c = dia.leading();
        return FactoredRadicand::constant((&(&c * &c) - &BigRational::one()) / &(&c * &c));
    }
    let a = dia.leading();
    let b = dia.coeffs()[0].clone();
    FactoredRadicand {
        scale: BigRational::one(),
        factors: vec![
            (&(&BigRational::one() - &b) / &a, 1),
            (&(-&BigRational::one() - &b) / &a, 1),
            (-&b / &a, -2),
        ],
    }
}

/// The King polynomial as an exact dense polynomial.
fn king_poly(p: &Partition) -> Poly {
    let kp = p.king_polynomial();
    let mut out = Poly::constant(BigRational::new(BigInt::one(), kp.denominator().clone()));
    for &r in kp.roots() {
        out = &out * &Poly::linear(1, -r);
    }
    out
}

/// A radicand kept in factored form `scale · Π (u − root)^exp` with
/// rational roots (King polynomials split over `Z`, diamonds are linear).
/// The factorisation pins down the branch of the square root at any real
/// point: continuing `√R` from the all-positive regime `u → +∞` along the
/// real axis, each root passed (counted with its exponent) contributes a
/// factor `i`, so the value at `u0` is `i^k √|R(u0)|` with
/// `k = Σ_{root > u0} exp`.  Conjugate complex roots would contribute
/// nothing, but none occur here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredRadicand {
    pub scale: BigRational,
    pub factors: Vec<(BigRational, i32)>,
}

impl FactoredRadicand {
    fn constant(scale: BigRational) -> Self {
        Self { scale, factors: Vec::new() }
    }

    /// As a reduced rational function of `u`.
    pub fn to_rational_function(&self) -> RationalFunction {
        let mut num = Poly::constant(self.scale.clone());
        let mut den = Poly::one();
        for (root, exp) in &self.factors {
            let lin = &Poly::u() - &Poly::constant(root.clone());
            let target = if *exp > 0 { &mut num } else { &mut den };
            for _ in 0..exp.unsigned_abs() {
                *target = &*target * &lin;
            }
        }
        RationalFunction::new(num, den).expect("nonzero denominator by construction")
    }

    /// Exact value at `u0`; `None` at a pole.
    pub fn value(&self, u0: &BigRational) -> Option<BigRational> {
        let mut v = self.scale.clone();
        for (root, exp) in &self.factors {
            let lin = u0 - root;
            if lin.is_zero() {
                if *exp < 0 {
                    return None;
                }
                return Some(BigRational::zero());
            }
            for _ in 0..*exp {
                v *= &lin;
            }
            for _ in *exp..0 {
                v /= &lin;
            }
        }
        Some(v)
    }

    /// The branch of `√R` at `u0` fixed by continuation from `u → +∞`.
    pub fn branch_sqrt(&self, u0: &BigRational) -> Result<Complex64, LeducRamError> {
        let v = self.value(u0).ok_or(LeducRamError::Pole)?;
        let mag = rational_to_f64(&v).abs().sqrt();
        if self.scale.is_negative() {
            // never produced by the constructions below
            return Err(LeducRamError::NegativeRadicand);
        }
        let k: i32 = self
            .factors
            .iter()
            .filter(|(root, _)| root > u0)
            .map(|(_, exp)| exp)
            .sum();
        Ok(match k.rem_euclid(4) {
            0 => Complex64::new(mag, 0.0),
            1 => Complex64::new(0.0, mag),
            2 => Complex64::new(-mag, 0.0),
            _ => Complex64::new(0.0, -mag),
        })
    }
}

/// One matrix entry: an exact rational function of `u`, or
/// `coeff · √(radicand)` with the radicand in factored form so the branch
/// of the root is well defined at every evaluation point (the entries of
/// the orthogonal form leave `R` as soon as King values go negative, and
/// the relative branches matter).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Entry {
    Rational(RationalFunction),
    Radical {
        coeff: RationalFunction,
        radicand: FactoredRadicand,
    },
}

impl Entry {
    pub fn zero() -> Self {
        Self::Rational(RationalFunction::zero())
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Self::Rational(r) => r.is_zero(),
            Self::Radical { coeff, radicand } => coeff.is_zero() || radicand.scale.is_zero(),
        }
    }

    /// The entry squared, which is always rational again.
    pub fn square(&self) -> RationalFunction {
        match self {
            Self::Rational(r) => r * r,
            Self::Radical { coeff, radicand } => {
                &(coeff * coeff) * &radicand.to_rational_function()
            }
        }
    }

    /// Value at `u0` in `R ∪ iR`, on the branch continued from `u → +∞`.
    pub fn evaluate_complex(&self, u0: &BigRational) -> Result<Complex64, LeducRamError> {
        match self {
            Self::Rational(r) => Ok(Complex64::new(r.evaluate_f64(u0)?, 0.0)),
            Self::Radical { coeff, radicand } => {
                let c = coeff.evaluate(u0)?;
                if c.is_zero() {
                    return Ok(Complex64::new(0.0, 0.0));
                }
                Ok(radicand.branch_sqrt(u0)?.scale(rational_to_f64(&c)))
            }
        }
    }

    /// Real numeric value at `u0`; errors if the branch-consistent value
    /// is not real there.
    pub fn evaluate(&self, u0: &BigRational) -> Result<f64, LeducRamError> {
        let v = self.evaluate_complex(u0)?;
        if v.im != 0.0 {
            return Err(LeducRamError::NegativeRadicand);
        }
        Ok(v.re)
    }
}

/// The generator matrices of `B_n(u)` on a walk basis, over exact
/// entries.  `sigma[m−1]` and `e[m−1]` act on position `m`, with
/// `mat[row][col]` the coefficient of basis walk `row` in the image of
/// basis walk `col`.
#[derive(Debug, Clone)]
pub struct GeneratorMatrices {
    pub basis: Vec<Walk>,
    pub sigma: Vec<Vec<Vec<Entry>>>,
    pub e: Vec<Vec<Vec<Entry>>>,
}

/// Double-precision matrices after evaluation or truncation.
#[derive(Debug, Clone)]
pub struct NumericMatrices {
    pub basis: Vec<Walk>,
    pub sigma: Vec<Vec<Vec<f64>>>,
    pub e: Vec<Vec<Vec<f64>>>,
}

/// The generic Leduc–Ram action of `B_n(u)` on `Ω^n(λ)`.
pub fn generic_matrices(lambda: &Partition, n: usize) -> Result<GeneratorMatrices, LeducRamError> {
    let basis = enumerate_walks(lambda, n, 0, false)?;
    let dim = basis.len();
    let index: HashMap<&Walk, usize> = basis.iter().zip(0..).collect();
    let mut sigma = Vec::new();
    let mut e = Vec::new();
    for m in 1..n {
        let mut sm = vec![vec![Entry::zero(); dim]; dim];
        let mut em = vec![vec![Entry::zero(); dim]; dim];
        for (ti, t) in basis.iter().enumerate() {
            let prev = t.step(m - 1);
            let next = t.step(m + 1);
            let p_prev = king_poly(prev);
            let closed = prev == next;
            let (add, rem) = prev.box_neighbors();
            for mid in add.into_iter().chain(rem) {
                let Some(s) = t.with_step(m, mid) else {
                    continue;
                };
                let si = *index.get(&s).expect("diamond walk stays in the basis");
                let s_mid = s.step(m);
                if si == ti {
                    let dia = RationalFunction::from_poly(diamond(prev, s_mid, s_mid, next)?);
                    if dia.is_zero() {
                        return Err(LeducRamError::DegenerateDiamond);
                    }
                    if closed {
                        let ratio = RationalFunction::new(king_poly(s_mid), p_prev.clone())?;
                        sm[si][ti] =
                            Entry::Rational(&(&RationalFunction::one() - &ratio) / &dia);
                        em[si][ti] = Entry::Rational(ratio);
                    } else {
                        sm[si][ti] = Entry::Rational(dia.recip()?);
                    }
                } else if closed {
                    let dia_st =
                        RationalFunction::from_poly(diamond(prev, s_mid, t.step(m), next)?);
                    if dia_st.is_zero() {
                        return Err(LeducRamError::DegenerateDiamond);
                    }
                    let inv = &dia_st.recip()?
                        / &RationalFunction::from_poly(p_prev.clone());
                    let pst = king_product_radicand(s_mid, t.step(m));
                    sm[si][ti] = Entry::Radical {
                        coeff: -&inv,
                        radicand: pst.clone(),
                    };
                    em[si][ti] = Entry::Radical {
                        coeff: RationalFunction::from_poly(p_prev.clone()).recip()?,
                        radicand: pst,
                    };
                } else {
                    // the diagonal diamond of the row walk drives the
                    // off-diagonal σ entry
                    let dia = diamond(prev, s_mid, s_mid, next)?;
                    if dia.is_zero() {
                        return Err(LeducRamError::DegenerateDiamond);
                    }
                    sm[si][ti] = Entry::Radical {
                        coeff: RationalFunction::one(),
                        radicand: open_radicand(&dia),
                    };
                }
            }
        }
        sigma.push(sm);
        e.push(em);
    }
    Ok(GeneratorMatrices { basis, sigma, e })
}

/// Numeric matrices at `u = u0`.
pub fn evaluate_at(
    mats: &GeneratorMatrices,
    u0: &BigRational,
) -> Result<NumericMatrices, LeducRamError> {
    let eval = |ms: &[Vec<Vec<Entry>>]| -> Result<Vec<Vec<Vec<f64>>>, LeducRamError> {
        ms.iter()
            .map(|m| {
                m.iter()
                    .map(|row| row.iter().map(|x| x.evaluate(u0)).collect())
                    .collect()
            })
            .collect()
    };
    Ok(NumericMatrices {
        basis: mats.basis.clone(),
        sigma: eval(&mats.sigma)?,
        e: eval(&mats.e)?,
    })
}

fn restricted_mask(basis: &[Walk], delta: i64) -> Vec<bool> {
    basis
        .iter()
        .map(|w| w.steps().iter().all(|p| in_a_delta(p, delta)))
        .collect()
}

/// Largest modulus of an entry coupling a δ-restricted walk to a
/// non-restricted one, at `u = δ`, computed through the exact squared
/// entry (so radical signs never matter).  Infinite if such an entry has
/// a pole.
pub fn decoupling_max(mats: &GeneratorMatrices, delta: i64) -> f64 {
    let keep = restricted_mask(&mats.basis, delta);
    let u0 = BigRational::from_i64(delta).unwrap();
    let mut worst: f64 = 0.0;
    for ms in [&mats.sigma, &mats.e] {
        for m in ms.iter() {
            for (si, row) in m.iter().enumerate() {
                for (ti, entry) in row.iter().enumerate() {
                    if keep[si] == keep[ti] {
                        continue;
                    }
                    let v = match entry.square().evaluate(&u0) {
                        Ok(v) => rational_to_f64(&v).abs().sqrt(),
                        Err(_) => f64::INFINITY,
                    };
                    worst = worst.max(v);
                }
            }
        }
    }
    worst
}

/// Matrices for the simple module `L_n(λ)`, `λ ∈ A_δ`: the generic
/// matrices specialised at `u = δ` (rational entries reduced before
/// evaluation, which realises the limit) and truncated to the
/// δ-restricted walk basis.
///
/// When some King values are negative at `δ` the invariant form is
/// indefinite and the orthogonal-basis entries land in `R ∪ iR`; the real
/// form of the module is recovered by a diagonal phase conjugation
/// (entries `±1, ±i`), determined along a spanning tree of the diamond
/// graph.  For non-negative radicands the phases are all `1` and the
/// matrices coincide with the plain truncated specialisation.
pub fn simple_matrices(
    lambda: &Partition,
    n: usize,
    delta: i64,
) -> Result<NumericMatrices, LeducRamError> {
    if !in_a_delta(lambda, delta) {
        return Err(GeometryError::NotRestricted(lambda.to_string(), delta).into());
    }
    let full = generic_matrices(lambda, n)?;
    let keep = restricted_mask(&full.basis, delta);
    let idx: Vec<usize> = (0..full.basis.len()).filter(|&i| keep[i]).collect();
    let u0 = BigRational::from_i64(delta).unwrap();
    let dim = idx.len();
    let truncate =
        |ms: &[Vec<Vec<Entry>>]| -> Result<Vec<Vec<Vec<Complex64>>>, LeducRamError> {
            ms.iter()
                .map(|m| {
                    idx.iter()
                        .map(|&si| {
                            idx.iter().map(|&ti| m[si][ti].evaluate_complex(&u0)).collect()
                        })
                        .collect()
                })
                .collect()
        };
    let mut sigma = truncate(&full.sigma)?;
    let mut e = truncate(&full.e)?;
    let phases = dephasing(&[&sigma, &e], dim);
    for ms in [&mut sigma, &mut e] {
        for m in ms.iter_mut() {
            for (si, row) in m.iter_mut().enumerate() {
                for (ti, v) in row.iter_mut().enumerate() {
                    *v *= phases[ti] / phases[si];
                }
            }
        }
    }
    let realify = |ms: Vec<Vec<Vec<Complex64>>>| -> Result<Vec<Vec<Vec<f64>>>, LeducRamError> {
        ms.into_iter()
            .map(|m| {
                m.into_iter()
                    .map(|row| {
                        row.into_iter()
                            .map(|v| {
                                if v.im.abs() > 1e-6 {
                                    Err(LeducRamError::NegativeRadicand)
                                } else {
                                    Ok(v.re)
                                }
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect()
    };
    Ok(NumericMatrices {
        basis: idx.iter().map(|&i| full.basis[i].clone()).collect(),
        sigma: realify(sigma)?,
        e: realify(e)?,
    })
}

/// A unit phase per basis vector making every matrix entry real after
/// conjugation, propagated over a spanning forest of the graph whose
/// edges are the non-negligible off-diagonal entries.
fn dephasing(mats: &[&Vec<Vec<Vec<Complex64>>>], dim: usize) -> Vec<Complex64> {
    let mut phases = vec![Complex64::new(1.0, 0.0); dim];
    let mut fixed = vec![false; dim];
    for root in 0..dim {
        if fixed[root] {
            continue;
        }
        fixed[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(s) = queue.pop_front() {
            for ms in mats {
                for m in ms.iter() {
                    for t in 0..dim {
                        if fixed[t] || m[s][t].norm() <= 1e-8 {
                            continue;
                        }
                        // want phases[t]/phases[s] · m[s][t] real positive
                        let dir = m[s][t] / m[s][t].norm();
                        phases[t] = phases[s] * dir.conj();
                        fixed[t] = true;
                        queue.push_back(t);
                    }
                }
            }
        }
    }
    phases
}

pub type Matrix = Vec<Vec<f64>>;

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = vec![vec![0.0; n]; n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i][k];
            if aik == 0.0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

fn mat_identity(n: usize) -> Matrix {
    let mut m = vec![vec![0.0; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    m
}

fn max_diff(a: &Matrix, b: &Matrix) -> f64 {
    let mut worst: f64 = 0.0;
    for (ra, rb) in a.iter().zip(b) {
        for (x, y) in ra.iter().zip(rb) {
            worst = worst.max((x - y).abs());
        }
    }
    worst
}

fn scaled(a: &Matrix, c: f64) -> Matrix {
    a.iter().map(|r| r.iter().map(|x| x * c).collect()).collect()
}

/// Max-norm residual of every defining relation of `B_n(δ)`.
#[derive(Debug, Clone)]
pub struct RelationReport {
    pub residuals: Vec<(String, f64)>,
}

impl RelationReport {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().fold(0.0, |acc, (_, r)| acc.max(*r))
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.max_residual() <= tol
    }
}

/// Check the defining relations on numeric generator matrices at
/// parameter value `delta` (the loop value; for generic matrices pass the
/// evaluation point `u0` instead).
pub fn check_relations(mats: &NumericMatrices, delta: f64) -> RelationReport {
    let sigma = &mats.sigma;
    let e = &mats.e;
    let g = sigma.len();
    let dim = mats.basis.len();
    let id = mat_identity(dim);
    let mut res = Vec::new();
    let mut push = |name: String, r: f64| res.push((name, r));
    for i in 0..g {
        push(format!("sigma_{}^2 = 1", i + 1), max_diff(&mat_mul(&sigma[i], &sigma[i]), &id));
        push(
            format!("e_{0}^2 = delta e_{0}", i + 1),
            max_diff(&mat_mul(&e[i], &e[i]), &scaled(&e[i], delta)),
        );
        push(
            format!("e_{0} sigma_{0} = e_{0}", i + 1),
            max_diff(&mat_mul(&e[i], &sigma[i]), &e[i]),
        );
        push(
            format!("sigma_{0} e_{0} = e_{0}", i + 1),
            max_diff(&mat_mul(&sigma[i], &e[i]), &e[i]),
        );
    }
    for i in 0..g.saturating_sub(1) {
        let j = i + 1;
        push(
            format!("braid sigma_{} sigma_{}", i + 1, j + 1),
            max_diff(
                &mat_mul(&mat_mul(&sigma[i], &sigma[j]), &sigma[i]),
                &mat_mul(&mat_mul(&sigma[j], &sigma[i]), &sigma[j]),
            ),
        );
        for (a, b) in [(i, j), (j, i)] {
            push(
                format!("e_{} sigma_{} e_{0}", a + 1, b + 1),
                max_diff(&mat_mul(&mat_mul(&e[a], &sigma[b]), &e[a]), &e[a]),
            );
            push(
                format!("e_{} e_{} e_{0}", a + 1, b + 1),
                max_diff(&mat_mul(&mat_mul(&e[a], &e[b]), &e[a]), &e[a]),
            );
        }
    }
    for i in 0..g {
        for j in i + 2..g {
            push(
                format!("sigma_{} sigma_{} commute", i + 1, j + 1),
                max_diff(&mat_mul(&sigma[i], &sigma[j]), &mat_mul(&sigma[j], &sigma[i])),
            );
            push(
                format!("e_{} e_{} commute", i + 1, j + 1),
                max_diff(&mat_mul(&e[i], &e[j]), &mat_mul(&e[j], &e[i])),
            );
            push(
                format!("sigma_{} e_{} commute", i + 1, j + 1),
                max_diff(&mat_mul(&sigma[i], &e[j]), &mat_mul(&e[j], &sigma[i])),
            );
        }
    }
    RelationReport { residuals: res }
}
