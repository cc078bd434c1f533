use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use super::series::ZetaSeries;
use crate::error::{Error, Result};
use crate::monoid_ring::{exact_divide, Alphabet, Assignment, Atom, FieldElement, RingElement};

/// Row-major square matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct SquareMatrix<T> {
    size: usize,
    data: Vec<T>,
}

impl<T> SquareMatrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(Error::InvalidArgument("matrix is not square".into()));
        }
        Ok(SquareMatrix { size, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                data.push(f(i, j));
            }
        }
        SquareMatrix { size, data }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.size + j]
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> SquareMatrix<U> {
        SquareMatrix { size: self.size, data: self.data.iter().map(f).collect() }
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    fn into_rows(self) -> Vec<Vec<T>> {
        let mut rows = Vec::with_capacity(self.size);
        let mut it = self.data.into_iter();
        for _ in 0..self.size {
            rows.push(it.by_ref().take(self.size).collect());
        }
        rows
    }
}

/// The `(n+1) × (n+1)` Hankel matrix with entries `a_{m+i+j}`.
pub fn hankel_matrix(s: &ZetaSeries, m: usize, n: usize) -> Result<SquareMatrix<RingElement>> {
    let needed = m + 2 * n;
    if needed > s.order() {
        return Err(Error::TruncationExceeded { needed, available: s.order() });
    }
    Ok(SquareMatrix::from_fn(n + 1, |i, j| s.coeffs()[m + i + j].clone()))
}

/// Fraction-free (Bareiss) elimination; every division is exact in `Z[G]`.
pub fn det_exact(m: &SquareMatrix<RingElement>) -> Result<RingElement> {
    let size = m.size();
    let alphabet = m
        .iter()
        .next()
        .map(|e| e.alphabet().clone())
        .unwrap_or_else(|| Arc::new(Alphabet::MonoidC));
    if size == 0 {
        return Ok(RingElement::one(alphabet));
    }
    let mut a = m.clone().into_rows();
    let mut negate = false;
    let mut prev = RingElement::one(alphabet.clone());
    for k in 0..size - 1 {
        if a[k][k].is_zero() {
            match (k + 1..size).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(RingElement::zero(alphabet)),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let cross = a[i][j].try_mul(&a[k][k])?.try_sub(&a[i][k].try_mul(&a[k][j])?)?;
                a[i][j] = exact_divide(&cross, &prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[size - 1][size - 1].clone();
    Ok(if negate { -&det } else { det })
}

/// Exact determinant of a matrix over the fraction field: clear each row's
/// denominators, run [`det_exact`], divide back.
pub fn det_exact_field(m: &SquareMatrix<FieldElement>) -> Result<FieldElement> {
    let size = m.size();
    let Some(first) = m.iter().next() else {
        return Ok(FieldElement::one(Arc::new(Alphabet::MonoidC)));
    };
    let alphabet = first.alphabet().clone();
    let mut scale = RingElement::one(alphabet.clone());
    let mut rows = Vec::with_capacity(size);
    for i in 0..size {
        let mut row = Vec::with_capacity(size);
        for j in 0..size {
            let mut entry = m.get(i, j).numerator().clone();
            for l in (0..size).filter(|&l| l != j) {
                entry = entry.try_mul(m.get(i, l).denominator())?;
            }
            row.push(entry);
        }
        for j in 0..size {
            scale = scale.try_mul(m.get(i, j).denominator())?;
        }
        rows.push(row);
    }
    let det = det_exact(&SquareMatrix::from_rows(rows)?)?;
    FieldElement::new(det, scale)
}

/// Determinant over `Q` by Gaussian elimination.
pub fn det_rational(rows: Vec<Vec<BigRational>>) -> BigRational {
    let size = rows.len();
    let mut a = rows;
    let mut det = BigRational::one();
    for k in 0..size {
        let Some(p) = (k..size).find(|&i| !a[i][k].is_zero()) else {
            return BigRational::zero();
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let pivot = a[k][k].clone();
        det *= &pivot;
        for i in k + 1..size {
            if a[i][k].is_zero() {
                continue;
            }
            let factor = &a[i][k] / &pivot;
            for j in k..size {
                let delta = &factor * &a[k][j];
                a[i][j] -= delta;
            }
        }
    }
    det
}

/// Matrix entries that can be evaluated at a rational point.
pub trait Evaluable {
    fn atoms_into(&self, out: &mut BTreeSet<Atom>);
    fn evaluate_at(&self, assignment: &Assignment) -> Result<BigRational>;
}

impl Evaluable for RingElement {
    fn atoms_into(&self, out: &mut BTreeSet<Atom>) {
        out.extend(self.atoms());
    }

    fn evaluate_at(&self, assignment: &Assignment) -> Result<BigRational> {
        self.evaluate(assignment)
    }
}

impl Evaluable for FieldElement {
    fn atoms_into(&self, out: &mut BTreeSet<Atom>) {
        out.extend(self.numerator().atoms());
        out.extend(self.denominator().atoms());
    }

    fn evaluate_at(&self, assignment: &Assignment) -> Result<BigRational> {
        self.evaluate(assignment)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProbabilisticVerdict {
    /// Some evaluation was nonzero, so the determinant is nonzero.
    NonzeroCertified { trials_used: usize },
    /// Every evaluation vanished; the determinant may still be nonzero.
    PossiblyZero,
}

/// Numerators and denominators of sample points are bounded by this.
pub const SAMPLE_BOUND: i64 = 1_000_000;

/// Schwartz–Zippel test: evaluate the determinant at `trials` random
/// rational points. One-sided: only a nonzero answer is a certificate.
pub fn det_probabilistic<T: Evaluable, R: Rng + ?Sized>(
    m: &SquareMatrix<T>,
    trials: usize,
    rng: &mut R,
) -> Result<ProbabilisticVerdict> {
    let mut atoms = BTreeSet::new();
    for e in m.iter() {
        e.atoms_into(&mut atoms);
    }
    let mut lucky = 0;
    for trial in 0..trials {
        let assignment: Assignment = atoms
            .iter()
            .map(|a| {
                let num = rng.gen_range(-SAMPLE_BOUND..=SAMPLE_BOUND);
                let den = rng.gen_range(1..=SAMPLE_BOUND);
                (a.clone(), BigRational::new(BigInt::from(num), BigInt::from(den)))
            })
            .collect();
        let mut rows = Vec::with_capacity(m.size());
        let mut unlucky = false;
        for i in 0..m.size() {
            let mut row = Vec::with_capacity(m.size());
            for j in 0..m.size() {
                match m.get(i, j).evaluate_at(&assignment) {
                    Ok(v) => row.push(v),
                    Err(Error::UnluckyEvaluation) => {
                        unlucky = true;
                        break;
                    }
                    Err(e) => return Err(e),
                }
            }
            if unlucky {
                break;
            }
            rows.push(row);
        }
        if unlucky {
            continue;
        }
        lucky += 1;
        if !det_rational(rows).is_zero() {
            return Ok(ProbabilisticVerdict::NonzeroCertified { trials_used: trial + 1 });
        }
    }
    if trials > 0 && lucky == 0 {
        return Err(Error::UnluckyEvaluation);
    }
    Ok(ProbabilisticVerdict::PossiblyZero)
}
