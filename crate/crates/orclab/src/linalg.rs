//! Exact linear algebra over runtime-described fields.
//!
//! Everything in the crate that needs rank, reduced echelon bases, or kernels
//! funnels through this module. Fields are passed as context objects
//! ([`Fp`] for prime fields, [`Rationals`] for arbitrary-precision fractions)
//! so the same elimination code serves both the finite-ring ideal arithmetic
//! and the graded comparisons over exact rationals. No floating point anywhere.

use num::{BigRational, One, Zero};
use std::fmt::Debug;

/// Arithmetic context for a field whose elements are described at runtime.
pub trait FieldArith {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse of a nonzero element.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
}

/// The prime field of `p` elements, elements stored reduced in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        debug_assert!(is_prime(p), "Fp modulus must be prime");
        Fp { p }
    }

    pub fn reduce_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    /// a^e mod p by square-and-multiply.
    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a % self.p;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_mod(acc, base, self.p);
            }
            base = mul_mod(base, base, self.p);
            e >>= 1;
        }
        acc
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

impl FieldArith for Fp {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.p)
    }
    fn inv(&self, a: &u64) -> u64 {
        debug_assert!(*a % self.p != 0, "inverse of zero");
        // Fermat: a^(p-2) is the inverse in F_p.
        self.pow(*a, self.p - 2)
    }
}

/// The field of exact rationals with arbitrary-precision numerators and
/// denominators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rationals;

impl FieldArith for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        debug_assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
}

/// Trial-division primality check; construction-time validation only.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).map_or(false, |sq| sq <= n) {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// A matrix in reduced row echelon form: nonzero rows only, pivots strictly
/// increasing left to right, each pivot 1 and alone in its column.
///
/// Two subspaces are equal iff their `EchelonBasis` rows are identical, which
/// is what makes ideal equality a representation comparison downstream.
#[derive(Debug, Clone, PartialEq)]
pub struct EchelonBasis<E> {
    pub rows: Vec<Vec<E>>,
    pub ncols: usize,
}

impl<E: Clone + PartialEq + Debug> EchelonBasis<E> {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Bring `rows` into reduced row echelon form over `field`.
pub fn rref<F: FieldArith>(field: &F, rows: Vec<Vec<F::Elem>>, ncols: usize) -> EchelonBasis<F::Elem> {
    let mut basis = EchelonBasis {
        rows: Vec::new(),
        ncols,
    };
    for row in rows {
        insert_row(field, &mut basis, row);
    }
    basis
}

/// Reduce `row` against the basis and insert it if independent.
/// Returns true when the row increased the rank.
pub fn insert_row<F: FieldArith>(
    field: &F,
    basis: &mut EchelonBasis<F::Elem>,
    row: Vec<F::Elem>,
) -> bool {
    debug_assert_eq!(row.len(), basis.ncols);
    let mut row = reduce_row(field, basis, row);
    let Some(pcol) = pivot_col(field, &row) else {
        return false;
    };
    // Normalize the pivot to 1.
    let scale = field.inv(&row[pcol]);
    for v in row.iter_mut() {
        *v = field.mul(v, &scale);
    }
    // Clear the pivot column in existing rows.
    for existing in basis.rows.iter_mut() {
        if !field.is_zero(&existing[pcol]) {
            let factor = existing[pcol].clone();
            for (e, r) in existing.iter_mut().zip(row.iter()) {
                *e = field.sub(e, &field.mul(&factor, r));
            }
        }
    }
    let at = basis
        .rows
        .partition_point(|r| pivot_col(field, r).unwrap() < pcol);
    basis.rows.insert(at, row);
    true
}

/// Fully reduce `row` modulo the span of `basis`. Returns the residue.
pub fn reduce_row<F: FieldArith>(
    field: &F,
    basis: &EchelonBasis<F::Elem>,
    mut row: Vec<F::Elem>,
) -> Vec<F::Elem> {
    for b in &basis.rows {
        let pcol = pivot_col(field, b).expect("basis rows are nonzero");
        if !field.is_zero(&row[pcol]) {
            let factor = row[pcol].clone();
            for (r, bv) in row.iter_mut().zip(b.iter()) {
                *r = field.sub(r, &field.mul(&factor, bv));
            }
        }
    }
    row
}

/// True when `row` lies in the span of `basis`.
pub fn in_span<F: FieldArith>(field: &F, basis: &EchelonBasis<F::Elem>, row: Vec<F::Elem>) -> bool {
    let residue = reduce_row(field, basis, row);
    residue.iter().all(|v| field.is_zero(v))
}

fn pivot_col<F: FieldArith>(field: &F, row: &[F::Elem]) -> Option<usize> {
    row.iter().position(|v| !field.is_zero(v))
}

/// Basis of the null space `{ x : M x = 0 }` of the `nrows x ncols` matrix
/// given as a list of rows. The result is itself in reduced echelon form.
pub fn kernel_basis<F: FieldArith>(
    field: &F,
    matrix: &[Vec<F::Elem>],
    ncols: usize,
) -> EchelonBasis<F::Elem> {
    let reduced = rref(field, matrix.to_vec(), ncols);
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; ncols];
    for (i, row) in reduced.rows.iter().enumerate() {
        let pcol = pivot_col(field, row).unwrap();
        pivot_of_col[pcol] = Some(i);
    }
    let mut out = Vec::new();
    for free in 0..ncols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut vec = vec![field.zero(); ncols];
        vec[free] = field.one();
        for (col, pivot_row) in pivot_of_col.iter().enumerate() {
            if let Some(r) = pivot_row {
                // x_pivot = -coef(free column) in that row
                vec[col] = field.neg(&reduced.rows[*r][free]);
            }
        }
        out.push(vec);
    }
    rref(field, out, ncols)
}
