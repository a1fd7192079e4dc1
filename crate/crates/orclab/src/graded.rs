//! Homogeneous ideals in `K[u_1..u_r]` compared exactly, degree by degree.
//!
//! The ambient polynomial ring is graded, so the degree-`d` component of a
//! homogeneous ideal is the span of `m·g` over generators `g` and monomials
//! `m` of complementary degree — an echelon computation, no Gröbner engine.
//! Comparisons are bounded-degree only: a dimension gap in one piece is a
//! sound certificate of ideal inequality, while agreement up to degree `D`
//! is reported as "equal up to degree D". When `D` reaches the top
//! generator degree of both sides, piecewise agreement certifies genuine
//! equality, since each generator then lies in the other ideal.
//!
//! Coefficients are exact: prime fields or arbitrary-precision rationals.

use crate::error::{Error, Result};
use crate::linalg::{self, EchelonBasis, FieldArith, Fp, Rationals};
use num::{BigRational, One};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt;

/// Coefficient field descriptor for the graded backend: `F_p` or `Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldSpec {
    Fp(u64),
    Rationals,
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Fp(p) => write!(f, "F{p}"),
            FieldSpec::Rationals => write!(f, "Q"),
        }
    }
}

/// All monomials of total degree `deg` in `nvars` variables, descending
/// lexicographic (so `u^2, u*v, v^2` for two variables).
pub fn monomials_of_degree(nvars: usize, deg: u32) -> Vec<Vec<u32>> {
    fn rec(out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>, i: usize, left: u32) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(out, cur, i + 1, left - e);
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if deg == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut cur = vec![0u32; nvars];
    rec(&mut out, &mut cur, 0, deg);
    out
}

/// A multivariate polynomial over an exact field, sparse representation.
#[derive(Debug, Clone, PartialEq)]
pub struct KPoly<F: FieldArith> {
    field: F,
    nvars: usize,
    terms: BTreeMap<Vec<u32>, F::Elem>,
}

impl<F: FieldArith + Clone> KPoly<F> {
    pub fn zero(field: F, nvars: usize) -> Self {
        KPoly {
            field,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(field: F, nvars: usize, expo: Vec<u32>, coeff: F::Elem) -> Self {
        let mut p = KPoly::zero(field, nvars);
        p.add_term(expo, coeff);
        p
    }

    /// The variable `u_i` as a polynomial.
    pub fn var(field: F, nvars: usize, i: usize) -> Self {
        let one = field.one();
        let mut expo = vec![0u32; nvars];
        expo[i] = 1;
        KPoly::monomial(field, nvars, expo, one)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &F::Elem)> {
        self.terms.iter()
    }

    fn add_term(&mut self, expo: Vec<u32>, coeff: F::Elem) {
        debug_assert_eq!(expo.len(), self.nvars);
        if self.field.is_zero(&coeff) {
            return;
        }
        match self.terms.remove(&expo) {
            None => {
                self.terms.insert(expo, coeff);
            }
            Some(old) => {
                let sum = self.field.add(&old, &coeff);
                if !self.field.is_zero(&sum) {
                    self.terms.insert(expo, sum);
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = KPoly::zero(self.field.clone(), self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let expo: Vec<u32> = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                out.add_term(expo, self.field.mul(ca, cb));
            }
        }
        out
    }

    /// Total degree of each term when they all agree, i.e. the homogeneous
    /// degree; `None` for zero or inhomogeneous polynomials.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self
            .terms
            .keys()
            .map(|e| e.iter().sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Render with the given variable names, highest lexicographic monomial
    /// first.
    pub fn format(&self, vars: &[String], fmt_coeff: &dyn Fn(&F::Elem) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mono = crate::ring::format_monomial(e, vars);
            let cs = fmt_coeff(c);
            let part = match (cs.as_str(), mono.as_str()) {
                ("1", "1") => "1".to_string(),
                ("1", m) => m.to_string(),
                (c, "1") => c.to_string(),
                (c, m) => format!("{c}*{m}"),
            };
            parts.push(part);
        }
        parts.join("+")
    }
}

/// A homogeneous ideal given by nonzero homogeneous generators.
#[derive(Debug, Clone)]
pub struct HomogeneousIdeal<F: FieldArith> {
    field: F,
    vars: Vec<String>,
    gens: Vec<KPoly<F>>,
}

/// The degree-`d` slice of a homogeneous ideal: an echelon basis in the
/// coordinates of the degree-`d` monomials (descending lex).
#[derive(Debug, Clone)]
pub struct GradedPiece<F: FieldArith> {
    pub degree: u32,
    pub monomials: Vec<Vec<u32>>,
    pub basis: EchelonBasis<F::Elem>,
}

impl<F: FieldArith> GradedPiece<F> {
    pub fn dimension(&self) -> usize {
        self.basis.rank()
    }
}

impl<F: FieldArith + Clone + PartialEq> HomogeneousIdeal<F> {
    /// Validates that every generator is nonzero and homogeneous.
    pub fn new(field: F, vars: Vec<String>, gens: Vec<KPoly<F>>) -> Result<Self> {
        for g in &gens {
            if g.is_zero() || g.homogeneous_degree().is_none() {
                return Err(Error::NotHomogeneous(
                    g.format(&vars, &|_| "?".to_string()),
                ));
            }
            if g.nvars() != vars.len() {
                return Err(Error::FieldMismatch);
            }
        }
        Ok(HomogeneousIdeal { field, vars, gens })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn generators(&self) -> &[KPoly<F>] {
        &self.gens
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    /// Largest generator degree; comparisons up to this degree are
    /// conclusive for containment of this ideal.
    pub fn max_generator_degree(&self) -> u32 {
        self.gens
            .iter()
            .filter_map(|g| g.homogeneous_degree())
            .max()
            .unwrap_or(0)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.field != other.field || self.vars != other.vars {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    /// Exact basis of the degree-`d` component.
    pub fn piece(&self, d: u32) -> GradedPiece<F> {
        let monomials = monomials_of_degree(self.vars.len(), d);
        let index: HashMap<&Vec<u32>, usize> =
            monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows = Vec::new();
        for g in &self.gens {
            let e = g.homogeneous_degree().expect("generators are homogeneous");
            if e > d {
                continue;
            }
            for m in monomials_of_degree(self.vars.len(), d - e) {
                let shifted = KPoly::monomial(self.field.clone(), self.vars.len(), m, self.field.one())
                    .mul(g);
                let mut row = vec![self.field.zero(); monomials.len()];
                for (expo, c) in shifted.terms() {
                    row[index[expo]] = c.clone();
                }
                rows.push(row);
            }
        }
        let ncols = monomials.len();
        GradedPiece {
            degree: d,
            monomials,
            basis: linalg::rref(&self.field, rows, ncols),
        }
    }

    pub fn piece_dimension(&self, d: u32) -> usize {
        self.piece(d).dimension()
    }

    /// `other ⊆ self` in every degree `<= max_degree`.
    pub fn contains_up_to(&self, other: &Self, max_degree: u32) -> Result<bool> {
        self.check_compatible(other)?;
        for d in 0..=max_degree {
            let mine = self.piece(d);
            let theirs = other.piece(d);
            for row in &theirs.basis.rows {
                if !linalg::in_span(&self.field, &mine.basis, row.clone()) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Piecewise equality in every degree `<= max_degree`.
    pub fn equal_up_to(&self, other: &Self, max_degree: u32) -> Result<bool> {
        self.check_compatible(other)?;
        for d in 0..=max_degree {
            if self.piece(d).basis != other.piece(d).basis {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Membership of a nonzero homogeneous polynomial, decided inside its
    /// own degree piece (exact, thanks to gradedness).
    pub fn contains_homogeneous(&self, poly: &KPoly<F>) -> Result<bool> {
        let Some(d) = poly.homogeneous_degree() else {
            return Err(Error::NotHomogeneous("membership query".into()));
        };
        let piece = self.piece(d);
        let index: HashMap<&Vec<u32>, usize> = piece
            .monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let mut row = vec![self.field.zero(); piece.monomials.len()];
        for (expo, c) in poly.terms() {
            row[index[expo]] = c.clone();
        }
        Ok(linalg::in_span(&self.field, &piece.basis, row))
    }

    /// Product ideal: pairwise products of generators.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                let p = a.mul(b);
                if !gens.contains(&p) {
                    gens.push(p);
                }
            }
        }
        HomogeneousIdeal::new(self.field.clone(), self.vars.clone(), gens)
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        assert!(e >= 1, "use the unit ideal explicitly for e = 0");
        let mut acc = self.clone();
        for _ in 1..e {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }
}

/// Canonical coefficient renderers for the two supported fields.
pub fn format_fp_coeff(c: &u64) -> String {
    c.to_string()
}

pub fn format_rational_coeff(c: &BigRational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// An element of `K[u_1..u_r][x_1..x_n]`: algebra exponents with polynomial
/// coefficients. This is the free-basis backend used when the base ring is
/// itself a polynomial ring, where content ideals live in the graded world.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraElement<F: FieldArith> {
    field: F,
    coeff_vars: Vec<String>,
    algebra_vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, KPoly<F>>,
}

impl<F: FieldArith + Clone + PartialEq> AlgebraElement<F> {
    pub fn new(field: F, coeff_vars: Vec<String>, algebra_vars: Vec<String>) -> Self {
        AlgebraElement {
            field,
            coeff_vars,
            algebra_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn with_term(mut self, algebra_expo: Vec<u32>, coeff: KPoly<F>) -> Self {
        debug_assert_eq!(algebra_expo.len(), self.algebra_vars.len());
        if !coeff.is_zero() {
            match self.terms.remove(&algebra_expo) {
                None => {
                    self.terms.insert(algebra_expo, coeff);
                }
                Some(old) => {
                    let sum = old.add(&coeff);
                    if !sum.is_zero() {
                        self.terms.insert(algebra_expo, sum);
                    }
                }
            }
        }
        self
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.field != other.field
            || self.coeff_vars != other.coeff_vars
            || self.algebra_vars != other.algebra_vars
        {
            return Err(Error::FieldMismatch);
        }
        let mut out = AlgebraElement::new(
            self.field.clone(),
            self.coeff_vars.clone(),
            self.algebra_vars.clone(),
        );
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let expo: Vec<u32> = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                out = out.with_term(expo, ca.mul(cb));
            }
        }
        Ok(out)
    }

    /// Content ideal: generated by the coefficient polynomials with respect
    /// to the free monomial basis in the algebra variables. The graded
    /// backend requires each coefficient to be homogeneous.
    pub fn content(&self) -> Result<HomogeneousIdeal<F>> {
        let mut gens = Vec::new();
        for c in self.terms.values() {
            if !gens.contains(c) {
                gens.push(c.clone());
            }
        }
        HomogeneousIdeal::new(self.field.clone(), self.coeff_vars.clone(), gens)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &KPoly<F>)> {
        self.terms.iter()
    }

    pub fn format(&self, fmt_coeff: &dyn Fn(&F::Elem) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mono = crate::ring::format_monomial(e, &self.algebra_vars);
            let cs = c.format(&self.coeff_vars, fmt_coeff);
            let part = if mono == "1" {
                format!("({cs})")
            } else {
                format!("({cs})*{mono}")
            };
            parts.push(part);
        }
        parts.join(" + ")
    }
}
