//! Presented base rings and their canonically reduced elements.
//!
//! Four families are supported: prime fields `F_p`, the integers `Z`,
//! modular rings `Z/n`, and artinian local monomial quotients
//! `F_p[y_1..y_m]/J` where `J` is generated by monomials and contains a pure
//! power of every variable (so the quotient has a finite standard-monomial
//! basis). Restricting quotients to monomial ideals keeps normal forms to
//! divisibility filtering: a monomial reduces to itself or to zero, never to
//! a mixed tail, so no term-rewriting engine is needed.
//!
//! Elements are stored canonically reduced; two elements are equal iff their
//! representations are identical. Ring handles are immutable after
//! construction and cheap to clone.

use crate::error::{Error, Result};
use crate::linalg::{self, mul_mod, Fp};
use num::{BigInt, BigUint, One, Zero};
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// Exponent vector of a monomial in the presentation variables.
pub type Monomial = Vec<u32>;

/// Element-count budget for exhaustive operations (enumeration sweeps,
/// unit-orbit scans). Rings above the budget still construct; only
/// exhaustive operations refuse.
pub const DEFAULT_ELEMENT_BUDGET: u64 = 1 << 20;

/// A presentation of a base ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingSpec {
    /// The prime field `F_p`.
    PrimeField(u64),
    /// The ring of integers.
    Integers,
    /// The modular ring `Z/n`, `n >= 2`.
    Modular(u64),
    /// `F_p[vars]/(relations)` with monomial relations of finite colength.
    MonomialQuotient {
        p: u64,
        vars: Vec<String>,
        relations: Vec<Monomial>,
    },
}

/// A canonically reduced ring element.
///
/// The representation depends on the ring family: residues for `F_p` and
/// `Z/n`, arbitrary-precision integers for `Z`, and coefficient vectors over
/// the standard-monomial basis for monomial quotients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingElement {
    Residue(u64),
    Int(BigInt),
    Coeffs(Vec<u64>),
}

#[derive(Debug)]
struct RingInner {
    spec: RingSpec,
    /// Standard monomials (not divisible by any relation), deglex order.
    basis: Vec<Monomial>,
    basis_index: HashMap<Monomial, usize>,
    /// basis[i] * basis[j] -> Some(basis index) or None when it reduces to 0.
    mono_table: Option<Vec<Vec<Option<u16>>>>,
}

/// Immutable handle to a constructed ring. Cloning is cheap; equality is
/// presentation equality, so independently constructed identical rings
/// interoperate.
#[derive(Debug, Clone)]
pub struct Ring(Arc<RingInner>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.0.spec == other.0.spec
    }
}
impl Eq for Ring {}

/// Degree first, then lexicographic with larger leading exponents first, so
/// that `1, a, b, a^2, a*b, b^2` is the reading order.
pub(crate) fn deglex_cmp(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| b.cmp(a))
}

fn divides(divisor: &Monomial, m: &Monomial) -> bool {
    divisor.iter().zip(m.iter()).all(|(d, e)| d <= e)
}

fn canonical_relations(nvars: usize, relations: &[Monomial]) -> Vec<Monomial> {
    let mut rels: Vec<Monomial> = relations
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.resize(nvars, 0);
            r
        })
        .collect();
    rels.sort_by(deglex_cmp);
    rels.dedup();
    // Keep only minimal generators of the monomial ideal.
    let mut minimal: Vec<Monomial> = Vec::new();
    for r in rels {
        if !minimal.iter().any(|m| divides(m, &r)) {
            minimal.push(r);
        }
    }
    minimal
}

impl Ring {
    /// Construct a ring from its presentation, validating the invariants:
    /// prime moduli are prime, and monomial quotients have finite colength
    /// (a pure power of every variable among the relations).
    pub fn new(spec: RingSpec) -> Result<Ring> {
        match spec {
            RingSpec::PrimeField(p) => {
                if !linalg::is_prime(p) {
                    return Err(Error::NonPrimeModulus(p));
                }
                Ok(Ring(Arc::new(RingInner {
                    spec: RingSpec::PrimeField(p),
                    basis: Vec::new(),
                    basis_index: HashMap::new(),
                    mono_table: None,
                })))
            }
            RingSpec::Integers => Ok(Ring(Arc::new(RingInner {
                spec: RingSpec::Integers,
                basis: Vec::new(),
                basis_index: HashMap::new(),
                mono_table: None,
            }))),
            RingSpec::Modular(n) => {
                if n < 2 {
                    return Err(Error::Config(format!("modulus {n} must be >= 2")));
                }
                Ok(Ring(Arc::new(RingInner {
                    spec: RingSpec::Modular(n),
                    basis: Vec::new(),
                    basis_index: HashMap::new(),
                    mono_table: None,
                })))
            }
            RingSpec::MonomialQuotient { p, vars, relations } => {
                if !linalg::is_prime(p) {
                    return Err(Error::NonPrimeModulus(p));
                }
                let relations = canonical_relations(vars.len(), &relations);
                if relations.iter().any(|r| r.iter().all(|&e| e == 0)) {
                    return Err(Error::Config(
                        "relations must have positive degree".into(),
                    ));
                }
                // Finite colength: each variable needs a pure power in J.
                let mut bound = vec![0u32; vars.len()];
                for (i, var) in vars.iter().enumerate() {
                    let pure = relations
                        .iter()
                        .filter(|r| r.iter().enumerate().all(|(j, &e)| e == 0 || j == i))
                        .map(|r| r[i])
                        .min();
                    match pure {
                        Some(k) if k > 0 => bound[i] = k,
                        _ => return Err(Error::InfiniteColength(var.clone())),
                    }
                }
                // Standard monomials live inside the pure-power box.
                let mut basis: Vec<Monomial> = Vec::new();
                let mut cur = vec![0u32; vars.len()];
                loop {
                    if !relations.iter().any(|r| divides(r, &cur)) {
                        basis.push(cur.clone());
                    }
                    // Odometer over the box [0, bound_i).
                    let mut i = 0;
                    loop {
                        if i == vars.len() {
                            break;
                        }
                        cur[i] += 1;
                        if cur[i] < bound[i] {
                            break;
                        }
                        cur[i] = 0;
                        i += 1;
                    }
                    if i == vars.len() {
                        break;
                    }
                }
                basis.sort_by(deglex_cmp);
                let basis_index: HashMap<Monomial, usize> = basis
                    .iter()
                    .enumerate()
                    .map(|(i, m)| (m.clone(), i))
                    .collect();
                let mono_table = (basis.len() <= 64).then(|| {
                    basis
                        .iter()
                        .map(|a| {
                            basis
                                .iter()
                                .map(|b| {
                                    let prod: Monomial =
                                        a.iter().zip(b.iter()).map(|(x, y)| x + y).collect();
                                    if relations.iter().any(|r| divides(r, &prod)) {
                                        None
                                    } else {
                                        Some(basis_index[&prod] as u16)
                                    }
                                })
                                .collect()
                        })
                        .collect()
                });
                Ok(Ring(Arc::new(RingInner {
                    spec: RingSpec::MonomialQuotient { p, vars, relations },
                    basis,
                    basis_index,
                    mono_table,
                })))
            }
        }
    }

    pub fn spec(&self) -> &RingSpec {
        &self.0.spec
    }

    /// Standard-monomial basis (monomial quotients only; empty otherwise).
    pub fn basis(&self) -> &[Monomial] {
        &self.0.basis
    }

    pub fn vars(&self) -> &[String] {
        match &self.0.spec {
            RingSpec::MonomialQuotient { vars, .. } => vars,
            _ => &[],
        }
    }

    /// Characteristic coefficient prime for monomial quotients / prime fields.
    pub fn coeff_prime(&self) -> Option<u64> {
        match &self.0.spec {
            RingSpec::PrimeField(p) | RingSpec::MonomialQuotient { p, .. } => Some(*p),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        !matches!(self.0.spec, RingSpec::Integers)
    }

    /// Number of elements, None for `Z`.
    pub fn element_count(&self) -> Option<BigUint> {
        match &self.0.spec {
            RingSpec::Integers => None,
            RingSpec::PrimeField(p) => Some(BigUint::from(*p)),
            RingSpec::Modular(n) => Some(BigUint::from(*n)),
            RingSpec::MonomialQuotient { p, .. } => {
                Some(BigUint::from(*p).pow(self.0.basis.len() as u32))
            }
        }
    }

    /// Element count when it fits the exhaustive budget, else an error.
    pub fn enumerable_count(&self, budget: u64) -> Result<u64> {
        let count = self.element_count().ok_or_else(|| {
            Error::UnsupportedRing(self.to_string(), "infinite ring cannot be enumerated".into())
        })?;
        if count > BigUint::from(budget) {
            return Err(Error::BudgetExceeded(format!(
                "ring {} has {} elements, budget {}",
                self, count, budget
            )));
        }
        let digits = count.to_u64_digits();
        Ok(*digits.first().unwrap_or(&0))
    }

    pub fn zero(&self) -> RingElement {
        match &self.0.spec {
            RingSpec::Integers => RingElement::Int(BigInt::zero()),
            RingSpec::PrimeField(_) | RingSpec::Modular(_) => RingElement::Residue(0),
            RingSpec::MonomialQuotient { .. } => {
                RingElement::Coeffs(vec![0; self.0.basis.len()])
            }
        }
    }

    pub fn one(&self) -> RingElement {
        self.from_i64(1)
    }

    pub fn is_zero(&self, a: &RingElement) -> bool {
        match a {
            RingElement::Residue(r) => *r == 0,
            RingElement::Int(i) => i.is_zero(),
            RingElement::Coeffs(c) => c.iter().all(|&v| v == 0),
        }
    }

    /// Canonical image of an integer.
    pub fn from_i64(&self, v: i64) -> RingElement {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> RingElement {
        match &self.0.spec {
            RingSpec::Integers => RingElement::Int(v.clone()),
            RingSpec::PrimeField(n) | RingSpec::Modular(n) => {
                let m = BigInt::from(*n);
                let r = ((v % &m) + &m) % &m;
                RingElement::Residue(r.to_u64_digits().1.first().copied().unwrap_or(0))
            }
            RingSpec::MonomialQuotient { p, .. } => {
                let m = BigInt::from(*p);
                let r = ((v % &m) + &m) % &m;
                let c0 = r.to_u64_digits().1.first().copied().unwrap_or(0);
                let mut c = vec![0; self.0.basis.len()];
                if let Some(slot) = c.get_mut(0) {
                    *slot = c0; // basis[0] is the constant monomial 1
                }
                RingElement::Coeffs(c)
            }
        }
    }

    /// Image of a presentation variable, reduced (zero when the variable
    /// itself lies in the relation ideal).
    pub fn var_element(&self, i: usize) -> Result<RingElement> {
        let nvars = self.vars().len();
        if i >= nvars {
            return Err(Error::UnknownVariable(format!("#{i}")));
        }
        let mut mono = vec![0u32; nvars];
        mono[i] = 1;
        Ok(self.monomial_element(&mono))
    }

    /// Image of a monomial in the presentation variables: itself when
    /// standard, zero when divisible by a relation.
    pub fn monomial_element(&self, mono: &Monomial) -> RingElement {
        match &self.0.spec {
            RingSpec::MonomialQuotient { .. } => {
                let mut c = vec![0u64; self.0.basis.len()];
                if let Some(&idx) = self.0.basis_index.get(mono) {
                    c[idx] = 1;
                }
                RingElement::Coeffs(c)
            }
            _ => {
                if mono.iter().all(|&e| e == 0) {
                    self.one()
                } else {
                    self.zero()
                }
            }
        }
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        match (&self.0.spec, a, b) {
            (RingSpec::Integers, RingElement::Int(x), RingElement::Int(y)) => {
                RingElement::Int(x + y)
            }
            (RingSpec::PrimeField(n) | RingSpec::Modular(n), RingElement::Residue(x), RingElement::Residue(y)) => {
                RingElement::Residue((x + y) % n)
            }
            (RingSpec::MonomialQuotient { p, .. }, RingElement::Coeffs(x), RingElement::Coeffs(y)) => {
                RingElement::Coeffs(x.iter().zip(y.iter()).map(|(u, v)| (u + v) % p).collect())
            }
            _ => panic!("element does not belong to ring {}", self),
        }
    }

    pub fn neg(&self, a: &RingElement) -> RingElement {
        match (&self.0.spec, a) {
            (RingSpec::Integers, RingElement::Int(x)) => RingElement::Int(-x),
            (RingSpec::PrimeField(n) | RingSpec::Modular(n), RingElement::Residue(x)) => {
                RingElement::Residue(if *x == 0 { 0 } else { n - x })
            }
            (RingSpec::MonomialQuotient { p, .. }, RingElement::Coeffs(x)) => RingElement::Coeffs(
                x.iter().map(|&v| if v == 0 { 0 } else { p - v }).collect(),
            ),
            _ => panic!("element does not belong to ring {}", self),
        }
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        match (&self.0.spec, a, b) {
            (RingSpec::Integers, RingElement::Int(x), RingElement::Int(y)) => {
                RingElement::Int(x * y)
            }
            (RingSpec::PrimeField(n) | RingSpec::Modular(n), RingElement::Residue(x), RingElement::Residue(y)) => {
                RingElement::Residue(mul_mod(*x, *y, *n))
            }
            (RingSpec::MonomialQuotient { p, relations, .. }, RingElement::Coeffs(x), RingElement::Coeffs(y)) => {
                let dim = self.0.basis.len();
                let mut acc = vec![0u64; dim];
                if let Some(table) = &self.0.mono_table {
                    for (i, &ci) in x.iter().enumerate() {
                        if ci == 0 {
                            continue;
                        }
                        for (j, &cj) in y.iter().enumerate() {
                            if cj == 0 {
                                continue;
                            }
                            if let Some(k) = table[i][j] {
                                let k = k as usize;
                                acc[k] = (acc[k] + mul_mod(ci, cj, *p)) % p;
                            }
                        }
                    }
                } else {
                    for (i, &ci) in x.iter().enumerate() {
                        if ci == 0 {
                            continue;
                        }
                        for (j, &cj) in y.iter().enumerate() {
                            if cj == 0 {
                                continue;
                            }
                            let prod: Monomial = self.0.basis[i]
                                .iter()
                                .zip(self.0.basis[j].iter())
                                .map(|(u, v)| u + v)
                                .collect();
                            if relations.iter().any(|r| divides(r, &prod)) {
                                continue;
                            }
                            let k = self.0.basis_index[&prod];
                            acc[k] = (acc[k] + mul_mod(ci, cj, *p)) % p;
                        }
                    }
                }
                RingElement::Coeffs(acc)
            }
            _ => panic!("element does not belong to ring {}", self),
        }
    }

    pub fn pow(&self, a: &RingElement, e: u32) -> RingElement {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// True iff some nonzero `s` has `r*s = 0`. For monomial quotients this
    /// is a kernel computation for the multiplication-by-`r` map; for `Z/n`
    /// it is a gcd test, and over `Z` only zero qualifies.
    pub fn is_zero_divisor(&self, r: &RingElement) -> bool {
        match (&self.0.spec, r) {
            (RingSpec::Integers, RingElement::Int(x)) => x.is_zero(),
            (RingSpec::PrimeField(n) | RingSpec::Modular(n), RingElement::Residue(x)) => {
                num::integer::gcd(*x, *n) != 1
            }
            (RingSpec::MonomialQuotient { p, .. }, RingElement::Coeffs(_)) => {
                let dim = self.0.basis.len();
                let f = Fp::new(*p);
                let m = self.mul_matrix(r);
                linalg::kernel_basis(&f, &m, dim).rank() > 0
            }
            _ => panic!("element does not belong to ring {}", self),
        }
    }

    /// Companion of [`Ring::is_zero_divisor`]: in a finite commutative ring
    /// every nonzero element is exactly one of unit or zero divisor.
    pub fn is_unit(&self, r: &RingElement) -> bool {
        match (&self.0.spec, r) {
            (RingSpec::Integers, RingElement::Int(x)) => {
                *x == BigInt::one() || *x == -BigInt::one()
            }
            _ => !self.is_zero_divisor(r),
        }
    }

    /// Matrix of multiplication by `r` on the coefficient space; rows are
    /// equations, columns index the standard basis.
    pub(crate) fn mul_matrix(&self, r: &RingElement) -> Vec<Vec<u64>> {
        let dim = self.0.basis.len();
        let mut cols = Vec::with_capacity(dim);
        for j in 0..dim {
            let mut e = vec![0u64; dim];
            e[j] = 1;
            let prod = self.mul(r, &RingElement::Coeffs(e));
            let RingElement::Coeffs(c) = prod else {
                unreachable!()
            };
            cols.push(c);
        }
        // Transpose columns into rows.
        (0..dim)
            .map(|i| (0..dim).map(|j| cols[j][i]).collect())
            .collect()
    }

    /// Canonical enumeration: indices `0..element_count` biject with elements.
    pub fn element_from_index(&self, idx: u64) -> RingElement {
        match &self.0.spec {
            RingSpec::Integers => panic!("Z is not enumerable"),
            RingSpec::PrimeField(n) | RingSpec::Modular(n) => {
                debug_assert!(idx < *n);
                RingElement::Residue(idx)
            }
            RingSpec::MonomialQuotient { p, .. } => {
                let mut c = vec![0u64; self.0.basis.len()];
                let mut rest = idx;
                for slot in c.iter_mut() {
                    *slot = rest % p;
                    rest /= p;
                }
                debug_assert_eq!(rest, 0);
                RingElement::Coeffs(c)
            }
        }
    }

    pub fn element_index(&self, el: &RingElement) -> u64 {
        match (&self.0.spec, el) {
            (RingSpec::PrimeField(_) | RingSpec::Modular(_), RingElement::Residue(r)) => *r,
            (RingSpec::MonomialQuotient { p, .. }, RingElement::Coeffs(c)) => {
                let mut idx = 0u64;
                for &v in c.iter().rev() {
                    idx = idx * p + v;
                }
                idx
            }
            _ => panic!("element does not belong to an enumerable ring"),
        }
    }

    /// Units of a small finite ring in index order.
    pub fn units(&self, budget: u64) -> Result<Vec<RingElement>> {
        let count = self.enumerable_count(budget)?;
        Ok((0..count)
            .map(|i| self.element_from_index(i))
            .filter(|e| self.is_unit(e))
            .collect())
    }

    /// True for the families with a unique maximal ideal: `F_p`, monomial
    /// quotients, and `Z/p^k`.
    pub fn is_local(&self) -> bool {
        match &self.0.spec {
            RingSpec::PrimeField(_) | RingSpec::MonomialQuotient { .. } => true,
            RingSpec::Modular(n) => factorize(*n).len() == 1,
            RingSpec::Integers => false,
        }
    }

    /// Generators of the maximal ideal of a local ring: the variables for a
    /// monomial quotient, `p` for `Z/p^k`, nothing for a field.
    pub fn maximal_ideal_generators(&self) -> Result<Vec<RingElement>> {
        if !self.is_local() {
            return Err(Error::NotLocal(self.to_string()));
        }
        match &self.0.spec {
            RingSpec::PrimeField(_) => Ok(Vec::new()),
            RingSpec::Modular(n) => {
                let (p, _) = factorize(*n)[0];
                Ok(vec![RingElement::Residue(p % n)])
            }
            RingSpec::MonomialQuotient { vars, .. } => {
                (0..vars.len()).map(|i| self.var_element(i)).collect()
            }
            RingSpec::Integers => unreachable!(),
        }
    }

    /// Least `N` with `m^N = 0` in an artinian local ring.
    pub fn loewy_length(&self) -> Result<u32> {
        if !self.is_local() {
            return Err(Error::NotLocal(self.to_string()));
        }
        match &self.0.spec {
            RingSpec::PrimeField(_) => Ok(1),
            RingSpec::Modular(n) => Ok(factorize(*n)[0].1),
            RingSpec::MonomialQuotient { .. } => {
                let top = self
                    .0
                    .basis
                    .iter()
                    .map(|m| m.iter().map(|&e| e as u64).sum::<u64>())
                    .max()
                    .unwrap_or(0);
                Ok(top as u32 + 1)
            }
            RingSpec::Integers => unreachable!(),
        }
    }

    /// All monomials of total degree `deg` in the presentation variables
    /// (not reduced), used to present powers of the maximal ideal.
    pub fn degree_monomials(&self, deg: u32) -> Vec<Monomial> {
        let nvars = self.vars().len();
        let mut out = Vec::new();
        let mut cur = vec![0u32; nvars];
        fn rec(out: &mut Vec<Monomial>, cur: &mut Vec<u32>, i: usize, left: u32) {
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
        if nvars == 0 {
            return out;
        }
        rec(&mut out, &mut cur, 0, deg);
        out
    }

    /// Quotient of a monomial quotient by further monomials (stays in the
    /// same presented family). Returns the quotient ring.
    pub fn quotient_by_monomials(&self, extra: &[Monomial]) -> Result<Ring> {
        match &self.0.spec {
            RingSpec::MonomialQuotient { p, vars, relations } => {
                let mut rels = relations.clone();
                for m in extra {
                    let mut m = m.clone();
                    m.resize(vars.len(), 0);
                    rels.push(m);
                }
                Ring::new(RingSpec::MonomialQuotient {
                    p: *p,
                    vars: vars.clone(),
                    relations: rels,
                })
            }
            _ => Err(Error::UnsupportedRing(
                self.to_string(),
                "monomial quotient required".into(),
            )),
        }
    }

    /// Quotient `Z/n -> Z/d` for a divisor `d >= 2` of `n` (also serves
    /// `Z -> Z/d`).
    pub fn quotient_by_divisor(&self, d: u64) -> Result<Ring> {
        match &self.0.spec {
            RingSpec::Modular(n) => {
                if d < 2 || n % d != 0 {
                    return Err(Error::Config(format!("{d} is not a proper divisor of {n}")));
                }
                Ring::new(RingSpec::Modular(d))
            }
            RingSpec::Integers => {
                if d < 2 {
                    return Err(Error::Config(format!("modulus {d} must be >= 2")));
                }
                Ring::new(RingSpec::Modular(d))
            }
            _ => Err(Error::UnsupportedRing(
                self.to_string(),
                "modular ring required".into(),
            )),
        }
    }

    /// Image of an element under the quotient map onto `target`, which must
    /// have been produced by one of the `quotient_by_*` constructors.
    pub fn project_to_quotient(&self, el: &RingElement, target: &Ring) -> RingElement {
        match (el, target.spec()) {
            (RingElement::Residue(r), RingSpec::Modular(d)) => RingElement::Residue(r % d),
            (RingElement::Int(i), RingSpec::Modular(_)) => target.from_bigint(i),
            (RingElement::Coeffs(c), RingSpec::MonomialQuotient { .. }) => {
                let mut out = vec![0u64; target.0.basis.len()];
                for (i, &v) in c.iter().enumerate() {
                    if v == 0 {
                        continue;
                    }
                    if let Some(&k) = target.0.basis_index.get(&self.0.basis[i]) {
                        out[k] = v;
                    }
                }
                RingElement::Coeffs(out)
            }
            _ => panic!("incompatible quotient projection"),
        }
    }

    /// Canonical text for an element, parseable by the element grammar.
    pub fn format_element(&self, el: &RingElement) -> String {
        match el {
            RingElement::Residue(r) => r.to_string(),
            RingElement::Int(i) => i.to_string(),
            RingElement::Coeffs(c) => {
                let mut parts = Vec::new();
                for (i, &v) in c.iter().enumerate() {
                    if v == 0 {
                        continue;
                    }
                    let mono = format_monomial(&self.0.basis[i], self.vars());
                    let part = match (v, mono.as_str()) {
                        (1, "1") => "1".to_string(),
                        (1, m) => m.to_string(),
                        (v, "1") => v.to_string(),
                        (v, m) => format!("{v}*{m}"),
                    };
                    parts.push(part);
                }
                if parts.is_empty() {
                    "0".to_string()
                } else {
                    parts.join("+")
                }
            }
        }
    }
}

pub(crate) fn format_monomial(m: &Monomial, vars: &[String]) -> String {
    let mut factors = Vec::new();
    for (i, &e) in m.iter().enumerate() {
        match e {
            0 => {}
            1 => factors.push(vars[i].clone()),
            _ => factors.push(format!("{}^{}", vars[i], e)),
        }
    }
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.spec {
            RingSpec::PrimeField(p) => write!(f, "F{p}"),
            RingSpec::Integers => write!(f, "Z"),
            RingSpec::Modular(n) => write!(f, "Z/{n}"),
            RingSpec::MonomialQuotient { p, vars, relations } => {
                let rels: Vec<String> =
                    relations.iter().map(|m| format_monomial(m, vars)).collect();
                write!(f, "F{p}[{}]/({})", vars.join(","), rels.join(","))
            }
        }
    }
}

/// Prime factorization by trial division, ascending primes.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut k = 0;
            while n % d == 0 {
                n /= d;
                k += 1;
            }
            out.push((d, k));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// One local factor `Z/p^k` of a modular ring, with the idempotent that
/// realizes the projection/reconstruction pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalFactor {
    pub prime: u64,
    pub exponent: u32,
    /// `p^k`.
    pub modulus: u64,
    /// Idempotent `e` in `Z/n` with `e = 1` in this factor, `0` elsewhere.
    pub idempotent: u64,
}

impl LocalFactor {
    /// Projection `Z/n -> Z/p^k`.
    pub fn project(&self, r: u64) -> u64 {
        r % self.modulus
    }
}

/// CRT decomposition of `Z/n` into its local factors `Z/p_i^{k_i}`.
/// "Locally X" over `Z/n` means X in every factor.
pub fn crt_decompose(ring: &Ring) -> Result<Vec<LocalFactor>> {
    let n = match ring.spec() {
        RingSpec::Modular(n) => *n,
        RingSpec::PrimeField(p) => *p,
        _ => {
            return Err(Error::UnsupportedRing(
                ring.to_string(),
                "CRT decomposition needs a modular ring".into(),
            ))
        }
    };
    let factors = factorize(n);
    let mut out = Vec::with_capacity(factors.len());
    for &(p, k) in &factors {
        let q = p.pow(k);
        let m = n / q;
        // e = m * (m^{-1} mod q), the idempotent congruent to 1 mod q.
        let inv = inverse_mod(m % q, q);
        let e = mul_mod(m % n, inv, n);
        out.push(LocalFactor {
            prime: p,
            exponent: k,
            modulus: q,
            idempotent: e,
        });
    }
    // Spot-verify the homomorphism data: orders multiply to n, idempotents
    // are orthogonal and sum to 1.
    debug_assert_eq!(out.iter().map(|f| f.modulus as u128).product::<u128>(), n as u128);
    debug_assert_eq!(
        out.iter().fold(0u64, |acc, f| (acc + f.idempotent) % n),
        1 % n
    );
    for (i, a) in out.iter().enumerate() {
        debug_assert_eq!(mul_mod(a.idempotent, a.idempotent, n), a.idempotent);
        for b in out.iter().skip(i + 1) {
            debug_assert_eq!(mul_mod(a.idempotent, b.idempotent, n), 0);
        }
    }
    Ok(out)
}

/// Reconstruct a residue of `Z/n` from its images in the local factors.
pub fn crt_reconstruct(ring: &Ring, factors: &[LocalFactor], images: &[u64]) -> Result<u64> {
    let n = match ring.spec() {
        RingSpec::Modular(n) => *n,
        RingSpec::PrimeField(p) => *p,
        _ => {
            return Err(Error::UnsupportedRing(
                ring.to_string(),
                "CRT reconstruction needs a modular ring".into(),
            ))
        }
    };
    let mut acc = 0u64;
    for (f, &img) in factors.iter().zip(images.iter()) {
        acc = (acc + mul_mod(img % f.modulus, f.idempotent, n)) % n;
    }
    Ok(acc)
}

fn inverse_mod(a: u64, n: u64) -> u64 {
    // Extended Euclid; a and n are coprime by construction here.
    let (mut r0, mut r1) = (n as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "not invertible");
    t0.rem_euclid(n as i128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono_quotient(p: u64, vars: &[&str], rels: &[&[u32]]) -> Ring {
        Ring::new(RingSpec::MonomialQuotient {
            p,
            vars: vars.iter().map(|s| s.to_string()).collect(),
            relations: rels.iter().map(|r| r.to_vec()).collect(),
        })
        .unwrap()
    }

    #[test]
    fn square_zero_quotient_has_basis_one_a_b() {
        // F_2[a,b]/(a^2, a*b, b^2): basis {1, a, b}, 8 elements.
        let r = mono_quotient(2, &["a", "b"], &[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(r.basis(), &[vec![0, 0], vec![1, 0], vec![0, 1]]);
        assert_eq!(r.element_count(), Some(BigUint::from(8u32)));
    }

    #[test]
    fn modular_ring_has_n_elements() {
        let r = Ring::new(RingSpec::Modular(4)).unwrap();
        assert_eq!(r.element_count(), Some(BigUint::from(4u32)));
    }

    #[test]
    fn missing_pure_power_is_infinite_colength() {
        let err = Ring::new(RingSpec::MonomialQuotient {
            p: 2,
            vars: vec!["a".into(), "b".into()],
            relations: vec![vec![2, 0]],
        })
        .unwrap_err();
        assert_eq!(err, Error::InfiniteColength("b".into()));
    }

    #[test]
    fn composite_prime_field_is_rejected() {
        assert_eq!(
            Ring::new(RingSpec::PrimeField(4)).unwrap_err(),
            Error::NonPrimeModulus(4)
        );
    }

    #[test]
    fn normal_form_examples() {
        // a*a = 0 in F_2[a,b]/(a^2, ab, b^2).
        let r = mono_quotient(2, &["a", "b"], &[&[2, 0], &[1, 1], &[0, 2]]);
        let a = r.var_element(0).unwrap();
        assert!(r.is_zero(&r.mul(&a, &a)));
        // a*b is a basis monomial in F_2[a,b]/(a^2, b^2).
        let r2 = mono_quotient(2, &["a", "b"], &[&[2, 0], &[0, 2]]);
        let (a, b) = (r2.var_element(0).unwrap(), r2.var_element(1).unwrap());
        assert_eq!(r2.mul(&a, &b), r2.monomial_element(&vec![1, 1]));
        // 7 = 3 in Z/4.
        let z4 = Ring::new(RingSpec::Modular(4)).unwrap();
        assert_eq!(z4.from_i64(7), RingElement::Residue(3));
    }

    #[test]
    fn zero_divisor_examples() {
        let z4 = Ring::new(RingSpec::Modular(4)).unwrap();
        assert!(z4.is_zero_divisor(&z4.from_i64(2)));
        let r = mono_quotient(2, &["a", "b"], &[&[2, 0], &[1, 1], &[0, 2]]);
        let a = r.var_element(0).unwrap();
        assert!(r.is_zero_divisor(&a));
        let z = Ring::new(RingSpec::Integers).unwrap();
        assert!(!z.is_zero_divisor(&z.from_i64(5)));
        assert!(z.is_unit(&z.from_i64(-1)));
    }

    #[test]
    fn crt_examples() {
        let z12 = Ring::new(RingSpec::Modular(12)).unwrap();
        let f = crt_decompose(&z12).unwrap();
        assert_eq!(
            f.iter().map(|x| x.modulus).collect::<Vec<_>>(),
            vec![4, 3]
        );
        let z4 = Ring::new(RingSpec::Modular(4)).unwrap();
        assert_eq!(crt_decompose(&z4).unwrap().len(), 1);
        let z30 = Ring::new(RingSpec::Modular(30)).unwrap();
        assert_eq!(
            crt_decompose(&z30)
                .unwrap()
                .iter()
                .map(|x| x.modulus)
                .collect::<Vec<_>>(),
            vec![2, 3, 5]
        );
    }

    #[test]
    fn crt_reconstruction_is_exhaustive_up_to_64() {
        for n in 2..=64u64 {
            let ring = Ring::new(RingSpec::Modular(n)).unwrap();
            let factors = crt_decompose(&ring).unwrap();
            for r in 0..n {
                let images: Vec<u64> = factors.iter().map(|f| f.project(r)).collect();
                assert_eq!(crt_reconstruct(&ring, &factors, &images).unwrap(), r);
            }
        }
    }

    #[test]
    fn ring_axioms_exhaustive_on_small_rings() {
        let rings = vec![
            Ring::new(RingSpec::Modular(8)).unwrap(),
            Ring::new(RingSpec::PrimeField(5)).unwrap(),
            mono_quotient(2, &["a", "b"], &[&[2, 0], &[1, 1], &[0, 2]]),
            mono_quotient(2, &["a", "b"], &[&[2, 0], &[0, 2]]),
            mono_quotient(3, &["a"], &[&[2]]),
        ];
        for ring in rings {
            let count = ring.enumerable_count(256).unwrap();
            let elems: Vec<RingElement> =
                (0..count).map(|i| ring.element_from_index(i)).collect();
            for x in &elems {
                for y in &elems {
                    assert_eq!(ring.add(x, y), ring.add(y, x));
                    assert_eq!(ring.mul(x, y), ring.mul(y, x));
                    for z in &elems {
                        assert_eq!(
                            ring.add(&ring.add(x, y), z),
                            ring.add(x, &ring.add(y, z))
                        );
                        assert_eq!(
                            ring.mul(&ring.mul(x, y), z),
                            ring.mul(x, &ring.mul(y, z))
                        );
                        assert_eq!(
                            ring.mul(x, &ring.add(y, z)),
                            ring.add(&ring.mul(x, y), &ring.mul(x, z))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn unit_xor_zero_divisor_for_nonzero_elements() {
        let rings = vec![
            Ring::new(RingSpec::Modular(12)).unwrap(),
            mono_quotient(2, &["a", "b"], &[&[2, 0], &[0, 2]]),
            Ring::new(RingSpec::PrimeField(7)).unwrap(),
        ];
        for ring in rings {
            let count = ring.enumerable_count(256).unwrap();
            for i in 1..count {
                let e = ring.element_from_index(i);
                assert!(ring.is_unit(&e) ^ ring.is_zero_divisor(&e), "{}", ring.format_element(&e));
            }
        }
    }

    #[test]
    fn element_index_roundtrip() {
        let r = mono_quotient(3, &["a"], &[&[3]]);
        let count = r.enumerable_count(1 << 10).unwrap();
        assert_eq!(count, 27);
        for i in 0..count {
            assert_eq!(r.element_index(&r.element_from_index(i)), i);
        }
    }

    #[test]
    fn quotient_projection_is_a_ring_map() {
        let r = mono_quotient(2, &["a", "b"], &[&[2, 0], &[0, 2]]);
        // Quotient by m^2: all degree-2 monomials.
        let q = r.quotient_by_monomials(&r.degree_monomials(2)).unwrap();
        assert_eq!(q.basis().len(), 3);
        let count = r.enumerable_count(256).unwrap();
        for i in 0..count {
            for j in 0..count {
                let (x, y) = (r.element_from_index(i), r.element_from_index(j));
                let lhs = r.project_to_quotient(&r.mul(&x, &y), &q);
                let rhs = q.mul(
                    &r.project_to_quotient(&x, &q),
                    &r.project_to_quotient(&y, &q),
                );
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn display_round_noise() {
        let r = mono_quotient(2, &["a", "b"], &[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(r.to_string(), "F2[a,b]/(a^2,a*b,b^2)");
        let a = r.var_element(0).unwrap();
        let one_plus_a = r.add(&r.one(), &a);
        assert_eq!(r.format_element(&one_plus_a), "1+a");
        assert_eq!(r.format_element(&r.zero()), "0");
    }

    #[test]
    fn loewy_length_matches_family() {
        assert_eq!(
            Ring::new(RingSpec::Modular(8)).unwrap().loewy_length().unwrap(),
            3
        );
        let r = mono_quotient(2, &["a", "b"], &[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(r.loewy_length().unwrap(), 2);
        let r2 = mono_quotient(2, &["a", "b"], &[&[2, 0], &[0, 2]]);
        assert_eq!(r2.loewy_length().unwrap(), 3);
    }
}
