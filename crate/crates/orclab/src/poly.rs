//! Elements of the algebra `S` over a presented base ring `R`: multivariate
//! polynomials `R[x_1..x_n]`, affine-semigroup algebras `R[G]` for a declared
//! finitely generated `G <= Z^d`, and finitely presented power series.
//!
//! Supports are sparse exponent maps with no zero coefficients stored.
//! Exponents are validated against the declared monoid at construction:
//! free monoids need componentwise nonnegative vectors, affine semigroups a
//! bounded search for a nonnegative generator combination. The monoid itself
//! is trusted from the declaration — any subsemigroup of `Z^d` is torsion-free
//! and cancellative, which the constructor spot-checks by requiring distinct
//! nonidentity generators.

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::ring::{Ring, RingElement};
use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::sync::Arc;

/// Search budget (number of generator subtractions) for affine-semigroup
/// membership checks.
const MEMBERSHIP_DEPTH: u32 = 64;

/// The declared exponent monoid of the algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonoidSpec {
    /// `N^rank`: ordinary multivariate polynomials.
    Free { rank: usize },
    /// Finitely generated subsemigroup of `Z^dim` (with identity).
    Affine { dim: usize, gens: Vec<Vec<i64>> },
}

impl MonoidSpec {
    pub fn dim(&self) -> usize {
        match self {
            MonoidSpec::Free { rank } => *rank,
            MonoidSpec::Affine { dim, .. } => *dim,
        }
    }

    /// Membership of an exponent vector. Free monoids check signs; affine
    /// semigroups run a bounded depth-first search over generator
    /// subtractions, surfacing budget exhaustion as an error rather than a
    /// verdict.
    pub fn contains(&self, expo: &[i64]) -> Result<bool> {
        if expo.len() != self.dim() {
            return Ok(false);
        }
        match self {
            MonoidSpec::Free { .. } => Ok(expo.iter().all(|&e| e >= 0)),
            MonoidSpec::Affine { gens, .. } => {
                let nonneg = gens.iter().all(|g| g.iter().all(|&e| e >= 0));
                let pos_graded = gens
                    .iter()
                    .filter(|g| g.iter().any(|&e| e != 0))
                    .all(|g| g.iter().sum::<i64>() > 0);
                let mut seen = HashSet::new();
                search_membership(
                    expo.to_vec(),
                    gens,
                    MEMBERSHIP_DEPTH,
                    nonneg,
                    pos_graded,
                    &mut seen,
                )
            }
        }
    }
}

fn search_membership(
    target: Vec<i64>,
    gens: &[Vec<i64>],
    depth: u32,
    nonneg: bool,
    pos_graded: bool,
    failed: &mut HashSet<Vec<i64>>,
) -> Result<bool> {
    if target.iter().all(|&e| e == 0) {
        return Ok(true);
    }
    // Dead states under the available gradings: a negative coordinate when
    // all generators are componentwise nonnegative, or a negative coordinate
    // sum when every generator has positive total degree. These prunes make
    // the search terminate without touching the depth budget.
    if nonneg && target.iter().any(|&e| e < 0) {
        return Ok(false);
    }
    if pos_graded && target.iter().sum::<i64>() < 0 {
        return Ok(false);
    }
    if depth == 0 {
        return Err(Error::BudgetExceeded(format!(
            "semigroup membership search for {target:?} exhausted its depth budget"
        )));
    }
    if failed.contains(&target) {
        return Ok(false);
    }
    for g in gens {
        if g.iter().all(|&e| e == 0) {
            continue;
        }
        let reduced: Vec<i64> = target.iter().zip(g.iter()).map(|(t, e)| t - e).collect();
        if search_membership(reduced, gens, depth - 1, nonneg, pos_graded, failed)? {
            return Ok(true);
        }
    }
    failed.insert(target);
    Ok(false)
}

/// The algebra `S` over `R`: a monoid declaration plus display names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    monoid: MonoidSpec,
    vars: Vec<String>,
}

impl Algebra {
    /// Free polynomial algebra `R[vars]`.
    pub fn free(vars: &[&str]) -> Arc<Algebra> {
        Arc::new(Algebra {
            monoid: MonoidSpec::Free { rank: vars.len() },
            vars: vars.iter().map(|s| s.to_string()).collect(),
        })
    }

    /// Affine-semigroup algebra `R[G]` for `G` generated by `gens` in `Z^dim`.
    /// Validates the declaration: generators of the right dimension and
    /// pairwise distinct (subsemigroups of `Z^d` are automatically
    /// torsion-free and cancellative).
    pub fn affine(dim: usize, gens: Vec<Vec<i64>>) -> Result<Arc<Algebra>> {
        for g in &gens {
            if g.len() != dim {
                return Err(Error::Config(format!(
                    "semigroup generator {g:?} does not have dimension {dim}"
                )));
            }
        }
        let mut sorted = gens.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != gens.len() {
            return Err(Error::Config("semigroup generators must be distinct".into()));
        }
        let vars = (0..dim).map(|i| format!("e{i}")).collect();
        Ok(Arc::new(Algebra {
            monoid: MonoidSpec::Affine { dim, gens },
            vars,
        }))
    }

    pub fn monoid(&self) -> &MonoidSpec {
        &self.monoid
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_free(&self) -> bool {
        matches!(self.monoid, MonoidSpec::Free { .. })
    }

    pub fn format_exponent(&self, expo: &[i64]) -> String {
        match &self.monoid {
            MonoidSpec::Free { .. } => {
                let mono: Vec<u32> = expo.iter().map(|&e| e as u32).collect();
                crate::ring::format_monomial(&mono, &self.vars)
            }
            MonoidSpec::Affine { .. } => {
                let coords: Vec<String> = expo.iter().map(|e| e.to_string()).collect();
                format!("[{}]", coords.join(","))
            }
        }
    }
}

/// A sparse element of `S` with `R` coefficients; no zero coefficients are
/// stored, and every stored exponent is a member of the declared monoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyElement {
    ring: Ring,
    algebra: Arc<Algebra>,
    terms: BTreeMap<Vec<i64>, RingElement>,
}

impl PolyElement {
    pub fn zero(ring: &Ring, algebra: &Arc<Algebra>) -> PolyElement {
        PolyElement {
            ring: ring.clone(),
            algebra: Arc::clone(algebra),
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(
        ring: &Ring,
        algebra: &Arc<Algebra>,
        terms: Vec<(Vec<i64>, RingElement)>,
    ) -> Result<PolyElement> {
        let mut out = PolyElement::zero(ring, algebra);
        for (expo, coeff) in terms {
            out.add_term(expo, coeff)?;
        }
        Ok(out)
    }

    /// Enumeration fast path: exponents come from a frame already validated
    /// against the monoid, coefficients are distinct per exponent.
    pub(crate) fn from_frame_terms(
        ring: &Ring,
        algebra: &Arc<Algebra>,
        terms: impl IntoIterator<Item = (Vec<i64>, RingElement)>,
    ) -> PolyElement {
        let mut map = BTreeMap::new();
        for (expo, coeff) in terms {
            if !ring.is_zero(&coeff) {
                map.insert(expo, coeff);
            }
        }
        PolyElement {
            ring: ring.clone(),
            algebra: Arc::clone(algebra),
            terms: map,
        }
    }

    /// Add `coeff * x^expo` into the element, validating the exponent.
    pub fn add_term(&mut self, expo: Vec<i64>, coeff: RingElement) -> Result<()> {
        if !self.algebra.monoid().contains(&expo)? {
            return Err(Error::SemigroupMembership(format!("{expo:?}")));
        }
        if self.ring.is_zero(&coeff) {
            return Ok(());
        }
        match self.terms.remove(&expo) {
            None => {
                self.terms.insert(expo, coeff);
            }
            Some(old) => {
                let sum = self.ring.add(&old, &coeff);
                if !self.ring.is_zero(&sum) {
                    self.terms.insert(expo, sum);
                }
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &RingElement)> {
        self.terms.iter()
    }

    pub fn coefficients(&self) -> Vec<RingElement> {
        self.terms.values().cloned().collect()
    }

    pub fn coefficient(&self, expo: &[i64]) -> RingElement {
        self.terms
            .get(expo)
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    /// Total degree over a free monoid; `None` for the zero element or
    /// affine supports.
    pub fn total_degree(&self) -> Option<i64> {
        if !self.algebra.is_free() {
            return None;
        }
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    fn check_compatible(&self, other: &PolyElement) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(
                self.ring.to_string(),
                other.ring.to_string(),
            ));
        }
        if self.algebra != other.algebra {
            return Err(Error::SemigroupMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &PolyElement) -> Result<PolyElement> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> PolyElement {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = self.ring.neg(c);
        }
        out
    }

    pub fn sub(&self, other: &PolyElement) -> Result<PolyElement> {
        self.add(&other.neg())
    }

    /// Multiply by a ring scalar.
    pub fn scale(&self, a: &RingElement) -> PolyElement {
        let mut out = PolyElement::zero(&self.ring, &self.algebra);
        for (e, c) in &self.terms {
            let prod = self.ring.mul(a, c);
            if !self.ring.is_zero(&prod) {
                out.terms.insert(e.clone(), prod);
            }
        }
        out
    }

    /// Convolution product with exact coefficient arithmetic; exponents add
    /// componentwise (the monoid is closed under addition, so no
    /// re-validation is needed).
    pub fn mul(&self, other: &PolyElement) -> Result<PolyElement> {
        self.check_compatible(other)?;
        let mut out = PolyElement::zero(&self.ring, &self.algebra);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let expo: Vec<i64> = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                let prod = self.ring.mul(ca, cb);
                if self.ring.is_zero(&prod) {
                    continue;
                }
                match out.terms.remove(&expo) {
                    None => {
                        out.terms.insert(expo, prod);
                    }
                    Some(old) => {
                        let sum = self.ring.add(&old, &prod);
                        if !self.ring.is_zero(&sum) {
                            out.terms.insert(expo, sum);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// The content ideal: generated by the stored coefficients. For the
    /// free-basis algebras supported here this coincides with the
    /// intersection-of-ideals description of content.
    pub fn content(&self) -> Result<Ideal> {
        Ideal::span(&self.ring, &self.coefficients())
    }
}

impl fmt::Display for PolyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Graded order: degree first, then the reading order of exponents.
        let mut keys: Vec<&Vec<i64>> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let da: i64 = a.iter().map(|e| e.abs()).sum();
            let db: i64 = b.iter().map(|e| e.abs()).sum();
            da.cmp(&db).then_with(|| b.cmp(a))
        });
        let parts: Vec<String> = keys
            .iter()
            .map(|e| {
                let coeff = self.ring.format_element(&self.terms[*e]);
                let mono = self.algebra.format_exponent(e);
                if mono == "1" {
                    format!("({coeff})")
                } else {
                    format!("({coeff})*{mono}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A finitely presented power series: a polynomial head of bounded total
/// degree plus a finite set of ring elements declared to occur as
/// coefficients beyond the truncation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesElement {
    head: PolyElement,
    order: u32,
    tail: Vec<RingElement>,
}

impl SeriesElement {
    /// `head + O(order+1) with tail coefficients`. The head must be supported
    /// in total degrees `<= order` over a free monoid; the tail is stored
    /// canonically (sorted, deduplicated, zeros dropped).
    pub fn new(head: PolyElement, order: u32, tail: Vec<RingElement>) -> Result<SeriesElement> {
        if !head.algebra().is_free() {
            return Err(Error::Config(
                "series require a free exponent monoid".into(),
            ));
        }
        if head.total_degree().unwrap_or(0) > order as i64 {
            return Err(Error::Config(format!(
                "head degree exceeds truncation order {order}"
            )));
        }
        let ring = head.ring().clone();
        let mut tail: Vec<RingElement> = tail.into_iter().filter(|c| !ring.is_zero(c)).collect();
        tail.sort();
        tail.dedup();
        Ok(SeriesElement { head, order, tail })
    }

    pub fn head(&self) -> &PolyElement {
        &self.head
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn tail(&self) -> &[RingElement] {
        &self.tail
    }

    pub fn is_polynomial(&self) -> bool {
        self.tail.is_empty()
    }

    /// Product of two exactly known series (empty tails): polynomial
    /// multiplication with the truncation orders adding.
    pub fn mul(&self, other: &SeriesElement) -> Result<SeriesElement> {
        if !self.is_polynomial() || !other.is_polynomial() {
            return Err(Error::Config(
                "series multiplication is defined for empty-tail operands only".into(),
            ));
        }
        let head = self.head.mul(&other.head)?;
        SeriesElement::new(head, self.order + other.order, Vec::new())
    }
}

impl fmt::Display for SeriesElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = self
            .head
            .algebra()
            .vars()
            .first()
            .cloned()
            .unwrap_or_else(|| "x".to_string());
        write!(f, "{} + O({var}^{})", self.head, self.order + 1)?;
        if !self.tail.is_empty() {
            let items: Vec<String> = self
                .tail
                .iter()
                .map(|c| self.head.ring().format_element(c))
                .collect();
            write!(f, " tail {{{}}}", items.join(","))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingSpec;

    fn z8() -> Ring {
        Ring::new(RingSpec::Modular(8)).unwrap()
    }

    #[test]
    fn free_monoid_rejects_negative_exponents() {
        let alg = Algebra::free(&["x"]);
        assert!(alg.monoid().contains(&[2]).unwrap());
        assert!(!alg.monoid().contains(&[-1]).unwrap());
    }

    #[test]
    fn affine_membership_by_bounded_search() {
        // G generated by (2,0) and (1,1) inside Z^2.
        let alg = Algebra::affine(2, vec![vec![2, 0], vec![1, 1]]).unwrap();
        assert!(alg.monoid().contains(&[0, 0]).unwrap());
        assert!(alg.monoid().contains(&[3, 1]).unwrap()); // (2,0)+(1,1)
        assert!(!alg.monoid().contains(&[0, 1]).unwrap());
        let ring = z8();
        let mut p = PolyElement::zero(&ring, &alg);
        let err = p.add_term(vec![0, 1], ring.from_i64(1)).unwrap_err();
        assert!(matches!(err, Error::SemigroupMembership(_)));
    }

    #[test]
    fn duplicate_semigroup_generators_are_rejected() {
        assert!(Algebra::affine(1, vec![vec![1], vec![1]]).is_err());
    }

    #[test]
    fn multiplication_is_convolution() {
        let ring = z8();
        let alg = Algebra::free(&["x"]);
        // (2 + 4x)(1 + x) = 2 + 6x + 4x^2.
        let f = PolyElement::from_terms(
            &ring,
            &alg,
            vec![(vec![0], ring.from_i64(2)), (vec![1], ring.from_i64(4))],
        )
        .unwrap();
        let g = PolyElement::from_terms(
            &ring,
            &alg,
            vec![(vec![0], ring.from_i64(1)), (vec![1], ring.from_i64(1))],
        )
        .unwrap();
        let fg = f.mul(&g).unwrap();
        assert_eq!(fg.coefficient(&[0]), ring.from_i64(2));
        assert_eq!(fg.coefficient(&[1]), ring.from_i64(6));
        assert_eq!(fg.coefficient(&[2]), ring.from_i64(4));
        // f * 1 = f.
        let one = PolyElement::from_terms(&ring, &alg, vec![(vec![0], ring.one())]).unwrap();
        assert_eq!(f.mul(&one).unwrap(), f);
    }

    #[test]
    fn monomial_shift_over_square_zero_ring() {
        // (a s + b t) * s = a s^2 + b s t over F_2[a,b]/(a,b)^2.
        let ring = Ring::new(RingSpec::MonomialQuotient {
            p: 2,
            vars: vec!["a".into(), "b".into()],
            relations: vec![vec![2, 0], vec![1, 1], vec![0, 2]],
        })
        .unwrap();
        let alg = Algebra::free(&["s", "t"]);
        let a = ring.var_element(0).unwrap();
        let b = ring.var_element(1).unwrap();
        let f = PolyElement::from_terms(
            &ring,
            &alg,
            vec![(vec![1, 0], a.clone()), (vec![0, 1], b.clone())],
        )
        .unwrap();
        let s = PolyElement::from_terms(&ring, &alg, vec![(vec![1, 0], ring.one())]).unwrap();
        let shifted = f.mul(&s).unwrap();
        assert_eq!(shifted.coefficient(&[2, 0]), a);
        assert_eq!(shifted.coefficient(&[1, 1]), b);
        assert_eq!(format!("{f}"), "(a)*s + (b)*t");
    }

    #[test]
    fn zero_coefficients_are_never_stored() {
        let ring = z8();
        let alg = Algebra::free(&["x"]);
        let f = PolyElement::from_terms(
            &ring,
            &alg,
            vec![(vec![0], ring.from_i64(4)), (vec![0], ring.from_i64(4))],
        )
        .unwrap();
        assert!(f.is_zero());
        let g = PolyElement::from_terms(&ring, &alg, vec![(vec![1], ring.from_i64(2))]).unwrap();
        // 4 * (2x) = 0 mod 8.
        assert!(g.scale(&ring.from_i64(4)).is_zero());
    }

    #[test]
    fn series_validation_and_product() {
        let ring = z8();
        let alg = Algebra::free(&["x"]);
        let head = PolyElement::from_terms(
            &ring,
            &alg,
            vec![(vec![0], ring.from_i64(2)), (vec![1], ring.from_i64(4))],
        )
        .unwrap();
        let s = SeriesElement::new(head.clone(), 1, vec![ring.from_i64(4)]).unwrap();
        assert_eq!(s.tail().len(), 1);
        assert!(SeriesElement::new(head.clone(), 0, vec![]).is_err());
        let exact = SeriesElement::new(head, 1, vec![]).unwrap();
        let sq = exact.mul(&exact).unwrap();
        assert_eq!(sq.order(), 2);
        assert!(exact.mul(&s).is_err());
    }
}
