//! Finitely generated ideals of the base ring as canonical values.
//!
//! Representation depends on the ring family:
//! - monomial quotients: a reduced-echelon basis of the underlying
//!   `F_p`-subspace, closed under multiplication by the presentation
//!   variables (equality is representation equality);
//! - `Z/n` and `F_p`: the divisor lattice — every ideal is `(d)` for a
//!   divisor `d` of `n`, with `d = n` the zero ideal;
//! - `Z`: the nonnegative generator (gcd arithmetic).
//!
//! All operations are pure functions on immutable values.

use crate::error::{Error, Result};
use crate::linalg::{self, EchelonBasis, Fp};
use crate::ring::{factorize, Ring, RingElement, RingSpec};
use num::{BigInt, BigUint, Integer, Signed, Zero};
use std::fmt;

/// Basis dimension above which span closure refuses to run.
const SPAN_DIM_CAP: usize = 4096;

#[derive(Debug, Clone, PartialEq)]
enum Rep {
    /// Reduced echelon basis over `F_p` in ring-basis coordinates.
    Subspace(EchelonBasis<u64>),
    /// `(d)` in `Z/n` for `d | n`; `d = n` is the zero ideal.
    Divisor(u64),
    /// `(g)` in `Z` for `g >= 0`.
    IntGen(BigUint),
}

/// A finitely generated ideal in canonical form.
#[derive(Debug, Clone, PartialEq)]
pub struct Ideal {
    ring: Ring,
    rep: Rep,
}

impl Ideal {
    /// Smallest ideal containing `gens`: the span closed under
    /// multiplication by the ring generators until fixpoint (monomial
    /// quotients), gcd arithmetic otherwise. An empty list yields the
    /// zero ideal.
    pub fn span(ring: &Ring, gens: &[RingElement]) -> Result<Ideal> {
        let rep = match ring.spec() {
            RingSpec::Integers => {
                let mut g = BigUint::zero();
                for el in gens {
                    let RingElement::Int(v) = el else {
                        panic!("element does not belong to {ring}")
                    };
                    g = g.gcd(&v.abs().to_biguint().expect("abs is nonnegative"));
                }
                Rep::IntGen(g)
            }
            RingSpec::Modular(n) | RingSpec::PrimeField(n) => {
                let mut d = *n;
                for el in gens {
                    let RingElement::Residue(r) = el else {
                        panic!("element does not belong to {ring}")
                    };
                    d = num::integer::gcd(d, *r);
                }
                Rep::Divisor(if d == 0 { *n } else { d })
            }
            RingSpec::MonomialQuotient { p, .. } => {
                let dim = ring.basis().len();
                if dim > SPAN_DIM_CAP {
                    return Err(Error::BudgetExceeded(format!(
                        "span closure over a {dim}-dimensional quotient exceeds the cap {SPAN_DIM_CAP}"
                    )));
                }
                let field = Fp::new(*p);
                let rows: Vec<Vec<u64>> = gens
                    .iter()
                    .map(|el| match el {
                        RingElement::Coeffs(c) => c.clone(),
                        _ => panic!("element does not belong to {ring}"),
                    })
                    .collect();
                let mut basis = linalg::rref(&field, rows, dim);
                let vars: Vec<RingElement> = (0..ring.vars().len())
                    .map(|i| ring.var_element(i).expect("variable index in range"))
                    .filter(|v| !ring.is_zero(v))
                    .collect();
                loop {
                    let mut grew = false;
                    let snapshot = basis.rows.clone();
                    for row in &snapshot {
                        let el = RingElement::Coeffs(row.clone());
                        for v in &vars {
                            let RingElement::Coeffs(prod) = ring.mul(&el, v) else {
                                unreachable!()
                            };
                            grew |= linalg::insert_row(&field, &mut basis, prod);
                        }
                    }
                    if !grew {
                        break;
                    }
                }
                Rep::Subspace(basis)
            }
        };
        Ok(Ideal {
            ring: ring.clone(),
            rep,
        })
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::span(ring, &[]).expect("zero ideal always constructible")
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::span(ring, &[ring.one()]).expect("unit ideal always constructible")
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        match &self.rep {
            Rep::Subspace(b) => b.is_empty(),
            Rep::Divisor(d) => match self.ring.spec() {
                RingSpec::Modular(n) | RingSpec::PrimeField(n) => d == n,
                _ => unreachable!(),
            },
            Rep::IntGen(g) => g.is_zero(),
        }
    }

    pub fn is_unit_ideal(&self) -> bool {
        match &self.rep {
            Rep::Subspace(b) => b.rank() == self.ring.basis().len(),
            Rep::Divisor(d) => *d == 1,
            Rep::IntGen(g) => *g == BigUint::from(1u32),
        }
    }

    /// Canonical generator list: echelon basis rows, the divisor, or the
    /// nonnegative integer generator.
    pub fn generators(&self) -> Vec<RingElement> {
        match &self.rep {
            Rep::Subspace(b) => b
                .rows
                .iter()
                .map(|r| RingElement::Coeffs(r.clone()))
                .collect(),
            Rep::Divisor(d) => {
                if self.is_zero() {
                    Vec::new()
                } else {
                    vec![RingElement::Residue(*d)]
                }
            }
            Rep::IntGen(g) => {
                if g.is_zero() {
                    Vec::new()
                } else {
                    vec![RingElement::Int(BigInt::from(g.clone()))]
                }
            }
        }
    }

    pub fn generator_strings(&self) -> Vec<String> {
        self.generators()
            .iter()
            .map(|g| self.ring.format_element(g))
            .collect()
    }

    fn check_same_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(
                self.ring.to_string(),
                other.ring.to_string(),
            ));
        }
        Ok(())
    }

    /// Exact equality through the canonical representations.
    pub fn equal(&self, other: &Ideal) -> Result<bool> {
        self.check_same_ring(other)?;
        Ok(self.rep == other.rep)
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Ideal) -> Result<bool> {
        self.check_same_ring(other)?;
        Ok(match (&self.rep, &other.rep) {
            (Rep::Subspace(a), Rep::Subspace(b)) => {
                let p = self.ring.coeff_prime().expect("subspace ideals have a prime");
                let field = Fp::new(p);
                b.rows
                    .iter()
                    .all(|row| linalg::in_span(&field, a, row.clone()))
            }
            (Rep::Divisor(da), Rep::Divisor(db)) => db % da == 0,
            (Rep::IntGen(ga), Rep::IntGen(gb)) => {
                if ga.is_zero() {
                    gb.is_zero()
                } else {
                    gb.is_multiple_of(ga)
                }
            }
            _ => unreachable!("same ring implies same representation"),
        })
    }

    pub fn contains_element(&self, el: &RingElement) -> bool {
        match (&self.rep, el) {
            (Rep::Subspace(b), RingElement::Coeffs(c)) => {
                let p = self.ring.coeff_prime().expect("subspace ideals have a prime");
                linalg::in_span(&Fp::new(p), b, c.clone())
            }
            (Rep::Divisor(d), RingElement::Residue(r)) => r % d == 0,
            (Rep::IntGen(g), RingElement::Int(v)) => {
                if g.is_zero() {
                    v.is_zero()
                } else {
                    v.is_multiple_of(&BigInt::from(g.clone()))
                }
            }
            _ => panic!("element does not belong to {}", self.ring),
        }
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_ring(other)?;
        let mut gens = self.generators();
        gens.extend(other.generators());
        Ideal::span(&self.ring, &gens)
    }

    /// Product ideal: the span of pairwise products of generators.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_ring(other)?;
        match (&self.rep, &other.rep) {
            (Rep::Divisor(da), Rep::Divisor(db)) => {
                let n = match self.ring.spec() {
                    RingSpec::Modular(n) | RingSpec::PrimeField(n) => *n,
                    _ => unreachable!(),
                };
                let d = num::integer::gcd((*da as u128 * *db as u128 % n as u128) as u64, n);
                Ok(Ideal {
                    ring: self.ring.clone(),
                    rep: Rep::Divisor(if d == 0 { n } else { d }),
                })
            }
            (Rep::IntGen(ga), Rep::IntGen(gb)) => Ok(Ideal {
                ring: self.ring.clone(),
                rep: Rep::IntGen(ga * gb),
            }),
            _ => {
                let mut gens = Vec::new();
                for a in self.generators() {
                    for b in other.generators() {
                        gens.push(self.ring.mul(&a, &b));
                    }
                }
                Ideal::span(&self.ring, &gens)
            }
        }
    }

    pub fn pow(&self, e: u32) -> Result<Ideal> {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..e {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Scale by a ring element: `a·I`.
    pub fn scale(&self, a: &RingElement) -> Result<Ideal> {
        let gens: Vec<RingElement> = self
            .generators()
            .iter()
            .map(|g| self.ring.mul(a, g))
            .collect();
        Ideal::span(&self.ring, &gens)
    }

    /// `{ z : z·g = 0 for every generator g }`, via the kernel of the
    /// stacked multiplication maps. Over `Z` the annihilator of a nonzero
    /// ideal is zero and of the zero ideal the whole ring, returned directly.
    pub fn annihilator(&self) -> Result<Ideal> {
        match &self.rep {
            Rep::IntGen(g) => {
                if g.is_zero() {
                    Ok(Ideal::unit(&self.ring))
                } else {
                    Ok(Ideal::zero(&self.ring))
                }
            }
            Rep::Divisor(d) => {
                let n = match self.ring.spec() {
                    RingSpec::Modular(n) | RingSpec::PrimeField(n) => *n,
                    _ => unreachable!(),
                };
                // ann((d)) = (n/d) in Z/n.
                let q = n / d;
                Ok(Ideal {
                    ring: self.ring.clone(),
                    rep: Rep::Divisor(if q == 0 { n } else { q }),
                })
            }
            Rep::Subspace(b) => {
                let p = self.ring.coeff_prime().expect("subspace ideals have a prime");
                let field = Fp::new(p);
                let dim = self.ring.basis().len();
                if b.is_empty() {
                    return Ok(Ideal::unit(&self.ring));
                }
                let mut stacked: Vec<Vec<u64>> = Vec::new();
                for row in &b.rows {
                    let g = RingElement::Coeffs(row.clone());
                    stacked.extend(self.ring.mul_matrix(&g));
                }
                let kernel = linalg::kernel_basis(&field, &stacked, dim);
                let ann = Ideal {
                    ring: self.ring.clone(),
                    rep: Rep::Subspace(kernel),
                };
                // The annihilator of an ideal is itself an ideal; the kernel
                // basis is already echelon-canonical.
                debug_assert!(ann.closed_under_ring_multiplication());
                Ok(ann)
            }
        }
    }

    /// Minimal number of generators over a local ring (or `Z`), by Nakayama:
    /// the dimension of `I/mI` over the residue field.
    pub fn min_generators(&self) -> Result<u32> {
        match &self.rep {
            Rep::IntGen(g) => Ok(if g.is_zero() { 0 } else { 1 }),
            Rep::Divisor(_) => {
                if !self.ring.is_local() {
                    return Err(Error::NotLocal(self.ring.to_string()));
                }
                Ok(if self.is_zero() { 0 } else { 1 })
            }
            Rep::Subspace(b) => {
                let m = maximal_ideal(&self.ring)?;
                let mi = m.product(self)?;
                let Rep::Subspace(mb) = &mi.rep else { unreachable!() };
                Ok((b.rank() - mb.rank()) as u32)
            }
        }
    }

    pub fn is_principal(&self) -> Result<bool> {
        Ok(self.min_generators()? <= 1)
    }

    /// Locally principal: principal in every localization at a maximal
    /// ideal. For `Z/n` this means principal in every CRT factor, which is
    /// automatic in the divisor lattice; local rings reduce to `μ <= 1`;
    /// every ideal of `Z` is principal.
    pub fn is_locally_principal(&self) -> bool {
        match &self.rep {
            Rep::IntGen(_) | Rep::Divisor(_) => true,
            Rep::Subspace(_) => self
                .min_generators()
                .map(|mu| mu <= 1)
                .expect("monomial quotients are local"),
        }
    }

    /// `ann(ann(I)) = I`, the double-annihilator closure test.
    pub fn double_annihilator_closed(&self) -> Result<bool> {
        if !self.ring.is_finite() || !self.ring.is_local() {
            return Err(Error::NotLocal(self.ring.to_string()));
        }
        let back = self.annihilator()?.annihilator()?;
        back.equal(self)
    }

    /// Dimension of the ideal over the coefficient prime field (finite
    /// local rings).
    pub fn fp_dimension(&self) -> Result<u32> {
        match &self.rep {
            Rep::Subspace(b) => Ok(b.rank() as u32),
            Rep::Divisor(d) => {
                let factors = match self.ring.spec() {
                    RingSpec::Modular(n) | RingSpec::PrimeField(n) => factorize(*n),
                    _ => unreachable!(),
                };
                if factors.len() != 1 {
                    return Err(Error::NotLocal(self.ring.to_string()));
                }
                let (p, k) = factors[0];
                let j = factorize(*d)
                    .iter()
                    .find(|(q, _)| *q == p)
                    .map_or(0, |(_, e)| *e);
                Ok(k - j.min(k))
            }
            Rep::IntGen(_) => Err(Error::UnsupportedRing(
                self.ring.to_string(),
                "Z ideals have no F_p dimension".into(),
            )),
        }
    }

    /// Every element of the ideal (finite rings; used by tests and reports).
    pub fn elements(&self, budget: u64) -> Result<Vec<RingElement>> {
        match &self.rep {
            Rep::Subspace(b) => {
                let p = self.ring.coeff_prime().expect("subspace ideals have a prime");
                let rank = b.rank() as u32;
                let count = (p as u128).pow(rank);
                if count > budget as u128 {
                    return Err(Error::BudgetExceeded(format!(
                        "ideal has {count} elements, budget {budget}"
                    )));
                }
                let mut out = Vec::with_capacity(count as usize);
                for idx in 0..count as u64 {
                    let mut acc = self.ring.zero();
                    let mut rest = idx;
                    for row in &b.rows {
                        let c = rest % p;
                        rest /= p;
                        if c != 0 {
                            let scaled = self.ring.mul(
                                &self.ring.from_i64(c as i64),
                                &RingElement::Coeffs(row.clone()),
                            );
                            acc = self.ring.add(&acc, &scaled);
                        }
                    }
                    out.push(acc);
                }
                out.sort();
                out.dedup();
                Ok(out)
            }
            Rep::Divisor(d) => {
                let n = match self.ring.spec() {
                    RingSpec::Modular(n) | RingSpec::PrimeField(n) => *n,
                    _ => unreachable!(),
                };
                Ok((0..n).step_by(*d as usize).map(RingElement::Residue).collect())
            }
            Rep::IntGen(_) => Err(Error::UnsupportedRing(
                self.ring.to_string(),
                "Z ideals are infinite".into(),
            )),
        }
    }

    fn closed_under_ring_multiplication(&self) -> bool {
        let Rep::Subspace(b) = &self.rep else {
            return true;
        };
        let p = self.ring.coeff_prime().expect("subspace ideals have a prime");
        let field = Fp::new(p);
        (0..self.ring.vars().len()).all(|i| {
            let v = self.ring.var_element(i).expect("variable index in range");
            b.rows.iter().all(|row| {
                let RingElement::Coeffs(prod) =
                    self.ring.mul(&RingElement::Coeffs(row.clone()), &v)
                else {
                    unreachable!()
                };
                linalg::in_span(&field, b, prod)
            })
        })
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.generator_strings().join(","))
    }
}

/// The maximal ideal of a local ring: span of the variables, `(p)` for
/// `Z/p^k`, zero for a field.
pub fn maximal_ideal(ring: &Ring) -> Result<Ideal> {
    let gens = ring.maximal_ideal_generators()?;
    Ideal::span(ring, &gens)
}

/// The socle `ann(m)` of an artinian local ring.
pub fn socle(ring: &Ring) -> Result<Ideal> {
    maximal_ideal(ring)?.annihilator()
}

/// Socle dimension over the residue field; by Nakayama this equals the
/// minimal generator count of the socle (the maximal ideal kills it).
pub fn socle_dimension(ring: &Ring) -> Result<u32> {
    socle(ring)?.min_generators()
}

/// An artinian local ring is Gorenstein iff its socle is 1-dimensional.
pub fn is_gorenstein(ring: &Ring) -> Result<bool> {
    Ok(socle_dimension(ring)? == 1)
}
