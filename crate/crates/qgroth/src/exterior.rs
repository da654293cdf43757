//! The spoiled wedge algebra shared by both models of the reduced ring.
//!
//! A *spoiled* superalgebra keeps ordinary integer (here: Gaussian-integer)
//! coefficients in even degree, but its odd part is 2-torsion and multiplies to
//! zero: `2·odd = odd·odd = 0`. Both the position model (monomials `ξ_{i₁}…ξ_{i_j}`
//! over positions) and the value model (monomials `v_{j₁}∧…∧v_{j_k}` over nonzero
//! rational indices) are instances, differing only in what the indices mean — so
//! one sparse element type with a flavor tag serves both.
//!
//! Elements are truncated at a mandatory degree bound (the ideal generated by
//! wedges of more than `bound` factors is quotiented away, eagerly at every
//! product), which keeps equality structural.

use crate::error::QError;
use crate::weight::{abar_of, core_multiset};
use num::BigRational;
use std::collections::BTreeMap;
use std::fmt;

/// A Gaussian integer `re + im·i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GaussInt {
    pub re: i64,
    pub im: i64,
}

impl GaussInt {
    pub fn zero() -> Self {
        GaussInt { re: 0, im: 0 }
    }

    pub fn one() -> Self {
        GaussInt { re: 1, im: 0 }
    }

    /// The imaginary unit.
    pub fn i_unit() -> Self {
        GaussInt { re: 0, im: 1 }
    }

    pub fn from_int(v: i64) -> Self {
        GaussInt { re: v, im: 0 }
    }

    pub fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }

    pub fn add(self, other: GaussInt) -> GaussInt {
        GaussInt { re: self.re + other.re, im: self.im + other.im }
    }

    pub fn neg(self) -> GaussInt {
        GaussInt { re: -self.re, im: -self.im }
    }

    pub fn mul(self, other: GaussInt) -> GaussInt {
        GaussInt {
            re: self.re * other.re - self.im * other.im,
            im: self.re * other.im + self.im * other.re,
        }
    }

    /// Scalar multiple.
    pub fn scale(self, s: i64) -> GaussInt {
        GaussInt { re: self.re * s, im: self.im * s }
    }

    /// Reduction mod `2ℤ[i]`, represented with `re, im ∈ {0, 1}`.
    pub fn mod2(self) -> GaussInt {
        GaussInt { re: self.re.rem_euclid(2), im: self.im.rem_euclid(2) }
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re, self.im) {
            (0, 0) => write!(f, "0"),
            (re, 0) => write!(f, "{re}"),
            (0, 1) => write!(f, "i"),
            (0, -1) => write!(f, "-i"),
            (0, im) => write!(f, "{im}i"),
            (re, im) if im > 0 => write!(f, "{re}+{im}i"),
            (re, im) => write!(f, "{re}{im}i"),
        }
    }
}

/// What the monomial indices of a spoiled element mean.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// Indices are nonzero rational *values* (the model `⋀V/Jₙ`).
    Value,
    /// Indices are 1-based *positions* (the model on `ξ₁, …, ξₙ`).
    Position,
}

impl Flavor {
    /// Wire spelling: `"value"` or `"xi"`.
    pub fn as_str(self) -> &'static str {
        match self {
            Flavor::Value => "value",
            Flavor::Position => "xi",
        }
    }

    pub fn from_str_tag(s: &str) -> Result<Self, QError> {
        match s {
            "value" => Ok(Flavor::Value),
            "xi" => Ok(Flavor::Position),
            other => Err(QError::Parse(format!("unknown flavor {other:?}"))),
        }
    }
}

/// A strictly increasing wedge monomial (empty = the scalar 1).
pub type Monomial = Vec<BigRational>;

/// A finitely supported sum of wedge monomials with spoiled coefficients:
/// full Gaussian integers in even degree, mod-2 Gaussian integers in odd degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpoiledElement {
    flavor: Flavor,
    bound: usize,
    terms: BTreeMap<Monomial, GaussInt>,
}

impl SpoiledElement {
    /// The zero element.
    pub fn zero(flavor: Flavor, bound: usize) -> Self {
        SpoiledElement { flavor, bound, terms: BTreeMap::new() }
    }

    /// A scalar multiple of the empty monomial.
    pub fn scalar(flavor: Flavor, bound: usize, c: GaussInt) -> Self {
        let mut out = Self::zero(flavor, bound);
        out.add_term(Vec::new(), c);
        out
    }

    /// A single monomial; the index list must be strictly increasing and may not
    /// exceed the bound.
    pub fn monomial(
        flavor: Flavor,
        bound: usize,
        indices: Monomial,
        c: GaussInt,
    ) -> Result<Self, QError> {
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(QError::Parse("monomial indices must strictly increase".into()));
        }
        if indices.len() > bound {
            return Err(QError::Parse(format!(
                "monomial of degree {} exceeds bound {bound}",
                indices.len()
            )));
        }
        let mut out = Self::zero(flavor, bound);
        out.add_term(indices, c);
        Ok(out)
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The stored terms (monomial → coefficient).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, GaussInt)> {
        self.terms.iter().map(|(m, c)| (m, *c))
    }

    /// Coefficient of the empty monomial.
    pub fn scalar_part(&self) -> GaussInt {
        self.terms.get(&Vec::new()).copied().unwrap_or_else(GaussInt::zero)
    }

    /// Adds one term, enforcing the truncation and the spoiled coefficient
    /// domain (odd-degree coefficients live mod 2).
    pub fn add_term(&mut self, mono: Monomial, c: GaussInt) {
        if mono.len() > self.bound {
            return;
        }
        let odd = mono.len() % 2 == 1;
        let c = if odd { c.mod2() } else { c };
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(mono.clone()).or_insert_with(GaussInt::zero);
        *slot = slot.add(c);
        let normalized = if odd { slot.mod2() } else { *slot };
        if normalized.is_zero() {
            self.terms.remove(&mono);
        } else {
            self.terms.insert(mono, normalized);
        }
    }

    /// Sum; operands must share flavor and bound.
    pub fn add(&self, other: &SpoiledElement) -> Result<SpoiledElement, QError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), *c);
        }
        Ok(out)
    }

    /// Additive inverse (identity on the 2-torsion odd part).
    pub fn neg(&self) -> SpoiledElement {
        let mut out = Self::zero(self.flavor, self.bound);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.neg());
        }
        out
    }

    /// The spoiled wedge product: overlapping index sets and odd×odd pairs give
    /// zero, merges pick up the interleaving sign, and monomials above the bound
    /// are cut.
    pub fn wedge_mul(&self, other: &SpoiledElement) -> Result<SpoiledElement, QError> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.flavor, self.bound);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if ma.len() % 2 == 1 && mb.len() % 2 == 1 {
                    continue;
                }
                if ma.len() + mb.len() > self.bound {
                    continue;
                }
                let Some((merged, sign)) = merge_monomials(ma, mb) else {
                    continue;
                };
                out.add_term(merged, ca.mul(*cb).scale(sign));
            }
        }
        Ok(out)
    }

    /// Projection onto the monomials whose index multiset has the given core
    /// (value flavor only).
    pub fn core_component(&self, core: &[BigRational]) -> Result<SpoiledElement, QError> {
        if self.flavor != Flavor::Value {
            return Err(QError::Incompatible(
                "core projection needs value-flavor indices".into(),
            ));
        }
        let mut out = Self::zero(self.flavor, self.bound);
        for (m, c) in &self.terms {
            if core_multiset(m.iter().cloned()) == core {
                out.add_term(m.clone(), *c);
            }
        }
        Ok(out)
    }

    /// Projection onto the monomials of the given secondary grade (value flavor only).
    pub fn abar_component(&self, p: u8) -> Result<SpoiledElement, QError> {
        if self.flavor != Flavor::Value {
            return Err(QError::Incompatible(
                "grade projection needs value-flavor indices".into(),
            ));
        }
        let mut out = Self::zero(self.flavor, self.bound);
        for (m, c) in &self.terms {
            if abar_of(m) == p {
                out.add_term(m.clone(), *c);
            }
        }
        Ok(out)
    }

    /// The same element in a tighter (or looser) truncation; long monomials drop.
    pub fn rebound(&self, bound: usize) -> SpoiledElement {
        let mut out = Self::zero(self.flavor, bound);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), *c);
        }
        out
    }

    fn check_compatible(&self, other: &SpoiledElement) -> Result<(), QError> {
        if self.flavor != other.flavor {
            return Err(QError::Incompatible("flavor mismatch".into()));
        }
        if self.bound != other.bound {
            return Err(QError::Incompatible(format!(
                "degree bounds differ: {} vs {}",
                self.bound, other.bound
            )));
        }
        Ok(())
    }
}

/// Merges two strictly increasing monomials; `None` when they share an index,
/// otherwise the merged monomial and the interleaving sign `(−1)^{#inversions}`.
fn merge_monomials(a: &Monomial, b: &Monomial) -> Option<(Monomial, i64)> {
    let mut merged = Vec::with_capacity(a.len() + b.len());
    let mut inversions = 0usize;
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Equal => return None,
            std::cmp::Ordering::Less => {
                merged.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                // b[j] jumps over the remaining entries of a.
                inversions += a.len() - i;
                merged.push(b[j].clone());
                j += 1;
            }
        }
    }
    merged.extend_from_slice(&a[i..]);
    merged.extend_from_slice(&b[j..]);
    let sign = if inversions % 2 == 0 { 1 } else { -1 };
    Some((merged, sign))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn mono(flavor: Flavor, bound: usize, idx: &[i64], c: GaussInt) -> SpoiledElement {
        SpoiledElement::monomial(flavor, bound, idx.iter().map(|&v| rat(v)).collect(), c)
            .unwrap()
    }

    #[test]
    fn gauss_arithmetic() {
        let one_plus_i = GaussInt { re: 1, im: 1 };
        assert_eq!(one_plus_i.mul(one_plus_i), GaussInt { re: 0, im: 2 });
        assert_eq!(GaussInt::i_unit().mul(GaussInt::i_unit()), GaussInt::from_int(-1));
        assert_eq!(GaussInt { re: -1, im: -3 }.mod2(), GaussInt { re: 1, im: 1 });
        assert_eq!(GaussInt { re: 2, im: -3 }.to_string(), "2-3i");
        assert_eq!(GaussInt::i_unit().neg().to_string(), "-i");
    }

    #[test]
    fn repeated_index_kills_the_product() {
        let v1 = mono(Flavor::Value, 4, &[1], GaussInt::one());
        assert!(v1.wedge_mul(&v1).unwrap().is_zero());
        let v12 = mono(Flavor::Value, 4, &[1, 2], GaussInt::one());
        let v23 = mono(Flavor::Value, 4, &[2, 3], GaussInt::one());
        assert!(v12.wedge_mul(&v23).unwrap().is_zero());
    }

    #[test]
    fn odd_times_odd_is_spoiled_to_zero() {
        let v1 = mono(Flavor::Value, 4, &[1], GaussInt::one());
        let v2 = mono(Flavor::Value, 4, &[2], GaussInt::one());
        assert!(v2.wedge_mul(&v1).unwrap().is_zero());
    }

    #[test]
    fn doubling_an_odd_term_gives_zero() {
        let v1 = mono(Flavor::Value, 4, &[1], GaussInt::one());
        assert!(v1.add(&v1).unwrap().is_zero());
        // And an even term doubles normally.
        let v12 = mono(Flavor::Value, 4, &[1, 2], GaussInt::one());
        let doubled = v12.add(&v12).unwrap();
        assert_eq!(doubled.terms().next().unwrap().1, GaussInt::from_int(2));
    }

    #[test]
    fn even_merge_signs_and_truncation() {
        // {1,3}·{2,4}: the single inversion (3 over 2) gives −v₁∧v₂∧v₃∧v₄.
        let a = mono(Flavor::Value, 4, &[1, 3], GaussInt::one());
        let b = mono(Flavor::Value, 4, &[2, 4], GaussInt::one());
        let p = a.wedge_mul(&b).unwrap();
        let expected = mono(Flavor::Value, 4, &[1, 2, 3, 4], GaussInt::from_int(-1));
        assert_eq!(p, expected);

        // Same product under a degree-3 truncation collapses.
        let a3 = mono(Flavor::Value, 3, &[1, 3], GaussInt::one());
        let b3 = mono(Flavor::Value, 3, &[2, 4], GaussInt::one());
        assert!(a3.wedge_mul(&b3).unwrap().is_zero());
    }

    #[test]
    fn even_part_is_supercommutative() {
        let a = mono(Flavor::Value, 6, &[1, 4], GaussInt::from_int(2));
        let b = mono(Flavor::Value, 6, &[2, 3], GaussInt::from_int(3));
        assert_eq!(a.wedge_mul(&b).unwrap(), b.wedge_mul(&a).unwrap());
    }

    #[test]
    fn odd_even_products_reduce_mod_two() {
        let odd = mono(Flavor::Value, 4, &[1], GaussInt::one());
        let even = mono(Flavor::Value, 4, &[2, 3], GaussInt::from_int(3));
        let p = odd.wedge_mul(&even).unwrap();
        // 3 ≡ 1 mod 2 on the odd result.
        let expected = mono(Flavor::Value, 4, &[1, 2, 3], GaussInt::one());
        assert_eq!(p, expected);
    }

    #[test]
    fn associativity_spot_check() {
        let a = mono(Flavor::Value, 6, &[1, 5], GaussInt::one());
        let b = mono(Flavor::Value, 6, &[2, 4], GaussInt::from_int(-1));
        let c = mono(Flavor::Value, 6, &[3, 6], GaussInt::i_unit());
        let left = a.wedge_mul(&b).unwrap().wedge_mul(&c).unwrap();
        let right = a.wedge_mul(&b.wedge_mul(&c).unwrap()).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn core_projection() {
        let mut x = mono(Flavor::Value, 4, &[-1, 1], GaussInt::one());
        x.add_term(vec![rat(1), rat(2)], GaussInt::one());
        let empty_core = x.core_component(&[]).unwrap();
        assert_eq!(empty_core, mono(Flavor::Value, 4, &[-1, 1], GaussInt::one()));
        let core21 = x.core_component(&[rat(2), rat(1)]).unwrap();
        assert_eq!(core21, mono(Flavor::Value, 4, &[1, 2], GaussInt::one()));
        // A core bigger than the bound can never occur.
        let big: Vec<BigRational> = (1..=5).map(rat).collect();
        assert!(x.core_component(&big).unwrap().is_zero());
    }

    #[test]
    fn abar_projection() {
        let x = mono(Flavor::Value, 4, &[1, 2], GaussInt::one());
        assert!(x.abar_component(0).unwrap().is_zero());
        assert_eq!(x.abar_component(1).unwrap(), x);
        let s = SpoiledElement::scalar(Flavor::Value, 4, GaussInt::one());
        assert_eq!(s.abar_component(0).unwrap(), s);
        let pair = mono(Flavor::Value, 4, &[-1, 1], GaussInt::one());
        assert_eq!(pair.abar_component(0).unwrap(), pair);
    }

    #[test]
    fn position_flavor_rejects_value_projections() {
        let x = mono(Flavor::Position, 4, &[1, 2], GaussInt::one());
        assert!(x.core_component(&[]).is_err());
        assert!(x.abar_component(0).is_err());
    }

    #[test]
    fn flavor_and_bound_mismatches_error() {
        let a = mono(Flavor::Value, 4, &[1], GaussInt::one());
        let b = mono(Flavor::Position, 4, &[1], GaussInt::one());
        assert!(a.wedge_mul(&b).is_err());
        let c = mono(Flavor::Value, 5, &[1], GaussInt::one());
        assert!(a.add(&c).is_err());
    }

    #[test]
    fn constructor_validates_monomials() {
        assert!(SpoiledElement::monomial(
            Flavor::Value,
            4,
            vec![rat(2), rat(1)],
            GaussInt::one()
        )
        .is_err());
        assert!(SpoiledElement::monomial(
            Flavor::Value,
            2,
            vec![rat(1), rat(2), rat(3)],
            GaussInt::one()
        )
        .is_err());
    }

    #[test]
    fn rebound_truncates() {
        let x = mono(Flavor::Value, 4, &[1, 2, 3, 4], GaussInt::one());
        assert!(x.rebound(3).is_zero());
        assert_eq!(x.rebound(4), x);
    }
}
