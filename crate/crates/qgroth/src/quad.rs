//! Exact arithmetic in multi-quadratic extensions of the rationals.
//!
//! Matrix realizations of the modules `C(λ)` need entries of the form `c·√d` with
//! `c` rational and `d` a (possibly negative) integer: generators scale with `√λ_i`,
//! and the scalars `t(ν)` are square roots of rationals, times a power of `i`.
//! [`QuadNum`] closes these under `+`, `·`, and inversion without any floating point.
//!
//! A value is a finite sum `Σ c_R · √R` where each radicand `R` is kept in *factored*
//! form: a sorted list of distinct primes, optionally led by `-1` (so `√{-1} = i`).
//! Products never factor integers — `√R₁·√R₂ = (∏ R₁∩R₂) · √(R₁ △ R₂)` — and the only
//! place factoring happens is [`QuadNum::sqrt_of_rational`], on caller-supplied input.

use crate::error::QError;
use num::{BigInt, BigRational, One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A factored squarefree radicand: sorted, distinct; `-1` (if present) first,
/// followed by primes in increasing order. The empty list is the rational part.
type Radicand = Vec<i64>;

/// Largest `|numerator·denominator|` accepted by [`QuadNum::sqrt_of_rational`];
/// keeps trial division instantaneous.
const MAX_FACTOR_INPUT: u64 = 1_000_000_000_000;

/// Largest number of distinct radicand primes [`QuadNum::inverse`] will fold over
/// (the Galois-norm product has `2^k` factors).
const MAX_INVERSE_PRIMES: usize = 16;

/// An exact element of a multi-quadratic extension `ℚ(i, √p₁, √p₂, …)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QuadNum {
    /// Radicand → coefficient; zero coefficients are never stored.
    terms: BTreeMap<Radicand, BigRational>,
}

impl QuadNum {
    /// The zero element.
    pub fn zero() -> Self {
        QuadNum::default()
    }

    /// The multiplicative identity.
    pub fn one() -> Self {
        QuadNum::from_int(1)
    }

    /// The imaginary unit `i = √(-1)`.
    pub fn i() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![-1], BigRational::one());
        QuadNum { terms }
    }

    /// Embeds an integer.
    pub fn from_int(v: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    /// Embeds a rational number.
    pub fn from_rational(r: BigRational) -> Self {
        let mut out = QuadNum::default();
        out.add_term(Vec::new(), r);
        out
    }

    /// `√r`, choosing the branch `√r ∈ ℝ₊·{1, i}`: for `r = p/q` this is
    /// `√(pq)/q` with the square part of `pq` pulled out, times `i` when `r < 0`.
    pub fn sqrt_of_rational(r: &BigRational) -> Result<Self, QError> {
        if r.is_zero() {
            return Ok(QuadNum::zero());
        }
        let prod = r.numer() * r.denom();
        let (root, primes) = factor_squarefree(&prod)?;
        let mut radicand = primes;
        if prod.is_negative() {
            radicand.insert(0, -1);
        }
        let coeff = BigRational::new(root, r.denom().clone());
        let mut out = QuadNum::default();
        out.add_term(radicand, coeff);
        Ok(out)
    }

    /// Whether this is the zero element.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value as a rational number, if it lies in `ℚ`.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (rad, c) = self.terms.iter().next().unwrap();
                rad.is_empty().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// The value as an `i64`, if it is a rational integer in range.
    pub fn as_i64(&self) -> Option<i64> {
        let r = self.as_rational()?;
        r.is_integer().then(|| i64::try_from(r.to_integer()).ok())?
    }

    /// Sum.
    pub fn add_ref(&self, other: &QuadNum) -> QuadNum {
        let mut out = self.clone();
        for (rad, c) in &other.terms {
            out.add_term(rad.clone(), c.clone());
        }
        out
    }

    /// Additive inverse.
    pub fn neg_ref(&self) -> QuadNum {
        let terms = self.terms.iter().map(|(r, c)| (r.clone(), -c)).collect();
        QuadNum { terms }
    }

    /// Product, via `√R₁·√R₂ = (∏ R₁∩R₂)·√(R₁ △ R₂)`. The `-1` entry needs no
    /// special case: a shared `-1` contributes the scalar `-1`, which is `i·i`.
    pub fn mul_ref(&self, other: &QuadNum) -> QuadNum {
        let mut out = QuadNum::default();
        for (r1, c1) in &self.terms {
            for (r2, c2) in &other.terms {
                let (scalar, rad) = radical_mul(r1, r2);
                out.add_term(rad, c1 * c2 * BigRational::from_integer(scalar));
            }
        }
        out
    }

    /// Scales by a rational.
    pub fn scaled(&self, s: &BigRational) -> QuadNum {
        if s.is_zero() {
            return QuadNum::zero();
        }
        let terms = self.terms.iter().map(|(r, c)| (r.clone(), c * s)).collect();
        QuadNum { terms }
    }

    /// The image under the automorphism `√d ↦ -√d` for every `d` containing `-1`;
    /// on `ℚ(i)` this is complex conjugation.
    pub fn conj_i(&self) -> QuadNum {
        self.conjugated(&[-1].into_iter().collect())
    }

    /// Multiplicative inverse, via the Galois norm: with `G` generated by the sign
    /// flips `σ_p` of the primes appearing in `self`, the product of all conjugates
    /// `σ(self)`, `σ ≠ id`, times `self`, is a nonzero rational.
    pub fn inverse(&self) -> Result<QuadNum, QError> {
        if self.is_zero() {
            return Err(QError::NotInvertible("division by zero".into()));
        }
        if let Some(r) = self.as_rational() {
            return Ok(QuadNum::from_rational(r.recip()));
        }
        let primes: BTreeSet<i64> = self.terms.keys().flatten().copied().collect();
        if primes.len() > MAX_INVERSE_PRIMES {
            return Err(QError::ScaleGuard(format!(
                "inverse over {} radicand primes (limit {MAX_INVERSE_PRIMES})",
                primes.len()
            )));
        }
        let primes: Vec<i64> = primes.into_iter().collect();
        let mut prod = QuadNum::one();
        for mask in 1u32..1 << primes.len() {
            let flips: BTreeSet<i64> = primes
                .iter()
                .enumerate()
                .filter(|(idx, _)| mask >> idx & 1 == 1)
                .map(|(_, p)| *p)
                .collect();
            prod = prod.mul_ref(&self.conjugated(&flips));
        }
        let norm = prod
            .mul_ref(self)
            .as_rational()
            .expect("Galois norm is rational");
        assert!(!norm.is_zero(), "Galois norm of a nonzero element is nonzero");
        Ok(prod.scaled(&norm.recip()))
    }

    /// Quotient `self / other`.
    pub fn div_ref(&self, other: &QuadNum) -> Result<QuadNum, QError> {
        Ok(self.mul_ref(&other.inverse()?))
    }

    /// Flips the sign of every term whose radicand shares an odd number of
    /// elements with `flips` (the automorphism `∏_{p ∈ flips} σ_p`).
    fn conjugated(&self, flips: &BTreeSet<i64>) -> QuadNum {
        let terms = self
            .terms
            .iter()
            .map(|(rad, c)| {
                let shared = rad.iter().filter(|p| flips.contains(p)).count();
                let c = if shared % 2 == 1 { -c } else { c.clone() };
                (rad.clone(), c)
            })
            .collect();
        QuadNum { terms }
    }

    /// Adds one term, dropping the slot if the coefficient cancels to zero.
    fn add_term(&mut self, rad: Radicand, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(rad).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            let rad = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .unwrap();
            self.terms.remove(&rad);
        }
    }
}

/// `√R₁·√R₂` for factored radicands: the scalar is the product of the shared
/// entries, the new radicand their symmetric difference.
fn radical_mul(r1: &Radicand, r2: &Radicand) -> (BigInt, Radicand) {
    let mut scalar = BigInt::one();
    let mut rad = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < r1.len() && j < r2.len() {
        match r1[i].cmp(&r2[j]) {
            std::cmp::Ordering::Equal => {
                scalar *= r1[i];
                i += 1;
                j += 1;
            }
            std::cmp::Ordering::Less => {
                rad.push(r1[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                rad.push(r2[j]);
                j += 1;
            }
        }
    }
    rad.extend_from_slice(&r1[i..]);
    rad.extend_from_slice(&r2[j..]);
    (scalar, rad)
}

/// Writes `n ≠ 0` as `±(root² · ∏ primes)` with the primes squarefree, by trial
/// division; rejects inputs past [`MAX_FACTOR_INPUT`].
fn factor_squarefree(n: &BigInt) -> Result<(BigInt, Vec<i64>), QError> {
    let mag = n.magnitude();
    let mut m = u64::try_from(mag).map_err(|_| {
        QError::ScaleGuard(format!("radicand magnitude {mag} exceeds {MAX_FACTOR_INPUT}"))
    })?;
    if m > MAX_FACTOR_INPUT {
        return Err(QError::ScaleGuard(format!(
            "radicand magnitude {m} exceeds {MAX_FACTOR_INPUT}"
        )));
    }
    let mut root = 1u64;
    let mut primes = Vec::new();
    let mut d = 2u64;
    while d * d <= m {
        if m % d == 0 {
            let mut e = 0u32;
            while m % d == 0 {
                m /= d;
                e += 1;
            }
            root *= d.pow(e / 2);
            if e % 2 == 1 {
                primes.push(d as i64);
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > 1 {
        primes.push(m as i64);
    }
    Ok((BigInt::from(root), primes))
}

impl fmt::Display for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (rad, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { -c } else { c.clone() };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let imaginary = rad.first() == Some(&-1);
            let body: BigInt = rad.iter().filter(|p| **p != -1).product();
            let radical = !body.is_one();
            if !mag.is_one() || (!imaginary && !radical) {
                write!(f, "{}", rational_str(&mag))?;
            }
            if imaginary {
                write!(f, "i")?;
            }
            if radical {
                write!(f, "√{body}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadNum({self})")
    }
}

/// `3` rather than `3/1`; `3/2` otherwise.
pub fn rational_str(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl std::ops::Add for &QuadNum {
    type Output = QuadNum;
    fn add(self, rhs: &QuadNum) -> QuadNum {
        self.add_ref(rhs)
    }
}

impl std::ops::Sub for &QuadNum {
    type Output = QuadNum;
    fn sub(self, rhs: &QuadNum) -> QuadNum {
        self.add_ref(&rhs.neg_ref())
    }
}

impl std::ops::Mul for &QuadNum {
    type Output = QuadNum;
    fn mul(self, rhs: &QuadNum) -> QuadNum {
        self.mul_ref(rhs)
    }
}

impl std::ops::Neg for &QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    fn sqrt_int(v: i64) -> QuadNum {
        QuadNum::sqrt_of_rational(&rat(v, 1)).unwrap()
    }

    #[test]
    fn real_square_roots_multiply() {
        assert_eq!(&sqrt_int(2) * &sqrt_int(2), QuadNum::from_int(2));
        assert_eq!(&sqrt_int(2) * &sqrt_int(3), sqrt_int(6));
        assert_eq!(&sqrt_int(6) * &sqrt_int(10), &QuadNum::from_int(2) * &sqrt_int(15));
        assert_eq!(&sqrt_int(8) * &sqrt_int(2), QuadNum::from_int(4));
    }

    #[test]
    fn imaginary_square_roots_multiply() {
        assert_eq!(&sqrt_int(-1) * &sqrt_int(-1), QuadNum::from_int(-1));
        assert_eq!(sqrt_int(-1), QuadNum::i());
        assert_eq!(&sqrt_int(-2) * &sqrt_int(-2), QuadNum::from_int(-2));
        // i√2 · i√3 = -√6
        assert_eq!(&sqrt_int(-2) * &sqrt_int(-3), sqrt_int(6).neg_ref());
        // i · i√5 = -√5
        assert_eq!(&QuadNum::i() * &sqrt_int(-5), sqrt_int(5).neg_ref());
    }

    #[test]
    fn sqrt_of_fractions() {
        // √(3/2) = √6 / 2
        let x = QuadNum::sqrt_of_rational(&rat(3, 2)).unwrap();
        assert_eq!(&x * &x, QuadNum::from_rational(rat(3, 2)));
        assert_eq!(x, sqrt_int(6).scaled(&rat(1, 2)));
        // √(-1/4) = i/2
        let y = QuadNum::sqrt_of_rational(&rat(-1, 4)).unwrap();
        assert_eq!(y, QuadNum::i().scaled(&rat(1, 2)));
        // √(9/4) = 3/2, rational again
        let z = QuadNum::sqrt_of_rational(&rat(9, 4)).unwrap();
        assert_eq!(z.as_rational(), Some(rat(3, 2)));
    }

    #[test]
    fn golden_ratio_style_inverse() {
        // (1 + √2)⁻¹ = -1 + √2
        let x = &QuadNum::one() + &sqrt_int(2);
        let expected = &sqrt_int(2) - &QuadNum::one();
        assert_eq!(x.inverse().unwrap(), expected);
        assert_eq!(&x * &x.inverse().unwrap(), QuadNum::one());
    }

    #[test]
    fn complex_inverse() {
        // i⁻¹ = -i, (1+i)⁻¹ = (1-i)/2
        assert_eq!(QuadNum::i().inverse().unwrap(), QuadNum::i().neg_ref());
        let x = &QuadNum::one() + &QuadNum::i();
        let expected = (&QuadNum::one() - &QuadNum::i()).scaled(&rat(1, 2));
        assert_eq!(x.inverse().unwrap(), expected);
    }

    #[test]
    fn three_prime_inverse_round_trips() {
        let x = &(&QuadNum::one() + &sqrt_int(2)) + &(&sqrt_int(3) + &sqrt_int(-5));
        assert_eq!(&x * &x.inverse().unwrap(), QuadNum::one());
    }

    #[test]
    fn conjugate_products_are_rational() {
        let x = &sqrt_int(2) + &sqrt_int(3);
        let y = &sqrt_int(2) - &sqrt_int(3);
        assert_eq!((&x * &y).as_rational(), Some(rat(-1, 1)));
        let z = &QuadNum::one() + &QuadNum::i();
        assert_eq!((&z * &z.conj_i()).as_rational(), Some(rat(2, 1)));
    }

    #[test]
    fn integer_extraction() {
        assert_eq!(QuadNum::from_int(7).as_i64(), Some(7));
        assert_eq!(QuadNum::from_rational(rat(3, 2)).as_i64(), None);
        assert_eq!(sqrt_int(2).as_i64(), None);
        assert_eq!(QuadNum::zero().as_i64(), Some(0));
    }

    #[test]
    fn cancellation_removes_terms() {
        let x = &sqrt_int(2) - &sqrt_int(2);
        assert!(x.is_zero());
        assert_eq!(x, QuadNum::zero());
    }

    #[test]
    fn zero_has_no_inverse() {
        assert!(QuadNum::zero().inverse().is_err());
    }

    #[test]
    fn display_formats() {
        assert_eq!(QuadNum::zero().to_string(), "0");
        assert_eq!(QuadNum::from_int(-3).to_string(), "-3");
        assert_eq!((&QuadNum::one() + &sqrt_int(2)).to_string(), "1 + √2");
        assert_eq!(sqrt_int(-6).scaled(&rat(-1, 2)).to_string(), "-1/2i√6");
        assert_eq!(QuadNum::i().to_string(), "i");
    }

    #[test]
    fn oversized_radicand_is_rejected() {
        let huge = BigRational::from_integer(BigInt::from(10u64.pow(13) + 1));
        assert!(QuadNum::sqrt_of_rational(&huge).is_err());
    }
}
