//! The reduced character ring presented on the weight basis.
//!
//! Three nested views of the same ring are kept in lockstep:
//!
//! * [`GrXiElement`] — the full ξ-extended form. At each weight of even rank it
//!   stores the pair `(m, k)` from `m + k·ξ`; at odd rank the two gradings are
//!   interchangeable and only the total survives, stored as `(m, 0)`.
//! * the plus quotient (`ξ ↦ 1`, total multiplicities) — plain weight→integer maps;
//! * [`GrMinusElement`] — the minus quotient (`ξ ↦ −1`, signed multiplicities),
//!   with odd-rank coefficients reduced mod 2.
//!
//! Products are driven by the structure constant [`sc`], which matches the
//! matrix-level tensor decomposition computed in [`crate::clifford`]; the full
//! ξ-form product is reconstructed from the total and signed parts of each
//! pairwise product. [`psi_h`] embeds the minus quotient into the spoiled wedge
//! algebra on positions.

use crate::error::QError;
use crate::exterior::{Flavor, GaussInt, SpoiledElement};
use crate::weight::{concat_merge_sign, sequence_perm_sign, Weight};
use num::{BigRational, Zero};
use std::collections::BTreeMap;

/// Signed structure constant of the reduced ring on weight classes.
///
/// Zero unless the nonzero supports are disjoint and at least one rank is even;
/// otherwise `±1`: the interleaving sign of merging the two weights into their
/// sum, corrected by `−1` exactly when both scale factors are purely imaginary.
pub fn sc(lambda: &Weight, mu: &Weight) -> i64 {
    assert_eq!(lambda.n(), mu.n(), "structure constants need equal lengths");
    let disjoint = lambda
        .entries()
        .iter()
        .zip(mu.entries())
        .all(|(a, b)| a.is_zero() || b.is_zero());
    if !disjoint {
        return 0;
    }
    if lambda.rank() % 2 == 1 && mu.rank() % 2 == 1 {
        return 0;
    }
    let sum = lambda.plus(mu);
    let merge = concat_merge_sign(lambda, mu, &sum);
    let both_imaginary = lambda.phase_is_imaginary() && mu.phase_is_imaginary();
    if both_imaginary {
        -merge
    } else {
        merge
    }
}

/// Checks that a total-multiplicity map and a signed-multiplicity map can come
/// from one ξ-form element: coefficients agree mod 2 everywhere, and the signed
/// coefficient at every odd-rank weight lies in `{0, 1}`.
pub fn check_image_pm(plus: &BTreeMap<Weight, i64>, minus: &BTreeMap<Weight, i64>) -> bool {
    let mut weights: Vec<&Weight> = plus.keys().collect();
    weights.extend(minus.keys());
    weights.sort();
    weights.dedup();
    for w in weights {
        let p = plus.get(w).copied().unwrap_or(0);
        let q = minus.get(w).copied().unwrap_or(0);
        if (p - q) % 2 != 0 {
            return false;
        }
        if w.rank() % 2 == 1 && !(0..=1).contains(&q) {
            return false;
        }
    }
    true
}

/// An element of the ξ-extended ring: weight → `(m, k)` meaning `m + k·ξ` times
/// the class of that weight. Odd-rank weights store `(total, 0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrXiElement {
    n: usize,
    terms: BTreeMap<Weight, (i64, i64)>,
}

impl GrXiElement {
    pub fn zero(n: usize) -> Self {
        GrXiElement { n, terms: BTreeMap::new() }
    }

    /// The class of the module attached to one weight.
    pub fn from_c(lambda: &Weight) -> Self {
        let mut out = Self::zero(lambda.n());
        out.add_term(lambda.clone(), (1, 0));
        out
    }

    /// The class of the parity shift of that module: `ξ` times the class, which
    /// is `(0, 1)` at even rank and again the class itself at odd rank.
    pub fn from_shifted_c(lambda: &Weight) -> Self {
        Self::from_c(lambda).xi_mul()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, (i64, i64))> {
        self.terms.iter().map(|(w, c)| (w, *c))
    }

    pub fn coeff(&self, w: &Weight) -> (i64, i64) {
        self.terms.get(w).copied().unwrap_or((0, 0))
    }

    /// Accumulates `(m, k)` at a weight, folding `k` into `m` at odd rank.
    pub fn add_term(&mut self, w: Weight, (m, k): (i64, i64)) {
        assert_eq!(w.n(), self.n, "weight length mismatch");
        let (m, k) = if w.rank() % 2 == 1 { (m + k, 0) } else { (m, k) };
        let slot = self.terms.entry(w.clone()).or_insert((0, 0));
        slot.0 += m;
        slot.1 += k;
        if *slot == (0, 0) {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &GrXiElement) -> Result<GrXiElement, QError> {
        if self.n != other.n {
            return Err(QError::Incompatible("rank mismatch".into()));
        }
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), *c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> GrXiElement {
        let mut out = Self::zero(self.n);
        for (w, (m, k)) in &self.terms {
            out.add_term(w.clone(), (-m, -k));
        }
        out
    }

    /// Multiplication by `ξ`: swaps `m` and `k` at even rank, fixes odd rank.
    pub fn xi_mul(&self) -> GrXiElement {
        let mut out = Self::zero(self.n);
        for (w, (m, k)) in &self.terms {
            if w.rank() % 2 == 0 {
                out.add_term(w.clone(), (*k, *m));
            } else {
                out.add_term(w.clone(), (*m, *k));
            }
        }
        out
    }

    /// Total multiplicities (`ξ ↦ 1`).
    pub fn to_plus(&self) -> BTreeMap<Weight, i64> {
        let mut out = BTreeMap::new();
        for (w, (m, k)) in &self.terms {
            let total = m + k;
            if total != 0 {
                out.insert(w.clone(), total);
            }
        }
        out
    }

    /// Signed multiplicities (`ξ ↦ −1`), reduced mod 2 at odd rank.
    pub fn to_minus(&self) -> GrMinusElement {
        let mut out = GrMinusElement::zero(self.n);
        for (w, (m, k)) in &self.terms {
            out.add_term(w.clone(), m - k);
        }
        out
    }

    /// Ring product. Each pairwise product of weight classes has total part
    /// `2^{n_λ + n_μ − n_{λ+μ}}` and signed part [`sc`]; the `(m, k)` pair at the
    /// sum weight is reconstructed from those two numbers.
    pub fn mul(&self, other: &GrXiElement) -> Result<GrXiElement, QError> {
        if self.n != other.n {
            return Err(QError::Incompatible("rank mismatch".into()));
        }
        let mut out = Self::zero(self.n);
        for (la, (m1, k1)) in &self.terms {
            for (mu, (m2, k2)) in &other.terms {
                let sum = la.plus(mu);
                let log_total = la.n_clifford() + mu.n_clifford() - sum.n_clifford();
                let total_unit = 1i64.checked_shl(log_total).expect("pair dimension overflow");
                let s = (m1 + k1) * (m2 + k2) * total_unit;
                if sum.rank() % 2 == 1 {
                    out.add_term(sum, (s, 0));
                } else {
                    let d = (m1 - k1) * (m2 - k2) * sc(la, mu);
                    assert_eq!((s - d) % 2, 0, "grading reconstruction parity");
                    out.add_term(sum, ((s + d) / 2, (s - d) / 2));
                }
            }
        }
        Ok(out)
    }

    /// The second duality: fixes every class except at rank ≡ 2 mod 4, where it
    /// swaps the two gradings.
    pub fn dual_sharp(&self) -> GrXiElement {
        let mut out = Self::zero(self.n);
        for (w, (m, k)) in &self.terms {
            if w.rank() % 4 == 2 {
                out.add_term(w.clone(), (*k, *m));
            } else {
                out.add_term(w.clone(), (*m, *k));
            }
        }
        out
    }

    /// The dimension character: each weight class of rank `2h` or `2h+1`
    /// contributes `(m + k) · 2^h` at its weight.
    pub fn ch_t(&self) -> BTreeMap<Weight, i64> {
        let mut out = BTreeMap::new();
        for (w, (m, k)) in &self.terms {
            let dim = 1i64.checked_shl(w.n_clifford()).expect("dimension overflow");
            let v = (m + k) * dim;
            let slot = out.entry(w.clone()).or_insert(0);
            *slot += v;
            if *slot == 0 {
                out.remove(w);
            }
        }
        out
    }
}

/// An element of the signed quotient: weight → integer coefficient, with
/// odd-rank coefficients normalized into `{0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrMinusElement {
    n: usize,
    terms: BTreeMap<Weight, i64>,
}

impl GrMinusElement {
    pub fn zero(n: usize) -> Self {
        GrMinusElement { n, terms: BTreeMap::new() }
    }

    pub fn from_c(lambda: &Weight) -> Self {
        let mut out = Self::zero(lambda.n());
        out.add_term(lambda.clone(), 1);
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.terms.iter().map(|(w, c)| (w, *c))
    }

    pub fn coeff(&self, w: &Weight) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, w: Weight, c: i64) {
        assert_eq!(w.n(), self.n, "weight length mismatch");
        let slot = self.terms.entry(w.clone()).or_insert(0);
        *slot += c;
        if w.rank() % 2 == 1 {
            *slot = slot.rem_euclid(2);
        }
        if *slot == 0 {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &GrMinusElement) -> Result<GrMinusElement, QError> {
        if self.n != other.n {
            return Err(QError::Incompatible("rank mismatch".into()));
        }
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), *c);
        }
        Ok(out)
    }

    /// Additive inverse (identity on the 2-torsion odd-rank part).
    pub fn neg(&self) -> GrMinusElement {
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn scale(&self, s: i64) -> GrMinusElement {
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * s);
        }
        out
    }

    /// Ring product, bilinear over [`sc`].
    pub fn mul(&self, other: &GrMinusElement) -> Result<GrMinusElement, QError> {
        if self.n != other.n {
            return Err(QError::Incompatible("rank mismatch".into()));
        }
        let mut out = Self::zero(self.n);
        for (la, c1) in &self.terms {
            for (mu, c2) in &other.terms {
                let s = sc(la, mu);
                if s != 0 {
                    out.add_term(la.plus(mu), c1 * c2 * s);
                }
            }
        }
        Ok(out)
    }

    /// The Weyl-group action: each class moves to its permuted weight with the
    /// canonical-monomial reordering sign.
    pub fn weyl_act(&self, w: &crate::weight::Perm) -> GrMinusElement {
        let mut out = Self::zero(self.n);
        for (wt, c) in &self.terms {
            let (moved, sign) = crate::weight::weyl_act(w, wt);
            out.add_term(moved, c * sign);
        }
        out
    }

    /// The contragredient duality on classes: negate the weight, keep the coefficient.
    pub fn dual_star(&self) -> GrMinusElement {
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            out.add_term(w.neg(), *c);
        }
        out
    }
}

/// Embeds the signed quotient into the spoiled wedge algebra on positions.
///
/// Each weight class maps to its weight together with one position monomial:
/// the nonzero positions in the canonical order (value descending, ties by
/// position descending) wedged left to right, then stored ascending with the
/// reordering sign folded into the coefficient, which also picks up `i` when
/// the squared scale factor of the weight is negative.
pub fn psi_h(x: &GrMinusElement) -> Vec<(Weight, SpoiledElement)> {
    let n = x.n();
    let mut out = Vec::new();
    for (w, c) in x.terms() {
        let canon = w.canonical_positions();
        let mut ascending = canon.clone();
        ascending.sort_unstable();
        let sign = sequence_perm_sign(&canon, &ascending);
        let phase_imaginary = w.phase_is_imaginary();
        let base = if phase_imaginary { GaussInt::i_unit() } else { GaussInt::one() };
        let coeff = base.scale(c * sign);
        let mono: Vec<BigRational> = ascending
            .iter()
            .map(|&p| BigRational::from_integer(((p + 1) as i64).into()))
            .collect();
        let elt = SpoiledElement::monomial(Flavor::Position, n, mono, coeff)
            .expect("canonical positions are strictly increasing and fit the bound");
        out.push((w.clone(), elt));
    }
    out
}
