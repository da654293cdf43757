//! Supercharacters of Verma modules and the rank-2 irreducible table.
//!
//! A Verma module restricts to its odd Cartan subalgebra as a sum of Clifford
//! classes indexed by sums of negative roots.  Each class enters with a
//! coefficient in `{0, ±1}` ([`un_minus_coeff`]): the coefficient is nonzero
//! exactly when the indexing weight splits into position-disjoint root blocks
//! with pairwise distinct multiplicities per chain, which happens exactly when
//! the equal-magnitude entries alternate in sign along the position axis.
//!
//! The module also provides the closed irreducible-supercharacter table for
//! `n = 2` ([`sch_l_q2`]) and two structural checkers ([`check_block_support`],
//! [`check_mod4`]) used as regression properties on supercharacter outputs.

use std::collections::{BTreeMap, BTreeSet};

use num::{BigRational, One, Signed, Zero};

use crate::cartan::{sc, GrMinusElement};
use crate::error::QError;
use crate::invariant::ABasisElement;
use crate::weight::Weight;

/// Whether `ν` is a nonnegative integer combination of differences
/// `ε_p − ε_q` with `p > q`: all entries integral, every prefix sum
/// nonpositive, and the total sum zero.
pub fn in_negative_cone(nu: &Weight) -> bool {
    let mut prefix = BigRational::zero();
    for i in 0..nu.n() {
        let v = nu.entry(i);
        if !v.is_integer() {
            return false;
        }
        prefix += v;
        if prefix.is_positive() {
            return false;
        }
    }
    prefix.is_zero()
}

/// A weight supported on `{q, p}` with value `−k` at `q` and `+k` at `p`.
fn root_multiple(n: usize, q: usize, p: usize, k: &BigRational) -> Weight {
    let mut entries = vec![BigRational::zero(); n];
    entries[q] = -k.clone();
    entries[p] = k.clone();
    Weight::new(entries)
}

/// Sign of the product of the Clifford classes of pairwise position-disjoint
/// even-rank weights, folded left to right.
fn fold_sign(factors: &[Weight]) -> i64 {
    let mut acc = factors[0].clone();
    let mut sign = 1i64;
    for f in &factors[1..] {
        let s = sc(&acc, f);
        debug_assert!(s != 0, "disjoint even-rank product must not vanish");
        sign *= s;
        acc = acc.plus(f);
    }
    sign
}

/// The matched-pair factors of `ν` listed with their negative end first,
/// sorted by that position.  `None` when no admissible pairing survives.
///
/// A nonzero coefficient requires every equal-magnitude class of support
/// positions, read in increasing position order, to alternate strictly
/// negative, positive, negative, positive, …; consecutive pairing is then the
/// unique decomposition into disjoint blocks, and every other pairing cancels
/// against a partner of opposite sign.
fn unique_pairing(nu: &Weight) -> Option<Vec<Weight>> {
    let mut classes: BTreeMap<BigRational, Vec<usize>> = BTreeMap::new();
    for i in 0..nu.n() {
        let v = nu.entry(i);
        if !v.is_zero() {
            classes.entry(v.abs()).or_default().push(i);
        }
    }
    let mut factors = Vec::new();
    for (magnitude, positions) in &classes {
        if positions.len() % 2 != 0 {
            return None;
        }
        for (idx, &pos) in positions.iter().enumerate() {
            let want_negative = idx % 2 == 0;
            if nu.entry(pos).is_negative() != want_negative {
                return None;
            }
        }
        for pair in positions.chunks(2) {
            factors.push(root_multiple(nu.n(), pair[0], pair[1], magnitude));
        }
    }
    factors.sort_by_key(|f| f.nonzero_positions()[0]);
    Some(factors)
}

/// The coefficient in `{0, ±1}` of the Clifford class of `ν` in the odd-Cartan
/// restriction of the negative-part enveloping algebra.
///
/// Errors when `ν` lies outside the negative root cone.
pub fn un_minus_coeff(nu: &Weight) -> Result<i64, QError> {
    if !in_negative_cone(nu) {
        return Err(QError::Incompatible(format!(
            "not in the negative root cone: {nu}"
        )));
    }
    if nu.is_zero() {
        return Ok(1);
    }
    match unique_pairing(nu) {
        None => Ok(0),
        Some(factors) => Ok(fold_sign(&factors)),
    }
}

/// Reference implementation of [`un_minus_coeff`]: sums the signed Clifford
/// products over every decomposition of `ν` into position-disjoint blocks,
/// i.e. over every way of matching each negative entry with a later positive
/// entry of equal magnitude.
///
/// Guarded against large inputs: the positive-entry total must stay below 21.
pub fn un_minus_coeff_bruteforce(nu: &Weight) -> Result<i64, QError> {
    if !in_negative_cone(nu) {
        return Err(QError::Incompatible(format!(
            "not in the negative root cone: {nu}"
        )));
    }
    let height: BigRational = (0..nu.n())
        .map(|i| nu.entry(i))
        .filter(|v| v.is_positive())
        .sum();
    if height > BigRational::from_integer(20.into()) {
        return Err(QError::ScaleGuard(format!(
            "cone vector of height {height} exceeds the exhaustive-pairing budget"
        )));
    }
    if nu.is_zero() {
        return Ok(1);
    }
    let support = nu.nonzero_positions();
    let mut used = vec![false; support.len()];
    let mut factors = Vec::new();
    let mut total = 0i64;
    pairing_sum(nu, &support, &mut used, &mut factors, &mut total);
    Ok(total)
}

/// Recursively matches the first unmatched support position (which must carry
/// a negative entry) against each later position carrying the negated value,
/// accumulating the fold sign of every complete matching.
fn pairing_sum(
    nu: &Weight,
    support: &[usize],
    used: &mut [bool],
    factors: &mut Vec<Weight>,
    total: &mut i64,
) {
    let Some(first) = (0..support.len()).find(|&i| !used[i]) else {
        *total += fold_sign(factors);
        return;
    };
    let q = support[first];
    if !nu.entry(q).is_negative() {
        return;
    }
    let want = -nu.entry(q).clone();
    for j in first + 1..support.len() {
        if used[j] || *nu.entry(support[j]) != want {
            continue;
        }
        used[first] = true;
        used[j] = true;
        factors.push(root_multiple(nu.n(), q, support[j], &want));
        pairing_sum(nu, support, used, factors, total);
        factors.pop();
        used[first] = false;
        used[j] = false;
    }
}

/// The odd-Cartan supercharacter of the Verma module with highest weight `λ`,
/// truncated to cone vectors of height at most `depth`.
///
/// Every contributing cone vector is supported on the zero positions of `λ`
/// (classes with overlapping position support multiply to zero), so the cost
/// grows with the number of zero entries and the depth, not with `n`.  At
/// depth 0, or whenever `λ` has at most one zero entry, the result is the
/// single class of `λ` itself.
pub fn sch_verma(lambda: &Weight, depth: u32) -> GrMinusElement {
    let n = lambda.n();
    let zeros: Vec<usize> = (0..n).filter(|&i| lambda.entry(i).is_zero()).collect();
    let mut candidates = BTreeSet::new();
    let mut pairs = Vec::new();
    let mut used = vec![false; zeros.len()];
    collect_cone_vectors(
        n,
        &zeros,
        &mut used,
        depth as i64,
        &mut pairs,
        &mut candidates,
    );
    let class_of_lambda = GrMinusElement::from_c(lambda);
    let mut out = GrMinusElement::zero(n);
    for nu in candidates {
        let m = un_minus_coeff(&nu).expect("generated vectors lie in the cone");
        if m == 0 {
            continue;
        }
        let term = GrMinusElement::from_c(&nu)
            .mul(&class_of_lambda)
            .expect("ambient rank is shared");
        out = out.add(&term.scale(m)).expect("ambient rank is shared");
    }
    out
}

/// Enumerates every matching of the listed positions into (negative, positive)
/// pairs with integer magnitudes `k ≥ 1` summing to at most `budget`, leaving
/// any subset of positions untouched, and records the resulting weights.
fn collect_cone_vectors(
    n: usize,
    zeros: &[usize],
    used: &mut [bool],
    budget: i64,
    pairs: &mut Vec<(usize, usize, i64)>,
    out: &mut BTreeSet<Weight>,
) {
    let Some(first) = (0..zeros.len()).find(|&i| !used[i]) else {
        let mut entries = vec![BigRational::zero(); n];
        for &(q, p, k) in pairs.iter() {
            entries[q] = BigRational::from_integer((-k).into());
            entries[p] = BigRational::from_integer(k.into());
        }
        out.insert(Weight::new(entries));
        return;
    };
    used[first] = true;
    collect_cone_vectors(n, zeros, used, budget, pairs, out);
    for j in first + 1..zeros.len() {
        if used[j] {
            continue;
        }
        used[j] = true;
        for k in 1..=budget {
            pairs.push((zeros[first], zeros[j], k));
            collect_cone_vectors(n, zeros, used, budget - k, pairs, out);
            pairs.pop();
        }
        used[j] = false;
    }
    used[first] = false;
}

/// The irreducible supercharacter table for `n = 2` in the invariant basis.
///
/// A dominant weight whose two entries do not cancel spans its own orbit class
/// with leading coefficient 1, giving the single term `a_λ`; this covers both
/// entries nonzero as well as exactly one zero entry.  The cancelling family
/// `λ = (s, −s)` produces the ladder `Σ a_{(v,−v)}` with `v` stepping by 1
/// down from `s` to 1 (integral `s`) or to 1/2 (half-integral `s`).  The zero
/// weight is the class of the trivial module, `a_0`.
pub fn sch_l_q2(lambda: &Weight) -> Result<ABasisElement, QError> {
    if lambda.n() != 2 {
        return Err(QError::Incompatible(format!(
            "rank-2 table requires n = 2, got n = {}",
            lambda.n()
        )));
    }
    if !lambda.is_dominant() {
        return Err(QError::Incompatible(format!("not dominant: {lambda}")));
    }
    let top = lambda.entry(0).clone();
    if !(&top + lambda.entry(1)).is_zero() {
        return ABasisElement::from_a(lambda);
    }
    if top.is_zero() {
        return ABasisElement::from_a(&Weight::zero(2));
    }
    let mut v = if top.is_integer() {
        BigRational::one()
    } else {
        BigRational::new(1.into(), 2.into())
    };
    let mut out = ABasisElement::zero(2);
    while v <= top {
        let rung = Weight::new(vec![v.clone(), -v.clone()]);
        out = out.add(&ABasisElement::from_a(&rung)?)?;
        v += BigRational::one();
    }
    Ok(out)
}

/// Whether every weight in the support of `x` has the same core as `λ`,
/// i.e. lies in the block of `λ`.
pub fn check_block_support(x: &GrMinusElement, lambda: &Weight) -> bool {
    let core = lambda.core();
    x.terms().all(|(w, _)| w.core() == core)
}

/// Whether no support weight of `x` violates the even-rank congruence: when
/// both `λ` and a support weight have even rank, their ranks must agree
/// modulo 4.
pub fn check_mod4(x: &GrMinusElement, lambda: &Weight) -> bool {
    if lambda.rank() % 2 != 0 {
        return true;
    }
    let lr = lambda.rank() as i64;
    x.terms()
        .all(|(w, _)| w.rank() % 2 != 0 || (w.rank() as i64 - lr).rem_euclid(4) == 0)
}
