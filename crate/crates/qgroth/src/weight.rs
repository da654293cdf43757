//! Weights of q(n), their combinatorial profile, and the Weyl-group action.
//!
//! A weight is a list of `n` rationals `λ = (λ₁, …, λₙ)`. Almost everything in the
//! ring structure is driven by a handful of derived data implemented here:
//!
//! - the *nonzero support* and its cardinality `rank_F` (the rank of the form
//!   `(H, H′) ↦ λ([H, H′])` on the odd Cartan), whose parity splits weights into
//!   the classes `I0` and `I1`;
//! - the *canonical position order*: nonzero positions sorted by entry value
//!   descending, ties by position descending. This order fixes the Clifford
//!   product `T_λ` of odd Cartan generators and, with it, every sign convention
//!   downstream (structure constants, Weyl signs, wedge monomials);
//! - the scalar `t(λ)` with `t(λ)² = (−1)^{k(k−1)/2}·∏_{λᵢ≠0} λᵢ`, which fixes the
//!   grading of the Clifford module `C(λ)`;
//! - the *core*: the multiset of nonzero entries after cancelling all `(a, −a)`
//!   pairs. Cores index blocks, and their monoid structure `A ⋄ B = core(A ⊎ B)`
//!   mirrors the ring's block decomposition.

use crate::error::QError;
use crate::quad::{rational_str, QuadNum};
use num::{BigRational, Signed, Zero};
use std::fmt;
use std::str::FromStr;

/// Parity class of a weight: `I0` for even `rank_F`, `I1` for odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParityClass {
    I0,
    I1,
}

impl ParityClass {
    /// The wire spelling, `"I0"` or `"I1"`.
    pub fn as_str(self) -> &'static str {
        match self {
            ParityClass::I0 => "I0",
            ParityClass::I1 => "I1",
        }
    }
}

impl fmt::Display for ParityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A weight `λ = (λ₁, …, λₙ)` of q(n).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    entries: Vec<BigRational>,
}

impl Weight {
    /// Builds a weight from its entries; `n` is the list length.  The empty
    /// weight (rank 0) is allowed: it is the unique weight of the trivial
    /// ambient rank reached by dropping every direction.
    pub fn new(entries: Vec<BigRational>) -> Self {
        Weight { entries }
    }

    /// The zero weight of rank `n`.
    pub fn zero(n: usize) -> Self {
        Weight::new(vec![BigRational::zero(); n])
    }

    /// Builds a weight from integer entries (test convenience).
    pub fn from_ints(entries: &[i64]) -> Self {
        Weight::new(entries.iter().map(|&v| BigRational::from_integer(v.into())).collect())
    }

    /// The ambient rank `n`.
    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// All entries.
    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    /// The `i`-th entry (0-based).
    pub fn entry(&self, i: usize) -> &BigRational {
        &self.entries[i]
    }

    /// Whether every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Entrywise negation.
    pub fn neg(&self) -> Weight {
        Weight::new(self.entries.iter().map(|v| -v).collect())
    }

    /// Positions (0-based, ascending) with nonzero entry.
    pub fn nonzero_positions(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| !self.entries[i].is_zero()).collect()
    }

    /// Number of nonzero entries: the rank of the form `λ([·,·])` on the odd Cartan.
    pub fn rank(&self) -> usize {
        self.nonzero_positions().len()
    }

    /// Number of zero entries.
    pub fn zero_count(&self) -> usize {
        self.n() - self.rank()
    }

    /// `I0` for even rank, `I1` for odd.
    pub fn parity_class(&self) -> ParityClass {
        if self.rank() % 2 == 0 {
            ParityClass::I0
        } else {
            ParityClass::I1
        }
    }

    /// `⌊(rank+1)/2⌋`: the exponent in `dim C(λ) = 2^{n_λ}`.
    pub fn n_clifford(&self) -> u32 {
        ((self.rank() + 1) / 2) as u32
    }

    /// Total dimension `2^{n_λ}` of the Clifford module `C(λ)`.
    pub fn clifford_total_dim(&self) -> u64 {
        1u64 << self.n_clifford()
    }

    /// Graded dimension `(even, odd)` of `C(λ)`: `(1, 0)` for the zero weight,
    /// two equal halves otherwise.
    pub fn clifford_graded_dim(&self) -> (u64, u64) {
        if self.rank() == 0 {
            (1, 0)
        } else {
            let half = self.clifford_total_dim() / 2;
            (half, half)
        }
    }

    /// Nonzero entry values in descending order (with multiplicity).
    pub fn nonzero_values_desc(&self) -> Vec<BigRational> {
        let mut vals: Vec<BigRational> =
            self.entries.iter().filter(|v| !v.is_zero()).cloned().collect();
        vals.sort_by(|a, b| b.cmp(a));
        vals
    }

    /// The canonical position order: nonzero positions sorted by entry value
    /// descending, ties broken by position descending. `T_λ` is the product of
    /// odd Cartan generators in exactly this order, and wedge monomials carry
    /// their sign relative to it.
    pub fn canonical_positions(&self) -> Vec<usize> {
        let mut pos = self.nonzero_positions();
        pos.sort_by(|&a, &b| {
            self.entries[b]
                .cmp(&self.entries[a])
                .then(b.cmp(&a))
        });
        pos
    }

    /// Whether `λᵢ − λᵢ₊₁ ∈ ℕ` throughout, with equal consecutive entries only at 0.
    pub fn is_dominant(&self) -> bool {
        self.entries.windows(2).all(|w| {
            let d = &w[0] - &w[1];
            if d.is_negative() || !d.is_integer() {
                return false;
            }
            !d.is_zero() || w[0].is_zero()
        })
    }

    /// Whether `λᵢ + λⱼ ≠ 0` for all `i, j` (including `i = j`, so any zero entry
    /// makes the weight atypical).
    pub fn is_typical(&self) -> bool {
        for (i, a) in self.entries.iter().enumerate() {
            for b in &self.entries[i..] {
                if (a + b).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Whether every entry is an integer.
    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(BigRational::is_integer)
    }

    /// Whether every entry is an integer plus 1/2.
    pub fn is_half_integral(&self) -> bool {
        let half = BigRational::new(1.into(), 2.into());
        self.entries.iter().all(|v| (v - &half).is_integer())
    }

    /// `t(λ)² = (−1)^{k(k−1)/2} · ∏_{λᵢ≠0} λᵢ` where `k` is the rank.
    pub fn t_squared(&self) -> BigRational {
        let k = self.rank();
        let mut prod: BigRational =
            self.entries.iter().filter(|v| !v.is_zero()).product();
        if k_pairs_sign(k) < 0 {
            prod = -prod;
        }
        prod
    }

    /// Whether the phase of `t(λ)` is `i` (true exactly when `t(λ)² < 0`).
    pub fn phase_is_imaginary(&self) -> bool {
        self.t_squared().is_negative()
    }

    /// The grading scalar `t(λ)`: the root of `t(λ)²` with positive real or
    /// positive imaginary part, i.e. in `ℝ₊·{1, i}`.
    pub fn t_value(&self) -> QuadNum {
        QuadNum::sqrt_of_rational(&self.t_squared())
            .expect("t² of a guard-checked weight stays factorable")
    }

    /// The phase of `t(λ)` as a number: `1` or `i`.
    pub fn phase(&self) -> QuadNum {
        if self.phase_is_imaginary() {
            QuadNum::i()
        } else {
            QuadNum::one()
        }
    }

    /// The core of the entry multiset: nonzero entries with all `(a, −a)` pairs removed.
    pub fn core(&self) -> Vec<BigRational> {
        core_multiset(self.entries.iter().cloned())
    }

    /// Entrywise sum; ranks must agree.
    pub fn plus(&self, other: &Weight) -> Weight {
        assert_eq!(self.n(), other.n(), "weight rank mismatch");
        Weight::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Entries sorted descending (the dominance pattern of the orbit).
    pub fn sorted_descending(&self) -> Weight {
        let mut entries = self.entries.clone();
        entries.sort_by(|a, b| b.cmp(a));
        Weight::new(entries)
    }

    /// The dominant representative of the Weyl orbit together with a permutation
    /// carrying `λ` to it. Fails when the orbit contains no dominant weight,
    /// which happens exactly when a nonzero value repeats.
    pub fn dominant_representative(&self) -> Result<(Weight, Perm), QError> {
        let vals = self.nonzero_values_desc();
        if vals.windows(2).any(|w| w[0] == w[1]) {
            return Err(QError::NotRegularDominant(format!(
                "repeated nonzero value in ({self})"
            )));
        }
        // Stable sort of positions by entry descending: zeros keep their relative order.
        let mut order: Vec<usize> = (0..self.n()).collect();
        order.sort_by(|&a, &b| self.entries[b].cmp(&self.entries[a]).then(a.cmp(&b)));
        // order[j] = position of λ that lands in slot j, so w(order[j]) = j.
        let mut image = vec![0usize; self.n()];
        for (j, &i) in order.iter().enumerate() {
            image[i] = j;
        }
        let w = Perm::new(image);
        let (sorted, _) = weyl_act(&w, self);
        Ok((sorted, w))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(rational_str).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight({self})")
    }
}

impl FromStr for Weight {
    type Err = QError;

    /// Parses `"3,1,0,-2"` or `"3/2,-1/2"`; the Unicode minus sign is accepted.
    fn from_str(s: &str) -> Result<Self, QError> {
        let normalized = s.replace('−', "-");
        let entries: Result<Vec<BigRational>, QError> = normalized
            .split(',')
            .map(|part| {
                let part = part.trim();
                BigRational::from_str(part)
                    .map_err(|_| QError::Parse(format!("bad weight entry {part:?}")))
            })
            .collect();
        let entries = entries?;
        if entries.is_empty() {
            return Err(QError::Parse("empty weight".into()));
        }
        Ok(Weight::new(entries))
    }
}

impl std::ops::Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        self.plus(rhs)
    }
}

/// `(−1)^{k(k−1)/2}`.
pub fn k_pairs_sign(k: usize) -> i64 {
    if (k * (k.saturating_sub(1)) / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Core of a rational multiset: drop zeros, then cancel `(a, −a)` pairs maximally.
/// The result is sorted descending.
pub fn core_multiset(values: impl IntoIterator<Item = BigRational>) -> Vec<BigRational> {
    use std::collections::BTreeMap;
    let mut count: BTreeMap<BigRational, i64> = BTreeMap::new();
    for v in values {
        if v.is_zero() {
            continue;
        }
        if v.is_positive() {
            *count.entry(v).or_default() += 1;
        } else {
            *count.entry(-v).or_default() -= 1;
        }
    }
    let mut out = Vec::new();
    for (v, c) in count {
        for _ in 0..c.abs() {
            out.push(if c > 0 { v.clone() } else { -&v });
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// The monoid product of cores: `A ⋄ B = core(A ⊎ B)`.
pub fn diamond(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    core_multiset(a.iter().chain(b).cloned())
}

/// The `ℤ₂` grading of a core-like multiset: with `p` positive and `q` negative
/// entries, `(p − q)/2 mod 2` for even cardinality and `(p − q − 1)/2 mod 2` for odd.
pub fn abar_of(values: &[BigRational]) -> u8 {
    let p = values.iter().filter(|v| v.is_positive()).count() as i64;
    let q = values.len() as i64 - p;
    let num = if (p + q) % 2 == 0 { p - q } else { p - q - 1 };
    debug_assert!(num % 2 == 0, "grading numerator must be even");
    ((num / 2).rem_euclid(2)) as u8
}

/// A permutation of `{0, …, n−1}` (wire form is 1-based).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    image: Vec<usize>,
}

impl Perm {
    /// Builds a permutation from its image list: `i ↦ image[i]`.
    pub fn new(image: Vec<usize>) -> Self {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            assert!(v < n && !seen[v], "image list must be a bijection");
            seen[v] = true;
        }
        Perm { image }
    }

    /// The identity on `n` letters.
    pub fn identity(n: usize) -> Self {
        Perm { image: (0..n).collect() }
    }

    /// The transposition of `i` and `j` (0-based) on `n` letters.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut image: Vec<usize> = (0..n).collect();
        image.swap(i, j);
        Perm { image }
    }

    /// Degree `n`.
    pub fn n(&self) -> usize {
        self.image.len()
    }

    /// Image of `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    /// Composition `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n(), "degree mismatch");
        Perm { image: (0..self.n()).map(|i| self.image[other.image[i]]).collect() }
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Perm {
        let mut image = vec![0usize; self.n()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v] = i;
        }
        Perm { image }
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one_based: Vec<usize> = self.image.iter().map(|v| v + 1).collect();
        write!(f, "Perm{one_based:?}")
    }
}

/// Applies `w` to `λ` (entry at `i` moves to `w(i)`) and returns the sign picked
/// up by the canonical monomial: push the canonical position list of `λ` forward
/// through `w`, then count inversions against the canonical list of `wλ`.
pub fn weyl_act(w: &Perm, lambda: &Weight) -> (Weight, i64) {
    assert_eq!(w.n(), lambda.n(), "degree mismatch");
    let mut entries = vec![BigRational::zero(); lambda.n()];
    for i in 0..lambda.n() {
        entries[w.apply(i)] = lambda.entry(i).clone();
    }
    let moved = Weight::new(entries);
    let pushed: Vec<usize> = lambda.canonical_positions().iter().map(|&i| w.apply(i)).collect();
    let sign = sequence_perm_sign(&pushed, &moved.canonical_positions());
    (moved, sign)
}

/// Sign of the permutation carrying the sequence `from` onto `to`
/// (both must enumerate the same set).
pub fn sequence_perm_sign(from: &[usize], to: &[usize]) -> i64 {
    assert_eq!(from.len(), to.len(), "sequence length mismatch");
    let indices: Vec<usize> = from
        .iter()
        .map(|x| to.iter().position(|y| y == x).expect("sequences must match as sets"))
        .collect();
    let mut inversions = 0usize;
    for i in 0..indices.len() {
        for j in i + 1..indices.len() {
            if indices[i] > indices[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The sign from concatenating the canonical monomials of two disjointly
/// supported weights and reordering into the canonical monomial of their sum.
pub fn concat_merge_sign(a: &Weight, b: &Weight, sum: &Weight) -> i64 {
    let mut pushed = a.canonical_positions();
    pushed.extend(b.canonical_positions());
    sequence_perm_sign(&pushed, &sum.canonical_positions())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(w("3,1,0,-2").to_string(), "3,1,0,-2");
        assert_eq!(w("3/2,-1/2").to_string(), "3/2,-1/2");
        assert_eq!(w("3,1,0,−2"), w("3,1,0,-2"));
        assert_eq!(w(" 1 , 0 ").n(), 2);
        assert!("".parse::<Weight>().is_err());
        assert!("1,x".parse::<Weight>().is_err());
    }

    #[test]
    fn classification_profiles() {
        let a = w("2,0,0,1");
        assert_eq!(a.rank(), 2);
        assert_eq!(a.zero_count(), 2);
        assert_eq!(a.parity_class(), ParityClass::I0);
        assert!(!a.is_dominant());
        assert!(!a.is_typical());

        let z = w("0,0,0");
        assert_eq!(z.rank(), 0);
        assert_eq!(z.parity_class(), ParityClass::I0);
        assert!(z.is_dominant());
        assert!(!z.is_typical());

        let d = w("3,1,0,-2");
        assert_eq!(d.rank(), 3);
        assert_eq!(d.parity_class(), ParityClass::I1);
        assert!(d.is_dominant());
        assert!(!d.is_typical());

        let t = w("3,1,-2");
        assert!(t.is_dominant());
        assert!(t.is_typical());
    }

    #[test]
    fn dominance_edge_cases() {
        assert!(w("3,0,-2").is_dominant()); // interior zero
        assert!(!w("1,1,0").is_dominant()); // repeated nonzero
        assert!(w("0,0").is_dominant());
        assert!(!w("1,1/2").is_dominant()); // non-integral difference
        assert!(w("3/2,1/2,-1/2").is_dominant());
    }

    #[test]
    fn clifford_dimensions() {
        assert_eq!(w("0,0,0").clifford_graded_dim(), (1, 0));
        assert_eq!(w("1,0,0").clifford_graded_dim(), (1, 1));
        assert_eq!(w("2,0,0,1").clifford_graded_dim(), (1, 1));
        assert_eq!(w("3,1,-2").clifford_graded_dim(), (2, 2));
        assert_eq!(w("1,2,3,4").clifford_graded_dim(), (2, 2));
        assert_eq!(w("1,2,3,4,5").clifford_graded_dim(), (4, 4));
    }

    #[test]
    fn cores() {
        assert_eq!(w("1,1,-1,-1").core(), Vec::<BigRational>::new());
        assert_eq!(w("1,1,0,0,0,-1").core(), vec![BigRational::from_integer(1.into())]);
        let c21 = w("2,1").core();
        assert_eq!(c21, w("2,1").entries().to_vec());
        // ⋄ examples
        assert_eq!(diamond(&c21, &w("-2,-1").core()), Vec::<BigRational>::new());
        assert_eq!(diamond(&c21, &[]), c21);
        let ones = diamond(&w("1").core(), &w("1").core());
        assert_eq!(ones, w("1,1").entries().to_vec());
    }

    #[test]
    fn core_is_idempotent() {
        let m = w("2,-2,1,1,0,-1");
        let once = m.core();
        assert_eq!(core_multiset(once.iter().cloned()), once);
        assert_eq!(once, w("1").entries().to_vec());
    }

    #[test]
    fn t_data_values() {
        assert_eq!(w("1,-2,0").t_squared(), BigRational::from_integer(2.into()));
        assert!(!w("1,-2,0").phase_is_imaginary());
        assert_eq!(w("0,0,0").t_squared(), BigRational::from_integer(1.into()));
        assert_eq!(w("1,1").t_squared(), BigRational::from_integer((-1).into()));
        assert!(w("1,1").phase_is_imaginary());
        assert_eq!(w("1,1").t_value(), QuadNum::i());
        // Root-pair weights: t((k, −k, 0, …)) = k for k of either parity of position.
        assert_eq!(w("3,-3").t_value(), QuadNum::from_int(3));
        assert_eq!(w("0,2,-2").t_value(), QuadNum::from_int(2));
    }

    #[test]
    fn canonical_order() {
        assert_eq!(w("2,0,0,1").canonical_positions(), vec![0, 3]);
        assert_eq!(w("1,1,0").canonical_positions(), vec![1, 0]);
        assert_eq!(w("2,0,1").canonical_positions(), vec![0, 2]);
        assert_eq!(w("0,-2,-1,0").canonical_positions(), vec![2, 1]);
        assert_eq!(w("0,0").canonical_positions(), Vec::<usize>::new());
    }

    #[test]
    fn weyl_action_signs() {
        let lam = w("1,1,0");
        let swap12 = Perm::transposition(3, 0, 1);
        let (moved, sign) = weyl_act(&swap12, &lam);
        assert_eq!(moved, lam);
        assert_eq!(sign, -1);

        let swap23 = Perm::transposition(3, 1, 2);
        let (moved, sign) = weyl_act(&swap23, &lam);
        assert_eq!(moved, w("1,0,1"));
        assert_eq!(sign, 1);

        let zero = w("0,0,0");
        let (moved, sign) = weyl_act(&swap12, &zero);
        assert_eq!(moved, zero);
        assert_eq!(sign, 1);
    }

    #[test]
    fn weyl_action_is_a_cocycle() {
        // Signs compose: acting by v then w matches acting by w∘v.
        let lam = w("2,0,1,-1");
        let v = Perm::new(vec![1, 2, 0, 3]);
        let u = Perm::transposition(4, 0, 3);
        let (m1, s1) = weyl_act(&v, &lam);
        let (m2, s2) = weyl_act(&u, &m1);
        let (m3, s3) = weyl_act(&u.compose(&v), &lam);
        assert_eq!(m2, m3);
        assert_eq!(s1 * s2, s3);
    }

    #[test]
    fn dominant_representatives() {
        let (d, p) = w("0,3,1,0").dominant_representative().unwrap();
        assert_eq!(d, w("3,1,0,0"));
        let (check, _) = weyl_act(&p, &w("0,3,1,0"));
        assert_eq!(check, d);

        assert!(matches!(
            w("1,1,0").dominant_representative(),
            Err(QError::NotRegularDominant(_))
        ));

        let lam = w("3,1,0,-2");
        let (d, p) = lam.dominant_representative().unwrap();
        assert_eq!(d, lam);
        assert_eq!(p, Perm::identity(4));

        // Interior zero comes out between the signs.
        let (d, _) = w("-2,0,3").dominant_representative().unwrap();
        assert_eq!(d, w("3,0,-2"));
    }

    #[test]
    fn abar_values() {
        let rat = |v: i64| BigRational::from_integer(v.into());
        assert_eq!(abar_of(&[rat(2), rat(1)]), 1);
        assert_eq!(abar_of(&[]), 0);
        assert_eq!(abar_of(&[rat(-2), rat(-1)]), 1);
        assert_eq!(abar_of(&[rat(1), rat(-1)]), 0);
        assert_eq!(abar_of(&[rat(3)]), 0);
        assert_eq!(abar_of(&[rat(-3)]), 1);
    }

    #[test]
    fn merge_signs() {
        let a = w("2,0,0,1");
        let b = w("0,-2,-1,0");
        let sum = &a + &b;
        assert_eq!(sum, w("2,-2,-1,1"));
        assert_eq!(concat_merge_sign(&a, &b, &sum), 1);
        // Swapping the factors costs the product of the rank parities in inversions:
        // here 2·2 = 4 crossings, so the sign stays +1.
        assert_eq!(concat_merge_sign(&b, &a, &sum), 1);
        // An odd×odd pair flips.
        let c = w("1,0");
        let d = w("0,-2");
        assert_eq!(
            concat_merge_sign(&c, &d, &(&c + &d)) * concat_merge_sign(&d, &c, &(&c + &d)),
            -1
        );
    }

    #[test]
    fn t_squared_is_multiplicative_on_disjoint_even_pairs() {
        let a = w("2,0,0,1");
        let b = w("0,-2,-1,0");
        assert_eq!(a.t_squared() * b.t_squared(), (&a + &b).t_squared());
    }

    #[test]
    fn sorting_is_consistent() {
        assert_eq!(w("0,3,-2,0").sorted_descending(), w("3,0,0,-2"));
        assert_eq!(w("1,1,0").sorted_descending(), w("1,1,0"));
    }
}
