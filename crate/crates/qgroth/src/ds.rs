//! Rank-drop maps between invariant rings of different ambient ranks.
//!
//! Dropping `r` of the `n` odd Cartan directions induces a ring map from the
//! invariant basis over rank `n` to the one over rank `n − r`: an orbit class
//! survives exactly when its weight carries at least `r` zero entries, and
//! then maps to the class with the same nonzero values.  On the value-monomial
//! model the same map is the degree re-truncation.  A matrix-level restriction
//! oracle cross-checks the class predictions.

use num::Zero;

use crate::clifford::realize_c;
use crate::error::QError;
use crate::exterior::SpoiledElement;
use crate::invariant::{dominant_from_values, ABasisElement};
use crate::weight::Weight;

/// A validated rank drop: source ambient rank and the number of trailing
/// directions removed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DsIndex {
    source: usize,
    drop: usize,
}

impl DsIndex {
    /// Errors when the drop exceeds the source rank.
    pub fn new(source: usize, drop: usize) -> Result<Self, QError> {
        if drop > source {
            return Err(QError::DropExceedsRank);
        }
        Ok(DsIndex { source, drop })
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn drop(&self) -> usize {
        self.drop
    }

    pub fn target(&self) -> usize {
        self.source - self.drop
    }
}

/// The induced map on the invariant basis: `a_μ ↦ 0` when `μ` has fewer than
/// `drop` zero entries, and otherwise the class of the dominant target weight
/// with the same nonzero values.  Linear over the coefficients; in particular
/// it kills every class with a non-integral weight once `drop ≥ 1`, since such
/// weights have no zero entries.
pub fn ds_a(idx: &DsIndex, x: &ABasisElement) -> Result<ABasisElement, QError> {
    if idx.source() != x.n() {
        return Err(QError::Incompatible(format!(
            "element lives over rank {}, index drops from rank {}",
            x.n(),
            idx.source()
        )));
    }
    let mut out = ABasisElement::zero(idx.target());
    for (mu, c) in x.terms() {
        if mu.zero_count() < idx.drop() {
            continue;
        }
        let target = dominant_from_values(&mu.nonzero_values_desc(), idx.target());
        out.add_term(target, c);
    }
    Ok(out)
}

/// The same map on the value-monomial model: re-truncate to the target degree
/// bound, dropping every monomial longer than `n − drop`.
pub fn ds_model(idx: &DsIndex, z: &SpoiledElement) -> Result<SpoiledElement, QError> {
    if idx.source() != z.bound() {
        return Err(QError::Incompatible(format!(
            "element truncated at degree {}, index drops from rank {}",
            z.bound(),
            idx.source()
        )));
    }
    Ok(z.rebound(idx.target()))
}

/// Whether dropping `j` directions and then `i` more equals dropping `i + j`
/// at once on `x`.
pub fn check_composition(i: usize, j: usize, x: &ABasisElement) -> Result<bool, QError> {
    let first = DsIndex::new(x.n(), j)?;
    let second = DsIndex::new(first.target(), i)?;
    let combined = DsIndex::new(x.n(), i + j)?;
    let stepwise = ds_a(&second, &ds_a(&first, x)?)?;
    let direct = ds_a(&combined, x)?;
    Ok(stepwise == direct)
}

/// The class-level prediction of the induced map for a single Clifford class:
/// the truncation of `λ` together with coefficient 1 when every dropped entry
/// is zero, and coefficient 0 otherwise.
pub fn induced_class_prediction(lambda: &Weight, drop: usize) -> Result<(Weight, i64), QError> {
    if drop > lambda.n() {
        return Err(QError::DropExceedsRank);
    }
    let keep = lambda.n() - drop;
    let truncated = Weight::new(lambda.entries()[..keep].to_vec());
    let dropped_all_zero = lambda.entries()[keep..].iter().all(|v| v.is_zero());
    Ok((truncated, i64::from(dropped_all_zero)))
}

/// Reduced multiplicity of the class of `ν` in the matrix restriction of the
/// class of `λ` to the leading `ν.n()` generators: builds the Clifford
/// realization, drops the trailing generators, and extracts the supertrace
/// multiplicity.  Subject to the realization's dimension guard.
pub fn smult_restriction_oracle(lambda: &Weight, nu: &Weight) -> Result<i64, QError> {
    if nu.n() > lambda.n() {
        return Err(QError::Incompatible(format!(
            "target rank {} exceeds source rank {}",
            nu.n(),
            lambda.n()
        )));
    }
    let module = realize_c(lambda)?;
    let restricted = module.restrict(lambda.n() - nu.n())?;
    Ok(restricted.smult(nu))
}

/// Whether every class in `image` (over rank `λ.n() − drop`) satisfies the
/// even-rank congruence against `λ`: when `λ` has even rank, surviving weights
/// of even rank must have rank congruent to `λ`'s modulo 4.  Odd-rank `λ`
/// imposes nothing.
pub fn check_ds_mod4(lambda: &Weight, image: &ABasisElement) -> bool {
    if lambda.rank() % 2 != 0 {
        return true;
    }
    let lr = lambda.rank() as i64;
    image
        .terms()
        .all(|(w, _)| w.rank() % 2 != 0 || (w.rank() as i64 - lr).rem_euclid(4) == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariant::psi_g;
    use crate::supercharacter::sch_l_q2;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    fn a(s: &str) -> ABasisElement {
        ABasisElement::from_a(&w(s)).unwrap()
    }

    #[test]
    fn index_validates_drop_bounds() {
        assert!(matches!(DsIndex::new(2, 3), Err(QError::DropExceedsRank)));
        let idx = DsIndex::new(4, 2).unwrap();
        assert_eq!(idx.source(), 4);
        assert_eq!(idx.drop(), 2);
        assert_eq!(idx.target(), 2);
    }

    #[test]
    fn a_basis_drop_keeps_nonzero_values() {
        let idx = DsIndex::new(4, 2).unwrap();
        assert_eq!(ds_a(&idx, &a("3,1,0,0")).unwrap(), a("3,1"));
        assert!(ds_a(&idx, &a("3,1,0,-2")).unwrap().is_zero());
        let identity = DsIndex::new(4, 0).unwrap();
        let x = a("3,1,0,0").add(&a("2,1,0,-1").scale(3)).unwrap();
        assert_eq!(ds_a(&identity, &x).unwrap(), x);
    }

    #[test]
    fn a_basis_drop_reorders_zeros_into_dominant_position() {
        let idx = DsIndex::new(4, 1).unwrap();
        assert_eq!(ds_a(&idx, &a("3,1,0,0")).unwrap(), a("3,1,0"));
        assert_eq!(ds_a(&idx, &a("2,0,0,-1")).unwrap(), a("2,0,-1"));
    }

    #[test]
    fn a_basis_drop_kills_nonintegral_classes() {
        let idx = DsIndex::new(2, 1).unwrap();
        assert!(ds_a(&idx, &a("1/2,-1/2")).unwrap().is_zero());
        assert!(ds_a(&idx, &a("5/2,1/2")).unwrap().is_zero());
    }

    #[test]
    fn drop_of_full_rank_leaves_scalar_part() {
        let idx = DsIndex::new(2, 2).unwrap();
        let x = ABasisElement::from_a(&Weight::zero(2))
            .unwrap()
            .scale(5)
            .add(&a("1,-1").scale(2))
            .unwrap();
        let image = ds_a(&idx, &x).unwrap();
        assert_eq!(image, ABasisElement::from_a(&Weight::zero(0)).unwrap().scale(5));
    }

    #[test]
    fn rank_mismatch_is_rejected() {
        let idx = DsIndex::new(3, 1).unwrap();
        assert!(ds_a(&idx, &a("3,1")).is_err());
        let z = psi_g(&a("3,1"));
        assert!(ds_model(&idx, &z).is_err());
    }

    #[test]
    fn model_quotient_commutes_with_value_map() {
        let elements = [
            a("3,1,0,0"),
            a("2,1,0,-1").scale(2),
            a("3,1,0,0").add(&a("2,1,0,-1")).unwrap(),
            a("1,0,0,0"),
            a("1,0,0,-1"),
        ];
        for x in &elements {
            for drop in 0..=2 {
                let idx = DsIndex::new(4, drop).unwrap();
                let lhs = psi_g(&ds_a(&idx, x).unwrap());
                let rhs = ds_model(&idx, &psi_g(x)).unwrap();
                assert_eq!(lhs, rhs, "square fails at drop {drop} on {x:?}");
            }
        }
    }

    #[test]
    fn composition_law_holds() {
        let x = a("3,1,0,0")
            .add(&a("2,1,0,-1").scale(2))
            .unwrap()
            .add(&a("1,0,0,0").scale(-1))
            .unwrap();
        assert!(check_composition(1, 1, &x).unwrap());
        assert!(check_composition(2, 0, &x).unwrap());
        assert!(check_composition(0, 2, &x).unwrap());
        assert!(check_composition(2, 2, &x).unwrap());
    }

    #[test]
    fn restriction_oracle_keeps_class_when_dropping_zeros() {
        assert_eq!(smult_restriction_oracle(&w("3,1,0,0"), &w("3,1")).unwrap(), 1);
        assert_eq!(smult_restriction_oracle(&w("3,1"), &w("3,1")).unwrap(), 1);
        assert_eq!(smult_restriction_oracle(&w("3,1,0,0"), &w("2,1")).unwrap(), 0);
        assert_eq!(smult_restriction_oracle(&w("1,0,0"), &w("1,0")).unwrap(), 1);
    }

    #[test]
    fn restriction_oracle_kills_even_rank_targets_on_rank_drop() {
        assert_eq!(smult_restriction_oracle(&w("3,1,-2,0"), &w("3,1")).unwrap(), 0);
        assert_eq!(smult_restriction_oracle(&w("1,1,2"), &w("1,1")).unwrap(), 0);
    }

    #[test]
    fn restriction_retains_two_torsion_residue_on_single_drop() {
        // Dropping one nonzero direction from an even-rank class leaves the
        // odd-rank class once; its reduced multiplicity is the count mod 2,
        // while the induced map predicts zero.  The divergence is confined to
        // odd-rank targets reached by a rank drop of exactly one.
        assert_eq!(smult_restriction_oracle(&w("3,1"), &w("3")).unwrap(), 1);
        let (truncated, predicted) = induced_class_prediction(&w("3,1"), 1).unwrap();
        assert_eq!(truncated, w("3"));
        assert_eq!(predicted, 0);
        // Dropping two nonzero directions doubles the factor count: residue 0.
        assert_eq!(smult_restriction_oracle(&w("1,1,2"), &w("1")).unwrap(), 0);
    }

    #[test]
    fn induced_prediction_trichotomy() {
        let (t, c) = induced_class_prediction(&w("3,1,0,0"), 2).unwrap();
        assert_eq!((t, c), (w("3,1"), 1));
        let (t, c) = induced_class_prediction(&w("3,1,-2,0"), 2).unwrap();
        assert_eq!((t, c), (w("3,1"), 0));
        let (t, c) = induced_class_prediction(&w("2,-1"), 0).unwrap();
        assert_eq!((t, c), (w("2,-1"), 1));
        assert!(matches!(
            induced_class_prediction(&w("2,-1"), 3),
            Err(QError::DropExceedsRank)
        ));
    }

    #[test]
    fn oracle_rejects_growth_and_guards_scale() {
        assert!(smult_restriction_oracle(&w("3"), &w("3,1")).is_err());
    }

    #[test]
    fn mod_four_propagation_on_table_outputs() {
        // Rank-2 irreducible table outputs pushed through a drop of one.
        for lam in [w("3,0"), w("2,-1"), w("3,-3")] {
            let table = sch_l_q2(&lam).unwrap();
            let idx = DsIndex::new(2, 1).unwrap();
            let image = ds_a(&idx, &table).unwrap();
            assert!(check_ds_mod4(&lam, &image), "congruence fails for {lam}");
        }
        // A single-orbit class over rank 4 with two zeros, dropped by two.
        let lam = w("3,1,0,0");
        let idx = DsIndex::new(4, 2).unwrap();
        let image = ds_a(&idx, &a("3,1,0,0")).unwrap();
        assert!(check_ds_mod4(&lam, &image));
    }

    #[test]
    fn kernel_is_spanned_by_low_zero_count_classes() {
        let idx = DsIndex::new(3, 2).unwrap();
        for mu in ["3,1,-2", "2,1,0", "3,0,-1"] {
            assert!(ds_a(&idx, &a(mu)).unwrap().is_zero(), "should die: {mu}");
        }
        for mu in ["3,0,0", "0,0,0", "0,0,-2"] {
            assert!(!ds_a(&idx, &a(mu)).unwrap().is_zero(), "should survive: {mu}");
        }
    }

    #[test]
    fn image_reaches_every_integral_target_class() {
        let idx = DsIndex::new(4, 2).unwrap();
        for target in ["3,1", "2,0", "0,-1", "0,0", "2,-2"] {
            let values = w(target).nonzero_values_desc();
            let source = dominant_from_values(&values, 4);
            let image = ds_a(&idx, &ABasisElement::from_a(&source).unwrap()).unwrap();
            assert_eq!(image, a(target), "missed target {target}");
        }
    }
}
