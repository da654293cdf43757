//! JSON wire formats for every element type the command-line tools exchange.
//!
//! Exact values (weight entries, wedge-monomial indices) always travel as
//! strings — `"3"`, `"-1/2"` — never as floats. Small machine integers
//! (`coeff`, `m`, `k`, `re`, `im`) are plain JSON integers. Emission is
//! byte-deterministic: object keys appear in fixed declaration order and term
//! lists follow the canonical ordering of the underlying element, so equal
//! elements always produce identical bytes.
//!
//! A `"mod2": true` marker is attached to every term whose coefficient lives
//! in a mod-2 group (odd wedge degree, or an odd-rank weight); it is
//! informational on output and validated on input — claiming `mod2` for a
//! full-integer term is rejected, while omitting it is tolerated since the
//! marker is derivable.

use std::str::FromStr;

use num::BigRational;
use serde::{Deserialize, Serialize};

use crate::cartan::{GrMinusElement, GrXiElement};
use crate::error::QError;
use crate::exterior::{Flavor, GaussInt, SpoiledElement};
use crate::invariant::ABasisElement;
use crate::quad::rational_str;
use crate::weight::Weight;

/// Parses one exact rational entry (`"3"`, `"-1/2"`, Unicode minus allowed).
fn parse_rat(s: &str) -> Result<BigRational, QError> {
    let cleaned = s.trim().replace('\u{2212}', "-");
    BigRational::from_str(&cleaned)
        .map_err(|_| QError::Parse(format!("bad rational entry {s:?}")))
}

fn parse_weight_entries(entries: &[String], n: usize) -> Result<Weight, QError> {
    if entries.len() != n {
        return Err(QError::Parse(format!(
            "weight has {} entries but declares n = {n}",
            entries.len()
        )));
    }
    let vals = entries.iter().map(|e| parse_rat(e)).collect::<Result<Vec<_>, _>>()?;
    Ok(Weight::new(vals))
}

fn weight_entry_strings(w: &Weight) -> Vec<String> {
    w.entries().iter().map(rational_str).collect()
}

fn is_false(b: &bool) -> bool {
    !*b
}

// ---------------------------------------------------------------------------
// Weights
// ---------------------------------------------------------------------------

/// `{"n":4,"entries":["3","1","0","-2"]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WeightWire {
    pub n: usize,
    pub entries: Vec<String>,
}

pub fn weight_to_wire(w: &Weight) -> WeightWire {
    WeightWire { n: w.n(), entries: weight_entry_strings(w) }
}

pub fn weight_from_wire(wire: &WeightWire) -> Result<Weight, QError> {
    parse_weight_entries(&wire.entries, wire.n)
}

pub fn weight_to_json(w: &Weight) -> String {
    serde_json::to_string(&weight_to_wire(w)).expect("weight serialization cannot fail")
}

pub fn weight_from_json(s: &str) -> Result<Weight, QError> {
    let wire: WeightWire =
        serde_json::from_str(s).map_err(|e| QError::Parse(format!("bad weight JSON: {e}")))?;
    weight_from_wire(&wire)
}

// ---------------------------------------------------------------------------
// Spoiled exterior elements
// ---------------------------------------------------------------------------

/// `{"flavor":"value","bound":4,"terms":[{"mono":["-1","1"],"re":1,"im":0}]}`
/// with `"mod2":true` on odd-degree terms.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpoiledWire {
    pub flavor: String,
    pub bound: usize,
    pub terms: Vec<SpoiledTermWire>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpoiledTermWire {
    pub mono: Vec<String>,
    pub re: i64,
    pub im: i64,
    #[serde(default, skip_serializing_if = "is_false")]
    pub mod2: bool,
}

pub fn spoiled_to_wire(x: &SpoiledElement) -> SpoiledWire {
    SpoiledWire {
        flavor: x.flavor().as_str().to_string(),
        bound: x.bound(),
        terms: x
            .terms()
            .map(|(mono, c)| SpoiledTermWire {
                mono: mono.iter().map(rational_str).collect(),
                re: c.re,
                im: c.im,
                mod2: mono.len() % 2 == 1,
            })
            .collect(),
    }
}

pub fn spoiled_from_wire(wire: &SpoiledWire) -> Result<SpoiledElement, QError> {
    let flavor = Flavor::from_str_tag(&wire.flavor)?;
    let mut out = SpoiledElement::zero(flavor, wire.bound);
    for term in &wire.terms {
        if term.mod2 && term.mono.len() % 2 == 0 {
            return Err(QError::Parse(
                "mod2 marker on an even-degree monomial".into(),
            ));
        }
        let indices =
            term.mono.iter().map(|e| parse_rat(e)).collect::<Result<Vec<_>, _>>()?;
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(QError::Parse(
                "monomial indices must strictly increase".into(),
            ));
        }
        if indices.len() > wire.bound {
            return Err(QError::Parse(format!(
                "monomial of degree {} exceeds bound {}",
                indices.len(),
                wire.bound
            )));
        }
        if flavor == Flavor::Position {
            for idx in &indices {
                let ok = idx.is_integer()
                    && *idx.numer() >= 1.into()
                    && *idx.numer() <= num::BigInt::from(wire.bound);
                if !ok {
                    return Err(QError::Parse(format!(
                        "position index {} outside 1..={}",
                        idx, wire.bound
                    )));
                }
            }
        }
        out.add_term(indices, GaussInt { re: term.re, im: term.im });
    }
    Ok(out)
}

pub fn spoiled_to_json(x: &SpoiledElement) -> String {
    serde_json::to_string(&spoiled_to_wire(x)).expect("element serialization cannot fail")
}

pub fn spoiled_from_json(s: &str) -> Result<SpoiledElement, QError> {
    let wire: SpoiledWire =
        serde_json::from_str(s).map_err(|e| QError::Parse(format!("bad element JSON: {e}")))?;
    spoiled_from_wire(&wire)
}

// ---------------------------------------------------------------------------
// ξ-graded Clifford-class combinations (basis tag "C")
// ---------------------------------------------------------------------------

/// `{"basis":"C","n":4,"terms":[{"weight":["1","0","0","0"],"m":1,"k":0}]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GrXiWire {
    pub basis: String,
    pub n: usize,
    pub terms: Vec<GrXiTermWire>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GrXiTermWire {
    pub weight: Vec<String>,
    pub m: i64,
    pub k: i64,
}

pub fn gr_xi_to_wire(x: &GrXiElement) -> GrXiWire {
    GrXiWire {
        basis: "C".to_string(),
        n: x.n(),
        terms: x
            .terms()
            .map(|(w, (m, k))| GrXiTermWire {
                weight: weight_entry_strings(w),
                m,
                k,
            })
            .collect(),
    }
}

pub fn gr_xi_from_wire(wire: &GrXiWire) -> Result<GrXiElement, QError> {
    if wire.basis != "C" {
        return Err(QError::Parse(format!(
            "expected basis \"C\", found {:?}",
            wire.basis
        )));
    }
    let mut out = GrXiElement::zero(wire.n);
    for term in &wire.terms {
        let w = parse_weight_entries(&term.weight, wire.n)?;
        out.add_term(w, (term.m, term.k));
    }
    Ok(out)
}

pub fn gr_xi_to_json(x: &GrXiElement) -> String {
    serde_json::to_string(&gr_xi_to_wire(x)).expect("element serialization cannot fail")
}

pub fn gr_xi_from_json(s: &str) -> Result<GrXiElement, QError> {
    let wire: GrXiWire =
        serde_json::from_str(s).map_err(|e| QError::Parse(format!("bad element JSON: {e}")))?;
    gr_xi_from_wire(&wire)
}

// ---------------------------------------------------------------------------
// Reduced-ring elements in the Clifford-class basis (basis tag "C-")
// ---------------------------------------------------------------------------

/// `{"basis":"C-","n":2,"terms":[{"weight":["-1","1"],"coeff":-1}]}`
/// with `"mod2":true` on odd-rank (two-torsion) terms.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GrMinusWire {
    pub basis: String,
    pub n: usize,
    pub terms: Vec<GrMinusTermWire>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GrMinusTermWire {
    pub weight: Vec<String>,
    pub coeff: i64,
    #[serde(default, skip_serializing_if = "is_false")]
    pub mod2: bool,
}

pub fn gr_minus_to_wire(x: &GrMinusElement) -> GrMinusWire {
    GrMinusWire {
        basis: "C-".to_string(),
        n: x.n(),
        terms: x
            .terms()
            .map(|(w, c)| GrMinusTermWire {
                weight: weight_entry_strings(w),
                coeff: c,
                mod2: w.rank() % 2 == 1,
            })
            .collect(),
    }
}

pub fn gr_minus_from_wire(wire: &GrMinusWire) -> Result<GrMinusElement, QError> {
    if wire.basis != "C-" {
        return Err(QError::Parse(format!(
            "expected basis \"C-\", found {:?}",
            wire.basis
        )));
    }
    let mut out = GrMinusElement::zero(wire.n);
    for term in &wire.terms {
        let w = parse_weight_entries(&term.weight, wire.n)?;
        if term.mod2 && w.rank() % 2 == 0 {
            return Err(QError::Parse(
                "mod2 marker on an even-rank weight".into(),
            ));
        }
        out.add_term(w, term.coeff);
    }
    Ok(out)
}

pub fn gr_minus_to_json(x: &GrMinusElement) -> String {
    serde_json::to_string(&gr_minus_to_wire(x)).expect("element serialization cannot fail")
}

pub fn gr_minus_from_json(s: &str) -> Result<GrMinusElement, QError> {
    let wire: GrMinusWire =
        serde_json::from_str(s).map_err(|e| QError::Parse(format!("bad element JSON: {e}")))?;
    gr_minus_from_wire(&wire)
}

// ---------------------------------------------------------------------------
// Symmetric-orbit basis (basis tag "a")
// ---------------------------------------------------------------------------

/// `{"basis":"a","n":4,"terms":[{"weight":["3","1","0","0"],"coeff":1}]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ABasisWire {
    pub basis: String,
    pub n: usize,
    pub terms: Vec<ABasisTermWire>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ABasisTermWire {
    pub weight: Vec<String>,
    pub coeff: i64,
}

pub fn a_basis_to_wire(x: &ABasisElement) -> ABasisWire {
    ABasisWire {
        basis: "a".to_string(),
        n: x.n(),
        terms: x
            .terms()
            .map(|(w, c)| ABasisTermWire {
                weight: weight_entry_strings(w),
                coeff: c,
            })
            .collect(),
    }
}

pub fn a_basis_from_wire(wire: &ABasisWire) -> Result<ABasisElement, QError> {
    if wire.basis != "a" {
        return Err(QError::Parse(format!(
            "expected basis \"a\", found {:?}",
            wire.basis
        )));
    }
    let mut out = ABasisElement::zero(wire.n);
    for term in &wire.terms {
        let w = parse_weight_entries(&term.weight, wire.n)?;
        if !w.is_dominant() {
            return Err(QError::Parse(format!(
                "orbit-basis key {w} is not dominant"
            )));
        }
        out.add_term(w, term.coeff);
    }
    Ok(out)
}

pub fn a_basis_to_json(x: &ABasisElement) -> String {
    serde_json::to_string(&a_basis_to_wire(x)).expect("element serialization cannot fail")
}

pub fn a_basis_from_json(s: &str) -> Result<ABasisElement, QError> {
    let wire: ABasisWire =
        serde_json::from_str(s).map_err(|e| QError::Parse(format!("bad element JSON: {e}")))?;
    a_basis_from_wire(&wire)
}

// ---------------------------------------------------------------------------
// Verification reports
// ---------------------------------------------------------------------------

/// One line of a verification sweep: `{"case":…,"expected":…,"got":…,"pass":…}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub case: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

impl Report {
    pub fn new(
        case: impl Into<String>,
        expected: impl Into<String>,
        got: impl Into<String>,
    ) -> Self {
        let expected = expected.into();
        let got = got.into();
        let pass = expected == got;
        Report { case: case.into(), expected, got, pass }
    }

    /// A report whose pass/fail verdict is decided by the caller rather than
    /// by string equality of `expected` and `got`.
    pub fn judged(
        case: impl Into<String>,
        expected: impl Into<String>,
        got: impl Into<String>,
        pass: bool,
    ) -> Self {
        Report { case: case.into(), expected: expected.into(), got: got.into(), pass }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::Flavor;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn weight_json_has_the_documented_shape() {
        let json = weight_to_json(&w("3,1,0,-2"));
        assert_eq!(json, r#"{"n":4,"entries":["3","1","0","-2"]}"#);
        assert_eq!(weight_from_json(&json).unwrap(), w("3,1,0,-2"));

        let half = weight_to_json(&w("3/2,-1/2"));
        assert_eq!(half, r#"{"n":2,"entries":["3/2","-1/2"]}"#);
        assert_eq!(weight_from_json(&half).unwrap(), w("3/2,-1/2"));
    }

    #[test]
    fn weight_json_round_trips_the_empty_weight() {
        let empty = Weight::new(vec![]);
        let json = weight_to_json(&empty);
        assert_eq!(json, r#"{"n":0,"entries":[]}"#);
        assert_eq!(weight_from_json(&json).unwrap(), empty);
    }

    #[test]
    fn weight_json_rejects_length_mismatch_and_bad_entries() {
        assert!(weight_from_json(r#"{"n":3,"entries":["1","2"]}"#).is_err());
        assert!(weight_from_json(r#"{"n":1,"entries":["x"]}"#).is_err());
        assert!(weight_from_json(r#"{"n":1,"entries":[1]}"#).is_err());
    }

    #[test]
    fn spoiled_json_has_the_documented_shape() {
        let x = SpoiledElement::monomial(
            Flavor::Value,
            4,
            vec![rat(-1, 1), rat(1, 1)],
            GaussInt::one(),
        )
        .unwrap();
        let json = spoiled_to_json(&x);
        assert_eq!(
            json,
            r#"{"flavor":"value","bound":4,"terms":[{"mono":["-1","1"],"re":1,"im":0}]}"#
        );
        assert_eq!(spoiled_from_json(&json).unwrap(), x);
    }

    #[test]
    fn spoiled_json_marks_odd_degree_terms_mod2() {
        let mut x = SpoiledElement::zero(Flavor::Value, 3);
        x.add_term(vec![rat(2, 1)], GaussInt::i_unit());
        let json = spoiled_to_json(&x);
        assert!(json.contains(r#""mod2":true"#));
        assert_eq!(spoiled_from_json(&json).unwrap(), x);

        // The marker is derivable, so omitting it parses to the same element.
        let bare = r#"{"flavor":"value","bound":3,"terms":[{"mono":["2"],"re":0,"im":1}]}"#;
        assert_eq!(spoiled_from_json(bare).unwrap(), x);
    }

    #[test]
    fn spoiled_json_rejects_lying_markers_and_bad_monomials() {
        let lying =
            r#"{"flavor":"value","bound":3,"terms":[{"mono":["1","2"],"re":1,"im":0,"mod2":true}]}"#;
        assert!(spoiled_from_json(lying).is_err());

        let unsorted =
            r#"{"flavor":"value","bound":3,"terms":[{"mono":["2","1"],"re":1,"im":0}]}"#;
        assert!(spoiled_from_json(unsorted).is_err());

        let too_long =
            r#"{"flavor":"value","bound":1,"terms":[{"mono":["1","2"],"re":1,"im":0}]}"#;
        assert!(spoiled_from_json(too_long).is_err());

        let bad_position =
            r#"{"flavor":"xi","bound":3,"terms":[{"mono":["1/2"],"re":1,"im":0,"mod2":true}]}"#;
        assert!(spoiled_from_json(bad_position).is_err());
    }

    #[test]
    fn spoiled_json_round_trips_the_position_flavor() {
        let mut x = SpoiledElement::zero(Flavor::Position, 3);
        x.add_term(
            vec![rat(1, 1), rat(3, 1)],
            GaussInt { re: 2, im: -1 },
        );
        let json = spoiled_to_json(&x);
        assert!(json.contains(r#""flavor":"xi""#));
        assert_eq!(spoiled_from_json(&json).unwrap(), x);
    }

    #[test]
    fn xi_class_json_round_trips_and_validates_its_basis_tag() {
        let x = GrXiElement::from_c(&w("1,0"))
            .mul(&GrXiElement::from_c(&w("0,1")))
            .unwrap();
        let json = gr_xi_to_json(&x);
        assert!(json.starts_with(r#"{"basis":"C","n":2"#));
        let back = gr_xi_from_json(&json).unwrap();
        assert_eq!(back, x);

        let retagged = json.replace(r#""basis":"C""#, r#""basis":"a""#);
        assert!(gr_xi_from_json(&retagged).is_err());
    }

    #[test]
    fn reduced_class_json_marks_odd_rank_terms_mod2() {
        let mut x = GrMinusElement::from_c(&w("3,0,0"));
        x.add_term(w("1,-1,0"), -1);
        let json = gr_minus_to_json(&x);
        assert!(json.starts_with(r#"{"basis":"C-","n":3"#));
        // Odd-rank (3,0,0) carries the marker; even-rank (1,-1,0) does not.
        assert_eq!(json.matches(r#""mod2":true"#).count(), 1);
        assert_eq!(gr_minus_from_json(&json).unwrap(), x);

        let lying = r#"{"basis":"C-","n":2,"terms":[{"weight":["1","-1"],"coeff":1,"mod2":true}]}"#;
        assert!(gr_minus_from_json(&lying).is_err());
    }

    #[test]
    fn reduced_class_json_normalizes_two_torsion_coefficients_on_parse() {
        let negative =
            r#"{"basis":"C-","n":1,"terms":[{"weight":["2"],"coeff":-1,"mod2":true}]}"#;
        let x = gr_minus_from_json(negative).unwrap();
        assert_eq!(x.coeff(&w("2")), 1);
    }

    #[test]
    fn orbit_basis_json_has_the_documented_shape() {
        let x = ABasisElement::from_a(&w("3,1,0,0")).unwrap();
        let json = a_basis_to_json(&x);
        assert_eq!(
            json,
            r#"{"basis":"a","n":4,"terms":[{"weight":["3","1","0","0"],"coeff":1}]}"#
        );
        assert_eq!(a_basis_from_json(&json).unwrap(), x);
    }

    #[test]
    fn orbit_basis_json_rejects_non_dominant_keys() {
        let bad = r#"{"basis":"a","n":2,"terms":[{"weight":["0","1"],"coeff":1}]}"#;
        assert!(a_basis_from_json(bad).is_err());
    }

    #[test]
    fn equal_elements_serialize_to_identical_bytes() {
        let mut p = GrMinusElement::zero(2);
        p.add_term(w("2,-1"), 1);
        p.add_term(w("1,-1"), 3);
        let mut q = GrMinusElement::zero(2);
        q.add_term(w("1,-1"), 3);
        q.add_term(w("2,-1"), 1);
        assert_eq!(gr_minus_to_json(&p), gr_minus_to_json(&q));
    }

    #[test]
    fn report_round_trips_and_judges_equality() {
        let r = Report::new("case-1", "0", "0");
        assert!(r.pass);
        let json = r.to_json();
        assert!(json.starts_with(r#"{"case":"case-1","expected":"0","got":"0","pass":true}"#));
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back.case, "case-1");
        assert!(back.pass);

        let f = Report::new("case-2", "1", "-1");
        assert!(!f.pass);
        let j = Report::judged("case-3", "claimed", "observed", true);
        assert!(j.pass);
    }
}
