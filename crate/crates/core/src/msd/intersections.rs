//! Intersection numbers of the divisor of genus 3 curves carrying a
//! differential of type `(6; -2)` with two test curves in the boundary.
//!
//! `A` fixes a general genus 2 curve and attaches an elliptic tail at a
//! generic point. `C` fixes a general genus 2 curve `X_2` and an elliptic
//! curve `X_1` and lets the attaching point `q_2` move along `X_2`.

use serde::Serialize;

use super::closed_form::{
    degree_g1_second_kind, degree_g2_one_zero, degree_g2_second_kind_622, elliptic_count, WEIERSTRASS_G2,
};
use super::counting::{Contribution, CountReport, Factor};
use crate::error::Result;

/// One configuration ruled out in the computation of `A`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExcludedCase {
    pub case: String,
    pub configuration: String,
    pub reason: String,
    pub impossible: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectionA {
    pub value: u64,
    pub cases: Vec<ExcludedCase>,
}

fn excluded(case: &str, configuration: &str, reason: &str) -> ExcludedCase {
    ExcludedCase {
        case: case.into(),
        configuration: configuration.into(),
        reason: reason.into(),
        impossible: true,
    }
}

/// The curve `A` never meets the divisor: in each of the four placements of
/// the zero `z` and pole `w` on the two components the attaching point would
/// have to be special on the genus 2 curve, but it is generic.
pub fn intersection_with_a() -> IntersectionA {
    let cases = vec![
        excluded(
            "a",
            "z on the elliptic tail, w on the genus 2 component",
            "(4;-2) in genus 2 has projective dimension 3, so only finitely many points can carry the pole",
        ),
        excluded(
            "b",
            "w on the elliptic tail, z on the genus 2 component",
            "(6;-4) in genus 2 has projective dimension 3, so the node cannot be generic",
        ),
        excluded(
            "c",
            "z and w on the elliptic tail",
            "the genus 2 differential has a double zero at the node, forcing a Weierstrass point",
        ),
        excluded(
            "d",
            "z and w on the genus 2 component",
            "residueless (6;-2,-2) in genus 2 has dimension 3, so the node is special",
        ),
    ];
    let value = cases.iter().filter(|c| !c.impossible).count() as u64;
    IntersectionA { value, cases }
}

/// Intersection of the divisor with `C`, summed over the four configurations
/// of multi-scale differentials on curves of `C`.
pub fn intersection_with_c() -> Result<CountReport> {
    let cite = "test curve C";
    let entries = vec![
        Contribution::new(
            "a",
            vec![
                Factor::new(
                    "differentials of type (6;-6) on X_1",
                    elliptic_count(6)?,
                    "a^2 - 1 at a=6",
                ),
                Factor::new(
                    "points q_2 for (4;-2) on X_2",
                    degree_g2_one_zero(2)?,
                    "one-zero degree at a=2",
                ),
            ],
            1,
            cite,
        )?,
        Contribution::new(
            "b",
            vec![
                Factor::new(
                    "differentials of type (2;-2) on X_1",
                    elliptic_count(2)?,
                    "a^2 - 1 at a=2",
                ),
                Factor::new(
                    "points q_2 for (6;-4) on X_2",
                    degree_g2_one_zero(4)?,
                    "one-zero degree at a=4",
                ),
            ],
            1,
            cite,
        )?,
        Contribution::new(
            "c",
            vec![
                Factor::new("Weierstrass points of X_2", WEIERSTRASS_G2, "genus 2"),
                Factor::new(
                    "residueless (6;-2,-4) on X_1",
                    degree_g1_second_kind(4)?,
                    "second-kind degree at a=4",
                ),
            ],
            1,
            cite,
        )?,
        Contribution::new(
            "d",
            vec![
                Factor::new(
                    "residueless (6;-2,-2) on X_2",
                    degree_g2_second_kind_622()?,
                    "genus 2 degree",
                ),
                Factor::new("choice of double pole", 2, "two double poles"),
            ],
            1,
            cite,
        )?,
    ];
    Ok(CountReport::new("intersection with C", entries, 1))
}
