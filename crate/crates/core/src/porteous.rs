//! The lambda coefficient of the locus of genus-3 curves carrying a
//! differential with a single zero of order 6 and a double pole.
//!
//! The degeneracy locus of the evaluation map `E_2 -> F` over `X^2` has class
//! `c_3(F - E_2)`; pushing it down to the moduli space and restricting to the
//! interior gives the raw coefficient. That locus also contains a component
//! along the diagonal `w = z` (curves with an abelian differential having a
//! zero of order 4), counted with multiplicity equal to the prong number 5,
//! which is subtracted.

use serde::Serialize;

use crate::chern::{chern_e, chern_f, chern_invert, difference_class, Signature};
use crate::error::{Error, Result};
use crate::pushforward::{pushforward_last, substitute_interior};
use crate::taut::rewrite::Rewrite;
use crate::taut::{parse_expr, Ambient, Generator, Monomial, Rational, TautExpr};

/// The signature whose projection is computed.
pub const SIGNATURE: &str = "6;-2";
/// Pole order of the bundle `E_2` the evaluation map starts from.
pub const POLE_ORDER: u32 = 2;
/// Codimension of the degeneracy locus: rank 4 source, rank 6 target.
pub const PORTEOUS_DEGREE: u32 = 3;
/// Multiplicity of the diagonal component: the prong number at the order-4
/// zero, from the rescaling `s = f^5` of the smoothing family.
pub const DIAGONAL_MULTIPLICITY: u32 = 5;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Stage {
    pub stage: String,
    pub class: TautExpr,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LambdaReport {
    #[serde(serialize_with = "ser_rational")]
    pub raw: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub correction: Rational,
    pub multiplicity: u32,
    #[serde(serialize_with = "ser_rational")]
    pub interior: Rational,
    pub trace: Vec<Stage>,
}

pub(crate) fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

impl LambdaReport {
    pub fn stage(&self, name: &str) -> Option<&TautExpr> {
        self.trace.iter().find(|s| s.stage == name).map(|s| &s.class)
    }
}

/// Coefficient `c` of a class equal to `c * lambda_1`.
pub fn lambda_coefficient(x: &TautExpr) -> Result<Rational> {
    x.single_coefficient_of(&Monomial::generator(Generator::Lambda(1)))
        .ok_or_else(|| Error::Model {
            label: "interior class".into(),
            message: format!("expected a multiple of lambda1, got {x}"),
            citation: "Pic of the interior is generated by lambda1".into(),
        })
}

/// `c(F)` for the diagonal branch: sections of `K(2z)/K(-4z)` at one point,
/// through degree two.
pub fn diagonal_chern_f() -> TautExpr {
    parse_expr("1 + 10*K1 + 35*K1^2", Ambient::new(3, 1)).expect("valid constant")
}

fn diagonal_stages() -> Result<Vec<Stage>> {
    let c_f = diagonal_chern_f();
    let c_e = chern_e(1, 3, 2).map_err(|e| e.at_stage("diagonal c(E)"))?;
    let c2 = difference_class(&c_f, &c_e, 2).map_err(|e| e.at_stage("diagonal c2(F-E)"))?;
    let pushed = pushforward_last(&c2.reduce()).map_err(|e| e.at_stage("diagonal pi1_*"))?;
    let interior = substitute_interior(&pushed).map_err(|e| e.at_stage("diagonal interior"))?;
    Ok(vec![
        Stage {
            stage: "diagonal c(F)".into(),
            class: c_f,
        },
        Stage {
            stage: "diagonal c2(F-E)".into(),
            class: c2,
        },
        Stage {
            stage: "diagonal pi1_*".into(),
            class: pushed,
        },
        Stage {
            stage: "diagonal interior".into(),
            class: interior,
        },
    ])
}

/// The diagonal excess class after pushforward and interior substitution
/// (a multiple of `lambda_1`).
pub fn diagonal_correction() -> Result<TautExpr> {
    Ok(diagonal_stages()?.pop().expect("nonempty").class)
}

/// Runs the whole computation with the canonical reduction order.
pub fn lambda_pipeline() -> Result<LambdaReport> {
    lambda_pipeline_by(|_| 0)
}

/// Same as [`lambda_pipeline`] with a caller-chosen rewrite order in the
/// reduction step.
pub fn lambda_pipeline_by(choose: impl FnMut(&[Rewrite]) -> usize) -> Result<LambdaReport> {
    let sig: Signature = SIGNATURE.parse().map_err(|e: Error| e.at_stage("signature"))?;
    let g = sig.genus();
    let d = PORTEOUS_DEGREE;

    let c_f = chern_f(&sig).map_err(|e| e.at_stage("c(F)"))?;
    let c_e = chern_e(POLE_ORDER, g, d).map_err(|e| e.at_stage("c(E2)"))?;
    let c_e_inv = chern_invert(&c_e, d).map_err(|e| e.at_stage("c(-E2)"))?;
    let c3 = difference_class(&c_f, &c_e, d).map_err(|e| e.at_stage("c3(F-E2)"))?;
    let reduced = c3.reduce_by(choose);
    let pi2 = pushforward_last(&reduced).map_err(|e| e.at_stage("pi2_*"))?;
    let pi1 = pushforward_last(&pi2.reduce()).map_err(|e| e.at_stage("pi1_* pi2_*"))?;
    let interior = substitute_interior(&pi1).map_err(|e| e.at_stage("interior"))?;
    let raw = lambda_coefficient(&interior).map_err(|e| e.at_stage("interior"))?;

    let diag = diagonal_stages()?;
    let correction =
        lambda_coefficient(&diag.last().expect("nonempty").class).map_err(|e| e.at_stage("diagonal interior"))?;

    let multiplicity = DIAGONAL_MULTIPLICITY;
    let interior_coefficient = &raw - &correction * Rational::from_integer(multiplicity.into());

    let mut trace = vec![
        Stage {
            stage: "c(F)".into(),
            class: c_f.truncate(d),
        },
        Stage {
            stage: "c(-E2)".into(),
            class: c_e_inv,
        },
        Stage {
            stage: "c3(F-E2)".into(),
            class: c3,
        },
        Stage {
            stage: "c3(F-E2) reduced".into(),
            class: reduced,
        },
        Stage {
            stage: "pi2_*".into(),
            class: pi2,
        },
        Stage {
            stage: "pi1_* pi2_*".into(),
            class: pi1,
        },
        Stage {
            stage: "interior".into(),
            class: interior,
        },
    ];
    trace.extend(diag);
    Ok(LambdaReport {
        raw,
        correction,
        multiplicity,
        interior: interior_coefficient,
        trace,
    })
}
