//! JSON form: `{"ambient":{"g":3,"d":2},"terms":[{"coeff":"735","mono":{"K2":3}}]}`.
//!
//! Coefficients are decimal strings (`"-3/2"` for non-integers) and monomial
//! keys keep the canonical generator order.

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{Map, Value};

use super::expr::TautExpr;
use super::generator::{Ambient, Generator};
use super::monomial::Monomial;
use super::Rational;
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct AmbientDto {
    g: u32,
    d: u32,
}

#[derive(Serialize, Deserialize)]
struct TermDto {
    coeff: String,
    mono: Map<String, Value>,
}

#[derive(Serialize, Deserialize)]
struct ExprDto {
    ambient: AmbientDto,
    terms: Vec<TermDto>,
}

impl From<&TautExpr> for ExprDto {
    fn from(x: &TautExpr) -> Self {
        let amb = x.ambient();
        ExprDto {
            ambient: AmbientDto {
                g: amb.genus,
                d: amb.points,
            },
            terms: x
                .terms()
                .map(|(m, c)| TermDto {
                    coeff: c.to_string(),
                    mono: m
                        .factors()
                        .iter()
                        .map(|(g, e)| (g.to_string(), Value::from(*e)))
                        .collect(),
                })
                .collect(),
        }
    }
}

impl TryFrom<ExprDto> for TautExpr {
    type Error = Error;

    fn try_from(dto: ExprDto) -> Result<Self> {
        let ambient = Ambient::new(dto.ambient.g, dto.ambient.d);
        let mut terms = Vec::with_capacity(dto.terms.len());
        for t in dto.terms {
            let coeff: Rational = t
                .coeff
                .trim()
                .parse()
                .map_err(|_| Error::parse(format!("bad coefficient `{}`", t.coeff)))?;
            let mut pairs = Vec::with_capacity(t.mono.len());
            for (name, exp) in t.mono {
                let g: Generator = name.parse()?;
                let e = exp
                    .as_u64()
                    .and_then(|e| u32::try_from(e).ok())
                    .ok_or_else(|| Error::parse(format!("bad exponent for `{name}`")))?;
                pairs.push((g, e));
            }
            terms.push((Monomial::from_pairs(pairs), coeff));
        }
        TautExpr::from_terms(ambient, terms)
    }
}

impl Serialize for TautExpr {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ExprDto::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for TautExpr {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let dto = ExprDto::deserialize(d)?;
        TautExpr::try_from(dto).map_err(serde::de::Error::custom)
    }
}

pub fn to_json(x: &TautExpr) -> String {
    serde_json::to_string(x).expect("serializable")
}

pub fn from_json(s: &str) -> Result<TautExpr> {
    serde_json::from_str(s).map_err(|e| Error::parse(e.to_string()))
}
