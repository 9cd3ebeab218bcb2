//! Divisor classes `alpha*lambda + beta*delta0 + gamma*delta1` on the
//! moduli space of stable genus 3 curves.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::msd::closed_form::WEIERSTRASS_G3;
use crate::msd::intersections::{intersection_with_a, intersection_with_c};
use crate::porteous::{lambda_pipeline, ser_rational};
use crate::taut::{rat, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Space {
    Stack,
    Coarse,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisorClass {
    #[serde(rename = "lambda", serialize_with = "ser_rational")]
    pub alpha: Rational,
    #[serde(rename = "delta0", serialize_with = "ser_rational")]
    pub beta: Rational,
    #[serde(rename = "delta1", serialize_with = "ser_rational")]
    pub gamma: Rational,
    #[serde(skip)]
    pub space: Space,
}

impl DivisorClass {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational, space: Space) -> Self {
        DivisorClass {
            alpha,
            beta,
            gamma,
            space,
        }
    }

    pub fn integers(alpha: i64, beta: i64, gamma: i64, space: Space) -> Self {
        Self::new(rat(alpha), rat(beta), rat(gamma), space)
    }

    pub fn is_integral(&self) -> bool {
        [&self.alpha, &self.beta, &self.gamma].iter().all(|c| c.is_integer())
    }

    /// Pairing with a test curve.
    pub fn pair(&self, curve: &TestCurvePairing) -> Rational {
        &self.alpha * &curve.pair_lambda + &self.beta * &curve.pair_delta0 + &self.gamma * &curve.pair_delta1
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(&self.alpha * k, &self.beta * k, &self.gamma * k, self.space)
    }

    pub fn sub(&self, other: &DivisorClass) -> Result<Self> {
        if self.space != other.space {
            return Err(Error::State("cannot subtract classes on different spaces".into()));
        }
        Ok(Self::new(
            &self.alpha - &other.alpha,
            &self.beta - &other.beta,
            &self.gamma - &other.gamma,
            self.space,
        ))
    }
}

impl std::fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (c, name) in [(&self.alpha, "lambda"), (&self.beta, "delta0"), (&self.gamma, "delta1")] {
            if c.is_zero() {
                continue;
            }
            let neg = *c < Rational::zero();
            let abs = if neg { -c } else { c.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            write!(f, "{abs}*{name}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Intersection numbers of a test curve with `lambda`, `delta0`, `delta1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TestCurvePairing {
    pub name: String,
    #[serde(serialize_with = "ser_rational")]
    pub pair_lambda: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub pair_delta0: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub pair_delta1: Rational,
    pub citation: String,
}

impl TestCurvePairing {
    pub fn new(name: &str, pairs: [i64; 3], citation: &str) -> Result<Self> {
        if pairs == [0, 0, 0] {
            return Err(Error::input(format!(
                "test curve {name} pairs trivially with every class"
            )));
        }
        Ok(TestCurvePairing {
            name: name.into(),
            pair_lambda: rat(pairs[0]),
            pair_delta0: rat(pairs[1]),
            pair_delta1: rat(pairs[2]),
            citation: citation.into(),
        })
    }

    /// Elliptic tail attached at a generic point of a fixed genus 2 curve.
    pub fn curve_a() -> Self {
        Self::new("A", [1, 12, -1], "elliptic tail pencil: alpha + 12 beta - gamma").expect("nonzero")
    }

    /// Genus 2 curve with an elliptic curve attached at a moving point.
    pub fn curve_c() -> Self {
        Self::new("C", [0, 0, -2], "moving attaching point: -2 gamma").expect("nonzero")
    }
}

/// Solves for `beta` and `gamma` given `alpha` and the intersection numbers
/// with two test curves.
pub fn solve_class(
    alpha: &Rational,
    pairings: &[TestCurvePairing],
    intersections: &[Rational],
) -> Result<DivisorClass> {
    if pairings.len() != 2 || intersections.len() != 2 {
        return Err(Error::Solver(format!(
            "need exactly two test curves for two unknowns, got {} curves and {} numbers",
            pairings.len(),
            intersections.len()
        )));
    }
    // a_i beta + b_i gamma = n_i - alpha * l_i
    let rows: Vec<(Rational, Rational, Rational)> = pairings
        .iter()
        .zip(intersections)
        .map(|(p, n)| (p.pair_delta0.clone(), p.pair_delta1.clone(), n - alpha * &p.pair_lambda))
        .collect();
    let (a1, b1, r1) = &rows[0];
    let (a2, b2, r2) = &rows[1];
    let det = a1 * b2 - a2 * b1;
    if det.is_zero() {
        let names: Vec<_> = pairings.iter().map(|p| p.name.as_str()).collect();
        return Err(Error::Solver(format!(
            "test curves {} give a singular system",
            names.join(", ")
        )));
    }
    let beta = (r1 * b2 - r2 * b1) / &det;
    let gamma = (a1 * r2 - a2 * r1) / &det;
    Ok(DivisorClass::new(alpha.clone(), beta, gamma, Space::Stack))
}

/// Passes from the moduli stack to the coarse space by doubling the `delta0`
/// coefficient.
pub fn coarse_class(c: &DivisorClass) -> Result<DivisorClass> {
    if c.space == Space::Coarse {
        return Err(Error::State("class is already on the coarse space".into()));
    }
    Ok(DivisorClass::new(
        c.alpha.clone(),
        &c.beta * rat(2),
        c.gamma.clone(),
        Space::Coarse,
    ))
}

/// Class of the hyperelliptic locus.
pub fn hyperelliptic_locus() -> DivisorClass {
    DivisorClass::integers(9, -1, -3, Space::Stack)
}

/// The component of hyperelliptic curves with the zero and the pole at
/// distinct Weierstrass points, counted once per ordered pair.
pub fn hyperelliptic_component_class() -> DivisorClass {
    let ordered_pairs = WEIERSTRASS_G3 * (WEIERSTRASS_G3 - 1);
    hyperelliptic_locus().scale(&rat(ordered_pairs as i64))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonhyperellipticReport {
    pub computed: DivisorClass,
    pub paper: DivisorClass,
    pub discrepancy: bool,
}

/// Previously published value of the nonhyperelliptic part.
pub fn published_nonhyperelliptic() -> DivisorClass {
    DivisorClass::integers(16604, -1736, -3750, Space::Stack)
}

/// Total stack class minus the hyperelliptic component, next to the
/// published value.
pub fn nonhyperelliptic_sum(total: &DivisorClass) -> Result<NonhyperellipticReport> {
    let computed = total.sub(&hyperelliptic_component_class())?;
    let paper = published_nonhyperelliptic();
    Ok(NonhyperellipticReport {
        discrepancy: computed != paper,
        computed,
        paper,
    })
}

/// The shipped system: lambda coefficient from the degeneracy locus, and the
/// two test curves with their intersection numbers.
pub fn stack_class() -> Result<DivisorClass> {
    let alpha = lambda_pipeline()?.interior;
    let a = intersection_with_a();
    let c = intersection_with_c()?;
    solve_class(
        &alpha,
        &[TestCurvePairing::curve_a(), TestCurvePairing::curve_c()],
        &[rat(a.value as i64), rat(c.total as i64)],
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub stack: DivisorClass,
    pub coarse: DivisorClass,
    pub hyperelliptic: DivisorClass,
    pub nonhyperelliptic: NonhyperellipticReport,
}

pub fn class_report() -> Result<ClassReport> {
    let stack = stack_class()?;
    Ok(ClassReport {
        coarse: coarse_class(&stack)?,
        hyperelliptic: hyperelliptic_component_class(),
        nonhyperelliptic: nonhyperelliptic_sum(&stack)?,
        stack,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curves() -> Vec<TestCurvePairing> {
        vec![TestCurvePairing::curve_a(), TestCurvePairing::curve_c()]
    }

    #[test]
    fn solve_shipped() {
        let c = solve_class(&rat(17108), &curves(), &[rat(0), rat(8792)]).unwrap();
        assert_eq!(c, DivisorClass::integers(17108, -1792, -4396, Space::Stack));
        assert_eq!(c.pair(&curves()[0]), rat(0));
        assert_eq!(c.pair(&curves()[1]), rat(8792));
        let z = solve_class(&rat(0), &curves(), &[rat(0), rat(0)]).unwrap();
        assert_eq!(z, DivisorClass::integers(0, 0, 0, Space::Stack));
    }

    #[test]
    fn singular_and_nonsquare() {
        let a = TestCurvePairing::curve_a();
        assert!(matches!(
            solve_class(&rat(1), &[a.clone(), a.clone()], &[rat(0), rat(0)]),
            Err(Error::Solver(_))
        ));
        assert!(matches!(solve_class(&rat(1), &[a], &[rat(0)]), Err(Error::Solver(_))));
        assert!(TestCurvePairing::new("Z", [0, 0, 0], "").is_err());
    }

    #[test]
    fn coarse() {
        let s = DivisorClass::integers(17108, -1792, -4396, Space::Stack);
        let c = coarse_class(&s).unwrap();
        assert_eq!(c, DivisorClass::integers(17108, -3584, -4396, Space::Coarse));
        assert!(matches!(coarse_class(&c), Err(Error::State(_))));
    }

    #[test]
    fn hyperelliptic() {
        assert_eq!(
            hyperelliptic_component_class(),
            DivisorClass::integers(504, -56, -168, Space::Stack)
        );
    }

    #[test]
    fn full_report() {
        let r = class_report().unwrap();
        assert_eq!(r.stack, DivisorClass::integers(17108, -1792, -4396, Space::Stack));
        assert_eq!(
            r.nonhyperelliptic.computed,
            DivisorClass::integers(16604, -1736, -4228, Space::Stack)
        );
        assert!(r.nonhyperelliptic.discrepancy);
        assert!(r.stack.is_integral());
    }

    #[test]
    fn display() {
        assert_eq!(
            DivisorClass::integers(17108, -1792, -4396, Space::Stack).to_string(),
            "17108*lambda - 1792*delta0 - 4396*delta1"
        );
        assert_eq!(DivisorClass::integers(0, 0, 0, Space::Stack).to_string(), "0");
        assert_eq!(DivisorClass::integers(0, -1, 0, Space::Stack).to_string(), "-1*delta0");
    }
}
