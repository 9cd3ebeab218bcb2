//! Pushforward along the map forgetting the last marked point, and the
//! substitution of kappa classes by their values on the interior of the
//! moduli space.

use num_traits::One;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::taut::rewrite::is_normal;
use crate::taut::{rat, Ambient, Generator, Monomial, Rational, TautExpr};

/// Image of one reduced monomial under forgetting point `d`, or `None` if it
/// pushes forward to zero.
fn push_monomial(m: &Monomial, d: u32) -> Result<Option<Monomial>> {
    let diagonals: Vec<Generator> = m
        .generators()
        .filter(|g| matches!(g, Generator::Delta(_, j) if *j == d))
        .collect();
    let k_exp = m.exponent(Generator::K(d));
    match (diagonals.as_slice(), k_exp) {
        ([], 0) => Ok(None),
        ([], k) => Ok(Some(m.divided_by(Generator::K(d), k).times(Generator::Kappa(k - 1), 1))),
        ([delta], 0) if m.exponent(*delta) == 1 => Ok(Some(m.divided_by(*delta, 1))),
        _ => Err(Error::NotReduced(m.to_string())),
    }
}

/// Forgets the last marked point of a reduced class.
///
/// Per monomial: `M * D_id` maps to `M`, `M * K_d^k` maps to
/// `M * kappa_{k-1}`, and monomials not involving point `d` vanish. The input
/// must be in normal form, which guarantees at most one diagonal through `d`
/// and no `K_d` next to it.
pub fn pushforward_last(x: &TautExpr) -> Result<TautExpr> {
    pushforward_last_with(x, Execution::Auto)
}

pub fn pushforward_last_with(x: &TautExpr, exec: Execution) -> Result<TautExpr> {
    let amb = x.ambient();
    if amb.points == 0 {
        return Err(Error::Ambient(format!("no marked point to forget in {amb}")));
    }
    let d = amb.points;
    let target = Ambient::new(amb.genus, d - 1);
    x.map_monomials(target, exec, |m| {
        if !is_normal(m) {
            return Err(Error::NotReduced(m.to_string()));
        }
        Ok(push_monomial(m, d)?.map(|img| (Rational::one(), img)))
    })
}

/// Restricts a point-free class to the interior of the moduli space of genus
/// `g` curves, using `kappa_0 = 2g - 2` and `kappa_1 = 12 lambda_1`.
pub fn substitute_interior(x: &TautExpr) -> Result<TautExpr> {
    if x.has_point_classes() {
        return Err(Error::NotPushedForward(x.to_string()));
    }
    let amb = x.ambient();
    let g = amb.genus;
    if g == 0 {
        return Err(Error::input("no lambda_1 in genus 0"));
    }
    let kappa0 = TautExpr::integer(amb, 2 * g as i64 - 2);
    let kappa1 = TautExpr::term(amb, rat(12), Monomial::generator(Generator::Lambda(1)))?;
    let mut out = TautExpr::zero(amb);
    for (m, c) in x.terms() {
        let mut term = TautExpr::constant(amb, c.clone());
        for &(gen, e) in m.factors() {
            let value = match gen {
                Generator::Kappa(0) => kappa0.clone(),
                Generator::Kappa(1) => kappa1.clone(),
                Generator::Kappa(j) => {
                    return Err(Error::input(format!("no interior value for kappa{j} in this engine")))
                }
                other => TautExpr::generator(amb, other)?,
            };
            term = term.mul(&value.pow(e))?;
        }
        out = out.add(&term)?;
    }
    Ok(out)
}
