//! Total Chern classes of the bundles of differentials with prescribed poles
//! and of the jet-type bundles of sections along marked points, together with
//! formal inversion.
//!
//! Marked points are ordered poles first: for a signature with `p` poles and
//! `n` zeros, points `1..=p` carry the poles `w_k` and points `p+1..=p+n`
//! carry the zeros `z_i`. The diagonal `D_{k,p+i}` therefore couples pole `k`
//! with zero `i`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::taut::{rat, Ambient, Generator, Monomial, Rational, TautExpr};

/// A type `(a_1,..,a_n; -b_1,..,-b_p)` of zeros and poles, with the genus it
/// determines through `sum a - sum b = 2g - 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    genus: u32,
    zeros: Vec<u32>,
    poles: Vec<u32>,
}

impl Signature {
    pub fn new(zeros: Vec<u32>, poles: Vec<u32>) -> Result<Self> {
        if zeros.is_empty() {
            return Err(Error::input("a signature needs at least one zero"));
        }
        if zeros.iter().chain(&poles).any(|&x| x == 0) {
            return Err(Error::input("zero and pole orders must be positive"));
        }
        let total: i64 = zeros.iter().map(|&a| a as i64).sum::<i64>() - poles.iter().map(|&b| b as i64).sum::<i64>();
        if total < -2 || (total + 2) % 2 != 0 {
            return Err(Error::input(format!(
                "orders sum to {total}, which is not 2g - 2 for any genus g >= 0"
            )));
        }
        Ok(Signature {
            genus: ((total + 2) / 2) as u32,
            zeros,
            poles,
        })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn zeros(&self) -> &[u32] {
        &self.zeros
    }

    pub fn poles(&self) -> &[u32] {
        &self.poles
    }

    /// Number of marked points `n + p`.
    pub fn points(&self) -> u32 {
        (self.zeros.len() + self.poles.len()) as u32
    }

    pub fn ambient(&self) -> Ambient {
        Ambient::new(self.genus, self.points())
    }

    /// Marked-point index of the i-th zero (0-based `i`).
    pub fn zero_point(&self, i: usize) -> u32 {
        (self.poles.len() + i + 1) as u32
    }

    /// Marked-point index of the k-th pole (0-based `k`).
    pub fn pole_point(&self, k: usize) -> u32 {
        (k + 1) as u32
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let zs: Vec<String> = self.zeros.iter().map(u32::to_string).collect();
        let ps: Vec<String> = self.poles.iter().map(|b| format!("-{b}")).collect();
        write!(f, "{};{}", zs.join(","), ps.join(","))
    }
}

impl FromStr for Signature {
    type Err = Error;

    /// Accepts `"6;-2"`, `"4,2;-2,-2"`, `"4;"` and `"4"`; whitespace is ignored
    /// and pole orders may omit the minus sign.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (zs, ps) = compact.split_once(';').unwrap_or((compact.as_str(), ""));
        let list = |part: &str, what: &str| -> Result<Vec<u32>> {
            if part.is_empty() {
                return Ok(Vec::new());
            }
            part.split(',')
                .map(|x| {
                    x.trim_start_matches('-')
                        .parse::<u32>()
                        .map_err(|_| Error::parse(format!("bad {what} order `{x}` in signature `{s}`")))
                })
                .collect()
        };
        if zs.starts_with('-') || zs.contains(",-") {
            return Err(Error::parse(format!("zeros must be positive in `{s}`")));
        }
        Signature::new(list(zs, "zero")?, list(ps, "pole")?)
    }
}

fn lin(ambient: Ambient, parts: &[(i64, Generator)]) -> TautExpr {
    TautExpr::from_terms(
        ambient,
        std::iter::once((Monomial::one(), Rational::one()))
            .chain(parts.iter().map(|&(c, g)| (Monomial::generator(g), rat(c)))),
    )
    .expect("generators checked by caller")
}

/// `1 + lambda_1 + ... + lambda_g` in the given ambient.
pub fn hodge(ambient: Ambient) -> TautExpr {
    let terms = std::iter::once((Monomial::one(), Rational::one()))
        .chain((1..=ambient.genus).map(|i| (Monomial::generator(Generator::Lambda(i)), Rational::one())));
    TautExpr::from_terms(ambient, terms).expect("lambda_i with i <= g")
}

/// Total Chern class of the bundle of differentials with a pole of order at
/// most `n` at one marked point: `(1 + lambda) * prod_{i<n} (1 - i K_1)`,
/// truncated at degree `max_degree`.
pub fn chern_e(n: u32, genus: u32, max_degree: u32) -> Result<TautExpr> {
    if n == 0 {
        return Err(Error::input("pole order must be at least 1"));
    }
    let amb = Ambient::new(genus, 1);
    let mut acc = hodge(amb).truncate(max_degree);
    for i in 1..n {
        let factor = lin(amb, &[(-(i as i64), Generator::K(1))]);
        acc = acc.mul(&factor)?.truncate(max_degree);
    }
    Ok(acc)
}

/// Total Chern class of the bundle of sections of `K(sum b_k w_k)` modulo
/// sections vanishing to order `a_i` at each `z_i`:
///
/// `prod_i prod_{j=1..a_i} (1 + j K_{p+i} + sum_k b_k D_{k,p+i})`,
///
/// returned unreduced.
pub fn chern_f(sig: &Signature) -> Result<TautExpr> {
    let amb = sig.ambient();
    let mut acc = TautExpr::one(amb);
    for (i, &a) in sig.zeros().iter().enumerate() {
        let z = sig.zero_point(i);
        for j in 1..=a {
            let mut parts = vec![(j as i64, Generator::K(z))];
            for (k, &b) in sig.poles().iter().enumerate() {
                parts.push((b as i64, Generator::delta(sig.pole_point(k), z)?));
            }
            acc = acc.mul(&lin(amb, &parts))?;
        }
    }
    Ok(acc)
}

/// Multiplicity vectors `(i_1, .., i_n)` with `sum j * i_j = n`.
fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, largest: u32, counts: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(counts.clone());
            return;
        }
        for part in (1..=largest.min(n)).rev() {
            counts[part as usize - 1] += 1;
            go(n - part, part, counts, out);
            counts[part as usize - 1] -= 1;
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut vec![0; n as usize], &mut out);
    out
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// The degree-`n` component of the inverse of `1 + x_1 + x_2 + ...`:
///
/// `P_n = sum over i_1 + 2 i_2 + .. + n i_n = n of
///        (i_1 + .. + i_n)! / (i_1! .. i_n!) * prod (-x_j)^{i_j}`.
///
/// `parts[j - 1]` is `x_j`.
pub fn inverse_component(n: u32, parts: &[TautExpr], ambient: Ambient) -> TautExpr {
    if n == 0 {
        return TautExpr::one(ambient);
    }
    let mut total = TautExpr::zero(ambient);
    for counts in partitions(n) {
        let k: u32 = counts.iter().sum();
        let mut coeff = factorial(k);
        let mut term = TautExpr::one(ambient);
        for (j, &i) in counts.iter().enumerate() {
            if i == 0 {
                continue;
            }
            coeff /= factorial(i);
            term = term.mul(&parts[j].neg().pow(i)).expect("same ambient");
        }
        total = total
            .add(&term.scale(&Rational::from_integer(coeff)))
            .expect("same ambient");
    }
    total
}

/// Formal inverse of a unital class through degree `max_degree`.
pub fn chern_invert(c: &TautExpr, max_degree: u32) -> Result<TautExpr> {
    let amb = c.ambient();
    let constant = c.graded_part(0);
    if constant != TautExpr::one(amb) {
        return Err(Error::NotUnital(constant.to_string()));
    }
    let parts: Vec<TautExpr> = (1..=max_degree).map(|k| c.graded_part(k)).collect();
    let mut out = TautExpr::zero(amb);
    for n in 0..=max_degree {
        out = out.add(&inverse_component(n, &parts, amb))?;
    }
    Ok(out)
}

/// Degree-`k` part of `c(F) / c(E)`: the Porteous class of the locus where a
/// map `E -> F` drops rank, in the maximal-minor case.
///
/// If the two classes live over different numbers of marked points the one
/// over fewer points is pulled back.
pub fn difference_class(c_f: &TautExpr, c_e: &TautExpr, k: u32) -> Result<TautExpr> {
    let (f_amb, e_amb) = (c_f.ambient(), c_e.ambient());
    if f_amb.genus != e_amb.genus {
        return Err(Error::AmbientMismatch {
            left: f_amb,
            right: e_amb,
        });
    }
    let points = f_amb.points.max(e_amb.points);
    let f = c_f.pullback_to(points)?.truncate(k);
    let e_inv = chern_invert(&c_e.pullback_to(points)?, k)?;
    let prod = f.mul(&e_inv)?;
    if prod.graded_part(0) != TautExpr::one(prod.ambient()) {
        return Err(Error::NotUnital(c_f.graded_part(0).to_string()));
    }
    Ok(prod.graded_part(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::taut::parse_expr;
    use num_traits::Zero;

    fn at(amb: Ambient, s: &str) -> TautExpr {
        parse_expr(s, amb).unwrap()
    }

    #[test]
    fn signature_parsing() {
        let s: Signature = "6;-2".parse().unwrap();
        assert_eq!(s.genus(), 3);
        assert_eq!(s.points(), 2);
        assert_eq!(s.zero_point(0), 2);
        assert_eq!(s.pole_point(0), 1);
        assert_eq!(s.to_string(), "6;-2");
        let t: Signature = " 4 , 2 ; -2 , -2 ".parse().unwrap();
        assert_eq!(t.zeros(), &[4, 2]);
        assert_eq!(t.genus(), 2);
        assert_eq!("4".parse::<Signature>().unwrap().genus(), 3);
        assert_eq!("4;".parse::<Signature>().unwrap().poles(), &[] as &[u32]);
        assert_eq!("5;3,2".parse::<Signature>().unwrap().genus(), 1);
    }

    #[test]
    fn signature_rejections() {
        // 1 = 2g - 2 has no solution
        assert!("1;".parse::<Signature>().is_err());
        assert!(";-2".parse::<Signature>().is_err());
        assert!("0;".parse::<Signature>().is_err());
        assert!("-2;-2".parse::<Signature>().is_err());
        assert!("x;-2".parse::<Signature>().is_err());
        assert!("1;-5".parse::<Signature>().is_err());
        // genus 0 is fine
        assert_eq!("1;-3".parse::<Signature>().unwrap().genus(), 0);
    }

    #[test]
    fn e2_through_degree_three() {
        let amb = Ambient::new(3, 1);
        assert_eq!(
            chern_e(2, 3, 3).unwrap(),
            at(
                amb,
                "1 + (lambda1 - K1) + (lambda2 - lambda1*K1) + (lambda3 - lambda2*K1)"
            )
        );
    }

    #[test]
    fn e1_is_hodge() {
        for g in 0..5 {
            assert_eq!(chern_e(1, g, g).unwrap(), hodge(Ambient::new(g, 1)));
        }
        assert!(chern_e(0, 2, 2).is_err());
    }

    #[test]
    fn e3_genus3_degree2() {
        let amb = Ambient::new(3, 1);
        assert_eq!(
            chern_e(3, 3, 2).unwrap(),
            at(amb, "1 + (lambda1 - 3*K1) + (lambda2 - 3*lambda1*K1 + 2*K1^2)")
        );
    }

    #[test]
    fn f_with_single_zero_and_no_poles() {
        let sig: Signature = "2;".parse().unwrap();
        assert_eq!(chern_f(&sig).unwrap(), at(sig.ambient(), "(1 + K1)*(1 + 2*K1)"));
        let four: Signature = "4".parse().unwrap();
        assert_eq!(
            chern_f(&four).unwrap().truncate(2),
            at(four.ambient(), "1 + 10*K1 + 35*K1^2")
        );
    }

    #[test]
    fn f_degree_one_formula() {
        let sig: Signature = "3,1;-2".parse().unwrap();
        let amb = sig.ambient();
        assert_eq!(
            chern_f(&sig).unwrap().graded_part(1),
            at(amb, "6*K2 + K3 + 6*D12 + 2*D13")
        );
    }

    #[test]
    fn inverse_polynomials_low_degree() {
        let amb = Ambient::new(3, 0);
        let xs: Vec<TautExpr> = (1..=3).map(|i| at(amb, &format!("lambda{i}"))).collect();
        assert_eq!(inverse_component(1, &xs, amb), at(amb, "-lambda1"));
        assert_eq!(inverse_component(2, &xs, amb), at(amb, "lambda1^2 - lambda2"));
        assert_eq!(
            inverse_component(3, &xs, amb),
            at(amb, "-lambda1^3 + 2*lambda1*lambda2 - lambda3")
        );
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(6).len(), 11);
    }

    #[test]
    fn inverse_of_e2() {
        let amb = Ambient::new(3, 1);
        let inv = chern_invert(&chern_e(2, 3, 3).unwrap(), 3).unwrap();
        assert_eq!(
            inv,
            at(
                amb,
                "1 + (K1 - lambda1) + (K1^2 - lambda1*K1 + lambda1^2 - lambda2) \
                 + (K1^3 - lambda1*K1^2 + (lambda1^2 - lambda2)*K1 + 2*lambda1*lambda2 - lambda3 - lambda1^3)"
            )
        );
    }

    #[test]
    fn invert_one_and_non_unital() {
        let amb = Ambient::new(2, 1);
        assert_eq!(chern_invert(&TautExpr::one(amb), 4).unwrap(), TautExpr::one(amb));
        assert!(matches!(chern_invert(&at(amb, "2 + K1"), 3), Err(Error::NotUnital(_))));
        assert!(matches!(chern_invert(&at(amb, "K1"), 3), Err(Error::NotUnital(_))));
        assert!(matches!(
            chern_invert(&at(amb, "1 + kappa0"), 3),
            Err(Error::NotUnital(_))
        ));
    }

    #[test]
    fn difference_of_equal_classes_vanishes() {
        let c = chern_e(3, 3, 4).unwrap();
        for k in 1..=4 {
            assert!(difference_class(&c, &c, k).unwrap().is_zero());
        }
    }

    #[test]
    fn diagonal_branch_degree_two() {
        let f = chern_f(&"4;".parse().unwrap()).unwrap();
        let e = chern_e(1, 3, 3).unwrap();
        let amb = Ambient::new(3, 1);
        assert_eq!(
            difference_class(&f, &e, 2).unwrap(),
            at(amb, "lambda1^2 - lambda2 - 10*lambda1*K1 + 35*K1^2")
        );
    }

    #[test]
    fn difference_class_genus_mismatch() {
        let f = chern_f(&"6;-2".parse().unwrap()).unwrap();
        let e = chern_e(2, 2, 3).unwrap();
        assert!(difference_class(&f, &e, 3).is_err());
    }

    #[test]
    fn big_integer_coefficients() {
        let sig: Signature = "40;".parse().unwrap();
        let c = chern_f(&sig).unwrap();
        // top coefficient is 40!
        let top = c.coefficient(&Monomial::power(Generator::K(1), 40));
        assert_eq!(top, Rational::from_integer(factorial(40)));
        assert!(!top.is_zero());
    }
}
