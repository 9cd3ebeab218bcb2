//! Rewriting to normal form modulo the diagonal relations on fibered powers
//! of the universal curve:
//!
//! ```text
//! D_id * D_jd = D_ij * D_id      (i < j < d)   shared higher endpoint
//! D_ij^2      = -K_i * D_ij      (i < j)       self-intersection
//! K_j * D_ij  = K_i * D_ij       (i < j)       cotangent moves to lower point
//! D_ij * D_jk = D_ij * D_ik      (i < j < k)   chains become stars
//! ```
//!
//! Every rule maps a monomial to plus or minus a single monomial, so a class
//! is reduced monomial by monomial. Rules are oriented toward lower point
//! indices. A rewrite either removes a diagonal factor (self-intersection)
//! or keeps the diagonal count and strictly lowers the sum of lower
//! diagonal endpoints (the two diagonal-exchange rules) or the total K point
//! index (cotangent move); this measure is well-founded, so rewriting
//! terminates.
//!
//! In normal form the diagonals of each monomial form stars: every cluster of
//! identified points is `D_{r,s}` for its minimal point `r` and every other
//! member `s`, each with exponent one, and all cotangent classes of the
//! cluster sit on `r`.

use std::fmt;

use num_traits::One;

use super::expr::TautExpr;
use super::generator::Generator;
use super::monomial::Monomial;
use super::Rational;
use crate::exec::Execution;

/// One applicable instance of a rewrite rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rewrite {
    /// `D_id * D_jd -> D_ij * D_id`.
    SharedHigher { i: u32, j: u32, d: u32 },
    /// `D_ij^2 -> -K_i * D_ij`.
    SelfIntersection { i: u32, j: u32 },
    /// `K_j * D_ij -> K_i * D_ij`.
    CotangentMove { i: u32, j: u32 },
    /// `D_ij * D_jk -> D_ij * D_ik`.
    Chain { i: u32, j: u32, k: u32 },
}

impl fmt::Display for Rewrite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Rewrite::SharedHigher { i, j, d } => write!(f, "D{i}_{d}*D{j}_{d} -> D{i}_{j}*D{i}_{d}"),
            Rewrite::SelfIntersection { i, j } => write!(f, "D{i}_{j}^2 -> -K{i}*D{i}_{j}"),
            Rewrite::CotangentMove { i, j } => write!(f, "K{j}*D{i}_{j} -> K{i}*D{i}_{j}"),
            Rewrite::Chain { i, j, k } => write!(f, "D{i}_{j}*D{j}_{k} -> D{i}_{j}*D{i}_{k}"),
        }
    }
}

fn diagonals(m: &Monomial) -> impl Iterator<Item = (u32, u32, u32)> + '_ {
    m.factors().iter().filter_map(|&(g, e)| match g {
        Generator::Delta(i, j) => Some((i, j, e)),
        _ => None,
    })
}

/// Every rewrite applicable to `m`, in a fixed order.
pub fn applicable(m: &Monomial) -> Vec<Rewrite> {
    let deltas: Vec<(u32, u32, u32)> = diagonals(m).collect();
    let mut out = Vec::new();
    for &(i, j, e) in &deltas {
        if e >= 2 {
            out.push(Rewrite::SelfIntersection { i, j });
        }
        if m.exponent(Generator::K(j)) > 0 {
            out.push(Rewrite::CotangentMove { i, j });
        }
    }
    for (a, &(i1, j1, _)) in deltas.iter().enumerate() {
        for &(i2, j2, _) in &deltas[a + 1..] {
            if j1 == j2 {
                // `deltas` is sorted, so `i1 < i2` here.
                out.push(Rewrite::SharedHigher { i: i1, j: i2, d: j1 });
            }
        }
        for &(i2, j2, _) in &deltas {
            if i2 == j1 {
                out.push(Rewrite::Chain { i: i1, j: j1, k: j2 });
            }
        }
    }
    out
}

/// Applies one rewrite, returning the sign and the new monomial.
///
/// Panics if `rw` is not applicable to `m`.
pub fn apply(m: &Monomial, rw: Rewrite) -> (i8, Monomial) {
    let mut out = m.clone();
    match rw {
        Rewrite::SharedHigher { i, j, d } => {
            out.add_exponent(Generator::Delta(j, d), -1);
            out.add_exponent(Generator::Delta(i, j), 1);
            (1, out)
        }
        Rewrite::SelfIntersection { i, j } => {
            out.add_exponent(Generator::Delta(i, j), -1);
            out.add_exponent(Generator::K(i), 1);
            (-1, out)
        }
        Rewrite::CotangentMove { i, j } => {
            assert!(m.exponent(Generator::Delta(i, j)) > 0);
            out.add_exponent(Generator::K(j), -1);
            out.add_exponent(Generator::K(i), 1);
            (1, out)
        }
        Rewrite::Chain { i, j, k } => {
            assert!(m.exponent(Generator::Delta(i, j)) > 0);
            out.add_exponent(Generator::Delta(j, k), -1);
            out.add_exponent(Generator::Delta(i, k), 1);
            (1, out)
        }
    }
}

/// Rewrites `m` to normal form, letting `choose` pick which applicable
/// rewrite to fire at each step (it receives a nonempty slice and returns an
/// index into it).
pub fn normal_form_by(m: &Monomial, mut choose: impl FnMut(&[Rewrite]) -> usize) -> (i8, Monomial) {
    let mut sign = 1i8;
    let mut cur = m.clone();
    loop {
        let options = applicable(&cur);
        if options.is_empty() {
            return (sign, cur);
        }
        let pick = choose(&options);
        let (s, next) = apply(&cur, options[pick]);
        sign *= s;
        cur = next;
    }
}

/// Normal form using the first applicable rewrite at each step.
pub fn normal_form(m: &Monomial) -> (i8, Monomial) {
    normal_form_by(m, |_| 0)
}

pub fn is_normal(m: &Monomial) -> bool {
    applicable(m).is_empty()
}

fn signed(s: i8) -> Rational {
    if s < 0 {
        -Rational::one()
    } else {
        Rational::one()
    }
}

impl TautExpr {
    /// Reduces every monomial to normal form and collects terms.
    pub fn reduce(&self) -> TautExpr {
        self.reduce_with(Execution::Auto)
    }

    pub fn reduce_with(&self, exec: Execution) -> TautExpr {
        self.map_monomials(self.ambient(), exec, |m| {
            let (s, nf) = normal_form(m);
            Ok(Some((signed(s), nf)))
        })
        .expect("normal forms stay inside the ambient")
    }

    /// Like [`TautExpr::reduce`], with an explicit rule-selection policy.
    /// Confluence means the result does not depend on `choose`.
    pub fn reduce_by(&self, mut choose: impl FnMut(&[Rewrite]) -> usize) -> TautExpr {
        let mut out = TautExpr::zero(self.ambient());
        for (m, c) in self.terms() {
            let (s, nf) = normal_form_by(m, &mut choose);
            let t = TautExpr::term(self.ambient(), c * signed(s), nf).expect("normal forms stay inside the ambient");
            out = out.add(&t).expect("same ambient");
        }
        out
    }

    pub fn is_reduced(&self) -> bool {
        self.terms().all(|(m, _)| is_normal(m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::taut::{parse_expr, Ambient};
    use Generator::*;

    fn e(s: &str, d: u32) -> TautExpr {
        parse_expr(s, Ambient::new(3, d)).unwrap()
    }

    #[test]
    fn self_intersection() {
        assert_eq!(e("D12^2", 2).reduce(), e("-K1*D12", 2));
    }

    #[test]
    fn cotangent_moves_down() {
        assert_eq!(e("K2*D12", 2).reduce(), e("K1*D12", 2));
    }

    #[test]
    fn worked_square_times_k() {
        assert_eq!(e("60*D12^2*K1", 2).reduce(), e("-60*K1^2*D12", 2));
    }

    #[test]
    fn cube_of_diagonal() {
        // D^3 = -K1 D^2 = K1^2 D
        assert_eq!(e("D12^3", 2).reduce(), e("K1^2*D12", 2));
        assert_eq!(e("K2^2*D12", 2).reduce(), e("K1^2*D12", 2));
    }

    #[test]
    fn shared_higher_endpoint() {
        assert_eq!(e("D13*D23", 3).reduce(), e("D12*D13", 3));
        assert_eq!(e("D12*D13*D23", 3).reduce(), e("-K1*D12*D13", 3));
    }

    #[test]
    fn four_points_star() {
        // Without the chain rule the two orders below would stop at
        // D12*D13*D14 and D12*D23*D14 respectively.
        let star = e("D12*D13*D14", 4);
        assert_eq!(e("D14*D24*D34", 4).reduce(), star);
        let rev = e("D14*D24*D34", 4).reduce_by(|opts| opts.len() - 1);
        assert_eq!(rev, star);
        assert_eq!(e("D12*D23*D34", 4).reduce(), star);
    }

    #[test]
    fn normal_form_detection() {
        assert!(is_normal(&Monomial::from_pairs([(K(1), 2), (Delta(1, 2), 1)])));
        assert!(!is_normal(&Monomial::from_pairs([(K(2), 1), (Delta(1, 2), 1)])));
        assert!(is_normal(&Monomial::from_pairs([(Delta(1, 2), 1), (Delta(1, 3), 1)])));
        assert!(!is_normal(&Monomial::from_pairs([(Delta(1, 2), 1), (Delta(2, 3), 1)])));
        assert!(is_normal(&Monomial::from_pairs([
            (Delta(1, 2), 1),
            (Delta(3, 4), 1),
            (K(3), 1)
        ])));
    }

    #[test]
    fn idempotent_on_samples() {
        for s in ["D12^2*K2^3 + D12*K2", "D13*D23*K3^2 - 5*D12^2", "lambda1*K1*K2"] {
            let x = e(s, 3).reduce();
            assert_eq!(x.reduce(), x);
            assert!(x.is_reduced());
        }
    }

    #[test]
    fn rewrite_names() {
        assert_eq!(
            Rewrite::SelfIntersection { i: 1, j: 2 }.to_string(),
            "D1_2^2 -> -K1*D1_2"
        );
    }
}
