use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The ambient space of a class: the fibered power `X^d` of the universal
/// curve over the moduli space of genus-`g` curves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ambient {
    pub genus: u32,
    pub points: u32,
}

impl Ambient {
    pub const fn new(genus: u32, points: u32) -> Self {
        Ambient { genus, points }
    }

    /// Dimension `3g - 3 + d` of the ambient, clamped at zero.
    pub fn dimension(&self) -> u32 {
        (3 * self.genus + self.points).saturating_sub(3)
    }

    pub fn check(&self, generator: Generator) -> Result<()> {
        let ok = match generator {
            Generator::Kappa(_) => true,
            Generator::Lambda(i) => i >= 1 && i <= self.genus,
            Generator::K(i) => i >= 1 && i <= self.points,
            Generator::Delta(i, j) => i >= 1 && i < j && j <= self.points,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::GeneratorOutOfRange {
                generator: generator.to_string(),
                ambient: *self,
            })
        }
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(g={}, d={})", self.genus, self.points)
    }
}

/// A tautological generator.
///
/// The variant order is the canonical monomial order: kappa classes first,
/// then Hodge classes, then cotangent classes by point, then diagonals
/// lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// `kappa_j`, degree `j`.
    Kappa(u32),
    /// `lambda_i`, the i-th Chern class of the Hodge bundle.
    Lambda(u32),
    /// `K_i`, the relative cotangent class pulled back from the i-th factor.
    K(u32),
    /// `Delta_ij` with `i < j`.
    Delta(u32, u32),
}

impl Generator {
    /// Builds a diagonal with its indices sorted.
    pub fn delta(i: u32, j: u32) -> Result<Self> {
        if i == j {
            return Err(Error::input(format!("diagonal D{i}{j} needs distinct points")));
        }
        Ok(Generator::Delta(i.min(j), i.max(j)))
    }

    pub fn degree(&self) -> u32 {
        match *self {
            Generator::Kappa(j) => j,
            Generator::Lambda(i) => i,
            Generator::K(_) | Generator::Delta(..) => 1,
        }
    }

    /// Whether the generator involves marked point `p`.
    pub fn touches_point(&self, p: u32) -> bool {
        match *self {
            Generator::K(i) => i == p,
            Generator::Delta(i, j) => i == p || j == p,
            _ => false,
        }
    }

    pub fn is_point_class(&self) -> bool {
        matches!(self, Generator::K(_) | Generator::Delta(..))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Generator::Kappa(j) => write!(f, "kappa{j}"),
            Generator::Lambda(i) => write!(f, "lambda{i}"),
            Generator::K(i) => write!(f, "K{i}"),
            Generator::Delta(i, j) if i < 10 && j < 10 => write!(f, "D{i}{j}"),
            Generator::Delta(i, j) => write!(f, "D{i}_{j}"),
        }
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let index = |digits: &str| -> Result<u32> {
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::parse(format!("bad generator index in `{s}`")));
            }
            digits
                .parse()
                .map_err(|_| Error::parse(format!("index overflow in `{s}`")))
        };
        if let Some(rest) = s.strip_prefix("kappa") {
            Ok(Generator::Kappa(index(rest)?))
        } else if let Some(rest) = s.strip_prefix("lambda") {
            Ok(Generator::Lambda(index(rest)?))
        } else if let Some(rest) = s.strip_prefix('K') {
            Ok(Generator::K(index(rest)?))
        } else if let Some(rest) = s.strip_prefix('D') {
            let (i, j) = match rest.split_once('_') {
                Some((a, b)) => (index(a)?, index(b)?),
                None if rest.len() == 2 => (index(&rest[..1])?, index(&rest[1..])?),
                None => return Err(Error::parse(format!("ambiguous diagonal `{s}`, use D<i>_<j>"))),
            };
            if i >= j {
                return Err(Error::parse(format!("diagonal `{s}` must have i < j")));
            }
            Ok(Generator::Delta(i, j))
        } else {
            Err(Error::parse(format!("unknown generator `{s}`")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for g in [
            Generator::Kappa(0),
            Generator::Lambda(3),
            Generator::K(2),
            Generator::Delta(1, 2),
            Generator::Delta(3, 12),
        ] {
            assert_eq!(g.to_string().parse::<Generator>().unwrap(), g);
        }
        assert_eq!(Generator::Delta(1, 2).to_string(), "D12");
        assert_eq!(Generator::Delta(3, 12).to_string(), "D3_12");
    }

    #[test]
    fn rejects_bad_names() {
        assert!("D21".parse::<Generator>().is_err());
        assert!("D123".parse::<Generator>().is_err());
        assert!("psi1".parse::<Generator>().is_err());
        assert!("K".parse::<Generator>().is_err());
    }

    #[test]
    fn ambient_bounds() {
        let amb = Ambient::new(3, 2);
        assert!(amb.check(Generator::Lambda(3)).is_ok());
        assert!(amb.check(Generator::Lambda(4)).is_err());
        assert!(amb.check(Generator::Lambda(0)).is_err());
        assert!(amb.check(Generator::K(3)).is_err());
        assert!(amb.check(Generator::Delta(1, 2)).is_ok());
        assert!(amb.check(Generator::Delta(2, 3)).is_err());
        assert!(amb.check(Generator::Kappa(7)).is_ok());
        assert_eq!(amb.dimension(), 8);
        assert_eq!(Ambient::new(0, 1).dimension(), 0);
    }

    #[test]
    fn canonical_order() {
        let mut v = vec![
            Generator::Delta(1, 3),
            Generator::K(1),
            Generator::Delta(1, 2),
            Generator::Lambda(2),
            Generator::Kappa(1),
            Generator::Lambda(1),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                Generator::Kappa(1),
                Generator::Lambda(1),
                Generator::Lambda(2),
                Generator::K(1),
                Generator::Delta(1, 2),
                Generator::Delta(1, 3),
            ]
        );
    }
}
