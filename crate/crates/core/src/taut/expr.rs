use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::generator::{Ambient, Generator};
use super::monomial::Monomial;
use super::Rational;
use crate::error::{Error, Result};
use crate::exec::{self, Execution};

type TermMap = BTreeMap<Monomial, Rational>;

/// An exact-rational polynomial in tautological generators over a fixed
/// ambient.
///
/// Zero coefficients are never stored; the zero class is the empty map and
/// still remembers its ambient.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TautExpr {
    ambient: Ambient,
    terms: TermMap,
}

impl TautExpr {
    pub fn zero(ambient: Ambient) -> Self {
        TautExpr {
            ambient,
            terms: TermMap::new(),
        }
    }

    pub fn one(ambient: Ambient) -> Self {
        Self::constant(ambient, Rational::one())
    }

    pub fn constant(ambient: Ambient, c: Rational) -> Self {
        let mut out = Self::zero(ambient);
        out.push(Monomial::one(), c);
        out
    }

    pub fn integer(ambient: Ambient, c: i64) -> Self {
        Self::constant(ambient, Rational::from_integer(BigInt::from(c)))
    }

    pub fn generator(ambient: Ambient, g: Generator) -> Result<Self> {
        Self::term(ambient, Rational::one(), Monomial::generator(g))
    }

    /// `c * m`, after checking every generator of `m` against the ambient.
    pub fn term(ambient: Ambient, c: Rational, m: Monomial) -> Result<Self> {
        for g in m.generators() {
            ambient.check(g)?;
        }
        let mut out = Self::zero(ambient);
        out.push(m, c);
        Ok(out)
    }

    /// Collects terms, summing repeated monomials.
    pub fn from_terms(ambient: Ambient, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Result<Self> {
        let mut out = Self::zero(ambient);
        for (m, c) in terms {
            for g in m.generators() {
                ambient.check(g)?;
            }
            out.push(m, c);
        }
        Ok(out)
    }

    pub(crate) fn from_map_unchecked(ambient: Ambient, terms: TermMap) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        TautExpr { ambient, terms }
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn genus(&self) -> u32 {
        self.ambient.genus
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    fn push(&mut self, m: Monomial, c: Rational) {
        merge_term(&mut self.terms, m, c);
    }

    fn same_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ambient(other)?;
        let (mut big, small) = if self.len() >= other.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (m, c) in &small.terms {
            big.push(m.clone(), c.clone());
        }
        Ok(big)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.ambient);
        }
        let terms = self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect();
        Self::from_map_unchecked(self.ambient, terms)
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&Rational::from_integer(BigInt::from(c)))
    }

    /// Distributive product. The result is not reduced.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.mul_with(other, Execution::Auto)
    }

    pub fn mul_with(&self, other: &Self, exec: Execution) -> Result<Self> {
        self.same_ambient(other)?;
        let (outer, inner) = if self.len() >= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let rows: Vec<(&Monomial, &Rational)> = outer.terms.iter().collect();
        let terms = exec::map_reduce(
            exec,
            &rows,
            TermMap::new,
            |&(ma, ca)| {
                let mut part = TermMap::new();
                for (mb, cb) in &inner.terms {
                    merge_term(&mut part, ma.mul(mb), ca * cb);
                }
                part
            },
            merge_maps,
        );
        Ok(Self::from_map_unchecked(self.ambient, terms))
    }

    /// `self^k`, unreduced.
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.ambient);
        for _ in 0..k {
            acc = acc.mul(self).expect("same ambient");
        }
        acc
    }

    /// Sum of the terms of total degree exactly `k`.
    pub fn graded_part(&self, k: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() == k)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Self::from_map_unchecked(self.ambient, terms)
    }

    /// Drops every term of degree above `k`.
    pub fn truncate(&self, k: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() <= k)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Self::from_map_unchecked(self.ambient, terms)
    }

    /// Pulls the class back along the map forgetting trailing points, i.e.
    /// reinterprets it in an ambient with at least as many marked points.
    pub fn pullback_to(&self, points: u32) -> Result<Self> {
        if points < self.ambient.points {
            return Err(Error::Ambient(format!(
                "cannot pull back from {} to {points} points",
                self.ambient
            )));
        }
        Ok(TautExpr {
            ambient: Ambient::new(self.ambient.genus, points),
            terms: self.terms.clone(),
        })
    }

    /// Applies `f` to every monomial, where `f` returns the image as a
    /// (coefficient, monomial) pair or `None` for zero, and re-collects terms.
    pub(crate) fn map_monomials<F>(&self, ambient: Ambient, exec: Execution, f: F) -> Result<Self>
    where
        F: Fn(&Monomial) -> Result<Option<(Rational, Monomial)>> + Sync + Send,
    {
        let rows: Vec<(&Monomial, &Rational)> = self.terms.iter().collect();
        let images = exec::map_collect(exec, &rows, |&(m, c)| f(m).map(|img| img.map(|(s, mm)| (s * c, mm))));
        let mut out = Self::zero(ambient);
        for img in images {
            if let Some((c, m)) = img? {
                out.push(m, c);
            }
        }
        Ok(out)
    }

    /// Whether any monomial still carries a `K` or `Delta` generator.
    pub fn has_point_classes(&self) -> bool {
        self.terms.keys().any(|m| m.generators().any(|g| g.is_point_class()))
    }

    /// If the class is `c * m` for a single monomial `m`, returns `c`.
    pub fn single_coefficient_of(&self, m: &Monomial) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(m).cloned(),
            _ => None,
        }
    }
}

fn merge_term(map: &mut TermMap, m: Monomial, c: Rational) {
    if c.is_zero() {
        return;
    }
    match map.entry(m) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn merge_maps(mut a: TermMap, b: TermMap) -> TermMap {
    if a.len() < b.len() {
        return merge_maps(b, a);
    }
    for (m, c) in b {
        merge_term(&mut a, m, c);
    }
    a
}

impl fmt::Display for TautExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::render(self))
    }
}
