use std::cmp::Ordering;
use std::fmt;

use super::generator::Generator;

/// A product of generators with positive exponents, stored sorted by the
/// canonical generator order.
///
/// Monomials order by total degree first and then lexicographically with the
/// larger exponent first, so a term map iterates lowest degree first and, in
/// each degree, the leading term first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: Vec<(Generator, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { factors: Vec::new() }
    }

    pub fn generator(g: Generator) -> Self {
        Monomial::power(g, 1)
    }

    pub fn power(g: Generator, exp: u32) -> Self {
        if exp == 0 {
            return Monomial::one();
        }
        Monomial {
            factors: vec![(g, exp)],
        }
    }

    /// Builds a monomial from arbitrary `(generator, exponent)` pairs,
    /// merging repeats and dropping zero exponents.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Generator, u32)>) -> Self {
        let mut factors: Vec<(Generator, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        factors.sort_by_key(|&(g, _)| g);
        factors.dedup_by(|next, kept| {
            if next.0 == kept.0 {
                kept.1 += next.1;
                true
            } else {
                false
            }
        });
        Monomial { factors }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[(Generator, u32)] {
        &self.factors
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> + '_ {
        self.factors.iter().map(|&(g, _)| g)
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|&(g, e)| g.degree() * e).sum()
    }

    pub fn exponent(&self, g: Generator) -> u32 {
        match self.factors.binary_search_by_key(&g, |&(h, _)| h) {
            Ok(pos) => self.factors[pos].1,
            Err(_) => 0,
        }
    }

    /// Multiplies in `g^exp`.
    pub fn times(&self, g: Generator, exp: u32) -> Self {
        let mut out = self.clone();
        out.add_exponent(g, exp as i64);
        out
    }

    /// Divides out `g^exp`. Panics if the exponent would go negative.
    pub fn divided_by(&self, g: Generator, exp: u32) -> Self {
        let mut out = self.clone();
        out.add_exponent(g, -(exp as i64));
        out
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut factors = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut a, mut b) = (self.factors.iter().peekable(), other.factors.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(ga, ea)), Some(&&(gb, eb))) => match ga.cmp(&gb) {
                    Ordering::Less => {
                        factors.push((ga, ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        factors.push((gb, eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        factors.push((ga, ea + eb));
                        a.next();
                        b.next();
                    }
                },
                (Some(&&x), None) => {
                    factors.push(x);
                    a.next();
                }
                (None, Some(&&y)) => {
                    factors.push(y);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial { factors }
    }

    pub(crate) fn add_exponent(&mut self, g: Generator, delta: i64) {
        match self.factors.binary_search_by_key(&g, |&(h, _)| h) {
            Ok(pos) => {
                let e = self.factors[pos].1 as i64 + delta;
                assert!(e >= 0, "negative exponent for {g}");
                if e == 0 {
                    self.factors.remove(pos);
                } else {
                    self.factors[pos].1 = e as u32;
                }
            }
            Err(pos) => {
                assert!(delta >= 0, "negative exponent for {g}");
                if delta > 0 {
                    self.factors.insert(pos, (g, delta as u32));
                }
            }
        }
    }

    /// Whether any factor involves marked point `p`.
    pub fn touches_point(&self, p: u32) -> bool {
        self.generators().any(|g| g.touches_point(p))
    }

    /// Graded lexicographic comparison with larger exponents first.
    fn lex_desc(&self, other: &Self) -> Ordering {
        for (x, y) in self.factors.iter().zip(&other.factors) {
            match x.0.cmp(&y.0) {
                // `self` carries the more significant generator, so it is the larger monomial.
                Ordering::Less => return Ordering::Less,
                Ordering::Greater => return Ordering::Greater,
                Ordering::Equal => match y.1.cmp(&x.1) {
                    Ordering::Equal => continue,
                    o => return o,
                },
            }
        }
        other.factors.len().cmp(&self.factors.len())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.lex_desc(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (n, (g, e)) in self.factors.iter().enumerate() {
            if n > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}
