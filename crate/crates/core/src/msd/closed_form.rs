//! Closed degree formulas for projections of strata of differentials of the
//! second kind, and the dimension of their images.

use super::counting::{shipped_table, Contribution, CountReport, Factor};
use crate::error::{Error, Result};

/// Weierstrass points of a genus 2 curve.
pub const WEIERSTRASS_G2: u64 = 6;
/// Weierstrass points of a hyperelliptic genus 3 curve.
pub const WEIERSTRASS_G3: u64 = 8;

fn at_least_two(a: u64, what: &str) -> Result<()> {
    if a < 2 {
        return Err(Error::input(format!("{what} needs a >= 2, got {a}")));
    }
    Ok(())
}

/// Number of differentials of type `(a; -a)` on a genus 1 curve up to
/// isomorphism: `a^2 - 1`.
pub fn elliptic_count(a: u64) -> Result<u64> {
    if a == 0 {
        return Err(Error::input("order must be positive"));
    }
    Ok(a * a - 1)
}

/// Degree over the moduli of genus 2 curves of the locus of differentials of
/// type `(a+2; -a)`.
pub fn degree_g2_one_zero(a: u64) -> Result<u64> {
    at_least_two(a, "degree_g2_one_zero")?;
    let s = (a + 2) * (a + 2);
    Ok(2 * s * a * a - 18)
}

/// Degree onto the moduli of elliptic curves of the locus `(a+2; -a, -2)` of
/// the second kind. The symmetric case `a = 2` halves the count because the
/// two poles can be swapped.
pub fn degree_g1_second_kind(a: u64) -> Result<u64> {
    at_least_two(a, "degree_g1_second_kind")?;
    if a == 2 {
        return Ok(5);
    }
    Ok((a + 2) * (a + 2) + a * a - 10)
}

/// Breakdown of the degree of the locus `(6; -2, -2)` of the second kind in
/// genus 2 over the moduli of genus 2 curves.
pub fn degree_g2_second_kind_622_report() -> Result<CountReport> {
    let cite = "genus 2, type (6;-2,-2)";
    let entries = vec![
        Contribution::new(
            "a",
            vec![
                Factor::new(
                    "degree of (6;-2,-2,-2) over M_1,1",
                    shipped_table("6-222")?.total,
                    "table 6-222 total",
                ),
                Factor::new("pole to glue at", 3, "three double poles"),
            ],
            1,
            cite,
        )?,
        Contribution::new(
            "b",
            vec![
                Factor::new(
                    "degree of (6;-4,-2) of the second kind",
                    degree_g1_second_kind(4)?,
                    "closed form at a=4",
                ),
                Factor::new(
                    "differentials of type (2;-2) in genus 1",
                    elliptic_count(2)?,
                    "a^2 - 1 at a=2",
                ),
            ],
            1,
            cite,
        )?,
        Contribution::new(
            "c",
            vec![
                Factor::new(
                    "differentials of type (6;-6) in genus 1",
                    elliptic_count(6)?,
                    "a^2 - 1 at a=6",
                ),
                Factor::new(
                    "degree of (4;-2,-2) of the second kind",
                    degree_g1_second_kind(2)?,
                    "closed form at a=2",
                ),
            ],
            1,
            cite,
        )?,
    ];
    let mut report = CountReport::new("degree of (6;-2,-2) over M_2", entries, 2);
    report
        .notes
        .push("doubled for the symmetric assignment of the two components".into());
    Ok(report)
}

pub fn degree_g2_second_kind_622() -> Result<u64> {
    Ok(degree_g2_second_kind_622_report()?.total)
}

/// Dimension of the projection to `M_g` of a stratum of differentials of the
/// second kind with `n` zeros, assuming at least two poles, all of order at
/// least two.
pub fn dim_projection_second_kind(g: u32, n: u32) -> Result<u32> {
    if g < 1 {
        return Err(Error::input("genus must be at least 1"));
    }
    if n < 1 {
        return Err(Error::input("at least one zero is required"));
    }
    if g == 1 {
        return Ok(1);
    }
    Ok((3 * g - 3).min(2 * g + n - 2))
}
