//! Reference computations written independently of the engine, used to
//! cross-check it: normal forms from connected components of the diagonal
//! graph, power-series inversion by long division, and seeded random
//! classes.

use std::collections::BTreeMap;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use tautcalc::taut::{rat, ratio};
use tautcalc::{Ambient, Generator, Monomial, Rational, TautExpr};

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn random_generator(r: &mut ChaCha8Rng, amb: Ambient, with_points: bool) -> Generator {
    loop {
        let pick = r.gen_range(0..4);
        let g = match pick {
            0 => Generator::Kappa(r.gen_range(0..3)),
            1 if amb.genus > 0 => Generator::Lambda(r.gen_range(1..=amb.genus)),
            2 if with_points && amb.points > 0 => Generator::K(r.gen_range(1..=amb.points)),
            3 if with_points && amb.points > 1 => {
                let i = r.gen_range(1..amb.points);
                let j = r.gen_range(i + 1..=amb.points);
                Generator::Delta(i, j)
            }
            _ => continue,
        };
        return g;
    }
}

pub fn random_monomial(r: &mut ChaCha8Rng, amb: Ambient, max_factors: usize) -> Monomial {
    let n = r.gen_range(0..=max_factors);
    Monomial::from_pairs((0..n).map(|_| (random_generator(r, amb, true), r.gen_range(1..=2))))
}

pub fn random_coefficient(r: &mut ChaCha8Rng) -> Rational {
    let n = r.gen_range(-9i64..=9);
    let d = r.gen_range(1i64..=4);
    ratio(if n == 0 { 1 } else { n }, d)
}

pub fn random_expr(r: &mut ChaCha8Rng, amb: Ambient, max_terms: usize, max_factors: usize) -> TautExpr {
    let n = r.gen_range(0..=max_terms);
    let terms: Vec<_> = (0..n)
        .map(|_| (random_monomial(r, amb, max_factors), random_coefficient(r)))
        .collect();
    TautExpr::from_terms(amb, terms).unwrap()
}

pub fn random_ambient(r: &mut ChaCha8Rng, max_points: u32) -> Ambient {
    Ambient::new(r.gen_range(1..=3), r.gen_range(1..=max_points))
}

/// A random class `1 + x_1 + .. + x_k` with `x_j` homogeneous of degree `j`.
pub fn random_unital(r: &mut ChaCha8Rng, amb: Ambient, max_degree: u32) -> TautExpr {
    let mut c = TautExpr::one(amb);
    for _ in 0..r.gen_range(1..=4) {
        let m = random_monomial(r, amb, 3);
        if m.degree() == 0 || m.degree() > max_degree {
            continue;
        }
        c = c.add(&TautExpr::term(amb, random_coefficient(r), m).unwrap()).unwrap();
    }
    c
}

fn find(parent: &mut BTreeMap<u32, u32>, x: u32) -> u32 {
    let p = *parent.entry(x).or_insert(x);
    if p == x {
        return x;
    }
    let root = find(parent, p);
    parent.insert(x, root);
    root
}

/// Normal form of a monomial built directly from the clusters of points
/// joined by diagonals: each cluster becomes a star on its minimal point,
/// every diagonal beyond a spanning tree contributes `-K_root`, and the
/// cotangent classes of the cluster move to the root.
pub fn star_normal_form(m: &Monomial) -> (i64, Monomial) {
    let mut parent = BTreeMap::new();
    let mut edges = 0u32;
    let mut rest = Vec::new();
    for &(g, e) in m.factors() {
        match g {
            Generator::Delta(i, j) => {
                edges += e;
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent.insert(a.max(b), a.min(b));
                }
            }
            other => rest.push((other, e)),
        }
    }
    let points: Vec<u32> = parent.keys().copied().collect();
    let mut clusters: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for p in points {
        let root = find(&mut parent, p);
        clusters.entry(root).or_default().push(p);
    }
    let tree_edges: u32 = clusters.values().map(|c| c.len() as u32 - 1).sum();
    let mut out = Vec::new();
    let mut per_cluster_edges: BTreeMap<u32, u32> = BTreeMap::new();
    for &(g, e) in m.factors() {
        if let Generator::Delta(i, _) = g {
            let root = find(&mut parent, i);
            *per_cluster_edges.entry(root).or_default() += e;
        }
    }
    for (root, members) in &clusters {
        let excess = per_cluster_edges[root] - (members.len() as u32 - 1);
        for &p in members.iter().filter(|&&p| p != *root) {
            out.push((Generator::Delta(*root, p), 1));
        }
        if excess > 0 {
            out.push((Generator::K(*root), excess));
        }
    }
    for (g, e) in rest {
        match g {
            Generator::K(p) if parent.contains_key(&p) => out.push((Generator::K(find(&mut parent, p)), e)),
            other => out.push((other, e)),
        }
    }
    let excess = edges - tree_edges;
    let sign = if excess.is_multiple_of(2) { 1 } else { -1 };
    (sign, Monomial::from_pairs(out))
}

pub fn star_normal_form_expr(x: &TautExpr) -> TautExpr {
    let amb = x.ambient();
    let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
    for (m, c) in x.terms() {
        let (s, nf) = star_normal_form(m);
        *acc.entry(nf).or_insert_with(|| rat(0)) += c * rat(s);
    }
    TautExpr::from_terms(amb, acc).unwrap()
}

/// Power-series inverse by long division: `y_0 = 1`,
/// `y_k = -sum_{j=1..k} x_j y_{k-j}`.
pub fn inverse_by_division(c: &TautExpr, max_degree: u32) -> TautExpr {
    let amb = c.ambient();
    let x: Vec<TautExpr> = (0..=max_degree).map(|k| c.graded_part(k)).collect();
    let mut y = vec![TautExpr::one(amb)];
    for k in 1..=max_degree as usize {
        let mut acc = TautExpr::zero(amb);
        for j in 1..=k {
            acc = acc.sub(&x[j].mul(&y[k - j]).unwrap()).unwrap();
        }
        y.push(acc);
    }
    y.iter().fold(TautExpr::zero(amb), |a, b| a.add(b).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::{any, prop_assert_eq, proptest, ProptestConfig};
    use tautcalc::chern::{chern_invert, inverse_component};
    use tautcalc::parse_expr;

    fn mono(s: &str, amb: Ambient) -> Monomial {
        let x = parse_expr(s, amb).unwrap();
        let m = x.terms().next().unwrap().0.clone();
        m
    }

    #[test]
    fn oracle_examples() {
        let amb = Ambient::new(3, 4);
        assert_eq!(
            star_normal_form(&mono("D14*D24*D34", amb)),
            (1, mono("D12*D13*D14", amb))
        );
        assert_eq!(star_normal_form(&mono("D12^3", amb)), (1, mono("K1^2*D12", amb)));
        assert_eq!(
            star_normal_form(&mono("D12*D13*D23", amb)),
            (-1, mono("K1*D12*D13", amb))
        );
        assert_eq!(star_normal_form(&mono("K4*D34*D12", amb)), (1, mono("K3*D12*D34", amb)));
        assert_eq!(star_normal_form(&mono("lambda2*K2", amb)), (1, mono("lambda2*K2", amb)));
    }

    #[test]
    fn division_oracle_example() {
        let amb = Ambient::new(3, 1);
        let c = parse_expr("1 + lambda1 - K1", amb).unwrap();
        let want = parse_expr("1 - (lambda1 - K1) + (lambda1 - K1)^2 - (lambda1 - K1)^3", amb).unwrap();
        assert_eq!(inverse_by_division(&c, 3), want);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn reduction_matches_cluster_oracle(seed in any::<u64>()) {
            let mut r = rng(seed);
            let amb = random_ambient(&mut r, 4);
            let x = random_expr(&mut r, amb, 5, 5);
            prop_assert_eq!(x.reduce(), star_normal_form_expr(&x));
        }

        #[test]
        fn reduction_is_order_independent(seed in any::<u64>()) {
            let mut r = rng(seed);
            let amb = random_ambient(&mut r, 5);
            let x = random_expr(&mut r, amb, 4, 5);
            let canonical = x.reduce();
            for _ in 0..4 {
                let shuffled = x.reduce_by(|rules| r.gen_range(0..rules.len()));
                prop_assert_eq!(&shuffled, &canonical);
            }
        }

        #[test]
        fn inverse_components_match_long_division(seed in any::<u64>()) {
            let mut r = rng(seed);
            let amb = random_ambient(&mut r, 2);
            let c = random_unital(&mut r, amb, 6);
            let parts: Vec<TautExpr> = (1..=6).map(|k| c.graded_part(k)).collect();
            let oracle = inverse_by_division(&c, 6);
            for n in 0..=6 {
                prop_assert_eq!(inverse_component(n, &parts, amb), oracle.graded_part(n));
            }
        }

        #[test]
        fn inversion_is_an_involution(seed in any::<u64>()) {
            let mut r = rng(seed);
            let amb = random_ambient(&mut r, 2);
            let c = random_unital(&mut r, amb, 5);
            let back = chern_invert(&chern_invert(&c, 5).unwrap(), 5).unwrap();
            prop_assert_eq!(back, c.truncate(5));
        }
    }
}
