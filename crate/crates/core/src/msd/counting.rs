use num_integer::Integer;
use serde::Serialize;

use super::closed_form::degree_g1_second_kind;
use super::config::{BoundaryConfig, CurveKind, Dataset, Prongs};
use crate::error::{Error, Result};

/// A named integer entering a product, with where it comes from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factor {
    pub name: String,
    pub value: u64,
    pub cite: String,
}

impl Factor {
    pub fn new(name: &str, value: u64, cite: &str) -> Self {
        Factor {
            name: name.into(),
            value,
            cite: cite.into(),
        }
    }
}

/// One summand of a count: a product of factors divided by `divisor`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Contribution {
    pub case: String,
    pub factors: Vec<Factor>,
    pub divisor: u64,
    pub count: u64,
    pub cite: String,
}

impl Contribution {
    /// Builds the summand, failing if the quotient is not an integer.
    pub fn new(case: &str, factors: Vec<Factor>, divisor: u64, cite: &str) -> Result<Self> {
        let product: u64 = factors.iter().map(|f| f.value).product();
        if divisor == 0 || !product.is_multiple_of(divisor) {
            return Err(Error::Model {
                label: case.into(),
                message: format!("{product} is not divisible by {divisor}"),
                citation: cite.into(),
            });
        }
        Ok(Contribution {
            case: case.into(),
            factors,
            divisor,
            count: product / divisor,
            cite: cite.into(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub label: String,
    pub entries: Vec<Contribution>,
    /// Sum of the entries times `multiplier`.
    pub total: u64,
    pub multiplier: u64,
    /// Value of an independent closed formula, when one applies.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<u64>,
    /// A separately stated value for comparison.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stated: Option<u64>,
    pub discrepancy: bool,
    pub notes: Vec<String>,
}

impl CountReport {
    pub fn new(label: &str, entries: Vec<Contribution>, multiplier: u64) -> Self {
        let total = entries.iter().map(|e| e.count).sum::<u64>() * multiplier;
        CountReport {
            label: label.into(),
            entries,
            total,
            multiplier,
            closed_form: None,
            stated: None,
            discrepancy: false,
            notes: Vec::new(),
        }
    }

    pub fn parts(&self) -> Vec<u64> {
        self.entries.iter().map(|e| e.count).collect()
    }

    pub fn entry(&self, case: &str) -> Option<&Contribution> {
        self.entries.iter().find(|e| e.case == case)
    }

    fn compare(&mut self) {
        self.discrepancy = [self.closed_form, self.stated]
            .iter()
            .flatten()
            .any(|&v| v != self.total);
    }
}

/// Number of prong-matching classes of a two-level graph: the gcd of the
/// prong numbers.
pub fn prong_classes(prongs: &[u64]) -> Result<u64> {
    if prongs.is_empty() {
        return Err(Error::input("prong_classes needs at least one prong number"));
    }
    if prongs.contains(&0) {
        return Err(Error::input("prong numbers must be positive"));
    }
    Ok(prongs.iter().fold(0u64, |acc, &k| acc.gcd(&k)))
}

/// Degree over the base of the smoothing family of a curve with one
/// exceptional component and two nodes `x_i y_i = t^{a_i}`.
pub fn local_degree(node_params: &[u64]) -> Result<u64> {
    match node_params {
        [a1, a2] if *a1 > 0 && *a2 > 0 => Ok(a1 + a2),
        [_, _] => Err(Error::input("node exponents must be positive")),
        other => Err(Error::input(format!(
            "local_degree covers exactly two nodes, got {}",
            other.len()
        ))),
    }
}

fn config_contribution(c: &BoundaryConfig) -> Result<Contribution> {
    c.validate()?;
    let classes = match &c.prongs {
        Prongs::Numbers(k) => prong_classes(k).map_err(|e| c.model_error(e.to_string()))?,
        Prongs::Classes(n) => *n,
    };
    let degree = match c.kind {
        CurveKind::Irreducible => 1,
        CurveKind::TwoLevel => local_degree(&c.node_params).map_err(|e| c.model_error(e.to_string()))?,
    };
    let factors = vec![
        Factor::new("twisted differentials", c.twisted_count, &c.citation),
        Factor::new("prong-matching classes", classes, "gcd of prong numbers"),
        Factor::new("local degree", degree, "sum of node exponents"),
    ];
    Contribution::new(&c.label(), factors, c.symmetry_order, &c.citation).map_err(|_| {
        c.model_error(format!(
            "{} x {} x {} is not divisible by the symmetry order {}",
            c.twisted_count, classes, degree, c.symmetry_order
        ))
    })
}

/// Number of smooth differentials degenerating to the configuration.
pub fn config_count(c: &BoundaryConfig) -> Result<u64> {
    Ok(config_contribution(c)?.count)
}

/// Sums the configurations of one table.
pub fn table_total(label: &str, table: &[BoundaryConfig]) -> Result<CountReport> {
    let entries = table.iter().map(config_contribution).collect::<Result<Vec<_>>>()?;
    Ok(CountReport::new(label, entries, 1))
}

/// Report for one shipped table, compared with the closed formula and any
/// separately stated value recorded in the dataset.
pub fn shipped_table(id: &str) -> Result<CountReport> {
    let ds = Dataset::embedded();
    let info = ds
        .stratum(id)
        .ok_or_else(|| Error::input(format!("unknown table `{id}`; known: {}", ds.ids().join(", "))))?;
    let configs = ds.table(id);
    let mut report = table_total(&format!("{} ({})", id, info.signature), &configs)?;
    report.closed_form = info.closed_form_a.map(degree_g1_second_kind).transpose()?;
    report.stated = info.stated;
    report.compare();
    if let Some(stated) = report.stated.filter(|&s| s != report.total) {
        report.notes.push(format!(
            "stated degree {stated} differs from the enumerated total {}",
            report.total
        ));
    }
    report.notes.extend(configs.iter().filter_map(|c| c.note.clone()));
    Ok(report)
}

/// Reports for every shipped table.
pub fn tables() -> Result<Vec<CountReport>> {
    Dataset::embedded().ids().into_iter().map(shipped_table).collect()
}
