use std::collections::BTreeMap;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// Embedded dataset of boundary configurations.
pub const EMBEDDED_TABLES: &str = include_str!("../../data/boundary_tables.txt");
pub const DATASET_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CurveKind {
    /// One horizontal node; local degree 1.
    Irreducible,
    /// Two levels joined by two vertical nodes.
    TwoLevel,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Prongs {
    /// Prong numbers `kappa_i` per node.
    Numbers(Vec<u64>),
    /// Number of prong-matching classes recorded directly.
    Classes(u64),
}

/// One underlying pointed curve in the boundary of a genus-1 locus and the
/// data needed to count the smooth differentials degenerating to it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryConfig {
    pub table: String,
    pub column: u32,
    pub kind: CurveKind,
    pub twisted_count: u64,
    pub prongs: Prongs,
    pub node_params: Vec<u64>,
    pub symmetry_order: u64,
    pub citation: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl BoundaryConfig {
    pub fn label(&self) -> String {
        format!("{} col {}", self.table, self.column)
    }

    pub(crate) fn model_error(&self, message: impl Into<String>) -> Error {
        Error::Model {
            label: self.label(),
            message: message.into(),
            citation: self.citation.clone(),
        }
    }

    /// Structural checks: positive entries, node counts, and node exponents
    /// consistent with the prong numbers (`a_i = lcm(kappa) / kappa_i`).
    pub fn validate(&self) -> Result<()> {
        if self.twisted_count == 0 || self.symmetry_order == 0 {
            return Err(self.model_error("counts must be positive"));
        }
        if self.node_params.is_empty() || self.node_params.contains(&0) {
            return Err(self.model_error("node exponents must be a nonempty list of positive integers"));
        }
        let nodes = match self.kind {
            CurveKind::Irreducible => 1,
            CurveKind::TwoLevel => 2,
        };
        if self.node_params.len() != nodes {
            return Err(self.model_error(format!("expected {nodes} node exponent(s)")));
        }
        match &self.prongs {
            Prongs::Classes(0) => return Err(self.model_error("prong-matching classes must be positive")),
            Prongs::Classes(_) => {}
            Prongs::Numbers(k) => {
                if k.len() != nodes || k.contains(&0) {
                    return Err(self.model_error(format!("expected {nodes} positive prong number(s)")));
                }
                let lcm = k.iter().fold(1u64, |acc, &x| acc.lcm(&x));
                let expected: Vec<u64> = k.iter().map(|&x| lcm / x).collect();
                if self.kind == CurveKind::TwoLevel && expected != self.node_params {
                    return Err(self.model_error(format!(
                        "node exponents {:?} disagree with lcm/prong = {:?}",
                        self.node_params, expected
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Header record for one stratum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StratumInfo {
    pub id: String,
    pub signature: String,
    /// Parameter `a` for which the closed form for `(a+2; -a, -2)` applies.
    pub closed_form_a: Option<u64>,
    /// A separately published degree to compare the enumeration against.
    pub stated: Option<u64>,
    pub citation: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dataset {
    pub version: u32,
    pub strata: Vec<StratumInfo>,
    pub configs: Vec<BoundaryConfig>,
}

impl Dataset {
    pub fn embedded() -> Self {
        parse_dataset(EMBEDDED_TABLES).expect("embedded dataset is well formed")
    }

    pub fn stratum(&self, id: &str) -> Option<&StratumInfo> {
        self.strata.iter().find(|s| s.id == id)
    }

    pub fn table(&self, id: &str) -> Vec<BoundaryConfig> {
        self.configs.iter().filter(|c| c.table == id).cloned().collect()
    }

    pub fn ids(&self) -> Vec<&str> {
        self.strata.iter().map(|s| s.id.as_str()).collect()
    }
}

/// Splits `key=value key="quoted value"` into pairs.
fn fields(line: &str, lineno: usize) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    let mut rest = line.trim();
    while !rest.is_empty() {
        let (key, after) = rest
            .split_once('=')
            .ok_or_else(|| Error::parse(format!("line {lineno}: expected key=value near `{rest}`")))?;
        let key = key.trim();
        if key.is_empty() || key.contains(char::is_whitespace) {
            return Err(Error::parse(format!("line {lineno}: bad key `{key}`")));
        }
        let (value, tail) = if let Some(q) = after.strip_prefix('"') {
            let end = q
                .find('"')
                .ok_or_else(|| Error::parse(format!("line {lineno}: unterminated quote")))?;
            (&q[..end], &q[end + 1..])
        } else {
            match after.find(char::is_whitespace) {
                Some(end) => (&after[..end], &after[end..]),
                None => (after, ""),
            }
        };
        if out.insert(key.to_string(), value.to_string()).is_some() {
            return Err(Error::parse(format!("line {lineno}: duplicate key `{key}`")));
        }
        rest = tail.trim_start();
    }
    Ok(out)
}

fn num(map: &BTreeMap<String, String>, key: &str, lineno: usize) -> Result<u64> {
    let raw = map
        .get(key)
        .ok_or_else(|| Error::parse(format!("line {lineno}: missing `{key}`")))?;
    raw.parse()
        .map_err(|_| Error::parse(format!("line {lineno}: `{key}` is not a non-negative integer")))
}

fn num_list(raw: &str, key: &str, lineno: usize) -> Result<Vec<u64>> {
    raw.split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| Error::parse(format!("line {lineno}: bad entry `{x}` in `{key}`")))
        })
        .collect()
}

fn check_keys(map: &BTreeMap<String, String>, allowed: &[&str], lineno: usize) -> Result<()> {
    match map.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(Error::parse(format!("line {lineno}: unknown key `{k}`"))),
        None => Ok(()),
    }
}

/// Parses the line-oriented dataset format. Every config is validated.
pub fn parse_dataset(text: &str) -> Result<Dataset> {
    let mut version = None;
    let mut strata = Vec::new();
    let mut configs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let map = fields(line, lineno)?;
        if let Some(v) = map.get("version") {
            check_keys(&map, &["version"], lineno)?;
            let v: u32 = v
                .parse()
                .map_err(|_| Error::parse(format!("line {lineno}: bad version")))?;
            if v != DATASET_VERSION {
                return Err(Error::parse(format!("unsupported dataset version {v}")));
            }
            version = Some(v);
            continue;
        }
        if version.is_none() {
            return Err(Error::parse(format!(
                "line {lineno}: dataset must start with `version=`"
            )));
        }
        if let Some(id) = map.get("stratum") {
            check_keys(
                &map,
                &["stratum", "signature", "closed_form_a", "stated", "cite"],
                lineno,
            )?;
            strata.push(StratumInfo {
                id: id.clone(),
                signature: map
                    .get("signature")
                    .cloned()
                    .ok_or_else(|| Error::parse(format!("line {lineno}: missing `signature`")))?,
                closed_form_a: map
                    .get("closed_form_a")
                    .map(|_| num(&map, "closed_form_a", lineno))
                    .transpose()?,
                stated: map.get("stated").map(|_| num(&map, "stated", lineno)).transpose()?,
                citation: map.get("cite").cloned().unwrap_or_default(),
            });
        } else if let Some(table) = map.get("table") {
            check_keys(
                &map,
                &[
                    "table", "col", "kind", "twisted", "prongs", "classes", "params", "sym", "cite", "note",
                ],
                lineno,
            )?;
            if !strata.iter().any(|s: &StratumInfo| &s.id == table) {
                return Err(Error::parse(format!(
                    "line {lineno}: table `{table}` has no stratum header"
                )));
            }
            let kind = match map.get("kind").map(String::as_str) {
                None | Some("two-level") => CurveKind::TwoLevel,
                Some("irreducible") => CurveKind::Irreducible,
                Some(other) => return Err(Error::parse(format!("line {lineno}: unknown kind `{other}`"))),
            };
            let prongs = match (map.get("prongs"), map.get("classes")) {
                (Some(p), None) => Prongs::Numbers(num_list(p, "prongs", lineno)?),
                (None, Some(_)) => Prongs::Classes(num(&map, "classes", lineno)?),
                _ => {
                    return Err(Error::parse(format!(
                        "line {lineno}: exactly one of `prongs` or `classes` is required"
                    )))
                }
            };
            let node_params = num_list(
                map.get("params")
                    .ok_or_else(|| Error::parse(format!("line {lineno}: missing `params`")))?,
                "params",
                lineno,
            )?;
            let cfg = BoundaryConfig {
                table: table.clone(),
                column: num(&map, "col", lineno)? as u32,
                kind,
                twisted_count: num(&map, "twisted", lineno)?,
                prongs,
                node_params,
                symmetry_order: num(&map, "sym", lineno)?,
                citation: map.get("cite").cloned().unwrap_or_default(),
                note: map.get("note").cloned(),
            };
            cfg.validate()?;
            configs.push(cfg);
        } else {
            return Err(Error::parse(format!("line {lineno}: unrecognized record")));
        }
    }
    Ok(Dataset {
        version: version.ok_or_else(|| Error::parse("empty dataset"))?,
        strata,
        configs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_dataset_parses() {
        let ds = Dataset::embedded();
        assert_eq!(ds.version, 1);
        assert_eq!(ds.ids(), ["4-22", "5-32", "6-222"]);
        assert_eq!(ds.table("4-22").len(), 3);
        assert_eq!(ds.table("5-32").len(), 4);
        assert_eq!(ds.table("6-222").len(), 4);
        assert_eq!(ds.table("6-222")[3].prongs, Prongs::Classes(3));
        assert_eq!(ds.stratum("5-32").unwrap().stated, Some(42));
    }

    #[test]
    fn quoted_fields() {
        let f = fields(r#"a=1 b="x y z" c=2"#, 1).unwrap();
        assert_eq!(f["b"], "x y z");
        assert_eq!(f["c"], "2");
        assert!(fields(r#"a="oops"#, 1).is_err());
        assert!(fields("a=1 a=2", 1).is_err());
        assert!(fields("novalue", 1).is_err());
    }

    #[test]
    fn rejects_malformed() {
        let head = "version=1\nstratum=t signature=\"4;-2,-2\"\n";
        let bad = [
            "table=t col=1 twisted=1 prongs=1,1 params=1,1 sym=1 extra=3",
            "table=t col=1 twisted=1 prongs=1,1 classes=1 params=1,1 sym=1",
            "table=t col=1 twisted=1 params=1,1 sym=1",
            "table=t col=1 twisted=0 prongs=1,1 params=1,1 sym=1",
            "table=t col=1 twisted=1 prongs=1,2 params=1,1 sym=1",
            "table=t col=1 twisted=1 prongs=1 params=1 sym=1",
            "table=u col=1 twisted=1 prongs=1,1 params=1,1 sym=1",
            "table=t col=1 kind=weird twisted=1 prongs=1,1 params=1,1 sym=1",
        ];
        for line in bad {
            assert!(parse_dataset(&format!("{head}{line}\n")).is_err(), "{line}");
        }
        assert!(parse_dataset("stratum=t signature=\"4\"\n").is_err());
        assert!(parse_dataset("version=2\n").is_err());
        assert!(parse_dataset("# nothing\n").is_err());
    }

    #[test]
    fn validation_of_lcm_exponents() {
        let ds = Dataset::embedded();
        let mut c = ds.table("5-32")[3].clone();
        assert!(c.validate().is_ok());
        c.node_params = vec![3, 2];
        assert!(matches!(c.validate(), Err(Error::Model { .. })));
    }
}
