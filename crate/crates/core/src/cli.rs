//! Command-line front end.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::chern::{chern_e, chern_f, Signature};
use crate::divisor::class_report;
use crate::error::{Error, Result};
use crate::msd::{
    degree_g1_second_kind, degree_g2_one_zero, degree_g2_second_kind_622_report, dim_projection_second_kind,
    shipped_table, tables, CountReport,
};
use crate::porteous::lambda_pipeline;
use crate::pushforward::{pushforward_last, substitute_interior};
use crate::taut::{parse_expr, Ambient, TautExpr};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Bundle {
    #[value(name = "En")]
    En,
    #[value(name = "F")]
    F,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    G2OneZero,
    G1SecondKind,
    #[value(name = "g2-622")]
    G2SixTwoTwo,
}

#[derive(Debug, Parser)]
#[command(
    name = "tautcalc",
    version,
    about = "Exact tautological-ring and boundary-counting calculator"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Divisor class of the (6;-2) locus on the stack and the coarse space.
    Class,
    /// Total Chern class of E_n or of the jet bundle F of a signature.
    Chern {
        #[arg(long, value_enum)]
        bundle: Bundle,
        #[arg(long, required_if_eq("bundle", "En"))]
        n: Option<u32>,
        #[arg(long, required_if_eq("bundle", "En"))]
        g: Option<u32>,
        #[arg(long, required_if_eq("bundle", "F"), allow_hyphen_values = true)]
        signature: Option<String>,
        /// Truncation degree (defaults to the dimension of the ambient space).
        #[arg(long)]
        degree: Option<u32>,
    },
    /// Reduce a class and forget its last marked point.
    Pushforward {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        g: u32,
        #[arg(long)]
        d: u32,
        /// Also substitute kappa_0 and kappa_1 by their interior values.
        #[arg(long)]
        interior: bool,
    },
    /// Count multi-scale differentials over the boundary points in one table.
    Count {
        #[arg(long)]
        table: String,
    },
    /// All shipped tables.
    Tables,
    /// Closed degree formulas.
    Degree {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, required_if_eq_any([("family", "g2-one-zero"), ("family", "g1-second-kind")]))]
        a: Option<u64>,
    },
    /// Dimension of the projection of a stratum of the second kind.
    Dim {
        #[arg(long)]
        g: u32,
        #[arg(long)]
        n: u32,
    },
    /// Stage-by-stage trace of the lambda coefficient.
    Report,
}

/// Rendered result of a subcommand in both output formats.
struct Output {
    text: Vec<String>,
    json: serde_json::Value,
}

impl Output {
    fn new(json: impl Serialize) -> Self {
        Output {
            text: Vec::new(),
            json: serde_json::to_value(json).expect("serializable"),
        }
    }

    fn line(mut self, value: impl std::fmt::Display, tag: &str) -> Self {
        self.text.push(format!("{value}  [{tag}]"));
        self
    }
}

fn count_lines(mut out: Output, r: &CountReport) -> Output {
    out.text.push(r.label.clone());
    for e in &r.entries {
        let factors: Vec<String> = e.factors.iter().map(|f| f.value.to_string()).collect();
        let expr = if e.divisor == 1 {
            factors.join(" x ")
        } else {
            format!("{} / {}", factors.join(" x "), e.divisor)
        };
        out = out.line(format!("  {}: {} = {}", e.case, expr, e.count), &e.cite);
    }
    if r.multiplier != 1 {
        out = out.line(format!("  multiplier {}", r.multiplier), "symmetric assignments");
    }
    out = out.line(format!("total {}", r.total), &r.label);
    if let Some(c) = r.closed_form {
        out = out.line(format!("closed form {c}"), "second-kind degree formula");
    }
    if let Some(s) = r.stated {
        out = out.line(format!("stated {s}"), "published statement");
    }
    if r.discrepancy {
        out.text.push("discrepancy: yes".into());
    }
    for n in &r.notes {
        out.text.push(format!("note: {n}"));
    }
    out
}

fn expr_output(x: &TautExpr, tag: &str) -> Output {
    Output::new(x).line(x, tag)
}

fn execute(cmd: &Command) -> Result<Output> {
    Ok(match cmd {
        Command::Class => {
            let r = class_report()?;
            Output::new(&r)
                .line(format!("stack: {}", r.stack), "lambda coefficient; test curves A and C")
                .line(format!("coarse: {}", r.coarse), "delta0 doubled on the coarse space")
                .line(
                    format!("hyperelliptic: {}", r.hyperelliptic),
                    "56 x hyperelliptic locus",
                )
                .line(
                    format!("nonhyperelliptic computed: {}", r.nonhyperelliptic.computed),
                    "stack class minus hyperelliptic component",
                )
                .line(
                    format!("nonhyperelliptic published: {}", r.nonhyperelliptic.paper),
                    "published value",
                )
                .line(format!("discrepancy: {}", r.nonhyperelliptic.discrepancy), "comparison")
        }
        Command::Chern {
            bundle: Bundle::En,
            n,
            g,
            degree,
            ..
        } => {
            let (n, g) = (n.expect("required by clap"), g.expect("required by clap"));
            let degree = degree.unwrap_or_else(|| Ambient::new(g, 1).dimension());
            let c = chern_e(n, g, degree)?;
            expr_output(&c, &format!("c(E_{n}) in genus {g} through degree {degree}"))
        }
        Command::Chern {
            bundle: Bundle::F,
            signature,
            degree,
            ..
        } => {
            let sig: Signature = signature.as_deref().expect("required by clap").parse()?;
            let c = chern_f(&sig)?;
            let c = match degree {
                Some(k) => c.truncate(*k),
                None => c,
            };
            expr_output(&c, &format!("c(F) for ({sig})"))
        }
        Command::Pushforward { expr, g, d, interior } => {
            let x = parse_expr(expr, Ambient::new(*g, *d))?;
            let pushed = pushforward_last(&x.reduce())?;
            if *interior {
                expr_output(&substitute_interior(&pushed)?, "pushforward; interior kappa values")
            } else {
                expr_output(&pushed, "pushforward along the last point")
            }
        }
        Command::Count { table } => {
            let r = shipped_table(table)?;
            count_lines(Output::new(&r), &r)
        }
        Command::Tables => {
            let all = tables()?;
            let mut out = Output::new(&all);
            for r in &all {
                out = count_lines(out, r);
            }
            out
        }
        Command::Degree { family, a } => match family {
            Family::G2OneZero => {
                let a = a.expect("required by clap");
                let v = degree_g2_one_zero(a)?;
                Output::new(json!({ "family": "g2-one-zero", "a": a, "degree": v }))
                    .line(v, &format!("degree of ({};-{a}) over M_2", a + 2))
            }
            Family::G1SecondKind => {
                let a = a.expect("required by clap");
                let v = degree_g1_second_kind(a)?;
                Output::new(json!({ "family": "g1-second-kind", "a": a, "degree": v }))
                    .line(v, &format!("degree of ({};-{a},-2) over M_1,1", a + 2))
            }
            Family::G2SixTwoTwo => {
                let r = degree_g2_second_kind_622_report()?;
                count_lines(Output::new(&r), &r)
            }
        },
        Command::Dim { g, n } => {
            let v = dim_projection_second_kind(*g, *n)?;
            Output::new(json!({ "g": g, "n": n, "dim": v })).line(v, "dimension of the projection to M_g")
        }
        Command::Report => {
            let r = lambda_pipeline()?;
            let mut out = Output::new(&r);
            for s in &r.trace {
                out.text.push(format!("{}: {}", s.stage, s.class));
            }
            out.line(format!("raw {}", r.raw), "degeneracy locus pushed to the interior")
                .line(
                    format!("diagonal {} x multiplicity {}", r.correction, r.multiplicity),
                    "excess diagonal component",
                )
                .line(format!("lambda coefficient {}", r.interior), "raw minus diagonal")
        }
    })
}

fn citation_trail(e: &Error) -> Vec<String> {
    let mut trail = Vec::new();
    let mut cur = e;
    while let Error::Stage { stage, source } = cur {
        trail.push(format!("stage: {stage}"));
        cur = source;
    }
    if let Error::Model { label, citation, .. } = cur {
        trail.push(format!("record: {label}"));
        trail.push(format!("citation: {citation}"));
    }
    trail
}

/// Exit code for a library error: 1 for model and solver failures, 2 for
/// bad input.
pub fn exit_code(e: &Error) -> i32 {
    match e.root() {
        Error::Model { .. } | Error::Solver(_) => 1,
        _ => 2,
    }
}

/// Runs the tool on `args` (including the program name).
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(o) => {
            let written = match cli.format {
                Format::Text => o.text.iter().try_for_each(|l| writeln!(out, "{l}")),
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&o.json).expect("valid json")),
            };
            if written.is_err() {
                return 1;
            }
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            for line in citation_trail(&e) {
                let _ = writeln!(err, "  {line}");
            }
            exit_code(&e)
        }
    }
}
