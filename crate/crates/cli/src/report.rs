//! The `verify` subcommand and its JSON findings report.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use cochar_core::{verify_formula, verify_restriction_table, Error, Finding, FormulaId};
use cochar_core::{RestrictionFinding, Status};

use crate::{to_json_line, Outcome, VerifyArgs, EXIT_MISMATCH, EXIT_OK};

pub const RESTRICTION_TABLE: &str = "restriction-table";

/// What `verify --formula` selects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormulaSelector {
    /// Every closed form.
    All,
    One(FormulaId),
    /// The restriction table for `(n)`, `(k1,k2)`, `(k1,k2,1)`.
    RestrictionTable,
}

impl FromStr for FormulaSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "all" => Ok(FormulaSelector::All),
            RESTRICTION_TABLE => Ok(FormulaSelector::RestrictionTable),
            other => other.parse().map(FormulaSelector::One),
        }
    }
}

impl fmt::Display for FormulaSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormulaSelector::All => f.write_str("all"),
            FormulaSelector::One(id) => write!(f, "{id}"),
            FormulaSelector::RestrictionTable => f.write_str(RESTRICTION_TABLE),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Summary {
    pub checked: usize,
    #[serde(rename = "match")]
    pub matched: usize,
    pub mismatch: usize,
    pub not_covered: usize,
}

impl Summary {
    fn from_statuses(statuses: impl IntoIterator<Item = Status>) -> Self {
        let mut s = Summary::default();
        for status in statuses {
            s.checked += 1;
            match status {
                Status::Match => s.matched += 1,
                Status::Mismatch => s.mismatch += 1,
                Status::NotCovered => s.not_covered += 1,
            }
        }
        s
    }

    fn add(&mut self, other: &Summary) {
        self.checked += other.checked;
        self.matched += other.matched;
        self.mismatch += other.mismatch;
        self.not_covered += other.not_covered;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SectionFindings {
    Formula(Vec<Finding>),
    Restriction(Vec<RestrictionFinding>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Section {
    pub id: String,
    pub expression: String,
    pub resolution_notes: Vec<String>,
    pub summary: Summary,
    pub findings: SectionFindings,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub subcommand: String,
    pub formula: String,
    pub max_degree: usize,
    pub jobs: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FindingsReport {
    pub tool: String,
    pub version: String,
    pub config: ConfigEcho,
    pub sections: Vec<Section>,
    pub summary: Summary,
}

impl FindingsReport {
    pub fn has_mismatch(&self) -> bool {
        self.summary.mismatch > 0
    }
}

const TABLE_NOTES: &[&str] = &[
    "a component is filed under a line by the row counts of lambda and mu: one row (or empty), exactly two rows, or two rows and a final 1",
    "line (k1,k2,1) b states 2 when m1 - 1 >= m2 and 1 otherwise, read literally with (m1,m2) = mu",
    "components of no listed line are reported as not covered with the computed multiplicity",
    "for nu = (n) the component (k)x(l) is reported at every split even if absent",
];

fn formula_section(f: FormulaId, max_degree: usize) -> cochar_core::Result<Section> {
    let findings = verify_formula(f, max_degree)?;
    Ok(Section {
        id: f.id().to_string(),
        expression: f.expression().to_string(),
        resolution_notes: f.resolution_notes().iter().map(|s| s.to_string()).collect(),
        summary: Summary::from_statuses(findings.iter().map(|x| x.status)),
        findings: SectionFindings::Formula(findings),
    })
}

fn table_section(max_degree: usize) -> cochar_core::Result<Section> {
    let findings = verify_restriction_table(max_degree)?;
    Ok(Section {
        id: RESTRICTION_TABLE.to_string(),
        expression: "nu restricted to S_k x S_l".to_string(),
        resolution_notes: TABLE_NOTES.iter().map(|s| s.to_string()).collect(),
        summary: Summary::from_statuses(findings.iter().map(|x| x.status)),
        findings: SectionFindings::Restriction(findings),
    })
}

pub fn build_report(
    selector: FormulaSelector,
    max_degree: usize,
    jobs: Option<usize>,
) -> cochar_core::Result<FindingsReport> {
    let sections = match selector {
        FormulaSelector::All => FormulaId::ALL
            .into_iter()
            .map(|f| formula_section(f, max_degree))
            .collect::<cochar_core::Result<Vec<_>>>()?,
        FormulaSelector::One(f) => vec![formula_section(f, max_degree)?],
        FormulaSelector::RestrictionTable => vec![table_section(max_degree)?],
    };
    let mut summary = Summary::default();
    for s in &sections {
        summary.add(&s.summary);
    }
    Ok(FindingsReport {
        tool: env!("CARGO_PKG_NAME").to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        config: ConfigEcho {
            subcommand: "verify".to_string(),
            formula: selector.to_string(),
            max_degree,
            jobs,
        },
        sections,
        summary,
    })
}

pub fn summary_lines(report: &FindingsReport) -> String {
    let mut out = String::new();
    for s in &report.sections {
        out.push_str(&format!(
            "{}: {} checked, {} match, {} mismatch, {} not-covered\n",
            s.id, s.summary.checked, s.summary.matched, s.summary.mismatch, s.summary.not_covered
        ));
    }
    out
}

pub(crate) fn verify(args: &VerifyArgs, jobs: Option<usize>) -> cochar_core::Result<Outcome> {
    let report = build_report(args.formula, args.max_degree, jobs)?;
    let code = if report.has_mismatch() {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    };
    let json = to_json_line(&report);
    let summary = summary_lines(&report);
    Ok(match &args.output {
        Some(path) => match std::fs::write(path, json) {
            Ok(()) => Outcome {
                code,
                stdout: summary,
                stderr: String::new(),
            },
            Err(e) => Outcome {
                code: crate::EXIT_USAGE,
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
            },
        },
        None => Outcome {
            code,
            stdout: json,
            stderr: summary,
        },
    })
}
