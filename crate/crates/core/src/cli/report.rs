use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::postulates::PostulateReport;
use crate::verify::SuiteReport;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub inputs: Inputs,
    pub output: Output,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inputs {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mode: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub signature: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub kb: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub phi: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Output {
    Contract {
        result: Vec<String>,
    },
    Family {
        family: String,
        total: usize,
        members: Vec<Vec<String>>,
        truncated: bool,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        member: Option<bool>,
    },
    Closure {
        formulas: Vec<String>,
        models: Vec<String>,
    },
    Postulates {
        reports: Vec<PostulateReport>,
    },
    Suites {
        suites: Vec<SuiteReport>,
    },
}

impl Output {
    /// Whether the output records a failed check.
    pub fn failed(&self) -> bool {
        match self {
            Output::Postulates { reports } => reports.iter().any(|r| !r.pass),
            Output::Suites { suites } => suites.iter().any(|s| !s.pass()),
            _ => false,
        }
    }
}

fn braces(items: &[String]) -> String {
    format!("{{{}}}", items.join(", "))
}

impl fmt::Display for Output {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Output::Contract { result } => writeln!(f, "result: {}", braces(result)),
            Output::Family {
                family,
                total,
                members,
                truncated,
                member,
            } => {
                writeln!(f, "{family} ({total}):")?;
                for (i, m) in members.iter().enumerate() {
                    writeln!(f, "  {i}: {}", braces(m))?;
                }
                if *truncated {
                    writeln!(f, "  truncated: true ({} of {total} shown)", members.len())?;
                }
                if let Some(m) = member {
                    writeln!(f, "member: {m}")?;
                }
                Ok(())
            }
            Output::Closure { formulas, models } => {
                writeln!(f, "formulas ({}):", formulas.len())?;
                for x in formulas {
                    writeln!(f, "  {x}")?;
                }
                writeln!(f, "models: {}", braces(models))
            }
            Output::Postulates { reports } => {
                for r in reports {
                    let mut line = format!(
                        "{} {} ({} checked)",
                        if r.pass { "PASS" } else { "FAIL" },
                        r.postulate,
                        r.checked
                    );
                    if let Some(c) = &r.counterexample {
                        write!(line, ": phi = {}", c.phi)?;
                        if let Some(psi) = &c.psi {
                            write!(line, ", psi = {psi}")?;
                        }
                        write!(line, "; {}", c.detail)?;
                    }
                    writeln!(f, "{line}")?;
                }
                Ok(())
            }
            Output::Suites { suites } => {
                for s in suites {
                    write!(f, "{s}")?;
                }
                Ok(())
            }
        }
    }
}
