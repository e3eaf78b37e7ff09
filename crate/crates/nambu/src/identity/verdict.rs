//! Pass/fail verdicts carrying exact counterexample witnesses.

use std::fmt;

use crate::scalar::Polynomial;

/// A counterexample: the entry tuple that was checked (in the checker's
/// documented slot order) and the exact nonzero residual it produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub entries: Vec<Polynomial>,
    pub residual: Polynomial,
}

/// Outcome of an identity check.  `checked` counts evaluated instances;
/// enumerating checkers stop at the first failure, so on a fail verdict it
/// is the 1-based position of the witness in the enumeration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub passed: bool,
    pub witness: Option<Witness>,
    pub checked: u64,
}

impl Verdict {
    pub fn pass(checked: u64) -> Self {
        Verdict {
            passed: true,
            witness: None,
            checked,
        }
    }

    pub fn fail(entries: Vec<Polynomial>, residual: Polynomial, checked: u64) -> Self {
        Verdict {
            passed: false,
            witness: Some(Witness { entries, residual }),
            checked,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            write!(f, "pass ({} checked)", self.checked)
        } else {
            match &self.witness {
                Some(w) => {
                    let entries: Vec<String> =
                        w.entries.iter().map(|e| e.to_string()).collect();
                    write!(
                        f,
                        "fail ({} checked; witness [{}]; residual {})",
                        self.checked,
                        entries.join(", "),
                        w.residual
                    )
                }
                None => write!(f, "fail ({} checked)", self.checked),
            }
        }
    }
}
