//! Verdicts from identity sweeps, with the first counterexample found.

use std::fmt;
use std::time::Duration;

use serde::Serialize;

/// A counterexample: the basis indices where an identity failed and the
/// two sides as evaluated there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

impl Witness {
    pub fn new(indices: Vec<usize>, lhs: impl fmt::Display, rhs: impl fmt::Display) -> Self {
        Witness {
            indices,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at {:?}: lhs = {}, rhs = {}", self.indices, self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witness: Option<Witness>,
    pub note: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: true,
            witness: None,
            note: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: Witness) -> Self {
        Check {
            name: name.into(),
            passed: false,
            witness: Some(witness),
            note: None,
        }
    }

    /// Pass if `witness` is `None`, fail with it otherwise.
    pub fn from_sweep(name: impl Into<String>, witness: Option<Witness>) -> Self {
        match witness {
            None => Check::pass(name),
            Some(w) => Check::fail(name, w),
        }
    }

    /// A boolean condition with no index tuple; on failure the two sides
    /// are recorded with an empty index list.
    pub fn compare<T: fmt::Display + PartialEq>(name: impl Into<String>, lhs: T, rhs: T) -> Self {
        if lhs == rhs {
            Check::pass(name)
        } else {
            Check::fail(name, Witness::new(Vec::new(), lhs, rhs))
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// The outcome of a verification suite on one subject.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub subject: String,
    pub suite: String,
    pub checks: Vec<Check>,
    /// Catalog id of the subject, when it came from the catalog.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub item: Option<String>,
    #[serde(skip)]
    pub elapsed: Option<Duration>,
}

impl Report {
    pub fn new(subject: impl Into<String>, suite: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            suite: suite.into(),
            checks: Vec::new(),
            item: None,
            elapsed: None,
        }
    }

    pub fn push(&mut self, check: Check) -> &mut Self {
        self.checks.push(check);
        self
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// First failing check, if any.
    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    /// Plain-text rendering. Timing is included only when asked for, so
    /// that the default output is byte-deterministic.
    pub fn render(&self, with_timing: bool) -> String {
        let mut out = match &self.item {
            Some(id) => format!("{} [{}] item {id}\n", self.subject, self.suite),
            None => format!("{} [{}]\n", self.subject, self.suite),
        };
        for c in &self.checks {
            let verdict = if c.passed { "pass" } else { "FAIL" };
            out.push_str(&format!("  {verdict} {}", c.name));
            if let Some(n) = &c.note {
                out.push_str(&format!(" ({n})"));
            }
            out.push('\n');
            if let Some(w) = &c.witness {
                out.push_str(&format!("       witness {w}\n"));
            }
        }
        out.push_str(if self.passed() {
            "result: pass\n"
        } else {
            "result: FAIL\n"
        });
        if with_timing {
            if let Some(t) = self.elapsed {
                out.push_str(&format!("elapsed: {:.3}s\n", t.as_secs_f64()));
            }
        }
        out
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}
