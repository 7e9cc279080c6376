//! Flat verification records shared by every check in the crate.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// A nonzero residual on a declared truncation boundary.
    BoundaryExpected,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// One checked case. `residual` is an exact value (`num/den`, surd
/// expression) or a float in scientific notation; `identity` names the
/// relation that was checked.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub suite: String,
    pub case: String,
    pub status: Status,
    pub residual: String,
    pub identity: String,
}

impl Record {
    pub fn new(
        suite: impl Into<String>,
        case: impl Into<String>,
        status: Status,
        residual: impl Into<String>,
        identity: impl Into<String>,
    ) -> Self {
        Record {
            suite: suite.into(),
            case: case.into(),
            status,
            residual: residual.into(),
            identity: identity.into(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub records: Vec<Record>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, record: Record) {
        self.records.push(record);
    }

    pub fn extend(&mut self, other: Report) {
        self.records.extend(other.records);
    }

    /// True when no record failed. Boundary records do not count as failures.
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }

    /// Relabel every record with a new suite name.
    pub fn with_suite(mut self, suite: &str) -> Self {
        for r in &mut self.records {
            r.suite = suite.to_string();
        }
        self
    }
}

impl FromIterator<Record> for Report {
    fn from_iter<I: IntoIterator<Item = Record>>(iter: I) -> Self {
        Report {
            records: iter.into_iter().collect(),
        }
    }
}

/// Concatenation in iteration order.
impl FromIterator<Report> for Report {
    fn from_iter<I: IntoIterator<Item = Report>>(iter: I) -> Self {
        Report {
            records: iter.into_iter().flat_map(|r| r.records).collect(),
        }
    }
}
