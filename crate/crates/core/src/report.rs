use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    Fails,
    NotApplicable,
}

/// Outcome of one named statement. `witness` is present exactly when the
/// statement fails and instantiates the violated quantifier prefix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Statement {
    pub id: String,
    pub status: Status,
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PropertyReport {
    statements: Vec<Statement>,
}

impl PropertyReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records a statement from the first violation found by a scan.
    pub fn check(&mut self, id: &str, violation: Option<Vec<usize>>) -> &mut Self {
        let status = if violation.is_some() { Status::Fails } else { Status::Holds };
        self.statements.push(Statement { id: id.to_string(), status, witness: violation, note: None });
        self
    }

    pub fn check_bool(&mut self, id: &str, holds: bool) -> &mut Self {
        self.check(id, (!holds).then(Vec::new))
    }

    pub fn not_applicable(&mut self, id: &str, reason: impl Into<String>) -> &mut Self {
        self.statements.push(Statement {
            id: id.to_string(),
            status: Status::NotApplicable,
            witness: None,
            note: Some(reason.into()),
        });
        self
    }

    pub fn all_not_applicable(ids: &[&str], reason: &str) -> Self {
        let mut r = Self::new();
        for id in ids {
            r.not_applicable(id, reason);
        }
        r
    }

    pub fn extend(&mut self, other: PropertyReport) -> &mut Self {
        self.statements.extend(other.statements);
        self
    }

    /// Keeps only the statements whose id satisfies `keep`.
    pub fn retain(&mut self, mut keep: impl FnMut(&str) -> bool) -> &mut Self {
        self.statements.retain(|s| keep(&s.id));
        self
    }

    pub fn statements(&self) -> &[Statement] {
        &self.statements
    }

    pub fn get(&self, id: &str) -> Option<&Statement> {
        self.statements.iter().find(|s| s.id == id)
    }

    pub fn status(&self, id: &str) -> Option<Status> {
        self.get(id).map(|s| s.status)
    }

    pub fn holds(&self, id: &str) -> bool {
        self.status(id) == Some(Status::Holds)
    }

    /// No statement fails; not-applicable entries are ignored.
    pub fn no_failures(&self) -> bool {
        self.statements.iter().all(|s| s.status != Status::Fails)
    }

    /// Every statement holds (none fails, none is not-applicable).
    pub fn all_hold(&self) -> bool {
        self.statements.iter().all(|s| s.status == Status::Holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Statement> {
        self.statements.iter().filter(|s| s.status == Status::Fails)
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.statements.iter().map(|s| s.id.as_str())
    }

    /// Folds several reports over the same statement ids: a statement fails
    /// if it fails anywhere (first witness kept), holds if it holds somewhere
    /// and fails nowhere, and is otherwise not applicable.
    pub fn combine<'a>(reports: impl IntoIterator<Item = &'a PropertyReport>) -> PropertyReport {
        let mut out: Vec<Statement> = Vec::new();
        for r in reports {
            for s in &r.statements {
                match out.iter_mut().find(|o| o.id == s.id) {
                    None => out.push(s.clone()),
                    Some(o) => match (o.status, s.status) {
                        (Status::Fails, _) => {}
                        (_, Status::Fails) | (Status::NotApplicable, Status::Holds) => *o = s.clone(),
                        _ => {}
                    },
                }
            }
        }
        PropertyReport { statements: out }
    }
}

impl Serialize for PropertyReport {
    /// Serialized as an object keyed by statement id, in sorted order.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let map: BTreeMap<&str, &Statement> = self.statements.iter().map(|st| (st.id.as_str(), st)).collect();
        #[derive(Serialize)]
        struct Entry<'a> {
            status: Status,
            witness: &'a Option<Vec<usize>>,
            #[serde(skip_serializing_if = "Option::is_none")]
            note: &'a Option<String>,
        }
        s.collect_map(
            map.into_iter().map(|(k, st)| (k, Entry { status: st.status, witness: &st.witness, note: &st.note })),
        )
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            let tag = match s.status {
                Status::Holds => "holds",
                Status::Fails => "FAILS",
                Status::NotApplicable => "n/a",
            };
            write!(f, "{:<32} {tag}", s.id)?;
            if let Some(w) = &s.witness {
                write!(f, "  witness {w:?}")?;
            }
            if let Some(n) = &s.note {
                write!(f, "  ({n})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// First `x` (ascending) where `holds` is false.
pub(crate) fn scan1(n: usize, holds: impl Fn(usize) -> bool) -> Option<Vec<usize>> {
    (0..n).find(|&x| !holds(x)).map(|x| vec![x])
}

/// First `(x, y)` in lexicographic order where `holds` is false.
pub(crate) fn scan2(n: usize, holds: impl Fn(usize, usize) -> bool) -> Option<Vec<usize>> {
    for x in 0..n {
        for y in 0..n {
            if !holds(x, y) {
                return Some(vec![x, y]);
            }
        }
    }
    None
}

/// First `(x, y, z)` in lexicographic order where `holds` is false.
pub(crate) fn scan3(n: usize, holds: impl Fn(usize, usize, usize) -> bool) -> Option<Vec<usize>> {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if !holds(x, y, z) {
                    return Some(vec![x, y, z]);
                }
            }
        }
    }
    None
}
