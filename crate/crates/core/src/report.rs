//! Check outcomes and human-readable witnesses.

use std::fmt;

use crate::kernel::{Coeff, Scalar, Tensor2, Tensor3};

/// Where a check failed: the offending basis tuple and the nonzero difference there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub at: Vec<String>,
    pub discrepancy: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at ({}): {}", self.at.join(", "), self.discrepancy)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub witness: Option<Witness>,
}

impl Check {
    pub fn from_witness(name: impl Into<String>, witness: Option<Witness>) -> Self {
        Check {
            name: name.into(),
            pass: witness.is_none(),
            witness,
        }
    }

    pub fn flag(name: impl Into<String>, pass: bool) -> Self {
        Check {
            name: name.into(),
            pass,
            witness: None,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {}",
            if self.pass { "pass" } else { "FAIL" },
            self.name
        )?;
        if let Some(w) = &self.witness {
            write!(f, " {w}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn single(check: Check) -> Self {
        Report {
            checks: vec![check],
        }
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    /// Same checks with `prefix: ` prepended to every name.
    pub fn prefixed(mut self, prefix: &str) -> Self {
        for c in &mut self.checks {
            c.name = format!("{prefix}: {}", c.name);
        }
        self
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

fn term(coef: &str, basis: &str, first: bool) -> String {
    let (neg, mag) = match coef.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, coef),
    };
    let sign = match (first, neg) {
        (true, false) => "",
        (true, true) => "-",
        (false, false) => " + ",
        (false, true) => " - ",
    };
    if mag == "1" {
        format!("{sign}{basis}")
    } else if mag.contains(['+', '-', ' ']) {
        format!("{sign}({mag})*{basis}")
    } else {
        format!("{sign}{mag}*{basis}")
    }
}

fn render<'a, T: Coeff + fmt::Display + 'a>(
    items: impl Iterator<Item = (String, &'a T)>,
) -> String {
    let mut out = String::new();
    for (basis, c) in items {
        out.push_str(&term(&c.to_string(), &basis, out.is_empty()));
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

/// `2*e1 - 1/2*e3`.
pub fn fmt_vector<T: Coeff + fmt::Display>(labels: &[String], v: &[T]) -> String {
    render(
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (labels[i].clone(), c)),
    )
}

/// `e1⊗e2 - 3*e2⊗e1`.
pub fn fmt_tensor2<T: Coeff + fmt::Display>(labels: &[String], t: &Tensor2<T>) -> String {
    render(
        t.nonzero()
            .map(|(i, j, c)| (format!("{}⊗{}", labels[i], labels[j]), c)),
    )
}

pub fn fmt_tensor3<T: Coeff + fmt::Display>(labels: &[String], t: &Tensor3<T>) -> String {
    render(
        t.nonzero()
            .map(|((i, j, k), c)| (format!("{}⊗{}⊗{}", labels[i], labels[j], labels[k]), c)),
    )
}

pub(crate) fn labels_at(labels: &[String], idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| labels[i].clone()).collect()
}

pub(crate) fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn vec_is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}
