//! Classification rows and the shipped tables of real two and three
//! dimensional Jacobi-Lie bialgebras.
//!
//! A row stores every number as an expression in its parameters, so the
//! same type describes both the shipped tables and the output of the 2D
//! classifier. Rows are checked by instantiating them at sample parameter
//! values and running the full verifier.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bialgebra::{JacobiLieBialgebra, VerificationReport};
use crate::catalog::{self, AlgebraName};
use crate::error::{Error, Result};
use crate::exec;
use crate::expr::{Env, Expr, Predicate};
use crate::linalg::Vector;
use crate::scalar::{q, int, Scalar};
use crate::tensor::StructureTensor;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraRef {
    pub name: String,
    /// Parameter of VI_a / VII_a, as an expression in the row parameters.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub param: Option<String>,
}

/// One structure constant `f^ij_k` (1-based, `i < j`) as an expression.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantExpr {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParamKind {
    /// Parameter of a Lie algebra family (the `a` of VI_a).
    Algebra,
    /// Free real coefficient.
    Scalar,
    /// Finite list of values.
    Discrete,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamSpec {
    pub kind: ParamKind,
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub values: Option<Vec<String>>,
}

/// A (possibly parametrized) Jacobi-Lie bialgebra `((g, phi0), (g*, X0))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRow {
    pub alpha: Vec<String>,
    pub beta: Vec<String>,
    pub constraints: Vec<String>,
    pub g: AlgebraRef,
    pub gstar: Vec<ConstantExpr>,
    pub gstar_name: String,
    pub label: String,
    pub params: Vec<ParamSpec>,
    pub phi0: String,
    pub x0: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub dim: usize,
    pub rows: Vec<ClassificationRow>,
    pub table: u32,
    pub title: String,
}

const TABLE4: &str = include_str!("../tables/table4.json");
const TABLE5: &str = include_str!("../tables/table5.json");
const TABLE6: &str = include_str!("../tables/table6.json");
const TABLE7: &str = include_str!("../tables/table7.json");

impl Table {
    /// Shipped table number 4, 5, 6 or 7.
    pub fn builtin(number: u32) -> Result<Table> {
        let text = match number {
            4 => TABLE4,
            5 => TABLE5,
            6 => TABLE6,
            7 => TABLE7,
            _ => return Err(Error::Parameter(format!("no table {number}; expected 4 to 7"))),
        };
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("table {number}: {e}")))
    }

    pub fn all_builtin() -> Vec<Table> {
        (4..=7)
            .map(|n| Table::builtin(n).expect("shipped tables parse"))
            .collect()
    }
}

fn eval_str(text: &str, env: &Env) -> Result<Scalar> {
    text.parse::<Expr>()?.eval(env)
}

impl ClassificationRow {
    pub fn dim(&self) -> usize {
        self.alpha.len()
    }

    pub fn g_name(&self) -> Result<AlgebraName> {
        self.g.name.parse()
    }

    /// First constraint that fails at `env`, if any.
    pub fn violated_constraint(&self, env: &Env) -> Result<Option<String>> {
        for c in &self.constraints {
            let p: Predicate = c.parse()?;
            if !p.holds(env)? {
                return Ok(Some(c.clone()));
            }
        }
        Ok(None)
    }

    /// The bialgebra at the given parameter values. Constraint violations
    /// and inadmissible algebra parameters are reported as errors.
    pub fn instantiate(&self, env: &Env) -> Result<JacobiLieBialgebra> {
        if let Some(c) = self.violated_constraint(env)? {
            return Err(Error::ConstraintViolation(c));
        }
        let d = self.dim();
        let param = self.g.param.as_deref().map(|p| eval_str(p, env)).transpose()?;
        let g = catalog::lookup(self.g_name()?, param)?;
        let mut entries = Vec::with_capacity(self.gstar.len());
        for c in &self.gstar {
            if c.i == 0 || c.j == 0 || c.k == 0 || c.i >= c.j || c.j > d || c.k > d {
                return Err(Error::Parse(format!(
                    "{}: bad structure constant index ({}, {}, {})",
                    self.label, c.i, c.j, c.k
                )));
            }
            entries.push((c.i - 1, c.j - 1, c.k - 1, eval_str(&c.value, env)?));
        }
        let gstar = StructureTensor::from_entries(d, &entries)?;
        let vec = |xs: &[String]| -> Result<Vector> {
            Ok(Vector::new(
                xs.iter().map(|x| eval_str(x, env)).collect::<Result<_>>()?,
            ))
        };
        JacobiLieBialgebra::new(g.tensor, gstar, vec(&self.alpha)?, vec(&self.beta)?)
    }

    /// Parameter assignments to test: the cartesian product of the sample
    /// values of every parameter, in parameter order.
    pub fn samples(&self, policy: &SamplePolicy) -> Result<Vec<Env>> {
        let mut out = vec![Env::new()];
        for p in &self.params {
            let values: Vec<Scalar> = match p.kind {
                ParamKind::Algebra => policy.algebra.clone(),
                ParamKind::Scalar => policy.scalar.clone(),
                ParamKind::Discrete => p
                    .values
                    .as_deref()
                    .ok_or_else(|| {
                        Error::Parse(format!("{}: discrete {} without values", self.label, p.name))
                    })?
                    .iter()
                    .map(|v| v.parse())
                    .collect::<Result<_>>()?,
            };
            out = out
                .into_iter()
                .flat_map(|env| {
                    values.iter().map(move |v| {
                        let mut e = env.clone();
                        e.insert(p.name.clone(), v.clone());
                        e
                    })
                })
                .collect();
        }
        if let Some(k) = policy.limit {
            out.truncate(k.max(1));
        }
        Ok(out)
    }
}

/// Sample values used for each kind of parameter.
#[derive(Clone, Debug)]
pub struct SamplePolicy {
    pub algebra: Vec<Scalar>,
    pub scalar: Vec<Scalar>,
    /// At most this many assignments per row.
    pub limit: Option<usize>,
}

impl Default for SamplePolicy {
    fn default() -> Self {
        SamplePolicy {
            algebra: vec![q(1, 2), int(2), int(3)],
            scalar: vec![int(1), int(-1), int(2)],
            limit: None,
        }
    }
}

#[derive(Clone, Debug)]
pub enum SampleOutcome {
    Passed,
    Failed(VerificationReport),
    /// Inadmissible sample; not a failure.
    Skipped(String),
    /// The row could not be built (bad data).
    Invalid(String),
}

#[derive(Clone, Debug)]
pub struct RowReport {
    pub table: u32,
    pub index: usize,
    pub label: String,
    pub samples: Vec<(Env, SampleOutcome)>,
}

impl RowReport {
    pub fn passed_count(&self) -> usize {
        self.samples
            .iter()
            .filter(|(_, o)| matches!(o, SampleOutcome::Passed))
            .count()
    }

    /// At least one sample passed and none failed.
    pub fn passed(&self) -> bool {
        self.passed_count() > 0
            && self
                .samples
                .iter()
                .all(|(_, o)| matches!(o, SampleOutcome::Passed | SampleOutcome::Skipped(_)))
    }
}

#[derive(Clone, Debug)]
pub struct TableReport {
    pub rows: Vec<RowReport>,
}

impl TableReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(RowReport::passed)
    }

    pub fn passed_rows(&self) -> usize {
        self.rows.iter().filter(|r| r.passed()).count()
    }
}

pub fn format_env(env: &Env) -> String {
    if env.is_empty() {
        return "no parameters".into();
    }
    env.iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(", ")
}

impl fmt::Display for TableReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let skipped = r
                .samples
                .iter()
                .filter(|(_, o)| matches!(o, SampleOutcome::Skipped(_)))
                .count();
            writeln!(
                f,
                "{} table {} row {:>2} {:<14} {} sample(s) pass, {} skipped",
                if r.passed() { "PASS" } else { "FAIL" },
                r.table,
                r.index + 1,
                r.label,
                r.passed_count(),
                skipped
            )?;
            for (env, o) in &r.samples {
                match o {
                    SampleOutcome::Passed => {}
                    SampleOutcome::Skipped(why) => {
                        writeln!(f, "    skipped {}: {why}", format_env(env))?
                    }
                    SampleOutcome::Invalid(why) => {
                        writeln!(f, "    invalid {}: {why}", format_env(env))?
                    }
                    SampleOutcome::Failed(rep) => {
                        writeln!(f, "    failed at {}:", format_env(env))?;
                        for line in rep.to_string().lines() {
                            writeln!(f, "      {line}")?;
                        }
                    }
                }
            }
        }
        write!(f, "{}/{} rows pass", self.passed_rows(), self.rows.len())
    }
}

fn check_sample(row: &ClassificationRow, env: &Env) -> SampleOutcome {
    match row.instantiate(env) {
        Ok(b) => {
            let rep = b.verify();
            if rep.passed() {
                SampleOutcome::Passed
            } else {
                SampleOutcome::Failed(rep)
            }
        }
        Err(e @ (Error::ConstraintViolation(_) | Error::Parameter(_) | Error::DivisionByZero)) => {
            SampleOutcome::Skipped(e.to_string())
        }
        Err(e) => SampleOutcome::Invalid(e.to_string()),
    }
}

/// Instantiates every row at every sample and verifies it. Work is spread
/// over all (row, sample) pairs; the report keeps row order.
pub fn verify_rows(table: u32, rows: &[ClassificationRow], policy: &SamplePolicy) -> TableReport {
    let mut jobs = Vec::new();
    let mut reports: Vec<RowReport> = Vec::new();
    for (index, row) in rows.iter().enumerate() {
        reports.push(RowReport {
            table,
            index,
            label: row.label.clone(),
            samples: Vec::new(),
        });
        match row.samples(policy) {
            Ok(envs) => jobs.extend(envs.into_iter().map(|e| (index, e))),
            Err(e) => reports[index]
                .samples
                .push((Env::new(), SampleOutcome::Invalid(e.to_string()))),
        }
    }
    let outcomes = exec::map(&jobs, |(i, env)| check_sample(&rows[*i], env));
    for ((i, env), o) in jobs.into_iter().zip(outcomes) {
        reports[i].samples.push((env, o));
    }
    TableReport { rows: reports }
}

pub fn verify_table(table: &Table, policy: &SamplePolicy) -> TableReport {
    verify_rows(table.table, &table.rows, policy)
}

/// Verifies the given shipped tables (all four when `numbers` is empty).
pub fn verify_tables(numbers: &[u32], policy: &SamplePolicy) -> Result<TableReport> {
    let numbers: Vec<u32> = if numbers.is_empty() {
        vec![4, 5, 6, 7]
    } else {
        numbers.to_vec()
    };
    let mut rows = Vec::new();
    for n in numbers {
        rows.extend(verify_table(&Table::builtin(n)?, policy).rows);
    }
    Ok(TableReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn env(pairs: &[(&str, Scalar)]) -> Env {
        pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
    }

    fn row(table: u32, label: &str, nth: usize) -> ClassificationRow {
        Table::builtin(table)
            .unwrap()
            .rows
            .into_iter()
            .filter(|r| r.label == label)
            .nth(nth)
            .unwrap()
    }

    #[test]
    fn shipped_tables_have_expected_sizes() {
        let sizes: Vec<usize> = Table::all_builtin().iter().map(|t| t.rows.len()).collect();
        assert_eq!(sizes, [2, 2, 46, 30]);
    }

    #[test]
    fn iv_vi_a_row_at_a_equal_two() {
        let r = row(6, "IV / VI_a.i", 0);
        let b = r.instantiate(&env(&[("a", int(2))])).unwrap();
        assert_eq!(b.gstar.get(1, 2, 1), &int(3));
        assert!(b.verify().passed());
    }

    #[test]
    fn vi_a_vi_b_row_at_two_three() {
        let r = row(6, "VI_a / VI_b.v", 1);
        let b = r.instantiate(&env(&[("a", int(2)), ("b", int(3))])).unwrap();
        assert_eq!(b.gstar.get(1, 2, 1), &int(2));
        assert_eq!(b.alpha, Vector::new(vec![int(0), q(-7, 3), q(-7, 3)]));
        assert_eq!(b.beta, Vector::new(vec![int(-7), int(0), int(0)]));
        assert!(b.verify().passed());
        let excluded = r.instantiate(&env(&[("a", int(2)), ("b", int(-5))]));
        assert!(matches!(excluded, Err(Error::ConstraintViolation(_))));
    }

    #[test]
    fn constraint_violations_are_skipped_not_failed() {
        let r = row(6, "IV / VI_a.i", 0);
        let policy = SamplePolicy {
            algebra: vec![int(1), int(2)],
            ..SamplePolicy::default()
        };
        let rep = verify_rows(6, &[r], &policy);
        assert!(rep.passed());
        assert!(matches!(rep.rows[0].samples[0].1, SampleOutcome::Skipped(_)));
    }

    #[test]
    fn a_wrong_row_fails() {
        let mut r = row(4, "A1 / A1", 0);
        r.alpha = vec!["0".into(), "1".into()];
        r.beta = vec!["0".into(), "1".into()];
        let rep = verify_rows(4, &[r], &SamplePolicy::default());
        assert!(!rep.passed());
        assert!(rep.to_string().ends_with("0/1 rows pass"));
    }

    #[test]
    fn every_shipped_row_verifies() {
        let rep = verify_tables(&[], &SamplePolicy::default()).unwrap();
        assert!(rep.passed(), "{rep}");
        assert_eq!(rep.passed_rows(), 80);
    }

    #[test]
    fn sample_limit_truncates() {
        let r = row(6, "VI_a / VI_b.v", 0);
        assert_eq!(r.samples(&SamplePolicy::default()).unwrap().len(), 9);
        let policy = SamplePolicy {
            limit: Some(2),
            ..SamplePolicy::default()
        };
        assert_eq!(r.samples(&policy).unwrap().len(), 2);
    }
}
