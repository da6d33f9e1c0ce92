//! Exhaustive classification over a two-dimensional `g`.
//!
//! Step 1 is solved exactly with [`polysys::solve`]. Each solution branch
//! is cut into cells by the zero pattern of its free variables, so on a
//! cell every free variable is a nonzero parameter. Cells are then reduced
//! modulo Aut(g): sample points are drawn from every cell, and each point
//! not already equivalent to a known representative gets one. A new
//! representative is, in order of preference, a point of the same cell
//! with parameters in {1, -1, 2, -2}, a one-parameter subfamily of the
//! cell with the other parameters fixed to such values, or the point
//! itself.

use std::collections::BTreeSet;

use crate::bialgebra::JacobiLieBialgebra;
use crate::catalog::LieAlgebra;
use crate::display;
use crate::equivalence::{identify_dual, search_transform, SearchRegion, Target};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::ring::{Poly, Ring};
use crate::scalar::{int, q, Scalar};
use crate::tables::{AlgebraRef, ClassificationRow, ConstantExpr, ParamKind, ParamSpec};

use super::polysys::{self, Branch};
use super::{gstar_slots, symbolic_system, unknown_count, unknown_names, UnknownAssignment};

/// Name of the parameter of emitted one-parameter families.
pub const FAMILY_PARAM: &str = "s";

/// A branch with a fixed zero pattern: `params` are the free variables,
/// all nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub values: Vec<Poly>,
    pub params: Vec<usize>,
}

impl Cell {
    pub fn point(&self, vals: &[Scalar]) -> Option<Vec<Scalar>> {
        let n = self.values.len();
        let mut x = vec![Scalar::zero(); n];
        for (v, val) in self.params.iter().zip(vals) {
            if val.is_zero() {
                return None;
            }
            x[*v] = val.clone();
        }
        self.values.iter().map(|p| p.eval(&x)).collect()
    }
}

/// Evaluates variable `v` of a Laurent polynomial at a nonzero constant.
fn fix_var(p: &Poly, v: usize, c: &Scalar) -> Poly {
    let n = p.nvars();
    let mut out = Poly::zero_in(n);
    for (e, coef) in p.terms() {
        let mut e2 = e.clone();
        let k = e2[v];
        e2[v] = 0;
        let factor = c.pow(k).expect("nonzero value");
        out = out.plus(&Poly::monomial(e2, coef * &factor));
    }
    out
}

fn cells_of(branch: &Branch) -> Vec<Cell> {
    let n = branch.values.len();
    let free = branch.free();
    let optional: Vec<usize> = free
        .iter()
        .copied()
        .filter(|v| !branch.nonzero.contains(v))
        .collect();
    let mut out = Vec::new();
    for mask in 0..(1u32 << optional.len()) {
        let zeros: BTreeSet<usize> = optional
            .iter()
            .enumerate()
            .filter(|(b, _)| mask & (1 << b) == 0)
            .map(|(_, v)| *v)
            .collect();
        let mut values: Vec<Poly> = (0..n)
            .map(|v| match &branch.values[v] {
                Some(p) => p.clone(),
                None if zeros.contains(&v) => Poly::zero_in(n),
                None => Poly::var(n, v),
            })
            .collect();
        for &z in &zeros {
            for p in &mut values {
                if p.contains_var(z) {
                    *p = p.substitute(z, &Poly::zero_in(n));
                }
            }
        }
        let params = free.iter().copied().filter(|v| !zeros.contains(v)).collect();
        out.push(Cell { values, params });
    }
    out
}

/// A class representative: a single bialgebra, or a one-parameter family
/// whose parameter is the unknown `param`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representative {
    /// Each unknown as a polynomial in at most the family parameter.
    pub exprs: Vec<Poly>,
    pub param: Option<usize>,
    /// Set when no simpler normal form was found.
    pub unnormalized: bool,
}

impl Representative {
    fn point(values: Vec<Scalar>, unnormalized: bool) -> Self {
        let n = values.len();
        Representative {
            exprs: values.into_iter().map(|c| Poly::constant(n, c)).collect(),
            param: None,
            unnormalized,
        }
    }

    pub fn is_family(&self) -> bool {
        self.param.is_some()
    }

    /// Unknowns at parameter value `s` (ignored for a single point).
    pub fn values_at(&self, s: &Scalar) -> Option<Vec<Scalar>> {
        let n = self.exprs.len();
        let mut x = vec![Scalar::zero(); n];
        if let Some(v) = self.param {
            if s.is_zero() {
                return None;
            }
            x[v] = s.clone();
        }
        self.exprs.iter().map(|p| p.eval(&x)).collect()
    }

    pub fn bialgebra_at(&self, g: &LieAlgebra, s: &Scalar) -> Result<JacobiLieBialgebra> {
        let vals = self
            .values_at(s)
            .ok_or_else(|| Error::Parameter(format!("{FAMILY_PARAM} = {s} is excluded")))?;
        UnknownAssignment::from_flat(g.dim(), &vals)?.bialgebra(g)
    }

    /// Looks for an automorphism carrying `b` onto this representative
    /// (onto some member, for a family).
    pub fn covers(
        &self,
        g: &LieAlgebra,
        b: &JacobiLieBialgebra,
        region: &SearchRegion,
    ) -> Result<Option<Matrix>> {
        let d = g.dim();
        let m = d * d * (d - 1) / 2;
        let consts: Vec<Option<Scalar>> = self.exprs.iter().map(Poly::as_constant).collect();
        let gstar = consts[..m]
            .iter()
            .cloned()
            .collect::<Option<Vec<_>>>()
            .map(|t| UnknownAssignment {
                dim: d,
                gstar: t,
                alpha: vec![Scalar::zero(); d],
                beta: vec![Scalar::zero(); d],
            }
            .gstar_tensor());
        let accept = |c: &JacobiLieBialgebra| {
            let x = UnknownAssignment::of(c).to_flat();
            let s = self.param.map(|v| x[v].clone()).unwrap_or_else(Scalar::zero);
            self.values_at(&s).is_some_and(|y| y == x)
        };
        let target = Target {
            gstar,
            alpha: consts[m..m + d].to_vec(),
            beta: consts[m + d..].to_vec(),
            accept: Some(&accept),
        };
        Ok(search_transform(g, b, &target, region)?.found.map(|(a, _)| a))
    }
}

/// Output of [`classify_d2`].
#[derive(Clone, Debug)]
pub struct D2Classification {
    pub g: LieAlgebra,
    pub branches: Vec<Branch>,
    pub cells: Vec<Cell>,
    pub representatives: Vec<Representative>,
    pub rows: Vec<ClassificationRow>,
    /// Unresolved branches and searches that found nothing.
    pub log: Vec<String>,
}

impl D2Classification {
    /// Index of the first representative equivalent to `b`, with the
    /// witness.
    pub fn covering(
        &self,
        b: &JacobiLieBialgebra,
        region: &SearchRegion,
    ) -> Result<Option<(usize, Matrix)>> {
        for (i, r) in self.representatives.iter().enumerate() {
            if let Some(a) = r.covers(&self.g, b, region)? {
                return Ok(Some((i, a)));
            }
        }
        Ok(None)
    }
}

fn normal_values() -> Vec<Scalar> {
    vec![int(1), int(-1), int(2), int(-2)]
}

fn generic_values() -> Vec<Scalar> {
    vec![int(3), q(-1, 2)]
}

fn tuples(values: &[Scalar], k: usize) -> Vec<Vec<Scalar>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                values.iter().map(move |v| {
                    let mut t = t.clone();
                    t.push(v.clone());
                    t
                })
            })
            .collect();
    }
    out
}

/// Solves Step 1 over a two-dimensional `g` and reduces the solutions to
/// representatives modulo automorphisms of `g`.
pub fn classify_d2(g: &LieAlgebra) -> Result<D2Classification> {
    classify_d2_in(g, &SearchRegion::default())
}

pub fn classify_d2_in(g: &LieAlgebra, region: &SearchRegion) -> Result<D2Classification> {
    let d = g.dim();
    if d != 2 {
        return Err(Error::Unsupported(format!(
            "symbolic classification is implemented for dimension 2, not {d}"
        )));
    }
    let n = unknown_count(d);
    let m = d * d * (d - 1) / 2;
    let eqs = symbolic_system(g);
    // eliminate dual constants first, split on beta, then alpha
    let elim: Vec<usize> = (0..n).collect();
    let split: Vec<usize> = (m + d..n).chain(m..m + d).chain(0..m).collect();
    let branches = polysys::solve(n, &eqs, &elim, &split);
    let mut log = Vec::new();
    for b in branches.iter().filter(|b| !b.unresolved.is_empty()) {
        let names = unknown_names(d);
        log.push(format!(
            "unresolved branch: {}",
            b.unresolved
                .iter()
                .map(|p| p.display_with(&names))
                .collect::<Vec<_>>()
                .join(", ")
        ));
    }
    let mut cells: Vec<Cell> = Vec::new();
    for b in branches.iter().filter(|b| b.unresolved.is_empty()) {
        for c in cells_of(b) {
            if !cells.contains(&c) {
                cells.push(c);
            }
        }
    }
    cells.sort_by_key(|c| c.params.len());

    let mut reps: Vec<Representative> = Vec::new();
    let covered = |reps: &[Representative], b: &JacobiLieBialgebra| -> Result<bool> {
        for r in reps {
            if r.covers(g, b, region)?.is_some() {
                return Ok(true);
            }
        }
        Ok(false)
    };
    for cell in &cells {
        let k = cell.params.len();
        let simple = tuples(&normal_values(), k);
        let generic = tuples(&generic_values(), k);
        for (is_simple, p) in simple
            .iter()
            .map(|p| (true, p))
            .chain(generic.iter().map(|p| (false, p)))
        {
            let Some(x) = cell.point(p) else { continue };
            let b = UnknownAssignment::from_flat(d, &x)?.bialgebra(g)?;
            if covered(&reps, &b)? {
                continue;
            }
            if is_simple {
                reps.push(Representative::point(x, false));
                continue;
            }
            let mut found = None;
            for c in &simple {
                let Some(y) = cell.point(c) else { continue };
                let r = Representative::point(y, false);
                if r.covers(g, &b, region)?.is_some() {
                    found = Some(r);
                    break;
                }
            }
            if found.is_none() {
                'families: for (i, &pv) in cell.params.iter().enumerate() {
                    for rest in tuples(&normal_values(), k - 1) {
                        let mut exprs = cell.values.clone();
                        for (j, &other) in cell.params.iter().enumerate().filter(|(j, _)| *j != i) {
                            let val = &rest[if j < i { j } else { j - 1 }];
                            exprs = exprs.iter().map(|e| fix_var(e, other, val)).collect();
                        }
                        let r = Representative {
                            exprs,
                            param: Some(pv),
                            unnormalized: false,
                        };
                        if r.covers(g, &b, region)?.is_some() {
                            found = Some(r);
                            break 'families;
                        }
                    }
                }
            }
            let r = match found {
                Some(r) => r,
                None => {
                    log.push(format!(
                        "no normal form found for {}; kept as is",
                        display::linear_combination(
                            &x.iter()
                                .zip(unknown_names(d))
                                .map(|(v, nme)| (v.clone(), nme))
                                .collect::<Vec<_>>()
                        )
                    ));
                    Representative::point(x, true)
                }
            };
            reps.push(r);
        }
    }
    // A family found late may absorb single points found earlier.
    let families: Vec<Representative> = reps.iter().filter(|r| r.is_family()).cloned().collect();
    let mut kept = Vec::new();
    for r in reps {
        if !r.is_family() {
            let b = r.bialgebra_at(g, &Scalar::zero())?;
            if covered(&families, &b)? {
                continue;
            }
        }
        kept.push(r);
    }
    let rows = rows_for(g, &kept)?;
    Ok(D2Classification {
        g: g.clone(),
        branches,
        cells,
        representatives: kept,
        rows,
        log,
    })
}

/// Text of a Laurent polynomial in at most the variable `v`.
fn univariate_text(p: &Poly, v: Option<usize>) -> String {
    if let Some(c) = p.as_constant() {
        return c.to_string();
    }
    let v = v.expect("non-constant expression depends on the family parameter");
    let mut out = String::new();
    let mut terms: Vec<(i32, Scalar)> = p.terms().map(|(e, c)| (e[v], c.clone())).collect();
    terms.reverse();
    for (idx, (k, c)) in terms.iter().enumerate() {
        let power = |k: i32| vec![FAMILY_PARAM; k.unsigned_abs() as usize].join("*");
        let mag = c.abs();
        let body = match k.cmp(&0) {
            std::cmp::Ordering::Equal => mag.to_string(),
            std::cmp::Ordering::Greater if mag.is_one() => power(*k),
            std::cmp::Ordering::Greater => format!("{mag}*{}", power(*k)),
            std::cmp::Ordering::Less if *k == -1 => format!("{mag}/{FAMILY_PARAM}"),
            std::cmp::Ordering::Less => format!("{mag}/({})", power(*k)),
        };
        if idx == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

fn combination_text(coeffs: &[String], basis: &str) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c == "0" {
            continue;
        }
        let (neg, mag) = match c.strip_prefix('-') {
            Some(rest) if !rest.contains([' ', '+', '-']) => (true, rest.to_string()),
            _ => (false, c.clone()),
        };
        let mag = if mag.contains(' ') { format!("({mag})") } else { mag };
        let term = if mag == "1" {
            format!("{basis}{}", i + 1)
        } else {
            format!("{mag} {basis}{}", i + 1)
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

const ROMAN: [&str; 12] = [
    "i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x", "xi", "xii",
];

fn rows_for(g: &LieAlgebra, reps: &[Representative]) -> Result<Vec<ClassificationRow>> {
    let d = g.dim();
    let m = d * d * (d - 1) / 2;
    let mut variants: Vec<(String, Vec<Poly>)> = Vec::new();
    let mut rows = Vec::new();
    for r in reps {
        let b = r.bialgebra_at(g, &Scalar::one())?;
        let id = identify_dual(&b.gstar)?;
        let base = id.algebra.name.as_str().to_string();
        let gstar_name = if b.gstar == id.algebra.tensor {
            base.clone()
        } else {
            let tensor_exprs = r.exprs[..m].to_vec();
            let same_count = variants.iter().filter(|(n, _)| *n == base).count();
            let pos = variants
                .iter()
                .filter(|(n, _)| *n == base)
                .position(|(_, t)| *t == tensor_exprs);
            let idx = match pos {
                Some(i) => i,
                None => {
                    variants.push((base.clone(), tensor_exprs));
                    same_count
                }
            };
            format!("{base}.{}", ROMAN.get(idx).copied().unwrap_or("n"))
        };
        let text: Vec<String> = r.exprs.iter().map(|p| univariate_text(p, r.param)).collect();
        let gstar = gstar_slots(d)
            .into_iter()
            .zip(&text)
            .filter(|(_, t)| *t != "0")
            .map(|((i, j, k), t)| ConstantExpr {
                i: i + 1,
                j: j + 1,
                k: k + 1,
                value: t.clone(),
            })
            .collect();
        let alpha = text[m..m + d].to_vec();
        let beta = text[m + d..].to_vec();
        let (params, constraints) = if r.is_family() {
            (
                vec![ParamSpec {
                    kind: ParamKind::Scalar,
                    name: FAMILY_PARAM.into(),
                    values: None,
                }],
                vec![format!("{FAMILY_PARAM} != 0")],
            )
        } else {
            (Vec::new(), Vec::new())
        };
        rows.push(ClassificationRow {
            x0: combination_text(&alpha, "X"),
            phi0: combination_text(&beta, "X~"),
            alpha,
            beta,
            constraints,
            g: AlgebraRef {
                name: g.name.as_str().into(),
                param: None,
            },
            gstar,
            label: format!("{} / {gstar_name}", g.name),
            gstar_name,
            params,
        });
    }
    Ok(rows)
}
