//! Case-splitting solver for small polynomial systems.
//!
//! The solver keeps a set of variables assumed nonzero. An equation with a
//! monomial factor in such variables is divided by it; a factor in any
//! other variable `v` splits the problem into `v = 0` and `v != 0`. A
//! variable that occurs linearly with an invertible (monomial, nonzero)
//! coefficient is eliminated by substitution. When neither applies the
//! solver splits on the zero pattern of a remaining variable. The result is
//! a finite list of branches whose union is the full solution set.

use std::collections::BTreeSet;

use crate::ring::{Poly, Ring};
use crate::scalar::Scalar;

/// One piece of the solution set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch {
    /// `None` for a free variable, otherwise its value as a Laurent
    /// polynomial in the free variables.
    pub values: Vec<Option<Poly>>,
    /// Free variables assumed nonzero on this branch.
    pub nonzero: BTreeSet<usize>,
    /// Equations left unsolved; empty when the branch is fully resolved.
    pub unresolved: Vec<Poly>,
}

impl Branch {
    pub fn free(&self) -> Vec<usize> {
        (0..self.values.len())
            .filter(|&v| self.values[v].is_none())
            .collect()
    }

    /// Full variable vector at given values of the free variables. `None`
    /// when an assumed-nonzero variable is zero.
    pub fn point(&self, free_values: &[(usize, Scalar)]) -> Option<Vec<Scalar>> {
        let n = self.values.len();
        let mut x = vec![Scalar::zero(); n];
        for (v, val) in free_values {
            x[*v] = val.clone();
        }
        if self.nonzero.iter().any(|&v| x[v].is_zero()) {
            return None;
        }
        let free = x.clone();
        for v in 0..n {
            if let Some(p) = &self.values[v] {
                x[v] = p.eval(&free)?;
            }
        }
        Some(x)
    }
}

enum Reduced {
    Drop,
    Infeasible,
    /// The equation has a factor of this (not assumed nonzero) variable.
    Factor(usize),
    Keep(Poly),
}

fn reduce(eq: &Poly, nonzero: &BTreeSet<usize>) -> Reduced {
    if eq.is_zero() {
        return Reduced::Drop;
    }
    let content = eq.monomial_content();
    if let Some(v) = (0..content.len()).find(|&v| content[v] > 0 && !nonzero.contains(&v)) {
        return Reduced::Factor(v);
    }
    let shift: Vec<i32> = content
        .iter()
        .enumerate()
        .map(|(v, &c)| if nonzero.contains(&v) { -c } else { 0 })
        .collect();
    let p = eq.shift(&shift).normalized();
    if p.is_constant() {
        Reduced::Infeasible
    } else {
        Reduced::Keep(p)
    }
}

/// `Some((coef, rest))` when `v` occurs linearly in `eq` with a coefficient
/// that is a monomial in nonzero variables.
fn unit_linear(eq: &Poly, v: usize, nonzero: &BTreeSet<usize>) -> Option<(Poly, Poly)> {
    let (c, r) = eq.linear_split(v)?;
    if c.num_terms() != 1 {
        return None;
    }
    let (mono, _) = c.terms().next()?;
    let ok = mono
        .iter()
        .enumerate()
        .all(|(u, &k)| k == 0 || nonzero.contains(&u));
    ok.then_some((c, r))
}

/// True when the single-term `p` is a monomial in nonzero variables only.
fn is_unit_monomial(p: &Poly, nonzero: &BTreeSet<usize>) -> bool {
    p.terms().all(|(mono, c)| {
        !c.is_zero()
            && mono
                .iter()
                .enumerate()
                .all(|(u, &k)| k == 0 || nonzero.contains(&u))
    })
}

#[derive(Clone)]
struct State {
    eqs: Vec<Poly>,
    values: Vec<Option<Poly>>,
    nonzero: BTreeSet<usize>,
}

impl State {
    fn assign(&mut self, v: usize, value: &Poly) {
        for e in &mut self.eqs {
            if e.contains_var(v) {
                *e = e.substitute(v, value);
            }
        }
        for p in self.values.iter_mut().flatten() {
            if p.contains_var(v) {
                *p = p.substitute(v, value);
            }
        }
        self.values[v] = Some(value.clone());
    }

    fn with_zero(&self, v: usize) -> State {
        let mut s = self.clone();
        s.assign(v, &Poly::zero_in(self.values.len()));
        s
    }

    fn with_nonzero(&self, v: usize) -> State {
        let mut s = self.clone();
        s.nonzero.insert(v);
        s
    }
}

/// Solves `eqs = 0` over `nvars` variables. `elimination_order` lists the
/// variables to eliminate first; `split_order` the variables to case-split
/// on first. Variables missing from either list come after, by index.
pub fn solve(
    nvars: usize,
    eqs: &[Poly],
    elimination_order: &[usize],
    split_order: &[usize],
) -> Vec<Branch> {
    let complete = |order: &[usize]| -> Vec<usize> {
        let mut o = order.to_vec();
        o.extend((0..nvars).filter(|v| !order.contains(v)));
        o
    };
    let elim = complete(elimination_order);
    let split = complete(split_order);
    let mut out = Vec::new();
    go(
        State {
            eqs: eqs.to_vec(),
            values: vec![None; nvars],
            nonzero: BTreeSet::new(),
        },
        &elim,
        &split,
        &mut out,
    );
    out
}

fn go(mut s: State, elim: &[usize], split: &[usize], out: &mut Vec<Branch>) {
    loop {
        let mut kept: Vec<Poly> = Vec::new();
        for e in &s.eqs {
            match reduce(e, &s.nonzero) {
                Reduced::Drop => {}
                Reduced::Infeasible => return,
                Reduced::Factor(v) => {
                    go(s.with_zero(v), elim, split, out);
                    go(s.with_nonzero(v), elim, split, out);
                    return;
                }
                Reduced::Keep(p) => {
                    if !kept.contains(&p) {
                        kept.push(p);
                    }
                }
            }
        }
        if kept.is_empty() {
            out.push(Branch {
                values: s.values,
                nonzero: s.nonzero,
                unresolved: Vec::new(),
            });
            return;
        }
        kept.sort_by_key(|p| p.num_terms());
        s.eqs = kept;
        let solved_for = |e: &Poly, v: usize| -> Option<Poly> {
            let (c, r) = unit_linear(e, v, &s.nonzero)?;
            let (mono, coef) = c.terms().next().expect("monomial");
            let inv: Vec<i32> = mono.iter().map(|k| -k).collect();
            let value = r
                .shift(&inv)
                .scale(&coef.recip().expect("nonzero coefficient"))
                .negated();
            // a variable assumed nonzero may only take a value that is
            // visibly nonzero on this branch
            let keeps_nonzero = !s.nonzero.contains(&v)
                || (value.num_terms() == 1 && is_unit_monomial(&value, &s.nonzero));
            keeps_nonzero.then_some(value)
        };
        let pick = elim
            .iter()
            .find_map(|&v| s.eqs.iter().find_map(|e| solved_for(e, v).map(|x| (v, x))));
        if let Some((v, value)) = pick {
            s.nonzero.remove(&v);
            s.assign(v, &value);
            continue;
        }
        let candidate = split
            .iter()
            .copied()
            .find(|&v| !s.nonzero.contains(&v) && s.eqs.iter().any(|e| e.contains_var(v)));
        match candidate {
            Some(v) => {
                go(s.with_zero(v), elim, split, out);
                go(s.with_nonzero(v), elim, split, out);
            }
            None => out.push(Branch {
                values: s.values,
                nonzero: s.nonzero,
                unresolved: s.eqs,
            }),
        }
        return;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn v(n: usize, i: usize) -> Poly {
        Poly::var(n, i)
    }

    fn check_solutions(n: usize, eqs: &[Poly], branches: &[Branch], grid: &[i64]) {
        // every grid solution lies on some branch, every branch point solves
        let mut idx = vec![0usize; n];
        loop {
            let x: Vec<Scalar> = idx.iter().map(|&i| int(grid[i])).collect();
            let solves = eqs.iter().all(|e| e.eval(&x).unwrap().is_zero());
            let on_branch = branches.iter().any(|b| {
                let fv: Vec<(usize, Scalar)> = b.free().into_iter().map(|u| (u, x[u].clone())).collect();
                b.point(&fv).is_some_and(|p| p == x)
            });
            assert_eq!(solves, on_branch, "at {x:?}");
            let mut k = 0;
            loop {
                if k == n {
                    return;
                }
                idx[k] += 1;
                if idx[k] < grid.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }

    #[test]
    fn product_splits() {
        // x y = 0, x + y - z = 0
        let n = 3;
        let eqs = vec![v(n, 0).times(&v(n, 1)), v(n, 0).plus(&v(n, 1)).minus(&v(n, 2))];
        let b = solve(n, &eqs, &[], &[]);
        assert!(b.iter().all(|b| b.unresolved.is_empty()));
        check_solutions(n, &eqs, &b, &[0, 1, -1, 2]);
    }

    #[test]
    fn bilinear_orthogonality() {
        // a1 b1 + a2 b2 = 0, b1 t = 0, b2 t = 0
        let n = 5;
        let (a1, a2, b1, b2, t) = (v(n, 0), v(n, 1), v(n, 2), v(n, 3), v(n, 4));
        let eqs = vec![a1.times(&b1).plus(&a2.times(&b2)), b1.times(&t), b2.times(&t)];
        let b = solve(n, &eqs, &[4, 0, 1], &[2, 3]);
        assert!(b.iter().all(|b| b.unresolved.is_empty()));
        check_solutions(n, &eqs, &b, &[0, 1, -2]);
    }

    #[test]
    fn inconsistent_system_has_no_branch() {
        let n = 1;
        let one = Poly::constant(n, int(1));
        let eqs = vec![v(n, 0).times(&v(n, 0)).minus(&v(n, 0)), v(n, 0).minus(&one).minus(&one)];
        assert!(solve(n, &eqs, &[], &[]).is_empty());
    }
}
