//! Search for a change of basis `P` (rows `p_i`) with
//! `[p_i, p_j]_src = dst_ij^n p_n`, optionally subject to linear
//! conditions on the rows.
//!
//! Rows are chosen one at a time. Every bracket condition whose rows are
//! all placed is linear in the newest row, so each step solves an exact
//! affine system and enumerates only its free coordinates over the grid.

use crate::exec;
use crate::linalg::{rank, solve_affine, Matrix, Vector};
use crate::scalar::Scalar;
use crate::tensor::StructureTensor;

use super::region::for_each_tuple;

/// `p_i . v = targets[i]` for every row where a target is given.
#[derive(Clone, Debug)]
pub struct RowFilter {
    pub v: Vector,
    pub targets: Vec<Option<Scalar>>,
}

/// `sum_i coeffs[i] p_i = target`.
#[derive(Clone, Debug)]
pub struct Combination {
    pub coeffs: Vec<Scalar>,
    pub target: Vector,
}

pub struct BasisSearch<'a> {
    src: &'a StructureTensor,
    dst: &'a StructureTensor,
    grid: &'a [Scalar],
    row_filters: Vec<RowFilter>,
    combinations: Vec<Combination>,
    killing_src: Matrix,
    killing_dst: Matrix,
}

#[derive(Clone, Debug)]
enum Constraint {
    Pair(usize, usize),
    Combination(usize),
}

struct Plan {
    order: Vec<usize>,
    /// Constraints that become fully determined when `order[t]` is placed.
    at: Vec<Vec<Constraint>>,
}

type Accept<'a> = &'a (dyn Fn(&Matrix) -> bool + Sync);

impl<'a> BasisSearch<'a> {
    pub fn new(src: &'a StructureTensor, dst: &'a StructureTensor, grid: &'a [Scalar]) -> Self {
        BasisSearch {
            src,
            dst,
            grid,
            row_filters: Vec::new(),
            combinations: Vec::new(),
            killing_src: src.killing_form(),
            killing_dst: dst.killing_form(),
        }
    }

    pub fn row_filter(mut self, f: RowFilter) -> Self {
        self.row_filters.push(f);
        self
    }

    pub fn combination(mut self, c: Combination) -> Self {
        self.combinations.push(c);
        self
    }

    fn dim(&self) -> usize {
        self.src.dim()
    }

    fn involved(&self, c: &Constraint) -> Vec<usize> {
        let d = self.dim();
        match c {
            Constraint::Pair(i, j) => {
                let mut v = vec![*i, *j];
                v.extend((0..d).filter(|&n| !self.dst.get(*i, *j, n).is_zero()));
                v
            }
            Constraint::Combination(k) => (0..d)
                .filter(|&i| !self.combinations[*k].coeffs[i].is_zero())
                .collect(),
        }
    }

    fn plan_for(&self, order: &[usize]) -> Plan {
        let d = self.dim();
        let mut pos = vec![0; d];
        for (t, &r) in order.iter().enumerate() {
            pos[r] = t;
        }
        let mut at = vec![Vec::new(); d];
        let mut all: Vec<Constraint> = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                all.push(Constraint::Pair(i, j));
            }
        }
        all.extend((0..self.combinations.len()).map(Constraint::Combination));
        for c in all {
            let inv = self.involved(&c);
            if let Some(t) = inv.iter().map(|&r| pos[r]).max() {
                at[t].push(c);
            }
        }
        Plan {
            order: order.to_vec(),
            at,
        }
    }

    /// Rough enumeration cost of a row order: fewer free coordinates early
    /// is better.
    fn cost(&self, plan: &Plan) -> f64 {
        let d = self.dim();
        let g = self.grid.len().max(2) as f64;
        let mut cum = 0usize;
        let mut total = 0.0;
        for (t, &r) in plan.order.iter().enumerate() {
            let mut eqs = self
                .row_filters
                .iter()
                .filter(|f| f.targets[r].is_some())
                .count();
            eqs += d * plan.at[t].len();
            cum += d.saturating_sub(eqs);
            total += g.powi(cum as i32);
        }
        total
    }

    fn best_plan(&self) -> Plan {
        let d = self.dim();
        let mut best: Option<(f64, Plan)> = None;
        for order in permutations(d) {
            let plan = self.plan_for(&order);
            let c = self.cost(&plan);
            if best.as_ref().is_none_or(|(bc, _)| c < *bc) {
                best = Some((c, plan));
            }
        }
        best.expect("at least one permutation").1
    }

    /// Linear equations `coef . x = rhs` on the row `r` being placed.
    fn equations(
        &self,
        r: usize,
        rows: &[Option<Vector>],
        constraints: &[Constraint],
    ) -> (Vec<Vec<Scalar>>, Vec<Scalar>) {
        let d = self.dim();
        let f = self.src;
        let mut coefs = Vec::new();
        let mut rhs = Vec::new();
        for filt in &self.row_filters {
            if let Some(t) = &filt.targets[r] {
                coefs.push(filt.v.entries().to_vec());
                rhs.push(t.clone());
            }
        }
        for c in constraints {
            match c {
                Constraint::Pair(i, j) => {
                    let (i, j) = (*i, *j);
                    // K x + c = 0 with one equation per output index m
                    let mut k = vec![vec![Scalar::zero(); d]; d];
                    let mut cst = vec![Scalar::zero(); d];
                    if i == r || j == r {
                        let other = rows[if i == r { j } else { i }]
                            .as_ref()
                            .expect("placed row");
                        for m in 0..d {
                            for a in 0..d {
                                let mut s = Scalar::zero();
                                for b in 0..d {
                                    let o = other.get(b);
                                    if o.is_zero() {
                                        continue;
                                    }
                                    let fv = if i == r { f.get(a, b, m) } else { f.get(b, a, m) };
                                    if !fv.is_zero() {
                                        s += o * fv;
                                    }
                                }
                                k[m][a] = s;
                            }
                        }
                    } else {
                        let pi = rows[i].as_ref().expect("placed row");
                        let pj = rows[j].as_ref().expect("placed row");
                        for (m, slot) in cst.iter_mut().enumerate() {
                            *slot = bracket_component(f, pi, pj, m);
                        }
                    }
                    for n in 0..d {
                        let c = self.dst.get(i, j, n);
                        if c.is_zero() {
                            continue;
                        }
                        if n == r {
                            for (m, row) in k.iter_mut().enumerate() {
                                row[m] -= c;
                            }
                        } else {
                            let pn = rows[n].as_ref().expect("placed row");
                            for (m, slot) in cst.iter_mut().enumerate() {
                                *slot -= c * pn.get(m);
                            }
                        }
                    }
                    for m in 0..d {
                        coefs.push(k[m].clone());
                        rhs.push(-&cst[m]);
                    }
                }
                Constraint::Combination(idx) => {
                    let comb = &self.combinations[*idx];
                    let cr = &comb.coeffs[r];
                    for m in 0..d {
                        let mut row = vec![Scalar::zero(); d];
                        row[m] = cr.clone();
                        let mut t = comb.target.get(m).clone();
                        for (i, ci) in comb.coeffs.iter().enumerate() {
                            if i != r && !ci.is_zero() {
                                t -= ci * rows[i].as_ref().expect("placed row").get(m);
                            }
                        }
                        coefs.push(row);
                        rhs.push(t);
                    }
                }
            }
        }
        (coefs, rhs)
    }

    /// All admissible choices for the row placed at step `t`, in grid order.
    fn candidates(&self, plan: &Plan, t: usize, rows: &[Option<Vector>]) -> Vec<Vector> {
        let d = self.dim();
        let r = plan.order[t];
        let (coefs, rhs) = self.equations(r, rows, &plan.at[t]);
        let Some(sol) = solve_affine(&coefs, &rhs, d) else {
            return Vec::new();
        };
        let placed: Vec<Vec<Scalar>> = rows
            .iter()
            .flatten()
            .map(|v| v.entries().to_vec())
            .collect();
        let mut out = Vec::new();
        let _: Option<()> = for_each_tuple(self.grid, sol.kernel.len(), |vals| {
            let mut x = sol.particular.clone();
            for (c, kv) in vals.iter().zip(&sol.kernel) {
                if c.is_zero() {
                    continue;
                }
                for (xi, ki) in x.iter_mut().zip(kv) {
                    *xi += c * ki;
                }
            }
            if x.iter().all(Scalar::is_zero) {
                return None;
            }
            // An isomorphism carries one Killing form to the other, which
            // prunes semisimple searches hard.
            let kx = self.killing_src.mul_vec(&Vector::new(x.clone()));
            if kx.dot(&Vector::new(x.clone())) != *self.killing_dst.get(r, r) {
                return None;
            }
            for (q, row) in rows.iter().enumerate() {
                if let Some(p) = row {
                    if kx.dot(p) != *self.killing_dst.get(r, q) {
                        return None;
                    }
                }
            }
            let mut all = placed.clone();
            all.push(x.clone());
            if rank(&all) == all.len() {
                out.push(Vector::new(x));
            }
            None
        });
        out
    }

    fn descend(
        &self,
        plan: &Plan,
        t: usize,
        rows: &mut Vec<Option<Vector>>,
        accept: Accept<'_>,
    ) -> Option<Matrix> {
        let d = self.dim();
        if t == d {
            let p = Matrix::from_row_vectors(
                &rows.iter().map(|r| r.clone().expect("placed")).collect::<Vec<_>>(),
            )
            .expect("square");
            debug_assert_eq!(self.src.change_basis(&p).as_ref().ok(), Some(self.dst));
            return accept(&p).then_some(p);
        }
        let r = plan.order[t];
        for x in self.candidates(plan, t, rows) {
            rows[r] = Some(x);
            if let Some(p) = self.descend(plan, t + 1, rows, accept) {
                return Some(p);
            }
        }
        rows[r] = None;
        None
    }

    /// First basis in search order accepted by `accept`.
    pub fn find(&self, accept: Accept<'_>) -> Option<Matrix> {
        let d = self.dim();
        if self
            .combinations
            .iter()
            .any(|c| c.coeffs.iter().all(Scalar::is_zero) && !c.target.is_zero())
        {
            return None;
        }
        let plan = self.best_plan();
        let empty = vec![None; d];
        let first = self.candidates(&plan, 0, &empty);
        exec::find_map_first(&first, |x| {
            let mut rows = empty.clone();
            rows[plan.order[0]] = Some(x.clone());
            self.descend(&plan, 1, &mut rows, accept)
        })
    }
}

fn bracket_component(f: &StructureTensor, a: &Vector, b: &Vector, m: usize) -> Scalar {
    let d = f.dim();
    let mut s = Scalar::zero();
    for k in 0..d {
        if a.get(k).is_zero() {
            continue;
        }
        for l in 0..d {
            let fv = f.get(k, l, m);
            if !fv.is_zero() && !b.get(l).is_zero() {
                s += a.get(k) * b.get(l) * fv;
            }
        }
    }
    s
}

fn permutations(d: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, d: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == d {
            out.push(prefix.clone());
            return;
        }
        for x in 0..d {
            if !prefix.contains(&x) {
                prefix.push(x);
                go(prefix, d, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), d, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{lookup, AlgebraName};
    use crate::equivalence::region::SearchRegion;
    use crate::scalar::int;

    #[test]
    fn finds_basis_for_relabelled_algebra() {
        let v = lookup(AlgebraName::V, None).unwrap().tensor;
        let q = Matrix::from_int_rows(&[&[1, 1, 0], &[0, 2, 1], &[1, 0, 1]]).unwrap();
        let src = v.change_basis(&q).unwrap();
        let region = SearchRegion::default();
        let p = BasisSearch::new(&src, &v, region.values())
            .find(&|_| true)
            .expect("basis exists");
        assert_eq!(src.change_basis(&p).unwrap(), v);
    }

    #[test]
    fn row_filters_are_respected() {
        let z = StructureTensor::zero(2);
        let region = SearchRegion::default();
        let alpha = Vector::from_ints(&[3, -2]);
        let p = BasisSearch::new(&z, &z, region.values())
            .row_filter(RowFilter {
                v: alpha.clone(),
                targets: vec![Some(int(0)), Some(int(1))],
            })
            .find(&|_| true)
            .unwrap();
        assert_eq!(p.mul_vec(&alpha), Vector::from_ints(&[0, 1]));
    }

    #[test]
    fn inconsistent_combination_finds_nothing() {
        let z = StructureTensor::zero(2);
        let region = SearchRegion::default();
        let none = BasisSearch::new(&z, &z, region.values())
            .combination(Combination {
                coeffs: vec![int(0), int(0)],
                target: Vector::from_ints(&[1, 0]),
            })
            .find(&|_| true);
        assert!(none.is_none());
    }
}
