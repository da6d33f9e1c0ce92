//! Jacobi-Lie bialgebras `((g, phi0), (g*, X0))` and their verification.
//!
//! `alpha` holds the components of `X0 = alpha^i X_i` and `beta` those of
//! `phi0 = beta_i X~^i`. Every condition is evaluated twice, once by index
//! loops and once from adjoint matrices, and the two must agree exactly.

use std::fmt;

use crate::error::{Error, Result};
use crate::kernels;
use crate::linalg::{Matrix, Vector};
use crate::scalar::Scalar;
use crate::tensor::{ResidualGrid, StructureTensor};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct JacobiLieBialgebra {
    pub g: StructureTensor,
    pub gstar: StructureTensor,
    pub alpha: Vector,
    pub beta: Vector,
}

impl JacobiLieBialgebra {
    pub fn new(
        g: StructureTensor,
        gstar: StructureTensor,
        alpha: Vector,
        beta: Vector,
    ) -> Result<Self> {
        let d = g.dim();
        for found in [gstar.dim(), alpha.dim(), beta.dim()] {
            if found != d {
                return Err(Error::DimensionMismatch { expected: d, found });
            }
        }
        Ok(JacobiLieBialgebra {
            g,
            gstar,
            alpha,
            beta,
        })
    }

    /// Classical case: both cocycles vanish.
    pub fn lie_bialgebra(g: StructureTensor, gstar: StructureTensor) -> Result<Self> {
        let d = g.dim();
        JacobiLieBialgebra::new(g, gstar, Vector::zeros(d), Vector::zeros(d))
    }

    pub fn dim(&self) -> usize {
        self.g.dim()
    }

    /// The same data read from the other side: `((g*, X0), (g, phi0))`.
    pub fn swapped(&self) -> JacobiLieBialgebra {
        JacobiLieBialgebra {
            g: self.gstar.clone(),
            gstar: self.g.clone(),
            alpha: self.beta.clone(),
            beta: self.alpha.clone(),
        }
    }

    fn parts(&self) -> (&[Scalar], &[Scalar], &[Scalar], &[Scalar], usize) {
        (
            self.g.entries(),
            self.gstar.entries(),
            self.alpha.entries(),
            self.beta.entries(),
            self.dim(),
        )
    }

    /// Mixed condition by index loops, indexed `(i, j, m, n)`.
    pub fn mixed_residual(&self) -> ResidualGrid {
        let (f, ft, a, b, d) = self.parts();
        ResidualGrid::new(d, 4, kernels::mixed(f, ft, a, b, d))
    }

    /// Mixed condition assembled from the adjoint matrices. Entry
    /// `(i, j, m, n)` is `D^mn_ij + C_im d_jn - C_jm d_in - C_in d_jm + C_jn d_im`.
    pub fn mixed_residual_matrix(&self) -> ResidualGrid {
        let d = self.dim();
        let c = self.matrix_c();
        let mut out = vec![Scalar::zero(); d * d * d * d];
        for m in 0..d {
            for n in 0..d {
                let dm = self.matrix_d(m, n);
                for i in 0..d {
                    for j in 0..d {
                        let mut v = dm.get(i, j).clone();
                        if j == n {
                            v += c.get(i, m);
                        }
                        if i == n {
                            v -= c.get(j, m);
                        }
                        if j == m {
                            v -= c.get(i, n);
                        }
                        if i == m {
                            v += c.get(j, n);
                        }
                        out[kernels::idx4(d, i, j, m, n)] = v;
                    }
                }
            }
        }
        ResidualGrid::new(d, 4, out)
    }

    /// `C = alpha^k X_k - B A^t` with `A`, `B` the columns of `alpha`, `beta`.
    pub fn matrix_c(&self) -> Matrix {
        let d = self.dim();
        let x = self.g.adjoint_x();
        let mut c = Matrix::from_fn(d, |i, m| -(self.beta.get(i) * self.alpha.get(m)));
        for (k, xk) in x.iter().enumerate() {
            let a = self.alpha.get(k);
            if !a.is_zero() {
                c = &c + &xk.scale(a);
            }
        }
        c
    }

    /// The auxiliary matrix `D^mn`:
    /// `(X~^m)^n_k Y^k + Y^m X~^n - Y^n X~^m + (X~^n)^t Y^m - (X~^m)^t Y^n
    ///  + B (F~^mn)^t - F~^mn B^t + alpha^n Y^m - alpha^m Y^n`,
    /// where `F~^mn` is the column `f~^mn_k`.
    pub fn matrix_d(&self, m: usize, n: usize) -> Matrix {
        let d = self.dim();
        let y = self.g.adjoint_y();
        let xt = self.gstar.adjoint_x();
        let mut out = &(&(&y[m] * &xt[n]) - &(&y[n] * &xt[m]))
            + &(&(&xt[n].transpose() * &y[m]) - &(&xt[m].transpose() * &y[n]));
        for (k, yk) in y.iter().enumerate() {
            let c = xt[m].get(n, k);
            if !c.is_zero() {
                out = &out + &yk.scale(c);
            }
        }
        let bf = Matrix::from_fn(d, |i, j| {
            self.beta.get(i) * self.gstar.get(m, n, j) - self.gstar.get(m, n, i) * self.beta.get(j)
        });
        out = &out + &bf;
        out = &out + &y[m].scale(self.alpha.get(n));
        &out - &y[n].scale(self.alpha.get(m))
    }

    /// Evaluates every defining condition exactly.
    pub fn verify(&self) -> VerificationReport {
        let (f, ft, a, b, d) = self.parts();
        let mut conditions = Vec::with_capacity(7);

        let jg = self.g.jacobi_residual();
        assert_eq!(jg, self.g.jacobi_residual_matrix(), "jacobi_g forms disagree");
        conditions.push(ConditionResult::from_grid(Condition::JacobiG, &jg));

        let jd = ResidualGrid::new(d, 4, kernels::jacobi_dual(ft, d));
        assert_eq!(jd, self.gstar.jacobi_residual_matrix(), "jacobi_gstar forms disagree");
        conditions.push(ConditionResult::from_grid(Condition::JacobiGstar, &jd));

        let mx = self.mixed_residual();
        assert_eq!(mx, self.mixed_residual_matrix(), "mixed forms disagree");
        conditions.push(ConditionResult::from_grid(Condition::Mixed, &mx));

        let dot = kernels::orthogonality(a, b);
        let outer = Matrix::from_fn(d, |i, j| self.alpha.get(i) * self.beta.get(j));
        assert_eq!(dot, outer.trace(), "orthogonality forms disagree");
        conditions.push(ConditionResult::from_grid(
            Condition::Orthogonality,
            &ResidualGrid::new(1, 0, vec![dot]),
        ));

        let comp = ResidualGrid::new(d, 2, kernels::compatibility(f, ft, a, b, d));
        let comp_m = self.compatibility_matrix();
        assert!(
            (0..d).all(|p| (0..d).all(|q| *comp_m.get(p, q) == -comp.get(&[q, p]))),
            "compatibility forms disagree"
        );
        conditions.push(ConditionResult::from_grid(Condition::Compatibility, &comp));

        let cx = ResidualGrid::new(d, 2, kernels::cocycle(ft, a, d));
        let cx_m = weighted_sum(&self.gstar.adjoint_y(), &self.alpha);
        assert!(negated_equal(&cx, &cx_m), "cocycle_x0 forms disagree");
        conditions.push(ConditionResult::from_grid(Condition::CocycleX0, &cx));

        let cp = ResidualGrid::new(d, 2, kernels::cocycle(f, b, d));
        let cp_m = weighted_sum(&self.g.adjoint_y(), &self.beta);
        assert!(negated_equal(&cp, &cp_m), "cocycle_phi0 forms disagree");
        conditions.push(ConditionResult::from_grid(Condition::CocyclePhi0, &cp));

        VerificationReport { conditions }
    }

    /// `alpha^i (X_i)^t - beta_i X~^i`.
    pub fn compatibility_matrix(&self) -> Matrix {
        let x = self.g.adjoint_x();
        let xt = self.gstar.adjoint_x();
        let mut out = Matrix::zeros(self.dim());
        for i in 0..self.dim() {
            out = &out + &x[i].transpose().scale(self.alpha.get(i));
            out = &out - &xt[i].scale(self.beta.get(i));
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.verify().passed()
    }

    /// The full bracket table on `g + g*`.
    pub fn double_brackets(&self) -> BracketTable {
        let (f, ft, a, b, d) = self.parts();
        let n = 2 * d;
        let mut table = vec![vec![Scalar::zero(); n]; n * n];
        for i in 0..d {
            for j in 0..d {
                // [X_i, X_j] and [X~^i, X~^j]
                for k in 0..d {
                    table[i * n + j][k] = self.g.get(i, j, k).clone();
                    table[(d + i) * n + d + j][d + k] = self.gstar.get(i, j, k).clone();
                }
                let (x, xt) = kernels::mixed_bracket(f, ft, a, b, d, i, j);
                for k in 0..d {
                    table[i * n + d + j][k] = x[k].clone();
                    table[i * n + d + j][d + k] = xt[k].clone();
                    table[(d + j) * n + i][k] = -&x[k];
                    table[(d + j) * n + i][d + k] = -&xt[k];
                }
            }
        }
        BracketTable { dim: d, table }
    }
}

fn weighted_sum(ms: &[Matrix], v: &Vector) -> Matrix {
    let mut out = Matrix::zeros(v.dim());
    for (m, c) in ms.iter().zip(v.entries()) {
        if !c.is_zero() {
            out = &out + &m.scale(c);
        }
    }
    out
}

fn negated_equal(grid: &ResidualGrid, m: &Matrix) -> bool {
    let d = m.dim();
    (0..d).all(|p| (0..d).all(|q| *m.get(p, q) == -grid.get(&[p, q])))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    JacobiG,
    JacobiGstar,
    Mixed,
    Orthogonality,
    Compatibility,
    CocycleX0,
    CocyclePhi0,
}

impl Condition {
    pub const ALL: [Condition; 7] = [
        Condition::JacobiG,
        Condition::JacobiGstar,
        Condition::Mixed,
        Condition::Orthogonality,
        Condition::Compatibility,
        Condition::CocycleX0,
        Condition::CocyclePhi0,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Condition::JacobiG => "jacobi_g",
            Condition::JacobiGstar => "jacobi_gstar",
            Condition::Mixed => "mixed",
            Condition::Orthogonality => "orthogonality",
            Condition::Compatibility => "compatibility",
            Condition::CocycleX0 => "cocycle_x0",
            Condition::CocyclePhi0 => "cocycle_phi0",
        }
    }

    /// One-line statement of the condition in index notation.
    pub fn statement(self) -> &'static str {
        match self {
            Condition::JacobiG => "Jacobi identity of g",
            Condition::JacobiGstar => "Jacobi identity of g*",
            Condition::Mixed => "mixed Jacobi condition with cocycles",
            Condition::Orthogonality => "alpha^i beta_i = 0",
            Condition::Compatibility => "alpha^n f_ni^m - beta_n f~^nm_i = 0",
            Condition::CocycleX0 => "alpha^i f~^mn_i = 0",
            Condition::CocyclePhi0 => "beta_i f_mn^i = 0",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Residual summary for one condition: the largest absolute entry and the
/// first offending index (zero-based), if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionResult {
    pub condition: Condition,
    pub max_abs: Scalar,
    pub first_violation: Option<Vec<usize>>,
}

impl ConditionResult {
    fn from_grid(condition: Condition, grid: &ResidualGrid) -> Self {
        ConditionResult {
            condition,
            max_abs: grid.max_abs(),
            first_violation: grid.first_nonzero(),
        }
    }

    pub fn passed(&self) -> bool {
        self.max_abs.is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub conditions: Vec<ConditionResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.conditions.iter().all(ConditionResult::passed)
    }

    pub fn get(&self, c: Condition) -> &ConditionResult {
        self.conditions
            .iter()
            .find(|r| r.condition == c)
            .expect("every condition is evaluated")
    }

    pub fn failures(&self) -> Vec<Condition> {
        self.conditions
            .iter()
            .filter(|r| !r.passed())
            .map(|r| r.condition)
            .collect()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.conditions {
            let status = if r.passed() { "ok" } else { "FAIL" };
            write!(f, "{:<14} {:<4} max|residual| = {}", r.condition.as_str(), status, r.max_abs)?;
            if let Some(idx) = &r.first_violation {
                let one_based: Vec<String> = idx.iter().map(|x| (x + 1).to_string()).collect();
                write!(f, " at ({})", one_based.join(","))?;
            }
            writeln!(f)?;
        }
        write!(f, "{}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// Brackets of the `2d` basis `X_1..X_d, X~^1..X~^d`. Entry `(p, q)` holds
/// the coefficients of `[e_p, e_q]` in the same basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketTable {
    dim: usize,
    table: Vec<Vec<Scalar>>,
}

impl BracketTable {
    /// Half the size of the table: the dimension of `g`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bracket(&self, p: usize, q: usize) -> &[Scalar] {
        &self.table[p * 2 * self.dim + q]
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = 2 * self.dim;
        (0..n).all(|p| {
            (0..n).all(|q| {
                self.bracket(p, q)
                    .iter()
                    .zip(self.bracket(q, p))
                    .all(|(x, y)| *x == -y)
            })
        })
    }

    fn basis_name(&self, p: usize) -> String {
        if p < self.dim {
            format!("X{}", p + 1)
        } else {
            format!("X~{}", p - self.dim + 1)
        }
    }

    /// Renders `[e_p, e_q]` as a linear combination.
    pub fn render(&self, p: usize, q: usize) -> String {
        let terms: Vec<(Scalar, String)> = self
            .bracket(p, q)
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(r, c)| (c.clone(), self.basis_name(r)))
            .collect();
        crate::display::linear_combination(&terms)
    }
}

impl fmt::Display for BracketTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = 2 * self.dim;
        for p in 0..n {
            for q in p + 1..n {
                writeln!(
                    f,
                    "[{}, {}] = {}",
                    self.basis_name(p),
                    self.basis_name(q),
                    self.render(p, q)
                )?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, q};

    fn a1_pair(alpha: &[i64], beta: &[i64]) -> JacobiLieBialgebra {
        JacobiLieBialgebra::new(
            StructureTensor::zero(2),
            StructureTensor::zero(2),
            Vector::from_ints(alpha),
            Vector::from_ints(beta),
        )
        .unwrap()
    }

    #[test]
    fn zero_data_passes() {
        let b = a1_pair(&[0, 0], &[0, 0]);
        assert!(b.verify().passed());
        assert!(b.mixed_residual().is_zero());
    }

    #[test]
    fn orthogonality_failure_is_localized() {
        let b = a1_pair(&[0, 1], &[0, 1]);
        let r = b.verify();
        assert!(!r.passed());
        // The cocycle terms of the mixed condition also see alpha^m beta_i.
        assert!(r.failures().contains(&Condition::Orthogonality));
        assert_eq!(r.get(Condition::Orthogonality).max_abs, int(1));
        assert!(a1_pair(&[0, 1], &[1, 0]).verify().passed());
    }

    #[test]
    fn a1_double_bracket_value() {
        let b = a1_pair(&[0, 1], &[1, 0]);
        let t = b.double_brackets();
        assert!(t.is_antisymmetric());
        assert_eq!(t.bracket(0, 2), &[int(0), q(1, 2), q(1, 2), int(0)]);
        assert_eq!(t.render(0, 2), "1/2 X2 + 1/2 X~1");
    }

    #[test]
    fn a2_row_passes() {
        let g = StructureTensor::from_entries(2, &[(0, 1, 0, int(1))]).unwrap();
        let gs = StructureTensor::from_entries(2, &[(0, 1, 1, int(1))]).unwrap();
        let b = JacobiLieBialgebra::new(g, gs, Vector::from_ints(&[-1, 0]), Vector::from_ints(&[0, 1]))
            .unwrap();
        assert!(b.mixed_residual().is_zero());
        assert!(b.verify().passed());
        assert!(b.swapped().verify().passed());
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let r = JacobiLieBialgebra::new(
            StructureTensor::zero(2),
            StructureTensor::zero(3),
            Vector::zeros(2),
            Vector::zeros(2),
        );
        assert!(matches!(r, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn one_dimensional_reduces_to_orthogonality() {
        let b = JacobiLieBialgebra::new(
            StructureTensor::zero(1),
            StructureTensor::zero(1),
            Vector::from_ints(&[2]),
            Vector::from_ints(&[3]),
        )
        .unwrap();
        assert_eq!(b.verify().failures(), vec![Condition::Orthogonality]);
    }
}
