//! Real Lie algebras of dimension two and three (Bianchi types for d = 3)
//! together with their automorphism groups.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{int, Scalar};
use crate::tensor::StructureTensor;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraName {
    A1,
    A2,
    I,
    II,
    III,
    IV,
    V,
    VI0,
    VIa,
    VII0,
    VIIa,
    VIII,
    IX,
}

impl AlgebraName {
    pub const ALL: [AlgebraName; 13] = [
        AlgebraName::A1,
        AlgebraName::A2,
        AlgebraName::I,
        AlgebraName::II,
        AlgebraName::III,
        AlgebraName::IV,
        AlgebraName::V,
        AlgebraName::VI0,
        AlgebraName::VIa,
        AlgebraName::VII0,
        AlgebraName::VIIa,
        AlgebraName::VIII,
        AlgebraName::IX,
    ];

    pub fn dim(self) -> usize {
        match self {
            AlgebraName::A1 | AlgebraName::A2 => 2,
            _ => 3,
        }
    }

    pub fn has_param(self) -> bool {
        matches!(self, AlgebraName::VIa | AlgebraName::VIIa)
    }

    pub fn of_dim(dim: usize) -> impl Iterator<Item = AlgebraName> {
        AlgebraName::ALL.into_iter().filter(move |n| n.dim() == dim)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            AlgebraName::A1 => "A1",
            AlgebraName::A2 => "A2",
            AlgebraName::I => "I",
            AlgebraName::II => "II",
            AlgebraName::III => "III",
            AlgebraName::IV => "IV",
            AlgebraName::V => "V",
            AlgebraName::VI0 => "VI_0",
            AlgebraName::VIa => "VI_a",
            AlgebraName::VII0 => "VII_0",
            AlgebraName::VIIa => "VII_a",
            AlgebraName::VIII => "VIII",
            AlgebraName::IX => "IX",
        }
    }

    /// Admissible parameter range, as text.
    pub fn param_constraint(self) -> Option<&'static str> {
        match self {
            AlgebraName::VIa => Some("a > 0, a != 1"),
            AlgebraName::VIIa => Some("a > 0"),
            _ => None,
        }
    }

    fn check_param(self, param: Option<&Scalar>) -> Result<()> {
        match (self.has_param(), param) {
            (false, None) => Ok(()),
            (false, Some(_)) => Err(Error::Parameter(format!("{self} takes no parameter"))),
            (true, None) => Err(Error::Parameter(format!("{self} requires a parameter a"))),
            (true, Some(a)) => {
                let ok = match self {
                    AlgebraName::VIa => a.is_positive() && !a.is_one(),
                    _ => a.is_positive(),
                };
                if ok {
                    Ok(())
                } else {
                    Err(Error::Parameter(format!(
                        "{self} requires {}, got a = {a}",
                        self.param_constraint().unwrap_or_default()
                    )))
                }
            }
        }
    }
}

impl fmt::Display for AlgebraName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AlgebraName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s.trim().chars().filter(|c| *c != '_').collect();
        let name = match key.to_ascii_uppercase().as_str() {
            "A1" => AlgebraName::A1,
            "A2" => AlgebraName::A2,
            "I" => AlgebraName::I,
            "II" => AlgebraName::II,
            "III" => AlgebraName::III,
            "IV" => AlgebraName::IV,
            "V" => AlgebraName::V,
            "VI0" => AlgebraName::VI0,
            "VIA" => AlgebraName::VIa,
            "VII0" => AlgebraName::VII0,
            "VIIA" => AlgebraName::VIIa,
            "VIII" => AlgebraName::VIII,
            "IX" => AlgebraName::IX,
            _ => return Err(Error::UnknownAlgebra(s.to_string())),
        };
        Ok(name)
    }
}

/// A catalog algebra: name, optional parameter, and its structure tensor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    pub name: AlgebraName,
    pub param: Option<Scalar>,
    pub tensor: StructureTensor,
}

impl LieAlgebra {
    pub fn dim(&self) -> usize {
        self.name.dim()
    }

    /// Display name with the parameter substituted, e.g. `VI_a(a=2)`.
    pub fn label(&self) -> String {
        match &self.param {
            Some(a) => format!("{}(a={a})", self.name),
            None => self.name.to_string(),
        }
    }

    pub fn automorphisms(&self) -> AutomorphismFamily {
        AutomorphismFamily::of(self.name)
    }

    pub fn is_automorphism(&self, a: &Matrix) -> Result<bool> {
        is_automorphism(&self.tensor, a)
    }
}

/// Looks up a catalog algebra. VI_a and VII_a need the parameter `a`;
/// every other entry must be called without one.
pub fn lookup(name: AlgebraName, param: Option<Scalar>) -> Result<LieAlgebra> {
    name.check_param(param.as_ref())?;
    let d = name.dim();
    let one = int(1);
    let m1 = int(-1);
    // (i, j, k, value) one-based, i < j, for [X_i, X_j] = value X_k
    let brackets: Vec<(usize, usize, usize, Scalar)> = match name {
        AlgebraName::A1 | AlgebraName::I => vec![],
        AlgebraName::A2 => vec![(1, 2, 1, one)],
        AlgebraName::II => vec![(2, 3, 1, one)],
        AlgebraName::III => vec![
            (1, 2, 2, m1.clone()),
            (1, 2, 3, m1.clone()),
            (1, 3, 2, m1.clone()),
            (1, 3, 3, m1),
        ],
        AlgebraName::IV => vec![(1, 2, 2, m1.clone()), (1, 2, 3, one), (1, 3, 3, m1)],
        AlgebraName::V => vec![(1, 2, 2, m1.clone()), (1, 3, 3, m1)],
        AlgebraName::VI0 => vec![(1, 3, 2, one.clone()), (2, 3, 1, one)],
        AlgebraName::VIa => {
            let a = param.clone().expect("checked");
            vec![
                (1, 2, 2, -&a),
                (1, 2, 3, m1.clone()),
                (1, 3, 2, m1),
                (1, 3, 3, -a),
            ]
        }
        AlgebraName::VII0 => vec![(1, 3, 2, m1), (2, 3, 1, one)],
        AlgebraName::VIIa => {
            let a = param.clone().expect("checked");
            vec![(1, 2, 2, -&a), (1, 2, 3, one), (1, 3, 2, m1), (1, 3, 3, -a)]
        }
        AlgebraName::VIII => vec![(1, 2, 3, m1.clone()), (1, 3, 2, m1), (2, 3, 1, one)],
        AlgebraName::IX => vec![(1, 2, 3, one.clone()), (1, 3, 2, m1), (2, 3, 1, one)],
    };
    let zero_based: Vec<_> = brackets
        .into_iter()
        .map(|(i, j, k, v)| (i - 1, j - 1, k - 1, v))
        .collect();
    let tensor = StructureTensor::from_entries(d, &zero_based)?;
    Ok(LieAlgebra {
        name,
        param,
        tensor,
    })
}

/// Parses a name such as `"VI_a"` and looks it up.
pub fn lookup_str(name: &str, param: Option<Scalar>) -> Result<LieAlgebra> {
    lookup(name.parse()?, param)
}

/// Does `a` preserve the bracket of `g`: `A_i^m f_mn^k A_j^n = f_ij^l A_l^k`?
///
/// The matrix form `A Y^k A^t = Y^i A_i^k` is evaluated as well and the two
/// are required to agree. A singular `a` is an error, not `false`.
pub fn is_automorphism(g: &StructureTensor, a: &Matrix) -> Result<bool> {
    let d = g.dim();
    if a.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: a.dim(),
        });
    }
    if !a.is_invertible() {
        return Err(Error::SingularMatrix);
    }
    let tensor_form = preserves_bracket(g, a);
    let matrix_form = preserves_bracket_matrix(g, a);
    assert_eq!(
        tensor_form, matrix_form,
        "index and matrix forms of the automorphism condition disagree"
    );
    Ok(tensor_form)
}

/// Index-form check without the invertibility test or cross-check.
pub(crate) fn preserves_bracket(g: &StructureTensor, a: &Matrix) -> bool {
    let d = g.dim();
    for i in 0..d {
        for j in i + 1..d {
            for k in 0..d {
                let mut lhs = Scalar::zero();
                for m in 0..d {
                    if a.get(i, m).is_zero() {
                        continue;
                    }
                    for n in 0..d {
                        let f = g.get(m, n, k);
                        if !f.is_zero() {
                            lhs += a.get(i, m) * f * a.get(j, n);
                        }
                    }
                }
                let rhs: Scalar = (0..d).map(|l| g.get(i, j, l) * a.get(l, k)).sum();
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

fn preserves_bracket_matrix(g: &StructureTensor, a: &Matrix) -> bool {
    let y = g.adjoint_y();
    let at = a.transpose();
    (0..g.dim()).all(|k| {
        let lhs = &(a * &y[k]) * &at;
        let mut rhs = Matrix::zeros(g.dim());
        for (i, yi) in y.iter().enumerate() {
            let c = a.get(i, k);
            if !c.is_zero() {
                rhs = &rhs + &yi.scale(c);
            }
        }
        lhs == rhs
    })
}

type Builder = fn(&[Scalar]) -> Matrix;
type Constraint = fn(&[Scalar]) -> bool;

/// One matrix template of an automorphism group with its parameter names
/// and admissibility predicate.
#[derive(Clone)]
pub struct AutomorphismBranch {
    pub params: &'static [&'static str],
    pub template: &'static str,
    pub constraint_text: &'static str,
    build: Builder,
    constraint: Constraint,
}

impl AutomorphismBranch {
    pub fn arity(&self) -> usize {
        self.params.len()
    }

    pub fn is_admissible(&self, values: &[Scalar]) -> bool {
        values.len() == self.params.len() && (self.constraint)(values)
    }

    /// Instantiates the template; fails when the constraint is violated.
    pub fn sample(&self, values: &[Scalar]) -> Result<Matrix> {
        if values.len() != self.params.len() {
            return Err(Error::DimensionMismatch {
                expected: self.params.len(),
                found: values.len(),
            });
        }
        if !(self.constraint)(values) {
            return Err(Error::ConstraintViolation(format!(
                "{} with {}",
                self.constraint_text,
                self.params
                    .iter()
                    .zip(values)
                    .map(|(p, v)| format!("{p}={v}"))
                    .collect::<Vec<_>>()
                    .join(", ")
            )));
        }
        Ok(self.instantiate(values))
    }

    /// Instantiates the template without checking the constraint.
    pub fn instantiate(&self, values: &[Scalar]) -> Matrix {
        (self.build)(values)
    }
}

impl fmt::Debug for AutomorphismBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AutomorphismBranch")
            .field("params", &self.params)
            .field("template", &self.template)
            .field("constraint", &self.constraint_text)
            .finish()
    }
}

/// The automorphism group of a catalog algebra.
#[derive(Clone, Debug)]
pub enum AutomorphismFamily {
    /// Explicit matrix templates. GL(d) is the single template whose
    /// parameters are all d^2 entries.
    Templates(Vec<AutomorphismBranch>),
    /// Membership decided only by the bracket-preservation predicate.
    Predicate { group: &'static str },
}

fn m(rows: [&[Scalar]; 3]) -> Matrix {
    Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).expect("square template")
}

fn z() -> Scalar {
    Scalar::zero()
}

fn o() -> Scalar {
    Scalar::one()
}

const ABCDEF: &[&str] = &["a", "b", "c", "d", "e", "f"];

impl AutomorphismFamily {
    pub fn of(name: AlgebraName) -> AutomorphismFamily {
        use AlgebraName::*;
        let branch = |params, template, constraint_text, build, constraint| AutomorphismBranch {
            params,
            template,
            constraint_text,
            build,
            constraint,
        };
        let branches = match name {
            A1 => vec![branch(
                &["a11", "a12", "a21", "a22"][..],
                "GL(2,R)",
                "det != 0",
                (|v: &[Scalar]| {
                    Matrix::from_rows(vec![v[0..2].to_vec(), v[2..4].to_vec()]).expect("2x2")
                }) as Builder,
                (|v: &[Scalar]| !(&v[0] * &v[3] - &v[1] * &v[2]).is_zero()) as Constraint,
            )],
            I => vec![branch(
                &["a11", "a12", "a13", "a21", "a22", "a23", "a31", "a32", "a33"][..],
                "GL(3,R)",
                "det != 0",
                |v| m([&v[0..3], &v[3..6], &v[6..9]]),
                |v| m([&v[0..3], &v[3..6], &v[6..9]]).is_invertible(),
            )],
            A2 => vec![branch(
                &["a", "b"][..],
                "[[a, 0], [b, 1]]",
                "a != 0",
                |v| Matrix::from_rows(vec![vec![v[0].clone(), z()], vec![v[1].clone(), o()]])
                    .expect("2x2"),
                |v| !v[0].is_zero(),
            )],
            II => vec![branch(
                ABCDEF,
                "[[bf-ce, 0, 0], [a, b, c], [d, e, f]]",
                "bf != ce",
                |v| {
                    let det = &v[1] * &v[5] - &v[2] * &v[4];
                    m([&[det, z(), z()], &v[0..3], &v[3..6]])
                },
                |v| &v[1] * &v[5] != &v[2] * &v[4],
            )],
            III => vec![branch(
                &["a", "b", "c", "d"][..],
                "[[1, a, b], [0, c, d], [0, d, c]]",
                "c != d, c != -d",
                |v| m([
                    &[o(), v[0].clone(), v[1].clone()],
                    &[z(), v[2].clone(), v[3].clone()],
                    &[z(), v[3].clone(), v[2].clone()],
                ]),
                |v| v[2] != v[3] && v[2] != -&v[3],
            )],
            IV => vec![branch(
                &["a", "b", "c", "d"][..],
                "[[1, a, b], [0, c, d], [0, 0, c]]",
                "c != 0",
                |v| m([
                    &[o(), v[0].clone(), v[1].clone()],
                    &[z(), v[2].clone(), v[3].clone()],
                    &[z(), z(), v[2].clone()],
                ]),
                |v| !v[2].is_zero(),
            )],
            V => vec![branch(
                ABCDEF,
                "[[1, a, b], [0, c, d], [0, e, f]]",
                "cf != ed",
                |v| m([
                    &[o(), v[0].clone(), v[1].clone()],
                    &[z(), v[2].clone(), v[3].clone()],
                    &[z(), v[4].clone(), v[5].clone()],
                ]),
                |v| &v[2] * &v[5] != &v[4] * &v[3],
            )],
            VI0 => vec![
                branch(
                    &["a", "b", "c", "d"][..],
                    "[[a, b, 0], [b, a, 0], [c, d, 1]]",
                    "a != b, a != -b",
                    |v| m([
                        &[v[0].clone(), v[1].clone(), z()],
                        &[v[1].clone(), v[0].clone(), z()],
                        &[v[2].clone(), v[3].clone(), o()],
                    ]),
                    |v| v[0] != v[1] && v[0] != -&v[1],
                ),
                branch(
                    &["a", "b", "c", "d"][..],
                    "[[a, b, 0], [-b, -a, 0], [c, d, -1]]",
                    "a != b, a != -b",
                    |v| m([
                        &[v[0].clone(), v[1].clone(), z()],
                        &[-&v[1], -&v[0], z()],
                        &[v[2].clone(), v[3].clone(), -o()],
                    ]),
                    |v| v[0] != v[1] && v[0] != -&v[1],
                ),
            ],
            VIa => vec![branch(
                &["b", "c", "d", "e"][..],
                "[[1, b, c], [0, d, e], [0, e, d]]",
                "d != e, d != -e",
                |v| m([
                    &[o(), v[0].clone(), v[1].clone()],
                    &[z(), v[2].clone(), v[3].clone()],
                    &[z(), v[3].clone(), v[2].clone()],
                ]),
                |v| v[2] != v[3] && v[2] != -&v[3],
            )],
            VII0 => vec![
                branch(
                    &["a", "b", "c", "d"][..],
                    "[[a, b, 0], [-b, a, 0], [c, d, 1]]",
                    "a^2 + b^2 != 0",
                    |v| m([
                        &[v[0].clone(), v[1].clone(), z()],
                        &[-&v[1], v[0].clone(), z()],
                        &[v[2].clone(), v[3].clone(), o()],
                    ]),
                    |v| !(v[0].is_zero() && v[1].is_zero()),
                ),
                branch(
                    &["a", "b", "c", "d"][..],
                    "[[a, b, 0], [b, -a, 0], [c, d, -1]]",
                    "a^2 + b^2 != 0",
                    |v| m([
                        &[v[0].clone(), v[1].clone(), z()],
                        &[v[1].clone(), -&v[0], z()],
                        &[v[2].clone(), v[3].clone(), -o()],
                    ]),
                    |v| !(v[0].is_zero() && v[1].is_zero()),
                ),
            ],
            VIIa => vec![branch(
                &["b", "c", "d", "e"][..],
                "[[1, b, c], [0, d, -e], [0, e, d]]",
                "d^2 + e^2 != 0",
                |v| m([
                    &[o(), v[0].clone(), v[1].clone()],
                    &[z(), v[2].clone(), -&v[3]],
                    &[z(), v[3].clone(), v[2].clone()],
                ]),
                |v| !(v[2].is_zero() && v[3].is_zero()),
            )],
            VIII => return AutomorphismFamily::Predicate { group: "SL(2,R)" },
            IX => return AutomorphismFamily::Predicate { group: "SO(3)" },
        };
        AutomorphismFamily::Templates(branches)
    }

    pub fn branches(&self) -> &[AutomorphismBranch] {
        match self {
            AutomorphismFamily::Templates(b) => b,
            AutomorphismFamily::Predicate { .. } => &[],
        }
    }

    pub fn describe(&self) -> String {
        match self {
            AutomorphismFamily::Templates(b) => b
                .iter()
                .map(|br| {
                    if br.template.starts_with("GL") {
                        br.template.to_string()
                    } else {
                        format!("{} ({})", br.template, br.constraint_text)
                    }
                })
                .collect::<Vec<_>>()
                .join(" or "),
            AutomorphismFamily::Predicate { group } => {
                format!("{group} (bracket-preservation predicate)")
            }
        }
    }
}

/// Instantiates branch `branch` of the automorphism group of `name`.
pub fn automorphism_sample(name: AlgebraName, branch: usize, values: &[Scalar]) -> Result<Matrix> {
    let family = AutomorphismFamily::of(name);
    let br = family.branches().get(branch).ok_or_else(|| {
        Error::Parameter(format!("{name} has no automorphism template number {branch}"))
    })?;
    br.sample(values)
}

/// The Cayley transform `(I - D)^{-1} (I + D)` of the inner derivation
/// `D = ad(x)`, with `D_i^j = x^m f_mi^j` acting on rows. For the simple
/// algebras this lands in the identity component of the automorphism group.
pub fn cayley_automorphism(g: &StructureTensor, x: &[Scalar]) -> Result<Matrix> {
    let d = g.dim();
    if x.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: x.len(),
        });
    }
    let dm = Matrix::from_fn(d, |i, j| (0..d).map(|m| &x[m] * g.get(m, i, j)).sum());
    let id = Matrix::identity(d);
    let left = (&id - &dm).inverse()?;
    Ok(&left * &(&id + &dm))
}

/// Deterministic spread of automorphisms of `g`: up to `per_branch`
/// admissible instances of each template with parameters drawn from
/// `values`, or Cayley transforms of inner derivations when the group is
/// given by the predicate only. Tuples are visited with a fixed stride so
/// the samples are not all near the identity.
pub fn automorphism_samples(g: &LieAlgebra, values: &[Scalar], per_branch: usize) -> Vec<Matrix> {
    let pick = |arity: usize, mut f: Box<dyn FnMut(&[Scalar]) -> Option<Matrix> + '_>| {
        let n = values.len() as u64;
        let total = n.checked_pow(arity as u32).unwrap_or(u64::MAX);
        let stride = 7919 % total.max(1) | 1;
        let mut out = Vec::new();
        let mut k = 1u64;
        for _ in 0..total.min(100_000) {
            if out.len() == per_branch {
                break;
            }
            let mut code = k % total;
            let tuple: Vec<Scalar> = (0..arity)
                .map(|_| {
                    let v = values[(code % n) as usize].clone();
                    code /= n;
                    v
                })
                .collect();
            if let Some(m) = f(&tuple) {
                if !out.contains(&m) {
                    out.push(m);
                }
            }
            k = k.wrapping_add(stride);
        }
        out
    };
    match g.automorphisms() {
        AutomorphismFamily::Templates(branches) => branches
            .iter()
            .flat_map(|br| {
                pick(
                    br.arity(),
                    Box::new(move |t: &[Scalar]| {
                        br.is_admissible(t).then(|| br.instantiate(t))
                    }),
                )
            })
            .collect(),
        AutomorphismFamily::Predicate { .. } => pick(
            g.dim(),
            Box::new(|x: &[Scalar]| {
                let a = cayley_automorphism(&g.tensor, x).ok()?;
                (!a.is_identity()).then_some(a)
            }),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    #[test]
    fn automorphism_samples_are_automorphisms() {
        let values = [int(1), int(-1), int(2), q(1, 2), int(0), int(3)];
        for name in AlgebraName::ALL {
            let g = lookup(name, name.has_param().then(|| int(2))).unwrap();
            let samples = automorphism_samples(&g, &values, 5);
            let branches = g.automorphisms().branches().len().max(1);
            assert!(samples.len() >= 5 * branches, "{name}: {}", samples.len());
            for a in &samples {
                assert!(g.is_automorphism(a).unwrap(), "{name} {a}");
            }
        }
    }

    #[test]
    fn every_catalog_entry_is_a_lie_algebra() {
        for name in AlgebraName::ALL {
            let param = name.has_param().then(|| int(2));
            let g = lookup(name, param).unwrap();
            assert!(g.tensor.is_lie_algebra(), "{name}");
            assert_eq!(g.dim(), g.tensor.dim());
        }
    }

    #[test]
    fn iii_and_vi_a_constants() {
        let g = lookup(AlgebraName::III, None).unwrap();
        for (i, j, k) in [(0, 1, 1), (0, 1, 2), (0, 2, 1), (0, 2, 2)] {
            assert_eq!(*g.tensor.get(i, j, k), int(-1));
        }
        assert_eq!(g.tensor.upper_entries().len(), 4);
        let g = lookup(AlgebraName::VIa, Some(int(2))).unwrap();
        assert_eq!(*g.tensor.get(0, 1, 1), int(-2));
        assert_eq!(*g.tensor.get(0, 1, 2), int(-1));
        assert_eq!(*g.tensor.get(0, 2, 1), int(-1));
        assert_eq!(*g.tensor.get(0, 2, 2), int(-2));
    }

    #[test]
    fn parameter_rules() {
        assert!(lookup(AlgebraName::VIa, None).is_err());
        assert!(lookup(AlgebraName::VIa, Some(int(1))).is_err());
        assert!(lookup(AlgebraName::VIa, Some(int(0))).is_err());
        assert!(lookup(AlgebraName::VIIa, Some(int(-1))).is_err());
        assert!(lookup(AlgebraName::VIIa, Some(q(1, 2))).is_ok());
        assert!(lookup(AlgebraName::III, Some(int(2))).is_err());
        assert!(lookup_str("X", None).is_err());
    }

    #[test]
    fn names_round_trip() {
        for name in AlgebraName::ALL {
            assert_eq!(name.as_str().parse::<AlgebraName>().unwrap(), name);
        }
        assert_eq!("vi0".parse::<AlgebraName>().unwrap(), AlgebraName::VI0);
    }

    #[test]
    fn a2_automorphism_examples() {
        let g = lookup(AlgebraName::A2, None).unwrap();
        let good = Matrix::from_int_rows(&[&[2, 0], &[3, 1]]).unwrap();
        let swap = Matrix::from_int_rows(&[&[0, 1], &[1, 0]]).unwrap();
        assert!(g.is_automorphism(&good).unwrap());
        assert!(!g.is_automorphism(&swap).unwrap());
        assert!(g.is_automorphism(&Matrix::identity(2)).unwrap());
        let singular = Matrix::zeros(2);
        assert_eq!(g.is_automorphism(&singular), Err(Error::SingularMatrix));
    }

    #[test]
    fn template_examples() {
        let a = automorphism_sample(AlgebraName::III, 0, &[int(1), int(0), int(2), int(1)]).unwrap();
        assert_eq!(a, Matrix::from_int_rows(&[&[1, 1, 0], &[0, 2, 1], &[0, 1, 2]]).unwrap());
        let a = automorphism_sample(AlgebraName::VI0, 1, &[int(1), int(0), int(0), int(0)]).unwrap();
        assert_eq!(a, Matrix::from_int_rows(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, -1]]).unwrap());
        assert!(matches!(
            automorphism_sample(AlgebraName::III, 0, &[int(0), int(0), int(1), int(1)]),
            Err(Error::ConstraintViolation(_))
        ));
    }

    #[test]
    fn cayley_samples_for_simple_algebras() {
        for name in [AlgebraName::VIII, AlgebraName::IX] {
            let g = lookup(name, None).unwrap();
            let a = cayley_automorphism(&g.tensor, &[q(1, 2), int(1), int(-2)]).unwrap();
            assert!(!a.is_identity());
            assert!(g.is_automorphism(&a).unwrap(), "{name}");
        }
    }
}
