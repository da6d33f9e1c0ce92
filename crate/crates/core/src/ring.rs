//! A minimal commutative-ring abstraction so the residual kernels can be
//! evaluated both on concrete rationals and on Laurent polynomials.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;

pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_scalar(s: Scalar) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;

    fn half(&self) -> Self {
        self.times(&Self::from_scalar(crate::scalar::q(1, 2)))
    }
}

impl Ring for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn from_scalar(s: Scalar) -> Self {
        s
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
}

/// Exponent vector of a Laurent monomial.
pub type Monomial = Vec<i32>;

/// Sparse multivariate Laurent polynomial with rational coefficients.
///
/// Negative exponents only ever arise from dividing by variables that the
/// caller has established to be nonzero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero_in(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = Poly::zero_in(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Poly::monomial(e, Scalar::one())
    }

    pub fn monomial(exps: Monomial, c: Scalar) -> Self {
        let nvars = exps.len();
        let mut p = Poly::zero_in(nvars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// The constant value if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Scalar> {
        if !self.is_constant() {
            return None;
        }
        Some(
            self.terms
                .values()
                .next()
                .cloned()
                .unwrap_or_else(Scalar::zero),
        )
    }

    /// Indices of variables that occur with a nonzero exponent.
    pub fn variables(&self) -> Vec<usize> {
        (0..self.nvars)
            .filter(|&v| self.terms.keys().any(|e| e[v] != 0))
            .collect()
    }

    pub fn contains_var(&self, v: usize) -> bool {
        self.terms.keys().any(|e| e[v] != 0)
    }

    pub fn max_degree(&self, v: usize) -> i32 {
        self.terms.keys().map(|e| e[v]).max().unwrap_or(0)
    }

    pub fn min_degree(&self, v: usize) -> i32 {
        self.terms.keys().map(|e| e[v]).min().unwrap_or(0)
    }

    fn insert_term(&mut self, e: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        if s.is_zero() {
            return Poly::zero_in(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    /// Multiplies by `x^exps` (exponents may be negative).
    pub fn shift(&self, exps: &[i32]) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(exps).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Componentwise minimum exponent over all terms: the largest monomial
    /// dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut m: Option<Monomial> = None;
        for e in self.terms.keys() {
            m = Some(match m {
                None => e.clone(),
                Some(acc) => acc.iter().zip(e).map(|(a, b)| (*a).min(*b)).collect(),
            });
        }
        m.unwrap_or_else(|| vec![0; self.nvars])
    }

    /// Divides out the monomial content and scales so the leading
    /// coefficient is 1. Zero stays zero.
    pub fn normalized(&self) -> Poly {
        if self.terms.is_empty() {
            return self.clone();
        }
        let content: Vec<i32> = self.monomial_content().iter().map(|x| -x).collect();
        let p = self.shift(&content);
        let lead = p.terms.values().next_back().cloned().expect("nonzero");
        p.scale(&lead.recip().expect("nonzero"))
    }

    /// Writes `self = c * v + r` where neither `c` nor `r` involves `v`.
    /// Returns `None` when `v` does not occur exactly linearly.
    pub fn linear_split(&self, v: usize) -> Option<(Poly, Poly)> {
        let mut c = Poly::zero_in(self.nvars);
        let mut r = Poly::zero_in(self.nvars);
        for (e, x) in &self.terms {
            match e[v] {
                0 => r.insert_term(e.clone(), x.clone()),
                1 => {
                    let mut e2 = e.clone();
                    e2[v] = 0;
                    c.insert_term(e2, x.clone());
                }
                _ => return None,
            }
        }
        if c.is_zero() {
            None
        } else {
            Some((c, r))
        }
    }

    /// Substitutes `v := value`. Requires `v` to occur with non-negative
    /// exponents only.
    pub fn substitute(&self, v: usize, value: &Poly) -> Poly {
        let maxd = self.max_degree(v).max(0) as usize;
        assert!(self.min_degree(v) >= 0, "cannot substitute a divided variable");
        let mut powers = vec![Poly::constant(self.nvars, Scalar::one())];
        for k in 1..=maxd {
            powers.push(powers[k - 1].times(value));
        }
        let mut out = Poly::zero_in(self.nvars);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = e2[v] as usize;
            e2[v] = 0;
            let t = Poly::monomial(e2, c.clone()).times(&powers[k]);
            out = out.plus(&t);
        }
        out
    }

    /// Evaluates at a point. Fails if a negative power of zero is required.
    pub fn eval(&self, point: &[Scalar]) -> Option<Scalar> {
        let mut acc = Scalar::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k != 0 {
                    t = t * x.pow(k).ok()?;
                }
            }
            acc += t;
        }
        Some(acc)
    }

    /// Renders with the given variable names, highest monomials first.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let mut factors = Vec::new();
            for (v, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(names[v].clone()),
                    _ => factors.push(format!("{}^{}", names[v], k)),
                }
            }
            let neg = c.is_negative();
            let mag = c.abs();
            let body = if factors.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                factors.join("*")
            } else {
                format!("{}*{}", mag, factors.join("*"))
            };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("x{i}")).collect();
        write!(f, "{}", self.display_with(&names))
    }
}

// `Ring::zero` needs a variable count, which a bare constructor cannot know.
// Zero and one are represented with `nvars = 0` and widened on first contact.
fn widen(a: &Poly, n: usize) -> Poly {
    if a.nvars == n {
        return a.clone();
    }
    assert!(a.nvars == 0, "mixing polynomials over different variable sets");
    Poly {
        nvars: n,
        terms: a
            .terms
            .iter()
            .map(|(_, c)| (vec![0; n], c.clone()))
            .collect(),
    }
}

fn common(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let n = a.nvars.max(b.nvars);
    (widen(a, n), widen(b, n))
}

impl Ring for Poly {
    fn zero() -> Self {
        Poly::zero_in(0)
    }
    fn one() -> Self {
        Poly::constant(0, Scalar::one())
    }
    fn from_scalar(s: Scalar) -> Self {
        Poly::constant(0, s)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        let (mut a, b) = common(self, rhs);
        for (e, c) in b.terms {
            a.insert_term(e, c);
        }
        a
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negated())
    }
    fn times(&self, rhs: &Self) -> Self {
        let (a, b) = common(self, rhs);
        let mut out = Poly::zero_in(a.nvars);
        for (e1, c1) in &a.terms {
            for (e2, c2) in &b.terms {
                let e: Monomial = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                out.insert_term(e, c1 * c2);
            }
        }
        out
    }
    fn negated(&self) -> Self {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, q};

    fn names() -> Vec<String> {
        vec!["x".into(), "y".into()]
    }

    #[test]
    fn product_and_display() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let p = x.plus(&y).times(&x.minus(&y));
        assert_eq!(p.display_with(&names()), "x^2 - y^2");
    }

    #[test]
    fn substitution_and_evaluation() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let p = x.times(&x).plus(&y);
        let s = p.substitute(0, &y.scale(&int(2)));
        assert_eq!(s.eval(&[int(0), int(3)]), Some(int(39)));
    }

    #[test]
    fn linear_split_and_normalize() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let p = x.times(&y).scale(&int(2)).plus(&y);
        let (c, r) = p.linear_split(0).unwrap();
        assert_eq!(c, y.scale(&int(2)));
        assert_eq!(r, y);
        assert!(p.linear_split(1).is_some());
        assert_eq!(p.normalized(), x.plus(&Poly::constant(2, q(1, 2))));
    }

    #[test]
    fn negative_powers_of_zero_fail_to_evaluate() {
        let p = Poly::monomial(vec![-1, 0], int(1));
        assert_eq!(p.eval(&[int(2), int(0)]), Some(q(1, 2)));
        assert_eq!(p.eval(&[int(0), int(0)]), None);
    }

    #[test]
    fn constants_widen() {
        let one = <Poly as Ring>::one();
        let x = Poly::var(2, 0);
        assert_eq!(one.plus(&x).minus(&x).as_constant(), Some(int(1)));
    }
}
