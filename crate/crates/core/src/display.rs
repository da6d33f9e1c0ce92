//! Human-readable rendering of linear combinations and cocycles.

use crate::linalg::Vector;
use crate::scalar::Scalar;

/// Renders `c1 e1 + c2 e2 + ...`, omitting unit coefficients. An empty
/// list renders as `0`.
pub fn linear_combination(terms: &[(Scalar, String)]) -> String {
    let mut out = String::new();
    for (idx, (c, name)) in terms.iter().filter(|(c, _)| !c.is_zero()).enumerate() {
        let mag = c.abs();
        if idx == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&mag.to_string());
            out.push(' ');
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `X0 = alpha^i X_i`.
pub fn x0(alpha: &Vector) -> String {
    basis_combination(alpha, "X")
}

/// `phi0 = beta_i X~^i`.
pub fn phi0(beta: &Vector) -> String {
    basis_combination(beta, "X~")
}

fn basis_combination(v: &Vector, prefix: &str) -> String {
    let terms: Vec<(Scalar, String)> = v
        .entries()
        .iter()
        .enumerate()
        .map(|(i, c)| (c.clone(), format!("{prefix}{}", i + 1)))
        .collect();
    linear_combination(&terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, q};

    #[test]
    fn renders_signs_and_units() {
        let v = Vector::new(vec![int(0), int(-1), q(3, 2)]);
        assert_eq!(x0(&v), "-X2 + 3/2 X3");
        assert_eq!(phi0(&Vector::zeros(2)), "0");
        assert_eq!(phi0(&Vector::new(vec![int(-2), int(0)])), "-2 X~1");
    }
}
