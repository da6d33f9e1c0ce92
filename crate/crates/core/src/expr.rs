//! Rational expressions and comparison predicates over named parameters,
//! as used in the table data (`"-2*(a*b+1)/((a+1)*(b-1))"`, `"b != 0"`).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub type Env = BTreeMap<String, Scalar>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(Scalar),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn eval(&self, env: &Env) -> Result<Scalar> {
        Ok(match self {
            Expr::Num(v) => v.clone(),
            Expr::Var(name) => env
                .get(name)
                .cloned()
                .ok_or_else(|| Error::Parameter(format!("no value for {name}")))?,
            Expr::Neg(e) => -e.eval(env)?,
            Expr::Add(a, b) => a.eval(env)? + b.eval(env)?,
            Expr::Sub(a, b) => a.eval(env)? - b.eval(env)?,
            Expr::Mul(a, b) => a.eval(env)? * b.eval(env)?,
            Expr::Div(a, b) => a.eval(env)?.checked_div(&b.eval(env)?)?,
        })
    }

    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Expr::Num(_) => {}
            Expr::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Expr::Neg(e) => e.collect_vars(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }
}

impl FromStr for Expr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Expr> {
        let mut p = Parser::new(s)?;
        let e = p.expr()?;
        p.finish()?;
        Ok(e)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cmp {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

impl Cmp {
    fn holds(self, a: &Scalar, b: &Scalar) -> bool {
        match self {
            Cmp::Eq => a == b,
            Cmp::Ne => a != b,
            Cmp::Lt => a < b,
            Cmp::Le => a <= b,
            Cmp::Gt => a > b,
            Cmp::Ge => a >= b,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Cmp::Eq => "==",
            Cmp::Ne => "!=",
            Cmp::Lt => "<",
            Cmp::Le => "<=",
            Cmp::Gt => ">",
            Cmp::Ge => ">=",
        }
    }
}

/// `lhs op rhs`, kept with its source text for reporting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Predicate {
    pub lhs: Expr,
    pub op: Cmp,
    pub rhs: Expr,
    text: String,
}

impl Predicate {
    /// Evaluates the comparison. A right-hand side that divides by zero
    /// excludes nothing, so `b != (a+3)/(a-1)` holds at `a = 1`.
    pub fn holds(&self, env: &Env) -> Result<bool> {
        let l = self.lhs.eval(env)?;
        match self.rhs.eval(env) {
            Ok(r) => Ok(self.op.holds(&l, &r)),
            Err(Error::DivisionByZero) if self.op == Cmp::Ne => Ok(true),
            Err(e) => Err(e),
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Predicate> {
        let mut p = Parser::new(s)?;
        let lhs = p.expr()?;
        let op = match p.next() {
            Some(Tok::Cmp(op)) => op,
            other => {
                return Err(Error::Parse(format!(
                    "expected a comparison in {s:?}, found {other:?}"
                )))
            }
        };
        let rhs = p.expr()?;
        p.finish()?;
        Ok(Predicate {
            lhs,
            op,
            rhs,
            text: s.trim().to_string(),
        })
    }
}

impl fmt::Display for Cmp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(Scalar),
    Ident(String),
    Op(char),
    Cmp(Cmp),
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    src: String,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Tok::Num(text.parse()?));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            let two: String = chars[i..(i + 2).min(chars.len())].iter().collect();
            let (op, len) = match (two.as_str(), c) {
                ("!=", _) => (Cmp::Ne, 2),
                ("==", _) => (Cmp::Eq, 2),
                ("<=", _) => (Cmp::Le, 2),
                (">=", _) => (Cmp::Ge, 2),
                (_, '<') => (Cmp::Lt, 1),
                (_, '>') => (Cmp::Gt, 1),
                (_, '=') => (Cmp::Eq, 1),
                _ => return Err(Error::Parse(format!("unexpected {c:?} in {s:?}"))),
            };
            out.push(Tok::Cmp(op));
            i += len;
        }
    }
    Ok(out)
}

impl Parser {
    fn new(s: &str) -> Result<Parser> {
        Ok(Parser {
            toks: tokenize(s)?,
            pos: 0,
            src: s.to_string(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at token {} of {:?}", self.pos, self.src))
    }

    fn finish(&self) -> Result<()> {
        if self.pos < self.toks.len() {
            return Err(self.error("trailing input"));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut e = self.term()?;
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let r = self.term()?;
            e = if c == '+' {
                Expr::Add(Box::new(e), Box::new(r))
            } else {
                Expr::Sub(Box::new(e), Box::new(r))
            };
        }
        Ok(e)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut e = self.unary()?;
        while let Some(Tok::Op(c @ ('*' | '/'))) = self.peek().cloned() {
            self.pos += 1;
            let r = self.unary()?;
            e = if c == '*' {
                Expr::Mul(Box::new(e), Box::new(r))
            } else {
                Expr::Div(Box::new(e), Box::new(r))
            };
        }
        Ok(e)
    }

    fn unary(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Some(Tok::Op('+')) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.next() {
            Some(Tok::Num(v)) => Ok(Expr::Num(v)),
            Some(Tok::Ident(name)) => Ok(Expr::Var(name)),
            Some(Tok::Op('(')) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::Op(')')) => Ok(e),
                    _ => Err(self.error("expected ')'")),
                }
            }
            _ => Err(self.error("expected a number, name or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, q};

    fn env(pairs: &[(&str, Scalar)]) -> Env {
        pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
    }

    #[test]
    fn evaluates_table_coefficients() {
        let e: Expr = "-2*(a*b+1)/((a+1)*(b-1))".parse().unwrap();
        assert_eq!(e.eval(&env(&[("a", int(2)), ("b", int(3))])).unwrap(), q(-7, 3));
        let e: Expr = "-(alpha+2)/alpha".parse().unwrap();
        assert_eq!(e.eval(&env(&[("alpha", int(2))])).unwrap(), int(-2));
        let e: Expr = "1/2".parse().unwrap();
        assert_eq!(e.eval(&Env::new()).unwrap(), q(1, 2));
        assert_eq!("-epsilon*alpha".parse::<Expr>().unwrap().variables(), ["epsilon", "alpha"]);
    }

    #[test]
    fn precedence_and_unary_minus() {
        let e: Expr = "-a-1*2".parse().unwrap();
        assert_eq!(e.eval(&env(&[("a", int(3))])).unwrap(), int(-5));
        let e: Expr = "6/2/3".parse().unwrap();
        assert_eq!(e.eval(&Env::new()).unwrap(), int(1));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let e: Expr = "1/(a-1)".parse().unwrap();
        assert_eq!(e.eval(&env(&[("a", int(1))])), Err(Error::DivisionByZero));
    }

    #[test]
    fn predicates() {
        let p: Predicate = "b != -(a+3)/(a-1)".parse().unwrap();
        assert!(!p.holds(&env(&[("a", int(2)), ("b", int(-5))])).unwrap());
        assert!(p.holds(&env(&[("a", int(2)), ("b", int(3))])).unwrap());
        assert!(p.holds(&env(&[("a", int(1)), ("b", int(3))])).unwrap());
        let p: Predicate = "a > 0".parse().unwrap();
        assert!(!p.holds(&env(&[("a", q(-1, 2))])).unwrap());
        assert_eq!(p.to_string(), "a > 0");
    }

    #[test]
    fn malformed_input_is_rejected() {
        assert!("(a+1".parse::<Expr>().is_err());
        assert!("a b".parse::<Expr>().is_err());
        assert!("a ! 1".parse::<Predicate>().is_err());
        assert!("a + 1".parse::<Predicate>().is_err());
    }
}
