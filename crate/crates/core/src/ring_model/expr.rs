//! A small expression language for user-defined node equations.
//!
//! Grammar (usual precedence, `^` right-associative and binding tighter than
//! unary minus):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' unary)?
//! atom   := number | ident index? | ident '(' expr ')' | '(' expr ')'
//! ```
//!
//! Identifiers: `x` / `x[i]` is the node's own state, `u<r>` / `u<r>[i]` is
//! the state of the input at range `r`, `pi` is π, and every other name is a
//! parameter. Functions: `sin cos tan exp ln log sqrt abs tanh sinh cosh`.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::{Error, Result};

/// Numbers the interpreter can evaluate over. Implemented for `f64` and for
/// forward-mode [`Dual`] numbers, which give exact Jacobians.
pub trait Scalar:
    Copy + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Div<Output = Self> + Neg<Output = Self>
{
    fn constant(v: f64) -> Self;
    fn value(self) -> f64;
    fn apply(self, f: Func) -> Self;
    fn powi(self, k: i32) -> Self;
    fn powf(self, e: Self) -> Self;
}

impl Scalar for f64 {
    fn constant(v: f64) -> Self {
        v
    }
    fn value(self) -> f64 {
        self
    }
    fn apply(self, f: Func) -> Self {
        match f {
            Func::Sin => self.sin(),
            Func::Cos => self.cos(),
            Func::Tan => self.tan(),
            Func::Exp => self.exp(),
            Func::Ln => self.ln(),
            Func::Sqrt => self.sqrt(),
            Func::Abs => self.abs(),
            Func::Tanh => self.tanh(),
            Func::Sinh => self.sinh(),
            Func::Cosh => self.cosh(),
        }
    }
    fn powi(self, k: i32) -> Self {
        f64::powi(self, k)
    }
    fn powf(self, e: Self) -> Self {
        f64::powf(self, e)
    }
}

/// Value plus one directional derivative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dual {
    pub v: f64,
    pub d: f64,
}

impl Dual {
    pub fn new(v: f64, d: f64) -> Self {
        Dual { v, d }
    }
}

impl Add for Dual {
    type Output = Dual;
    fn add(self, o: Dual) -> Dual {
        Dual::new(self.v + o.v, self.d + o.d)
    }
}

impl Sub for Dual {
    type Output = Dual;
    fn sub(self, o: Dual) -> Dual {
        Dual::new(self.v - o.v, self.d - o.d)
    }
}

impl Mul for Dual {
    type Output = Dual;
    fn mul(self, o: Dual) -> Dual {
        Dual::new(self.v * o.v, self.d * o.v + self.v * o.d)
    }
}

impl Div for Dual {
    type Output = Dual;
    fn div(self, o: Dual) -> Dual {
        Dual::new(self.v / o.v, (self.d * o.v - self.v * o.d) / (o.v * o.v))
    }
}

impl Neg for Dual {
    type Output = Dual;
    fn neg(self) -> Dual {
        Dual::new(-self.v, -self.d)
    }
}

impl Scalar for Dual {
    fn constant(v: f64) -> Self {
        Dual::new(v, 0.0)
    }
    fn value(self) -> f64 {
        self.v
    }
    fn apply(self, f: Func) -> Self {
        let (v, d) = (self.v, self.d);
        match f {
            Func::Sin => Dual::new(v.sin(), d * v.cos()),
            Func::Cos => Dual::new(v.cos(), -d * v.sin()),
            Func::Tan => {
                let t = v.tan();
                Dual::new(t, d * (1.0 + t * t))
            }
            Func::Exp => {
                let e = v.exp();
                Dual::new(e, d * e)
            }
            Func::Ln => Dual::new(v.ln(), d / v),
            Func::Sqrt => {
                let s = v.sqrt();
                Dual::new(s, d / (2.0 * s))
            }
            // derivative of |v| at 0 taken as 0
            Func::Abs => Dual::new(v.abs(), if v == 0.0 { 0.0 } else { d * v.signum() }),
            Func::Tanh => {
                let t = v.tanh();
                Dual::new(t, d * (1.0 - t * t))
            }
            Func::Sinh => Dual::new(v.sinh(), d * v.cosh()),
            Func::Cosh => Dual::new(v.cosh(), d * v.sinh()),
        }
    }
    fn powi(self, k: i32) -> Self {
        match k {
            0 => Dual::constant(1.0),
            _ => Dual::new(self.v.powi(k), self.d * k as f64 * self.v.powi(k - 1)),
        }
    }
    fn powf(self, e: Self) -> Self {
        let p = self.v.powf(e.v);
        let d_base = if self.d == 0.0 { 0.0 } else { self.d * e.v * self.v.powf(e.v - 1.0) };
        let d_exp = if e.d == 0.0 { 0.0 } else { e.d * p * self.v.ln() };
        Dual::new(p, d_base + d_exp)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Sin,
    Cos,
    Tan,
    Exp,
    Ln,
    Sqrt,
    Abs,
    Tanh,
    Sinh,
    Cosh,
}

impl Func {
    fn from_name(name: &str) -> Option<Func> {
        Some(match name {
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "tan" => Func::Tan,
            "exp" => Func::Exp,
            "ln" | "log" => Func::Ln,
            "sqrt" => Func::Sqrt,
            "abs" => Func::Abs,
            "tanh" => Func::Tanh,
            "sinh" => Func::Sinh,
            "cosh" => Func::Cosh,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Node {
    Const(f64),
    Own(usize),
    Input { slot: usize, comp: usize },
    Param(usize),
    Lambda,
    Neg(Box<Node>),
    Add(Box<Node>, Box<Node>),
    Sub(Box<Node>, Box<Node>),
    Mul(Box<Node>, Box<Node>),
    Div(Box<Node>, Box<Node>),
    PowInt(Box<Node>, i32),
    Pow(Box<Node>, Box<Node>),
    Call(Func, Box<Node>),
}

/// What names an expression may refer to.
#[derive(Debug, Clone)]
pub struct Scope<'a> {
    pub node_dim: usize,
    /// Declared coupling ranges; `u<r>` resolves to the slot of `r` here.
    pub ranges: &'a [usize],
    /// Parameter names, excluding the bifurcation parameter.
    pub params: &'a [String],
    /// Name of the bifurcation parameter.
    pub lambda: &'a str,
}

/// Inputs to a single node evaluation.
pub struct Env<'a, S> {
    pub own: &'a [S],
    /// One slice per declared range, in the order of [`Scope::ranges`].
    pub inputs: &'a [&'a [S]],
    pub params: &'a [f64],
    pub lambda: S,
}

/// A parsed expression for one component of the node equation.
#[derive(Debug, Clone, PartialEq)]
pub struct Expr {
    root: Node,
    source: String,
}

impl Expr {
    pub fn parse(source: &str, scope: &Scope<'_>) -> Result<Expr> {
        let tokens = lex(source)?;
        let mut p = Parser { tokens, pos: 0, scope, len: source.len() };
        let root = p.expr()?;
        if p.pos != p.tokens.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(Expr { root, source: source.to_string() })
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn eval<S: Scalar>(&self, env: &Env<'_, S>) -> S {
        eval_node(&self.root, env)
    }
}

fn eval_node<S: Scalar>(node: &Node, env: &Env<'_, S>) -> S {
    match node {
        Node::Const(v) => S::constant(*v),
        Node::Own(i) => env.own[*i],
        Node::Input { slot, comp } => env.inputs[*slot][*comp],
        Node::Param(i) => S::constant(env.params[*i]),
        Node::Lambda => env.lambda,
        Node::Neg(a) => -eval_node(a, env),
        Node::Add(a, b) => eval_node(a, env) + eval_node(b, env),
        Node::Sub(a, b) => eval_node(a, env) - eval_node(b, env),
        Node::Mul(a, b) => eval_node(a, env) * eval_node(b, env),
        Node::Div(a, b) => eval_node(a, env) / eval_node(b, env),
        Node::PowInt(a, k) => eval_node(a, env).powi(*k),
        Node::Pow(a, b) => eval_node(a, env).powf(eval_node(b, env)),
        Node::Call(f, a) => eval_node(a, env).apply(*f),
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Index(usize),
    Op(char),
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                i += 1;
            }
            if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
                let mut j = i + 1;
                if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
                    j += 1;
                }
                if j < bytes.len() && bytes[j].is_ascii_digit() {
                    i = j;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                }
            }
            let text = &src[start..i];
            let v =
                text.parse::<f64>().map_err(|_| Error::Parse { pos: start, msg: format!("bad number `{text}`") })?;
            out.push((start, Tok::Num(v)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(src[start..i].to_string())));
        } else if c == '[' {
            let start = i;
            i += 1;
            let num_start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if num_start == i || i >= bytes.len() || bytes[i] != b']' {
                return Err(Error::Parse { pos: start, msg: "expected `[<index>]`".into() });
            }
            let idx = src[num_start..i].parse().expect("digits");
            i += 1;
            out.push((start, Tok::Index(idx)));
        } else if "+-*/^(),".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(Error::Parse { pos: i, msg: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

struct Parser<'s, 'a> {
    tokens: Vec<(usize, Tok)>,
    pos: usize,
    scope: &'s Scope<'a>,
    len: usize,
}

impl Parser<'_, '_> {
    fn error(&self, msg: &str) -> Error {
        let pos = self.tokens.get(self.pos).map_or(self.len, |t| t.0);
        Error::Parse { pos, msg: msg.to_string() }
    }

    fn peek_op(&self) -> Option<char> {
        match self.tokens.get(self.pos) {
            Some((_, Tok::Op(c))) => Some(*c),
            _ => None,
        }
    }

    fn expect_op(&mut self, c: char) -> Result<()> {
        if self.peek_op() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{c}`")))
        }
    }

    fn expr(&mut self) -> Result<Node> {
        let mut lhs = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            lhs = if op == '+' {
                Node::Add(Box::new(lhs), Box::new(rhs))
            } else {
                Node::Sub(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Node> {
        let mut lhs = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = if op == '*' {
                Node::Mul(Box::new(lhs), Box::new(rhs))
            } else {
                Node::Div(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Node> {
        if self.peek_op() == Some('-') {
            self.pos += 1;
            return Ok(Node::Neg(Box::new(self.unary()?)));
        }
        if self.peek_op() == Some('+') {
            self.pos += 1;
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Node> {
        let base = self.atom()?;
        if self.peek_op() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let exp = self.unary()?;
        Ok(match exp {
            Node::Const(e) if e.fract() == 0.0 && e.abs() <= 64.0 => Node::PowInt(Box::new(base), e as i32),
            Node::Neg(ref inner) => match **inner {
                Node::Const(e) if e.fract() == 0.0 && e.abs() <= 64.0 => Node::PowInt(Box::new(base), -(e as i32)),
                _ => Node::Pow(Box::new(base), Box::new(exp)),
            },
            _ => Node::Pow(Box::new(base), Box::new(exp)),
        })
    }

    fn atom(&mut self) -> Result<Node> {
        let Some((pos, tok)) = self.tokens.get(self.pos).cloned() else {
            return Err(self.error("unexpected end of expression"));
        };
        self.pos += 1;
        match tok {
            Tok::Num(v) => Ok(Node::Const(v)),
            Tok::Op('(') => {
                let inner = self.expr()?;
                self.expect_op(')')?;
                Ok(inner)
            }
            Tok::Ident(name) => {
                if self.peek_op() == Some('(') {
                    let f = Func::from_name(&name)
                        .ok_or_else(|| Error::Parse { pos, msg: format!("unknown function `{name}`") })?;
                    self.pos += 1;
                    let arg = self.expr()?;
                    self.expect_op(')')?;
                    return Ok(Node::Call(f, Box::new(arg)));
                }
                let index = match self.tokens.get(self.pos) {
                    Some((_, Tok::Index(i))) => {
                        self.pos += 1;
                        Some(*i)
                    }
                    _ => None,
                };
                self.resolve(pos, &name, index)
            }
            _ => {
                self.pos -= 1;
                Err(self.error("expected a value"))
            }
        }
    }

    fn resolve(&self, pos: usize, name: &str, index: Option<usize>) -> Result<Node> {
        let scope = self.scope;
        let component = |index: Option<usize>| -> Result<usize> {
            let i = index.unwrap_or(0);
            if index.is_none() && scope.node_dim > 1 {
                return Err(Error::Parse { pos, msg: format!("`{name}` needs a component index") });
            }
            if i >= scope.node_dim {
                return Err(Error::Parse { pos, msg: format!("component {i} out of range") });
            }
            Ok(i)
        };
        if name == "x" {
            return Ok(Node::Own(component(index)?));
        }
        if let Some(digits) = name.strip_prefix('u') {
            if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
                let r: usize = digits.parse().map_err(|_| Error::Parse { pos, msg: "bad range".into() })?;
                let slot = scope.ranges.iter().position(|&q| q == r).ok_or(Error::UndeclaredInput(r))?;
                return Ok(Node::Input { slot, comp: component(index)? });
            }
        }
        if index.is_some() {
            return Err(Error::Parse { pos, msg: format!("`{name}` cannot be indexed") });
        }
        if name == scope.lambda {
            return Ok(Node::Lambda);
        }
        if name == "pi" {
            return Ok(Node::Const(std::f64::consts::PI));
        }
        scope
            .params
            .iter()
            .position(|p| p == name)
            .map(Node::Param)
            .ok_or_else(|| Error::UnknownParameter(name.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scope<'a>(ranges: &'a [usize], params: &'a [String], l: usize) -> Scope<'a> {
        Scope { node_dim: l, ranges, params, lambda: "lambda" }
    }

    fn eval1(src: &str, x: f64, u: &[f64], params: &[(&str, f64)], lambda: f64) -> f64 {
        let names: Vec<String> = params.iter().map(|p| p.0.to_string()).collect();
        let values: Vec<f64> = params.iter().map(|p| p.1).collect();
        let ranges: Vec<usize> = (1..=u.len()).collect();
        let e = Expr::parse(src, &scope(&ranges, &names, 1)).unwrap();
        let slots: Vec<[f64; 1]> = u.iter().map(|&v| [v]).collect();
        let inputs: Vec<&[f64]> = slots.iter().map(|s| &s[..]).collect();
        e.eval(&Env { own: &[x], inputs: &inputs, params: &values, lambda })
    }

    #[test]
    fn cubic_node_equation() {
        let v = eval1("lambda*x - x^3 + a*u1", 1.5, &[2.0], &[("a", -2.0)], 0.5);
        assert_eq!(v, 0.5 * 1.5 - 1.5f64.powi(3) - 4.0);
    }

    #[test]
    fn precedence_and_unary_minus() {
        assert_eq!(eval1("-x^2", 3.0, &[], &[], 0.0), -9.0);
        assert_eq!(eval1("2^3^2", 0.0, &[], &[], 0.0), 512.0);
        assert_eq!(eval1("1 - 2 - 3", 0.0, &[], &[], 0.0), -4.0);
        assert_eq!(eval1("8 / 4 / 2", 0.0, &[], &[], 0.0), 1.0);
        assert_eq!(eval1("2*(1+x)", 1.0, &[], &[], 0.0), 4.0);
        assert_eq!(eval1("1.5e-1 * 2", 0.0, &[], &[], 0.0), 0.3);
        assert_eq!(eval1("x^-2", 2.0, &[], &[], 0.0), 0.25);
    }

    #[test]
    fn functions() {
        let v = eval1("sin(x) + exp(0) + sqrt(4) + tanh(0) + cos(pi)", 0.0, &[], &[], 0.0);
        assert!((v - 2.0).abs() < 1e-15);
    }

    #[test]
    fn undeclared_input_is_rejected() {
        let names = vec![];
        let err = Expr::parse("u2", &scope(&[1], &names, 1)).unwrap_err();
        assert_eq!(err, Error::UndeclaredInput(2));
    }

    #[test]
    fn unknown_names_are_rejected() {
        let names = vec!["a".to_string()];
        assert_eq!(Expr::parse("b*x", &scope(&[1], &names, 1)).unwrap_err(), Error::UnknownParameter("b".into()));
        assert!(matches!(Expr::parse("foo(x)", &scope(&[1], &names, 1)), Err(Error::Parse { .. })));
        assert!(matches!(Expr::parse("x +", &scope(&[1], &names, 1)), Err(Error::Parse { .. })));
        assert!(matches!(Expr::parse("(x", &scope(&[1], &names, 1)), Err(Error::Parse { .. })));
        assert!(matches!(Expr::parse("x $ 2", &scope(&[1], &names, 1)), Err(Error::Parse { .. })));
    }

    #[test]
    fn multi_component_indexing() {
        let names = vec![];
        let s = scope(&[1], &names, 2);
        assert!(Expr::parse("x", &s).is_err());
        assert!(Expr::parse("x[2]", &s).is_err());
        let e = Expr::parse("x[1] - u1[0]", &s).unwrap();
        let input = [5.0, 7.0];
        let inputs: Vec<&[f64]> = vec![&input];
        let v = e.eval(&Env { own: &[1.0, 2.0], inputs: &inputs, params: &[], lambda: 0.0 });
        assert_eq!(v, -3.0);
    }

    #[test]
    fn dual_numbers_differentiate() {
        let names = vec![];
        let e = Expr::parse("sin(x)*x^3 + exp(2*x)", &scope(&[1], &names, 1)).unwrap();
        let x = 0.7;
        let d = e.eval(&Env {
            own: &[Dual::new(x, 1.0)],
            inputs: &[&[Dual::constant(0.0)]],
            params: &[],
            lambda: Dual::constant(0.0),
        });
        let exact = x.cos() * x.powi(3) + 3.0 * x.sin() * x * x + 2.0 * (2.0 * x).exp();
        assert!((d.d - exact).abs() < 1e-12);
    }
}
