//! Concrete syntax for integer-valued polynomials.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary ('*' unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' INT)*
//! primary := INT | VAR | 'C' '(' VAR ',' INT ')' | '(' expr ')'
//! VAR     := 'x' DIGITS          (x1 … xN)
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Pow, Zero};
use thiserror::Error;

use crate::error::{Error, Result};
use crate::function::IntegerFunction;
use crate::lattice::LatticePoint;
use crate::polyfract::{binom, Polyfract};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("unknown variable `{name}` (dimension is {dim})")]
    UnknownVariable { name: String, dim: usize },
    #[error("negative exponent")]
    NegativeExponent,
}

/// Syntax tree. Variable indices are 1-based; literals are nonnegative and
/// negation is always an explicit [`Expr::Neg`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    Int(BigInt),
    Var(usize),
    Binom { var: usize, k: u32 },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    pub fn eval(&self, x: &[BigInt]) -> BigInt {
        match self {
            Expr::Int(v) => v.clone(),
            Expr::Var(i) => x[i - 1].clone(),
            Expr::Binom { var, k } => binom(&x[var - 1], *k as i64),
            Expr::Neg(e) => -e.eval(x),
            Expr::Add(a, b) => a.eval(x) + b.eval(x),
            Expr::Sub(a, b) => a.eval(x) - b.eval(x),
            Expr::Mul(a, b) => {
                let l = a.eval(x);
                if l.is_zero() {
                    l
                } else {
                    l * b.eval(x)
                }
            }
            Expr::Pow(b, e) => Pow::pow(b.eval(x), *e),
        }
    }

    /// Syntactic upper bound on the total degree.
    pub fn degree_bound(&self) -> u64 {
        match self {
            Expr::Int(_) => 0,
            Expr::Var(_) => 1,
            Expr::Binom { k, .. } => *k as u64,
            Expr::Neg(e) => e.degree_bound(),
            Expr::Add(a, b) | Expr::Sub(a, b) => a.degree_bound().max(b.degree_bound()),
            Expr::Mul(a, b) => a.degree_bound().saturating_add(b.degree_bound()),
            Expr::Pow(b, e) => b.degree_bound().saturating_mul(*e as u64),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            Expr::Int(_) | Expr::Var(_) | Expr::Binom { .. } => 5,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            f.write_str("(")?;
            self.fmt_at(f, 0)?;
            return f.write_str(")");
        }
        match self {
            Expr::Int(v) => write!(f, "{v}"),
            Expr::Var(i) => write!(f, "x{i}"),
            Expr::Binom { var, k } => write!(f, "C(x{var},{k})"),
            Expr::Neg(e) => {
                f.write_str("-")?;
                e.fmt_at(f, 3)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                a.fmt_at(f, 1)?;
                f.write_str(if matches!(self, Expr::Add(..)) {
                    " + "
                } else {
                    " - "
                })?;
                b.fmt_at(f, 2)
            }
            Expr::Mul(a, b) => {
                a.fmt_at(f, 2)?;
                f.write_str("*")?;
                b.fmt_at(f, 3)
            }
            Expr::Pow(b, e) => {
                b.fmt_at(f, 5)?;
                write!(f, "^{e}")
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}

/// A parsed expression together with the dimension it was checked against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expression {
    pub dim: usize,
    pub root: Expr,
}

impl Expression {
    pub fn eval(&self, x: &LatticePoint) -> Result<BigInt> {
        crate::error::check_dim(self.dim, x.dim())?;
        Ok(self.root.eval(x.coords()))
    }

    /// The canonical polyfract equal to this expression pointwise, obtained
    /// by sampling on [0, degree_bound]^N.
    pub fn lower(&self) -> Result<Polyfract> {
        let bound = u32::try_from(self.root.degree_bound())
            .map_err(|_| Error::InvalidArgument("degree bound too large".into()))?;
        let table = IntegerFunction::tabulate(self.dim, 0, bound as i64, |x| {
            Ok(self.root.eval(x.coords()))
        })?;
        Polyfract::from_samples(&table, bound)
    }
}

impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.root.fmt(f)
    }
}

pub fn parse(source: &str, dim: usize) -> Result<Expression, ParseError> {
    let tokens = tokenize(source)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        dim,
    };
    let root = p.expr()?;
    let t = p.peek();
    if t.tok != Tok::Eof {
        return Err(t.error(ParseErrorKind::Syntax(format!("unexpected {}", t.tok))));
    }
    Ok(Expression { dim, root })
}

pub fn lower(e: &Expression) -> Result<Polyfract> {
    e.lower()
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Var(String),
    Binom,
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Star,
    Caret,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(v) => write!(f, "`{v}`"),
            Tok::Var(v) => write!(f, "`{v}`"),
            Tok::Binom => f.write_str("`C`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

impl Token {
    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: self.line,
            column: self.column,
            kind,
        }
    }
}

fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut column) = (1usize, 1usize);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (tl, tc) = (line, column);
        let syntax = |msg: String| ParseError {
            line: tl,
            column: tc,
            kind: ParseErrorKind::Syntax(msg),
        };
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            i += 1;
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i < chars.len() && (chars[i] == '.' || chars[i] == 'e' || chars[i] == 'E') {
                return Err(syntax("only integer constants are allowed".into()));
            }
            let digits: String = chars[start..i].iter().collect();
            Tok::Int(digits.parse().expect("ascii digits"))
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            if word == "C" {
                Tok::Binom
            } else if word.len() > 1
                && word.starts_with('x')
                && word[1..].chars().all(|d| d.is_ascii_digit())
            {
                Tok::Var(word)
            } else {
                return Err(syntax(format!("unknown identifier `{word}`")));
            }
        } else {
            i += 1;
            match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                ',' => Tok::Comma,
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '^' => Tok::Caret,
                '/' => return Err(syntax("division is not supported".into())),
                '.' => return Err(syntax("only integer constants are allowed".into())),
                other => return Err(syntax(format!("unexpected character `{other}`"))),
            }
        };
        column += i - start;
        out.push(Token {
            tok,
            line: tl,
            column: tc,
        });
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    dim: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<Token, ParseError> {
        let t = self.next();
        if t.tok == want {
            Ok(t)
        } else {
            Err(t.error(ParseErrorKind::Syntax(format!(
                "expected {want}, found {}",
                t.tok
            ))))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.next();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.next();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while self.peek().tok == Tok::Star {
            self.next();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek().tok == Tok::Minus {
            self.next();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let mut base = self.primary()?;
        while self.peek().tok == Tok::Caret {
            self.next();
            let t = self.next();
            let e = match &t.tok {
                Tok::Int(v) => small_literal(&t, v)?,
                Tok::Minus => return Err(t.error(ParseErrorKind::NegativeExponent)),
                other => {
                    return Err(t.error(ParseErrorKind::Syntax(format!(
                        "exponent must be an integer literal, found {other}"
                    ))))
                }
            };
            base = Expr::Pow(Box::new(base), e);
        }
        Ok(base)
    }

    fn variable(&self, t: &Token) -> Result<usize, ParseError> {
        let Tok::Var(name) = &t.tok else {
            return Err(t.error(ParseErrorKind::Syntax(format!(
                "expected a variable, found {}",
                t.tok
            ))));
        };
        match name[1..].parse::<usize>() {
            Ok(i) if (1..=self.dim).contains(&i) => Ok(i),
            _ => Err(t.error(ParseErrorKind::UnknownVariable {
                name: name.clone(),
                dim: self.dim,
            })),
        }
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let t = self.next();
        match &t.tok {
            Tok::Int(v) => Ok(Expr::Int(v.clone())),
            Tok::Var(_) => Ok(Expr::Var(self.variable(&t)?)),
            Tok::Binom => {
                self.expect(Tok::LParen)?;
                let vt = self.next();
                let var = self.variable(&vt)?;
                self.expect(Tok::Comma)?;
                let kt = self.next();
                let k = match &kt.tok {
                    Tok::Int(v) => small_literal(&kt, v)?,
                    Tok::Minus => {
                        return Err(kt.error(ParseErrorKind::Syntax(
                            "binomial index must be a nonnegative integer literal".into(),
                        )))
                    }
                    other => {
                        return Err(kt.error(ParseErrorKind::Syntax(format!(
                            "binomial index must be an integer literal, found {other}"
                        ))))
                    }
                };
                self.expect(Tok::RParen)?;
                Ok(Expr::Binom { var, k })
            }
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            other => Err(t.error(ParseErrorKind::Syntax(format!("unexpected {other}")))),
        }
    }
}

fn small_literal(t: &Token, v: &BigInt) -> Result<u32, ParseError> {
    u32::try_from(v).map_err(|_| {
        t.error(ParseErrorKind::Syntax(format!(
            "literal {v} is too large here"
        )))
    })
}
