//! A small expression language for classes of varieties.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := primary ('^' int)?
//! primary:= leaf | 'sym' '(' leaf ',' int ')' | '(' expr ')'
//! leaf   := 'point' | 'L' | 'E' | 'A(' int ')' | 'P(' int ')'
//!         | 'curve(' int ')' | 'surface(' int ',' int ')'
//! ```

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Leaf {
    Point,
    /// The Lefschetz class `[A^1]`.
    L,
    A(u64),
    P(u64),
    /// A fixed elliptic curve.
    E,
    Curve(u64),
    Surface { q: u64, pg: u64 },
}

impl Leaf {
    /// Leaves whose symmetric powers have a supported measure.
    pub fn supports_sym(self) -> bool {
        matches!(self, Leaf::P(_) | Leaf::E | Leaf::Curve(_) | Leaf::Surface { .. })
    }
}

impl fmt::Display for Leaf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Leaf::Point => f.write_str("point"),
            Leaf::L => f.write_str("L"),
            Leaf::A(n) => write!(f, "A({n})"),
            Leaf::P(n) => write!(f, "P({n})"),
            Leaf::E => f.write_str("E"),
            Leaf::Curve(g) => write!(f, "curve({g})"),
            Leaf::Surface { q, pg } => write!(f, "surface({q}, {pg})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum VarietyExpr {
    Leaf(Leaf),
    Add(Box<VarietyExpr>, Box<VarietyExpr>),
    Sub(Box<VarietyExpr>, Box<VarietyExpr>),
    Mul(Box<VarietyExpr>, Box<VarietyExpr>),
    Pow(Box<VarietyExpr>, u64),
    Sym(Leaf, u64),
}

impl VarietyExpr {
    pub fn contains_sym(&self) -> bool {
        match self {
            VarietyExpr::Leaf(_) => false,
            VarietyExpr::Sym(..) => true,
            VarietyExpr::Pow(a, _) => a.contains_sym(),
            VarietyExpr::Add(a, b) | VarietyExpr::Sub(a, b) | VarietyExpr::Mul(a, b) => {
                a.contains_sym() || b.contains_sym()
            }
        }
    }

    /// Whether any symmetric power of a surface occurs.
    pub fn uses_surface_sym(&self) -> bool {
        match self {
            VarietyExpr::Leaf(_) => false,
            VarietyExpr::Sym(leaf, _) => matches!(leaf, Leaf::Surface { .. }),
            VarietyExpr::Pow(a, _) => a.uses_surface_sym(),
            VarietyExpr::Add(a, b) | VarietyExpr::Sub(a, b) | VarietyExpr::Mul(a, b) => {
                a.uses_surface_sym() || b.uses_surface_sym()
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            VarietyExpr::Add(..) | VarietyExpr::Sub(..) => 1,
            VarietyExpr::Mul(..) => 2,
            VarietyExpr::Pow(..) => 3,
            VarietyExpr::Leaf(_) | VarietyExpr::Sym(..) => 4,
        }
    }
}

/// Writes `e`, parenthesized when its precedence is below `min`.
fn write_at(f: &mut fmt::Formatter<'_>, e: &VarietyExpr, min: u8) -> fmt::Result {
    if e.precedence() < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for VarietyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarietyExpr::Leaf(l) => write!(f, "{l}"),
            VarietyExpr::Sym(l, n) => write!(f, "sym({l}, {n})"),
            VarietyExpr::Add(a, b) | VarietyExpr::Sub(a, b) => {
                write_at(f, a, 1)?;
                f.write_str(if matches!(self, VarietyExpr::Add(..)) { " + " } else { " - " })?;
                write_at(f, b, 2)
            }
            VarietyExpr::Mul(a, b) => {
                write_at(f, a, 2)?;
                f.write_str("*")?;
                write_at(f, b, 3)
            }
            VarietyExpr::Pow(a, k) => {
                write_at(f, a, 4)?;
                write!(f, "^{k}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u64),
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Int(n) => write!(f, "'{n}'"),
            Tok::Sym(c) => write!(f, "'{c}'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
            }
            column += s.len();
            let n = s.parse().map_err(|_| ParseError {
                line: l,
                column: col,
                message: format!("integer {s} is too large"),
            })?;
            Tok::Int(n)
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_alphanumeric() || **d == '_') {
                s.push(d);
                chars.next();
            }
            column += s.len();
            Tok::Ident(s)
        } else if "+-*^(),".contains(c) {
            chars.next();
            column += 1;
            Tok::Sym(c)
        } else {
            return Err(ParseError { line: l, column: col, message: format!("unexpected character '{c}'") });
        };
        out.push(Token { tok, line: l, column: col });
    }
    out.push(Token { tok: Tok::End, line, column });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        let t = self.peek();
        Err(ParseError { line: t.line, column: t.column, message: message.into() })
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek().tok == Tok::Sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.error(format!("expected '{c}', found {}", self.peek().tok))
        }
    }

    fn int(&mut self) -> Result<u64, ParseError> {
        match self.peek().tok {
            Tok::Int(n) => {
                self.pos += 1;
                Ok(n)
            }
            ref t => self.error(format!("expected a nonnegative integer, found {t}")),
        }
    }

    fn expr(&mut self) -> Result<VarietyExpr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = VarietyExpr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = VarietyExpr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<VarietyExpr, ParseError> {
        let mut lhs = self.factor()?;
        while self.eat('*') {
            lhs = VarietyExpr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<VarietyExpr, ParseError> {
        let mut base = self.primary()?;
        while self.eat('^') {
            base = VarietyExpr::Pow(Box::new(base), self.int()?);
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<VarietyExpr, ParseError> {
        if self.eat('(') {
            let e = self.expr()?;
            self.expect(')')?;
            return Ok(e);
        }
        if self.peek().tok == Tok::Ident("sym".into()) {
            self.pos += 1;
            self.expect('(')?;
            let (line, column) = (self.peek().line, self.peek().column);
            let inner = self.expr()?;
            let leaf = match inner {
                VarietyExpr::Leaf(l) if l.supports_sym() => l,
                VarietyExpr::Leaf(l) => {
                    return Err(ParseError {
                        line,
                        column,
                        message: format!("sym is not supported for {l}: only curve, E, P(n) and surface leaves"),
                    })
                }
                other => {
                    return Err(ParseError {
                        line,
                        column,
                        message: format!(
                            "sym applies to a single curve, E, P(n) or surface leaf, not to {other}; \
                             symmetric powers of composite classes have no computable measure here"
                        ),
                    })
                }
            };
            self.expect(',')?;
            let n = self.int()?;
            self.expect(')')?;
            return Ok(VarietyExpr::Sym(leaf, n));
        }
        self.leaf().map(VarietyExpr::Leaf)
    }

    fn leaf(&mut self) -> Result<Leaf, ParseError> {
        let name = match &self.peek().tok {
            Tok::Ident(s) => s.clone(),
            t => return self.error(format!("expected a variety, found {t}")),
        };
        let arity = match name.as_str() {
            "point" | "L" | "E" => 0,
            "A" | "P" | "curve" => 1,
            "surface" => 2,
            _ => return self.error(format!("unknown variety '{name}'")),
        };
        self.bump();
        let mut args = Vec::with_capacity(arity);
        if arity > 0 {
            self.expect('(')?;
            for i in 0..arity {
                if i > 0 {
                    self.expect(',')?;
                }
                args.push(self.int()?);
            }
            self.expect(')')?;
        }
        Ok(match name.as_str() {
            "point" => Leaf::Point,
            "L" => Leaf::L,
            "E" => Leaf::E,
            "A" => Leaf::A(args[0]),
            "P" => Leaf::P(args[0]),
            "curve" => Leaf::Curve(args[0]),
            _ => Leaf::Surface { q: args[0], pg: args[1] },
        })
    }
}

pub fn parse(source: &str) -> Result<VarietyExpr, ParseError> {
    let mut p = Parser { toks: tokenize(source)?, pos: 0 };
    let e = p.expr()?;
    if p.peek().tok != Tok::End {
        return p.error(format!("unexpected {} after expression", p.peek().tok));
    }
    Ok(e)
}

impl FromStr for VarietyExpr {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}
