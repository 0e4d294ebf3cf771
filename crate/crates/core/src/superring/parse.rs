//! Recursive-descent parser for the expression grammar
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := coeff ('*'? factor)* | factor ('*'? factor)*
//! factor := evenvar ('^' nat)? | oddvar | '(' expr ')'
//! coeff  := nat ('/' nat)?
//! ```
//!
//! Identifiers of the shape `t<digits>` are odd variables, everything else
//! is even. Printing (see [`SuperPolynomial`]'s `Display`) emits the
//! canonical form, which re-parses to an equal element.

use std::collections::BTreeSet;

use num::{BigInt, BigRational};

use super::{Ring, RingSpec, SuperPolynomial};
use crate::error::{Error, Result};

/// Parse an expression in the given ring. Unknown variables are an error.
pub fn parse_in_ring(input: &str, ring: &Ring) -> Result<SuperPolynomial> {
    let ast = Parser::new(input).parse()?;
    eval(&ast, ring)
}

/// Parse an expression, inferring the smallest ring containing its
/// variables (see [`infer_ring`]).
pub fn parse_polynomial(input: &str) -> Result<SuperPolynomial> {
    let ast = Parser::new(input).parse()?;
    let ring = ring_of_asts(std::slice::from_ref(&ast));
    eval(&ast, &ring)
}

/// Infer the common ring of several expressions: collect every variable
/// name, classify `t<digits>` as odd, and order each class by name stem
/// and numeric suffix. The order fixes the sign convention, so inference
/// must be deterministic in the input set.
pub fn infer_ring(inputs: &[&str]) -> Result<Ring> {
    let mut asts = Vec::new();
    for input in inputs {
        asts.push(Parser::new(input).parse()?);
    }
    Ok(ring_of_asts(&asts))
}

fn ring_of_asts(asts: &[Ast]) -> Ring {
    let mut names = BTreeSet::new();
    for ast in asts {
        collect_vars(ast, &mut names);
    }
    let mut even: Vec<String> = Vec::new();
    let mut odd: Vec<String> = Vec::new();
    for name in names {
        if is_odd_name(&name) {
            odd.push(name);
        } else {
            even.push(name);
        }
    }
    even.sort_by_key(|a| natural_key(a));
    odd.sort_by_key(|a| natural_key(a));
    RingSpec::new(even, odd).expect("collected names are distinct")
}

fn is_odd_name(name: &str) -> bool {
    let mut chars = name.chars();
    chars.next() == Some('t')
        && !name[1..].is_empty()
        && name[1..].chars().all(|c| c.is_ascii_digit())
}

/// Sort key: alphabetic stem, then trailing digits as a number (`x` < `x1`
/// < `x2` < `x10`).
fn natural_key(name: &str) -> (String, u64) {
    let split = name
        .char_indices()
        .rev()
        .take_while(|(_, c)| c.is_ascii_digit())
        .last()
        .map(|(i, _)| i)
        .unwrap_or(name.len());
    let stem = name[..split].to_string();
    let number = name[split..].parse().unwrap_or(0);
    (stem, number)
}

#[derive(Debug, Clone)]
enum Ast {
    Sum(Vec<(i8, Ast)>),
    Product(Option<BigRational>, Vec<Ast>),
    Var { name: String, power: u32 },
}

fn collect_vars(ast: &Ast, out: &mut BTreeSet<String>) {
    match ast {
        Ast::Sum(terms) => terms.iter().for_each(|(_, t)| collect_vars(t, out)),
        Ast::Product(_, factors) => factors.iter().for_each(|f| collect_vars(f, out)),
        Ast::Var { name, .. } => {
            out.insert(name.clone());
        }
    }
}

fn eval(ast: &Ast, ring: &Ring) -> Result<SuperPolynomial> {
    match ast {
        Ast::Sum(terms) => {
            let mut acc = SuperPolynomial::zero(ring);
            for (sign, term) in terms {
                let value = eval(term, ring)?;
                acc = if *sign < 0 {
                    acc.sub(&value)?
                } else {
                    acc.add(&value)?
                };
            }
            Ok(acc)
        }
        Ast::Product(coeff, factors) => {
            let mut acc = match coeff {
                Some(c) => SuperPolynomial::constant(ring, c.clone()),
                None => SuperPolynomial::one(ring),
            };
            for factor in factors {
                acc = acc.mul(&eval(factor, ring)?)?;
            }
            Ok(acc)
        }
        Ast::Var { name, power } => SuperPolynomial::variable(ring, name)?.pow(*power),
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col: usize,
    _input: &'a str,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Self {
        Parser {
            chars: input.chars().collect(),
            pos: 0,
            line: 1,
            col: 1,
            _input: input,
        }
    }

    fn parse(mut self) -> Result<Ast> {
        self.skip_ws();
        let ast = self.expr()?;
        self.skip_ws();
        if self.pos < self.chars.len() {
            return Err(self.error(format!("unexpected character `{}`", self.chars[self.pos])));
        }
        Ok(ast)
    }

    fn error(&self, message: String) -> Error {
        Error::Parse {
            line: self.line,
            column: self.col,
            message,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut terms = Vec::new();
        let mut sign: i8 = 1;
        if let Some(c @ ('+' | '-')) = self.peek() {
            self.bump();
            if c == '-' {
                sign = -1;
            }
            self.skip_ws();
        }
        terms.push((sign, self.term()?));
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.bump();
                    self.skip_ws();
                    terms.push((1, self.term()?));
                }
                Some('-') => {
                    self.bump();
                    self.skip_ws();
                    terms.push((-1, self.term()?));
                }
                _ => break,
            }
        }
        Ok(Ast::Sum(terms))
    }

    fn term(&mut self) -> Result<Ast> {
        let coeff = if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            Some(self.rational()?)
        } else {
            None
        };
        let mut factors = Vec::new();
        loop {
            self.skip_ws();
            let explicit_star = self.peek() == Some('*');
            if explicit_star {
                self.bump();
                self.skip_ws();
            }
            match self.peek() {
                Some(c) if c.is_ascii_alphabetic() || c == '(' => factors.push(self.factor()?),
                _ if explicit_star => {
                    return Err(self.error("expected a factor after `*`".into()));
                }
                _ => break,
            }
        }
        if coeff.is_none() && factors.is_empty() {
            return Err(self.error("expected a term".into()));
        }
        Ok(Ast::Product(coeff, factors))
    }

    fn factor(&mut self) -> Result<Ast> {
        match self.peek() {
            Some('(') => {
                self.bump();
                self.skip_ws();
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`".into()));
                }
                self.bump();
                Ok(inner)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.identifier();
                self.skip_ws();
                let mut power = 1;
                if self.peek() == Some('^') {
                    if is_odd_name(&name) {
                        return Err(
                            self.error(format!("odd variable `{name}` cannot carry an exponent"))
                        );
                    }
                    self.bump();
                    self.skip_ws();
                    power = self.natural()? as u32;
                }
                Ok(Ast::Var { name, power })
            }
            Some(c) => Err(self.error(format!("unexpected character `{c}`"))),
            None => Err(self.error("unexpected end of input".into())),
        }
    }

    fn identifier(&mut self) -> String {
        let mut name = String::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            name.push(self.bump().unwrap());
        }
        name
    }

    fn natural(&mut self) -> Result<u64> {
        let mut digits = String::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            digits.push(self.bump().unwrap());
        }
        if digits.is_empty() {
            return Err(self.error("expected a number".into()));
        }
        digits
            .parse()
            .map_err(|_| self.error(format!("number `{digits}` is too large")))
    }

    fn rational(&mut self) -> Result<BigRational> {
        let numer = self.natural()?;
        let mut value = BigRational::from_integer(BigInt::from(numer));
        self.skip_ws();
        if self.peek() == Some('/') {
            self.bump();
            self.skip_ws();
            let denom = self.natural()?;
            if denom == 0 {
                return Err(self.error("zero denominator".into()));
            }
            value /= BigRational::from_integer(BigInt::from(denom));
        }
        Ok(value)
    }
}
