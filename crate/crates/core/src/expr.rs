//! A small expression language for quaternion arithmetic: literals 1, i,
//! j, k and sqrt2, the four arithmetic operators, integer powers,
//! postfix conjugation `*`, braces for the Jordan product {u, v} and
//! Jordan ratio {u : v}, and the functions phi(x,a), lambda(q),
//! cf(x,a,y,b) and ldiv(u,v).
//!
//! Grammar (EBNF), with precedence loosest to tightest:
//!
//! ```text
//! expr     = term { ("+" | "-") term } ;
//! term     = power { ("*" | "/") power } ;   (* binary "*" only when an
//!                                               operand follows *)
//! power    = unary { "^" exponent } ;
//! unary    = "-" unary | postfix ;
//! postfix  = primary { "*" } ;               (* conjugation; taken only
//!                                               when no operand follows *)
//! primary  = number | "i" | "j" | "k" | "sqrt2"
//!          | "(" expr ")"
//!          | "{" expr ("," | ":") expr "}"
//!          | ident "(" expr { "," expr } ")" ;
//! exponent = number | "(" ["-"] number ")" ;
//! number   = digit { digit } ;
//! ```
//!
//! A `*` is read as postfix conjugation exactly when the next token
//! cannot start an operand, so `u*v` multiplies while `u* * v` and
//! `(u)*` conjugate. Division `u/v` is the right fraction `u * v^(-1)`;
//! the left fraction `v^(-1) * u` is spelled `ldiv(u, v)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::cf::{self, CfOutcome, CfQuadruple};
use crate::error::{Error, Result};
use crate::quat::{jordan_product, jordan_ratio, Quat, RatioConvention};
use crate::scalar::{Rat, ScalarQ};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokKind {
    Num(BigInt),
    Basis(u8),
    Sqrt2,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LBrace,
    RBrace,
    Colon,
    Comma,
    LParen,
    RParen,
    Ident(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokKind,
    /// Byte range [start, end) in the input.
    pub span: (usize, usize),
}

/// Maximal-munch lexer; "sqrt2" and the unicode radical both lex to the
/// sqrt2 token.
pub fn tokenize(text: &str) -> Result<Vec<Token>> {
    let bytes: Vec<(usize, char)> = text.char_indices().collect();
    let end_of = |idx: usize| -> usize {
        bytes
            .get(idx + 1)
            .map(|&(o, _)| o)
            .unwrap_or_else(|| text.len())
    };
    let mut tokens = Vec::new();
    let mut idx = 0;
    while idx < bytes.len() {
        let (offset, ch) = bytes[idx];
        if ch.is_whitespace() {
            idx += 1;
            continue;
        }
        let simple = |kind: TokKind| Token {
            kind,
            span: (offset, end_of(idx)),
        };
        match ch {
            '+' => tokens.push(simple(TokKind::Plus)),
            '-' | '\u{2212}' => tokens.push(simple(TokKind::Minus)),
            '*' => tokens.push(simple(TokKind::Star)),
            '/' => tokens.push(simple(TokKind::Slash)),
            '^' => tokens.push(simple(TokKind::Caret)),
            '{' => tokens.push(simple(TokKind::LBrace)),
            '}' => tokens.push(simple(TokKind::RBrace)),
            ':' => tokens.push(simple(TokKind::Colon)),
            ',' => tokens.push(simple(TokKind::Comma)),
            '(' => tokens.push(simple(TokKind::LParen)),
            ')' => tokens.push(simple(TokKind::RParen)),
            '\u{221a}' => {
                // radical must be followed by 2
                if bytes.get(idx + 1).map(|&(_, c)| c) == Some('2') {
                    let end = end_of(idx + 1);
                    tokens.push(Token {
                        kind: TokKind::Sqrt2,
                        span: (offset, end),
                    });
                    idx += 2;
                    continue;
                }
                return Err(Error::Lex {
                    offset,
                    found: "\u{221a} without 2".into(),
                });
            }
            d if d.is_ascii_digit() => {
                let mut end_idx = idx;
                while bytes
                    .get(end_idx + 1)
                    .map(|&(_, c)| c.is_ascii_digit())
                    .unwrap_or(false)
                {
                    end_idx += 1;
                }
                let end = end_of(end_idx);
                let digits = &text[offset..end];
                tokens.push(Token {
                    kind: TokKind::Num(digits.parse().expect("digits")),
                    span: (offset, end),
                });
                idx = end_idx + 1;
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                let mut end_idx = idx;
                while bytes
                    .get(end_idx + 1)
                    .map(|&(_, c)| c.is_ascii_alphanumeric() || c == '_')
                    .unwrap_or(false)
                {
                    end_idx += 1;
                }
                let end = end_of(end_idx);
                let word = &text[offset..end];
                let kind = match word {
                    "i" => TokKind::Basis(1),
                    "j" => TokKind::Basis(2),
                    "k" => TokKind::Basis(3),
                    "sqrt2" => TokKind::Sqrt2,
                    _ => TokKind::Ident(word.to_string()),
                };
                tokens.push(Token {
                    kind,
                    span: (offset, end),
                });
                idx = end_idx + 1;
                continue;
            }
            other => {
                return Err(Error::Lex {
                    offset,
                    found: format!("{other:?}"),
                })
            }
        }
        idx += 1;
    }
    Ok(tokens)
}

/// Expression tree. Every node carries its byte span for diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ast {
    Lit(Quat),
    Neg(Box<Node>),
    Add(Box<Node>, Box<Node>),
    Sub(Box<Node>, Box<Node>),
    Mul(Box<Node>, Box<Node>),
    Div(Box<Node>, Box<Node>),
    Pow(Box<Node>, i64),
    Conj(Box<Node>),
    Jordan(Box<Node>, Box<Node>),
    Ratio(Box<Node>, Box<Node>),
    Phi(Box<Node>, Box<Node>),
    Lambda(Box<Node>),
    Cf(Box<Node>, Box<Node>, Box<Node>, Box<Node>),
}

#[derive(Debug, Clone, Eq)]
pub struct Node {
    pub ast: Ast,
    pub span: (usize, usize),
}

impl PartialEq for Node {
    /// Structural equality ignores spans.
    fn eq(&self, other: &Self) -> bool {
        self.ast == other.ast
    }
}

impl Node {
    pub fn new(ast: Ast, span: (usize, usize)) -> Self {
        Node { ast, span }
    }
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    input_len: usize,
}

fn starts_operand(kind: &TokKind) -> bool {
    matches!(
        kind,
        TokKind::Num(_)
            | TokKind::Basis(_)
            | TokKind::Sqrt2
            | TokKind::LParen
            | TokKind::LBrace
            | TokKind::Ident(_)
            | TokKind::Minus
    )
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn peek_kind(&self) -> Option<&TokKind> {
        self.peek().map(|t| &t.kind)
    }

    fn next_offset(&self) -> usize {
        self.peek().map(|t| t.span.0).unwrap_or(self.input_len)
    }

    fn bump(&mut self) -> Option<&Token> {
        let t = self.tokens.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, expected: &str) -> Error {
        Error::Parse {
            offset: self.next_offset(),
            expected: expected.to_string(),
        }
    }

    fn expect(&mut self, kind: &TokKind, expected: &str) -> Result<()> {
        match self.peek_kind() {
            Some(k) if k == kind => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.err(expected)),
        }
    }

    fn expr(&mut self) -> Result<Node> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek_kind() {
                Some(TokKind::Plus) => TokKind::Plus,
                Some(TokKind::Minus) => TokKind::Minus,
                _ => break,
            };
            self.pos += 1;
            let rhs = self.term()?;
            let span = (lhs.span.0, rhs.span.1);
            lhs = Node::new(
                match op {
                    TokKind::Plus => Ast::Add(lhs.into(), rhs.into()),
                    _ => Ast::Sub(lhs.into(), rhs.into()),
                },
                span,
            );
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Node> {
        let mut lhs = self.power()?;
        loop {
            match self.peek_kind() {
                Some(TokKind::Star) => {
                    // binary only when an operand follows the star
                    let after = self.tokens.get(self.pos + 1).map(|t| &t.kind);
                    if !after.map(starts_operand).unwrap_or(false) {
                        break;
                    }
                    self.pos += 1;
                    let rhs = self.power()?;
                    let span = (lhs.span.0, rhs.span.1);
                    lhs = Node::new(Ast::Mul(lhs.into(), rhs.into()), span);
                }
                Some(TokKind::Slash) => {
                    self.pos += 1;
                    let rhs = self.power()?;
                    let span = (lhs.span.0, rhs.span.1);
                    lhs = Node::new(Ast::Div(lhs.into(), rhs.into()), span);
                }
                _ => break,
            }
        }
        Ok(lhs)
    }

    fn power(&mut self) -> Result<Node> {
        let mut base = self.unary()?;
        while matches!(self.peek_kind(), Some(TokKind::Caret)) {
            self.pos += 1;
            let (exp, end) = self.exponent()?;
            let span = (base.span.0, end);
            base = Node::new(Ast::Pow(base.into(), exp), span);
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<(i64, usize)> {
        match self.peek_kind().cloned() {
            Some(TokKind::Num(n)) => {
                let t = self.bump().unwrap();
                let end = t.span.1;
                let exp = n
                    .to_i64()
                    .ok_or_else(|| Error::Parse {
                        offset: end,
                        expected: "a smaller exponent".into(),
                    })?;
                Ok((exp, end))
            }
            Some(TokKind::LParen) => {
                self.pos += 1;
                let negative = if matches!(self.peek_kind(), Some(TokKind::Minus)) {
                    self.pos += 1;
                    true
                } else {
                    false
                };
                let n = match self.peek_kind().cloned() {
                    Some(TokKind::Num(n)) => {
                        self.pos += 1;
                        n
                    }
                    _ => return Err(self.err("an integer exponent")),
                };
                let end = self.next_offset();
                self.expect(&TokKind::RParen, "')'")?;
                let exp = n
                    .to_i64()
                    .ok_or_else(|| Error::Parse {
                        offset: end,
                        expected: "a smaller exponent".into(),
                    })?;
                Ok((if negative { -exp } else { exp }, end + 1))
            }
            _ => Err(self.err("an integer exponent (negative exponents need parentheses)")),
        }
    }

    fn unary(&mut self) -> Result<Node> {
        if matches!(self.peek_kind(), Some(TokKind::Minus)) {
            let start = self.next_offset();
            self.pos += 1;
            let inner = self.unary()?;
            let span = (start, inner.span.1);
            return Ok(Node::new(Ast::Neg(inner.into()), span));
        }
        self.postfix()
    }

    fn postfix(&mut self) -> Result<Node> {
        let mut node = self.primary()?;
        while matches!(self.peek_kind(), Some(TokKind::Star)) {
            let after = self.tokens.get(self.pos + 1).map(|t| &t.kind);
            if after.map(starts_operand).unwrap_or(false) {
                break; // binary multiplication, handled by term()
            }
            let star = self.bump().unwrap();
            let span = (node.span.0, star.span.1);
            node = Node::new(Ast::Conj(node.into()), span);
        }
        Ok(node)
    }

    fn primary(&mut self) -> Result<Node> {
        let token = match self.peek() {
            Some(t) => t.clone(),
            None => return Err(self.err("an expression")),
        };
        match token.kind {
            TokKind::Num(ref n) => {
                self.pos += 1;
                let rat = Rat::from_bigs(n.clone(), BigInt::from(1)).expect("den 1");
                Ok(Node::new(
                    Ast::Lit(Quat::scalar(ScalarQ::from_rat(rat))),
                    token.span,
                ))
            }
            TokKind::Basis(idx) => {
                self.pos += 1;
                Ok(Node::new(Ast::Lit(Quat::basis(idx as usize)), token.span))
            }
            TokKind::Sqrt2 => {
                self.pos += 1;
                Ok(Node::new(
                    Ast::Lit(Quat::scalar(ScalarQ::sqrt2())),
                    token.span,
                ))
            }
            TokKind::LParen => {
                self.pos += 1;
                let inner = self.expr()?;
                let end = self.next_offset();
                self.expect(&TokKind::RParen, "')'")?;
                Ok(Node::new(inner.ast, (token.span.0, end + 1)))
            }
            TokKind::LBrace => {
                self.pos += 1;
                let left = self.expr()?;
                let ratio = match self.peek_kind() {
                    Some(TokKind::Colon) => true,
                    Some(TokKind::Comma) => false,
                    _ => return Err(self.err("':' or ',' inside braces")),
                };
                self.pos += 1;
                let right = self.expr()?;
                let end = self.next_offset();
                self.expect(&TokKind::RBrace, "'}'")?;
                let span = (token.span.0, end + 1);
                Ok(Node::new(
                    if ratio {
                        Ast::Ratio(left.into(), right.into())
                    } else {
                        Ast::Jordan(left.into(), right.into())
                    },
                    span,
                ))
            }
            TokKind::Ident(ref name) => {
                self.pos += 1;
                let arity = match name.as_str() {
                    "phi" => 2,
                    "lambda" => 1,
                    "cf" => 4,
                    "ldiv" => 2,
                    _ => {
                        return Err(Error::Parse {
                            offset: token.span.0,
                            expected: "one of phi, lambda, cf, ldiv".into(),
                        })
                    }
                };
                self.expect(&TokKind::LParen, "'('")?;
                let mut args = vec![self.expr()?];
                while matches!(self.peek_kind(), Some(TokKind::Comma)) {
                    self.pos += 1;
                    args.push(self.expr()?);
                }
                let end = self.next_offset();
                self.expect(&TokKind::RParen, "')'")?;
                if args.len() != arity {
                    return Err(Error::Parse {
                        offset: token.span.0,
                        expected: format!("{arity} argument(s) to {name}"),
                    });
                }
                let span = (token.span.0, end + 1);
                let mut it = args.into_iter();
                let ast = match name.as_str() {
                    "phi" => Ast::Phi(it.next().unwrap().into(), it.next().unwrap().into()),
                    "lambda" => Ast::Lambda(it.next().unwrap().into()),
                    "cf" => Ast::Cf(
                        it.next().unwrap().into(),
                        it.next().unwrap().into(),
                        it.next().unwrap().into(),
                        it.next().unwrap().into(),
                    ),
                    // left fraction v^(-1) * u
                    "ldiv" => {
                        let u: Box<Node> = it.next().unwrap().into();
                        let v: Box<Node> = it.next().unwrap().into();
                        let vspan = v.span;
                        Ast::Mul(Box::new(Node::new(Ast::Pow(v, -1), vspan)), u)
                    }
                    _ => unreachable!(),
                };
                Ok(Node::new(ast, span))
            }
            _ => Err(self.err("an expression")),
        }
    }
}

/// Parses a whole expression; trailing tokens are an error.
pub fn parse(text: &str) -> Result<Node> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens: &tokens,
        pos: 0,
        input_len: text.len(),
    };
    let node = parser.expr()?;
    if parser.pos != tokens.len() {
        return Err(parser.err("end of input"));
    }
    Ok(node)
}

/// Result of evaluating an expression: a quaternion value, or the
/// canonical-formula verdict with both sides as diagnostics.
#[derive(Debug, Clone)]
pub enum EvalValue {
    Value(Quat),
    Cf(CfOutcome),
}

fn positioned(err: Error, span: (usize, usize)) -> Error {
    match err {
        Error::Eval { .. } => err,
        other => Error::Eval {
            offset: span.0,
            msg: other.to_string(),
        },
    }
}

fn eval_quat(node: &Node, convention: RatioConvention) -> Result<Quat> {
    match eval(node, convention)? {
        EvalValue::Value(q) => Ok(q),
        EvalValue::Cf(_) => Err(Error::Eval {
            offset: node.span.0,
            msg: "cf(...) yields a verdict, not a value".into(),
        }),
    }
}

/// Exact evaluation. Phi and cf arguments must be elements of Q.
pub fn eval(node: &Node, convention: RatioConvention) -> Result<EvalValue> {
    let value = |q: Quat| Ok(EvalValue::Value(q));
    match &node.ast {
        Ast::Lit(q) => value(q.clone()),
        Ast::Neg(x) => value(-&eval_quat(x, convention)?),
        Ast::Add(x, y) => value(&eval_quat(x, convention)? + &eval_quat(y, convention)?),
        Ast::Sub(x, y) => value(&eval_quat(x, convention)? - &eval_quat(y, convention)?),
        Ast::Mul(x, y) => value(eval_quat(x, convention)?.mul(&eval_quat(y, convention)?)),
        Ast::Div(x, y) => {
            let num = eval_quat(x, convention)?;
            let den = eval_quat(y, convention)?;
            let inv = den.inv().map_err(|e| positioned(e, y.span))?;
            value(num.mul(&inv))
        }
        Ast::Pow(x, exp) => {
            let base = eval_quat(x, convention)?;
            value(base.pow(*exp).map_err(|e| positioned(e, node.span))?)
        }
        Ast::Conj(x) => value(eval_quat(x, convention)?.conj()),
        Ast::Jordan(x, y) => value(jordan_product(
            &eval_quat(x, convention)?,
            &eval_quat(y, convention)?,
        )),
        Ast::Ratio(x, y) => value(jordan_ratio(
            &eval_quat(x, convention)?,
            &eval_quat(y, convention)?,
            convention,
        )),
        Ast::Phi(x, a) => {
            let xv = eval_quat(x, convention)?;
            let av = eval_quat(a, convention)?;
            let valence = cf::phi(&xv, &av).map_err(|e| positioned(e, node.span))?;
            value(valence.value().clone())
        }
        Ast::Lambda(x) => value(cf::lambda_map(&eval_quat(x, convention)?)),
        Ast::Cf(x, a, y, b) => {
            let quad = CfQuadruple::new(
                eval_quat(x, convention)?,
                eval_quat(a, convention)?,
                eval_quat(y, convention)?,
                eval_quat(b, convention)?,
            )
            .map_err(|e| positioned(e, node.span))?;
            let outcome =
                cf::cf_check(&quad, convention).map_err(|e| positioned(e, node.span))?;
            Ok(EvalValue::Cf(outcome))
        }
    }
}

/// Convenience: parse then evaluate.
pub fn eval_str(text: &str, convention: RatioConvention) -> Result<EvalValue> {
    eval(&parse(text)?, convention)
}

fn is_atom(ast: &Ast) -> bool {
    matches!(
        ast,
        Ast::Lit(_)
            | Ast::Jordan(_, _)
            | Ast::Ratio(_, _)
            | Ast::Phi(_, _)
            | Ast::Lambda(_)
            | Ast::Cf(_, _, _, _)
    )
}

fn fmt_operand(node: &Node, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if is_atom(&node.ast) {
        write!(f, "{node}")
    } else {
        write!(f, "({node})")
    }
}

impl fmt::Display for Node {
    /// Canonical surface syntax that reparses to the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.ast {
            Ast::Lit(q) => {
                // parser literals are atoms: an integer, i, j, k, sqrt2
                f.write_str(&q.label())
            }
            Ast::Neg(x) => {
                f.write_str("-")?;
                fmt_operand(x, f)
            }
            Ast::Add(x, y) => {
                fmt_operand(x, f)?;
                f.write_str("+")?;
                fmt_operand(y, f)
            }
            Ast::Sub(x, y) => {
                fmt_operand(x, f)?;
                f.write_str("-")?;
                fmt_operand(y, f)
            }
            Ast::Mul(x, y) => {
                fmt_operand(x, f)?;
                f.write_str("*")?;
                fmt_operand(y, f)
            }
            Ast::Div(x, y) => {
                fmt_operand(x, f)?;
                f.write_str("/")?;
                fmt_operand(y, f)
            }
            Ast::Pow(x, exp) => {
                fmt_operand(x, f)?;
                if *exp < 0 {
                    write!(f, "^({exp})")
                } else {
                    write!(f, "^{exp}")
                }
            }
            Ast::Conj(x) => {
                fmt_operand(x, f)?;
                f.write_str("*")
            }
            Ast::Jordan(x, y) => write!(f, "{{{x}, {y}}}"),
            Ast::Ratio(x, y) => write!(f, "{{{x} : {y}}}"),
            Ast::Phi(x, a) => write!(f, "phi({x}, {a})"),
            Ast::Lambda(x) => write!(f, "lambda({x})"),
            Ast::Cf(x, a, y, b) => write!(f, "cf({x}, {a}, {y}, {b})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(text: &str) -> Quat {
        match eval_str(text, RatioConvention::Plain).unwrap() {
            EvalValue::Value(v) => v,
            EvalValue::Cf(_) => panic!("expected a value"),
        }
    }

    #[test]
    fn tokenize_examples() {
        let toks = tokenize("{1-i : j-k}").unwrap();
        let kinds: Vec<&TokKind> = toks.iter().map(|t| &t.kind).collect();
        assert!(matches!(kinds[0], TokKind::LBrace));
        assert!(matches!(kinds[1], TokKind::Num(_)));
        assert!(matches!(kinds[2], TokKind::Minus));
        assert!(matches!(kinds[3], TokKind::Basis(1)));
        assert!(matches!(kinds[4], TokKind::Colon));
        assert_eq!(toks.len(), 9);

        let toks = tokenize("phi(1,i)").unwrap();
        assert!(matches!(&toks[0].kind, TokKind::Ident(name) if name == "phi"));
        assert_eq!(toks.len(), 6);

        let err = tokenize("1 @ i").unwrap_err();
        assert_eq!(err, Error::Lex { offset: 2, found: "'@'".into() });
    }

    #[test]
    fn spans_tile_the_input() {
        let text = "phi(1, i) + {j : k}^2";
        let toks = tokenize(text).unwrap();
        for t in &toks {
            assert!(t.span.0 < t.span.1);
        }
        for pair in toks.windows(2) {
            assert!(pair[0].span.1 <= pair[1].span.0);
        }
    }

    #[test]
    fn parse_examples() {
        assert!(matches!(parse("{1:j}").unwrap().ast, Ast::Ratio(_, _)));
        assert!(matches!(parse("{1,j}").unwrap().ast, Ast::Jordan(_, _)));
        assert!(matches!(parse("cf(1,i,j,k)").unwrap().ast, Ast::Cf(_, _, _, _)));
        // negative exponents must be parenthesized
        let err = parse("2^-1/2*(1-i)").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
        assert!(parse("2^(-1)").is_ok());
        assert!(parse("phi(1)").is_err());
        assert!(parse("foo(1)").is_err());
        assert!(parse("1 +").is_err());
        assert!(parse("(1").is_err());
    }

    #[test]
    fn star_disambiguation() {
        // binary: i*j = k
        assert_eq!(q("i*j"), Quat::k());
        // postfix at end of input
        assert_eq!(q("i*"), -&Quat::i());
        // postfix then binary
        assert_eq!(q("(1+i)* * j"), (&Quat::one() - &Quat::i()).mul(&Quat::j()));
        // postfix before a closing brace
        assert_eq!(q("{1-i : (j-k)*}"), -&q("{1-i : j-k}"));
    }

    #[test]
    fn eval_examples() {
        let c = ScalarQ::inv_sqrt2();
        assert_eq!(q("phi(1,i)"), (&Quat::one() - &Quat::i()).scale(&c));
        assert_eq!(q("{1-i : j-k}"), &Quat::j() - &Quat::k());
        assert_eq!(q("lambda(j)"), -&Quat::i());
        assert_eq!(q("{i,j}"), Quat::zero());
        assert_eq!(q("2^(-1)"), Quat::scalar(ScalarQ::new(Rat::new(1, 2).unwrap(), Rat::zero())));
        assert_eq!(q("sqrt2*sqrt2"), Quat::scalar(ScalarQ::from_int(2)));
        assert_eq!(q("1/2 + i/2"), q("(1+i)/2"));
        // unary minus binds tighter than ^
        assert_eq!(q("-2^2"), Quat::scalar(ScalarQ::from_int(4)));
    }

    #[test]
    fn division_is_the_right_fraction() {
        // u/v = u v^{-1}; ldiv(u,v) = v^{-1} u; they differ for j/i
        let right = q("j/i");
        let left = q("ldiv(j,i)");
        assert_eq!(right, Quat::j().mul(&Quat::i().inv().unwrap()));
        assert_eq!(left, Quat::i().inv().unwrap().mul(&Quat::j()));
        assert_ne!(right, left);
    }

    #[test]
    fn eval_errors_carry_positions() {
        let err = eval_str("phi(1,1)", RatioConvention::Plain).unwrap_err();
        assert!(matches!(err, Error::Eval { .. }));
        let err = eval_str("1/0", RatioConvention::Plain).unwrap_err();
        match err {
            Error::Eval { offset, msg } => {
                assert_eq!(offset, 2);
                assert!(msg.contains("division by zero"));
            }
            other => panic!("unexpected {other:?}"),
        }
        let err = eval_str("phi(2,i)", RatioConvention::Plain).unwrap_err();
        match err {
            Error::Eval { msg, .. } => assert!(msg.contains("not an element of Q")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn cf_eval_reports_both_sides() {
        match eval_str("cf(1,i,j,k)", RatioConvention::Plain).unwrap() {
            EvalValue::Cf(outcome) => {
                assert!(outcome.holds);
                assert_eq!(outcome.lhs.label(), "(j-k)/2");
                assert_eq!(outcome.rhs.label(), "(-i-j)/2");
            }
            EvalValue::Value(_) => panic!("expected a cf verdict"),
        }
    }

    #[test]
    fn star_convention_matches_oracle() {
        // {u : v} under star equals {u, v*}
        let u = q("1+2i");
        let v = q("j-k");
        match eval_str("{1+2i : j-k}", RatioConvention::Star).unwrap() {
            EvalValue::Value(got) => {
                assert_eq!(got, jordan_product(&u, &v.conj()));
            }
            _ => unreachable!(),
        }
    }

    fn arb_node() -> impl Strategy<Value = Node> {
        let leaf = prop_oneof![
            (0i64..100).prop_map(|n| Node::new(
                Ast::Lit(Quat::scalar(ScalarQ::from_int(n))),
                (0, 0)
            )),
            (1usize..4).prop_map(|idx| Node::new(Ast::Lit(Quat::basis(idx)), (0, 0))),
            Just(Node::new(Ast::Lit(Quat::scalar(ScalarQ::sqrt2())), (0, 0))),
        ];
        leaf.prop_recursive(4, 48, 4, |inner| {
            prop_oneof![
                inner.clone().prop_map(|x| Node::new(Ast::Neg(x.into()), (0, 0))),
                inner.clone().prop_map(|x| Node::new(Ast::Conj(x.into()), (0, 0))),
                (inner.clone(), -6i64..7).prop_map(|(x, e)| Node::new(
                    Ast::Pow(x.into(), e),
                    (0, 0)
                )),
                (inner.clone(), inner.clone())
                    .prop_map(|(x, y)| Node::new(Ast::Add(x.into(), y.into()), (0, 0))),
                (inner.clone(), inner.clone())
                    .prop_map(|(x, y)| Node::new(Ast::Sub(x.into(), y.into()), (0, 0))),
                (inner.clone(), inner.clone())
                    .prop_map(|(x, y)| Node::new(Ast::Mul(x.into(), y.into()), (0, 0))),
                (inner.clone(), inner.clone())
                    .prop_map(|(x, y)| Node::new(Ast::Div(x.into(), y.into()), (0, 0))),
                (inner.clone(), inner.clone())
                    .prop_map(|(x, y)| Node::new(Ast::Jordan(x.into(), y.into()), (0, 0))),
                (inner.clone(), inner.clone())
                    .prop_map(|(x, y)| Node::new(Ast::Ratio(x.into(), y.into()), (0, 0))),
                (inner.clone(), inner.clone())
                    .prop_map(|(x, y)| Node::new(Ast::Phi(x.into(), y.into()), (0, 0))),
                inner
                    .clone()
                    .prop_map(|x| Node::new(Ast::Lambda(x.into()), (0, 0))),
            ]
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn format_reparses_to_same_tree(node in arb_node()) {
            let text = node.to_string();
            let reparsed = parse(&text).unwrap();
            prop_assert_eq!(reparsed, node);
        }

        #[test]
        fn no_panics_on_arbitrary_input(text in ".*") {
            let _ = eval_str(&text, RatioConvention::Plain);
            let _ = eval_str(&text, RatioConvention::Star);
        }

        #[test]
        fn star_ratio_oracle_random(an in -5i64..6, bn in -5i64..6, cn in -5i64..6, dn in -5i64..6) {
            let u = Quat::from_ints(an, bn, 1, 0);
            let v = Quat::from_ints(cn, dn, 0, 1);
            let text = format!("{{({an}) + ({bn})*i + j : ({cn}) + ({dn})*i + k}}");
            match eval_str(&text, RatioConvention::Star).unwrap() {
                EvalValue::Value(got) => {
                    prop_assert_eq!(got, jordan_product(&u, &v.conj()));
                }
                _ => unreachable!(),
            }
        }
    }
}
