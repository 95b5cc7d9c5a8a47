use super::lexer::{tokenize, Token, TokenKind};
use super::{ExprError, ExprErrorKind, MAX_DEPTH};
use crate::context::AlgebraContext;
use crate::C64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Function {
    Herm,
    Inv,
    Adj,
    Det,
    Trace,
    Norm,
    Underline,
    Grade,
    ModGrade,
    Auto,
    CharPoly,
    Rep,
}

impl Function {
    pub const ALL: [Function; 12] = [
        Function::Herm,
        Function::Inv,
        Function::Adj,
        Function::Det,
        Function::Trace,
        Function::Norm,
        Function::Underline,
        Function::Grade,
        Function::ModGrade,
        Function::Auto,
        Function::CharPoly,
        Function::Rep,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Function::Herm => "herm",
            Function::Inv => "inv",
            Function::Adj => "adj",
            Function::Det => "det",
            Function::Trace => "trace",
            Function::Norm => "norm",
            Function::Underline => "underline",
            Function::Grade => "grade",
            Function::ModGrade => "modgrade",
            Function::Auto => "auto",
            Function::CharPoly => "charpoly",
            Function::Rep => "rep",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Function::Grade | Function::ModGrade | Function::Auto => 2,
            _ => 1,
        }
    }

    pub fn from_name(name: &str) -> Option<Function> {
        Function::ALL.into_iter().find(|f| f.name() == name)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum AstKind {
    Scalar(C64),
    /// Generator `e_k`; `0` is the identity `e`.
    Generator(u32),
    Binary(BinOp, Box<AstNode>, Box<AstNode>),
    Power(Box<AstNode>, u32),
    Neg(Box<AstNode>),
    Call(Function, Vec<AstNode>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct AstNode {
    pub kind: AstKind,
    /// Byte offset of the token that introduced this node.
    pub pos: usize,
}

// Left-associative chains can be arbitrarily long, so tear trees down
// iteratively instead of through recursive drop glue.
impl Drop for AstNode {
    fn drop(&mut self) {
        let mut stack = Vec::new();
        take_children(&mut self.kind, &mut stack);
        while let Some(mut node) = stack.pop() {
            take_children(&mut node.kind, &mut stack);
        }
    }
}

fn take_children(kind: &mut AstKind, stack: &mut Vec<AstNode>) {
    match std::mem::replace(kind, AstKind::Generator(0)) {
        AstKind::Binary(_, a, b) => {
            stack.push(*a);
            stack.push(*b);
        }
        AstKind::Power(a, _) | AstKind::Neg(a) => stack.push(*a),
        AstKind::Call(_, args) => stack.extend(args),
        AstKind::Scalar(_) | AstKind::Generator(_) => {}
    }
}

/// Parses `input`, checking generator subscripts against `ctx`.
pub fn parse(input: &str, ctx: &AlgebraContext) -> Result<AstNode, ExprError> {
    let tokens = tokenize(input)?;
    let mut p = Parser {
        tokens,
        at: 0,
        depth: 0,
        end: input.len(),
        ctx,
    };
    let ast = p.expr()?;
    if let Some(t) = p.peek() {
        return Err(p.unexpected(t));
    }
    Ok(ast)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    at: usize,
    depth: usize,
    end: usize,
    ctx: &'a AlgebraContext,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at)
    }

    fn next(&mut self) -> Result<Token, ExprError> {
        let t = self.tokens.get(self.at).cloned().ok_or_else(|| {
            ExprError::new(ExprErrorKind::Parse, self.end, "unexpected end of input")
        })?;
        self.at += 1;
        Ok(t)
    }

    fn eat_operator(&mut self, ops: &[char]) -> Option<(char, usize)> {
        match self.peek() {
            Some(Token { kind: TokenKind::Operator(c), pos, .. }) if ops.contains(c) => {
                let out = (*c, *pos);
                self.at += 1;
                Some(out)
            }
            _ => None,
        }
    }

    fn unexpected(&self, t: &Token) -> ExprError {
        ExprError::new(ExprErrorKind::Parse, t.pos, format!("unexpected '{}'", t.lexeme))
    }

    fn enter(&mut self, pos: usize) -> Result<(), ExprError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(ExprError::new(ExprErrorKind::Parse, pos, "expression nested too deeply"));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<AstNode, ExprError> {
        let mut lhs = self.term()?;
        while let Some((c, pos)) = self.eat_operator(&['+', '-']) {
            let rhs = self.term()?;
            let op = if c == '+' { BinOp::Add } else { BinOp::Sub };
            lhs = AstNode {
                kind: AstKind::Binary(op, Box::new(lhs), Box::new(rhs)),
                pos,
            };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<AstNode, ExprError> {
        let mut lhs = self.unary()?;
        while let Some((_, pos)) = self.eat_operator(&['*']) {
            let rhs = self.unary()?;
            lhs = AstNode {
                kind: AstKind::Binary(BinOp::Mul, Box::new(lhs), Box::new(rhs)),
                pos,
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<AstNode, ExprError> {
        if let Some((_, pos)) = self.eat_operator(&['-']) {
            self.enter(pos)?;
            let operand = self.unary()?;
            self.depth -= 1;
            return Ok(AstNode {
                kind: AstKind::Neg(Box::new(operand)),
                pos,
            });
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<AstNode, ExprError> {
        let mut base = self.atom()?;
        while let Some((_, pos)) = self.eat_operator(&['^']) {
            let t = self.next()?;
            let exp = match t.kind {
                TokenKind::Number(_) if t.lexeme.bytes().all(|b| b.is_ascii_digit()) => {
                    t.lexeme.parse::<u32>().map_err(|_| {
                        ExprError::new(ExprErrorKind::Parse, t.pos, "exponent too large")
                    })?
                }
                _ => {
                    return Err(ExprError::new(
                        ExprErrorKind::Parse,
                        t.pos,
                        format!("exponent must be a non-negative integer, found '{}'", t.lexeme),
                    ))
                }
            };
            base = AstNode {
                kind: AstKind::Power(Box::new(base), exp),
                pos,
            };
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<AstNode, ExprError> {
        let t = self.next()?;
        let pos = t.pos;
        let kind = match t.kind {
            TokenKind::Number(x) => AstKind::Scalar(C64::new(x, 0.0)),
            TokenKind::Imaginary(x) => AstKind::Scalar(C64::new(0.0, x)),
            TokenKind::Omega => AstKind::Scalar(self.ctx.omega()),
            TokenKind::Generator(k) => {
                if k > self.ctx.d() {
                    return Err(ExprError::new(
                        ExprErrorKind::GeneratorRange,
                        pos,
                        format!("generator e{k} out of range for {}", self.ctx),
                    ));
                }
                AstKind::Generator(k)
            }
            TokenKind::LParen => {
                self.enter(pos)?;
                let inner = self.expr()?;
                self.depth -= 1;
                self.expect_rparen()?;
                return Ok(inner);
            }
            TokenKind::Identifier(name) => {
                let func = Function::from_name(&name).ok_or_else(|| {
                    ExprError::new(ExprErrorKind::UnknownFunction, pos, format!("unknown function '{name}'"))
                })?;
                match self.next()? {
                    Token { kind: TokenKind::LParen, .. } => {}
                    other => return Err(self.unexpected(&other)),
                }
                self.enter(pos)?;
                let mut args = vec![self.expr()?];
                while matches!(self.peek(), Some(Token { kind: TokenKind::Comma, .. })) {
                    self.at += 1;
                    args.push(self.expr()?);
                }
                self.depth -= 1;
                self.expect_rparen()?;
                if args.len() != func.arity() {
                    return Err(ExprError::new(
                        ExprErrorKind::Arity,
                        pos,
                        format!("{} takes {} argument(s), got {}", func.name(), func.arity(), args.len()),
                    ));
                }
                AstKind::Call(func, args)
            }
            _ => return Err(self.unexpected(&t)),
        };
        Ok(AstNode { kind, pos })
    }

    fn expect_rparen(&mut self) -> Result<(), ExprError> {
        match self.next()? {
            Token { kind: TokenKind::RParen, .. } => Ok(()),
            other => Err(self.unexpected(&other)),
        }
    }
}
