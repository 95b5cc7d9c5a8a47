use std::fmt;

use serde_json::json;

use super::parser::{AstKind, AstNode, BinOp, Function};
use super::{ExprError, ExprErrorKind};
use crate::context::AlgebraContext;
use crate::element::{format_complex, AlgebraElement};
use crate::matrix::ComplexMatrix;
use crate::rep::GeneratorSet;
use crate::spectral::{self, CharPolyResult};
use crate::C64;

/// Result of evaluating an expression.
#[derive(Debug, Clone)]
pub enum Value {
    Element(AlgebraElement),
    Scalar(C64),
    Matrix(ComplexMatrix),
    CharPoly(CharPolyResult),
}

impl Value {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Value::Element(_) => "element",
            Value::Scalar(_) => "scalar",
            Value::Matrix(_) => "matrix",
            Value::CharPoly(_) => "charpoly",
        }
    }

    /// Element, matrix and charpoly values use their own JSON forms; a
    /// scalar is `{"scalar":[re,im]}`.
    pub fn to_json_value(&self) -> serde_json::Value {
        let v = match self {
            Value::Element(u) => serde_json::to_value(u.to_json_value()),
            Value::Scalar(c) => Ok(json!({ "scalar": [c.re, c.im] })),
            Value::Matrix(a) => serde_json::to_value(a.to_json_value()),
            Value::CharPoly(p) => serde_json::to_value(p.to_json_value()),
        };
        v.unwrap_or(serde_json::Value::Null)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Element(u) => write!(f, "{u}"),
            Value::Scalar(c) => f.write_str(&format_complex(*c)),
            Value::Matrix(a) => {
                for i in 0..a.rows() {
                    if i > 0 {
                        f.write_str("\n")?;
                    }
                    let row: Vec<String> = (0..a.cols()).map(|j| format_complex(a.get(i, j))).collect();
                    write!(f, "[{}]", row.join(", "))?;
                }
                Ok(())
            }
            Value::CharPoly(p) => {
                write!(f, "N = {}", p.coefficients().len())?;
                for (k, c) in p.coefficients().iter().enumerate() {
                    write!(f, "\nC{} = {}", k + 1, format_complex(*c))?;
                }
                write!(f, "\nDet = {}", format_complex(p.determinant()))
            }
        }
    }
}

pub fn evaluate(ast: &AstNode, ctx: &AlgebraContext) -> Result<Value, ExprError> {
    Evaluator { ctx }.eval(ast)
}

struct Evaluator<'a> {
    ctx: &'a AlgebraContext,
}

fn eval_err(pos: usize, e: crate::Error) -> ExprError {
    ExprError::new(ExprErrorKind::Eval, pos, e.to_string())
}

impl Evaluator<'_> {
    fn eval(&self, node: &AstNode) -> Result<Value, ExprError> {
        match &node.kind {
            AstKind::Scalar(c) => Ok(Value::Scalar(*c)),
            AstKind::Generator(0) => Ok(Value::Element(AlgebraElement::identity(self.ctx))),
            AstKind::Generator(k) => AlgebraElement::generator(self.ctx, *k)
                .map(Value::Element)
                .map_err(|e| eval_err(node.pos, e)),
            AstKind::Neg(a) => match self.eval(a)? {
                Value::Scalar(c) => Ok(Value::Scalar(-c)),
                Value::Element(u) => Ok(Value::Element(-&u)),
                other => Err(type_err(node.pos, "negate", &other)),
            },
            AstKind::Call(func, args) => self.call(*func, args, node.pos),
            AstKind::Binary(..) | AstKind::Power(..) => self.chain(node),
        }
    }

    /// Walks a left spine of binary operators and powers iteratively so
    /// long sums do not cost stack depth.
    fn chain(&self, node: &AstNode) -> Result<Value, ExprError> {
        let mut spine = Vec::new();
        let mut cur = node;
        while let AstKind::Binary(_, lhs, _) | AstKind::Power(lhs, _) = &cur.kind {
            spine.push(cur);
            cur = lhs;
        }
        let mut acc = self.eval(cur)?;
        for n in spine.into_iter().rev() {
            acc = match &n.kind {
                AstKind::Binary(op, _, rhs) => self.binary(*op, acc, self.eval(rhs)?, n.pos)?,
                AstKind::Power(_, k) => match acc {
                    Value::Scalar(c) => Value::Scalar(c.powu(*k)),
                    Value::Element(u) => Value::Element(u.pow(*k)),
                    other => return Err(type_err(n.pos, "raise to a power", &other)),
                },
                _ => unreachable!("spine holds only binary and power nodes"),
            };
        }
        Ok(acc)
    }

    fn binary(&self, op: BinOp, a: Value, b: Value, pos: usize) -> Result<Value, ExprError> {
        if let (Value::Scalar(x), Value::Scalar(y)) = (&a, &b) {
            return Ok(Value::Scalar(match op {
                BinOp::Add => x + y,
                BinOp::Sub => x - y,
                BinOp::Mul => x * y,
            }));
        }
        let verb = match op {
            BinOp::Add => "add",
            BinOp::Sub => "subtract",
            BinOp::Mul => "multiply",
        };
        let u = self.element(a, pos, verb)?;
        let v = self.element(b, pos, verb)?;
        let one = C64::new(1.0, 0.0);
        let out = match op {
            BinOp::Add => AlgebraElement::linear_combine(one, &u, one, &v),
            BinOp::Sub => AlgebraElement::linear_combine(one, &u, -one, &v),
            BinOp::Mul => u.multiply(&v),
        };
        out.map(Value::Element).map_err(|e| eval_err(pos, e))
    }

    fn element(&self, v: Value, pos: usize, verb: &str) -> Result<AlgebraElement, ExprError> {
        match v {
            Value::Element(u) => Ok(u),
            Value::Scalar(c) => Ok(AlgebraElement::scalar(self.ctx, c)),
            other => Err(type_err(pos, verb, &other)),
        }
    }

    fn integer_arg(&self, node: &AstNode, func: Function) -> Result<i64, ExprError> {
        match self.eval(node)? {
            Value::Scalar(c) if c.im == 0.0 && c.re.fract() == 0.0 && c.re.abs() < 1e15 => Ok(c.re as i64),
            other => Err(ExprError::new(
                ExprErrorKind::Type,
                node.pos,
                format!("second argument of {} must be an integer, got {}", func.name(), other.kind_name()),
            )),
        }
    }

    fn call(&self, func: Function, args: &[AstNode], pos: usize) -> Result<Value, ExprError> {
        let first = self.eval(&args[0])?;
        let u = self.element(first, args[0].pos, func.name())?;
        let err = |e| eval_err(pos, e);
        Ok(match func {
            Function::Herm => Value::Element(u.hermitian_conjugate()),
            Function::Inv => Value::Element(spectral::inverse(&u).map_err(err)?),
            Function::Adj => Value::Element(spectral::adjugate(&u).map_err(err)?),
            Function::Det => Value::Scalar(spectral::determinant(&u)),
            Function::Trace => Value::Scalar(spectral::trace(&u)),
            Function::Norm => Value::Scalar(C64::new(u.norm(), 0.0)),
            Function::Underline => Value::Element(u.underline()),
            Function::Grade => {
                let k = self.integer_arg(&args[1], func)?;
                Value::Element(u.grade_project(k).map_err(err)?)
            }
            Function::ModGrade => {
                let r = self.integer_arg(&args[1], func)?;
                Value::Element(u.mod_grade_project(r).map_err(err)?)
            }
            Function::Auto => {
                let k = self.integer_arg(&args[1], func)?;
                let times = k.rem_euclid(self.ctx.m() as i64) as u32;
                Value::Element(u.grade_automorphism(times))
            }
            Function::CharPoly => Value::CharPoly(spectral::faddeev_leverrier(&u)),
            Function::Rep => {
                let gens = GeneratorSet::new(self.ctx).map_err(err)?;
                Value::Matrix(gens.represent(&u).map_err(err)?)
            }
        })
    }
}

fn type_err(pos: usize, verb: &str, v: &Value) -> ExprError {
    ExprError::new(ExprErrorKind::Type, pos, format!("cannot {verb} a {}", v.kind_name()))
}
