//! Elements of `Cl^(1/m)_d` as dense complex coefficient vectors over the
//! monomial basis, together with every matrix-free operation on them.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::context::{AlgebraContext, ExponentTuple};
use crate::error::{Error, Result};
use crate::C64;

/// Default absolute tolerance for coefficientwise comparisons.
pub const DEFAULT_TOL: f64 = 1e-12;

/// `U = Σ_J u_J E_J`, stored as `coeffs[index(J)] = u_J`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraElement {
    ctx: AlgebraContext,
    coeffs: Vec<C64>,
}

impl AlgebraElement {
    pub fn zero(ctx: &AlgebraContext) -> Self {
        AlgebraElement {
            ctx: *ctx,
            coeffs: vec![C64::new(0.0, 0.0); ctx.dim()],
        }
    }

    /// `λ e`.
    pub fn scalar(ctx: &AlgebraContext, value: C64) -> Self {
        let mut out = Self::zero(ctx);
        out.coeffs[0] = value;
        out
    }

    /// The identity element `e`.
    pub fn identity(ctx: &AlgebraContext) -> Self {
        Self::scalar(ctx, C64::new(1.0, 0.0))
    }

    pub fn from_coefficients(ctx: &AlgebraContext, coeffs: Vec<C64>) -> Result<Self> {
        if coeffs.len() != ctx.dim() {
            return Err(Error::LengthMismatch {
                expected: ctx.dim(),
                got: coeffs.len(),
            });
        }
        Ok(AlgebraElement { ctx: *ctx, coeffs })
    }

    /// The basis monomial `E_J` with coefficient 1.
    pub fn basis_element(ctx: &AlgebraContext, j: &ExponentTuple) -> Self {
        let mut out = Self::zero(ctx);
        out.coeffs[j.index(ctx)] = C64::new(1.0, 0.0);
        out
    }

    /// The generator `e_k`, 1-based.
    pub fn generator(ctx: &AlgebraContext, k: u32) -> Result<Self> {
        Ok(Self::basis_element(ctx, &ExponentTuple::generator(ctx, k)?))
    }

    pub fn context(&self) -> &AlgebraContext {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C64> {
        self.coeffs
    }

    pub fn coefficient(&self, j: &ExponentTuple) -> C64 {
        self.coeffs[j.index(&self.ctx)]
    }

    /// `λ U + μ V`.
    pub fn linear_combine(lambda: C64, u: &Self, mu: C64, v: &Self) -> Result<Self> {
        u.ctx.check_same(&v.ctx)?;
        let coeffs = u
            .coeffs
            .iter()
            .zip(&v.coeffs)
            .map(|(a, b)| lambda * a + mu * b)
            .collect();
        Ok(AlgebraElement { ctx: u.ctx, coeffs })
    }

    pub fn scale(&self, lambda: C64) -> Self {
        self.map(|c| lambda * c)
    }

    /// `U + λ e`.
    pub fn add_scalar(&self, lambda: C64) -> Self {
        let mut out = self.clone();
        out.coeffs[0] += lambda;
        out
    }

    fn map(&self, f: impl Fn(C64) -> C64) -> Self {
        AlgebraElement {
            ctx: self.ctx,
            coeffs: self.coeffs.iter().map(|&c| f(c)).collect(),
        }
    }

    /// Algebra product `UV`.
    ///
    /// Runs over the nonzero coefficients of both factors; each pair of
    /// monomials contributes `ω^q u_J v_K` at `E_{(J+K) mod m}` where the
    /// phase exponent `q = -Σ_{a<b} j_b k_a` stays an integer mod `m` until
    /// the single lookup into the table of powers of `ω`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.ctx.check_same(&other.ctx)?;
        let ctx = &self.ctx;
        let m = ctx.m() as usize;
        let d = ctx.d() as usize;
        let powers: Vec<C64> = (0..m as i64).map(|k| ctx.omega_pow(k)).collect();
        let place: Vec<usize> = (0..d).map(|a| m.pow((d - 1 - a) as u32)).collect();

        // Right factor support: digits and prefix sums Σ_{a<b} k_a (mod m).
        let mut rhs_digits = Vec::new();
        let mut rhs_prefix = Vec::new();
        let mut rhs_vals = Vec::new();
        let mut digits = vec![0u32; d];
        for (idx, &v) in other.coeffs.iter().enumerate() {
            if v == C64::new(0.0, 0.0) {
                continue;
            }
            ctx.decode_into(idx, &mut digits);
            let mut prefix = 0usize;
            for &k in &digits {
                rhs_prefix.push(prefix);
                prefix = (prefix + k as usize) % m;
            }
            rhs_digits.extend(digits.iter().map(|&k| k as usize));
            rhs_vals.push(v);
        }

        let mut out = vec![C64::new(0.0, 0.0); ctx.dim()];
        let mut jd = vec![0u32; d];
        for (idx, &u) in self.coeffs.iter().enumerate() {
            if u == C64::new(0.0, 0.0) {
                continue;
            }
            ctx.decode_into(idx, &mut jd);
            for (s, &v) in rhs_vals.iter().enumerate() {
                let kd = &rhs_digits[s * d..(s + 1) * d];
                let kp = &rhs_prefix[s * d..(s + 1) * d];
                let mut acc = 0usize;
                let mut target = 0usize;
                for a in 0..d {
                    let j = jd[a] as usize;
                    acc += j * kp[a];
                    let sum = j + kd[a];
                    target += if sum >= m { sum - m } else { sum } * place[a];
                }
                let phase = (m - acc % m) % m;
                out[target] += powers[phase] * (u * v);
            }
        }
        Ok(AlgebraElement {
            ctx: self.ctx,
            coeffs: out,
        })
    }

    /// `U^k` by repeated squaring; `U^0 = e`.
    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(&self.ctx);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `⟨U⟩_0 = u_{0...0}`.
    pub fn scalar_part(&self) -> C64 {
        self.coeffs[0]
    }

    /// `⟨U⟩_k`: keeps the monomials with exponent sum `k`.
    pub fn grade_project(&self, k: i64) -> Result<Self> {
        let max = self.ctx.max_grade();
        if k < 0 || k > max as i64 {
            return Err(Error::GradeOutOfRange { grade: k, max });
        }
        Ok(self.filter(|g| g as i64 == k))
    }

    /// Projection onto the grades congruent to `r` mod `m`.
    pub fn mod_grade_project(&self, r: i64) -> Result<Self> {
        let m = self.ctx.m();
        if r < 0 || r >= m as i64 {
            return Err(Error::ResidueOutOfRange { residue: r, m });
        }
        Ok(self.filter(|g| (g % m) as i64 == r))
    }

    fn filter(&self, keep: impl Fn(u32) -> bool) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                if keep(self.ctx.grade_of_index(i)) {
                    c
                } else {
                    C64::new(0.0, 0.0)
                }
            })
            .collect();
        AlgebraElement {
            ctx: self.ctx,
            coeffs,
        }
    }

    /// Grade automorphism `Σ_k ω^k ⟨U⟩_k`, applied `times` times.
    pub fn grade_automorphism(&self, times: u32) -> Self {
        let m = self.ctx.m() as u64;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                let g = self.ctx.grade_of_index(i) as u64;
                c * self.ctx.omega_pow(((g * times as u64) % m) as i64)
            })
            .collect();
        AlgebraElement {
            ctx: self.ctx,
            coeffs,
        }
    }

    /// Hermitian conjugation: conjugate every coefficient and replace every
    /// monomial by its inverse.
    pub fn hermitian_conjugate(&self) -> Self {
        let ctx = &self.ctx;
        let mut out = vec![C64::new(0.0, 0.0); ctx.dim()];
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == C64::new(0.0, 0.0) {
                continue;
            }
            let inv = ctx.monomial_inverse(&ExponentTuple::from_index(ctx, i));
            out[inv.exponents.index(ctx)] += c.conj() * ctx.omega_pow(inv.phase as i64);
        }
        AlgebraElement {
            ctx: self.ctx,
            coeffs: out,
        }
    }

    /// `2⟨U⟩_0 - U`: flips the sign of every non-scalar grade.
    pub fn underline(&self) -> Self {
        let mut out = -self;
        out.coeffs[0] = self.coeffs[0];
        out
    }

    /// `U·V = ⟨Ū V⟩_0 = Σ_J conj(u_J) v_J`.
    pub fn inner_product(&self, other: &Self) -> Result<C64> {
        self.ctx.check_same(&other.ctx)?;
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// `‖U‖ = sqrt(U·U)`, the Euclidean norm of the coefficients.
    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest coefficient modulus.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Coefficientwise comparison with absolute tolerance.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.ctx == other.ctx
            && self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .all(|(a, b)| (a - b).norm() <= tol)
    }

    /// `‖U - ⟨U⟩_0 e‖`.
    pub fn non_scalar_norm(&self) -> f64 {
        self.coeffs[1..].iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Nonzero terms in linear-index order.
    pub fn terms(&self) -> impl Iterator<Item = (ExponentTuple, C64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != C64::new(0.0, 0.0))
            .map(|(i, &c)| (ExponentTuple::from_index(&self.ctx, i), c))
    }

    pub fn to_json_value(&self) -> ElementJson {
        ElementJson {
            m: self.ctx.m(),
            d: self.ctx.d(),
            coeffs: self.coeffs.iter().map(|c| [c.re, c.im]).collect(),
        }
    }

    /// `{"m":..,"d":..,"coeffs":[[re,im],...]}` in linear-index order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("finite coefficients serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: ElementJson = serde_json::from_str(text)?;
        Self::from_json_value(raw)
    }

    pub fn from_json_value(raw: ElementJson) -> Result<Self> {
        let ctx = AlgebraContext::new(raw.m, raw.d)?;
        let coeffs = raw.coeffs.iter().map(|&[re, im]| C64::new(re, im)).collect();
        Self::from_coefficients(&ctx, coeffs)
    }
}

/// Serialized element form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ElementJson {
    pub m: u32,
    pub d: u32,
    pub coeffs: Vec<[f64; 2]>,
}

/// Formats `x` with 12 significant digits, trimming trailing zeros.
pub(crate) fn format_real(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let rounded: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    let a = rounded.abs();
    if (1e-4..1e15).contains(&a) {
        format!("{rounded}")
    } else {
        format!("{rounded:e}")
    }
}

pub(crate) fn format_complex(c: C64) -> String {
    let im = format_real(c.im.abs());
    let sign = if c.im.is_sign_negative() && c.im != 0.0 { '-' } else { '+' };
    format!("{}{}{}i", format_real(c.re), sign, im)
}

impl fmt::Display for AlgebraElement {
    /// Canonical text: `(a+bi)*E_J` terms in linear-index order joined by
    /// ` + `, or `0` for the zero element. The output parses back through
    /// the expression language.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({})", format_complex(c))?;
            if !j.is_zero() {
                write!(f, "*{j}")?;
            } else {
                f.write_str("*e")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

// Operator sugar for formula-heavy code. These panic on context mismatch;
// use `multiply` / `linear_combine` for the fallible forms.

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::linear_combine(C64::new(1.0, 0.0), self, C64::new(1.0, 0.0), rhs)
            .expect("context mismatch in +")
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::linear_combine(C64::new(1.0, 0.0), self, C64::new(-1.0, 0.0), rhs)
            .expect("context mismatch in -")
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.multiply(rhs).expect("context mismatch in *")
    }
}

impl Mul<C64> for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: C64) -> AlgebraElement {
        self.scale(rhs)
    }
}

impl Mul<f64> for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: f64) -> AlgebraElement {
        self.map(|c| c * rhs)
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.map(|c| -c)
    }
}

impl Add for AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: AlgebraElement) -> AlgebraElement {
        &self + &rhs
    }
}

impl Sub for AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: AlgebraElement) -> AlgebraElement {
        &self - &rhs
    }
}

impl Mul for AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: AlgebraElement) -> AlgebraElement {
        &self * &rhs
    }
}

impl Mul<f64> for AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: f64) -> AlgebraElement {
        &self * rhs
    }
}
