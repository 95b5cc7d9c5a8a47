//! Trace, characteristic polynomial, determinant, adjugate and inverse,
//! computed entirely inside the algebra.
//!
//! The characteristic polynomial is written `φ_U(λ) = λ^N - C_1 λ^{N-1} - ...
//! - C_N`. The Faddeev–LeVerrier recursion
//!
//! ```text
//! U_1 = U,   C_k = (N/k) ⟨U_k⟩_0,   U_{k+1} = U (U_k - C_k e)
//! ```
//!
//! needs only products and scalar parts because `tr β(U) = N ⟨U⟩_0`. With
//! this sign convention `Det(U) = (-1)^{N+1} C_N` and
//! `Adj(U) = (-1)^{N+1} (U_{N-1} - C_{N-1} e)`.

use log::warn;
use serde::Serialize;

use crate::context::AlgebraContext;
use crate::dd::{self, DdComplex};
use crate::element::AlgebraElement;
use crate::error::{Error, Result};
use crate::C64;

/// Norm above which the recursion's iterates may overflow.
pub const SCALING_WARN_NORM: f64 = 1e3;

/// `tr β(U) = N ⟨U⟩_0`.
pub fn trace(u: &AlgebraElement) -> C64 {
    u.scalar_part() * u.context().rep_size() as f64
}

/// Output of [`faddeev_leverrier`].
#[derive(Debug, Clone)]
pub struct CharPolyResult {
    ctx: AlgebraContext,
    coefficients: Vec<C64>,
    penultimate: AlgebraElement,
    last: AlgebraElement,
    /// `U_{N-1} - C_{N-1} e` rounded once from the extended-precision
    /// iterate (`e` when `N = 1`).
    shifted_penultimate: AlgebraElement,
}

impl CharPolyResult {
    pub fn context(&self) -> &AlgebraContext {
        &self.ctx
    }

    /// `C_1, ..., C_N`.
    pub fn coefficients(&self) -> &[C64] {
        &self.coefficients
    }

    /// `C_k`, 1-based.
    pub fn coefficient(&self, k: usize) -> C64 {
        self.coefficients[k - 1]
    }

    /// `U_{N-1}`.
    pub fn penultimate_iterate(&self) -> &AlgebraElement {
        &self.penultimate
    }

    /// `U_N`, a scalar multiple of `e` by Cayley–Hamilton.
    pub fn last_iterate(&self) -> &AlgebraElement {
        &self.last
    }

    fn sign(&self) -> f64 {
        if self.coefficients.len() % 2 == 1 {
            1.0
        } else {
            -1.0
        }
    }

    pub fn determinant(&self) -> C64 {
        let det = self.coefficient(self.coefficients.len()) * self.sign();
        // adding +0.0 turns a negated zero into +0.0 for stable output
        C64::new(det.re + 0.0, det.im + 0.0)
    }

    pub fn adjugate(&self) -> AlgebraElement {
        self.shifted_penultimate.scale(C64::new(self.sign(), 0.0))
    }

    /// `λ^N - Σ_k C_k λ^{N-k}` by Horner's rule.
    pub fn eval(&self, lambda: C64) -> C64 {
        self.coefficients
            .iter()
            .fold(C64::new(1.0, 0.0), |acc, c| acc * lambda - c)
    }

    pub fn to_json_value(&self) -> CharPolyJson {
        let det = self.determinant();
        CharPolyJson {
            n: self.coefficients.len(),
            c: self.coefficients.iter().map(|c| [c.re, c.im]).collect(),
            det: [det.re, det.im],
        }
    }

    /// `{"N":..,"C":[[re,im],...],"det":[re,im]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("finite values serialize")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CharPolyJson {
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(rename = "C")]
    pub c: Vec<[f64; 2]>,
    pub det: [f64; 2],
}

/// Runs the recursion with iterates held in double-double precision; the
/// coefficients and retained iterates are rounded to double at the end.
pub fn faddeev_leverrier(u: &AlgebraElement) -> CharPolyResult {
    let ctx = *u.context();
    let n = ctx.rep_size();
    let norm = u.norm();
    if norm > SCALING_WARN_NORM {
        warn!("characteristic polynomial of an element with norm {norm:e}; iterates grow like norm^k");
    }
    let powers = dd::omega_powers(ctx.m());
    let round = |v: &[DdComplex]| {
        AlgebraElement::from_coefficients(&ctx, v.iter().map(|c| c.to_c64()).collect())
            .expect("length matches")
    };
    let mut coefficients = Vec::with_capacity(n);
    let mut current: Vec<DdComplex> = u.coeffs().iter().map(|&c| DdComplex::from_c64(c)).collect();
    let mut previous = AlgebraElement::identity(&ctx);
    let mut shifted_penultimate = AlgebraElement::identity(&ctx);
    for k in 1..=n {
        let c = current[0].mul_f64(n as f64).div_f64(k as f64);
        coefficients.push(c.to_c64());
        if k < n {
            let last = round(&current);
            current[0] = current[0] - c;
            if k == n - 1 {
                shifted_penultimate = round(&current);
            }
            current = dd::left_multiply(&ctx, u.coeffs(), &current, &powers);
            previous = last;
        }
    }
    CharPolyResult {
        ctx,
        coefficients,
        penultimate: previous,
        last: round(&current),
        shifted_penultimate,
    }
}

pub fn determinant(u: &AlgebraElement) -> C64 {
    faddeev_leverrier(u).determinant()
}

/// `Adj(U)` with `U Adj(U) = Adj(U) U = Det(U) e`.
pub fn adjugate(u: &AlgebraElement) -> Result<AlgebraElement> {
    let ctx = u.context();
    if ctx.rep_size() < 2 {
        return Err(Error::WrongContext {
            required: "representation size N >= 2",
            m: ctx.m(),
            d: ctx.d(),
        });
    }
    Ok(faddeev_leverrier(u).adjugate())
}

/// `U^{-1} = Adj(U) / Det(U)`; rejects `|Det| <= 1e-10 max(1, ‖U‖)^N`.
pub fn inverse(u: &AlgebraElement) -> Result<AlgebraElement> {
    let fl = faddeev_leverrier(u);
    let det = fl.determinant();
    let n = u.context().rep_size() as i32;
    let threshold = 1e-10 * u.norm().max(1.0).powi(n);
    if det.norm() <= threshold || !det.is_finite() {
        return Err(Error::Singular {
            det_abs: det.norm(),
        });
    }
    Ok(fl.adjugate().scale(det.inv()))
}

/// `φ_U(λ) = Det(λe - U)`.
pub fn char_poly_eval(u: &AlgebraElement, lambda: C64) -> C64 {
    faddeev_leverrier(u).eval(lambda)
}

/// Closed forms specific to `Cl^(1/3)_2`, each evaluated with algebra
/// operations only (except `det_explicit`, which is the cubic polynomial in
/// the nine coefficients).
#[derive(Debug, Clone)]
pub struct TernaryClosedForms {
    pub c1: C64,
    pub c2: C64,
    pub det: C64,
    pub adj: AlgebraElement,
    pub c2_flat: C64,
    pub det_flat: C64,
    pub adj_flat: AlgebraElement,
    pub det_explicit: C64,
    /// `-U² - 3U U̲ + 3 (U²)̲ + 9 (U U̲)̲`, numerator of the inverse.
    pub inverse_numerator: AlgebraElement,
    /// `-U² - 6 (U²)̲ + 6 U U̲ + 9 U̲²`, the flattened numerator.
    pub inverse_numerator_flat: AlgebraElement,
    /// Largest non-scalar residue among the scalar-valued expressions.
    pub scalar_residual: f64,
}

pub fn ternary_d2_closed_forms(u: &AlgebraElement) -> Result<TernaryClosedForms> {
    let ctx = u.context();
    if (ctx.m(), ctx.d()) != (3, 2) {
        return Err(Error::WrongContext {
            required: "Cl^(1/3)_2",
            m: ctx.m(),
            d: ctx.d(),
        });
    }
    let ul = u.underline();
    let u2 = u * u;
    let u2l = u2.underline();
    let u_ul = u * &ul;
    let u_ul_l = u_ul.underline();
    let ul2 = &ul * &ul;

    let c1_el = (u + &ul) * 1.5;
    let c2_el = (&(&(&u2 + &u2l) + &(&u_ul * 3.0)) + &(&u_ul_l * 3.0)) * -0.375;
    let numerator = &(&(&(-&u2) - &(&u_ul * 3.0)) + &(&u2l * 3.0)) + &(&u_ul_l * 9.0);
    let det_el = &(u * &numerator) * 0.125;

    let c2q_el = (&(&(&u2 - &(&u2l * 2.0)) + &(&u_ul * 6.0)) + &(&ul2 * 3.0)) * -0.375;
    let numerator_q = &(&(&(-&u2) - &(&u2l * 6.0)) + &(&u_ul * 6.0)) + &(&ul2 * 9.0);
    let detq_el = &(u * &numerator_q) * 0.125;

    let scalar_residual = [&c1_el, &c2_el, &det_el, &c2q_el, &detq_el]
        .iter()
        .map(|x| x.non_scalar_norm())
        .fold(0.0, f64::max);

    Ok(TernaryClosedForms {
        c1: c1_el.scalar_part(),
        c2: c2_el.scalar_part(),
        det: det_el.scalar_part(),
        adj: &numerator * 0.125,
        c2_flat: c2q_el.scalar_part(),
        det_flat: detq_el.scalar_part(),
        adj_flat: &numerator_q * 0.125,
        det_explicit: ternary_det_explicit(u),
        inverse_numerator: numerator,
        inverse_numerator_flat: numerator_q,
        scalar_residual,
    })
}

/// The determinant of `Cl^(1/3)_2` as a cubic polynomial in the
/// coefficients `u_{jk}` of `e_1^j e_2^k`.
fn ternary_det_explicit(u: &AlgebraElement) -> C64 {
    let w = u.context().omega();
    let c = |j: usize, k: usize| u.coeffs()[3 * j + k];
    let cubes: C64 = u.coeffs().iter().map(|x| x * x * x).sum();
    let real_triples = c(0, 0) * c(0, 1) * c(0, 2)
        + c(1, 0) * c(1, 1) * c(1, 2)
        + c(0, 0) * c(1, 0) * c(2, 0)
        + c(0, 1) * c(1, 1) * c(2, 1)
        + c(0, 2) * c(1, 2) * c(2, 2)
        + c(2, 0) * c(2, 1) * c(2, 2);
    let w_triples = c(0, 1) * c(1, 2) * c(2, 0) + c(0, 2) * c(1, 0) * c(2, 1) + c(0, 0) * c(1, 1) * c(2, 2);
    let w2_triples = c(0, 2) * c(1, 1) * c(2, 0) + c(0, 0) * c(1, 2) * c(2, 1) + c(0, 1) * c(1, 0) * c(2, 2);
    cubes - real_triples * 3.0 - w * w_triples * 3.0 - w * w * w2_triples * 3.0
}
