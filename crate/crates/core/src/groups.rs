//! Unitary and special unitary groups of `Cl^(1/m)_d`, their Lie algebras,
//! and the explicit su(3) basis inside `Cl^(1/3)_2`.

use rand::Rng;

use crate::context::AlgebraContext;
use crate::element::AlgebraElement;
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::rep::GeneratorSet;
use crate::spectral;
use crate::C64;

/// Group and Lie-algebra membership of a single element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Membership {
    /// `‖Ū U - e‖ <= tol`.
    pub unitary: bool,
    /// Unitary and `|Det(U) - 1| <= tol`.
    pub special_unitary: bool,
    /// `‖Ū + U‖ <= tol`.
    pub anti_hermitian: bool,
    /// Anti-Hermitian and `|⟨U⟩_0| <= tol`.
    pub su_algebra: bool,
}

pub fn membership(u: &AlgebraElement, tol: f64) -> Membership {
    let conj = u.hermitian_conjugate();
    let unitary = (&conj * u).add_scalar(C64::new(-1.0, 0.0)).norm() <= tol;
    let special_unitary = unitary && (spectral::determinant(u) - 1.0).norm() <= tol;
    let anti_hermitian = (&conj + u).norm() <= tol;
    let su_algebra = anti_hermitian && u.scalar_part().norm() <= tol;
    Membership {
        unitary,
        special_unitary,
        anti_hermitian,
        su_algebra,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LieKind {
    /// Anti-Hermitian elements, real dimension `m^d`.
    Unitary,
    /// Anti-Hermitian elements with zero scalar part, real dimension `m^d - 1`.
    SpecialUnitary,
}

#[derive(Debug, Clone)]
pub struct LieBasis {
    pub ctx: AlgebraContext,
    pub kind: LieKind,
    pub elements: Vec<AlgebraElement>,
}

impl LieBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Rank over the reals of the stacked `(re, im)` coefficient vectors.
    pub fn real_rank(&self) -> usize {
        real_rank(&self.elements)
    }

    /// `Σ_k r_k X_k` with `r_k` uniform in `[-1, 1]`.
    pub fn random_element<R: Rng>(&self, rng: &mut R) -> AlgebraElement {
        self.elements
            .iter()
            .fold(AlgebraElement::zero(&self.ctx), |acc, x| {
                &acc + &(x * rng.gen_range(-1.0..1.0))
            })
    }
}

/// Real rank of a family of elements viewed as vectors in `R^{2 m^d}`.
pub fn real_rank(elements: &[AlgebraElement]) -> usize {
    let Some(first) = elements.first() else {
        return 0;
    };
    let dim = first.context().dim();
    let mut rows = ComplexMatrix::zeros(elements.len(), 2 * dim);
    for (i, x) in elements.iter().enumerate() {
        for (j, c) in x.coeffs().iter().enumerate() {
            rows.set(i, j, C64::new(c.re, 0.0));
            rows.set(i, dim + j, C64::new(c.im, 0.0));
        }
    }
    rows.rank(1e-8)
}

/// Basis of `{X : X̄ = -X}`.
///
/// Monomials pair up as `E_J^{-1} = ω^p E_{J'}`. A pair `J ≠ J'` gives
/// `E_J - ω^p E_{J'}` and `i(E_J + ω^p E_{J'})`; a self-paired `J` gives
/// `i ω^{p/2} E_J` with the principal half phase `e^{iπp/m}`. Monomials are
/// visited with `e_1`'s exponent as the least significant digit and the
/// first member of each pair is the one written first, so for
/// `Cl^(1/3)_2` this returns `ie, e1-e1², i(e1+e1²), e2-e2², ...` in order.
pub fn unitary_lie_basis(ctx: &AlgebraContext) -> LieBasis {
    let m = ctx.m() as usize;
    let d = ctx.d() as usize;
    let mut seen = vec![false; ctx.dim()];
    let mut elements = Vec::with_capacity(ctx.dim());
    let mut digits = vec![0u32; d];
    for reversed in 0..ctx.dim() {
        let mut r = reversed;
        for slot in digits.iter_mut() {
            *slot = (r % m) as u32;
            r /= m;
        }
        let j = crate::ExponentTuple::new(ctx, &digits).expect("digits in range");
        let idx = j.index(ctx);
        if seen[idx] {
            continue;
        }
        let inv = ctx.monomial_inverse(&j);
        let partner = inv.exponents.index(ctx);
        seen[idx] = true;
        seen[partner] = true;
        let ej = AlgebraElement::basis_element(ctx, &j);
        if partner == idx {
            let c = C64::new(0.0, 1.0) * ctx.zeta_pow(inv.phase as i64);
            elements.push(ej.scale(c));
        } else {
            let ejp = AlgebraElement::basis_element(ctx, &inv.exponents)
                .scale(ctx.omega_pow(inv.phase as i64));
            elements.push(&ej - &ejp);
            elements.push((&ej + &ejp).scale(C64::new(0.0, 1.0)));
        }
    }
    LieBasis {
        ctx: *ctx,
        kind: LieKind::Unitary,
        elements,
    }
}

/// [`unitary_lie_basis`] without `ie`.
pub fn special_unitary_lie_basis(ctx: &AlgebraContext) -> LieBasis {
    let mut basis = unitary_lie_basis(ctx);
    basis.elements.retain(|x| x.scalar_part() == C64::new(0.0, 0.0));
    basis.kind = LieKind::SpecialUnitary;
    basis
}

/// `[X, Y] = XY - YX`.
pub fn commutator(x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
    Ok(&x.multiply(y)? - &y.multiply(x)?)
}

/// Default relative truncation threshold of [`exp_element`].
pub const EXP_TOL: f64 = 1e-16;
const EXP_MAX_TERMS: u32 = 64;

/// `exp(X) = Σ X^k / k!` by scaling and squaring: `X` is halved until its
/// norm is at most 0.5, the series is summed until a term falls below
/// `tol` relative to the partial sum (at most 64 terms), and the result is
/// squared back.
pub fn exp_element(x: &AlgebraElement, tol: f64) -> AlgebraElement {
    let ctx = x.context();
    let mut squarings = 0u32;
    let mut norm = x.norm();
    while norm > 0.5 {
        norm /= 2.0;
        squarings += 1;
    }
    let scaled = x * 0.5f64.powi(squarings as i32);
    let mut sum = AlgebraElement::identity(ctx);
    let mut term = AlgebraElement::identity(ctx);
    for k in 1..=EXP_MAX_TERMS {
        term = &(&term * &scaled) * (1.0 / k as f64);
        sum = &sum + &term;
        if term.norm() < tol * sum.norm() {
            break;
        }
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    sum
}

/// Matrices and change-of-basis tables relating the τ-basis of
/// su(3) ⊂ `Cl^(1/3)_2` to the Gell-Mann basis `θ_j = i λ_j`.
#[derive(Debug, Clone)]
pub struct Su3Tables {
    /// `τ_1, ..., τ_8`.
    pub tau: Vec<AlgebraElement>,
    /// `β(τ_j)`.
    pub beta_tau: Vec<ComplexMatrix>,
    /// `λ_1, ..., λ_8`.
    pub gell_mann: Vec<ComplexMatrix>,
    /// `θ_j = i λ_j`.
    pub theta: Vec<ComplexMatrix>,
    /// Row `j` holds the coefficients of `β(τ_j)` over `θ_1..θ_8`.
    pub tau_to_theta: [[f64; 8]; 8],
    /// Row `j` holds the coefficients of `θ_j` over `β(τ_1)..β(τ_8)`.
    pub theta_to_tau: [[f64; 8]; 8],
}

const S3: f64 = 1.732_050_807_568_877_2;

pub fn su3_tables(ctx: &AlgebraContext) -> Result<Su3Tables> {
    if (ctx.m(), ctx.d()) != (3, 2) {
        return Err(Error::WrongContext {
            required: "Cl^(1/3)_2",
            m: ctx.m(),
            d: ctx.d(),
        });
    }
    let tau = special_unitary_lie_basis(ctx).elements;
    let gens = GeneratorSet::new(ctx)?;
    let beta_tau = tau
        .iter()
        .map(|t| gens.represent(t))
        .collect::<Result<Vec<_>>>()?;
    let gell_mann = gell_mann_matrices();
    let theta = gell_mann
        .iter()
        .map(|l| l.scale(C64::new(0.0, 1.0)))
        .collect();
    Ok(Su3Tables {
        tau,
        beta_tau,
        gell_mann,
        theta,
        tau_to_theta: tau_to_theta_table(),
        theta_to_tau: theta_to_tau_table(),
    })
}

pub fn gell_mann_matrices() -> Vec<ComplexMatrix> {
    let o = C64::new(0.0, 0.0);
    let l = C64::new(1.0, 0.0);
    let i = C64::new(0.0, 1.0);
    let r = 1.0 / S3;
    let rows = [
        [[o, l, o], [l, o, o], [o, o, o]],
        [[o, -i, o], [i, o, o], [o, o, o]],
        [[l, o, o], [o, -l, o], [o, o, o]],
        [[o, o, l], [o, o, o], [l, o, o]],
        [[o, o, -i], [o, o, o], [i, o, o]],
        [[o, o, o], [o, o, l], [o, l, o]],
        [[o, o, o], [o, o, -i], [o, i, o]],
        [[l * r, o, o], [o, l * r, o], [o, o, l * (-2.0 * r)]],
    ];
    rows.iter()
        .map(|m| ComplexMatrix::from_rows(&m.map(|row| row.to_vec())).expect("3x3"))
        .collect()
}

/// `β(τ_j) = Σ_k A[j][k] θ_k`, solved exactly from the matrices.
fn tau_to_theta_table() -> [[f64; 8]; 8] {
    let h = 0.5;
    let s = S3 / 2.0;
    [
        [0.0, 1.0, 0.0, 0.0, -1.0, 0.0, 1.0, 0.0],
        [1.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, -s, 0.0, 0.0, 0.0, 0.0, 1.5],
        [0.0, 0.0, 1.5, 0.0, 0.0, 0.0, 0.0, s],
        [s, -h, 0.0, 0.0, -1.0, -s, -h, 0.0],
        [-h, -s, 0.0, 1.0, 0.0, -h, s, 0.0],
        [0.0, -1.0, 0.0, -s, -h, s, h, 0.0],
        [1.0, 0.0, 0.0, -h, s, -h, s, 0.0],
    ]
}

/// `θ_j = Σ_k B[j][k] β(τ_k)`, the inverse of [`tau_to_theta_table`].
fn theta_to_tau_table() -> [[f64; 8]; 8] {
    let t = 1.0 / (2.0 * S3);
    let (a, b) = (1.0 / 3.0, 1.0 / 6.0);
    [
        [0.0, a, 0.0, 0.0, t, -b, 0.0, a],
        [a, 0.0, 0.0, 0.0, -b, -t, -a, 0.0],
        [0.0, 0.0, -t, 0.5, 0.0, 0.0, 0.0, 0.0],
        [0.0, a, 0.0, 0.0, 0.0, a, -t, -b],
        [-a, 0.0, 0.0, 0.0, -a, 0.0, -b, t],
        [0.0, a, 0.0, 0.0, -t, -b, t, -b],
        [a, 0.0, 0.0, 0.0, -b, t, b, t],
        [0.0, 0.0, 0.5, t, 0.0, 0.0, 0.0, 0.0],
    ]
}

/// The sixteen change-of-basis relations exactly as they are usually quoted
/// for this basis: rows 0..8 give `β_j` over `θ`, rows 8..16 give `θ_j`
/// over `β`. Several of them do not hold; see [`listed_relation_residuals`].
pub fn listed_relations() -> [[f64; 8]; 16] {
    let s = S3 / 2.0;
    let q = 1.0 / (4.0 * S3);
    let t = 1.0 / (2.0 * S3);
    let f = S3 / 4.0;
    [
        [0.0, 1.0, 0.0, 0.0, -1.0, 0.0, 1.0, 0.0],
        [1.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, -s, 0.0, 0.0, 0.0, 0.0, 1.5],
        [0.0, 0.0, 1.5, 0.0, 0.0, 0.0, 0.0, s],
        [s, -0.5, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0],
        [-0.5, -s, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, -1.0, 0.0, -s, -0.5, s, 0.5, 0.0],
        [1.0, 0.0, 0.0, -0.5, s, -1.0 / 6.0, s, 0.0],
        [-q, 0.25, 0.0, 0.0, f, -0.25, -q, 0.25],
        [0.25, q, 0.0, 0.0, -0.25, -f, -0.25, -q],
        [0.0, 0.0, -t, 0.5, 0.0, 0.0, 0.0, 0.0],
        [q, 0.25, 0.0, 0.0, 0.0, 0.5, -t, 0.0],
        [-0.25, q, 0.0, 0.0, -0.5, 0.0, 0.0, t],
        [0.0, 0.5, 0.0, 0.0, -f, -0.25, f, -0.25],
        [0.5, 0.0, 0.0, 0.0, -0.25, f, 0.25, f],
        [0.0, 0.0, 0.5, t, 0.0, 0.0, 0.0, 0.0],
    ]
}

/// `Σ_k coeffs[k] basis[k]`.
pub fn combine(coeffs: &[f64; 8], basis: &[ComplexMatrix]) -> ComplexMatrix {
    basis
        .iter()
        .zip(coeffs)
        .fold(ComplexMatrix::zeros(3, 3), |acc, (b, &c)| {
            &acc + &b.scale(C64::new(c, 0.0))
        })
}

/// Max-entry residual of each listed relation, labelled `beta_j` / `theta_j`.
pub fn listed_relation_residuals(tables: &Su3Tables) -> Vec<(String, f64)> {
    listed_relations()
        .iter()
        .enumerate()
        .map(|(row, coeffs)| {
            if row < 8 {
                let lhs = &tables.beta_tau[row];
                let rhs = combine(coeffs, &tables.theta);
                (format!("beta_{}", row + 1), (lhs - &rhs).max_abs())
            } else {
                let lhs = &tables.theta[row - 8];
                let rhs = combine(coeffs, &tables.beta_tau);
                (format!("theta_{}", row - 7), (lhs - &rhs).max_abs())
            }
        })
        .collect()
}

/// Max-entry deviation of `A B` and `B A` from the identity.
pub fn table_inverse_residual(a: &[[f64; 8]; 8], b: &[[f64; 8]; 8]) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..8 {
        for j in 0..8 {
            let id = if i == j { 1.0 } else { 0.0 };
            let ab: f64 = (0..8).map(|k| a[i][k] * b[k][j]).sum();
            let ba: f64 = (0..8).map(|k| b[i][k] * a[k][j]).sum();
            worst = worst.max((ab - id).abs()).max((ba - id).abs());
        }
    }
    worst
}
