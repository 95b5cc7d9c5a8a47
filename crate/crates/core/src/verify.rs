//! Self-check suite: every intrinsic operation is compared with the matrix
//! representation on seeded random elements.

use serde::Serialize;

use crate::context::{AlgebraContext, ExponentTuple};
use crate::element::AlgebraElement;
use crate::error::Result;
use crate::groups;
use crate::matrix::ComplexMatrix;
use crate::random::{self, TestRng};
use crate::rep::GeneratorSet;
use crate::spectral;
use crate::C64;

/// Tolerance at which every check uses its reference threshold. Other
/// values scale all thresholds proportionally.
pub const REFERENCE_TOL: f64 = 1e-9;

/// `{2,3,4,5} × {1,2,3}` restricted to `m^d <= 256`.
pub fn default_configurations() -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for m in 2..=5u32 {
        for d in 1..=3u32 {
            if m.pow(d) <= 256 {
                out.push((m, d));
            }
        }
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub samples: usize,
    /// Largest normalized error seen.
    pub worst: f64,
    pub limit: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub m: u32,
    pub d: u32,
    pub seed: u64,
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

struct Suite {
    ctx: AlgebraContext,
    gens: GeneratorSet,
    rng: TestRng,
    scale: f64,
    checks: Vec<CheckOutcome>,
}

impl Suite {
    fn record(&mut self, name: &'static str, samples: usize, worst: f64, limit: f64) {
        let limit = limit * self.scale;
        self.checks.push(CheckOutcome {
            name,
            samples,
            worst,
            limit,
            passed: worst.is_finite() && worst <= limit,
        });
    }

    /// Runs `f` on `samples` fresh random elements and records the worst value.
    fn sampled<F>(&mut self, name: &'static str, samples: usize, limit: f64, mut f: F) -> Result<()>
    where
        F: FnMut(&mut Self, &AlgebraElement) -> Result<f64>,
    {
        let mut worst: f64 = 0.0;
        for _ in 0..samples {
            let u = random::element(&self.ctx, &mut self.rng);
            worst = worst.max(f(self, &u)?);
        }
        self.record(name, samples, worst, limit);
        Ok(())
    }

    fn n(&self) -> f64 {
        self.ctx.rep_size() as f64
    }
}

fn rel(a: C64, b: C64) -> f64 {
    let scale = a.norm().max(b.norm());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).norm() / scale
    }
}

/// Runs the full suite for one algebra. `tol` scales every threshold by
/// `tol / REFERENCE_TOL`.
pub fn verify_config(ctx: &AlgebraContext, seed: u64, tol: f64) -> Result<VerifyReport> {
    let mut s = Suite {
        ctx: *ctx,
        gens: GeneratorSet::new(ctx)?,
        rng: random::rng(seed),
        scale: tol / REFERENCE_TOL,
        checks: Vec::new(),
    };
    let m = ctx.m();
    let n = ctx.rep_size();

    let mut worst: f64 = 0.0;
    let id = ComplexMatrix::identity(n);
    for k in 1..=ctx.d() as usize {
        let g = s.gens.generator(k);
        worst = worst.max((&g.pow(m)? - &id).max_abs());
        for l in k + 1..=ctx.d() as usize {
            let h = s.gens.generator(l);
            let lhs = g.mat_mul(h)?;
            let rhs = h.mat_mul(g)?.scale(ctx.omega());
            worst = worst.max((&lhs - &rhs).max_abs());
        }
    }
    s.record("generator_relations", ctx.d() as usize, worst, 1e-12);

    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let u = random::element(ctx, &mut s.rng);
        let v = random::element(ctx, &mut s.rng);
        let lhs = s.gens.represent(&u.multiply(&v)?)?;
        let (bu, bv) = (s.gens.represent(&u)?, s.gens.represent(&v)?);
        let rhs = bu.mat_mul(&bv)?;
        worst = worst.max((&lhs - &rhs).frobenius_norm() / (bu.frobenius_norm() * bv.frobenius_norm()));
    }
    s.record("product_homomorphism", 20, worst, 1e-12);

    s.sampled("hermitian_conjugate", 50, 1e-12, |s, u| {
        let lhs = s.gens.represent(&u.hermitian_conjugate())?;
        let rhs = s.gens.represent(u)?.hermitian_transpose();
        Ok((&lhs - &rhs).frobenius_norm() / (s.n() * u.norm()))
    })?;

    s.sampled("trace", 50, 1e-10, |s, u| {
        let tr = s.gens.represent(u)?.trace();
        Ok((tr - spectral::trace(u)).norm() / (s.n() * u.norm()))
    })?;

    s.sampled("trace_cyclicity", 50, 1e-12, |s, u| {
        let v = random::element(&s.ctx, &mut s.rng);
        let (uv, vu) = (u.multiply(&v)?, v.multiply(u)?);
        Ok((uv.scalar_part() - vu.scalar_part()).norm() / (u.norm() * v.norm()))
    })?;

    s.sampled("determinant_oracle", 100, 1e-8, |s, u| {
        let fl = spectral::determinant(u);
        let lu = s.gens.represent(u)?.det()?;
        Ok((fl - lu).norm() / (1.0 + u.norm()).powi(n as i32))
    })?;

    s.sampled("representation_independence", 3, 1e-8, |s, u| {
        let det = spectral::determinant(u);
        let mut worst: f64 = 0.0;
        for _ in 0..10 {
            let t = random::invertible_matrix(n, &mut s.rng);
            for shift in 0..m {
                let alt = s.gens.alternative_representation(u, &t, shift)?.det()?;
                worst = worst.max(rel(alt, det));
            }
        }
        Ok(worst)
    })?;

    s.sampled("conjugate_determinant", 100, 1e-9, |_, u| {
        let det = spectral::determinant(u);
        let det_h = spectral::determinant(&u.hermitian_conjugate());
        Ok(rel(det, det_h.conj()))
    })?;

    if n >= 2 {
        let mut worst: f64 = 0.0;
        let mut used = 0;
        while used < 50 {
            let u = random::element(ctx, &mut s.rng);
            if spectral::determinant(&u).norm() <= 1e-3 {
                continue;
            }
            used += 1;
            let inv = spectral::inverse(&u)?;
            worst = worst.max(u.multiply(&inv)?.add_scalar(C64::new(-1.0, 0.0)).norm());
        }
        s.record("inverse", used, worst, 1e-8);
    }

    s.sampled("underline_identities", 100, 1e-12, |s, u| {
        let v = random::element(&s.ctx, &mut s.rng);
        let scale = (1.0 + u.norm()).powi(2) * (1.0 + v.norm());
        let (ul, vl) = (u.underline(), v.underline());
        let uv = u.multiply(&v)?;
        let proper = &uv.underline().multiply(u)? - &u.multiply(&v.multiply(u)?.underline())?;
        let under = &u.multiply(&vl)?.underline() - &(&(&ul.multiply(&vl)? + &ul.multiply(&v)?) - &uv.underline());
        let u2 = u.multiply(u)?;
        let under2 = &u.multiply(&ul)?.underline() - &(&(&ul.multiply(&ul)? + &ul.multiply(u)?) - &u2.underline());
        Ok(proper.norm().max(under.norm()).max(under2.norm()) / scale)
    })?;

    if ctx.d() % 2 == 1 {
        s.sampled("grade_automorphism_invariance", 20, 1e-9, |s, u| {
            let det = spectral::determinant(u);
            let mut worst: f64 = 0.0;
            for j in 1..s.ctx.m() {
                worst = worst.max(rel(spectral::determinant(&u.grade_automorphism(j)), det));
            }
            Ok(worst)
        })?;
        s.sampled("odd_block_structure", 10, 1e-10, |s, u| {
            let size = s.ctx.rep_size() / s.ctx.m() as usize;
            let mut worst: f64 = 0.0;
            for r in 0..s.ctx.m() {
                let b = s.gens.represent(&u.mod_grade_project(r as i64)?)?;
                let first = b.block(0, size);
                for j in 1..s.ctx.m() as usize {
                    let want = first.scale(s.ctx.omega_pow((r as usize * j) as i64));
                    worst = worst.max((&b.block(j * size, size) - &want).max_abs());
                }
            }
            Ok(worst / (1.0 + u.norm()))
        })?;
    }

    let u_basis = groups::unitary_lie_basis(ctx);
    let su_basis = groups::special_unitary_lie_basis(ctx);
    let rank_gap = (u_basis.real_rank() as i64 - ctx.dim() as i64).abs()
        + (su_basis.real_rank() as i64 - ctx.dim() as i64 + 1).abs();
    s.record("lie_basis_rank", 2, rank_gap as f64, 0.0);

    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let x = su_basis.random_element(&mut s.rng);
        let y = su_basis.random_element(&mut s.rng);
        let c = groups::commutator(&x, &y)?;
        worst = worst.max((&c.hermitian_conjugate() + &c).norm()).max(c.scalar_part().norm());
    }
    s.record("commutator_closure", 20, worst, 1e-10);

    let mut worst: f64 = 0.0;
    let mut group = Vec::new();
    for _ in 0..50 {
        let x = su_basis.random_element(&mut s.rng);
        let g = groups::exp_element(&x, groups::EXP_TOL);
        let conj = g.hermitian_conjugate();
        let unitary = conj.multiply(&g)?.add_scalar(C64::new(-1.0, 0.0)).norm();
        let det = (spectral::determinant(&g) - 1.0).norm();
        worst = worst.max(unitary).max(det);
        group.push(g);
    }
    s.record("exponential_special_unitary", 50, worst, 1e-8);

    let mut worst: f64 = 0.0;
    for pair in group.chunks(2) {
        if let [a, b] = pair {
            let ab = a.multiply(b)?;
            for g in [ab.clone(), ab.hermitian_conjugate()] {
                let unitary = g.hermitian_conjugate().multiply(&g)?.add_scalar(C64::new(-1.0, 0.0)).norm();
                let det = (spectral::determinant(&g) - 1.0).norm();
                worst = worst.max(unitary).max(det);
            }
        }
    }
    s.record("group_closure", group.len() / 2, worst, 2e-8);

    if (m, ctx.d()) == (3, 2) {
        ternary_checks(&mut s)?;
    }

    Ok(VerifyReport {
        m,
        d: ctx.d(),
        seed,
        checks: s.checks,
    })
}

fn ternary_checks(s: &mut Suite) -> Result<()> {
    s.sampled("closed_form_determinants", 200, 1e-9, |s, u| {
        let cf = spectral::ternary_d2_closed_forms(u)?;
        let lu = s.gens.represent(u)?.det()?;
        let fl = spectral::determinant(u);
        Ok([cf.det, cf.det_flat, cf.det_explicit, fl]
            .into_iter()
            .map(|x| rel(x, lu))
            .fold(0.0, f64::max))
    })?;

    s.sampled("inverse_numerators", 50, 1e-10, |_, u| {
        let cf = spectral::ternary_d2_closed_forms(u)?;
        let diff = &cf.inverse_numerator - &cf.inverse_numerator_flat;
        Ok(diff.norm() / (1.0 + u.norm()).powi(2))
    })?;

    let mut worst: f64 = 0.0;
    for j in s.ctx.monomials().collect::<Vec<ExponentTuple>>() {
        let det = spectral::determinant(&AlgebraElement::basis_element(&s.ctx, &j));
        worst = worst.max((det - 1.0).norm());
    }
    s.record("monomial_determinants", 9, worst, 1e-12);

    let t = groups::su3_tables(&s.ctx)?;
    let mut worst = groups::table_inverse_residual(&t.tau_to_theta, &t.theta_to_tau);
    for j in 0..8 {
        let b = groups::combine(&t.tau_to_theta[j], &t.theta);
        let th = groups::combine(&t.theta_to_tau[j], &t.beta_tau);
        worst = worst
            .max((&b - &t.beta_tau[j]).max_abs())
            .max((&th - &t.theta[j]).max_abs());
    }
    s.record("su3_change_of_basis", 16, worst, 1e-12);
    Ok(())
}
