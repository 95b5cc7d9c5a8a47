//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
//!
//! Reference values (the multiplication table, the representation matrices,
//! the su(3) basis and its change-of-basis relations) are transcribed here by
//! hand; computed values are compared against matrix-side oracles (LU
//! determinants, conjugate transposes, matrix traces).

use std::path::Path;
use std::process::Command;
use std::time::Instant;

use gencliff::groups::{self, EXP_TOL};
use gencliff::random::{self, TestRng};
use gencliff::{spectral, AlgebraContext, AlgebraElement, ComplexMatrix, ExponentTuple, GeneratorSet, C64};

type Outcome = Result<String, String>;

const S3: f64 = 1.732_050_807_568_877_2;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn omega() -> C64 {
    C64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0)
}

fn configurations() -> Vec<AlgebraContext> {
    let mut out = Vec::new();
    for m in 2..=5u32 {
        for d in 1..=3u32 {
            if m.pow(d) <= 256 {
                out.push(AlgebraContext::new(m, d).unwrap());
            }
        }
    }
    out
}

fn rel(a: C64, b: C64) -> f64 {
    let scale = a.norm().max(b.norm());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).norm() / scale
    }
}

fn mono(ctx: &AlgebraContext, e: &[u32]) -> AlgebraElement {
    AlgebraElement::basis_element(ctx, &ExponentTuple::new(ctx, e).unwrap())
}

fn mat(rows: [[C64; 3]; 3]) -> ComplexMatrix {
    ComplexMatrix::from_rows(&rows.map(|r| r.to_vec())).unwrap()
}

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

/// Multiplication table cells as `phase*monomial`, rows = left factor.
const MULT_TABLE: [[&str; 8]; 8] = [
    ["e1^2", "e1*e2", "e", "e1*e2^2", "e1^2*e2", "e2", "e1^2*e2^2", "e2^2"],
    ["w2*e1*e2", "e2^2", "w*e1^2*e2", "e", "w2*e1*e2^2", "w*e1^2*e2^2", "w2*e1", "w*e1^2"],
    ["e", "e1^2*e2", "e1", "e1^2*e2^2", "e2", "e1*e2", "e2^2", "e1*e2^2"],
    ["w*e1*e2^2", "e", "w2*e1^2*e2^2", "e2", "w*e1", "w2*e1^2", "w*e1*e2", "w2*e1^2*e2"],
    ["w2*e1^2*e2", "e1*e2^2", "w*e2", "e1", "w2*e1^2*e2^2", "w*e2^2", "w2*e1^2", "w*e"],
    ["w2*e2", "e1^2*e2^2", "w*e1*e2", "e1^2", "w2*e2^2", "w*e1*e2^2", "w2*e", "w*e1"],
    ["w*e1^2*e2^2", "e1", "w2*e2^2", "e1*e2", "w*e1^2", "w2*e", "w*e1^2*e2", "w2*e2"],
    ["w*e2^2", "e1^2", "w2*e1*e2^2", "e1^2*e2", "w*e", "w2*e1", "w*e2", "w2*e1*e2"],
];
const TABLE_ORDER: [[u32; 2]; 8] = [[1, 0], [0, 1], [2, 0], [0, 2], [1, 1], [2, 1], [1, 2], [2, 2]];

fn parse_cell(cell: &str) -> (u32, [u32; 2]) {
    let (phase, rest) = match cell.split_once('*') {
        Some(("w", rest)) => (1, rest),
        Some(("w2", rest)) => (2, rest),
        _ => (0, cell),
    };
    let mut exps = [0u32; 2];
    if rest != "e" {
        for factor in rest.split('*') {
            let (g, p) = factor.split_once('^').unwrap_or((factor, "1"));
            let k: usize = g[1..].parse().unwrap();
            exps[k - 1] = p.parse().unwrap();
        }
    }
    (phase, exps)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let ctx = AlgebraContext::new(3, 2).unwrap();
    let mut mismatches = Vec::new();
    for (r, a) in TABLE_ORDER.iter().enumerate() {
        for (s, b) in TABLE_ORDER.iter().enumerate() {
            let got = ctx.monomial_product(&ExponentTuple::new(&ctx, a).unwrap(), &ExponentTuple::new(&ctx, b).unwrap());
            let (phase, exps) = parse_cell(MULT_TABLE[r][s]);
            if got.phase != phase || got.exponents.exponents() != exps {
                mismatches.push(format!("{a:?}*{b:?}"));
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    check(
        mismatches.is_empty() && secs < 1.0,
        format!("64 products, {} mismatches {:?}, {secs:.3}s", mismatches.len(), mismatches),
    )
}

fn criterion_2() -> Outcome {
    let ctx = AlgebraContext::new(3, 2).unwrap();
    let gens = GeneratorSet::new(&ctx).unwrap();
    let (o, l, w) = (c(0.0, 0.0), c(1.0, 0.0), omega());
    let w2 = w * w;
    let expected: Vec<([u32; 2], ComplexMatrix)> = vec![
        ([1, 0], mat([[o, l, o], [o, o, l], [l, o, o]])),
        ([0, 1], mat([[l, o, o], [o, w, o], [o, o, w2]])),
        ([2, 0], mat([[o, o, l], [l, o, o], [o, l, o]])),
        ([0, 2], mat([[l, o, o], [o, w2, o], [o, o, w]])),
        ([1, 1], mat([[o, w, o], [o, o, w2], [l, o, o]])),
        ([2, 1], mat([[o, o, w2], [l, o, o], [o, w, o]])),
        ([1, 2], mat([[o, w2, o], [o, o, w], [l, o, o]])),
        ([2, 2], mat([[o, o, w], [l, o, o], [o, w2, o]])),
    ];
    let mut worst: f64 = 0.0;
    for (e, want) in &expected {
        worst = worst.max((&gens.represent(&mono(&ctx, e)).unwrap() - want).max_abs());
    }
    let mut rng = random::rng(2);
    for _ in 0..50 {
        let u = random::element(&ctx, &mut rng);
        let k = |a: u32, b: u32| u.coefficient(&ExponentTuple::new(&ctx, &[a, b]).unwrap());
        let want = mat([
            [k(0, 0) + k(0, 1) + k(0, 2), k(1, 0) + w * k(1, 1) + w2 * k(1, 2), k(2, 0) + w * k(2, 2) + w2 * k(2, 1)],
            [k(2, 0) + k(2, 1) + k(2, 2), k(0, 0) + w * k(0, 1) + w2 * k(0, 2), k(1, 0) + w * k(1, 2) + w2 * k(1, 1)],
            [k(1, 0) + k(1, 1) + k(1, 2), k(2, 0) + w * k(2, 1) + w2 * k(2, 2), k(0, 0) + w * k(0, 2) + w2 * k(0, 1)],
        ]);
        worst = worst.max((&gens.represent(&u).unwrap() - &want).max_abs());
    }
    check(worst <= 1e-14, format!("generators, 6 products, 50 general matrices: max entry error {worst:.2e} (limit 1e-14)"))
}

fn over_configs<F>(samples: usize, seed: u64, limit: f64, mut f: F) -> Outcome
where
    F: FnMut(&AlgebraContext, &GeneratorSet, &mut TestRng) -> f64,
{
    let mut worst: f64 = 0.0;
    let mut worst_at = String::new();
    for ctx in configurations() {
        let gens = GeneratorSet::new(&ctx).unwrap();
        let mut rng = random::rng(seed);
        for _ in 0..samples {
            let v = f(&ctx, &gens, &mut rng);
            if !(v <= worst) {
                worst = v;
                worst_at = ctx.to_string();
            }
        }
    }
    check(
        worst <= limit,
        format!("12 algebras x {samples}: worst {worst:.2e} at {worst_at} (limit {limit:.0e})"),
    )
}

fn criterion_3() -> Outcome {
    over_configs(50, 3, 1e-12, |ctx, gens, rng| {
        let u = random::element(ctx, rng);
        let lhs = gens.represent(&u.hermitian_conjugate()).unwrap();
        let rhs = gens.represent(&u).unwrap().hermitian_transpose();
        (&lhs - &rhs).frobenius_norm() / (ctx.rep_size() as f64 * u.norm())
    })
}

fn criterion_4() -> Outcome {
    over_configs(50, 4, 1e-10, |ctx, gens, rng| {
        let u = random::element(ctx, rng);
        let n = ctx.rep_size() as f64;
        (gens.represent(&u).unwrap().trace() - u.scalar_part() * n).norm() / (n * u.norm())
    })
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let out = over_configs(100, 5, 1e-8, |ctx, gens, rng| {
        let u = random::element(ctx, rng);
        let lu = gens.represent(&u).unwrap().det().unwrap();
        (spectral::determinant(&u) - lu).norm() / (1.0 + u.norm()).powi(ctx.rep_size() as i32)
    });
    let secs = start.elapsed().as_secs_f64();
    match out {
        Ok(s) if secs < 60.0 => Ok(format!("{s}, {secs:.1}s")),
        Ok(s) | Err(s) => Err(format!("{s}, {secs:.1}s (limit 60s)")),
    }
}

fn criterion_6() -> Outcome {
    over_configs(3, 6, 1e-8, |ctx, gens, rng| {
        let u = random::element(ctx, rng);
        let det = spectral::determinant(&u);
        let mut worst: f64 = 0.0;
        for _ in 0..10 {
            let t = random::invertible_matrix(ctx.rep_size(), rng);
            for shift in 0..ctx.m() {
                let alt = gens.alternative_representation(&u, &t, shift).unwrap();
                worst = worst.max(rel(alt.det().unwrap(), det));
            }
        }
        worst
    })
}

/// The cubic determinant polynomial of `Cl^(1/3)_2`, written out term by
/// term from the nine coefficients `u_{jk}` of `e_1^j e_2^k`.
fn det_expanded(u: &AlgebraElement) -> C64 {
    let ctx = u.context();
    let k = |a: u32, b: u32| u.coefficient(&ExponentTuple::new(ctx, &[a, b]).unwrap());
    let w = omega();
    let w2 = w * w;
    let (u00, u10, u01, u20, u02, u11, u21, u12, u22) =
        (k(0, 0), k(1, 0), k(0, 1), k(2, 0), k(0, 2), k(1, 1), k(2, 1), k(1, 2), k(2, 2));
    let cube = |z: C64| z * z * z;
    cube(u00) + cube(u01) + cube(u02) + cube(u10) + cube(u20) + cube(u11) + cube(u22) + cube(u12) + cube(u21)
        - 3.0 * (u00 * u01 * u02 + u10 * u11 * u12 + u20 * u21 * u22)
        - 3.0 * (u00 * u10 * u20 + u01 * u11 * u21 + u02 * u12 * u22)
        - 3.0 * w * (u00 * u11 * u22 + u01 * u12 * u20 + u02 * u10 * u21)
        - 3.0 * w2 * (u00 * u12 * u21 + u01 * u10 * u22 + u02 * u11 * u20)
}

fn criterion_7() -> Outcome {
    let ctx = AlgebraContext::new(3, 2).unwrap();
    let gens = GeneratorSet::new(&ctx).unwrap();
    let mut rng = random::rng(7);
    let mut worst: f64 = 0.0;
    for _ in 0..200 {
        let u = random::element(&ctx, &mut rng);
        let lu = gens.represent(&u).unwrap().det().unwrap();
        let cf = spectral::ternary_d2_closed_forms(&u).unwrap();
        for v in [det_expanded(&u), cf.det_explicit, cf.det, cf.det_flat, spectral::determinant(&u)] {
            worst = worst.max(rel(v, lu));
        }
    }
    let mut monomial_worst: f64 = 0.0;
    for j in ctx.monomials() {
        let det = spectral::determinant(&AlgebraElement::basis_element(&ctx, &j));
        monomial_worst = monomial_worst.max((det - 1.0).norm());
    }
    check(
        worst <= 1e-9 && monomial_worst <= 1e-12,
        format!("200 elements: worst relative spread {worst:.2e} (limit 1e-9); |Det(E_J) - 1| max {monomial_worst:.2e} (limit 1e-12)"),
    )
}

fn criterion_8() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut count = 0;
    for ctx in configurations() {
        if ctx.rep_size() < 2 {
            continue;
        }
        let mut rng = random::rng(8);
        let mut used = 0;
        while used < 20 {
            let u = random::element(&ctx, &mut rng);
            if spectral::determinant(&u).norm() <= 1e-3 {
                continue;
            }
            used += 1;
            let inv = spectral::inverse(&u).unwrap();
            worst = worst.max(u.multiply(&inv).unwrap().add_scalar(c(-1.0, 0.0)).norm());
        }
        count += used;
    }
    let ctx = AlgebraContext::new(3, 2).unwrap();
    let mut rng = random::rng(88);
    let mut num_worst: f64 = 0.0;
    for _ in 0..100 {
        let u = random::element(&ctx, &mut rng);
        let cf = spectral::ternary_d2_closed_forms(&u).unwrap();
        let scale = cf.inverse_numerator.norm().max(1.0);
        num_worst = num_worst.max((&cf.inverse_numerator - &cf.inverse_numerator_flat).norm() / scale);
    }
    check(
        worst <= 1e-8 && num_worst <= 1e-10,
        format!("{count} inverses: max |U U^-1 - e| {worst:.2e} (limit 1e-8); numerator forms differ by {num_worst:.2e} (limit 1e-10)"),
    )
}

fn criterion_9() -> Outcome {
    over_configs(100, 9, 1e-12, |ctx, _, rng| {
        let u = random::element(ctx, rng);
        let v = random::element(ctx, rng);
        let mul = |a: &AlgebraElement, b: &AlgebraElement| a.multiply(b).unwrap();
        let (ul, vl) = (u.underline(), v.underline());
        let scale = (1.0 + u.norm()).powi(2) * (1.0 + v.norm());
        let proper = &mul(&mul(&u, &v).underline(), &u) - &mul(&u, &mul(&v, &u).underline());
        let under = &mul(&u, &vl).underline() - &(&(&mul(&ul, &vl) + &mul(&ul, &v)) - &mul(&u, &v).underline());
        let under2 = &mul(&u, &ul).underline() - &(&(&mul(&ul, &ul) + &mul(&ul, &u)) - &mul(&u, &u).underline());
        proper.norm().max(under.norm()).max(under2.norm()) / scale
    })
}

fn tau_reference(ctx: &AlgebraContext) -> Vec<AlgebraElement> {
    let i = c(0.0, 1.0);
    let w = omega();
    let e = |a, b| mono(ctx, &[a, b]);
    vec![
        AlgebraElement::identity(ctx).scale(i),
        &e(1, 0) - &e(2, 0),
        (&e(1, 0) + &e(2, 0)).scale(i),
        &e(0, 1) - &e(0, 2),
        (&e(0, 1) + &e(0, 2)).scale(i),
        &e(1, 1) - &e(2, 2).scale(w * w),
        (&e(1, 1) + &e(2, 2).scale(w * w)).scale(i),
        &e(2, 1) - &e(1, 2).scale(w),
        (&e(2, 1) + &e(1, 2).scale(w)).scale(i),
    ]
}

fn su_basis_reference() -> Vec<ComplexMatrix> {
    let (o, l, i) = (c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0));
    let (w, w2) = (omega(), omega() * omega());
    let r = c(S3, 0.0);
    vec![
        mat([[o, l, -l], [-l, o, l], [l, -l, o]]),
        mat([[o, i, i], [i, o, i], [i, i, o]]),
        mat([[o, o, o], [o, r * i, o], [o, o, -r * i]]),
        mat([[i * 2.0, o, o], [o, -i, o], [o, o, -i]]),
        mat([[o, w, -l], [-w2, o, w2], [l, -w, o]]),
        mat([[o, i * w, i], [i * w2, o, i * w2], [i, i * w, o]]),
        mat([[o, -l, w2], [l, o, -w2], [-w, w, o]]),
        mat([[o, i, i * w2], [i, o, i * w2], [i * w, i * w, o]]),
    ]
}

fn criterion_10() -> Outcome {
    let mut rank_failures = Vec::new();
    for ctx in configurations() {
        let u = groups::unitary_lie_basis(&ctx);
        let su = groups::special_unitary_lie_basis(&ctx);
        if u.real_rank() != ctx.dim() || su.real_rank() != ctx.dim() - 1 {
            rank_failures.push(ctx.to_string());
        }
    }
    let ctx = AlgebraContext::new(3, 2).unwrap();
    let gens = GeneratorSet::new(&ctx).unwrap();
    let tau = tau_reference(&ctx);
    let u = groups::unitary_lie_basis(&ctx).elements;
    let su = groups::special_unitary_lie_basis(&ctx).elements;
    let mut elem_worst: f64 = 0.0;
    for (got, want) in u.iter().zip(&tau).chain(su.iter().zip(&tau[1..])) {
        elem_worst = elem_worst.max((got - want).norm());
    }
    let counts_ok = u.len() == 9 && su.len() == 8;
    let mut mat_worst: f64 = 0.0;
    for (t, want) in su.iter().zip(su_basis_reference()) {
        let b = gens.represent(t).unwrap();
        mat_worst = mat_worst.max((&b - &want).max_abs());
        mat_worst = mat_worst.max((&b.hermitian_transpose() + &b).max_abs());
    }
    check(
        rank_failures.is_empty() && counts_ok && elem_worst <= 1e-12 && mat_worst <= 1e-12,
        format!(
            "rank failures {rank_failures:?}; tau coefficients off by {elem_worst:.2e}; basis matrices off by {mat_worst:.2e} (limit 1e-12)"
        ),
    )
}

/// The change-of-basis relations exactly as printed: `(coefficient, index)`
/// terms, indices 1-based. First eight give beta_j over theta, last eight
/// theta_j over beta.
fn listed_relations() -> Vec<Vec<(f64, usize)>> {
    let q = 1.0 / (4.0 * S3);
    let t = 1.0 / (2.0 * S3);
    vec![
        vec![(1.0, 2), (-1.0, 5), (1.0, 7)],
        vec![(1.0, 1), (1.0, 4), (1.0, 6)],
        vec![(-S3 / 2.0, 3), (1.5, 8)],
        vec![(1.5, 3), (S3 / 2.0, 8)],
        vec![(S3 / 2.0, 1), (-0.5, 2), (-1.0, 5)],
        vec![(-0.5, 1), (-S3 / 2.0, 2), (1.0, 4)],
        vec![(-1.0, 2), (-S3 / 2.0, 4), (-0.5, 5), (S3 / 2.0, 6), (0.5, 7)],
        vec![(1.0, 1), (-0.5, 4), (S3 / 2.0, 5), (-1.0 / 6.0, 6), (S3 / 2.0, 7)],
        vec![(-q, 1), (0.25, 2), (S3 / 4.0, 5), (-0.25, 6), (-q, 7), (0.25, 8)],
        vec![(0.25, 1), (q, 2), (-0.25, 5), (-S3 / 4.0, 6), (-0.25, 7), (-q, 8)],
        vec![(-t, 3), (0.5, 4)],
        vec![(q, 1), (0.25, 2), (0.5, 6), (-t, 7)],
        vec![(-0.25, 1), (q, 2), (-0.5, 5), (t, 8)],
        vec![(0.5, 2), (-S3 / 4.0, 5), (-0.25, 6), (S3 / 4.0, 7), (-0.25, 8)],
        vec![(0.5, 1), (-0.25, 5), (S3 / 4.0, 6), (0.25, 7), (S3 / 4.0, 8)],
        vec![(0.5, 3), (t, 4)],
    ]
}

fn gell_mann_theta() -> Vec<ComplexMatrix> {
    let (o, l, i) = (c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0));
    let r = c(1.0 / S3, 0.0);
    [
        mat([[o, l, o], [l, o, o], [o, o, o]]),
        mat([[o, -i, o], [i, o, o], [o, o, o]]),
        mat([[l, o, o], [o, -l, o], [o, o, o]]),
        mat([[o, o, l], [o, o, o], [l, o, o]]),
        mat([[o, o, -i], [o, o, o], [i, o, o]]),
        mat([[o, o, o], [o, o, l], [o, l, o]]),
        mat([[o, o, o], [o, o, -i], [o, i, o]]),
        mat([[r, o, o], [o, r, o], [o, o, r * -2.0]]),
    ]
    .iter()
    .map(|lam| lam.scale(i))
    .collect()
}

fn combine(terms: &[(f64, usize)], basis: &[ComplexMatrix]) -> ComplexMatrix {
    terms.iter().fold(ComplexMatrix::zeros(3, 3), |acc, &(k, j)| &acc + &basis[j - 1].scale(c(k, 0.0)))
}

fn dense(rows: &[Vec<(f64, usize)>]) -> Vec<[f64; 8]> {
    rows.iter()
        .map(|terms| {
            let mut row = [0.0; 8];
            for &(k, j) in terms {
                row[j - 1] += k;
            }
            row
        })
        .collect()
}

fn criterion_11() -> Outcome {
    let ctx = AlgebraContext::new(3, 2).unwrap();
    let gens = GeneratorSet::new(&ctx).unwrap();
    let beta: Vec<ComplexMatrix> = tau_reference(&ctx)[1..].iter().map(|t| gens.represent(t).unwrap()).collect();
    let theta = gell_mann_theta();
    let relations = listed_relations();
    let mut failing = Vec::new();
    for (r, terms) in relations.iter().enumerate() {
        let (lhs, rhs, name) = if r < 8 {
            (&beta[r], combine(terms, &theta), format!("beta_{}", r + 1))
        } else {
            (&theta[r - 8], combine(terms, &beta), format!("theta_{}", r - 7))
        };
        let err = (lhs - &rhs).max_abs();
        if err > 1e-12 {
            failing.push(format!("{name} ({err:.3})"));
        }
    }
    let table = dense(&relations);
    let mut inverse_err: f64 = 0.0;
    for i in 0..8 {
        for j in 0..8 {
            let ab: f64 = (0..8).map(|k| table[i][k] * table[8 + k][j]).sum();
            inverse_err = inverse_err.max((ab - if i == j { 1.0 } else { 0.0 }).abs());
        }
    }
    let t = groups::su3_tables(&ctx).unwrap();
    let derived = groups::table_inverse_residual(&t.tau_to_theta, &t.theta_to_tau);
    check(
        failing.is_empty() && inverse_err <= 1e-12,
        format!(
            "{} of 16 listed relations fail {:?}; listed tables mutual-inverse error {inverse_err:.3} (limit 1e-12); tables derived from the matrices: inverse error {derived:.1e}",
            failing.len(),
            failing
        ),
    )
}

fn criterion_12() -> Outcome {
    let mut worst_unitary: f64 = 0.0;
    let mut worst_det: f64 = 0.0;
    let mut failures = 0;
    let mut configs = Vec::new();
    for ctx in configurations().into_iter().filter(|c| c.d() % 2 == 0) {
        configs.push(ctx.to_string());
        let basis = groups::special_unitary_lie_basis(&ctx);
        let mut rng = random::rng(12);
        for _ in 0..50 {
            let x = basis.random_element(&mut rng);
            let g = groups::exp_element(&x, EXP_TOL);
            let m = groups::membership(&g, 1e-8);
            if !(m.unitary && m.special_unitary) {
                failures += 1;
            }
            worst_unitary = worst_unitary.max(g.hermitian_conjugate().multiply(&g).unwrap().add_scalar(c(-1.0, 0.0)).norm());
            worst_det = worst_det.max((spectral::determinant(&g) - 1.0).norm());
        }
    }
    check(
        failures == 0,
        format!("{configs:?} x 50: {failures} failures; max |Ubar U - e| {worst_unitary:.2e}, max |Det - 1| {worst_det:.2e} (tol 1e-8)"),
    )
}

fn criterion_13() -> Outcome {
    over_configs(100, 13, 1e-9, |ctx, _, rng| {
        let u = random::element(ctx, rng);
        rel(spectral::determinant(&u), spectral::determinant(&u.hermitian_conjugate()).conj())
    })
}

fn criterion_14() -> Outcome {
    let exe = env!("CARGO_BIN_EXE_gencliff");
    let golden_path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/table_m3_d2.txt");
    let golden = std::fs::read(&golden_path).map_err(|e| format!("golden file: {e}"))?;
    let table = Command::new(exe).args(["table", "--m", "3", "--d", "2"]).output().map_err(|e| e.to_string())?;
    let identical = table.status.success() && table.stdout == golden;
    let start = Instant::now();
    let verify = Command::new(exe).arg("verify").output().map_err(|e| e.to_string())?;
    let secs = start.elapsed().as_secs_f64();
    let code = verify.status.code();
    check(
        identical && code == Some(0) && secs < 300.0,
        format!("table byte-identical: {identical}; verify on 12 algebras exit {code:?} in {secs:.1}s (limit 300s)"),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 14] = [
        ("multiplication table", criterion_1),
        ("representation matrices", criterion_2),
        ("hermitian conjugate vs conjugate transpose", criterion_3),
        ("trace vs matrix trace", criterion_4),
        ("determinant vs LU", criterion_5),
        ("determinant independent of representation", criterion_6),
        ("ternary closed forms", criterion_7),
        ("inverse", criterion_8),
        ("underline identities", criterion_9),
        ("Lie bases", criterion_10),
        ("Gell-Mann change of basis", criterion_11),
        ("exponential lands in SU", criterion_12),
        ("conjugate determinant", criterion_13),
        ("CLI golden table and verify", criterion_14),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let (status, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {:>2} {status}  {name}: {detail}", k + 1);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
