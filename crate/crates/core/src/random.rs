//! Seeded random elements and matrices for property checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::context::AlgebraContext;
use crate::element::AlgebraElement;
use crate::matrix::ComplexMatrix;
use crate::C64;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform in the square `[-1, 1] × [-1, 1]`.
pub fn complex<R: Rng>(rng: &mut R) -> C64 {
    C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

/// Element with independent coefficients from [`complex`].
pub fn element<R: Rng>(ctx: &AlgebraContext, rng: &mut R) -> AlgebraElement {
    let coeffs = (0..ctx.dim()).map(|_| complex(rng)).collect();
    AlgebraElement::from_coefficients(ctx, coeffs).expect("length matches")
}

/// Element with coefficients drawn from the unit disc.
pub fn disc_element<R: Rng>(ctx: &AlgebraContext, rng: &mut R) -> AlgebraElement {
    let coeffs = (0..ctx.dim())
        .map(|_| loop {
            let z = complex(rng);
            if z.norm_sqr() <= 1.0 {
                break z;
            }
        })
        .collect();
    AlgebraElement::from_coefficients(ctx, coeffs).expect("length matches")
}

/// Random matrix whose smallest LU pivot is at least `1e-6` of the largest.
pub fn invertible_matrix<R: Rng>(n: usize, rng: &mut R) -> ComplexMatrix {
    loop {
        let entries = (0..n * n).map(|_| complex(rng)).collect();
        let t = ComplexMatrix::new(n, n, entries).expect("square");
        let lu = t.lu().expect("square");
        if lu.min_pivot() >= 1e-6 * lu.max_pivot() {
            return t;
        }
    }
}

/// Random unitary matrix by Gram–Schmidt on the columns of a random matrix.
pub fn unitary_matrix<R: Rng>(n: usize, rng: &mut R) -> ComplexMatrix {
    let a = invertible_matrix(n, rng);
    let mut cols: Vec<Vec<C64>> = Vec::with_capacity(n);
    for j in 0..n {
        let mut v: Vec<C64> = (0..n).map(|i| a.get(i, j)).collect();
        // two passes keep the basis orthogonal to working precision
        for _ in 0..2 {
            for q in &cols {
                let dot: C64 = q.iter().zip(&v).map(|(x, y)| x.conj() * y).sum();
                v.iter_mut().zip(q).for_each(|(x, y)| *x -= dot * y);
            }
        }
        let norm = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        v.iter_mut().for_each(|x| *x /= norm);
        cols.push(v);
    }
    let mut u = ComplexMatrix::zeros(n, n);
    for (j, col) in cols.iter().enumerate() {
        for (i, &x) in col.iter().enumerate() {
            u.set(i, j, x);
        }
    }
    u
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_bounded() {
        let ctx = AlgebraContext::new(3, 2).unwrap();
        let a = element(&ctx, &mut rng(7));
        let b = element(&ctx, &mut rng(7));
        assert_eq!(a, b);
        assert!(a.coeffs().iter().all(|c| c.re.abs() <= 1.0 && c.im.abs() <= 1.0));
        assert!(disc_element(&ctx, &mut rng(1)).coeffs().iter().all(|c| c.norm() <= 1.0));
    }

    #[test]
    fn unitary_is_unitary() {
        let u = unitary_matrix(6, &mut rng(3));
        assert!(u.is_unitary(1e-12));
        let t = invertible_matrix(5, &mut rng(4));
        assert!(t.inverse().is_ok());
    }
}
