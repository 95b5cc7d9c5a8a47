//! Explicit shift/clock matrix representations `β` of `Cl^(1/m)_d`.
//!
//! Every generator is a Kronecker string of Weyl matrices. Writing a slot
//! operator as `P^a R^b` (up to phase), two strings satisfy
//! `XY = ω^s YX` with `s = Σ_slots (a b' - b a')`. With
//!
//! ```text
//! e_{2i-1} -> Y ⊗ ... ⊗ Y ⊗ P ⊗ I ⊗ ... ⊗ I      (i-1 copies of Y)
//! e_{2i}   -> Y ⊗ ... ⊗ Y ⊗ R ⊗ I ⊗ ... ⊗ I
//! ```
//!
//! and `Y ∝ P^{m-1} R`, every ordered pair picks up exactly one `ω`. For
//! `d = 2` this is the pair `(P, R)`. Odd `d` adds `Y ⊗ ... ⊗ Y` as the last
//! generator and spreads all of them over the `m` blocks
//! `diag(B, ωB, ..., ω^{m-1}B)`.

use crate::context::{AlgebraContext, ExponentTuple};
use crate::element::AlgebraElement;
use crate::error::Result;
use crate::matrix::ComplexMatrix;
use crate::{Error, C64};

/// The size-`m` building blocks.
#[derive(Debug, Clone, PartialEq)]
pub struct BaseMatrices {
    /// Cyclic shift, `P_{k,k+1} = 1`.
    pub p: ComplexMatrix,
    /// `Q` with `PQ = ωQP`.
    pub q: ComplexMatrix,
    /// Clock, `diag(1, ω, ..., ω^{m-1})`.
    pub r: ComplexMatrix,
    /// `P^{m-1} R`, times `ζ` for even `m` so that `Y^m = I`.
    pub y: ComplexMatrix,
}

pub fn base_matrices(m: u32) -> Result<BaseMatrices> {
    if m < 2 {
        return Err(Error::Parameter {
            m,
            d: 0,
            reason: "m must be at least 2".into(),
        });
    }
    let ctx = AlgebraContext::new(m, 1)?;
    let n = m as usize;
    let even = m % 2 == 0;
    let mut p = ComplexMatrix::zeros(n, n);
    let mut q = ComplexMatrix::zeros(n, n);
    for k in 0..n {
        p.set(k, (k + 1) % n, C64::new(1.0, 0.0));
        let entry = if k + 1 < n {
            if even {
                ctx.zeta_pow(2 * k as i64 + 1)
            } else {
                ctx.omega_pow(k as i64 + 1)
            }
        } else if even {
            ctx.zeta_pow(2 * n as i64 - 1)
        } else {
            C64::new(1.0, 0.0)
        };
        q.set(k, (k + 1) % n, entry);
    }
    let p_inv = p.pow(m - 1)?;
    let phase = if even { ctx.zeta() } else { C64::new(1.0, 0.0) };
    let mut r = p_inv.mat_mul(&q)?.scale(phase);
    // R is diagonal; drop the rounding noise of the product.
    for i in 0..n {
        for j in 0..n {
            if i != j {
                r.set(i, j, C64::new(0.0, 0.0));
            } else {
                r.set(i, i, ctx.omega_pow(i as i64));
            }
        }
    }
    let y = p_inv.mat_mul(&r)?.scale(phase);
    Ok(BaseMatrices { p, q, r, y })
}

/// The matrices `β(e_1), ..., β(e_d)` of size `N`.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    ctx: AlgebraContext,
    gens: Vec<ComplexMatrix>,
}

impl GeneratorSet {
    pub fn new(ctx: &AlgebraContext) -> Result<Self> {
        let base = base_matrices(ctx.m())?;
        let d = ctx.d() as usize;
        let slots = d / 2;
        let identity = ComplexMatrix::identity(ctx.m() as usize);
        let string = |i: usize, head: &ComplexMatrix| {
            let mut factors: Vec<&ComplexMatrix> = vec![&base.y; i];
            factors.push(head);
            factors.extend(std::iter::repeat_n(&identity, slots - i - 1));
            ComplexMatrix::kron_all(factors)
        };
        let mut gens = Vec::with_capacity(d);
        for i in 0..slots {
            gens.push(string(i, &base.p));
            gens.push(string(i, &base.r));
        }
        if d % 2 == 1 {
            gens.push(ComplexMatrix::kron_all(std::iter::repeat_n(&base.y, slots)));
            gens = gens
                .into_iter()
                .map(|g| {
                    let blocks: Vec<ComplexMatrix> = (0..ctx.m())
                        .map(|j| g.scale(ctx.omega_pow(j as i64)))
                        .collect();
                    ComplexMatrix::block_diag(&blocks)
                })
                .collect();
        }
        debug_assert!(gens.iter().all(|g| g.rows() == ctx.rep_size()));
        Ok(GeneratorSet { ctx: *ctx, gens })
    }

    pub fn context(&self) -> &AlgebraContext {
        &self.ctx
    }

    /// `β(e_k)`, 1-based.
    pub fn generator(&self, k: usize) -> &ComplexMatrix {
        &self.gens[k - 1]
    }

    pub fn generators(&self) -> &[ComplexMatrix] {
        &self.gens
    }

    /// `β(E_J) = β(e_1)^{j_1} ... β(e_d)^{j_d}`.
    pub fn monomial_image(&self, j: &ExponentTuple) -> ComplexMatrix {
        let n = self.ctx.rep_size();
        let mut acc = ComplexMatrix::identity(n);
        for (g, &k) in self.gens.iter().zip(j.exponents()) {
            for _ in 0..k {
                acc = acc.mat_mul(g).expect("square generators");
            }
        }
        acc
    }

    /// `β(U) = Σ_J u_J β(E_J)`.
    pub fn represent(&self, u: &AlgebraElement) -> Result<ComplexMatrix> {
        self.ctx.check_same(u.context())?;
        let n = self.ctx.rep_size();
        let mut out = ComplexMatrix::zeros(n, n);
        for (j, c) in u.terms() {
            out = out.mat_add(&self.monomial_image(&j).scale(c))?;
        }
        Ok(out)
    }

    /// `T^{-1} β(Û^{(shift)}) T`: another faithful representation of minimal
    /// size, obtained by conjugation and the `ω`-shifted generator family.
    pub fn alternative_representation(
        &self,
        u: &AlgebraElement,
        t: &ComplexMatrix,
        shift: u32,
    ) -> Result<ComplexMatrix> {
        let m = self.ctx.m();
        if shift >= m {
            return Err(Error::ResidueOutOfRange {
                residue: shift as i64,
                m,
            });
        }
        let t_inv = t.inverse()?;
        let inner = self.represent(&u.grade_automorphism(shift))?;
        t_inv.mat_mul(&inner)?.mat_mul(t)
    }
}

/// Convenience wrapper: `β(U)` with a freshly built generator set.
pub fn represent(u: &AlgebraElement) -> Result<ComplexMatrix> {
    GeneratorSet::new(u.context())?.represent(u)
}
