//! Algebra descriptors, exponent tuples and exact phase arithmetic on basis
//! monomials.
//!
//! A basis monomial `e_1^{j_1} ... e_d^{j_d}` is identified by its exponent
//! tuple `J = (j_1, ..., j_d)` with `0 <= j_a < m`. Its linear index is the
//! mixed-radix number `Σ_a j_a m^(d-a)`, so `j_1` is the most significant
//! digit. Products of monomials only ever pick up a power of `ω`, which is
//! tracked as an integer modulo `m`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::C64;

/// Size bounds applied when constructing an [`AlgebraContext`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Upper bound on the algebra dimension `m^d`.
    pub max_dim: u64,
    /// Upper bound on the representation size `N`.
    pub max_rep: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_dim: 4096,
            max_rep: 729,
        }
    }
}

impl Limits {
    pub fn unbounded() -> Self {
        Limits {
            max_dim: u64::MAX,
            max_rep: u64::MAX,
        }
    }
}

/// `e^{2πi k / n}`, exact at multiples of a quarter turn and conjugate
/// symmetric in `k`.
pub fn root_of_unity(k: i64, n: u32) -> C64 {
    let n = n as i64;
    let k = k.rem_euclid(n);
    if (4 * k) % n == 0 {
        return match 4 * k / n {
            0 => C64::new(1.0, 0.0),
            1 => C64::new(0.0, 1.0),
            2 => C64::new(-1.0, 0.0),
            _ => C64::new(0.0, -1.0),
        };
    }
    if 2 * k > n {
        return root_of_unity(n - k, n as u32).conj();
    }
    let theta = std::f64::consts::TAU * k as f64 / n as f64;
    C64::new(theta.cos(), theta.sin())
}

/// Immutable descriptor of `Cl^(1/m)_d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlgebraContext {
    m: u32,
    d: u32,
    dim: usize,
    rep_size: usize,
}

impl AlgebraContext {
    /// Builds the context with the default [`Limits`].
    pub fn new(m: u32, d: u32) -> Result<Self> {
        Self::with_limits(m, d, Limits::default())
    }

    pub fn with_limits(m: u32, d: u32, limits: Limits) -> Result<Self> {
        if m < 2 {
            return Err(Error::Parameter {
                m,
                d,
                reason: "m must be at least 2".into(),
            });
        }
        if d < 1 {
            return Err(Error::Parameter {
                m,
                d,
                reason: "d must be at least 1".into(),
            });
        }
        let dim = checked_pow(m, d).filter(|&v| v <= limits.max_dim).ok_or(Error::SizeCap {
            what: "m^d",
            value: checked_pow(m, d).unwrap_or(u64::MAX),
            limit: limits.max_dim,
        })?;
        let half = d.div_ceil(2);
        let rep = checked_pow(m, half).filter(|&v| v <= limits.max_rep).ok_or(Error::SizeCap {
            what: "N",
            value: checked_pow(m, half).unwrap_or(u64::MAX),
            limit: limits.max_rep,
        })?;
        Ok(AlgebraContext {
            m,
            d,
            dim: dim as usize,
            rep_size: rep as usize,
        })
    }

    /// Order of the generators.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Number of generators.
    pub fn d(&self) -> u32 {
        self.d
    }

    /// Algebra dimension `m^d`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Size `N = m^⌊(d+1)/2⌋` of the minimal faithful matrix representation.
    pub fn rep_size(&self) -> usize {
        self.rep_size
    }

    /// Largest grade, `d(m-1)`.
    pub fn max_grade(&self) -> u32 {
        self.d * (self.m - 1)
    }

    pub fn omega(&self) -> C64 {
        self.omega_pow(1)
    }

    /// `ω^k` for any integer `k`.
    pub fn omega_pow(&self, k: i64) -> C64 {
        root_of_unity(k, self.m)
    }

    /// `ζ = exp(iπ/m)`, the principal square root of `ω`.
    pub fn zeta(&self) -> C64 {
        self.zeta_pow(1)
    }

    pub fn zeta_pow(&self, k: i64) -> C64 {
        root_of_unity(k, 2 * self.m)
    }

    pub(crate) fn check_same(&self, other: &AlgebraContext) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ContextMismatch {
                m1: self.m,
                d1: self.d,
                m2: other.m,
                d2: other.d,
            })
        }
    }

    /// Writes the exponent digits of `index` into `out` (length `d`).
    pub(crate) fn decode_into(&self, mut index: usize, out: &mut [u32]) {
        let m = self.m as usize;
        for slot in out.iter_mut().rev() {
            *slot = (index % m) as u32;
            index /= m;
        }
    }

    pub(crate) fn encode(&self, exps: &[u32]) -> usize {
        exps.iter()
            .fold(0usize, |acc, &j| acc * self.m as usize + j as usize)
    }

    /// Grade (exponent sum) of the monomial at `index`.
    pub fn grade_of_index(&self, mut index: usize) -> u32 {
        let m = self.m as usize;
        let mut g = 0;
        for _ in 0..self.d {
            g += (index % m) as u32;
            index /= m;
        }
        g
    }

    /// `E_J E_K = ω^q E_{(J+K) mod m}`, with `q = -Σ_{a<b} j_b k_a (mod m)`.
    pub fn monomial_product(&self, j: &ExponentTuple, k: &ExponentTuple) -> PhasedMonomial {
        let (phase, exps) = product_digits(self.m, &j.0, &k.0);
        PhasedMonomial {
            phase,
            exponents: ExponentTuple(exps),
        }
    }

    /// `E_J^{-1} = ω^q E_{(-J) mod m}`, with `q = -Σ_{a<b} j_a j_b (mod m)`.
    pub fn monomial_inverse(&self, j: &ExponentTuple) -> PhasedMonomial {
        let (phase, exps) = inverse_digits(self.m, &j.0);
        PhasedMonomial {
            phase,
            exponents: ExponentTuple(exps),
        }
    }

    /// Iterator over every exponent tuple in linear-index order.
    pub fn monomials(&self) -> impl Iterator<Item = ExponentTuple> + '_ {
        (0..self.dim).map(move |i| ExponentTuple::from_index(self, i))
    }
}

impl AlgebraContext {
    /// Non-scalar monomials in presentation order: by grade, then pure
    /// powers before mixed products, then with `e_1`'s exponent as the least
    /// significant digit. For `Cl^(1/3)_2` this is
    /// `e1, e2, e1^2, e2^2, e1*e2, e1^2*e2, e1*e2^2, e1^2*e2^2`.
    pub fn display_order(&self) -> Vec<ExponentTuple> {
        let mut out: Vec<ExponentTuple> = self.monomials().filter(|j| !j.is_zero()).collect();
        let m = self.m as usize;
        out.sort_by_key(|j| {
            let support = j.0.iter().filter(|&&x| x != 0).count();
            let reversed = j.0.iter().rev().fold(0usize, |acc, &x| acc * m + x as usize);
            (j.grade(), support, reversed)
        });
        out
    }
}

impl fmt::Display for AlgebraContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl^(1/{})_{}", self.m, self.d)
    }
}

fn checked_pow(base: u32, exp: u32) -> Option<u64> {
    (base as u64).checked_pow(exp)
}

pub(crate) fn product_digits(m: u32, j: &[u32], k: &[u32]) -> (u32, Vec<u32>) {
    let m64 = m as u64;
    // Σ_{a<b} j_b k_a, accumulated with a running prefix sum of k.
    let mut prefix = 0u64;
    let mut acc = 0u64;
    for (jb, kb) in j.iter().zip(k) {
        acc = (acc + *jb as u64 * prefix) % m64;
        prefix = (prefix + *kb as u64) % m64;
    }
    let phase = ((m64 - acc) % m64) as u32;
    let exps = j.iter().zip(k).map(|(a, b)| (a + b) % m).collect();
    (phase, exps)
}

pub(crate) fn inverse_digits(m: u32, j: &[u32]) -> (u32, Vec<u32>) {
    let m64 = m as u64;
    let mut prefix = 0u64;
    let mut acc = 0u64;
    for &jb in j {
        acc = (acc + jb as u64 * prefix) % m64;
        prefix = (prefix + jb as u64) % m64;
    }
    let phase = ((m64 - acc) % m64) as u32;
    let exps = j.iter().map(|&a| (m - a) % m).collect();
    (phase, exps)
}

/// Exponent tuple `(j_1, ..., j_d)` of a basis monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExponentTuple(Vec<u32>);

impl ExponentTuple {
    pub fn new(ctx: &AlgebraContext, exps: &[u32]) -> Result<Self> {
        if exps.len() != ctx.d as usize {
            return Err(Error::Exponents(format!(
                "expected {} exponents, got {}",
                ctx.d,
                exps.len()
            )));
        }
        if let Some(bad) = exps.iter().find(|&&j| j >= ctx.m) {
            return Err(Error::Exponents(format!(
                "exponent {bad} not in 0..{}",
                ctx.m
            )));
        }
        Ok(ExponentTuple(exps.to_vec()))
    }

    pub fn zero(ctx: &AlgebraContext) -> Self {
        ExponentTuple(vec![0; ctx.d as usize])
    }

    /// Tuple for the single generator `e_k` (1-based).
    pub fn generator(ctx: &AlgebraContext, k: u32) -> Result<Self> {
        if k == 0 || k > ctx.d {
            return Err(Error::Exponents(format!(
                "generator e{k} not in e1..e{}",
                ctx.d
            )));
        }
        let mut exps = vec![0; ctx.d as usize];
        exps[k as usize - 1] = 1;
        Ok(ExponentTuple(exps))
    }

    pub fn from_index(ctx: &AlgebraContext, index: usize) -> Self {
        let mut exps = vec![0; ctx.d as usize];
        ctx.decode_into(index, &mut exps);
        ExponentTuple(exps)
    }

    pub fn index(&self, ctx: &AlgebraContext) -> usize {
        ctx.encode(&self.0)
    }

    pub fn grade(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&j| j == 0)
    }
}

impl fmt::Display for ExponentTuple {
    /// Monomial notation, e.g. `e1^2*e2`; the zero tuple prints as `e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("e");
        }
        let mut first = true;
        for (a, &j) in self.0.iter().enumerate() {
            if j == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "e{}", a + 1)?;
            if j > 1 {
                write!(f, "^{j}")?;
            }
        }
        Ok(())
    }
}

/// `ω^phase · E_J`, the result of a basis-level product.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PhasedMonomial {
    /// Exponent of `ω`, always in `0..m`.
    pub phase: u32,
    pub exponents: ExponentTuple,
}
