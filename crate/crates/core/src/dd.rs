//! Double-double arithmetic for the Faddeev–LeVerrier recursion.
//!
//! The recursion cancels heavily: for `N = 25` roughly seven digits of a
//! double are lost between the iterates and the final coefficients. Carrying
//! the iterates as unevaluated sums `hi + lo` (about 32 significant digits)
//! keeps the rounded results accurate to full double precision.

use std::ops::{Add, Mul, Neg, Sub};

use crate::context::{root_of_unity, AlgebraContext};
use crate::C64;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub(crate) struct Dd {
    hi: f64,
    lo: f64,
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

// Veltkamp split; avoids depending on a hardware fused multiply-add.
fn split(a: f64) -> (f64, f64) {
    const SPLITTER: f64 = 134_217_729.0; // 2^27 + 1
    let t = SPLITTER * a;
    let hi = t - (t - a);
    (hi, a - hi)
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (ah, al) = split(a);
    let (bh, bl) = split(b);
    (p, ((ah * bh - p) + ah * bl + al * bh) + al * bl)
}

impl Dd {
    pub(crate) fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    pub(crate) fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    /// `self / b` for a double divisor.
    pub(crate) fn div_f64(self, b: f64) -> Self {
        let q1 = self.hi / b;
        let (p, e) = two_prod(q1, b);
        let (s, t) = two_sum(self.hi, -p);
        let q2 = (s + (t - e + self.lo)) / b;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }
    }

    pub(crate) fn mul_f64(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        let (hi, lo) = quick_two_sum(p, e + self.lo * b);
        Dd { hi, lo }
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, b: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, b: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, b.hi);
        let (hi, lo) = quick_two_sum(p, e + (self.hi * b.lo + self.lo * b.hi));
        Dd { hi, lo }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub(crate) struct DdComplex {
    pub(crate) re: Dd,
    pub(crate) im: Dd,
}

impl DdComplex {
    pub(crate) fn from_c64(c: C64) -> Self {
        DdComplex {
            re: Dd::from_f64(c.re),
            im: Dd::from_f64(c.im),
        }
    }

    pub(crate) fn to_c64(self) -> C64 {
        C64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub(crate) fn is_zero(self) -> bool {
        self.re.hi == 0.0 && self.im.hi == 0.0
    }

    pub(crate) fn div_f64(self, b: f64) -> Self {
        DdComplex {
            re: self.re.div_f64(b),
            im: self.im.div_f64(b),
        }
    }

    pub(crate) fn mul_f64(self, b: f64) -> Self {
        DdComplex {
            re: self.re.mul_f64(b),
            im: self.im.mul_f64(b),
        }
    }

    /// Product with a double-precision complex number.
    pub(crate) fn mul_c64(self, b: C64) -> Self {
        DdComplex {
            re: self.re.mul_f64(b.re) - self.im.mul_f64(b.im),
            im: self.re.mul_f64(b.im) + self.im.mul_f64(b.re),
        }
    }
}

impl Add for DdComplex {
    type Output = DdComplex;
    fn add(self, b: DdComplex) -> DdComplex {
        DdComplex {
            re: self.re + b.re,
            im: self.im + b.im,
        }
    }
}

impl Sub for DdComplex {
    type Output = DdComplex;
    fn sub(self, b: DdComplex) -> DdComplex {
        DdComplex {
            re: self.re - b.re,
            im: self.im - b.im,
        }
    }
}

impl Mul for DdComplex {
    type Output = DdComplex;
    fn mul(self, b: DdComplex) -> DdComplex {
        DdComplex {
            re: self.re * b.re - self.im * b.im,
            im: self.re * b.im + self.im * b.re,
        }
    }
}

/// `ω^k` for `k = 0..m` to double-double accuracy: the double value is
/// refined by one Newton step on `z^m = 1`, `z ← z - z (z^m - 1) / m`.
pub(crate) fn omega_powers(m: u32) -> Vec<DdComplex> {
    let one = DdComplex::from_c64(C64::new(1.0, 0.0));
    (0..m as i64)
        .map(|k| {
            let z = DdComplex::from_c64(root_of_unity(k, m));
            let mut zm = one;
            for _ in 0..m {
                zm = zm * z;
            }
            z - (z * (zm - one)).div_f64(m as f64)
        })
        .collect()
}

/// `U V` with `U` in double and `V` in double-double, accumulated in
/// double-double. Same monomial bookkeeping as `AlgebraElement::multiply`.
pub(crate) fn left_multiply(
    ctx: &AlgebraContext,
    u: &[C64],
    v: &[DdComplex],
    powers: &[DdComplex],
) -> Vec<DdComplex> {
    let m = ctx.m() as usize;
    let d = ctx.d() as usize;
    let place: Vec<usize> = (0..d).map(|a| m.pow((d - 1 - a) as u32)).collect();
    let mut rhs = Vec::new();
    let mut digits = vec![0u32; d];
    for (idx, &c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        ctx.decode_into(idx, &mut digits);
        let mut prefix = 0usize;
        let mut entry = Vec::with_capacity(2 * d);
        for &k in &digits {
            entry.push(k as usize);
            entry.push(prefix);
            prefix = (prefix + k as usize) % m;
        }
        rhs.push((entry, c));
    }
    let mut out = vec![DdComplex::default(); ctx.dim()];
    let mut jd = vec![0u32; d];
    for (idx, &a) in u.iter().enumerate() {
        if a == C64::new(0.0, 0.0) {
            continue;
        }
        ctx.decode_into(idx, &mut jd);
        for (entry, c) in &rhs {
            let mut acc = 0usize;
            let mut target = 0usize;
            for t in 0..d {
                let j = jd[t] as usize;
                let (k, prefix) = (entry[2 * t], entry[2 * t + 1]);
                acc += j * prefix;
                let sum = j + k;
                target += if sum >= m { sum - m } else { sum } * place[t];
            }
            let phase = (m - acc % m) % m;
            let term = c.mul_c64(a);
            out[target] = out[target] + if phase == 0 { term } else { term * powers[phase] };
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_keep_the_low_part() {
        let third = Dd::from_f64(1.0).div_f64(3.0);
        let back = third.mul_f64(3.0) - Dd::from_f64(1.0);
        assert!(back.to_f64().abs() < 1e-31);
        let x = Dd::from_f64(1.0 + 2f64.powi(-40));
        let sq = x * x - Dd::from_f64(1.0 + 2f64.powi(-39));
        assert_eq!(sq.to_f64(), 2f64.powi(-80));
    }

    #[test]
    fn refined_roots_of_unity() {
        for m in [3u32, 5, 7, 12] {
            let powers = omega_powers(m);
            let w = powers[1];
            let mut z = DdComplex::from_c64(C64::new(1.0, 0.0));
            for _ in 0..m {
                z = z * w;
            }
            let err = z - DdComplex::from_c64(C64::new(1.0, 0.0));
            assert!(err.re.to_f64().abs() < 1e-30 && err.im.to_f64().abs() < 1e-30, "m={m}");
            // cos(2π/5) = (√5 - 1)/4
            if m == 5 {
                let exact = (5f64.sqrt() - 1.0) / 4.0;
                assert!((w.re.to_f64() - exact).abs() < 1e-16);
            }
        }
    }
}
