//! Complex numerics shared by the sampled checks: double precision and a
//! fixed-point big-integer complex type for high-precision retries.

use crate::exactfield::CycElem;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{FromPrimitive, One, ToPrimitive, Zero};
use std::ops::{Add, Div, Mul, Neg, Sub};

pub trait CNum:
    Clone + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Div<Output = Self> + Neg<Output = Self>
{
    /// A number of the same precision as `self`.
    fn lift(&self, z: Complex64) -> Self;
    fn lift_cyc(&self, c: &CycElem) -> Self;
    fn approx(&self) -> Complex64;
    fn norm(&self) -> f64 {
        self.approx().norm()
    }
    fn zero_like(&self) -> Self {
        self.lift(Complex64::new(0.0, 0.0))
    }
    fn one_like(&self) -> Self {
        self.lift(Complex64::new(1.0, 0.0))
    }
    /// Principal n-th root.
    fn root(&self, n: u32) -> Self;
}

impl CNum for Complex64 {
    fn lift(&self, z: Complex64) -> Self {
        z
    }
    fn lift_cyc(&self, c: &CycElem) -> Self {
        c.to_c64()
    }
    fn approx(&self) -> Complex64 {
        *self
    }
    fn root(&self, n: u32) -> Self {
        if self.norm() == 0.0 {
            return *self;
        }
        self.powf(1.0 / n as f64)
    }
}

/// Complex number (re + i·im)·2^{-prec} with big-integer mantissas.
#[derive(Clone, Debug, PartialEq)]
pub struct Fx {
    pub re: BigInt,
    pub im: BigInt,
    pub prec: u32,
}

fn f64_to_fixed(x: f64, prec: u32) -> BigInt {
    let m = BigInt::from_f64((x * 2f64.powi(60)).round()).unwrap_or_default();
    if prec >= 60 {
        m << (prec - 60)
    } else {
        m >> (60 - prec)
    }
}

fn fixed_to_f64(x: &BigInt, prec: u32) -> f64 {
    let bits = x.bits() as i64;
    let sh = (bits - 60).max(0) as u32;
    (x >> sh).to_f64().unwrap_or(f64::NAN) * 2f64.powi(sh as i32 - prec as i32)
}

impl Fx {
    pub fn new(z: Complex64, prec: u32) -> Self {
        Fx { re: f64_to_fixed(z.re, prec), im: f64_to_fixed(z.im, prec), prec }
    }

    fn shr(&self, x: BigInt) -> BigInt {
        x.div_floor(&(BigInt::one() << self.prec))
    }

    fn pow_u(&self, n: u32) -> Self {
        let mut acc = self.one_like();
        for _ in 0..n {
            acc = acc * self.clone();
        }
        acc
    }
}

impl Add for Fx {
    type Output = Fx;
    fn add(self, o: Fx) -> Fx {
        Fx { re: self.re + o.re, im: self.im + o.im, prec: self.prec }
    }
}

impl Sub for Fx {
    type Output = Fx;
    fn sub(self, o: Fx) -> Fx {
        Fx { re: self.re - o.re, im: self.im - o.im, prec: self.prec }
    }
}

impl Neg for Fx {
    type Output = Fx;
    fn neg(self) -> Fx {
        Fx { re: -self.re, im: -self.im, prec: self.prec }
    }
}

impl Mul for Fx {
    type Output = Fx;
    fn mul(self, o: Fx) -> Fx {
        let re = self.shr(&self.re * &o.re - &self.im * &o.im);
        let im = self.shr(&self.re * &o.im + &self.im * &o.re);
        Fx { re, im, prec: self.prec }
    }
}

impl Div for Fx {
    type Output = Fx;
    fn div(self, o: Fx) -> Fx {
        let den = &o.re * &o.re + &o.im * &o.im;
        if den.is_zero() {
            let nan = Complex64::new(f64::NAN, f64::NAN);
            return Fx { re: BigInt::zero(), im: BigInt::zero(), prec: self.prec }.lift(nan);
        }
        let nr = (&self.re * &o.re + &self.im * &o.im) << self.prec;
        let ni = (&self.im * &o.re - &self.re * &o.im) << self.prec;
        Fx { re: nr.div_floor(&den), im: ni.div_floor(&den), prec: self.prec }
    }
}

impl CNum for Fx {
    fn lift(&self, z: Complex64) -> Self {
        Fx::new(z, self.prec)
    }
    fn lift_cyc(&self, c: &CycElem) -> Self {
        let (re, im) = c.embed_complex(self.prec + 16).mid_fixed(self.prec);
        Fx { re, im, prec: self.prec }
    }
    fn approx(&self) -> Complex64 {
        Complex64::new(fixed_to_f64(&self.re, self.prec), fixed_to_f64(&self.im, self.prec))
    }
    fn root(&self, n: u32) -> Self {
        let a = self.approx();
        if a.norm() == 0.0 {
            return self.clone();
        }
        let mut y = self.lift(a.powf(1.0 / n as f64));
        let nn = self.lift(Complex64::new(n as f64, 0.0));
        let iters = 4 + (self.prec as f64 / 50.0).log2().ceil().max(0.0) as usize;
        for _ in 0..iters {
            let yn1 = y.pow_u(n - 1);
            let f = y.clone() * yn1.clone() - self.clone();
            y = y - f / (nn.clone() * yn1);
        }
        y
    }
}

/// All complex roots of Σ c_k x^k (Durand–Kerner), polished by Newton.
pub fn poly_roots(c: &[Complex64]) -> Vec<Complex64> {
    let mut c: Vec<Complex64> = c.to_vec();
    while c.len() > 1 && c.last().unwrap().norm() == 0.0 {
        c.pop();
    }
    let n = c.len() - 1;
    if n == 0 {
        return vec![];
    }
    let lead = c[n];
    let m: Vec<Complex64> = c.iter().map(|x| x / lead).collect();
    let eval = |x: Complex64| m.iter().rev().fold(Complex64::new(0.0, 0.0), |a, k| a * x + k);
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32)).collect();
    for _ in 0..500 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            let step = eval(z[i]) / den;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    z.iter().map(|&r| newton_polish(&m, r)).collect()
}

fn newton_polish(m: &[Complex64], mut x: Complex64) -> Complex64 {
    for _ in 0..5 {
        let (mut f, mut df) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
        for k in m.iter().rev() {
            df = df * x + f;
            f = f * x + k;
        }
        if df.norm() == 0.0 {
            break;
        }
        x -= f / df;
    }
    x
}

/// Newton refinement of a root of Σ c_k x^k in any precision.
pub fn refine_root<T: CNum>(c: &[T], x0: T, iters: usize) -> T {
    let mut x = x0;
    for _ in 0..iters {
        let mut f = x.zero_like();
        let mut df = x.zero_like();
        for k in c.iter().rev() {
            df = df * x.clone() + f.clone();
            f = f * x.clone() + k.clone();
        }
        if df.norm() == 0.0 {
            break;
        }
        x = x.clone() - f / df;
    }
    x
}

/// Angle between two points of complex projective space.
pub fn projective_angle(a: &[Complex64], b: &[Complex64]) -> f64 {
    let na = a.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
    let nb = b.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
    let ip: Complex64 = a.iter().zip(b).map(|(x, y)| y.conj() * x).sum();
    if ip.norm() == 0.0 {
        return std::f64::consts::FRAC_PI_2;
    }
    let ph = ip / ip.norm();
    let d = a.iter().zip(b).map(|(x, y)| (x / na - ph * y / nb).norm_sqr()).sum::<f64>().sqrt();
    2.0 * (d / 2.0).min(1.0).asin()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_point_arithmetic() {
        let a = Fx::new(Complex64::new(1.5, -2.0), 128);
        let b = Fx::new(Complex64::new(0.25, 3.0), 128);
        let q = (a.clone() * b.clone()) / b;
        assert!((q - a).norm() < 1e-35);
    }

    #[test]
    fn fifth_root_high_precision() {
        let a = Fx::new(Complex64::new(-2.0, 1.0), 160);
        let r = a.root(5);
        let back = r.pow_u(5);
        assert!((back - a).norm() < 1e-40);
    }

    #[test]
    fn cyclotomic_lift() {
        let one = Fx::new(Complex64::new(1.0, 0.0), 128);
        let w = one.lift_cyc(&CycElem::omega());
        let w3 = w.clone() * w.clone() * w;
        assert!((w3 - one).norm() < 1e-35);
    }

    #[test]
    fn quartic_roots() {
        // (x−1)(x+2)(x−i)(x+3i)
        let rts = [Complex64::new(1.0, 0.0), Complex64::new(-2.0, 0.0), Complex64::new(0.0, 1.0), Complex64::new(0.0, -3.0)];
        let mut c = vec![Complex64::new(1.0, 0.0)];
        for r in rts {
            let mut n = vec![Complex64::new(0.0, 0.0); c.len() + 1];
            for (i, k) in c.iter().enumerate() {
                n[i + 1] += k;
                n[i] -= k * r;
            }
            c = n;
        }
        let found = poly_roots(&c);
        for r in rts {
            assert!(found.iter().any(|f| (f - r).norm() < 1e-12));
        }
    }

    #[test]
    fn angle_is_projective() {
        let a = [Complex64::new(1.0, 0.0), Complex64::new(0.0, 2.0)];
        let b: Vec<Complex64> = a.iter().map(|x| x * Complex64::new(0.3, -4.0)).collect();
        assert!(projective_angle(&a, &b) < 1e-14);
        let c = [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)];
        let d = [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)];
        assert!((projective_angle(&c, &d) - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
    }
}
