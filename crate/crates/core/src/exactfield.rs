//! Exact arithmetic in ℚ and in the cyclotomic field ℚ(η), η a primitive
//! 15th root of unity, with outward-rounded complex interval embeddings.

use num_bigint::{BigInt, Sign};
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

pub type Rat = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `p/q` or an integer.
pub fn parse_rat(s: &str) -> Result<Rat, FieldError> {
    let s = s.trim();
    let err = || FieldError::Parse(s.to_string());
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| err())?;
            let q: BigInt = q.trim().parse().map_err(|_| err())?;
            if q.is_zero() {
                return Err(err());
            }
            Ok(Rat::new(p, q))
        }
        None => Ok(Rat::from_integer(s.parse().map_err(|_| err())?)),
    }
}

pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Σ num[i]/den · η^i reduced modulo Φ₁₅.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycElem {
    num: [BigInt; 8],
    den: BigInt,
}

fn zero8() -> [BigInt; 8] {
    std::array::from_fn(|_| BigInt::zero())
}

impl CycElem {
    fn normalized(mut num: [BigInt; 8], mut den: BigInt) -> Self {
        if den.is_negative() {
            den = -den;
            for c in num.iter_mut() {
                *c = -&*c;
            }
        }
        let mut g = den.clone();
        for c in num.iter() {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if num.iter().all(|c| c.is_zero()) {
            return CycElem { num, den: BigInt::one() };
        }
        if !g.is_one() {
            for c in num.iter_mut() {
                *c = &*c / &g;
            }
            den = den / g;
        }
        CycElem { num, den }
    }

    pub fn zero() -> Self {
        CycElem { num: zero8(), den: BigInt::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        let mut num = zero8();
        num[0] = BigInt::from(n);
        CycElem { num, den: BigInt::one() }
    }

    pub fn from_rat(r: &Rat) -> Self {
        let mut num = zero8();
        num[0] = r.numer().clone();
        Self::normalized(num, r.denom().clone())
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Self::from_rat(&rat(n, d))
    }

    /// Builds Σ c[i] η^i from rational coefficients (any length; reduced).
    pub fn from_coeffs(c: &[Rat]) -> Self {
        let mut acc = Self::zero();
        for (i, r) in c.iter().enumerate() {
            if !r.is_zero() {
                acc = &acc + &(&Self::eta_pow(i as i64) * &Self::from_rat(r));
            }
        }
        acc
    }

    /// Integer coefficients in the basis 1, η, …, η⁷.
    pub fn from_ints(c: [i64; 8]) -> Self {
        Self::normalized(c.map(BigInt::from), BigInt::one())
    }

    pub fn eta_pow(k: i64) -> Self {
        let k = k.rem_euclid(15) as usize;
        let mut r = vec![BigInt::zero(); 15];
        r[k] = BigInt::one();
        Self::normalized(reduce15(r), BigInt::one())
    }

    pub fn eta() -> Self {
        Self::eta_pow(1)
    }

    /// ζ = η³, a primitive 5th root of unity.
    pub fn zeta() -> Self {
        Self::eta_pow(3)
    }

    /// ω = η⁵, a primitive cube root of unity.
    pub fn omega() -> Self {
        Self::eta_pow(5)
    }

    /// √5 = ζ + ζ⁴ − ζ² − ζ³, positive under η ↦ e^{2πi/15}.
    pub fn sqrt5() -> Self {
        &(&Self::eta_pow(3) + &Self::eta_pow(12)) - &(&Self::eta_pow(6) + &Self::eta_pow(9))
    }

    /// ω − ω² = i√3.
    pub fn i_sqrt3() -> Self {
        &Self::omega() - &Self::eta_pow(10)
    }

    /// The fixed point constant w_∞ of the order-5 Möbius map.
    pub fn w_infinity() -> Self {
        Self::from_ints([2, -1, 0, 1, -1, 1, 0, -2])
    }

    /// Coefficient b of the conifold line family Υ.
    pub fn upsilon_b() -> Self {
        Self::from_ints([0, -2, -1, 1, -2, 1, 0, -1])
    }

    pub fn upsilon_c() -> Self {
        Self::from_ints([2, -2, -2, 2, -2, 1, 0, -2])
    }

    pub fn upsilon_d() -> Self {
        Self::from_ints([5, 0, -10, 10, 0, 0, 0, -10])
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(|c| c.is_zero())
    }

    /// Some(q) when the element lies in ℚ.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.num[1..].iter().all(|c| c.is_zero()) {
            Some(Rat::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    pub fn coeffs(&self) -> [Rat; 8] {
        std::array::from_fn(|i| Rat::new(self.num[i].clone(), self.den.clone()))
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if let Some(q) = self.as_rat() {
            return Ok(Self::from_rat(&q.recip()));
        }
        // Solve (multiplication-by-self matrix) · x = e₀ over ℚ.
        let mut m: Vec<Vec<Rat>> = vec![vec![Rat::zero(); 9]; 8];
        for j in 0..8 {
            let col = (self * &Self::eta_pow(j as i64)).coeffs();
            for i in 0..8 {
                m[i][j] = col[i].clone();
            }
        }
        m[0][8] = Rat::one();
        for col in 0..8 {
            let piv = (col..8).find(|&r| !m[r][col].is_zero()).expect("field element is invertible");
            m.swap(col, piv);
            let p = m[col][col].clone();
            for k in col..9 {
                m[col][k] = &m[col][k] / &p;
            }
            for r in 0..8 {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for k in col..9 {
                        let t = &m[col][k] * &f;
                        m[r][k] -= t;
                    }
                }
            }
        }
        let sol: Vec<Rat> = (0..8).map(|i| m[i][8].clone()).collect();
        Ok(Self::from_coeffs(&sol))
    }

    pub fn div(&self, other: &Self) -> Result<Self, FieldError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self, FieldError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn scale(&self, r: &Rat) -> Self {
        let num = self.num.clone().map(|c| c * r.numer());
        Self::normalized(num, &self.den * r.denom())
    }

    /// The automorphism η ↦ η^k (k coprime to 15).
    pub fn galois(&self, k: i64) -> Self {
        let mut acc = Self::zero();
        for i in 0..8 {
            if !self.num[i].is_zero() {
                let t = Self::eta_pow(k * i as i64);
                acc = &acc + &t.scale(&Rat::from_integer(self.num[i].clone()));
            }
        }
        acc.scale(&Rat::new(BigInt::one(), self.den.clone()))
    }

    /// Complex conjugation under the standard embedding.
    pub fn conj(&self) -> Self {
        self.galois(14)
    }

    /// Double-precision image under η ↦ e^{2πi/15}.
    pub fn to_c64(&self) -> Complex64 {
        let d = self.den.to_f64().unwrap_or(f64::NAN);
        let mut z = Complex64::new(0.0, 0.0);
        for i in 0..8 {
            if !self.num[i].is_zero() {
                let a = 2.0 * std::f64::consts::PI * i as f64 / 15.0;
                z += Complex64::from_polar(1.0, a) * (self.num[i].to_f64().unwrap_or(f64::NAN) / d);
            }
        }
        z
    }

    /// Rigorous enclosure of the image under η ↦ e^{2πi/15}.
    pub fn embed_complex(&self, prec: u32) -> CxInterval {
        let prec = prec.max(64);
        let wp = prec + 32;
        let powers = eta_powers(wp);
        let mut acc = CxInterval::zero(wp);
        for i in 0..8 {
            if !self.num[i].is_zero() {
                let c = RInterval::from_rat(&Rat::new(self.num[i].clone(), self.den.clone()), wp);
                acc = acc.add(&powers[i].scale(&c));
            }
        }
        acc
    }

    /// Serialization as eight `p/q` strings.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs().iter().map(rat_to_string).collect()
    }
}

/// Reduces a coefficient vector of length ≤ 15 modulo Φ₁₅.
fn reduce15(mut r: Vec<BigInt>) -> [BigInt; 8] {
    // η⁸ = η⁷ − η⁵ + η⁴ − η³ + η − 1
    for k in (8..r.len()).rev() {
        if r[k].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut r[k]);
        r[k - 1] += &c;
        r[k - 3] -= &c;
        r[k - 4] += &c;
        r[k - 5] -= &c;
        r[k - 7] += &c;
        r[k - 8] -= &c;
    }
    r.truncate(8);
    r.resize(8, BigInt::zero());
    r.try_into().unwrap()
}

impl<'a> Add<&'a CycElem> for &'a CycElem {
    type Output = CycElem;
    fn add(self, o: &CycElem) -> CycElem {
        if self.den == o.den {
            let num = std::array::from_fn(|i| &self.num[i] + &o.num[i]);
            return CycElem::normalized(num, self.den.clone());
        }
        let num = std::array::from_fn(|i| &self.num[i] * &o.den + &o.num[i] * &self.den);
        CycElem::normalized(num, &self.den * &o.den)
    }
}

impl<'a> Sub<&'a CycElem> for &'a CycElem {
    type Output = CycElem;
    fn sub(self, o: &CycElem) -> CycElem {
        self + &(-o)
    }
}

impl Neg for &CycElem {
    type Output = CycElem;
    fn neg(self) -> CycElem {
        CycElem { num: self.num.clone().map(|c| -c), den: self.den.clone() }
    }
}

impl Neg for CycElem {
    type Output = CycElem;
    fn neg(self) -> CycElem {
        -&self
    }
}

impl<'a> Mul<&'a CycElem> for &'a CycElem {
    type Output = CycElem;
    fn mul(self, o: &CycElem) -> CycElem {
        let a_rat = self.num[1..].iter().all(|c| c.is_zero());
        let b_rat = o.num[1..].iter().all(|c| c.is_zero());
        if a_rat || b_rat {
            let (s, v) = if a_rat { (&self.num[0], o) } else { (&o.num[0], self) };
            if s.is_zero() {
                return CycElem::zero();
            }
            let num = v.num.clone().map(|c| c * s);
            return CycElem::normalized(num, &self.den * &o.den);
        }
        let mut r = vec![BigInt::zero(); 15];
        for i in 0..8 {
            if self.num[i].is_zero() {
                continue;
            }
            for j in 0..8 {
                if !o.num[j].is_zero() {
                    r[i + j] += &self.num[i] * &o.num[j];
                }
            }
        }
        CycElem::normalized(reduce15(r), &self.den * &o.den)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CycElem> for CycElem {
            type Output = CycElem;
            fn $m(self, o: CycElem) -> CycElem {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rat() {
            return write!(f, "{}", rat_to_string(&q));
        }
        write!(f, "[{}]", self.to_strings().join(","))
    }
}

impl fmt::Debug for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Real interval [lo, hi] · 2^{-prec} with integer endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RInterval {
    lo: BigInt,
    hi: BigInt,
    prec: u32,
}

fn shr_floor(x: &BigInt, k: u32) -> BigInt {
    x.div_floor(&(BigInt::one() << k))
}

fn shr_ceil(x: &BigInt, k: u32) -> BigInt {
    -shr_floor(&-x, k)
}

impl RInterval {
    pub fn point(n: &BigInt, prec: u32) -> Self {
        let v = n << prec;
        RInterval { lo: v.clone(), hi: v, prec }
    }

    pub fn from_rat(q: &Rat, prec: u32) -> Self {
        let s = q.numer() << prec;
        let lo = s.div_floor(q.denom());
        let hi = -(-&s).div_floor(q.denom());
        RInterval { lo, hi, prec }
    }

    pub fn add(&self, o: &Self) -> Self {
        RInterval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi, prec: self.prec }
    }

    pub fn neg(&self) -> Self {
        RInterval { lo: -&self.hi, hi: -&self.lo, prec: self.prec }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let mn = c.iter().min().unwrap();
        let mx = c.iter().max().unwrap();
        RInterval { lo: shr_floor(mn, self.prec), hi: shr_ceil(mx, self.prec), prec: self.prec }
    }

    /// Square root of a nonnegative interval (lower endpoint clamped at 0).
    pub fn sqrt(&self) -> Self {
        let lo = if self.lo.sign() == Sign::Minus { BigInt::zero() } else { (&self.lo << self.prec).sqrt() };
        let hi_s = if self.hi.sign() == Sign::Minus { BigInt::zero() } else { &self.hi << self.prec };
        let mut hi = hi_s.sqrt();
        if &hi * &hi < hi_s {
            hi += 1;
        }
        RInterval { lo, hi, prec: self.prec }
    }

    pub fn lo_f64(&self) -> f64 {
        scaled_f64(&self.lo, self.prec)
    }

    pub fn hi_f64(&self) -> f64 {
        scaled_f64(&self.hi, self.prec)
    }

    pub fn mid_f64(&self) -> f64 {
        scaled_f64(&(&self.lo + &self.hi), self.prec + 1)
    }

    pub fn width_f64(&self) -> f64 {
        scaled_f64(&(&self.hi - &self.lo), self.prec)
    }

    pub fn lo_rat(&self) -> Rat {
        Rat::new(self.lo.clone(), BigInt::one() << self.prec)
    }

    pub fn hi_rat(&self) -> Rat {
        Rat::new(self.hi.clone(), BigInt::one() << self.prec)
    }

    pub fn contains_rat(&self, q: &Rat) -> bool {
        &self.lo_rat() <= q && q <= &self.hi_rat()
    }

    pub fn intersects(&self, o: &Self) -> bool {
        self.lo_rat() <= o.hi_rat() && o.lo_rat() <= self.hi_rat()
    }
}

fn scaled_f64(x: &BigInt, prec: u32) -> f64 {
    let bits = x.bits();
    if bits > 900 {
        let sh = (bits - 900) as u32;
        return scaled_f64(&(x >> sh), prec.saturating_sub(sh)) * if prec < sh { 2f64.powi((sh - prec) as i32) } else { 1.0 };
    }
    x.to_f64().unwrap_or(f64::NAN) * 2f64.powi(-(prec as i32))
}

/// Rectangular complex interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CxInterval {
    pub re: RInterval,
    pub im: RInterval,
}

impl CxInterval {
    pub fn zero(prec: u32) -> Self {
        let z = RInterval::point(&BigInt::zero(), prec);
        CxInterval { re: z.clone(), im: z }
    }

    pub fn add(&self, o: &Self) -> Self {
        CxInterval { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    pub fn mul(&self, o: &Self) -> Self {
        CxInterval {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn scale(&self, c: &RInterval) -> Self {
        CxInterval { re: self.re.mul(c), im: self.im.mul(c) }
    }

    pub fn mid(&self) -> Complex64 {
        Complex64::new(self.re.mid_f64(), self.im.mid_f64())
    }

    pub fn width(&self) -> f64 {
        self.re.width_f64().max(self.im.width_f64())
    }

    pub fn contains_f64(&self, z: Complex64) -> bool {
        self.re.lo_f64() <= z.re && z.re <= self.re.hi_f64() && self.im.lo_f64() <= z.im && z.im <= self.im.hi_f64()
    }

    pub fn intersects(&self, o: &Self) -> bool {
        self.re.intersects(&o.re) && self.im.intersects(&o.im)
    }

    /// Midpoint as fixed-point integers scaled by 2^prec.
    pub fn mid_fixed(&self, prec: u32) -> (BigInt, BigInt) {
        let f = |r: &RInterval| {
            let s = &r.lo + &r.hi;
            let k = r.prec as i64 + 1 - prec as i64;
            if k >= 0 {
                shr_floor(&s, k as u32)
            } else {
                s << (-k) as u32
            }
        };
        (f(&self.re), f(&self.im))
    }
}

/// Enclosures of η^0..η^7 where η = cos 24° + i sin 24°.
fn eta_powers(prec: u32) -> Vec<CxInterval> {
    let q = |n: i64, d: i64| RInterval::from_rat(&rat(n, d), prec);
    let s5 = q(5, 1).sqrt();
    let s3 = q(3, 1).sqrt();
    let r = q(10, 1).sub(&s5.add(&s5)).sqrt();
    let eighth = q(1, 8);
    let cos36 = q(1, 1).add(&s5); // times 1/8 below
    let cos = cos36.mul(&eighth).add(&s3.mul(&r).mul(&eighth));
    let sin = s3.mul(&q(1, 1).add(&s5)).mul(&eighth).sub(&r.mul(&eighth));
    let eta = CxInterval { re: cos, im: sin };
    let mut out = vec![CxInterval { re: q(1, 1), im: q(0, 1) }];
    for i in 1..8 {
        let next = out[i - 1].mul(&eta);
        out.push(next);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cyclotomic_relations() {
        let w = CycElem::omega();
        assert!((&(&(&w * &w) + &w) + &CycElem::one()).is_zero());
        assert!(CycElem::zeta().pow(5).unwrap().is_one());
        let e = CycElem::eta();
        assert!(e.pow(15).unwrap().is_one());
        assert!(!e.pow(5).unwrap().is_one());
        assert!(!e.pow(3).unwrap().is_one());
    }

    #[test]
    fn phi15_vanishes_at_eta() {
        let e = CycElem::eta();
        let p = |k| e.pow(k).unwrap();
        let v = &(&(&(&(&(&p(8) - &p(7)) + &p(5)) - &p(4)) + &p(3)) - &e) + &CycElem::one();
        assert!(v.is_zero());
    }

    #[test]
    fn sqrt5_expressions() {
        let z = CycElem::zeta();
        let z4 = z.pow(4).unwrap();
        let s = CycElem::sqrt5();
        assert_eq!(&s * &s, CycElem::from_int(5));
        assert_eq!(s, &(&CycElem::one() + &(&z + &z4)) + &(&z + &z4));
        // 1 + ζ + ζ⁻¹ is the golden ratio, whose square is not 5.
        let g = &CycElem::one() + &(&z + &z4);
        assert_ne!(&g * &g, CycElem::from_int(5));
        let golden = (&CycElem::one() + &s).scale(&rat(1, 2));
        assert_eq!(g, golden);
    }

    #[test]
    fn inverse_of_irrational() {
        let a = &CycElem::eta() + &CycElem::from_int(2);
        assert!((&a * &a.inv().unwrap()).is_one());
        assert_eq!(CycElem::zero().inv(), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn embed_matches_closed_forms() {
        let w = CycElem::omega().embed_complex(128);
        assert!((w.mid() - Complex64::new(-0.5, 3f64.sqrt() / 2.0)).norm() < 1e-15);
        assert!(w.re.contains_rat(&rat(-1, 2)));
        assert!(w.width() < 1e-30);
        // √5 against an independent interval square root.
        let s = CycElem::sqrt5().embed_complex(128);
        let oracle = RInterval::from_rat(&rat(5, 1), 160).sqrt();
        assert!(s.re.intersects(&oracle));
        assert!(s.im.lo_f64() <= 0.0 && 0.0 <= s.im.hi_f64());
        // w_∞ = (3 + √5 + √(6(5+√5)))/4.
        let wi = CycElem::w_infinity().embed_complex(128);
        let s5 = 5f64.sqrt();
        let closed = (3.0 + s5 + (6.0 * (5.0 + s5)).sqrt()) / 4.0;
        assert!((wi.mid().re - closed).abs() < 1e-14);
        assert!((wi.mid().re - 2.956_295_201_467_6).abs() < 1e-12);
        assert!(wi.mid().im.abs() < 1e-30);
    }

    #[test]
    fn galois_conjugation() {
        let w = CycElem::omega();
        assert_eq!(w.conj(), w.pow(2).unwrap());
        let s = CycElem::sqrt5();
        assert_eq!(s.conj(), s);
        assert_eq!(s.galois(2), -s);
    }

    #[test]
    fn upsilon_b_relation() {
        let b = CycElem::upsilon_b();
        let v = &(&(&b * &b) + &b.scale(&rat(3, 1))) + &CycElem::from_int(6);
        assert!(v.is_zero());
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(parse_rat("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(rat_to_string(&rat(4, 2)), "2");
        assert!(parse_rat("1/0").is_err());
        assert_eq!(CycElem::omega().to_strings().len(), 8);
    }

    fn small_elem() -> impl Strategy<Value = CycElem> {
        (prop::array::uniform8(-4i64..5), 1i64..4).prop_map(|(c, d)| CycElem::from_ints(c).scale(&rat(1, d)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn associativity(a in small_elem(), b in small_elem(), c in small_elem()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        }

        #[test]
        fn inverse(a in small_elem()) {
            prop_assume!(!a.is_zero());
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }

        #[test]
        fn embedding_is_homomorphic(a in small_elem(), b in small_elem()) {
            let ab = (&a * &b).embed_complex(96);
            let prod = a.embed_complex(96).mul(&b.embed_complex(96));
            prop_assert!(ab.intersects(&prod));
            prop_assert!(ab.width() < 1e-25);
        }
    }
}
