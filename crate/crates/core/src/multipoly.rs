//! Sparse multivariate polynomials and rational functions over ℚ(η).

use crate::exactfield::{rat, CycElem, FieldError, Rat};
use num_complex::Complex64;
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PolyError {
    #[error("not divisible; remainder {remainder}")]
    NotDivisible { remainder: MPoly },
    #[error("division by zero")]
    DivisionByZero,
    #[error("degree of {var} is {actual}, larger than requested {requested}")]
    DegreeTooSmall { var: Var, actual: u32, requested: u32 },
}

impl From<FieldError> for PolyError {
    fn from(_: FieldError) -> Self {
        PolyError::DivisionByZero
    }
}

/// A variable from the fixed catalog; a smaller index ranks higher in the term order.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Var(pub u8);

const NAMES: &[&str] = &[
    "sigma", "tau", "rho", "sigma1", "sigma2", "tau1", "tau2", "u", "v", "psi", "P", "phi", "gamma", "b", "c", "d",
    "r", "s", "t", "delta5", "kappa5", "psit", "z0", "z1", "z2", "z3", "z4", "z5", "x", "y", "z", "zl", "w", "sp",
    "tp", "ap", "bp", "A_st", "A_ts", "B_s", "B_t", "B_st", "R_s", "R_t", "x1", "x2", "x3", "x4", "x5", "delta",
    "kappa", "e1", "e2", "U", "T", "eps",
];

pub mod vars {
    use super::Var;
    pub const SIGMA: Var = Var(0);
    pub const TAU: Var = Var(1);
    pub const RHO: Var = Var(2);
    pub const SIGMA1: Var = Var(3);
    pub const SIGMA2: Var = Var(4);
    pub const TAU1: Var = Var(5);
    pub const TAU2: Var = Var(6);
    pub const U: Var = Var(7);
    pub const V: Var = Var(8);
    pub const PSI: Var = Var(9);
    pub const P: Var = Var(10);
    pub const PHI: Var = Var(11);
    pub const GAMMA: Var = Var(12);
    pub const B: Var = Var(13);
    pub const C: Var = Var(14);
    pub const D: Var = Var(15);
    pub const R: Var = Var(16);
    pub const S: Var = Var(17);
    pub const T: Var = Var(18);
    pub const DELTA5: Var = Var(19);
    pub const KAPPA5: Var = Var(20);
    pub const PSIT: Var = Var(21);
    pub const Z0: Var = Var(22);
    pub const X: Var = Var(28);
    pub const Y: Var = Var(29);
    pub const ZZ: Var = Var(30);
    pub const ZL: Var = Var(31);
    pub const W: Var = Var(32);
    pub const SP: Var = Var(33);
    pub const TP: Var = Var(34);
    pub const AP: Var = Var(35);
    pub const BP: Var = Var(36);
    pub const A_ST: Var = Var(37);
    pub const A_TS: Var = Var(38);
    pub const B_S: Var = Var(39);
    pub const B_T: Var = Var(40);
    pub const B_ST: Var = Var(41);
    pub const R_S: Var = Var(42);
    pub const R_T: Var = Var(43);
    pub const X1: Var = Var(44);
    pub const DELTA: Var = Var(49);
    pub const KAPPA: Var = Var(50);
    pub const E1: Var = Var(51);
    pub const E2: Var = Var(52);
    pub const UU: Var = Var(53);
    pub const TT: Var = Var(54);
    pub const EPS: Var = Var(55);

    /// z_i, i = 0..5.
    pub fn z(i: usize) -> Var {
        assert!(i < 6);
        Var(Z0.0 + i as u8)
    }

    /// x_i, i = 1..5.
    pub fn x(i: usize) -> Var {
        assert!((1..=5).contains(&i));
        Var(X1.0 + i as u8 - 1)
    }
}

impl Var {
    pub fn name(self) -> &'static str {
        NAMES[self.0 as usize]
    }

    pub fn by_name(name: &str) -> Option<Var> {
        NAMES.iter().position(|n| *n == name).map(|i| Var(i as u8))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Sparse exponent vector, sorted by variable, no zero exponents.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Mono(Vec<(Var, u32)>);

impl Mono {
    pub fn one() -> Self {
        Mono(Vec::new())
    }

    pub fn var(v: Var, e: u32) -> Self {
        if e == 0 {
            Mono::one()
        } else {
            Mono(vec![(v, e)])
        }
    }

    pub fn from_pairs(pairs: &[(Var, u32)]) -> Self {
        let mut m = Mono::one();
        for &(v, e) in pairs {
            m = m.mul(&Mono::var(v, e));
        }
        m
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0.iter().find(|(w, _)| *w == v).map(|p| p.1).unwrap_or(0)
    }

    pub fn pairs(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|p| p.1).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        let (a, b) = (&self.0, &o.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Mono(out)
    }

    /// self / o when o divides self.
    pub fn div(&self, o: &Mono) -> Option<Mono> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < o.0.len() && o.0[j].0 < v {
                return None;
            }
            if j < o.0.len() && o.0[j].0 == v {
                let f = o.0[j].1;
                j += 1;
                if f > e {
                    return None;
                }
                if f < e {
                    out.push((v, e - f));
                }
            } else {
                out.push((v, e));
            }
        }
        if j < o.0.len() {
            return None;
        }
        Some(Mono(out))
    }

    /// Largest k with o^k | self (o ≠ 1).
    pub fn times_divisible(&self, o: &Mono) -> u32 {
        let mut k = u32::MAX;
        for &(v, f) in &o.0 {
            k = k.min(self.exp(v) / f);
        }
        if o.0.is_empty() {
            0
        } else {
            k
        }
    }

    pub fn pow(&self, k: u32) -> Mono {
        Mono(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }

    fn without(&self, v: Var) -> Mono {
        Mono(self.0.iter().copied().filter(|p| p.0 != v).collect())
    }
}

impl Ord for Mono {
    /// Lexicographic with Var(0) most significant.
    fn cmp(&self, o: &Self) -> Ordering {
        let (a, b) = (&self.0, &o.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(x), Some(y)) => {
                    if x.0 < y.0 {
                        return Ordering::Greater;
                    }
                    if x.0 > y.0 {
                        return Ordering::Less;
                    }
                    if x.1 != y.1 {
                        return x.1.cmp(&y.1);
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<Mono, CycElem>,
}

/// Rewrite rule: any monomial divisible by `lhs` has that factor replaced by `rhs`.
#[derive(Clone, Debug)]
pub struct Rule {
    pub lhs: Mono,
    pub rhs: MPoly,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(CycElem::one())
    }

    pub fn constant(c: CycElem) -> Self {
        Self::term(Mono::one(), c)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(CycElem::from_int(n))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Self::constant(CycElem::frac(n, d))
    }

    pub fn from_rat(r: &Rat) -> Self {
        Self::constant(CycElem::from_rat(r))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Mono::var(v, 1), CycElem::one())
    }

    pub fn term(m: Mono, c: CycElem) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &CycElem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> CycElem {
        self.terms.get(m).cloned().unwrap_or_else(CycElem::zero)
    }

    pub fn as_constant(&self) -> Option<CycElem> {
        match self.terms.len() {
            0 => Some(CycElem::zero()),
            1 => self.terms.get(&Mono::one()).cloned(),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<(&Mono, &CycElem)> {
        self.terms.iter().next_back()
    }

    /// Some((c, m)) when the polynomial is the single term c·m.
    pub fn as_monomial(&self) -> Option<(CycElem, Mono)> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            Some((c.clone(), m.clone()))
        } else {
            None
        }
    }

    fn add_term(&mut self, m: Mono, c: CycElem) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &CycElem) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn scale_rat(&self, r: &Rat) -> MPoly {
        if r.is_zero() {
            return MPoly::zero();
        }
        MPoly { terms: self.terms.iter().map(|(m, a)| (m.clone(), a.scale(r))).collect() }
    }

    pub fn mul_mono(&self, m: &Mono, c: &CycElem) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly { terms: self.terms.iter().map(|(n, a)| (n.mul(m), a * c)).collect() }
    }

    pub fn pow(&self, mut e: u32) -> MPoly {
        let mut acc = MPoly::one();
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        acc
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn min_degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).min().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Degree in a group of variables jointly.
    pub fn degree_in_group(&self, vs: &[Var]) -> u32 {
        self.terms.keys().map(|m| vs.iter().map(|&v| m.exp(v)).sum()).max().unwrap_or(0)
    }

    pub fn is_homogeneous_in(&self, vs: &[Var], d: u32) -> bool {
        self.terms.keys().all(|m| vs.iter().map(|&v| m.exp(v)).sum::<u32>() == d)
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.0.iter().map(|p| p.0)).collect()
    }

    /// Coefficient of v^k as a polynomial in the other variables.
    pub fn coeff_of(&self, v: Var, k: u32) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            if m.exp(v) == k {
                out.add_term(m.without(v), c.clone());
            }
        }
        out
    }

    /// Coefficients of v^0, v^1, …, v^deg.
    pub fn coeffs_in(&self, v: Var) -> Vec<MPoly> {
        let d = self.degree_in(v) as usize;
        let mut out = vec![MPoly::zero(); d + 1];
        for (m, c) in &self.terms {
            out[m.exp(v) as usize].add_term(m.without(v), c.clone());
        }
        out
    }

    /// Coefficients of monomials in the given variables, as polynomials in the rest.
    pub fn collect(&self, vs: &[Var]) -> BTreeMap<Mono, MPoly> {
        let mut out: BTreeMap<Mono, MPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key = Mono(m.0.iter().copied().filter(|p| vs.contains(&p.0)).collect());
            let rest = Mono(m.0.iter().copied().filter(|p| !vs.contains(&p.0)).collect());
            out.entry(key).or_default().add_term(rest, c.clone());
        }
        out
    }

    pub fn derivative(&self, v: Var) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e > 0 {
                let nm = m.div(&Mono::var(v, 1)).unwrap();
                out.add_term(nm, c.scale(&Rat::from_integer(e.into())));
            }
        }
        out
    }

    /// Substitutes constants for some variables.
    pub fn eval(&self, bind: &[(Var, CycElem)]) -> MPoly {
        let mut cache: HashMap<(Var, u32), CycElem> = HashMap::new();
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut coef = c.clone();
            let mut rest = Vec::new();
            for &(v, e) in &m.0 {
                if let Some((_, val)) = bind.iter().find(|b| b.0 == v) {
                    let p = cache.entry((v, e)).or_insert_with(|| val.pow(e as i64).unwrap()).clone();
                    coef = &coef * &p;
                } else {
                    rest.push((v, e));
                }
            }
            out.add_term(Mono(rest), coef);
        }
        out
    }

    pub fn eval_rat(&self, bind: &[(Var, Rat)]) -> MPoly {
        let b: Vec<(Var, CycElem)> = bind.iter().map(|(v, r)| (*v, CycElem::from_rat(r))).collect();
        self.eval(&b)
    }

    /// Value when every variable is bound.
    pub fn eval_const(&self, bind: &[(Var, CycElem)]) -> Option<CycElem> {
        self.eval(bind).as_constant()
    }

    /// Polynomial substitution of variables.
    pub fn subst(&self, bind: &[(Var, MPoly)]) -> MPoly {
        let mut cache: HashMap<(Var, u32), MPoly> = HashMap::new();
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut acc = MPoly::one();
            let mut rest = Vec::new();
            for &(v, e) in &m.0 {
                if let Some((_, val)) = bind.iter().find(|b| b.0 == v) {
                    let p = cache.entry((v, e)).or_insert_with(|| val.pow(e)).clone();
                    acc = &acc * &p;
                } else {
                    rest.push((v, e));
                }
            }
            out = &out + &acc.mul_mono(&Mono(rest), c);
        }
        out
    }

    /// Rational substitution; the denominator is Π den_v^{deg_v f}.
    pub fn substitute(&self, bind: &[(Var, RatFunc)]) -> Result<RatFunc, PolyError> {
        if bind.iter().any(|(_, r)| r.den.is_zero()) {
            return Err(PolyError::DivisionByZero);
        }
        let degs: Vec<u32> = bind.iter().map(|(v, _)| self.degree_in(*v)).collect();
        let mut npow: HashMap<(usize, u32), MPoly> = HashMap::new();
        let mut dpow: HashMap<(usize, u32), MPoly> = HashMap::new();
        let mut num = MPoly::zero();
        for (m, c) in &self.terms {
            let mut acc = MPoly::one();
            let mut rest = Vec::new();
            let mut seen = vec![0u32; bind.len()];
            for &(v, e) in &m.0 {
                if let Some(k) = bind.iter().position(|b| b.0 == v) {
                    seen[k] = e;
                } else {
                    rest.push((v, e));
                }
            }
            for (k, (_, r)) in bind.iter().enumerate() {
                let e = seen[k];
                if e > 0 {
                    let p = npow.entry((k, e)).or_insert_with(|| r.num.pow(e)).clone();
                    acc = &acc * &p;
                }
                let de = degs[k] - e;
                if de > 0 {
                    let p = dpow.entry((k, de)).or_insert_with(|| r.den.pow(de)).clone();
                    acc = &acc * &p;
                }
            }
            num = &num + &acc.mul_mono(&Mono(rest), c);
        }
        let mut den = MPoly::one();
        for (k, (_, r)) in bind.iter().enumerate() {
            if degs[k] > 0 {
                den = &den * &r.den.pow(degs[k]);
            }
        }
        Ok(RatFunc { num, den })
    }

    /// Replaces each `var` by `v1/v2` and multiplies by `v2^deg` (per group).
    pub fn homogenize(&self, groups: &[(Var, Var, Var, u32)]) -> Result<MPoly, PolyError> {
        for &(v, _, _, d) in groups {
            let a = self.degree_in(v);
            if a > d {
                return Err(PolyError::DegreeTooSmall { var: v, actual: a, requested: d });
            }
        }
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut nm = Mono(m.0.iter().copied().filter(|p| !groups.iter().any(|g| g.0 == p.0)).collect());
            for &(v, v1, v2, d) in groups {
                let e = m.exp(v);
                nm = nm.mul(&Mono::var(v1, e)).mul(&Mono::var(v2, d - e));
            }
            out.add_term(nm, c.clone());
        }
        Ok(out)
    }

    /// Applies rewrite rules until no monomial is divisible by a left-hand side.
    pub fn reduce(&self, rules: &[Rule]) -> MPoly {
        let mut cur = self.clone();
        let mut cache: HashMap<(usize, u32), MPoly> = HashMap::new();
        for _ in 0..64 {
            let mut changed = false;
            let mut out = MPoly::zero();
            for (m, c) in &cur.terms {
                let hit = rules.iter().enumerate().find_map(|(i, r)| {
                    let k = m.times_divisible(&r.lhs);
                    (k > 0).then_some((i, k))
                });
                match hit {
                    None => out.add_term(m.clone(), c.clone()),
                    Some((i, k)) => {
                        changed = true;
                        let rest = m.div(&rules[i].lhs.pow(k)).unwrap();
                        let rp = cache.entry((i, k)).or_insert_with(|| rules[i].rhs.pow(k));
                        out = &out + &rp.mul_mono(&rest, c);
                    }
                }
            }
            cur = out;
            if !changed {
                break;
            }
        }
        cur
    }

    /// Multivariate division by a single divisor (lex leading terms).
    pub fn div_rem(&self, d: &MPoly) -> Result<(MPoly, MPoly), PolyError> {
        let (lm, lc) = d.leading().ok_or(PolyError::DivisionByZero)?;
        let (lm, lc_inv) = (lm.clone(), lc.inv()?);
        let mut p = self.clone();
        let mut q = MPoly::zero();
        let mut r = MPoly::zero();
        while let Some((m, c)) = p.leading().map(|(m, c)| (m.clone(), c.clone())) {
            match m.div(&lm) {
                Some(f) => {
                    let coef = &c * &lc_inv;
                    p = &p - &d.mul_mono(&f, &coef);
                    q.add_term(f, coef);
                }
                None => {
                    p.terms.remove(&m);
                    r.add_term(m, c);
                }
            }
        }
        Ok((q, r))
    }

    pub fn exact_div(&self, d: &MPoly) -> Result<MPoly, PolyError> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::NotDivisible { remainder: r })
        }
    }

    /// Some(c) with self = c·other.
    pub fn proportional(&self, other: &MPoly) -> Option<CycElem> {
        if other.is_zero() {
            return None;
        }
        let (m, c) = other.leading().unwrap();
        let a = self.coeff(m);
        let k = a.div(c).ok()?;
        (&other.scale(&k) == self).then_some(k)
    }

    /// Evaluation in any commutative number type.
    pub fn eval_with<T, F, G>(&self, val: F, coef: G) -> T
    where
        T: Clone + Add<Output = T> + Mul<Output = T>,
        F: Fn(Var) -> T,
        G: Fn(&CycElem) -> T,
    {
        let mut acc: Option<T> = None;
        let mut cache: HashMap<Var, Vec<T>> = HashMap::new();
        for (m, c) in &self.terms {
            let mut t = coef(c);
            for &(v, e) in &m.0 {
                let pw = cache.entry(v).or_insert_with(|| vec![val(v)]);
                while pw.len() < e as usize {
                    let nx = pw.last().unwrap().clone() * pw[0].clone();
                    pw.push(nx);
                }
                t = t * pw[e as usize - 1].clone();
            }
            acc = Some(match acc {
                None => t,
                Some(a) => a + t,
            });
        }
        acc.unwrap_or_else(|| coef(&CycElem::zero()))
    }

    pub fn eval_c64(&self, val: impl Fn(Var) -> Complex64) -> Complex64 {
        self.eval_with(val, |c| c.to_c64())
    }

    /// Renames variables (a permutation or relabeling).
    pub fn rename(&self, map: &[(Var, Var)]) -> MPoly {
        let b: Vec<(Var, MPoly)> = map.iter().map(|&(a, b)| (a, MPoly::var(b))).collect();
        self.subst(&b)
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{}", c)?;
            for &(v, e) in &m.0 {
                if e == 1 {
                    write!(f, " * {}", v)?;
                } else {
                    write!(f, " * {}^{}", v, e)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, o: &MPoly) -> MPoly {
        let (mut big, small) = if self.terms.len() >= o.terms.len() { (self.clone(), o) } else { (o.clone(), self) };
        for (m, c) in &small.terms {
            big.add_term(m.clone(), c.clone());
        }
        big
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, o: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, o: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            for (n, d) in &o.terms {
                out.add_term(m.mul(n), c * d);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $m(self, o: MPoly) -> MPoly {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

/// Shorthand: the variable as a polynomial.
pub fn pv(v: Var) -> MPoly {
    MPoly::var(v)
}

/// Shorthand: an integer constant.
pub fn pc(n: i64) -> MPoly {
    MPoly::int(n)
}

/// Shorthand: a cyclotomic constant.
pub fn pk(c: &CycElem) -> MPoly {
    MPoly::constant(c.clone())
}

pub fn prod(ps: &[MPoly]) -> MPoly {
    ps.iter().fold(MPoly::one(), |a, b| &a * b)
}

pub fn sum(ps: &[MPoly]) -> MPoly {
    ps.iter().fold(MPoly::zero(), |a, b| &a + b)
}

/// Quotient of two polynomials; equality by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RatFunc {
    pub num: MPoly,
    pub den: MPoly,
}

impl RatFunc {
    pub fn new(num: MPoly, den: MPoly) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Ok(RatFunc { num, den })
    }

    pub fn poly(p: MPoly) -> Self {
        RatFunc { num: p, den: MPoly::one() }
    }

    pub fn var(v: Var) -> Self {
        Self::poly(MPoly::var(v))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return RatFunc { num: &self.num + &o.num, den: self.den.clone() };
        }
        RatFunc { num: &(&self.num * &o.den) + &(&o.num * &self.den), den: &self.den * &o.den }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        RatFunc { num: &self.num * &o.num, den: &self.den * &o.den }
    }

    pub fn div(&self, o: &Self) -> Result<Self, PolyError> {
        Self::new(&self.num * &o.den, &self.den * &o.num)
    }

    pub fn inv(&self) -> Result<Self, PolyError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        RatFunc { num: self.num.pow(e), den: self.den.pow(e) }
    }

    pub fn substitute(&self, bind: &[(Var, RatFunc)]) -> Result<Self, PolyError> {
        let n = self.num.substitute(bind)?;
        let d = self.den.substitute(bind)?;
        n.div(&d)
    }

    /// Cancels a polynomial factor from both sides when it divides both.
    pub fn cancel(&self, f: &MPoly) -> Self {
        match (self.num.exact_div(f), self.den.exact_div(f)) {
            (Ok(n), Ok(d)) => RatFunc { num: n, den: d },
            _ => self.clone(),
        }
    }

    /// Some(polynomial) when the denominator divides the numerator.
    pub fn to_poly(&self) -> Option<MPoly> {
        self.num.exact_div(&self.den).ok()
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, o: &Self) -> bool {
        &self.num * &o.den == &o.num * &self.den
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// Defining fifth powers of the radicals in the family parametrization.
pub fn radical_rules() -> Vec<Rule> {
    use vars::*;
    let (s, t) = (pv(SIGMA), pv(TAU));
    let one = MPoly::one();
    let beta5 = |x: &MPoly| &(&one - x) * &(&(&one - x) + &(x * x));
    let alpha5 = |s: &MPoly, t: &MPoly| {
        let st = s * t;
        let q = &(&one - &(t * &(&one + s))) + &(&(t * t) * &(&(&one - s) + &(s * s)));
        prod(&[s.pow(4), &one - s, &one - t, &one - &st, q])
    };
    let r = |v: Var, rhs: MPoly| Rule { lhs: Mono::var(v, 5), rhs };
    vec![
        r(A_ST, alpha5(&s, &t)),
        r(A_TS, alpha5(&t, &s)),
        r(B_S, beta5(&s)),
        r(B_T, beta5(&t)),
        r(B_ST, beta5(&(&s * &t))),
        r(R_S, s.clone()),
        r(R_T, t.clone()),
    ]
}

pub fn radical_reduce(f: &MPoly) -> MPoly {
    f.reduce(&radical_rules())
}

/// P·φ² → 32 − (3/4)P.
pub fn phi_rule() -> Rule {
    use vars::*;
    Rule { lhs: Mono::from_pairs(&[(P, 1), (PHI, 2)]), rhs: &pc(32) - &pv(P).scale_rat(&rat(3, 4)) }
}

/// φ² → (32 − (3/4)P)/P evaluated at a rational P.
pub fn phi_rule_at(p: &Rat) -> Rule {
    let v = &(&Rat::from_integer(32.into()) / p) - &rat(3, 4);
    Rule { lhs: Mono::var(vars::PHI, 2), rhs: MPoly::from_rat(&v) }
}

/// ψ⁵γ¹⁰ → (ψ⁵γ⁵ − 32/27)/9.
pub fn gamma_rule() -> Rule {
    use vars::*;
    let p5g5 = MPoly::term(Mono::from_pairs(&[(PSI, 5), (GAMMA, 5)]), CycElem::one());
    Rule { lhs: Mono::from_pairs(&[(PSI, 5), (GAMMA, 10)]), rhs: (&p5g5 - &MPoly::frac(32, 27)).scale_rat(&rat(1, 9)) }
}

/// Dense univariate polynomial over ℚ(η), coefficients low to high.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UPoly {
    pub c: Vec<CycElem>,
}

impl UPoly {
    pub fn new(mut c: Vec<CycElem>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly { c }
    }

    pub fn from_mpoly(p: &MPoly, v: Var) -> Option<Self> {
        let cs = p.coeffs_in(v);
        let mut out = Vec::with_capacity(cs.len());
        for c in cs {
            out.push(c.as_constant()?);
        }
        Some(UPoly::new(out))
    }

    pub fn to_mpoly(&self, v: Var) -> MPoly {
        let mut out = MPoly::zero();
        for (i, c) in self.c.iter().enumerate() {
            out.add_term(Mono::var(v, i as u32), c.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; −1 for zero encoded as None.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> CycElem {
        self.c.last().cloned().unwrap_or_else(CycElem::zero)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lead().inv().unwrap();
        UPoly::new(self.c.iter().map(|x| x * &inv).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return UPoly::new(vec![]);
        }
        let mut r = vec![CycElem::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                r[i + j] = &r[i + j] + &(a * b);
            }
        }
        UPoly::new(r)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let z = CycElem::zero();
        UPoly::new((0..n).map(|i| self.c.get(i).unwrap_or(&z) - o.c.get(i).unwrap_or(&z)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = UPoly::new(vec![CycElem::one()]);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self), PolyError> {
        let dd = d.degree().ok_or(PolyError::DivisionByZero)?;
        let inv = d.lead().inv()?;
        let mut r = self.c.clone();
        if r.len() <= dd {
            return Ok((UPoly::new(vec![]), self.clone()));
        }
        let mut q = vec![CycElem::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let coef = &r[k + dd] * &inv;
            if coef.is_zero() {
                continue;
            }
            for (j, dc) in d.c.iter().enumerate() {
                r[k + j] = &r[k + j] - &(&coef * dc);
            }
            q[k] = coef;
        }
        r.truncate(dd);
        Ok((UPoly::new(q), UPoly::new(r)))
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.monic(), o.monic());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).unwrap();
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        UPoly::new(self.c.iter().enumerate().skip(1).map(|(i, x)| x.scale(&Rat::from_integer((i as i64).into()))).collect())
    }

    pub fn eval(&self, x: &CycElem) -> CycElem {
        let mut acc = CycElem::zero();
        for c in self.c.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Some(r) with rⁿ = self, r monic up to the n-th root of the leading coefficient
    /// when that root lies in ℚ(η); otherwise r is monic and the caller keeps the constant.
    pub fn nth_root_monic(&self, n: u32) -> Option<Self> {
        let d = self.degree()?;
        if d % n as usize != 0 {
            return None;
        }
        let k = d / n as usize;
        let m = self.monic();
        // g(x) = x^d m(1/x) = 1 + g1 x + …; h = g^{1/n} as power series to order k.
        let g: Vec<CycElem> = (0..=k).map(|i| m.c[d - i].clone()).collect();
        let alpha = rat(1, n as i64);
        let mut h = vec![CycElem::one()];
        for j in 1..=k {
            let mut acc = CycElem::zero();
            for i in 1..=j {
                let f = &(&(&alpha + &Rat::one()) * &Rat::from_integer((i as i64).into())) - &Rat::from_integer((j as i64).into());
                acc = &acc + &(&g[i] * &h[j - i]).scale(&f);
            }
            h.push(acc.scale(&rat(1, j as i64)));
        }
        let r = UPoly::new(h.into_iter().rev().collect());
        (r.pow(n) == m).then_some(r)
    }
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det_bareiss(mut m: Vec<Vec<MPoly>>) -> Result<MPoly, PolyError> {
    let n = m.len();
    let mut sign = 1i64;
    let mut prev = MPoly::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(MPoly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = t.exact_div(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    Ok(m[n - 1][n - 1].scale(&CycElem::from_int(sign)))
}

/// Resultant of two polynomials in `v` via the Sylvester matrix.
pub fn resultant(f: &MPoly, g: &MPoly, v: Var) -> Result<MPoly, PolyError> {
    let a = f.coeffs_in(v);
    let b = g.coeffs_in(v);
    let (m, n) = (a.len() - 1, b.len() - 1);
    let size = m + n;
    if size == 0 {
        return Ok(MPoly::one());
    }
    let mut mat = vec![vec![MPoly::zero(); size]; size];
    for i in 0..n {
        for (j, c) in a.iter().rev().enumerate() {
            mat[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in b.iter().rev().enumerate() {
            mat[n + i][i + j] = c.clone();
        }
    }
    det_bareiss(mat)
}

#[cfg(test)]
mod tests {
    use super::vars::*;
    use super::*;
    use proptest::prelude::*;

    fn s() -> MPoly {
        pv(SIGMA)
    }

    #[test]
    fn geometric_division() {
        let f = &s().pow(3) - &pc(1);
        let q = f.exact_div(&(&s() - &pc(1))).unwrap();
        assert_eq!(q, sum(&[s().pow(2), s(), pc(1)]));
    }

    #[test]
    fn remainder_witness() {
        let f = &s().pow(2) + &pc(1);
        match f.exact_div(&(&s() + &pc(1))) {
            Err(PolyError::NotDivisible { remainder }) => assert_eq!(remainder, pc(2)),
            other => panic!("{other:?}"),
        }
        assert_eq!(f.exact_div(&MPoly::zero()), Err(PolyError::DivisionByZero));
    }

    #[test]
    fn homogenize_linear() {
        let h = (&s() - &pc(1)).homogenize(&[(SIGMA, SIGMA1, SIGMA2, 1)]).unwrap();
        assert_eq!(h, &pv(SIGMA1) - &pv(SIGMA2));
        assert!(matches!(s().pow(3).homogenize(&[(SIGMA, SIGMA1, SIGMA2, 2)]), Err(PolyError::DegreeTooSmall { .. })));
    }

    #[test]
    fn identity_substitution() {
        let r = s().substitute(&[(SIGMA, RatFunc::new(pv(Y), pv(X)).unwrap())]).unwrap();
        assert_eq!(r, RatFunc::new(pv(Y), pv(X)).unwrap());
        assert_eq!(r.den, pv(X));
    }

    #[test]
    fn radical_examples() {
        let b = radical_reduce(&pv(B_S).pow(5));
        assert_eq!(b, &(&pc(1) - &s()) * &sum(&[pc(1), -s(), s().pow(2)]));
        assert_eq!(radical_reduce(&pv(R_T).pow(10)), pv(TAU).pow(2));
        let mixed = &pv(R_S).pow(7) * &pv(B_T).pow(3);
        assert_eq!(radical_reduce(&mixed), &(&s() * &pv(R_S).pow(2)) * &pv(B_T).pow(3));
    }

    #[test]
    fn gamma_rule_reduces_relation() {
        let rel = &(&MPoly::term(Mono::from_pairs(&[(PSI, 5), (GAMMA, 10)]), CycElem::from_int(9))
            - &MPoly::term(Mono::from_pairs(&[(PSI, 5), (GAMMA, 5)]), CycElem::one()))
            + &MPoly::frac(32, 27);
        assert!(rel.reduce(&[gamma_rule()]).is_zero());
    }

    #[test]
    fn resultant_of_linear_and_quadratic() {
        // Res_x(x − a, x² − 2) = a² − 2
        let x = pv(X);
        let a = pv(SIGMA);
        let r = resultant(&(&x - &a), &(&x.pow(2) - &pc(2)), X).unwrap();
        assert_eq!(r, &a.pow(2) - &pc(2));
    }

    #[test]
    fn univariate_gcd_and_root() {
        let x = UPoly::new(vec![CycElem::from_int(-1), CycElem::one()]);
        let y = UPoly::new(vec![CycElem::from_int(2), CycElem::one()]);
        let a = x.mul(&x).mul(&y);
        let b = x.mul(&UPoly::new(vec![CycElem::from_int(5), CycElem::one()]));
        assert_eq!(a.gcd(&b), x);
        let q = UPoly::new(vec![CycElem::omega(), CycElem::from_int(3), CycElem::one()]);
        assert_eq!(q.pow(5).nth_root_monic(5), Some(q.clone()));
        assert_eq!(q.pow(5).mul(&x).nth_root_monic(5), None);
    }

    #[test]
    fn display_format() {
        let p = &pv(SIGMA).pow(2).scale_rat(&rat(1, 2)) + &pc(3);
        assert_eq!(p.to_string(), "1/2 * sigma^2 + 3");
    }

    fn small_poly() -> impl Strategy<Value = MPoly> {
        prop::collection::vec((0u32..3, 0u32..3, 0u32..2, -3i64..4), 0..5).prop_map(|ts| {
            let mut p = MPoly::zero();
            for (a, b, c, k) in ts {
                let m = Mono::from_pairs(&[(SIGMA, a), (TAU, b), (PHI, c)]);
                p = &p + &MPoly::term(m, CycElem::from_int(k));
            }
            p
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn exact_div_inverts_mul(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
        }

        #[test]
        fn dehomogenize_roundtrip(a in small_poly()) {
            let h = a.homogenize(&[(SIGMA, SIGMA1, SIGMA2, 3), (TAU, TAU1, TAU2, 2)]).unwrap();
            let back = h.subst(&[(SIGMA1, pv(SIGMA)), (SIGMA2, pc(1)), (TAU1, pv(TAU)), (TAU2, pc(1))]);
            prop_assert_eq!(back, a);
        }

        #[test]
        fn radical_reduction_is_confluent(es in prop::collection::vec(0u32..12, 4)) {
            let f = prod(&[pv(R_S).pow(es[0]), pv(B_S).pow(es[1]), pv(B_ST).pow(es[2]), pv(A_ST).pow(es[3] % 7)]);
            let f = &f + &pv(R_T).pow(es[0] + 3);
            let mut rev = radical_rules();
            rev.reverse();
            prop_assert_eq!(f.reduce(&radical_rules()), f.reduce(&rev));
        }
    }
}
