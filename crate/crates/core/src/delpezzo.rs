//! The quintic del Pezzo surface as the blow up of ℙ¹×ℙ¹ in three points:
//! the maps Ψ/Φ, its quadrics in ℙ⁵, the linear 𝒮₅ action, the exceptional
//! curves, the Wiman quadrics and the plane sextic model.

use crate::check::{ensure, identity, Check, Report, VResult, VerifyError};
use crate::dworklines::{f_pm, g_poly, h_poly, intersection_points, PointP1P1, ProjPoint};
use crate::exactfield::{rat, CycElem, Rat};
use crate::multipoly::vars::*;
use crate::multipoly::{pc, prod, pv, sum, MPoly, Mono, RatFunc, Var};
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

/// A permutation of {1..5}, stored 0-based: `p.0[i]` is the image of i.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub [u8; 5]);

impl Perm {
    pub fn identity() -> Self {
        Perm([0, 1, 2, 3, 4])
    }

    /// Parses cycle notation such as "(12)(35)" or "e".
    pub fn from_cycles(s: &str) -> Self {
        let mut p = [0u8, 1, 2, 3, 4];
        for cyc in s.split(')').map(|c| c.trim_start_matches('(')).filter(|c| !c.is_empty() && *c != "e") {
            let d: Vec<u8> = cyc.bytes().map(|b| b - b'1').collect();
            for k in 0..d.len() {
                p[d[k] as usize] = d[(k + 1) % d.len()];
            }
        }
        Perm(p)
    }

    /// (self ∘ o)(i) = self(o(i)).
    pub fn compose(&self, o: &Perm) -> Perm {
        Perm(std::array::from_fn(|i| self.0[o.0[i] as usize]))
    }

    pub fn inverse(&self) -> Perm {
        let mut q = [0u8; 5];
        for i in 0..5 {
            q[self.0[i] as usize] = i as u8;
        }
        Perm(q)
    }

    /// Image of a 1-based index.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1] as usize + 1
    }

    pub fn sign(&self) -> i64 {
        let mut s = 1;
        for i in 0..5 {
            for j in i + 1..5 {
                if self.0[i] > self.0[j] {
                    s = -s;
                }
            }
        }
        s
    }

    pub fn order(&self) -> usize {
        let mut q = *self;
        let mut k = 1;
        while q != Perm::identity() {
            q = q.compose(self);
            k += 1;
        }
        k
    }

    pub fn all() -> Vec<Perm> {
        let mut out = Vec::new();
        let mut a = [0u8, 1, 2, 3, 4];
        permute(&mut a, 0, &mut out);
        out.sort();
        out
    }
}

fn permute(a: &mut [u8; 5], k: usize, out: &mut Vec<Perm>) {
    if k == 5 {
        out.push(Perm(*a));
        return;
    }
    for i in k..5 {
        a.swap(k, i);
        permute(a, k + 1, out);
        a.swap(k, i);
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = [false; 5];
        let mut any = false;
        for i in 0..5 {
            if seen[i] || self.0[i] as usize == i {
                continue;
            }
            write!(f, "(")?;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                write!(f, "{}", j + 1)?;
                j = self.0[j] as usize;
            }
            write!(f, ")")?;
            any = true;
        }
        if !any {
            write!(f, "e")?;
        }
        Ok(())
    }
}

/// Integer 6×6 matrix acting on (z₀..z₅).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RepMatrix(pub [[i64; 6]; 6]);

impl RepMatrix {
    pub fn identity() -> Self {
        RepMatrix(std::array::from_fn(|i| std::array::from_fn(|j| (i == j) as i64)))
    }

    pub fn mul(&self, o: &RepMatrix) -> RepMatrix {
        RepMatrix(std::array::from_fn(|i| std::array::from_fn(|j| (0..6).map(|k| self.0[i][k] * o.0[k][j]).sum())))
    }

    pub fn pow(&self, n: u32) -> RepMatrix {
        (0..n).fold(RepMatrix::identity(), |a, _| a.mul(self))
    }

    pub fn trace(&self) -> i64 {
        (0..6).map(|i| self.0[i][i]).sum()
    }

    /// Substitutes z ↦ M z into f.
    pub fn act(&self, f: &MPoly) -> MPoly {
        let bind: Vec<(Var, MPoly)> = (0..6)
            .map(|i| (z(i), sum(&(0..6).map(|j| pv(z(j)).scale(&CycElem::from_int(self.0[i][j]))).collect::<Vec<_>>())))
            .collect();
        f.subst(&bind)
    }

    pub fn apply(&self, v: &[CycElem]) -> Vec<CycElem> {
        (0..6)
            .map(|i| (0..6).fold(CycElem::zero(), |a, j| &a + &v[j].scale(&Rat::from_integer(self.0[i][j].into()))))
            .collect()
    }
}

/// Matrix from the images of z₀..z₅ as integer combinations.
fn mat(rows: [[i64; 6]; 6]) -> RepMatrix {
    RepMatrix(rows)
}

/// The four printed generators: (12)(35), (12), (45), (13).
pub fn generator_matrices() -> Vec<(Perm, RepMatrix)> {
    vec![
        (
            Perm::from_cycles("(12)(35)"),
            mat([[-1, 0, 0, 0, 0, 0], [0, 0, -1, 0, 0, 0], [0, -1, 0, 0, 0, 0], [0, 0, 0, -1, 0, 0], [0, 0, 0, 0, 0, -1], [0, 0, 0, 0, -1, 0]]),
        ),
        (
            Perm::from_cycles("(12)"),
            mat([[-1, 0, 0, 0, 0, 0], [-1, 0, 0, 0, 0, 1], [-1, 0, 0, 0, 1, 0], [-1, 0, 0, 1, 0, 0], [-1, 0, 1, 0, 0, 0], [-1, 1, 0, 0, 0, 0]]),
        ),
        (
            Perm::from_cycles("(45)"),
            mat([[0, -1, 0, 0, 0, 1], [-1, 0, 0, 0, 0, 1], [0, 0, 0, 0, -1, 1], [0, 0, 0, -1, 0, 1], [0, 0, -1, 0, 0, 1], [0, 0, 0, 0, 0, 1]]),
        ),
        (
            Perm::from_cycles("(13)"),
            mat([[-1, 0, 1, 2, 0, -2], [0, -1, 0, 2, 1, -1], [0, 0, 1, 0, 0, -2], [0, 0, 0, 1, 0, -1], [0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, -1]]),
        ),
    ]
}

/// The representation on all of 𝒮₅, by closure from the generators. Fails if two words
/// for the same permutation give different matrices.
pub fn s5_rep_table() -> VResult<BTreeMap<Perm, RepMatrix>> {
    let gens = generator_matrices();
    let mut table: BTreeMap<Perm, RepMatrix> = BTreeMap::new();
    table.insert(Perm::identity(), RepMatrix::identity());
    let mut queue = VecDeque::from([Perm::identity()]);
    while let Some(p) = queue.pop_front() {
        let m = table[&p].clone();
        for (g, gm) in &gens {
            let q = g.compose(&p);
            let qm = gm.mul(&m);
            match table.get(&q) {
                Some(old) if *old != qm => return Err(VerifyError::RelationFailed(format!("{g} * {p}"))),
                Some(_) => {}
                None => {
                    table.insert(q, qm);
                    queue.push_back(q);
                }
            }
        }
    }
    ensure(table.len() == 120, || VerifyError::GroupOrderMismatch { expected: 120, got: table.len() })?;
    Ok(table)
}

pub fn s5_rep(g: &Perm) -> VResult<RepMatrix> {
    Ok(s5_rep_table()?[g].clone())
}

/// Coxeter presentation on s₁=(12), s₂=(23), s₃=(34), s₄=(45).
pub fn coxeter_relations_hold() -> bool {
    let g = generator_matrices();
    let (a, b, c, d) = (&g[0].1, &g[1].1, &g[2].1, &g[3].1);
    let s12 = b.clone();
    let s35 = b.mul(a);
    let s23 = d.mul(&s12).mul(d);
    let s34 = s35.mul(c).mul(&s35);
    let s = [s12, s23, s34, c.clone()];
    let id = RepMatrix::identity();
    (0..4).all(|i| {
        s[i].pow(2) == id && (i + 1..4).all(|j| s[i].mul(&s[j]).pow(if j == i + 1 { 3 } else { 2 }) == id)
    })
}

pub fn psi_polys() -> [MPoly; 6] {
    let (s, t) = (pv(SIGMA), pv(TAU));
    let one = MPoly::one();
    [
        &(&s * &t).pow(2) - &one,
        &(&s * &t.pow(2)) - &one,
        &(&s.pow(2) * &t) - &one,
        &(&s * &t) - &one,
        &t - &one,
        &s - &one,
    ]
}

pub fn psi_map(s: &RatFunc, t: &RatFunc) -> VResult<[RatFunc; 6]> {
    let bind = [(SIGMA, s.clone()), (TAU, t.clone())];
    let v: Vec<RatFunc> = psi_polys().iter().map(|p| p.substitute(&bind)).collect::<Result<_, _>>()?;
    Ok(v.try_into().unwrap())
}

/// Φ on the open set where the printed formula applies.
pub fn phi_map(z: &[CycElem]) -> VResult<PointP1P1> {
    let s = (&z[3] - &z[5], z[4].clone());
    let t = (&z[3] - &z[4], z[5].clone());
    if (s.0.is_zero() && s.1.is_zero()) || (t.0.is_zero() && t.1.is_zero()) {
        return Err(VerifyError::OutsideChart);
    }
    Ok(PointP1P1::new(ProjPoint(s.0, s.1), ProjPoint(t.0, t.1)))
}

/// Φ using alternative expressions for σ and τ (all equal on dP₅) where the first vanishes.
pub fn phi_image(z: &[CycElem]) -> VResult<PointP1P1> {
    let sc = [(&z[3] - &z[5], z[4].clone()), (&z[0] - &z[2], &z[1] - &z[3]), (&z[2] - &z[5], z[3].clone())];
    let tc = [(&z[3] - &z[4], z[5].clone()), (&z[0] - &z[1], &z[2] - &z[3]), (&z[1] - &z[4], z[3].clone())];
    let pick = |c: &[(CycElem, CycElem)]| -> VResult<ProjPoint> {
        let ok: Vec<&(CycElem, CycElem)> = c.iter().filter(|p| !(p.0.is_zero() && p.1.is_zero())).collect();
        let first = ok.first().ok_or(VerifyError::OutsideChart)?;
        let p = ProjPoint(first.0.clone(), first.1.clone());
        ensure(ok.iter().all(|q| p.same(&ProjPoint(q.0.clone(), q.1.clone()))), || VerifyError::OutsideChart)?;
        Ok(p)
    };
    Ok(PointP1P1::new(pick(&sc)?, pick(&tc)?))
}

pub fn q0() -> MPoly {
    let zz = |i| pv(z(i));
    &(&(&zz(1) - &zz(3)) * &zz(5)) - &(&(&zz(2) - &zz(3)) * &zz(4))
}

/// Kernel of a rational matrix (rows × cols), as a basis of column vectors.
pub fn nullspace(m: &[Vec<Rat>], cols: usize) -> Vec<Vec<Rat>> {
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let d = &f * &a[r][j];
                    a[i][j] = &a[i][j] - &d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rat::zero(); cols];
        v[free] = Rat::one();
        for (k, &pc_) in pivots.iter().enumerate() {
            v[pc_] = -a[k][free].clone();
        }
        out.push(v);
    }
    out
}

/// Rank of a rational matrix.
pub fn rank(m: &[Vec<Rat>]) -> usize {
    let cols = m.first().map_or(0, |r| r.len());
    cols - nullspace(m, cols).len()
}

fn quad_monomials() -> Vec<Mono> {
    let mut v = Vec::new();
    for i in 0..6 {
        for j in i..6 {
            v.push(Mono::var(z(i), 1).mul(&Mono::var(z(j), 1)));
        }
    }
    v
}

fn rat_coeffs(p: &MPoly, basis: &[Mono]) -> Vec<Rat> {
    basis.iter().map(|m| p.coeff(m).as_rat().expect("rational coefficient")).collect()
}

/// Basis of the quadrics vanishing on Ψ(ℙ¹×ℙ¹), from the kernel of the pull-back map.
pub fn dp5_quadrics() -> VResult<Vec<MPoly>> {
    let mons = quad_monomials();
    let bind: Vec<(Var, MPoly)> = (0..6).map(|i| (z(i), psi_polys()[i].clone())).collect();
    let pulls: Vec<MPoly> = mons.iter().map(|m| MPoly::term(m.clone(), CycElem::one()).subst(&bind)).collect();
    let mut keys: Vec<Mono> = pulls.iter().flat_map(|p| p.terms().map(|(m, _)| m.clone())).collect();
    keys.sort();
    keys.dedup();
    let rows: Vec<Vec<Rat>> = keys.iter().map(|k| pulls.iter().map(|p| p.coeff(k).as_rat().unwrap()).collect()).collect();
    let ker = nullspace(&rows, mons.len());
    ensure(ker.len() == 5, || VerifyError::DimensionMismatch { expected: 5, got: ker.len() })?;
    Ok(ker
        .iter()
        .map(|v| sum(&mons.iter().zip(v).map(|(m, c)| MPoly::term(m.clone(), CycElem::from_rat(c))).collect::<Vec<_>>()))
        .collect())
}

fn in_span(basis: &[MPoly], f: &MPoly) -> bool {
    let mons = quad_monomials();
    let mut rows: Vec<Vec<Rat>> = basis.iter().map(|b| rat_coeffs(b, &mons)).collect();
    let r0 = rank(&rows);
    rows.push(rat_coeffs(f, &mons));
    rank(&rows) == r0
}

pub fn dp5_psi_check() -> VResult<Report> {
    let mut rep = Report::new();
    let vals: Vec<CycElem> = psi_polys()
        .iter()
        .map(|p| p.eval_rat(&[(SIGMA, rat(2, 1)), (TAU, rat(3, 1))]).as_constant().unwrap())
        .collect();
    let expect = [35, 17, 11, 5, 2, 1].map(CycElem::from_int);
    ensure(vals == expect, || VerifyError::IdentityFailed { what: "Psi(2,3)".into(), residual: format!("{vals:?}") })?;
    let at11: Vec<MPoly> = psi_polys().iter().map(|p| p.eval_rat(&[(SIGMA, Rat::one()), (TAU, Rat::one())])).collect();
    ensure(at11.iter().all(|p| p.is_zero()), || VerifyError::IdentityFailed { what: "Psi(1,1)".into(), residual: "nonzero".into() })?;
    let bind: Vec<(Var, MPoly)> = (0..6).map(|i| (z(i), psi_polys()[i].clone())).collect();
    identity("q0 o Psi", &q0().subst(&bind))?;
    rep.note("Psi(2,3) = (35,17,11,5,2,1); Psi(1,1) = 0; q0 o Psi = 0");
    Ok(rep)
}

pub fn dp5_phi_check() -> VResult<Report> {
    let mut rep = Report::new();
    let p = phi_map(&[35, 17, 11, 5, 2, 1].map(CycElem::from_int))?;
    ensure(p.same(&PointP1P1::new(ProjPoint::int(2), ProjPoint::int(3))), || VerifyError::IdentityFailed {
        what: "Phi(35,17,11,5,2,1)".into(),
        residual: p.label(),
    })?;
    let e24 = [0, 1, 0, 0, 2, 0].map(CycElem::from_int);
    let p = phi_map(&e24)?;
    ensure(p.same(&PointP1P1::new(ProjPoint::int(0), ProjPoint::infinity())), || VerifyError::IdentityFailed {
        what: "Phi(E24)".into(),
        residual: p.label(),
    })?;
    let outside = phi_map(&[1, 2, 0, 0, 0, 0].map(CycElem::from_int));
    ensure(outside == Err(VerifyError::OutsideChart), || VerifyError::IdentityFailed { what: "Phi on E13".into(), residual: "no chart error".into() })?;
    // Φ∘Ψ = id as rational maps.
    let psi = psi_map(&RatFunc::var(SIGMA), &RatFunc::var(TAU))?;
    let s_img = psi[3].sub(&psi[5]).div(&psi[4])?;
    let t_img = psi[3].sub(&psi[4]).div(&psi[5])?;
    ensure(s_img == RatFunc::var(SIGMA) && t_img == RatFunc::var(TAU), || VerifyError::IdentityFailed {
        what: "Phi o Psi".into(),
        residual: format!("({s_img}, {t_img})"),
    })?;
    rep.note("Phi(35,17,11,5,2,1) = (2,3); Phi(E24) = (0,inf); Phi o Psi = id; (a,b,0,0,0,0) is outside the chart");
    Ok(rep)
}

pub fn dp5_quadrics_check() -> VResult<Report> {
    let mut rep = Report::new();
    let qs = dp5_quadrics()?;
    ensure(in_span(&qs, &q0()), || VerifyError::IdentityFailed { what: "q0 in the span".into(), residual: q0().to_string() })?;
    for (name, par) in exceptional_parametrizations() {
        for q in &qs {
            identity(&format!("quadric on E{name}"), &q.subst(&bind_z(&par)))?;
        }
    }
    for (g, m) in generator_matrices() {
        for q in &qs {
            ensure(in_span(&qs, &m.act(q)), || VerifyError::RelationFailed(format!("{g} does not preserve the quadrics")))?;
        }
    }
    rep.note("quadrics through Psi(P1xP1): kernel dimension 5, contains q0, vanish on all 10 exceptional lines, preserved by the generators");
    Ok(rep)
}

pub fn class_representatives() -> [(&'static str, Perm); 7] {
    ["e", "(12)", "(12)(34)", "(123)", "(1234)", "(12345)", "(123)(45)"].map(|s| (s, Perm::from_cycles(s)))
}

pub fn dp5_rep_check() -> VResult<Report> {
    let mut rep = Report::new();
    ensure(coxeter_relations_hold(), || VerifyError::RelationFailed("Coxeter presentation".into()))?;
    let table = s5_rep_table()?;
    for (g, m) in generator_matrices() {
        ensure(m.pow(2) == RepMatrix::identity(), || VerifyError::RelationFailed(format!("{g} is not an involution")))?;
        ensure(table[&g] == m, || VerifyError::RelationFailed(format!("{g}")))?;
    }
    // each generator induces a birational map of P1xP1: (s,t) -> Phi(M Psi(s,t)), and M Psi is
    // proportional to Psi of the image
    let base = psi_polys();
    for (g, m) in generator_matrices() {
        let w: Vec<RatFunc> = (0..6)
            .map(|i| RatFunc::poly(sum(&(0..6).map(|j| base[j].scale(&CycElem::from_int(m.0[i][j]))).collect::<Vec<_>>())))
            .collect();
        let s2 = w[3].sub(&w[5]).div(&w[4])?;
        let t2 = w[3].sub(&w[4]).div(&w[5])?;
        let img = psi_map(&s2, &t2)?;
        let k = (0..6).find(|&i| !img[i].is_zero()).unwrap();
        let factor = w[k].div(&img[k])?;
        for i in 0..6 {
            ensure(img[i].mul(&factor) == w[i], || VerifyError::RelationFailed(format!("{g} on z{i}")))?;
        }
        rep.note(format!("{g}: (s,t) -> ({}, {})", reduced(&s2), reduced(&t2)));
    }
    let tr: Vec<i64> = ["e", "(12)", "(12)(35)"].iter().map(|c| table[&Perm::from_cycles(c)].trace()).collect();
    rep.note(format!("traces: e {}, (12) {}, (12)(35) {}", tr[0], tr[1], tr[2]));
    Ok(rep)
}

/// Removes the factors s, t, s−1, t−1, st−1 shared by numerator and denominator, for display.
fn reduced(f: &RatFunc) -> String {
    let (s, t, one) = (pv(SIGMA), pv(TAU), MPoly::one());
    let cands = [s.clone(), t.clone(), &s - &one, &t - &one, &(&s * &t) - &one];
    let mut g = f.clone();
    loop {
        let before = g.clone();
        for c in &cands {
            g = g.cancel(c);
        }
        if g == before && g.num == before.num {
            break;
        }
    }
    if g.den.leading().and_then(|(_, c)| c.as_rat()).is_some_and(|c| c.is_negative()) {
        g = RatFunc { num: -&g.num, den: -&g.den };
    }
    if let Some(p) = g.to_poly() {
        return p.to_string();
    }
    if let Some(c) = g.den.as_constant() {
        return g.num.scale(&c.inv().unwrap()).to_string();
    }
    format!("({})/({})", g.num, g.den)
}

pub fn dp5_character_check() -> VResult<Report> {
    let mut rep = Report::new();
    let table = s5_rep_table()?;
    let expected = [6, 0, -2, 0, 0, 1, 0];
    let mut got = Vec::new();
    for ((name, g), e) in class_representatives().iter().zip(expected) {
        let t = table[g].trace();
        ensure(t == e, || VerifyError::CharacterMismatch(name.to_string()))?;
        got.push(t);
    }
    // class functions: trace depends only on cycle type
    let mut by_type: HashMap<Vec<usize>, i64> = HashMap::new();
    for (g, m) in &table {
        let mut ct = cycle_type(g);
        ct.sort();
        let tr = m.trace();
        if let Some(old) = by_type.insert(ct.clone(), tr) {
            ensure(old == tr, || VerifyError::CharacterMismatch(format!("{g}")))?;
        }
    }
    let norm: i64 = table.values().map(|m| m.trace().pow(2)).sum();
    ensure(norm == 120, || VerifyError::CharacterMismatch(format!("sum chi^2 = {norm}")))?;
    rep.note(format!("character on e,(12),(12)(34),(123),(1234),(12345),(123)(45): {got:?}; sum chi^2/120 = 1"));
    Ok(rep)
}

fn cycle_type(p: &Perm) -> Vec<usize> {
    let mut seen = [false; 5];
    let mut out = Vec::new();
    for i in 0..5 {
        if !seen[i] {
            let mut j = i;
            let mut len = 0;
            while !seen[j] {
                seen[j] = true;
                j = p.0[j] as usize;
                len += 1;
            }
            out.push(len);
        }
    }
    out
}

/// The printed G_z (which pulls back to 2G).
pub fn printed_gz() -> MPoly {
    let t = |c: i64, i: usize, j: usize| MPoly::term(Mono::var(z(i), 1).mul(&Mono::var(z(j), 1)), CycElem::from_int(c));
    sum(&[
        t(2, 0, 0), t(-2, 0, 1), t(-2, 0, 2), t(-2, 0, 3), t(1, 0, 4), t(1, 0, 5), t(2, 1, 1), t(1, 1, 2), t(-2, 1, 3),
        t(-2, 1, 4), t(2, 2, 2), t(-2, 2, 3), t(-2, 2, 5), t(6, 3, 3), t(-2, 3, 4), t(-2, 3, 5), t(2, 4, 4), t(1, 4, 5), t(2, 5, 5),
    ])
}

pub fn printed_hz() -> MPoly {
    let t = |c: i64, i: usize, j: usize| MPoly::term(Mono::var(z(i), 1).mul(&Mono::var(z(j), 1)), CycElem::frac(c, 3));
    sum(&[t(-2, 0, 3), t(1, 0, 4), t(1, 0, 5), t(-1, 1, 2), t(2, 1, 3), t(2, 2, 3), t(-2, 3, 4), t(-2, 3, 5), t(1, 4, 5)])
}

/// (G_z, H_z) by (signed) symmetrization of z₀z₁, normalized so that Ψ*G_z = G, Ψ*H_z = H.
pub fn wiman_quadrics() -> VResult<(MPoly, MPoly)> {
    let table = s5_rep_table()?;
    let seed = &pv(z(0)) * &pv(z(1));
    let mut g = MPoly::zero();
    let mut h = MPoly::zero();
    for (p, m) in &table {
        let img = m.act(&seed);
        g = &g + &img;
        h = &h + &img.scale(&CycElem::from_int(p.sign()));
    }
    Ok((g.scale_rat(&rat(1, 80)), h.scale_rat(&rat(1, 120))))
}

fn bind_psi() -> Vec<(Var, MPoly)> {
    (0..6).map(|i| (z(i), psi_polys()[i].clone())).collect()
}

pub fn dp5_wiman_check() -> VResult<Report> {
    let mut rep = Report::new();
    let (gz, hz) = wiman_quadrics()?;
    identity("Psi* G_z - G", &(&gz.subst(&bind_psi()) - &g_poly()))?;
    identity("Psi* H_z - H", &(&hz.subst(&bind_psi()) - &h_poly()))?;
    for (p, m) in generator_matrices() {
        identity(&format!("{p} G_z"), &(&m.act(&gz) - &gz))?;
        identity(&format!("{p} H_z"), &(&m.act(&hz) - &hz.scale(&CycElem::from_int(p.sign()))))?;
    }
    let pg = printed_gz();
    identity("printed G_z = 2 G_z", &(&pg - &gz.scale(&CycElem::from_int(2))))?;
    identity("printed H_z = H_z", &(&printed_hz() - &hz))?;
    let c33 = pg.coeff(&Mono::var(z(3), 2));
    ensure(c33 == CycElem::from_int(6), || VerifyError::IdentityFailed { what: "z3^2 coefficient".into(), residual: c33.to_string() })?;
    rep.note("G_z = sum_g g(z0 z1)/80, H_z = sum_g sgn(g) g(z0 z1)/120; Psi*G_z = G, Psi*H_z = H");
    rep.note("generators fix G_z and multiply H_z by their sign");
    rep.note("printed G_z (z3^2 coefficient 6) equals 2 G_z and pulls back to 2G; printed H_z equals H_z");
    Ok(rep)
}

/// How the image of an exceptional line in ℙ¹×ℙ¹ is described.
#[derive(Clone, Debug)]
pub enum CurveImage {
    Point(PointP1P1),
    /// Bihomogeneous equation in σ₁,σ₂,τ₁,τ₂.
    Curve(&'static str, MPoly),
}

#[derive(Clone, Debug)]
pub struct ExcCurve {
    pub label: &'static str,
    /// Six linear forms in (a, b).
    pub par: [MPoly; 6],
    pub image: CurveImage,
    /// Special points on C_φ; None for lines over a node.
    pub special: Option<[PointP1P1; 2]>,
}

fn ab(ca: i64, cb: i64) -> MPoly {
    &pv(AP).scale(&CycElem::from_int(ca)) + &pv(BP).scale(&CycElem::from_int(cb))
}

pub fn exceptional_parametrizations() -> Vec<(&'static str, [MPoly; 6])> {
    let (a, b, o) = ((1, 0), (0, 1), (0, 0));
    let row = |v: [(i64, i64); 6]| v.map(|(x, y)| ab(x, y));
    vec![
        ("12", row([(2, 2), (1, 2), (2, 1), (1, 1), b, a])),
        ("13", row([a, b, o, o, o, o])),
        ("14", row([o, o, a, o, o, b])),
        ("15", row([a, a, a, a, b, a])),
        ("23", row([a, a, a, a, a, b])),
        ("24", row([o, a, o, o, b, o])),
        ("25", row([a, o, b, o, o, o])),
        ("34", row([a, b, a, b, o, b])),
        ("35", row([o, b, a, o, b, a])),
        ("45", row([a, a, b, b, b, o])),
    ]
}

pub fn exceptional_curves() -> Vec<ExcCurve> {
    let w = CycElem::omega();
    let w2 = w.pow(2).unwrap();
    let f = |c: &CycElem| ProjPoint::finite(c.clone());
    let (mw, mw2) = (f(&-&w), f(&-&w2));
    let (zero, one, inf) = (ProjPoint::int(0), ProjPoint::int(1), ProjPoint::infinity());
    let p = PointP1P1::new;
    let (s1, s2, t1, t2) = (pv(SIGMA1), pv(SIGMA2), pv(TAU1), pv(TAU2));
    let pair = |a: PointP1P1, b: PointP1P1| Some([a, b]);
    let mut out = Vec::new();
    for (label, par) in exceptional_parametrizations() {
        let (image, special) = match label {
            "12" => (CurveImage::Point(p(one.clone(), one.clone())), None),
            "13" => (CurveImage::Curve("tau = inf", t2.clone()), pair(p(mw.clone(), inf.clone()), p(mw2.clone(), inf.clone()))),
            "14" => (CurveImage::Point(p(inf.clone(), zero.clone())), None),
            "15" => (CurveImage::Curve("sigma = 0", s1.clone()), pair(p(zero.clone(), mw.clone()), p(zero.clone(), mw2.clone()))),
            "23" => (CurveImage::Curve("tau = 0", t1.clone()), pair(p(mw.clone(), zero.clone()), p(mw2.clone(), zero.clone()))),
            "24" => (CurveImage::Point(p(zero.clone(), inf.clone())), None),
            "25" => (CurveImage::Curve("sigma = inf", s2.clone()), pair(p(inf.clone(), mw.clone()), p(inf.clone(), mw2.clone()))),
            "34" => (CurveImage::Curve("tau - 1 = 0", &t1 - &t2), pair(p(mw.clone(), one.clone()), p(mw2.clone(), one.clone()))),
            "35" => (
                CurveImage::Curve("sigma tau - 1 = 0", &(&s1 * &t1) - &(&s2 * &t2)),
                pair(p(mw.clone(), mw2.clone()), p(mw2.clone(), mw.clone())),
            ),
            _ => (CurveImage::Curve("sigma - 1 = 0", &s1 - &s2), pair(p(one.clone(), mw.clone()), p(one.clone(), mw2.clone()))),
        };
        out.push(ExcCurve { label, par, image, special });
    }
    out
}

fn bind_z(par: &[MPoly; 6]) -> Vec<(Var, MPoly)> {
    (0..6).map(|i| (z(i), par[i].clone())).collect()
}

fn eval_par(par: &[MPoly; 6], a: &CycElem, b: &CycElem) -> Vec<CycElem> {
    par.iter().map(|p| p.eval(&[(AP, a.clone()), (BP, b.clone())]).as_constant().unwrap()).collect()
}

/// Coefficient rows of a line z = a·v₁ + b·v₂.
fn line_vectors(par: &[MPoly; 6]) -> Vec<Vec<Rat>> {
    [(1, 0), (0, 1)]
        .iter()
        .map(|&(x, y)| eval_par(par, &CycElem::from_int(x), &CycElem::from_int(y)).iter().map(|c| c.as_rat().unwrap()).collect())
        .collect()
}

fn lines_meet(a: &[MPoly; 6], b: &[MPoly; 6]) -> bool {
    let mut rows = line_vectors(a);
    rows.extend(line_vectors(b));
    rank(&rows) < 4
}

fn same_line(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> bool {
    let mut rows = a.to_vec();
    rows.extend(b.iter().cloned());
    rank(&rows) == 2
}

/// Roots (a:b) of a binary quadratic A a² + B ab + C b² with rational coefficients and
/// discriminant −3 times a rational square.
fn quadratic_roots_omega(q: &MPoly) -> Option<[(CycElem, CycElem); 2]> {
    let c = |i: u32, j: u32| q.coeff(&Mono::from_pairs(&[(AP, i), (BP, j)])).as_rat();
    let (qa, qb, qc) = (c(2, 0)?, c(1, 1)?, c(0, 2)?);
    let disc = &qb * &qb - Rat::from_integer(4.into()) * &qa * &qc;
    let m = -disc / Rat::from_integer(3.into());
    if m.is_negative() {
        return None;
    }
    let (n, d) = (m.numer().sqrt(), m.denom().sqrt());
    if &(&n * &n) != m.numer() || &(&d * &d) != m.denom() {
        return None;
    }
    let root = CycElem::i_sqrt3().scale(&Rat::new(n, d));
    let two_a = CycElem::from_rat(&(&qa * Rat::from_integer(2.into())));
    if qa.is_zero() {
        return None;
    }
    let mb = CycElem::from_rat(&-qb);
    Some([(&mb + &root, two_a.clone()), (&mb - &root, two_a)])
}

pub fn dp5_exccurves_check() -> VResult<Report> {
    let mut rep = Report::new();
    let qs = dp5_quadrics()?;
    let (gz, hz) = wiman_quadrics()?;
    let curves = exceptional_curves();
    let samples = [(1, 2), (2, -3), (3, 5)].map(|(x, y)| (CycElem::from_int(x), CycElem::from_int(y)));
    for c in &curves {
        let fail = || VerifyError::CurveFailed(c.label.to_string());
        for q in &qs {
            ensure(q.subst(&bind_z(&c.par)).is_zero(), fail)?;
        }
        // image in ℙ¹×ℙ¹
        for (a, b) in &samples {
            let img = phi_image(&eval_par(&c.par, a, b))?;
            let ok = match &c.image {
                CurveImage::Point(p) => img.same(p),
                CurveImage::Curve(_, eq) => img.eval(eq).is_zero(),
            };
            ensure(ok, fail)?;
        }
        // C_φ meets the line where G_z vanishes (H_z vanishes identically on it)
        ensure(hz.subst(&bind_z(&c.par)).is_zero(), fail)?;
        let gq = gz.subst(&bind_z(&c.par));
        let roots = quadratic_roots_omega(&gq).ok_or_else(fail)?;
        match &c.special {
            Some(sp) => {
                for (a, b) in &roots {
                    let img = phi_image(&eval_par(&c.par, a, b))?;
                    ensure(sp.iter().any(|s| s.same(&img)), fail)?;
                }
                rep.note(format!("E{}: maps to {}, meets C_phi in {} and {}", c.label, describe(&c.image), sp[0].label(), sp[1].label()));
            }
            None => {
                let ab_labels: Vec<String> = roots.iter().map(|(a, b)| format!("({}:1)", a.div(b).unwrap())).collect();
                rep.note(format!("E{}: contracted to {}, C_phi meets it at (a:b) = {}", c.label, describe(&c.image), ab_labels.join(", ")));
            }
        }
    }
    // E12 special points are (ω:1), (ω²:1).
    let e12 = gz.subst(&bind_z(&curves[0].par));
    let w = CycElem::omega();
    for r in [w.clone(), w.pow(2).unwrap()] {
        ensure(e12.eval(&[(AP, r), (BP, CycElem::one())]).is_zero(), || VerifyError::CurveFailed("12".into()))?;
    }
    // the special points are exactly the 14 non-nodal points of the 17
    let nodal = intersection_points();
    let specials: Vec<&PointP1P1> = curves.iter().filter_map(|c| c.special.as_ref()).flatten().collect();
    ensure(specials.len() == 14 && nodal[3..].iter().all(|p| specials.iter().any(|s| s.same(p))), || VerifyError::CurveFailed("special point set".into()))?;
    // 𝒮₅ permutes the lines as E_ij ↦ E_{g(i)g(j)}
    let vecs: Vec<Vec<Vec<Rat>>> = curves.iter().map(|c| line_vectors(&c.par)).collect();
    for (g, m) in generator_matrices() {
        for (k, c) in curves.iter().enumerate() {
            let img: Vec<Vec<Rat>> = vecs[k]
                .iter()
                .map(|v| m.apply(&v.iter().map(CycElem::from_rat).collect::<Vec<_>>()).iter().map(|x| x.as_rat().unwrap()).collect())
                .collect();
            let (i, j) = (c.label.as_bytes()[0] - b'0', c.label.as_bytes()[1] - b'0');
            let (gi, gj) = (g.apply(i as usize), g.apply(j as usize));
            let target = format!("{}{}", gi.min(gj), gi.max(gj));
            let t = curves.iter().position(|x| x.label == target).unwrap();
            ensure(same_line(&img, &vecs[t]), || VerifyError::CurveFailed(format!("{g} E{}", c.label)))?;
        }
    }
    rep.note("generators map E_ij to E_g(i)g(j)");
    let (edges, degs) = petersen_pattern(&curves)?;
    rep.note(format!("{edges} meeting pairs, all degrees {degs}; E_ij meets E_kl iff the index pairs are disjoint"));
    Ok(rep)
}

fn describe(img: &CurveImage) -> String {
    match img {
        CurveImage::Point(p) => p.label(),
        CurveImage::Curve(s, _) => s.to_string(),
    }
}

/// Pairwise meetings of the ten lines in ℙ⁵ compared with disjointness of index pairs.
pub fn petersen_pattern(curves: &[ExcCurve]) -> VResult<(usize, usize)> {
    let mut deg = vec![0usize; curves.len()];
    let mut edges = 0;
    for i in 0..curves.len() {
        for j in i + 1..curves.len() {
            let meet = lines_meet(&curves[i].par, &curves[j].par);
            let disjoint = !curves[i].label.chars().any(|c| curves[j].label.contains(c));
            ensure(meet == disjoint, || VerifyError::CurveFailed(format!("E{} and E{}", curves[i].label, curves[j].label)))?;
            if meet {
                edges += 1;
                deg[i] += 1;
                deg[j] += 1;
            }
        }
    }
    ensure(edges == 15 && deg.iter().all(|&d| d == 3), || VerifyError::CountMismatch { what: "Petersen edges".into(), expected: 15, got: edges as i64 })?;
    Ok((edges, 3))
}

/// Text of the ten parametrizations, one line per curve.
pub fn exceptional_curves_text() -> String {
    exceptional_parametrizations()
        .iter()
        .map(|(l, par)| format!("E{}: {}\n", l, par.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")))
        .collect()
}

pub fn f_e() -> MPoly {
    let (x, y, zz) = (pv(X), pv(Y), pv(ZZ));
    let s1 = sum(&[x.clone(), y.clone(), zz.clone()]);
    let s2 = sum(&[&x * &y, &x * &zz, &y * &zz]);
    let s3 = prod(&[x, y, zz]);
    sum(&[
        (&s1.pow(2) * &s2.pow(2)).scale(&CycElem::from_int(2)),
        (&s1.pow(3) * &s3).scale(&CycElem::from_int(-6)),
        s2.pow(3).scale(&CycElem::from_int(-6)),
        prod(&[s1.clone(), s2.clone(), s3.clone()]).scale(&CycElem::from_int(19)),
        s3.pow(2).scale(&CycElem::from_int(-9)),
    ])
}

pub fn f_o() -> MPoly {
    let (x, y, zz) = (pv(X), pv(Y), pv(ZZ));
    prod(&[pc(2), x.clone(), y.clone(), zz.clone(), &x - &y, &x - &zz, &y - &zz])
}

pub fn dp5_p2dict_check() -> VResult<Report> {
    let mut rep = Report::new();
    let (s, t) = (pv(SIGMA), pv(TAU));
    let one = MPoly::one();
    let (x, y, zz) = (&(&s * &t) - &one, &s * &(&(&s * &t) - &one), &s * &(&t - &one));
    let xr = RatFunc::poly(x.clone());
    let yr = RatFunc::poly(y.clone());
    let zr = RatFunc::poly(zz.clone());
    let s_back = yr.div(&xr)?;
    let t_back = xr.mul(&yr.sub(&zr)).div(&yr.mul(&xr.sub(&zr)))?;
    ensure(s_back == RatFunc::var(SIGMA) && t_back == RatFunc::var(TAU), || VerifyError::IdentityFailed {
        what: "P2 -> P1xP1 -> P2".into(),
        residual: format!("{s_back}, {t_back}"),
    })?;
    // the other composition, projectively
    let (px, py, pz) = (RatFunc::var(X), RatFunc::var(Y), RatFunc::var(ZZ));
    let sg = py.div(&px)?;
    let ta = px.mul(&py.sub(&pz)).div(&py.mul(&px.sub(&pz)))?;
    let bind = [(SIGMA, sg.clone()), (TAU, ta.clone())];
    let img = [x.substitute(&bind)?, y.substitute(&bind)?, zz.substitute(&bind)?];
    let orig = [px, py, pz];
    for i in 0..3 {
        for j in i + 1..3 {
            let c = img[i].mul(&orig[j]).sub(&img[j].mul(&orig[i]));
            ensure(c.is_zero(), || VerifyError::IdentityFailed { what: "P1xP1 -> P2 -> P1xP1".into(), residual: c.to_string() })?;
        }
    }
    rep.note("sigma = y/x, tau = x(y-z)/(y(x-z)) and x = st-1, y = s(st-1), z = s(t-1) are inverse birational maps");
    // sextic identity
    let (xv, yv, zv) = (pv(X), pv(Y), pv(ZZ));
    let lhs_factor = RatFunc::poly(prod(&[xv.clone(), yv.clone(), &xv - &zv]).pow(4));
    let lhs = f_pm(1).substitute(&bind)?.mul(&lhs_factor);
    let vdm = RatFunc::poly(prod(&[xv.clone(), yv.clone(), &xv - &yv]).pow(2));
    // the printed form has f_e − φ f_o and constant 1; find which sign and constant actually hold
    let mut found = None;
    for sign in [-1i64, 1] {
        let rhs = vdm.mul(&RatFunc::poly(&f_e() + &(&pv(PHI) * &f_o()).scale(&CycElem::from_int(sign))));
        let q = lhs.div(&rhs)?;
        if let Some(c) = q.num.proportional(&q.den) {
            found = Some((sign, c));
        }
    }
    let (sign, c) = found.ok_or_else(|| VerifyError::IdentityFailed { what: "sextic identity".into(), residual: "no constant multiple".into() })?;
    let sgn = if sign > 0 { "+" } else { "-" };
    rep.note(format!("(xy(x-z))^4 F+(y/x, x(y-z)/(y(x-z))) = {c} (xy(x-y))^2 (f_e {sgn} phi f_o)"));
    if sign > 0 || c != CycElem::one() {
        rep.note("printed form (f_e - phi f_o, constant 1) does not hold; f_e - phi f_o = 0 is the image of F- = 0");
    }
    // symmetry of f_e, alternation of f_o
    let swaps = [[(X, pv(Y)), (Y, pv(X))], [(Y, pv(ZZ)), (ZZ, pv(Y))]];
    for sw in &swaps {
        identity("f_e symmetric", &(&f_e().subst(sw) - &f_e()))?;
        identity("f_o alternating", &(&f_o().subst(sw) + &f_o()))?;
    }
    let s3 = prod(&[pv(X), pv(Y), pv(ZZ)]);
    let c = f_e().coeff(&Mono::from_pairs(&[(X, 2), (Y, 2), (ZZ, 2)]));
    // x²y²z² collects −9 from s₃², 19 from s₁s₂s₃, −6·? from others; compare against direct term count
    let direct = sum(&[
        (&sum(&[pv(X), pv(Y), pv(ZZ)]).pow(2) * &sum(&[&pv(X) * &pv(Y), &pv(X) * &pv(ZZ), &pv(Y) * &pv(ZZ)]).pow(2)).scale(&CycElem::from_int(2)),
        (&sum(&[pv(X), pv(Y), pv(ZZ)]).pow(3) * &s3).scale(&CycElem::from_int(-6)),
        sum(&[&pv(X) * &pv(Y), &pv(X) * &pv(ZZ), &pv(Y) * &pv(ZZ)]).pow(3).scale(&CycElem::from_int(-6)),
        prod(&[sum(&[pv(X), pv(Y), pv(ZZ)]), sum(&[&pv(X) * &pv(Y), &pv(X) * &pv(ZZ), &pv(Y) * &pv(ZZ)]), s3.clone()]).scale(&CycElem::from_int(19)),
    ]);
    let rest = direct.coeff(&Mono::from_pairs(&[(X, 2), (Y, 2), (ZZ, 2)]));
    ensure(&c - &rest == CycElem::from_int(-9), || VerifyError::IdentityFailed { what: "s3^2 term".into(), residual: c.to_string() })?;
    rep.note("f_e is symmetric, f_o alternating; the s3^2 term contributes -9");
    // base points are nodes
    let sextic = &f_e() - &(&pv(PHI) * &f_o());
    let pts = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]];
    let vs = [X, Y, ZZ];
    for p in pts {
        let at = |f: &MPoly| f.eval_rat(&[(X, rat(p[0], 1)), (Y, rat(p[1], 1)), (ZZ, rat(p[2], 1))]);
        for v in vs {
            identity("gradient at a base point", &at(&sextic.derivative(v)))?;
        }
        let hess: Vec<Vec<MPoly>> = vs.iter().map(|&a| vs.iter().map(|&b| at(&sextic.derivative(a).derivative(b))).collect()).collect();
        let det3 = crate::multipoly::det_bareiss(hess.clone())?;
        identity("Hessian determinant", &det3)?;
        let minors: Vec<MPoly> = (0..3)
            .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
            .flat_map(|(i, j)| {
                let h = hess.clone();
                (0..3).flat_map(move |k| (k + 1..3).map(move |l| (i, j, k, l))).map(move |(i, j, k, l)| &(&h[i][k] * &h[j][l]) - &(&h[i][l] * &h[j][k]))
            })
            .collect();
        ensure(minors.iter().any(|m| !m.is_zero()), || VerifyError::IdentityFailed { what: format!("Hessian rank at {p:?}"), residual: "rank < 2".into() })?;
    }
    rep.note("p1..p4 are double points of f_e - phi f_o with Hessian of rank 2");
    Ok(rep)
}

pub fn checks() -> Vec<Check> {
    vec![
        Check { id: "dp5.psi", provenance: "§3.1 blow-up map Psi, q0", run: |_| dp5_psi_check() },
        Check { id: "dp5.phi", provenance: "§3.1 inverse map Phi", run: |_| dp5_phi_check() },
        Check { id: "dp5.quadrics", provenance: "§3.1 five quadrics", run: |_| dp5_quadrics_check() },
        Check { id: "dp5.rep", provenance: "§3.2 S5 matrices", run: |_| dp5_rep_check() },
        Check { id: "dp5.character", provenance: "Table CharTab", run: |_| dp5_character_check() },
        Check { id: "dp5.wiman", provenance: "§3.4 G_z, H_z", run: |_| dp5_wiman_check() },
        Check { id: "dp5.exccurves", provenance: "Table ExcCurves; App. 6.1 Petersen graph", run: |_| dp5_exccurves_check() },
        Check { id: "dp5.p2dict", provenance: "App. 6.3 f_e, f_o", run: |_| dp5_p2dict_check() },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn perm_basics() {
        let p = Perm::from_cycles("(123)(45)");
        assert_eq!(p.to_string(), "(123)(45)");
        assert_eq!(p.order(), 6);
        assert_eq!(p.sign(), -1);
        assert_eq!(Perm::all().len(), 120);
        assert_eq!(Perm::from_cycles("(12)").compose(&Perm::from_cycles("(12)")), Perm::identity());
    }

    #[test]
    fn traces_of_generators() {
        let g = generator_matrices();
        assert_eq!(g[0].1.trace(), -2);
        assert_eq!(g[1].1.trace(), 0);
        assert_eq!(RepMatrix::identity().trace(), 6);
    }

    #[test]
    fn nullspace_small() {
        let m = vec![vec![rat(1, 1), rat(2, 1), rat(3, 1)], vec![rat(2, 1), rat(4, 1), rat(6, 1)]];
        assert_eq!(nullspace(&m, 3).len(), 2);
        assert_eq!(rank(&m), 1);
    }

    #[test]
    fn phi_outside_chart() {
        assert_eq!(phi_map(&[1, 2, 0, 0, 0, 0].map(CycElem::from_int)), Err(VerifyError::OutsideChart));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]
        #[test]
        fn representation_is_homomorphism(i in 0usize..120, j in 0usize..120) {
            let table = s5_rep_table().unwrap();
            let all = Perm::all();
            let (g, h) = (all[i], all[j]);
            prop_assert_eq!(table[&g].mul(&table[&h]), table[&g.compose(&h)].clone());
        }
    }
}
