//! The Picard lattice of dP₅, its restriction to C_φ, and the subgroup
//! (ℤ/5ℤ)³ of Pic⁰(C_φ) cut out by the ten divisors D_ij.

use crate::check::{ensure, Check, Report, VResult, VerifyError};
use crate::delpezzo::{exceptional_curves, CurveImage, Perm};
use crate::dworklines::{PointP1P1, ProjPoint};
use crate::multipoly::pv;
use crate::multipoly::vars::{SIGMA1, SIGMA2, TAU1, TAU2};
use crate::plueckerdiv::{curve_intersection, table_divs, Divisor, LABELS};
use std::collections::BTreeSet;
use std::fmt;

/// Coefficients of l, E₁₅, E₂₅, E₃₅, E₄₅.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PicClass(pub [i64; 5]);

impl PicClass {
    pub fn zero() -> Self {
        PicClass([0; 5])
    }

    pub fn l() -> Self {
        PicClass([1, 0, 0, 0, 0])
    }

    /// E_i5 for i in 1..=4.
    pub fn e5(i: usize) -> Self {
        let mut v = [0; 5];
        v[i] = 1;
        PicClass(v)
    }

    /// E_ij = E_ji; for i, j ≤ 4 the strict transform l − E_k5 − E_l5.
    pub fn e(i: usize, j: usize) -> Self {
        let (i, j) = (i.min(j), i.max(j));
        assert!(1 <= i && i < j && j <= 5);
        if j == 5 {
            return PicClass::e5(i);
        }
        let mut c = PicClass::l();
        for k in 1..=4 {
            if k != i && k != j {
                c.0[k] -= 1;
            }
        }
        c
    }

    pub fn label(s: &str) -> Self {
        if s == "l" {
            return PicClass::l();
        }
        let b = s.as_bytes();
        PicClass::e((b[0] - b'0') as usize, (b[1] - b'0') as usize)
    }

    pub fn minus_k() -> Self {
        PicClass([3, -1, -1, -1, -1])
    }

    pub fn dot(&self, o: &PicClass) -> i64 {
        self.0[0] * o.0[0] - (1..5).map(|i| self.0[i] * o.0[i]).sum::<i64>()
    }

    pub fn add(&self, o: &PicClass) -> PicClass {
        PicClass(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }

    pub fn sub(&self, o: &PicClass) -> PicClass {
        PicClass(std::array::from_fn(|i| self.0[i] - o.0[i]))
    }

    pub fn scale(&self, k: i64) -> PicClass {
        PicClass(std::array::from_fn(|i| k * self.0[i]))
    }

    /// Degree of the restriction to C_φ, whose class is −2K.
    pub fn degree_on_curve(&self) -> i64 {
        self.dot(&PicClass::minus_k().scale(2))
    }
}

impl fmt::Display for PicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["l", "E15", "E25", "E35", "E45"];
        let mut s = String::new();
        for (k, c) in self.0.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            let sign = if *c < 0 { "-" } else if s.is_empty() { "" } else { "+" };
            let m = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
            s.push_str(&format!("{sign}{m}{}", names[k]));
        }
        if s.is_empty() {
            s.push('0');
        }
        write!(f, "{s}")
    }
}

/// Class of a formal sum of the symbols l and ij.
pub fn class_of(terms: &[(&str, i64)]) -> PicClass {
    terms.iter().fold(PicClass::zero(), |acc, (s, c)| acc.add(&PicClass::label(s).scale(*c)))
}

/// Class whose restriction is the given divisor, with D_ij = i*(E_ij).
pub fn class_of_divisor(d: &Divisor) -> PicClass {
    d.0.iter().fold(PicClass::zero(), |acc, (s, c)| acc.add(&PicClass::label(s).scale(*c)))
}

fn pairs() -> Vec<(usize, usize)> {
    LABELS.iter().map(|s| ((s.as_bytes()[0] - b'0') as usize, (s.as_bytes()[1] - b'0') as usize)).collect()
}

/// The action of a permutation on Pic(dP₅), determined by E_ij ↦ E_g(i)g(j)
/// on the basis l = E₁₂ + E₃₅ + E₄₅ and E_i5.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PicAction(pub [[i64; 5]; 5]);

impl PicAction {
    pub fn of(g: &Perm) -> Self {
        let img = |i: usize, j: usize| PicClass::e(g.apply(i), g.apply(j));
        let cols = [
            img(1, 2).add(&img(3, 5)).add(&img(4, 5)),
            img(1, 5),
            img(2, 5),
            img(3, 5),
            img(4, 5),
        ];
        PicAction(std::array::from_fn(|r| std::array::from_fn(|c| cols[c].0[r])))
    }

    pub fn apply(&self, x: &PicClass) -> PicClass {
        PicClass(std::array::from_fn(|r| (0..5).map(|c| self.0[r][c] * x.0[c]).sum()))
    }

    pub fn mul(&self, o: &PicAction) -> PicAction {
        PicAction(std::array::from_fn(|r| std::array::from_fn(|c| (0..5).map(|k| self.0[r][k] * o.0[k][c]).sum())))
    }
}

/// The root basis of Pic⁰ = K^⊥.
pub fn alphas() -> [PicClass; 4] {
    [
        PicClass([0, 1, -1, 0, 0]),
        PicClass([0, 0, 1, -1, 0]),
        PicClass([0, 0, 0, 1, -1]),
        PicClass([1, -1, -1, -1, 0]),
    ]
}

pub fn cartan_a4() -> [[i64; 4]; 4] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| match (i as i64 - j as i64).abs() {
            0 => 2,
            1 => -1,
            _ => 0,
        })
    })
}

/// Coordinates in the α basis of a class orthogonal to K.
pub fn alpha_coords(x: &PicClass) -> Option<[i64; 4]> {
    let a4 = x.0[0];
    let a1 = x.0[1] + a4;
    let a2 = x.0[2] + a1 + a4;
    let a3 = x.0[3] + a2 + a4;
    let al = alphas();
    let back = (0..4).fold(PicClass::zero(), |acc, i| acc.add(&al[i].scale([a1, a2, a3, a4][i])));
    (back == *x).then_some([a1, a2, a3, a4])
}

/// Invariant factors of an integer matrix.
pub fn smith_invariants(m: &[Vec<i64>]) -> Vec<i64> {
    let mut a: Vec<Vec<i64>> = m.to_vec();
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut out = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pr, pc)) = (t..rows)
            .flat_map(|r| (t..cols).map(move |c| (r, c)))
            .filter(|&(r, c)| a[r][c] != 0)
            .min_by_key(|&(r, c)| a[r][c].abs())
        else {
            break;
        };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        let mut clean = true;
        for r in t + 1..rows {
            let q = a[r][t] / a[t][t];
            for c in t..cols {
                a[r][c] -= q * a[t][c];
            }
            clean &= a[r][t] == 0;
        }
        for c in t + 1..cols {
            let q = a[t][c] / a[t][t];
            for r in t..rows {
                a[r][c] -= q * a[r][t];
            }
            clean &= a[t][c] == 0;
        }
        if !clean {
            continue;
        }
        // The pivot must divide the rest of the block.
        if let Some((r, _)) = (t + 1..rows).flat_map(|r| (t + 1..cols).map(move |c| (r, c))).find(|&(r, c)| a[r][c] % a[t][t] != 0) {
            for c in t..cols {
                a[t][c] += a[r][c];
            }
            continue;
        }
        out.push(a[t][t].abs());
        t += 1;
    }
    out
}

fn m5(x: i64) -> i64 {
    x.rem_euclid(5)
}

fn inv5(x: i64) -> i64 {
    [0, 1, 3, 2, 4][m5(x) as usize]
}

/// Solves Σ c_k cols[k] = v over 𝔽₅ for linearly independent columns.
fn solve5(cols: &[Vec<i64>], v: &[i64]) -> Option<Vec<i64>> {
    let n = v.len();
    let k = cols.len();
    let mut a: Vec<Vec<i64>> = (0..n).map(|r| (0..k).map(|c| m5(cols[c][r])).chain([m5(v[r])]).collect()).collect();
    let mut piv = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..n).find(|&i| a[i][c] != 0) else { return None };
        a.swap(r, p);
        let iv = inv5(a[r][c]);
        for x in a[r].iter_mut() {
            *x = m5(*x * iv);
        }
        for i in 0..n {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                for j in 0..=k {
                    a[i][j] = m5(a[i][j] - f * a[r][j]);
                }
            }
        }
        piv.push(r);
        r += 1;
    }
    if (r..n).any(|i| a[i][k] != 0) {
        return None;
    }
    Some(piv.iter().map(|&p| a[p][k]).collect())
}

pub fn rank5(vecs: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<i64>> = vecs.iter().map(|v| v.iter().map(|x| m5(*x)).collect()).collect();
    let cols = a.first().map_or(0, |v| v.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, p);
        let iv = inv5(a[r][c]);
        for x in a[r].iter_mut() {
            *x = m5(*x * iv);
        }
        for i in 0..a.len() {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                for j in 0..cols {
                    a[i][j] = m5(a[i][j] - f * a[r][j]);
                }
            }
        }
        r += 1;
    }
    r
}

/// The kernel data of i* on Pic⁰: the relation coming from the function
/// k₁₄/(l₁l₂) together with 5·Pic⁰ (all D_ij − D_pq are 5-torsion).
#[derive(Clone, Debug)]
pub struct Restriction {
    /// Class of (k₁₄) − (l₁) − (l₂).
    pub relation: PicClass,
}

impl Restriction {
    /// Uses the intersection divisors computed from the curves themselves.
    pub fn computed() -> VResult<Self> {
        let k14 = class_of_divisor(&curve_intersection("k14")?);
        let l1 = class_of_divisor(&curve_intersection("l1")?);
        let l2 = class_of_divisor(&curve_intersection("l2")?);
        Ok(Restriction { relation: k14.sub(&l1).sub(&l2) })
    }

    /// Uses the divisors as tabulated.
    pub fn tabulated() -> Self {
        let c = |n: &str| class_of_divisor(&table_divs(n));
        Restriction { relation: c("k14").sub(&c("l1")).sub(&c("l2")) }
    }

    /// Whether x restricts to the zero class: x ∈ 5·Pic⁰ + ℤ·relation.
    pub fn in_kernel(&self, x: &PicClass) -> bool {
        let (Some(a), Some(r)) = (alpha_coords(x), alpha_coords(&self.relation)) else { return false };
        let col = vec![r.to_vec()];
        a.iter().all(|c| m5(*c) == 0) || solve5(&col, &a).is_some()
    }

    /// Linear equivalence of the restrictions of two classes.
    pub fn equivalent(&self, a: &PicClass, b: &PicClass) -> bool {
        a == b || self.in_kernel(&a.sub(b))
    }

    /// Coordinates of i*(x) for x ∈ Pic⁰ in the basis e₁₅, e₂₅, e₃₅.
    pub fn coords(&self, x: &PicClass) -> VResult<[i64; 3]> {
        let err = || VerifyError::ChainFailed(format!("{x} is not in Pic0"));
        let a = alpha_coords(x).ok_or_else(err)?;
        let basis: Vec<Vec<i64>> = [(1, 5), (2, 5), (3, 5)]
            .iter()
            .map(|&(i, j)| alpha_coords(&PicClass::e(i, j).sub(&PicClass::e(4, 5))).unwrap().to_vec())
            .chain([alpha_coords(&self.relation).ok_or_else(err)?.to_vec()])
            .collect();
        let c = solve5(&basis, &a).ok_or_else(|| VerifyError::RankMismatch { expected: 4, got: rank5(&basis) })?;
        Ok([c[0], c[1], c[2]])
    }

    /// e_ij = i*(E_ij − E₄₅) in 𝔽₅³.
    pub fn e_ij(&self, i: usize, j: usize) -> VResult<[i64; 3]> {
        self.coords(&PicClass::e(i, j).sub(&PicClass::e(4, 5)))
    }

    /// Induced action of g on 𝔽₅³ (columns are the images of e₁₅, e₂₅, e₃₅).
    pub fn induced(&self, g: &Perm) -> VResult<[[i64; 3]; 3]> {
        let act = PicAction::of(g);
        let mut m = [[0; 3]; 3];
        for (c, i) in [1, 2, 3].into_iter().enumerate() {
            let img = self.coords(&act.apply(&PicClass::e(i, 5).sub(&PicClass::e(4, 5))))?;
            for r in 0..3 {
                m[r][c] = img[r];
            }
        }
        Ok(m)
    }
}

fn mat3_vec(m: &[[i64; 3]; 3], v: &[i64; 3]) -> [i64; 3] {
    std::array::from_fn(|r| m5((0..3).map(|c| m[r][c] * v[c]).sum()))
}

fn mat3_mul(a: &[[i64; 3]; 3], b: &[[i64; 3]; 3]) -> [[i64; 3]; 3] {
    std::array::from_fn(|r| std::array::from_fn(|c| m5((0..3).map(|k| a[r][k] * b[k][c]).sum())))
}

/// The printed table of e_ij in 𝔽₅³.
pub fn printed_eij() -> Vec<(&'static str, [i64; 3])> {
    vec![
        ("15", [1, 0, 0]),
        ("25", [0, 1, 0]),
        ("35", [0, 0, 1]),
        ("12", [2, 2, 1]),
        ("13", [2, 1, 2]),
        ("23", [1, 2, 2]),
        ("14", [2, 1, 1]),
        ("24", [1, 2, 1]),
        ("34", [1, 1, 2]),
    ]
}

pub fn intersection_check() -> VResult<Report> {
    let mut rep = Report::new();
    let ps = pairs();
    let mut edges = 0;
    for (a, &(i, j)) in ps.iter().enumerate() {
        let ei = PicClass::e(i, j);
        ensure(ei.dot(&ei) == -1, || VerifyError::ClassMismatch(format!("E{i}{j}^2 = {}", ei.dot(&ei))))?;
        ensure(ei.dot(&PicClass::minus_k()) == 1, || VerifyError::ClassMismatch(format!("-K.E{i}{j}")))?;
        let mut deg = 0;
        for (b, &(k, l)) in ps.iter().enumerate() {
            if a == b {
                continue;
            }
            let disjoint = [k, l].iter().all(|x| *x != i && *x != j);
            let want = i64::from(disjoint);
            let got = ei.dot(&PicClass::e(k, l));
            ensure(got == want, || VerifyError::ClassMismatch(format!("E{i}{j}.E{k}{l} = {got}, expected {want}")))?;
            deg += want;
            if a < b {
                edges += want;
            }
        }
        ensure(deg == 3, || VerifyError::CountMismatch { what: format!("neighbours of E{i}{j}"), expected: 3, got: deg })?;
    }
    ensure(edges == 15, || VerifyError::CountMismatch { what: "Petersen edges".into(), expected: 15, got: edges })?;
    rep.note("E_ij.E_kl = 1 for disjoint index pairs and 0 for pairs sharing an index; the graph is 3-regular with 10 vertices and 15 edges (Petersen)");
    rep.note("E_ij^2 = -1 for all ten classes (the text's \"E_ij^2 = 0\" is a misprint for exceptional curves)");
    let e = |s: &str| PicClass::label(s);
    rep.note(format!("E12.E34 = {}, E12.E13 = {}", e("12").dot(&e("34")), e("12").dot(&e("13"))));
    ensure(PicClass::l().dot(&PicClass::l()) == 1, || VerifyError::ClassMismatch("l^2".into()))?;
    Ok(rep)
}

pub fn canonical_check() -> VResult<Report> {
    let mut rep = Report::new();
    let mk = PicClass::minus_k();
    let k2 = mk.dot(&mk);
    ensure(k2 == 5, || VerifyError::ClassMismatch(format!("(-K)^2 = {k2}")))?;
    let c = mk.scale(2);
    let c2 = c.dot(&c);
    ensure(c2 == 20, || VerifyError::ClassMismatch(format!("(-2K)^2 = {c2}")))?;
    let sum = pairs().iter().fold(PicClass::zero(), |acc, &(i, j)| acc.add(&PicClass::e(i, j)));
    ensure(sum == c, || VerifyError::ClassMismatch(format!("sum of E_ij = {sum}")))?;
    // Adjunction: 2g − 2 = C·(C + K) for C = −2K.
    let genus = (c.dot(&c.sub(&mk)) + 2) / 2;
    ensure(genus == 6, || VerifyError::ClassMismatch(format!("genus {genus}")))?;
    rep.note(format!("-K = {mk}, (-K)^2 = 5, (-2K)^2 = 20 base points of the Wiman pencil"));
    rep.note(format!("sum of the ten E_ij = {sum} = -2K"));
    rep.note("C_phi = -2K has arithmetic genus 6 and K_C = i*(-K) has degree 10");
    Ok(rep)
}

/// Pull-back of a bidegree (n, m) class, minus the multiplicities at the three blown-up points.
pub fn strict_transform(n: i64, m: i64, mult: [(&str, i64); 3]) -> PicClass {
    let base = PicClass::l().sub(&PicClass::e5(3)).scale(n).add(&class_of(&[("l", 2), ("15", -1), ("25", -1), ("35", -1), ("45", -1)]).scale(m));
    mult.iter().fold(base, |acc, (s, k)| acc.sub(&PicClass::label(s).scale(*k)))
}

pub fn classes_check() -> VResult<Report> {
    let mut rep = Report::new();
    let mk = PicClass::minus_k();
    let sigma0 = strict_transform(1, 0, [("12", 0), ("14", 0), ("24", 0)]);
    let tau0 = strict_transform(0, 1, [("12", 0), ("14", 0), ("24", 0)]);
    let cphi = strict_transform(4, 4, [("12", 2), ("14", 2), ("24", 2)]);
    ensure(cphi == mk.scale(2), || VerifyError::ClassMismatch(format!("C_phi = {cphi}")))?;
    let conic = strict_transform(2, 2, [("12", 1), ("14", 1), ("24", 1)]);
    ensure(conic == mk, || VerifyError::ClassMismatch(format!("(2,2) strict transform = {conic}")))?;
    rep.note(format!("bidegree (n,m) pulls back to n({sigma0}) + m({tau0}); C_phi (mult 2 at the three points) = {cphi} = -2K"));
    rep.note(format!("a (2,2) curve through the three points has strict transform {conic} = -K"));
    // ψ = ∞: two rulings and three (1,1) curves through two of the points.
    let comps = [
        ("(1,0)", strict_transform(1, 0, [("12", 0), ("14", 0), ("24", 0)]), "l-E35"),
        ("(0,1)", strict_transform(0, 1, [("12", 0), ("14", 0), ("24", 0)]), "2l-E15-E25-E35-E45"),
        ("(1,1) through (1,1),(0,inf)", strict_transform(1, 1, [("12", 1), ("14", 0), ("24", 1)]), "l-E25"),
        ("(1,1) through (inf,0),(0,inf)", strict_transform(1, 1, [("12", 0), ("14", 1), ("24", 1)]), "l-E45"),
        ("(1,1) through (1,1),(inf,0)", strict_transform(1, 1, [("12", 1), ("14", 1), ("24", 0)]), "l-E15"),
    ];
    let mut total = PicClass::zero();
    for (name, cls, printed) in &comps {
        ensure(cls.to_string() == *printed, || VerifyError::ClassMismatch(format!("{name}: {cls}, printed {printed}")))?;
        ensure(cls.dot(cls) == 0 && cls.dot(&mk) == 2, || VerifyError::ClassMismatch(format!("{name} is not a conic class")))?;
        total = total.add(cls);
    }
    ensure(total == mk.scale(2), || VerifyError::ClassMismatch(format!("sum of psi=inf components {total}")))?;
    rep.note("psi = inf components: l-E15, l-E25, l-E35, l-E45, 2l-E15-E25-E35-E45, each a conic pencil class, summing to -2K");
    Ok(rep)
}

/// The six coordinate lines and the pull-back Φ* read off from the exceptional curves.
pub fn phistar_check() -> VResult<Report> {
    let mut rep = Report::new();
    let (s1, s2, t1, t2) = (pv(SIGMA1), pv(SIGMA2), pv(TAU1), pv(TAU2));
    let (zero, one, inf) = (ProjPoint::int(0), ProjPoint::int(1), ProjPoint::infinity());
    let lines = [
        ("sigma = 0", s1.clone(), 0, zero.clone(), "15+24"),
        ("sigma = inf", s2.clone(), 0, inf.clone(), "14+25"),
        ("sigma = 1", &s1 - &s2, 0, one.clone(), "12+45"),
        ("tau = 0", t1.clone(), 1, zero, "14+23"),
        ("tau = inf", t2.clone(), 1, inf, "13+24"),
        ("tau = 1", &t1 - &t2, 1, one, "12+34"),
    ];
    let curves = exceptional_curves();
    for (name, poly, coord, value, printed) in lines {
        let mut found = Vec::new();
        for c in &curves {
            let hit = match &c.image {
                CurveImage::Curve(_, f) => f.proportional(&poly).is_some(),
                CurveImage::Point(p) => {
                    let q: &PointP1P1 = p;
                    (if coord == 0 { &q.s } else { &q.t }).same(&value)
                }
            };
            if hit {
                found.push(c.label);
            }
        }
        found.sort();
        let got = found.join("+");
        ensure(got == printed, || VerifyError::ClassMismatch(format!("Phi*({name}) = {got}, printed {printed}")))?;
        let cls = found.iter().fold(PicClass::zero(), |acc, s| acc.add(&PicClass::label(s)));
        let want = if coord == 0 { strict_transform(1, 0, [("12", 0), ("14", 0), ("24", 0)]) } else { strict_transform(0, 1, [("12", 0), ("14", 0), ("24", 0)]) };
        ensure(cls == want, || VerifyError::ClassMismatch(format!("Phi*({name}) class {cls}")))?;
        let pretty: Vec<String> = found.iter().map(|s| format!("E{s}")).collect();
        rep.note(format!("Phi*({name}) = {} = {cls}", pretty.join(" + ")));
    }
    Ok(rep)
}

pub fn action_check() -> VResult<Report> {
    let mut rep = Report::new();
    let all = Perm::all();
    let mk = PicClass::minus_k();
    let basis: Vec<PicClass> = (0..5).map(|i| PicClass(std::array::from_fn(|k| i64::from(k == i)))).collect();
    for g in &all {
        let a = PicAction::of(g);
        for &(i, j) in &pairs() {
            let got = a.apply(&PicClass::e(i, j));
            let want = PicClass::e(g.apply(i), g.apply(j));
            ensure(got == want, || VerifyError::ClassMismatch(format!("{g}: E{i}{j} -> {got}")))?;
        }
        ensure(a.apply(&mk) == mk, || VerifyError::ClassMismatch(format!("{g} moves K")))?;
        for x in &basis {
            for y in &basis {
                ensure(a.apply(x).dot(&a.apply(y)) == x.dot(y), || VerifyError::ClassMismatch(format!("{g} is not an isometry")))?;
            }
        }
    }
    for g in all.iter().step_by(7) {
        for h in all.iter().step_by(11) {
            ensure(PicAction::of(&g.compose(h)) == PicAction::of(g).mul(&PicAction::of(h)), || {
                VerifyError::RelationFailed(format!("action of {g} o {h}"))
            })?;
        }
    }
    let distinct: BTreeSet<_> = all.iter().map(|g| PicAction::of(g).0).collect();
    ensure(distinct.len() == 120, || VerifyError::GroupOrderMismatch { expected: 120, got: distinct.len() })?;
    rep.note("all 120 permutations act on Pic(dP5) as isometries fixing K with E_ij -> E_g(i)g(j); the action is faithful");
    // The transposition (45) is the Cremona transformation.
    let c = PicAction::of(&Perm::from_cycles("(45)"));
    let printed = [
        (PicClass::l(), class_of(&[("l", 2), ("15", -1), ("25", -1), ("35", -1)])),
        (PicClass::e5(1), class_of(&[("l", 1), ("25", -1), ("35", -1)])),
        (PicClass::e5(2), class_of(&[("l", 1), ("15", -1), ("35", -1)])),
        (PicClass::e5(3), class_of(&[("l", 1), ("15", -1), ("25", -1)])),
        (PicClass::e5(4), PicClass::e5(4)),
    ];
    for (x, want) in &printed {
        let got = c.apply(x);
        ensure(got == *want, || VerifyError::ClassMismatch(format!("(45): {x} -> {got}, expected {want}")))?;
    }
    rep.note("(45) acts as the Cremona involution: l -> 2l-E15-E25-E35, E_k5 -> l-E_i5-E_j5, E45 fixed");
    Ok(rep)
}

pub fn roots_check() -> VResult<Report> {
    let mut rep = Report::new();
    let al = alphas();
    let cartan = cartan_a4();
    for i in 0..4 {
        for j in 0..4 {
            ensure(al[i].dot(&al[j]) == -cartan[i][j], || VerifyError::GramMismatch)?;
        }
        ensure(al[i].dot(&PicClass::minus_k()) == 0, || VerifyError::ClassMismatch(format!("alpha{} not in K-perp", i + 1)))?;
        ensure(al[i].degree_on_curve() == 0, || VerifyError::ClassMismatch(format!("deg i*(alpha{})", i + 1)))?;
    }
    rep.note("Gram(alpha_i) = -Cartan(A4): diagonal -2, neighbours 1, otherwise 0");
    // The α span K^⊥: rank 4 and the 4×4 minors have gcd 1 (primitive sublattice).
    let m: Vec<Vec<i64>> = al.iter().map(|a| a.0.to_vec()).collect();
    let inv = smith_invariants(&m);
    ensure(inv == vec![1, 1, 1, 1], || VerifyError::ClassMismatch(format!("alpha lattice invariants {inv:?}")))?;
    rep.note("the alpha_i are a primitive rank-4 sublattice orthogonal to K, hence a basis of Pic0 = K-perp");
    ensure(al[3] == PicClass::label("34").sub(&PicClass::label("35")), || VerifyError::ClassMismatch("alpha4 = E34 - E35".into()))?;
    ensure(PicClass::l().degree_on_curve() == 6, || VerifyError::ClassMismatch("deg i*l".into()))?;
    for &(i, j) in &pairs() {
        ensure(PicClass::e(i, j).degree_on_curve() == 2, || VerifyError::ClassMismatch(format!("deg D{i}{j}")))?;
    }
    rep.note("alpha4 = E34 - E35; deg i*(l) = 6 and deg D_ij = 2, so deg o i* has image 2Z");
    Ok(rep)
}

/// One printed line of a chain, as a formal sum of l and D_ij.
type Line = Vec<(&'static str, i64)>;

fn chain_lines() -> Vec<(&'static str, Vec<Line>)> {
    vec![
        (
            "(k14)",
            vec![
                vec![("23", 1), ("25", 1), ("24", 3), ("12", 3)],
                vec![("l", 1), ("15", -1), ("45", -1), ("25", 1), ("l", 3), ("15", -3), ("35", -3), ("l", 3), ("35", -3), ("45", -3)],
                vec![("l", 7), ("15", -4), ("25", 1), ("35", -6), ("45", -4)],
                vec![("34", 7), ("15", 7), ("25", 7), ("15", -4), ("25", 1), ("35", -6), ("45", -4)],
                vec![("34", 7), ("15", 3), ("25", 8), ("35", -6), ("45", -4)],
            ],
        ),
        (
            "(l1)",
            vec![
                vec![("13", 1), ("23", 1), ("34", 1), ("35", 1)],
                vec![("l", 1), ("25", -1), ("45", -1), ("l", 1), ("15", -1), ("45", -1), ("34", 1), ("35", 1)],
                vec![("l", 2), ("15", -1), ("25", -1), ("35", 1), ("45", -2), ("34", 1)],
                vec![("34", 2), ("15", 2), ("25", 2), ("15", -1), ("25", -1), ("35", 1), ("45", -2), ("34", 1)],
                vec![("34", 3), ("15", 1), ("25", 1), ("35", 1), ("45", -2)],
            ],
        ),
        ("(l2)", vec![vec![("15", 1), ("25", 1), ("35", 1), ("45", 1)]]),
        (
            "relation",
            vec![
                vec![("34", 7), ("15", 3), ("25", 8), ("35", -6), ("45", -4)],
                vec![("34", 3), ("15", 2), ("25", 2), ("35", 2), ("45", -1)],
            ],
        ),
        (
            "4D34",
            vec![
                vec![("34", 4)],
                vec![("15", -1), ("25", -6), ("35", 8), ("45", 3)],
                vec![("15", -1), ("25", -1), ("35", 3), ("45", 3)],
            ],
        ),
        ("D34", vec![vec![("34", 1)], vec![("15", 1), ("25", 1), ("35", -3), ("45", 2)]]),
        (
            "e34",
            vec![
                vec![("34", 1), ("45", -1)],
                vec![("15", 1), ("45", -1), ("25", 1), ("45", -1), ("35", 2), ("45", -2)],
            ],
        ),
        (
            "K_C",
            vec![
                vec![("l", 3), ("15", -1), ("25", -1), ("35", -1), ("45", -1)],
                vec![("34", 3), ("15", 3), ("25", 3), ("15", -1), ("25", -1), ("35", -1), ("45", -1)],
                vec![("15", 6), ("25", 6), ("35", -9), ("45", 6), ("15", -1), ("25", -1), ("35", -1), ("45", -1)],
                vec![("15", 5), ("25", 5), ("35", -10), ("45", 5)],
                vec![("15", 5)],
            ],
        ),
    ]
}

/// Replays every printed chain; returns for each step whether it is an equality
/// in Pic(dP₅) or needs the kernel of i*.
pub fn replay_chains(res: &Restriction) -> VResult<Vec<(String, Vec<bool>)>> {
    let mut out = Vec::new();
    for (name, lines) in chain_lines() {
        let mut steps = Vec::new();
        for w in lines.windows(2) {
            let (a, b) = (class_of(&w[0]), class_of(&w[1]));
            ensure(res.equivalent(&a, &b), || VerifyError::ChainFailed(format!("{name}: {a} ~ {b}")))?;
            steps.push(a == b);
        }
        out.push((name.to_string(), steps));
    }
    Ok(out)
}

pub fn chains_check() -> VResult<Report> {
    let mut rep = Report::new();
    let res = Restriction::computed()?;
    for (name, tab) in [("k14", "k14"), ("l1", "l1"), ("l2", "l2")] {
        let d = curve_intersection(name)?;
        ensure(d == table_divs(tab), || VerifyError::DivisorMismatch(name.to_string()))?;
    }
    let first = |n: &str| chain_lines().into_iter().find(|(k, _)| *k == n).map(|(_, l)| class_of(&l[0])).unwrap();
    ensure(first("(k14)") == class_of_divisor(&curve_intersection("k14")?), || VerifyError::ChainFailed("(k14) start".into()))?;
    ensure(first("(l1)") == class_of_divisor(&curve_intersection("l1")?), || VerifyError::ChainFailed("(l1) start".into()))?;
    ensure(res.relation == Restriction::tabulated().relation, || VerifyError::ChainFailed("relation".into()))?;
    ensure(res.relation.dot(&PicClass::minus_k()) == 0, || VerifyError::ChainFailed("k14/(l1 l2) is not of degree 0".into()))?;
    rep.note(format!("(k14) - (l1) - (l2) restricts from {} in Pic0, the divisor of k14/(l1 l2)", res.relation));
    for (name, steps) in replay_chains(&res)? {
        let marks: Vec<&str> = steps.iter().map(|e| if *e { "=" } else { "~" }).collect();
        rep.note(format!("{name}: {} step(s) [{}]", steps.len(), marks.join(" ")));
    }
    let kc = PicClass::minus_k();
    ensure(res.equivalent(&kc, &PicClass::label("15").scale(5)), || VerifyError::ChainFailed("K_C = 5D15".into()))?;
    for &(i, j) in &pairs() {
        ensure(res.equivalent(&kc, &PicClass::e(i, j).scale(5)), || VerifyError::ChainFailed(format!("K_C = 5D{i}{j}")))?;
    }
    rep.note("K_C = i*(-K) terminates at 5D15 and equals 5D_ij for every ij ('=' exact in Pic(dP5), '~' uses 5-torsion and the k14 relation)");
    Ok(rep)
}

pub fn istar_check() -> VResult<Report> {
    let mut rep = Report::new();
    let res = Restriction::computed()?;
    for (lab, want) in printed_eij() {
        let b = lab.as_bytes();
        let got = res.e_ij((b[0] - b'0') as usize, (b[1] - b'0') as usize)?;
        ensure(got == want, || VerifyError::RestrictionMismatch(format!("e{lab} = {got:?}, printed {want:?}")))?;
    }
    ensure(res.e_ij(4, 5)? == [0, 0, 0], || VerifyError::RestrictionMismatch("e45".into()))?;
    rep.note("all nine printed e_ij in (Z/5)^3 reproduced (e12 = (2,2,1), e34 = (1,1,2), ...)");
    let imgs: Vec<Vec<i64>> = alphas().iter().map(|a| res.coords(a).map(|c| c.to_vec())).collect::<VResult<_>>()?;
    let r = rank5(&imgs);
    ensure(r == 3, || VerifyError::RankMismatch { expected: 3, got: r })?;
    rep.note(format!("i*(alpha_1..4) = {imgs:?}, rank 3 over F5"));
    // Additivity on the three decompositions l = E_ij + E_k5 + E_l5 and all pairs.
    let ps = pairs();
    for &(i, j) in &ps {
        for &(k, l) in &ps {
            let a = PicClass::e(i, j).sub(&PicClass::e(4, 5));
            let b = PicClass::e(k, l).sub(&PicClass::e(4, 5));
            let sum = res.coords(&a.add(&b))?;
            let (x, y) = (res.coords(&a)?, res.coords(&b)?);
            ensure(sum == std::array::from_fn(|t| m5(x[t] + y[t])), || VerifyError::RestrictionMismatch("additivity".into()))?;
        }
    }
    for q in [[1, 2, 3, 4], [1, 3, 2, 4], [1, 4, 2, 3]] {
        let (i, j, k, l) = (q[0], q[1], q[2], q[3]);
        let lhs = res.coords(&PicClass::e(i, j).add(&PicClass::e(k, 5)).add(&PicClass::e(l, 5)).sub(&PicClass::e(k, j).add(&PicClass::e(i, 5)).add(&PicClass::e(l, 5))))?;
        ensure(lhs == [0, 0, 0], || VerifyError::RestrictionMismatch("two decompositions of l".into()))?;
    }
    rep.note("i* is additive on all pairs of generators and compatible with l = E_ij + E_k5 + E_l5");
    Ok(rep)
}

pub fn equivariance_check() -> VResult<Report> {
    let mut rep = Report::new();
    let res = Restriction::computed()?;
    let all = Perm::all();
    for g in &all {
        let act = PicAction::of(g);
        ensure(res.in_kernel(&act.apply(&res.relation)), || VerifyError::RestrictionMismatch(format!("{g} moves the kernel")))?;
        let m = res.induced(g)?;
        for &(i, j) in &pairs() {
            let x = PicClass::e(i, j).sub(&PicClass::e(4, 5));
            let lhs = res.coords(&act.apply(&x))?;
            let rhs = mat3_vec(&m, &res.coords(&x)?);
            ensure(lhs == rhs, || VerifyError::RestrictionMismatch(format!("{g} on e{i}{j}")))?;
        }
    }
    for g in all.iter().step_by(5) {
        for h in all.iter().step_by(7) {
            let lhs = res.induced(&g.compose(h))?;
            let rhs = mat3_mul(&res.induced(g)?, &res.induced(h)?);
            ensure(lhs == rhs, || VerifyError::RelationFailed(format!("induced action of {g} o {h}")))?;
        }
    }
    rep.note("the kernel of i* is S5-stable and i*(g.e_ij) = g.i*(e_ij) for all 120 g and all ij");
    Ok(rep)
}

pub fn injective_check() -> VResult<Report> {
    let mut rep = Report::new();
    let res = Restriction::computed()?;
    let even: Vec<Perm> = Perm::all().into_iter().filter(|g| g.sign() == 1).collect();
    ensure(even.len() == 60, || VerifyError::GroupOrderMismatch { expected: 60, got: even.len() })?;
    let id = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    let mut seen = BTreeSet::new();
    let mut kernel = 0;
    for g in &even {
        let m = res.induced(g)?;
        kernel += usize::from(m == id);
        seen.insert(m);
    }
    ensure(kernel == 1 && seen.len() == 60, || VerifyError::GroupOrderMismatch { expected: 60, got: seen.len() })?;
    let odd: BTreeSet<_> = Perm::all().iter().map(|g| res.induced(g)).collect::<VResult<_>>()?;
    let g = Perm::from_cycles("(23)(45)");
    let e12 = res.e_ij(1, 2)?;
    let moved = mat3_vec(&res.induced(&g)?, &e12);
    ensure(moved == res.e_ij(1, 3)? && moved != e12, || VerifyError::RestrictionMismatch("(23)(45) on e12".into()))?;
    rep.note("A5 -> GL(3,F5) has trivial kernel: 60 distinct matrices");
    rep.note(format!("(23)(45) sends e12 = {e12:?} to e13 = {moved:?}; the full S5 gives {} distinct matrices", odd.len()));
    Ok(rep)
}

pub fn snf_check() -> VResult<Report> {
    let mut rep = Report::new();
    let res = Restriction::computed()?;
    // Kernel lattice of i* on Pic⁰ in α coordinates: 5·ℤ⁴ + ℤ·relation.
    let r = alpha_coords(&res.relation).ok_or_else(|| VerifyError::ChainFailed("relation not in Pic0".into()))?;
    let mut gens: Vec<Vec<i64>> = (0..4).map(|i| (0..4).map(|j| if i == j { 5 } else { 0 }).collect()).collect();
    gens.push(r.to_vec());
    let inv = smith_invariants(&gens);
    ensure(inv == vec![1, 5, 5, 5], || VerifyError::RankMismatch { expected: 3, got: inv.iter().filter(|x| **x == 5).count() })?;
    rep.note(format!("Pic0 / ker(i*) has invariant factors {inv:?}: (Z/5)^3, order 125"));
    // 5P(A4) in α coordinates: columns of 5·C⁻¹ = adj(C) since det C = 5.
    let c = cartan_a4();
    let adj = adjugate4(&c);
    let det: i64 = (0..4).map(|k| c[0][k] * adj[k][0]).sum();
    ensure(det == 5, || VerifyError::ArithmeticMismatch(format!("det Cartan(A4) = {det}")))?;
    let fivep: Vec<Vec<i64>> = (0..4).map(|j| (0..4).map(|i| adj[i][j]).collect()).collect();
    let inv_p = smith_invariants(&fivep);
    ensure(inv_p == vec![1, 5, 5, 5], || VerifyError::ArithmeticMismatch(format!("5P invariants {inv_p:?}")))?;
    rep.note("5P(A4) has index 125 in Q(A4) (invariant factors 1,5,5,5)");
    // ker(i*) ⊆ 5P: pairings with every root divisible by 5; equal index gives equality.
    let al = alphas();
    for g in gens.iter() {
        let x = (0..4).fold(PicClass::zero(), |acc, i| acc.add(&al[i].scale(g[i])));
        ensure(al.iter().all(|a| m5(x.dot(a)) == 0), || VerifyError::ArithmeticMismatch(format!("{x} not in 5P")))?;
    }
    rep.note("ker(i*) = 5P(A4), so i* is the quotient map Q(A4) -> Q(A4)/5P(A4) (the closing remark's Q(A5) should read Q(A4))");
    Ok(rep)
}

fn adjugate4(m: &[[i64; 4]; 4]) -> [[i64; 4]; 4] {
    let minor = |r: usize, c: usize| -> i64 {
        let rows: Vec<usize> = (0..4).filter(|&i| i != r).collect();
        let cols: Vec<usize> = (0..4).filter(|&j| j != c).collect();
        let a = |i: usize, j: usize| m[rows[i]][cols[j]];
        a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0))
            + a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0))
    };
    std::array::from_fn(|i| std::array::from_fn(|j| if (i + j) % 2 == 0 { minor(j, i) } else { -minor(j, i) }))
}

pub fn checks() -> Vec<Check> {
    vec![
        Check { id: "picard.intersection", provenance: "App. Pic(dP5) intersection numbers; Petersen graph", run: |_| intersection_check() },
        Check { id: "picard.canonical", provenance: "App. Pic(dP5) canonical class", run: |_| canonical_check() },
        Check { id: "picard.classes", provenance: "App. Pic(dP5) strict transforms; psi=inf again", run: |_| classes_check() },
        Check { id: "picard.phistar", provenance: "App. P2 <-> P1xP1 pull-back table", run: |_| phistar_check() },
        Check { id: "picard.action", provenance: "App. Pic(dP5) S5 action", run: |_| action_check() },
        Check { id: "picard.roots", provenance: "App. restriction map, root basis", run: |_| roots_check() },
        Check { id: "picard.chains", provenance: "App. restriction map, divisor chains", run: |_| chains_check() },
        Check { id: "picard.istar", provenance: "App. restriction map, e_ij table", run: |_| istar_check() },
        Check { id: "picard.equivariance", provenance: "App. restriction map, A5 action", run: |_| equivariance_check() },
        Check { id: "picard.injective", provenance: "App. restriction map, A5 -> GL(3,F5)", run: |_| injective_check() },
        Check { id: "picard.snf", provenance: "App. restriction map, Q/5P", run: |_| snf_check() },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn exceptional_classes() {
        assert_eq!(PicClass::e(1, 2).to_string(), "l-E35-E45");
        assert_eq!(PicClass::e(3, 5), PicClass::e5(3));
        assert_eq!(PicClass::label("12").dot(&PicClass::label("34")), 1);
        assert_eq!(PicClass::label("12").dot(&PicClass::label("13")), 0);
    }

    #[test]
    fn smith_small() {
        assert_eq!(smith_invariants(&[vec![2, 4], vec![6, 8]]), vec![2, 4]);
        assert_eq!(smith_invariants(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(smith_invariants(&[vec![0, 0], vec![0, 0]]), Vec::<i64>::new());
    }

    #[test]
    fn tabulated_relation_gives_printed_table() {
        let res = Restriction::tabulated();
        assert_eq!(res.e_ij(1, 2).unwrap(), [2, 2, 1]);
        assert_eq!(res.e_ij(3, 4).unwrap(), [1, 1, 2]);
    }

    proptest! {
        #[test]
        fn action_preserves_form(a in prop::array::uniform5(-5i64..5), b in prop::array::uniform5(-5i64..5), k in 0usize..120) {
            let g = &Perm::all()[k];
            let act = PicAction::of(g);
            let (x, y) = (PicClass(a), PicClass(b));
            prop_assert_eq!(act.apply(&x).dot(&act.apply(&y)), x.dot(&y));
        }

        #[test]
        fn alpha_coords_roundtrip(c in prop::array::uniform4(-9i64..9)) {
            let al = alphas();
            let x = (0..4).fold(PicClass::zero(), |acc, i| acc.add(&al[i].scale(c[i])));
            prop_assert_eq!(alpha_coords(&x), Some(c));
        }

        #[test]
        fn smith_product_is_determinant(a in prop::array::uniform9(-6i64..6)) {
            let m: Vec<Vec<i64>> = (0..3).map(|r| a[3 * r..3 * r + 3].to_vec()).collect();
            let det = a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) + a[2] * (a[3] * a[7] - a[4] * a[6]);
            let inv = smith_invariants(&m);
            if det != 0 {
                prop_assert_eq!(inv.iter().product::<i64>(), det.abs());
                prop_assert!(inv.windows(2).all(|w| w[1] % w[0] == 0));
            } else {
                prop_assert!(inv.len() < 3);
            }
        }
    }
}
