//! Sign grids of F₊ and F₋ over a real window, for contour plots of C_φ.

use std::fmt::Write as _;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::dworklines::{g_poly, h_poly};
use crate::exactfield::{rat_to_f64, CycElem, Rat};
use crate::fibers::conifold_nodes;
use crate::multipoly::vars::{SIGMA, TAU};
use crate::multipoly::MPoly;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PlotError {
    #[error("grid resolution {0} is below 2")]
    InvalidGrid(usize),
    #[error("window half-width must be positive")]
    InvalidWindow,
}

/// Terms (e_σ, e_τ, c) of a real polynomial in σ, τ.
fn real_terms(f: &MPoly) -> Vec<(i32, i32, f64)> {
    f.terms().map(|(m, c)| (m.exp(SIGMA) as i32, m.exp(TAU) as i32, c.to_c64().re)).collect()
}

fn eval_terms(ts: &[(i32, i32, f64)], s: f64, t: f64) -> f64 {
    ts.iter().map(|&(a, b, c)| c * s.powi(a) * t.powi(b)).sum()
}

fn sign(x: f64) -> i8 {
    if x > 0.0 {
        1
    } else if x < 0.0 {
        -1
    } else {
        0
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PlotSample {
    pub sigma: f64,
    pub tau: f64,
    pub sign_fplus: i8,
    pub sign_fminus: i8,
}

#[derive(Clone, Debug)]
pub struct PlotGrid {
    pub psi5: Rat,
    pub n: usize,
    pub window: f64,
    pub samples: Vec<PlotSample>,
    /// The six real extra nodes of C_φ at ψ⁵ = 1.
    pub nodes: Vec<(f64, f64)>,
    pub warnings: Vec<String>,
}

/// φ² = 32/ψ⁵ − 3/4; None at ψ⁵ = 0 (φ = ∞).
pub fn phi_squared(psi5: &Rat) -> Option<Rat> {
    if psi5.is_zero() {
        None
    } else {
        Some(Rat::from_integer(32.into()) / psi5 - Rat::new(3.into(), 4.into()))
    }
}

/// Samples sign F₊ and sign F₋ on an N×N grid over [−a, a]².
///
/// At ψ⁵ = 0 the signs are those of F±/φ = ±H. When φ² < 0 the signs are those of the real part G.
pub fn plot_curves(psi5: &Rat, n: usize, window: f64) -> Result<PlotGrid, PlotError> {
    if n < 2 {
        return Err(PlotError::InvalidGrid(n));
    }
    if !(window > 0.0) || !window.is_finite() {
        return Err(PlotError::InvalidWindow);
    }
    let mut warnings = Vec::new();
    if psi5.is_negative() || *psi5 > Rat::from_integer(1.into()) {
        warnings.push(format!("psi^5 = {psi5} is outside [0, 1], the range of the figure"));
    }
    let (g, h) = (real_terms(&g_poly()), real_terms(&h_poly()));
    let coeffs: (f64, f64) = match phi_squared(psi5) {
        None => (0.0, 1.0),
        Some(p2) if !p2.is_negative() => (1.0, rat_to_f64(&p2).sqrt()),
        Some(_) => {
            warnings.push("phi^2 < 0: F+ and F- are complex conjugate, signs of the real part G are emitted".into());
            (1.0, 0.0)
        }
    };
    let step = 2.0 * window / (n - 1) as f64;
    let mut samples = Vec::with_capacity(n * n);
    for i in 0..n {
        let s = -window + step * i as f64;
        for j in 0..n {
            let t = -window + step * j as f64;
            let (gv, hv) = (eval_terms(&g, s, t), eval_terms(&h, s, t));
            samples.push(PlotSample {
                sigma: s,
                tau: t,
                sign_fplus: sign(coeffs.0 * gv + coeffs.1 * hv),
                sign_fminus: sign(coeffs.0 * gv - coeffs.1 * hv),
            });
        }
    }
    let nodes = if *psi5 == Rat::from_integer(1.into()) {
        conifold_nodes().iter().map(|(s, t)| (real(s), real(t))).collect()
    } else {
        Vec::new()
    };
    Ok(PlotGrid { psi5: psi5.clone(), n, window, samples, nodes, warnings })
}

fn real(c: &CycElem) -> f64 {
    c.to_c64().re
}

impl PlotGrid {
    /// CSV with header `sigma,tau,sign_fplus,sign_fminus`; the node layer follows a `# nodes` line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("sigma,tau,sign_fplus,sign_fminus\n");
        for s in &self.samples {
            let _ = writeln!(out, "{},{},{},{}", s.sigma, s.tau, s.sign_fplus, s.sign_fminus);
        }
        if !self.nodes.is_empty() {
            out.push_str("# nodes\n");
            for (s, t) in &self.nodes {
                let _ = writeln!(out, "{s:.17},{t:.17},0,0");
            }
        }
        out
    }
}

/// Parses a CSV written by `to_csv` back into grid rows and node rows.
pub fn parse_csv(text: &str) -> (Vec<PlotSample>, Vec<(f64, f64)>) {
    let mut grid = Vec::new();
    let mut nodes = Vec::new();
    let mut in_nodes = false;
    for line in text.lines().skip(1) {
        if line.starts_with('#') {
            in_nodes = line.trim() == "# nodes";
            continue;
        }
        let f: Vec<&str> = line.split(',').collect();
        if f.len() != 4 {
            continue;
        }
        let (Ok(s), Ok(t), Ok(a), Ok(b)) = (f[0].parse::<f64>(), f[1].parse::<f64>(), f[2].parse::<i8>(), f[3].parse::<i8>()) else { continue };
        if in_nodes {
            nodes.push((s, t));
        } else {
            grid.push(PlotSample { sigma: s, tau: t, sign_fplus: a, sign_fminus: b });
        }
    }
    (grid, nodes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rat;

    #[test]
    fn grid_too_small() {
        assert_eq!(plot_curves(&rat(1, 2), 1, 2.0).unwrap_err(), PlotError::InvalidGrid(1));
    }

    #[test]
    fn node_layer_only_at_conifold() {
        assert_eq!(plot_curves(&rat(1, 1), 3, 2.0).unwrap().nodes.len(), 6);
        assert!(plot_curves(&rat(1, 2), 3, 2.0).unwrap().nodes.is_empty());
    }

    #[test]
    fn fermat_limit_vanishes_on_lines() {
        let g = plot_curves(&rat(0, 1), 5, 2.0).unwrap();
        for s in &g.samples {
            let on_line = s.sigma == 0.0 || s.tau == 0.0 || s.sigma == 1.0 || s.tau == 1.0 || s.sigma * s.tau == 1.0;
            assert_eq!(s.sign_fplus == 0, on_line, "{s:?}");
            assert_eq!(s.sign_fplus, -s.sign_fminus);
        }
    }

    #[test]
    fn csv_round_trip() {
        let g = plot_curves(&rat(1, 1), 4, 3.0).unwrap();
        let (rows, nodes) = parse_csv(&g.to_csv());
        assert_eq!(rows, g.samples);
        assert_eq!(nodes.len(), 6);
    }
}
