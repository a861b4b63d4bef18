//! wasm-bindgen entry points for the static demo page in `www/`.

use dwork::check::{all_checks, Params};
use dwork::exactfield::{rat_to_f64, Rat};
use dwork::plot::{phi_squared, plot_curves};
use wasm_bindgen::prelude::*;

fn rat(s: &str) -> Result<Rat, String> {
    s.trim().parse::<Rat>().map_err(|_| format!("not a rational: {s}"))
}

/// Row-major N×N grid of signs: F₊ signs first, then F₋ signs (length 2N²).
#[wasm_bindgen]
pub fn sign_grid(psi5: &str, n: usize, window: f64) -> Result<Vec<i8>, JsError> {
    let g = plot_curves(&rat(psi5).map_err(|e| JsError::new(&e))?, n, window).map_err(|e| JsError::new(&e.to_string()))?;
    let mut out: Vec<i8> = g.samples.iter().map(|s| s.sign_fplus).collect();
    out.extend(g.samples.iter().map(|s| s.sign_fminus));
    Ok(out)
}

/// Flattened (σ, τ) pairs of the real extra nodes; empty unless ψ⁵ = 1.
#[wasm_bindgen]
pub fn nodes(psi5: &str) -> Result<Vec<f64>, JsError> {
    let g = plot_curves(&rat(psi5).map_err(|e| JsError::new(&e))?, 2, 1.0).map_err(|e| JsError::new(&e.to_string()))?;
    Ok(g.nodes.iter().flat_map(|&(s, t)| [s, t]).collect())
}

/// φ² as a float, NaN at ψ⁵ = 0.
#[wasm_bindgen]
pub fn phi_sq(psi5: &str) -> Result<f64, JsError> {
    let p = rat(psi5).map_err(|e| JsError::new(&e))?;
    Ok(phi_squared(&p).map(|x| rat_to_f64(&x)).unwrap_or(f64::NAN))
}

#[wasm_bindgen]
pub fn check_ids() -> Vec<String> {
    all_checks().iter().map(|c| c.id.to_string()).collect()
}

/// Runs one check with default parameters; "PASS: ..." or "FAIL: ...".
#[wasm_bindgen]
pub fn run_check(id: &str, seed: u64, samples: usize) -> String {
    let Some(c) = all_checks().into_iter().find(|c| c.id == id) else {
        return format!("unknown check {id}");
    };
    let params = Params { seed, samples, ..Params::default() };
    match (c.run)(&params) {
        Ok(r) => format!("PASS: {}", r.text()),
        Err(e) => format!("FAIL: {e}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_length_and_nodes() {
        assert_eq!(sign_grid("1/4", 5, 2.0).unwrap().len(), 50);
        assert_eq!(nodes("1").unwrap().len(), 12);
        assert!(nodes("1/2").unwrap().is_empty());
        assert!((phi_sq("1").unwrap() - 31.25).abs() < 1e-12);
        assert!(run_check("picard.canonical", 0, 1).starts_with("PASS"));
    }
}
