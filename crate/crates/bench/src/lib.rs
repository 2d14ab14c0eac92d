//! Shared fixtures for the benchmark suite.

use cassonkit::knots::catalog;
use cassonkit::torus::FreeMappingTorusInput;
use cassonkit::SeifertMatrix;

/// The largest catalog torus knot, stabilized twice: a 24×24 Seifert matrix
/// representative of the heaviest randomized inputs.
pub fn heavy_knot() -> SeifertMatrix {
    let v = catalog::torus_knot_seifert_matrix(5, 6).expect("coprime pair");
    v.stabilize(&vec![1; v.size()], -1)
        .and_then(|w| {
            let coupling = vec![-1; w.size()];
            w.stabilize(&coupling, 1)
        })
        .expect("coupling sized to fit")
}

/// A free mapping-torus input near the top of the sampled size range.
pub fn heavy_free_input() -> FreeMappingTorusInput {
    FreeMappingTorusInput::new(-3, heavy_knot(), 11, 4).expect("coprime slope")
}
