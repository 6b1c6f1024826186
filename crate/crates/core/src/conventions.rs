//! The sign and normalization conventions every report carries.

use serde_json::{json, Value};

/// Orientation, action direction, measure and truncation conventions.
pub fn convention_ledger() -> Value {
    json!({
        "orientation": "integral of dtheta1 ^ dtheta2 over T^2 is +1",
        "measure": "Haar measure on T^2 and S^1 with total mass 1",
        "action": "translate(a, m)(x) = a(x - m alpha); (f W^m)(g W^n) = (f * translate(g, m)) W^(m+n)",
        "fourier_symbols": "u = exp(-2 pi i alpha), v = exp(-2 pi i beta); mode k of translate(a, m) is scaled by u^(m k1) v^(m k2)",
        "moyal_phase": "e_k * e_l = exp(2 pi^2 i h theta (k1 l2 - k2 l1)) e_(k+l)",
        "chern": "c_0 = tr(e), c_i = (-1)^i (2i)!/i! tr((e - 1/2) (x) e^(x)2i)",
        "truncation": "a series with truncation N is known through h^N; exact series carry no truncation",
    })
}
