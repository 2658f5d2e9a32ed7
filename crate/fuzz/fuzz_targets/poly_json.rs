#![no_main]

use libfuzzer_sys::fuzz_target;
use sl2ws::algebra::CasimirPoly;

fuzz_target!(|data: &str| {
    let Ok(value) = serde_json::from_str::<serde_json::Value>(data) else {
        return;
    };
    let Ok(poly) = CasimirPoly::from_json(&value) else {
        return;
    };
    // serialization round-trips exactly
    let back = CasimirPoly::from_json(&poly.to_json()).unwrap();
    assert_eq!(poly, back);
    // and the human-readable form is consistent with the degree
    let text = poly.to_string();
    assert_eq!(text == "0", poly.is_zero());
});
