#![no_main]

use libfuzzer_sys::fuzz_target;
use strong_orient::Epsilon;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(eps) = text.parse::<Epsilon>() {
        assert!(eps.as_f64() > 0.0);
        assert!(eps.cap_l() >= 2);
        let again: Epsilon = eps.to_string().parse().expect("displayed epsilon parses");
        assert_eq!(again, eps);
    }
});
