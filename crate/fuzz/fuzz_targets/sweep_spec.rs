#![no_main]

use libfuzzer_sys::fuzz_target;
use strong_orient_cli::sweep::{parse_sweep, MAX_SWEEP_VALUES};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(values) = parse_sweep(text) {
        assert!(!values.is_empty() && values.len() <= MAX_SWEEP_VALUES);
    }
});
