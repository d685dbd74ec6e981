#![no_main]

use libfuzzer_sys::fuzz_target;
use strong_orient::io::{parse_arc_list, write_arc_list};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(list) = parse_arc_list(text) {
        assert!(list.arcs.iter().all(|&(u, v)| u < list.n && v < list.n));
        let again = parse_arc_list(&write_arc_list(list.n, &list.arcs, &[])).expect("written arc list parses");
        assert_eq!(again.arcs, list.arcs);
    }
});
