#![no_main]

use libfuzzer_sys::fuzz_target;
use qext_core::enumeration::{parse_graph6, write_graph6};

fuzz_target!(|data: &[u8]| {
    if let Ok(g) = parse_graph6(data) {
        assert_eq!(write_graph6(&g).unwrap(), data);
    }
});
