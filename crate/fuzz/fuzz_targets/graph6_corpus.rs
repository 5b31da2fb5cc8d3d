#![no_main]

use libfuzzer_sys::fuzz_target;
use qext_core::enumeration::{parse_graph6_corpus, write_graph6_corpus};

fuzz_target!(|data: &[u8]| {
    if let Ok(graphs) = parse_graph6_corpus(data) {
        let text = write_graph6_corpus(&graphs).unwrap();
        assert_eq!(parse_graph6_corpus(&text).unwrap(), graphs);
    }
});
