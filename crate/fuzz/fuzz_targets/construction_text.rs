#![no_main]

use libfuzzer_sys::fuzz_target;
use qext_core::constructions::ConstructionSpec;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(spec) = text.parse::<ConstructionSpec>() {
        assert_eq!(spec.to_string().parse::<ConstructionSpec>().unwrap(), spec);
        // Keep builds cheap; large orders are valid but slow to materialise.
        if spec.order() <= 64 {
            let g = spec.build().unwrap();
            assert_eq!(g.order(), spec.order());
        }
    }
});
