#![no_main]

use libfuzzer_sys::fuzz_target;
use qext_cli::RunReport;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(report) = RunReport::from_json(text) {
        let json = report.to_json().unwrap();
        assert_eq!(RunReport::from_json(&json).unwrap().to_json().unwrap(), json);
    }
});
