//! Feeds arbitrary bytes to the cohort CSV reader. Malformed rows must come
//! back as rejects, never as panics or hangs.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if text.len() > 1 << 16 {
            return;
        }
        if let Ok(outcome) = zscreen::cohort::parse_cohort(text) {
            for biomarker in outcome.cohort.biomarkers() {
                let _ = zscreen::cohort::build_sequences(&outcome.cohort, &biomarker);
            }
        }
    }
});
