//! Feeds arbitrary text to the transformation name parsers. Anything that
//! parses must print back to a name that parses to the same transformation.

#![no_main]

use std::str::FromStr;

use libfuzzer_sys::fuzz_target;
use zscreen::transform::{Transformation, TransformationFamily};

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if text.len() > 1 << 12 {
            return;
        }
        if let Ok(t) = Transformation::from_str(text) {
            let round = Transformation::from_str(&t.to_string()).expect("display must reparse");
            assert_eq!(t, round);
        }
        let _ = TransformationFamily::parse_list(text);
    }
});
