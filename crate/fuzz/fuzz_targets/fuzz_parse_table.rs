//! Feeds arbitrary bytes to the quantile table reader. A table that parses
//! must survive a render and reparse round trip.

#![no_main]

use libfuzzer_sys::fuzz_target;
use zscreen::tabulate::{parse_table, render_table};

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if text.len() > 1 << 16 {
            return;
        }
        if let Ok(entries) = parse_table(text) {
            let rendered = render_table(&entries);
            let reparsed = parse_table(&rendered).expect("rendered table must reparse");
            assert_eq!(entries.len(), reparsed.len());
        }
    }
});
