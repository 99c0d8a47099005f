#![no_main]

use libfuzzer_sys::fuzz_target;
use theodorus::export_render::{ColorScheme, Format};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let _ = s.parse::<Format>();
    if let Ok(c) = s.parse::<ColorScheme>() {
        assert_eq!(c.name().parse::<ColorScheme>().unwrap(), c);
    }
});
