#![no_main]

use libfuzzer_sys::fuzz_target;
use theodorus::exact_seq::{constant, constant_by_name, Constant};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    match s.parse::<Constant>() {
        Ok(c) => {
            let by_name = constant_by_name(s, 64).expect("parsed name evaluates");
            assert_eq!(by_name, constant(c, 64).unwrap());
        }
        Err(_) => assert!(constant_by_name(s, 64).is_err()),
    }
});
