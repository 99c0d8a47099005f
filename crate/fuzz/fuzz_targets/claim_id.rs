#![no_main]

use libfuzzer_sys::fuzz_target;
use theodorus::verifier::ClaimId;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(id) = s.parse::<ClaimId>() {
        assert_eq!(id.name().parse::<ClaimId>().unwrap(), id);
        assert!(ClaimId::ALL.contains(&id));
    }
});
