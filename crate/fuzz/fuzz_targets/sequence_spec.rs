#![no_main]

use libfuzzer_sys::fuzz_target;
use theodorus::SequenceSpec;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(spec) = s.parse::<SequenceSpec>() {
        // Display must re-parse to the same spec.
        let again: SequenceSpec = spec.to_string().parse().expect("display form re-parses");
        assert_eq!(again, spec);
        let terms = spec.terms(1, 6).expect("indices >= 1 are always defined");
        for w in terms.windows(3) {
            if !matches!(spec, SequenceSpec::ClassicTheodorus) {
                assert_eq!(&w[0] + &w[1], w[2]);
            }
        }
    }
});
