#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    for n in [1usize, 2, 3] {
        if let Ok(input) = hilbert_depth::parse_candidate(data) {
            let _ = input.into_candidate(n);
        }
    }
});
