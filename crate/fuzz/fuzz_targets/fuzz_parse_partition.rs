#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(input) = hilbert_depth::parse_partition(data) {
        if let Some(g) = input.stored_g() {
            if g.len() <= 4 && g.as_slice().iter().all(|&c| (0..=4).contains(&c)) {
                let _ = input.into_partition(&g);
            }
        }
    }
});
