#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(spec) = hilbert_depth::parse_spec(data) {
        let g = spec.determine_g();
        // Keep the exercised box tiny so a run stays I/O bound.
        if spec.n() <= 4 && spec.summands().len() <= 16 && g.as_slice().iter().all(|&c| c <= 4) {
            let _ = spec.hilbert_table(&g);
        }
    }
});
