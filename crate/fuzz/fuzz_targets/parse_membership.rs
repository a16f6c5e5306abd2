#![no_main]

use fsc_core::Membership;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(m) = text.parse::<Membership>() {
        assert!(m <= Membership::ONE);
        let shown = m.to_string();
        assert_eq!(shown.parse::<Membership>().unwrap(), m);
    }
});
