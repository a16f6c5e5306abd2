#![no_main]

use fsc_core::GraphDocument;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    match GraphDocument::parse(text) {
        Ok(doc) => {
            for (u, v, mu) in doc.graph.edges() {
                assert!(!mu.is_zero());
                assert!(mu <= doc.graph.sigma(u).unwrap().min(doc.graph.sigma(v).unwrap()));
            }
        }
        Err(e) => {
            let line = e.line().expect("document errors carry a line number");
            assert!(line >= 1 && line <= text.lines().count().max(1));
        }
    }
});
