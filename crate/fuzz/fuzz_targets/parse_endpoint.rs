#![no_main]

use fsc_core::Endpoint;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(endpoint) = Endpoint::parse(text) {
        let rendered = match &endpoint {
            Endpoint::Vertex(v) => v.to_string(),
            Endpoint::Subgraph(s) => format!("@{s}"),
        };
        assert_eq!(rendered, text);
    }
});
