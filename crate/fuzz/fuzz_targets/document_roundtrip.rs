#![no_main]

use fsc_core::GraphDocument;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(doc) = GraphDocument::parse(text) else { return };
    let canonical = doc.to_fsc();
    let again = GraphDocument::parse(&canonical).expect("canonical form parses");
    assert_eq!(again, doc);
    assert_eq!(again.to_fsc(), canonical);
});
