#![no_main]

use fsc_core::{conn_vertex, fuzzy_bridges, oracle_bridges, oracle_conn, GraphDocument, OracleBudget};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(doc) = GraphDocument::parse(text) else { return };
    let g = &doc.graph;
    let budget = OracleBudget {
        max_vertices: 8,
        max_paths: 100_000,
    };
    if g.vertex_count() > budget.max_vertices {
        return;
    }
    let names: Vec<String> = g.vertices().map(|(n, _)| n.to_string()).collect();
    for u in &names {
        for v in &names {
            let Ok(slow) = oracle_conn(g, u, v, budget) else { return };
            assert_eq!(conn_vertex(g, u, v).unwrap(), slow);
        }
    }
    if let Ok(slow) = oracle_bridges(g, budget) {
        assert_eq!(fuzzy_bridges(g).unwrap(), slow);
    }
});
