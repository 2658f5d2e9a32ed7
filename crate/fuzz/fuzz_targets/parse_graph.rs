#![no_main]

use libfuzzer_sys::fuzz_target;
use sl2ws::graphs::Graph;

fuzz_target!(|data: &str| {
    let Ok(graph) = Graph::parse_edge_list(data) else {
        return;
    };
    // display form round-trips
    let reparsed = Graph::parse_edge_list(&graph.to_string()).unwrap();
    assert_eq!(graph, reparsed);

    if graph.vertex_count() <= 13 {
        let cert = graph.certificate().unwrap();
        assert_eq!(cert, reparsed.certificate().unwrap());
        assert_eq!(graph.certificate_hex().unwrap().len(), 2 * cert.len());
    }
    let components = graph.components();
    let total: usize = components.iter().map(|c| c.vertex_count()).sum();
    assert_eq!(total, graph.vertex_count());
});
