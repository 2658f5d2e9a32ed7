#![no_main]

use libfuzzer_sys::fuzz_target;
use sl2ws::chords::ChordDiagram;

fuzz_target!(|data: &str| {
    let Ok(diagram) = data.parse::<ChordDiagram>() else {
        return;
    };
    let canonical = diagram.canonicalize();
    assert!(canonical.is_canonical());
    assert_eq!(canonical.order(), diagram.order());
    assert_eq!(canonical.crossing_count(), diagram.crossing_count());

    // the printed word must parse back to the same diagram
    let reparsed: ChordDiagram = diagram.to_string().parse().unwrap();
    assert_eq!(reparsed, diagram);

    let graph = diagram.intersection_graph();
    assert_eq!(graph.vertex_count(), diagram.order());
    assert_eq!(graph.edge_count(), diagram.crossing_count());

    if diagram.order() <= 4 {
        let value = sl2ws::sl2::Evaluator::new().eval(&diagram).unwrap();
        if diagram.order() > 0 {
            assert!(value.is_monic());
        }
    }
});
