#![no_main]

use libfuzzer_sys::fuzz_target;
use longpath::io::{parse_dimacs, write_dimacs};

fuzz_target!(|data: &[u8]| {
    let Ok(parsed) = parse_dimacs(data) else { return };
    let g = parsed.graph;
    g.audit().expect("parsed graph violates CSR invariants");
    let mut buf = Vec::new();
    write_dimacs(&g, &mut buf).unwrap();
    let back = parse_dimacs(&buf).unwrap();
    assert!(back.warnings.is_empty());
    assert_eq!(back.graph, g);
});
