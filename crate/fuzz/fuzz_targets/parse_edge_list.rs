#![no_main]

use libfuzzer_sys::fuzz_target;
use longpath::io::{parse_edge_list, write_edge_list};

fuzz_target!(|data: &[u8]| {
    let Ok(g) = parse_edge_list(data) else { return };
    g.audit().expect("parsed graph violates CSR invariants");
    let mut buf = Vec::new();
    write_edge_list(&g, &mut buf).unwrap();
    assert_eq!(parse_edge_list(&buf).unwrap(), g);
});
