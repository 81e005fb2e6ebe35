#![no_main]

use libfuzzer_sys::fuzz_target;
use longpath::{generate, Family};

fn small(f: &Family) -> bool {
    let n = match *f {
        Family::Path { n }
        | Family::Cycle { n }
        | Family::Complete { n }
        | Family::Gnp { n, .. }
        | Family::RandomTree { n } => n,
        Family::CompleteBipartite { a, b } => a + b,
        Family::Grid { rows, cols } => rows * cols,
        Family::Dodecahedron => 20,
    };
    n <= 256
}

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(family) = text.parse::<Family>() else { return };
    let reparsed: Family = family.to_string().parse().unwrap();
    assert_eq!(reparsed.name(), family.name());
    if small(&family) {
        generate(&family, 0).unwrap().audit().unwrap();
    }
});
