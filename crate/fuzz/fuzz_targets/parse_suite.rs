#![no_main]

use libfuzzer_sys::fuzz_target;
use longpath_cli::bench::Suite;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let _ = Suite::from_toml(text);
});
