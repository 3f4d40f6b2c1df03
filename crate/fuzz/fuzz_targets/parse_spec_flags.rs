#![no_main]

use hurmono::HurwitzSpec;
use libfuzzer_sys::fuzz_target;

// three newline-separated fields: degrees, genera, profiles
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let mut fields = text.splitn(3, '\n');
    let (Some(d), Some(g), Some(p)) = (fields.next(), fields.next(), fields.next()) else {
        return;
    };
    let Ok(spec) = HurwitzSpec::from_flags(d, g, p) else {
        return;
    };
    let flags = spec.to_flags();
    let mut parts = flags.split(' ').map(|kv| kv.split_once('=').unwrap().1);
    let again = HurwitzSpec::from_flags(
        parts.next().unwrap(),
        parts.next().unwrap(),
        parts.next().unwrap(),
    )
    .expect("to_flags output parses");
    assert_eq!(again, spec);
    let _ = spec.to_string();
});
