#![no_main]

use hurmono::parse_goldens;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(rows) = parse_goldens(text) else {
        return;
    };
    // re-emit every row and check it reads back the same
    let emitted: String = rows
        .iter()
        .map(|r| {
            let expect: Vec<String> = r.expected.iter().map(|e| e.to_string()).collect();
            format!("{} expect={}\n", r.spec.to_flags(), expect.join(","))
        })
        .collect();
    let again = parse_goldens(&emitted).expect("emitted rows parse");
    assert_eq!(again.len(), rows.len());
    for (a, b) in again.iter().zip(&rows) {
        assert_eq!(a.spec, b.spec);
        assert_eq!(a.expected, b.expected);
    }
});
