#![no_main]

use hurmono::{canonicalize, MarkedTuple};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(t) = MarkedTuple::parse(text) else {
        return;
    };
    let again = MarkedTuple::parse(&t.to_string()).expect("display output parses");
    assert_eq!(again, t);
    if t.degree() <= 5 && t.fiber_count() <= 6 {
        let c = canonicalize(&t).unwrap();
        assert!(c <= t);
        assert_eq!(canonicalize(&c).unwrap(), c);
    }
});
