#![no_main]

use hurmono::Permutation;
use libfuzzer_sys::fuzz_target;

// first byte picks the degree, the rest is cycle text
fuzz_target!(|data: &[u8]| {
    let Some((&d, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let degree = (d % 18) as usize;
    if let Ok(p) = Permutation::parse(text, degree) {
        assert_eq!(p.degree(), degree);
        let again = Permutation::parse(&p.to_string(), degree).expect("display output parses");
        assert_eq!(again, p);
        assert!(p.compose(&p.inverse()).unwrap().is_identity());
        assert_eq!(p.cycle_type().weight(), degree);
    }
});
