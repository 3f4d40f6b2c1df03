#![no_main]

use hurmono::{HurwitzSpec, MarkedTuple, SpaceReport};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(t) = serde_json::from_slice::<MarkedTuple>(data) {
        let json = serde_json::to_vec(&t).unwrap();
        assert_eq!(serde_json::from_slice::<MarkedTuple>(&json).unwrap(), t);
    }
    if let Ok(s) = serde_json::from_slice::<HurwitzSpec>(data) {
        let json = serde_json::to_vec(&s).unwrap();
        assert_eq!(serde_json::from_slice::<HurwitzSpec>(&json).unwrap(), s);
    }
    let _ = serde_json::from_slice::<SpaceReport>(data);
});
