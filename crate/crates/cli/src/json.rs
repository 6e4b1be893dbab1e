//! JSON rendering helpers. Integers are emitted as JSON numbers while they
//! fit exactly in a double (|x| <= 2^53 - 1) and as decimal strings beyond
//! that, so no precision is ever lost.

use mdl_core::{Int, MukaiVector};
use num_traits::{Signed, ToPrimitive};
use serde_json::{json, Map, Value};

const SAFE_INTEGER: i64 = (1 << 53) - 1;

/// Arbitrary-precision integer to JSON: number when exactly representable,
/// decimal string otherwise.
pub fn int_value(n: &Int) -> Value {
    if n.abs() <= Int::from(SAFE_INTEGER) {
        Value::from(n.to_i64().expect("bounded by 2^53-1"))
    } else {
        Value::String(n.to_string())
    }
}

pub fn usize_value(n: usize) -> Value {
    int_value(&Int::from(n))
}

/// Mukai vector as a three-element array.
pub fn vector_value(v: &MukaiVector) -> Value {
    json!([int_value(&v.r), int_value(&v.d), int_value(&v.s)])
}

/// The shared report envelope: `{version, command, params, results}` plus an
/// optional wall-clock timestamp.
pub fn report(command: &str, params: Value, results: Value, timestamp: bool) -> Value {
    let mut map = Map::new();
    map.insert(
        "version".into(),
        Value::String(env!("CARGO_PKG_VERSION").into()),
    );
    map.insert("command".into(), Value::String(command.into()));
    map.insert("params".into(), params);
    if timestamp {
        let now = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        map.insert("timestamp_unix".into(), Value::from(now));
    }
    map.insert("results".into(), results);
    Value::Object(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_integers_become_strings() {
        assert_eq!(int_value(&Int::from(12)), Value::from(12));
        assert_eq!(int_value(&Int::from(-SAFE_INTEGER)), Value::from(-SAFE_INTEGER));
        let big = Int::from(SAFE_INTEGER) + 1;
        assert_eq!(int_value(&big), Value::String("9007199254740992".into()));
    }
}
