//! Serialization helpers shared by the commands: 17-digit JSON numbers and
//! per-theorem JSON objects.

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use serde_json::value::RawValue;

use randic_core::numfmt::g17;
use randic_core::TheoremRecord;

/// A float written with 17 significant digits; non-finite values become
/// `null`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Num(pub f64);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.is_finite() {
            RawValue::from_string(g17(self.0))
                .map_err(serde::ser::Error::custom)?
                .serialize(s)
        } else {
            s.serialize_none()
        }
    }
}

/// Text rendering of a float for tables and listings.
pub fn num(x: f64) -> String {
    if x.is_nan() {
        "-".into()
    } else {
        g17(x)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RecordJson<'a> {
    pub lhs: Num,
    pub rhs: Num,
    pub satisfied: bool,
    pub skipped: bool,
    pub reason: Option<&'a str>,
    pub relation: &'a str,
    pub status: &'a str,
    pub slack: Num,
    pub asserted: bool,
}

impl<'a> From<&'a TheoremRecord> for RecordJson<'a> {
    fn from(r: &'a TheoremRecord) -> Self {
        RecordJson {
            lhs: Num(r.lhs),
            rhs: Num(r.rhs),
            satisfied: r.satisfied(),
            skipped: r.skipped(),
            reason: r.reason.as_deref(),
            relation: r.relation,
            status: r.status.as_str(),
            slack: Num(r.slack),
            asserted: r.asserted,
        }
    }
}

/// JSON object keyed by theorem id, in suite order.
pub struct KeyedRecords<'a>(pub &'a [TheoremRecord]);

impl Serialize for KeyedRecords<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for r in self.0 {
            m.serialize_entry(&r.id, &RecordJson::from(r))?;
        }
        m.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_keep_seventeen_digits() {
        let v = vec![Num(0.1), Num(1.0), Num(f64::NAN), Num(-2.5e-9)];
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            "[0.10000000000000001,1,null,-2.5000000000000001e-09]"
        );
    }
}
