//! JSON emission with reals pinned to 17 significant digits so output is
//! byte-deterministic and round-trips f64 exactly.

use std::io;

use serde::Serialize;

pub struct Sci17Formatter;

impl serde_json::ser::Formatter for Sci17Formatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        write!(writer, "{value:.16e}")
    }

    fn write_f32<W>(&mut self, writer: &mut W, value: f32) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        write!(writer, "{value:.16e}")
    }
}

pub fn to_json_string<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, Sci17Formatter);
    value.serialize(&mut ser).expect("record serialization cannot fail");
    String::from_utf8(out).expect("serialized JSON is UTF-8")
}

/// The same 17-significant-digit rendering for CSV cells.
pub fn sci17(value: f64) -> String {
    format!("{value:.16e}")
}
