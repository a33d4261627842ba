//! Text form of points, segments and multisegments.
//!
//! ```text
//! RAT    := integer | integer '/2'
//! LINE   := integer (':' integer)?          id, then optional unit degree
//! POINT  := RAT ('@' LINE)?
//! SEG    := '[' RAT '..' RAT ']' ('@' LINE)?
//!         | '{' RAT ',' ('...' | '…') ',' RAT '}' ('@' LINE)?
//!         | '{' RAT '}' ('@' LINE)?
//! MSEG   := SEG ('+' SEG)* | '0'
//! ```
//!
//! The brace form lists the endpoints in either direction (`{2,...,0}` is
//! `[0..2]`); the bracket form must be increasing. Whitespace is ignored.
//! A line id used twice must carry the same unit degree.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::multisegment::{range_sort, Multisegment};
use crate::point::{HalfInt, Line, Point};
use crate::segment::Segment;

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{tok}`")))
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.rest().is_empty()
    }

    fn digits(&mut self) -> Result<u32> {
        self.skip_ws();
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return Err(self.err("expected a non-negative integer"));
        }
        let start = self.pos;
        let v = self.rest()[..len].parse().map_err(|_| self.err("integer out of range"))?;
        self.pos = start + len;
        Ok(v)
    }

    fn rat(&mut self) -> Result<HalfInt> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.rest().as_bytes();
        let mut len = 0;
        if matches!(bytes.first(), Some(b'-') | Some(b'+')) {
            len += 1;
        }
        let digits = bytes[len..].iter().take_while(|b| b.is_ascii_digit()).count();
        if digits == 0 {
            return Err(self.err("expected a number"));
        }
        len += digits;
        let mut text = self.rest()[..len].to_string();
        self.pos += len;
        // a '/' here is a denominator, never a separator
        let save = self.pos;
        if self.eat("/") {
            self.skip_ws();
            let d = self.rest().bytes().take_while(u8::is_ascii_digit).count();
            if d == 0 {
                self.pos = save;
                return Err(self.err("expected a denominator"));
            }
            text.push('/');
            text.push_str(&self.rest()[..d]);
            self.pos += d;
        }
        text.parse().map_err(|e: Error| Error::Parse { pos: start, msg: e.to_string() })
    }

    fn line(&mut self, lines: &mut BTreeMap<u32, u32>) -> Result<Line> {
        if !self.eat("@") {
            return register(lines, Line::DEFAULT, self.pos);
        }
        let at = self.pos;
        let id = self.digits()?;
        let unit = if self.eat(":") { self.digits()? } else { 1 };
        let line = Line::new(id, unit).map_err(|e| Error::Parse { pos: at, msg: e.to_string() })?;
        register(lines, line, at)
    }

    fn segment(&mut self, lines: &mut BTreeMap<u32, u32>) -> Result<Segment> {
        self.skip_ws();
        let start = self.pos;
        let (b, e) = if self.eat("[") {
            let b = self.rat()?;
            self.expect("..")?;
            let e = self.rat()?;
            self.expect("]")?;
            if e < b {
                return Err(Error::Parse { pos: start, msg: format!("segment [{b}..{e}] has b > e") });
            }
            (b, e)
        } else if self.eat("{") {
            let first = self.rat()?;
            let last = if self.eat(",") {
                if !(self.eat("...") || self.eat("…")) {
                    return Err(self.err("expected `...`"));
                }
                self.expect(",")?;
                self.rat()?
            } else {
                first
            };
            self.expect("}")?;
            (first.min(last), first.max(last))
        } else {
            return Err(self.err("expected `[` or `{`"));
        };
        let line = self.line(lines)?;
        Segment::new(line, b, e).map_err(|err| Error::Parse { pos: start, msg: err.to_string() })
    }
}

fn register(lines: &mut BTreeMap<u32, u32>, line: Line, pos: usize) -> Result<Line> {
    let unit = *lines.entry(line.id).or_insert(line.unit_degree);
    if unit != line.unit_degree {
        let err = Error::InconsistentLine { id: line.id, first: unit, second: line.unit_degree };
        return Err(Error::Parse { pos, msg: err.to_string() });
    }
    Ok(line)
}

pub fn parse_segment(src: &str) -> Result<Segment> {
    let mut cur = Cursor::new(src);
    let seg = cur.segment(&mut BTreeMap::new())?;
    if !cur.at_end() {
        return Err(cur.err("trailing input"));
    }
    Ok(seg)
}

pub fn parse_multisegment(src: &str) -> Result<Multisegment> {
    let mut cur = Cursor::new(src);
    if cur.eat("0") {
        if cur.at_end() {
            return Ok(Multisegment::new());
        }
        return Err(cur.err("trailing input after `0`"));
    }
    let mut lines = BTreeMap::new();
    let mut segs = vec![cur.segment(&mut lines)?];
    while cur.eat("+") {
        segs.push(cur.segment(&mut lines)?);
    }
    if !cur.at_end() {
        return Err(cur.err("expected `+` or end of input"));
    }
    Ok(range_sort(segs))
}

pub fn parse_point(src: &str) -> Result<Point> {
    let mut cur = Cursor::new(src);
    let x = cur.rat()?;
    let line = cur.line(&mut BTreeMap::new())?;
    if !cur.at_end() {
        return Err(cur.err("trailing input"));
    }
    Ok(Point::new(line, x))
}

/// Parses a tensor of multisegments separated by `|`, e.g. `[0..0]|[1..1]`.
pub fn parse_slots(src: &str) -> Result<Vec<Multisegment>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for part in src.split('|') {
        let m = parse_multisegment(part).map_err(|e| match e {
            Error::Parse { pos, msg } => Error::Parse { pos: pos + offset, msg },
            other => other,
        })?;
        out.push(m);
        offset += part.len() + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        let m = parse_multisegment("[0..2]+[1..1]").unwrap();
        assert_eq!(m, range_sort([Segment::of(0, 2), Segment::of(1, 1)]));
        assert!(parse_multisegment("0").unwrap().is_empty());
        assert!(matches!(parse_multisegment("[2..0]"), Err(Error::Parse { pos: 0, .. })));
    }

    #[test]
    fn canonical_round_trip() {
        for text in ["[1..3]+[1..1]+[0..2]+[0..0]", "0", "[1/2..3/2]+[-1/2..-1/2]", "[0..1]+[2..2]@1:2"] {
            assert_eq!(parse_multisegment(text).unwrap().to_string(), text);
        }
    }

    #[test]
    fn brace_notation_normalizes() {
        assert_eq!(parse_segment("{2,...,0}").unwrap(), Segment::of(0, 2));
        assert_eq!(parse_segment("{0,…,2}").unwrap(), Segment::of(0, 2));
        assert_eq!(parse_segment("{3}").unwrap(), Segment::of(3, 3));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_multisegment("[0..1/3]").is_err());
        assert!(parse_multisegment("[0..1/2]").is_err()); // non-integral length
        assert!(parse_multisegment("[0..1]+").is_err());
        assert!(parse_multisegment("[0..1]@1:2+[3..3]@1:3").is_err());
        assert!(parse_multisegment("[0..1]@1:0").is_err());
        let err = parse_multisegment("[0..1] [2..2]").unwrap_err();
        assert_eq!(err, Error::Parse { pos: 7, msg: "expected `+` or end of input".into() });
    }

    #[test]
    fn points_and_slots() {
        assert_eq!(parse_point("-3/2").unwrap(), Point::at(HalfInt::from_twice(-3)));
        assert_eq!(parse_point("1@2").unwrap().line.id, 2);
        let slots = parse_slots("[0..0]|0|[1..2]").unwrap();
        assert_eq!(slots.len(), 3);
        assert!(slots[1].is_empty());
        assert!(matches!(parse_slots("[0..0]|[x]"), Err(Error::Parse { pos: 8, .. })));
    }
}
