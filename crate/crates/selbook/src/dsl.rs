//! Text notation for pages and books.
//!
//! The grammar, one form per page family, mirrors the constructor
//! parameters:
//!
//! ```text
//! shifted:3,2,1                  shifted diagram of a strict partition
//! skew:6,5,5,4/3,1               skew diagram outer/inner
//! trunc:6,5,5,4\3,1              truncated diagram outer\inner
//! nrs:n=2,r=1,s=2[,minus]        staircase with arm rows/columns
//! ars:a=1,2;r=1;s=2[,minus]      merged-diagonal staircase with arms
//! book:[page;page;...]           pages glued along their diagonals
//! ```
//!
//! [`parse_shape`] and [`parse_book`] accept this notation (plus incidental
//! whitespace) and never panic; the `Display` impls for [`PageShape`] and
//! [`BookShape`] emit the canonical form, so parse ∘ display is the
//! identity.

use crate::error::{Error, Result};
use crate::shapes::{BookShape, Composition, PageKind, PageShape, Partition};

const PAGE_PREFIXES: [&str; 5] = ["shifted:", "skew:", "trunc:", "nrs:", "ars:"];

fn parse_u32(token: &str, what: &str) -> Result<u32> {
    token
        .trim()
        .parse::<u32>()
        .map_err(|_| Error::Parse(format!("{what}: expected a number, got {token:?}")))
}

fn parse_u32_list(body: &str, what: &str) -> Result<Vec<u32>> {
    let body = body.trim();
    if body.is_empty() {
        return Ok(Vec::new());
    }
    body.split(',').map(|tok| parse_u32(tok, what)).collect()
}

fn parse_partition(body: &str, what: &str) -> Result<Partition> {
    Partition::new(parse_u32_list(body, what)?)
}

/// Splits `body` on the separator into outer and inner partition texts;
/// a missing or trailing separator means an empty inner shape.
fn parse_pair(body: &str, sep: char, what: &str) -> Result<(Partition, Partition)> {
    let (outer, inner) = match body.split_once(sep) {
        Some((o, i)) => (o, i),
        None => (body, ""),
    };
    Ok((
        parse_partition(outer, what)?,
        parse_partition(inner, what)?,
    ))
}

/// Accumulates `key=value` assignments where a value may be a comma list
/// continued across bare tokens, plus the bare `minus` flag.
#[derive(Default)]
struct KeyValues {
    entries: Vec<(String, Vec<u32>)>,
    minus: bool,
}

impl KeyValues {
    fn feed(&mut self, piece: &str, what: &str) -> Result<()> {
        let piece = piece.trim();
        if piece.is_empty() {
            return Err(Error::Parse(format!("{what}: empty parameter")));
        }
        if piece == "minus" {
            if self.minus {
                return Err(Error::Parse(format!("{what}: duplicate minus flag")));
            }
            self.minus = true;
            return Ok(());
        }
        if let Some((key, first)) = piece.split_once('=') {
            let key = key.trim().to_string();
            if self.entries.iter().any(|(k, _)| *k == key) {
                return Err(Error::Parse(format!("{what}: duplicate key {key:?}")));
            }
            self.entries.push((key, parse_u32_list(first, what)?));
            return Ok(());
        }
        // A bare number continues the most recent key's list.
        match self.entries.last_mut() {
            Some((_, values)) => {
                values.push(parse_u32(piece, what)?);
                Ok(())
            }
            None => Err(Error::Parse(format!(
                "{what}: expected key=value, got {piece:?}"
            ))),
        }
    }

    fn take(&mut self, key: &str) -> Option<Vec<u32>> {
        let at = self.entries.iter().position(|(k, _)| k == key)?;
        Some(self.entries.remove(at).1)
    }

    fn take_scalar(&mut self, key: &str, what: &str) -> Result<Option<u32>> {
        match self.take(key) {
            None => Ok(None),
            Some(values) if values.len() == 1 => Ok(Some(values[0])),
            Some(values) => Err(Error::Parse(format!(
                "{what}: {key} takes one value, got {values:?}"
            ))),
        }
    }

    fn finish(self, what: &str) -> Result<bool> {
        if let Some((key, _)) = self.entries.first() {
            return Err(Error::Parse(format!("{what}: unknown key {key:?}")));
        }
        Ok(self.minus)
    }
}

/// Parses one page in the shape notation.
pub fn parse_shape(input: &str) -> Result<PageShape> {
    let input = input.trim();
    let Some((prefix, body)) = input.split_once(':') else {
        return Err(Error::Parse(format!(
            "missing shape prefix in {input:?}; expected one of shifted/skew/trunc/nrs/ars"
        )));
    };
    match prefix.trim() {
        "shifted" => PageShape::shifted(parse_partition(body, "shifted")?),
        "skew" => {
            let (outer, inner) = parse_pair(body, '/', "skew")?;
            PageShape::skew(outer, inner)
        }
        "trunc" => {
            let (outer, inner) = parse_pair(body, '\\', "trunc")?;
            PageShape::truncated(outer, inner)
        }
        "nrs" => {
            let mut kv = KeyValues::default();
            for piece in body.split(',') {
                kv.feed(piece, "nrs")?;
            }
            let n = kv
                .take_scalar("n", "nrs")?
                .ok_or_else(|| Error::Parse("nrs: missing n=".into()))?;
            let r = kv.take_scalar("r", "nrs")?.unwrap_or(0);
            let s = kv.take_scalar("s", "nrs")?.unwrap_or(0);
            let minus = kv.finish("nrs")?;
            PageShape::nrs_staircase(n as usize, r, s, minus)
        }
        "ars" => {
            let mut kv = KeyValues::default();
            for segment in body.split(';') {
                for piece in segment.split(',') {
                    kv.feed(piece, "ars")?;
                }
            }
            let a = kv
                .take("a")
                .ok_or_else(|| Error::Parse("ars: missing a=".into()))?;
            let r = kv.take_scalar("r", "ars")?.unwrap_or(0);
            let s = kv.take_scalar("s", "ars")?.unwrap_or(0);
            let minus = kv.finish("ars")?;
            PageShape::ars_staircase(Composition::new(a), r, s, minus)
        }
        "book" => Err(Error::Parse(
            "got a book where a single page was expected".into(),
        )),
        other => Err(Error::Parse(format!(
            "unknown shape prefix {other:?}; expected one of shifted/skew/trunc/nrs/ars"
        ))),
    }
}

/// Parses a book: `book:[page;page;...]`, or a single page which becomes a
/// one-page book.
pub fn parse_book(input: &str) -> Result<BookShape> {
    let input = input.trim();
    let Some(rest) = input.strip_prefix("book:") else {
        return BookShape::assemble(vec![parse_shape(input)?]);
    };
    let rest = rest.trim();
    let body = rest
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("book pages must be bracketed, got {rest:?}")))?;
    // Pages are ';'-joined, but the ars notation uses ';' internally: a
    // segment that does not open with a page prefix continues the previous
    // page.
    let mut page_texts: Vec<String> = Vec::new();
    for segment in body.split(';') {
        let starts_page = PAGE_PREFIXES
            .iter()
            .any(|prefix| segment.trim_start().starts_with(prefix));
        match (starts_page, page_texts.last_mut()) {
            (false, Some(last)) => {
                last.push(';');
                last.push_str(segment);
            }
            (false, None) => {
                return Err(Error::Parse(format!(
                    "book segment {segment:?} does not start a page"
                )));
            }
            (true, _) => page_texts.push(segment.to_string()),
        }
    }
    if page_texts.is_empty() {
        return Err(Error::Parse("book needs at least one page".into()));
    }
    let pages = page_texts
        .iter()
        .map(|text| parse_shape(text))
        .collect::<Result<Vec<_>>>()?;
    BookShape::assemble(pages)
}

fn join(values: &[u32]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl std::fmt::Display for PageShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.kind() {
            PageKind::Shifted { parts } => write!(f, "shifted:{}", join(parts.parts())),
            PageKind::Skew { outer, inner } => {
                write!(f, "skew:{}", join(outer.parts()))?;
                if !inner.is_empty() {
                    write!(f, "/{}", join(inner.parts()))?;
                }
                Ok(())
            }
            PageKind::Truncated { outer, inner } => {
                write!(f, "trunc:{}", join(outer.parts()))?;
                if !inner.is_empty() {
                    write!(f, "\\{}", join(inner.parts()))?;
                }
                Ok(())
            }
            PageKind::Nrs { n, r, s, minus } => {
                write!(f, "nrs:n={n},r={r},s={s}")?;
                if *minus {
                    write!(f, ",minus")?;
                }
                Ok(())
            }
            PageKind::Ars { a, r, s, minus } => {
                write!(f, "ars:a={};r={r};s={s}", join(a.parts()))?;
                if *minus {
                    write!(f, ",minus")?;
                }
                Ok(())
            }
        }
    }
}

impl std::fmt::Display for BookShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let pages: Vec<String> = self.pages().iter().map(|p| p.to_string()).collect();
        write!(f, "book:[{}]", pages.join(";"))
    }
}
