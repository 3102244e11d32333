//! Text form of forests.
//!
//! Grammar: `forest := "1" | tree+` and `tree := "[" tree* "]"`, with
//! optional whitespace between tokens. `1` denotes the empty forest and is
//! only valid as a whole forest.

use super::{Forest, Tree};
use crate::{Error, Result};

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor { bytes: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { offset: self.pos, message: message.into() })
    }
}

fn parse_tree(c: &mut Cursor) -> Result<Tree> {
    debug_assert_eq!(c.peek(), Some(b'['));
    c.bump();
    let mut children = Vec::new();
    loop {
        c.skip_ws();
        match c.peek() {
            Some(b'[') => children.push(parse_tree(c)?),
            Some(b']') => {
                c.bump();
                return Ok(Tree::new(children));
            }
            Some(other) => return c.err(format!("expected '[' or ']', found {:?}", other as char)),
            None => return c.err("unclosed '[': expected ']'"),
        }
    }
}

/// Parses the text form of a forest. Errors carry the byte offset of the
/// offending position in `input`.
pub fn parse_forest(input: &str) -> Result<Forest> {
    let mut c = Cursor::new(input);
    c.skip_ws();
    match c.peek() {
        None => c.err("empty input: expected a forest"),
        Some(b'1') => {
            c.bump();
            c.skip_ws();
            if c.peek().is_some() {
                return c.err("'1' denotes the empty forest and must stand alone");
            }
            Ok(Forest::empty())
        }
        Some(_) => {
            let mut trees = Vec::new();
            loop {
                c.skip_ws();
                match c.peek() {
                    None => break,
                    Some(b'[') => trees.push(parse_tree(&mut c)?),
                    Some(other) => {
                        return c.err(format!("expected '[', found {:?}", other as char))
                    }
                }
            }
            Ok(Forest::new(trees))
        }
    }
}
