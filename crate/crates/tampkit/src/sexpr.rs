//! Minimal s-expression reader with source positions.
//!
//! Shared by the PDDL and stream-declaration parsers. Symbols are
//! lowercased on read; `;` starts a comment running to end of line.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: u32,
    pub col: u32,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Sexpr {
    Sym(String, Pos),
    List(Vec<Sexpr>, Pos),
}

impl Sexpr {
    pub fn pos(&self) -> Pos {
        match self {
            Sexpr::Sym(_, p) | Sexpr::List(_, p) => *p,
        }
    }

    pub fn as_sym(&self) -> Option<&str> {
        match self {
            Sexpr::Sym(s, _) => Some(s),
            Sexpr::List(..) => None,
        }
    }

    pub fn as_list(&self) -> Option<&[Sexpr]> {
        match self {
            Sexpr::List(items, _) => Some(items),
            Sexpr::Sym(..) => None,
        }
    }
}

#[derive(Debug, Clone, thiserror::Error)]
#[error("syntax error at {pos}: {msg}")]
pub struct SexprError {
    pub msg: String,
    pub pos: Pos,
}

struct Reader<'a> {
    src: &'a str,
    bytes: &'a [u8],
    at: usize,
    line: u32,
    col: u32,
}

impl<'a> Reader<'a> {
    fn new(src: &'a str) -> Self {
        Reader { src, bytes: src.as_bytes(), at: 0, line: 1, col: 1 }
    }

    fn pos(&self) -> Pos {
        Pos { line: self.line, col: self.col }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.at).copied()
    }

    fn bump(&mut self) {
        if let Some(b) = self.peek() {
            self.at += 1;
            if b == b'\n' {
                self.line += 1;
                self.col = 1;
            } else {
                self.col += 1;
            }
        }
    }

    fn skip_trivia(&mut self) {
        loop {
            match self.peek() {
                Some(b) if b.is_ascii_whitespace() => self.bump(),
                Some(b';') => {
                    while let Some(b) = self.peek() {
                        if b == b'\n' {
                            break;
                        }
                        self.bump();
                    }
                }
                _ => break,
            }
        }
    }

    fn read_one(&mut self) -> Result<Sexpr, SexprError> {
        self.skip_trivia();
        let pos = self.pos();
        match self.peek() {
            None => Err(SexprError { msg: "unexpected end of input".into(), pos }),
            Some(b'(') => {
                self.bump();
                let mut items = Vec::new();
                loop {
                    self.skip_trivia();
                    match self.peek() {
                        Some(b')') => {
                            self.bump();
                            return Ok(Sexpr::List(items, pos));
                        }
                        None => {
                            return Err(SexprError {
                                msg: format!("unclosed '(' opened at {pos}"),
                                pos: self.pos(),
                            })
                        }
                        _ => items.push(self.read_one()?),
                    }
                }
            }
            Some(b')') => Err(SexprError { msg: "unmatched ')'".into(), pos }),
            Some(_) => {
                let start = self.at;
                while let Some(b) = self.peek() {
                    if b.is_ascii_whitespace() || b == b'(' || b == b')' || b == b';' {
                        break;
                    }
                    self.bump();
                }
                let sym = self.src[start..self.at].to_ascii_lowercase();
                Ok(Sexpr::Sym(sym, pos))
            }
        }
    }
}

/// Read every top-level form in `src`.
pub fn parse_all(src: &str) -> Result<Vec<Sexpr>, SexprError> {
    let mut reader = Reader::new(src);
    let mut forms = Vec::new();
    loop {
        reader.skip_trivia();
        if reader.peek().is_none() {
            return Ok(forms);
        }
        forms.push(reader.read_one()?);
    }
}

/// Read exactly one form, rejecting trailing content.
pub fn parse_one(src: &str) -> Result<Sexpr, SexprError> {
    let mut reader = Reader::new(src);
    let form = reader.read_one()?;
    reader.skip_trivia();
    if reader.peek().is_some() {
        return Err(SexprError { msg: "trailing content after form".into(), pos: reader.pos() });
    }
    Ok(form)
}
