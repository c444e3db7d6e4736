use std::fmt;

use super::ClaimError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(super) enum Tok {
    Ident(String),
    Forall,
    With,
    Open,
    Closed,
    Set,
    Cl,
    Int,
    Cmp,
    Empty,
    Full,
    Comma,
    Colon,
    LParen,
    RParen,
    Amp,
    Pipe,
    Eq,
    Le,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Tok::Ident(name) => return write!(f, "identifier `{name}`"),
            Tok::Forall => "`forall`",
            Tok::With => "`with`",
            Tok::Open => "`open`",
            Tok::Closed => "`closed`",
            Tok::Set => "`set`",
            Tok::Cl => "`cl`",
            Tok::Int => "`int`",
            Tok::Cmp => "`cmp`",
            Tok::Empty => "`empty`",
            Tok::Full => "`X`",
            Tok::Comma => "`,`",
            Tok::Colon => "`:`",
            Tok::LParen => "`(`",
            Tok::RParen => "`)`",
            Tok::Amp => "`&`",
            Tok::Pipe => "`|`",
            Tok::Eq => "`=`",
            Tok::Le => "`<=`",
            Tok::Eof => "end of input",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

pub(super) fn keyword(word: &str) -> Option<Tok> {
    Some(match word {
        "forall" => Tok::Forall,
        "with" => Tok::With,
        "open" => Tok::Open,
        "closed" => Tok::Closed,
        "set" => Tok::Set,
        "cl" => Tok::Cl,
        "int" => Tok::Int,
        "cmp" => Tok::Cmp,
        "empty" => Tok::Empty,
        "X" => Tok::Full,
        _ => return None,
    })
}

pub(super) fn tokenize(text: &str) -> Result<Vec<(Tok, Pos)>, ClaimError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, column };
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        if c.is_ascii_alphabetic() {
            let mut word = String::new();
            while let Some(&d) = chars.peek() {
                if !d.is_ascii_alphanumeric() {
                    break;
                }
                word.push(d);
                chars.next();
                column += 1;
            }
            let tok = keyword(&word).unwrap_or(Tok::Ident(word));
            out.push((tok, pos));
            continue;
        }
        chars.next();
        column += 1;
        let tok = match c {
            ',' => Tok::Comma,
            ':' => Tok::Colon,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '&' => Tok::Amp,
            '|' => Tok::Pipe,
            '=' => Tok::Eq,
            '<' if chars.peek() == Some(&'=') => {
                chars.next();
                column += 1;
                Tok::Le
            }
            other => {
                return Err(ClaimError::Parse {
                    line: pos.line,
                    column: pos.column,
                    expected: vec!["a token".to_owned()],
                    found: format!("`{other}`"),
                })
            }
        };
        out.push((tok, pos));
    }
    out.push((Tok::Eof, Pos { line, column }));
    Ok(out)
}
