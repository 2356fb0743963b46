//! Tokenizer for the semigroup-definition language.

use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Tok {
    Ident(String),
    Nat(u64),
    /// `--name` style option
    Flag(String),
    Arrow,
    Eq,
    Colon,
    Semi,
    Comma,
    Caret,
    Slash,
    LBrack,
    RBrack,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Nat(n) => write!(f, "`{n}`"),
            Tok::Flag(s) => write!(f, "`--{s}`"),
            Tok::Arrow => write!(f, "`->`"),
            Tok::Eq => write!(f, "`=`"),
            Tok::Colon => write!(f, "`:`"),
            Tok::Semi => write!(f, "`;`"),
            Tok::Comma => write!(f, "`,`"),
            Tok::Caret => write!(f, "`^`"),
            Tok::Slash => write!(f, "`/`"),
            Tok::LBrack => write!(f, "`[`"),
            Tok::RBrack => write!(f, "`]`"),
            Tok::LBrace => write!(f, "`{{`"),
            Tok::RBrace => write!(f, "`}}`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Lexeme {
    pub tok: Tok,
    pub pos: Pos,
}

#[derive(Debug)]
pub struct LexError {
    pub pos: Pos,
    pub msg: String,
}

pub fn tokenize(text: &str) -> Result<Vec<Lexeme>, LexError> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    macro_rules! bump {
        () => {{
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                col = 1;
            } else if c.is_some() {
                col += 1;
            }
            c
        }};
    }
    loop {
        let pos = Pos { line, col };
        let Some(&c) = chars.peek() else {
            out.push(Lexeme { tok: Tok::Eof, pos });
            return Ok(out);
        };
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                bump!();
            }
            '#' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    bump!();
                }
            }
            '-' => {
                bump!();
                match chars.peek() {
                    Some('>') => {
                        bump!();
                        out.push(Lexeme { tok: Tok::Arrow, pos });
                    }
                    Some('-') => {
                        bump!();
                        // either a comment `-- ...` or an option `--name`
                        if chars.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
                            let mut s = String::new();
                            while let Some(&c) = chars.peek() {
                                if c.is_ascii_alphanumeric() || c == '-' || c == '_' {
                                    s.push(c);
                                    bump!();
                                } else {
                                    break;
                                }
                            }
                            out.push(Lexeme { tok: Tok::Flag(s), pos });
                        } else {
                            while let Some(&c) = chars.peek() {
                                if c == '\n' {
                                    break;
                                }
                                bump!();
                            }
                        }
                    }
                    _ => {
                        return Err(LexError { pos, msg: "stray `-`".into() });
                    }
                }
            }
            '=' => {
                bump!();
                out.push(Lexeme { tok: Tok::Eq, pos });
            }
            ':' => {
                bump!();
                out.push(Lexeme { tok: Tok::Colon, pos });
            }
            ';' => {
                bump!();
                out.push(Lexeme { tok: Tok::Semi, pos });
            }
            ',' => {
                bump!();
                out.push(Lexeme { tok: Tok::Comma, pos });
            }
            '^' => {
                bump!();
                out.push(Lexeme { tok: Tok::Caret, pos });
            }
            '/' => {
                bump!();
                out.push(Lexeme { tok: Tok::Slash, pos });
            }
            '[' => {
                bump!();
                out.push(Lexeme { tok: Tok::LBrack, pos });
            }
            ']' => {
                bump!();
                out.push(Lexeme { tok: Tok::RBrack, pos });
            }
            '{' => {
                bump!();
                out.push(Lexeme { tok: Tok::LBrace, pos });
            }
            '}' => {
                bump!();
                out.push(Lexeme { tok: Tok::RBrace, pos });
            }
            '(' => {
                bump!();
                out.push(Lexeme { tok: Tok::LParen, pos });
            }
            ')' => {
                bump!();
                out.push(Lexeme { tok: Tok::RParen, pos });
            }
            c if c.is_ascii_digit() => {
                let mut n: u64 = 0;
                while let Some(&c) = chars.peek() {
                    if let Some(d) = c.to_digit(10) {
                        n = n
                            .checked_mul(10)
                            .and_then(|n| n.checked_add(d as u64))
                            .ok_or_else(|| LexError { pos, msg: "number too large".into() })?;
                        bump!();
                    } else {
                        break;
                    }
                }
                out.push(Lexeme { tok: Tok::Nat(n), pos });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut s = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        s.push(c);
                        bump!();
                    } else {
                        break;
                    }
                }
                out.push(Lexeme { tok: Tok::Ident(s), pos });
            }
            other => {
                return Err(LexError { pos, msg: format!("unexpected character `{other}`") });
            }
        }
    }
}
