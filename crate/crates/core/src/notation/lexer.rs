use num_bigint::BigInt;

use super::{NotationError, ParseError, SourceSpan};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(super) enum Tok {
    LBracket,
    RBracket,
    LParen,
    RParen,
    Semi,
    Comma,
    Plus,
    Minus,
    Slash,
    Sqrt,
    Int(BigInt),
    Eof,
}

impl Tok {
    pub(super) fn describe(&self) -> String {
        match self {
            Tok::LBracket => "'['".into(),
            Tok::RBracket => "']'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Semi => "';'".into(),
            Tok::Comma => "','".into(),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Sqrt => "'sqrt'".into(),
            Tok::Int(_) => "integer".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
pub(super) struct Token {
    pub tok: Tok,
    pub span: SourceSpan,
}

/// Produces tokens on demand so that a bad character is only reported once
/// the parser actually reaches it.
#[derive(Clone)]
pub(super) struct Lexer<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    pub(super) fn new(text: &'a str) -> Self {
        Lexer { text, pos: 0 }
    }

    pub(super) fn next_token(&mut self) -> Result<Token, NotationError> {
        let rest = &self.text[self.pos..];
        let trimmed = rest.trim_start();
        let i = self.pos + (rest.len() - trimmed.len());
        self.pos = i;
        let Some(c) = trimmed.chars().next() else {
            return Ok(Token { tok: Tok::Eof, span: SourceSpan::new(i, i) });
        };
        let single = match c {
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ';' => Some(Tok::Semi),
            ',' => Some(Tok::Comma),
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '/' => Some(Tok::Slash),
            _ => None,
        };
        let (tok, len) = if let Some(tok) = single {
            (tok, 1)
        } else if c.is_ascii_digit() {
            let len = trimmed.bytes().take_while(u8::is_ascii_digit).count();
            (Tok::Int(trimmed[..len].parse().expect("ascii digits")), len)
        } else if trimmed.starts_with("sqrt") {
            (Tok::Sqrt, 4)
        } else {
            return Err(NotationError::Parse(ParseError {
                message: format!("unexpected character {c:?}"),
                span: SourceSpan::new(i, i + c.len_utf8()),
                expected: vec![],
            }));
        };
        self.pos = i + len;
        Ok(Token { tok, span: SourceSpan::new(i, i + len) })
    }
}
