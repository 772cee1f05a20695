use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::lexer::{Lexer, Tok, Token};
use super::{NotationError, ParseError, SourceSpan};
use crate::cf::CFExpansion;
use crate::number::{QuadIrr, Rational, Sign};

type PResult<T> = Result<T, NotationError>;

struct Parser<'a> {
    lexer: Lexer<'a>,
    peeked: Option<Token>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { lexer: Lexer::new(text), peeked: None }
    }

    fn peek(&mut self) -> PResult<&Token> {
        if self.peeked.is_none() {
            self.peeked = Some(self.lexer.next_token()?);
        }
        Ok(self.peeked.as_ref().unwrap())
    }

    fn bump(&mut self) -> PResult<Token> {
        self.peek()?;
        Ok(self.peeked.take().unwrap())
    }

    /// One token of extra lookahead past the peeked one.
    fn second_is_sqrt(&self) -> bool {
        let mut ahead = self.lexer.clone();
        matches!(ahead.next_token(), Ok(Token { tok: Tok::Sqrt, .. }))
    }

    fn at(&mut self, tok: &Tok) -> PResult<bool> {
        Ok(std::mem::discriminant(&self.peek()?.tok) == std::mem::discriminant(tok))
    }

    fn unexpected<T>(&mut self, expected: &[Tok]) -> PResult<T> {
        let t = self.peek()?.clone();
        Err(NotationError::Parse(ParseError {
            message: format!("unexpected {}", t.tok.describe()),
            span: t.span,
            expected: expected.iter().map(Tok::describe).collect(),
        }))
    }

    fn expect(&mut self, tok: Tok) -> PResult<Token> {
        if self.at(&tok)? {
            self.bump()
        } else {
            self.unexpected(&[tok])
        }
    }

    /// `"-"? digits`, with the span covering the sign.
    fn integer(&mut self) -> PResult<(BigInt, SourceSpan)> {
        let negative = self.at(&Tok::Minus)?;
        let start = if negative { Some(self.bump()?.span.start) } else { None };
        let t = self.peek()?.clone();
        match t.tok {
            Tok::Int(v) => {
                self.bump()?;
                let span = SourceSpan::new(start.unwrap_or(t.span.start), t.span.end);
                Ok((if negative { -v } else { v }, span))
            }
            _ => self.unexpected(&[Tok::Int(BigInt::zero())]),
        }
    }

    fn digit(&mut self) -> PResult<BigInt> {
        let (v, span) = self.integer()?;
        if v < BigInt::one() {
            return Err(NotationError::InvalidDigit { span, value: v.to_string() });
        }
        Ok(v)
    }

    fn period(&mut self) -> PResult<Vec<BigInt>> {
        self.expect(Tok::LParen)?;
        let mut ds = vec![self.digit()?];
        while self.at(&Tok::Comma)? {
            self.bump()?;
            ds.push(self.digit()?);
        }
        self.expect(Tok::RParen)?;
        Ok(ds)
    }

    fn cf(&mut self) -> PResult<CFExpansion> {
        self.expect(Tok::LBracket)?;
        let (c0, _) = self.integer()?;
        let mut initial = vec![c0];
        let mut repeating = Vec::new();
        if self.at(&Tok::Semi)? || self.at(&Tok::Comma)? {
            self.bump()?;
            if self.at(&Tok::LParen)? {
                repeating = self.period()?;
            } else if self.at(&Tok::Int(BigInt::zero()))? || self.at(&Tok::Minus)? {
                initial.push(self.digit()?);
                while self.at(&Tok::Comma)? {
                    self.bump()?;
                    if self.at(&Tok::LParen)? {
                        repeating = self.period()?;
                        break;
                    }
                    initial.push(self.digit()?);
                }
            } else {
                return self.unexpected(&[Tok::Int(BigInt::zero()), Tok::LParen]);
            }
            if !self.at(&Tok::RBracket)? {
                return if repeating.is_empty() {
                    self.unexpected(&[Tok::Comma, Tok::RBracket])
                } else {
                    self.unexpected(&[Tok::RBracket])
                };
            }
        } else if !self.at(&Tok::RBracket)? {
            return self.unexpected(&[Tok::Semi, Tok::Comma, Tok::RBracket]);
        }
        self.expect(Tok::RBracket)?;
        self.expect(Tok::Eof)?;
        Ok(CFExpansion { initial, repeating })
    }

    fn rational(&mut self) -> PResult<(Rational, SourceSpan)> {
        let (n, span) = self.integer()?;
        if !self.at(&Tok::Slash)? {
            return Ok((Rational::from(n), span));
        }
        self.bump()?;
        let (d, dspan) = self.integer()?;
        let rat = Rational::new(n, d).map_err(|error| NotationError::Value { span: dspan, error })?;
        Ok((rat, SourceSpan::new(span.start, dspan.end)))
    }

    fn sign(&mut self) -> PResult<Sign> {
        match self.peek()?.tok {
            Tok::Plus => {
                self.bump()?;
                Ok(Sign::Plus)
            }
            Tok::Minus => {
                self.bump()?;
                Ok(Sign::Minus)
            }
            _ => self.unexpected(&[Tok::Plus, Tok::Minus]),
        }
    }

    /// `"sqrt" "(" rational ")"`
    fn sqrt_term(&mut self) -> PResult<(Rational, SourceSpan)> {
        self.expect(Tok::Sqrt)?;
        self.expect(Tok::LParen)?;
        let r = self.rational()?;
        self.expect(Tok::RParen)?;
        Ok(r)
    }

    fn quad(&mut self) -> PResult<QuadIrr> {
        if self.at(&Tok::LParen)? {
            return self.scaled_quad();
        }
        let (rat, sign) = if self.at(&Tok::Sqrt)? {
            (Rational::zero(), Sign::Plus)
        } else if self.at(&Tok::Minus)? && self.second_is_sqrt() {
            self.bump()?;
            (Rational::zero(), Sign::Minus)
        } else if self.at(&Tok::Int(BigInt::zero()))? || self.at(&Tok::Minus)? {
            let (rat, _) = self.rational()?;
            (rat, self.sign()?)
        } else {
            return self.unexpected(&[Tok::Int(BigInt::zero()), Tok::Minus, Tok::Sqrt, Tok::LParen]);
        };
        let (radicand, span) = self.sqrt_term()?;
        self.expect(Tok::Eof)?;
        QuadIrr::new(rat, sign, radicand).map_err(|error| NotationError::Value { span, error })
    }

    fn scaled_quad(&mut self) -> PResult<QuadIrr> {
        self.expect(Tok::LParen)?;
        let (p, _) = self.integer()?;
        let sign = self.sign()?;
        self.expect(Tok::Sqrt)?;
        self.expect(Tok::LParen)?;
        let (d, dspan) = self.integer()?;
        self.expect(Tok::RParen)?;
        self.expect(Tok::RParen)?;
        self.expect(Tok::Slash)?;
        let (q, qspan) = self.integer()?;
        self.expect(Tok::Eof)?;
        let value = |error| NotationError::Value { span: qspan, error };
        let rat = Rational::new(p, q.clone()).map_err(value)?;
        let radicand = Rational::new(d, &q * &q).map_err(value)?;
        QuadIrr::new(rat, sign, radicand).map_err(|error| NotationError::Value { span: dspan, error })
    }
}

pub fn parse_cf(text: &str) -> Result<CFExpansion, NotationError> {
    Parser::new(text).cf()
}

pub fn parse_quad(text: &str) -> Result<QuadIrr, NotationError> {
    Parser::new(text).quad()
}
