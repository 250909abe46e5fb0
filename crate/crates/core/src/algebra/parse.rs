use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use super::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("empty polynomial")]
    Empty,
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
}

/// Parses `term (('+'|'-') term)*` with `term = [int]['*']['t'['^'int]]`.
/// Whitespace is ignored and a leading sign is allowed.
pub fn parse_poly(text: &str) -> Result<IntPoly, ParseError> {
    let chars: Vec<(usize, char)> =
        text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(ParseError::Empty);
    }
    let mut p = Parser { chars, idx: 0, end: text.len() };
    let mut acc = IntPoly::zero();
    let mut negative = match p.peek() {
        Some('-') => {
            p.idx += 1;
            true
        }
        Some('+') => {
            p.idx += 1;
            false
        }
        _ => false,
    };
    loop {
        let (c, e) = p.term()?;
        let c = if negative { -c } else { c };
        acc = acc + IntPoly::monomial(c, e);
        match p.peek() {
            None => break,
            Some('+') => negative = false,
            Some('-') => negative = true,
            Some(other) => return Err(p.err(format!("unexpected '{other}'"))),
        }
        p.idx += 1;
    }
    Ok(acc)
}

struct Parser {
    chars: Vec<(usize, char)>,
    idx: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.idx).map(|&(_, c)| c)
    }

    fn pos(&self) -> usize {
        self.chars.get(self.idx).map_or(self.end, |&(p, _)| p)
    }

    fn err(&self, msg: String) -> ParseError {
        ParseError::Syntax { pos: self.pos(), msg }
    }

    fn int(&mut self) -> Option<BigInt> {
        let start = self.idx;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.idx += 1;
        }
        if start == self.idx {
            return None;
        }
        let digits: String = self.chars[start..self.idx].iter().map(|&(_, c)| c).collect();
        Some(BigInt::from_str(&digits).expect("digits parse"))
    }

    fn term(&mut self) -> Result<(BigInt, i64), ParseError> {
        let coeff = self.int();
        let star = self.peek() == Some('*');
        if star {
            if coeff.is_none() {
                return Err(self.err("'*' without a coefficient".into()));
            }
            self.idx += 1;
        }
        if self.peek() != Some('t') {
            if star {
                return Err(self.err("expected 't' after '*'".into()));
            }
            return match coeff {
                Some(c) => Ok((c, 0)),
                None => Err(self.err("expected a term".into())),
            };
        }
        self.idx += 1;
        let mut exp = 1i64;
        if self.peek() == Some('^') {
            self.idx += 1;
            let e = self.int().ok_or_else(|| self.err("expected exponent".into()))?;
            exp = i64::try_from(e).map_err(|_| self.err("exponent too large".into()))?;
        }
        Ok((coeff.unwrap_or_else(BigInt::one), exp))
    }
}

impl FromStr for IntPoly {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_poly(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_factors_parse() {
        assert_eq!(parse_poly("t+2").unwrap(), IntPoly::from_i64s(&[2, 1]));
        assert_eq!(parse_poly("t^4+t+1").unwrap(), IntPoly::from_i64s(&[1, 1, 0, 0, 1]));
        assert_eq!(parse_poly("t^4+t^1+1").unwrap(), IntPoly::from_i64s(&[1, 1, 0, 0, 1]));
        assert!(parse_poly("0").unwrap().is_zero());
    }

    #[test]
    fn accepts_star_and_signs() {
        assert_eq!(parse_poly("-3*t^2 + 2t - 1").unwrap(), IntPoly::from_i64s(&[-1, 2, -3]));
        assert_eq!(parse_poly("t - t").unwrap(), IntPoly::zero());
    }

    #[test]
    fn reports_errors_with_position() {
        assert_eq!(parse_poly("  "), Err(ParseError::Empty));
        match parse_poly("t+*2") {
            Err(ParseError::Syntax { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("{other:?}"),
        }
        assert!(parse_poly("t^").is_err());
        assert!(parse_poly("t^-1").is_err());
        assert!(parse_poly("2*").is_err());
        assert!(parse_poly("x+1").is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["t^3+2t^2+t+1", "-t^2-1", "7", "t^7-t^6+t^5-t^4+t^3-t^2+t-1"] {
            assert_eq!(parse_poly(s).unwrap().to_string(), s);
        }
    }
}
