//! Text forms accepted on the command line: elements, boxes, and
//! generator terms.

use pqk_core::{
    parse_scalar, BoxDomain, FueterTerm, Paraquaternion, Scalar, Side,
};
use std::fmt;
use thiserror::Error;

/// Parse error with the byte position of the offending input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct TextError {
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for TextError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: {}", self.pos, self.msg)
    }
}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(input: &'a str) -> Self {
        Self {
            bytes: input.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek();
        if b.is_some() {
            self.pos += 1;
        }
        b
    }

    fn error(&self, msg: impl Into<String>) -> TextError {
        TextError {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits")
    }

    /// `digits [ '/' digits ]`, whitespace allowed around the slash.
    fn rational(&mut self) -> Result<Scalar, TextError> {
        let start = self.pos;
        let numer = self.digits();
        if numer.is_empty() {
            return Err(self.error("expected digits"));
        }
        let checkpoint = self.pos;
        self.skip_ws();
        if self.peek() == Some(b'/') {
            self.bump();
            self.skip_ws();
            let denom_pos = self.pos;
            let denom = self.digits();
            if denom.is_empty() {
                return Err(TextError {
                    pos: denom_pos,
                    msg: "expected denominator digits".into(),
                });
            }
            return parse_scalar(&format!("{numer}/{denom}")).map_err(|e| TextError {
                pos: start,
                msg: e.to_string(),
            });
        }
        self.pos = checkpoint;
        parse_scalar(numer).map_err(|e| TextError {
            pos: start,
            msg: e.to_string(),
        })
    }

    /// `i1`, `i2`, or `i3`; the scanner sits on the `i`.
    fn basis(&mut self) -> Result<usize, TextError> {
        debug_assert_eq!(self.peek(), Some(b'i'));
        self.bump();
        match self.bump() {
            Some(b @ b'1'..=b'3') => Ok((b - b'0') as usize),
            _ => Err(TextError {
                pos: self.pos.saturating_sub(1),
                msg: "unknown basis element (expected i1, i2, or i3)".into(),
            }),
        }
    }
}

/// Parses the grammar `a+b*i1+c*i2+d*i3`: signed terms that are either a
/// rational literal, a bare basis element, or `rational*basis`. Omitted
/// terms are zero; repeated terms accumulate; whitespace is ignored.
pub fn parse_paraquaternion(input: &str) -> Result<Paraquaternion, TextError> {
    let mut s = Scanner::new(input);
    let mut acc = Paraquaternion::zero();
    s.skip_ws();
    if s.peek().is_none() {
        return Err(s.error("empty element"));
    }
    let mut first = true;
    loop {
        s.skip_ws();
        let negative = if first {
            match s.peek() {
                Some(b'-') => {
                    s.bump();
                    true
                }
                Some(b'+') => {
                    s.bump();
                    false
                }
                _ => false,
            }
        } else {
            match s.peek() {
                None => break,
                Some(b'-') => {
                    s.bump();
                    true
                }
                Some(b'+') => {
                    s.bump();
                    false
                }
                Some(_) => return Err(s.error("expected `+` or `-` between terms")),
            }
        };
        first = false;
        s.skip_ws();
        let coef_and_slot = match s.peek() {
            Some(b'i') => (Scalar::from_integer(1.into()), s.basis()?),
            Some(b) if b.is_ascii_digit() => {
                let coef = s.rational()?;
                s.skip_ws();
                if s.peek() == Some(b'*') {
                    s.bump();
                    s.skip_ws();
                    if s.peek() != Some(b'i') {
                        return Err(s.error("expected a basis element after `*`"));
                    }
                    (coef, s.basis()?)
                } else {
                    (coef, 0)
                }
            }
            _ => return Err(s.error("expected a rational literal or a basis element")),
        };
        let (coef, slot) = coef_and_slot;
        let signed = if negative { -coef } else { coef };
        let target = match slot {
            0 => &mut acc.re,
            1 => &mut acc.im1,
            2 => &mut acc.im2,
            _ => &mut acc.im3,
        };
        *target = &*target + &signed;
    }
    Ok(acc)
}

/// Parses `LO:HI,LO:HI,LO:HI,LO:HI` with rational or decimal endpoints.
pub fn parse_box(input: &str) -> Result<BoxDomain, TextError> {
    let parts: Vec<&str> = input.split(',').collect();
    if parts.len() != 4 {
        return Err(TextError {
            pos: 0,
            msg: format!("expected 4 comma-separated ranges, found {}", parts.len()),
        });
    }
    let mut offset = 0;
    let mut lo: [Scalar; 4] = std::array::from_fn(|_| Scalar::from_integer(0.into()));
    let mut hi = lo.clone();
    for (k, part) in parts.iter().enumerate() {
        let Some((lo_text, hi_text)) = part.split_once(':') else {
            return Err(TextError {
                pos: offset,
                msg: "expected `LO:HI`".into(),
            });
        };
        lo[k] = parse_scalar(lo_text).map_err(|e| TextError {
            pos: offset,
            msg: e.to_string(),
        })?;
        hi[k] = parse_scalar(hi_text).map_err(|e| TextError {
            pos: offset + lo_text.len() + 1,
            msg: e.to_string(),
        })?;
        offset += part.len() + 1;
    }
    BoxDomain::new(lo, hi).map_err(|e| TextError {
        pos: 0,
        msg: e.to_string(),
    })
}

/// Longest index string accepted in a generator term; the symmetrized
/// product averages over the orderings of the string.
pub const MAX_TERM_INDICES: usize = 8;

/// Parses `INDICES:COEFF`, e.g. `123:1/2+i2`, into a generator term for
/// the given side.
pub fn parse_fueter_term(input: &str, side: Side) -> Result<FueterTerm, TextError> {
    let Some((index_text, coef_text)) = input.split_once(':') else {
        return Err(TextError {
            pos: 0,
            msg: "expected `INDICES:COEFF`".into(),
        });
    };
    let index_text = index_text.trim();
    if index_text.is_empty() {
        return Err(TextError {
            pos: 0,
            msg: "empty index string".into(),
        });
    }
    if index_text.len() > MAX_TERM_INDICES {
        return Err(TextError {
            pos: 0,
            msg: format!("index string longer than {MAX_TERM_INDICES}"),
        });
    }
    let mut indices = Vec::with_capacity(index_text.len());
    for (k, ch) in index_text.char_indices() {
        match ch {
            '1'..='3' => indices.push(ch as u8 - b'0'),
            _ => {
                return Err(TextError {
                    pos: k,
                    msg: format!("invalid index `{ch}` (expected 1, 2, or 3)"),
                })
            }
        }
    }
    let coef_offset = input.len() - coef_text.len();
    let coefficient = parse_paraquaternion(coef_text).map_err(|e| TextError {
        pos: coef_offset + e.pos,
        msg: e.msg,
    })?;
    FueterTerm::new(side, indices, coefficient).map_err(|e| TextError {
        pos: 0,
        msg: e.to_string(),
    })
}
