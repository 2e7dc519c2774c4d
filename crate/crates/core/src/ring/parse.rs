use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Monomial, Polynomial, Rational, RingError, Var};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    X,
    Y,
    U,
    Underscore,
    Star,
    Caret,
    Slash,
    Plus,
    Minus,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, RingError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("ascii digits");
                out.push((start, Tok::Num(n)));
                continue;
            }
            b'x' => Tok::X,
            b'y' => Tok::Y,
            b'u' => Tok::U,
            b'_' => Tok::Underscore,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'/' => Tok::Slash,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            _ => {
                return Err(RingError::Syntax {
                    pos: i,
                    msg: format!("unexpected character {:?}", text[i..].chars().next().unwrap()),
                })
            }
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    d: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, RingError> {
        Err(RingError::Syntax { pos: self.offset(), msg: msg.into() })
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn nat(&mut self) -> Result<BigInt, RingError> {
        match self.peek() {
            Some(Tok::Num(_)) => match self.bump() {
                Some(Tok::Num(n)) => Ok(n),
                _ => unreachable!(),
            },
            _ => self.err("expected a natural number"),
        }
    }

    fn small_nat(&mut self) -> Result<usize, RingError> {
        let at = self.offset();
        let n = self.nat()?;
        usize::try_from(&n).map_err(|_| RingError::Syntax { pos: at, msg: "number too large".into() })
    }

    fn coef(&mut self) -> Result<Rational, RingError> {
        let num = self.nat()?;
        if self.peek() == Some(&Tok::Slash) {
            self.bump();
            let at = self.offset();
            let den = self.nat()?;
            if den.is_zero() {
                return Err(RingError::Syntax { pos: at, msg: "zero denominator".into() });
            }
            return Ok(Rational::new(num, den));
        }
        Ok(Rational::from_integer(num))
    }

    fn var(&mut self) -> Result<Var, RingError> {
        match self.bump() {
            Some(Tok::X) => Ok(Var::X(self.small_nat()?)),
            Some(Tok::Y) => Ok(Var::Y(self.small_nat()?)),
            Some(Tok::U) => {
                let j = self.small_nat()?;
                if self.bump() != Some(Tok::Underscore) {
                    self.pos -= 1;
                    return self.err("expected '_' in u-variable");
                }
                let k = self.small_nat()?;
                Ok(Var::U(j, k))
            }
            _ => {
                self.pos -= 1;
                self.err("expected a variable")
            }
        }
    }

    fn factors<M: Monomial>(&mut self) -> Result<M, RingError> {
        let mut m = M::one(self.d);
        loop {
            let v = self.var()?;
            let mut e = 1u32;
            if self.peek() == Some(&Tok::Caret) {
                self.bump();
                let at = self.offset();
                let n = self.nat()?;
                e = u32::try_from(&n)
                    .map_err(|_| RingError::Syntax { pos: at, msg: "exponent too large".into() })?;
            }
            m = m.mul(&M::from_var(self.d, v, e)?);
            if self.peek() != Some(&Tok::Star) {
                return Ok(m);
            }
            self.bump();
        }
    }

    fn term<M: Monomial>(&mut self) -> Result<(M, Rational), RingError> {
        if matches!(self.peek(), Some(Tok::Num(_))) {
            let c = self.coef()?;
            if self.peek() == Some(&Tok::Star) {
                self.bump();
                return Ok((self.factors()?, c));
            }
            return Ok((M::one(self.d), c));
        }
        Ok((self.factors()?, Rational::one()))
    }
}

/// Parses the ASCII polynomial grammar
///
/// ```text
/// poly    := [sign] term { sign term }
/// term    := coef | coef '*' factors | factors
/// factors := factor { '*' factor }
/// factor  := var [ '^' nat ]
/// var     := 'x' nat | 'y' nat | 'u' nat '_' nat
/// coef    := nat | nat '/' nat
/// ```
///
/// into a polynomial of the ring selected by `M` with `d` index slots.
pub fn parse_poly<M: Monomial>(text: &str, d: usize) -> Result<Polynomial<M>, RingError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, end: text.len(), d };
    let mut out = Polynomial::zero(d);
    let mut negate = match p.peek() {
        Some(Tok::Minus) => {
            p.bump();
            true
        }
        Some(Tok::Plus) => {
            p.bump();
            false
        }
        None => return p.err("empty polynomial"),
        _ => false,
    };
    loop {
        let (m, c) = p.term::<M>()?;
        out.add_term(m, if negate { -c } else { c });
        negate = match p.bump() {
            None => return Ok(out),
            Some(Tok::Plus) => false,
            Some(Tok::Minus) => true,
            Some(_) => {
                p.pos -= 1;
                return p.err("expected '+' or '-'");
            }
        };
    }
}

#[cfg(test)]
mod tests {
    use super::super::{AMonomial, PMonomial};
    use super::*;

    #[test]
    fn parses_a_polynomial() {
        let p = parse_poly::<AMonomial>("x1*y2 - x2^2*y1", 2).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.coeff(&AMonomial::new(&[1, 0], &[0, 1])), Rational::one());
        assert_eq!(p.coeff(&AMonomial::new(&[0, 2], &[1, 0])), -Rational::one());
    }

    #[test]
    fn parses_fraction_coefficient() {
        let p = parse_poly::<PMonomial>("3/2*u1_2^2", 2).unwrap();
        let m = PMonomial::new(vec![0, 0], &[((1, 2), 2)]).unwrap();
        assert_eq!(p.coeff(&m), Rational::new(3.into(), 2.into()));
    }

    #[test]
    fn whitespace_is_insignificant() {
        let a = parse_poly::<PMonomial>(" - 2 * x1 ^ 3 *u 1 _ 3 + 7", 3).unwrap();
        let b = parse_poly::<PMonomial>("-2*x1^3*u1_3+7", 3).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_descending_pair() {
        assert_eq!(
            parse_poly::<PMonomial>("u2_1", 2).unwrap_err(),
            RingError::PairNotAscending { j: 2, k: 1 }
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_poly::<AMonomial>("x3", 2), Err(RingError::IndexOutOfRange { .. })));
        assert!(matches!(parse_poly::<AMonomial>("x0", 2), Err(RingError::IndexOutOfRange { .. })));
        assert!(matches!(parse_poly::<AMonomial>("u1_2", 2), Err(RingError::ForeignVariable { .. })));
        assert!(matches!(parse_poly::<PMonomial>("y1", 2), Err(RingError::ForeignVariable { .. })));
        for bad in ["", "x1 +", "x1 y1", "2/0", "x1^", "u1", "x1*2", "*x1", "x1 $ y1"] {
            assert!(
                matches!(parse_poly::<AMonomial>(bad, 2), Err(RingError::Syntax { .. })),
                "{bad:?} should be a syntax error"
            );
        }
    }

    #[test]
    fn zero_and_repeated_factors() {
        assert!(parse_poly::<AMonomial>("0", 1).unwrap().is_zero());
        assert!(parse_poly::<AMonomial>("x1 - x1", 1).unwrap().is_zero());
        assert_eq!(
            parse_poly::<AMonomial>("x1*x1", 1).unwrap(),
            parse_poly::<AMonomial>("x1^2", 1).unwrap()
        );
    }
}
