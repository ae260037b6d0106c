use std::fmt;

use crate::error::LieError;
use crate::lie::alphabet::{standard_factorization, GradedAlphabet, Word};

/// A full bracketing of letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BracketExpr {
    Letter(u8),
    Bracket(Box<BracketExpr>, Box<BracketExpr>),
}

impl BracketExpr {
    pub fn bracket(left: BracketExpr, right: BracketExpr) -> Self {
        BracketExpr::Bracket(Box::new(left), Box::new(right))
    }

    /// Leaves from left to right.
    pub fn word(&self) -> Word {
        let mut w = Vec::new();
        self.collect(&mut w);
        w
    }

    fn collect(&self, w: &mut Word) {
        match self {
            BracketExpr::Letter(l) => w.push(*l),
            BracketExpr::Bracket(a, b) => {
                a.collect(w);
                b.collect(w);
            }
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            BracketExpr::Letter(_) => 1,
            BracketExpr::Bracket(a, b) => a.degree() + b.degree(),
        }
    }

    pub fn show(&self, alpha: &GradedAlphabet) -> String {
        match self {
            BracketExpr::Letter(l) => alpha.name(*l).to_string(),
            BracketExpr::Bracket(a, b) => format!("[{},{}]", a.show(alpha), b.show(alpha)),
        }
    }

    /// Parses `[[a,b],[a,a]]`; whitespace is ignored.
    pub fn parse(s: &str, alpha: &GradedAlphabet) -> Result<Self, LieError> {
        let chars: Vec<(usize, char)> = s.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        let mut pos = 0;
        let e = parse_at(&chars, &mut pos, alpha)?;
        if pos != chars.len() {
            return Err(LieError::Parse {
                pos: chars[pos].0,
                msg: "trailing input".into(),
            });
        }
        Ok(e)
    }

    /// Replaces the `i`-th leaf (0-based, left to right) by `with`.
    pub fn substitute_leaf(&self, i: usize, with: &BracketExpr) -> BracketExpr {
        fn go(e: &BracketExpr, i: usize, with: &BracketExpr, seen: &mut usize) -> BracketExpr {
            match e {
                BracketExpr::Letter(_) => {
                    let here = *seen == i;
                    *seen += 1;
                    if here {
                        with.clone()
                    } else {
                        e.clone()
                    }
                }
                BracketExpr::Bracket(a, b) => {
                    let a = go(a, i, with, seen);
                    let b = go(b, i, with, seen);
                    BracketExpr::bracket(a, b)
                }
            }
        }
        go(self, i, with, &mut 0)
    }
}

fn parse_at(chars: &[(usize, char)], pos: &mut usize, alpha: &GradedAlphabet) -> Result<BracketExpr, LieError> {
    let err = |pos: usize, msg: &str| LieError::Parse {
        pos: chars.get(pos).map_or(usize::MAX, |c| c.0),
        msg: msg.into(),
    };
    match chars.get(*pos) {
        None => Err(err(*pos, "unexpected end of input")),
        Some(&(_, '[')) => {
            *pos += 1;
            let a = parse_at(chars, pos, alpha)?;
            if chars.get(*pos).map(|c| c.1) != Some(',') {
                return Err(err(*pos, "expected ','"));
            }
            *pos += 1;
            let b = parse_at(chars, pos, alpha)?;
            if chars.get(*pos).map(|c| c.1) != Some(']') {
                return Err(err(*pos, "expected ']'"));
            }
            *pos += 1;
            Ok(BracketExpr::bracket(a, b))
        }
        Some(&(_, c)) => {
            *pos += 1;
            Ok(BracketExpr::Letter(alpha.letter(c)?))
        }
    }
}

/// Standard bracketing `B(w)` of a Lyndon word.
pub fn standard_bracketing(w: &[u8]) -> Result<BracketExpr, LieError> {
    if w.len() == 1 {
        return Ok(BracketExpr::Letter(w[0]));
    }
    let (u, v) = standard_factorization(w).ok_or_else(|| {
        LieError::NotLyndon(w.iter().map(|&l| (b'a' + l) as char).collect())
    })?;
    Ok(BracketExpr::bracket(standard_bracketing(u)?, standard_bracketing(v)?))
}

impl fmt::Display for BracketExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketExpr::Letter(l) => write!(f, "{}", (b'a' + l) as char),
            BracketExpr::Bracket(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_show() {
        let a = GradedAlphabet::parse("a:odd,b:even").unwrap();
        let e = BracketExpr::parse(" [[a, b],[a,a]] ", &a).unwrap();
        assert_eq!(e.show(&a), "[[a,b],[a,a]]");
        assert_eq!(a.show(&e.word()), "abaa");
        assert!(BracketExpr::parse("[a,b", &a).is_err());
        assert!(BracketExpr::parse("[a,c]", &a).is_err());
        assert!(BracketExpr::parse("[a,b]]", &a).is_err());
    }

    #[test]
    fn bracketings() {
        let a = GradedAlphabet::parse("a:odd,b:even").unwrap();
        let b = |s: &str| standard_bracketing(&a.parse_word(s).unwrap()).unwrap().show(&a);
        assert_eq!(b("ab"), "[a,b]");
        assert_eq!(b("abbb"), "[[[a,b],b],b]");
        assert_eq!(b("aabab"), "[[a,[a,b]],[a,b]]");
        assert!(standard_bracketing(&a.parse_word("ba").unwrap()).is_err());
    }
}
