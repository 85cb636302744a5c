//! Recursive-descent parser for the expression language (see `docs/grammar.ebnf`).
//!
//! One grammar covers all three element types. The factors present in each
//! term decide its type: a `d<p>` or `D(p,q; u)` makes an operator, a
//! `v{..}` makes a module vector, anything else is an algebra element.
//! Mixing types inside a sum is an error reported at the offending term.

use std::fmt;

use divfree_core::{
    AlgebraElement, BasisVector, GroupElement, LinComb, Monomial, ModuleElement, MultiIndex, Space, WeightModule,
    WittElement, WittTerm, Q,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

/// A parsed expression. A bare `0` has no type and converts to any of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Zero,
    Algebra(AlgebraElement),
    Witt(WittElement),
    Module(ModuleElement),
}

impl Expr {
    fn kind(&self) -> Option<&'static str> {
        match self {
            Expr::Zero => None,
            Expr::Algebra(_) => Some("algebra element"),
            Expr::Witt(_) => Some("operator"),
            Expr::Module(_) => Some("module vector"),
        }
    }
}

type PResult<T> = Result<T, ParseError>;

pub fn parse(input: &str, space: &Space, rho: &GroupElement) -> PResult<Expr> {
    let mut p = Parser { src: input.as_bytes(), pos: 0, space, rho };
    let e = p.sum()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.unexpected());
    }
    Ok(e)
}

pub fn parse_algebra(input: &str, space: &Space, rho: &GroupElement) -> PResult<AlgebraElement> {
    match parse(input, space, rho)? {
        Expr::Zero => Ok(LinComb::zero()),
        Expr::Algebra(a) => Ok(a),
        other => Err(wrong_kind(input, "algebra element", &other)),
    }
}

pub fn parse_witt(input: &str, space: &Space, rho: &GroupElement) -> PResult<WittElement> {
    match parse(input, space, rho)? {
        Expr::Zero => Ok(LinComb::zero()),
        Expr::Witt(w) => Ok(w),
        other => Err(wrong_kind(input, "operator", &other)),
    }
}

/// Module vectors are validated against `module` and projected in the quotient.
pub fn parse_module(input: &str, module: &WeightModule) -> PResult<ModuleElement> {
    let rho = module.space().zero_group();
    let v = match parse(input, module.space(), &rho)? {
        Expr::Zero => LinComb::zero(),
        Expr::Module(v) => v,
        other => return Err(wrong_kind(input, "module vector", &other)),
    };
    module.check_element(&v).map_err(|e| ParseError { offset: 0, message: e.to_string() })?;
    Ok(module.project(v))
}

fn wrong_kind(input: &str, wanted: &str, got: &Expr) -> ParseError {
    let offset = input.len() - input.trim_start().len();
    ParseError {
        offset,
        message: format!("expected {wanted}, found {}", got.kind().unwrap_or("zero")),
    }
}

/// What a term ends in, besides its coefficient and monomial.
enum Tail {
    None,
    Dir(usize),
    DOp(WittElement),
    Vector(BasisVector),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    space: &'a Space,
    rho: &'a GroupElement,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, offset: usize, message: impl Into<String>) -> PResult<T> {
        Err(ParseError { offset, message: message.into() })
    }

    fn unexpected(&self) -> ParseError {
        let message = match self.rest().chars().next() {
            Some(c) => format!("unexpected '{c}'"),
            None => "unexpected end of input".into(),
        };
        ParseError { offset: self.pos, message }
    }

    fn rest(&self) -> &str {
        std::str::from_utf8(&self.src[self.pos..]).unwrap_or("")
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> PResult<()> {
        if self.eat(b) {
            Ok(())
        } else {
            let found = self.unexpected();
            self.err(found.offset, format!("expected '{}', {}", b as char, found.message))
        }
    }

    /// Digits only; whitespace inside a number is not allowed.
    fn digits(&mut self) -> PResult<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            let found = self.unexpected();
            return self.err(start, format!("expected a number, {}", found.message));
        }
        Ok((start, std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits")))
    }

    fn natural<T: std::str::FromStr>(&mut self, what: &str) -> PResult<(usize, T)> {
        let (at, s) = self.digits()?;
        match s.parse() {
            Ok(v) => Ok((at, v)),
            Err(_) => self.err(at, format!("{what} '{s}' out of range")),
        }
    }

    fn integer(&mut self) -> PResult<i64> {
        let neg = self.eat(b'-');
        let (at, s) = self.digits()?;
        let text = if neg { format!("-{s}") } else { s.to_string() };
        text.parse().or_else(|_| self.err(at, format!("integer '{text}' out of range")))
    }

    fn list<T>(&mut self, open: u8, close: u8, mut item: impl FnMut(&mut Self) -> PResult<T>) -> PResult<Vec<T>> {
        self.expect(open)?;
        let mut out = Vec::new();
        if self.eat(close) {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.eat(close) {
                return Ok(out);
            }
            self.expect(b',')?;
        }
    }

    fn coefficient(&mut self) -> PResult<Q> {
        let (_, num) = self.digits()?;
        let num = num.to_string();
        if self.eat(b'/') {
            let (at, den) = self.digits()?;
            if den.bytes().all(|b| b == b'0') {
                return self.err(at, "zero denominator");
            }
            let n: Q = num.parse().expect("digits");
            let d: Q = den.parse().expect("digits");
            return Ok(n / d);
        }
        Ok(num.parse::<Q>().expect("digits"))
    }

    fn group_element(&mut self, at: usize) -> PResult<GroupElement> {
        let coords = self.list(b'{', b'}', Self::integer)?;
        let rank = self.space.rank();
        if coords.len() != rank {
            return self.err(at, format!("expected {rank} coordinates in braces, found {}", coords.len()));
        }
        Ok(GroupElement::new(coords))
    }

    fn multi_index(&mut self, at: usize) -> PResult<MultiIndex> {
        let entries = self.list(b'[', b']', |p| p.natural::<u32>("exponent").map(|(_, v)| v))?;
        let n = self.space.poly_vars();
        if entries.len() != n {
            return self.err(at, format!("expected {n} exponents in brackets, found {}", entries.len()));
        }
        Ok(MultiIndex::new(entries))
    }

    fn direction(&mut self) -> PResult<usize> {
        let (at, p) = self.natural::<usize>("direction")?;
        let l = self.space.l();
        if !(1..=l).contains(&p) {
            return self.err(at, format!("direction {p} out of range 1..={l}"));
        }
        Ok(p)
    }

    /// `sum := ['+'|'-'] term (('+'|'-') term)*`
    fn sum(&mut self) -> PResult<Expr> {
        let mut acc = Expr::Zero;
        let mut sign_neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let at = self.peek().map(|_| self.pos).unwrap_or(self.pos);
            let term = self.term(sign_neg)?;
            acc = self.combine(acc, term, at)?;
            if self.eat(b'+') {
                sign_neg = false;
            } else if self.eat(b'-') {
                sign_neg = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn combine(&self, acc: Expr, term: Expr, at: usize) -> PResult<Expr> {
        Ok(match (acc, term) {
            (acc, Expr::Zero) => acc,
            (Expr::Zero, t) => t,
            (Expr::Algebra(a), Expr::Algebra(b)) => Expr::Algebra(a + b),
            (Expr::Witt(a), Expr::Witt(b)) => Expr::Witt(a + b),
            (Expr::Module(a), Expr::Module(b)) => Expr::Module(a + b),
            (acc, t) => {
                return self.err(
                    at,
                    format!(
                        "cannot add a {} to a {}",
                        t.kind().expect("nonzero"),
                        acc.kind().expect("nonzero")
                    ),
                )
            }
        })
    }

    /// `term := [coef ['*']] factor (['*'] factor)* | coef`
    fn term(&mut self, negate: bool) -> PResult<Expr> {
        let mut coeff: Q = Q::from(1u32);
        let mut has_coeff = false;
        if self.peek().is_some_and(|b| b.is_ascii_digit()) {
            coeff = self.coefficient()?;
            has_coeff = true;
        }
        if negate {
            coeff = -coeff;
        }
        let mut alpha: Option<GroupElement> = None;
        let mut idx: Option<MultiIndex> = None;
        let mut tail = Tail::None;
        let mut factors = 0;
        loop {
            let star = self.eat(b'*');
            let at = self.pos;
            let Some(b) = self.peek() else {
                if star {
                    return Err(self.unexpected());
                }
                break;
            };
            if !matches!(b, b'x' | b't' | b'd' | b'D' | b'v') {
                if star || (!has_coeff && factors == 0) {
                    return self.err(at, format!("expected a factor, {}", self.unexpected().message));
                }
                break;
            }
            if !matches!(tail, Tail::None) {
                return self.err(at, "nothing may follow a d<p>, D(..) or v{..} factor");
            }
            self.pos += 1;
            match b {
                b'x' => {
                    if alpha.is_some() {
                        return self.err(at, "repeated x{..} factor");
                    }
                    alpha = Some(self.group_element(at)?);
                }
                b't' => {
                    if idx.is_some() {
                        return self.err(at, "repeated t[..] factor");
                    }
                    idx = Some(self.multi_index(at)?);
                }
                b'd' => {
                    self.skip_ws();
                    tail = Tail::Dir(self.direction()?);
                }
                b'D' => tail = Tail::DOp(self.d_op(at)?),
                _ => {
                    if alpha.is_some() || idx.is_some() {
                        return self.err(at, "a module vector v{..} cannot carry x{..} or t[..] factors");
                    }
                    let beta = self.group_element(at)?;
                    let j = if self.peek() == Some(b'[') {
                        self.multi_index(at)?
                    } else {
                        self.space.zero_index()
                    };
                    tail = Tail::Vector(BasisVector::new(beta, j));
                }
            }
            factors += 1;
        }
        let mono = Monomial::new(
            alpha.unwrap_or_else(|| self.space.zero_group()),
            idx.unwrap_or_else(|| self.space.zero_index()),
        );
        let expr = match tail {
            Tail::None if factors == 0 && coeff == 0u32 => Expr::Zero,
            Tail::None => Expr::Algebra(LinComb::term(mono, coeff)),
            Tail::Dir(p) => Expr::Witt(LinComb::term(WittTerm::new(mono, p), coeff)),
            Tail::DOp(w) => Expr::Witt(
                w.iter()
                    .map(|(t, c)| (WittTerm::new(mono.mul(&t.mono), t.dir), c * &coeff))
                    .collect(),
            ),
            Tail::Vector(b) => Expr::Module(LinComb::term(b, coeff)),
        };
        Ok(expr)
    }

    /// `D(p, q; u)` after the `D`.
    fn d_op(&mut self, at: usize) -> PResult<WittElement> {
        self.expect(b'(')?;
        let p = self.direction()?;
        self.expect(b',')?;
        let q = self.direction()?;
        self.expect(b';')?;
        let inner_at = self.peek().map(|_| self.pos).unwrap_or(self.pos);
        let u = match self.sum()? {
            Expr::Zero => LinComb::zero(),
            Expr::Algebra(a) => a,
            other => {
                return self.err(
                    inner_at,
                    format!("D(p,q; u) needs an algebra element u, found {}", other.kind().expect("nonzero")),
                )
            }
        };
        self.expect(b')')?;
        self.space.d_op(p, q, &u, self.rho).or_else(|e| self.err(at, e.to_string()))
    }
}
