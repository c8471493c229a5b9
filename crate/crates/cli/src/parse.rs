//! Text grammars: complex structure equations (`dw3 = w12 + 2*w1c2`),
//! Hermitian metric records (`r=1, s=2, u=1/2+1/3*i`), plus emitters
//! that round-trip through the parsers for exact inputs.

use std::collections::BTreeMap;
use std::fmt;

use nilherm_core::{rat, Form, HermitianMetric, Rational, Scalar, StructureEquations};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational),
    ImagUnit,
    /// ω-word letters, negative for barred indices.
    Word(Vec<i8>),
    /// `dwJ` on the left of an equation.
    Dw(u8),
    Ident(char),
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    Eq,
    Sep,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(src: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let (mut line, mut col) = (1usize, 1usize);
    let mut i = 0usize;
    let err = |line, col, m: &str| ParseError {
        line,
        column: col,
        message: m.to_string(),
    };
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        let mut push = |tok: Tok| {
            out.push(Spanned {
                tok,
                line: l0,
                column: c0,
            })
        };
        match c {
            '\n' => {
                push(Tok::Sep);
                line += 1;
                col = 1;
                i += 1;
                continue;
            }
            ' ' | '\t' | '\r' => {}
            ';' | ',' => push(Tok::Sep),
            '+' => push(Tok::Plus),
            '-' => push(Tok::Minus),
            '*' => push(Tok::Star),
            '/' => push(Tok::Slash),
            '(' => push(Tok::LParen),
            ')' => push(Tok::RParen),
            '=' => push(Tok::Eq),
            'i' => push(Tok::ImagUnit),
            'd' if chars.get(i + 1) == Some(&'w') => {
                let d = chars
                    .get(i + 2)
                    .and_then(|c| c.to_digit(10))
                    .ok_or_else(|| err(l0, c0 + 2, "expected index after 'dw'"))?;
                if d == 0 {
                    return Err(err(l0, c0 + 2, "indices are 1-based"));
                }
                push(Tok::Dw(d as u8));
                i += 3;
                col += 3;
                continue;
            }
            'w' => {
                let mut letters = Vec::new();
                let mut j = i + 1;
                loop {
                    match chars.get(j) {
                        Some('c') => {
                            let d = chars
                                .get(j + 1)
                                .and_then(|c| c.to_digit(10))
                                .ok_or_else(|| {
                                    err(l0, c0 + (j + 1 - i), "expected digit after 'c'")
                                })?;
                            if d == 0 {
                                return Err(err(l0, c0 + (j + 1 - i), "indices are 1-based"));
                            }
                            letters.push(-(d as i8));
                            j += 2;
                        }
                        Some(ch) if ch.is_ascii_digit() => {
                            let d = ch.to_digit(10).unwrap();
                            if d == 0 {
                                return Err(err(l0, c0 + (j - i), "indices are 1-based"));
                            }
                            letters.push(d as i8);
                            j += 1;
                        }
                        _ => break,
                    }
                }
                if letters.is_empty() {
                    return Err(err(l0, c0, "expected indices after 'w'"));
                }
                push(Tok::Word(letters));
                col += j - i;
                i = j;
                continue;
            }
            'r' | 's' | 't' | 'u' | 'v' | 'z' => push(Tok::Ident(c)),
            '0'..='9' => {
                let mut j = i;
                while chars.get(j).is_some_and(|c| c.is_ascii_digit()) {
                    j += 1;
                }
                let whole: i64 = chars[i..j]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| err(l0, c0, "integer literal too large"))?;
                let mut value = rat(whole, 1);
                if chars.get(j) == Some(&'.') {
                    let f0 = j + 1;
                    let mut k = f0;
                    while chars.get(k).is_some_and(|c| c.is_ascii_digit()) {
                        k += 1;
                    }
                    if k == f0 {
                        return Err(err(l0, c0 + (j - i), "expected digits after '.'"));
                    }
                    let frac: i64 = chars[f0..k]
                        .iter()
                        .collect::<String>()
                        .parse()
                        .map_err(|_| err(l0, c0, "decimal literal too large"))?;
                    let scale = 10i64
                        .checked_pow((k - f0) as u32)
                        .ok_or_else(|| err(l0, c0, "decimal literal too large"))?;
                    value += rat(frac, scale);
                    j = k;
                }
                push(Tok::Num(value));
                col += j - i;
                i = j;
                continue;
            }
            _ => return Err(err(l0, c0, &format!("unexpected character '{c}'"))),
        }
        i += 1;
        col += 1;
    }
    Ok(out)
}

/// Recursive-descent evaluator over forms; scalars are 0-forms.
struct Parser<'a> {
    toks: &'a [Spanned],
    pos: usize,
    n: u8,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .or_else(|| self.toks.last())
            .map_or((1, 1), |s| (s.line, s.column))
    }

    fn fail(&self, message: &str) -> ParseError {
        let (line, column) = self.here();
        ParseError {
            line,
            column,
            message: message.to_string(),
        }
    }

    fn expr(&mut self) -> Result<Form, ParseError> {
        let mut acc = self.product()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.product()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.product()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<Form, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    acc = acc
                        .checked_wedge(&rhs)
                        .map_err(|e| self.fail(&e.to_string()))?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    let c = self.as_scalar(&rhs)?;
                    if c.is_zero() {
                        return Err(self.fail("division by zero"));
                    }
                    acc = acc.scale(&c.inv());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Form, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(self.factor()?.neg())
            }
            Some(Tok::Num(r)) => {
                self.pos += 1;
                Ok(Form::scalar(self.n, Scalar::exact_re(r)))
            }
            Some(Tok::ImagUnit) => {
                self.pos += 1;
                Ok(Form::scalar(self.n, Scalar::i()))
            }
            Some(Tok::Word(letters)) => {
                self.pos += 1;
                if letters.iter().any(|l| l.unsigned_abs() > self.n) {
                    return Err(self.fail("index exceeds dimension"));
                }
                let f = Form::word(self.n, &letters, Scalar::one());
                if f.is_zero() {
                    return Err(self.fail("repeated index in word"));
                }
                Ok(f)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.fail("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(self.fail("expected a term")),
        }
    }

    fn as_scalar(&self, f: &Form) -> Result<Scalar, ParseError> {
        if f.is_zero() || f.degrees() == vec![0] {
            Ok(f.coeff_of(&[]))
        } else {
            Err(self.fail("expected a scalar value"))
        }
    }
}

/// Parse `dw1 = 0; dw2 = w1c1; ...` into structure equations.
/// Statements may be separated by `;`, `,`, or newlines; omitted dwJ
/// default to zero; the dimension is the largest index mentioned.
pub fn parse_equations(src: &str) -> Result<StructureEquations, ParseError> {
    let toks = lex(src)?;
    let mut n = 0u8;
    for s in &toks {
        match &s.tok {
            Tok::Dw(j) => n = n.max(*j),
            Tok::Word(letters) => {
                for l in letters {
                    n = n.max(l.unsigned_abs());
                }
            }
            _ => {}
        }
    }
    if n == 0 {
        return Err(ParseError {
            line: 1,
            column: 1,
            message: "no equations found".to_string(),
        });
    }
    let mut mu = vec![Form::zero(n); n as usize];
    let mut seen = vec![false; n as usize];
    let statements = toks.split(|s| s.tok == Tok::Sep);
    for stmt in statements {
        if stmt.is_empty() {
            continue;
        }
        let mut p = Parser { toks: stmt, pos: 0, n };
        let j = match p.peek() {
            Some(Tok::Dw(j)) => *j,
            _ => return Err(p.fail("expected 'dwJ'")),
        };
        p.pos += 1;
        if p.peek() != Some(&Tok::Eq) {
            return Err(p.fail("expected '='"));
        }
        p.pos += 1;
        let rhs = p.expr()?;
        if p.pos != stmt.len() {
            return Err(p.fail("trailing input"));
        }
        if seen[(j - 1) as usize] {
            return Err(p.fail(&format!("duplicate equation for dw{j}")));
        }
        seen[(j - 1) as usize] = true;
        mu[(j - 1) as usize] = rhs;
    }
    StructureEquations::new(n, mu).map_err(|e| ParseError {
        line: 1,
        column: 1,
        message: e.to_string(),
    })
}

/// Parse `r=1, s=2, t=1, u=i, v=0, z=1/2+1/3*i`. Dimension 3 when any
/// of t, v, z appears, otherwise 2; off-diagonal entries default to 0.
pub fn parse_metric(src: &str) -> Result<HermitianMetric, ParseError> {
    let toks = lex(src)?;
    let mut entries: BTreeMap<char, Scalar> = BTreeMap::new();
    for stmt in toks.split(|s| s.tok == Tok::Sep) {
        if stmt.is_empty() {
            continue;
        }
        let mut p = Parser { toks: stmt, pos: 0, n: 1 };
        let key = match p.peek() {
            Some(Tok::Ident(c)) => *c,
            _ => return Err(p.fail("expected one of r, s, t, u, v, z")),
        };
        p.pos += 1;
        if p.peek() != Some(&Tok::Eq) {
            return Err(p.fail("expected '='"));
        }
        p.pos += 1;
        let rhs = p.expr()?;
        if p.pos != stmt.len() {
            return Err(p.fail("trailing input"));
        }
        let value = p.as_scalar(&rhs)?;
        if entries.insert(key, value).is_some() {
            return Err(p.fail(&format!("duplicate entry '{key}'")));
        }
    }
    let dim3 = ['t', 'v', 'z'].iter().any(|k| entries.contains_key(k));
    let get = |k: char| entries.get(&k).cloned().unwrap_or_else(Scalar::zero);
    let missing = |k: char| ParseError {
        line: 1,
        column: 1,
        message: format!("missing diagonal entry '{k}'"),
    };
    for k in if dim3 { &['r', 's', 't'][..] } else { &['r', 's'][..] } {
        if !entries.contains_key(k) {
            return Err(missing(*k));
        }
    }
    let built = if dim3 {
        HermitianMetric::new3(get('r'), get('s'), get('t'), get('u'), get('v'), get('z'))
    } else {
        HermitianMetric::new2(get('r'), get('s'), get('u'))
    };
    built.map_err(|e| ParseError {
        line: 1,
        column: 1,
        message: e.to_string(),
    })
}

fn emit_word(letters: impl Iterator<Item = i8>) -> String {
    let mut s = String::from("w");
    for l in letters {
        if l < 0 {
            s.push('c');
        }
        s.push_str(&l.unsigned_abs().to_string());
    }
    s
}

fn emit_coeff(c: &Scalar) -> String {
    let both = !c.re_part().is_zero() && !c.im_part().is_zero();
    if both {
        format!("({c})")
    } else {
        c.to_string()
    }
}

pub fn emit_form(f: &Form) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (w, c) in f.terms() {
        let word = emit_word(
            w.0.iter()
                .map(|l| if l.barred { -(l.idx as i8) } else { l.idx as i8 }),
        );
        if *c == Scalar::one() {
            parts.push(word);
        } else {
            parts.push(format!("{}*{}", emit_coeff(c), word));
        }
    }
    parts.join(" + ")
}

pub fn emit_equations(eqs: &StructureEquations) -> String {
    (1..=eqs.dimension())
        .map(|j| format!("dw{} = {}", j, emit_form(eqs.mu(j))))
        .collect::<Vec<_>>()
        .join("; ")
}

pub fn emit_metric(g: &HermitianMetric) -> String {
    let mut parts = Vec::new();
    let names = if g.dimension() == 2 {
        vec![('r', g.diag(1).clone()), ('s', g.diag(2).clone()), ('u', g.off(1, 2))]
    } else {
        vec![
            ('r', g.diag(1).clone()),
            ('s', g.diag(2).clone()),
            ('t', g.diag(3).clone()),
            ('u', g.off(1, 2)),
            ('v', g.off(2, 3)),
            ('z', g.off(1, 3)),
        ]
    };
    for (k, v) in names {
        parts.push(format!("{k}={v}"));
    }
    parts.join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equation_example_parses() {
        let eqs = parse_equations("dw3 = w12 + w1c2 + 2*w2c1").unwrap();
        assert_eq!(eqs.dimension(), 3);
        assert!(eqs.mu(1).is_zero());
        let mu3 = eqs.mu(3);
        assert_eq!(mu3.coeff_of(&[1, 2]), Scalar::one());
        assert_eq!(mu3.coeff_of(&[1, -2]), Scalar::one());
        assert_eq!(mu3.coeff_of(&[2, -1]), Scalar::from_int(2));
    }

    #[test]
    fn coefficients_support_rationals_decimals_and_parens() {
        let eqs =
            parse_equations("dw2 = 0.5*w1c1; dw3 = (1/2+1/3*i)*w12 - i*w1c2").unwrap();
        assert_eq!(eqs.mu(2).coeff_of(&[1, -1]), Scalar::from_ratio(1, 2));
        assert_eq!(
            eqs.mu(3).coeff_of(&[1, 2]),
            Scalar::exact(rat(1, 2), rat(1, 3))
        );
        assert_eq!(eqs.mu(3).coeff_of(&[1, -2]), -Scalar::i());
    }

    #[test]
    fn errors_carry_line_and_column() {
        let e = parse_equations("dw2 = w1c1\ndw3 = w12 + @").unwrap_err();
        assert_eq!((e.line, e.column), (2, 13));
        let e = parse_equations("dw2 = w11").unwrap_err();
        assert_eq!(e.line, 1);
        let e = parse_metric("r=1, s=").unwrap_err();
        assert_eq!(e.line, 1);
    }

    #[test]
    fn metric_record_parses_and_round_trips() {
        let g = parse_metric("r=1, s=1, t=1, u=0, v=0, z=1/2+1/3*i").unwrap();
        assert_eq!(g.dimension(), 3);
        assert_eq!(g.off(1, 3), Scalar::exact(rat(1, 2), rat(1, 3)));
        assert_eq!(parse_metric(&emit_metric(&g)).unwrap(), g);
        let g2 = parse_metric("r=2, s=1, u=-i").unwrap();
        assert_eq!(g2.dimension(), 2);
        assert_eq!(parse_metric(&emit_metric(&g2)).unwrap(), g2);
    }

    #[test]
    fn equations_round_trip() {
        let srcs = [
            "dw2 = w1c1; dw3 = w12 + (1/2-2*i)*w1c2 + 2*w2c1",
            "dw1 = 0; dw2 = w1c1",
            "dw3 = -1*w12 + -1/3*w2c2",
        ];
        for src in srcs {
            let eqs = parse_equations(src).unwrap();
            assert_eq!(parse_equations(&emit_equations(&eqs)).unwrap(), eqs);
        }
    }
}
