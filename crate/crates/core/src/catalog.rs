//! The sixteen-plus-two catalog of six dimensional nilpotent Lie
//! algebras admitting complex structures, in the usual dual shorthand:
//! `(0,0,0,0,12,34)` lists dα^k for k = 1..6, each token a signed sum
//! of index pairs.

use std::fmt;

use crate::realform::RealForm;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CatalogTag {
    H1,
    H2,
    H3,
    H4,
    H5,
    H6,
    H7,
    H8,
    H9,
    H10,
    H11,
    H12,
    H13,
    H14,
    H15,
    H16,
    H19Minus,
    H26Plus,
}

pub const ALL_TAGS: [CatalogTag; 18] = [
    CatalogTag::H1,
    CatalogTag::H2,
    CatalogTag::H3,
    CatalogTag::H4,
    CatalogTag::H5,
    CatalogTag::H6,
    CatalogTag::H7,
    CatalogTag::H8,
    CatalogTag::H9,
    CatalogTag::H10,
    CatalogTag::H11,
    CatalogTag::H12,
    CatalogTag::H13,
    CatalogTag::H14,
    CatalogTag::H15,
    CatalogTag::H16,
    CatalogTag::H19Minus,
    CatalogTag::H26Plus,
];

impl CatalogTag {
    pub fn shorthand(self) -> &'static str {
        match self {
            CatalogTag::H1 => "(0,0,0,0,0,0)",
            CatalogTag::H2 => "(0,0,0,0,12,34)",
            CatalogTag::H3 => "(0,0,0,0,0,12+34)",
            CatalogTag::H4 => "(0,0,0,0,12,14+23)",
            CatalogTag::H5 => "(0,0,0,0,13+42,14+23)",
            CatalogTag::H6 => "(0,0,0,0,12,13)",
            CatalogTag::H7 => "(0,0,0,12,13,23)",
            CatalogTag::H8 => "(0,0,0,0,0,12)",
            CatalogTag::H9 => "(0,0,0,0,12,14+25)",
            CatalogTag::H10 => "(0,0,0,12,13,14)",
            CatalogTag::H11 => "(0,0,0,12,13,14+23)",
            CatalogTag::H12 => "(0,0,0,12,13,24)",
            CatalogTag::H13 => "(0,0,0,12,13+14,24)",
            CatalogTag::H14 => "(0,0,0,12,14,13+42)",
            CatalogTag::H15 => "(0,0,0,12,13+42,14+23)",
            CatalogTag::H16 => "(0,0,0,12,14,24)",
            CatalogTag::H19Minus => "(0,0,0,12,23,14-35)",
            CatalogTag::H26Plus => "(0,0,12,13,23,14+25)",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CatalogTag::H1 => "h1",
            CatalogTag::H2 => "h2",
            CatalogTag::H3 => "h3",
            CatalogTag::H4 => "h4",
            CatalogTag::H5 => "h5",
            CatalogTag::H6 => "h6",
            CatalogTag::H7 => "h7",
            CatalogTag::H8 => "h8",
            CatalogTag::H9 => "h9",
            CatalogTag::H10 => "h10",
            CatalogTag::H11 => "h11",
            CatalogTag::H12 => "h12",
            CatalogTag::H13 => "h13",
            CatalogTag::H14 => "h14",
            CatalogTag::H15 => "h15",
            CatalogTag::H16 => "h16",
            CatalogTag::H19Minus => "h19-",
            CatalogTag::H26Plus => "h26+",
        }
    }

    pub fn from_name(s: &str) -> Option<CatalogTag> {
        ALL_TAGS.into_iter().find(|t| t.name() == s)
    }

    /// The dα^k differentials of this catalog algebra.
    pub fn differentials(self) -> Vec<RealForm> {
        parse_shorthand(self.shorthand()).expect("catalog shorthand is well-formed")
    }
}

impl fmt::Display for CatalogTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShorthandError {
    /// 1-based column in the input string.
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ShorthandError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for ShorthandError {}

/// Parse `(0,0,0,0,12,34)`-style shorthand into the list of dα^k.
/// The number of tokens fixes the dimension.
pub fn parse_shorthand(s: &str) -> Result<Vec<RealForm>, ShorthandError> {
    let err = |column: usize, message: &str| ShorthandError {
        column,
        message: message.to_string(),
    };
    let bytes: Vec<(usize, char)> = s.char_indices().map(|(i, c)| (i + 1, c)).collect();
    let mut pos = 0usize;
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].1.is_whitespace() {
            *pos += 1;
        }
    };
    skip_ws(&mut pos);
    if pos >= bytes.len() || bytes[pos].1 != '(' {
        return Err(err(bytes.get(pos).map_or(s.len() + 1, |b| b.0), "expected '('"));
    }
    pos += 1;
    let mut tokens: Vec<Vec<(i8, u8, u8)>> = Vec::new(); // (sign, i, j)
    loop {
        skip_ws(&mut pos);
        // one token: "0" or pair(±pair)*
        let mut pairs = Vec::new();
        if pos < bytes.len() && bytes[pos].1 == '0' {
            pos += 1;
        } else {
            let mut sign = 1i8;
            loop {
                skip_ws(&mut pos);
                let col = bytes.get(pos).map_or(s.len() + 1, |b| b.0);
                let i = bytes
                    .get(pos)
                    .and_then(|b| b.1.to_digit(10))
                    .ok_or_else(|| err(col, "expected digit"))? as u8;
                let j = bytes
                    .get(pos + 1)
                    .and_then(|b| b.1.to_digit(10))
                    .ok_or_else(|| err(col + 1, "expected second digit of index pair"))?
                    as u8;
                if i == 0 || j == 0 {
                    return Err(err(col, "indices are 1-based"));
                }
                pairs.push((sign, i, j));
                pos += 2;
                skip_ws(&mut pos);
                match bytes.get(pos).map(|b| b.1) {
                    Some('+') => {
                        sign = 1;
                        pos += 1;
                    }
                    Some('-') => {
                        sign = -1;
                        pos += 1;
                    }
                    _ => break,
                }
            }
        }
        tokens.push(pairs);
        skip_ws(&mut pos);
        match bytes.get(pos).map(|b| b.1) {
            Some(',') => {
                pos += 1;
            }
            Some(')') => {
                pos += 1;
                break;
            }
            _ => {
                return Err(err(
                    bytes.get(pos).map_or(s.len() + 1, |b| b.0),
                    "expected ',' or ')'",
                ))
            }
        }
    }
    skip_ws(&mut pos);
    if pos < bytes.len() {
        return Err(err(bytes[pos].0, "trailing input after ')'"));
    }
    let m = tokens.len() as u8;
    let mut out = Vec::with_capacity(tokens.len());
    for pairs in tokens {
        let mut f = RealForm::zero(m);
        for (sign, i, j) in pairs {
            if i > m || j > m {
                return Err(err(1, "index exceeds dimension"));
            }
            f = f.add(&RealForm::term(m, &[i, j], Scalar::from_int(sign as i64)));
        }
        out.push(f);
    }
    Ok(out)
}

/// Emit shorthand from a differential list (inverse of the parser for
/// integer-coefficient inputs with unit coefficients).
pub fn emit_shorthand(dalpha: &[RealForm]) -> String {
    let mut tokens = Vec::with_capacity(dalpha.len());
    for f in dalpha {
        if f.is_zero() {
            tokens.push("0".to_string());
            continue;
        }
        let mut tok = String::new();
        for (w, c) in f.terms() {
            let neg = c.real_sign() < 0;
            if tok.is_empty() {
                if neg {
                    tok.push('-');
                }
            } else {
                tok.push(if neg { '-' } else { '+' });
            }
            for i in w {
                tok.push_str(&i.to_string());
            }
        }
        tokens.push(tok);
    }
    format!("({})", tokens.join(","))
}
