use super::{ExprError, ExprErrorKind};

#[derive(Debug, Clone, PartialEq)]
pub enum TokenKind {
    /// `e` (index 0, the identity) or `e<k>`.
    Generator(u32),
    Number(f64),
    /// `i` or `<number>i`; carries the coefficient of `i`.
    Imaginary(f64),
    Omega,
    Identifier(String),
    Operator(char),
    LParen,
    RParen,
    Comma,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub kind: TokenKind,
    pub lexeme: String,
    /// Byte offset of the first character.
    pub pos: usize,
}

pub fn tokenize(input: &str) -> Result<Vec<Token>, ExprError> {
    let bytes = input.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let kind = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' | b'-' | b'*' | b'^' => {
                i += 1;
                TokenKind::Operator(c as char)
            }
            b'(' => {
                i += 1;
                TokenKind::LParen
            }
            b')' => {
                i += 1;
                TokenKind::RParen
            }
            b',' => {
                i += 1;
                TokenKind::Comma
            }
            b'0'..=b'9' | b'.' => {
                i = scan_number(bytes, i);
                let text = &input[start..i];
                let value: f64 = text.parse().map_err(|_| {
                    ExprError::new(ExprErrorKind::Lex, start, format!("malformed number '{text}'"))
                })?;
                if bytes.get(i) == Some(&b'i') && !bytes.get(i + 1).is_some_and(is_ident_char) {
                    i += 1;
                    TokenKind::Imaginary(value)
                } else {
                    TokenKind::Number(value)
                }
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && is_ident_char(&bytes[i]) {
                    i += 1;
                }
                word_kind(&input[start..i], start)?
            }
            _ => {
                let ch = input[start..].chars().next().unwrap_or('?');
                return Err(ExprError::new(
                    ExprErrorKind::Lex,
                    start,
                    format!("unexpected character '{ch}'"),
                ));
            }
        };
        tokens.push(Token {
            kind,
            lexeme: input[start..i].to_string(),
            pos: start,
        });
    }
    Ok(tokens)
}

fn is_ident_char(c: &u8) -> bool {
    c.is_ascii_alphanumeric() || *c == b'_'
}

/// digits [. digits] [(e|E) [+-] digits]; the exponent is only taken when
/// at least one digit follows it, so `2*e1` and `2e1` lex differently.
fn scan_number(bytes: &[u8], mut i: usize) -> usize {
    let digits = |mut i: usize| {
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        i
    };
    i = digits(i);
    if bytes.get(i) == Some(&b'.') {
        i = digits(i + 1);
    }
    if matches!(bytes.get(i), Some(b'e' | b'E')) {
        let mut j = i + 1;
        if matches!(bytes.get(j), Some(b'+' | b'-')) {
            j += 1;
        }
        if bytes.get(j).is_some_and(u8::is_ascii_digit) {
            i = digits(j);
        }
    }
    i
}

fn word_kind(word: &str, pos: usize) -> Result<TokenKind, ExprError> {
    Ok(match word {
        "e" => TokenKind::Generator(0),
        "omega" | "w" => TokenKind::Omega,
        "i" => TokenKind::Imaginary(1.0),
        _ if word.len() > 1 && word.starts_with('e') && word[1..].bytes().all(|b| b.is_ascii_digit()) => {
            let k: u32 = word[1..].parse().map_err(|_| {
                ExprError::new(ExprErrorKind::Lex, pos, format!("generator subscript too large in '{word}'"))
            })?;
            if k == 0 {
                return Err(ExprError::new(ExprErrorKind::GeneratorRange, pos, "generators are numbered from 1"));
            }
            TokenKind::Generator(k)
        }
        _ => TokenKind::Identifier(word.to_string()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(s: &str) -> Vec<TokenKind> {
        tokenize(s).unwrap().into_iter().map(|t| t.kind).collect()
    }

    #[test]
    fn numbers_and_generators() {
        use TokenKind::*;
        assert_eq!(kinds("2e1"), [Number(20.0)]);
        assert_eq!(kinds("2*e1"), [Number(2.0), Operator('*'), Generator(1)]);
        assert_eq!(kinds("1.5e-3i"), [Imaginary(1.5e-3)]);
        assert_eq!(kinds("3i"), [Imaginary(3.0)]);
        assert_eq!(kinds(".25"), [Number(0.25)]);
        assert_eq!(kinds("e12 e w omega i"), [Generator(12), Generator(0), Omega, Omega, Imaginary(1.0)]);
        assert_eq!(kinds("3inv"), [Number(3.0), Identifier("inv".into())]);
        assert_eq!(kinds("1e"), [Number(1.0), Generator(0)]);
    }

    #[test]
    fn positions_increase() {
        let toks = tokenize(" herm( e1 ,2)").unwrap();
        let pos: Vec<usize> = toks.iter().map(|t| t.pos).collect();
        assert_eq!(pos, [1, 5, 7, 10, 11, 12]);
        assert_eq!(toks[2].lexeme, "e1");
    }

    #[test]
    fn lex_errors() {
        let err = tokenize("e1 $ e2").unwrap_err();
        assert_eq!((err.kind, err.position), (ExprErrorKind::Lex, 3));
        assert_eq!(tokenize("e0").unwrap_err().kind, ExprErrorKind::GeneratorRange);
        assert_eq!(tokenize(".").unwrap_err().kind, ExprErrorKind::Lex);
        assert_eq!(tokenize("é").unwrap_err().position, 0);
        assert_eq!(tokenize("e99999999999").unwrap_err().kind, ExprErrorKind::Lex);
    }
}
