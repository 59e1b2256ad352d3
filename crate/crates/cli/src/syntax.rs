//! Line lexer for bundle files.
//!
//! A line is a key, a colon, and a short sequence of names and the
//! punctuation `, = [ ] : ->`. Names are bare when they avoid whitespace,
//! the characters `,=[]:"#` and the sequence `->`; otherwise they are
//! double-quoted with `\"` and `\\` escapes. `#` starts a comment outside
//! quotes.

use crate::bundle::BundleError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Name(String),
    Punct(char),
    Arrow,
}

/// A token with its 1-based column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spanned {
    pub tok: Tok,
    pub col: usize,
}

const SPECIAL: &[char] = &[',', '=', '[', ']', ':', '"', '#'];

pub fn needs_quotes(name: &str) -> bool {
    name.is_empty()
        || name == "->"
        || name.contains("->")
        || name.chars().any(|c| c.is_whitespace() || SPECIAL.contains(&c))
}

pub fn quote(name: &str) -> String {
    if !needs_quotes(name) {
        return name.to_string();
    }
    let mut out = String::with_capacity(name.len() + 2);
    out.push('"');
    for c in name.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

pub fn lex_line(line: &str, lineno: usize) -> Result<Vec<Spanned>, BundleError> {
    let chars: Vec<char> = line.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |col: usize, message: String| BundleError::Parse {
        line: lineno,
        col,
        message,
    };
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c == '#' {
            break;
        } else if c == '"' {
            let mut s = String::new();
            i += 1;
            loop {
                match chars.get(i) {
                    None => return Err(err(col, "unterminated quoted name".into())),
                    Some('"') => break,
                    Some('\\') => match chars.get(i + 1) {
                        Some(&e @ ('"' | '\\')) => {
                            s.push(e);
                            i += 2;
                        }
                        _ => return Err(err(i + 1, "unknown escape in quoted name".into())),
                    },
                    Some(&ch) => {
                        s.push(ch);
                        i += 1;
                    }
                }
            }
            i += 1;
            out.push(Spanned { tok: Tok::Name(s), col });
        } else if c == '-' && chars.get(i + 1) == Some(&'>') {
            out.push(Spanned { tok: Tok::Arrow, col });
            i += 2;
        } else if SPECIAL.contains(&c) {
            out.push(Spanned {
                tok: Tok::Punct(c),
                col,
            });
            i += 1;
        } else {
            let start = i;
            while i < chars.len()
                && !chars[i].is_whitespace()
                && !SPECIAL.contains(&chars[i])
                && !(chars[i] == '-' && chars.get(i + 1) == Some(&'>'))
            {
                i += 1;
            }
            out.push(Spanned {
                tok: Tok::Name(chars[start..i].iter().collect()),
                col,
            });
        }
    }
    Ok(out)
}

/// One element of an entry pattern.
#[derive(Debug, Clone, Copy)]
pub enum Pat {
    Name,
    Punct(char),
    Arrow,
}

/// Matches `toks` against `pat` exactly and returns the names with their
/// columns. `end_col` is where a missing token is reported.
pub fn match_pattern(
    toks: &[Spanned],
    pat: &[Pat],
    lineno: usize,
    end_col: usize,
) -> Result<Vec<(String, usize)>, BundleError> {
    let mut names = Vec::new();
    for (k, p) in pat.iter().enumerate() {
        let Some(t) = toks.get(k) else {
            return Err(BundleError::Parse {
                line: lineno,
                col: end_col,
                message: format!("expected {}", describe(*p)),
            });
        };
        match (p, &t.tok) {
            (Pat::Name, Tok::Name(s)) => names.push((s.clone(), t.col)),
            (Pat::Punct(c), Tok::Punct(d)) if c == d => {}
            (Pat::Arrow, Tok::Arrow) => {}
            _ => {
                return Err(BundleError::Parse {
                    line: lineno,
                    col: t.col,
                    message: format!("expected {}, found {}", describe(*p), show(&t.tok)),
                })
            }
        }
    }
    if let Some(t) = toks.get(pat.len()) {
        return Err(BundleError::Parse {
            line: lineno,
            col: t.col,
            message: format!("unexpected {}", show(&t.tok)),
        });
    }
    Ok(names)
}

fn describe(p: Pat) -> String {
    match p {
        Pat::Name => "a name".into(),
        Pat::Punct(c) => format!("`{c}`"),
        Pat::Arrow => "`->`".into(),
    }
}

fn show(t: &Tok) -> String {
    match t {
        Tok::Name(s) => format!("name {}", quote(s)),
        Tok::Punct(c) => format!("`{c}`"),
        Tok::Arrow => "`->`".into(),
    }
}
