//! The `.lie` text format.
//!
//! ```text
//! algebra sl2c
//! dim 3
//! d f1 = f2^f3
//! d f2 = -1*f1^f3
//! d f3 = f1^f2          # comment
//! metric identity
//! ```
//!
//! Terms are `[COEF *] MONO`, joined by `+` / `-`. `MONO` is a `^`-joined
//! product of `fJ` (holomorphic) and `FJ` (conjugate) generators, `COEF` is
//! `A`, `Bi` or `(A+Bi)` with rational `A`, `B`. Missing `d fK` lines mean
//! `dφ^k = 0`. `metric hermitian` is followed by `n` rows of `n` scalars.

use num::One;

use super::StructureEquations;
use crate::error::{Error, Result};
use crate::exterior::{Factor, Form};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MetricSpec {
    Identity,
    Hermitian(Matrix),
}

#[derive(Clone, Debug)]
pub struct LieDocument {
    pub equations: StructureEquations,
    pub metric: Option<MetricSpec>,
}

/// Parses a `.lie` document, ignoring any metric block.
pub fn parse(text: &str) -> Result<StructureEquations> {
    parse_document(text).map(|d| d.equations)
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(k) => &line[..k],
        None => line,
    }
}

pub fn parse_document(text: &str) -> Result<LieDocument> {
    let mut name: Option<String> = None;
    let mut n: Option<usize> = None;
    let mut dgen: Vec<Option<Form>> = Vec::new();
    let mut metric: Option<MetricSpec> = None;
    let mut pending_rows: Option<(usize, Vec<Vec<Scalar>>)> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let body = strip_comment(raw);
        let trimmed = body.trim();
        if trimmed.is_empty() {
            continue;
        }
        let indent = body.len() - body.trim_start().len();

        if let Some((_, rows)) = pending_rows.as_mut() {
            let dim = n.expect("metric follows dim");
            let row = parse_scalar_row(trimmed, line_no, indent + 1)?;
            if row.len() != dim {
                return Err(syntax(
                    line_no,
                    indent + 1,
                    format!("metric row has {} entries, expected {dim}", row.len()),
                ));
            }
            rows.push(row);
            if rows.len() == dim {
                let (_, rows) = pending_rows.take().unwrap();
                metric = Some(MetricSpec::Hermitian(Matrix::from_rows(rows)));
            }
            continue;
        }

        let (keyword, rest) = match trimmed.find(char::is_whitespace) {
            Some(k) => (&trimmed[..k], trimmed[k..].trim()),
            None => (trimmed, ""),
        };
        let rest_col = indent + 1 + (trimmed.len() - trimmed[keyword.len()..].trim_start().len());
        match keyword {
            "algebra" => {
                if rest.is_empty() || rest.contains(char::is_whitespace) {
                    return Err(syntax(line_no, rest_col, "expected `algebra NAME`"));
                }
                name = Some(rest.to_string());
            }
            "dim" => {
                if name.is_none() {
                    return Err(syntax(line_no, indent + 1, "`dim` must follow `algebra NAME`"));
                }
                let v: usize = rest
                    .parse()
                    .map_err(|_| syntax(line_no, rest_col, format!("invalid dimension `{rest}`")))?;
                if v == 0 || v > crate::exterior::MAX_N {
                    return Err(syntax(line_no, rest_col, format!("dimension {v} unsupported")));
                }
                n = Some(v);
                dgen = vec![None; v];
            }
            "d" => {
                let dim = n.ok_or_else(|| syntax(line_no, indent + 1, "`d` line before `dim`"))?;
                let (lhs, rhs) = rest
                    .split_once('=')
                    .ok_or_else(|| syntax(line_no, rest_col, "expected `d fK = EXPR`"))?;
                let lhs = lhs.trim();
                let index: usize = lhs
                    .strip_prefix('f')
                    .and_then(|x| x.parse().ok())
                    .ok_or_else(|| syntax(line_no, rest_col, format!("expected generator `fK`, got `{lhs}`")))?;
                if index == 0 || index > dim {
                    return Err(Error::IndexOutOfRange {
                        line: line_no,
                        index,
                        n: dim,
                    });
                }
                if dgen[index - 1].is_some() {
                    return Err(Error::DuplicateGenerator { line: line_no, index });
                }
                let eq_pos = raw.find('=').unwrap();
                let form = parse_expr(rhs, dim, line_no, eq_pos + 2)?;
                if !form.is_zero() && form.degree() != Some(2) {
                    return Err(syntax(line_no, eq_pos + 2, "right-hand side must be a 2-form"));
                }
                dgen[index - 1] = Some(form);
            }
            "metric" => {
                let dim = n.ok_or_else(|| syntax(line_no, indent + 1, "`metric` before `dim`"))?;
                match rest {
                    "identity" => metric = Some(MetricSpec::Identity),
                    "hermitian" => pending_rows = Some((line_no, Vec::with_capacity(dim))),
                    _ => {
                        return Err(syntax(
                            line_no,
                            rest_col,
                            "expected `metric identity` or `metric hermitian`",
                        ))
                    }
                }
            }
            other => {
                return Err(syntax(line_no, indent + 1, format!("unknown directive `{other}`")));
            }
        }
    }
    if let Some((line, _)) = pending_rows {
        return Err(syntax(line, 1, "incomplete metric block"));
    }
    let name = name.ok_or_else(|| syntax(1, 1, "missing `algebra NAME` header"))?;
    let n = n.ok_or_else(|| syntax(1, 1, "missing `dim N` header"))?;
    let dgen = dgen.into_iter().map(|f| f.unwrap_or_else(|| Form::zero(n))).collect();
    let equations = StructureEquations::new(name, n, dgen)?;
    Ok(LieDocument { equations, metric })
}

/// Parses a metric given as `identity` or as matrix rows separated by `;`
/// or newlines, entries separated by commas or spaces. `#` starts a comment.
pub fn parse_metric(text: &str, n: usize) -> Result<MetricSpec> {
    if text.trim() == "identity" {
        return Ok(MetricSpec::Identity);
    }
    let mut rows = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        for chunk in strip_comment(line).split(';') {
            let trimmed = chunk.trim();
            if trimmed.is_empty() {
                continue;
            }
            let row = parse_scalar_row(trimmed, idx + 1, 1)?;
            if row.len() != n {
                return Err(syntax(
                    idx + 1,
                    1,
                    format!("metric row has {} entries, expected {n}", row.len()),
                ));
            }
            rows.push(row);
        }
    }
    if rows.len() != n {
        return Err(syntax(1, 1, format!("metric has {} rows, expected {n}", rows.len())));
    }
    Ok(MetricSpec::Hermitian(Matrix::from_rows(rows)))
}

/// Parses a form written in term syntax, e.g. `f2^f3^F2 + 1i*f1^f3^F1`.
pub fn parse_form(text: &str, n: usize) -> Result<Form> {
    parse_expr(text, n, 1, 1)
}

/// Splits a metric row at whitespace outside parentheses.
fn parse_scalar_row(text: &str, line: usize, col0: usize) -> Result<Vec<Scalar>> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start: Option<usize> = None;
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    for (k, &(pos, c)) in chars.iter().enumerate() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            _ => {}
        }
        let sep = (c.is_whitespace() || c == ',') && depth == 0;
        if !sep && start.is_none() {
            start = Some(pos);
        }
        let end = if sep {
            Some(pos)
        } else if k + 1 == chars.len() {
            Some(text.len())
        } else {
            None
        };
        if let (Some(s), Some(e)) = (start, end) {
            let tok: String = text[s..e].chars().filter(|c| !c.is_whitespace()).collect();
            let v = tok
                .parse::<Scalar>()
                .map_err(|_| syntax(line, col0 + s, format!("invalid scalar `{tok}`")))?;
            out.push(v);
            start = None;
        }
    }
    Ok(out)
}

struct Cursor {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col0: usize,
    n: usize,
}

impl Cursor {
    fn new(src: &str, n: usize, line: usize, col0: usize) -> Self {
        Cursor {
            chars: src.chars().collect(),
            pos: 0,
            line,
            col0,
            n,
        }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        syntax(self.line, self.col0 + self.pos, message)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    /// `['-'] digits ['/' digits] ['i']` or a bare `i`.
    fn number(&mut self) -> Result<Scalar> {
        self.skip_ws();
        let start = self.pos;
        let neg = self.eat('-');
        self.skip_ws();
        let mut text = String::new();
        if self.peek() == Some('i') {
            self.pos += 1;
            text.push('i');
        } else {
            let num = self.digits();
            if num.is_empty() {
                self.pos = start;
                return Err(self.err("expected a number"));
            }
            text.push_str(&num);
            if self.peek() == Some('/') {
                self.pos += 1;
                let den = self.digits();
                if den.is_empty() {
                    return Err(self.err("expected a denominator"));
                }
                text.push('/');
                text.push_str(&den);
            }
            if self.peek() == Some('i') {
                self.pos += 1;
                text.push('i');
            }
        }
        let v: Scalar = text.parse().map_err(|_| {
            let e = self.err(format!("invalid number `{text}`"));
            self.pos = start;
            e
        })?;
        Ok(if neg { -v } else { v })
    }

    fn coefficient(&mut self) -> Result<Scalar> {
        self.skip_ws();
        if self.peek() == Some('(') {
            let start = self.pos;
            let close = (self.pos..self.chars.len())
                .find(|&k| self.chars[k] == ')')
                .ok_or_else(|| self.err("unclosed `(`"))?;
            let inner: String = self.chars[start..=close]
                .iter()
                .filter(|c| !c.is_whitespace())
                .collect();
            let v = inner
                .parse::<Scalar>()
                .map_err(|_| self.err(format!("invalid coefficient `{inner}`")))?;
            self.pos = close + 1;
            return Ok(v);
        }
        self.number()
    }

    fn generator(&mut self) -> Result<Factor> {
        self.skip_ws();
        let holo = match self.peek() {
            Some('f') => true,
            Some('F') => false,
            _ => return Err(self.err("expected a generator `fJ` or `FJ`")),
        };
        let at = self.pos;
        self.pos += 1;
        let d = self.digits();
        let index: usize = d.parse().map_err(|_| self.err("expected a generator index"))?;
        if index == 0 || index > self.n {
            self.pos = at;
            return Err(self.err(format!("generator index {index} outside 1..{}", self.n)));
        }
        Ok(if holo { Factor::Holo(index) } else { Factor::Anti(index) })
    }

    fn monomial(&mut self) -> Result<Form> {
        let mut factors = vec![self.generator()?];
        while self.eat('^') {
            factors.push(self.generator()?);
        }
        Ok(Form::from_factors(self.n, &factors))
    }

    fn term(&mut self) -> Result<Form> {
        self.skip_ws();
        match self.peek() {
            Some('f') | Some('F') => self.monomial(),
            Some(_) => {
                let c = self.coefficient()?;
                if self.eat('*') {
                    Ok(self.monomial()?.scale(&c))
                } else {
                    Ok(Form::constant(self.n, c))
                }
            }
            None => Err(self.err("expected a term")),
        }
    }
}

fn parse_expr(text: &str, n: usize, line: usize, col0: usize) -> Result<Form> {
    let mut cur = Cursor::new(text, n, line, col0);
    let mut acc = Form::zero(n);
    cur.skip_ws();
    if cur.peek().is_none() {
        return Err(cur.err("empty expression"));
    }
    let mut sign = Scalar::one();
    if cur.eat('-') {
        sign = -sign;
    } else {
        cur.eat('+');
    }
    loop {
        let t = cur.term()?;
        acc = &acc + &t.scale(&sign);
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some('+') => {
                cur.pos += 1;
                sign = Scalar::one();
            }
            Some('-') => {
                cur.pos += 1;
                sign = -Scalar::one();
            }
            Some(c) => return Err(cur.err(format!("unexpected `{c}`"))),
        }
    }
    Ok(acc)
}
