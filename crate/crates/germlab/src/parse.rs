//! Problem-file and polynomial parsing with line/column diagnostics.
//!
//! Line-oriented format:
//!
//! ```text
//! # comment
//! ring x, y, z;
//! target X, Y, Z;          (optional)
//! icis: x^3 + y^3 - z^2;   (optional)
//! map: x, y, z^3 + x*z + y^2;
//! option seed = 42;
//! ```
//!
//! Polynomials use integers and rationals, named variables, `+ - * ^` and
//! parentheses; implicit multiplication is rejected.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::germ::MapGerm;
use crate::poly::Poly;
use crate::ring::Ring;

#[derive(Debug, Clone, thiserror::Error)]
#[error("line {line}, column {col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

fn perr<T>(line: usize, col: usize, msg: impl Into<String>) -> std::result::Result<T, ParseError> {
    Err(ParseError { line, col, msg: msg.into() })
}

// ---------------------------------------------------------------------------
// Tokens

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    Comma,
    Semi,
    Colon,
    Eq,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> std::result::Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    for (li, raw_line) in text.lines().enumerate() {
        let line = li + 1;
        let body = match raw_line.find('#') {
            Some(i) => &raw_line[..i],
            None => raw_line,
        };
        let chars: Vec<char> = body.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            match c {
                ' ' | '\t' | '\r' => {
                    i += 1;
                }
                '+' => {
                    out.push(Spanned { tok: Tok::Plus, line, col });
                    i += 1;
                }
                '-' => {
                    out.push(Spanned { tok: Tok::Minus, line, col });
                    i += 1;
                }
                '*' => {
                    out.push(Spanned { tok: Tok::Star, line, col });
                    i += 1;
                }
                '^' => {
                    out.push(Spanned { tok: Tok::Caret, line, col });
                    i += 1;
                }
                '/' => {
                    out.push(Spanned { tok: Tok::Slash, line, col });
                    i += 1;
                }
                '(' => {
                    out.push(Spanned { tok: Tok::LParen, line, col });
                    i += 1;
                }
                ')' => {
                    out.push(Spanned { tok: Tok::RParen, line, col });
                    i += 1;
                }
                ',' => {
                    out.push(Spanned { tok: Tok::Comma, line, col });
                    i += 1;
                }
                ';' => {
                    out.push(Spanned { tok: Tok::Semi, line, col });
                    i += 1;
                }
                ':' => {
                    out.push(Spanned { tok: Tok::Colon, line, col });
                    i += 1;
                }
                '=' => {
                    out.push(Spanned { tok: Tok::Eq, line, col });
                    i += 1;
                }
                _ if c.is_ascii_digit() => {
                    let start = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let s: String = chars[start..i].iter().collect();
                    out.push(Spanned { tok: Tok::Int(s.parse().unwrap()), line, col });
                }
                _ if c.is_ascii_alphabetic() || c == '_' => {
                    let start = i;
                    while i < chars.len()
                        && (chars[i].is_ascii_alphanumeric() || chars[i] == '_')
                    {
                        i += 1;
                    }
                    let s: String = chars[start..i].iter().collect();
                    out.push(Spanned { tok: Tok::Ident(s), line, col });
                }
                _ => return perr(line, col, format!("unexpected character `{}`", c)),
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Polynomial expressions

struct PolyParser<'a> {
    toks: &'a [Spanned],
    pos: usize,
    ring: &'a Ring,
}

impl<'a> PolyParser<'a> {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn end_pos(&self) -> (usize, usize) {
        self.toks
            .last()
            .map(|s| (s.line, s.col + 1))
            .unwrap_or((1, 1))
    }

    fn expr(&mut self) -> std::result::Result<Poly, ParseError> {
        // sum of signed products
        let mut negate = false;
        while let Some(s) = self.peek() {
            match s.tok {
                Tok::Minus => {
                    negate = !negate;
                    self.pos += 1;
                }
                Tok::Plus => {
                    self.pos += 1;
                }
                _ => break,
            }
        }
        let mut acc = self.product()?;
        if negate {
            acc = acc.neg();
        }
        while let Some(s) = self.peek() {
            let sign = match s.tok {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.pos += 1;
            let rhs = self.product()?;
            acc = if sign {
                acc.sub(&rhs).expect("same ring")
            } else {
                acc.add(&rhs).expect("same ring")
            };
        }
        Ok(acc)
    }

    fn product(&mut self) -> std::result::Result<Poly, ParseError> {
        let mut acc = self.power()?;
        loop {
            match self.peek().map(|s| s.tok.clone()) {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let rhs = self.power()?;
                    acc = acc.mul(&rhs).expect("same ring");
                }
                // Implicit multiplication is forbidden: an atom directly
                // following an atom is a syntax error, caught by the caller.
                _ => break,
            }
        }
        Ok(acc)
    }

    fn power(&mut self) -> std::result::Result<Poly, ParseError> {
        let base = self.atom()?;
        if let Some(s) = self.peek() {
            if s.tok == Tok::Caret {
                self.pos += 1;
                let (line, col) = self
                    .peek()
                    .map(|s| (s.line, s.col))
                    .unwrap_or_else(|| self.end_pos());
                match self.peek().map(|s| s.tok.clone()) {
                    Some(Tok::Int(n)) => {
                        self.pos += 1;
                        let e: u32 = n
                            .try_into()
                            .map_err(|_| ParseError {
                                line,
                                col,
                                msg: "exponent out of range".into(),
                            })?;
                        return Ok(base.pow(e));
                    }
                    _ => return perr(line, col, "expected an integer exponent after `^`"),
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> std::result::Result<Poly, ParseError> {
        let (line, col) = self
            .peek()
            .map(|s| (s.line, s.col))
            .unwrap_or_else(|| self.end_pos());
        match self.peek().map(|s| s.tok.clone()) {
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match Poly::var(self.ring, &name) {
                    Ok(p) => Ok(p),
                    Err(_) => perr(line, col, format!("unknown identifier `{}`", name)),
                }
            }
            Some(Tok::Int(n)) => {
                self.pos += 1;
                // rational literal: INT / INT
                if self.peek().map(|s| s.tok.clone()) == Some(Tok::Slash) {
                    self.pos += 1;
                    let (l2, c2) = self
                        .peek()
                        .map(|s| (s.line, s.col))
                        .unwrap_or_else(|| self.end_pos());
                    match self.peek().map(|s| s.tok.clone()) {
                        Some(Tok::Int(d)) => {
                            self.pos += 1;
                            if d.is_zero() {
                                return perr(l2, c2, "zero denominator");
                            }
                            Ok(Poly::constant(self.ring, BigRational::new(n, d)))
                        }
                        _ => perr(l2, c2, "expected an integer denominator after `/`"),
                    }
                } else {
                    Ok(Poly::constant(self.ring, BigRational::from(n)))
                }
            }
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(self.atom()?.neg())
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek().map(|s| s.tok.clone()) {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => {
                        let (l, c) = self
                            .peek()
                            .map(|s| (s.line, s.col))
                            .unwrap_or_else(|| self.end_pos());
                        perr(l, c, "expected `)`")
                    }
                }
            }
            Some(tok) => perr(line, col, format!("unexpected token {:?}", tok)),
            None => perr(line, col, "unexpected end of expression"),
        }
    }
}

/// Parse a single polynomial over the given ring.
pub fn parse_poly(ring: &Ring, text: &str) -> Result<Poly> {
    let toks = lex(text).map_err(Error::Parse)?;
    let mut pp = PolyParser { toks: &toks, pos: 0, ring };
    let p = pp.expr().map_err(Error::Parse)?;
    if pp.pos != toks.len() {
        let s = &toks[pp.pos];
        return Err(Error::Parse(ParseError {
            line: s.line,
            col: s.col,
            msg: format!(
                "trailing input at {:?} (implicit multiplication is not allowed)",
                s.tok
            ),
        }));
    }
    Ok(p)
}

// ---------------------------------------------------------------------------
// Problem files

#[derive(Debug, Clone, Default)]
pub struct Options {
    pub seed: Option<u64>,
    pub bound: Option<i64>,
    pub retries: Option<u32>,
    pub tmax: Option<usize>,
    pub jet: Option<u32>,
    pub germ_faithful: bool,
}

/// Parsed problem file: variable lists, equation/map text already resolved to
/// polynomials over a fully local source ring, and options.
#[derive(Debug, Clone)]
pub struct ProblemFile {
    pub source: Ring,
    pub target: Option<Ring>,
    pub icis: Vec<Poly>,
    pub map: Vec<Poly>,
    pub options: Options,
    /// `# expect key=value` and `# run sub` directives, for the corpus runner.
    pub expects: BTreeMap<String, String>,
    pub run: Option<String>,
}

impl ProblemFile {
    /// The map as a germ into the (possibly synthesized) target ring, with
    /// the icis equations attached.
    pub fn map_germ(&self) -> Result<MapGerm> {
        if self.map.is_empty() {
            return Err(Error::Arity("problem file has no `map:` statement".into()));
        }
        let target = self.target_ring()?;
        MapGerm::new(self.source.clone(), target, self.map.clone(), self.icis.clone())
    }

    /// Explicit target, or fresh local names y1..yp.
    pub fn target_ring(&self) -> Result<Ring> {
        if let Some(t) = &self.target {
            if !self.map.is_empty() && t.nvars() != self.map.len() {
                return Err(Error::Arity(format!(
                    "target has {} variables but the map has {} components",
                    t.nvars(),
                    self.map.len()
                )));
            }
            return Ok(t.clone());
        }
        let mut names = Vec::new();
        let mut k = 1;
        while names.len() < self.map.len() {
            let cand = format!("y{}", k);
            k += 1;
            if self.source.var_index(&cand).is_err() {
                names.push(cand);
            }
        }
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        Ring::local(&refs)
    }
}

/// Canonical printer; `parse(print(parse(t)))` equals `parse(t)`.
pub fn print_problem(p: &ProblemFile) -> String {
    let mut out = String::new();
    out.push_str(&format!("ring {};\n", p.source.vars().join(", ")));
    if let Some(t) = &p.target {
        out.push_str(&format!("target {};\n", t.vars().join(", ")));
    }
    if !p.icis.is_empty() {
        let body: Vec<String> = p.icis.iter().map(|q| q.to_string()).collect();
        out.push_str(&format!("icis: {};\n", body.join(", ")));
    }
    if !p.map.is_empty() {
        let body: Vec<String> = p.map.iter().map(|q| q.to_string()).collect();
        out.push_str(&format!("map: {};\n", body.join(", ")));
    }
    let o = &p.options;
    if let Some(v) = o.seed {
        out.push_str(&format!("option seed = {};\n", v));
    }
    if let Some(v) = o.bound {
        out.push_str(&format!("option bound = {};\n", v));
    }
    if let Some(v) = o.retries {
        out.push_str(&format!("option retries = {};\n", v));
    }
    if let Some(v) = o.tmax {
        out.push_str(&format!("option tmax = {};\n", v));
    }
    if let Some(v) = o.jet {
        out.push_str(&format!("option jet = {};\n", v));
    }
    if o.germ_faithful {
        out.push_str("option germ_faithful = true;\n");
    }
    out
}

/// Parse a full problem file.
pub fn parse_problem(text: &str) -> Result<ProblemFile> {
    // Directive comments are read before lexing strips comments.
    let mut expects = BTreeMap::new();
    let mut run = None;
    for line in text.lines() {
        let t = line.trim();
        if let Some(rest) = t.strip_prefix("# expect ") {
            if let Some((k, v)) = rest.split_once('=') {
                expects.insert(k.trim().to_string(), v.trim().to_string());
            }
        } else if let Some(rest) = t.strip_prefix("# run ") {
            run = Some(rest.trim().to_string());
        }
    }

    let toks = lex(text).map_err(Error::Parse)?;
    let mut stmts: Vec<&[Spanned]> = Vec::new();
    let mut start = 0;
    for (i, s) in toks.iter().enumerate() {
        if s.tok == Tok::Semi {
            stmts.push(&toks[start..i]);
            start = i + 1;
        }
    }
    if start < toks.len() {
        let s = &toks[start];
        return Err(Error::Parse(ParseError {
            line: s.line,
            col: s.col,
            msg: "statement is missing its terminating `;`".into(),
        }));
    }

    let mut source: Option<Ring> = None;
    let mut target: Option<Ring> = None;
    let mut icis_toks: Option<&[Spanned]> = None;
    let mut map_toks: Option<&[Spanned]> = None;
    let mut options = Options::default();

    for stmt in stmts {
        let Some(head) = stmt.first() else { continue };
        let (hl, hc) = (head.line, head.col);
        match &head.tok {
            Tok::Ident(kw) if kw == "ring" || kw == "target" => {
                let names = parse_name_list(&stmt[1..])?;
                let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
                let ring = Ring::local(&refs).map_err(|e| parse_wrap(hl, hc, e))?;
                if kw == "ring" {
                    source = Some(ring);
                } else {
                    target = Some(ring);
                }
            }
            Tok::Ident(kw) if kw == "icis" || kw == "map" => {
                if stmt.len() < 2 || stmt[1].tok != Tok::Colon {
                    return Err(Error::Parse(ParseError {
                        line: hl,
                        col: hc,
                        msg: format!("`{}` statement needs a `:`", kw),
                    }));
                }
                if kw == "icis" {
                    icis_toks = Some(&stmt[2..]);
                } else {
                    map_toks = Some(&stmt[2..]);
                }
            }
            Tok::Ident(kw) if kw == "option" => {
                parse_option(&stmt[1..], &mut options)?;
            }
            tok => {
                return Err(Error::Parse(ParseError {
                    line: hl,
                    col: hc,
                    msg: format!("unknown statement {:?}", tok),
                }))
            }
        }
    }

    let source = source.ok_or_else(|| {
        Error::Parse(ParseError { line: 1, col: 1, msg: "missing `ring` statement".into() })
    })?;

    let icis = match icis_toks {
        Some(toks) => parse_poly_list(&source, toks, true)?,
        None => Vec::new(),
    };
    let (map, checked_target) = match map_toks {
        Some(toks) => {
            let polys = parse_poly_list(&source, toks, true)?;
            (polys, target)
        }
        None => (Vec::new(), target),
    };

    Ok(ProblemFile { source, target: checked_target, icis, map, options, expects, run })
}

fn parse_wrap(line: usize, col: usize, e: Error) -> Error {
    Error::Parse(ParseError { line, col, msg: e.to_string() })
}

fn parse_name_list(toks: &[Spanned]) -> Result<Vec<String>> {
    let mut names = Vec::new();
    for s in toks {
        match &s.tok {
            Tok::Ident(n) => names.push(n.clone()),
            Tok::Comma => {}
            tok => {
                return Err(Error::Parse(ParseError {
                    line: s.line,
                    col: s.col,
                    msg: format!("expected a variable name, found {:?}", tok),
                }))
            }
        }
    }
    if names.is_empty() {
        return Err(Error::Parse(ParseError {
            line: 1,
            col: 1,
            msg: "empty variable list".into(),
        }));
    }
    Ok(names)
}

fn parse_poly_list(ring: &Ring, toks: &[Spanned], must_vanish: bool) -> Result<Vec<Poly>> {
    // split on top-level commas
    let mut groups: Vec<&[Spanned]> = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, s) in toks.iter().enumerate() {
        match s.tok {
            Tok::LParen => depth += 1,
            Tok::RParen => depth = depth.saturating_sub(1),
            Tok::Comma if depth == 0 => {
                groups.push(&toks[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    groups.push(&toks[start..]);
    let mut out = Vec::new();
    for g in groups {
        if g.is_empty() {
            continue;
        }
        let mut pp = PolyParser { toks: g, pos: 0, ring };
        let p = pp.expr().map_err(Error::Parse)?;
        if pp.pos != g.len() {
            let s = &g[pp.pos];
            return Err(Error::Parse(ParseError {
                line: s.line,
                col: s.col,
                msg: format!(
                    "trailing input at {:?} (implicit multiplication is not allowed)",
                    s.tok
                ),
            }));
        }
        if must_vanish && !p.vanishes_at_origin() {
            let s = &g[0];
            return Err(Error::Parse(ParseError {
                line: s.line,
                col: s.col,
                msg: format!("`{}` has a nonzero constant term", p),
            }));
        }
        out.push(p);
    }
    Ok(out)
}

fn parse_option(toks: &[Spanned], options: &mut Options) -> Result<()> {
    let bad = |s: &Spanned, msg: &str| -> Error {
        Error::Parse(ParseError { line: s.line, col: s.col, msg: msg.into() })
    };
    if toks.len() < 3 {
        return Err(Error::Parse(ParseError {
            line: 1,
            col: 1,
            msg: "option needs `option key = value;`".into(),
        }));
    }
    let key = match &toks[0].tok {
        Tok::Ident(k) => k.clone(),
        _ => return Err(bad(&toks[0], "expected an option name")),
    };
    if toks[1].tok != Tok::Eq {
        return Err(bad(&toks[1], "expected `=`"));
    }
    let mut negate = false;
    let mut vi = 2;
    if toks[vi].tok == Tok::Minus {
        negate = true;
        vi += 1;
    }
    let value = &toks[vi];
    match (key.as_str(), &value.tok) {
        ("seed", Tok::Int(n)) => {
            options.seed = Some(u64::try_from(n).map_err(|_| bad(value, "seed out of range"))?)
        }
        ("bound", Tok::Int(n)) => {
            let mut v = i64::try_from(n).map_err(|_| bad(value, "bound out of range"))?;
            if negate {
                v = -v;
            }
            options.bound = Some(v);
        }
        ("retries", Tok::Int(n)) => {
            options.retries =
                Some(u32::try_from(n).map_err(|_| bad(value, "retries out of range"))?)
        }
        ("tmax", Tok::Int(n)) => {
            options.tmax =
                Some(usize::try_from(n).map_err(|_| bad(value, "tmax out of range"))?)
        }
        ("jet", Tok::Int(n)) => {
            options.jet = Some(u32::try_from(n).map_err(|_| bad(value, "jet out of range"))?)
        }
        ("germ_faithful", Tok::Ident(b)) if b == "true" || b == "false" => {
            options.germ_faithful = b == "true";
        }
        _ => return Err(bad(value, &format!("unknown option `{}` or bad value", key))),
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_full_problem() {
        let text = "\
# a worked instance
ring x, y, z;
icis: x^3 + y^3 - z^2;
map: x, y, z^3 + x*z + y^2;
option seed = 7;
# expect dim_mg=6
";
        let p = parse_problem(text).unwrap();
        assert_eq!(p.source.nvars(), 3);
        assert_eq!(p.icis.len(), 1);
        assert_eq!(p.map.len(), 3);
        assert_eq!(p.options.seed, Some(7));
        assert_eq!(p.expects.get("dim_mg").map(|s| s.as_str()), Some("6"));
        let g = p.map_germ().unwrap();
        assert_eq!(g.target().nvars(), 3);
    }

    #[test]
    fn rejects_nonzero_constant_term() {
        let text = "ring x, y;\nicis: x^2 - y^3 + 1;\n";
        let err = parse_problem(text).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line 2"), "got: {msg}");
        assert!(msg.contains("constant term"), "got: {msg}");
    }

    #[test]
    fn rejects_implicit_multiplication() {
        let r = Ring::local(&["x", "y"]).unwrap();
        assert!(parse_poly(&r, "2 x").is_err());
        assert!(parse_poly(&r, "x y").is_err());
        assert!(parse_poly(&r, "x*y").is_ok());
    }

    #[test]
    fn reports_unknown_identifier_position() {
        let r = Ring::local(&["x"]).unwrap();
        let err = parse_poly(&r, "x + w").unwrap_err();
        assert!(err.to_string().contains("column 5"), "{err}");
    }

    #[test]
    fn rational_literals() {
        let r = Ring::local(&["x"]).unwrap();
        let p = parse_poly(&r, "3/2*x - 1/3").unwrap();
        assert_eq!(p.to_string(), "-1/3 + 3/2*x");
    }

    #[test]
    fn print_parse_round_trip() {
        let text = "\
ring x, y;
target X, Y, Z;
map: x, y^2, x*y;
option seed = 3;
option germ_faithful = true;
";
        let p1 = parse_problem(text).unwrap();
        let printed = print_problem(&p1);
        let p2 = parse_problem(&printed).unwrap();
        assert_eq!(p1.source, p2.source);
        assert_eq!(p1.target, p2.target);
        assert_eq!(p1.icis, p2.icis);
        assert_eq!(p1.map, p2.map);
        assert_eq!(print_problem(&p2), printed);
    }
}
