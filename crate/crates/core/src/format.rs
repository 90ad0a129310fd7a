//! The line-oriented algebra file format and the polynomial expression
//! syntax.
//!
//! ```text
//! # comment
//! field Q                      # or GF(p)
//! gens a1:2 a2:1 a3:4          # weights optional, all or none
//! order gr(lex(a1>a2>a3))
//! rel a3*a1 = a1*a3 + a2^2*a3 + a2^6
//! ```
//!
//! Orderings: `lex(x>y>…)`, `grlex(w,…; x>y>…)`, `grevlex(w,…; x>y>…)`,
//! `gr(<base>)` (degree from the declared weights), `gr(w,…; <base>)`, and
//! `rees(<base>)` whose base ranges over every generator but the last.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::degree::DegreeFunction;
use crate::error::AlgebraError;
use crate::monomial::Monomial;
use crate::ordering::MonomialOrdering;
use crate::poly::Polynomial;
use crate::presentation::AlgebraPresentation;
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("duplicate relation for pair {0}*{1}")]
    DuplicateRelation(String, String),
    #[error("the coefficient of {0} must be nonzero")]
    ZeroLambda(String),
    #[error("weights must be positive, found {0}")]
    NonPositiveWeight(String),
    #[error("malformed number `{0}`")]
    MalformedNumber(String),
    #[error("term is not in PBW order: `{0}` follows `{1}`")]
    NonPbwTerm(String, String),
    #[error("{0}")]
    Algebra(AlgebraError),
}

/// A diagnostic with a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{col}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

type PResult<T> = Result<T, ParseError>;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    Sym(char),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    col: usize,
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic()
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// Generator names: `[A-Za-z][A-Za-z0-9_]*` optionally followed by `~`s.
pub fn is_valid_name(s: &str) -> bool {
    let core = s.trim_end_matches('~');
    let mut chars = core.chars();
    chars.next().is_some_and(is_ident_start) && chars.all(is_ident_char)
}

fn tokenize(text: &str, line: usize, col0: usize) -> PResult<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let col = col0 + k;
        if c.is_whitespace() {
            k += 1;
        } else if is_ident_start(c) {
            let start = k;
            while k < chars.len() && is_ident_char(chars[k]) {
                k += 1;
            }
            while k < chars.len() && chars[k] == '~' {
                k += 1;
            }
            out.push(Token { tok: Tok::Ident(chars[start..k].iter().collect()), col });
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            if k < chars.len() && (is_ident_start(chars[k]) || chars[k] == '.') {
                let end = (k..chars.len()).find(|&e| !(chars[e].is_ascii_alphanumeric() || chars[e] == '.')).unwrap_or(chars.len());
                return Err(ParseError {
                    line,
                    col,
                    kind: ParseErrorKind::MalformedNumber(chars[start..end].iter().collect()),
                });
            }
            out.push(Token { tok: Tok::Int(chars[start..k].iter().collect()), col });
        } else if "*^+-/=(),;>:".contains(c) {
            out.push(Token { tok: Tok::Sym(c), col });
            k += 1;
        } else {
            return Err(ParseError { line, col, kind: ParseErrorKind::Syntax(format!("unexpected character `{c}`")) });
        }
    }
    Ok(out)
}

struct Cursor<'a> {
    toks: &'a [Token],
    pos: usize,
    line: usize,
    // Column reported for errors at end of input.
    end_col: usize,
}

impl<'a> Cursor<'a> {
    fn new(toks: &'a [Token], line: usize, end_col: usize) -> Self {
        Cursor { toks, pos: 0, line, end_col }
    }

    fn peek(&self) -> Option<&'a Token> {
        self.toks.get(self.pos)
    }

    fn col(&self) -> usize {
        self.peek().map_or(self.end_col, |t| t.col)
    }

    fn err<T>(&self, kind: ParseErrorKind) -> PResult<T> {
        Err(ParseError { line: self.line, col: self.col(), kind })
    }

    fn err_at<T>(&self, col: usize, kind: ParseErrorKind) -> PResult<T> {
        Err(ParseError { line: self.line, col, kind })
    }

    fn next(&mut self) -> Option<&'a Token> {
        let t = self.toks.get(self.pos);
        self.pos += 1;
        t
    }

    fn at_sym(&self, c: char) -> bool {
        matches!(self.peek(), Some(Token { tok: Tok::Sym(s), .. }) if *s == c)
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.at_sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, c: char) -> PResult<()> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            self.err(ParseErrorKind::Syntax(format!("expected `{c}`")))
        }
    }

    fn ident(&mut self) -> PResult<(String, usize)> {
        match self.peek() {
            Some(Token { tok: Tok::Ident(s), col }) => {
                self.pos += 1;
                Ok((s.clone(), *col))
            }
            _ => self.err(ParseErrorKind::Syntax("expected a name".into())),
        }
    }

    fn int(&mut self) -> PResult<(String, usize)> {
        match self.peek() {
            Some(Token { tok: Tok::Int(s), col }) => {
                self.pos += 1;
                Ok((s.clone(), *col))
            }
            _ => self.err(ParseErrorKind::Syntax("expected an integer".into())),
        }
    }

    fn finish(&self) -> PResult<()> {
        if self.peek().is_some() {
            return self.err(ParseErrorKind::Syntax("unexpected trailing input".into()));
        }
        Ok(())
    }
}

fn parse_u32(s: &str, line: usize, col: usize) -> PResult<u32> {
    s.parse().map_err(|_| ParseError { line, col, kind: ParseErrorKind::MalformedNumber(s.to_string()) })
}

fn parse_poly_tokens(cur: &mut Cursor<'_>, names: &[String], field: Field) -> PResult<Polynomial> {
    let n = names.len();
    let mut out = Polynomial::zero(n);
    let mut first = true;
    loop {
        let mut sign = 1i64;
        if cur.eat_sym('-') {
            sign = -1;
        } else if !cur.eat_sym('+') && !first {
            break;
        }
        first = false;
        let (m, c) = parse_term(cur, names, field)?;
        let c = if sign < 0 { -c } else { c };
        out.add_term(m, c);
        if !(cur.at_sym('+') || cur.at_sym('-')) {
            break;
        }
    }
    Ok(out)
}

fn parse_term(cur: &mut Cursor<'_>, names: &[String], field: Field) -> PResult<(Monomial, Scalar)> {
    let n = names.len();
    let mut exps = vec![0u32; n];
    let mut coeff = field.one();
    let mut last: Option<usize> = None;
    loop {
        match cur.peek() {
            Some(Token { tok: Tok::Int(num), col }) => {
                let col = *col;
                cur.next();
                let num: BigInt = num.parse().expect("digits");
                let den: BigInt = if cur.eat_sym('/') {
                    let (d, _) = cur.int()?;
                    d.parse().expect("digits")
                } else {
                    BigInt::from(1)
                };
                let text = format!("{num}/{den}");
                let c = field
                    .from_ratio(num, den)
                    .map_err(|_| ParseError { line: cur.line, col, kind: ParseErrorKind::MalformedNumber(text) })?;
                coeff = &coeff * &c;
            }
            Some(Token { tok: Tok::Ident(name), col }) => {
                let col = *col;
                cur.next();
                let idx = names
                    .iter()
                    .position(|g| g == name)
                    .ok_or(ParseError { line: cur.line, col, kind: ParseErrorKind::UnknownGenerator(name.clone()) })?;
                let e = if cur.eat_sym('^') {
                    let (e, ecol) = cur.int()?;
                    parse_u32(&e, cur.line, ecol)?
                } else {
                    1
                };
                if let Some(prev) = last {
                    if idx < prev {
                        return cur.err_at(col, ParseErrorKind::NonPbwTerm(name.clone(), names[prev].clone()));
                    }
                }
                exps[idx] += e;
                last = Some(idx);
            }
            _ => return cur.err(ParseErrorKind::Syntax("expected a number or generator".into())),
        }
        if !cur.eat_sym('*') {
            break;
        }
    }
    Ok((Monomial::new(exps), coeff))
}

/// Parse a polynomial over `pres` on a single line.
pub fn parse_poly(text: &str, pres: &AlgebraPresentation) -> PResult<Polynomial> {
    parse_poly_names(text, pres.names(), pres.field())
}

/// Parse a polynomial over explicit generator names.
pub fn parse_poly_names(text: &str, names: &[String], field: Field) -> PResult<Polynomial> {
    let text = text.trim_end_matches(['\r', '\n']);
    let toks = tokenize(text, 1, 1)?;
    let mut cur = Cursor::new(&toks, 1, text.chars().count() + 1);
    if cur.peek().is_none() {
        return cur.err(ParseErrorKind::Syntax("empty polynomial".into()));
    }
    let p = parse_poly_tokens(&mut cur, names, field)?;
    cur.finish()?;
    Ok(p)
}

/// Parsed contents of an algebra file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub presentation: AlgebraPresentation,
    pub ordering: MonomialOrdering,
    pub degree: Option<DegreeFunction>,
}

fn parse_order_list(cur: &mut Cursor<'_>, names: &[String]) -> PResult<Vec<usize>> {
    let mut order = Vec::new();
    loop {
        let (name, col) = cur.ident()?;
        let idx = names
            .iter()
            .position(|g| *g == name)
            .ok_or(ParseError { line: cur.line, col, kind: ParseErrorKind::UnknownGenerator(name.clone()) })?;
        if order.contains(&idx) {
            return cur.err_at(col, ParseErrorKind::Syntax(format!("`{name}` appears twice in the ordering")));
        }
        order.push(idx);
        if !cur.eat_sym('>') {
            break;
        }
    }
    if order.len() != names.len() {
        return cur.err(ParseErrorKind::Syntax(format!("ordering must list all {} generators", names.len())));
    }
    Ok(order)
}

fn parse_weight_list(cur: &mut Cursor<'_>, n: usize) -> PResult<DegreeFunction> {
    let start = cur.col();
    let mut weights = Vec::new();
    loop {
        let sign_col = cur.col();
        let neg = cur.eat_sym('-');
        let (w, col) = cur.int()?;
        if neg || w.chars().all(|c| c == '0') {
            let shown = if neg { format!("-{w}") } else { w };
            return cur.err_at(if neg { sign_col } else { col }, ParseErrorKind::NonPositiveWeight(shown));
        }
        let w: u64 = w
            .parse()
            .map_err(|_| ParseError { line: cur.line, col, kind: ParseErrorKind::MalformedNumber(w.clone()) })?;
        weights.push(w);
        if !cur.eat_sym(',') {
            break;
        }
    }
    if weights.len() != n {
        return cur.err_at(start, ParseErrorKind::Syntax(format!("expected {n} weights, found {}", weights.len())));
    }
    Ok(DegreeFunction::from_weights(weights).expect("weights checked positive"))
}

fn parse_ordering(cur: &mut Cursor<'_>, names: &[String], weights: Option<&DegreeFunction>) -> PResult<MonomialOrdering> {
    let (kind, col) = cur.ident()?;
    cur.expect_sym('(')?;
    let ord = match kind.as_str() {
        "lex" => MonomialOrdering::Lex { order: parse_order_list(cur, names)? },
        "grlex" | "grevlex" => {
            let w = parse_weight_list(cur, names.len())?;
            cur.expect_sym(';')?;
            let order = parse_order_list(cur, names)?;
            if kind == "grlex" {
                MonomialOrdering::Grlex { weights: w, order }
            } else {
                MonomialOrdering::Grevlex { weights: w, order }
            }
        }
        "gr" => {
            let explicit = matches!(cur.peek(), Some(Token { tok: Tok::Int(_), .. }));
            let degree = if explicit {
                let w = parse_weight_list(cur, names.len())?;
                cur.expect_sym(';')?;
                w
            } else {
                match weights {
                    Some(w) => w.clone(),
                    None => {
                        return cur.err_at(col, ParseErrorKind::Syntax("gr(...) needs weights on the gens line".into()))
                    }
                }
            };
            let base = parse_ordering(cur, names, weights)?;
            MonomialOrdering::Graded { base: Box::new(base), degree }
        }
        "rees" => {
            if names.is_empty() {
                return cur.err_at(col, ParseErrorKind::Syntax("rees(...) needs at least one generator".into()));
            }
            let inner_names = &names[..names.len() - 1];
            let inner_weights = weights.map(|w| {
                DegreeFunction::from_weights(w.weights()[..w.nvars() - 1].to_vec()).expect("positive")
            });
            let base = parse_ordering(cur, inner_names, inner_weights.as_ref())?;
            MonomialOrdering::ReesExtension { base: Box::new(base) }
        }
        other => return cur.err_at(col, ParseErrorKind::Syntax(format!("unknown ordering `{other}`"))),
    };
    cur.expect_sym(')')?;
    Ok(ord)
}

/// Parse an ordering expression over the given generators.
pub fn parse_ordering_str(text: &str, names: &[String], weights: Option<&DegreeFunction>) -> PResult<MonomialOrdering> {
    let toks = tokenize(text, 1, 1)?;
    let mut cur = Cursor::new(&toks, 1, text.chars().count() + 1);
    let ord = parse_ordering(&mut cur, names, weights)?;
    cur.finish()?;
    Ok(ord)
}

fn keyword_rest(line: &str, kw: &str) -> Option<usize> {
    let rest = line.strip_prefix(kw)?;
    (rest.is_empty() || rest.starts_with(char::is_whitespace)).then_some(kw.chars().count())
}

impl AlgebraFile {
    pub fn parse(text: &str) -> PResult<AlgebraFile> {
        let mut field: Option<Field> = None;
        let mut gens: Option<(Vec<String>, Option<DegreeFunction>)> = None;
        let mut pres: Option<AlgebraPresentation> = None;
        let mut ordering: Option<MonomialOrdering> = None;
        let mut seen_pairs = Vec::new();
        let mut last_line = 0;

        for (k, raw) in text.split('\n').enumerate() {
            let line = k + 1;
            last_line = line;
            let raw = raw.strip_suffix('\r').unwrap_or(raw);
            let body = raw.split('#').next().unwrap_or("");
            let indent = body.chars().take_while(|c| c.is_whitespace()).count();
            let content = body.trim();
            if content.is_empty() {
                continue;
            }
            let err = |col: usize, kind: ParseErrorKind| ParseError { line, col, kind };
            let first_col = indent + 1;

            if let Some(kwlen) = keyword_rest(content, "field") {
                if field.is_some() || gens.is_some() {
                    return Err(err(first_col, ParseErrorKind::Syntax("`field` must appear once, before `gens`".into())));
                }
                let rest_col = first_col + kwlen;
                let rest: String = content.chars().skip(kwlen).collect();
                let toks = tokenize(&rest, line, rest_col)?;
                let mut cur = Cursor::new(&toks, line, rest_col + rest.chars().count());
                let (name, col) = cur.ident()?;
                let f = match name.as_str() {
                    "Q" => Field::Rational,
                    "GF" => {
                        cur.expect_sym('(')?;
                        let (p, pcol) = cur.int()?;
                        cur.expect_sym(')')?;
                        let p: u64 = p
                            .parse()
                            .map_err(|_| err(pcol, ParseErrorKind::MalformedNumber(p.clone())))?;
                        Field::prime(p).map_err(|e| err(pcol, ParseErrorKind::Algebra(e)))?
                    }
                    other => return Err(err(col, ParseErrorKind::Syntax(format!("unknown field `{other}`")))),
                };
                cur.finish()?;
                field = Some(f);
            } else if let Some(kwlen) = keyword_rest(content, "gens") {
                if gens.is_some() {
                    return Err(err(first_col, ParseErrorKind::Syntax("`gens` declared twice".into())));
                }
                let rest_col = first_col + kwlen;
                let rest: String = content.chars().skip(kwlen).collect();
                let toks = tokenize(&rest, line, rest_col)?;
                let mut cur = Cursor::new(&toks, line, rest_col + rest.chars().count());
                let mut names: Vec<String> = Vec::new();
                let mut weights: Vec<Option<u64>> = Vec::new();
                while cur.peek().is_some() {
                    let (name, col) = cur.ident()?;
                    if names.contains(&name) {
                        return Err(err(col, ParseErrorKind::DuplicateGenerator(name)));
                    }
                    let w = if cur.eat_sym(':') {
                        let sign_col = cur.col();
                        let neg = cur.eat_sym('-');
                        let (w, wcol) = cur.int()?;
                        if neg || w.chars().all(|c| c == '0') {
                            let shown = if neg { format!("-{w}") } else { w };
                            return Err(err(if neg { sign_col } else { wcol }, ParseErrorKind::NonPositiveWeight(shown)));
                        }
                        Some(w.parse::<u64>().map_err(|_| err(wcol, ParseErrorKind::MalformedNumber(w.clone())))?)
                    } else {
                        None
                    };
                    if !weights.is_empty() && weights[0].is_some() != w.is_some() {
                        return Err(err(col, ParseErrorKind::Syntax("give a weight for every generator or for none".into())));
                    }
                    names.push(name);
                    weights.push(w);
                }
                if names.is_empty() {
                    return Err(err(first_col, ParseErrorKind::Syntax("`gens` needs at least one name".into())));
                }
                let degree = if weights.iter().all(Option::is_some) {
                    Some(DegreeFunction::from_weights(weights.into_iter().flatten().collect()).expect("positive"))
                } else {
                    None
                };
                let p = AlgebraPresentation::new(names.clone(), field.unwrap_or(Field::Rational))
                    .map_err(|e| err(first_col, ParseErrorKind::Algebra(e)))?;
                gens = Some((names, degree));
                pres = Some(p);
            } else if let Some(kwlen) = keyword_rest(content, "order") {
                let Some((names, degree)) = &gens else {
                    return Err(err(first_col, ParseErrorKind::Syntax("`order` must follow `gens`".into())));
                };
                if ordering.is_some() {
                    return Err(err(first_col, ParseErrorKind::Syntax("`order` declared twice".into())));
                }
                let rest_col = first_col + kwlen;
                let rest: String = content.chars().skip(kwlen).collect();
                let toks = tokenize(&rest, line, rest_col)?;
                let mut cur = Cursor::new(&toks, line, rest_col + rest.chars().count());
                let ord = parse_ordering(&mut cur, names, degree.as_ref())?;
                cur.finish()?;
                ordering = Some(ord);
            } else if let Some(kwlen) = keyword_rest(content, "rel") {
                let Some(p) = pres.as_mut() else {
                    return Err(err(first_col, ParseErrorKind::Syntax("`rel` must follow `gens`".into())));
                };
                let rest_col = first_col + kwlen;
                let rest: String = content.chars().skip(kwlen).collect();
                let toks = tokenize(&rest, line, rest_col)?;
                let mut cur = Cursor::new(&toks, line, rest_col + rest.chars().count());
                let (nj, cj) = cur.ident()?;
                let j = p.index_of(&nj).ok_or(err(cj, ParseErrorKind::UnknownGenerator(nj.clone())))?;
                cur.expect_sym('*')?;
                let (ni, ci) = cur.ident()?;
                let i = p.index_of(&ni).ok_or(err(ci, ParseErrorKind::UnknownGenerator(ni.clone())))?;
                if j == i {
                    return Err(err(cj, ParseErrorKind::Syntax("a relation needs two distinct generators".into())));
                }
                if j < i {
                    return Err(err(
                        cj,
                        ParseErrorKind::Syntax(format!("left side must be `{ni}*{nj}`, later generator first")),
                    ));
                }
                if seen_pairs.contains(&(i, j)) {
                    return Err(err(cj, ParseErrorKind::DuplicateRelation(nj, ni)));
                }
                cur.expect_sym('=')?;
                let rhs_col = cur.col();
                if cur.peek().is_none() {
                    return Err(err(rhs_col, ParseErrorKind::Syntax("missing right-hand side".into())));
                }
                let rhs = parse_poly_tokens(&mut cur, p.names(), p.field())?;
                cur.finish()?;
                match p.set_relation_rhs(i, j, &rhs) {
                    Ok(()) => {}
                    Err(AlgebraError::ZeroLambda { .. }) => {
                        return Err(err(rhs_col, ParseErrorKind::ZeroLambda(format!("{ni}*{nj}"))));
                    }
                    Err(e) => return Err(err(rhs_col, ParseErrorKind::Algebra(e))),
                }
                seen_pairs.push((i, j));
            } else {
                let word: String = content.chars().take_while(|c| !c.is_whitespace()).collect();
                return Err(err(first_col, ParseErrorKind::Syntax(format!("unknown directive `{word}`"))));
            }
        }
        let Some((names, degree)) = gens else {
            return Err(ParseError { line: last_line.max(1), col: 1, kind: ParseErrorKind::Syntax("missing `gens` line".into()) });
        };
        let presentation = pres.expect("set with gens");
        let ordering = ordering.unwrap_or_else(|| MonomialOrdering::lex_natural(names.len()));
        Ok(AlgebraFile { presentation, ordering, degree })
    }
}

/// Render an ordering over `names`. `weights` are the declared generator
/// weights; graded composites whose degree matches them print as `gr(<base>)`.
pub fn format_ordering(ord: &MonomialOrdering, names: &[String], weights: Option<&DegreeFunction>) -> String {
    let list = |order: &[usize]| order.iter().map(|&i| names[i].as_str()).collect::<Vec<_>>().join(">");
    let wlist = |w: &DegreeFunction| w.weights().iter().map(u64::to_string).collect::<Vec<_>>().join(",");
    match ord {
        MonomialOrdering::Lex { order } => format!("lex({})", list(order)),
        MonomialOrdering::Grlex { weights: w, order } => format!("grlex({}; {})", wlist(w), list(order)),
        MonomialOrdering::Grevlex { weights: w, order } => format!("grevlex({}; {})", wlist(w), list(order)),
        MonomialOrdering::Graded { base, degree } => {
            let inner = format_ordering(base, names, weights);
            if weights == Some(degree) {
                format!("gr({inner})")
            } else {
                format!("gr({}; {inner})", wlist(degree))
            }
        }
        MonomialOrdering::ReesExtension { base } => {
            let inner_names = &names[..names.len() - 1];
            let inner_weights =
                weights.map(|w| DegreeFunction::from_weights(w.weights()[..w.nvars() - 1].to_vec()).expect("positive"));
            format!("rees({})", format_ordering(base, inner_names, inner_weights.as_ref()))
        }
    }
}

impl fmt::Display for AlgebraFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.presentation;
        let names = p.names();
        writeln!(f, "field {}", p.field())?;
        write!(f, "gens")?;
        for (k, name) in names.iter().enumerate() {
            match &self.degree {
                Some(d) => write!(f, " {name}:{}", d.weights()[k])?,
                None => write!(f, " {name}")?,
            }
        }
        writeln!(f)?;
        writeln!(f, "order {}", format_ordering(&self.ordering, names, self.degree.as_ref()))?;
        for (i, j, rel) in p.relations() {
            if rel.is_commuting() {
                continue;
            }
            writeln!(f, "rel {}*{} = {}", names[j], names[i], rel.rhs(i, j).display(names, &self.ordering))?;
        }
        Ok(())
    }
}
