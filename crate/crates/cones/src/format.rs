//! The line-oriented monoid description format and the equation-system
//! format.
//!
//! ```text
//! # comments run to end of line; tokens are whitespace-separated
//! monoid NAME finite
//!   elements 0 a b          # first element is neutral
//!   add a a b               # one line per pair; table must be total
//!   ...
//! end
//!
//! monoid NAME presented
//!   generators g h
//!   relation 2*g = 3*g      # word := 0 | INT*NAME (+ INT*NAME)*
//! end
//!
//! monoid NAME qcone 1
//!   generator 2             # one rational per dimension
//!   generator 7/2
//! end
//! ```
//!
//! Unknown keywords are errors, not warnings; every error carries its
//! line number. Printing is canonical: `parse . print` is the identity
//! on canonical files.

use crate::error::{Error, Result};
use crate::finite::FiniteMonoid;
use crate::presentation::{ExpVec, Presentation};
use crate::qcone::RationalCone;
use num::{BigInt, BigRational, One};
use std::collections::BTreeMap;

#[derive(Clone, Debug)]
pub enum MonoidDecl {
    Finite(FiniteMonoid),
    Presented(Presentation),
    QCone(RationalCone),
}

#[derive(Clone, Debug, Default)]
pub struct MonoidFile {
    pub decls: Vec<(String, MonoidDecl)>,
}

impl MonoidFile {
    pub fn get(&self, name: &str) -> Option<&MonoidDecl> {
        self.decls
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, d)| d)
    }
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_rational(token: &str, line: usize) -> Result<BigRational> {
    let (num, den) = match token.split_once('/') {
        Some((n, d)) => (n, d),
        None => (token, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| err(line, format!("malformed rational {token}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| err(line, format!("malformed rational {token}")))?;
    if d == BigInt::from(0) {
        return Err(err(line, format!("zero denominator in {token}")));
    }
    Ok(BigRational::new(n, d))
}

/// A word over named generators: `0` or `INT*NAME (+ INT*NAME)*`.
/// Accepts the tokens either pre-split or glued with `+`.
pub fn parse_word(tokens: &[&str], names: &[String], line: usize) -> Result<ExpVec> {
    let joined = tokens.join(" ");
    let mut exps = vec![0u32; names.len()];
    let terms: Vec<&str> = joined
        .split('+')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .collect();
    if terms.is_empty() {
        return Err(err(line, "empty word"));
    }
    if terms.len() == 1 && terms[0] == "0" {
        return Ok(ExpVec(exps));
    }
    for term in terms {
        let (coeff, name) = match term.split_once('*') {
            Some((c, n)) => {
                let c: u32 = c
                    .trim()
                    .parse()
                    .map_err(|_| err(line, format!("malformed coefficient in {term}")))?;
                (c, n.trim())
            }
            None => (1, term),
        };
        let index = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| err(line, format!("unknown generator {name}")))?;
        exps[index] += coeff;
    }
    Ok(ExpVec(exps))
}

struct Lines<'a> {
    lines: Vec<(usize, Vec<&'a str>)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let mut lines = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let stripped = match raw.find('#') {
                Some(p) => &raw[..p],
                None => raw,
            };
            let tokens: Vec<&str> = stripped.split_whitespace().collect();
            if !tokens.is_empty() {
                lines.push((i + 1, tokens));
            }
        }
        Lines { lines, pos: 0 }
    }

    fn peek(&self) -> Option<&(usize, Vec<&'a str>)> {
        self.lines.get(self.pos)
    }

    fn next(&mut self) -> Option<(usize, Vec<&'a str>)> {
        let item = self.lines.get(self.pos).cloned();
        self.pos += 1;
        item
    }
}

fn parse_finite_body(lines: &mut Lines, decl_line: usize) -> Result<FiniteMonoid> {
    let (eline, first) = lines
        .next()
        .ok_or_else(|| err(decl_line, "unterminated monoid declaration"))?;
    if first[0] != "elements" {
        return Err(err(eline, "finite monoid body must start with elements"));
    }
    let labels: Vec<String> = first[1..].iter().map(|s| s.to_string()).collect();
    if labels.is_empty() {
        return Err(err(eline, "a monoid needs at least one element"));
    }
    let index = |name: &str, line: usize| -> Result<usize> {
        labels
            .iter()
            .position(|l| l == name)
            .ok_or_else(|| err(line, format!("unknown element {name}")))
    };
    let n = labels.len();
    let mut table: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    loop {
        let (line, tokens) = lines
            .next()
            .ok_or_else(|| err(decl_line, "unterminated monoid declaration"))?;
        match tokens[0] {
            "end" => break,
            "add" => {
                if tokens.len() != 4 {
                    return Err(err(line, "add takes three element names"));
                }
                let x = index(tokens[1], line)?;
                let y = index(tokens[2], line)?;
                let z = index(tokens[3], line)?;
                if let Some(&prev) = table.get(&(x, y)) {
                    if prev != z {
                        return Err(err(
                            line,
                            format!("conflicting entries for {} + {}", tokens[1], tokens[2]),
                        ));
                    }
                }
                table.insert((x, y), z);
                table.insert((y, x), z);
            }
            other => return Err(err(line, format!("unknown keyword {other}"))),
        }
    }
    let mut flat = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            match table.get(&(x, y)) {
                Some(&z) => flat.push(z),
                None => {
                    return Err(err(
                        decl_line,
                        format!("incomplete table: {} + {} missing", labels[x], labels[y]),
                    ))
                }
            }
        }
    }
    FiniteMonoid::new(labels, flat).map_err(|e| match e {
        Error::Precondition(msg) => err(decl_line, msg),
        other => other,
    })
}

fn parse_presented_body(lines: &mut Lines, decl_line: usize) -> Result<Presentation> {
    let (gline, first) = lines
        .next()
        .ok_or_else(|| err(decl_line, "unterminated monoid declaration"))?;
    if first[0] != "generators" {
        return Err(err(gline, "presented monoid body must start with generators"));
    }
    let names: Vec<String> = first[1..].iter().map(|s| s.to_string()).collect();
    let mut relations = Vec::new();
    loop {
        let (line, tokens) = lines
            .next()
            .ok_or_else(|| err(decl_line, "unterminated monoid declaration"))?;
        match tokens[0] {
            "end" => break,
            "relation" => {
                let eq_pos = tokens
                    .iter()
                    .position(|t| *t == "=")
                    .ok_or_else(|| err(line, "relation needs an ="))?;
                let lhs = parse_word(&tokens[1..eq_pos], &names, line)?;
                let rhs = parse_word(&tokens[eq_pos + 1..], &names, line)?;
                relations.push((lhs, rhs));
            }
            other => return Err(err(line, format!("unknown keyword {other}"))),
        }
    }
    Presentation::new(names, relations)
}

fn parse_qcone_body(lines: &mut Lines, decl_line: usize, dim: usize) -> Result<RationalCone> {
    let mut generators = Vec::new();
    loop {
        let (line, tokens) = lines
            .next()
            .ok_or_else(|| err(decl_line, "unterminated monoid declaration"))?;
        match tokens[0] {
            "end" => break,
            "generator" => {
                if tokens.len() != dim + 1 {
                    return Err(err(line, format!("generator takes {dim} rationals")));
                }
                let mut coords = Vec::with_capacity(dim);
                for t in &tokens[1..] {
                    coords.push(parse_rational(t, line)?);
                }
                generators.push(coords);
            }
            other => return Err(err(line, format!("unknown keyword {other}"))),
        }
    }
    if generators.is_empty() {
        return Err(err(decl_line, "a cone needs at least one generator"));
    }
    RationalCone::new(dim, generators).map_err(|e| match e {
        Error::Precondition(msg) => err(decl_line, msg),
        other => other,
    })
}

pub fn parse(text: &str) -> Result<MonoidFile> {
    let mut lines = Lines::new(text);
    let mut decls: Vec<(String, MonoidDecl)> = Vec::new();
    while lines.peek().is_some() {
        let (line, tokens) = lines.next().unwrap();
        if tokens[0] != "monoid" {
            return Err(err(line, format!("expected monoid, found {}", tokens[0])));
        }
        if tokens.len() < 3 {
            return Err(err(line, "monoid takes a name and a kind"));
        }
        let name = tokens[1].to_string();
        if decls.iter().any(|(n, _)| *n == name) {
            return Err(err(line, format!("duplicate monoid name {name}")));
        }
        let decl = match tokens[2] {
            "finite" => {
                if tokens.len() != 3 {
                    return Err(err(line, "finite takes no arguments"));
                }
                MonoidDecl::Finite(parse_finite_body(&mut lines, line)?)
            }
            "presented" => {
                if tokens.len() != 3 {
                    return Err(err(line, "presented takes no arguments"));
                }
                MonoidDecl::Presented(parse_presented_body(&mut lines, line)?)
            }
            "qcone" => {
                if tokens.len() != 4 {
                    return Err(err(line, "qcone takes a dimension"));
                }
                let dim: usize = tokens[3]
                    .parse()
                    .map_err(|_| err(line, format!("malformed dimension {}", tokens[3])))?;
                if dim == 0 {
                    return Err(err(line, "dimension must be positive"));
                }
                MonoidDecl::QCone(parse_qcone_body(&mut lines, line, dim)?)
            }
            other => return Err(err(line, format!("unknown monoid kind {other}"))),
        };
        decls.push((name, decl));
    }
    Ok(MonoidFile { decls })
}

fn print_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn print_word(word: &ExpVec, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in word.0.iter().enumerate() {
        if e > 0 {
            parts.push(format!("{e}*{}", names[i]));
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

pub fn print_finite(name: &str, m: &FiniteMonoid) -> String {
    let mut out = format!("monoid {name} finite\n");
    out.push_str(&format!("  elements {}\n", m.labels().join(" ")));
    for x in 0..m.size() {
        for y in x..m.size() {
            out.push_str(&format!(
                "  add {} {} {}\n",
                m.label(x),
                m.label(y),
                m.label(m.add_idx(x, y))
            ));
        }
    }
    out.push_str("end\n");
    out
}

pub fn print_presented(name: &str, p: &Presentation) -> String {
    let mut out = format!("monoid {name} presented\n");
    out.push_str(&format!("  generators {}\n", p.generator_names.join(" ")));
    for (l, r) in &p.relations {
        out.push_str(&format!(
            "  relation {} = {}\n",
            print_word(l, &p.generator_names),
            print_word(r, &p.generator_names)
        ));
    }
    out.push_str("end\n");
    out
}

pub fn print_qcone(name: &str, c: &RationalCone) -> String {
    let mut out = format!("monoid {name} qcone {}\n", c.dim());
    for g in c.generators() {
        let coords: Vec<String> = g.iter().map(print_rational).collect();
        out.push_str(&format!("  generator {}\n", coords.join(" ")));
    }
    out.push_str("end\n");
    out
}

pub fn print(file: &MonoidFile) -> String {
    let mut out = String::new();
    for (name, decl) in &file.decls {
        match decl {
            MonoidDecl::Finite(m) => out.push_str(&print_finite(name, m)),
            MonoidDecl::Presented(p) => out.push_str(&print_presented(name, p)),
            MonoidDecl::QCone(c) => out.push_str(&print_qcone(name, c)),
        }
    }
    out
}

/// A finite equation system read from a file:
///
/// ```text
/// system K
///   eq TERM (+ TERM)* = TERM (+ TERM)*
/// end
/// ```
///
/// where a term is `INT*xJ` or `xJ` for the unknowns (J < K) and any
/// other name is a constant resolved against the monoid at hand.
/// One side of a raw equation: unknown coefficients plus constant names
/// still to be resolved against a monoid.
#[derive(Clone, Debug)]
pub struct RawSide {
    pub coeffs: Vec<u32>,
    pub constants: Vec<(u32, String)>,
}

#[derive(Clone, Debug)]
pub struct RawEquation {
    pub lhs: RawSide,
    pub rhs: RawSide,
}

#[derive(Clone, Debug)]
pub struct SystemFile {
    pub unknown_count: usize,
    pub equations: Vec<RawEquation>,
}

fn parse_side(tokens: &[&str], unknowns: usize, line: usize) -> Result<RawSide> {
    let joined = tokens.join(" ");
    let mut coeffs = vec![0u32; unknowns];
    let mut constants = Vec::new();
    for term in joined.split('+').map(str::trim).filter(|t| !t.is_empty()) {
        let (coeff, atom) = match term.split_once('*') {
            Some((c, a)) => {
                let c: u32 = c
                    .trim()
                    .parse()
                    .map_err(|_| err(line, format!("malformed coefficient in {term}")))?;
                (c, a.trim())
            }
            None => (1, term),
        };
        if let Some(rest) = atom.strip_prefix('x') {
            if let Ok(j) = rest.parse::<usize>() {
                if j >= unknowns {
                    return Err(err(line, format!("unknown x{j} out of range")));
                }
                coeffs[j] += coeff;
                continue;
            }
        }
        if atom == "0" {
            continue;
        }
        constants.push((coeff, atom.to_string()));
    }
    Ok(RawSide { coeffs, constants })
}

pub fn parse_system(text: &str) -> Result<SystemFile> {
    let mut lines = Lines::new(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| err(1, "empty system file"))?;
    if header[0] != "system" || header.len() != 2 {
        return Err(err(hline, "system file must start with: system K"));
    }
    let unknown_count: usize = header[1]
        .parse()
        .map_err(|_| err(hline, format!("malformed unknown count {}", header[1])))?;
    let mut equations = Vec::new();
    loop {
        let (line, tokens) = lines
            .next()
            .ok_or_else(|| err(hline, "unterminated system declaration"))?;
        match tokens[0] {
            "end" => break,
            "eq" => {
                let eq_pos = tokens
                    .iter()
                    .position(|t| *t == "=")
                    .ok_or_else(|| err(line, "equation needs an ="))?;
                let lhs = parse_side(&tokens[1..eq_pos], unknown_count, line)?;
                let rhs = parse_side(&tokens[eq_pos + 1..], unknown_count, line)?;
                equations.push(RawEquation { lhs, rhs });
            }
            other => return Err(err(line, format!("unknown keyword {other}"))),
        }
    }
    if lines.peek().is_some() {
        let (line, tokens) = lines.next().unwrap();
        return Err(err(line, format!("trailing content {}", tokens[0])));
    }
    Ok(SystemFile {
        unknown_count,
        equations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backend::MonoidBackend;

    const THREE_CHAIN: &str = "\
# the three-element chain with an absorbing top
monoid threechain finite
  elements 0 1 inf
  add 0 0 0
  add 0 1 1
  add 0 inf inf
  add 1 1 inf
  add 1 inf inf
  add inf inf inf
end
";

    #[test]
    fn parses_a_finite_monoid() {
        let file = parse(THREE_CHAIN).unwrap();
        let m = match file.get("threechain").unwrap() {
            MonoidDecl::Finite(m) => m,
            _ => panic!(),
        };
        assert_eq!(m.size(), 3);
        assert_eq!(m.add_idx(1, 1), 2);
    }

    #[test]
    fn rejects_incomplete_tables() {
        let text = "monoid m finite\n elements 0 a\n add 0 0 0\n add 0 a a\nend\n";
        let e = parse(text).unwrap_err();
        assert!(e.to_string().contains("incomplete"));
    }

    #[test]
    fn rejects_noncommutative_input_via_conflict() {
        let text = "monoid m finite\n elements 0 a\n add 0 a a\n add a 0 0\n add 0 0 0\n add a a a\nend\n";
        assert!(parse(text).is_err());
    }

    #[test]
    fn rejects_unknown_keywords() {
        let text = "monoid m finite\n elements 0\n add 0 0 0\n table 0\nend\n";
        let e = parse(text).unwrap_err();
        assert!(e.to_string().contains("unknown keyword"));
    }

    #[test]
    fn parses_presented_and_qcone() {
        let text = "\
monoid tt presented
  generators g
  relation 2*g = 3*g
end
monoid twosevens qcone 1
  generator 2
  generator 7
end
monoid halves qcone 1
  generator 7/2
end
";
        let file = parse(text).unwrap();
        match file.get("tt").unwrap() {
            MonoidDecl::Presented(p) => {
                assert_eq!(p.relations.len(), 1);
                assert_eq!(p.relations[0].0, ExpVec(vec![2]));
            }
            _ => panic!(),
        }
        match file.get("twosevens").unwrap() {
            MonoidDecl::QCone(c) => assert_eq!(c.generators().len(), 2),
            _ => panic!(),
        }
    }

    #[test]
    fn malformed_rationals_carry_line_numbers() {
        let text = "monoid c qcone 1\n  generator 1/0\nend\n";
        match parse(text).unwrap_err() {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("{other}"),
        }
    }

    #[test]
    fn print_then_parse_is_identity() {
        let text = "\
monoid tt presented
  generators g
  relation 2*g = 3*g
end
monoid twosevens qcone 1
  generator 2
  generator 7
end
";
        let file = parse(text).unwrap();
        let canonical = print(&file);
        let reparsed = parse(&canonical).unwrap();
        assert_eq!(print(&reparsed), canonical);
        let file = parse(THREE_CHAIN).unwrap();
        let canonical = print(&file);
        let reparsed = parse(&canonical).unwrap();
        assert_eq!(print(&reparsed), canonical);
    }

    #[test]
    fn word_parsing_handles_spacing() {
        let names = vec!["g".to_string(), "h".to_string()];
        assert_eq!(
            parse_word(&["2*g", "+", "1*h"], &names, 1).unwrap(),
            ExpVec(vec![2, 1])
        );
        assert_eq!(parse_word(&["2*g+h"], &names, 1).unwrap(), ExpVec(vec![2, 1]));
        assert_eq!(parse_word(&["0"], &names, 1).unwrap(), ExpVec(vec![0, 0]));
        assert!(parse_word(&["2*q"], &names, 1).is_err());
    }

    #[test]
    fn system_files_parse() {
        let text = "system 1\n  eq 2*x0 = inf\nend\n";
        let sys = parse_system(text).unwrap();
        assert_eq!(sys.unknown_count, 1);
        assert_eq!(sys.equations.len(), 1);
        let eq = &sys.equations[0];
        assert_eq!(eq.lhs.coeffs, vec![2]);
        assert!(eq.lhs.constants.is_empty());
        assert_eq!(eq.rhs.coeffs, vec![0]);
        assert_eq!(eq.rhs.constants, [(1, "inf".to_string())]);
    }

    #[test]
    fn parsed_monoids_are_usable_backends() {
        let file = parse(THREE_CHAIN).unwrap();
        if let MonoidDecl::Finite(m) = file.get("threechain").unwrap() {
            assert_eq!(m.enumerate(0).len(), 3);
        }
    }
}
