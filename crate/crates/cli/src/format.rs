//! Text formats for algebras and modules.
//!
//! An algebra file:
//!
//! ```text
//! # comments run to the end of the line
//! field: 2
//! vertices: 1 2 3
//! arrows:
//!   alpha: 1 -> 2
//!   beta: 2 -> 3
//! relations:
//!   alpha*beta
//!   a*b - 2*c*d
//! ```
//!
//! A module file holds either one constructor expression (`S(v)`, `P(v)`,
//! `I(v)`, `0`, `sum[e1, e2, ..]`) or an explicit representation:
//!
//! ```text
//! dims: 1 1
//! beta: 1        # rows separated by `;`, entries row-major
//! ```
//!
//! Arrows missing from the explicit form act as zero.

use std::sync::Arc;

use stau_core::algebra::{BoundQuiverAlgebra, Quiver, RelationSpec};
use stau_core::linalg::{FieldPrime, Matrix};
use stau_core::rep::{direct_sum, Representation};

use crate::CliError;

fn parse_err(line: usize, msg: impl Into<String>) -> CliError {
    CliError::Parse { line, msg: msg.into() }
}

fn strip_comment(s: &str) -> &str {
    match s.find('#') {
        Some(i) => &s[..i],
        None => s,
    }
}

/// Lines with comments removed, blank lines dropped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l).trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn words(s: &str) -> Vec<String> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|w| !w.is_empty())
        .map(str::to_string)
        .collect()
}

/// A parsed algebra file before the algebra is built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub field: Option<u32>,
    pub vertices: Vec<String>,
    pub arrows: Vec<(String, String, String)>,
    /// Relations with the line they came from.
    pub relations: Vec<(usize, RelationSpec)>,
}

#[derive(Clone, Copy, PartialEq)]
enum Section {
    None,
    Arrows,
    Relations,
}

fn header(line: &str) -> Option<(&str, &str)> {
    let (key, rest) = line.split_once(':')?;
    let key = key.trim();
    // an arrow line may share the `arrows:` header
    if rest.contains("->") && key != "arrows" {
        return None;
    }
    matches!(key, "field" | "vertices" | "arrows" | "relations").then(|| (key, rest.trim()))
}

pub fn parse_algebra_file(text: &str) -> Result<AlgebraFile, CliError> {
    let mut out = AlgebraFile {
        field: None,
        vertices: Vec::new(),
        arrows: Vec::new(),
        relations: Vec::new(),
    };
    let mut seen_vertices = false;
    let mut section = Section::None;
    for (no, line) in content_lines(text) {
        if let Some((key, rest)) = header(line) {
            section = Section::None;
            match key {
                "field" => {
                    let p = rest.parse().map_err(|_| parse_err(no, format!("bad field `{rest}`")))?;
                    out.field = Some(p);
                }
                "vertices" => {
                    out.vertices = words(rest);
                    seen_vertices = true;
                }
                "arrows" => {
                    section = Section::Arrows;
                    if !rest.is_empty() {
                        out.arrows.push(parse_arrow(no, rest)?);
                    }
                }
                _ => {
                    section = Section::Relations;
                    if !rest.is_empty() {
                        out.relations.push((no, parse_relation(no, rest)?));
                    }
                }
            }
            continue;
        }
        match section {
            Section::Arrows => out.arrows.push(parse_arrow(no, line)?),
            Section::Relations => out.relations.push((no, parse_relation(no, line)?)),
            Section::None => return Err(parse_err(no, format!("unexpected line `{line}`"))),
        }
    }
    if !seen_vertices {
        return Err(parse_err(0, "missing `vertices:` line"));
    }
    Ok(out)
}

fn parse_arrow(no: usize, line: &str) -> Result<(String, String, String), CliError> {
    let bad = || parse_err(no, format!("expected `name: source -> target`, got `{line}`"));
    let (name, ends) = line.split_once(':').ok_or_else(bad)?;
    let (s, t) = ends.split_once("->").ok_or_else(bad)?;
    let (name, s, t) = (name.trim(), s.trim(), t.trim());
    if name.is_empty() || s.is_empty() || t.is_empty() || name.contains(char::is_whitespace) {
        return Err(bad());
    }
    Ok((name.to_string(), s.to_string(), t.to_string()))
}

/// `a*b - 2*c*d`: signed terms, each a product of an optional integer
/// coefficient and arrow names.
pub fn parse_relation(no: usize, line: &str) -> Result<RelationSpec, CliError> {
    let mut terms = Vec::new();
    let mut sign = 1i64;
    let mut cur = String::new();
    let flush = |cur: &mut String, sign: i64, terms: &mut Vec<(i64, Vec<String>)>| -> Result<(), CliError> {
        let t = cur.trim();
        if t.is_empty() {
            return Err(parse_err(no, format!("empty term in relation `{line}`")));
        }
        let mut coef = sign;
        let mut path = Vec::new();
        for f in t.split('*').map(str::trim) {
            if f.is_empty() {
                return Err(parse_err(no, format!("empty factor in relation `{line}`")));
            }
            if let Ok(c) = f.parse::<i64>() {
                if !path.is_empty() {
                    return Err(parse_err(no, "coefficients must precede the path"));
                }
                coef = coef.checked_mul(c).ok_or_else(|| parse_err(no, "coefficient overflow"))?;
            } else if f.contains(char::is_whitespace) {
                return Err(parse_err(no, format!("missing `*` in `{f}`")));
            } else {
                path.push(f.to_string());
            }
        }
        if path.is_empty() {
            return Err(parse_err(no, format!("term `{t}` has no arrows")));
        }
        if path.len() < 2 {
            return Err(parse_err(
                no,
                format!("relation is not admissible: path `{}` has length 1 < 2", path[0]),
            ));
        }
        terms.push((coef, path));
        cur.clear();
        Ok(())
    };
    let mut leading = true;
    for ch in line.chars() {
        match ch {
            '+' | '-' => {
                if leading && cur.trim().is_empty() {
                    if ch == '-' {
                        sign = -sign;
                    }
                    continue;
                }
                flush(&mut cur, sign, &mut terms)?;
                sign = if ch == '-' { -1 } else { 1 };
                leading = true;
            }
            _ => {
                if !ch.is_whitespace() {
                    leading = false;
                }
                cur.push(ch);
            }
        }
    }
    flush(&mut cur, sign, &mut terms)?;
    Ok(RelationSpec::new(terms))
}

impl AlgebraFile {
    /// Builds the algebra. `field` overrides the file's `field:` line; with
    /// neither present the field is F_2.
    pub fn build(&self, field: Option<u32>) -> Result<Arc<BoundQuiverAlgebra>, CliError> {
        let p = field.or(self.field).unwrap_or(2);
        let f = FieldPrime::new(p).map_err(|e| parse_err(0, e.to_string()))?;
        let quiver = Quiver::new(self.vertices.iter().cloned(), self.arrows.iter().cloned())
            .map_err(|e| parse_err(0, e.to_string()))?;
        // resolve each relation on its own first so errors carry a line number
        for (no, rel) in &self.relations {
            let mut ends = None;
            for (_, names) in &rel.terms {
                let mut at: Option<usize> = None;
                let mut start = None;
                for n in names {
                    let a = quiver.arrow_index(n).map_err(|e| parse_err(*no, e.to_string()))?;
                    let a = &quiver.arrows()[a];
                    if let Some(v) = at {
                        if v != a.source {
                            return Err(parse_err(*no, format!("arrows of `{}` do not compose", names.join("*"))));
                        }
                    }
                    start.get_or_insert(a.source);
                    at = Some(a.target);
                }
                let st = (start.unwrap(), at.unwrap());
                if *ends.get_or_insert(st) != st {
                    return Err(parse_err(
                        *no,
                        "relation is not admissible: paths have different endpoints",
                    ));
                }
            }
        }
        let rels = self.relations.iter().map(|(_, r)| r.clone()).collect();
        let alg = BoundQuiverAlgebra::build(quiver, rels, f).map_err(CliError::Core)?;
        Ok(Arc::new(alg))
    }
}

pub fn parse_algebra(text: &str, field: Option<u32>) -> Result<Arc<BoundQuiverAlgebra>, CliError> {
    parse_algebra_file(text)?.build(field)
}

fn emit_term(out: &mut String, first: bool, coef: i64, path: &[String]) {
    let neg = coef < 0;
    match (first, neg) {
        (true, true) => out.push('-'),
        (true, false) => {}
        (false, true) => out.push_str(" - "),
        (false, false) => out.push_str(" + "),
    }
    let c = coef.unsigned_abs();
    if c != 1 {
        out.push_str(&format!("{c}*"));
    }
    out.push_str(&path.join("*"));
}

pub fn emit_relation(r: &RelationSpec) -> String {
    let mut s = String::new();
    for (i, (c, p)) in r.terms.iter().enumerate() {
        emit_term(&mut s, i == 0, *c, p);
    }
    s
}

/// Canonical text of an algebra.
pub fn emit_algebra(alg: &BoundQuiverAlgebra) -> String {
    let q = alg.quiver();
    let mut s = format!("field: {}\n", alg.field().p());
    s.push_str(&format!("vertices: {}\n", q.vertices().join(" ")));
    s.push_str("arrows:\n");
    for a in q.arrows() {
        s.push_str(&format!("  {}: {} -> {}\n", a.name, q.vertices()[a.source], q.vertices()[a.target]));
    }
    s.push_str("relations:\n");
    for r in alg.relations() {
        s.push_str(&format!("  {}\n", emit_relation(r)));
    }
    s
}

/// Module expression of the constructor form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleExpr {
    Simple(String),
    Projective(String),
    Injective(String),
    Zero,
    Sum(Vec<ModuleExpr>),
}

struct ExprParser<'a> {
    s: &'a [u8],
    pos: usize,
    line: usize,
}

impl ExprParser<'_> {
    fn ws(&mut self) {
        while self.pos < self.s.len() && (self.s[self.pos] as char).is_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.ws();
        if self.s.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), CliError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(parse_err(self.line, format!("expected `{}`", c as char)))
        }
    }

    fn ident(&mut self) -> Result<String, CliError> {
        self.ws();
        let start = self.pos;
        while self.pos < self.s.len() && !b"()[],".contains(&self.s[self.pos]) && !(self.s[self.pos] as char).is_whitespace() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(parse_err(self.line, "expected a name"));
        }
        Ok(String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    fn expr(&mut self) -> Result<ModuleExpr, CliError> {
        let head = self.ident()?;
        match head.as_str() {
            "0" => Ok(ModuleExpr::Zero),
            "sum" => {
                self.expect(b'[')?;
                let mut parts = Vec::new();
                if !self.eat(b']') {
                    loop {
                        parts.push(self.expr()?);
                        if self.eat(b']') {
                            break;
                        }
                        self.expect(b',')?;
                    }
                }
                Ok(ModuleExpr::Sum(parts))
            }
            "S" | "P" | "I" => {
                self.expect(b'(')?;
                let v = self.ident()?;
                self.expect(b')')?;
                Ok(match head.as_str() {
                    "S" => ModuleExpr::Simple(v),
                    "P" => ModuleExpr::Projective(v),
                    _ => ModuleExpr::Injective(v),
                })
            }
            other => Err(parse_err(self.line, format!("unknown module constructor `{other}`"))),
        }
    }
}

pub fn parse_module_expr(line: usize, text: &str) -> Result<ModuleExpr, CliError> {
    let mut p = ExprParser { s: text.as_bytes(), pos: 0, line };
    let e = p.expr()?;
    p.ws();
    if p.pos != p.s.len() {
        return Err(parse_err(line, "trailing input after module expression"));
    }
    Ok(e)
}

pub fn build_module_expr(alg: &Arc<BoundQuiverAlgebra>, e: &ModuleExpr, line: usize) -> Result<Representation, CliError> {
    let vertex = |v: &str| alg.quiver().vertex_index(v).map_err(|e| parse_err(line, e.to_string()));
    Ok(match e {
        ModuleExpr::Zero => Representation::zero(alg),
        ModuleExpr::Simple(v) => Representation::simple(alg, vertex(v)?),
        ModuleExpr::Projective(v) => Representation::projective(alg, vertex(v)?),
        ModuleExpr::Injective(v) => Representation::injective(alg, vertex(v)?),
        ModuleExpr::Sum(parts) => {
            let parts: Vec<_> = parts.iter().map(|p| build_module_expr(alg, p, line)).collect::<Result<_, _>>()?;
            direct_sum(alg, &parts).map_err(CliError::Core)?
        }
    })
}

pub fn parse_module(alg: &Arc<BoundQuiverAlgebra>, text: &str) -> Result<Representation, CliError> {
    let lines: Vec<(usize, &str)> = content_lines(text).collect();
    let Some(&(first_no, first)) = lines.first() else {
        return Err(parse_err(0, "empty module file"));
    };
    if !first.starts_with("dims") {
        if lines.len() > 1 {
            return Err(parse_err(lines[1].0, "constructor form takes a single expression"));
        }
        let e = parse_module_expr(first_no, first)?;
        return build_module_expr(alg, &e, first_no);
    }
    let q = alg.quiver();
    let f = alg.field();
    let (_, d) = first.split_once(':').ok_or_else(|| parse_err(first_no, "expected `dims:`"))?;
    let dims: Vec<usize> = words(d)
        .iter()
        .map(|w| w.parse().map_err(|_| parse_err(first_no, format!("bad dimension `{w}`"))))
        .collect::<Result<_, _>>()?;
    if dims.len() != q.num_vertices() {
        return Err(parse_err(
            first_no,
            format!("expected {} dimensions, got {}", q.num_vertices(), dims.len()),
        ));
    }
    let mut maps: Vec<Option<Matrix>> = vec![None; q.arrows().len()];
    for &(no, line) in &lines[1..] {
        let (name, body) = line.split_once(':').ok_or_else(|| parse_err(no, "expected `arrow: entries`"))?;
        let a = q.arrow_index(name.trim()).map_err(|e| parse_err(no, e.to_string()))?;
        if maps[a].is_some() {
            return Err(parse_err(no, format!("arrow `{}` given twice", name.trim())));
        }
        let (r, c) = (dims[q.arrows()[a].target], dims[q.arrows()[a].source]);
        let rows: Vec<&str> = body.split(';').map(str::trim).filter(|s| !s.is_empty()).collect();
        let mut entries = Vec::new();
        for row in &rows {
            let vals: Vec<i64> = words(row)
                .iter()
                .map(|w| w.parse().map_err(|_| parse_err(no, format!("bad entry `{w}`"))))
                .collect::<Result<_, _>>()?;
            if vals.len() != c {
                return Err(parse_err(no, format!("row has {} entries, expected {c}", vals.len())));
            }
            entries.extend(vals);
        }
        if rows.len() != r {
            return Err(parse_err(no, format!("matrix has {} rows, expected {r}", rows.len())));
        }
        maps[a] = Some(Matrix::from_entries(f, r, c, &entries).map_err(|e| parse_err(no, e.to_string()))?);
    }
    let maps = maps
        .into_iter()
        .zip(q.arrows())
        .map(|(m, a)| m.unwrap_or_else(|| Matrix::zeros(f, dims[a.target], dims[a.source])))
        .collect();
    Representation::new(alg.clone(), dims, maps).map_err(|e| parse_err(first_no, e.to_string()))
}

/// Explicit-form text of a module.
pub fn emit_module(m: &Representation) -> String {
    let q = m.algebra().quiver();
    let dims: Vec<String> = m.dims().iter().map(|d| d.to_string()).collect();
    let mut s = format!("dims: {}\n", dims.join(" "));
    for (a, mat) in q.arrows().iter().zip(m.arrow_maps()) {
        if mat.rows() == 0 || mat.cols() == 0 {
            continue;
        }
        let rows: Vec<String> = (0..mat.rows())
            .map(|r| (0..mat.cols()).map(|c| mat.get(r, c).to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        s.push_str(&format!("{}: {}\n", a.name, rows.join("; ")));
    }
    s
}
