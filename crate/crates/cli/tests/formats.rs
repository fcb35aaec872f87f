use std::process::Command;

use proptest::prelude::*;
use stau_cli::format::*;
use stau_cli::{cmd_enumerate, cmd_extend, cmd_tau, Caps, CliError};
use stau_core::corpus;
use stau_core::rep::{are_isomorphic, Representation};

const A2: &str = include_str!("../fixtures/a2.alg");
const A3: &str = include_str!("../fixtures/a3.alg");
const B: &str = include_str!("../fixtures/b.alg");
const ONE: &str = include_str!("../fixtures/one.alg");

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn canonical_files_round_trip() {
    for text in [A2, A3, B, ONE] {
        assert_eq!(emit_algebra(&parse_algebra(text, None).unwrap()), text);
    }
    for (_, alg) in corpus::algebras() {
        let text = emit_algebra(&alg);
        let back = parse_algebra(&text, None).unwrap();
        assert_eq!(*back, *alg);
        assert_eq!(emit_algebra(&back), text);
    }
}

#[test]
fn loose_syntax_parses() {
    let text = "# the extension\n\nvertices: 1, 2 ,3\nfield:2\narrows: alpha : 1->2\n beta:2 -> 3  # last\nrelations:\n   alpha * beta\n";
    let alg = parse_algebra(text, None).unwrap();
    assert_eq!(emit_algebra(&alg), B);
}

#[test]
fn relation_terms() {
    let r = parse_relation(1, "a*b - 2*c*d").unwrap();
    assert_eq!(r.terms, vec![(1, vec!["a".into(), "b".into()]), (-2, vec!["c".into(), "d".into()])]);
    let r = parse_relation(1, "-a*b + c*d").unwrap();
    assert_eq!(emit_relation(&r), "-a*b + c*d");
    assert_eq!(emit_relation(&parse_relation(1, "3*x*y").unwrap()), "3*x*y");
}

#[test]
fn commutativity_relation() {
    let text = "field: 3\nvertices: 1 2 3 4\narrows:\n  a: 1 -> 2\n  b: 2 -> 4\n  c: 1 -> 3\n  d: 3 -> 4\nrelations:\n  a*b - c*d\n";
    let alg = parse_algebra(text, None).unwrap();
    assert_eq!(alg.dim(), 4 + 4 + 1);
    assert_eq!(emit_algebra(&alg), text);
}

fn line_of(e: CliError) -> (usize, String) {
    match e {
        CliError::Parse { line, msg } => (line, msg),
        other => panic!("expected a parse error, got {other}"),
    }
}

#[test]
fn parse_errors_carry_lines() {
    let (line, msg) = line_of(parse_algebra(include_str!("../fixtures/bad_relation.alg"), None).unwrap_err());
    assert_eq!(line, 7);
    assert!(msg.contains("not admissible"), "{msg}");

    let (line, _) = line_of(parse_algebra("vertices: 1 2\narrows:\n  a 1 -> 2\n", None).unwrap_err());
    assert_eq!(line, 3);
    let (line, msg) = line_of(parse_algebra("vertices: 1 2\narrows:\n  a: 1 -> 2\nrelations:\n  a*a\n", None).unwrap_err());
    assert_eq!(line, 5);
    assert!(msg.contains("compose"), "{msg}");
    let (line, _) = line_of(parse_algebra("vertices: 1\nbogus\n", None).unwrap_err());
    assert_eq!(line, 2);
    assert!(parse_algebra("field: 4\nvertices: 1\n", None).is_err());
    // a loop with no relation is infinite dimensional
    assert!(matches!(
        parse_algebra("vertices: 1\narrows:\n  x: 1 -> 1\n", None),
        Err(CliError::Core(_))
    ));
}

#[test]
fn module_forms() {
    let a = parse_algebra(A2, None).unwrap();
    let p2 = parse_module(&a, "P(2)").unwrap();
    assert_eq!(p2, Representation::projective(&a, 0));
    let explicit = parse_module(&a, "dims: 1 1\nbeta: 1\n").unwrap();
    assert!(are_isomorphic(&explicit, &p2).unwrap());
    let sum = parse_module(&a, "# two pieces\nsum[S(2), sum[I(3), 0]]").unwrap();
    assert_eq!(sum.dims(), &[2, 1]);
    assert!(parse_module(&a, "dims: 1 1\n").unwrap().arrow_maps()[0].is_zero());
    assert!(parse_module(&a, "S(7)").is_err());
    assert!(parse_module(&a, "dims: 1 1\nbeta: 1 1\n").is_err());
    assert!(parse_module(&a, "Q(2)").is_err());

    // explicit form must satisfy the relations
    let b = parse_algebra(B, None).unwrap();
    assert!(parse_module(&b, "dims: 1 1 1\nalpha: 1\nbeta: 1\n").is_err());
    for m in stau_core::oracle::path_uniserials(&b) {
        assert_eq!(parse_module(&b, &emit_module(&m)).unwrap(), m);
    }
}

#[test]
fn tau_and_extend_examples() {
    assert_eq!(cmd_tau(A2, "S(2)", None).unwrap(), "3\ndim: 0 1\n");
    assert_eq!(cmd_tau(A2, "P(2)", None).unwrap(), "0\ndim: 0 0\n");
    assert_eq!(cmd_tau(B, "S(2)", None).unwrap(), "3\ndim: 0 0 1\n");
    assert_eq!(cmd_extend(A2, "S(2)", None, "1").unwrap(), B);
    assert_eq!(cmd_extend(A2, "P(2)", None, "1").unwrap(), A3);
    let z = cmd_extend(A2, "0", None, "1").unwrap();
    assert_eq!(z, "field: 2\nvertices: 1 2 3\narrows:\n  beta: 2 -> 3\nrelations:\n");
    assert!(cmd_extend(A2, "S(2)", None, "3").is_err());
}

#[test]
fn one_vertex_enumeration() {
    let out = cmd_enumerate(ONE, None, Caps::default()).unwrap();
    assert_eq!(out.document.counts.nodes, 2);
    assert_eq!(out.document.counts.edges, 1);
    assert!(out.document.nodes[0].sincere);
    assert!(!out.document.nodes[1].sincere);
    assert_eq!(out.document.nodes[1].projective, ["1"]);
}

#[test]
fn field_flag_overrides_file() {
    let out = cmd_enumerate(A2, Some(3), Caps::default()).unwrap();
    assert_eq!(out.document.field, 3);
    assert_eq!(out.document.counts.nodes, 5);
}

/// Checks the DOT subset the tool emits against the DOT grammar:
/// `digraph ID { stmt* }` with node, edge and attribute statements.
fn dot_is_valid(src: &str) -> Result<(), String> {
    #[derive(Debug, PartialEq, Clone)]
    enum Tok {
        Id(String),
        Sym(char),
        Arrow,
    }
    let mut toks = Vec::new();
    let cs: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c == '"' {
            let mut s = String::new();
            i += 1;
            loop {
                match cs.get(i) {
                    None => return Err("unterminated string".into()),
                    Some('\\') => {
                        s.push(cs[i + 1]);
                        i += 2;
                    }
                    Some('"') => {
                        i += 1;
                        break;
                    }
                    Some(&ch) => {
                        s.push(ch);
                        i += 1;
                    }
                }
            }
            toks.push(Tok::Id(s));
        } else if c == '-' && cs.get(i + 1) == Some(&'>') {
            toks.push(Tok::Arrow);
            i += 2;
        } else if "{}[];=,".contains(c) {
            toks.push(Tok::Sym(c));
            i += 1;
        } else if c.is_alphanumeric() || c == '_' {
            let s: String = cs[i..].iter().take_while(|c| c.is_alphanumeric() || **c == '_').collect();
            i += s.chars().count();
            toks.push(Tok::Id(s));
        } else {
            return Err(format!("stray character {c:?}"));
        }
    }
    let mut p = 0;
    let id = |p: &mut usize| match toks.get(*p) {
        Some(Tok::Id(s)) => {
            *p += 1;
            Ok(s.clone())
        }
        t => Err(format!("expected identifier, got {t:?}")),
    };
    let sym = |p: &mut usize, c: char| {
        if toks.get(*p) == Some(&Tok::Sym(c)) {
            *p += 1;
            Ok(())
        } else {
            Err(format!("expected {c:?} at token {p}"))
        }
    };
    if id(&mut p)? != "digraph" {
        return Err("not a digraph".into());
    }
    if toks.get(p) != Some(&Tok::Sym('{')) {
        id(&mut p)?;
    }
    sym(&mut p, '{')?;
    let mut declared = std::collections::HashSet::new();
    while toks.get(p) != Some(&Tok::Sym('}')) {
        let head = id(&mut p)?;
        if toks.get(p) == Some(&Tok::Sym('=')) {
            p += 1;
            id(&mut p)?;
        } else {
            let mut ids = vec![head.clone()];
            while toks.get(p) == Some(&Tok::Arrow) {
                p += 1;
                ids.push(id(&mut p)?);
            }
            if ids.len() > 1 {
                for n in &ids {
                    if !declared.contains(n) {
                        return Err(format!("edge to undeclared node {n}"));
                    }
                }
            } else if !["node", "edge", "graph"].contains(&head.as_str()) {
                declared.insert(head);
            }
            if toks.get(p) == Some(&Tok::Sym('[')) {
                p += 1;
                while toks.get(p) != Some(&Tok::Sym(']')) {
                    id(&mut p)?;
                    sym(&mut p, '=')?;
                    id(&mut p)?;
                    if toks.get(p) == Some(&Tok::Sym(',')) || toks.get(p) == Some(&Tok::Sym(';')) {
                        p += 1;
                    }
                }
                p += 1;
            }
        }
        if toks.get(p) == Some(&Tok::Sym(';')) {
            p += 1;
        }
    }
    p += 1;
    if p != toks.len() {
        return Err("trailing tokens".into());
    }
    Ok(())
}

#[test]
fn dot_output_is_valid() {
    assert!(dot_is_valid("digraph { a -> }").is_err());
    assert!(dot_is_valid("digraph g { a [label=\"x\"]; }").is_ok());
    let mut texts = vec![A2.to_string(), B.to_string(), ONE.to_string()];
    texts.extend(corpus::algebras().iter().map(|(_, a)| emit_algebra(a)));
    for t in texts {
        let out = cmd_enumerate(&t, None, Caps::default()).unwrap();
        dot_is_valid(&out.dot).unwrap();
        assert_eq!(out.dot.matches("->").count(), out.document.counts.edges);
        let json: serde_json::Value = serde_json::from_str(&out.json).unwrap();
        assert_eq!(json["nodes"].as_array().unwrap().len(), out.document.counts.nodes);
        for (i, n) in json["nodes"].as_array().unwrap().iter().enumerate() {
            assert_eq!(n["id"], i);
        }
    }
}

fn stau(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_stau")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn exit_codes() {
    let (code, out) = stau(&["verify", &fixture("a2.alg"), &fixture("s2.mod"), "--vertex-name", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("counts: 12 >= 2*5"));
    let (code, out) = stau(&["verify", &fixture("a2.alg"), &fixture("p2.mod"), "--vertex-name", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("counts: 14 >= 2*5"));
    let (code, out) = stau(&["enumerate", &fixture("a3.alg"), "--max-nodes", "5", "--json", "-"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert_eq!(stau(&["enumerate", &fixture("bad_relation.alg")]).0, 3);
    assert_eq!(stau(&["tau", &fixture("a2.alg"), "/nonexistent.mod"]).0, 3);
    assert_eq!(stau(&["enumerate"]).0, 3);
    assert_eq!(stau(&["--help"]).0, 0);
    let (code, out) = stau(&["tau", &fixture("a2.alg"), &fixture("s2.mod")]);
    assert_eq!((code, out.as_str()), (0, "3\ndim: 0 1\n"));
}

proptest! {
    #[test]
    fn relations_round_trip(terms in prop::collection::vec(
        (-5i64..=5, prop::collection::vec("[a-z][a-z0-9]{0,3}", 2..5)), 1..4)
    ) {
        let terms: Vec<_> = terms.into_iter().filter(|t| t.0 != 0).collect();
        prop_assume!(!terms.is_empty());
        let r = stau_core::algebra::RelationSpec::new(terms);
        let text = emit_relation(&r);
        let back = parse_relation(1, &text).unwrap();
        prop_assert_eq!(&back, &r);
        prop_assert_eq!(emit_relation(&back), text);
    }

    #[test]
    fn linear_files_round_trip(n in 1usize..6, p in prop::sample::select(vec![2u32, 3, 5, 7]), rad2 in any::<bool>()) {
        let alg = if rad2 { corpus::linear_rad2(n.max(2), p) } else { corpus::linear_a(n, p) };
        let text = emit_algebra(&alg);
        let back = parse_algebra(&text, None).unwrap();
        prop_assert_eq!(&*back, &*alg);
        prop_assert_eq!(emit_algebra(&back), text);
    }
}
