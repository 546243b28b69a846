//! Graph expressions.
//!
//! ```text
//! expr := ident '(' args ')' | '@' path
//! args := expr (',' expr)* | int (',' int)*
//! ```
//!
//! Constructors take integers: `path(k)`, `cycle(k)`, `complete(k)`,
//! `kbip(a,b)`, `fan(k)`, `wheel(k)`. Operators take expressions:
//! `complement(e)`, `union(e,e)`, `intersect(e,e)`, `join(e,e)`,
//! `ringsum(e,e)`. `@path` loads a graph file; the path runs up to the next
//! `,`, `)` or whitespace.

use std::fmt;
use std::path::PathBuf;

use thiserror::Error;
use weak_iasi::graph::{
    complement, graph_intersection, graph_join, graph_union, make_complete,
    make_complete_bipartite, make_cycle, make_fan, make_path, make_wheel, ring_sum,
};
use weak_iasi::io::{read_graph, FormatError};
use weak_iasi::{Graph, GraphError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphExpr {
    Path(u32),
    Cycle(u32),
    Complete(u32),
    Kbip(u32, u32),
    Fan(u32),
    Wheel(u32),
    Complement(Box<GraphExpr>),
    Union(Box<GraphExpr>, Box<GraphExpr>),
    Intersect(Box<GraphExpr>, Box<GraphExpr>),
    Join(Box<GraphExpr>, Box<GraphExpr>),
    Ringsum(Box<GraphExpr>, Box<GraphExpr>),
    File(PathBuf),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnknownIdent(String),
    Arity {
        ident: &'static str,
        expected: &'static str,
        found: String,
    },
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("column {column}: {kind}")]
pub struct ParseError {
    /// 1-based, counted in characters.
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Syntax(msg) => f.write_str(msg),
            ParseErrorKind::UnknownIdent(id) => write!(f, "unknown identifier `{id}`"),
            ParseErrorKind::Arity {
                ident,
                expected,
                found,
            } => {
                write!(f, "`{ident}` takes {expected}, found {found}")
            }
        }
    }
}

#[derive(Copy, Clone)]
enum Arity {
    Ints(usize),
    Exprs(usize),
}

const IDENTS: &[(&str, Arity)] = &[
    ("path", Arity::Ints(1)),
    ("cycle", Arity::Ints(1)),
    ("complete", Arity::Ints(1)),
    ("kbip", Arity::Ints(2)),
    ("fan", Arity::Ints(1)),
    ("wheel", Arity::Ints(1)),
    ("complement", Arity::Exprs(1)),
    ("union", Arity::Exprs(2)),
    ("intersect", Arity::Exprs(2)),
    ("join", Arity::Exprs(2)),
    ("ringsum", Arity::Exprs(2)),
];

enum Args {
    Ints(Vec<u32>),
    Exprs(Vec<GraphExpr>),
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn err(&self, column: usize, kind: ParseErrorKind) -> ParseError {
        ParseError { column, kind }
    }

    fn syntax(&self, msg: impl Into<String>) -> ParseError {
        self.err(self.pos + 1, ParseErrorKind::Syntax(msg.into()))
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, want: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(self.syntax(format!("expected `{want}`, found `{c}`"))),
            None => Err(self.syntax(format!("expected `{want}`, found end of input"))),
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> String {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|&c| pred(c)) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn expr(&mut self) -> Result<GraphExpr, ParseError> {
        match self.peek() {
            Some('@') => {
                self.pos += 1;
                let path =
                    self.take_while(|c| !c.is_whitespace() && c != ',' && c != ')' && c != '(');
                if path.is_empty() {
                    return Err(self.syntax("expected a file path after `@`"));
                }
                Ok(GraphExpr::File(PathBuf::from(path)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let column = self.pos + 1;
                let ident = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
                let Some(&(name, arity)) = IDENTS.iter().find(|(n, _)| *n == ident) else {
                    return Err(self.err(column, ParseErrorKind::UnknownIdent(ident)));
                };
                self.expect('(')?;
                let args = self.args()?;
                self.expect(')')?;
                build(name, arity, args).map_err(|kind| self.err(column, kind))
            }
            Some(c) => Err(self.syntax(format!("expected an expression, found `{c}`"))),
            None => Err(self.syntax("expected an expression, found end of input")),
        }
    }

    fn int(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        let column = self.pos + 1;
        let digits = self.take_while(|c| c.is_ascii_digit());
        digits.parse().map_err(|_| {
            self.err(
                column,
                ParseErrorKind::Syntax(format!("integer `{digits}` is out of range")),
            )
        })
    }

    fn args(&mut self) -> Result<Args, ParseError> {
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let mut ints = vec![self.int()?];
            while self.peek() == Some(',') {
                self.pos += 1;
                if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    return Err(self.syntax("expected a non-negative integer"));
                }
                ints.push(self.int()?);
            }
            Ok(Args::Ints(ints))
        } else {
            let mut exprs = vec![self.expr()?];
            while self.peek() == Some(',') {
                self.pos += 1;
                exprs.push(self.expr()?);
            }
            Ok(Args::Exprs(exprs))
        }
    }
}

fn build(name: &'static str, arity: Arity, args: Args) -> Result<GraphExpr, ParseErrorKind> {
    let mismatch = |found: String| {
        let expected = match arity {
            Arity::Ints(1) => "1 integer",
            Arity::Ints(_) => "2 integers",
            Arity::Exprs(1) => "1 graph expression",
            Arity::Exprs(_) => "2 graph expressions",
        };
        ParseErrorKind::Arity {
            ident: name,
            expected,
            found,
        }
    };
    match (arity, args) {
        (Arity::Ints(k), Args::Ints(v)) if v.len() == k => Ok(match (name, &v[..]) {
            ("path", &[k]) => GraphExpr::Path(k),
            ("cycle", &[k]) => GraphExpr::Cycle(k),
            ("complete", &[k]) => GraphExpr::Complete(k),
            ("kbip", &[a, b]) => GraphExpr::Kbip(a, b),
            ("fan", &[k]) => GraphExpr::Fan(k),
            ("wheel", &[k]) => GraphExpr::Wheel(k),
            _ => unreachable!("arity table and constructors disagree"),
        }),
        (Arity::Exprs(k), Args::Exprs(v)) if v.len() == k => {
            let mut it = v.into_iter().map(Box::new);
            let mut next = || it.next().unwrap();
            Ok(match name {
                "complement" => GraphExpr::Complement(next()),
                "union" => GraphExpr::Union(next(), next()),
                "intersect" => GraphExpr::Intersect(next(), next()),
                "join" => GraphExpr::Join(next(), next()),
                "ringsum" => GraphExpr::Ringsum(next(), next()),
                _ => unreachable!("arity table and operators disagree"),
            })
        }
        (_, Args::Ints(v)) => Err(mismatch(format!("{} integer(s)", v.len()))),
        (_, Args::Exprs(v)) => Err(mismatch(format!("{} graph expression(s)", v.len()))),
    }
}

pub fn parse_expr(text: &str) -> Result<GraphExpr, ParseError> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
    };
    let e = p.expr()?;
    if let Some(c) = p.peek() {
        return Err(p.syntax(format!("unexpected `{c}` after expression")));
    }
    Ok(e)
}

#[derive(Debug, Error)]
pub enum EvalError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format { path: String, source: FormatError },
}

/// Evaluates `e`. Each join shifts its right operand past the left
/// operand's largest id; a line describing the shift is pushed to `notes`.
pub fn eval_expr(e: &GraphExpr, notes: &mut Vec<String>) -> Result<Graph, EvalError> {
    Ok(match e {
        GraphExpr::Path(k) => make_path(*k)?,
        GraphExpr::Cycle(k) => make_cycle(*k)?,
        GraphExpr::Complete(k) => make_complete(*k)?,
        GraphExpr::Kbip(a, b) => make_complete_bipartite(*a, *b)?,
        GraphExpr::Fan(k) => make_fan(*k)?,
        GraphExpr::Wheel(k) => make_wheel(*k)?,
        GraphExpr::Complement(a) => complement(&eval_expr(a, notes)?),
        GraphExpr::Union(a, b) => graph_union(&eval_expr(a, notes)?, &eval_expr(b, notes)?),
        GraphExpr::Intersect(a, b) => {
            graph_intersection(&eval_expr(a, notes)?, &eval_expr(b, notes)?)
        }
        GraphExpr::Ringsum(a, b) => ring_sum(&eval_expr(a, notes)?, &eval_expr(b, notes)?),
        GraphExpr::Join(a, b) => {
            let left = eval_expr(a, notes)?;
            let right = eval_expr(b, notes)?;
            let offset = left.max_id().map_or(0, |v| v.0 + 1);
            if let (Some(lo), Some(hi)) = (right.vertices().next(), right.max_id()) {
                notes.push(format!(
                    "join: right operand ids {}..={} -> {}..={}",
                    lo.0,
                    hi.0,
                    u64::from(lo.0) + u64::from(offset),
                    u64::from(hi.0) + u64::from(offset)
                ));
            }
            graph_join(&left, &right.shifted(offset)?)?
        }
        GraphExpr::File(path) => {
            let shown = path.display().to_string();
            let text = std::fs::read_to_string(path).map_err(|source| EvalError::Io {
                path: shown.clone(),
                source,
            })?;
            read_graph(&text).map_err(|source| EvalError::Format {
                path: shown,
                source,
            })?
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(text: &str) -> Result<Graph, EvalError> {
        eval_expr(&parse_expr(text).unwrap(), &mut Vec::new())
    }

    fn err(text: &str) -> ParseError {
        parse_expr(text).unwrap_err()
    }

    #[test]
    fn parses_nested() {
        assert_eq!(
            parse_expr(" join( cycle(5) ,complete(1) ) ").unwrap(),
            GraphExpr::Join(
                Box::new(GraphExpr::Cycle(5)),
                Box::new(GraphExpr::Complete(1))
            )
        );
        assert_eq!(
            parse_expr("union(@a.gr,@dir/b.gr)").unwrap(),
            GraphExpr::Union(
                Box::new(GraphExpr::File("a.gr".into())),
                Box::new(GraphExpr::File("dir/b.gr".into()))
            )
        );
        assert_eq!(parse_expr("kbip(2, 3)").unwrap(), GraphExpr::Kbip(2, 3));
    }

    #[test]
    fn syntax_errors_carry_columns() {
        assert_eq!(err("cycle(5").column, 8);
        assert_eq!(err("cycle(-1)").column, 7);
        assert_eq!(err("cycle(5))").column, 9);
        assert_eq!(err("").column, 1);
        assert_eq!(err("path(1,)").column, 8);
        assert_eq!(err("@").column, 2);
        assert!(matches!(
            err("cycle(99999999999)").kind,
            ParseErrorKind::Syntax(_)
        ));
    }

    #[test]
    fn identifiers_are_lowercase_only() {
        let e = err("union(cycle(3),Cycle(3))");
        assert_eq!(e.column, 16);
        assert_eq!(e.kind, ParseErrorKind::UnknownIdent("Cycle".into()));
        assert!(matches!(
            err("star(3)").kind,
            ParseErrorKind::UnknownIdent(_)
        ));
    }

    #[test]
    fn arity_is_checked() {
        for text in [
            "path(1,2)",
            "kbip(3)",
            "complement(3)",
            "join(cycle(3))",
            "cycle(path(2))",
        ] {
            assert!(
                matches!(err(text).kind, ParseErrorKind::Arity { .. }),
                "{text}"
            );
        }
        assert_eq!(err("x(1)").to_string(), "column 1: unknown identifier `x`");
        assert_eq!(
            err("kbip(3)").to_string(),
            "column 1: `kbip` takes 2 integers, found 1 integer(s)"
        );
    }

    #[test]
    fn evaluates_examples() {
        let w = eval("join(cycle(5),complete(1))").unwrap();
        assert_eq!((w.vertex_count(), w.edge_count()), (6, 10));
        assert_eq!(w, eval("wheel(5)").unwrap());
        assert!(eval("ringsum(cycle(4),cycle(4))").unwrap().is_empty());
        assert!(matches!(
            eval("path(0)"),
            Err(EvalError::Graph(GraphError::InvalidParameter(_)))
        ));
        let f = eval("fan(5)").unwrap();
        assert_eq!((f.vertex_count(), f.edge_count()), (6, 9));
        assert_eq!(eval("complement(complete(4))").unwrap().edge_count(), 0);
        assert!(matches!(
            eval("@/nonexistent/x.gr"),
            Err(EvalError::Io { .. })
        ));
    }

    #[test]
    fn join_records_shift() {
        let mut notes = Vec::new();
        let g = eval_expr(&parse_expr("join(path(2),path(3))").unwrap(), &mut notes).unwrap();
        assert_eq!(notes, ["join: right operand ids 0..=2 -> 2..=4"]);
        assert_eq!(g.edge_count(), 1 + 2 + 6);
    }
}
