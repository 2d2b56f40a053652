//! Coloring file formats.
//!
//! Text: a header line `n k`, then one line `u v c` per edge with `u < v`,
//! sorted by `(u, v)`, LF-terminated. JSON: `{"n":..,"k":..,"edges":[[u,v,c],..]}`
//! with the same edge order.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{FormatError, ModelError};
use crate::model::{choose2, Color, Coloring, Verdict, VerdictTag};

pub fn to_text(c: &Coloring) -> String {
    let mut out = String::with_capacity(12 * c.edge_count() + 16);
    let _ = write!(out, "{} {}", c.n(), c.k());
    for (u, v, col) in c.edges_lex() {
        let _ = write!(out, "\n{u} {v} {col}");
    }
    out.push('\n');
    out
}

fn parse_fields<const N: usize>(line: &str, lineno: usize) -> Result<[usize; N], FormatError> {
    let mut out = [0usize; N];
    let mut fields = line.split(' ');
    for slot in out.iter_mut() {
        let tok = fields.next().ok_or_else(|| FormatError::Parse {
            line: lineno,
            msg: format!("expected {N} fields"),
        })?;
        if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
            return Err(FormatError::Parse {
                line: lineno,
                msg: format!("bad integer {tok:?}"),
            });
        }
        *slot = tok.parse().map_err(|e| FormatError::Parse {
            line: lineno,
            msg: format!("{e}"),
        })?;
    }
    if fields.next().is_some() {
        return Err(FormatError::Parse {
            line: lineno,
            msg: format!("expected {N} fields"),
        });
    }
    Ok(out)
}

pub fn from_text(text: &str) -> Result<Coloring, FormatError> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    let mut lines = body.split('\n');
    let header = lines.next().ok_or(FormatError::Parse {
        line: 1,
        msg: "empty input".into(),
    })?;
    let [n, k] = parse_fields::<2>(header, 1)?;
    let total = choose2(n);
    let mut triples = Vec::with_capacity(total);
    let mut prev: Option<(usize, usize)> = None;
    for (idx, line) in lines.enumerate() {
        let lineno = idx + 2;
        let [u, v, c] = parse_fields::<3>(line, lineno)?;
        if !(u < v && v < n) {
            return Err(FormatError::Parse {
                line: lineno,
                msg: format!("edge ({u},{v}) outside 0 <= u < v < {n}"),
            });
        }
        if c == 0 || c > k {
            return Err(FormatError::Invariant(ModelError::ColorOutOfRange(
                c.min(Color::MAX as usize) as Color,
            )));
        }
        if prev.is_some_and(|p| p >= (u, v)) {
            return Err(FormatError::Parse {
                line: lineno,
                msg: format!("edge ({u},{v}) out of order"),
            });
        }
        // in sorted order, the expected edge at this position is the next one in lex order
        let expected = next_lex(prev, n);
        if expected != Some((u, v)) {
            let (a, b) = expected.unwrap_or((u, v));
            return Err(FormatError::Parse {
                line: lineno,
                msg: format!("edge ({a},{b}) missing"),
            });
        }
        prev = Some((u, v));
        triples.push((u, v, c as Color));
    }
    if triples.len() != total {
        let (a, b) = next_lex(prev, n).unwrap_or((0, 0));
        return Err(FormatError::Parse {
            line: triples.len() + 2,
            msg: format!("edge ({a},{b}) missing"),
        });
    }
    let coloring = Coloring::from_edges(n, triples)?;
    if coloring.k() != k {
        return Err(FormatError::Invariant(ModelError::PhantomColor(
            (coloring.k() + 1) as Color,
        )));
    }
    Ok(coloring)
}

fn next_lex(prev: Option<(usize, usize)>, n: usize) -> Option<(usize, usize)> {
    match prev {
        None if n >= 2 => Some((0, 1)),
        None => None,
        Some((u, v)) if v + 1 < n => Some((u, v + 1)),
        Some((u, _)) if u + 2 < n => Some((u + 1, u + 2)),
        Some(_) => None,
    }
}

#[derive(Serialize, Deserialize)]
struct JsonColoring {
    n: usize,
    k: usize,
    edges: Vec<[usize; 3]>,
}

pub fn to_json(c: &Coloring) -> String {
    let doc = JsonColoring {
        n: c.n(),
        k: c.k(),
        edges: c.edges_lex().map(|(u, v, col)| [u, v, col as usize]).collect(),
    };
    serde_json::to_string(&doc).expect("serializable")
}

pub fn from_json(text: &str) -> Result<Coloring, FormatError> {
    let doc: JsonColoring = serde_json::from_str(text)?;
    // re-emit as text so both formats share one validator
    let mut buf = String::new();
    let _ = write!(buf, "{} {}", doc.n, doc.k);
    for [u, v, c] in &doc.edges {
        let _ = write!(buf, "\n{u} {v} {c}");
    }
    from_text(&buf)
}

/// Reads either format, dispatching on the first non-blank byte.
pub fn from_any(text: &str) -> Result<Coloring, FormatError> {
    if text.trim_start().starts_with('{') {
        from_json(text)
    } else {
        from_text(text)
    }
}

pub fn to_dot(c: &Coloring) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..c.n() {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v, col) in c.edges_lex() {
        let _ = writeln!(out, "  {u} -- {v} [color={col}];");
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct JsonVerdict {
    tag: VerdictTag,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<JsonColoring>,
    nodes_explored: u64,
}

pub fn verdict_to_json(v: &Verdict) -> String {
    let doc = JsonVerdict {
        tag: v.tag,
        witness: v.witness.as_ref().map(|c| JsonColoring {
            n: c.n(),
            k: c.k(),
            edges: c.edges_lex().map(|(a, b, col)| [a, b, col as usize]).collect(),
        }),
        nodes_explored: v.nodes_explored,
    };
    serde_json::to_string(&doc).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn monochromatic_k3_text() {
        assert_eq!(to_text(&Coloring::monochromatic(3)), "3 1\n0 1 1\n0 2 1\n1 2 1\n");
    }

    #[test]
    fn missing_edge_is_parse_error() {
        let err = from_text("3 1\n0 2 1\n1 2 1\n").unwrap_err();
        match err {
            FormatError::Parse { line, msg } => {
                assert_eq!(line, 2);
                assert!(msg.contains("(0,1) missing"), "{msg}");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            from_text("3 1\n0 1 1\n0 2 1\n"),
            Err(FormatError::Parse { line: 4, .. })
        ));
    }

    #[test]
    fn color_out_of_range() {
        assert!(matches!(
            from_text("3 1\n0 1 1\n0 2 2\n1 2 1\n"),
            Err(FormatError::Invariant(ModelError::ColorOutOfRange(2)))
        ));
    }

    #[test]
    fn phantom_color_in_header() {
        assert!(matches!(
            from_text("3 2\n0 1 1\n0 2 1\n1 2 1\n"),
            Err(FormatError::Invariant(ModelError::PhantomColor(2)))
        ));
    }

    #[test]
    fn rejects_crlf_and_garbage() {
        assert!(from_text("3 1\r\n0 1 1\r\n0 2 1\r\n1 2 1\r\n").is_err());
        assert!(from_text("3 1\n0 1 x\n0 2 1\n1 2 1\n").is_err());
        assert!(from_text("").is_err());
    }

    #[test]
    fn json_matches_text() {
        let c = Coloring::from_fn(4, |u, v| ((u + v) % 2 + 1) as Color).unwrap();
        let json = to_json(&c);
        assert!(json.starts_with("{\"n\":4,\"k\":2,\"edges\":[[0,1,2],[0,2,1]"));
        assert_eq!(from_any(&json).unwrap(), c);
    }

    #[test]
    fn small_graphs() {
        for n in 0..3 {
            let c = Coloring::from_fn(n, |_, _| 1).unwrap();
            assert_eq!(from_text(&to_text(&c)).unwrap(), c);
        }
        assert_eq!(to_text(&Coloring::from_fn(1, |_, _| 1).unwrap()), "1 0\n");
    }

    #[test]
    fn dot_lists_every_edge() {
        let dot = to_dot(&Coloring::monochromatic(3));
        assert!(dot.contains("  1 -- 2 [color=1];\n"));
        assert_eq!(dot.matches("--").count(), 3);
    }

    fn arb_coloring() -> impl Strategy<Value = Coloring> {
        (1usize..12, 1u16..6).prop_flat_map(|(n, k)| {
            proptest::collection::vec(1..=k, choose2(n))
                .prop_map(move |cols| Coloring::compacted(n, cols).unwrap())
        })
    }

    proptest! {
        #[test]
        fn text_and_json_roundtrip(c in arb_coloring()) {
            let text = to_text(&c);
            let back = from_text(&text).unwrap();
            prop_assert_eq!(&back, &c);
            prop_assert_eq!(to_text(&back), text);
            prop_assert_eq!(from_json(&to_json(&c)).unwrap(), c);
        }
    }
}
