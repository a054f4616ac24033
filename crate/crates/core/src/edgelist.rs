//! Plain-text edge lists.
//!
//! ```text
//! # comment lines start with '#'
//! <n> <m>
//! <u> <v>      (m lines, 0 <= u < v < n)
//! ```
//!
//! Writing emits edges in ascending lexicographic order with `\n` line
//! endings. Reading accepts either endpoint order and any whitespace.

use std::io::{self, BufRead, Write};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn write_edge_list<W: Write>(g: &Graph, mut w: W) -> io::Result<()> {
    writeln!(w, "{} {}", g.n(), g.m())?;
    for e in g.edges() {
        writeln!(w, "{} {}", e.u(), e.v())?;
    }
    w.flush()
}

pub fn to_edge_list_string(g: &Graph) -> String {
    let mut buf = Vec::new();
    write_edge_list(g, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("edge lists are ASCII")
}

fn parse_pair(text: &str, line: usize) -> Result<(usize, usize)> {
    let mut fields = text.split_whitespace();
    let mut next = |name: &str| -> Result<usize> {
        let field = fields.next().ok_or_else(|| Error::Parse {
            line,
            message: format!("missing {name}"),
        })?;
        field.parse().map_err(|_| Error::Parse {
            line,
            message: format!("{name} {field:?} is not a nonnegative integer"),
        })
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if let Some(extra) = fields.next() {
        return Err(Error::Parse {
            line,
            message: format!("unexpected trailing field {extra:?}"),
        });
    }
    Ok((a, b))
}

pub fn read_edge_list<R: BufRead>(r: R) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (idx, line) in r.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = line.map_err(|e| Error::Parse {
            line: line_no,
            message: e.to_string(),
        })?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let pair = parse_pair(text, line_no)?;
        let Some((n, m)) = header else {
            header = Some(pair);
            continue;
        };
        if edges.len() == m {
            return Err(Error::Parse {
                line: line_no,
                message: format!("more than the {m} edges announced in the header"),
            });
        }
        if pair.0 >= n || pair.1 >= n {
            return Err(Error::Parse {
                line: line_no,
                message: Error::VertexOutOfRange(pair.0, pair.1, n).to_string(),
            });
        }
        edges.push(pair);
    }
    let (n, m) = header.ok_or(Error::Parse {
        line: last_line,
        message: "missing header".into(),
    })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: last_line,
            message: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edge_list(n, &edges)
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    read_edge_list(text.as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finitefield::PrimeModulus;
    use proptest::prelude::*;

    #[test]
    fn writes_canonical_form() {
        let g = Graph::from_edge_list(4, &[(2, 3), (1, 0), (0, 2)]).unwrap();
        assert_eq!(to_edge_list_string(&g), "4 3\n0 1\n0 2\n2 3\n");
        assert_eq!(to_edge_list_string(&Graph::empty(3)), "3 0\n");
    }

    #[test]
    fn header_counts_for_generators() {
        let p13 = Graph::paley(PrimeModulus::new(13).unwrap()).unwrap();
        assert!(to_edge_list_string(&p13).starts_with("13 39\n"));
        let r3 = Graph::ring_of_cliques(3).unwrap();
        assert!(to_edge_list_string(&r3).starts_with("9 18\n"));
    }

    #[test]
    fn reads_comments_and_loose_whitespace() {
        let text = "# path\n3   2\n\n  1\t0 \n# middle\n1 2\n";
        assert_eq!(parse_edge_list(text).unwrap(), Graph::path(3));
    }

    #[test]
    fn rejects_malformed_input() {
        let cases = [
            ("", "missing header"),
            ("3 2\n0 1\n", "announces 2"),
            ("3 1\n0 1\n1 2\n", "more than"),
            ("3 1\n0 x\n", "not a nonnegative"),
            ("3 1\n0\n", "missing second"),
            ("3 1\n0 1 2\n", "trailing"),
            ("3 1\n0 3\n", "outside"),
        ];
        for (text, needle) in cases {
            let err = parse_edge_list(text).unwrap_err().to_string();
            assert!(err.contains(needle), "{text:?}: {err}");
        }
        assert_eq!(parse_edge_list("2 1\n1 1\n"), Err(Error::Loop(1)));
        assert_eq!(
            parse_edge_list("3 2\n0 1\n1 0\n"),
            Err(Error::DuplicateEdge(0, 1))
        );
    }

    proptest! {
        #[test]
        fn write_then_read_is_identity(n in 0usize..15, frac in 0.0f64..=1.0, seed: u64) {
            let m = (frac * (n * n.saturating_sub(1) / 2) as f64) as usize;
            let g = Graph::random(n, m, seed).unwrap();
            let text = to_edge_list_string(&g);
            prop_assert_eq!(parse_edge_list(&text).unwrap(), g.clone());
            prop_assert_eq!(to_edge_list_string(&parse_edge_list(&text).unwrap()), text);
        }
    }
}
