//! Plain-text file formats.
//!
//! All readers skip blank lines and strip `#` comments; tokens may be
//! separated by any whitespace. Errors carry 1-based line numbers.
//!
//! * graph: `n m`, then `m` lines `u v`
//! * embedding: one line per vertex, `v: w1 w2 ... wd` (clockwise)
//! * ordering: one vertex id per line
//! * lists: `v: c1 c2 ...`
//! * values (colorings, labelings): `v value`
//! * paint script: one round per line, the listed vertex ids

use std::fmt::Write as _;

use crate::error::{Error, Result};

use super::{Graph, PlaneGraph};

/// Non-empty content lines as `(line_number, tokens)`.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn number<T: std::str::FromStr>(token: &str, line: usize) -> Result<T> {
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected a number, found {token:?}"),
    })
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Splits `v: rest...` (the colon may also be attached to the first token of rest).
fn keyed<'a>(tokens: &[&'a str], line: usize) -> Result<(usize, Vec<&'a str>)> {
    let first = tokens[0];
    if let Some((key, rest)) = first.split_once(':') {
        let v = number(key, line)?;
        let mut values: Vec<&str> = Vec::new();
        if !rest.is_empty() {
            values.push(rest);
        }
        values.extend_from_slice(&tokens[1..]);
        Ok((v, values))
    } else if tokens.len() >= 2 && tokens[1].starts_with(':') {
        let v = number(first, line)?;
        let mut values: Vec<&str> = Vec::new();
        if tokens[1].len() > 1 {
            values.push(&tokens[1][1..]);
        }
        values.extend_from_slice(&tokens[2..]);
        Ok((v, values))
    } else {
        Err(parse_error(line, "expected \"v: ...\""))
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| parse_error(1, "missing header \"n m\""))?;
    if header.len() != 2 {
        return Err(parse_error(line, "header must be \"n m\""));
    }
    let n: usize = number(header[0], line)?;
    let m: usize = number(header[1], line)?;
    let mut edges = Vec::with_capacity(m);
    let mut last_line = line;
    for (line, tokens) in lines {
        if tokens.len() != 2 {
            return Err(parse_error(line, "edge line must be \"u v\""));
        }
        let (u, v): (usize, usize) = (number(tokens[0], line)?, number(tokens[1], line)?);
        Graph::from_edges(n, [(u, v)]).map_err(|e| parse_error(line, e.to_string()))?;
        edges.push((u, v));
        last_line = line;
    }
    if edges.len() != m {
        return Err(parse_error(
            last_line,
            format!("header promises {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, edges)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_embedding(g: Graph, text: &str) -> Result<PlaneGraph> {
    let n = g.vertex_count();
    let mut rotation: Vec<Option<Vec<usize>>> = vec![None; n];
    for (line, tokens) in content_lines(text) {
        let (v, rest) = keyed(&tokens, line)?;
        if v >= n {
            return Err(parse_error(line, format!("bad vertex {v}")));
        }
        if rotation[v].is_some() {
            return Err(parse_error(line, format!("vertex {v} listed twice")));
        }
        let rot = rest.iter().map(|t| number(t, line)).collect::<Result<Vec<usize>>>()?;
        rotation[v] = Some(rot);
    }
    let rotation = rotation
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or_else(|| Error::BadEmbedding(format!("no rotation for vertex {v}"))))
        .collect::<Result<Vec<_>>>()?;
    PlaneGraph::new(g, rotation)
}

pub fn write_embedding(pg: &PlaneGraph) -> String {
    let mut out = String::new();
    for v in 0..pg.graph().vertex_count() {
        write!(out, "{v}:").unwrap();
        for w in pg.rotation(v) {
            write!(out, " {w}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn parse_ordering(text: &str) -> Result<Vec<usize>> {
    content_lines(text)
        .map(|(line, tokens)| {
            if tokens.len() != 1 {
                return Err(parse_error(line, "expected one vertex id"));
            }
            number(tokens[0], line)
        })
        .collect()
}

pub fn write_ordering(order: &[usize]) -> String {
    order.iter().map(|v| format!("{v}\n")).collect()
}

/// Lists file; every vertex `0..n` must have a line.
pub fn parse_lists(text: &str, n: usize) -> Result<Vec<Vec<u32>>> {
    let mut lists: Vec<Option<Vec<u32>>> = vec![None; n];
    for (line, tokens) in content_lines(text) {
        let (v, rest) = keyed(&tokens, line)?;
        if v >= n {
            return Err(parse_error(line, format!("bad vertex {v}")));
        }
        let colors = rest.iter().map(|t| number(t, line)).collect::<Result<Vec<u32>>>()?;
        lists[v] = Some(colors);
    }
    lists
        .into_iter()
        .enumerate()
        .map(|(v, l)| l.ok_or_else(|| parse_error(0, format!("no list for vertex {v}"))))
        .collect()
}

pub fn write_lists(lists: &[Vec<u32>]) -> String {
    let mut out = String::new();
    for (v, list) in lists.iter().enumerate() {
        write!(out, "{v}:").unwrap();
        for c in list {
            write!(out, " {c}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn write_values(values: &[u32]) -> String {
    values.iter().enumerate().map(|(v, x)| format!("{v} {x}\n")).collect()
}

pub fn parse_values(text: &str, n: usize) -> Result<Vec<u32>> {
    let mut values = vec![None; n];
    for (line, tokens) in content_lines(text) {
        if tokens.len() != 2 {
            return Err(parse_error(line, "expected \"v value\""));
        }
        let v: usize = number(tokens[0], line)?;
        if v >= n {
            return Err(parse_error(line, format!("bad vertex {v}")));
        }
        values[v] = Some(number(tokens[1], line)?);
    }
    values
        .into_iter()
        .enumerate()
        .map(|(v, x)| x.ok_or_else(|| parse_error(0, format!("no value for vertex {v}"))))
        .collect()
}

pub fn parse_script(text: &str) -> Result<Vec<Vec<usize>>> {
    content_lines(text)
        .map(|(line, tokens)| tokens.iter().map(|t| number(t, line)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip_with_comments() {
        let text = "# path\n3 2\n0 1   # first\n\n1\t2\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g, Graph::path(3));
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn graph_errors_name_lines() {
        assert_eq!(
            parse_graph("3 2\n0 1\n1 x\n"),
            Err(Error::Parse {
                line: 3,
                message: "expected a number, found \"x\"".into()
            })
        );
        assert!(matches!(parse_graph("3 1\n0 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("3 2\n0 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("3 1\n0 5\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn embedding_forms() {
        let g = Graph::cycle(3);
        let pg = parse_embedding(g.clone(), "0: 2 1\n1 : 0 2\n2:1 0\n").unwrap();
        assert_eq!(pg.rotation(0), &[2, 1]);
        assert_eq!(pg.rotation(2), &[1, 0]);
        let again = parse_embedding(g.clone(), &write_embedding(&pg)).unwrap();
        assert_eq!(again, pg);
        assert!(matches!(parse_embedding(g, "0: 1 2\n"), Err(Error::BadEmbedding(_))));
    }

    #[test]
    fn lists_values_scripts() {
        let lists = parse_lists("0: 1 2\n1: 3\n", 2).unwrap();
        assert_eq!(lists, vec![vec![1, 2], vec![3]]);
        assert_eq!(parse_lists(&write_lists(&lists), 2).unwrap(), lists);
        assert_eq!(parse_values(&write_values(&[4, 0, 7]), 3).unwrap(), vec![4, 0, 7]);
        assert_eq!(
            parse_script("0 1 2\n# skip\n2\n").unwrap(),
            vec![vec![0, 1, 2], vec![2]]
        );
        assert_eq!(parse_ordering("2\n0\n1\n").unwrap(), vec![2, 0, 1]);
    }
}
