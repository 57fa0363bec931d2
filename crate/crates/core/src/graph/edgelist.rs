//! Plain edge-list text: first line `n`, then one `u v` pair per line,
//! 0-indexed. Blank lines and `#` comments are ignored.

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, head) = lines.next().ok_or(Error::EdgeList { line: 0, msg: "missing vertex count".into() })?;
    let n: usize = head
        .parse()
        .map_err(|_| Error::EdgeList { line, msg: format!("bad vertex count {head:?}") })?;
    let mut g = Graph::empty(n)?;
    for (line, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::EdgeList { line, msg: format!("expected two vertices, found {:?}", l) });
        }
        let parse = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| Error::EdgeList { line, msg: format!("bad vertex {t:?}") })
        };
        let (u, v) = (parse(toks[0])?, parse(toks[1])?);
        g.try_add_edge(u, v)
            .map_err(|e| Error::EdgeList { line, msg: e.to_string() })?;
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints() {
        let g = parse_edge_list("4\n0 1\n# comment\n1 2\n\n2 3 \n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(to_edge_list(&g), "4\n0 1\n1 2\n2 3\n");
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn reports_line_numbers() {
        assert_eq!(
            parse_edge_list("3\n0 1\n0 5\n").unwrap_err(),
            Error::EdgeList { line: 3, msg: "vertex 5 out of range for order 3".into() }
        );
        assert!(matches!(parse_edge_list("3\n0 1 2\n"), Err(Error::EdgeList { line: 2, .. })));
        assert!(parse_edge_list("").is_err());
    }
}
