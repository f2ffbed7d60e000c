//! Plain-text ribbon graph files.
//!
//! ```text
//! # theta graph
//! v: 1 2 3
//! v: 4 5 6
//! e: 1 4
//! e: 2 6
//! e: 3 5
//! ```
//!
//! Each `v:` line lists the darts of a vertex in counterclockwise order and
//! each `e:` line pairs two darts. Dart labels are arbitrary tokens.

use std::collections::HashMap;

use super::RibbonGraph;
use crate::error::{Error, Result};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_ribbon_graph(text: &str) -> Result<RibbonGraph> {
    let mut index: HashMap<&str, usize> = HashMap::new();
    let mut sigma: Vec<usize> = Vec::new();
    let mut edges: Vec<(usize, &str, &str)> = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (tag, rest) = line
            .split_once(':')
            .ok_or_else(|| parse_err(line_no, "expected `v:` or `e:`"))?;
        let labels: Vec<&str> = rest.split_whitespace().collect();
        match tag.trim() {
            "v" => {
                if labels.len() != 3 {
                    return Err(parse_err(
                        line_no,
                        format!("vertex has {} darts, expected 3", labels.len()),
                    ));
                }
                let base = sigma.len();
                for (k, l) in labels.iter().enumerate() {
                    if index.insert(l, base + k).is_some() {
                        return Err(parse_err(
                            line_no,
                            format!("dart `{l}` appears at two vertices"),
                        ));
                    }
                }
                sigma.extend([base + 1, base + 2, base]);
            }
            "e" => {
                if labels.len() != 2 {
                    return Err(parse_err(
                        line_no,
                        format!("edge has {} darts, expected 2", labels.len()),
                    ));
                }
                edges.push((line_no, labels[0], labels[1]));
            }
            other => return Err(parse_err(line_no, format!("unknown record `{other}`"))),
        }
    }
    let mut alpha = vec![usize::MAX; sigma.len()];
    for (line_no, a, b) in edges {
        let lookup = |l: &str| {
            index
                .get(l)
                .copied()
                .ok_or_else(|| parse_err(line_no, format!("dart `{l}` is not on any vertex")))
        };
        let (da, db) = (lookup(a)?, lookup(b)?);
        if da == db {
            return Err(parse_err(line_no, format!("dart `{a}` paired with itself")));
        }
        for d in [da, db] {
            if alpha[d] != usize::MAX {
                return Err(parse_err(line_no, "dart already belongs to an edge"));
            }
        }
        alpha[da] = db;
        alpha[db] = da;
    }
    if let Some(d) = alpha.iter().position(|&a| a == usize::MAX) {
        let label = index
            .iter()
            .find(|(_, &i)| i == d)
            .map(|(l, _)| *l)
            .unwrap_or("?");
        return Err(parse_err(
            last_line,
            format!("dart `{label}` is not on any edge"),
        ));
    }
    RibbonGraph::new(alpha, sigma)
}

/// Text form with darts numbered from 1.
pub fn write_ribbon_graph(g: &RibbonGraph) -> String {
    let mut out = String::new();
    for cyc in g.vertices() {
        let labels: Vec<String> = cyc.iter().map(|d| (d + 1).to_string()).collect();
        out.push_str(&format!("v: {}\n", labels.join(" ")));
    }
    for d in 0..g.darts() {
        let e = g.alpha()[d];
        if d < e {
            out.push_str(&format!("e: {} {}\n", d + 1, e + 1));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ribbon::canonical_form;

    const THETA: &str = "# theta\nv: a b c\nv: x y z\n\ne: a x\ne: b z  # comment\ne: c y\n";

    #[test]
    fn parses_theta() {
        let g = parse_ribbon_graph(THETA).unwrap();
        assert_eq!(canonical_form(&g), canonical_form(&RibbonGraph::theta()));
        assert_eq!(g.weight_gl_n().unwrap().poly_string(), "2*N^3 - 2*N");
    }

    #[test]
    fn round_trip() {
        for g in [
            RibbonGraph::theta(),
            RibbonGraph::dumbbell(),
            RibbonGraph::theta().mirror(),
        ] {
            let text = write_ribbon_graph(&g);
            let h = parse_ribbon_graph(&text).unwrap();
            assert_eq!(canonical_form(&h), canonical_form(&g));
            let again = write_ribbon_graph(&h);
            assert_eq!(parse_ribbon_graph(&again).unwrap(), h);
        }
    }

    #[test]
    fn reports_first_violation() {
        let cases = [
            ("v: 1 2\n", 1),
            ("v: 1 2 3\nv: 3 4 5\n", 2),
            ("v: 1 2 3\nq: 1 2\n", 2),
            ("v: 1 2 3\ne: 1 2\ne: 2 3\n", 3),
            ("v: 1 2 3\ne: 1 9\n", 2),
            ("v: 1 2 3\ne: 1 2\n", 2),
            ("v 1 2 3\n", 1),
        ];
        for (text, line) in cases {
            match parse_ribbon_graph(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }
}
