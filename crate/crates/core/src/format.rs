//! The `gaingraph v1` text format.
//!
//! ```text
//! gaingraph v1
//! n 3
//! e 0 1 +1
//! e 1 2 angle:45
//! e 2 0 c:0.6,0.8   # comments run to end of line
//! ```
//!
//! Gains are `+1`, `-1`, `+i`, `-i`, `angle:<degrees>` or `c:<re>,<im>`.
//! Exact tokens round-trip verbatim; floating gains are written as `c:`
//! pairs with shortest round-trip decimals.

use crate::error::ParseError;
use crate::gain::{Gain, GainSpec};
use crate::graph::{build_graph, GainGraph};

pub const HEADER: &str = "gaingraph v1";

pub fn to_text(g: &GainGraph) -> String {
    let mut out = format!("{HEADER}\nn {}\n", g.order());
    for e in g.edges() {
        out.push_str(&format!("e {} {} {}\n", e.u, e.v, e.gain.token()));
    }
    out
}

pub fn parse_gain(token: &str) -> Result<GainSpec, String> {
    let number = |s: &str| s.trim().parse::<f64>().map_err(|_| format!("bad number {s:?} in gain {token:?}"));
    match token {
        "+1" | "1" => Ok(GainSpec::Token(Gain::ONE)),
        "-1" => Ok(GainSpec::Token(Gain::MINUS_ONE)),
        "+i" | "i" => Ok(GainSpec::Token(Gain::I)),
        "-i" => Ok(GainSpec::Token(Gain::MINUS_I)),
        _ => {
            if let Some(deg) = token.strip_prefix("angle:") {
                Ok(GainSpec::Angle(number(deg)?))
            } else if let Some(pair) = token.strip_prefix("c:") {
                let (re, im) = pair.split_once(',').ok_or_else(|| format!("gain {token:?} needs c:<re>,<im>"))?;
                Ok(GainSpec::Complex(number(re)?, number(im)?))
            } else {
                Err(format!("unknown gain token {token:?}"))
            }
        }
    }
}

pub fn parse(text: &str) -> Result<GainGraph, ParseError> {
    let err = |line: usize, message: String| ParseError { line, message };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (line, header) = lines.next().ok_or_else(|| err(1, "empty input".into()))?;
    if header.split_whitespace().collect::<Vec<_>>() != ["gaingraph", "v1"] {
        return Err(err(line, format!("expected header {HEADER:?}, found {header:?}")));
    }

    let (line, count) = lines.next().ok_or_else(|| err(line + 1, "missing vertex count line `n <N>`".into()))?;
    let order = match count.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", k] => k.parse::<usize>().map_err(|_| err(line, format!("bad vertex count {k:?}")))?,
        _ => return Err(err(line, format!("expected `n <N>`, found {count:?}"))),
    };

    let mut edges = Vec::new();
    let mut edge_lines = Vec::new();
    for (line, content) in lines {
        let fields: Vec<&str> = content.split_whitespace().collect();
        let ["e", u, v, gain] = fields[..] else {
            return Err(err(line, format!("expected `e <u> <v> <gain>`, found {content:?}")));
        };
        let vertex = |s: &str| s.parse::<usize>().map_err(|_| err(line, format!("bad vertex id {s:?}")));
        let gain = parse_gain(gain).map_err(|m| err(line, m))?;
        edges.push((vertex(u)?, vertex(v)?, gain));
        edge_lines.push(line);
    }

    // Validate edge by edge so errors point at the offending line.
    for k in 0..edges.len() {
        if let Err(e) = build_graph(order, &edges[..=k]) {
            return Err(err(edge_lines[k], e.to_string()));
        }
    }
    build_graph(order, &edges).map_err(|e| err(line, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn round_trip_exact_and_float() {
        let g = cycle_with_gains(&[Gain::ONE, Gain::I, Gain::from_angle_degrees(33.3).unwrap(), Gain::MINUS_I]);
        let text = to_text(&g);
        assert!(text.contains(" +i\n") && text.contains(" -i\n"));
        assert!(parse(&text).unwrap().graph_eq(&g));
        assert!(parse(&to_text(&GainGraph::empty(0))).unwrap().graph_eq(&GainGraph::empty(0)));
    }

    #[test]
    fn accepts_all_gain_forms_and_comments() {
        let text = "# a triangle\ngaingraph v1\nn 3\ne 0 1 +1  # first\n\ne 1 2 angle:90\ne 2 0 c:0.6,0.8\n";
        let g = parse(text).unwrap();
        assert_eq!(g.size(), 3);
        assert_eq!(g.gain(1, 2), Some(Gain::I));
        assert!((g.gain(2, 0).unwrap().re() - 0.6).abs() < 1e-15);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("", 1),
            ("graph v2\n", 1),
            ("gaingraph v1\nm 3\n", 2),
            ("gaingraph v1\nn 3\ne 0 1 +2\n", 3),
            ("gaingraph v1\nn 3\ne 0 1 +1\ne 1 1 +1\n", 4),
            ("gaingraph v1\nn 3\ne 0 1 +1\ne 1 0 -1\n", 4),
            ("gaingraph v1\nn 3\ne 0 5 +1\n", 3),
            ("gaingraph v1\nn 2\ne 0 1 c:0.5,0.5\n", 3),
            ("gaingraph v1\nn 2\ne 0 1\n", 3),
        ];
        for (text, line) in cases {
            let e = parse(text).unwrap_err();
            assert_eq!(e.line, line, "{text:?}: {e}");
        }
    }
}
