//! Line-oriented text formats.
//!
//! Diagram:
//! ```text
//! # comment
//! arcs 3
//! loops 0
//! x + 2 0 1
//! ```
//! Coloring: one `arc <i> <element>` line per colorable arc.

use std::fmt::Write;

use crate::diagram::{Crossing, Diagram, Sign};
use crate::error::{ParseError, Result};
use crate::group::S3Element;
use crate::solver::Coloring;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("");
        let fields: Vec<&str> = line.split_whitespace().collect();
        (!fields.is_empty()).then_some((i + 1, fields))
    })
}

fn parse_count(line: usize, field: &str, what: &str) -> Result<usize, ParseError> {
    field
        .parse()
        .map_err(|_| ParseError::syntax(line, format!("expected a non-negative {what}, got {field:?}")))
}

pub fn parse_diagram(text: &str) -> Result<Diagram> {
    let mut lines = content_lines(text).peekable();
    let Some((line, fields)) = lines.next() else {
        return Err(ParseError::syntax(1, "missing `arcs <N>` header").into());
    };
    let num_arcs = match fields.as_slice() {
        ["arcs", n] => parse_count(line, n, "arc count")?,
        _ => return Err(ParseError::syntax(line, "expected `arcs <N>`").into()),
    };

    let mut free_loops = 0;
    if let Some((line, fields)) = lines.peek() {
        if fields[0] == "loops" {
            free_loops = match fields.as_slice() {
                ["loops", f] => parse_count(*line, f, "loop count")?,
                _ => return Err(ParseError::syntax(*line, "expected `loops <F>`").into()),
            };
            lines.next();
        }
    }

    let mut crossings = Vec::new();
    for (line, fields) in lines {
        let ["x", sign, over, under_in, under_out] = fields.as_slice() else {
            return Err(ParseError::syntax(line, "expected `x <+|-> <over> <under_in> <under_out>`").into());
        };
        let sign = match *sign {
            "+" => Sign::Positive,
            "-" => Sign::Negative,
            other => {
                return Err(ParseError::syntax(line, format!("crossing sign must be + or -, got {other:?}")).into())
            }
        };
        crossings.push(Crossing::new(
            sign,
            parse_count(line, over, "arc index")?,
            parse_count(line, under_in, "arc index")?,
            parse_count(line, under_out, "arc index")?,
        ));
    }
    Diagram::new(num_arcs, crossings, free_loops)
}

pub fn emit_diagram(d: &Diagram) -> String {
    let mut out = format!("arcs {}\n", d.num_arcs());
    if d.free_loops() > 0 {
        let _ = writeln!(out, "loops {}", d.free_loops());
    }
    for c in d.crossings() {
        let _ = writeln!(out, "x {} {} {} {}", c.sign.symbol(), c.over, c.under_in, c.under_out);
    }
    out
}

/// Parses a coloring for `d`. Lines may come in any order but every
/// colorable arc must be assigned exactly once.
pub fn parse_coloring(text: &str, d: &Diagram) -> Result<Coloring> {
    let n = d.colorable_arcs();
    let mut colors: Vec<Option<S3Element>> = vec![None; n];
    for (line, fields) in content_lines(text) {
        let ["arc", index, token] = fields.as_slice() else {
            return Err(ParseError::syntax(line, "expected `arc <i> <element>`").into());
        };
        let arc = parse_count(line, index, "arc index")?;
        if arc >= n {
            return Err(ParseError::syntax(line, format!("arc {arc} out of range (diagram has {n})")).into());
        }
        let color: S3Element = token.parse().map_err(|e: ParseError| ParseError::syntax(line, e.to_string()))?;
        if colors[arc].replace(color).is_some() {
            return Err(ParseError::syntax(line, format!("arc {arc} assigned twice")).into());
        }
    }
    if let Some(missing) = colors.iter().position(Option::is_none) {
        return Err(crate::error::Error::MissingColor(missing));
    }
    Ok(Coloring::new(colors.into_iter().map(Option::unwrap).collect()))
}

pub fn emit_coloring(c: &Coloring) -> String {
    let mut out = String::new();
    for (i, color) in c.colors().iter().enumerate() {
        let _ = writeln!(out, "arc {i} {color}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Violation;
    use crate::error::Error;

    #[test]
    fn parse_curl() {
        let d = parse_diagram("arcs 1\nx + 0 0 0").unwrap();
        assert_eq!(d, Diagram::new(1, vec![Crossing::positive(0, 0, 0)], 0).unwrap());
    }

    #[test]
    fn comments_and_loops() {
        let text = "# unknot with a curl\narcs 1 # one arc\nloops 2\n\nx - 0 0 0\n";
        let d = parse_diagram(text).unwrap();
        assert_eq!(d.free_loops(), 2);
        assert_eq!(emit_diagram(&d), "arcs 1\nloops 2\nx - 0 0 0\n");
        assert_eq!(parse_diagram("arcs 0\nloops 1\n").unwrap(), Diagram::unknot());
    }

    #[test]
    fn validation_errors_are_forwarded() {
        match parse_diagram("arcs 2\nx + 0 1 1") {
            Err(Error::InvalidDiagram(v)) => {
                assert!(v.contains(&Violation::UnderInCount { arc: 0, count: 0 }));
                assert!(v.contains(&Violation::UnderOutCount { arc: 0, count: 0 }));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn syntax_errors_name_the_line() {
        let cases = [
            ("", 1),
            ("arc 1", 1),
            ("arcs 1\nx * 0 0 0", 2),
            ("arcs 1\n\nx + 0 0", 3),
            ("arcs 1\nloops\nx + 0 0 0", 2),
            ("arcs -1", 1),
        ];
        for (text, line) in cases {
            match parse_diagram(text) {
                Err(Error::Parse(ParseError::Syntax { line: l, .. })) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn coloring_format() {
        let d = parse_diagram("arcs 1\nloops 1\nx + 0 0 0").unwrap();
        let c = parse_coloring("arc 1 st\narc 0 sts\n", &d).unwrap();
        assert_eq!(c.colors(), &[S3Element::Sts, S3Element::St]);
        assert_eq!(emit_coloring(&c), "arc 0 sts\narc 1 st\n");
        assert_eq!(parse_coloring("arc 0 s", &d).unwrap_err(), Error::MissingColor(1));
        assert!(parse_coloring("arc 0 s\narc 0 t\narc 1 s", &d).is_err());
        assert!(parse_coloring("arc 0 q\narc 1 s", &d).is_err());
    }
}
