//! The line-oriented representation file:
//!
//! ```text
//! # comment
//! field fp 13
//! vars x1 x2 x3
//! row 0: x1, 0, 0, 0
//! row 1: 0, x2, 0, 0
//! row 2: 0, 0, x3, 0
//! row 3: 0, 0, 0, -x1^3 - x2^3 - x3^3
//! ```

use thiserror::Error;

use crate::algebra::{parse_poly, AlgebraError, Field, MultiPoly, VarSet};
use crate::detrep::{DetRepError, SymDetRep};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepFileError {
    /// Malformed text; positions are 1-based.
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    /// Well-formed, but not a valid representation.
    #[error(transparent)]
    Invalid(#[from] DetRepError),
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> RepFileError {
    RepFileError::Syntax {
        line,
        col,
        msg: msg.into(),
    }
}

pub fn parse_repfile(text: &str) -> Result<SymDetRep, RepFileError> {
    let mut field = None;
    let mut vars_seen = false;
    let mut rows: [Option<Vec<MultiPoly>>; 4] = Default::default();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let n = i + 1;
        last_line = n;
        let line = raw.split('#').next().unwrap();
        let indent = line.len() - line.trim_start().len();
        let body = line.trim();
        if body.is_empty() {
            continue;
        }
        let col = indent + 1;
        if let Some(rest) = body.strip_prefix("field") {
            if field.is_some() {
                return Err(syntax(n, col, "duplicate field declaration"));
            }
            let f: Field = rest
                .trim()
                .parse()
                .map_err(|e: AlgebraError| syntax(n, col + 5, e.to_string()))?;
            field = Some(f);
        } else if let Some(rest) = body.strip_prefix("vars") {
            let names: Vec<&str> = rest.split_whitespace().collect();
            if names != ["x1", "x2", "x3"] {
                return Err(syntax(n, col + 4, "expected `vars x1 x2 x3`"));
            }
            vars_seen = true;
        } else if let Some(rest) = body.strip_prefix("row") {
            let Some(f) = field else {
                return Err(syntax(n, col, "`field` must come before the rows"));
            };
            if !vars_seen {
                return Err(syntax(n, col, "`vars` must come before the rows"));
            }
            let (idx, entries) = rest
                .split_once(':')
                .ok_or_else(|| syntax(n, col + 3, "expected `row I: E, E, E, E`"))?;
            let r: usize = idx
                .trim()
                .parse()
                .ok()
                .filter(|&r| r < 4)
                .ok_or_else(|| syntax(n, col + 3, "row index must be 0, 1, 2 or 3"))?;
            if rows[r].is_some() {
                return Err(syntax(n, col, format!("row {r} given twice")));
            }
            // Column where the entry list starts within the raw line.
            let mut offset = indent + 3 + idx.len() + 1;
            let mut polys = Vec::new();
            for e in entries.split(',') {
                let start = offset + (e.len() - e.trim_start().len());
                let p = parse_poly(e, VarSet::Plane, f).map_err(|err| match err {
                    AlgebraError::Syntax { pos, msg } => {
                        syntax(n, start + pos - (e.len() - e.trim_start().len()), msg)
                    }
                    other => syntax(n, start + 1, other.to_string()),
                })?;
                polys.push(p);
                offset += e.len() + 1;
            }
            if polys.len() != 4 {
                return Err(syntax(n, col, format!("row {r} has {} entries, expected 4", polys.len())));
            }
            rows[r] = Some(polys);
        } else {
            return Err(syntax(n, col, format!("unknown directive {:?}", body.split_whitespace().next().unwrap())));
        }
    }
    if field.is_none() {
        return Err(syntax(last_line.max(1), 1, "missing `field` declaration"));
    }
    let mut out = Vec::new();
    for (r, row) in rows.into_iter().enumerate() {
        out.push(row.ok_or_else(|| syntax(last_line.max(1), 1, format!("missing row {r}")))?);
    }
    Ok(SymDetRep::validate(out)?)
}

pub fn write_repfile(rep: &SymDetRep, comment: Option<&str>) -> String {
    let mut s = String::new();
    if let Some(c) = comment {
        for l in c.lines() {
            s.push_str(&format!("# {l}\n"));
        }
    }
    let field = match rep.field() {
        Field::Rational => "rational".to_string(),
        Field::Prime(q) => format!("fp {q}"),
    };
    s.push_str(&format!("field {field}\nvars x1 x2 x3\n"));
    for (i, row) in rep.rows().iter().enumerate() {
        let entries: Vec<String> = row.iter().map(|p| p.to_string()).collect();
        s.push_str(&format!("row {i}: {}\n", entries.join(", ")));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    const IDENTITY: &str = "# identity member\nfield fp 13\nvars x1 x2 x3\nrow 0: x1, 0, 0, 0\nrow 1: 0, x2, 0, 0\nrow 2: 0, 0, x3, 0\nrow 3: 0, 0, 0, -x1^3 - x2^3 - x3^3\n";

    #[test]
    fn round_trip() {
        let rep = parse_repfile(IDENTITY).unwrap();
        assert_eq!(rep.field(), Field::Prime(13));
        let text = write_repfile(&rep, Some("again"));
        assert_eq!(parse_repfile(&text).unwrap(), rep);
    }

    #[test]
    fn positions_are_reported() {
        let bad = IDENTITY.replace("row 1: 0, x2, 0, 0", "row 1: 0, x2 x1, 0, 0");
        match parse_repfile(&bad) {
            Err(RepFileError::Syntax { line, col, .. }) => assert_eq!((line, col), (5, 14)),
            other => panic!("{other:?}"),
        }
        let missing = IDENTITY.replace("row 2: 0, 0, x3, 0\n", "");
        assert!(matches!(parse_repfile(&missing), Err(RepFileError::Syntax { msg, .. }) if msg == "missing row 2"));
        let unknown = IDENTITY.replace("x2, 0, 0", "y2, 0, 0");
        assert!(matches!(parse_repfile(&unknown), Err(RepFileError::Syntax { line: 5, .. })));
    }

    #[test]
    fn asymmetry_is_a_validation_error() {
        let bad = IDENTITY.replace("row 0: x1, 0, 0, 0", "row 0: x1, x2, 0, 0");
        assert!(matches!(
            parse_repfile(&bad),
            Err(RepFileError::Invalid(DetRepError::Asymmetric { .. }))
        ));
    }
}
