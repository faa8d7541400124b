//! Clutter files.
//!
//! Text format: the first line is `n d`, every further non-empty line is one
//! circuit as space-separated 1-based labels, and `#` starts a comment. The
//! JSON form is `{"n": …, "d": …, "circuits": [[…], …]}`. Both read back to
//! a clutter on `[n]`; writing uses canonical circuit order, so
//! write → parse → write is the identity.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::clutter::Clutter;
use crate::face::Face;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClutterFile {
    pub n: usize,
    pub d: usize,
    pub circuits: Vec<Face>,
}

impl ClutterFile {
    pub fn from_clutter(c: &Clutter) -> ClutterFile {
        ClutterFile { n: ground_size(c), d: c.d(), circuits: c.circuits().to_vec() }
    }

    pub fn into_clutter(self) -> Result<Clutter> {
        Clutter::on_n(self.n, self.d, self.circuits)
    }
}

/// Vertices are written as `[n]` with `n` the largest vertex label.
fn ground_size(c: &Clutter) -> usize {
    64 - c.vertices().bits().leading_zeros() as usize
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

pub fn parse_text(text: &str) -> Result<Clutter> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut circuits: Vec<(usize, Face)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let nums = body
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| parse_err(line_no, format!("not a number: {t:?}"))))
            .collect::<Result<Vec<usize>>>()?;
        let Some((n, d, _)) = header else {
            if nums.len() != 2 {
                return Err(parse_err(line_no, "header must be `n d`"));
            }
            if nums[0] > 64 {
                return Err(parse_err(line_no, format!("at most 64 vertices are supported (got {})", nums[0])));
            }
            header = Some((nums[0], nums[1], line_no));
            continue;
        };
        if nums.len() != d + 1 {
            return Err(parse_err(line_no, format!("expected {} labels, got {}", d + 1, nums.len())));
        }
        let mut face = Face::EMPTY;
        for &l in &nums {
            if l == 0 || l > n {
                return Err(parse_err(line_no, format!("label {l} outside 1..={n}")));
            }
            if face.contains(l - 1) {
                return Err(parse_err(line_no, format!("label {l} repeated")));
            }
            face = face.with(l - 1);
        }
        if let Some((first, _)) = circuits.iter().find(|(_, f)| *f == face) {
            return Err(parse_err(line_no, format!("circuit repeats line {first}")));
        }
        circuits.push((line_no, face));
    }
    let (n, d, line) = header.ok_or_else(|| parse_err(1, "missing `n d` header"))?;
    Clutter::on_n(n, d, circuits.into_iter().map(|(_, f)| f)).map_err(|e| parse_err(line, e.to_string()))
}

pub fn write_text(c: &Clutter) -> String {
    let mut out = format!("{} {}\n", ground_size(c), c.d());
    for f in c.circuits() {
        let labels: Vec<String> = f.labels().iter().map(|l| l.to_string()).collect();
        out.push_str(&labels.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_json(text: &str) -> Result<Clutter> {
    let file: ClutterFile = serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))?;
    file.into_clutter()
}

pub fn write_json(c: &Clutter) -> String {
    serde_json::to_string(&ClutterFile::from_clutter(c)).expect("serializable")
}

/// Parses either format, choosing JSON when the first non-blank character
/// is `{`.
pub fn parse_any(text: &str) -> Result<Clutter> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text)
    }
}

pub fn read_clutter(path: &Path) -> Result<Clutter> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_any(&text)
}

pub fn write_clutter(path: &Path, c: &Clutter) -> Result<()> {
    fs::write(path, write_text(c)).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;

    #[test]
    fn text_format() {
        let c = parse_text("# dual exam\n5 2\n1 2 5\n2 3 5  # trailing\n\n3 4 5\n").unwrap();
        assert_eq!(c, fixtures::dual_exam());
        assert_eq!(write_text(&c), "5 2\n1 2 5\n2 3 5\n3 4 5\n");
        assert_eq!(parse_text("4 1\n").unwrap(), Clutter::on_n(4, 1, []).unwrap());
        assert_eq!(parse_text("3 1\n2 1\n").unwrap().circuits(), &[Face::digits("12")]);
    }

    #[test]
    fn parse_errors_carry_lines() {
        let cases = [
            ("", 1),
            ("5 2 1\n", 1),
            ("5 2\n1 2\n", 2),
            ("5 2\n1 2 6\n", 2),
            ("5 2\n1 2 x\n", 2),
            ("# c\n5 2\n1 2 5\n\n5 2 1\n", 5),
            ("5 2\n1 1 2\n", 2),
            ("70 2\n", 1),
        ];
        for (text, line) in cases {
            match parse_text(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn json_format() {
        let c = fixtures::octahedron();
        let json = write_json(&c);
        assert!(json.starts_with(r#"{"n":6,"d":2,"circuits":[[1,2,3],"#));
        assert_eq!(parse_json(&json).unwrap(), c);
        assert_eq!(parse_any(&json).unwrap(), c);
        assert!(matches!(parse_json(r#"{"n":3,"d":1,"circuits":[[1,2,3]]}"#), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn files_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.clutter");
        write_clutter(&path, &fixtures::dunce_hat()).unwrap();
        assert_eq!(read_clutter(&path).unwrap(), fixtures::dunce_hat());
        assert!(matches!(read_clutter(&dir.path().join("missing")), Err(Error::Io(_))));
    }

    proptest! {
        #[test]
        fn text_round_trip_is_exact(n in 1usize..9, d in 0usize..3, mask in any::<u64>()) {
            prop_assume!(d < n);
            let all: Vec<Face> = Face::full(n).unwrap().k_subsets(d + 1).collect();
            let chosen = all.iter().enumerate().filter(|(i, _)| mask >> (i % 64) & 1 == 1).map(|(_, f)| *f);
            let c = Clutter::on_n(n, d, chosen).unwrap();
            let text = write_text(&c);
            let back = parse_text(&text).unwrap();
            prop_assert_eq!(write_text(&back), text);
            let json = write_json(&c);
            prop_assert_eq!(write_json(&parse_json(&json).unwrap()), json);
        }
    }
}
