//! Knowledge-base files: a `sig:` line followed by one formula per line.

use std::path::Path;

use crate::error::{Error, Result};
use crate::formula::{Formula, Signature};

#[derive(Clone, Debug)]
pub struct KbFile {
    pub path: String,
    pub signature: Signature,
    pub formulas: Vec<Formula>,
}

impl KbFile {
    pub fn read(path: &Path) -> Result<KbFile> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Input {
            path: path.display().to_string(),
            line: 0,
            message: e.to_string(),
        })?;
        KbFile::parse(&text, &path.display().to_string())
    }

    pub fn parse(text: &str, path: &str) -> Result<KbFile> {
        let fail = |line: usize, message: String| Error::Input {
            path: path.to_string(),
            line,
            message,
        };
        let mut signature: Option<Signature> = None;
        let mut formulas = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let Some(sig) = &signature else {
                let names = body
                    .strip_prefix("sig:")
                    .ok_or_else(|| fail(line_no, "expected `sig: a, b, ...` before any formula".into()))?;
                let names: Vec<&str> = names.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
                signature = Some(Signature::new(names).map_err(|e| fail(line_no, e.to_string()))?);
                continue;
            };
            if body.starts_with("sig:") {
                return Err(fail(line_no, "second signature line".into()));
            }
            let offset = raw.find(body).unwrap_or(0);
            let f = sig.parse(body).map_err(|e| match e {
                Error::Syntax { column, message } => {
                    fail(line_no, format!("column {}: {message}", column + offset))
                }
                Error::UnknownAtom { name, column: Some(c) } => {
                    fail(line_no, format!("column {}: atom `{name}` is not in the signature", c + offset))
                }
                other => fail(line_no, other.to_string()),
            })?;
            formulas.push(f);
        }
        let signature = signature.ok_or_else(|| fail(0, "no `sig:` line".into()))?;
        Ok(KbFile {
            path: path.to_string(),
            signature,
            formulas,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_signature_and_formulas() {
        let kb = KbFile::parse("# chain\n\nsig: p, q, r\np -> q   # first\nq -> r\n", "x.kb").unwrap();
        assert_eq!(kb.signature.len(), 3);
        let shown: Vec<String> = kb.formulas.iter().map(|f| f.to_string()).collect();
        assert_eq!(shown, ["p -> q", "q -> r"]);
    }

    #[test]
    fn errors_carry_line_and_column() {
        let err = KbFile::parse("sig: p\n  p & \n", "x.kb").unwrap_err();
        assert_eq!(err.to_string(), "x.kb:2: column 6: expected a formula, found end of input");
        let err = KbFile::parse("p\n", "x.kb").unwrap_err();
        assert!(matches!(err, Error::Input { line: 1, .. }));
        let err = KbFile::parse("sig: p\nq\n", "x.kb").unwrap_err();
        assert!(err.to_string().starts_with("x.kb:2: column 1:"), "{err}");
    }
}
