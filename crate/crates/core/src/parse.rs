use thiserror::Error;

/// A problem in a text or JSON input file. `line` is 1-based; 0 means the
/// location is unknown (e.g. JSON syntax errors reported by position).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

impl From<serde_json::Error> for ParseError {
    fn from(e: serde_json::Error) -> Self {
        ParseError::new(e.line(), format!("invalid JSON: {e}"))
    }
}

/// Non-empty, non-comment lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Parses `key=<int>` tokens, e.g. `n=7` or `p=5`.
pub(crate) fn key_value(token: &str, key: &str, line: usize) -> Result<usize, ParseError> {
    let rest = token
        .strip_prefix(key)
        .and_then(|r| r.strip_prefix('='))
        .ok_or_else(|| ParseError::new(line, format!("expected `{key}=<int>`, found `{token}`")))?;
    rest.parse().map_err(|_| {
        ParseError::new(
            line,
            format!("`{key}` must be a non-negative integer, found `{rest}`"),
        )
    })
}
