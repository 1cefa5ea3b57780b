use std::fmt;
use std::path::Path;
use std::process::ExitCode;

/// Why a command stopped.
#[derive(Debug)]
pub enum Failure {
    /// Bad flags or input; exit 2.
    Usage(String),
    /// Broken internal identity; exit 1.
    Invariant(String),
}

impl Failure {
    pub fn usage(field: &str, message: impl fmt::Display) -> Self {
        Failure::Usage(format!("{field}: {message}"))
    }

    pub fn report(self) -> ExitCode {
        match self {
            Failure::Usage(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
            Failure::Invariant(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(1)
            }
        }
    }
}

impl From<gcflab::Error> for Failure {
    fn from(e: gcflab::Error) -> Self {
        if e.is_invariant_violation() {
            Failure::Invariant(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

/// Attributes a library error to the flag whose value caused it.
pub trait Field<T> {
    fn field(self, name: &str) -> Result<T, Failure>;
}

impl<T> Field<T> for gcflab::Result<T> {
    fn field(self, name: &str) -> Result<T, Failure> {
        self.map_err(|e| match e {
            e if e.is_invariant_violation() => Failure::Invariant(e.to_string()),
            gcflab::Error::Parse { message, .. } => Failure::usage(name, message),
            e => Failure::usage(name, e),
        })
    }
}

/// Finished output of a command.
pub struct Rendered {
    pub body: String,
    /// Exit 1 after writing.
    pub disagreement: bool,
}

impl From<String> for Rendered {
    fn from(body: String) -> Self {
        Rendered {
            body,
            disagreement: false,
        }
    }
}

pub fn emit(body: &str, path: Option<&Path>) -> Result<(), Failure> {
    match path {
        Some(path) => std::fs::write(path, body).map_err(|e| Failure::usage("--out", e)),
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            // A closed pipe is not worth a panic.
            let _ = stdout
                .write_all(body.as_bytes())
                .and_then(|()| stdout.flush());
            Ok(())
        }
    }
}

/// CSV text from a header and rows.
pub fn csv_table<I, R>(header: &[&str], rows: I) -> Result<String, Failure>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = String>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Failure::Invariant(format!("writing CSV: {e}"));
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(row.into_iter().collect::<Vec<_>>())
            .map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Failure::Invariant(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("CSV of UTF-8 fields"))
}

/// A decimal literal as a JSON number.
pub fn number(text: impl ToString) -> serde_json::Value {
    serde_json::Value::Number(text.to_string().parse().expect("decimal literal"))
}

pub fn json_line<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data");
    s.push('\n');
    s
}
