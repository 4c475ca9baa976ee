use std::fmt;
use std::io::Write;

use serde::Serialize;
use serde_json::Value;

use crate::args::Format;

#[derive(Debug)]
pub enum CliError {
    Lib(slicelab::Error),
    Usage(String),
    Io(std::io::Error),
}

impl CliError {
    /// 1 verification, 2 usage, 3 resource budget.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(e) if e.is_resource() => 3,
            CliError::Lib(slicelab::Error::Structural(_) | slicelab::Error::Internal(_)) => 1,
            CliError::Lib(_) | CliError::Usage(_) | CliError::Io(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Usage(m) => f.write_str(m),
            CliError::Io(e) => write!(f, "i/o: {e}"),
        }
    }
}

impl From<slicelab::Error> for CliError {
    fn from(e: slicelab::Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// A command's result in every form it supports.
pub struct Rendered {
    pub json: String,
    pub rows: Option<Rows>,
    pub dot: Option<String>,
    /// False when a verification the command performs did not pass.
    pub ok: bool,
}

pub struct Rows {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Rendered {
    pub fn new(payload: &impl Serialize) -> CliResult<Self> {
        Ok(Self {
            json: serde_json::to_string(payload).map_err(|e| CliError::Usage(e.to_string()))?,
            rows: None,
            dot: None,
            ok: true,
        })
    }

    pub fn from_value(v: &Value) -> Self {
        Self {
            json: v.to_string(),
            rows: None,
            dot: None,
            ok: true,
        }
    }

    pub fn rows(mut self, headers: Vec<&'static str>, rows: Vec<Vec<String>>) -> Self {
        self.rows = Some(Rows { headers, rows });
        self
    }

    pub fn ok(mut self, ok: bool) -> Self {
        self.ok = ok;
        self
    }

    pub fn emit(self, format: Format, out: &mut impl Write) -> CliResult<bool> {
        match format {
            Format::Json => writeln!(out, "{}", self.json)?,
            Format::Dot => match &self.dot {
                Some(d) => out.write_all(d.as_bytes())?,
                None => return Err(CliError::Usage("this command has no DOT output".into())),
            },
            Format::Csv => {
                let rows = self.tabular()?;
                let mut w = csv::Writer::from_writer(&mut *out);
                w.write_record(&rows.headers)?;
                for r in &rows.rows {
                    w.write_record(r)?;
                }
                w.flush()?;
            }
            Format::Table => write_table(&self.tabular()?, out)?,
        }
        Ok(self.ok)
    }

    /// Explicit rows, or the top-level JSON fields as key/value pairs.
    fn tabular(&self) -> CliResult<Rows> {
        if let Some(r) = &self.rows {
            return Ok(Rows {
                headers: r.headers.clone(),
                rows: r.rows.clone(),
            });
        }
        let v: Value =
            serde_json::from_str(&self.json).map_err(|e| CliError::Usage(e.to_string()))?;
        let Value::Object(map) = v else {
            return Err(CliError::Usage("this command has no tabular output".into()));
        };
        Ok(Rows {
            headers: vec!["key", "value"],
            rows: map
                .into_iter()
                .map(|(k, v)| {
                    let v = match v {
                        Value::String(s) => s,
                        other => other.to_string(),
                    };
                    vec![k, v]
                })
                .collect(),
        })
    }
}

fn write_table(rows: &Rows, out: &mut impl Write) -> std::io::Result<()> {
    let mut widths: Vec<usize> = rows.headers.iter().map(|h| h.len()).collect();
    for r in &rows.rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    writeln!(out, "{}", line(rows.headers.clone()))?;
    for r in &rows.rows {
        writeln!(out, "{}", line(r.iter().map(String::as_str).collect()))?;
    }
    Ok(())
}
