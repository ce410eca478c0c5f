use binet_core::{OutputRecord, Table};

use crate::args::Format;

/// A command result in all three output forms.
#[derive(Clone, Debug)]
pub struct Rendered {
    pub record: OutputRecord,
    pub plain: String,
    pub table: Table,
    pub verification_failed: bool,
}

impl Rendered {
    pub fn new(record: OutputRecord, plain: impl Into<String>, table: Table) -> Self {
        Self {
            record,
            plain: plain.into(),
            table,
            verification_failed: false,
        }
    }

    pub fn render(&self, format: Format) -> Result<String, String> {
        match format {
            Format::Plain => {
                let mut s = self.plain.clone();
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                Ok(s)
            }
            Format::Json => Ok(self.record.to_json() + "\n"),
            Format::Csv => to_csv(&self.table),
        }
    }
}

pub fn to_csv(table: &Table) -> Result<String, String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(table.header()).map_err(|e| e.to_string())?;
    for row in table.rows() {
        w.write_record(row).map_err(|e| e.to_string())?;
    }
    let bytes = w.into_inner().map_err(|e| e.to_string())?;
    String::from_utf8(bytes).map_err(|e| e.to_string())
}

/// Shortest round-trip decimal for an f64.
pub fn num(x: f64) -> String {
    format!("{x}")
}

/// `a + bi` with the sign folded in.
pub fn complex_text(re: &str, im: &str) -> String {
    match im.strip_prefix('-') {
        Some(rest) => format!("{re} - {rest}i"),
        None => format!("{re} + {im}i"),
    }
}

/// Key-value lines with aligned keys.
pub fn kv(pairs: &[(&str, String)]) -> String {
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    pairs
        .iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quoting() {
        let mut t = Table::new(["n", "poly"]);
        t.push(["1", "x + y, x"]);
        assert_eq!(to_csv(&t).unwrap(), "n,poly\n1,\"x + y, x\"\n");
    }

    #[test]
    fn complex_signs() {
        assert_eq!(complex_text("1", "-2"), "1 - 2i");
        assert_eq!(complex_text("1", "0"), "1 + 0i");
    }
}
