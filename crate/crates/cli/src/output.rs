//! CSV text: `#` comment rows, one header row, comma-separated values
//! printed with 17 significant digits.

use std::fmt::Write;

#[derive(Debug, Default)]
pub struct CsvTable {
    text: String,
}

impl CsvTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn comment(&mut self, line: impl AsRef<str>) {
        let _ = writeln!(self.text, "# {}", line.as_ref());
    }

    pub fn header<S: AsRef<str>>(&mut self, columns: impl IntoIterator<Item = S>) {
        let cols: Vec<String> = columns
            .into_iter()
            .map(|c| c.as_ref().to_string())
            .collect();
        let _ = writeln!(self.text, "{}", cols.join(","));
    }

    pub fn row<S: AsRef<str>>(&mut self, fields: impl IntoIterator<Item = S>) {
        self.header(fields)
    }

    pub fn into_string(self) -> String {
        self.text
    }
}

/// Full double precision, e.g. `1.0000000000000000e1`.
pub fn num(x: f64) -> String {
    format!("{x:.16e}")
}

/// Coordinate column names `prefix1..prefixd`.
pub fn coord_columns(prefix: &str, dim: usize) -> impl Iterator<Item = String> + '_ {
    (1..=dim).map(move |d| format!("{prefix}{d}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_round_trip() {
        for x in [0.0, 1.0 / 3.0, 1e-300, -2.5e17, std::f64::consts::PI] {
            assert_eq!(num(x).parse::<f64>().unwrap(), x);
        }
        assert_eq!(num(10.0), "1.0000000000000000e1");
    }

    #[test]
    fn table_layout() {
        let mut t = CsvTable::new();
        t.comment("note");
        t.header(["u", "x1"]);
        t.row([num(0.5), num(1.0)]);
        assert_eq!(
            t.into_string(),
            "# note\nu,x1\n5.0000000000000000e-1,1.0000000000000000e0\n"
        );
    }
}
