//! CSV writing: `#`-prefixed metadata lines, comma-separated rows, LF line
//! endings, numbers with six significant digits.

use std::fmt::Write as _;

/// Formats `x` with `digits` significant digits, `%g` style: fixed notation
/// for moderate exponents, scientific otherwise, trailing zeros trimmed.
pub fn sig(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let digits = digits.max(1);
    // round first so that e.g. 999999.7 picks the right exponent
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci
        .split_once('e')
        .expect("scientific format has an exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= digits as i32 {
        format!("{}e{}", trim_zeros(mantissa), exp)
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn num(x: f64) -> String {
    sig(x, 6)
}

/// Accumulates one CSV document.
#[derive(Debug, Default)]
pub struct Table {
    buf: String,
}

impl Table {
    pub fn new(command: &str, scenario_text: &str) -> Self {
        let mut t = Table::default();
        t.comment(&format!("dsc {command}"));
        t.comment("scenario:");
        for line in scenario_text.lines() {
            t.comment(&format!("  {line}"));
        }
        t
    }

    pub fn comment(&mut self, text: &str) {
        let _ = writeln!(self.buf, "# {text}");
    }

    pub fn header(&mut self, columns: &[&str]) {
        let _ = writeln!(self.buf, "{}", columns.join(","));
    }

    pub fn row<I, S>(&mut self, cells: I)
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let line = cells
            .into_iter()
            .map(|c| c.as_ref().to_string())
            .collect::<Vec<_>>()
            .join(",");
        let _ = writeln!(self.buf, "{line}");
    }

    pub fn into_string(self) -> String {
        self.buf
    }
}
