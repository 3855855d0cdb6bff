//! The `.srs` text format:
//!
//! ```text
//! semiring <name>
//! order <n>
//! add
//! <n lines of n space-separated integers>
//! mul
//! <n lines of n space-separated integers>
//! ```
//!
//! Lines starting with `#` and blank lines are skipped. Everything else is
//! strict.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::semiring::{FiniteSemiring, MAX_ORDER};

pub fn parse(text: &str) -> Result<FiniteSemiring> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let mut next = |what: &str| {
        lines.next().ok_or_else(|| Error::Parse {
            line: 0,
            message: format!("unexpected end of input, expected {what}"),
        })
    };

    let (ln, header) = next("`semiring <name>`")?;
    let name = header
        .strip_prefix("semiring")
        .map(str::trim)
        .filter(|n| !n.is_empty() && !n.contains(char::is_whitespace))
        .ok_or_else(|| perr(ln, "expected `semiring <name>`"))?
        .to_string();

    let (ln, order_line) = next("`order <n>`")?;
    let n: usize = order_line
        .strip_prefix("order")
        .map(str::trim)
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| perr(ln, "expected `order <n>`"))?;
    if !(1..=MAX_ORDER).contains(&n) {
        return Err(perr(ln, &format!("order {n} outside 1..={MAX_ORDER}")));
    }

    let mut tables = Vec::with_capacity(2);
    for label in ["add", "mul"] {
        let (ln, l) = next(label)?;
        if l != label {
            return Err(perr(ln, &format!("expected `{label}`, found `{l}`")));
        }
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            let (ln, l) = next("a table row")?;
            let row = l
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| perr(ln, &format!("bad entry `{t}`"))))
                .collect::<Result<Vec<_>>>()?;
            if row.len() != n {
                return Err(perr(ln, &format!("{label} row has {} entries, expected {n}", row.len())));
            }
            if let Some(v) = row.iter().find(|&&v| v >= n) {
                return Err(perr(ln, &format!("{label} entry {v} out of range for order {n}")));
            }
            rows.push(row);
        }
        tables.push(rows);
    }
    if let Some((ln, l)) = lines.next() {
        return Err(perr(ln, &format!("trailing content `{l}`")));
    }
    FiniteSemiring::validate(name, &tables[0], &tables[1])
}

fn perr(line: usize, message: &str) -> Error {
    Error::Parse {
        line,
        message: message.to_string(),
    }
}

pub fn write(s: &FiniteSemiring) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "semiring {}", s.name());
    let _ = writeln!(out, "order {}", s.order());
    for (label, table) in [("add", s.add_table()), ("mul", s.mul_table())] {
        out.push_str(label);
        out.push('\n');
        for row in table.chunks(s.order()) {
            let cells: Vec<String> = row.iter().map(u8::to_string).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    const B: &str = "# Boolean semiring\nsemiring B\norder 2\nadd\n0 1\n1 1\nmul\n0 0\n0 1\n";

    #[test]
    fn parses_boolean() {
        let s = parse(B).unwrap();
        assert_eq!(s, catalog::boolean());
    }

    #[test]
    fn write_then_parse_is_identity() {
        for s in [catalog::bxb(), catalog::z_mod(4), catalog::chain(4)] {
            let text = write(&s);
            assert_eq!(parse(&text).unwrap(), s);
        }
        assert_eq!(write(&catalog::boolean()), B.lines().skip(1).map(|l| format!("{l}\n")).collect::<String>());
    }

    #[test]
    fn strictness() {
        let cases = [
            "semiring B\norder 2\nadd\n0 1\n1 1\nmul\n0 0\n",
            "semiring B\norder 2\nadd\n0 1\n1 1 1\nmul\n0 0\n0 1\n",
            "semiring B\norder 2\nadd\n0 1\n1 2\nmul\n0 0\n0 1\n",
            "semiring B\norder 2\nmul\n0 1\n1 1\nadd\n0 0\n0 1\n",
            "semiring B\norder 2\nadd\n0 1\n1 1\nmul\n0 0\n0 1\nextra\n",
            "semiring\norder 2\nadd\n0 1\n1 1\nmul\n0 0\n0 1\n",
            "semiring B\norder two\n",
            "semiring B\norder 2\nadd\n0 x\n1 1\nmul\n0 0\n0 1\n",
        ];
        for c in cases {
            assert!(matches!(parse(c), Err(Error::Parse { .. })), "{c:?}");
        }
        // well-formed but not a semiring
        let bad = "semiring X\norder 2\nadd\n0 1\n1 0\nmul\n0 0\n0 0\n";
        assert!(matches!(parse(bad), Err(Error::AxiomViolation(_))));
    }
}
