//! Text formats for groups, dense n-ary operations and Hosszú-Gluskin
//! algebras. All three are whitespace-tolerant and allow `#` line comments;
//! writers emit a canonical layout that parses back bit-exactly.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::groups::{Automorphism, BinaryGroup};
use crate::hosszu::{certify_hg, HgAlgebra};
use crate::polyadic::NaryOp;
use crate::Config;

struct Tokens<'a> {
    iter: std::str::SplitWhitespace<'a>,
    peeked: Option<&'a str>,
}

impl<'a> Tokens<'a> {
    fn new(stripped: &'a str) -> Tokens<'a> {
        Tokens { iter: stripped.split_whitespace(), peeked: None }
    }

    fn next(&mut self) -> Result<&'a str> {
        self.peeked
            .take()
            .or_else(|| self.iter.next())
            .ok_or_else(|| Error::Parse("unexpected end of input".into()))
    }

    fn finished(&mut self) -> bool {
        if self.peeked.is_none() {
            self.peeked = self.iter.next();
        }
        self.peeked.is_none()
    }

    fn keyword(&mut self, expected: &str) -> Result<()> {
        let tok = self.next()?;
        if tok != expected {
            return Err(Error::Parse(format!("expected `{expected}`, got `{tok}`")));
        }
        Ok(())
    }

    fn integer(&mut self) -> Result<usize> {
        let tok = self.next()?;
        tok.parse()
            .map_err(|_| Error::Parse(format!("expected an integer, got `{tok}`")))
    }

    fn integers(&mut self, count: usize) -> Result<Vec<usize>> {
        (0..count).map(|_| self.integer()).collect()
    }

    fn end(&mut self) -> Result<()> {
        if !self.finished() {
            return Err(Error::Parse(format!(
                "trailing input starting at `{}`",
                self.next().unwrap()
            )));
        }
        Ok(())
    }
}

fn strip_comments(input: &str) -> String {
    input
        .lines()
        .map(|line| line.split('#').next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join("\n")
}

/// Parses the group format: `order <k>`, `table`, then `k` rows of `k`
/// integers. The table is validated as a group.
pub fn parse_group(input: &str) -> Result<BinaryGroup> {
    let stripped = strip_comments(input);
    let mut t = Tokens::new(&stripped);
    t.keyword("order")?;
    let k = t.integer()?;
    if k == 0 {
        return Err(Error::Parse("order must be positive".into()));
    }
    t.keyword("table")?;
    let table: Vec<Vec<usize>> = (0..k).map(|_| t.integers(k)).collect::<Result<_>>()?;
    t.end()?;
    BinaryGroup::validate(&table)
}

pub fn write_group(g: &BinaryGroup) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "order {}", g.order());
    out.push_str("table\n");
    for row in g.table() {
        out.push_str(&row_string(&row));
        out.push('\n');
    }
    out
}

/// Parses the dense operation format: `arity <n>`, `order <k>`, `values`,
/// then `k^n` integers in lexicographic order, last argument fastest.
pub fn parse_nop(input: &str, cfg: &Config) -> Result<NaryOp> {
    let stripped = strip_comments(input);
    let mut t = Tokens::new(&stripped);
    t.keyword("arity")?;
    let n = t.integer()?;
    t.keyword("order")?;
    let k = t.integer()?;
    if n < 2 {
        return Err(Error::ArityTooSmall(n));
    }
    if k == 0 {
        return Err(Error::Parse("order must be positive".into()));
    }
    t.keyword("values")?;
    let cells = crate::util::checked_pow(k, n);
    if cells > cfg.dense_budget {
        return Err(Error::BudgetExceeded { work: cells, budget: cfg.dense_budget });
    }
    let values = t.integers(cells as usize)?;
    t.end()?;
    NaryOp::from_table(n, k, values, cfg)
}

/// Writes a dense operation; HG-backed bodies are materialized first.
pub fn write_nop(op: &NaryOp, cfg: &Config) -> Result<String> {
    let dense = op.to_dense(cfg)?;
    let values = dense.dense_values().expect("dense by construction");
    let mut out = String::new();
    let _ = writeln!(out, "arity {}", op.arity());
    let _ = writeln!(out, "order {}", op.order());
    out.push_str("values\n");
    for chunk in values.chunks(op.order()) {
        out.push_str(&row_string(chunk));
        out.push('\n');
    }
    Ok(out)
}

/// Parses the HG format: `arity <n>`, `order <k>`, `table` with `k` rows,
/// `phi <k integers>`, `b <integer>`. The result is certified.
pub fn parse_hg(input: &str) -> Result<HgAlgebra> {
    let stripped = strip_comments(input);
    let mut t = Tokens::new(&stripped);
    t.keyword("arity")?;
    let n = t.integer()?;
    t.keyword("order")?;
    let k = t.integer()?;
    if k == 0 {
        return Err(Error::Parse("order must be positive".into()));
    }
    t.keyword("table")?;
    let table: Vec<Vec<usize>> = (0..k).map(|_| t.integers(k)).collect::<Result<_>>()?;
    let base = BinaryGroup::validate(&table)?;
    t.keyword("phi")?;
    let phi_map = t.integers(k)?;
    let phi = Automorphism::certify(&base, phi_map)?;
    t.keyword("b")?;
    let b = t.integer()?;
    t.end()?;
    certify_hg(base, phi, b, n)
}

pub fn write_hg(hg: &HgAlgebra) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "arity {}", hg.arity());
    let _ = writeln!(out, "order {}", hg.base().order());
    out.push_str("table\n");
    for row in hg.base().table() {
        out.push_str(&row_string(&row));
        out.push('\n');
    }
    out.push_str("phi ");
    out.push_str(&row_string(hg.phi().map()));
    out.push('\n');
    let _ = writeln!(out, "b {}", hg.b());
    out
}

fn row_string(row: &[usize]) -> String {
    row.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
