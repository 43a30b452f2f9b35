use clap::ValueEnum;
use kuiper_core::{kuiper_pair, IterationMethod, SampleSize, TestKind};

use crate::format::{fixed, trimmed};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    /// Long form: `alpha,n,c,v`, one row per cell
    Csv,
    /// Wide grid, one row per alpha and one `(c, v)` column per n
    Markdown,
}

#[derive(Debug, Clone)]
pub struct TableSpec {
    pub alphas: Vec<f64>,
    pub ns: Vec<SampleSize>,
    pub kind: TestKind,
    pub method: IterationMethod,
    pub guess: f64,
    pub format: TableFormat,
    pub decimals: usize,
}

type Cell = Option<(f64, f64)>;

impl TableSpec {
    pub fn validate(&self) -> Result<(), String> {
        if self.alphas.is_empty() || self.ns.is_empty() {
            return Err("table needs at least one alpha and one n".into());
        }
        if !(1..=12).contains(&self.decimals) {
            return Err(format!("decimals must be in 1..=12, got {}", self.decimals));
        }
        Ok(())
    }

    fn solve(&self) -> (Vec<Vec<Cell>>, Vec<String>) {
        let mut failures = Vec::new();
        let grid = self
            .alphas
            .iter()
            .map(|&alpha| {
                self.ns
                    .iter()
                    .map(|&n| match kuiper_pair(self.guess, alpha, n, self.kind, self.method) {
                        Ok(p) => Some((p.critical_value, p.quantile)),
                        Err(e) => {
                            failures.push(format!("alpha={alpha} n={n}: {}: {e}", e.name()));
                            None
                        }
                    })
                    .collect()
            })
            .collect();
        (grid, failures)
    }

    /// Rendered table and a description of every unsolved cell.
    pub fn render(&self) -> (String, Vec<String>) {
        let (grid, failures) = self.solve();
        let d = self.decimals;
        let mut out = String::new();
        match self.format {
            TableFormat::Csv => {
                out.push_str("alpha,n,c,v\n");
                for (alpha, row) in self.alphas.iter().zip(&grid) {
                    for (n, cell) in self.ns.iter().zip(row) {
                        let (c, v) = match cell {
                            Some((c, v)) => (fixed(*c, d), fixed(*v, d)),
                            None => ("NA".into(), "NA".into()),
                        };
                        out.push_str(&format!("{},{n},{c},{v}\n", trimmed(*alpha)));
                    }
                }
            }
            TableFormat::Markdown => {
                out.push_str("| alpha \\ n |");
                for n in &self.ns {
                    out.push_str(&format!(" {n} |"));
                }
                out.push_str("\n|---|");
                out.push_str(&"---|".repeat(self.ns.len()));
                out.push('\n');
                for (alpha, row) in self.alphas.iter().zip(&grid) {
                    out.push_str(&format!("| {} |", trimmed(*alpha)));
                    for cell in row {
                        match cell {
                            Some((c, v)) => out.push_str(&format!(" ({}, {}) |", fixed(*c, d), fixed(*v, d))),
                            None => out.push_str(" NA |"),
                        }
                    }
                    out.push('\n');
                }
            }
        }
        (out, failures)
    }
}
