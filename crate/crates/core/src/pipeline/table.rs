use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::canon;
use crate::graph::SmallGraph;

/// Graph counts indexed by `(order, size)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CountTable {
    cells: BTreeMap<(usize, usize), u64>,
}

impl CountTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Counts isomorphism classes among `graphs`.
    pub fn from_graphs<'a, I>(graphs: I) -> Self
    where
        I: IntoIterator<Item = &'a SmallGraph>,
    {
        let mut table = CountTable::new();
        for g in canon::dedup(graphs.into_iter().copied()) {
            table.add(g.order(), g.size(), 1);
        }
        table
    }

    pub fn add(&mut self, n: usize, e: usize, count: u64) {
        if count > 0 {
            *self.cells.entry((n, e)).or_default() += count;
        }
    }

    pub fn get(&self, n: usize, e: usize) -> u64 {
        self.cells.get(&(n, e)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Nonzero cells in `(n, e)` order.
    pub fn cells(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.cells.iter().map(|(&k, &v)| (k, v))
    }

    /// The nonzero cells of row `n` as `(e, count)`.
    pub fn row(&self, n: usize) -> Vec<(usize, u64)> {
        self.cells
            .range((n, 0)..(n + 1, 0))
            .map(|(&(_, e), &c)| (e, c))
            .collect()
    }

    pub fn row_totals(&self) -> BTreeMap<usize, u64> {
        let mut out = BTreeMap::new();
        for (&(n, _), &c) in &self.cells {
            *out.entry(n).or_default() += c;
        }
        out
    }

    pub fn column_totals(&self) -> BTreeMap<usize, u64> {
        let mut out = BTreeMap::new();
        for (&(_, e), &c) in &self.cells {
            *out.entry(e).or_default() += c;
        }
        out
    }

    pub fn total(&self) -> u64 {
        self.cells.values().sum()
    }

    /// `n,e,count` with LF line endings.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,e,count\n");
        for (&(n, e), &c) in &self.cells {
            writeln!(out, "{n},{e},{c}").unwrap();
        }
        out
    }

    /// Parses the output of [`CountTable::to_csv`].
    pub fn from_csv(text: &str) -> Option<Self> {
        let mut lines = text.lines();
        if lines.next()?.trim() != "n,e,count" {
            return None;
        }
        let mut table = CountTable::new();
        for line in lines.filter(|l| !l.trim().is_empty()) {
            let mut parts = line.split(',').map(|p| p.trim().parse::<u64>());
            let (n, e, c) = (
                parts.next()?.ok()?,
                parts.next()?.ok()?,
                parts.next()?.ok()?,
            );
            table.add(n as usize, e as usize, c);
        }
        Some(table)
    }

    /// A plain-text grid: one row per order, one column per size, totals at the edges.
    pub fn render(&self) -> String {
        if self.cells.is_empty() {
            return String::from("(empty table)\n");
        }
        let cols: Vec<usize> = self.column_totals().keys().copied().collect();
        let (lo, hi) = (cols[0], *cols.last().unwrap());
        let mut out = String::new();
        write!(out, "{:>6}", "n / e").unwrap();
        for e in lo..=hi {
            write!(out, "{e:>5}").unwrap();
        }
        writeln!(out, "{:>7}", "total").unwrap();
        for (n, total) in self.row_totals() {
            write!(out, "{n:>6}").unwrap();
            for e in lo..=hi {
                match self.get(n, e) {
                    0 => write!(out, "{:>5}", ".").unwrap(),
                    c => write!(out, "{c:>5}").unwrap(),
                }
            }
            writeln!(out, "{total:>7}").unwrap();
        }
        write!(out, "{:>6}", "total").unwrap();
        let col_totals = self.column_totals();
        for e in lo..=hi {
            write!(out, "{:>5}", col_totals.get(&e).copied().unwrap_or(0)).unwrap();
        }
        writeln!(out, "{:>7}", self.total()).unwrap();
        out
    }
}
