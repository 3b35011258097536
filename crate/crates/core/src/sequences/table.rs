//! Value tables of `F_n^(r)`, `L_n^(r)` and `c(n, k)`, and the reference copies they are compared with.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use super::{fib_recurrence, lucas_recurrence};
use crate::combinat::ballot_table;
use crate::error::{Error, Result};
use crate::exactalg::Int;
use crate::identities::{run_check, CheckReport, Counterexample};

const TABLE1: &str = include_str!("../../data/table1_cnk.tsv");
const TABLE2: &str = include_str!("../../data/table2_fib.tsv");
const TABLE3: &str = include_str!("../../data/table3_lucas.tsv");
const TYPOS: &str = include_str!("../../data/known_typos.tsv");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TableKind {
    /// `c(n, k)`, rows `n`, columns `k`; blank for `k > n/2`.
    Cnk,
    /// `F_n^(r)`, rows `r`, columns `n`.
    Fib,
    /// `L_n^(r)`, rows `r`, columns `n`.
    Lucas,
}

impl TableKind {
    pub const ALL: [TableKind; 3] = [TableKind::Cnk, TableKind::Fib, TableKind::Lucas];

    /// Header of the corner cell, `row\col`.
    pub fn corner(self) -> &'static str {
        match self {
            TableKind::Cnk => "n\\k",
            TableKind::Fib | TableKind::Lucas => "r\\n",
        }
    }

    fn number(self) -> i64 {
        match self {
            TableKind::Cnk => 1,
            TableKind::Fib => 2,
            TableKind::Lucas => 3,
        }
    }
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableKind::Cnk => "cnk",
            TableKind::Fib => "fib",
            TableKind::Lucas => "lucas",
        })
    }
}

impl FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cnk" => Ok(TableKind::Cnk),
            "fib" => Ok(TableKind::Fib),
            "lucas" => Ok(TableKind::Lucas),
            _ => Err(Error::Usage(format!(
                "unknown table kind {s:?}; expected fib, lucas or cnk"
            ))),
        }
    }
}

/// A rectangular table; `None` marks a blank cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeqTable {
    pub kind: TableKind,
    pub rows: Vec<i64>,
    pub cols: Vec<i64>,
    pub cells: Vec<Vec<Option<Int>>>,
}

impl SeqTable {
    pub fn cell(&self, row: i64, col: i64) -> Option<&Int> {
        let i = self.rows.iter().position(|&r| r == row)?;
        let j = self.cols.iter().position(|&c| c == col)?;
        self.cells[i][j].as_ref()
    }
}

/// Computes a table over inclusive row and column ranges.
pub fn table(
    kind: TableKind,
    rows: RangeInclusive<i64>,
    cols: RangeInclusive<i64>,
) -> Result<SeqTable> {
    let (r0, c0) = (*rows.start(), *cols.start());
    if rows.is_empty() || cols.is_empty() {
        return Err(Error::Usage("empty table range".into()));
    }
    match kind {
        TableKind::Cnk if r0 < 0 || c0 < 0 => {
            return Err(Error::Usage("c(n, k) tables need n, k >= 0".into()))
        }
        TableKind::Fib | TableKind::Lucas if r0 < 1 => {
            return Err(Error::Usage("sequence tables need r >= 1".into()))
        }
        TableKind::Lucas if c0 < 0 => return Err(Error::Usage("Lucas tables need n >= 0".into())),
        _ => {}
    }
    let n_max = *cols.end();
    let cells = rows
        .clone()
        .map(|row| match kind {
            TableKind::Cnk => cols
                .clone()
                .map(|k| (k <= row / 2).then(|| ballot_table(row, k)))
                .collect(),
            TableKind::Fib => {
                let f = fib_recurrence(row as usize, n_max);
                cols.clone().map(|n| f.get(n).cloned()).collect()
            }
            TableKind::Lucas => {
                let l = lucas_recurrence(row as usize, n_max);
                cols.clone().map(|n| l.get(n).cloned()).collect()
            }
        })
        .collect();
    Ok(SeqTable {
        kind,
        rows: rows.collect(),
        cols: cols.collect(),
        cells,
    })
}

fn parse_tsv(kind: TableKind, text: &str) -> SeqTable {
    let mut lines = text.lines();
    let header = lines.next().expect("table header");
    let cols = header
        .split('\t')
        .skip(1)
        .map(|c| c.parse().expect("column index"))
        .collect();
    let mut rows = Vec::new();
    let mut cells = Vec::new();
    for line in lines.filter(|l| !l.trim().is_empty()) {
        let mut fields = line.split('\t');
        rows.push(
            fields
                .next()
                .expect("row index")
                .trim()
                .parse()
                .expect("row index"),
        );
        cells.push(
            fields
                .map(|f| (!f.trim().is_empty()).then(|| f.trim().parse().expect("cell value")))
                .collect(),
        );
    }
    SeqTable {
        kind,
        rows,
        cols,
        cells,
    }
}

/// The reference table as printed.
pub fn golden(kind: TableKind) -> SeqTable {
    match kind {
        TableKind::Cnk => parse_tsv(kind, TABLE1),
        TableKind::Fib => parse_tsv(kind, TABLE2),
        TableKind::Lucas => parse_tsv(kind, TABLE3),
    }
}

/// A printed reference cell that disagrees with every computation route.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnownTypo {
    pub kind: TableKind,
    pub row: i64,
    pub col: i64,
    pub printed: Int,
    pub computed: Int,
}

pub fn known_typos() -> Vec<KnownTypo> {
    TYPOS
        .lines()
        .skip(1)
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            let f: Vec<&str> = line.split('\t').collect();
            let kind = TableKind::ALL
                .into_iter()
                .find(|k| k.number().to_string() == f[0])
                .expect("table number");
            KnownTypo {
                kind,
                row: f[1].parse().expect("row"),
                col: f[2].parse().expect("col"),
                printed: f[3].parse().expect("printed value"),
                computed: f[4].parse().expect("computed value"),
            }
        })
        .collect()
}

/// Recomputes the reference table over its own ranges. Recorded typo cells must
/// show exactly the recorded printed and computed values; every other cell must match.
pub fn golden_check(kind: TableKind) -> CheckReport {
    let typos: Vec<KnownTypo> = known_typos()
        .into_iter()
        .filter(|t| t.kind == kind)
        .collect();
    run_check(
        &format!("golden_{kind}"),
        &[("documented_exceptions", typos.len() as i64)],
        || {
            let g = golden(kind);
            let rows = g.rows[0]..=*g.rows.last().expect("rows");
            let cols = g.cols[0]..=*g.cols.last().expect("cols");
            let t = table(kind, rows, cols)?;
            for (i, &row) in g.rows.iter().enumerate() {
                for (j, &col) in g.cols.iter().enumerate() {
                    let printed = g.cells[i][j].as_ref();
                    let computed = t.cells[i][j].as_ref();
                    let at = format!("row {row}, column {col}");
                    let show =
                        |x: Option<&Int>| x.map_or_else(|| "blank".to_string(), Int::to_string);
                    match typos.iter().find(|ty| ty.row == row && ty.col == col) {
                        Some(ty)
                            if printed == Some(&ty.printed) && computed == Some(&ty.computed) => {}
                        Some(ty) => {
                            let want = format!("printed {} / computed {}", ty.printed, ty.computed);
                            return Ok(Some(Counterexample::new(
                                at,
                                format!("printed {} / computed {}", show(printed), show(computed)),
                                want,
                            )));
                        }
                        None if printed != computed => {
                            return Ok(Some(Counterexample::new(at, show(computed), show(printed))))
                        }
                        None => {}
                    }
                }
            }
            Ok(None)
        },
    )
}
