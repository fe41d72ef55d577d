//! Correspondence tables for a fixed `n`, grouped by the number `k` of parts
//! greater than one on the even-mex / negative-crank side.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bijections::{
    even_mex_to_fixed_point, fixed_star_to_negcrank, konan_reduce, neg_to_pos_crank, trace_chain,
    Rule,
};
use crate::classes::ClassTag;
use crate::enumerate::partitions;
use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableId {
    /// `X_e(n,k)`, `(1) × G_1(n-1,k)` with rule annotations, `F*(n,k+1)`
    Ab,
    /// `F*(n,k+1)`, `M_<0(n,k)`
    Bc,
    /// `M_<0(n,k)`, `M_>0(n,k+1)`
    Cd,
    /// all four families
    All,
}

impl FromStr for TableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ab" => Ok(TableId::Ab),
            "bc" => Ok(TableId::Bc),
            "cd" => Ok(TableId::Cd),
            "all" => Ok(TableId::All),
            other => Err(Error::Parse(format!("unknown table id {other:?}"))),
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableId::Ab => "ab",
            TableId::Bc => "bc",
            TableId::Cd => "cd",
            TableId::All => "all",
        })
    }
}

/// Staircase phase of the even-mex map for one row of the `ab` table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KonanCell {
    /// e.g. `(3 2 1, 1^2) →(ii)→ (1, 3 2 1^2)`
    pub rendered: String,
    /// `rule-i` / `rule-ii` applications in order
    pub rules: Vec<Rule>,
    /// the `G_1(n-1)` partition reached
    pub reduced: Partition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    /// One partition per family column, left to right. In the `ab` table the
    /// middle column is carried by `konan` instead.
    pub columns: Vec<Partition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub konan: Option<KonanCell>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableBlock {
    pub k: usize,
    pub rows: Vec<TableRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub id: TableId,
    pub n: u32,
    pub headers: Vec<String>,
    pub blocks: Vec<TableBlock>,
}

impl Table {
    pub fn row_count(&self) -> usize {
        self.blocks.iter().map(|b| b.rows.len()).sum()
    }

    /// Cell texts of one row, in header order.
    pub fn cells(&self, row: &TableRow) -> Vec<String> {
        let mut cells: Vec<String> = row.columns.iter().map(|p| p.to_string()).collect();
        if let Some(k) = &row.konan {
            cells.insert(1, k.rendered.clone());
        }
        cells
    }

    /// Plain-text layout: a header line, then one line per row with `k`
    /// first, blocks separated by a rule.
    pub fn render_text(&self) -> String {
        let mut out = format!("k | {}\n", self.headers.join(" | "));
        for (i, block) in self.blocks.iter().enumerate() {
            out.push_str(if i == 0 { "==\n" } else { "--\n" });
            for row in &block.rows {
                out.push_str(&format!("{} | {}\n", block.k, self.cells(row).join(" | ")));
            }
        }
        out
    }
}

fn headers(id: TableId, n: u32) -> Vec<String> {
    let xe = format!("X_e({n},k)");
    let fs = format!("F*({n},k+1)");
    let neg = format!("M_<0({n},k)");
    let pos = format!("M_>0({n},k+1)");
    match id {
        TableId::Ab => vec![xe, format!("(1) x G_1({},k)", n - 1), fs],
        TableId::Bc => vec![fs, neg],
        TableId::Cd => vec![neg, pos],
        TableId::All => vec![xe, fs, neg, pos],
    }
}

fn push_row(blocks: &mut Vec<TableBlock>, k: usize, row: TableRow) {
    match blocks.iter_mut().find(|b| b.k == k) {
        Some(b) => b.rows.push(row),
        None => blocks.push(TableBlock { k, rows: vec![row] }),
    }
}

/// Builds a table for `n >= 2`. Rows follow enumeration order inside each
/// block, blocks ascend in `k`.
pub fn build_table(id: TableId, n: i64) -> Result<Table> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("tables need n >= 2, got {n}")));
    }
    let mut blocks: Vec<TableBlock> = Vec::new();
    for lambda in partitions(n)? {
        match id {
            TableId::Ab if ClassTag::Xe.contains(&lambda) => {
                let (mu, trace) = konan_reduce(&lambda)?;
                let (image, _) = even_mex_to_fixed_point(&lambda)?;
                let konan = KonanCell {
                    rendered: trace.render_konan(),
                    rules: trace.rules(),
                    reduced: mu,
                };
                let row = TableRow {
                    columns: vec![lambda.clone(), image],
                    konan: Some(konan),
                };
                push_row(&mut blocks, lambda.beta(), row);
            }
            TableId::Bc if ClassTag::Fstar.contains(&lambda) => {
                let k = ClassTag::Fstar.refined_beta(&lambda) - 1;
                let image = fixed_star_to_negcrank(&lambda)?;
                let row = TableRow {
                    columns: vec![lambda.clone(), image],
                    konan: None,
                };
                push_row(&mut blocks, k, row);
            }
            TableId::Cd if ClassTag::MNeg.contains(&lambda) => {
                let image = neg_to_pos_crank(&lambda)?;
                let row = TableRow {
                    columns: vec![lambda.clone(), image],
                    konan: None,
                };
                push_row(&mut blocks, lambda.beta(), row);
            }
            TableId::All if ClassTag::Xe.contains(&lambda) => {
                let c = trace_chain(&lambda)?;
                let row = TableRow {
                    columns: vec![c.even_mex, c.fixed_point, c.neg_crank, c.pos_crank],
                    konan: None,
                };
                push_row(&mut blocks, lambda.beta(), row);
            }
            _ => {}
        }
    }
    blocks.sort_by_key(|b| b.k);
    Ok(Table {
        id,
        n: n as u32,
        headers: headers(id, n as u32),
        blocks,
    })
}
