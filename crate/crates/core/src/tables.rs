//! Rank-table rows for any weight, and the shipped golden tables at n = 5.
//!
//! One row per element of S1(n), in enumeration order: the object's text
//! form, both components of its split, the pdt-rank (`X` when exceptional),
//! the modified rank with its mod-3 residue, and the A/B class (`-` when
//! neither). The golden files under `data/` freeze the n = 5 tables; the
//! tables named 2.1 and 4.2 share the same rows, so both goldens carry the
//! full column set and differ only in their header notes.

use serde_json::json;

use crate::delta::delta;
use crate::designated::{for_each_s1, OverlinePartition};
use crate::ranks::{classify, modified_rank, pdt_rank, Class, RankValue};

/// Golden table selector, matching the CLI `--which` values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GoldenTable {
    /// The pdt-rank table at n = 5.
    Table21,
    /// The modified-rank table at n = 5.
    Table42,
}

/// Embedded golden files (shipped at `data/table_2_1.tsv`, `data/table_4_2.tsv`).
pub fn golden_tsv(which: GoldenTable) -> &'static str {
    match which {
        GoldenTable::Table21 => include_str!("../../../data/table_2_1.tsv"),
        GoldenTable::Table42 => include_str!("../../../data/table_4_2.tsv"),
    }
}

/// Data lines of a golden file: everything except `#` comments.
pub fn golden_lines(which: GoldenTable) -> impl Iterator<Item = &'static str> {
    golden_tsv(which)
        .lines()
        .filter(|line| !line.starts_with('#'))
}

/// Documented deviation notes recorded in a golden file header.
pub fn golden_deviations(which: GoldenTable) -> Vec<&'static str> {
    golden_tsv(which)
        .lines()
        .filter_map(|line| line.strip_prefix("# deviation: "))
        .collect()
}

/// One rank-table row.
#[derive(Clone, Debug)]
pub struct TableRow {
    pub partition: OverlinePartition,
    pub alpha: String,
    pub beta: String,
    pub tag: u32,
    pub rank: RankValue,
    pub mrank: i64,
    pub class: Class,
}

impl TableRow {
    pub fn of(lam: &OverlinePartition) -> TableRow {
        let tr = delta(lam);
        TableRow {
            partition: lam.clone(),
            alpha: tr.alpha().to_string(),
            beta: tr.beta().to_string(),
            tag: tr.tag(),
            rank: pdt_rank(lam),
            mrank: modified_rank(lam),
            class: classify(lam),
        }
    }

    /// Residue of the modified rank mod 3 (always 0, 1, or 2).
    pub fn mrank_mod3(&self) -> i64 {
        self.mrank.rem_euclid(3)
    }

    /// The seven-column TSV form used by the `table` command and goldens.
    pub fn tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.partition,
            self.alpha,
            self.beta,
            self.rank,
            self.mrank,
            self.mrank_mod3(),
            self.class
        )
    }

    /// JSON object form; the exceptional rank and the `Neither` class are null.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "partition": self.partition.to_string(),
            "alpha": self.alpha,
            "beta": self.beta,
            "t": self.tag,
            "rank": match self.rank {
                RankValue::Regular(m) => json!(m),
                RankValue::Exceptional => serde_json::Value::Null,
            },
            "mrank": self.mrank,
            "mrank_mod3": self.mrank_mod3(),
            "class": if self.class == Class::Neither {
                serde_json::Value::Null
            } else {
                json!(self.class.label())
            },
        })
    }
}

/// Header line of the seven-column TSV form.
pub const TSV_HEADER: &str = "partition\talpha\tbeta\trank\tmrank\tmrank_mod3\tclass";

/// All rows at weight n, in enumeration order.
pub fn table_rows(n: u32) -> Vec<TableRow> {
    let mut rows = Vec::new();
    for_each_s1(n, |lam| rows.push(TableRow::of(lam)));
    rows
}

/// The full TSV document for weight n: header line plus one line per row.
pub fn table_tsv(n: u32) -> String {
    let mut out = String::from(TSV_HEADER);
    out.push('\n');
    for row in table_rows(n) {
        out.push_str(&row.tsv());
        out.push('\n');
    }
    out
}
