//! Known exceptional factors, loaded from `data/*.tsv`.

use crate::algebra::{parse_poly, IntPoly};
use crate::skeleton::Signature;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub p: u64,
    pub n: u64,
    /// Realized by genuine trigonal curves.
    pub starred: bool,
    pub factors: Vec<IntPoly>,
    pub signature: Option<Signature>,
}

impl TableRow {
    pub fn triples(&self) -> impl Iterator<Item = (u64, u64, &IntPoly)> + '_ {
        self.factors.iter().map(move |f| (self.p, self.n, f))
    }
}

fn parse_table(src: &str) -> Vec<TableRow> {
    src.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|line| {
            let cols: Vec<&str> = line.split('\t').collect();
            assert_eq!(cols.len(), 5, "bad table line: {line}");
            TableRow {
                p: cols[0].parse().expect("p"),
                n: cols[1].parse().expect("N"),
                starred: cols[2] == "*",
                factors: cols[3].split(',').map(|f| parse_poly(f.trim()).expect("factor")).collect(),
                signature: (cols[4] != "-").then(|| cols[4].parse().expect("signature")),
            }
        })
        .collect()
}

/// Exceptional factors with `N > 10` whose universal subgroup has genus 0,
/// with their signatures (14 triples).
pub fn realized() -> Vec<TableRow> {
    parse_table(include_str!("../../data/realized.tsv"))
}

/// Exceptional factors with `N > 10` that are not realized (34 triples).
pub fn unrealized() -> Vec<TableRow> {
    parse_table(include_str!("../../data/unrealized.tsv"))
}

/// Genus-0 examples with `7 ≤ N ≤ 10` (9 rows).
pub fn small_n() -> Vec<TableRow> {
    parse_table(include_str!("../../data/small_n.tsv"))
}

pub fn triple_count(rows: &[TableRow]) -> usize {
    rows.iter().map(|r| r.factors.len()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_counts() {
        assert_eq!(triple_count(&realized()), 14);
        assert_eq!(triple_count(&unrealized()), 34);
        assert_eq!(small_n().len(), 9);
        let starred: usize = realized().iter().filter(|r| r.starred).map(|r| r.factors.len()).sum();
        assert_eq!(starred, 6);
    }
}
