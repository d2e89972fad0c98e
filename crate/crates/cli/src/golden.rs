//! Published threshold tables, shipped as CSV and diffed by `verify --suite golden`.

use serde::Deserialize;

pub const TABLE_SMALL: &str = include_str!("../golden/table_small.csv");
pub const TABLE_LARGE: &str = include_str!("../golden/table_large.csv");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
pub struct GoldenRow {
    pub k: u32,
    pub n_star: u32,
}

pub fn parse(text: &str) -> anyhow::Result<Vec<GoldenRow>> {
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    Ok(rdr.deserialize().collect::<Result<_, _>>()?)
}

pub fn all_rows() -> anyhow::Result<Vec<GoldenRow>> {
    let mut rows = parse(TABLE_SMALL)?;
    rows.extend(parse(TABLE_LARGE)?);
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_parse() {
        let small = parse(TABLE_SMALL).unwrap();
        assert_eq!(small.len(), 40);
        assert_eq!(small[0], GoldenRow { k: 1, n_star: 7 });
        assert_eq!(small[39], GoldenRow { k: 40, n_star: 90 });
        let large = parse(TABLE_LARGE).unwrap();
        assert!(large.contains(&GoldenRow { k: 20000, n_star: 40025 }));
    }
}
