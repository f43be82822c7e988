//! Output records and their plain, CSV and JSON renderings.
//!
//! Counting, table and curve output share one record schema:
//! `d,n,algorithm,value,log_value,elapsed_seconds`, with empty fields where a
//! column does not apply. Exact values are full decimal strings.

use std::io::Write;

use abelsq::bench::{BenchEntry, BenchReport};
use abelsq::{Symbol, WordPair};
use clap::ValueEnum;
use serde::{Deserialize, Serialize};

/// Any I/O, CSV or JSON failure while writing.
pub type WriteResult = Result<(), Box<dyn std::error::Error + Send + Sync>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Plain,
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub d: u128,
    pub n: usize,
    pub algorithm: String,
    pub value: Option<String>,
    pub log_value: Option<f64>,
    pub elapsed_seconds: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleRecord {
    pub d: u128,
    pub n: usize,
    pub index: usize,
    pub x: String,
    pub y: String,
}

/// Bench rows in CSV: the record schema plus the operation count.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub d: u128,
    pub n: usize,
    pub algorithm: String,
    pub value: Option<String>,
    pub log_value: Option<f64>,
    pub elapsed_seconds: Option<f64>,
    pub mac_count: Option<u64>,
}

impl From<&BenchEntry> for BenchRecord {
    fn from(e: &BenchEntry) -> Self {
        Self {
            d: e.d,
            n: e.n,
            algorithm: e.algorithm.to_string(),
            value: e.value.clone(),
            log_value: e.log_value,
            elapsed_seconds: Some(e.wall_time),
            mac_count: e.mac_count,
        }
    }
}

/// Base-36 digits for alphabets of at most 36 symbols, comma-separated
/// integers otherwise.
pub fn render_word(word: &[Symbol], d: u128) -> String {
    if d <= 36 {
        word.iter()
            .map(|&s| char::from_digit(s as u32, 36).expect("symbol below 36"))
            .collect()
    } else {
        word.iter()
            .map(Symbol::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

pub fn sample_record(d: u128, index: usize, pair: &WordPair) -> SampleRecord {
    SampleRecord {
        d,
        n: pair.len(),
        index,
        x: render_word(&pair.x, d),
        y: render_word(&pair.y, d),
    }
}

pub fn write_csv<T: Serialize>(out: impl Write, rows: &[T]) -> WriteResult {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json<T: Serialize + ?Sized>(mut out: impl Write, value: &T) -> WriteResult {
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

pub fn write_bench_plain(mut out: impl Write, report: &BenchReport) -> WriteResult {
    writeln!(out, "d n algorithm mac_count wall_time value")?;
    for e in &report.entries {
        let macs = e
            .mac_count
            .map_or_else(|| "-".to_string(), |m| m.to_string());
        let value = match (&e.value, e.log_value) {
            (Some(v), _) => v.clone(),
            (None, Some(l)) => format!("ln={l}"),
            (None, None) => "-".to_string(),
        };
        writeln!(
            out,
            "{} {} {} {} {:.9} {}",
            e.d, e.n, e.algorithm, macs, e.wall_time, value
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_render_by_alphabet_size() {
        assert_eq!(render_word(&[0, 1, 10, 35], 36), "01az");
        assert_eq!(render_word(&[0, 36, 100], 101), "0,36,100");
        assert_eq!(render_word(&[], 2), "");
    }

    #[test]
    fn records_round_trip_through_csv_and_json() {
        let big = "340282366920938463463374607431768211455000000000000000000001".to_string();
        let rows = vec![
            OutputRecord {
                d: 6,
                n: 7,
                algorithm: "fast".into(),
                value: Some("218040696".into()),
                log_value: None,
                elapsed_seconds: Some(1.25e-5),
            },
            OutputRecord {
                d: 1 << 64,
                n: 9,
                algorithm: "log-fast".into(),
                value: Some(big),
                log_value: Some(0.1 + 0.2),
                elapsed_seconds: None,
            },
        ];

        let mut buf = Vec::new();
        write_csv(&mut buf, &rows).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("d,n,algorithm,value,log_value,elapsed_seconds\n"));
        assert!(text.contains("6,7,fast,218040696,,"));
        let back: Vec<OutputRecord> = csv::Reader::from_reader(buf.as_slice())
            .deserialize()
            .collect::<Result<_, _>>()
            .unwrap();
        assert_eq!(back, rows);

        let mut buf = Vec::new();
        write_json(&mut buf, &rows).unwrap();
        let back: Vec<OutputRecord> = serde_json::from_slice(&buf).unwrap();
        assert_eq!(back, rows);
    }
}
