use std::io::Write;

use crate::error::Result;
use crate::harness::BenchRecord;

pub const CSV_HEADER: &str = "family,N,algorithm,median_ns,entry_err,spectral_residual,reps";

/// Missing and non-finite values are written as empty fields.
pub fn write_csv<W: Write>(records: &[BenchRecord], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    w.write_record(CSV_HEADER.split(','))?;
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

/// A JSON array of records; missing values are `null`.
pub fn write_json<W: Write>(records: &[BenchRecord], mut out: W) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, records)?;
    out.write_all(b"\n")?;
    Ok(())
}

pub fn csv_string(records: &[BenchRecord]) -> Result<String> {
    let mut buf = Vec::new();
    write_csv(records, &mut buf)?;
    Ok(String::from_utf8(buf).expect("csv output is utf-8"))
}

pub fn json_string(records: &[BenchRecord]) -> Result<String> {
    let mut buf = Vec::new();
    write_json(records, &mut buf)?;
    Ok(String::from_utf8(buf).expect("json output is utf-8"))
}
