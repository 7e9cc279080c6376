//! Report serialization. Both formats are UTF-8 with LF line endings and
//! contain nothing that depends on timing or thread count.

use std::io::Write;
use std::path::Path;

use qk_eigenlab_core::Report;

use crate::config::Format;

pub fn render(report: &Report, format: Format) -> anyhow::Result<Vec<u8>> {
    match format {
        Format::Json => {
            let mut out = serde_json::to_vec_pretty(&report.records)?;
            out.push(b'\n');
            Ok(out)
        }
        Format::Csv => {
            let mut writer = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(Vec::new());
            for record in &report.records {
                writer.serialize(record)?;
            }
            if report.records.is_empty() {
                writer.write_record(["suite", "case", "status", "residual", "identity"])?;
            }
            Ok(writer.into_inner()?)
        }
    }
}

pub fn write(report: &Report, format: Format, path: &Path) -> anyhow::Result<()> {
    let bytes = render(report, format)?;
    let mut file = std::fs::File::create(path)?;
    file.write_all(&bytes)?;
    Ok(())
}
