//! Output plumbing: atomic file writes and round-trippable float
//! formatting.

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::error::CliError;

/// 17 significant digits; parses back to the identical f64.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

/// Writes through a sibling temp file plus rename, so a crashed run never
/// leaves a truncated output file behind.
pub fn write_atomic(path: &Path, content: &str) -> Result<(), CliError> {
    let file_name = path
        .file_name()
        .ok_or_else(|| CliError::Validation(format!("invalid output path {}", path.display())))?;
    let mut tmp = path.to_path_buf();
    tmp.set_file_name(format!(
        "{}.tmp.{}",
        file_name.to_string_lossy(),
        std::process::id()
    ));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(content.as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Emits to the output path when given, to stdout otherwise.
pub fn emit(out: Option<&Path>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => write_atomic(path, content),
        None => {
            print!("{content}");
            std::io::stdout().flush()?;
            Ok(())
        }
    }
}
