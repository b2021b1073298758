use std::io::{self, Write};
use std::path::Path;

use tempfile::NamedTempFile;

use crate::{CliError, Result};

/// Writes `text` to `path` through a temporary file in the same directory
/// and a rename, or to `stdout` when no path is given.
pub fn emit(path: Option<&Path>, text: &str, stdout: &mut dyn io::Write) -> Result<()> {
    let Some(path) = path else {
        return stdout.write_all(text.as_bytes()).map_err(|e| CliError::Io(format!("standard output: {e}")));
    };
    let io_err = |e: io::Error| CliError::Io(format!("{}: {e}", path.display()));
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = NamedTempFile::new_in(dir).map_err(io_err)?;
    tmp.write_all(text.as_bytes()).map_err(io_err)?;
    tmp.as_file().sync_all().map_err(io_err)?;
    tmp.persist(path).map_err(|e| io_err(e.error))?;
    Ok(())
}
