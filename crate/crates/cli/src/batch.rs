//! `--batch DIR`: every `*.json` file in a directory, processed in parallel.
//! Each result goes to `<stem>.<json|txt>.out` beside its input, written to a
//! temporary file first and renamed into place.

use std::io::Write;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::{render_for_input, Cli, CliError, Format, Outcome};

fn inputs(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let io = |e: std::io::Error| CliError::Io { path: dir.to_path_buf(), reason: e.to_string() };
    let mut files = Vec::new();
    for entry in std::fs::read_dir(dir).map_err(io)? {
        let path = entry.map_err(io)?.path();
        if path.is_file() && path.extension().is_some_and(|e| e == "json") {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

pub fn output_path(input: &Path, format: Format) -> PathBuf {
    let stem = input.file_stem().unwrap_or_default().to_string_lossy();
    let ext = match format {
        Format::Json => "json",
        Format::Text => "txt",
    };
    input.with_file_name(format!("{stem}.{ext}.out"))
}

fn write_atomically(path: &Path, contents: &str) -> Result<(), CliError> {
    let dir = path.parent().unwrap_or(Path::new("."));
    let io = |e: std::io::Error| CliError::Io { path: path.to_path_buf(), reason: e.to_string() };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(contents.as_bytes()).map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

/// Files that fail produce no output file; the summary on stdout lists every
/// input and the exit code is the largest one seen.
pub fn run_batch(cli: &Cli, dir: &Path, cap: u128) -> Outcome {
    let files = match inputs(dir) {
        Ok(f) => f,
        Err(e) => return Outcome::failure(&e),
    };
    let results: Vec<(PathBuf, Result<PathBuf, CliError>)> = files
        .par_iter()
        .map(|f| {
            let out = output_path(f, cli.format);
            let r = render_for_input(cli, Some(f), cap).and_then(|s| write_atomically(&out, &s).map(|_| out));
            (f.clone(), r)
        })
        .collect();
    let mut outcome = Outcome::default();
    for (input, r) in results {
        match r {
            Ok(out) => outcome.stdout += &format!("ok {} -> {}\n", input.display(), out.display()),
            Err(e) => {
                outcome.code = outcome.code.max(e.exit_code());
                outcome.stdout += &format!("failed {}\n", input.display());
                outcome.stderr += &format!("error: {e}\n");
            }
        }
    }
    outcome
}
