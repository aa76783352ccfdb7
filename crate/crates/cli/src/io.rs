//! graph6 input and output plumbing.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use anyhow::{Context, Result};
use ddglab::graph::graph6_decode;
use ddglab::Graph;

fn is_stdin(path: Option<&Path>) -> bool {
    path.is_none_or(|p| p.as_os_str() == "-")
}

pub fn read_text(path: Option<&Path>) -> Result<String> {
    let mut text = String::new();
    match path {
        Some(p) if !is_stdin(path) => {
            File::open(p)
                .with_context(|| format!("cannot open {}", p.display()))?
                .read_to_string(&mut text)
                .with_context(|| format!("cannot read {}", p.display()))?;
        }
        _ => {
            io::stdin().read_to_string(&mut text).context("cannot read stdin")?;
        }
    }
    Ok(text)
}

/// Non-blank graph6 lines, each with its 1-based line number.
pub fn read_graphs(path: Option<&Path>) -> Result<Vec<(usize, Graph)>> {
    let text = read_text(path)?;
    let mut out = Vec::new();
    for (i, line) in BufReader::new(text.as_bytes()).lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let g = graph6_decode(line).with_context(|| format!("line {}: bad graph6", i + 1))?;
        out.push((i + 1, g));
    }
    Ok(out)
}

pub fn writer(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) if p.as_os_str() != "-" => {
            Box::new(BufWriter::new(File::create(p).with_context(|| format!("cannot create {}", p.display()))?))
        }
        _ => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

pub fn write_json<T: serde::Serialize>(path: Option<&Path>, value: &T) -> Result<()> {
    let mut w = writer(path)?;
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

/// `<path>.json`, the sidecar location for a graph6 file.
pub fn sidecar_path(path: &Path) -> std::path::PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".json");
    s.into()
}
