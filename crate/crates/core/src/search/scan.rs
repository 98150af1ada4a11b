use std::fs::File;
use std::io::{self, BufRead, BufReader, Seek, SeekFrom, Write};
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::budget::SearchBudget;
use super::npl::search_npl;
use crate::certificate::{Certificate, Verdict};
use crate::construct::certify_sufficient;
use crate::graph::parse_graph6;

/// Orders at or above this need [`ScanConfig::long_running`] in exact mode.
pub const LONG_RUNNING_ORDER: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanMode {
    /// Exhaustive search on every graph.
    Exact,
    /// Sufficient conditions first, exhaustive search only when they fail.
    FastCertify,
}

#[derive(Debug, Clone)]
pub struct ScanConfig {
    pub mode: ScanMode,
    pub budget: SearchBudget,
    /// Worker threads; 0 lets the pool decide.
    pub threads: usize,
    /// Include per-graph wall time. Off by default so output is reproducible.
    pub timing: bool,
    pub long_running: bool,
    /// Lines handed to the pool at once; also the checkpoint granularity.
    pub chunk_lines: usize,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            mode: ScanMode::Exact,
            budget: SearchBudget::unlimited(),
            threads: 0,
            timing: false,
            long_running: false,
            chunk_lines: 4096,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanRecord {
    pub index: u64,
    pub g6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Byte offset of a parse error within the line.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub offset: Option<usize>,
    #[serde(skip)]
    pub detail: Option<Certificate>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub total: u64,
    pub npl: u64,
    pub not_npl: u64,
    pub unknown: u64,
    pub errors: u64,
}

impl ScanSummary {
    fn add(&mut self, r: &ScanRecord) {
        self.total += 1;
        match r.verdict {
            Some(Verdict::Npl) => self.npl += 1,
            Some(Verdict::NotNpl) => self.not_npl += 1,
            Some(Verdict::Unknown) => self.unknown += 1,
            None => self.errors += 1,
        }
    }

    /// Every line parsed and every graph got a definite verdict.
    pub fn is_complete(&self) -> bool {
        self.unknown == 0 && self.errors == 0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanReport {
    pub records: Vec<ScanRecord>,
    pub summary: ScanSummary,
}

#[derive(Debug, Error)]
pub enum ScanError {
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),
    #[error("line {line}: order {order} needs the long-running flag in exact mode")]
    LongRunningRequired { line: u64, order: usize },
    #[error("bad checkpoint: {0}")]
    Checkpoint(#[from] serde_json::Error),
    #[error("cannot build worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

/// Resume point written after every completed chunk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct Checkpoint {
    /// Byte offset of the first unprocessed line.
    pub offset: u64,
    pub next_index: u64,
    pub summary: ScanSummary,
}

/// Classifies one graph in the given mode.
pub fn classify(g: &crate::graph::Graph, mode: ScanMode, budget: &SearchBudget) -> Certificate {
    match mode {
        ScanMode::Exact => search_npl(g, budget),
        ScanMode::FastCertify => certify_sufficient(g, budget),
    }
}

fn scan_line(index: u64, line: &str, config: &ScanConfig) -> ScanRecord {
    let mut rec = ScanRecord {
        index,
        g6: line.to_string(),
        n: None,
        m: None,
        verdict: None,
        certificate: None,
        millis: None,
        error: None,
        offset: None,
        detail: None,
    };
    match parse_graph6(line) {
        Ok(g) => {
            let started = Instant::now();
            let cert = classify(&g, config.mode, &config.budget);
            if config.timing {
                rec.millis = Some(started.elapsed().as_millis() as u64);
            }
            rec.n = Some(g.order());
            rec.m = Some(g.edge_count());
            rec.verdict = Some(cert.verdict());
            rec.certificate = Some(cert.reason().tag());
            rec.detail = Some(cert);
        }
        Err(e) => {
            rec.offset = e.offset();
            rec.error = Some(e.to_string());
        }
    }
    rec
}

fn check_gate(first_index: u64, lines: &[String], config: &ScanConfig) -> Result<(), ScanError> {
    if config.mode != ScanMode::Exact || config.long_running {
        return Ok(());
    }
    for (i, line) in lines.iter().enumerate() {
        if let Ok(g) = parse_graph6(line) {
            if g.order() >= LONG_RUNNING_ORDER {
                return Err(ScanError::LongRunningRequired {
                    line: first_index + i as u64 + 1,
                    order: g.order(),
                });
            }
        }
    }
    Ok(())
}

fn scan_chunk(
    pool: &rayon::ThreadPool,
    first_index: u64,
    lines: &[String],
    config: &ScanConfig,
) -> Vec<ScanRecord> {
    pool.install(|| {
        lines
            .par_iter()
            .enumerate()
            .map(|(i, l)| scan_line(first_index + i as u64, l, config))
            .collect()
    })
}

fn pool(config: &ScanConfig) -> Result<rayon::ThreadPool, ScanError> {
    Ok(rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads)
        .build()?)
}

fn trim_line(line: &str) -> &str {
    line.trim_end_matches(['\n', '\r'])
}

/// Scans an in-memory graph6 text, one graph per line.
pub fn scan_graph6_str(text: &str, config: &ScanConfig) -> Result<ScanReport, ScanError> {
    let lines: Vec<String> = text.lines().map(|l| trim_line(l).to_string()).collect();
    check_gate(0, &lines, config)?;
    let pool = pool(config)?;
    let mut records = Vec::with_capacity(lines.len());
    let mut summary = ScanSummary::default();
    for (c, chunk) in lines.chunks(config.chunk_lines.max(1)).enumerate() {
        let first = (c * config.chunk_lines.max(1)) as u64;
        for r in scan_chunk(&pool, first, chunk, config) {
            summary.add(&r);
            records.push(r);
        }
    }
    Ok(ScanReport { records, summary })
}

/// Streams JSON-lines records to `out`, followed by a summary object.
pub fn scan_graph6_stream<R: BufRead, W: Write>(
    reader: R,
    out: &mut W,
    config: &ScanConfig,
) -> Result<ScanSummary, ScanError> {
    let summary = stream(reader, out, config, Checkpoint::default(), None)?;
    write_summary(out, &summary)?;
    Ok(summary)
}

/// Scans a file with a checkpoint: if `checkpoint` exists the scan resumes
/// from the recorded offset, and after each chunk the file is rewritten.
/// The summary line is written once the input is finished.
pub fn scan_file_resumable<W: Write>(
    input: &Path,
    out: &mut W,
    config: &ScanConfig,
    checkpoint: &Path,
) -> Result<ScanSummary, ScanError> {
    let resume = match std::fs::read_to_string(checkpoint) {
        Ok(text) => serde_json::from_str(&text)?,
        Err(e) if e.kind() == io::ErrorKind::NotFound => Checkpoint::default(),
        Err(e) => return Err(e.into()),
    };
    let mut file = File::open(input)?;
    file.seek(SeekFrom::Start(resume.offset))?;
    let summary = stream(BufReader::new(file), out, config, resume, Some(checkpoint))?;
    write_summary(out, &summary)?;
    Ok(summary)
}

/// Reads a checkpoint file, if present.
pub fn read_checkpoint(path: &Path) -> Result<Option<Checkpoint>, ScanError> {
    match std::fs::read_to_string(path) {
        Ok(text) => Ok(Some(serde_json::from_str(&text)?)),
        Err(e) if e.kind() == io::ErrorKind::NotFound => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn write_summary<W: Write>(out: &mut W, summary: &ScanSummary) -> Result<(), ScanError> {
    serde_json::to_writer(&mut *out, &serde_json::json!({ "summary": summary }))?;
    out.write_all(b"\n")?;
    out.flush()?;
    Ok(())
}

fn stream<R: BufRead, W: Write>(
    mut reader: R,
    out: &mut W,
    config: &ScanConfig,
    mut state: Checkpoint,
    checkpoint: Option<&Path>,
) -> Result<ScanSummary, ScanError> {
    let pool = pool(config)?;
    let chunk = config.chunk_lines.max(1);
    let mut lines = Vec::with_capacity(chunk);
    let mut buf = String::new();
    loop {
        lines.clear();
        let mut consumed = 0u64;
        while lines.len() < chunk {
            buf.clear();
            let read = reader.read_line(&mut buf)?;
            if read == 0 {
                break;
            }
            consumed += read as u64;
            lines.push(trim_line(&buf).to_string());
        }
        if lines.is_empty() {
            break;
        }
        check_gate(state.next_index, &lines, config)?;
        for r in scan_chunk(&pool, state.next_index, &lines, config) {
            serde_json::to_writer(&mut *out, &r)?;
            out.write_all(b"\n")?;
            state.summary.add(&r);
        }
        out.flush()?;
        state.next_index += lines.len() as u64;
        state.offset += consumed;
        if let Some(path) = checkpoint {
            let tmp = path.with_extension("tmp");
            std::fs::write(&tmp, serde_json::to_vec(&state)?)?;
            std::fs::rename(&tmp, path)?;
        }
    }
    Ok(state.summary)
}
