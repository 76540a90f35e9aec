//! Graph sources: the graph6 codec, exhaustive generation, and line-oriented
//! graph6 files, all behind [`CorpusStream`].

pub mod generate;
pub mod graph6;

use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par::Execution;

pub use generate::MAX_GENERATED_ORDER;
pub use graph6::Padding;

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Generated { n: usize, connected_only: bool },
    File(PathBuf),
    Stream(String),
}

/// Error handling for graph6 files.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReadMode {
    /// The first malformed line is reported and ends the stream.
    #[default]
    Strict,
    /// Malformed lines are skipped and counted; padding bits are tolerated.
    Lenient,
}

enum Inner {
    Buffered(std::vec::IntoIter<Graph>),
    Lines {
        reader: Box<dyn BufRead + Send>,
        mode: ReadMode,
        failed: bool,
    },
}

/// Ordered, single-consumer source of graphs.
pub struct CorpusStream {
    source: Source,
    inner: Inner,
    cursor: usize,
    count_emitted: usize,
    skipped: usize,
    padding_warnings: usize,
}

impl CorpusStream {
    pub fn source(&self) -> &Source {
        &self.source
    }

    /// Lines (or items) consumed so far.
    pub fn cursor(&self) -> usize {
        self.cursor
    }

    pub fn count_emitted(&self) -> usize {
        self.count_emitted
    }

    /// Malformed lines dropped in lenient mode.
    pub fn skipped(&self) -> usize {
        self.skipped
    }

    /// Lines accepted despite nonzero padding bits (lenient mode).
    pub fn padding_warnings(&self) -> usize {
        self.padding_warnings
    }

    pub fn from_graphs(source: Source, graphs: Vec<Graph>) -> Self {
        CorpusStream {
            source,
            inner: Inner::Buffered(graphs.into_iter()),
            cursor: 0,
            count_emitted: 0,
            skipped: 0,
            padding_warnings: 0,
        }
    }

    pub fn from_reader(label: impl Into<String>, reader: impl BufRead + Send + 'static, mode: ReadMode) -> Self {
        Self::lines(Source::Stream(label.into()), Box::new(reader), mode)
    }

    fn lines(source: Source, reader: Box<dyn BufRead + Send>, mode: ReadMode) -> Self {
        CorpusStream {
            source,
            inner: Inner::Lines {
                reader,
                mode,
                failed: false,
            },
            cursor: 0,
            count_emitted: 0,
            skipped: 0,
            padding_warnings: 0,
        }
    }

    /// Drains the stream, stopping at the first error.
    pub fn collect_graphs(self) -> Result<Vec<Graph>> {
        self.collect()
    }

    fn next_line(&mut self) -> Option<Result<Graph>> {
        let Inner::Lines { reader, mode, failed } = &mut self.inner else {
            unreachable!()
        };
        if *failed {
            return None;
        }
        let mode = *mode;
        loop {
            let mut buf = Vec::new();
            match reader.read_until(b'\n', &mut buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(e) => {
                    *failed = true;
                    return Some(Err(e.into()));
                }
            }
            self.cursor += 1;
            let line_no = self.cursor;
            let mut line: &[u8] = &buf;
            if line.last() == Some(&b'\n') {
                line = &line[..line.len() - 1];
            }
            if line.last() == Some(&b'\r') {
                line = &line[..line.len() - 1];
            }
            if let Some(rest) = line.strip_prefix(HEADER.as_bytes()) {
                line = rest;
            }
            if line.is_empty() {
                continue;
            }
            let padding = match mode {
                ReadMode::Strict => Padding::Strict,
                ReadMode::Lenient => Padding::Lenient,
            };
            match graph6::decode_with(line, padding) {
                Ok((g, padded)) => {
                    if padded {
                        self.padding_warnings += 1;
                    }
                    return Some(Ok(g));
                }
                Err(e) if mode == ReadMode::Lenient => {
                    let _ = e;
                    self.skipped += 1;
                }
                Err(e) => {
                    *failed = true;
                    return Some(Err(Error::Line {
                        line: line_no,
                        source: Box::new(e),
                    }));
                }
            }
        }
    }
}

impl Iterator for CorpusStream {
    type Item = Result<Graph>;

    fn next(&mut self) -> Option<Result<Graph>> {
        let item = match &mut self.inner {
            Inner::Buffered(it) => {
                let g = it.next()?;
                self.cursor += 1;
                Some(Ok(g))
            }
            Inner::Lines { .. } => self.next_line(),
        };
        if matches!(item, Some(Ok(_))) {
            self.count_emitted += 1;
        }
        item
    }
}

/// Exhaustive isomorph-free stream of graphs on `n` vertices (1 ≤ n ≤ 8).
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<CorpusStream> {
    enumerate_graphs_with(n, connected_only, Execution::default())
}

pub fn enumerate_graphs_with(n: usize, connected_only: bool, exec: Execution) -> Result<CorpusStream> {
    let graphs = generate::classes(n, connected_only, exec)?;
    Ok(CorpusStream::from_graphs(Source::Generated { n, connected_only }, graphs))
}

/// Streams graphs from a file with one graph6 string per line.
pub fn read_graph6_file(path: impl AsRef<Path>, mode: ReadMode) -> Result<CorpusStream> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Ok(CorpusStream::lines(
        Source::File(path.to_path_buf()),
        Box::new(BufReader::new(file)),
        mode,
    ))
}
