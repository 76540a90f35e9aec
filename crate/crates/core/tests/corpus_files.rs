use std::io::Write;

use wplab::corpus::{enumerate_graphs, enumerate_graphs_with, graph6, read_graph6_file, ReadMode, Source};
use wplab::{Error, Execution, Graph};

fn file_with(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn written_enumeration_reads_back() {
    let graphs = enumerate_graphs(5, false).unwrap().collect_graphs().unwrap();
    let text: String = graphs.iter().map(|g| graph6::encode(g).unwrap() + "\n").collect();
    let f = file_with(&text);
    let stream = read_graph6_file(f.path(), ReadMode::Strict).unwrap();
    assert_eq!(stream.source(), &Source::File(f.path().to_path_buf()));
    assert_eq!(stream.collect_graphs().unwrap(), graphs);
}

#[test]
fn header_crlf_and_blank_lines() {
    let f = file_with(">>graph6<<Bw\r\n\r\nA_\n\n");
    let graphs = read_graph6_file(f.path(), ReadMode::Strict).unwrap().collect_graphs().unwrap();
    assert_eq!(graphs, vec![Graph::complete(3).unwrap(), Graph::complete(2).unwrap()]);
}

#[test]
fn strict_mode_reports_the_line() {
    let f = file_with("Bw\nA_\nB~~\nA?\n");
    let err = read_graph6_file(f.path(), ReadMode::Strict).unwrap().collect_graphs().unwrap_err();
    match err {
        Error::Line { line, .. } => assert_eq!(line, 3),
        other => panic!("unexpected {other:?}"),
    }
    assert!(matches!(err.root(), Error::Parse { .. }));
}

#[test]
fn lenient_mode_skips_and_counts() {
    let f = file_with("Bw\n!!\nBx\nA?\n");
    let mut stream = read_graph6_file(f.path(), ReadMode::Lenient).unwrap();
    let graphs: Vec<Graph> = stream.by_ref().collect::<Result<_, _>>().unwrap();
    assert_eq!(graphs.len(), 3);
    assert_eq!(graphs[1], Graph::complete(3).unwrap());
    assert_eq!(stream.skipped(), 1);
    assert_eq!(stream.padding_warnings(), 1);
    assert_eq!(stream.count_emitted(), 3);
}

#[test]
fn missing_file_is_an_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let err = read_graph6_file(dir.path().join("absent.g6"), ReadMode::Strict).err().unwrap();
    assert!(matches!(err, Error::Io(_)));
}

#[test]
fn enumeration_is_deterministic_across_modes() {
    for n in 1..=7 {
        let seq = enumerate_graphs_with(n, false, Execution::Sequential).unwrap().collect_graphs().unwrap();
        let par = enumerate_graphs_with(n, false, Execution::Parallel).unwrap().collect_graphs().unwrap();
        assert_eq!(seq, par, "n={n}");
    }
}

#[test]
fn order_nine_is_refused() {
    assert!(matches!(enumerate_graphs(9, false).err().unwrap(), Error::Capacity(_)));
}
