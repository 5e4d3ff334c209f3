use berger_lens::locus::{
    export_locus_csv, export_sr_csv, sample_cut_locus, sr_limit_sweep, Stratum, LOCUS_HEADER,
};
use berger_lens::numfmt::sig17;
use berger_lens::{Execution, MetricParams};

#[test]
fn locus_csv_round_trips() {
    let m = MetricParams::with_eta(5, 2, 1.0, -0.9).unwrap();
    let samples = sample_cut_locus(&m, 12, 7, Execution::Parallel).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("locus.csv");
    export_locus_csv(&samples, &path).unwrap();

    let mut rd = csv::Reader::from_path(&path).unwrap();
    assert_eq!(rd.headers().unwrap().iter().collect::<Vec<_>>(), LOCUS_HEADER);
    let rows: Vec<csv::StringRecord> = rd.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), samples.len());
    for (row, s) in rows.iter().zip(&samples) {
        let num = |i: usize| row[i].parse::<f64>().unwrap();
        let x = s.point.rep;
        let want = [s.h3bar, s.phi, s.t_cut, s.tau, x.q0, x.q1, x.q2, x.q3];
        let got = [num(0), num(1), num(2), num(3), num(5), num(6), num(7), num(8)];
        for (g, w) in got.iter().zip(want) {
            assert_eq!(sig17(*g), sig17(w));
        }
        assert_eq!(&row[4], s.regime.as_str());
        assert_eq!(&row[9], s.stratum.as_str());
    }
    assert!(samples.iter().any(|s| s.stratum == Stratum::IntervalSegment));
}

#[test]
fn empty_exports_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    assert!(export_locus_csv(&[], &dir.path().join("a.csv")).is_err());
    assert!(export_sr_csv(&[], &dir.path().join("b.csv")).is_err());
    assert!(!dir.path().join("a.csv").exists());
}

#[test]
fn io_errors_surface() {
    let m = MetricParams::with_eta(2, 1, 1.0, 0.0).unwrap();
    let s = sample_cut_locus(&m, 2, 2, Execution::Sequential).unwrap();
    let err = export_locus_csv(&s, std::path::Path::new("/nonexistent/dir/x.csv")).unwrap_err();
    assert!(matches!(err, berger_lens::Error::Io(_)));
}

#[test]
fn sr_csv_has_four_columns() {
    let m = MetricParams::with_eta(3, 1, 1.0, -0.9).unwrap();
    let rows = sr_limit_sweep(&m, &[-0.9, -0.99]).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sr.csv");
    export_sr_csv(&rows, &path).unwrap();
    let text = std::fs::read_to_string(path).unwrap();
    assert!(text.lines().skip(1).all(|l| l.split(',').count() == 4));
}
