mod common;

use classgraph_core::analysis::AnalysisOptions;
use classgraph_core::report::analyze;
use common::corpus;

#[test]
fn corpus_files_are_canonical() {
    for (file, spec, text) in corpus() {
        assert_eq!(spec.to_canonical_json(), text, "{file} is not in canonical form");
    }
}

#[test]
fn corpus_reports_are_clean_and_stable() {
    let opts = AnalysisOptions::default();
    for (file, spec, _) in corpus() {
        let first = analyze(&spec, &opts).unwrap();
        assert!(first.violations().is_empty(), "{file}: {:?}", first.violations());
        assert_eq!(first.to_json(), analyze(&spec, &opts).unwrap().to_json(), "{file}");
    }
}
