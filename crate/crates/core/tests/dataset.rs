use tautcalc::msd::{config_count, parse_dataset, table_total, Dataset, Prongs};
use tautcalc::Error;

#[test]
fn every_shipped_config_counts_to_a_positive_integer() {
    let ds = Dataset::embedded();
    assert_eq!(ds.configs.len(), 11);
    for c in &ds.configs {
        let n = config_count(c).unwrap_or_else(|e| panic!("{}: {e}", c.label()));
        assert!(n > 0, "{}", c.label());
        assert!(!c.citation.is_empty(), "{}", c.label());
    }
}

#[test]
fn grand_total_is_sum_of_entries() {
    let ds = Dataset::embedded();
    for id in ds.ids() {
        let r = table_total(id, &ds.table(id)).unwrap();
        assert_eq!(r.total, r.entries.iter().map(|e| e.count).sum::<u64>());
    }
}

#[test]
fn table_columns_are_numbered_in_order() {
    let ds = Dataset::embedded();
    for id in ds.ids() {
        let cols: Vec<u32> = ds.table(id).iter().map(|c| c.column).collect();
        assert_eq!(cols, (1..=cols.len() as u32).collect::<Vec<_>>(), "{id}");
    }
}

#[test]
fn recorded_prong_classes() {
    let ds = Dataset::embedded();
    let c = &ds.table("6-222")[3];
    assert_eq!(c.prongs, Prongs::Classes(3));
    assert_eq!(config_count(c).unwrap(), 2);
}

#[test]
fn mis_entered_row_reports_its_citation() {
    let text = "version=1\n\
                stratum=t signature=\"4;-2,-2\" cite=\"test\"\n\
                table=t col=1 twisted=1 prongs=2,2 params=1,1 sym=3 cite=\"row under test\"\n";
    let ds = parse_dataset(text).unwrap();
    let err = table_total("t", &ds.table("t")).unwrap_err();
    match err {
        Error::Model { label, citation, .. } => {
            assert_eq!(label, "t col 1");
            assert_eq!(citation, "row under test");
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn comments_and_blank_lines_are_ignored() {
    let text = "# header\n\nversion=1\n# strata\nstratum=t signature=\"4;-2,-2\"\n\n";
    let ds = parse_dataset(text).unwrap();
    assert_eq!(ds.ids(), ["t"]);
    assert!(ds.configs.is_empty());
}
