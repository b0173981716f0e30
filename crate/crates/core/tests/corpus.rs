use confal::corpus::{all_cases, run_corpus, run_case};
use confal::exec::Exec;

#[test]
fn corrected_cases_say_how_they_differ() {
    let cases = all_cases();
    let corrected: Vec<&str> = cases.iter().filter(|c| c.reading.is_some()).map(|c| c.tag).collect();
    for tag in ["(3.21)", "(3.22)", "(3.41)", "(3.55)", "(4.54)", "(4.85)"] {
        assert!(corrected.contains(&tag), "{tag}");
    }
    assert!(cases.iter().all(|c| c.reading.is_none_or(|r| !r.is_empty())));
}

#[test]
fn eigenvalue_identities_hold() {
    let r = run_corpus(&["(3.7)".into(), "(4.13)".into(), "(4.14)".into()], Exec::Parallel).unwrap();
    assert_eq!(r.cases.len(), 3);
    assert!(r.passed(), "{:?}", r.failed);
    assert!(r.cases.iter().all(|c| c.instances > 0 && c.first_mismatches.is_empty()));
}

#[test]
fn membership_cases_hold() {
    for tag in ["(3.54)", "(4.32)", "(4.33)", "(4.35)"] {
        let case = all_cases().into_iter().find(|c| c.tag == tag).unwrap();
        let r = run_case(&case).unwrap();
        assert!(r.passed(), "{tag}: {:?}", r.first_mismatches);
    }
}

#[test]
fn unknown_tags_select_nothing() {
    let r = run_corpus(&["(9.99)".into()], Exec::Sequential).unwrap();
    assert!(r.cases.is_empty());
    assert!(!r.passed());
}
