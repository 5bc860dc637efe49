use oddaut::cases::{run_property_suites, Outcome, SuiteLimits, SUITES};
use oddaut::catalog::test_catalog;
use oddaut::Group;

#[test]
fn suites_pass_on_test_catalog() {
    let groups: Vec<(String, Group)> = test_catalog().iter().map(|e| (e.name.clone(), e.build().unwrap())).collect();
    assert!(groups.len() >= 40);
    let orders: Vec<usize> = groups.iter().map(|(_, g)| g.order()).collect();
    assert!(orders.contains(&12) && orders.contains(&21) && orders.contains(&27));
    assert!(groups.iter().any(|(_, g)| !g.is_abelian()));

    let report = run_property_suites(&groups, SuiteLimits::default());
    assert_eq!(report.results.len(), groups.len() * SUITES.len());
    let failures: Vec<String> = report
        .failures()
        .iter()
        .map(|r| format!("{} on {}: {:?}", r.suite, r.group, r.outcome))
        .collect();
    assert!(failures.is_empty(), "{failures:#?}");
    for suite in SUITES {
        let passed = report.results.iter().filter(|r| r.suite == suite && r.outcome == Outcome::Pass).count();
        assert!(passed > 0, "{suite} never applied");
    }
}
