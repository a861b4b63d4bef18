use std::collections::HashSet;

use dwork::check::all_checks;

#[test]
fn ids_unique_and_prefixed() {
    let checks = all_checks();
    let ids: HashSet<_> = checks.iter().map(|c| c.id).collect();
    assert_eq!(ids.len(), checks.len());
    for c in &checks {
        let head = c.id.split('.').next().unwrap();
        assert!(["dwork", "dp5", "pluecker", "picard", "fiber"].contains(&head), "{}", c.id);
        assert!(!c.provenance.is_empty());
    }
}

#[test]
fn suite_sizes() {
    let count = |p: &str| all_checks().iter().filter(|c| c.id.starts_with(p)).count();
    assert_eq!(count("dwork."), 15);
    assert_eq!(count("dp5."), 8);
    assert_eq!(count("pluecker."), 8);
    assert_eq!(count("picard."), 11);
    assert_eq!(count("fiber."), 14);
}
