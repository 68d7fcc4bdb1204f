use kestab::catalog::{self, so4_published_facet_volume, SO4_FACET_ERRATUM, SP4_DIGIT_TYPO, SP4_VOLUME_SWAP};
use kestab::criterion::ke_verdict;
use kestab::polytope::delzant_check;
use kestab::{NumberFormat, Rational, Verdict};

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

#[test]
fn every_entry_verifies_exactly() {
    for r in catalog::verify_all().unwrap() {
        assert!(r.passed(), "{}", r.render(NumberFormat::Exact));
    }
}

#[test]
fn weyl_orbits_are_delzant() {
    for e in catalog::all_entries() {
        let p = e.moment_polytope().unwrap();
        let rep = delzant_check(&p);
        assert!(rep.is_smooth(), "{} {:?}", e.id, rep.offending);
    }
}

#[test]
fn moment_polytope_vertex_counts() {
    let counts: Vec<usize> =
        catalog::all_entries().iter().map(|e| e.moment_polytope().unwrap().vertices().len()).collect();
    assert_eq!(counts, [4, 6, 10, 8, 4, 16]);
}

#[test]
fn so4_one_and_sp4_two() {
    let e = catalog::get_entry("so4-1").unwrap();
    assert_eq!(e.expected_volume, q(648, 5));
    assert_eq!(e.expected_verdict, Verdict::KeExists);
    let r = catalog::verify("sp4-2").unwrap();
    assert_eq!(r.barycenter.0, vec![q(50, 11), q(875, 352)]);
    assert!(r.notes.is_empty());
}

#[test]
fn published_discrepancies_are_reported_not_hidden() {
    let flagged: Vec<&str> =
        catalog::all_entries().into_iter().filter(|e| e.has_published_discrepancy()).map(|e| e.id).collect();
    assert_eq!(flagged, ["sp4-1", "sp4-3"]);
    let sp41 = catalog::get_entry("sp4-1").unwrap();
    let sp43 = catalog::get_entry("sp4-3").unwrap();
    assert_eq!(sp41.published_volume, sp43.expected_volume);
    assert_eq!(sp43.published_volume, sp41.expected_volume);
    assert!(sp43.notes.contains(&SP4_DIGIT_TYPO));
    assert!(sp41.notes.contains(&SP4_VOLUME_SWAP));
    for id in ["so4-1", "so4-2", "so4-3"] {
        let r = catalog::verify(id).unwrap();
        assert!(r.notes.iter().any(|n| n == SO4_FACET_ERRATUM));
    }
}

#[test]
fn printed_so4_facet_gives_a_different_volume() {
    let v = so4_published_facet_volume().unwrap();
    assert_eq!(v, q(512, 45));
    assert_ne!(v, q(648, 5));
}

#[test]
fn so4_slack_along_the_short_root_decreases() {
    // Each case cuts the previous polytope; the (1,-1) slack goes from
    // positive to negative and keeps falling, while the (1,1) slack does not
    // follow a monotone pattern.
    let slack = |id: &str, normal: [i64; 2]| {
        let e = catalog::get_entry(id).unwrap();
        let rep = ke_verdict(&e.roots(), &e.positive_part().unwrap()).unwrap();
        rep.facet_slacks.iter().find(|(n, _)| n.0 == normal).unwrap().1.clone()
    };
    let s: Vec<Rational> = ["so4-1", "so4-2", "so4-3"].iter().map(|id| slack(id, [1, -1])).collect();
    assert!(s[0] > s[1] && s[1] > s[2]);
    assert_eq!(s[0], q(8, 7));
    let t: Vec<Rational> = ["so4-1", "so4-2", "so4-3"].iter().map(|id| slack(id, [1, 1])).collect();
    assert!(t[1] > t[0]);
}

#[test]
fn verdicts_match_expectations() {
    for e in catalog::all_entries() {
        let rep = ke_verdict(&e.roots(), &e.moment_polytope().unwrap()).unwrap();
        assert_eq!(rep.verdict, e.expected_verdict, "{}", e.id);
        assert_eq!(rep.no_soliton_flag, e.expected_verdict == Verdict::KUnstable);
    }
}
