use enriques_core::report::{run, RunOptions, Status, Suite, VerificationReport};

#[test]
fn same_seed_same_report() {
    let opts = RunOptions { suite: Suite::Char2, config_index: 3, seed: 11 };
    let a = run(&opts).without_timing();
    let b = run(&opts).without_timing();
    assert_eq!(a, b);
    assert!(a.all_passed());
    let c = run(&RunOptions { seed: 12, ..opts }).without_timing();
    assert_ne!(a.checks[0].witness["specializations"], c.checks[0].witness["specializations"]);
}

#[test]
fn json_round_trip_and_criteria() {
    let r = run(&RunOptions { suite: Suite::Lattice, config_index: 100, seed: 0 });
    assert!(r.all_passed(), "{}", r.to_json().unwrap());
    for n in 3..=5 {
        assert_eq!(r.by_criterion(n).unwrap().status, Status::Pass);
    }
    assert!(r.by_criterion(7).is_none());
    let back = VerificationReport::from_json(&r.to_json().unwrap()).unwrap();
    assert_eq!(back, r);
}
