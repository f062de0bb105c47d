//! Smoke-level run of the whole law catalogue, plus registry and
//! determinism contracts. The full 200-trial acceptance run lives in the
//! CLI crate's acceptance suite.

use gvpfrs_core::connectives::Overlap;
use gvpfrs_core::laws::{law_anchor, law_ids, run_laws, LawConfig, LawError, LawStatus};

#[test]
fn every_law_passes_a_short_run() {
    let ids = law_ids();
    let cfg = LawConfig {
        trials: 40,
        seed: 7,
        ..LawConfig::default()
    };
    let outcomes = run_laws(&ids, &cfg).unwrap();
    for o in &outcomes {
        assert_eq!(
            o.status,
            LawStatus::Pass,
            "law {} ({}): {} failures, {} premise-satisfying, worst {:e}, {:?}",
            o.id,
            o.anchor,
            o.failures,
            o.premise_satisfied,
            o.max_violation,
            o.counterexamples
        );
        assert!(o.premise_satisfied > 0);
    }
}

#[test]
fn law_runs_are_deterministic() {
    let ids = ["prop3.3-duality", "prop4.8-preorder-lower-equals-g", "lemma3.1-crisp-duality"];
    let cfg = LawConfig {
        trials: 25,
        seed: 99,
        ..LawConfig::default()
    };
    let a = run_laws(&ids, &cfg).unwrap();
    let b = run_laws(&ids, &cfg).unwrap();
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
}

#[test]
fn unknown_law_suggests_nearest() {
    let err = run_laws(&["prop3.3-dualty"], &LawConfig::default()).unwrap_err();
    match err {
        LawError::UnknownLaw { id, suggestion } => {
            assert_eq!(id, "prop3.3-dualty");
            assert_eq!(suggestion.as_deref(), Some("prop3.3-duality"));
        }
        other => panic!("unexpected error {other:?}"),
    }
}

#[test]
fn exchange_gated_laws_go_inconclusive_under_harmonic_override() {
    // the harmonic overlap violates the exchange principle, so laws
    // premised on it must report premise-unmet rather than failures
    let cfg = LawConfig {
        trials: 10,
        overlap: Some(Overlap::Harmonic),
        ..LawConfig::default()
    };
    let outcomes = run_laws(&["prop4.7-transitive-lower-below-g"], &cfg).unwrap();
    assert_eq!(outcomes[0].status, LawStatus::Inconclusive);
    assert_eq!(outcomes[0].failures, 0);
    assert_eq!(outcomes[0].premise_satisfied, 0);
}

#[test]
fn anchors_are_registered() {
    assert_eq!(law_anchor("prop4.14-crisp-cardinality"), Some("Prop 4.14"));
    assert!(law_anchor("nope").is_none());
    assert!(law_ids().len() >= 50);
}
