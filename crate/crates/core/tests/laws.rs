use minkowski_core::laws::*;
use minkowski_core::{regular_polygon, AngleFn, MeasureKind, NormedPlane, PlaneSpec};

fn cfg() -> AuditConfig {
    AuditConfig::with_seed(11).with_grid(24)
}

fn l4() -> NormedPlane {
    NormedPlane::lp(4.0).unwrap()
}

fn report(rs: &[LawReport], id: LawId) -> &LawReport {
    rs.iter().find(|r| r.law_id == id).unwrap()
}

#[test]
fn euclidean_axioms_hold_for_direction_valued_functions() {
    let e = NormedPlane::euclidean();
    let fns = AngleFn::NORM_BASED
        .into_iter()
        .filter(|&f| f != AngleFn::Q)
        .chain([AngleFn::Measure(MeasureKind::SectorArea)]);
    for f in fns {
        for r in audit_axioms(&e, f, &cfg(), 1e-6).unwrap() {
            assert!(r.pass, "{f} {}: {:e}", r.law_id, r.max_violation);
        }
    }
}

#[test]
fn q_angle_folds_obtuse_angles() {
    let e = NormedPlane::euclidean();
    let ev = Evaluator::new(&e, AngleFn::Q).unwrap();
    let r = audit_law(&ev, LawId::Supplementarity, &AuditConfig::with_seed(1).with_grid(6), 1e-6).unwrap();
    assert!(!r.pass);
}

#[test]
fn lp4_p_and_i_angles() {
    let rs = audit_axioms(&l4(), AngleFn::P, &cfg(), 1e-6).unwrap();
    assert!(report(&rs, LawId::Homogeneity).max_violation > 1e-3);
    let rs = audit_axioms(&l4(), AngleFn::I, &cfg(), 1e-12).unwrap();
    assert!(report(&rs, LawId::Supplementarity).pass);
    assert!(!report(&rs, LawId::Homogeneity).pass);
}

#[test]
fn witnesses_reproduce() {
    for f in [AngleFn::P, AngleFn::B, AngleFn::Measure(MeasureKind::ArcLength)] {
        let ev = Evaluator::new(&l4(), f).unwrap();
        for r in audit_axioms(&l4(), f, &cfg(), 1e-6).unwrap() {
            let again = reevaluate(&ev, &r).unwrap();
            assert!((again - r.max_violation).abs() <= 1e-12, "{f} {}", r.law_id);
        }
    }
}

#[test]
fn same_seed_same_reports() {
    let a = audit_axioms(&l4(), AngleFn::Gi, &cfg(), 1e-6).unwrap();
    let b = audit_axioms(&l4(), AngleFn::Gi, &cfg(), 1e-6).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

#[test]
fn congruence() {
    let e = NormedPlane::euclidean();
    let (a, b) = audit_congruence(&e, AngleFn::Thy, &cfg(), 1e-6).unwrap();
    assert!(a.pass && b.pass);
    let (_, b) = audit_congruence(&l4(), AngleFn::Thy, &cfg(), 1e-6).unwrap();
    assert!(b.max_violation > 1e-3);
    // cosine law: equal legs and equal ang_p force equal third sides
    let (a, b) = audit_congruence(&l4(), AngleFn::P, &cfg(), 1e-9).unwrap();
    assert!(a.pass && b.pass);
}

#[test]
fn characterizations() {
    let sc = SuiteConfig::with_seed(7);
    let ip = NormedPlane::new(PlaneSpec::InnerProduct {
        matrix: [[1.0, 0.0], [0.0, 4.0]],
    })
    .unwrap();
    let expect = [
        (NormedPlane::euclidean(), true, true, true),
        (ip, true, true, true),
        (l4(), true, false, false),
        (NormedPlane::lp(1.0).unwrap(), false, false, false),
        (regular_polygon(6, 0.0).unwrap(), false, true, false),
        (regular_polygon(8, 0.0).unwrap(), false, false, false),
    ];
    for (p, sc_, radon, eu) in expect {
        let c = characterization_suite(&p, &sc).unwrap();
        assert_eq!((c.strictly_convex, c.radon, c.euclidean), (sc_, radon, eu), "{:?}", p.spec());
    }
}

#[test]
fn lp4_witnesses() {
    let c = characterization_suite(&l4(), &SuiteConfig::with_seed(7)).unwrap();
    for d in c.radon_detectors.iter().chain(&c.euclidean_detectors) {
        assert!(d.statistic > 1e-3, "{}", d.name);
        assert!(d.witness.is_some());
    }
}

#[test]
fn daf_probe() {
    let e = NormedPlane::euclidean();
    for r in daf_equivalence_probe(&e, &cfg(), 1e-9).unwrap() {
        assert!(r.pass, "{}", r.law_id);
    }
    let rs = daf_equivalence_probe(&l4(), &cfg(), 1e-6).unwrap();
    assert!(!report(&rs, LawId::DafWeakSupplementarity).pass);
    let rs = daf_equivalence_probe(&NormedPlane::lp(1.5).unwrap(), &cfg(), 1e-6).unwrap();
    assert!(!report(&rs, LawId::DafAngleSum).pass);
}

#[test]
fn measure_probes() {
    let r = i_measure_probe(&l4(), MeasureKind::ArcLength, &cfg(), 1e-3).unwrap();
    assert!(!r.pass);
    let e = NormedPlane::euclidean();
    assert!(i_measure_probe(&e, MeasureKind::ArcLength, &cfg(), 1e-9).unwrap().pass);
    assert!(t_measure_probe(&e, MeasureKind::ArcLength, &cfg(), 1e-9).unwrap().pass);
}

#[test]
fn dyadic_levels_on_the_euclidean_plane() {
    let e = NormedPlane::euclidean();
    for f in [AngleFn::P, AngleFn::I, AngleFn::Thy, AngleFn::S, AngleFn::Daf, AngleFn::G] {
        assert!(dyadic_probe(&e, f, 16).unwrap() < 1e-6, "{f}");
    }
}
