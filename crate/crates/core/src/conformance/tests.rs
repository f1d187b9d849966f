use super::*;

#[test]
fn empty_suite() {
    let r = run_suite::<f64>(&[], 4);
    assert_eq!((r.total, r.passed, r.failed, r.skipped), (0, 0, 0, 0));
}

#[test]
fn full_catalog_passes() {
    let r = run_both(&Family::ALL, &DEFAULT_SIZES, 4);
    assert_eq!(r.failed, 0, "{:#?}", &r.failures[..r.failures.len().min(10)]);
    assert_eq!(r.total, r.passed + r.failed + r.skipped);
    assert!(r.total > 1000);
}

#[test]
fn legacy_iamax_fails_only_where_nan_is_present() {
    for n in DEFAULT_SIZES {
        let cases = gen_iamax_real_cases::<f64>(n);
        let r = run_suite_with(&LegacyIamax, &cases, 0);
        for f in &r.failures {
            let c = cases.iter().find(|c| c.id == f.id).unwrap();
            let CaseInput::Real(v) = &c.input else { unreachable!() };
            assert!(v.iter().any(|x| x.is_nan()), "{}", f.id);
        }
        if n >= 2 {
            assert!(r.failed > 0);
        }
        let cell = r.grid.get(&("D:IAMAX_R".to_string(), "g3".to_string())).unwrap();
        assert_eq!(cell.failed, 0);
    }
}

#[test]
fn legacy_complex_iamax_misses_overflowing_proxies() {
    let r = run_suite_with(&LegacyIamax, &gen_iamax_complex_cases::<f32>(10), 0);
    assert!(r.failures.iter().any(|f| f.id.contains("/4A/")));
}

#[test]
fn grid_and_json() {
    let r = run_default::<f32>(&[Family::Iamax], &[10], 4);
    let g = r.render_grid();
    assert!(g.contains("S:IAMAX_R") && g.contains("g1") && g.contains("g3"));
    let v: serde_json::Value = serde_json::from_str(&r.records_json()).unwrap();
    let first = &v.as_array().unwrap()[0];
    for k in ["id", "status", "expected", "got"] {
        assert!(first.get(k).is_some());
    }
}

#[test]
fn family_names() {
    assert_eq!(Family::parse("IAMAX"), Some(Family::Iamax));
    assert_eq!(Family::parse("bogus"), None);
}
