use surfinv::formats::{CaseReportJson, CocycleJson, LaurentJson, MovieJson, PresentationJson, QuandleJson};
use surfinv_core::braid::{garside_delta, BraidWord};
use surfinv_core::chart::{build_movie, validate_movie, MovieLimits};
use surfinv_core::group::link_group;
use surfinv_core::quandle::{dihedral_quandle, theta_z, trivial_quandle, LaurentPoly};
use surfinv_core::triple::certify_lower_bound;

fn round_trip<T: serde::Serialize + serde::de::DeserializeOwned>(v: &T) -> T {
    serde_json::from_str(&serde_json::to_string(v).unwrap()).unwrap()
}

#[test]
fn presentation() {
    let a = BraidWord::from_signed(3, &[1, 1]).unwrap();
    let p = link_group(&a, &garside_delta(3).unwrap().pow(2)).unwrap();
    let j = PresentationJson::from(&p);
    assert_eq!(round_trip(&j).to_presentation().unwrap(), p);
    let text = serde_json::to_string(&j).unwrap();
    assert!(text.starts_with(r#"{"generatorCount":3,"relators":[["#));
    let bad = PresentationJson { generator_count: 2, relators: vec![vec![3]] };
    assert!(bad.to_presentation().is_err());
}

#[test]
fn quandle_and_cocycle() {
    let q = dihedral_quandle(5).unwrap();
    assert_eq!(round_trip(&QuandleJson::from(&q)).to_quandle().unwrap(), q);
    let theta = theta_z(3).unwrap();
    let t3 = trivial_quandle(3).unwrap();
    assert_eq!(round_trip(&CocycleJson::from(&theta)).to_cocycle(&t3).unwrap(), theta);
    let builtin: CocycleJson = serde_json::from_str(r#"{"builtin": "theta_z"}"#).unwrap();
    assert_eq!(builtin.to_cocycle(&t3).unwrap(), theta);
    let unknown: CocycleJson = serde_json::from_str(r#"{"builtin": "theta_w"}"#).unwrap();
    assert!(unknown.to_cocycle(&t3).is_err());
}

#[test]
fn movie() {
    let a = BraidWord::from_signed(3, &[1, 1, -2, -2]).unwrap();
    let m = build_movie(&a, &garside_delta(3).unwrap().pow(2), &MovieLimits::default()).unwrap();
    let j = MovieJson::from(&m);
    let back = round_trip(&j).to_movie().unwrap();
    assert_eq!(back, m);
    validate_movie(&back).unwrap();
    let text = serde_json::to_string(&j).unwrap();
    assert!(text.contains(r#"{"type":"R3","position":3,"labels":[1,2],"signs":[1,1,1]}"#), "{text}");
}

#[test]
fn laurent() {
    let p = LaurentPoly::from_terms([(-2, 4), (0, 21), (4, 2)]);
    let j = LaurentJson::from(&p);
    assert_eq!(j.text, "4*t^-2 + 21 + 2*t^4");
    assert_eq!(j.terms, [[-2, 4], [0, 21], [4, 2]]);
    assert_eq!(round_trip(&j).to_poly(), p);
}

#[test]
fn case_report() {
    let r = certify_lower_bound(2);
    let j = CaseReportJson::from(&r);
    assert!(j.holds);
    assert_eq!(j.lower_bound, Some(3));
    assert_eq!(round_trip(&j).to_report().unwrap(), r);
    let mut tampered = j.clone();
    tampered.survivors[1].case = "3.2".into();
    assert!(tampered.to_report().is_err());
}
