use super::*;
use crate::algebra::field::FieldConfig;
use crate::varieties::spec::rnc;
use crate::varieties::{make_variety, VarietySpec};

fn f() -> FieldConfig {
    FieldConfig::default()
}

fn handle(spec: &str) -> VarietyHandle {
    make_variety(&VarietySpec::from_json(spec).unwrap(), &f()).unwrap()
}

fn ints(v: &[i64]) -> Vector {
    v.iter().map(|&c| f().from_i64(c)).collect()
}

fn dim_deg(x: &VarietyHandle) -> (i64, i64) {
    let h = x.hilbert().unwrap();
    (h.projective_dimension, h.degree)
}

#[test]
fn twisted_cubic_frame() {
    let p = rnc(&f(), 3).unwrap();
    let fr = frame_at(&p, &ints(&[2])).unwrap();
    assert_eq!(fr.span_rows(), vec![ints(&[1, 2, 4, 8]), ints(&[0, 1, 4, 12])]);
    assert_eq!(fr.second_rows(), vec![ints(&[0, 0, 2, 12])]);
    assert_eq!(linalg::rank_of(&f(), &fr.span_rows()), 2);
}

#[test]
fn linear_spaces_have_no_second_order() {
    let x = handle(r#"{"type":"linear","k":2}"#);
    let mut rng = crate::random::rng_for(1, "t", 0);
    let fr = regular_point(x.param().unwrap(), &mut rng).unwrap();
    assert!(fr.second_rows().iter().all(|r| linalg::is_zero_vec(&f(), r)));
}

#[test]
fn fast_dimensions() {
    for (spec, tan, osc, rho) in [
        (r#"{"type":"segre","a":2,"b":2}"#, 7, 8, 0),
        (r#"{"type":"scroll","a":[1,2]}"#, 4, 4, 0),
        (r#"{"type":"veronese","n":2}"#, 4, 5, 0),
        (r#"{"type":"rnc","d":3}"#, 2, 2, 0),
        (r#"{"type":"rnc","d":5}"#, 2, 2, 0),
        (r#"{"type":"rnc","d":1}"#, 1, 1, 1),
        (r#"{"type":"osculating","curve":{"type":"rnc","d":3},"k":1}"#, 3, 3, 1),
        (r#"{"type":"roth","b":2,"N":5}"#, 4, 4, 0),
    ] {
        let x = handle(spec);
        assert_eq!(tan_dim_fast(&x, 3).unwrap(), tan, "tan {spec}");
        assert_eq!(osculating_dim(&x, 2, 3).unwrap(), osc, "osc {spec}");
        assert_eq!(gauss_defect(&x, 3).unwrap(), rho, "gauss {spec}");
    }
    let plane = handle(r#"{"type":"custom","vars":["u","v"],"psi":["1","u","v","0","0"]}"#);
    assert_eq!(gauss_defect(&plane, 3).unwrap(), 2);
}

#[test]
fn secant_dimensions() {
    for (spec, d) in [
        (r#"{"type":"rnc","d":3}"#, 3),
        (r#"{"type":"veronese","n":2}"#, 4),
        (r#"{"type":"scroll","a":[2,3]}"#, 5),
        (r#"{"type":"segre","a":2,"b":2}"#, 7),
    ] {
        assert_eq!(sec_dim_fast(&handle(spec), 3).unwrap(), d, "{spec}");
    }
}

#[test]
fn tangent_varieties_of_curves() {
    for d in 3..=5 {
        let x = handle(&format!(r#"{{"type":"rnc","d":{d}}}"#));
        let t = tangent_variety(&x).unwrap();
        assert_eq!(dim_deg(&t), (2, 2 * d - 2), "rnc({d})");
    }
}

#[test]
fn veronese_surface_tangent_equals_secant() {
    let x = handle(r#"{"type":"veronese","n":2}"#);
    let t = tangent_variety(&x).unwrap();
    let s = secant_variety(&x).unwrap();
    assert_eq!(dim_deg(&t), (4, 3));
    assert_eq!(dim_deg(&s), (4, 3));
    assert!(t.ideal().unwrap().same_ideal(s.ideal().unwrap()).unwrap());
}

#[test]
fn secant_of_twisted_cubic_fills() {
    let s = secant_variety(&handle(r#"{"type":"rnc","d":3}"#)).unwrap();
    assert!(s.ideal().unwrap().is_zero());
    assert_eq!(dim_deg(&s), (3, 1));
}

#[test]
fn tangent_inside_secant() {
    for spec in [
        r#"{"type":"rnc","d":4}"#,
        r#"{"type":"scroll","a":[1,2]}"#,
        r#"{"type":"veronese","n":2}"#,
    ] {
        let x = handle(spec);
        let t = tangent_variety(&x).unwrap();
        let s = secant_variety(&x).unwrap();
        assert!(t.ideal().unwrap().contains_ideal(s.ideal().unwrap()).unwrap(), "{spec}");
        assert_eq!(t.hilbert().unwrap().projective_dimension as usize, tan_dim_fast(&x, 3).unwrap());
    }
}

#[test]
fn tangent_parametrization_is_developable() {
    for spec in [r#"{"type":"rnc","d":3}"#, r#"{"type":"rnc","d":4}"#, r#"{"type":"scroll","a":[2,3]}"#] {
        let t = tangent_handle(&handle(spec)).unwrap();
        assert!(gauss_defect(&t, 3).unwrap() >= 1, "{spec}");
    }
}
