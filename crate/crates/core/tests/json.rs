mod common;

use common::*;
use g2lab::json::{
    endo_to_json, form_to_json, parse_endo7, parse_form, parse_recover_input, parse_vec7,
    vec7_to_json, JsonError,
};
use g2lab::scalar::{format_rational, parse_rational};
use g2lab::{Endo7, Q};
use proptest::prelude::*;

#[test]
fn syntax_errors_carry_location() {
    match parse_endo7("{\"rows\": [[1, 2,]]}") {
        Err(JsonError::Syntax { line, column, .. }) => assert_eq!((line, column), (1, 17)),
        other => panic!("{other:?}"),
    }
}

#[test]
fn schema_errors_name_the_entry() {
    let mut rows = vec![vec!["0"; 7]; 7];
    rows[3][5] = "1/0";
    let text = serde_json::json!({ "rows": rows }).to_string();
    let err = parse_endo7(&text).unwrap_err();
    assert!(err.to_string().contains("$.rows[3][5]"), "{err}");
    assert!(parse_vec7("[1,2,3]").is_err());
    assert!(parse_form(r#"{"degree": 2, "coeffs": {"1,0": "1"}}"#).is_err());
    assert!(parse_form(r#"{"degree": 2, "coeffs": {"0,7": "1"}}"#).is_err());
    assert!(parse_recover_input(
        r#"{"d_phi": {"degree": 3, "coeffs": {}}, "d_star_phi": {"degree": 5, "coeffs": {}}}"#
    )
    .is_err());
}

#[test]
fn integers_and_strings_are_both_accepted() {
    let a = parse_endo7(&serde_json::json!({ "rows": vec![vec![1; 7]; 7] }).to_string()).unwrap();
    let b =
        parse_endo7(&serde_json::json!({ "rows": vec![vec!["2/2"; 7]; 7] }).to_string()).unwrap();
    assert_eq!(a, b);
    assert_eq!(a, Endo7::<Q>::from_fn(|_, _| q(1)));
}

fn rational() -> impl Strategy<Value = Q> {
    (-1000i64..1000, 1i64..50).prop_map(|(n, d)| Q::new(n.into(), d.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_text_round_trip(x in rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
    }

    #[test]
    fn endo_round_trip(a in endo(), d in 1i64..9) {
        let a = a.scaled(&Q::new(1.into(), d.into()));
        prop_assert_eq!(parse_endo7(&endo_to_json(&a).to_string()).unwrap(), a);
    }

    #[test]
    fn vec_round_trip(v in vec7()) {
        prop_assert_eq!(parse_vec7(&vec7_to_json(&v).to_string()).unwrap(), v);
    }

    #[test]
    fn form_round_trip(f in any_form()) {
        let text = form_to_json(&f).to_string();
        prop_assert_eq!(parse_form(&text).unwrap(), f.clone());
        prop_assert_eq!(form_to_json(&parse_form(&text).unwrap()).to_string(), text);
    }

    #[test]
    fn parsers_never_panic(s in ".{0,64}") {
        let _ = parse_rational(&s);
        let _ = parse_endo7(&s);
        let _ = parse_form(&s);
        let _ = parse_recover_input(&s);
    }
}
