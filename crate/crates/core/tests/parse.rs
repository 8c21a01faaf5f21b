mod common;

use proptest::prelude::*;
use qmat::parse::{parse, parse_q_value};
use qmat::{Algebra, Error};

use common::{m22, poly};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn printed_polynomials_parse_back(p in poly(m22(), 4, 5)) {
        let a = m22();
        prop_assert_eq!(parse(&p.to_string(), &a).unwrap(), p.normal_form());
    }

    #[test]
    fn printed_tensor_elements_parse_back(p in poly(Algebra::affine_tensor(2, 3).unwrap(), 4, 5)) {
        let t = Algebra::affine_tensor(2, 3).unwrap();
        prop_assert_eq!(parse(&p.to_string(), &t).unwrap(), p.normal_form());
    }

    #[test]
    fn garbage_never_panics(text in "[-+*/^()\\[\\],qXyz0-9 ]{0,24}") {
        let _ = parse(&text, &m22());
    }
}

#[test]
fn error_positions_are_character_offsets() {
    let a = m22();
    match parse("X[1,1] * é", &a) {
        Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 9),
        other => panic!("{other:?}"),
    }
    match parse("(X[1,1]", &a) {
        Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 7),
        other => panic!("{other:?}"),
    }
}

#[test]
fn q_values() {
    assert_eq!(parse_q_value("2").unwrap().to_string(), "2");
    assert_eq!(parse_q_value(" -5/3 ").unwrap().to_string(), "-5/3");
    assert!(parse_q_value("q").is_err());
}
