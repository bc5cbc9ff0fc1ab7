use super::*;
use crate::structures::{catalog, check_algebra, check_balanced, check_bimodule, check_left_module, check_module};

const MINIMAL_VEC: &str = r#"{
  "field": "q",
  "ambient": "2vect",
  "algebras": [
    {"name": "Vec", "simples": ["1"], "unit": [0], "fusion": [[0, 0, 0, 1]], "mu_default": "1"}
  ]
}"#;

#[test]
fn minimal_vec_document_has_one_rank_one_algebra() {
    let doc = Document::parse(MINIMAL_VEC).unwrap();
    assert_eq!(doc.algebras.len(), 1);
    let ws = Workspace::build(&doc, None, None).unwrap();
    let alg = ws.algebra("Vec").unwrap();
    assert_eq!(alg.rank(), 1);
    assert!(check_algebra(&alg).passed());
}

#[test]
fn literal_with_powers_of_z_parses_under_conductor_eight() {
    let text = MINIMAL_VEC
        .replace("\"q\"", "\"cyclotomic:8\"")
        .replace("\"mu_default\": \"1\"", "\"mu_default\": \"1/2*z^3 - 2\"");
    let doc = Document::parse(&text).unwrap();
    assert_eq!(doc.algebras[0].mu_default.as_deref(), Some("1/2*z^3 - 2"));
}

#[test]
fn syntax_errors_carry_line_and_column() {
    let text = "{\n  \"field\": \"q\"\n  \"ambient\": \"2vect\"\n}";
    match Document::parse(text) {
        Err(Error::Parse { line, col, .. }) => assert_eq!((line, col), (3, 3)),
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn unknown_module_reference_is_named() {
    let mut doc = builtin_documents().into_iter().find(|(n, _)| n == "vec_z2").unwrap().1;
    doc.balanced[0].left = "Ghost".into();
    let err = doc.validate().unwrap_err();
    assert!(matches!(&err, Error::Unresolved(r) if r.starts_with("Ghost")), "{err}");
    assert!(err.to_string().contains("Ghost"));
}

#[test]
fn duplicate_names_and_bad_literals_are_rejected() {
    let mut doc = Document::parse(MINIMAL_VEC).unwrap();
    doc.algebras.push(doc.algebras[0].clone());
    assert!(doc.validate().is_err());
    let text = MINIMAL_VEC.replace("\"mu_default\": \"1\"", "\"mu_default\": \"z\"").replace("\"q\"", "\"gf:5\"");
    assert!(Document::parse(&text).is_err());
}

#[test]
fn changing_the_conductor_under_a_z_literal_is_a_mismatch() {
    let text =
        MINIMAL_VEC.replace("\"q\"", "\"cyclotomic:8\"").replace("\"mu_default\": \"1\"", "\"mu_default\": \"z^8\"");
    let doc = Document::parse(&text).unwrap();
    let err = Workspace::build(&doc, Some(FieldSpec::Cyclotomic(4)), None).unwrap_err();
    assert!(err.to_string().contains("conductor mismatch"), "{err}");
    assert!(Workspace::build(&Document::parse(MINIMAL_VEC).unwrap(), Some(FieldSpec::Prime(7)), None).is_ok());
}

#[test]
fn printing_then_parsing_is_the_identity_on_builtin_documents() {
    for (name, doc) in builtin_documents() {
        let text = doc.print();
        let back = Document::parse(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(back, doc, "{name}");
        assert_eq!(back.print(), text, "{name}");
    }
}

#[test]
fn built_algebras_reproduce_the_catalog_fusion_data() {
    let cat = Catalog::builtin();
    for data in catalog::all_fusion() {
        let (_, doc) = cat.find(&[data.name.as_str()]).unwrap();
        let ws = Workspace::build(doc, None, None).unwrap();
        assert_eq!(ws.fusion_data(&data.name).unwrap(), &data);
    }
}

#[test]
fn built_modules_match_the_catalog_constructions() {
    let cat = Catalog::builtin();
    let ws = Workspace::build(cat.get("vec_z2").unwrap(), None, None).unwrap();
    let alg = ws.algebra("VecZ2").unwrap();
    let expected = catalog::group_algebra_right_module(&alg).unwrap();
    let got = ws.right_module("GroupAlgebraModule").unwrap();
    assert!(got.nu.entries().eq(expected.nu.entries()));
    assert!(got.rho.entries().eq(expected.rho.entries()));
    let expected = catalog::group_algebra_left_module(&alg).unwrap();
    let got = ws.left_module("GroupAlgebraModule").unwrap();
    assert!(got.kappa.entries().eq(expected.kappa.entries()));
}

#[test]
fn every_builtin_entity_passes_its_checker() {
    for (name, doc) in builtin_documents() {
        let ws = Workspace::build(&doc, None, None).unwrap();
        for a in &doc.algebras {
            assert!(check_algebra(&ws.algebra(&a.name).unwrap()).passed(), "{name}/{}", a.name);
        }
        for m in &doc.modules {
            let pair = ws.module(&m.name).unwrap();
            assert!(check_module(pair.right.as_ref().unwrap()).passed(), "{name}/{}", m.name);
            assert!(check_left_module(pair.left.as_ref().unwrap()).passed(), "{name}/{}", m.name);
        }
        for b in &doc.bimodules {
            assert!(check_bimodule(&ws.bimodule(&b.name).unwrap()).passed(), "{name}/{}", b.name);
        }
        for b in &doc.balanced {
            let r = check_balanced(&ws.balanced(&b.name).unwrap());
            assert!(r.passed(), "{name}/{}: {r}", b.name);
        }
    }
}

#[test]
fn catalog_lookup_finds_the_document_defining_every_name() {
    let cat = Catalog::builtin();
    assert_eq!(cat.find(&["VecZ2", "VecModule"]).unwrap().0, "vec_z2");
    assert_eq!(cat.find(&["Column", "Row"]).unwrap().0, "matrices");
    assert_eq!(cat.find(&["regular:Fib"]).unwrap().0, "fibonacci");
    assert!(cat.find(&["Nothing"]).is_none());
}

mod roundtrip {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn printed_documents_parse_back_unchanged(num in -50i64..50, den in 1i64..20, c in 0u32..8, field in 0usize..3) {
            let (spec, value) = match field {
                0 => ("q", format!("{num}/{den}")),
                1 => ("cyclotomic:8", format!("{num}/{den}*z^{c} + 1")),
                _ => ("gf:7", format!("{}", num.rem_euclid(6) + 1)),
            };
            let text = MINIMAL_VEC.replace("\"q\"", &format!("\"{spec}\"")).replace("\"mu_default\": \"1\"", &format!("\"mu_default\": \"{value}\""));
            let doc = Document::parse(&text).unwrap();
            let printed = doc.print();
            let back = Document::parse(&printed).unwrap();
            prop_assert_eq!(&back, &doc);
            prop_assert_eq!(back.print(), printed);
        }
    }
}
