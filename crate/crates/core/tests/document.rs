mod support;

use fsc_core::{bundled, Error, GraphDocument, Role};
use proptest::prelude::*;

fn document(spec: support::Spec, labels: Vec<u8>, roles: Vec<Option<u8>>) -> String {
    let g = spec.build();
    let mut text = g
        .vertices()
        .fold(String::from("fsc 1\n"), |mut acc, (n, s)| {
            acc.push_str(&format!("v {n} {s}\n"));
            acc
        });
    for (u, v, m) in g.edges() {
        text.push_str(&format!("e {v} {u} {m}  # reversed on purpose\n"));
    }
    if let Some((a, b)) = support::split(&g, &labels) {
        text.push_str(&format!("s Left {}\n", a.join(" ")));
        text.push_str(&format!("\ns Right {}\n", b.join(" ")));
    }
    let kinds = [Role::Uncontrollable, Role::Indicator, Role::Controllable];
    for ((n, _), r) in g.vertices().zip(roles) {
        if let Some(r) = r {
            text.push_str(&format!("p {n} {}\n", kinds[r as usize]));
        }
    }
    text
}

fn arb_document() -> impl Strategy<Value = String> {
    (
        support::spec(2, 9, 0.4),
        support::labels(),
        prop::collection::vec(prop::option::of(0u8..3), 9),
    )
        .prop_map(|(s, l, r)| document(s, l, r))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn serialize_then_parse_is_identity(text in arb_document()) {
        let doc = GraphDocument::parse(&text).unwrap();
        let canonical = doc.to_fsc();
        let again = GraphDocument::parse(&canonical).unwrap();
        prop_assert_eq!(&again, &doc);
        prop_assert_eq!(again.to_fsc(), canonical);
    }

    #[test]
    fn line_order_of_declarations_is_irrelevant(
        (text, body) in arb_document().prop_flat_map(|t| {
            let lines: Vec<String> = t.lines().skip(1).map(String::from).collect();
            (Just(t), Just(lines).prop_shuffle())
        })
    ) {
        let doc = GraphDocument::parse(&text).unwrap();
        let shuffled = GraphDocument::parse(&format!("fsc 1\n{}\n", body.join("\n"))).unwrap();
        prop_assert_eq!(shuffled.graph, doc.graph);
        prop_assert_eq!(shuffled.roles, doc.roles);
    }

    #[test]
    fn parsing_arbitrary_text_never_panics(text in "(fsc 1\n)?([vesp# ][ a-z0-9.@#-]{0,12}\n){0,12}") {
        let lines = text.lines().count().max(1);
        if let Err(e) = GraphDocument::parse(&text) {
            let line = e.line().expect("document errors carry a line");
            prop_assert!(line >= 1 && line <= lines, "line {} of {}", line, lines);
        }
    }

    #[test]
    fn parsing_arbitrary_bytes_never_panics(bytes in prop::collection::vec(any::<u8>(), 0..200)) {
        let text = String::from_utf8_lossy(&bytes);
        let _ = GraphDocument::parse(&text);
    }
}

#[test]
fn bundled_documents_round_trip() {
    for model in bundled::BundledModel::ALL {
        let doc = model.document();
        assert_eq!(
            GraphDocument::parse(&doc.to_fsc()).unwrap(),
            doc,
            "{}",
            model.name()
        );
    }
}

#[test]
fn errors_point_at_offending_line() {
    let cases: &[(&str, usize)] = &[
        ("fsc 1\nv a\nv b\ne a b 1.2\n", 4),
        ("fsc 1\nv a\nv a\n", 3),
        ("fsc 1\nv a 0.5\nv b\ne a b 0.6\n", 4),
        ("fsc 1\nv a\n\nx a\n", 4),
        ("# lead\nfsc 2\n", 2),
        ("fsc 1\nv a\nv b\ns H a b\n", 4),
        ("fsc 1\nv a\nv b\np c indicator\n", 4),
        ("fsc 1\nv a\nv b\ne a b 0\n", 4),
        ("fsc 1\nv a\ne a a 0.5\n", 3),
        ("fsc 1\n# nothing\n", 1),
    ];
    for &(text, line) in cases {
        let err = GraphDocument::parse(text).unwrap_err();
        assert_eq!(err.line(), Some(line), "{text:?}: {err}");
    }
    let err = GraphDocument::parse("fsc 1\nv a\nv b\ne a b 1.2\n").unwrap_err();
    assert!(matches!(
        err,
        Error::Semantic { source, .. } if matches!(*source, Error::MembershipOutOfRange(_))
    ));
}
