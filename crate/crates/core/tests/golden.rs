use trvg::families::{
    fixture_text, Fixture, FIG1_K5_JSON, FIG6B_ITRVG_JSON, FIG7A_GPRIME_JSON, K33_BASE_JSON, K34_BASE_JSON,
};
use trvg::io::{parse_graph, parse_layout, serialize_graph, serialize_layout, LayoutDoc};

#[test]
fn layout_fixtures_round_trip_byte_identically() {
    for text in [FIG1_K5_JSON, FIG6B_ITRVG_JSON, FIG7A_GPRIME_JSON, K33_BASE_JSON, K34_BASE_JSON] {
        assert_eq!(LayoutDoc::parse(text).unwrap().to_text(), text);
        let l = parse_layout(text).unwrap();
        assert_eq!(parse_layout(&serialize_layout(&l)).unwrap(), l);
    }
    // Integer-only files are already canonical.
    for text in [FIG1_K5_JSON, K33_BASE_JSON, K34_BASE_JSON] {
        assert_eq!(serialize_layout(&parse_layout(text).unwrap()), text);
    }
}

#[test]
fn graph_fixtures_round_trip() {
    for f in [Fixture::Fig6aG, Fixture::GraphGprime] {
        let text = fixture_text(f);
        assert_eq!(serialize_graph(&parse_graph(&text).unwrap()), text);
    }
}

#[test]
fn fig6b_coordinates_are_kept_verbatim() {
    assert!(FIG6B_ITRVG_JSON.contains(r#""x": ["1.3", "2.3"]"#));
    let l = parse_layout(FIG6B_ITRVG_JSON).unwrap();
    let text = serialize_layout(&l);
    assert!(text.contains(r#""1.3""#));
}
