//! Textual formats through the public API: bit-exact round-trips and
//! parse-error positions across the order, profile, table, and spec files.

use std::sync::Arc;

use twoval_core::decompose::decompose;
use twoval_core::orders::{format_order, parse_order};
use twoval_core::profiles::{format_profile_file, parse_profile_file};
use twoval_core::psi::{format_psi_file, parse_psi_file};
use twoval_core::scf::{format_scf_file, parse_scf_file};
use twoval_core::{Alternative, Error, Profile, ProfileSpace, ScfTable};

fn space(nv: usize, na: usize) -> Arc<ProfileSpace> {
    Arc::new(ProfileSpace::with_default_labels(nv, na).unwrap())
}

#[test]
fn every_three_alternative_order_round_trips() {
    let sp = space(1, 3);
    for order in sp.orders() {
        let text = format_order(order, sp.universe());
        let back = parse_order(&text, sp.universe()).unwrap();
        assert_eq!(&back, order, "{text}");
    }
}

#[test]
fn profile_files_reconstruct_the_space() {
    let sp = space(2, 3);
    for idx in [0, 19, 117, 168] {
        let p = sp.profile(idx);
        let text = format_profile_file(&p, &sp);
        let (parsed_space, parsed) = parse_profile_file(&text).unwrap();
        assert_eq!(parsed_space, *sp);
        assert_eq!(parsed, p);
        assert_eq!(format_profile_file(&parsed, &parsed_space), text);
    }
}

#[test]
fn fixture_table_file_round_trips_bit_exactly() {
    let f = ScfTable::iia_counterexample();
    let text = format_scf_file(&f);
    let parsed = parse_scf_file(&text).unwrap();
    assert_eq!(parsed, f);
    assert_eq!(format_scf_file(&parsed), text);
}

#[test]
fn table_parse_errors_point_at_their_lines() {
    let f = ScfTable::iia_counterexample();
    let text = format_scf_file(&f);

    let bad_value = text.replacen("-> a", "-> q", 1);
    match parse_scf_file(&bad_value) {
        Err(Error::Parse { line, message, .. }) => {
            assert_eq!(line, 3, "{message}");
            assert!(message.contains("unknown value 'q'"), "{message}");
        }
        other => panic!("expected a parse error, got {other:?}"),
    }

    let missing_header = text.replace("society: v0 v1\n", "");
    assert!(matches!(
        parse_scf_file(&missing_header),
        Err(Error::Parse { .. })
    ));
}

#[test]
fn decomposed_spec_survives_the_file_format() {
    let f = ScfTable::iia_counterexample();
    let spec = decompose(&f, Alternative(0), Alternative(1), None).unwrap();
    let text = format_psi_file(&spec);
    let parsed = parse_psi_file(&text).unwrap();
    assert_eq!(format_psi_file(&parsed), text);
    assert_eq!(parsed.to_table().unwrap().values(), f.values());
}

#[test]
fn spec_parse_errors_point_at_their_lines() {
    let f = ScfTable::iia_counterexample();
    let spec = decompose(&f, Alternative(0), Alternative(1), None).unwrap();
    let text = format_psi_file(&spec);

    let renumbered = text.replace("entry 1:", "entry 7:");
    match parse_psi_file(&renumbered) {
        Err(Error::Parse { line, message, .. }) => {
            assert_eq!(line, 7, "{message}");
        }
        other => panic!("expected a parse error, got {other:?}"),
    }

    let wrong_default = text.replace("default: a", "default: c");
    assert!(matches!(
        parse_psi_file(&wrong_default),
        Err(Error::Parse { .. })
    ));
}

#[test]
fn comments_and_blank_lines_are_ignored() {
    let f = ScfTable::iia_counterexample();
    let mut text = String::from("# committee fixture\n\n");
    for line in format_scf_file(&f).lines() {
        text.push_str(line);
        text.push_str("\n\n# next\n");
    }
    assert_eq!(parse_scf_file(&text).unwrap(), f);

    let sp = space(1, 3);
    let p = Profile::new(vec![sp.orders()[4].clone()]).unwrap();
    let commented = format!("# lone voter\n{}", format_profile_file(&p, &sp));
    let (_, parsed) = parse_profile_file(&commented).unwrap();
    assert_eq!(parsed, p);
}
