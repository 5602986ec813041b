use std::path::Path;
use std::process::{Command, Output};

use gradspec_cli::{parse_instance, InstanceSpec, Limits, RingRecipe};
use proptest::prelude::*;

fn gradspec(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gradspec")).args(args).current_dir(dir).output().unwrap()
}

fn scratch(contents: &str) -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("instance.json"), contents).unwrap();
    dir
}

#[test]
fn exit_codes() {
    let ok = scratch(r#"{"ring":{"kind":"gaussian","n":3}}"#);
    assert_eq!(gradspec(&["build", "instance.json"], ok.path()).status.code(), Some(0));
    assert_eq!(gradspec(&["verify", "instance.json", "--suite", "all"], ok.path()).status.code(), Some(0));
    let limited = gradspec(&["--bound", "4", "verify", "instance.json", "--suite", "spectrum"], ok.path());
    assert_eq!(limited.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&limited.stdout).contains("\"resource-limit\""));

    let bad = scratch(r#"{"ring":{"kind":"zmod","n":0}}"#);
    let out = gradspec(&["build", "instance.json"], bad.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("ring.n"));
    assert_eq!(gradspec(&["build", "missing.json"], bad.path()).status.code(), Some(2));
    assert_eq!(gradspec(&["verify", "instance.json", "--suite", "nonsense"], ok.path()).status.code(), Some(2));

    let big = scratch(r#"{"ring":{"kind":"gaussian","n":100}}"#);
    assert_eq!(gradspec(&["build", "instance.json"], big.path()).status.code(), Some(3));
}

#[test]
fn spec_listing_methods_agree() {
    let dir = scratch(r#"{"ring":{"kind":"gaussian","n":10}}"#);
    let def = gradspec(&["spec", "instance.json", "--graded"], dir.path());
    let con = gradspec(&["spec", "instance.json", "--graded", "--method", "constructive"], dir.path());
    assert!(def.status.success() && con.status.success());
    let points = |o: &Output| serde_json::from_slice::<serde_json::Value>(&o.stdout).unwrap()["points"].clone();
    assert_eq!(points(&def), points(&con));
    assert_eq!(points(&def).as_array().unwrap().len(), 2);
    let text = gradspec(&["spec", "instance.json", "--format", "text"], dir.path());
    assert!(text.status.success());
    assert!(!text.stdout.is_empty());
}

fn zmod() -> impl Strategy<Value = RingRecipe> {
    (2u32..7).prop_map(|n| RingRecipe::Zmod { n })
}

fn recipe() -> impl Strategy<Value = RingRecipe> {
    prop_oneof![
        zmod(),
        (zmod(), zmod()).prop_map(|(l, r)| RingRecipe::Product { left: Box::new(l), right: Box::new(r) }),
        (2u32..6).prop_map(|n| RingRecipe::Gaussian { n }),
        (2u32..6).prop_flat_map(|n| (0..n as u16)
            .prop_map(move |alpha| RingRecipe::Quadratic { base: Box::new(RingRecipe::Zmod { n }), alpha })),
        (2u32..6, 1usize..4).prop_map(|(n, k)| RingRecipe::TruncatedPoly { base: Box::new(RingRecipe::Zmod { n }), k }),
        prop_oneof![Just((2u32, 2u32)), Just((4, 2)), Just((6, 3)), Just((4, 4))]
            .prop_map(|(n, m)| RingRecipe::TrivialExtension { n, module: vec![m] }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn instances_round_trip(ring in recipe(), name in proptest::option::of("[a-z]{1,8}"), bound in proptest::option::of(64usize..512)) {
        let spec = InstanceSpec { name, ring, limits: Limits { bound } };
        let back = parse_instance(&spec.to_json()).unwrap();
        prop_assert_eq!(&back, &spec);
        let (a, b) = (spec.build().unwrap(), back.build().unwrap());
        prop_assert_eq!(a.ring().order(), b.ring().order());
        prop_assert_eq!(a.r1(), b.r1());
    }
}
