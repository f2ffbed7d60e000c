use std::collections::{BTreeMap, BTreeSet};

use clap::CommandFactory;
use gevrey_cli::{Cli, DISPATCH, MODULE_OPERATIONS};

#[test]
fn every_operation_has_exactly_one_command() {
    let mut owners: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for route in DISPATCH {
        for op in route.operations {
            owners.entry(op).or_default().push(route.command);
        }
    }
    for op in MODULE_OPERATIONS {
        match owners.get(op).map(Vec::as_slice) {
            Some([_]) => {}
            Some(many) => panic!("{op} is reachable from several commands: {many:?}"),
            None => panic!("{op} is not reachable from any command"),
        }
    }
    let known: BTreeSet<&str> = MODULE_OPERATIONS.iter().copied().collect();
    for op in owners.keys() {
        assert!(known.contains(op), "dispatch names unknown operation {op}");
    }
    assert_eq!(
        known.len(),
        MODULE_OPERATIONS.len(),
        "duplicate operation names"
    );
}

#[test]
fn dispatch_table_matches_parser() {
    let table: Vec<&str> = DISPATCH.iter().map(|r| r.command).collect();
    let unique: BTreeSet<&str> = table.iter().copied().collect();
    assert_eq!(
        unique.len(),
        table.len(),
        "duplicate command in dispatch table"
    );
    let parsed: BTreeSet<String> = Cli::command()
        .get_subcommands()
        .map(|c| c.get_name().to_string())
        .collect();
    let table: BTreeSet<String> = unique.iter().map(|s| s.to_string()).collect();
    assert_eq!(parsed, table);
}

#[test]
fn required_commands_present() {
    let required = [
        "bernoulli",
        "f-series",
        "f-aux",
        "polylog",
        "lens-fe",
        "lens-table",
        "sln-check",
        "gevrey",
        "weight",
        "enumerate",
        "lemma-bounds",
        "count-maps",
        "a-seq",
        "map-constants",
        "mu-seq",
        "painleve-check",
        "transseries-check",
        "richardson",
        "stokes",
        "tg-check",
        "verify",
        "cache",
    ];
    for c in required {
        assert!(
            DISPATCH.iter().any(|r| r.command == c),
            "missing command {c}"
        );
    }
}

#[test]
fn parser_definition_is_consistent() {
    Cli::command().debug_assert();
}
