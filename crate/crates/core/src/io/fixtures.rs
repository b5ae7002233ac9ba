//! The named example graphs, compiled in.

use crate::io::format::{parse_graph, GraphDocument};

macro_rules! fixtures {
    ($($name:literal),* $(,)?) => {
        /// `(name, text)` for every fixture.
        pub const FIXTURES: &[(&str, &str)] = &[
            $(($name, include_str!(concat!("../../fixtures/", $name, ".graph")))),*
        ];
    };
}

fixtures!(
    "fig1-g1",
    "fig1-g2",
    "fig2",
    "fig14-g1",
    "fig14-g2",
    "fig222-g1",
    "fig222-g2",
    "fig1777",
    "fig17888-g1",
    "fig17888-g2",
);

pub fn fixture_names() -> impl Iterator<Item = &'static str> {
    FIXTURES.iter().map(|(n, _)| *n)
}

/// Source text of a fixture; names match case-insensitively.
pub fn fixture_text(name: &str) -> Option<&'static str> {
    FIXTURES.iter().find(|(n, _)| n.eq_ignore_ascii_case(name)).map(|(_, t)| *t)
}

/// A parsed fixture. Panics only if a shipped fixture is malformed.
pub fn fixture(name: &str) -> Option<GraphDocument> {
    fixture_text(name).map(|t| parse_graph(t).unwrap_or_else(|e| panic!("fixture {name}: {e}")))
}
