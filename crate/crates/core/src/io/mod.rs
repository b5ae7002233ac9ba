//! Graph files, fixtures, random generators and reports.

pub mod fixtures;
pub mod format;
pub mod generate;
pub mod report;

pub use fixtures::{fixture, fixture_names, fixture_text};
pub use format::{parse_graph, render_graph, GraphDocument, ParseError, ParseErrorKind};
pub use generate::{generate, GenerateError, GraphKind};
pub use report::{analyze, AnalysisReport, AnalyzeError, AnalyzeOptions};
