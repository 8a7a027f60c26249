//! Node-set documents, report serialization, SVG rendering and text summaries.

mod document;
mod report;
mod svg;
mod text;

pub use document::{parse_nodeset, serialize_nodeset, LoadedSet, NodeSetDocument};
pub use report::serialize_report;
pub use svg::{render_svg, SvgOptions};
pub use text::{analysis_summary, fundpoly_summary, triplets_summary};
