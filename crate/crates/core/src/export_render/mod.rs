//! SVG rendering of spiral geometries and text serialization of claim
//! reports and metric tables (JSON, CSV, aligned text).

mod report_io;
mod svg;
mod table;

pub use report_io::{export_report, parse_report_json, Format};
pub use svg::{render_svg, ColorScheme, RenderOptions};
pub use table::Table;
