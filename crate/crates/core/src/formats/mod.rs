pub mod curve;
pub mod deployment;
pub mod edge_list;
pub mod report;

pub use curve::{write_csv, write_svg, CSV_HEADER};
pub use deployment::{parse_deployment, write_deployment};
pub use edge_list::{parse_edge_list, write_edge_list};
pub use report::{parse_fraction, parse_machine, render_machine, render_text};
