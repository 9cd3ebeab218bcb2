//! Counting multi-scale differentials over boundary points and the degree
//! and intersection numbers built from those counts.

pub mod closed_form;
pub mod config;
pub mod counting;
pub mod intersections;

pub use closed_form::{
    degree_g1_second_kind, degree_g2_one_zero, degree_g2_second_kind_622, degree_g2_second_kind_622_report,
    dim_projection_second_kind, elliptic_count,
};
pub use config::{parse_dataset, BoundaryConfig, CurveKind, Dataset, Prongs, StratumInfo};
pub use counting::{
    config_count, local_degree, prong_classes, shipped_table, table_total, tables, Contribution, CountReport, Factor,
};
pub use intersections::{intersection_with_a, intersection_with_c, ExcludedCase, IntersectionA};
